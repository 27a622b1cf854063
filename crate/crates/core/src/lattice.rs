//! Lattice points of dilations `N·P` and their interiors, Ehrhart counts and
//! δ-vectors, normality and reflexivity checks.
//!
//! Every [`HPolytope`] is `x >= 0` plus 0/1 upper inequalities, so the interior
//! lattice points of `N·P` are exactly the integer `x` with `x_i >= 1` and
//! `Σ_A x_i <= N t - 1` for each upper facet `(A, t)`.

use std::collections::HashMap;

use crate::error::{Error, Limits, Result};
use crate::facets::{HPolytope, RankOracle, MAX_SCAN_DIM};
use crate::{subset_of, ExponentVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Region {
    Full,
    Interior,
}

impl Region {
    fn floor(self) -> i64 {
        match self {
            Region::Full => 0,
            Region::Interior => 1,
        }
    }
}

/// The system of `N·P` (or its interior) compiled for coordinate-wise descent.
///
/// `slack[f]` holds the room left in facet `f` after the fixed prefix, already
/// net of the minimum every later coordinate of `f` must take.
struct Scaled {
    n: usize,
    floor: i64,
    /// Facets containing each coordinate.
    touching: Vec<Vec<usize>>,
    /// Facets whose largest coordinate is at least `k`, per `k`.
    live: Vec<Vec<usize>>,
    initial: Vec<i64>,
}

impl Scaled {
    fn new(p: &HPolytope, level: u64, region: Region) -> Result<Self> {
        let n = p.n();
        let floor = region.floor();
        let mut touching = vec![Vec::new(); n];
        let mut live = vec![Vec::new(); n + 1];
        let mut initial = Vec::with_capacity(p.upper().len());
        for (f, facet) in p.upper().iter().enumerate() {
            let scaled = facet
                .bound
                .checked_mul(level)
                .and_then(|b| i64::try_from(b).ok())
                .ok_or(Error::Overflow("dilated facet bound"))?;
            initial.push(scaled - floor - floor * facet.subset.len() as i64);
            for &i in &facet.subset {
                touching[i - 1].push(f);
            }
            let last = *facet.subset.last().unwrap();
            for slot in live.iter_mut().take(last) {
                slot.push(f);
            }
        }
        Ok(Scaled {
            n,
            floor,
            touching,
            live,
            initial,
        })
    }

    fn feasible(&self) -> bool {
        self.initial.iter().all(|&s| s >= 0)
    }

    fn room(&self, slack: &[i64], k: usize) -> i64 {
        self.touching[k]
            .iter()
            .map(|&f| slack[f])
            .min()
            .unwrap_or(0)
    }

    fn shift(&self, slack: &mut [i64], k: usize, d: i64) {
        for &f in &self.touching[k] {
            slack[f] -= d;
        }
    }
}

struct Budget {
    used: u64,
    cap: u64,
}

impl Budget {
    fn new(limits: &Limits) -> Self {
        Budget {
            used: 0,
            cap: limits.max_lattice_nodes,
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.cap {
            return Err(Error::BudgetExceeded(self.cap));
        }
        Ok(())
    }
}

/// Calls `visit` on every lattice point of `level·P` (or its interior) in
/// lexicographic order until it returns false.
pub fn visit_lattice_points(
    p: &HPolytope,
    level: u32,
    region: Region,
    limits: &Limits,
    visit: &mut dyn FnMut(&[u32]) -> bool,
) -> Result<()> {
    if level == 0 {
        if region == Region::Full {
            visit(&vec![0; p.n()]);
        }
        return Ok(());
    }
    let sys = Scaled::new(p, level as u64, region)?;
    if !sys.feasible() {
        return Ok(());
    }
    let mut slack = sys.initial.clone();
    let mut x = vec![0u32; sys.n];
    let mut budget = Budget::new(limits);
    walk(&sys, 0, &mut slack, &mut x, &mut budget, visit)?;
    Ok(())
}

fn walk(
    sys: &Scaled,
    k: usize,
    slack: &mut [i64],
    x: &mut [u32],
    budget: &mut Budget,
    visit: &mut dyn FnMut(&[u32]) -> bool,
) -> Result<bool> {
    budget.tick()?;
    if k == sys.n {
        return Ok(visit(x));
    }
    let room = sys.room(slack, k);
    for d in 0..=room {
        x[k] = (sys.floor + d) as u32;
        sys.shift(slack, k, d);
        let go = walk(sys, k + 1, slack, x, budget, visit);
        sys.shift(slack, k, -d);
        if !go? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn lattice_points(
    p: &HPolytope,
    level: u32,
    region: Region,
    limits: &Limits,
) -> Result<Vec<ExponentVector>> {
    let mut out = Vec::new();
    visit_lattice_points(p, level, region, limits, &mut |x| {
        out.push(x.to_vec());
        true
    })?;
    Ok(out)
}

/// `|level·P ∩ Z^n|` (or of the interior), by descent memoized on the slack
/// of the facets that are still open.
pub fn count_lattice_points(
    p: &HPolytope,
    level: u32,
    region: Region,
    limits: &Limits,
) -> Result<u128> {
    if level == 0 {
        return Ok(match region {
            Region::Full => 1,
            Region::Interior => 0,
        });
    }
    let sys = Scaled::new(p, level as u64, region)?;
    if !sys.feasible() {
        return Ok(0);
    }
    let mut slack = sys.initial.clone();
    let mut memo = HashMap::new();
    let mut budget = Budget::new(limits);
    count_from(&sys, 0, &mut slack, &mut memo, &mut budget)
}

fn count_from(
    sys: &Scaled,
    k: usize,
    slack: &mut [i64],
    memo: &mut HashMap<(usize, Vec<i64>), u128>,
    budget: &mut Budget,
) -> Result<u128> {
    if k == sys.n {
        return Ok(1);
    }
    let key = (k, sys.live[k].iter().map(|&f| slack[f]).collect::<Vec<_>>());
    if let Some(&c) = memo.get(&key) {
        return Ok(c);
    }
    budget.tick()?;
    let room = sys.room(slack, k);
    let total = if k + 1 == sys.n {
        room as u128 + 1
    } else {
        let mut total: u128 = 0;
        for d in 0..=room {
            sys.shift(slack, k, d);
            let sub = count_from(sys, k + 1, slack, memo, budget);
            sys.shift(slack, k, -d);
            total = total
                .checked_add(sub?)
                .ok_or(Error::Overflow("lattice point count"))?;
        }
        total
    };
    memo.insert(key, total);
    Ok(total)
}

/// Whether `x` lies in `level·P` (or its interior).
pub fn membership(p: &HPolytope, x: &[u32], level: u32, region: Region) -> bool {
    if x.len() != p.n() {
        return false;
    }
    let floor = region.floor();
    if x.iter().any(|&v| (v as i64) < floor) {
        return false;
    }
    p.upper().iter().all(|f| {
        let s: u64 = f.subset.iter().map(|&i| x[i - 1] as u64).sum();
        let cap = f.bound * level as u64;
        match region {
            Region::Full => s <= cap,
            Region::Interior => s < cap,
        }
    })
}

/// Ehrhart counts `i(P, N)` for `N = 0..=n` and the δ-vector they determine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaVector {
    pub n: usize,
    pub counts: Vec<u128>,
    pub delta: Vec<u128>,
}

impl DeltaVector {
    /// `Σ δ_k`, which equals the normalized volume `n!·vol(P)`.
    pub fn sum(&self) -> u128 {
        self.delta.iter().sum()
    }
}

fn binomial(n: u64, k: u64) -> i128 {
    (0..k).fold(1i128, |acc, j| acc * (n - j) as i128 / (j + 1) as i128)
}

pub fn delta_vector(p: &HPolytope, limits: &Limits) -> Result<DeltaVector> {
    let n = p.n();
    let counts = (0..=n as u32)
        .map(|level| count_lattice_points(p, level, Region::Full, limits))
        .collect::<Result<Vec<u128>>>()?;
    let mut delta = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut acc: i128 = 0;
        for j in 0..=k {
            let term = binomial(n as u64 + 1, j as u64)
                .checked_mul(
                    i128::try_from(counts[k - j]).map_err(|_| Error::Overflow("δ-vector"))?,
                )
                .ok_or(Error::Overflow("δ-vector"))?;
            acc = if j % 2 == 0 {
                acc.checked_add(term)
            } else {
                acc.checked_sub(term)
            }
            .ok_or(Error::Overflow("δ-vector"))?;
        }
        if acc < 0 {
            return Err(Error::Invariant(format!("δ_{k} = {acc} is negative")));
        }
        delta.push(acc as u128);
    }
    let interior = count_lattice_points(p, 1, Region::Interior, limits)?;
    if delta[n] != interior {
        return Err(Error::Invariant(format!(
            "δ_n = {} differs from the {} interior lattice points",
            delta[n], interior
        )));
    }
    Ok(DeltaVector { n, counts, delta })
}

/// Weakly increasing up to index `⌊n/2⌋`, weakly decreasing after it.
pub fn is_unimodal(d: &DeltaVector) -> bool {
    let mid = d.n / 2;
    let v = &d.delta;
    v[..=mid].windows(2).all(|w| w[0] <= w[1]) && v[mid..].windows(2).all(|w| w[0] >= w[1])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normality {
    pub normal: bool,
    /// First `(N, a)` found with `a ∈ N·P` not a sum of `N` lattice points of `P`.
    pub counterexample: Option<(u32, ExponentVector)>,
}

/// Checks that lattice points of `N·P` split into `N` lattice points of `P`
/// for `N = 2..=max_level`.
///
/// The polytope is down-closed, so a decomposition of `a` restricts to one of
/// every `b <= a`; only the maximal lattice points of each dilate are tested.
/// When `P` is an integral polymatroid those are the bases of `N·ρ`, which are
/// walked directly instead of filtering all of `N·P`.
pub fn normality_check(p: &HPolytope, max_level: u32, limits: &Limits) -> Result<Normality> {
    if max_level < 2 {
        return Err(Error::InvalidParameters(format!(
            "normality check needs a maximal level of at least 2, got {max_level}"
        )));
    }
    let rank = if p.n() <= MAX_SCAN_DIM {
        match polymatroid_rank(p, limits) {
            Ok(rho) => Some(rho),
            Err(Error::NotPolymatroid(_)) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let mut splitter = Splitter::new(p);
    let mut budget = Budget::new(limits);
    for level in 2..=max_level {
        let mut failure: Option<ExponentVector> = None;
        let mut inner: Result<()> = Ok(());
        let n = p.n();
        let mut check = |a: &[u32], budget: &mut Budget| match splitter.splits(a, level, budget) {
            Ok(true) => true,
            Ok(false) => {
                failure = Some(a.to_vec());
                false
            }
            Err(e) => {
                inner = Err(e);
                false
            }
        };
        match &rank {
            Some(rho) => {
                let f: Vec<i64> = rho.iter().map(|r| r * level as i64).collect();
                let mut walk_budget = Budget::new(limits);
                visit_bases(n, &f, &mut walk_budget, &mut |a| check(a, &mut budget))?;
            }
            None => {
                visit_lattice_points(p, level, Region::Full, limits, &mut |a| {
                    let maximal = (0..n).all(|i| {
                        let mut b = a.to_vec();
                        b[i] += 1;
                        !membership(p, &b, level, Region::Full)
                    });
                    !maximal || check(a, &mut budget)
                })?;
            }
        }
        inner?;
        if let Some(a) = failure {
            return Ok(Normality {
                normal: false,
                counterexample: Some((level, a)),
            });
        }
    }
    Ok(Normality {
        normal: true,
        counterexample: None,
    })
}

struct Splitter<'a> {
    p: &'a HPolytope,
    /// Per coordinate, the tightest upper facet bound containing it.
    cap: Vec<u64>,
    memo: HashMap<(u32, ExponentVector), bool>,
}

impl<'a> Splitter<'a> {
    fn new(p: &'a HPolytope) -> Self {
        let mut cap = vec![u64::MAX; p.n()];
        for f in p.upper() {
            for &i in &f.subset {
                cap[i - 1] = cap[i - 1].min(f.bound);
            }
        }
        Splitter {
            p,
            cap,
            memo: HashMap::new(),
        }
    }

    /// Whether `a ∈ level·P` is a sum of `level` lattice points of `P`.
    fn splits(&mut self, a: &[u32], level: u32, budget: &mut Budget) -> Result<bool> {
        if level == 1 {
            return Ok(membership(self.p, a, 1, Region::Full));
        }
        if !membership(self.p, a, level, Region::Full) {
            return Ok(false);
        }
        if let Some(&known) = self.memo.get(&(level, a.to_vec())) {
            return Ok(known);
        }
        // p must satisfy p(A) <= t and p(A) >= a(A) - (level - 1) t on each facet
        let facets: Vec<(Vec<usize>, i64, i64)> = self
            .p
            .upper()
            .iter()
            .map(|f| {
                let need: i64 = f.subset.iter().map(|&i| a[i - 1] as i64).sum::<i64>()
                    - (level as i64 - 1) * f.bound as i64;
                (
                    f.subset.iter().map(|i| i - 1).collect(),
                    f.bound as i64,
                    need,
                )
            })
            .collect();
        let top: Vec<i64> = (0..a.len())
            .map(|i| (a[i] as u64).min(self.cap[i]) as i64)
            .collect();
        let mut part = vec![0u32; a.len()];
        let found = self.pick(a, level, 0, &facets, &top, &mut part, budget)?;
        self.memo.insert((level, a.to_vec()), found);
        Ok(found)
    }

    #[allow(clippy::too_many_arguments)]
    fn pick(
        &mut self,
        a: &[u32],
        level: u32,
        k: usize,
        facets: &[(Vec<usize>, i64, i64)],
        top: &[i64],
        part: &mut [u32],
        budget: &mut Budget,
    ) -> Result<bool> {
        budget.tick()?;
        for (support, bound, need) in facets {
            let fixed: i64 = support
                .iter()
                .filter(|&&i| i < k)
                .map(|&i| part[i] as i64)
                .sum();
            let open: i64 = support.iter().filter(|&&i| i >= k).map(|&i| top[i]).sum();
            if fixed > *bound || fixed + open < *need {
                return Ok(false);
            }
        }
        if k == a.len() {
            let rest: Vec<u32> = a.iter().zip(part.iter()).map(|(x, y)| x - y).collect();
            return self.splits(&rest, level - 1, budget);
        }
        for v in (0..=top[k]).rev() {
            part[k] = v as u32;
            if self.pick(a, level, k + 1, facets, top, part, budget)? {
                return Ok(true);
            }
        }
        part[k] = 0;
        Ok(false)
    }
}

/// The rank function `ρ(A) = max x(A)` of `P`, indexed by subset mask, when
/// `P` is an integral polymatroid: `ρ` read off the lattice points must be
/// submodular and the facets must already certify it on every subset.
pub fn polymatroid_rank(p: &HPolytope, limits: &Limits) -> Result<Vec<i64>> {
    let n = p.n();
    if n > MAX_SCAN_DIM {
        return Err(Error::DimensionTooLarge {
            n,
            cap: MAX_SCAN_DIM,
        });
    }
    let points = lattice_points(p, 1, Region::Full, limits)?;
    let rank = RankOracle::from_points(n, points.iter().map(|v| v.as_slice()))?;
    if !rank.is_submodular() {
        return Err(Error::NotPolymatroid(
            "rank of the lattice points is not submodular".into(),
        ));
    }
    let size = 1usize << n;
    let rho: Vec<i64> = (0..size).map(|m| rank.rank_mask(m as u32) as i64).collect();
    // cheapest cover of each set by facets bounds max x(A) over P from above
    let masks: Vec<(u32, i64)> = p
        .upper()
        .iter()
        .map(|f| (f.mask(), f.bound as i64))
        .collect();
    let mut cover = vec![i64::MAX; size];
    cover[0] = 0;
    for mask in 1..size {
        let low = mask & mask.wrapping_neg();
        for &(fm, t) in &masks {
            if fm as usize & low != 0 {
                let rest = cover[mask & !(fm as usize)];
                if rest != i64::MAX {
                    cover[mask] = cover[mask].min(rest + t);
                }
            }
        }
    }
    if let Some(mask) = (1..size).find(|&m| cover[m] != rho[m]) {
        return Err(Error::NotPolymatroid(format!(
            "lattice points reach {} on {:?} but the system only certifies {}",
            rho[mask],
            subset_of(mask as u32),
            cover[mask]
        )));
    }
    Ok(rho)
}

/// Visits the bases of the polymatroid with rank table `f` (integer points
/// with `x(A) <= f(A)` for all `A` and `x([n]) = f([n])`) in lexicographic order.
///
/// A prefix `y` on `K` survives only if it still extends to a base, i.e.
/// `y(K \ B) >= f([n]) - f(B ∪ later)` for all `B ⊆ K`, so no branch dies.
fn visit_bases(
    n: usize,
    f: &[i64],
    budget: &mut Budget,
    visit: &mut dyn FnMut(&[u32]) -> bool,
) -> Result<bool> {
    fn go(
        n: usize,
        f: &[i64],
        k: usize,
        y: &mut [u32],
        budget: &mut Budget,
        visit: &mut dyn FnMut(&[u32]) -> bool,
    ) -> Result<bool> {
        budget.tick()?;
        if k == n {
            return Ok(visit(y));
        }
        let full = (1usize << n) - 1;
        let prefix = (1usize << k) - 1;
        let later = full & !((1usize << (k + 1)) - 1);
        let mut sums = vec![0i64; prefix + 1];
        for b in 1..=prefix {
            let low = b.trailing_zeros() as usize;
            sums[b] = sums[b & (b - 1)] + y[low] as i64;
        }
        let mut lo = 0i64;
        let mut hi = i64::MAX;
        for b in 0..=prefix {
            hi = hi.min(f[b | 1 << k] - sums[b]);
            lo = lo.max(f[full] - f[later | b] - sums[prefix & !b]);
        }
        for v in (lo..=hi).rev() {
            y[k] = v as u32;
            if !go(n, f, k + 1, y, budget, visit)? {
                return Ok(false);
            }
        }
        y[k] = 0;
        Ok(true)
    }
    go(n, f, 0, &mut vec![0; n], budget, visit)
}

/// With `p` the unique interior lattice point: every facet sits at lattice
/// distance one from `p`.
pub fn reflexive_up_to_translation(p: &HPolytope, limits: &Limits) -> Result<bool> {
    let interior = lattice_points(p, 1, Region::Interior, limits)?;
    if interior.len() != 1 {
        return Err(Error::NotPseudoGorenstein(interior.len() as u128));
    }
    let centre = &interior[0];
    let lower_ok = centre.iter().all(|&v| v == 1);
    let upper_ok = p.upper().iter().all(|f| {
        let s: u64 = f.subset.iter().map(|&i| centre[i - 1] as u64).sum();
        f.bound == s + 1
    });
    Ok(lower_ok && upper_ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::facets::{veronese_polytope, Facet, VeroneseSpec};

    fn lim() -> Limits {
        Limits::default()
    }

    fn example_p3() -> HPolytope {
        HPolytope::new(
            3,
            vec![
                Facet::new(vec![1], 2),
                Facet::new(vec![2], 3),
                Facet::new(vec![3], 2),
                Facet::new(vec![1, 3], 3),
            ],
        )
        .unwrap()
    }

    fn k34() -> HPolytope {
        let mut f: Vec<_> = (1..=7).map(|i| Facet::new(vec![i], 2)).collect();
        f.push(Facet::new(vec![4, 5, 6, 7], 6));
        HPolytope::new(7, f).unwrap()
    }

    fn q6() -> HPolytope {
        veronese_polytope(&VeroneseSpec::new(6, vec![5, 3, 3, 3]).unwrap())
    }

    #[test]
    fn interior_examples() {
        assert_eq!(
            lattice_points(&k34(), 1, Region::Interior, &lim()).unwrap(),
            vec![vec![1; 7]]
        );
        assert_eq!(
            lattice_points(&q6(), 1, Region::Interior, &lim()).unwrap(),
            vec![
                vec![1, 1, 1, 1],
                vec![1, 1, 1, 2],
                vec![1, 1, 2, 1],
                vec![1, 2, 1, 1],
                vec![2, 1, 1, 1]
            ]
        );
        let seg = HPolytope::cube(1, 1).unwrap();
        assert_eq!(
            lattice_points(&seg, 3, Region::Full, &lim()).unwrap(),
            vec![vec![0], vec![1], vec![2], vec![3]]
        );
    }

    #[test]
    fn count_examples() {
        let cube = HPolytope::cube(4, 2).unwrap();
        assert_eq!(
            count_lattice_points(&cube, 2, Region::Full, &lim()).unwrap(),
            625
        );
        assert_eq!(
            count_lattice_points(&cube, 0, Region::Full, &lim()).unwrap(),
            1
        );
        assert_eq!(
            count_lattice_points(&cube, 0, Region::Interior, &lim()).unwrap(),
            0
        );
        assert_eq!(
            count_lattice_points(&example_p3(), 1, Region::Full, &lim()).unwrap(),
            32
        );
    }

    #[test]
    fn counts_match_listing() {
        for p in [example_p3(), q6(), HPolytope::cube(3, 2).unwrap()] {
            for level in 0..4 {
                for region in [Region::Full, Region::Interior] {
                    let listed = lattice_points(&p, level, region, &lim()).unwrap().len() as u128;
                    assert_eq!(
                        count_lattice_points(&p, level, region, &lim()).unwrap(),
                        listed
                    );
                }
            }
        }
    }

    #[test]
    fn membership_examples() {
        let p = k34();
        assert!(!membership(&p, &[2, 2, 2, 2, 2, 2, 1], 1, Region::Full));
        assert!(membership(&p, &[3, 3, 3, 3, 3, 3, 2], 2, Region::Interior));
        assert!(membership(&p, &[0; 7], 1, Region::Full));
    }

    #[test]
    fn delta_examples() {
        let square = HPolytope::cube(2, 1).unwrap();
        assert_eq!(delta_vector(&square, &lim()).unwrap().delta, vec![1, 1, 0]);
        let cube = HPolytope::cube(4, 2).unwrap();
        let d = delta_vector(&cube, &lim()).unwrap();
        assert_eq!(d.delta, vec![1, 76, 230, 76, 1]);
        assert_eq!(d.sum(), 384);
        let seg = HPolytope::cube(1, 2).unwrap();
        assert_eq!(delta_vector(&seg, &lim()).unwrap().delta, vec![1, 1]);
    }

    #[test]
    fn unimodality_examples() {
        let mk = |delta: Vec<u128>| DeltaVector {
            n: delta.len() - 1,
            counts: vec![],
            delta,
        };
        assert!(is_unimodal(&mk(vec![1, 76, 230, 76, 1])));
        assert!(!is_unimodal(&mk(vec![1, 0, 1])));
        assert!(is_unimodal(&mk(vec![1, 1, 0])));
    }

    #[test]
    fn normality_examples() {
        assert!(normality_check(&example_p3(), 3, &lim()).unwrap().normal);
        assert!(
            normality_check(&HPolytope::cube(3, 2).unwrap(), 2, &lim())
                .unwrap()
                .normal
        );
        assert!(normality_check(&q6(), 2, &lim()).unwrap().normal);
    }

    #[test]
    fn non_integral_system_is_caught() {
        // x_i + x_j <= 1 pairwise: (1,1,1) lies in 2P but P has no point with two ones
        let p = HPolytope::new(
            3,
            vec![
                Facet::new(vec![1, 2], 1),
                Facet::new(vec![1, 3], 1),
                Facet::new(vec![2, 3], 1),
            ],
        )
        .unwrap();
        let verdict = normality_check(&p, 2, &lim()).unwrap();
        assert!(!verdict.normal);
        assert_eq!(verdict.counterexample, Some((2, vec![1, 1, 1])));
    }

    #[test]
    fn reflexive_examples() {
        assert!(!reflexive_up_to_translation(&k34(), &lim()).unwrap());
        let q = veronese_polytope(&VeroneseSpec::new(4, vec![2, 2, 2]).unwrap());
        assert!(reflexive_up_to_translation(&q, &lim()).unwrap());
        assert!(reflexive_up_to_translation(&HPolytope::cube(5, 2).unwrap(), &lim()).unwrap());
        assert_eq!(
            reflexive_up_to_translation(&q6(), &lim()),
            Err(Error::NotPseudoGorenstein(5))
        );
    }

    #[test]
    fn bases_are_the_maximal_points() {
        let k22 = HPolytope::new(
            4,
            vec![
                Facet::new(vec![1, 2], 3),
                Facet::new(vec![3, 4], 3),
                Facet::new(vec![1, 2, 3, 4], 5),
            ],
        )
        .unwrap();
        for p in [example_p3(), q6(), k22] {
            let rho = polymatroid_rank(&p, &lim()).unwrap();
            for level in 1..4u32 {
                let maximal: Vec<ExponentVector> = lattice_points(&p, level, Region::Full, &lim())
                    .unwrap()
                    .into_iter()
                    .filter(|a| {
                        (0..a.len()).all(|i| {
                            let mut b = a.clone();
                            b[i] += 1;
                            !membership(&p, &b, level, Region::Full)
                        })
                    })
                    .collect();
                let f: Vec<i64> = rho.iter().map(|r| r * level as i64).collect();
                let mut walked = Vec::new();
                visit_bases(p.n(), &f, &mut Budget::new(&lim()), &mut |a| {
                    walked.push(a.to_vec());
                    true
                })
                .unwrap();
                walked.sort();
                assert_eq!(walked, maximal, "{p} at N = {level}");
            }
        }
    }
}
