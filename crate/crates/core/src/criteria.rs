//! Closed-form level* and pseudo-Gorenstein* criteria for complete bipartite
//! graphs, Veronese-type polytopes and trees, plus the labeling search that
//! they are validated against.

use crate::error::{Error, Limits, Result};
use crate::facets::{facets, RankOracle, VeroneseSpec};
use crate::graph::{self, BoundVector, Graph};
use crate::lattice::{count_lattice_points, membership, Region};
use crate::powers::enumerate_bases;

/// Largest ground set for the criteria's subset scans.
pub const MAX_CRITERION_BITS: usize = 22;

/// `K_{m,n}` with bounds `c`, labelled so that `[m]` is the heavier side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteSpec {
    m: usize,
    n: usize,
    c: Vec<u32>,
    /// `i ∈ [m]` with `c_i` equal to the light side's total.
    set_a: Vec<usize>,
    set_b: Vec<usize>,
}

/// Outcome of relabelling a complete bipartite bound vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BipartiteShape {
    /// Both sides carry the same total; the polytope is a box.
    Balanced,
    Heavy(BipartiteSpec),
}

impl BipartiteSpec {
    pub fn new(m: usize, n: usize, c: Vec<u32>) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidParameters(format!(
                "both sides need a vertex, got m = {m}, n = {n}"
            )));
        }
        if c.len() != m + n {
            return Err(Error::InvalidParameters(format!(
                "expected {} bounds, got {}",
                m + n,
                c.len()
            )));
        }
        BoundVector::new(c.clone())?;
        let heavy: u64 = c[..m].iter().map(|&x| x as u64).sum();
        let light: u64 = c[m..].iter().map(|&x| x as u64).sum();
        if heavy <= light {
            return Err(Error::HypothesisViolated(format!(
                "side [m] must be strictly heavier: {heavy} <= {light}"
            )));
        }
        if let Some(i) = (0..m).find(|&i| c[i] as u64 > light) {
            return Err(Error::HypothesisViolated(format!(
                "c_{} = {} exceeds the light side total {light}",
                i + 1,
                c[i]
            )));
        }
        let set_a: Vec<usize> = (1..=m).filter(|&i| c[i - 1] as u64 == light).collect();
        let set_b: Vec<usize> = (1..=m).filter(|i| !set_a.contains(i)).collect();
        Ok(BipartiteSpec {
            m,
            n,
            c,
            set_a,
            set_b,
        })
    }

    /// Swaps the sides if needed so that `[m]` is the heavier one.
    pub fn normalize(m: usize, n: usize, c: Vec<u32>) -> Result<BipartiteShape> {
        if c.len() != m + n {
            return Err(Error::InvalidParameters(format!(
                "expected {} bounds, got {}",
                m + n,
                c.len()
            )));
        }
        let left: u64 = c[..m].iter().map(|&x| x as u64).sum();
        let right: u64 = c[m..].iter().map(|&x| x as u64).sum();
        if left == right {
            BoundVector::new(c)?;
            return Ok(BipartiteShape::Balanced);
        }
        if left > right {
            return Ok(BipartiteShape::Heavy(Self::new(m, n, c)?));
        }
        let mut swapped = c[m..].to_vec();
        swapped.extend_from_slice(&c[..m]);
        Ok(BipartiteShape::Heavy(Self::new(n, m, swapped)?))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> &[u32] {
        &self.c
    }

    pub fn set_a(&self) -> &[usize] {
        &self.set_a
    }

    pub fn set_b(&self) -> &[usize] {
        &self.set_b
    }

    pub fn graph(&self) -> Graph {
        graph::complete_bipartite(self.m, self.n).expect("validated side sizes")
    }

    pub fn bound(&self) -> BoundVector {
        BoundVector::new(self.c.clone()).expect("validated bounds")
    }

    fn light_total(&self) -> i64 {
        self.c[self.m..].iter().map(|&x| x as i64).sum()
    }

    fn heavy_total(&self) -> i64 {
        self.c[..self.m].iter().map(|&x| x as i64).sum()
    }
}

/// Which of the two forbidden inequality patterns a subset hits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    First,
    Second,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionVerdict {
    pub level: bool,
    /// First violating subset (1-based) in (size, lexicographic) order.
    pub violation: Option<(Condition, Vec<usize>)>,
}

/// Nonempty subsets of `[k]` as bitmasks, ordered by size, then lexicographically.
fn subsets_in_order(k: usize) -> Result<Vec<u32>> {
    if k > MAX_CRITERION_BITS {
        return Err(Error::DimensionTooLarge {
            n: k,
            cap: MAX_CRITERION_BITS,
        });
    }
    let mut masks: Vec<u32> = (1u32..1 << k).collect();
    masks.sort_by_key(|&m| (m.count_ones(), crate::subset_of(m)));
    Ok(masks)
}

fn subset_sum(c: &[u32], mask: u32) -> i64 {
    (0..c.len())
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| c[i] as i64)
        .sum()
}

/// Interior lattice points exist iff the light side and `B` have bounds at
/// least two and the light side total is at least `m + 1`.
pub fn bipartite_interior_nonempty(spec: &BipartiteSpec) -> bool {
    let small_ok = spec.c[spec.m..].iter().all(|&x| x >= 2);
    let b_ok = spec.set_b.iter().all(|&i| spec.c[i - 1] >= 2);
    small_ok && b_ok && spec.light_total() > spec.m as i64
}

/// Level* criterion for `K_{m,n}` with a strictly heavier side `[m]`.
///
/// Condition (i) ranges over `X ⊆ B`, condition (ii) over `X ⊆ [m]`.
pub fn bipartite_level_criterion(spec: &BipartiteSpec) -> Result<CriterionVerdict> {
    if !bipartite_interior_nonempty(spec) {
        return Err(Error::HypothesisViolated(
            "criterion needs c_i >= 2 on B and the light side, and a light total of at least m + 1"
                .into(),
        ));
    }
    let m = spec.m;
    let light = spec.light_total();
    let heavy = spec.heavy_total();
    let b_mask = crate::mask_of(&spec.set_b);
    let heavy_c = &spec.c[..m];
    for x in subsets_in_order(m)? {
        let size = x.count_ones() as i64;
        let sx = subset_sum(heavy_c, x);
        if x & !b_mask == 0 && light < sx && sx < light - m as i64 + 2 * size - 1 {
            return Ok(CriterionVerdict {
                level: false,
                violation: Some((Condition::First, crate::subset_of(x))),
            });
        }
        if heavy - sx < light && light <= 2 * size + heavy - sx - m as i64 {
            return Ok(CriterionVerdict {
                level: false,
                violation: Some((Condition::Second, crate::subset_of(x))),
            });
        }
    }
    Ok(CriterionVerdict {
        level: true,
        violation: None,
    })
}

/// Level* criterion for `Q#(a; c)`.
pub fn veronese_level_criterion(spec: &VeroneseSpec) -> Result<CriterionVerdict> {
    let n = spec.n();
    let a = spec.a() as i64;
    let c = spec.c();
    let total: i64 = c.iter().map(|&x| x as i64).sum();
    for x in subsets_in_order(n)? {
        let size = x.count_ones() as i64;
        let sx = subset_sum(c, x);
        if a < sx && sx < a - n as i64 + 2 * size - 1 {
            return Ok(CriterionVerdict {
                level: false,
                violation: Some((Condition::First, crate::subset_of(x))),
            });
        }
        if total - sx < a && a <= 2 * size + total - sx - n as i64 {
            return Ok(CriterionVerdict {
                level: false,
                violation: Some((Condition::Second, crate::subset_of(x))),
            });
        }
    }
    Ok(CriterionVerdict {
        level: true,
        violation: None,
    })
}

/// Interval formula for uniform `c`: level* iff `a` avoids
/// `[kc + n - 2k + 2, kc - 1] ∪ [(n - k)c + 1, 2k + (n - k)c - n]` for all
/// `k = 1..=n`, reading reversed intervals as empty.
pub fn veronese_uniform_formula(n: u32, c: u32, a: u32) -> Result<bool> {
    if !(a > c && c >= 2 && a > n && (a as u64) < n as u64 * c as u64) {
        return Err(Error::InvalidVeroneseParameters(format!(
            "uniform formula needs a > c >= 2, a >= n + 1 and a < nc; got n = {n}, c = {c}, a = {a}"
        )));
    }
    let (n, c, a) = (n as i64, c as i64, a as i64);
    let inside = |lo: i64, hi: i64| lo <= a && a <= hi;
    Ok(!(1..=n).any(|k| {
        inside(k * c + n - 2 * k + 2, k * c - 1) || inside((n - k) * c + 1, 2 * k + (n - k) * c - n)
    }))
}

/// A tree is labeling pseudo-Gorenstein* iff no two leaves are at distance two.
pub fn tree_labeling_pseudo_gorenstein(t: &Graph) -> Result<bool> {
    Ok(!graph::leaf_distance_two_exists(t)?)
}

/// `K_{m,n}` is labeling pseudo-Gorenstein* iff, with `m >= n`, `m <= 2n - 1`.
pub fn bipartite_labeling_classification(m: usize, n: usize) -> bool {
    let (big, small) = if m >= n { (m, n) } else { (n, m) };
    small >= 1 && big < 2 * small
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Containment {
    /// `N·conv(D(G, c)) ⊆ conv(D(G, Nc))`.
    pub holds: bool,
    /// The inclusion is proper.
    pub strict: bool,
}

pub fn dilation_containment(
    g: &Graph,
    c: &BoundVector,
    level: u32,
    limits: &Limits,
) -> Result<Containment> {
    if level == 0 {
        return Err(Error::InvalidParameters(
            "dilation factor must be positive".into(),
        ));
    }
    let small = enumerate_bases(g, c, limits)?;
    let big = enumerate_bases(g, &c.scaled(level)?, limits)?;
    let p_small = facets(&small)?;
    let p_big = facets(&big)?;
    let holds = small.bases.iter().all(|a| {
        let scaled: Vec<u32> = a.iter().map(|&x| x * level).collect();
        membership(&p_big, &scaled, 1, Region::Full)
    });
    let big_rank = RankOracle::from_bases(&big)?;
    let strict = p_small
        .upper()
        .iter()
        .any(|f| big_rank.rank(&f.subset) > f.bound * level as u64);
    Ok(Containment { holds, strict })
}

/// Whether `conv(D(G, c))` has exactly one interior lattice point.
pub fn labeling_is_pseudo_gorenstein(g: &Graph, c: &BoundVector, limits: &Limits) -> Result<bool> {
    let b = enumerate_bases(g, c, limits)?;
    let p = facets(&b)?;
    Ok(count_lattice_points(&p, 1, Region::Interior, limits)? == 1)
}

/// First `c ∈ [1, c_max]^n` in lexicographic order making `conv(D(G, c))`
/// pseudo-Gorenstein*.
///
/// Vectors with some `c_i = 1` are skipped: an interior point needs
/// `1 <= x_i < ρ({i}) <= c_i`.
pub fn search_labeling(g: &Graph, c_max: u32, limits: &Limits) -> Result<Option<BoundVector>> {
    search_labeling_from(g, c_max, 2, limits)
}

/// [`search_labeling`] without the `c_i >= 2` shortcut.
pub fn search_labeling_exhaustive(
    g: &Graph,
    c_max: u32,
    limits: &Limits,
) -> Result<Option<BoundVector>> {
    search_labeling_from(g, c_max, 1, limits)
}

fn search_labeling_from(
    g: &Graph,
    c_max: u32,
    start: u32,
    limits: &Limits,
) -> Result<Option<BoundVector>> {
    if c_max == 0 {
        return Err(Error::InvalidParameters("cmax must be positive".into()));
    }
    let n = g.n();
    if start > c_max {
        return Ok(None);
    }
    let span = (c_max - start + 1) as f64;
    if span.powi(n as i32) > limits.max_candidates as f64 {
        return Err(Error::BudgetExceeded(limits.max_candidates));
    }
    let mut c = vec![start; n];
    loop {
        let bound = BoundVector::new(c.clone())?;
        if labeling_is_pseudo_gorenstein(g, &bound, limits)? {
            return Ok(Some(bound));
        }
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            if c[i] < c_max {
                c[i] += 1;
                break;
            }
            c[i] = start;
        }
    }
}
