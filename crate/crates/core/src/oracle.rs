//! Deliberately naive reference implementations.
//!
//! Nothing here calls into the other computational modules; only the input
//! types are shared. Every routine enumerates straight from a definition so
//! that agreement with the fast paths means something.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Limits, Result};
use crate::facets::HPolytope;
use crate::graph::{BoundVector, Graph};
use crate::ExponentVector;

/// Cap on `Π (c_i + 1)` for [`brute_bases`].
pub const BRUTE_BOX_CAP: u64 = 10_000_000;

/// `δ_c` and the bases, by listing every edge-weight vector whose weighted
/// degrees stay below `c`.
pub fn brute_bases(g: &Graph, c: &BoundVector) -> Result<(u32, BTreeSet<ExponentVector>)> {
    let n = g.n();
    let caps = c.as_slice();
    if caps.len() != n {
        return Err(Error::InvalidParameters(
            "bound vector length mismatch".into(),
        ));
    }
    let volume = caps
        .iter()
        .try_fold(1u64, |acc, &x| acc.checked_mul(x as u64 + 1));
    if !volume.is_some_and(|v| v <= BRUTE_BOX_CAP) {
        return Err(Error::BudgetExceeded(BRUTE_BOX_CAP));
    }
    let edges = g.edges().to_vec();
    let mut deg = vec![0u32; n + 1];
    let mut best = 0u32;
    let mut found = BTreeSet::new();
    fn rec(
        k: usize,
        total: u32,
        edges: &[(usize, usize)],
        caps: &[u32],
        deg: &mut Vec<u32>,
        best: &mut u32,
        found: &mut BTreeSet<ExponentVector>,
    ) {
        if k == edges.len() {
            if total > *best {
                *best = total;
                found.clear();
            }
            if total == *best {
                found.insert(deg[1..].to_vec());
            }
            return;
        }
        let (i, j) = edges[k];
        let mut w = 0;
        loop {
            rec(k + 1, total + w, edges, caps, deg, best, found);
            if deg[i] + 1 > caps[i - 1] || deg[j] + 1 > caps[j - 1] {
                break;
            }
            deg[i] += 1;
            deg[j] += 1;
            w += 1;
        }
        deg[i] -= w;
        deg[j] -= w;
    }
    rec(0, 0, &edges, caps, &mut deg, &mut best, &mut found);
    Ok((best, found))
}

fn satisfies(p: &HPolytope, x: &[i64], level: i64, interior: bool) -> bool {
    let lo = if interior { 1 } else { 0 };
    x.iter().all(|&v| v >= lo)
        && p.upper().iter().all(|f| {
            let s: i64 = f.subset.iter().map(|&i| x[i - 1]).sum();
            let cap = level * f.bound as i64;
            if interior {
                s < cap
            } else {
                s <= cap
            }
        })
}

/// Lattice points of `level·P` (or its interior) by scanning the bounding box.
pub fn brute_lattice_points(
    p: &HPolytope,
    level: u32,
    interior: bool,
    limits: &Limits,
) -> Result<Vec<ExponentVector>> {
    let n = p.n();
    let mut top = vec![i64::MAX; n];
    for f in p.upper() {
        for &i in &f.subset {
            top[i - 1] = top[i - 1].min(level as i64 * f.bound as i64);
        }
    }
    let cells = top
        .iter()
        .try_fold(1u64, |acc, &t| acc.checked_mul(t as u64 + 1));
    if !cells.is_some_and(|v| v <= limits.max_lattice_nodes) {
        return Err(Error::BudgetExceeded(limits.max_lattice_nodes));
    }
    let mut out = Vec::new();
    let mut x = vec![0i64; n];
    loop {
        if satisfies(p, &x, level as i64, interior) {
            out.push(x.iter().map(|&v| v as u32).collect());
        }
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if x[i] < top[i] {
                x[i] += 1;
                break;
            }
            x[i] = 0;
        }
    }
}

/// Level* by definition, over the dilations `2..=max_level`.
pub fn brute_level_star(p: &HPolytope, max_level: u32, limits: &Limits) -> Result<bool> {
    let inner = brute_lattice_points(p, 1, true, limits)?;
    if inner.is_empty() {
        return Ok(false);
    }
    for level in 2..=max_level {
        for a in brute_lattice_points(p, level, true, limits)? {
            let splits = inner.iter().any(|a0| {
                let rest: Vec<i64> = a
                    .iter()
                    .zip(a0)
                    .map(|(&x, &y)| x as i64 - y as i64)
                    .collect();
                satisfies(p, &rest, level as i64 - 1, false)
            });
            if !splits {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Reduced degree by trying every interior point of every smaller dilate.
pub fn brute_reduced_degree(p: &HPolytope, a: &[u32], level: u32, limits: &Limits) -> Result<u32> {
    let ai: Vec<i64> = a.iter().map(|&v| v as i64).collect();
    if !satisfies(p, &ai, level as i64, true) {
        return Err(Error::NotAnInteriorPoint);
    }
    for r in 1..level {
        for a0 in brute_lattice_points(p, r, true, limits)? {
            let rest: Vec<i64> = ai.iter().zip(&a0).map(|(&x, &y)| x - y as i64).collect();
            if satisfies(p, &rest, (level - r) as i64, false) {
                return Ok(r);
            }
        }
    }
    Ok(level)
}

/// Reduced degree of every interior point of `N·P`, `N = 1..=max_level`.
pub fn brute_reduced_degree_table(
    p: &HPolytope,
    max_level: u32,
    limits: &Limits,
) -> Result<BTreeMap<(u32, ExponentVector), u32>> {
    let mut out = BTreeMap::new();
    for level in 1..=max_level {
        for a in brute_lattice_points(p, level, true, limits)? {
            let r = brute_reduced_degree(p, &a, level, limits)?;
            out.insert((level, a), r);
        }
    }
    Ok(out)
}

/// Normality by layered sumsets `S_N = S_{N-1} + S_1` compared with `N·P`.
pub fn brute_normality(p: &HPolytope, max_level: u32, limits: &Limits) -> Result<bool> {
    let base: Vec<ExponentVector> = brute_lattice_points(p, 1, false, limits)?;
    let mut layer: BTreeSet<ExponentVector> = base.iter().cloned().collect();
    for level in 2..=max_level {
        let mut next = BTreeSet::new();
        for s in &layer {
            for b in &base {
                next.insert(s.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<u32>>());
            }
        }
        let target: BTreeSet<ExponentVector> = brute_lattice_points(p, level, false, limits)?
            .into_iter()
            .collect();
        if next != target {
            return Ok(false);
        }
        layer = next;
    }
    Ok(true)
}

/// Largest dimension accepted by [`brute_volume`].
pub const MAX_VOLUME_DIM: usize = 4;

/// Normalized volume `n!·vol(P)` in exact arithmetic.
///
/// Uses Lasserre's recursion `n·vol(P) = Σ_i (b_i / |a_ij|) vol(π_j F_i)`,
/// where `F_i` is the facet on the `i`-th hyperplane and `π_j` forgets a
/// coordinate the normal actually involves.
pub fn brute_volume(p: &HPolytope) -> Result<BigRational> {
    let n = p.n();
    if n > MAX_VOLUME_DIM {
        return Err(Error::DimensionTooLarge {
            n,
            cap: MAX_VOLUME_DIM,
        });
    }
    let int = |v: i64| BigRational::from_integer(BigInt::from(v));
    let mut rows: Vec<(Vec<BigRational>, BigRational)> = Vec::new();
    for i in 0..n {
        let mut a = vec![BigRational::zero(); n];
        a[i] = int(-1);
        rows.push((a, BigRational::zero()));
    }
    for f in p.upper() {
        let mut a = vec![BigRational::zero(); n];
        for &i in &f.subset {
            a[i - 1] = BigRational::one();
        }
        rows.push((a, int(f.bound as i64)));
    }
    let vol = lasserre(n, rows);
    let factorial: i64 = (1..=n as i64).product();
    Ok(vol * int(factorial))
}

type Row = (Vec<BigRational>, BigRational);

/// Scales each row so its first nonzero entry is ±1, drops trivial rows and
/// keeps the tightest of parallel ones. `None` means infeasible.
fn tidy(rows: Vec<Row>) -> Option<Vec<Row>> {
    let mut kept: Vec<Row> = Vec::new();
    for (a, b) in rows {
        let Some(lead) = a.iter().find(|x| !x.is_zero()).cloned() else {
            if b.is_negative() {
                return None;
            }
            continue;
        };
        let s = lead.abs();
        let a: Vec<BigRational> = a.iter().map(|x| x / &s).collect();
        let b = b / &s;
        match kept.iter_mut().find(|(k, _)| *k == a) {
            Some(row) => {
                if b < row.1 {
                    row.1 = b;
                }
            }
            None => kept.push((a, b)),
        }
    }
    Some(kept)
}

fn lasserre(dim: usize, rows: Vec<Row>) -> BigRational {
    let Some(rows) = tidy(rows) else {
        return BigRational::zero();
    };
    if dim == 0 {
        return BigRational::one();
    }
    if dim == 1 {
        let mut hi: Option<BigRational> = None;
        let mut lo: Option<BigRational> = None;
        for (a, b) in &rows {
            let v = b / &a[0];
            if a[0].is_positive() {
                hi = Some(hi.map_or(v.clone(), |h| if v < h { v.clone() } else { h }));
            } else {
                lo = Some(lo.map_or(v.clone(), |l| if v > l { v.clone() } else { l }));
            }
        }
        return match (lo, hi) {
            (Some(l), Some(h)) if h > l => h - l,
            (Some(_), Some(_)) => BigRational::zero(),
            _ => panic!("unbounded polytope passed to the volume oracle"),
        };
    }
    let mut total = BigRational::zero();
    for (i, (ai, bi)) in rows.iter().enumerate() {
        if bi.is_zero() {
            continue;
        }
        let j = ai
            .iter()
            .position(|x| !x.is_zero())
            .expect("tidy rows are nonzero");
        // on the hyperplane: x_j = (b_i - Σ_{k≠j} a_ik x_k) / a_ij
        let mut projected = Vec::with_capacity(rows.len());
        for (k, (ak, bk)) in rows.iter().enumerate() {
            if k == i {
                continue;
            }
            let ratio = &ak[j] / &ai[j];
            let a: Vec<BigRational> = (0..dim)
                .filter(|&t| t != j)
                .map(|t| &ak[t] - &ratio * &ai[t])
                .collect();
            projected.push((a, bk - &ratio * bi));
        }
        let face = lasserre(dim - 1, projected);
        total += bi / ai[j].abs() * face;
    }
    total / BigRational::from_integer(BigInt::from(dim as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::facets::Facet;
    use crate::graph::{complete_bipartite, cycle, path};

    #[test]
    fn brute_bases_examples() {
        let (d, b) = brute_bases(
            &cycle(3).unwrap(),
            &BoundVector::new(vec![1, 1, 1]).unwrap(),
        )
        .unwrap();
        assert_eq!((d, b.len()), (1, 3));
        let (d, b) =
            brute_bases(&path(3).unwrap(), &BoundVector::new(vec![2, 3, 2]).unwrap()).unwrap();
        assert_eq!((d, b.len()), (3, 2));
        let (d, b) =
            brute_bases(&path(2).unwrap(), &BoundVector::new(vec![1, 1]).unwrap()).unwrap();
        assert_eq!(d, 1);
        assert_eq!(b.into_iter().collect::<Vec<_>>(), vec![vec![1, 1]]);
        let (d, _) = brute_bases(
            &complete_bipartite(3, 4).unwrap(),
            &BoundVector::uniform(7, 2).unwrap(),
        )
        .unwrap();
        assert_eq!(d, 6);
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

    #[test]
    fn volume_examples() {
        let int = |v: i64| BigRational::from_integer(BigInt::from(v));
        assert_eq!(
            brute_volume(&HPolytope::cube(4, 2).unwrap()).unwrap(),
            int(384)
        );
        assert_eq!(
            brute_volume(&HPolytope::cube(1, 2).unwrap()).unwrap(),
            int(2)
        );
        // box 2×3×2 minus the prism {x_1 + x_3 > 3}: 12 - 3·(1/2) = 21/2, times 3!
        assert_eq!(brute_volume(&example_p3()).unwrap(), int(63));
        let simplex = HPolytope::new(3, vec![Facet::new(vec![1, 2, 3], 1)]).unwrap();
        assert_eq!(brute_volume(&simplex).unwrap(), int(1));
        assert!(brute_volume(&HPolytope::cube(5, 1).unwrap()).is_err());
    }

    #[test]
    fn brute_level_examples() {
        let lim = Limits::default();
        assert!(brute_level_star(&example_p3(), 2, &lim).unwrap());
        let mut f: Vec<_> = (1..=7).map(|i| Facet::new(vec![i], 2)).collect();
        f.push(Facet::new(vec![4, 5, 6, 7], 6));
        let k34 = HPolytope::new(7, f).unwrap();
        assert!(!brute_level_star(&k34, 2, &lim).unwrap());
        let q = HPolytope::new(
            3,
            vec![
                Facet::new(vec![1], 2),
                Facet::new(vec![2], 2),
                Facet::new(vec![3], 2),
                Facet::new(vec![1, 2, 3], 4),
            ],
        )
        .unwrap();
        assert!(brute_level_star(&q, 2, &lim).unwrap());
    }

    #[test]
    fn brute_normality_examples() {
        let lim = Limits::default();
        assert!(brute_normality(&example_p3(), 3, &lim).unwrap());
        let odd = HPolytope::new(
            3,
            vec![
                Facet::new(vec![1, 2], 1),
                Facet::new(vec![1, 3], 1),
                Facet::new(vec![2, 3], 1),
            ],
        )
        .unwrap();
        assert!(!brute_normality(&odd, 2, &lim).unwrap());
    }
}
