//! Pseudo-Gorenstein*, level*, reduced degrees and the int* degree.
//!
//! # Method
//!
//! The polytopes handled here are integral polymatroids `P = P(ρ)`; this is
//! verified on entry. Writing an interior lattice point of `N·P` as `1 + y`,
//! the conditions `x(B) <= Nρ(B) - 1` become `y >= 0`, `y(B) <= h_N(B)` with
//! `h_N(B) = Nρ(B) - |B| - 1`. That function is submodular on intersecting
//! pairs, so its Dilworth truncation (minimum over partitions) followed by a
//! superset minimum gives an integral polymatroid rank `g_N` with
//!
//! ```text
//! int(N·P) ∩ Z^n = 1 + (P(g_N) ∩ Z^n)        whenever h_N >= 0.
//! ```
//!
//! By the integer decomposition theorem for polymatroid sums, `a` splits as an
//! interior point of `r·P` plus a lattice point of `(N-r)·P` exactly when
//! `(a - 1)(A) <= g_r(A) + (N - r)ρ(A)` for all `A`. Whole levels are compared
//! the same way, since `P(f) ⊆ P(f')` iff `f <= f'` for polymatroid ranks.

use std::collections::BTreeMap;

use crate::error::{Error, Limits, Result};
use crate::facets::HPolytope;
use crate::lattice::{self, lattice_points, membership, polymatroid_rank, Region};
use crate::ExponentVector;

/// Largest number of points recorded in a reduced-degree table.
pub const DEFAULT_TABLE_CAP: usize = 20_000;

/// A lattice point of `level·P`'s interior with no degree-one splitting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub level: u32,
    pub point: ExponentVector,
    pub explanation: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelVerdict {
    pub level: bool,
    pub witness: Option<Witness>,
    pub scan_bound: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelnessReport {
    pub interior_count1: u128,
    pub pseudo_gorenstein: bool,
    pub level: bool,
    pub reflexive_up_to_translation: Option<bool>,
    pub int_star_degree: Option<u32>,
    pub failure_witness: Option<Witness>,
    /// Reduced degree of every interior point of the scanned dilates, when
    /// there are at most [`DEFAULT_TABLE_CAP`] of them.
    pub reduced_degree_table: Option<BTreeMap<(u32, ExponentVector), u32>>,
    pub conjecture_spectrum_holds: Option<bool>,
    pub scan_bound_used: u32,
}

/// Rank tables of `P` and of the interiors of its dilates.
pub struct LevelTables {
    n: usize,
    rho: Vec<i64>,
    /// `g[N]` for the levels computed so far; `None` when `int(N·P)` is empty.
    g: Vec<Option<Vec<i64>>>,
}

impl LevelTables {
    pub fn new(p: &HPolytope, limits: &Limits) -> Result<Self> {
        let n = p.n();
        let rho = polymatroid_rank(p, limits)?;
        let size = 1usize << n;
        Ok(LevelTables {
            n,
            rho,
            g: vec![Some(vec![0; size])],
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rho(&self) -> &[i64] {
        &self.rho
    }

    fn ensure(&mut self, level: u32) {
        while self.g.len() <= level as usize {
            let next = self.g.len() as i64;
            let table = self.build(next);
            self.g.push(table);
        }
    }

    fn build(&self, level: i64) -> Option<Vec<i64>> {
        let size = self.rho.len();
        let h: Vec<i64> = (0..size)
            .map(|m| level * self.rho[m] - m.count_ones() as i64 - 1)
            .collect();
        if h[1..].iter().any(|&v| v < 0) {
            return None;
        }
        let mut d = vec![0i64; size];
        for mask in 1..size {
            let low = mask & mask.wrapping_neg();
            let rest = mask ^ low;
            let mut best = i64::MAX;
            let mut sub = rest;
            loop {
                let part = sub | low;
                best = best.min(h[part] + d[mask ^ part]);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
            d[mask] = best;
        }
        for bit in 0..self.n {
            let b = 1 << bit;
            for mask in 0..size {
                if mask & b == 0 {
                    d[mask] = d[mask].min(d[mask | b]);
                }
            }
        }
        Some(d)
    }

    /// Rank of `int(level·P) - 1`, or `None` when that interior is empty.
    pub fn interior_rank(&mut self, level: u32) -> Option<&[i64]> {
        self.ensure(level);
        self.g[level as usize].as_deref()
    }

    pub fn interior_nonempty(&mut self, level: u32) -> bool {
        level >= 1 && self.interior_rank(level).is_some()
    }

    /// Whether interior point `a` of `level·P` splits off an interior point
    /// of `r·P`.
    pub fn splits_at(&mut self, a: &[u32], level: u32, r: u32) -> bool {
        let n = self.n;
        let Some(g) = self.interior_rank(r).map(|g| g.to_vec()) else {
            return false;
        };
        let extra = (level - r) as i64;
        let mut sums = vec![0i64; 1 << n];
        for mask in 1usize..1 << n {
            let low = mask.trailing_zeros() as usize;
            sums[mask] = sums[mask & (mask - 1)] + a[low] as i64 - 1;
            if sums[mask] > g[mask] + extra * self.rho[mask] {
                return false;
            }
        }
        true
    }

    /// Whether some interior point of `level·P` has no splitting at `r`.
    fn level_fails(&mut self, level: u32, r: u32) -> bool {
        let Some(top) = self.interior_rank(level).map(|g| g.to_vec()) else {
            return false;
        };
        let Some(low) = self.interior_rank(r).map(|g| g.to_vec()) else {
            return true;
        };
        let extra = (level - r) as i64;
        (1..top.len()).any(|m| top[m] > low[m] + extra * self.rho[m])
    }

    /// Levels `1..=max_level` whose dilate has interior points of reduced
    /// degree equal to the level itself.
    pub fn generator_levels(&mut self, max_level: u32) -> Vec<u32> {
        let mut out = Vec::new();
        for level in 1..=max_level {
            if !self.interior_nonempty(level) {
                continue;
            }
            if level == 1
                || !self.interior_nonempty(level - 1)
                || self.level_fails(level, level - 1)
            {
                out.push(level);
            }
        }
        out
    }

    pub fn reduced_degree(&mut self, a: &[u32], level: u32) -> u32 {
        (1..level)
            .find(|&r| self.splits_at(a, level, r))
            .unwrap_or(level)
    }

    /// Lexicographically least interior point of `level·P` without a splitting
    /// at 1, given that one exists.
    fn least_failure(&mut self, level: u32) -> Option<ExponentVector> {
        let top = self.interior_rank(level)?.to_vec();
        let base = self.interior_rank(1)?.to_vec();
        let n = self.n;
        let f: Vec<i64> = (0..top.len())
            .map(|m| base[m] + (level as i64 - 1) * self.rho[m])
            .collect();
        let caps: Vec<i64> = (0..n).map(|i| top[1 << i]).collect();
        let mut search = FailureSearch {
            n,
            top: &top,
            f: &f,
            caps: &caps,
            sums: vec![0; 1 << n],
            y: vec![0; n],
        };
        if search.descend(0) {
            Some(search.y.iter().map(|&v| v as u32 + 1).collect())
        } else {
            None
        }
    }
}

struct FailureSearch<'a> {
    n: usize,
    top: &'a [i64],
    f: &'a [i64],
    caps: &'a [i64],
    /// `sums[A]` for `A` inside the fixed prefix.
    sums: Vec<i64>,
    y: Vec<i64>,
}

impl FailureSearch<'_> {
    fn descend(&mut self, k: usize) -> bool {
        let full = (1usize << self.n) - 1;
        let fixed = (1usize << k) - 1;
        if k == self.n {
            return (1..=full).any(|m| self.sums[m] > self.f[m]);
        }
        // can any completion of the prefix exceed f somewhere?
        let mut open_cap = vec![0i64; 1 << self.n];
        let promising = (1..=full).any(|m| {
            let low = m.trailing_zeros() as usize;
            if low >= k {
                open_cap[m] = open_cap[m & (m - 1)] + self.caps[low];
            } else {
                open_cap[m] = open_cap[m & (m - 1)];
            }
            let reach = self.top[m].min(self.sums[m & fixed] + open_cap[m]);
            reach > self.f[m]
        });
        if !promising {
            return false;
        }
        let bit = 1usize << k;
        for v in 0..=self.caps[k] {
            let mut ok = true;
            for m in 0..bit {
                let s = self.sums[m] + v;
                if s > self.top[m | bit] {
                    ok = false;
                    break;
                }
                self.sums[m | bit] = s;
            }
            if !ok {
                break;
            }
            self.y[k] = v;
            if self.descend(k + 1) {
                return true;
            }
        }
        for m in 0..bit {
            self.sums[m | bit] = 0;
        }
        self.y[k] = 0;
        false
    }
}

/// Default dilation bound for the level* scan: `max(2, n - 1)`.
pub fn default_scan_bound(n: usize) -> u32 {
    (n as u32).saturating_sub(1).max(2)
}

/// Default dilation bound for the int* degree: `max(1, n - 1)`.
pub fn default_int_star_bound(n: usize) -> u32 {
    (n as u32).saturating_sub(1).max(1)
}

pub fn interior_count(p: &HPolytope, limits: &Limits) -> Result<u128> {
    lattice::count_lattice_points(p, 1, Region::Interior, limits)
}

pub fn pseudo_gorenstein_star(p: &HPolytope, limits: &Limits) -> Result<bool> {
    Ok(interior_count(p, limits)? == 1)
}

/// Smallest `r` such that `a = a0 + a'` with `a0 ∈ int(r·P)` and
/// `a' ∈ (level - r)·P`.
pub fn reduced_degree(p: &HPolytope, a: &[u32], level: u32, limits: &Limits) -> Result<u32> {
    if level == 0 || !membership(p, a, level, Region::Interior) {
        return Err(Error::NotAnInteriorPoint);
    }
    let mut tables = LevelTables::new(p, limits)?;
    Ok(tables.reduced_degree(a, level))
}

pub fn int_star_degree(p: &HPolytope, max_level: Option<u32>, limits: &Limits) -> Result<u32> {
    let bound = max_level.unwrap_or_else(|| default_int_star_bound(p.n()));
    let mut tables = LevelTables::new(p, limits)?;
    tables
        .generator_levels(bound)
        .last()
        .copied()
        .ok_or(Error::EmptyInterior(bound))
}

/// Whether every degree below the int* degree is realized as a reduced degree.
pub fn conjecture_spectrum(p: &HPolytope, max_level: Option<u32>, limits: &Limits) -> Result<bool> {
    let bound = max_level.unwrap_or_else(|| default_int_star_bound(p.n()));
    let mut tables = LevelTables::new(p, limits)?;
    let levels = tables.generator_levels(bound);
    let d = *levels.last().ok_or(Error::EmptyInterior(bound))?;
    Ok((1..d).all(|i| levels.contains(&i)))
}

pub fn level_star(p: &HPolytope, limits: &Limits) -> Result<LevelVerdict> {
    level_star_with_bound(p, default_scan_bound(p.n()), limits)
}

pub fn level_star_with_bound(
    p: &HPolytope,
    scan_bound: u32,
    limits: &Limits,
) -> Result<LevelVerdict> {
    let mut tables = LevelTables::new(p, limits)?;
    level_star_tables(p, &mut tables, scan_bound, limits)
}

fn level_star_tables(
    p: &HPolytope,
    tables: &mut LevelTables,
    scan_bound: u32,
    limits: &Limits,
) -> Result<LevelVerdict> {
    let verdict = |level, witness| LevelVerdict {
        level,
        witness,
        scan_bound,
    };
    if !tables.interior_nonempty(1) {
        return Ok(verdict(false, None));
    }
    for level in 2..=scan_bound {
        if tables.level_fails(level, 1) {
            let point = tables.least_failure(level).ok_or_else(|| {
                Error::Invariant(format!(
                    "level {level} fails but no failing point was found"
                ))
            })?;
            let explanation = explain(p, &point, level, limits)?;
            return Ok(verdict(
                false,
                Some(Witness {
                    level,
                    point,
                    explanation,
                }),
            ));
        }
    }
    Ok(verdict(true, None))
}

fn show(v: &[u32]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Spells out why `a` has no splitting off a degree-one interior point, for
/// up to four interior points `a0` of `P`.
fn explain(p: &HPolytope, a: &[u32], level: u32, limits: &Limits) -> Result<String> {
    let interior = lattice_points(p, 1, Region::Interior, limits)?;
    let mut lines = Vec::new();
    for a0 in interior.iter().take(4) {
        let why = if a.iter().zip(a0).any(|(x, y)| x < y) {
            format!("a - {} has a negative entry", show(a0))
        } else {
            let rest: Vec<u32> = a.iter().zip(a0).map(|(x, y)| x - y).collect();
            let broken = p.upper().iter().find(|f| {
                let s: u64 = f.subset.iter().map(|&i| rest[i - 1] as u64).sum();
                s > f.bound * (level as u64 - 1)
            });
            match broken {
                Some(f) => {
                    let s: u64 = f.subset.iter().map(|&i| rest[i - 1] as u64).sum();
                    format!(
                        "a - {} = {} is not in {}P: sum over {:?} is {} > {}",
                        show(a0),
                        show(&rest),
                        level - 1,
                        f.subset,
                        s,
                        f.bound * (level as u64 - 1)
                    )
                }
                None => format!(
                    "a - {} = {} unexpectedly lies in {}P",
                    show(a0),
                    show(&rest),
                    level - 1
                ),
            }
        };
        lines.push(why);
    }
    if interior.len() > 4 {
        lines.push(format!(
            "and {} further interior points",
            interior.len() - 4
        ));
    }
    Ok(lines.join("; "))
}

/// Reduced degree of every interior lattice point of `N·P`, `N = 1..=max_level`,
/// or `None` when more than `cap` points would be listed.
pub fn reduced_degree_table(
    p: &HPolytope,
    tables: &mut LevelTables,
    max_level: u32,
    cap: usize,
    limits: &Limits,
) -> Result<Option<BTreeMap<(u32, ExponentVector), u32>>> {
    let mut table = BTreeMap::new();
    for level in 1..=max_level {
        let count = lattice::count_lattice_points(p, level, Region::Interior, limits)?;
        if table.len() as u128 + count > cap as u128 {
            return Ok(None);
        }
        for a in lattice_points(p, level, Region::Interior, limits)? {
            let r = tables.reduced_degree(&a, level);
            table.insert((level, a), r);
        }
    }
    Ok(Some(table))
}

/// Every levelness verdict for `P` in one pass.
pub fn levelness_report(
    p: &HPolytope,
    scan_bound: Option<u32>,
    limits: &Limits,
) -> Result<LevelnessReport> {
    let n = p.n();
    let scan = scan_bound.unwrap_or_else(|| default_scan_bound(n));
    let int_bound = scan_bound.unwrap_or_else(|| default_int_star_bound(n));
    let mut tables = LevelTables::new(p, limits)?;
    let interior_count1 = interior_count(p, limits)?;
    let pseudo_gorenstein = interior_count1 == 1;
    let verdict = level_star_tables(p, &mut tables, scan, limits)?;
    let reflexive = if pseudo_gorenstein {
        Some(lattice::reflexive_up_to_translation(p, limits)?)
    } else {
        None
    };
    let levels = tables.generator_levels(int_bound);
    let int_star = levels.last().copied();
    let spectrum = int_star.map(|d| (1..d).all(|i| levels.contains(&i)));
    let table = reduced_degree_table(p, &mut tables, int_bound, DEFAULT_TABLE_CAP, limits)?;
    Ok(LevelnessReport {
        interior_count1,
        pseudo_gorenstein,
        level: verdict.level,
        reflexive_up_to_translation: reflexive,
        int_star_degree: int_star,
        failure_witness: verdict.witness,
        reduced_degree_table: table,
        conjecture_spectrum_holds: spectrum,
        scan_bound_used: scan,
    })
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

    fn ver(a: u32, c: &[u32]) -> HPolytope {
        veronese_polytope(&VeroneseSpec::new(a, c.to_vec()).unwrap())
    }

    #[test]
    fn pseudo_gorenstein_examples() {
        assert!(pseudo_gorenstein_star(&k34(), &lim()).unwrap());
        assert!(!pseudo_gorenstein_star(&ver(6, &[5, 3, 3, 3]), &lim()).unwrap());
        let triangle = HPolytope::new(
            3,
            vec![
                Facet::new(vec![1], 1),
                Facet::new(vec![2], 1),
                Facet::new(vec![3], 1),
                Facet::new(vec![1, 2, 3], 2),
            ],
        )
        .unwrap();
        assert!(!pseudo_gorenstein_star(&triangle, &lim()).unwrap());
    }

    #[test]
    fn reduced_degree_examples() {
        let q = ver(6, &[5, 3, 3, 3]);
        assert_eq!(reduced_degree(&q, &[8, 1, 1, 1], 2, &lim()).unwrap(), 2);
        assert_eq!(reduced_degree(&q, &[14, 1, 1, 1], 3, &lim()).unwrap(), 3);
        assert_eq!(reduced_degree(&q, &[2, 1, 1, 1], 1, &lim()).unwrap(), 1);
        assert_eq!(
            reduced_degree(&q, &[0, 1, 1, 1], 2, &lim()),
            Err(Error::NotAnInteriorPoint)
        );
    }

    #[test]
    fn int_star_examples() {
        assert_eq!(
            int_star_degree(&ver(6, &[5, 3, 3, 3]), None, &lim()).unwrap(),
            3
        );
        assert_eq!(
            int_star_degree(&ver(5, &[4, 2, 2, 2]), None, &lim()).unwrap(),
            3
        );
        assert_eq!(int_star_degree(&example_p3(), None, &lim()).unwrap(), 1);
    }

    #[test]
    fn level_examples() {
        let v = level_star(&example_p3(), &lim()).unwrap();
        assert!(v.level && v.witness.is_none());
        let v = level_star(&k34(), &lim()).unwrap();
        assert!(!v.level);
        let w = v.witness.unwrap();
        assert_eq!(w.level, 2);
        assert_eq!(w.point, vec![1, 1, 1, 2, 3, 3, 3]);
        assert!(level_star(&ver(4, &[2, 2, 2]), &lim()).unwrap().level);
    }

    #[test]
    fn spectrum_examples() {
        assert!(conjecture_spectrum(&ver(5, &[4, 2, 2, 2]), None, &lim()).unwrap());
        assert!(conjecture_spectrum(&example_p3(), None, &lim()).unwrap());
        assert!(conjecture_spectrum(&ver(6, &[5, 3, 3, 3]), None, &lim()).unwrap());
    }

    #[test]
    fn non_polymatroid_is_rejected() {
        let p = HPolytope::new(
            3,
            vec![
                Facet::new(vec![1, 2], 1),
                Facet::new(vec![1, 3], 1),
                Facet::new(vec![2, 3], 1),
            ],
        )
        .unwrap();
        assert!(matches!(
            level_star(&p, &lim()),
            Err(Error::NotPolymatroid(_))
        ));
    }

    #[test]
    fn report_is_consistent() {
        let r = levelness_report(&ver(6, &[5, 3, 3, 3]), None, &lim()).unwrap();
        assert_eq!(r.interior_count1, 5);
        assert!(!r.pseudo_gorenstein && !r.level);
        assert_eq!(r.int_star_degree, Some(3));
        assert_eq!(r.reflexive_up_to_translation, None);
        let table = r.reduced_degree_table.unwrap();
        assert_eq!(table.values().copied().max(), Some(3));
        assert_eq!(table[&(2, vec![8, 1, 1, 1])], 2);
        assert_eq!(table[&(3, vec![14, 1, 1, 1])], 3);
    }
}
