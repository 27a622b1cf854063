//! Rank function of a discrete polymatroid, its closed and inseparable sets,
//! and the resulting irredundant inequality system.

use crate::error::{Error, Limits, Result};
use crate::graph::{self, BoundVector};
use crate::powers::{enumerate_bases, BasisSet};
use crate::{mask_of, subset_of};

/// Largest ground set handled by the `2^n` subset scans.
pub const MAX_SCAN_DIM: usize = 16;

/// `Σ_{i ∈ subset} x_i <= bound`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    /// 1-based, strictly increasing.
    pub subset: Vec<usize>,
    pub bound: u64,
}

impl Facet {
    pub fn new(subset: Vec<usize>, bound: u64) -> Self {
        Facet { subset, bound }
    }

    pub(crate) fn mask(&self) -> u32 {
        mask_of(&self.subset)
    }
}

/// `{x >= 0 : Σ_{i ∈ A} x_i <= t for every upper facet (A, t)}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HPolytope {
    n: usize,
    upper: Vec<Facet>,
}

impl HPolytope {
    pub fn new(n: usize, upper: Vec<Facet>) -> Result<Self> {
        if n == 0 || n > 31 {
            return Err(Error::InvalidParameters(format!(
                "dimension {n} out of range 1..=31"
            )));
        }
        let mut covered = vec![false; n + 1];
        for f in &upper {
            if f.subset.is_empty() {
                return Err(Error::InvalidParameters("facet with empty support".into()));
            }
            if f.subset.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidParameters(format!(
                    "facet support {:?} is not strictly increasing",
                    f.subset
                )));
            }
            if f.subset[0] < 1 || *f.subset.last().unwrap() > n {
                return Err(Error::InvalidParameters(format!(
                    "facet support {:?} leaves 1..={n}",
                    f.subset
                )));
            }
            if f.bound == 0 {
                return Err(Error::InvalidParameters(format!(
                    "facet {:?} has bound 0, polytope would not be full-dimensional",
                    f.subset
                )));
            }
            for &i in &f.subset {
                covered[i] = true;
            }
        }
        if let Some(i) = (1..=n).find(|&i| !covered[i]) {
            return Err(Error::InvalidParameters(format!(
                "coordinate {i} has no upper bound, polytope is unbounded"
            )));
        }
        Ok(HPolytope { n, upper })
    }

    /// The box `[0, c_1] × ... × [0, c_n]`.
    pub fn boxed(c: &[u64]) -> Result<Self> {
        Self::new(
            c.len(),
            c.iter()
                .enumerate()
                .map(|(i, &ci)| Facet::new(vec![i + 1], ci))
                .collect(),
        )
    }

    pub fn cube(n: usize, side: u64) -> Result<Self> {
        Self::boxed(&vec![side; n])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn upper(&self) -> &[Facet] {
        &self.upper
    }

    /// The same system with facets sorted by (size, lexicographic).
    pub fn canonical(&self) -> HPolytope {
        let mut upper = self.upper.clone();
        upper.sort_by(|a, b| (a.subset.len(), &a.subset).cmp(&(b.subset.len(), &b.subset)));
        upper.dedup();
        HPolytope { n: self.n, upper }
    }
}

impl std::fmt::Display for HPolytope {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (k, facet) in self.upper.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            let lhs: Vec<String> = facet.subset.iter().map(|i| format!("x{i}")).collect();
            write!(f, "{} <= {}", lhs.join("+"), facet.bound)?;
        }
        Ok(())
    }
}

/// Memoized rank function `ρ(X) = max_{a ∈ bases} Σ_{i ∈ X} a_i` over bitmasks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankOracle {
    n: usize,
    table: Vec<u64>,
}

impl RankOracle {
    pub fn from_bases(b: &BasisSet) -> Result<Self> {
        Self::from_points(b.n, b.bases.iter().map(|a| a.as_slice()))
    }

    /// Rank of the down-closure of `points`.
    pub fn from_points<'a>(n: usize, points: impl IntoIterator<Item = &'a [u32]>) -> Result<Self> {
        if n > MAX_SCAN_DIM {
            return Err(Error::DimensionTooLarge {
                n,
                cap: MAX_SCAN_DIM,
            });
        }
        let size = 1usize << n;
        let mut table = vec![0u64; size];
        let mut sums = vec![0u64; size];
        for a in points {
            for mask in 1..size {
                let low = mask.trailing_zeros() as usize;
                sums[mask] = sums[mask & (mask - 1)] + a[low] as u64;
                table[mask] = table[mask].max(sums[mask]);
            }
        }
        Ok(RankOracle { n, table })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank_mask(&self, mask: u32) -> u64 {
        self.table[mask as usize]
    }

    /// Rank of a 1-based subset.
    pub fn rank(&self, subset: &[usize]) -> u64 {
        self.rank_mask(mask_of(subset))
    }

    /// Rank strictly increases on adding any single outside element.
    pub fn is_closed_mask(&self, mask: u32) -> bool {
        let r = self.rank_mask(mask);
        (0..self.n)
            .filter(|j| mask >> j & 1 == 0)
            .all(|j| self.rank_mask(mask | 1 << j) > r)
    }

    pub fn is_closed(&self, subset: &[usize]) -> bool {
        self.is_closed_mask(mask_of(subset))
    }

    /// No bipartition into two nonempty parts is rank-additive.
    pub fn is_inseparable_mask(&self, mask: u32) -> bool {
        let r = self.rank_mask(mask);
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        // parts containing the lowest element, excluding the whole set
        let mut sub = rest;
        loop {
            let part = sub | low;
            if part != mask && self.rank_mask(part) + self.rank_mask(mask ^ part) == r {
                return false;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        true
    }

    pub fn is_inseparable(&self, subset: &[usize]) -> bool {
        self.is_inseparable_mask(mask_of(subset))
    }

    pub fn is_monotone(&self) -> bool {
        (1..self.table.len()).all(|m| {
            (0..self.n)
                .filter(|j| m >> j & 1 == 1)
                .all(|j| self.table[m ^ 1 << j] <= self.table[m])
        })
    }

    /// Checked through the local form `ρ(S+i) + ρ(S+j) >= ρ(S+i+j) + ρ(S)`.
    pub fn is_submodular(&self) -> bool {
        let size = self.table.len();
        (0..size).all(|s| {
            (0..self.n).filter(|i| s >> i & 1 == 0).all(|i| {
                (i + 1..self.n).filter(|j| s >> j & 1 == 0).all(|j| {
                    let (si, sj) = (s | 1 << i, s | 1 << j);
                    self.table[si] + self.table[sj] >= self.table[si | sj] + self.table[s]
                })
            })
        })
    }
}

/// Closed and inseparable sets with their ranks, scanned in (size, lex) order.
pub fn facets(b: &BasisSet) -> Result<HPolytope> {
    let rank = RankOracle::from_bases(b)?;
    facets_from_rank(&rank)
}

pub fn facets_from_rank(rank: &RankOracle) -> Result<HPolytope> {
    let n = rank.n();
    let mut upper = Vec::new();
    for mask in 1u32..1 << n {
        if rank.is_closed_mask(mask) && rank.is_inseparable_mask(mask) {
            upper.push(Facet::new(subset_of(mask), rank.rank_mask(mask)));
        }
    }
    Ok(HPolytope::new(n, upper)?.canonical())
}

/// Parameters `(a; c)` of the Veronese-type polytope `0 <= x_i <= c_i`, `Σ x_i <= a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VeroneseSpec {
    a: u32,
    c: Vec<u32>,
}

impl VeroneseSpec {
    pub fn new(a: u32, c: Vec<u32>) -> Result<Self> {
        let n = c.len();
        let bad = |msg: String| Err(Error::InvalidVeroneseParameters(msg));
        if n == 0 {
            return bad("empty bound vector".into());
        }
        if c.windows(2).any(|w| w[0] < w[1]) {
            return bad(format!("bounds {c:?} are not non-increasing"));
        }
        if c[n - 1] < 2 {
            return bad(format!("smallest bound {} is below 2", c[n - 1]));
        }
        if a <= c[0] {
            return bad(format!("a = {a} must exceed c_1 = {}", c[0]));
        }
        if (a as usize) < n + 1 {
            return bad(format!("a = {a} is below n + 1 = {}", n + 1));
        }
        let total: u64 = c.iter().map(|&x| x as u64).sum();
        if a as u64 >= total {
            return bad(format!("a = {a} is not below Σ c_i = {total}"));
        }
        Ok(VeroneseSpec { a, c })
    }

    pub fn n(&self) -> usize {
        self.c.len()
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn c(&self) -> &[u32] {
        &self.c
    }
}

pub fn veronese_polytope(spec: &VeroneseSpec) -> HPolytope {
    let n = spec.n();
    let mut upper: Vec<Facet> = spec
        .c
        .iter()
        .enumerate()
        .map(|(i, &ci)| Facet::new(vec![i + 1], ci as u64))
        .collect();
    upper.push(Facet::new((1..=n).collect(), spec.a as u64));
    HPolytope::new(n, upper).expect("validated Veronese parameters give a valid system")
}

/// `conv(D(K_{1,n}, (a, c_1, ..., c_n)))`, built through base enumeration.
pub fn star_prism(spec: &VeroneseSpec, limits: &Limits) -> Result<HPolytope> {
    let g = graph::star(spec.n())?;
    let mut bound = vec![spec.a];
    bound.extend_from_slice(&spec.c);
    let b = enumerate_bases(&g, &BoundVector::new(bound)?, limits)?;
    facets(&b)
}

/// `{0 <= x_1 <= a} × Q#(a; c)` written out directly.
pub fn prism_over_veronese(spec: &VeroneseSpec) -> HPolytope {
    let q = veronese_polytope(spec);
    let mut upper = vec![Facet::new(vec![1], spec.a as u64)];
    upper.extend(
        q.upper()
            .iter()
            .map(|f| Facet::new(f.subset.iter().map(|i| i + 1).collect(), f.bound)),
    );
    HPolytope::new(spec.n() + 1, upper)
        .expect("lifted Veronese system is valid")
        .canonical()
}
