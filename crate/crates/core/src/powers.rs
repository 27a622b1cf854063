//! The top bounded power `(I(G)^δ)_c` of an edge ideal: its degree `δ_c` and the
//! exponent vectors of its minimal generators.
//!
//! A monomial of `I(G)^q` is a product of `q` edges, i.e. nonnegative edge
//! weights `w` with `Σ w_e = q`; its exponent vector is the weighted degree
//! vector. Bounding exponents by `c` turns `δ_c` into a capacitated b-matching
//! value with unlimited edge multiplicity.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Limits, Result};
use crate::graph::{BoundVector, Graph};
use crate::ExponentVector;

/// Bases of the discrete polymatroid `D(G, c)` together with `δ_c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisSet {
    pub n: usize,
    pub delta_c: u32,
    /// Lexicographically sorted, each summing to `2 * delta_c`.
    pub bases: Vec<ExponentVector>,
}

/// Maximum total edge weight `Σ w_e` subject to `Σ_{e ∋ i} w_e <= c_i`.
///
/// Bipartite graphs go through a max-flow computation, everything else through
/// branch and bound; the two agree wherever both apply.
pub fn delta_c(g: &Graph, c: &BoundVector) -> Result<u32> {
    c.check_len(g.n())?;
    match g.bipartition() {
        Some(side) => Ok(bipartite_flow_value(g, c, &side)),
        None => Ok(delta_c_branch_and_bound(g, c)),
    }
}

/// Exact `δ_c` by branch and bound over edge multiplicities.
pub fn delta_c_branch_and_bound(g: &Graph, c: &BoundVector) -> u32 {
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(i, j)| (i - 1, j - 1)).collect();
    let mut search = Bnb {
        edges: &edges,
        n: g.n(),
        best: 0,
        ceiling: 0,
    };
    let mut r: Vec<u32> = c.as_slice().to_vec();
    search.ceiling = search.bound(&r, 0);
    search.run(&mut r, 0, 0);
    search.best
}

struct Bnb<'a> {
    edges: &'a [(usize, usize)],
    n: usize,
    best: u32,
    ceiling: u32,
}

impl Bnb<'_> {
    /// Upper bound on the weight still placeable on edges `k..`.
    fn bound(&self, r: &[u32], k: usize) -> u32 {
        let mut reach = vec![0u64; self.n];
        for &(u, v) in &self.edges[k..] {
            reach[u] += r[v] as u64;
            reach[v] += r[u] as u64;
        }
        let total: u64 = (0..self.n).map(|v| reach[v].min(r[v] as u64)).sum();
        (total / 2) as u32
    }

    fn run(&mut self, r: &mut [u32], k: usize, placed: u32) {
        if placed > self.best {
            self.best = placed;
        }
        if self.best == self.ceiling || k == self.edges.len() {
            return;
        }
        if placed + self.bound(r, k) <= self.best {
            return;
        }
        let (u, v) = self.edges[k];
        let top = r[u].min(r[v]);
        for w in (0..=top).rev() {
            r[u] -= w;
            r[v] -= w;
            self.run(r, k + 1, placed + w);
            r[u] += w;
            r[v] += w;
            if self.best == self.ceiling {
                return;
            }
        }
    }
}

/// Max flow source -> side A (cap c) -> side B (unbounded) -> sink (cap c).
fn bipartite_flow_value(g: &Graph, c: &BoundVector, side: &[bool]) -> u32 {
    let n = g.n();
    let (s, t) = (0, n + 1);
    let mut cap = vec![vec![0u64; n + 2]; n + 2];
    let big: u64 = c.as_slice().iter().map(|&x| x as u64).sum::<u64>() + 1;
    for v in 1..=n {
        if side[v] {
            cap[v][t] = c[v - 1] as u64;
        } else {
            cap[s][v] = c[v - 1] as u64;
        }
    }
    for &(i, j) in g.edges() {
        let (a, b) = if side[i] { (j, i) } else { (i, j) };
        cap[a][b] = big;
    }
    let mut flow = 0u64;
    loop {
        let mut prev = vec![usize::MAX; n + 2];
        prev[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for y in 0..n + 2 {
                if prev[y] == usize::MAX && cap[x][y] > 0 {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[t] == usize::MAX {
            break;
        }
        let mut push = u64::MAX;
        let mut y = t;
        while y != s {
            push = push.min(cap[prev[y]][y]);
            y = prev[y];
        }
        let mut y = t;
        while y != s {
            cap[prev[y]][y] -= push;
            cap[y][prev[y]] += push;
            y = prev[y];
        }
        flow += push;
    }
    flow as u32
}

/// Finds edge weights `w` (in the order of `g.edges()`) whose weighted degrees
/// are exactly `a`, or `None` if there are none.
pub fn realize_degree_sequence(g: &Graph, a: &[u32], q: u32) -> Result<Option<Vec<u32>>> {
    if a.len() != g.n() {
        return Err(Error::InvalidParameters(format!(
            "exponent vector has length {}, graph has {} vertices",
            a.len(),
            g.n()
        )));
    }
    let sum: u64 = a.iter().map(|&x| x as u64).sum();
    if sum != 2 * q as u64 {
        return Err(Error::DegreeSumMismatch { sum, q: q as u64 });
    }
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(i, j)| (i - 1, j - 1)).collect();
    let mut incident = vec![Vec::new(); g.n()];
    for (e, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(e);
        incident[v].push(e);
    }
    let state = Realizer {
        r: a.to_vec(),
        decided: vec![false; edges.len()],
        w: vec![0; edges.len()],
    };
    Ok(state.solve(&edges, &incident))
}

#[derive(Clone)]
struct Realizer {
    r: Vec<u32>,
    decided: Vec<bool>,
    w: Vec<u32>,
}

impl Realizer {
    fn other(edges: &[(usize, usize)], e: usize, v: usize) -> usize {
        let (a, b) = edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    fn active(&self, edges: &[(usize, usize)], incident: &[Vec<usize>], v: usize) -> Vec<usize> {
        incident[v]
            .iter()
            .copied()
            .filter(|&e| !self.decided[e] && self.r[Self::other(edges, e, v)] > 0)
            .collect()
    }

    fn assign(&mut self, edges: &[(usize, usize)], e: usize, weight: u32) {
        let (u, v) = edges[e];
        self.decided[e] = true;
        self.w[e] = weight;
        self.r[u] -= weight;
        self.r[v] -= weight;
    }

    /// Each component of the remaining demand graph must have an even total,
    /// and equal side totals when it is bipartite.
    fn components_balanced(&self, edges: &[(usize, usize)], incident: &[Vec<usize>]) -> bool {
        let n = self.r.len();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if self.r[start] == 0 || colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut stack = vec![start];
            let (mut sides, mut bipartite) = ([0u64; 2], true);
            while let Some(v) = stack.pop() {
                let cv = colour[v].unwrap();
                sides[cv as usize] += self.r[v] as u64;
                for e in self.active(edges, incident, v) {
                    let u = Self::other(edges, e, v);
                    match colour[u] {
                        None => {
                            colour[u] = Some(!cv);
                            stack.push(u);
                        }
                        Some(cu) if cu == cv => bipartite = false,
                        _ => {}
                    }
                }
            }
            if bipartite && sides[0] != sides[1] || (sides[0] + sides[1]) % 2 == 1 {
                return false;
            }
        }
        true
    }

    fn solve(mut self, edges: &[(usize, usize)], incident: &[Vec<usize>]) -> Option<Vec<u32>> {
        // peel vertices whose demand has a single possible outlet
        loop {
            let mut changed = false;
            for v in 0..self.r.len() {
                if self.r[v] == 0 {
                    continue;
                }
                let act = self.active(edges, incident, v);
                let reach: u64 = act
                    .iter()
                    .map(|&e| self.r[Self::other(edges, e, v)] as u64)
                    .sum();
                if (self.r[v] as u64) > reach {
                    return None;
                }
                if act.len() == 1 {
                    let u = Self::other(edges, act[0], v);
                    if self.r[u] < self.r[v] {
                        return None;
                    }
                    let need = self.r[v];
                    self.assign(edges, act[0], need);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if !self.components_balanced(edges, incident) {
            return None;
        }
        let open: Vec<(usize, usize)> = (0..self.r.len())
            .filter(|&v| self.r[v] > 0)
            .map(|v| (self.active(edges, incident, v).len(), v))
            .collect();
        let Some(&(_, v)) = open.iter().min() else {
            return Some(self.w);
        };
        let e = self.active(edges, incident, v)[0];
        let u = Self::other(edges, e, v);
        for weight in (0..=self.r[v].min(self.r[u])).rev() {
            let mut next = self.clone();
            next.assign(edges, e, weight);
            if let Some(w) = next.solve(edges, incident) {
                return Some(w);
            }
        }
        None
    }
}

/// All `a <= c` with `Σ a = 2 δ_c` that are weighted degree vectors of `G`.
pub fn enumerate_bases(g: &Graph, c: &BoundVector, limits: &Limits) -> Result<BasisSet> {
    let delta = delta_c(g, c)?;
    let n = g.n();
    let caps = c.as_slice();
    let mut suffix = vec![0u64; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] + caps[i] as u64;
    }
    let mut bases = Vec::new();
    let mut candidates = 0u64;
    let mut a = vec![0u32; n];
    let mut failure = None;
    descend(
        0,
        2 * delta as u64,
        caps,
        &suffix,
        &mut a,
        &mut |cand: &[u32]| {
            candidates += 1;
            if candidates > limits.max_candidates {
                failure = Some(Error::InstanceTooLarge(format!(
                    "more than {} candidate exponent vectors",
                    limits.max_candidates
                )));
                return false;
            }
            match realize_degree_sequence(g, cand, delta) {
                Ok(Some(_)) => bases.push(cand.to_vec()),
                Ok(None) => {}
                Err(e) => {
                    failure = Some(e);
                    return false;
                }
            }
            true
        },
    );
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(BasisSet {
        n,
        delta_c: delta,
        bases,
    })
}

/// Lexicographic walk over `a <= caps` with prescribed total; the visitor
/// returns false to abort.
fn descend(
    i: usize,
    remaining: u64,
    caps: &[u32],
    suffix: &[u64],
    a: &mut [u32],
    visit: &mut dyn FnMut(&[u32]) -> bool,
) -> bool {
    if i == caps.len() {
        return visit(a);
    }
    let lo = remaining.saturating_sub(suffix[i + 1]);
    let hi = remaining.min(caps[i] as u64);
    for x in lo..=hi {
        a[i] = x as u32;
        if !descend(i + 1, remaining - x, caps, suffix, a, visit) {
            return false;
        }
    }
    a[i] = 0;
    true
}

/// `D(G, c)`: every vector lying below some basis, sorted lexicographically.
pub fn divisor_set(b: &BasisSet) -> Vec<ExponentVector> {
    fn below(a: &[u32], i: usize, x: &mut Vec<u32>, out: &mut BTreeSet<ExponentVector>) {
        if i == a.len() {
            out.insert(x.clone());
            return;
        }
        for v in 0..=a[i] {
            x[i] = v;
            below(a, i + 1, x, out);
        }
    }
    let mut out = BTreeSet::new();
    let mut x = vec![0u32; b.n];
    for a in &b.bases {
        below(a, 0, &mut x, &mut out);
    }
    out.into_iter().collect()
}
