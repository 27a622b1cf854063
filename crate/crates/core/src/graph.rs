//! Simple graphs on the vertex set `[n] = {1, ..., n}` and the standard families
//! used throughout the crate.
//!
//! Vertices are 1-based everywhere in the public surface. A [`Graph`] has no
//! loops, no multiple edges and no isolated vertex, and at least two vertices.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// Sorted pairs `(i, j)` with `1 <= i < j <= n`.
    edges: Vec<(usize, usize)>,
}

/// Vertex capacities `c = (c_1, ..., c_n)`, all positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoundVector(Vec<u32>);

impl BoundVector {
    pub fn new(c: Vec<u32>) -> Result<Self> {
        if c.is_empty() {
            return Err(Error::InvalidParameters("bound vector is empty".into()));
        }
        if let Some(pos) = c.iter().position(|&ci| ci == 0) {
            return Err(Error::InvalidParameters(format!(
                "bound c_{} must be positive",
                pos + 1
            )));
        }
        Ok(BoundVector(c))
    }

    /// The constant vector `(value, ..., value)` of length `n`.
    pub fn uniform(n: usize, value: u32) -> Result<Self> {
        Self::new(vec![value; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// `N * c`.
    pub fn scaled(&self, factor: u32) -> Result<Self> {
        let c = self
            .0
            .iter()
            .map(|&ci| {
                ci.checked_mul(factor)
                    .ok_or(Error::Overflow("bound scaling"))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(c)
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.0.len() != n {
            return Err(Error::InvalidParameters(format!(
                "bound vector has length {}, graph has {} vertices",
                self.0.len(),
                n
            )));
        }
        Ok(())
    }
}

impl std::ops::Index<usize> for BoundVector {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl Graph {
    /// Builds a graph from 1-based edge pairs, validating every invariant.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGraph(format!(
                "need at least 2 vertices, got {n}"
            )));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            if i < 1 || j > n {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{a},{b}}} out of range 1..={n}"
                )));
            }
            if !set.insert((i, j)) {
                return Err(Error::InvalidGraph(format!("multiple edge {{{i},{j}}}")));
            }
        }
        let mut covered = vec![false; n + 1];
        for &(i, j) in &set {
            covered[i] = true;
            covered[j] = true;
        }
        if let Some(v) = (1..=n).find(|&v| !covered[v]) {
            return Err(Error::InvalidGraph(format!("vertex {v} is isolated")));
        }
        Ok(Graph {
            n,
            edges: set.into_iter().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges as sorted 1-based pairs.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// 1-based neighbours of every vertex; index 0 is unused.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(i, j)| i == v || j == v)
            .count()
    }

    /// Two-colouring of the vertices if the graph is bipartite (`side[v]`, 1-based).
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let adj = self.adjacency();
        let mut colour: Vec<Option<bool>> = vec![None; self.n + 1];
        for start in 1..=self.n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let cv = colour[v].unwrap();
                for &u in &adj[v] {
                    match colour[u] {
                        None => {
                            colour[u] = Some(!cv);
                            stack.push(u);
                        }
                        Some(cu) if cu == cv => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(|c| c.unwrap_or(false)).collect())
    }

    /// Connected with exactly `n - 1` edges, checked with union-find.
    pub fn is_tree(&self) -> bool {
        if self.edges.len() != self.n - 1 {
            return false;
        }
        let mut uf = UnionFind::new(self.n + 1);
        for &(i, j) in &self.edges {
            if !uf.union(i, j) {
                return false;
            }
        }
        let root = uf.find(1);
        (2..=self.n).all(|v| uf.find(v) == root)
    }

    /// Vertices of degree one.
    pub fn leaves(&self) -> Vec<usize> {
        let adj = self.adjacency();
        (1..=self.n).filter(|&v| adj[v].len() == 1).collect()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Named graph families accepted by [`make_family`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{m,n}` on `[m] ⊔ {m+1, ..., m+n}`.
    CompleteBipartite(usize, usize),
    /// `K_{1,n}` with centre 1 and leaves `2..=n+1`.
    Star(usize),
    /// `parents[k]` is the parent of vertex `k + 2`.
    TreeFromParents(Vec<usize>),
}

pub fn make_family(kind: &Family) -> Result<Graph> {
    match *kind {
        Family::Path(n) => path(n),
        Family::Cycle(n) => cycle(n),
        Family::Complete(n) => complete(n),
        Family::CompleteBipartite(m, n) => complete_bipartite(m, n),
        Family::Star(n) => star(n),
        Family::TreeFromParents(ref parents) => tree_from_parents(parents),
    }
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!(
            "path needs n >= 2, got {n}"
        )));
    }
    Graph::new(n, (1..n).map(|i| (i, i + 1)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameters(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    Graph::new(n, (1..n).map(|i| (i, i + 1)).chain(std::iter::once((1, n))))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!(
            "complete graph needs n >= 2, got {n}"
        )));
    }
    Graph::new(n, (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))))
}

pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m < 1 || n < 1 {
        return Err(Error::InvalidParameters(format!(
            "complete bipartite graph needs m, n >= 1, got ({m}, {n})"
        )));
    }
    Graph::new(
        m + n,
        (1..=m).flat_map(|i| (m + 1..=m + n).map(move |j| (i, j))),
    )
}

pub fn star(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameters(
            "star needs at least one leaf".into(),
        ));
    }
    complete_bipartite(1, n)
}

pub fn tree_from_parents(parents: &[usize]) -> Result<Graph> {
    let n = parents.len() + 1;
    let edges: Vec<_> = parents
        .iter()
        .enumerate()
        .map(|(k, &p)| (p, k + 2))
        .collect();
    let g = Graph::new(n, edges)?;
    if !g.is_tree() {
        return Err(Error::InvalidParameters(
            "parent list does not describe a tree".into(),
        ));
    }
    Ok(g)
}

/// Whether two distinct leaves of the tree `t` lie at distance exactly two.
///
/// Two leaves are at distance two exactly when they share their unique
/// neighbour, so this counts leaves hanging off each vertex.
pub fn leaf_distance_two_exists(t: &Graph) -> Result<bool> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let adj = t.adjacency();
    let mut hanging = vec![0usize; t.n() + 1];
    for v in 1..=t.n() {
        if adj[v].len() == 1 {
            let u = adj[v][0];
            // K_2: the two leaves are adjacent, not at distance two
            if adj[u].len() == 1 {
                continue;
            }
            hanging[u] += 1;
        }
    }
    Ok(hanging.iter().any(|&h| h >= 2))
}

/// Every tree on `n` vertices up to isomorphism, each in a fixed labelling,
/// listed in order of their canonical encodings.
pub fn free_trees(n: usize) -> Result<Vec<Graph>> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!(
            "trees need n >= 2, got {n}"
        )));
    }
    if n == 2 {
        return Ok(vec![path(2)?]);
    }
    let mut seen = std::collections::BTreeMap::new();
    let mut code = vec![1usize; n - 2];
    loop {
        let t = Graph::new(n, prufer_edges(n, &code))?;
        seen.entry(canonical_tree_code(&t)).or_insert(t);
        let mut i = code.len();
        loop {
            if i == 0 {
                return Ok(seen.into_values().collect());
            }
            i -= 1;
            if code[i] < n {
                code[i] += 1;
                break;
            }
            code[i] = 1;
        }
    }
}

fn prufer_edges(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n + 1];
    for &x in code {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in code {
        let leaf = (1..=n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] = 0;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (1..=n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Isomorphism-invariant encoding of a tree: the smallest parenthesis string
/// over its centres.
pub fn canonical_tree_code(t: &Graph) -> String {
    let adj = t.adjacency();
    let n = t.n();
    let mut degree: Vec<usize> = (0..=n).map(|v| adj[v].len()).collect();
    let mut layer: Vec<usize> = (1..=n).filter(|&v| degree[v] <= 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            degree[v] = 0;
            for &u in &adj[v] {
                if degree[u] > 0 {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    fn encode(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = adj[v]
            .iter()
            .filter(|&&u| u != parent)
            .map(|&u| encode(adj, u, v))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    layer.iter().map(|&c| encode(&adj, c, 0)).min().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_three_edges() {
        let g = path(3).unwrap();
        assert_eq!(g.edges(), &[(1, 2), (2, 3)]);
    }

    #[test]
    fn complete_bipartite_three_four() {
        let g = complete_bipartite(3, 4).unwrap();
        assert_eq!(g.n(), 7);
        assert_eq!(g.edges().len(), 12);
        assert!(g.edges().iter().all(|&(i, j)| i <= 3 && j >= 4));
    }

    #[test]
    fn triangle_is_cycle_three() {
        let g = cycle(3).unwrap();
        assert_eq!(g.edges(), &[(1, 2), (1, 3), (2, 3)]);
        assert!(g.bipartition().is_none());
    }

    #[test]
    fn invalid_family_parameters() {
        assert!(path(1).is_err());
        assert!(cycle(2).is_err());
        assert!(complete_bipartite(0, 3).is_err());
        assert!(tree_from_parents(&[1, 1, 5]).is_err());
    }

    #[test]
    fn graph_invariants_are_enforced() {
        assert!(matches!(
            Graph::new(3, [(1, 1)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            Graph::new(3, [(1, 2), (2, 1)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            Graph::new(3, [(1, 2)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(Graph::new(1, []), Err(Error::InvalidGraph(_))));
    }

    #[test]
    fn leaf_distance_examples() {
        assert!(leaf_distance_two_exists(&path(3).unwrap()).unwrap());
        assert!(!leaf_distance_two_exists(&path(4).unwrap()).unwrap());
        assert!(leaf_distance_two_exists(&star(3).unwrap()).unwrap());
        assert!(!leaf_distance_two_exists(&path(2).unwrap()).unwrap());
        assert_eq!(
            leaf_distance_two_exists(&cycle(4).unwrap()),
            Err(Error::NotATree)
        );
    }

    #[test]
    fn paths_have_leaves_at_distance_two_only_for_three_vertices() {
        for n in 2..=12 {
            let p = path(n).unwrap();
            assert!(p.is_tree());
            assert_eq!(p.edges().len(), n - 1);
            assert_eq!(leaf_distance_two_exists(&p).unwrap(), n == 3, "P_{n}");
        }
    }

    #[test]
    fn tree_counts_up_to_seven() {
        let counts: Vec<usize> = (2..=7).map(|n| free_trees(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 6, 11]);
        for n in 2..=7 {
            for t in free_trees(n).unwrap() {
                assert!(t.is_tree());
            }
        }
    }

    #[test]
    fn canonical_code_ignores_labels() {
        let a = tree_from_parents(&[1, 1, 1]).unwrap();
        let b = tree_from_parents(&[1, 2, 2]).unwrap();
        assert_eq!(canonical_tree_code(&a), canonical_tree_code(&b));
        assert_ne!(
            canonical_tree_code(&a),
            canonical_tree_code(&path(4).unwrap())
        );
    }

    #[test]
    fn spider_has_no_close_leaves() {
        let spider = tree_from_parents(&[1, 2, 1, 4, 1, 6]).unwrap();
        assert!(!leaf_distance_two_exists(&spider).unwrap());
    }
}
