use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use edgepoly::criteria::{self, BipartiteShape, BipartiteSpec};
use edgepoly::facets::RankOracle;
use edgepoly::graph::{self, Graph};
use edgepoly::lattice::{self, Region};
use edgepoly::levelness::{self, LevelTables};
use edgepoly::oracle;
use edgepoly::powers::{delta_c_branch_and_bound, realize_degree_sequence};
use edgepoly::{
    delta_c, divisor_set, enumerate_bases, facets, star_prism, veronese_polytope, BasisSet,
    BoundVector, HPolytope, Limits, VeroneseSpec,
};

fn lim() -> Limits {
    Limits::default()
}

/// Graph on `n` vertices from an edge mask over the pairs, patched so that no
/// vertex is isolated.
fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let mut edges: BTreeSet<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    for v in 1..=n {
        if !edges.iter().any(|&(i, j)| i == v || j == v) {
            let u = if v == n { 1 } else { v + 1 };
            edges.insert((v.min(u), v.max(u)));
        }
    }
    Graph::new(n, edges.into_iter().collect::<Vec<_>>()).unwrap()
}

fn small_instance(max_n: usize, max_c: u32) -> impl Strategy<Value = (Graph, BoundVector)> {
    (2..=max_n).prop_flat_map(move |n| {
        (any::<u32>(), proptest::collection::vec(1..=max_c, n))
            .prop_map(move |(mask, c)| (graph_from_mask(n, mask), BoundVector::new(c).unwrap()))
    })
}

fn polytope_of(g: &Graph, c: &BoundVector) -> (BasisSet, HPolytope) {
    let b = enumerate_bases(g, c, &lim()).unwrap();
    let p = facets(&b).unwrap();
    (b, p)
}

fn veronese_spec() -> impl Strategy<Value = Option<VeroneseSpec>> {
    (2usize..=5).prop_flat_map(|n| {
        (proptest::collection::vec(2u32..=4, n), 0u32..64).prop_map(|(mut c, pick)| {
            c.sort_unstable_by(|x, y| y.cmp(x));
            let total: u32 = c.iter().sum();
            let lo = (c[0] + 1).max(c.len() as u32 + 1);
            if lo >= total {
                return None;
            }
            VeroneseSpec::new(lo + pick % (total - lo), c).ok()
        })
    })
}

/// Rank of an integer matrix by fraction-free elimination.
fn matrix_rank(mut rows: Vec<Vec<i128>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let pivot_row = rows[rank].clone();
                let (a, b) = (pivot_row[col], rows[r][col]);
                for (x, &y) in rows[r].iter_mut().zip(&pivot_row) {
                    *x = *x * a - y * b;
                }
                let g = rows[r].iter().fold(0i128, |g, &x| gcd(g, x.abs()));
                if g > 1 {
                    rows[r].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 96, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn bases_share_their_sum_and_exchange((g, c) in small_instance(6, 3)) {
        let b = enumerate_bases(&g, &c, &lim()).unwrap();
        let set: BTreeSet<_> = b.bases.iter().cloned().collect();
        for a in &b.bases {
            prop_assert_eq!(a.iter().sum::<u32>(), 2 * b.delta_c);
        }
        for a in &b.bases {
            for x in &b.bases {
                for i in 0..a.len() {
                    if a[i] > x[i] {
                        let ok = (0..a.len()).any(|j| {
                            if a[j] >= x[j] {
                                return false;
                            }
                            let mut y = a.clone();
                            y[i] -= 1;
                            y[j] += 1;
                            set.contains(&y)
                        });
                        prop_assert!(ok, "exchange fails for {:?}, {:?} at {}", a, x, i + 1);
                    }
                }
            }
        }
    }

    #[test]
    fn bases_match_the_oracle((g, c) in small_instance(6, 3)) {
        let b = enumerate_bases(&g, &c, &lim()).unwrap();
        let (d, brute) = oracle::brute_bases(&g, &c).unwrap();
        prop_assert_eq!(delta_c(&g, &c).unwrap(), d);
        prop_assert_eq!(b.delta_c, d);
        prop_assert_eq!(b.bases, brute.into_iter().collect::<Vec<_>>());
        prop_assert_eq!(delta_c_branch_and_bound(&g, &c), d);
    }

    #[test]
    fn rank_is_a_polymatroid_rank((g, c) in small_instance(6, 3)) {
        let b = enumerate_bases(&g, &c, &lim()).unwrap();
        let r = RankOracle::from_bases(&b).unwrap();
        prop_assert!(r.is_monotone());
        prop_assert!(r.is_submodular());
        prop_assert_eq!(r.rank_mask((1 << g.n()) - 1), 2 * b.delta_c as u64);
    }

    #[test]
    fn facet_system_cuts_out_the_divisors((g, c) in small_instance(6, 3)) {
        let (b, p) = polytope_of(&g, &c);
        let points = lattice::lattice_points(&p, 1, Region::Full, &lim()).unwrap();
        prop_assert_eq!(&points, &divisor_set(&b));
        prop_assert_eq!(&points, &oracle::brute_lattice_points(&p, 1, false, &lim()).unwrap());
    }

    #[test]
    fn upper_facets_are_facets((g, c) in small_instance(5, 3)) {
        let (b, p) = polytope_of(&g, &c);
        let points = divisor_set(&b);
        let n = g.n();
        for f in p.upper() {
            let tight: Vec<&Vec<u32>> = points
                .iter()
                .filter(|x| f.subset.iter().map(|&i| x[i - 1] as u64).sum::<u64>() == f.bound)
                .collect();
            let base = tight[0];
            let diffs: Vec<Vec<i128>> = tight[1..]
                .iter()
                .map(|x| (0..n).map(|i| x[i] as i128 - base[i] as i128).collect())
                .collect();
            prop_assert_eq!(matrix_rank(diffs), n - 1, "facet {:?} <= {}", f.subset, f.bound);
        }
    }

    #[test]
    fn counting_and_interiors((g, c) in small_instance(5, 3)) {
        let (_, p) = polytope_of(&g, &c);
        for level in 0..=3 {
            for region in [Region::Full, Region::Interior] {
                let listed = lattice::lattice_points(&p, level, region, &lim()).unwrap();
                let counted = lattice::count_lattice_points(&p, level, region, &lim()).unwrap();
                prop_assert_eq!(counted, listed.len() as u128);
                if level > 0 {
                    let brute = oracle::brute_lattice_points(&p, level, region == Region::Interior, &lim()).unwrap();
                    prop_assert_eq!(&listed, &brute);
                }
            }
        }
    }

    #[test]
    fn delta_vector_identities((g, c) in small_instance(4, 3)) {
        let (_, p) = polytope_of(&g, &c);
        let n = p.n();
        let d = lattice::delta_vector(&p, &lim()).unwrap();
        prop_assert_eq!(d.delta[0], 1);
        prop_assert_eq!(d.delta[1] + n as u128 + 1, d.counts[1]);
        prop_assert_eq!(d.delta[n], lattice::count_lattice_points(&p, 1, Region::Interior, &lim()).unwrap());
        let vol = oracle::brute_volume(&p).unwrap();
        prop_assert_eq!(vol, BigRational::from_integer(BigInt::from(d.sum())));
    }

    #[test]
    fn levelness_paths_agree((g, c) in small_instance(5, 3)) {
        let (_, p) = polytope_of(&g, &c);
        let n = p.n();
        let verdict = levelness::level_star(&p, &lim()).unwrap();
        let interior = levelness::interior_count(&p, &lim()).unwrap();
        if interior > 0 {
            let d = levelness::int_star_degree(&p, None, &lim()).unwrap();
            prop_assert_eq!(verdict.level, d == 1);
        } else {
            prop_assert!(!verdict.level);
        }
        if interior == 1 {
            prop_assert_eq!(verdict.level, lattice::reflexive_up_to_translation(&p, &lim()).unwrap());
        }
        if let Some(w) = &verdict.witness {
            if w.level >= 2 {
                prop_assert!(levelness::reduced_degree(&p, &w.point, w.level, &lim()).unwrap() >= 2);
            }
        }
        let scan = levelness::default_scan_bound(n);
        if let Ok(brute) = oracle::brute_level_star(&p, scan, &Limits::with_budget(2_000_000)) {
            prop_assert_eq!(brute, verdict.level);
        }
        // the n - 1 bound presupposes interior lattice points in P itself
        let mut tables = LevelTables::new(&p, &lim()).unwrap();
        let top = if interior > 0 { 3u32 } else { 0 };
        for level in 1..=top {
            for a in lattice::lattice_points(&p, level, Region::Interior, &lim()).unwrap() {
                let r = tables.reduced_degree(&a, level);
                prop_assert!(r >= 1 && r <= level.min(n as u32 - 1), "{:?} at N = {}: {}", a, level, r);
            }
        }
    }

    #[test]
    fn reduced_degrees_match_the_oracle((g, c) in small_instance(4, 3)) {
        let (_, p) = polytope_of(&g, &c);
        for level in 1..=3u32 {
            for a in lattice::lattice_points(&p, level, Region::Interior, &lim()).unwrap() {
                prop_assert_eq!(
                    levelness::reduced_degree(&p, &a, level, &lim()).unwrap(),
                    oracle::brute_reduced_degree(&p, &a, level, &lim()).unwrap()
                );
            }
        }
    }

    #[test]
    fn normality_matches_the_oracle((g, c) in small_instance(4, 2)) {
        let (_, p) = polytope_of(&g, &c);
        let fast = lattice::normality_check(&p, 3, &lim()).unwrap();
        prop_assert!(fast.normal);
        prop_assert_eq!(oracle::brute_normality(&p, 3, &lim()).unwrap(), fast.normal);
    }

    #[test]
    fn dilation_containment_holds((g, c) in small_instance(5, 3), level in 2u32..=3) {
        prop_assert!(criteria::dilation_containment(&g, &c, level, &lim()).unwrap().holds);
    }

    #[test]
    fn tree_degree_sequences_are_rigid(
        parents in (1usize..7).prop_flat_map(|k| (0..k).map(|i| 1..=i + 1).collect::<Vec<_>>()),
        weights in proptest::collection::vec(0u32..4, 7),
    ) {
        let t = graph::tree_from_parents(&parents).unwrap();
        let w = &weights[..t.edges().len()];
        let mut a = vec![0u32; t.n()];
        for (&(i, j), &x) in t.edges().iter().zip(w) {
            a[i - 1] += x;
            a[j - 1] += x;
        }
        let q = w.iter().sum();
        prop_assert_eq!(realize_degree_sequence(&t, &a, q).unwrap(), Some(w.to_vec()));
    }

    #[test]
    fn veronese_three_ways(spec in veronese_spec()) {
        prop_assume!(spec.is_some());
        let spec = spec.unwrap();
        let crit = criteria::veronese_level_criterion(&spec).unwrap().level;
        let direct = levelness::level_star(&veronese_polytope(&spec), &lim()).unwrap().level;
        let prism = levelness::level_star(&star_prism(&spec, &lim()).unwrap(), &lim()).unwrap().level;
        prop_assert_eq!(crit, direct);
        prop_assert_eq!(direct, prism);
    }

    #[test]
    fn bipartite_criterion_matches(m in 1usize..=4, n in 1usize..=3, c in proptest::collection::vec(1u32..=4, 7)) {
        let c = c[..m + n].to_vec();
        let Ok(spec) = BipartiteSpec::new(m, n, c) else { return Ok(()); };
        prop_assume!(criteria::bipartite_interior_nonempty(&spec));
        let crit = criteria::bipartite_level_criterion(&spec).unwrap().level;
        let (_, p) = polytope_of(&spec.graph(), &spec.bound());
        prop_assert_eq!(crit, levelness::level_star(&p, &lim()).unwrap().level);
    }

    #[test]
    fn complete_bipartite_facet_shapes(m in 1usize..=4, n in 1usize..=3, c in proptest::collection::vec(1u32..=4, 7)) {
        let c = c[..m + n].to_vec();
        let g = graph::complete_bipartite(m, n).unwrap();
        let shape = match BipartiteSpec::normalize(m, n, c.clone()) {
            Ok(s) => s,
            Err(_) => return Ok(()),
        };
        let bound = BoundVector::new(c.clone()).unwrap();
        let (_, p) = polytope_of(&g, &bound);
        let mut expected: Vec<(Vec<usize>, u64)> = match shape {
            BipartiteShape::Balanced => (1..=m + n).map(|i| (vec![i], c[i - 1] as u64)).collect(),
            BipartiteShape::Heavy(spec) => {
                // indices of `spec` are relative to its own side order
                let swapped = c[..m].iter().sum::<u32>() < c[m..].iter().sum::<u32>();
                let real = |i: usize| if swapped { if i <= spec.m() { i + m } else { i - spec.m() } } else { i };
                let light: u64 = spec.c()[spec.m()..].iter().map(|&x| x as u64).sum();
                let mut v: Vec<(Vec<usize>, u64)> = spec
                    .set_b()
                    .iter()
                    .chain((spec.m() + 1..=spec.m() + spec.n()).collect::<Vec<_>>().iter())
                    .map(|&i| (vec![real(i)], spec.c()[i - 1] as u64))
                    .collect();
                let mut heavy: Vec<usize> = (1..=spec.m()).map(real).collect();
                heavy.sort_unstable();
                v.push((heavy, light));
                v
            }
        };
        expected.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
        let got: Vec<(Vec<usize>, u64)> = p.upper().iter().map(|f| (f.subset.clone(), f.bound)).collect();
        prop_assert_eq!(got, expected);
    }
}
