//! The reference verification suite: fourteen end-to-end checks tying the
//! closed-form statements to direct computation. Shared by the `verify`
//! command and the acceptance tests.

use std::collections::{BTreeMap, HashSet};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::criteria::{self, BipartiteSpec};
use crate::error::{Error, Limits};
use crate::facets::{facets, star_prism, veronese_polytope, Facet, HPolytope, VeroneseSpec};
use crate::graph::{self, BoundVector, Graph};
use crate::lattice::{self, Region};
use crate::levelness;
use crate::oracle;
use crate::powers::{delta_c, divisor_set, enumerate_bases};

/// Result of running one criterion.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub time_limit: Duration,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] {:>2}. {} ({:.2?}, limit {:?}): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed,
            self.time_limit,
            self.detail
        )
    }
}

type Check = std::result::Result<String, String>;

struct Criterion {
    id: u8,
    title: &'static str,
    time_limit: Duration,
    run: fn(&Limits) -> Check,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

const CRITERIA: [Criterion; 14] = [
    Criterion {
        id: 1,
        title: "path P3 with bounds (2,3,2): facet system, level*, int* degree 1",
        time_limit: secs(1),
        run: path_three,
    },
    Criterion {
        id: 2,
        title: "K_{3,4} with bounds 2: unique interior point, not reflexive, not level* at N = 2",
        time_limit: secs(5),
        run: k34,
    },
    Criterion {
        id: 3,
        title: "triangle with unit bounds: sum facet, strict dilation containment, cube at 2c",
        time_limit: secs(1),
        run: triangle,
    },
    Criterion {
        id: 4,
        title: "complete bipartite labeling search agrees with n <= m <= 2n - 1",
        time_limit: secs(120),
        run: bipartite_labeling,
    },
    Criterion {
        id: 5,
        title: "complete bipartite level* criterion agrees with direct computation",
        time_limit: secs(180),
        run: bipartite_level,
    },
    Criterion {
        id: 6,
        title: "Veronese-type level* criterion agrees with the polytope and the star prism",
        time_limit: secs(120),
        run: veronese_level,
    },
    Criterion {
        id: 7,
        title: "uniform Veronese bounds: c = 2 rule, midpoint choices, interval formula",
        time_limit: secs(60),
        run: veronese_uniform,
    },
    Criterion {
        id: 8,
        title: "bounds (3,3,2,2,2): no level* Veronese-type polytope for 6 <= a <= 11",
        time_limit: secs(1),
        run: veronese_no_level,
    },
    Criterion {
        id: 9,
        title: "Q#(6; 5,3,3,3): reduced degrees 2 and 3, int* degree 3, full spectrum",
        time_limit: secs(10),
        run: veronese_int_star,
    },
    Criterion {
        id: 10,
        title: "Q#(n+1; n,2,...,2), n = 3, 4, 5: int* degree n - 1, full spectrum",
        time_limit: secs(60),
        run: veronese_far_from_level,
    },
    Criterion {
        id: 11,
        title: "trees on at most 7 vertices: leaf-distance rule agrees with labeling search",
        time_limit: secs(120),
        run: trees,
    },
    Criterion {
        id: 12,
        title: "bases and H-representation agree with brute-force edge multisets",
        time_limit: secs(180),
        run: oracle_sweep,
    },
    Criterion {
        id: 13,
        title: "delta-vector sanity: reciprocity, nonnegativity, volume, unimodality",
        time_limit: secs(60),
        run: delta_sanity,
    },
    Criterion {
        id: 14,
        title: "normality up to N = 3 for every polytope of the suite",
        time_limit: secs(120),
        run: normality,
    },
];

/// Number of criteria in the suite.
pub const COUNT: u8 = 14;

pub fn titles() -> Vec<(u8, &'static str)> {
    CRITERIA.iter().map(|c| (c.id, c.title)).collect()
}

/// Runs criterion `id` (1-based).
pub fn run(id: u8, limits: &Limits) -> Option<Outcome> {
    let c = CRITERIA.iter().find(|c| c.id == id)?;
    let start = Instant::now();
    let result = (c.run)(limits);
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if passed && elapsed > c.time_limit {
        passed = false;
        detail = format!("exceeded time limit: {detail}");
    }
    Some(Outcome {
        id: c.id,
        title: c.title,
        passed,
        detail,
        elapsed,
        time_limit: c.time_limit,
    })
}

pub fn run_all(limits: &Limits) -> Vec<Outcome> {
    (1..=COUNT).filter_map(|id| run(id, limits)).collect()
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn lib<T>(r: crate::error::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e: Error| format!("library error: {e}"))
}

fn bv(c: &[u32]) -> BoundVector {
    BoundVector::new(c.to_vec()).expect("suite bounds are positive")
}

fn graph_polytope(g: &Graph, c: &BoundVector, limits: &Limits) -> crate::error::Result<HPolytope> {
    facets(&enumerate_bases(g, c, limits)?)
}

fn facet_pairs(p: &HPolytope) -> Vec<(Vec<usize>, u64)> {
    p.upper()
        .iter()
        .map(|f| (f.subset.clone(), f.bound))
        .collect()
}

fn path_three_polytope(limits: &Limits) -> crate::error::Result<HPolytope> {
    graph_polytope(&graph::path(3)?, &bv(&[2, 3, 2]), limits)
}

fn k34_polytope(limits: &Limits) -> crate::error::Result<HPolytope> {
    graph_polytope(&graph::complete_bipartite(3, 4)?, &bv(&[2; 7]), limits)
}

fn triangle_polytope(limits: &Limits) -> crate::error::Result<HPolytope> {
    graph_polytope(&graph::cycle(3)?, &bv(&[1, 1, 1]), limits)
}

fn path_three(limits: &Limits) -> Check {
    let p = lib(path_three_polytope(limits))?;
    let expected = vec![(vec![1], 2), (vec![2], 3), (vec![3], 2), (vec![1, 3], 3)];
    ensure!(facet_pairs(&p) == expected, "facets {p}");
    let v = lib(levelness::level_star(&p, limits))?;
    ensure!(v.level, "level* verdict false, witness {:?}", v.witness);
    let d = lib(levelness::int_star_degree(&p, None, limits))?;
    ensure!(d == 1, "int* degree {d}");
    ensure!(
        lib(oracle::brute_level_star(&p, 2, limits))?,
        "brute-force level* disagrees"
    );
    Ok(format!("facets {p}; level* true; int* degree 1"))
}

fn k34(limits: &Limits) -> Check {
    let p = lib(k34_polytope(limits))?;
    let interior = lib(lattice::lattice_points(&p, 1, Region::Interior, limits))?;
    ensure!(interior == vec![vec![1; 7]], "interior points {interior:?}");
    ensure!(
        lib(levelness::pseudo_gorenstein_star(&p, limits))?,
        "not pseudo-Gorenstein*"
    );
    ensure!(
        !lib(lattice::reflexive_up_to_translation(&p, limits))?,
        "reported reflexive"
    );
    let heavy = p.upper().iter().find(|f| f.subset == vec![4, 5, 6, 7]);
    ensure!(
        heavy.map(|f| f.bound) == Some(6),
        "heavy-side facet {heavy:?}"
    );
    let v = lib(levelness::level_star(&p, limits))?;
    ensure!(!v.level, "reported level*");
    let w = v.witness.ok_or("no failure witness")?;
    ensure!(w.level == 2, "witness at N = {}", w.level);
    let rest: Vec<u32> = w.point.iter().map(|x| x - 1).collect();
    ensure!(
        !lattice::membership(&p, &rest, 1, Region::Full),
        "witness minus the interior point lies in P"
    );
    let classic = [3, 3, 3, 3, 3, 3, 2];
    ensure!(
        lattice::membership(&p, &classic, 2, Region::Interior),
        "(3,3,3,3,3,3,2) is not interior to 2P"
    );
    ensure!(
        !lattice::membership(&p, &[2, 2, 2, 2, 2, 2, 1], 1, Region::Full),
        "(2,2,2,2,2,2,1) lies in P"
    );
    let r = lib(levelness::reduced_degree(&p, &classic, 2, limits))?;
    ensure!(r == 2, "(3,3,3,3,3,3,2) has reduced degree {r}");
    Ok(format!(
        "interior {{(1,...,1)}}; not reflexive; lex-least witness N = 2, a = {:?} ({}); \
         (3,3,3,3,3,3,2) - (1,...,1) = (2,2,2,2,2,2,1) is outside P",
        w.point, w.explanation
    ))
}

fn triangle(limits: &Limits) -> Check {
    let p = lib(triangle_polytope(limits))?;
    ensure!(
        p.upper().contains(&Facet::new(vec![1, 2, 3], 2)),
        "facets {p}"
    );
    let g = lib(graph::cycle(3))?;
    let c = bv(&[1, 1, 1]);
    let r = lib(criteria::dilation_containment(&g, &c, 2, limits))?;
    ensure!(r.holds && r.strict, "containment {r:?}");
    let big = lib(graph_polytope(&g, &bv(&[2, 2, 2]), limits))?;
    ensure!(big == lib(HPolytope::cube(3, 2))?, "conv(D(G,2c)) = {big}");
    Ok(format!(
        "facets {p}; containment strict; conv(D(G,2c)) = [0,2]^3"
    ))
}

fn bipartite_labeling(limits: &Limits) -> Check {
    let mut found = 0;
    for n in 1..=5 {
        for m in n..=5 {
            let g = lib(graph::complete_bipartite(m, n))?;
            let hit = lib(criteria::search_labeling(&g, 2, limits))?;
            let expect = n <= m && m < 2 * n;
            ensure!(
                hit.is_some() == expect,
                "K_{{{m},{n}}}: search found {hit:?}, rule says {expect}"
            );
            ensure!(
                criteria::bipartite_labeling_classification(m, n) == expect,
                "classification disagrees for ({m},{n})"
            );
            if let Some(c) = hit {
                ensure!(
                    c.as_slice().iter().all(|&x| x == 2),
                    "K_{{{m},{n}}} witness {:?}",
                    c.as_slice()
                );
                found += 1;
            }
        }
    }
    Ok(format!("15 graphs, {found} with witness (2,...,2)"))
}

/// Every bipartite spec with `m + n = size`, entries in `1..=4`, satisfying the
/// level* criterion's hypotheses.
fn bipartite_specs_of_size(size: usize) -> Vec<BipartiteSpec> {
    let mut out = Vec::new();
    for m in 1..size {
        let n = size - m;
        let mut c = vec![1u32; size];
        loop {
            if let Ok(spec) = BipartiteSpec::new(m, n, c.clone()) {
                if criteria::bipartite_interior_nonempty(&spec) {
                    out.push(spec);
                }
            }
            let mut i = size;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if c[i] < 4 {
                    c[i] += 1;
                    break;
                }
                c[i] = 1;
                if i == 0 {
                    i = usize::MAX;
                    break;
                }
            }
            if i == usize::MAX || i == 0 && c.iter().all(|&x| x == 1) {
                break;
            }
        }
    }
    out
}

/// Per-size sample quota for the bipartite cross-validation.
const BIPARTITE_QUOTA: usize = 55;

/// Deterministic stratified sample of bipartite specs with `m + n <= 7`.
pub fn bipartite_sample() -> Vec<BipartiteSpec> {
    let mut out = Vec::new();
    for size in 2..=7 {
        let mut all = bipartite_specs_of_size(size);
        let mut rng = ChaCha8Rng::seed_from_u64(0x0b1_9a27 + size as u64);
        all.shuffle(&mut rng);
        all.truncate(BIPARTITE_QUOTA);
        out.extend(all);
    }
    out
}

fn bipartite_level(limits: &Limits) -> Check {
    let specs = bipartite_sample();
    ensure!(specs.len() >= 200, "only {} specs sampled", specs.len());
    let mut levels = 0;
    for spec in &specs {
        let verdict = lib(criteria::bipartite_level_criterion(spec))?;
        let p = lib(graph_polytope(&spec.graph(), &spec.bound(), limits))?;
        let direct = lib(levelness::level_star(&p, limits))?;
        ensure!(
            verdict.level == direct.level,
            "m = {}, n = {}, c = {:?}: criterion {} ({:?}), direct {} ({:?})",
            spec.m(),
            spec.n(),
            spec.c(),
            verdict.level,
            verdict.violation,
            direct.level,
            direct.witness
        );
        levels += verdict.level as usize;
    }
    Ok(format!(
        "{} specs agree ({} level*, {} not)",
        specs.len(),
        levels,
        specs.len() - levels
    ))
}

/// All Veronese-type parameters with `2 <= n <= max_n` and `c_i <= max_c`.
pub fn veronese_specs(max_n: usize, max_c: u32) -> Vec<VeroneseSpec> {
    fn bounds(n: usize, max_c: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let top = prefix.last().copied().unwrap_or(max_c);
        for v in (2..=top).rev() {
            prefix.push(v);
            bounds(n, max_c, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for n in 2..=max_n {
        let mut all = Vec::new();
        bounds(n, max_c, &mut Vec::new(), &mut all);
        for c in all {
            let total: u32 = c.iter().sum();
            for a in 1..total {
                if let Ok(spec) = VeroneseSpec::new(a, c.clone()) {
                    out.push(spec);
                }
            }
        }
    }
    out
}

fn veronese_level(limits: &Limits) -> Check {
    let specs = veronese_specs(4, 4);
    let mut levels = 0;
    for spec in &specs {
        let verdict = lib(criteria::veronese_level_criterion(spec))?;
        let direct = lib(levelness::level_star(&veronese_polytope(spec), limits))?;
        let prism = lib(levelness::level_star(
            &lib(star_prism(spec, limits))?,
            limits,
        ))?;
        ensure!(
            verdict.level == direct.level && direct.level == prism.level,
            "a = {}, c = {:?}: criterion {}, polytope {}, prism {}",
            spec.a(),
            spec.c(),
            verdict.level,
            direct.level,
            prism.level
        );
        levels += verdict.level as usize;
    }
    Ok(format!(
        "{} specs agree three ways ({levels} level*)",
        specs.len()
    ))
}

fn veronese_uniform(limits: &Limits) -> Check {
    let mut checked = 0;
    for n in 3..=8u32 {
        for a in n + 1..2 * n {
            let spec = lib(VeroneseSpec::new(a, vec![2; n as usize]))?;
            let crit = lib(criteria::veronese_level_criterion(&spec))?.level;
            let direct = lib(levelness::level_star(&veronese_polytope(&spec), limits))?.level;
            ensure!(
                crit == (a == n + 1) && direct == crit,
                "n = {n}, c = 2, a = {a}: criterion {crit}, direct {direct}"
            );
        }
    }
    for n in 3..=7u32 {
        for c in 2..=5u32 {
            let a = if n % 2 == 0 {
                n / 2 * c + 1
            } else {
                n.div_ceil(2) * c
            };
            let Ok(spec) = VeroneseSpec::new(a, vec![c; n as usize]) else {
                continue;
            };
            let crit = lib(criteria::veronese_level_criterion(&spec))?.level;
            let formula = lib(criteria::veronese_uniform_formula(n, c, a))?;
            ensure!(
                crit && formula,
                "midpoint n = {n}, c = {c}, a = {a} not level*"
            );
            if n <= 6 {
                let direct = lib(levelness::level_star(&veronese_polytope(&spec), limits))?.level;
                ensure!(
                    direct,
                    "midpoint n = {n}, c = {c}, a = {a}: direct verdict false"
                );
            }
        }
    }
    for n in 2..=7u32 {
        for c in 2..=5u32 {
            for a in (c + 1).max(n + 1)..n * c {
                let spec = lib(VeroneseSpec::new(a, vec![c; n as usize]))?;
                let crit = lib(criteria::veronese_level_criterion(&spec))?.level;
                let formula = lib(criteria::veronese_uniform_formula(n, c, a))?;
                ensure!(
                    crit == formula,
                    "formula/criterion disagree at n = {n}, c = {c}, a = {a}: formula {formula}, criterion {crit}"
                );
                checked += 1;
            }
        }
    }
    Ok(format!(
        "c = 2 rule for n = 3..8, midpoints for n = 3..7, {checked} uniform specs agree"
    ))
}

fn veronese_no_level(_: &Limits) -> Check {
    for a in 6..=11 {
        let spec = lib(VeroneseSpec::new(a, vec![3, 3, 2, 2, 2]))?;
        let v = lib(criteria::veronese_level_criterion(&spec))?;
        ensure!(!v.level, "a = {a} reported level*");
    }
    Ok("a = 6..11 all fail the criterion".into())
}

fn veronese_int_star(limits: &Limits) -> Check {
    let spec = lib(VeroneseSpec::new(6, vec![5, 3, 3, 3]))?;
    let p = veronese_polytope(&spec);
    for (point, level, expect) in [([8, 1, 1, 1], 2, 2), ([14, 1, 1, 1], 3, 3)] {
        let fast = lib(levelness::reduced_degree(&p, &point, level, limits))?;
        let brute = lib(oracle::brute_reduced_degree(&p, &point, level, limits))?;
        ensure!(
            fast == expect && brute == expect,
            "{point:?} at N = {level}: fast {fast}, brute {brute}"
        );
    }
    let d = lib(levelness::int_star_degree(&p, None, limits))?;
    ensure!(d == 3, "int* degree {d}");
    ensure!(
        lib(levelness::conjecture_spectrum(&p, None, limits))?,
        "degree spectrum incomplete"
    );
    Ok("reduced degrees 2 and 3, int* degree 3, degrees 1..3 realized".into())
}

fn veronese_far_from_level(limits: &Limits) -> Check {
    for n in 3..=5usize {
        let mut c = vec![2u32; n];
        c[0] = n as u32;
        let p = veronese_polytope(&lib(VeroneseSpec::new(n as u32 + 1, c))?);
        let d = lib(levelness::int_star_degree(&p, None, limits))?;
        ensure!(d == n as u32 - 1, "n = {n}: int* degree {d}");
        ensure!(
            lib(levelness::conjecture_spectrum(&p, None, limits))?,
            "n = {n}: spectrum incomplete"
        );
    }
    Ok("int* degrees 2, 3, 4 with full spectra".into())
}

/// Every tree on 2..=7 vertices up to isomorphism.
pub fn tree_catalog() -> Vec<Graph> {
    (2..=7)
        .flat_map(|n| graph::free_trees(n).expect("n >= 2"))
        .collect()
}

fn trees(limits: &Limits) -> Check {
    let catalog = tree_catalog();
    ensure!(catalog.len() >= 20, "catalog has {} trees", catalog.len());
    let mut positive = 0;
    for t in &catalog {
        let rule = lib(criteria::tree_labeling_pseudo_gorenstein(t))?;
        let hit = lib(criteria::search_labeling(t, 2, limits))?;
        ensure!(
            rule == hit.is_some(),
            "tree {:?}: rule {rule}, search {hit:?}",
            t.edges()
        );
        if rule {
            let twos = bv(&vec![2; t.n()]);
            ensure!(
                lib(criteria::labeling_is_pseudo_gorenstein(t, &twos, limits))?,
                "tree {:?}: (2,...,2) is not a witness",
                t.edges()
            );
            positive += 1;
        }
    }
    for n in 2..=7 {
        let rule = lib(criteria::tree_labeling_pseudo_gorenstein(&lib(
            graph::path(n),
        )?))?;
        ensure!(rule == (n != 3), "P_{n}: rule {rule}");
    }
    Ok(format!(
        "{} trees, {positive} labeling pseudo-Gorenstein*; P_n passes iff n != 3",
        catalog.len()
    ))
}

/// Graph families of the oracle sweep, all on at most six vertices.
pub fn sweep_graphs() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 2..=6 {
        out.push((format!("P{n}"), graph::path(n).unwrap()));
        out.push((format!("K{n}"), graph::complete(n).unwrap()));
    }
    for n in 3..=6 {
        out.push((format!("C{n}"), graph::cycle(n).unwrap()));
    }
    for k in 2..=5 {
        out.push((format!("S{k}"), graph::star(k).unwrap()));
    }
    for m in 1..=5 {
        for n in 1..=5 {
            if m + n <= 6 && (m, n) != (1, 1) && m != 1 {
                out.push((
                    format!("K{m},{n}"),
                    graph::complete_bipartite(m, n).unwrap(),
                ));
            }
        }
    }
    out
}

/// Samples per graph once `3^n` exceeds this.
const SWEEP_SAMPLES: usize = 60;

/// `(graph, bound)` cases: every `c ∈ {1,2,3}^n` for `n <= 4`, a seeded sample above.
pub fn sweep_cases() -> Vec<(String, Graph, BoundVector)> {
    let mut out = Vec::new();
    for (k, (name, g)) in sweep_graphs().into_iter().enumerate() {
        let n = g.n();
        let all: Vec<Vec<u32>> = (0..3usize.pow(n as u32))
            .map(|mut code| {
                (0..n)
                    .map(|_| {
                        let d = code % 3;
                        code /= 3;
                        d as u32 + 1
                    })
                    .rev()
                    .collect()
            })
            .collect();
        let chosen: Vec<Vec<u32>> = if n <= 4 {
            all
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 + k as u64);
            let mut pick: Vec<Vec<u32>> = all
                .choose_multiple(&mut rng, SWEEP_SAMPLES)
                .cloned()
                .collect();
            pick.sort();
            pick
        };
        for c in chosen {
            out.push((name.clone(), g.clone(), bv(&c)));
        }
    }
    out
}

fn oracle_sweep(limits: &Limits) -> Check {
    let cases = sweep_cases();
    ensure!(cases.len() >= 500, "only {} cases", cases.len());
    for (name, g, c) in &cases {
        let d = lib(delta_c(g, c))?;
        let b = lib(enumerate_bases(g, c, limits))?;
        let (bd, bb) = lib(oracle::brute_bases(g, c))?;
        let fast: Vec<_> = b.bases.clone();
        let slow: Vec<_> = bb.into_iter().collect();
        ensure!(
            d == bd && b.delta_c == bd && fast == slow,
            "{name}, c = {:?}: delta {d} vs {bd}, bases {} vs {}",
            c.as_slice(),
            fast.len(),
            slow.len()
        );
        let p = lib(facets(&b))?;
        let points = lib(lattice::lattice_points(&p, 1, Region::Full, limits))?;
        ensure!(
            points == divisor_set(&b),
            "{name}, c = {:?}: H-representation points differ from D(G,c)",
            c.as_slice()
        );
    }
    Ok(format!("{} cases agree", cases.len()))
}

/// Polytopes for the δ-vector checks, all of dimension at most 7.
fn delta_instances(limits: &Limits) -> crate::error::Result<Vec<(String, HPolytope)>> {
    let mut out = vec![
        ("P3 (2,3,2)".to_string(), path_three_polytope(limits)?),
        ("triangle (1,1,1)".to_string(), triangle_polytope(limits)?),
        ("K3,4 (2^7)".to_string(), k34_polytope(limits)?),
        ("cube [0,2]^4".to_string(), HPolytope::cube(4, 2)?),
        (
            "K2,2 (2^4)".to_string(),
            graph_polytope(&graph::complete_bipartite(2, 2)?, &bv(&[2; 4]), limits)?,
        ),
    ];
    for spec in veronese_specs(4, 4) {
        out.push((
            format!("Q#({}; {:?})", spec.a(), spec.c()),
            veronese_polytope(&spec),
        ));
    }
    for spec in bipartite_sample()
        .into_iter()
        .filter(|s| s.m() + s.n() <= 5)
    {
        out.push((
            format!("K{},{} {:?}", spec.m(), spec.n(), spec.c()),
            graph_polytope(&spec.graph(), &spec.bound(), limits)?,
        ));
    }
    Ok(out)
}

fn delta_sanity(limits: &Limits) -> Check {
    let cube = lib(lattice::delta_vector(&lib(HPolytope::cube(4, 2))?, limits))?;
    ensure!(
        cube.delta == vec![1, 76, 230, 76, 1],
        "cube δ = {:?}",
        cube.delta
    );
    let instances = lib(delta_instances(limits))?;
    let mut volumes = 0;
    let (mut level_count, mut off_peak) = (0, Vec::new());
    for (name, p) in &instances {
        let n = p.n();
        let d = lib(lattice::delta_vector(p, limits))?;
        ensure!(d.delta[0] == 1, "{name}: δ_0 = {}", d.delta[0]);
        ensure!(
            d.delta[1] + n as u128 + 1 == d.counts[1],
            "{name}: δ_1 = {} but i(P,1) = {}",
            d.delta[1],
            d.counts[1]
        );
        let interior = lib(lattice::count_lattice_points(
            p,
            1,
            Region::Interior,
            limits,
        ))?;
        ensure!(
            d.delta[n] == interior,
            "{name}: δ_n = {} vs {interior}",
            d.delta[n]
        );
        if n <= oracle::MAX_VOLUME_DIM {
            let vol = lib(oracle::brute_volume(p))?;
            let sum = num_rational::BigRational::from_integer(num_bigint::BigInt::from(d.sum()));
            ensure!(
                vol == sum,
                "{name}: Σδ = {} but normalized volume {vol}",
                d.sum()
            );
            volumes += 1;
        }
        if lib(levelness::level_star(p, limits))?.level {
            level_count += 1;
            if !lattice::is_unimodal(&d) {
                off_peak.push(format!("{name} δ = {:?}", d.delta));
            }
        }
    }
    ensure!(
        off_peak.is_empty(),
        "{} of {level_count} level* instances violate the rise-to-floor(n/2)-then-fall shape, e.g. {}",
        off_peak.len(),
        off_peak.iter().take(3).cloned().collect::<Vec<_>>().join("; ")
    );
    Ok(format!(
        "{} polytopes, {volumes} volume checks, {level_count} level* with unimodal δ; cube δ = (1,76,230,76,1)",
        instances.len()
    ))
}

/// Every polytope built by the criteria above, without repeats.
pub fn suite_polytopes(limits: &Limits) -> crate::error::Result<Vec<HPolytope>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut add = |p: HPolytope| {
        if seen.insert(p.clone()) {
            out.push(p);
        }
    };
    add(path_three_polytope(limits)?);
    add(k34_polytope(limits)?);
    add(triangle_polytope(limits)?);
    add(graph_polytope(&graph::cycle(3)?, &bv(&[2, 2, 2]), limits)?);
    for n in 1..=5 {
        for m in n..=5 {
            if m < 2 * n {
                add(graph_polytope(
                    &graph::complete_bipartite(m, n)?,
                    &bv(&vec![2; m + n]),
                    limits,
                )?);
            }
        }
    }
    for spec in bipartite_sample() {
        add(graph_polytope(&spec.graph(), &spec.bound(), limits)?);
    }
    for spec in veronese_specs(4, 4) {
        add(veronese_polytope(&spec));
        add(star_prism(&spec, limits)?);
    }
    for n in 3..=8u32 {
        for a in n + 1..2 * n {
            add(veronese_polytope(&VeroneseSpec::new(
                a,
                vec![2; n as usize],
            )?));
        }
    }
    add(veronese_polytope(&VeroneseSpec::new(6, vec![5, 3, 3, 3])?));
    for n in 3..=5usize {
        let mut c = vec![2u32; n];
        c[0] = n as u32;
        add(veronese_polytope(&VeroneseSpec::new(n as u32 + 1, c)?));
    }
    for t in tree_catalog() {
        let twos = bv(&vec![2; t.n()]);
        add(graph_polytope(&t, &twos, limits)?);
    }
    for (_, g, c) in sweep_cases() {
        add(graph_polytope(&g, &c, limits)?);
    }
    add(HPolytope::cube(4, 2)?);
    Ok(out)
}

fn normality(limits: &Limits) -> Check {
    let polys = lib(suite_polytopes(limits))?;
    let mut by_dim: BTreeMap<usize, usize> = BTreeMap::new();
    for p in &polys {
        let v = lib(lattice::normality_check(p, 3, limits))?;
        ensure!(v.normal, "polytope {p} fails at {:?}", v.counterexample);
        *by_dim.entry(p.n()).or_default() += 1;
    }
    Ok(format!(
        "{} distinct polytopes normal up to N = 3, by dimension {by_dim:?}",
        polys.len()
    ))
}
