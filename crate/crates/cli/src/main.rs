//! `edgepoly`: command-line front end for the edge-polymatroid library.

mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use edgepoly::criteria::{self, BipartiteShape, BipartiteSpec};
use edgepoly::{lattice, levelness, suite, veronese_polytope, Error, Limits, VeroneseSpec};

use input::Source;

#[derive(Parser)]
#[command(
    name = "edgepoly",
    version,
    about = "Polytopes of bounded powers of edge ideals"
)]
struct Cli {
    /// Cap on enumeration nodes and base candidates (defaults: 10^8 nodes, 10^7 candidates).
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Exit with status 1 when a yes/no verdict is negative.
    #[arg(long, global = true)]
    strict: bool,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PolytopeArgs {
    /// Graph file: {"n": .., "edges": [[i, j], ..], "c": [..]}.
    graph: Option<PathBuf>,
    /// Bound vector, overriding the file's `c`.
    #[arg(long, value_delimiter = ',')]
    c: Option<Vec<u32>>,
    /// Use Q#(a; c) given as a,c1,...,cn instead of a graph.
    #[arg(long, value_delimiter = ',', conflicts_with = "graph")]
    veronese: Option<Vec<u32>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteName {
    Paper,
}

#[derive(Subcommand)]
enum Command {
    /// Full report: bases, facets, levelness verdicts, δ-vector.
    Analyze {
        #[command(flatten)]
        source: PolytopeArgs,
        /// Highest dilation scanned for level* and int* (default max(2, n - 1)).
        #[arg(long)]
        scan_bound: Option<u32>,
    },
    /// Facet system of conv(D(G,c)).
    Facets {
        #[command(flatten)]
        source: PolytopeArgs,
    },
    /// Ehrhart counts and δ-vector.
    DeltaVector {
        #[command(flatten)]
        source: PolytopeArgs,
    },
    /// Level* verdict with a failure witness.
    Level {
        #[command(flatten)]
        source: PolytopeArgs,
        #[arg(long)]
        scan_bound: Option<u32>,
    },
    /// Pseudo-Gorenstein* verdict.
    Psg {
        #[command(flatten)]
        source: PolytopeArgs,
    },
    /// int* degree and whether every degree below it occurs.
    IntStarDegree {
        #[command(flatten)]
        source: PolytopeArgs,
        #[arg(long)]
        max_level: Option<u32>,
    },
    /// Reduced degree of an interior point of N·P.
    ReducedDegree {
        #[command(flatten)]
        source: PolytopeArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        point: Vec<u32>,
        #[arg(long)]
        level: u32,
    },
    /// Level* criterion for Q#(a; c).
    Veronese {
        #[arg(long)]
        a: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        c: Vec<u32>,
        /// Also evaluate the interval formula (uniform c only).
        #[arg(long)]
        formula: bool,
    },
    /// Interior and level* criteria for K_{m,n}.
    Bipartite {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        c: Vec<u32>,
    },
    /// Leaf-distance rule for trees, optionally confirmed by search.
    TreeCheck {
        graph: PathBuf,
        #[arg(long)]
        search: Option<u32>,
    },
    /// Search c <= cmax making conv(D(G,c)) pseudo-Gorenstein*.
    SearchLabeling {
        graph: PathBuf,
        #[arg(long)]
        cmax: u32,
    },
    /// int* degrees over all Q#(a; c) in dimension n with c_i <= cmax.
    SweepVeronese {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        cmax: u32,
    },
    /// Run the reference checks.
    Verify {
        #[arg(long, value_enum, default_value = "paper")]
        suite: SuiteName,
    },
}

enum Failure {
    Input(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_budget() {
            Failure::Budget(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

/// What a command produced: a report and, for yes/no commands, the verdict.
struct Output {
    value: Value,
    text: String,
    verdict: Option<bool>,
}

impl Output {
    fn new(value: Value, text: String) -> Self {
        Output {
            value,
            text,
            verdict: None,
        }
    }

    fn verdict(mut self, v: bool) -> Self {
        self.verdict = Some(v);
        self
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = cli.budget.map(Limits::with_budget).unwrap_or_default();
    match run(&cli.command, &limits) {
        Ok(out) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.value).expect("values serialize")
                );
            } else {
                println!("{}", out.text.trim_end());
            }
            match out.verdict {
                Some(false) if cli.strict || matches!(cli.command, Command::Verify { .. }) => {
                    ExitCode::from(1)
                }
                _ => ExitCode::SUCCESS,
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg} (raise --budget)");
            ExitCode::from(3)
        }
    }
}

fn source_of(args: &PolytopeArgs) -> Result<Source, Failure> {
    input::load(
        args.graph.as_deref(),
        args.c.as_deref(),
        args.veronese.as_deref(),
    )
}

fn yes_no(v: bool) -> &'static str {
    if v {
        "yes"
    } else {
        "no"
    }
}

fn run(command: &Command, limits: &Limits) -> Result<Output, Failure> {
    match command {
        Command::Analyze { source, scan_bound } => {
            let src = source_of(source)?;
            let (p, bases) = src.polytope(limits)?;
            let rep = levelness::levelness_report(&p, *scan_bound, limits)?;
            let delta = lattice::delta_vector(&p, limits)?;
            let value = report::analysis(bases.as_ref(), &p, &rep, &delta);
            let text = report::analysis_text(&src, bases.as_ref(), &p, &rep, &delta);
            Ok(Output::new(value, text).verdict(rep.level))
        }
        Command::Facets { source } => {
            let (p, _) = source_of(source)?.polytope(limits)?;
            Ok(Output::new(
                json!({ "n": p.n(), "facets": report::facets(&p) }),
                report::facets_text(&p),
            ))
        }
        Command::DeltaVector { source } => {
            let (p, _) = source_of(source)?.polytope(limits)?;
            let d = lattice::delta_vector(&p, limits)?;
            let unimodal = lattice::is_unimodal(&d);
            Ok(Output::new(
                json!({
                    "counts": report::big_list(&d.counts),
                    "delta_vector": report::big_list(&d.delta),
                    "unimodal": unimodal,
                }),
                format!(
                    "i(P,N), N = 0..{}: {}\ndelta: {}\nunimodal: {}",
                    p.n(),
                    report::join(&d.counts),
                    report::join(&d.delta),
                    yes_no(unimodal)
                ),
            ))
        }
        Command::Level { source, scan_bound } => {
            let (p, _) = source_of(source)?.polytope(limits)?;
            let v = match scan_bound {
                Some(b) => levelness::level_star_with_bound(&p, *b, limits)?,
                None => levelness::level_star(&p, limits)?,
            };
            let mut text = format!(
                "level*: {} (dilations scanned up to {})",
                yes_no(v.level),
                v.scan_bound
            );
            if let Some(w) = &v.witness {
                text += &format!(
                    "\nwitness at N = {}: {:?}\n{}",
                    w.level, w.point, w.explanation
                );
            }
            Ok(Output::new(
                json!({
                    "level": v.level,
                    "witness": report::witness(v.witness.as_ref()),
                    "scan_bound_used": v.scan_bound,
                }),
                text,
            )
            .verdict(v.level))
        }
        Command::Psg { source } => {
            let (p, _) = source_of(source)?.polytope(limits)?;
            let count = levelness::interior_count(&p, limits)?;
            let psg = count == 1;
            Ok(Output::new(
                json!({ "interior_points_n1": report::big(count), "pseudo_gorenstein": psg }),
                format!(
                    "interior lattice points: {count}\npseudo-Gorenstein*: {}",
                    yes_no(psg)
                ),
            )
            .verdict(psg))
        }
        Command::IntStarDegree { source, max_level } => {
            let (p, _) = source_of(source)?.polytope(limits)?;
            let d = levelness::int_star_degree(&p, *max_level, limits)?;
            let spectrum = levelness::conjecture_spectrum(&p, *max_level, limits)?;
            Ok(Output::new(
                json!({ "int_star_degree": d, "full_spectrum": spectrum }),
                format!(
                    "int* degree: {d}\nevery degree 1..{d} occurs: {}",
                    yes_no(spectrum)
                ),
            ))
        }
        Command::ReducedDegree {
            source,
            point,
            level,
        } => {
            let (p, _) = source_of(source)?.polytope(limits)?;
            let r = levelness::reduced_degree(&p, point, *level, limits)?;
            Ok(Output::new(
                json!({ "point": point, "level": level, "reduced_degree": r }),
                format!("reduced degree of {point:?} in {level}P: {r}"),
            ))
        }
        Command::Veronese { a, c, formula } => veronese(*a, c, *formula, limits),
        Command::Bipartite { m, n, c } => bipartite(*m, *n, c),
        Command::TreeCheck { graph, search } => {
            let src = input::load(Some(graph), None, None)?;
            let g = src.graph()?;
            let rule = criteria::tree_labeling_pseudo_gorenstein(g)?;
            let mut value = json!({ "labeling_pseudo_gorenstein": rule });
            let mut text = format!("labeling pseudo-Gorenstein*: {}", yes_no(rule));
            if let Some(c_max) = search {
                let hit = criteria::search_labeling(g, *c_max, limits)?;
                let hit = hit.map(|c| c.as_slice().to_vec());
                value["search_witness"] = json!(hit);
                value["search_agrees"] = json!(hit.is_some() == rule);
                text += &format!("\nsearch with c <= {c_max}: {hit:?}");
            }
            Ok(Output::new(value, text).verdict(rule))
        }
        Command::SearchLabeling { graph, cmax } => {
            let src = input::load(Some(graph), None, None)?;
            let hit = criteria::search_labeling(src.graph()?, *cmax, limits)?;
            let hit = hit.map(|c| c.as_slice().to_vec());
            Ok(Output::new(
                json!({ "witness": hit }),
                match &hit {
                    Some(c) => format!("pseudo-Gorenstein* at c = {c:?}"),
                    None => format!("no c <= {cmax} works"),
                },
            )
            .verdict(hit.is_some()))
        }
        Command::SweepVeronese { n, cmax } => sweep(*n, *cmax, limits),
        Command::Verify {
            suite: SuiteName::Paper,
        } => {
            let outcomes = suite::run_all(limits);
            let passed = outcomes.iter().filter(|o| o.passed).count();
            let mut text: String = outcomes.iter().map(|o| format!("{o}\n")).collect();
            text += &format!("{passed} of {} criteria passed", outcomes.len());
            let value = json!({
                "passed": passed,
                "total": outcomes.len(),
                "criteria": outcomes.iter().map(|o| json!({
                    "id": o.id,
                    "title": o.title,
                    "passed": o.passed,
                    "detail": o.detail,
                    "elapsed_ms": o.elapsed.as_millis() as u64,
                })).collect::<Vec<_>>(),
            });
            Ok(Output::new(value, text).verdict(passed == outcomes.len()))
        }
    }
}

fn veronese(a: u32, c: &[u32], formula: bool, limits: &Limits) -> Result<Output, Failure> {
    let spec = VeroneseSpec::new(a, c.to_vec())?;
    let verdict = criteria::veronese_level_criterion(&spec)?;
    let p = veronese_polytope(&spec);
    let int_star = levelness::int_star_degree(&p, None, limits)?;
    let mut value = json!({
        "level": verdict.level,
        "violation": report::violation(verdict.violation.as_ref()),
        "int_star_degree": int_star,
    });
    let mut text = format!("level*: {}", yes_no(verdict.level));
    if let Some((cond, x)) = &verdict.violation {
        text += &format!(
            " ({} condition fails at X = {x:?})",
            report::condition(*cond)
        );
    }
    text += &format!("\nint* degree: {int_star}");
    if formula {
        if c.windows(2).any(|w| w[0] != w[1]) {
            return Err(Failure::Input("--formula needs all c_i equal".into()));
        }
        let f = criteria::veronese_uniform_formula(c.len() as u32, c[0], a)?;
        value["uniform_formula"] = json!(f);
        value["formula_agrees"] = json!(f == verdict.level);
        text += &format!("\ninterval formula: {}", yes_no(f));
    }
    Ok(Output::new(value, text).verdict(verdict.level))
}

fn bipartite(m: usize, n: usize, c: &[u32]) -> Result<Output, Failure> {
    let spec = match BipartiteSpec::normalize(m, n, c.to_vec())? {
        BipartiteShape::Balanced => {
            return Ok(Output::new(
                json!({ "balanced": true, "cube": true }),
                "side totals agree: conv(D(G,c)) is the box 0 <= x <= c".into(),
            ))
        }
        BipartiteShape::Heavy(spec) => spec,
    };
    let interior = criteria::bipartite_interior_nonempty(&spec);
    let mut value = json!({
        "balanced": false,
        "heavy_side_first": spec.m() == m,
        "interior_nonempty": interior,
        "level": Value::Null,
        "violation": Value::Null,
    });
    let mut text = String::new();
    if spec.m() != m {
        text += "sides swapped so that the first side is the heavier one\n";
    }
    text += &format!("interior lattice points at N = 1: {}", yes_no(interior));
    let mut verdict = interior;
    if interior {
        let v = criteria::bipartite_level_criterion(&spec)?;
        value["level"] = json!(v.level);
        value["violation"] = report::violation(v.violation.as_ref());
        text += &format!("\nlevel*: {}", yes_no(v.level));
        if let Some((cond, x)) = &v.violation {
            text += &format!(
                " ({} condition fails at X = {x:?})",
                report::condition(*cond)
            );
        }
        verdict = v.level;
    }
    Ok(Output::new(value, text).verdict(verdict))
}

fn sweep(n: usize, c_max: u32, limits: &Limits) -> Result<Output, Failure> {
    if n < 2 {
        return Err(Failure::Input("--n must be at least 2".into()));
    }
    let specs: Vec<VeroneseSpec> = suite::veronese_specs(n, c_max)
        .into_iter()
        .filter(|s| s.n() == n)
        .collect();
    let mut by_degree = std::collections::BTreeMap::<u32, Vec<Value>>::new();
    for spec in &specs {
        let d = levelness::int_star_degree(&veronese_polytope(spec), None, limits)?;
        by_degree
            .entry(d)
            .or_default()
            .push(json!({ "a": spec.a(), "c": spec.c() }));
    }
    let mut text = format!("{} specs in dimension {n} with c_i <= {c_max}", specs.len());
    for (d, list) in &by_degree {
        text += &format!("\nint* degree {d}: {} specs", list.len());
    }
    let value = json!({
        "specs": specs.len(),
        "int_star_degrees": by_degree
            .iter()
            .map(|(d, list)| (d.to_string(), json!({ "count": list.len(), "first": list[0] })))
            .collect::<serde_json::Map<_, _>>(),
    });
    Ok(Output::new(value, text))
}
