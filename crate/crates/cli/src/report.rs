//! JSON and text renderings. Counts that may exceed `u64` are written as
//! strings so that every reader sees the exact value.

use serde_json::{json, Value};

use edgepoly::criteria::Condition;
use edgepoly::{BasisSet, DeltaVector, HPolytope, LevelnessReport, Witness};

use crate::input::Source;

pub fn big(v: u128) -> Value {
    match u64::try_from(v) {
        Ok(small) => json!(small),
        Err(_) => json!(v.to_string()),
    }
}

pub fn big_list(v: &[u128]) -> Value {
    Value::Array(v.iter().map(|&x| big(x)).collect())
}

pub fn join(v: &[u128]) -> String {
    v.iter().map(u128::to_string).collect::<Vec<_>>().join(" ")
}

pub fn facets(p: &HPolytope) -> Value {
    p.upper()
        .iter()
        .map(|f| json!({ "subset": f.subset, "bound": f.bound }))
        .collect()
}

pub fn facets_text(p: &HPolytope) -> String {
    let mut out = format!("x_i >= 0 for i = 1..{}\n", p.n());
    for f in p.upper() {
        let lhs: Vec<String> = f.subset.iter().map(|i| format!("x{i}")).collect();
        out += &format!("{} <= {}\n", lhs.join(" + "), f.bound);
    }
    out
}

pub fn witness(w: Option<&Witness>) -> Value {
    match w {
        Some(w) => json!({ "level": w.level, "point": w.point, "explanation": w.explanation }),
        None => Value::Null,
    }
}

pub fn condition(c: Condition) -> &'static str {
    match c {
        Condition::First => "first",
        Condition::Second => "second",
    }
}

pub fn violation(v: Option<&(Condition, Vec<usize>)>) -> Value {
    match v {
        Some((c, x)) => json!({ "condition": condition(*c), "subset": x }),
        None => Value::Null,
    }
}

pub fn analysis(
    bases: Option<&BasisSet>,
    p: &HPolytope,
    rep: &LevelnessReport,
    d: &DeltaVector,
) -> Value {
    json!({
        "delta_c": bases.map(|b| b.delta_c),
        "num_bases": bases.map(|b| b.bases.len()),
        "facets": facets(p),
        "interior_points_n1": big(rep.interior_count1),
        "pseudo_gorenstein": rep.pseudo_gorenstein,
        "level": rep.level,
        "int_star_degree": rep.int_star_degree,
        "reflexive_up_to_translation": rep.reflexive_up_to_translation,
        "delta_vector": big_list(&d.delta),
        "unimodal": edgepoly::lattice::is_unimodal(d),
        "witness": witness(rep.failure_witness.as_ref()),
        "scan_bound_used": rep.scan_bound_used,
    })
}

fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "n/a".to_string(), |x| x.to_string())
}

pub fn analysis_text(
    src: &Source,
    bases: Option<&BasisSet>,
    p: &HPolytope,
    rep: &LevelnessReport,
    d: &DeltaVector,
) -> String {
    let mut out = String::new();
    match (src, bases) {
        (Source::Graph { .. }, Some(b)) => {
            out += &format!("delta_c: {}\nbases: {}\n", b.delta_c, b.bases.len());
        }
        (Source::Veronese(spec), _) => {
            out += &format!("Q#({}; {:?})\n", spec.a(), spec.c());
        }
        _ => {}
    }
    out += "facets:\n";
    for line in facets_text(p).lines() {
        out += &format!("  {line}\n");
    }
    out += &format!("interior lattice points: {}\n", rep.interior_count1);
    out += &format!("pseudo-Gorenstein*: {}\n", rep.pseudo_gorenstein);
    out += &format!(
        "level*: {} (scanned up to N = {})\n",
        rep.level, rep.scan_bound_used
    );
    out += &format!(
        "reflexive up to translation: {}\n",
        opt(rep.reflexive_up_to_translation)
    );
    out += &format!("int* degree: {}\n", opt(rep.int_star_degree));
    out += &format!(
        "delta: {} (unimodal: {})\n",
        join(&d.delta),
        edgepoly::lattice::is_unimodal(d)
    );
    if let Some(w) = &rep.failure_witness {
        out += &format!(
            "witness at N = {}: {:?}\n  {}\n",
            w.level, w.point, w.explanation
        );
    }
    out
}
