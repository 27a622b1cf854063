use std::path::Path;

use serde::Deserialize;

use edgepoly::{
    enumerate_bases, facets, veronese_polytope, BasisSet, BoundVector, Graph, HPolytope, Limits,
    VeroneseSpec,
};

use crate::Failure;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default)]
    c: Option<Vec<u32>>,
}

/// Where a polytope comes from.
pub enum Source {
    Graph {
        graph: Graph,
        c: Option<BoundVector>,
    },
    Veronese(VeroneseSpec),
}

pub fn load(
    path: Option<&Path>,
    c: Option<&[u32]>,
    veronese: Option<&[u32]>,
) -> Result<Source, Failure> {
    if let Some(v) = veronese {
        let (&a, c) = v
            .split_first()
            .ok_or_else(|| Failure::Input("--veronese needs a,c1,...,cn".into()))?;
        return Ok(Source::Veronese(VeroneseSpec::new(a, c.to_vec())?));
    }
    let path = path.ok_or_else(|| Failure::Input("give a graph file or --veronese".into()))?;
    let raw = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    let file: GraphFile = serde_json::from_str(&raw)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let graph = Graph::new(
        file.n,
        file.edges.iter().map(|&[i, j]| (i, j)).collect::<Vec<_>>(),
    )?;
    let c = match c.map(<[u32]>::to_vec).or(file.c) {
        Some(c) => {
            let c = BoundVector::new(c)?;
            if c.len() != graph.n() {
                return Err(Failure::Input(format!(
                    "bound vector has {} entries for {} vertices",
                    c.len(),
                    graph.n()
                )));
            }
            Some(c)
        }
        None => None,
    };
    Ok(Source::Graph { graph, c })
}

impl Source {
    pub fn graph(&self) -> Result<&Graph, Failure> {
        match self {
            Source::Graph { graph, .. } => Ok(graph),
            Source::Veronese(_) => Err(Failure::Input("this command needs a graph".into())),
        }
    }

    /// The polytope, with the bases it came from when built from a graph.
    pub fn polytope(&self, limits: &Limits) -> Result<(HPolytope, Option<BasisSet>), Failure> {
        match self {
            Source::Veronese(spec) => Ok((veronese_polytope(spec), None)),
            Source::Graph { graph, c } => {
                let c = c.as_ref().ok_or_else(|| {
                    Failure::Input("no bound vector: add \"c\" to the file or pass --c".into())
                })?;
                let bases = enumerate_bases(graph, c, limits)?;
                Ok((facets(&bases)?, Some(bases)))
            }
        }
    }
}
