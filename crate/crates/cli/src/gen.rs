use clap::ValueEnum;
use linminmax::generate::{param, Generator};
use linminmax::io::{instance_json, Instance};
use linminmax::{Error, Result};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Relation,
    Linorder,
    Poset,
    Digraph,
    Matrixspace,
    Lgv,
}

fn parse_params(raw: &[String]) -> Result<Vec<(String, String)>> {
    raw.iter()
        .map(|kv| {
            kv.split_once('=')
                .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                .ok_or_else(|| Error::InvalidArgument(format!("expected key=value, got {kv:?}")))
        })
        .collect()
}

fn prob(params: &[(String, String)], default: f64) -> Result<f64> {
    match params.iter().find(|(k, _)| k == "p") {
        None => Ok(default),
        Some((_, v)) => v
            .parse::<f64>()
            .ok()
            .filter(|p| (0.0..=1.0).contains(p))
            .ok_or_else(|| Error::InvalidArgument(format!("p={v} is not a probability"))),
    }
}

const KEYS: &[(Kind, &[&str])] = &[
    (Kind::Relation, &["n", "m", "r", "e", "f"]),
    (Kind::Linorder, &["size", "p"]),
    (Kind::Poset, &["size", "p"]),
    (Kind::Digraph, &["size", "p", "terminals", "dag", "weighted"]),
    (Kind::Matrixspace, &["m", "n", "d", "e", "f"]),
    (Kind::Lgv, &["n", "r", "k"]),
];

pub fn run(kind: Kind, raw: &[String], seed: u64) -> Result<Value> {
    let params = parse_params(raw)?;
    let allowed = KEYS.iter().find(|(k, _)| *k == kind).map(|(_, ks)| *ks).unwrap_or(&[]);
    if let Some((k, _)) = params.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
        return Err(Error::InvalidArgument(format!(
            "unknown parameter {k:?}; expected one of {}",
            allowed.join(", ")
        )));
    }
    let p = |key, default| param(&params, key, default);
    let mut g = Generator::new(seed);
    let inst = match kind {
        Kind::Relation => {
            let (n, m) = (p("n", 3)?, p("m", 3)?);
            let r = g.relation(n, m, p("r", 5)?);
            let e = params.iter().any(|(k, _)| k == "e").then(|| p("e", 0)).transpose()?;
            let f = params.iter().any(|(k, _)| k == "f").then(|| p("f", 0)).transpose()?;
            if (e.is_some() || f.is_some()) && n != m {
                return Err(Error::InvalidArgument("terminal subspaces need n = m".into()));
            }
            Instance::Relation {
                e: e.map(|d| g.subspace(n, d.min(n))),
                f: f.map(|d| g.subspace(n, d.min(n))),
                r,
            }
        }
        Kind::Linorder => {
            let l = g.linorder(p("size", 4)?, prob(&params, 0.4)?)?;
            Instance::Relation {
                r: l.into_relation(),
                e: None,
                f: None,
            }
        }
        Kind::Poset => Instance::Poset(g.poset(p("size", 5)?, prob(&params, 0.4)?)),
        Kind::Digraph => {
            let size = p("size", 6)?;
            let pr = prob(&params, 0.3)?;
            let graph = if p("dag", 0)? != 0 || p("weighted", 0)? != 0 {
                g.dag(size, pr, p("weighted", 0)? != 0)
            } else {
                g.digraph(size, pr)
            };
            let t = p("terminals", 2)?;
            Instance::Digraph {
                h: g.vertices(size, t),
                k: g.vertices(size, t),
                g: graph,
            }
        }
        Kind::Matrixspace => {
            let (m, n) = (p("m", 3)?, p("n", 3)?);
            let v = g.matrix_space(m, n, p("d", 2)?);
            let e = params.iter().any(|(k, _)| k == "e").then(|| p("e", 0)).transpose()?;
            let f = params.iter().any(|(k, _)| k == "f").then(|| p("f", 0)).transpose()?;
            Instance::MatrixSpace {
                e: e.map(|d| g.subspace(n, d.min(n))),
                f: f.map(|d| g.subspace(n, d.min(n))),
                v,
            }
        }
        Kind::Lgv => {
            let inst = g.lgv(p("n", 3)?, p("r", 3)?, p("k", 2)?);
            Instance::Lgv { inst, x: None }
        }
    };
    Ok(instance_json(&inst))
}
