//! JSON instance files and certificate encoding.
//!
//! Rationals are strings `"p/q"` (or `"p"`), vectors are arrays of them and
//! matrices are row-major nested arrays.

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::classical::Digraph;
use crate::dilworth::Poset;
use crate::error::{Error, Result};
use crate::lgv::LgvInstance;
use crate::linalg::{format_rational, parse_rational, Mat, Rational, Subspace, Vector};
use crate::relation::{MatrixSpace, Relation};

type JVec = Vec<String>;
type JMat = Vec<Vec<String>>;

pub fn rational_json(x: &Rational) -> Value {
    Value::String(format_rational(x))
}

pub fn vector_json(v: &Vector) -> Value {
    Value::Array(v.entries().iter().map(rational_json).collect())
}

pub fn matrix_json(a: &Mat) -> Value {
    Value::Array((0..a.rows()).map(|i| vector_json(&a.row(i))).collect())
}

pub fn subspace_json(s: &Subspace) -> Value {
    Value::Array(s.basis().iter().map(vector_json).collect())
}

fn to_jvec(v: &Vector) -> JVec {
    v.entries().iter().map(format_rational).collect()
}

fn to_jmat(a: &Mat) -> JMat {
    (0..a.rows()).map(|i| to_jvec(&a.row(i))).collect()
}

fn parse_vec(v: &[String], dim: usize) -> Result<Vector> {
    if v.len() != dim {
        return Err(Error::Parse(format!("vector of length {}, expected {dim}", v.len())));
    }
    Ok(Vector::new(v.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?))
}

fn parse_mat(rows: &[Vec<String>], nrows: usize, ncols: usize) -> Result<Mat> {
    if rows.len() != nrows {
        return Err(Error::Parse(format!("matrix with {} rows, expected {nrows}", rows.len())));
    }
    let rows = rows
        .iter()
        .map(|r| parse_vec(r, ncols).map(Vector::into_entries))
        .collect::<Result<Vec<_>>>()?;
    if nrows == 0 {
        return Ok(Mat::zeros(0, ncols));
    }
    Ok(Mat::from_rows(rows))
}

fn parse_basis(b: &[JVec], dim: usize) -> Result<Subspace> {
    let vs = b.iter().map(|v| parse_vec(v, dim)).collect::<Result<Vec<_>>>()?;
    Ok(Subspace::span(dim, &vs))
}

#[derive(Serialize, Deserialize)]
struct RelationDoc {
    n: usize,
    m: usize,
    pairs: Vec<(JVec, JVec)>,
    #[serde(rename = "E", default, skip_serializing_if = "Option::is_none")]
    e: Option<Vec<JVec>>,
    #[serde(rename = "F", default, skip_serializing_if = "Option::is_none")]
    f: Option<Vec<JVec>>,
}

#[derive(Serialize, Deserialize)]
struct DigraphDoc {
    size: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<String>>,
    #[serde(rename = "H", default)]
    h: Vec<usize>,
    #[serde(rename = "K", default)]
    k: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct SpaceDoc {
    m: usize,
    n: usize,
    basis: Vec<JMat>,
    #[serde(rename = "E", default, skip_serializing_if = "Option::is_none")]
    e: Option<Vec<JVec>>,
    #[serde(rename = "F", default, skip_serializing_if = "Option::is_none")]
    f: Option<Vec<JVec>>,
}

#[derive(Serialize, Deserialize)]
struct LgvDoc {
    #[serde(rename = "V")]
    v: JMat,
    #[serde(rename = "W")]
    w: JMat,
    #[serde(rename = "A")]
    a: JMat,
    #[serde(rename = "B")]
    b: JMat,
    /// Column counts, needed when a matrix has no rows.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    x: Option<JVec>,
}

#[derive(Serialize, Deserialize)]
struct RadoDoc {
    m: usize,
    sets: Vec<Vec<JVec>>,
}

/// Any instance file understood by the tools.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Relation {
        r: Relation,
        e: Option<Subspace>,
        f: Option<Subspace>,
    },
    Poset(Poset),
    Digraph {
        g: Digraph,
        h: Vec<usize>,
        k: Vec<usize>,
    },
    MatrixSpace {
        v: MatrixSpace,
        e: Option<Subspace>,
        f: Option<Subspace>,
    },
    Lgv {
        inst: LgvInstance,
        x: Option<Vec<Rational>>,
    },
    Rado {
        m: usize,
        sets: Vec<Vec<Vector>>,
    },
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Relation { .. } => "relation",
            Instance::Poset(_) => "poset",
            Instance::Digraph { .. } => "digraph",
            Instance::MatrixSpace { .. } => "matrixspace",
            Instance::Lgv { .. } => "lgv",
            Instance::Rado { .. } => "rado",
        }
    }
}

fn de<T: for<'a> Deserialize<'a>>(v: Value) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))
}

/// Parse an instance, detecting its kind from the keys present.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let obj: &Map<String, Value> = value
        .as_object()
        .ok_or_else(|| Error::Parse("instance must be a JSON object".into()))?;
    let has = |k: &str| obj.contains_key(k);
    if has("pairs") {
        let d: RelationDoc = de(value)?;
        let pairs = d
            .pairs
            .iter()
            .map(|(v, w)| Ok((parse_vec(v, d.n)?, parse_vec(w, d.m)?)))
            .collect::<Result<Vec<_>>>()?;
        let r = Relation::new(d.n, d.m, pairs).map_err(|e| Error::Parse(e.to_string()))?;
        let e = d.e.as_deref().map(|b| parse_basis(b, d.n)).transpose()?;
        let f = d.f.as_deref().map(|b| parse_basis(b, d.m)).transpose()?;
        Ok(Instance::Relation { r, e, f })
    } else if has("gt") {
        let p: Poset = de(value)?;
        Poset::new(p.size(), p.gt().to_vec())
            .map(Instance::Poset)
            .map_err(|e| Error::Parse(e.to_string()))
    } else if has("edges") {
        let d: DigraphDoc = de(value)?;
        let g = match &d.weights {
            Some(ws) => {
                let ws = ws.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
                Digraph::weighted(d.size, d.edges, ws)
            }
            None => Digraph::new(d.size, d.edges),
        }
        .map_err(|e| Error::Parse(e.to_string()))?;
        if d.h.iter().chain(&d.k).any(|&x| x >= d.size) {
            return Err(Error::Parse("terminal vertex out of range".into()));
        }
        Ok(Instance::Digraph { g, h: d.h, k: d.k })
    } else if has("basis") {
        let d: SpaceDoc = de(value)?;
        let mats = d.basis.iter().map(|b| parse_mat(b, d.m, d.n)).collect::<Result<Vec<_>>>()?;
        let v = MatrixSpace::from_spanning(d.m, d.n, mats)?;
        let e = d.e.as_deref().map(|b| parse_basis(b, d.n)).transpose()?;
        let f = d.f.as_deref().map(|b| parse_basis(b, d.n)).transpose()?;
        Ok(Instance::MatrixSpace { v, e, f })
    } else if has("V") {
        let d: LgvDoc = de(value)?;
        let n = d.v.len();
        let r = d.r.or_else(|| d.v.first().map(Vec::len)).unwrap_or(0);
        let k = d.k.or_else(|| d.a.first().map(Vec::len)).unwrap_or(0);
        let inst = LgvInstance::new(
            parse_mat(&d.v, n, r)?,
            parse_mat(&d.w, n, r)?,
            parse_mat(&d.a, n, k)?,
            parse_mat(&d.b, n, k)?,
        )
        .map_err(|e| Error::Parse(e.to_string()))?;
        let x = d.x.as_deref().map(|x| parse_vec(x, r).map(Vector::into_entries)).transpose()?;
        Ok(Instance::Lgv { inst, x })
    } else if has("sets") {
        let d: RadoDoc = de(value)?;
        let sets = d
            .sets
            .iter()
            .map(|s| s.iter().map(|v| parse_vec(v, d.m)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Instance::Rado { m: d.m, sets })
    } else {
        Err(Error::Parse(
            "unrecognised instance: expected one of pairs, gt, edges, basis, V, sets".into(),
        ))
    }
}

fn basis_doc(s: &Subspace) -> Vec<JVec> {
    s.basis().iter().map(to_jvec).collect()
}

/// Inverse of [`parse_instance`].
pub fn instance_json(inst: &Instance) -> Value {
    let out = match inst {
        Instance::Relation { r, e, f } => serde_json::to_value(RelationDoc {
            n: r.n(),
            m: r.m(),
            pairs: r.pairs().iter().map(|(v, w)| (to_jvec(v), to_jvec(w))).collect(),
            e: e.as_ref().map(basis_doc),
            f: f.as_ref().map(basis_doc),
        }),
        Instance::Poset(p) => serde_json::to_value(p),
        Instance::Digraph { g, h, k } => serde_json::to_value(DigraphDoc {
            size: g.size,
            edges: g.edges.clone(),
            weights: g.weights.as_ref().map(|ws| ws.iter().map(format_rational).collect()),
            h: h.clone(),
            k: k.clone(),
        }),
        Instance::MatrixSpace { v, e, f } => serde_json::to_value(SpaceDoc {
            m: v.rows(),
            n: v.cols(),
            basis: v.basis().iter().map(to_jmat).collect(),
            e: e.as_ref().map(basis_doc),
            f: f.as_ref().map(basis_doc),
        }),
        Instance::Lgv { inst, x } => serde_json::to_value(LgvDoc {
            v: to_jmat(&inst.v),
            w: to_jmat(&inst.w),
            a: to_jmat(&inst.a),
            b: to_jmat(&inst.b),
            r: Some(inst.r()),
            k: Some(inst.k()),
            x: x.as_ref().map(|x| x.iter().map(format_rational).collect()),
        }),
        Instance::Rado { m, sets } => serde_json::to_value(RadoDoc {
            m: *m,
            sets: sets.iter().map(|s| s.iter().map(to_jvec).collect()).collect(),
        }),
    };
    out.expect("instance documents always serialize")
}

/// `{"E": basis, "F": basis}` with a size.
pub fn cover_json(e: &Subspace, f: &Subspace) -> Value {
    json!({ "E": subspace_json(e), "F": subspace_json(f), "size": e.dim() + f.dim() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::demo::{menger_f7, skew_symmetric_space};
    use crate::linalg::frac;

    fn roundtrip(inst: Instance) {
        let text = instance_json(&inst).to_string();
        assert_eq!(parse_instance(&text).unwrap(), inst);
    }

    #[test]
    fn roundtrips() {
        let (r, e, f) = menger_f7();
        roundtrip(Instance::Relation { r, e: Some(e), f: Some(f) });
        roundtrip(Instance::Poset(Poset::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap()));
        let g = Digraph::weighted(3, vec![(0, 1), (1, 2)], vec![frac(1, 2), frac(-3, 1)]).unwrap();
        roundtrip(Instance::Digraph { g, h: vec![0], k: vec![2] });
        roundtrip(Instance::MatrixSpace { v: skew_symmetric_space(3), e: None, f: None });
        let inst = LgvInstance::new(Mat::identity(2), Mat::identity(2), Mat::zeros(2, 0), Mat::zeros(2, 0)).unwrap();
        roundtrip(Instance::Lgv { inst, x: Some(vec![frac(1, 3), frac(2, 1)]) });
        roundtrip(Instance::Rado { m: 2, sets: vec![vec![Vector::from_ints(&[1, 0])], vec![]] });
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(parse_instance("[1,2]"), Err(Error::Parse(_))));
        assert!(matches!(parse_instance(r#"{"foo":1}"#), Err(Error::Parse(_))));
        assert!(matches!(
            parse_instance(r#"{"n":2,"m":2,"pairs":[[["1"],["0","1"]]]}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_instance(r#"{"n":1,"m":1,"pairs":[[["1/0"],["1"]]]}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(parse_instance(r#"{"size":2,"gt":[[0,0]]}"#), Err(Error::Parse(_))));
    }
}
