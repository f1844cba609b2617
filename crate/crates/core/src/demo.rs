//! The worked instances: a four-element linorder, a seven-dimensional Menger
//! instance, and skew-symmetric matrix spaces.

use crate::certificate::Budget;
use crate::dilworth::{
    bichain_decomposition, coherent_decomposition, max_antichain, validate_linorder, w_chain_check, BiPath,
};
use crate::error::{Error, Result};
use crate::linalg::{Mat, Subspace, Vector};
use crate::menger::{cpc, independent_bipaths_check, min_separator};
use crate::ncrank::{has_full_ncrank, matrix_coherent_decomposition, mpc, ncrank, FullRankOutcome};
use crate::relation::{sample_element, to_matrix_space, MatrixSpace, Relation};
use crate::sampler::GenericSampler;

/// `{(e1,e2), (e1,e3), (e1,e4)}` in `F^4`: one element above a three-element antichain.
pub fn linorder_f4() -> Relation {
    Relation::from_index_pairs(4, 4, &[(0, 1), (0, 2), (0, 3)])
}

/// The two `w`-chains `(e1, e2)` and `(e1 + e3, e4)`.
pub fn f4_w_chains() -> Vec<Vec<Vector>> {
    vec![
        vec![Vector::unit(4, 0), Vector::unit(4, 1)],
        vec![Vector::from_ints(&[1, 0, 1, 0]), Vector::unit(4, 3)],
    ]
}

/// `(R, E, F)` in `F^7` with `E = span(e1,e2)`, `F = span(e6,e7)`.
pub fn menger_f7() -> (Relation, Subspace, Subspace) {
    let v = |xs: [i64; 7]| Vector::from_ints(&xs);
    let r = Relation::new(
        7,
        7,
        vec![
            (v([1, 0, 0, 0, 0, 0, 0]), v([0, 0, 1, 1, 0, 0, 0])),
            (v([0, 1, 0, 0, 0, 0, 0]), v([0, 0, 1, -1, 0, 0, 0])),
            (v([0, 0, 0, 1, 1, 0, 0]), v([0, 0, 0, 0, 0, 1, 0])),
            (v([0, 0, 0, 1, -1, 0, 0]), v([0, 0, 0, 0, 0, 0, 1])),
        ],
    )
    .expect("fixed dimensions");
    (r, Subspace::coordinate(7, &[0, 1]), Subspace::coordinate(7, &[5, 6]))
}

/// The two bi-paths `(e1, e1, e3+e4, e4+e5, e6, e6)` and `(e2, e2, e3−e4, e4−e5, e7, e7)`.
pub fn f7_bipath_sequences() -> Vec<Vec<Vector>> {
    let v = |xs: [i64; 7]| Vector::from_ints(&xs);
    vec![
        vec![
            v([1, 0, 0, 0, 0, 0, 0]),
            v([1, 0, 0, 0, 0, 0, 0]),
            v([0, 0, 1, 1, 0, 0, 0]),
            v([0, 0, 0, 1, 1, 0, 0]),
            v([0, 0, 0, 0, 0, 1, 0]),
            v([0, 0, 0, 0, 0, 1, 0]),
        ],
        vec![
            v([0, 1, 0, 0, 0, 0, 0]),
            v([0, 1, 0, 0, 0, 0, 0]),
            v([0, 0, 1, -1, 0, 0, 0]),
            v([0, 0, 0, 1, -1, 0, 0]),
            v([0, 0, 0, 0, 0, 0, 1]),
            v([0, 0, 0, 0, 0, 0, 1]),
        ],
    ]
}

/// All `n × n` skew-symmetric matrices, basis `E_ij − E_ji` for `i < j`.
pub fn skew_symmetric_space(n: usize) -> MatrixSpace {
    let mut basis = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut a = Mat::zeros(n, n);
            a.set(i, j, crate::linalg::q(1));
            a.set(j, i, crate::linalg::q(-1));
            basis.push(a);
        }
    }
    MatrixSpace::from_spanning(n, n, basis).expect("square generators")
}

/// Quantities and pass/fail checks from running one worked instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DemoReport {
    pub name: String,
    pub facts: Vec<(String, String)>,
    pub checks: Vec<(String, bool)>,
}

impl DemoReport {
    fn new(name: &str) -> Self {
        DemoReport {
            name: name.into(),
            facts: Vec::new(),
            checks: Vec::new(),
        }
    }

    fn fact(&mut self, key: &str, value: impl ToString) {
        self.facts.push((key.into(), value.to_string()));
    }

    fn check(&mut self, key: &str, ok: bool) {
        self.checks.push((key.into(), ok));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let facts: serde_json::Map<String, serde_json::Value> = self
            .facts
            .iter()
            .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
            .collect();
        let checks: serde_json::Map<String, serde_json::Value> = self
            .checks
            .iter()
            .map(|(k, ok)| (k.clone(), serde_json::Value::Bool(*ok)))
            .collect();
        serde_json::json!({ "demo": self.name, "facts": facts, "checks": checks, "passed": self.passed() })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("demo {}\n", self.name);
        for (k, v) in &self.facts {
            out.push_str(&format!("  {k}: {v}\n"));
        }
        for (k, ok) in &self.checks {
            out.push_str(&format!("  [{}] {k}\n", if *ok { "ok" } else { "FAIL" }));
        }
        out
    }
}

pub const DEMO_NAMES: [&str; 3] = ["linorder-f4", "menger-f7", "skew3"];

pub fn run_demo(name: &str, s: &mut GenericSampler, budget: Budget) -> Result<DemoReport> {
    match name {
        "linorder-f4" => demo_linorder_f4(s, budget),
        "menger-f7" => demo_menger_f7(s, budget),
        "skew3" => demo_skew3(s),
        other => Err(Error::InvalidArgument(format!(
            "unknown demo {other:?}; expected one of {}",
            DEMO_NAMES.join(", ")
        ))),
    }
}

fn demo_linorder_f4(s: &mut GenericSampler, budget: Budget) -> Result<DemoReport> {
    let mut rep = DemoReport::new("linorder-f4");
    let l = validate_linorder(&linorder_f4())?;
    let ac = max_antichain(&l, budget)?;
    let bc = bichain_decomposition(&l, budget)?;
    let cd = coherent_decomposition(&l, s, budget)?;
    let w_chains = w_chain_check(&l, &f4_w_chains());
    let md = matrix_coherent_decomposition(&to_matrix_space(l.relation()), 3, s)?;
    rep.fact("max antichain dimension", ac.value);
    rep.fact("min bi-chain decomposition", bc.value);
    rep.fact("min coherent decomposition", cd.value);
    rep.fact("two w-chains span F^4", w_chains);
    rep.fact("coherent decomposition of F^12 at r = 3", md.value);
    rep.check("antichain dimension is 3", ac.value == 3 && ac.is_proved());
    rep.check("bi-chain decomposition has size 3", bc.value == 3 && bc.primal.verify(l.relation()));
    rep.check("coherent decomposition has size 3", cd.value == 3);
    rep.check("w-chains undercount the antichain", w_chains && 2 < ac.value);
    rep.check("matrix decomposition has size 9", md.value == 9 && md.is_proved());
    Ok(rep)
}

fn demo_menger_f7(s: &mut GenericSampler, budget: Budget) -> Result<DemoReport> {
    let mut rep = DemoReport::new("menger-f7");
    let (r, e, f) = menger_f7();
    let sep = min_separator(&r, &e, &f, budget)?;
    let c = cpc(&r, &e, &f, s, budget)?;
    let paths: Option<Vec<BiPath>> = f7_bipath_sequences()
        .iter()
        .map(|seq| BiPath::from_sequence(&r, seq))
        .collect();
    let independent = paths.is_some_and(|p| independent_bipaths_check(&r, &e, &f, &p));
    let m = mpc(&to_matrix_space(&r), &e, &f, s)?;
    rep.fact("coherent path capacity", c.value);
    rep.fact("separator size", sep.size());
    rep.fact("separator E~ dimension", sep.e_tilde.dim());
    rep.fact("separator F~ dimension", sep.f_tilde.dim());
    rep.fact("two listed bi-paths independent", independent);
    rep.fact("matricial path capacity", m.value);
    rep.check("capacity is 1", c.value == 1 && c.is_proved());
    rep.check(
        "separator is span(e1..e4), span(e4..e7)",
        sep.e_tilde == Subspace::coordinate(7, &[0, 1, 2, 3])
            && sep.f_tilde == Subspace::coordinate(7, &[3, 4, 5, 6])
            && sep.size() == 1,
    );
    rep.check("two independent bi-paths exist", independent);
    rep.check("matricial capacity agrees", m.value == 1 && m.is_proved());
    Ok(rep)
}

fn demo_skew3(s: &mut GenericSampler) -> Result<DemoReport> {
    let mut rep = DemoReport::new("skew3");
    let v = skew_symmetric_space(3);
    let rank = (0..s.trials())
        .map(|_| sample_element(&v, s).rank())
        .max()
        .unwrap_or(0);
    let nc = ncrank(&v, s)?;
    let full = has_full_ncrank(&v, s)?;
    rep.fact("max rank of an element", rank);
    rep.fact("noncommutative rank", nc.value);
    rep.fact("largest defect found", nc.dual.defect());
    rep.check("every element is singular", rank == 2);
    rep.check("noncommutative rank is 3", nc.value == 3 && nc.is_proved());
    rep.check("no shrunk subspace", matches!(full, FullRankOutcome::Full(_)));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_demos_pass() {
        for name in DEMO_NAMES {
            let rep = run_demo(name, &mut GenericSampler::with_seed(1), Budget::default()).unwrap();
            assert!(rep.passed(), "{}", rep.to_text());
        }
        assert!(run_demo("nope", &mut GenericSampler::with_seed(1), Budget::default()).is_err());
    }
}
