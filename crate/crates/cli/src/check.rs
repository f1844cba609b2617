use clap::ValueEnum;
use linminmax::classical::{vertex_disjoint_paths, Digraph};
use linminmax::dilworth::{
    bichain_decomposition, coherent_decomposition, max_antichain, poset_embed, validate_linorder, Linorder,
};
use linminmax::io::{cover_json, matrix_json, parse_instance, rational_json, subspace_json, vector_json, Instance};
use linminmax::lgv::{
    classical_lgv, is_acyclic, lgv_acyclic, lgv_denominator, lgv_graph_instance, lgv_lhs, lgv_rhs,
    principal_minor_determinant, LgvInstance,
};
use linminmax::linalg::{Mat, Rational, Subspace};
use linminmax::matching::{max_matching, rado_transversal, saturated_matching, HallOutcome, RadoOutcome};
use linminmax::menger::{bordered_matrix, cpc, graph_instance, Separator};
use linminmax::ncrank::{default_order, matrix_coherent_decomposition, matrix_min_cover, mpc, mpc_space, ncrank};
use linminmax::relation::{to_matrix_space, MatrixSpace, Relation};
use linminmax::{Error, GenericSampler, Result};
use serde_json::{json, Value};

use crate::report::{Outcome, Report};
use crate::{verify, RunConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    Konig,
    Hall,
    Rado,
    Dilworth,
    Coherent,
    Menger,
    Lgv,
    Ncrank,
    MatrixKonig,
    MatrixDilworth,
    MatrixMenger,
}

impl Theorem {
    fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

pub fn run(theorem: Theorem, text: &str, order: Option<usize>, config: &RunConfig) -> Outcome {
    let result = parse_instance(text).and_then(|inst| {
        let mut rep = Report::new(&format!("check {}", theorem.name()));
        rep.fact("instance", inst.kind());
        let mut s = config.sampler();
        dispatch(theorem, inst, order, config, &mut s, &mut rep).map(|()| rep)
    });
    match result {
        Ok(rep) => Outcome::Done(rep),
        Err(err) => Outcome::Failed(err),
    }
}

fn wrong_kind(theorem: Theorem, inst: &Instance) -> Error {
    Error::InvalidArgument(format!("{} does not apply to a {} instance", theorem.name(), inst.kind()))
}

fn dispatch(
    theorem: Theorem,
    inst: Instance,
    order: Option<usize>,
    config: &RunConfig,
    s: &mut GenericSampler,
    rep: &mut Report,
) -> Result<()> {
    match (theorem, inst) {
        (Theorem::Konig, Instance::Relation { r, .. }) => konig(&r, config, rep),
        (Theorem::Hall, Instance::Relation { r, .. }) => hall(&r, config, rep),
        (Theorem::Rado, Instance::Rado { m, sets }) => rado(m, &sets, config, rep),
        (Theorem::Dilworth, inst @ (Instance::Relation { .. } | Instance::Poset(_))) => {
            dilworth(&linorder_of(&inst)?, config, rep)
        }
        (Theorem::Coherent, inst @ (Instance::Relation { .. } | Instance::Poset(_))) => {
            coherent(&linorder_of(&inst)?, config, s, rep)
        }
        (Theorem::Menger, Instance::Relation { r, e, f }) => {
            let (e, f) = terminals(e, f)?;
            menger(&r, &e, &f, config, s, rep)
        }
        (Theorem::Menger, Instance::Digraph { g, h, k }) => {
            let (r, e, f) = graph_instance(&g, &h, &k, false)?;
            menger(&r, &e, &f, config, s, rep)?;
            let classical = vertex_disjoint_paths(&g, &h, &k)?;
            rep.fact("vertex-disjoint paths", classical.count);
            rep.check("equals the vertex-disjoint path count", rep.value == Some(classical.count));
            Ok(())
        }
        (Theorem::Lgv, Instance::Lgv { inst, x }) => lgv(&inst, x, s, rep),
        (Theorem::Lgv, Instance::Digraph { g, h, k }) => lgv_digraph(&g, &h, &k, rep),
        (Theorem::Ncrank, Instance::MatrixSpace { v, .. }) => nc(&v, s, rep),
        (Theorem::Ncrank, Instance::Relation { r, .. }) => nc(&to_matrix_space(&r), s, rep),
        (Theorem::MatrixKonig, Instance::MatrixSpace { v, .. }) => matrix_konig(&v, s, rep),
        (Theorem::MatrixKonig, Instance::Relation { r, .. }) => matrix_konig(&to_matrix_space(&r), s, rep),
        (Theorem::MatrixDilworth, Instance::MatrixSpace { v, .. }) => matrix_dilworth(&v, order, s, rep),
        (Theorem::MatrixDilworth, inst @ (Instance::Relation { .. } | Instance::Poset(_))) => {
            matrix_dilworth(&to_matrix_space(linorder_of(&inst)?.relation()), order, s, rep)
        }
        (Theorem::MatrixMenger, Instance::MatrixSpace { v, e, f }) => {
            let (e, f) = terminals(e, f)?;
            matrix_menger(&v, &e, &f, s, rep)
        }
        (Theorem::MatrixMenger, Instance::Relation { r, e, f }) => {
            let (e, f) = terminals(e, f)?;
            matrix_menger(&to_matrix_space(&r), &e, &f, s, rep)
        }
        (t, inst) => Err(wrong_kind(t, &inst)),
    }
}

fn terminals(e: Option<Subspace>, f: Option<Subspace>) -> Result<(Subspace, Subspace)> {
    match (e, f) {
        (Some(e), Some(f)) => Ok((e, f)),
        _ => Err(Error::InvalidArgument("instance needs terminal subspaces E and F".into())),
    }
}

fn linorder_of(inst: &Instance) -> Result<Linorder> {
    match inst {
        Instance::Relation { r, .. } => validate_linorder(r),
        Instance::Poset(p) => Ok(poset_embed(p)),
        other => Err(Error::InvalidArgument(format!("{} is not an order", other.kind()))),
    }
}

fn konig(r: &Relation, config: &RunConfig, rep: &mut Report) -> Result<()> {
    let cv = max_matching(r, config.budget)?;
    let (m, c) = (&cv.primal, &cv.dual);
    rep.value = Some(cv.value);
    rep.proved = cv.is_proved();
    rep.check("matching is independent on both sides", verify::matching(r, &m.indices));
    rep.check("cover covers every pair", verify::cover(r, &c.e, &c.f));
    rep.check("matching size equals cover size", m.size() == cv.value && c.size() == cv.value);
    rep.certificate = json!({ "matching": m.indices, "cover": cover_json(&c.e, &c.f) });
    Ok(())
}

fn hall(r: &Relation, config: &RunConfig, rep: &mut Report) -> Result<()> {
    rep.proved = true;
    match saturated_matching(r, config.budget)? {
        HallOutcome::Saturated(m) => {
            rep.value = Some(m.size());
            rep.fact("saturated", true);
            rep.check("matching is independent on both sides", verify::matching(r, &m.indices));
            rep.check("v's form a basis", m.size() == r.n());
            rep.certificate = json!({ "matching": m.indices });
        }
        HallOutcome::Shrunk(w) => {
            let span = Subspace::span(r.n(), &w.s);
            let nbhd = Subspace::span(r.m(), r.pairs().iter().filter(|(v, _)| !span.orthocomplement().contains(v)).map(|(_, w)| w));
            rep.value = Some(nbhd.dim());
            rep.fact("saturated", false);
            rep.fact("dim S", span.dim());
            rep.fact("dim N(S)", nbhd.dim());
            rep.check("neighborhood is smaller than S", nbhd.dim() < span.dim());
            rep.check("reported neighborhood matches", nbhd == w.neighborhood);
            rep.certificate = json!({ "S": subspace_json(&span), "N(S)": subspace_json(&nbhd) });
        }
    }
    Ok(())
}

fn rado(m: usize, sets: &[Vec<linminmax::linalg::Vector>], config: &RunConfig, rep: &mut Report) -> Result<()> {
    rep.proved = true;
    match rado_transversal(m, sets, config.budget)? {
        RadoOutcome::Transversal(ws) => {
            rep.value = Some(ws.len());
            rep.fact("transversal", true);
            let members = ws.iter().zip(sets).all(|(w, set)| Subspace::span(m, set).contains(w) && !w.is_zero());
            rep.check("each vector lies in the span of its set", members);
            rep.check("vectors are independent", verify::independent(m, &ws.iter().collect::<Vec<_>>()));
            rep.certificate = json!({ "transversal": ws.iter().map(vector_json).collect::<Vec<_>>() });
        }
        RadoOutcome::Violation(family) => {
            let union = Subspace::span(m, family.iter().flat_map(|&i| sets[i].iter()));
            rep.value = Some(union.dim());
            rep.fact("transversal", false);
            rep.check("union spans fewer dimensions than sets", union.dim() < family.len());
            rep.certificate = json!({ "violating_sets": family });
        }
    }
    Ok(())
}

fn dilworth(l: &Linorder, config: &RunConfig, rep: &mut Report) -> Result<()> {
    let r = l.relation();
    let ac = max_antichain(l, config.budget)?;
    let bc = bichain_decomposition(l, config.budget)?;
    rep.value = Some(ac.value);
    rep.proved = ac.is_proved() && bc.is_proved();
    rep.fact("bi-chain decomposition size", bc.value);
    rep.check("antichain is an antichain", verify::antichain(r, &ac.primal));
    rep.check("antichain dimension is n minus cover size", ac.primal.dim() + ac.dual.size() == r.n());
    rep.check("cover covers every pair", verify::cover(r, &ac.dual.e, &ac.dual.f));
    let chains_ok = bc.primal.chains.iter().all(|c| c.verify(r))
        && verify::is_basis(r.n(), &bc.primal.all_vs().into_iter().cloned().collect::<Vec<_>>())
        && verify::is_basis(r.n(), &bc.primal.all_ws().into_iter().cloned().collect::<Vec<_>>());
    rep.check("bi-chains are valid and both sides form bases", chains_ok);
    rep.check("decomposition size equals antichain dimension", bc.primal.size() == ac.value);
    rep.certificate = json!({
        "antichain": subspace_json(&ac.primal),
        "cover": cover_json(&ac.dual.e, &ac.dual.f),
        "bichains": bc.primal.chains.iter().map(|c| json!({
            "w": c.ws.iter().map(vector_json).collect::<Vec<_>>(),
            "v": c.vs.iter().map(vector_json).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    });
    Ok(())
}

fn coherent(l: &Linorder, config: &RunConfig, s: &mut GenericSampler, rep: &mut Report) -> Result<()> {
    let r = l.relation();
    let n = r.n();
    let cd = coherent_decomposition(l, s, config.budget)?;
    let d = &cd.primal;
    let space = to_matrix_space(r);
    rep.value = Some(cd.value);
    rep.proved = cd.is_proved();
    rep.check("matrix lies in the span of the relation", space.contains(&d.a));
    rep.check("chain vectors form a basis", verify::is_basis(n, &d.vectors()));
    rep.check("cover covers every pair", verify::cover(r, &cd.dual.e, &cd.dual.f));
    rep.check("chain count is n minus cover size", d.size() + cd.dual.size() == n);
    rep.certificate = json!({
        "A": matrix_json(&d.a),
        "chains": d.chains.iter().map(|(v, len)| json!({ "seed": vector_json(v), "length": len })).collect::<Vec<_>>(),
        "cover": cover_json(&cd.dual.e, &cd.dual.f),
    });
    Ok(())
}

fn separator_json(sep: &Separator) -> Value {
    json!({ "E~": subspace_json(&sep.e_tilde), "F~": subspace_json(&sep.f_tilde), "size": sep.size() })
}

fn menger(
    r: &Relation,
    e: &Subspace,
    f: &Subspace,
    config: &RunConfig,
    s: &mut GenericSampler,
    rep: &mut Report,
) -> Result<()> {
    let n = r.n();
    let cv = cpc(r, e, f, s, config.budget)?;
    let sep = &cv.dual;
    rep.value = Some(cv.value);
    rep.proved = cv.is_proved();
    rep.check("matrix lies in the span of the relation", to_matrix_space(r).contains(&cv.primal));
    rep.check(
        "bordered rank minus n equals the value",
        bordered_matrix(&cv.primal, e, f).rank() == n + cv.value,
    );
    rep.check("separator axioms hold", verify::separator(r, e, f, &sep.e_tilde, &sep.f_tilde));
    rep.check("separator size equals the value", verify::intersection_dim(&sep.e_tilde, &sep.f_tilde) == cv.value);
    rep.certificate = json!({ "A": matrix_json(&cv.primal), "separator": separator_json(sep) });
    Ok(())
}

fn lgv(inst: &LgvInstance, x: Option<Vec<Rational>>, s: &mut GenericSampler, rep: &mut Report) -> Result<()> {
    let given = x.is_some();
    let mut point = x;
    let mut lhs = None;
    for _ in 0..s.trials() {
        let pt = point.take().unwrap_or_else(|| s.coeffs(inst.r()));
        match lgv_lhs(inst, &pt) {
            Ok(v) => {
                lhs = Some(v);
                point = Some(pt);
                break;
            }
            Err(Error::Singular) if !given => continue,
            Err(e) => return Err(e),
        }
    }
    let (Some(lhs), Some(x)) = (lhs, point) else {
        return Err(Error::Singular);
    };
    let rhs = lgv_rhs(inst, &x)?;
    let den = lgv_denominator(inst, &x)?;
    rep.proved = true;
    rep.fact("lhs", rational_json(&lhs));
    rep.fact("rhs", rational_json(&rhs));
    rep.fact("denominator", rational_json(&den));
    rep.check("lhs equals rhs", lhs == rhs);
    rep.check("denominator equals det(I - diag(x) V^T W)", den == principal_minor_determinant(inst, &x)?);
    let acyclic = is_acyclic(&inst.relation());
    rep.fact("acyclic", acyclic);
    if acyclic {
        let (l2, r2) = lgv_acyclic(inst, &x)?;
        rep.check("acyclic denominator is 1", den == Rational::from_integer(1.into()));
        rep.check("truncated series agrees", l2 == lhs && r2 == rhs);
    }
    rep.certificate = json!({ "x": x.iter().map(rational_json).collect::<Vec<_>>() });
    Ok(())
}

fn lgv_digraph(g: &Digraph, h: &[usize], k: &[usize], rep: &mut Report) -> Result<()> {
    let (det_m, paths) = classical_lgv(g, h, k)?;
    let (inst, x) = lgv_graph_instance(g, h, k)?;
    let lhs = lgv_lhs(&inst, &x)?;
    let rhs = lgv_rhs(&inst, &x)?;
    rep.proved = true;
    rep.fact("det M", rational_json(&det_m));
    rep.fact("signed path sum", rational_json(&paths));
    rep.fact("linear lhs", rational_json(&lhs));
    rep.check("det M equals the signed disjoint-path sum", det_m == paths);
    rep.check("linear form agrees with det M", lhs == det_m && rhs == det_m);
    Ok(())
}

fn primal_checks(rep: &mut Report, v: &MatrixSpace, r: usize, x: &Mat, rank: usize) {
    rep.check("primal lies in the blow-up", verify::in_blowup(v, r, x));
    rep.check("primal has the claimed rank", x.rank() == rank);
}

fn nc(v: &MatrixSpace, s: &mut GenericSampler, rep: &mut Report) -> Result<()> {
    let n = v.cols();
    let r = default_order(n);
    let cv = ncrank(v, s)?;
    let d = &cv.dual;
    rep.value = Some(cv.value);
    rep.proved = cv.is_proved();
    rep.fact("blow-up order", r);
    rep.fact("upper bound", n - d.defect());
    primal_checks(rep, v, r, &cv.primal, r * cv.value);
    rep.check("dual image dimension is as claimed", verify::image_dim(v, &d.e) == d.image_dim);
    rep.check("value does not exceed the dual bound", cv.value + d.defect() <= n);
    rep.certificate = json!({
        "blowup_element": matrix_json(&cv.primal),
        "shrunk": { "E": subspace_json(&d.e), "image_dim": d.image_dim, "defect": d.defect() },
    });
    Ok(())
}

fn matrix_konig(v: &MatrixSpace, s: &mut GenericSampler, rep: &mut Report) -> Result<()> {
    let r = default_order(v.cols());
    let cv = matrix_min_cover(v, s)?;
    rep.value = Some(cv.value);
    rep.proved = cv.is_proved();
    rep.fact("blow-up order", r);
    rep.fact("blow-up rank", cv.primal.rank());
    rep.check("primal lies in the blow-up", verify::in_blowup(v, r, &cv.primal));
    rep.check("cover satisfies V[E^⊥] ⊆ F", verify::cover_space(v, &cv.dual.e, &cv.dual.f));
    rep.check("blow-up rank is at most r times the cover", cv.primal.rank() <= r * cv.dual.size());
    if cv.is_proved() {
        rep.check("blow-up rank is r times the cover", cv.primal.rank() == r * cv.dual.size());
    }
    rep.certificate = json!({ "blowup_element": matrix_json(&cv.primal), "cover": cover_json(&cv.dual.e, &cv.dual.f) });
    Ok(())
}

fn matrix_dilworth(v: &MatrixSpace, order: Option<usize>, s: &mut GenericSampler, rep: &mut Report) -> Result<()> {
    let n = v.cols();
    let r = order.unwrap_or_else(|| default_order(n));
    let cv = matrix_coherent_decomposition(v, r, s)?;
    let d = &cv.primal;
    rep.value = Some(cv.value);
    rep.proved = cv.is_proved();
    rep.fact("blow-up order", r);
    rep.fact("antichain dimension", n - cv.dual.size());
    rep.check("matrix lies in the blow-up", verify::in_blowup(v, r, &d.a));
    rep.check("chain vectors form a basis", verify::is_basis(n * r, &d.vectors()));
    rep.check("cover satisfies V[E^⊥] ⊆ F", verify::cover_space(v, &cv.dual.e, &cv.dual.f));
    rep.check("size is r times the antichain dimension", d.size() == r * (n - cv.dual.size()));
    rep.certificate = json!({
        "A": matrix_json(&d.a),
        "chains": d.chains.iter().map(|(v, len)| json!({ "seed": vector_json(v), "length": len })).collect::<Vec<_>>(),
        "cover": cover_json(&cv.dual.e, &cv.dual.f),
    });
    Ok(())
}

fn matrix_menger(v: &MatrixSpace, e: &Subspace, f: &Subspace, s: &mut GenericSampler, rep: &mut Report) -> Result<()> {
    let n = v.cols();
    let cv = mpc(v, e, f, s)?;
    let w = mpc_space(v, e, f)?;
    let r = default_order(w.cols());
    let sep = &cv.dual;
    rep.value = Some(cv.value);
    rep.proved = cv.is_proved();
    rep.fact("blow-up order", r);
    rep.check("primal lies in the blow-up of the bordered space", verify::in_blowup(&w, r, &cv.primal));
    rep.check("primal rank is at least r(n + value)", cv.primal.rank() >= r * (n + cv.value));
    rep.check("separator axioms hold", verify::separator_space(v, e, f, &sep.e_tilde, &sep.f_tilde));
    rep.check(
        "separator size bounds the value",
        verify::intersection_dim(&sep.e_tilde, &sep.f_tilde) >= cv.value,
    );
    if cv.is_proved() {
        rep.check("separator size equals the value", sep.size() == cv.value);
    }
    rep.certificate = json!({ "blowup_element": matrix_json(&cv.primal), "separator": separator_json(sep) });
    Ok(())
}
