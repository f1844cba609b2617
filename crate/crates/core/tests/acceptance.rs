//! Acceptance criteria 1-9: one PASS/FAIL line each, with a pinned time limit.

use std::time::{Duration, Instant};

use linminmax::classical::{bipartite_max_matching, hall_check, poset_dilworth, vertex_disjoint_paths};
use linminmax::demo::{run_demo, skew_symmetric_space};
use linminmax::dilworth::{bichain_decomposition, coherent_decomposition, max_antichain, poset_embed};
use linminmax::generate::Generator;
use linminmax::lgv::{
    classical_lgv, is_acyclic, lgv_acyclic, lgv_denominator, lgv_graph_instance, lgv_lhs, lgv_rhs, LgvInstance,
};
use linminmax::linalg::{q, rank_of, Mat, Vector};
use linminmax::matching::{max_matching, min_cover, saturated_matching, HallOutcome};
use linminmax::menger::{bordered_matrix, cpc, generic_rank_rank_one_update, generic_rank_sum, graph_instance, min_separator};
use linminmax::ncrank::{
    default_order, has_full_ncrank, matrix_coherent_decomposition, matrix_min_cover, max_rank_blowup, mpc, ncrank,
    FullRankOutcome,
};
use linminmax::relation::{sample_element, to_matrix_space, Relation};
use linminmax::{Budget, GenericSampler};
use num_traits::Zero;

type Outcome = Result<String, String>;

/// Number, name, time limit in seconds, check.
type Criterion = (usize, &'static str, u64, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn budget() -> Budget {
    Budget::default()
}

fn demo(name: &str) -> Outcome {
    let rep = run_demo(name, &mut GenericSampler::with_seed(11), budget()).map_err(e)?;
    ensure(rep.passed(), || rep.to_text())?;
    Ok(rep.facts.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(", "))
}

fn criterion_1() -> Outcome {
    demo("linorder-f4")
}

fn criterion_2() -> Outcome {
    demo("menger-f7")
}

fn criterion_3() -> Outcome {
    let v = skew_symmetric_space(3);
    let mut s = GenericSampler::with_seed(3);
    let rank = (0..50).map(|_| sample_element(&v, &mut s).rank()).max().unwrap_or(0);
    ensure(rank == 2, || format!("commutative rank {rank}"))?;
    let (blown, _) = max_rank_blowup(&v, 2, &mut s, None).map_err(e)?;
    ensure(blown == 6 && blown % 2 == 0, || format!("blow-up rank {blown}"))?;
    let nc = ncrank(&v, &mut s).map_err(e)?;
    ensure(nc.value == 3 && nc.is_proved(), || format!("ncrank {} {:?}", nc.value, nc.status))?;
    let full = has_full_ncrank(&v, &mut s).map_err(e)?;
    ensure(matches!(full, FullRankOutcome::Full(_)), || "shrunk subspace reported".into())?;
    Ok(format!("rank {rank}, blow-up rank 6 at r = 2, ncrank {}", nc.value))
}

fn criterion_4() -> Outcome {
    let mut g = Generator::new(4);
    for i in 0..200 {
        let (n, m, count) = (g.int(1, 5) as usize, g.int(1, 5) as usize, g.int(0, 12) as usize);
        let r = g.relation(n, m, count);
        let cv = max_matching(&r, budget()).map_err(e)?;
        let cover = min_cover(&r, budget()).map_err(e)?;
        ensure(cv.value == cover.size() && cv.primal.size() == cv.value && cv.dual.size() == cv.value, || {
            format!("instance {i}: matching {} cover {}", cv.value, cover.size())
        })?;
        ensure(cv.primal.verify(&r) && cv.dual.verify(&r) && cover.verify(&r), || {
            format!("instance {i}: certificate failed")
        })?;
        ensure(cv.primal.matrix(&r).rank() == cv.value, || format!("instance {i}: matched sum lost rank"))?;
    }
    Ok("200/200 equal".into())
}

fn criterion_5() -> Outcome {
    let mut g = Generator::new(5);
    let mut s = GenericSampler::with_seed(5);
    for i in 0..200 {
        let (n, m) = (g.int(1, 8) as usize, g.int(1, 8) as usize);
        let p = g.int(1, 6) as f64 / 10.0;
        let bg = g.bipartite(n, m, p);
        let r = Relation::from_index_pairs(n, m, &bg.edges);
        let classical = bipartite_max_matching(&bg).map_err(e)?;
        let linear = max_matching(&r, budget()).map_err(e)?;
        ensure(classical.size == linear.value, || {
            format!("graph {i}: classical {} linear {}", classical.size, linear.value)
        })?;
        let hall = hall_check(&bg).map_err(e)?.is_none();
        let saturated = matches!(saturated_matching(&r, budget()).map_err(e)?, HallOutcome::Saturated(_));
        ensure(hall == saturated, || format!("graph {i}: Hall {hall}, linear {saturated}"))?;
    }
    for i in 0..100 {
        let size = g.int(1, 7) as usize;
        let p = g.int(1, 7) as f64 / 10.0;
        let poset = g.poset(size, p);
        let oracle = poset_dilworth(&poset).map_err(e)?;
        let l = poset_embed(&poset);
        let ac = max_antichain(&l, budget()).map_err(e)?;
        let bc = bichain_decomposition(&l, budget()).map_err(e)?;
        let cd = coherent_decomposition(&l, &mut s, budget()).map_err(e)?;
        ensure(
            ac.value == oracle.max_antichain() && bc.value == oracle.min_chains() && cd.value == oracle.min_chains(),
            || format!("poset {i}: antichain {} chains {} coherent {} oracle {}", ac.value, bc.value, cd.value, oracle.min_chains()),
        )?;
    }
    for i in 0..100 {
        let size = g.int(1, 8) as usize;
        let p = g.int(1, 5) as f64 / 10.0;
        let dg = g.digraph(size, p);
        let t = g.int(1, 3) as usize;
        let (h, k) = (g.vertices(size, t), g.vertices(size, t));
        let classical = vertex_disjoint_paths(&dg, &h, &k).map_err(e)?;
        let (r, ee, ff) = graph_instance(&dg, &h, &k, false).map_err(e)?;
        let c = cpc(&r, &ee, &ff, &mut s, budget()).map_err(e)?;
        let sep = min_separator(&r, &ee, &ff, budget()).map_err(e)?;
        ensure(
            c.value == classical.count && sep.size() == classical.count && classical.separator.len() == classical.count,
            || format!("digraph {i}: cpc {} paths {} separator {}", c.value, classical.count, sep.size()),
        )?;
    }
    Ok("200 graphs, 100 posets, 100 digraphs agree".into())
}

fn low_rank(g: &mut Generator, m: usize, n: usize) -> Mat {
    let k = g.int(0, m.min(n) as i64) as usize;
    let b = Mat::from_columns(m, &(0..k).map(|_| g.small_vector(m, 2)).collect::<Vec<_>>());
    let c = Mat::from_row_vectors(n, &(0..k).map(|_| g.small_vector(n, 2)).collect::<Vec<_>>());
    if k == 0 {
        Mat::zeros(m, n)
    } else {
        &b * &c
    }
}

fn criterion_6() -> Outcome {
    let mut g = Generator::new(6);
    let mut s = GenericSampler::with_seed(6);
    for i in 0..500 {
        let (m, n) = (g.int(1, 5) as usize, g.int(1, 5) as usize);
        let a = low_rank(&mut g, m, n);
        let (v, w) = (g.small_vector(n, 2), g.small_vector(m, 2));
        let formula = generic_rank_rank_one_update(&a, &v, &w).map_err(e)?;
        let ranks: Vec<usize> = (0..3)
            .map(|_| (&a + &Mat::outer(&w, &v).scale(&s.coeff())).rank())
            .collect();
        ensure(ranks.iter().all(|&r| r == formula), || format!("rank-one {i}: formula {formula}, samples {ranks:?}"))?;
    }
    for i in 0..500 {
        let (m, n) = (g.int(1, 5) as usize, g.int(1, 5) as usize);
        let a = low_rank(&mut g, m, n);
        let count = g.int(0, 5) as usize;
        let pairs: Vec<(Vector, Vector)> = (0..count).map(|_| (g.small_vector(n, 1), g.small_vector(m, 1))).collect();
        let formula = generic_rank_sum(&a, &pairs, budget()).map_err(e)?;
        let ranks: Vec<usize> = (0..3)
            .map(|_| {
                pairs
                    .iter()
                    .fold(a.clone(), |acc, (v, w)| &acc + &Mat::outer(w, v).scale(&s.coeff()))
                    .rank()
            })
            .collect();
        ensure(ranks.iter().all(|&r| r == formula), || format!("sum {i}: formula {formula}, samples {ranks:?}"))?;
    }
    Ok("500 + 500 instances, 3 agreeing samples each".into())
}

fn random_mat(g: &mut Generator, rows: usize, cols: usize) -> Mat {
    Mat::from_columns(rows, &(0..cols).map(|_| g.small_vector(rows, 2)).collect::<Vec<_>>())
}

fn criterion_7() -> Outcome {
    let mut g = Generator::new(7);
    let mut s = GenericSampler::with_seed(7);
    let mut singular = 0;
    for i in 0..100 {
        let (n, r, k) = (g.int(1, 6) as usize, g.int(1, 6) as usize, g.int(1, 3) as usize);
        let inst = g.lgv(n, r, k);
        for _ in 0..20 {
            let x = s.coeffs(inst.r());
            match lgv_lhs(&inst, &x) {
                Ok(lhs) => {
                    let rhs = lgv_rhs(&inst, &x).map_err(e)?;
                    ensure(lhs == rhs, || format!("instance {i}: lhs {lhs} rhs {rhs}"))?;
                }
                Err(_) => {
                    singular += 1;
                    ensure(lgv_denominator(&inst, &x).map_err(e)?.is_zero(), || {
                        format!("instance {i}: singular lhs but nonzero denominator")
                    })?;
                }
            }
        }
    }
    let mut acyclic = 0;
    while acyclic < 30 {
        let size = g.int(1, 5) as usize;
        let l = g.linorder(size, 0.4).map_err(e)?;
        let r = l.relation();
        if r.len() > 10 {
            continue;
        }
        let k = g.int(1, 3) as usize;
        let inst = LgvInstance::from_relation(r, random_mat(&mut g, size, k), random_mat(&mut g, size, k)).map_err(e)?;
        ensure(is_acyclic(&inst.relation()), || "linorder relation is not acyclic".into())?;
        for _ in 0..20 {
            let x = s.coeffs(inst.r());
            let den = lgv_denominator(&inst, &x).map_err(e)?;
            ensure(den == q(1), || format!("acyclic denominator {den}"))?;
            let (lhs, rhs) = lgv_acyclic(&inst, &x).map_err(e)?;
            ensure(lhs == rhs && lhs == lgv_lhs(&inst, &x).map_err(e)?, || "acyclic lhs != rhs".into())?;
        }
        acyclic += 1;
    }
    for i in 0..50 {
        let size = g.int(2, 7) as usize;
        let dag = g.dag(size, 0.4, true);
        let k = g.int(1, 3.min(size / 2) as i64) as usize;
        let mut vs = g.vertices(size, 2 * k);
        let h = vs.split_off(k);
        let (det_m, paths) = classical_lgv(&dag, &h, &vs).map_err(e)?;
        let (inst, x) = lgv_graph_instance(&dag, &h, &vs).map_err(e)?;
        let lhs = lgv_lhs(&inst, &x).map_err(e)?;
        ensure(det_m == paths && lhs == det_m, || format!("dag {i}: det M {det_m}, paths {paths}, linear {lhs}"))?;
    }
    Ok(format!("100 x 20 points ({singular} singular), 30 acyclic, 50 DAGs"))
}

fn criterion_8() -> Outcome {
    let mut g = Generator::new(8);
    let mut s = GenericSampler::with_seed(8);
    for i in 0..50 {
        let n = g.int(2, 4) as usize;
        let count = g.int(1, 6) as usize;
        let r = g.relation(n, n, count);
        let v = to_matrix_space(&r);
        let order = default_order(n);
        let (blown, _) = max_rank_blowup(&v, order, &mut s, None).map_err(e)?;
        let cover = min_cover(&r, budget()).map_err(e)?;
        let mc = matrix_min_cover(&v, &mut s).map_err(e)?;
        ensure(blown == order * cover.size() && mc.value == cover.size() && mc.is_proved(), || {
            format!("instance {i}: blow-up {blown} at r = {order}, cover {}, matrix cover {}", cover.size(), mc.value)
        })?;
    }
    for i in 0..30 {
        let n = g.int(2, 4) as usize;
        let l = g.linorder(n, 0.5).map_err(e)?;
        let order = default_order(n);
        let ac = max_antichain(&l, budget()).map_err(e)?;
        let md = matrix_coherent_decomposition(&to_matrix_space(l.relation()), order, &mut s).map_err(e)?;
        ensure(md.value == order * ac.value && md.is_proved(), || {
            format!("linorder {i}: decomposition {} vs {order} x {}", md.value, ac.value)
        })?;
    }
    for i in 0..30 {
        let n = g.int(1, 4) as usize;
        let count = g.int(1, 6) as usize;
        let r = g.relation(n, n, count);
        let (de, df) = (g.int(0, n as i64) as usize, g.int(0, n as i64) as usize);
        let (ee, ff) = (g.subspace(n, de), g.subspace(n, df));
        let c = cpc(&r, &ee, &ff, &mut s, budget()).map_err(e)?;
        let m = mpc(&to_matrix_space(&r), &ee, &ff, &mut s).map_err(e)?;
        ensure(c.value == m.value && m.is_proved(), || format!("instance {i}: cpc {} mpc {} {:?}", c.value, m.value, m.status))?;
    }
    Ok("50 covers, 30 linorder algebras, 30 capacities agree".into())
}

fn criterion_9() -> Outcome {
    let mut g = Generator::new(9);
    let mut s = GenericSampler::with_seed(9);
    for i in 0..200 {
        let n = g.int(1, 6) as usize;
        let (da, db) = (g.int(0, n as i64) as usize, g.int(0, n as i64) as usize);
        let (a, b) = (g.subspace(n, da), g.subspace(n, db));
        ensure(a.orthocomplement().orthocomplement() == a, || format!("subspace {i}: involution"))?;
        let (sum, cap) = (a.sum(&b).map_err(e)?, a.intersection(&b).map_err(e)?);
        ensure(sum.dim() + cap.dim() == a.dim() + b.dim(), || format!("subspace {i}: Grassmann"))?;
    }
    let mut guttman = 0;
    for i in 0..50 {
        let n = g.int(1, 5) as usize;
        let count = g.int(1, 8) as usize;
        let r = g.relation(n, n, count);
        let de = g.int(0, n as i64) as usize;
        let (ee, ff) = (g.subspace(n, de), g.subspace(n, 1));
        let space = to_matrix_space(&r);
        for _ in 0..10 {
            let a = sample_element(&space, &mut s);
            let Some(inv) = (&Mat::identity(n) - &a).inverse() else {
                continue;
            };
            let schur = &(&ff.basis_matrix().transpose() * &inv) * &ee.basis_matrix();
            ensure(bordered_matrix(&a, &ee, &ff).rank() == n + schur.rank(), || format!("instance {i}: Guttman"))?;
            guttman += 1;
        }
    }
    for i in 0..50 {
        let n = g.int(1, 6) as usize;
        let l = g.linorder(n, 0.5).map_err(e)?;
        let a = sample_element(&to_matrix_space(l.relation()), &mut s);
        let series = (0..n as u32).fold(Mat::zeros(n, n), |acc, j| &acc + &a.pow(j));
        ensure(&(&Mat::identity(n) - &a) * &series == Mat::identity(n), || format!("linorder {i}: truncation"))?;
    }
    for i in 0..30 {
        let (m, n) = (g.int(1, 3) as usize, g.int(1, 3) as usize);
        let d = g.int(1, 3) as usize;
        let v = g.matrix_space(m, n, d);
        let order = g.int(1, 3) as usize;
        let (rk, x) = max_rank_blowup(&v, order, &mut s, None).map_err(e)?;
        ensure(rk % order == 0 && x.rank() == rk, || format!("space {i}: blow-up rank {rk} at r = {order}"))?;
    }
    let mut positive = 0;
    for i in 0..200 {
        let (n, m) = (g.int(1, 5) as usize, g.int(1, 5) as usize);
        let r = g.relation(n, m, 6);
        let idx: Vec<usize> = (0..r.len()).filter(|_| g.chance(0.5)).collect();
        let vs: Vec<&Vector> = idx.iter().map(|&j| &r.pair(j).0).collect();
        let ws: Vec<&Vector> = idx.iter().map(|&j| &r.pair(j).1).collect();
        let independent = rank_of(n, &vs) == idx.len() && rank_of(m, &ws) == idx.len();
        let sum = idx.iter().fold(Mat::zeros(m, n), |acc, &j| &acc + &r.rank_one(j));
        ensure(independent == (sum.rank() == idx.len()), || format!("relation {i}: rank of matched sum"))?;
        positive += usize::from(independent);
    }
    Ok(format!("{guttman} Guttman samples, {positive}/200 independent index sets"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        (1, "linorder example", 1, criterion_1),
        (2, "Menger example in F^7", 1, criterion_2),
        (3, "skew-symmetric 3x3", 10, criterion_3),
        (4, "linear Konig, 200 instances", 120, criterion_4),
        (5, "classical reductions", 180, criterion_5),
        (6, "generic rank formulas", 120, criterion_6),
        (7, "LGV identities", 180, criterion_7),
        (8, "matrix theorems", 300, criterion_8),
        (9, "structural invariants", 60, criterion_9),
    ];
    let mut failed = 0;
    for (k, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let over = took > Duration::from_secs(limit);
        match (&outcome, over) {
            (Ok(msg), false) => println!("PASS {k} {name}: {msg} ({:.2}s, limit {limit}s)", took.as_secs_f64()),
            (Ok(_), true) => println!("FAIL {k} {name}: took {:.2}s, limit {limit}s", took.as_secs_f64()),
            (Err(msg), _) => println!("FAIL {k} {name}: {msg} ({:.2}s)", took.as_secs_f64()),
        }
        failed += usize::from(outcome.is_err() || over);
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
