use linminmax::generate::Generator;
use linminmax::io::{instance_json, parse_instance, Instance};
use linminmax::lgv::{lgv_denominator, lgv_lhs, lgv_rhs, principal_minor_determinant};
use linminmax::linalg::{q, Mat, Vector};
use linminmax::matching::{max_matching, min_cover};
use linminmax::menger::{cpc, min_separator};
use linminmax::ncrank::{max_rank_blowup, ncrank};
use linminmax::relation::{sample_element, to_matrix_space};
use linminmax::{Budget, GenericSampler};
use num_traits::Zero;
use proptest::prelude::*;

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(48)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn matching_meets_cover(seed in any::<u64>(), n in 1usize..5, m in 1usize..5, count in 0usize..10) {
        let r = Generator::new(seed).relation(n, m, count);
        let cv = max_matching(&r, Budget::default()).unwrap();
        prop_assert!(cv.primal.verify(&r));
        prop_assert!(cv.dual.verify(&r));
        prop_assert_eq!(cv.primal.size(), cv.dual.size());
        prop_assert!(cv.value <= n.min(m));
    }

    #[test]
    fn covers_survive_change_of_basis(seed in any::<u64>(), n in 1usize..5, count in 0usize..8) {
        let mut g = Generator::new(seed);
        let r = g.relation(n, n, count);
        let (p, inv) = g.unimodular(n, 6);
        let moved = linminmax::relation::Relation::new(
            n,
            n,
            r.pairs().iter().map(|(v, w)| (p.apply(v), inv.transpose().apply(w))).collect(),
        )
        .unwrap();
        prop_assert_eq!(
            min_cover(&r, Budget::default()).unwrap().size(),
            min_cover(&moved, Budget::default()).unwrap().size()
        );
    }

    #[test]
    fn subspace_lattice_identities(seed in any::<u64>(), n in 0usize..6, da in 0usize..6, db in 0usize..6) {
        let mut g = Generator::new(seed);
        let (a, b) = (g.subspace(n, da.min(n)), g.subspace(n, db.min(n)));
        prop_assert_eq!(a.orthocomplement().orthocomplement(), a.clone());
        let sum = a.sum(&b).unwrap();
        let cap = a.intersection(&b).unwrap();
        prop_assert_eq!(sum.dim() + cap.dim(), a.dim() + b.dim());
        prop_assert!(sum.contains_subspace(&a) && a.contains_subspace(&cap));
        prop_assert_eq!(sum.orthocomplement(), a.orthocomplement().intersection(&b.orthocomplement()).unwrap());
    }

    #[test]
    fn rank_is_invariant_under_transpose_and_unimodular(seed in any::<u64>(), n in 1usize..5) {
        let mut g = Generator::new(seed);
        let cols: Vec<Vector> = (0..n).map(|_| g.small_vector(n, 2)).collect();
        let a = Mat::from_columns(n, &cols);
        let (p, _) = g.unimodular(n, 5);
        prop_assert_eq!(a.rank(), a.transpose().rank());
        prop_assert_eq!(a.rank(), (&p * &a).rank());
        prop_assert_eq!(a.det().unwrap().is_zero(), a.rank() < n);
        prop_assert_eq!(a.kernel().dim() + a.rank(), n);
    }

    #[test]
    fn capacity_equals_separator(seed in any::<u64>(), n in 1usize..5, count in 0usize..6, de in 0usize..5, df in 0usize..5) {
        let mut g = Generator::new(seed);
        let r = g.relation(n, n, count);
        let (e, f) = (g.subspace(n, de.min(n)), g.subspace(n, df.min(n)));
        let c = cpc(&r, &e, &f, &mut GenericSampler::with_seed(seed), Budget::default()).unwrap();
        let sep = min_separator(&r, &e, &f, Budget::default()).unwrap();
        prop_assert!(sep.verify(&r));
        prop_assert_eq!(c.value, sep.size());
    }

    #[test]
    fn lgv_sides_agree(seed in any::<u64>(), n in 1usize..5, r in 0usize..5, k in 0usize..3) {
        let mut g = Generator::new(seed);
        let inst = g.lgv(n, r, k);
        let x = g.point(r);
        let den = lgv_denominator(&inst, &x).unwrap();
        prop_assert_eq!(den.clone(), principal_minor_determinant(&inst, &x).unwrap());
        match lgv_lhs(&inst, &x) {
            Ok(lhs) => prop_assert_eq!(lhs, lgv_rhs(&inst, &x).unwrap()),
            Err(_) => prop_assert!(den.is_zero()),
        }
    }

    #[test]
    fn blowup_ranks_are_divisible(seed in any::<u64>(), m in 1usize..4, n in 1usize..4, d in 1usize..4, r in 1usize..4) {
        let v = Generator::new(seed).matrix_space(m, n, d);
        let mut s = GenericSampler::with_seed(seed);
        let (rk, _) = max_rank_blowup(&v, r, &mut s, None).unwrap();
        prop_assert_eq!(rk % r, 0);
        let commutative = (0..10).map(|_| sample_element(&v, &mut s).rank()).max().unwrap();
        prop_assert!(commutative * r <= rk);
    }

    #[test]
    fn ncrank_brackets(seed in any::<u64>(), n in 1usize..4, d in 1usize..4) {
        let v = Generator::new(seed).matrix_space(n, n, d);
        let mut s = GenericSampler::with_seed(seed);
        let nc = ncrank(&v, &mut s).unwrap();
        prop_assert!(nc.dual.verify(&v));
        prop_assert!(nc.value + nc.dual.defect() <= n);
        let commutative = (0..10).map(|_| sample_element(&v, &mut s).rank()).max().unwrap();
        prop_assert!(commutative <= nc.value);
    }

    #[test]
    fn linorder_elements_are_nilpotent(seed in any::<u64>(), n in 1usize..6) {
        let l = Generator::new(seed).linorder(n, 0.5).unwrap();
        let a = sample_element(&to_matrix_space(l.relation()), &mut GenericSampler::with_seed(seed));
        prop_assert!(a.pow(n as u32).is_zero());
        let series = (0..n as u32).fold(Mat::zeros(n, n), |acc, j| &acc + &a.pow(j));
        prop_assert_eq!(&(&Mat::identity(n) - &a) * &series, Mat::identity(n));
    }

    #[test]
    fn instances_round_trip(seed in any::<u64>(), n in 1usize..4) {
        let mut g = Generator::new(seed);
        let docs = [
            Instance::Relation { r: g.relation(n, n, 3), e: Some(g.subspace(n, 1)), f: None },
            Instance::Poset(g.poset(n + 1, 0.5)),
            Instance::Digraph { g: g.dag(n + 2, 0.5, true), h: vec![0], k: vec![n + 1] },
            Instance::MatrixSpace { v: g.matrix_space(n, n, 2), e: None, f: Some(g.subspace(n, 1)) },
            Instance::Lgv { inst: g.lgv(n, 2, 1), x: Some(vec![q(1), q(-2)]) },
        ];
        for doc in docs {
            let text = instance_json(&doc).to_string();
            prop_assert_eq!(parse_instance(&text).unwrap(), doc);
        }
    }
}
