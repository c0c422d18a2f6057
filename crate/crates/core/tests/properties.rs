use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sgsmooth_core::arith::QContext;
use sgsmooth_core::classifier::{classify_component, Status};
use sgsmooth_core::field::{solve_integer_system, Matrix, PrimeField};
use sgsmooth_core::orbits::{
    classical_orbits, grading_dims, is_distinguished, is_regular, is_zero_orbit, weighted_dynkin,
};
use sgsmooth_core::rootsys::{build_root_system, simple_reflection_weights, DynkinType, RootSystem};
use sgsmooth_core::variety::checks::{exp_nilpotent, log_unipotent};
use sgsmooth_core::variety::{stratum_sample, tangent_dim, GroupSpec};

const TYPES: [&str; 12] = ["A1", "A3", "A4", "B2", "B3", "C3", "C4", "D4", "D5", "E6", "F4", "G2"];
const CLASSICAL: [&str; 10] = ["A2", "A4", "A6", "B3", "B5", "C3", "C5", "D4", "D6", "D7"];

fn rs(s: &str) -> RootSystem {
    build_root_system(s.parse::<DynkinType>().unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflections_are_involutions(t in 0..TYPES.len(), a in 0usize..8, seed in prop::collection::vec(-6i64..6, 8)) {
        let r = rs(TYPES[t]);
        let a = a % r.rank();
        // Integral points of the root lattice keep every pairing integral.
        let dim = r.simple_roots[0].len();
        let mut v = vec![0i64; dim];
        for (c, root) in seed.iter().zip(&r.simple_roots) {
            for (x, y) in v.iter_mut().zip(root) {
                *x += c * y;
            }
        }
        let once = simple_reflection_weights(&r, a, &v).unwrap();
        let twice = simple_reflection_weights(&r, a, &once).unwrap();
        prop_assert_eq!(twice, v.clone());
        let norm = |w: &[i64]| w.iter().map(|x| x * x).sum::<i64>();
        prop_assert_eq!(norm(&once), norm(&v));
    }

    #[test]
    fn grading_is_symmetric_and_exhausts_g(t in 0..CLASSICAL.len(), k in 0usize..200) {
        let r = rs(CLASSICAL[t]);
        let orbits = classical_orbits(&r).unwrap();
        let o = &orbits[k % orbits.len()];
        let dims = grading_dims(&r, &weighted_dynkin(&r, o).unwrap()).unwrap();
        prop_assert_eq!(dims.total(), r.dim_lie_algebra());
        for (&i, &d) in &dims.dims {
            prop_assert_eq!(dims.get(-i), d);
        }
        prop_assert_eq!(dims.get(1) == 0, weighted_dynkin(&r, o).unwrap().is_even());
    }

    #[test]
    fn verdicts_follow_orbit_shape(t in 0..CLASSICAL.len(), k in 0usize..200, l_idx in 0usize..4) {
        let r = rs(CLASSICAL[t]);
        // q = 2 has order > h modulo each of these primes.
        let l = [101u64, 103, 107, 109][l_idx];
        let ctx = QContext::new(2, l).unwrap();
        prop_assume!(ctx.failing_power(r.coxeter_number).is_none());
        let orbits = classical_orbits(&r).unwrap();
        let o = &orbits[k % orbits.len()];
        let v = classify_component(&r, o, &ctx).unwrap();
        let expected = if is_zero_orbit(o) || is_distinguished(&r, o) { Status::Smooth } else { Status::Singular };
        prop_assert_eq!(v.status, expected);
        if is_regular(&r, o) {
            prop_assert_eq!(v.status, Status::Smooth);
        }
    }

    #[test]
    fn inverse_roundtrip(entries in prop::collection::vec(0u64..13, 16)) {
        let f = PrimeField::new(13).unwrap();
        let m = Matrix::from_flat(f, 4, 4, entries);
        match m.inverse() {
            Some(inv) => {
                prop_assert_eq!(&m * &inv, Matrix::identity(f, 4));
                prop_assert!(m.determinant() != 0);
            }
            None => prop_assert_eq!(m.determinant(), 0),
        }
        prop_assert_eq!(m.rank() + m.nullity(), 4);
    }

    #[test]
    fn integer_systems_recover_solutions(x in prop::collection::vec(-20i64..20, 3)) {
        let a = vec![vec![1, -1, 0], vec![0, 1, -1], vec![1, 0, 0]];
        let b: Vec<i64> = a.iter().map(|row| row.iter().zip(&x).map(|(c, v)| c * v).sum()).collect();
        prop_assert_eq!(solve_integer_system(&a, &b), Some(x));
    }

    #[test]
    fn exp_and_log_are_inverse(upper in prop::collection::vec(0u64..11, 6)) {
        let f = PrimeField::new(11).unwrap();
        let mut n = Matrix::zeros(f, 4, 4);
        let mut it = upper.into_iter();
        for i in 0..4 {
            for j in i + 1..4 {
                n[(i, j)] = it.next().unwrap();
            }
        }
        let sigma = exp_nilpotent(&n).unwrap();
        prop_assert_eq!(log_unipotent(&sigma).unwrap(), n);
    }
}

fn conjugation_invariance(spec: Arc<GroupSpec>, q: u64, partition: &[u32], seed: u64) {
    let points = stratum_sample(&spec, q, partition, 6, seed).unwrap();
    assert!(!points.is_empty(), "{} {partition:?}", spec.name());
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    for pt in points {
        let base = tangent_dim(&pt);
        assert!(base.tangent_dim >= spec.dim_g());
        for _ in 0..3 {
            let g = spec.random_element(&mut rng);
            let moved = pt.conjugate_by(&g).unwrap();
            assert_eq!(tangent_dim(&moved).tangent_dim, base.tangent_dim);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn tangent_dimension_is_conjugation_invariant(seed in any::<u64>(), which in 0usize..6) {
        let gl3 = Arc::new(GroupSpec::gl(3, PrimeField::new(11).unwrap()).unwrap());
        let gsp = Arc::new(GroupSpec::gsp4(PrimeField::new(11).unwrap()).unwrap());
        match which {
            0 => conjugation_invariance(gl3, 4, &[3], seed),
            1 => conjugation_invariance(gl3, 4, &[2, 1], seed),
            2 => conjugation_invariance(gl3, 4, &[1, 1, 1], seed),
            3 => conjugation_invariance(gsp, 4, &[4], seed),
            4 => conjugation_invariance(gsp, 4, &[2, 2], seed),
            _ => conjugation_invariance(gsp, 4, &[2, 1, 1], seed),
        }
    }
}
