mod common;

use common::strategy::square;
use proptest::prelude::*;
use wradius_core::matcore::{matmul, operator_norm, svd};
use wradius_core::specfun::{
    contraction_factorization, lemma_inequality_check, polar_isometry, psd_power, FunctionPair,
    PolarFactors,
};
use wradius_core::C64;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn complementary_powers_multiply_back(g in square(6)) {
        let p = matmul(&g.adjoint(), &g).unwrap().hermitian_part();
        let norm = operator_norm(&p).mid();
        for s in [0.0, 0.25, 0.5, 0.75, 1.0] {
            let prod = &psd_power(&p, s).unwrap() * &psd_power(&p, 1.0 - s).unwrap();
            prop_assert!(operator_norm(&(&prod - &p)).hi <= 1e-8 * (1.0 + norm));
        }
    }

    #[test]
    fn polar_isometry_is_partial_isometry(a in square(6)) {
        let k = polar_isometry(&a).unwrap();
        for s in svd(&k).singular_values {
            prop_assert!(s <= 1e-10 || (s - 1.0).abs() <= 1e-10, "singular value {}", s);
        }
    }

    #[test]
    fn modulus_of_k_is_projection(a in square(6)) {
        let p = PolarFactors::new(&a).unwrap();
        for q in [p.support_projection(), p.range_projection()] {
            prop_assert!(q.hermitian_defect() <= 1e-8);
            prop_assert!((&(&q * &q) - &q).max_abs() <= 1e-8);
        }
    }

    #[test]
    fn power_family_factorizations(a in square(6), t in 0.0..=1.0f64) {
        let pair = FunctionPair::power(t).unwrap();
        let cf = contraction_factorization(&a, &pair).unwrap();
        let norm = operator_norm(&a).mid();
        prop_assert!(operator_norm(&(&cf.reconstruct() - &a)).hi <= 1e-8 * (1.0 + norm));
        prop_assert!(operator_norm(&cf.k).hi <= 1.0 + 1e-10);
    }

    #[test]
    fn lemma_holds_for_random_vectors(
        a in square(5),
        t in 0.0..=1.0f64,
        seed in any::<u64>(),
    ) {
        let mut rng = common::rng(seed);
        let n = a.rows();
        let x = common::unit_vector(&mut rng, n);
        let y = common::unit_vector(&mut rng, n);
        prop_assert!(lemma_inequality_check(&a, &FunctionPair::power(t).unwrap(), &x, &y).unwrap());
    }

    #[test]
    fn rank_deficient_inputs_factor(a in square(4)) {
        // duplicate the first column to force a zero singular value
        let mut b = a.clone();
        let first: Vec<C64> = b.column(0);
        if b.cols() > 1 {
            b.set_column(1, &first);
        }
        let cf = contraction_factorization(&b, &FunctionPair::power(0.3).unwrap()).unwrap();
        let norm = operator_norm(&b).mid();
        prop_assert!(operator_norm(&(&cf.reconstruct() - &b)).hi <= 1e-8 * (1.0 + norm));
    }
}
