mod common;

use common::strategy::{rectangular, square};
use proptest::prelude::*;
use wradius_core::matcore::{hermitian_eig, matmul, operator_norm, svd};
use wradius_core::ComplexMatrix;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn double_adjoint_is_bitwise_identity(a in rectangular(6)) {
        prop_assert_eq!(a.adjoint().adjoint(), a);
    }

    #[test]
    fn norm_of_adjoint_matches(a in rectangular(6)) {
        let n = operator_norm(&a).mid();
        let m = operator_norm(&a.adjoint()).mid();
        prop_assert!((n - m).abs() <= 1e-12 * (1.0 + n));
    }

    #[test]
    fn psd_top_eigenvalue_is_norm(g in square(8)) {
        let p = matmul(&g.adjoint(), &g).unwrap().hermitian_part();
        let top = hermitian_eig(&p).unwrap().max();
        let norm = operator_norm(&p).mid();
        prop_assert!((top - norm).abs() <= 1e-10 * (1.0 + norm));
    }

    #[test]
    fn eig_residual(g in square(8)) {
        let h = g.hermitian_part();
        let n = h.rows();
        let eig = hermitian_eig(&h).unwrap();
        let v = &eig.eigenvectors;
        let r = &(&h * v) - &(v * &ComplexMatrix::from_diag(&eig.eigenvalues));
        let scale = operator_norm(&h).hi;
        prop_assert!(operator_norm(&r).hi <= 1e-12 * n as f64 * scale.max(f64::MIN_POSITIVE));
        let o = &(&v.adjoint() * v) - &ComplexMatrix::identity(n);
        prop_assert!(operator_norm(&o).hi <= 1e-12 * n as f64);
    }

    #[test]
    fn svd_residual(a in rectangular(8)) {
        let f = svd(&a);
        let dim = a.rows().max(a.cols()) as f64;
        let r = operator_norm(&(&f.reconstruct() - &a)).hi;
        prop_assert!(r <= 1e-12 * dim * f.max().max(f64::MIN_POSITIVE));
        prop_assert!(f.singular_values.windows(2).all(|p| p[0] >= p[1]));
        prop_assert!(operator_norm(&a).contains(f.max()));
    }

    #[test]
    fn eig_is_deterministic(g in square(6)) {
        let h = g.hermitian_part();
        let x = hermitian_eig(&h).unwrap();
        let y = hermitian_eig(&h).unwrap();
        prop_assert_eq!(x.eigenvalues, y.eigenvalues);
        prop_assert_eq!(x.eigenvectors, y.eigenvectors);
    }
}
