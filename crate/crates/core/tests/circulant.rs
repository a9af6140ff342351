mod common;

use cyclic_motion::circulant::Circulant3;
use cyclic_motion::curve::{circle, Branch};
use cyclic_motion::Vector3;
use proptest::prelude::*;

use common::{circulant_dense, det_cofactor, matmul};

fn row() -> impl Strategy<Value = [f64; 3]> {
    prop::array::uniform3(-10.0..10.0f64)
}

fn c(r: [f64; 3]) -> Circulant3 {
    Circulant3::new(r)
}

proptest! {
    #[test]
    fn dense_form_matches_hand_layout(r in row()) {
        let m = c(r).to_dense();
        let want = circulant_dense(r);
        for i in 0..3 {
            for j in 0..3 {
                prop_assert_eq!(m[(i, j)], want[i][j]);
            }
        }
    }

    #[test]
    fn closed_form_det_matches_cofactor_expansion(r in row()) {
        let want = det_cofactor(&circulant_dense(r));
        let scale = r.iter().map(|x| x.abs()).sum::<f64>().powi(3).max(1.0);
        prop_assert!((c(r).det() - want).abs() <= 1e-12 * scale);
    }

    #[test]
    fn det_factors_through_the_row_sum(r in row()) {
        // det = (a₁ + a₂ + a₃)·(a₁² + a₂² + a₃² − a₁a₂ − a₂a₃ − a₃a₁)
        let [a, b, d] = r;
        let want = (a + b + d) * (a * a + b * b + d * d - a * b - b * d - d * a);
        let scale = r.iter().map(|x| x.abs()).sum::<f64>().powi(3).max(1.0);
        prop_assert!((c(r).det() - want).abs() <= 1e-12 * scale);
    }

    #[test]
    fn product_is_circulant_and_matches_dense(x in row(), y in row()) {
        let p = (c(x) * c(y)).to_dense();
        let want = matmul(&circulant_dense(x), &circulant_dense(y));
        for i in 0..3 {
            for j in 0..3 {
                prop_assert!((p[(i, j)] - want[i][j]).abs() <= 1e-12 * 300.0);
            }
        }
    }

    #[test]
    fn det_is_multiplicative(x in row(), y in row()) {
        let (dx, dy) = (c(x).det(), c(y).det());
        let dp = (c(x) * c(y)).det();
        prop_assert!((dp - dx * dy).abs() <= 1e-10 * (dx * dy).abs().max(1.0));
    }

    #[test]
    fn circulants_commute(x in row(), y in row()) {
        let (p, q) = (c(x) * c(y), c(y) * c(x));
        for k in 0..3 {
            prop_assert!((p.first_row()[k] - q.first_row()[k]).abs() <= 1e-12);
        }
    }

    #[test]
    fn all_ones_is_an_eigenvector(r in row()) {
        let v = c(r) * Vector3::repeat(1.0);
        prop_assert!((v - Vector3::repeat(c(r).row_sum())).amax() <= 1e-12);
    }

    #[test]
    fn inverse_is_a_two_sided_inverse(r in row()) {
        let m = c(r);
        prop_assume!(m.det().abs() > 1e-3);
        let inv = m.inverse().unwrap();
        for p in [m * inv, inv * m] {
            prop_assert!((p - Circulant3::IDENTITY).norm_inf() <= 1e-8 * m.norm_inf() * inv.norm_inf());
        }
    }

    #[test]
    fn transpose_is_circulant(r in row()) {
        prop_assert_eq!(c(r).transpose().to_dense(), c(r).to_dense().transpose());
    }

    #[test]
    fn admissible_rows_decompose_into_orthogonal_parts(
        phase in 0.0..std::f64::consts::TAU,
        h in 0.01..100.0f64,
        minus in any::<bool>(),
    ) {
        let branch = if minus { Branch::Minus } else { Branch::Plus };
        let p = circle(branch, phase).point(phase).unwrap() * h;
        let m = Circulant3::from_components(p.x, p.y, p.z);
        let d = m.decompose().unwrap();
        prop_assert!((d.h - h).abs() <= 1e-12 * h);
        prop_assert!(d.a.orthogonality_residual() <= 1e-12);
        prop_assert!((d.a.det().abs() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn orthogonality_requires_a_zero_cross_sum(r in row()) {
        let m = c(r);
        prop_assume!(m.cross_sum().abs() > 1e-3 * m.row_norm_sq());
        prop_assert!(m.decompose().is_err());
        let a = m.scale(1.0 / m.row_norm_sq().sqrt());
        prop_assert!(a.orthogonality_residual() > 1e-6);
    }
}
