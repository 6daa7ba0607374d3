//! Hand-written decompositions checked against nalgebra.

use nalgebra::{Complex, Matrix3, Matrix4};
use proptest::prelude::*;
use qchan_core::linalg::{
    hermitian_eigenvalues4, svd3, symmetric_eigen, CMatrix4, Complex64, Mat3,
};

fn to_na(m: &Mat3) -> Matrix3<f64> {
    Matrix3::from_fn(|i, j| m[i][j])
}

fn hermitian(entries: &[f64]) -> CMatrix4 {
    let mut h = CMatrix4::zeros();
    let mut k = 0;
    for i in 0..4 {
        h[(i, i)] = Complex64::new(entries[k], 0.0);
        k += 1;
        for j in (i + 1)..4 {
            let z = Complex64::new(entries[k], entries[k + 1]);
            k += 2;
            h[(i, j)] = z;
            h[(j, i)] = z.conj();
        }
    }
    h
}

proptest! {
    #[test]
    fn singular_values_match(entries in proptest::array::uniform9(-2.0..2.0f64)) {
        let m: Mat3 = std::array::from_fn(|i| std::array::from_fn(|j| entries[3 * i + j]));
        let (_, s, _) = svd3(&m);
        let mut expected: Vec<f64> = to_na(&m).singular_values().iter().copied().collect();
        expected.sort_by(|a, b| b.total_cmp(a));
        for (a, b) in s.iter().zip(&expected) {
            prop_assert!((a - b).abs() <= 1e-12, "{s:?} vs {expected:?}");
        }
    }

    #[test]
    fn symmetric_eigenvalues_match(entries in proptest::array::uniform6(-1.0..1.0f64)) {
        let [a, b, c, d, e, f] = entries;
        let m = [[a, b, c], [b, d, e], [c, e, f]];
        let (values, _) = symmetric_eigen(&m);
        let mut expected: Vec<f64> = to_na(&m).symmetric_eigenvalues().iter().copied().collect();
        expected.sort_by(f64::total_cmp);
        for (x, y) in values.iter().zip(&expected) {
            prop_assert!((x - y).abs() <= 1e-12);
        }
    }

    #[test]
    fn hermitian_eigenvalues_match(entries in proptest::collection::vec(-1.0..1.0f64, 16)) {
        let h = hermitian(&entries);
        let ours = hermitian_eigenvalues4(&h);
        let na = Matrix4::from_fn(|i, j| Complex::new(h[(i, j)].re, h[(i, j)].im));
        let mut expected: Vec<f64> = na.symmetric_eigenvalues().iter().copied().collect();
        expected.sort_by(f64::total_cmp);
        for (x, y) in ours.iter().zip(&expected) {
            prop_assert!((x - y).abs() <= 1e-11, "{ours:?} vs {expected:?}");
        }
    }
}
