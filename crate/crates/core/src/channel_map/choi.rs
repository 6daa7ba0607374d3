use super::{affine_action, AffineMap};
use crate::linalg::{hermitian_eigenvalues4, CMatrix2, CMatrix4, Complex64};

/// Smallest Choi eigenvalue still accepted as positive.
pub const CP_TOL: f64 = 1e-10;

/// Choi state of a channel, normalized to unit trace: the channel applied to
/// the first half of `(|00> + |11>)/sqrt2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChoiMatrix(CMatrix4);

impl ChoiMatrix {
    pub fn matrix(&self) -> &CMatrix4 {
        &self.0
    }

    /// Ascending eigenvalues.
    pub fn eigenvalues(&self) -> [f64; 4] {
        hermitian_eigenvalues4(&self.0)
    }
}

pub fn choi_matrix(map: &AffineMap) -> ChoiMatrix {
    let mut choi = CMatrix4::zeros();
    for i in 0..2 {
        for j in 0..2 {
            let unit = CMatrix2::from_fn(|a, b| {
                if (a, b) == (i, j) {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            });
            let image = affine_action(map, &unit);
            for a in 0..2 {
                for b in 0..2 {
                    choi[(2 * a + i, 2 * b + j)] = image[(a, b)] * 0.5;
                }
            }
        }
    }
    ChoiMatrix(choi)
}

pub fn is_completely_positive(map: &AffineMap, tol: f64) -> bool {
    choi_matrix(map).eigenvalues()[0] >= -tol
}
