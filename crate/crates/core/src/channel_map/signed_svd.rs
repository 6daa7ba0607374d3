use crate::linalg::{mat3_det, mat3_transpose, svd3, Mat3, Vec3};

/// `r_post * m * r_pre = diag(d)` with both rotations proper.
///
/// `d[0] >= d[1] >= |d[2]|`, `d[0], d[1] >= 0`, and `d[2]` carries the sign
/// of `det m`. Proper rotations cannot change that sign, so only the product
/// of the diagonal signs is an invariant of the channel.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SignedDiagonal {
    pub d: Vec3,
    pub r_post: Mat3,
    pub r_pre: Mat3,
}

/// Equal singular values keep the order the Jacobi sweep produced them in;
/// only `d` is canonical, the rotation pair is one valid choice.
pub fn canonical_diagonal(m: &Mat3) -> SignedDiagonal {
    let (mut u, s, mut v) = svd3(m);
    let mut d = s;
    if mat3_det(&u) < 0.0 {
        for row in u.iter_mut() {
            row[2] = -row[2];
        }
        d[2] = -d[2];
    }
    if mat3_det(&v) < 0.0 {
        for row in v.iter_mut() {
            row[2] = -row[2];
        }
        d[2] = -d[2];
    }
    SignedDiagonal {
        d,
        r_post: mat3_transpose(&u),
        r_pre: v,
    }
}
