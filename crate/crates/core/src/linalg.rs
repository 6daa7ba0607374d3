//! Fixed-size dense matrices for one and two qubits, plus the handful of
//! real decompositions the channel code needs (symmetric eigenproblems and a
//! 3x3 SVD). Everything is stack allocated; the largest matrix is 8x8.

use std::ops::{Add, Index, IndexMut, Mul, Sub};

pub use num_complex::Complex64;

pub type Vec3 = [f64; 3];
pub type Mat3 = [[f64; 3]; 3];

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

/// Square complex matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CMatrix<const N: usize>(pub [[Complex64; N]; N]);

pub type CMatrix2 = CMatrix<2>;
pub type CMatrix4 = CMatrix<4>;

impl<const N: usize> CMatrix<N> {
    pub const fn zeros() -> Self {
        CMatrix([[ZERO; N]; N])
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { ONE } else { ZERO })
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                m.0[i][j] = f(i, j);
            }
        }
        m
    }

    pub fn from_real(rows: [[f64; N]; N]) -> Self {
        Self::from_fn(|i, j| Complex64::new(rows[i][j], 0.0))
    }

    /// `|v><w|`
    pub fn outer(v: &[Complex64; N], w: &[Complex64; N]) -> Self {
        Self::from_fn(|i, j| v[i] * w[j].conj())
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i].conj())
    }

    pub fn trace(&self) -> Complex64 {
        (0..N).map(|i| self.0[i][i]).sum()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::from_fn(|i, j| self.0[i][j] * s)
    }

    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flat_map(|r| r.iter())
            .fold(0.0, |acc, z| acc.max(z.norm()))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (*self - *other).max_abs()
    }

    /// Largest entrywise deviation from `self == self^†`.
    pub fn hermiticity_error(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    /// Largest entrywise deviation of `U^† U` from the identity.
    pub fn unitarity_error(&self) -> f64 {
        (self.adjoint() * *self).max_abs_diff(&Self::identity())
    }

    pub fn apply(&self, v: &[Complex64; N]) -> [Complex64; N] {
        let mut out = [ZERO; N];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..N).map(|k| self.0[i][k] * v[k]).sum();
        }
        out
    }

    /// `U X U^†`
    pub fn conjugate(&self, x: &Self) -> Self {
        *self * *x * self.adjoint()
    }

    /// Entry of largest modulus, first in row-major order on ties.
    pub fn argmax_abs(&self) -> (usize, usize) {
        let mut best = (0, 0);
        let mut best_abs = -1.0;
        for i in 0..N {
            for j in 0..N {
                let a = self.0[i][j].norm();
                if a > best_abs {
                    best_abs = a;
                    best = (i, j);
                }
            }
        }
        best
    }
}

impl<const N: usize> Default for CMatrix<N> {
    fn default() -> Self {
        Self::zeros()
    }
}

impl<const N: usize> Index<(usize, usize)> for CMatrix<N> {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.0[i][j]
    }
}

impl<const N: usize> IndexMut<(usize, usize)> for CMatrix<N> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.0[i][j]
    }
}

impl<const N: usize> Mul for CMatrix<N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| (0..N).map(|k| self.0[i][k] * rhs.0[k][j]).sum())
    }
}

impl<const N: usize> Add for CMatrix<N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j] + rhs.0[i][j])
    }
}

impl<const N: usize> Sub for CMatrix<N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j] - rhs.0[i][j])
    }
}

/// Tensor product with `a` as the first (most significant) factor.
pub fn kron(a: &CMatrix2, b: &CMatrix2) -> CMatrix4 {
    CMatrix4::from_fn(|i, j| a.0[i / 2][j / 2] * b.0[i % 2][j % 2])
}

pub fn mat3_identity() -> Mat3 {
    [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]
}

pub fn mat3_diag(d: Vec3) -> Mat3 {
    [[d[0], 0.0, 0.0], [0.0, d[1], 0.0], [0.0, 0.0, d[2]]]
}

pub fn mat3_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub fn mat3_transpose(a: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = a[j][i];
        }
    }
    out
}

pub fn mat3_vec(a: &Mat3, v: &Vec3) -> Vec3 {
    let mut out = [0.0; 3];
    for i in 0..3 {
        out[i] = (0..3).map(|k| a[i][k] * v[k]).sum();
    }
    out
}

pub fn mat3_det(a: &Mat3) -> f64 {
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

pub fn mat3_max_abs_diff(a: &Mat3, b: &Mat3) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            worst = worst.max((a[i][j] - b[i][j]).abs());
        }
    }
    worst
}

pub fn vec3_norm(v: &Vec3) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

pub fn vec3_max_abs_diff(a: &Vec3, b: &Vec3) -> f64 {
    (0..3).fold(0.0, |acc, i| acc.max((a[i] - b[i]).abs()))
}

fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Cyclic Jacobi eigen-decomposition of a real symmetric matrix.
///
/// Returns eigenvalues in ascending order and the matching orthonormal
/// eigenvectors as the columns of the second matrix.
pub fn symmetric_eigen<const N: usize>(a: &[[f64; N]; N]) -> ([f64; N], [[f64; N]; N]) {
    let mut a = *a;
    let mut v = [[0.0; N]; N];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }

    for _sweep in 0..64 {
        let off: f64 = (0..N)
            .flat_map(|i| (0..N).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        let scale: f64 = (0..N).map(|i| a[i][i] * a[i][i]).sum::<f64>() + off;
        if off <= f64::EPSILON * f64::EPSILON * scale || off == 0.0 {
            break;
        }
        for p in 0..N {
            for q in (p + 1)..N {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for row in a.iter_mut() {
                    let (akp, akq) = (row[p], row[q]);
                    row[p] = c * akp - s * akq;
                    row[q] = s * akp + c * akq;
                }
                let (row_p, row_q) = (a[p], a[q]);
                for k in 0..N {
                    a[p][k] = c * row_p[k] - s * row_q[k];
                    a[q][k] = s * row_p[k] + c * row_q[k];
                }
                for row in v.iter_mut() {
                    let vkp = row[p];
                    let vkq = row[q];
                    row[p] = c * vkp - s * vkq;
                    row[q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: [usize; N] = std::array::from_fn(|i| i);
    order.sort_by(|&i, &j| a[i][i].total_cmp(&a[j][j]));
    let values = std::array::from_fn(|k| a[order[k]][order[k]]);
    let mut vectors = [[0.0; N]; N];
    for (k, &src) in order.iter().enumerate() {
        for r in 0..N {
            vectors[r][k] = v[r][src];
        }
    }
    (values, vectors)
}

/// Eigenvalues (ascending) of a 4x4 Hermitian matrix.
///
/// Uses the real embedding `[[Re H, -Im H], [Im H, Re H]]`, whose spectrum is
/// the spectrum of `H` with every eigenvalue doubled.
pub fn hermitian_eigenvalues4(h: &CMatrix4) -> [f64; 4] {
    let mut real = [[0.0; 8]; 8];
    for i in 0..4 {
        for j in 0..4 {
            // symmetrize so tiny anti-Hermitian noise cannot break the embedding
            let z = (h.0[i][j] + h.0[j][i].conj()) * 0.5;
            real[i][j] = z.re;
            real[i + 4][j + 4] = z.re;
            real[i][j + 4] = -z.im;
            real[i + 4][j] = z.im;
        }
    }
    let (values, _) = symmetric_eigen(&real);
    [values[0], values[2], values[4], values[6]]
}

/// Eigenvalues (ascending) of a 2x2 Hermitian matrix, closed form.
pub fn hermitian_eigenvalues2(h: &CMatrix2) -> [f64; 2] {
    let a = h.0[0][0].re;
    let d = h.0[1][1].re;
    let b = (h.0[0][1] + h.0[1][0].conj()) * 0.5;
    let mean = 0.5 * (a + d);
    let radius = (0.25 * (a - d) * (a - d) + b.norm_sqr()).sqrt();
    [mean - radius, mean + radius]
}

/// Singular value decomposition `m = u * diag(s) * v^T` of a real 3x3
/// matrix by one-sided Jacobi rotations.
///
/// Singular values are nonnegative and sorted in descending order; `u` and
/// `v` are orthogonal but their determinants are not normalized.
pub fn svd3(m: &Mat3) -> (Mat3, Vec3, Mat3) {
    // columns of `a` are rotated until mutually orthogonal
    let mut a = *m;
    let mut v = mat3_identity();
    for _sweep in 0..64 {
        let mut rotated = false;
        for p in 0..2 {
            for q in (p + 1)..3 {
                let alpha: f64 = (0..3).map(|i| a[i][p] * a[i][p]).sum();
                let beta: f64 = (0..3).map(|i| a[i][q] * a[i][q]).sum();
                let gamma: f64 = (0..3).map(|i| a[i][p] * a[i][q]).sum();
                if gamma == 0.0 || gamma.abs() <= 1e-15 * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for row in a.iter_mut().chain(v.iter_mut()) {
                    let xp = row[p];
                    let xq = row[q];
                    row[p] = c * xp - s * xq;
                    row[q] = s * xp + c * xq;
                }
            }
        }
        if !rotated {
            break;
        }
    }

    let norms: Vec3 =
        std::array::from_fn(|j| (0..3).map(|i| a[i][j] * a[i][j]).sum::<f64>().sqrt());
    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| norms[j].total_cmp(&norms[i]));

    let s: Vec3 = std::array::from_fn(|k| norms[order[k]]);
    let mut u_cols: [Option<Vec3>; 3] = [None; 3];
    let mut v_sorted = [[0.0; 3]; 3];
    let cutoff = 1e-300_f64.max(s[0] * 1e-15);
    for (k, &src) in order.iter().enumerate() {
        for r in 0..3 {
            v_sorted[r][k] = v[r][src];
        }
        if s[k] > cutoff {
            u_cols[k] = Some(std::array::from_fn(|r| a[r][src] / s[k]));
        }
    }

    let u_cols = complete_basis(u_cols);
    let mut u = [[0.0; 3]; 3];
    for (k, col) in u_cols.iter().enumerate() {
        for r in 0..3 {
            u[r][k] = col[r];
        }
    }
    (u, s, v_sorted)
}

/// Fills missing columns (from zero singular values) with unit vectors that
/// complete an orthonormal basis.
fn complete_basis(cols: [Option<Vec3>; 3]) -> [Vec3; 3] {
    match cols {
        [Some(a), Some(b), Some(c)] => [a, b, c],
        [Some(a), Some(b), None] => [a, b, cross(&a, &b)],
        [Some(a), None, None] => {
            // any axis not nearly parallel to `a`
            let k = (0..3)
                .min_by(|&i, &j| a[i].abs().total_cmp(&a[j].abs()))
                .unwrap_or(0);
            let mut e = [0.0; 3];
            e[k] = 1.0;
            let b = cross(&a, &e);
            let n = vec3_norm(&b);
            let b = [b[0] / n, b[1] / n, b[2] / n];
            [a, b, cross(&a, &b)]
        }
        _ => [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
    }
}
