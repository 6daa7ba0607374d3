//! The three-parameter interaction unitary between system and environment.
//!
//! Tensor order is system first: basis index `2 * s + e` for system bit `s`
//! and environment bit `e`, i.e. `|00>, |01>, |10>, |11>`.
//!
//! In the product basis the interaction is
//!
//! ```text
//! | c+     0        0       i s+ |
//! | 0      c- w     i s- w  0    |      c± = cos((alpha ± gamma)/2)
//! | 0      i s- w   c- w    0    |      s± = sin((alpha ± gamma)/2)
//! | i s+   0        0       c+   |      w  = exp(-i beta)
//! ```
//!
//! It is diagonal in a phase-adjusted Bell basis. With `U = sum_j
//! exp(-i l_j) |psi_j><psi_j|` the basis that reproduces the matrix above
//! (up to the global phase `exp(-i (l1 + l2)/2)`) is
//!
//! ```text
//! psi_1 = -i (|00> - |11>)/sqrt2     psi_3 = -i (|01> + |10>)/sqrt2
//! psi_2 =    (|00> + |11>)/sqrt2     psi_4 =    (|01> - |10>)/sqrt2
//! ```
//!
//! and the phases map to angles through
//! `alpha = (l1 - l2 - l3 + l4)/2`, `beta = -(l1 + l2 - l3 - l4)/2`,
//! `gamma = (l1 - l2 + l3 - l4)/2`. A common shift of all four phases is a
//! global phase and leaves the angles unchanged.

use std::f64::consts::FRAC_1_SQRT_2;

use crate::error::{Error, Result};
use crate::linalg::{kron, CMatrix, CMatrix2, CMatrix4, Complex64, I, ZERO};

/// Tolerance used when checking that supplied factors are unitary.
pub const UNITARY_TOL: f64 = 1e-12;

/// Eigenphases `l_1..l_4` of the interaction in the special Bell basis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BellPhases(pub [f64; 4]);

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CanonicalAngles {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl CanonicalAngles {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Self {
        CanonicalAngles { alpha, beta, gamma }
    }
}

/// A 4x4 unitary on system ⊗ environment.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoQubitUnitary(CMatrix4);

impl TwoQubitUnitary {
    pub fn new(m: CMatrix4, tol: f64) -> Result<Self> {
        let deviation = m.unitarity_error();
        if deviation > tol {
            return Err(Error::NotUnitary {
                which: "two-qubit matrix",
                deviation,
            });
        }
        Ok(TwoQubitUnitary(m))
    }

    pub fn identity() -> Self {
        TwoQubitUnitary(CMatrix4::identity())
    }

    pub fn matrix(&self) -> &CMatrix4 {
        &self.0
    }

    pub fn into_matrix(self) -> CMatrix4 {
        self.0
    }
}

pub fn phases_to_angles(p: BellPhases) -> CanonicalAngles {
    let [l1, l2, l3, l4] = p.0;
    CanonicalAngles {
        alpha: 0.5 * (l1 - l2 - l3 + l4),
        beta: -0.5 * (l1 + l2 - l3 - l4),
        gamma: 0.5 * (l1 - l2 + l3 - l4),
    }
}

pub fn canonical_unitary(a: CanonicalAngles) -> TwoQubitUnitary {
    let (sp, cp) = (0.5 * (a.alpha + a.gamma)).sin_cos();
    let (sm, cm) = (0.5 * (a.alpha - a.gamma)).sin_cos();
    let w = Complex64::from_polar(1.0, -a.beta);
    let mut m = CMatrix4::zeros();
    m[(0, 0)] = Complex64::new(cp, 0.0);
    m[(3, 3)] = Complex64::new(cp, 0.0);
    m[(0, 3)] = I * sp;
    m[(3, 0)] = I * sp;
    m[(1, 1)] = w * cm;
    m[(2, 2)] = w * cm;
    m[(1, 2)] = I * w * sm;
    m[(2, 1)] = I * w * sm;
    TwoQubitUnitary(m)
}

/// The special Bell basis vectors `psi_1..psi_4` in product-basis
/// coordinates.
pub fn special_bell_basis() -> [[Complex64; 4]; 4] {
    let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
    let mi = Complex64::new(0.0, -FRAC_1_SQRT_2);
    [
        [mi, ZERO, ZERO, -mi],
        [h, ZERO, ZERO, h],
        [ZERO, mi, mi, ZERO],
        [ZERO, h, -h, ZERO],
    ]
}

/// `sum_j exp(-i l_j) |psi_j><psi_j|`, assembled in the Bell basis and
/// changed to the product basis.
pub fn bell_diagonal_unitary(p: BellPhases) -> TwoQubitUnitary {
    let basis = special_bell_basis();
    // columns of `change` are the basis vectors
    let change = CMatrix4::from_fn(|i, j| basis[j][i]);
    let diag = CMatrix4::from_fn(|i, j| {
        if i == j {
            Complex64::from_polar(1.0, -p.0[i])
        } else {
            ZERO
        }
    });
    TwoQubitUnitary(change * diag * change.adjoint())
}

/// `(u1 ⊗ v1) core (u2 ⊗ v2)`, system factors first.
pub fn sandwich(
    u1: &CMatrix2,
    v1: &CMatrix2,
    core: &TwoQubitUnitary,
    u2: &CMatrix2,
    v2: &CMatrix2,
) -> Result<TwoQubitUnitary> {
    for (which, m) in [("u1", u1), ("v1", v1), ("u2", u2), ("v2", v2)] {
        let deviation = m.unitarity_error();
        if deviation > UNITARY_TOL {
            return Err(Error::NotUnitary { which, deviation });
        }
    }
    Ok(TwoQubitUnitary(kron(u1, v1) * core.0 * kron(u2, v2)))
}

pub fn is_unitary<const N: usize>(m: &CMatrix<N>, tol: f64) -> bool {
    m.unitarity_error() <= tol
}

/// Largest entrywise deviation between `a` and `b` once the global phase is
/// divided out, using the phase of `b`'s largest-magnitude entry.
pub fn global_phase_distance<const N: usize>(a: &CMatrix<N>, b: &CMatrix<N>) -> f64 {
    let idx = b.argmax_abs();
    let (pb, pa) = (b[idx], a[idx]);
    if pb.norm() == 0.0 {
        return a.max_abs();
    }
    // phase factor taking b onto a at the reference entry
    let ratio = pa / pb;
    let phase = if ratio.norm() == 0.0 {
        Complex64::new(1.0, 0.0)
    } else {
        ratio / ratio.norm()
    };
    a.max_abs_diff(&b.scale(phase))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ONE;
    use crate::states::PAULI_X;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, PI, TAU};

    #[test]
    fn angle_examples() {
        assert_eq!(
            phases_to_angles(BellPhases([0.0; 4])),
            CanonicalAngles::new(0.0, 0.0, 0.0)
        );
        let a = phases_to_angles(BellPhases([FRAC_PI_2, -FRAC_PI_2, -FRAC_PI_2, FRAC_PI_2]));
        assert!((a.alpha - PI).abs() < 1e-15 && a.beta.abs() < 1e-15 && a.gamma.abs() < 1e-15);
        let t = 0.7;
        assert_eq!(
            phases_to_angles(BellPhases([t; 4])),
            CanonicalAngles::new(0.0, 0.0, 0.0)
        );
    }

    #[test]
    fn identity_angles_give_identity() {
        let u = canonical_unitary(CanonicalAngles::new(0.0, 0.0, 0.0));
        assert_eq!(*u.matrix(), CMatrix4::identity());
    }

    #[test]
    fn quarter_turns_swap_outer_block() {
        let u = canonical_unitary(CanonicalAngles::new(FRAC_PI_2, 0.0, FRAC_PI_2));
        let m = u.matrix();
        assert!((m[(1, 1)] - ONE).norm() < 1e-15 && (m[(2, 2)] - ONE).norm() < 1e-15);
        assert!(m[(1, 2)].norm() < 1e-15 && m[(2, 1)].norm() < 1e-15);
        assert!(m[(0, 0)].norm() < 1e-15 && m[(3, 3)].norm() < 1e-15);
        assert!((m[(0, 3)] - I).norm() < 1e-15 && (m[(3, 0)] - I).norm() < 1e-15);
    }

    #[test]
    fn bell_diagonal_scalar_phases() {
        assert!(
            bell_diagonal_unitary(BellPhases([0.0; 4]))
                .matrix()
                .max_abs_diff(&CMatrix4::identity())
                < 1e-15
        );
        let c = 1.3;
        let expected = CMatrix4::identity().scale(Complex64::from_polar(1.0, -c));
        assert!(
            bell_diagonal_unitary(BellPhases([c; 4]))
                .matrix()
                .max_abs_diff(&expected)
                < 1e-15
        );
    }

    #[test]
    fn special_bell_basis_is_orthonormal() {
        let b = special_bell_basis();
        for i in 0..4 {
            for j in 0..4 {
                let ip: Complex64 = (0..4).map(|k| b[i][k].conj() * b[j][k]).sum();
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((ip - Complex64::new(expected, 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn sandwich_examples() {
        let id = CMatrix2::identity();
        let core = canonical_unitary(CanonicalAngles::new(0.3, 1.1, -0.4));
        assert_eq!(sandwich(&id, &id, &core, &id, &id).unwrap(), core);

        let flipped = sandwich(&PAULI_X, &id, &TwoQubitUnitary::identity(), &id, &id).unwrap();
        let m = flipped.matrix();
        for (r, c) in [(0, 2), (1, 3), (2, 0), (3, 1)] {
            assert_eq!(m[(r, c)], ONE);
        }
        assert_eq!(m[(0, 0)], ZERO);
    }

    #[test]
    fn sandwich_rejects_non_unitary_factor() {
        let id = CMatrix2::identity();
        let two = id.scale(Complex64::new(2.0, 0.0));
        let err = sandwich(&id, &two, &TwoQubitUnitary::identity(), &id, &id).unwrap_err();
        assert!(matches!(err, Error::NotUnitary { which: "v1", .. }));
    }

    #[test]
    fn is_unitary_examples() {
        assert!(is_unitary(&CMatrix4::identity(), 1e-12));
        assert!(!is_unitary(
            &CMatrix4::identity().scale(Complex64::new(2.0, 0.0)),
            1e-12
        ));
        assert!(
            TwoQubitUnitary::new(CMatrix4::identity().scale(Complex64::new(2.0, 0.0)), 1e-12)
                .is_err()
        );
    }

    fn det4(m: &CMatrix4) -> Complex64 {
        // Laplace expansion along the first row; fine for a test helper
        fn minor(m: &CMatrix4, skip: usize) -> [[Complex64; 3]; 3] {
            std::array::from_fn(|i| {
                let cols: Vec<usize> = (0..4).filter(|&c| c != skip).collect();
                std::array::from_fn(|j| m[(i + 1, cols[j])])
            })
        }
        fn det3(a: &[[Complex64; 3]; 3]) -> Complex64 {
            a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
                - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
                + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
        }
        (0..4)
            .map(|j| {
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                m[(0, j)] * det3(&minor(m, j)) * sign
            })
            .sum()
    }

    proptest! {
        #[test]
        fn cross_construction_agrees(l in proptest::array::uniform4(-10.0..10.0f64)) {
            let p = BellPhases(l);
            let direct = bell_diagonal_unitary(p);
            let via_angles = canonical_unitary(phases_to_angles(p));
            prop_assert!(global_phase_distance(direct.matrix(), via_angles.matrix()) <= 1e-12);
        }

        #[test]
        fn canonical_is_unitary_with_unit_determinant(a in -10.0..10.0f64, b in -10.0..10.0f64, g in -10.0..10.0f64) {
            let u = canonical_unitary(CanonicalAngles::new(a, b, g));
            prop_assert!(is_unitary(u.matrix(), 1e-12));
            prop_assert!((det4(u.matrix()).norm() - 1.0).abs() < 1e-12);
        }

        #[test]
        fn canonical_is_4pi_periodic(a in -5.0..5.0f64, b in -5.0..5.0f64, g in -5.0..5.0f64, axis in 0usize..3) {
            let base = canonical_unitary(CanonicalAngles::new(a, b, g));
            let mut shifted = [a, b, g];
            shifted[axis] += 2.0 * TAU;
            let moved = canonical_unitary(CanonicalAngles::new(shifted[0], shifted[1], shifted[2]));
            prop_assert!(base.matrix().max_abs_diff(moved.matrix()) < 1e-12);
        }
    }
}
