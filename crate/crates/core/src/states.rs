//! Single-qubit states: parameterized pure states, the mixed environment
//! state, and conversions between density matrices and Bloch vectors.
//!
//! Pure states use the phase convention
//! `|psi> = cos(theta/2)|0> + e^{-i phi} sin(theta/2)|1>`, which puts the
//! state at Bloch vector `(sin theta cos phi, -sin theta sin phi, cos theta)`.

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::linalg::{
    hermitian_eigenvalues2, vec3_norm, CMatrix, CMatrix2, Complex64, Vec3, I, ONE, ZERO,
};

/// Default tolerance for physicality checks.
pub const DEFAULT_TOL: f64 = 1e-9;

pub const PAULI_X: CMatrix2 = CMatrix([[ZERO, ONE], [ONE, ZERO]]);
pub const PAULI_Y: CMatrix2 = CMatrix([[ZERO, Complex64::new(0.0, -1.0)], [I, ZERO]]);
pub const PAULI_Z: CMatrix2 = CMatrix([[ONE, ZERO], [ZERO, Complex64::new(-1.0, 0.0)]]);

/// `sigma_1, sigma_2, sigma_3` in that order.
pub const PAULIS: [CMatrix2; 3] = [PAULI_X, PAULI_Y, PAULI_Z];

/// Polar and azimuthal angles of a pure state, normalized to
/// `theta in [0, pi]`, `phi in [0, 2 pi)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PureStateAngles {
    theta: f64,
    phi: f64,
}

impl PureStateAngles {
    /// Any real angles are accepted. A polar angle outside `[0, pi]` is
    /// folded back together with a half-turn of the azimuth, which describes
    /// the same ray.
    pub fn new(theta: f64, phi: f64) -> Self {
        let mut theta = theta.rem_euclid(TAU);
        let mut phi = phi;
        if theta > PI {
            theta = TAU - theta;
            phi += PI;
        }
        let mut phi = phi.rem_euclid(TAU);
        if phi >= TAU {
            phi = 0.0;
        }
        PureStateAngles { theta, phi }
    }

    /// Angles of the pure state with the given Bloch direction. The zero
    /// vector maps to `theta = 0`.
    pub fn from_bloch(n: &BlochVector) -> Self {
        let [x, y, z] = n.0;
        let r = vec3_norm(&n.0);
        if r == 0.0 {
            return PureStateAngles::new(0.0, 0.0);
        }
        let theta = (z / r).clamp(-1.0, 1.0).acos();
        let phi = if x == 0.0 && y == 0.0 {
            0.0
        } else {
            (-y).atan2(x)
        };
        PureStateAngles::new(theta, phi)
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// State vector `cos(theta/2)|0> + e^{-i phi} sin(theta/2)|1>`.
    pub fn ket(&self) -> [Complex64; 2] {
        let (s, c) = (0.5 * self.theta).sin_cos();
        [Complex64::new(c, 0.0), Complex64::from_polar(s, -self.phi)]
    }
}

/// The environment qubit: a mixture `(1 - lambda) I/2 + lambda |phi><phi|`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EnvironmentParams {
    lambda_mix: f64,
    pure_part: PureStateAngles,
}

impl EnvironmentParams {
    pub fn new(lambda_mix: f64, xi: f64, eta: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&lambda_mix) {
            return Err(Error::OutOfRange {
                name: "lambda",
                value: lambda_mix,
                range: "[0, 1]",
            });
        }
        Ok(EnvironmentParams {
            lambda_mix,
            pure_part: PureStateAngles::new(xi, eta),
        })
    }

    pub fn lambda_mix(&self) -> f64 {
        self.lambda_mix
    }

    pub fn xi(&self) -> f64 {
        self.pure_part.theta
    }

    pub fn eta(&self) -> f64 {
        self.pure_part.phi
    }

    pub fn pure_part(&self) -> PureStateAngles {
        self.pure_part
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlochVector(pub Vec3);

impl BlochVector {
    pub const ORIGIN: BlochVector = BlochVector([0.0; 3]);

    pub fn new(x: f64, y: f64, z: f64) -> Self {
        BlochVector([x, y, z])
    }

    pub fn norm(&self) -> f64 {
        vec3_norm(&self.0)
    }
}

/// A validated single-qubit density matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensityMatrix2(CMatrix2);

impl DensityMatrix2 {
    /// Checks Hermiticity, unit trace and positivity, all within `tol`.
    pub fn new(m: CMatrix2, tol: f64) -> Result<Self> {
        let deviation = m.hermiticity_error();
        if deviation > tol {
            return Err(Error::NotHermitian { deviation });
        }
        let trace = m.trace();
        if (trace - ONE).norm() > tol {
            return Err(Error::TraceNotOne { trace: trace.re });
        }
        let [low, _] = hermitian_eigenvalues2(&m);
        if low < -tol {
            return Err(Error::NotPositive { eigenvalue: low });
        }
        Ok(DensityMatrix2(m))
    }

    /// Wraps a matrix that is a density matrix by construction.
    pub(crate) fn new_unchecked(m: CMatrix2) -> Self {
        DensityMatrix2(m)
    }

    pub fn matrix(&self) -> &CMatrix2 {
        &self.0
    }

    /// Ascending eigenvalues.
    pub fn eigenvalues(&self) -> [f64; 2] {
        hermitian_eigenvalues2(&self.0)
    }
}

pub fn pure_state(angles: PureStateAngles) -> DensityMatrix2 {
    let ket = angles.ket();
    DensityMatrix2::new_unchecked(CMatrix2::outer(&ket, &ket))
}

pub fn environment_state(env: EnvironmentParams) -> DensityMatrix2 {
    let lambda = env.lambda_mix;
    let mixed = CMatrix2::identity().scale(Complex64::new(0.5 * (1.0 - lambda), 0.0));
    let pure = pure_state(env.pure_part)
        .0
        .scale(Complex64::new(lambda, 0.0));
    DensityMatrix2::new_unchecked(mixed + pure)
}

/// `rho = (I + n . sigma) / 2`. Vectors longer than `1 + DEFAULT_TOL` are
/// rejected.
pub fn bloch_to_density(n: &BlochVector) -> Result<DensityMatrix2> {
    let norm = n.norm();
    if norm > 1.0 + DEFAULT_TOL {
        return Err(Error::UnphysicalBloch { norm });
    }
    Ok(DensityMatrix2::new_unchecked(bloch_operator(&n.0, 1.0)))
}

/// `(t I + n . sigma) / 2` without any physicality check.
pub(crate) fn bloch_operator(n: &Vec3, t: f64) -> CMatrix2 {
    let [x, y, z] = *n;
    CMatrix([
        [
            Complex64::new(0.5 * (t + z), 0.0),
            Complex64::new(0.5 * x, -0.5 * y),
        ],
        [
            Complex64::new(0.5 * x, 0.5 * y),
            Complex64::new(0.5 * (t - z), 0.0),
        ],
    ])
}

/// `n_i = tr(rho sigma_i)`.
pub fn density_to_bloch(rho: &DensityMatrix2) -> BlochVector {
    BlochVector(bloch_components(&rho.0))
}

pub(crate) fn bloch_components(m: &CMatrix2) -> Vec3 {
    std::array::from_fn(|i| (*m * PAULIS[i]).trace().re)
}

/// The six Pauli-axis eigenstates in the order `+x, -x, +y, -y, +z, -z`.
pub fn probe_states() -> [(&'static str, DensityMatrix2); 6] {
    const AXES: [(&str, Vec3); 6] = [
        ("+x", [1.0, 0.0, 0.0]),
        ("-x", [-1.0, 0.0, 0.0]),
        ("+y", [0.0, 1.0, 0.0]),
        ("-y", [0.0, -1.0, 0.0]),
        ("+z", [0.0, 0.0, 1.0]),
        ("-z", [0.0, 0.0, -1.0]),
    ];
    AXES.map(|(label, n)| {
        (
            label,
            DensityMatrix2::new_unchecked(bloch_operator(&n, 1.0)),
        )
    })
}
