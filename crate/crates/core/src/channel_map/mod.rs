//! The channel itself: embed the system with the environment, apply the
//! interaction, discard the environment. Its action on Bloch vectors is the
//! affine map `n -> M n + C`, obtained either by probe-state tomography or
//! from the closed form.
//!
//! The closed form (with `s`/`c` for sine/cosine, `l` for the mixing
//! degree):
//!
//! ```text
//! M = | cb cg              l sb cg cxi          -l seta sg sxi cb |
//!     | -l sb ca cxi       ca cb                 l sa sxi cb ceta |
//!     | l seta sg sxi ca   -l sa sxi ceta cg     ca cg            |
//!
//! C = ( -l sb sg sxi ceta,  -l sa sb sxi seta,  -l sa sg cxi )
//! ```

mod choi;
mod pauli;
mod signed_svd;

pub use choi::{choi_matrix, is_completely_positive, ChoiMatrix, CP_TOL};
pub use pauli::{depolarizing_affine, pauli_channel};
pub use signed_svd::{canonical_diagonal, SignedDiagonal};

use crate::canonical_unitary::{canonical_unitary, CanonicalAngles, TwoQubitUnitary};
use crate::error::{Error, Result};
use crate::linalg::{
    kron, mat3_identity, mat3_vec, vec3_max_abs_diff, CMatrix2, CMatrix4, Mat3, Vec3,
};
use crate::states::{
    density_to_bloch, environment_state, probe_states, BlochVector, DensityMatrix2,
    EnvironmentParams,
};

/// Largest tolerated disagreement between the shifts read off the three
/// probe axes.
pub const SHIFT_CONSISTENCY_TOL: f64 = 1e-9;

/// The six channel parameters: interaction angles plus environment state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChannelParams {
    pub angles: CanonicalAngles,
    pub env: EnvironmentParams,
}

impl ChannelParams {
    pub fn new(
        alpha: f64,
        beta: f64,
        gamma: f64,
        xi: f64,
        eta: f64,
        lambda_mix: f64,
    ) -> Result<Self> {
        Ok(ChannelParams {
            angles: CanonicalAngles::new(alpha, beta, gamma),
            env: EnvironmentParams::new(lambda_mix, xi, eta)?,
        })
    }

    pub fn interaction(&self) -> TwoQubitUnitary {
        canonical_unitary(self.angles)
    }
}

/// `n -> m n + c` on Bloch vectors.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AffineMap {
    pub m: Mat3,
    pub c: Vec3,
}

impl AffineMap {
    pub fn identity() -> Self {
        AffineMap {
            m: mat3_identity(),
            c: [0.0; 3],
        }
    }

    pub fn diagonal(x: f64, y: f64, z: f64) -> Self {
        AffineMap {
            m: crate::linalg::mat3_diag([x, y, z]),
            c: [0.0; 3],
        }
    }

    /// Largest entrywise difference over both `m` and `c`.
    pub fn max_abs_diff(&self, other: &AffineMap) -> f64 {
        crate::linalg::mat3_max_abs_diff(&self.m, &other.m)
            .max(vec3_max_abs_diff(&self.c, &other.c))
    }
}

/// Traces out the second (environment) factor:
/// `(rho_sys)_{ij} = sum_k rho_{(i,k),(j,k)}`.
pub fn partial_trace_env(rho4: &CMatrix4, tol: f64) -> Result<DensityMatrix2> {
    let deviation = rho4.hermiticity_error();
    if deviation > tol {
        return Err(Error::NotHermitian { deviation });
    }
    let trace = rho4.trace();
    if (trace.re - 1.0).abs() > tol || trace.im.abs() > tol {
        return Err(Error::TraceNotOne { trace: trace.re });
    }
    DensityMatrix2::new(trace_out_env(rho4), tol)
}

fn trace_out_env(rho4: &CMatrix4) -> CMatrix2 {
    CMatrix2::from_fn(|i, j| rho4[(2 * i, 2 * j)] + rho4[(2 * i + 1, 2 * j + 1)])
}

/// Output of the channel with an arbitrary interaction and environment.
pub fn apply_interaction(
    rho_in: &DensityMatrix2,
    u: &TwoQubitUnitary,
    env: &DensityMatrix2,
) -> DensityMatrix2 {
    let joint = kron(rho_in.matrix(), env.matrix());
    let evolved = u.matrix().conjugate(&joint);
    DensityMatrix2::new_unchecked(trace_out_env(&evolved))
}

pub fn apply_channel(rho_in: &DensityMatrix2, params: &ChannelParams) -> DensityMatrix2 {
    apply_interaction(
        rho_in,
        &params.interaction(),
        &environment_state(params.env),
    )
}

/// Reads the affine map of any single-qubit channel off its action on the
/// six axis probes. Column `j` of `m` is half the difference of the outputs
/// for `+j` and `-j`; `c` is the average of the three half-sums, which must
/// coincide.
pub fn tomography(channel: impl Fn(&DensityMatrix2) -> DensityMatrix2) -> Result<AffineMap> {
    let outputs = probe_states().map(|(_, rho)| density_to_bloch(&channel(&rho)).0);
    let mut m = [[0.0; 3]; 3];
    let mut shifts = [[0.0; 3]; 3];
    for j in 0..3 {
        let (plus, minus) = (outputs[2 * j], outputs[2 * j + 1]);
        for i in 0..3 {
            m[i][j] = 0.5 * (plus[i] - minus[i]);
            shifts[j][i] = 0.5 * (plus[i] + minus[i]);
        }
    }
    let deviation = vec3_max_abs_diff(&shifts[0], &shifts[1])
        .max(vec3_max_abs_diff(&shifts[1], &shifts[2]))
        .max(vec3_max_abs_diff(&shifts[0], &shifts[2]));
    if deviation > SHIFT_CONSISTENCY_TOL {
        return Err(Error::InconsistentShift { deviation });
    }
    let c = std::array::from_fn(|i| (shifts[0][i] + shifts[1][i] + shifts[2][i]) / 3.0);
    Ok(AffineMap { m, c })
}

pub fn extract_affine(params: &ChannelParams) -> Result<AffineMap> {
    let u = params.interaction();
    let env = environment_state(params.env);
    tomography(|rho| apply_interaction(rho, &u, &env))
}

/// Closed-form affine map of the channel; see the module docs.
pub fn analytic_affine(params: &ChannelParams) -> AffineMap {
    let CanonicalAngles { alpha, beta, gamma } = params.angles;
    let l = params.env.lambda_mix();
    let (sa, ca) = alpha.sin_cos();
    let (sb, cb) = beta.sin_cos();
    let (sg, cg) = gamma.sin_cos();
    let (sx, cx) = params.env.xi().sin_cos();
    let (se, ce) = params.env.eta().sin_cos();
    let m = [
        [cb * cg, l * sb * cg * cx, -l * se * sg * sx * cb],
        [-l * sb * ca * cx, ca * cb, l * sa * sx * cb * ce],
        [l * se * sg * sx * ca, -l * sa * sx * ce * cg, ca * cg],
    ];
    AffineMap {
        m,
        c: shift(params),
    }
}

fn shift(params: &ChannelParams) -> Vec3 {
    let CanonicalAngles { alpha, beta, gamma } = params.angles;
    let l = params.env.lambda_mix();
    let (sa, sb, sg) = (alpha.sin(), beta.sin(), gamma.sin());
    let (sx, cx) = params.env.xi().sin_cos();
    let (se, ce) = params.env.eta().sin_cos();
    [
        -l * sb * sg * sx * ce,
        -l * sa * sb * sx * se,
        -l * sa * sg * cx,
    ]
}

pub fn apply_affine(map: &AffineMap, n: &BlochVector) -> BlochVector {
    let mn = mat3_vec(&map.m, &n.0);
    BlochVector(std::array::from_fn(|i| mn[i] + map.c[i]))
}

/// True when every component of the closed-form shift is within `tol` of 0.
pub fn is_zero_shift(params: &ChannelParams, tol: f64) -> bool {
    shift(params).iter().all(|c| c.abs() <= tol)
}

/// Action of the affine map on an arbitrary (not necessarily Hermitian)
/// operator, extended by linearity.
pub(crate) fn affine_action(map: &AffineMap, x: &CMatrix2) -> CMatrix2 {
    use crate::linalg::Complex64;
    use crate::states::PAULIS;
    let t = x.trace();
    let r: [Complex64; 3] = std::array::from_fn(|k| (*x * PAULIS[k]).trace());
    let mut out = CMatrix2::identity().scale(t * 0.5);
    for ((sigma, row), shift) in PAULIS.iter().zip(&map.m).zip(map.c) {
        let w: Complex64 = r.iter().zip(row).map(|(rk, mk)| rk * mk).sum::<Complex64>() + t * shift;
        out = out + sigma.scale(w * 0.5);
    }
    out
}
