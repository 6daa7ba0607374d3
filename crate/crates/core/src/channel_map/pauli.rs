use super::{tomography, AffineMap};
use crate::error::{Error, Result};
use crate::linalg::Complex64;
use crate::states::{DensityMatrix2, PAULIS};

const PROBABILITY_TOL: f64 = 1e-12;

fn validate(eps: [f64; 4]) -> Result<()> {
    let sum: f64 = eps.iter().sum();
    if eps.iter().any(|e| !e.is_finite() || *e < -PROBABILITY_TOL)
        || (sum - 1.0).abs() > PROBABILITY_TOL
    {
        return Err(Error::InvalidProbabilities(eps));
    }
    Ok(())
}

/// `rho -> sum_j eps_j A_j rho A_j^†` with `A_0 = I` and `A_j = sigma_j`.
pub fn pauli_channel(eps: [f64; 4], rho: &DensityMatrix2) -> Result<DensityMatrix2> {
    validate(eps)?;
    let r = *rho.matrix();
    let mut out = r.scale(Complex64::new(eps[0], 0.0));
    for (sigma, &e) in PAULIS.iter().zip(&eps[1..]) {
        out = out + sigma.conjugate(&r).scale(Complex64::new(e, 0.0));
    }
    Ok(DensityMatrix2::new_unchecked(out))
}

/// Diagonal affine map of the Pauli channel with weights `eps`, checked
/// against tomography of the Kraus form.
pub fn depolarizing_affine(eps: [f64; 4]) -> Result<AffineMap> {
    validate(eps)?;
    let [e0, e1, e2, e3] = eps;
    let map = AffineMap::diagonal(e0 + e1 - e2 - e3, e0 - e1 + e2 - e3, e0 - e1 - e2 + e3);
    let measured = tomography(|rho| {
        // weights were validated above
        pauli_channel(eps, rho).unwrap_or(*rho)
    })?;
    let deviation = measured.max_abs_diff(&map);
    if deviation > PROBABILITY_TOL {
        return Err(Error::PathMismatch { deviation });
    }
    Ok(map)
}
