//! Random parameters, states and unitaries for tests, benches and the CLI.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use rand::Rng;

use crate::canonical_unitary::BellPhases;
use crate::channel_map::ChannelParams;
use crate::linalg::{CMatrix, CMatrix2, Complex64};
use crate::states::{bloch_to_density, BlochVector, DensityMatrix2};

/// `alpha, beta, gamma, eta` in `[0, 2pi)`, `xi` in `[0, pi]`, `lambda` in `[0, 1]`.
pub fn random_channel_params<R: Rng + ?Sized>(rng: &mut R) -> ChannelParams {
    let alpha = rng.random_range(0.0..TAU);
    let beta = rng.random_range(0.0..TAU);
    let gamma = rng.random_range(0.0..TAU);
    let xi = rng.random_range(0.0..=PI);
    let eta = rng.random_range(0.0..TAU);
    let lambda = rng.random_range(0.0..=1.0);
    ChannelParams::new(alpha, beta, gamma, xi, eta, lambda).expect("lambda drawn from [0, 1]")
}

pub fn random_bell_phases<R: Rng + ?Sized>(rng: &mut R) -> BellPhases {
    BellPhases(std::array::from_fn(|_| rng.random_range(0.0..TAU)))
}

/// Uniform point of the closed unit ball.
fn random_ball_point<R: Rng + ?Sized, const N: usize>(rng: &mut R) -> [f64; N] {
    loop {
        let p: [f64; N] = std::array::from_fn(|_| rng.random_range(-1.0..=1.0));
        let r2: f64 = p.iter().map(|v| v * v).sum();
        if r2 <= 1.0 && r2 > 1e-12 {
            return p;
        }
    }
}

/// Haar-random 2x2 unitary: a uniform unit quaternion times a random phase.
pub fn random_unitary2<R: Rng + ?Sized>(rng: &mut R) -> CMatrix2 {
    let q: [f64; 4] = random_ball_point(rng);
    let norm = q.iter().map(|v| v * v).sum::<f64>().sqrt();
    let [a, b, c, d] = q.map(|v| v / norm);
    let phase = Complex64::from_polar(1.0, rng.random_range(0.0..TAU));
    let m = CMatrix([
        [Complex64::new(a, b), Complex64::new(c, d)],
        [Complex64::new(-c, d), Complex64::new(a, -b)],
    ]);
    m.scale(phase)
}

/// Uniform over the Bloch ball.
pub fn random_density2<R: Rng + ?Sized>(rng: &mut R) -> DensityMatrix2 {
    let n: [f64; 3] = random_ball_point(rng);
    bloch_to_density(&BlochVector(n)).expect("inside the unit ball")
}

/// Parameter pinned to a value that kills some of the shift's factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pin {
    /// `lambda = 0`
    MaximallyMixed,
    /// `alpha` in `{0, pi}`
    Alpha,
    /// `beta` in `{0, pi}`
    Beta,
    /// `gamma` in `{0, pi}`
    Gamma,
    /// `xi` in `{0, pi}`
    XiPole,
    /// `xi = pi/2`
    XiEquator,
    /// `eta` in `{0, pi}`
    EtaAxis,
    /// `eta` in `{pi/2, 3pi/2}`
    EtaQuadrature,
}

/// Pin sets whose parameter families have zero shift. Their union is the
/// whole zero-shift set; remaining parameters are free.
pub const ZERO_SHIFT_FAMILIES: [&[Pin]; 9] = [
    &[Pin::MaximallyMixed],
    &[Pin::Alpha, Pin::Beta],
    &[Pin::Alpha, Pin::Gamma],
    &[Pin::Alpha, Pin::XiPole],
    &[Pin::Alpha, Pin::EtaQuadrature],
    &[Pin::Gamma, Pin::Beta],
    &[Pin::Gamma, Pin::XiPole],
    &[Pin::Gamma, Pin::EtaAxis],
    &[Pin::Beta, Pin::XiEquator],
];

/// Random channel with zero shift, and the index of its family in
/// [`ZERO_SHIFT_FAMILIES`].
pub fn random_zero_shift_params<R: Rng + ?Sized>(rng: &mut R) -> (usize, ChannelParams) {
    let family = rng.random_range(0..ZERO_SHIFT_FAMILIES.len());
    let mut p = random_channel_params(rng);
    let mut lambda = p.env.lambda_mix();
    let mut xi = p.env.xi();
    let mut eta = p.env.eta();
    let mut either = |a: f64, b: f64| if rng.random_bool(0.5) { a } else { b };
    for pin in ZERO_SHIFT_FAMILIES[family] {
        match pin {
            Pin::MaximallyMixed => lambda = 0.0,
            Pin::Alpha => p.angles.alpha = either(0.0, PI),
            Pin::Beta => p.angles.beta = either(0.0, PI),
            Pin::Gamma => p.angles.gamma = either(0.0, PI),
            Pin::XiPole => xi = either(0.0, PI),
            Pin::XiEquator => xi = FRAC_PI_2,
            Pin::EtaAxis => eta = either(0.0, PI),
            Pin::EtaQuadrature => eta = either(FRAC_PI_2, 3.0 * FRAC_PI_2),
        }
    }
    let a = p.angles;
    let params = ChannelParams::new(a.alpha, a.beta, a.gamma, xi, eta, lambda)
        .expect("lambda unchanged or zero");
    (family, params)
}
