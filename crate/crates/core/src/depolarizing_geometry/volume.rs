//! Volume of the simulable region.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{in_tetrahedron, is_simulable, DiagonalPoint, GEOMETRY_TOL, TETRAHEDRON_VOLUME};
use crate::error::{Error, Result};

/// Samples drawn from each independently seeded stream.
pub const SHARD_SIZE: u64 = 1 << 16;

/// Counts from rejection sampling the cube `[-1, 1]^3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VolumeEstimate {
    pub samples: u64,
    pub in_tetrahedron: u64,
    pub simulable: u64,
}

fn binomial_stderr(p: f64, n: u64) -> f64 {
    if n == 0 {
        return f64::NAN;
    }
    (p * (1.0 - p) / n as f64).sqrt()
}

impl VolumeEstimate {
    /// Simulable share of the accepted samples.
    pub fn fraction(&self) -> f64 {
        self.simulable as f64 / self.in_tetrahedron as f64
    }

    pub fn stderr(&self) -> f64 {
        binomial_stderr(self.fraction(), self.in_tetrahedron)
    }

    /// Share of cube samples that landed in the tetrahedron.
    pub fn acceptance(&self) -> f64 {
        self.in_tetrahedron as f64 / self.samples as f64
    }

    pub fn acceptance_stderr(&self) -> f64 {
        binomial_stderr(self.acceptance(), self.samples)
    }

    pub fn volume(&self) -> f64 {
        self.fraction() * TETRAHEDRON_VOLUME
    }

    pub fn volume_stderr(&self) -> f64 {
        self.stderr() * TETRAHEDRON_VOLUME
    }
}

fn run_shard(seed: u64, shard: u64, count: u64) -> (u64, u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(shard);
    let mut inside = 0;
    let mut simulable = 0;
    for _ in 0..count {
        let p = DiagonalPoint::new(
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
        );
        if in_tetrahedron(p, 0.0) {
            inside += 1;
            if is_simulable(p, GEOMETRY_TOL) {
                simulable += 1;
            }
        }
    }
    (inside, simulable)
}

/// Monte Carlo estimate of the simulable fraction of the tetrahedron.
///
/// Samples are split into fixed-size shards, each with its own ChaCha stream,
/// so the counts depend only on `samples` and `seed`, not on thread count.
pub fn mc_volume_fraction(samples: u64, seed: u64) -> Result<VolumeEstimate> {
    if samples == 0 {
        return Err(Error::OutOfRange {
            name: "samples",
            value: 0.0,
            range: ">= 1",
        });
    }
    let shards = samples.div_ceil(SHARD_SIZE);
    let (in_tetrahedron, simulable) = (0..shards)
        .into_par_iter()
        .map(|shard| {
            let count = SHARD_SIZE.min(samples - shard * SHARD_SIZE);
            run_shard(seed, shard, count)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    if in_tetrahedron == 0 {
        return Err(Error::OutOfRange {
            name: "samples",
            value: samples as f64,
            range: "enough to hit the tetrahedron",
        });
    }
    Ok(VolumeEstimate {
        samples,
        in_tetrahedron,
        simulable,
    })
}

/// Composite Simpson rule on `[a, b]` with an even number of intervals.
fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, intervals: usize) -> f64 {
    let n = intervals + intervals % 2;
    let h = (b - a) / n as f64;
    let mut sum = f(a) + f(b);
    for k in 1..n {
        let weight = if k % 2 == 1 { 4.0 } else { 2.0 };
        sum += weight * f(a + k as f64 * h);
    }
    sum * h / 3.0
}

/// Length of the simulable `y` range at nonnegative `x` in the slice at
/// nonnegative `z`: `y >= z x` together with `y <= z / x` and `y <= x / z`.
fn simulable_run(x: f64, z: f64) -> f64 {
    if x == 0.0 || z == 0.0 {
        return 0.0;
    }
    ((z / x).min(x / z) - z * x).max(0.0)
}

const SLICE_INTERVALS: usize = 256;

/// Area of the simulable region in the slice at height `z`.
///
/// Only the two quadrants with an even number of negative coordinates
/// (counting `z`) contribute, and they mirror each other. The run length has
/// a kink at `x = |z|`; beyond it the integral is taken in `ln x`, which keeps
/// the `1/x` upper bound smooth as `z` shrinks.
pub fn slice_area(z: f64) -> f64 {
    let z = z.abs();
    if z == 0.0 || z > 1.0 {
        return 0.0;
    }
    let inner = simpson(|x| simulable_run(x, z), 0.0, z, SLICE_INTERVALS);
    let outer = simpson(
        |u| {
            let x = u.exp();
            simulable_run(x, z) * x
        },
        z.ln(),
        0.0,
        SLICE_INTERVALS,
    );
    2.0 * (inner + outer)
}

/// Volume of the simulable region, integrating slice areas over `z` with
/// `points` quadrature nodes.
pub fn analytic_volume(points: usize) -> Result<f64> {
    if points < 16 {
        return Err(Error::OutOfRange {
            name: "points",
            value: points as f64,
            range: ">= 16",
        });
    }
    // the area is even in z
    Ok(2.0 * simpson(slice_area, 0.0, 1.0, points / 2))
}
