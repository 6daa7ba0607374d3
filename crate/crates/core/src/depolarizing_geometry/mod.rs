//! Geometry of generalized depolarizing (Pauli) channels.
//!
//! A Pauli channel with weights `eps_0..eps_3` acts on the Bloch ball as
//! `diag(x, y, z)`; the admissible triples fill the tetrahedron with
//! vertices `(1,1,1)`, `(1,-1,-1)`, `(-1,1,-1)`, `(-1,-1,1)`.
//!
//! Channels driven by a single mixed environment qubit reach exactly the
//! triples `(cos a cos b, cos b cos c, cos c cos a)` up to flipping the sign
//! of two coordinates at once (a proper half-turn before and after the
//! channel). On the representative with nonnegative coordinates this is the
//! set `xy <= z, yz <= x, zx <= y`. Triples with an odd number of negative,
//! nonzero coordinates have no such representative and are not reachable,
//! since the forward map always gives `xyz = (cos a cos b cos c)^2 >= 0`.

mod cross_section;
mod volume;

pub use cross_section::{cross_section, CrossSection, SliceRect};
pub use volume::{analytic_volume, mc_volume_fraction, slice_area, VolumeEstimate, SHARD_SIZE};

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

/// Boundary tolerance for exact-arithmetic geometry.
pub const GEOMETRY_TOL: f64 = 1e-12;

/// Boundary tolerance for points computed from channel numerics.
pub const NUMERIC_TOL: f64 = 1e-9;

pub const TETRAHEDRON_VOLUME: f64 = 8.0 / 3.0;
pub const SIMULABLE_VOLUME: f64 = 1.0;
pub const SIMULABLE_FRACTION: f64 = 3.0 / 8.0;

/// Diagonal of a Pauli channel's affine map.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiagonalPoint {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl DiagonalPoint {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        DiagonalPoint { x, y, z }
    }

    pub fn from_array([x, y, z]: [f64; 3]) -> Self {
        DiagonalPoint { x, y, z }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn max_abs_diff(&self, other: &DiagonalPoint) -> f64 {
        (self.x - other.x)
            .abs()
            .max((self.y - other.y).abs())
            .max((self.z - other.z).abs())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SimAngles {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl SimAngles {
    pub fn new(a: f64, b: f64, c: f64) -> Self {
        SimAngles { a, b, c }
    }
}

/// The tetrahedron of Pauli channels.
pub struct Tetrahedron;

impl Tetrahedron {
    /// Identity first, then the three Pauli conjugations.
    pub const VERTICES: [DiagonalPoint; 4] = [
        DiagonalPoint::new(1.0, 1.0, 1.0),
        DiagonalPoint::new(1.0, -1.0, -1.0),
        DiagonalPoint::new(-1.0, 1.0, -1.0),
        DiagonalPoint::new(-1.0, -1.0, 1.0),
    ];

    pub const EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

    pub const FACES: [[usize; 3]; 4] = [[1, 2, 3], [0, 2, 3], [0, 1, 3], [0, 1, 2]];

    pub const VOLUME: f64 = TETRAHEDRON_VOLUME;

    /// Point with the given barycentric weights over `VERTICES`.
    pub fn barycentric(weights: [f64; 4]) -> DiagonalPoint {
        let mut p = [0.0; 3];
        for (w, v) in weights.iter().zip(Self::VERTICES) {
            for (acc, coord) in p.iter_mut().zip(v.to_array()) {
                *acc += w * coord;
            }
        }
        DiagonalPoint::from_array(p)
    }
}

/// Pauli weights `(eps_0, eps_1, eps_2, eps_3)` of a diagonal triple.
pub fn epsilons_from_point(p: DiagonalPoint) -> [f64; 4] {
    let DiagonalPoint { x, y, z } = p;
    [
        0.25 * (1.0 + x + y + z),
        0.25 * (1.0 + x - y - z),
        0.25 * (1.0 - x + y - z),
        0.25 * (1.0 - x - y + z),
    ]
}

pub fn in_tetrahedron(p: DiagonalPoint, tol: f64) -> bool {
    epsilons_from_point(p).iter().all(|e| *e >= -tol)
}

pub fn point_from_angles(s: SimAngles) -> DiagonalPoint {
    let (ca, cb, cc) = (s.a.cos(), s.b.cos(), s.c.cos());
    DiagonalPoint::new(ca * cb, cb * cc, cc * ca)
}

/// All-nonnegative representative under pair sign flips, if one exists.
///
/// A zero coordinate can absorb a flip, so only an odd number of strictly
/// negative coordinates with no zero among them has no representative.
pub fn canonical_sign_representative(p: DiagonalPoint) -> Option<DiagonalPoint> {
    let coords = p.to_array();
    let negatives = coords.iter().filter(|v| **v < 0.0).count();
    let has_zero = coords.contains(&0.0);
    if negatives % 2 == 1 && !has_zero {
        return None;
    }
    Some(DiagonalPoint::new(p.x.abs(), p.y.abs(), p.z.abs()))
}

/// Whether the diagonal channel `p` can be realized with one mixed
/// environment qubit. Coordinates within `tol` of zero are treated as zero.
pub fn is_simulable(p: DiagonalPoint, tol: f64) -> bool {
    if !in_tetrahedron(p, tol) {
        return false;
    }
    let snap = |v: f64| if v.abs() <= tol { 0.0 } else { v };
    let snapped = DiagonalPoint::new(snap(p.x), snap(p.y), snap(p.z));
    let Some(DiagonalPoint { x, y, z }) = canonical_sign_representative(snapped) else {
        return false;
    };
    x * y <= z + tol && y * z <= x + tol && z * x <= y + tol
}

/// Angles `(a, b, c)` whose forward image is the canonical representative
/// of `p`, or `None` when no such angles exist.
pub fn invert_to_angles(p: DiagonalPoint) -> Option<SimAngles> {
    let DiagonalPoint { x, y, z } = canonical_sign_representative(p)?;
    let limit = 1.0 + NUMERIC_TOL;
    let acos = |v: f64| v.clamp(0.0, 1.0).acos();
    let zeros = [x, y, z].iter().filter(|v| **v == 0.0).count();
    match zeros {
        0 => {
            let cos2 = [z * x / y, x * y / z, y * z / x];
            if cos2.iter().any(|c| !c.is_finite() || *c > limit) {
                return None;
            }
            let [a, b, c] = cos2.map(|c| acos(c.sqrt()));
            Some(SimAngles { a, b, c })
        }
        // a single zero forces a second one
        1 => None,
        2 => {
            if x > 0.0 {
                (x <= limit).then(|| SimAngles::new(0.0, acos(x), FRAC_PI_2))
            } else if y > 0.0 {
                (y <= limit).then(|| SimAngles::new(FRAC_PI_2, 0.0, acos(y)))
            } else {
                (z <= limit).then(|| SimAngles::new(acos(z), FRAC_PI_2, 0.0))
            }
        }
        _ => Some(SimAngles::new(FRAC_PI_2, FRAC_PI_2, 0.0)),
    }
}

/// `diag(kappa, kappa, 2 kappa - 1)`: weights `eps_0 = kappa`,
/// `eps_1 = eps_2 = (1 - kappa)/2`, `eps_3 = 0`.
pub fn two_pauli_point(kappa: f64) -> Result<DiagonalPoint> {
    if !(0.0..=1.0).contains(&kappa) {
        return Err(Error::OutOfRange {
            name: "kappa",
            value: kappa,
            range: "[0, 1]",
        });
    }
    Ok(DiagonalPoint::new(kappa, kappa, 2.0 * kappa - 1.0))
}

pub fn two_pauli_simulable(kappa: f64) -> Result<bool> {
    Ok(is_simulable(two_pauli_point(kappa)?, GEOMETRY_TOL))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_3, PI};

    #[test]
    fn epsilon_examples() {
        assert_eq!(
            epsilons_from_point(DiagonalPoint::new(1.0, 1.0, 1.0)),
            [1.0, 0.0, 0.0, 0.0]
        );
        assert_eq!(
            epsilons_from_point(DiagonalPoint::new(0.0, 0.0, 0.0)),
            [0.25; 4]
        );
        for kappa in [0.0, 0.3, 0.5, 0.8, 1.0] {
            let eps = epsilons_from_point(DiagonalPoint::new(kappa, kappa, 2.0 * kappa - 1.0));
            let expected = [kappa, 0.5 * (1.0 - kappa), 0.5 * (1.0 - kappa), 0.0];
            for (a, b) in eps.iter().zip(expected) {
                assert!((a - b).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn membership_examples() {
        assert!(in_tetrahedron(
            DiagonalPoint::new(1.0, 1.0, 1.0),
            GEOMETRY_TOL
        ));
        assert!(!in_tetrahedron(
            DiagonalPoint::new(1.0, 1.0, -1.0),
            GEOMETRY_TOL
        ));
        assert!(in_tetrahedron(
            DiagonalPoint::new(0.0, 0.0, 0.0),
            GEOMETRY_TOL
        ));
        for v in Tetrahedron::VERTICES {
            assert!(in_tetrahedron(v, 0.0));
        }
    }

    #[test]
    fn forward_map_examples() {
        assert_eq!(
            point_from_angles(SimAngles::new(0.0, 0.0, 0.0)),
            DiagonalPoint::new(1.0, 1.0, 1.0)
        );
        let origin = point_from_angles(SimAngles::new(FRAC_PI_2, FRAC_PI_2, 0.4));
        assert!(origin.max_abs_diff(&DiagonalPoint::new(0.0, 0.0, 0.0)) < 1e-15);
        let quarter = point_from_angles(SimAngles::new(FRAC_PI_3, FRAC_PI_3, FRAC_PI_3));
        assert!(quarter.max_abs_diff(&DiagonalPoint::new(0.25, 0.25, 0.25)) < 1e-15);
    }

    #[test]
    fn sign_representative_examples() {
        assert_eq!(
            canonical_sign_representative(DiagonalPoint::new(0.5, -0.5, -1.0)),
            Some(DiagonalPoint::new(0.5, 0.5, 1.0))
        );
        assert_eq!(
            canonical_sign_representative(DiagonalPoint::new(-0.5, 0.5, 0.5)),
            None
        );
        assert_eq!(
            canonical_sign_representative(DiagonalPoint::new(0.0, -0.5, 0.5)),
            Some(DiagonalPoint::new(0.0, 0.5, 0.5))
        );
        assert_eq!(
            canonical_sign_representative(DiagonalPoint::new(-0.1, -0.2, -0.3)),
            None
        );
    }

    #[test]
    fn simulability_examples() {
        assert!(is_simulable(
            DiagonalPoint::new(1.0, 1.0, 1.0),
            GEOMETRY_TOL
        ));
        assert!(!is_simulable(
            DiagonalPoint::new(0.5, 0.5, 0.0),
            GEOMETRY_TOL
        ));
        assert!(is_simulable(
            DiagonalPoint::new(0.0, 0.0, 0.0),
            GEOMETRY_TOL
        ));
        // outside the tetrahedron even though the constraints hold
        assert!(!is_simulable(
            DiagonalPoint::new(1.0, 1.0, -1.0),
            GEOMETRY_TOL
        ));
        // edge point that violates the unsigned constraints literally
        assert!(is_simulable(
            DiagonalPoint::new(0.5, -0.5, -1.0),
            GEOMETRY_TOL
        ));
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(
            invert_to_angles(DiagonalPoint::new(1.0, 1.0, 1.0)),
            Some(SimAngles::new(0.0, 0.0, 0.0))
        );
        let s = invert_to_angles(DiagonalPoint::new(0.25, 0.25, 0.25)).unwrap();
        for angle in [s.a, s.b, s.c] {
            assert!((angle - FRAC_PI_3).abs() < 1e-12);
        }
    }

    #[test]
    fn two_pauli_upper_branch_is_not_invertible() {
        for k in 1..100 {
            let kappa = 0.5 + 0.005 * k as f64;
            let p = two_pauli_point(kappa).unwrap();
            // cos^2 b = kappa^2 / (2 kappa - 1) = 1 + (kappa - 1)^2 / (2 kappa - 1)
            let cos2b = kappa * kappa / (2.0 * kappa - 1.0);
            let identity = 1.0 + (kappa - 1.0).powi(2) / (2.0 * kappa - 1.0);
            assert!((cos2b - identity).abs() < 1e-12);
            assert!(cos2b > 1.0);
            assert_eq!(invert_to_angles(p), None, "kappa = {kappa}");
        }
    }

    #[test]
    fn inversion_handles_zero_coordinates() {
        for p in [
            DiagonalPoint::new(0.4, 0.0, 0.0),
            DiagonalPoint::new(0.0, -0.7, 0.0),
            DiagonalPoint::new(0.0, 0.0, 0.3),
            DiagonalPoint::new(0.0, 0.0, 0.0),
        ] {
            let rep = canonical_sign_representative(p).unwrap();
            let back = point_from_angles(invert_to_angles(p).unwrap());
            assert!(back.max_abs_diff(&rep) < 1e-15, "{p:?} -> {back:?}");
        }
        assert_eq!(invert_to_angles(DiagonalPoint::new(0.5, 0.5, 0.0)), None);
        assert_eq!(invert_to_angles(DiagonalPoint::new(-0.5, 0.5, 0.5)), None);
    }

    #[test]
    fn two_pauli_examples() {
        assert_eq!(
            two_pauli_point(1.0).unwrap(),
            DiagonalPoint::new(1.0, 1.0, 1.0)
        );
        assert_eq!(
            two_pauli_point(0.5).unwrap(),
            DiagonalPoint::new(0.5, 0.5, 0.0)
        );
        assert_eq!(
            two_pauli_point(0.0).unwrap(),
            DiagonalPoint::new(0.0, 0.0, -1.0)
        );
        assert!(two_pauli_point(1.2).is_err());
        assert!(two_pauli_simulable(-0.1).is_err());
        assert!(two_pauli_simulable(1.0).unwrap());
        assert!(!two_pauli_simulable(0.9).unwrap());
        assert!(!two_pauli_simulable(0.25).unwrap());
        for k in 0..=100 {
            assert!(in_tetrahedron(
                two_pauli_point(k as f64 / 100.0).unwrap(),
                GEOMETRY_TOL
            ));
        }
    }

    /// kappa = 0 is the midpoint of the edge between two Pauli vertices, which
    /// the forward map reaches with a = 0, b = pi/2, c = pi.
    #[test]
    fn two_pauli_endpoint_lies_on_an_edge() {
        let p = two_pauli_point(0.0).unwrap();
        let mid = Tetrahedron::barycentric([0.0, 0.5, 0.5, 0.0]);
        assert_eq!(p, mid);
        assert!(point_from_angles(SimAngles::new(0.0, FRAC_PI_2, PI)).max_abs_diff(&p) < 1e-15);
        assert!(two_pauli_simulable(0.0).unwrap());
    }

    fn arb_point() -> impl Strategy<Value = DiagonalPoint> {
        (-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64).prop_map(|(x, y, z)| DiagonalPoint::new(x, y, z))
    }

    proptest! {
        #[test]
        fn epsilons_sum_to_one(p in arb_point()) {
            prop_assert!((epsilons_from_point(p).iter().sum::<f64>() - 1.0).abs() < 1e-15);
        }

        #[test]
        fn forward_points_are_simulable(a in 0.0..PI, b in 0.0..PI, c in 0.0..PI) {
            prop_assert!(is_simulable(point_from_angles(SimAngles::new(a, b, c)), GEOMETRY_TOL));
        }

        #[test]
        fn pair_flips_preserve_simulability(p in arb_point(), flip in 0usize..3) {
            let DiagonalPoint { x, y, z } = p;
            let q = match flip {
                0 => DiagonalPoint::new(x, -y, -z),
                1 => DiagonalPoint::new(-x, y, -z),
                _ => DiagonalPoint::new(-x, -y, z),
            };
            prop_assert_eq!(is_simulable(p, GEOMETRY_TOL), is_simulable(q, GEOMETRY_TOL));
        }

        #[test]
        fn simulability_is_permutation_symmetric(p in arb_point()) {
            let DiagonalPoint { x, y, z } = p;
            let base = is_simulable(p, GEOMETRY_TOL);
            prop_assert_eq!(base, is_simulable(DiagonalPoint::new(y, z, x), GEOMETRY_TOL));
            prop_assert_eq!(base, is_simulable(DiagonalPoint::new(y, x, z), GEOMETRY_TOL));
        }

        #[test]
        fn inversion_round_trips(a in 0.0..PI, b in 0.0..PI, c in 0.0..PI) {
            let p = point_from_angles(SimAngles::new(a, b, c));
            let rep = canonical_sign_representative(p).unwrap();
            let back = point_from_angles(invert_to_angles(p).unwrap());
            prop_assert!(back.max_abs_diff(&rep) <= 1e-10);
        }
    }
}
