//! Single-qubit channels generated by a two-qubit unitary acting on the
//! system and one mixed environment qubit, and the geometry of the Pauli
//! channels such an environment can reproduce.

pub mod canonical_unitary;
pub mod channel_map;
pub mod depolarizing_geometry;
pub mod error;
pub mod linalg;
pub mod sampling;
pub mod states;

pub use canonical_unitary::{
    bell_diagonal_unitary, canonical_unitary, phases_to_angles, sandwich, BellPhases,
    CanonicalAngles, TwoQubitUnitary,
};
pub use channel_map::{
    analytic_affine, apply_channel, canonical_diagonal, choi_matrix, depolarizing_affine,
    extract_affine, is_completely_positive, AffineMap, ChannelParams, SignedDiagonal,
};
pub use depolarizing_geometry::{
    analytic_volume, cross_section, in_tetrahedron, invert_to_angles, is_simulable,
    mc_volume_fraction, point_from_angles, two_pauli_point, two_pauli_simulable, CrossSection,
    DiagonalPoint, SimAngles, VolumeEstimate,
};
pub use error::{Error, Result};
pub use states::{BlochVector, DensityMatrix2, EnvironmentParams, PureStateAngles};
