//! Exact computations on the restricted Young lattice `Y_N`: partitions as
//! loops in a discrete Möbius strip, the injective hull of the cyclic metric
//! on `N` points, its planar projection, and a continuous analogue.

pub mod continuous;
pub mod error;
pub mod hull;
pub mod linalg;
pub mod moebius;
pub mod partition;
pub mod projection;
pub mod verify;

pub use continuous::{
    discretize_profile, distance_d, make_profile, rectangular_r, Discretization, PLFunction,
};
pub use error::{Error, Result};
pub use hull::{
    cyclic_distance, enumerate_faces, face_count_closed, hasse_skeleton, oracle_vertices,
    vertex_direct, vertex_recursive, CyclicMetric, Face, HullVertex, Skeleton,
};
pub use moebius::{partition_of_rim, rim_of_partition, Rim, Site, StripFunction};
pub use partition::{enumerate_young, Corner, Partition};
pub use projection::{circulant_det, project_skeleton, projection_matrix, Circulant, Embedding};
