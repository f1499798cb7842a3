//! Mesh patterns of length at most 4 and the equidistribution of
//! `(123, R)` and `(132, R)` over symmetric shadings `R`.
//!
//! * [`perm`] and [`mesh`]: permutations, shadings, occurrence search.
//! * [`distribution`]: exact occurrence distributions over `S_n`.
//! * [`scan`]: exhaustive sweep of all symmetric shadings.
//! * [`bijections`]: occurrence-swapping transforms and their verifier.
//! * [`catalog`]: the registry of known pairs.

pub mod bijections;
pub mod catalog;
pub mod distribution;
pub mod error;
pub mod exec;
pub mod mesh;
pub mod perm;
pub mod scan;
pub mod sequences;

pub use error::Error;
pub use exec::{Execution, Sn, HARD_CAP};
pub use mesh::{MeshPattern, Shading};
pub use perm::Permutation;
