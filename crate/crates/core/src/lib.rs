//! Exact arithmetic on the K3 intersection lattice `3U ⊕ 2E8(-1)` and its
//! isometries.
//!
//! The crate covers lattice construction and inertia, integer isometries and
//! the orientation character on positive 3-planes, the `(t, c, r)` structure
//! of involutions, the fixed-surface obstruction for smooth involutions, and
//! root enumeration in definite lattices together with the wall conditions of
//! the K3 period domain.

pub mod error;
pub mod involution;
pub mod isometry;
pub mod json;
pub mod lattice;
pub mod matrix;
pub mod obstruction;
pub mod reduce;
pub mod roots;

pub use error::{Error, Result};
pub use isometry::{swap_involution_k3, Isometry};
pub use lattice::{e8_minus, hyperbolic_plane, k3_lattice, Lattice, LatticeVector, SignatureTriple};
