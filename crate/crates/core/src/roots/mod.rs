//! Roots (vectors of square −2), reflections, and the wall conditions of the
//! K3 period domain.

pub mod enumerate;
pub mod periods;

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::isometry::Isometry;
use crate::lattice::{Lattice, LatticeVector};
use crate::matrix::IntMatrix;

pub use enumerate::{coefficient_bounds, first_vector_of_norm, short_vectors};
pub use periods::{check_w, complement_roots, is_in_w, orthogonal_complement, RationalPlane, WallCheck};

/// A finite set of roots, closed under negation and kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RootSet {
    vectors: Vec<LatticeVector>,
}

impl RootSet {
    /// Validates every vector and adds the negatives of those given.
    pub fn new(l: &Lattice, vectors: impl IntoIterator<Item = LatticeVector>) -> Result<Self> {
        let mut out = Vec::new();
        for v in vectors {
            let n = l.norm(&v)?;
            if n != BigInt::from(-2) {
                return Err(Error::NotRoot(n));
            }
            out.push(v.neg());
            out.push(v);
        }
        out.sort();
        out.dedup();
        Ok(Self { vectors: out })
    }

    /// All roots of a negative definite lattice.
    pub fn of_definite(l: &Lattice) -> Result<Self> {
        Ok(Self {
            vectors: short_vectors(l, &BigInt::from(-2))?,
        })
    }

    pub fn vectors(&self) -> &[LatticeVector] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

/// Whether `⟨u, δ⟩ ≠ 0` for every root in the set.
pub fn wall_clearance(l: &Lattice, u: &[BigRational], roots: &RootSet) -> Result<bool> {
    for r in roots.vectors() {
        if l.pairing_rational(u, &r.to_rational())?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The reflection `x ↦ x + ⟨x, δ⟩·δ` in a root `δ`.
pub fn reflection_in_root(l: Arc<Lattice>, delta: &LatticeVector) -> Result<Isometry> {
    let norm = l.norm(delta)?;
    if norm != BigInt::from(-2) {
        return Err(Error::NotRoot(norm));
    }
    let n = l.rank();
    let g_delta = l.gram().mul_vec(&delta.0)?;
    let m = IntMatrix::from_fn(n, n, |i, j| {
        let id = if i == j { BigInt::from(1) } else { BigInt::zero() };
        id + &delta.0[i] * &g_delta[j]
    });
    Isometry::new(l, m)
}
