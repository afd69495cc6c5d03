//! Rational planes in `L ⊗ Q`, integral orthogonal complements, and the wall
//! condition for positive 3-planes of the K3 lattice.
//!
//! For a positive definite 3-plane `τ` in a form of signature (3,19), the
//! complement `τ^⊥ ∩ L` is negative definite of rank 19, so the roots it
//! contains form a finite set that enumeration decides completely.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::lattice::{Lattice, LatticeVector, SignatureTriple, Sublattice};
use crate::matrix::{clear_denominators, integer_kernel, rational_rank, IntMatrix};
use crate::roots::enumerate::{first_vector_of_norm, short_vectors};

/// The span of 2 or 3 linearly independent rational vectors.
#[derive(Debug, Clone)]
pub struct RationalPlane {
    ambient: Arc<Lattice>,
    basis: Vec<Vec<BigRational>>,
}

impl RationalPlane {
    pub fn new(ambient: Arc<Lattice>, basis: Vec<Vec<BigRational>>) -> Result<Self> {
        if !(2..=3).contains(&basis.len()) {
            return Err(Error::InvalidPlane(format!(
                "expected 2 or 3 basis vectors, got {}",
                basis.len()
            )));
        }
        for v in &basis {
            if v.len() != ambient.rank() {
                return Err(Error::DimensionMismatch {
                    expected: ambient.rank(),
                    actual: v.len(),
                });
            }
        }
        if rational_rank(&basis) != basis.len() {
            return Err(Error::InvalidPlane("basis vectors are linearly dependent".into()));
        }
        Ok(Self { ambient, basis })
    }

    pub fn from_integer_vectors(ambient: Arc<Lattice>, basis: &[LatticeVector]) -> Result<Self> {
        Self::new(ambient, basis.iter().map(LatticeVector::to_rational).collect())
    }

    pub fn ambient(&self) -> &Arc<Lattice> {
        &self.ambient
    }

    pub fn basis(&self) -> &[Vec<BigRational>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Signature of the restricted form, computed on integer multiples of the
    /// basis vectors.
    pub fn signature(&self) -> SignatureTriple {
        let cols: Vec<Vec<BigInt>> = self.basis.iter().map(|v| clear_denominators(v)).collect();
        let b = IntMatrix::from_columns(self.ambient.rank(), &cols).expect("lengths checked");
        let g = b.congruence(self.ambient.gram()).expect("dimensions");
        Lattice::new_possibly_degenerate(g).expect("congruence is symmetric").signature()
    }

    pub fn is_positive_definite(&self) -> bool {
        let s = self.signature();
        s.b_plus == self.dim()
    }
}

/// The saturated sublattice `{x ∈ L : ⟨x, v⟩ = 0 for all v}` with its
/// restricted form and embedding. An empty list returns all of `L`.
pub fn orthogonal_complement(l: &Lattice, vs: &[Vec<BigRational>]) -> Result<Sublattice> {
    let n = l.rank();
    let mut rows = Vec::with_capacity(vs.len());
    for v in vs {
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: v.len(),
            });
        }
        let w = clear_denominators(v);
        rows.push(l.gram().mul_vec(&w)?);
    }
    let embedding = if rows.is_empty() {
        IntMatrix::identity(n)
    } else {
        integer_kernel(&IntMatrix::from_rows(n, rows)?)
    };
    let gram = embedding.congruence(l.gram())?;
    Ok(Sublattice {
        lattice: Lattice::new_possibly_degenerate(gram)?,
        embedding,
    })
}

/// Outcome of the wall test for a positive 3-plane.
#[derive(Debug, Clone)]
pub struct WallCheck {
    pub in_w: bool,
    pub complement_rank: usize,
    pub complement_signature: SignatureTriple,
    /// A root orthogonal to the plane, in ambient coordinates, when one exists.
    pub witness: Option<LatticeVector>,
}

fn k3_complement(plane: &RationalPlane) -> Result<Sublattice> {
    let expected = SignatureTriple::new(3, 19, 0);
    let sig = plane.ambient.signature();
    if sig != expected {
        return Err(Error::SignatureMismatch {
            expected: expected.to_string(),
            actual: sig.to_string(),
        });
    }
    if plane.dim() != 3 {
        return Err(Error::InvalidPlane(format!("expected a 3-plane, got dimension {}", plane.dim())));
    }
    if !plane.is_positive_definite() {
        return Err(Error::PlaneNotPositive);
    }
    let comp = orthogonal_complement(&plane.ambient, &plane.basis)?;
    let csig = comp.lattice.signature();
    if comp.lattice.rank() != 19 || csig != SignatureTriple::new(0, 19, 0) {
        return Err(Error::Inconsistent(format!(
            "complement of a positive 3-plane has rank {} and signature {csig}",
            comp.lattice.rank()
        )));
    }
    Ok(comp)
}

/// Decides whether the complement of a positive rational 3-plane contains no
/// root. Stops at the first root found.
pub fn check_w(plane: &RationalPlane) -> Result<WallCheck> {
    let comp = k3_complement(plane)?;
    let witness = first_vector_of_norm(&comp.lattice, &BigInt::from(-2))?
        .map(|v| comp.to_ambient(&v))
        .transpose()?;
    Ok(WallCheck {
        in_w: witness.is_none(),
        complement_rank: comp.lattice.rank(),
        complement_signature: comp.lattice.signature(),
        witness,
    })
}

pub fn is_in_w(plane: &RationalPlane) -> Result<bool> {
    Ok(check_w(plane)?.in_w)
}

/// Every root orthogonal to a positive rational 3-plane, in ambient
/// coordinates, sorted.
pub fn complement_roots(plane: &RationalPlane) -> Result<Vec<LatticeVector>> {
    let comp = k3_complement(plane)?;
    let mut roots = short_vectors(&comp.lattice, &BigInt::from(-2))?
        .iter()
        .map(|v| comp.to_ambient(v))
        .collect::<Result<Vec<_>>>()?;
    roots.sort();
    Ok(roots)
}
