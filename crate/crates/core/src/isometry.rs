//! Integer isometries of a lattice.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{diagonalize, k3_lattice, Lattice, LatticeVector, SignatureTriple};
use crate::lattice::{K3_E8_A_OFFSET, K3_E8_B_OFFSET, K3_U_OFFSETS};
use crate::matrix::{clear_denominators, IntMatrix};

/// An integer matrix `M` with `Mᵀ G M = G`, acting on coordinate columns.
#[derive(Debug, Clone)]
pub struct Isometry {
    lattice: Arc<Lattice>,
    matrix: IntMatrix,
}

impl PartialEq for Isometry {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix && same_form(&self.lattice, &other.lattice)
    }
}

impl Eq for Isometry {}

fn same_form(a: &Lattice, b: &Lattice) -> bool {
    std::ptr::eq(a, b) || a.gram() == b.gram()
}

impl Isometry {
    /// Checks `Mᵀ G M = G` entry by entry, reporting the first mismatch.
    pub fn new(lattice: Arc<Lattice>, matrix: IntMatrix) -> Result<Self> {
        let n = lattice.rank();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: if matrix.rows() != n { matrix.rows() } else { matrix.cols() },
            });
        }
        let image = matrix.congruence(lattice.gram())?;
        for i in 0..n {
            for j in 0..n {
                if image[(i, j)] != lattice.gram()[(i, j)] {
                    return Err(Error::NotIsometry {
                        row: i,
                        col: j,
                        found: image[(i, j)].clone(),
                        expected: lattice.gram()[(i, j)].clone(),
                    });
                }
            }
        }
        if lattice.determinant().is_zero() {
            // a degenerate form does not force invertibility
            matrix.unimodular_inverse()?;
        }
        Ok(Self { lattice, matrix })
    }

    pub fn identity(lattice: Arc<Lattice>) -> Self {
        let n = lattice.rank();
        Self {
            lattice,
            matrix: IntMatrix::identity(n),
        }
    }

    pub fn negation(lattice: Arc<Lattice>) -> Self {
        let n = lattice.rank();
        Self {
            lattice,
            matrix: IntMatrix::identity(n).neg(),
        }
    }

    pub fn lattice(&self) -> &Arc<Lattice> {
        &self.lattice
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, v: &LatticeVector) -> Result<LatticeVector> {
        Ok(LatticeVector(self.matrix.mul_vec(&v.0)?))
    }

    pub fn apply_rational(&self, v: &[BigRational]) -> Result<Vec<BigRational>> {
        if v.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                actual: v.len(),
            });
        }
        Ok((0..self.rank())
            .map(|i| {
                self.matrix
                    .row(i)
                    .iter()
                    .zip(v)
                    .map(|(a, x)| BigRational::from_integer(a.clone()) * x)
                    .sum()
            })
            .collect())
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if same_form(&self.lattice, &other.lattice) {
            Ok(())
        } else {
            Err(Error::LatticeMismatch)
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self {
            lattice: self.lattice.clone(),
            matrix: self.matrix.mul(&other.matrix)?,
        })
    }

    pub fn inverse(&self) -> Result<Self> {
        Ok(Self {
            lattice: self.lattice.clone(),
            matrix: self.matrix.unimodular_inverse()?,
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity(self.lattice.clone());
        for _ in 0..k {
            acc = acc.compose(self).expect("same lattice");
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn determinant(&self) -> BigInt {
        self.matrix.determinant().expect("square")
    }

    /// Least `k` in `1..=bound` with `selfᵏ = id`, or `None` if there is none.
    pub fn order(&self, bound: u64) -> Option<u64> {
        let mut power = self.clone();
        for k in 1..=bound {
            if power.is_identity() {
                return Some(k);
            }
            power = power.compose(self).expect("same lattice");
        }
        None
    }

    /// `self² = id` and `self ≠ id`.
    pub fn is_involution(&self) -> bool {
        !self.is_identity() && self.compose(self).expect("same lattice").is_identity()
    }

    /// Whether the matrices commute, `ab = ba`.
    pub fn commutes_with(&self, other: &Self) -> Result<bool> {
        Ok(self.compose(other)? == other.compose(self)?)
    }

    /// `g ∘ self ∘ g⁻¹`
    pub fn conjugate_by(&self, g: &Self) -> Result<Self> {
        g.compose(self)?.compose(&g.inverse()?)
    }

    /// Whether the isometry preserves the orientation of positive definite
    /// 3-planes, i.e. lies in the index-two subgroup Γ.
    ///
    /// With a reference positive 3-plane `P₀ = span(p₁, p₂, p₃)`, the matrix
    /// `N_ij = ⟨a(pᵢ), pⱼ⟩` pairs two positive 3-planes of a form with three
    /// positive directions, so it is nonsingular and its determinant sign is
    /// the orientation character.
    pub fn in_gamma(&self) -> Result<bool> {
        let sig = self.lattice.signature();
        let expected = SignatureTriple::new(3, 19, 0);
        if sig != expected {
            return Err(Error::SignatureMismatch {
                expected: expected.to_string(),
                actual: sig.to_string(),
            });
        }
        Ok(self.orientation_character()?.is_positive())
    }

    /// `det N` for the reference positive plane of the ambient lattice. Works
    /// for any nondegenerate ambient form.
    pub fn orientation_character(&self) -> Result<BigInt> {
        let plane = reference_positive_plane(&self.lattice);
        let images: Vec<LatticeVector> = plane.iter().map(|p| self.apply(p)).collect::<Result<_>>()?;
        let k = plane.len();
        let n = IntMatrix::from_fn(k, k, |i, j| {
            self.lattice.pairing(&images[i], &plane[j]).expect("lengths match")
        });
        let d = n.determinant()?;
        if d.is_zero() {
            return Err(Error::Inconsistent(
                "pairing between positive planes is singular".into(),
            ));
        }
        Ok(d)
    }
}

/// A basis of a maximal positive definite subspace, as integer vectors.
///
/// For the K3 lattice in its standard basis this is `eᵢ + fᵢ`, `i = 1,2,3`.
/// Other lattices use the positive directions of a rational diagonalization.
pub fn reference_positive_plane(lattice: &Lattice) -> Vec<LatticeVector> {
    if lattice.gram() == k3_lattice().gram() {
        return K3_U_OFFSETS
            .iter()
            .map(|&o| {
                let mut v = LatticeVector::zero(22);
                v.0[o] = BigInt::one();
                v.0[o + 1] = BigInt::one();
                v
            })
            .collect();
    }
    let (diag, basis) = diagonalize(lattice.gram());
    diag.iter()
        .zip(&basis)
        .filter(|(d, _)| d.is_positive())
        .map(|(_, v)| LatticeVector(clear_denominators(v)))
        .collect()
}

fn permutation_matrix(n: usize, image: impl Fn(usize) -> usize) -> IntMatrix {
    // column j is the image of basis vector j
    let mut m = IntMatrix::zeros(n, n);
    for j in 0..n {
        m[(image(j), j)] = BigInt::one();
    }
    m
}

fn k3_from_permutation(image: impl Fn(usize) -> usize) -> Result<Isometry> {
    let k3 = Arc::new(k3_lattice());
    Isometry::new(k3, permutation_matrix(22, image))
}

/// The involution induced by swapping the factors of `S² × S²` in all three
/// hyperbolic summands and exchanging the two `-E8` summands.
///
/// On [`k3_lattice`]: `eᵢ ↔ fᵢ` for `i = 1,2,3`, and `aⱼ ↔ bⱼ` for `j = 1..8`.
pub fn swap_involution_k3() -> Isometry {
    k3_from_permutation(swap_permutation).expect("swap preserves the K3 form")
}

/// The basis permutation underlying [`swap_involution_k3`].
pub fn swap_permutation(j: usize) -> usize {
    match j {
        0..=5 => j ^ 1,
        K3_E8_A_OFFSET..K3_E8_B_OFFSET => j + 8,
        _ => j - 8,
    }
}

/// Exchanges hyperbolic summands `Uᵢ ↔ Uⱼ` (1-based) of the K3 lattice.
pub fn permute_u_blocks(i: usize, j: usize) -> Result<Isometry> {
    if !(1..=3).contains(&i) || !(1..=3).contains(&j) {
        return Err(Error::Parse(format!("hyperbolic summand index out of range: ({i},{j})")));
    }
    let (a, b) = (K3_U_OFFSETS[i - 1], K3_U_OFFSETS[j - 1]);
    k3_from_permutation(|x| {
        if (a..a + 2).contains(&x) {
            x - a + b
        } else if (b..b + 2).contains(&x) {
            x - b + a
        } else {
            x
        }
    })
}

/// The cyclic permutation `U₁ → U₂ → U₃ → U₁` of the hyperbolic summands.
pub fn cycle_u_blocks() -> Isometry {
    k3_from_permutation(|x| if x < 6 { (x + 2) % 6 } else { x }).expect("block permutation")
}

/// `eᵢ ↔ fᵢ` in the single hyperbolic summand `Uᵢ` (1-based).
pub fn swap_within_u(i: usize) -> Result<Isometry> {
    if !(1..=3).contains(&i) {
        return Err(Error::Parse(format!("hyperbolic summand index out of range: {i}")));
    }
    let o = K3_U_OFFSETS[i - 1];
    k3_from_permutation(|x| if x == o || x == o + 1 { x ^ 1 } else { x })
}

/// `-1` on the summand `Uᵢ` (1-based) and the identity elsewhere.
pub fn negate_u(i: usize) -> Result<Isometry> {
    if !(1..=3).contains(&i) {
        return Err(Error::Parse(format!("hyperbolic summand index out of range: {i}")));
    }
    let o = K3_U_OFFSETS[i - 1];
    let mut m = IntMatrix::identity(22);
    m[(o, o)] = BigInt::from(-1);
    m[(o + 1, o + 1)] = BigInt::from(-1);
    Isometry::new(Arc::new(k3_lattice()), m)
}

/// Exchanges the two E8 blocks and fixes the hyperbolic summands.
pub fn swap_e8_blocks() -> Isometry {
    k3_from_permutation(|x| match x {
        0..=5 => x,
        K3_E8_A_OFFSET..K3_E8_B_OFFSET => x + 8,
        _ => x - 8,
    })
    .expect("block permutation")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Arc<Lattice> {
        Arc::new(k3_lattice())
    }

    #[test]
    fn identity_accepted() {
        let id = Isometry::new(k3(), IntMatrix::identity(22)).unwrap();
        assert!(id.is_identity());
        assert_eq!(id.order(10), Some(1));
        assert!(!id.is_involution());
    }

    #[test]
    fn u_block_swap_accepted() {
        let s = permute_u_blocks(1, 2).unwrap();
        assert!(s.is_involution());
    }

    #[test]
    fn partial_swap_rejected_with_entry() {
        // e1 <-> e2, fixing f1, f2
        let m = permutation_matrix(22, |x| match x {
            0 => 2,
            2 => 0,
            _ => x,
        });
        let err = Isometry::new(k3(), m).unwrap_err();
        match err {
            Error::NotIsometry { row, col, found, expected } => {
                assert_eq!((row, col), (0, 1));
                assert_eq!(found, BigInt::zero());
                assert_eq!(expected, BigInt::one());
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn orders() {
        assert_eq!(Isometry::negation(k3()).order(10), Some(2));
        assert_eq!(cycle_u_blocks().order(10), Some(3));
        assert_eq!(cycle_u_blocks().order(2), None);
        assert!(!cycle_u_blocks().is_involution());
    }

    #[test]
    fn swap_involution() {
        let s = swap_involution_k3();
        assert!(s.is_involution());
        assert_eq!(s.order(10), Some(2));
        assert!(Isometry::new(k3(), s.matrix().clone()).is_ok());
    }

    #[test]
    fn gamma_membership() {
        assert!(Isometry::identity(k3()).in_gamma().unwrap());
        assert!(!Isometry::negation(k3()).in_gamma().unwrap());
        assert!(swap_involution_k3().in_gamma().unwrap());
        // a transposition of positive directions reverses orientation
        assert!(!permute_u_blocks(1, 2).unwrap().in_gamma().unwrap());
        assert!(cycle_u_blocks().in_gamma().unwrap());
        assert!(!negate_u(2).unwrap().in_gamma().unwrap());
        assert!(swap_within_u(3).unwrap().in_gamma().unwrap());
    }

    #[test]
    fn gamma_requires_k3_signature() {
        let u = Arc::new(crate::lattice::hyperbolic_plane());
        assert!(matches!(
            Isometry::identity(u).in_gamma(),
            Err(Error::SignatureMismatch { .. })
        ));
    }

    #[test]
    fn commutation() {
        let s = swap_involution_k3();
        assert!(s.commutes_with(&s).unwrap());
        assert!(s.commutes_with(&Isometry::negation(k3())).unwrap());
        let a = permute_u_blocks(1, 2).unwrap();
        let b = permute_u_blocks(2, 3).unwrap();
        assert!(!a.commutes_with(&b).unwrap());
    }

    #[test]
    fn mismatched_lattices() {
        let u = Arc::new(crate::lattice::hyperbolic_plane());
        let a = Isometry::identity(u);
        let b = Isometry::identity(k3());
        assert_eq!(a.compose(&b).unwrap_err(), Error::LatticeMismatch);
        assert_eq!(a.commutes_with(&b).unwrap_err(), Error::LatticeMismatch);
    }

    #[test]
    fn inverse_and_determinant() {
        let c = cycle_u_blocks();
        let ci = c.inverse().unwrap();
        assert!(c.compose(&ci).unwrap().is_identity());
        assert_eq!(c.determinant(), BigInt::one());
        assert_eq!(permute_u_blocks(1, 3).unwrap().determinant(), BigInt::one());
        assert_eq!(negate_u(1).unwrap().determinant(), BigInt::one());
    }

    #[test]
    fn reference_plane_is_positive_for_other_lattices() {
        let l = crate::lattice::hyperbolic_plane().direct_sum(&crate::lattice::e8_minus());
        let p = reference_positive_plane(&l);
        assert_eq!(p.len(), 1);
        assert!(l.norm(&p[0]).unwrap().is_positive());
    }
}
