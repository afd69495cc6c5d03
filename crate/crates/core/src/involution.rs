//! Lattice-level structure of an involution: the trivial / cyclotomic /
//! regular decomposition, the invariant sublattice and its signature, and
//! the fixed-surface counts they force for odd involutions.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::isometry::Isometry;
use crate::lattice::{Lattice, Sublattice};
use crate::matrix::{integer_kernel, smith_invariants, IntMatrix};

/// Counts of trivial (`Z`, fixed), cyclotomic (`Z`, negated) and regular
/// (`Z[Z/2]`, swapped pair) summands. `t + c + 2r` is the rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TcrProfile {
    pub t: usize,
    pub c: usize,
    pub r: usize,
}

impl TcrProfile {
    pub fn rank(&self) -> usize {
        self.t + self.c + 2 * self.r
    }

    /// The shape `(0, 2, r)` of a free involution.
    pub fn is_free_type(&self) -> bool {
        self.t == 0 && self.c == 2
    }
}

impl std::fmt::Display for TcrProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.t, self.c, self.r)
    }
}

/// Inertia of the invariant sublattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EquivariantInvariants {
    pub b_plus_g: usize,
    pub b_minus_g: usize,
    pub sigma_g: i64,
}

/// Number of fixed surfaces and their total genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FixedPointProfile {
    pub k: u64,
    pub total_genus: u64,
}

fn eigen_sublattice(l: &Lattice, a: &Isometry, eigenvalue: i64) -> Result<Sublattice> {
    if !std::ptr::eq(l, a.lattice().as_ref()) && l.gram() != a.lattice().gram() {
        return Err(Error::LatticeMismatch);
    }
    let shift = IntMatrix::identity(l.rank()).scaled(&BigInt::from(eigenvalue));
    let basis = integer_kernel(&a.matrix().sub(&shift)?);
    let gram = basis.congruence(l.gram())?;
    Ok(Sublattice {
        lattice: Lattice::new_possibly_degenerate(gram)?,
        embedding: basis,
    })
}

/// Saturated fixed sublattice `ker(M − I)` with the restricted form.
pub fn invariant_sublattice(l: &Lattice, a: &Isometry) -> Result<Sublattice> {
    eigen_sublattice(l, a, 1)
}

/// Saturated anti-invariant sublattice `ker(M + I)`.
pub fn anti_invariant_sublattice(l: &Lattice, a: &Isometry) -> Result<Sublattice> {
    eigen_sublattice(l, a, -1)
}

/// Decomposes the `Z[Z/2]`-module `L` under an involution (or the identity).
///
/// `t + r` and `c + r` are the ranks of the saturated ±1 eigenlattices, and
/// `L / (L⁺ ⊕ L⁻)` is elementary abelian of order `2^r`.
pub fn tcr_decompose(l: &Lattice, a: &Isometry) -> Result<TcrProfile> {
    if !a.is_identity() && !a.is_involution() {
        return Err(Error::NotInvolution);
    }
    let plus = invariant_sublattice(l, a)?;
    let minus = anti_invariant_sublattice(l, a)?;
    let n = l.rank();
    let (p, m) = (plus.embedding.cols(), minus.embedding.cols());
    if p + m != n {
        return Err(Error::Inconsistent(format!(
            "eigenlattice ranks {p} + {m} do not fill rank {n}"
        )));
    }
    let inclusion = plus.embedding.hstack(&minus.embedding)?;
    let factors = smith_invariants(&inclusion);
    if factors.len() != n {
        return Err(Error::Inconsistent("L⁺ ⊕ L⁻ has smaller rank than L".into()));
    }
    let two = BigInt::from(2);
    let mut r = 0;
    for d in &factors {
        if *d == two {
            r += 1;
        } else if !d.is_one() {
            return Err(Error::Inconsistent(format!(
                "quotient L / (L⁺ ⊕ L⁻) has invariant factor {d}, not elementary 2-abelian"
            )));
        }
    }
    if r > p || r > m {
        return Err(Error::Inconsistent(format!("regular count {r} exceeds eigenlattice ranks")));
    }
    let profile = TcrProfile {
        t: p - r,
        c: m - r,
        r,
    };
    if profile.rank() != n {
        return Err(Error::Inconsistent(format!("t + c + 2r = {} ≠ {n}", profile.rank())));
    }
    Ok(profile)
}

/// Signature data of the invariant sublattice.
pub fn equivariant_signature(l: &Lattice, a: &Isometry) -> Result<EquivariantInvariants> {
    if !a.is_identity() && !a.is_involution() {
        return Err(Error::NotInvolution);
    }
    let sig = invariant_sublattice(l, a)?.lattice.signature();
    Ok(EquivariantInvariants {
        b_plus_g: sig.b_plus,
        b_minus_g: sig.b_minus,
        sigma_g: sig.sigma(),
    })
}

/// Solves `t = 2k − 2`, `c = 2·(g₁ + ⋯ + g_k)` for the fixed surfaces of an
/// odd involution with nonempty fixed set.
pub fn fixed_point_profile(t: i64, c: i64) -> Result<FixedPointProfile> {
    if t < 0 || c < 0 {
        return Err(Error::FixedPointData(format!("negative counts t={t}, c={c}")));
    }
    if t % 2 != 0 || c % 2 != 0 {
        return Err(Error::FixedPointData(format!("t={t} and c={c} must both be even")));
    }
    Ok(FixedPointProfile {
        k: ((t + 2) / 2).to_u64().expect("nonnegative"),
        total_genus: (c / 2).to_u64().expect("nonnegative"),
    })
}

pub fn is_free_type(p: &TcrProfile) -> bool {
    p.is_free_type()
}
