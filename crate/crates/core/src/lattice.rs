//! Integral lattices given by a symmetric Gram matrix.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Negated Cartan matrix of E8, nodes in Bourbaki order (1-3-4-5-6-7-8 chain
/// with node 2 attached to node 4).
const E8_MINUS_GRAM: [[i64; 8]; 8] = [
    [-2, 0, 1, 0, 0, 0, 0, 0],
    [0, -2, 0, 1, 0, 0, 0, 0],
    [1, 0, -2, 1, 0, 0, 0, 0],
    [0, 1, 1, -2, 1, 0, 0, 0],
    [0, 0, 0, 1, -2, 1, 0, 0],
    [0, 0, 0, 0, 1, -2, 1, 0],
    [0, 0, 0, 0, 0, 1, -2, 1],
    [0, 0, 0, 0, 0, 0, 1, -2],
];

/// Inertia of a symmetric form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct SignatureTriple {
    pub b_plus: usize,
    pub b_minus: usize,
    pub b_zero: usize,
}

impl SignatureTriple {
    pub const fn new(b_plus: usize, b_minus: usize, b_zero: usize) -> Self {
        Self {
            b_plus,
            b_minus,
            b_zero,
        }
    }

    pub fn rank(&self) -> usize {
        self.b_plus + self.b_minus + self.b_zero
    }

    /// `b_plus - b_minus`
    pub fn sigma(&self) -> i64 {
        self.b_plus as i64 - self.b_minus as i64
    }

    pub fn is_positive_definite(&self) -> bool {
        self.b_minus == 0 && self.b_zero == 0
    }

    pub fn is_negative_definite(&self) -> bool {
        self.b_plus == 0 && self.b_zero == 0
    }
}

impl std::ops::Add for SignatureTriple {
    type Output = Self;

    fn add(self, o: Self) -> Self {
        Self::new(self.b_plus + o.b_plus, self.b_minus + o.b_minus, self.b_zero + o.b_zero)
    }
}

impl fmt::Display for SignatureTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.b_plus, self.b_minus, self.b_zero)
    }
}

/// Coordinates of a lattice element in the lattice basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector(pub Vec<BigInt>);

impl LatticeVector {
    pub fn from_i64(coords: &[i64]) -> Self {
        Self(coords.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Self(vec![BigInt::zero(); rank])
    }

    /// The `i`-th basis vector of a rank `rank` lattice.
    pub fn basis(rank: usize, i: usize) -> Self {
        let mut v = Self::zero(rank);
        v.0[i] = BigInt::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|x| -x).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        Self(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Vec<BigRational> {
        self.0.iter().cloned().map(BigRational::from_integer).collect()
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// An integral symmetric bilinear form on `Z^rank`.
///
/// Lattices built through [`Lattice::new`] are nondegenerate. Only
/// [`Lattice::new_possibly_degenerate`] admits singular Grams; it is used for
/// sublattices cut out by orthogonality conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    gram: IntMatrix,
    labels: Vec<String>,
}

impl Lattice {
    pub fn new(gram: IntMatrix) -> Result<Self> {
        let l = Self::new_possibly_degenerate(gram)?;
        if l.determinant().is_zero() {
            return Err(Error::Degenerate);
        }
        Ok(l)
    }

    pub fn new_possibly_degenerate(gram: IntMatrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::NotSquare {
                rows: gram.rows(),
                cols: gram.cols(),
            });
        }
        if let Some((i, j)) = gram.asymmetry() {
            return Err(Error::NotSymmetric(i, j));
        }
        let labels = (1..=gram.rows()).map(|i| format!("b{i}")).collect();
        Ok(Self { gram, labels })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                actual: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    /// The rank-0 lattice.
    pub fn empty() -> Self {
        Self {
            gram: IntMatrix::zeros(0, 0),
            labels: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Index of the basis vector with the given label.
    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if n != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                actual: n,
            });
        }
        Ok(())
    }

    /// `xᵀ · G · y`
    pub fn pairing(&self, x: &LatticeVector, y: &LatticeVector) -> Result<BigInt> {
        self.check_len(x.len())?;
        self.check_len(y.len())?;
        let gy = self.gram.mul_vec(&y.0)?;
        Ok(x.0.iter().zip(&gy).map(|(a, b)| a * b).sum())
    }

    /// The pairing extended to `L ⊗ Q`.
    pub fn pairing_rational(&self, x: &[BigRational], y: &[BigRational]) -> Result<BigRational> {
        self.check_len(x.len())?;
        self.check_len(y.len())?;
        let mut acc = BigRational::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                let g = &self.gram[(i, j)];
                if !g.is_zero() && !yj.is_zero() {
                    acc += xi * yj * BigRational::from_integer(g.clone());
                }
            }
        }
        Ok(acc)
    }

    pub fn norm(&self, x: &LatticeVector) -> Result<BigInt> {
        self.pairing(x, x)
    }

    pub fn determinant(&self) -> BigInt {
        self.gram.determinant().expect("gram is square")
    }

    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram[(i, i)].is_even())
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant().abs().is_one()
    }

    pub fn signature(&self) -> SignatureTriple {
        let (diag, _) = diagonalize(&self.gram);
        let mut s = SignatureTriple::default();
        for d in diag {
            if d.is_positive() {
                s.b_plus += 1;
            } else if d.is_negative() {
                s.b_minus += 1;
            } else {
                s.b_zero += 1;
            }
        }
        s
    }

    /// Orthogonal direct sum with block-diagonal Gram.
    pub fn direct_sum(&self, other: &Lattice) -> Lattice {
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        Lattice {
            gram: IntMatrix::block_diag(&self.gram, &other.gram),
            labels,
        }
    }

    /// The same lattice with the form multiplied by `-1`.
    pub fn negated(&self) -> Lattice {
        Lattice {
            gram: self.gram.neg(),
            labels: self.labels.clone(),
        }
    }
}

/// A sublattice given by a saturated basis, with the restricted form. The
/// restricted form may be degenerate.
#[derive(Debug, Clone)]
pub struct Sublattice {
    pub lattice: Lattice,
    /// Columns are the basis vectors in ambient coordinates.
    pub embedding: IntMatrix,
}

impl Sublattice {
    /// Ambient coordinates of a vector given in sublattice coordinates.
    pub fn to_ambient(&self, v: &LatticeVector) -> Result<LatticeVector> {
        Ok(LatticeVector(self.embedding.mul_vec(&v.0)?))
    }
}

/// Symmetric congruence diagonalization over the rationals.
///
/// Returns the diagonal entries together with the new basis: row `i` of the
/// returned matrix holds the coordinates of the `i`-th diagonalizing vector,
/// and distinct rows are orthogonal under `gram`.
pub fn diagonalize(gram: &IntMatrix) -> (Vec<BigRational>, Vec<Vec<BigRational>>) {
    let n = gram.rows();
    let mut s = gram.to_rational();
    let mut t: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect();

    let mut k = 0;
    while k < n {
        let pivot = (k..n).find(|&i| !s[i][i].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                let off = (k..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !s[i][j].is_zero());
                let Some((i, j)) = off else { break };
                // v_i <- v_i + v_j gives a nonzero diagonal 2·s_ij
                add_basis_vector(&mut s, &mut t, i, j);
                i
            }
        };
        swap_basis_vectors(&mut s, &mut t, k, p);
        let pivot = s[k][k].clone();
        for i in k + 1..n {
            if s[i][k].is_zero() {
                continue;
            }
            let f = &s[i][k] / &pivot;
            for j in 0..n {
                let x = &f * &s[k][j];
                s[i][j] -= x;
                let y = &f * &t[k][j];
                t[i][j] -= y;
            }
            for j in 0..n {
                let x = &f * &s[j][k];
                s[j][i] -= x;
            }
        }
        k += 1;
    }
    let diag = (0..n).map(|i| s[i][i].clone()).collect();
    (diag, t)
}

fn add_basis_vector(s: &mut [Vec<BigRational>], t: &mut [Vec<BigRational>], dst: usize, src: usize) {
    let n = s.len();
    for j in 0..n {
        let x = s[src][j].clone();
        s[dst][j] += x;
        let y = t[src][j].clone();
        t[dst][j] += y;
    }
    for j in 0..n {
        let x = s[j][src].clone();
        s[j][dst] += x;
    }
}

fn swap_basis_vectors(s: &mut [Vec<BigRational>], t: &mut [Vec<BigRational>], a: usize, b: usize) {
    if a == b {
        return;
    }
    s.swap(a, b);
    t.swap(a, b);
    for row in s.iter_mut() {
        row.swap(a, b);
    }
}

/// The hyperbolic plane `U`, Gram `[[0,1],[1,0]]`.
pub fn hyperbolic_plane() -> Lattice {
    Lattice::new(IntMatrix::from_i64(&[&[0, 1], &[1, 0]]))
        .and_then(|l| l.with_labels(vec!["e".into(), "f".into()]))
        .expect("U is valid")
}

/// The negative definite E8 lattice, as the negated E8 Cartan matrix.
pub fn e8_minus() -> Lattice {
    let rows: Vec<&[i64]> = E8_MINUS_GRAM.iter().map(|r| &r[..]).collect();
    Lattice::new(IntMatrix::from_i64(&rows))
        .and_then(|l| l.with_labels((1..=8).map(|i| format!("a{i}")).collect()))
        .expect("E8(-1) is valid")
}

pub fn direct_sum(a: &Lattice, b: &Lattice) -> Lattice {
    a.direct_sum(b)
}

/// The K3 lattice `3U ⊕ 2E8(-1)`.
///
/// Basis order: `e1 f1 e2 f2 e3 f3` (three hyperbolic planes), then
/// `a1..a8` (first E8 block), then `b1..b8` (second E8 block).
pub fn k3_lattice() -> Lattice {
    let u = hyperbolic_plane();
    let e8 = e8_minus();
    let gram = [&u, &u, &u, &e8, &e8]
        .iter()
        .fold(Lattice::empty(), |acc, l| acc.direct_sum(l))
        .gram
        .clone();
    let mut labels = Vec::with_capacity(22);
    for i in 1..=3 {
        labels.push(format!("e{i}"));
        labels.push(format!("f{i}"));
    }
    labels.extend((1..=8).map(|i| format!("a{i}")));
    labels.extend((1..=8).map(|i| format!("b{i}")));
    Lattice::new(gram)
        .and_then(|l| l.with_labels(labels))
        .expect("K3 lattice is valid")
}

/// Start offsets of the three hyperbolic planes and two E8 blocks in [`k3_lattice`].
pub const K3_U_OFFSETS: [usize; 3] = [0, 2, 4];
pub const K3_E8_A_OFFSET: usize = 6;
pub const K3_E8_B_OFFSET: usize = 14;
