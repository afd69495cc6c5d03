//! Fincke-Pohst enumeration of lattice vectors of a fixed norm in a definite
//! lattice.
//!
//! The basis is LLL-reduced first. The search runs over the quadratic
//! completion `Q(x) = Σ qᵢᵢ (xᵢ + Σ_{j>i} qᵢⱼ xⱼ)²` with exact rational
//! coefficients, and every coordinate interval is computed exactly, so no
//! vector can be lost to rounding. Each leaf is checked against the integer
//! Gram matrix before it is reported.

use std::ops::ControlFlow;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{Lattice, LatticeVector};
use crate::matrix::{rational_inverse, IntMatrix};
use crate::reduce::{floor_sqrt, lll_gram};

/// A positive definite form and the target norm, after folding in the sign.
struct DefiniteProblem {
    gram: IntMatrix,
    target: BigInt,
}

fn definite_problem(l: &Lattice, target: &BigInt) -> Result<DefiniteProblem> {
    let sig = l.signature();
    let (gram, target) = if sig.is_positive_definite() {
        (l.gram().clone(), target.clone())
    } else if sig.is_negative_definite() {
        (l.gram().neg(), -target)
    } else {
        return Err(Error::NotDefinite);
    };
    if !target.is_positive() {
        return Err(Error::TargetSign {
            target: if sig.is_positive_definite() { target } else { -target },
        });
    }
    Ok(DefiniteProblem { gram, target })
}

/// `q` with `Q(x) = Σᵢ q[i][i]·(xᵢ + Σ_{j>i} q[i][j]·xⱼ)²`.
fn quadratic_completion(g: &IntMatrix) -> Vec<Vec<BigRational>> {
    let n = g.rows();
    let mut q = g.to_rational();
    for i in 0..n {
        for j in i + 1..n {
            q[j][i] = q[i][j].clone();
            q[i][j] = &q[i][j] / &q[i][i];
        }
        for k in i + 1..n {
            for l in k..n {
                let v = &q[k][i] * &q[i][l];
                q[k][l] -= v;
            }
        }
    }
    q
}

/// Largest integer `x` with `x > c` and `(x − c)² ≤ s`, or `floor(c)` when no
/// such integer exceeds it. Equals `floor(c + √s)`.
fn upper_end(c: &BigRational, s: &BigRational) -> BigInt {
    let fc = c.floor().to_integer();
    let r0 = floor_sqrt(s);
    let cand: BigInt = &fc + &r0 + 1;
    let d = BigRational::from_integer(cand.clone()) - c;
    if d.is_positive() && &d * &d <= *s {
        cand
    } else {
        fc + r0
    }
}

struct Search<'a, F> {
    q: Vec<Vec<BigRational>>,
    gram: &'a IntMatrix,
    target: &'a BigInt,
    x: Vec<BigInt>,
    visit: F,
}

impl<F: FnMut(&[BigInt]) -> ControlFlow<()>> Search<'_, F> {
    fn descend(&mut self, level: usize, remaining: BigRational) -> ControlFlow<()> {
        let n = self.x.len();
        let i = level - 1;
        let mut center = BigRational::zero();
        for j in level..n {
            if !self.x[j].is_zero() {
                center -= &self.q[i][j] * BigRational::from_integer(self.x[j].clone());
            }
        }
        let s = &remaining / &self.q[i][i];
        let hi = upper_end(&center, &s);
        let lo = -upper_end(&-center.clone(), &s);
        let mut xi = lo;
        while xi <= hi {
            let d = BigRational::from_integer(xi.clone()) - &center;
            let used = &self.q[i][i] * &d * &d;
            if used <= remaining {
                self.x[i] = xi.clone();
                let rest = &remaining - used;
                if i == 0 {
                    self.leaf()?;
                } else {
                    self.descend(i, rest)?;
                }
            }
            xi += 1;
        }
        self.x[i] = BigInt::zero();
        ControlFlow::Continue(())
    }

    fn leaf(&mut self) -> ControlFlow<()> {
        let gx = self.gram.mul_vec(&self.x).expect("length");
        let norm: BigInt = self.x.iter().zip(&gx).map(|(a, b)| a * b).sum();
        if norm == *self.target {
            (self.visit)(&self.x)
        } else {
            ControlFlow::Continue(())
        }
    }
}

/// Calls `visit` on every vector of norm exactly `target`, in an unspecified
/// order, until it returns `Break`.
///
/// `L` must be definite and `target` must carry the sign of the form.
pub fn for_each_vector_of_norm(
    l: &Lattice,
    target: &BigInt,
    mut visit: impl FnMut(&LatticeVector) -> ControlFlow<()>,
) -> Result<()> {
    let problem = definite_problem(l, target)?;
    let n = l.rank();
    if n == 0 {
        return Ok(());
    }
    let reduced = lll_gram(&problem.gram)?;
    let mut search = Search {
        q: quadratic_completion(&reduced.gram),
        gram: &reduced.gram,
        target: &problem.target,
        x: vec![BigInt::zero(); n],
        visit: |y: &[BigInt]| {
            let x = reduced.transform.mul_vec(y).expect("length");
            visit(&LatticeVector(x))
        },
    };
    let _ = search.descend(n, BigRational::from_integer(problem.target.clone()));
    Ok(())
}

/// All vectors of norm `target`, sorted lexicographically by coordinates.
pub fn short_vectors(l: &Lattice, target: &BigInt) -> Result<Vec<LatticeVector>> {
    let mut out = Vec::new();
    for_each_vector_of_norm(l, target, |v| {
        out.push(v.clone());
        ControlFlow::Continue(())
    })?;
    out.sort();
    Ok(out)
}

/// Some vector of norm `target`, stopping at the first one found.
pub fn first_vector_of_norm(l: &Lattice, target: &BigInt) -> Result<Option<LatticeVector>> {
    let mut found = None;
    for_each_vector_of_norm(l, target, |v| {
        found = Some(v.clone());
        ControlFlow::Break(())
    })?;
    Ok(found)
}

/// `|xᵢ| ≤ ⌊√(|target| · (G⁻¹)ᵢᵢ)⌋` for every `x` of norm `target` in a
/// definite lattice (Cauchy-Schwarz against the dual basis).
pub fn coefficient_bounds(l: &Lattice, target: &BigInt) -> Result<Vec<BigInt>> {
    let problem = definite_problem(l, target)?;
    let inv = rational_inverse(&problem.gram.to_rational())?;
    let t = BigRational::from_integer(problem.target);
    Ok((0..l.rank()).map(|i| floor_sqrt(&(&t * &inv[i][i]))).collect())
}
