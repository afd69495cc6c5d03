//! LLL reduction of a positive definite integral Gram matrix.
//!
//! Works on the Gram matrix directly, so the form never needs real
//! coordinates. All Gram-Schmidt data is kept as exact rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// A reduced basis: `gram = transformᵀ · G · transform`, with the columns of
/// `transform` the new basis vectors in the old coordinates.
#[derive(Debug, Clone)]
pub struct Reduced {
    pub gram: IntMatrix,
    pub transform: IntMatrix,
}

fn gram_schmidt(h: &IntMatrix) -> Result<(Vec<Vec<BigRational>>, Vec<BigRational>)> {
    let n = h.rows();
    let mut mu = vec![vec![BigRational::zero(); n]; n];
    let mut bstar = vec![BigRational::zero(); n];
    for i in 0..n {
        for j in 0..i {
            let mut v = BigRational::from_integer(h[(i, j)].clone());
            for l in 0..j {
                v -= &mu[j][l] * &mu[i][l] * &bstar[l];
            }
            mu[i][j] = v / &bstar[j];
        }
        let mut b = BigRational::from_integer(h[(i, i)].clone());
        for l in 0..i {
            b -= &mu[i][l] * &mu[i][l] * &bstar[l];
        }
        if b <= BigRational::zero() {
            return Err(Error::NotDefinite);
        }
        bstar[i] = b;
    }
    Ok((mu, bstar))
}

fn nearest_integer(x: &BigRational) -> BigInt {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    (x + half).floor().to_integer()
}

/// `b_k -= q·b_j` on both the Gram matrix and the transform.
fn reduce_pair(h: &mut IntMatrix, t: &mut IntMatrix, k: usize, j: usize, q: &BigInt) {
    let n = h.rows();
    for c in 0..n {
        let v = &h[(j, c)] * q;
        h[(k, c)] -= v;
    }
    for r in 0..n {
        let v = &h[(r, j)] * q;
        h[(r, k)] -= v;
    }
    for r in 0..n {
        let v = &t[(r, j)] * q;
        t[(r, k)] -= v;
    }
}

fn swap_adjacent(h: &mut IntMatrix, t: &mut IntMatrix, k: usize) {
    let n = h.rows();
    for c in 0..n {
        let a = h[(k, c)].clone();
        h[(k, c)] = h[(k - 1, c)].clone();
        h[(k - 1, c)] = a;
    }
    for r in 0..n {
        let a = h[(r, k)].clone();
        h[(r, k)] = h[(r, k - 1)].clone();
        h[(r, k - 1)] = a;
        let b = t[(r, k)].clone();
        t[(r, k)] = t[(r, k - 1)].clone();
        t[(r, k - 1)] = b;
    }
}

/// LLL with Lovász constant 3/4. Fails with [`Error::NotDefinite`] if the
/// form is not positive definite.
pub fn lll_gram(gram: &IntMatrix) -> Result<Reduced> {
    let n = gram.rows();
    let mut h = gram.clone();
    let mut t = IntMatrix::identity(n);
    if n <= 1 {
        gram_schmidt(&h)?;
        return Ok(Reduced { gram: h, transform: t });
    }
    let delta = BigRational::new(BigInt::from(3), BigInt::from(4));
    let (mut mu, mut bstar) = gram_schmidt(&h)?;
    let mut k = 1;
    while k < n {
        for j in (0..k).rev() {
            let q = nearest_integer(&mu[k][j]);
            if q.is_zero() {
                continue;
            }
            reduce_pair(&mut h, &mut t, k, j, &q);
            let qr = BigRational::from_integer(q);
            for l in 0..j {
                let v = &qr * &mu[j][l];
                mu[k][l] -= v;
            }
            mu[k][j] -= &qr;
        }
        let lhs = &bstar[k];
        let rhs = (&delta - &mu[k][k - 1] * &mu[k][k - 1]) * &bstar[k - 1];
        if *lhs >= rhs {
            k += 1;
        } else {
            swap_adjacent(&mut h, &mut t, k);
            (mu, bstar) = gram_schmidt(&h)?;
            k = (k - 1).max(1);
        }
    }
    Ok(Reduced { gram: h, transform: t })
}

/// `floor(sqrt(x))` for a nonnegative rational.
pub(crate) fn floor_sqrt(x: &BigRational) -> BigInt {
    let f = x.floor().to_integer();
    if f.is_zero() || f < BigInt::zero() {
        return BigInt::zero();
    }
    f.sqrt()
}
