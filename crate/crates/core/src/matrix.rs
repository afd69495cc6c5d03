//! Dense matrices over the integers and rationals.
//!
//! Everything here is exact. Integer matrices use [`BigInt`] entries, and the
//! rational routines work on row vectors of [`BigRational`].

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    actual: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self {
            rows: n,
            cols,
            data,
        })
    }

    /// Convenience constructor for small literal matrices. Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::from_rows(cols, rows).expect("ragged matrix literal")
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Result<Self> {
        for c in columns {
            if c.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    actual: c.len(),
                });
            }
        }
        Ok(Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                actual: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                actual: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    /// `selfᵀ · g · self`, the Gram matrix of the columns under the form `g`.
    pub fn congruence(&self, g: &Self) -> Result<Self> {
        self.transpose().mul(&g.mul(self)?)
    }

    pub fn neg(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn scaled(&self, k: &BigInt) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                actual: other.rows * other.cols,
            });
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    /// First off-diagonal pair `(i, j)` with `a[i][j] != a[j][i]`, if any.
    pub fn asymmetry(&self) -> Option<(usize, usize)> {
        (0..self.rows)
            .flat_map(|i| (i + 1..self.cols).map(move |j| (i, j)))
            .find(|&(i, j)| self[(i, j)] != self[(j, i)])
    }

    pub fn block_diag(a: &Self, b: &Self) -> Self {
        let mut m = Self::zeros(a.rows + b.rows, a.cols + b.cols);
        for i in 0..a.rows {
            for j in 0..a.cols {
                m[(i, j)] = a[(i, j)].clone();
            }
        }
        for i in 0..b.rows {
            for j in 0..b.cols {
                m[(a.rows + i, a.cols + j)] = b[(i, j)].clone();
            }
        }
        m
    }

    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                actual: other.rows,
            });
        }
        Ok(Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        }))
    }

    pub fn to_rational(&self) -> Vec<Vec<BigRational>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().cloned().map(BigRational::from_integer).collect())
            .collect()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }

    /// Exact inverse of a unimodular matrix. Fails if the matrix is singular or
    /// its inverse has non-integral entries.
    pub fn unimodular_inverse(&self) -> Result<Self> {
        let inv = rational_inverse(&self.to_rational())?;
        let n = self.rows;
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let x = &inv[i][j];
                if !x.is_integer() {
                    return Err(Error::Inconsistent(
                        "matrix is not invertible over the integers".into(),
                    ));
                }
                out[(i, j)] = x.to_integer();
            }
        }
        Ok(out)
    }

    fn swap_columns(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// column `dst` -= q * column `src`
    fn col_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let s = self[(i, src)].clone();
            if !s.is_zero() {
                self[(i, dst)] -= q * s;
            }
        }
    }

    /// row `dst` -= q * row `src`
    fn row_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let s = self[(src, j)].clone();
            if !s.is_zero() {
                self[(dst, j)] -= q * s;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|i| {
                self.row(i)
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            }))
            .finish()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Integer row echelon form by unimodular row operations, with zero rows
/// dropped. Leading entries are positive and the entries above each pivot are
/// reduced into `[0, pivot)`, so the result is the canonical Hermite normal
/// form of the row lattice.
pub fn hermite_rows(m: &IntMatrix) -> IntMatrix {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let best = (r..rows)
                .filter(|&i| !a[(i, c)].is_zero())
                .min_by(|&x, &y| a[(x, c)].abs().cmp(&a[(y, c)].abs()));
            let Some(p) = best else { break };
            a.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..rows {
                if !a[(i, c)].is_zero() {
                    let q = a[(i, c)].div_floor(&a[(r, c)]);
                    a.row_axpy(i, r, &q);
                    if !a[(i, c)].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if a[(r, c)].is_zero() {
            continue;
        }
        if a[(r, c)].is_negative() {
            a.negate_row(r);
        }
        for i in 0..r {
            let q = a[(i, c)].div_floor(&a[(r, c)]);
            if !q.is_zero() {
                a.row_axpy(i, r, &q);
            }
        }
        pivots.push(c);
        r += 1;
    }
    IntMatrix::from_fn(r, cols, |i, j| a[(i, j)].clone())
}

/// Basis of the integer kernel `{x ∈ Zⁿ : a·x = 0}` as the columns of the
/// returned `n × (n - rank)` matrix.
///
/// The kernel is read off the unimodular transform of a column echelon
/// reduction, so it is always saturated. The basis is returned in Hermite
/// form (columns) to keep output canonical.
pub fn integer_kernel(a: &IntMatrix) -> IntMatrix {
    let n = a.cols;
    let mut work = a.clone();
    let mut u = IntMatrix::identity(n);
    let mut p = 0;
    for i in 0..work.rows {
        if p == n {
            break;
        }
        loop {
            let best = (p..n)
                .filter(|&j| !work[(i, j)].is_zero())
                .min_by(|&x, &y| work[(i, x)].abs().cmp(&work[(i, y)].abs()));
            let Some(b) = best else { break };
            work.swap_columns(p, b);
            u.swap_columns(p, b);
            let mut done = true;
            for j in p + 1..n {
                if !work[(i, j)].is_zero() {
                    let q = work[(i, j)].div_floor(&work[(i, p)]);
                    work.col_axpy(j, p, &q);
                    u.col_axpy(j, p, &q);
                    if !work[(i, j)].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                p += 1;
                break;
            }
        }
    }
    let kernel_rows = IntMatrix::from_fn(n - p, n, |i, j| u[(j, p + i)].clone());
    hermite_rows(&kernel_rows).transpose()
}

/// Saturation (primitive closure) of the column span of `gens` inside `Zⁿ`,
/// returned as a basis in the columns.
pub fn saturate_columns(gens: &IntMatrix) -> IntMatrix {
    let annihilator = integer_kernel(&gens.transpose());
    integer_kernel(&annihilator.transpose())
}

/// Nonzero invariant factors of the Smith normal form, in divisibility order.
pub fn smith_invariants(m: &IntMatrix) -> Vec<BigInt> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[(i, j)].is_zero())
            .min_by(|&x, &y| a[x].abs().cmp(&a[y].abs()));
        let Some((pi, pj)) = pivot else { break };
        a.swap_rows(t, pi);
        a.swap_columns(t, pj);
        let mut clean = true;
        for i in t + 1..rows {
            if !a[(i, t)].is_zero() {
                let q = a[(i, t)].div_floor(&a[(t, t)]);
                a.row_axpy(i, t, &q);
                clean &= a[(i, t)].is_zero();
            }
        }
        for j in t + 1..cols {
            if !a[(t, j)].is_zero() {
                let q = a[(t, j)].div_floor(&a[(t, t)]);
                a.col_axpy(j, t, &q);
                clean &= a[(t, j)].is_zero();
            }
        }
        if !clean {
            continue;
        }
        // the pivot must divide the remaining block; otherwise fold in an offending row
        let bad = (t + 1..rows)
            .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
            .find(|&(i, j)| !a[(i, j)].is_multiple_of(&a[(t, t)]));
        if let Some((i, _)) = bad {
            a.row_axpy(t, i, &BigInt::from(-1));
            continue;
        }
        out.push(a[(t, t)].abs());
        t += 1;
    }
    out
}

/// Inverse over the rationals by Gauss-Jordan elimination.
pub fn rational_inverse(m: &[Vec<BigRational>]) -> Result<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect();
    for c in 0..n {
        if a[c].len() != n {
            return Err(Error::NotSquare {
                rows: n,
                cols: a[c].len(),
            });
        }
        let p = (c..n).find(|&i| !a[i][c].is_zero()).ok_or(Error::Degenerate)?;
        a.swap(c, p);
        inv.swap(c, p);
        let piv = a[c][c].clone();
        for j in 0..n {
            a[c][j] = &a[c][j] / &piv;
            inv[c][j] = &inv[c][j] / &piv;
        }
        for i in 0..n {
            if i == c || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in 0..n {
                let x = &f * &a[c][j];
                a[i][j] -= x;
                let y = &f * &inv[c][j];
                inv[i][j] -= y;
            }
        }
    }
    Ok(inv)
}

/// Rank over the rationals of a list of row vectors.
pub fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut a = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..a.len() {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &a[r][c];
            for j in c..cols {
                let x = &f * &a[r][j];
                a[i][j] -= x;
            }
        }
        r += 1;
    }
    r
}

/// Scales a rational vector by the lcm of its denominators, giving an integer
/// vector spanning the same line.
pub fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let l = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    v.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect()
}
