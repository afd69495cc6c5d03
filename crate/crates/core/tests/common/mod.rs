//! Random generators and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use k3lat::isometry::{cycle_u_blocks, negate_u, permute_u_blocks, swap_e8_blocks, swap_within_u};
use k3lat::lattice::K3_E8_A_OFFSET;
use k3lat::matrix::IntMatrix;
use k3lat::roots::reflection_in_root;
use k3lat::{e8_minus, k3_lattice, swap_involution_k3, Isometry, Lattice, LatticeVector};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn to_i64(m: &IntMatrix) -> Vec<Vec<i64>> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(|x| x.to_i64().expect("small entry")).collect())
        .collect()
}

pub fn from_i64(rows: &[Vec<i64>]) -> IntMatrix {
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    IntMatrix::from_i64(&refs)
}

/// A random element of GL(n, Z) built from a few elementary moves, so its
/// entries stay small.
pub fn random_unimodular(rng: &mut StdRng, n: usize, moves: usize) -> IntMatrix {
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    for _ in 0..moves {
        let i = rng.gen_range(0..n);
        match rng.gen_range(0..4) {
            0 | 1 if n > 1 => {
                let mut j = rng.gen_range(0..n - 1);
                if j >= i {
                    j += 1;
                }
                let k = if rng.gen_bool(0.5) { 1 } else { -1 };
                for c in 0..n {
                    m[i][c] += k * m[j][c];
                }
            }
            2 if n > 1 => {
                let j = rng.gen_range(0..n);
                m.swap(i, j);
            }
            _ => {
                for x in m[i].iter_mut() {
                    *x = -*x;
                }
            }
        }
    }
    from_i64(&m)
}

/// A random symmetric matrix with entries in `[-3, 3]`, possibly degenerate.
pub fn random_symmetric(rng: &mut StdRng, n: usize) -> IntMatrix {
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i..n {
            let x = rng.gen_range(-3..=3);
            m[i][j] = x;
            m[j][i] = x;
        }
    }
    from_i64(&m)
}

pub fn random_nondegenerate(rng: &mut StdRng, n: usize) -> Lattice {
    loop {
        if let Ok(l) = Lattice::new(random_symmetric(rng, n)) {
            return l;
        }
    }
}

/// `±BᵀB` for a random nonsingular `B` with small entries.
pub fn random_definite(rng: &mut StdRng, n: usize) -> Lattice {
    loop {
        let b = from_i64(
            &(0..n)
                .map(|i| (0..n).map(|j| rng.gen_range(-1..=1) + i64::from(i == j)).collect())
                .collect::<Vec<_>>(),
        );
        let mut g = b.congruence(&IntMatrix::identity(n)).unwrap();
        if rng.gen_bool(0.5) {
            g = g.neg();
        }
        if let Ok(l) = Lattice::new(g) {
            return l;
        }
    }
}

/// Every `x` in the box `|xᵢ| ≤ bounds[i]` with `xᵀGx = target`, by exhaustive
/// search with no pruning.
pub fn box_vectors(gram: &[Vec<i64>], bounds: &[i64], target: i64) -> Vec<Vec<i64>> {
    fn go(
        gram: &[Vec<i64>],
        bounds: &[i64],
        target: i64,
        i: usize,
        x: &mut Vec<i64>,
        gx: &mut Vec<i64>,
        q: i64,
        out: &mut Vec<Vec<i64>>,
    ) {
        let n = bounds.len();
        if i == n {
            if q == target {
                out.push(x.clone());
            }
            return;
        }
        for v in -bounds[i]..=bounds[i] {
            // q(x + v eᵢ) = q(x) + 2v (Gx)ᵢ + v² Gᵢᵢ, with x supported on 0..i
            let nq = q + 2 * v * gx[i] + v * v * gram[i][i];
            x[i] = v;
            for k in 0..n {
                gx[k] += v * gram[k][i];
            }
            go(gram, bounds, target, i + 1, x, gx, nq, out);
            for k in 0..n {
                gx[k] -= v * gram[k][i];
            }
        }
        x[i] = 0;
    }
    let n = bounds.len();
    let mut out = Vec::new();
    go(gram, bounds, target, 0, &mut vec![0; n], &mut vec![0; n], 0, &mut out);
    out.sort();
    out
}

pub fn vectors_i64(vs: &[LatticeVector]) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = vs
        .iter()
        .map(|v| v.coords().iter().map(|x| x.to_i64().unwrap()).collect())
        .collect();
    out.sort();
    out
}

/// A block-diagonal involution with `t` fixed lines, `c` negated lines and
/// `r` swapped pairs, on a unimodular form it preserves. Returns `(G, M)`.
pub fn block_model(rng: &mut StdRng, t: usize, c: usize, r: usize) -> (IntMatrix, IntMatrix) {
    let n = t + c + 2 * r;
    let mut g = vec![vec![0i64; n]; n];
    let mut m = vec![vec![0i64; n]; n];
    let mut k = 0;
    for sign in std::iter::repeat(1).take(t).chain(std::iter::repeat(-1).take(c)) {
        g[k][k] = if rng.gen_bool(0.5) { 1 } else { -1 };
        m[k][k] = sign;
        k += 1;
    }
    for _ in 0..r {
        match rng.gen_range(0..3) {
            0 => {
                g[k][k + 1] = 1;
                g[k + 1][k] = 1;
            }
            1 => {
                g[k][k] = 1;
                g[k + 1][k + 1] = 1;
            }
            _ => {
                g[k][k] = -1;
                g[k + 1][k + 1] = -1;
            }
        }
        m[k][k + 1] = 1;
        m[k + 1][k] = 1;
        k += 2;
    }
    (from_i64(&g), from_i64(&m))
}

/// Conjugates a block model by a random change of basis `P`: the form becomes
/// `PᵀGP` and the involution `P⁻¹MP`.
pub fn conjugated_block_model(rng: &mut StdRng, t: usize, c: usize, r: usize) -> (Arc<Lattice>, Isometry) {
    let n = t + c + 2 * r;
    let (g, m) = block_model(rng, t, c, r);
    let p = random_unimodular(rng, n, 3 * n);
    let p_inv = p.unimodular_inverse().unwrap();
    let l = Arc::new(Lattice::new(p.congruence(&g).unwrap()).unwrap());
    let a = Isometry::new(l.clone(), p_inv.mul(&m).unwrap().mul(&p).unwrap()).unwrap();
    (l, a)
}

/// The simple roots of the first E8 block, embedded in the K3 lattice.
pub fn k3_e8_simple_roots() -> Vec<LatticeVector> {
    (0..8).map(|i| LatticeVector::basis(22, K3_E8_A_OFFSET + i)).collect()
}

/// Named generators of Aut(K3 lattice) used to build random products.
pub fn k3_generators() -> Vec<(String, Isometry)> {
    let k3 = Arc::new(k3_lattice());
    let mut gens = vec![
        ("swap_k3".to_string(), swap_involution_k3()),
        ("neg_id".to_string(), Isometry::negation(k3.clone())),
        ("cycle_u".to_string(), cycle_u_blocks()),
        ("swap_e8".to_string(), swap_e8_blocks()),
    ];
    for (i, j) in [(1, 2), (1, 3), (2, 3)] {
        gens.push((format!("perm_u({i},{j})"), permute_u_blocks(i, j).unwrap()));
    }
    for i in 1..=3 {
        gens.push((format!("swap_within_u({i})"), swap_within_u(i).unwrap()));
        gens.push((format!("negate_u({i})"), negate_u(i).unwrap()));
    }
    for (i, r) in k3_e8_simple_roots().iter().enumerate() {
        gens.push((format!("reflect_a{}", i + 1), reflection_in_root(k3.clone(), r).unwrap()));
    }
    gens
}

/// A product of `len` random generators, with the factor names.
pub fn random_word(rng: &mut StdRng, gens: &[(String, Isometry)], len: usize) -> (Vec<String>, Isometry) {
    let mut names = Vec::with_capacity(len);
    let mut acc = Isometry::identity(gens[0].1.lattice().clone());
    for _ in 0..len {
        let (name, g) = gens.choose(rng).unwrap();
        names.push(name.clone());
        acc = acc.compose(g).unwrap();
    }
    (names, acc)
}

pub fn e8_gram_i64() -> Vec<Vec<i64>> {
    to_i64(e8_minus().gram())
}

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}
