mod common;

use std::sync::Arc;

use common::*;
use k3lat::isometry::{cycle_u_blocks, negate_u, permute_u_blocks, swap_e8_blocks, swap_within_u};
use k3lat::lattice::K3_E8_A_OFFSET;
use k3lat::obstruction::nielsen_certificate;
use k3lat::roots::{reflection_in_root, short_vectors};
use k3lat::{e8_minus, k3_lattice, swap_involution_k3, Isometry, LatticeVector};
use num_bigint::BigInt;
use num_traits::Signed;
use rand::Rng;

fn sign(a: &Isometry) -> i32 {
    if a.orientation_character().unwrap().is_positive() {
        1
    } else {
        -1
    }
}

#[test]
fn reference_values() {
    let k3 = Arc::new(k3_lattice());
    assert!(Isometry::identity(k3.clone()).in_gamma().unwrap());
    assert!(!Isometry::negation(k3).in_gamma().unwrap());
    assert!(swap_involution_k3().in_gamma().unwrap());
    assert!(!permute_u_blocks(1, 2).unwrap().in_gamma().unwrap());
    assert!(cycle_u_blocks().in_gamma().unwrap());
    assert!(!negate_u(1).unwrap().in_gamma().unwrap());
    assert!(swap_within_u(2).unwrap().in_gamma().unwrap());
    assert!(swap_e8_blocks().in_gamma().unwrap());
}

#[test]
fn sign_multiplicative_on_200_products() {
    let gens = k3_generators();
    let mut rng = rng(4);
    for _ in 0..200 {
        let la = rng.gen_range(1..=4);
        let lb = rng.gen_range(1..=4);
        let (na, a) = random_word(&mut rng, &gens, la);
        let (nb, b) = random_word(&mut rng, &gens, lb);
        let ab = a.compose(&b).unwrap();
        assert_eq!(sign(&ab), sign(&a) * sign(&b), "{na:?} * {nb:?}");
        assert_eq!(ab.in_gamma().unwrap(), a.in_gamma().unwrap() == b.in_gamma().unwrap());
    }
}

#[test]
fn sign_of_word_is_product_of_generator_signs() {
    let gens = k3_generators();
    let signs: Vec<i32> = gens.iter().map(|(_, g)| sign(g)).collect();
    let mut rng = rng(5);
    for _ in 0..50 {
        let len = rng.gen_range(1..=6);
        let mut acc = Isometry::identity(Arc::new(k3_lattice()));
        let mut expected = 1;
        for _ in 0..len {
            let k = rng.gen_range(0..gens.len());
            acc = acc.compose(&gens[k].1).unwrap();
            expected *= signs[k];
        }
        assert_eq!(sign(&acc), expected);
    }
}

#[test]
fn gamma_and_certificate_invariant_under_conjugation() {
    let gens = k3_generators();
    let swap = swap_involution_k3();
    let reference = nielsen_certificate(&swap).unwrap();
    let mut rng = rng(6);
    for _ in 0..25 {
        let len = rng.gen_range(1..=4);
        let (names, g) = random_word(&mut rng, &gens, len);
        let (_, a) = random_word(&mut rng, &gens, 3);
        let conj = a.conjugate_by(&g).unwrap();
        assert_eq!(conj.in_gamma().unwrap(), a.in_gamma().unwrap(), "{names:?}");
        let swap_conj = swap.conjugate_by(&g).unwrap();
        assert!(swap_conj.is_involution());
        assert_eq!(nielsen_certificate(&swap_conj).unwrap(), reference, "{names:?}");
    }
}

#[test]
fn reflections_in_all_240_e8_roots_share_a_side() {
    let k3 = Arc::new(k3_lattice());
    let roots = short_vectors(&e8_minus(), &BigInt::from(-2)).unwrap();
    assert_eq!(roots.len(), 240);
    let mut sides = Vec::new();
    for r in &roots {
        let mut v = LatticeVector::zero(22);
        v.0[K3_E8_A_OFFSET..K3_E8_A_OFFSET + 8].clone_from_slice(r.coords());
        let s = reflection_in_root(k3.clone(), &v).unwrap();
        assert!(s.is_involution());
        sides.push(s.in_gamma().unwrap());
    }
    assert!(sides.iter().all(|&x| x == sides[0]));
    assert!(sides[0]);
}

#[test]
fn order_divides_exactly_the_vanishing_powers() {
    // signed block permutations generate a finite group
    let finite: Vec<_> = k3_generators()
        .into_iter()
        .filter(|(n, _)| !n.starts_with("reflect"))
        .collect();
    let mut rng = rng(7);
    for _ in 0..40 {
        let len = rng.gen_range(1..=6);
        let (names, a) = random_word(&mut rng, &finite, len);
        let k = a.order(64).expect("finite order");
        for m in 1..=2 * k {
            assert_eq!(a.pow(m as u32).is_identity(), m % k == 0, "{names:?} m={m}");
        }
        assert_eq!(a.determinant().abs(), BigInt::from(1));
    }
}

#[test]
fn inverse_and_composition() {
    let gens = k3_generators();
    let mut rng = rng(8);
    for _ in 0..20 {
        let (_, a) = random_word(&mut rng, &gens, 5);
        let inv = a.inverse().unwrap();
        assert!(a.compose(&inv).unwrap().is_identity());
        assert_eq!(a.in_gamma().unwrap(), inv.in_gamma().unwrap());
    }
}

#[test]
fn commutation_predicate() {
    let gens = k3_generators();
    let id = Isometry::identity(Arc::new(k3_lattice()));
    let mut rng = rng(9);
    for _ in 0..30 {
        let (_, a) = random_word(&mut rng, &gens, 3);
        let (_, b) = random_word(&mut rng, &gens, 2);
        assert_eq!(a.commutes_with(&b).unwrap(), b.commutes_with(&a).unwrap());
        assert_eq!(
            a.commutes_with(&b).unwrap(),
            a.compose(&b).unwrap() == b.compose(&a).unwrap()
        );
        assert!(a.commutes_with(&a.pow(3)).unwrap());
        assert!(a.commutes_with(&id).unwrap());
    }
    let swap = swap_involution_k3();
    assert!(swap.commutes_with(&swap_e8_blocks()).unwrap());
    assert!(swap.commutes_with(&Isometry::negation(Arc::new(k3_lattice()))).unwrap());
    let reflection = reflection_in_root(Arc::new(k3_lattice()), &k3_e8_simple_roots()[0]).unwrap();
    assert!(!swap.commutes_with(&reflection).unwrap());
}
