mod common;

use std::sync::Arc;

use common::*;
use k3lat::involution::{equivariant_signature, fixed_point_profile, tcr_decompose, TcrProfile};
use k3lat::{k3_lattice, swap_involution_k3, Error, Isometry};
use rand::Rng;

#[test]
fn tcr_recovers_200_conjugated_block_models() {
    let mut rng = rng(2);
    for _ in 0..200 {
        let n = rng.gen_range(1..=10);
        let r = rng.gen_range(0..=n / 2);
        let t = rng.gen_range(0..=n - 2 * r);
        let c = n - 2 * r - t;
        let (l, a) = conjugated_block_model(&mut rng, t, c, r);
        let p = tcr_decompose(&l, &a).unwrap();
        assert_eq!(p, TcrProfile { t, c, r }, "gram {:?}", to_i64(l.gram()));
        assert_eq!(p.rank(), n);
    }
}

#[test]
fn swap_profile() {
    let l = k3_lattice();
    let a = swap_involution_k3();
    assert_eq!(tcr_decompose(&l, &a).unwrap(), TcrProfile { t: 0, c: 0, r: 11 });
    let e = equivariant_signature(&l, &a).unwrap();
    assert_eq!((e.b_plus_g, e.b_minus_g, e.sigma_g), (3, 8, -5));
}

#[test]
fn identity_and_negation_profiles() {
    let l = Arc::new(k3_lattice());
    let id = Isometry::identity(l.clone());
    assert_eq!(tcr_decompose(&l, &id).unwrap(), TcrProfile { t: 22, c: 0, r: 0 });
    let neg = Isometry::negation(l.clone());
    assert_eq!(tcr_decompose(&l, &neg).unwrap(), TcrProfile { t: 0, c: 22, r: 0 });
}

#[test]
fn equivariant_signature_of_identity_is_the_signature() {
    let mut rng = rng(3);
    for _ in 0..50 {
        let n = rng.gen_range(1..=8);
        let l = Arc::new(random_nondegenerate(&mut rng, n));
        let e = equivariant_signature(&l, &Isometry::identity(l.clone())).unwrap();
        let s = l.signature();
        assert_eq!((e.b_plus_g, e.b_minus_g, e.sigma_g), (s.b_plus, s.b_minus, s.sigma()));
    }
}

#[test]
fn non_involutions_rejected() {
    let l = k3_lattice();
    let cycle = k3lat::isometry::cycle_u_blocks();
    assert_eq!(tcr_decompose(&l, &cycle).unwrap_err(), Error::NotInvolution);
    assert_eq!(equivariant_signature(&l, &cycle).unwrap_err(), Error::NotInvolution);
}

#[test]
fn fixed_point_counts() {
    let p = fixed_point_profile(0, 0).unwrap();
    assert_eq!((p.k, p.total_genus), (1, 0));
    let p = fixed_point_profile(0, 22).unwrap();
    assert_eq!((p.k, p.total_genus), (1, 11));
    assert!(matches!(fixed_point_profile(1, 0), Err(Error::FixedPointData(_))));
    assert!(matches!(fixed_point_profile(0, 3), Err(Error::FixedPointData(_))));
}
