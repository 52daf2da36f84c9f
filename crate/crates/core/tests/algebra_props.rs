mod common;

use common::*;
use fqzeta::algebra::univariate as uni;
use fqzeta::algebra::{gcd_uni, hasse_q_minus_1, poly_pow, psi_q, squarefree_part, SparsePoly};
use fqzeta::{make_galois_ring, Limits};
use proptest::prelude::*;

const QS: [u64; 5] = [2, 3, 4, 5, 9];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn psi_inverts_frobenius(seed in any::<u64>(), qi in 0..QS.len(), n in 1usize..=3) {
        let q = QS[qi];
        let field = field(q);
        let mut r = rng(seed);
        let h = random_poly(&mut r, n, 3, 0.5, &field);
        let hq = poly_pow(&h, q, &field, Limits::default().max_terms).unwrap();
        prop_assert_eq!(psi_q(&hq, q), h);
    }

    #[test]
    fn psi_commutes_with_qth_powers(seed in any::<u64>(), qi in 0..QS.len(), n in 1usize..=2) {
        let q = QS[qi];
        let field = field(q);
        let mut r = rng(seed);
        let f = random_poly(&mut r, n, 2, 0.6, &field);
        let h = random_poly(&mut r, n, 2 * q as u32, 0.4, &field);
        let fq = poly_pow(&f, q, &field, 1 << 20).unwrap();
        prop_assert_eq!(psi_q(&fq.mul(&h, &field), q), f.mul(&psi_q(&h, q), &field));
    }

    #[test]
    fn hasse_commutes_with_qth_powers(seed in any::<u64>(), qi in 0..QS.len()) {
        let q = QS[qi];
        let field = field(q);
        let mut r = rng(seed);
        let f = random_poly(&mut r, 1, 3, 0.7, &field);
        let h = random_poly(&mut r, 1, 2 * q as u32, 0.5, &field);
        let fq = poly_pow(&f, q, &field, 1 << 20).unwrap();
        let lhs = fq.mul(&hasse_q_minus_1(&h, q, &field).unwrap(), &field);
        let rhs = hasse_q_minus_1(&fq.mul(&h, &field), q, &field).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn frobenius_is_fq_linear_mod_f(seed in any::<u64>(), qi in 0..QS.len(), d in 1usize..=8) {
        let q = QS[qi];
        let field = field(q);
        let mut r = rng(seed);
        let f = uni::to_dense(&random_monic(&mut r, d, false, &field), &field).unwrap();
        let h1: Vec<_> = (0..d).map(|_| random_elem(&mut r, &field)).collect();
        let h2: Vec<_> = (0..d).map(|_| random_elem(&mut r, &field)).collect();
        let a = random_elem(&mut r, &field);
        let frob = |h: &[fqzeta::Elem]| uni::powmod(&field, h, q as u128, &f);
        let lhs = frob(&uni::add(&field, &uni::scale(&field, &h1, &a), &h2));
        let rhs = uni::add(&field, &uni::scale(&field, &frob(&h1), &a), &frob(&h2));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn squarefree_layers_reconstruct(seed in any::<u64>(), qi in 0..QS.len()) {
        let q = QS[qi];
        let field = field(q);
        let mut r = rng(seed);
        // Build f with repeated factors on purpose.
        let a = random_monic_between(&mut r, 1, 3, false, &field);
        let b = random_monic_between(&mut r, 1, 2, false, &field);
        let f = a.mul(&a, &field).mul(&b, &field).mul(&a, &field);
        let mut rest = uni::to_dense(&f, &field).unwrap();
        let mut product = vec![field.one()];
        while rest.len() > 1 {
            let s = uni::to_dense(&squarefree_part(&uni::to_sparse(&rest, &field), &field).unwrap(), &field).unwrap();
            prop_assert!(s.len() > 1);
            product = uni::mul(&field, &product, &s);
            rest = uni::div_exact(&field, &rest, &s);
        }
        prop_assert_eq!(uni::to_sparse(&product, &field), f);
    }

    #[test]
    fn gcd_divides_and_lcm_identity(seed in any::<u64>(), qi in 0..QS.len()) {
        let q = QS[qi];
        let field = field(q);
        let mut r = rng(seed);
        let c = random_monic_between(&mut r, 0, 3, false, &field);
        let a = random_monic_between(&mut r, 1, 5, false, &field).mul(&c, &field);
        let b = random_monic_between(&mut r, 1, 5, false, &field).mul(&c, &field);
        let g = gcd_uni(&a, &b, &field).unwrap();
        let dg = uni::to_dense(&g, &field).unwrap();
        prop_assert!(field.is_one(dg.last().unwrap()));
        let da = uni::to_dense(&a, &field).unwrap();
        let db = uni::to_dense(&b, &field).unwrap();
        prop_assert!(uni::rem(&field, &da, &dg).is_empty());
        prop_assert!(uni::rem(&field, &db, &dg).is_empty());
        let lcm = uni::div_exact(&field, &uni::mul(&field, &da, &db), &dg);
        prop_assert_eq!(uni::mul(&field, &dg, &lcm), uni::mul(&field, &da, &db));
    }

    #[test]
    fn galois_ring_reduction_is_multiplicative(seed in any::<u64>(), qi in 0..QS.len(), m in 1u32..=3) {
        let q = QS[qi];
        let field = field(q);
        let ring = make_galois_ring(&field, m).unwrap();
        let mut r = rng(seed);
        let a = random_elem(&mut r, &ring);
        let b = random_elem(&mut r, &ring);
        prop_assert_eq!(
            ring.reduce(&ring.mul(&a, &b)),
            field.mul(&ring.reduce(&a), &ring.reduce(&b))
        );
        prop_assert_eq!(
            ring.reduce(&ring.add(&a, &b)),
            field.add(&ring.reduce(&a), &ring.reduce(&b))
        );
        if ring.is_unit(&a) {
            let inv = ring.inv(&a).unwrap();
            prop_assert!(ring.is_one(&ring.mul(&a, &inv)));
        }
    }
}

#[test]
fn psi_of_sparse_power_matches_termwise() {
    let field = field(3);
    let h = SparsePoly::from_dense(&[field.one(), field.zero(), field.zero(), field.from_int(2)], &field);
    assert_eq!(psi_q(&h, 3), uni(&[1, 2], &field));
}
