mod common;

use common::*;
use fqzeta::algebra::univariate as uni;
use fqzeta::algebra::{Elem, GaloisRing};
use fqzeta::linalg::{charpoly_berkowitz, charpoly_hessenberg, charpoly_reverse, inverse, kernel_basis, mat_pow, rank};
use fqzeta::{make_galois_ring, Matrix};
use proptest::prelude::*;
use rand_chacha::ChaCha8Rng;

const QS: [u64; 5] = [2, 3, 4, 5, 9];

fn random_matrix(r: &mut ChaCha8Rng, n: usize, ring: &GaloisRing) -> Matrix {
    Matrix::from_rows(
        (0..n)
            .map(|_| (0..n).map(|_| random_elem(r, ring)).collect())
            .collect(),
    )
}

/// det(I - MT) by the Leibniz expansion over F_q[T]; independent of any
/// elimination or Berkowitz step.
fn leibniz_det(m: &Matrix, ring: &GaloisRing) -> Vec<Elem> {
    let n = m.n();
    // entry (i, j) of I - MT as a polynomial in T
    let entry = |i: usize, j: usize| -> Vec<Elem> {
        let c = ring.neg(m.get(i, j));
        if i == j {
            vec![ring.one(), c]
        } else {
            vec![ring.zero(), c]
        }
    };
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total: Vec<Elem> = vec![ring.zero(); n + 1];
    loop {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        let mut term = vec![ring.one()];
        for (i, &j) in perm.iter().enumerate() {
            term = uni::mul(ring, &term, &entry(i, j));
        }
        term.resize(n + 1, ring.zero());
        for (t, c) in total.iter_mut().zip(&term) {
            *t = if inversions % 2 == 0 { ring.add(t, c) } else { ring.sub(t, c) };
        }
        // next permutation in lexicographic order
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    total
}

fn random_invertible(r: &mut ChaCha8Rng, n: usize, ring: &GaloisRing) -> Matrix {
    loop {
        let p = random_matrix(r, n, ring);
        let det = charpoly_reverse(&p, ring);
        // det P = (-1)^n times the top coefficient of det(I - PT)
        if ring.is_unit(&det[n]) {
            return p;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn berkowitz_matches_leibniz(seed in any::<u64>(), qi in 0..QS.len(), n in 0usize..=6, m in 1u32..=2) {
        let field = field(QS[qi]);
        let ring = make_galois_ring(&field, m).unwrap();
        let mut r = rng(seed);
        let a = random_matrix(&mut r, n, &ring);
        prop_assert_eq!(charpoly_reverse(&a, &ring), leibniz_det(&a, &ring));
    }

    #[test]
    fn hessenberg_matches_berkowitz(seed in any::<u64>(), qi in 0..QS.len(), n in 0usize..=12, sparse in any::<bool>()) {
        let field = field(QS[qi]);
        let mut r = rng(seed);
        let mut a = random_matrix(&mut r, n, &field);
        if sparse {
            // many zero pivots exercise the row/column swaps
            for i in 0..n {
                for j in 0..n {
                    if (i * 7 + j * 3) % 4 != 0 {
                        a.set(i, j, field.zero());
                    }
                }
            }
        }
        prop_assert_eq!(charpoly_hessenberg(&a, &field), charpoly_berkowitz(&a, &field));
    }

    #[test]
    fn charpoly_commutes_with_reduction(seed in any::<u64>(), qi in 0..QS.len(), n in 1usize..=7, m in 2u32..=3) {
        let field = field(QS[qi]);
        let ring = make_galois_ring(&field, m).unwrap();
        let mut r = rng(seed);
        let a = random_matrix(&mut r, n, &ring);
        let reduced = Matrix::from_rows(a.rows().map(|row| row.iter().map(|c| ring.reduce(c)).collect()).collect());
        let lhs: Vec<Elem> = charpoly_reverse(&a, &ring).iter().map(|c| ring.reduce(c)).collect();
        prop_assert_eq!(lhs, charpoly_reverse(&reduced, &field));
    }

    #[test]
    fn charpoly_is_similarity_invariant(seed in any::<u64>(), qi in 0..QS.len(), n in 1usize..=7) {
        let field = field(QS[qi]);
        let mut r = rng(seed);
        let a = random_matrix(&mut r, n, &field);
        let p = random_invertible(&mut r, n, &field);
        let pinv = inverse(&p, &field).unwrap();
        let conj = pinv.mul(&a, &field).mul(&p, &field);
        prop_assert_eq!(charpoly_reverse(&conj, &field), charpoly_reverse(&a, &field));
    }

    #[test]
    fn rank_nullity(seed in any::<u64>(), qi in 0..QS.len(), n in 1usize..=8, zero_rows in 0usize..4) {
        let field = field(QS[qi]);
        let mut r = rng(seed);
        let mut a = random_matrix(&mut r, n, &field);
        // force some dependence so kernels are not always trivial
        for i in 0..zero_rows.min(n) {
            for j in 0..n {
                a.set(i, j, if i == j { field.one() } else { field.zero() });
            }
        }
        let b = a.sub_identity(&field);
        let ker = kernel_basis(&b, &field).unwrap();
        prop_assert_eq!(ker.len() + rank(&b, &field).unwrap(), n);
        for v in &ker {
            prop_assert!(b.mul_vec(v, &field).iter().all(|c| field.is_zero(c)));
        }
    }

    #[test]
    fn mat_pow_is_additive(seed in any::<u64>(), qi in 0..QS.len(), n in 1usize..=5, i in 0u64..20, j in 0u64..20) {
        let field = field(QS[qi]);
        let ring = make_galois_ring(&field, 2).unwrap();
        let mut r = rng(seed);
        let a = random_matrix(&mut r, n, &ring);
        prop_assert_eq!(
            mat_pow(&a, i + j, &ring),
            mat_pow(&a, i, &ring).mul(&mat_pow(&a, j, &ring), &ring)
        );
    }
}
