mod common;

use common::*;
use rand::Rng;
use fqzeta::factor::factorize;
use fqzeta::hyper::{torus_zeta, zeta_mod_p, zeta_mod_pm};
use fqzeta::oracle::{reduce_coeffs, zeta_coeffs_exact, Domain, IrreducibleSieve, PointCounter};
use fqzeta::zerodim::{congruence_charpoly, zerodim_zeta, OperatorKind};
use fqzeta::{make_galois_ring, ExecMode, Limits};

fn series_budget(q: u64, n: usize, cap: u128) -> usize {
    let mut b = 1;
    while (q as u128).pow(((b + 1) * n) as u32) <= cap {
        b += 1;
    }
    b
}

#[test]
fn affine_zeta_mod_p_matches_counts() {
    let lim = Limits::default();
    let mut r = rng(11);
    for (q, n, dmax) in [(2u64, 1usize, 6u32), (2, 2, 4), (3, 2, 3), (2, 3, 3), (4, 2, 3)] {
        let field = field(q);
        let b = series_budget(q, n, 1_000_000).min(8);
        let mut counter = PointCounter::new(&field, &lim);
        for _ in 0..8 {
            let d = r.gen_range(1..=dmax);
            let f = random_poly(&mut r, n, d, 0.5, &field);
            let z = zeta_mod_p(&f, n, None, b, &field, &lim).unwrap();
            let counts = counter
                .count_vector(&f, b as u32, Domain::Affine, ExecMode::Sequential)
                .unwrap();
            let exact = zeta_coeffs_exact(&counts, b).unwrap();
            assert_eq!(
                z.series.coeffs(),
                &reduce_coeffs(&exact, field.p())[..],
                "q={q} n={n} f={f:?}"
            );
        }
    }
}

#[test]
fn torus_zeta_mod_pm_matches_counts() {
    let lim = Limits::default();
    let mut r = rng(12);
    for (p, m, q, n, dmax) in [(2u64, 2u32, 2u64, 1usize, 3u32), (2, 2, 2, 2, 2), (3, 2, 3, 1, 2), (2, 3, 2, 1, 2), (2, 2, 4, 1, 2)] {
        let field = field(q);
        assert_eq!(field.p(), p);
        let ring = make_galois_ring(&field, m).unwrap();
        let mut counter = PointCounter::new(&field, &lim);
        for _ in 0..6 {
            let d = r.gen_range(1..=dmax);
            let f = random_poly(&mut r, n, d, 0.6, &field);
            let z = zeta_mod_pm(&f, m, 4, &ring, None, None, &lim).unwrap();
            let counts = counter.count_vector(&f, 4, Domain::Torus, ExecMode::Sequential).unwrap();
            let exact = zeta_coeffs_exact(&counts, 4).unwrap();
            assert_eq!(
                z.series.coeffs(),
                &reduce_coeffs(&exact, ring.pm())[..],
                "p={p} m={m} q={q} n={n} f={f:?}"
            );
        }
    }
}

#[test]
fn torus_closed_form_matches_counts() {
    for n in 0..=3usize {
        for q in [2u64, 3, 4] {
            let counts: Vec<u64> = (1..=5u32).map(|k| (q.pow(k) - 1).pow(n as u32)).collect();
            let cv = fqzeta::oracle::CountVector {
                counts,
                domain: Domain::Torus,
                q,
                nvars: n,
            };
            let exact = zeta_coeffs_exact(&cv, 5).unwrap();
            for modulus in [2u64, 4, 9, 1 << 40] {
                assert_eq!(
                    torus_zeta(n, q, 5, modulus).coeffs(),
                    &reduce_coeffs(&exact, modulus)[..]
                );
            }
        }
    }
}

#[test]
fn zero_dimensional_congruences_and_factorization() {
    let lim = Limits::default();
    let mut r = rng(13);
    for q in [2u64, 3, 4, 5, 9] {
        let field = field(q);
        let sieve = IrreducibleSieve::new(&field, 6, &lim).unwrap();
        for _ in 0..30 {
            let d = r.gen_range(1..=12);
            let f = random_monic(&mut r, d, true, &field);
            let truth = sieve.trial_factorize(&f).unwrap();
            // prod over distinct irreducible factors of (1 - T^deg)
            let mut expected = vec![1i64];
            for (g, _) in &truth.factors {
                let k = g.total_degree().unwrap() as usize;
                {
                    let mut next = vec![0i64; expected.len() + k];
                    for (i, &c) in expected.iter().enumerate() {
                        next[i] += c;
                        next[i + k] -= c;
                    }
                    expected = next;
                }
            }
            let expected: Vec<u64> = expected
                .iter()
                .map(|&c| c.rem_euclid(field.p() as i64) as u64)
                .collect();
            for kind in OperatorKind::ALL {
                let cp = congruence_charpoly(&f, kind, &field, &lim).unwrap();
                assert_eq!(cp, expected, "{kind} q={q} f={f:?}");
                let fac = factorize(&f, kind, &field, &lim).unwrap();
                assert_eq!(fac, truth, "{kind} q={q} f={f:?}");
            }
            let z = zerodim_zeta(&f, &field).unwrap();
            let mut counter = PointCounter::new(&field, &lim);
            let b = 2 * d.min(3);
            let counts = counter.count_vector(&f, b as u32, Domain::Affine, ExecMode::Sequential).unwrap();
            assert_eq!(z.series(b), zeta_coeffs_exact(&counts, b).unwrap());
        }
    }
}
