#![allow(dead_code)]

use fqzeta::algebra::{Elem, FieldCtx, GaloisRing, Monomial, SparsePoly};
use fqzeta::make_field;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn field(q: u64) -> FieldCtx {
    let (p, e) = match q {
        2 => (2, 1),
        3 => (3, 1),
        4 => (2, 2),
        5 => (5, 1),
        7 => (7, 1),
        8 => (2, 3),
        9 => (3, 2),
        _ => panic!("unsupported q = {q}"),
    };
    make_field(p, e, None).unwrap()
}

pub fn uni(coeffs: &[i64], ring: &GaloisRing) -> SparsePoly {
    let c: Vec<Elem> = coeffs.iter().map(|&v| ring.from_int(v)).collect();
    SparsePoly::from_dense(&c, ring)
}

pub fn random_elem(rng: &mut ChaCha8Rng, ring: &GaloisRing) -> Elem {
    let n = ring.cardinality().unwrap();
    ring.from_index(rng.gen_range(0..n))
}

/// Random monic polynomial of degree exactly d, optionally with f(0) != 0.
pub fn random_monic(rng: &mut ChaCha8Rng, d: usize, nonzero_constant: bool, field: &FieldCtx) -> SparsePoly {
    let mut c: Vec<Elem> = (0..d).map(|_| random_elem(rng, field)).collect();
    if nonzero_constant {
        while field.is_zero(&c[0]) {
            c[0] = random_elem(rng, field);
        }
    }
    c.push(field.one());
    SparsePoly::from_dense(&c, field)
}

/// Exponent vectors in n variables of total degree <= d.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for a in 0..=d {
        for mut rest in monomials_up_to(n - 1, d - a) {
            rest.insert(0, a);
            out.push(rest);
        }
    }
    out
}

/// Random polynomial in n variables of total degree <= d, each monomial
/// present with probability `density`; never zero or constant.
pub fn random_poly(rng: &mut ChaCha8Rng, n: usize, d: u32, density: f64, ring: &GaloisRing) -> SparsePoly {
    let monos = monomials_up_to(n, d);
    loop {
        let mut terms: Vec<(Monomial, Elem)> = Vec::new();
        for e in &monos {
            if rng.gen_bool(density) {
                terms.push((Monomial::new(e), random_elem(rng, ring)));
            }
        }
        let f = SparsePoly::from_terms(n, terms, ring);
        if f.total_degree().unwrap_or(0) > 0 {
            return f;
        }
    }
}

/// Random monic polynomial with degree drawn from lo..=hi.
pub fn random_monic_between(rng: &mut ChaCha8Rng, lo: usize, hi: usize, nonzero_constant: bool, field: &FieldCtx) -> SparsePoly {
    let d = rng.gen_range(lo..=hi);
    random_monic(rng, d, nonzero_constant, field)
}
