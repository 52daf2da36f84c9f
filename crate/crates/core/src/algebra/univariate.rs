//! Dense univariate arithmetic: Euclid, reduction, Frobenius, squarefree part.
//!
//! Dense coefficient vectors (constant term first, no trailing zeros) are the
//! working representation; the public operations accept and return
//! [`SparsePoly`] values in one variable.

use super::poly::SparsePoly;
use super::ring::{Elem, FieldCtx, GaloisRing};
use crate::error::{Error, Result};

/// Dense coefficients, constant term first, trimmed.
pub type Dense = Vec<Elem>;

pub fn trim(ring: &GaloisRing, mut a: Dense) -> Dense {
    while a.last().is_some_and(|c| ring.is_zero(c)) {
        a.pop();
    }
    a
}

/// Degree; `None` for zero.
pub fn degree(a: &[Elem]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn to_dense(f: &SparsePoly, ring: &GaloisRing) -> Result<Dense> {
    if f.nvars() != 1 {
        return Err(Error::MultivariateInput(f.nvars()));
    }
    let len = f.total_degree().map_or(0, |d| d as usize + 1);
    let mut out = vec![ring.zero(); len];
    for (m, c) in f.terms() {
        out[m.exps()[0] as usize] = c.clone();
    }
    Ok(out)
}

pub fn to_sparse(a: &[Elem], ring: &GaloisRing) -> SparsePoly {
    SparsePoly::from_dense(a, ring)
}

pub fn add(ring: &GaloisRing, a: &[Elem], b: &[Elem]) -> Dense {
    let n = a.len().max(b.len());
    let zero = ring.zero();
    let out = (0..n)
        .map(|i| ring.add(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect();
    trim(ring, out)
}

pub fn sub(ring: &GaloisRing, a: &[Elem], b: &[Elem]) -> Dense {
    let n = a.len().max(b.len());
    let zero = ring.zero();
    let out = (0..n)
        .map(|i| ring.sub(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect();
    trim(ring, out)
}

pub fn scale(ring: &GaloisRing, a: &[Elem], c: &Elem) -> Dense {
    trim(ring, a.iter().map(|x| ring.mul(x, c)).collect())
}

pub fn mul(ring: &GaloisRing, a: &[Elem], b: &[Elem]) -> Dense {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![ring.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if ring.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = ring.add(&out[i + j], &ring.mul(x, y));
        }
    }
    trim(ring, out)
}

/// Quotient and remainder by `b`, whose leading coefficient must be a unit.
pub fn divrem(ring: &GaloisRing, a: &[Elem], b: &[Elem]) -> (Dense, Dense) {
    let db = degree(b).expect("division by zero polynomial");
    let lead_inv = ring.inv(&b[db]).expect("leading coefficient must be a unit");
    let mut r = trim(ring, a.to_vec());
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut quot = vec![ring.zero(); r.len() - db];
    while r.len() > db {
        let k = r.len() - 1;
        let c = ring.mul(&r[k], &lead_inv);
        for j in 0..=db {
            r[k - db + j] = ring.sub(&r[k - db + j], &ring.mul(&c, &b[j]));
        }
        quot[k - db] = c;
        r = trim(ring, r);
    }
    (trim(ring, quot), r)
}

pub fn rem(ring: &GaloisRing, a: &[Elem], b: &[Elem]) -> Dense {
    divrem(ring, a, b).1
}

pub fn mulmod(ring: &GaloisRing, a: &[Elem], b: &[Elem], f: &[Elem]) -> Dense {
    rem(ring, &mul(ring, a, b), f)
}

pub fn powmod(ring: &GaloisRing, a: &[Elem], mut k: u128, f: &[Elem]) -> Dense {
    let mut acc = rem(ring, &[ring.one()], f);
    let mut base = rem(ring, a, f);
    while k > 0 {
        if k & 1 == 1 {
            acc = mulmod(ring, &acc, &base, f);
        }
        k >>= 1;
        if k > 0 {
            base = mulmod(ring, &base, &base, f);
        }
    }
    acc
}

pub fn derivative(ring: &GaloisRing, a: &[Elem]) -> Dense {
    let out = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| ring.mul_int(c, i as u64))
        .collect();
    trim(ring, out)
}

pub fn monic(field: &FieldCtx, a: &[Elem]) -> Dense {
    match a.last() {
        None => Vec::new(),
        Some(l) => scale(field, a, &field.inv(l).expect("nonzero in a field")),
    }
}

pub fn gcd(field: &FieldCtx, a: &[Elem], b: &[Elem]) -> Dense {
    let mut a = trim(field, a.to_vec());
    let mut b = trim(field, b.to_vec());
    while !b.is_empty() {
        let r = rem(field, &a, &b);
        a = b;
        b = r;
    }
    monic(field, &a)
}

/// Exact quotient a / b; panics (debug) if the division leaves a remainder.
pub fn div_exact(ring: &GaloisRing, a: &[Elem], b: &[Elem]) -> Dense {
    let (q, r) = divrem(ring, a, b);
    debug_assert!(r.is_empty(), "inexact division");
    q
}

/// u with u^p = a, for a polynomial in x^p over F_q.
fn pth_root(field: &FieldCtx, a: &[Elem]) -> Dense {
    let p = field.p() as usize;
    let out = a
        .iter()
        .step_by(p)
        .map(|c| field.pth_root(c))
        .collect();
    trim(field, out)
}

fn squarefree_dense(field: &FieldCtx, f: &[Elem]) -> Dense {
    if degree(f).unwrap_or(0) == 0 {
        return vec![field.one()];
    }
    let df = derivative(field, f);
    if df.is_empty() {
        return squarefree_dense(field, &pth_root(field, f));
    }
    let g = gcd(field, f, &df);
    let r = monic(field, &div_exact(field, f, &g));
    if degree(&g) == Some(0) {
        return r;
    }
    // Factors whose multiplicity is divisible by p survive only in g.
    let s = squarefree_dense(field, &g);
    let common = gcd(field, &r, &s);
    monic(field, &div_exact(field, &mul(field, &r, &s), &common))
}

/// Monic gcd of two univariate polynomials over a field.
pub fn gcd_uni(a: &SparsePoly, b: &SparsePoly, field: &FieldCtx) -> Result<SparsePoly> {
    let da = to_dense(a, field)?;
    let db = to_dense(b, field)?;
    if da.is_empty() && db.is_empty() {
        return Err(Error::InvalidArgument("gcd(0, 0) is undefined".into()));
    }
    Ok(to_sparse(&gcd(field, &da, &db), field))
}

/// Product of the distinct monic irreducible factors of `f`.
pub fn squarefree_part(f: &SparsePoly, field: &FieldCtx) -> Result<SparsePoly> {
    let df = to_dense(f, field)?;
    if degree(&df).unwrap_or(0) == 0 {
        return Err(Error::ConstantInput);
    }
    Ok(to_sparse(&squarefree_dense(field, &monic(field, &df)), field))
}

/// h^q mod f.
pub fn frobenius_mod(h: &SparsePoly, f: &SparsePoly, field: &FieldCtx) -> Result<SparsePoly> {
    let dh = to_dense(h, field)?;
    let dfm = to_dense(f, field)?;
    if degree(&dfm).unwrap_or(0) == 0 {
        return Err(Error::ConstantInput);
    }
    Ok(to_sparse(&powmod(field, &dh, field.q() as u128, &dfm), field))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::make_field;

    fn uni(coeffs: &[i64], f: &FieldCtx) -> SparsePoly {
        let c: Vec<Elem> = coeffs.iter().map(|&v| f.from_int(v)).collect();
        SparsePoly::from_dense(&c, f)
    }

    #[test]
    fn gcd_examples() {
        let f3 = make_field(3, 1, None).unwrap();
        assert_eq!(
            gcd_uni(&uni(&[-1, 0, 1], &f3), &uni(&[-1, 1], &f3), &f3).unwrap(),
            uni(&[2, 1], &f3)
        );
        let f2 = make_field(2, 1, None).unwrap();
        let f = uni(&[1, 1, 1], &f2);
        assert_eq!(gcd_uni(&f, &SparsePoly::zero(1), &f2).unwrap(), f);
        assert_eq!(gcd_uni(&f, &uni(&[1, 1], &f2), &f2).unwrap(), uni(&[1], &f2));
        let xy = SparsePoly::monomial(&[1, 1], f2.one(), &f2);
        assert_eq!(gcd_uni(&xy, &f, &f2), Err(Error::MultivariateInput(2)));
    }

    #[test]
    fn squarefree_examples() {
        let f2 = make_field(2, 1, None).unwrap();
        assert_eq!(squarefree_part(&uni(&[1, 0, 1], &f2), &f2).unwrap(), uni(&[1, 1], &f2));
        assert_eq!(squarefree_part(&uni(&[0, 1, 0, 1], &f2), &f2).unwrap(), uni(&[0, 1, 1], &f2));
        let irr = uni(&[1, 1, 0, 1], &f2);
        assert_eq!(squarefree_part(&irr, &f2).unwrap(), irr);
        assert_eq!(squarefree_part(&uni(&[1], &f2), &f2), Err(Error::ConstantInput));
        // (x+1)^3 (x^2+x+1)^2 x^4 over F_2 mixes both branches.
        let a = uni(&[1, 1], &f2);
        let b = uni(&[1, 1, 1], &f2);
        let x = uni(&[0, 1], &f2);
        let mut f = uni(&[1], &f2);
        for _ in 0..3 {
            f = f.mul(&a, &f2);
        }
        for _ in 0..2 {
            f = f.mul(&b, &f2);
        }
        for _ in 0..4 {
            f = f.mul(&x, &f2);
        }
        let expect = a.mul(&b, &f2).mul(&x, &f2);
        assert_eq!(squarefree_part(&f, &f2).unwrap(), expect);
    }

    #[test]
    fn frobenius_examples() {
        let f2 = make_field(2, 1, None).unwrap();
        let x = uni(&[0, 1], &f2);
        assert_eq!(
            frobenius_mod(&x, &uni(&[1, 1, 1], &f2), &f2).unwrap(),
            uni(&[1, 1], &f2)
        );
        assert_eq!(
            frobenius_mod(&uni(&[1], &f2), &uni(&[1, 1, 1], &f2), &f2).unwrap(),
            uni(&[1], &f2)
        );
        let f3 = make_field(3, 1, None).unwrap();
        assert_eq!(
            frobenius_mod(&uni(&[0, 1], &f3), &uni(&[-1, 0, 1], &f3), &f3).unwrap(),
            uni(&[0, 1], &f3)
        );
    }
}
