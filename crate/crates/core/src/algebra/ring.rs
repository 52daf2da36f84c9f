//! Finite fields F_q = F_p[t]/(h(t)) and Galois rings (Z/p^m)[t]/(H(t)).
//!
//! Both are handled by one arithmetic engine, [`GaloisRing`]. A field is the
//! case m = 1; [`FieldCtx`] and [`RingCtx`] are thin wrappers that record
//! which guarantees hold (irreducible modulus, lifted modulus).

use std::fmt;
use std::ops::Deref;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// An element of a Galois ring: `e` residues mod p^m, the coordinates in the
/// basis 1, t, ..., t^(e-1).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Elem(SmallVec<[u64; 4]>);

pub type FieldElem = Elem;
pub type RingElem = Elem;

impl Elem {
    pub fn coords(&self) -> &[u64] {
        &self.0
    }
}

/// Arithmetic context for (Z/p^m)[t]/(H(t)) with H monic of degree e.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaloisRing {
    p: u64,
    e: usize,
    m: u32,
    pm: u64,
    q: u64,
    modulus: Vec<u64>,
}

impl fmt::Debug for GaloisRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GaloisRing(p={}, e={}, m={}, modulus={:?})",
            self.p, self.e, self.m, self.modulus
        )
    }
}

#[inline]
fn mulmod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut r: u64 = 1;
    for _ in 0..exp {
        r = r.checked_mul(base)?;
    }
    Some(r)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl GaloisRing {
    fn new(p: u64, e: usize, m: u32, modulus: Vec<u64>) -> Result<Self> {
        let pm = checked_pow(p, m)
            .filter(|&v| v < (1 << 62))
            .ok_or_else(|| Error::SizeLimit(format!("p^m = {p}^{m} does not fit in 62 bits")))?;
        let q = checked_pow(p, e as u32)
            .ok_or_else(|| Error::SizeLimit(format!("q = {p}^{e} does not fit in 64 bits")))?;
        debug_assert_eq!(modulus.len(), e + 1);
        Ok(GaloisRing {
            p,
            e,
            m,
            pm,
            q,
            modulus,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn e(&self) -> usize {
        self.e
    }
    pub fn m(&self) -> u32 {
        self.m
    }
    /// The residue characteristic power p^m.
    pub fn pm(&self) -> u64 {
        self.pm
    }
    /// Size of the residue field, p^e.
    pub fn q(&self) -> u64 {
        self.q
    }
    /// Coefficients of the monic modulus, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> Elem {
        Elem(SmallVec::from_elem(0, self.e))
    }

    pub fn one(&self) -> Elem {
        let mut z = self.zero();
        z.0[0] = 1 % self.pm;
        z
    }

    pub fn from_int(&self, c: i64) -> Elem {
        let mut z = self.zero();
        z.0[0] = c.rem_euclid(self.pm as i64) as u64;
        z
    }

    /// The generator t of the extension (equal to a prime-field constant when e = 1).
    pub fn generator(&self) -> Elem {
        if self.e == 1 {
            return self.from_int(self.pm as i64 - self.modulus[0] as i64);
        }
        let mut z = self.zero();
        z.0[1] = 1;
        z
    }

    /// Builds an element from integer coordinates (reduced mod p^m); missing
    /// coordinates are zero, extra ones are folded in through the modulus.
    pub fn from_coords(&self, coords: &[i64]) -> Elem {
        let t = self.generator();
        let mut acc = self.zero();
        let mut pw = self.one();
        for &c in coords {
            acc = self.add(&acc, &self.mul(&pw, &self.from_int(c)));
            pw = self.mul(&pw, &t);
        }
        acc
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        a.0.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self, a: &Elem) -> bool {
        a.0[0] == 1 % self.pm && a.0[1..].iter().all(|&c| c == 0)
    }

    /// True when the element lies in Z/p^m (all higher coordinates vanish).
    pub fn is_prime_subring(&self, a: &Elem) -> bool {
        a.0[1..].iter().all(|&c| c == 0)
    }

    /// The element as a residue mod p^m, if it lies in Z/p^m.
    pub fn to_int(&self, a: &Elem) -> Option<u64> {
        self.is_prime_subring(a).then(|| a.0[0])
    }

    /// Units are exactly the elements with nonzero reduction mod p.
    pub fn is_unit(&self, a: &Elem) -> bool {
        a.0.iter().any(|&c| c % self.p != 0)
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        let pm = self.pm;
        Elem(
            a.0.iter()
                .zip(&b.0)
                .map(|(&x, &y)| {
                    let s = x + y;
                    if s >= pm {
                        s - pm
                    } else {
                        s
                    }
                })
                .collect(),
        )
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        let pm = self.pm;
        Elem(
            a.0.iter()
                .zip(&b.0)
                .map(|(&x, &y)| if x >= y { x - y } else { x + pm - y })
                .collect(),
        )
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        let pm = self.pm;
        Elem(a.0.iter().map(|&x| if x == 0 { 0 } else { pm - x }).collect())
    }

    /// Multiplies by an integer scalar.
    pub fn mul_int(&self, a: &Elem, c: u64) -> Elem {
        let c = c % self.pm;
        Elem(a.0.iter().map(|&x| mulmod(x, c, self.pm)).collect())
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let pm = self.pm;
        let e = self.e;
        if e == 1 {
            return Elem(SmallVec::from_elem(mulmod(a.0[0], b.0[0], pm), 1));
        }
        let mut prod: SmallVec<[u64; 8]> = SmallVec::from_elem(0, 2 * e - 1);
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                let v = prod[i + j] + mulmod(x, y, pm);
                prod[i + j] = if v >= pm { v - pm } else { v };
            }
        }
        // t^e = -(h_0 + h_1 t + ... + h_{e-1} t^{e-1})
        for k in (e..2 * e - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for j in 0..e {
                let s = mulmod(c, self.modulus[j], pm);
                let v = prod[k - e + j];
                prod[k - e + j] = if v >= s { v - s } else { v + pm - s };
            }
        }
        Elem(prod[..e].iter().copied().collect())
    }

    pub fn pow(&self, a: &Elem, mut k: u128) -> Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Inverse of a unit; `None` for non-units.
    ///
    /// Inverts mod p via a^(q-2), then lifts with the Newton step
    /// x <- x(2 - ax) which doubles the p-adic precision each round.
    pub fn inv(&self, a: &Elem) -> Option<Elem> {
        if !self.is_unit(a) {
            return None;
        }
        // Work in the residue field first.
        let residue: SmallVec<[u64; 4]> = a.0.iter().map(|&c| c % self.p).collect();
        let field = GaloisRing {
            p: self.p,
            e: self.e,
            m: 1,
            pm: self.p,
            q: self.q,
            modulus: self.modulus.iter().map(|&c| c % self.p).collect(),
        };
        let inv0 = field.pow(&Elem(residue), self.q as u128 - 2);
        let mut x = Elem(inv0.0);
        let two = self.from_int(2);
        let mut prec = 1;
        while prec < self.m {
            let ax = self.mul(a, &x);
            x = self.mul(&x, &self.sub(&two, &ax));
            prec *= 2;
        }
        debug_assert!(self.is_one(&self.mul(a, &x)));
        Some(x)
    }

    /// Index of an element in 0..(p^m)^e, reading coordinates base p^m with
    /// the constant coordinate least significant.
    pub fn index_of(&self, a: &Elem) -> u64 {
        a.0.iter().rev().fold(0u64, |acc, &c| acc * self.pm + c)
    }

    pub fn from_index(&self, mut idx: u64) -> Elem {
        let mut z = self.zero();
        for c in z.0.iter_mut() {
            *c = idx % self.pm;
            idx /= self.pm;
        }
        z
    }

    /// Number of elements, (p^m)^e; `None` if it overflows.
    pub fn cardinality(&self) -> Option<u64> {
        checked_pow(self.pm, self.e as u32)
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        let n = self.cardinality().expect("ring too large to enumerate");
        (0..n).map(move |i| self.from_index(i))
    }

    /// Reduces every coordinate mod p; the result is a residue-field element.
    pub fn reduce_coords_mod_p(&self, a: &Elem) -> Elem {
        Elem(a.0.iter().map(|&c| c % self.p).collect())
    }

    /// Reinterprets residue-field coordinates as ring coordinates (the
    /// representatives 0..p-1).
    pub fn lift_coords(&self, a: &Elem) -> Elem {
        Elem(a.0.clone())
    }

    pub fn same_ring(&self, other: &GaloisRing) -> bool {
        self == other
    }
}

/// The finite field F_q, q = p^e, presented as F_p[t]/(h(t)).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FieldCtx(GaloisRing);

impl Deref for FieldCtx {
    type Target = GaloisRing;
    fn deref(&self) -> &GaloisRing {
        &self.0
    }
}

impl FieldCtx {
    pub fn ring(&self) -> &GaloisRing {
        &self.0
    }

    /// The p-th root, i.e. the inverse of a -> a^p, computed as a^(p^(e-1)).
    pub fn pth_root(&self, a: &Elem) -> Elem {
        self.pow(a, (self.q / self.p) as u128)
    }
}

/// The Galois ring O_m = (Z/p^m)[t]/(H(t)) lifting a field context.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RingCtx {
    ring: GaloisRing,
    field: FieldCtx,
}

impl Deref for RingCtx {
    type Target = GaloisRing;
    fn deref(&self) -> &GaloisRing {
        &self.ring
    }
}

impl RingCtx {
    pub fn ring(&self) -> &GaloisRing {
        &self.ring
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    /// Reduction O_m -> F_q.
    pub fn reduce(&self, a: &Elem) -> Elem {
        self.ring.reduce_coords_mod_p(a)
    }

    /// The coordinate-wise lift F_q -> O_m with representatives 0..p-1.
    pub fn lift(&self, a: &Elem) -> Elem {
        self.ring.lift_coords(a)
    }
}

/// Dense univariate helpers over F_p used to certify moduli.
mod fp {
    pub fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn inv(a: u64, p: u64) -> u64 {
        super::GaloisRing {
            p,
            e: 1,
            m: 1,
            pm: p,
            q: p,
            modulus: vec![0, 1],
        }
        .pow(&super::Elem(smallvec::smallvec![a]), p as u128 - 2)
        .0[0]
    }

    pub fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut r = a.to_vec();
        trim(&mut r);
        let db = b.len() - 1;
        let li = inv(b[db], p);
        while r.len() > db {
            let k = r.len() - 1;
            let c = super::mulmod(r[k], li, p);
            for j in 0..=db {
                let s = super::mulmod(c, b[j], p);
                r[k - db + j] = (r[k - db + j] + p - s) % p;
            }
            trim(&mut r);
        }
        r
    }

    pub fn mulmod_poly(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + super::mulmod(x, y, p)) % p;
            }
        }
        rem(&prod, f, p)
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// Ben-Or test: h of degree e is irreducible iff gcd(x^(p^i) - x, h) = 1
    /// for all 1 <= i <= e/2.
    pub fn is_irreducible(h: &[u64], p: u64) -> bool {
        let e = h.len() - 1;
        if e == 1 {
            return true;
        }
        let mut xp = vec![0, 1];
        xp = rem(&xp, h, p);
        for _ in 1..=e / 2 {
            // xp <- xp^p mod h
            let mut acc = vec![1u64];
            let mut base = xp.clone();
            let mut k = p;
            while k > 0 {
                if k & 1 == 1 {
                    acc = mulmod_poly(&acc, &base, h, p);
                }
                k >>= 1;
                if k > 0 {
                    base = mulmod_poly(&base, &base, h, p);
                }
            }
            xp = acc;
            let mut diff = xp.clone();
            if diff.len() < 2 {
                diff.resize(2, 0);
            }
            diff[1] = (diff[1] + p - 1) % p;
            trim(&mut diff);
            let g = gcd(&diff, h, p);
            if g.len() != 1 {
                return false;
            }
        }
        true
    }
}

/// Builds F_q for q = p^e.
///
/// With no modulus, picks the lexicographically least monic irreducible of
/// degree e, ordering candidates by the tuple (c_{e-1}, ..., c_0).
pub fn make_field(p: u64, e: usize, modulus: Option<&[u64]>) -> Result<FieldCtx> {
    if !is_prime(p) {
        return Err(Error::CompositeP(p));
    }
    if p >= 1 << 31 {
        return Err(Error::SizeLimit(format!("p = {p} exceeds 2^31")));
    }
    if e == 0 {
        return Err(Error::InvalidArgument("extension degree must be at least 1".into()));
    }
    let modulus = match modulus {
        Some(h) => {
            if h.len() != e + 1 || h[e] % p != 1 {
                return Err(Error::InvalidArgument(format!(
                    "modulus must be monic of degree {e}"
                )));
            }
            let h: Vec<u64> = h.iter().map(|&c| c % p).collect();
            if !fp::is_irreducible(&h, p) {
                return Err(Error::ReducibleModulus(p));
            }
            h
        }
        None => least_irreducible(p, e)?,
    };
    Ok(FieldCtx(GaloisRing::new(p, e, 1, modulus)?))
}

fn least_irreducible(p: u64, e: usize) -> Result<Vec<u64>> {
    let total = checked_pow(p, e as u32).ok_or_else(|| Error::SizeLimit("p^e overflow".into()))?;
    for idx in 0..total {
        // idx read base p with c_0 as the least significant digit orders
        // candidates by (c_{e-1}, ..., c_0).
        let mut h = Vec::with_capacity(e + 1);
        let mut r = idx;
        for _ in 0..e {
            h.push(r % p);
            r /= p;
        }
        h.push(1);
        if fp::is_irreducible(&h, p) {
            return Ok(h);
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Builds the Galois ring O_m lifting `fctx`, using the coordinate-wise
/// trivial lift of the modulus.
pub fn make_galois_ring(fctx: &FieldCtx, m: u32) -> Result<RingCtx> {
    if m == 0 {
        return Err(Error::InvalidArgument("precision m must be at least 1".into()));
    }
    let ring = GaloisRing::new(fctx.p, fctx.e, m, fctx.modulus.clone())?;
    Ok(RingCtx {
        ring,
        field: fctx.clone(),
    })
}
