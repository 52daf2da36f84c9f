//! Sparse multivariate polynomials and the operators psi_q and H^(q-1).

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use smallvec::SmallVec;

use super::ring::{Elem, GaloisRing};
use crate::error::{Error, Result};

/// An exponent vector, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(SmallVec<[u32; 4]>);

impl Monomial {
    pub fn new(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// u / q if q divides every exponent.
    pub fn div_exact(&self, q: u64) -> Option<Monomial> {
        let mut out = SmallVec::with_capacity(self.0.len());
        for &u in &self.0 {
            if u as u64 % q != 0 {
                return None;
            }
            out.push((u as u64 / q) as u32);
        }
        Some(Monomial(out))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `nvars` variables, stored as a map from exponent vector to
/// nonzero coefficient. Coefficients live in a [`GaloisRing`] supplied to
/// each operation.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Elem>,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Elem, ring: &GaloisRing) -> Self {
        Self::from_terms(nvars, [(Monomial::one(nvars), c)], ring)
    }

    pub fn one(nvars: usize, ring: &GaloisRing) -> Self {
        Self::constant(nvars, ring.one(), ring)
    }

    /// The variable x_i (0-based).
    pub fn var(i: usize, nvars: usize, ring: &GaloisRing) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::from_terms(nvars, [(Monomial::new(&e), ring.one())], ring)
    }

    pub fn monomial(exps: &[u32], c: Elem, ring: &GaloisRing) -> Self {
        Self::from_terms(exps.len(), [(Monomial::new(exps), c)], ring)
    }

    /// Collects terms, summing duplicates and dropping zeros.
    pub fn from_terms<I>(nvars: usize, terms: I, ring: &GaloisRing) -> Self
    where
        I: IntoIterator<Item = (Monomial, Elem)>,
    {
        let mut map: BTreeMap<Monomial, Elem> = BTreeMap::new();
        for (mono, c) in terms {
            assert_eq!(mono.0.len(), nvars, "exponent vector length mismatch");
            match map.get_mut(&mono) {
                Some(v) => *v = ring.add(v, &c),
                None => {
                    map.insert(mono, c);
                }
            }
        }
        map.retain(|_, c| !ring.is_zero(c));
        SparsePoly { nvars, terms: map }
    }

    /// Univariate polynomial from dense coefficients, constant term first.
    pub fn from_dense(coeffs: &[Elem], ring: &GaloisRing) -> Self {
        Self::from_terms(
            1,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::new(&[i as u32]), c.clone())),
            ring,
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Elem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> Option<&Elem> {
        self.terms.get(mono)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The value at the origin.
    pub fn constant_term(&self, ring: &GaloisRing) -> Elem {
        self.terms
            .get(&Monomial::one(self.nvars))
            .cloned()
            .unwrap_or_else(|| ring.zero())
    }

    pub fn add(&self, other: &SparsePoly, ring: &GaloisRing) -> SparsePoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.terms.clone();
        for (m, c) in &other.terms {
            match out.get_mut(m) {
                Some(v) => *v = ring.add(v, c),
                None => {
                    out.insert(m.clone(), c.clone());
                }
            }
        }
        out.retain(|_, c| !ring.is_zero(c));
        SparsePoly {
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn neg(&self, ring: &GaloisRing) -> SparsePoly {
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), ring.neg(c))).collect(),
        }
    }

    pub fn sub(&self, other: &SparsePoly, ring: &GaloisRing) -> SparsePoly {
        self.add(&other.neg(ring), ring)
    }

    pub fn scale(&self, c: &Elem, ring: &GaloisRing) -> SparsePoly {
        Self::from_terms(
            self.nvars,
            self.terms.iter().map(|(m, v)| (m.clone(), ring.mul(v, c))),
            ring,
        )
    }

    pub fn mul(&self, other: &SparsePoly, ring: &GaloisRing) -> SparsePoly {
        self.mul_capped(other, ring, usize::MAX)
            .expect("uncapped multiplication cannot fail")
    }

    fn mul_capped(&self, other: &SparsePoly, ring: &GaloisRing, cap: usize) -> Result<SparsePoly> {
        assert_eq!(self.nvars, other.nvars);
        let mut acc: HashMap<Monomial, Elem> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let prod = ring.mul(ca, cb);
                let mono = ma.mul(mb);
                match acc.get_mut(&mono) {
                    Some(v) => *v = ring.add(v, &prod),
                    None => {
                        acc.insert(mono, prod);
                        if acc.len() > cap {
                            return Err(Error::SizeLimit(format!(
                                "polynomial expansion exceeds {cap} terms"
                            )));
                        }
                    }
                }
            }
        }
        Ok(Self::from_terms(self.nvars, acc, ring))
    }

    /// Applies `f` to every coefficient and moves to another coefficient ring.
    pub fn map_coeffs<F>(&self, target: &GaloisRing, f: F) -> SparsePoly
    where
        F: Fn(&Elem) -> Elem,
    {
        Self::from_terms(
            self.nvars,
            self.terms.iter().map(|(m, c)| (m.clone(), f(c))),
            target,
        )
    }

    /// Evaluates each variable x_i at `point[i]`.
    pub fn eval(&self, point: &[Elem], ring: &GaloisRing) -> Elem {
        assert_eq!(point.len(), self.nvars);
        let mut acc = ring.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &u) in point.iter().zip(m.exps()) {
                if u > 0 {
                    t = ring.mul(&t, &ring.pow(x, u as u128));
                }
            }
            acc = ring.add(&acc, &t);
        }
        acc
    }

    /// Substitutes x_i -> x_i + shift[i].
    pub fn translate(&self, shift: &[Elem], ring: &GaloisRing) -> SparsePoly {
        assert_eq!(shift.len(), self.nvars);
        let n = self.nvars;
        let lin: Vec<SparsePoly> = (0..n)
            .map(|i| SparsePoly::var(i, n, ring).add(&SparsePoly::constant(n, shift[i].clone(), ring), ring))
            .collect();
        let mut out = SparsePoly::zero(n);
        for (m, c) in &self.terms {
            let mut t = SparsePoly::constant(n, c.clone(), ring);
            for (i, &u) in m.exps().iter().enumerate() {
                for _ in 0..u {
                    t = t.mul(&lin[i], ring);
                }
            }
            out = out.add(&t, ring);
        }
        out
    }
}

/// The operator psi_q: x^u -> x^(u/q) when q divides every exponent, else 0.
/// Coefficients pass through unchanged, so it works over any coefficient ring.
pub fn psi_q(h: &SparsePoly, q: u64) -> SparsePoly {
    SparsePoly {
        nvars: h.nvars,
        terms: h
            .terms
            .iter()
            .filter_map(|(m, c)| m.div_exact(q).map(|d| (d, c.clone())))
            .collect(),
    }
}

/// C(n, k) mod p by Lucas' theorem.
pub fn binomial_mod_p(mut n: u64, mut k: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while k > 0 || n > 0 {
        let (ni, ki) = (n % p, k % p);
        if ki > ni {
            return 0;
        }
        acc = acc * small_binomial(ni, ki, p) % p;
        n /= p;
        k /= p;
    }
    acc
}

fn small_binomial(n: u64, k: u64, p: u64) -> u64 {
    // n, k < p so every denominator factor is invertible mod p.
    let k = k.min(n - k);
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num = num * (n - i) as u128 % p as u128;
        den = den * (i + 1) as u128 % p as u128;
    }
    let mut inv = 1u128;
    let mut b = den;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            inv = inv * b % p as u128;
        }
        b = b * b % p as u128;
        e >>= 1;
    }
    (num * inv % p as u128) as u64
}

/// The (q-1)-th Hasse derivative x^u -> C(u, q-1) x^(u-q+1), univariate only.
pub fn hasse_q_minus_1(h: &SparsePoly, q: u64, ring: &GaloisRing) -> Result<SparsePoly> {
    if h.nvars != 1 {
        return Err(Error::MultivariateInput(h.nvars));
    }
    let k = q - 1;
    let terms = h.terms.iter().filter_map(|(m, c)| {
        let u = m.exps()[0] as u64;
        if u < k {
            return None;
        }
        let b = binomial_mod_p(u, k, ring.p());
        (b != 0).then(|| (Monomial::new(&[(u - k) as u32]), ring.mul_int(c, b)))
    });
    Ok(SparsePoly::from_terms(1, terms, ring))
}

/// f^k by repeated squaring, fully expanded. Fails with `SizeLimit` once an
/// intermediate product exceeds `max_terms` terms.
pub fn poly_pow(f: &SparsePoly, k: u64, ring: &GaloisRing, max_terms: usize) -> Result<SparsePoly> {
    let mut acc = SparsePoly::one(f.nvars, ring);
    if k == 0 {
        return Ok(acc);
    }
    let mut base = f.clone();
    let mut k = k;
    loop {
        if k & 1 == 1 {
            acc = acc.mul_capped(&base, ring, max_terms)?;
        }
        k >>= 1;
        if k == 0 {
            break;
        }
        base = base.mul_capped(&base, ring, max_terms)?;
    }
    Ok(acc)
}
