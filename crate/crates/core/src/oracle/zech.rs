//! Table-driven arithmetic in F_Q for moderate Q.
//!
//! Nonzero elements are stored as discrete logarithms to a primitive element
//! g; addition uses Zech logarithms Z(n) = log(1 + g^n). This is a second,
//! independent implementation of finite-field arithmetic used only by the
//! oracle.

use crate::algebra::FieldCtx;
use crate::error::{Error, Result};

/// A field element as a discrete log, or [`ZERO`].
pub type Log = u32;

pub const ZERO: Log = u32::MAX;

#[derive(Clone, Debug)]
pub struct ZechField {
    p: u64,
    degree: usize,
    size: u64,
    /// log -> code, where code = sum digit_i p^i in the polynomial basis.
    exp: Vec<u32>,
    /// code -> log.
    log: Vec<Log>,
    zech: Vec<Log>,
}

fn mul_by(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let e = modulus.len() - 1;
    let mut prod = vec![0u64; 2 * e - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for k in (e..2 * e - 1).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        prod[k] = 0;
        for j in 0..e {
            prod[k - e + j] = (prod[k - e + j] + (p - c) * modulus[j]) % p;
        }
    }
    prod.truncate(e);
    prod
}

fn times_t(a: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let e = a.len();
    let top = a[e - 1];
    let mut out = Vec::with_capacity(e);
    out.push(0);
    out.extend_from_slice(&a[..e - 1]);
    if top != 0 {
        for j in 0..e {
            out[j] = (out[j] + (p - top) * modulus[j]) % p;
        }
    }
    out
}

fn code_of(digits: &[u64], p: u64) -> u64 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn digits_of(mut code: u64, p: u64, e: usize) -> Vec<u64> {
    (0..e)
        .map(|_| {
            let d = code % p;
            code /= p;
            d
        })
        .collect()
}

impl ZechField {
    /// Builds tables for the field presented by `field` (its modulus fixes the
    /// polynomial-basis codes).
    pub fn new(field: &FieldCtx, max_size: u64) -> Result<Self> {
        let p = field.p();
        let e = field.e();
        let size = field.q();
        if size > max_size || size > u32::MAX as u64 {
            return Err(Error::TooLarge(format!(
                "field of size {size} exceeds the table cap {max_size}"
            )));
        }
        let modulus = field.modulus();
        let order = size - 1;
        let mut exp = vec![0u32; order as usize];
        let mut log = vec![ZERO; size as usize];
        // Try g = t first: multiplying by t is a shift plus one reduction.
        let candidates = (e > 1).then_some(p).into_iter().chain(1..size);
        'candidates: for cand in candidates {
            let g = digits_of(cand, p, e);
            let mut cur = digits_of(1, p, e);
            for i in 0..order {
                let c = code_of(&cur, p);
                if i > 0 && c == 1 {
                    continue 'candidates;
                }
                exp[i as usize] = c as u32;
                cur = if cand == p && e > 1 {
                    times_t(&cur, modulus, p)
                } else {
                    mul_by(&cur, &g, modulus, p)
                };
            }
            break;
        }
        for (i, &c) in exp.iter().enumerate() {
            log[c as usize] = i as u32;
        }
        let zech = exp
            .iter()
            .map(|&c| {
                let d0 = c as u64 % p;
                let plus_one = c as u64 - d0 + (d0 + 1) % p;
                log[plus_one as usize]
            })
            .collect();
        Ok(ZechField {
            p,
            degree: e,
            size,
            exp,
            log,
            zech,
        })
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn one(&self) -> Log {
        0
    }

    #[inline]
    pub fn mul(&self, a: Log, b: Log) -> Log {
        if a == ZERO || b == ZERO {
            return ZERO;
        }
        let s = a as u64 + b as u64;
        let order = self.size - 1;
        (if s >= order { s - order } else { s }) as Log
    }

    #[inline]
    pub fn add(&self, a: Log, b: Log) -> Log {
        if a == ZERO {
            return b;
        }
        if b == ZERO {
            return a;
        }
        let order = self.size - 1;
        let diff = if b >= a { b - a } else { (b as u64 + order - a as u64) as u32 };
        let z = self.zech[diff as usize];
        if z == ZERO {
            return ZERO;
        }
        self.mul(a, z)
    }

    #[inline]
    pub fn neg(&self, a: Log) -> Log {
        if a == ZERO || self.p == 2 {
            return a;
        }
        // -1 = g^((Q-1)/2)
        self.mul(a, ((self.size - 1) / 2) as Log)
    }

    #[inline]
    pub fn sub(&self, a: Log, b: Log) -> Log {
        self.add(a, self.neg(b))
    }

    /// a^k for k >= 0.
    pub fn pow(&self, a: Log, k: u64) -> Log {
        if k == 0 {
            return 0;
        }
        if a == ZERO {
            return ZERO;
        }
        ((a as u128 * k as u128) % (self.size - 1) as u128) as Log
    }

    pub fn inv(&self, a: Log) -> Log {
        assert_ne!(a, ZERO, "zero has no inverse");
        if a == 0 {
            0
        } else {
            (self.size - 1 - a as u64) as Log
        }
    }

    pub fn from_code(&self, code: u64) -> Log {
        self.log[code as usize]
    }

    pub fn to_code(&self, a: Log) -> u64 {
        if a == ZERO {
            0
        } else {
            self.exp[a as usize] as u64
        }
    }

    /// Element of the prime field.
    pub fn from_int(&self, c: u64) -> Log {
        self.from_code(c % self.p)
    }

    /// All nonzero elements are g^0 .. g^(Q-2).
    pub fn nonzero(&self) -> impl Iterator<Item = Log> {
        0..(self.size - 1) as Log
    }

    /// A root of `poly` (coefficients in F_p, constant first) inside the
    /// subfield of size `sub_size`.
    pub fn root_in_subfield(&self, poly: &[u64], sub_size: u64) -> Option<Log> {
        let order = self.size - 1;
        if order % (sub_size - 1) != 0 {
            return None;
        }
        let step = order / (sub_size - 1);
        (0..sub_size - 1)
            .map(|j| (j * step) as Log)
            .find(|&b| {
                let v = poly
                    .iter()
                    .rev()
                    .fold(ZERO, |acc, &c| self.add(self.mul(acc, b), self.from_int(c)));
                v == ZERO
            })
    }
}
