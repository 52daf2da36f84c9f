//! Truncated power series with coefficients in Z/N.

use num_integer::Integer;

use crate::error::{Error, Result};

/// c_0 + c_1 T + ... + c_B T^B modulo T^(B+1), coefficients mod `modulus`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    modulus: u64,
    coeffs: Vec<u64>,
}

fn mulmod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn inv_mod(a: u64, n: u64) -> Option<u64> {
    let g = (a as i128).extended_gcd(&(n as i128));
    (g.gcd == 1).then(|| g.x.rem_euclid(n as i128) as u64)
}

impl TruncatedSeries {
    /// Series from (possibly negative) integer coefficients, padded with zeros
    /// or truncated to order `order`.
    pub fn from_ints(modulus: u64, coeffs: &[i128], order: usize) -> Self {
        assert!(modulus >= 1);
        let mut c: Vec<u64> = coeffs
            .iter()
            .take(order + 1)
            .map(|&v| v.rem_euclid(modulus as i128) as u64)
            .collect();
        c.resize(order + 1, 0);
        TruncatedSeries { modulus, coeffs: c }
    }

    pub fn from_residues(modulus: u64, coeffs: &[u64], order: usize) -> Self {
        let mut c: Vec<u64> = coeffs.iter().take(order + 1).map(|&v| v % modulus).collect();
        c.resize(order + 1, 0);
        TruncatedSeries { modulus, coeffs: c }
    }

    pub fn one(modulus: u64, order: usize) -> Self {
        Self::from_residues(modulus, &[1], order)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// The truncation order B.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.modulus, other.modulus, "series moduli differ");
        let b = self.order().min(other.order());
        let n = self.modulus;
        let mut out = vec![0u64; b + 1];
        for (i, &x) in self.coeffs.iter().take(b + 1).enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in other.coeffs.iter().take(b + 1 - i).enumerate() {
                out[i + j] = (out[i + j] + mulmod(x, y, n)) % n;
            }
        }
        TruncatedSeries {
            modulus: n,
            coeffs: out,
        }
    }

    /// Multiplicative inverse; needs c_0 to be a unit.
    pub fn inverse(&self) -> Result<TruncatedSeries> {
        let n = self.modulus;
        let c0_inv = inv_mod(self.coeffs[0], n).ok_or_else(|| {
            Error::InvalidArgument("series constant term is not a unit".into())
        })?;
        let b = self.order();
        let mut out = vec![0u64; b + 1];
        out[0] = c0_inv % n;
        for k in 1..=b {
            let mut s = 0u64;
            for j in 1..=k {
                s = (s + mulmod(self.coeffs[j], out[k - j], n)) % n;
            }
            out[k] = mulmod((n - s) % n, c0_inv, n);
        }
        Ok(TruncatedSeries {
            modulus: n,
            coeffs: out,
        })
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, k: i64) -> Result<TruncatedSeries> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut acc = TruncatedSeries::one(self.modulus, self.order());
        let mut e = k.unsigned_abs();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        Ok(acc)
    }

    /// The series S(cT).
    pub fn scale_variable(&self, c: u64) -> TruncatedSeries {
        let n = self.modulus;
        let mut pw = 1 % n;
        let coeffs = self
            .coeffs
            .iter()
            .map(|&x| {
                let v = mulmod(x, pw, n);
                pw = mulmod(pw, c, n);
                v
            })
            .collect();
        TruncatedSeries { modulus: n, coeffs }
    }

    /// Reduction to a modulus dividing the current one.
    pub fn reduce(&self, modulus: u64) -> TruncatedSeries {
        assert_eq!(self.modulus % modulus, 0, "new modulus must divide the old one");
        Self::from_residues(modulus, &self.coeffs, self.order())
    }

    pub fn truncate(&self, order: usize) -> TruncatedSeries {
        assert!(order <= self.order());
        Self::from_residues(self.modulus, &self.coeffs, order)
    }
}
