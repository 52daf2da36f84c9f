//! Z(X, T) from point counts.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::count::CountVector;
use crate::error::{Error, Result};

/// c_0..c_b of Z = exp(sum N_k T^k / k), from m c_m = sum_{k<=m} N_k c_(m-k).
///
/// Every c_m must come out a nonnegative integer; anything else means the
/// counts are not the counts of a variety.
pub fn zeta_coeffs_exact(counts: &CountVector, b: usize) -> Result<Vec<BigInt>> {
    if counts.counts.len() < b {
        return Err(Error::InvalidArgument(format!(
            "{} counts given, {b} needed",
            counts.counts.len()
        )));
    }
    let n: Vec<BigRational> = counts
        .counts
        .iter()
        .map(|&v| BigRational::from_integer(BigInt::from(v)))
        .collect();
    let mut c: Vec<BigRational> = vec![BigRational::one()];
    for m in 1..=b {
        let mut acc = BigRational::zero();
        for k in 1..=m {
            acc += &n[k - 1] * &c[m - k];
        }
        let cm = acc / BigRational::from_integer(BigInt::from(m));
        if !cm.is_integer() || cm.is_negative() {
            return Err(Error::NonIntegralCoefficient(m));
        }
        c.push(cm);
    }
    Ok(c.into_iter().map(|r| r.to_integer()).collect())
}

/// Coefficients reduced into [0, modulus).
pub fn reduce_coeffs(c: &[BigInt], modulus: u64) -> Vec<u64> {
    let m = BigInt::from(modulus);
    c.iter()
        .map(|v| {
            let r = ((v % &m) + &m) % &m;
            u64::try_from(r).expect("reduced below modulus")
        })
        .collect()
}
