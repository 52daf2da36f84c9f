//! Zeta functions of hypersurfaces modulo p and modulo p^m from the
//! operators psi_q . f^(q-1) and psi_q . f^((q-1) p^(m-1)) acting on finite
//! monomial spaces.
//!
//! Modulo p the operator acts on R(d), spanned by the monomials of degree
//! <= d divisible by x_1 ... x_n, and
//!
//! ```text
//! Z(X, T)^((-1)^n) = det(I - (psi_q . f^(q-1)) T | R(d))   (mod p)
//! ```
//!
//! for the affine hypersurface X. Modulo p^m it acts on all monomials of
//! degree <= d p^(m-1) over the Galois ring, and computes the zeta function
//! of X intersected with the torus:
//!
//! ```text
//! (Z(X, T) / Z(G_m^n, T))^((-1)^n)
//!     = prod_i det(I - q^i M T)^((-1)^i C(n, i))   (mod p^m)
//! ```

use std::collections::HashMap;

use num_integer::binomial;

use crate::algebra::{poly_pow, FieldCtx, GaloisRing, Monomial, RingCtx, SparsePoly};
use crate::error::{Error, Result};
use crate::limits::{ExecMode, Limits};
use crate::linalg::{charpoly_reverse, Matrix};
use crate::par;
use crate::series::TruncatedSeries;

/// An ordered list of exponent vectors with an index for lookup.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    pub nvars: usize,
    pub degree_bound: u32,
    /// Every exponent is at least 1.
    pub divisible: bool,
    monos: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    fn build(nvars: usize, degree_bound: u32, divisible: bool) -> Self {
        let lo = u32::from(divisible);
        let mut monos = Vec::new();
        let mut cur = vec![lo; nvars];
        let base = lo * nvars as u32;
        if base <= degree_bound {
            // odometer over all exponent vectors with entries >= lo
            loop {
                if cur.iter().sum::<u32>() <= degree_bound {
                    monos.push(Monomial::new(&cur));
                }
                let mut i = 0;
                loop {
                    if i == nvars {
                        break;
                    }
                    let rest: u32 = cur.iter().sum::<u32>() - cur[i];
                    if rest + cur[i] < degree_bound {
                        cur[i] += 1;
                        break;
                    }
                    cur[i] = lo;
                    i += 1;
                }
                if i == nvars {
                    break;
                }
            }
        }
        monos.sort();
        let index = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        MonomialBasis {
            nvars,
            degree_bound,
            divisible,
            monos,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monos
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

fn binom_u128(n: u64, k: u64) -> u128 {
    binomial(n as u128, k as u128)
}

/// R(d): monomials of degree <= d divisible by x_1 ... x_n.
pub fn rd_basis(n: usize, d: u32, limits: &Limits) -> Result<MonomialBasis> {
    if n == 0 || (d as usize) < n {
        return Err(Error::EmptyBasis { n, d });
    }
    if n > limits.max_nvars {
        return Err(Error::SizeLimit(format!("{n} variables exceed the cap {}", limits.max_nvars)));
    }
    let size = binom_u128(d as u64, n as u64);
    if size > limits.max_basis as u128 {
        return Err(Error::SizeLimit(format!("basis of size {size} exceeds {}", limits.max_basis)));
    }
    Ok(MonomialBasis::build(n, d, true))
}

/// R_{m,d}: all monomials of degree <= d p^(m-1).
pub fn rmd_basis(n: usize, d: u32, p: u64, m: u32, limits: &Limits) -> Result<MonomialBasis> {
    if m == 0 {
        return Err(Error::InvalidArgument("precision m must be at least 1".into()));
    }
    if n > limits.max_nvars {
        return Err(Error::SizeLimit(format!("{n} variables exceed the cap {}", limits.max_nvars)));
    }
    let bound = (p as u128)
        .checked_pow(m - 1)
        .map(|v| v * d as u128)
        .filter(|&v| v <= u32::MAX as u128)
        .ok_or_else(|| Error::SizeLimit("degree bound d p^(m-1) overflows".into()))?;
    let size = binom_u128(bound as u64 + n as u64, n as u64);
    if size > limits.max_basis as u128 {
        return Err(Error::SizeLimit(format!("basis of size {size} exceeds {}", limits.max_basis)));
    }
    Ok(MonomialBasis::build(n, bound as u32, false))
}

/// Matrix of h -> psi_q(power * h) on `basis`; column j is the image of the
/// j-th basis monomial.
fn psi_matrix(
    power: &SparsePoly,
    basis: &MonomialBasis,
    q: u64,
    ring: &GaloisRing,
    mode: ExecMode,
) -> Result<Matrix> {
    let terms: Vec<_> = power.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    let cols = par::map_slice(mode, basis.monomials(), |u| {
        let mut col = vec![ring.zero(); basis.len()];
        for (w, c) in &terms {
            if let Some(v) = w.mul(u).div_exact(q) {
                let row = basis.position(&v).ok_or(Error::StabilityViolation)?;
                col[row] = ring.add(&col[row], c);
            }
        }
        Ok(col)
    });
    Ok(Matrix::from_columns(cols.into_iter().collect::<Result<_>>()?))
}

fn check_hypersurface(f: &SparsePoly, n: usize, d: u32) -> Result<()> {
    if f.nvars() != n {
        return Err(Error::InvalidArgument(format!(
            "polynomial has {} variables, expected {n}",
            f.nvars()
        )));
    }
    if f.total_degree().unwrap_or(0) > d {
        return Err(Error::InvalidArgument(format!(
            "total degree {} exceeds d = {d}",
            f.total_degree().unwrap_or(0)
        )));
    }
    Ok(())
}

/// Matrix of psi_q . f^(q-1) on R(d) over F_q.
pub fn hyper_matrix_mod_p(
    f: &SparsePoly,
    n: usize,
    d: u32,
    field: &FieldCtx,
    limits: &Limits,
    mode: ExecMode,
) -> Result<(MonomialBasis, Matrix)> {
    check_hypersurface(f, n, d)?;
    let basis = rd_basis(n, d, limits)?;
    let power = poly_pow(f, field.q() - 1, field, limits.max_terms)?;
    let m = psi_matrix(&power, &basis, field.q(), field, mode)?;
    Ok((basis, m))
}

/// det(I - MT) as residues, checked to lie in Z/p^m.
fn prime_subring_poly(m: &Matrix, ring: &GaloisRing) -> Result<Vec<u64>> {
    charpoly_reverse(m, ring)
        .iter()
        .map(|c| ring.to_int(c).ok_or(Error::CoefficientOutsidePrimeField))
        .collect()
}

/// The affine zeta function Z(X, T) mod p, truncated at T^order.
pub fn zeta_mod_p(
    f: &SparsePoly,
    n: usize,
    d: Option<u32>,
    order: usize,
    field: &FieldCtx,
    limits: &Limits,
) -> Result<ZetaResult> {
    let d = d.unwrap_or_else(|| f.total_degree().unwrap_or(0).max(n as u32));
    let (_, m) = hyper_matrix_mod_p(f, n, d, field, limits, ExecMode::default())?;
    let det = prime_subring_poly(&m, field)?;
    let p = field.p();
    let s = TruncatedSeries::from_residues(p, &det, order);
    let series = if n % 2 == 1 { s.inverse()? } else { s };
    Ok(ZetaResult {
        series,
        det_factors: vec![DetFactor {
            scale: 1,
            exponent: if n % 2 == 1 { -1 } else { 1 },
            coeffs: det,
        }],
    })
}

/// One factor det(I - scale * M T)^exponent of a zeta congruence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DetFactor {
    pub scale: u64,
    pub exponent: i64,
    pub coeffs: Vec<u64>,
}

/// A truncated zeta series together with the determinants it came from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZetaResult {
    pub series: TruncatedSeries,
    pub det_factors: Vec<DetFactor>,
}

/// Matrix of psi_q . f_lift^((q-1) p^(m-1)) on R_{m,d} over O_m.
pub fn hyper_matrix_mod_pm(
    f_lift: &SparsePoly,
    n: usize,
    d: u32,
    ring: &RingCtx,
    limits: &Limits,
    mode: ExecMode,
) -> Result<(MonomialBasis, Matrix)> {
    check_hypersurface(f_lift, n, d)?;
    let basis = rmd_basis(n, d, ring.p(), ring.m(), limits)?;
    let exp = (ring.q() - 1)
        .checked_mul(ring.p().pow(ring.m() - 1))
        .ok_or_else(|| Error::SizeLimit("exponent (q-1) p^(m-1) overflows".into()))?;
    let power = poly_pow(f_lift, exp, ring, limits.max_terms)?;
    let m = psi_matrix(&power, &basis, ring.q(), ring, mode)?;
    Ok((basis, m))
}

/// Z(G_m^n, T) = prod_{i=0}^n (1 - q^i T)^((-1)^(n-i+1) C(n, i)) mod `modulus`.
pub fn torus_zeta(n: usize, q: u64, order: usize, modulus: u64) -> TruncatedSeries {
    let mut acc = TruncatedSeries::one(modulus, order);
    for i in 0..=n {
        let qi = (0..i).fold(1u64 % modulus, |a, _| {
            ((a as u128 * q as u128) % modulus as u128) as u64
        });
        let factor = TruncatedSeries::from_ints(modulus, &[1, -(qi as i128)], order);
        let c = binomial(n as i64, i as i64);
        let sign = if (n - i + 1) % 2 == 0 { 1 } else { -1 };
        acc = acc.mul(&factor.pow(sign * c).expect("constant term is 1"));
    }
    acc
}

/// The zeta function of {f = 0} in the torus G_m^n, mod p^m, truncated at
/// T^order. `lift` overrides the coordinate-wise lift of f to O_m.
pub fn zeta_mod_pm(
    f: &SparsePoly,
    m: u32,
    order: usize,
    ring: &RingCtx,
    lift: Option<&SparsePoly>,
    d: Option<u32>,
    limits: &Limits,
) -> Result<ZetaResult> {
    if ring.m() != m {
        return Err(Error::InvalidArgument(format!(
            "ring has precision {} but m = {m}",
            ring.m()
        )));
    }
    let n = f.nvars();
    let d = d.unwrap_or_else(|| f.total_degree().unwrap_or(0).max(1));
    let trivial;
    let f_lift = match lift {
        Some(l) => {
            let reduced = l.map_coeffs(ring.field(), |c| ring.reduce(c));
            if reduced != *f {
                return Err(Error::InvalidArgument("lift does not reduce to f mod p".into()));
            }
            l
        }
        None => {
            trivial = f.map_coeffs(ring, |c| ring.lift(c));
            &trivial
        }
    };
    let (_, mat) = hyper_matrix_mod_pm(f_lift, n, d, ring, limits, ExecMode::default())?;
    let pm = ring.pm();
    let base = prime_subring_poly(&mat, ring)?;
    let base_series = TruncatedSeries::from_residues(pm, &base, order);
    let mut prod = TruncatedSeries::one(pm, order);
    let mut det_factors = Vec::with_capacity(n + 1);
    let mut qi = 1 % pm;
    for i in 0..=n {
        // det(I - q^i M T) is det(I - MT) evaluated at q^i T.
        let exponent = if i % 2 == 0 { 1 } else { -1 } * binomial(n as i64, i as i64);
        let s = base_series.scale_variable(qi);
        prod = prod.mul(&s.pow(exponent)?);
        let mut coeffs = base.clone();
        let mut pw = 1 % pm;
        for c in coeffs.iter_mut() {
            *c = ((*c as u128 * pw as u128) % pm as u128) as u64;
            pw = ((pw as u128 * qi as u128) % pm as u128) as u64;
        }
        det_factors.push(DetFactor {
            scale: qi,
            exponent,
            coeffs,
        });
        qi = ((qi as u128 * ring.q() as u128) % pm as u128) as u64;
    }
    let ratio = if n % 2 == 1 { prod.inverse()? } else { prod };
    let series = ratio.mul(&torus_zeta(n, ring.q(), order, pm));
    Ok(ZetaResult { series, det_factors })
}
