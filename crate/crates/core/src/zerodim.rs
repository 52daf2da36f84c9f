//! Zero-dimensional hypersurfaces: the operators F, D and G on
//! R = F_q[x]/(f), the degree profile of f, and the exact zeta function.
//!
//! All matrices are written in the monomial basis 1, x, ..., x^(d-1) of R;
//! column j holds the image of x^j.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::univariate::{self as uni, Dense};
use crate::algebra::{binomial_mod_p, Elem, FieldCtx, SparsePoly};
use crate::error::{Error, Result};
use crate::limits::{ExecMode, Limits};
use crate::linalg::{self, charpoly_reverse, kernel_basis, solve_integer, Matrix};
use crate::par;

/// Which operator on R to build.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum OperatorKind {
    /// F: h -> h^q.
    Frobenius,
    /// D = psi_q . H^(q-1) . f^(q-1).
    Niederreiter,
    /// G = psi_q . f^(q-1).
    PsiMul,
}

impl OperatorKind {
    pub const ALL: [OperatorKind; 3] = [
        OperatorKind::Frobenius,
        OperatorKind::Niederreiter,
        OperatorKind::PsiMul,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OperatorKind::Frobenius => "frobenius",
            OperatorKind::Niederreiter => "niederreiter",
            OperatorKind::PsiMul => "psi",
        }
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OperatorKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "frobenius" | "berlekamp" => Ok(OperatorKind::Frobenius),
            "niederreiter" => Ok(OperatorKind::Niederreiter),
            "psi" | "g" => Ok(OperatorKind::PsiMul),
            other => Err(Error::InvalidArgument(format!("unknown method {other:?}"))),
        }
    }
}

/// Number s_i of distinct irreducible factors of each degree i = 1..d.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegreeProfile {
    pub s: Vec<u64>,
}

impl DegreeProfile {
    /// Degree of the polynomial the profile was computed for.
    pub fn d(&self) -> usize {
        self.s.len()
    }

    /// Number of distinct irreducible factors.
    pub fn distinct_factors(&self) -> u64 {
        self.s.iter().sum()
    }

    /// sum i * s_i, the degree of the squarefree part.
    pub fn squarefree_degree(&self) -> u64 {
        self.s.iter().enumerate().map(|(i, &s)| (i as u64 + 1) * s).sum()
    }
}

/// Z(T) = prod (1 - T^i)^(exponent), every exponent <= 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactoredZeta {
    /// (cycle length i, exponent -s_i), only nonzero exponents, i ascending.
    pub factors: Vec<(u32, i64)>,
}

impl FactoredZeta {
    pub fn from_profile(profile: &DegreeProfile) -> Self {
        FactoredZeta {
            factors: profile
                .s
                .iter()
                .enumerate()
                .filter(|(_, &s)| s > 0)
                .map(|(i, &s)| (i as u32 + 1, -(s as i64)))
                .collect(),
        }
    }

    /// Exact coefficients c_0..c_order of the power series.
    pub fn series(&self, order: usize) -> Vec<BigInt> {
        let mut c = vec![BigInt::zero(); order + 1];
        c[0] = BigInt::one();
        for &(i, exp) in &self.factors {
            let i = i as usize;
            if exp <= 0 {
                // multiply by 1/(1 - T^i), -exp times
                for _ in 0..(-exp) {
                    for k in i..=order {
                        let prev = c[k - i].clone();
                        c[k] += prev;
                    }
                }
            } else {
                for _ in 0..exp {
                    for k in (i..=order).rev() {
                        let prev = c[k - i].clone();
                        c[k] -= prev;
                    }
                }
            }
        }
        c
    }

    /// The numerator prod (1 - T^i)^(s_i) = Z^(-1) as integer coefficients.
    pub fn inverse_polynomial(&self) -> Vec<BigInt> {
        let deg: usize = self
            .factors
            .iter()
            .map(|&(i, e)| i as usize * e.unsigned_abs() as usize)
            .sum();
        let inv = FactoredZeta {
            factors: self.factors.iter().map(|&(i, e)| (i, -e)).collect(),
        };
        inv.series(deg)
    }
}

/// Checks the input is univariate, monic, of degree >= 1 and returns its
/// dense coefficients.
pub(crate) fn monic_dense(f: &SparsePoly, field: &FieldCtx) -> Result<Dense> {
    let df = uni::to_dense(f, field)?;
    match df.len() {
        0 | 1 => Err(Error::ConstantInput),
        _ if !field.is_one(df.last().unwrap()) => {
            Err(Error::InvalidArgument("polynomial must be monic".into()))
        }
        _ => Ok(df),
    }
}

// Dense univariate counterparts of poly_pow, hasse_q_minus_1 and psi_q; the
// sparse versions are the reference and the tests compare the two.

fn dense_pow(field: &FieldCtx, f: &[Elem], mut k: u64) -> Dense {
    let mut acc = vec![field.one()];
    let mut base = f.to_vec();
    while k > 0 {
        if k & 1 == 1 {
            acc = uni::mul(field, &acc, &base);
        }
        k >>= 1;
        if k > 0 {
            base = uni::mul(field, &base, &base);
        }
    }
    acc
}

fn dense_hasse(field: &FieldCtx, h: &[Elem], q: u64) -> Dense {
    let k = (q - 1) as usize;
    let out = h
        .iter()
        .enumerate()
        .skip(k)
        .map(|(u, c)| field.mul_int(c, binomial_mod_p(u as u64, k as u64, field.p())))
        .collect();
    uni::trim(field, out)
}

fn dense_psi(field: &FieldCtx, h: &[Elem], q: u64) -> Dense {
    uni::trim(field, h.iter().step_by(q as usize).cloned().collect())
}

fn padded(v: Dense, d: usize, field: &FieldCtx) -> Vec<Elem> {
    let mut v = v;
    v.resize(d, field.zero());
    v
}

/// Matrix of `kind` on R = F_q[x]/(f) in the basis 1, x, ..., x^(d-1).
pub fn op_matrix(
    f: &SparsePoly,
    kind: OperatorKind,
    field: &FieldCtx,
    limits: &Limits,
) -> Result<Matrix> {
    let df = monic_dense(f, field)?;
    let d = df.len() - 1;
    let q = field.q();
    match kind {
        OperatorKind::Frobenius => {
            let xq = uni::powmod(field, &[field.zero(), field.one()], q as u128, &df);
            let mut cols = Vec::with_capacity(d);
            let mut cur: Dense = vec![field.one()];
            for _ in 0..d {
                cols.push(padded(cur.clone(), d, field));
                cur = uni::mulmod(field, &cur, &xq, &df);
            }
            Ok(Matrix::from_columns(cols))
        }
        OperatorKind::Niederreiter | OperatorKind::PsiMul => {
            if q > limits.max_operator_q {
                return Err(Error::SizeLimit(format!(
                    "q = {q} exceeds the operator cap {}",
                    limits.max_operator_q
                )));
            }
            if kind == OperatorKind::PsiMul && field.is_zero(&df[0]) {
                return Err(Error::ZeroConstantTerm);
            }
            if (d as u128) * (q as u128 - 1) + 1 > limits.max_terms as u128 {
                return Err(Error::SizeLimit(format!(
                    "f^(q-1) would exceed {} terms",
                    limits.max_terms
                )));
            }
            let fq1 = dense_pow(field, &df, q - 1);
            let mut cols = Vec::with_capacity(d);
            for j in 0..d {
                let mut h = vec![field.zero(); j];
                h.extend(fq1.iter().cloned());
                if kind == OperatorKind::Niederreiter {
                    h = dense_hasse(field, &h, q);
                }
                let image = dense_psi(field, &h, q);
                cols.push(padded(uni::rem(field, &image, &df), d, field));
            }
            Ok(Matrix::from_columns(cols))
        }
    }
}

/// Matrix of multiplication by `g` on R = F_q[x]/(f).
pub fn multiplication_matrix(f: &SparsePoly, g: &SparsePoly, field: &FieldCtx) -> Result<Matrix> {
    let df = monic_dense(f, field)?;
    let d = df.len() - 1;
    let dg = uni::to_dense(g, field)?;
    let cols = (0..d)
        .map(|j| {
            let mut xj = vec![field.zero(); j];
            xj.push(field.one());
            padded(uni::mulmod(field, &xj, &dg, &df), d, field)
        })
        .collect();
    Ok(Matrix::from_columns(cols))
}

/// dim ker(M - I) for the operator `kind`; equals the number of distinct
/// irreducible factors of f.
pub fn distinct_factor_count(
    f: &SparsePoly,
    kind: OperatorKind,
    field: &FieldCtx,
    limits: &Limits,
) -> Result<usize> {
    let m = op_matrix(f, kind, field, limits)?;
    Ok(kernel_basis(&m.sub_identity(field), field)?.len())
}

/// The d x d matrix with entries gcd(i, j), 1-indexed.
pub fn gcd_matrix(d: usize) -> Vec<Vec<i64>> {
    (1..=d as i64)
        .map(|i| (1..=d as i64).map(|j| i.gcd(&j)).collect())
        .collect()
}

/// k(j) = dim ker(M_F^j - I) for j = 1..d.
pub fn fixed_space_dims(f: &SparsePoly, field: &FieldCtx, mode: ExecMode) -> Result<Vec<usize>> {
    let m = op_matrix(f, OperatorKind::Frobenius, field, &Limits::default())?;
    let d = m.n();
    let mut powers = Vec::with_capacity(d);
    let mut cur = m.clone();
    for _ in 0..d {
        powers.push(cur.clone());
        cur = cur.mul_with(&m, field, ExecMode::Sequential);
    }
    par::map_slice(mode, &powers, |mj| {
        Ok(d - linalg::rank(&mj.sub_identity(field), field)?)
    })
    .into_iter()
    .collect()
}

/// Degree profile s from k(j) = sum_i gcd(i, j) s_i.
pub fn degree_profile(f: &SparsePoly, field: &FieldCtx) -> Result<DegreeProfile> {
    degree_profile_with(f, field, ExecMode::default())
}

pub fn degree_profile_with(f: &SparsePoly, field: &FieldCtx, mode: ExecMode) -> Result<DegreeProfile> {
    let k = fixed_space_dims(f, field, mode)?;
    let a = gcd_matrix(k.len());
    let b: Vec<i64> = k.iter().map(|&v| v as i64).collect();
    Ok(DegreeProfile {
        s: solve_integer(&a, &b)?,
    })
}

/// The exact zeta function of the zero-dimensional variety f = 0.
pub fn zerodim_zeta(f: &SparsePoly, field: &FieldCtx) -> Result<FactoredZeta> {
    Ok(FactoredZeta::from_profile(&degree_profile(f, field)?))
}

/// det(I - MT) for the operator `kind`, checked to lie in F_p[T] and
/// returned as residues mod p without trailing zeros.
pub fn congruence_charpoly(
    f: &SparsePoly,
    kind: OperatorKind,
    field: &FieldCtx,
    limits: &Limits,
) -> Result<Vec<u64>> {
    let m = op_matrix(f, kind, field, limits)?;
    let mut out = charpoly_reverse(&m, field)
        .iter()
        .map(|c| field.to_int(c).ok_or(Error::CoefficientOutsidePrimeField))
        .collect::<Result<Vec<u64>>>()?;
    while out.len() > 1 && out.last() == Some(&0) {
        out.pop();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_field;

    fn uni_poly(coeffs: &[i64], f: &FieldCtx) -> SparsePoly {
        let c: Vec<Elem> = coeffs.iter().map(|&v| f.from_int(v)).collect();
        SparsePoly::from_dense(&c, f)
    }

    #[test]
    fn op_matrix_examples() {
        let f2 = make_field(2, 1, None).unwrap();
        let lim = Limits::default();
        let m = op_matrix(&uni_poly(&[1, 1, 1], &f2), OperatorKind::Frobenius, &f2, &lim).unwrap();
        assert_eq!(m, Matrix::from_ints(&[vec![1, 1], vec![0, 1]], &f2));
        let g = op_matrix(&uni_poly(&[1, 1], &f2), OperatorKind::PsiMul, &f2, &lim).unwrap();
        assert_eq!(g, Matrix::from_ints(&[vec![1]], &f2));
        assert_eq!(
            op_matrix(&uni_poly(&[0, 1], &f2), OperatorKind::PsiMul, &f2, &lim),
            Err(Error::ZeroConstantTerm)
        );
        assert_eq!(
            op_matrix(&uni_poly(&[1], &f2), OperatorKind::Frobenius, &f2, &lim),
            Err(Error::ConstantInput)
        );
        let big = make_field(2, 7, None).unwrap();
        assert!(matches!(
            op_matrix(&uni_poly(&[1, 1], &big), OperatorKind::PsiMul, &big, &lim),
            Err(Error::SizeLimit(_))
        ));
    }

    #[test]
    fn factor_count_examples() {
        let lim = Limits::default();
        let f2 = make_field(2, 1, None).unwrap();
        let f3 = make_field(3, 1, None).unwrap();
        for kind in OperatorKind::ALL {
            assert_eq!(distinct_factor_count(&uni_poly(&[1, 1, 1], &f2), kind, &f2, &lim).unwrap(), 1);
            assert_eq!(distinct_factor_count(&uni_poly(&[-1, 0, 1], &f3), kind, &f3, &lim).unwrap(), 2);
            assert_eq!(distinct_factor_count(&uni_poly(&[1, 0, 1], &f2), kind, &f2, &lim).unwrap(), 1);
        }
    }

    #[test]
    fn profile_examples() {
        let f2 = make_field(2, 1, None).unwrap();
        let f3 = make_field(3, 1, None).unwrap();
        assert_eq!(degree_profile(&uni_poly(&[1, 1, 1], &f2), &f2).unwrap().s, vec![0, 1]);
        assert_eq!(degree_profile(&uni_poly(&[-1, 0, 1], &f3), &f3).unwrap().s, vec![2, 0]);
        // x(x+1)(x^2+x+1) = x^4 + x
        assert_eq!(
            degree_profile(&uni_poly(&[0, 1, 0, 0, 1], &f2), &f2).unwrap().s,
            vec![2, 1, 0, 0]
        );
        assert_eq!(
            fixed_space_dims(&uni_poly(&[1, 1, 1], &f2), &f2, ExecMode::Sequential).unwrap(),
            vec![1, 2]
        );
    }

    #[test]
    fn zeta_examples() {
        let f2 = make_field(2, 1, None).unwrap();
        let z = zerodim_zeta(&uni_poly(&[1, 1, 1], &f2), &f2).unwrap();
        assert_eq!(z.factors, vec![(2, -1)]);
        let series: Vec<i64> = z.series(4).iter().map(|c| i64::try_from(c).unwrap()).collect();
        assert_eq!(series, vec![1, 0, 1, 0, 1]);
        let z = zerodim_zeta(&uni_poly(&[-1, 1], &f2), &f2).unwrap();
        assert_eq!(z.factors, vec![(1, -1)]);
        let z = zerodim_zeta(&uni_poly(&[1, 0, 1], &f2), &f2).unwrap();
        assert_eq!(z.factors, vec![(1, -1)]);
        let inv: Vec<i64> = FactoredZeta { factors: vec![(1, -2), (2, -1)] }
            .inverse_polynomial()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect();
        // (1-T)^2 (1-T^2) = 1 - 2T + 2T^3 - T^4
        assert_eq!(inv, vec![1, -2, 0, 2, -1]);
    }

    #[test]
    fn charpoly_examples() {
        let lim = Limits::default();
        let f2 = make_field(2, 1, None).unwrap();
        assert_eq!(
            congruence_charpoly(&uni_poly(&[1, 1, 1], &f2), OperatorKind::Frobenius, &f2, &lim).unwrap(),
            vec![1, 0, 1]
        );
        assert_eq!(
            congruence_charpoly(&uni_poly(&[1, 1, 0, 1], &f2), OperatorKind::Frobenius, &f2, &lim).unwrap(),
            vec![1, 0, 0, 1]
        );
        assert_eq!(
            congruence_charpoly(&uni_poly(&[1, 1], &f2), OperatorKind::PsiMul, &f2, &lim).unwrap(),
            vec![1, 1]
        );
    }

    #[test]
    fn dense_operators_match_sparse() {
        use crate::algebra::{hasse_q_minus_1, poly_pow, psi_q};
        for (p, e) in [(2u64, 1usize), (3, 1), (2, 2), (3, 2)] {
            let f = make_field(p, e, None).unwrap();
            let q = f.q();
            let coeffs: Vec<Elem> = (0..6u64).map(|i| f.from_index((i * 7 + 3) % q)).collect();
            let sp = SparsePoly::from_dense(&coeffs, &f);
            let dn = uni::trim(&f, coeffs.clone());
            let pw = poly_pow(&sp, q - 1, &f, 1 << 20).unwrap();
            assert_eq!(uni::to_dense(&pw, &f).unwrap(), dense_pow(&f, &dn, q - 1));
            assert_eq!(
                uni::to_dense(&hasse_q_minus_1(&pw, q, &f).unwrap(), &f).unwrap(),
                dense_hasse(&f, &dense_pow(&f, &dn, q - 1), q)
            );
            assert_eq!(
                uni::to_dense(&psi_q(&pw, q), &f).unwrap(),
                dense_psi(&f, &dense_pow(&f, &dn, q - 1), q)
            );
        }
    }

    #[test]
    fn gcd_matrix_examples() {
        assert_eq!(gcd_matrix(1), vec![vec![1]]);
        assert_eq!(gcd_matrix(2), vec![vec![1, 1], vec![1, 2]]);
        assert_eq!(gcd_matrix(3), vec![vec![1, 1, 1], vec![1, 2, 1], vec![1, 1, 3]]);
    }
}
