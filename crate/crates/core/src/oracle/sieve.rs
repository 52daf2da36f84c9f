//! Monic irreducibles over F_q by sieving, and factorization by trial
//! division against them.

use super::zech::{Log, ZechField, ZERO};
use crate::algebra::univariate as uni;
use crate::algebra::{FieldCtx, SparsePoly};
use crate::error::{Error, Result};
use crate::factor::Factorization;
use crate::limits::Limits;

/// Coefficients as logs in the F_q table, constant first.
type Poly = Vec<Log>;

/// All monic irreducibles over F_q of degree at most `max_degree`.
pub struct IrreducibleSieve {
    field: FieldCtx,
    table: ZechField,
    /// by_degree[i] lists the irreducibles of degree i, in code order.
    by_degree: Vec<Vec<Poly>>,
}

fn mul(t: &ZechField, a: &[Log], b: &[Log]) -> Poly {
    let mut out = vec![ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == ZERO {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = t.add(out[i + j], t.mul(x, y));
        }
    }
    out
}

/// Code of a monic polynomial of degree d: its lower d coefficients read as
/// base-q digits.
fn code(t: &ZechField, a: &[Log]) -> usize {
    let q = t.size();
    a[..a.len() - 1]
        .iter()
        .rev()
        .fold(0u64, |acc, &c| acc * q + t.to_code(c)) as usize
}

fn from_code(t: &ZechField, mut c: u64, d: usize) -> Poly {
    let q = t.size();
    let mut out = Vec::with_capacity(d + 1);
    for _ in 0..d {
        out.push(t.from_code(c % q));
        c /= q;
    }
    out.push(t.one());
    out
}

/// Whether the monic `b` divides `a`, using `scratch` for the remainder.
fn divides(t: &ZechField, a: &[Log], b: &[Log], scratch: &mut Vec<Log>) -> bool {
    if a.len() < b.len() {
        return false;
    }
    scratch.clear();
    scratch.extend_from_slice(a);
    let db = b.len() - 1;
    for k in (0..a.len() - db).rev() {
        let c = scratch[k + db];
        if c == ZERO {
            continue;
        }
        for (j, &bj) in b[..db].iter().enumerate() {
            scratch[k + j] = t.sub(scratch[k + j], t.mul(c, bj));
        }
    }
    scratch[..db].iter().all(|&c| c == ZERO)
}

/// Divides by a monic divisor; returns the quotient if the remainder is zero.
fn div_monic(t: &ZechField, a: &[Log], b: &[Log]) -> Option<Poly> {
    if a.len() < b.len() {
        return None;
    }
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut quo = vec![ZERO; a.len() - db];
    for k in (0..quo.len()).rev() {
        let c = r[k + db];
        if c == ZERO {
            continue;
        }
        quo[k] = c;
        for (j, &bj) in b.iter().enumerate() {
            r[k + j] = t.sub(r[k + j], t.mul(c, bj));
        }
    }
    r[..db].iter().all(|&c| c == ZERO).then_some(quo)
}

impl IrreducibleSieve {
    pub fn new(field: &FieldCtx, max_degree: usize, limits: &Limits) -> Result<Self> {
        let q = field.q();
        let size = (q as u128).checked_pow(max_degree as u32).unwrap_or(u128::MAX);
        if size > limits.max_sieve {
            return Err(Error::TooLarge(format!(
                "sieve of q^D = {size} monics exceeds the cap {}",
                limits.max_sieve
            )));
        }
        let table = ZechField::new(field, limits.max_table_field)?;
        let mut by_degree: Vec<Vec<Poly>> = vec![Vec::new()];
        for d in 1..=max_degree {
            let count = (q as usize).pow(d as u32);
            let mut composite = vec![false; count];
            // Every reducible monic of degree d is an irreducible of degree
            // i <= d/2 times some monic of degree d - i.
            for i in 1..=d / 2 {
                let others = q.pow((d - i) as u32);
                for g in &by_degree[i] {
                    for c in 0..others {
                        let h = from_code(&table, c, d - i);
                        composite[code(&table, &mul(&table, g, &h))] = true;
                    }
                }
            }
            let irr = (0..count)
                .filter(|&c| !composite[c])
                .map(|c| from_code(&table, c as u64, d))
                .collect();
            by_degree.push(irr);
        }
        Ok(IrreducibleSieve {
            field: field.clone(),
            table,
            by_degree,
        })
    }

    pub fn max_degree(&self) -> usize {
        self.by_degree.len() - 1
    }

    /// Number of irreducibles of degree exactly d.
    pub fn count_of_degree(&self, d: usize) -> usize {
        self.by_degree[d].len()
    }

    fn to_sparse(&self, a: &[Log]) -> SparsePoly {
        let c: Vec<_> = a
            .iter()
            .map(|&l| self.field.from_index(self.table.to_code(l)))
            .collect();
        uni::to_sparse(&c, &self.field)
    }

    fn from_sparse(&self, f: &SparsePoly) -> Result<Poly> {
        let d = uni::to_dense(f, &self.field)?;
        Ok(d
            .iter()
            .map(|c| self.table.from_code(self.field.index_of(c)))
            .collect())
    }

    /// Irreducibles of degree <= d, by degree and then code.
    pub fn irreducibles(&self, d: usize) -> Vec<SparsePoly> {
        self.by_degree[..=d.min(self.max_degree())]
            .iter()
            .flatten()
            .map(|g| self.to_sparse(g))
            .collect()
    }

    pub fn contains(&self, f: &SparsePoly) -> Result<bool> {
        let a = self.from_sparse(f)?;
        let d = a.len().saturating_sub(1);
        Ok(d >= 1 && d <= self.max_degree() && self.by_degree[d].contains(&a))
    }

    /// Factorization of a monic f by repeated division, smallest
    /// irreducibles first. Whatever remains once no sieve member of degree
    /// <= deg/2 divides it is irreducible, so the sieve must reach
    /// floor(deg f / 2).
    pub fn trial_factorize(&self, f: &SparsePoly) -> Result<Factorization> {
        let mut rest = self.from_sparse(f)?;
        if rest.len() < 2 {
            return Err(Error::ConstantInput);
        }
        if *rest.last().unwrap() != self.table.one() {
            return Err(Error::InvalidArgument("polynomial must be monic".into()));
        }
        if (rest.len() - 1) / 2 > self.max_degree() {
            return Err(Error::TooLarge(format!(
                "degree {} needs a sieve up to {}, have {}",
                rest.len() - 1,
                (rest.len() - 1) / 2,
                self.max_degree()
            )));
        }
        let mut factors = Vec::new();
        let mut scratch = Vec::with_capacity(rest.len());
        'outer: for (i, list) in self.by_degree.iter().enumerate().skip(1) {
            for g in list {
                if 2 * i > rest.len() - 1 {
                    break 'outer;
                }
                if !divides(&self.table, &rest, g, &mut scratch) {
                    continue;
                }
                let mut a = 0;
                while let Some(quo) = div_monic(&self.table, &rest, g) {
                    rest = quo;
                    a += 1;
                }
                if a > 0 {
                    factors.push((self.to_sparse(g), a));
                }
            }
        }
        if rest.len() > 1 {
            let sp = self.to_sparse(&rest);
            match factors.iter_mut().find(|(g, _)| *g == sp) {
                Some((_, a)) => *a += 1,
                None => factors.push((sp, 1)),
            }
        }
        let mut out = Factorization { factors };
        out.sort(&self.field);
        Ok(out)
    }
}

/// All monic irreducibles of degree <= d over F_q.
pub fn irreducibles_up_to(field: &FieldCtx, d: usize, limits: &Limits) -> Result<Vec<SparsePoly>> {
    Ok(IrreducibleSieve::new(field, d, limits)?.irreducibles(d))
}

/// One-shot trial division; builds a sieve up to deg f / 2.
pub fn trial_factorize(f: &SparsePoly, field: &FieldCtx, limits: &Limits) -> Result<Factorization> {
    let d = f
        .total_degree()
        .ok_or(Error::ConstantInput)? as usize;
    IrreducibleSieve::new(field, d / 2, limits)?.trial_factorize(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_field, Elem};

    fn p(coeffs: &[i64], f: &FieldCtx) -> SparsePoly {
        let c: Vec<Elem> = coeffs.iter().map(|&v| f.from_int(v)).collect();
        SparsePoly::from_dense(&c, f)
    }

    #[test]
    fn sieve_examples() {
        let lim = Limits::default();
        let f2 = make_field(2, 1, None).unwrap();
        assert_eq!(
            irreducibles_up_to(&f2, 2, &lim).unwrap(),
            vec![p(&[0, 1], &f2), p(&[1, 1], &f2), p(&[1, 1, 1], &f2)]
        );
        let three = irreducibles_up_to(&f2, 3, &lim).unwrap();
        assert_eq!(&three[3..], &[p(&[1, 1, 0, 1], &f2), p(&[1, 0, 1, 1], &f2)]);
        let f3 = make_field(3, 1, None).unwrap();
        assert_eq!(
            irreducibles_up_to(&f3, 1, &lim).unwrap(),
            vec![p(&[0, 1], &f3), p(&[1, 1], &f3), p(&[2, 1], &f3)]
        );
    }

    #[test]
    fn trial_examples() {
        let lim = Limits::default();
        let f2 = make_field(2, 1, None).unwrap();
        let r = trial_factorize(&p(&[0, 1, 0, 1], &f2), &f2, &lim).unwrap();
        assert_eq!(r.factors, vec![(p(&[0, 1], &f2), 1), (p(&[1, 1], &f2), 2)]);
        let irr = p(&[1, 1, 0, 1], &f2);
        assert_eq!(trial_factorize(&irr, &f2, &lim).unwrap().factors, vec![(irr, 1)]);
        let f3 = make_field(3, 1, None).unwrap();
        let r = trial_factorize(&p(&[-1, 0, 1], &f3), &f3, &lim).unwrap();
        assert_eq!(r.factors, vec![(p(&[1, 1], &f3), 1), (p(&[2, 1], &f3), 1)]);
    }

    #[test]
    fn sieve_cap() {
        let f2 = make_field(2, 1, None).unwrap();
        let lim = Limits {
            max_sieve: 16,
            ..Limits::default()
        };
        assert!(matches!(
            IrreducibleSieve::new(&f2, 5, &lim),
            Err(Error::TooLarge(_))
        ));
    }
}
