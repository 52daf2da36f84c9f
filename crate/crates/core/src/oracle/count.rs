//! Brute-force point counting over F_(q^k).

use std::collections::HashMap;

use super::zech::{Log, ZechField, ZERO};
use crate::algebra::{make_field, FieldCtx, SparsePoly};
use crate::error::{Error, Result};
use crate::limits::{ExecMode, Limits};
use crate::par;

/// Where points are counted.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Domain {
    /// All of F_(q^k)^n.
    Affine,
    /// Points with every coordinate nonzero.
    Torus,
}

impl Domain {
    pub fn name(self) -> &'static str {
        match self {
            Domain::Affine => "affine",
            Domain::Torus => "torus",
        }
    }
}

/// N_1..N_K for one hypersurface.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CountVector {
    pub counts: Vec<u64>,
    pub domain: Domain,
    pub q: u64,
    pub nvars: usize,
}

/// An extension F_(q^k) together with the image of the generator of F_q.
struct Extension {
    table: ZechField,
    /// Logs of t^0, t^1, ..., t^(e-1) where t generates F_q.
    basis: Vec<Log>,
}

/// Counts points of hypersurfaces over the extensions of a fixed F_q,
/// caching the log tables of every extension it builds.
pub struct PointCounter {
    field: FieldCtx,
    limits: Limits,
    extensions: HashMap<u32, Extension>,
}

impl PointCounter {
    pub fn new(field: &FieldCtx, limits: &Limits) -> Self {
        PointCounter {
            field: field.clone(),
            limits: limits.clone(),
            extensions: HashMap::new(),
        }
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    fn extension(&mut self, k: u32) -> Result<&Extension> {
        if !self.extensions.contains_key(&k) {
            let e = self.field.e();
            let big = make_field(self.field.p(), e * k as usize, None)?;
            let table = ZechField::new(&big, self.limits.max_table_field)?;
            // F_q embeds as the subfield of size q; t maps to any root of the
            // modulus of F_q there (all choices are Galois conjugate).
            let gen = if e == 1 {
                table.from_int(self.field.p() - self.field.modulus()[0])
            } else {
                table
                    .root_in_subfield(self.field.modulus(), self.field.q())
                    .expect("the modulus of F_q splits in every extension")
            };
            let basis = (0..e as u64).map(|i| table.pow(gen, i)).collect();
            self.extensions.insert(k, Extension { table, basis });
        }
        Ok(&self.extensions[&k])
    }

    /// Number of zeros of `f` in F_(q^k)^n (affine) or (F_(q^k)^*)^n (torus).
    pub fn count(&mut self, f: &SparsePoly, k: u32, domain: Domain, mode: ExecMode) -> Result<u64> {
        if k == 0 {
            return Err(Error::InvalidArgument("k must be at least 1".into()));
        }
        let n = f.nvars();
        let qk = (self.field.q() as u128)
            .checked_pow(k)
            .ok_or_else(|| Error::TooLarge("q^k overflows".into()))?;
        let points = qk.checked_pow(n as u32).unwrap_or(u128::MAX);
        if points > self.limits.max_points {
            return Err(Error::TooLarge(format!(
                "{points} points exceed the enumeration cap {}",
                self.limits.max_points
            )));
        }
        let field = self.field.clone();
        let ext = self.extension(k)?;
        let t = &ext.table;
        let terms: Vec<(Log, Vec<u32>)> = f
            .terms()
            .map(|(m, c)| {
                let lc = c
                    .coords()
                    .iter()
                    .zip(&ext.basis)
                    .fold(ZERO, |acc, (&a, &b)| t.add(acc, t.mul(t.from_int(a % field.p()), b)));
                (lc, m.exps().to_vec())
            })
            .collect();
        if n == 0 {
            let v = terms.iter().fold(ZERO, |acc, (c, _)| t.add(acc, *c));
            return Ok(u64::from(v == ZERO));
        }
        // Coordinates are enumerated as logs; ZERO is the zero element.
        let values: Vec<Log> = match domain {
            Domain::Affine => std::iter::once(ZERO).chain(t.nonzero()).collect(),
            Domain::Torus => t.nonzero().collect(),
        };
        let eval = |point: &[Log]| -> bool {
            let mut acc = ZERO;
            'terms: for (c, exps) in &terms {
                let mut l = *c;
                for (&x, &u) in point.iter().zip(exps) {
                    if u == 0 {
                        continue;
                    }
                    if x == ZERO {
                        continue 'terms;
                    }
                    l = t.mul(l, t.pow(x, u as u64));
                }
                acc = t.add(acc, l);
            }
            acc == ZERO
        };
        // Partitioned by the first coordinate; the rest run as an odometer.
        let count = par::sum_indices(mode, values.len(), |first| {
            let mut idx = vec![0usize; n];
            idx[0] = first;
            let mut point: Vec<Log> = idx.iter().map(|&i| values[i]).collect();
            let mut c = 0u64;
            loop {
                if eval(&point) {
                    c += 1;
                }
                let mut i = 1;
                while i < n {
                    idx[i] += 1;
                    if idx[i] < values.len() {
                        point[i] = values[idx[i]];
                        break;
                    }
                    idx[i] = 0;
                    point[i] = values[0];
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
            c
        });
        Ok(count)
    }

    /// N_1..N_kmax.
    pub fn count_vector(
        &mut self,
        f: &SparsePoly,
        kmax: u32,
        domain: Domain,
        mode: ExecMode,
    ) -> Result<CountVector> {
        let counts = (1..=kmax)
            .map(|k| self.count(f, k, domain, mode))
            .collect::<Result<_>>()?;
        Ok(CountVector {
            counts,
            domain,
            q: self.field.q(),
            nvars: f.nvars(),
        })
    }
}

/// One-shot point count; see [`PointCounter`] for repeated use.
pub fn count_points(
    f: &SparsePoly,
    k: u32,
    domain: Domain,
    field: &FieldCtx,
    limits: &Limits,
) -> Result<u64> {
    PointCounter::new(field, limits).count(f, k, domain, ExecMode::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Elem, Monomial};

    fn uni(coeffs: &[i64], f: &FieldCtx) -> SparsePoly {
        let c: Vec<Elem> = coeffs.iter().map(|&v| f.from_int(v)).collect();
        SparsePoly::from_dense(&c, f)
    }

    #[test]
    fn count_examples() {
        let lim = Limits::default();
        let f2 = make_field(2, 1, None).unwrap();
        let f = uni(&[1, 1, 1], &f2);
        assert_eq!(count_points(&f, 1, Domain::Affine, &f2, &lim).unwrap(), 0);
        assert_eq!(count_points(&f, 2, Domain::Affine, &f2, &lim).unwrap(), 2);
        let g = SparsePoly::from_terms(
            2,
            [
                (Monomial::new(&[1, 0]), f2.one()),
                (Monomial::new(&[0, 1]), f2.one()),
                (Monomial::new(&[0, 0]), f2.one()),
            ],
            &f2,
        );
        assert_eq!(count_points(&g, 2, Domain::Torus, &f2, &lim).unwrap(), 2);
        assert_eq!(count_points(&g, 2, Domain::Affine, &f2, &lim).unwrap(), 4);
    }

    #[test]
    fn extension_coefficients_embed() {
        // x - t over F_4 has exactly one root in F_4, F_16, ... and none
        // in F_8-type extensions do not exist; check k = 1, 2, 3.
        let lim = Limits::default();
        let f4 = make_field(2, 2, None).unwrap();
        let f = SparsePoly::from_dense(&[f4.neg(&f4.generator()), f4.one()], &f4);
        for k in 1..=3 {
            assert_eq!(count_points(&f, k, Domain::Affine, &f4, &lim).unwrap(), 1);
            assert_eq!(count_points(&f, k, Domain::Torus, &f4, &lim).unwrap(), 1);
        }
        // t^2 + t + 1 = 0, so x^2 + x + 1 has both roots t, t^2 in F_4.
        let g = uni(&[1, 1, 1], &f4);
        assert_eq!(count_points(&g, 1, Domain::Affine, &f4, &lim).unwrap(), 2);
    }

    #[test]
    fn size_cap() {
        let f2 = make_field(2, 1, None).unwrap();
        let lim = Limits {
            max_points: 100,
            ..Limits::default()
        };
        let f = uni(&[1, 1], &f2);
        assert!(matches!(
            count_points(&f, 7, Domain::Affine, &f2, &lim),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let f3 = make_field(3, 1, None).unwrap();
        let f = SparsePoly::from_terms(
            2,
            [
                (Monomial::new(&[2, 0]), f3.one()),
                (Monomial::new(&[0, 3]), f3.from_int(2)),
                (Monomial::new(&[1, 1]), f3.one()),
                (Monomial::new(&[0, 0]), f3.one()),
            ],
            &f3,
        );
        let mut c = PointCounter::new(&f3, &Limits::default());
        for k in 1..=3 {
            assert_eq!(
                c.count(&f, k, Domain::Affine, ExecMode::Sequential).unwrap(),
                c.count(&f, k, Domain::Affine, ExecMode::Parallel).unwrap()
            );
        }
    }
}
