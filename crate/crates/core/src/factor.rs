//! Factorization over F_q by splitting with elements of a fixed space.
//!
//! Any two independent elements h1, h2 of the fixed space of F, D or G on
//! R = F_q[x]/(f) split f through the gcds (f, h1 - c h2), c in F_q. The
//! extra gcd (f, h2) catches components on which h2 vanishes.

use crate::algebra::univariate::{self as uni, Dense};
use crate::algebra::{squarefree_part, FieldCtx, SparsePoly};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linalg::kernel_basis;
use crate::zerodim::{monic_dense, op_matrix, OperatorKind};

/// f = prod f_i^(a_i) with f_i monic irreducible and pairwise distinct.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factorization {
    pub factors: Vec<(SparsePoly, u32)>,
}

impl Factorization {
    /// prod f_i^(a_i).
    pub fn product(&self, field: &FieldCtx) -> SparsePoly {
        let mut acc = SparsePoly::one(1, field);
        for (fi, a) in &self.factors {
            for _ in 0..*a {
                acc = acc.mul(fi, field);
            }
        }
        acc
    }

    /// Degrees of the distinct factors.
    pub fn degrees(&self) -> Vec<u32> {
        self.factors
            .iter()
            .map(|(f, _)| f.total_degree().unwrap_or(0))
            .collect()
    }

    /// Sorts by degree, then lexicographically by coefficient indices read
    /// from the leading term down.
    pub fn sort(&mut self, field: &FieldCtx) {
        self.factors.sort_by_cached_key(|(f, a)| (sort_key(f, field), *a));
    }
}

pub(crate) fn sort_key(f: &SparsePoly, field: &FieldCtx) -> (u32, Vec<u64>) {
    let d = uni::to_dense(f, field).expect("univariate");
    let deg = d.len().saturating_sub(1) as u32;
    (deg, d.iter().rev().map(|c| field.index_of(c)).collect())
}

/// Basis of the fixed space of `kind` on F_q[x]/(f), as polynomials of
/// degree < deg f.
pub fn admissible_basis(
    f: &SparsePoly,
    kind: OperatorKind,
    field: &FieldCtx,
    limits: &Limits,
) -> Result<Vec<SparsePoly>> {
    let m = op_matrix(f, kind, field, limits)?;
    Ok(kernel_basis(&m.sub_identity(field), field)?
        .into_iter()
        .map(|v| uni::to_sparse(&uni::trim(field, v), field))
        .collect())
}

fn independent_mod(g: &Dense, h1: &Dense, h2: &Dense, field: &FieldCtx) -> (Dense, Dense, bool) {
    let r1 = uni::rem(field, h1, g);
    let r2 = uni::rem(field, h2, g);
    let indep = match (r1.last(), r2.last()) {
        (_, None) | (None, _) => false,
        (Some(l1), Some(l2)) if r1.len() == r2.len() => {
            let c = field.mul(l1, &field.inv(l2).expect("nonzero"));
            !uni::sub(field, &r1, &uni::scale(field, &r2, &c)).is_empty()
        }
        _ => true,
    };
    (r1, r2, indep)
}

fn split_dense(g: &Dense, h1: &Dense, h2: &Dense, field: &FieldCtx) -> Result<Vec<Dense>> {
    let (r1, r2, indep) = independent_mod(g, h1, h2, field);
    if !indep {
        return Err(Error::DependentPair);
    }
    let mut out = Vec::new();
    for c in field.elements() {
        let t = uni::sub(field, &r1, &uni::scale(field, &r2, &c));
        let d = uni::gcd(field, g, &t);
        if d.len() > 1 {
            out.push(d);
        }
    }
    let d = uni::gcd(field, g, &r2);
    if d.len() > 1 {
        out.push(d);
    }
    Ok(out)
}

/// The nontrivial gcds (g, h1 - c h2) for c in F_q, together with (g, h2).
pub fn split(
    g: &SparsePoly,
    h1: &SparsePoly,
    h2: &SparsePoly,
    field: &FieldCtx,
) -> Result<Vec<SparsePoly>> {
    let dg = monic_dense(g, field)?;
    let d1 = uni::to_dense(h1, field)?;
    let d2 = uni::to_dense(h2, field)?;
    Ok(split_dense(&dg, &d1, &d2, field)?
        .iter()
        .map(|d| uni::to_sparse(d, field))
        .collect())
}

/// First proper divisor of g produced by any independent pair of `basis`.
fn find_divisor(g: &Dense, basis: &[Dense], field: &FieldCtx) -> Option<Dense> {
    let n = basis.len();
    let pairs = (1..n)
        .map(|j| (0, j))
        .chain((1..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))));
    for (i, j) in pairs {
        let Ok(pieces) = split_dense(g, &basis[i], &basis[j], field) else {
            continue;
        };
        if let Some(d) = pieces.into_iter().find(|d| d.len() < g.len()) {
            return Some(d);
        }
    }
    None
}

/// Complete factorization of a monic univariate f over F_q.
pub fn factorize(
    f: &SparsePoly,
    kind: OperatorKind,
    field: &FieldCtx,
    limits: &Limits,
) -> Result<Factorization> {
    if field.q() > limits.max_factor_q {
        return Err(Error::QTooLarge {
            q: field.q(),
            cap: limits.max_factor_q,
        });
    }
    let df = monic_dense(f, field)?;
    if kind == OperatorKind::PsiMul && field.is_zero(&df[0]) {
        return Err(Error::ZeroConstantTerm);
    }
    // Each work item carries the fixed-space basis of an ancestor, reduced
    // mod the component; it is tried before computing the component's own.
    let mut work: Vec<(Dense, Option<Vec<Dense>>)> = vec![(df, None)];
    let mut terminal: Vec<Dense> = Vec::new();
    while let Some((g, inherited)) = work.pop() {
        if g.len() == 2 {
            terminal.push(g);
            continue;
        }
        let mut basis_for_children = None;
        let mut divisor = None;
        if let Some(b) = inherited {
            let restricted: Vec<Dense> = b
                .iter()
                .map(|h| uni::rem(field, h, &g))
                .filter(|h| !h.is_empty())
                .collect();
            divisor = find_divisor(&g, &restricted, field);
            basis_for_children = Some(restricted);
        }
        if divisor.is_none() {
            let own: Vec<Dense> = admissible_basis(&uni::to_sparse(&g, field), kind, field, limits)?
                .iter()
                .map(|h| uni::to_dense(h, field))
                .collect::<Result<_>>()?;
            if own.len() <= 1 {
                terminal.push(g);
                continue;
            }
            divisor = find_divisor(&g, &own, field);
            basis_for_children = Some(own);
        }
        let Some(d) = divisor else {
            return Err(Error::InvalidArgument(format!(
                "fixed space of the {kind} operator failed to split a component"
            )));
        };
        let cofactor = uni::div_exact(field, &g, &d);
        work.push((uni::monic(field, &cofactor), basis_for_children.clone()));
        work.push((d, basis_for_children));
    }

    // A terminal component is a prime power f_i^(a_i); different components
    // may share the same f_i, so multiplicities are merged.
    let mut merged: Vec<(Dense, u32)> = Vec::new();
    for c in terminal {
        let base = uni::to_dense(&squarefree_part(&uni::to_sparse(&c, field), field)?, field)?;
        let a = ((c.len() - 1) / (base.len() - 1)) as u32;
        match merged.iter_mut().find(|(b, _)| *b == base) {
            Some((_, m)) => *m += a,
            None => merged.push((base, a)),
        }
    }
    let mut out = Factorization {
        factors: merged
            .into_iter()
            .map(|(b, a)| (uni::to_sparse(&b, field), a))
            .collect(),
    };
    out.sort(field);
    Ok(out)
}
