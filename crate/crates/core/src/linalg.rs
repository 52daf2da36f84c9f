//! Dense square matrices over a Galois ring.
//!
//! The characteristic polynomial uses Berkowitz's division-free algorithm,
//! so the same code serves F_q and O_m (which has zero divisors).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::algebra::{Elem, GaloisRing};
use crate::error::{Error, Result};
use crate::limits::ExecMode;
use crate::par;

/// Row-major n x n matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    n: usize,
    a: Vec<Elem>,
}

impl Matrix {
    pub fn zero(n: usize, ring: &GaloisRing) -> Self {
        Matrix {
            n,
            a: vec![ring.zero(); n * n],
        }
    }

    pub fn identity(n: usize, ring: &GaloisRing) -> Self {
        let mut m = Self::zero(n, ring);
        for i in 0..n {
            m.a[i * n + i] = ring.one();
        }
        m
    }

    /// Builds a matrix from its rows.
    pub fn from_rows(rows: Vec<Vec<Elem>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix {
            n,
            a: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a matrix from its columns.
    pub fn from_columns(cols: Vec<Vec<Elem>>) -> Self {
        let n = cols.len();
        assert!(cols.iter().all(|c| c.len() == n), "matrix must be square");
        let mut a = Vec::with_capacity(n * n);
        for i in 0..n {
            for col in &cols {
                a.push(col[i].clone());
            }
        }
        Matrix { n, a }
    }

    pub fn from_ints(rows: &[Vec<i64>], ring: &GaloisRing) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| ring.from_int(v)).collect())
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.a[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.a[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Elem]> {
        self.a.chunks(self.n.max(1)).take(self.n)
    }

    pub fn add(&self, other: &Matrix, ring: &GaloisRing) -> Matrix {
        assert_eq!(self.n, other.n);
        Matrix {
            n: self.n,
            a: self.a.iter().zip(&other.a).map(|(x, y)| ring.add(x, y)).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix, ring: &GaloisRing) -> Matrix {
        assert_eq!(self.n, other.n);
        Matrix {
            n: self.n,
            a: self.a.iter().zip(&other.a).map(|(x, y)| ring.sub(x, y)).collect(),
        }
    }

    pub fn scale(&self, c: &Elem, ring: &GaloisRing) -> Matrix {
        Matrix {
            n: self.n,
            a: self.a.iter().map(|x| ring.mul(x, c)).collect(),
        }
    }

    pub fn sub_identity(&self, ring: &GaloisRing) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.n {
            let v = ring.sub(m.get(i, i), &ring.one());
            m.set(i, i, v);
        }
        m
    }

    /// Matrix product; rows are computed in parallel in `Parallel` mode.
    pub fn mul_with(&self, other: &Matrix, ring: &GaloisRing, mode: ExecMode) -> Matrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let rows = par::map_indices(mode, n, |i| {
            let mut out = vec![ring.zero(); n];
            for k in 0..n {
                let x = self.get(i, k);
                if ring.is_zero(x) {
                    continue;
                }
                for (j, o) in out.iter_mut().enumerate() {
                    *o = ring.add(o, &ring.mul(x, other.get(k, j)));
                }
            }
            out
        });
        Matrix {
            n,
            a: rows.into_iter().flatten().collect(),
        }
    }

    pub fn mul(&self, other: &Matrix, ring: &GaloisRing) -> Matrix {
        self.mul_with(other, ring, ExecMode::default())
    }

    pub fn mul_vec(&self, v: &[Elem], ring: &GaloisRing) -> Vec<Elem> {
        self.rows()
            .map(|r| {
                r.iter()
                    .zip(v)
                    .fold(ring.zero(), |acc, (x, y)| ring.add(&acc, &ring.mul(x, y)))
            })
            .collect()
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.n;
        let mut a = Vec::with_capacity(n * n);
        for j in 0..n {
            for i in 0..n {
                a.push(self.get(i, j).clone());
            }
        }
        Matrix { n, a }
    }
}

/// M^j by repeated squaring; M^0 = I.
pub fn mat_pow(m: &Matrix, mut j: u64, ring: &GaloisRing) -> Matrix {
    let mut acc = Matrix::identity(m.n, ring);
    let mut base = m.clone();
    while j > 0 {
        if j & 1 == 1 {
            acc = acc.mul(&base, ring);
        }
        j >>= 1;
        if j > 0 {
            base = base.mul(&base, ring);
        }
    }
    acc
}

fn require_field(ring: &GaloisRing) -> Result<()> {
    if ring.m() != 1 {
        return Err(Error::RingNotField(ring.m()));
    }
    Ok(())
}

/// Reduced row echelon form in place; returns the pivot columns.
/// Pivots are the first nonzero entry in each column scan.
fn rref(m: &mut [Vec<Elem>], ncols: usize, ring: &GaloisRing) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(pr) = (r..m.len()).find(|&i| !ring.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, pr);
        let inv = ring.inv(&m[r][c]).expect("field element");
        for x in m[r].iter_mut() {
            *x = ring.mul(x, &inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || ring.is_zero(&row[c]) {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = ring.sub(x, &ring.mul(&f, y));
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix, ring: &GaloisRing) -> Result<usize> {
    require_field(ring)?;
    let mut rows: Vec<Vec<Elem>> = m.rows().map(<[Elem]>::to_vec).collect();
    Ok(rref(&mut rows, m.n, ring).len())
}

/// Basis of the kernel {v : Mv = 0}, one vector per free column, in
/// increasing free-column order.
pub fn kernel_basis(m: &Matrix, ring: &GaloisRing) -> Result<Vec<Vec<Elem>>> {
    require_field(ring)?;
    let n = m.n;
    let mut rows: Vec<Vec<Elem>> = m.rows().map(<[Elem]>::to_vec).collect();
    let pivots = rref(&mut rows, n, ring);
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![ring.zero(); n];
        v[free] = ring.one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = ring.neg(&rows[r][free]);
        }
        basis.push(v);
    }
    Ok(basis)
}

/// Inverse over a field.
pub fn inverse(m: &Matrix, ring: &GaloisRing) -> Result<Matrix> {
    require_field(ring)?;
    let n = m.n;
    let mut rows: Vec<Vec<Elem>> = (0..n)
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.extend((0..n).map(|j| if i == j { ring.one() } else { ring.zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut rows, n, ring);
    if pivots.len() != n {
        return Err(Error::SingularMatrix);
    }
    Ok(Matrix::from_rows(rows.into_iter().map(|r| r[n..].to_vec()).collect()))
}

/// Coefficients c_0..c_n of det(I - MT), with c_0 = 1.
///
/// Over a field this goes through a Hessenberg form (O(n^3)); over a Galois
/// ring with m > 1 it uses the division-free Berkowitz recursion.
pub fn charpoly_reverse(m: &Matrix, ring: &GaloisRing) -> Vec<Elem> {
    if ring.m() == 1 {
        charpoly_hessenberg(m, ring)
    } else {
        charpoly_berkowitz(m, ring)
    }
}

/// det(I - MT) over a field by similarity to upper Hessenberg form.
///
/// Panics if `ring` is not a field.
pub fn charpoly_hessenberg(m: &Matrix, ring: &GaloisRing) -> Vec<Elem> {
    assert_eq!(ring.m(), 1, "Hessenberg reduction needs a field");
    let n = m.n;
    let mut h: Vec<Vec<Elem>> = m.rows().map(|r| r.to_vec()).collect();
    for k in 0..n.saturating_sub(2) {
        let Some(piv) = (k + 1..n).find(|&i| !ring.is_zero(&h[i][k])) else {
            continue;
        };
        if piv != k + 1 {
            h.swap(piv, k + 1);
            for row in h.iter_mut() {
                row.swap(piv, k + 1);
            }
        }
        let inv = ring.inv(&h[k + 1][k]).expect("nonzero pivot in a field");
        for i in k + 2..n {
            if ring.is_zero(&h[i][k]) {
                continue;
            }
            let u = ring.mul(&h[i][k], &inv);
            // row_i -= u row_(k+1), then col_(k+1) += u col_i
            for j in 0..n {
                let t = ring.mul(&u, &h[k + 1][j]);
                h[i][j] = ring.sub(&h[i][j], &t);
            }
            for row in h.iter_mut() {
                let t = ring.mul(&u, &row[i]);
                row[k + 1] = ring.add(&row[k + 1], &t);
            }
        }
    }
    // p_k = (x - h_kk) p_(k-1) - sum_(i<k) h_ik (prod_(i<j<=k) h_(j,j-1)) p_(i-1),
    // 1-indexed; coefficient vectors in ascending powers of x.
    let mut p: Vec<Vec<Elem>> = vec![vec![ring.one()]];
    for k in 0..n {
        let mut next = vec![ring.zero(); k + 2];
        for (i, c) in p[k].iter().enumerate() {
            next[i + 1] = ring.add(&next[i + 1], c);
            next[i] = ring.sub(&next[i], &ring.mul(&h[k][k], c));
        }
        let mut prod = ring.one();
        for i in (0..k).rev() {
            prod = ring.mul(&prod, &h[i + 1][i]);
            if ring.is_zero(&prod) {
                break;
            }
            let f = ring.mul(&h[i][k], &prod);
            for (j, c) in p[i].iter().enumerate() {
                next[j] = ring.sub(&next[j], &ring.mul(&f, c));
            }
        }
        p.push(next);
    }
    let mut out = p.pop().unwrap();
    out.reverse();
    out
}

/// det(I - MT) over any Galois ring, without divisions.
///
/// Berkowitz: the characteristic vector of the leading r x r block is a
/// Toeplitz matrix built from (1, -a_rr, -R C, -R A C, ..., -R A^(r-2) C)
/// applied to the vector of the (r-1) x (r-1) block. The vector
/// (1, c_1, ..., c_n) of det(xI - M) read in this order is exactly det(I - MT).
pub fn charpoly_berkowitz(m: &Matrix, ring: &GaloisRing) -> Vec<Elem> {
    let n = m.n;
    let mut cp = vec![ring.one()];
    for r in 0..n {
        // Block partition of the leading (r+1) x (r+1) submatrix.
        let col: Vec<Elem> = (0..r).map(|i| m.get(i, r).clone()).collect();
        let row: Vec<Elem> = (0..r).map(|j| m.get(r, j).clone()).collect();
        let mut t = Vec::with_capacity(r + 2);
        t.push(ring.one());
        t.push(ring.neg(m.get(r, r)));
        let mut v = col;
        for _ in 0..r {
            let dot = row
                .iter()
                .zip(&v)
                .fold(ring.zero(), |acc, (x, y)| ring.add(&acc, &ring.mul(x, y)));
            t.push(ring.neg(&dot));
            v = (0..r)
                .map(|i| {
                    (0..r).fold(ring.zero(), |acc, k| {
                        ring.add(&acc, &ring.mul(m.get(i, k), &v[k]))
                    })
                })
                .collect();
        }
        // new[i] = sum_{j <= i} t[i - j] * cp[j]
        let next: Vec<Elem> = (0..r + 2)
            .map(|i| {
                (0..=i.min(r)).fold(ring.zero(), |acc, j| {
                    ring.add(&acc, &ring.mul(&t[i - j], &cp[j]))
                })
            })
            .collect();
        cp = next;
    }
    cp
}

/// Exact solution of A s = b over Q, required to be a nonnegative integer
/// vector.
pub fn solve_integer(a: &[Vec<i64>], b: &[i64]) -> Result<Vec<u64>> {
    let n = a.len();
    if b.len() != n || a.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidArgument("solve_integer needs a square system".into()));
    }
    let q = |v: i64| BigRational::from_integer(BigInt::from(v));
    let mut rows: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(r, &bi)| r.iter().map(|&v| q(v)).chain([q(bi)]).collect())
        .collect();
    for c in 0..n {
        let pr = (c..n)
            .find(|&i| !rows[i][c].is_zero())
            .ok_or(Error::SingularMatrix)?;
        rows.swap(c, pr);
        let inv = rows[c][c].recip();
        for x in rows[c].iter_mut() {
            *x *= &inv;
        }
        let pivot = rows[c].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == c || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot) {
                *x -= &f * y;
            }
        }
    }
    rows.iter()
        .map(|r| {
            let v = &r[n];
            if !v.is_integer() || v.is_negative() {
                return Err(Error::NonIntegralSolution);
            }
            u64::try_from(v.to_integer()).map_err(|_| Error::NonIntegralSolution)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_field, make_galois_ring};

    #[test]
    fn kernel_examples() {
        let f2 = make_field(2, 1, None).unwrap();
        let m = Matrix::from_ints(&[vec![0, 1], vec![0, 0]], &f2);
        let k = kernel_basis(&m, &f2).unwrap();
        assert_eq!(k, vec![vec![f2.one(), f2.zero()]]);
        let id = Matrix::identity(3, &f2);
        assert_eq!(kernel_basis(&id.sub_identity(&f2), &f2).unwrap().len(), 3);
        let z = Matrix::zero(3, &f2);
        assert_eq!(kernel_basis(&z.sub_identity(&f2), &f2).unwrap().len(), 0);
        let z4 = make_galois_ring(&f2, 2).unwrap();
        assert_eq!(
            kernel_basis(&Matrix::zero(2, &z4), &z4),
            Err(Error::RingNotField(2))
        );
    }

    #[test]
    fn pow_examples() {
        let f2 = make_field(2, 1, None).unwrap();
        let m = Matrix::from_ints(&[vec![1, 1], vec![0, 1]], &f2);
        assert_eq!(mat_pow(&m, 0, &f2), Matrix::identity(2, &f2));
        assert_eq!(mat_pow(&m, 1, &f2), m);
        assert_eq!(mat_pow(&m, 2, &f2), Matrix::identity(2, &f2));
    }

    #[test]
    fn charpoly_examples() {
        let f2 = make_field(2, 1, None).unwrap();
        let m = Matrix::from_ints(&[vec![1, 1], vec![0, 1]], &f2);
        let expect: Vec<Elem> = [1, 0, 1].iter().map(|&v| f2.from_int(v)).collect();
        assert_eq!(charpoly_reverse(&m, &f2), expect);
        assert_eq!(charpoly_reverse(&Matrix::zero(3, &f2), &f2)[0], f2.one());
        assert!(charpoly_reverse(&Matrix::zero(3, &f2), &f2)[1..]
            .iter()
            .all(|c| f2.is_zero(c)));
        let z4 = make_galois_ring(&f2, 2).unwrap();
        let m = Matrix::from_ints(&[vec![0, 1], vec![1, 0]], &z4);
        let expect: Vec<Elem> = [1, 0, 3].iter().map(|&v| z4.from_int(v)).collect();
        assert_eq!(charpoly_reverse(&m, &z4), expect);
        assert_eq!(charpoly_reverse(&Matrix::zero(0, &f2), &f2), vec![f2.one()]);
    }

    #[test]
    fn solve_examples() {
        assert_eq!(solve_integer(&[vec![1, 1], vec![1, 2]], &[1, 2]).unwrap(), vec![0, 1]);
        assert_eq!(
            solve_integer(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]], &[4, 0, 2]).unwrap(),
            vec![4, 0, 2]
        );
        assert_eq!(solve_integer(&[vec![1]], &[7]).unwrap(), vec![7]);
        assert_eq!(
            solve_integer(&[vec![1, 1], vec![1, 1]], &[1, 2]),
            Err(Error::SingularMatrix)
        );
        assert_eq!(
            solve_integer(&[vec![2]], &[1]),
            Err(Error::NonIntegralSolution)
        );
        assert_eq!(
            solve_integer(&[vec![1]], &[-1]),
            Err(Error::NonIntegralSolution)
        );
    }

    #[test]
    fn inverse_roundtrip() {
        let f3 = make_field(3, 1, None).unwrap();
        let m = Matrix::from_ints(&[vec![1, 2, 0], vec![0, 1, 1], vec![2, 0, 1]], &f3);
        let mi = inverse(&m, &f3).unwrap();
        assert_eq!(m.mul(&mi, &f3), Matrix::identity(3, &f3));
        let s = Matrix::from_ints(&[vec![1, 1], vec![1, 1]], &f3);
        assert_eq!(inverse(&s, &f3), Err(Error::SingularMatrix));
    }
}
