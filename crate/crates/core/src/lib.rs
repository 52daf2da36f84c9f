//! Zeta functions of hypersurfaces over finite fields.
//!
//! The crate computes Z(X, T) modulo p and p^m from determinants of explicit
//! linear operators built out of the map psi_q (x^u -> x^(u/q)), computes the
//! exact zeta function and the full factorization of univariate polynomials
//! from the fixed spaces of the Frobenius, Niederreiter and psi-multiplication
//! operators, and ships a brute-force point-counting oracle that all of these
//! are checked against.
//!
//! Module map:
//! - [`algebra`]: F_q, Galois rings, sparse polynomials, psi_q and H^(q-1).
//! - [`linalg`]: dense matrices, kernels, Berkowitz characteristic polynomials.
//! - [`zerodim`]: operator matrices on F_q[x]/(f) and the exact zeta function.
//! - [`factor`]: factorization by splitting with fixed-space elements.
//! - [`hyper`]: mod p and mod p^m zeta functions of hypersurfaces.
//! - [`oracle`]: point counting, exact zeta series, irreducible sieve.

pub mod algebra;
pub mod error;
pub mod factor;
pub mod hyper;
pub mod limits;
pub mod linalg;
pub mod oracle;
mod par;
pub mod series;
pub mod zerodim;

pub use algebra::{make_field, make_galois_ring, Elem, FieldCtx, GaloisRing, Monomial, RingCtx, SparsePoly};
pub use error::{Error, Result};
pub use limits::{ExecMode, Limits};
pub use par::with_threads;
pub use linalg::Matrix;
pub use series::TruncatedSeries;
