//! Coefficient arithmetic, sparse polynomials and the operators on them.

pub mod poly;
pub mod ring;
pub mod univariate;

pub use poly::{binomial_mod_p, hasse_q_minus_1, poly_pow, psi_q, Monomial, SparsePoly};
pub use ring::{make_field, make_galois_ring, Elem, FieldCtx, FieldElem, GaloisRing, RingCtx, RingElem};
pub use univariate::{frobenius_mod, gcd_uni, squarefree_part};
