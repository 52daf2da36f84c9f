//! Ground truth: brute-force point counts, the exact zeta series they
//! determine, and factorization by trial division against a sieve of
//! irreducibles. Uses its own table-based field arithmetic.

mod count;
mod exact;
mod sieve;
pub mod zech;

pub use count::{count_points, CountVector, Domain, PointCounter};
pub use exact::{reduce_coeffs, zeta_coeffs_exact};
pub use sieve::{irreducibles_up_to, trial_factorize, IrreducibleSieve};
