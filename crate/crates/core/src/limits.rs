/// Resource caps shared by the expensive operations.
///
/// Every cap turns a runaway input into an [`Error`](crate::Error) instead of
/// unbounded memory or time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of terms produced while expanding a power of a polynomial.
    pub max_terms: usize,
    /// Largest q for which the D and G operator matrices are built.
    pub max_operator_q: u64,
    /// Largest q for which factorization enumerates the whole field.
    pub max_factor_q: u64,
    /// Largest monomial basis for the hypersurface operators.
    pub max_basis: usize,
    /// Largest number of variables for the hypersurface operators.
    pub max_nvars: usize,
    /// Largest number of points enumerated by the brute-force counter.
    pub max_points: u128,
    /// Largest extension field the counter builds log tables for.
    pub max_table_field: u64,
    /// Largest number of monic candidates the irreducible sieve enumerates.
    pub max_sieve: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_terms: 10_000_000,
            max_operator_q: 64,
            max_factor_q: 64,
            max_basis: 100_000,
            max_nvars: 6,
            max_points: 1_000_000_000,
            max_table_field: 1 << 22,
            max_sieve: 10_000_000,
        }
    }
}

/// Selects the data-parallel or the sequential path of a kernel.
///
/// Without the `parallel` feature both modes run sequentially.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExecMode {
    Sequential,
    #[default]
    Parallel,
}
