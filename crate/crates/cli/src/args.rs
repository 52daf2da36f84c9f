//! Command-line surface.

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "fqzeta", version, about = "Zeta functions of hypersurfaces over finite fields")]
pub struct Cli {
    /// Emit a JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads for the parallel kernels (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(flatten)]
    pub limits: LimitArgs,

    #[command(subcommand)]
    pub command: Command,
}

/// Overrides for the resource caps.
#[derive(Args, Debug, Clone, Default)]
pub struct LimitArgs {
    #[arg(long, global = true, value_name = "N")]
    pub max_terms: Option<usize>,
    /// Cap on q for the D and G operators and for factorization.
    #[arg(long, global = true, value_name = "Q")]
    pub max_q: Option<u64>,
    #[arg(long, global = true, value_name = "N")]
    pub max_basis: Option<usize>,
    #[arg(long, global = true, value_name = "N")]
    pub max_nvars: Option<usize>,
    /// Cap on the number of points the brute-force counter visits.
    #[arg(long, global = true, value_name = "N")]
    pub max_points: Option<u128>,
    #[arg(long, global = true, value_name = "N")]
    pub max_table: Option<u64>,
    #[arg(long, global = true, value_name = "N")]
    pub max_sieve: Option<u128>,
}

/// F_q given as --q, or as --p with --e.
#[derive(Args, Debug, Clone)]
pub struct FieldArgs {
    #[arg(long, conflicts_with_all = ["p", "e"], required_unless_present = "p")]
    pub q: Option<u64>,
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long, requires = "p")]
    pub e: Option<usize>,
    /// Defining polynomial of F_q over F_p, in t, e.g. "t^2+t+1".
    #[arg(long)]
    pub modulus: Option<String>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainArg {
    Affine,
    Torus,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodArg {
    Frobenius,
    Niederreiter,
    Psi,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    Modp,
    Modpm,
    Zerodim,
    Factor,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count zeros of f over F_(q^k) by enumeration.
    Count {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        poly: String,
        #[arg(short = 'n', default_value_t = 1)]
        n: usize,
        #[arg(short = 'k', default_value_t = 1)]
        k: u32,
        #[arg(long, value_enum, default_value = "affine")]
        domain: DomainArg,
    },
    /// Degree profile and exact zeta function of a univariate f.
    Zerodim {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum, default_value = "frobenius")]
        method: MethodArg,
        /// Substitute x -> x + c first.
        #[arg(long, value_name = "C")]
        shift: Option<String>,
        #[arg(long)]
        dump_matrix: bool,
    },
    /// Factor a univariate f into monic irreducibles.
    Factor {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum, default_value = "frobenius")]
        method: MethodArg,
        /// Factor f(x + c) and translate the factors back.
        #[arg(long, value_name = "C")]
        shift: Option<String>,
    },
    /// Affine zeta function mod p up to T^B.
    Modp {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        poly: String,
        #[arg(short = 'n', default_value_t = 1)]
        n: usize,
        #[arg(short = 'B', default_value_t = 4)]
        b: usize,
        /// Degree bound of the monomial basis (default max(deg f, n)).
        #[arg(short = 'd')]
        d: Option<u32>,
        #[arg(long)]
        dump_matrix: bool,
    },
    /// Torus zeta function mod p^m up to T^B.
    Modpm {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        poly: String,
        #[arg(short = 'n', default_value_t = 1)]
        n: usize,
        #[arg(short = 'm', default_value_t = 1)]
        m: u32,
        #[arg(short = 'B', default_value_t = 4)]
        b: usize,
        #[arg(short = 'd')]
        d: Option<u32>,
        #[arg(long)]
        dump_matrix: bool,
    },
    /// Compare a library pipeline against the brute-force oracle.
    Verify {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum)]
        mode: VerifyMode,
        #[arg(short = 'n', default_value_t = 1)]
        n: usize,
        #[arg(short = 'm', default_value_t = 1)]
        m: u32,
        #[arg(short = 'B', default_value_t = 4)]
        b: usize,
        #[arg(short = 'd')]
        d: Option<u32>,
        #[arg(long, value_enum, default_value = "frobenius")]
        method: MethodArg,
    },
    /// Zeta function of the torus G_m^n mod p^m up to T^B.
    TorusZeta {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(short = 'n', default_value_t = 1)]
        n: usize,
        #[arg(short = 'm', default_value_t = 1)]
        m: u32,
        #[arg(short = 'B', default_value_t = 4)]
        b: usize,
    },
}
