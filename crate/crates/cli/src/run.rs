//! Executes a parsed invocation and builds its JSON document.

use std::fmt::Write as _;

use fqzeta::algebra::{make_field, make_galois_ring, FieldCtx, GaloisRing, SparsePoly};
use fqzeta::factor::{factorize, Factorization};
use fqzeta::hyper::{hyper_matrix_mod_p, hyper_matrix_mod_pm, torus_zeta, zeta_mod_p, zeta_mod_pm, ZetaResult};
use fqzeta::linalg::Matrix;
use fqzeta::oracle::{reduce_coeffs, trial_factorize, zeta_coeffs_exact, Domain, PointCounter};
use fqzeta::zerodim::{congruence_charpoly, degree_profile, op_matrix, FactoredZeta, OperatorKind};
use fqzeta::{ExecMode, Limits};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::args::{Cli, Command, DomainArg, FieldArgs, LimitArgs, MethodArg, VerifyMode};
use crate::parse::{parse_elem, parse_modulus, parse_poly, render_elem, render_poly, ParseError};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Lib(#[from] fqzeta::Error),
}

impl CliError {
    /// 2 for bad input text or flags, 3 for violated preconditions, 4 for
    /// size limits, 1 for anything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) => 2,
            CliError::Lib(e) if e.is_precondition() => 3,
            CliError::Lib(e) if e.is_size_limit() => 4,
            CliError::Lib(_) => 1,
        }
    }
}

/// A finished command: the JSON document, its text rendering and the exit
/// status (nonzero only when `verify` finds a disagreement).
#[derive(Debug, Clone)]
pub struct Outcome {
    pub doc: Value,
    pub text: String,
    pub exit: u8,
}

fn limits_from(a: &LimitArgs) -> Limits {
    let mut l = Limits::default();
    if let Some(v) = a.max_terms {
        l.max_terms = v;
    }
    if let Some(v) = a.max_q {
        l.max_operator_q = v;
        l.max_factor_q = v;
    }
    if let Some(v) = a.max_basis {
        l.max_basis = v;
    }
    if let Some(v) = a.max_nvars {
        l.max_nvars = v;
    }
    if let Some(v) = a.max_points {
        l.max_points = v;
    }
    if let Some(v) = a.max_table {
        l.max_table_field = v;
    }
    if let Some(v) = a.max_sieve {
        l.max_sieve = v;
    }
    l
}

/// q = p^e with p its least prime factor.
fn prime_power(q: u64) -> Result<(u64, usize), CliError> {
    let bad = || CliError::Usage(format!("q = {q} is not a prime power"));
    if q < 2 {
        return Err(bad());
    }
    let p = (2..)
        .take_while(|d| d * d <= q)
        .find(|d| q % d == 0)
        .unwrap_or(q);
    let (mut r, mut e) = (q, 0);
    while r % p == 0 {
        r /= p;
        e += 1;
    }
    if r != 1 {
        return Err(bad());
    }
    Ok((p, e))
}

fn build_field(a: &FieldArgs) -> Result<FieldCtx, CliError> {
    let (p, e) = match (a.q, a.p) {
        (Some(q), _) => {
            let (p, e) = prime_power(q)?;
            (p, Some(e))
        }
        (None, Some(p)) => (p, a.e),
        (None, None) => return Err(CliError::Usage("give --q or --p".into())),
    };
    match &a.modulus {
        None => Ok(make_field(p, e.unwrap_or(1), None)?),
        Some(text) => {
            let fp = make_field(p, 1, None)?;
            let h = parse_modulus(text, &fp)?;
            let e = e.unwrap_or(h.len().saturating_sub(1));
            Ok(make_field(p, e, Some(&h))?)
        }
    }
}

fn method_kind(m: MethodArg) -> OperatorKind {
    match m {
        MethodArg::Frobenius => OperatorKind::Frobenius,
        MethodArg::Niederreiter => OperatorKind::Niederreiter,
        MethodArg::Psi => OperatorKind::PsiMul,
    }
}

/// Integers for prime-subring elements, `(t-polynomial)` strings otherwise.
fn elem_json(c: &fqzeta::Elem, ring: &GaloisRing) -> Value {
    match ring.to_int(c) {
        Some(v) => json!(v),
        None => json!(render_elem(c, ring)),
    }
}

fn matrix_json(m: &Matrix, ring: &GaloisRing) -> Value {
    Value::Array(
        m.rows()
            .map(|r| Value::Array(r.iter().map(|c| elem_json(c, ring)).collect()))
            .collect(),
    )
}

fn bigints_json(v: &[BigInt]) -> Value {
    Value::Array(
        v.iter()
            .map(|c| match i64::try_from(c) {
                Ok(x) => json!(x),
                Err(_) => json!(c.to_string()),
            })
            .collect(),
    )
}

fn joined<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
}

fn factors_json(fac: &Factorization, field: &FieldCtx) -> Value {
    Value::Array(
        fac.factors
            .iter()
            .map(|(g, a)| json!([render_poly(g, field), a]))
            .collect(),
    )
}

fn zeta_json(z: &ZetaResult) -> Value {
    json!({
        "modulus": z.series.modulus(),
        "series": z.series.coeffs(),
        "det_factors": z.det_factors.iter().map(|f| json!({
            "scale": f.scale,
            "exponent": f.exponent,
            "coeffs": f.coeffs,
        })).collect::<Vec<_>>(),
    })
}

fn zeta_text(z: &ZetaResult) -> String {
    let mut s = format!("Z mod {}: [{}]\n", z.series.modulus(), joined(z.series.coeffs()));
    for f in &z.det_factors {
        let _ = writeln!(
            s,
            "det(I - {}*M*T)^({}) = [{}]",
            f.scale,
            f.exponent,
            joined(&f.coeffs)
        );
    }
    s
}

/// Leading coefficient made 1; f must be univariate and nonzero.
fn monic(f: &SparsePoly, field: &FieldCtx) -> Result<SparsePoly, CliError> {
    let (_, lc) = f
        .terms()
        .next_back()
        .ok_or(CliError::Lib(fqzeta::Error::ConstantInput))?;
    let inv = field.inv(lc).expect("nonzero field element");
    Ok(f.scale(&inv, field))
}

fn shifted(f: &SparsePoly, shift: Option<&str>, field: &FieldCtx) -> Result<(SparsePoly, Option<fqzeta::Elem>), CliError> {
    match shift {
        None => Ok((f.clone(), None)),
        Some(text) => {
            let c = parse_elem(text, field)?;
            Ok((f.translate(&[c.clone()], field), Some(c)))
        }
    }
}

fn check_nvars(n: usize, limits: &Limits) -> Result<(), CliError> {
    if n > limits.max_nvars.max(8) {
        return Err(CliError::Lib(fqzeta::Error::SizeLimit(format!("{n} variables"))));
    }
    Ok(())
}

fn pow_checked(p: u64, m: u32) -> Result<u64, CliError> {
    p.checked_pow(m)
        .filter(|&v| v < 1 << 62)
        .ok_or_else(|| CliError::Lib(fqzeta::Error::SizeLimit(format!("p^m = {p}^{m} overflows"))))
}

/// Runs one invocation.
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let limits = limits_from(&cli.limits);
    let mode = ExecMode::default();
    let (name, field_args) = match &cli.command {
        Command::Count { field, .. } => ("count", field),
        Command::Zerodim { field, .. } => ("zerodim", field),
        Command::Factor { field, .. } => ("factor", field),
        Command::Modp { field, .. } => ("modp", field),
        Command::Modpm { field, .. } => ("modpm", field),
        Command::Verify { field, .. } => ("verify", field),
        Command::TorusZeta { field, .. } => ("torus-zeta", field),
    };
    let field = build_field(field_args)?;
    let mut exit = 0;
    let (inputs, result, text) = match &cli.command {
        Command::Count { poly, n, k, domain, .. } => {
            check_nvars(*n, &limits)?;
            let f = parse_poly(poly, &field, *n)?;
            let dom = match domain {
                DomainArg::Affine => Domain::Affine,
                DomainArg::Torus => Domain::Torus,
            };
            let c = PointCounter::new(&field, &limits).count(&f, *k, dom, mode)?;
            (
                json!({"poly": render_poly(&f, &field), "n": n, "k": k, "domain": dom.name()}),
                json!(c),
                format!("N_{k} ({}) = {c}\n", dom.name()),
            )
        }
        Command::Zerodim { poly, method, shift, dump_matrix, .. } => {
            let f0 = parse_poly(poly, &field, 1)?;
            let (f, c) = shifted(&f0, shift.as_deref(), &field)?;
            let kind = method_kind(*method);
            let profile = degree_profile(&f, &field)?;
            let zeta = FactoredZeta::from_profile(&profile);
            let charpoly = congruence_charpoly(&f, kind, &field, &limits)?;
            let mut result = json!({
                "s": profile.s,
                "zeta_factors": zeta.factors,
                "charpoly_mod_p": charpoly,
                "method": kind.name(),
            });
            if *dump_matrix {
                result["matrix"] = matrix_json(&op_matrix(&f, kind, &field, &limits)?, &field);
            }
            let inv = zeta
                .factors
                .iter()
                .map(|(i, e)| format!("(1 - T^{i})^{}", -e))
                .collect::<Vec<_>>()
                .join(" * ");
            let text = format!(
                "s = [{}]\nZ = 1 / ({})\ndet(I - M*T) mod p ({}) = [{}]\n",
                joined(&profile.s),
                if inv.is_empty() { "1".to_string() } else { inv },
                kind.name(),
                joined(&charpoly)
            );
            (
                json!({"poly": render_poly(&f0, &field), "shift": c.map(|c| elem_json(&c, &field))}),
                result,
                text,
            )
        }
        Command::Factor { poly, method, shift, .. } => {
            let f0 = parse_poly(poly, &field, 1)?;
            let (f, c) = shifted(&f0, shift.as_deref(), &field)?;
            let kind = method_kind(*method);
            let mut fac = factorize(&f, kind, &field, &limits)?;
            if let Some(c) = &c {
                let back = [field.neg(c)];
                for (g, _) in fac.factors.iter_mut() {
                    *g = g.translate(&back, &field);
                }
                fac.sort(&field);
            }
            let text = fac
                .factors
                .iter()
                .map(|(g, a)| format!("({})^{a}\n", render_poly(g, &field)))
                .collect();
            (
                json!({
                    "poly": render_poly(&f0, &field),
                    "method": kind.name(),
                    "shift": c.map(|c| elem_json(&c, &field)),
                }),
                factors_json(&fac, &field),
                text,
            )
        }
        Command::Modp { poly, n, b, d, dump_matrix, .. } => {
            check_nvars(*n, &limits)?;
            let f = parse_poly(poly, &field, *n)?;
            let z = zeta_mod_p(&f, *n, *d, *b, &field, &limits)?;
            let mut result = zeta_json(&z);
            if *dump_matrix {
                let d = d.unwrap_or_else(|| f.total_degree().unwrap_or(0).max(*n as u32));
                let (_, m) = hyper_matrix_mod_p(&f, *n, d, &field, &limits, mode)?;
                result["matrix"] = matrix_json(&m, &field);
            }
            (
                json!({"poly": render_poly(&f, &field), "n": n, "B": b, "d": d}),
                result,
                zeta_text(&z),
            )
        }
        Command::Modpm { poly, n, m, b, d, dump_matrix, .. } => {
            check_nvars(*n, &limits)?;
            pow_checked(field.p(), *m)?;
            let f = parse_poly(poly, &field, *n)?;
            let ring = make_galois_ring(&field, *m)?;
            let z = zeta_mod_pm(&f, *m, *b, &ring, None, *d, &limits)?;
            let mut result = zeta_json(&z);
            if *dump_matrix {
                let d = d.unwrap_or_else(|| f.total_degree().unwrap_or(0).max(1));
                let lift = f.map_coeffs(&ring, |c| ring.lift(c));
                let (_, mat) = hyper_matrix_mod_pm(&lift, *n, d, &ring, &limits, mode)?;
                result["matrix"] = matrix_json(&mat, &ring);
            }
            (
                json!({"poly": render_poly(&f, &field), "n": n, "m": m, "B": b, "d": d}),
                result,
                zeta_text(&z),
            )
        }
        Command::Verify { poly, mode: vmode, n, m, b, d, method, .. } => {
            let (inputs, lhs, rhs, compared) = verify(&field, &limits, poly, *vmode, *n, *m, *b, *d, *method)?;
            let ok = lhs == rhs;
            if !ok {
                exit = 1;
            }
            let text = format!(
                "library: {}\noracle:  {}\nmatch: {ok} ({compared} terms)\n",
                lhs, rhs
            );
            (
                inputs,
                json!({"match": ok, "lhs": lhs, "rhs": rhs, "terms_compared": compared}),
                text,
            )
        }
        Command::TorusZeta { n, m, b, .. } => {
            let pm = pow_checked(field.p(), *m)?;
            let s = torus_zeta(*n, field.q(), *b, pm);
            (
                json!({"n": n, "m": m, "B": b}),
                json!({"modulus": pm, "series": s.coeffs()}),
                format!("Z(G_m^{n}) mod {pm}: [{}]\n", joined(s.coeffs())),
            )
        }
    };
    let doc = json!({
        "command": name,
        "q": field.q(),
        "p": field.p(),
        "e": field.e(),
        "modulus": field.modulus(),
        "inputs": inputs,
        "result": result,
    });
    Ok(Outcome { doc, text, exit })
}

#[allow(clippy::too_many_arguments)]
fn verify(
    field: &FieldCtx,
    limits: &Limits,
    poly: &str,
    vmode: VerifyMode,
    n: usize,
    m: u32,
    b: usize,
    d: Option<u32>,
    method: MethodArg,
) -> Result<(Value, Value, Value, usize), CliError> {
    let mode = ExecMode::default();
    let mut counter = PointCounter::new(field, limits);
    match vmode {
        VerifyMode::Modp => {
            check_nvars(n, limits)?;
            let f = parse_poly(poly, field, n)?;
            let z = zeta_mod_p(&f, n, d, b, field, limits)?;
            let counts = counter.count_vector(&f, b as u32, Domain::Affine, mode)?;
            let exact = zeta_coeffs_exact(&counts, b)?;
            Ok((
                json!({"poly": render_poly(&f, field), "mode": "modp", "n": n, "B": b, "d": d}),
                json!(z.series.coeffs()),
                json!(reduce_coeffs(&exact, field.p())),
                b + 1,
            ))
        }
        VerifyMode::Modpm => {
            check_nvars(n, limits)?;
            let pm = pow_checked(field.p(), m)?;
            let f = parse_poly(poly, field, n)?;
            let ring = make_galois_ring(field, m)?;
            let z = zeta_mod_pm(&f, m, b, &ring, None, d, limits)?;
            let counts = counter.count_vector(&f, b as u32, Domain::Torus, mode)?;
            let exact = zeta_coeffs_exact(&counts, b)?;
            Ok((
                json!({"poly": render_poly(&f, field), "mode": "modpm", "n": n, "m": m, "B": b, "d": d}),
                json!(z.series.coeffs()),
                json!(reduce_coeffs(&exact, pm)),
                b + 1,
            ))
        }
        VerifyMode::Zerodim => {
            let f = parse_poly(poly, field, 1)?;
            let zeta = FactoredZeta::from_profile(&degree_profile(&f, field)?);
            let counts = counter.count_vector(&f, b as u32, Domain::Affine, mode)?;
            let exact = zeta_coeffs_exact(&counts, b)?;
            Ok((
                json!({"poly": render_poly(&f, field), "mode": "zerodim", "B": b}),
                bigints_json(&zeta.series(b)),
                bigints_json(&exact),
                b + 1,
            ))
        }
        VerifyMode::Factor => {
            let f = monic(&parse_poly(poly, field, 1)?, field)?;
            let kind = method_kind(method);
            let lib = factorize(&f, kind, field, limits)?;
            let oracle = trial_factorize(&f, field, limits)?;
            Ok((
                json!({"poly": render_poly(&f, field), "mode": "factor", "method": kind.name()}),
                factors_json(&lib, field),
                factors_json(&oracle, field),
                lib.factors.len().max(oracle.factors.len()),
            ))
        }
    }
}
