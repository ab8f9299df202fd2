//! The `pvzeta` command line.
//!
//! Exit codes: 0 on success, 1 when a computation or verification fails,
//! 2 on usage errors (bad arguments, unknown spaces).

use crate::gamma_factor::{self, DEFAULT_BASIS};
use crate::poly::{fmt_rat, parse_rat, rat_to_f64};
use crate::registry::{self, builtin_space, builtin_spaces, PvsDescriptor};
use crate::schwartz::{basis, PsiCharacter, TestFunction};
use crate::verify::{verify_space, VerifyReport};
use crate::weyl;
use crate::zeta::{self, EtaVector, QuadConfig, ZetaError};
use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "pvzeta", version, about = "Local zeta integrals and gamma matrices on prehomogeneous vector spaces")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Worker threads (defaults to PVZETA_THREADS, then all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Relative tolerance of the radial quadrature.
    #[arg(long, global = true, default_value_t = 1e-9)]
    rel_tol: f64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the built-in spaces, or print one descriptor as JSON.
    Spaces {
        #[arg(long)]
        json: Option<String>,
    },
    /// Evaluate Z_λ(η, ξ) on a λ grid and write CSV.
    Zeta {
        space: String,
        /// Orbit coefficients, comma separated (default: all ones).
        #[arg(long)]
        eta: Option<String>,
        /// Basis test function `n,deg,idx` (default: the standard Gaussian).
        #[arg(long)]
        xi: Option<String>,
        /// `re0:re1:steps,im`
        #[arg(long, default_value = "0.6:2:8,0", allow_hyphen_values = true)]
        lambda_grid: String,
        /// Multiply by the Γ-product denominator L(λ).
        #[arg(long)]
        lz: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extract the γ-matrix at one λ and write JSON.
    Gamma {
        space: String,
        /// `re` or `re,im`
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Rational character parameter a of ψ_a(x) = e^{2πiax}.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        psi: String,
        #[arg(long, default_value_t = DEFAULT_BASIS)]
        basis: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print and certify the b-function.
    Bfun { space: String },
    /// Capelli eigenvalue of h^M·ȟ(∂)^M and its twisted shifts.
    Capelli {
        space: String,
        #[arg(long = "M", default_value_t = 1)]
        big_m: u32,
    },
    /// Pole candidates of Z in a real λ range with residues.
    Poles {
        space: String,
        /// `lo:hi` (default: three units below the convergence boundary)
        #[arg(long, allow_hyphen_values = true)]
        range: Option<String>,
        #[arg(long)]
        eta: Option<String>,
        #[arg(long)]
        xi: Option<String>,
    },
    /// Run the verification suite on a space, or `all`.
    Verify {
        #[arg(default_value = "all")]
        space: String,
        /// Print the JSON report instead of PASS/FAIL lines.
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Failed(String),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Failed(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn failed(e: impl std::fmt::Display) -> CliError {
    CliError::Failed(e.to_string())
}

/// A built-in name (optionally with `_DUAL`) or a path to a descriptor JSON file.
fn resolve_space(name: &str) -> Result<PvsDescriptor, CliError> {
    if name.ends_with(".json") {
        let text = std::fs::read_to_string(name).map_err(|e| usage(format!("{name}: {e}")))?;
        return registry::from_json(&text).map_err(|e| usage(e.to_string()));
    }
    builtin_space(name).map_err(|e| usage(e.to_string()))
}

fn parse_f64(s: &str) -> Result<f64, CliError> {
    s.trim().parse().map_err(|_| usage(format!("not a number: {s:?}")))
}

fn parse_complex(s: &str) -> Result<Complex64, CliError> {
    match s.split_once(',') {
        Some((re, im)) => Ok(Complex64::new(parse_f64(re)?, parse_f64(im)?)),
        None => Ok(Complex64::new(parse_f64(s)?, 0.0)),
    }
}

fn parse_grid(s: &str) -> Result<Vec<Complex64>, CliError> {
    let (range, im) = s.split_once(',').unwrap_or((s, "0"));
    let parts: Vec<&str> = range.split(':').collect();
    let [lo, hi, steps] = parts[..] else { return Err(usage(format!("grid must be re0:re1:steps,im, got {s:?}"))) };
    let (lo, hi, im) = (parse_f64(lo)?, parse_f64(hi)?, parse_f64(im)?);
    let steps: usize = steps.trim().parse().map_err(|_| usage(format!("bad step count in {s:?}")))?;
    if steps == 0 {
        return Err(usage("grid needs at least one step"));
    }
    if steps == 1 {
        return Ok(vec![Complex64::new(lo, im)]);
    }
    Ok((0..steps).map(|j| Complex64::new(lo + (hi - lo) * j as f64 / (steps - 1) as f64, im)).collect())
}

fn parse_range(s: &str) -> Result<(f64, f64), CliError> {
    let (lo, hi) = s.split_once(':').ok_or_else(|| usage(format!("range must be lo:hi, got {s:?}")))?;
    Ok((parse_f64(lo)?, parse_f64(hi)?))
}

fn parse_eta(s: Option<&str>, k: usize) -> Result<EtaVector, CliError> {
    let Some(s) = s else { return Ok(EtaVector::ones(k)) };
    let cs = s.split(',').map(parse_f64).collect::<Result<Vec<_>, _>>()?;
    if cs.len() != k {
        return Err(usage(format!("--eta has {} entries, the space has {k} orbits", cs.len())));
    }
    Ok(EtaVector::from_real(&cs))
}

fn parse_xi(s: Option<&str>, dim: usize) -> Result<TestFunction, CliError> {
    let Some(s) = s else { return Ok(TestFunction::gaussian(dim)) };
    let parts = s.split(',').map(|p| p.trim().parse::<usize>()).collect::<Result<Vec<_>, _>>().map_err(|_| usage(format!("--xi must be n,deg,idx, got {s:?}")))?;
    let [n, deg, idx] = parts[..] else { return Err(usage(format!("--xi must be n,deg,idx, got {s:?}"))) };
    if n != dim {
        return Err(usage(format!("--xi has n = {n}, the space has dimension {dim}")));
    }
    let b = basis(n, deg as u32);
    let len = b.len();
    b.into_iter().nth(idx).ok_or_else(|| usage(format!("--xi index {idx} out of range (basis has {len} functions)")))
}

fn flag(e: &ZetaError) -> &'static str {
    match e {
        ZetaError::NearPole { .. } => "NEAR_POLE",
        ZetaError::OutOfRange { .. } => "OUT_OF_RANGE",
        ZetaError::QuadratureFailure { .. } => "QUADRATURE",
        ZetaError::Inconsistent { .. } => "INCONSISTENT",
        ZetaError::EtaLength { .. } => "ETA_LENGTH",
        ZetaError::Weyl(_) => "SYMBOLIC",
    }
}

fn cmd_spaces(json: Option<String>, out: &mut dyn Write) -> Result<(), CliError> {
    if let Some(name) = json {
        let d = resolve_space(&name)?;
        writeln!(out, "{}", registry::to_json(&d).map_err(failed)?)?;
        return Ok(());
    }
    writeln!(out, "{:<8} {:>3} {:>6} {:>4} {:>6}  b(s)", "name", "n", "orbits", "deg", "kappa")?;
    for d in builtin_spaces() {
        writeln!(out, "{:<8} {:>3} {:>6} {:>4} {:>6}  {}", d.name, d.dim, d.orbit_count(), d.degrees[0].primal, fmt_rat(&d.kappa[0]), d.b())?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_zeta(desc: &PvsDescriptor, eta: Option<&str>, xi: Option<&str>, grid: &str, lz: bool, cfg: &QuadConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let k = desc.orbit_count();
    let eta = parse_eta(eta, k)?;
    let xi = parse_xi(xi, desc.dim)?;
    let grid = parse_grid(grid)?;
    let rows = if lz { zeta::lz_grid(desc, &eta, &xi, &grid, cfg) } else { zeta::zeta_grid(desc, &eta, &xi, &grid, cfg) };
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["lambda_re".to_string(), "lambda_im".to_string()];
    for i in 0..k {
        header.push(format!("orbit_{i}_re"));
        header.push(format!("orbit_{i}_im"));
    }
    header.extend(["total_re", "total_im", "err", "flags"].map(String::from));
    w.write_record(&header).map_err(failed)?;
    for (l, r) in rows {
        let mut rec = vec![l.re.to_string(), l.im.to_string()];
        match r {
            Ok(z) => {
                for v in &z.orbit_breakdown {
                    rec.push(v.re.to_string());
                    rec.push(v.im.to_string());
                }
                rec.extend([z.value.re.to_string(), z.value.im.to_string(), format!("{:e}", z.abs_error_estimate)]);
                rec.push(if z.continuation_steps > 0 { format!("CONTINUED_M{}", z.continuation_steps) } else { String::new() });
            }
            Err(e) => {
                rec.extend(std::iter::repeat_n("NaN".to_string(), 2 * k + 3));
                rec.push(flag(&e).to_string());
            }
        }
        w.write_record(&rec).map_err(failed)?;
    }
    w.flush()?;
    Ok(())
}

fn cmd_gamma(desc: &PvsDescriptor, lambda: &str, psi: &str, basis_size: usize, cfg: &QuadConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let lambda = parse_complex(lambda)?;
    let a = parse_rat(psi).ok_or_else(|| usage(format!("--psi must be a rational, got {psi:?}")))?;
    let psi = PsiCharacter::new(a).map_err(|e| usage(e.to_string()))?;
    let g = gamma_factor::extract_gamma(desc, lambda, &psi, basis_size, cfg).map_err(failed)?;
    if g.flagged {
        eprintln!("warning: condition number {:.3e} exceeds {:.0e}", g.condition_number, gamma_factor::FLAG_CONDITION);
    }
    writeln!(out, "{}", serde_json::to_string_pretty(&g).map_err(failed)?)?;
    Ok(())
}

fn cmd_bfun(desc: &PvsDescriptor, out: &mut dyn Write) -> Result<(), CliError> {
    let b = weyl::b_function(desc.f(), desc.fdual()).map_err(failed)?;
    let certified = weyl::bernstein_remainder(desc.f(), desc.fdual(), &b).is_zero();
    writeln!(out, "{}: b(s) = {b}", desc.name)?;
    for line in b.factor().lines() {
        writeln!(out, "  {line}")?;
    }
    writeln!(out, "certified: {certified}")?;
    if b != *desc.b() {
        return Err(failed(format!("registry b(s) = {} disagrees with the computed {b}", desc.b())));
    }
    if !certified {
        return Err(failed("nonzero Bernstein remainder"));
    }
    Ok(())
}

fn cmd_capelli(desc: &PvsDescriptor, big_m: u32, out: &mut dyn Write) -> Result<(), CliError> {
    if big_m == 0 {
        return Err(usage("--M must be at least 1"));
    }
    let c = weyl::capelli_eigenvalue(desc, big_m).map_err(failed)?;
    writeln!(out, "{}: c_{big_m}(s) = {c}", desc.name)?;
    for line in c.factor().lines() {
        writeln!(out, "  {line}")?;
    }
    let mut ok = true;
    for m in -2..=2 {
        let t = weyl::twisted_capelli_eigenvalue(desc, big_m, m).map_err(failed)?;
        let pass = weyl::twist_shift_check(desc, big_m, m).map_err(failed)?;
        ok &= pass;
        writeln!(out, "  m = {m:>2}: {t}  [{}]", if pass { "ok" } else { "MISMATCH" })?;
    }
    let lead = weyl::leading_coeff_at(desc, big_m).map_err(failed)?;
    writeln!(out, "leading coefficient at the degree shift: {}", fmt_rat(&lead))?;
    if !ok {
        return Err(failed("twisted eigenvalue is not the shifted c(s)"));
    }
    Ok(())
}

fn default_range(desc: &PvsDescriptor) -> (f64, f64) {
    let kappa = rat_to_f64(&desc.kappa[0]);
    if desc.lambda_orientation > 0 {
        (kappa - 3.0, kappa + 0.5)
    } else {
        (-kappa - 0.5, -kappa + 3.0)
    }
}

fn cmd_poles(desc: &PvsDescriptor, range: Option<&str>, eta: Option<&str>, xi: Option<&str>, cfg: &QuadConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let (lo, hi) = match range {
        Some(r) => parse_range(r)?,
        None => default_range(desc),
    };
    let eta = parse_eta(eta, desc.orbit_count())?;
    let xi = parse_xi(xi, desc.dim)?;
    let den = weyl::denominator(desc).map_err(failed)?;
    writeln!(out, "{}: L(λ) = {}", desc.name, den.describe())?;
    writeln!(out, "{:>10}  {:>22}  {:>22}", "lambda", "residue_re", "residue_im")?;
    for (l, r) in zeta::pole_table(desc, &eta, &xi, lo, hi, cfg).map_err(failed)? {
        match r {
            Ok(z) => writeln!(out, "{l:>10.4}  {:>22.12e}  {:>22.12e}", z.re, z.im)?,
            Err(e) => writeln!(out, "{l:>10.4}  {}", e)?,
        }
    }
    Ok(())
}

fn cmd_verify(space: &str, json: bool, out_path: Option<&PathBuf>, cfg: &QuadConfig, out: &mut dyn Write) -> Result<bool, CliError> {
    let spaces = if space == "all" { builtin_spaces() } else { vec![resolve_space(space)?] };
    let reports: Vec<VerifyReport> = spaces.iter().map(|d| verify_space(d, cfg)).collect();
    let text = serde_json::to_string_pretty(&reports).map_err(failed)?;
    if let Some(p) = out_path {
        std::fs::write(p, &text)?;
    }
    if json {
        writeln!(out, "{text}")?;
    } else {
        for r in &reports {
            for c in &r.checks {
                writeln!(out, "{} {} {} (criterion {}, deviation {:.3e}, tolerance {:.1e})", if c.passed { "PASS" } else { "FAIL" }, r.space, c.id, c.criterion, c.deviation, c.tolerance)?;
            }
        }
    }
    Ok(reports.iter().all(|r| r.passed))
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<bool, CliError> {
    let cfg = QuadConfig { rel_tol: cli.global.rel_tol, threads: cli.global.threads, ..QuadConfig::default() };
    if !(cfg.rel_tol > 0.0) {
        return Err(usage("--rel-tol must be positive"));
    }
    match cli.command {
        Command::Spaces { json } => cmd_spaces(json, out)?,
        Command::Zeta { space, eta, xi, lambda_grid, lz, out: path } => {
            let d = resolve_space(&space)?;
            with_target(path.as_ref(), out, |w| cmd_zeta(&d, eta.as_deref(), xi.as_deref(), &lambda_grid, lz, &cfg, w))?
        }
        Command::Gamma { space, lambda, psi, basis, out: path } => {
            let d = resolve_space(&space)?;
            with_target(path.as_ref(), out, |w| cmd_gamma(&d, &lambda, &psi, basis, &cfg, w))?
        }
        Command::Bfun { space } => cmd_bfun(&resolve_space(&space)?, out)?,
        Command::Capelli { space, big_m } => cmd_capelli(&resolve_space(&space)?, big_m, out)?,
        Command::Poles { space, range, eta, xi } => cmd_poles(&resolve_space(&space)?, range.as_deref(), eta.as_deref(), xi.as_deref(), &cfg, out)?,
        Command::Verify { space, json, out: path } => return cmd_verify(&space, json, path.as_ref(), &cfg, out),
    }
    Ok(true)
}

/// Sends output to `path` when given, else to `out`.
fn with_target(path: Option<&PathBuf>, out: &mut dyn Write, f: impl FnOnce(&mut dyn Write) -> Result<(), CliError>) -> Result<(), CliError> {
    match path {
        Some(p) => {
            let mut file = std::io::BufWriter::new(std::fs::File::create(p)?);
            f(&mut file)?;
            file.flush()?;
            Ok(())
        }
        None => f(out),
    }
}

/// Runs the CLI on `argv` (including the program name), writing to `out`.
pub fn run_with_output<I, T>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            2
        }
        Err(CliError::Failed(m)) => {
            eprintln!("error: {m}");
            1
        }
    }
}

/// Runs the CLI on `argv`, writing to stdout.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with_output(argv, &mut std::io::stdout().lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        let g = parse_grid("-0.4:2:25,0").unwrap();
        assert_eq!(g.len(), 25);
        assert!((g[1].re + 0.3).abs() < 1e-12 && (g[24].re - 2.0).abs() < 1e-12);
        assert!(matches!(parse_grid("1:2"), Err(CliError::Usage(_))));
        assert_eq!(parse_complex("0.5,-1").unwrap(), Complex64::new(0.5, -1.0));
    }

    #[test]
    fn xi_parsing() {
        assert_eq!(parse_xi(Some("2,2,3"), 2).unwrap(), basis(2, 2)[3]);
        assert!(matches!(parse_xi(Some("3,2,0"), 2), Err(CliError::Usage(_))));
        assert!(matches!(parse_xi(Some("2,1,99"), 2), Err(CliError::Usage(_))));
    }
}
