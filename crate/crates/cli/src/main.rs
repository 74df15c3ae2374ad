//! `legasym` — evaluation, coefficient dumps, verification runs and
//! curve-sweep data emission for the extended-precision Legendre library.
//!
//! Numbers are printed as full-precision decimal strings (JSON strings /
//! CSV cells), so downstream plotting keeps every digit. Failures exit
//! nonzero with a machine-readable error code on stderr.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use legasym_core::arith::{BigComplex, BigReal, Precision};
use legasym_core::error::Error;
use legasym_core::expand::{self, Config, DegreeParam, EvalResult, FerrersWhich, LegendreKind};
use legasym_core::maps::{AnnotatedZ, CutSide};
use legasym_core::verify::{self, CurveId, RComplexCtx};
use legasym_core::{coeffs, Result};

#[derive(Parser)]
#[command(name = "legasym", about = "extended-precision Legendre/conical/Ferrers evaluation", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function of one regime at one point
    Eval(EvalArgs),
    /// Run a recorded verification experiment and compare to its targets
    Verify(VerifyArgs),
    /// Emit residual-sweep data along a named verification curve
    Sweep(SweepArgs),
    /// Dump coefficient tables (F and E polynomials, a-values)
    Coeffs(CoeffsArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Regime {
    LargeNu,
    LargeNuImagMu,
    Conical,
    LargeMu,
    LargeMuImag,
    Ferrers,
    FerrersConical,
    FerrersLargeMu,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Function {
    PMinus,
    PPlus,
    Q,
    QBranchPlus,
    QBranchMinus,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long, value_enum)]
    regime: Regime,
    /// which function of the pair (ignored by the single-function regimes)
    #[arg(long, value_enum, default_value = "p-minus")]
    function: Function,
    /// degree nu (real part)
    #[arg(long, allow_hyphen_values = true)]
    nu: Option<String>,
    /// order mu (real)
    #[arg(long)]
    mu: Option<String>,
    /// conical degree parameter tau
    #[arg(long)]
    tau: Option<String>,
    /// imaginary-order magnitude rho
    #[arg(long)]
    rho: Option<String>,
    /// complex argument "re" or "re,im"
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    /// cut side for z on (-inf, 1]: above or below
    #[arg(long)]
    side: Option<String>,
    /// real argument x in (-1, 1)
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    /// branch for the elementary large-order expansion: P(+x) vs P(-x)
    #[arg(long, default_value_t = true)]
    plus_branch: bool,
    /// truncation level N
    #[arg(long)]
    n: Option<usize>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct CommonArgs {
    /// working precision in significant decimal digits
    /// (default: LEGASYM_DIGITS or the 40-digit VERIFY profile)
    #[arg(long)]
    digits: Option<u32>,
    /// pole-disk radius r (direct evaluation requires |z-1| >= r)
    #[arg(long, default_value_t = 0.5)]
    pole_radius: f64,
    /// contour radius r' for the interior evaluation path
    #[arg(long, default_value_t = 1.0)]
    contour_radius: f64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// write sweep rows to this CSV file
    #[arg(long)]
    csv: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// which experiment: r-complex | r-cauchy | r-ferrers | s-ferrers | identities
    #[arg(long)]
    which: String,
    /// samples per curve
    #[arg(long, default_value_t = 128)]
    samples: usize,
    /// truncation override (defaults match the recorded experiments)
    #[arg(long)]
    n: Option<usize>,
    /// seed a coefficient fault of this size into E_(mu,3) (sensitivity testing)
    #[arg(long, hide = true)]
    inject_e3_perturbation: Option<f64>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct SweepArgs {
    /// ab | beta-segment | beta-real | contour | ferrers | ferrers-lg
    #[arg(long)]
    curve: String,
    #[arg(long, default_value_t = 256)]
    samples: usize,
    #[arg(long)]
    n: Option<usize>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct CoeffsArgs {
    /// order mu (real part) for the beta-family tables
    #[arg(long)]
    mu: Option<String>,
    /// imaginary part of mu
    #[arg(long, default_value = "0")]
    mu_im: String,
    /// alpha for the elementary large-order family
    #[arg(long)]
    alpha: Option<String>,
    /// alpha-tilde (conical) for the elementary family
    #[arg(long)]
    alpha_tilde: Option<String>,
    /// highest coefficient index
    #[arg(long, default_value_t = 8)]
    s_max: usize,
    #[command(flatten)]
    common: CommonArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Coeffs(a) => cmd_coeffs(a),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let code = error_code(&e);
            eprintln!("{}", serde_json::json!({ "error": e.to_string(), "code": code }));
            ExitCode::from(3)
        }
    }
}

fn error_code(e: &Error) -> &'static str {
    match e {
        Error::Config(_) => "config",
        Error::Domain { .. } => "domain",
        Error::Pole(_) => "pole",
        Error::Singularity(_) => "singularity",
        Error::Branch(_) => "branch",
        Error::Regime(_) => "regime",
        Error::Truncation { .. } => "truncation",
        Error::Quadrature { .. } => "quadrature",
        Error::Geometry(_) => "geometry",
        Error::OracleGap(_) => "oracle-gap",
        Error::Internal(_) => "internal",
    }
}

fn precision_of(common: &CommonArgs) -> Result<Precision> {
    if let Some(d) = common.digits {
        return Precision::new(d);
    }
    if let Ok(env) = std::env::var("LEGASYM_DIGITS") {
        let d: u32 = env
            .parse()
            .map_err(|_| Error::Config(format!("bad LEGASYM_DIGITS value {env:?}")))?;
        return Precision::new(d);
    }
    Ok(Precision::verify())
}

fn parse_real(name: &str, v: &Option<String>, p: &Precision) -> Result<BigReal> {
    match v {
        Some(s) => BigReal::parse(s, p),
        None => Err(Error::Config(format!("missing required parameter --{name}"))),
    }
}

fn parse_z(v: &Option<String>, side: &Option<String>, p: &Precision) -> Result<AnnotatedZ> {
    let s = v
        .as_ref()
        .ok_or_else(|| Error::Config("missing required parameter --z".into()))?;
    let (re, im) = match s.split_once(',') {
        Some((a, b)) => (BigReal::parse(a, p)?, BigReal::parse(b, p)?),
        None => (BigReal::parse(s, p)?, BigReal::zero(p)),
    };
    let side = match side.as_deref() {
        None => CutSide::None,
        Some("above") => CutSide::Above,
        Some("below") => CutSide::Below,
        Some(other) => {
            return Err(Error::Config(format!(
                "--side must be 'above' or 'below', got {other:?}"
            )))
        }
    };
    Ok(AnnotatedZ::with_side(BigComplex::new(re, im), side))
}

fn method_name(r: &EvalResult) -> &'static str {
    match r.method {
        expand::Method::Direct => "direct",
        expand::Method::Cauchy => "cauchy",
        expand::Method::Reexpanded => "reexpanded",
    }
}

fn print_eval(r: &EvalResult, p: &Precision, fmt: Format) {
    let d = p.digits();
    match fmt {
        Format::Json => {
            let rec = serde_json::json!({
                "value_re": r.value.re().to_string_digits(d),
                "value_im": r.value.im().to_string_digits(d),
                "a_re": r.a_coeff.re().to_string_digits(d),
                "a_im": r.a_coeff.im().to_string_digits(d),
                "b_re": r.b_coeff.re().to_string_digits(d),
                "b_im": r.b_coeff.im().to_string_digits(d),
                "method": method_name(r),
                "n": r.n_used,
                "digits": d,
                "last_term": format!("{:e}", r.accuracy_tag),
            });
            println!("{rec}");
        }
        Format::Csv => {
            println!("# legasym-eval v1: value_re,value_im,a_re,a_im,b_re,b_im,method,n,digits");
            println!(
                "{},{},{},{},{},{},{},{},{}",
                r.value.re().to_string_digits(d),
                r.value.im().to_string_digits(d),
                r.a_coeff.re().to_string_digits(d),
                r.a_coeff.im().to_string_digits(d),
                r.b_coeff.re().to_string_digits(d),
                r.b_coeff.im().to_string_digits(d),
                method_name(r),
                r.n_used,
                d
            );
        }
    }
}

fn cmd_eval(a: EvalArgs) -> Result<ExitCode> {
    let p = precision_of(&a.common)?;
    let mut cfg = Config::new(p, a.n.unwrap_or(11));
    cfg.pole_radius = a.common.pole_radius;
    cfg.contour_radius = a.common.contour_radius;
    let kind = match a.function {
        Function::PMinus => LegendreKind::PMinus,
        Function::PPlus => LegendreKind::PPlus,
        Function::Q => LegendreKind::Q,
        Function::QBranchPlus => LegendreKind::QBranchPlus,
        Function::QBranchMinus => LegendreKind::QBranchMinus,
    };
    let result = match a.regime {
        Regime::LargeNu => {
            let nu = parse_real("nu", &a.nu, &p)?;
            let mu = BigComplex::from_real(parse_real("mu", &a.mu, &p)?);
            let az = parse_z(&a.z, &a.side, &p)?;
            expand::legendre_large_nu(kind, &nu, &mu, &az, &cfg, None)?
        }
        Regime::LargeNuImagMu => {
            let nu = parse_real("nu", &a.nu, &p)?;
            let rho = parse_real("rho", &a.rho, &p)?;
            let az = parse_z(&a.z, &a.side, &p)?;
            if !az.z.is_real() {
                return Err(Error::Domain {
                    func: "eval",
                    msg: "the imaginary-order large-degree path takes real z > 1".into(),
                });
            }
            let vals = expand::legendre_large_nu_imag_mu(&rho, &nu, az.z.re(), &cfg)?;
            let value = match a.function {
                Function::Q => BigComplex::from_real(vals.q_irho),
                Function::PPlus => vals.p_plus,
                Function::PMinus => vals.p_minus,
                _ => BigComplex::from_real(vals.p_hat),
            };
            EvalResult {
                value,
                a_coeff: BigComplex::zero(&p),
                b_coeff: BigComplex::zero(&p),
                method: expand::Method::Direct,
                n_used: cfg.n,
                accuracy_tag: 0.0,
            }
        }
        Regime::Conical => {
            let tau = parse_real("tau", &a.tau, &p)?;
            let mu = parse_real("mu", &a.mu, &p)?;
            let az = parse_z(&a.z, &a.side, &p)?;
            expand::conical_large_tau(kind, &tau, &mu, &az, &cfg, None)?
        }
        Regime::LargeMu => {
            let mu = parse_real("mu", &a.mu, &p)?;
            let degree = degree_param(&a.nu, &a.tau, &p)?;
            let az = parse_z(&a.z, &a.side, &p)?;
            expand::legendre_large_mu(kind, &degree, &mu, &az, &cfg, None)?
        }
        Regime::LargeMuImag => {
            let rho = parse_real("rho", &a.rho, &p)?;
            let degree = degree_param(&a.nu, &a.tau, &p)?;
            let az = parse_z(&a.z, &a.side, &p)?;
            let vals = expand::legendre_large_mu_imag(&degree, &rho, &az, &cfg, None)?;
            let value = match a.function {
                Function::Q => vals.q_irho,
                _ => vals.p_minus_irho,
            };
            EvalResult {
                value,
                a_coeff: BigComplex::zero(&p),
                b_coeff: BigComplex::zero(&p),
                method: expand::Method::Direct,
                n_used: cfg.n,
                accuracy_tag: 0.0,
            }
        }
        Regime::Ferrers => {
            let nu = parse_real("nu", &a.nu, &p)?;
            let mu = parse_real("mu", &a.mu, &p)?;
            let x = parse_real("x", &a.x, &p)?;
            let which = match a.function {
                Function::Q => FerrersWhich::Q,
                _ => FerrersWhich::P,
            };
            let n = a.n.unwrap_or(5);
            let mut cfg = Config::new(p, n);
            cfg.pole_radius = a.common.pole_radius;
            expand::ferrers_large_nu(which, &nu, &mu, &x, &cfg, false)?
        }
        Regime::FerrersConical => {
            let tau = parse_real("tau", &a.tau, &p)?;
            let mu = parse_real("mu", &a.mu, &p)?;
            let x = parse_real("x", &a.x, &p)?;
            let n = a.n.unwrap_or(8);
            let cfg = Config::new(p, n);
            expand::ferrers_conical(&tau, &mu, &x, &cfg)?
        }
        Regime::FerrersLargeMu => {
            let mu = parse_real("mu", &a.mu, &p)?;
            let degree = degree_param(&a.nu, &a.tau, &p)?;
            let x = parse_real("x", &a.x, &p)?;
            let n = a.n.unwrap_or(10);
            let cfg = Config::new(p, n);
            expand::ferrers_large_mu_lg(a.plus_branch, &degree, &mu, &x, &cfg)?
        }
    };
    print_eval(&result, &p, a.common.format);
    Ok(ExitCode::SUCCESS)
}

fn degree_param(nu: &Option<String>, tau: &Option<String>, p: &Precision) -> Result<DegreeParam> {
    match (nu, tau) {
        (Some(n), None) => Ok(DegreeParam::Real(BigReal::parse(n, p)?)),
        (None, Some(t)) => Ok(DegreeParam::ConicalTau(BigReal::parse(t, p)?)),
        _ => Err(Error::Config(
            "provide exactly one of --nu (real degree) or --tau (conical degree)".into(),
        )),
    }
}

fn write_csv(path: &Option<String>, header: &str, rows: &[(f64, f64)]) -> Result<()> {
    if let Some(path) = path {
        let mut f = std::fs::File::create(path)
            .map_err(|e| Error::Config(format!("cannot create {path}: {e}")))?;
        let _ = writeln!(f, "{header}");
        for (t, v) in rows {
            let _ = writeln!(f, "{t:.17e},{v:.17e}");
        }
    }
    Ok(())
}

fn cmd_verify(a: VerifyArgs) -> Result<ExitCode> {
    let p = precision_of(&a.common)?;
    let mut failures: Vec<String> = Vec::new();
    match a.which.as_str() {
        "r-complex" => {
            let mut cfg = Config::new(p, a.n.unwrap_or(11));
            cfg.pole_radius = a.common.pole_radius;
            cfg.contour_radius = a.common.contour_radius;
            let ctx = RComplexCtx::with_perturbation(
                cfg,
                BigReal::parse("20.8", &p)?,
                BigReal::parse("4.2", &p)?,
                a.inject_e3_perturbation,
            )?;
            let rep = verify::run_r_complex(&ctx, a.samples)?;
            for (curve, sw) in &rep.per_curve {
                println!(
                    "curve {}: max |R-1| = {:e} at t = {:.6}",
                    curve.name(),
                    sw.max_value,
                    sw.max_location
                );
                write_csv(
                    &a.common.csv.as_ref().map(|c| format!("{c}.{}", curve.name())),
                    "# legasym-sweep v1: parameter,residual",
                    &sw.samples,
                )?;
            }
            let t = verify::target("r-complex-max");
            println!(
                "global max = {:e} at {:.6} on {} (recorded {:e} at {:.5})",
                rep.max_value,
                rep.max_location,
                rep.max_curve.name(),
                t.value,
                t.location.unwrap()
            );
            if let Err(e) = verify::check_target(t, rep.max_value, Some(rep.max_location)) {
                failures.push(e);
            }
            if rep.max_curve != CurveId::SemiCircle {
                failures.push(format!("max attained on {}, not AB", rep.max_curve.name()));
            }
        }
        "r-cauchy" => {
            let mut cfg = Config::new(p, a.n.unwrap_or(11));
            cfg.pole_radius = a.common.pole_radius;
            cfg.contour_radius = a.common.contour_radius;
            let ctx = RComplexCtx::with_perturbation(
                cfg,
                BigReal::parse("20.8", &p)?,
                BigReal::parse("4.2", &p)?,
                a.inject_e3_perturbation,
            )?;
            let rep = verify::run_r_cauchy(&ctx, a.samples)?;
            println!(
                "max |R-hat - 1| = {:e} at theta = {:.6}; l0(1/2) = {:.11}, l0(3/2) = {:.11}; bound = {:e}",
                rep.max_value, rep.max_location, rep.l0_at_half, rep.l0_at_three_half, rep.bound
            );
            write_csv(
                &a.common.csv,
                "# legasym-sweep v1: theta,residual",
                &rep.sweep.samples,
            )?;
            for (id, val, loc) in [
                ("r-cauchy-max", rep.max_value, Some(rep.max_location)),
                ("l0-max", rep.l0_max, None),
                ("cauchy-bound", rep.bound, None),
            ] {
                if let Err(e) = verify::check_target(verify::target(id), val, loc) {
                    failures.push(e);
                }
            }
        }
        "r-ferrers" => {
            let cfg = Config::new(p, a.n.unwrap_or(5));
            let rep = verify::run_r_ferrers(
                &cfg,
                &BigReal::parse("20.8", &p)?,
                &BigReal::parse("4.2", &p)?,
                a.samples,
            )?;
            println!(
                "sup |Rbar - 1| = {:e} at x = {:.6}",
                rep.sup_value, rep.sup_location
            );
            write_csv(&a.common.csv, "# legasym-sweep v1: x,residual", &rep.samples)?;
            if let Err(e) = verify::check_target(
                verify::target("r-ferrers-sup"),
                rep.sup_value,
                Some(rep.sup_location),
            ) {
                failures.push(e);
            }
        }
        "s-ferrers" => {
            let cfg = Config::new(p, a.n.unwrap_or(10));
            let rep = verify::run_s_ferrers(
                &cfg,
                &BigReal::parse("4.8", &p)?,
                &BigReal::parse("20.3", &p)?,
                a.samples,
            )?;
            println!(
                "sup |S - 1| = {:e} at x = {:.6}",
                rep.sup_value, rep.sup_location
            );
            write_csv(&a.common.csv, "# legasym-sweep v1: x,residual", &rep.samples)?;
            if let Err(e) = verify::check_target(
                verify::target("s-ferrers-sup"),
                rep.sup_value,
                Some(rep.sup_location),
            ) {
                failures.push(e);
            }
        }
        "identities" => {
            let rep = verify::run_identities(&p)?;
            for (name, v) in &rep.rows {
                println!("{name}: {v:e}");
            }
            let tol = 10f64.powi(6 - p.digits() as i32);
            if rep.max_residual > tol {
                failures.push(format!(
                    "oracle identity residual {:e} above {tol:e}",
                    rep.max_residual
                ));
            }
        }
        other => {
            return Err(Error::Config(format!(
                "unknown experiment {other:?}; use r-complex | r-cauchy | r-ferrers | s-ferrers | identities"
            )))
        }
    }
    if failures.is_empty() {
        println!("verify {}: PASS", a.which);
        Ok(ExitCode::SUCCESS)
    } else {
        println!("verify {}: FAIL", a.which);
        for f in &failures {
            println!("  - {f}");
        }
        Ok(ExitCode::from(2))
    }
}

fn cmd_sweep(a: SweepArgs) -> Result<ExitCode> {
    let p = precision_of(&a.common)?;
    let rows: Vec<(f64, f64)>;
    let header: &str;
    match a.curve.as_str() {
        "ab" | "beta-segment" | "beta-real" => {
            let cfg = Config::new(p, a.n.unwrap_or(11));
            let ctx = RComplexCtx::new(cfg, BigReal::parse("20.8", &p)?, BigReal::parse("4.2", &p)?)?;
            let curve = match a.curve.as_str() {
                "ab" => CurveId::SemiCircle,
                "beta-segment" => CurveId::BetaSegment,
                _ => CurveId::BetaReal,
            };
            let sw = verify::sweep_r_complex(&ctx, curve, a.samples)?;
            println!(
                "# max |R-1| = {:e} at parameter {:.6}",
                sw.max_value, sw.max_location
            );
            rows = sw.samples;
            header = "# legasym-sweep v1: parameter,residual";
        }
        "contour" => {
            let cfg = Config::new(p, a.n.unwrap_or(11));
            let ctx = RComplexCtx::new(cfg, BigReal::parse("20.8", &p)?, BigReal::parse("4.2", &p)?)?;
            let rep = verify::run_r_cauchy(&ctx, a.samples)?;
            println!(
                "# max |R-hat - 1| = {:e} at theta = {:.6}",
                rep.max_value, rep.max_location
            );
            rows = rep.sweep.samples;
            header = "# legasym-sweep v1: theta,residual";
        }
        "ferrers" => {
            let cfg = Config::new(p, a.n.unwrap_or(5));
            let rep = verify::run_r_ferrers(
                &cfg,
                &BigReal::parse("20.8", &p)?,
                &BigReal::parse("4.2", &p)?,
                a.samples,
            )?;
            println!("# sup = {:e} at x = {:.6}", rep.sup_value, rep.sup_location);
            rows = rep.samples;
            header = "# legasym-sweep v1: x,residual";
        }
        "ferrers-lg" => {
            let cfg = Config::new(p, a.n.unwrap_or(10));
            let rep = verify::run_s_ferrers(
                &cfg,
                &BigReal::parse("4.8", &p)?,
                &BigReal::parse("20.3", &p)?,
                a.samples,
            )?;
            println!("# sup = {:e} at x = {:.6}", rep.sup_value, rep.sup_location);
            rows = rep.samples;
            header = "# legasym-sweep v1: x,residual";
        }
        other => {
            return Err(Error::Config(format!(
                "unknown curve {other:?}; use ab | beta-segment | beta-real | contour | ferrers | ferrers-lg"
            )))
        }
    }
    println!("{header}");
    for (t, v) in &rows {
        println!("{t:.17e},{v:.17e}");
    }
    write_csv(&a.common.csv, header, &rows)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_coeffs(a: CoeffsArgs) -> Result<ExitCode> {
    let p = precision_of(&a.common)?;
    if a.s_max > 16 {
        return Err(Error::Config("s-max is capped at 16".into()));
    }
    let d = p.digits();
    let table = match (&a.mu, &a.alpha, &a.alpha_tilde) {
        (Some(mu), None, None) => {
            let mu_c = BigComplex::new(BigReal::parse(mu, &p)?, BigReal::parse(&a.mu_im, &p)?);
            coeffs::build_f_e(&mu_c, a.s_max, &p)?
        }
        (None, Some(alpha), None) => {
            let al = BigReal::parse(alpha, &p)?;
            coeffs::build_lg_f_e(&al.square(), a.s_max, &p)?
        }
        (None, None, Some(at)) => {
            let al = BigReal::parse(at, &p)?;
            coeffs::build_lg_f_e(&-&al.square(), a.s_max, &p)?
        }
        _ => {
            return Err(Error::Config(
                "provide exactly one of --mu, --alpha, --alpha-tilde".into(),
            ))
        }
    };
    let poly_json = |poly: &coeffs::Poly| -> serde_json::Value {
        serde_json::Value::Array(
            poly.c
                .iter()
                .map(|c| {
                    serde_json::json!([
                        c.re().to_string_digits(d),
                        c.im().to_string_digits(d)
                    ])
                })
                .collect(),
        )
    };
    match a.common.format {
        Format::Json => {
            let rec = serde_json::json!({
                "parameter_re": table.param.re().to_string_digits(d),
                "parameter_im": table.param.im().to_string_digits(d),
                "s_max": table.s_max,
                "f_polynomials": table.f.iter().map(&poly_json).collect::<Vec<_>>(),
                "e_polynomials": table.e.iter().map(&poly_json).collect::<Vec<_>>(),
                "a_values": table
                    .a_plain
                    .iter()
                    .map(|v| v.re().to_string_digits(d))
                    .collect::<Vec<_>>(),
                "a_tilde_values": table
                    .a_tilde
                    .iter()
                    .map(|v| v.re().to_string_digits(d))
                    .collect::<Vec<_>>(),
                "digits": d,
            });
            println!("{rec}");
        }
        Format::Csv => {
            println!("# legasym-coeffs v1: kind,s,degree,coefficients...");
            for (i, poly) in table.f.iter().enumerate() {
                let cs: Vec<String> = poly.c.iter().map(|c| c.re().to_string_digits(d)).collect();
                println!("F,{},{},{}", i + 1, poly.degree(), cs.join(","));
            }
            for (i, poly) in table.e.iter().enumerate() {
                let cs: Vec<String> = poly.c.iter().map(|c| c.re().to_string_digits(d)).collect();
                println!("E,{},{},{}", i + 1, poly.degree(), cs.join(","));
            }
            for (i, v) in table.a_plain.iter().enumerate() {
                println!("a,{},0,{}", i + 1, v.re().to_string_digits(d));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
