//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a check fails, 2 on a usage or input
//! error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::genfunc::{o_bialt, schur_bialt, sp_bialt};
use crate::identity::{
    check_branching_o, check_branching_sp, check_cauchy, check_skew_cauchy_bcd, check_skew_cauchy_schur, run_suite,
    CheckReport, Family, SuiteBounds, Value,
};
use crate::partition::GeneralizedPartition;
use crate::skew_bcd::{o_jt, skew_o_gt, skew_o_jt, skew_sp_gt, skew_sp_jt, sp_jt, sstar};
use crate::skew_schur::{schur_jt, skew_schur_gt, skew_schur_jt};

#[derive(Parser, Debug)]
#[command(name = "schurlab", version, about = "Exact Schur, symplectic and orthogonal Schur functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute one function.
    Compute {
        #[arg(value_enum)]
        family: FunctionFamily,
        /// Comma-separated parts; trailing zeros are kept.
        #[arg(long)]
        lambda: GeneralizedPartition,
        #[arg(long, default_value = "")]
        mu: GeneralizedPartition,
        #[arg(long)]
        nvars: usize,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a verification suite and print one report per check.
    Verify {
        #[arg(value_parser = crate::identity::SUITES)]
        suite: String,
        #[arg(long)]
        max_weight: Option<u32>,
        #[arg(long)]
        max_nvars: Option<usize>,
        #[arg(long)]
        degree: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Expand both sides of one identity instance.
    Expand {
        #[arg(value_enum)]
        identity: Identity,
        #[arg(long, value_enum, default_value_t = CauchyFamily::S)]
        family: CauchyFamily,
        #[arg(long, default_value = "")]
        lambda: GeneralizedPartition,
        #[arg(long, default_value = "")]
        mu: GeneralizedPartition,
        /// Size of the x alphabet.
        #[arg(long)]
        nvars: usize,
        /// Size of the y alphabet (skew Cauchy and branching).
        #[arg(long)]
        kvars: Option<usize>,
        #[arg(long, default_value_t = 4)]
        degree: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FunctionFamily {
    S,
    Sp,
    O,
    SkewS,
    SkewSp,
    SkewO,
    Sstar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Jt,
    Gt,
    Bialternant,
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    Cauchy,
    SkewCauchy,
    Branching,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CauchyFamily {
    S,
    Sp,
    O,
}

impl From<CauchyFamily> for Family {
    fn from(f: CauchyFamily) -> Family {
        match f {
            CauchyFamily::S => Family::Schur,
            CauchyFamily::Sp => Family::Sp,
            CauchyFamily::O => Family::O,
        }
    }
}

enum Failure {
    Usage(String),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

fn pad(la: &GeneralizedPartition, n: usize) -> Result<GeneralizedPartition> {
    la.padded(n).ok_or(Error::LengthMismatch { expected: n, actual: la.len() })
}

/// Evaluates a `compute` request.
pub fn compute(
    family: FunctionFamily,
    la: &GeneralizedPartition,
    mu: &GeneralizedPartition,
    nvars: usize,
    method: Method,
) -> Result<Value> {
    use FunctionFamily as F;
    use Method as M;
    let empty = GeneralizedPartition::empty();
    let unsupported = || Error::UnsupportedConfiguration(format!("--method {method:?} is not available for {family:?}").to_lowercase());
    Ok(match (family, method) {
        (F::S, M::Jt | M::Auto) => schur_jt(la, nvars).into(),
        (F::S, M::Gt) => skew_schur_gt(la, &empty, nvars).into(),
        (F::S, M::Bialternant) => schur_bialt(la, nvars)?.into(),
        (F::Sp, M::Jt | M::Auto) => sp_jt(la, nvars)?.into(),
        (F::Sp, M::Gt) => skew_sp_gt(&pad(la, nvars)?, &empty, nvars)?.into(),
        (F::Sp, M::Bialternant) => sp_bialt(la, nvars)?.into(),
        (F::O, M::Jt | M::Auto) => o_jt(la, nvars)?.into(),
        (F::O, M::Gt) => skew_o_gt(&pad(la, nvars)?, &empty, nvars)?.into(),
        (F::O, M::Bialternant) => o_bialt(la, nvars)?.into(),
        (F::SkewS, M::Jt | M::Auto) => skew_schur_jt(la, mu, nvars).into(),
        (F::SkewS, M::Gt) => skew_schur_gt(la, mu, nvars).into(),
        (F::SkewSp, M::Jt | M::Auto) => skew_sp_jt(la, mu, nvars)?.into(),
        (F::SkewSp, M::Gt) => skew_sp_gt(la, mu, nvars)?.into(),
        (F::SkewO, M::Jt | M::Auto) => skew_o_jt(la, mu, nvars)?.into(),
        (F::SkewO, M::Gt) => skew_o_gt(la, mu, nvars)?.into(),
        (F::Sstar, M::Jt | M::Auto) => sstar(la, mu, nvars)?.into(),
        _ => return Err(unsupported()),
    })
}

fn value_json(v: &Value) -> String {
    serde_json::to_string(v).expect("values serialize")
}

fn var_names(nx: usize, ny: usize) -> Vec<String> {
    (1..=nx).map(|i| format!("x{i}")).chain((1..=ny).map(|j| format!("y{j}"))).collect()
}

fn value_text(v: &Value, names: &[String]) -> String {
    match v {
        Value::Poly(p) => p.display_with(names).to_string(),
        Value::Rational(r) => format!(
            "({}) / ({})",
            r.numerator().display_with(names),
            r.denominator().display_with(names)
        ),
    }
}

fn report_text(r: &CheckReport) -> String {
    format!(
        "{} {} {}",
        if r.passed { "PASS" } else { "FAIL" },
        r.identity_id,
        serde_json::to_string(&r.parameters).expect("parameters serialize")
    )
}

/// Parses `args` (program name first) and runs the command, writing results
/// to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Compute(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> std::result::Result<i32, Failure> {
    let io = |e: std::io::Error| Failure::Usage(format!("cannot write output: {e}"));
    match cmd {
        Command::Compute { family, lambda, mu, nvars, method, format } => {
            let uses_mu = matches!(
                family,
                FunctionFamily::SkewS | FunctionFamily::SkewSp | FunctionFamily::SkewO | FunctionFamily::Sstar
            );
            if !uses_mu && !mu.is_empty() {
                return Err(Failure::Usage(format!("--mu is not accepted for {family:?}").to_lowercase()));
            }
            let v = compute(family, &lambda, &mu, nvars, method)?;
            match format {
                Format::Json => writeln!(out, "{}", value_json(&v)).map_err(io)?,
                Format::Text => writeln!(out, "{}", value_text(&v, &var_names(nvars, 0))).map_err(io)?,
            }
            Ok(0)
        }
        Command::Verify { suite, max_weight, max_nvars, degree, format } => {
            let reports = run_suite(&suite, SuiteBounds { max_weight, max_nvars, degree })?;
            write_reports(&suite, &reports, format, out, err)
        }
        Command::Expand { identity, family, lambda, mu, nvars, kvars, degree, format } => {
            let (report, nx, ny) = match identity {
                Identity::Cauchy => (check_cauchy(family.into(), nvars, degree)?, nvars, nvars),
                Identity::SkewCauchy => {
                    let k = kvars.ok_or_else(|| Failure::Usage("--kvars is required for skew-cauchy".into()))?;
                    let r = match family {
                        CauchyFamily::S => check_skew_cauchy_schur(&lambda, &mu, nvars, k, degree)?,
                        f => check_skew_cauchy_bcd(f.into(), &lambda, &mu, nvars, k, degree)?,
                    };
                    (r, nvars, k)
                }
                Identity::Branching => {
                    let k = kvars.ok_or_else(|| Failure::Usage("--kvars is required for branching".into()))?;
                    let r = match family {
                        CauchyFamily::Sp => check_branching_sp(&lambda, nvars, k)?,
                        CauchyFamily::O => check_branching_o(&lambda, nvars, k)?,
                        CauchyFamily::S => {
                            return Err(Failure::Usage("--family must be sp or o for branching".into()));
                        }
                    };
                    (r, nvars - k, k)
                }
            };
            match format {
                Format::Json => writeln!(out, "{}", report.to_json_line()).map_err(io)?,
                Format::Text => {
                    let names = var_names(nx, ny);
                    writeln!(out, "lhs: {}", value_text(&report.lhs, &names)).map_err(io)?;
                    writeln!(out, "rhs: {}", value_text(&report.rhs, &names)).map_err(io)?;
                    writeln!(out, "{}", report_text(&report)).map_err(io)?;
                }
            }
            Ok(if report.passed { 0 } else { 1 })
        }
    }
}

/// Writes one line per report and a summary to `err`; exit 1 if any failed.
fn write_reports(
    suite: &str,
    reports: &[CheckReport],
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::result::Result<i32, Failure> {
    let io = |e: std::io::Error| Failure::Usage(format!("cannot write output: {e}"));
    let failed = reports.iter().filter(|r| !r.passed).count();
    for r in reports {
        match format {
            Format::Json => writeln!(out, "{}", r.to_json_line()).map_err(io)?,
            Format::Text => writeln!(out, "{}", report_text(r)).map_err(io)?,
        }
    }
    let _ = writeln!(err, "{suite}: {} checks, {failed} failed", reports.len());
    Ok(if failed == 0 { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("schurlab").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn compute_text() {
        let (code, out, _) = run_args(&["compute", "sp", "--lambda", "1", "--nvars", "1"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "x1 + x1^-1");
    }

    #[test]
    fn length_mismatch_is_an_input_error() {
        let (code, _, err) = run_args(&["compute", "skew-sp", "--lambda", "3,1", "--mu", "2", "--nvars", "2"]);
        assert_eq!(code, 2);
        assert!(err.contains("length mismatch"), "{err}");
        let (code, _, _) = run_args(&["compute", "skew-sp", "--lambda", "3,1", "--mu", "2", "--nvars", "1", "--method", "gt"]);
        assert_eq!(code, 0);
    }

    #[test]
    fn usage_errors_name_the_flag() {
        let (code, _, err) = run_args(&["compute", "sp", "--lambda", "1,2", "--nvars", "1"]);
        assert_eq!(code, 2);
        assert!(err.contains("--lambda"), "{err}");
        let (code, _, err) = run_args(&["compute", "sp", "--nvars", "1"]);
        assert_eq!(code, 2);
        assert!(err.contains("--lambda"), "{err}");
        let (code, _, err) = run_args(&["compute", "skew-sp", "--lambda", "1", "--nvars", "1", "--method", "bialternant"]);
        assert_eq!(code, 2);
        assert!(err.contains("--method"), "{err}");
    }

    #[test]
    fn json_round_trip() {
        let (code, out, _) = run_args(&["compute", "o", "--lambda", "2,1", "--nvars", "2", "--format", "json"]);
        assert_eq!(code, 0);
        assert_eq!(LaurentPoly::from_json(out.trim()).unwrap(), o_jt(&crate::gp![2, 1], 2).unwrap());
    }

    #[test]
    fn expand_cauchy() {
        let (code, out, _) = run_args(&["expand", "cauchy", "--family", "s", "--nvars", "1", "--degree", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("lhs: x1^2*y1^2 + x1*y1 + 1"), "{out}");
    }

    #[test]
    fn failed_checks_exit_one() {
        let report = |passed| CheckReport {
            identity_id: "demo".into(),
            parameters: serde_json::json!({}),
            passed,
            relation: crate::identity::Relation::Equal,
            lhs: LaurentPoly::one(1).into(),
            rhs: LaurentPoly::zero(1).into(),
            elapsed: std::time::Duration::ZERO,
        };
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = write_reports("demo", &[report(true), report(false)], Format::Text, &mut out, &mut err);
        assert_eq!(code.ok(), Some(1));
        let out = String::from_utf8(out).unwrap();
        assert!(out.contains("PASS demo") && out.contains("FAIL demo"), "{out}");
        assert!(String::from_utf8(err).unwrap().contains("demo: 2 checks, 1 failed"));
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(write_reports("demo", &[report(true)], Format::Json, &mut out, &mut err).ok(), Some(0));
    }
}
