//! Instance checks of branching rules, Cauchy identities, specializations and
//! cross-formula equivalences, run as bounded suites.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::genfunc::{o_bialt, schur_bialt, sp_bialt, Alphabet};
use crate::laurent::{LaurentPoly, PolyJson, RationalFn};
use crate::partition::{contains, generalized_partitions, interlaces, partitions_up_to, GeneralizedPartition};
use crate::skew_bcd::{
    o_jt, o_single_var, skew_o_gt, skew_o_jt, skew_sp_gt, skew_sp_jt, sp_jt, sp_single_var, sstar,
};
use crate::skew_schur::{schur_jt, skew_schur_gt, skew_schur_jt, skew_schur_jt_in};

/// A compared value.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Poly(LaurentPoly),
    Rational(RationalFn),
}

impl From<LaurentPoly> for Value {
    fn from(p: LaurentPoly) -> Self {
        Value::Poly(p)
    }
}

impl From<RationalFn> for Value {
    fn from(r: RationalFn) -> Self {
        match r.to_poly() {
            Some(p) => Value::Poly(p),
            None => Value::Rational(r),
        }
    }
}

impl Value {
    fn as_rational(&self) -> RationalFn {
        match self {
            Value::Poly(p) => RationalFn::from_poly(p.clone()),
            Value::Rational(r) => r.clone(),
        }
    }

    fn same(&self, other: &Value) -> bool {
        match (self, other) {
            (Value::Poly(a), Value::Poly(b)) => a == b,
            _ => self.as_rational().value_eq(&other.as_rational()),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Value::Poly(p) => PolyJson::from(p).serialize(s),
            Value::Rational(r) => {
                #[derive(Serialize)]
                struct Frac {
                    num: PolyJson,
                    den: PolyJson,
                }
                Frac { num: r.numerator().into(), den: r.denominator().into() }.serialize(s)
            }
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Poly(p) => write!(f, "{p}"),
            Value::Rational(r) => write!(f, "{r}"),
        }
    }
}

/// The relation a check asserts between its two sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Equal,
    NotEqual,
}

/// Outcome of one identity instance. `passed` is true exactly when `lhs` and
/// `rhs` stand in the asserted relation.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub identity_id: String,
    pub parameters: serde_json::Value,
    pub passed: bool,
    pub relation: Relation,
    pub lhs: Value,
    pub rhs: Value,
    #[serde(rename = "elapsed_ms", serialize_with = "ser_ms")]
    pub elapsed: Duration,
}

fn ser_ms<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1000.0)
}

impl CheckReport {
    fn build(
        id: &str,
        parameters: serde_json::Value,
        relation: Relation,
        lhs: Value,
        rhs: Value,
        start: Instant,
    ) -> Self {
        let same = lhs.same(&rhs);
        let passed = match relation {
            Relation::Equal => same,
            Relation::NotEqual => !same,
        };
        CheckReport {
            identity_id: id.to_string(),
            parameters,
            passed,
            relation,
            lhs,
            rhs,
            elapsed: start.elapsed(),
        }
    }

    fn equal(id: &str, parameters: serde_json::Value, lhs: impl Into<Value>, rhs: impl Into<Value>, start: Instant) -> Self {
        Self::build(id, parameters, Relation::Equal, lhs.into(), rhs.into(), start)
    }

    /// One JSON object on a single line.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// A grading cap: terms whose total degree in `graded_vars` exceeds `cap`
/// are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncationSpec {
    pub graded_vars: Vec<usize>,
    pub cap: i64,
}

impl TruncationSpec {
    pub fn new(graded_vars: Vec<usize>, cap: i64) -> Self {
        assert!(cap >= 0, "truncation cap must be nonnegative");
        TruncationSpec { graded_vars, cap }
    }

    pub fn apply(&self, p: &LaurentPoly) -> Result<LaurentPoly> {
        p.truncate(&self.graded_vars, self.cap)
    }

    pub fn mul(&self, a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly> {
        a.mul_truncated(b, &self.graded_vars, self.cap)
    }
}

/// Character families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Schur,
    Sp,
    O,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Schur => "schur",
            Family::Sp => "sp",
            Family::O => "o",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "schur" | "s" => Ok(Family::Schur),
            "sp" => Ok(Family::Sp),
            "o" => Ok(Family::O),
            _ => Err(Error::Parse(format!("unknown family `{s}`"))),
        }
    }
}

fn range(from: usize, n: usize) -> Vec<usize> {
    (from..from + n).collect()
}

/// `∏_{i,j} 1/(1 - x_i y_j)`, also over `x_i^-1` when `doubled`, expanded up
/// to the truncation cap. `x` occupies variables `0..nx`, `y` the next `ny`.
fn cauchy_kernel(arity: usize, nx: usize, ny: usize, doubled: bool, trunc: &TruncationSpec) -> Result<LaurentPoly> {
    let mut acc = LaurentPoly::one(arity);
    let signs: &[i32] = if doubled { &[1, -1] } else { &[1] };
    for i in 0..nx {
        for j in 0..ny {
            for &s in signs {
                let xy = &LaurentPoly::var_pow(arity, i, s) * &LaurentPoly::var(arity, nx + j);
                let mut geo = LaurentPoly::zero(arity);
                let mut pow = LaurentPoly::one(arity);
                loop {
                    let t = trunc.apply(&pow)?;
                    if t.is_zero() {
                        break;
                    }
                    geo = &geo + &t;
                    pow = &pow * &xy;
                }
                acc = trunc.mul(&acc, &geo)?;
            }
        }
    }
    Ok(acc)
}

fn check_branching_params(la: &GeneralizedPartition, n: usize, k: usize) -> Result<()> {
    if la.len() != n {
        return Err(Error::LengthMismatch { expected: n, actual: la.len() });
    }
    if k == 0 || k >= n {
        return Err(Error::UnsupportedConfiguration(format!("branching needs 1 <= k < n, got k={k}, n={n}")));
    }
    Ok(())
}

fn check_branching(family: Family, la: &GeneralizedPartition, n: usize, k: usize) -> Result<CheckReport> {
    check_branching_params(la, n, k)?;
    let start = Instant::now();
    let (straight, skew): (fn(&GeneralizedPartition, usize) -> Result<LaurentPoly>, _) = match family {
        Family::Sp => (sp_jt as fn(&_, _) -> _, skew_sp_jt as fn(&_, &_, _) -> Result<LaurentPoly>),
        Family::O => (o_jt as fn(&_, _) -> _, skew_o_jt as fn(&_, &_, _) -> Result<LaurentPoly>),
        Family::Schur => return Err(Error::UnsupportedConfiguration("branching is checked for sp and o".into())),
    };
    let lhs = straight(la, n)?;
    let mut rhs = LaurentPoly::zero(n);
    for mu in generalized_partitions(n - k, la.size() as u32) {
        if !contains(&mu, la) {
            continue;
        }
        let x_part = straight(&mu, n - k)?.shift_into(n, 0);
        let y_part = skew(la, &mu, k)?.shift_into(n, n - k);
        rhs = &rhs + &(&x_part * &y_part);
    }
    let id = format!("branching-{family}");
    Ok(CheckReport::equal(&id, json!({"lambda": la, "n": n, "k": k}), lhs, rhs, start))
}

/// `sp_λ(x^±; y^±) = Σ_μ sp_μ(x^±) sp_{λ/μ}(y^±)` with `x` of size `n-k`,
/// `y` of size `k` and `μ` ranging over length `n-k`.
pub fn check_branching_sp(la: &GeneralizedPartition, n: usize, k: usize) -> Result<CheckReport> {
    check_branching(Family::Sp, la, n, k)
}

/// The orthogonal analogue of [`check_branching_sp`].
pub fn check_branching_o(la: &GeneralizedPartition, n: usize, k: usize) -> Result<CheckReport> {
    check_branching(Family::O, la, n, k)
}

/// `Σ_λ f_λ(x) s_λ(y)` against its product form, truncated at total
/// `y`-degree `degree`, for `x` and `y` both of size `nvars`.
pub fn check_cauchy(family: Family, nvars: usize, degree: u32) -> Result<CheckReport> {
    let start = Instant::now();
    let n = nvars;
    let arity = 2 * n;
    let trunc = TruncationSpec::new(range(n, n), degree as i64);
    let mut lhs = LaurentPoly::zero(arity);
    for la in partitions_up_to(n, degree) {
        let f = match family {
            Family::Schur => schur_jt(&la, n),
            Family::Sp => sp_jt(&la, n)?,
            Family::O => o_jt(&la, n)?,
        };
        let s = schur_jt(&la, n).shift_into(arity, n);
        lhs = &lhs + &(&f.shift_into(arity, 0) * &s);
    }
    let mut rhs = cauchy_kernel(arity, n, n, family != Family::Schur, &trunc)?;
    if family != Family::Schur {
        for a in 0..n {
            let from = if family == Family::Sp { a + 1 } else { a };
            for b in from..n {
                let yy = &LaurentPoly::var(arity, n + a) * &LaurentPoly::var(arity, n + b);
                rhs = trunc.mul(&rhs, &(&LaurentPoly::one(arity) - &yy))?;
            }
        }
    }
    let id = format!("cauchy-{family}");
    Ok(CheckReport::equal(&id, json!({"family": family, "N": n, "D": degree}), lhs, rhs, start))
}

/// `Σ_ρ s_{ρ/λ}(x) s_{ρ/μ}(y) = ∏ 1/(1 - x_i y_j) Σ_τ s_{μ/τ}(x) s_{λ/τ}(y)`
/// truncated at total degree `degree` in `x` and `y` jointly.
pub fn check_skew_cauchy_schur(
    la: &GeneralizedPartition,
    mu: &GeneralizedPartition,
    nx: usize,
    ny: usize,
    degree: u32,
) -> Result<CheckReport> {
    let start = Instant::now();
    let (la, mu) = (la.normalize(), mu.normalize());
    let arity = nx + ny;
    let trunc = TruncationSpec::new((0..arity).collect(), degree as i64);
    let max_len = (la.len() + nx).min(mu.len() + ny);
    let max_weight = (la.size() + mu.size()) as u32 + degree;
    let mut lhs = LaurentPoly::zero(arity);
    for rho in partitions_up_to(max_len, max_weight) {
        if !contains(&la, &rho) || !contains(&mu, &rho) {
            continue;
        }
        let a = skew_schur_jt(&rho, &la, nx).shift_into(arity, 0);
        let b = skew_schur_jt(&rho, &mu, ny).shift_into(arity, nx);
        lhs = &lhs + &trunc.mul(&a, &b)?;
    }
    let mut sum = LaurentPoly::zero(arity);
    let common = la.len().min(mu.len());
    for tau in partitions_up_to(common, la.size().min(mu.size()) as u32) {
        if !contains(&tau, &la) || !contains(&tau, &mu) {
            continue;
        }
        let a = skew_schur_jt(&mu, &tau, nx).shift_into(arity, 0);
        let b = skew_schur_jt(&la, &tau, ny).shift_into(arity, nx);
        sum = &sum + &(&a * &b);
    }
    let kernel = cauchy_kernel(arity, nx, ny, false, &trunc)?;
    let rhs = trunc.mul(&kernel, &trunc.apply(&sum)?)?;
    Ok(CheckReport::equal(
        "skew-cauchy-schur",
        json!({"lambda": la, "mu": mu, "N": nx, "K": ny, "D": degree}),
        lhs,
        rhs,
        start,
    ))
}

/// Both sides of the skew symplectic/orthogonal Cauchy identity
/// `Σ_ρ f_{ρ/μ}(x^±) S*_{ρ/λ}(y) = ∏ 1/((1-x_i y_j)(1-x_i^-1 y_j)) Σ_τ f_{λ/τ}(x^±) S*_{μ/τ}(y)`,
/// multiplied through by the Vandermonde `det(y_i^{K-j})` and truncated at
/// `y`-degree `degree` plus the Vandermonde degree. Only the length rule
/// `len λ + K = len μ + N`, `len μ >= K` is enforced.
pub fn skew_cauchy_bcd_sides(
    family: Family,
    la: &GeneralizedPartition,
    mu: &GeneralizedPartition,
    nx: usize,
    ny: usize,
    degree: u32,
) -> Result<(LaurentPoly, LaurentPoly)> {
    skew_cauchy_bcd_sides_with_slack(family, la, mu, nx, ny, degree, 0)
}

/// As [`skew_cauchy_bcd_sides`], summing `ρ` over `slack` extra weight.
pub fn skew_cauchy_bcd_sides_with_slack(
    family: Family,
    la: &GeneralizedPartition,
    mu: &GeneralizedPartition,
    nx: usize,
    ny: usize,
    degree: u32,
    slack: u32,
) -> Result<(LaurentPoly, LaurentPoly)> {
    let skew: fn(&GeneralizedPartition, &GeneralizedPartition, usize) -> Result<LaurentPoly> = match family {
        Family::Sp => skew_sp_jt,
        Family::O => skew_o_jt,
        Family::Schur => {
            return Err(Error::UnsupportedConfiguration("use check_skew_cauchy_schur for Schur".into()));
        }
    };
    let m = mu.len();
    if la.len() + ny != m + nx || m < ny {
        return Err(Error::UnsupportedConfiguration(format!(
            "lengths need len λ + K = len μ + N and len μ >= K; got len λ = {}, len μ = {m}, N = {nx}, K = {ny}",
            la.len()
        )));
    }
    let arity = nx + ny;
    let vdm_deg = (ny * ny.saturating_sub(1) / 2) as i64;
    let trunc = TruncationSpec::new(range(nx, ny), degree as i64 + vdm_deg);
    let vdm: Vec<Vec<LaurentPoly>> = (0..ny)
        .map(|i| (0..ny).map(|j| LaurentPoly::var_pow(ny, i, (ny - 1 - j) as i32)).collect())
        .collect();
    let vdm = crate::laurent::det(&vdm, ny)?;
    // S* times the Vandermonde, as a polynomial in y.
    let sstar_vdm = |top: &GeneralizedPartition, bottom: &GeneralizedPartition| -> Result<LaurentPoly> {
        let s = sstar(top, bottom, ny)?;
        let scaled = s.numerator().checked_mul(&vdm)?.exact_div(s.denominator())?;
        Ok(scaled.shift_into(arity, nx))
    };

    let mut lhs = LaurentPoly::zero(arity);
    let max_weight = (la.size() + mu.size()) as u32 + degree + slack;
    for rho in generalized_partitions(m + nx, max_weight) {
        let f = skew(&rho, mu, nx)?;
        if f.is_zero() {
            continue;
        }
        let s = sstar_vdm(&rho, la)?;
        lhs = &lhs + &trunc.mul(&f.shift_into(arity, 0), &s)?;
    }
    let mut sum = LaurentPoly::zero(arity);
    for tau in generalized_partitions(m - ny, la.size() as u32) {
        if !contains(&tau, la) {
            continue;
        }
        let f = skew(la, &tau, nx)?;
        if f.is_zero() {
            continue;
        }
        sum = &sum + &trunc.mul(&f.shift_into(arity, 0), &sstar_vdm(mu, &tau)?)?;
    }
    let kernel = cauchy_kernel(arity, nx, ny, true, &TruncationSpec::new(range(nx, ny), degree as i64))?;
    let rhs = trunc.mul(&kernel, &sum)?;
    Ok((lhs, rhs))
}

/// The skew symplectic/orthogonal Cauchy identity, restricted to the
/// configurations where it holds: `len λ + K = len μ + N`, `len μ >= K`, and
/// the last `N` parts of `λ` zero.
pub fn check_skew_cauchy_bcd(
    family: Family,
    la: &GeneralizedPartition,
    mu: &GeneralizedPartition,
    nx: usize,
    ny: usize,
    degree: u32,
) -> Result<CheckReport> {
    let start = Instant::now();
    if !la.ends_with_zeros(nx) {
        return Err(Error::UnsupportedConfiguration(format!(
            "the last {nx} parts of λ = {la} must be zero"
        )));
    }
    let (lhs, rhs) = skew_cauchy_bcd_sides(family, la, mu, nx, ny, degree)?;
    let id = format!("skew-cauchy-{family}");
    Ok(CheckReport::equal(
        &id,
        json!({"family": family, "lambda": la, "mu": mu, "N": nx, "K": ny, "D": degree}),
        lhs,
        rhs,
        start,
    ))
}

/// Suite names.
pub const SUITES: [&str; 6] = ["equivalence", "branching", "cauchy", "specialization", "remarks", "symmetry"];

/// Grid bounds for a suite run; `None` selects the suite's default.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SuiteBounds {
    pub max_weight: Option<u32>,
    pub max_nvars: Option<usize>,
    pub degree: Option<u32>,
}

/// A deferred check.
pub type Task = Box<dyn Fn() -> Result<CheckReport> + Send + Sync>;

/// Worker count: available parallelism, capped by `SCHURLAB_THREADS`.
pub fn worker_threads() -> usize {
    let avail = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    match std::env::var("SCHURLAB_THREADS").ok().and_then(|v| v.trim().parse::<usize>().ok()) {
        Some(cap) if cap >= 1 => avail.min(cap),
        _ => avail,
    }
}

/// Runs tasks on [`worker_threads`] threads; reports keep task order.
pub fn run_tasks(tasks: Vec<Task>) -> Result<Vec<CheckReport>> {
    let threads = worker_threads().min(tasks.len()).max(1);
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<Result<CheckReport>>>> = tasks.iter().map(|_| Mutex::new(None)).collect();
    std::thread::scope(|s| {
        for _ in 0..threads {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= tasks.len() {
                    break;
                }
                let r = tasks[i]();
                *slots[i].lock().expect("slot lock") = Some(r);
            });
        }
    });
    slots
        .into_iter()
        .map(|m| m.into_inner().expect("slot lock").expect("every task ran"))
        .collect()
}

/// Runs the named suite over its bounded grid. Reports come back in a fixed
/// order independent of the thread count.
pub fn run_suite(suite: &str, bounds: SuiteBounds) -> Result<Vec<CheckReport>> {
    let tasks = match suite {
        "equivalence" => equivalence_tasks(bounds),
        "branching" => branching_tasks(bounds),
        "cauchy" => cauchy_tasks(bounds),
        "specialization" => specialization_tasks(bounds),
        "remarks" => remark_tasks(bounds),
        "symmetry" => symmetry_tasks(bounds),
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    run_tasks(tasks)
}

fn eq_task(
    id: &'static str,
    params: serde_json::Value,
    lhs: impl Fn() -> Result<Value> + Send + Sync + 'static,
    rhs: impl Fn() -> Result<Value> + Send + Sync + 'static,
) -> Task {
    Box::new(move || {
        let start = Instant::now();
        Ok(CheckReport::build(id, params.clone(), Relation::Equal, lhs()?, rhs()?, start))
    })
}

/// Type A straight functions: determinant, bialternant and pattern sum.
pub fn type_a_tasks(max_weight: u32, max_nvars: usize) -> Vec<Task> {
    let mut tasks = Vec::new();
    for n in 0..=max_nvars {
        for la in partitions_up_to(n, max_weight) {
            let p = json!({"lambda": la, "N": n});
            let (a, b) = (la.clone(), la.clone());
            tasks.push(eq_task("schur-jt-vs-bialternant", p.clone(), move || Ok(schur_jt(&a, n).into()), move || {
                Ok(schur_bialt(&b, n)?.into())
            }));
            let (a, b) = (la.clone(), la.clone());
            tasks.push(eq_task("schur-jt-vs-gt", p, move || Ok(schur_jt(&a, n).into()), move || {
                Ok(skew_schur_gt(&b, &GeneralizedPartition::empty(), n).into())
            }));
        }
    }
    tasks
}

/// Type A skew functions: determinant against pattern sum.
pub fn skew_a_tasks(max_weight: u32, max_mu_len: usize, max_nvars: usize) -> Vec<Task> {
    let mut tasks = Vec::new();
    for n in 0..=max_nvars {
        for la in partitions_up_to(max_weight as usize, max_weight) {
            for mu in partitions_up_to(max_mu_len, max_weight) {
                let p = json!({"lambda": la, "mu": mu, "N": n});
                let (a, b, c, d) = (la.clone(), mu.clone(), la.clone(), mu.clone());
                tasks.push(eq_task(
                    "skew-schur-jt-vs-gt",
                    p,
                    move || Ok(skew_schur_jt(&a, &b, n).into()),
                    move || Ok(skew_schur_gt(&c, &d, n).into()),
                ));
            }
        }
    }
    tasks
}

/// Straight symplectic or orthogonal: determinant against bialternant, for
/// `N` in `nvars`.
pub fn bcd_straight_tasks(family: Family, max_weight: u32, nvars: &[usize]) -> Vec<Task> {
    let mut tasks = Vec::new();
    for &n in nvars {
        for la in partitions_up_to(n, max_weight) {
            let p = json!({"lambda": la, "N": n});
            let (a, b) = (la.clone(), la.clone());
            let task = match family {
                Family::Sp => eq_task("sp-jt-vs-bialternant", p, move || Ok(sp_jt(&a, n)?.into()), move || {
                    Ok(sp_bialt(&b, n)?.into())
                }),
                Family::O => eq_task("o-jt-vs-bialternant", p, move || Ok(o_jt(&a, n)?.into()), move || {
                    Ok(o_bialt(&b, n)?.into())
                }),
                Family::Schur => continue,
            };
            tasks.push(task);
        }
    }
    tasks
}

/// The `(λ, μ, N)` grid for skew symplectic/orthogonal checks: `len μ <=
/// max_mu_len`, `len λ = len μ + N`, `|λ|, |μ| <= max_weight`, trailing zeros
/// allowed.
pub fn skew_bcd_grid(
    max_weight: u32,
    max_mu_len: usize,
    max_nvars: usize,
) -> Vec<(GeneralizedPartition, GeneralizedPartition, usize)> {
    let mut out = Vec::new();
    for n in 1..=max_nvars {
        for l in 0..=max_mu_len {
            for mu in generalized_partitions(l, max_weight) {
                for la in generalized_partitions(l + n, max_weight) {
                    out.push((la.clone(), mu.clone(), n));
                }
            }
        }
    }
    out
}

/// Skew symplectic or orthogonal: determinant against pattern sum.
pub fn skew_bcd_tasks(family: Family, max_weight: u32, max_mu_len: usize, max_nvars: usize) -> Vec<Task> {
    skew_bcd_grid(max_weight, max_mu_len, max_nvars)
        .into_iter()
        .filter_map(|(la, mu, n)| {
            let p = json!({"lambda": la, "mu": mu, "N": n});
            let (a, b, c, d) = (la.clone(), mu.clone(), la, mu);
            match family {
                Family::Sp => Some(eq_task(
                    "skew-sp-jt-vs-gt",
                    p,
                    move || Ok(skew_sp_jt(&a, &b, n)?.into()),
                    move || Ok(skew_sp_gt(&c, &d, n)?.into()),
                )),
                Family::O => Some(eq_task(
                    "skew-o-jt-vs-gt",
                    p,
                    move || Ok(skew_o_jt(&a, &b, n)?.into()),
                    move || Ok(skew_o_gt(&c, &d, n)?.into()),
                )),
                Family::Schur => None,
            }
        })
        .collect()
}

fn equivalence_tasks(b: SuiteBounds) -> Vec<Task> {
    let w = b.max_weight.unwrap_or(6);
    let n = b.max_nvars;
    let mut tasks = type_a_tasks(w, n.unwrap_or(4));
    tasks.extend(skew_a_tasks(w, 3, n.unwrap_or(3)));
    let straight: Vec<usize> = (1..=n.unwrap_or(3)).collect();
    tasks.extend(bcd_straight_tasks(Family::Sp, w, &straight));
    tasks.extend(bcd_straight_tasks(Family::O, w, &straight));
    let skew_n = n.unwrap_or(2).min(2);
    tasks.extend(skew_bcd_tasks(Family::Sp, w, 3, skew_n));
    tasks.extend(skew_bcd_tasks(Family::O, w, 3, skew_n));
    tasks
}

fn branching_tasks(b: SuiteBounds) -> Vec<Task> {
    let w = b.max_weight.unwrap_or(5);
    let max_n = b.max_nvars.unwrap_or(3);
    let mut tasks: Vec<Task> = Vec::new();
    for family in [Family::Sp, Family::O] {
        for n in 2..=max_n {
            for la in generalized_partitions(n, w) {
                for k in 1..n.min(3) {
                    let la = la.clone();
                    tasks.push(Box::new(move || check_branching(family, &la, n, k)));
                }
            }
        }
    }
    tasks
}

fn cauchy_tasks(b: SuiteBounds) -> Vec<Task> {
    let d = b.degree.unwrap_or(6);
    let max_n = b.max_nvars.unwrap_or(2);
    let mut tasks: Vec<Task> = Vec::new();
    for family in [Family::Schur, Family::Sp, Family::O] {
        for n in 1..=max_n {
            tasks.push(Box::new(move || check_cauchy(family, n, d)));
        }
    }
    tasks
}

/// One-variable skew functions: `s_{λ/ν}(t) = t^{|λ|-|ν|}` on interlacing
/// pairs, and the symplectic/orthogonal `α`-sums against both the
/// determinant and the pattern sum.
pub fn specialization_tasks(b: SuiteBounds) -> Vec<Task> {
    let w = b.max_weight.unwrap_or(5);
    let max_len = b.max_nvars.unwrap_or(3);
    let mut tasks: Vec<Task> = Vec::new();
    for l in 0..=max_len {
        for nu in generalized_partitions(l, w) {
            for la in generalized_partitions(l + 1, w) {
                let p = json!({"lambda": la, "nu": nu});
                let (a, c) = (la.clone(), nu.clone());
                tasks.push(eq_task(
                    "single-var-schur",
                    p.clone(),
                    move || Ok(skew_schur_jt(&a, &c, 1).into()),
                    {
                        let (a, c) = (la.clone(), nu.clone());
                        move || {
                            Ok(if interlaces(&c, &a) {
                                LaurentPoly::var_pow(1, 0, (a.size() - c.size()) as i32)
                            } else {
                                LaurentPoly::zero(1)
                            }
                            .into())
                        }
                    },
                ));
                for (id, lhs, rhs) in [
                    ("single-var-sp-jt", sp_single_var as fn(&_, &_) -> _, skew_sp_jt as fn(&_, &_, _) -> _),
                    ("single-var-sp-gt", sp_single_var, skew_sp_gt),
                    ("single-var-o-jt", o_single_var, skew_o_jt),
                    ("single-var-o-gt", o_single_var, skew_o_gt),
                ] {
                    let (a, c, e, f) = (la.clone(), nu.clone(), la.clone(), nu.clone());
                    tasks.push(eq_task(id, p.clone(), move || Ok(lhs(&a, &c)?.into()), move || {
                        Ok(rhs(&e, &f, 1)?.into())
                    }));
                }
            }
        }
    }
    tasks
}

/// Padded and unpadded skew symplectic functions differ:
/// `sp_{(2,1,1)/(1)} ≠ sp_{(2,1,1,0)/(1,0)}` in two variables.
pub fn check_padding_sensitivity() -> Result<CheckReport> {
    let start = Instant::now();
    let a = skew_sp_jt(&crate::gp![2, 1, 1], &crate::gp![1], 2)?;
    let b = skew_sp_jt(&crate::gp![2, 1, 1, 0], &crate::gp![1, 0], 2)?;
    Ok(CheckReport::build(
        "padding-changes-skew-sp",
        json!({"lambda": [[2, 1, 1], [2, 1, 1, 0]], "mu": [[1], [1, 0]], "N": 2}),
        Relation::NotEqual,
        a.into(),
        b.into(),
        start,
    ))
}

/// `sp_{λ/μ}` with `λ = (λ_1..λ_{l+1}, 0^{N-1})` equals the skew Schur
/// determinant in the doubled alphabet.
pub fn check_doubled_alphabet_reduction(la: &GeneralizedPartition, mu: &GeneralizedPartition, n: usize) -> Result<CheckReport> {
    let start = Instant::now();
    if la.len() != mu.len() + n || !la.ends_with_zeros(n - 1) {
        return Err(Error::UnsupportedConfiguration(format!(
            "need len λ = len μ + N with the last N-1 parts of λ zero; got λ = {la}, μ = {mu}, N = {n}"
        )));
    }
    let lhs = skew_sp_jt(la, mu, n)?;
    let rhs = skew_schur_jt_in(la, mu, Alphabet::doubled(n));
    Ok(CheckReport::equal("doubled-alphabet-reduction", json!({"lambda": la, "mu": mu, "N": n}), lhs, rhs, start))
}

fn remark_tasks(b: SuiteBounds) -> Vec<Task> {
    let w = b.max_weight.unwrap_or(4);
    let d = b.degree.unwrap_or(3);
    let mut tasks: Vec<Task> = vec![Box::new(check_padding_sensitivity)];

    for n in 1..=2usize {
        for l in 0..=2usize {
            for mu in generalized_partitions(l, w) {
                for head in generalized_partitions(l + 1, w) {
                    let la = head.with_zeros(n - 1);
                    let mu = mu.clone();
                    tasks.push(Box::new(move || check_doubled_alphabet_reduction(&la, &mu, n)));
                }
            }
        }
    }

    for k in 1..=2usize {
        // S*_{λ/∅} = s_λ.
        for la in generalized_partitions(k, w) {
            let (a, c) = (la.clone(), la.clone());
            tasks.push(eq_task(
                "sstar-straight",
                json!({"lambda": la, "K": k}),
                move || Ok(sstar(&a, &GeneralizedPartition::empty(), k)?.into()),
                move || Ok(schur_jt(&c, k).into()),
            ));
        }
        for l in 1..=2usize {
            for mu_head in generalized_partitions(l - 1, w) {
                let mu = mu_head.with_zeros(1);
                for la in generalized_partitions(l + k, w) {
                    // Vanishing when the last part of λ is positive.
                    if la.get(l + k - 1) > 0 {
                        let (a, c) = (la.clone(), mu.clone());
                        tasks.push(eq_task(
                            "sstar-vanishing",
                            json!({"lambda": la, "mu": mu, "K": k}),
                            move || Ok(sstar(&a, &c, k)?.into()),
                            move || Ok(LaurentPoly::zero(k).into()),
                        ));
                    }
                }
            }
            for mu in generalized_partitions(l, w) {
                for la in generalized_partitions(l + k, w) {
                    // Appending a zero to both sides.
                    let (a, c) = (la.clone(), mu.clone());
                    let (e, f) = (la.with_zeros(1), mu.with_zeros(1));
                    tasks.push(eq_task(
                        "sstar-stability",
                        json!({"lambda": la, "mu": mu, "K": k}),
                        move || Ok(sstar(&e, &f, k)?.into()),
                        move || Ok(sstar(&a, &c, k)?.into()),
                    ));
                }
            }
        }
    }

    // Over μ = 0^M: zero unless only the first K parts of λ are positive,
    // and then s_λ.
    for k in 1..=2usize {
        for m in 1..=2usize {
            for la in generalized_partitions(m + k, w) {
                let head = GeneralizedPartition::new(la.parts()[..k].to_vec()).expect("prefix of a partition");
                let tail_zero = la.ends_with_zeros(m);
                let (a, c) = (la.clone(), head);
                tasks.push(eq_task(
                    "sstar-over-zeros",
                    json!({"lambda": la, "M": m, "K": k}),
                    move || Ok(sstar(&a, &GeneralizedPartition::zeros(m), k)?.into()),
                    move || Ok(if tail_zero { schur_jt(&c, k) } else { LaurentPoly::zero(k) }.into()),
                ));
            }
        }
    }

    for family in [Family::Sp, Family::O] {
        for n in 1..=2usize {
            tasks.push(Box::new(move || {
                let z = GeneralizedPartition::zeros(n);
                let mut r = check_skew_cauchy_bcd(family, &z, &z, n, n, d)?;
                r.identity_id = format!("skew-cauchy-{family}-at-zero");
                Ok(r)
            }));
        }
    }
    tasks
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Average of `p` over all permutations and inversions of its variables.
/// It equals `p` exactly when `p` is invariant under both.
pub fn signed_permutation_average(p: &LaurentPoly) -> LaurentPoly {
    let n = p.arity();
    let mut acc = LaurentPoly::zero(n);
    let mut count: i64 = 0;
    for perm in permutations(n) {
        let q = p.permute_vars(&perm);
        for mask in 0..(1usize << n) {
            let which: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            acc = &acc + &q.invert_vars(&which);
            count += 1;
        }
    }
    acc.scale(&num_rational::BigRational::new(1.into(), count.into()))
}

fn symmetry_task(id: &'static str, params: serde_json::Value, value: impl Fn() -> Result<LaurentPoly> + Send + Sync + 'static) -> Task {
    Box::new(move || {
        let start = Instant::now();
        let p = value()?;
        let avg = signed_permutation_average(&p);
        Ok(CheckReport::equal(id, params.clone(), p, avg, start))
    })
}

/// Invariance of symplectic and orthogonal values, straight and skew, under
/// every `x_i -> x_i^-1` and every permutation of variables.
pub fn symmetry_tasks(b: SuiteBounds) -> Vec<Task> {
    let w = b.max_weight.unwrap_or(6);
    let straight_n = b.max_nvars.unwrap_or(3);
    let skew_n = b.max_nvars.unwrap_or(2).min(2);
    let mut tasks = Vec::new();
    for n in 1..=straight_n {
        for la in partitions_up_to(n, w) {
            let p = json!({"lambda": la, "N": n});
            let a = la.clone();
            tasks.push(symmetry_task("sp-symmetry", p.clone(), move || sp_jt(&a, n)));
            tasks.push(symmetry_task("o-symmetry", p, move || o_jt(&la, n)));
        }
    }
    for (la, mu, n) in skew_bcd_grid(w, 3, skew_n) {
        let p = json!({"lambda": la, "mu": mu, "N": n});
        let (a, c) = (la.clone(), mu.clone());
        tasks.push(symmetry_task("skew-sp-symmetry", p.clone(), move || skew_sp_jt(&a, &c, n)));
        tasks.push(symmetry_task("skew-o-symmetry", p, move || skew_o_jt(&la, &mu, n)));
    }
    tasks
}
