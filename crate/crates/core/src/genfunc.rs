//! Complete homogeneous generators and bialternant formulas.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_rational::BigRational;

use crate::error::Result;
use crate::laurent::{det, LaurentPoly};
use crate::partition::GeneralizedPartition;

/// An alphabet `x_1..x_n`, optionally doubled to `x_1^±..x_n^±`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    pub n_vars: usize,
    pub doubled: bool,
}

impl Alphabet {
    pub fn plain(n_vars: usize) -> Self {
        Alphabet { n_vars, doubled: false }
    }

    pub fn doubled(n_vars: usize) -> Self {
        Alphabet { n_vars, doubled: true }
    }

    /// `h_n` in this alphabet.
    pub fn h(&self, n: i64) -> LaurentPoly {
        if self.doubled {
            h_sympl(n, self.n_vars)
        } else {
            h_plain(n, self.n_vars)
        }
    }
}

type Memo = RwLock<HashMap<(bool, i64, usize), LaurentPoly>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

fn memoized(doubled: bool, n: i64, nvars: usize, build: impl FnOnce() -> LaurentPoly) -> LaurentPoly {
    let key = (doubled, n, nvars);
    if let Some(p) = memo().read().expect("memo lock").get(&key) {
        return p.clone();
    }
    let p = build();
    memo().write().expect("memo lock").entry(key).or_insert_with(|| p.clone());
    p
}

/// `h_k(t^±) = t^-k + t^(-k+2) + ... + t^k` in variable `var`.
fn h_one_doubled(k: i64, arity: usize, var: usize) -> LaurentPoly {
    let k = k as i32;
    LaurentPoly::from_terms(
        arity,
        (0..=k).map(|s| {
            let mut e = vec![0; arity];
            e[var] = 2 * s - k;
            (e, BigRational::from_integer(1.into()))
        }),
    )
    .expect("arity matches")
}

/// Complete homogeneous symmetric polynomial `h_n(x_1..x_N)`; 0 for `n < 0`.
pub fn h_plain(n: i64, nvars: usize) -> LaurentPoly {
    if n < 0 {
        return LaurentPoly::zero(nvars);
    }
    if n == 0 {
        return LaurentPoly::one(nvars);
    }
    if nvars == 0 {
        return LaurentPoly::zero(0);
    }
    memoized(false, n, nvars, || {
        let last = nvars - 1;
        let mut acc = LaurentPoly::zero(nvars);
        for k in 0..=n {
            let rest = h_plain(n - k, last).shift_into(nvars, 0);
            let term = &rest * &LaurentPoly::var_pow(nvars, last, k as i32);
            acc.add_assign_checked(&term).expect("same arity");
        }
        acc
    })
}

/// `h_n` in the doubled alphabet `x_1^±..x_N^±`; 0 for `n < 0`.
pub fn h_sympl(n: i64, nvars: usize) -> LaurentPoly {
    if n < 0 {
        return LaurentPoly::zero(nvars);
    }
    if n == 0 {
        return LaurentPoly::one(nvars);
    }
    if nvars == 0 {
        return LaurentPoly::zero(0);
    }
    memoized(true, n, nvars, || {
        let last = nvars - 1;
        let mut acc = LaurentPoly::zero(nvars);
        for k in 0..=n {
            let rest = h_sympl(n - k, last).shift_into(nvars, 0);
            let term = &rest * &h_one_doubled(k, nvars, last);
            acc.add_assign_checked(&term).expect("same arity");
        }
        acc
    })
}

fn padded(la: &GeneralizedPartition, n: usize) -> Result<Vec<i32>> {
    let p = la
        .padded(n)
        .ok_or(crate::error::Error::LengthMismatch { expected: n, actual: la.nonzero_len() })?;
    Ok(p.parts().iter().map(|&v| v as i32).collect())
}

fn alternant(n: usize, entry: impl Fn(usize, usize) -> LaurentPoly) -> Result<LaurentPoly> {
    let rows: Vec<Vec<LaurentPoly>> = (0..n).map(|i| (0..n).map(|j| entry(i, j)).collect()).collect();
    det(&rows, n)
}

/// `s_λ(x_1..x_N) = det(x_i^(λ_j+N-j)) / det(x_i^(N-j))`.
pub fn schur_bialt(la: &GeneralizedPartition, nvars: usize) -> Result<LaurentPoly> {
    let l = padded(la, nvars)?;
    let n = nvars as i32;
    let num = alternant(nvars, |i, j| LaurentPoly::var_pow(nvars, i, l[j] + n - 1 - j as i32))?;
    let den = alternant(nvars, |i, j| LaurentPoly::var_pow(nvars, i, n - 1 - j as i32))?;
    num.exact_div(&den)
}

/// `sp_λ(x^±)` as a ratio of alternants in `x_i^m - x_i^-m`.
pub fn sp_bialt(la: &GeneralizedPartition, nvars: usize) -> Result<LaurentPoly> {
    let l = padded(la, nvars)?;
    let n = nvars as i32;
    let anti = |i: usize, m: i32| &LaurentPoly::var_pow(nvars, i, m) - &LaurentPoly::var_pow(nvars, i, -m);
    let num = alternant(nvars, |i, j| anti(i, l[j] + n - j as i32))?;
    let den = alternant(nvars, |i, j| anti(i, n - j as i32))?;
    num.exact_div(&den)
}

/// `o_λ(x^±)` as a ratio of alternants in `x_i^m + x_i^-m`.
///
/// The `x_i^(λ_j-j+N)` half of column `N` is dropped when `λ_N = 0`, so that
/// column reads 1 instead of 2.
pub fn o_bialt(la: &GeneralizedPartition, nvars: usize) -> Result<LaurentPoly> {
    let l = padded(la, nvars)?;
    let n = nvars as i32;
    if nvars == 0 {
        return Ok(LaurentPoly::one(0));
    }
    let last_zero = l[nvars - 1] == 0;
    let num = alternant(nvars, |i, j| {
        let jj = j as i32 + 1;
        let low = LaurentPoly::var_pow(nvars, i, -l[j] + jj - n);
        if last_zero && j == nvars - 1 {
            low
        } else {
            &low + &LaurentPoly::var_pow(nvars, i, l[j] - jj + n)
        }
    })?;
    let den = alternant(nvars, |i, j| {
        let m = j as i32;
        &LaurentPoly::var_pow(nvars, i, m) + &LaurentPoly::var_pow(nvars, i, -m)
    })?;
    let sign = if (nvars * (nvars - 1) / 2) % 2 == 0 { 2 } else { -2 };
    num.scale(&BigRational::from_integer(sign.into())).exact_div(&den)
}
