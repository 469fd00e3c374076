//! Symplectic and orthogonal Schur functions, straight and skew, by
//! Jacobi–Trudi type determinants and by Gelfand–Tsetlin pattern sums, plus
//! the one-variable formulas and the rational function `S*`.

use std::collections::HashMap;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::genfunc::h_sympl;
use crate::laurent::{det, LaurentPoly, RationalFn};
use crate::partition::{enumerate_between, enumerate_gt_chains, GeneralizedPartition};
use crate::skew_schur::poly_from_counts;

fn hd(n: i64, nvars: usize) -> LaurentPoly {
    h_sympl(n, nvars)
}

fn pad_to(la: &GeneralizedPartition, n: usize) -> Result<GeneralizedPartition> {
    la.padded(n).ok_or(Error::LengthMismatch { expected: n, actual: la.len() })
}

fn square(n: usize, entry: impl Fn(usize, usize) -> LaurentPoly) -> Vec<Vec<LaurentPoly>> {
    (0..n).map(|i| (0..n).map(|j| entry(i, j)).collect()).collect()
}

fn check_skew_lengths(la: &GeneralizedPartition, mu: &GeneralizedPartition, nvars: usize) -> Result<()> {
    if la.len() != mu.len() + nvars {
        return Err(Error::LengthMismatch { expected: mu.len() + nvars, actual: la.len() });
    }
    Ok(())
}

/// `sp_λ(x^±) = ½ det(h_{λ_i-i+j} + h_{λ_i-i-j+2})`, `λ` padded to length `N`.
pub fn sp_jt(la: &GeneralizedPartition, nvars: usize) -> Result<LaurentPoly> {
    let la = pad_to(la, nvars)?;
    let rows = square(nvars, |i, j| {
        let (li, i, j) = (la.get(i) as i64, i as i64 + 1, j as i64 + 1);
        &hd(li - i + j, nvars) + &hd(li - i - j + 2, nvars)
    });
    let d = det(&rows, nvars)?.scale(&BigRational::new(1.into(), 2.into()));
    if !d.has_integer_coefficients() {
        return Err(Error::NonIntegerResult);
    }
    Ok(d)
}

/// `o_λ(x^±) = det(h_{λ_i-i+j} - h_{λ_i-i-j})`, `λ` padded to length `N`.
pub fn o_jt(la: &GeneralizedPartition, nvars: usize) -> Result<LaurentPoly> {
    let la = pad_to(la, nvars)?;
    let rows = square(nvars, |i, j| {
        let (li, i, j) = (la.get(i) as i64, i as i64 + 1, j as i64 + 1);
        &hd(li - i + j, nvars) - &hd(li - i - j, nvars)
    });
    det(&rows, nvars)
}

/// `sp_{λ/μ}(x^±)` as an `(l+N)`-determinant, `l = len μ`. Requires
/// `len λ = l + N`.
pub fn skew_sp_jt(la: &GeneralizedPartition, mu: &GeneralizedPartition, nvars: usize) -> Result<LaurentPoly> {
    check_skew_lengths(la, mu, nvars)?;
    let l = mu.len() as i64;
    let rows = square(la.len(), |i, j| {
        let (li, i, j) = (la.get(i) as i64, i as i64 + 1, j as i64 + 1);
        if j <= l + 1 {
            // mu.get reads the (l+1)-th part as 0.
            hd(li - mu.get(j as usize - 1) as i64 - i + j, nvars)
        } else {
            &hd(li - i + j, nvars) + &hd(li - i - j + 2 * l + 2, nvars)
        }
    });
    det(&rows, nvars)
}

/// `o_{λ/μ}(x^±)` as an `(l+N)`-determinant, `l = len μ`. Requires
/// `len λ = l + N`.
pub fn skew_o_jt(la: &GeneralizedPartition, mu: &GeneralizedPartition, nvars: usize) -> Result<LaurentPoly> {
    check_skew_lengths(la, mu, nvars)?;
    let l = mu.len() as i64;
    let rows = square(la.len(), |i, j| {
        let (li, i, j) = (la.get(i) as i64, i as i64 + 1, j as i64 + 1);
        if j <= l {
            hd(li - mu.get(j as usize - 1) as i64 - i + j, nvars)
        } else {
            &hd(li - i + j, nvars) - &hd(li - i - j + 2 * l, nvars)
        }
    });
    det(&rows, nvars)
}

/// `sp_{λ/μ}(x^±)` summed over symplectic patterns
/// `μ = z_0 ≺ z_1 ≺ ... ≺ z_{2N} = λ` with weight
/// `∏ x_i^{2|z_{2i-1}| - |z_{2i}| - |z_{2i-2}|}`.
pub fn skew_sp_gt(la: &GeneralizedPartition, mu: &GeneralizedPartition, nvars: usize) -> Result<LaurentPoly> {
    let chains = enumerate_gt_chains(mu, la, nvars)?;
    let mut counts: HashMap<Vec<i32>, i64> = HashMap::new();
    for c in chains {
        let z = &c.steps;
        let exps = (1..=nvars)
            .map(|i| (2 * z[2 * i - 1].size() as i64 - z[2 * i].size() as i64 - z[2 * i - 2].size() as i64) as i32)
            .collect();
        *counts.entry(exps).or_default() += 1;
    }
    Ok(poly_from_counts(nvars, counts))
}

/// `o_{λ/μ}(x^±)` summed over orthogonal patterns: the last part of each odd
/// step is either 0 or the smaller of its neighbours' last parts, and a step
/// counts twice when the upper last part is positive and the lower one is 0.
pub fn skew_o_gt(la: &GeneralizedPartition, mu: &GeneralizedPartition, nvars: usize) -> Result<LaurentPoly> {
    let chains = enumerate_gt_chains(mu, la, nvars)?;
    let l = mu.len();
    let mut counts: HashMap<Vec<i32>, i64> = HashMap::new();
    'chains: for c in chains {
        let z = &c.steps;
        let mut mult = 1i64;
        let mut exps = Vec::with_capacity(nvars);
        for i in 1..=nvars {
            let last = l + i - 1;
            let top = z[2 * i].get(last);
            // The bottom step has no part at index l+i-2 when l = 0, i = 1.
            let below = (last >= 1).then(|| z[2 * i - 2].get(last - 1));
            let bound = below.map_or(top, |b| b.min(top));
            let mid = z[2 * i - 1].get(last);
            if mid != 0 && mid != bound {
                continue 'chains;
            }
            if top > 0 && below == Some(0) {
                mult *= 2;
            }
            exps.push((2 * z[2 * i - 1].size() as i64 - z[2 * i].size() as i64 - z[2 * i - 2].size() as i64) as i32);
        }
        *counts.entry(exps).or_default() += mult;
    }
    Ok(poly_from_counts(nvars, counts))
}

fn single_var_lengths(la: &GeneralizedPartition, nu: &GeneralizedPartition) -> Result<()> {
    if la.len() != nu.len() + 1 {
        return Err(Error::LengthMismatch { expected: nu.len() + 1, actual: la.len() });
    }
    Ok(())
}

/// `sp_{λ/ν}(t^±) = Σ_{ν ≺ α ≺ λ} t^{2|α| - |λ| - |ν|}`, `len λ = len ν + 1`.
pub fn sp_single_var(la: &GeneralizedPartition, nu: &GeneralizedPartition) -> Result<LaurentPoly> {
    single_var_lengths(la, nu)?;
    let mut counts: HashMap<Vec<i32>, i64> = HashMap::new();
    for a in enumerate_between(nu, la, la.len()) {
        let e = 2 * a.size() as i64 - la.size() as i64 - nu.size() as i64;
        *counts.entry(vec![e as i32]).or_default() += 1;
    }
    Ok(poly_from_counts(1, counts))
}

/// `o_{λ/ν}(t^±)`: the symplectic sum restricted to
/// `α_{l+1} ∈ {0, min(λ_{l+1}, ν_l)}`, doubled when `λ_{l+1} > 0 = ν_l`.
pub fn o_single_var(la: &GeneralizedPartition, nu: &GeneralizedPartition) -> Result<LaurentPoly> {
    single_var_lengths(la, nu)?;
    let l = nu.len();
    let la_last = la.get(l);
    let nu_last = if l == 0 { None } else { Some(nu.get(l - 1)) };
    let bound = nu_last.map_or(la_last, |v| v.min(la_last));
    let mult = if la_last > 0 && nu_last == Some(0) { 2 } else { 1 };
    let mut counts: HashMap<Vec<i32>, i64> = HashMap::new();
    for a in enumerate_between(nu, la, l + 1) {
        let last = a.get(l);
        if last != 0 && last != bound {
            continue;
        }
        let e = 2 * a.size() as i64 - la.size() as i64 - nu.size() as i64;
        *counts.entry(vec![e as i32]).or_default() += mult;
    }
    Ok(poly_from_counts(1, counts))
}

/// `S*_{λ/μ}(y_1..y_K) = det(c_ij) / det(y_i^{K-j})` with `len λ = len μ + K`,
/// `c_ij = y_i^{λ_j-j+K}` for `i <= K` and `h_{μ_{i-K}-λ_j+j-i}(y^±)` below.
pub fn sstar(la: &GeneralizedPartition, mu: &GeneralizedPartition, nvars: usize) -> Result<RationalFn> {
    check_skew_lengths(la, mu, nvars)?;
    let k = nvars as i64;
    let rows = square(la.len(), |i, j| {
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        let lj = la.get(j as usize - 1) as i64;
        if i <= k {
            LaurentPoly::var_pow(nvars, i as usize - 1, (lj - j + k) as i32)
        } else {
            hd(mu.get((i - k) as usize - 1) as i64 - lj + j - i, nvars)
        }
    });
    let num = det(&rows, nvars)?;
    let den = det(&square(nvars, |i, j| LaurentPoly::var_pow(nvars, i, (k - 1 - j as i64) as i32)), nvars)?;
    RationalFn::new(num, den)
}
