//! Library values against brute-force oracles written independently of the
//! library algorithms.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use schurlab::genfunc::{h_plain, h_sympl, o_bialt, schur_bialt, sp_bialt};
use schurlab::laurent::{det, det_bareiss, det_cofactor};
use schurlab::partition::{enumerate_between, enumerate_chains, interlaces, partitions_up_to};
use schurlab::skew_bcd::{
    o_jt, o_single_var, skew_o_gt, skew_o_jt, skew_sp_gt, skew_sp_jt, sp_jt, sp_single_var, sstar,
};
use schurlab::skew_schur::{schur_jt, skew_schur_gt, skew_schur_jt};
use schurlab::{gp, GeneralizedPartition, LaurentPoly};

fn poly(arity: usize, counts: HashMap<Vec<i32>, i64>) -> LaurentPoly {
    LaurentPoly::from_terms(
        arity,
        counts.into_iter().map(|(e, c)| (e, BigRational::from_integer(BigInt::from(c)))),
    )
    .unwrap()
}

fn lit(arity: usize, terms: &[(&[i32], i64)]) -> LaurentPoly {
    let mut m = HashMap::new();
    for (e, c) in terms {
        *m.entry(e.to_vec()).or_insert(0) += c;
    }
    poly(arity, m)
}

fn value_at_one(p: &LaurentPoly) -> BigRational {
    p.terms().map(|(_, c)| c.clone()).sum()
}

fn shapes(max_len: usize, max_weight: u32) -> Vec<Vec<u32>> {
    partitions_up_to(max_len, max_weight).into_iter().map(|p| p.parts().to_vec()).collect()
}

fn g(v: &[u32]) -> GeneralizedPartition {
    GeneralizedPartition::new(v.to_vec()).unwrap()
}

// Semistandard tableaux of shape λ/μ with entries in 1..=n.
fn ssyt_poly(la: &[u32], mu: &[u32], n: usize) -> LaurentPoly {
    let part = |v: &[u32], i: usize| v.get(i).copied().unwrap_or(0) as usize;
    let rows = la.len().max(mu.len());
    if (0..rows).any(|r| part(mu, r) > part(la, r)) {
        return LaurentPoly::zero(n);
    }
    let cells: Vec<(usize, usize)> =
        (0..rows).flat_map(|r| (part(mu, r)..part(la, r)).map(move |c| (r, c))).collect();
    let mut counts = HashMap::new();
    let mut fill: HashMap<(usize, usize), usize> = HashMap::new();
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        n: usize,
        fill: &mut HashMap<(usize, usize), usize>,
        counts: &mut HashMap<Vec<i32>, i64>,
    ) {
        if k == cells.len() {
            let mut e = vec![0i32; n];
            for v in fill.values() {
                e[*v] += 1;
            }
            *counts.entry(e).or_insert(0) += 1;
            return;
        }
        let (r, c) = cells[k];
        let lo_left = if c > 0 { fill.get(&(r, c - 1)).copied() } else { None };
        let above = if r > 0 { fill.get(&(r - 1, c)).copied() } else { None };
        let lo = lo_left.unwrap_or(0).max(above.map_or(0, |a| a + 1));
        for v in lo..n {
            fill.insert((r, c), v);
            go(k + 1, cells, n, fill, counts);
        }
        fill.remove(&(r, c));
    }
    go(0, &cells, n, &mut fill, &mut counts);
    poly(n, counts)
}

// Multisets of size k from the given letters, each letter an exponent vector.
fn complete_homogeneous(letters: &[Vec<i32>], k: usize, arity: usize) -> LaurentPoly {
    let mut counts = HashMap::new();
    fn go(letters: &[Vec<i32>], start: usize, left: usize, acc: &mut Vec<i32>, counts: &mut HashMap<Vec<i32>, i64>) {
        if left == 0 {
            *counts.entry(acc.clone()).or_insert(0) += 1;
            return;
        }
        for i in start..letters.len() {
            for (a, b) in acc.iter_mut().zip(&letters[i]) {
                *a += b;
            }
            go(letters, i, left - 1, acc, counts);
            for (a, b) in acc.iter_mut().zip(&letters[i]) {
                *a -= b;
            }
        }
    }
    go(letters, 0, k, &mut vec![0; arity], &mut counts);
    poly(arity, counts)
}

fn unit(arity: usize, i: usize, s: i32) -> Vec<i32> {
    let mut e = vec![0; arity];
    e[i] = s;
    e
}

fn leibniz(m: &[Vec<LaurentPoly>], arity: usize) -> LaurentPoly {
    let n = m.len();
    let mut total = LaurentPoly::zero(arity);
    let mut perm: Vec<usize> = (0..n).collect();
    fn heap(k: usize, perm: &mut Vec<usize>, sign: &mut i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if k <= 1 {
            out.push((perm.clone(), *sign));
            return;
        }
        for i in 0..k - 1 {
            heap(k - 1, perm, sign, out);
            let j = if k % 2 == 0 { i } else { 0 };
            perm.swap(j, k - 1);
            *sign = -*sign;
        }
        heap(k - 1, perm, sign, out);
    }
    let mut all = Vec::new();
    let mut sign = 1;
    heap(n, &mut perm, &mut sign, &mut all);
    for (p, s) in all {
        let mut term = LaurentPoly::from_int(arity, s);
        for (i, &j) in p.iter().enumerate() {
            term = term.checked_mul(&m[i][j]).unwrap();
        }
        total = total.checked_add(&term).unwrap();
    }
    total
}

fn my_interlaces(nu: &[u32], la: &[u32]) -> bool {
    // ν_i in [λ_{i+1}, λ_i]; lengths len λ or len λ - 1.
    if nu.len() != la.len() && nu.len() + 1 != la.len() {
        return false;
    }
    (0..nu.len()).all(|i| nu[i] <= la[i] && la.get(i + 1).map_or(true, |&b| nu[i] >= b))
}

fn gen_parts(len: usize, max_part: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                let cap = v.last().copied().unwrap_or(max_part);
                (0..=cap).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

// One-variable α-sums for ν of length l and λ of length l + 1.
fn alpha_sum(la: &[u32], nu: &[u32], orthogonal: bool) -> LaurentPoly {
    let l = nu.len();
    let (sl, sn) = (la.iter().sum::<u32>() as i32, nu.iter().sum::<u32>() as i32);
    let mut counts = HashMap::new();
    for alpha in gen_parts(l + 1, la[0]) {
        if !my_interlaces(nu, &alpha) || !my_interlaces(&alpha, la) || alpha.len() != la.len() {
            continue;
        }
        // α ≺ λ at equal length also needs α_{l+1} <= λ_{l+1}.
        if alpha[l] > la[l] {
            continue;
        }
        let mut mult = 1;
        if orthogonal {
            let nu_last = if l == 0 { u32::MAX } else { nu[l - 1] };
            let bound = la[l].min(nu_last);
            if alpha[l] != 0 && alpha[l] != bound {
                continue;
            }
            if la[l] > 0 && l > 0 && nu[l - 1] == 0 {
                mult = 2;
            }
        }
        let a: i32 = alpha.iter().sum::<u32>() as i32;
        *counts.entry(vec![2 * a - sl - sn]).or_insert(0) += mult;
    }
    poly(1, counts)
}

fn ratio(num: i128, den: i128) -> Ratio<i128> {
    Ratio::new(num, den)
}

fn to_big(r: Ratio<i128>) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

fn dim_gl(la: &[u32], n: usize) -> Ratio<i128> {
    let l = |i: usize| la.get(i).copied().unwrap_or(0) as i128 - i as i128;
    let mut d = ratio(1, 1);
    for i in 0..n {
        for j in i + 1..n {
            d *= ratio(l(i) - l(j), (j - i) as i128);
        }
    }
    d
}

fn dim_sp(la: &[u32], n: usize) -> Ratio<i128> {
    let l = |i: usize| la.get(i).copied().unwrap_or(0) as i128 + (n - i) as i128;
    let r = |i: usize| (n - i) as i128;
    let mut d = ratio(1, 1);
    for i in 0..n {
        d *= ratio(l(i), r(i));
        for j in i + 1..n {
            d *= ratio((l(i) - l(j)) * (l(i) + l(j)), (r(i) - r(j)) * (r(i) + r(j)));
        }
    }
    d
}

fn dim_o_even(la: &[u32], n: usize) -> Ratio<i128> {
    let l = |i: usize| la.get(i).copied().unwrap_or(0) as i128 + (n - 1 - i) as i128;
    let r = |i: usize| (n - 1 - i) as i128;
    let mut d = ratio(1, 1);
    for i in 0..n {
        for j in i + 1..n {
            d *= ratio((l(i) - l(j)) * (l(i) + l(j)), (r(i) - r(j)) * (r(i) + r(j)));
        }
    }
    if la.get(n - 1).copied().unwrap_or(0) > 0 {
        d * 2
    } else {
        d
    }
}

#[test]
fn complete_homogeneous_matches_multisets() {
    for n in 1..=3 {
        let plain: Vec<Vec<i32>> = (0..n).map(|i| unit(n, i, 1)).collect();
        let both: Vec<Vec<i32>> = (0..n).flat_map(|i| [unit(n, i, 1), unit(n, i, -1)]).collect();
        for k in 0..=5 {
            assert_eq!(h_plain(k as i64, n), complete_homogeneous(&plain, k, n), "h_{k} in {n} vars");
            assert_eq!(h_sympl(k as i64, n), complete_homogeneous(&both, k, n), "h_{k}(x^±) in {n} vars");
        }
        assert!(h_plain(-1, n).is_zero());
        assert!(h_sympl(-2, n).is_zero());
    }
}

#[test]
fn one_variable_h_is_palindromic_range() {
    for i in 0..=6i32 {
        let want: HashMap<Vec<i32>, i64> = (0..=i).map(|k| (vec![i - 2 * k], 1)).collect();
        assert_eq!(h_sympl(i as i64, 1), poly(1, want));
    }
}

#[test]
fn schur_matches_tableaux() {
    for n in 1..=4 {
        for la in shapes(4, 6) {
            let want = ssyt_poly(&la, &[], n);
            assert_eq!(schur_jt(&g(&la), n), want, "jt {la:?} n={n}");
            if la.len() <= n {
                assert_eq!(schur_bialt(&g(&la), n).unwrap(), want, "bialt {la:?} n={n}");
            } else {
                assert!(want.is_zero());
            }
            assert_eq!(skew_schur_gt(&g(&la), &gp![], n), want, "gt {la:?} n={n}");
        }
    }
}

#[test]
fn skew_schur_matches_tableaux() {
    for n in 1..=3 {
        for la in shapes(3, 5) {
            for mu in shapes(3, 4) {
                let want = ssyt_poly(&la, &mu, n);
                assert_eq!(skew_schur_jt(&g(&la), &g(&mu), n), want, "jt {la:?}/{mu:?} n={n}");
                assert_eq!(skew_schur_gt(&g(&la), &g(&mu), n), want, "gt {la:?}/{mu:?} n={n}");
            }
        }
    }
}

#[test]
fn one_variable_skew_schur_is_a_monomial() {
    for la in shapes(3, 6) {
        for nu in shapes(3, 6) {
            let (l, v) = (g(&la), g(&nu));
            let got = skew_schur_jt(&l, &v, 1);
            let want = if interlaces(&v, &l) {
                LaurentPoly::var_pow(1, 0, (l.size() - v.size()) as i32)
            } else {
                LaurentPoly::zero(1)
            };
            assert_eq!(got, want, "{la:?}/{nu:?}");
        }
    }
}

#[test]
fn determinant_matches_leibniz() {
    let x = |p: i32| LaurentPoly::var_pow(2, 0, p);
    let y = |p: i32| LaurentPoly::var_pow(2, 1, p);
    for n in 1..=8usize {
        let m: Vec<Vec<LaurentPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let (i, j) = (i as i32, j as i32);
                        x(i - j)
                            .checked_add(&y((i * j) % 3 - 1))
                            .unwrap()
                            .checked_add(&LaurentPoly::from_int(2, ((i + 2 * j) % 5 - 2) as i64))
                            .unwrap()
                    })
                    .collect()
            })
            .collect();
        if n <= 6 {
            let want = leibniz(&m, 2);
            assert_eq!(det(&m, 2).unwrap(), want, "n={n}");
            assert_eq!(det_cofactor(&m, 2).unwrap(), want, "n={n}");
            assert_eq!(det_bareiss(&m, 2).unwrap(), want, "n={n}");
        } else {
            assert_eq!(det_bareiss(&m, 2).unwrap(), det_cofactor(&m, 2).unwrap(), "n={n}");
        }
    }
}

#[test]
fn dimensions_at_the_identity() {
    for n in 1..=3 {
        for la in shapes(n, 5) {
            let gl = g(&la);
            assert_eq!(value_at_one(&schur_jt(&gl, n)), to_big(dim_gl(&la, n)), "s {la:?} n={n}");
            assert_eq!(value_at_one(&sp_jt(&gl, n).unwrap()), to_big(dim_sp(&la, n)), "sp {la:?} n={n}");
            assert_eq!(value_at_one(&sp_bialt(&gl, n).unwrap()), to_big(dim_sp(&la, n)), "sp {la:?} n={n}");
            assert_eq!(value_at_one(&o_jt(&gl, n).unwrap()), to_big(dim_o_even(&la, n)), "o {la:?} n={n}");
            assert_eq!(value_at_one(&o_bialt(&gl, n).unwrap()), to_big(dim_o_even(&la, n)), "o {la:?} n={n}");
        }
    }
}

#[test]
fn one_variable_skew_sp_and_o_match_alpha_sums() {
    for l in 0..=3 {
        for nu in gen_parts(l, 5) {
            for la in gen_parts(l + 1, 5) {
                if nu.iter().sum::<u32>() > 5 || la.iter().sum::<u32>() > 5 {
                    continue;
                }
                let (gl, gn) = (g(&la), g(&nu));
                let sp = alpha_sum(&la, &nu, false);
                let o = alpha_sum(&la, &nu, true);
                assert_eq!(skew_sp_jt(&gl, &gn, 1).unwrap(), sp, "sp {la:?}/{nu:?}");
                assert_eq!(sp_single_var(&gl, &gn).unwrap(), sp, "sp {la:?}/{nu:?}");
                assert_eq!(skew_o_jt(&gl, &gn, 1).unwrap(), o, "o {la:?}/{nu:?}");
                assert_eq!(o_single_var(&gl, &gn).unwrap(), o, "o {la:?}/{nu:?}");
            }
        }
    }
}

#[test]
fn sstar_of_straight_shape_is_schur() {
    for n in 1..=3 {
        for la in gen_parts(n, 4) {
            let got = sstar(&g(&la), &gp![], n).unwrap();
            assert_eq!(got.to_poly().unwrap(), ssyt_poly(&la, &[], n), "{la:?}");
        }
    }
}

#[test]
fn sstar_vanishes_without_a_final_zero() {
    // λ of length M + N over μ = (μ', 0) of length M.
    for (la, mu, n) in [(gp![2, 1, 1], gp![1, 0], 1), (gp![2, 1], gp![0], 1), (gp![3, 2, 1], gp![1, 0], 1)] {
        assert!(sstar(&la, &mu, n).unwrap().to_poly().unwrap().is_zero(), "{la}/{mu}");
    }
    assert!(!sstar(&gp![2, 1, 0], &gp![1, 0], 1).unwrap().to_poly().unwrap().is_zero());
}

#[test]
fn sstar_strips_common_zeros() {
    for (la, mu, n) in [(gp![2, 1], gp![1], 1), (gp![3, 1, 0], gp![2], 2), (gp![2, 2], gp![1], 1)] {
        let base = sstar(&la, &mu, n).unwrap();
        let padded = sstar(&la.with_zeros(1), &mu.with_zeros(1), n).unwrap();
        assert!(base.value_eq(&padded), "{la}/{mu}");
    }
}

#[test]
fn enumeration_examples() {
    let mut between = enumerate_between(&gp![], &gp![1], 1);
    between.sort_by(|a, b| a.parts().cmp(b.parts()));
    assert_eq!(between, vec![gp![0], gp![1]]);
    assert_eq!(enumerate_between(&gp![1], &gp![1, 0], 2), vec![gp![1, 0]]);
    assert_eq!(enumerate_chains(&gp![], &gp![1], &[0, 1, 1]).len(), 2);
    assert_eq!(enumerate_chains(&gp![1], &gp![1, 0], &[1, 2]).len(), 1);
    assert!(enumerate_chains(&gp![2], &gp![1, 1], &[1, 2]).is_empty());
    assert_eq!(partitions_up_to(2, 2), vec![gp![], gp![1], gp![2], gp![1, 1]]);
    assert_eq!(partitions_up_to(1, 2), vec![gp![], gp![1], gp![2]]);
    assert_eq!(partitions_up_to(0, 3), vec![gp![]]);
}

#[test]
fn documented_values() {
    assert_eq!(h_plain(2, 2), lit(2, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)]));
    assert_eq!(h_sympl(1, 2), lit(2, &[(&[1, 0], 1), (&[-1, 0], 1), (&[0, 1], 1), (&[0, -1], 1)]));
    assert_eq!(schur_bialt(&gp![2, 1], 2).unwrap(), lit(2, &[(&[2, 1], 1), (&[1, 2], 1)]));
    let t = lit(1, &[(&[1], 1), (&[-1], 1)]);
    assert_eq!(sp_bialt(&gp![1], 1).unwrap(), t);
    assert_eq!(sp_jt(&gp![2], 1).unwrap(), lit(1, &[(&[2], 1), (&[0], 1), (&[-2], 1)]));
    assert_eq!(o_jt(&gp![1], 1).unwrap(), t);
    assert!(o_bialt(&gp![], 2).unwrap().is_one());
    assert_eq!(skew_schur_jt(&gp![3, 1], &gp![2], 1), LaurentPoly::var_pow(1, 0, 2));
    assert_eq!(skew_schur_gt(&gp![1], &gp![], 2), lit(2, &[(&[1, 0], 1), (&[0, 1], 1)]));
    assert!(skew_sp_jt(&gp![1, 0], &gp![1], 1).unwrap().is_one());
    assert!(skew_sp_gt(&gp![1, 0], &gp![1], 1).unwrap().is_one());
    assert_eq!(skew_sp_jt(&gp![1, 0], &gp![0], 1).unwrap(), t);
    assert_eq!(skew_sp_gt(&gp![1], &gp![], 1).unwrap(), t);
    assert!(skew_o_jt(&gp![0], &gp![], 1).unwrap().is_one());
    assert_eq!(skew_o_gt(&gp![1], &gp![], 1).unwrap(), t);
    assert_eq!(skew_o_gt(&gp![1, 0], &gp![1], 1).unwrap(), skew_o_jt(&gp![1, 0], &gp![1], 1).unwrap());
    assert_eq!(o_bialt(&gp![1, 1], 2).unwrap(), skew_o_gt(&gp![1, 1], &gp![], 2).unwrap());
}
