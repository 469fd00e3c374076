//! Schur and skew Schur polynomials by Jacobi–Trudi determinants and by
//! Gelfand–Tsetlin pattern sums.

use std::collections::HashMap;

use num_rational::BigRational;

use crate::genfunc::Alphabet;
use crate::laurent::{det, LaurentPoly};
use crate::partition::{contains, enumerate_chains, GeneralizedPartition};

/// Sums monomials counted with integer multiplicity.
pub(crate) fn poly_from_counts(arity: usize, counts: HashMap<Vec<i32>, i64>) -> LaurentPoly {
    LaurentPoly::from_terms(
        arity,
        counts
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(e, c)| (e, BigRational::from_integer(c.into()))),
    )
    .expect("exponent vectors have the right arity")
}

/// `s_λ(x_1..x_N) = det(h_{λ_i-i+j})` of size `max(len λ, N)`.
pub fn schur_jt(la: &GeneralizedPartition, nvars: usize) -> LaurentPoly {
    let size = la.len().max(nvars);
    let la = la.padded(size).expect("size covers λ");
    skew_jt_in(&la, &GeneralizedPartition::zeros(size), Alphabet::plain(nvars))
}

/// `s_{λ/μ}(x_1..x_N) = det(h_{λ_i-μ_j-i+j})` of size `max(len λ, len μ)`.
pub fn skew_schur_jt(la: &GeneralizedPartition, mu: &GeneralizedPartition, nvars: usize) -> LaurentPoly {
    skew_schur_jt_in(la, mu, Alphabet::plain(nvars))
}

/// The skew Schur determinant evaluated in an arbitrary alphabet, e.g. the
/// doubled one.
pub fn skew_schur_jt_in(la: &GeneralizedPartition, mu: &GeneralizedPartition, alphabet: Alphabet) -> LaurentPoly {
    if !contains(mu, la) {
        return LaurentPoly::zero(alphabet.n_vars);
    }
    skew_jt_in(la, mu, alphabet)
}

fn skew_jt_in(la: &GeneralizedPartition, mu: &GeneralizedPartition, alphabet: Alphabet) -> LaurentPoly {
    let k = la.len().max(mu.len());
    let rows: Vec<Vec<LaurentPoly>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| alphabet.h(la.get(i) as i64 - mu.get(j) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    det(&rows, alphabet.n_vars).expect("square matrix of matching arity")
}

/// `s_{λ/μ}(x_1..x_N)` as a sum over chains `μ = z_0 ≺ ... ≺ z_N = λ` with
/// weight `∏ x_i^{|z_i|-|z_{i-1}|}`. Trailing zeros are ignored.
pub fn skew_schur_gt(la: &GeneralizedPartition, mu: &GeneralizedPartition, nvars: usize) -> LaurentPoly {
    let (la, mu) = (la.normalize(), mu.normalize());
    if !contains(&mu, &la) {
        return LaurentPoly::zero(nvars);
    }
    if nvars == 0 {
        return if la == mu { LaurentPoly::one(0) } else { LaurentPoly::zero(0) };
    }
    let len = la.len();
    let mu = mu.padded(len).expect("μ ⊂ λ");
    let la = la.padded(len).expect("same length");
    let lengths = vec![len; nvars + 1];
    let mut counts: HashMap<Vec<i32>, i64> = HashMap::new();
    for chain in enumerate_chains(&mu, &la, &lengths) {
        let exps: Vec<i32> = chain.windows(2).map(|w| (w[1].size() - w[0].size()) as i32).collect();
        *counts.entry(exps).or_default() += 1;
    }
    poly_from_counts(nvars, counts)
}
