use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational coefficient.
pub type Coeff = BigRational;

/// Exponent vector of a Laurent monomial, one signed entry per variable.
///
/// The derived order is lexicographic with the first variable most
/// significant. Canonical output lists terms from the largest monomial down.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Box<[i32]>);

impl Monomial {
    pub fn new(exponents: impl Into<Box<[i32]>>) -> Self {
        Monomial(exponents.into())
    }

    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity].into_boxed_slice())
    }

    pub fn exponents(&self) -> &[i32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect())
    }
}

/// Sparse multivariate Laurent polynomial with rational coefficients.
///
/// No stored coefficient is zero, so structural equality is value equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    arity: usize,
    terms: BTreeMap<Monomial, Coeff>,
}

impl LaurentPoly {
    pub fn zero(arity: usize) -> Self {
        LaurentPoly { arity, terms: BTreeMap::new() }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Coeff::one())
    }

    pub fn constant(arity: usize, c: Coeff) -> Self {
        Self::term(Monomial::one(arity), c)
    }

    pub fn from_int(arity: usize, c: i64) -> Self {
        Self::constant(arity, Coeff::from_integer(BigInt::from(c)))
    }

    /// The variable `x_{index+1}` raised to `power`.
    pub fn var_pow(arity: usize, index: usize, power: i32) -> Self {
        assert!(index < arity, "variable index {index} out of range for arity {arity}");
        let mut exps = vec![0; arity];
        exps[index] = power;
        Self::term(Monomial::new(exps), Coeff::one())
    }

    pub fn var(arity: usize, index: usize) -> Self {
        Self::var_pow(arity, index, 1)
    }

    pub fn term(m: Monomial, c: Coeff) -> Self {
        let arity = m.arity();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { arity, terms }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging
    /// repeated monomials.
    pub fn from_terms<I>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i32>, Coeff)>,
    {
        let mut p = LaurentPoly::zero(arity);
        for (exps, c) in terms {
            if exps.len() != arity {
                return Err(Error::ArityMismatch { left: arity, right: exps.len() });
            }
            p.add_term(Monomial::new(exps), c);
        }
        Ok(p)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().map(|(m, c)| m.is_one() && c.is_one()).unwrap_or(false)
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order (largest monomial first).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coeff)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exponents: &[i32]) -> Coeff {
        self.terms
            .get(&Monomial::new(exponents.to_vec()))
            .cloned()
            .unwrap_or_else(Coeff::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().next_back()
    }

    /// The constant coefficient when the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Coeff> {
        match self.terms.len() {
            0 => Some(Coeff::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_arity(&self, other: &LaurentPoly) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch { left: self.arity, right: other.arity });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_arity(other)?;
        let mut out = LaurentPoly::zero(self.arity);
        if self.is_zero() || other.is_zero() {
            return Ok(out);
        }
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    /// In-place `self += other`.
    pub fn add_assign_checked(&mut self, other: &LaurentPoly) -> Result<()> {
        self.check_arity(other)?;
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
        Ok(())
    }

    pub fn scale(&self, c: &Coeff) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.arity);
        }
        LaurentPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one(self.arity);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / divisor` in the Laurent ring.
    ///
    /// Repeatedly cancels the leading term of the remainder. Every quotient
    /// monomial must lie in the box cut out by the per-variable degree bounds
    /// of the operands; leaving it means no exact quotient exists.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_arity(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero(self.arity));
        }
        let n = self.arity;
        let (lo_a, hi_a) = self.degree_box();
        let (lo_b, hi_b) = divisor.degree_box();
        let lo: Vec<i32> = (0..n).map(|i| lo_a[i] - lo_b[i]).collect();
        let hi: Vec<i32> = (0..n).map(|i| hi_a[i] - hi_b[i]).collect();
        if (0..n).any(|i| lo[i] > hi[i]) {
            return Err(Error::NotDivisible);
        }

        let (lead_m, lead_c) = divisor.leading_term().expect("nonzero divisor");
        let lead_inv = lead_c.recip();
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero(n);
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = rm.div(lead_m);
            if qm.0.iter().enumerate().any(|(i, &e)| e < lo[i] || e > hi[i]) {
                return Err(Error::NotDivisible);
            }
            let qc = rc * &lead_inv;
            for (dm, dc) in &divisor.terms {
                rem.add_term(qm.mul(dm), -(&qc * dc));
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Per-variable minimum and maximum exponents. Zero polynomial gives
    /// empty bounds filled with zeros.
    pub fn degree_box(&self) -> (Vec<i32>, Vec<i32>) {
        let mut lo = vec![i32::MAX; self.arity];
        let mut hi = vec![i32::MIN; self.arity];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                lo[i] = lo[i].min(e);
                hi[i] = hi[i].max(e);
            }
        }
        if self.is_zero() {
            lo.fill(0);
            hi.fill(0);
        }
        (lo, hi)
    }

    /// Substitutes `x_i -> x_i^{-1}` for every `i` in `which`.
    pub fn invert_vars(&self, which: &[usize]) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.arity);
        for (m, c) in &self.terms {
            let mut e = m.0.to_vec();
            for &i in which {
                e[i] = -e[i];
            }
            out.terms.insert(Monomial::new(e), c.clone());
        }
        out
    }

    /// Renames variables: variable `i` of `self` becomes variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> LaurentPoly {
        assert_eq!(perm.len(), self.arity);
        let mut out = LaurentPoly::zero(self.arity);
        for (m, c) in &self.terms {
            let mut e = vec![0; self.arity];
            for (i, &x) in m.0.iter().enumerate() {
                e[perm[i]] = x;
            }
            out.terms.insert(Monomial::new(e), c.clone());
        }
        out
    }

    /// Places this polynomial into a ring of `arity` variables, mapping
    /// variable `i` to `positions[i]`.
    pub fn embed(&self, arity: usize, positions: &[usize]) -> LaurentPoly {
        assert_eq!(positions.len(), self.arity);
        let mut out = LaurentPoly::zero(arity);
        for (m, c) in &self.terms {
            let mut e = vec![0; arity];
            for (i, &x) in m.0.iter().enumerate() {
                e[positions[i]] += x;
            }
            out.add_term(Monomial::new(e), c.clone());
        }
        out
    }

    /// Embeds into a ring of `arity` variables starting at variable `offset`.
    pub fn shift_into(&self, arity: usize, offset: usize) -> LaurentPoly {
        let positions: Vec<usize> = (offset..offset + self.arity).collect();
        self.embed(arity, &positions)
    }

    /// Total degree in `vars` of a single monomial.
    fn graded_degree(m: &Monomial, vars: &[usize]) -> i64 {
        vars.iter().map(|&v| m.0[v] as i64).sum()
    }

    fn check_grading(&self, vars: &[usize]) -> Result<()> {
        for m in self.terms.keys() {
            for &v in vars {
                if m.0[v] < 0 {
                    return Err(Error::NegativeExponentInGrading { var: v });
                }
            }
        }
        Ok(())
    }

    /// Drops every term whose total degree in `vars` exceeds `cap`.
    pub fn truncate(&self, vars: &[usize], cap: i64) -> Result<LaurentPoly> {
        self.check_grading(vars)?;
        Ok(LaurentPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| Self::graded_degree(m, vars) <= cap)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        })
    }

    /// Product truncated to total degree `cap` in `vars`; both factors must be
    /// nonnegative in the graded variables.
    pub fn mul_truncated(&self, other: &LaurentPoly, vars: &[usize], cap: i64) -> Result<LaurentPoly> {
        self.check_arity(other)?;
        self.check_grading(vars)?;
        other.check_grading(vars)?;
        let mut out = LaurentPoly::zero(self.arity);
        for (ma, ca) in &self.terms {
            let da = Self::graded_degree(ma, vars);
            if da > cap {
                continue;
            }
            for (mb, cb) in &other.terms {
                if da + Self::graded_degree(mb, vars) <= cap {
                    out.add_term(ma.mul(mb), ca * cb);
                }
            }
        }
        Ok(out)
    }

    /// Largest and smallest total degree in `vars` over all terms.
    pub fn graded_degree_range(&self, vars: &[usize]) -> Option<(i64, i64)> {
        let mut it = self.terms.keys().map(|m| Self::graded_degree(m, vars));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d))))
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names: Some(names) }
    }
}

/// Text rendering with caller-supplied variable names.
pub struct PolyDisplay<'a> {
    poly: &'a LaurentPoly,
    names: Option<&'a [String]>,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.poly;
        if p.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in p.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = match self.names {
                    Some(names) => names[i].clone(),
                    None => format!("x{}", i + 1),
                };
                if e == 1 {
                    factors.push(name);
                } else {
                    factors.push(format!("{name}^{e}"));
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        PolyDisplay { poly: self, names: None }.fmt(f)
    }
}

// Operator sugar; arity mismatch here is a programming error.

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("arity mismatch in +")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("arity mismatch in -")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("arity mismatch in *")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}
