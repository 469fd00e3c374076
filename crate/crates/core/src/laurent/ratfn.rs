use super::poly::LaurentPoly;
use crate::error::{Error, Result};

/// Quotient of two Laurent polynomials.
///
/// Construction tries exact division first, so a quotient that happens to be
/// a Laurent polynomial is stored with denominator 1.
#[derive(Clone, Debug)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if num.arity() != den.arity() {
            return Err(Error::ArityMismatch { left: num.arity(), right: den.arity() });
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match num.exact_div(&den) {
            Ok(q) => RationalFn::from_poly(q),
            Err(Error::NotDivisible) => RationalFn { num, den },
            Err(e) => return Err(e),
        })
    }

    /// Keeps `num / den` as given, without attempting reduction.
    pub fn unreduced(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if num.arity() != den.arity() {
            return Err(Error::ArityMismatch { left: num.arity(), right: den.arity() });
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFn { num, den })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let den = LaurentPoly::one(p.arity());
        RationalFn { num: p, den }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn arity(&self) -> usize {
        self.num.arity()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The polynomial value when the denominator divides the numerator.
    pub fn to_poly(&self) -> Option<LaurentPoly> {
        if self.den.is_one() {
            return Some(self.num.clone());
        }
        self.num.exact_div(&self.den).ok()
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Result<RationalFn> {
        Ok(RationalFn { num: self.num.checked_mul(p)?, den: self.den.clone() })
    }

    pub fn checked_add(&self, other: &RationalFn) -> Result<RationalFn> {
        if self.den == other.den {
            return Ok(RationalFn { num: self.num.checked_add(&other.num)?, den: self.den.clone() });
        }
        let num = self.num.checked_mul(&other.den)?.checked_add(&other.num.checked_mul(&self.den)?)?;
        Ok(RationalFn { num, den: self.den.checked_mul(&other.den)? })
    }

    /// Equality of values, by comparing cross products.
    pub fn value_eq(&self, other: &RationalFn) -> bool {
        self.arity() == other.arity() && &self.num * &other.den == &other.num * &self.den
    }
}

impl PartialEq for RationalFn {
    fn eq(&self, other: &Self) -> bool {
        self.value_eq(other)
    }
}

impl std::fmt::Display for RationalFn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
