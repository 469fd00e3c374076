use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::poly::LaurentPoly;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<i64>,
    num: String,
    den: String,
}

/// Wire form: `{"arity": n, "terms": [{"exp": [...], "num": "..", "den": ".."}]}`
/// with terms in canonical order.
#[derive(Serialize, Deserialize)]
pub struct PolyJson {
    arity: usize,
    terms: Vec<TermJson>,
}

impl From<&LaurentPoly> for PolyJson {
    fn from(p: &LaurentPoly) -> Self {
        PolyJson {
            arity: p.arity(),
            terms: p
                .terms()
                .map(|(m, c)| TermJson {
                    exp: m.exponents().iter().map(|&e| e as i64).collect(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }
}

impl From<LaurentPoly> for PolyJson {
    fn from(p: LaurentPoly) -> Self {
        PolyJson::from(&p)
    }
}

impl TryFrom<PolyJson> for LaurentPoly {
    type Error = Error;

    fn try_from(j: PolyJson) -> Result<LaurentPoly> {
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in j.terms {
            let exps = t
                .exp
                .iter()
                .map(|&e| i32::try_from(e).map_err(|_| Error::Parse(format!("exponent {e} out of range"))))
                .collect::<Result<Vec<i32>>>()?;
            let num: BigInt = t.num.parse().map_err(|_| Error::Parse(format!("bad numerator `{}`", t.num)))?;
            let den: BigInt = t.den.parse().map_err(|_| Error::Parse(format!("bad denominator `{}`", t.den)))?;
            if den == BigInt::from(0) {
                return Err(Error::Parse("zero denominator".into()));
            }
            terms.push((exps, BigRational::new(num, den)));
        }
        LaurentPoly::from_terms(j.arity, terms)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        LaurentPoly::try_from(j).map_err(serde::de::Error::custom)
    }
}

impl LaurentPoly {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<LaurentPoly> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}
