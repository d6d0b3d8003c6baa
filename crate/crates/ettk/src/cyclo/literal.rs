//! JSON literal syntax: `"n"`, `"a/b"`, or `{"n": N, "terms": [[e, "a/b"], …]}`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use super::{CycloError, Cyclotomic};

pub fn parse_rational(s: &str) -> Result<BigRational, CycloError> {
    let s = s.trim();
    match s.split_once('/') {
        None => BigInt::from_str(s)
            .map(BigRational::from_integer)
            .map_err(|_| CycloError::Parse(s.to_string())),
        Some((a, b)) => {
            let a = BigInt::from_str(a.trim()).map_err(|_| CycloError::Parse(s.to_string()))?;
            let b = BigInt::from_str(b.trim()).map_err(|_| CycloError::Parse(s.to_string()))?;
            if b == BigInt::from(0) {
                return Err(CycloError::Parse(format!("{s}: zero denominator")));
            }
            Ok(BigRational::new(a, b))
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RatLit {
    Int(i64),
    Str(String),
}

impl RatLit {
    fn value(&self) -> Result<BigRational, CycloError> {
        match self {
            RatLit::Int(k) => Ok(BigRational::from_integer(BigInt::from(*k))),
            RatLit::Str(s) => parse_rational(s),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TermsLit {
    n: u32,
    terms: Vec<(i64, RatLit)>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CycLit {
    Int(i64),
    Str(String),
    Terms(TermsLit),
}

impl CycLit {
    fn value(self) -> Result<Cyclotomic, CycloError> {
        match self {
            CycLit::Int(k) => Ok(Cyclotomic::from_int(k)),
            CycLit::Str(s) => parse_rational(&s).map(Cyclotomic::from_rational),
            CycLit::Terms(t) => {
                if t.n == 0 {
                    return Err(CycloError::Parse("conductor 0".into()));
                }
                let terms = t
                    .terms
                    .iter()
                    .map(|(e, c)| c.value().map(|c| (*e, c)))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Cyclotomic::from_terms(t.n, &terms))
            }
        }
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        CycLit::deserialize(d)?.value().map_err(de::Error::custom)
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if let Some(q) = self.as_rational() {
            return s.serialize_str(&q.to_string());
        }
        let terms: Vec<(usize, String)> = self
            .terms()
            .into_iter()
            .map(|(k, c)| (k, c.to_string()))
            .collect();
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("n", &self.conductor())?;
        m.serialize_entry("terms", &terms)?;
        m.end()
    }
}

impl FromStr for Cyclotomic {
    type Err = CycloError;

    /// Parses the JSON literal form, or a bare rational such as `-3/4`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.starts_with('{') || t.starts_with('"') {
            serde_json::from_str(t).map_err(|e| CycloError::Parse(e.to_string()))
        } else {
            parse_rational(t).map(Cyclotomic::from_rational)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_roundtrip() {
        let a: Cyclotomic = serde_json::from_str(r#"{"n":6,"terms":[[1,"1"]]}"#).unwrap();
        assert_eq!(a, Cyclotomic::root_of_unity(6, 1));
        let text = serde_json::to_string(&a).unwrap();
        assert_eq!(text, r#"{"n":3,"terms":[[0,"1"],[1,"1"]]}"#);
        let b: Cyclotomic = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string(&b).unwrap(), text);
    }

    #[test]
    fn rationals() {
        let q: Cyclotomic = serde_json::from_str(r#""-6/4""#).unwrap();
        assert_eq!(serde_json::to_string(&q).unwrap(), r#""-3/2""#);
        let k: Cyclotomic = serde_json::from_str("7").unwrap();
        assert_eq!(k, Cyclotomic::from_int(7));
        assert!(serde_json::from_str::<Cyclotomic>(r#""1/0""#).is_err());
        assert!(serde_json::from_str::<Cyclotomic>(r#""x""#).is_err());
    }
}
