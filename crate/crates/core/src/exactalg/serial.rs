//! JSON forms: `{"var":"q","coeffs":["c0","c1",...]}` for polynomials
//! (decimal strings, `p/q` for rational coefficients) and
//! `{"num":…,"den":…}` for rational functions.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{QPoly, RatFn, RatPoly};

#[derive(Serialize, Deserialize)]
struct PolyJson {
    var: String,
    coeffs: Vec<String>,
}

fn check_var<E: serde::de::Error>(var: &str) -> Result<(), E> {
    if var == "q" {
        Ok(())
    } else {
        Err(E::custom(format!("expected variable `q`, found `{var}`")))
    }
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson {
            var: "q".into(),
            coeffs: self.coeffs().iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        check_var(&raw.var)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|c| {
                c.parse::<BigInt>()
                    .map_err(|_| D::Error::custom(format!("bad coefficient `{c}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(QPoly::from_coeffs(coeffs))
    }
}

impl Serialize for RatPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson {
            var: "q".into(),
            coeffs: self.coeffs().iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        check_var(&raw.var)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|c| {
                c.parse::<BigRational>()
                    .map_err(|_| D::Error::custom(format!("bad coefficient `{c}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RatPoly::from_coeffs(coeffs))
    }
}

#[derive(Serialize, Deserialize)]
struct RatFnJson {
    num: RatPoly,
    den: RatPoly,
}

impl Serialize for RatFn {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RatFnJson {
            num: self.num().clone(),
            den: self.den().clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFn {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RatFnJson::deserialize(d)?;
        RatFn::from_ratpolys(raw.num, raw.den).map_err(D::Error::custom)
    }
}
