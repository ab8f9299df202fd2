//! Descriptor dump/load.
//!
//! Field names are frozen. Polynomials are lists of
//! `[exponent-vector, numerator, denominator]` triples, rationals are strings
//! `"p"` or `"p/q"`, and `bfun` lists ascending coefficients of `b(s)`.

use super::{Chart, InvariantDegree, OrbitChart, PvsDescriptor, RegistryError};
use crate::poly::{fmt_rat, parse_rat, MultiPoly, Rational};
use crate::weyl::UnivarPoly;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

type Triple = (Vec<u32>, i64, i64);

#[derive(Serialize, Deserialize)]
struct DegreeDoc {
    primal: u32,
    dual: u32,
}

#[derive(Serialize, Deserialize)]
struct OrbitDoc {
    sign_vector: Vec<i8>,
    sample_point: Vec<String>,
    parametrization: Chart,
    truncation: f64,
}

#[derive(Serialize, Deserialize)]
struct DescriptorDoc {
    name: String,
    dim: usize,
    rank: usize,
    basic_invariants: Vec<Vec<Triple>>,
    dual_basic_invariants: Vec<Vec<Triple>>,
    degrees: Vec<DegreeDoc>,
    orbits: Vec<OrbitDoc>,
    lambda0: Vec<String>,
    measure_exponent: Vec<String>,
    lambda_orientation: i32,
    bfun: Vec<Vec<String>>,
    kappa: Vec<String>,
    d_coeffs: Vec<u32>,
    identification: Vec<String>,
}

fn small(n: &BigInt) -> Result<i64, RegistryError> {
    n.to_i64().ok_or_else(|| RegistryError::Malformed(format!("coefficient {n} exceeds 64 bits")))
}

fn poly_doc(p: &MultiPoly) -> Result<Vec<Triple>, RegistryError> {
    p.terms().map(|(e, c)| Ok((e.clone(), small(c.numer())?, small(c.denom())?))).collect()
}

fn poly_from(nvars: usize, doc: &[Triple]) -> Result<MultiPoly, RegistryError> {
    let mut p = MultiPoly::zero(nvars);
    for (e, num, den) in doc {
        if e.len() != nvars || *den == 0 {
            return Err(RegistryError::Malformed(format!("bad term {e:?} {num}/{den}")));
        }
        p.add_term(e.clone(), Rational::new((*num).into(), (*den).into()));
    }
    Ok(p)
}

fn rats(v: &[Rational]) -> Vec<String> {
    v.iter().map(fmt_rat).collect()
}

fn parse_all(v: &[String]) -> Result<Vec<Rational>, RegistryError> {
    v.iter().map(|s| parse_rat(s).ok_or_else(|| RegistryError::Malformed(format!("not a rational: {s}")))).collect()
}

pub fn to_json(desc: &PvsDescriptor) -> Result<String, RegistryError> {
    let doc = DescriptorDoc {
        name: desc.name.clone(),
        dim: desc.dim,
        rank: desc.rank,
        basic_invariants: desc.basic_invariants.iter().map(poly_doc).collect::<Result<_, _>>()?,
        dual_basic_invariants: desc.dual_basic_invariants.iter().map(poly_doc).collect::<Result<_, _>>()?,
        degrees: desc.degrees.iter().map(|d| DegreeDoc { primal: d.primal, dual: d.dual }).collect(),
        orbits: desc
            .orbits
            .iter()
            .map(|o| OrbitDoc {
                sign_vector: o.sign_vector.clone(),
                sample_point: rats(&o.sample_point),
                parametrization: o.parametrization,
                truncation: o.truncation,
            })
            .collect(),
        lambda0: rats(&desc.lambda0),
        measure_exponent: rats(&desc.measure_exponent),
        lambda_orientation: desc.lambda_orientation,
        bfun: desc.bfun.iter().map(|b| rats(b.coeffs())).collect(),
        kappa: rats(&desc.kappa),
        d_coeffs: desc.d_coeffs.clone(),
        identification: rats(&desc.identification),
    };
    serde_json::to_string_pretty(&doc).map_err(|e| RegistryError::Malformed(e.to_string()))
}

pub fn from_json(text: &str) -> Result<PvsDescriptor, RegistryError> {
    let doc: DescriptorDoc = serde_json::from_str(text).map_err(|e| RegistryError::Malformed(e.to_string()))?;
    let n = doc.dim;
    Ok(PvsDescriptor {
        name: doc.name,
        dim: n,
        rank: doc.rank,
        basic_invariants: doc.basic_invariants.iter().map(|p| poly_from(n, p)).collect::<Result<_, _>>()?,
        dual_basic_invariants: doc.dual_basic_invariants.iter().map(|p| poly_from(n, p)).collect::<Result<_, _>>()?,
        degrees: doc.degrees.iter().map(|d| InvariantDegree { primal: d.primal, dual: d.dual }).collect(),
        orbits: doc
            .orbits
            .iter()
            .map(|o| {
                Ok(OrbitChart {
                    sign_vector: o.sign_vector.clone(),
                    sample_point: parse_all(&o.sample_point)?,
                    parametrization: o.parametrization,
                    truncation: o.truncation,
                })
            })
            .collect::<Result<_, RegistryError>>()?,
        lambda0: parse_all(&doc.lambda0)?,
        measure_exponent: parse_all(&doc.measure_exponent)?,
        lambda_orientation: doc.lambda_orientation,
        bfun: doc.bfun.iter().map(|b| parse_all(b).map(UnivarPoly::new)).collect::<Result<_, _>>()?,
        kappa: parse_all(&doc.kappa)?,
        d_coeffs: doc.d_coeffs,
        identification: parse_all(&doc.identification)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::{builtin_spaces, dual};

    #[test]
    fn round_trip_all_builtins() {
        for d in builtin_spaces() {
            for desc in [d.clone(), dual(&d)] {
                let text = to_json(&desc).unwrap();
                assert_eq!(from_json(&text).unwrap(), desc);
            }
        }
    }

    #[test]
    fn polynomial_encoding() {
        let t = crate::registry::builtin_space("QF_1_1").unwrap();
        let v: serde_json::Value = serde_json::from_str(&to_json(&t).unwrap()).unwrap();
        assert_eq!(v["basic_invariants"][0], serde_json::json!([[[0, 2], -1, 1], [[2, 0], 1, 1]]));
        assert_eq!(v["orbits"][1]["parametrization"]["kind"], "HYPERBOLOID_SHELL");
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(from_json("{}"), Err(RegistryError::Malformed(_))));
    }
}
