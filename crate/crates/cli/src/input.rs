//! JSON input documents and the inline command-line formats.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Number;
use torfix_core::arith::matrix::IntMatrix;
use torfix_core::{
    AlgebraElement, AnalyticRep, BigRational, CharPolyQuartic, CmElement, CmField, Endomorphism,
    EndomorphismInput, IntPolynomial, QuadNumber, QuaternionElement, RationalRep, RealQuadElement,
};

use crate::CliError;

/// An integer given as a JSON number or a decimal string.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IntValue {
    Number(Number),
    Text(String),
}

impl IntValue {
    pub fn from_big(x: &BigInt) -> Self {
        IntValue::Number(Number::from_str(&x.to_string()).expect("decimal integer"))
    }

    pub fn to_big(&self) -> Result<BigInt, CliError> {
        let s = match self {
            IntValue::Number(n) => n.to_string(),
            IntValue::Text(s) => s.clone(),
        };
        BigInt::from_str(s.trim())
            .map_err(|_| CliError::Malformed(format!("expected an integer, got {s:?}")))
    }

    fn to_i64(&self) -> Result<i64, CliError> {
        i64::try_from(self.to_big()?)
            .map_err(|_| CliError::Malformed("integer out of range".into()))
    }
}

/// A rational given as a `"p/q"` or `"p"` string, or a JSON integer.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RatValue {
    Number(Number),
    Text(String),
}

impl RatValue {
    pub fn from_rational(x: &BigRational) -> Self {
        RatValue::Text(x.to_string())
    }

    pub fn to_rational(&self) -> Result<BigRational, CliError> {
        match self {
            RatValue::Number(n) => IntValue::Number(n.clone())
                .to_big()
                .map(BigRational::from_integer),
            RatValue::Text(s) => parse_rational(s),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, CliError> {
    let bad = || CliError::Malformed(format!("expected a rational p/q, got {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let (p, q) = (
                BigInt::from_str(p.trim()).map_err(|_| bad())?,
                BigInt::from_str(q.trim()).map_err(|_| bad())?,
            );
            if q == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => BigInt::from_str(s)
            .map(BigRational::from_integer)
            .map_err(|_| bad()),
    }
}

pub fn parse_poly(s: &str) -> Result<IntPolynomial, CliError> {
    IntPolynomial::from_str(s).map_err(|e| CliError::Malformed(e.to_string()))
}

fn parse_list<T>(s: &str, f: impl Fn(&str) -> Result<T, CliError>) -> Result<Vec<T>, CliError> {
    s.split(',').map(f).collect()
}

/// Algebra elements, tagged by `kind`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum AlgebraDoc {
    Integer {
        value: IntValue,
    },
    RealQuad {
        d: IntValue,
        a: IntValue,
        b: IntValue,
    },
    Quaternion {
        alpha: RatValue,
        beta: RatValue,
        coeffs: [RatValue; 4],
    },
    Cm {
        g: String,
        coords: [RatValue; 4],
        #[serde(default, skip_serializing_if = "Option::is_none")]
        e: Option<IntValue>,
    },
}

/// The top-level input document, tagged by `kind`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum InputDoc {
    RationalRep {
        matrix: Vec<Vec<IntValue>>,
    },
    /// Entries are `[u, v]` pairs meaning `u + v√field`.
    AnalyticRep {
        field: IntValue,
        matrix: Vec<Vec<[RatValue; 2]>>,
    },
    CharPoly {
        poly: String,
    },
    Algebra {
        element: AlgebraDoc,
    },
    Integer {
        value: IntValue,
    },
    RealQuad {
        d: IntValue,
        a: IntValue,
        b: IntValue,
    },
    Quaternion {
        alpha: RatValue,
        beta: RatValue,
        coeffs: [RatValue; 4],
    },
    Cm {
        g: String,
        coords: [RatValue; 4],
        #[serde(default, skip_serializing_if = "Option::is_none")]
        e: Option<IntValue>,
    },
}

fn rationals4(c: &[RatValue; 4]) -> Result<[BigRational; 4], CliError> {
    Ok([
        c[0].to_rational()?,
        c[1].to_rational()?,
        c[2].to_rational()?,
        c[3].to_rational()?,
    ])
}

impl AlgebraDoc {
    pub fn to_element(&self) -> Result<AlgebraElement, CliError> {
        Ok(match self {
            AlgebraDoc::Integer { value } => AlgebraElement::Integer(value.to_big()?),
            AlgebraDoc::RealQuad { d, a, b } => AlgebraElement::RealQuad(RealQuadElement::new(
                d.to_i64()?,
                a.to_big()?,
                b.to_big()?,
            )?),
            AlgebraDoc::Quaternion {
                alpha,
                beta,
                coeffs,
            } => AlgebraElement::Quaternion(QuaternionElement::new(
                alpha.to_rational()?,
                beta.to_rational()?,
                rationals4(coeffs)?,
            )?),
            AlgebraDoc::Cm { g, coords, e } => {
                let e = e.as_ref().map(IntValue::to_big).transpose()?;
                let field = CmField::new(parse_poly(g)?, e)?;
                AlgebraElement::Cm(CmElement::new(field, rationals4(coords)?))
            }
        })
    }

    pub fn from_element(x: &AlgebraElement) -> Self {
        let rats = |c: &[BigRational; 4]| c.clone().map(|x| RatValue::from_rational(&x));
        match x {
            AlgebraElement::Integer(m) => AlgebraDoc::Integer {
                value: IntValue::from_big(m),
            },
            AlgebraElement::RealQuad(x) => AlgebraDoc::RealQuad {
                d: IntValue::from_big(&x.d().into()),
                a: IntValue::from_big(x.a()),
                b: IntValue::from_big(x.b()),
            },
            AlgebraElement::Quaternion(x) => {
                let (alpha, beta) = x.algebra().original();
                AlgebraDoc::Quaternion {
                    alpha: RatValue::from_rational(&alpha),
                    beta: RatValue::from_rational(&beta),
                    coeffs: rats(&x.original_coords()),
                }
            }
            AlgebraElement::Cm(x) => AlgebraDoc::Cm {
                g: x.field().defining_poly().to_string(),
                coords: rats(x.coords()),
                e: x.field().e().map(IntValue::from_big),
            },
        }
    }
}

impl InputDoc {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text)
            .map_err(|e| CliError::Malformed(format!("invalid input document: {e}")))
    }

    pub fn to_input(&self) -> Result<EndomorphismInput, CliError> {
        Ok(match self {
            InputDoc::RationalRep { matrix } => {
                let rows = matrix
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(IntValue::to_big)
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<IntMatrix, _>>()?;
                rational_rep(rows)?
            }
            InputDoc::AnalyticRep { field, matrix } => {
                if matrix.len() != 2 || matrix.iter().any(|r| r.len() != 2) {
                    return Err(CliError::Malformed("analytic matrix must be 2x2".into()));
                }
                let q = |e: &[RatValue; 2]| -> Result<QuadNumber, CliError> {
                    Ok(QuadNumber::new(e[0].to_rational()?, e[1].to_rational()?))
                };
                let entries = [
                    [q(&matrix[0][0])?, q(&matrix[0][1])?],
                    [q(&matrix[1][0])?, q(&matrix[1][1])?],
                ];
                AnalyticRep::new(field.to_i64()?, entries)?.into()
            }
            InputDoc::CharPoly { poly } => CharPolyQuartic::new(parse_poly(poly)?)?.into(),
            InputDoc::Algebra { element } => element.to_element()?.into(),
            InputDoc::Integer { value } => AlgebraDoc::Integer {
                value: value.clone(),
            }
            .to_element()?
            .into(),
            InputDoc::RealQuad { d, a, b } => AlgebraDoc::RealQuad {
                d: d.clone(),
                a: a.clone(),
                b: b.clone(),
            }
            .to_element()?
            .into(),
            InputDoc::Quaternion {
                alpha,
                beta,
                coeffs,
            } => AlgebraDoc::Quaternion {
                alpha: alpha.clone(),
                beta: beta.clone(),
                coeffs: coeffs.clone(),
            }
            .to_element()?
            .into(),
            InputDoc::Cm { g, coords, e } => AlgebraDoc::Cm {
                g: g.clone(),
                coords: coords.clone(),
                e: e.clone(),
            }
            .to_element()?
            .into(),
        })
    }

    pub fn from_input(e: &EndomorphismInput) -> Self {
        match e {
            EndomorphismInput::RationalRep(m) => InputDoc::RationalRep {
                matrix: m
                    .matrix()
                    .iter()
                    .map(|r| r.iter().map(IntValue::from_big).collect())
                    .collect(),
            },
            EndomorphismInput::AnalyticRep(a) => InputDoc::AnalyticRep {
                field: IntValue::from_big(&a.field_param().into()),
                matrix: a
                    .entries()
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|q| [RatValue::from_rational(&q.u), RatValue::from_rational(&q.v)])
                            .collect()
                    })
                    .collect(),
            },
            EndomorphismInput::CharPoly(p) => InputDoc::CharPoly {
                poly: p.to_string(),
            },
            EndomorphismInput::Algebra(x) => InputDoc::Algebra {
                element: AlgebraDoc::from_element(x),
            },
        }
    }
}

/// `"a,b,c,d;..."`: four rows of four integers.
pub fn parse_inline_matrix(s: &str) -> Result<EndomorphismInput, CliError> {
    let rows = s
        .split(';')
        .map(|r| parse_list(r, |c| IntValue::Text(c.into()).to_big()))
        .collect::<Result<IntMatrix, _>>()?;
    rational_rep(rows)
}

fn rational_rep(rows: IntMatrix) -> Result<EndomorphismInput, CliError> {
    if rows.len() != 4 || rows.iter().any(|r| r.len() != 4) {
        return Err(CliError::Malformed(
            "rational representation must be a 4x4 matrix".into(),
        ));
    }
    Ok(RationalRep::new(rows)?.into())
}

/// `"u,v;u,v;u,v;u,v"`: the four entries of a 2×2 matrix row-major, each
/// meaning `u + v√m`.
pub fn parse_inline_analytic(s: &str, m: i64) -> Result<EndomorphismInput, CliError> {
    let entries = s
        .split(';')
        .map(|e| match parse_list(e, parse_rational)?.as_slice() {
            [u, v] => Ok(QuadNumber::new(u.clone(), v.clone())),
            _ => Err(CliError::Malformed(format!(
                "analytic entry {e:?} must be a pair u,v"
            ))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let [a, b, c, d]: [QuadNumber; 4] = entries
        .try_into()
        .map_err(|_| CliError::Malformed("analytic matrix needs four entries".into()))?;
    Ok(AnalyticRep::new(m, [[a, b], [c, d]])?.into())
}

pub fn parse_inline_charpoly(s: &str) -> Result<EndomorphismInput, CliError> {
    Ok(CharPolyQuartic::new(parse_poly(s)?)?.into())
}

pub fn parse_rationals4(s: &str) -> Result<[BigRational; 4], CliError> {
    parse_list(s, parse_rational)?.try_into().map_err(|_| {
        CliError::Malformed(format!(
            "expected four comma-separated rationals, got {s:?}"
        ))
    })
}

/// Parses a JSON document and runs structural validation eagerly.
pub fn parse_input(document: &str) -> Result<EndomorphismInput, CliError> {
    let input = InputDoc::parse(document)?.to_input()?;
    Endomorphism::new(input.clone())?;
    Ok(input)
}
