//! JSON exchange format for polynomials.
//!
//! Multi-affine: `{"n": 3, "terms": [{"vars": [1, 2], "coeff": "1"}]}` with
//! sorted 1-based variable indices. Sparse: `{"n": 2, "terms": [{"exps": [2, 0],
//! "coeff": "-1/2"}]}`.

use serde::{Deserialize, Serialize};

use super::{MultiAffine, PolyError, Sparse};
use crate::scalar::{parse_rational, rational_to_string};
use crate::Rational;

#[derive(Debug, Clone, Serialize, Deserialize)]
struct PolyDoc {
    n: usize,
    terms: Vec<TermDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct TermDoc {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    vars: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    exps: Option<Vec<u32>>,
    coeff: String,
}

/// A polynomial read from JSON, in whichever representation the document used.
#[derive(Debug, Clone, PartialEq)]
pub enum PolyInput {
    MultiAffine(MultiAffine<Rational>),
    Sparse(Sparse<Rational>),
}

fn parse_coeff(s: &str) -> Result<Rational, PolyError> {
    parse_rational(s).ok_or_else(|| PolyError::Parse(format!("bad coefficient {s:?}")))
}

pub fn multi_affine_to_json(p: &MultiAffine<Rational>) -> serde_json::Value {
    let terms = p
        .terms()
        .map(|(mask, c)| TermDoc {
            vars: Some((0..p.n_vars()).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect()),
            exps: None,
            coeff: rational_to_string(c),
        })
        .collect();
    serde_json::to_value(PolyDoc { n: p.n_vars(), terms }).expect("plain data serializes")
}

pub fn sparse_to_json(p: &Sparse<Rational>) -> serde_json::Value {
    let terms =
        p.terms().map(|(e, c)| TermDoc { vars: None, exps: Some(e.to_vec()), coeff: rational_to_string(c) }).collect();
    serde_json::to_value(PolyDoc { n: p.n_vars(), terms }).expect("plain data serializes")
}

/// Parses either JSON polynomial variant.
pub fn parse_poly(text: &str) -> Result<PolyInput, PolyError> {
    let doc: PolyDoc = serde_json::from_str(text).map_err(|e| PolyError::Parse(e.to_string()))?;
    let uses_vars = doc.terms.iter().any(|t| t.vars.is_some());
    let uses_exps = doc.terms.iter().any(|t| t.exps.is_some());
    if uses_vars && uses_exps {
        return Err(PolyError::Parse("terms mix \"vars\" and \"exps\"".into()));
    }
    if uses_exps {
        let mut terms = Vec::with_capacity(doc.terms.len());
        for t in &doc.terms {
            let exps = t.exps.clone().ok_or_else(|| PolyError::Parse("term without \"exps\"".into()))?;
            terms.push((exps, parse_coeff(&t.coeff)?));
        }
        return Sparse::from_terms(doc.n, terms).map(PolyInput::Sparse);
    }
    let mut terms = Vec::with_capacity(doc.terms.len());
    for t in &doc.terms {
        let vars = t.vars.as_deref().unwrap_or(&[]);
        let mut mask = 0u64;
        for &v in vars {
            if v == 0 || v > doc.n {
                return Err(PolyError::IndexOutOfRange { index: v, n_vars: doc.n });
            }
            if mask >> (v - 1) & 1 == 1 {
                return Err(PolyError::Parse(format!("variable {v} repeated in a multi-affine term")));
            }
            mask |= 1 << (v - 1);
        }
        terms.push((mask, parse_coeff(&t.coeff)?));
    }
    MultiAffine::from_terms(doc.n, terms).map(PolyInput::MultiAffine)
}
