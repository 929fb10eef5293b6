use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Value};

use super::TopoError;

/// How much a component count can be trusted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certification {
    /// The exact vertex test found no cell meeting the zero set.
    ExactEmpty,
    /// Every sampled diagonal line had the same number of simple roots.
    SampleCertified,
    /// Two consecutive resolutions gave the same count.
    ResolutionConverged,
    /// Only structural information; the count may be too high or too low.
    UpperStructureOnly,
}

impl Certification {
    pub fn as_str(self) -> &'static str {
        match self {
            Certification::ExactEmpty => "exact-empty",
            Certification::SampleCertified => "sample-certified",
            Certification::ResolutionConverged => "resolution-converged",
            Certification::UpperStructureOnly => "upper-structure-only",
        }
    }
}

/// Upper bounds on `b_0` for degree-`d` polynomials in `n` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    pub degree: usize,
    pub n: usize,
    /// `2^(d-1)`: components of a multi-affine hypersurface.
    pub ccez: BigInt,
    /// `2^d`: components of the complement of a multi-affine hypersurface.
    pub ccdz: BigInt,
    /// `d (2d - 1)^(n-1)`: components of any degree-`d` hypersurface.
    pub optm: BigInt,
}

pub fn bounds(d: usize, n: usize) -> Result<Bounds, TopoError> {
    if d == 0 || n == 0 {
        return Err(TopoError::Precondition(format!("bounds need d >= 1 and n >= 1 (d = {d}, n = {n})")));
    }
    let two = BigInt::from(2);
    Ok(Bounds {
        degree: d,
        n,
        ccez: num_traits::pow(two.clone(), d - 1),
        ccdz: num_traits::pow(two, d),
        optm: BigInt::from(d) * num_traits::pow(BigInt::from(2 * d - 1), n - 1),
    })
}

/// JSON number when it fits in 64 bits, decimal string otherwise.
pub fn big_to_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

impl Bounds {
    pub fn to_json(&self) -> Value {
        json!({
            "ccez": big_to_json(&self.ccez),
            "ccdz": big_to_json(&self.ccdz),
            "optm": big_to_json(&self.optm),
        })
    }
}

/// Sample bookkeeping for diagonal-line experiments.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampleStats {
    pub drawn: usize,
    pub degenerate: usize,
    /// Observed root count -> number of samples.
    pub root_counts: BTreeMap<usize, usize>,
}

/// Result of a component-counting experiment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    pub count: u64,
    pub certified: Certification,
    /// `(resolution, count)` per grid pass, strictly increasing in resolution.
    pub trail: Vec<(usize, u64)>,
    pub bounds: Option<Bounds>,
    pub seed: Option<u64>,
    pub samples: Option<SampleStats>,
}

impl ComponentReport {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "count": self.count,
            "certified": self.certified.as_str(),
            "trail": self.trail.iter().map(|(r, c)| json!([r, c])).collect::<Vec<_>>(),
            "bounds": self.bounds.as_ref().map_or(Value::Null, Bounds::to_json),
            "seed": self.seed,
        });
        if let Some(s) = &self.samples {
            v["samples"] = serde_json::to_value(s).expect("plain data serializes");
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_values() {
        let b = bounds(4, 10).unwrap();
        assert_eq!((b.ccez, b.ccdz, b.optm), (8.into(), 16.into(), 161414428u64.into()));
        let b = bounds(1, 7).unwrap();
        assert_eq!((b.ccez, b.ccdz, b.optm), (1.into(), 2.into(), 1.into()));
        let b = bounds(2, 3).unwrap();
        assert_eq!((b.ccez, b.ccdz, b.optm), (2.into(), 4.into(), 18.into()));
        assert!(bounds(0, 3).is_err());
    }

    #[test]
    fn report_json_shape() {
        let r = ComponentReport {
            count: 2,
            certified: Certification::ResolutionConverged,
            trail: vec![(16, 2), (32, 2)],
            bounds: Some(bounds(2, 2).unwrap()),
            seed: None,
            samples: None,
        };
        assert_eq!(
            r.to_json().to_string(),
            r#"{"bounds":{"ccdz":4,"ccez":2,"optm":6},"certified":"resolution-converged","count":2,"seed":null,"trail":[[16,2],[32,2]]}"#
        );
        let huge = bounds(10, 40).unwrap();
        assert!(huge.to_json()["optm"].is_string());
    }
}
