use num_traits::{Signed, Zero};

use super::TopoError;
use crate::polycore::Univariate;
use crate::{Rational, UnivariatePoly};

/// Sturm sequence `p, p', -rem(p, p'), ...` down to the last nonzero remainder.
#[derive(Debug, Clone, PartialEq)]
pub struct SturmChain {
    chain: Vec<UnivariatePoly>,
}

/// Where to count real roots.
#[derive(Debug, Clone, PartialEq)]
pub enum RootRange {
    WholeLine,
    /// Closed interval `[a, b]`.
    Closed(Rational, Rational),
}

fn sign(v: &Rational) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

impl SturmChain {
    pub fn new(p: &UnivariatePoly) -> Result<Self, TopoError> {
        if p.is_zero() {
            return Err(TopoError::ZeroPolynomial);
        }
        let mut chain = vec![p.clone()];
        let mut next = p.derivative();
        while !next.is_zero() {
            let prev = chain.last().expect("chain is nonempty");
            let rem = prev.rem(&next).expect("divisor is nonzero");
            chain.push(next);
            next = -rem;
        }
        Ok(Self { chain })
    }

    pub fn polys(&self) -> &[UnivariatePoly] {
        &self.chain
    }

    /// Last element; a constant multiple of `gcd(p, p')`.
    pub fn last(&self) -> &UnivariatePoly {
        self.chain.last().expect("chain is nonempty")
    }

    /// True iff `p` has a repeated complex root.
    pub fn has_multiple_root(&self) -> bool {
        self.last().degree().unwrap_or(0) > 0
    }

    fn variations_at(&self, t: &Rational) -> usize {
        variations(self.chain.iter().map(|q| sign(&q.eval(t))))
    }

    /// Sign variations at `+inf` (`positive = true`) or `-inf`, read off leading coefficients.
    fn variations_at_infinity(&self, positive: bool) -> usize {
        variations(self.chain.iter().map(|q| {
            let lead = sign(q.leading().expect("chain members are nonzero"));
            let odd = q.degree().unwrap_or(0) % 2 == 1;
            if positive || !odd {
                lead
            } else {
                -lead
            }
        }))
    }

    /// Number of distinct real roots in the range.
    pub fn count(&self, range: &RootRange) -> Result<usize, TopoError> {
        match range {
            RootRange::WholeLine => Ok(self.variations_at_infinity(false) - self.variations_at_infinity(true)),
            RootRange::Closed(a, b) => {
                if a > b {
                    return Err(TopoError::Precondition("interval endpoints reversed".into()));
                }
                let at_a = usize::from(self.chain[0].eval(a).is_zero());
                if a == b {
                    return Ok(at_a);
                }
                // V(a) - V(b) counts roots in (a, b].
                Ok(self.variations_at(a) - self.variations_at(b) + at_a)
            }
        }
    }
}

/// Number of distinct real roots of `p` in `range`.
pub fn sturm_count(p: &UnivariatePoly, range: &RootRange) -> Result<usize, TopoError> {
    SturmChain::new(p)?.count(range)
}

/// Discriminant of a quadratic or cubic.
pub fn discriminant(p: &UnivariatePoly) -> Result<Rational, TopoError> {
    match p.degree() {
        Some(2) => {
            let (c, b, a) = (p.coeff(0), p.coeff(1), p.coeff(2));
            Ok(&b * &b - Rational::from_integer(4.into()) * a * c)
        }
        Some(3) => {
            let (d, c, b, a) = (p.coeff(0), p.coeff(1), p.coeff(2), p.coeff(3));
            let k = |v: i64| Rational::from_integer(v.into());
            Ok(k(18) * &a * &b * &c * &d - k(4) * &b * &b * &b * &d + &b * &b * &c * &c
                - k(4) * &a * &c * &c * &c
                - k(27) * &a * &a * &d * &d)
        }
        other => Err(TopoError::Precondition(format!(
            "discriminant implemented for degree 2 and 3 (got {})",
            other.map_or("-inf".to_string(), |d| d.to_string())
        ))),
    }
}

/// Builds `prod (t - r)` over the given roots.
pub fn from_roots(roots: &[Rational]) -> UnivariatePoly {
    roots.iter().fold(Univariate::constant(Rational::from_integer(1.into())), |acc, r| {
        acc * Univariate::new(vec![-r.clone(), Rational::from_integer(1.into())])
    })
}
