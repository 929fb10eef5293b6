use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::{MultiAffine, PolyError};
use crate::scalar::Scalar;

/// General multivariate polynomial keyed by exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sparse<T> {
    n_vars: usize,
    coeffs: BTreeMap<Vec<u32>, T>,
}

impl<T: Scalar> Sparse<T> {
    pub fn zero(n_vars: usize) -> Self {
        Self { n_vars, coeffs: BTreeMap::new() }
    }

    pub fn constant(n_vars: usize, c: T) -> Self {
        let mut p = Self::zero(n_vars);
        p.add_term(vec![0; n_vars], c);
        p
    }

    pub fn variable(n_vars: usize, i: usize) -> Result<Self, PolyError> {
        if i >= n_vars {
            return Err(PolyError::IndexOutOfRange { index: i, n_vars });
        }
        let mut exps = vec![0; n_vars];
        exps[i] = 1;
        Self::from_terms(n_vars, [(exps, T::one())])
    }

    pub fn from_terms(n_vars: usize, terms: impl IntoIterator<Item = (Vec<u32>, T)>) -> Result<Self, PolyError> {
        let mut p = Self::zero(n_vars);
        for (exps, c) in terms {
            if exps.len() != n_vars {
                return Err(PolyError::BadExponentVector { expected: n_vars, got: exps.len() });
            }
            p.add_term(exps, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, exps: Vec<u32>, c: T) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&exps) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.coeffs.remove(&exps);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.coeffs.insert(exps, c);
            }
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &T)> + '_ {
        self.coeffs.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, exps: &[u32]) -> T {
        self.coeffs.get(exps).cloned().unwrap_or_else(T::zero)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|e| e.iter().sum()).max()
    }

    fn check_dims(&self, other: &Self) -> Result<(), PolyError> {
        if self.n_vars != other.n_vars {
            Err(PolyError::DimensionMismatch { expected: self.n_vars, got: other.n_vars })
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_dims(other)?;
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_dims(other)?;
        let mut out = Self::zero(self.n_vars);
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero(self.n_vars);
        for (e, v) in &self.coeffs {
            out.add_term(e.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.n_vars, T::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &[T]) -> Result<T, PolyError> {
        if x.len() != self.n_vars {
            return Err(PolyError::DimensionMismatch { expected: self.n_vars, got: x.len() });
        }
        let mut acc = T::zero();
        for (e, c) in &self.coeffs {
            let mut term = c.clone();
            for (xi, &k) in x.iter().zip(e) {
                for _ in 0..k {
                    term = term * xi.clone();
                }
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    /// Replaces `X_i` by `value` (a polynomial over the same variables).
    pub fn substitute(&self, i: usize, value: &Self) -> Result<Self, PolyError> {
        if i >= self.n_vars {
            return Err(PolyError::IndexOutOfRange { index: i, n_vars: self.n_vars });
        }
        self.check_dims(value)?;
        let mut powers: Vec<Self> = vec![Self::constant(self.n_vars, T::one())];
        let mut out = Self::zero(self.n_vars);
        for (e, c) in &self.coeffs {
            let k = e[i] as usize;
            while powers.len() <= k {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut rest = e.clone();
            rest[i] = 0;
            let term = Self::from_terms(self.n_vars, [(rest, c.clone())])?;
            out = &out + &(&term * &powers[k]);
        }
        Ok(out)
    }

    /// Converts to a multi-affine polynomial when every exponent is 0 or 1.
    pub fn to_multi_affine(&self) -> Option<MultiAffine<T>> {
        let mut terms = Vec::with_capacity(self.coeffs.len());
        for (e, c) in &self.coeffs {
            let mut mask = 0u64;
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => mask |= 1 << i,
                    _ => return None,
                }
            }
            terms.push((mask, c.clone()));
        }
        MultiAffine::from_terms(self.n_vars, terms).ok()
    }
}

impl<T: Scalar> Neg for &Sparse<T> {
    type Output = Sparse<T>;
    fn neg(self) -> Sparse<T> {
        Sparse { n_vars: self.n_vars, coeffs: self.coeffs.iter().map(|(e, c)| (e.clone(), -c.clone())).collect() }
    }
}

/// Operators panic on mismatched variable counts; the `checked_*` methods return errors instead.
impl<T: Scalar> Add for &Sparse<T> {
    type Output = Sparse<T>;
    fn add(self, rhs: Self) -> Sparse<T> {
        self.checked_add(rhs).expect("variable count mismatch in addition")
    }
}

impl<T: Scalar> Sub for &Sparse<T> {
    type Output = Sparse<T>;
    fn sub(self, rhs: Self) -> Sparse<T> {
        self.checked_sub(rhs).expect("variable count mismatch in subtraction")
    }
}

impl<T: Scalar> Mul for &Sparse<T> {
    type Output = Sparse<T>;
    fn mul(self, rhs: Self) -> Sparse<T> {
        self.checked_mul(rhs).expect("variable count mismatch in multiplication")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::Rational;

    type S = Sparse<Rational>;

    fn x(i: usize) -> S {
        S::variable(2, i).unwrap()
    }

    #[test]
    fn newton_two_variables() {
        // N1^2 - 2 sigma2 = X1^2 + X2^2
        let n1 = &x(0) + &x(1);
        let s2 = &x(0) * &x(1);
        let lhs = &(&n1 * &n1) - &s2.scale(&int(2));
        let n2 = &x(0).pow(2) + &x(1).pow(2);
        assert_eq!(lhs, n2);
    }

    #[test]
    fn ring_basics() {
        let p = &x(0) + &x(1);
        assert!((&S::zero(2) * &p).is_zero());
        let diff = &(&x(0) + &x(1)) * &(&x(0) - &x(1));
        assert_eq!(diff, &x(0).pow(2) - &x(1).pow(2));
        assert!(x(0).checked_add(&S::zero(3)).is_err());
        assert_eq!(diff.total_degree(), Some(2));
        assert_eq!(S::zero(2).total_degree(), None);
    }

    #[test]
    fn substitution() {
        // X1^2 with X1 -> X2 + 1 gives X2^2 + 2 X2 + 1
        let p = x(0).pow(2);
        let v = &x(1) + &S::constant(2, int(1));
        let got = p.substitute(0, &v).unwrap();
        assert_eq!(got, v.pow(2));
        assert_eq!(got.eval(&[int(7), int(2)]).unwrap(), int(9));
    }

    #[test]
    fn multi_affine_conversion() {
        let p = &x(0) * &x(1);
        assert_eq!(p.to_multi_affine().unwrap().to_sparse(), p);
        assert!(x(0).pow(2).to_multi_affine().is_none());
    }
}
