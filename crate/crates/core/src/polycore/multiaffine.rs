use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::{AxisBox, PolyError, Sparse};
use crate::scalar::{binomial, Scalar};

/// Variable subsets are stored as `u64` bitmasks.
pub const MAX_VARS: usize = 64;

/// Degree of a polynomial; the zero polynomial has degree minus infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A polynomial of degree at most one in each variable.
///
/// The coefficient of the monomial `prod_{i in S} X_i` is stored under the
/// bitmask of `S`. Variables are 0-based. Zero coefficients are never
/// stored, so derived equality is mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiAffine<T> {
    n_vars: usize,
    coeffs: BTreeMap<u64, T>,
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Drops bit `i` from `mask`, shifting the higher bits down by one.
fn squeeze_out(mask: u64, i: usize) -> u64 {
    let low = mask & ((1u64 << i) - 1);
    let high = if i + 1 >= 64 { 0 } else { mask >> (i + 1) };
    low | (high << i)
}

impl<T: Scalar> MultiAffine<T> {
    pub fn zero(n_vars: usize) -> Result<Self, PolyError> {
        if n_vars > MAX_VARS {
            return Err(PolyError::TooManyVariables(n_vars));
        }
        Ok(Self { n_vars, coeffs: BTreeMap::new() })
    }

    pub fn constant(n_vars: usize, c: T) -> Result<Self, PolyError> {
        Self::from_terms(n_vars, [(0, c)])
    }

    /// `X_i` (0-based).
    pub fn variable(n_vars: usize, i: usize) -> Result<Self, PolyError> {
        if i >= n_vars {
            return Err(PolyError::IndexOutOfRange { index: i, n_vars });
        }
        Self::from_terms(n_vars, [(1u64 << i, T::one())])
    }

    /// Builds a polynomial from `(mask, coefficient)` pairs; repeated masks add up.
    pub fn from_terms(n_vars: usize, terms: impl IntoIterator<Item = (u64, T)>) -> Result<Self, PolyError> {
        let mut p = Self::zero(n_vars)?;
        let allowed = full_mask(n_vars);
        for (mask, c) in terms {
            if mask & !allowed != 0 {
                let index = 63 - (mask & !allowed).leading_zeros() as usize;
                return Err(PolyError::IndexOutOfRange { index, n_vars });
            }
            p.add_term(mask, c);
        }
        Ok(p)
    }

    /// Builds a term from a list of 0-based variable indices.
    pub fn monomial(n_vars: usize, vars: &[usize], c: T) -> Result<Self, PolyError> {
        let mut mask = 0u64;
        for &v in vars {
            if v >= n_vars {
                return Err(PolyError::IndexOutOfRange { index: v, n_vars });
            }
            mask |= 1 << v;
        }
        Self::from_terms(n_vars, [(mask, c)])
    }

    fn add_term(&mut self, mask: u64, c: T) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&mask) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.coeffs.remove(&mask);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.coeffs.insert(mask, c);
            }
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Stored `(mask, coefficient)` pairs in increasing mask order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &T)> + '_ {
        self.coeffs.iter().map(|(m, c)| (*m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, mask: u64) -> T {
        self.coeffs.get(&mask).cloned().unwrap_or_else(T::zero)
    }

    /// Union of the variables that occur in some term.
    pub fn support(&self) -> u64 {
        self.coeffs.keys().fold(0, |acc, m| acc | m)
    }

    pub fn degree(&self) -> Degree {
        self.coeffs.keys().map(|m| m.count_ones() as usize).max().map_or(Degree::NegInfinity, Degree::Finite)
    }

    pub fn eval(&self, x: &[T]) -> Result<T, PolyError> {
        self.eval_with(x, T::clone)
    }

    /// Evaluates with arguments in another commutative ring `U`, lifting each
    /// coefficient through `lift`. Used to substitute polynomials for variables.
    pub fn eval_with<U, F>(&self, x: &[U], lift: F) -> Result<U, PolyError>
    where
        U: Clone + Zero + Mul<Output = U>,
        F: Fn(&T) -> U,
    {
        if x.len() != self.n_vars {
            return Err(PolyError::DimensionMismatch { expected: self.n_vars, got: x.len() });
        }
        let mut acc = U::zero();
        for (mask, c) in &self.coeffs {
            let mut term = lift(c);
            let mut bits = *mask;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                term = term * x[i].clone();
                bits &= bits - 1;
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    fn check_index(&self, i: usize) -> Result<(), PolyError> {
        if i >= self.n_vars {
            Err(PolyError::IndexOutOfRange { index: i, n_vars: self.n_vars })
        } else {
            Ok(())
        }
    }

    /// Splits `P = X_i * Q + R` with neither `Q` nor `R` involving `X_i`.
    /// Both parts keep the ambient variable count.
    pub fn decompose(&self, i: usize) -> Result<(Self, Self), PolyError> {
        self.check_index(i)?;
        let bit = 1u64 << i;
        let mut q = BTreeMap::new();
        let mut r = BTreeMap::new();
        for (mask, c) in &self.coeffs {
            if mask & bit != 0 {
                q.insert(mask & !bit, c.clone());
            } else {
                r.insert(*mask, c.clone());
            }
        }
        Ok((Self { n_vars: self.n_vars, coeffs: q }, Self { n_vars: self.n_vars, coeffs: r }))
    }

    /// Inverse of [`decompose`](Self::decompose): returns `X_i * q + r`.
    pub fn compose(i: usize, q: &Self, r: &Self) -> Result<Self, PolyError> {
        if q.n_vars != r.n_vars {
            return Err(PolyError::DimensionMismatch { expected: q.n_vars, got: r.n_vars });
        }
        q.check_index(i)?;
        let bit = 1u64 << i;
        if (q.support() | r.support()) & bit != 0 {
            return Err(PolyError::OverlappingSupports(vec![i]));
        }
        let mut out = r.clone();
        for (mask, c) in &q.coeffs {
            out.add_term(mask | bit, c.clone());
        }
        Ok(out)
    }

    /// Substitutes `X_i = c` and re-indexes the remaining `n - 1` variables.
    pub fn specialize(&self, i: usize, c: &T) -> Result<Self, PolyError> {
        self.check_index(i)?;
        let bit = 1u64 << i;
        let mut out = Self::zero(self.n_vars - 1)?;
        for (mask, coeff) in &self.coeffs {
            if mask & bit != 0 {
                out.add_term(squeeze_out(mask & !bit, i), coeff.clone() * c.clone());
            } else {
                out.add_term(squeeze_out(*mask, i), coeff.clone());
            }
        }
        Ok(out)
    }

    /// Embeds into `n_vars` variables (`n_vars >= self.n_vars`), keeping indices.
    pub fn extend_vars(&self, n_vars: usize) -> Result<Self, PolyError> {
        if n_vars < self.n_vars {
            return Err(PolyError::DimensionMismatch { expected: self.n_vars, got: n_vars });
        }
        if n_vars > MAX_VARS {
            return Err(PolyError::TooManyVariables(n_vars));
        }
        Ok(Self { n_vars, coeffs: self.coeffs.clone() })
    }

    /// Product of two polynomials over disjoint sets of variables.
    pub fn product_disjoint(&self, other: &Self) -> Result<Self, PolyError> {
        if self.n_vars != other.n_vars {
            return Err(PolyError::DimensionMismatch { expected: self.n_vars, got: other.n_vars });
        }
        let overlap = self.support() & other.support();
        if overlap != 0 {
            let shared = (0..self.n_vars).filter(|i| overlap >> i & 1 == 1).collect();
            return Err(PolyError::OverlappingSupports(shared));
        }
        let mut out = Self::zero(self.n_vars)?;
        for (m1, c1) in &self.coeffs {
            for (m2, c2) in &other.coeffs {
                out.add_term(m1 | m2, c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    /// Exchanges `X_i` and `X_j`.
    pub fn swap_variables(&self, i: usize, j: usize) -> Result<Self, PolyError> {
        self.check_index(i)?;
        self.check_index(j)?;
        let (bi, bj) = (1u64 << i, 1u64 << j);
        let coeffs = self
            .coeffs
            .iter()
            .map(|(m, c)| {
                let mut swapped = m & !(bi | bj);
                if m & bi != 0 {
                    swapped |= bj;
                }
                if m & bj != 0 {
                    swapped |= bi;
                }
                (swapped, c.clone())
            })
            .collect();
        Ok(Self { n_vars: self.n_vars, coeffs })
    }

    /// True iff the coefficient of `S` depends only on `|S|`.
    pub fn is_symmetric(&self) -> bool {
        let mut by_size: BTreeMap<u32, (&T, u64)> = BTreeMap::new();
        for (mask, c) in &self.coeffs {
            let k = mask.count_ones();
            match by_size.get_mut(&k) {
                Some((first, count)) => {
                    if *first != c {
                        return false;
                    }
                    *count += 1;
                }
                None => {
                    by_size.insert(k, (c, 1));
                }
            }
        }
        by_size.iter().all(|(&k, &(_, count))| binomial(self.n_vars as u64, k as u64) == count.into())
    }

    /// Minimum and maximum of `P` over the box, found among its `2^n` vertices.
    pub fn box_range(&self, bx: &AxisBox<T>) -> Result<(T, T), PolyError> {
        if bx.n_axes() != self.n_vars {
            return Err(PolyError::DimensionMismatch { expected: self.n_vars, got: bx.n_axes() });
        }
        let mut lo: Option<T> = None;
        let mut hi: Option<T> = None;
        for corner in 0..(1u64 << self.n_vars) {
            let v = self.eval(&bx.vertex(corner))?;
            if lo.as_ref().is_none_or(|l| v < *l) {
                lo = Some(v.clone());
            }
            if hi.as_ref().is_none_or(|h| v > *h) {
                hi = Some(v);
            }
        }
        Ok((lo.unwrap_or_else(T::zero), hi.unwrap_or_else(T::zero)))
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self { n_vars: self.n_vars, coeffs: BTreeMap::new() };
        for (m, v) in &self.coeffs {
            out.add_term(*m, v.clone() * c.clone());
        }
        out
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        if self.n_vars != other.n_vars {
            return Err(PolyError::DimensionMismatch { expected: self.n_vars, got: other.n_vars });
        }
        let mut out = self.clone();
        for (m, c) in &other.coeffs {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.checked_add(&-other)
    }

    pub fn to_sparse(&self) -> Sparse<T> {
        let terms = self.coeffs.iter().map(|(mask, c)| {
            let exps = (0..self.n_vars).map(|i| (mask >> i & 1) as u32).collect::<Vec<_>>();
            (exps, c.clone())
        });
        Sparse::from_terms(self.n_vars, terms).expect("exponent vectors have the right length")
    }

    /// Maps the coefficients into another scalar type.
    pub fn map_coeffs<U: Scalar>(&self, f: impl Fn(&T) -> U) -> MultiAffine<U> {
        let mut out = MultiAffine { n_vars: self.n_vars, coeffs: BTreeMap::new() };
        for (m, c) in &self.coeffs {
            out.add_term(*m, f(c));
        }
        out
    }
}

impl<T: Scalar> Neg for &MultiAffine<T> {
    type Output = MultiAffine<T>;
    fn neg(self) -> MultiAffine<T> {
        MultiAffine { n_vars: self.n_vars, coeffs: self.coeffs.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

/// Panics on mismatched variable counts; use [`MultiAffine::checked_add`] otherwise.
impl<T: Scalar> Add for &MultiAffine<T> {
    type Output = MultiAffine<T>;
    fn add(self, rhs: Self) -> MultiAffine<T> {
        self.checked_add(rhs).expect("variable count mismatch in addition")
    }
}

impl<T: Scalar> Sub for &MultiAffine<T> {
    type Output = MultiAffine<T>;
    fn sub(self, rhs: Self) -> MultiAffine<T> {
        self.checked_sub(rhs).expect("variable count mismatch in subtraction")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::Rational;

    type P = MultiAffine<Rational>;

    fn hyperbola() -> P {
        // X1 X2 - 1
        P::from_terms(2, [(0b11, int(1)), (0, int(-1))]).unwrap()
    }

    fn sigma2_3() -> P {
        P::from_terms(3, [(0b011, int(1)), (0b101, int(1)), (0b110, int(1))]).unwrap()
    }

    #[test]
    fn evaluation() {
        assert_eq!(hyperbola().eval(&[int(1), int(1)]).unwrap(), int(0));
        let quartic = P::from_terms(4, [(0b1111, int(1)), (0, int(-1))]).unwrap();
        assert_eq!(quartic.eval(&[int(1), int(1), int(1), int(1)]).unwrap(), int(0));
        assert_eq!(sigma2_3().eval(&[int(1), int(-1), int(0)]).unwrap(), int(-1));
        assert!(matches!(hyperbola().eval(&[int(1)]), Err(PolyError::DimensionMismatch { .. })));
    }

    #[test]
    fn decompose_and_specialize() {
        let (q, r) = hyperbola().decompose(1).unwrap();
        assert_eq!(q, P::variable(2, 0).unwrap());
        assert_eq!(r, P::constant(2, int(-1)).unwrap());
        let (q0, r0) = P::zero(3).unwrap().decompose(2).unwrap();
        assert!(q0.is_zero() && r0.is_zero());
        assert!(hyperbola().decompose(2).is_err());

        let spec = hyperbola().specialize(1, &int(3)).unwrap();
        assert_eq!(spec, P::from_terms(1, [(1, int(3)), (0, int(-1))]).unwrap());
        assert!(hyperbola().specialize(5, &int(0)).is_err());
    }

    #[test]
    fn compose_rejects_variable_in_parts() {
        let x0 = P::variable(2, 0).unwrap();
        assert!(P::compose(0, &x0, &P::zero(2).unwrap()).is_err());
        let back = P::compose(1, &x0, &P::constant(2, int(-1)).unwrap()).unwrap();
        assert_eq!(back, hyperbola());
    }

    #[test]
    fn disjoint_products() {
        let x = |i| P::variable(4, i).unwrap();
        let one = P::constant(4, int(1)).unwrap();
        assert_eq!(x(0).product_disjoint(&x(1)).unwrap(), P::monomial(4, &[0, 1], int(1)).unwrap());
        let p = (&x(0) - &one).product_disjoint(&(&x(1) - &one)).unwrap();
        let expect = P::from_terms(4, [(0b11, int(1)), (0b01, int(-1)), (0b10, int(-1)), (0, int(1))]).unwrap();
        assert_eq!(p, expect);
        let big = P::monomial(4, &[0, 1], int(1))
            .unwrap()
            .product_disjoint(&P::monomial(4, &[2, 3], int(1)).unwrap())
            .unwrap();
        assert_eq!(big.degree(), Degree::Finite(4));
        assert_eq!(x(0).product_disjoint(&x(0)), Err(PolyError::OverlappingSupports(vec![0])));
    }

    #[test]
    fn degree_and_symmetry() {
        assert_eq!(P::zero(3).unwrap().degree(), Degree::NegInfinity);
        assert_eq!(sigma2_3().degree(), Degree::Finite(2));
        assert!(sigma2_3().is_symmetric());
        let asym = P::from_terms(3, [(0b011, int(1)), (0b100, int(-1))]).unwrap();
        assert_eq!(asym.degree(), Degree::Finite(2));
        assert!(!asym.is_symmetric());
        // sigma_2 missing one pair is not symmetric
        let partial = P::from_terms(3, [(0b011, int(1)), (0b101, int(1))]).unwrap();
        assert!(!partial.is_symmetric());
    }

    #[test]
    fn box_ranges() {
        let xy = P::monomial(2, &[0, 1], int(1)).unwrap();
        assert_eq!(xy.box_range(&AxisBox::cube(2, int(0), int(1)).unwrap()).unwrap(), (int(0), int(1)));
        let r = hyperbola().box_range(&AxisBox::cube(2, int(-1), int(1)).unwrap()).unwrap();
        assert_eq!(r, (int(-2), int(0)));
        let s1 = P::from_terms(3, [(1, int(1)), (2, int(1)), (4, int(1))]).unwrap();
        assert_eq!(s1.box_range(&AxisBox::cube(3, int(-1), int(1)).unwrap()).unwrap(), (int(-3), int(3)));
    }

    #[test]
    fn squeeze() {
        assert_eq!(squeeze_out(0b1011, 1), 0b101);
        assert_eq!(squeeze_out(0b1000, 0), 0b100);
        assert_eq!(squeeze_out(1u64 << 63, 63), 0);
    }
}
