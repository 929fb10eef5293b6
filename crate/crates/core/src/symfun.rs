//! Elementary symmetric polynomials, power sums and the Newton identities,
//! combinations `sum a_i sigma_i` materialized in `n` variables, restriction
//! to diagonal lines `x + t(1, ..., 1)`, and the named polynomial families
//! used by the experiments.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polycore::{MultiAffine, PolyError, Sparse, Univariate};
use crate::scalar::{binomial, int, parse_rational, rational_to_string, Scalar};
use crate::{MultiAffinePoly, Rational, SparsePoly, UnivariatePoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("Newton identities are only provided for 1 <= l <= 4 (got {0})")]
    NewtonIndex(i64),
    #[error("base point does not satisfy sigma_1(x) = 0")]
    NotOnHyperplane,
    #[error("{0}")]
    Precondition(String),
    #[error("symbolic budget exceeded: n = {n} > {max}")]
    BudgetExceeded { n: usize, max: usize },
    #[error("unknown polynomial family {0:?}")]
    UnknownFamily(String),
}

/// `sigma_{l,n}` built by `sigma_{l,n} = X_n sigma_{l-1,n-1} + sigma_{l,n-1}`.
///
/// `sigma_{-1,n} = 0`, `sigma_{0,n} = 1` and `sigma_{l,n} = 0` for `l > n`.
pub fn elementary<T: Scalar>(l: i64, n: usize) -> Result<MultiAffine<T>, PolyError> {
    if l < 0 {
        return MultiAffine::zero(n);
    }
    let l = l as usize;
    if l > n {
        return MultiAffine::zero(n);
    }
    // row[j] holds sigma_{j,m} for the current m, embedded in n variables.
    let zero = MultiAffine::zero(n)?;
    let mut row: Vec<MultiAffine<T>> = vec![zero; l + 1];
    row[0] = MultiAffine::constant(n, T::one())?;
    for m in 1..=n {
        for j in (1..=l.min(m)).rev() {
            row[j] = MultiAffine::compose(m - 1, &row[j - 1], &row[j])?;
        }
    }
    Ok(row.swap_remove(l))
}

/// `N_{l,n} = X_1^l + ... + X_n^l`.
pub fn power_sum<T: Scalar>(l: u32, n: usize) -> Sparse<T> {
    let terms = (0..n).map(|i| {
        let mut e = vec![0; n];
        e[i] = l;
        (e, T::one())
    });
    Sparse::from_terms(n, terms).expect("exponent vectors have length n")
}

/// Values `sigma_0(x), ..., sigma_d(x)` from the coefficients of `prod (1 + x_i z)`.
pub fn elementary_values<T: Scalar>(x: &[T], d: usize) -> Vec<T> {
    let mut e = vec![T::zero(); d + 1];
    e[0] = T::one();
    for xi in x {
        for j in (1..=d).rev() {
            e[j] = e[j].clone() + e[j - 1].clone() * xi.clone();
        }
    }
    e
}

fn sigma_sparse(l: i64, n: usize) -> SparsePoly {
    elementary::<Rational>(l, n).expect("n within range").to_sparse()
}

/// Right-hand side of the `l`-th Newton identity in `n` variables, built from
/// the power sums `N_1..N_{l-1}` and `sigma_1..sigma_l`:
///
/// ```text
/// N1 = s1
/// N2 = N1 s1 - 2 s2
/// N3 = N2 s1 - N1 s2 + 3 s3
/// N4 = N3 s1 - N2 s2 + N1 s3 - 4 s4
/// ```
pub fn newton_rhs(l: i64, n: usize) -> Result<SparsePoly, SymError> {
    if !(1..=4).contains(&l) {
        return Err(SymError::NewtonIndex(l));
    }
    let mut acc = Sparse::zero(n);
    for j in 1..l {
        let term = &power_sum::<Rational>((l - j) as u32, n) * &sigma_sparse(j, n);
        acc = if j % 2 == 1 { &acc + &term } else { &acc - &term };
    }
    let last = sigma_sparse(l, n).scale(&int(l));
    Ok(if l % 2 == 1 { &acc + &last } else { &acc - &last })
}

/// Checks the `l`-th Newton identity as an exact polynomial identity in `n` variables.
pub fn verify_newton_identity(l: i64, n: usize) -> Result<bool, SymError> {
    if n == 0 {
        return Err(SymError::Precondition("n must be at least 1".into()));
    }
    let rhs = newton_rhs(l, n)?;
    Ok(power_sum::<Rational>(l as u32, n) == rhs)
}

/// A finite combination `f = a_0 sigma_0 + ... + a_d sigma_d` of elementary
/// symmetric functions, independent of the number of variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SigmaCombination {
    coeffs: Vec<Rational>,
}

impl SigmaCombination {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self, SymError> {
        if coeffs.is_empty() {
            return Err(SymError::Precondition("a sigma combination needs at least a_0".into()));
        }
        Ok(Self { coeffs })
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect()).expect("nonempty coefficient list")
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Nominal degree `d` (the list has `d + 1` entries).
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Largest `i` with `a_i != 0`.
    pub fn effective_degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// `phi_n(f) = sum a_i sigma_{i,n}`.
    pub fn materialize(&self, n: usize) -> Result<MultiAffinePoly, SymError> {
        let mut acc = MultiAffine::zero(n)?;
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i > n {
                continue;
            }
            acc = &acc + &elementary::<Rational>(i as i64, n)?.scale(a);
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SigmaDoc { coeffs: self.coeffs.iter().map(rational_to_string).collect() })
            .expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, SymError> {
        let doc: SigmaDoc = serde_json::from_str(text).map_err(|e| SymError::Poly(PolyError::Parse(e.to_string())))?;
        Self::parse_list(doc.coeffs.iter().map(String::as_str))
    }

    fn parse_list<'a>(items: impl Iterator<Item = &'a str>) -> Result<Self, SymError> {
        let coeffs = items
            .map(|s| parse_rational(s).ok_or_else(|| PolyError::Parse(format!("bad coefficient {s:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(coeffs)
    }
}

#[derive(Serialize, Deserialize)]
struct SigmaDoc {
    coeffs: Vec<String>,
}

/// Parses `"a0,a1,...,ad"`.
impl FromStr for SigmaCombination {
    type Err = SymError;
    fn from_str(s: &str) -> Result<Self, SymError> {
        Self::parse_list(s.split(','))
    }
}

impl fmt::Display for SigmaCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(rational_to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Sets the last variable to zero: `phi_n(f) -> phi_{n-1}(f)`.
pub fn truncate_last<T: Scalar>(p: &MultiAffine<T>) -> Result<MultiAffine<T>, PolyError> {
    if p.n_vars() == 0 {
        return Err(PolyError::IndexOutOfRange { index: 0, n_vars: 0 });
    }
    p.specialize(p.n_vars() - 1, &T::zero())
}

/// `f` restricted to the line through `base` in direction `(1, ..., 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalRestriction {
    pub base: Vec<Rational>,
    pub poly: UnivariatePoly,
}

/// Computes `t -> f(x + t(1, ..., 1))` for `x` with `sigma_1(x) = 0`, using
///
/// ```text
/// sigma_{l,n}(x + t 1) = sum_{j=0}^{l} C(n-j, l-j) sigma_j(x) t^{l-j}
/// ```
///
/// which is checked against direct expansion by [`shift_expansion_direct`].
pub fn diagonal_restriction(f: &SigmaCombination, n: usize, x: &[Rational]) -> Result<DiagonalRestriction, SymError> {
    if x.len() != n {
        return Err(PolyError::DimensionMismatch { expected: n, got: x.len() }.into());
    }
    let d = f.degree();
    if n < f.effective_degree().unwrap_or(0) {
        return Err(SymError::Precondition(format!("n = {n} is below the degree of f")));
    }
    let sig = elementary_values(x, d);
    if d >= 1 && !sig[1].is_zero() {
        return Err(SymError::NotOnHyperplane);
    }
    let mut coeffs = vec![Rational::zero(); d + 1];
    for (l, a) in f.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for j in 0..=l.min(n) {
            let c = binomial((n - j) as u64, (l - j) as u64);
            coeffs[l - j] += a * Rational::from_integer(c) * &sig[j];
        }
    }
    Ok(DiagonalRestriction { base: x.to_vec(), poly: Univariate::new(coeffs) })
}

/// `sigma_{l,n}(x + t 1)` by substituting `x_i + t` into the multi-affine polynomial.
pub fn shift_expansion_direct(l: i64, x: &[Rational]) -> UnivariatePoly {
    let sigma = elementary::<Rational>(l, x.len()).expect("n within range");
    let args: Vec<UnivariatePoly> = x.iter().map(|xi| Univariate::new(vec![xi.clone(), Rational::one()])).collect();
    sigma.eval_with(&args, |c| Univariate::constant(c.clone())).expect("argument count matches")
}

/// `sigma_{l,n}(x + t 1)` by the binomial shift formula (no hyperplane condition).
pub fn shift_expansion_formula(l: usize, x: &[Rational]) -> UnivariatePoly {
    let n = x.len();
    let sig = elementary_values(x, l);
    let mut coeffs = vec![Rational::zero(); l + 1];
    for j in 0..=l.min(n) {
        let c = binomial((n - j) as u64, (l - j) as u64);
        coeffs[l - j] += Rational::from_integer(c) * &sig[j];
    }
    Univariate::new(coeffs)
}

/// Named polynomial families.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// `X_1 ... X_d - 1`.
    Sharpness(usize),
    /// The three-polynomial system whose common zeros are the 0/1 points with `k` ones.
    Example3(u64),
    /// `sum a_i sigma_{i,n}`.
    Sigma(SigmaCombination),
    /// `X_1^2 + ... + X_n^2 - n`.
    Sphere(usize),
}

impl FromStr for Family {
    type Err = SymError;
    fn from_str(s: &str) -> Result<Self, SymError> {
        let bad = || SymError::UnknownFamily(s.to_string());
        let (name, arg) = s.split_once(':').ok_or_else(bad)?;
        match name {
            "sharpness" => arg.parse().map(Family::Sharpness).map_err(|_| bad()),
            "example3" => arg.parse().map(Family::Example3).map_err(|_| bad()),
            "sigma" => arg.parse().map(Family::Sigma),
            "sphere" => arg.parse().map(Family::Sphere).map_err(|_| bad()),
            _ => Err(bad()),
        }
    }
}

/// `X_1 X_2 ... X_d - 1` in `d` variables.
pub fn sharpness(d: usize) -> Result<MultiAffinePoly, PolyError> {
    let all = if d == 64 { u64::MAX } else { (1u64 << d) - 1 };
    MultiAffine::from_terms(d, [(all, int(1)), (0, int(-1))])
}

/// `X_1^2 + ... + X_n^2 - n`.
pub fn sphere(n: usize) -> SparsePoly {
    &power_sum::<Rational>(2, n) - &Sparse::constant(n, int(n as i64))
}

/// `P1 = s1 - k`, `P2 = s2 - k(k-1)/2`, `P3 = (4k-6) s3 - 4 s4 - k(k-1)^2(k-2)/2`.
pub fn example3_family(k: u64, n: usize) -> Result<[MultiAffinePoly; 3], SymError> {
    if (k as usize) > n {
        return Err(SymError::Precondition(format!("need n >= k (k = {k}, n = {n})")));
    }
    let k = BigInt::from(k);
    let q = |v: BigInt| Rational::from_integer(v);
    let half = Rational::new(1.into(), 2.into());
    let c2 = q(&k * (&k - 1)) * &half;
    let km1 = &k - 1;
    let c3 = q(&k * &km1 * &km1 * (&k - 2)) * &half;
    let p1 = SigmaCombination::new(vec![-q(k.clone()), int(1)])?.materialize(n)?;
    let p2 = SigmaCombination::new(vec![-c2, int(0), int(1)])?.materialize(n)?;
    let p3 = SigmaCombination::new(vec![-c3, int(0), int(0), q(4 * &k - 6), int(-4)])?.materialize(n)?;
    Ok([p1, p2, p3])
}

/// Largest `n` accepted by [`sos_identity_check`].
pub const SOS_MAX_VARS: usize = 6;

/// Verifies, for the given `k` and `n`:
///
/// 1. `sum X_i^2 (X_i - 1)^2 = N_4 - 2 N_3 + N_2` in `n` variables;
/// 2. `N_4 - 2 N_3 + N_2` equals its Newton-identity expression in
///    `sigma_1..sigma_4` in `n` variables;
/// 3. that expression, with `sigma_1 -> k` and `sigma_2 -> k(k-1)/2`, reduces
///    to `(4k-6) sigma_3 - 4 sigma_4 - k(k-1)^2(k-2)/2` in the free ring on
///    `sigma_1..sigma_4`.
pub fn sos_identity_check(k: u64, n: usize) -> Result<bool, SymError> {
    if n > SOS_MAX_VARS {
        return Err(SymError::BudgetExceeded { n, max: SOS_MAX_VARS });
    }
    let one = Sparse::constant(n, int(1));
    let mut sos = Sparse::zero(n);
    for i in 0..n {
        let xi = Sparse::variable(n, i)?;
        let xm1 = &xi - &one;
        sos = &sos + &(&(&xi * &xi) * &(&xm1 * &xm1));
    }
    let n2 = power_sum::<Rational>(2, n);
    let n3 = power_sum::<Rational>(3, n);
    let n4 = power_sum::<Rational>(4, n);
    let combo = &(&n4 - &n3.scale(&int(2))) + &n2;
    if sos != combo {
        return Ok(false);
    }

    // Newton expressions over the free ring in s1..s4 (4 variables).
    let s = |i: usize| Sparse::<Rational>::variable(4, i).expect("index < 4");
    let e1 = s(0);
    let e2 = &(&e1 * &s(0)) - &s(1).scale(&int(2));
    let e3 = &(&(&e2 * &s(0)) - &(&e1 * &s(1))) + &s(2).scale(&int(3));
    let e4 = &(&(&(&e3 * &s(0)) - &(&e2 * &s(1))) + &(&e1 * &s(2))) - &s(3).scale(&int(4));
    let expr = &(&e4 - &e3.scale(&int(2))) + &e2;

    // Realize the expression in n variables and compare with the power sums.
    let sigmas: Vec<SparsePoly> = (1..=4).map(|l| sigma_sparse(l, n)).collect();
    let mut realized = Sparse::zero(n);
    for (exps, c) in expr.terms() {
        let mut term = Sparse::constant(n, c.clone());
        for (sig, &e) in sigmas.iter().zip(exps) {
            term = &term * &sig.pow(e);
        }
        realized = &realized + &term;
    }
    if realized != combo {
        return Ok(false);
    }

    let kq = Rational::from_integer(k.into());
    let half = Rational::new(1.into(), 2.into());
    let reduced = expr
        .substitute(0, &Sparse::constant(4, kq.clone()))?
        .substitute(1, &Sparse::constant(4, &kq * (&kq - int(1)) * &half))?;
    let target = &(&s(2).scale(&(int(4) * &kq - int(6))) - &s(3).scale(&int(4)))
        - &Sparse::constant(4, &kq * (&kq - int(1)) * (&kq - int(1)) * (&kq - int(2)) * &half);
    Ok(reduced == target)
}
