//! Exact signs of a multi-affine polynomial at every vertex of a regular grid.
//!
//! Grid coordinates on axis `j` are `(a_j + i b_j) / D_j`; multiplying `P` by
//! a positive constant turns every vertex value into an integer, which is
//! computed by contracting the `2 x ... x 2` coefficient tensor one axis at a
//! time. Machine `i128` is used when a magnitude bound fits, `BigInt`
//! otherwise.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::scalar::Scalar;
use crate::{MultiAffinePoly, RationalBox};

trait LatticeInt: Scalar {
    fn from_big(v: &BigInt) -> Self;
}

impl LatticeInt for i128 {
    fn from_big(v: &BigInt) -> Self {
        v.to_i128().expect("magnitude bound checked before choosing i128")
    }
}

impl LatticeInt for BigInt {
    fn from_big(v: &BigInt) -> Self {
        v.clone()
    }
}

struct AxisScale {
    offset: BigInt,
    step: BigInt,
    denom: BigInt,
}

/// Signs (`-1`, `0`, `1`) of `p` at the `(res + 1)^n` grid vertices of `bx`,
/// axis 0 varying slowest.
pub(crate) fn vertex_signs(p: &MultiAffinePoly, bx: &RationalBox, res: usize) -> Vec<i8> {
    let n = p.n_vars();
    debug_assert_eq!(bx.n_axes(), n);
    let res_big = BigInt::from(res);
    let scales: Vec<AxisScale> = bx
        .axes()
        .iter()
        .map(|(lo, hi)| {
            let l = lo.denom().lcm(hi.denom());
            let denom = &l * &res_big;
            let offset = (lo * crate::Rational::from_integer(denom.clone())).to_integer();
            let step = ((hi - lo) * crate::Rational::from_integer(l)).to_integer();
            AxisScale { offset, step, denom }
        })
        .collect();

    let coeff_lcm = p.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let mut tensor = vec![BigInt::zero(); 1 << n];
    for (mask, c) in p.terms() {
        let idx = (0..n).fold(0usize, |acc, j| acc | ((mask >> j & 1) as usize) << (n - 1 - j));
        tensor[idx] = (c * crate::Rational::from_integer(coeff_lcm.clone())).to_integer();
    }

    let axis_max: Vec<BigInt> = scales
        .iter()
        .map(|s| {
            let far = (&s.offset + &s.step * &res_big).abs();
            s.offset.abs().max(far).max(s.denom.clone())
        })
        .collect();
    let coeff_sum: BigInt = tensor.iter().map(|c| c.abs()).sum();
    let bound = axis_max.iter().fold(coeff_sum, |acc, m| acc * m);
    if bound.bits() < 126 {
        let tensor: Vec<i128> = tensor.iter().map(i128::from_big).collect();
        contract(tensor, &scales, res)
    } else {
        contract(tensor, &scales, res)
    }
}

fn contract<T: LatticeInt>(mut cur: Vec<T>, scales: &[AxisScale], res: usize) -> Vec<i8> {
    let n = scales.len();
    if n == 0 {
        return cur.iter().map(sign).collect();
    }
    let side = res + 1;
    let mut outer = 1usize;
    for (j, s) in scales.iter().enumerate() {
        let inner = 1usize << (n - 1 - j);
        let denom = T::from_big(&s.denom);
        let coords: Vec<T> = (0..side).map(|i| T::from_big(&(&s.offset + &s.step * BigInt::from(i)))).collect();
        let block_in = 2 * inner;
        let block_out = side * inner;
        if j + 1 < n {
            let mut next = vec![T::zero(); outer * block_out];
            next.par_chunks_mut(block_out).enumerate().for_each(|(o, out)| {
                let src = &cur[o * block_in..(o + 1) * block_in];
                for (i, x) in coords.iter().enumerate() {
                    for k in 0..inner {
                        out[i * inner + k] = src[k].clone() * denom.clone() + src[inner + k].clone() * x.clone();
                    }
                }
            });
            cur = next;
            outer *= side;
        } else {
            let mut signs = vec![0i8; outer * side];
            signs.par_chunks_mut(side).enumerate().for_each(|(o, out)| {
                let (c0, c1) = (&cur[2 * o], &cur[2 * o + 1]);
                for (i, x) in coords.iter().enumerate() {
                    out[i] = sign(&(c0.clone() * denom.clone() + c1.clone() * x.clone()));
                }
            });
            return signs;
        }
    }
    unreachable!("the last axis returns")
}

fn sign<T: Scalar>(v: &T) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{AxisBox, MultiAffine};
    use crate::scalar::int;
    use crate::Rational;
    use proptest::prelude::*;

    fn direct(p: &MultiAffinePoly, bx: &RationalBox, res: usize) -> Vec<i8> {
        let n = p.n_vars();
        let side = res + 1;
        (0..side.pow(n as u32))
            .map(|v| {
                let x: Vec<Rational> = (0..n)
                    .map(|j| {
                        let i = v / side.pow((n - 1 - j) as u32) % side;
                        let (lo, hi) = bx.axis(j);
                        lo + (hi - lo) * Rational::new(i.into(), res.into())
                    })
                    .collect();
                sign(&p.eval(&x).unwrap())
            })
            .collect()
    }

    #[test]
    fn hyperbola_signs() {
        let p = MultiAffine::from_terms(2, [(0b11, int(1)), (0, int(-1))]).unwrap();
        let bx = AxisBox::cube(2, int(-2), int(2)).unwrap();
        assert_eq!(vertex_signs(&p, &bx, 4), direct(&p, &bx, 4));
    }

    #[test]
    fn huge_coefficients_use_bigint_path() {
        let big = Rational::from_integer(BigInt::from(10).pow(40));
        let p =
            MultiAffine::from_terms(3, [(0b111, big.clone()), (0b001, -big), (0, Rational::new(1.into(), 3.into()))])
                .unwrap();
        let bx = AxisBox::cube(3, Rational::new((-7).into(), 3.into()), int(5)).unwrap();
        assert_eq!(vertex_signs(&p, &bx, 3), direct(&p, &bx, 3));
    }

    proptest! {
        #[test]
        fn agrees_with_direct_evaluation(
            n in 1usize..4,
            coeffs in proptest::collection::vec((-5i64..5, 1i64..4), 8),
            lo in (-6i64..0, 1i64..4),
            width in (1i64..8, 1i64..3),
            res in 1usize..5,
        ) {
            let terms = coeffs.iter().take(1 << n).enumerate().map(|(m, &(a, b))| (m as u64, Rational::new(a.into(), b.into())));
            let p = MultiAffine::from_terms(n, terms).unwrap();
            let lo = Rational::new(lo.0.into(), lo.1.into());
            let hi = &lo + Rational::new(width.0.into(), width.1.into());
            let bx = AxisBox::cube(n, lo, hi).unwrap();
            prop_assert_eq!(vertex_signs(&p, &bx, res), direct(&p, &bx, res));
        }
    }
}
