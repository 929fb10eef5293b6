use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::ReprError;
use crate::scalar::{binomial, factorial};

/// An integer partition: positive parts in weakly decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = ReprError;
    fn try_from(parts: Vec<usize>) -> Result<Self, ReprError> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, ReprError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ReprError::NotAPartition(parts));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// `(n)`, or the empty partition when `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self { parts: vec![n] }
        }
    }

    /// `1^n`.
    pub fn column(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// Largest part; 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Self {
        let parts = (1..=self.first()).map(|j| self.parts.iter().filter(|&&p| p >= j).count()).collect();
        Self { parts }
    }

    /// Hook length of box `(i, j)` (0-based row and column).
    pub fn hook(&self, i: usize, j: usize) -> Option<usize> {
        let row = *self.parts.get(i)?;
        if j >= row {
            return None;
        }
        let below = self.parts[i + 1..].iter().take_while(|&&p| p > j).count();
        Some(row - j - 1 + below + 1)
    }

    pub fn hooks(&self) -> impl Iterator<Item = usize> + '_ {
        let t = self.transpose();
        self.parts.iter().enumerate().flat_map(move |(i, &row)| {
            let t = t.parts.clone();
            (0..row).map(move |j| row + t[j] - i - j - 1)
        })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Every partition of `n`, in lexicographically decreasing order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            rec(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Dimension of the Specht module, `n! / prod of hook lengths`.
pub fn specht_dim(lambda: &Partition) -> BigInt {
    let hooks = lambda.hooks().fold(BigInt::from(1), |acc, h| acc * BigInt::from(h));
    factorial(lambda.size() as u64) / hooks
}

/// Specht dimension of the balanced two-row partition `(n - floor(n/2), floor(n/2))`.
pub fn two_row_max_dim(n: usize) -> Result<BigInt, ReprError> {
    if n < 2 {
        return Err(ReprError::OutOfRange(format!("two-row partitions need n >= 2 (got {n})")));
    }
    let lambda = Partition::new(vec![n - n / 2, n / 2])?;
    Ok(specht_dim(&lambda))
}

/// Closed form of [`two_row_max_dim`] with `m = floor(n/2)`: `C(n, m) / (m + 1)`
/// for even `n` and `2 C(n, m) / (m + 2)` for odd `n`.
pub fn two_row_closed_form(n: usize) -> Result<BigRational, ReprError> {
    if n < 2 {
        return Err(ReprError::OutOfRange(format!("two-row partitions need n >= 2 (got {n})")));
    }
    let m = n / 2;
    let c = BigRational::from_integer(binomial(n as u64, m as u64));
    Ok(if n.is_multiple_of(2) {
        c / BigRational::from_integer((m + 1).into())
    } else {
        c * BigRational::from_integer(2.into()) / BigRational::from_integer((m + 2).into())
    })
}

/// `(n - d, lambda_1, ..., lambda_l)` for `lambda` a partition of `d`.
pub fn pad_partition(lambda: &Partition, n: usize) -> Result<Partition, ReprError> {
    let d = lambda.size();
    let needed = lambda.first() + d;
    if n < needed {
        return Err(ReprError::PadTooSmall { partition: lambda.to_string(), n, needed });
    }
    let mut parts = Vec::with_capacity(lambda.length() + 1);
    if n > d {
        parts.push(n - d);
    }
    parts.extend_from_slice(&lambda.parts);
    Partition::new(parts)
}
