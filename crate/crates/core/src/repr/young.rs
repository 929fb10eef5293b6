use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::{conjugacy_classes, mn_character, partitions_of, specht_dim, Partition, ReprError};
use crate::scalar::factorial;

/// Multiplicity of each irreducible `S^lambda` in a representation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IsotypicTable {
    mults: BTreeMap<Partition, u64>,
}

#[derive(Serialize)]
struct Entry<'a> {
    partition: &'a Partition,
    mult: u64,
}

impl IsotypicTable {
    pub fn from_entries(entries: impl IntoIterator<Item = (Partition, u64)>) -> Self {
        let mut mults = BTreeMap::new();
        for (p, m) in entries {
            if m > 0 {
                *mults.entry(p).or_insert(0) += m;
            }
        }
        Self { mults }
    }

    pub fn get(&self, lambda: &Partition) -> u64 {
        self.mults.get(lambda).copied().unwrap_or(0)
    }

    /// Nonzero entries, largest partition first.
    pub fn entries(&self) -> impl Iterator<Item = (&Partition, u64)> + '_ {
        self.mults.iter().rev().map(|(p, m)| (p, *m))
    }

    pub fn len(&self) -> usize {
        self.mults.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    /// `sum mult(lambda) * dim S^lambda`.
    pub fn total_dim(&self) -> BigInt {
        self.mults.iter().map(|(p, &m)| specht_dim(p) * BigInt::from(m)).sum()
    }

    /// `[{"partition": [...], "mult": m}, ...]`.
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<Entry> = self.entries().map(|(partition, mult)| Entry { partition, mult }).collect();
        serde_json::to_value(entries).expect("plain data serializes")
    }

    fn merge(&mut self, other: &IsotypicTable) {
        for (p, m) in &other.mults {
            *self.mults.entry(p.clone()).or_insert(0) += m;
        }
    }
}

/// Number of `k`-subsets of `{1..n}` fixed by a permutation of cycle type
/// `mu`: subsets that are unions of whole cycles, i.e. the coefficient of
/// `z^k` in `prod_i (1 + z^{mu_i})`.
pub fn subset_fixed_points(mu: &Partition, k: usize) -> BigInt {
    let n = mu.size();
    if k > n {
        return BigInt::zero();
    }
    let mut ways = vec![BigInt::zero(); n + 1];
    ways[0] = BigInt::from(1);
    for &c in mu.parts() {
        for s in (c..=n).rev() {
            let add = ways[s - c].clone();
            ways[s] += add;
        }
    }
    ways.swap_remove(k)
}

/// Decomposes the permutation module on `k`-subsets of `{1..n}` by character
/// inner products.
pub fn young_module_multiplicities(n: usize, k: usize) -> Result<IsotypicTable, ReprError> {
    if 2 * k > n {
        return Err(ReprError::OutOfRange(format!("need 0 <= k <= n/2 (k = {k}, n = {n})")));
    }
    let classes = conjugacy_classes(n);
    let fixed: Vec<BigInt> = classes.iter().map(|c| subset_fixed_points(&c.cycle_type, k)).collect();
    let order = factorial(n as u64);
    let mut entries = Vec::new();
    for lambda in partitions_of(n) {
        let mut acc = BigInt::zero();
        for (class, fix) in classes.iter().zip(&fixed) {
            if fix.is_zero() {
                continue;
            }
            acc += &class.size * mn_character(&lambda, &class.cycle_type)? * fix;
        }
        debug_assert!((&acc % &order).is_zero(), "inner product must be an integer");
        let mult = (acc / &order).to_u64().expect("multiplicity is a small nonnegative integer");
        entries.push((lambda, mult));
    }
    Ok(IsotypicTable::from_entries(entries))
}

/// Decomposition of the permutation module on all of `{0,1}^n`, the union of
/// the `k`-subset modules for `k = 0..n`.
pub fn boolean_cube_multiplicities(n: usize) -> Result<IsotypicTable, ReprError> {
    let mut table = IsotypicTable::default();
    for k in 0..=n {
        table.merge(&young_module_multiplicities(n, k.min(n - k))?);
    }
    Ok(table)
}

/// Partitions of `n` short enough to occur in degree-`i` cohomology of a
/// symmetric hypersurface of degree `d`: `length(lambda) < i + 2d - 1`.
pub fn restriction_filter(n: usize, d: usize, i: usize) -> Result<Vec<Partition>, ReprError> {
    if d < 2 {
        return Err(ReprError::OutOfRange(format!("restriction bound needs d >= 2 (got {d})")));
    }
    let bound = i + 2 * d - 1;
    Ok(partitions_of(n).into_iter().filter(|p| p.length() < bound).collect())
}

/// Closed-form multiplicity of `S^{lambda}_n` in `H^i` of the Boolean cube.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BcMultiplicity {
    pub value: i64,
    /// `false` when `n < 2|lambda|`, where the closed form is not claimed.
    pub validated: bool,
}

/// `n - 2 lambda_1 + 1` if `i = 0` and `length(lambda) <= 1`, else 0.
pub fn bc_imrn_multiplicity(lambda: &Partition, n: usize, i: usize) -> BcMultiplicity {
    let validated = n >= 2 * lambda.size();
    let value = if i == 0 && lambda.length() <= 1 { n as i64 - 2 * lambda.first() as i64 + 1 } else { 0 };
    BcMultiplicity { value, validated }
}
