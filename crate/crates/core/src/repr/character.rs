use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;

use super::{partitions_of, Partition, ReprError};
use crate::scalar::factorial;

/// A conjugacy class of `S_n`, identified by its cycle type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub cycle_type: Partition,
    pub size: BigInt,
}

impl ConjugacyClass {
    /// Class size `n! / prod_k (k^{m_k} m_k!)`.
    pub fn of(cycle_type: Partition) -> Self {
        let mut denom = BigInt::from(1);
        let parts = cycle_type.parts();
        let mut i = 0;
        while i < parts.len() {
            let k = parts[i];
            let m = parts[i..].iter().take_while(|&&p| p == k).count();
            denom *= num_traits::pow(BigInt::from(k), m) * factorial(m as u64);
            i += m;
        }
        let size = factorial(cycle_type.size() as u64) / denom;
        Self { cycle_type, size }
    }
}

pub fn conjugacy_classes(n: usize) -> Vec<ConjugacyClass> {
    partitions_of(n).into_iter().map(ConjugacyClass::of).collect()
}

type Memo = HashMap<(Vec<usize>, Vec<usize>), BigInt>;

thread_local! {
    static MEMO: RefCell<Memo> = RefCell::new(HashMap::new());
}

/// Irreducible character `chi^lambda` evaluated on the class of cycle type `mu`
/// (Murnaghan-Nakayama rule). Results are memoized per thread.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<BigInt, ReprError> {
    if lambda.size() != mu.size() {
        return Err(ReprError::SizeMismatch(lambda.size(), mu.size()));
    }
    Ok(mn(lambda.parts(), mu.parts()))
}

fn mn(lambda: &[usize], mu: &[usize]) -> BigInt {
    let Some((&m, rest)) = mu.split_first() else {
        return BigInt::from(1);
    };
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(v) = MEMO.with(|memo| memo.borrow().get(&key).cloned()) {
        return v;
    }
    // Beta-set: beta_i = lambda_i + (len - 1 - i), strictly decreasing.
    let len = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut total = BigInt::from(0);
    for (idx, &b) in beta.iter().enumerate() {
        if b < m || beta.contains(&(b - m)) {
            continue;
        }
        let target = b - m;
        // leg length = beads strictly between target and b
        let leg = beta.iter().filter(|&&g| g > target && g < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let smaller: Vec<usize> = next.iter().enumerate().map(|(i, &g)| g - (len - 1 - i)).filter(|&p| p > 0).collect();
        let v = mn(&smaller, rest);
        if leg % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    MEMO.with(|memo| memo.borrow_mut().insert(key, total.clone()));
    total
}
