use super::PolyError;
use crate::scalar::Scalar;

/// Product of closed intervals `[lo_i, hi_i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AxisBox<T> {
    axes: Vec<(T, T)>,
}

impl<T: Scalar> AxisBox<T> {
    pub fn new(axes: Vec<(T, T)>) -> Result<Self, PolyError> {
        for (axis, (lo, hi)) in axes.iter().enumerate() {
            if lo > hi {
                return Err(PolyError::ReversedInterval { axis, lo: lo.to_string(), hi: hi.to_string() });
            }
        }
        Ok(Self { axes })
    }

    /// `[lo, hi]^n`.
    pub fn cube(n: usize, lo: T, hi: T) -> Result<Self, PolyError> {
        Self::new(vec![(lo, hi); n])
    }

    pub fn n_axes(&self) -> usize {
        self.axes.len()
    }

    pub fn axes(&self) -> &[(T, T)] {
        &self.axes
    }

    pub fn axis(&self, i: usize) -> &(T, T) {
        &self.axes[i]
    }

    /// The vertex selecting `hi` on axes whose bit is set in `corner`.
    pub fn vertex(&self, corner: u64) -> Vec<T> {
        self.axes
            .iter()
            .enumerate()
            .map(|(i, (lo, hi))| if corner >> i & 1 == 1 { hi.clone() } else { lo.clone() })
            .collect()
    }

    /// All axes carry the same interval, so coordinate permutations preserve the box.
    pub fn is_symmetric(&self) -> bool {
        self.axes.windows(2).all(|w| w[0] == w[1])
    }

    pub fn contains(&self, x: &[T]) -> bool {
        x.len() == self.axes.len() && self.axes.iter().zip(x).all(|((lo, hi), v)| lo <= v && v <= hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn rejects_reversed() {
        assert!(AxisBox::new(vec![(int(1), int(0))]).is_err());
        let b = AxisBox::new(vec![(int(0), int(1)), (int(-1), int(1))]).unwrap();
        assert_eq!(b.vertex(0b10), vec![int(0), int(1)]);
        assert!(!b.is_symmetric());
        assert!(b.contains(&[int(0), int(0)]));
    }
}
