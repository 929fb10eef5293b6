//! Partitions, hook lengths, Specht-module dimensions, irreducible characters
//! of the symmetric group, and multiplicities of irreducibles inside
//! permutation modules.

mod character;
mod partition;
mod young;

pub use character::{conjugacy_classes, mn_character, ConjugacyClass};
pub use partition::{pad_partition, partitions_of, specht_dim, two_row_closed_form, two_row_max_dim, Partition};
pub use young::{
    bc_imrn_multiplicity, boolean_cube_multiplicities, restriction_filter, subset_fixed_points,
    young_module_multiplicities, BcMultiplicity, IsotypicTable,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReprError {
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("partition sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("cannot pad {partition} to n = {n}: need n >= {needed}")]
    PadTooSmall { partition: String, n: usize, needed: usize },
    #[error("{0}")]
    OutOfRange(String),
}
