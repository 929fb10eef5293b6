//! Counting connected components: the exact vertex-sign cell method for
//! multi-affine zero sets, an interval fallback for general polynomials,
//! Sturm chains and discriminants, and the symmetric stabilization
//! experiments built on diagonal restrictions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use thiserror::Error;

use crate::polycore::PolyError;
use crate::symfun::SymError;

mod grid;
mod interval;
mod lattice;
mod report;
mod sturm;
mod symmetric;
mod unionfind;

pub use grid::{
    boolean_slice_points, complement_complex, complement_components, general_complex, grid_components,
    grid_components_general, grid_components_system, grid_components_with_complex, system_complex, zero_set_complex,
    CellComplex, GridOptions, DEFAULT_CELL_BUDGET, SLICE_MAX_VARS,
};
pub use interval::{enclose, Interval};
pub use report::{big_to_json, bounds, Bounds, Certification, ComponentReport, SampleStats};
pub use sturm::{discriminant, from_roots, sturm_count, RootRange, SturmChain};
pub use symmetric::{
    aux_inequality_check, aux_inequality_margin, hyperplane_cut_check, orbit_stability_check, random_hyperplane_point,
    stabilization_scan, symmetric_b0, ScanRow, StabilizationScan, DEFAULT_SEED,
};
pub use unionfind::UnionFind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopoError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error("the zero polynomial has no Sturm chain")]
    ZeroPolynomial,
    #[error("{0}")]
    Precondition(String),
    #[error("grid needs {cells} cells, over the budget of {budget}")]
    BudgetExceeded { cells: String, budget: u64 },
    #[error("bound violated ({theorem}): count {count} > {bound}")]
    BoundViolated { theorem: &'static str, count: u64, bound: BigInt },
    #[error("{degenerate} of {drawn} samples were degenerate (more than 1%)")]
    TooManyDegenerate { degenerate: usize, drawn: usize },
    #[error("root count differs between samples: {counts:?}")]
    RootCountVaries { counts: BTreeMap<usize, usize> },
    #[error("count increased from {previous} to {count} at n = {n}, past the stabilization threshold")]
    StabilizationViolated { n: usize, previous: u64, count: u64 },
    #[error("input is not symmetric: {0}")]
    Asymmetric(String),
    #[error("Boolean slice check failed: {0}")]
    SliceMismatch(String),
}

impl TopoError {
    /// True for failures of a mathematical assertion rather than bad input.
    pub fn is_assertion(&self) -> bool {
        matches!(
            self,
            TopoError::BoundViolated { .. }
                | TopoError::StabilizationViolated { .. }
                | TopoError::SliceMismatch(_)
                | TopoError::TooManyDegenerate { .. }
                | TopoError::RootCountVaries { .. }
        )
    }
}
