//! Cell-complex surrogates for `b_0` of zero sets and their complements.
//!
//! A box is cut into `res^n` closed cells. For a multi-affine polynomial the
//! extrema over a cell sit at its vertices, so "the cell meets `Z(P)`" is
//! decided exactly by the vertex signs. Marked cells sharing a facet are
//! merged with union-find; the number of classes is the component count at
//! that resolution. Resolutions double until two consecutive counts agree.

use num_traits::Zero;
use rayon::prelude::*;

use super::interval::{enclose, Interval};
use super::lattice::vertex_signs;
use super::report::{bounds, Bounds, Certification, ComponentReport};
use super::{TopoError, UnionFind};
use crate::polycore::{AxisBox, PolyError};
use crate::symfun::example3_family;
use crate::{MultiAffinePoly, Rational, RationalBox, SparsePoly};

pub const DEFAULT_CELL_BUDGET: u64 = 1 << 24;

/// Resolution schedule for a grid experiment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridOptions {
    /// Cells per axis on the first pass.
    pub res: usize,
    /// Double the resolution until two consecutive counts agree.
    pub refine: bool,
    /// Largest total number of cells any pass may use.
    pub cell_budget: u64,
}

impl Default for GridOptions {
    fn default() -> Self {
        Self { res: 8, refine: true, cell_budget: DEFAULT_CELL_BUDGET }
    }
}

impl GridOptions {
    pub fn fixed(res: usize) -> Self {
        Self { res, refine: false, ..Self::default() }
    }

    pub fn refining(res: usize) -> Self {
        Self { res, refine: true, ..Self::default() }
    }

    pub fn with_budget(mut self, cell_budget: u64) -> Self {
        self.cell_budget = cell_budget;
        self
    }
}

/// Marked cells of a regular grid on a box with their facet-adjacency classes.
#[derive(Debug, Clone)]
pub struct CellComplex {
    bx: RationalBox,
    res: usize,
    /// Sorted cell indices (axis 0 varies slowest).
    marked: Vec<usize>,
    labels: Vec<i8>,
    roots: Vec<u32>,
    components: usize,
}

fn total_cells(n: usize, res: usize) -> Option<u64> {
    (res as u64).checked_pow(n as u32)
}

impl CellComplex {
    /// Unions facet-adjacent marked cells that carry the same label.
    fn build(bx: RationalBox, res: usize, marked: Vec<(usize, i8)>) -> Self {
        let n = bx.n_axes();
        let (marked, labels): (Vec<usize>, Vec<i8>) = marked.into_iter().unzip();
        let mut uf = UnionFind::new(marked.len());
        let strides: Vec<usize> = (0..n).map(|j| res.pow((n - 1 - j) as u32)).collect();
        for (id, &cell) in marked.iter().enumerate() {
            for &stride in &strides {
                if (cell / stride) % res + 1 >= res {
                    continue;
                }
                if let Ok(other) = marked.binary_search(&(cell + stride)) {
                    if labels[other] == labels[id] {
                        uf.union(id, other);
                    }
                }
            }
        }
        let components = uf.sets();
        let roots = uf.roots();
        Self { bx, res, marked, labels, roots, components }
    }

    pub fn bx(&self) -> &RationalBox {
        &self.bx
    }

    pub fn resolution(&self) -> usize {
        self.res
    }

    pub fn n_axes(&self) -> usize {
        self.bx.n_axes()
    }

    pub fn cell_count(&self) -> usize {
        self.res.pow(self.n_axes() as u32)
    }

    pub fn marked_cells(&self) -> &[usize] {
        &self.marked
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    fn position(&self, cell: usize) -> Option<usize> {
        self.marked.binary_search(&cell).ok()
    }

    pub fn is_marked(&self, cell: usize) -> bool {
        self.position(cell).is_some()
    }

    /// Representative of the component containing `cell`, if it is marked.
    pub fn component_of(&self, cell: usize) -> Option<u32> {
        self.position(cell).map(|i| self.roots[i])
    }

    pub fn label_of(&self, cell: usize) -> Option<i8> {
        self.position(cell).map(|i| self.labels[i])
    }

    pub fn cell_coords(&self, cell: usize) -> Vec<usize> {
        let n = self.n_axes();
        (0..n).map(|j| cell / self.res.pow((n - 1 - j) as u32) % self.res).collect()
    }

    pub fn cell_index(&self, coords: &[usize]) -> usize {
        coords.iter().fold(0, |acc, &k| acc * self.res + k)
    }

    /// Interval `[lo, hi]` of cell coordinate `k` along `axis`.
    pub fn cell_interval(&self, axis: usize, k: usize) -> (Rational, Rational) {
        let (lo, hi) = self.bx.axis(axis);
        let w = (hi - lo) / Rational::from_integer(self.res.into());
        let a = lo + &w * Rational::from_integer(k.into());
        let b = &a + &w;
        (a, b)
    }

    pub fn cell_box(&self, cell: usize) -> RationalBox {
        let axes = self.cell_coords(cell).iter().enumerate().map(|(j, &k)| self.cell_interval(j, k)).collect();
        AxisBox::new(axes).expect("cell intervals are ordered")
    }

    /// Marked cells grouped by component, in increasing order of first cell.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut groups: std::collections::BTreeMap<u32, Vec<usize>> = Default::default();
        for (i, &cell) in self.marked.iter().enumerate() {
            groups.entry(self.roots[i]).or_default().push(cell);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.sort_by_key(|g| g[0]);
        out
    }
}

fn check_grid_inputs(n_poly: usize, bx: &RationalBox, res: usize) -> Result<(), TopoError> {
    if bx.n_axes() != n_poly {
        return Err(PolyError::DimensionMismatch { expected: n_poly, got: bx.n_axes() }.into());
    }
    if n_poly == 0 {
        return Err(TopoError::Precondition("grid experiments need at least one variable".into()));
    }
    if res == 0 {
        return Err(TopoError::Precondition("resolution must be positive".into()));
    }
    Ok(())
}

/// Summarises each polynomial's vertex signs on every cell (`-1` or `1` when
/// strictly one-signed, `0` otherwise) and keeps the cells `label` accepts.
fn classify<F>(n: usize, res: usize, signs: &[Vec<i8>], label: F) -> Vec<(usize, i8)>
where
    F: Fn(&[i8]) -> Option<i8> + Sync,
{
    let side = res + 1;
    let vstride: Vec<usize> = (0..n).map(|j| side.pow((n - 1 - j) as u32)).collect();
    let corners: Vec<usize> =
        (0..1usize << n).map(|e| (0..n).filter(|j| e >> j & 1 == 1).map(|j| vstride[j]).sum()).collect();
    let cells = res.pow(n as u32);
    (0..cells)
        .into_par_iter()
        .with_min_len(1024)
        .map_init(
            || vec![0i8; signs.len()],
            |summary, cell| {
                let mut rest = cell;
                let mut base = 0;
                for j in (0..n).rev() {
                    base += (rest % res) * vstride[j];
                    rest /= res;
                }
                for (out, s) in summary.iter_mut().zip(signs) {
                    let first = s[base];
                    *out = if first != 0 && corners.iter().all(|&off| s[base + off] == first) { first } else { 0 };
                }
                label(summary).map(|l| (cell, l))
            },
        )
        .flatten()
        .collect()
}

/// Cells whose closure meets `Z(P)`: some vertex value `<= 0` and some `>= 0`.
pub fn zero_set_complex(p: &MultiAffinePoly, bx: &RationalBox, res: usize) -> Result<CellComplex, TopoError> {
    check_grid_inputs(p.n_vars(), bx, res)?;
    let signs = vertex_signs(p, bx, res);
    let marked = classify(p.n_vars(), res, &[signs], |s| (s[0] == 0).then_some(0));
    Ok(CellComplex::build(bx.clone(), res, marked))
}

/// Cells on which `P` is strictly positive (label 1) or strictly negative (label -1).
pub fn complement_complex(p: &MultiAffinePoly, bx: &RationalBox, res: usize) -> Result<CellComplex, TopoError> {
    check_grid_inputs(p.n_vars(), bx, res)?;
    let signs = vertex_signs(p, bx, res);
    let marked = classify(p.n_vars(), res, &[signs], |s| (s[0] != 0).then_some(s[0]));
    Ok(CellComplex::build(bx.clone(), res, marked))
}

/// Cells where every polynomial's vertex range brackets zero.
pub fn system_complex(ps: &[MultiAffinePoly], bx: &RationalBox, res: usize) -> Result<CellComplex, TopoError> {
    let first = ps.first().ok_or_else(|| TopoError::Precondition("empty polynomial system".into()))?;
    for p in ps {
        check_grid_inputs(p.n_vars(), bx, res)?;
    }
    let signs: Vec<Vec<i8>> = ps.iter().map(|p| vertex_signs(p, bx, res)).collect();
    let marked = classify(first.n_vars(), res, &signs, |s| s.iter().all(|&v| v == 0).then_some(0));
    Ok(CellComplex::build(bx.clone(), res, marked))
}

/// Cells whose interval enclosure of `P` contains zero (conservative).
pub fn general_complex(p: &SparsePoly, bx: &RationalBox, res: usize) -> Result<CellComplex, TopoError> {
    check_grid_inputs(p.n_vars(), bx, res)?;
    let n = p.n_vars();
    let per_axis: Vec<Vec<Interval<Rational>>> = (0..n)
        .map(|j| {
            let (lo, hi) = bx.axis(j);
            let w = (hi - lo) / Rational::from_integer(res.into());
            (0..res)
                .map(|k| {
                    let a = lo + &w * Rational::from_integer(k.into());
                    let b = &a + &w;
                    Interval::new(a, b)
                })
                .collect()
        })
        .collect();
    let cells = res.pow(n as u32);
    let marked: Vec<(usize, i8)> = (0..cells)
        .into_par_iter()
        .filter_map(|cell| {
            let mut rest = cell;
            let mut ivs = vec![Interval::point(Rational::zero()); n];
            for j in (0..n).rev() {
                ivs[j] = per_axis[j][rest % res].clone();
                rest /= res;
            }
            enclose(p, &ivs).contains_zero().then_some((cell, 0))
        })
        .collect();
    Ok(CellComplex::build(bx.clone(), res, marked))
}

/// Runs `build` at doubling resolutions and assembles the report.
fn run_schedule<F>(
    n: usize,
    opts: GridOptions,
    exact_empty: bool,
    best: Certification,
    bounds: Option<Bounds>,
    mut build: F,
) -> Result<(ComponentReport, CellComplex), TopoError>
where
    F: FnMut(usize) -> Result<CellComplex, TopoError>,
{
    let fits = |res: usize| total_cells(n, res).is_some_and(|c| c <= opts.cell_budget);
    if !fits(opts.res) {
        return Err(TopoError::BudgetExceeded {
            cells: total_cells(n, opts.res).map_or_else(|| "overflow".into(), |c| c.to_string()),
            budget: opts.cell_budget,
        });
    }
    let mut res = opts.res;
    let mut trail = Vec::new();
    let mut certified = Certification::UpperStructureOnly;
    let complex = loop {
        let complex = build(res)?;
        let count = complex.component_count() as u64;
        trail.push((res, count));
        if exact_empty && complex.marked_cells().is_empty() {
            certified = Certification::ExactEmpty;
            break complex;
        }
        if trail.len() >= 2 && trail[trail.len() - 2].1 == count {
            certified = best;
            break complex;
        }
        if !opts.refine || !fits(res * 2) {
            break complex;
        }
        res *= 2;
    };
    let count = trail.last().expect("at least one pass").1;
    Ok((ComponentReport { count, certified, trail, bounds, seed: None, samples: None }, complex))
}

fn degree_bounds(d: Option<usize>, n: usize) -> Option<Bounds> {
    d.filter(|&d| d >= 1).and_then(|d| bounds(d, n).ok())
}

/// Components of `Z(P) ∩ B`. Fails with [`TopoError::BoundViolated`] if the
/// count exceeds `2^(d-1)`.
pub fn grid_components(p: &MultiAffinePoly, bx: &RationalBox, opts: GridOptions) -> Result<ComponentReport, TopoError> {
    grid_components_with_complex(p, bx, opts).map(|(r, _)| r)
}

/// Like [`grid_components`], also returning the complex of the final pass.
pub fn grid_components_with_complex(
    p: &MultiAffinePoly,
    bx: &RationalBox,
    opts: GridOptions,
) -> Result<(ComponentReport, CellComplex), TopoError> {
    check_grid_inputs(p.n_vars(), bx, opts.res)?;
    let b = degree_bounds(p.degree().finite(), p.n_vars());
    let (report, complex) = run_schedule(p.n_vars(), opts, true, Certification::ResolutionConverged, b, |res| {
        zero_set_complex(p, bx, res)
    })?;
    if let Some(b) = &report.bounds {
        if num_bigint::BigInt::from(report.count) > b.ccez {
            return Err(TopoError::BoundViolated {
                theorem: "hypersurface: b0(Z(P)) <= 2^(d-1)",
                count: report.count,
                bound: b.ccez.clone(),
            });
        }
    }
    Ok((report, complex))
}

/// Components of `B \ Z(P)`, counted on strictly sign-definite cells. Fails
/// with [`TopoError::BoundViolated`] if the count exceeds `2^d`.
pub fn complement_components(
    p: &MultiAffinePoly,
    bx: &RationalBox,
    opts: GridOptions,
) -> Result<ComponentReport, TopoError> {
    check_grid_inputs(p.n_vars(), bx, opts.res)?;
    let b = degree_bounds(p.degree().finite(), p.n_vars());
    let (report, _) = run_schedule(p.n_vars(), opts, false, Certification::ResolutionConverged, b, |res| {
        complement_complex(p, bx, res)
    })?;
    if let Some(b) = &report.bounds {
        if num_bigint::BigInt::from(report.count) > b.ccdz {
            return Err(TopoError::BoundViolated {
                theorem: "complement: b0(R^n \\ Z(P)) <= 2^d",
                count: report.count,
                bound: b.ccdz.clone(),
            });
        }
    }
    Ok(report)
}

/// Clusters of cells that may contain a common zero of all `ps`.
pub fn grid_components_system(
    ps: &[MultiAffinePoly],
    bx: &RationalBox,
    opts: GridOptions,
) -> Result<ComponentReport, TopoError> {
    let first = ps.first().ok_or_else(|| TopoError::Precondition("empty polynomial system".into()))?;
    check_grid_inputs(first.n_vars(), bx, opts.res)?;
    let d = ps.iter().filter_map(|p| p.degree().finite()).max();
    let b = degree_bounds(d, first.n_vars());
    let (report, _) = run_schedule(first.n_vars(), opts, false, Certification::UpperStructureOnly, b, |res| {
        system_complex(ps, bx, res)
    })?;
    Ok(report)
}

/// Components of `Z(P) ∩ B` for a general polynomial, marking cells by
/// interval enclosure. Never certified beyond resolution convergence.
pub fn grid_components_general(
    p: &SparsePoly,
    bx: &RationalBox,
    opts: GridOptions,
) -> Result<ComponentReport, TopoError> {
    check_grid_inputs(p.n_vars(), bx, opts.res)?;
    let b = degree_bounds(p.total_degree().map(|d| d as usize), p.n_vars());
    let (report, _) = run_schedule(p.n_vars(), opts, false, Certification::ResolutionConverged, b, |res| {
        general_complex(p, bx, res)
    })?;
    Ok(report)
}

/// Largest `n` accepted by [`boolean_slice_points`].
pub const SLICE_MAX_VARS: usize = 20;

/// The `C(n, k)` points of `{0,1}^n` with exactly `k` ones, after checking
/// that they are precisely the 0/1 common zeros of the three-polynomial
/// system `example3_family(k, n)`.
pub fn boolean_slice_points(k: usize, n: usize) -> Result<Vec<Vec<u8>>, TopoError> {
    if k > n || n > SLICE_MAX_VARS {
        return Err(TopoError::Precondition(format!("need 0 <= k <= n <= {SLICE_MAX_VARS} (k = {k}, n = {n})")));
    }
    let family = example3_family(k as u64, n)?;
    // Coefficients have denominator at most 2; integer copies keep the signs.
    let scaled: Vec<_> = family
        .iter()
        .map(|p| {
            p.map_coeffs(|c| {
                use num_traits::ToPrimitive;
                (c * Rational::from_integer(2.into())).to_integer().to_i128().expect("small integer coefficients")
            })
        })
        .collect();

    // Value at every 0/1 point at once: f(m) = sum of coefficients over subsets of m.
    let cube = 1usize << n;
    let mut common = vec![true; cube];
    for p in &scaled {
        let mut vals = vec![0i128; cube];
        for (mask, c) in p.terms() {
            vals[mask as usize] = *c;
        }
        for j in 0..n {
            for m in 0..cube {
                if m >> j & 1 == 1 {
                    vals[m] += vals[m ^ (1 << j)];
                }
            }
        }
        for (flag, v) in common.iter_mut().zip(&vals) {
            *flag &= *v == 0;
        }
    }
    let mut points = Vec::new();
    for (m, &is_zero) in common.iter().enumerate() {
        let weight_k = m.count_ones() as usize == k;
        if is_zero != weight_k {
            return Err(TopoError::SliceMismatch(format!(
                "point {m:0width$b} has weight {} but common-zero test says {}",
                m.count_ones(),
                is_zero,
                width = n
            )));
        }
        if weight_k {
            let x: Vec<i128> = (0..n).map(|j| (m >> j & 1) as i128).collect();
            for p in &scaled {
                if p.eval(&x)? != 0 {
                    return Err(TopoError::SliceMismatch(format!("direct evaluation at {m:b} is nonzero")));
                }
            }
            points.push((0..n).map(|j| (m >> j & 1) as u8).collect());
        }
    }
    Ok(points)
}
