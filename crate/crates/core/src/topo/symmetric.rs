//! Experiments on symmetric hypersurfaces `Z(f)` with `f = sum a_i sigma_i`.
//!
//! Restricting `f` to the line `x + t(1, ..., 1)` through a point `x` with
//! `sigma_1(x) = 0` gives a univariate `f_x`. When `f_x` has a constant number
//! of simple real roots over all such `x`, that number is the component count
//! of `Z(f)`. Sampling can support this but never prove it, so reports from
//! here are `sample-certified` at best.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::grid::{grid_components_with_complex, GridOptions};
use super::report::{bounds, Certification, ComponentReport, SampleStats};
use super::sturm::{discriminant, RootRange, SturmChain};
use super::TopoError;
use crate::scalar::int;
use crate::symfun::{diagonal_restriction, SigmaCombination};
use crate::{MultiAffinePoly, Rational, RationalBox};

pub const DEFAULT_SEED: u64 = 20_160_217;

/// Entries of the random integer vectors behind each sample lie in `[-R, R]`.
const SAMPLE_RANGE: i64 = 10;

/// `n v - (sum v) 1` for a uniform integer `v in [-10, 10]^n`: an integer
/// point with `sigma_1 = 0` in the direction of `v` minus its mean.
pub fn random_hyperplane_point(rng: &mut impl Rng, n: usize) -> Vec<Rational> {
    let v: Vec<i64> = (0..n).map(|_| rng.gen_range(-SAMPLE_RANGE..=SAMPLE_RANGE)).collect();
    let s: i64 = v.iter().sum();
    v.iter().map(|&vi| int(n as i64 * vi - s)).collect()
}

fn checked_degree(f: &SigmaCombination) -> Result<usize, TopoError> {
    match f.effective_degree() {
        Some(d) if d >= 1 => Ok(d),
        _ => Err(TopoError::Precondition("f must have positive degree".into())),
    }
}

/// Number of components of `Z(f)` in `n` variables, estimated from
/// `samples` diagonal lines.
///
/// Samples whose `f_x` has a repeated root (zero discriminant for degree 2
/// or 3, a nonconstant Sturm gcd otherwise) are excluded and counted. The
/// run fails if more than 1% are excluded or if the remaining samples
/// disagree on the root count.
pub fn symmetric_b0(f: &SigmaCombination, n: usize, samples: usize, seed: u64) -> Result<ComponentReport, TopoError> {
    let d = checked_degree(f)?;
    if n < d.max(2) {
        return Err(TopoError::Precondition(format!("need n >= max(2, d) (d = {d}, n = {n})")));
    }
    if samples == 0 {
        return Err(TopoError::Precondition("need at least one sample".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stats = SampleStats { drawn: 0, degenerate: 0, root_counts: BTreeMap::new() };
    for _ in 0..samples {
        let x = random_hyperplane_point(&mut rng, n);
        let fx = diagonal_restriction(f, n, &x)?.poly;
        stats.drawn += 1;
        let chain = SturmChain::new(&fx)?;
        let degenerate = match fx.degree() {
            Some(2 | 3) => discriminant(&fx)?.is_zero(),
            _ => chain.has_multiple_root(),
        };
        if degenerate {
            stats.degenerate += 1;
            continue;
        }
        *stats.root_counts.entry(chain.count(&RootRange::WholeLine)?).or_default() += 1;
    }
    if stats.degenerate * 100 > stats.drawn {
        return Err(TopoError::TooManyDegenerate { degenerate: stats.degenerate, drawn: stats.drawn });
    }
    let count = match stats.root_counts.len() {
        1 => *stats.root_counts.keys().next().expect("one entry"),
        0 => return Err(TopoError::TooManyDegenerate { degenerate: stats.degenerate, drawn: stats.drawn }),
        _ => return Err(TopoError::RootCountVaries { counts: stats.root_counts }),
    };
    Ok(ComponentReport {
        count: count as u64,
        certified: Certification::SampleCertified,
        trail: Vec::new(),
        bounds: bounds(d, n).ok(),
        seed: Some(seed),
        samples: Some(stats),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub n: usize,
    pub count: u64,
    pub certified: Certification,
}

/// Per-`n` counts from [`stabilization_scan`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizationScan {
    pub rows: Vec<ScanRow>,
    /// `2^(d-1) + 1`; counts cannot increase from here on.
    pub threshold: usize,
    /// Count at the largest scanned `n`, when that `n` is past the threshold.
    pub stabilized: Option<u64>,
}

impl StabilizationScan {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,count,certified\n");
        for r in &self.rows {
            out.push_str(&format!("{},{},{}\n", r.n, r.count, r.certified.as_str()));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "rows": self.rows.iter().map(|r| serde_json::json!({
                "n": r.n, "count": r.count, "certified": r.certified.as_str(),
            })).collect::<Vec<_>>(),
            "threshold": self.threshold,
            "stabilized": self.stabilized,
        })
    }

    /// Whether all rows at or past the threshold share one count.
    pub fn tail_is_constant(&self) -> bool {
        let mut tail = self.rows.iter().filter(|r| r.n >= self.threshold).map(|r| r.count);
        match tail.next() {
            Some(first) => tail.all(|c| c == first),
            None => true,
        }
    }
}

/// Runs [`symmetric_b0`] for every `n` in `n_min..=n_max` and fails with
/// [`TopoError::StabilizationViolated`] if the count ever increases between
/// consecutive `n >= 2^(d-1) + 1`.
pub fn stabilization_scan(
    f: &SigmaCombination,
    n_min: usize,
    n_max: usize,
    samples: usize,
    seed: u64,
) -> Result<StabilizationScan, TopoError> {
    let d = checked_degree(f)?;
    if n_min < d || n_min > n_max {
        return Err(TopoError::Precondition(format!("need d <= n_min <= n_max (d = {d}, {n_min}..={n_max})")));
    }
    let threshold = (1usize << (d - 1)) + 1;
    let mut rows: Vec<ScanRow> = Vec::new();
    for n in n_min..=n_max {
        let report = symmetric_b0(f, n, samples, seed)?;
        if let Some(prev) = rows.last() {
            if prev.n >= threshold && report.count > prev.count {
                return Err(TopoError::StabilizationViolated { n, previous: prev.count, count: report.count });
            }
        }
        rows.push(ScanRow { n, count: report.count, certified: report.certified });
    }
    let stabilized = (n_max >= threshold).then(|| rows.last().expect("nonempty scan").count);
    Ok(StabilizationScan { rows, threshold, stabilized })
}

/// Grids `Z(P)` at one resolution and checks that swapping any two adjacent
/// coordinates maps each marked cell into its own component.
pub fn orbit_stability_check(p: &MultiAffinePoly, bx: &RationalBox, res: usize) -> Result<bool, TopoError> {
    if !p.is_symmetric() {
        return Err(TopoError::Asymmetric("polynomial".into()));
    }
    if !bx.is_symmetric() {
        return Err(TopoError::Asymmetric("box axes differ".into()));
    }
    let (_, complex) = grid_components_with_complex(p, bx, GridOptions::fixed(res))?;
    let n = complex.n_axes();
    for &cell in complex.marked_cells() {
        let coords = complex.cell_coords(cell);
        let own = complex.component_of(cell);
        for i in 0..n.saturating_sub(1) {
            let mut image = coords.clone();
            image.swap(i, i + 1);
            if complex.component_of(complex.cell_index(&image)) != own {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Grids `Z(f)` in `n` variables and checks that every component has a cell
/// within one cell width of the hyperplane `x_n = 0`.
pub fn hyperplane_cut_check(f: &SigmaCombination, n: usize, bx: &RationalBox, res: usize) -> Result<bool, TopoError> {
    let d = checked_degree(f)?;
    let threshold = (1usize << (d - 1)) + 1;
    if n < threshold {
        return Err(TopoError::Precondition(format!("need n >= 2^(d-1) + 1 = {threshold} (n = {n})")));
    }
    let p = f.materialize(n)?;
    let (_, complex) = grid_components_with_complex(&p, bx, GridOptions::fixed(res))?;
    let last = n - 1;
    let (lo, hi) = bx.axis(last);
    let w = (hi - lo) / Rational::from_integer(res.into());
    let near = |k: usize| {
        let (a, b) = complex.cell_interval(last, k);
        a <= w && b >= -w.clone()
    };
    Ok(complex.components().iter().all(|cells| cells.iter().any(|&c| near(complex.cell_coords(c)[last]))))
}

/// `(n-2)^2 / (n(n-1)) N_2(x)^3 - N_3(x)^2`; nonnegative whenever `sigma_1(x) = 0`.
pub fn aux_inequality_margin(x: &[Rational]) -> Rational {
    let n = x.len() as i64;
    let n2: Rational = x.iter().map(|v| v * v).sum();
    let n3: Rational = x.iter().map(|v| v * v * v).sum();
    Rational::new(((n - 2) * (n - 2)).into(), (n * (n - 1)).into()) * &n2 * &n2 * &n2 - &n3 * &n3
}

/// Checks the power-sum inequality exactly at `samples` random points of
/// `sigma_1 = 0`, at `x = 0`, and at the equality configurations
/// `s (n-1, -1, ..., -1)`.
pub fn aux_inequality_check(n: usize, samples: usize, seed: u64) -> Result<bool, TopoError> {
    if n < 3 {
        return Err(TopoError::Precondition(format!("need n >= 3 (n = {n})")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = vec![vec![Rational::zero(); n]];
    for s in [1, -1, 2, -7] {
        let mut x = vec![int(-s); n];
        x[0] = int(s * (n as i64 - 1));
        points.push(x);
    }
    points.extend((0..samples).map(|_| random_hyperplane_point(&mut rng, n)));
    Ok(points.iter().all(|x| !aux_inequality_margin(x).is_negative()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::AxisBox;
    use crate::symfun::elementary;

    fn combo(c: &[i64]) -> SigmaCombination {
        SigmaCombination::from_ints(c)
    }

    #[test]
    fn limit_counts() {
        let r = symmetric_b0(&combo(&[-1, 0, 1]), 8, 200, DEFAULT_SEED).unwrap();
        assert_eq!((r.count, r.certified), (2, Certification::SampleCertified));
        assert_eq!(r.samples.as_ref().unwrap().degenerate, 0);
        assert_eq!(symmetric_b0(&combo(&[0, -1, 0, 1]), 8, 200, DEFAULT_SEED).unwrap().count, 3);
        assert_eq!(symmetric_b0(&combo(&[0, 1]), 5, 50, 1).unwrap().count, 1);
    }

    #[test]
    fn samples_are_on_the_hyperplane() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..8 {
            let x = random_hyperplane_point(&mut rng, n);
            assert!(x.iter().sum::<Rational>().is_zero());
        }
    }

    #[test]
    fn preconditions() {
        assert!(symmetric_b0(&combo(&[1]), 4, 10, 0).is_err());
        assert!(symmetric_b0(&combo(&[0, 0, 0, 1]), 2, 10, 0).is_err());
        assert!(stabilization_scan(&combo(&[-1, 0, 1]), 1, 4, 10, 0).is_err());
        assert!(
            hyperplane_cut_check(&combo(&[0, -1, 0, 1]), 4, &AxisBox::cube(4, int(-4), int(4)).unwrap(), 4).is_err()
        );
    }

    #[test]
    fn scans() {
        let s = stabilization_scan(&combo(&[-1, 0, 1]), 3, 8, 100, DEFAULT_SEED).unwrap();
        assert!(s.rows.iter().all(|r| r.count == 2));
        assert_eq!((s.threshold, s.stabilized), (3, Some(2)));
        assert!(s.tail_is_constant());
        assert!(s.to_csv().starts_with("n,count,certified\n3,2,sample-certified\n"));
        let s = stabilization_scan(&combo(&[-5, 1]), 2, 6, 50, DEFAULT_SEED).unwrap();
        assert!(s.rows.iter().all(|r| r.count == 1));
    }

    #[test]
    fn orbit_checks() {
        let p = combo(&[-1, 0, 1]).materialize(4).unwrap();
        assert!(orbit_stability_check(&p, &AxisBox::cube(4, int(-3), int(3)).unwrap(), 8).unwrap());
        let q = combo(&[-1, 0, 1]).materialize(3).unwrap();
        assert!(orbit_stability_check(&q, &AxisBox::cube(3, int(-3), int(3)).unwrap(), 16).unwrap());
        let asym = crate::polycore::MultiAffine::variable(2, 0).unwrap();
        assert!(orbit_stability_check(&asym, &AxisBox::cube(2, int(-1), int(1)).unwrap(), 4).is_err());
        let lopsided = AxisBox::new(vec![(int(-1), int(1)), (int(-2), int(1))]).unwrap();
        assert!(orbit_stability_check(&elementary(2, 2).unwrap(), &lopsided, 4).is_err());
    }

    #[test]
    fn cut_checks() {
        let bx = AxisBox::cube(4, int(-4), int(4)).unwrap();
        assert!(hyperplane_cut_check(&combo(&[-1, 0, 1]), 4, &bx, 8).unwrap());
        let bx = AxisBox::cube(2, int(-4), int(4)).unwrap();
        assert!(hyperplane_cut_check(&combo(&[-1, 1]), 2, &bx, 8).unwrap());
    }

    #[test]
    fn aux_inequality() {
        let q = |v: &[i64]| v.iter().map(|&a| int(a)).collect::<Vec<_>>();
        assert_eq!(aux_inequality_margin(&q(&[1, -1, 0])), Rational::new(8.into(), 6.into()));
        assert!(aux_inequality_margin(&q(&[3, -1, -1, -1])).is_zero());
        assert!(aux_inequality_margin(&q(&[0, 0, 0])).is_zero());
        for n in 3..=6 {
            assert!(aux_inequality_check(n, 500, DEFAULT_SEED).unwrap());
        }
        assert!(aux_inequality_check(2, 10, 0).is_err());
    }
}
