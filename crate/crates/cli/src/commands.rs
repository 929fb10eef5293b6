use std::path::Path;

use num_bigint::BigInt;
use serde_json::{json, Value};
use symcc::polycore::json::{parse_poly, PolyInput};
use symcc::polycore::AxisBox;
use symcc::repr::{specht_dim, two_row_closed_form, two_row_max_dim, young_module_multiplicities, Partition};
use symcc::scalar::parse_rational;
use symcc::symfun::{example3_family, sharpness, sphere, Family, SigmaCombination};
use symcc::topo::{
    big_to_json, boolean_slice_points, bounds, complement_components, grid_components, grid_components_general,
    grid_components_system, stabilization_scan, symmetric_b0, ComponentReport, GridOptions, DEFAULT_CELL_BUDGET,
    DEFAULT_SEED, SLICE_MAX_VARS,
};
use symcc::{rational_to_string, MultiAffinePoly, RationalBox, SparsePoly};

use crate::args::{GridArgs, SpechtArgs, StabilityArgs, SymmetricArgs, SystemArgs};
use crate::error::CliError;
use crate::output::Outcome;

/// Overrides the default cell budget.
pub const CELL_BUDGET_ENV: &str = "SYMCC_CELL_BUDGET";

enum Poly {
    MultiAffine(MultiAffinePoly),
    General(SparsePoly),
}

fn load_poly(spec: &str, n: Option<usize>) -> Result<Poly, CliError> {
    let from_json = |text: &str| -> Result<Poly, CliError> {
        Ok(match parse_poly(text)? {
            PolyInput::MultiAffine(p) => Poly::MultiAffine(p),
            PolyInput::Sparse(p) => match p.to_multi_affine() {
                Some(m) => Poly::MultiAffine(m),
                None => Poly::General(p),
            },
        })
    };
    let trimmed = spec.trim_start();
    if trimmed.starts_with('{') {
        return from_json(trimmed);
    }
    if Path::new(spec).is_file() {
        return from_json(&std::fs::read_to_string(spec)?);
    }
    match spec.parse::<Family>()? {
        Family::Sharpness(d) => Ok(Poly::MultiAffine(sharpness(d)?)),
        Family::Sigma(f) => {
            let n = n.ok_or_else(|| CliError::Usage("sigma families need --n".into()))?;
            Ok(Poly::MultiAffine(f.materialize(n)?))
        }
        Family::Sphere(n) => Ok(Poly::General(sphere(n))),
        Family::Example3(_) => Err(CliError::Usage("example3 is a system; use the `system` subcommand".into())),
    }
}

fn parse_rational_arg(s: &str) -> Result<symcc::Rational, CliError> {
    parse_rational(s.trim()).ok_or_else(|| CliError::Usage(format!("not a rational number: {s:?}")))
}

/// `"lo,hi"` for every axis or `"lo1,hi1;lo2,hi2;..."` per axis.
fn parse_box(spec: &str, n: usize) -> Result<RationalBox, CliError> {
    let axes = spec
        .split(';')
        .map(|axis| {
            let (lo, hi) = axis.split_once(',').ok_or_else(|| CliError::Usage(format!("bad box axis {axis:?}")))?;
            Ok((parse_rational_arg(lo)?, parse_rational_arg(hi)?))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let axes = match axes.len() {
        1 => vec![axes[0].clone(); n],
        len if len == n => axes,
        len => return Err(CliError::Usage(format!("box has {len} axes but the polynomial has {n} variables"))),
    };
    Ok(AxisBox::new(axes)?)
}

fn grid_options(res: usize, no_refine: bool) -> Result<GridOptions, CliError> {
    let budget = match std::env::var(CELL_BUDGET_ENV) {
        Ok(v) => v.parse().map_err(|_| CliError::Usage(format!("{CELL_BUDGET_ENV} must be a positive integer")))?,
        Err(_) => DEFAULT_CELL_BUDGET,
    };
    let base = if no_refine { GridOptions::fixed(res) } else { GridOptions::refining(res) };
    Ok(base.with_budget(budget))
}

fn trail_csv(report: &ComponentReport) -> String {
    let mut out = String::from("resolution,count\n");
    for (r, c) in &report.trail {
        out.push_str(&format!("{r},{c}\n"));
    }
    out
}

fn report_pretty(report: &ComponentReport, bound_line: Option<String>) -> String {
    let mut out = format!("b0 = {} ({})", report.count, report.certified.as_str());
    if let Some(line) = bound_line {
        out.push_str(&format!("    {line}"));
    }
    out.push('\n');
    if !report.trail.is_empty() {
        let steps: Vec<String> = report.trail.iter().map(|(r, c)| format!("{r}:{c}")).collect();
        out.push_str(&format!("trail (res:count) {}\n", steps.join(" ")));
    }
    out
}

fn grid_params(args: &GridArgs) -> Value {
    json!({"poly": args.poly, "box": args.bx, "res": args.res, "n": args.n, "refine": !args.no_refine})
}

pub fn components(args: &GridArgs) -> Result<Outcome, CliError> {
    let opts = grid_options(args.res, args.no_refine)?;
    let (report, line) = match load_poly(&args.poly, args.n)? {
        Poly::MultiAffine(p) => {
            let bx = parse_box(&args.bx, p.n_vars())?;
            let r = grid_components(&p, &bx, opts)?;
            let line = r.bounds.as_ref().map(|b| format!("b0 <= 2^(d-1) = {}", b.ccez));
            (r, line)
        }
        Poly::General(p) => {
            let bx = parse_box(&args.bx, p.n_vars())?;
            let r = grid_components_general(&p, &bx, opts)?;
            let line = r.bounds.as_ref().map(|b| format!("b0 <= d(2d-1)^(n-1) = {}", b.optm));
            (r, line)
        }
    };
    let pretty = report_pretty(&report, line);
    Ok(Outcome::new(grid_params(args), report.to_json(), pretty).csv(trail_csv(&report)))
}

pub fn complement(args: &GridArgs) -> Result<Outcome, CliError> {
    let opts = grid_options(args.res, args.no_refine)?;
    let Poly::MultiAffine(p) = load_poly(&args.poly, args.n)? else {
        return Err(CliError::Usage("complement needs a multi-affine polynomial".into()));
    };
    let bx = parse_box(&args.bx, p.n_vars())?;
    let report = complement_components(&p, &bx, opts)?;
    let line = report.bounds.as_ref().map(|b| format!("b0 <= 2^d = {}", b.ccdz));
    let pretty = report_pretty(&report, line);
    Ok(Outcome::new(grid_params(args), report.to_json(), pretty).csv(trail_csv(&report)))
}

pub fn system(args: &SystemArgs) -> Result<Outcome, CliError> {
    let Family::Example3(k) = args.family.parse::<Family>()? else {
        return Err(CliError::Usage("system supports example3:k".into()));
    };
    let polys = example3_family(k, args.n)?;
    let bx = parse_box(&args.bx, args.n)?;
    let report = grid_components_system(&polys, &bx, grid_options(args.res, args.no_refine)?)?;
    let mut result = report.to_json();
    let mut pretty = report_pretty(&report, None);
    if args.n <= SLICE_MAX_VARS {
        let points = boolean_slice_points(k as usize, args.n)?;
        result["boolean_points"] = json!(points.len());
        pretty.push_str(&format!("0/1 common zeros: {}\n", points.len()));
    }
    let params =
        json!({"family": args.family, "n": args.n, "box": args.bx, "res": args.res, "refine": !args.no_refine});
    Ok(Outcome::new(params, result, pretty).csv(trail_csv(&report)))
}

pub fn symmetric(args: &SymmetricArgs) -> Result<Outcome, CliError> {
    let f: SigmaCombination = args.coeffs.parse()?;
    let seed = args.seed.unwrap_or(DEFAULT_SEED);
    let report = symmetric_b0(&f, args.n, args.samples, seed)?;
    let stats = report.samples.as_ref().expect("sampled report");
    let pretty = format!(
        "b0 = {} ({})    {} samples, {} degenerate, seed {}\n",
        report.count,
        report.certified.as_str(),
        stats.drawn,
        stats.degenerate,
        seed
    );
    let params = json!({"coeffs": f.to_string(), "n": args.n, "samples": args.samples});
    Ok(Outcome::new(params, report.to_json(), pretty).seed(seed))
}

pub fn stability(args: &StabilityArgs) -> Result<Outcome, CliError> {
    let f: SigmaCombination = args.coeffs.parse()?;
    let d = f.effective_degree().unwrap_or(0);
    let n_min = args.n_min.unwrap_or(d.max(2));
    let seed = args.seed.unwrap_or(DEFAULT_SEED);
    let scan = stabilization_scan(&f, n_min, args.n_max, args.samples, seed)?;
    let mut pretty = String::new();
    for row in &scan.rows {
        pretty.push_str(&format!("n = {:>3}  b0 = {} ({})\n", row.n, row.count, row.certified.as_str()));
    }
    match scan.stabilized {
        Some(v) => pretty.push_str(&format!("stabilized value {v} (non-increasing from n = {})\n", scan.threshold)),
        None => pretty.push_str(&format!("scan ends before n = {}\n", scan.threshold)),
    }
    let params = json!({"coeffs": f.to_string(), "n_min": n_min, "n_max": args.n_max, "samples": args.samples});
    Ok(Outcome::new(params, scan.to_json(), pretty).seed(seed).csv(scan.to_csv()))
}

pub fn bounds_cmd(d: usize, n: usize) -> Result<Outcome, CliError> {
    let b = bounds(d, n)?;
    let pretty = format!(
        "b0 of a multi-affine hypersurface <= 2^(d-1) = {}\nb0 of its complement <= 2^d = {}\nb0 of a degree-d hypersurface <= d(2d-1)^(n-1) = {}\n",
        b.ccez, b.ccdz, b.optm
    );
    let csv = format!("ccez,ccdz,optm\n{},{},{}\n", b.ccez, b.ccdz, b.optm);
    Ok(Outcome::new(json!({"d": d, "n": n}), b.to_json(), pretty).csv(csv))
}

fn parse_partition(s: &str) -> Result<Partition, CliError> {
    let parts = s
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| p.trim().parse::<usize>().map_err(|_| CliError::Usage(format!("bad part {p:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Partition::new(parts)?)
}

pub fn specht(args: &SpechtArgs) -> Result<Outcome, CliError> {
    if let Some(spec) = &args.partition {
        let lambda = parse_partition(spec)?;
        let dim = specht_dim(&lambda);
        let pretty = format!("dim S^{lambda} = {dim}\n");
        let result = json!({"partition": lambda, "dim": big_to_json(&dim)});
        return Ok(Outcome::new(json!({"partition": spec}), result, pretty));
    }
    let n = args.two_row_max.expect("clap enforces one of the two flags");
    let dim = two_row_max_dim(n)?;
    let closed = two_row_closed_form(n)?;
    let lambda = Partition::new(vec![n - n / 2, n / 2])?;
    let pretty = format!("dim S^{lambda} = {dim}\n");
    let result = json!({
        "n": n,
        "partition": lambda,
        "dim": big_to_json(&dim),
        "closed_form": rational_to_string(&closed),
    });
    Ok(Outcome::new(json!({"two_row_max": n}), result, pretty))
}

pub fn young(n: usize, k: usize) -> Result<Outcome, CliError> {
    let table = young_module_multiplicities(n, k)?;
    let mut pretty = String::new();
    let mut csv = String::from("partition,mult,dim\n");
    for (lambda, m) in table.entries() {
        let dim = specht_dim(lambda);
        pretty.push_str(&format!("{m} x S^{lambda}    (dim {dim})\n"));
        csv.push_str(&format!("\"{lambda}\",{m},{dim}\n"));
    }
    let total: BigInt = table.total_dim();
    pretty.push_str(&format!("total dimension {total}\n"));
    Ok(Outcome::new(json!({"n": n, "k": k}), table.to_json(), pretty).csv(csv))
}
