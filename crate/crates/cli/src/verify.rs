//! Built-in consistency suites over fixed parameter ranges.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde_json::{json, Value};
use symcc::polycore::AxisBox;
use symcc::repr::{
    conjugacy_classes, mn_character, partitions_of, specht_dim, two_row_closed_form, two_row_max_dim,
    young_module_multiplicities, Partition,
};
use symcc::scalar::{binomial, factorial};
use symcc::symfun::{sos_identity_check, verify_newton_identity, SigmaCombination};
use symcc::topo::{aux_inequality_check, boolean_slice_points, orbit_stability_check, DEFAULT_SEED};
use symcc::Rational;

use crate::args::Suite;
use crate::error::CliError;
use crate::output::Outcome;

struct SuiteResult {
    name: &'static str,
    checks: usize,
    failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        Self { name, checks: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn to_json(&self) -> Value {
        json!({"suite": self.name, "checks": self.checks, "failures": self.failures, "passed": self.failures.is_empty()})
    }
}

fn newton() -> Result<SuiteResult, CliError> {
    let mut s = SuiteResult::new("newton");
    for l in 1..=4 {
        for n in 1..=6 {
            s.check(verify_newton_identity(l, n)?, || format!("Newton identity l={l} n={n}"));
        }
    }
    Ok(s)
}

fn example3() -> Result<SuiteResult, CliError> {
    let mut s = SuiteResult::new("example3");
    for k in 0..=3u64 {
        for n in 1..=5 {
            s.check(sos_identity_check(k, n)?, || format!("sum-of-squares identity k={k} n={n}"));
        }
    }
    for (k, n) in [(1, 4), (2, 5), (3, 6)] {
        let found = boolean_slice_points(k, n).map(|p| p.len());
        let expected = binomial(n as u64, k as u64).to_usize();
        s.check(found.as_ref().ok().copied() == expected, || format!("slice ({k},{n}): {found:?}"));
    }
    Ok(s)
}

/// `(n - j, j)`, dropping a zero part.
fn two_row(n: usize, j: usize) -> Partition {
    Partition::new([n - j, j].into_iter().filter(|&p| p > 0).collect()).expect("weakly decreasing for 2j <= n")
}

fn hooks() -> Result<SuiteResult, CliError> {
    let mut s = SuiteResult::new("hooks");
    for n in 1..=8usize {
        let sum: BigInt = partitions_of(n).iter().map(|l| specht_dim(l).pow(2)).sum();
        s.check(sum == factorial(n as u64), || format!("sum of squared dimensions for n={n}"));
        s.check(specht_dim(&Partition::row(n)).is_one(), || format!("dim ({n})"));
        s.check(specht_dim(&Partition::column(n)).is_one(), || format!("dim (1^{n})"));
        if n >= 2 {
            let hook = Partition::new(vec![n - 1, 1])?;
            s.check(specht_dim(&hook) == BigInt::from(n - 1), || format!("dim ({},1)", n - 1));
        }
    }
    s.check(specht_dim(&Partition::new(vec![3, 3])?) == BigInt::from(5), || "dim (3,3)".into());
    for n in 2..=20 {
        let dim = two_row_max_dim(n)?;
        s.check(Rational::from_integer(dim) == two_row_closed_form(n)?, || format!("two-row closed form n={n}"));
    }
    for n in 10..=30 {
        let dim = two_row_max_dim(n)?.to_f64().unwrap_or(f64::INFINITY);
        s.check(dim > 1.2f64.powi(n as i32), || format!("two-row dimension growth n={n}"));
    }
    for n in 1..=10 {
        for k in 0..=(n / 2).min(4) {
            let table = young_module_multiplicities(n, k)?;
            let expected = (0..=k).all(|j| table.get(&two_row(n, j)) == 1);
            s.check(expected && table.len() == k + 1, || format!("Young module n={n} k={k}"));
            s.check(table.total_dim() == binomial(n as u64, k as u64), || format!("Young dimension n={n} k={k}"));
        }
    }
    for n in 1..=7 {
        let classes = conjugacy_classes(n);
        let parts = partitions_of(n);
        let order = factorial(n as u64);
        for a in &parts {
            for b in &parts {
                let inner: BigInt = classes
                    .iter()
                    .map(|c| {
                        c.size.clone()
                            * mn_character(a, &c.cycle_type).expect("same size")
                            * mn_character(b, &c.cycle_type).expect("same size")
                    })
                    .sum();
                let expected = if a == b { order.clone() } else { BigInt::from(0) };
                s.check(inner == expected, || format!("orthogonality {a} {b}"));
            }
        }
    }
    Ok(s)
}

fn aux_ineq() -> Result<SuiteResult, CliError> {
    let mut s = SuiteResult::new("aux-ineq");
    for n in 3..=8 {
        s.check(aux_inequality_check(n, 10_000, DEFAULT_SEED)?, || format!("power-sum inequality n={n}"));
    }
    Ok(s)
}

fn orbit() -> Result<SuiteResult, CliError> {
    let mut s = SuiteResult::new("orbit");
    for (coeffs, n, res) in
        [(&[-1, 0, 1][..], 4, 8), (&[-1, 0, 1][..], 5, 8), (&[0, -1, 0, 1][..], 6, 8), (&[0, -1, 0, 1][..], 7, 8)]
    {
        let f = SigmaCombination::from_ints(coeffs);
        let p = f.materialize(n)?;
        let bx = AxisBox::cube(n, Rational::from_integer((-3).into()), Rational::from_integer(3.into()))?;
        s.check(orbit_stability_check(&p, &bx, res)?, || format!("orbit stability f={f} n={n}"));
    }
    Ok(s)
}

pub fn run(suite: Suite) -> Result<Outcome, CliError> {
    let selected: Vec<fn() -> Result<SuiteResult, CliError>> = match suite {
        Suite::Newton => vec![newton],
        Suite::Example3 => vec![example3],
        Suite::Hooks => vec![hooks],
        Suite::AuxIneq => vec![aux_ineq],
        Suite::Orbit => vec![orbit],
        Suite::All => vec![newton, example3, hooks, aux_ineq, orbit],
    };
    let results = selected.into_iter().map(|f| f()).collect::<Result<Vec<_>, _>>()?;
    let passed = results.iter().all(|r| r.failures.is_empty());
    let mut pretty = String::new();
    for r in &results {
        let status = if r.failures.is_empty() { "PASS" } else { "FAIL" };
        pretty.push_str(&format!("{status} {:<9} {} checks\n", r.name, r.checks));
        for f in &r.failures {
            pretty.push_str(&format!("     {f}\n"));
        }
    }
    let csv = results.iter().fold(String::from("suite,checks,passed\n"), |mut acc, r| {
        acc.push_str(&format!("{},{},{}\n", r.name, r.checks, r.failures.is_empty()));
        acc
    });
    let result = json!({"passed": passed, "suites": results.iter().map(SuiteResult::to_json).collect::<Vec<_>>()});
    let name = format!("{suite:?}").to_lowercase();
    Ok(Outcome::new(json!({"suite": name}), result, pretty).csv(csv))
}
