//! Executable property suites for the supporting lemmas, plus the grid
//! sweep driver that runs them (and the divisibility and bound oracles)
//! over whole parameter grids.
//!
//! Grid points are independent work units and may run on several worker
//! threads; aggregation is by enumeration index, so two sweeps over the
//! same grid produce identical reports no matter how many workers ran
//! them.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::bounds::{bound_constants, bound_holds, BoundCertificate, BoundKind};
use crate::error::{Error, Result};
use crate::lcm::{prefix_stream, theorem1_check};
use crate::progression::Progression;
use crate::verdict::Verdict;

/// The selectable check suites of a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Identities,
    Unimodality,
    Monotonicity,
    StepRatio,
    Chain,
    EllBounds,
    Theorem1,
    Bounds,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Identities,
        Suite::Unimodality,
        Suite::Monotonicity,
        Suite::StepRatio,
        Suite::Chain,
        Suite::EllBounds,
        Suite::Theorem1,
        Suite::Bounds,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Unimodality => "unimodality",
            Suite::Monotonicity => "monotonicity",
            Suite::StepRatio => "step-ratio",
            Suite::Chain => "chain",
            Suite::EllBounds => "ell-bounds",
            Suite::Theorem1 => "theorem1",
            Suite::Bounds => "bounds",
        }
    }

    pub fn parse(name: &str) -> Option<Suite> {
        Suite::ALL.iter().copied().find(|s| s.name() == name)
    }

    /// The lemma suites built on the threshold function need q >= 2.
    fn needs_q_at_least_two(self) -> bool {
        matches!(
            self,
            Suite::Unimodality
                | Suite::Monotonicity
                | Suite::StepRatio
                | Suite::Chain
                | Suite::EllBounds
        )
    }
}

impl std::fmt::Display for Suite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Verifies two identities by brute force:
/// the pairwise gap `|u_i - u_j| = r q^{min(i,j)} [|i-j|]_q` for all
/// 0 <= i, j <= i_max, and the index-sum bound
/// `sum of min(i, j) over k <= i <= n, i != j  <=  (n-k)(n+k-1)/2`
/// for all 1 <= k <= j <= n <= i_max.
pub fn check_identities(p: &Progression, i_max: u32) -> Verdict {
    for i in 0..=i_max {
        for j in 0..=i_max {
            let direct = (p.term(i) - p.term(j)).abs();
            if p.gap(i, j) != direct {
                return Verdict::fail(format!(
                    "gap identity broken at q = {}, r = {}, u0 = {}, i = {i}, j = {j}",
                    p.q(),
                    p.r(),
                    p.u0()
                ));
            }
        }
    }
    for n in 1..=i_max as i64 {
        for k in 1..=n {
            for j in k..=n {
                let mut sum = 0i64;
                for i in k..=n {
                    if i != j {
                        sum += i.min(j);
                    }
                }
                if 2 * sum > (n - k) * (n + k - 1) {
                    return Verdict::fail(format!(
                        "index-sum bound broken at n = {n}, k = {k}, j = {j}: sum = {sum}"
                    ));
                }
            }
        }
    }
    Verdict::Pass
}

/// Brute-forces `C_{n,k}` for k = 1..n and asserts the unimodal shape:
/// non-decreasing while k <= k_n, strictly decreasing after, maximum at
/// `ell_n`, and `ell_n` is the largest maximizer.
///
/// Only k >= 1 is materialized (negative-index terms have no value in
/// this crate), so the k <= 0 part of the unimodal claim stays unchecked.
pub fn check_unimodality(p: &Progression, n: u32) -> Result<Verdict> {
    let k_n = p.k_index(n)?;
    let ell = p.l_index(n)?;
    let values = cnk_row(p, n);
    let maximum = values.iter().max().expect("n >= 1 gives a nonempty row");
    if &values[ell as usize - 1] != maximum {
        return Ok(fail_at(p, format!("C_{{{n},k}} maximum not at ell = {ell}")));
    }
    let largest_argmax = values
        .iter()
        .rposition(|v| v == maximum)
        .expect("row nonempty") as u32
        + 1;
    if largest_argmax != ell {
        return Ok(fail_at(
            p,
            format!("largest maximizer of C_{{{n},k}} is {largest_argmax}, ell = {ell}"),
        ));
    }
    for k in 2..=n {
        let ascending = (k as i64) <= k_n;
        let previous = &values[k as usize - 2];
        let current = &values[k as usize - 1];
        if ascending && current < previous {
            return Ok(fail_at(p, format!("C_{{{n},{k}}} dropped on the ascending side")));
        }
        if !ascending && current >= previous {
            return Ok(fail_at(
                p,
                format!("C_{{{n},{k}}} failed to decrease strictly past k_n = {k_n}"),
            ));
        }
    }
    Ok(Verdict::Pass)
}

/// `C_{n,k}` for k = 1..=n, each built directly from its definition with
/// incrementally extended numerator product and denominator factorial.
fn cnk_row(p: &Progression, n: u32) -> Vec<BigRational> {
    let mut row = vec![BigRational::one(); n as usize];
    let mut product = BigInt::one();
    let mut factorial = BigInt::one();
    let mut qint = BigInt::zero();
    for k in (1..=n).rev() {
        product *= p.term(k);
        row[k as usize - 1] = BigRational::new(product.clone(), factorial.clone());
        qint = qint * p.q() + 1;
        factorial *= &qint;
    }
    row
}

/// Checks `k_{n+1} in {k_n, k_n + 1}` and `ell_{n+1} in {ell_n, ell_n + 1}`
/// for 1 <= n < n_max, plus the rider: a jump of ell forces
/// `ell_n = k_n` and `ell_{n+1} = k_{n+1} = k_n + 1`.
pub fn check_index_monotonicity(p: &Progression, n_max: u32) -> Result<Verdict> {
    if n_max < 1 {
        return Ok(Verdict::Pass);
    }
    let mut k_prev = p.k_index(1)?;
    for n in 1..n_max {
        let k_next = p.k_index(n + 1)?;
        if k_next != k_prev && k_next != k_prev + 1 {
            return Ok(fail_at(
                p,
                format!("k_{} = {k_next} is not in {{k_{n}, k_{n} + 1}} = {{{k_prev}, {}}}", n + 1, k_prev + 1),
            ));
        }
        let ell_prev = k_prev.max(1);
        let ell_next = k_next.max(1);
        if ell_next != ell_prev && ell_next != ell_prev + 1 {
            return Ok(fail_at(
                p,
                format!("ell_{} = {ell_next} is not in {{ell_{n}, ell_{n} + 1}}", n + 1),
            ));
        }
        if ell_next == ell_prev + 1
            && !(ell_prev == k_prev && ell_next == k_next && k_next == k_prev + 1)
        {
            return Ok(fail_at(
                p,
                format!("ell jump at n = {n} without k_n = ell_n and k_{{n+1}} = k_n + 1"),
            ));
        }
        k_prev = k_next;
    }
    Ok(Verdict::Pass)
}

/// Checks the per-step growth `C_{n+1, ell_{n+1}} >= (r+1) q^{ell_n - 1} C_{n, ell_n}`
/// by exact rational comparison for 1 <= n < n_max.
pub fn check_step_ratio(p: &Progression, n_max: u32) -> Result<Verdict> {
    if n_max < 1 {
        return Ok(Verdict::Pass);
    }
    let mut ell_prev = p.l_index(1)?;
    let mut c_prev = p.cnk(1, ell_prev)?.into_value();
    for n in 1..n_max {
        let ell_next = p.l_index(n + 1)?;
        let c_next = p.cnk(n + 1, ell_next)?.into_value();
        let factor = BigRational::from_integer(
            BigInt::from(p.r() + 1) * p.base().pow(ell_prev - 1),
        );
        if c_next < factor * &c_prev {
            return Ok(fail_at(
                p,
                format!("step ratio broken from n = {n} to {}", n + 1),
            ));
        }
        ell_prev = ell_next;
        c_prev = c_next;
    }
    Ok(Verdict::Pass)
}

/// Checks, for each n <= n_max with S = sum of (ell_i - 1) for i < n, that
/// `C_{n, ell_n} >= u_1 (r+1)^{n-1} q^S` and that the prefix lcm dominates
/// the same right-hand side.
pub fn check_chain_bound(p: &Progression, n_max: u32) -> Result<Verdict> {
    let u1 = p.term(1);
    let mut exponent_sum = 0u32;
    let mut stream = prefix_stream(*p);
    for n in 1..=n_max {
        let step = stream.next().expect("stream is infinite");
        let rhs = &u1 * BigInt::from(p.r() + 1).pow(n - 1) * p.base().pow(exponent_sum);
        let ell = p.l_index(n)?;
        let c_ell = p.cnk(n, ell)?;
        if c_ell.value() < &BigRational::from_integer(rhs.clone()) {
            return Ok(fail_at(p, format!("C_{{{n},ell}} fell below the chain bound")));
        }
        if step.lcm < rhs {
            return Ok(fail_at(p, format!("lcm{{u_1..u_{n}}} fell below the chain bound")));
        }
        exponent_sum += ell - 1;
    }
    Ok(Verdict::Pass)
}

/// Checks the log-free forms of the two index lower bounds:
/// `r (A+1)^2 > q^{n - 2 ell_n}` and `4B > q^{n - 2 ell_n}` for each
/// n <= n_max, with negative exponents as exact rationals.
pub fn check_ell_lower_bounds(p: &Progression, n_max: u32) -> Result<Verdict> {
    let constants = bound_constants(p);
    let a_plus_1 = &constants.a + BigRational::one();
    let lhs_a = BigRational::from_integer(BigInt::from(p.r())) * &a_plus_1 * &a_plus_1;
    let lhs_b = BigRational::from_integer(BigInt::from(4)) * &constants.b;
    for n in 1..=n_max {
        let ell = p.l_index(n)? as i64;
        let exponent = n as i64 - 2 * ell;
        let power = if exponent >= 0 {
            BigRational::from_integer(p.base().pow(exponent as u32))
        } else {
            BigRational::new(BigInt::one(), p.base().pow((-exponent) as u32))
        };
        if lhs_a <= power {
            return Ok(fail_at(p, format!("r (A+1)^2 <= q^(n - 2 ell_n) at n = {n}")));
        }
        if lhs_b <= power {
            return Ok(fail_at(p, format!("4B <= q^(n - 2 ell_n) at n = {n}")));
        }
    }
    Ok(Verdict::Pass)
}

fn fail_at(p: &Progression, what: String) -> Verdict {
    Verdict::fail(format!(
        "{what} (q = {}, r = {}, u0 = {})",
        p.q(),
        p.r(),
        p.u0()
    ))
}

/// Inclusive parameter grid for a sweep. Only triples that pass the
/// progression validation are enumerated; the rest are counted as skipped.
#[derive(Debug, Clone, Serialize)]
pub struct SweepGrid {
    pub q: (i64, i64),
    pub r: (i64, i64),
    pub u0: (i64, i64),
    pub n_max: u32,
    /// Seed for the optional sub-sampling of grid points.
    pub sample_seed: Option<u64>,
    /// Keep at most this many valid grid points, chosen pseudo-randomly
    /// from the seed; `None` enumerates exhaustively.
    pub sample_limit: Option<usize>,
}

impl SweepGrid {
    pub fn exhaustive(q: (i64, i64), r: (i64, i64), u0: (i64, i64), n_max: u32) -> Self {
        SweepGrid {
            q,
            r,
            u0,
            n_max,
            sample_seed: None,
            sample_limit: None,
        }
    }

    fn validate(&self) -> Result<()> {
        for (name, (low, high), min) in [
            ("q", self.q, 1),
            ("r", self.r, 1),
            ("u0", self.u0, 0),
        ] {
            if low < min {
                return Err(Error::Domain {
                    name,
                    min,
                    value: low,
                });
            }
            if high < low {
                return Err(Error::Domain {
                    name,
                    min: low,
                    value: high,
                });
            }
        }
        if self.n_max < 1 {
            return Err(Error::Domain {
                name: "n_max",
                min: 1,
                value: self.n_max as i64,
            });
        }
        Ok(())
    }
}

/// One row of a sweep: a progression at one index n. `k_n` and `ell_n`
/// are absent for q = 1, where the threshold machinery does not apply;
/// `slack_log2` is the smallest slack among the verdicts in the row.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRecord {
    pub q: i64,
    pub r: i64,
    pub u0: i64,
    pub n: u32,
    pub lcm_bits: u64,
    pub k_n: Option<i64>,
    pub ell_n: Option<u32>,
    #[serde(serialize_with = "serialize_verdicts")]
    pub verdicts: Vec<(BoundKind, bool)>,
    pub slack_log2: Option<f64>,
}

fn serialize_verdicts<S: Serializer>(
    verdicts: &[(BoundKind, bool)],
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut map = serializer.serialize_map(Some(verdicts.len()))?;
    for (kind, holds) in verdicts {
        map.serialize_entry(kind.name(), holds)?;
    }
    map.end()
}

impl SweepRecord {
    pub const CSV_HEADER: &'static str = "q,r,u0,n,lcm_bits,k_n,ell_n,verdicts,slack_log2";

    pub fn to_csv_row(&self) -> String {
        let verdicts = self
            .verdicts
            .iter()
            .map(|(kind, holds)| format!("{}={}", kind.name(), holds))
            .collect::<Vec<_>>()
            .join(";");
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.q,
            self.r,
            self.u0,
            self.n,
            self.lcm_bits,
            self.k_n.map(|v| v.to_string()).unwrap_or_default(),
            self.ell_n.map(|v| v.to_string()).unwrap_or_default(),
            verdicts,
            self.slack_log2.map(|v| v.to_string()).unwrap_or_default()
        )
    }
}

/// A reproducible failure: the parameters plus the failing check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub suite: &'static str,
    pub q: i64,
    pub r: i64,
    pub u0: i64,
    pub detail: String,
}

/// Totals for one suite across the whole sweep.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteTotals {
    pub suite: &'static str,
    pub progressions: usize,
    pub checks: u64,
    pub failures: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepSummary {
    pub grid: SweepGrid,
    pub suites: Vec<&'static str>,
    pub progressions_checked: usize,
    pub skipped_gcd: usize,
    pub checks: u64,
    pub failures: usize,
    pub all_pass: bool,
    pub stopped_early: bool,
    pub suite_totals: Vec<SuiteTotals>,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub summary: SweepSummary,
    pub records: Vec<SweepRecord>,
}

/// Execution knobs that do not influence the report contents.
#[derive(Debug, Clone, Copy)]
pub struct SweepOptions {
    pub jobs: usize,
    pub fail_fast: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            jobs: 1,
            fail_fast: false,
        }
    }
}

struct UnitOutcome {
    records: Vec<SweepRecord>,
    suite_stats: Vec<(Suite, u64, usize)>,
    counterexamples: Vec<Counterexample>,
}

/// Enumerates every valid progression of the grid, runs the selected
/// suites and collects per-n records. Results are aggregated in
/// enumeration order, so the report does not depend on `opts.jobs`.
pub fn run_sweep(grid: &SweepGrid, suites: &[Suite], opts: SweepOptions) -> Result<SweepReport> {
    grid.validate()?;
    if opts.jobs < 1 {
        return Err(Error::Domain {
            name: "jobs",
            min: 1,
            value: opts.jobs as i64,
        });
    }
    let mut selected: Vec<Suite> = Vec::new();
    for suite in Suite::ALL {
        if suites.contains(&suite) && !selected.contains(&suite) {
            selected.push(suite);
        }
    }

    let mut units: Vec<Progression> = Vec::new();
    let mut skipped = 0usize;
    for q in grid.q.0..=grid.q.1 {
        for r in grid.r.0..=grid.r.1 {
            for u0 in grid.u0.0..=grid.u0.1 {
                match Progression::new(q, r, u0) {
                    Ok(p) => units.push(p),
                    Err(_) => skipped += 1,
                }
            }
        }
    }
    if let Some(limit) = grid.sample_limit {
        units = sample_units(units, limit, grid.sample_seed.unwrap_or(0));
    }

    let outcomes = execute_units(&units, &selected, grid.n_max, opts);

    let mut records = Vec::new();
    let mut counterexamples = Vec::new();
    let mut checks = 0u64;
    let mut totals: Vec<SuiteTotals> = selected
        .iter()
        .map(|s| SuiteTotals {
            suite: s.name(),
            progressions: 0,
            checks: 0,
            failures: 0,
        })
        .collect();
    let mut completed = 0usize;
    let mut stopped_early = false;
    for outcome in outcomes {
        let Some(outcome) = outcome else {
            stopped_early = true;
            continue;
        };
        completed += 1;
        for (i, (suite, unit_checks, unit_failures)) in outcome.suite_stats.iter().enumerate() {
            debug_assert_eq!(totals[i].suite, suite.name());
            if *unit_checks > 0 {
                totals[i].progressions += 1;
            }
            totals[i].checks += unit_checks;
            totals[i].failures += unit_failures;
            checks += unit_checks;
        }
        counterexamples.extend(outcome.counterexamples);
        records.extend(outcome.records);
    }
    let failures = counterexamples.len();
    let summary = SweepSummary {
        grid: grid.clone(),
        suites: selected.iter().map(|s| s.name()).collect(),
        progressions_checked: completed,
        skipped_gcd: skipped,
        checks,
        failures,
        all_pass: failures == 0,
        stopped_early,
        suite_totals: totals,
        counterexamples,
    };
    Ok(SweepReport { summary, records })
}

fn execute_units(
    units: &[Progression],
    suites: &[Suite],
    n_max: u32,
    opts: SweepOptions,
) -> Vec<Option<UnitOutcome>> {
    let slots: Mutex<Vec<Option<UnitOutcome>>> =
        Mutex::new((0..units.len()).map(|_| None).collect());
    let next = AtomicUsize::new(0);
    let stop = AtomicBool::new(false);
    let workers = opts.jobs.min(units.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                if opts.fail_fast && stop.load(Ordering::Relaxed) {
                    break;
                }
                let index = next.fetch_add(1, Ordering::Relaxed);
                if index >= units.len() {
                    break;
                }
                let outcome = run_unit(&units[index], suites, n_max);
                if opts.fail_fast && !outcome.counterexamples.is_empty() {
                    stop.store(true, Ordering::Relaxed);
                }
                slots.lock().expect("no poisoned worker")[index] = Some(outcome);
            });
        }
    });
    slots.into_inner().expect("workers joined")
}

fn run_unit(p: &Progression, suites: &[Suite], n_max: u32) -> UnitOutcome {
    let mut stats: Vec<(Suite, u64, usize)> = suites.iter().map(|s| (*s, 0, 0)).collect();
    let mut counterexamples = Vec::new();
    let threshold_defined = p.q() >= 2;

    let record_verdict = |stats: &mut Vec<(Suite, u64, usize)>,
                              counterexamples: &mut Vec<Counterexample>,
                              suite: Suite,
                              verdict: Verdict| {
        let slot = stats
            .iter_mut()
            .find(|(s, _, _)| *s == suite)
            .expect("suite selected");
        slot.1 += 1;
        if let Verdict::Fail(detail) = verdict {
            slot.2 += 1;
            counterexamples.push(Counterexample {
                suite: suite.name(),
                q: p.q(),
                r: p.r(),
                u0: p.u0(),
                detail,
            });
        }
    };

    for suite in suites {
        if suite.needs_q_at_least_two() && !threshold_defined {
            continue;
        }
        match suite {
            Suite::Identities => {
                let verdict = check_identities(p, n_max);
                record_verdict(&mut stats, &mut counterexamples, *suite, verdict);
            }
            Suite::Unimodality => {
                for n in 1..=n_max {
                    let verdict = check_unimodality(p, n).expect("q >= 2 checked above");
                    record_verdict(&mut stats, &mut counterexamples, *suite, verdict);
                }
            }
            Suite::Monotonicity => {
                let verdict = check_index_monotonicity(p, n_max).expect("q >= 2 checked above");
                record_verdict(&mut stats, &mut counterexamples, *suite, verdict);
            }
            Suite::StepRatio => {
                let verdict = check_step_ratio(p, n_max).expect("q >= 2 checked above");
                record_verdict(&mut stats, &mut counterexamples, *suite, verdict);
            }
            Suite::Chain => {
                let verdict = check_chain_bound(p, n_max).expect("q >= 2 checked above");
                record_verdict(&mut stats, &mut counterexamples, *suite, verdict);
            }
            Suite::EllBounds => {
                let verdict = check_ell_lower_bounds(p, n_max).expect("q >= 2 checked above");
                record_verdict(&mut stats, &mut counterexamples, *suite, verdict);
            }
            Suite::Theorem1 => {
                for n in 1..=n_max {
                    for k in 1..=n {
                        let verdict =
                            theorem1_check(p, k, n).expect("indices are in range");
                        record_verdict(&mut stats, &mut counterexamples, *suite, verdict);
                    }
                }
            }
            Suite::Bounds => {
                for n in 1..=n_max {
                    for cert in row_certificates(p, n) {
                        let verdict = if cert.holds {
                            Verdict::Pass
                        } else {
                            Verdict::fail(format!(
                                "{} bound fails at n = {n}: lhs4 = {}, rhs4 = {}",
                                cert.kind, cert.lhs4, cert.rhs4
                            ))
                        };
                        record_verdict(&mut stats, &mut counterexamples, *suite, verdict);
                    }
                }
            }
        }
    }

    let with_bounds = suites.contains(&Suite::Bounds);
    let mut records = Vec::with_capacity(n_max as usize);
    let mut stream = prefix_stream(*p);
    for n in 1..=n_max {
        let step = stream.next().expect("stream is infinite");
        let (k_n, ell_n) = if threshold_defined {
            let k = p.k_index(n).expect("q >= 2");
            (Some(k), Some(k.max(1) as u32))
        } else {
            (None, None)
        };
        let (verdicts, slack) = if with_bounds {
            let certs = row_certificates(p, n);
            let slack = certs
                .iter()
                .map(|c| c.slack_log2)
                .fold(f64::INFINITY, f64::min);
            (
                certs.iter().map(|c| (c.kind, c.holds)).collect(),
                (!certs.is_empty()).then_some(slack),
            )
        } else {
            (Vec::new(), None)
        };
        records.push(SweepRecord {
            q: p.q(),
            r: p.r(),
            u0: p.u0(),
            n,
            lcm_bits: step.lcm.bits(),
            k_n,
            ell_n,
            verdicts,
            slack_log2: slack,
        });
    }

    UnitOutcome {
        records,
        suite_stats: stats,
        counterexamples,
    }
}

/// The bound certificates that apply to one (progression, n) cell: the
/// two main bounds for q >= 2 (plus the pure q-integer bound when
/// u_n = [n]_q), or the arithmetic progression bound for q = 1.
fn row_certificates(p: &Progression, n: u32) -> Vec<BoundCertificate> {
    let mut certs = Vec::new();
    if p.q() >= 2 {
        certs.push(bound_holds(p, n, BoundKind::Theorem2).expect("q >= 2"));
        certs.push(bound_holds(p, n, BoundKind::Theorem3).expect("q >= 2"));
        if p.r() == 1 && p.u0() == 0 {
            certs.push(bound_holds(p, n, BoundKind::BouslaFarhi).expect("parameters match"));
        }
    } else {
        certs.push(bound_holds(p, n, BoundKind::HongFeng).expect("q = 1"));
    }
    certs
}

/// Deterministic partial selection of `limit` units, keyed by `seed`; the
/// chosen units keep their enumeration order.
fn sample_units(units: Vec<Progression>, limit: usize, seed: u64) -> Vec<Progression> {
    if limit >= units.len() {
        return units;
    }
    let mut state = seed ^ 0x9e37_79b9_7f4a_7c15;
    let mut indices: Vec<usize> = (0..units.len()).collect();
    for i in 0..limit {
        state = splitmix64(&mut state);
        let j = i + (state as usize) % (indices.len() - i);
        indices.swap(i, j);
    }
    let mut chosen: Vec<usize> = indices[..limit].to_vec();
    chosen.sort_unstable();
    chosen.into_iter().map(|i| units[i]).collect()
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}
