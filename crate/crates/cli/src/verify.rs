use qlcm_core::verifier::{run_sweep, Suite, SweepGrid, SweepOptions, SweepReport};

use crate::opts::{parse_range, resolve_jobs, Cli, Format};
use crate::render::write_output;

pub fn run(cli: &Cli, suite_names: &[String]) -> Result<i32, String> {
    let q = parse_range(cli.q.as_deref().unwrap_or("1..4"), "q")?;
    let r = parse_range(cli.r.as_deref().unwrap_or("1..4"), "r")?;
    let u0 = parse_range(cli.u0.as_deref().unwrap_or("0..4"), "u0")?;
    let n_max = cli.n_max.unwrap_or(10);
    let suites = if suite_names.is_empty() {
        Suite::ALL.to_vec()
    } else {
        suite_names
            .iter()
            .map(|name| {
                Suite::parse(name).ok_or_else(|| {
                    let known = Suite::ALL.map(|s| s.name()).join(", ");
                    format!("unknown suite {name:?}; expected one of: {known}")
                })
            })
            .collect::<Result<Vec<_>, _>>()?
    };
    let jobs = resolve_jobs(cli.jobs)?;
    eprintln!("jobs: {jobs}");

    let grid = SweepGrid {
        q,
        r,
        u0,
        n_max,
        sample_seed: cli.seed,
        sample_limit: cli.sample,
    };
    let report = run_sweep(
        &grid,
        &suites,
        SweepOptions {
            jobs,
            fail_fast: cli.fail_fast,
        },
    )
    .map_err(|e| e.to_string())?;

    let content = match cli.format {
        Format::Text => text_report(&report),
        Format::Json => {
            let mut body = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
            body.push('\n');
            body
        }
        Format::Csv => csv_report(&report),
    };
    write_output(&cli.out, &content)?;
    Ok(if report.summary.failures == 0 { 0 } else { 1 })
}

fn text_report(report: &SweepReport) -> String {
    let summary = &report.summary;
    let mut out = String::new();
    out.push_str(&format!(
        "grid: q={}..{} r={}..{} u0={}..{} n-max={}\n",
        summary.grid.q.0,
        summary.grid.q.1,
        summary.grid.r.0,
        summary.grid.r.1,
        summary.grid.u0.0,
        summary.grid.u0.1,
        summary.grid.n_max
    ));
    out.push_str(&format!("suites: {}\n", summary.suites.join(", ")));
    out.push_str(&format!(
        "progressions: {} checked, {} skipped (gcd)\n",
        summary.progressions_checked, summary.skipped_gcd
    ));
    for totals in &summary.suite_totals {
        out.push_str(&format!(
            "suite {}: {} progressions, {} checks, {} failures\n",
            totals.suite, totals.progressions, totals.checks, totals.failures
        ));
    }
    out.push_str(&format!("records: {}\n", report.records.len()));
    if let Some(first) = summary.counterexamples.first() {
        out.push_str(&format!(
            "counterexample: suite {} at q={} r={} u0={}: {}\n",
            first.suite, first.q, first.r, first.u0, first.detail
        ));
    }
    if summary.stopped_early {
        out.push_str("note: stopped early (--fail-fast)\n");
    }
    out.push_str(&format!(
        "result: {} ({} checks, {} failures)\n",
        if summary.failures == 0 { "PASS" } else { "FAIL" },
        summary.checks,
        summary.failures
    ));
    out
}

fn csv_report(report: &SweepReport) -> String {
    let mut out = String::with_capacity(64 * (report.records.len() + 1));
    out.push_str(qlcm_core::verifier::SweepRecord::CSV_HEADER);
    out.push('\n');
    for record in &report.records {
        out.push_str(&record.to_csv_row());
        out.push('\n');
    }
    out
}
