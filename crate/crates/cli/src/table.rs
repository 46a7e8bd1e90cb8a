use serde_json::{json, Value};

use qlcm_core::approx;
use qlcm_core::bounds::{bound_holds, BoundKind};
use qlcm_core::lcm::prefix_stream;
use qlcm_core::Progression;

use crate::opts::{parse_single, Cli, Format};
use crate::render::{align_table, write_output};

struct Row {
    n: u32,
    term: String,
    lcm_bits: u64,
    k_n: Option<i64>,
    ell_n: Option<u32>,
    c_ell_log2: Option<f64>,
    // (bound_log2, holds) per bound column; two for q >= 2, one for q = 1
    bound_columns: Vec<(f64, bool)>,
    slack_log2: f64,
    lcm_decimal: String,
    // --full-values diagnostics, never asserted: the constant an
    // undamped-base bound c ((r+1)/sqrt(r))^{n-1} q^{(n-1)(n-4)/4} would
    // need, and the distance of the lcm from sqrt(u_1...u_n)
    conj_c_log2: f64,
    sqrt_ratio_log2: f64,
}

pub fn run(cli: &Cli) -> Result<i32, String> {
    let q = parse_single(cli.q.as_deref().ok_or("table needs --q")?, "q")?;
    let r = parse_single(cli.r.as_deref().ok_or("table needs --r")?, "r")?;
    let u0 = parse_single(cli.u0.as_deref().ok_or("table needs --u0")?, "u0")?;
    let p = Progression::new(q, r, u0).map_err(|e| e.to_string())?;
    let n_max = cli.n_max.unwrap_or(20);
    if n_max < 1 {
        return Err("--n-max must be at least 1".into());
    }

    let threshold_defined = p.q() >= 2;
    let mut rows = Vec::with_capacity(n_max as usize);
    let mut stream = prefix_stream(p);
    let mut term_log2_sum = 0.0f64;
    let base_log2 = ((r + 1) as f64).log2() - 0.5 * (r as f64).log2();
    for n in 1..=n_max {
        let step = stream.next().expect("stream is infinite");
        let lcm_log2 = approx::log2_int(&step.lcm);
        term_log2_sum += approx::log2_int(&step.term);
        let e = (n as i64 - 1) * (n as i64 - 4);
        let conj_c_log2 =
            lcm_log2 - (n as f64 - 1.0) * base_log2 - (e as f64 / 4.0) * (q as f64).log2();
        let sqrt_ratio_log2 = lcm_log2 - 0.5 * term_log2_sum;
        let (k_n, ell_n, c_ell_log2) = if threshold_defined {
            let k = p.k_index(n).map_err(|e| e.to_string())?;
            let ell = k.max(1) as u32;
            let c_ell = p.cnk(n, ell).map_err(|e| e.to_string())?;
            (Some(k), Some(ell), Some(approx::log2_ratio(c_ell.value())))
        } else {
            (None, None, None)
        };
        let certificates = if threshold_defined {
            vec![
                bound_holds(&p, n, BoundKind::Theorem2).map_err(|e| e.to_string())?,
                bound_holds(&p, n, BoundKind::Theorem3).map_err(|e| e.to_string())?,
            ]
        } else {
            vec![bound_holds(&p, n, BoundKind::HongFeng).map_err(|e| e.to_string())?]
        };
        let bound_columns: Vec<(f64, bool)> = certificates
            .iter()
            .map(|cert| (lcm_log2 - cert.slack_log2, cert.holds))
            .collect();
        let slack_log2 = certificates
            .iter()
            .map(|cert| cert.slack_log2)
            .fold(f64::INFINITY, f64::min);
        rows.push(Row {
            n,
            term: step.term.to_string(),
            lcm_bits: step.lcm.bits(),
            k_n,
            ell_n,
            c_ell_log2,
            bound_columns,
            slack_log2,
            lcm_decimal: step.lcm.to_string(),
            conj_c_log2,
            sqrt_ratio_log2,
        });
    }

    let mut header: Vec<String> = ["n", "u_n", "lcm_bits", "k_n", "ell_n", "C_ell_log2"]
        .map(String::from)
        .to_vec();
    if threshold_defined {
        header.extend(
            ["t2_bound_log2", "t3_bound_log2", "t2_holds", "t3_holds"].map(String::from),
        );
    } else {
        header.extend(["hf_bound_log2", "hf_holds"].map(String::from));
    }
    header.push("slack_log2".into());
    if cli.full_values {
        header.extend(["lcm", "conj_c_log2", "sqrt_ratio_log2"].map(String::from));
    }

    let all_hold = rows
        .iter()
        .all(|row| row.bound_columns.iter().all(|(_, holds)| *holds));

    let content = match cli.format {
        Format::Csv => {
            let mut out = header.join(",");
            out.push('\n');
            for row in &rows {
                out.push_str(&cells(row, cli.full_values).join(","));
                out.push('\n');
            }
            out
        }
        Format::Text => align_table(
            &header,
            &rows
                .iter()
                .map(|row| cells(row, cli.full_values))
                .collect::<Vec<_>>(),
        ),
        Format::Json => {
            let objects: Vec<Value> = rows.iter().map(|row| json_row(row, cli)).collect();
            let mut body = serde_json::to_string_pretty(&objects).map_err(|e| e.to_string())?;
            body.push('\n');
            body
        }
    };
    write_output(&cli.out, &content)?;
    Ok(if all_hold { 0 } else { 1 })
}

fn format_log(value: f64) -> String {
    let text = format!("{value:.4}");
    if text == "-0.0000" {
        "0.0000".into()
    } else {
        text
    }
}

fn cells(row: &Row, full_values: bool) -> Vec<String> {
    let mut out = vec![
        row.n.to_string(),
        row.term.clone(),
        row.lcm_bits.to_string(),
        row.k_n.map(|v| v.to_string()).unwrap_or_default(),
        row.ell_n.map(|v| v.to_string()).unwrap_or_default(),
        row.c_ell_log2.map(format_log).unwrap_or_default(),
    ];
    for (bound_log2, _) in &row.bound_columns {
        out.push(format_log(*bound_log2));
    }
    for (_, holds) in &row.bound_columns {
        out.push(holds.to_string());
    }
    out.push(format_log(row.slack_log2));
    if full_values {
        out.push(row.lcm_decimal.clone());
        out.push(format_log(row.conj_c_log2));
        out.push(format_log(row.sqrt_ratio_log2));
    }
    out
}

fn json_row(row: &Row, cli: &Cli) -> Value {
    let mut object = json!({
        "n": row.n,
        "u_n": row.term,
        "lcm_bits": row.lcm_bits,
        "k_n": row.k_n,
        "ell_n": row.ell_n,
        "C_ell_log2": row.c_ell_log2,
        "slack_log2": row.slack_log2,
    });
    let map = object.as_object_mut().expect("literal object");
    if row.bound_columns.len() == 2 {
        map.insert("t2_bound_log2".into(), json!(row.bound_columns[0].0));
        map.insert("t3_bound_log2".into(), json!(row.bound_columns[1].0));
        map.insert("t2_holds".into(), json!(row.bound_columns[0].1));
        map.insert("t3_holds".into(), json!(row.bound_columns[1].1));
    } else {
        map.insert("hf_bound_log2".into(), json!(row.bound_columns[0].0));
        map.insert("hf_holds".into(), json!(row.bound_columns[0].1));
    }
    if cli.full_values {
        map.insert("lcm".into(), json!(row.lcm_decimal));
        map.insert("conj_c_log2".into(), json!(row.conj_c_log2));
        map.insert("sqrt_ratio_log2".into(), json!(row.sqrt_ratio_log2));
    }
    object
}
