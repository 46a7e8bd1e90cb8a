use num_bigint::BigInt;

use qlcm_core::qcalc::{q_binomial, q_factorial, q_int, QBase};

use crate::opts::{parse_single, Cli, EvalOp};
use crate::render::write_output;

pub fn run(cli: &Cli, op: &EvalOp) -> Result<i32, String> {
    let q_raw = cli.q.as_deref().ok_or("--q is required for eval")?;
    let q = QBase::new(parse_single(q_raw, "q")?).map_err(|e| e.to_string())?;
    let value: BigInt = match op {
        EvalOp::Qint { n } => q_int(index(*n, "n")?, q),
        EvalOp::Qfact { n } => q_factorial(index(*n, "n")?, q),
        EvalOp::Qbinom { n, k } => {
            q_binomial(index(*n, "n")?, index(*k, "k")?, q).map_err(|e| e.to_string())?
        }
    };
    write_output(&cli.out, &format!("{value}\n"))?;
    Ok(0)
}

fn index(value: i64, name: &str) -> Result<u32, String> {
    u32::try_from(value).map_err(|_| format!("{name} must be an integer >= 0, got {value}"))
}
