//! Exact least common multiples of consecutive progression terms, an
//! incremental prefix stream, and the two divisibility statements the
//! rest of the crate stands on: the fundamental check for arbitrary
//! families of nonzero integers, and its specialization
//! `lcm{u_k..u_n} * [n-k]_q! = 0 (mod u_k u_{k+1} ... u_n)`.
//!
//! Divisibility is always decided by an exact remainder, never by
//! rational rounding.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::progression::Progression;
use crate::qcalc;
use crate::verdict::Verdict;

/// `lcm{u_k, ..., u_n}`, folded left with a gcd reduction at every step.
pub fn lcm_range(p: &Progression, k: u32, n: u32) -> Result<BigInt> {
    if k < 1 || k > n {
        return Err(Error::IndexRange {
            requirement: "1 <= k <= n",
            k: k as i64,
            n: n as i64,
        });
    }
    let mut acc = p.term(k);
    for i in (k + 1)..=n {
        acc = acc.lcm(&p.term(i));
    }
    Ok(acc)
}

/// One yield of [`PrefixLcmStream`]: the index, the term `u_n` and the
/// running value `lcm{u_1, ..., u_n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixStep {
    pub n: u32,
    pub term: BigInt,
    pub lcm: BigInt,
}

/// Streams `(n, u_n, L_n)` for n = 1, 2, ... with `L_n = lcm{u_1..u_n}`
/// extended incrementally, so `L_n` divides `L_{n+1}` by construction.
///
/// The stream is stateful and single-consumer.
#[derive(Debug, Clone)]
pub struct PrefixLcmStream {
    progression: Progression,
    n: u32,
    lcm: BigInt,
}

pub fn prefix_stream(p: Progression) -> PrefixLcmStream {
    PrefixLcmStream {
        progression: p,
        n: 0,
        lcm: BigInt::one(),
    }
}

impl Iterator for PrefixLcmStream {
    type Item = PrefixStep;

    fn next(&mut self) -> Option<PrefixStep> {
        self.n += 1;
        let term = self.progression.term(self.n);
        self.lcm = self.lcm.lcm(&term);
        Some(PrefixStep {
            n: self.n,
            term,
            lcm: self.lcm.clone(),
        })
    }
}

/// Checks, for a finite family of distinct nonzero integers, that
///
/// `lcm{u_i} * lcm{ prod_{i != j} |u_i - u_j| : j }`
///
/// is a multiple of `prod_i u_i`.
///
/// Duplicate entries make one of the inner products zero and leave no
/// usable modulus, so they are reported as an error rather than a verdict.
pub fn fundamental_theorem_check(values: &[BigInt]) -> Result<Verdict> {
    if values.is_empty() || values.iter().any(|v| v.is_zero()) {
        return Err(Error::InvalidValues);
    }
    for (i, value) in values.iter().enumerate() {
        if values[..i].contains(value) {
            return Err(Error::DegenerateDifference {
                value: value.clone(),
            });
        }
    }
    let lcm_values = values
        .iter()
        .skip(1)
        .fold(values[0].abs(), |acc, v| acc.lcm(v));
    let mut lcm_difference_products = BigInt::one();
    for j in 0..values.len() {
        let mut product = BigInt::one();
        for (i, value) in values.iter().enumerate() {
            if i != j {
                product *= (value - &values[j]).abs();
            }
        }
        lcm_difference_products = lcm_difference_products.lcm(&product);
    }
    let product: BigInt = values.iter().product();
    let multiple = lcm_values * lcm_difference_products;
    if (&multiple % &product).is_zero() {
        Ok(Verdict::Pass)
    } else {
        Ok(Verdict::fail(format!(
            "{multiple} is not a multiple of {product} for values {values:?}"
        )))
    }
}

/// Checks that `lcm{u_k..u_n} * [n-k]_q!` is divisible by
/// `u_k u_{k+1} ... u_n`; under the progression hypotheses this must hold
/// for every 1 <= k <= n, so a failing verdict is a genuine
/// counterexample.
pub fn theorem1_check(p: &Progression, k: u32, n: u32) -> Result<Verdict> {
    let lcm = lcm_range(p, k, n)?;
    let factorial = qcalc::q_factorial(n - k, p.base());
    let mut product = BigInt::one();
    for i in k..=n {
        product *= p.term(i);
    }
    if ((lcm * factorial) % &product).is_zero() {
        Ok(Verdict::Pass)
    } else {
        Ok(Verdict::fail(format!(
            "lcm * [n-k]_q! is not a multiple of the term product at q = {}, r = {}, u0 = {}, k = {k}, n = {n}",
            p.q(),
            p.r(),
            p.u0()
        )))
    }
}
