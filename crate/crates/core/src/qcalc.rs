//! Exact q-calculus primitives: q-integers, q-factorials and q-binomial
//! (gaussian binomial) coefficients over arbitrary-precision integers.
//!
//! For a base q >= 1 the q-integer is `[n]_q = 1 + q + ... + q^{n-1}`, so
//! `[n]_1 = n` and `[n]_q = (q^n - 1)/(q - 1)` for q >= 2. The q-factorial
//! is `[n]_q! = [n]_q [n-1]_q ... [1]_q` with `[0]_q! = 1`, and the
//! q-binomial coefficient `[n]_q! / ([k]_q! [n-k]_q!)` is always an
//! integer.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The base of the q-calculus, a positive integer.
///
/// q = 1 degenerates every primitive to its classical counterpart;
/// operations that need q >= 2 reject it explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QBase(i64);

impl QBase {
    pub fn new(q: i64) -> Result<Self> {
        if q < 1 {
            return Err(Error::Domain {
                name: "q",
                min: 1,
                value: q,
            });
        }
        Ok(QBase(q))
    }

    pub fn get(self) -> i64 {
        self.0
    }

    /// q raised to a nonnegative power, as a big integer.
    pub fn pow(self, exponent: u32) -> BigInt {
        BigInt::from(self.0).pow(exponent)
    }

    /// Errors out on q = 1, which the threshold machinery cannot handle.
    pub fn require_at_least_two(self) -> Result<Self> {
        if self.0 < 2 {
            Err(Error::UnsupportedBase)
        } else {
            Ok(self)
        }
    }
}

/// The q-integer `[n]_q`, evaluated by the Horner recurrence
/// `[i+1]_q = q [i]_q + 1` so no division is ever performed.
pub fn q_int(n: u32, q: QBase) -> BigInt {
    let base = BigInt::from(q.get());
    let mut acc = BigInt::zero();
    for _ in 0..n {
        acc = acc * &base + 1;
    }
    acc
}

/// The q-factorial `[n]_q!`, with `[0]_q! = 1`.
pub fn q_factorial(n: u32, q: QBase) -> BigInt {
    let base = BigInt::from(q.get());
    let mut factorial = BigInt::one();
    let mut qint = BigInt::zero();
    for _ in 0..n {
        qint = qint * &base + 1;
        factorial *= &qint;
    }
    factorial
}

/// The q-binomial coefficient `[n]_q! / ([k]_q! [n-k]_q!)`.
///
/// Computed as the factorial quotient it is defined to be; the division is
/// checked to be exact, since a nonzero remainder would contradict the
/// integrality of the gaussian binomial coefficients.
pub fn q_binomial(n: u32, k: u32, q: QBase) -> Result<BigInt> {
    if k > n {
        return Err(Error::IndexRange {
            requirement: "0 <= k <= n",
            k: k as i64,
            n: n as i64,
        });
    }
    let numerator = q_factorial(n, q);
    let denominator = q_factorial(k, q) * q_factorial(n - k, q);
    let (quotient, remainder) = numerator.div_rem(&denominator);
    assert!(
        remainder.is_zero(),
        "q-binomial quotient left remainder {remainder} at n = {n}, k = {k}, q = {}",
        q.get()
    );
    Ok(quotient)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base(q: i64) -> QBase {
        QBase::new(q).unwrap()
    }

    #[test]
    fn q_int_examples() {
        assert_eq!(q_int(0, base(5)), BigInt::zero());
        assert_eq!(q_int(7, base(1)), BigInt::from(7));
        // (3^4 - 1) / 2
        assert_eq!(q_int(4, base(3)), BigInt::from(40));
    }

    #[test]
    fn q_factorial_examples() {
        assert_eq!(q_factorial(0, base(9)), BigInt::one());
        // 7 * 3 * 1
        assert_eq!(q_factorial(3, base(2)), BigInt::from(21));
        assert_eq!(q_factorial(4, base(1)), BigInt::from(24));
    }

    #[test]
    fn q_binomial_examples() {
        for n in 0..10u32 {
            assert_eq!(q_binomial(n, 0, base(4)).unwrap(), BigInt::one());
        }
        assert_eq!(q_binomial(4, 2, base(2)).unwrap(), BigInt::from(35));
        assert_eq!(q_binomial(5, 2, base(3)).unwrap(), BigInt::from(1210));
    }

    // Independent route: the falling product
    // [n]_q [n-1]_q ... [n-k+1]_q / [k]_q! must agree with the factorial
    // quotient everywhere.
    #[test]
    fn q_binomial_matches_product_formula() {
        for q in 1..=4 {
            for n in 0..=10u32 {
                for k in 0..=n {
                    let mut num = BigInt::one();
                    let mut den = BigInt::one();
                    for i in 0..k {
                        num *= q_int(n - i, base(q));
                        den *= q_int(i + 1, base(q));
                    }
                    let (expected, rem) = num.div_rem(&den);
                    assert!(rem.is_zero());
                    assert_eq!(q_binomial(n, k, base(q)).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn q_binomial_rejects_k_above_n() {
        assert!(matches!(
            q_binomial(3, 4, base(2)),
            Err(Error::IndexRange { .. })
        ));
    }

    #[test]
    fn base_must_be_positive() {
        assert!(QBase::new(1).is_ok());
        assert!(QBase::new(0).is_err());
        assert!(QBase::new(-3).is_err());
        assert_eq!(QBase::new(1).unwrap().require_at_least_two(), Err(Error::UnsupportedBase));
    }
}
