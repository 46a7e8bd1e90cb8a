//! The q-arithmetic progression `u_n = r [n]_q + u0` and the machinery
//! built on it: the closed-form pairwise gap, the rational family
//! `C_{n,k} = u_k u_{k+1} ... u_n / [n-k]_q!`, the threshold function
//! `f(x) = q^{x-1} (r q^{x-1} + u0 (q-1) + 1 - r)` and the maximizer
//! indices `k_n` (largest integer with `f(k) <= q^n`) and
//! `ell_n = max(1, k_n)`.
//!
//! `C_{n,k}` is only materialized for `k >= 1`; the threshold function
//! covers every integer argument exactly (negative arguments give
//! rationals through the negative power of q), so negative-index terms of
//! the progression never need a value.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::qcalc::{self, QBase};

/// A validated q-arithmetic progression `u_n = r [n]_q + u0`.
///
/// Construction enforces `gcd(u0, r) = 1` and `gcd(u1, q) = 1` (where
/// `u1 = r + u0`); every divisibility statement in this crate assumes
/// both. q = 1 is accepted and gives the ordinary arithmetic progression
/// `u_n = r n + u0`; only the threshold machinery rejects it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Progression {
    q: QBase,
    r: i64,
    u0: i64,
}

impl Progression {
    pub fn new(q: i64, r: i64, u0: i64) -> Result<Self> {
        let q = QBase::new(q)?;
        if r < 1 {
            return Err(Error::Domain {
                name: "r",
                min: 1,
                value: r,
            });
        }
        if u0 < 0 {
            return Err(Error::Domain {
                name: "u0",
                min: 0,
                value: u0,
            });
        }
        let gcd_u0_r = (u0 as i128).gcd(&(r as i128));
        if gcd_u0_r != 1 {
            return Err(Error::NotCoprime {
                left_name: "u0",
                right_name: "r",
                left: u0 as i128,
                right: r as i128,
                gcd: gcd_u0_r,
            });
        }
        let u1 = r as i128 + u0 as i128;
        let gcd_u1_q = u1.gcd(&(q.get() as i128));
        if gcd_u1_q != 1 {
            return Err(Error::NotCoprime {
                left_name: "u1",
                right_name: "q",
                left: u1,
                right: q.get() as i128,
                gcd: gcd_u1_q,
            });
        }
        Ok(Progression { q, r, u0 })
    }

    /// Reparameterizes `v_n = a q^n + b` as `a (q-1) [n]_q + (a + b)`.
    ///
    /// The shift's own hypotheses imply the progression hypotheses, so the
    /// validation here cannot fail.
    pub fn from_geometric(shift: &GeometricShift) -> Self {
        let (q, r, u0) = shift.progression_parameters();
        Progression::new(q, r, u0)
            .expect("a valid geometric shift always maps to a valid progression")
    }

    pub fn q(&self) -> i64 {
        self.q.get()
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn u0(&self) -> i64 {
        self.u0
    }

    pub fn base(&self) -> QBase {
        self.q
    }

    /// `u_n = r [n]_q + u0`.
    pub fn term(&self, n: u32) -> BigInt {
        BigInt::from(self.r) * qcalc::q_int(n, self.q) + self.u0
    }

    /// `|u_i - u_j| = r q^{min(i,j)} [|i-j|]_q`, evaluated from the closed
    /// form rather than by subtracting terms.
    pub fn gap(&self, i: u32, j: u32) -> BigInt {
        let low = i.min(j);
        BigInt::from(self.r) * self.q.pow(low) * qcalc::q_int(i.abs_diff(j), self.q)
    }

    /// `C_{n,k} = (u_k u_{k+1} ... u_n) / [n-k]_q!`, exact and reduced.
    pub fn cnk(&self, n: u32, k: u32) -> Result<CnkValue> {
        if k < 1 || k > n {
            return Err(Error::IndexRange {
                requirement: "1 <= k <= n",
                k: k as i64,
                n: n as i64,
            });
        }
        let mut product = BigInt::one();
        for i in k..=n {
            product *= self.term(i);
        }
        let value = BigRational::new(product, qcalc::q_factorial(n - k, self.q));
        debug_assert!(value.is_positive());
        Ok(CnkValue { value, n, k })
    }

    /// `u0 (q - 1) + 1 - r`, the affine part of the threshold function.
    pub(crate) fn affine_offset(&self) -> BigInt {
        BigInt::from(self.u0) * (self.q.get() - 1) + 1 - self.r
    }

    /// Exact value of `f(x) = q^{x-1} (r q^{x-1} + u0 (q-1) + 1 - r)` at an
    /// integer point. Requires q >= 2; x may be any integer, with x <= 0
    /// producing rationals through `q^{x-1} < 1`.
    pub fn f_eval(&self, x: i64) -> Result<BigRational> {
        self.q.require_at_least_two()?;
        let power = self.signed_q_power(x - 1);
        let affine = BigRational::from_integer(BigInt::from(self.r)) * &power
            + BigRational::from_integer(self.affine_offset());
        Ok(power * affine)
    }

    /// The largest integer k with `f(k) <= q^n`. Always <= n, and may be
    /// <= 0 when u0 is large relative to q^n.
    ///
    /// Found by scanning downward from k = n: f is increasing, so the
    /// first k whose value drops to the target is the answer.
    pub fn k_index(&self, n: u32) -> Result<i64> {
        self.q.require_at_least_two()?;
        if n < 1 {
            return Err(Error::Domain {
                name: "n",
                min: 1,
                value: n as i64,
            });
        }
        let target = BigRational::from_integer(self.q.pow(n));
        let mut k = n as i64;
        while self.f_eval(k)? > target {
            k -= 1;
        }
        Ok(k)
    }

    /// `ell_n = max(1, k_n)`, the maximizer of `C_{n,k}` over 1 <= k <= n.
    pub fn l_index(&self, n: u32) -> Result<u32> {
        Ok(self.k_index(n)?.max(1) as u32)
    }

    /// `q^e` for a signed exponent, as an exact rational.
    fn signed_q_power(&self, e: i64) -> BigRational {
        if e >= 0 {
            BigRational::from_integer(self.q.pow(e as u32))
        } else {
            BigRational::new(BigInt::one(), self.q.pow((-e) as u32))
        }
    }
}

/// A geometric-with-shift sequence `v_n = a q^n + b` with a >= 1,
/// b >= -a, q >= 2, `gcd(a q, b) = 1` and `gcd(a + b, q - 1) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GeometricShift {
    a: i64,
    b: i64,
    q: i64,
}

impl GeometricShift {
    pub fn new(a: i64, b: i64, q: i64) -> Result<Self> {
        if q < 2 {
            return Err(Error::Domain {
                name: "q",
                min: 2,
                value: q,
            });
        }
        if a < 1 {
            return Err(Error::Domain {
                name: "a",
                min: 1,
                value: a,
            });
        }
        if b < -a {
            return Err(Error::Domain {
                name: "b",
                min: -a,
                value: b,
            });
        }
        let aq = a as i128 * q as i128;
        let gcd_aq_b = aq.gcd(&(b as i128));
        if gcd_aq_b != 1 {
            return Err(Error::NotCoprime {
                left_name: "a*q",
                right_name: "b",
                left: aq,
                right: b as i128,
                gcd: gcd_aq_b,
            });
        }
        let sum = a as i128 + b as i128;
        let gcd_sum = sum.gcd(&(q as i128 - 1));
        if gcd_sum != 1 {
            return Err(Error::NotCoprime {
                left_name: "a+b",
                right_name: "q-1",
                left: sum,
                right: q as i128 - 1,
                gcd: gcd_sum,
            });
        }
        a.checked_mul(q - 1).ok_or(Error::Overflow {
            what: "a * (q - 1)",
        })?;
        Ok(GeometricShift { a, b, q })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// `v_n = a q^n + b`.
    pub fn term(&self, n: u32) -> BigInt {
        BigInt::from(self.a) * BigInt::from(self.q).pow(n) + self.b
    }

    fn progression_parameters(&self) -> (i64, i64, i64) {
        map_parameters(self.a, self.b, self.q)
    }
}

/// The raw substitution `v_n = a q^n + b = a (q-1) [n]_q + (a + b)`,
/// independent of any hypothesis on (a, b, q).
fn map_parameters(a: i64, b: i64, q: i64) -> (i64, i64, i64) {
    (q, a * (q - 1), a + b)
}

/// One value `C_{n,k}`, kept together with the indices that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnkValue {
    value: BigRational,
    n: u32,
    k: u32,
}

impl CnkValue {
    pub fn value(&self) -> &BigRational {
        &self.value
    }

    pub fn into_value(self) -> BigRational {
        self.value
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn progression(q: i64, r: i64, u0: i64) -> Progression {
        Progression::new(q, r, u0).unwrap()
    }

    fn rational(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn validation_examples() {
        // the Mersenne-style sequence 2^n - 1
        assert!(Progression::new(2, 1, 0).is_ok());
        assert!(matches!(
            Progression::new(2, 2, 2),
            Err(Error::NotCoprime { left_name: "u0", .. })
        ));
        assert!(matches!(
            Progression::new(2, 1, 1),
            Err(Error::NotCoprime { left_name: "u1", .. })
        ));
        assert!(Progression::new(0, 1, 0).is_err());
        assert!(Progression::new(2, 0, 1).is_err());
        assert!(Progression::new(2, 1, -1).is_err());
        // u0 = 0 forces r = 1, since gcd(0, r) = r
        assert!(Progression::new(2, 3, 0).is_err());
        assert!(Progression::new(3, 1, 0).is_ok());
    }

    #[test]
    fn term_examples() {
        assert_eq!(progression(2, 1, 0).term(5), BigInt::from(31));
        assert_eq!(progression(3, 1, 1).term(4), BigInt::from(41));
        for p in [progression(2, 1, 0), progression(3, 2, 3), progression(1, 4, 3)] {
            assert_eq!(p.term(0), BigInt::from(p.u0()));
        }
    }

    #[test]
    fn gap_examples() {
        let p = progression(2, 3, 2);
        assert_eq!(p.gap(7, 7), BigInt::zero());
        // 3 * 2^2 * [3]_2, independent of u0
        assert_eq!(p.gap(5, 2), BigInt::from(84));
        assert_eq!(progression(2, 3, 4).gap(5, 2), BigInt::from(84));
        // 1 * 3^1 * [3]_3
        assert_eq!(progression(3, 1, 1).gap(1, 4), BigInt::from(39));
    }

    #[test]
    fn cnk_examples() {
        let p = progression(2, 1, 0);
        assert_eq!(p.cnk(4, 3).unwrap().value(), &rational(105, 1));
        assert_eq!(p.cnk(4, 2).unwrap().value(), &rational(105, 1));
        for n in 1..=8 {
            assert_eq!(
                p.cnk(n, n).unwrap().value(),
                &BigRational::from_integer(p.term(n))
            );
        }
        assert!(p.cnk(4, 0).is_err());
        assert!(p.cnk(4, 5).is_err());
    }

    #[test]
    fn f_eval_examples() {
        let p = progression(2, 1, 0);
        assert_eq!(p.f_eval(3).unwrap(), rational(16, 1));
        assert_eq!(p.f_eval(0).unwrap(), rational(1, 4));
        assert_eq!(progression(3, 1, 1).f_eval(2).unwrap(), rational(15, 1));
        assert_eq!(progression(1, 2, 1).f_eval(1), Err(Error::UnsupportedBase));
    }

    #[test]
    fn k_index_examples() {
        let p = progression(2, 1, 0);
        assert_eq!(p.k_index(4).unwrap(), 3);
        assert_eq!(p.k_index(5).unwrap(), 3);
        assert_eq!(p.k_index(2).unwrap(), 2);
        assert_eq!(progression(1, 2, 1).k_index(3), Err(Error::UnsupportedBase));
    }

    // For k >= 1 the threshold verdict must agree with the q-integer form
    // [n-k+1]_q >= u_{k-1}.
    #[test]
    fn k_index_agrees_with_q_integer_form() {
        for (q, r, u0) in [(2, 1, 0), (3, 1, 1), (2, 3, 2), (5, 2, 1), (6, 5, 6)] {
            let p = progression(q, r, u0);
            for n in 1..=30u32 {
                let kn = p.k_index(n).unwrap();
                assert!(kn <= n as i64);
                for k in 1..=n {
                    let by_f = k as i64 <= kn;
                    let by_qint =
                        qcalc::q_int(n - k + 1, p.base()) >= p.term(k - 1);
                    assert_eq!(by_f, by_qint, "q={q} r={r} u0={u0} n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn l_index_examples() {
        assert_eq!(progression(2, 1, 0).l_index(1).unwrap(), 1);
        assert_eq!(progression(2, 1, 0).l_index(4).unwrap(), 3);
        assert_eq!(progression(3, 1, 1).l_index(1).unwrap(), 1);
    }

    #[test]
    fn geometric_shift_validation() {
        assert!(GeometricShift::new(1, 1, 2).is_ok());
        assert!(GeometricShift::new(2, 1, 2).is_ok());
        // gcd(a*q, b) = 2
        assert!(GeometricShift::new(2, 2, 2).is_err());
        // gcd(a+b, q-1) = 2
        assert!(GeometricShift::new(1, -1, 3).is_err());
        assert!(GeometricShift::new(1, -2, 2).is_err());
        assert!(GeometricShift::new(1, 1, 1).is_err());
    }

    #[test]
    fn parameter_map_examples() {
        // v_n = 2^n + 1
        assert_eq!(map_parameters(1, 1, 2), (2, 1, 2));
        // direct substitution; (1, 0, 3) itself fails the gcd hypotheses,
        // the raw map is still well defined
        assert_eq!(map_parameters(1, 0, 3), (3, 2, 1));
        assert_eq!(map_parameters(2, 1, 2), (2, 2, 3));
    }

    #[test]
    fn from_geometric_matches_terms() {
        for (a, b, q) in [(1, 1, 2), (2, 1, 2), (5, 3, 2), (3, 2, 3), (1, 2, 3)] {
            let shift = GeometricShift::new(a, b, q).unwrap();
            let p = Progression::from_geometric(&shift);
            for n in 0..=10 {
                assert_eq!(p.term(n), shift.term(n), "a={a} b={b} q={q} n={n}");
            }
        }
        let shift = GeometricShift::new(1, 1, 2).unwrap();
        let p = Progression::from_geometric(&shift);
        assert_eq!((p.q(), p.r(), p.u0()), (2, 1, 2));
    }
}
