//! Certificate soundness: every bound certificate is re-derived in
//! 200-bit fixed-point interval arithmetic with directed rounding, and
//! the interval for lcm / bound must sit entirely at or above 1 whenever
//! the exact fourth-power verdict says the bound holds.
//!
//! The interval code below is a deliberate second route: it works with
//! the bound in its original shape (square roots, quarter-integer powers
//! of q) instead of the cleared integer comparison, and it is exact on
//! exactly representable inputs, so the equality cases (n = 1, and the
//! tight Mersenne row at n = 4) come out with a lower bound of exactly 1.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use qlcm_core::bounds::{bound_constants, bound_holds, hong_feng_check, BoundKind};
use qlcm_core::lcm::lcm_range;
use qlcm_core::Progression;

const SCALE: u32 = 200;

/// A closed interval [lo, hi] / 2^200 of nonnegative reals.
#[derive(Debug, Clone)]
struct Interval {
    lo: BigInt,
    hi: BigInt,
}

fn shr_ceil(value: BigInt, shift: u32) -> BigInt {
    let floor = &value >> shift;
    if value == (&floor << shift) {
        floor
    } else {
        floor + 1
    }
}

fn div_ceil(numerator: BigInt, denominator: &BigInt) -> BigInt {
    let (quotient, remainder) = numerator.div_rem(denominator);
    if remainder.is_zero() {
        quotient
    } else {
        quotient + 1
    }
}

impl Interval {
    fn from_int(value: &BigInt) -> Self {
        assert!(!value.is_negative());
        Interval {
            lo: value << SCALE,
            hi: value << SCALE,
        }
    }

    fn one() -> Self {
        Interval::from_int(&BigInt::one())
    }

    fn contains_exactly_at_least_one(&self) -> bool {
        self.lo >= (BigInt::one() << SCALE)
    }

    fn well_formed(&self) -> bool {
        !self.lo.is_negative() && self.lo <= self.hi
    }

    fn mul(&self, other: &Interval) -> Interval {
        let out = Interval {
            lo: (&self.lo * &other.lo) >> SCALE,
            hi: shr_ceil(&self.hi * &other.hi, SCALE),
        };
        assert!(out.well_formed());
        out
    }

    fn div(&self, other: &Interval) -> Interval {
        assert!(other.lo.is_positive(), "division needs a positive divisor");
        let out = Interval {
            lo: (&self.lo << SCALE).div_floor(&other.hi),
            hi: div_ceil(&self.hi << SCALE, &other.lo),
        };
        assert!(out.well_formed());
        out
    }

    fn sqrt(&self) -> Interval {
        let lo = (&self.lo << SCALE).sqrt();
        let shifted_hi = &self.hi << SCALE;
        let root = shifted_hi.sqrt();
        let hi = if &root * &root == shifted_hi { root } else { root + 1 };
        let out = Interval { lo, hi };
        assert!(out.well_formed());
        out
    }

    fn fourth_root(&self) -> Interval {
        let lo = (&self.lo << (3 * SCALE)).nth_root(4);
        let shifted_hi = &self.hi << (3 * SCALE);
        let root = shifted_hi.nth_root(4);
        let hi = if root.pow(4) == shifted_hi { root } else { root + 1 };
        let out = Interval { lo, hi };
        assert!(out.well_formed());
        out
    }

    fn powi(&self, exponent: u32) -> Interval {
        let mut out = Interval::one();
        for _ in 0..exponent {
            out = out.mul(self);
        }
        out
    }
}

/// q^{e/4} as an interval, for a signed integer e.
fn quarter_power(q: i64, e: i64) -> Interval {
    let magnitude = BigInt::from(q).pow(e.unsigned_abs() as u32);
    let root = Interval::from_int(&magnitude).fourth_root();
    if e >= 0 {
        root
    } else {
        Interval::one().div(&root)
    }
}

fn ratio_interval(numer: &BigInt, denom: &BigInt) -> Interval {
    Interval::from_int(numer).div(&Interval::from_int(denom))
}

/// lcm / bound for the sqrt(r)(A+1) and 2 sqrt(B) bound families.
fn theorem_ratio(p: &Progression, n: u32, kind: BoundKind) -> Interval {
    let lcm = Interval::from_int(&lcm_range(p, 1, n).unwrap());
    let u1 = Interval::from_int(&p.term(1));
    let r_plus_1 = Interval::from_int(&BigInt::from(p.r() + 1));
    let constants = bound_constants(p);
    let base = match kind {
        BoundKind::Theorem2 => {
            let a_plus_1 = ratio_interval(
                &(constants.a.numer() + constants.a.denom()),
                constants.a.denom(),
            );
            let sqrt_r = Interval::from_int(&BigInt::from(p.r())).sqrt();
            r_plus_1.div(&sqrt_r.mul(&a_plus_1))
        }
        BoundKind::Theorem3 => {
            let sqrt_b = ratio_interval(constants.b.numer(), constants.b.denom()).sqrt();
            let two = Interval::from_int(&BigInt::from(2));
            r_plus_1.div(&two.mul(&sqrt_b))
        }
        _ => unreachable!("only the two theorem families use this shape"),
    };
    let e = (n as i64 - 1) * (n as i64 - 4);
    let bound = u1.mul(&base.powi(n - 1)).mul(&quarter_power(p.q(), e));
    lcm.div(&bound)
}

#[test]
fn theorem_bounds_bracket_above_one_on_the_grid() {
    for q in 2..=6 {
        for r in 1..=6 {
            for u0 in 0..=6 {
                let Ok(p) = Progression::new(q, r, u0) else { continue };
                for n in 1..=25u32 {
                    for kind in [BoundKind::Theorem2, BoundKind::Theorem3] {
                        let cert = bound_holds(&p, n, kind).unwrap();
                        assert!(cert.holds, "q={q} r={r} u0={u0} n={n} {kind:?}");
                        let ratio = theorem_ratio(&p, n, kind);
                        assert!(
                            ratio.contains_exactly_at_least_one(),
                            "interval lower bound below 1 at q={q} r={r} u0={u0} n={n} {kind:?}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn equality_cases_come_out_exact() {
    // n = 1 gives bound = u_1 exactly; the Mersenne parameters at n = 4
    // give bound = 8 against lcm = 105.
    let p = Progression::new(2, 1, 0).unwrap();
    let at_n1 = theorem_ratio(&p, 1, BoundKind::Theorem2);
    assert_eq!(at_n1.lo, BigInt::one() << SCALE);
    assert_eq!(at_n1.hi, BigInt::one() << SCALE);
    let at_n4 = theorem_ratio(&p, 4, BoundKind::Theorem2);
    let expected = (BigInt::from(105) << SCALE) / 8;
    assert_eq!(at_n4.lo, expected);
    assert_eq!(at_n4.hi, expected);
}

#[test]
fn q_integer_bound_brackets_above_one() {
    for q in 2..=5 {
        let p = Progression::new(q, 1, 0).unwrap();
        for n in 1..=25u32 {
            let cert = bound_holds(&p, n, BoundKind::BouslaFarhi).unwrap();
            assert!(cert.holds);
            let lcm = Interval::from_int(&lcm_range(&p, 1, n).unwrap());
            let e = n as i64 * n as i64 - 2 * n as i64 - 4;
            let ratio = lcm.div(&quarter_power(q, e));
            assert!(ratio.contains_exactly_at_least_one(), "q={q} n={n}");
        }
    }
}

#[test]
fn arithmetic_progression_bound_brackets_above_one() {
    for u0 in 1..=6 {
        for r in 1..=6 {
            if BigInt::from(u0).gcd(&BigInt::from(r)) != BigInt::one() {
                continue;
            }
            for n in 0..=25u32 {
                let cert = hong_feng_check(u0, r, n).unwrap();
                assert!(cert.holds);
                let mut lcm = BigInt::from(u0);
                for i in 1..=n {
                    lcm = lcm.lcm(&(BigInt::from(u0) + BigInt::from(r) * i));
                }
                let bound = BigInt::from(u0) * BigInt::from(r + 1).pow(n);
                let ratio = ratio_interval(&lcm, &bound);
                assert!(ratio.contains_exactly_at_least_one(), "u0={u0} r={r} n={n}");
            }
        }
    }
}
