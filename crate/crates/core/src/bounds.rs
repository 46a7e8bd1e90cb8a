//! Exact evaluation of the effective lower bounds on
//! `lcm{u_1, ..., u_n}`.
//!
//! The two main bounds have the shape
//!
//! `lcm{u_1..u_n} >= u_1 * base^{n-1} * q^{(n-1)(n-4)/4}`
//!
//! with `base = (r+1) / (sqrt(r) (A+1))` or `base = (r+1) / (2 sqrt(B))`,
//! where `A = max(0, (u0(q-1)+1-r)/(2r))` and
//! `B = max(r, (u0(q-1)+1-r)/2)`. Both bases contain square roots and the
//! q-exponent is a quarter-integer that is negative for n in {2, 3}, so a
//! verdict can never come from floating point. Instead every inequality is
//! raised to the fourth power and all denominators and negative powers of
//! q are cleared onto the two sides, leaving a single comparison of
//! integers; that pair is what a [`BoundCertificate`] records.
//!
//! The geometric corollaries (`v_n = a q^n + b`), the arithmetic
//! progression bound `lcm(u0, u0+r, ..., u0+nr) >= u0 (r+1)^n` and the
//! pure q-integer bound `lcm([1]_q..[n]_q) >= q^{n^2/4 - n/2 - 1}` go
//! through the same clearing.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::approx;
use crate::error::{Error, Result};
use crate::lcm::lcm_range;
use crate::progression::{GeometricShift, Progression};

/// Which lower bound a certificate refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum BoundKind {
    Theorem2,
    Theorem3,
    Corollary3,
    Corollary4,
    HongFeng,
    BouslaFarhi,
}

impl BoundKind {
    pub fn name(self) -> &'static str {
        match self {
            BoundKind::Theorem2 => "Theorem2",
            BoundKind::Theorem3 => "Theorem3",
            BoundKind::Corollary3 => "Corollary3",
            BoundKind::Corollary4 => "Corollary4",
            BoundKind::HongFeng => "HongFeng",
            BoundKind::BouslaFarhi => "BouslaFarhi",
        }
    }
}

impl std::fmt::Display for BoundKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// The per-progression constants of the two main bounds, exact:
/// `a = max(0, (u0(q-1)+1-r)/(2r))` and `b = max(r, (u0(q-1)+1-r)/2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundConstants {
    pub a: BigRational,
    pub b: BigRational,
}

pub fn bound_constants(p: &Progression) -> BoundConstants {
    let offset = BigRational::from_integer(p.affine_offset());
    let r = BigRational::from_integer(BigInt::from(p.r()));
    let two = BigRational::from_integer(BigInt::from(2));
    let a = (&offset / (&two * &r)).max(BigRational::zero());
    let b = (offset / two).max(r);
    BoundConstants { a, b }
}

/// The primed constants of the geometric corollaries, exact:
/// `A' = max(0, b/(2a) + 1/(2a(q-1)))` and
/// `B' = max(a(q-1), (b(q-1)+1)/2)`.
pub fn geometric_constants(shift: &GeometricShift) -> (BigRational, BigRational) {
    constants_for_shift(shift.a(), shift.b(), shift.q())
}

fn constants_for_shift(a: i64, b: i64, q: i64) -> (BigRational, BigRational) {
    let b_q1_plus_1: BigInt = BigInt::from(b) * (q - 1) + 1;
    let a_prime = BigRational::new(b_q1_plus_1.clone(), BigInt::from(2) * a * (q - 1))
        .max(BigRational::zero());
    let b_prime = BigRational::new(b_q1_plus_1, BigInt::from(2))
        .max(BigRational::from_integer(BigInt::from(a) * (q - 1)));
    (a_prime, b_prime)
}

/// Exact verdict for one bound instance.
///
/// `lhs4 >= rhs4` is the original inequality `lcm >= bound` raised to the
/// fourth power with every denominator and negative power of q cleared;
/// `holds` is exactly that comparison. `slack_log2` is
/// `log2(lcm / bound)` in double precision, for display only — it never
/// participates in a verdict.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundCertificate {
    pub kind: BoundKind,
    pub n: u32,
    pub q: i64,
    pub r: i64,
    pub u0: i64,
    pub holds: bool,
    pub slack_log2: f64,
    #[serde(serialize_with = "serialize_decimal")]
    pub lhs4: BigInt,
    #[serde(serialize_with = "serialize_decimal")]
    pub rhs4: BigInt,
}

fn serialize_decimal<S: Serializer>(value: &BigInt, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    serializer.serialize_str(&value.to_str_radix(10))
}

impl BoundCertificate {
    fn from_sides(
        kind: BoundKind,
        n: u32,
        q: i64,
        r: i64,
        u0: i64,
        lhs4: BigInt,
        rhs4: BigInt,
    ) -> Self {
        let holds = lhs4 >= rhs4;
        let slack_log2 = (approx::log2_int(&lhs4) - approx::log2_int(&rhs4)) / 4.0;
        BoundCertificate {
            kind,
            n,
            q,
            r,
            u0,
            holds,
            slack_log2,
            lhs4,
            rhs4,
        }
    }

    pub const CSV_HEADER: &'static str = "kind,n,q,r,u0,holds,slack_log2,lhs4,rhs4";

    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.kind,
            self.n,
            self.q,
            self.r,
            self.u0,
            self.holds,
            self.slack_log2,
            self.lhs4.to_str_radix(10),
            self.rhs4.to_str_radix(10)
        )
    }
}

/// `q^e` split into the side it belongs on: the positive part goes to the
/// right-hand side, the negated negative part to the left.
fn clamped_power(q: i64, e: i64) -> BigInt {
    if e > 0 {
        BigInt::from(q).pow(e as u32)
    } else {
        BigInt::one()
    }
}

/// Certificate for one bound instance on a progression.
///
/// `Theorem2`/`Theorem3` need q >= 2, `HongFeng` needs q = 1 and
/// `BouslaFarhi` needs q >= 2, r = 1, u0 = 0; the geometric corollaries
/// carry extra data and live in [`geometric_bound_holds`].
pub fn bound_holds(p: &Progression, n: u32, kind: BoundKind) -> Result<BoundCertificate> {
    if n < 1 {
        return Err(Error::Domain {
            name: "n",
            min: 1,
            value: n as i64,
        });
    }
    match kind {
        BoundKind::Theorem2 => {
            p.base().require_at_least_two()?;
            sqrt_r_certificate(p, n, BoundKind::Theorem2, &bound_constants(p).a)
        }
        BoundKind::Theorem3 => {
            p.base().require_at_least_two()?;
            two_sqrt_certificate(p, n, BoundKind::Theorem3, &bound_constants(p).b)
        }
        BoundKind::HongFeng => hong_feng_for_progression(p, n),
        BoundKind::BouslaFarhi => bousla_farhi_certificate(p, n),
        BoundKind::Corollary3 | BoundKind::Corollary4 => Err(Error::KindMismatch {
            kind: kind.name(),
            reason: "corollary certificates need the geometric shift; use geometric_bound_holds",
        }),
    }
}

/// Certificate for the geometric corollaries, built from the primed
/// constants. Numerically it coincides with the matching theorem
/// certificate of the reparameterized progression, because the primed and
/// unprimed constants agree under r = a(q-1), u0 = a+b.
pub fn geometric_bound_holds(
    shift: &GeometricShift,
    n: u32,
    kind: BoundKind,
) -> Result<BoundCertificate> {
    if n < 1 {
        return Err(Error::Domain {
            name: "n",
            min: 1,
            value: n as i64,
        });
    }
    let p = Progression::from_geometric(shift);
    let (a_prime, b_prime) = geometric_constants(shift);
    match kind {
        BoundKind::Corollary3 => sqrt_r_certificate(&p, n, BoundKind::Corollary3, &a_prime),
        BoundKind::Corollary4 => two_sqrt_certificate(&p, n, BoundKind::Corollary4, &b_prime),
        _ => Err(Error::KindMismatch {
            kind: kind.name(),
            reason: "geometric certificates are Corollary3 or Corollary4",
        }),
    }
}

/// Fourth-power clearing of
/// `lcm >= u_1 ((r+1) / (sqrt(r) (A+1)))^{n-1} q^{(n-1)(n-4)/4}`
/// with A given as an exact rational:
///
/// `L^4 r^{2m} (a_n + a_d)^{4m} q^{max(0,-e)} >= u_1^4 (r+1)^{4m} a_d^{4m} q^{max(0,e)}`
///
/// where m = n-1, e = (n-1)(n-4) and A = a_n / a_d in lowest terms.
fn sqrt_r_certificate(
    p: &Progression,
    n: u32,
    kind: BoundKind,
    a_const: &BigRational,
) -> Result<BoundCertificate> {
    let m = n - 1;
    let e = (n as i64 - 1) * (n as i64 - 4);
    let lcm = lcm_range(p, 1, n)?;
    let u1 = p.term(1);
    let a_num_plus_den = a_const.numer() + a_const.denom();
    let lhs4 = lcm.pow(4)
        * BigInt::from(p.r()).pow(2 * m)
        * a_num_plus_den.pow(4 * m)
        * clamped_power(p.q(), -e);
    let rhs4 = u1.pow(4)
        * BigInt::from(p.r() + 1).pow(4 * m)
        * a_const.denom().pow(4 * m)
        * clamped_power(p.q(), e);
    Ok(BoundCertificate::from_sides(
        kind,
        n,
        p.q(),
        p.r(),
        p.u0(),
        lhs4,
        rhs4,
    ))
}

/// Fourth-power clearing of
/// `lcm >= u_1 ((r+1) / (2 sqrt(B)))^{n-1} q^{(n-1)(n-4)/4}`
/// with B = b_n / b_d in lowest terms:
///
/// `L^4 16^m b_n^{2m} q^{max(0,-e)} >= u_1^4 (r+1)^{4m} b_d^{2m} q^{max(0,e)}`.
fn two_sqrt_certificate(
    p: &Progression,
    n: u32,
    kind: BoundKind,
    b_const: &BigRational,
) -> Result<BoundCertificate> {
    let m = n - 1;
    let e = (n as i64 - 1) * (n as i64 - 4);
    let lcm = lcm_range(p, 1, n)?;
    let u1 = p.term(1);
    let lhs4 = lcm.pow(4)
        * BigInt::from(16).pow(m)
        * b_const.numer().pow(2 * m)
        * clamped_power(p.q(), -e);
    let rhs4 = u1.pow(4)
        * BigInt::from(p.r() + 1).pow(4 * m)
        * b_const.denom().pow(2 * m)
        * clamped_power(p.q(), e);
    Ok(BoundCertificate::from_sides(
        kind,
        n,
        p.q(),
        p.r(),
        p.u0(),
        lhs4,
        rhs4,
    ))
}

/// The q = 1 bound for a progression's terms u_1..u_n, which form an
/// arithmetic progression starting at u_1: `lcm{u_1..u_n} >= u_1 (r+1)^{n-1}`.
fn hong_feng_for_progression(p: &Progression, n: u32) -> Result<BoundCertificate> {
    if p.q() != 1 {
        return Err(Error::KindMismatch {
            kind: BoundKind::HongFeng.name(),
            reason: "needs the q = 1 parameterization",
        });
    }
    let lcm = lcm_range(p, 1, n)?;
    let bound = p.term(1) * BigInt::from(p.r() + 1).pow(n - 1);
    Ok(BoundCertificate::from_sides(
        BoundKind::HongFeng,
        n,
        1,
        p.r(),
        p.u0(),
        lcm.pow(4),
        bound.pow(4),
    ))
}

/// `lcm([1]_q, ..., [n]_q) >= q^{n^2/4 - n/2 - 1}`, cleared to
/// `L^4 q^{max(0,-e)} >= q^{max(0,e)}` with e = n^2 - 2n - 4 (negative for
/// n <= 3, handled by the same side split).
fn bousla_farhi_certificate(p: &Progression, n: u32) -> Result<BoundCertificate> {
    if p.q() < 2 || p.r() != 1 || p.u0() != 0 {
        return Err(Error::KindMismatch {
            kind: BoundKind::BouslaFarhi.name(),
            reason: "needs q >= 2, r = 1, u0 = 0 so that u_n = [n]_q",
        });
    }
    let e = n as i64 * n as i64 - 2 * n as i64 - 4;
    let lcm = lcm_range(p, 1, n)?;
    let lhs4 = lcm.pow(4) * clamped_power(p.q(), -e);
    let rhs4 = clamped_power(p.q(), e);
    Ok(BoundCertificate::from_sides(
        BoundKind::BouslaFarhi,
        n,
        p.q(),
        p.r(),
        p.u0(),
        lhs4,
        rhs4,
    ))
}

/// The arithmetic progression bound
/// `lcm(u0, u0 + r, ..., u0 + n r) >= u0 (r + 1)^n` for coprime u0 >= 1,
/// r >= 1. Note the index convention: the range starts at u0 itself and
/// n = 0 is allowed.
pub fn hong_feng_check(u0: i64, r: i64, n: u32) -> Result<BoundCertificate> {
    if u0 < 1 {
        return Err(Error::Domain {
            name: "u0",
            min: 1,
            value: u0,
        });
    }
    if r < 1 {
        return Err(Error::Domain {
            name: "r",
            min: 1,
            value: r,
        });
    }
    let gcd = (u0 as i128).gcd(&(r as i128));
    if gcd != 1 {
        return Err(Error::NotCoprime {
            left_name: "u0",
            right_name: "r",
            left: u0 as i128,
            right: r as i128,
            gcd,
        });
    }
    let mut lcm = BigInt::from(u0);
    for i in 1..=n {
        let term = BigInt::from(u0) + BigInt::from(r) * i;
        lcm = lcm.lcm(&term);
    }
    let bound = BigInt::from(u0) * BigInt::from(r + 1).pow(n);
    Ok(BoundCertificate::from_sides(
        BoundKind::HongFeng,
        n,
        1,
        r,
        u0,
        lcm.pow(4),
        bound.pow(4),
    ))
}

/// Which of the two per-step bases is larger, decided exactly: the
/// `sqrt(r)(A+1)` form wins iff `4B > r (A+1)^2` (the bases compare as
/// their squared reciprocals).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strength {
    Theorem2Stronger,
    Theorem3Stronger,
    Equal,
}

pub fn strength_compare(p: &Progression) -> Result<Strength> {
    p.base().require_at_least_two()?;
    let BoundConstants { a, b } = bound_constants(p);
    let four_b = BigRational::from_integer(BigInt::from(4)) * b;
    let a_plus_1 = a + BigRational::one();
    let r_a1_squared = BigRational::from_integer(BigInt::from(p.r())) * &a_plus_1 * &a_plus_1;
    Ok(match four_b.cmp(&r_a1_squared) {
        std::cmp::Ordering::Greater => Strength::Theorem2Stronger,
        std::cmp::Ordering::Less => Strength::Theorem3Stronger,
        std::cmp::Ordering::Equal => Strength::Equal,
    })
}
