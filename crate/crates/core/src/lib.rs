//! Exact arithmetic for least common multiples of q-arithmetic
//! progressions.
//!
//! A q-arithmetic progression is the sequence `u_n = r [n]_q + u0` built
//! on the q-integer `[n]_q = (q^n - 1)/(q - 1)` (with `[n]_1 = n`), for
//! positive integers q, r and a nonnegative u0 with
//! `gcd(u0, r) = gcd(u1, q) = 1`. At q = 1 it degenerates to the ordinary
//! arithmetic progression; at r = 1, u0 = 0 it is the q-integers
//! themselves, e.g. the Mersenne numbers `2^n - 1`.
//!
//! The crate provides, all over arbitrary-precision integers and
//! rationals:
//!
//! - [`qcalc`]: q-integers, q-factorials, q-binomial coefficients;
//! - [`progression`]: validated progressions, the rational family
//!   `C_{n,k} = u_k ... u_n / [n-k]_q!`, the threshold function and its
//!   maximizer indices;
//! - [`lcm`]: exact lcm folds and the divisibility statements, chief
//!   among them that `lcm{u_k..u_n}` is an integer multiple of `C_{n,k}`;
//! - [`bounds`]: effective lower bounds on `lcm{u_1..u_n}`, each decided
//!   by comparing two denominator-cleared fourth powers — never by
//!   floating point;
//! - [`verifier`]: the lemma property suites and a deterministic,
//!   parallel grid-sweep driver.
//!
//! Floating point appears only in display diagnostics (`slack_log2` and
//! the log-scale table columns of the CLI).

pub mod approx;
pub mod bounds;
pub mod error;
pub mod lcm;
pub mod progression;
pub mod qcalc;
pub mod verdict;
pub mod verifier;

pub use error::{Error, Result};
pub use progression::{CnkValue, GeometricShift, Progression};
pub use qcalc::QBase;
pub use verdict::Verdict;
