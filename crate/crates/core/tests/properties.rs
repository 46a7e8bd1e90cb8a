//! Property suites for the crate-wide invariants: the q-calculus
//! identities, the progression lemmas, the divisibility statements and
//! the strength comparison, each checked against an independent route or
//! a brute-force oracle.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use qlcm_core::bounds::{strength_compare, Strength};
use qlcm_core::lcm::{fundamental_theorem_check, lcm_range, prefix_stream, theorem1_check};
use qlcm_core::qcalc::{q_binomial, q_factorial, q_int, QBase};
use qlcm_core::Progression;

fn base(q: i64) -> QBase {
    QBase::new(q).unwrap()
}

fn progressions() -> impl Strategy<Value = Progression> {
    (1..=6i64, 1..=6i64, 0..=6i64)
        .prop_filter_map("gcd hypotheses", |(q, r, u0)| Progression::new(q, r, u0).ok())
}

fn threshold_progressions() -> impl Strategy<Value = Progression> {
    (2..=6i64, 1..=6i64, 0..=6i64)
        .prop_filter_map("gcd hypotheses", |(q, r, u0)| Progression::new(q, r, u0).ok())
}

// [a]_q! [b]_q! divides [a+b]_q! — the integrality behind the q-binomial
// coefficients.
#[test]
fn factorial_products_divide_factorial_of_sum() {
    for q in 1..=6 {
        for a in 0..=12u32 {
            for b in 0..=12u32 {
                let product = q_factorial(a, base(q)) * q_factorial(b, base(q));
                let whole = q_factorial(a + b, base(q));
                assert!(
                    (whole % &product).is_zero(),
                    "[{a}]! [{b}]! does not divide [{}]! at q = {q}",
                    a + b
                );
            }
        }
    }
}

// q = 1 degenerates to ordinary binomial coefficients; the oracle is a
// Pascal triangle built by additions only.
#[test]
fn q1_binomials_match_pascal_triangle() {
    let mut triangle: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..=20usize {
        let previous = &triangle[n - 1];
        let mut row = vec![BigInt::one()];
        for k in 1..n {
            row.push(&previous[k - 1] + &previous[k]);
        }
        row.push(BigInt::one());
        triangle.push(row);
    }
    for (n, row) in triangle.iter().enumerate() {
        for (k, expected) in row.iter().enumerate() {
            assert_eq!(&q_binomial(n as u32, k as u32, base(1)).unwrap(), expected);
        }
    }
}

proptest! {
    #[test]
    fn q1_q_int_is_the_identity(n in 0..=200u32) {
        prop_assert_eq!(q_int(n, base(1)), BigInt::from(n));
    }

    #[test]
    fn q_binomial_symmetry(n in 0..=24u32, k in 0..=24u32, q in 1..=6i64) {
        prop_assume!(k <= n);
        prop_assert_eq!(
            q_binomial(n, k, base(q)).unwrap(),
            q_binomial(n, n - k, base(q)).unwrap()
        );
    }

    #[test]
    fn q_int_growth_recurrence(n in 0..=60u32, q in 1..=6i64) {
        prop_assert_eq!(
            q_int(n + 1, base(q)),
            BigInt::from(q) * q_int(n, base(q)) + 1
        );
    }

    #[test]
    fn gap_matches_term_difference(p in progressions(), i in 0..=40u32, j in 0..=40u32) {
        prop_assert_eq!(p.gap(i, j), (p.term(i) - p.term(j)).abs());
    }

    #[test]
    fn terms_stay_coprime_to_r_and_q(p in progressions()) {
        for n in 0..=40u32 {
            prop_assert!(p.term(n).gcd(&BigInt::from(p.r())).is_one());
            if n >= 1 {
                prop_assert!(p.term(n).gcd(&BigInt::from(p.q())).is_one());
            }
        }
    }

    // f(k) <= q^n exactly when [n-k+1]_q >= u_{k-1}, for 1 <= k <= n.
    #[test]
    fn threshold_forms_agree(p in threshold_progressions(), n in 1..=30u32) {
        let target = BigRational::from_integer(p.base().pow(n));
        for k in 1..=n {
            let by_f = p.f_eval(k as i64).unwrap() <= target;
            let by_qint = q_int(n - k + 1, p.base()) >= p.term(k - 1);
            prop_assert_eq!(by_f, by_qint);
        }
    }

    // f never grows by less than a factor q from one integer to the next.
    #[test]
    fn threshold_step_bound(p in threshold_progressions(), x in -5..=30i64) {
        let q = BigRational::from_integer(BigInt::from(p.q()));
        prop_assert!(q * p.f_eval(x - 1).unwrap() <= p.f_eval(x).unwrap());
    }

    // C_{n,k} / C_{n,k-1} = [n-k+1]_q / u_{k-1}, exactly.
    #[test]
    fn cnk_ratio_law(p in threshold_progressions(), n in 2..=25u32) {
        for k in 2..=n {
            let ratio = p.cnk(n, k).unwrap().into_value() / p.cnk(n, k - 1).unwrap().into_value();
            let expected = BigRational::new(q_int(n - k + 1, p.base()), p.term(k - 1));
            prop_assert_eq!(ratio, expected);
        }
    }

    // Each prefix lcm divides the next one.
    #[test]
    fn prefix_lcm_divides_its_successor(p in progressions()) {
        let mut previous = BigInt::one();
        for step in prefix_stream(p).take(40) {
            prop_assert!((&step.lcm % &previous).is_zero());
            previous = step.lcm;
        }
    }

    // lcm{u_1..u_n} is at least C_{n,k} for every 1 <= k <= n.
    #[test]
    fn lcm_dominates_every_cnk(p in progressions(), n in 1..=20u32) {
        let lcm = BigRational::from_integer(lcm_range(&p, 1, n).unwrap());
        for k in 1..=n {
            prop_assert!(lcm >= *p.cnk(n, k).unwrap().value());
        }
    }

    #[test]
    fn theorem1_health_on_sampled_indices(p in progressions(), n in 1..=18u32, k in 1..=18u32) {
        prop_assume!(k <= n);
        prop_assert!(theorem1_check(&p, k, n).unwrap().passed());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn fundamental_theorem_on_random_distinct_values(
        values in proptest::collection::btree_set(
            (-50i64..=50).prop_filter("nonzero", |v| *v != 0),
            2..=7,
        )
    ) {
        let values: Vec<BigInt> = values.into_iter().map(BigInt::from).collect();
        prop_assert!(fundamental_theorem_check(&values).unwrap().passed());
    }
}

// The strength comparison can never contradict the two sufficient
// conditions: offset <= 0 forces the sqrt(r) form to win (or tie), and
// offset > 2r forces the 2 sqrt(B) form to win.
#[test]
fn strength_matches_sufficient_conditions() {
    for q in 2..=6 {
        for r in 1..=6 {
            for u0 in 0..=6 {
                let Ok(p) = Progression::new(q, r, u0) else { continue };
                let offset = u0 * (q - 1) + 1 - r;
                let strength = strength_compare(&p).unwrap();
                if offset <= 0 {
                    assert_ne!(strength, Strength::Theorem3Stronger, "q={q} r={r} u0={u0}");
                }
                if offset - 2 * r > 0 {
                    assert_eq!(strength, Strength::Theorem3Stronger, "q={q} r={r} u0={u0}");
                }
            }
        }
    }
}
