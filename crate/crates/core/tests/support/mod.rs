//! Strategies and oracles shared by the property suites and the acceptance run.
#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use tonality::expr::{eval_str, parse_expression};
use tonality::gaussian::{factor, is_prime};
use tonality::{GaussianInteger, RadicalTone, Tone, Unity, Value};

pub const NORM_LIMIT: i64 = 1_000_000;

pub fn gaussian_in_disc() -> impl Strategy<Value = (i64, i64)> {
    (-1000i64..=1000, -1000i64..=1000).prop_filter("nonzero, norm within limit", |(a, b)| {
        (*a, *b) != (0, 0) && a * a + b * b <= NORM_LIMIT
    })
}

pub fn check_factorization(a: i64, b: i64) -> Result<(), TestCaseError> {
    let g = GaussianInteger::new(a, b);
    let f = factor(&g).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(f.product(), g.clone());
    let mut norm = BigInt::from(1);
    for (p, e) in &f.powers {
        prop_assert!(is_prime(p.value()), "{} is not prime", p);
        norm *= p.norm().pow(*e);
    }
    prop_assert_eq!(norm, g.norm());
    Ok(())
}

/// Whether `d` divides `g`, in plain integer arithmetic.
fn divides(d: (i64, i64), g: (i64, i64)) -> bool {
    let n = d.0 * d.0 + d.1 * d.1;
    let re = g.0 * d.0 + g.1 * d.1;
    let im = g.1 * d.0 - g.0 * d.1;
    re % n == 0 && im % n == 0
}

/// Prime iff the norm exceeds 1 and no divisor has norm strictly between.
pub fn trial_division_prime(g: (i64, i64)) -> bool {
    let n = g.0 * g.0 + g.1 * g.1;
    if n <= 1 {
        return false;
    }
    let r = (n as f64).sqrt() as i64 + 1;
    for a in -r..=r {
        for b in -r..=r {
            let m = a * a + b * b;
            if m > 1 && m < n && divides((a, b), g) {
                return false;
            }
        }
    }
    true
}

/// Every Gaussian integer of norm at most `limit`; returns the number checked.
pub fn primality_sweep(limit: i64) -> Result<usize, String> {
    let r = (limit as f64).sqrt() as i64;
    let mut n = 0;
    for a in -r..=r {
        for b in -r..=r {
            if a * a + b * b > limit {
                continue;
            }
            let expect = trial_division_prime((a, b));
            if is_prime(&GaussianInteger::new(a, b)) != expect {
                return Err(format!("{a}+{b}i: trial division says {expect}"));
            }
            n += 1;
        }
    }
    Ok(n)
}

/// `ε ((3+4i)/5)^k` for every unity and `|k| ≤ bound`; returns the count.
pub fn phase_sweep(bound: i64) -> Result<usize, String> {
    let theta = Tone::gaussian(3, 4, 5);
    let mut n = 0;
    for u in [Unity::One, Unity::I, Unity::MinusOne, Unity::MinusI] {
        for k in -bound..=bound {
            let t = &Tone::from_unity(u) * &theta.pow(k);
            let got = t.phase_decompose().map_err(|e| format!("{t}: {e}"))?;
            if got != (u, k) || &Tone::from_unity(got.0) * &theta.pow(got.1) != t {
                return Err(format!("{t} decomposed as {:?}", got));
            }
            n += 1;
        }
    }
    Ok(n)
}

pub fn tone_strategy() -> impl Strategy<Value = Tone> {
    (-60i64..=60, -60i64..=60, 1i64..=60)
        .prop_filter("nonzero", |(a, b, _)| (*a, *b) != (0, 0))
        .prop_map(|(a, b, d)| Tone::gaussian(a, b, d))
}

pub fn radical_strategy() -> impl Strategy<Value = RadicalTone> {
    [-40i64..=40, -40i64..=40, -40i64..=40].prop_map(RadicalTone::from_twelfths)
}

const SYMBOLS: [&str; 12] = [
    "alpha", "beta", "gamma", "delta", "xi", "kappa", "sigma", "X", "Y", "Z", "theta", "psi",
];

/// Random expression text; evaluation may legitimately fail.
pub fn expr_text() -> impl Strategy<Value = String> {
    let leaf = prop_oneof![
        (1u32..=40).prop_map(|n| n.to_string()),
        (1u32..=9, 1u32..=9).prop_map(|(a, b)| format!("({a}+{b}i)")),
        (0..SYMBOLS.len()).prop_map(|i| SYMBOLS[i].to_string()),
        (0..SYMBOLS.len(), -3i32..=3).prop_map(|(i, k)| format!("{}^{k}", SYMBOLS[i])),
        Just("i".to_string()),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a} * {b}")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a}/{b}")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a} + {b})")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a}-{b})")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a} {b}")),
            inner.clone().prop_map(|a| format!("conj({a})")),
            inner.clone().prop_map(|a| format!("-{a}")),
            (inner, -2i32..=2).prop_map(|(a, k)| format!("({a})^{k}")),
        ]
    })
}

/// Parse, render, parse again; both trees and both values must agree.
pub fn check_expression(text: &str) -> Result<(), TestCaseError> {
    let e = parse_expression(text).map_err(|e| TestCaseError::fail(format!("{text}: {e}")))?;
    let rendered = e.to_string();
    let again = parse_expression(&rendered)
        .map_err(|e| TestCaseError::fail(format!("{rendered}: {e}")))?;
    prop_assert_eq!(&again.to_string(), &rendered);
    match (eval_str(text), eval_str(&rendered)) {
        (Ok(x), Ok(y)) => {
            prop_assert_eq!(&x, &y);
            // The value's own text form is a fixed point too.
            prop_assert_eq!(eval_str(&x.to_string()).ok(), Some(x));
        }
        (Err(x), Err(y)) => prop_assert_eq!(x.kind, y.kind),
        (x, y) => prop_assert!(false, "{:?} vs {:?}", x, y),
    }
    Ok(())
}

pub fn check_value_text(v: Value) -> Result<(), TestCaseError> {
    prop_assert_eq!(eval_str(&v.to_string()).ok(), Some(v));
    Ok(())
}

/// A seeded runner, so the acceptance output is reproducible.
pub fn deterministic(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        proptest::test_runner::TestRng::deterministic_rng(proptest::test_runner::RngAlgorithm::ChaCha),
    )
}
