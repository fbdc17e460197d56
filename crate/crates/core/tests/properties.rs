//! Randomised and exhaustive checks of the algebra and the expression language.

mod support;

use proptest::prelude::*;

use support::*;
use tonality::expr::symbol_value;
use tonality::vocabulary::Symbol;
use tonality::{Tone, Value};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn factorization_multiplies_back((a, b) in gaussian_in_disc()) {
        check_factorization(a, b)?;
    }
}

#[test]
fn primality_matches_trial_division() {
    let n = primality_sweep(1000).unwrap();
    assert!(n > 3000, "{n}");
}

#[test]
fn phase_factors_reconstruct() {
    assert_eq!(phase_sweep(6).unwrap(), 4 * 13);
    assert!(Tone::ratio(9, 8).phase_decompose().is_err());
    assert!(Tone::gaussian(5, 12, 13).phase_decompose().is_err());
}

#[test]
fn symbols_resolve_both_spellings() {
    for s in Symbol::ALL {
        assert_eq!(symbol_value(s.ascii()), s.value(), "{}", s.ascii());
        assert_eq!(symbol_value(s.glyph()), s.value(), "{}", s.glyph());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn tone_text_reparses(t in tone_strategy()) {
        check_value_text(Value::Tone(t))?;
    }

    #[test]
    fn radical_text_reparses(r in radical_strategy()) {
        check_value_text(Value::from(r))?;
    }

    #[test]
    fn expression_render_reparses(text in expr_text()) {
        check_expression(&text)?;
    }
}
