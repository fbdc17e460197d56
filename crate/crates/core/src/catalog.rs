//! Named intervals in order of magnitude.

use crate::pitch::{Pitch, Value};
use crate::tone::Tone;
use crate::vocabulary::Symbol;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalEntry {
    pub name: &'static str,
    /// Greek or Latin label, when the interval has one.
    pub glyph: Option<&'static str>,
    /// The step symbol whose fixed value this is.
    pub step: Option<Symbol>,
    pub value: Value,
    pub annotation: Option<&'static str>,
}

impl IntervalEntry {
    /// For display and ordering only.
    pub fn magnitude(&self) -> f64 {
        self.value.magnitude()
    }
}

/// Recorded against the minor complex semitone: the listing prints
/// `(1/3)(1+i)`, which has magnitude `√2/3` and cannot sit between σ and
/// 135/128; `(1/3)(3+i)` does, and is the value for which `αβ = γ`.
pub const BETA_ANNOTATION: &str =
    "listed as (1/3)(1+i); the value used is (1/3)(3+i), which has the stated \
     position in magnitude order and satisfies alpha*beta = gamma";

const UNITY_ANNOTATION: &str = "stands for all four unities 1, i, -1, -i";

fn q(n: i64, d: i64) -> Tone {
    Tone::ratio(n, d)
}

fn c(re: i64, im: i64, d: i64) -> Tone {
    Tone::gaussian(re, im, d)
}

type Row = (Tone, &'static str, Option<&'static str>);

fn rows() -> Vec<Row> {
    vec![
        (q(1, 1), "unity", Some("ε")),
        (c(3, 4, 5), "five-limit phase factor", Some("ζ")),
        (q(81, 80), "syntonic comma", Some("κ")),
        (q(25, 24), "minor chromatic semitone, small half tone", Some("ρ")),
        (c(20, 20, 27), "grave complex semitone", Some("α′")),
        (q(256, 243), "minor Pythagorean semitone, diesis", Some("σ")),
        (c(3, 1, 3), "minor complex semitone", Some("β")),
        (q(135, 128), "major chromatic semitone, major limma", None),
        (c(3, 3, 4), "major complex semitone", Some("α")),
        (q(16, 15), "minor diatonic semitone", Some("Z")),
        (q(2187, 2048), "major Pythagorean semitone, apotome", Some("τ")),
        (q(27, 25), "major diatonic semitone", None),
        (q(10, 9), "minor whole tone", Some("Y")),
        (c(1, 2, 2), "minor complex whole tone", Some("γ")),
        (q(9, 8), "major whole tone", Some("X")),
        (c(4, 4, 5), "major complex whole tone", Some("δ")),
        (c(5, 5, 6), "complex minor third", None),
        (q(32, 27), "minor Pythagorean third", None),
        (c(27, 27, 32), "complex minor Pythagorean third", None),
        (q(6, 5), "minor third", None),
        (q(5, 4), "major third", None),
        (q(81, 64), "major Pythagorean third", None),
        (q(4, 3), "perfect fourth", None),
        (q(27, 20), "acute fourth", None),
        (q(25, 18), "alternate tritone", None),
        (q(1024, 729), "Pythagorean tritone", None),
        (q(45, 32), "diatonic tritone", None),
        (c(1, 1, 1), "complex tritone", Some("ξ")),
        (q(64, 45), "complementary diatonic tritone", None),
        (q(36, 25), "complementary alternate tritone", None),
        (q(40, 27), "grave fifth", None),
        (q(3, 2), "perfect fifth", None),
        (q(25, 16), "augmented fifth", None),
        (q(128, 81), "minor Pythagorean sixth", None),
        (c(3, -1, 2), "complex minor sixth", None),
        (c(9, 9, 8), "complex minor Pythagorean sixth", None),
        (q(8, 5), "minor sixth", None),
        (q(5, 3), "major sixth", None),
        (q(27, 16), "major Pythagorean sixth", None),
        (c(5, 5, 4), "complex minor seventh", None),
        (q(16, 9), "minor Pythagorean seventh", None),
        (c(81, 81, 64), "complex minor Pythagorean seventh", None),
        (q(9, 5), "minor seventh", None),
        (q(15, 8), "major seventh", None),
        (c(4, 4, 3), "complex major seventh", None),
        (q(243, 128), "major Pythagorean seventh", None),
        (q(2, 1), "octave", None),
    ]
}

/// The fixed-valued step symbol equal to `t`.
fn step_of(t: &Tone) -> Option<Symbol> {
    Symbol::ALL
        .into_iter()
        .find(|s| s.tone().as_ref() == Some(t))
}

pub fn all_entries() -> Vec<IntervalEntry> {
    rows()
        .into_iter()
        .map(|(t, name, glyph)| {
            let annotation = match name {
                "minor complex semitone" => Some(BETA_ANNOTATION),
                "unity" => Some(UNITY_ANNOTATION),
                _ => None,
            };
            IntervalEntry {
                name,
                glyph,
                step: step_of(&t),
                value: Value::Tone(t),
                annotation,
            }
        })
        .collect()
}

pub fn lookup_by_name(name: &str) -> Option<IntervalEntry> {
    all_entries()
        .into_iter()
        .find(|e| e.name.eq_ignore_ascii_case(name) || e.glyph == Some(name))
}

/// Entries equal to `v` up to a unity (complex) or exactly (radical).
pub fn lookup_by_tone(v: &Value) -> Vec<IntervalEntry> {
    all_entries()
        .into_iter()
        .filter(|e| match (&e.value, v) {
            (Value::Tone(a), Value::Tone(b)) => a.associated(b),
            (a, b) => a == b,
        })
        .collect()
}

/// The four just values for F♯.
pub fn tritone_candidates() -> Vec<Tone> {
    vec![q(45, 32), q(64, 45), q(25, 18), q(36, 25)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_order() {
        let e = all_entries();
        assert_eq!(e.len(), 47);
        for w in e.windows(2) {
            assert!(w[0].magnitude() <= w[1].magnitude(), "{} > {}", w[0].name, w[1].name);
        }
        let names: std::collections::BTreeSet<_> = e.iter().map(|x| x.name).collect();
        assert_eq!(names.len(), 47);
    }

    #[test]
    fn lookups() {
        let hits = lookup_by_tone(&Value::Tone(c(1, -1, 1)));
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0].name, "complex tritone");
        assert_eq!(lookup_by_tone(&Value::Tone(q(45, 32)))[0].name, "diatonic tritone");
        assert!(lookup_by_tone(&Value::Tone(q(7, 6))).is_empty());
        assert_eq!(lookup_by_name("syntonic comma").unwrap().value, Value::Tone(q(81, 80)));
    }

    #[test]
    fn fixed_symbols_resolve_once() {
        let e = all_entries();
        for s in Symbol::ALL {
            if let Some(t) = s.tone() {
                let n = e.iter().filter(|x| x.value == Value::Tone(t.clone())).count();
                assert_eq!(n, 1, "{}", s.glyph());
                assert_eq!(e.iter().filter(|x| x.step == Some(s)).count(), 1);
            }
        }
    }

    #[test]
    fn tritone_relations() {
        let t = tritone_candidates();
        assert_eq!(t.len(), 4);
        assert_eq!(&t[0] / &t[2], q(81, 80));
        assert_eq!(&t[0] * &t[1], Tone::two());
    }
}
