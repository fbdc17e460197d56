use std::fmt;

use crate::tone::Tone;
use crate::vocabulary::{StepSymbol, Symbol};

use super::{aggregate, fixed_steps, AggregationSequence, Scale, Step};

const X: StepSymbol = StepSymbol::plain(Symbol::X);
const Y: StepSymbol = StepSymbol::plain(Symbol::Y);
const Z: StepSymbol = StepSymbol::plain(Symbol::Z);

pub fn just_diatonic() -> Scale<Tone> {
    modal_scale(Mode::Ionian)
}

/// The chromatic scale from the semitones `p = 16/15`, `q = 135/128`,
/// `r = 25/24`.
pub fn just_chromatic() -> Scale<Tone> {
    let p = Step::new(StepSymbol::plain(Symbol::P), Tone::ratio(16, 15));
    let q = Step::new(StepSymbol::plain(Symbol::Q), Tone::ratio(135, 128));
    let r = Step::new(StepSymbol::plain(Symbol::R), Tone::ratio(25, 24));
    let order = [&p, &q, &p, &r, &p, &q, &p, &p, &r, &p, &q, &p];
    let seq = AggregationSequence::new(order.into_iter().cloned().collect());
    aggregate(Tone::one(), seq).expect("just chromatic closes")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Ionian,
    Dorian,
    Phrygian,
    Lydian,
    Mixolydian,
    Aeolian,
    Locrian,
}

impl Mode {
    pub const ALL: [Mode; 7] = [
        Mode::Ionian,
        Mode::Dorian,
        Mode::Phrygian,
        Mode::Lydian,
        Mode::Mixolydian,
        Mode::Aeolian,
        Mode::Locrian,
    ];

    pub fn atoms(self) -> [StepSymbol; 7] {
        match self {
            Mode::Ionian => [X, Y, Z, X, Y, X, Z],
            Mode::Dorian => [X, Z, Y, X, Y, Z, X],
            Mode::Phrygian => [Z, X, Y, X, Z, Y, X],
            Mode::Lydian => [X, Y, X, Z, Y, X, Z],
            Mode::Mixolydian => [X, Y, Z, X, Y, Z, X],
            Mode::Aeolian => [X, Z, Y, X, Z, Y, X],
            Mode::Locrian => [Z, X, Y, Z, X, Y, X],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::Ionian => "ionian",
            Mode::Dorian => "dorian",
            Mode::Phrygian => "phrygian",
            Mode::Lydian => "lydian",
            Mode::Mixolydian => "mixolydian",
            Mode::Aeolian => "aeolian",
            Mode::Locrian => "locrian",
        }
    }

    pub fn from_name(name: &str) -> Option<Mode> {
        Mode::ALL.into_iter().find(|m| m.name() == name)
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn modal_scale(mode: Mode) -> Scale<Tone> {
    let seq = AggregationSequence::new(fixed_steps(&mode.atoms()));
    aggregate(Tone::one(), seq).expect("X³Y²Z² = 2")
}

/// A pair of notes whose ratio is a grave fifth or an acute fourth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wolf {
    pub lower: String,
    pub upper: String,
    pub interval: Tone,
}

pub fn detect_wolves(s: &Scale<Tone>) -> Vec<Wolf> {
    let wolves = [Tone::ratio(40, 27), Tone::ratio(27, 20)];
    let mut out = Vec::new();
    for i in 0..s.notes.len() {
        for j in i + 1..s.notes.len() {
            let q = &s.notes[j] / &s.notes[i];
            if wolves.contains(&q) {
                out.push(Wolf {
                    lower: s.note_names[i].clone(),
                    upper: s.note_names[j].clone(),
                    interval: q,
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diatonic_values() {
        let s = just_diatonic();
        let expect = [(1, 1), (9, 8), (5, 4), (4, 3), (3, 2), (5, 3), (15, 8), (2, 1)];
        let want: Vec<Tone> = expect.iter().map(|(n, d)| Tone::ratio(*n, *d)).collect();
        assert_eq!(s.notes, want);
        assert_eq!(s.note_names[4], "G");
    }

    #[test]
    fn chromatic_values() {
        let s = just_chromatic();
        let expect = [
            (1, 1),
            (16, 15),
            (9, 8),
            (6, 5),
            (5, 4),
            (4, 3),
            (45, 32),
            (3, 2),
            (8, 5),
            (5, 3),
            (16, 9),
            (15, 8),
            (2, 1),
        ];
        let want: Vec<Tone> = expect.iter().map(|(n, d)| Tone::ratio(*n, *d)).collect();
        assert_eq!(s.notes, want);
    }

    #[test]
    fn modes() {
        assert_eq!(modal_scale(Mode::Lydian).notes[3], Tone::ratio(45, 32));
        assert_eq!(modal_scale(Mode::Locrian).notes[4], Tone::ratio(64, 45));
        assert_eq!(modal_scale(Mode::Dorian).notes[6], Tone::ratio(16, 9));
        for m in Mode::ALL {
            assert_eq!(modal_scale(m).notes[7], Tone::two());
        }
    }

    #[test]
    fn wolves() {
        let w = detect_wolves(&just_diatonic());
        assert!(w.iter().any(|w| w.lower == "D" && w.upper == "A" && w.interval == Tone::ratio(40, 27)));
        let grave = AggregationSequence::new(fixed_steps(&[Y, X, Z, X, Y, X, Z]));
        let s = aggregate(Tone::one(), grave).unwrap();
        assert_eq!(s.notes[1], Tone::ratio(10, 9));
        let w = detect_wolves(&s);
        assert!(w.iter().any(|w| w.lower == "D" && w.upper == "G" && w.interval == Tone::ratio(27, 20)));
    }
}
