//! Scales built by multiplying out aggregation sequences.

mod complex;
mod just;
mod real;

use std::fmt;

use thiserror::Error;

use crate::pitch::Pitch;
use crate::radical::RadicalTone;
use crate::tone::Tone;
use crate::vocabulary::{StepSymbol, Symbol};

pub use complex::{
    gauss2_chromatic, gauss3_chromatic, gauss3_major, gauss3_major_shifted, gauss3_phased,
    gauss3_phased_particle, minor_scale, GaussSystem, Key, MinorKey,
};
pub use just::{detect_wolves, just_chromatic, just_diatonic, modal_scale, Mode, Wolf};
pub use real::{
    equal_tempered_chromatic, fifths_down, fifths_up, heptatonic, pentatonic,
    pythagorean_chromatic, pythagorean_cycle, shadow2_chromatic, shadow3_chromatic,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScaleError {
    #[error("sequence does not close the octave: expected {expected}, reached {reached}")]
    OctaveClosure { expected: String, reached: String },
    #[error("{family} has no variant {variant}; valid variants are 0..{count}")]
    InvalidVariant {
        family: String,
        variant: usize,
        count: usize,
    },
    #[error("a heptatonic scale is required, got {0} steps")]
    Degenerate(usize),
}

/// One aggregation step: a labelled interval.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Step<T> {
    pub symbol: StepSymbol,
    pub value: T,
    pub semitones: u8,
}

impl<T: Pitch> Step<T> {
    pub fn new(symbol: StepSymbol, value: T) -> Step<T> {
        Step {
            symbol,
            value,
            semitones: symbol.semitones(),
        }
    }

    pub fn conj(&self) -> Step<T> {
        Step {
            symbol: self.symbol.conj(),
            value: self.value.conjugate(),
            semitones: self.semitones,
        }
    }
}

impl Step<Tone> {
    /// A step carrying the fixed value of `symbol`. Panics for
    /// system-relative or radical symbols.
    pub fn fixed(symbol: StepSymbol) -> Step<Tone> {
        let v = symbol
            .tone()
            .unwrap_or_else(|| panic!("{} has no fixed complex value", symbol));
        Step::new(symbol, v)
    }
}

impl Step<RadicalTone> {
    pub fn fixed_radical(symbol: Symbol) -> Step<RadicalTone> {
        let v = symbol
            .radical()
            .unwrap_or_else(|| panic!("{} has no fixed real value", symbol.glyph()));
        Step::new(StepSymbol::plain(symbol), v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AggregationSequence<T> {
    pub steps: Vec<Step<T>>,
}

impl<T: Pitch> AggregationSequence<T> {
    pub fn new(steps: Vec<Step<T>>) -> Self {
        AggregationSequence { steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn symbols(&self) -> Vec<StepSymbol> {
        self.steps.iter().map(|s| s.symbol).collect()
    }

    pub fn values(&self) -> Vec<T> {
        self.steps.iter().map(|s| s.value.clone()).collect()
    }

    pub fn product(&self) -> T {
        self.steps
            .iter()
            .fold(T::unison(), |acc, s| acc.compose(&s.value))
    }

    /// Six steps followed by their conjugates, in the same order.
    pub fn conjugate_symmetric(first: Vec<Step<T>>) -> Self {
        let second: Vec<_> = first.iter().map(Step::conj).collect();
        AggregationSequence::new(first.into_iter().chain(second).collect())
    }

    /// Six steps repeated once.
    pub fn repeated(first: Vec<Step<T>>) -> Self {
        let second = first.clone();
        AggregationSequence::new(first.into_iter().chain(second).collect())
    }

    /// Rotate left by `k` positions.
    pub fn rotated(&self, k: usize) -> Self {
        let mut steps = self.steps.clone();
        if !steps.is_empty() {
            steps.rotate_left(k % self.steps.len());
        }
        AggregationSequence::new(steps)
    }
}

impl<T> fmt::Display for AggregationSequence<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.steps.iter().map(|s| s.symbol.to_string()).collect();
        write!(f, "{}", names.join(" "))
    }
}

const NOTE_NAMES: [&str; 12] = ["C", "C♯", "D", "D♯", "E", "F", "F♯", "G", "G♯", "A", "A♯", "B"];

/// Sharp-spelled name of the note `position` semitones above middle C.
/// Octaves above carry `′`, octaves below carry `,`.
pub fn note_name(position: i32) -> String {
    let pc = position.rem_euclid(12) as usize;
    let octave = position.div_euclid(12);
    let marks = if octave >= 0 {
        "′".repeat(octave as usize)
    } else {
        ",".repeat(octave.unsigned_abs() as usize)
    };
    format!("{}{}", NOTE_NAMES[pc], marks)
}

/// A root and the cumulative products of its aggregation sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scale<T> {
    pub root: T,
    pub root_position: i32,
    pub steps: AggregationSequence<T>,
    pub notes: Vec<T>,
    pub note_names: Vec<String>,
}

impl<T: Pitch> Scale<T> {
    /// Multiply out without checking octave closure.
    pub fn unchecked(root: T, root_position: i32, steps: AggregationSequence<T>) -> Scale<T> {
        let mut notes = vec![root.clone()];
        let mut positions = vec![root_position];
        for s in &steps.steps {
            let next = notes.last().expect("nonempty").compose(&s.value);
            notes.push(next);
            positions.push(positions.last().expect("nonempty") + i32::from(s.semitones));
        }
        Scale {
            root,
            root_position,
            steps,
            note_names: positions.into_iter().map(note_name).collect(),
            notes,
        }
    }

    pub fn closes_octave(&self) -> bool {
        self.steps.is_empty() || *self.last() == self.root.compose(&T::octave())
    }

    pub fn last(&self) -> &T {
        self.notes.last().expect("a scale has at least its root")
    }

    pub fn len(&self) -> usize {
        self.notes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Note by sharp-spelled name, e.g. `"G♯"` or `"C′"`.
    pub fn note(&self, name: &str) -> Option<&T> {
        self.note_names
            .iter()
            .position(|n| n == name)
            .map(|i| &self.notes[i])
    }

    /// Notes divided by the root.
    pub fn degrees(&self) -> Vec<T> {
        self.notes.iter().map(|n| n.ratio_to(&self.root)).collect()
    }

    pub fn map<U: Pitch>(&self, f: impl Fn(&T) -> U) -> Scale<U> {
        let steps = AggregationSequence::new(
            self.steps
                .steps
                .iter()
                .map(|s| Step {
                    symbol: s.symbol,
                    value: f(&s.value),
                    semitones: s.semitones,
                })
                .collect(),
        );
        Scale {
            root: f(&self.root),
            root_position: self.root_position,
            steps,
            notes: self.notes.iter().map(&f).collect(),
            note_names: self.note_names.clone(),
        }
    }

    /// The scale starting on the sixth degree, keeping the same notes.
    pub fn aeolian(&self) -> Result<Scale<T>, ScaleError> {
        if self.steps.len() != 7 {
            return Err(ScaleError::Degenerate(self.steps.len()));
        }
        let shift: i32 = self.steps.steps[..5]
            .iter()
            .map(|s| i32::from(s.semitones))
            .sum();
        aggregate_at(
            self.notes[5].clone(),
            self.root_position + shift,
            self.steps.rotated(5),
        )
    }
}

/// Aggregate from `root` at middle C.
pub fn aggregate<T: Pitch>(root: T, seq: AggregationSequence<T>) -> Result<Scale<T>, ScaleError> {
    aggregate_at(root, 0, seq)
}

/// Aggregate from `root`, naming notes from `position` semitones above middle C.
pub fn aggregate_at<T: Pitch>(
    root: T,
    position: i32,
    seq: AggregationSequence<T>,
) -> Result<Scale<T>, ScaleError> {
    let s = Scale::unchecked(root, position, seq);
    if s.closes_octave() {
        Ok(s)
    } else {
        Err(ScaleError::OctaveClosure {
            expected: s.root.compose(&T::octave()).to_string(),
            reached: s.last().to_string(),
        })
    }
}

pub(crate) fn fixed_steps(symbols: &[StepSymbol]) -> Vec<Step<Tone>> {
    symbols.iter().map(|s| Step::fixed(*s)).collect()
}

pub(crate) fn radical_steps(symbols: &[Symbol]) -> Vec<Step<RadicalTone>> {
    symbols.iter().map(|s| Step::fixed_radical(*s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        assert_eq!(note_name(0), "C");
        assert_eq!(note_name(6), "F♯");
        assert_eq!(note_name(12), "C′");
        assert_eq!(note_name(26), "D′′");
        assert_eq!(note_name(-3), "A,");
    }

    #[test]
    fn empty_aggregation() {
        let s = aggregate(Tone::one(), AggregationSequence::new(vec![])).unwrap();
        assert_eq!(s.notes, vec![Tone::one()]);
        assert!(matches!(s.aeolian(), Err(ScaleError::Degenerate(0))));
    }

    #[test]
    fn closure_failure() {
        let seq = AggregationSequence::new(fixed_steps(&[StepSymbol::plain(Symbol::X)]));
        assert!(matches!(
            aggregate(Tone::one(), seq),
            Err(ScaleError::OctaveClosure { .. })
        ));
    }
}
