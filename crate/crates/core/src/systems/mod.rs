//! Semitone systems: the particle sets whose twelve-step aggregations hit a
//! family's fixed notes, derived by solving the constraints and confirmed by a
//! bounded exhaustive search.

mod enumerate;
pub mod lattice;
mod oracle;
mod verify;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::gaussian::Unity;
use crate::pitch::Pitch;
use crate::radical::RadicalTone;
use crate::scales::{AggregationSequence, Scale};
use crate::tone::Tone;

pub use enumerate::{
    enumerate_gauss2, enumerate_gauss3, enumerate_just3, enumerate_shadow2, enumerate_shadow3,
};
pub use oracle::{
    agreement, brute_force_oracle, oracle_systems, radical_in_bound, search_rows, tone_in_bound,
    Agreement, OracleFamily,
};
pub use verify::{verify_system, Check, NoteMatch, ValidationReport};

pub const DEFAULT_K_BOUND: u32 = 2;
pub const DEFAULT_ORACLE_BOUND: u32 = 8;
pub const MAX_ORACLE_BOUND: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SystemError {
    #[error("fixed-note positions must be strictly increasing within 0..=12")]
    BadPositions,
    #[error("oracle bound {0} exceeds the limit of 12")]
    BoundTooLarge(u32),
    #[error("unknown family {0:?}; expected one of just3, gauss3, gauss2, shadow3, shadow2")]
    UnknownFamily(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Just3,
    Gauss3,
    Gauss2,
    Shadow3,
    Shadow2,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Just3,
        Family::Gauss3,
        Family::Gauss2,
        Family::Shadow3,
        Family::Shadow2,
    ];

    /// Command-line spelling.
    pub fn key(self) -> &'static str {
        match self {
            Family::Just3 => "just3",
            Family::Gauss3 => "gauss3",
            Family::Gauss2 => "gauss2",
            Family::Shadow3 => "shadow3",
            Family::Shadow2 => "shadow2",
        }
    }

    pub fn from_key(s: &str) -> Result<Family, SystemError> {
        Family::ALL
            .into_iter()
            .find(|f| f.key().eq_ignore_ascii_case(s) || f.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| SystemError::UnknownFamily(s.to_string()))
    }

    /// Distinct particles, counting a conjugate pair once.
    pub fn particle_count(self) -> usize {
        match self {
            Family::Just3 | Family::Gauss3 | Family::Shadow3 => 3,
            Family::Gauss2 | Family::Shadow2 => 2,
        }
    }

    pub fn symmetry(self) -> Symmetry {
        match self {
            Family::Just3 => Symmetry::None,
            Family::Gauss3 | Family::Gauss2 => Symmetry::Conjugate,
            Family::Shadow3 | Family::Shadow2 => Symmetry::Repeat,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Just3 => "Just-3",
            Family::Gauss3 => "Gauss-3",
            Family::Gauss2 => "Gauss-2",
            Family::Shadow3 => "Shadow-3",
            Family::Shadow2 => "Shadow-2",
        })
    }
}

/// How steps 7–12 relate to steps 1–6.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    None,
    /// Step `6 + j` is the conjugate of step `j`.
    Conjugate,
    /// Step `6 + j` equals step `j`.
    Repeat,
}

/// Unknown step `X_j` of a twelve-step row, after applying the symmetry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slot {
    pub var: usize,
    pub conjugated: bool,
}

/// Run of consecutive steps between two fixed notes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment<T> {
    pub slots: Vec<Slot>,
    pub target: T,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintSet<T> {
    fixed: Vec<(usize, T)>,
    symmetry: Symmetry,
}

impl<T: Pitch> ConstraintSet<T> {
    pub fn new(fixed: Vec<(usize, T)>, symmetry: Symmetry) -> Result<Self, SystemError> {
        let increasing = fixed.windows(2).all(|w| w[0].0 < w[1].0);
        if !increasing || fixed.iter().any(|(p, _)| *p > 12) {
            return Err(SystemError::BadPositions);
        }
        Ok(ConstraintSet { fixed, symmetry })
    }

    pub fn fixed(&self) -> &[(usize, T)] {
        &self.fixed
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn target(&self, position: usize) -> Option<&T> {
        self.fixed.iter().find(|(p, _)| *p == position).map(|(_, t)| t)
    }

    pub fn variable_count(&self) -> usize {
        match self.symmetry {
            Symmetry::None => 12,
            _ => 6,
        }
    }

    /// The unknown behind step `step` (1-based).
    pub fn slot(&self, step: usize) -> Slot {
        let j = step - 1;
        match self.symmetry {
            Symmetry::None => Slot {
                var: j,
                conjugated: false,
            },
            Symmetry::Conjugate => Slot {
                var: j % 6,
                conjugated: j >= 6,
            },
            Symmetry::Repeat => Slot {
                var: j % 6,
                conjugated: false,
            },
        }
    }

    /// One segment per pair of consecutive fixed notes.
    pub fn segments(&self) -> Vec<Segment<T>> {
        self.fixed
            .windows(2)
            .map(|w| Segment {
                slots: (w[0].0 + 1..=w[1].0).map(|s| self.slot(s)).collect(),
                target: w[1].1.ratio_to(&w[0].1),
            })
            .collect()
    }
}

fn tone_constraints(fixed: &[(usize, Tone)], symmetry: Symmetry) -> ConstraintSet<Tone> {
    ConstraintSet::new(fixed.to_vec(), symmetry).expect("static positions are increasing")
}

fn r(n: i64, d: i64) -> Tone {
    Tone::ratio(n, d)
}

/// The just diatonic scale at positions 0, 2, 4, 5, 7, 9, 11, 12.
pub fn just3_constraints() -> ConstraintSet<Tone> {
    tone_constraints(
        &[
            (0, r(1, 1)),
            (2, r(9, 8)),
            (4, r(5, 4)),
            (5, r(4, 3)),
            (7, r(3, 2)),
            (9, r(5, 3)),
            (11, r(15, 8)),
            (12, r(2, 1)),
        ],
        Symmetry::None,
    )
}

pub fn gauss3_constraints() -> ConstraintSet<Tone> {
    tone_constraints(
        &[
            (0, r(1, 1)),
            (4, r(5, 4)),
            (5, r(4, 3)),
            (6, Tone::gaussian(1, 1, 1)),
            (7, r(3, 2)),
            (9, r(5, 3)),
            (12, r(2, 1)),
        ],
        Symmetry::Conjugate,
    )
}

pub fn gauss2_constraints() -> ConstraintSet<Tone> {
    tone_constraints(
        &[
            (0, r(1, 1)),
            (2, r(9, 8)),
            (5, r(4, 3)),
            (6, Tone::gaussian(1, 1, 1)),
            (7, r(3, 2)),
            (9, r(27, 16)),
            (12, r(2, 1)),
        ],
        Symmetry::Conjugate,
    )
}

/// The real counterpart of a complex constraint set: every target replaced
/// by its magnitude, so the tritone becomes `√2`.
fn shadow_of(c: &ConstraintSet<Tone>) -> ConstraintSet<RadicalTone> {
    let fixed = c
        .fixed()
        .iter()
        .map(|(p, t)| {
            let m = crate::radical::magnitude_radical(t).expect("five-limit targets");
            (*p, m)
        })
        .collect();
    ConstraintSet::new(fixed, Symmetry::Repeat).expect("same positions")
}

pub fn shadow3_constraints() -> ConstraintSet<RadicalTone> {
    shadow_of(&gauss3_constraints())
}

pub fn shadow2_constraints() -> ConstraintSet<RadicalTone> {
    shadow_of(&gauss2_constraints())
}

/// Phase data of a Gauss-3 System I variant: the particle is `ε β ζ^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Phase {
    pub unity: Unity,
    pub k: i64,
}

impl Phase {
    /// Ordering `0, 1, -1, 2, -2, …`.
    pub fn order_key(&self) -> (u64, bool) {
        (self.k.unsigned_abs(), self.k < 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variant<T> {
    pub sequence: AggregationSequence<T>,
    pub phase: Option<Phase>,
}

impl<T: Pitch> Variant<T> {
    /// The 13-note row from unison.
    pub fn row(&self) -> Scale<T> {
        Scale::unchecked(T::unison(), 0, self.sequence.clone())
    }
}

/// Canonical text of `{v, v̄}`, for grouping by particle modulo conjugation.
pub fn class_key<T: Pitch>(v: &T) -> String {
    let a = v.to_string();
    let b = v.conjugate().to_string();
    if a <= b {
        a
    } else {
        b
    }
}

/// Sorted conjugation classes of the values in a step row.
pub fn particle_signature<T: Pitch>(values: &[T]) -> Vec<String> {
    values
        .iter()
        .map(class_key)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemitoneSystem<T> {
    pub family: Family,
    pub label: String,
    /// One representative per particle, as used by the first variant.
    pub particles: Vec<crate::scales::Step<T>>,
    pub constraints: ConstraintSet<T>,
    pub variants: Vec<Variant<T>>,
}

impl<T: Pitch> SemitoneSystem<T> {
    pub fn signature(&self, variant: usize) -> Vec<String> {
        particle_signature(&self.variants[variant].sequence.values())
    }

    /// `(particle signature, step values)` for every variant.
    pub fn rows(&self) -> Vec<(Vec<String>, Vec<T>)> {
        (0..self.variants.len())
            .map(|i| (self.signature(i), self.variants[i].sequence.values()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segments_of_gauss3() {
        let c = gauss3_constraints();
        let segs = c.segments();
        assert_eq!(segs.len(), 6);
        assert_eq!(segs[0].slots.len(), 4);
        assert_eq!(segs[0].target, r(5, 4));
        assert_eq!(segs[3].slots, vec![Slot { var: 0, conjugated: true }]);
        assert_eq!(segs[4].target, r(10, 9));
    }

    #[test]
    fn shadow_targets() {
        let c = shadow3_constraints();
        assert_eq!(c.target(6), Some(&RadicalTone::from_twelfths([6, 0, 0])));
        assert_eq!(c.target(4), Some(&RadicalTone::from_integers([-2, 0, 1])));
    }

    #[test]
    fn rejects_unordered() {
        let bad = ConstraintSet::new(vec![(2, r(1, 1)), (1, r(2, 1))], Symmetry::None);
        assert_eq!(bad, Err(SystemError::BadPositions));
    }

    #[test]
    fn family_names() {
        assert_eq!(Family::from_key("Gauss-2"), Ok(Family::Gauss2));
        assert!(Family::from_key("gauss4").is_err());
    }
}
