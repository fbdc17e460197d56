//! The published chromatic rows as exact data, and a cell-by-cell
//! comparison against the rows the scale builders generate.

use std::fmt;

use crate::pitch::{Pitch, Value};
use crate::radical::RadicalTone;
use crate::scales::{
    gauss2_chromatic, gauss3_chromatic, pythagorean_chromatic, shadow2_chromatic, GaussSystem,
};
use crate::tone::Tone;

/// Which builder a column should agree with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Gauss3(GaussSystem, usize),
    Gauss2(usize),
    Shadow2(GaussSystem, usize),
    Pythagorean,
}

impl Source {
    pub fn generate(self) -> Vec<Value> {
        fn tones(s: crate::scales::Scale<Tone>) -> Vec<Value> {
            s.notes.into_iter().map(Value::Tone).collect()
        }
        match self {
            Source::Gauss3(sys, v) => tones(gauss3_chromatic(sys, v).expect("tabulated variant")),
            Source::Gauss2(v) => tones(gauss2_chromatic(v).expect("tabulated variant")),
            Source::Shadow2(sys, v) => shadow2_chromatic(sys, v)
                .expect("tabulated variant")
                .notes
                .into_iter()
                .map(Value::from)
                .collect(),
            Source::Pythagorean => tones(pythagorean_chromatic()),
        }
    }
}

/// A printed cell known to be wrong, with the value the arithmetic gives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Misprint {
    pub index: usize,
    pub corrected: Value,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceColumn {
    /// Which published grouping the column belongs to.
    pub group: &'static str,
    pub heading: &'static str,
    pub source: Source,
    /// C through C′ as printed.
    pub printed: Vec<Value>,
    pub misprints: Vec<Misprint>,
}

pub const NOTE_NAMES: [&str; 13] = [
    "C", "C♯", "D", "D♯", "E", "F", "F♯", "G", "G♯", "A", "A♯", "B", "C′",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellMismatch {
    pub index: usize,
    pub printed: Value,
    pub generated: Value,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnCheck {
    /// Which published grouping the column belongs to.
    pub group: &'static str,
    pub heading: &'static str,
    pub exact: usize,
    /// Misprinted cells where the generated value is the documented correction.
    pub documented: Vec<usize>,
    pub mismatches: Vec<CellMismatch>,
}

impl ColumnCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for ColumnCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]: {} exact", self.group, self.heading, self.exact)?;
        if !self.documented.is_empty() {
            let names: Vec<_> = self.documented.iter().map(|i| NOTE_NAMES[*i]).collect();
            write!(f, ", misprint at {}", names.join(", "))?;
        }
        for m in &self.mismatches {
            write!(
                f,
                "\n  {}: printed {}, generated {}",
                NOTE_NAMES[m.index], m.printed, m.generated
            )?;
        }
        Ok(())
    }
}

fn associated(a: &Value, b: &Value) -> bool {
    match (a, b) {
        (Value::Tone(x), Value::Tone(y)) => x.associated(y),
        _ => a == b,
    }
}

impl ReferenceColumn {
    pub fn check(&self) -> ColumnCheck {
        let generated = self.source.generate();
        let mut out = ColumnCheck {
            group: self.group,
            heading: self.heading,
            exact: 0,
            documented: Vec::new(),
            mismatches: Vec::new(),
        };
        let len = self.printed.len().max(generated.len());
        for i in 0..len {
            let (Some(p), Some(g)) = (self.printed.get(i), generated.get(i)) else {
                out.mismatches.push(CellMismatch {
                    index: i.min(12),
                    printed: self.printed.get(i).cloned().unwrap_or(Value::Tone(Tone::one())),
                    generated: generated.get(i).cloned().unwrap_or(Value::Tone(Tone::one())),
                });
                continue;
            };
            match self.misprints.iter().find(|m| m.index == i) {
                // A misprint only counts as documented while the printed cell
                // stays wrong and the correction is what the builder produces.
                Some(m) if p != g && *g == m.corrected && associated(p, g) => {
                    out.documented.push(i)
                }
                None if p == g => out.exact += 1,
                _ => out.mismatches.push(CellMismatch {
                    index: i,
                    printed: p.clone(),
                    generated: g.clone(),
                }),
            }
        }
        out
    }
}

fn q(n: i64, d: i64) -> Value {
    Value::Tone(Tone::ratio(n, d))
}

fn c(re: i64, im: i64, d: i64) -> Value {
    Value::Tone(Tone::gaussian(re, im, d))
}

fn tw(e: [i64; 3]) -> Value {
    Value::from(RadicalTone::from_twelfths(e))
}

/// Rows of a Gauss-3 column that differ only at D, D♯, G♯.
fn gauss3_row(d: Value, d_sharp: Value, g_sharp: Value) -> Vec<Value> {
    vec![
        q(1, 1),
        c(3, 3, 4),
        d,
        d_sharp,
        q(5, 4),
        q(4, 3),
        c(1, 1, 1),
        q(3, 2),
        g_sharp,
        q(5, 3),
        c(5, 5, 4),
        c(4, 4, 3),
        q(2, 1),
    ]
}

fn column(
    group: &'static str,
    heading: &'static str,
    source: Source,
    printed: Vec<Value>,
) -> ReferenceColumn {
    ReferenceColumn {
        group,
        heading,
        source,
        printed,
        misprints: Vec::new(),
    }
}

fn gauss3_columns() -> Vec<ReferenceColumn> {
    use GaussSystem::*;
    let d_sharp = || c(5, 5, 6);
    let mut cols = vec![
        column(
            "gauss3 systems",
            "System I",
            Source::Gauss3(I, 0),
            gauss3_row(c(1, 2, 2), d_sharp(), c(3, -1, 2)),
        ),
        column(
            "gauss3 systems",
            "System II",
            Source::Gauss3(II, 0),
            gauss3_row(q(9, 8), d_sharp(), c(9, 9, 8)),
        ),
        column(
            "gauss3 systems",
            "System III",
            Source::Gauss3(III, 1),
            gauss3_row(c(4, 4, 5), d_sharp(), q(8, 5)),
        ),
        column(
            "gauss3 II variants",
            "X2 = conj(alpha), X3 = alpha'",
            Source::Gauss3(II, 0),
            gauss3_row(q(9, 8), d_sharp(), c(9, 9, 8)),
        ),
        column(
            "gauss3 II variants",
            "X2 = alpha, X3 = conj(alpha')",
            Source::Gauss3(II, 1),
            gauss3_row(c(0, 9, 8), c(5, -5, 6), c(9, -9, 8)),
        ),
        column(
            "gauss3 II variants",
            "X2 = alpha', X3 = conj(alpha)",
            Source::Gauss3(II, 2),
            gauss3_row(c(0, 10, 9), c(5, -5, 6), c(10, -10, 9)),
        ),
        column(
            "gauss3 II variants",
            "X2 = conj(alpha'), X3 = alpha",
            Source::Gauss3(II, 3),
            gauss3_row(q(10, 9), d_sharp(), c(10, 10, 9)),
        ),
        column(
            "gauss3 III variants",
            "X2 = rho, X3 = Z",
            Source::Gauss3(III, 0),
            gauss3_row(c(25, 25, 32), d_sharp(), q(25, 16)),
        ),
        column(
            "gauss3 III variants",
            "X2 = Z, X3 = rho",
            Source::Gauss3(III, 1),
            gauss3_row(c(4, 4, 5), d_sharp(), q(8, 5)),
        ),
    ];
    for col in &mut cols[4..6] {
        col.misprints.push(Misprint {
            index: 3,
            corrected: d_sharp(),
        });
    }
    cols
}

fn two_semitone_columns() -> Vec<ReferenceColumn> {
    let gauss2 = |e: Value, a_sharp: Value| {
        vec![
            q(1, 1),
            c(3, 3, 4),
            q(9, 8),
            c(27, 27, 32),
            e,
            q(4, 3),
            c(1, 1, 1),
            q(3, 2),
            c(9, 9, 8),
            q(27, 16),
            a_sharp,
            c(4, 4, 3),
            q(2, 1),
        ]
    };
    let shadow2 = |e: Value, a_sharp: Value| {
        vec![
            q(1, 1),
            tw([-18, 12, 0]),
            q(9, 8),
            tw([-54, 36, 0]),
            e,
            q(4, 3),
            tw([6, 0, 0]),
            q(3, 2),
            tw([-30, 24, 0]),
            q(27, 16),
            a_sharp,
            tw([30, -12, 0]),
            q(2, 1),
        ]
    };
    vec![
        column(
            "two semitones",
            "Gauss-2 (i)",
            Source::Gauss2(0),
            gauss2(q(81, 64), c(81, 81, 64)),
        ),
        column(
            "two semitones",
            "Gauss-2 (ii)",
            Source::Gauss2(1),
            gauss2(c(8, 8, 9), q(16, 9)),
        ),
        column(
            "two semitones",
            "Shadow-2 I (i)",
            Source::Shadow2(GaussSystem::I, 0),
            shadow2(q(81, 64), tw([-66, 48, 0])),
        ),
        column(
            "two semitones",
            "Shadow-2 I (ii)",
            Source::Shadow2(GaussSystem::I, 1),
            shadow2(tw([42, -24, 0]), q(16, 9)),
        ),
        column(
            "two semitones",
            "Shadow-2 II",
            Source::Shadow2(GaussSystem::II, 0),
            shadow2(tw([-15, 12, 0]), tw([-9, 12, 0])),
        ),
        column(
            "two semitones",
            "Pyth-2",
            Source::Pythagorean,
            vec![
                q(1, 1),
                q(256, 243),
                q(9, 8),
                q(32, 27),
                q(81, 64),
                q(4, 3),
                q(1024, 729),
                q(3, 2),
                q(128, 81),
                q(27, 16),
                q(16, 9),
                q(243, 128),
                q(2, 1),
            ],
        ),
    ]
}

/// Every published chromatic column, in publication order.
pub fn reference_columns() -> Vec<ReferenceColumn> {
    let mut cols = gauss3_columns();
    cols.extend(two_semitone_columns());
    cols
}

pub fn check_all() -> Vec<ColumnCheck> {
    reference_columns().iter().map(ReferenceColumn::check).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_column_matches() {
        let checks = check_all();
        assert_eq!(checks.len(), 15);
        for ch in &checks {
            assert!(ch.passed(), "{}", ch);
        }
        let documented: usize = checks.iter().map(|c| c.documented.len()).sum();
        assert_eq!(documented, 2);
        let exact: usize = checks.iter().map(|c| c.exact).sum();
        assert_eq!(exact, 15 * 13 - 2);
    }

    #[test]
    fn corrupted_cell_is_reported() {
        let mut col = reference_columns().remove(0);
        col.printed[8] = q(8, 5);
        let ch = col.check();
        assert!(!ch.passed());
        assert_eq!(ch.mismatches[0].index, 8);
    }

    #[test]
    fn stale_misprint_is_reported() {
        // If the printed cell were already right, the note must not hide it.
        let mut col = reference_columns().remove(4);
        col.printed[3] = c(5, 5, 6);
        assert!(!col.check().passed());
    }
}
