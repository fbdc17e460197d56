//! Per-variant checks of a semitone system against its constraints.

use std::collections::BTreeSet;
use std::fmt;

use crate::pitch::Pitch;

use super::{class_key, Family, SemitoneSystem, Symmetry};

/// How fixed notes are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NoteMatch {
    #[default]
    Strict,
    /// Accept a note that differs from its target by a unity.
    Associated,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    /// `None` for checks on the whole system.
    pub variant: Option<usize>,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub family: Family,
    pub label: String,
    pub variants: usize,
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "OK" } else { "FAILED" };
        writeln!(
            f,
            "{} {}: {} variants, {}",
            self.family, self.label, self.variants, status
        )?;
        for c in self.failures() {
            match c.variant {
                Some(v) => writeln!(f, "  variant {}: {}: {}", v, c.name, c.detail)?,
                None => writeln!(f, "  {}: {}", c.name, c.detail)?,
            }
        }
        Ok(())
    }
}

fn check(variant: Option<usize>, name: &'static str, passed: bool, detail: String) -> Check {
    Check {
        variant,
        name,
        passed,
        detail,
    }
}

pub fn verify_system<T: Pitch>(sys: &SemitoneSystem<T>, mode: NoteMatch) -> ValidationReport {
    let mut checks = Vec::new();
    let mut rows = Vec::new();
    for (i, v) in sys.variants.iter().enumerate() {
        let row = v.row();
        let at = Some(i);

        let mut residuals = Vec::new();
        for (pos, target) in sys.constraints.fixed() {
            let Some(note) = row.notes.get(*pos) else {
                residuals.push(format!("position {} missing", pos));
                continue;
            };
            let ok = match mode {
                NoteMatch::Strict => note == target,
                NoteMatch::Associated => note.associated(target),
            };
            if !ok {
                residuals.push(format!(
                    "{} = {}, expected {} (ratio {})",
                    row.note_names[*pos],
                    note,
                    target,
                    note.ratio_to(target)
                ));
            }
        }
        checks.push(check(
            at,
            "fixed notes",
            residuals.is_empty(),
            residuals.join("; "),
        ));

        let steps = v.sequence.values();
        let (ok, detail) = symmetry(&steps, sys.constraints.symmetry());
        checks.push(check(at, "symmetry", ok, detail));

        checks.push(check(
            at,
            "octave closure",
            row.closes_octave(),
            format!("last note {}", row.last()),
        ));

        let classes: BTreeSet<String> = steps.iter().map(class_key).collect();
        checks.push(check(
            at,
            "particle count",
            classes.len() == sys.family.particle_count(),
            format!(
                "{} particles, expected {}",
                classes.len(),
                sys.family.particle_count()
            ),
        ));
        rows.push(row.notes);
    }

    let mut duplicates = Vec::new();
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            if rows[i] == rows[j] {
                duplicates.push(format!("{} = {}", i, j));
            }
        }
    }
    checks.push(check(
        None,
        "distinct variants",
        duplicates.is_empty(),
        duplicates.join(", "),
    ));
    checks.push(check(
        None,
        "nonempty",
        !sys.variants.is_empty(),
        "no variants".to_string(),
    ));

    ValidationReport {
        family: sys.family,
        label: sys.label.clone(),
        variants: sys.variants.len(),
        checks,
    }
}

fn symmetry<T: Pitch>(steps: &[T], symmetry: Symmetry) -> (bool, String) {
    if steps.len() != 12 {
        return (false, format!("{} steps, expected 12", steps.len()));
    }
    let (first, second) = steps.split_at(6);
    let image = |v: &T| match symmetry {
        Symmetry::Conjugate => v.conjugate(),
        _ => v.clone(),
    };
    if symmetry == Symmetry::None {
        return (true, String::new());
    }
    let bad: Vec<String> = first
        .iter()
        .zip(second)
        .enumerate()
        .filter(|(_, (a, b))| image(a) != **b)
        .map(|(j, (a, b))| format!("step {} is {}, step {} is {}", j + 1, a, j + 7, b))
        .collect();
    let product = |xs: &[T]| xs.iter().fold(T::unison(), |acc, x| acc.compose(x));
    let (p1, p2) = (product(first), product(second));
    let mut detail = format!("halves {} and {}", p1, p2);
    if !bad.is_empty() {
        detail = format!("{}; {}", bad.join("; "), detail);
    }
    (bad.is_empty() && image(&p1) == p2, detail)
}
