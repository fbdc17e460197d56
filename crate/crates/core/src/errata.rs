//! Known discrepancies between stated and computed values.
//!
//! Each entry is re-derived on every call, so a note only reads
//! "confirmed" while the arithmetic still disagrees with the stated value.

use std::fmt;

use crate::pitch::Pitch;
use crate::scales::{
    gauss2_chromatic, gauss3_chromatic, gauss3_major, modal_scale, GaussSystem, Key, Mode,
};
use crate::systems::Family;
use crate::tone::Tone;
use crate::vocabulary::Symbol;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Topic {
    Modes,
    Catalog,
    Gauss3Rows,
    Gauss2Residual,
    MajorScales,
}

impl Topic {
    /// The verification family whose report carries this note.
    pub fn family(self) -> Family {
        match self {
            Topic::Modes => Family::Just3,
            Topic::Catalog | Topic::Gauss3Rows | Topic::MajorScales => Family::Gauss3,
            Topic::Gauss2Residual => Family::Gauss2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Erratum {
    pub id: &'static str,
    pub topic: Topic,
    pub stated: String,
    pub computed: String,
    pub explanation: &'static str,
    /// The computation still disagrees with the stated value.
    pub confirmed: bool,
}

impl fmt::Display for Erratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.confirmed { "confirmed" } else { "NOT REPRODUCED" };
        write!(
            f,
            "note [{}]: stated {}, computed {} ({}; {})",
            self.id, self.stated, self.computed, self.explanation, status
        )
    }
}

fn modal_flat_seventh() -> Erratum {
    let modes = [
        Mode::Dorian,
        Mode::Phrygian,
        Mode::Mixolydian,
        Mode::Aeolian,
        Mode::Locrian,
    ];
    let stated = Tone::ratio(16, 15);
    let values: Vec<Tone> = modes
        .iter()
        .map(|m| modal_scale(*m).note("A♯").cloned().expect("flat seventh present"))
        .collect();
    let all_same = values.windows(2).all(|w| w[0] == w[1]);
    Erratum {
        id: "modal-b-flat",
        topic: Topic::Modes,
        stated: format!("B♭ = {}", stated),
        computed: format!("B♭ = {}", values[0]),
        explanation: "the product of the first six atoms in the dorian, phrygian, \
                      mixolydian, aeolian and locrian modes",
        confirmed: all_same && values[0] != stated && values[0] == Tone::ratio(16, 9),
    }
}

fn catalog_beta() -> Erratum {
    let listed = Tone::gaussian(1, 1, 3);
    let used = Symbol::Beta.tone().expect("fixed");
    let alpha = Symbol::Alpha.tone().expect("fixed");
    let gamma = Symbol::Gamma.tone().expect("fixed");
    let between = Tone::ratio(256, 243).magnitude() < used.magnitude()
        && used.magnitude() < Tone::ratio(135, 128).magnitude();
    // The catalog row must still carry the note, not just the corrected value.
    let annotated = crate::catalog::lookup_by_name("minor complex semitone").is_some_and(|e| {
        e.value == crate::pitch::Value::Tone(used.clone())
            && e.annotation == Some(crate::catalog::BETA_ANNOTATION)
    });
    Erratum {
        id: "catalog-beta",
        topic: Topic::Catalog,
        stated: format!("β = {}", listed),
        computed: format!("β = {}", used),
        explanation: crate::catalog::BETA_ANNOTATION,
        confirmed: annotated && between && &alpha * &used == gamma && &alpha * &listed != gamma,
    }
}

fn gauss3_d_sharp() -> Erratum {
    let stated = Tone::gaussian(5, -5, 6);
    let computed: Vec<Tone> = [1, 2]
        .into_iter()
        .map(|v| gauss3_chromatic(GaussSystem::II, v).expect("variant").notes[3].clone())
        .collect();
    let confirmed = computed
        .iter()
        .all(|c| *c != stated && c.associated(&stated) && *c == Tone::gaussian(5, 5, 6));
    Erratum {
        id: "gauss3-ii-d-sharp",
        topic: Topic::Gauss3Rows,
        stated: format!("D♯ = {}", stated),
        computed: format!("D♯ = {}", computed[0]),
        explanation: "System II variants X2 = α, X3 = ᾱ′ and X2 = α′, X3 = ᾱ; \
                      the two values are associates, and the stated one would put E at -(5/4)i",
        confirmed,
    }
}

fn gauss2_residual() -> Erratum {
    let xi = Tone::gaussian(1, 1, 1);
    let stated = &Tone::ratio(64, 81) * &xi;
    let row = gauss2_chromatic(0).expect("variant");
    let computed = &row.steps.steps[3].value * &row.steps.steps[4].value;
    Erratum {
        id: "gauss2-residual",
        topic: Topic::Gauss2Residual,
        stated: format!("X4 X5 = {}", stated),
        computed: format!("X4 X5 = {}", computed),
        explanation: "F / (D X3) with D = 9/8, F = 4/3 and X3 = α gives the conjugate",
        confirmed: computed == stated.conj() && computed != stated,
    }
}

fn f_major_beta() -> Erratum {
    let named = &Tone::ratio(4, 5) * &Tone::gaussian(1, 1, 1);
    let delta = Symbol::Delta.tone().expect("fixed");
    let beta = Symbol::Beta.tone().expect("fixed");
    Erratum {
        id: "f-major-beta",
        topic: Topic::MajorScales,
        stated: format!("β = {}", named),
        computed: format!("δ = {}, β = {}", delta, beta),
        explanation: "an alternative F-major narration calls (4/5)ξ β; that value is δ, \
                      and the F-major sequence used is 1, X, Y, α, δ̄, γ, γ̄, Z",
        confirmed: named == delta && named != beta,
    }
}

/// The G♭-major fourth degree against the single chromatic row.
fn g_flat_c_flat() -> Erratum {
    let scale = gauss3_major(Key::GFlat);
    let row = gauss3_chromatic(GaussSystem::I, 0).expect("variant");
    let computed = scale.note("B").cloned().expect("fourth degree present");
    let on_row = row.note("B").cloned().expect("row has B");
    Erratum {
        id: "g-flat-major-c-flat",
        topic: Topic::MajorScales,
        stated: format!("C♭ = B of the chromatic row = {}", on_row),
        computed: format!("C♭ = {}", computed),
        explanation: "ξ γ̄ γ ᾱ from the G♭-major sequence; every other note of the twelve \
                      major scales lies on the chromatic row up to octaves",
        confirmed: computed == Tone::ratio(15, 8) && computed != on_row,
    }
}

pub fn errata() -> Vec<Erratum> {
    vec![
        modal_flat_seventh(),
        catalog_beta(),
        gauss3_d_sharp(),
        gauss2_residual(),
        f_major_beta(),
        g_flat_c_flat(),
    ]
}

pub fn errata_for(family: Family) -> Vec<Erratum> {
    errata()
        .into_iter()
        .filter(|e| e.topic.family() == family)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_confirmed() {
        for e in errata() {
            assert!(e.confirmed, "{}", e);
        }
        assert_eq!(errata_for(Family::Gauss3).len(), 4);
        assert!(errata_for(Family::Shadow2).is_empty());
    }

    #[test]
    fn rendering() {
        let e = modal_flat_seventh();
        let s = e.to_string();
        assert!(s.starts_with("note [modal-b-flat]: stated B♭ = 16/15, computed B♭ = 16/9"));
    }
}
