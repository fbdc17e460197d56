//! Family-level verification: counts, particle sets, structural identities,
//! cross-checks against the published rows, the oracle, and known errata.

use std::collections::BTreeSet;
use std::fmt;

use crate::errata::errata_for;
use crate::par::Execution;
use crate::pitch::{Pitch, Value};
use crate::radical::{magnitude_radical, RadicalTone};
use crate::reference::{reference_columns, Source};
use crate::scales::{gauss3_chromatic, shadow3_chromatic, GaussSystem};
use crate::systems::{
    agreement, brute_force_oracle, class_key, enumerate_gauss2, enumerate_gauss3,
    enumerate_just3, enumerate_shadow2, enumerate_shadow3, radical_in_bound, tone_in_bound,
    verify_system, Agreement, Family, NoteMatch, OracleFamily, SemitoneSystem, SystemError,
    MAX_ORACLE_BOUND,
};
use crate::tone::{kappa, Tone};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// A documented discrepancy; never a failure.
    Note,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportLine {
    pub status: Status,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    pub family: Family,
    pub lines: Vec<ReportLine>,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.status != Status::Fail)
    }

    pub fn notes(&self) -> impl Iterator<Item = &ReportLine> {
        self.lines.iter().filter(|l| l.status == Status::Note)
    }

    fn check(&mut self, ok: bool, text: impl Into<String>) {
        let text = text.into();
        self.lines.push(ReportLine {
            status: if ok { Status::Pass } else { Status::Fail },
            text: format!("{}: {}", text, if ok { "OK" } else { "FAILED" }),
        });
    }

    fn detail(&mut self, text: impl Into<String>) {
        self.lines.push(ReportLine {
            status: Status::Fail,
            text: format!("  {}", text.into()),
        });
    }
}

impl fmt::Display for FamilyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.family)?;
        for l in &self.lines {
            writeln!(f, "  {}", l.text)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub k_bound: u32,
    /// `None` skips the exhaustive search.
    pub oracle_bound: Option<u32>,
    pub exec: Execution,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            k_bound: crate::systems::DEFAULT_K_BOUND,
            oracle_bound: Some(crate::systems::DEFAULT_ORACLE_BOUND),
            exec: Execution::default(),
        }
    }
}

fn tq(n: i64, d: i64) -> Value {
    Value::Tone(Tone::ratio(n, d))
}

fn tc(re: i64, im: i64, d: i64) -> Value {
    Value::Tone(Tone::gaussian(re, im, d))
}

fn tw(e: [i64; 3]) -> Value {
    Value::from(RadicalTone::from_twelfths(e))
}

/// The particle sets as stated for each family, system by system; the
/// first complex system is given at phase zero.
pub fn stated_particles(family: Family) -> Vec<Vec<Value>> {
    let alpha = || tc(3, 3, 4);
    let z = || tq(16, 15);
    let theta = || tw([-18, 12, 0]);
    match family {
        Family::Just3 => vec![
            vec![tq(16, 15), tq(135, 128), tq(25, 24)],
            vec![tq(135, 128), tq(16, 15), tq(256, 243)],
            vec![tq(25, 24), tq(27, 25), tq(16, 15)],
        ],
        Family::Gauss3 => vec![
            vec![alpha(), tc(3, 1, 3), z()],
            vec![alpha(), tc(20, -20, 27), z()],
            vec![alpha(), tq(25, 24), z()],
        ],
        Family::Gauss2 => vec![vec![alpha(), tq(256, 243)]],
        Family::Shadow3 => vec![
            vec![theta(), tw([6, -12, 6]), z()],
            vec![theta(), tw([30, -36, 12]), z()],
            vec![theta(), tq(25, 24), z()],
        ],
        Family::Shadow2 => vec![vec![theta(), tq(256, 243)], vec![theta(), tw([39, -24, 0])]],
    }
}

/// Key in the family's own arithmetic, so `16/15` in a real family reads
/// as the radical the enumerator holds.
fn value_key(family: Family, v: &Value) -> String {
    match (family, v) {
        (Family::Shadow3 | Family::Shadow2, Value::Tone(t)) => {
            class_key(&crate::radical::embed_real(t).expect("positive real"))
        }
        (_, Value::Tone(t)) => class_key(t),
        (_, Value::Radical(r)) => class_key(r),
    }
}

fn stated_keys(family: Family) -> BTreeSet<Vec<String>> {
    stated_particles(family)
        .iter()
        .map(|s| {
            let k: BTreeSet<String> = s.iter().map(|v| value_key(family, v)).collect();
            k.into_iter().collect()
        })
        .collect()
}

/// Signature of the first phase-free variant of each system.
fn found_keys<T: Pitch>(systems: &[SemitoneSystem<T>]) -> BTreeSet<Vec<String>> {
    systems
        .iter()
        .map(|s| {
            let v = s
                .variants
                .iter()
                .position(|v| v.phase.is_none_or(|p| p.k == 0))
                .unwrap_or(0);
            s.signature(v)
        })
        .collect()
}

fn plural(n: usize, word: &str) -> String {
    format!("{n} {word}{}", if n == 1 { "" } else { "s" })
}

fn systemwise<T: Pitch>(r: &mut FamilyReport, systems: &[SemitoneSystem<T>], mode: NoteMatch) {
    for s in systems {
        let v = verify_system(s, mode);
        r.check(
            v.passed(),
            format!(
                "system {}, {}: every fixed note reached and the octave closed",
                s.label,
                plural(v.variants, "variant")
            ),
        );
        for c in v.failures() {
            r.detail(format!("variant {:?}: {}: {}", c.variant, c.name, c.detail));
        }
    }
}

fn particle_lines<T: Pitch>(r: &mut FamilyReport, systems: &[SemitoneSystem<T>]) {
    let want = stated_keys(r.family);
    let got = found_keys(systems);
    r.check(want == got, "particle sets match the stated sets");
    for s in got.difference(&want) {
        r.detail(format!("unexpected {{{}}}", s.join(", ")));
    }
    for s in want.difference(&got) {
        r.detail(format!("missing {{{}}}", s.join(", ")));
    }
}

fn agreement_lines(r: &mut FamilyReport, bound: u32, systems: usize, a: &Agreement) {
    r.check(
        a.ok(),
        format!(
            "enumerator/oracle agreement at bound {} ({}, {})",
            bound,
            plural(systems, "system"),
            plural(a.compared, "row")
        ),
    );
    for m in &a.missed_by_oracle {
        r.detail(format!("- {}", m));
    }
    for m in &a.not_enumerated {
        r.detail(format!("+ {}", m));
    }
}

fn oracle_lines(r: &mut FamilyReport, opts: VerifyOptions) -> Result<(), SystemError> {
    let Some(bound) = opts.oracle_bound else {
        return Ok(());
    };
    if bound > MAX_ORACLE_BOUND {
        return Err(SystemError::BoundTooLarge(bound));
    }
    let family = r.family;
    match brute_force_oracle(family, bound, opts.exec)? {
        OracleFamily::Tone(found) => {
            let enumerated = match family {
                Family::Just3 => enumerate_just3(),
                // Every phase whose factor fits the bound must be enumerated.
                Family::Gauss3 => enumerate_gauss3(opts.k_bound.max(bound)),
                _ => vec![enumerate_gauss2()],
            };
            let a = agreement(&enumerated, &found, tone_in_bound(family, bound));
            agreement_lines(r, bound, found.len(), &a);
        }
        OracleFamily::Radical(found) => {
            let enumerated = if family == Family::Shadow3 {
                enumerate_shadow3()
            } else {
                enumerate_shadow2()
            };
            let a = agreement(&enumerated, &found, radical_in_bound(bound));
            agreement_lines(r, bound, found.len(), &a);
        }
    }
    Ok(())
}

fn reference_lines(r: &mut FamilyReport, keep: impl Fn(Source) -> bool) {
    let cols: Vec<_> = reference_columns()
        .into_iter()
        .filter(|c| keep(c.source))
        .collect();
    let checks: Vec<_> = cols.iter().map(|c| c.check()).collect();
    let ok = checks.iter().all(|c| c.passed());
    let cells: usize = checks.iter().map(|c| c.exact).sum();
    let misprints: usize = checks.iter().map(|c| c.documented.len()).sum();
    let mut text = format!(
        "published rows: {} columns, {} cells exact",
        checks.len(),
        cells
    );
    if misprints > 0 {
        text.push_str(&format!(", {} documented misprints", misprints));
    }
    r.check(ok, text);
    for c in checks.iter().filter(|c| !c.passed()) {
        r.detail(c.to_string());
    }
}

fn errata_lines(r: &mut FamilyReport) {
    for e in errata_for(r.family) {
        r.lines.push(ReportLine {
            status: if e.confirmed { Status::Note } else { Status::Fail },
            text: e.to_string(),
        });
    }
}

/// Products of steps 1–6 and 7–12 of every variant are `1+i` and `1−i`.
fn symmetry_products(r: &mut FamilyReport, systems: &[SemitoneSystem<Tone>]) {
    let xi = Tone::gaussian(1, 1, 1);
    let ok = systems.iter().flat_map(|s| &s.variants).all(|v| {
        let vals = v.sequence.values();
        let prod = |xs: &[Tone]| xs.iter().fold(Tone::one(), |a, b| &a * b);
        vals.len() == 12 && prod(&vals[..6]) == xi && prod(&vals[6..]) == xi.conj()
    });
    r.check(ok, "steps 1-6 multiply to (1+i) and steps 7-12 to (1-i) in every variant");
}

fn just3(r: &mut FamilyReport) -> Vec<SemitoneSystem<Tone>> {
    let s = enumerate_just3();
    let counts_ok = s.len() == 3 && s.iter().all(|x| x.variants.len() == 32);
    r.check(counts_ok, format!("{} systems, 32 variants each", s.len()));
    s
}

fn gauss3(r: &mut FamilyReport, k_bound: u32) -> Vec<SemitoneSystem<Tone>> {
    let s = enumerate_gauss3(k_bound);
    let counts: Vec<usize> = s.iter().map(|x| x.variants.len()).collect();
    let want = vec![2 * k_bound as usize + 1, 4, 2];
    r.check(
        counts == want,
        format!(
            "{} systems, variant counts {:?} with phases |k| <= {}",
            s.len(),
            counts,
            k_bound
        ),
    );
    symmetry_products(r, &s);
    let target = &kappa().inv() * &Tone::gaussian(3, 3, 4);
    let ok = s.iter().any(|x| x.label == "II")
        && s.iter().all(|x| {
            let has = x
                .particles
                .iter()
                .any(|p| p.value == target || p.value.conj() == target);
            has == (x.label == "II")
        });
    r.check(ok, format!("the extra particle of system II is kappa^-1 alpha = {}", target));
    reference_lines(r, |src| matches!(src, Source::Gauss3(..)));
    s
}

fn gauss2(r: &mut FamilyReport) -> Vec<SemitoneSystem<Tone>> {
    let s = vec![enumerate_gauss2()];
    let n = s[0].variants.len();
    r.check(n == 2, format!("unique system, {} variants", n));
    symmetry_products(r, &s);
    reference_lines(r, |src| matches!(src, Source::Gauss2(_)));
    s
}

fn shadow3(r: &mut FamilyReport) -> Vec<SemitoneSystem<RadicalTone>> {
    let s = enumerate_shadow3();
    let counts: Vec<usize> = s.iter().map(|x| x.variants.len()).collect();
    r.check(
        s.len() == 3 && counts == vec![1, 2, 2],
        format!("{} systems, variant counts {:?}", s.len(), counts),
    );
    // The real row is the note-wise magnitude of the complex one.
    let sys1 = gauss3_chromatic(GaussSystem::I, 0).expect("tabulated");
    let real1 = shadow3_chromatic(GaussSystem::I, 0).expect("tabulated");
    let shadow_ok = sys1
        .notes
        .iter()
        .map(|t| magnitude_radical(t).expect("five-limit"))
        .eq(real1.notes.iter().copied());
    r.check(shadow_ok, "note-wise magnitude of complex system I equals real system I");
    s
}

fn shadow2(r: &mut FamilyReport) -> Vec<SemitoneSystem<RadicalTone>> {
    let s = enumerate_shadow2();
    let counts: Vec<usize> = s.iter().map(|x| x.variants.len()).collect();
    r.check(
        s.len() == 2 && counts == vec![2, 1],
        format!("{} systems, variant counts {:?}", s.len(), counts),
    );
    let nu = RadicalTone::from_twelfths([39, -24, 0]);
    let want = RadicalTone::from_rationals([(13, 2), (-4, 1), (0, 1)]).expect("twelfths");
    let in_ii = s
        .iter()
        .find(|x| x.label == "II")
        .is_some_and(|x| x.particles.iter().any(|p| p.value == nu));
    r.check(
        in_ii && nu.pow(2) == want,
        format!("the system II semitone {} squares to (64/81) 2^(1/2)", nu),
    );
    reference_lines(r, |src| matches!(src, Source::Shadow2(..) | Source::Pythagorean));
    s
}

/// Run every check for one family.
pub fn verify_family(family: Family, opts: VerifyOptions) -> Result<FamilyReport, SystemError> {
    let mut r = FamilyReport {
        family,
        lines: Vec::new(),
    };
    match family {
        Family::Just3 => {
            let s = just3(&mut r);
            particle_lines(&mut r, &s);
            systemwise(&mut r, &s, NoteMatch::Strict);
        }
        Family::Gauss3 => {
            let s = gauss3(&mut r, opts.k_bound);
            particle_lines(&mut r, &s);
            systemwise(&mut r, &s, NoteMatch::Strict);
        }
        Family::Gauss2 => {
            let s = gauss2(&mut r);
            particle_lines(&mut r, &s);
            systemwise(&mut r, &s, NoteMatch::Strict);
        }
        Family::Shadow3 => {
            let s = shadow3(&mut r);
            particle_lines(&mut r, &s);
            systemwise(&mut r, &s, NoteMatch::Strict);
        }
        Family::Shadow2 => {
            let s = shadow2(&mut r);
            particle_lines(&mut r, &s);
            systemwise(&mut r, &s, NoteMatch::Strict);
        }
    }
    oracle_lines(&mut r, opts)?;
    errata_lines(&mut r);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> VerifyOptions {
        VerifyOptions {
            oracle_bound: None,
            ..Default::default()
        }
    }

    #[test]
    fn every_family_passes_without_oracle() {
        for f in Family::ALL {
            let r = verify_family(f, quick()).unwrap();
            assert!(r.passed(), "{}", r);
        }
    }

    #[test]
    fn headline_lines() {
        let r = verify_family(Family::Just3, quick()).unwrap();
        assert_eq!(r.lines[0].text, "3 systems, 32 variants each: OK");
        let r = verify_family(Family::Gauss2, quick()).unwrap();
        assert_eq!(r.lines[0].text, "unique system, 2 variants: OK");
    }

    #[test]
    fn errata_surface_as_notes() {
        let r = verify_family(Family::Just3, quick()).unwrap();
        assert!(r.notes().any(|l| l.text.starts_with("note [modal-b-flat]")));
        let r = verify_family(Family::Gauss3, quick()).unwrap();
        assert!(r.notes().any(|l| l.text.starts_with("note [catalog-beta]")));
    }

    #[test]
    fn oracle_bound_limit() {
        let o = VerifyOptions {
            oracle_bound: Some(13),
            ..Default::default()
        };
        assert!(verify_family(Family::Gauss2, o).is_err());
    }
}
