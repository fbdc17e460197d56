//! One line per acceptance criterion, then a single pass/fail verdict.

mod support;

use std::collections::BTreeSet;
use std::io::Write;

use tonality::errata::errata;
use tonality::expr::eval_str;
use tonality::par::Execution;
use tonality::radical::{embed_real, magnitude_radical};
use tonality::reference::check_all;
use tonality::report::{verify_family, Status, VerifyOptions};
use tonality::scales::{
    gauss3_chromatic, gauss3_major, just_diatonic, modal_scale, shadow3_chromatic, GaussSystem,
    Key, Mode,
};
use tonality::systems::{
    agreement, brute_force_oracle, class_key, enumerate_gauss2, enumerate_gauss3, enumerate_just3,
    enumerate_shadow2, enumerate_shadow3, tone_in_bound, Family, OracleFamily, SemitoneSystem,
};
use tonality::vocabulary::Symbol;
use tonality::{Pitch, RadicalTone, Tone, Value};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn tone(text: &str) -> Tone {
    match eval_str(text) {
        Ok(Value::Tone(t)) => t,
        other => panic!("{text}: {other:?}"),
    }
}

fn radical(text: &str) -> RadicalTone {
    match eval_str(text) {
        Ok(Value::Radical(r)) => r,
        Ok(Value::Tone(t)) => embed_real(&t).expect("positive real"),
        Err(e) => panic!("{text}: {e}"),
    }
}

/// Conjugation classes of the particles a system uses, phase zero first.
fn found<T: Pitch>(systems: &[SemitoneSystem<T>]) -> BTreeSet<BTreeSet<String>> {
    systems
        .iter()
        .map(|s| {
            let v = s
                .variants
                .iter()
                .position(|v| v.phase.is_none_or(|p| p.k == 0))
                .unwrap_or(0);
            s.variants[v].sequence.values().iter().map(class_key).collect()
        })
        .collect()
}

fn stated_tones(sets: &[&[&str]]) -> BTreeSet<BTreeSet<String>> {
    sets.iter()
        .map(|s| s.iter().map(|t| class_key(&tone(t))).collect())
        .collect()
}

fn stated_radicals(sets: &[&[&str]]) -> BTreeSet<BTreeSet<String>> {
    sets.iter()
        .map(|s| s.iter().map(|t| class_key(&radical(t))).collect())
        .collect()
}

fn counts<T>(systems: &[SemitoneSystem<T>]) -> Vec<usize> {
    systems.iter().map(|s| s.variants.len()).collect()
}

fn published_rows() -> Outcome {
    let checks = check_all();
    ensure!(checks.len() == 15, "{} columns", checks.len());
    for c in &checks {
        ensure!(c.passed(), "{c}");
    }
    let exact: usize = checks.iter().map(|c| c.exact).sum();
    let documented: usize = checks.iter().map(|c| c.documented.len()).sum();
    ensure!(exact + documented == 15 * 13, "{exact} + {documented} cells");
    Ok(format!(
        "{} columns, {exact} cells exact, {documented} documented misprints",
        checks.len()
    ))
}

fn just3() -> Outcome {
    let systems = enumerate_just3();
    ensure!(counts(&systems) == [32, 32, 32], "variant counts {:?}", counts(&systems));
    let stated = stated_tones(&[
        &["16/15", "135/128", "25/24"],
        &["135/128", "16/15", "256/243"],
        &["25/24", "27/25", "16/15"],
    ]);
    ensure!(found(&systems) == stated, "particle sets {:?}", found(&systems));
    let diatonic = just_diatonic().notes;
    for s in &systems {
        for (i, a) in s.variants.iter().enumerate() {
            for b in &s.variants[i + 1..] {
                ensure!(a.sequence != b.sequence, "system {} repeats a variant", s.label);
            }
            let row = a.row().notes;
            let picked: Vec<_> = [0, 2, 4, 5, 7, 9, 11, 12].map(|p| row[p].clone()).into();
            ensure!(picked == diatonic, "system {} variant {i} misses the diatonic", s.label);
        }
    }
    let OracleFamily::Tone(oracle) = brute_force_oracle(Family::Just3, 8, Execution::default())
        .map_err(|e| e.to_string())?
    else {
        return Err("oracle returned radicals".into());
    };
    let a = agreement(&systems, &oracle, tone_in_bound(Family::Just3, 8));
    ensure!(oracle.len() == 3 && a.ok(), "oracle: {} systems, {a:?}", oracle.len());
    Ok(format!("3 systems x 32 distinct variants; search at bound 8 finds {} rows, nothing extra", a.compared))
}

fn gauss3() -> Outcome {
    let systems = enumerate_gauss3(0);
    ensure!(counts(&systems) == [1, 4, 2], "variant counts {:?}", counts(&systems));
    let stated = stated_tones(&[
        &["(3+3i)/4", "(3+i)/3", "16/15"],
        &["(3+3i)/4", "(20-20i)/27", "16/15"],
        &["(3+3i)/4", "25/24", "16/15"],
    ]);
    ensure!(found(&systems) == stated, "particle sets {:?}", found(&systems));
    let (up, down) = (tone("1+1i"), tone("1-1i"));
    for s in &systems {
        for v in &s.variants {
            let steps = v.sequence.values();
            let first = steps[..6].iter().fold(Tone::one(), |a, b| &a * b);
            let second = steps[6..].iter().fold(Tone::one(), |a, b| &a * b);
            ensure!(first == up && second == down, "system {}: {first}, {second}", s.label);
        }
    }
    let extra = tone("kappa^-1 alpha");
    ensure!(extra == &Symbol::Alpha.tone().unwrap() / &tone("81/80"), "kappa^-1 alpha = {extra}");
    let ours: BTreeSet<String> = systems[1].particles.iter().map(|p| class_key(&p.value)).collect();
    let first: BTreeSet<String> = systems[0].particles.iter().map(|p| class_key(&p.value)).collect();
    let new: Vec<_> = ours.difference(&first).collect();
    ensure!(new == [&class_key(&extra)], "system II adds {new:?}");
    Ok(format!("counts [1, 4, 2] at k = 0; halves multiply to 1+i and 1-i; extra particle {extra}"))
}

fn two_semitone_and_shadows() -> Outcome {
    let g2 = enumerate_gauss2();
    ensure!(g2.variants.len() == 2, "{} variants", g2.variants.len());
    let g2_sets = found(std::slice::from_ref(&g2));
    ensure!(g2_sets == stated_tones(&[&["(3+3i)/4", "256/243"]]), "{g2_sets:?}");

    let s3 = enumerate_shadow3();
    ensure!(counts(&s3) == [1, 2, 2], "shadow-3 counts {:?}", counts(&s3));
    let theta = "3 2^(-3/2)";
    let s3_stated = stated_radicals(&[
        &[theta, "2^(1/2) 5^(1/2)/3", "16/15"],
        &[theta, "2^(5/2) 5/27", "16/15"],
        &[theta, "25/24", "16/15"],
    ]);
    ensure!(found(&s3) == s3_stated, "shadow-3 sets {:?}", found(&s3));

    let s2 = enumerate_shadow2();
    ensure!(counts(&s2) == [2, 1], "shadow-2 counts {:?}", counts(&s2));
    let s2_stated = stated_radicals(&[&[theta, "256/243"], &[theta, "2^(13/4)/9"]]);
    ensure!(found(&s2) == s2_stated, "shadow-2 sets {:?}", found(&s2));

    let nu = radical("2^(13/4)/9");
    ensure!(Symbol::Nu.radical() == Some(nu), "nu is {:?}", Symbol::Nu.radical());
    let sq = nu.pow(2);
    ensure!(sq == radical("64/81 2^(1/2)"), "nu^2 = {sq}");
    Ok(format!("Gauss-2 unique with 2 variants; Shadow-3 [1, 2, 2]; Shadow-2 [2, 1]; nu^2 = {sq}"))
}

fn identities() -> Outcome {
    let cases = [
        ("alpha conj(alpha)", "9/8"),
        ("beta conj(beta)", "10/9"),
        ("alpha beta", "gamma"),
        ("gamma conj(gamma)", "5/4"),
        ("xi conj(xi)", "2"),
        ("sigma^7 tau^5", "2"),
        ("psi^12", "2"),
        ("(45/32) / (25/18)", "kappa"),
        ("(9/8) / (10/9)", "kappa"),
    ];
    for (lhs, rhs) in cases {
        let (a, b) = (eval_str(lhs), eval_str(rhs));
        ensure!(a.is_ok() && a == b, "{lhs} = {a:?}, {rhs} = {b:?}");
    }
    // The same identities in direct arithmetic on the fixed step values.
    let t = |s: Symbol| s.tone().expect("complex step");
    let (alpha, beta, gamma) = (t(Symbol::Alpha), t(Symbol::Beta), t(Symbol::Gamma));
    ensure!(&alpha * &beta == gamma, "alpha beta");
    ensure!(&gamma * &gamma.conj() == Tone::ratio(5, 4), "gamma conj(gamma)");
    Ok(format!("{} identities hold exactly", cases.len()))
}

fn shadow_consistency() -> Outcome {
    let complex = gauss3_chromatic(GaussSystem::I, 0).map_err(|e| e.to_string())?;
    let real = shadow3_chromatic(GaussSystem::I, 0).map_err(|e| e.to_string())?;
    ensure!(complex.notes.len() == 13 && real.notes.len() == 13, "row lengths");
    for (i, (c, r)) in complex.notes.iter().zip(&real.notes).enumerate() {
        let m = magnitude_radical(c).map_err(|e| e.to_string())?;
        ensure!(m == *r, "note {i}: |{c}| = {m}, real row has {r}");
    }
    Ok("13 notes, |complex| = real in exact radicals".into())
}

fn major_scales() -> Outcome {
    let roots = [
        (Key::C, "1"),
        (Key::G, "3/2"),
        (Key::D, "gamma"),
        (Key::A, "5/6"),
        (Key::E, "5/4"),
        (Key::B, "2/3 xi"),
        (Key::F, "4/3"),
        (Key::BFlat, "5/8 xi"),
        (Key::EFlat, "5/6 xi"),
        (Key::AFlat, "3/4 conj(beta)"),
        (Key::DFlat, "3/4 xi"),
        (Key::GFlat, "xi"),
    ];
    let chromatic = gauss3_chromatic(GaussSystem::I, 0).map_err(|e| e.to_string())?;
    let mut off_row = Vec::new();
    for (key, root) in roots {
        let s = gauss3_major(key);
        let want = tone(root);
        ensure!(s.notes[0] == want, "{} major starts at {}, not {want}", key.name(), s.notes[0]);
        let last = s.notes.last().unwrap();
        ensure!(*last == &want * &Tone::two(), "{} major ends at {last}", key.name());
        // Notes should be the chromatic row's value for their pitch class, octave-shifted.
        for (name, n) in s.note_names.iter().zip(&s.notes) {
            let base = name.trim_end_matches(['′', ',']);
            let pc = chromatic
                .note_names
                .iter()
                .position(|c| base == c.as_str())
                .ok_or(format!("unnamed note {name}"))?;
            let ratio = n / &chromatic.notes[pc];
            if !(-2..=2).any(|k| ratio == Tone::two().pow(k)) {
                off_row.push(format!("{} {name}", key.name()));
            }
        }
    }
    // One documented exception; anything else is a regression.
    let documented = errata()
        .into_iter()
        .any(|e| e.id == "g-flat-major-c-flat" && e.confirmed);
    ensure!(off_row == ["Gb B"] && documented, "notes off the chromatic row: {off_row:?}");
    let d = gauss3_major(Key::D);
    let (cs, dd) = (d.note("C♯′").cloned(), d.note("D′").cloned());
    ensure!(cs == Some(tone("3/2 xi")), "D major C♯′ = {cs:?}");
    ensure!(dd == Some(tone("2 gamma")), "D major D′ = {dd:?}");
    Ok("12 keys close the octave from their stated roots; D major C♯′ = (3/2)ξ, D′ = 2γ; \
        one documented off-row note (G♭ major C♭)"
        .into())
}

fn property_suites() -> Outcome {
    use support::*;
    fn run<T: std::fmt::Debug>(
        name: &str,
        r: Result<(), proptest::test_runner::TestError<T>>,
    ) -> Result<(), String> {
        r.map_err(|e| format!("{name}: {e}"))
    }
    run(
        "factorization",
        deterministic(10_000).run(&gaussian_in_disc(), |(a, b)| check_factorization(a, b)),
    )?;
    let primes = primality_sweep(1000)?;
    let phases = phase_sweep(6)?;
    run(
        "expressions",
        deterministic(200).run(&expr_text(), |t| check_expression(&t)),
    )?;
    run(
        "tone text",
        deterministic(200).run(&tone_strategy(), |t| check_value_text(Value::Tone(t))),
    )?;
    run(
        "radical text",
        deterministic(200).run(&radical_strategy(), |r| check_value_text(Value::from(r))),
    )?;
    Ok(format!(
        "10000 factorizations, {primes} primality cases, {phases} phase factors, 200 expressions"
    ))
}

fn discrepancy_notes() -> Outcome {
    for e in errata() {
        ensure!(e.confirmed, "{e}");
    }
    let opts = VerifyOptions {
        oracle_bound: None,
        ..VerifyOptions::default()
    };
    let mut seen = Vec::new();
    for (family, id) in [(Family::Just3, "modal-b-flat"), (Family::Gauss3, "catalog-beta")] {
        let r = verify_family(family, opts).map_err(|e| e.to_string())?;
        ensure!(r.passed(), "{family} report has failures:\n{r}");
        let tag = format!("note [{id}]");
        let line = r.lines.iter().find(|l| l.text.starts_with(&tag));
        ensure!(
            line.is_some_and(|l| l.status == Status::Note),
            "{family} report lacks {tag} as a note"
        );
        seen.push(id);
    }
    // The stated value is still what the modal sequence would contradict.
    let b_flat = modal_scale(Mode::Dorian).note("A♯").cloned();
    ensure!(b_flat == Some(Tone::ratio(16, 9)), "dorian A♯ = {b_flat:?}");
    Ok(format!("{} surface as notes in verify output", seen.join(" and ")))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("published chromatic rows reproduced exactly", published_rows),
        ("three just semitone systems", just3),
        ("three Gauss-3 systems", gauss3),
        ("Gauss-2 and the shadow systems", two_semitone_and_shadows),
        ("identity suite", identities),
        ("shadow consistency", shadow_consistency),
        ("twelve major scales", major_scales),
        ("property suites", property_suites),
        ("known-discrepancy notes", discrepancy_notes),
    ];
    // Written to the handle directly so the lines show without --nocapture.
    let mut out = std::io::stdout().lock();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let line = match check() {
            Ok(detail) => format!("criterion {} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                format!("criterion {} FAIL  {name}: {why}", i + 1)
            }
        };
        writeln!(out, "{line}").expect("stdout");
    }
    drop(out);
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
