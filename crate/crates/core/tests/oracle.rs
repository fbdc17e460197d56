use std::time::Instant;

use tonality::par::Execution;
use tonality::systems::{
    agreement, brute_force_oracle, enumerate_gauss2, enumerate_gauss3, enumerate_just3,
    enumerate_shadow2, enumerate_shadow3, radical_in_bound, tone_in_bound, Family, OracleFamily,
};

const BOUND: u32 = 8;

fn tones(f: Family) -> Vec<tonality::systems::SemitoneSystem<tonality::Tone>> {
    match brute_force_oracle(f, BOUND, Execution::default()).unwrap() {
        OracleFamily::Tone(s) => s,
        OracleFamily::Radical(_) => panic!("expected complex results"),
    }
}

fn radicals(f: Family) -> Vec<tonality::systems::SemitoneSystem<tonality::RadicalTone>> {
    match brute_force_oracle(f, BOUND, Execution::default()).unwrap() {
        OracleFamily::Radical(s) => s,
        OracleFamily::Tone(_) => panic!("expected radical results"),
    }
}

#[test]
fn just3_agrees() {
    let t = Instant::now();
    let found = tones(Family::Just3);
    assert_eq!(found.len(), 3);
    let a = agreement(&enumerate_just3(), &found, tone_in_bound(Family::Just3, BOUND));
    assert!(a.ok(), "{:?}", a);
    assert_eq!(a.compared, 96);
    eprintln!("just3 {:?}", t.elapsed());
}

#[test]
fn gauss3_agrees() {
    let t = Instant::now();
    let found = tones(Family::Gauss3);
    let a = agreement(
        &enumerate_gauss3(BOUND),
        &found,
        tone_in_bound(Family::Gauss3, BOUND),
    );
    assert!(a.ok(), "{:?}", a);
    eprintln!("gauss3 {:?} {} systems {} rows", t.elapsed(), found.len(), a.compared);
}

#[test]
fn gauss2_agrees() {
    let found = tones(Family::Gauss2);
    assert_eq!(found.len(), 1);
    let a = agreement(&[enumerate_gauss2()], &found, tone_in_bound(Family::Gauss2, BOUND));
    assert!(a.ok(), "{:?}", a);
}

#[test]
fn shadow3_agrees() {
    let t = Instant::now();
    let found = radicals(Family::Shadow3);
    assert_eq!(found.len(), 3);
    let a = agreement(&enumerate_shadow3(), &found, radical_in_bound(BOUND));
    assert!(a.ok(), "{:?}", a);
    eprintln!("shadow3 {:?}", t.elapsed());
}

#[test]
fn shadow2_agrees() {
    let found = radicals(Family::Shadow2);
    assert_eq!(found.len(), 2);
    let a = agreement(&enumerate_shadow2(), &found, radical_in_bound(BOUND));
    assert!(a.ok(), "{:?}", a);
}
