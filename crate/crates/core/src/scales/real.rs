use crate::radical::RadicalTone;
use crate::tone::Tone;
use crate::vocabulary::{StepSymbol, Symbol};

use super::complex::GaussSystem;
use super::{aggregate, fixed_steps, radical_steps, AggregationSequence, Scale, ScaleError, Step};

fn fifth() -> Tone {
    Tone::ratio(3, 2)
}

/// Multiply or divide by 2 until `t` lies in `[1, 2)`.
fn into_octave(mut t: Tone) -> Tone {
    let two = Tone::two();
    while t.num().re >= t.den() * 2 {
        t = &t / &two;
    }
    while &t.num().re < t.den() {
        t = &t * &two;
    }
    t
}

/// `1` followed by `n` rising fifths, each brought into `[1, 2)`.
pub fn fifths_up(n: usize) -> Vec<Tone> {
    let mut out = vec![Tone::one()];
    for _ in 0..n {
        let next = into_octave(out.last().expect("nonempty") * &fifth());
        out.push(next);
    }
    out
}

/// `1` followed by `n` falling fifths, each brought into `[1, 2)`.
pub fn fifths_down(n: usize) -> Vec<Tone> {
    let mut out = vec![Tone::one()];
    for _ in 0..n {
        let next = into_octave(out.last().expect("nonempty") / &fifth());
        out.push(next);
    }
    out
}

/// The chain of fifths from `down` steps below `1` to `up` steps above it.
pub fn pythagorean_cycle(up: usize, down: usize) -> Vec<Tone> {
    let mut out: Vec<Tone> = fifths_down(down).into_iter().skip(1).rev().collect();
    out.extend(fifths_up(up));
    out
}

const SIGMA: StepSymbol = StepSymbol::plain(Symbol::Sigma);
const TAU: StepSymbol = StepSymbol::plain(Symbol::Tau);
const X: StepSymbol = StepSymbol::plain(Symbol::X);
const W: StepSymbol = StepSymbol::plain(Symbol::W);

pub fn pythagorean_chromatic() -> Scale<Tone> {
    let seq = [
        SIGMA, TAU, SIGMA, TAU, SIGMA, SIGMA, TAU, SIGMA, TAU, SIGMA, TAU, SIGMA,
    ];
    aggregate(Tone::one(), AggregationSequence::new(fixed_steps(&seq))).expect("σ⁷τ⁵ = 2")
}

pub fn pentatonic() -> Scale<Tone> {
    let seq = [X, W, X, X, W];
    aggregate(Tone::one(), AggregationSequence::new(fixed_steps(&seq))).expect("X³W² = 2")
}

pub fn heptatonic() -> Scale<Tone> {
    let seq = [X, X, SIGMA, X, X, X, SIGMA];
    aggregate(Tone::one(), AggregationSequence::new(fixed_steps(&seq))).expect("X⁵σ² = 2")
}

pub fn equal_tempered_chromatic() -> Scale<RadicalTone> {
    let seq = AggregationSequence::new(radical_steps(&[Symbol::Psi; 12]));
    aggregate(RadicalTone::one(), seq).expect("ψ¹² = 2")
}

fn eta(twelfths: [i64; 3]) -> Step<RadicalTone> {
    Step::new(
        StepSymbol::plain(Symbol::Eta),
        RadicalTone::from_twelfths(twelfths),
    )
}

fn check(family: &str, variant: usize, count: usize) -> Result<(), ScaleError> {
    if variant < count {
        Ok(())
    } else {
        Err(ScaleError::InvalidVariant {
            family: family.to_string(),
            variant,
            count,
        })
    }
}

/// Real three-semitone rows. I uses `η = √10/3`; II has `η = (20/27)√2`
/// in the order (θ, η), (η, θ); III has (ρ, Z), (Z, ρ).
pub fn shadow3_chromatic(
    system: GaussSystem,
    variant: usize,
) -> Result<Scale<RadicalTone>, ScaleError> {
    let count = match system {
        GaussSystem::I => 1,
        _ => 2,
    };
    check(&format!("shadow3 {}", system), variant, count)?;
    let theta = Step::fixed_radical(Symbol::Theta);
    let z = Step::fixed_radical(Symbol::Z);
    let rho = Step::fixed_radical(Symbol::Rho);
    let (x2, x3) = match (system, variant) {
        (GaussSystem::I, _) => (eta([6, -12, 6]), eta([6, -12, 6])),
        (GaussSystem::II, 0) => (theta.clone(), eta([30, -36, 12])),
        (GaussSystem::II, _) => (eta([30, -36, 12]), theta.clone()),
        (GaussSystem::III, 0) => (rho, z.clone()),
        (GaussSystem::III, _) => (z.clone(), rho),
    };
    let first = vec![theta.clone(), x2, x3, theta.clone(), z, theta];
    aggregate(RadicalTone::one(), AggregationSequence::repeated(first))
}

/// Real two-semitone rows. I has (θ, σ) then (σ, θ) at `X₄, X₅`;
/// II has `X₄ = X₅ = ν`.
pub fn shadow2_chromatic(
    system: GaussSystem,
    variant: usize,
) -> Result<Scale<RadicalTone>, ScaleError> {
    let count = match system {
        GaussSystem::I => 2,
        GaussSystem::II => 1,
        GaussSystem::III => 0,
    };
    check(&format!("shadow2 {}", system), variant, count)?;
    let theta = Step::fixed_radical(Symbol::Theta);
    let sigma = Step::fixed_radical(Symbol::Sigma);
    let nu = Step::fixed_radical(Symbol::Nu);
    let (x4, x5) = match (system, variant) {
        (GaussSystem::I, 0) => (theta.clone(), sigma),
        (GaussSystem::I, _) => (sigma, theta.clone()),
        _ => (nu.clone(), nu),
    };
    let first = vec![theta.clone(), theta.clone(), theta.clone(), x4, x5, theta];
    aggregate(RadicalTone::one(), AggregationSequence::repeated(first))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles() {
        let up: Vec<Tone> = [(1, 1), (3, 2), (9, 8), (27, 16), (81, 64), (243, 128), (729, 512)]
            .iter()
            .map(|(n, d)| Tone::ratio(*n, *d))
            .collect();
        assert_eq!(fifths_up(6), up);
        assert_eq!(fifths_down(6)[6], Tone::ratio(1024, 729));
        let c = pythagorean_cycle(1, 1);
        assert_eq!(c, vec![Tone::ratio(4, 3), Tone::one(), Tone::ratio(3, 2)]);
    }

    #[test]
    fn pythagorean_rows() {
        let s = pythagorean_chromatic();
        assert_eq!(s.note("F♯"), Some(&Tone::ratio(1024, 729)));
        assert_eq!(s.note("B"), Some(&Tone::ratio(243, 128)));
        let p = pentatonic();
        assert_eq!(p.note("F"), Some(&Tone::ratio(4, 3)));
        assert_eq!(p.note("A"), Some(&Tone::ratio(27, 16)));
        let h = heptatonic();
        assert_eq!(h.note("E"), Some(&Tone::ratio(81, 64)));
        assert_eq!(h.note("B"), Some(&Tone::ratio(243, 128)));
    }

    #[test]
    fn equal_temperament() {
        let s = equal_tempered_chromatic();
        assert_eq!(s.note("F♯"), Some(&RadicalTone::from_twelfths([6, 0, 0])));
        assert_eq!(s.note("C′"), Some(&RadicalTone::two()));
    }

    #[test]
    fn shadow_rows() {
        let s = shadow2_chromatic(GaussSystem::II, 0).unwrap();
        assert_eq!(s.note("E"), Some(&RadicalTone::from_twelfths([-15, 12, 0])));
        assert_eq!(s.note("A♯"), Some(&RadicalTone::from_twelfths([-9, 12, 0])));
        let s = shadow3_chromatic(GaussSystem::I, 0).unwrap();
        assert_eq!(s.note("F♯"), Some(&RadicalTone::from_twelfths([6, 0, 0])));
        assert!(shadow2_chromatic(GaussSystem::III, 0).is_err());
    }
}
