use std::fmt;

use crate::gaussian::Unity;
use crate::tone::{zeta, Tone};
use crate::vocabulary::{StepSymbol, Symbol};

use super::{aggregate, aggregate_at, fixed_steps, AggregationSequence, Scale, ScaleError, Step};

const X: StepSymbol = StepSymbol::plain(Symbol::X);
const Y: StepSymbol = StepSymbol::plain(Symbol::Y);
const Z: StepSymbol = StepSymbol::plain(Symbol::Z);
const A: StepSymbol = StepSymbol::plain(Symbol::Alpha);
const AB: StepSymbol = StepSymbol::bar(Symbol::Alpha);
const AP: StepSymbol = StepSymbol::plain(Symbol::AlphaPrime);
const APB: StepSymbol = StepSymbol::bar(Symbol::AlphaPrime);
const B: StepSymbol = StepSymbol::plain(Symbol::Beta);
const BB: StepSymbol = StepSymbol::bar(Symbol::Beta);
const G: StepSymbol = StepSymbol::plain(Symbol::Gamma);
const GB: StepSymbol = StepSymbol::bar(Symbol::Gamma);
const D: StepSymbol = StepSymbol::plain(Symbol::Delta);
const DB: StepSymbol = StepSymbol::bar(Symbol::Delta);
const RHO: StepSymbol = StepSymbol::plain(Symbol::Rho);
const SIGMA: StepSymbol = StepSymbol::plain(Symbol::Sigma);

/// The twelve major keys of the Gauss-3 I system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Key {
    C,
    G,
    D,
    A,
    E,
    B,
    F,
    BFlat,
    EFlat,
    AFlat,
    DFlat,
    GFlat,
}

impl Key {
    pub const ALL: [Key; 12] = [
        Key::C,
        Key::G,
        Key::D,
        Key::A,
        Key::E,
        Key::B,
        Key::F,
        Key::BFlat,
        Key::EFlat,
        Key::AFlat,
        Key::DFlat,
        Key::GFlat,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Key::C => "C",
            Key::G => "G",
            Key::D => "D",
            Key::A => "A",
            Key::E => "E",
            Key::B => "B",
            Key::F => "F",
            Key::BFlat => "Bb",
            Key::EFlat => "Eb",
            Key::AFlat => "Ab",
            Key::DFlat => "Db",
            Key::GFlat => "Gb",
        }
    }

    pub fn from_name(name: &str) -> Option<Key> {
        Key::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(name))
    }

    pub fn root(self) -> Tone {
        match self {
            Key::C => Tone::one(),
            Key::G => Tone::ratio(3, 2),
            Key::D => Tone::gaussian(1, 2, 2),
            Key::A => Tone::ratio(5, 6),
            Key::E => Tone::ratio(5, 4),
            Key::B => Tone::gaussian(2, 2, 3),
            Key::F => Tone::ratio(4, 3),
            Key::BFlat => Tone::gaussian(5, 5, 8),
            Key::EFlat => Tone::gaussian(5, 5, 6),
            Key::AFlat => Tone::gaussian(3, -1, 4),
            Key::DFlat => Tone::gaussian(3, 3, 4),
            Key::GFlat => Tone::gaussian(1, 1, 1),
        }
    }

    /// Semitones of the root above middle C.
    pub fn position(self) -> i32 {
        match self {
            Key::C => 0,
            Key::G => 7,
            Key::D => 2,
            Key::A => -3,
            Key::E => 4,
            Key::B => -1,
            Key::F => 5,
            Key::BFlat => -2,
            Key::EFlat => 3,
            Key::AFlat => -4,
            Key::DFlat => 1,
            Key::GFlat => 6,
        }
    }

    pub fn sequence(self) -> [StepSymbol; 7] {
        match self {
            Key::C => [G, GB, Z, X, Y, D, AB],
            Key::G => [Y, D, AB, G, GB, D, AB],
            Key::D => [GB, D, AB, Y, D, X, B],
            Key::A => [D, X, B, GB, D, GB, B],
            Key::E => [D, GB, B, D, X, Y, AB],
            Key::B => [X, Y, AB, D, GB, G, Z],
            Key::F => [X, Y, A, DB, G, GB, Z],
            Key::BFlat => [DB, G, BB, DB, X, Y, A],
            Key::EFlat => [DB, X, BB, G, DB, G, BB],
            Key::AFlat => [G, DB, A, Y, DB, X, BB],
            Key::DFlat => [Y, DB, A, GB, G, DB, A],
            Key::GFlat => [GB, G, AB, D, Y, DB, A],
        }
    }
}

impl fmt::Display for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn gauss3_major(key: Key) -> Scale<Tone> {
    gauss3_major_shifted(key, 0)
}

/// The major scale moved by `octaves` octaves.
pub fn gauss3_major_shifted(key: Key, octaves: i32) -> Scale<Tone> {
    let root = &key.root() * &Tone::two().pow(i64::from(octaves));
    let seq = AggregationSequence::new(fixed_steps(&key.sequence()));
    aggregate_at(root, key.position() + 12 * octaves, seq).expect("major sequences close")
}

/// Minor keys, each the Aeolian of its relative major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MinorKey {
    A,
    E,
    B,
    FSharp,
    CSharp,
    GSharp,
    D,
    G,
    C,
    F,
    BFlat,
    EFlat,
}

impl MinorKey {
    pub const ALL: [MinorKey; 12] = [
        MinorKey::A,
        MinorKey::E,
        MinorKey::B,
        MinorKey::FSharp,
        MinorKey::CSharp,
        MinorKey::GSharp,
        MinorKey::D,
        MinorKey::G,
        MinorKey::C,
        MinorKey::F,
        MinorKey::BFlat,
        MinorKey::EFlat,
    ];

    pub fn relative_major(self) -> Key {
        Key::ALL[MinorKey::ALL.iter().position(|m| *m == self).expect("listed")]
    }

    pub fn name(self) -> &'static str {
        match self {
            MinorKey::A => "a",
            MinorKey::E => "e",
            MinorKey::B => "b",
            MinorKey::FSharp => "f#",
            MinorKey::CSharp => "c#",
            MinorKey::GSharp => "g#",
            MinorKey::D => "d",
            MinorKey::G => "g",
            MinorKey::C => "c",
            MinorKey::F => "f",
            MinorKey::BFlat => "bb",
            MinorKey::EFlat => "eb",
        }
    }

    pub fn from_name(name: &str) -> Option<MinorKey> {
        MinorKey::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(name))
    }
}

pub fn minor_scale(key: MinorKey) -> Scale<Tone> {
    gauss3_major(key.relative_major())
        .aeolian()
        .expect("a major scale has seven steps")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GaussSystem {
    I,
    II,
    III,
}

impl GaussSystem {
    pub const ALL: [GaussSystem; 3] = [GaussSystem::I, GaussSystem::II, GaussSystem::III];

    pub fn variant_count(self) -> usize {
        match self {
            GaussSystem::I => 1,
            GaussSystem::II => 4,
            GaussSystem::III => 2,
        }
    }

    pub fn from_name(name: &str) -> Option<GaussSystem> {
        GaussSystem::ALL
            .into_iter()
            .find(|s| s.to_string().eq_ignore_ascii_case(name))
    }
}

impl fmt::Display for GaussSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GaussSystem::I => "I",
            GaussSystem::II => "II",
            GaussSystem::III => "III",
        })
    }
}

fn symmetric(first: [StepSymbol; 6]) -> AggregationSequence<Tone> {
    AggregationSequence::conjugate_symmetric(fixed_steps(&first))
}

fn check_variant(family: &str, variant: usize, count: usize) -> Result<(), ScaleError> {
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

/// Chromatic rows of the three-semitone complex systems, variants in the
/// order `(X₂, X₃)`: II as (ᾱ, α′), (α, ᾱ′), (α′, ᾱ), (ᾱ′, α);
/// III as (ρ, Z), (Z, ρ).
pub fn gauss3_chromatic(system: GaussSystem, variant: usize) -> Result<Scale<Tone>, ScaleError> {
    check_variant(&format!("gauss3 {}", system), variant, system.variant_count())?;
    let (x2, x3) = match (system, variant) {
        (GaussSystem::I, _) => (B, BB),
        (GaussSystem::II, 0) => (AB, AP),
        (GaussSystem::II, 1) => (A, APB),
        (GaussSystem::II, 2) => (AP, AB),
        (GaussSystem::II, _) => (APB, A),
        (GaussSystem::III, 0) => (RHO, Z),
        (GaussSystem::III, _) => (Z, RHO),
    };
    aggregate(Tone::one(), symmetric([A, x2, x3, AB, Z, A]))
}

/// The System I particle `βζ^k` rotated into `|arg| ≤ 45°`, with the unity
/// `ε` such that the particle equals `ε β ζ^k`.
pub fn gauss3_phased_particle(k: i64) -> (Unity, Tone) {
    let beta = Symbol::Beta.tone().expect("fixed");
    let raw = &beta * &zeta().pow(k);
    let (u, p) = raw.principal_associate();
    (u.inv(), p)
}

/// System I with the phase parameter `k`; `k = 0` is the tabulated row.
pub fn gauss3_phased(k: i64) -> Scale<Tone> {
    let (_, p) = gauss3_phased_particle(k);
    let symbol = if k == 0 { Symbol::Beta } else { Symbol::PhasedBeta };
    let x2 = Step::new(StepSymbol::plain(symbol), p);
    let x3 = x2.conj();
    let first = vec![
        Step::fixed(A),
        x2,
        x3,
        Step::fixed(AB),
        Step::fixed(Z),
        Step::fixed(A),
    ];
    aggregate(Tone::one(), AggregationSequence::conjugate_symmetric(first))
        .expect("phase cancels in ββ̄")
}

/// The two-semitone complex system; variant 0 has `X₄ = ᾱ, X₅ = σ`,
/// variant 1 has them swapped.
pub fn gauss2_chromatic(variant: usize) -> Result<Scale<Tone>, ScaleError> {
    check_variant("gauss2", variant, 2)?;
    let (x4, x5) = if variant == 0 { (AB, SIGMA) } else { (SIGMA, AB) };
    aggregate(Tone::one(), symmetric([A, AB, A, x4, x5, A]))
}
