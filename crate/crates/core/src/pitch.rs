//! The arithmetic shared by complex and radical tones.

use std::fmt;
use std::hash::Hash;

use crate::radical::RadicalTone;
use crate::tone::Tone;

/// A multiplicative tone arithmetic that scales can be built over.
pub trait Pitch: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync {
    fn unison() -> Self;
    fn octave() -> Self;
    fn compose(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
    fn conjugate(&self) -> Self;
    fn cents(&self) -> f64;
    fn into_value(self) -> Value;

    fn magnitude(&self) -> f64 {
        (self.cents() / 1200.0).exp2()
    }

    fn ratio_to(&self, base: &Self) -> Self {
        self.compose(&base.inverse())
    }

    /// Equal up to a unity factor where the arithmetic has unities.
    fn associated(&self, other: &Self) -> bool {
        self == other
    }
}

impl Pitch for Tone {
    fn unison() -> Self {
        Tone::one()
    }
    fn octave() -> Self {
        Tone::two()
    }
    fn compose(&self, other: &Self) -> Self {
        self * other
    }
    fn inverse(&self) -> Self {
        self.inv()
    }
    fn conjugate(&self) -> Self {
        self.conj()
    }
    fn cents(&self) -> f64 {
        Tone::cents(self)
    }
    fn into_value(self) -> Value {
        Value::Tone(self)
    }
    fn associated(&self, other: &Self) -> bool {
        self.same_tone(other)
    }
}

impl Pitch for RadicalTone {
    fn unison() -> Self {
        RadicalTone::one()
    }
    fn octave() -> Self {
        RadicalTone::two()
    }
    fn compose(&self, other: &Self) -> Self {
        self * other
    }
    fn inverse(&self) -> Self {
        self.inv()
    }
    fn conjugate(&self) -> Self {
        *self
    }
    fn cents(&self) -> f64 {
        RadicalTone::cents(self)
    }
    fn into_value(self) -> Value {
        Value::Radical(self)
    }
}

/// Either kind of exact tone.
///
/// A radical whose exponents are all integers is always held as a [`Tone`],
/// so each value has exactly one representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Value {
    Tone(Tone),
    Radical(RadicalTone),
}

impl Value {
    pub fn normalized(self) -> Value {
        match self {
            Value::Radical(r) => match r.to_tone() {
                Some(t) => Value::Tone(t),
                None => Value::Radical(r),
            },
            v => v,
        }
    }

    pub fn cents(&self) -> f64 {
        match self {
            Value::Tone(t) => t.cents(),
            Value::Radical(r) => r.cents(),
        }
    }

    pub fn magnitude(&self) -> f64 {
        match self {
            Value::Tone(t) => t.magnitude(),
            Value::Radical(r) => r.magnitude(),
        }
    }

    pub fn as_tone(&self) -> Option<&Tone> {
        match self {
            Value::Tone(t) => Some(t),
            Value::Radical(_) => None,
        }
    }
}

impl From<Tone> for Value {
    fn from(t: Tone) -> Value {
        Value::Tone(t)
    }
}

impl From<RadicalTone> for Value {
    fn from(r: RadicalTone) -> Value {
        Value::Radical(r).normalized()
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Tone(t) => t.fmt(f),
            Value::Radical(r) => r.fmt(f),
        }
    }
}
