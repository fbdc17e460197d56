//! Step symbols and the values bound to them.

use std::fmt;

use crate::pitch::Value;
use crate::radical::RadicalTone;
use crate::tone::Tone;

/// Base names of aggregation steps.
///
/// `p`, `q`, `r`, `η` and `βζ` are labels whose value depends on the system
/// they appear in; every other symbol has one fixed value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    X,
    Y,
    Z,
    W,
    P,
    Q,
    R,
    Alpha,
    AlphaPrime,
    Beta,
    PhasedBeta,
    Gamma,
    Delta,
    Rho,
    Sigma,
    Tau,
    Theta,
    Nu,
    Eta,
    Psi,
}

impl Symbol {
    pub const ALL: [Symbol; 20] = [
        Symbol::X,
        Symbol::Y,
        Symbol::Z,
        Symbol::W,
        Symbol::P,
        Symbol::Q,
        Symbol::R,
        Symbol::Alpha,
        Symbol::AlphaPrime,
        Symbol::Beta,
        Symbol::PhasedBeta,
        Symbol::Gamma,
        Symbol::Delta,
        Symbol::Rho,
        Symbol::Sigma,
        Symbol::Tau,
        Symbol::Theta,
        Symbol::Nu,
        Symbol::Eta,
        Symbol::Psi,
    ];

    pub fn glyph(self) -> &'static str {
        match self {
            Symbol::X => "X",
            Symbol::Y => "Y",
            Symbol::Z => "Z",
            Symbol::W => "W",
            Symbol::P => "p",
            Symbol::Q => "q",
            Symbol::R => "r",
            Symbol::Alpha => "α",
            Symbol::AlphaPrime => "α′",
            Symbol::Beta => "β",
            Symbol::PhasedBeta => "βζ",
            Symbol::Gamma => "γ",
            Symbol::Delta => "δ",
            Symbol::Rho => "ρ",
            Symbol::Sigma => "σ",
            Symbol::Tau => "τ",
            Symbol::Theta => "θ",
            Symbol::Nu => "ν",
            Symbol::Eta => "η",
            Symbol::Psi => "ψ",
        }
    }

    pub fn ascii(self) -> &'static str {
        match self {
            Symbol::X => "X",
            Symbol::Y => "Y",
            Symbol::Z => "Z",
            Symbol::W => "W",
            Symbol::P => "p",
            Symbol::Q => "q",
            Symbol::R => "r",
            Symbol::Alpha => "alpha",
            Symbol::AlphaPrime => "alpha_prime",
            Symbol::Beta => "beta",
            Symbol::PhasedBeta => "beta_zeta",
            Symbol::Gamma => "gamma",
            Symbol::Delta => "delta",
            Symbol::Rho => "rho",
            Symbol::Sigma => "sigma",
            Symbol::Tau => "tau",
            Symbol::Theta => "theta",
            Symbol::Nu => "nu",
            Symbol::Eta => "eta",
            Symbol::Psi => "psi",
        }
    }

    /// Width in equal-tempered semitones.
    pub fn semitones(self) -> u8 {
        match self {
            Symbol::X | Symbol::Y | Symbol::Gamma | Symbol::Delta => 2,
            Symbol::W => 3,
            _ => 1,
        }
    }

    /// The fixed value, or `None` for system-relative labels.
    pub fn value(self) -> Option<Value> {
        let t = |v: Tone| Some(Value::Tone(v));
        let r = |tw: [i64; 3]| Some(Value::Radical(RadicalTone::from_twelfths(tw)));
        match self {
            Symbol::X => t(Tone::ratio(9, 8)),
            Symbol::Y => t(Tone::ratio(10, 9)),
            Symbol::Z => t(Tone::ratio(16, 15)),
            Symbol::W => t(Tone::ratio(32, 27)),
            Symbol::Alpha => t(Tone::gaussian(3, 3, 4)),
            Symbol::AlphaPrime => t(Tone::gaussian(20, 20, 27)),
            Symbol::Beta => t(Tone::gaussian(3, 1, 3)),
            Symbol::Gamma => t(Tone::gaussian(1, 2, 2)),
            Symbol::Delta => t(Tone::gaussian(4, 4, 5)),
            Symbol::Rho => t(Tone::ratio(25, 24)),
            Symbol::Sigma => t(Tone::ratio(256, 243)),
            Symbol::Tau => t(Tone::ratio(2187, 2048)),
            Symbol::Theta => r([6 - 24, 12, 0]),
            Symbol::Nu => r([39, -24, 0]),
            Symbol::Psi => r([1, 0, 0]),
            Symbol::P | Symbol::Q | Symbol::R | Symbol::Eta | Symbol::PhasedBeta => None,
        }
    }

    pub fn tone(self) -> Option<Tone> {
        match self.value()? {
            Value::Tone(t) => Some(t),
            Value::Radical(_) => None,
        }
    }

    pub fn radical(self) -> Option<RadicalTone> {
        match self.value()? {
            Value::Tone(t) => crate::radical::embed_real(&t).ok(),
            Value::Radical(r) => Some(r),
        }
    }
}

/// A symbol, possibly conjugated (drawn with a bar).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StepSymbol {
    pub symbol: Symbol,
    pub conjugated: bool,
}

impl StepSymbol {
    pub const fn plain(symbol: Symbol) -> StepSymbol {
        StepSymbol {
            symbol,
            conjugated: false,
        }
    }

    pub const fn bar(symbol: Symbol) -> StepSymbol {
        StepSymbol {
            symbol,
            conjugated: true,
        }
    }

    pub fn conj(self) -> StepSymbol {
        StepSymbol {
            symbol: self.symbol,
            conjugated: !self.conjugated,
        }
    }

    pub fn semitones(self) -> u8 {
        self.symbol.semitones()
    }

    /// Fixed value with the bar applied.
    pub fn tone(self) -> Option<Tone> {
        let t = self.symbol.tone()?;
        Some(if self.conjugated { t.conj() } else { t })
    }

    pub fn ascii(self) -> String {
        if self.conjugated {
            format!("conj({})", self.symbol.ascii())
        } else {
            self.symbol.ascii().to_string()
        }
    }

    /// Find the fixed-valued symbol whose value, or conjugate, is `t`.
    pub fn identify(t: &Tone) -> Option<StepSymbol> {
        for s in Symbol::ALL {
            if let Some(v) = s.tone() {
                if &v == t {
                    return Some(StepSymbol::plain(s));
                }
                if &v.conj() == t {
                    return Some(StepSymbol::bar(s));
                }
            }
        }
        None
    }

    pub fn identify_radical(r: &RadicalTone) -> Option<StepSymbol> {
        Symbol::ALL
            .into_iter()
            .find(|s| s.radical().as_ref() == Some(r))
            .map(StepSymbol::plain)
    }
}

impl fmt::Display for StepSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.symbol.glyph();
        if !self.conjugated {
            return f.write_str(g);
        }
        let mut chars = g.chars();
        let first = chars.next().expect("glyph is nonempty");
        write!(f, "{}\u{0304}{}", first, chars.as_str())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn glyphs() {
        assert_eq!(StepSymbol::bar(Symbol::Alpha).to_string(), "α\u{0304}");
        assert_eq!(StepSymbol::bar(Symbol::AlphaPrime).to_string(), "α\u{0304}′");
        assert_eq!(StepSymbol::plain(Symbol::P).to_string(), "p");
        assert_eq!(StepSymbol::bar(Symbol::Gamma).ascii(), "conj(gamma)");
    }

    #[test]
    fn identification() {
        assert_eq!(
            StepSymbol::identify(&Tone::gaussian(3, -3, 4)),
            Some(StepSymbol::bar(Symbol::Alpha))
        );
        assert_eq!(StepSymbol::identify(&Tone::ratio(16, 15)), Some(StepSymbol::plain(Symbol::Z)));
        assert_eq!(StepSymbol::identify(&Tone::ratio(7, 6)), None);
        let theta = RadicalTone::from_twelfths([-18, 12, 0]);
        assert_eq!(StepSymbol::identify_radical(&theta), Some(StepSymbol::plain(Symbol::Theta)));
        assert_eq!(
            StepSymbol::identify_radical(&RadicalTone::from_integers([4, -1, -1])),
            Some(StepSymbol::plain(Symbol::Z))
        );
    }

    #[test]
    fn comma_relative_semitone() {
        let alpha = Symbol::Alpha.tone().unwrap();
        let kappa = crate::tone::kappa();
        assert_eq!(Symbol::AlphaPrime.tone().unwrap(), &alpha / &kappa);
    }
}
