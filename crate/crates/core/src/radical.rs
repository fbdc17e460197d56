//! Real tones `2^a 3^b 5^c` with exponents in twelfths.

use std::fmt;
use std::ops::Mul;

use num_integer::Integer;
use num_traits::Zero;

use crate::tone::{Tone, ToneError};

pub const RADICAL_PRIMES: [u32; 3] = [2, 3, 5];

/// `2^(t₀/12) 3^(t₁/12) 5^(t₂/12)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RadicalTone {
    twelfths: [i64; 3],
}

impl RadicalTone {
    pub fn from_twelfths(twelfths: [i64; 3]) -> RadicalTone {
        RadicalTone { twelfths }
    }

    /// Integer exponents of 2, 3, 5.
    pub fn from_integers(e: [i64; 3]) -> RadicalTone {
        RadicalTone::from_twelfths([12 * e[0], 12 * e[1], 12 * e[2]])
    }

    /// `(num, den)^(1/2)` style constructor: exponents as rationals `n/d`
    /// with `d` dividing 12.
    pub fn from_rationals(e: [(i64, i64); 3]) -> Option<RadicalTone> {
        let mut t = [0i64; 3];
        for (slot, (n, d)) in t.iter_mut().zip(e) {
            if d == 0 || 12 % d != 0 {
                return None;
            }
            *slot = n * (12 / d);
        }
        Some(RadicalTone::from_twelfths(t))
    }

    pub fn one() -> RadicalTone {
        RadicalTone::from_twelfths([0, 0, 0])
    }

    pub fn two() -> RadicalTone {
        RadicalTone::from_twelfths([12, 0, 0])
    }

    pub fn twelfths(&self) -> [i64; 3] {
        self.twelfths
    }

    /// Exponent of the `i`-th prime in lowest terms, denominator positive.
    pub fn exponent(&self, i: usize) -> (i64, i64) {
        let n = self.twelfths[i];
        let g = n.gcd(&12);
        (n / g, 12 / g)
    }

    pub fn is_rational(&self) -> bool {
        self.twelfths.iter().all(|t| t % 12 == 0)
    }

    pub fn to_tone(&self) -> Option<Tone> {
        if !self.is_rational() {
            return None;
        }
        let mut t = Tone::one();
        for (p, e) in RADICAL_PRIMES.iter().zip(self.twelfths) {
            t = &t * &Tone::integer(i64::from(*p)).pow(e / 12);
        }
        Some(t)
    }

    pub fn inv(&self) -> RadicalTone {
        RadicalTone::from_twelfths(self.twelfths.map(|t| -t))
    }

    pub fn pow(&self, k: i64) -> RadicalTone {
        RadicalTone::from_twelfths(self.twelfths.map(|t| t * k))
    }

    /// Exact root when every exponent stays in twelfths.
    pub fn root(&self, n: i64) -> Option<RadicalTone> {
        if n == 0 || self.twelfths.iter().any(|t| t % n != 0) {
            return None;
        }
        Some(RadicalTone::from_twelfths(self.twelfths.map(|t| t / n)))
    }

    pub fn sqrt(&self) -> Option<RadicalTone> {
        self.root(2)
    }

    pub fn cents(&self) -> f64 {
        self.twelfths
            .iter()
            .zip(RADICAL_PRIMES)
            .map(|(t, p)| 100.0 * (*t as f64) * f64::from(p).log2())
            .sum()
    }

    pub fn magnitude(&self) -> f64 {
        (self.cents() / 1200.0).exp2()
    }
}

impl Mul for RadicalTone {
    type Output = RadicalTone;
    fn mul(self, o: RadicalTone) -> RadicalTone {
        RadicalTone::from_twelfths([
            self.twelfths[0] + o.twelfths[0],
            self.twelfths[1] + o.twelfths[1],
            self.twelfths[2] + o.twelfths[2],
        ])
    }
}

impl Mul for &RadicalTone {
    type Output = RadicalTone;
    fn mul(self, o: &RadicalTone) -> RadicalTone {
        *self * *o
    }
}

impl fmt::Display for RadicalTone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, p) in RADICAL_PRIMES.iter().enumerate() {
            let (n, d) = self.exponent(i);
            if n.is_zero() {
                continue;
            }
            if d == 1 {
                parts.push(format!("{}^({})", p, n));
            } else {
                parts.push(format!("{}^({}/{})", p, n, d));
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

pub fn r_mul(a: &RadicalTone, b: &RadicalTone) -> RadicalTone {
    a * b
}

pub fn r_pow(a: &RadicalTone, k: i64) -> RadicalTone {
    a.pow(k)
}

pub fn r_equal(a: &RadicalTone, b: &RadicalTone) -> bool {
    a == b
}

/// Exponents of 2, 3, 5 of a positive rational five-limit tone.
fn rational_exponents(t: &Tone) -> Option<[i64; 3]> {
    let (_, [a, b, c, d]) = t.five_limit()?;
    // (1+i)^2 = 2i, so a real tone has even a; (1+2i)(1-2i) = 5 forces c = d.
    if a % 2 != 0 || c != d {
        return None;
    }
    Some([a / 2, b, c])
}

pub fn embed_real(t: &Tone) -> Result<RadicalTone, ToneError> {
    if !t.is_positive_real() {
        return Err(ToneError::NotRealFiveLimit(t.clone()));
    }
    rational_exponents(t)
        .map(RadicalTone::from_integers)
        .ok_or_else(|| ToneError::NotRealFiveLimit(t.clone()))
}

/// `|t|` as a radical: `|1+i| = 2^(1/2)`, `|1±2i| = 5^(1/2)`, `|ε| = 1`.
pub fn magnitude_radical(t: &Tone) -> Result<RadicalTone, ToneError> {
    let (_, [a, b, c, d]) = t
        .five_limit()
        .ok_or_else(|| ToneError::NotFiveLimit(t.clone()))?;
    Ok(RadicalTone::from_twelfths([6 * a, 12 * b, 6 * (c + d)]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shadow_magnitudes() {
        let alpha = Tone::gaussian(3, 3, 4);
        let theta = RadicalTone::from_twelfths([6 - 24, 12, 0]);
        assert_eq!(magnitude_radical(&alpha).unwrap(), theta);
        let beta = Tone::gaussian(3, 1, 3);
        assert_eq!(
            magnitude_radical(&beta).unwrap(),
            RadicalTone::from_twelfths([6, -12, 6])
        );
        assert_eq!(
            magnitude_radical(&Tone::ratio(16, 15)).unwrap(),
            embed_real(&Tone::ratio(16, 15)).unwrap()
        );
    }

    #[test]
    fn embedding() {
        assert_eq!(
            embed_real(&Tone::ratio(45, 32)).unwrap(),
            RadicalTone::from_integers([-5, 2, 1])
        );
        assert!(embed_real(&Tone::gaussian(1, 1, 1)).is_err());
        assert!(embed_real(&Tone::ratio(7, 4)).is_err());
        assert!(embed_real(&Tone::ratio(-3, 2)).is_err());
        let r = RadicalTone::from_integers([-5, 2, 1]);
        assert_eq!(r.to_tone(), Some(Tone::ratio(45, 32)));
    }

    #[test]
    fn arithmetic_and_display() {
        let psi = RadicalTone::from_twelfths([1, 0, 0]);
        assert_eq!(psi.pow(12), RadicalTone::two());
        assert_eq!(psi.pow(6) * psi.pow(6), RadicalTone::two());
        let eta = RadicalTone::from_twelfths([6, -12, 6]);
        assert_eq!(eta.to_string(), "2^(1/2) 3^(-1) 5^(1/2)");
        assert_eq!(RadicalTone::one().to_string(), "1");
        assert!((psi.pow(6).cents() - 600.0).abs() < 1e-9);
        assert!((RadicalTone::from_integers([-1, 1, 0]).cents() - 701.955_000_865_387_4).abs() < 1e-9);
        assert_eq!(RadicalTone::from_rationals([(1, 4), (0, 1), (0, 1)]).unwrap().twelfths(), [3, 0, 0]);
        assert_eq!(RadicalTone::from_rationals([(1, 5), (0, 1), (0, 1)]), None);
    }
}
