//! Gaussian-rational tones and their canonical factored form.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Div, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::gaussian::{factor, CanonicalPrime, GaussianInteger, Unity};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToneError {
    #[error("zero is not a tone")]
    Zero,
    #[error("{0} is not a phase factor")]
    NotPhaseFactor(Tone),
    #[error("{0} is not five-limit")]
    NotFiveLimit(Tone),
    #[error("{0} is not a positive real five-limit tone")]
    NotRealFiveLimit(Tone),
}

/// A nonzero Gaussian rational `(re + im·i) / den`.
///
/// Stored reduced: `den > 0` and `gcd(re, im, den) = 1`. That form is unique,
/// so derived equality is exact value equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tone {
    num: GaussianInteger,
    den: BigInt,
}

impl Tone {
    /// `num / den` for Gaussian integers, with the denominator made rational.
    pub fn new(num: GaussianInteger, den: GaussianInteger) -> Result<Tone, ToneError> {
        if num.is_zero() || den.is_zero() {
            return Err(ToneError::Zero);
        }
        let n = &num * &den.conj();
        Ok(Tone::reduce(n, den.norm()))
    }

    fn reduce(num: GaussianInteger, den: BigInt) -> Tone {
        let g = num.re.gcd(&num.im).gcd(&den);
        let g = if den.is_negative() { -g } else { g };
        Tone {
            num: GaussianInteger {
                re: &num.re / &g,
                im: &num.im / &g,
            },
            den: den / g,
        }
    }

    /// `n / d`. Panics when either is zero.
    pub fn ratio(n: i64, d: i64) -> Tone {
        Tone::gaussian(n, 0, d)
    }

    pub fn integer(n: i64) -> Tone {
        Tone::ratio(n, 1)
    }

    /// `(re + im·i) / den`. Panics on a zero numerator or denominator.
    pub fn gaussian(re: i64, im: i64, den: i64) -> Tone {
        assert!(den != 0 && (re != 0 || im != 0), "zero in tone literal");
        Tone::reduce(GaussianInteger::new(re, im), BigInt::from(den))
    }

    pub fn from_gaussian(g: GaussianInteger) -> Result<Tone, ToneError> {
        Tone::new(g, GaussianInteger::one())
    }

    pub fn from_unity(u: Unity) -> Tone {
        Tone {
            num: u.to_gaussian(),
            den: BigInt::one(),
        }
    }

    pub fn one() -> Tone {
        Tone::integer(1)
    }

    pub fn two() -> Tone {
        Tone::integer(2)
    }

    pub fn i() -> Tone {
        Tone::gaussian(0, 1, 1)
    }

    pub fn num(&self) -> &GaussianInteger {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_real(&self) -> bool {
        self.num.im.is_zero()
    }

    pub fn is_positive_real(&self) -> bool {
        self.is_real() && self.num.re.is_positive()
    }

    pub fn conj(&self) -> Tone {
        Tone {
            num: self.num.conj(),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Tone {
        Tone::new(GaussianInteger::real(self.den.clone()), self.num.clone())
            .expect("a tone is nonzero")
    }

    pub fn pow(&self, k: i64) -> Tone {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let e = k.unsigned_abs();
        let mut num = GaussianInteger::one();
        let mut den = BigInt::one();
        for _ in 0..e {
            num = &num * &base.num;
            den *= &base.den;
        }
        Tone::reduce(num, den)
    }

    pub fn rotate(&self, u: Unity) -> Tone {
        Tone {
            num: u.apply(&self.num),
            den: self.den.clone(),
        }
    }

    /// `|t|²` as a positive rational `(n, d)`.
    pub fn norm(&self) -> (BigInt, BigInt) {
        (self.num.norm(), &self.den * &self.den)
    }

    pub fn cents(&self) -> f64 {
        600.0 * log2_big(&self.num.norm()) - 1200.0 * log2_big(&self.den)
    }

    pub fn magnitude(&self) -> f64 {
        (self.cents() / 1200.0).exp2()
    }

    /// Argument in degrees, in `(-180, 180]`.
    pub fn argument_degrees(&self) -> f64 {
        let re = self.num.re.to_f64().unwrap_or(f64::NAN);
        let im = self.num.im.to_f64().unwrap_or(f64::NAN);
        im.atan2(re).to_degrees()
    }

    /// Inside the closed sector `|arg| ≤ 45°`, i.e. `re ≥ |im|`.
    pub fn is_principal(&self) -> bool {
        self.num.re >= self.num.im.abs()
    }

    /// `(u, p)` with `self = u·p` and `p` principal. On the sector boundary
    /// the tone itself is kept.
    pub fn principal_associate(&self) -> (Unity, Tone) {
        for u in Unity::ALL {
            let p = self.rotate(u.inv());
            if p.is_principal() {
                return (u, p);
            }
        }
        unreachable!("every nonzero tone has a principal associate")
    }

    pub fn to_factored(&self) -> FactoredTone {
        let n = factor(&self.num).expect("numerator is nonzero");
        let d = factor(&GaussianInteger::real(self.den.clone())).expect("denominator is nonzero");
        let mut exponents: BTreeMap<CanonicalPrime, i64> = BTreeMap::new();
        for (p, e) in n.powers {
            *exponents.entry(p).or_default() += i64::from(e);
        }
        for (p, e) in d.powers {
            *exponents.entry(p).or_default() -= i64::from(e);
        }
        exponents.retain(|_, e| *e != 0);
        FactoredTone {
            unity: n.unity * d.unity.inv(),
            exponents,
        }
    }

    pub fn from_factored(f: &FactoredTone) -> Tone {
        let mut num = f.unity.to_gaussian();
        let mut den = GaussianInteger::one();
        for (p, e) in &f.exponents {
            let pe = p.value().pow(e.unsigned_abs() as u32);
            if *e > 0 {
                num = &num * &pe;
            } else {
                den = &den * &pe;
            }
        }
        Tone::new(num, den).expect("factored tone is nonzero")
    }

    pub fn is_n_limit(&self, n: u64) -> bool {
        let bound = BigInt::from(n);
        self.to_factored()
            .exponents
            .keys()
            .all(|p| p.rational_prime() <= bound)
    }

    /// `(ε, [a, b, c, d])` with `t = ε (1+i)^a 3^b (1+2i)^c (1-2i)^d`.
    pub fn five_limit(&self) -> Option<(Unity, [i64; 4])> {
        let f = self.to_factored();
        let basis = five_limit_basis();
        let mut e = [0i64; 4];
        for (p, k) in &f.exponents {
            let idx = basis.iter().position(|b| b == p)?;
            e[idx] = *k;
        }
        Some((f.unity, e))
    }

    pub fn from_five_limit(u: Unity, e: [i64; 4]) -> Tone {
        let basis = five_limit_basis();
        let exponents = basis
            .into_iter()
            .zip(e)
            .filter(|(_, k)| *k != 0)
            .collect();
        Tone::from_factored(&FactoredTone { unity: u, exponents })
    }

    pub fn is_phase_factor(&self) -> bool {
        let (n, d) = self.norm();
        n == d
    }

    /// `(ε, k)` with `self = ε ζ^k`, `ζ = (3+4i)/5`.
    pub fn phase_decompose(&self) -> Result<(Unity, i64), ToneError> {
        if !self.is_phase_factor() {
            return Err(ToneError::NotPhaseFactor(self.clone()));
        }
        let (u, [a, b, c, d]) = self
            .five_limit()
            .ok_or_else(|| ToneError::NotFiveLimit(self.clone()))?;
        debug_assert!(a == 0 && b == 0 && c == -d);
        // ζ = -(1-2i)/(1+2i), so u (1-2i)^d (1+2i)^-d = u (-1)^d ζ^d.
        Ok((u * Unity::MinusOne.pow(d), d))
    }

    /// Equal up to a unity factor.
    pub fn same_tone(&self, other: &Tone) -> bool {
        let q = self / other;
        q.den.is_one() && q.num.is_unity()
    }

    pub fn complement(&self) -> Tone {
        &Tone::two() / self
    }

    pub fn kappa_shift(&self) -> Tone {
        self * &kappa()
    }

    /// Exact square root when one exists in `Q(i)`.
    pub fn sqrt(&self) -> Option<Tone> {
        let f = self.to_factored();
        if f.exponents.values().any(|e| e % 2 != 0) {
            return None;
        }
        let unity = match f.unity {
            Unity::One => Unity::One,
            Unity::MinusOne => Unity::I,
            _ => return None,
        };
        let exponents = f.exponents.iter().map(|(p, e)| (p.clone(), e / 2)).collect();
        let r = Tone::from_factored(&FactoredTone { unity, exponents });
        let upper = r.num.re.is_positive() || (r.num.re.is_zero() && r.num.im.is_positive());
        Some(if upper { r } else { r.rotate(Unity::MinusOne) })
    }
}

/// `[1+i, 3, 1+2i, 1-2i]`.
pub fn five_limit_basis() -> [CanonicalPrime; 4] {
    let p = |re, im| {
        CanonicalPrime::associate_of(&GaussianInteger::new(re, im))
            .expect("basis element is prime")
            .1
    };
    [p(1, 1), p(3, 0), p(1, 2), p(1, -2)]
}

pub fn log2_big(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().expect("fits in f64").log2();
    }
    let shift = bits - 900;
    (x >> shift).to_f64().expect("fits in f64").log2() + shift as f64
}

impl fmt::Display for Tone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_real() {
            write!(f, "{}", self.num.re)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        if !self.den.is_one() {
            write!(f, "/{}", self.den)?;
        }
        Ok(())
    }
}

impl Mul for &Tone {
    type Output = Tone;
    fn mul(self, o: &Tone) -> Tone {
        Tone::reduce(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Mul for Tone {
    type Output = Tone;
    fn mul(self, o: Tone) -> Tone {
        &self * &o
    }
}

impl Div for &Tone {
    type Output = Tone;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &Tone) -> Tone {
        self * &o.inv()
    }
}

impl Div for Tone {
    type Output = Tone;
    fn div(self, o: Tone) -> Tone {
        &self / &o
    }
}

/// A tone as `unity · Π p^e` over the canonical basis, with nonzero exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredTone {
    pub unity: Unity,
    pub exponents: BTreeMap<CanonicalPrime, i64>,
}

impl fmt::Display for FactoredTone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.unity)?;
        for (p, e) in &self.exponents {
            write!(f, " · ({})^{}", p, e)?;
        }
        Ok(())
    }
}

pub fn kappa() -> Tone {
    Tone::ratio(81, 80)
}

pub fn zeta() -> Tone {
    Tone::gaussian(3, 4, 5)
}

/// The comma chains `a → a·κ → …` quoted for just intervals.
pub fn comma_relations() -> Vec<(Tone, Tone)> {
    let r = Tone::ratio;
    vec![
        (r(10, 9), r(9, 8)),
        (r(256, 243), r(16, 15)),
        (r(16, 15), r(27, 25)),
        (r(25, 24), r(135, 128)),
        (r(5, 4), r(81, 64)),
        (r(5, 3), r(27, 16)),
        (r(15, 8), r(243, 128)),
    ]
}
