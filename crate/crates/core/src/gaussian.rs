//! Arithmetic in the ring of Gaussian integers `Z[i]`.
//!
//! Components are unbounded [`BigInt`]s. Factorizations are expressed over a
//! fixed basis with one representative per association class of primes.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaussianError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zeros is undefined")]
    GcdOfZeros,
    #[error("zero has no factorization")]
    FactorZero,
}

/// A Gaussian integer `re + im·i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianInteger {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInteger {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussianInteger {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn real(re: impl Into<BigInt>) -> Self {
        Self::new(re, 0)
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn i() -> Self {
        Self::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        GaussianInteger {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn is_unity(&self) -> bool {
        self.norm().is_one()
    }

    /// `[g, -g, i·g, -i·g]`.
    pub fn associates(&self) -> [GaussianInteger; 4] {
        [
            self.clone(),
            -self.clone(),
            Unity::I.apply(self),
            Unity::MinusI.apply(self),
        ]
    }

    /// Divisible by `1+i`, i.e. both components have the same parity.
    pub fn is_even(&self) -> bool {
        (&self.re + &self.im).is_even()
    }

    /// Exact quotient `self / d` if `d` divides `self`.
    pub fn checked_div(&self, d: &GaussianInteger) -> Option<GaussianInteger> {
        if d.is_zero() {
            return None;
        }
        let n = d.norm();
        let t = self * &d.conj();
        let (qr, rr) = t.re.div_rem(&n);
        let (qi, ri) = t.im.div_rem(&n);
        if rr.is_zero() && ri.is_zero() {
            Some(GaussianInteger { re: qr, im: qi })
        } else {
            None
        }
    }

    pub fn divides(&self, n: &GaussianInteger) -> bool {
        n.checked_div(self).is_some()
    }

    pub fn pow(&self, e: u32) -> GaussianInteger {
        let mut acc = GaussianInteger::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The associate with positive real part and nonnegative imaginary part.
    pub fn first_quadrant(&self) -> GaussianInteger {
        if self.is_zero() {
            return self.clone();
        }
        self.associates()
            .into_iter()
            .find(|a| a.re.is_positive() && !a.im.is_negative())
            .expect("a nonzero Gaussian integer has a first-quadrant associate")
    }
}

impl fmt::Display for GaussianInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im_abs = self.im.abs();
        let im_part = if im_abs.is_one() {
            "i".to_string()
        } else {
            format!("{}i", im_abs)
        };
        if self.re.is_zero() {
            if self.im.is_negative() {
                write!(f, "-{}", im_part)
            } else {
                write!(f, "{}", im_part)
            }
        } else {
            let sign = if self.im.is_negative() { '-' } else { '+' };
            write!(f, "{}{}{}", self.re, sign, im_part)
        }
    }
}

impl Add for &GaussianInteger {
    type Output = GaussianInteger;
    fn add(self, o: &GaussianInteger) -> GaussianInteger {
        GaussianInteger {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }
}

impl Sub for &GaussianInteger {
    type Output = GaussianInteger;
    fn sub(self, o: &GaussianInteger) -> GaussianInteger {
        GaussianInteger {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
}

impl Mul for &GaussianInteger {
    type Output = GaussianInteger;
    fn mul(self, o: &GaussianInteger) -> GaussianInteger {
        GaussianInteger {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Mul for GaussianInteger {
    type Output = GaussianInteger;
    fn mul(self, o: GaussianInteger) -> GaussianInteger {
        &self * &o
    }
}

impl Neg for GaussianInteger {
    type Output = GaussianInteger;
    fn neg(self) -> GaussianInteger {
        GaussianInteger {
            re: -self.re,
            im: -self.im,
        }
    }
}

/// One of the four units `1, i, -1, -i`, stored as the power of `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Unity {
    One,
    I,
    MinusOne,
    MinusI,
}

impl Unity {
    pub const ALL: [Unity; 4] = [Unity::One, Unity::I, Unity::MinusOne, Unity::MinusI];

    pub fn from_power(k: i64) -> Unity {
        Unity::ALL[k.rem_euclid(4) as usize]
    }

    pub fn power(self) -> u8 {
        match self {
            Unity::One => 0,
            Unity::I => 1,
            Unity::MinusOne => 2,
            Unity::MinusI => 3,
        }
    }


    pub fn inv(self) -> Unity {
        Unity::from_power(-i64::from(self.power()))
    }

    pub fn conj(self) -> Unity {
        self.inv()
    }

    pub fn pow(self, k: i64) -> Unity {
        Unity::from_power(i64::from(self.power()) * k.rem_euclid(4))
    }

    pub fn to_gaussian(self) -> GaussianInteger {
        match self {
            Unity::One => GaussianInteger::new(1, 0),
            Unity::I => GaussianInteger::new(0, 1),
            Unity::MinusOne => GaussianInteger::new(-1, 0),
            Unity::MinusI => GaussianInteger::new(0, -1),
        }
    }

    pub fn from_gaussian(g: &GaussianInteger) -> Option<Unity> {
        Unity::ALL.into_iter().find(|u| &u.to_gaussian() == g)
    }

    /// Multiply `g` by this unit without a general product.
    pub fn apply(self, g: &GaussianInteger) -> GaussianInteger {
        match self {
            Unity::One => g.clone(),
            Unity::I => GaussianInteger {
                re: -&g.im,
                im: g.re.clone(),
            },
            Unity::MinusOne => GaussianInteger {
                re: -&g.re,
                im: -&g.im,
            },
            Unity::MinusI => GaussianInteger {
                re: g.im.clone(),
                im: -&g.re,
            },
        }
    }
}

impl std::ops::Mul for Unity {
    type Output = Unity;
    /// Adds exponents of `i`.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, o: Unity) -> Unity {
        Unity::from_power(i64::from(self.power()) + i64::from(o.power()))
    }
}

impl fmt::Display for Unity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Unity::One => "1",
            Unity::I => "i",
            Unity::MinusOne => "-1",
            Unity::MinusI => "-i",
        })
    }
}

/// A member of the canonical prime basis.
///
/// The basis holds `1+i`, every rational prime `p ≡ 3 (mod 4)` as itself, and
/// for `p = a² + b² ≡ 1 (mod 4)` with `0 < a < b` the pair `a+bi`, `a-bi`.
/// Ordered by norm, then by imaginary part descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalPrime(GaussianInteger);

impl CanonicalPrime {
    pub fn value(&self) -> &GaussianInteger {
        &self.0
    }

    pub fn norm(&self) -> BigInt {
        self.0.norm()
    }

    /// The rational prime lying under this prime.
    pub fn rational_prime(&self) -> BigInt {
        if self.0.im.is_zero() {
            self.0.re.clone()
        } else {
            self.0.norm()
        }
    }

    pub fn conj(&self) -> CanonicalPrime {
        CanonicalPrime::associate_of(&self.0.conj())
            .expect("conjugate of a prime is prime")
            .1
    }

    pub fn one_plus_i() -> CanonicalPrime {
        CanonicalPrime(GaussianInteger::new(1, 1))
    }

    /// Split `g = u·p` with `p` in the basis, provided `g` is prime.
    pub fn associate_of(g: &GaussianInteger) -> Option<(Unity, CanonicalPrime)> {
        if !is_prime(g) {
            return None;
        }
        let target = Self::basis_form(g);
        for u in Unity::ALL {
            if u.apply(&target) == *g {
                return Some((u, CanonicalPrime(target)));
            }
        }
        unreachable!("basis form is an associate")
    }

    fn basis_form(g: &GaussianInteger) -> GaussianInteger {
        let n = g.norm();
        if n == BigInt::from(2) {
            return GaussianInteger::new(1, 1);
        }
        if g.re.is_zero() || g.im.is_zero() {
            // Inert rational prime.
            return GaussianInteger::real(g.re.abs() + g.im.abs());
        }
        g.associates()
            .into_iter()
            .find(|a| a.re.is_positive() && a.im.abs() > a.re)
            .expect("split prime has an associate with |im| > re > 0")
    }
}

impl Ord for CanonicalPrime {
    fn cmp(&self, o: &Self) -> Ordering {
        self.norm()
            .cmp(&o.norm())
            .then_with(|| o.0.im.cmp(&self.0.im))
    }
}

impl PartialOrd for CanonicalPrime {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for CanonicalPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `g = unity · Π p^e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unity: Unity,
    pub powers: BTreeMap<CanonicalPrime, u32>,
}

impl Factorization {
    pub fn product(&self) -> GaussianInteger {
        let mut acc = self.unity.to_gaussian();
        for (p, e) in &self.powers {
            acc = &acc * &p.value().pow(*e);
        }
        acc
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.unity)?;
        for (p, e) in &self.powers {
            if *e == 1 {
                write!(f, " · ({})", p)?;
            } else {
                write!(f, " · ({})^{}", p, e)?;
            }
        }
        Ok(())
    }
}

pub fn norm(g: &GaussianInteger) -> BigInt {
    g.norm()
}

/// Division with remainder, rounding each coordinate of `n/d` half up.
pub fn euclidean_divmod(
    n: &GaussianInteger,
    d: &GaussianInteger,
) -> Result<(GaussianInteger, GaussianInteger), GaussianError> {
    if d.is_zero() {
        return Err(GaussianError::DivisionByZero);
    }
    let nd = d.norm();
    let t = n * &d.conj();
    let two_nd = &nd * 2;
    let round = |x: &BigInt| -> BigInt { (x * BigInt::from(2) + &nd).div_floor(&two_nd) };
    let q = GaussianInteger {
        re: round(&t.re),
        im: round(&t.im),
    };
    let r = n - &(&q * d);
    Ok((q, r))
}

/// Greatest common divisor, normalized to the first quadrant.
pub fn gcd(a: &GaussianInteger, b: &GaussianInteger) -> Result<GaussianInteger, GaussianError> {
    if a.is_zero() && b.is_zero() {
        return Err(GaussianError::GcdOfZeros);
    }
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let (_, r) = euclidean_divmod(&x, &y)?;
        x = y;
        y = r;
    }
    Ok(x.first_quadrant())
}

pub fn is_rational_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    if let Some(small) = n.to_u64() {
        if small < 4 {
            return true;
        }
        if small % 2 == 0 {
            return false;
        }
        let mut d = 3u64;
        while d.saturating_mul(d) <= small {
            if small % d == 0 {
                return false;
            }
            d += 2;
        }
        return true;
    }
    let mut d = BigInt::from(2);
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            return false;
        }
        d += 1;
    }
    true
}

pub fn is_prime(g: &GaussianInteger) -> bool {
    if is_rational_prime(&g.norm()) {
        return true;
    }
    let p = if g.re.is_zero() {
        g.im.abs()
    } else if g.im.is_zero() {
        g.re.abs()
    } else {
        return false;
    };
    is_rational_prime(&p) && (&p % 4u32) == BigInt::from(3)
}

/// Rational primes dividing `n`, with multiplicity, by trial division.
fn rational_factors(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut out = Vec::new();
    let mut m = n.abs();
    let mut d = BigInt::from(2);
    while &d * &d <= m {
        let mut e = 0;
        while (&m % &d).is_zero() {
            m /= &d;
            e += 1;
        }
        if e > 0 {
            out.push((d.clone(), e));
        }
        d += if d == BigInt::from(2) { 1 } else { 2 };
    }
    if m > BigInt::one() {
        out.push((m, 1));
    }
    out
}

/// `a + bi` with `0 < a < b` and `a² + b² = p`, for a prime `p ≡ 1 (mod 4)`.
fn two_squares(p: &BigInt) -> GaussianInteger {
    let mut a = BigInt::one();
    loop {
        let rest = p - &a * &a;
        let b = rest.sqrt();
        if &b * &b == rest {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            return GaussianInteger { re: lo, im: hi };
        }
        a += 1;
    }
}

/// Unique factorization over the canonical basis.
pub fn factor(g: &GaussianInteger) -> Result<Factorization, GaussianError> {
    if g.is_zero() {
        return Err(GaussianError::FactorZero);
    }
    let mut rest = g.clone();
    let mut powers = BTreeMap::new();
    let mut strip = |p: GaussianInteger, rest: &mut GaussianInteger| {
        let mut e = 0u32;
        while let Some(q) = rest.checked_div(&p) {
            *rest = q;
            e += 1;
        }
        if e > 0 {
            powers.insert(CanonicalPrime(p), e);
        }
    };
    for (p, _) in rational_factors(&g.norm()) {
        if p == BigInt::from(2) {
            strip(GaussianInteger::new(1, 1), &mut rest);
        } else if (&p % 4u32) == BigInt::from(3) {
            strip(GaussianInteger::real(p), &mut rest);
        } else {
            let pi = two_squares(&p);
            strip(pi.clone(), &mut rest);
            strip(pi.conj(), &mut rest);
        }
    }
    let unity = Unity::from_gaussian(&rest).expect("cofactor after stripping all primes is a unit");
    Ok(Factorization { unity, powers })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianInteger {
        GaussianInteger::new(re, im)
    }

    #[test]
    fn norms() {
        assert_eq!(norm(&g(1, 2)), BigInt::from(5));
        assert_eq!(norm(&g(0, 0)), BigInt::from(0));
        let p = &g(1, 1) * &g(1, 2);
        assert_eq!(p, g(-1, 3));
        assert_eq!(norm(&p), BigInt::from(10));
    }

    #[test]
    fn units_and_associates() {
        assert!(g(0, 1).is_unity());
        assert!(!g(1, 1).is_unity());
        assert_eq!(g(1, 1).associates(), [g(1, 1), g(-1, -1), g(-1, 1), g(1, -1)]);
    }

    #[test]
    fn parity() {
        assert!(g(1, 1).is_even());
        assert!(!g(3, 0).is_even());
        assert!(g(2, 4).is_even());
        assert_eq!(g(2, 4).checked_div(&g(1, 1)), Some(g(3, 1)));
    }

    #[test]
    fn divmod_examples() {
        assert_eq!(euclidean_divmod(&g(5, 0), &g(1, 2)).unwrap(), (g(1, -2), g(0, 0)));
        assert_eq!(euclidean_divmod(&g(3, 1), &g(1, 1)).unwrap(), (g(2, -1), g(0, 0)));
        assert_eq!(euclidean_divmod(&g(7, -3), &g(1, 0)).unwrap(), (g(7, -3), g(0, 0)));
        assert_eq!(euclidean_divmod(&g(1, 0), &g(0, 0)), Err(GaussianError::DivisionByZero));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&g(4, 2), &g(2, 0)).unwrap(), g(2, 0));
        assert_eq!(gcd(&g(3, 1), &g(1, 1)).unwrap(), g(1, 1));
        assert_eq!(gcd(&g(5, 7), &g(1, 0)).unwrap(), g(1, 0));
        assert_eq!(gcd(&g(0, 0), &g(0, 0)), Err(GaussianError::GcdOfZeros));
    }

    #[test]
    fn primality() {
        assert!(is_prime(&g(1, 2)));
        assert!(is_prime(&g(3, 0)));
        assert!(is_prime(&g(0, -7)));
        assert!(!is_prime(&g(2, 0)));
        assert!(!is_prime(&g(5, 0)));
        assert!(is_prime(&g(1, 1)));
    }

    #[test]
    fn factor_examples() {
        let f = factor(&g(2, 0)).unwrap();
        assert_eq!(f.unity, Unity::MinusI);
        assert_eq!(f.powers.len(), 1);
        assert_eq!(f.powers[&CanonicalPrime::one_plus_i()], 2);

        let f = factor(&g(5, 0)).unwrap();
        assert_eq!(f.unity, Unity::One);
        let primes: Vec<_> = f.powers.keys().map(|p| p.value().clone()).collect();
        assert_eq!(primes, vec![g(1, 2), g(1, -2)]);

        let f = factor(&g(0, 1)).unwrap();
        assert_eq!(f.unity, Unity::I);
        assert!(f.powers.is_empty());

        assert_eq!(factor(&g(0, 0)), Err(GaussianError::FactorZero));
    }

    #[test]
    fn basis_choice() {
        let (u, p) = CanonicalPrime::associate_of(&g(2, 1)).unwrap();
        assert_eq!(p.value(), &g(1, -2));
        assert_eq!(u, Unity::I);
        assert_eq!(CanonicalPrime::associate_of(&g(-3, 0)).unwrap().1.value(), &g(3, 0));
        assert_eq!(p.conj().value(), &g(1, 2));
        assert!(CanonicalPrime::associate_of(&g(2, 0)).is_none());
    }
}
