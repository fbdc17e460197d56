//! Exponent-vector coordinates for bounded candidate particles.
//!
//! The search works on small fixed-size integer vectors instead of big
//! rationals: products are vector sums.

use std::fmt::Debug;
use std::hash::Hash;

use crate::gaussian::Unity;
use crate::pitch::Pitch;
use crate::radical::{embed_real, RadicalTone};
use crate::tone::Tone;

pub trait Lattice: Copy + Eq + Ord + Hash + Send + Sync + Debug {
    fn identity() -> Self;
    fn mul(self, o: Self) -> Self;
    fn inv(self) -> Self;
    fn conj(self) -> Self;
}

/// A bounded box of candidate particles.
pub trait Domain: Sync {
    type Elem: Lattice;
    type Value: Pitch;

    /// Number of indices accepted by [`Domain::decode`].
    fn size(&self) -> u64;
    /// Push every in-domain element with this index.
    fn decode(&self, index: u64, out: &mut Vec<Self::Elem>);
    fn contains(&self, e: &Self::Elem) -> bool;
    fn to_value(&self, e: &Self::Elem) -> Self::Value;
    /// Coordinates of a value, ignoring the bound.
    fn coords(&self, v: &Self::Value) -> Option<Self::Elem>;
    /// Conjugation classes are counted as one particle.
    fn conjugate_classes(&self) -> bool;

    fn contains_value(&self, v: &Self::Value) -> bool {
        self.coords(v).is_some_and(|e| self.contains(&e))
    }
}

fn decode_box<const N: usize>(index: u64, radius: i32) -> [i32; N] {
    decode_radii(index, [radius; N])
}

fn decode_radii<const N: usize>(mut index: u64, radii: [i32; N]) -> [i32; N] {
    let mut e = [0i32; N];
    for (slot, r) in e.iter_mut().zip(radii) {
        let width = (2 * r + 1) as u64;
        *slot = (index % width) as i32 - r;
        index /= width;
    }
    e
}

/// `ε (1+i)^a 3^b (1+2i)^c (1-2i)^d`, with `ε = i^unity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ComplexPoint {
    pub unity: u8,
    pub e: [i32; 4],
}

impl Lattice for ComplexPoint {
    fn identity() -> Self {
        ComplexPoint { unity: 0, e: [0; 4] }
    }
    fn mul(self, o: Self) -> Self {
        let mut e = self.e;
        for (a, b) in e.iter_mut().zip(o.e) {
            *a += b;
        }
        ComplexPoint {
            unity: (self.unity + o.unity) % 4,
            e,
        }
    }
    fn inv(self) -> Self {
        ComplexPoint {
            unity: (4 - self.unity) % 4,
            e: self.e.map(|x| -x),
        }
    }
    fn conj(self) -> Self {
        // conj(1+i) = -i(1+i), and conjugation swaps 1+2i with 1-2i.
        let [a, b, c, d] = self.e;
        let u = (-(self.unity as i32) - a).rem_euclid(4) as u8;
        ComplexPoint {
            unity: u,
            e: [a, b, d, c],
        }
    }
}

impl ComplexPoint {
    /// `re ≥ |im|`, computed on a Gaussian integer with the same argument.
    pub fn is_principal(&self) -> bool {
        let mut w = match self.unity {
            0 => (1i128, 0i128),
            1 => (0, 1),
            2 => (-1, 0),
            _ => (0, -1),
        };
        let gens = [((1i128, 1i128), self.e[0]), ((1, 2), self.e[2]), ((1, -2), self.e[3])];
        for ((re, im), k) in gens {
            let g = if k >= 0 { (re, im) } else { (re, -im) };
            for _ in 0..k.unsigned_abs() {
                w = (w.0 * g.0 - w.1 * g.1, w.0 * g.1 + w.1 * g.0);
            }
        }
        w.0 >= w.1.abs()
    }
}

/// Complex five-limit particles in the closed sector `|arg| ≤ 45°`.
///
/// The bound applies to rational primes: `2 = -i(1+i)²`, so the exponent of
/// `1+i` may reach twice the bound, and `256/243` lies inside bound 8.
#[derive(Debug, Clone, Copy)]
pub struct GaussDomain {
    pub bound: i32,
}

impl GaussDomain {
    fn radii(&self) -> [i32; 4] {
        let b = self.bound;
        [2 * b, b, b, b]
    }
}

impl Domain for GaussDomain {
    type Elem = ComplexPoint;
    type Value = Tone;

    fn size(&self) -> u64 {
        self.radii().iter().map(|r| 2 * *r as u64 + 1).product()
    }
    fn decode(&self, index: u64, out: &mut Vec<ComplexPoint>) {
        let e = decode_radii(index, self.radii());
        for unity in 0..4 {
            let p = ComplexPoint { unity, e };
            if p.is_principal() {
                out.push(p);
            }
        }
    }
    fn contains(&self, p: &ComplexPoint) -> bool {
        p.e.iter().zip(self.radii()).all(|(x, r)| x.abs() <= r) && p.is_principal()
    }
    fn to_value(&self, p: &ComplexPoint) -> Tone {
        Tone::from_five_limit(
            Unity::from_power(i64::from(p.unity)),
            p.e.map(i64::from),
        )
    }
    fn coords(&self, v: &Tone) -> Option<ComplexPoint> {
        let (u, e) = v.five_limit()?;
        let e = e.map(|x| i32::try_from(x).unwrap_or(i32::MAX));
        Some(ComplexPoint { unity: u.power(), e })
    }
    fn conjugate_classes(&self) -> bool {
        true
    }
}

/// `2^a 3^b 5^c` with integer or twelfth exponents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RealPoint {
    pub e: [i32; 3],
}

impl Lattice for RealPoint {
    fn identity() -> Self {
        RealPoint { e: [0; 3] }
    }
    fn mul(self, o: Self) -> Self {
        RealPoint {
            e: [self.e[0] + o.e[0], self.e[1] + o.e[1], self.e[2] + o.e[2]],
        }
    }
    fn inv(self) -> Self {
        RealPoint { e: self.e.map(|x| -x) }
    }
    fn conj(self) -> Self {
        self
    }
}

/// Positive rational five-limit particles, integer exponents within the bound.
#[derive(Debug, Clone, Copy)]
pub struct JustDomain {
    pub bound: i32,
}

impl Domain for JustDomain {
    type Elem = RealPoint;
    type Value = Tone;

    fn size(&self) -> u64 {
        (2 * self.bound as u64 + 1).pow(3)
    }
    fn decode(&self, index: u64, out: &mut Vec<RealPoint>) {
        out.push(RealPoint {
            e: decode_box::<3>(index, self.bound),
        });
    }
    fn contains(&self, p: &RealPoint) -> bool {
        p.e.iter().all(|x| x.abs() <= self.bound)
    }
    fn to_value(&self, p: &RealPoint) -> Tone {
        let mut t = Tone::one();
        for (q, k) in [2, 3, 5].into_iter().zip(p.e) {
            t = &t * &Tone::integer(q).pow(i64::from(k));
        }
        t
    }
    fn coords(&self, v: &Tone) -> Option<RealPoint> {
        let r = embed_real(v).ok()?;
        let t = r.twelfths();
        Some(RealPoint {
            e: t.map(|x| i32::try_from(x / 12).unwrap_or(i32::MAX)),
        })
    }
    fn conjugate_classes(&self) -> bool {
        false
    }
}

/// Real radical particles with exponents in twelfths, `|exponent| ≤ bound`.
#[derive(Debug, Clone, Copy)]
pub struct ShadowDomain {
    pub bound: i32,
}

impl Domain for ShadowDomain {
    type Elem = RealPoint;
    type Value = RadicalTone;

    fn size(&self) -> u64 {
        (24 * self.bound as u64 + 1).pow(3)
    }
    fn decode(&self, index: u64, out: &mut Vec<RealPoint>) {
        out.push(RealPoint {
            e: decode_box::<3>(index, 12 * self.bound),
        });
    }
    fn contains(&self, p: &RealPoint) -> bool {
        p.e.iter().all(|x| x.abs() <= 12 * self.bound)
    }
    fn to_value(&self, p: &RealPoint) -> RadicalTone {
        RadicalTone::from_twelfths(p.e.map(i64::from))
    }
    fn coords(&self, v: &RadicalTone) -> Option<RealPoint> {
        Some(RealPoint {
            e: v.twelfths().map(|x| i32::try_from(x).unwrap_or(i32::MAX)),
        })
    }
    fn conjugate_classes(&self) -> bool {
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_round_trip() {
        let d = GaussDomain { bound: 8 };
        let alpha = Tone::gaussian(3, 3, 4);
        let p = d.coords(&alpha).unwrap();
        assert_eq!(d.to_value(&p), alpha);
        assert_eq!(d.to_value(&p.conj()), alpha.conj());
        let beta = Tone::gaussian(3, 1, 3);
        let q = d.coords(&beta).unwrap();
        assert_eq!(d.to_value(&p.mul(q)), &alpha * &beta);
        assert_eq!(d.to_value(&q.conj()), beta.conj());
        assert_eq!(d.to_value(&q.inv()), beta.inv());
    }

    #[test]
    fn sector_test_matches_exact() {
        let d = GaussDomain { bound: 2 };
        for i in 0..d.size() {
            let e = decode_box::<4>(i, 2);
            for unity in 0..4 {
                let p = ComplexPoint { unity, e };
                assert_eq!(p.is_principal(), d.to_value(&p).is_principal());
            }
        }
    }

    #[test]
    fn real_domains() {
        let j = JustDomain { bound: 8 };
        assert_eq!(j.size(), 4913);
        let z = Tone::ratio(16, 15);
        assert_eq!(j.to_value(&j.coords(&z).unwrap()), z);
        assert!(j.coords(&Tone::gaussian(1, 1, 1)).is_none());
        let s = ShadowDomain { bound: 2 };
        assert!(s.contains_value(&RadicalTone::from_twelfths([-18, 12, 0])));
        assert!(!s.contains_value(&RadicalTone::from_twelfths([-36, 12, 0])));
        let g = GaussDomain { bound: 8 };
        assert!(g.contains_value(&Tone::ratio(256, 243)));
        assert!(!g.contains_value(&Tone::ratio(512, 243)));
    }
}
