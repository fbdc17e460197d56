//! Enumerators: propagate the fixed notes through the aggregation, then settle
//! the one remaining two-step product by trying every way a third (or second)
//! particle can appear.

use std::collections::BTreeSet;

use crate::gaussian::Unity;
use crate::pitch::Pitch;
use crate::radical::RadicalTone;
use crate::scales::{just_diatonic, AggregationSequence, Step};
use crate::tone::{zeta, Tone};
use crate::vocabulary::{StepSymbol, Symbol};

use super::{
    class_key, gauss2_constraints, gauss3_constraints, just3_constraints, shadow2_constraints,
    shadow3_constraints, ConstraintSet, Family, Phase, Segment, SemitoneSystem, Variant,
};

/// Arithmetic-specific pieces of the residual solve.
trait Solvable: Pitch {
    /// Whether a value may serve as a particle.
    fn admissible(&self) -> bool;
    fn square_root(&self) -> Option<Self>;
    /// Non-real `a` with `a ā = t`, one per phase parameter.
    fn conjugate_pairs(t: &Self, k_bound: u32) -> Vec<(Self, Phase)>;
    fn label(&self, phase: Option<Phase>) -> StepSymbol;
}

impl Solvable for Tone {
    fn admissible(&self) -> bool {
        self.is_principal()
    }

    fn square_root(&self) -> Option<Tone> {
        self.sqrt()
    }

    fn conjugate_pairs(t: &Tone, k_bound: u32) -> Vec<(Tone, Phase)> {
        // |ε (1+i)^a 3^b (1+2i)^c (1-2i)^d|² = 2^a 3^2b 5^(c+d): halve the
        // exponents of t, put the whole 5-part on 1+2i, then spread it with ζ.
        if !t.is_positive_real() {
            return Vec::new();
        }
        let Some((_, [a, b, c, _])) = t.five_limit() else {
            return Vec::new();
        };
        if a % 2 != 0 || b % 2 != 0 {
            return Vec::new();
        }
        let seed = Tone::from_five_limit(Unity::One, [a / 2, b / 2, c, 0]);
        phased_family(&seed, t, k_bound)
    }

    fn label(&self, phase: Option<Phase>) -> StepSymbol {
        if let Some(s) = StepSymbol::identify(self) {
            return s;
        }
        if phase.is_some() {
            return StepSymbol::plain(Symbol::PhasedBeta);
        }
        StepSymbol::plain(Symbol::Eta)
    }
}

fn phased_family(seed: &Tone, t: &Tone, k_bound: u32) -> Vec<(Tone, Phase)> {
    if &(seed * &seed.conj()) != t {
        return Vec::new();
    }
    let (_, base) = seed.principal_associate();
    let kb = i64::from(k_bound);
    let mut ks: Vec<i64> = (-kb..=kb).collect();
    ks.sort_by_key(|k| (k.unsigned_abs(), *k < 0));
    ks.into_iter()
        .filter_map(|k| {
            let raw = &base * &zeta().pow(k);
            let (u, p) = raw.principal_associate();
            (!p.is_real()).then_some((p, Phase { unity: u.inv(), k }))
        })
        .collect()
}

impl Solvable for RadicalTone {
    fn admissible(&self) -> bool {
        true
    }

    fn square_root(&self) -> Option<RadicalTone> {
        self.sqrt()
    }

    fn conjugate_pairs(_: &RadicalTone, _: u32) -> Vec<(RadicalTone, Phase)> {
        Vec::new()
    }

    fn label(&self, _: Option<Phase>) -> StepSymbol {
        StepSymbol::identify_radical(self).unwrap_or(StepSymbol::plain(Symbol::Eta))
    }
}

fn slot_value<T: Pitch>(v: &T, conjugated: bool) -> T {
    if conjugated {
        v.conjugate()
    } else {
        v.clone()
    }
}

/// Fill every unknown that is the only one in its segment. `false` on a
/// contradiction or an inadmissible value.
fn propagate<T: Solvable>(segments: &[Segment<T>], vars: &mut [Option<T>]) -> bool {
    loop {
        let mut changed = false;
        for seg in segments {
            let mut known = T::unison();
            let mut unknown = Vec::new();
            for s in &seg.slots {
                match &vars[s.var] {
                    Some(v) => known = known.compose(&slot_value(v, s.conjugated)),
                    None => unknown.push(*s),
                }
            }
            match unknown.as_slice() {
                [] if known != seg.target => return false,
                [s] => {
                    let v = slot_value(&seg.target.ratio_to(&known), s.conjugated);
                    if !v.admissible() {
                        return false;
                    }
                    vars[s.var] = Some(v);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            return true;
        }
    }
}

struct Candidate<T> {
    steps: Vec<T>,
    phase: Option<Phase>,
}

fn classes<T: Pitch>(values: &[T]) -> BTreeSet<String> {
    values.iter().map(class_key).collect()
}

fn solve<T: Solvable>(c: &ConstraintSet<T>, family: Family, k_bound: u32) -> Vec<Candidate<T>> {
    let segments = c.segments();
    let mut vars: Vec<Option<T>> = vec![None; c.variable_count()];
    if !propagate(&segments, &mut vars) {
        return Vec::new();
    }
    let Some(residual) = segments
        .iter()
        .find(|s| s.slots.iter().any(|x| vars[x.var].is_none()))
    else {
        return Vec::new();
    };
    let mut known = T::unison();
    let mut open = Vec::new();
    for s in &residual.slots {
        match &vars[s.var] {
            Some(v) => known = known.compose(&slot_value(v, s.conjugated)),
            None => open.push(*s),
        }
    }
    let [sa, sb] = open.as_slice() else {
        return Vec::new();
    };
    // Product of the two open slots, in plain (unconjugated) orientation.
    let t = residual.target.ratio_to(&known);
    let t = if sa.conjugated { t.conjugate() } else { t };
    debug_assert_eq!(sa.conjugated, sb.conjugated);

    let mut existing: Vec<T> = Vec::new();
    for v in vars.iter().flatten() {
        for w in [v.clone(), v.conjugate()] {
            if w.admissible() && !existing.contains(&w) {
                existing.push(w);
            }
        }
    }

    let mut options: Vec<(T, T, Option<Phase>)> = Vec::new();
    for e in &existing {
        let other = t.ratio_to(e);
        options.push((e.clone(), other.clone(), None));
        options.push((other, e.clone(), None));
    }
    if let Some(s) = t.square_root() {
        options.push((s.clone(), s, None));
    }
    for (a, phase) in T::conjugate_pairs(&t, k_bound) {
        let b = a.conjugate();
        options.push((a, b, Some(phase)));
    }

    let mut out: Vec<Candidate<T>> = Vec::new();
    for (a, b, phase) in options {
        if !a.admissible() || !b.admissible() {
            continue;
        }
        let mut trial = vars.clone();
        trial[sa.var] = Some(a);
        trial[sb.var] = Some(b);
        if !propagate(&segments, &mut trial) {
            continue;
        }
        let Some(values) = trial.into_iter().collect::<Option<Vec<T>>>() else {
            continue;
        };
        let steps: Vec<T> = (1..=12)
            .map(|s| {
                let slot = c.slot(s);
                slot_value(&values[slot.var], slot.conjugated)
            })
            .collect();
        if classes(&steps).len() != family.particle_count() {
            continue;
        }
        if out.iter().any(|o| o.steps == steps) {
            continue;
        }
        out.push(Candidate { steps, phase });
    }
    out
}

/// Conventional numbering of the systems by the particle each one adds.
fn numbering(family: Family) -> Vec<String> {
    let tones = |v: Vec<Tone>| v.iter().map(class_key).collect();
    let rads = |v: Vec<RadicalTone>| v.iter().map(class_key).collect();
    match family {
        Family::Gauss3 => tones(vec![
            Symbol::Beta.tone().expect("fixed"),
            Symbol::AlphaPrime.tone().expect("fixed"),
            Symbol::Rho.tone().expect("fixed"),
        ]),
        Family::Shadow3 => rads(vec![
            RadicalTone::from_twelfths([6, -12, 6]),
            RadicalTone::from_twelfths([30, -36, 12]),
            Symbol::Rho.radical().expect("fixed"),
        ]),
        Family::Shadow2 => rads(vec![
            Symbol::Sigma.radical().expect("fixed"),
            Symbol::Nu.radical().expect("fixed"),
        ]),
        _ => Vec::new(),
    }
}

const ROMAN: [&str; 8] = ["I", "II", "III", "IV", "V", "VI", "VII", "VIII"];

fn assemble<T: Solvable>(
    family: Family,
    constraints: ConstraintSet<T>,
    candidates: Vec<Candidate<T>>,
) -> Vec<SemitoneSystem<T>> {
    // Particles forced before the residual solve are shared by every system.
    let shared: BTreeSet<String> = candidates
        .iter()
        .map(|c| classes(&c.steps))
        .reduce(|a, b| a.intersection(&b).cloned().collect())
        .unwrap_or_default();
    let order = numbering(family);

    // Group: one system per added particle; the phased family is one system.
    let mut groups: Vec<(usize, String, Vec<Candidate<T>>)> = Vec::new();
    for cand in candidates {
        let added: Vec<String> = classes(&cand.steps).difference(&shared).cloned().collect();
        let key = if cand.phase.is_some() {
            "phased".to_string()
        } else {
            added.join(",")
        };
        let rank = if cand.phase.is_some() {
            0
        } else {
            order.iter().position(|o| added.contains(o)).unwrap_or(usize::MAX)
        };
        match groups.iter_mut().find(|g| g.1 == key) {
            Some(g) => g.2.push(cand),
            None => groups.push((rank, key, vec![cand])),
        }
    }
    groups.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));

    groups
        .into_iter()
        .enumerate()
        .map(|(i, (_, _, cands))| {
            let mut variants: Vec<Variant<T>> = cands
                .into_iter()
                .map(|c| {
                    let steps = c
                        .steps
                        .into_iter()
                        .map(|v| {
                            let sym = v.label(c.phase);
                            Step::new(sym, v)
                        })
                        .collect();
                    Variant {
                        sequence: AggregationSequence::new(steps),
                        phase: c.phase,
                    }
                })
                .collect();
            sort_variants(&mut variants);
            SemitoneSystem {
                family,
                label: ROMAN.get(i).copied().unwrap_or("?").to_string(),
                particles: representatives(&variants[0].sequence),
                constraints: constraints.clone(),
                variants,
            }
        })
        .collect()
}

fn sort_variants<T: Pitch>(variants: &mut [Variant<T>]) {
    variants.sort_by(|a, b| {
        let ka = (a.sequence.symbols(), a.phase.map(|p| p.order_key()));
        let kb = (b.sequence.symbols(), b.phase.map(|p| p.order_key()));
        ka.cmp(&kb)
    });
}

/// First step of each conjugation class, in row order.
fn representatives<T: Pitch>(seq: &AggregationSequence<T>) -> Vec<Step<T>> {
    let mut seen = BTreeSet::new();
    seq.steps
        .iter()
        .filter(|s| seen.insert(class_key(&s.value)))
        .cloned()
        .collect()
}

/// The three five-limit systems interleaving the just diatonic scale.
///
/// Each whole tone splits into two semitones, the diatonic semitone stays
/// whole, and only three semitones may occur, so the major and minor whole
/// tones share one semitone: `X = pq`, `Y = pr`, with `Z` equal to one of
/// `p`, `q`, `r`. Each choice fixes the other two.
pub fn enumerate_just3() -> Vec<SemitoneSystem<Tone>> {
    let diatonic = just_diatonic();
    let atom = |s: Symbol| {
        diatonic
            .steps
            .steps
            .iter()
            .find(|x| x.symbol.symbol == s)
            .expect("diatonic atoms")
            .value
            .clone()
    };
    let (x, y, z) = (atom(Symbol::X), atom(Symbol::Y), atom(Symbol::Z));

    let roles = [
        // Z = p
        (z.clone(), &x / &z, &y / &z),
        // Z = q
        (&x / &z, z.clone(), &y / &(&x / &z)),
        // Z = r
        (&y / &z, &x / &(&y / &z), z.clone()),
    ];
    let mut systems = Vec::new();
    for (i, (p, q, rr)) in roles.into_iter().enumerate() {
        if p == q || q == rr || p == rr {
            continue;
        }
        let step = |s: Symbol| {
            let v = match s {
                Symbol::P => p.clone(),
                Symbol::Q => q.clone(),
                _ => rr.clone(),
            };
            Step::new(StepSymbol::plain(s), v)
        };
        let z_symbol = [Symbol::P, Symbol::Q, Symbol::R][i];
        let mut variants = Vec::new();
        for mask in 0u32..32 {
            let mut bit = 0;
            let mut steps = Vec::new();
            for a in &diatonic.steps.steps {
                let pair = match a.symbol.symbol {
                    Symbol::X => Some((Symbol::P, Symbol::Q)),
                    Symbol::Y => Some((Symbol::P, Symbol::R)),
                    _ => None,
                };
                match pair {
                    Some((u, v)) => {
                        let swap = mask >> bit & 1 == 1;
                        bit += 1;
                        let (u, v) = if swap { (v, u) } else { (u, v) };
                        steps.push(step(u));
                        steps.push(step(v));
                    }
                    None => steps.push(step(z_symbol)),
                }
            }
            variants.push(Variant {
                sequence: AggregationSequence::new(steps),
                phase: None,
            });
        }
        sort_variants(&mut variants);
        systems.push(SemitoneSystem {
            family: Family::Just3,
            label: ROMAN[systems.len()].to_string(),
            particles: vec![step(Symbol::P), step(Symbol::Q), step(Symbol::R)],
            constraints: just3_constraints(),
            variants,
        });
    }
    systems
}

/// The three complex systems; System I carries one variant per phase
/// parameter `|k| ≤ k_bound`.
pub fn enumerate_gauss3(k_bound: u32) -> Vec<SemitoneSystem<Tone>> {
    let c = gauss3_constraints();
    let cands = solve(&c, Family::Gauss3, k_bound);
    assemble(Family::Gauss3, c, cands)
}

pub fn enumerate_gauss2() -> SemitoneSystem<Tone> {
    let c = gauss2_constraints();
    let cands = solve(&c, Family::Gauss2, 0);
    assemble(Family::Gauss2, c, cands)
        .into_iter()
        .next()
        .expect("the two-semitone complex system exists")
}

pub fn enumerate_shadow3() -> Vec<SemitoneSystem<RadicalTone>> {
    let c = shadow3_constraints();
    let cands = solve(&c, Family::Shadow3, 0);
    assemble(Family::Shadow3, c, cands)
}

pub fn enumerate_shadow2() -> Vec<SemitoneSystem<RadicalTone>> {
    let c = shadow2_constraints();
    let cands = solve(&c, Family::Shadow2, 0);
    assemble(Family::Shadow2, c, cands)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scales::{gauss2_chromatic, gauss3_chromatic, gauss3_phased, GaussSystem};

    fn values(s: &SemitoneSystem<Tone>) -> BTreeSet<String> {
        s.particles.iter().map(|p| class_key(&p.value)).collect()
    }

    #[test]
    fn just3_particles() {
        let sys = enumerate_just3();
        assert_eq!(sys.len(), 3);
        let want = [
            [(16, 15), (135, 128), (25, 24)],
            [(135, 128), (16, 15), (256, 243)],
            [(25, 24), (27, 25), (16, 15)],
        ];
        for (s, w) in sys.iter().zip(want) {
            let got: Vec<Tone> = s.particles.iter().map(|p| p.value.clone()).collect();
            let w: Vec<Tone> = w.iter().map(|(n, d)| Tone::ratio(*n, *d)).collect();
            assert_eq!(got, w);
            assert_eq!(s.variants.len(), 32);
        }
    }

    #[test]
    fn gauss3_matches_constructors() {
        let sys = enumerate_gauss3(0);
        assert_eq!(sys.len(), 3);
        assert_eq!(
            sys.iter().map(|s| s.variants.len()).collect::<Vec<_>>(),
            vec![1, 4, 2]
        );
        for (s, g) in sys.iter().zip(GaussSystem::ALL) {
            let mut rows: Vec<Vec<Tone>> = s.variants.iter().map(|v| v.sequence.values()).collect();
            let mut want: Vec<Vec<Tone>> = (0..g.variant_count())
                .map(|i| gauss3_chromatic(g, i).unwrap().steps.values())
                .collect();
            rows.sort_by_key(|r| format!("{:?}", r));
            want.sort_by_key(|r| format!("{:?}", r));
            assert_eq!(rows, want);
        }
        let beta = Symbol::Beta.tone().unwrap();
        assert!(values(&sys[0]).contains(&class_key(&beta)));
    }

    #[test]
    fn gauss3_phases() {
        let sys = enumerate_gauss3(2);
        let ks: Vec<i64> = sys[0].variants.iter().map(|v| v.phase.unwrap().k).collect();
        assert_eq!(ks, vec![0, 1, -1, 2, -2]);
        for v in &sys[0].variants {
            let k = v.phase.unwrap().k;
            assert_eq!(v.sequence.values(), gauss3_phased(k).steps.values());
        }
    }

    #[test]
    fn gauss2_unique() {
        let s = enumerate_gauss2();
        assert_eq!(s.variants.len(), 2);
        let mut rows: Vec<Vec<Tone>> = s.variants.iter().map(|v| v.sequence.values()).collect();
        rows.sort_by_key(|r| format!("{:?}", r));
        let mut want: Vec<Vec<Tone>> =
            (0..2).map(|i| gauss2_chromatic(i).unwrap().steps.values()).collect();
        want.sort_by_key(|r| format!("{:?}", r));
        assert_eq!(rows, want);
    }

    #[test]
    fn shadows() {
        let s3 = enumerate_shadow3();
        assert_eq!(s3.iter().map(|s| s.variants.len()).collect::<Vec<_>>(), vec![1, 2, 2]);
        let s2 = enumerate_shadow2();
        assert_eq!(s2.iter().map(|s| s.variants.len()).collect::<Vec<_>>(), vec![2, 1]);
        let nu = Symbol::Nu.radical().unwrap();
        assert!(s2[1].particles.iter().any(|p| p.value == nu));
    }
}
