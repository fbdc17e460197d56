//! Exhaustive search over bounded exponent vectors.
//!
//! Nothing here is shared with the enumerators beyond the constraint sets:
//! candidates are decoded from a box of lattice points, constraints are
//! checked as exponent-vector sums, and any value that is propagated forward
//! must itself lie in the box.

use std::collections::{BTreeMap, BTreeSet};

use crate::par::{self, Execution};
use crate::pitch::Pitch;
use crate::radical::RadicalTone;
use crate::scales::{AggregationSequence, Step};
use crate::tone::Tone;
use crate::vocabulary::{StepSymbol, Symbol};

use super::lattice::{Domain, GaussDomain, JustDomain, Lattice, ShadowDomain};
use super::{
    gauss2_constraints, gauss3_constraints, just3_constraints, particle_signature,
    shadow2_constraints, shadow3_constraints, ConstraintSet, Family, SemitoneSystem, Slot,
    SystemError, Variant, MAX_ORACLE_BOUND,
};

struct Search<'a, D: Domain> {
    dom: &'a D,
    segments: Vec<(Vec<Slot>, D::Elem)>,
    vars: usize,
    classes: usize,
}

/// At most twelve unknowns, kept on the stack.
type State<E> = [Option<E>; 12];

fn oriented<E: Lattice>(e: E, conjugated: bool) -> E {
    if conjugated {
        e.conj()
    } else {
        e
    }
}

impl<D: Domain> Search<'_, D> {
    fn class(&self, e: D::Elem) -> D::Elem {
        if self.dom.conjugate_classes() {
            e.min(e.conj())
        } else {
            e
        }
    }

    fn class_count(&self, st: &State<D::Elem>) -> usize {
        let mut seen = [None; 12];
        let mut n = 0;
        for e in st[..self.vars].iter().flatten() {
            let c = Some(self.class(*e));
            if !seen[..n].contains(&c) {
                seen[n] = c;
                n += 1;
            }
        }
        n
    }

    fn propagate(&self, st: &mut State<D::Elem>) -> bool {
        loop {
            let mut changed = false;
            for (slots, target) in &self.segments {
                let mut known = D::Elem::identity();
                let mut open = None;
                let mut n_open = 0;
                for s in slots {
                    match st[s.var] {
                        Some(v) => known = known.mul(oriented(v, s.conjugated)),
                        None => {
                            n_open += 1;
                            open = Some(*s);
                        }
                    }
                }
                match (n_open, open) {
                    (0, _) if known != *target => return false,
                    (1, Some(s)) => {
                        let v = oriented(target.mul(known.inv()), s.conjugated);
                        if !self.dom.contains(&v) {
                            return false;
                        }
                        st[s.var] = Some(v);
                        if self.class_count(st) > self.classes {
                            return false;
                        }
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

    /// Unknown in the segment with the fewest unknowns.
    fn branch_var(&self, st: &State<D::Elem>) -> usize {
        self.segments
            .iter()
            .filter_map(|(slots, _)| {
                let open: Vec<usize> = slots
                    .iter()
                    .filter(|s| st[s.var].is_none())
                    .map(|s| s.var)
                    .collect();
                (!open.is_empty()).then(|| (open.len(), open[0]))
            })
            .min()
            .map(|(_, v)| v)
            .unwrap_or_else(|| {
                st[..self.vars]
                    .iter()
                    .position(Option::is_none)
                    .expect("an unknown")
            })
    }

    fn run(&self, mut st: State<D::Elem>, exec: Execution) -> Vec<Vec<D::Elem>> {
        if !self.propagate(&mut st) {
            return Vec::new();
        }
        let count = self.class_count(&st);
        if st[..self.vars].iter().all(Option::is_some) {
            return if count == self.classes {
                vec![st[..self.vars].iter().flatten().copied().collect()]
            } else {
                Vec::new()
            };
        }
        let var = self.branch_var(&st);
        let assign = |e: D::Elem, exec: Execution| {
            let mut next = st;
            next[var] = Some(e);
            self.run(next, exec)
        };
        if count == self.classes {
            // Saturated: the unknown must reuse a particle already present.
            let mut reuse = BTreeSet::new();
            for e in st[..self.vars].iter().flatten() {
                for c in [*e, e.conj()] {
                    if self.dom.contains(&c) {
                        reuse.insert(c);
                    }
                }
            }
            return reuse
                .into_iter()
                .flat_map(|e| assign(e, Execution::Sequential))
                .collect();
        }
        par::flat_map_range(exec, self.dom.size(), |index| {
            let mut buf = Vec::with_capacity(4);
            self.dom.decode(index, &mut buf);
            buf.into_iter()
                .flat_map(|e| assign(e, Execution::Sequential))
                .collect()
        })
    }
}

/// All twelve-step rows over `dom` meeting `constraints` with exactly
/// `classes` particles.
pub fn search_rows<D: Domain>(
    dom: &D,
    constraints: &ConstraintSet<D::Value>,
    classes: usize,
    exec: Execution,
) -> Vec<Vec<D::Value>> {
    let segments = constraints
        .segments()
        .into_iter()
        .map(|s| {
            let t = dom
                .coords(&s.target)
                .expect("constraint targets lie on the lattice");
            (s.slots, t)
        })
        .collect();
    let search = Search {
        dom,
        segments,
        vars: constraints.variable_count(),
        classes,
    };
    assert!(search.vars <= 12, "at most twelve unknowns");
    let solutions = search.run([None; 12], exec);
    let mut rows: Vec<Vec<D::Value>> = solutions
        .into_iter()
        .map(|vars| {
            (1..=12)
                .map(|step| {
                    let s = constraints.slot(step);
                    dom.to_value(&oriented(vars[s.var], s.conjugated))
                })
                .collect()
        })
        .collect();
    rows.sort_by_key(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>());
    rows.dedup();
    rows
}

fn label_steps<T: Pitch>(
    values: Vec<T>,
    identify: impl Fn(&T) -> Option<StepSymbol>,
    relative_only: bool,
) -> AggregationSequence<T> {
    let free = [Symbol::P, Symbol::Q, Symbol::R];
    let mut named: Vec<T> = Vec::new();
    let steps = values
        .into_iter()
        .map(|v| {
            let fixed = if relative_only { None } else { identify(&v) };
            let symbol = fixed.unwrap_or_else(|| {
                let (i, conj) = match named.iter().position(|n| *n == v) {
                    Some(i) => (i, false),
                    None => match named.iter().position(|n| n.conjugate() == v) {
                        Some(i) => (i, true),
                        None => {
                            named.push(v.clone());
                            (named.len() - 1, false)
                        }
                    },
                };
                let s = free.get(i).copied().unwrap_or(Symbol::Eta);
                if conj {
                    StepSymbol::bar(s)
                } else {
                    StepSymbol::plain(s)
                }
            });
            Step::new(symbol, v)
        })
        .collect();
    AggregationSequence::new(steps)
}

/// Group rows by particle set modulo conjugation.
pub fn oracle_systems<T: Pitch>(
    family: Family,
    constraints: &ConstraintSet<T>,
    rows: Vec<Vec<T>>,
    identify: impl Fn(&T) -> Option<StepSymbol>,
) -> Vec<SemitoneSystem<T>> {
    let mut groups: BTreeMap<Vec<String>, Vec<Vec<T>>> = BTreeMap::new();
    for row in rows {
        groups.entry(particle_signature(&row)).or_default().push(row);
    }
    groups
        .into_values()
        .enumerate()
        .map(|(i, rows)| {
            let variants: Vec<Variant<T>> = rows
                .into_iter()
                .map(|r| Variant {
                    sequence: label_steps(r, &identify, family == Family::Just3),
                    phase: None,
                })
                .collect();
            let mut seen = BTreeSet::new();
            let particles = variants[0]
                .sequence
                .steps
                .iter()
                .filter(|s| seen.insert(super::class_key(&s.value)))
                .cloned()
                .collect();
            SemitoneSystem {
                family,
                label: format!("oracle-{}", i + 1),
                particles,
                constraints: constraints.clone(),
                variants,
            }
        })
        .collect()
}

/// Oracle results in the arithmetic of the family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleFamily {
    Tone(Vec<SemitoneSystem<Tone>>),
    Radical(Vec<SemitoneSystem<RadicalTone>>),
}

impl OracleFamily {
    pub fn system_count(&self) -> usize {
        match self {
            OracleFamily::Tone(s) => s.len(),
            OracleFamily::Radical(s) => s.len(),
        }
    }

    /// Rendered `(signature, row)` pairs.
    pub fn row_texts(&self) -> Vec<String> {
        match self {
            OracleFamily::Tone(s) => row_texts(s),
            OracleFamily::Radical(s) => row_texts(s),
        }
    }
}

fn row_texts<T: Pitch>(systems: &[SemitoneSystem<T>]) -> Vec<String> {
    systems
        .iter()
        .flat_map(|s| s.rows())
        .map(|(sig, row)| render_row(&sig, &row))
        .collect()
}

fn render_row<T: Pitch>(sig: &[String], row: &[T]) -> String {
    let r: Vec<String> = row.iter().map(ToString::to_string).collect();
    format!("{{{}}}: {}", sig.join(", "), r.join(" "))
}

/// Search the family's constraints over particles whose rational-prime
/// exponents lie in `[-bound, bound]`. Complex particles are taken from the sector
/// `|arg| ≤ 45°`; radical exponents move in twelfths.
pub fn brute_force_oracle(
    family: Family,
    bound: u32,
    exec: Execution,
) -> Result<OracleFamily, SystemError> {
    if bound > MAX_ORACLE_BOUND {
        return Err(SystemError::BoundTooLarge(bound));
    }
    let b = bound as i32;
    let n = family.particle_count();
    Ok(match family {
        Family::Just3 => {
            let c = just3_constraints();
            let rows = search_rows(&JustDomain { bound: b }, &c, n, exec);
            OracleFamily::Tone(oracle_systems(family, &c, rows, StepSymbol::identify))
        }
        Family::Gauss3 | Family::Gauss2 => {
            let c = if family == Family::Gauss3 {
                gauss3_constraints()
            } else {
                gauss2_constraints()
            };
            let rows = search_rows(&GaussDomain { bound: b }, &c, n, exec);
            OracleFamily::Tone(oracle_systems(family, &c, rows, StepSymbol::identify))
        }
        Family::Shadow3 | Family::Shadow2 => {
            let c = if family == Family::Shadow3 {
                shadow3_constraints()
            } else {
                shadow2_constraints()
            };
            let rows = search_rows(&ShadowDomain { bound: b }, &c, n, exec);
            OracleFamily::Radical(oracle_systems(
                family,
                &c,
                rows,
                StepSymbol::identify_radical,
            ))
        }
    })
}

/// Difference between enumerated and searched rows.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Agreement {
    /// Enumerated rows inside the bound that the search did not find.
    pub missed_by_oracle: Vec<String>,
    /// Searched rows that no enumerator produced.
    pub not_enumerated: Vec<String>,
    pub compared: usize,
}

impl Agreement {
    pub fn ok(&self) -> bool {
        self.missed_by_oracle.is_empty() && self.not_enumerated.is_empty()
    }
}

/// Compare as sets of `(particle signature, row)`, keeping only enumerated
/// rows whose steps all satisfy `in_bound`.
pub fn agreement<T: Pitch>(
    enumerated: &[SemitoneSystem<T>],
    oracle: &[SemitoneSystem<T>],
    in_bound: impl Fn(&T) -> bool,
) -> Agreement {
    let left: BTreeSet<String> = enumerated
        .iter()
        .flat_map(|s| s.rows())
        .filter(|(_, row)| row.iter().all(&in_bound))
        .map(|(sig, row)| render_row(&sig, &row))
        .collect();
    let right: BTreeSet<String> = oracle
        .iter()
        .flat_map(|s| s.rows())
        .map(|(sig, row)| render_row(&sig, &row))
        .collect();
    Agreement {
        missed_by_oracle: left.difference(&right).cloned().collect(),
        not_enumerated: right.difference(&left).cloned().collect(),
        compared: left.len(),
    }
}

/// Domain membership for [`agreement`], matching [`brute_force_oracle`].
pub fn tone_in_bound(family: Family, bound: u32) -> impl Fn(&Tone) -> bool {
    let b = bound as i32;
    move |t: &Tone| match family {
        Family::Just3 => JustDomain { bound: b }.contains_value(t),
        _ => GaussDomain { bound: b }.contains_value(t),
    }
}

pub fn radical_in_bound(bound: u32) -> impl Fn(&RadicalTone) -> bool {
    let d = ShadowDomain {
        bound: bound as i32,
    };
    move |r: &RadicalTone| d.contains_value(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::systems::{enumerate_gauss2, enumerate_just3, enumerate_shadow2};

    #[test]
    fn gauss2_small_bound() {
        let OracleFamily::Tone(found) =
            brute_force_oracle(Family::Gauss2, 8, Execution::Sequential).unwrap()
        else {
            panic!("complex family");
        };
        assert_eq!(found.len(), 1);
        let a = agreement(&[enumerate_gauss2()], &found, tone_in_bound(Family::Gauss2, 8));
        assert!(a.ok(), "{:?}", a);
        assert_eq!(a.compared, 2);
    }

    #[test]
    fn just3_small_bound() {
        let OracleFamily::Tone(found) =
            brute_force_oracle(Family::Just3, 8, Execution::default()).unwrap()
        else {
            panic!("complex family");
        };
        let a = agreement(&enumerate_just3(), &found, tone_in_bound(Family::Just3, 8));
        assert!(a.ok(), "{:?}", a);
        assert_eq!(found.len(), 3);
    }

    #[test]
    fn shadow2_small_bound() {
        let OracleFamily::Radical(found) =
            brute_force_oracle(Family::Shadow2, 2, Execution::default()).unwrap()
        else {
            panic!("radical family");
        };
        let a = agreement(&enumerate_shadow2(), &found, radical_in_bound(2));
        assert!(a.ok(), "{:?}", a);
    }

    #[test]
    fn bound_limit() {
        assert_eq!(
            brute_force_oracle(Family::Gauss2, 13, Execution::Sequential),
            Err(SystemError::BoundTooLarge(13))
        );
    }
}
