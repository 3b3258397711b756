//! Right, left and two-sided ideals: recognition, closure and the successor
//! structure of their quotients.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::semigroup::MAX_ATOM_STATES;
use crate::state_set::StateSet;
use crate::transformation::Transformation;

/// Default bound on the subset automaton built by [`idealize`].
pub const IDEALIZE_STATE_CAP: usize = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdealKind {
    Right,
    Left,
    TwoSided,
}

impl IdealKind {
    pub fn name(self) -> &'static str {
        match self {
            IdealKind::Right => "right",
            IdealKind::Left => "left",
            IdealKind::TwoSided => "two-sided",
        }
    }
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdealKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "right" => Ok(IdealKind::Right),
            "left" => Ok(IdealKind::Left),
            "two-sided" | "two_sided" => Ok(IdealKind::TwoSided),
            _ => Err(format!(
                "unknown ideal kind `{s}` (expected right, left or two-sided)"
            )),
        }
    }
}

fn minimal_nonempty(d: &Dfa) -> Result<Dfa> {
    let m = d.minimize();
    if m.finals().next().is_none() {
        return Err(Error::EmptyLanguage);
    }
    Ok(m)
}

fn finals_closed(m: &Dfa) -> bool {
    m.finals()
        .all(|q| m.delta().iter().all(|t| m.is_final(t.apply(q))))
}

fn initial_contained_everywhere(m: &Dfa) -> bool {
    (0..m.state_count()).all(|q| m.state_language_contains(m.initial(), q))
}

/// `L = LΣ*`: in the minimal DFA no letter leaves the final states.
pub fn is_right_ideal(d: &Dfa) -> Result<bool> {
    Ok(finals_closed(&minimal_nonempty(d)?))
}

/// `L = Σ*L`: every quotient contains `L` itself.
pub fn is_left_ideal(d: &Dfa) -> Result<bool> {
    Ok(initial_contained_everywhere(&minimal_nonempty(d)?))
}

pub fn is_two_sided_ideal(d: &Dfa) -> Result<bool> {
    let m = minimal_nonempty(d)?;
    Ok(finals_closed(&m) && initial_contained_everywhere(&m))
}

pub fn is_ideal(d: &Dfa, kind: IdealKind) -> Result<bool> {
    match kind {
        IdealKind::Right => is_right_ideal(d),
        IdealKind::Left => is_left_ideal(d),
        IdealKind::TwoSided => is_two_sided_ideal(d),
    }
}

/// Minimal DFA of `LΣ*`, `Σ*L` or `Σ*LΣ*`.
pub fn idealize(d: &Dfa, kind: IdealKind) -> Result<Dfa> {
    idealize_with_cap(d, kind, IDEALIZE_STATE_CAP)
}

pub fn idealize_with_cap(d: &Dfa, kind: IdealKind, cap: usize) -> Result<Dfa> {
    match kind {
        IdealKind::Right => Ok(right_closure(d)),
        IdealKind::Left => left_closure(&d.minimize(), cap),
        IdealKind::TwoSided => left_closure(&right_closure(d), cap),
    }
}

fn right_closure(d: &Dfa) -> Dfa {
    let delta = d
        .delta()
        .iter()
        .map(|t| {
            let image = (0..d.state_count())
                .map(|q| if d.is_final(q) { q } else { t.apply(q) })
                .map(|q| q as u32)
                .collect();
            Transformation::new(image).expect("images stay in range")
        })
        .collect();
    Dfa::new(
        d.alphabet().to_vec(),
        delta,
        d.initial(),
        d.final_flags().to_vec(),
    )
    .expect("same shape as input")
    .minimize()
}

/// Subset construction for the automaton with an extra self-loop on every
/// letter at the initial state.
fn left_closure(d: &Dfa, cap: usize) -> Result<Dfa> {
    d.check_state_limit(MAX_ATOM_STATES)?;
    let finals = d.final_set()?;
    let tables: Vec<_> = d.delta().iter().map(Transformation::image_table).collect();
    let home = StateSet::singleton(d.initial());

    let mut index = HashMap::from([(home, 0u32)]);
    let mut subsets = vec![home];
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); tables.len()];
    let mut queue = VecDeque::from([home]);
    while let Some(s) = queue.pop_front() {
        for (a, table) in tables.iter().enumerate() {
            let next = table.apply(s).union(home);
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    if subsets.len() == cap {
                        return Err(Error::CapExceeded {
                            cap,
                            partial: subsets.len() + 1,
                        });
                    }
                    let id = subsets.len() as u32;
                    index.insert(next, id);
                    subsets.push(next);
                    queue.push_back(next);
                    id
                }
            };
            rows[a].push(id);
        }
    }
    let flags = subsets.iter().map(|s| !s.is_disjoint(finals)).collect();
    let delta = rows.into_iter().map(Transformation::from_raw).collect();
    Ok(Dfa::new(d.alphabet().to_vec(), delta, 0, flags)?.minimize())
}

/// The final state fixed by every letter (the quotient `Σ*` of a minimal
/// right ideal). For `L = Σ*` this is the initial state.
pub fn accepting_sink(d: &Dfa) -> Result<usize> {
    let sinks: Vec<usize> = d
        .finals()
        .filter(|&q| d.delta().iter().all(|t| t.apply(q) == q))
        .collect();
    match sinks.as_slice() {
        [q] => Ok(*q),
        [] => Err(Error::NotAnIdeal("no accepting sink")),
        _ => Err(Error::NotAnIdeal(
            "several accepting sinks; DFA is not minimal",
        )),
    }
}

/// `S(p)`: the states whose language strictly contains that of `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuccessorMap {
    sets: Vec<StateSet>,
}

impl SuccessorMap {
    pub fn of(&self, p: usize) -> StateSet {
        self.sets[p]
    }

    pub fn state_count(&self) -> usize {
        self.sets.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, StateSet)> + '_ {
        self.sets.iter().copied().enumerate()
    }
}

/// Successor sets of a minimal DFA. Distinct states of a minimal DFA have
/// distinct languages, so containment between them is strict.
pub fn successor_sets(d: &Dfa) -> Result<SuccessorMap> {
    d.check_set_width()?;
    if !d.is_minimal() {
        return Err(Error::NotMinimal);
    }
    let n = d.state_count();
    let sets = (0..n)
        .map(|p| {
            (0..n)
                .filter(|&q| q != p && d.state_language_contains(p, q))
                .collect()
        })
        .collect();
    Ok(SuccessorMap { sets })
}

/// Upper bound on `κ(A_{Q_n \ {1}})` for a two-sided ideal, computed from
/// the successor sets of its minimal DFA with `n` the accepting sink:
///
/// `1 + Σ_{j ≠ n} ((|S(j)| - 1) + 2^{|S(j)|-1} - Σ_{i ∈ S(j), i ≠ n} 2^{|S(i)|-1})`.
pub fn refined_two_sided_bound(d: &Dfa) -> Result<u64> {
    if !is_two_sided_ideal(d)? {
        return Err(Error::NotAnIdeal("not a two-sided ideal"));
    }
    let m = d.minimize();
    let sink = accepting_sink(&m)?;
    let succ = successor_sets(&m)?;
    let pow = |s: StateSet| -> i64 { 1i64 << (s.len() - 1) };
    let mut total: i64 = 1;
    for (j, sj) in succ.iter().filter(|&(j, _)| j != sink) {
        debug_assert!(
            sj.contains(sink),
            "state {} lacks the sink successor",
            j + 1
        );
        let inner: i64 = sj.without(sink).iter().map(|i| pow(succ.of(i))).sum();
        total += (sj.len() as i64 - 1) + pow(sj) - inner;
    }
    Ok(u64::try_from(total).expect("bound is positive"))
}
