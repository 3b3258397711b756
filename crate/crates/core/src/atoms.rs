//! Atoms and their quotient complexities.
//!
//! For a basis `S`, the atomic intersection `A_S` is recognized by a DFA whose
//! states are pairs `(X, Y)` of disjoint state sets plus a sink `⊥`. The pair
//! `(X, Y)` stands for the intersection of the languages of the states in `X`
//! with the complements of the languages of the states in `Y`. Starting from
//! `(S, S̄)`, a letter maps `(X, Y)` to `(Xa, Ya)` when the images stay
//! disjoint and to `⊥` otherwise. A pair is final when `X ⊆ F` and
//! `Y ∩ F = ∅`. Only the pairs reachable from `(S, S̄)` are built.

use std::collections::HashMap;
use std::fmt;

use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::semigroup::MAX_ATOM_STATES;
use crate::state_set::StateSet;
use crate::transformation::{ImageTable, Transformation};

/// The set `S` of uncomplemented quotients naming the intersection `A_S`.
pub type AtomBasis = StateSet;

/// A state of the atom DFA.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairState {
    Bot,
    Pair { x: StateSet, y: StateSet },
}

impl PairState {
    const BOT_KEY: u64 = u64::MAX;

    fn key(x: StateSet, y: StateSet) -> u64 {
        u64::from(x.bits()) | (u64::from(y.bits()) << 32)
    }

    fn from_key(key: u64) -> Self {
        if key == Self::BOT_KEY {
            PairState::Bot
        } else {
            PairState::Pair {
                x: StateSet::from_bits(key as u32),
                y: StateSet::from_bits((key >> 32) as u32),
            }
        }
    }
}

impl fmt::Display for PairState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairState::Bot => f.write_str("⊥"),
            PairState::Pair { x, y } => write!(f, "({x},{y})"),
        }
    }
}

/// The reachable part of the atom DFA for one basis, with the pair state
/// behind each DFA state.
#[derive(Clone, Debug)]
pub struct AtomDfa {
    pub basis: AtomBasis,
    pub dfa: Dfa,
    pub states: Vec<PairState>,
}

impl AtomDfa {
    pub fn recognizes_nonempty(&self) -> bool {
        self.dfa.finals().next().is_some()
    }
}

fn check_basis(d: &Dfa, basis: AtomBasis) -> Result<()> {
    d.check_state_limit(MAX_ATOM_STATES)?;
    if !basis.within(d.state_count()) {
        return Err(Error::InvalidBasis {
            basis,
            n: d.state_count(),
        });
    }
    Ok(())
}

/// Builds the atom DFA of `A_basis` over the pair states reachable from
/// `(S, S̄)`.
pub fn build_atom_dfa(d: &Dfa, basis: AtomBasis) -> Result<AtomDfa> {
    check_basis(d, basis)?;
    let n = d.state_count();
    let finals = d.final_set()?;
    let nonfinals = finals.complement(n);
    let tables: Vec<ImageTable> = d.delta().iter().map(Transformation::image_table).collect();

    let start = PairState::key(basis, basis.complement(n));
    let mut index: HashMap<u64, u32> = HashMap::from([(start, 0)]);
    let mut keys = vec![start];
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); tables.len()];

    let mut head = 0;
    while head < keys.len() {
        let key = keys[head];
        head += 1;
        for (a, table) in tables.iter().enumerate() {
            let next = if key == PairState::BOT_KEY {
                PairState::BOT_KEY
            } else {
                let x = table.apply(StateSet::from_bits(key as u32));
                let y = table.apply(StateSet::from_bits((key >> 32) as u32));
                if x.is_disjoint(y) {
                    PairState::key(x, y)
                } else {
                    PairState::BOT_KEY
                }
            };
            let fresh = keys.len() as u32;
            let id = *index.entry(next).or_insert_with(|| {
                keys.push(next);
                fresh
            });
            rows[a].push(id);
        }
    }

    let states: Vec<PairState> = keys.into_iter().map(PairState::from_key).collect();
    let is_final: Vec<bool> = states
        .iter()
        .map(|s| match s {
            PairState::Bot => false,
            PairState::Pair { x, y } => x.is_subset(finals) && y.is_subset(nonfinals),
        })
        .collect();
    let delta = rows.into_iter().map(Transformation::from_raw).collect();
    let dfa = Dfa::new(d.alphabet().to_vec(), delta, 0, is_final)?;
    Ok(AtomDfa { basis, dfa, states })
}

/// Whether `A_basis` is non-empty.
pub fn is_atom(d: &Dfa, basis: AtomBasis) -> Result<bool> {
    Ok(build_atom_dfa(d, basis)?.recognizes_nonempty())
}

/// Quotient complexity `κ(A_basis)`. All empty quotients fall into a single
/// class, so at most one empty quotient is counted, and only when reachable.
pub fn atom_complexity(d: &Dfa, basis: AtomBasis) -> Result<usize> {
    let atom = build_atom_dfa(d, basis)?;
    if !atom.recognizes_nonempty() {
        return Err(Error::NotAnAtom(basis));
    }
    Ok(atom.dfa.quotient_complexity())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomEntry {
    pub basis: AtomBasis,
    pub is_atom: bool,
    /// `Some` exactly when `is_atom`.
    pub complexity: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomReport {
    pub state_count: usize,
    pub entries: Vec<AtomEntry>,
}

impl AtomReport {
    pub fn atom_count(&self) -> usize {
        self.entries.iter().filter(|e| e.is_atom).count()
    }

    pub fn atoms(&self) -> impl Iterator<Item = &AtomEntry> {
        self.entries.iter().filter(|e| e.is_atom)
    }

    pub fn bases(&self) -> Vec<AtomBasis> {
        self.atoms().map(|e| e.basis).collect()
    }

    pub fn max_complexity(&self) -> Option<usize> {
        self.atoms().filter_map(|e| e.complexity).max()
    }

    pub fn complexity_of(&self, basis: AtomBasis) -> Option<usize> {
        self.entries
            .iter()
            .find(|e| e.basis == basis)
            .and_then(|e| e.complexity)
    }
}

/// Evaluates atomhood and complexity for the given bases.
pub fn report_bases(d: &Dfa, bases: &[AtomBasis], exec: Execution) -> Result<AtomReport> {
    let entries = exec.map(bases, |&basis| -> Result<AtomEntry> {
        let atom = build_atom_dfa(d, basis)?;
        let is_atom = atom.recognizes_nonempty();
        Ok(AtomEntry {
            basis,
            is_atom,
            complexity: is_atom.then(|| atom.dfa.quotient_complexity()),
        })
    });
    Ok(AtomReport {
        state_count: d.state_count(),
        entries: entries.into_iter().collect::<Result<_>>()?,
    })
}

/// All atoms of a minimal DFA with their complexities, bases in increasing
/// bit order.
pub fn enumerate_atoms(d: &Dfa) -> Result<AtomReport> {
    enumerate_atoms_with(d, Execution::default())
}

pub fn enumerate_atoms_with(d: &Dfa, exec: Execution) -> Result<AtomReport> {
    d.check_state_limit(MAX_ATOM_STATES)?;
    if !d.is_minimal() {
        return Err(Error::NotMinimal);
    }
    let bases = d.atom_bases_by_reversal()?;
    report_bases(d, &bases, exec)
}
