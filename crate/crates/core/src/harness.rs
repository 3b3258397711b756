//! Independent oracles and randomized cross-checks.
//!
//! The oracle here computes atom complexities from the transition monoid,
//! without going through pair states: the monoid DFA has one state per
//! transformation `t`, moves from `t` to `t·a` and accepts `t` iff the
//! column `{i : i·t ∈ F}` equals the basis. Its language is exactly `A_S`.
//!
//! Random automata come from ChaCha8 (`rand_chacha`) seeded with
//! `seed_from_u64(seed)`: one uniform image per state and letter, letters in
//! order, then one Bernoulli draw per state for finality, repeated until
//! the final set is neither empty nor everything (one-state automata keep
//! their single draw).

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::atoms::{build_atom_dfa, enumerate_atoms_with, AtomBasis};
use crate::bounds::{atom_complexity_bound, BasisProfile};
use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::ideals::{accepting_sink, idealize, IdealKind};
use crate::semigroup::MAX_ATOM_STATES;
use crate::state_set::StateSet;
use crate::transformation::Transformation;
use crate::witnesses::{witness, WitnessClass};

/// Largest state count for the monoid oracle (`6^6` transformations).
pub const ORACLE_MAX_STATES: usize = 6;
const MONOID_CAP: usize = 46_656;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RandomSpec {
    pub n: usize,
    pub letters: usize,
    pub seed: u64,
    pub final_density: f64,
}

impl RandomSpec {
    pub fn new(n: usize, letters: usize, seed: u64, final_density: f64) -> Self {
        let spec = RandomSpec {
            n,
            letters,
            seed,
            final_density,
        };
        spec.validate().expect("invalid random spec");
        spec
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.letters == 0 {
            return Err(Error::InvalidDfa(
                "random DFA needs states and letters".into(),
            ));
        }
        if !(self.final_density > 0.0 && self.final_density < 1.0) {
            return Err(Error::InvalidDfa("final density must lie in (0, 1)".into()));
        }
        if self.letters > 26 {
            return Err(Error::InvalidDfa("at most 26 letters".into()));
        }
        Ok(())
    }
}

/// Letters `a`, `b`, ... in order.
pub fn letter_names(k: usize) -> Vec<String> {
    (0..k)
        .map(|i| char::from(b'a' + i as u8).to_string())
        .collect()
}

/// A complete DFA with initial state 1, deterministic in the spec.
pub fn random_dfa(spec: &RandomSpec) -> Dfa {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.n;
    let delta: Vec<Transformation> = (0..spec.letters)
        .map(|_| {
            let image = (0..n).map(|_| rng.gen_range(0..n as u32)).collect();
            Transformation::new(image).expect("images in range")
        })
        .collect();
    let finals = loop {
        let f: Vec<bool> = (0..n).map(|_| rng.gen_bool(spec.final_density)).collect();
        let count = f.iter().filter(|&&b| b).count();
        if n == 1 || (count > 0 && count < n) {
            break f;
        }
    };
    Dfa::new(letter_names(spec.letters), delta, 0, finals).expect("random DFA is well formed")
}

/// The transition monoid of a DFA as an automaton over its elements.
#[derive(Clone, Debug)]
pub struct MonoidAutomaton {
    /// `elements[0]` is the identity.
    pub elements: Vec<Transformation>,
    /// `next[a][t]`: index of `t·a`.
    next: Vec<Vec<u32>>,
    /// Column of each element: `{i : i·t ∈ F}`.
    columns: Vec<StateSet>,
    alphabet: Vec<String>,
}

impl MonoidAutomaton {
    pub fn new(d: &Dfa) -> Result<Self> {
        d.check_state_limit(ORACLE_MAX_STATES)?;
        let n = d.state_count();
        let mut elements = vec![Transformation::identity(n)];
        for t in d.transition_semigroup(MONOID_CAP)? {
            if !t.is_identity() {
                elements.push(t);
            }
        }
        let index: HashMap<&Transformation, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, t)| (t, i as u32))
            .collect();
        let next = d
            .delta()
            .iter()
            .map(|a| {
                elements
                    .iter()
                    .map(|t| index[&t.then(a).expect("same size")])
                    .collect()
            })
            .collect();
        let finals = d.final_set()?;
        let columns = elements
            .iter()
            .map(|t| (0..n).filter(|&i| finals.contains(t.apply(i))).collect())
            .collect();
        Ok(MonoidAutomaton {
            elements,
            next,
            columns,
            alphabet: d.alphabet().to_vec(),
        })
    }

    /// Distinct columns over all monoid elements: the atom bases.
    pub fn bases(&self) -> BTreeSet<StateSet> {
        self.columns.iter().copied().collect()
    }

    /// `κ(A_basis)`, or `None` when no element has that column.
    pub fn atom_complexity(&self, basis: AtomBasis) -> Option<usize> {
        let finals: Vec<bool> = self.columns.iter().map(|&c| c == basis).collect();
        if !finals.contains(&true) {
            return None;
        }
        let delta = self
            .next
            .iter()
            .map(|row| Transformation::new(row.clone()).expect("indices in range"))
            .collect();
        let dfa = Dfa::new(self.alphabet.clone(), delta, 0, finals).expect("monoid DFA");
        Some(dfa.quotient_complexity())
    }
}

/// Atom complexity via the transition monoid; `None` for non-atoms.
pub fn oracle_atom_complexity(d: &Dfa, basis: AtomBasis) -> Result<Option<usize>> {
    if !basis.within(d.state_count()) {
        return Err(Error::InvalidBasis {
            basis,
            n: d.state_count(),
        });
    }
    Ok(MonoidAutomaton::new(d)?.atom_complexity(basis))
}

/// Quotient complexity of the reversed language, by an explicit subset
/// construction on the reversed automaton.
pub fn reversal_complexity(d: &Dfa) -> usize {
    let n = d.state_count();
    let k = d.letter_count();
    // predecessors[a][q] = states p with p·a = q
    let mut predecessors = vec![vec![Vec::new(); n]; k];
    for (a, t) in d.delta().iter().enumerate() {
        for p in 0..n {
            predecessors[a][t.apply(p)].push(p);
        }
    }
    let start: BTreeSet<usize> = d.finals().collect();
    let mut index: BTreeMap<BTreeSet<usize>, u32> = BTreeMap::from([(start.clone(), 0)]);
    let mut subsets = vec![start.clone()];
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); k];
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        for (a, row) in rows.iter_mut().enumerate() {
            let next: BTreeSet<usize> = s
                .iter()
                .flat_map(|&q| predecessors[a][q].iter().copied())
                .collect();
            let fresh = subsets.len() as u32;
            let id = *index.entry(next.clone()).or_insert_with(|| {
                subsets.push(next.clone());
                queue.push_back(next);
                fresh
            });
            row.push(id);
        }
    }
    let finals = subsets.iter().map(|s| s.contains(&d.initial())).collect();
    let delta = rows
        .into_iter()
        .map(|r| Transformation::new(r).expect("indices in range"))
        .collect();
    Dfa::new(d.alphabet().to_vec(), delta, 0, finals)
        .expect("reversed DFA")
        .quotient_complexity()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisCheck {
    pub basis: AtomBasis,
    pub pair_complexity: Option<usize>,
    pub oracle_complexity: Option<usize>,
}

impl BasisCheck {
    pub fn matches(&self) -> bool {
        self.pair_complexity == self.oracle_complexity
    }
}

/// Outcome of [`cross_check`] on one (minimized) automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub descriptor: String,
    pub state_count: usize,
    /// One entry per subset of the states.
    pub bases: Vec<BasisCheck>,
    pub reversal_bases: Vec<AtomBasis>,
    pub exhaustive_bases: Vec<AtomBasis>,
    pub oracle_bases: Vec<AtomBasis>,
    pub enumerated_bases: Vec<AtomBasis>,
    pub reversed_complexity: usize,
}

impl CrossCheckReport {
    pub fn routes_agree(&self) -> bool {
        self.reversal_bases == self.exhaustive_bases
            && self.exhaustive_bases == self.oracle_bases
            && self.oracle_bases == self.enumerated_bases
    }

    pub fn complexities_agree(&self) -> bool {
        self.bases.iter().all(BasisCheck::matches)
    }

    pub fn reversal_identity_holds(&self) -> bool {
        self.enumerated_bases.len() == self.reversed_complexity
    }

    pub fn passed(&self) -> bool {
        self.routes_agree() && self.complexities_agree() && self.reversal_identity_holds()
    }
}

impl fmt::Display for CrossCheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\tn={}\tatoms={}\treversal={}\troutes={}\tcomplexities={}\t{}",
            self.descriptor,
            self.state_count,
            self.enumerated_bases.len(),
            self.reversed_complexity,
            if self.routes_agree() {
                "agree"
            } else {
                "DIFFER"
            },
            if self.complexities_agree() {
                "agree"
            } else {
                "DIFFER"
            },
            if self.passed() { "PASS" } else { "FAIL" },
        )
    }
}

/// Compares every atom route and both complexity computations on the
/// minimal DFA of `d`.
pub fn cross_check(d: &Dfa, descriptor: &str) -> Result<CrossCheckReport> {
    cross_check_with(d, descriptor, Execution::default())
}

pub fn cross_check_with(d: &Dfa, descriptor: &str, exec: Execution) -> Result<CrossCheckReport> {
    let m = d.minimize();
    m.check_state_limit(ORACLE_MAX_STATES)?;
    let n = m.state_count();
    let monoid = MonoidAutomaton::new(&m)?;
    let subsets: Vec<StateSet> = StateSet::all_subsets(n).collect();
    let bases = exec
        .map(&subsets, |&basis| -> Result<BasisCheck> {
            let atom = build_atom_dfa(&m, basis)?;
            Ok(BasisCheck {
                basis,
                pair_complexity: atom
                    .recognizes_nonempty()
                    .then(|| atom.dfa.quotient_complexity()),
                oracle_complexity: monoid.atom_complexity(basis),
            })
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let exhaustive_bases = bases
        .iter()
        .filter(|b| b.pair_complexity.is_some())
        .map(|b| b.basis)
        .collect();
    Ok(CrossCheckReport {
        descriptor: descriptor.to_string(),
        state_count: n,
        reversal_bases: m.atom_bases_by_reversal()?,
        exhaustive_bases,
        oracle_bases: monoid.bases().into_iter().collect(),
        enumerated_bases: enumerate_atoms_with(&m, Execution::Sequential)?.bases(),
        reversed_complexity: reversal_complexity(&m),
        bases,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub sample: usize,
    pub state_count: usize,
    pub basis: AtomBasis,
    pub complexity: usize,
    pub bound: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub class: WitnessClass,
    pub n: usize,
    pub samples: usize,
    /// Samples whose language was empty or too large after idealizing.
    pub skipped: usize,
    /// Largest complexity seen per `(complexity of the language, |S|)`.
    pub max_observed: BTreeMap<(usize, usize), usize>,
    pub violations: Vec<Violation>,
    /// Whether the class witness with `n` states meets the bound with
    /// equality for every atom; `None` when there is no witness for `n`.
    pub witness_attains: Option<bool>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.witness_attains != Some(false)
    }
}

fn ideal_kind(class: WitnessClass) -> Option<IdealKind> {
    match class {
        WitnessClass::Regular => None,
        WitnessClass::RightIdeal => Some(IdealKind::Right),
        WitnessClass::LeftIdeal => Some(IdealKind::Left),
        WitnessClass::TwoSidedIdeal => Some(IdealKind::TwoSided),
    }
}

/// `(basis, complexity, bound)` for each atom.
pub type BoundCheck = (AtomBasis, usize, Option<u64>);

/// Profile of a basis relative to the initial state and, for right and
/// two-sided ideals, the accepting sink of a minimal DFA.
pub fn basis_profile(d: &Dfa, class: WitnessClass, basis: AtomBasis) -> Result<BasisProfile> {
    let n = d.state_count();
    let sink = match class {
        WitnessClass::RightIdeal | WitnessClass::TwoSidedIdeal => accepting_sink(d)?,
        _ => n - 1,
    };
    Ok(BasisProfile::relative(n, basis, d.initial(), sink))
}

/// Every atom of a minimal DFA of the class checked against its bound.
pub fn atoms_against_bounds(
    d: &Dfa,
    class: WitnessClass,
    exec: Execution,
) -> Result<Vec<BoundCheck>> {
    let report = enumerate_atoms_with(d, exec)?;
    report
        .atoms()
        .map(|e| {
            let bound = atom_complexity_bound(class, basis_profile(d, class, e.basis)?);
            Ok((e.basis, e.complexity.expect("atom"), bound))
        })
        .collect()
}

/// Random automata of the class (idealized where needed) checked against
/// the closed-form bounds, plus the class witness checked for equality.
pub fn bound_sweep(
    class: WitnessClass,
    n: usize,
    samples: usize,
    seed: u64,
) -> Result<SweepReport> {
    bound_sweep_with(class, n, samples, seed, Execution::default())
}

pub fn bound_sweep_with(
    class: WitnessClass,
    n: usize,
    samples: usize,
    seed: u64,
    exec: Execution,
) -> Result<SweepReport> {
    if n > 7 {
        return Err(Error::TooManyStates { n, limit: 7 });
    }
    let indices: Vec<usize> = (0..samples).collect();
    let outcomes = exec.map(&indices, |&i| -> Result<Option<(usize, Vec<BoundCheck>)>> {
        let spec = RandomSpec::new(n.max(1), 3, seed.wrapping_add(i as u64), 0.3);
        let d = random_dfa(&spec);
        let m = match ideal_kind(class) {
            None => d.minimize(),
            Some(kind) => idealize(&d, kind)?,
        };
        if m.finals().next().is_none() || m.state_count() > MAX_ATOM_STATES {
            return Ok(None);
        }
        let checks = atoms_against_bounds(&m, class, Execution::Sequential)?;
        Ok(Some((m.state_count(), checks)))
    });

    let mut report = SweepReport {
        class,
        n,
        samples,
        skipped: 0,
        max_observed: BTreeMap::new(),
        violations: Vec::new(),
        witness_attains: None,
    };
    for (sample, outcome) in outcomes.into_iter().enumerate() {
        let Some((m, checks)) = outcome? else {
            report.skipped += 1;
            continue;
        };
        for (basis, complexity, bound) in checks {
            let slot = report.max_observed.entry((m, basis.len())).or_insert(0);
            *slot = (*slot).max(complexity);
            if bound.is_none_or(|b| complexity as u64 > b) {
                report.violations.push(Violation {
                    sample,
                    state_count: m,
                    basis,
                    complexity,
                    bound,
                });
            }
        }
    }

    if n >= class.min_states() {
        let w = witness(class, n)?;
        let checks = atoms_against_bounds(&w, class, exec)?;
        report.witness_attains = Some(checks.iter().all(|&(_, k, bound)| bound == Some(k as u64)));
    }
    Ok(report)
}
