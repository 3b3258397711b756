//! Moore partition refinement over the reachable part of a DFA.

use std::collections::HashMap;

use crate::dfa::Dfa;
use crate::transformation::Transformation;

/// Indistinguishability classes of the reachable states.
///
/// Classes are numbered in breadth-first order of their first reachable
/// member, so the initial state is always in class 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    class_of: Vec<Option<u32>>,
    count: usize,
}

impl Partition {
    pub fn class_count(&self) -> usize {
        self.count
    }

    /// Class of `q`, or `None` when `q` is unreachable.
    pub fn class_of(&self, q: usize) -> Option<usize> {
        self.class_of[q].map(|c| c as usize)
    }

    pub fn same_class(&self, p: usize, q: usize) -> bool {
        self.class_of[p].is_some() && self.class_of[p] == self.class_of[q]
    }

    /// Members of every class, each list in increasing state order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count];
        for (q, c) in self.class_of.iter().enumerate() {
            if let Some(c) = c {
                out[*c as usize].push(q);
            }
        }
        out
    }
}

impl Dfa {
    /// Coarsest partition of the reachable states that separates final from
    /// non-final states and is stable under every letter.
    pub fn distinguishability_classes(&self) -> Partition {
        let order = self.reachable_states();
        let k = self.letter_count();
        let n = self.state_count();

        let mut class = vec![u32::MAX; n];
        let initial_final = self.is_final(self.initial());
        for &q in &order {
            class[q] = u32::from(self.is_final(q) != initial_final);
        }
        let mut count = if order.iter().any(|&q| self.is_final(q) != initial_final) {
            2
        } else {
            1
        };

        let width = k + 1;
        let mut signature = vec![0u32; order.len() * width];
        loop {
            for (i, &q) in order.iter().enumerate() {
                let row = &mut signature[i * width..(i + 1) * width];
                row[0] = class[q];
                for (a, t) in self.delta().iter().enumerate() {
                    row[a + 1] = class[t.apply(q)];
                }
            }
            let mut ids: HashMap<&[u32], u32> = HashMap::with_capacity(count * 2);
            let mut next = vec![u32::MAX; n];
            for (i, &q) in order.iter().enumerate() {
                let fresh = ids.len() as u32;
                next[q] = *ids
                    .entry(&signature[i * width..(i + 1) * width])
                    .or_insert(fresh);
            }
            let refined = ids.len();
            drop(ids);
            class = next;
            if refined == count {
                break;
            }
            count = refined;
        }

        Partition {
            class_of: class
                .into_iter()
                .map(|c| (c != u32::MAX).then_some(c))
                .collect(),
            count,
        }
    }

    /// Number of quotients of the accepted language.
    pub fn quotient_complexity(&self) -> usize {
        self.distinguishability_classes().class_count()
    }

    pub fn is_minimal(&self) -> bool {
        self.quotient_complexity() == self.state_count()
    }

    /// Quotient automaton: one state per class of reachable states.
    pub fn minimize(&self) -> Dfa {
        let partition = self.distinguishability_classes();
        let m = partition.class_count();
        let mut representative = vec![usize::MAX; m];
        for q in self.reachable_states() {
            let c = partition.class_of(q).expect("reachable");
            if representative[c] == usize::MAX {
                representative[c] = q;
            }
        }
        let delta = self
            .delta()
            .iter()
            .map(|t| {
                Transformation::from_raw(
                    representative
                        .iter()
                        .map(|&q| partition.class_of(t.apply(q)).expect("reachable") as u32)
                        .collect(),
                )
            })
            .collect();
        let finals = representative.iter().map(|&q| self.is_final(q)).collect();
        Dfa::new(
            self.alphabet().to_vec(),
            delta,
            partition.class_of(self.initial()).expect("reachable"),
            finals,
        )
        .expect("quotient automaton is well formed")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{random_dfa, RandomSpec};
    use crate::state_set::StateSet;
    use crate::witnesses::*;

    /// Pairwise distinguishability by exploring pairs backwards from
    /// (final, non-final) pairs.
    fn distinguishable_pairs(d: &Dfa) -> Vec<Vec<bool>> {
        let n = d.state_count();
        let mut dist = vec![vec![false; n]; n];
        for p in 0..n {
            for q in 0..n {
                dist[p][q] = d.is_final(p) != d.is_final(q);
            }
        }
        let mut changed = true;
        while changed {
            changed = false;
            for p in 0..n {
                for q in 0..n {
                    if !dist[p][q]
                        && (0..d.letter_count()).any(|a| dist[d.step(p, a)][d.step(q, a)])
                    {
                        dist[p][q] = true;
                        changed = true;
                    }
                }
            }
        }
        dist
    }

    #[test]
    fn witnesses_are_minimal() {
        for n in 2..=7 {
            assert!(regular_witness(n).unwrap().is_minimal());
            assert!(left_ideal_witness(n).unwrap().is_minimal());
            assert!(two_sided_ideal_witness(n).unwrap().is_minimal());
        }
        for n in 1..=7 {
            assert!(right_ideal_witness(n).unwrap().is_minimal());
        }
        assert_eq!(regular_witness(7).unwrap().quotient_complexity(), 7);
    }

    #[test]
    fn accept_all_has_one_quotient() {
        assert_eq!(Dfa::trivial(&["a", "b"], true).quotient_complexity(), 1);
    }

    #[test]
    fn identical_absorbing_finals_merge() {
        let a = Transformation::from_one_based(&[2, 2, 3]).unwrap();
        let b = Transformation::from_one_based(&[3, 2, 3]).unwrap();
        let d = Dfa::from_parts(&["a", "b"], vec![a, b], 0, StateSet::one_based(&[2, 3])).unwrap();
        let p = d.distinguishability_classes();
        assert!(p.same_class(1, 2));
        assert_eq!(p.class_count(), 2);
        assert_eq!(p.classes(), vec![vec![0], vec![1, 2]]);
    }

    #[test]
    fn duplicated_state_halves() {
        // Two copies of the 3-state regular witness; letter a hops between
        // the copies, the other letters stay within one.
        let base = regular_witness(3).unwrap();
        let n = base.state_count();
        let delta = base
            .delta()
            .iter()
            .enumerate()
            .map(|(i, t)| {
                let image: Vec<u32> = (0..2 * n)
                    .map(|q| {
                        let copy = q / n;
                        let target_copy = if i == 0 { 1 - copy } else { copy };
                        (t.apply(q % n) + n * target_copy) as u32
                    })
                    .collect();
                Transformation::new(image).unwrap()
            })
            .collect();
        let finals = (0..2 * n).map(|q| base.is_final(q % n)).collect();
        let doubled = Dfa::new(base.alphabet().to_vec(), delta, 0, finals).unwrap();
        assert_eq!(doubled.reachable_states().len(), 6);
        let m = doubled.minimize();
        assert_eq!(m.state_count(), 3);
        assert_eq!(m.quotient_complexity(), 3);
    }

    #[test]
    fn minimizing_minimal_is_isomorphic() {
        let d = right_ideal_witness(5).unwrap();
        // BFS numbering of the witness coincides with its own numbering
        // except for relabelling; compare via the class map.
        let m = d.minimize();
        assert_eq!(m.state_count(), d.state_count());
        let p = d.distinguishability_classes();
        for (a, t) in d.delta().iter().enumerate() {
            for q in 0..d.state_count() {
                let c = p.class_of(q).unwrap();
                assert_eq!(m.step(c, a), p.class_of(t.apply(q)).unwrap());
                assert_eq!(m.is_final(c), d.is_final(q));
            }
        }
    }

    #[test]
    fn partition_agrees_with_pair_oracle() {
        for seed in 0..150 {
            let n = 1 + (seed as usize % 6);
            let d = random_dfa(&RandomSpec::new(n, 1 + (seed as usize % 3), seed, 0.4));
            let p = d.distinguishability_classes();
            let dist = distinguishable_pairs(&d);
            let reach = d.reachable_states();
            for &x in &reach {
                for &y in &reach {
                    assert_eq!(!p.same_class(x, y), dist[x][y], "seed {seed}");
                }
            }
        }
    }

    #[test]
    fn minimize_preserves_complexity() {
        for seed in 0..100 {
            let d = random_dfa(&RandomSpec::new(6, 3, seed, 0.3));
            let m = d.minimize();
            assert_eq!(m.quotient_complexity(), d.quotient_complexity());
            assert!(m.is_minimal());
            // same language on all words up to length 5
            let mut words: Vec<Vec<usize>> = vec![vec![]];
            for _ in 0..5 {
                let mut next = Vec::new();
                for w in &words {
                    assert_eq!(
                        d.is_final(d.run_from(d.initial(), w)),
                        m.is_final(m.run_from(m.initial(), w))
                    );
                    for a in 0..3 {
                        let mut v = w.clone();
                        v.push(a);
                        next.push(v);
                    }
                }
                words = next;
            }
        }
    }
}
