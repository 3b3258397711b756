use std::collections::{HashSet, VecDeque};

use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::state_set::StateSet;
use crate::transformation::Transformation;

/// Largest state count accepted by atom computations.
pub const MAX_ATOM_STATES: usize = 20;

impl Dfa {
    /// Transformations induced by non-empty words, in breadth-first order
    /// of their shortest inducing word. The identity appears only if some
    /// non-empty word induces it.
    pub fn transition_semigroup(&self, cap: usize) -> Result<Vec<Transformation>> {
        assert!(cap > 0, "semigroup cap must be positive");
        let mut seen: HashSet<Transformation> = HashSet::new();
        let mut order = Vec::new();
        for t in self.delta() {
            if seen.insert(t.clone()) {
                if order.len() == cap {
                    return Err(Error::CapExceeded {
                        cap,
                        partial: order.len() + 1,
                    });
                }
                order.push(t.clone());
            }
        }
        let mut head = 0;
        while head < order.len() {
            let t = order[head].clone();
            head += 1;
            for a in self.delta() {
                let u = t.then(a)?;
                if !seen.contains(&u) {
                    if order.len() == cap {
                        return Err(Error::CapExceeded {
                            cap,
                            partial: order.len() + 1,
                        });
                    }
                    seen.insert(u.clone());
                    order.push(u);
                }
            }
        }
        Ok(order)
    }

    /// Bases of all atoms, found as the reachable "columns"
    /// `{q : q·x ∈ F}` over words `x`. Sorted by bit pattern.
    ///
    /// The count equals the quotient complexity of the reversed language
    /// when the DFA is minimal.
    pub fn atom_bases_by_reversal(&self) -> Result<Vec<StateSet>> {
        self.check_state_limit(MAX_ATOM_STATES)?;
        let n = self.state_count();
        let start = self.final_set()?;
        // preimage of a column under letter a
        let preimage = |c: StateSet, a: &Transformation| -> StateSet {
            (0..n).filter(|&q| c.contains(a.apply(q))).collect()
        };
        let mut seen = HashSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            for a in self.delta() {
                let p = preimage(c, a);
                if seen.insert(p) {
                    queue.push_back(p);
                }
            }
        }
        let mut out: Vec<StateSet> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }
}
