use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::state_set::{StateSet, MAX_SET_STATES};
use crate::transformation::Transformation;

/// A complete deterministic automaton: one transformation per letter.
///
/// States are indexed `0..n` in the API; state `i` is printed as `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Vec<String>,
    delta: Vec<Transformation>,
    initial: usize,
    finals: Vec<bool>,
}

impl Dfa {
    pub fn new(
        alphabet: Vec<String>,
        delta: Vec<Transformation>,
        initial: usize,
        finals: Vec<bool>,
    ) -> Result<Self> {
        let n = finals.len();
        if n == 0 {
            return Err(Error::InvalidDfa("a DFA needs at least one state".into()));
        }
        if alphabet.is_empty() {
            return Err(Error::InvalidDfa("the alphabet is empty".into()));
        }
        if alphabet.len() != delta.len() {
            return Err(Error::InvalidDfa(format!(
                "{} letters but {} transformations",
                alphabet.len(),
                delta.len()
            )));
        }
        for (i, letter) in alphabet.iter().enumerate() {
            if letter.is_empty() || letter.chars().any(char::is_whitespace) {
                return Err(Error::InvalidDfa(format!("bad letter name `{letter}`")));
            }
            if alphabet[..i].contains(letter) {
                return Err(Error::InvalidDfa(format!("duplicate letter `{letter}`")));
            }
        }
        if let Some(t) = delta.iter().find(|t| t.len() != n) {
            return Err(Error::SizeMismatch {
                left: n,
                right: t.len(),
            });
        }
        if initial >= n {
            return Err(Error::StateOutOfRange {
                state: initial + 1,
                n,
            });
        }
        Ok(Dfa {
            alphabet,
            delta,
            initial,
            finals,
        })
    }

    /// Convenience constructor for small automata with letters given as
    /// `&str` and final states as a [`StateSet`].
    pub fn from_parts(
        alphabet: &[&str],
        delta: Vec<Transformation>,
        initial: usize,
        finals: StateSet,
    ) -> Result<Self> {
        let n = delta.first().map_or(0, Transformation::len);
        if !finals.within(n) {
            return Err(Error::InvalidDfa(format!(
                "final states {finals} not within 1..={n}"
            )));
        }
        Self::new(
            alphabet.iter().map(|s| s.to_string()).collect(),
            delta,
            initial,
            (0..n).map(|q| finals.contains(q)).collect(),
        )
    }

    /// The one-state DFA over `alphabet` accepting everything (`accept`) or
    /// nothing.
    pub fn trivial(alphabet: &[&str], accept: bool) -> Self {
        let finals = if accept {
            StateSet::singleton(0)
        } else {
            StateSet::EMPTY
        };
        Self::from_parts(
            alphabet,
            vec![Transformation::identity(1); alphabet.len()],
            0,
            finals,
        )
        .expect("trivial DFA is well formed")
    }

    pub fn state_count(&self) -> usize {
        self.finals.len()
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn letter_count(&self) -> usize {
        self.alphabet.len()
    }

    pub fn letter_index(&self, letter: &str) -> Option<usize> {
        self.alphabet.iter().position(|l| l == letter)
    }

    pub fn delta(&self) -> &[Transformation] {
        &self.delta
    }

    #[inline]
    pub fn step(&self, q: usize, letter: usize) -> usize {
        self.delta[letter].apply(q)
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    #[inline]
    pub fn is_final(&self, q: usize) -> bool {
        self.finals[q]
    }

    pub fn final_flags(&self) -> &[bool] {
        &self.finals
    }

    pub fn finals(&self) -> impl Iterator<Item = usize> + '_ {
        self.finals
            .iter()
            .enumerate()
            .filter_map(|(q, &f)| f.then_some(q))
    }

    /// Final states as a bit set; requires at most 32 states.
    pub fn final_set(&self) -> Result<StateSet> {
        self.check_set_width()?;
        Ok(self.finals().collect())
    }

    pub(crate) fn check_set_width(&self) -> Result<()> {
        self.check_state_limit(MAX_SET_STATES)
    }

    pub(crate) fn check_state_limit(&self, limit: usize) -> Result<()> {
        if self.state_count() > limit {
            Err(Error::TooManyStates {
                n: self.state_count(),
                limit,
            })
        } else {
            Ok(())
        }
    }

    /// Same automaton with a different initial state.
    pub fn with_initial(&self, initial: usize) -> Result<Self> {
        Self::new(
            self.alphabet.clone(),
            self.delta.clone(),
            initial,
            self.finals.clone(),
        )
    }

    /// Same automaton with different final states.
    pub fn with_finals(&self, finals: Vec<bool>) -> Result<Self> {
        if finals.len() != self.state_count() {
            return Err(Error::SizeMismatch {
                left: self.state_count(),
                right: finals.len(),
            });
        }
        Self::new(
            self.alphabet.clone(),
            self.delta.clone(),
            self.initial,
            finals,
        )
    }

    fn letters_of<S: AsRef<str>>(&self, word: &[S]) -> Result<Vec<usize>> {
        word.iter()
            .map(|l| {
                self.letter_index(l.as_ref())
                    .ok_or_else(|| Error::UnknownLetter(l.as_ref().to_string()))
            })
            .collect()
    }

    /// Transformation induced by a word; the empty word induces the identity.
    pub fn induced_transformation<S: AsRef<str>>(&self, word: &[S]) -> Result<Transformation> {
        let letters = self.letters_of(word)?;
        let mut image: Vec<u32> = (0..self.state_count() as u32).collect();
        for a in letters {
            for q in image.iter_mut() {
                *q = self.delta[a].apply(*q as usize) as u32;
            }
        }
        Ok(Transformation::from_raw(image))
    }

    /// Like [`Dfa::induced_transformation`] with one letter per character.
    pub fn induced_by_chars(&self, word: &str) -> Result<Transformation> {
        let letters: Vec<String> = word.chars().map(String::from).collect();
        self.induced_transformation(&letters)
    }

    /// State reached from `q` on the word given by letter indices.
    pub fn run_from(&self, q: usize, word: &[usize]) -> usize {
        word.iter().fold(q, |q, &a| self.step(q, a))
    }

    pub fn accepts<S: AsRef<str>>(&self, word: &[S]) -> Result<bool> {
        let letters = self.letters_of(word)?;
        Ok(self.is_final(self.run_from(self.initial, &letters)))
    }

    /// States reachable from the initial state, in breadth-first order.
    pub fn reachable_states(&self) -> Vec<usize> {
        let mut seen = vec![false; self.state_count()];
        let mut order = vec![self.initial];
        seen[self.initial] = true;
        let mut head = 0;
        while head < order.len() {
            let q = order[head];
            head += 1;
            for t in &self.delta {
                let r = t.apply(q);
                if !seen[r] {
                    seen[r] = true;
                    order.push(r);
                }
            }
        }
        order
    }

    /// Reachable states as a bit set; requires at most 32 states.
    pub fn reachable(&self) -> Result<StateSet> {
        self.check_set_width()?;
        Ok(self.reachable_states().into_iter().collect())
    }

    /// Whether the language of state `p` is contained in that of state `q`.
    ///
    /// Explores state pairs reachable from `(p, q)` and fails as soon as a
    /// pair with `p`-side final and `q`-side non-final shows up.
    pub fn state_language_contains(&self, p: usize, q: usize) -> bool {
        let n = self.state_count();
        let mut seen = vec![false; n * n];
        let mut queue = VecDeque::from([(p, q)]);
        seen[p * n + q] = true;
        while let Some((x, y)) = queue.pop_front() {
            if self.finals[x] && !self.finals[y] {
                return false;
            }
            for t in &self.delta {
                let next = (t.apply(x), t.apply(y));
                let key = next.0 * n + next.1;
                if !seen[key] {
                    seen[key] = true;
                    queue.push_back(next);
                }
            }
        }
        true
    }
}
