use std::fmt;

use crate::error::{Error, Result};

/// Widest state set a [`StateSet`] can hold.
pub const MAX_SET_STATES: usize = 32;

/// A subset of the states `{0, .., n-1}` stored as a bit mask.
///
/// Indices are 0-based in the API; `Display` and [`StateSet::parse_one_based`]
/// use 1-based state names.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateSet(u32);

impl StateSet {
    pub const EMPTY: StateSet = StateSet(0);

    pub const fn from_bits(bits: u32) -> Self {
        StateSet(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_SET_STATES);
        if n == MAX_SET_STATES {
            StateSet(u32::MAX)
        } else {
            StateSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(q: usize) -> Self {
        StateSet(1 << q)
    }

    pub fn from_states<I: IntoIterator<Item = usize>>(states: I) -> Self {
        states.into_iter().fold(Self::EMPTY, |s, q| s.with(q))
    }

    /// Builds a set from 1-based state names, as written in the literature.
    pub fn one_based(states: &[usize]) -> Self {
        Self::from_states(states.iter().map(|&q| q - 1))
    }

    /// Parses a comma-separated list of 1-based states, e.g. `2,3,4`.
    /// An empty string denotes the empty set.
    pub fn parse_one_based(text: &str, n: usize) -> Result<Self> {
        let text = text.trim().trim_start_matches('{').trim_end_matches('}');
        let mut set = Self::EMPTY;
        if text.trim().is_empty() {
            return Ok(set);
        }
        for (i, item) in text.split(',').enumerate() {
            let q: usize = item.trim().parse().map_err(|_| Error::Parse {
                line: 1,
                column: i + 1,
                message: format!("`{}` is not a state number", item.trim()),
            })?;
            if q == 0 || q > n || q > MAX_SET_STATES {
                return Err(Error::StateOutOfRange { state: q, n });
            }
            set.insert(q - 1);
        }
        Ok(set)
    }

    pub fn contains(self, q: usize) -> bool {
        q < MAX_SET_STATES && self.0 & (1 << q) != 0
    }

    pub fn insert(&mut self, q: usize) {
        self.0 |= 1 << q;
    }

    pub fn remove(&mut self, q: usize) {
        self.0 &= !(1 << q);
    }

    #[must_use]
    pub fn with(mut self, q: usize) -> Self {
        self.insert(q);
        self
    }

    #[must_use]
    pub fn without(mut self, q: usize) -> Self {
        self.remove(q);
        self
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        StateSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        StateSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        StateSet(self.0 & !other.0)
    }

    /// Complement relative to `{0, .., n-1}`.
    pub fn complement(self, n: usize) -> Self {
        Self::full(n).difference(self)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// True when every member is below `n`.
    pub fn within(self, n: usize) -> bool {
        self.is_subset(Self::full(n.min(MAX_SET_STATES)))
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// All `2^n` subsets of `{0, .., n-1}` in increasing bit order.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = StateSet> {
        assert!(n < MAX_SET_STATES, "too many states to enumerate subsets");
        (0u32..(1u32 << n)).map(StateSet)
    }
}

pub struct Iter(u32);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let q = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(q)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for StateSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for StateSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_states(iter)
    }
}

impl fmt::Display for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, q) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", q + 1)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
