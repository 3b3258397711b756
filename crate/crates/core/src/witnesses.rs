//! Witness families whose atoms reach the maximal complexities.
//!
//! Transformations are written in 1-based cycle / unitary / constant
//! notation. Every family has initial state 1 and final states `{n}`.

use std::fmt;
use std::str::FromStr;

use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::state_set::StateSet;
use crate::transformation::Transformation as T;

/// Language classes with their own witness family and bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WitnessClass {
    Regular,
    RightIdeal,
    LeftIdeal,
    TwoSidedIdeal,
}

impl WitnessClass {
    pub const ALL: [WitnessClass; 4] = [
        WitnessClass::Regular,
        WitnessClass::RightIdeal,
        WitnessClass::LeftIdeal,
        WitnessClass::TwoSidedIdeal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            WitnessClass::Regular => "regular",
            WitnessClass::RightIdeal => "right",
            WitnessClass::LeftIdeal => "left",
            WitnessClass::TwoSidedIdeal => "two-sided",
        }
    }

    /// Smallest `n` with a witness.
    pub fn min_states(self) -> usize {
        match self {
            WitnessClass::RightIdeal => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for WitnessClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WitnessClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "regular" => Ok(WitnessClass::Regular),
            "right" | "right-ideal" => Ok(WitnessClass::RightIdeal),
            "left" | "left-ideal" => Ok(WitnessClass::LeftIdeal),
            "two-sided" | "two_sided" | "two-sided-ideal" => Ok(WitnessClass::TwoSidedIdeal),
            _ => Err(format!(
                "unknown class `{s}` (expected regular, right, left or two-sided)"
            )),
        }
    }
}

pub fn witness(class: WitnessClass, n: usize) -> Result<Dfa> {
    match class {
        WitnessClass::Regular => regular_witness(n),
        WitnessClass::RightIdeal => right_ideal_witness(n),
        WitnessClass::LeftIdeal => left_ideal_witness(n),
        WitnessClass::TwoSidedIdeal => two_sided_ideal_witness(n),
    }
}

fn build(n: usize, letters: &[(&str, T)]) -> Dfa {
    let alphabet: Vec<&str> = letters.iter().map(|(l, _)| *l).collect();
    let delta = letters.iter().map(|(_, t)| t.clone()).collect();
    Dfa::from_parts(&alphabet, delta, 0, StateSet::singleton(n - 1))
        .expect("witness is well formed")
}

fn too_small(class: WitnessClass, n: usize) -> Error {
    Error::NoWitness {
        class: class.name(),
        n,
    }
}

fn range(from: usize, to: usize) -> Vec<usize> {
    (from..=to).collect()
}

/// `a = (1,..,n)`, `b = (1,2)`, `c = (n -> 1)`; for `n = 2` only `a, c`.
pub fn regular_witness(n: usize) -> Result<Dfa> {
    if n < 2 {
        return Err(too_small(WitnessClass::Regular, n));
    }
    let a = T::cycle(n, &range(1, n));
    let c = T::unitary(n, n, 1);
    if n == 2 {
        return Ok(build(n, &[("a", a), ("c", c)]));
    }
    Ok(build(n, &[("a", a), ("b", T::cycle(n, &[1, 2])), ("c", c)]))
}

/// `a = (1,..,n-1)`, `b = (2,..,n-1)`, `c = (n-1 -> 1)`, `d = (n-1 -> n)`;
/// `n = 3` drops `b`, `n = 2` accepts `aa*` and `n = 1` accepts `a*`.
pub fn right_ideal_witness(n: usize) -> Result<Dfa> {
    match n {
        0 => Err(too_small(WitnessClass::RightIdeal, n)),
        1 => Ok(build(1, &[("a", T::identity(1))])),
        2 => Ok(build(2, &[("a", T::constant(2, 2))])),
        _ => {
            let a = T::cycle(n, &range(1, n - 1));
            let c = T::unitary(n, n - 1, 1);
            let d = T::unitary(n, n - 1, n);
            if n == 3 {
                Ok(build(n, &[("a", a), ("c", c), ("d", d)]))
            } else {
                let b = T::cycle(n, &range(2, n - 1));
                Ok(build(n, &[("a", a), ("b", b), ("c", c), ("d", d)]))
            }
        }
    }
}

/// `a = (2,..,n)`, `b = (2,3)`, `c = (n -> 2)`, `d = (n -> 1)`,
/// `e = (Q_n -> 2)`; `n = 3` drops `b`. For `n = 2`: `a = 1`,
/// `b = (Q_2 -> 2)`, `c = (Q_2 -> 1)`.
pub fn left_ideal_witness(n: usize) -> Result<Dfa> {
    match n {
        0 | 1 => Err(too_small(WitnessClass::LeftIdeal, n)),
        2 => Ok(build(
            2,
            &[
                ("a", T::identity(2)),
                ("b", T::constant(2, 2)),
                ("c", T::constant(2, 1)),
            ],
        )),
        _ => {
            let a = T::cycle(n, &range(2, n));
            let c = T::unitary(n, n, 2);
            let d = T::unitary(n, n, 1);
            let e = T::constant(n, 2);
            if n == 3 {
                Ok(build(n, &[("a", a), ("c", c), ("d", d), ("e", e)]))
            } else {
                let b = T::cycle(n, &[2, 3]);
                Ok(build(
                    n,
                    &[("a", a), ("b", b), ("c", c), ("d", d), ("e", e)],
                ))
            }
        }
    }
}

/// `a = (2,..,n-1)`, `b = (2,3)`, `c = (n-1 -> 2)`, `d = (n-1 -> 1)`,
/// `e = (Q_{n-1} -> 2)`, `f = (2 -> n)` for `n >= 4`. For `n = 3`: `a = 1`,
/// `b = (Q_2 -> 2)`, `c = (2 -> 3)`, `d = (2 -> 1)`; without `d` the atom
/// `A_{3}` only reaches complexity 2. For `n = 2`: `a = 1`, `b = (Q_2 -> 2)`,
/// accepting `Σ*bΣ*`.
pub fn two_sided_ideal_witness(n: usize) -> Result<Dfa> {
    match n {
        0 | 1 => Err(too_small(WitnessClass::TwoSidedIdeal, n)),
        2 => Ok(build(2, &[("a", T::identity(2)), ("b", T::constant(2, 2))])),
        3 => Ok(build(
            3,
            &[
                ("a", T::identity(3)),
                ("b", T::collapse(3, &[1, 2], 2)),
                ("c", T::unitary(3, 2, 3)),
                ("d", T::unitary(3, 2, 1)),
            ],
        )),
        _ => Ok(build(
            n,
            &[
                ("a", T::cycle(n, &range(2, n - 1))),
                ("b", T::cycle(n, &[2, 3])),
                ("c", T::unitary(n, n - 1, 2)),
                ("d", T::unitary(n, n - 1, 1)),
                ("e", T::collapse(n, &range(1, n - 1), 2)),
                ("f", T::unitary(n, 2, n)),
            ],
        )),
    }
}
