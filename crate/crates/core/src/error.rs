use thiserror::Error;

use crate::StateSet;

/// Errors produced by the automata, atom, ideal and serialization routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("transformations act on different state counts ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },

    #[error("unknown letter `{0}`")]
    UnknownLetter(String),

    #[error("state {state} out of range 1..={n}")]
    StateOutOfRange { state: usize, n: usize },

    #[error("invalid DFA: {0}")]
    InvalidDfa(String),

    #[error("{n} states exceeds the limit of {limit} for this operation")]
    TooManyStates { n: usize, limit: usize },

    #[error("size cap {cap} exceeded (reached {partial} elements)")]
    CapExceeded { cap: usize, partial: usize },

    #[error("basis {basis} is not a subset of 1..={n}")]
    InvalidBasis { basis: StateSet, n: usize },

    #[error("A_{0} is not an atom")]
    NotAnAtom(StateSet),

    #[error("DFA is not minimal")]
    NotMinimal,

    #[error("the language is empty")]
    EmptyLanguage,

    #[error("not an ideal: {0}")]
    NotAnIdeal(&'static str),

    #[error("no {class} witness with {n} states")]
    NoWitness { class: &'static str, n: usize },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
