//! A workbench for two complexity measures of regular languages: syntactic
//! complexity (the size of the transition semigroup of the minimal DFA) and
//! the quotient complexities of atoms.
//!
//! The modules build on each other bottom-up:
//!
//! * [`transformation`] and [`stateset`]: maps and subsets of `{0..n-1}`;
//! * [`automata`]: DFAs, NFAs, reversal, subset construction, minimization;
//! * [`semigroup`]: transition-semigroup closure and word witnesses;
//! * [`atoms`]: the átomaton and the minimal DFA of every atom;
//! * [`bounds`]: maximal atom complexities;
//! * [`intervals`]: interval calculus for full-semigroup languages;
//! * [`search`]: exhaustive and sampled campaigns;
//! * [`text`]: the DFA text format.

pub mod atoms;
pub mod automata;
pub mod bounds;
pub mod error;
pub mod intervals;
pub mod search;
pub mod semigroup;
pub mod stateset;
pub mod text;
pub mod transformation;

pub use search::witness;

pub use atoms::{AtomReport, Atomaton};
pub use automata::{Alphabet, Dfa, Nfa, SubsetDfa, Word};
pub use error::{Error, Result};
pub use intervals::{FullDfa, Interval};
pub use semigroup::{ClosureConfig, SemigroupSummary, TransitionSemigroup};
pub use stateset::StateSet;
pub use transformation::Transformation;
