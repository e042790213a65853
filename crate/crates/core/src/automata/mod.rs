//! Deterministic and nondeterministic automata and the constructions composed
//! on them: reversal, subset construction, minimization and isomorphism.

mod dfa;
mod minimize;
mod nfa;

pub use dfa::{Alphabet, Dfa, Word};
pub use minimize::{is_isomorphic, is_minimal, minimize, quotient_complexity};
pub use nfa::{determinize, reverse_nfa, Nfa, SubsetDfa};

/// Reversal of a DFA: initial and final states swap and every transition
/// is turned around.
pub fn reverse(d: &Dfa) -> Nfa {
    d.reverse()
}
