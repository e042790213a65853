//! Atoms of a regular language and its átomaton.
//!
//! With `D` the minimal DFA of `L` over states `Q`, the atoms of `L` are the
//! non-empty intersections `A_S` of the quotients `K_i` for `i ∈ S` and the
//! complements of the remaining quotients. They are in one-to-one
//! correspondence with the states of the subset automaton of the reversal of
//! `D`, and reversing that subset automaton once more gives the átomaton.
//! Atoms are always identified by their label `S`, never by position.

use serde::{Deserialize, Serialize};

use crate::automata::{determinize, minimize, Dfa, Nfa, SubsetDfa};
use crate::bounds::max_atom_complexity;
use crate::error::{Error, Result};
use crate::stateset::StateSet;

/// The átomaton of a language together with the automata it is derived from.
#[derive(Clone, Debug)]
pub struct Atomaton {
    minimal: Dfa,
    minimized: bool,
    reversed: SubsetDfa,
    nfa: Nfa,
}

/// Minimal DFA of one atom.
#[derive(Clone, Debug)]
pub struct AtomDfa {
    pub label: StateSet,
    pub dfa: Dfa,
    /// Size of the subset construction before minimization.
    pub determinized_states: usize,
    /// Collections of átomaton states reached by the subset construction, in
    /// breadth-first order; each is a set over the átomaton's state indices.
    pub collections: Vec<StateSet>,
}

impl AtomDfa {
    pub fn complexity(&self) -> usize {
        self.dfa.state_count()
    }

    /// Whether the subset construction was already minimal.
    pub fn determinization_was_minimal(&self) -> bool {
        self.determinized_states == self.dfa.state_count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomReport {
    #[serde(with = "label_serde")]
    pub label: StateSet,
    /// Number of complemented quotients, `n - |S|`.
    pub r: usize,
    pub is_negative: bool,
    pub is_initial: bool,
    pub is_final: bool,
    pub complexity: u64,
    pub bound: u64,
    pub is_maximal: bool,
}

pub(crate) mod label_serde {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::stateset::StateSet;

    #[derive(Serialize, Deserialize)]
    struct Repr {
        universe: usize,
        members: Vec<usize>,
    }

    pub fn serialize<S: Serializer>(s: &StateSet, ser: S) -> Result<S::Ok, S::Error> {
        Repr {
            universe: s.universe(),
            members: s.iter().collect(),
        }
        .serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<StateSet, D::Error> {
        let r = Repr::deserialize(de)?;
        if r.members.iter().any(|&m| m >= r.universe) {
            return Err(serde::de::Error::custom("member outside universe"));
        }
        Ok(StateSet::from_indices(r.universe, r.members))
    }
}

impl Atomaton {
    /// Builds the átomaton from any DFA; a non-minimal input is minimized
    /// first and [`Atomaton::was_minimized`] reports it.
    pub fn new(d: &Dfa) -> Atomaton {
        let m = minimize(d);
        let minimized = m.state_count() != d.state_count();
        let minimal = if minimized { m } else { d.clone() };
        let reversed = determinize(&minimal.reverse());
        let nfa = reversed.reverse_labeled();
        Atomaton {
            minimal,
            minimized,
            reversed,
            nfa,
        }
    }

    /// The minimal DFA whose states label the atoms.
    pub fn minimal_dfa(&self) -> &Dfa {
        &self.minimal
    }

    pub fn was_minimized(&self) -> bool {
        self.minimized
    }

    /// The subset automaton of the reversed minimal DFA.
    pub fn reversed_determinized(&self) -> &SubsetDfa {
        &self.reversed
    }

    pub fn nfa(&self) -> &Nfa {
        &self.nfa
    }

    pub fn atom_count(&self) -> usize {
        self.nfa.state_count()
    }

    /// Atom labels in átomaton state order.
    pub fn labels(&self) -> &[StateSet] {
        &self.reversed.subsets
    }

    /// Atom labels sorted by size, then lexicographically.
    pub fn sorted_labels(&self) -> Vec<StateSet> {
        let mut l = self.labels().to_vec();
        l.sort();
        l
    }

    pub fn state_of(&self, label: &StateSet) -> Option<usize> {
        self.reversed.state_of(label)
    }

    pub fn label(&self, state: usize) -> &StateSet {
        &self.reversed.subsets[state]
    }

    fn require(&self, label: &StateSet) -> Result<usize> {
        if label.universe() != self.minimal.state_count() {
            return Err(Error::NotAnAtom(format!("{label:?}")));
        }
        self.state_of(label)
            .ok_or_else(|| Error::NotAnAtom(label.compact()))
    }

    /// `η(S, a)` as a list of atom labels, sorted.
    pub fn eta_labels(&self, label: &StateSet, letter: usize) -> Result<Vec<StateSet>> {
        let state = self.require(label)?;
        if letter >= self.minimal.alphabet().len() {
            return Err(Error::LetterOutOfRange(letter));
        }
        Ok(self.collection_labels(self.nfa.eta(letter, state)))
    }

    /// Converts a set of átomaton states into the sorted list of their labels.
    pub fn collection_labels(&self, states: &StateSet) -> Vec<StateSet> {
        let mut v: Vec<StateSet> = states.iter().map(|s| self.label(s).clone()).collect();
        v.sort();
        v
    }

    /// Labels of initial átomaton states: those containing the initial state.
    pub fn initial_labels(&self) -> Vec<StateSet> {
        self.collection_labels(self.nfa.initials())
    }

    pub fn final_labels(&self) -> Vec<StateSet> {
        self.collection_labels(self.nfa.finals())
    }

    /// Minimal DFA of the atom `A_S`: the átomaton started in `S` alone,
    /// determinized, then minimized.
    pub fn atom_dfa(&self, label: &StateSet) -> Result<AtomDfa> {
        let state = self.require(label)?;
        let start = StateSet::singleton(self.nfa.state_count(), state);
        let det = determinize(&self.nfa.with_initials(start)?);
        let dfa = minimize(&det.dfa);
        Ok(AtomDfa {
            label: label.clone(),
            determinized_states: det.dfa.state_count(),
            dfa,
            collections: det.subsets,
        })
    }

    pub fn language_is_empty(&self) -> bool {
        self.minimal.finals().is_empty()
    }

    pub fn report(&self, label: &StateSet) -> Result<AtomReport> {
        let atom = self.atom_dfa(label)?;
        let n = self.minimal.state_count();
        let r = n - label.len();
        let complexity = atom.complexity() as u64;
        let bound = max_atom_complexity(n, r)?;
        Ok(AtomReport {
            label: label.clone(),
            r,
            is_negative: label.is_empty(),
            is_initial: label.contains(self.minimal.initial()),
            is_final: !self.language_is_empty() && label == self.minimal.finals(),
            complexity,
            bound,
            is_maximal: complexity == bound,
        })
    }

    /// One report per atom, sorted by label.
    pub fn reports(&self) -> Result<Vec<AtomReport>> {
        self.sorted_labels()
            .iter()
            .map(|l| self.report(l))
            .collect()
    }
}

pub fn build_atomaton(d: &Dfa) -> Atomaton {
    Atomaton::new(d)
}

pub fn atoms_of(d: &Dfa) -> Result<Vec<AtomReport>> {
    Atomaton::new(d).reports()
}

pub fn atom_minimal_dfa(d: &Dfa, label: &StateSet) -> Result<Dfa> {
    Ok(Atomaton::new(d).atom_dfa(label)?.dfa)
}

pub fn atom_quotient_complexity(d: &Dfa, label: &StateSet) -> Result<usize> {
    Ok(Atomaton::new(d).atom_dfa(label)?.complexity())
}

/// Membership of `word` in `A_S` straight from the definition: `word` must
/// lie in `K_i` for every `i ∈ S` and outside `K_j` for every other `j`,
/// where `K_i` is the right language of state `i` of `d`.
pub fn membership_in_atom(d: &Dfa, label: &StateSet, word: &[usize]) -> Result<bool> {
    if label.universe() != d.state_count() {
        return Err(Error::DegreeMismatch {
            left: label.universe(),
            right: d.state_count(),
        });
    }
    for i in 0..d.state_count() {
        if d.accepts_from(i, word)? != label.contains(i) {
            return Ok(false);
        }
    }
    Ok(true)
}
