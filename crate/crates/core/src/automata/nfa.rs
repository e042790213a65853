use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::stateset::StateSet;
use crate::transformation::Transformation;

use super::dfa::{Alphabet, Dfa};

/// An NFA over states `{0, .., n-1}` with a set of initial states.
///
/// States may carry labels; the átomaton labels each state with the set of
/// quotients whose intersection forms that atom.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Nfa {
    alphabet: Alphabet,
    /// `eta[letter][state]`
    eta: Vec<Vec<StateSet>>,
    initials: StateSet,
    finals: StateSet,
    labels: Option<Vec<StateSet>>,
}

impl Nfa {
    pub fn new(
        alphabet: Alphabet,
        eta: Vec<Vec<StateSet>>,
        initials: StateSet,
        finals: StateSet,
        labels: Option<Vec<StateSet>>,
    ) -> Result<Self> {
        let n = initials.universe();
        if n == 0 {
            return Err(Error::InvalidAutomaton(
                "an NFA needs at least one state".into(),
            ));
        }
        if finals.universe() != n {
            return Err(Error::DegreeMismatch {
                left: finals.universe(),
                right: n,
            });
        }
        if eta.len() != alphabet.len() {
            return Err(Error::InvalidAutomaton(
                "transition relation does not cover every letter".into(),
            ));
        }
        for row in &eta {
            if row.len() != n || row.iter().any(|s| s.universe() != n) {
                return Err(Error::InvalidAutomaton(
                    "transition relation does not cover every state".into(),
                ));
            }
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(Error::InvalidAutomaton(
                    "one label per state required".into(),
                ));
            }
        }
        Ok(Nfa {
            alphabet,
            eta,
            initials,
            finals,
            labels,
        })
    }

    pub fn state_count(&self) -> usize {
        self.initials.universe()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// `η(state, letter)`
    pub fn eta(&self, letter: usize, state: usize) -> &StateSet {
        &self.eta[letter][state]
    }

    pub fn initials(&self) -> &StateSet {
        &self.initials
    }

    pub fn finals(&self) -> &StateSet {
        &self.finals
    }

    pub fn labels(&self) -> Option<&[StateSet]> {
        self.labels.as_deref()
    }

    pub fn label(&self, state: usize) -> Option<&StateSet> {
        self.labels.as_ref().map(|l| &l[state])
    }

    /// Index of the state carrying `label`.
    pub fn state_labeled(&self, label: &StateSet) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// `η(S, a)`, the union of `η(s, a)` over `s ∈ S`.
    pub fn step_set(&self, set: &StateSet, letter: usize) -> StateSet {
        let mut out = StateSet::empty(self.state_count());
        for s in set {
            out.union_with(&self.eta[letter][s]);
        }
        out
    }

    pub fn accepts(&self, word: &[usize]) -> Result<bool> {
        let mut cur = self.initials.clone();
        for &a in word {
            if a >= self.alphabet.len() {
                return Err(Error::LetterOutOfRange(a));
            }
            cur = self.step_set(&cur, a);
        }
        Ok(cur.intersects(&self.finals))
    }

    pub fn with_initials(&self, initials: StateSet) -> Result<Nfa> {
        Nfa::new(
            self.alphabet.clone(),
            self.eta.clone(),
            initials,
            self.finals.clone(),
            self.labels.clone(),
        )
    }

    /// Reversal; labels are kept.
    pub fn reverse(&self) -> Nfa {
        let n = self.state_count();
        let eta = self
            .eta
            .iter()
            .map(|row| {
                let mut rev = vec![StateSet::empty(n); n];
                for (p, targets) in row.iter().enumerate() {
                    for q in targets {
                        rev[q].insert(p);
                    }
                }
                rev
            })
            .collect();
        Nfa {
            alphabet: self.alphabet.clone(),
            eta,
            initials: self.finals.clone(),
            finals: self.initials.clone(),
            labels: self.labels.clone(),
        }
    }
}

/// Reversal of an NFA.
pub fn reverse_nfa(m: &Nfa) -> Nfa {
    m.reverse()
}

/// Result of the subset construction: a DFA whose state `i` stands for the
/// subset `subsets[i]` of NFA states.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubsetDfa {
    pub dfa: Dfa,
    pub subsets: Vec<StateSet>,
}

impl SubsetDfa {
    pub fn state_of(&self, subset: &StateSet) -> Option<usize> {
        self.subsets.iter().position(|s| s == subset)
    }

    /// The plain DFA, with subset labels dropped.
    pub fn into_dfa(self) -> Dfa {
        self.dfa
    }

    /// Reversal of the subset DFA, with each state labeled by its subset.
    pub fn reverse_labeled(&self) -> Nfa {
        let mut r = self.dfa.reverse();
        r.labels = Some(self.subsets.clone());
        r
    }
}

/// Subset construction restricted to subsets reachable from the initial set.
///
/// States are numbered breadth-first from the initial subset, letters in
/// alphabet order. The empty subset is kept as an ordinary non-final state
/// whenever it is reached.
pub fn determinize(m: &Nfa) -> SubsetDfa {
    let k = m.alphabet().len();
    let mut index: HashMap<StateSet, usize> = HashMap::new();
    let mut subsets = vec![m.initials().clone()];
    index.insert(m.initials().clone(), 0);
    let mut table: Vec<Vec<usize>> = vec![Vec::new(); k];
    let mut head = 0;
    while head < subsets.len() {
        let current = subsets[head].clone();
        head += 1;
        for (a, row) in table.iter_mut().enumerate() {
            let next = m.step_set(&current, a);
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    let id = subsets.len();
                    index.insert(next.clone(), id);
                    subsets.push(next);
                    id
                }
            };
            row.push(id);
        }
    }
    let size = subsets.len();
    let finals = StateSet::from_indices(
        size,
        subsets
            .iter()
            .enumerate()
            .filter(|(_, s)| s.intersects(m.finals()))
            .map(|(i, _)| i),
    );
    let delta = table
        .into_iter()
        .map(Transformation::from_map_unchecked)
        .collect();
    let dfa = Dfa::new(m.alphabet().clone(), delta, 0, finals)
        .expect("subset construction yields a complete DFA");
    SubsetDfa { dfa, subsets }
}
