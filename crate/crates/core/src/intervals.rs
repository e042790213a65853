//! Interval calculus for languages whose syntactic semigroup is full.
//!
//! An interval `[V, U]` is the collection of all sets `T` with
//! `V ⊆ T ⊆ U`; its type is `(|V|, |U|)`. When the transition semigroup of
//! the minimal DFA is the full transformation monoid, every átomaton
//! transition and every state of an atom's minimal DFA is an interval. The
//! closed forms are implemented here next to a direct exploration of the
//! átomaton's subset construction, which checks each reached collection for
//! intervality instead of assuming it.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::atoms::Atomaton;
use crate::automata::{is_minimal, minimize, Dfa};
use crate::bounds::binomial;
use crate::error::{Error, Result};
use crate::semigroup::{full_size, ClosureConfig, TransitionSemigroup};
use crate::stateset::StateSet;
use crate::transformation::Transformation;

/// Member sets are enumerated only up to this many free states.
const ENUMERATION_LIMIT: usize = 12;

/// The interval `[lower, upper]`. Empty intervals are stored canonically as
/// `[Q, ∅]`, so all empty intervals over one universe compare equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    lower: StateSet,
    upper: StateSet,
}

impl Interval {
    pub fn new(lower: StateSet, upper: StateSet) -> Interval {
        assert_eq!(
            lower.universe(),
            upper.universe(),
            "interval bounds over different universes"
        );
        if lower.is_subset(&upper) {
            Interval { lower, upper }
        } else {
            Interval::empty(upper.universe())
        }
    }

    pub fn empty(universe: usize) -> Interval {
        Interval {
            lower: StateSet::full(universe),
            upper: StateSet::empty(universe),
        }
    }

    pub fn singleton(set: StateSet) -> Interval {
        Interval {
            lower: set.clone(),
            upper: set,
        }
    }

    pub fn lower(&self) -> &StateSet {
        &self.lower
    }

    pub fn upper(&self) -> &StateSet {
        &self.upper
    }

    pub fn universe(&self) -> usize {
        self.upper.universe()
    }

    pub fn is_empty(&self) -> bool {
        !self.lower.is_subset(&self.upper)
    }

    /// `(|V|, |U|)`, or `None` for the empty interval, which has no type.
    pub fn kind(&self) -> Option<(usize, usize)> {
        (!self.is_empty()).then(|| (self.lower.len(), self.upper.len()))
    }

    /// Number of member sets.
    pub fn len(&self) -> u128 {
        if self.is_empty() {
            0
        } else {
            1u128 << self.upper.difference(&self.lower).len()
        }
    }

    pub fn contains(&self, set: &StateSet) -> bool {
        self.lower.is_subset(set) && set.is_subset(&self.upper)
    }

    /// All member sets. Panics beyond 2^20 members.
    pub fn members(&self) -> Vec<StateSet> {
        if self.is_empty() {
            return Vec::new();
        }
        let free: Vec<usize> = self.upper.difference(&self.lower).iter().collect();
        assert!(free.len() <= 20, "interval too large to enumerate");
        (0u64..1 << free.len())
            .map(|mask| {
                let mut s = self.lower.clone();
                for (bit, &q) in free.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        s.insert(q);
                    }
                }
                s
            })
            .collect()
    }

    /// Recognizes a collection of sets as an interval. The empty collection
    /// maps to the empty interval; a collection that is not an interval gives
    /// `None`.
    pub fn from_collection(universe: usize, sets: &[StateSet]) -> Option<Interval> {
        let Some(first) = sets.first() else {
            return Some(Interval::empty(universe));
        };
        let mut lower = first.clone();
        let mut upper = first.clone();
        for s in &sets[1..] {
            lower = lower.intersection(s);
            upper.union_with(s);
        }
        let iv = Interval::new(lower, upper);
        let distinct: BTreeSet<&StateSet> = sets.iter().collect();
        (iv.len() == distinct.len() as u128).then_some(iv)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("∅")
        } else {
            write!(f, "[{},{}]", self.lower, self.upper)
        }
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A state of an atom's subset automaton: an interval of atom labels, or the
/// empty collection.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReachState {
    Sink,
    Interval(Interval),
}

/// Everything reachable from `[S, S]` in the subset construction over the
/// átomaton.
#[derive(Clone, Debug)]
pub struct IntervalReach {
    pub start: StateSet,
    /// Reached states in breadth-first order.
    pub states: Vec<ReachState>,
    /// `edges[i][a]` is the index of the successor of state `i` under `a`.
    pub edges: Vec<Vec<usize>>,
}

impl IntervalReach {
    pub fn count(&self) -> usize {
        self.states.len()
    }

    pub fn sink_reached(&self) -> bool {
        self.states.contains(&ReachState::Sink)
    }

    pub fn types(&self) -> BTreeSet<(usize, usize)> {
        self.states
            .iter()
            .filter_map(|s| match s {
                ReachState::Interval(iv) => iv.kind(),
                ReachState::Sink => None,
            })
            .collect()
    }

    /// For each reached state, the set of states reachable from it.
    pub fn reachability(&self) -> Vec<Vec<bool>> {
        let m = self.states.len();
        (0..m)
            .map(|src| {
                let mut seen = vec![false; m];
                let mut stack = vec![src];
                seen[src] = true;
                while let Some(x) = stack.pop() {
                    for &y in &self.edges[x] {
                        if !seen[y] {
                            seen[y] = true;
                            stack.push(y);
                        }
                    }
                }
                seen
            })
            .collect()
    }

    /// Pairs of same-type intervals that are not mutually reachable.
    pub fn same_type_disconnected(&self) -> Vec<(Interval, Interval)> {
        let reach = self.reachability();
        let mut bad = Vec::new();
        for (i, si) in self.states.iter().enumerate() {
            for (j, sj) in self.states.iter().enumerate().skip(i + 1) {
                if let (ReachState::Interval(a), ReachState::Interval(b)) = (si, sj) {
                    if a.kind() == b.kind() && !(reach[i][j] && reach[j][i]) {
                        bad.push((a.clone(), b.clone()));
                    }
                }
            }
        }
        bad
    }
}

/// A minimal DFA whose transition semigroup has been verified to be full.
#[derive(Clone, Debug)]
pub struct FullDfa {
    atomaton: Atomaton,
    semigroup: TransitionSemigroup,
}

impl FullDfa {
    /// Checks the hypothesis once: `d` must be minimal with `n^n` transition
    /// maps.
    pub fn new(d: &Dfa, config: &ClosureConfig) -> Result<FullDfa> {
        if !is_minimal(d) {
            return Err(Error::NotMinimal {
                states: d.state_count(),
                minimal: minimize(d).state_count(),
            });
        }
        let config = ClosureConfig {
            keep_witnesses: true,
            ..*config
        };
        let semigroup = TransitionSemigroup::of_dfa(d, &config)?;
        if !semigroup.is_full() {
            return Err(Error::NotFullSemigroup {
                size: semigroup.len() as u64,
                expected: full_size(d.state_count()).unwrap_or(u64::MAX),
            });
        }
        Ok(FullDfa {
            atomaton: Atomaton::new(d),
            semigroup,
        })
    }

    pub fn dfa(&self) -> &Dfa {
        self.atomaton.minimal_dfa()
    }

    pub fn atomaton(&self) -> &Atomaton {
        &self.atomaton
    }

    pub fn semigroup(&self) -> &TransitionSemigroup {
        &self.semigroup
    }

    fn n(&self) -> usize {
        self.dfa().state_count()
    }

    fn letter(&self, letter: usize) -> Result<&Transformation> {
        if letter >= self.dfa().alphabet().len() {
            return Err(Error::LetterOutOfRange(letter));
        }
        Ok(self.dfa().delta(letter))
    }

    fn check_universe(&self, set: &StateSet) -> Result<()> {
        if set.universe() != self.n() {
            return Err(Error::DegreeMismatch {
                left: set.universe(),
                right: self.n(),
            });
        }
        Ok(())
    }

    /// `η_a(S)`: `[δ_a(S), δ_a(S) ∪ coim δ_a]` when `S` is a preimage of
    /// `δ_a`, empty otherwise.
    pub fn eta_letter(&self, set: &StateSet, letter: usize) -> Result<Interval> {
        self.check_universe(set)?;
        let t = self.letter(letter)?;
        if !t.is_preimage(set) {
            return Ok(Interval::empty(self.n()));
        }
        let low = t.apply_to_set(set);
        let high = low.union(&t.coimage());
        Ok(Interval::new(low, high))
    }

    /// `η_a([V, U]) = [δ_a(V), δ_a(U) ∪ coim δ_a]`, provided every member of
    /// the interval is a preimage of `δ_a`.
    pub fn eta_letter_on_interval(&self, iv: &Interval, letter: usize) -> Result<Interval> {
        self.check_universe(iv.upper())?;
        let t = self.letter(letter)?;
        if iv.is_empty() {
            return Ok(Interval::empty(self.n()));
        }
        if let Some(bad) = first_non_preimage(t, iv) {
            return Err(Error::NotAPreimage {
                set: bad.compact(),
                letter: self.dfa().alphabet().name(letter).to_string(),
            });
        }
        let high = t.apply_to_set(iv.upper()).union(&t.coimage());
        Ok(Interval::new(t.apply_to_set(iv.lower()), high))
    }

    /// `η_w([V, U]) = [δ_w(V), δ_w(U)]` for a word inducing a permutation.
    pub fn eta_word_perm(&self, iv: &Interval, word: &[usize]) -> Result<Interval> {
        self.check_universe(iv.upper())?;
        let t = self.dfa().transformation_of(word)?;
        if !t.is_permutation() {
            return Err(Error::NotAPermutation);
        }
        if iv.is_empty() {
            return Ok(iv.clone());
        }
        Ok(Interval::new(
            t.apply_to_set(iv.lower()),
            t.apply_to_set(iv.upper()),
        ))
    }

    /// Explores the subset construction of the átomaton started in `S`,
    /// using the átomaton's own transitions, and checks that every reached
    /// collection is an interval.
    pub fn interval_reach(&self, set: &StateSet) -> Result<IntervalReach> {
        self.check_universe(set)?;
        let atomaton = &self.atomaton;
        let nfa = atomaton.nfa();
        let start_state = atomaton
            .state_of(set)
            .ok_or_else(|| Error::NotAnAtom(set.compact()))?;
        let k = self.dfa().alphabet().len();

        let start = StateSet::singleton(nfa.state_count(), start_state);
        let mut index: HashMap<StateSet, usize> = HashMap::from([(start.clone(), 0)]);
        let mut queue = vec![start];
        let mut states = Vec::new();
        let mut edges = Vec::new();
        let mut head = 0;
        while head < queue.len() {
            let collection = queue[head].clone();
            head += 1;
            states.push(self.as_interval(&collection)?);
            let mut row = Vec::with_capacity(k);
            for a in 0..k {
                let next = nfa.step_set(&collection, a);
                let id = *index.entry(next.clone()).or_insert_with(|| {
                    queue.push(next);
                    queue.len() - 1
                });
                row.push(id);
            }
            edges.push(row);
        }
        Ok(IntervalReach {
            start: set.clone(),
            states,
            edges,
        })
    }

    fn as_interval(&self, collection: &StateSet) -> Result<ReachState> {
        if collection.is_empty() {
            return Ok(ReachState::Sink);
        }
        let labels = self.atomaton.collection_labels(collection);
        match Interval::from_collection(self.n(), &labels) {
            Some(iv) => Ok(ReachState::Interval(iv)),
            None => {
                let shown: Vec<String> = labels.iter().map(StateSet::compact).collect();
                Err(Error::NotAnInterval(shown.join(",")))
            }
        }
    }

    pub fn interval_reach_count(&self, set: &StateSet) -> Result<usize> {
        Ok(self.interval_reach(set)?.count())
    }
}

/// First member of `iv` that is not a preimage of `t`, if any. Small
/// intervals are enumerated; larger ones are decided on the kernel classes
/// of `t`: every member is a preimage exactly when each class of two or
/// more states lies inside `V` or outside `U`.
fn first_non_preimage(t: &Transformation, iv: &Interval) -> Option<StateSet> {
    let free = iv.upper().difference(iv.lower()).len();
    if free <= ENUMERATION_LIMIT {
        return iv.members().into_iter().find(|m| !t.is_preimage(m));
    }
    for class in t.collision_classes() {
        if class.is_subset(iv.lower()) || class.is_disjoint(iv.upper()) {
            continue;
        }
        let free_part = class.intersection(iv.upper()).difference(iv.lower());
        if let Some(c) = free_part.first() {
            // the class has another member: inside V, outside U, or also free
            let mut with_c = iv.lower().clone();
            with_c.insert(c);
            let witness = if class.intersects(iv.lower()) {
                iv.lower().clone()
            } else if !class.is_subset(iv.upper()) {
                iv.upper().clone()
            } else {
                with_c
            };
            return Some(witness);
        }
        // class meets V and the complement of U but not U \ V
        return Some(iv.lower().clone());
    }
    None
}

/// Interval types reachable from `(s, s)` by `(v, u) → (v-1, u)` for
/// `v ≥ 2` and `(v, u) → (v, u+1)` for `u ≤ n-2`.
pub fn type_reachability(n: usize, s: usize) -> Result<BTreeSet<(usize, usize)>> {
    if s > n {
        return Err(Error::InvalidArgument(format!("s = {s} exceeds n = {n}")));
    }
    let mut seen = BTreeSet::from([(s, s)]);
    let mut stack = vec![(s, s)];
    while let Some((v, u)) = stack.pop() {
        let mut next = Vec::new();
        if v >= 2 {
            next.push((v - 1, u));
        }
        if u + 2 <= n {
            next.push((v, u + 1));
        }
        for t in next {
            if seen.insert(t) {
                stack.push(t);
            }
        }
    }
    Ok(seen)
}

/// Number of intervals of the reachable types, plus one for the empty
/// collection when `0 < n - s < n`.
pub fn count_from_types(n: usize, s: usize) -> Result<u64> {
    let overflow = || Error::Overflow("interval count");
    let mut total: u64 = 0;
    for (v, u) in type_reachability(n, s)? {
        let term = binomial(n as u64, u as u64)?
            .checked_mul(binomial(u as u64, v as u64)?)
            .ok_or_else(overflow)?;
        total = total.checked_add(term).ok_or_else(overflow)?;
    }
    let r = n - s;
    if r > 0 && r < n {
        total = total.checked_add(1).ok_or_else(overflow)?;
    }
    Ok(total)
}
