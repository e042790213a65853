//! Transition semigroups, syntactic complexity and word witnesses.
//!
//! Elements are packed four bits per state into a `u64`, which covers every
//! degree up to 16; the default size cap already refuses degrees from 10 on.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::automata::{minimize, Dfa, Word};
use crate::error::{Error, Result};
use crate::transformation::Transformation;

const MAX_PACKED_DEGREE: usize = 16;
const NO_PARENT: u32 = u32::MAX;

/// Limits for closure computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosureConfig {
    /// Refuse to start when the closure could exceed this many elements.
    pub max_elements: u64,
    /// Keep a parent pointer per element so word witnesses can be recovered.
    pub keep_witnesses: bool,
}

impl Default for ClosureConfig {
    fn default() -> Self {
        ClosureConfig {
            max_elements: 100_000_000,
            keep_witnesses: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupSummary {
    pub n: usize,
    pub size: u64,
    pub is_full: bool,
    pub generator_count: usize,
    /// `rank_histogram[r]` counts elements whose image has `r` states.
    pub rank_histogram: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordWitness {
    pub transformation: Transformation,
    pub word: Word,
}

/// Closure of a set of generators under composition, in breadth-first order
/// over words (length first, then alphabet order).
#[derive(Clone, Debug)]
pub struct TransitionSemigroup {
    n: usize,
    generator_count: usize,
    elements: Vec<u64>,
    index: HashMap<u64, u32>,
    /// `(parent element, last letter)`; the root elements have no parent
    parents: Option<Vec<(u32, u32)>>,
}

/// `n^n`, or `None` on overflow.
pub fn full_size(n: usize) -> Option<u64> {
    (n as u64).checked_pow(u32::try_from(n).ok()?)
}

fn pack(t: &Transformation) -> u64 {
    t.map()
        .iter()
        .enumerate()
        .fold(0, |acc, (i, &x)| acc | (x as u64) << (4 * i))
}

fn unpack(n: usize, code: u64) -> Transformation {
    Transformation::from_map_unchecked((0..n).map(|i| (code >> (4 * i) & 15) as usize).collect())
}

/// Packed `letter ∘ element`: apply `element` first, then `letter`.
#[inline]
fn then(n: usize, element: u64, letter: &[u8]) -> u64 {
    let mut out = 0;
    for i in 0..n {
        let x = (element >> (4 * i) & 15) as usize;
        out |= (letter[x] as u64) << (4 * i);
    }
    out
}

impl TransitionSemigroup {
    pub fn generate(gens: &[Transformation], config: &ClosureConfig) -> Result<Self> {
        let n = match gens.first() {
            Some(g) => g.degree(),
            None => return Err(Error::InvalidArgument("no generators".into())),
        };
        if let Some(g) = gens.iter().find(|g| g.degree() != n) {
            return Err(Error::DegreeMismatch {
                left: g.degree(),
                right: n,
            });
        }
        let projected = full_size(n).map_or(u128::MAX, u128::from);
        if projected > u128::from(config.max_elements) {
            return Err(Error::CapExceeded {
                what: "transition semigroup closure",
                needed: projected,
                cap: u128::from(config.max_elements),
            });
        }
        if n > MAX_PACKED_DEGREE {
            return Err(Error::CapExceeded {
                what: "closure degree",
                needed: n as u128,
                cap: MAX_PACKED_DEGREE as u128,
            });
        }

        let letters: Vec<Vec<u8>> = gens
            .iter()
            .map(|g| g.map().iter().map(|&x| x as u8).collect())
            .collect();
        let mut elements = Vec::new();
        let mut index = HashMap::new();
        let mut parents = config.keep_witnesses.then(Vec::new);

        for (a, g) in gens.iter().enumerate() {
            let code = pack(g);
            if let std::collections::hash_map::Entry::Vacant(e) = index.entry(code) {
                e.insert(elements.len() as u32);
                elements.push(code);
                if let Some(p) = parents.as_mut() {
                    p.push((NO_PARENT, a as u32));
                }
            }
        }
        let mut head = 0;
        while head < elements.len() {
            let current = elements[head];
            for (a, letter) in letters.iter().enumerate() {
                let code = then(n, current, letter);
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry(code) {
                    e.insert(elements.len() as u32);
                    elements.push(code);
                    if let Some(p) = parents.as_mut() {
                        p.push((head as u32, a as u32));
                    }
                }
            }
            head += 1;
        }
        Ok(TransitionSemigroup {
            n,
            generator_count: gens.len(),
            elements,
            index,
            parents,
        })
    }

    /// Transition semigroup of `d` as given, over its own states.
    pub fn of_dfa(d: &Dfa, config: &ClosureConfig) -> Result<Self> {
        Self::generate(d.transitions(), config)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_full(&self) -> bool {
        full_size(self.n) == Some(self.elements.len() as u64)
    }

    pub fn contains(&self, t: &Transformation) -> bool {
        t.degree() == self.n && self.index.contains_key(&pack(t))
    }

    pub fn element(&self, i: usize) -> Transformation {
        unpack(self.n, self.elements[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = Transformation> + '_ {
        self.elements.iter().map(move |&c| unpack(self.n, c))
    }

    /// The first word, in length-then-alphabet order, inducing element `i`.
    pub fn witness_of(&self, i: usize) -> Option<Word> {
        let parents = self.parents.as_ref()?;
        let mut word = Vec::new();
        let mut cur = i as u32;
        loop {
            let (parent, letter) = parents[cur as usize];
            word.push(letter as usize);
            if parent == NO_PARENT {
                break;
            }
            cur = parent;
        }
        word.reverse();
        Some(word)
    }

    /// A shortest non-empty word inducing `t`, if `t` is in the semigroup.
    /// Always `None` when witnesses were not kept.
    pub fn word_for(&self, t: &Transformation) -> Option<Word> {
        if t.degree() != self.n {
            return None;
        }
        let &i = self.index.get(&pack(t))?;
        self.witness_of(i as usize)
    }

    pub fn witnesses(&self) -> Vec<WordWitness> {
        (0..self.len())
            .filter_map(|i| {
                Some(WordWitness {
                    transformation: self.element(i),
                    word: self.witness_of(i)?,
                })
            })
            .collect()
    }

    pub fn summary(&self) -> SemigroupSummary {
        let mut rank_histogram = vec![0u64; self.n + 1];
        for &code in &self.elements {
            let mut seen = 0u16;
            for i in 0..self.n {
                seen |= 1 << (code >> (4 * i) & 15);
            }
            rank_histogram[seen.count_ones() as usize] += 1;
        }
        SemigroupSummary {
            n: self.n,
            size: self.elements.len() as u64,
            is_full: self.is_full(),
            generator_count: self.generator_count,
            rank_histogram,
        }
    }
}

/// Syntactic semigroup data for a language, computed on its minimal DFA.
#[derive(Clone, Debug)]
pub struct SyntacticSemigroup {
    pub minimal: Dfa,
    /// The input had to be minimized first.
    pub minimized: bool,
    pub semigroup: TransitionSemigroup,
}

impl SyntacticSemigroup {
    pub fn of(d: &Dfa, config: &ClosureConfig) -> Result<Self> {
        let minimal = minimize(d);
        let minimized = minimal.state_count() != d.state_count();
        let minimal = if minimized { minimal } else { d.clone() };
        let semigroup = TransitionSemigroup::of_dfa(&minimal, config)?;
        Ok(SyntacticSemigroup {
            minimal,
            minimized,
            semigroup,
        })
    }

    pub fn complexity(&self) -> u64 {
        self.semigroup.len() as u64
    }
}

pub fn transition_semigroup(d: &Dfa, config: &ClosureConfig) -> Result<TransitionSemigroup> {
    TransitionSemigroup::of_dfa(d, config)
}

/// Size of the transition semigroup of the minimal DFA of `d`.
pub fn syntactic_complexity(d: &Dfa, config: &ClosureConfig) -> Result<u64> {
    Ok(SyntacticSemigroup::of(d, config)?.complexity())
}

pub fn generates_full(gens: &[Transformation], config: &ClosureConfig) -> Result<bool> {
    let config = ClosureConfig {
        keep_witnesses: false,
        ..*config
    };
    Ok(TransitionSemigroup::generate(gens, &config)?.is_full())
}

pub fn word_for(d: &Dfa, t: &Transformation, config: &ClosureConfig) -> Result<Option<Word>> {
    let config = ClosureConfig {
        keep_witnesses: true,
        ..*config
    };
    Ok(TransitionSemigroup::of_dfa(d, &config)?.word_for(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::Alphabet;
    use crate::witness::example1;

    fn cfg() -> ClosureConfig {
        ClosureConfig::default()
    }

    fn classic(n: usize) -> Vec<Transformation> {
        vec![
            Transformation::transposition(n, 0, 1).unwrap(),
            Transformation::cycle(n, &(0..n).collect::<Vec<_>>()).unwrap(),
            Transformation::singular(n, n - 1, 0).unwrap(),
        ]
    }

    #[test]
    fn example1_is_full() {
        let d = example1();
        assert_eq!(syntactic_complexity(&d, &cfg()).unwrap(), 27);
        let s = transition_semigroup(&d, &cfg()).unwrap().summary();
        assert!(s.is_full);
        assert_eq!(s.rank_histogram, vec![0, 3, 18, 6]);
    }

    #[test]
    fn identity_letter_generates_one_element() {
        let d = Dfa::from_table(Alphabet::standard(1), vec![vec![0, 1, 2]], 0, &[2]).unwrap();
        let sg = transition_semigroup(&d, &cfg()).unwrap();
        assert_eq!(sg.len(), 1);
        let swap = Transformation::transposition(3, 0, 1).unwrap();
        assert_eq!(word_for(&d, &swap, &cfg()).unwrap(), None);
    }

    #[test]
    fn classic_generators() {
        assert!(generates_full(&classic(3), &cfg()).unwrap());
        assert!(!generates_full(&classic(3)[..2], &cfg()).unwrap());
        let perms = TransitionSemigroup::generate(&classic(3)[..2], &cfg()).unwrap();
        assert_eq!(perms.len(), 6);
        assert!(!generates_full(&[Transformation::constant(3, 1).unwrap()], &cfg()).unwrap());
    }

    #[test]
    fn witnesses_for_example1() {
        let d = example1();
        let k = Transformation::constant(3, 1).unwrap();
        let w = word_for(&d, &k, &cfg()).unwrap().unwrap();
        assert_eq!(d.alphabet().render_word(&w), "d");
        let id = Transformation::identity(3).unwrap();
        let w = word_for(&d, &id, &cfg()).unwrap().unwrap();
        assert_eq!(d.alphabet().render_word(&w), "aa");
        for ww in transition_semigroup(&d, &cfg()).unwrap().witnesses() {
            assert_eq!(d.transformation_of(&ww.word).unwrap(), ww.transformation);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let tight = ClosureConfig {
            max_elements: 26,
            keep_witnesses: false,
        };
        assert!(matches!(
            syntactic_complexity(&example1(), &tight),
            Err(Error::CapExceeded {
                cap: 26,
                needed: 27,
                ..
            })
        ));
    }

    #[test]
    fn degree_one() {
        let d = Dfa::from_table(Alphabet::standard(1), vec![vec![0]], 0, &[0]).unwrap();
        assert_eq!(syntactic_complexity(&d, &cfg()).unwrap(), 1);
        assert!(transition_semigroup(&d, &cfg()).unwrap().is_full());
    }

    #[test]
    fn witnesses_can_be_dropped() {
        let no = ClosureConfig {
            keep_witnesses: false,
            ..cfg()
        };
        let sg = transition_semigroup(&example1(), &no).unwrap();
        assert_eq!(sg.len(), 27);
        assert!(sg
            .word_for(&Transformation::constant(3, 1).unwrap())
            .is_none());
    }
}
