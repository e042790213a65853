use std::fmt;

use crate::error::{Error, Result};
use crate::stateset::StateSet;
use crate::transformation::Transformation;

use super::nfa::Nfa;

/// A word as a sequence of letter indices into an [`Alphabet`].
pub type Word = Vec<usize>;

/// Ordered list of distinct letter names.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(letters: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let letters: Vec<String> = letters.into_iter().map(Into::into).collect();
        if letters.is_empty() {
            return Err(Error::InvalidAutomaton("alphabet is empty".into()));
        }
        for (i, l) in letters.iter().enumerate() {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(Error::InvalidAutomaton(format!("bad letter name `{l}`")));
            }
            if letters[..i].contains(l) {
                return Err(Error::InvalidAutomaton(format!("duplicate letter `{l}`")));
            }
        }
        Ok(Alphabet { letters })
    }

    /// `a`, `b`, `c`, ... for `k` letters.
    pub fn standard(k: usize) -> Self {
        assert!(
            (1..=26).contains(&k),
            "standard alphabets have 1..=26 letters"
        );
        Alphabet {
            letters: (0..k)
                .map(|i| char::from(b'a' + i as u8).to_string())
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn name(&self, letter: usize) -> &str {
        &self.letters[letter]
    }

    pub fn names(&self) -> &[String] {
        &self.letters
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.letters.iter().position(|l| l == name)
    }

    /// Parses a word. When every letter name is a single character the word
    /// is read character by character; otherwise letters are separated by
    /// whitespace.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let single = self.letters.iter().all(|l| l.chars().count() == 1);
        if single {
            text.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| {
                    let s = c.to_string();
                    self.index_of(&s).ok_or(Error::UnknownLetter(s))
                })
                .collect()
        } else {
            text.split_whitespace()
                .map(|s| {
                    self.index_of(s)
                        .ok_or_else(|| Error::UnknownLetter(s.into()))
                })
                .collect()
        }
    }

    pub fn render_word(&self, word: &[usize]) -> String {
        let single = self.letters.iter().all(|l| l.chars().count() == 1);
        let parts: Vec<&str> = word.iter().map(|&a| self.name(a)).collect();
        if word.is_empty() {
            "ε".to_string()
        } else if single {
            parts.concat()
        } else {
            parts.join(" ")
        }
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.letters).finish()
    }
}

/// A complete DFA over states `{0, .., n-1}`: one transformation per letter.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Dfa {
    alphabet: Alphabet,
    delta: Vec<Transformation>,
    initial: usize,
    finals: StateSet,
}

impl Dfa {
    pub fn new(
        alphabet: Alphabet,
        delta: Vec<Transformation>,
        initial: usize,
        finals: StateSet,
    ) -> Result<Self> {
        let n = finals.universe();
        if n == 0 {
            return Err(Error::InvalidAutomaton(
                "a DFA needs at least one state".into(),
            ));
        }
        if delta.len() != alphabet.len() {
            return Err(Error::InvalidAutomaton(format!(
                "{} transition maps for {} letters",
                delta.len(),
                alphabet.len()
            )));
        }
        if let Some(t) = delta.iter().find(|t| t.degree() != n) {
            return Err(Error::DegreeMismatch {
                left: t.degree(),
                right: n,
            });
        }
        if initial >= n {
            return Err(Error::IndexOutOfRange {
                index: initial,
                degree: n,
            });
        }
        Ok(Dfa {
            alphabet,
            delta,
            initial,
            finals,
        })
    }

    /// Builds a DFA from raw transition tables, `table[letter][state]`.
    pub fn from_table(
        alphabet: Alphabet,
        table: Vec<Vec<usize>>,
        initial: usize,
        finals: &[usize],
    ) -> Result<Self> {
        let n = table.first().map_or(0, Vec::len);
        let delta = table
            .into_iter()
            .map(Transformation::from_map)
            .collect::<Result<Vec<_>>>()?;
        if let Some(&f) = finals.iter().find(|&&f| f >= n) {
            return Err(Error::IndexOutOfRange {
                index: f,
                degree: n,
            });
        }
        Self::new(
            alphabet,
            delta,
            initial,
            StateSet::from_indices(n, finals.iter().copied()),
        )
    }

    pub fn state_count(&self) -> usize {
        self.finals.universe()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn delta(&self, letter: usize) -> &Transformation {
        &self.delta[letter]
    }

    pub fn transitions(&self) -> &[Transformation] {
        &self.delta
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn finals(&self) -> &StateSet {
        &self.finals
    }

    #[inline]
    pub fn step(&self, state: usize, letter: usize) -> usize {
        self.delta[letter].apply(state)
    }

    pub fn run_from(&self, state: usize, word: &[usize]) -> Result<usize> {
        let mut q = state;
        for &a in word {
            if a >= self.alphabet.len() {
                return Err(Error::LetterOutOfRange(a));
            }
            q = self.step(q, a);
        }
        Ok(q)
    }

    pub fn accepts(&self, word: &[usize]) -> Result<bool> {
        self.accepts_from(self.initial, word)
    }

    /// Membership of `word` in the right language of `state`, i.e. the
    /// quotient `K_state`.
    pub fn accepts_from(&self, state: usize, word: &[usize]) -> Result<bool> {
        Ok(self.finals.contains(self.run_from(state, word)?))
    }

    pub fn accepts_str(&self, word: &str) -> Result<bool> {
        self.accepts(&self.alphabet.parse_word(word)?)
    }

    /// The transformation induced by `word`, letters applied left to right.
    pub fn transformation_of(&self, word: &[usize]) -> Result<Transformation> {
        let n = self.state_count();
        let mut map: Vec<usize> = (0..n).collect();
        for &a in word {
            if a >= self.alphabet.len() {
                return Err(Error::LetterOutOfRange(a));
            }
            for q in map.iter_mut() {
                *q = self.step(*q, a);
            }
        }
        Ok(Transformation::from_map_unchecked(map))
    }

    pub fn with_initial(&self, initial: usize) -> Result<Dfa> {
        Dfa::new(
            self.alphabet.clone(),
            self.delta.clone(),
            initial,
            self.finals.clone(),
        )
    }

    /// The reversed automaton as an NFA over the same states.
    pub fn reverse(&self) -> Nfa {
        let n = self.state_count();
        let eta = self
            .delta
            .iter()
            .map(|t| {
                let mut row = vec![StateSet::empty(n); n];
                for q in 0..n {
                    row[t.apply(q)].insert(q);
                }
                row
            })
            .collect();
        Nfa::new(
            self.alphabet.clone(),
            eta,
            self.finals.clone(),
            StateSet::singleton(n, self.initial),
            None,
        )
        .expect("reversal of a valid DFA is a valid NFA")
    }

    /// This DFA viewed as an NFA.
    pub fn to_nfa(&self) -> Nfa {
        let n = self.state_count();
        let eta = self
            .delta
            .iter()
            .map(|t| (0..n).map(|q| StateSet::singleton(n, t.apply(q))).collect())
            .collect();
        Nfa::new(
            self.alphabet.clone(),
            eta,
            StateSet::singleton(n, self.initial),
            self.finals.clone(),
            None,
        )
        .expect("a valid DFA is a valid NFA")
    }

    /// States reachable from the initial state, in breadth-first order with
    /// letters taken in alphabet order.
    pub fn reachable_order(&self) -> Vec<usize> {
        let n = self.state_count();
        let mut seen = vec![false; n];
        let mut order = vec![self.initial];
        seen[self.initial] = true;
        let mut head = 0;
        while head < order.len() {
            let q = order[head];
            head += 1;
            for t in &self.delta {
                let p = t.apply(q);
                if !seen[p] {
                    seen[p] = true;
                    order.push(p);
                }
            }
        }
        order
    }
}
