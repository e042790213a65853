//! Exhaustive and sampled enumeration of DFAs with initial state 0.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automata::{Alphabet, Dfa};
use crate::error::{Error, Result};
use crate::semigroup::full_size;
use crate::stateset::StateSet;
use crate::transformation::Transformation;

/// Limits on exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationCaps {
    pub max_states: usize,
    pub max_letters: usize,
    pub max_dfas: u64,
}

impl Default for EnumerationCaps {
    fn default() -> Self {
        EnumerationCaps {
            max_states: 4,
            max_letters: 3,
            max_dfas: 300_000_000,
        }
    }
}

/// All DFAs over states `{0..n-1}` and `k` letters with initial state 0:
/// every letter ranges over the `n^n` maps and the final set over the `2^n`
/// subsets. Index order is lexicographic in (first letter, .., last letter,
/// final set), each map ordered lexicographically on `[t(0), t(1), ..]`.
#[derive(Clone, Debug)]
pub struct DfaSpace {
    n: usize,
    k: usize,
    maps: u64,
    alphabet: Alphabet,
}

impl DfaSpace {
    pub fn new(n: usize, k: usize, caps: &EnumerationCaps) -> Result<Self> {
        if n == 0 || k == 0 || k > 26 {
            return Err(Error::InvalidArgument(format!(
                "need n >= 1 and 1 <= k <= 26, got n = {n}, k = {k}"
            )));
        }
        let count = Self::count_of(n, k);
        if n > caps.max_states {
            return Err(Error::CapExceeded {
                what: "states for exhaustive enumeration",
                needed: n as u128,
                cap: caps.max_states as u128,
            });
        }
        if k > caps.max_letters {
            return Err(Error::CapExceeded {
                what: "letters for exhaustive enumeration",
                needed: k as u128,
                cap: caps.max_letters as u128,
            });
        }
        if count > u128::from(caps.max_dfas) {
            return Err(Error::CapExceeded {
                what: "DFAs to enumerate",
                needed: count,
                cap: u128::from(caps.max_dfas),
            });
        }
        Ok(DfaSpace {
            n,
            k,
            maps: full_size(n).expect("bounded by caps"),
            alphabet: Alphabet::standard(k),
        })
    }

    /// `(n^n)^k · 2^n`, saturating.
    pub fn count_of(n: usize, k: usize) -> u128 {
        let maps = (n as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        let letters = maps.checked_pow(k as u32).unwrap_or(u128::MAX);
        letters.saturating_mul(1u128.checked_shl(n as u32).unwrap_or(u128::MAX))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> u64 {
        Self::count_of(self.n, self.k) as u64
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of shards: one per transformation of the first letter.
    pub fn shard_count(&self) -> u64 {
        self.maps
    }

    pub fn shard_len(&self) -> u64 {
        self.len() / self.maps
    }

    /// The DFA at position `index` of the enumeration order.
    pub fn get(&self, index: u64) -> Dfa {
        let finals_count = 1u64 << self.n;
        let mask = index % finals_count;
        let mut rest = index / finals_count;
        let mut delta = vec![None; self.k];
        for slot in delta.iter_mut().rev() {
            *slot = Some(map_at(self.n, rest % self.maps));
            rest /= self.maps;
        }
        Dfa::new(
            self.alphabet.clone(),
            delta.into_iter().map(Option::unwrap).collect(),
            0,
            StateSet::from_mask(self.n, mask),
        )
        .expect("enumerated DFAs are valid")
    }

    pub fn iter(&self) -> impl Iterator<Item = Dfa> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }

    /// DFAs whose first letter is the `shard`-th transformation.
    pub fn shard(&self, shard: u64) -> impl Iterator<Item = Dfa> + '_ {
        let len = self.shard_len();
        (shard * len..(shard + 1) * len).map(move |i| self.get(i))
    }
}

/// The `index`-th transformation of degree `n` in lexicographic order.
pub fn map_at(n: usize, index: u64) -> Transformation {
    let mut map = vec![0; n];
    let mut rest = index;
    for slot in map.iter_mut().rev() {
        *slot = (rest % n as u64) as usize;
        rest /= n as u64;
    }
    Transformation::from_map(map).expect("digits are below n")
}

/// Seeded uniform sampler: each letter's map uniform over all `n^n`, the
/// final set uniform over all `2^n`, initial state 0.
#[derive(Clone, Debug)]
pub struct DfaSampler {
    rng: ChaCha8Rng,
    seed: u64,
}

impl DfaSampler {
    pub fn new(seed: u64) -> Self {
        DfaSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            seed,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn sample(&mut self, n: usize, k: usize) -> Dfa {
        assert!((1..=64).contains(&n) && (1..=26).contains(&k));
        let delta = (0..k)
            .map(|_| {
                let map = (0..n).map(|_| self.rng.gen_range(0..n)).collect();
                Transformation::from_map(map).unwrap()
            })
            .collect();
        let mask = if n == 64 {
            self.rng.gen::<u64>()
        } else {
            self.rng.gen_range(0..1u64 << n)
        };
        Dfa::new(
            Alphabet::standard(k),
            delta,
            0,
            StateSet::from_mask(n, mask),
        )
        .unwrap()
    }
}
