//! Named automata.

use crate::automata::{Alphabet, Dfa};
use crate::error::{Error, Result};
use crate::semigroup::{full_size, syntactic_complexity, ClosureConfig};
use crate::stateset::StateSet;
use crate::transformation::Transformation;

/// The four-letter, three-state DFA with `a = (0,1)`, `b = (1,2)`,
/// `c = (2->0)`, `d = (Q->1)`, initial state 0 and final state 2.
pub fn example1() -> Dfa {
    let n = 3;
    let delta = vec![
        Transformation::transposition(n, 0, 1).unwrap(),
        Transformation::transposition(n, 1, 2).unwrap(),
        Transformation::singular(n, 2, 0).unwrap(),
        Transformation::constant(n, 1).unwrap(),
    ];
    Dfa::new(Alphabet::standard(4), delta, 0, StateSet::singleton(n, 2)).unwrap()
}

/// Ternary DFA whose transition semigroup is all `n^n` maps: `a` swaps 0 and
/// 1, `b` is the cycle `(0,1,..,n-1)`, `c` is `(n-1 -> 0)`. Initial 0,
/// final `{n-1}`. For `n = 1` all letters are the identity.
pub fn witness_max_semigroup(n: usize, config: &ClosureConfig) -> Result<Dfa> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let delta = if n == 1 {
        vec![Transformation::identity(1)?; 3]
    } else {
        vec![
            Transformation::transposition(n, 0, 1)?,
            Transformation::cycle(n, &(0..n).collect::<Vec<_>>())?,
            Transformation::singular(n, n - 1, 0)?,
        ]
    };
    let d = Dfa::new(
        Alphabet::standard(3),
        delta,
        0,
        StateSet::singleton(n, n - 1),
    )?;
    let size = syntactic_complexity(&d, config)?;
    let expected = full_size(n).ok_or(Error::Overflow("n^n"))?;
    if size != expected {
        return Err(Error::NotFullSemigroup { size, expected });
    }
    Ok(d)
}
