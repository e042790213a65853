//! Maximal quotient complexities of atoms.
//!
//! An atom of a language with `n` quotients, `r` of them complemented, has
//! at most `2^n - 1` quotients when `r ∈ {0, n}` and otherwise at most
//!
//! ```text
//! f(n, r) = 1 + Σ_{k=1..r} Σ_{h=k+1..k+n-r} C(n, h) · C(h, k)
//! ```
//!
//! where `C(x, y)` is "x choose y". All arithmetic is checked.

use serde::{Deserialize, Serialize};

use crate::atoms::{AtomReport, Atomaton};
use crate::automata::Dfa;
use crate::error::{Error, Result};

pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return Err(Error::Overflow("binomial coefficient"));
        }
    }
    Ok(acc as u64)
}

/// Upper bound on the quotient complexity of an atom with `r` complemented
/// quotients out of `n`.
pub fn max_atom_complexity(n: usize, r: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    if r > n {
        return Err(Error::InvalidArgument(format!("r = {r} exceeds n = {n}")));
    }
    let overflow = || Error::Overflow("atom complexity bound");
    if r == 0 || r == n {
        let p = 1u64
            .checked_shl(u32::try_from(n).map_err(|_| overflow())?)
            .filter(|_| n < 64)
            .ok_or_else(overflow)?;
        return Ok(p - 1);
    }
    let (n64, r64) = (n as u64, r as u64);
    let mut total: u64 = 1;
    for k in 1..=r64 {
        for h in k + 1..=k + n64 - r64 {
            let term = binomial(n64, h)?
                .checked_mul(binomial(h, k)?)
                .ok_or_else(overflow)?;
            total = total.checked_add(term).ok_or_else(overflow)?;
        }
    }
    Ok(total)
}

/// The complemented-quotient count maximizing the bound, and the bound
/// itself; ties go to the smaller `r`.
pub fn max_over_r(n: usize) -> Result<(usize, u64)> {
    let mut best = (0, max_atom_complexity(n, 0)?);
    for r in 1..=n {
        let v = max_atom_complexity(n, r)?;
        if v > best.1 {
            best = (r, v);
        }
    }
    Ok(best)
}

/// Whether `d`'s language has all `2^n` atoms, each meeting its bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaximalityReport {
    pub n: usize,
    pub atom_count: usize,
    pub all_atoms_present: bool,
    pub is_maximal: bool,
    pub atoms: Vec<AtomReport>,
}

pub fn maximality(atomaton: &Atomaton) -> Result<MaximalityReport> {
    let n = atomaton.minimal_dfa().state_count();
    let atoms = atomaton.reports()?;
    let all_atoms_present = n < usize::BITS as usize && atoms.len() == 1usize << n;
    let is_maximal = all_atoms_present && atoms.iter().all(|a| a.is_maximal);
    Ok(MaximalityReport {
        n,
        atom_count: atoms.len(),
        all_atoms_present,
        is_maximal,
        atoms,
    })
}

pub fn is_maximal_atoms(d: &Dfa) -> Result<bool> {
    Ok(maximality(&Atomaton::new(d))?.is_maximal)
}
