//! Total self-maps of `{0, .., n-1}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::stateset::StateSet;

/// A transformation `t` of the state set `{0, .., n-1}`, stored as the list
/// `[t(0), t(1), ..]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation {
    map: Vec<usize>,
}

impl Transformation {
    pub fn from_map(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        if let Some(&bad) = map.iter().find(|&&x| x >= n) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                degree: n,
            });
        }
        Ok(Transformation { map })
    }

    pub(crate) fn from_map_unchecked(map: Vec<usize>) -> Self {
        debug_assert!(map.iter().all(|&x| x < map.len()));
        Transformation { map }
    }

    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        Ok(Transformation {
            map: (0..n).collect(),
        })
    }

    /// The cycle `(e0, e1, .., ek)`: `e0 -> e1 -> .. -> ek -> e0`.
    pub fn cycle(n: usize, elems: &[usize]) -> Result<Self> {
        if elems.len() < 2 {
            return Err(Error::CycleTooShort(elems.len()));
        }
        let mut map = Self::identity(n)?.map;
        let mut seen = StateSet::empty(n);
        for &e in elems {
            check_index(e, n)?;
            if !seen.insert(e) {
                return Err(Error::RepeatedIndex(e));
            }
        }
        for (k, &e) in elems.iter().enumerate() {
            map[e] = elems[(k + 1) % elems.len()];
        }
        Ok(Transformation { map })
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        Self::cycle(n, &[i, j])
    }

    /// The singular transformation `(i -> j)`.
    pub fn singular(n: usize, i: usize, j: usize) -> Result<Self> {
        let mut map = Self::identity(n)?.map;
        check_index(i, n)?;
        check_index(j, n)?;
        if i == j {
            return Err(Error::RepeatedIndex(i));
        }
        map[i] = j;
        Ok(Transformation { map })
    }

    /// The constant transformation `(Q -> j)`.
    pub fn constant(n: usize, j: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        check_index(j, n)?;
        Ok(Transformation { map: vec![j; n] })
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    /// `self ∘ t`, i.e. `i ↦ self(t(i))`.
    pub fn compose(&self, t: &Transformation) -> Result<Transformation> {
        if self.degree() != t.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: t.degree(),
            });
        }
        Ok(Transformation {
            map: t.map.iter().map(|&x| self.map[x]).collect(),
        })
    }

    pub fn image(&self) -> StateSet {
        StateSet::from_indices(self.degree(), self.map.iter().copied())
    }

    pub fn coimage(&self) -> StateSet {
        self.image().complement()
    }

    pub fn rank(&self) -> usize {
        self.image().len()
    }

    pub fn is_permutation(&self) -> bool {
        self.rank() == self.degree()
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Inverse of a permutation; `None` when `self` is not bijective.
    pub fn inverse(&self) -> Option<Transformation> {
        if !self.is_permutation() {
            return None;
        }
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.map.iter().enumerate() {
            inv[x] = i;
        }
        Some(Transformation { map: inv })
    }

    /// `t(S)`; the empty set maps to the empty set.
    pub fn apply_to_set(&self, set: &StateSet) -> StateSet {
        debug_assert_eq!(set.universe(), self.degree());
        StateSet::from_indices(self.degree(), set.iter().map(|s| self.map[s]))
    }

    /// `t⁻¹(S) = {q : t(q) ∈ S}`.
    pub fn preimage_of_set(&self, set: &StateSet) -> StateSet {
        debug_assert_eq!(set.universe(), self.degree());
        StateSet::from_indices(
            self.degree(),
            (0..self.degree()).filter(|&q| set.contains(self.map[q])),
        )
    }

    /// Whether `P = t⁻¹(S)` for some `S`, tested as `P = t⁻¹(t(P))`.
    pub fn is_preimage(&self, set: &StateSet) -> bool {
        self.preimage_of_set(&self.apply_to_set(set)) == *set
    }

    /// Kernel classes of size at least two: the sets of states sharing an image.
    pub fn collision_classes(&self) -> Vec<StateSet> {
        let n = self.degree();
        let mut classes = vec![StateSet::empty(n); n];
        for (q, &x) in self.map.iter().enumerate() {
            classes[x].insert(q);
        }
        classes.into_iter().filter(|c| c.len() >= 2).collect()
    }

    /// Factors a rank `n-1` transformation as `alpha ∘ pi` with `alpha`
    /// singular and `pi` a permutation.
    ///
    /// The colliding pair `p < p'` with `t(p) = t(p')` is unique; `p'` is sent
    /// by `pi` to the single state outside the image, and `alpha` folds that
    /// state onto `t(p)`.
    pub fn decompose_singular_perm(&self) -> Result<(Transformation, Transformation)> {
        let n = self.degree();
        let rank = self.rank();
        if n < 2 || rank != n - 1 {
            return Err(Error::WrongRank {
                rank,
                expected: n.saturating_sub(1),
            });
        }
        let class = self
            .collision_classes()
            .into_iter()
            .next()
            .expect("rank n-1 has exactly one collision");
        let mut members = class.iter();
        let partner = members.next().unwrap();
        let excluded = members.next().unwrap();
        let missing = self.coimage().first().unwrap();

        let mut pi = self.map.clone();
        pi[excluded] = missing;
        let pi = Transformation { map: pi };
        let alpha = Transformation::singular(n, missing, self.map[partner])?;
        debug_assert_eq!(alpha.compose(&pi).as_ref(), Ok(self));
        Ok((alpha, pi))
    }

    /// Recognizes the cycle, singular and constant shapes.
    pub fn notation(&self) -> Option<String> {
        let n = self.degree();
        let moved: Vec<usize> = (0..n).filter(|&i| self.map[i] != i).collect();
        if moved.len() == 1 {
            let i = moved[0];
            return Some(format!("({}->{})", i, self.map[i]));
        }
        if moved.len() >= 2 && self.is_permutation() {
            let start = moved[0];
            let mut orbit = vec![start];
            let mut x = self.map[start];
            while x != start {
                orbit.push(x);
                x = self.map[x];
            }
            if orbit.len() == moved.len() {
                let parts: Vec<String> = orbit.iter().map(|i| i.to_string()).collect();
                return Some(format!("({})", parts.join(",")));
            }
        }
        if n >= 2 && self.map.iter().all(|&x| x == self.map[0]) {
            return Some(format!("(Q->{})", self.map[0]));
        }
        None
    }
}

fn check_index(i: usize, n: usize) -> Result<()> {
    if i >= n {
        Err(Error::IndexOutOfRange {
            index: i,
            degree: n,
        })
    } else {
        Ok(())
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.notation() {
            Some(s) => f.write_str(&s),
            None => {
                let parts: Vec<String> = self.map.iter().map(|i| i.to_string()).collect();
                write!(f, "[{}]", parts.join(" "))
            }
        }
    }
}

impl fmt::Debug for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(map: &[usize]) -> Transformation {
        Transformation::from_map(map.to_vec()).unwrap()
    }

    fn set(n: usize, xs: &[usize]) -> StateSet {
        StateSet::from_indices(n, xs.iter().copied())
    }

    #[test]
    fn compose_pointwise() {
        let s = Transformation::transposition(3, 1, 2).unwrap();
        let u = Transformation::transposition(3, 0, 1).unwrap();
        let c = s.compose(&u).unwrap();
        assert_eq!(c.map(), &[2, 0, 1]);
        assert_eq!(c, Transformation::cycle(3, &[0, 2, 1]).unwrap());
        assert_eq!(Transformation::identity(3).unwrap().compose(&u).unwrap(), u);
        let k = Transformation::constant(3, 1).unwrap();
        assert_eq!(k.compose(&c).unwrap(), k);
    }

    #[test]
    fn compose_degree_mismatch() {
        let a = Transformation::identity(2).unwrap();
        let b = Transformation::identity(3).unwrap();
        assert_eq!(
            a.compose(&b),
            Err(Error::DegreeMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn constructors_match_example_letters() {
        assert_eq!(Transformation::singular(3, 2, 0).unwrap().map(), &[0, 1, 0]);
        assert_eq!(Transformation::constant(3, 1).unwrap().map(), &[1, 1, 1]);
        assert_eq!(
            Transformation::transposition(3, 0, 1).unwrap().map(),
            &[1, 0, 2]
        );
        assert_eq!(Transformation::cycle(3, &[1, 2]).unwrap().map(), &[0, 2, 1]);
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(
            Transformation::cycle(3, &[0, 1, 0]),
            Err(Error::RepeatedIndex(0))
        );
        assert_eq!(Transformation::cycle(3, &[1]), Err(Error::CycleTooShort(1)));
        assert!(matches!(
            Transformation::transposition(3, 0, 3),
            Err(Error::IndexOutOfRange { index: 3, .. })
        ));
        assert_eq!(
            Transformation::singular(3, 1, 1),
            Err(Error::RepeatedIndex(1))
        );
        assert!(Transformation::constant(3, 5).is_err());
        assert_eq!(Transformation::identity(0), Err(Error::ZeroDegree));
        assert!(Transformation::from_map(vec![0, 2]).is_err());
    }

    #[test]
    fn image_and_coimage() {
        let d = Transformation::constant(3, 1).unwrap();
        assert_eq!(d.image(), set(3, &[1]));
        assert_eq!(d.coimage(), set(3, &[0, 2]));
        assert!(Transformation::cycle(3, &[0, 1, 2])
            .unwrap()
            .coimage()
            .is_empty());
        let c = Transformation::singular(3, 2, 0).unwrap();
        assert_eq!(c.apply_to_set(&set(3, &[1, 2])), set(3, &[0, 1]));
        assert!(c.apply_to_set(&StateSet::empty(3)).is_empty());
    }

    #[test]
    fn preimages_of_constant() {
        let d = Transformation::constant(3, 1).unwrap();
        assert_eq!(d.preimage_of_set(&set(3, &[1])), set(3, &[0, 1, 2]));
        assert!(d.is_preimage(&StateSet::full(3)));
        assert!(d.is_preimage(&StateSet::empty(3)));
        for m in 1..7 {
            assert!(!d.is_preimage(&StateSet::from_mask(3, m)));
        }
        let id = Transformation::identity(3).unwrap();
        for m in 0..8 {
            let s = StateSet::from_mask(3, m);
            assert_eq!(id.preimage_of_set(&s), s);
        }
    }

    #[test]
    fn permutation_test() {
        assert!(t(&[1, 0, 2]).is_permutation());
        assert!(!t(&[0, 1, 0]).is_permutation());
        assert!(!t(&[1, 1, 1]).is_permutation());
    }

    #[test]
    fn decomposition_examples() {
        let (alpha, pi) = t(&[0, 1, 0]).decompose_singular_perm().unwrap();
        assert_eq!(alpha, Transformation::singular(3, 2, 0).unwrap());
        assert!(pi.is_identity());

        let (alpha, pi) = t(&[1, 0, 0]).decompose_singular_perm().unwrap();
        assert_eq!(alpha, Transformation::singular(3, 2, 0).unwrap());
        assert_eq!(pi, Transformation::transposition(3, 0, 1).unwrap());
        // independent pointwise check
        for i in 0..3 {
            assert_eq!(alpha.apply(pi.apply(i)), [1, 0, 0][i]);
        }

        assert_eq!(
            t(&[1, 1, 1]).decompose_singular_perm(),
            Err(Error::WrongRank {
                rank: 1,
                expected: 2
            })
        );
    }

    #[test]
    fn notation() {
        assert_eq!(t(&[1, 0, 2]).to_string(), "(0,1)");
        assert_eq!(t(&[1, 2, 0]).to_string(), "(0,1,2)");
        assert_eq!(t(&[0, 1, 0]).to_string(), "(2->0)");
        assert_eq!(t(&[1, 1, 1]).to_string(), "(Q->1)");
        assert_eq!(t(&[0, 1, 2]).to_string(), "[0 1 2]");
        assert_eq!(t(&[1, 0, 3, 2]).to_string(), "[1 0 3 2]");
        assert_eq!(t(&[2, 2, 0]).to_string(), "[2 2 0]");
    }
}
