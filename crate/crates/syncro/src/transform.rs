use crate::error::Error;
use crate::state_set::StateSet;
use std::fmt;

/// A total map from states to states, the action of some word on an automaton.
#[derive(Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct Transformation {
    image: Vec<usize>,
}

/// Summary of a transformation: its rank and what kind of map it is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TransformationProps {
    pub rank: usize,
    pub is_permutation: bool,
    pub is_cyclic: bool,
}

impl Transformation {
    pub fn new(image: Vec<usize>) -> Result<Self, Error> {
        let n = image.len();
        if n == 0 {
            return Err(Error::NoStates);
        }
        for &t in &image {
            if t >= n {
                return Err(Error::State { state: t, n });
            }
        }
        Ok(Transformation { image })
    }

    pub fn identity(n: usize) -> Self {
        Transformation {
            image: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, q: usize) -> usize {
        self.image[q]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply_set(&self, s: &StateSet) -> StateSet {
        assert_eq!(s.n(), self.n());
        let mut out = StateSet::empty(self.n());
        for q in s.iter() {
            out.insert(self.image[q]);
        }
        out
    }

    /// `self` followed by `other`: the action of `uv` when `self` is the
    /// action of `u` and `other` the action of `v`.
    pub fn then(&self, other: &Transformation) -> Transformation {
        self.checked_then(other).expect("state counts must match")
    }

    pub fn checked_then(&self, other: &Transformation) -> Result<Transformation, Error> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Transformation {
            image: self.image.iter().map(|&q| other.image[q]).collect(),
        })
    }

    /// The action repeated `e` times; `e = 0` gives the identity.
    pub fn pow(&self, e: usize) -> Transformation {
        let mut out = Transformation::identity(self.n());
        for _ in 0..e {
            out = out.then(self);
        }
        out
    }

    /// Number of distinct values taken by the map.
    pub fn rank(&self) -> usize {
        let mut hit = vec![false; self.n()];
        let mut count = 0;
        for &t in &self.image {
            if !hit[t] {
                hit[t] = true;
                count += 1;
            }
        }
        count
    }

    pub fn is_permutation(&self) -> bool {
        self.rank() == self.n()
    }

    /// A permutation consisting of a single cycle through all `n` states.
    pub fn is_cyclic(&self) -> bool {
        if !self.is_permutation() {
            return false;
        }
        let mut q = self.image[0];
        let mut steps = 1;
        while q != 0 {
            q = self.image[q];
            steps += 1;
        }
        steps == self.n()
    }

    pub fn props(&self) -> TransformationProps {
        TransformationProps {
            rank: self.rank(),
            is_permutation: self.is_permutation(),
            is_cyclic: self.is_cyclic(),
        }
    }

    /// For a map of rank `n - 1`: the unique state outside the image.
    pub fn excluded_state(&self) -> Option<usize> {
        if self.rank() != self.n().saturating_sub(1) {
            return None;
        }
        let mut hit = vec![false; self.n()];
        for &t in &self.image {
            hit[t] = true;
        }
        hit.iter().position(|h| !h)
    }

    /// For a map of rank `n - 1`: the unique pair `(x, y)` with `x < y`
    /// sent to the same state, together with that common image.
    pub fn merged_pair(&self) -> Option<(usize, usize, usize)> {
        if self.rank() != self.n().saturating_sub(1) {
            return None;
        }
        let mut seen_from = vec![usize::MAX; self.n()];
        for (q, &t) in self.image.iter().enumerate() {
            if seen_from[t] != usize::MAX {
                return Some((seen_from[t], q, t));
            }
            seen_from[t] = q;
        }
        None
    }
}

impl fmt::Debug for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, t) in self.image.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(image: &[usize]) -> Transformation {
        Transformation::new(image.to_vec()).unwrap()
    }

    #[test]
    fn rank_and_kind() {
        let f = t(&[1, 2, 1, 3]);
        assert_eq!(f.rank(), 3);
        assert!(!f.is_permutation());
        assert!(!f.is_cyclic());

        let id = Transformation::identity(5);
        assert_eq!(id.rank(), 5);
        assert!(id.is_permutation());
        assert!(!id.is_cyclic());

        let rot = t(&[1, 2, 0]);
        assert!(rot.is_cyclic());

        // A single state is one cycle of length one.
        assert!(Transformation::identity(1).is_cyclic());
    }

    #[test]
    fn composition() {
        let a = t(&[1, 2, 1, 3]);
        let aa = a.then(&a);
        assert_eq!(aa.image(), &[2, 1, 2, 3]);
        let id = Transformation::identity(4);
        assert_eq!(id.then(&a), a);
        assert_eq!(a.then(&id), a);
        assert_eq!(
            a.checked_then(&Transformation::identity(3)),
            Err(Error::SizeMismatch { left: 4, right: 3 })
        );
    }

    #[test]
    fn powers() {
        let rot = t(&[1, 2, 3, 0]);
        assert_eq!(rot.pow(0), Transformation::identity(4));
        assert_eq!(rot.pow(2).image(), &[2, 3, 0, 1]);
        assert_eq!(rot.pow(4), Transformation::identity(4));
    }

    #[test]
    fn defect_structure() {
        // Rank n-1 map: 6 is excluded, 0 and 2 merge into 3.
        let a = t(&[3, 2, 3, 4, 5, 1, 0]);
        assert_eq!(a.excluded_state(), Some(6));
        assert_eq!(a.merged_pair(), Some((0, 2, 3)));
        assert_eq!(Transformation::identity(4).excluded_state(), None);
        assert_eq!(t(&[0, 0, 0]).merged_pair(), None);
    }

    #[test]
    fn apply_set() {
        let a = t(&[1, 2, 1, 3]);
        let s = StateSet::from_states(4, &[0, 2]);
        assert_eq!(a.apply_set(&s), StateSet::from_states(4, &[1]));
    }

    #[test]
    fn bad_entries_rejected() {
        assert_eq!(
            Transformation::new(vec![0, 3]),
            Err(Error::State { state: 3, n: 2 })
        );
        assert_eq!(Transformation::new(vec![]), Err(Error::NoStates));
    }
}
