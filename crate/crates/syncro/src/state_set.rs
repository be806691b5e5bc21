use std::fmt;

/// A set of states of an `n`-state automaton, stored as a bit vector.
///
/// Every set remembers the state count `n` it refers to. Mixing sets of
/// different sizes is a programming error and panics; fallible variants are
/// on [`SemiAutomaton`](crate::SemiAutomaton) where user input can flow in.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StateSet {
    n: usize,
    bits: Vec<u64>,
}

impl StateSet {
    pub fn empty(n: usize) -> Self {
        StateSet {
            n,
            bits: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = StateSet::empty(n);
        for block in 0..s.bits.len() {
            s.bits[block] = !0;
        }
        s.trim();
        s
    }

    pub fn singleton(n: usize, q: usize) -> Self {
        let mut s = StateSet::empty(n);
        s.insert(q);
        s
    }

    pub fn from_states(n: usize, states: &[usize]) -> Self {
        let mut s = StateSet::empty(n);
        for &q in states {
            s.insert(q);
        }
        s
    }

    /// Builds a set over `n <= 64` states from its integer encoding
    /// (bit `q` set means state `q` is in the set).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 64, "mask encoding only covers up to 64 states");
        assert!(n == 64 || mask >> n == 0, "mask has bits outside 0..{n}");
        let mut s = StateSet::empty(n);
        if !s.bits.is_empty() {
            s.bits[0] = mask;
        }
        s
    }

    /// The integer encoding of a set over `n <= 64` states.
    pub fn mask(&self) -> u64 {
        assert!(self.n <= 64, "mask encoding only covers up to 64 states");
        self.bits.first().copied().unwrap_or(0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&b| b == 0)
    }

    pub fn contains(&self, q: usize) -> bool {
        assert!(q < self.n, "state {q} outside 0..{}", self.n);
        self.bits[q / 64] >> (q % 64) & 1 == 1
    }

    pub fn insert(&mut self, q: usize) {
        assert!(q < self.n, "state {q} outside 0..{}", self.n);
        self.bits[q / 64] |= 1 << (q % 64);
    }

    pub fn remove(&mut self, q: usize) {
        assert!(q < self.n, "state {q} outside 0..{}", self.n);
        self.bits[q / 64] &= !(1 << (q % 64));
    }

    pub fn is_subset_of(&self, other: &StateSet) -> bool {
        assert_eq!(self.n, other.n);
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    /// States in the set, ascending.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(block, &b)| {
            (0..64)
                .filter(move |i| b >> i & 1 == 1)
                .map(move |i| block * 64 + i)
        })
    }

    pub fn states(&self) -> Vec<usize> {
        self.iter().collect()
    }

    // Clears bits at positions >= n so Eq and Hash see a canonical form.
    fn trim(&mut self) {
        let spare = self.bits.len() * 64 - self.n;
        if spare > 0 {
            if let Some(last) = self.bits.last_mut() {
                *last &= !0 >> spare;
            }
        }
    }
}

impl fmt::Display for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, q) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{q}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for StateSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        let mut s = StateSet::empty(5);
        assert!(s.is_empty());
        s.insert(0);
        s.insert(3);
        assert_eq!(s.len(), 2);
        assert!(s.contains(3));
        assert!(!s.contains(1));
        assert_eq!(s.states(), vec![0, 3]);
        s.remove(3);
        assert_eq!(s.states(), vec![0]);
    }

    #[test]
    fn full_and_display() {
        let s = StateSet::full(3);
        assert_eq!(s.len(), 3);
        assert_eq!(s.to_string(), "{0,1,2}");
        assert_eq!(StateSet::empty(3).to_string(), "{}");
    }

    #[test]
    fn full_equals_from_states_across_blocks() {
        let n = 130;
        let all: Vec<usize> = (0..n).collect();
        assert_eq!(StateSet::full(n), StateSet::from_states(n, &all));
        assert_eq!(StateSet::full(n).len(), n);
    }

    #[test]
    fn mask_round_trip() {
        let s = StateSet::from_mask(4, 0b1010);
        assert_eq!(s.states(), vec![1, 3]);
        assert_eq!(s.mask(), 0b1010);
        assert_eq!(StateSet::from_states(4, &[1, 3]), s);
    }

    #[test]
    fn subset() {
        let a = StateSet::from_states(4, &[1, 3]);
        let b = StateSet::from_states(4, &[0, 1, 3]);
        assert!(a.is_subset_of(&b));
        assert!(!b.is_subset_of(&a));
    }
}
