use crate::error::Error;
use crate::state_set::StateSet;
use crate::transform::Transformation;
use std::collections::VecDeque;
use std::fmt;

/// A word over the automaton's alphabet, stored as letter indices.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct Word(Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    /// The letter repeated `count` times.
    pub fn repeated(letter: usize, count: usize) -> Self {
        Word(vec![letter; count])
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, letter: usize) {
        self.0.push(letter);
    }

    /// This word followed by `tail`.
    pub fn concat(&self, tail: &Word) -> Word {
        let mut out = self.0.clone();
        out.extend_from_slice(&tail.0);
        Word(out)
    }
}

impl From<Vec<usize>> for Word {
    fn from(letters: Vec<usize>) -> Self {
        Word(letters)
    }
}

impl From<&[usize]> for Word {
    fn from(letters: &[usize]) -> Self {
        Word(letters.to_vec())
    }
}

impl FromIterator<usize> for Word {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.0)
    }
}

/// A deterministic complete semi-automaton: `n` states, `k` letters, and a
/// total transition table `delta[state][letter]`.
///
/// There is no initial state and no accepting set; those only appear on the
/// derived subset graph in [`power`](crate::power).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SemiAutomaton {
    n: usize,
    k: usize,
    delta: Vec<Vec<usize>>,
    names: Vec<String>,
}

fn default_names(k: usize) -> Vec<String> {
    (0..k)
        .map(|i| {
            if k <= 26 {
                char::from(b'a' + i as u8).to_string()
            } else {
                format!("l{i}")
            }
        })
        .collect()
}

impl SemiAutomaton {
    /// Builds an automaton with default letter names `a`, `b`, `c`, ...
    pub fn new(n: usize, k: usize, delta: Vec<Vec<usize>>) -> Result<Self, Error> {
        Self::with_names(n, k, delta, default_names(k))
    }

    pub fn with_names(
        n: usize,
        k: usize,
        delta: Vec<Vec<usize>>,
        names: Vec<String>,
    ) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::NoStates);
        }
        if k == 0 {
            return Err(Error::NoLetters);
        }
        if delta.len() != n {
            return Err(Error::TableRows {
                got: delta.len(),
                expected: n,
            });
        }
        for (state, row) in delta.iter().enumerate() {
            if row.len() != k {
                return Err(Error::TableColumns {
                    state,
                    got: row.len(),
                    expected: k,
                });
            }
            for (letter, &target) in row.iter().enumerate() {
                if target >= n {
                    return Err(Error::TargetOutOfRange {
                        state,
                        letter,
                        target,
                        n,
                    });
                }
            }
        }
        if names.len() != k {
            return Err(Error::NameCount {
                got: names.len(),
                expected: k,
            });
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || names[..i].contains(name) {
                return Err(Error::BadNames);
            }
        }
        Ok(SemiAutomaton { n, k, delta, names })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn delta(&self) -> &[Vec<usize>] {
        &self.delta
    }

    pub fn letter_names(&self) -> &[String] {
        &self.names
    }

    pub fn letter_name(&self, letter: usize) -> &str {
        &self.names[letter]
    }

    /// One transition step. Indices must be in range; table entries are
    /// validated at construction, so the result always is.
    pub fn step(&self, q: usize, letter: usize) -> usize {
        self.delta[q][letter]
    }

    pub fn check_word(&self, w: &Word) -> Result<(), Error> {
        for &letter in w.letters() {
            if letter >= self.k {
                return Err(Error::Letter { letter, k: self.k });
            }
        }
        Ok(())
    }

    /// The state reached from `q` by reading `w` left to right.
    pub fn apply_state(&self, q: usize, w: &Word) -> Result<usize, Error> {
        if q >= self.n {
            return Err(Error::State {
                state: q,
                n: self.n,
            });
        }
        self.check_word(w)?;
        Ok(w.letters().iter().fold(q, |s, &a| self.delta[s][a]))
    }

    /// The image of a set of states under `w`.
    pub fn apply(&self, s: &StateSet, w: &Word) -> Result<StateSet, Error> {
        if s.n() != self.n {
            return Err(Error::SizeMismatch {
                left: s.n(),
                right: self.n,
            });
        }
        self.check_word(w)?;
        let mut cur = s.clone();
        for &a in w.letters() {
            let mut next = StateSet::empty(self.n);
            for q in cur.iter() {
                next.insert(self.delta[q][a]);
            }
            cur = next;
        }
        Ok(cur)
    }

    /// All states that `w` sends into `s`.
    pub fn preimage(&self, s: &StateSet, w: &Word) -> Result<StateSet, Error> {
        if s.n() != self.n {
            return Err(Error::SizeMismatch {
                left: s.n(),
                right: self.n,
            });
        }
        self.check_word(w)?;
        let t = self.transformation(w)?;
        let mut out = StateSet::empty(self.n);
        for q in 0..self.n {
            if s.contains(t.apply(q)) {
                out.insert(q);
            }
        }
        Ok(out)
    }

    /// The transformation induced by a single letter.
    ///
    /// Panics when `letter` is out of range; use [`transformation`] with a
    /// one-letter [`Word`] for validated access.
    ///
    /// [`transformation`]: SemiAutomaton::transformation
    pub fn letter_transformation(&self, letter: usize) -> Transformation {
        assert!(
            letter < self.k,
            "letter {letter} out of range for {}",
            self.k
        );
        Transformation::new((0..self.n).map(|q| self.delta[q][letter]).collect())
            .expect("rows validated at construction")
    }

    /// The transformation induced by `w`. The empty word gives the identity,
    /// and the map is a monoid homomorphism: `t(uv) = t(u).then(t(v))`.
    pub fn transformation(&self, w: &Word) -> Result<Transformation, Error> {
        self.check_word(w)?;
        let mut image: Vec<usize> = (0..self.n).collect();
        for &a in w.letters() {
            for q in image.iter_mut() {
                *q = self.delta[*q][a];
            }
        }
        Transformation::new(image)
    }

    /// Whether every state can reach every other state in the transition
    /// digraph (edges `q -> delta[q][a]` over all letters).
    pub fn is_strongly_connected(&self) -> bool {
        self.reaches_all_forward() && self.reaches_all_backward()
    }

    fn reaches_all_forward(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(q) = queue.pop_front() {
            for a in 0..self.k {
                let t = self.delta[q][a];
                if !seen[t] {
                    seen[t] = true;
                    count += 1;
                    queue.push_back(t);
                }
            }
        }
        count == self.n
    }

    fn reaches_all_backward(&self) -> bool {
        let mut rev: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for q in 0..self.n {
            for a in 0..self.k {
                rev[self.delta[q][a]].push(q);
            }
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(q) = queue.pop_front() {
            for &p in &rev[q] {
                if !seen[p] {
                    seen[p] = true;
                    count += 1;
                    queue.push_back(p);
                }
            }
        }
        count == self.n
    }

    /// Renders a word with this automaton's letter names; the empty word
    /// renders as `ε`.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "ε".to_string();
        }
        w.letters()
            .iter()
            .map(|&a| self.names[a].as_str())
            .collect()
    }
}
