//! The subset graph (power automaton) and everything computed on it:
//! shortest reset words, complete reachability, subset distinguishability,
//! and the state complexity of the set of synchronizing words.
//!
//! Nodes are the nonempty subsets of states, encoded as bit masks; the graph
//! has `2^n - 1` of them, so construction refuses state counts above a cap
//! instead of silently truncating. The default cap keeps the graph around a
//! million nodes; [`MAX_CAP`] is a hard limit.

use crate::automaton::{SemiAutomaton, Word};
use crate::error::Error;
use crate::state_set::StateSet;
use crate::util::binomial;
use std::collections::HashMap;

/// Default bound on the state count for subset-graph construction.
pub const DEFAULT_CAP: usize = 20;
/// Hard upper limit for the cap itself.
pub const MAX_CAP: usize = 24;

const UNSET: u32 = u32::MAX;

/// Which part of the subset graph to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum Scope {
    /// Only subsets reachable from the full state set.
    Reachable,
    /// All `2^n - 1` nonempty subsets.
    Full,
}

fn check_cap(n: usize, cap: usize) -> Result<(), Error> {
    if cap > MAX_CAP {
        return Err(Error::CapTooLarge {
            cap,
            limit: MAX_CAP,
        });
    }
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(())
}

// Image computation on masks, one table lookup per 8 states per letter.
struct LetterTables {
    chunks: usize,
    table: Vec<u32>,
}

impl LetterTables {
    fn new(a: &SemiAutomaton) -> Self {
        let (n, k) = (a.n(), a.k());
        let chunks = n.div_ceil(8);
        let mut table = vec![0u32; k * chunks * 256];
        for letter in 0..k {
            for chunk in 0..chunks {
                let base = (letter * chunks + chunk) * 256;
                for byte in 0..256usize {
                    let mut img = 0u32;
                    for bit in 0..8 {
                        let state = chunk * 8 + bit;
                        if state < n && byte >> bit & 1 == 1 {
                            img |= 1 << a.step(state, letter);
                        }
                    }
                    table[base + byte] = img;
                }
            }
        }
        LetterTables { chunks, table }
    }

    fn image(&self, mask: u32, letter: usize) -> u32 {
        let mut img = 0u32;
        for chunk in 0..self.chunks {
            let byte = (mask >> (chunk * 8)) as usize & 0xFF;
            img |= self.table[(letter * self.chunks + chunk) * 256 + byte];
        }
        img
    }
}

/// The subset graph of an automaton.
pub struct PowerAutomaton {
    n: usize,
    k: usize,
    scope: Scope,
    /// Subset mask per node, in node order.
    nodes: Vec<u32>,
    /// Node id per mask (`UNSET` where absent); length `2^n`.
    index: Vec<u32>,
    /// `succ[node * k + letter]` is the successor node id.
    succ: Vec<u32>,
    /// BFS distance from the full set (`UNSET` where unreachable).
    depth: Vec<u32>,
    start: u32,
}

impl PowerAutomaton {
    pub fn build(a: &SemiAutomaton, scope: Scope, cap: usize) -> Result<Self, Error> {
        check_cap(a.n(), cap)?;
        let (n, k) = (a.n(), a.k());
        let tables = LetterTables::new(a);
        let full: u32 = (1u32 << n) - 1;
        let mut index = vec![UNSET; 1usize << n];

        match scope {
            Scope::Reachable => {
                let mut nodes = vec![full];
                let mut depth = vec![0u32];
                let mut succ: Vec<u32> = Vec::new();
                index[full as usize] = 0;
                let mut head = 0;
                while head < nodes.len() {
                    let mask = nodes[head];
                    for letter in 0..k {
                        let img = tables.image(mask, letter);
                        let mut id = index[img as usize];
                        if id == UNSET {
                            id = nodes.len() as u32;
                            index[img as usize] = id;
                            nodes.push(img);
                            depth.push(depth[head] + 1);
                        }
                        succ.push(id);
                    }
                    head += 1;
                }
                Ok(PowerAutomaton {
                    n,
                    k,
                    scope,
                    nodes,
                    index,
                    succ,
                    depth,
                    start: 0,
                })
            }
            Scope::Full => {
                let count = full as usize;
                let nodes: Vec<u32> = (1..=full).collect();
                for (id, &mask) in nodes.iter().enumerate() {
                    index[mask as usize] = id as u32;
                }
                let mut succ = vec![UNSET; count * k];
                for (id, &mask) in nodes.iter().enumerate() {
                    for letter in 0..k {
                        succ[id * k + letter] = index[tables.image(mask, letter) as usize];
                    }
                }
                let start = index[full as usize];
                let mut depth = vec![UNSET; count];
                depth[start as usize] = 0;
                let mut queue = vec![start];
                let mut head = 0;
                while head < queue.len() {
                    let id = queue[head] as usize;
                    for letter in 0..k {
                        let next = succ[id * k + letter];
                        if depth[next as usize] == UNSET {
                            depth[next as usize] = depth[id] + 1;
                            queue.push(next);
                        }
                    }
                    head += 1;
                }
                Ok(PowerAutomaton {
                    n,
                    k,
                    scope,
                    nodes,
                    index,
                    succ,
                    depth,
                    start,
                })
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn scope(&self) -> Scope {
        self.scope
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Node id of the full state set.
    pub fn start(&self) -> usize {
        self.start as usize
    }

    pub fn node_mask(&self, id: usize) -> u32 {
        self.nodes[id]
    }

    pub fn node_set(&self, id: usize) -> StateSet {
        StateSet::from_mask(self.n, self.nodes[id] as u64)
    }

    pub fn index_of_mask(&self, mask: u32) -> Option<usize> {
        let id = self.index[mask as usize];
        (id != UNSET).then_some(id as usize)
    }

    pub fn successor(&self, id: usize, letter: usize) -> usize {
        self.succ[id * self.k + letter] as usize
    }

    /// BFS distance from the full set, when the node is reachable at all.
    pub fn depth(&self, id: usize) -> Option<usize> {
        (self.depth[id] != UNSET).then_some(self.depth[id] as usize)
    }

    pub fn is_singleton(&self, id: usize) -> bool {
        self.nodes[id].count_ones() == 1
    }

    /// Nerode partition of the subset graph with the singletons accepting:
    /// two nodes fall in the same class exactly when no word shrinks one but
    /// not the other to a single state.
    pub fn distinguishability(&self) -> DistPartition {
        let count = self.node_count();
        let mut class_of: Vec<u32> = (0..count)
            .map(|id| u32::from(!self.is_singleton(id)))
            .collect();
        let mut classes = normalize(&mut class_of);

        loop {
            let mut map: HashMap<Vec<u32>, u32> = HashMap::new();
            let mut next: Vec<u32> = Vec::with_capacity(count);
            let mut sig = Vec::with_capacity(self.k + 1);
            for id in 0..count {
                sig.clear();
                sig.push(class_of[id]);
                for letter in 0..self.k {
                    sig.push(class_of[self.successor(id, letter)]);
                }
                let fresh = map.len() as u32;
                next.push(*map.entry(sig.clone()).or_insert(fresh));
            }
            let split = map.len();
            class_of = next;
            if split == classes {
                break;
            }
            classes = split;
        }

        // Number classes by their smallest member's subset encoding.
        let mut rep = vec![u32::MAX; classes];
        for id in (0..count).rev() {
            rep[class_of[id] as usize] = self.nodes[id];
        }
        let mut order: Vec<usize> = (0..classes).collect();
        order.sort_by_key(|&c| rep[c]);
        let mut rename = vec![0u32; classes];
        for (new_id, &c) in order.iter().enumerate() {
            rename[c] = new_id as u32;
        }
        for c in class_of.iter_mut() {
            *c = rename[*c as usize];
        }
        DistPartition { classes, class_of }
    }
}

fn normalize(class_of: &mut [u32]) -> usize {
    let has_zero = class_of.contains(&0);
    let has_one = class_of.contains(&1);
    if has_zero && has_one {
        return 2;
    }
    for c in class_of.iter_mut() {
        *c = 0;
    }
    1
}

/// Distinguishability classes of subset-graph nodes. Class ids are ordered
/// by the smallest subset encoding occurring in each class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistPartition {
    pub classes: usize,
    pub class_of: Vec<u32>,
}

/// State complexity of the set of synchronizing words: the size of the
/// minimal complete acceptor for it. An automaton with no synchronizing
/// word has complexity 1, and `2^n - n` is the ceiling.
pub fn syn_state_complexity(a: &SemiAutomaton, cap: usize) -> Result<usize, Error> {
    Ok(PowerAutomaton::build(a, Scope::Reachable, cap)?
        .distinguishability()
        .classes)
}

/// A shortest synchronizing word, or `None` when the automaton has none.
/// Among shortest words, ties go to the earliest letters: the breadth-first
/// search discovers subsets in lexicographic word order.
pub fn shortest_reset(a: &SemiAutomaton, cap: usize) -> Result<Option<Word>, Error> {
    check_cap(a.n(), cap)?;
    let (n, k) = (a.n(), a.k());
    let full: u32 = (1u32 << n) - 1;
    if n == 1 {
        return Ok(Some(Word::empty()));
    }
    let tables = LetterTables::new(a);
    let mut index = vec![UNSET; 1usize << n];
    let mut nodes = vec![full];
    let mut parent: Vec<(u32, u32)> = vec![(UNSET, 0)];
    index[full as usize] = 0;
    let mut head = 0;
    while head < nodes.len() {
        let mask = nodes[head];
        for letter in 0..k {
            let img = tables.image(mask, letter);
            if index[img as usize] != UNSET {
                continue;
            }
            index[img as usize] = nodes.len() as u32;
            nodes.push(img);
            parent.push((head as u32, letter as u32));
            if img.count_ones() == 1 {
                let mut letters = Vec::new();
                let mut at = nodes.len() - 1;
                while at != 0 {
                    let (p, l) = parent[at];
                    letters.push(l as usize);
                    at = p as usize;
                }
                letters.reverse();
                return Ok(Some(Word::new(letters)));
            }
        }
        head += 1;
    }
    Ok(None)
}

/// Report from [`is_completely_reachable`].
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ReachabilityReport {
    pub ok: bool,
    /// Number of subsets reachable from the full set.
    pub node_count: usize,
    /// A smallest unreached subset (fewest states, then lowest encoding).
    pub missing: Option<StateSet>,
}

/// Whether every nonempty subset of states is reachable from the full set.
pub fn is_completely_reachable(a: &SemiAutomaton, cap: usize) -> Result<ReachabilityReport, Error> {
    let pa = PowerAutomaton::build(a, Scope::Reachable, cap)?;
    let total = (1usize << a.n()) - 1;
    let node_count = pa.node_count();
    if node_count == total {
        return Ok(ReachabilityReport {
            ok: true,
            node_count,
            missing: None,
        });
    }
    let missing = (1..=total as u32)
        .filter(|&mask| pa.index_of_mask(mask).is_none())
        .min_by_key(|&mask| (mask.count_ones(), mask))
        .map(|mask| StateSet::from_mask(a.n(), mask as u64));
    Ok(ReachabilityReport {
        ok: false,
        node_count,
        missing,
    })
}

/// Whether every subset of exactly `size` states is reachable from the full
/// set.
pub fn level_reachable(a: &SemiAutomaton, size: usize, cap: usize) -> Result<bool, Error> {
    if size == 0 || size > a.n() {
        return Err(Error::SubsetSize { size, n: a.n() });
    }
    let pa = PowerAutomaton::build(a, Scope::Reachable, cap)?;
    let reached = (0..pa.node_count())
        .filter(|&id| pa.node_mask(id).count_ones() as usize == size)
        .count() as u64;
    Ok(reached == binomial(a.n(), size))
}

/// A subset whose shortest reaching word exceeds the claimed bound.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DepthViolation {
    pub set: StateSet,
    pub depth: usize,
    pub bound: usize,
}

/// Report from [`depth_within`].
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DepthBoundReport {
    pub ok: bool,
    pub violation: Option<DepthViolation>,
}

/// Checks that every nonempty subset `S` is reachable within
/// `bound(n, |S|)` steps. The automaton must be completely reachable.
pub fn depth_within(
    a: &SemiAutomaton,
    cap: usize,
    bound: impl Fn(usize, usize) -> usize,
) -> Result<DepthBoundReport, Error> {
    let pa = PowerAutomaton::build(a, Scope::Reachable, cap)?;
    let n = a.n();
    if pa.node_count() != (1usize << n) - 1 {
        return Err(Error::NotCompletelyReachable);
    }
    for mask in 1..=(1u32 << n) - 1 {
        let id = pa.index_of_mask(mask).expect("completely reachable");
        let depth = pa.depth(id).expect("reachable scope");
        let allowed = bound(n, mask.count_ones() as usize);
        if depth > allowed {
            return Ok(DepthBoundReport {
                ok: false,
                violation: Some(DepthViolation {
                    set: StateSet::from_mask(n, mask as u64),
                    depth,
                    bound: allowed,
                }),
            });
        }
    }
    Ok(DepthBoundReport {
        ok: true,
        violation: None,
    })
}

/// Report from [`all_two_sets_distinguishable`].
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TwoSetReport {
    pub ok: bool,
    /// Two distinct two-element subsets no word tells apart.
    pub witness: Option<(StateSet, StateSet)>,
}

/// Whether all two-element subsets are pairwise distinguishable in the full
/// subset graph. Together with complete reachability this pins the state
/// complexity at its ceiling.
pub fn all_two_sets_distinguishable(a: &SemiAutomaton, cap: usize) -> Result<TwoSetReport, Error> {
    let pa = PowerAutomaton::build(a, Scope::Full, cap)?;
    let part = pa.distinguishability();
    let mut first: Vec<u32> = vec![UNSET; part.classes];
    let n = a.n();
    for i in 0..n {
        for j in i + 1..n {
            let mask = (1u32 << i) | (1u32 << j);
            let id = pa.index_of_mask(mask).expect("full scope");
            let class = part.class_of[id] as usize;
            if first[class] == UNSET {
                first[class] = mask;
            } else {
                return Ok(TwoSetReport {
                    ok: false,
                    witness: Some((
                        StateSet::from_mask(n, first[class] as u64),
                        StateSet::from_mask(n, mask as u64),
                    )),
                });
            }
        }
    }
    Ok(TwoSetReport {
        ok: true,
        witness: None,
    })
}
