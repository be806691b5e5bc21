//! Structural analyses that avoid the subset graph where possible: letter
//! rank profiles, orbits of the permutation letters, alphabet shape tests,
//! circularity, and a certificate that implies complete reachability
//! without building the subset graph.

use crate::automaton::{SemiAutomaton, Word};
use crate::error::Error;
use crate::power::level_reachable;
use crate::transform::Transformation;
use crate::util::gcd;
use std::collections::{HashMap, HashSet};

/// A letter of rank `n - 1`: it misses exactly one state and collapses
/// exactly one pair.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DefectLetter {
    pub letter: usize,
    /// The state outside the letter's image.
    pub excluded: usize,
    /// The two states sharing an image, in increasing order.
    pub merged: (usize, usize),
    /// The common image of the merged pair.
    pub target: usize,
}

/// Per-letter rank data for an automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct RankProfile {
    /// Rank of each letter, indexed by letter.
    pub ranks: Vec<usize>,
    /// Letters of full rank.
    pub permutational: Vec<usize>,
    /// Letters of rank `n - 1` with their excluded state and merged pair.
    pub defect_one: Vec<DefectLetter>,
}

pub fn rank_profile(a: &SemiAutomaton) -> RankProfile {
    let n = a.n();
    let mut ranks = Vec::with_capacity(a.k());
    let mut permutational = Vec::new();
    let mut defect_one = Vec::new();
    for letter in 0..a.k() {
        let t = a.letter_transformation(letter);
        let rank = t.rank();
        if rank == n {
            permutational.push(letter);
        } else if rank + 1 == n {
            let (x, y, target) = t.merged_pair().expect("rank n-1 collapses one pair");
            defect_one.push(DefectLetter {
                letter,
                excluded: t.excluded_state().expect("rank n-1 misses one state"),
                merged: (x, y),
                target,
            });
        }
        ranks.push(rank);
    }
    RankProfile {
        ranks,
        permutational,
        defect_one,
    }
}

/// Orbits of the group generated by the full-rank letters, plus the
/// covering condition they induce on the excluded states.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct OrbitReport {
    /// Partition of the states, each orbit sorted, ordered by least member.
    pub orbits: Vec<Vec<usize>>,
    /// Orbit index of each state.
    pub orbit_of: Vec<usize>,
    /// Whether every state shares an orbit with the excluded state of some
    /// rank `n - 1` letter.
    pub every_state_covered: bool,
    /// Whether some full-rank letter is not the identity.
    pub group_nontrivial: bool,
    /// Whether the group has a single orbit.
    pub group_transitive: bool,
    /// Whether the near-full reachability equivalence applies: fewer rank
    /// `n - 1` letters than states.
    pub applicable: bool,
}

pub fn orbit_analysis(a: &SemiAutomaton) -> OrbitReport {
    let n = a.n();
    let profile = rank_profile(a);

    // Union-find over edges q -> delta(q, letter) for full-rank letters.
    // Inverses add nothing: the orbit partition of a finite group is the
    // connected components of its generator graph.
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut group_nontrivial = false;
    for &letter in &profile.permutational {
        for q in 0..n {
            let image = a.step(q, letter);
            if image != q {
                group_nontrivial = true;
            }
            let (rq, ri) = (find(&mut parent, q), find(&mut parent, image));
            if rq != ri {
                parent[rq.max(ri)] = rq.min(ri);
            }
        }
    }

    let mut roots: HashMap<usize, usize> = HashMap::new();
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut orbit_of = Vec::with_capacity(n);
    for q in 0..n {
        let root = find(&mut parent, q);
        let id = *roots.entry(root).or_insert_with(|| {
            orbits.push(Vec::new());
            orbits.len() - 1
        });
        orbits[id].push(q);
        orbit_of.push(id);
    }

    let mut covered = vec![false; orbits.len()];
    for d in &profile.defect_one {
        covered[orbit_of[d.excluded]] = true;
    }
    OrbitReport {
        every_state_covered: covered.iter().all(|&c| c),
        group_nontrivial,
        group_transitive: orbits.len() == 1,
        applicable: profile.defect_one.len() < n,
        orbits,
        orbit_of,
    }
}

/// Both sides of the near-full reachability equivalence: when there are
/// fewer rank `n - 1` letters than states, every `(n-1)`-subset is
/// reachable exactly when some rank `n - 1` letter exists and the group of
/// full-rank letters is nontrivial with every state in the orbit of an
/// excluded state.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct NearFullReport {
    pub applicable: bool,
    /// The orbit-covering side.
    pub structural: bool,
    /// The exact side: every `(n-1)`-subset reachable from the full set.
    pub reachable: bool,
}

pub fn near_full_reachability(a: &SemiAutomaton, cap: usize) -> Result<NearFullReport, Error> {
    let n = a.n();
    if n == 1 {
        // No (n-1)-subsets to reach and no letter can have rank 0.
        return Ok(NearFullReport {
            applicable: true,
            structural: true,
            reachable: true,
        });
    }
    let report = orbit_analysis(a);
    let has_defect = !rank_profile(a).defect_one.is_empty();
    let structural = has_defect && report.group_nontrivial && report.every_state_covered;
    let reachable = level_reachable(a, n - 1, cap)?;
    if report.applicable {
        debug_assert_eq!(structural, reachable);
    }
    Ok(NearFullReport {
        applicable: report.applicable,
        structural,
        reachable,
    })
}

/// Shape test for binary automata with more than two states: all
/// `(n-1)`-subsets are reachable exactly when one letter is a full cycle
/// and the other has rank `n - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct BinaryStructure {
    /// False when `n <= 2`; two states admit completely reachable automata
    /// without the shape.
    pub applicable: bool,
    pub ok: bool,
    pub cyclic_letter: Option<usize>,
    pub defect_letter: Option<usize>,
}

pub fn binary_structure(a: &SemiAutomaton) -> Result<BinaryStructure, Error> {
    if a.k() != 2 {
        return Err(Error::NotBinary { k: a.k() });
    }
    if a.n() <= 2 {
        return Ok(BinaryStructure {
            applicable: false,
            ok: false,
            cyclic_letter: None,
            defect_letter: None,
        });
    }
    let n = a.n();
    let props: Vec<_> = (0..2).map(|l| a.letter_transformation(l).props()).collect();
    let cyclic: Vec<usize> = (0..2).filter(|&l| props[l].is_cyclic).collect();
    if let [c] = cyclic[..] {
        let other = 1 - c;
        if props[other].rank + 1 == n {
            return Ok(BinaryStructure {
                applicable: true,
                ok: true,
                cyclic_letter: Some(c),
                defect_letter: Some(other),
            });
        }
    }
    Ok(BinaryStructure {
        applicable: true,
        ok: false,
        cyclic_letter: None,
        defect_letter: None,
    })
}

/// First letter acting as a single cycle on all states, if any.
pub fn circular_letter(a: &SemiAutomaton) -> Option<usize> {
    (0..a.k()).find(|&l| a.letter_transformation(l).is_cyclic())
}

/// Shortest word acting as a single cycle on all states, searched over
/// words of full-rank letters up to `max_len`. Among shortest candidates
/// the search prefers words whose earliest position advanced most recently:
/// it extends known permutations by prepending letters, so for two letters
/// it reports "ba" before "ab".
pub fn find_cyclic_word(a: &SemiAutomaton, max_len: usize) -> Option<Word> {
    let n = a.n();
    let identity = Transformation::identity(n);
    if identity.is_cyclic() {
        return Some(Word::empty());
    }
    let letters: Vec<(usize, Transformation)> = (0..a.k())
        .map(|l| (l, a.letter_transformation(l)))
        .filter(|(_, t)| t.is_permutation())
        .collect();

    let mut seen: HashSet<Transformation> = HashSet::new();
    seen.insert(identity.clone());
    let mut frontier: Vec<(Word, Transformation)> = vec![(Word::empty(), identity)];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (word, t) in &frontier {
            for (l, lt) in &letters {
                let extended = lt.then(t);
                if seen.contains(&extended) {
                    continue;
                }
                let mut letters_vec = Vec::with_capacity(word.len() + 1);
                letters_vec.push(*l);
                letters_vec.extend_from_slice(word.letters());
                let w = Word::new(letters_vec);
                if extended.is_cyclic() {
                    return Some(w);
                }
                seen.insert(extended.clone());
                next.push((w, extended));
            }
        }
        if next.is_empty() {
            return None;
        }
        frontier = next;
    }
    None
}

/// A certificate of complete reachability: a full-cycle letter, a rank
/// `n - 1` letter, and the excluded state sitting a number of cycle steps
/// coprime to `n` before the doubly covered state. When present, every
/// nonempty subset `S` is reachable within `n(n - |S|)` steps.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ReachabilityCert {
    pub defect_letter: usize,
    pub cyclic_letter: usize,
    /// State outside the defect letter's image.
    pub excluded: usize,
    /// The doubly covered state.
    pub target: usize,
    /// Cycle steps from `excluded` to `target`; coprime to `n`.
    pub shift: usize,
}

/// Searches letter pairs for the certificate, smallest defect letter then
/// smallest cyclic letter first.
pub fn reachability_certificate(a: &SemiAutomaton) -> Option<ReachabilityCert> {
    let n = a.n();
    let profile = rank_profile(a);
    let cyclic: Vec<usize> = profile
        .permutational
        .iter()
        .copied()
        .filter(|&l| a.letter_transformation(l).is_cyclic())
        .collect();
    for d in &profile.defect_one {
        for &b in &cyclic {
            let bt = a.letter_transformation(b);
            let mut state = d.excluded;
            for shift in 1..n {
                state = bt.apply(state);
                if state == d.target {
                    if gcd(shift, n) == 1 {
                        return Some(ReachabilityCert {
                            defect_letter: d.letter,
                            cyclic_letter: b,
                            excluded: d.excluded,
                            target: d.target,
                            shift,
                        });
                    }
                    break;
                }
            }
        }
    }
    None
}
