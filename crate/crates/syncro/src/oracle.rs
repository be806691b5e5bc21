//! Brute-force reference implementations and corpus generators.
//!
//! Everything here is deliberately naive and shares no subset machinery with
//! [`power`](crate::power): subsets are sorted state lists, reachability is a
//! hash-set BFS, and minimization marks pairs one at a time until nothing
//! changes. The point is an independent answer for the optimized code to be
//! checked against, so clarity beats speed and the state count is capped at
//! [`ORACLE_MAX`].

use crate::automaton::SemiAutomaton;
use crate::error::Error;
use rand::seq::SliceRandom;
use rand::Rng;
use std::collections::{HashMap, HashSet, VecDeque};

/// Largest state count the brute-force routines accept.
pub const ORACLE_MAX: usize = 12;

fn check_cap(a: &SemiAutomaton) -> Result<(), Error> {
    if a.n() > ORACLE_MAX {
        return Err(Error::OracleCap {
            n: a.n(),
            limit: ORACLE_MAX,
        });
    }
    Ok(())
}

fn subset_image(a: &SemiAutomaton, s: &[usize], letter: usize) -> Vec<usize> {
    let mut out: Vec<usize> = s.iter().map(|&q| a.step(q, letter)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Subsets reachable from the full state set, in discovery order, with the
/// successor index per letter.
fn reachable_subsets(a: &SemiAutomaton) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let start: Vec<usize> = (0..a.n()).collect();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    index.insert(start.clone(), 0);
    let mut subsets = vec![start];
    let mut succ: Vec<Vec<usize>> = Vec::new();
    let mut head = 0;
    while head < subsets.len() {
        let cur = subsets[head].clone();
        let mut row = Vec::with_capacity(a.k());
        for letter in 0..a.k() {
            let img = subset_image(a, &cur, letter);
            let next = index.len();
            let id = *index.entry(img.clone()).or_insert(next);
            if id == next {
                subsets.push(img);
            }
            row.push(id);
        }
        succ.push(row);
        head += 1;
    }
    (subsets, succ)
}

/// Size of the minimal complete acceptor for the automaton's synchronizing
/// words, computed by explicit pair marking over the reachable subsets.
pub fn oracle_state_complexity(a: &SemiAutomaton) -> Result<usize, Error> {
    check_cap(a)?;
    let (subsets, succ) = reachable_subsets(a);
    let m = subsets.len();
    let accepting: Vec<bool> = subsets.iter().map(|s| s.len() == 1).collect();

    let mut distinct = vec![false; m * m];
    for i in 0..m {
        for j in 0..m {
            if accepting[i] != accepting[j] {
                distinct[i * m + j] = true;
            }
        }
    }
    loop {
        let mut changed = false;
        for i in 0..m {
            for j in 0..m {
                if distinct[i * m + j] {
                    continue;
                }
                for letter in 0..a.k() {
                    if distinct[succ[i][letter] * m + succ[j][letter]] {
                        distinct[i * m + j] = true;
                        changed = true;
                        break;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }

    let mut class = vec![usize::MAX; m];
    let mut count = 0;
    for i in 0..m {
        if class[i] != usize::MAX {
            continue;
        }
        class[i] = count;
        for j in i + 1..m {
            if !distinct[i * m + j] {
                class[j] = count;
            }
        }
        count += 1;
    }
    Ok(count)
}

/// Whether every nonempty subset of states is the image of the full set
/// under some word.
pub fn oracle_completely_reachable(a: &SemiAutomaton) -> Result<bool, Error> {
    check_cap(a)?;
    let (subsets, _) = reachable_subsets(a);
    let mut total: usize = 1;
    for _ in 0..a.n() {
        total *= 2;
    }
    Ok(subsets.len() == total - 1)
}

fn pair_separable(a: &SemiAutomaton, s: &[usize], t: &[usize]) -> bool {
    let start = (s.to_vec(), t.to_vec());
    let mut seen: HashSet<(Vec<usize>, Vec<usize>)> = HashSet::new();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some((u, v)) = queue.pop_front() {
        if (u.len() == 1) != (v.len() == 1) {
            return true;
        }
        for letter in 0..a.k() {
            let next = (subset_image(a, &u, letter), subset_image(a, &v, letter));
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    false
}

/// Whether every two distinct two-element subsets can be told apart by some
/// word that shrinks exactly one of them to a single state.
pub fn oracle_two_sets_distinguishable(a: &SemiAutomaton) -> Result<bool, Error> {
    check_cap(a)?;
    let n = a.n();
    let mut pairs: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push(vec![i, j]);
        }
    }
    for x in 0..pairs.len() {
        for y in x + 1..pairs.len() {
            if !pair_separable(a, &pairs[x], &pairs[y]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Uniformly random transition table.
pub fn random_automaton(n: usize, k: usize, rng: &mut impl Rng) -> SemiAutomaton {
    let delta = (0..n)
        .map(|_| (0..k).map(|_| rng.random_range(0..n)).collect())
        .collect();
    SemiAutomaton::new(n, k, delta).expect("generated table is valid")
}

/// Random binary automaton in the regime the structural criteria target:
/// letter `a` is a uniformly random map of rank `n - 1` and letter `b` a
/// uniformly random full cycle.
pub fn random_cyclic_defect(n: usize, rng: &mut impl Rng) -> SemiAutomaton {
    assert!(n >= 2, "a rank n-1 letter needs at least 2 states");
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut cycle = vec![0; n];
    for i in 0..n {
        cycle[order[i]] = order[(i + 1) % n];
    }

    let mut defect: Vec<usize> = (0..n).collect();
    defect.shuffle(rng);
    let u = rng.random_range(0..n);
    let v = (u + rng.random_range(1..n)) % n;
    defect[u] = defect[v];

    let delta = (0..n).map(|q| vec![defect[q], cycle[q]]).collect();
    SemiAutomaton::new(n, 2, delta).expect("generated table is valid")
}

/// Seed for sample `i` of a corpus run that starts from `base`.
pub fn corpus_seed(base: u64, i: u64) -> u64 {
    base ^ i.wrapping_mul(0x9E37_79B9_7F4A_7C15)
}
