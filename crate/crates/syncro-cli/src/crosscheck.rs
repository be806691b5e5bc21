//! Seeded random corpora re-checking the optimized analyses against the
//! brute-force oracle and the structural equivalences against subset-graph
//! search. Failures are results, not errors; the first counterexample is
//! reported as a parseable document.

use crate::document::AutomatonDocument;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use syncro::oracle::{
    corpus_seed, oracle_completely_reachable, oracle_state_complexity,
    oracle_two_sets_distinguishable, random_automaton, random_cyclic_defect, ORACLE_MAX,
};
use syncro::power::{
    all_two_sets_distinguishable, is_completely_reachable, level_reachable, syn_state_complexity,
    DEFAULT_CAP,
};
use syncro::structure::{binary_structure, find_cyclic_word, near_full_reachability};
use syncro::SemiAutomaton;

#[derive(Clone, Debug)]
pub struct CrosscheckOptions {
    pub samples: usize,
    pub seed: u64,
    pub nmax: usize,
}

#[derive(Debug, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    /// Samples the suite's precondition accepted.
    pub checked: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_counterexample: Option<AutomatonDocument>,
}

#[derive(Debug, Serialize)]
pub struct CrosscheckSummary {
    pub seed: u64,
    pub nmax: usize,
    pub samples: usize,
    pub suites: Vec<SuiteResult>,
    pub passed: bool,
}

struct Suite {
    name: &'static str,
    checked: usize,
    failures: usize,
    first: Option<SemiAutomaton>,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite {
            name,
            checked: 0,
            failures: 0,
            first: None,
        }
    }

    /// Records one sample; `verdict` is None when the precondition rejects
    /// the sample, otherwise whether the invariant held.
    fn record(&mut self, a: &SemiAutomaton, verdict: Option<bool>) {
        let Some(ok) = verdict else { return };
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(a.clone());
            }
        }
    }

    fn result(self) -> SuiteResult {
        SuiteResult {
            name: self.name,
            checked: self.checked,
            failures: self.failures,
            first_counterexample: self.first.map(|a| {
                AutomatonDocument::from_automaton(&a, Some(format!("{} counterexample", self.name)))
            }),
        }
    }
}

fn sample(
    rng: &mut ChaCha8Rng,
    n_min: usize,
    nmax: usize,
    k_max: usize,
    i: usize,
) -> SemiAutomaton {
    let n = rng.random_range(n_min..=nmax);
    if i % 2 == 1 && n >= 2 {
        random_cyclic_defect(n, rng)
    } else {
        let k = rng.random_range(1..=k_max);
        random_automaton(n, k, rng)
    }
}

pub fn run(opts: &CrosscheckOptions) -> Result<CrosscheckSummary, String> {
    if opts.nmax > ORACLE_MAX {
        return Err(format!(
            "--nmax {} exceeds the oracle cap of {ORACLE_MAX} states",
            opts.nmax
        ));
    }

    let mut agreement = Suite::new("oracle-agreement");
    if opts.nmax >= 2 {
        let mut rng = ChaCha8Rng::seed_from_u64(corpus_seed(opts.seed, 1));
        for i in 0..opts.samples {
            let a = sample(&mut rng, 2, opts.nmax, 3, i);
            let ok = syn_state_complexity(&a, DEFAULT_CAP).unwrap()
                == oracle_state_complexity(&a).unwrap()
                && is_completely_reachable(&a, DEFAULT_CAP).unwrap().ok
                    == oracle_completely_reachable(&a).unwrap()
                && all_two_sets_distinguishable(&a, DEFAULT_CAP).unwrap().ok
                    == oracle_two_sets_distinguishable(&a).unwrap();
            agreement.record(&a, Some(ok));
        }
    }

    // Under complete reachability, maximal complexity forces all
    // two-element subsets to be pairwise distinguishable. The converse
    // additionally needs a word acting as a single cycle on the states:
    // without one, a pair can share its future with a larger subset
    // containing it, leaving every pair distinguishable while the
    // complexity sits below the ceiling.
    let mut pairs = Suite::new("pair-distinguishability");
    if opts.nmax >= 2 {
        let mut rng = ChaCha8Rng::seed_from_u64(corpus_seed(opts.seed, 2));
        for i in 0..opts.samples {
            let a = sample(&mut rng, 2, opts.nmax, 3, i);
            let verdict = oracle_completely_reachable(&a).unwrap().then(|| {
                let max = (1usize << a.n()) - a.n();
                let maximal = oracle_state_complexity(&a).unwrap() == max;
                let pairs_ok = oracle_two_sets_distinguishable(&a).unwrap();
                if find_cyclic_word(&a, a.n() * a.n()).is_some() {
                    maximal == pairs_ok
                } else {
                    pairs_ok || !maximal
                }
            });
            pairs.record(&a, verdict);
        }
    }

    // For binary automata on more than two states, near-full reachability
    // is equivalent to the cyclic-letter-plus-defect-letter shape.
    let mut shape = Suite::new("binary-shape");
    if opts.nmax >= 3 {
        let mut rng = ChaCha8Rng::seed_from_u64(corpus_seed(opts.seed, 3));
        for i in 0..opts.samples {
            let a = sample(&mut rng, 3, opts.nmax, 2, i);
            let verdict = (a.k() == 2).then(|| {
                binary_structure(&a).unwrap().ok
                    == level_reachable(&a, a.n() - 1, DEFAULT_CAP).unwrap()
            });
            shape.record(&a, verdict);
        }
    }

    // With fewer defect letters than states, the orbit-cover condition is
    // equivalent to reachability of every subset of size n - 1.
    let mut orbit = Suite::new("orbit-cover");
    if opts.nmax >= 2 {
        let mut rng = ChaCha8Rng::seed_from_u64(corpus_seed(opts.seed, 4));
        for i in 0..opts.samples {
            let a = sample(&mut rng, 2, opts.nmax, 3, i);
            let rep = near_full_reachability(&a, DEFAULT_CAP).unwrap();
            orbit.record(
                &a,
                rep.applicable.then_some(rep.structural == rep.reachable),
            );
        }
    }

    let suites: Vec<SuiteResult> = [agreement, pairs, shape, orbit]
        .into_iter()
        .map(Suite::result)
        .collect();
    let passed = suites.iter().all(|s| s.failures == 0);
    Ok(CrosscheckSummary {
        seed: opts.seed,
        nmax: opts.nmax,
        samples: opts.samples,
        suites,
        passed,
    })
}

impl CrosscheckSummary {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("summary serializes");
        out.push('\n');
        out
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "crosscheck: seed {}, nmax {}, {} samples per suite\n",
            self.seed, self.nmax, self.samples
        );
        for s in &self.suites {
            out.push_str(&format!(
                "  {}: {} checked, {} failures\n",
                s.name, s.checked, s.failures
            ));
            if let Some(doc) = &s.first_counterexample {
                out.push_str("  first counterexample:\n");
                out.push_str(&doc.to_json());
            }
        }
        out.push_str(if self.passed {
            "all suites passed\n"
        } else {
            "FAILED\n"
        });
        out
    }
}
