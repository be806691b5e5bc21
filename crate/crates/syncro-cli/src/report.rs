//! Analysis report: every structural claim together with how it was
//! certified. The report is deterministic for a given input and flags,
//! except for the timing block.

use serde::Serialize;
use std::fmt::Write as _;
use std::time::Instant;
use syncro::criteria::{
    verdict, CheckKind, CriterionAttempt, Justification, MaxScStatus, OffsetTrace, ReductionCase,
    VerdictBudget,
};
use syncro::power::{is_completely_reachable, shortest_reset, syn_state_complexity, MAX_CAP};
use syncro::structure::{
    circular_letter, find_cyclic_word, rank_profile, reachability_certificate,
};
use syncro::SemiAutomaton;

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub oracle: bool,
    pub word_budget: Option<usize>,
    pub cap: usize,
}

#[derive(Serialize)]
pub struct Report {
    pub automaton: AutomatonInfo,
    pub rank_profile: RankProfileInfo,
    pub circularity: CircularityInfo,
    pub strongly_connected: bool,
    pub complete_reachability: ReachabilityInfo,
    pub synchronization: SynchronizationInfo,
    pub state_complexity: ComplexityInfo,
    pub criteria: Vec<AttemptInfo>,
    pub verdict: VerdictInfo,
    pub timings: Timings,
}

#[derive(Serialize)]
pub struct AutomatonInfo {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub n: usize,
    pub alphabet: Vec<String>,
}

#[derive(Serialize)]
pub struct RankProfileInfo {
    /// Rank per letter, in letter order.
    pub ranks: Vec<usize>,
    pub permutational_letters: Vec<String>,
    pub defect_letters: Vec<DefectInfo>,
}

#[derive(Serialize)]
pub struct DefectInfo {
    pub letter: String,
    pub excluded: usize,
    pub merged: (usize, usize),
    pub target: usize,
}

/// How the automaton was certified circular (or not, within the budget).
#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CircularityInfo {
    Letter { letter: String },
    Word { word: String },
    NoneWithinBudget { budget: usize },
}

#[derive(Serialize)]
pub struct ReachabilityInfo {
    /// "reachable", "unreachable", or "unknown".
    pub status: &'static str,
    /// "structural" or "exhaustive" when status is decided.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structural: Option<CertInfo>,
    /// Reachable subsets, when the subset graph was built.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub node_count: Option<usize>,
    /// A smallest unreachable subset, when status is "unreachable".
    #[serde(skip_serializing_if = "Option::is_none")]
    pub missing: Option<Vec<usize>>,
}

#[derive(Serialize)]
pub struct CertInfo {
    pub defect_letter: String,
    pub cyclic_letter: String,
    pub excluded: usize,
    pub target: usize,
    pub shift: usize,
}

#[derive(Serialize)]
pub struct SynchronizationInfo {
    /// None when the subset graph exceeds the cap.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub synchronizing: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shortest_reset: Option<ResetInfo>,
}

#[derive(Serialize)]
pub struct ResetInfo {
    pub length: usize,
    pub word: String,
}

#[derive(Serialize)]
pub struct ComplexityInfo {
    /// "exact" when computed, "bound-only" past the cap.
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<u128>,
    /// The ceiling 2^n - n (absent only when it overflows u128).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ceiling: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub is_maximal: Option<bool>,
}

#[derive(Serialize)]
pub struct AttemptInfo {
    pub check: &'static str,
    pub defect: String,
    pub cycle: String,
    pub satisfied: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Serialize)]
pub struct WitnessInfo {
    pub q: usize,
    pub d: usize,
    pub s_offset: usize,
    pub trace: Vec<String>,
}

#[derive(Serialize)]
pub struct VerdictInfo {
    /// "proved", "refuted", or "unknown".
    pub max_state_complexity: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sc_claimed: Option<u128>,
    pub justification: Vec<String>,
    pub oracle_used: bool,
}

#[derive(Serialize)]
pub struct Timings {
    pub reachability_ms: f64,
    pub complexity_ms: f64,
    pub verdict_ms: f64,
    pub total_ms: f64,
}

fn ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1000.0
}

fn trace_line(entry: &OffsetTrace) -> String {
    match entry.case {
        ReductionCase::Reduce => format!("m={}: reduce", entry.m),
        ReductionCase::JumpForward { r } => format!("m={}: jump forward r={r}", entry.m),
        ReductionCase::JumpBack { r } => format!("m={}: jump back r={r}", entry.m),
    }
}

fn attempt_info(a: &SemiAutomaton, attempt: &CriterionAttempt) -> AttemptInfo {
    AttemptInfo {
        check: match attempt.check {
            CheckKind::DistanceReduction => "distance-reduction",
            CheckKind::HalfCycle => "half-cycle",
        },
        defect: a.format_word(&attempt.defect),
        cycle: a.format_word(&attempt.cycle),
        satisfied: attempt.result.satisfied,
        witness: attempt.result.witness.as_ref().map(|w| WitnessInfo {
            q: w.q,
            d: w.d,
            s_offset: w.s_offset,
            trace: w.trace.iter().map(trace_line).collect(),
        }),
        reason: attempt.result.reason.as_ref().map(|r| r.to_string()),
    }
}

fn justification_line(a: &SemiAutomaton, j: &Justification) -> String {
    match j {
        Justification::StructuralReachability { cert } => format!(
            "completely reachable: structural certificate (defect letter {}, cyclic letter {}, \
             excluded state {} reaches target {} with shift {})",
            a.letter_name(cert.defect_letter),
            a.letter_name(cert.cyclic_letter),
            cert.excluded,
            cert.target,
            cert.shift
        ),
        Justification::ExhaustiveReachability { node_count } => {
            format!(
                "completely reachable: exhaustive subset search visited all {node_count} subsets"
            )
        }
        Justification::ReachabilityFailed { missing } => match missing {
            Some(s) => format!("not completely reachable: subset {s} is unreachable"),
            None => "not completely reachable".to_string(),
        },
        Justification::ReachabilityUnknown { n, cap } => {
            format!("reachability undecided: {n} states exceed the subset-graph cap of {cap}")
        }
        Justification::DistanceReduction {
            defect,
            cycle,
            witness,
        } => format!(
            "distance-reduction criterion fired for defect word {} and cycle word {} \
             (witness q={}, d={})",
            a.format_word(defect),
            a.format_word(cycle),
            witness.q,
            witness.d
        ),
        Justification::HalfCycle {
            defect,
            cycle,
            witness,
        } => format!(
            "half-cycle criterion fired for defect word {} and cycle word {} (witness q={})",
            a.format_word(defect),
            a.format_word(cycle),
            witness.q
        ),
        Justification::CriteriaExhausted { attempts } => {
            format!("all {attempts} criterion attempts failed; the criteria are not necessary, so nothing is refuted")
        }
        Justification::ExhaustivePairCheck { ok, witness } => match (ok, witness) {
            (true, _) => "all two-element subsets are pairwise distinguishable (exhaustive check)"
                .to_string(),
            (false, Some((s, t))) => {
                format!("indistinguishable two-element subsets found: {s} and {t}")
            }
            (false, None) => "an indistinguishable pair of two-element subsets exists".to_string(),
        },
        Justification::ExactComplexity { sc } => {
            format!("exact state complexity computed: {sc}")
        }
        Justification::CombinedMaximality => {
            "complete reachability plus pair distinguishability force the ceiling 2^n - n"
                .to_string()
        }
    }
}

pub fn analyze(a: &SemiAutomaton, name: Option<String>, opts: &AnalyzeOptions) -> Report {
    let total = Instant::now();
    let n = a.n();
    let fits = n <= opts.cap && opts.cap <= MAX_CAP;

    let profile = rank_profile(a);
    let rank_info = RankProfileInfo {
        ranks: profile.ranks.clone(),
        permutational_letters: profile
            .permutational
            .iter()
            .map(|&l| a.letter_name(l).to_string())
            .collect(),
        defect_letters: profile
            .defect_one
            .iter()
            .map(|d| DefectInfo {
                letter: a.letter_name(d.letter).to_string(),
                excluded: d.excluded,
                merged: d.merged,
                target: d.target,
            })
            .collect(),
    };

    let budget = n * n;
    let circularity = match circular_letter(a) {
        Some(l) => CircularityInfo::Letter {
            letter: a.letter_name(l).to_string(),
        },
        None => match find_cyclic_word(a, budget) {
            Some(w) => CircularityInfo::Word {
                word: a.format_word(&w),
            },
            None => CircularityInfo::NoneWithinBudget { budget },
        },
    };

    let reach_start = Instant::now();
    let cert = reachability_certificate(a);
    let exact_reach = if fits {
        Some(is_completely_reachable(a, opts.cap).expect("cap checked"))
    } else {
        None
    };
    let complete_reachability = match (&cert, &exact_reach) {
        (Some(c), _) => ReachabilityInfo {
            status: "reachable",
            certificate: Some("structural"),
            structural: Some(CertInfo {
                defect_letter: a.letter_name(c.defect_letter).to_string(),
                cyclic_letter: a.letter_name(c.cyclic_letter).to_string(),
                excluded: c.excluded,
                target: c.target,
                shift: c.shift,
            }),
            node_count: exact_reach.as_ref().map(|r| r.node_count),
            missing: None,
        },
        (None, Some(r)) => ReachabilityInfo {
            status: if r.ok { "reachable" } else { "unreachable" },
            certificate: Some("exhaustive"),
            structural: None,
            node_count: Some(r.node_count),
            missing: r.missing.as_ref().map(|s| s.states()),
        },
        (None, None) => ReachabilityInfo {
            status: "unknown",
            certificate: None,
            structural: None,
            node_count: None,
            missing: None,
        },
    };
    let reachability_ms = ms(reach_start);

    let sc_start = Instant::now();
    let ceiling = (n < 128).then(|| (1u128 << n) - n as u128);
    let (synchronization, state_complexity) = if fits {
        let reset = shortest_reset(a, opts.cap).expect("cap checked");
        let sc = syn_state_complexity(a, opts.cap).expect("cap checked") as u128;
        (
            SynchronizationInfo {
                synchronizing: Some(reset.is_some()),
                shortest_reset: reset.map(|w| ResetInfo {
                    length: w.len(),
                    word: a.format_word(&w),
                }),
            },
            ComplexityInfo {
                kind: "exact",
                value: Some(sc),
                ceiling,
                is_maximal: ceiling.map(|c| sc == c),
            },
        )
    } else {
        (
            SynchronizationInfo {
                synchronizing: None,
                shortest_reset: None,
            },
            ComplexityInfo {
                kind: "bound-only",
                value: None,
                ceiling,
                is_maximal: None,
            },
        )
    };
    let complexity_ms = ms(sc_start);

    let verdict_start = Instant::now();
    let v = verdict(
        a,
        &VerdictBudget {
            word_len: opts.word_budget,
            use_oracle: opts.oracle,
            cap: opts.cap,
        },
    );
    let verdict_ms = ms(verdict_start);

    let criteria = v.attempts.iter().map(|at| attempt_info(a, at)).collect();
    let verdict_info = VerdictInfo {
        max_state_complexity: match v.max_sc {
            MaxScStatus::Proved => "proved",
            MaxScStatus::Refuted => "refuted",
            MaxScStatus::Unknown => "unknown",
        },
        sc_claimed: v.sc_claimed,
        justification: v
            .justification
            .iter()
            .map(|j| justification_line(a, j))
            .collect(),
        oracle_used: v.oracle_used,
    };

    Report {
        automaton: AutomatonInfo {
            name,
            n,
            alphabet: a.letter_names().to_vec(),
        },
        rank_profile: rank_info,
        circularity,
        strongly_connected: a.is_strongly_connected(),
        complete_reachability,
        synchronization,
        state_complexity,
        criteria,
        verdict: verdict_info,
        timings: Timings {
            reachability_ms,
            complexity_ms,
            verdict_ms,
            total_ms: ms(total),
        },
    }
}

impl Report {
    pub fn verdict_unknown(&self) -> bool {
        self.verdict.max_state_complexity == "unknown"
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let a = &self.automaton;
        let name = a.name.as_deref().unwrap_or("automaton");
        let _ = writeln!(
            out,
            "{name}: {} states, alphabet {{{}}}",
            a.n,
            a.alphabet.join(", ")
        );

        let rp = &self.rank_profile;
        let _ = writeln!(out, "letter ranks: {:?}", rp.ranks);
        if !rp.permutational_letters.is_empty() {
            let _ = writeln!(
                out,
                "permutational letters: {}",
                rp.permutational_letters.join(", ")
            );
        }
        for d in &rp.defect_letters {
            let _ = writeln!(
                out,
                "defect letter {}: excludes {}, merges {} and {} into {}",
                d.letter, d.excluded, d.merged.0, d.merged.1, d.target
            );
        }
        match &self.circularity {
            CircularityInfo::Letter { letter } => {
                let _ = writeln!(out, "circular: letter {letter} cycles all states");
            }
            CircularityInfo::Word { word } => {
                let _ = writeln!(out, "circular: word {word} cycles all states");
            }
            CircularityInfo::NoneWithinBudget { budget } => {
                let _ = writeln!(out, "circular: no cyclic word of length <= {budget}");
            }
        }
        let _ = writeln!(out, "strongly connected: {}", self.strongly_connected);

        let cr = &self.complete_reachability;
        match (cr.status, cr.certificate) {
            ("reachable", Some(kind)) => {
                let _ = writeln!(out, "completely reachable: yes ({kind} certificate)");
            }
            ("unreachable", _) => {
                let missing = cr
                    .missing
                    .as_ref()
                    .map(|s| format!("{s:?}"))
                    .unwrap_or_default();
                let _ = writeln!(
                    out,
                    "completely reachable: no (unreachable subset {missing})"
                );
            }
            _ => {
                let _ = writeln!(out, "completely reachable: unknown (past cap)");
            }
        }
        if let Some(c) = &cr.structural {
            let _ = writeln!(
                out,
                "  certificate: defect {} excludes {}, cycle {} carries it to {} with shift {}",
                c.defect_letter, c.excluded, c.cyclic_letter, c.target, c.shift
            );
        }

        match &self.synchronization.shortest_reset {
            Some(r) => {
                let _ = writeln!(out, "shortest reset word: {} (length {})", r.word, r.length);
            }
            None => match self.synchronization.synchronizing {
                Some(false) => {
                    let _ = writeln!(out, "shortest reset word: none (not synchronizing)");
                }
                _ => {
                    let _ = writeln!(out, "shortest reset word: not computed (past cap)");
                }
            },
        }

        let sc = &self.state_complexity;
        match sc.value {
            Some(v) => {
                let ceiling = sc.ceiling.expect("value implies ceiling fits");
                let mark = if sc.is_maximal == Some(true) {
                    " (maximal)"
                } else {
                    ""
                };
                let _ = writeln!(
                    out,
                    "state complexity of the reset language: {v} of {ceiling}{mark}"
                );
            }
            None => {
                let bound = sc
                    .ceiling
                    .map(|c| c.to_string())
                    .unwrap_or_else(|| "2^n - n".to_string());
                let _ = writeln!(
                    out,
                    "state complexity of the reset language: <= {bound} (bound only)"
                );
            }
        }

        if self.criteria.is_empty() {
            let _ = writeln!(out, "criteria: none attempted");
        } else {
            let _ = writeln!(out, "criteria:");
            for at in &self.criteria {
                let outcome = if at.satisfied {
                    let w = at.witness.as_ref().expect("satisfied has witness");
                    format!("satisfied (q={}, d={})", w.q, w.d)
                } else {
                    format!("failed ({})", at.reason.as_deref().unwrap_or("no reason"))
                };
                let _ = writeln!(
                    out,
                    "  {} defect={} cycle={}: {outcome}",
                    at.check, at.defect, at.cycle
                );
            }
        }

        let _ = writeln!(
            out,
            "verdict: maximal state complexity {}",
            self.verdict.max_state_complexity
        );
        if let Some(scv) = self.verdict.sc_claimed {
            let _ = writeln!(out, "  claimed value: {scv}");
        }
        for line in &self.verdict.justification {
            let _ = writeln!(out, "  - {line}");
        }
        let t = &self.timings;
        let _ = writeln!(
            out,
            "timings: reachability {:.1} ms, complexity {:.1} ms, verdict {:.1} ms, total {:.1} ms",
            t.reachability_ms, t.complexity_ms, t.verdict_ms, t.total_ms
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use syncro::families::{build, Family};
    use syncro::power::DEFAULT_CAP;

    fn opts(oracle: bool) -> AnalyzeOptions {
        AnalyzeOptions {
            oracle,
            word_budget: None,
            cap: DEFAULT_CAP,
        }
    }

    #[test]
    fn k7_report_carries_both_witnesses() {
        let a = build(Family::K, 7).unwrap();
        let r = analyze(&a, Some("K7".into()), &opts(false));
        assert_eq!(r.state_complexity.value, Some(121));
        assert_eq!(r.verdict.max_state_complexity, "proved");
        let cert = r.complete_reachability.structural.as_ref().unwrap();
        assert_eq!(cert.shift, 4);
        let fired = r.criteria.iter().find(|at| at.satisfied).unwrap();
        let w = fired.witness.as_ref().unwrap();
        assert_eq!((w.q, w.d), (0, 2));
    }

    #[test]
    fn four_state_example_needs_the_oracle() {
        let a = build(Family::Fig3, 4).unwrap();
        let r = analyze(&a, None, &opts(false));
        assert_eq!(r.verdict.max_state_complexity, "unknown");
        assert!(r.criteria.iter().all(|at| !at.satisfied));
        assert_eq!(r.state_complexity.value, Some(12));

        let r = analyze(&a, None, &opts(true));
        assert_eq!(r.verdict.max_state_complexity, "proved");
        assert!(r.verdict.oracle_used);
    }

    #[test]
    fn past_cap_reports_bounds_only() {
        let a = build(Family::Cerny, 30).unwrap();
        let r = analyze(&a, None, &opts(false));
        assert_eq!(r.state_complexity.kind, "bound-only");
        assert_eq!(r.state_complexity.ceiling, Some((1u128 << 30) - 30));
        assert_eq!(r.complete_reachability.status, "reachable");
        assert_eq!(r.complete_reachability.certificate, Some("structural"));
        assert_eq!(r.verdict.max_state_complexity, "proved");
        let text = r.render_text();
        assert!(text.contains("bound only"), "{text}");
    }
}
