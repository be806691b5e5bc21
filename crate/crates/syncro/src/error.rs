use thiserror::Error;

/// Errors reported by construction and analysis routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("an automaton needs at least one state")]
    NoStates,
    #[error("an automaton needs at least one letter")]
    NoLetters,
    #[error("transition table has {got} rows, expected one per state ({expected})")]
    TableRows { got: usize, expected: usize },
    #[error(
        "transition row for state {state} has {got} entries, expected one per letter ({expected})"
    )]
    TableColumns {
        state: usize,
        got: usize,
        expected: usize,
    },
    #[error("transition for state {state} on letter {letter} points to {target}, outside 0..{n}")]
    TargetOutOfRange {
        state: usize,
        letter: usize,
        target: usize,
        n: usize,
    },
    #[error("expected {expected} letter names, got {got}")]
    NameCount { got: usize, expected: usize },
    #[error("letter names must be nonempty and pairwise distinct")]
    BadNames,
    #[error("letter index {letter} outside alphabet of size {k}")]
    Letter { letter: usize, k: usize },
    #[error("state index {state} outside 0..{n}")]
    State { state: usize, n: usize },
    #[error("operands act on different state counts: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("subset graph for {n} states exceeds the cap of {cap} (the graph has 2^n nodes)")]
    CapExceeded { n: usize, cap: usize },
    #[error("cap {cap} exceeds the hard limit of {limit} states")]
    CapTooLarge { cap: usize, limit: usize },
    #[error("alphabet has {k} letters, this analysis needs exactly 2")]
    NotBinary { k: usize },
    #[error("automaton is not completely reachable")]
    NotCompletelyReachable,
    #[error("subset size {size} outside 1..={n}")]
    SubsetSize { size: usize, n: usize },
    #[error("rank {rank} outside 1..={n}")]
    RankOutOfRange { rank: usize, n: usize },
    #[error("the brute-force oracle handles at most {limit} states, got {n}")]
    OracleCap { n: usize, limit: usize },
    #[error("family {family}: {message}")]
    Family { family: String, message: String },
}
