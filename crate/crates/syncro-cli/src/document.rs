//! On-disk automaton format: a single JSON document with the transition
//! table laid out row per state, column per letter, for diff-friendliness.

use serde::{Deserialize, Serialize};
use syncro::SemiAutomaton;

/// Serialized form of a [`SemiAutomaton`] plus optional metadata.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomatonDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    pub n: usize,
    pub alphabet: Vec<String>,
    /// `delta[state][letter]`.
    pub delta: Vec<Vec<usize>>,
}

impl AutomatonDocument {
    pub fn from_automaton(a: &SemiAutomaton, name: Option<String>) -> Self {
        AutomatonDocument {
            name,
            source: None,
            n: a.n(),
            alphabet: a.letter_names().to_vec(),
            delta: a.delta().to_vec(),
        }
    }

    /// Parses and validates a document, reporting JSON syntax errors with
    /// their line and column and table errors with the offending field.
    pub fn parse(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| {
            format!(
                "invalid automaton document at line {} column {}: {e}",
                e.line(),
                e.column()
            )
        })
    }

    pub fn to_automaton(&self) -> Result<SemiAutomaton, String> {
        SemiAutomaton::with_names(
            self.n,
            self.alphabet.len(),
            self.delta.clone(),
            self.alphabet.clone(),
        )
        .map_err(|e| format!("invalid automaton document: {e}"))
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("document serializes");
        out.push('\n');
        out
    }
}
