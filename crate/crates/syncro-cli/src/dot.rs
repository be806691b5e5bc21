//! Graphviz DOT rendering for automata and their subset graphs.

use syncro::power::{PowerAutomaton, Scope};
use syncro::{Error, SemiAutomaton};

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// The automaton itself: one node per state, one labeled edge per table
/// entry (parallel edges stay separate).
pub fn automaton_dot(a: &SemiAutomaton) -> String {
    let mut out = String::new();
    out.push_str("digraph automaton {\n");
    out.push_str("  rankdir=LR;\n");
    out.push_str("  node [shape=circle];\n");
    for q in 0..a.n() {
        out.push_str(&format!("  q{q} [label=\"{q}\"];\n"));
    }
    for q in 0..a.n() {
        for letter in 0..a.k() {
            out.push_str(&format!(
                "  q{q} -> q{} [label=\"{}\"];\n",
                a.step(q, letter),
                escape(a.letter_name(letter))
            ));
        }
    }
    out.push_str("}\n");
    out
}

/// The reachable subset graph: nodes labeled by their state sets in
/// ascending order, singletons double-circled. Nodes are emitted in
/// ascending bitmask order so the output is stable.
pub fn power_dot(a: &SemiAutomaton, cap: usize) -> Result<String, Error> {
    let pa = PowerAutomaton::build(a, Scope::Reachable, cap)?;
    let mut ids: Vec<usize> = (0..pa.node_count()).collect();
    ids.sort_by_key(|&id| pa.node_mask(id));

    let mut out = String::new();
    out.push_str("digraph power {\n");
    out.push_str("  rankdir=LR;\n");
    out.push_str("  node [shape=circle];\n");
    for &id in &ids {
        let peripheries = if pa.is_singleton(id) { 2 } else { 1 };
        out.push_str(&format!(
            "  s{} [label=\"{}\", peripheries={peripheries}];\n",
            pa.node_mask(id),
            pa.node_set(id)
        ));
    }
    for &id in &ids {
        for letter in 0..a.k() {
            out.push_str(&format!(
                "  s{} -> s{} [label=\"{}\"];\n",
                pa.node_mask(id),
                pa.node_mask(pa.successor(id, letter)),
                escape(a.letter_name(letter))
            ));
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use syncro::families::{build, Family};
    use syncro::power::DEFAULT_CAP;

    #[test]
    fn automaton_dot_has_one_edge_per_table_entry() {
        let a = build(Family::Cerny, 4).unwrap();
        let dot = automaton_dot(&a);
        assert_eq!(dot.matches(" -> ").count(), 8);
        assert_eq!(dot.matches("label=\"a\"").count(), 4);
    }

    #[test]
    fn single_state_renders_self_loops() {
        let a = SemiAutomaton::new(1, 3, vec![vec![0, 0, 0]]).unwrap();
        let dot = automaton_dot(&a);
        assert_eq!(dot.matches("q0 -> q0").count(), 3);
    }

    #[test]
    fn power_dot_marks_singletons() {
        let a = build(Family::Fig3, 4).unwrap();
        let dot = power_dot(&a, DEFAULT_CAP).unwrap();
        assert_eq!(dot.matches("peripheries=").count(), 15);
        assert_eq!(dot.matches("peripheries=2").count(), 4);
        assert!(dot.contains("label=\"{0,2}\""));
    }
}
