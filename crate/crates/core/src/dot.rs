//! Graphviz export.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::atoms::AtomDfa;
use crate::dfa::Dfa;

fn render(d: &Dfa, name: &str, label: impl Fn(usize) -> String) -> String {
    let mut s = String::new();
    writeln!(s, "digraph {name} {{").unwrap();
    writeln!(s, "\trankdir=LR;").unwrap();
    writeln!(s, "\tnode [shape=circle];").unwrap();
    writeln!(s, "\tstart [shape=none,label=\"\",height=0,width=0];").unwrap();
    for q in 0..d.state_count() {
        let shape = if d.is_final(q) {
            ",shape=doublecircle"
        } else {
            ""
        };
        writeln!(s, "\tq{} [label=\"{}\"{shape}];", q + 1, label(q)).unwrap();
    }
    writeln!(s, "\tstart -> q{};", d.initial() + 1).unwrap();
    for q in 0..d.state_count() {
        // one edge per target, letters merged in alphabet order
        let mut edges: BTreeMap<usize, Vec<&str>> = BTreeMap::new();
        for (a, letter) in d.alphabet().iter().enumerate() {
            edges.entry(d.step(q, a)).or_default().push(letter);
        }
        for (r, letters) in edges {
            writeln!(
                s,
                "\tq{} -> q{} [label=\"{}\"];",
                q + 1,
                r + 1,
                letters.join(",")
            )
            .unwrap();
        }
    }
    s.push_str("}\n");
    s
}

pub fn dfa_to_dot(d: &Dfa) -> String {
    render(d, "dfa", |q| (q + 1).to_string())
}

/// The reachable atom DFA, states labelled by their pairs `(X,Y)` or `⊥`.
pub fn atom_to_dot(atom: &AtomDfa) -> String {
    render(&atom.dfa, "atom", |q| atom.states[q].to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atoms::build_atom_dfa;
    use crate::state_set::StateSet;
    use crate::witnesses::regular_witness;

    #[test]
    fn regular_witness_dot() {
        let dot = dfa_to_dot(&regular_witness(3).unwrap());
        assert!(dot.starts_with("digraph dfa {\n"));
        assert!(dot.contains("\tq3 [label=\"3\",shape=doublecircle];\n"));
        assert!(dot.contains("\tstart -> q1;\n"));
        assert!(dot.contains("\tq1 -> q1 [label=\"c\"];\n"));
        assert!(dot.contains("\tq1 -> q2 [label=\"a,b\"];\n"));
        assert!(dot.ends_with("}\n"));
    }

    #[test]
    fn atom_dot_labels_pairs() {
        let d = regular_witness(3).unwrap();
        let atom = build_atom_dfa(&d, StateSet::one_based(&[3])).unwrap();
        let dot = atom_to_dot(&atom);
        assert!(dot.contains("label=\"({3},{1,2})\",shape=doublecircle"));
        assert!(dot.contains("label=\"⊥\""));
    }
}
