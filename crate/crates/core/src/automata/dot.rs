use std::fmt::Write;

use super::{Dfa, Trie};
use crate::words::Alphabet;

/// Graphviz export. Final states (trie sinks) are double circles, failure
/// links are dashed edges, and states are labelled in breadth-first order.
pub trait ToDot {
    fn to_dot(&self) -> String;
}

fn escape(c: char) -> String {
    match c {
        '"' => "\\\"".to_string(),
        '\\' => "\\\\".to_string(),
        c => c.to_string(),
    }
}

fn label(alphabet: &Alphabet, symbol: u8) -> String {
    alphabet.char_of(symbol).map(escape).unwrap_or_else(|_| "?".into())
}

impl ToDot for Dfa {
    fn to_dot(&self) -> String {
        let d = self.canonical();
        let mut out = String::from("digraph automaton {\n  rankdir=LR;\n");
        out.push_str("  start [shape=point];\n");
        for p in 0..d.num_states() as u32 {
            let shape = if d.is_final(p) { "doublecircle" } else { "circle" };
            let _ = writeln!(out, "  n{p} [shape={shape}, label=\"{p}\"];");
        }
        let _ = writeln!(out, "  start -> n{};", d.initial());
        for (p, a, q) in d.transitions() {
            let _ = writeln!(out, "  n{p} -> n{q} [label=\"{}\"];", label(d.alphabet(), a));
        }
        for p in 0..d.num_states() as u32 {
            if let Some(f) = d.failure(p) {
                let _ = writeln!(out, "  n{p} -> n{f} [style=dashed, constraint=false];");
            }
        }
        out.push_str("}\n");
        out
    }
}

impl ToDot for Trie {
    fn to_dot(&self) -> String {
        let order = self.bfs_order();
        let mut rank = vec![0u32; self.num_states()];
        for (i, &p) in order.iter().enumerate() {
            rank[p as usize] = i as u32;
        }
        let mut out = String::from("digraph trie {\n");
        for &p in &order {
            let shape = if self.is_sink(p) { "doublecircle" } else { "circle" };
            let r = rank[p as usize];
            let _ = writeln!(out, "  n{r} [shape={shape}, label=\"{r}\"];");
        }
        for &p in &order {
            for a in self.alphabet().symbols() {
                if let Some(q) = self.next(p, a) {
                    let _ = writeln!(
                        out,
                        "  n{} -> n{} [label=\"{}\"];",
                        rank[p as usize],
                        rank[q as usize],
                        label(self.alphabet(), a)
                    );
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::build_trie;

    #[test]
    fn trie_dot_has_nodes_and_edges() {
        let ab = Alphabet::binary();
        let ws = [ab.parse_word("aa").unwrap(), ab.parse_word("ba").unwrap()];
        let t = build_trie(ws.iter().map(|w| w.as_slice()), &ab, true).unwrap();
        let dot = t.to_dot();
        assert_eq!(dot.matches("->").count(), 4);
        assert_eq!(dot.matches("shape=").count(), 5);
        assert_eq!(dot.matches("doublecircle").count(), 2);
    }

    #[test]
    fn quotes_are_escaped() {
        let alphabet = Alphabet::new(['"', 'x']).unwrap();
        let mut d = Dfa::new(alphabet);
        let p = d.add_state(true);
        let q = d.add_state(false);
        d.set_transition(p, 0, q);
        d.set_failure(q, p);
        let dot = d.to_dot();
        assert!(dot.contains("label=\"\\\"\""));
        assert!(dot.contains("style=dashed"));
        assert_eq!(dot.matches("->").count(), 3);
    }
}
