//! Recovering a word, or a circular word, from its minimal forbidden factors.
//!
//! Both directions go through the sink-free L-automaton of the set. Every
//! successful result is checked by recomputing its minimal forbidden factors.

use crate::automata::{Dfa, StateId, NO_STATE};
use crate::error::{Error, Result};
use crate::l_automaton::avoiding_automaton;
use crate::mfw::{mfw_circular, mfw_linear, MfwSet};
use crate::words::{CircularWord, Symbol, Word};

/// The unique word `w` whose minimal forbidden factors are `set`: the label
/// of the longest path from the initial state of the (acyclic) automaton.
pub fn reconstruct_word(set: &MfwSet) -> Result<Word> {
    let dfa = avoiding_automaton(&set.trie()?)?;
    let word = longest_path(&dfa)?;
    if word.is_empty() {
        // only ε avoids the set; no nonempty word has this antidictionary
        return Err(Error::VerificationMismatch);
    }
    if !mfw_linear(&word, set.alphabet())?.same_set(set) {
        return Err(Error::VerificationMismatch);
    }
    Ok(word)
}

fn longest_path(dfa: &Dfa) -> Result<Word> {
    let order = dfa.topological_order().ok_or(Error::InfiniteLanguage)?;
    let n = dfa.num_states();
    let mut best = vec![0usize; n];
    // number of distinct longest paths, saturating at 2
    let mut count = vec![0u8; n];
    let mut pred: Vec<(StateId, Symbol)> = vec![(NO_STATE, 0); n];
    count[dfa.initial() as usize] = 1;
    for &p in &order {
        for a in dfa.alphabet().symbols() {
            let Some(q) = dfa.next(p, a) else { continue };
            let (p, q) = (p as usize, q as usize);
            let d = best[p] + 1;
            if count[q] == 0 || d > best[q] {
                best[q] = d;
                count[q] = count[p];
                pred[q] = (p as StateId, a);
            } else if d == best[q] {
                count[q] = count[q].saturating_add(count[p]).min(2);
            }
        }
    }
    let longest = order.iter().map(|&p| best[p as usize]).max().unwrap_or(0);
    let ends: Vec<StateId> = order.iter().copied().filter(|&p| best[p as usize] == longest).collect();
    let paths: u32 = ends.iter().map(|&p| u32::from(count[p as usize])).sum();
    if paths != 1 {
        return Err(Error::AmbiguousLongestPath);
    }
    let mut word = Vec::with_capacity(longest);
    let mut p = ends[0];
    while p != dfa.initial() {
        let (q, a) = pred[p as usize];
        word.push(a);
        p = q;
    }
    word.reverse();
    Ok(Word::new(word))
}

/// The circular word whose minimal forbidden factors are `set`: the label of
/// the first cycle closed by a depth-first search from the initial state.
pub fn reconstruct_circular(set: &MfwSet) -> Result<CircularWord> {
    let dfa = avoiding_automaton(&set.trie()?)?;
    let cycle = first_cycle(&dfa).ok_or(Error::NoCycle)?;
    let cw = CircularWord::new(cycle)?;
    if !mfw_circular(&cw, set.alphabet())?.same_set(set) {
        return Err(Error::VerificationMismatch);
    }
    Ok(cw)
}

/// Labels of the first cycle found by an iterative depth-first search,
/// starting at the target of the back edge.
pub fn first_cycle(dfa: &Dfa) -> Option<Word> {
    #[derive(Clone, Copy, PartialEq)]
    enum Color {
        White,
        Gray,
        Black,
    }
    let n = dfa.num_states();
    if n == 0 {
        return None;
    }
    let mut color = vec![Color::White; n];
    // (state, next symbol to try, symbol used to enter)
    let mut stack: Vec<(StateId, usize, Symbol)> = vec![(dfa.initial(), 0, 0)];
    color[dfa.initial() as usize] = Color::Gray;
    let k = dfa.alphabet().len();
    while let Some(top) = stack.last_mut() {
        let (p, next_symbol) = (top.0, top.1);
        if next_symbol == k {
            color[p as usize] = Color::Black;
            stack.pop();
            continue;
        }
        top.1 += 1;
        let a = next_symbol as Symbol;
        let Some(q) = dfa.next(p, a) else { continue };
        match color[q as usize] {
            Color::White => {
                color[q as usize] = Color::Gray;
                stack.push((q, 0, a));
            }
            Color::Gray => {
                let start = stack.iter().position(|&(s, _, _)| s == q).expect("gray state is on the stack");
                let mut labels: Vec<Symbol> = stack[start + 1..].iter().map(|&(_, _, c)| c).collect();
                labels.push(a);
                return Some(Word::new(labels));
            }
            Color::Black => {}
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mfw::SourceKind;
    use crate::words::Alphabet;

    fn set(xs: &[&str], kind: SourceKind) -> MfwSet {
        let ab = Alphabet::binary();
        let ws = xs.iter().map(|s| ab.parse_word(s).unwrap()).collect();
        MfwSet::new(ws, ab, kind, None).unwrap()
    }

    fn text(w: &[Symbol]) -> String {
        Alphabet::binary().render(w)
    }

    #[test]
    fn linear_examples() {
        let m = set(&["aaa", "aba", "bbb", "baa", "babba"], SourceKind::Linear);
        assert_eq!(text(&reconstruct_word(&m).unwrap()), "aabbabb");
        assert_eq!(text(&reconstruct_word(&set(&["b", "aa"], SourceKind::Linear)).unwrap()), "a");
        assert!(matches!(
            reconstruct_word(&set(&["aa", "ba"], SourceKind::Linear)),
            Err(Error::InfiniteLanguage)
        ));
    }

    #[test]
    fn ambiguous_longest_path() {
        // words avoiding {aa, bb, aba, bab}: ab and ba are both longest
        let m = set(&["aa", "bb", "aba", "bab"], SourceKind::Linear);
        assert!(matches!(reconstruct_word(&m), Err(Error::AmbiguousLongestPath)));
    }

    #[test]
    fn circular_examples() {
        for (m, want) in [
            (&["aaa", "aba", "bbb", "aabbaa", "babbab"][..], "aabbabb"),
            (&["bb", "aaa", "aabaa", "babab"][..], "aabab"),
            (&["aa", "bb"][..], "ab"),
        ] {
            let cw = reconstruct_circular(&set(m, SourceKind::Circular)).unwrap();
            assert_eq!(text(cw.linearization()), want);
        }
    }

    #[test]
    fn no_cycle() {
        let m = set(&["aaa", "aba", "bbb", "baa", "babba"], SourceKind::Circular);
        assert!(matches!(reconstruct_circular(&m), Err(Error::NoCycle)));
    }
}
