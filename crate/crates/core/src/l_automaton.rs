//! The L-automaton construction: from the trie of a finite antifactorial set
//! `M` to a complete DFA accepting the words that avoid `M`.

use crate::automata::{strip_sinks, Dfa, StateId, Trie, NO_STATE};
use crate::error::{Error, Result};
use crate::mfw::mfw_circular;
use crate::words::{Alphabet, CircularWord};

/// Runs the construction on `trie`, keeping its state ids.
///
/// The root gets the trie's transitions, with self-loops on letters that
/// start no member. Other states are visited in breadth-first order: trie
/// edges are kept and the failure of their target is set to the target of
/// the same letter from the current failure state; missing letters on
/// internal states are borrowed from the failure state; sinks loop on every
/// letter. Final states are the non-sinks. The result is not minimized and
/// keeps its absorbing sinks (see [`strip_sinks`]).
pub fn l_automaton(trie: &Trie) -> Result<Dfa> {
    if !trie.is_antifactorial() {
        return Err(Error::NotAntifactorial("input trie".into()));
    }
    let alphabet = trie.alphabet().clone();
    let n = trie.num_states();
    let root = Trie::ROOT;

    let mut dfa = Dfa::new(alphabet.clone());
    for p in 0..n as StateId {
        dfa.add_state(!trie.is_sink(p));
    }
    dfa.set_initial(root);
    let mut fail = vec![NO_STATE; n];

    for a in alphabet.symbols() {
        match trie.next(root, a) {
            Some(q) => {
                dfa.set_transition(root, a, q);
                fail[q as usize] = root;
            }
            None => dfa.set_transition(root, a, root),
        }
    }
    for p in trie.bfs_order().into_iter().skip(1) {
        let f = fail[p as usize];
        for a in alphabet.symbols() {
            if let Some(q) = trie.next(p, a) {
                dfa.set_transition(p, a, q);
                fail[q as usize] = dfa.next(f, a).expect("failure state is complete");
            } else if !trie.is_sink(p) {
                let t = dfa.next(f, a).expect("failure state is complete");
                dfa.set_transition(p, a, t);
            } else {
                dfa.set_transition(p, a, p);
            }
        }
    }
    for (p, &f) in fail.iter().enumerate() {
        if f != NO_STATE {
            dfa.set_failure(p as StateId, f);
        }
    }
    Ok(dfa)
}

/// The factor automaton of a circular word: the L-automaton of its minimal
/// forbidden factors with the sinks removed.
pub fn circular_factor_dfa(cw: &CircularWord, alphabet: &Alphabet) -> Result<Dfa> {
    let m = mfw_circular(cw, alphabet)?;
    Ok(strip_sinks(&l_automaton(&m.trie()?)?))
}

/// `strip_sinks(l_automaton(trie(M)))` for an arbitrary antifactorial set.
pub fn avoiding_automaton(trie: &Trie) -> Result<Dfa> {
    Ok(strip_sinks(&l_automaton(trie)?))
}
