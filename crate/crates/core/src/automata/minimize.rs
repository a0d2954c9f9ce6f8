use std::collections::{HashMap, HashSet, VecDeque};

use super::{Dfa, StateId, NO_STATE};
use crate::error::{Error, Result};

/// The minimal trim DFA accepting the same language, in canonical numbering.
///
/// Moore partition refinement over the automaton completed with a dead
/// state; the class of the dead state is removed afterwards. An empty
/// language yields a single non-final state.
pub fn minimize(dfa: &Dfa) -> Dfa {
    let k = dfa.alphabet.len();
    let n = dfa.num_states();
    let dead = n;
    let target = |p: usize, a: usize| -> usize {
        if p == dead {
            return dead;
        }
        match dfa.next[p * k + a] {
            NO_STATE => dead,
            q => q as usize,
        }
    };

    let mut class: Vec<usize> =
        (0..=n).map(|p| usize::from(p != dead && dfa.finals[p])).collect();
    let mut count = class.iter().copied().collect::<HashSet<_>>().len();
    loop {
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut refined = vec![0; n + 1];
        for p in 0..=n {
            let mut sig = Vec::with_capacity(k + 1);
            sig.push(class[p]);
            sig.extend((0..k).map(|a| class[target(p, a)]));
            let next_id = ids.len();
            refined[p] = *ids.entry(sig).or_insert(next_id);
        }
        let refined_count = ids.len();
        class = refined;
        if refined_count == count {
            break;
        }
        count = refined_count;
    }

    let dead_class = class[dead];
    let mut out = Dfa::new(dfa.alphabet.clone());
    if n == 0 || class[dfa.initial as usize] == dead_class {
        out.add_state(false);
        return out;
    }
    let mut state_of = vec![NO_STATE; count];
    let mut queue = VecDeque::from([dfa.initial as usize]);
    state_of[class[dfa.initial as usize]] = out.add_state(dfa.finals[dfa.initial as usize]);
    while let Some(p) = queue.pop_front() {
        let from = state_of[class[p]];
        for a in 0..k {
            let q = target(p, a);
            let c = class[q];
            if c == dead_class {
                continue;
            }
            if state_of[c] == NO_STATE {
                state_of[c] = out.add_state(dfa.finals[q]);
                queue.push_back(q);
            }
            out.set_transition(from, a as u8, state_of[c]);
        }
    }
    out.canonical()
}

/// Whether the two automata accept the same language, by a breadth-first
/// walk of the product automaton (undefined transitions lead to a shared
/// rejecting dead state).
pub fn equivalent(a: &Dfa, b: &Dfa) -> Result<bool> {
    if a.alphabet != b.alphabet {
        return Err(Error::AlphabetMismatch);
    }
    let start = (
        (a.num_states() > 0).then_some(a.initial),
        (b.num_states() > 0).then_some(b.initial),
    );
    let accepting = |d: &Dfa, p: Option<StateId>| p.is_some_and(|p| d.is_final(p));
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some((p, q)) = queue.pop_front() {
        if accepting(a, p) != accepting(b, q) {
            return Ok(false);
        }
        for s in a.alphabet.symbols() {
            let pair = (p.and_then(|p| a.next(p, s)), q.and_then(|q| b.next(q, s)));
            if pair != (None, None) && seen.insert(pair) {
                queue.push_back(pair);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Alphabet;

    fn single(alphabet: Alphabet, accepting: bool, loops: bool) -> Dfa {
        let mut d = Dfa::new(alphabet.clone());
        let p = d.add_state(accepting);
        if loops {
            for a in alphabet.symbols() {
                d.set_transition(p, a, p);
            }
        }
        d
    }

    #[test]
    fn single_state_stays_single() {
        let d = single(Alphabet::new(['a']).unwrap(), true, true);
        let m = minimize(&d);
        assert_eq!(m.num_states(), 1);
        assert!(equivalent(&d, &m).unwrap());
    }

    #[test]
    fn merges_equivalent_states_and_drops_dead_ones() {
        // ε -a-> x, ε -b-> y, x -b-> y, y -b-> y, plus a useless non-final z
        let mut d = Dfa::new(Alphabet::binary());
        let e = d.add_state(true);
        let x = d.add_state(true);
        let y = d.add_state(true);
        let z = d.add_state(false);
        d.set_transition(e, 0, x);
        d.set_transition(e, 1, y);
        d.set_transition(x, 1, y);
        d.set_transition(y, 1, y);
        d.set_transition(y, 0, z);
        let m = minimize(&d);
        assert_eq!(m.num_states(), 2);
        assert!(equivalent(&d, &m).unwrap());
        assert_eq!(minimize(&m), m);
    }

    #[test]
    fn empty_language() {
        let d = single(Alphabet::binary(), false, true);
        let m = minimize(&d);
        assert_eq!(m.num_states(), 1);
        assert_eq!(m.num_transitions(), 0);
        assert!(equivalent(&d, &m).unwrap());
    }

    #[test]
    fn equivalence_detects_differences_and_mismatched_alphabets() {
        let all = single(Alphabet::binary(), true, true);
        let eps = single(Alphabet::binary(), true, false);
        assert!(!equivalent(&all, &eps).unwrap());
        let other = single(Alphabet::ternary(), true, true);
        assert!(matches!(equivalent(&all, &other), Err(Error::AlphabetMismatch)));
    }
}
