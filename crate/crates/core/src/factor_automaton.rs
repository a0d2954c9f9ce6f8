//! Factor automaton of a linear word.
//!
//! The word is first indexed by its suffix automaton (DAWG), built online;
//! its suffix links are the failure function of that automaton. With every
//! state made final the suffix automaton recognizes the factors of the word
//! but is not always minimal for that language, so states with identical
//! right contexts are merged bottom-up (the automaton is acyclic, and
//! `len` gives a topological order). Failure links of the merged automaton
//! follow the suffix-link chain until it leaves the merged class.

use std::collections::{BTreeSet, HashMap};

use crate::automata::{Dfa, StateId, NO_STATE};
use crate::error::{Error, Result};
use crate::words::{Alphabet, Symbol, Word};

/// Suffix automaton of a word with suffix links and first end positions.
#[derive(Clone, Debug)]
pub struct SuffixAutomaton {
    sigma: usize,
    next: Vec<StateId>,
    link: Vec<StateId>,
    len: Vec<u32>,
    first_end: Vec<u32>,
}

impl SuffixAutomaton {
    pub const ROOT: StateId = 0;

    /// Online construction over symbols `0..sigma`.
    pub fn new(word: &[Symbol], sigma: usize) -> Self {
        let cap = 2 * word.len() + 1;
        let mut sa = SuffixAutomaton {
            sigma,
            next: Vec::with_capacity(cap * sigma),
            link: Vec::with_capacity(cap),
            len: Vec::with_capacity(cap),
            first_end: Vec::with_capacity(cap),
        };
        sa.push_state(0, NO_STATE, 0);
        let mut last = Self::ROOT;
        for (i, &c) in word.iter().enumerate() {
            let c = usize::from(c);
            let cur = sa.push_state(sa.len[last as usize] + 1, NO_STATE, i as u32);
            let mut p = last;
            while p != NO_STATE && sa.next[p as usize * sigma + c] == NO_STATE {
                sa.next[p as usize * sigma + c] = cur;
                p = sa.link[p as usize];
            }
            if p == NO_STATE {
                sa.link[cur as usize] = Self::ROOT;
            } else {
                let q = sa.next[p as usize * sigma + c];
                if sa.len[p as usize] + 1 == sa.len[q as usize] {
                    sa.link[cur as usize] = q;
                } else {
                    let clone = sa.push_state(
                        sa.len[p as usize] + 1,
                        sa.link[q as usize],
                        sa.first_end[q as usize],
                    );
                    let (qs, cs) = (q as usize * sigma, clone as usize * sigma);
                    sa.next.copy_within(qs..qs + sigma, cs);
                    while p != NO_STATE && sa.next[p as usize * sigma + c] == q {
                        sa.next[p as usize * sigma + c] = clone;
                        p = sa.link[p as usize];
                    }
                    sa.link[q as usize] = clone;
                    sa.link[cur as usize] = clone;
                }
            }
            last = cur;
        }
        sa
    }

    fn push_state(&mut self, len: u32, link: StateId, first_end: u32) -> StateId {
        let id = self.len.len() as StateId;
        self.len.push(len);
        self.link.push(link);
        self.first_end.push(first_end);
        self.next.extend(std::iter::repeat_n(NO_STATE, self.sigma));
        id
    }

    pub fn num_states(&self) -> usize {
        self.len.len()
    }

    pub fn sigma(&self) -> usize {
        self.sigma
    }

    pub fn next(&self, state: StateId, symbol: Symbol) -> Option<StateId> {
        let t = self.next[state as usize * self.sigma + usize::from(symbol)];
        (t != NO_STATE).then_some(t)
    }

    /// Suffix link; `None` for the root.
    pub fn link(&self, state: StateId) -> Option<StateId> {
        let t = self.link[state as usize];
        (t != NO_STATE).then_some(t)
    }

    /// Length of the longest word reaching `state`.
    pub fn longest_len(&self, state: StateId) -> usize {
        self.len[state as usize] as usize
    }

    /// Length of the shortest word reaching `state` (0 for the root).
    pub fn shortest_len(&self, state: StateId) -> usize {
        self.link(state).map_or(0, |l| self.longest_len(l) + 1)
    }

    /// End position of the first occurrence of the words of `state`.
    pub fn first_end(&self, state: StateId) -> usize {
        self.first_end[state as usize] as usize
    }

    /// The longest word of `state`, as a slice of the indexed word.
    pub fn longest<'w>(&self, word: &'w [Symbol], state: StateId) -> &'w [Symbol] {
        let len = self.longest_len(state);
        if len == 0 {
            return &word[..0];
        }
        let end = self.first_end(state) + 1;
        &word[end - len..end]
    }

    /// The shortest word of `state`.
    pub fn shortest<'w>(&self, word: &'w [Symbol], state: StateId) -> &'w [Symbol] {
        let len = self.shortest_len(state);
        if len == 0 {
            return &word[..0];
        }
        let end = self.first_end(state) + 1;
        &word[end - len..end]
    }

    pub fn contains(&self, factor: &[Symbol]) -> bool {
        let mut p = Self::ROOT;
        for &a in factor {
            if usize::from(a) >= self.sigma {
                return false;
            }
            match self.next(p, a) {
                Some(q) => p = q,
                None => return false,
            }
        }
        true
    }
}

/// The minimal DFA of the factors of `word`, every state final, with failure
/// links.
pub fn build_factor_automaton(word: &[Symbol], alphabet: &Alphabet) -> Result<Dfa> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    alphabet.check_word(word)?;
    let sigma = alphabet.len();
    let sa = SuffixAutomaton::new(word, sigma);
    let n = sa.num_states();

    // Counting sort by decreasing longest length: every transition goes to a
    // strictly longer state, so targets are classified before sources.
    let mut start = vec![0usize; word.len() + 2];
    for p in 0..n as StateId {
        start[sa.longest_len(p) + 1] += 1;
    }
    for i in 1..start.len() {
        start[i] += start[i - 1];
    }
    let mut order = vec![0 as StateId; n];
    for p in 0..n as StateId {
        let slot = &mut start[sa.longest_len(p)];
        order[*slot] = p;
        *slot += 1;
    }

    let mut class = vec![NO_STATE; n];
    let mut representative: Vec<StateId> = Vec::new();
    fn signature<'a>(
        sa: &'a SuffixAutomaton,
        class: &'a [StateId],
        p: StateId,
    ) -> impl Iterator<Item = StateId> + 'a {
        (0..sa.sigma).map(move |a| sa.next(p, a as Symbol).map_or(NO_STATE, |q| class[q as usize]))
    }
    if sigma <= 4 {
        // pack the signature into one integer to avoid an allocation per state
        let mut register: HashMap<u128, StateId> = HashMap::with_capacity(n);
        for &p in order.iter().rev() {
            let key = signature(&sa, &class, p).fold(0u128, |acc, c| (acc << 32) | u128::from(c));
            let fresh = representative.len() as StateId;
            let c = *register.entry(key).or_insert(fresh);
            if c == fresh {
                representative.push(p);
            }
            class[p as usize] = c;
        }
    } else {
        let mut register: HashMap<Box<[StateId]>, StateId> = HashMap::with_capacity(n);
        for &p in order.iter().rev() {
            let key: Box<[StateId]> = signature(&sa, &class, p).collect();
            let fresh = representative.len() as StateId;
            let c = *register.entry(key).or_insert(fresh);
            if c == fresh {
                representative.push(p);
            }
            class[p as usize] = c;
        }
    }

    let mut dfa = Dfa::new(alphabet.clone());
    for _ in 0..representative.len() {
        dfa.add_state(true);
    }
    let root_class = class[SuffixAutomaton::ROOT as usize];
    dfa.set_initial(root_class);
    for (c, &p) in representative.iter().enumerate() {
        for a in alphabet.symbols() {
            if let Some(q) = sa.next(p, a) {
                dfa.set_transition(c as StateId, a, class[q as usize]);
            }
        }
        if c as StateId != root_class {
            let mut t = sa.link(p).expect("non-root state has a suffix link");
            while class[t as usize] == c as StateId {
                t = sa.link(t).expect("chain leaves the class before the root");
            }
            dfa.set_failure(c as StateId, class[t as usize]);
        }
    }
    Ok(dfa.canonical())
}

/// Bispecial factors of a binary word, read off its suffix automaton.
///
/// A bispecial factor is always the longest word of its state (a shorter
/// word of the same state has a forced left extension), so it suffices to
/// test, for each state, whether it branches on both letters to the right
/// and whether its longest word has both letters as left extensions. Left
/// extensions come from the suffix-link children.
pub fn bispecial_factors_fast(alphabet: &Alphabet, word: &[Symbol]) -> Result<BTreeSet<Word>> {
    if alphabet.len() != 2 {
        return Err(Error::NotBinary(alphabet.len()));
    }
    alphabet.check_word(word)?;
    let sa = SuffixAutomaton::new(word, 2);
    let n = sa.num_states();
    let mut left = vec![0u8; n];
    for t in 1..n as StateId {
        let s = sa.link(t).expect("non-root state has a suffix link");
        let letter = word[sa.first_end(t) - sa.longest_len(s)];
        left[s as usize] |= 1 << letter;
    }
    Ok((0..n as StateId)
        .filter(|&s| left[s as usize] == 0b11)
        .filter(|&s| sa.next(s, 0).is_some() && sa.next(s, 1).is_some())
        .map(|s| Word::from(sa.longest(word, s)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::enumerate_language;
    use crate::words::{bispecial_factors, factor_set};

    fn ab() -> Alphabet {
        Alphabet::binary()
    }

    fn w(s: &str) -> Word {
        ab().parse_word(s).unwrap()
    }

    #[test]
    fn suffix_automaton_recognizes_factors() {
        let text = w("abaababaab");
        let sa = SuffixAutomaton::new(&text, 2);
        for f in factor_set(&text, text.len()).unwrap() {
            assert!(sa.contains(&f));
        }
        assert!(!sa.contains(&w("bb")));
        assert!(!sa.contains(&w("aaa")));
    }

    #[test]
    fn word_shapes_of_states() {
        let text = w("aabbabb");
        let sa = SuffixAutomaton::new(&text, 2);
        for p in 1..sa.num_states() as StateId {
            let longest = sa.longest(&text, p);
            let shortest = sa.shortest(&text, p);
            assert!(longest.ends_with(shortest));
            assert_eq!(sa.longest_len(p), longest.len());
        }
    }

    #[test]
    fn aabbabb_automaton() {
        let text = w("aabbabb");
        let fa = build_factor_automaton(&text, &ab()).unwrap();
        assert!(fa.accepts(&w("abba")).unwrap());
        for m in ["aaa", "aba", "bbb", "baa", "babba"] {
            assert!(!fa.accepts(&w(m)).unwrap(), "{m}");
        }
        assert_eq!(enumerate_language(&fa, 7).unwrap(), factor_set(&text, 7).unwrap());
        assert!(fa.validate().is_ok());
        assert!(fa.finals().count() == fa.num_states());
    }

    #[test]
    fn single_letter() {
        let fa = build_factor_automaton(&w("a"), &ab()).unwrap();
        assert_eq!(fa.num_states(), 2);
        assert_eq!(fa.finals().count(), 2);
        assert!(matches!(build_factor_automaton(&[], &ab()), Err(Error::EmptyWord)));
    }

    #[test]
    fn merges_suffix_automaton_states() {
        // The suffix automaton of abb has 5 states; ab and b share right
        // contexts in the factor language.
        assert_eq!(SuffixAutomaton::new(&w("abb"), 2).num_states(), 5);
        assert_eq!(build_factor_automaton(&w("abb"), &ab()).unwrap().num_states(), 4);
    }

    #[test]
    fn fast_bispecials_match_definition() {
        for s in ["abaaba", "abaababaab", "aaaa", "aabbabb", "abab", "a"] {
            assert_eq!(
                bispecial_factors_fast(&ab(), &w(s)).unwrap(),
                bispecial_factors(&ab(), &w(s)).unwrap(),
                "{s}"
            );
        }
    }
}
