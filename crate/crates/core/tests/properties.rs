use std::collections::BTreeSet;

use proptest::prelude::*;

use mfw_core::automata::{
    build_trie, enumerate_language, equivalent, isomorphic, isomorphic_with_failure, minimize,
    AutomatonJson,
};
use mfw_core::factor_automaton::{bispecial_factors_fast, build_factor_automaton};
use mfw_core::l_automaton::{avoiding_automaton, circular_factor_dfa, l_automaton};
use mfw_core::mfw::{mfw_circular, mfw_linear, mfw_linear_bruteforce, words_avoiding, MfwJson};
use mfw_core::reconstruction::{reconstruct_circular, reconstruct_word};
use mfw_core::words::{
    bispecial_factors, canonical_rotation, circular_factor_membership, factor_set, is_balanced,
    is_balanced_bruteforce, reversal,
};
use mfw_core::{Alphabet, CircularWord, Dfa, MfwSet, Symbol, Word};

fn alphabet_of(sigma: usize) -> Alphabet {
    Alphabet::new("abcd".chars().take(sigma)).unwrap()
}

fn word(sigma: usize, len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..sigma as Symbol, len).prop_map(Word::new)
}

fn any_word(max_len: usize) -> impl Strategy<Value = (Alphabet, Word)> {
    (2usize..=3).prop_flat_map(move |s| (Just(alphabet_of(s)), word(s, 1..=max_len)))
}

fn binary_word(max_len: usize) -> impl Strategy<Value = Word> {
    word(2, 1..=max_len)
}

/// Random antifactorial set: draw words, then drop any that contains another
/// drawn word as a proper factor.
fn antifactorial_set() -> impl Strategy<Value = Vec<Word>> {
    prop::collection::vec(word(2, 1..=4), 1..=5).prop_map(|ws| {
        let ws: BTreeSet<Word> = ws.into_iter().collect();
        ws.iter()
            .filter(|x| !ws.iter().any(|y| y != *x && y.is_factor_of(x)))
            .cloned()
            .collect()
    })
}

fn check_failure_depths(dfa: &Dfa) -> Result<(), TestCaseError> {
    let depth = dfa.bfs_depths();
    for p in 0..dfa.num_states() as u32 {
        if p == dfa.initial() {
            prop_assert_eq!(dfa.failure(p), None);
            continue;
        }
        let f = dfa.failure(p).expect("non-initial state has a failure link");
        prop_assert!(depth[f as usize] < depth[p as usize], "state {} fails to deeper {}", p, f);
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn linear_mfw_matches_definition((ab, w) in any_word(40)) {
        prop_assert!(mfw_linear(&w, &ab).unwrap().same_set(&mfw_linear_bruteforce(&w, &ab).unwrap()));
    }

    #[test]
    fn linear_mfw_commutes_with_reversal((ab, w) in any_word(30)) {
        let direct: BTreeSet<Word> =
            mfw_linear(&reversal(&w), &ab).unwrap().words().iter().cloned().collect();
        let mirrored: BTreeSet<Word> =
            mfw_linear(&w, &ab).unwrap().words().iter().map(|m| reversal(m)).collect();
        prop_assert_eq!(direct, mirrored);
    }

    #[test]
    fn circular_mfw_is_rotation_invariant((ab, w) in any_word(20), shift in 0usize..20) {
        let base = mfw_circular(&CircularWord::new(w.clone()).unwrap(), &ab).unwrap();
        let turned = w.rotation(shift % w.len());
        let other = mfw_circular(&CircularWord::new(turned).unwrap(), &ab).unwrap();
        prop_assert!(base.same_set(&other));
    }

    #[test]
    fn canonical_rotation_is_least((_, w) in any_word(24)) {
        let least = (0..w.len()).map(|i| w.rotation(i)).min().unwrap();
        prop_assert_eq!(canonical_rotation(&w), least);
    }

    #[test]
    fn circular_membership_stable_in_k((_, w) in any_word(8), x in word(2, 1..=20)) {
        let cw = CircularWord::new(w).unwrap();
        let root = cw.linearization();
        let wide = root.pow(x.len() / root.len() + 4);
        prop_assert_eq!(circular_factor_membership(&cw, &x), x.is_factor_of(&wide));
    }

    #[test]
    fn factor_automaton_language_and_size((ab, w) in any_word(16)) {
        let fa = build_factor_automaton(&w, &ab).unwrap();
        prop_assert_eq!(enumerate_language(&fa, w.len()).unwrap(), factor_set(&w, w.len()).unwrap());
        prop_assert_eq!(minimize(&fa).num_states(), fa.num_states());
        let n = w.len();
        if n > 3 {
            prop_assert!(n < fa.num_states() && fa.num_states() <= 2 * n - 2);
        }
        check_failure_depths(&fa)?;
    }

    #[test]
    fn l_automaton_matches_factor_automaton_with_failures((ab, w) in any_word(24)) {
        let m = mfw_linear(&w, &ab).unwrap();
        let from_mfw = avoiding_automaton(&m.trie().unwrap()).unwrap();
        let direct = build_factor_automaton(&w, &ab).unwrap();
        prop_assert!(isomorphic(&from_mfw, &direct));
        check_failure_depths(&from_mfw)?;
    }

    #[test]
    fn l_automaton_failures_are_aho_corasick(set in antifactorial_set()) {
        let ab = Alphabet::binary();
        let trie = build_trie(set.iter().map(|w| w.as_slice()), &ab, true).unwrap();
        let dfa = l_automaton(&trie).unwrap();
        let links = trie.failure_links();
        for p in trie.bfs_order().into_iter().skip(1) {
            prop_assert_eq!(dfa.failure(p), Some(links[p as usize]));
        }
        check_failure_depths(&dfa)?;
    }

    #[test]
    fn l_automaton_language_avoids_set(set in antifactorial_set()) {
        let ab = Alphabet::binary();
        let trie = build_trie(set.iter().map(|w| w.as_slice()), &ab, true).unwrap();
        let dfa = avoiding_automaton(&trie).unwrap();
        let want: BTreeSet<Word> = words_avoiding(&set, &ab, 8).unwrap().into_iter().collect();
        prop_assert_eq!(enumerate_language(&dfa, 8).unwrap(), want);
        let mut listed = trie.words();
        listed.sort();
        let mut given = set.clone();
        given.sort();
        prop_assert_eq!(listed, given);
    }

    #[test]
    fn minimize_is_idempotent_and_equivalent(set in antifactorial_set()) {
        let ab = Alphabet::binary();
        let trie = build_trie(set.iter().map(|w| w.as_slice()), &ab, true).unwrap();
        let dfa = avoiding_automaton(&trie).unwrap();
        let once = minimize(&dfa);
        prop_assert!(equivalent(&dfa, &once).unwrap());
        prop_assert!(isomorphic(&once, &minimize(&once)));
        prop_assert!(once.num_states() <= dfa.num_states());
    }

    #[test]
    fn circular_automaton_is_minimal((ab, w) in any_word(14)) {
        let cw = CircularWord::new(w).unwrap();
        let dfa = circular_factor_dfa(&cw, &ab).unwrap();
        let min = minimize(&dfa);
        prop_assert!(equivalent(&dfa, &min).unwrap());
        prop_assert_eq!(dfa.num_states(), min.num_states());
        prop_assert!(dfa.num_states() < 2 * cw.len());
    }

    #[test]
    fn reconstruction_round_trips((ab, w) in any_word(60)) {
        let m = mfw_linear(&w, &ab).unwrap();
        prop_assert_eq!(reconstruct_word(&m).unwrap(), w.clone());
        let cw = CircularWord::new(w).unwrap();
        let back = reconstruct_circular(&mfw_circular(&cw, &ab).unwrap()).unwrap();
        prop_assert_eq!(back.linearization(), cw.linearization());
    }

    #[test]
    fn bispecial_routes_agree(w in binary_word(40)) {
        let ab = Alphabet::binary();
        prop_assert_eq!(bispecial_factors_fast(&ab, &w).unwrap(), bispecial_factors(&ab, &w).unwrap());
    }

    #[test]
    fn balance_routes_agree(w in binary_word(30)) {
        let ab = Alphabet::binary();
        prop_assert_eq!(is_balanced(&ab, &w).unwrap(), is_balanced_bruteforce(&ab, &w).unwrap());
    }

    #[test]
    fn json_round_trips((ab, w) in any_word(20), circular in any::<bool>()) {
        let m = if circular {
            mfw_circular(&CircularWord::new(w.clone()).unwrap(), &ab).unwrap()
        } else {
            mfw_linear(&w, &ab).unwrap()
        };
        let text = serde_json::to_string(&m.to_json()).unwrap();
        let json: MfwJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(MfwSet::from_json(&json).unwrap(), m.clone());

        let fa = build_factor_automaton(&w, &ab).unwrap();
        let parsed = Dfa::from_json(&AutomatonJson::parse(&fa.to_json().to_string_pretty()).unwrap()).unwrap();
        prop_assert!(isomorphic_with_failure(&fa, &parsed));

        let trie = m.trie().unwrap();
        let parsed = mfw_core::Trie::from_json(&AutomatonJson::parse(&trie.to_json().to_string_pretty()).unwrap()).unwrap();
        prop_assert_eq!(parsed.words(), trie.words());
    }
}
