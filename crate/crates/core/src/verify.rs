//! Exhaustive property sweep over small linear and circular words, used by
//! `antidict verify --exhaustive`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::automata::{enumerate_language, equivalent, isomorphic, minimize, MAX_ENUMERATION_LEN};
use crate::corpus::{all_words, lyndon_words};
use crate::error::Result;
use crate::factor_automaton::build_factor_automaton;
use crate::l_automaton::{avoiding_automaton, circular_factor_dfa};
use crate::mfw::{
    check_cardinality_bounds, mfw_circular, mfw_circular_bruteforce, mfw_linear,
    mfw_linear_bruteforce,
};
use crate::reconstruction::{reconstruct_circular, reconstruct_word};
use crate::words::{factor_set, Alphabet, CircularWord, Word};

/// Ternary sweeps are capped at this length.
pub const MAX_TERNARY_LEN: usize = 8;

#[derive(Clone, Debug, Default, Serialize)]
pub struct CheckSummary {
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerifyReport {
    pub max_len: usize,
    pub checks: BTreeMap<&'static str, CheckSummary>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.values().all(|c| c.failures == 0)
    }

    fn absorb(&mut self, outcomes: Vec<(&'static str, String, bool)>) {
        for (name, case, ok) in outcomes {
            let entry = self.checks.entry(name).or_default();
            entry.cases += 1;
            if !ok {
                entry.failures += 1;
                entry.first_failure.get_or_insert(case);
            }
        }
    }
}

type Outcomes = Vec<(&'static str, String, bool)>;

fn linear_checks(w: &Word, alphabet: &Alphabet) -> Result<Outcomes> {
    let label = alphabet.render(w);
    let mut out = Vec::new();
    let m = mfw_linear(w, alphabet)?;
    out.push(("linear mfw = brute force", label.clone(), m.same_set(&mfw_linear_bruteforce(w, alphabet)?)));

    let fa = build_factor_automaton(w, alphabet)?;
    if w.len() <= MAX_ENUMERATION_LEN {
        let lang = enumerate_language(&fa, w.len())? == factor_set(w, w.len())?;
        out.push(("factor automaton language", label.clone(), lang));
    }
    let states = fa.num_states();
    let n = w.len();
    if n > 3 {
        out.push(("factor automaton state bounds", label.clone(), n < states && states <= 2 * n - 2));
    }
    out.push(("factor automaton minimal", label.clone(), minimize(&fa).num_states() == states));

    let from_mfw = avoiding_automaton(&m.trie()?)?;
    out.push(("L-automaton of linear mfw isomorphic to factor automaton", label.clone(), isomorphic(&from_mfw, &fa)));
    out.push(("linear round trip", label, reconstruct_word(&m).ok().as_ref() == Some(w)));
    Ok(out)
}

fn circular_checks(w: &Word, alphabet: &Alphabet) -> Result<Outcomes> {
    let label = alphabet.render(w);
    let cw = CircularWord::new(w.clone())?;
    let n = w.len();
    let mut out = Vec::new();
    let m = mfw_circular(&cw, alphabet)?;
    let oracle = mfw_circular_bruteforce(&cw, alphabet, 2 * n)?;
    out.push(("circular mfw = definition", label.clone(), m.same_set(&oracle)));
    let rotations_agree = cw
        .rotations()
        .all(|r| {
            // exercise the constructor on a non-canonical rotation
            CircularWord::new(r)
                .and_then(|c| mfw_circular(&c, alphabet))
                .is_ok_and(|mr| mr.same_set(&m))
        });
    out.push(("circular mfw rotation invariant", label.clone(), rotations_agree));
    out.push(("circular mfw length <= |w|", label.clone(), m.max_len() <= n));

    let dfa = circular_factor_dfa(&cw, alphabet)?;
    let min = minimize(&dfa);
    out.push((
        "circular factor automaton minimal",
        label.clone(),
        equivalent(&dfa, &min)? && dfa.num_states() == min.num_states(),
    ));
    out.push(("circular factor automaton <= 2n-1 states", label.clone(), dfa.num_states() < 2 * n));
    out.push(("cardinality bounds", label.clone(), check_cardinality_bounds(&cw, alphabet)?.holds()));
    let back = reconstruct_circular(&m).ok();
    out.push(("circular round trip", label, back.as_ref() == Some(&cw)));
    Ok(out)
}

/// Runs every check over binary words of length at most `max_len` and
/// ternary words of length at most `min(max_len, MAX_TERNARY_LEN)`.
pub fn exhaustive(max_len: usize) -> Result<VerifyReport> {
    let mut report = VerifyReport { max_len, ..Default::default() };
    for (alphabet, limit) in [
        (Alphabet::binary(), max_len),
        (Alphabet::ternary(), max_len.min(MAX_TERNARY_LEN)),
    ] {
        let sigma = alphabet.len();
        let linear: Vec<Word> = all_words(sigma, limit).collect();
        let results: Vec<Outcomes> = linear
            .par_iter()
            .map(|w| linear_checks(w, &alphabet))
            .collect::<Result<_>>()?;
        results.into_iter().for_each(|o| report.absorb(o));

        let circular = lyndon_words(sigma, limit);
        let results: Vec<Outcomes> = circular
            .par_iter()
            .map(|w| circular_checks(w, &alphabet))
            .collect::<Result<_>>()?;
        results.into_iter().for_each(|o| report.absorb(o));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_passes() {
        let report = exhaustive(5).unwrap();
        assert!(report.passed(), "{report:#?}");
        assert!(report.checks["linear round trip"].cases > 60);
    }
}
