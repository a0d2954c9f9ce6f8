use serde::{Deserialize, Serialize};

use super::{build_trie, Dfa, StateId, Trie};
use crate::error::{Error, Result};
use crate::words::{Alphabet, Symbol};

/// Serialized form shared by [`Dfa`] and [`Trie`]. For a trie, `finals`
/// lists the sinks and `failure` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomatonJson {
    pub alphabet: String,
    pub states: usize,
    pub initial: StateId,
    pub finals: Vec<StateId>,
    pub transitions: Vec<(StateId, String, StateId)>,
    #[serde(default)]
    pub failure: Vec<(StateId, StateId)>,
}

impl AutomatonJson {
    fn alphabet(&self) -> Result<Alphabet> {
        Alphabet::new(self.alphabet.chars())
    }

    fn symbol(alphabet: &Alphabet, text: &str) -> Result<Symbol> {
        let mut chars = text.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => alphabet.index_of(c),
            _ => Err(Error::MalformedAutomaton(format!(
                "transition label {text:?} is not a single symbol"
            ))),
        }
    }

    fn check_state(&self, p: StateId) -> Result<()> {
        if (p as usize) < self.states {
            Ok(())
        } else {
            Err(Error::MalformedAutomaton(format!("state {p} out of range")))
        }
    }
}

fn render_transitions(
    alphabet: &Alphabet,
    it: impl Iterator<Item = (StateId, Symbol, StateId)>,
) -> Vec<(StateId, String, StateId)> {
    it.map(|(p, a, q)| (p, alphabet.render(&[a]), q)).collect()
}

impl Dfa {
    pub fn to_json(&self) -> AutomatonJson {
        let failure = (0..self.num_states() as StateId)
            .filter_map(|p| self.failure(p).map(|f| (p, f)))
            .collect();
        AutomatonJson {
            alphabet: self.alphabet().to_string(),
            states: self.num_states(),
            initial: self.initial(),
            finals: self.finals().collect(),
            transitions: render_transitions(self.alphabet(), self.transitions()),
            failure,
        }
    }

    /// Rebuilds and validates a DFA (determinism, ranges, reachability and
    /// failure chains).
    pub fn from_json(json: &AutomatonJson) -> Result<Dfa> {
        let alphabet = json.alphabet()?;
        let mut dfa = Dfa::new(alphabet.clone());
        for _ in 0..json.states {
            dfa.add_state(false);
        }
        json.check_state(json.initial)?;
        dfa.set_initial(json.initial);
        for &p in &json.finals {
            json.check_state(p)?;
            dfa.set_final(p, true);
        }
        for (p, label, q) in &json.transitions {
            json.check_state(*p)?;
            json.check_state(*q)?;
            let a = AutomatonJson::symbol(&alphabet, label)?;
            match dfa.next(*p, a) {
                Some(t) if t != *q => {
                    return Err(Error::MalformedAutomaton(format!(
                        "state {p} has two transitions on {label:?}"
                    )))
                }
                _ => dfa.set_transition(*p, a, *q),
            }
        }
        for &(p, f) in &json.failure {
            json.check_state(p)?;
            json.check_state(f)?;
            dfa.set_failure(p, f);
        }
        dfa.validate()?;
        Ok(dfa)
    }
}

impl Trie {
    pub fn to_json(&self) -> AutomatonJson {
        AutomatonJson {
            alphabet: self.alphabet().to_string(),
            states: self.num_states(),
            initial: Trie::ROOT,
            finals: (0..self.num_states() as StateId).filter(|&p| self.is_sink(p)).collect(),
            transitions: render_transitions(self.alphabet(), self.transitions()),
            failure: Vec::new(),
        }
    }

    /// Reads a trie, checking that the transitions form a tree rooted at
    /// `initial` whose leaves are exactly the sinks. State ids are
    /// renumbered.
    pub fn from_json(json: &AutomatonJson) -> Result<Trie> {
        let dfa = Dfa::from_json(&AutomatonJson { failure: Vec::new(), ..json.clone() })?;
        let mut parents = vec![0usize; json.states];
        for (_, _, q) in dfa.transitions() {
            parents[q as usize] += 1;
        }
        if parents[dfa.initial() as usize] != 0
            || parents
                .iter()
                .enumerate()
                .any(|(p, &c)| p != dfa.initial() as usize && c != 1)
        {
            return Err(Error::MalformedAutomaton("transitions do not form a tree".into()));
        }
        let mut words = Vec::new();
        let mut stack = vec![(dfa.initial(), Vec::new())];
        while let Some((p, prefix)) = stack.pop() {
            let mut leaf = true;
            for a in dfa.alphabet().symbols() {
                if let Some(q) = dfa.next(p, a) {
                    leaf = false;
                    let mut w = prefix.clone();
                    w.push(a);
                    stack.push((q, w));
                }
            }
            match (dfa.is_final(p), leaf) {
                (true, true) => words.push(prefix),
                (true, false) => {
                    return Err(Error::MalformedAutomaton(format!(
                        "sink state {p} has outgoing transitions"
                    )))
                }
                (false, true) if json.states > 1 => {
                    return Err(Error::MalformedAutomaton(format!(
                        "leaf state {p} is not a sink"
                    )))
                }
                _ => {}
            }
        }
        build_trie(words.iter().map(|w| w.as_slice()), dfa.alphabet(), false)
    }
}

impl AutomatonJson {
    pub fn to_string_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("automaton serializes")
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}
