//! Tries and deterministic automata with partial transition functions.
//!
//! States are dense `u32` ids. Transition tables are flat, one row of
//! `alphabet.len()` entries per state, with [`NO_STATE`] marking an undefined
//! transition. Completion with a dead state only happens inside
//! [`minimize`] and [`equivalent`].

mod dot;
mod json;
mod minimize;

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::words::{shortlex, Alphabet, Symbol, Word};

pub use dot::ToDot;
pub use json::AutomatonJson;
pub use minimize::{equivalent, minimize};

pub type StateId = u32;

/// Marks an undefined transition or failure link.
pub const NO_STATE: StateId = StateId::MAX;

/// Longest word length [`enumerate_language`] will explore.
pub const MAX_ENUMERATION_LEN: usize = 24;

/// Cap on the number of paths [`enumerate_language`] will visit.
pub const MAX_ENUMERATION_PATHS: usize = 1 << 22;

/// Tree-shaped acceptor of a finite prefix-free language; members end in
/// sink states with no outgoing transitions. The root is state 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trie {
    alphabet: Alphabet,
    next: Vec<StateId>,
    sinks: Vec<bool>,
    antifactorial: bool,
}

impl Trie {
    pub const ROOT: StateId = 0;

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.sinks.len()
    }

    pub fn num_sinks(&self) -> usize {
        self.sinks.iter().filter(|&&s| s).count()
    }

    pub fn is_sink(&self, state: StateId) -> bool {
        self.sinks[state as usize]
    }

    /// Whether no member is a proper factor of another member.
    pub fn is_antifactorial(&self) -> bool {
        self.antifactorial
    }

    pub fn next(&self, state: StateId, symbol: Symbol) -> Option<StateId> {
        let t = self.next[state as usize * self.alphabet.len() + usize::from(symbol)];
        (t != NO_STATE).then_some(t)
    }

    pub fn transitions(&self) -> impl Iterator<Item = (StateId, Symbol, StateId)> + '_ {
        let k = self.alphabet.len();
        self.next.iter().enumerate().filter(|(_, &t)| t != NO_STATE).map(move |(i, &t)| {
            ((i / k) as StateId, (i % k) as Symbol, t)
        })
    }

    /// States in breadth-first order, children visited in alphabet order.
    pub fn bfs_order(&self) -> Vec<StateId> {
        let mut order = Vec::with_capacity(self.num_states());
        let mut queue = VecDeque::from([Self::ROOT]);
        while let Some(p) = queue.pop_front() {
            order.push(p);
            for a in self.alphabet.symbols() {
                if let Some(q) = self.next(p, a) {
                    queue.push_back(q);
                }
            }
        }
        order
    }

    /// The represented set, in (length, lexicographic) order.
    pub fn words(&self) -> Vec<Word> {
        let mut out = Vec::new();
        let mut stack = vec![(Self::ROOT, Vec::new())];
        while let Some((p, prefix)) = stack.pop() {
            if self.is_sink(p) {
                out.push(Word::new(prefix.clone()));
            }
            for a in self.alphabet.symbols() {
                if let Some(q) = self.next(p, a) {
                    let mut w = prefix.clone();
                    w.push(a);
                    stack.push((q, w));
                }
            }
        }
        out.sort_by(|a, b| shortlex(a, b));
        out
    }

    /// Aho-Corasick failure links: each non-root state points to the state of
    /// its longest proper suffix that is also a trie state.
    pub fn failure_links(&self) -> Vec<StateId> {
        let mut fail = vec![NO_STATE; self.num_states()];
        let order = self.bfs_order();
        for &p in &order {
            for a in self.alphabet.symbols() {
                let Some(q) = self.next(p, a) else { continue };
                fail[q as usize] = if p == Self::ROOT {
                    Self::ROOT
                } else {
                    let mut r = fail[p as usize];
                    loop {
                        if let Some(t) = self.next(r, a) {
                            break t;
                        }
                        if r == Self::ROOT {
                            break Self::ROOT;
                        }
                        r = fail[r as usize];
                    }
                };
            }
        }
        fail
    }

    /// Some member that is a proper factor of another member, if any.
    fn factor_witness(&self) -> Option<StateId> {
        let fail = self.failure_links();
        let mut hits = vec![NO_STATE; self.num_states()];
        for p in self.bfs_order().into_iter().skip(1) {
            let f = fail[p as usize];
            hits[p as usize] = if self.is_sink(f) { f } else { hits[f as usize] };
            if hits[p as usize] != NO_STATE {
                return Some(hits[p as usize]);
            }
        }
        None
    }

    fn path_to(&self, target: StateId) -> Word {
        self.words_with_states()
            .into_iter()
            .find(|(s, _)| *s == target)
            .map(|(_, w)| w)
            .unwrap_or_default()
    }

    fn words_with_states(&self) -> Vec<(StateId, Word)> {
        let mut out = Vec::new();
        let mut stack = vec![(Self::ROOT, Vec::new())];
        while let Some((p, prefix)) = stack.pop() {
            for a in self.alphabet.symbols() {
                if let Some(q) = self.next(p, a) {
                    let mut w = prefix.clone();
                    w.push(a);
                    stack.push((q, w));
                }
            }
            out.push((p, Word::new(prefix)));
        }
        out
    }
}

/// Builds the trie of `words`. Duplicates are merged. Fails when the set is
/// not prefix-free, or, with `require_antifactorial`, when some member is a
/// proper factor of another.
pub fn build_trie<'a, I>(words: I, alphabet: &Alphabet, require_antifactorial: bool) -> Result<Trie>
where
    I: IntoIterator<Item = &'a [Symbol]>,
{
    let k = alphabet.len();
    let mut next = vec![NO_STATE; k];
    let mut sinks = vec![false];
    for word in words {
        alphabet.check_word(word)?;
        let mut p = Trie::ROOT as usize;
        for &a in word {
            if sinks[p] {
                return Err(Error::NotPrefixFree(format!(
                    "a proper prefix of {} is a member",
                    alphabet.render(word)
                )));
            }
            let slot = p * k + usize::from(a);
            if next[slot] == NO_STATE {
                next[slot] = sinks.len() as StateId;
                sinks.push(false);
                next.extend(std::iter::repeat_n(NO_STATE, k));
            }
            p = next[slot] as usize;
        }
        if next[p * k..(p + 1) * k].iter().any(|&t| t != NO_STATE) {
            return Err(Error::NotPrefixFree(format!(
                "{} is a proper prefix of another member",
                alphabet.render(word)
            )));
        }
        sinks[p] = true;
    }
    let mut trie = Trie { alphabet: alphabet.clone(), next, sinks, antifactorial: true };
    if let Some(witness) = trie.factor_witness() {
        trie.antifactorial = false;
        if require_antifactorial {
            return Err(Error::NotAntifactorial(format!(
                "{} is a proper factor of another member",
                alphabet.render(&trie.path_to(witness))
            )));
        }
    }
    Ok(trie)
}

/// Deterministic automaton with a partial transition function and optional
/// failure links.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    initial: StateId,
    finals: Vec<bool>,
    next: Vec<StateId>,
    failure: Option<Vec<StateId>>,
}

impl Dfa {
    /// An automaton with no states; add the initial state first.
    pub fn new(alphabet: Alphabet) -> Self {
        Dfa { alphabet, initial: 0, finals: Vec::new(), next: Vec::new(), failure: None }
    }

    pub fn add_state(&mut self, is_final: bool) -> StateId {
        let id = self.finals.len() as StateId;
        self.finals.push(is_final);
        self.next.extend(std::iter::repeat_n(NO_STATE, self.alphabet.len()));
        if let Some(f) = self.failure.as_mut() {
            f.push(NO_STATE);
        }
        id
    }

    pub fn set_initial(&mut self, state: StateId) {
        self.initial = state;
    }

    pub fn set_final(&mut self, state: StateId, is_final: bool) {
        self.finals[state as usize] = is_final;
    }

    pub fn set_transition(&mut self, from: StateId, symbol: Symbol, to: StateId) {
        let k = self.alphabet.len();
        self.next[from as usize * k + usize::from(symbol)] = to;
    }

    pub fn remove_transition(&mut self, from: StateId, symbol: Symbol) {
        self.set_transition(from, symbol, NO_STATE);
    }

    pub fn set_failure(&mut self, from: StateId, to: StateId) {
        let n = self.num_states();
        self.failure.get_or_insert_with(|| vec![NO_STATE; n])[from as usize] = to;
    }

    pub fn clear_failure(&mut self) {
        self.failure = None;
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.finals.len()
    }

    pub fn num_transitions(&self) -> usize {
        self.next.iter().filter(|&&t| t != NO_STATE).count()
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn is_final(&self, state: StateId) -> bool {
        self.finals[state as usize]
    }

    pub fn finals(&self) -> impl Iterator<Item = StateId> + '_ {
        self.finals.iter().enumerate().filter(|(_, &f)| f).map(|(i, _)| i as StateId)
    }

    pub fn next(&self, state: StateId, symbol: Symbol) -> Option<StateId> {
        let t = self.next[state as usize * self.alphabet.len() + usize::from(symbol)];
        (t != NO_STATE).then_some(t)
    }

    pub fn has_failure(&self) -> bool {
        self.failure.is_some()
    }

    pub fn failure(&self, state: StateId) -> Option<StateId> {
        let t = *self.failure.as_ref()?.get(state as usize)?;
        (t != NO_STATE).then_some(t)
    }

    pub fn transitions(&self) -> impl Iterator<Item = (StateId, Symbol, StateId)> + '_ {
        let k = self.alphabet.len();
        self.next.iter().enumerate().filter(|(_, &t)| t != NO_STATE).map(move |(i, &t)| {
            ((i / k) as StateId, (i % k) as Symbol, t)
        })
    }

    /// State reached from `from` by reading `word`, if the run exists.
    pub fn walk(&self, from: StateId, word: &[Symbol]) -> Result<Option<StateId>> {
        let mut p = from;
        for &a in word {
            if !self.alphabet.contains_symbol(a) {
                return Err(Error::SymbolOutOfRange(a));
            }
            match self.next(p, a) {
                Some(q) => p = q,
                None => return Ok(None),
            }
        }
        Ok(Some(p))
    }

    pub fn accepts(&self, word: &[Symbol]) -> Result<bool> {
        Ok(self.walk(self.initial, word)?.is_some_and(|p| self.is_final(p)))
    }

    /// Breadth-first distance from the initial state; unreachable states get
    /// `usize::MAX`.
    pub fn bfs_depths(&self) -> Vec<usize> {
        let mut depth = vec![usize::MAX; self.num_states()];
        if self.num_states() == 0 {
            return depth;
        }
        depth[self.initial as usize] = 0;
        let mut queue = VecDeque::from([self.initial]);
        while let Some(p) = queue.pop_front() {
            for a in self.alphabet.symbols() {
                if let Some(q) = self.next(p, a) {
                    if depth[q as usize] == usize::MAX {
                        depth[q as usize] = depth[p as usize] + 1;
                        queue.push_back(q);
                    }
                }
            }
        }
        depth
    }

    /// States in topological order, or `None` when a reachable cycle exists.
    pub fn topological_order(&self) -> Option<Vec<StateId>> {
        let n = self.num_states();
        let depth = self.bfs_depths();
        let mut indegree = vec![0usize; n];
        for (p, _, q) in self.transitions() {
            if depth[p as usize] != usize::MAX {
                indegree[q as usize] += 1;
            }
        }
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([self.initial]);
        if indegree[self.initial as usize] != 0 {
            return None;
        }
        while let Some(p) = queue.pop_front() {
            order.push(p);
            for a in self.alphabet.symbols() {
                if let Some(q) = self.next(p, a) {
                    indegree[q as usize] -= 1;
                    if indegree[q as usize] == 0 {
                        queue.push_back(q);
                    }
                }
            }
        }
        let reachable = depth.iter().filter(|&&d| d != usize::MAX).count();
        (order.len() == reachable).then_some(order)
    }

    /// Length of the longest path from the initial state to each reachable
    /// state; `None` when the reachable part has a cycle.
    pub fn longest_path_depths(&self) -> Option<Vec<usize>> {
        let order = self.topological_order()?;
        let mut depth = vec![usize::MAX; self.num_states()];
        depth[self.initial as usize] = 0;
        for p in order {
            for a in self.alphabet.symbols() {
                if let Some(q) = self.next(p, a) {
                    let d = depth[p as usize] + 1;
                    if depth[q as usize] == usize::MAX || depth[q as usize] < d {
                        depth[q as usize] = d;
                    }
                }
            }
        }
        Some(depth)
    }

    /// Checks determinism-independent invariants: every state reachable from
    /// the initial state, and failure chains (when present) defined on every
    /// non-initial state and ending at the initial state.
    pub fn validate(&self) -> Result<()> {
        let n = self.num_states();
        if n == 0 || self.initial as usize >= n {
            return Err(Error::MalformedAutomaton("missing initial state".into()));
        }
        if let Some(p) = self.bfs_depths().iter().position(|&d| d == usize::MAX) {
            return Err(Error::MalformedAutomaton(format!("state {p} is unreachable")));
        }
        if let Some(fail) = &self.failure {
            for p in 0..n as StateId {
                if p == self.initial {
                    continue;
                }
                let mut q = p;
                let mut steps = 0;
                while q != self.initial {
                    q = fail[q as usize];
                    steps += 1;
                    if q == NO_STATE || steps > n {
                        return Err(Error::MalformedAutomaton(format!(
                            "failure chain from state {p} does not reach the initial state"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Renumbers reachable states in breadth-first order (alphabet order
    /// among siblings). Unreachable states are dropped; failure links survive
    /// only if every link target is kept.
    pub fn canonical(&self) -> Dfa {
        let n = self.num_states();
        let mut id = vec![NO_STATE; n];
        let mut order = Vec::new();
        if n > 0 {
            id[self.initial as usize] = 0;
            order.push(self.initial);
            let mut head = 0;
            while head < order.len() {
                let p = order[head];
                head += 1;
                for a in self.alphabet.symbols() {
                    if let Some(q) = self.next(p, a) {
                        if id[q as usize] == NO_STATE {
                            id[q as usize] = order.len() as StateId;
                            order.push(q);
                        }
                    }
                }
            }
        }
        self.renumber(&order, &id)
    }

    /// Keeps the states listed in `order` (old ids), mapped through `id`.
    fn renumber(&self, order: &[StateId], id: &[StateId]) -> Dfa {
        let mut out = Dfa::new(self.alphabet.clone());
        for &p in order {
            out.add_state(self.is_final(p));
        }
        out.initial = if order.is_empty() { 0 } else { id[self.initial as usize] };
        for &p in order {
            for a in self.alphabet.symbols() {
                if let Some(q) = self.next(p, a) {
                    if id[q as usize] != NO_STATE {
                        out.set_transition(id[p as usize], a, id[q as usize]);
                    }
                }
            }
        }
        if let Some(fail) = &self.failure {
            let mut mapped = vec![NO_STATE; order.len()];
            let mut intact = true;
            for &p in order {
                let f = fail[p as usize];
                if f == NO_STATE {
                    continue;
                }
                match id[f as usize] {
                    NO_STATE => intact = false,
                    g => mapped[id[p as usize] as usize] = g,
                }
            }
            if intact {
                out.failure = Some(mapped);
            }
        }
        out
    }
}

/// Every accepted word of length at most `max_len`.
pub fn enumerate_language(dfa: &Dfa, max_len: usize) -> Result<BTreeSet<Word>> {
    if max_len > MAX_ENUMERATION_LEN {
        return Err(Error::GuardExceeded {
            what: "language enumeration length",
            limit: MAX_ENUMERATION_LEN,
            requested: max_len,
        });
    }
    let mut out = BTreeSet::new();
    if dfa.num_states() == 0 {
        return Ok(out);
    }
    let live = coreachable(dfa);
    if !live[dfa.initial as usize] {
        return Ok(out);
    }
    let mut frontier = vec![(dfa.initial, Vec::new())];
    let mut visited = 0usize;
    for len in 0..=max_len {
        let mut next_frontier = Vec::new();
        for (p, word) in frontier {
            visited += 1;
            if visited > MAX_ENUMERATION_PATHS {
                return Err(Error::GuardExceeded {
                    what: "language enumeration paths",
                    limit: MAX_ENUMERATION_PATHS,
                    requested: visited,
                });
            }
            if dfa.is_final(p) {
                out.insert(Word::new(word.clone()));
            }
            if len == max_len {
                continue;
            }
            for a in dfa.alphabet.symbols() {
                if let Some(q) = dfa.next(p, a).filter(|&q| live[q as usize]) {
                    let mut w = word.clone();
                    w.push(a);
                    next_frontier.push((q, w));
                }
            }
        }
        frontier = next_frontier;
    }
    Ok(out)
}

/// States from which some final state is reachable.
fn coreachable(dfa: &Dfa) -> Vec<bool> {
    let n = dfa.num_states();
    let mut reverse: Vec<Vec<StateId>> = vec![Vec::new(); n];
    for (p, _, q) in dfa.transitions() {
        reverse[q as usize].push(p);
    }
    let mut live = dfa.finals.clone();
    let mut stack: Vec<StateId> = dfa.finals().collect();
    while let Some(q) = stack.pop() {
        for &p in &reverse[q as usize] {
            if !live[p as usize] {
                live[p as usize] = true;
                stack.push(p);
            }
        }
    }
    live
}

/// Removes absorbing sinks: non-final states whose every defined transition
/// is a self-loop. Transitions into them are dropped. The initial state is
/// always kept.
pub fn strip_sinks(dfa: &Dfa) -> Dfa {
    let n = dfa.num_states();
    let is_sink = |p: StateId| {
        p != dfa.initial
            && !dfa.is_final(p)
            && dfa.alphabet.symbols().all(|a| dfa.next(p, a).is_none_or(|q| q == p))
    };
    let mut id = vec![NO_STATE; n];
    let mut order = Vec::with_capacity(n);
    for p in 0..n as StateId {
        if !is_sink(p) {
            id[p as usize] = order.len() as StateId;
            order.push(p);
        }
    }
    dfa.renumber(&order, &id)
}

/// Whether the reachable parts of `a` and `b` are the same automaton up to
/// renaming states. Failure links are ignored.
pub fn isomorphic(a: &Dfa, b: &Dfa) -> bool {
    if a.alphabet != b.alphabet {
        return false;
    }
    let (mut ca, mut cb) = (a.canonical(), b.canonical());
    ca.failure = None;
    cb.failure = None;
    ca == cb
}

/// Like [`isomorphic`], and additionally the failure links correspond.
pub fn isomorphic_with_failure(a: &Dfa, b: &Dfa) -> bool {
    a.alphabet == b.alphabet && a.canonical() == b.canonical()
}
