//! Minimal forbidden factors of linear and circular words.
//!
//! A minimal forbidden factor of a factorial language `L` over `A` is either
//! a letter of `A` not in `L`, or a word `aub` with `a, b` letters such that
//! `aub` is not in `L` while `au` and `ub` are.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::automata::{build_trie, Trie};
use crate::error::{Error, Result};
use crate::factor_automaton::SuffixAutomaton;
use crate::words::{
    circular_factor_membership, circular_factor_set, shortlex, Alphabet, CircularWord, Symbol,
    Word, MAX_BRUTE_FORCE_LEN,
};

/// Longest candidate the generic language oracle will test.
pub const MAX_LANGUAGE_ORACLE_LEN: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SourceKind {
    Linear,
    Circular,
}

/// An antifactorial set of words over an explicit alphabet, sorted by
/// (length, lexicographic order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MfwSet {
    words: Vec<Word>,
    alphabet: Alphabet,
    kind: SourceKind,
    source: Option<Word>,
}

impl MfwSet {
    /// Sorts and deduplicates `words`. Fails if a word leaves the alphabet;
    /// antifactoriality is checked by [`MfwSet::trie`] and
    /// [`MfwSet::validate`].
    pub fn new(
        words: Vec<Word>,
        alphabet: Alphabet,
        kind: SourceKind,
        source: Option<Word>,
    ) -> Result<Self> {
        for w in &words {
            alphabet.check_word(w)?;
        }
        if let Some(s) = &source {
            alphabet.check_word(s)?;
        }
        Ok(Self::from_parts(words, alphabet, kind, source))
    }

    fn from_parts(
        mut words: Vec<Word>,
        alphabet: Alphabet,
        kind: SourceKind,
        source: Option<Word>,
    ) -> Self {
        words.sort_unstable_by(|a, b| shortlex(a, b));
        words.dedup();
        MfwSet { words, alphabet, kind, source }
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn kind(&self) -> SourceKind {
        self.kind
    }

    pub fn source(&self) -> Option<&Word> {
        self.source.as_ref()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &[Symbol]) -> bool {
        self.words
            .binary_search_by(|x| shortlex(x, w))
            .is_ok()
    }

    pub fn max_len(&self) -> usize {
        self.words.last().map_or(0, |w| w.len())
    }

    /// The rendered members, in order.
    pub fn rendered(&self) -> Vec<String> {
        self.words.iter().map(|w| self.alphabet.render(w)).collect()
    }

    /// Same members and alphabet (source metadata ignored).
    pub fn same_set(&self, other: &MfwSet) -> bool {
        self.alphabet == other.alphabet && self.words == other.words
    }

    /// The trie of the set; fails unless the set is antifactorial.
    pub fn trie(&self) -> Result<Trie> {
        build_trie(self.words.iter().map(|w| w.as_slice()), &self.alphabet, true)
    }

    /// Checks antifactoriality and, when the source word is known, the
    /// defining conditions against the source language.
    pub fn validate(&self) -> Result<()> {
        self.trie()?;
        let Some(source) = &self.source else { return Ok(()) };
        let member: Box<dyn Fn(&[Symbol]) -> bool> = match self.kind {
            SourceKind::Linear => {
                let sa = SuffixAutomaton::new(source, self.alphabet.len());
                Box::new(move |x| sa.contains(x))
            }
            SourceKind::Circular => {
                let cw = CircularWord::new(source.clone())?;
                Box::new(move |x| circular_factor_membership(&cw, x))
            }
        };
        for m in &self.words {
            let ok = match m.len() {
                0 => false,
                1 => !member(m),
                n => !member(m) && member(&m[..n - 1]) && member(&m[1..]),
            };
            if !ok {
                return Err(Error::NotAntifactorial(format!(
                    "{} is not a minimal forbidden factor of {}",
                    self.alphabet.render(m),
                    self.alphabet.render(source)
                )));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> MfwJson {
        MfwJson {
            word: self.source.as_ref().map(|w| self.alphabet.render(w)),
            alphabet: self.alphabet.to_string(),
            circular: self.kind == SourceKind::Circular,
            mfw: self.rendered(),
        }
    }

    pub fn from_json(json: &MfwJson) -> Result<Self> {
        let alphabet = Alphabet::new(json.alphabet.chars())?;
        let words = json
            .mfw
            .iter()
            .map(|s| alphabet.parse_word(s))
            .collect::<Result<Vec<_>>>()?;
        let source = json.word.as_deref().map(|s| alphabet.parse_word(s)).transpose()?;
        let kind = if json.circular { SourceKind::Circular } else { SourceKind::Linear };
        MfwSet::new(words, alphabet, kind, source)
    }
}

/// `{"word": ..., "alphabet": ..., "circular": bool, "mfw": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MfwJson {
    #[serde(default)]
    pub word: Option<String>,
    pub alphabet: String,
    #[serde(default)]
    pub circular: bool,
    pub mfw: Vec<String>,
}

fn check_input(word: &[Symbol], alphabet: &Alphabet) -> Result<()> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    alphabet.check_word(word)
}

/// Minimal forbidden factors of `word` from its suffix automaton.
///
/// Letters with no transition from the root are absent from the word. For
/// every other state `p` with shortest word `cu` (so `u` is the longest word
/// of the failure state), each letter `a` readable from the failure state
/// but not from `p` gives the minimal forbidden factor `cua`; every
/// minimal forbidden factor of length at least two arises exactly once.
pub fn mfw_linear(word: &[Symbol], alphabet: &Alphabet) -> Result<MfwSet> {
    check_input(word, alphabet)?;
    let sa = SuffixAutomaton::new(word, alphabet.len());
    let mut out = Vec::new();
    for a in alphabet.symbols() {
        if sa.next(SuffixAutomaton::ROOT, a).is_none() {
            out.push(Word::new(vec![a]));
        }
    }
    for p in 1..sa.num_states() as u32 {
        let fail = sa.link(p).expect("non-root state has a suffix link");
        for a in alphabet.symbols() {
            if sa.next(p, a).is_none() && sa.next(fail, a).is_some() {
                let mut m = sa.shortest(word, p).to_vec();
                m.push(a);
                out.push(Word::new(m));
            }
        }
    }
    Ok(MfwSet::from_parts(out, alphabet.clone(), SourceKind::Linear, Some(Word::from(word))))
}

/// Minimal forbidden factors of `word` straight from the definition: every
/// candidate `aub` with `u` a factor is tested against the factor set.
pub fn mfw_linear_bruteforce(word: &[Symbol], alphabet: &Alphabet) -> Result<MfwSet> {
    check_input(word, alphabet)?;
    if word.len() > MAX_BRUTE_FORCE_LEN {
        return Err(Error::GuardExceeded {
            what: "brute-force minimal forbidden factors",
            limit: MAX_BRUTE_FORCE_LEN,
            requested: word.len(),
        });
    }
    let n = word.len();
    let mut factors: HashSet<&[Symbol]> = HashSet::new();
    for i in 0..=n {
        for j in i..=n {
            factors.insert(&word[i..j]);
        }
    }
    let mut out = Vec::new();
    for x in alphabet.symbols() {
        if !factors.contains(&[x][..]) {
            out.push(Word::new(vec![x]));
        }
    }
    for &u in &factors {
        for a in alphabet.symbols() {
            for b in alphabet.symbols() {
                let au = [&[a][..], u].concat();
                let ub = [u, &[b][..]].concat();
                let aub = [&[a][..], u, &[b][..]].concat();
                if factors.contains(au.as_slice())
                    && factors.contains(ub.as_slice())
                    && !factors.contains(aub.as_slice())
                {
                    out.push(Word::new(aub));
                }
            }
        }
    }
    Ok(MfwSet::from_parts(out, alphabet.clone(), SourceKind::Linear, Some(Word::from(word))))
}

/// Minimal forbidden factors of a circular word: those of `ww` of length at
/// most `|w|`, with `w` the canonical linearization.
pub fn mfw_circular(cw: &CircularWord, alphabet: &Alphabet) -> Result<MfwSet> {
    let w = cw.linearization();
    alphabet.check_word(w)?;
    let square = w.pow(2);
    let linear = mfw_linear(&square, alphabet)?;
    let words = linear.words.into_iter().filter(|m| m.len() <= w.len()).collect();
    Ok(MfwSet::from_parts(words, alphabet.clone(), SourceKind::Circular, Some(w.clone())))
}

/// Minimal forbidden factors of a circular word from the definition, using
/// circular membership, for candidates of length at most `max_len`.
pub fn mfw_circular_bruteforce(
    cw: &CircularWord,
    alphabet: &Alphabet,
    max_len: usize,
) -> Result<MfwSet> {
    let w = cw.linearization();
    alphabet.check_word(w)?;
    if w.len() > MAX_BRUTE_FORCE_LEN || max_len > 2 * MAX_BRUTE_FORCE_LEN {
        return Err(Error::GuardExceeded {
            what: "brute-force circular minimal forbidden factors",
            limit: MAX_BRUTE_FORCE_LEN,
            requested: w.len().max(max_len / 2),
        });
    }
    let mut out = Vec::new();
    for x in alphabet.symbols() {
        if !circular_factor_membership(cw, &[x]) {
            out.push(Word::new(vec![x]));
        }
    }
    if max_len >= 2 {
        for u in circular_factor_set(cw, max_len - 2)? {
            for a in alphabet.symbols() {
                for b in alphabet.symbols() {
                    let au = [&[a][..], &u].concat();
                    let ub = [&u[..], &[b][..]].concat();
                    let aub = [&[a][..], &u, &[b][..]].concat();
                    if circular_factor_membership(cw, &au)
                        && circular_factor_membership(cw, &ub)
                        && !circular_factor_membership(cw, &aub)
                    {
                        out.push(Word::new(aub));
                    }
                }
            }
        }
    }
    Ok(MfwSet::from_parts(out, alphabet.clone(), SourceKind::Circular, Some(w.clone())))
}

/// Size of a circular antidictionary against its lower and upper bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CardinalityReport {
    pub size: usize,
    /// `|A| - 1`.
    pub lower: i64,
    /// `|A| + (n - 1)|A(w)| - n`.
    pub upper: i64,
    pub lower_ok: bool,
    pub upper_ok: bool,
}

impl CardinalityReport {
    pub fn holds(&self) -> bool {
        self.lower_ok && self.upper_ok
    }

    pub fn lower_tight(&self) -> bool {
        self.size as i64 == self.lower
    }

    pub fn upper_tight(&self) -> bool {
        self.size as i64 == self.upper
    }
}

pub fn check_cardinality_bounds(cw: &CircularWord, alphabet: &Alphabet) -> Result<CardinalityReport> {
    let m = mfw_circular(cw, alphabet)?;
    let w = cw.linearization();
    let sigma = alphabet.len() as i64;
    let n = w.len() as i64;
    let used = w.iter().collect::<HashSet<_>>().len() as i64;
    let size = m.len();
    let lower = sigma - 1;
    let upper = sigma + (n - 1) * used - n;
    Ok(CardinalityReport {
        size,
        lower,
        upper,
        lower_ok: size as i64 >= lower,
        upper_ok: size as i64 <= upper,
    })
}

/// Words over `alphabet` of length at most `max_len` with no member of
/// `forbidden` as a factor, by extending words one letter at a time and
/// scanning suffixes.
pub fn words_avoiding(forbidden: &[Word], alphabet: &Alphabet, max_len: usize) -> Result<Vec<Word>> {
    if max_len > MAX_LANGUAGE_ORACLE_LEN {
        return Err(Error::GuardExceeded {
            what: "avoiding-words scan length",
            limit: MAX_LANGUAGE_ORACLE_LEN,
            requested: max_len,
        });
    }
    let set: HashSet<&[Symbol]> = forbidden.iter().map(|w| w.as_slice()).collect();
    if set.contains(&[][..]) {
        return Ok(Vec::new());
    }
    let mut out = vec![Word::empty()];
    let mut frontier = vec![Vec::<Symbol>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for a in alphabet.symbols() {
                let mut x = w.clone();
                x.push(a);
                if (0..x.len()).all(|i| !set.contains(&x[i..])) {
                    next.push(x);
                }
            }
        }
        out.extend(next.iter().cloned().map(Word::new));
        frontier = next;
    }
    out.sort_by(|a, b| shortlex(a, b));
    Ok(out)
}

/// Minimal forbidden factors, up to `max_len`, of the factorial closure of
/// the language generated by `generators`.
///
/// A word of length at most `max_len` is a factor of some product of
/// generators exactly when it is a factor of a product of length at most
/// `max_len + 2 * (longest generator - 1)`, so all such products are
/// enumerated and their factors collected.
pub fn language_mfw_bruteforce(
    generators: &[Word],
    alphabet: &Alphabet,
    max_len: usize,
) -> Result<Vec<Word>> {
    if max_len > MAX_LANGUAGE_ORACLE_LEN {
        return Err(Error::GuardExceeded {
            what: "language oracle length",
            limit: MAX_LANGUAGE_ORACLE_LEN,
            requested: max_len,
        });
    }
    let gens: Vec<&Word> = generators.iter().filter(|g| !g.is_empty()).collect();
    for g in &gens {
        alphabet.check_word(g)?;
    }
    let longest = gens.iter().map(|g| g.len()).max().unwrap_or(0);
    let bound = max_len + 2 * longest.saturating_sub(1);

    let mut factors: HashSet<Vec<Symbol>> = HashSet::new();
    let mut products: HashSet<Vec<Symbol>> = HashSet::from([Vec::new()]);
    let mut frontier = vec![Vec::<Symbol>::new()];
    while let Some(p) = frontier.pop() {
        for i in 0..=p.len() {
            for j in i..=p.len().min(i + max_len) {
                factors.insert(p[i..j].to_vec());
            }
        }
        for g in &gens {
            if p.len() + g.len() <= bound {
                let q = [p.as_slice(), g].concat();
                if products.insert(q.clone()) {
                    frontier.push(q);
                }
            }
        }
    }

    let member = |x: &[Symbol]| factors.contains(x);
    let mut out = Vec::new();
    for x in alphabet.symbols() {
        if !member(&[x]) {
            out.push(Word::new(vec![x]));
        }
    }
    for u in factors.iter().filter(|u| u.len() + 2 <= max_len) {
        for a in alphabet.symbols() {
            for b in alphabet.symbols() {
                let aub = [&[a][..], u, &[b][..]].concat();
                if member(&aub[..aub.len() - 1]) && member(&aub[1..]) && !member(&aub) {
                    out.push(Word::new(aub));
                }
            }
        }
    }
    out.sort_by(|a, b| shortlex(a, b));
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::binary()
    }

    fn w(s: &str) -> Word {
        ab().parse_word(s).unwrap()
    }

    fn rendered(m: &MfwSet) -> Vec<String> {
        m.rendered()
    }

    #[test]
    fn linear_aabbabb() {
        let m = mfw_linear(&w("aabbabb"), &ab()).unwrap();
        assert_eq!(rendered(&m), ["aaa", "aba", "baa", "bbb", "babba"]);
        assert!(m.validate().is_ok());
        assert!(m.same_set(&mfw_linear_bruteforce(&w("aabbabb"), &ab()).unwrap()));
    }

    #[test]
    fn linear_single_letters() {
        let m = mfw_linear(&w("a"), &ab()).unwrap();
        assert_eq!(rendered(&m), ["b", "aa"]);
        let unary = Alphabet::new(['a']).unwrap();
        let m = mfw_linear_bruteforce(&[0], &unary).unwrap();
        assert_eq!(m.rendered(), ["aa"]);
        assert!(mfw_linear(&[], &ab()).is_err());
        assert!(mfw_linear(&[0, 1], &unary).is_err());
    }

    #[test]
    fn linear_ab_n_a_family() {
        for n in 1..8 {
            let word = w(&format!("a{}a", "b".repeat(n)));
            let m = mfw_linear(&word, &ab()).unwrap();
            for i in 0..n {
                assert!(m.contains(&w(&format!("a{}a", "b".repeat(i)))), "n={n} i={i}");
            }
        }
    }

    #[test]
    fn circular_examples() {
        let cases: [(&str, &[&str]); 3] = [
            ("aabbabb", &["aaa", "aba", "bbb", "aabbaa", "babbab"]),
            ("aaababbb", &["aaaa", "aabb", "abaa", "abba", "baab", "baba", "bbab", "bbbb"]),
            ("aabbab", &["aaa", "bbb", "aaba", "abab", "babb", "bbaa"]),
        ];
        for (word, expected) in cases {
            let cw = CircularWord::new(w(word)).unwrap();
            let m = mfw_circular(&cw, &ab()).unwrap();
            let mut want: Vec<Word> = expected.iter().map(|s| w(s)).collect();
            want.sort_by(|a, b| shortlex(a, b));
            assert_eq!(m.words(), want.as_slice(), "{word}");
            let oracle = mfw_circular_bruteforce(&cw, &ab(), 2 * word.len()).unwrap();
            assert!(m.same_set(&oracle), "{word}");
            assert!(m.validate().is_ok());
        }
    }

    #[test]
    fn cardinality_examples() {
        let r = check_cardinality_bounds(&CircularWord::new(w("aaaaa")).unwrap(), &ab()).unwrap();
        assert_eq!((r.size, r.lower), (1, 1));
        assert!(r.holds() && r.lower_tight());
        let r = check_cardinality_bounds(&CircularWord::new(w("aaaab")).unwrap(), &ab()).unwrap();
        assert_eq!((r.size, r.upper), (5, 5));
        assert!(r.holds() && r.upper_tight());
        let abc = Alphabet::ternary();
        let r = check_cardinality_bounds(&CircularWord::new(abc.parse_word("abc").unwrap()).unwrap(), &abc)
            .unwrap();
        assert_eq!((r.size, r.upper), (6, 6));
    }

    #[test]
    fn avoiding_words_of_aa_ba() {
        let got = words_avoiding(&[w("aa"), w("ba")], &ab(), 2).unwrap();
        let want: Vec<Word> = ["", "a", "b", "ab", "bb"].iter().map(|s| w(s)).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn generated_language_has_unbounded_antidictionary() {
        let m = language_mfw_bruteforce(&[w("b"), w("aa")], &ab(), 13).unwrap();
        for n in 1..=5 {
            let x = w(&format!("b{}b", "a".repeat(2 * n + 1)));
            assert!(m.contains(&x), "n={n}");
        }
        assert!(!m.contains(&w("baab")));
    }

    #[test]
    fn json_round_trip() {
        let m = mfw_circular(&CircularWord::new(w("abaab")).unwrap(), &ab()).unwrap();
        let text = serde_json::to_string(&m.to_json()).unwrap();
        let back = MfwSet::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, m);
        assert!(text.contains("\"circular\":true"));
    }

    #[test]
    fn validate_rejects_non_members() {
        let bad = MfwSet::new(vec![w("ab"), w("b")], ab(), SourceKind::Linear, None).unwrap();
        assert!(bad.validate().is_err());
        let wrong = MfwSet::new(vec![w("aa")], ab(), SourceKind::Linear, Some(w("ab"))).unwrap();
        assert!(wrong.validate().is_ok());
        let wrong = MfwSet::new(vec![w("ab")], ab(), SourceKind::Linear, Some(w("ab"))).unwrap();
        assert!(wrong.validate().is_err());
    }
}
