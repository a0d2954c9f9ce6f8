//! Alphabets, words and circular words, plus the brute-force language
//! primitives (factor sets, circular membership, balance, bispecial factors)
//! that the automaton-based modules are checked against.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// Index of a symbol in its [`Alphabet`]. Index order is alphabet order.
pub type Symbol = u8;

/// Cap on the number of (start, length) pairs the factor enumerators visit.
pub const MAX_FACTOR_PAIRS: usize = 1 << 22;

/// Longest word accepted by the quadratic brute-force oracles.
pub const MAX_BRUTE_FORCE_LEN: usize = 512;

/// An ordered set of distinct single-character symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    /// Builds an alphabet keeping the given order.
    pub fn new<I: IntoIterator<Item = char>>(symbols: I) -> Result<Self> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if symbols.len() > usize::from(u8::MAX) {
            return Err(Error::AlphabetTooLarge(symbols.len()));
        }
        let mut seen = HashSet::new();
        for &c in &symbols {
            if !seen.insert(c) {
                return Err(Error::DuplicateSymbol(c));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// The letters occurring in `text`, in character order.
    pub fn of_letters(text: &str) -> Result<Self> {
        let letters: BTreeSet<char> = text.chars().collect();
        Alphabet::new(letters)
    }

    /// `{a, b}`.
    pub fn binary() -> Self {
        Alphabet {
            symbols: vec!['a', 'b'],
        }
    }

    /// `{a, b, c}`.
    pub fn ternary() -> Self {
        Alphabet {
            symbols: vec!['a', 'b', 'c'],
        }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.symbols.len()).map(|i| i as Symbol)
    }

    pub fn chars(&self) -> &[char] {
        &self.symbols
    }

    pub fn char_of(&self, symbol: Symbol) -> Result<char> {
        self.symbols
            .get(usize::from(symbol))
            .copied()
            .ok_or(Error::SymbolOutOfRange(symbol))
    }

    pub fn index_of(&self, c: char) -> Result<Symbol> {
        self.symbols
            .iter()
            .position(|&s| s == c)
            .map(|i| i as Symbol)
            .ok_or(Error::UnknownSymbol(c))
    }

    pub fn contains_symbol(&self, symbol: Symbol) -> bool {
        usize::from(symbol) < self.symbols.len()
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        text.chars()
            .map(|c| self.index_of(c))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    /// Renders a word; symbols outside the alphabet print as `?`.
    pub fn render(&self, word: &[Symbol]) -> String {
        word.iter()
            .map(|&s| self.symbols.get(usize::from(s)).copied().unwrap_or('?'))
            .collect()
    }

    /// Fails unless every symbol of `word` belongs to this alphabet.
    pub fn check_word(&self, word: &[Symbol]) -> Result<()> {
        match word.iter().find(|&&s| !self.contains_symbol(s)) {
            Some(&s) => Err(Error::SymbolOutOfRange(s)),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.symbols {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A finite word as a sequence of symbol indices.
///
/// The derived `Ord` is the lexicographic order induced by the alphabet;
/// [`shortlex`] gives the (length, lexicographic) order used for output.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn as_slice(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Symbol> {
        self.0
    }

    pub fn concat(&self, other: &[Symbol]) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(other);
        Word(v)
    }

    pub fn pow(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    pub fn rotation(&self, shift: usize) -> Word {
        if self.0.is_empty() {
            return Word::empty();
        }
        let shift = shift % self.0.len();
        let mut v = Vec::with_capacity(self.0.len());
        v.extend_from_slice(&self.0[shift..]);
        v.extend_from_slice(&self.0[..shift]);
        Word(v)
    }

    /// Whether `self` occurs as a contiguous block of `text`.
    pub fn is_factor_of(&self, text: &[Symbol]) -> bool {
        self.0.is_empty() || text.windows(self.0.len()).any(|win| win == self.0.as_slice())
    }
}

impl Deref for Word {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl From<&[Symbol]> for Word {
    fn from(s: &[Symbol]) -> Self {
        Word(s.to_vec())
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Debug output assumes the letters a, b, c, ...
        let s: String = self
            .0
            .iter()
            .map(|&c| if c < 26 { (b'a' + c) as char } else { '?' })
            .collect();
        write!(f, "Word({s:?})")
    }
}

/// Order by length first, then lexicographically.
pub fn shortlex(a: &[Symbol], b: &[Symbol]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// The conjugacy class of a primitive word, stored as its least rotation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CircularWord {
    canonical: Word,
    exponent: usize,
}

impl CircularWord {
    /// Builds `[w]`. A non-primitive `w = v^k` is reduced to `[v]`, and the
    /// exponent `k` is kept so callers can tell a reduction happened.
    pub fn new(word: Word) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::EmptyWord);
        }
        let root = primitive_root(&word)?;
        let exponent = word.len() / root.len();
        Ok(CircularWord {
            canonical: canonical_rotation(&root),
            exponent,
        })
    }

    /// The least rotation of the primitive root.
    pub fn linearization(&self) -> &Word {
        &self.canonical
    }

    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `k` when the constructor received `v^k`; 1 for primitive input.
    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn was_reduced(&self) -> bool {
        self.exponent > 1
    }

    pub fn rotations(&self) -> impl Iterator<Item = Word> + '_ {
        (0..self.canonical.len()).map(|i| self.canonical.rotation(i))
    }
}

pub fn reversal(word: &[Symbol]) -> Word {
    Word(word.iter().rev().copied().collect())
}

/// `|w|_x`.
pub fn count_occurrences(alphabet: &Alphabet, x: Symbol, word: &[Symbol]) -> Result<usize> {
    if !alphabet.contains_symbol(x) {
        return Err(Error::SymbolOutOfRange(x));
    }
    Ok(word.iter().filter(|&&s| s == x).count())
}

/// All distinct factors of `word` of length at most `max_len`, including ε.
pub fn factor_set(word: &[Symbol], max_len: usize) -> Result<BTreeSet<Word>> {
    let n = word.len();
    let max_len = max_len.min(n);
    let pairs = n.saturating_mul(max_len);
    if pairs > MAX_FACTOR_PAIRS {
        return Err(Error::GuardExceeded {
            what: "factor enumeration",
            limit: MAX_FACTOR_PAIRS,
            requested: pairs,
        });
    }
    let mut out = BTreeSet::new();
    out.insert(Word::empty());
    for start in 0..n {
        for len in 1..=max_len.min(n - start) {
            out.insert(Word::from(&word[start..start + len]));
        }
    }
    Ok(out)
}

/// Length of the longest proper border of each prefix (KMP failure table).
pub(crate) fn border_table(word: &[Symbol]) -> Vec<usize> {
    let mut border = vec![0; word.len()];
    let mut k = 0;
    for i in 1..word.len() {
        while k > 0 && word[i] != word[k] {
            k = border[k - 1];
        }
        if word[i] == word[k] {
            k += 1;
        }
        border[i] = k;
    }
    border
}

/// Shortest `v` with `word = v^k`.
pub fn primitive_root(word: &[Symbol]) -> Result<Word> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    let n = word.len();
    let period = n - border_table(word)[n - 1];
    let root_len = if n.is_multiple_of(period) { period } else { n };
    Ok(Word::from(&word[..root_len]))
}

pub fn is_primitive(word: &[Symbol]) -> Result<bool> {
    Ok(primitive_root(word)?.len() == word.len())
}

/// Offset of the lexicographically least rotation (Booth's algorithm).
pub fn least_rotation_offset(word: &[Symbol]) -> usize {
    let n = word.len();
    if n == 0 {
        return 0;
    }
    let at = |j: usize| word[j % n];
    let mut fail: Vec<isize> = vec![-1; 2 * n];
    let mut k: usize = 0;
    for j in 1..2 * n {
        let c = at(j);
        let mut i = fail[j - k - 1];
        while i != -1 && c != at(k + i as usize + 1) {
            if c < at(k + i as usize + 1) {
                k = j - i as usize - 1;
            }
            i = fail[i as usize];
        }
        // here i == -1 or the characters match
        if i == -1 && c != at(k) {
            if c < at(k) {
                k = j;
            }
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    k % n
}

/// Least rotation under the alphabet order.
pub fn canonical_rotation(word: &[Symbol]) -> Word {
    Word::from(word).rotation(least_rotation_offset(word))
}

/// Whether `x` is a factor of some power of the linearization.
pub fn circular_factor_membership(cw: &CircularWord, x: &[Symbol]) -> bool {
    let w = cw.linearization();
    let k = x.len().div_ceil(w.len()) + 1;
    Word::from(x).is_factor_of(&w.pow(k))
}

/// Factors of `[w]` of length at most `max_len`, including ε.
pub fn circular_factor_set(cw: &CircularWord, max_len: usize) -> Result<BTreeSet<Word>> {
    let w = cw.linearization();
    let k = max_len.div_ceil(w.len()) + 1;
    factor_set(&w.pow(k), max_len)
}

fn require_binary(alphabet: &Alphabet, word: &[Symbol]) -> Result<()> {
    if alphabet.len() != 2 {
        return Err(Error::NotBinary(alphabet.len()));
    }
    alphabet.check_word(word)
}

/// Whether any two factors of equal length differ by at most one in their
/// number of `a`s.
///
/// Uses the palindrome criterion: a binary word is unbalanced exactly when
/// it has a palindrome `p` with both `apa` and `bpb` as factors. Palindromic
/// factors are enumerated with a palindromic tree, so the test is linear.
pub fn is_balanced(alphabet: &Alphabet, word: &[Symbol]) -> Result<bool> {
    require_binary(alphabet, word)?;

    struct Node {
        len: isize,
        link: usize,
        next: [u32; 2],
        // letters x for which x·self·x is a factor
        wrapped: [bool; 2],
    }
    const NIL: u32 = u32::MAX;
    let mut nodes = vec![
        Node { len: -1, link: 0, next: [NIL; 2], wrapped: [false; 2] },
        Node { len: 0, link: 0, next: [NIL; 2], wrapped: [false; 2] },
    ];
    let mut last = 1usize;
    for (i, &c) in word.iter().enumerate() {
        let c = usize::from(c);
        let fits = |nodes: &Vec<Node>, v: usize| {
            let l = nodes[v].len;
            let j = i as isize - l - 1;
            j >= 0 && usize::from(word[j as usize]) == c
        };
        let mut cur = last;
        while !fits(&nodes, cur) {
            cur = nodes[cur].link;
        }
        if nodes[cur].next[c] != NIL {
            last = nodes[cur].next[c] as usize;
            continue;
        }
        let len = nodes[cur].len + 2;
        let link = if len == 1 {
            1
        } else {
            let mut v = nodes[cur].link;
            while !fits(&nodes, v) {
                v = nodes[v].link;
            }
            nodes[v].next[c] as usize
        };
        let id = nodes.len();
        nodes.push(Node { len, link, next: [NIL; 2], wrapped: [false; 2] });
        nodes[cur].next[c] = id as u32;
        if nodes[cur].len >= 0 {
            nodes[cur].wrapped[c] = true;
            if nodes[cur].wrapped == [true, true] {
                return Ok(false);
            }
        }
        last = id;
    }
    Ok(true)
}

/// Direct check of the balance condition over every factor length.
pub fn is_balanced_bruteforce(alphabet: &Alphabet, word: &[Symbol]) -> Result<bool> {
    require_binary(alphabet, word)?;
    let mut prefix = vec![0usize; word.len() + 1];
    for (i, &s) in word.iter().enumerate() {
        prefix[i + 1] = prefix[i] + usize::from(s == 0);
    }
    for len in 1..=word.len() {
        let counts = (0..=word.len() - len).map(|i| prefix[i + len] - prefix[i]);
        let (lo, hi) = counts.fold((usize::MAX, 0), |(lo, hi), c| (lo.min(c), hi.max(c)));
        if hi - lo > 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Factors `v` with `av`, `bv`, `va`, `vb` all factors of `word`, by
/// exhaustive enumeration.
pub fn bispecial_factors(alphabet: &Alphabet, word: &[Symbol]) -> Result<BTreeSet<Word>> {
    require_binary(alphabet, word)?;
    if word.len() > MAX_BRUTE_FORCE_LEN {
        return Err(Error::GuardExceeded {
            what: "brute-force bispecial factors",
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
    let mut out = BTreeSet::new();
    for &v in &factors {
        let extended = |left: bool, x: Symbol| {
            let mut e = Vec::with_capacity(v.len() + 1);
            if left {
                e.push(x);
                e.extend_from_slice(v);
            } else {
                e.extend_from_slice(v);
                e.push(x);
            }
            factors.contains(e.as_slice())
        };
        if [0, 1].iter().all(|&x| extended(true, x) && extended(false, x)) {
            out.insert(Word::from(v));
        }
    }
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

    #[test]
    fn alphabet_rejects_bad_input() {
        assert!(matches!(Alphabet::new([]), Err(Error::EmptyAlphabet)));
        assert!(matches!(Alphabet::new("aba".chars()), Err(Error::DuplicateSymbol('a'))));
        assert_eq!(Alphabet::of_letters("bab").unwrap().chars(), &['a', 'b']);
        assert!(matches!(ab().parse_word("abc"), Err(Error::UnknownSymbol('c'))));
    }

    #[test]
    fn reversal_examples() {
        assert_eq!(reversal(&w("aabbabb")), w("bbabbaa"));
        assert_eq!(reversal(&w("")), w(""));
        assert_eq!(reversal(&w("aba")), w("aba"));
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_occurrences(&ab(), 0, &w("aabbabb")).unwrap(), 3);
        assert_eq!(count_occurrences(&ab(), 1, &w("")).unwrap(), 0);
        assert_eq!(count_occurrences(&ab(), 0, &w("abaab")).unwrap(), 3);
        assert!(count_occurrences(&ab(), 2, &w("ab")).is_err());
    }

    #[test]
    fn factor_set_examples() {
        let got = factor_set(&w("ab"), 2).unwrap();
        let want: BTreeSet<Word> = ["", "a", "b", "ab"].iter().map(|s| w(s)).collect();
        assert_eq!(got, want);
        assert_eq!(factor_set(&w("aab"), 1).unwrap().len(), 3);
        // 11 nonempty factors plus ε
        assert_eq!(factor_set(&w("abaab"), 5).unwrap().len(), 12);
    }

    #[test]
    fn primitive_examples() {
        assert!(!is_primitive(&w("abab")).unwrap());
        assert_eq!(primitive_root(&w("abab")).unwrap(), w("ab"));
        assert!(is_primitive(&w("abaab")).unwrap());
        assert_eq!(primitive_root(&w("aaa")).unwrap(), w("a"));
        assert!(matches!(primitive_root(&w("")), Err(Error::EmptyWord)));
    }

    #[test]
    fn canonical_rotation_examples() {
        assert_eq!(canonical_rotation(&w("bab")), w("abb"));
        assert_eq!(canonical_rotation(&w("aabbabb")), w("aabbabb"));
        assert_eq!(canonical_rotation(&w("aaa")), w("aaa"));
    }

    #[test]
    fn circular_word_reduces_powers() {
        let cw = CircularWord::new(w("babaab").pow(2)).unwrap();
        assert_eq!(cw.linearization(), &w("aabbab"));
        assert_eq!(cw.exponent(), 2);
        assert!(cw.was_reduced());
        assert!(CircularWord::new(Word::empty()).is_err());
    }

    #[test]
    fn circular_membership_examples() {
        let ab_c = CircularWord::new(w("ab")).unwrap();
        assert!(circular_factor_membership(&ab_c, &w("abab")));
        assert!(!circular_factor_membership(&ab_c, &w("aa")));
        let c = CircularWord::new(w("aabbabb")).unwrap();
        assert!(circular_factor_membership(&c, &w("babba")));
    }

    #[test]
    fn circular_factor_set_examples() {
        let got = circular_factor_set(&CircularWord::new(w("ab")).unwrap(), 3).unwrap();
        let want: BTreeSet<Word> =
            ["", "a", "b", "ab", "ba", "aba", "bab"].iter().map(|s| w(s)).collect();
        assert_eq!(got, want);
        let a = CircularWord::new(w("a")).unwrap();
        assert_eq!(circular_factor_set(&a, 2).unwrap().len(), 3);
        let f5 = CircularWord::new(w("abaab")).unwrap();
        assert_eq!(circular_factor_set(&f5, 5).unwrap().len(), 20);
    }

    #[test]
    fn balanced_examples() {
        for (s, want) in [("abaab", true), ("aabb", false), ("", true), ("abaababa", true)] {
            assert_eq!(is_balanced(&ab(), &w(s)).unwrap(), want, "{s}");
            assert_eq!(is_balanced_bruteforce(&ab(), &w(s)).unwrap(), want, "{s}");
        }
        assert!(matches!(
            is_balanced(&Alphabet::ternary(), &[0]),
            Err(Error::NotBinary(3))
        ));
    }

    #[test]
    fn bispecial_examples() {
        let set = |xs: &[&str]| xs.iter().map(|s| w(s)).collect::<BTreeSet<_>>();
        assert_eq!(bispecial_factors(&ab(), &w("abaaba")).unwrap(), set(&["", "a"]));
        assert_eq!(
            bispecial_factors(&ab(), &w("abaababaab")).unwrap(),
            set(&["", "a", "aba"])
        );
        assert!(bispecial_factors(&ab(), &w("aaaa")).unwrap().is_empty());
    }
}
