//! Exhaustive word corpora for the property sweeps.

use crate::words::{Symbol, Word};

/// Every nonempty word over `0..sigma` of length at most `max_len`, shorter
/// words first, lexicographic within a length.
pub fn all_words(sigma: usize, max_len: usize) -> impl Iterator<Item = Word> {
    (1..=max_len).flat_map(move |len| words_of_length(sigma, len))
}

/// Every word over `0..sigma` of length exactly `len`, in lexicographic order.
pub fn words_of_length(sigma: usize, len: usize) -> impl Iterator<Item = Word> {
    let total = (sigma as u64).checked_pow(len as u32).expect("corpus size fits in u64");
    (0..total).map(move |mut code| {
        let mut w = vec![0 as Symbol; len];
        for slot in w.iter_mut().rev() {
            *slot = (code % sigma as u64) as Symbol;
            code /= sigma as u64;
        }
        Word::new(w)
    })
}

/// Lyndon words over `0..sigma` of length at most `max_len`, in
/// lexicographic order (Duval's generation algorithm). These are the
/// canonical linearizations of the primitive circular words.
pub fn lyndon_words(sigma: usize, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if sigma == 0 || max_len == 0 {
        return out;
    }
    let top = (sigma - 1) as Symbol;
    let mut w: Vec<Symbol> = vec![0];
    loop {
        out.push(Word::new(w.clone()));
        let period = w.len();
        while w.len() < max_len {
            w.push(w[w.len() - period]);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{canonical_rotation, is_primitive};

    #[test]
    fn corpus_sizes() {
        assert_eq!(all_words(2, 12).count(), (1 << 13) - 2);
        assert_eq!(all_words(3, 3).count(), 3 + 9 + 27);
    }

    #[test]
    fn lyndon_counts() {
        // binary Lyndon words by length: 2 1 2 3 6 9 18 30 56 99 186 335
        assert_eq!(lyndon_words(2, 12).len(), 747);
        assert_eq!(lyndon_words(3, 7).len(), 3 + 3 + 8 + 18 + 48 + 116 + 312);
    }

    #[test]
    fn lyndon_words_are_canonical_primitive_words() {
        let mut expected: Vec<Word> = all_words(2, 9)
            .filter(|w| is_primitive(w).unwrap() && canonical_rotation(w) == *w)
            .collect();
        expected.sort();
        let mut got = lyndon_words(2, 9);
        got.sort();
        assert_eq!(got, expected);
    }
}
