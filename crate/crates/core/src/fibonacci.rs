//! Fibonacci words, their central and singular words, and the end-to-end
//! check of the antidictionaries of circular Fibonacci words.
//!
//! Over `{a, b}`: `f_1 = b`, `f_2 = a`, `f_n = f_{n-1} f_{n-2}`. For `n >= 3`,
//! `f_n = u_n xy` with `u_n` a palindrome and `xy = ab` (n odd) or `ba`
//! (n even). The singular word is `f̂_n = x u_n x` and `ĝ_n` swaps its outer
//! letters.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor_automaton::{bispecial_factors_fast, build_factor_automaton};
use crate::l_automaton::circular_factor_dfa;
use crate::mfw::{mfw_circular, MfwSet, SourceKind};
use crate::words::{is_balanced, reversal, Alphabet, CircularWord, Symbol, Word};

/// Largest index accepted by [`fibonacci_family`] and [`verify_fibonacci`]
/// (`F_30 = 832040`).
pub const MAX_FIBONACCI_INDEX: usize = 30;

const A: Symbol = 0;
const B: Symbol = 1;

/// `F_n` with `F_1 = F_2 = 1`.
pub fn fibonacci_number(n: usize) -> u64 {
    let (mut x, mut y) = (1u64, 1u64);
    for _ in 2..n.max(1) {
        (x, y) = (y, x + y);
    }
    if n <= 1 {
        1
    } else {
        y
    }
}

/// `f_n` together with its companion words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibonacciFamily {
    pub n: usize,
    pub f: Word,
    /// `u_n`, defined for `n >= 3`.
    pub central: Option<Word>,
    /// `f̂_n`, defined for `n >= 3`.
    pub f_hat: Option<Word>,
    /// `ĝ_n`, defined for `n >= 3`.
    pub g_hat: Option<Word>,
}

impl FibonacciFamily {
    /// `F_n = |f_n|`.
    pub fn length(&self) -> usize {
        self.f.len()
    }
}

fn check_index(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::IndexTooSmall { index: n, min });
    }
    if n > MAX_FIBONACCI_INDEX {
        return Err(Error::GuardExceeded {
            what: "Fibonacci index",
            limit: MAX_FIBONACCI_INDEX,
            requested: n,
        });
    }
    Ok(())
}

/// `f_n` by the defining recursion.
pub fn fibonacci_word(n: usize) -> Result<Word> {
    check_index(n, 1)?;
    let (mut prev, mut cur) = (vec![B], vec![A]);
    if n == 1 {
        return Ok(Word::new(prev));
    }
    for _ in 2..n {
        let next = [cur.as_slice(), prev.as_slice()].concat();
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(Word::new(cur))
}

pub fn fibonacci_family(n: usize) -> Result<FibonacciFamily> {
    let f = fibonacci_word(n)?;
    let (central, f_hat, g_hat) = if n >= 3 {
        let u = Word::from(&f[..f.len() - 2]);
        let (x, y) = if n % 2 == 1 { (A, B) } else { (B, A) };
        let f_hat = Word::new([&[x][..], &u, &[x]].concat());
        let g_hat = Word::new([&[y][..], &u, &[y]].concat());
        (Some(u), Some(f_hat), Some(g_hat))
    } else {
        (None, None, None)
    };
    Ok(FibonacciFamily { n, f, central, f_hat, g_hat })
}

/// Checks `f_n = u_n xy = u_{n-1} yx u_{n-2} xy = u_{n-2} xy u_{n-1} xy`.
pub fn verify_central_identity(n: usize) -> Result<bool> {
    check_index(n, 5)?;
    let fam = fibonacci_family(n)?;
    let u = |k: usize| -> Result<Word> {
        Ok(fibonacci_family(k)?.central.expect("k >= 3"))
    };
    let (un, un1, un2) = (u(n)?, u(n - 1)?, u(n - 2)?);
    let (x, y) = if n % 2 == 1 { (A, B) } else { (B, A) };
    let xy = [x, y];
    let yx = [y, x];
    let first = [un.as_slice(), &xy].concat();
    let second = [un1.as_slice(), &yx, &un2, &xy].concat();
    let third = [un2.as_slice(), &xy, &un1, &xy].concat();
    let f = fam.f.as_slice();
    Ok(first == f && second == f && third == f)
}

/// `{ĝ_3, …, ĝ_n, f̂_n}` for `n >= 4`; `{a}`, `{b}`, `{aa, bb}` for
/// `n = 1, 2, 3`.
pub fn mfw_fibonacci_closed_form(n: usize) -> Result<MfwSet> {
    check_index(n, 1)?;
    let words = match n {
        1 => vec![Word::new(vec![A])],
        2 => vec![Word::new(vec![B])],
        3 => vec![Word::new(vec![A, A]), Word::new(vec![B, B])],
        _ => {
            let mut ws = Vec::with_capacity(n - 1);
            for i in 3..=n {
                ws.push(fibonacci_family(i)?.g_hat.expect("i >= 3"));
            }
            ws.push(fibonacci_family(n)?.f_hat.expect("n >= 3"));
            ws
        }
    };
    MfwSet::new(words, Alphabet::binary(), SourceKind::Circular, None)
}

/// Longest prefix of `word` with a second occurrence (Z-function).
pub fn longest_repeated_prefix(word: &[Symbol]) -> usize {
    let n = word.len();
    let mut z = vec![0usize; n];
    let (mut l, mut r) = (0usize, 0usize);
    let mut best = 0;
    for i in 1..n {
        if i < r {
            z[i] = (r - i).min(z[i - l]);
        }
        while i + z[i] < n && word[z[i]] == word[i + z[i]] {
            z[i] += 1;
        }
        if i + z[i] > r {
            l = i;
            r = i + z[i];
        }
        best = best.max(z[i]);
    }
    best
}

/// Outcome of every structural check for one index.
#[derive(Clone, Debug, Serialize)]
pub struct FibonacciReport {
    pub n: usize,
    pub length: usize,
    pub mfw_count: usize,
    pub mfw: Vec<String>,
    /// Circular antidictionary equals the closed form.
    pub closed_form: bool,
    /// Bispecial factors of `f_n f_n` are `u_3, …, u_n` (n >= 3).
    pub bispecials: bool,
    /// `|M| = n - 1` (n >= 4).
    pub cardinality: bool,
    pub circular_states: usize,
    /// Circular factor automaton has `2F_n - 1` states (n >= 3).
    pub circular_states_ok: bool,
    pub linear_states: usize,
    /// Linear factor automaton has `F_n + 1` states.
    pub linear_states_ok: bool,
    /// `f_n f_n` is balanced.
    pub balanced: bool,
    /// Longest repeated prefix of `u_n xy u_n` is `u_n` (n >= 3).
    pub repeated_prefix: bool,
    /// `u_n` is a palindrome and `f̂_n`, `ĝ_n` differ exactly at both ends
    /// (n >= 3).
    pub singular_shape: bool,
}

impl FibonacciReport {
    pub fn passed(&self) -> bool {
        self.closed_form
            && self.bispecials
            && self.cardinality
            && self.circular_states_ok
            && self.linear_states_ok
            && self.balanced
            && self.repeated_prefix
            && self.singular_shape
    }
}

pub fn verify_fibonacci(n: usize) -> Result<FibonacciReport> {
    check_index(n, 1)?;
    let ab = Alphabet::binary();
    let fam = fibonacci_family(n)?;
    let len = fam.length();
    let cw = CircularWord::new(fam.f.clone())?;
    let m = mfw_circular(&cw, &ab)?;
    let closed = mfw_fibonacci_closed_form(n)?;
    let square = fam.f.pow(2);

    let bispecials = if n >= 3 {
        let want: BTreeSet<Word> = (3..=n)
            .map(|i| fibonacci_family(i).map(|f| f.central.expect("i >= 3")))
            .collect::<Result<_>>()?;
        bispecial_factors_fast(&ab, &square)? == want
    } else {
        true
    };

    let circular_states = circular_factor_dfa(&cw, &ab)?.num_states();
    let linear_states = build_factor_automaton(&fam.f, &ab)?.num_states();

    let (repeated_prefix, singular_shape) = match (&fam.central, &fam.f_hat, &fam.g_hat) {
        (Some(u), Some(fh), Some(gh)) => {
            let xy = &fam.f[len - 2..];
            let probe = [u.as_slice(), xy, u].concat();
            let differs: Vec<usize> =
                (0..fh.len()).filter(|&i| fh[i] != gh[i]).collect();
            let shape = reversal(u) == *u
                && fh.len() >= 2
                && differs == [0, fh.len() - 1]
                && fh[1..fh.len() - 1] == u[..]
                && gh[1..gh.len() - 1] == u[..];
            (longest_repeated_prefix(&probe) == u.len(), shape)
        }
        _ => (true, true),
    };

    Ok(FibonacciReport {
        n,
        length: len,
        mfw_count: m.len(),
        mfw: m.rendered(),
        closed_form: m.same_set(&closed),
        bispecials,
        cardinality: n < 4 || m.len() == n - 1,
        circular_states,
        circular_states_ok: n < 3 || circular_states == 2 * len - 1,
        linear_states,
        linear_states_ok: linear_states == len + 1,
        balanced: is_balanced(&ab, &square)?,
        repeated_prefix,
        singular_shape,
    })
}
