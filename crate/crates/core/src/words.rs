//! Core word algebra over the alphabet `{0,1,2}`: square detection,
//! reversal, palindromes and letter permutations.
//!
//! All operations are pure functions on immutable values.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Number of letters in the alphabet.
pub const ALPHABET: u8 = 3;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("letter value {0} out of range (alphabet is {{0,1,2}})")]
    LetterOutOfRange(u8),
    #[error("invalid character {0:?} in word (expected digits 0, 1, 2)")]
    InvalidCharacter(char),
    #[error("permutation {0:?} is not a bijection of {{0,1,2}}")]
    NotABijection([u8; 3]),
}

/// A letter of the ternary alphabet, one of `0`, `1`, `2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u8);

impl Letter {
    pub fn new(value: u8) -> Result<Self, WordError> {
        if value < ALPHABET {
            Ok(Letter(value))
        } else {
            Err(WordError::LetterOutOfRange(value))
        }
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn all() -> [Letter; 3] {
        [Letter(0), Letter(1), Letter(2)]
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite word over `{0,1,2}`. The empty word is valid.
///
/// Words order lexicographically by letter sequence; the text form is the
/// plain digit string (`"012021"`), with the empty string denoting the
/// empty word.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    // invariant: every byte is < 3
    data: Vec<u8>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        Word {
            data: letters.into_iter().map(Letter::value).collect(),
        }
    }

    /// Builds a word from raw letter values, validating the range.
    pub fn from_values(values: &[u8]) -> Result<Self, WordError> {
        if let Some(&bad) = values.iter().find(|&&v| v >= ALPHABET) {
            return Err(WordError::LetterOutOfRange(bad));
        }
        Ok(Word {
            data: values.to_vec(),
        })
    }

    pub(crate) fn from_raw(data: Vec<u8>) -> Self {
        debug_assert!(data.iter().all(|&v| v < ALPHABET));
        Word { data }
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.data.iter().map(|&v| Letter(v))
    }

    pub(crate) fn bytes(&self) -> &[u8] {
        &self.data
    }

    /// The word read back to front.
    pub fn reverse(&self) -> Word {
        let mut data = self.data.clone();
        data.reverse();
        Word { data }
    }

    /// True iff the word equals its reversal.
    pub fn is_palindrome(&self) -> bool {
        let n = self.data.len();
        (0..n / 2).all(|i| self.data[i] == self.data[n - 1 - i])
    }

    /// True iff no non-empty `yy` occurs as a contiguous factor.
    pub fn is_square_free(&self) -> bool {
        is_square_free(&self.data)
    }

    /// Given square-free `self`, true iff `self·c` is square-free.
    ///
    /// Only squares whose second half ends at the appended letter need
    /// checking, which makes this the cheap inner test of letter-by-letter
    /// enumeration.
    pub fn extension_is_square_free(&self, c: Letter) -> bool {
        extension_is_square_free(&self.data, c.value())
    }

    /// Letterwise image under a permutation of the alphabet.
    pub fn permute(&self, p: &LetterPermutation) -> Word {
        Word {
            data: self.data.iter().map(|&v| p.map[v as usize]).collect(),
        }
    }

    /// The concatenation `self·other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Word { data }
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut data = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '0' => data.push(0),
                '1' => data.push(1),
                '2' => data.push(2),
                other => return Err(WordError::InvalidCharacter(other)),
            }
        }
        Ok(Word { data })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &v in &self.data {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// A bijection of the alphabet `{0,1,2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LetterPermutation {
    // map[v] is the image of letter v; invariant: a permutation of 0,1,2
    map: [u8; 3],
}

/// The cyclic permutation `0 -> 1 -> 2 -> 0`.
pub const TAU: LetterPermutation = LetterPermutation { map: [1, 2, 0] };

impl LetterPermutation {
    pub fn new(images: [u8; 3]) -> Result<Self, WordError> {
        let mut seen = [false; 3];
        for &v in &images {
            if v >= ALPHABET || seen[v as usize] {
                return Err(WordError::NotABijection(images));
            }
            seen[v as usize] = true;
        }
        Ok(LetterPermutation { map: images })
    }

    pub fn identity() -> Self {
        LetterPermutation { map: [0, 1, 2] }
    }

    pub fn apply(&self, l: Letter) -> Letter {
        Letter(self.map[l.value() as usize])
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &LetterPermutation) -> LetterPermutation {
        LetterPermutation {
            map: [
                self.map[other.map[0] as usize],
                self.map[other.map[1] as usize],
                self.map[other.map[2] as usize],
            ],
        }
    }

    /// All six permutations of the alphabet.
    pub fn all() -> Vec<LetterPermutation> {
        let mut out = Vec::with_capacity(6);
        for a in 0..3u8 {
            for b in 0..3u8 {
                if b == a {
                    continue;
                }
                let c = 3 - a - b;
                out.push(LetterPermutation { map: [a, b, c] });
            }
        }
        out
    }

    pub(crate) fn map_value(&self, v: u8) -> u8 {
        self.map[v as usize]
    }
}

/// Slice-level square-freeness check: every factor pair is tested, shortest
/// half-lengths first, with early exit on the first square found.
pub(crate) fn is_square_free(w: &[u8]) -> bool {
    find_square(w).is_none()
}

/// Returns the first square as `(start, half_len)`, scanning half-lengths in
/// increasing order and starts left to right.
pub(crate) fn find_square(w: &[u8]) -> Option<(usize, usize)> {
    let n = w.len();
    for half in 1..=n / 2 {
        for start in 0..=n - 2 * half {
            if w[start] == w[start + half]
                && w[start + 1..start + half] == w[start + half + 1..start + 2 * half]
            {
                return Some((start, half));
            }
        }
    }
    None
}

/// Extension check on raw bytes: assumes `w` square-free, tests whether
/// `w·c` is. Only squares ending at the final position are possible.
pub(crate) fn extension_is_square_free(w: &[u8], c: u8) -> bool {
    let n = w.len() + 1;
    for half in 1..=n / 2 {
        // w' = w·c; compare w'[n-2h..n-h] with w'[n-h..n], whose last letter is c
        if w[n - half - 1] == c && w[n - 2 * half..n - half - 1] == w[n - half..n - 2] {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    /// Independent oracle: substring comparison over every (start, half).
    fn oracle_square_free(s: &[u8]) -> bool {
        let n = s.len();
        for start in 0..n {
            for half in 1..=(n - start) / 2 {
                if s[start..start + half] == s[start + half..start + 2 * half] {
                    return false;
                }
            }
        }
        true
    }

    fn all_words(len: usize) -> Vec<Vec<u8>> {
        let mut out = vec![vec![]];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|base| {
                    (0..3u8).map(move |l| {
                        let mut v = base.clone();
                        v.push(l);
                        v
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn square_free_examples() {
        assert!(w("").is_square_free());
        assert!(!w("0101").is_square_free());
        assert!(w("012021020102120210").is_square_free());
        // length-15 counterexample, confirmed by the oracle below
        let c = w("012102010201210");
        assert!(!oracle_square_free(c.bytes()));
        assert!(!c.is_square_free());
    }

    #[test]
    fn square_free_matches_oracle_exhaustively() {
        for len in 0..=10 {
            for v in all_words(len) {
                assert_eq!(
                    is_square_free(&v),
                    oracle_square_free(&v),
                    "mismatch on {v:?}"
                );
            }
        }
    }

    #[test]
    fn extension_examples() {
        let base = w("01");
        assert!(base.extension_is_square_free(Letter::new(0).unwrap()));
        assert!(!base.extension_is_square_free(Letter::new(1).unwrap()));
        // "0121021" + '0' = "01210210" contains the square of "210";
        // confirmed by the full check on the extension
        let x = w("0121021");
        assert!(x.is_square_free());
        assert!(!x.extension_is_square_free(Letter::new(0).unwrap()));
        assert!(!w("01210210").is_square_free());
        // '2' extends fine: "01210212" has no square
        assert!(x.extension_is_square_free(Letter::new(2).unwrap()));
        assert!(w("01210212").is_square_free());
    }

    #[test]
    fn extension_agrees_with_full_check() {
        // exhaustive over all square-free words up to length 12 here;
        // the acceptance suite pushes this to length 20
        let mut stack = vec![vec![]];
        while let Some(v) = stack.pop() {
            for c in 0..3u8 {
                let ext = extension_is_square_free(&v, c);
                let mut full = v.clone();
                full.push(c);
                assert_eq!(ext, is_square_free(&full), "mismatch on {full:?}");
                if ext && full.len() < 12 {
                    stack.push(full);
                }
            }
        }
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(w("012").reverse(), w("210"));
        let pal = w("0121021201210");
        assert_eq!(pal.reverse(), pal);
        assert_eq!(
            w("012021020102120210").reverse(),
            w("012021201020120210")
        );
        assert_eq!(w("0120").reverse().reverse(), w("0120"));
    }

    #[test]
    fn palindrome_examples() {
        assert!(w("").is_palindrome());
        assert!(w("0121021201210").is_palindrome());
        assert!(!w("012021020102120210").is_palindrome());
    }

    #[test]
    fn permute_examples() {
        assert_eq!(w("012").permute(&TAU), w("120"));
        assert_eq!(
            w("012021020102120210").permute(&TAU),
            w("120102101210201021")
        );
        assert_eq!(
            w("120102101210201021").permute(&TAU),
            w("201210212021012102")
        );
    }

    #[test]
    fn tau_cubed_is_identity() {
        for len in 0..=7 {
            for v in all_words(len) {
                let word = Word::from_raw(v);
                assert_eq!(
                    word.permute(&TAU).permute(&TAU).permute(&TAU),
                    word
                );
            }
        }
        assert_eq!(TAU.compose(&TAU).compose(&TAU), LetterPermutation::identity());
    }

    #[test]
    fn square_freeness_invariant_under_reversal_and_permutation() {
        let perms = LetterPermutation::all();
        assert_eq!(perms.len(), 6);
        for len in 0..=9 {
            for v in all_words(len) {
                let word = Word::from_raw(v);
                let sf = word.is_square_free();
                assert_eq!(sf, word.reverse().is_square_free());
                for p in &perms {
                    assert_eq!(sf, word.permute(p).is_square_free());
                }
            }
        }
    }

    #[test]
    fn no_even_palindrome_is_square_free() {
        for half_len in 1..=8usize {
            for half in all_words(half_len) {
                let mut v = half.clone();
                v.extend(half.iter().rev());
                assert!(!is_square_free(&v));
            }
        }
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["", "0", "012", "0121021201210"] {
            assert_eq!(w(s).to_string(), s);
        }
        assert!(matches!(
            "01x".parse::<Word>(),
            Err(WordError::InvalidCharacter('x'))
        ));
        assert!(matches!(
            Word::from_values(&[0, 3]),
            Err(WordError::LetterOutOfRange(3))
        ));
    }

    #[test]
    fn permutation_validation() {
        assert!(LetterPermutation::new([1, 2, 0]).is_ok());
        assert!(matches!(
            LetterPermutation::new([1, 1, 0]),
            Err(WordError::NotABijection(_))
        ));
    }

    #[test]
    fn word_order_is_lexicographic() {
        assert!(w("0") < w("1"));
        assert!(w("01") < w("010"));
        assert!(w("012") < w("02"));
    }
}
