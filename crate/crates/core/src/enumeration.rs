//! Backtracking enumeration and counting of square-free words, including the
//! head/tail-restricted families `A1(n)` and `A2(n)` and their palindrome
//! statistics.
//!
//! Enumeration extends words letter by letter, checking that each new letter
//! does not create a square. Counting is sharded over fixed prefixes so
//! subtrees can run in parallel; results are deterministic sums, independent
//! of the shard depth and of the number of worker threads.

use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::words::{extension_is_square_free, Word, WordError, ALPHABET};

/// Default prefix depth at which the counting DFS is split into parallel
/// subtree tasks.
pub const DEFAULT_SPLIT_DEPTH: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("count exceeds the 64-bit register (length beyond supported range)")]
    CountOverflow,
    #[error("family {family} requires length >= {min}, got {n}")]
    LengthBelowMinimum {
        family: Family,
        min: usize,
        n: usize,
    },
    #[error("count table is missing a(n) for n = {0}")]
    MissingCount(usize),
    #[error("word list is not sorted at line {0}")]
    UnsortedWordList(usize),
    #[error(transparent)]
    BadWord(#[from] WordError),
}

/// Word family selector: the full language or one of the two restricted
/// head/tail families.
///
/// `A1` fixes prefix `012021` and suffix `120210`; `A2` fixes prefix
/// `012102` and suffix `201210`. Both require length at least 13.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "ALL")]
    All,
    A1,
    A2,
}

/// Fixed head/tail length of the restricted families.
const AFFIX_LEN: usize = 6;

impl Family {
    /// Minimum word length admitted by the restricted families.
    pub const MIN_RESTRICTED_LEN: usize = 13;

    pub fn prefix(self) -> Option<&'static [u8]> {
        match self {
            Family::All => None,
            Family::A1 => Some(&[0, 1, 2, 0, 2, 1]),
            Family::A2 => Some(&[0, 1, 2, 1, 0, 2]),
        }
    }

    pub fn suffix(self) -> Option<&'static [u8]> {
        match self {
            Family::All => None,
            Family::A1 => Some(&[1, 2, 0, 2, 1, 0]),
            Family::A2 => Some(&[2, 0, 1, 2, 1, 0]),
        }
    }

    /// True iff `w` carries this family's head and tail (vacuously true for
    /// `All`). Does not test square-freeness.
    pub fn matches(self, w: &Word) -> bool {
        match (self.prefix(), self.suffix()) {
            (Some(p), Some(s)) => {
                w.len() >= Self::MIN_RESTRICTED_LEN
                    && w.bytes().starts_with(p)
                    && w.bytes().ends_with(s)
            }
            _ => true,
        }
    }

    fn check_len(self, n: usize) -> Result<(), EnumerationError> {
        match self {
            Family::All => Ok(()),
            _ if n >= Self::MIN_RESTRICTED_LEN => Ok(()),
            _ => Err(EnumerationError::LengthBelowMinimum {
                family: self,
                min: Self::MIN_RESTRICTED_LEN,
                n,
            }),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::All => write!(f, "ALL"),
            Family::A1 => write!(f, "A1"),
            Family::A2 => write!(f, "A2"),
        }
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "ALL" => Ok(Family::All),
            "A1" => Ok(Family::A1),
            "A2" => Ok(Family::A2),
            other => Err(format!("unknown family {other:?} (expected ALL, A1 or A2)")),
        }
    }
}

/// Enumeration statistics of one family at one length: the total count, the
/// number of palindromes and the number of non-palindromic reversal pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyStats {
    pub n: usize,
    pub total: u64,
    pub palindromes: u64,
    pub pairs: u64,
}

impl FamilyStats {
    fn new(n: usize, total: u64, palindromes: u64) -> Self {
        debug_assert!((total - palindromes) % 2 == 0);
        debug_assert!(n % 2 == 1 || palindromes == 0);
        FamilyStats {
            n,
            total,
            palindromes,
            pairs: (total - palindromes) / 2,
        }
    }
}

fn checked_inc(slot: &mut u64) -> Result<(), EnumerationError> {
    *slot = slot
        .checked_add(1)
        .ok_or(EnumerationError::CountOverflow)?;
    Ok(())
}

/// Counts square-free extensions of `buf`, incrementing `counts[len]` for
/// every square-free word of each length reached.
fn dfs_count(
    buf: &mut Vec<u8>,
    max_n: usize,
    counts: &mut [u64],
) -> Result<(), EnumerationError> {
    if buf.len() >= max_n {
        return Ok(());
    }
    for c in 0..ALPHABET {
        if extension_is_square_free(buf, c) {
            buf.push(c);
            checked_inc(&mut counts[buf.len()])?;
            dfs_count(buf, max_n, counts)?;
            buf.pop();
        }
    }
    Ok(())
}

/// Collects all square-free words of length exactly `depth` extending `buf`.
fn dfs_collect_prefixes(buf: &mut Vec<u8>, depth: usize, out: &mut Vec<Vec<u8>>) {
    if buf.len() == depth {
        out.push(buf.clone());
        return;
    }
    for c in 0..ALPHABET {
        if extension_is_square_free(buf, c) {
            buf.push(c);
            dfs_collect_prefixes(buf, depth, out);
            buf.pop();
        }
    }
}

/// Exact counts `a(0) ..= a(max_n)`, splitting the search into parallel
/// subtree tasks at `split_depth` letters.
///
/// The result is independent of the split depth and of the number of
/// threads; overflow of the 64-bit counters is reported as an error rather
/// than wrapping.
pub fn count_square_free_upto_sharded(
    max_n: usize,
    split_depth: usize,
) -> Result<Vec<u64>, EnumerationError> {
    let mut counts = vec![0u64; max_n + 1];
    counts[0] = 1; // the empty word
    let depth = split_depth.min(max_n);
    if depth == 0 || max_n <= depth {
        let mut buf = Vec::with_capacity(max_n);
        dfs_count(&mut buf, max_n, &mut counts)?;
        return Ok(counts);
    }

    // counts below the split depth come from the shard enumeration itself
    let mut buf = Vec::with_capacity(max_n);
    dfs_count(&mut buf, depth, &mut counts)?;
    let mut shards = Vec::new();
    dfs_collect_prefixes(&mut buf, depth, &mut shards);
    debug_assert_eq!(shards.len() as u64, counts[depth]);

    let partials: Result<Vec<Vec<u64>>, EnumerationError> = shards
        .into_par_iter()
        .map(|mut shard| {
            let mut local = vec![0u64; max_n + 1];
            shard.reserve(max_n - depth);
            dfs_count(&mut shard, max_n, &mut local)?;
            Ok(local)
        })
        .collect();
    for local in partials? {
        for (slot, add) in counts.iter_mut().zip(local) {
            *slot = slot
                .checked_add(add)
                .ok_or(EnumerationError::CountOverflow)?;
        }
    }
    Ok(counts)
}

/// Exact counts `a(0) ..= a(max_n)` at the default split depth.
pub fn count_square_free_upto(max_n: usize) -> Result<Vec<u64>, EnumerationError> {
    count_square_free_upto_sharded(max_n, DEFAULT_SPLIT_DEPTH)
}

/// The number `a(n)` of ternary square-free words of length `n`.
pub fn count_square_free(n: usize) -> Result<u64, EnumerationError> {
    Ok(count_square_free_upto(n)?[n])
}

/// Candidate letters at position `i` of an `n`-letter word of the family:
/// within the forced suffix only the suffix letter is admissible.
#[inline]
fn forced_letter(suffix: Option<&[u8]>, i: usize, n: usize) -> Option<u8> {
    match suffix {
        Some(s) if i >= n - s.len() => Some(s[i - (n - s.len())]),
        _ => None,
    }
}

fn dfs_family<F: FnMut(&[u8])>(
    buf: &mut Vec<u8>,
    n: usize,
    suffix: Option<&[u8]>,
    emit: &mut F,
) {
    if buf.len() == n {
        emit(buf);
        return;
    }
    let candidates = match forced_letter(suffix, buf.len(), n) {
        Some(c) => c..c + 1,
        None => 0..ALPHABET,
    };
    for c in candidates {
        if extension_is_square_free(buf, c) {
            buf.push(c);
            dfs_family(buf, n, suffix, emit);
            buf.pop();
        }
    }
}

fn family_walk<F: FnMut(&[u8])>(
    n: usize,
    family: Family,
    emit: &mut F,
) -> Result<(), EnumerationError> {
    family.check_len(n)?;
    let mut buf = Vec::with_capacity(n);
    if let Some(prefix) = family.prefix() {
        buf.extend_from_slice(prefix);
        debug_assert!(crate::words::is_square_free(&buf));
        if n < 2 * AFFIX_LEN {
            unreachable!("family minimum length exceeds prefix+suffix");
        }
    }
    dfs_family(&mut buf, n, family.suffix(), emit);
    Ok(())
}

/// All square-free words of length `n` in the family, in lexicographic
/// order. For `Family::All` this is the whole of `A(n)`.
pub fn enumerate_family(n: usize, family: Family) -> Result<Vec<Word>, EnumerationError> {
    let mut out = Vec::new();
    family_walk(n, family, &mut |bytes| out.push(Word::from_raw(bytes.to_vec())))?;
    debug_assert!(out.windows(2).all(|w| w[0] < w[1]));
    Ok(out)
}

/// Family totals without materialising the word list.
pub fn family_stats(n: usize, family: Family) -> Result<FamilyStats, EnumerationError> {
    let mut total = 0u64;
    let mut palindromes = 0u64;
    family_walk(n, family, &mut |bytes| {
        total += 1;
        if bytes.iter().eq(bytes.iter().rev()) {
            palindromes += 1;
        }
    })?;
    Ok(FamilyStats::new(n, total, palindromes))
}

/// Checks the two concatenation inequalities for one `(m, n)` pair against a
/// table of exact counts (`table[i]` = `a(i)`):
///
/// * `a(m+n) <= a(m) * a(n)`
/// * `a(m+n-2) <= a(m) * a(n) / 6` (for `m, n >= 2`)
pub fn check_subadditivity(m: usize, n: usize, table: &[u64]) -> Result<bool, EnumerationError> {
    let get = |i: usize| -> Result<u128, EnumerationError> {
        table
            .get(i)
            .map(|&v| v as u128)
            .ok_or(EnumerationError::MissingCount(i))
    };
    let product = get(m)? * get(n)?;
    if get(m + n)? > product {
        return Ok(false);
    }
    if m >= 2 && n >= 2 && 6 * get(m + n - 2)? > product {
        return Ok(false);
    }
    Ok(true)
}

/// Writes a word list: one word per line, lexicographically sorted. This is
/// the cache format for family enumerations and admissible catalogs.
pub fn write_word_list<W: Write>(mut out: W, words: &[Word]) -> std::io::Result<()> {
    debug_assert!(words.windows(2).all(|w| w[0] < w[1]));
    for w in words {
        writeln!(out, "{w}")?;
    }
    Ok(())
}

/// Reads a word list, validating the sort order.
pub fn read_word_list<R: BufRead>(input: R) -> Result<Vec<Word>, WordListError> {
    let mut words: Vec<Word> = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let line = line?;
        let w: Word = line.trim_end().parse().map_err(EnumerationError::from)?;
        if let Some(prev) = words.last() {
            if *prev >= w {
                return Err(EnumerationError::UnsortedWordList(idx + 1).into());
            }
        }
        words.push(w);
    }
    Ok(words)
}

#[derive(Debug, Error)]
pub enum WordListError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Format(#[from] EnumerationError),
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force oracle: filter all 3^n words by the naive square scan.
    fn oracle_count(n: usize) -> u64 {
        fn naive_square_free(s: &[u8]) -> bool {
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
        let mut count = 0;
        let total = 3u64.pow(n as u32);
        for code in 0..total {
            let mut v = Vec::with_capacity(n);
            let mut x = code;
            for _ in 0..n {
                v.push((x % 3) as u8);
                x /= 3;
            }
            if naive_square_free(&v) {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn counts_match_brute_force_oracle() {
        let counts = count_square_free_upto(11).unwrap();
        for n in 0..=11 {
            assert_eq!(counts[n], oracle_count(n), "a({n})");
        }
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_square_free(0).unwrap(), 1);
        assert_eq!(count_square_free(1).unwrap(), 3);
        assert_eq!(count_square_free(2).unwrap(), 6);
        assert_eq!(count_square_free(3).unwrap(), 12);
        assert_eq!(count_square_free(13).unwrap(), 342);
    }

    #[test]
    fn counts_independent_of_split_depth() {
        let reference = count_square_free_upto_sharded(16, 0).unwrap();
        for depth in [1, 4, 8, 16, 30] {
            assert_eq!(
                count_square_free_upto_sharded(16, depth).unwrap(),
                reference,
                "split depth {depth}"
            );
        }
    }

    #[test]
    fn growth_is_at_most_doubling() {
        let counts = count_square_free_upto(30).unwrap();
        for n in 1..30 {
            assert!(counts[n + 1] <= 2 * counts[n], "a({}) vs a({})", n + 1, n);
        }
    }

    #[test]
    fn checked_increment_overflows() {
        let mut x = u64::MAX;
        assert_eq!(checked_inc(&mut x), Err(EnumerationError::CountOverflow));
    }

    #[test]
    fn family_examples() {
        assert!(enumerate_family(13, Family::A1).unwrap().is_empty());
        let g13 = enumerate_family(13, Family::A2).unwrap();
        assert_eq!(g13.len(), 1);
        assert_eq!(g13[0].to_string(), "0121021201210");

        let a1_18 = enumerate_family(18, Family::A1).unwrap();
        assert_eq!(a1_18.len(), 4);
        let u0: Word = "012021020102120210".parse().unwrap();
        assert!(a1_18.contains(&u0));
        assert!(a1_18.contains(&u0.reverse()));
    }

    #[test]
    fn family_rejects_short_lengths() {
        assert!(matches!(
            enumerate_family(12, Family::A1),
            Err(EnumerationError::LengthBelowMinimum { .. })
        ));
        assert!(family_stats(12, Family::A2).is_err());
        // All has no minimum
        assert_eq!(enumerate_family(0, Family::All).unwrap().len(), 1);
    }

    #[test]
    fn family_stats_examples() {
        let s = family_stats(25, Family::A1).unwrap();
        assert_eq!((s.total, s.palindromes, s.pairs), (13, 3, 5));
        let s = family_stats(30, Family::A2).unwrap();
        assert_eq!((s.total, s.palindromes, s.pairs), (40, 0, 20));
        let s = family_stats(14, Family::A1).unwrap();
        assert_eq!((s.total, s.palindromes, s.pairs), (0, 0, 0));
    }

    #[test]
    fn enumeration_consistent_with_counts() {
        for n in 0..=12 {
            let words = enumerate_family(n, Family::All).unwrap();
            assert_eq!(words.len() as u64, count_square_free(n).unwrap());
            assert!(words.iter().all(|w| w.is_square_free() && w.len() == n));
            assert!(words.windows(2).all(|p| p[0] < p[1]));
        }
    }

    #[test]
    fn families_closed_under_reversal() {
        for family in [Family::A1, Family::A2] {
            for n in 13..=20 {
                let words = enumerate_family(n, family).unwrap();
                for w in &words {
                    assert!(words.contains(&w.reverse()), "{family} n={n} word {w}");
                }
            }
        }
    }

    #[test]
    fn family_members_match_affixes() {
        let words = enumerate_family(18, Family::A1).unwrap();
        for w in &words {
            assert!(Family::A1.matches(w));
            assert!(!Family::A2.matches(w));
        }
    }

    #[test]
    fn subadditivity_examples() {
        let table = count_square_free_upto(40).unwrap();
        assert_eq!(table[4], 18);
        assert!(check_subadditivity(2, 2, &table).unwrap());
        assert!(check_subadditivity(3, 3, &table).unwrap());
        assert!(check_subadditivity(20, 20, &table).unwrap());
        assert!(matches!(
            check_subadditivity(30, 30, &table),
            Err(EnumerationError::MissingCount(60))
        ));
    }

    #[test]
    fn word_list_round_trip() {
        let words = enumerate_family(13, Family::A2).unwrap();
        let mut buf = Vec::new();
        write_word_list(&mut buf, &words).unwrap();
        let back = read_word_list(&buf[..]).unwrap();
        assert_eq!(back, words);

        let unsorted = b"10\n01\n";
        assert!(matches!(
            read_word_list(&unsorted[..]),
            Err(WordListError::Format(EnumerationError::UnsortedWordList(2)))
        ));
    }

    #[test]
    fn family_parse_display() {
        for (s, f) in [("ALL", Family::All), ("A1", Family::A1), ("a2", Family::A2)] {
            assert_eq!(s.parse::<Family>().unwrap(), f);
        }
        assert!("B1".parse::<Family>().is_err());
    }
}
