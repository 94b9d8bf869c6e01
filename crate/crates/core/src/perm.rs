//! Permutations, words and pattern occurrences.
//!
//! A 3-1-2-avoiding permutation factors as `m_1 w_1 m_2 w_2 ... m_k w_k`,
//! where the `m_i` are its left-to-right maxima and each `w_i` is a
//! decreasing word. [`ltr_decompose`] produces that factorization for any
//! permutation; [`avoids_312`] tests avoidance through it.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Symbol used for the empty permutation and the empty path.
pub const EMPTY: &str = "ε";

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let idx = v as usize;
            if v == 0 || idx > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} outside 1..={n}"
                )));
            }
            if seen[idx] {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} appears more than once"
                )));
            }
            seen[idx] = true;
        }
        Ok(Permutation { values })
    }

    pub(crate) fn from_vec_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation { values }
    }

    pub fn empty() -> Self {
        Permutation::default()
    }

    /// `1 2 ... n`
    pub fn increasing(n: usize) -> Self {
        Permutation {
            values: (1..=n as u32).collect(),
        }
    }

    /// `n ... 2 1`
    pub fn decreasing(n: usize) -> Self {
        Permutation {
            values: (1..=n as u32).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn into_values(self) -> Vec<u32> {
        self.values
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_values(f, &self.values)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_values(s)?)
    }
}

/// A sequence of distinct positive integers, not necessarily `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    values: Vec<u32>,
}

impl Word {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &v in &values {
            if v == 0 {
                return Err(Error::InvalidPermutation(
                    "word entries must be positive".into(),
                ));
            }
            if !seen.insert(v) {
                return Err(Error::DuplicateValue(v));
            }
        }
        Ok(Word { values })
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl From<Permutation> for Word {
    fn from(p: Permutation) -> Self {
        Word { values: p.values }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_values(f, &self.values)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::new(parse_values(s)?)
    }
}

fn write_values(f: &mut fmt::Formatter<'_>, values: &[u32]) -> fmt::Result {
    if values.is_empty() {
        return f.write_str(EMPTY);
    }
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

fn parse_values(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() || s == EMPTY {
        return Ok(Vec::new());
    }
    s.split_whitespace()
        .map(|tok| {
            tok.parse::<u32>()
                .map_err(|_| Error::InvalidPermutation(format!("cannot parse '{tok}'")))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PatternMode {
    /// Occurrences occupy adjacent positions.
    Consecutive,
    /// Occurrences are arbitrary subsequences.
    Classical,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PatternQuery {
    pub pattern: Permutation,
    pub mode: PatternMode,
}

impl PatternQuery {
    pub fn consecutive(pattern: Permutation) -> Self {
        PatternQuery {
            pattern,
            mode: PatternMode::Consecutive,
        }
    }

    pub fn classical(pattern: Permutation) -> Self {
        PatternQuery {
            pattern,
            mode: PatternMode::Classical,
        }
    }
}

impl FromStr for PatternQuery {
    type Err = Error;

    /// `"3-1-2"` is classical, `"312"` is consecutive (single-digit letters).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (mode, letters): (PatternMode, Vec<&str>) = if s.contains('-') {
            (PatternMode::Classical, s.split('-').collect())
        } else {
            let letters = s
                .char_indices()
                .map(|(i, c)| &s[i..i + c.len_utf8()])
                .collect();
            (PatternMode::Consecutive, letters)
        };
        let values = letters
            .iter()
            .map(|tok| {
                tok.parse::<u32>()
                    .map_err(|_| Error::InvalidPermutation(format!("bad pattern '{s}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        if values.is_empty() {
            return Err(Error::InvalidPermutation("empty pattern".into()));
        }
        Ok(PatternQuery {
            pattern: Permutation::new(values)?,
            mode,
        })
    }
}

/// The permutation order-isomorphic to `w`.
pub fn standardize(w: &Word) -> Permutation {
    standardize_slice(w.values())
}

pub(crate) fn standardize_slice(values: &[u32]) -> Permutation {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_unstable_by_key(|&i| values[i]);
    let mut out = vec![0u32; values.len()];
    for (rank, &i) in order.iter().enumerate() {
        out[i] = rank as u32 + 1;
    }
    Permutation { values: out }
}

/// Positions of the pattern sorted by pattern value: a window `w` matches
/// iff `w[order[0]] < w[order[1]] < ...`.
fn value_order(pattern: &[u32]) -> Vec<usize> {
    let mut order = vec![0usize; pattern.len()];
    for (pos, &v) in pattern.iter().enumerate() {
        order[v as usize - 1] = pos;
    }
    order
}

fn window_matches(window: &[u32], order: &[usize]) -> bool {
    order.windows(2).all(|pair| window[pair[0]] < window[pair[1]])
}

/// Number of windows of `sigma` order-isomorphic to `pattern`.
pub fn count_consecutive(sigma: &[u32], pattern: &Permutation) -> usize {
    let m = pattern.len();
    if m == 0 || m > sigma.len() {
        return 0;
    }
    let order = value_order(pattern.values());
    sigma
        .windows(m)
        .filter(|w| window_matches(w, &order))
        .count()
}

pub fn count_occurrences(sigma: &Permutation, q: &PatternQuery) -> BigUint {
    match q.mode {
        PatternMode::Consecutive => BigUint::from(count_consecutive(sigma.values(), &q.pattern)),
        PatternMode::Classical => count_classical(sigma.values(), &q.pattern),
    }
}

/// Classical occurrence count. Patterns of length at most 3 use an O(n²)
/// counter keyed on the middle position; longer patterns fall back to a
/// pruned subsequence search.
pub fn count_classical(sigma: &[u32], pattern: &Permutation) -> BigUint {
    let m = pattern.len();
    if m == 0 || m > sigma.len() {
        return BigUint::from(0u32);
    }
    match m {
        1 => BigUint::from(sigma.len()),
        2 => BigUint::from(count_classical_len2(sigma, pattern.values())),
        3 => BigUint::from(count_classical_len3(sigma, pattern.values())),
        _ => BigUint::from(count_classical_search(sigma, pattern.values())),
    }
}

fn count_classical_len2(sigma: &[u32], pattern: &[u32]) -> u128 {
    let n = sigma.len();
    let mut ascents = 0u128;
    for i in 0..n {
        for j in i + 1..n {
            if sigma[i] < sigma[j] {
                ascents += 1;
            }
        }
    }
    let pairs = (n as u128) * (n as u128).saturating_sub(1) / 2;
    if pattern[0] < pattern[1] {
        ascents
    } else {
        pairs - ascents
    }
}

fn count_classical_len3(sigma: &[u32], pattern: &[u32]) -> u128 {
    let n = sigma.len();
    let max = sigma.iter().copied().max().unwrap_or(0) as usize;
    // below[v] = #{ i < j : sigma[i] < v } for the current middle index j
    let mut below = vec![0u128; max + 2];
    let mut total = 0u128;
    for j in 0..n {
        let mid = sigma[j] as usize;
        let left_less = below[mid];
        let left_greater = j as u128 - left_less;
        let (mut right_less, mut right_greater) = (0u128, 0u128);
        // pairs (i, k) on the same side of sigma[j] with sigma[i] < sigma[k]
        let (mut rising_low, mut rising_high) = (0u128, 0u128);
        for &vk in &sigma[j + 1..] {
            let vk = vk as usize;
            if vk < mid {
                right_less += 1;
                rising_low += below[vk];
            } else {
                right_greater += 1;
                rising_high += below[vk] - below[mid + 1];
            }
        }
        total += match pattern {
            [1, 2, 3] => left_less * right_greater,
            [3, 2, 1] => left_greater * right_less,
            [1, 3, 2] => rising_low,
            [2, 3, 1] => left_less * right_less - rising_low,
            [2, 1, 3] => rising_high,
            [3, 1, 2] => left_greater * right_greater - rising_high,
            _ => unreachable!("pattern of length 3 is a permutation of 1..=3"),
        };
        for slot in below.iter_mut().skip(mid + 1) {
            *slot += 1;
        }
    }
    total
}

fn count_classical_search(sigma: &[u32], pattern: &[u32]) -> u128 {
    fn extend(sigma: &[u32], pattern: &[u32], start: usize, chosen: &mut Vec<u32>) -> u128 {
        let depth = chosen.len();
        if depth == pattern.len() {
            return 1;
        }
        let remaining = pattern.len() - depth;
        let mut count = 0;
        for i in start..=sigma.len() - remaining {
            let v = sigma[i];
            let consistent = chosen
                .iter()
                .zip(pattern)
                .all(|(&c, &p)| (c < v) == (p < pattern[depth]));
            if consistent {
                chosen.push(v);
                count += extend(sigma, pattern, i + 1, chosen);
                chosen.pop();
            }
        }
        count
    }
    if pattern.len() > sigma.len() {
        return 0;
    }
    extend(sigma, pattern, 0, &mut Vec::with_capacity(pattern.len()))
}

/// One block `m_i w_i` of the left-to-right-maxima factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LtrBlock {
    pub max: u32,
    pub tail: Word,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LtrDecomposition {
    pub blocks: Vec<LtrBlock>,
}

impl LtrDecomposition {
    /// Concatenation `m_1 w_1 ... m_k w_k`.
    pub fn flatten(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for b in &self.blocks {
            out.push(b.max);
            out.extend_from_slice(b.tail.values());
        }
        out
    }
}

pub fn ltr_decompose(sigma: &Permutation) -> LtrDecomposition {
    let mut blocks: Vec<(u32, Vec<u32>)> = Vec::new();
    for &v in sigma.values() {
        match blocks.last_mut() {
            Some((max, tail)) if v < *max => tail.push(v),
            _ => blocks.push((v, Vec::new())),
        }
    }
    LtrDecomposition {
        blocks: blocks
            .into_iter()
            .map(|(max, tail)| LtrBlock {
                max,
                tail: Word { values: tail },
            })
            .collect(),
    }
}

/// Avoidance of the classical pattern 3-1-2.
///
/// Every entry `a` of a tail `w_i` must be the largest among the entries
/// from `a` onward that lie below `m_i`. Scanned right to left against the
/// set of entries already seen.
pub fn avoids_312(sigma: &Permutation) -> bool {
    let values = sigma.values();
    let mut prefix_max = Vec::with_capacity(values.len());
    let mut running = 0;
    for &v in values {
        prefix_max.push(running);
        running = running.max(v);
    }
    let mut later = BTreeSet::new();
    for (i, &a) in values.iter().enumerate().rev() {
        let block_max = prefix_max[i];
        if a < block_max {
            if let Some(&b) = later.range(..block_max).next_back() {
                if b > a {
                    return false;
                }
            }
        }
        later.insert(a);
    }
    true
}

/// All of `S_n(3-1-2)` in lexicographic order.
pub fn enumerate_avoiders(n: usize) -> Avoiders {
    Avoiders {
        n: n as u32,
        current: Vec::new(),
        started: false,
        done: false,
    }
}

/// Lexicographic successor iterator over `S_n(3-1-2)`.
///
/// Given a 3-1-2-free prefix with maximum `M`, the admissible next entries
/// are the largest unused value below `M` and every value above `M`; any
/// other choice forces a 3-1-2.
#[derive(Debug, Clone)]
pub struct Avoiders {
    n: u32,
    current: Vec<u32>,
    started: bool,
    done: bool,
}

impl Avoiders {
    /// Fill `current[from..]` with the smallest admissible completion.
    fn complete_from(&mut self, from: usize) {
        let n = self.n as usize;
        let mut used = vec![false; n + 1];
        let mut max = 0;
        for &v in &self.current[..from] {
            used[v as usize] = true;
            max = max.max(v);
        }
        self.current.truncate(from);
        while self.current.len() < n {
            let below = (1..max).rev().find(|&v| !used[v as usize]);
            let next = below.unwrap_or(max + 1);
            used[next as usize] = true;
            max = max.max(next);
            self.current.push(next);
        }
    }
}

impl Iterator for Avoiders {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.complete_from(0);
            return Some(Permutation::from_vec_unchecked(self.current.clone()));
        }
        let n = self.current.len();
        let mut prefix_max = vec![0u32; n + 1];
        for i in 0..n {
            prefix_max[i + 1] = prefix_max[i].max(self.current[i]);
        }
        for d in (0..n).rev() {
            let max = prefix_max[d];
            let c = self.current[d];
            let candidate = if c < max { max + 1 } else { c + 1 };
            if candidate <= self.n {
                self.current[d] = candidate;
                self.complete_from(d + 1);
                return Some(Permutation::from_vec_unchecked(self.current.clone()));
            }
        }
        self.done = true;
        None
    }
}
