//! Periods and repetitions.

use crate::error::{Error, Result};
use crate::words::{Symbol, Word};

/// Z-array of `s`: `z[k]` is the length of the longest common prefix of `s`
/// and `s[k..]`, with `z[0] = |s|`.
pub(crate) fn z_array(s: &[Symbol]) -> Vec<usize> {
    let n = s.len();
    let mut z = vec![0; n];
    if n == 0 {
        return z;
    }
    z[0] = n;
    let (mut l, mut r) = (0, 0);
    for k in 1..n {
        if k < r {
            z[k] = (r - k).min(z[k - l]);
        }
        while k + z[k] < n && s[z[k]] == s[k + z[k]] {
            z[k] += 1;
        }
        if k + z[k] > r {
            l = k;
            r = k + z[k];
        }
    }
    z
}

/// All periods of `w` in increasing order. `|w|` is always a period.
pub fn periods(w: &Word) -> Result<Vec<usize>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let n = w.len();
    let z = z_array(w.symbols());
    Ok((1..=n).filter(|&p| p == n || z[p] == n - p).collect())
}

pub fn smallest_period(w: &Word) -> Result<usize> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let n = w.len();
    let z = z_array(w.symbols());
    Ok((1..n).find(|&p| z[p] == n - p).unwrap_or(n))
}

/// True iff `w` has a period `p` with `2p <= |w|`.
pub fn is_repetition(w: &Word) -> Result<bool> {
    Ok(2 * smallest_period(w)? <= w.len())
}

/// For every start `i`, the set of lengths `n` such that `w[i..i+n-1]` is a
/// repetition, stored as disjoint sorted closed intervals.
///
/// Built in `O(|w| * max_len)` by extending `w[i..]` against `w[i+p..]` for
/// every shift `p`: the factor of length `n` at `i` has period `p` exactly
/// when that extension reaches `n - p`.
#[derive(Debug, Clone)]
pub struct RepetitionTable {
    word_len: usize,
    max_len: usize,
    runs: Vec<Vec<(u32, u32)>>,
}

impl RepetitionTable {
    pub fn new(w: &Word) -> Self {
        Self::with_max_len(w, w.len())
    }

    /// Only records repetitions of length at most `max_len`.
    pub fn with_max_len(w: &Word, max_len: usize) -> Self {
        let s = w.symbols();
        let len = s.len();
        let max_len = max_len.min(len);
        let mut runs: Vec<Vec<(u32, u32)>> = vec![Vec::new(); len];
        let mut lce = vec![0usize; len + 1];
        for p in 1..=max_len / 2 {
            // lce[i] = longest common extension of positions i and i + p
            lce[len - p] = 0;
            for i in (0..len - p).rev() {
                lce[i] = if s[i] == s[i + p] { lce[i + 1] + 1 } else { 0 };
            }
            for i in 0..len - p {
                if lce[i] < p {
                    continue;
                }
                let lo = 2 * p;
                let hi = (p + lce[i]).min(max_len);
                if lo > hi {
                    continue;
                }
                let row = &mut runs[i];
                match row.last_mut() {
                    Some(last) if lo as u32 <= last.1 + 1 => last.1 = last.1.max(hi as u32),
                    _ => row.push((lo as u32, hi as u32)),
                }
            }
        }
        RepetitionTable {
            word_len: len,
            max_len,
            runs,
        }
    }

    pub fn word_len(&self) -> usize {
        self.word_len
    }

    /// Largest repetition length recorded.
    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// Is `w[start..start+len-1]` a repetition? Lengths above
    /// [`max_len`](Self::max_len) always answer false.
    pub fn contains(&self, start: usize, len: usize) -> bool {
        if start >= self.word_len || start + len > self.word_len {
            return false;
        }
        self.runs[start]
            .iter()
            .any(|&(lo, hi)| lo as usize <= len && len <= hi as usize)
    }

    /// Disjoint closed intervals of repetition lengths starting at `start`.
    pub fn intervals(&self, start: usize) -> &[(u32, u32)] {
        self.runs.get(start).map_or(&[], Vec::as_slice)
    }

    /// Repetition lengths at `start` in increasing order, truncated at `limit`.
    pub fn lengths(&self, start: usize, limit: usize) -> impl Iterator<Item = usize> + '_ {
        self.intervals(start).iter().flat_map(move |&(lo, hi)| {
            let hi = (hi as usize).min(limit);
            lo as usize..=hi
        })
    }
}

/// Builds the full table for `w`.
pub fn repetition_table(w: &Word) -> RepetitionTable {
    RepetitionTable::new(w)
}
