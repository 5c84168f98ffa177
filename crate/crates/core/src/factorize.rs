//! Shortest and longest repetition factorizations by dynamic programming.
//!
//! Every routine here walks the same recurrence over a [`RepetitionTable`]:
//! a factorization of `w[a..b)` is a repetition `w[a..a+n)` followed by a
//! factorization of `w[a+n..b)`, with the empty word as the base case.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::repetition::RepetitionTable;
use crate::words::Word;

/// Cut positions `0 = c_0 < c_1 < ... < c_t = |w|`; block `s` is
/// `w[c_s..c_{s+1})`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Factorization {
    cuts: Vec<usize>,
}

impl Factorization {
    /// Validates the cut sequence against `w`.
    pub fn new(w: &Word, cuts: Vec<usize>) -> Result<Self> {
        let ok = cuts.len() >= 2
            && cuts[0] == 0
            && *cuts.last().unwrap() == w.len()
            && cuts.windows(2).all(|c| c[0] < c[1]);
        if !ok {
            return Err(Error::InvalidDigits(format!("bad cut sequence {cuts:?}")));
        }
        let table = RepetitionTable::new(w);
        if let Some(c) = cuts.windows(2).find(|c| !table.contains(c[0], c[1] - c[0])) {
            return Err(Error::InvalidDigits(format!(
                "block [{}, {}) is not a repetition",
                c[0], c[1]
            )));
        }
        Ok(Factorization { cuts })
    }

    pub fn cuts(&self) -> &[usize] {
        &self.cuts
    }

    pub fn width(&self) -> usize {
        self.cuts.len() - 1
    }

    pub fn blocks<'a>(&'a self, w: &'a Word) -> impl Iterator<Item = Word> + 'a {
        self.cuts
            .windows(2)
            .map(move |c| w.factor(c[0], c[1] - c[0]).expect("cuts inside word"))
    }

    /// `(00)(11)` style rendering.
    pub fn render(&self, w: &Word) -> String {
        self.blocks(w).map(|b| format!("({b})")).collect()
    }
}

/// Width summary of one word. All widths are 0 when no factorization exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WidthProfile {
    pub sw: usize,
    pub lw: usize,
    /// Number of distinct factorizations of each width.
    pub counts: BTreeMap<usize, BigUint>,
    pub total: BigUint,
    pub unique: bool,
}

impl WidthProfile {
    fn none() -> Self {
        WidthProfile {
            sw: 0,
            lw: 0,
            counts: BTreeMap::new(),
            total: BigUint::zero(),
            unique: false,
        }
    }

    pub fn is_factorizable(&self) -> bool {
        self.sw > 0
    }
}

/// Factorization counts of one prefix, by width, starting at `min`.
#[derive(Debug, Clone)]
struct WidthCounts {
    min: usize,
    by_width: Vec<BigUint>,
}

impl WidthCounts {
    fn base() -> Self {
        WidthCounts {
            min: 0,
            by_width: vec![BigUint::one()],
        }
    }

    /// Adds `src` with every width increased by one.
    fn add_extended(slot: &mut Option<WidthCounts>, src: &WidthCounts) {
        let lo = src.min + 1;
        match slot {
            None => {
                *slot = Some(WidthCounts {
                    min: lo,
                    by_width: src.by_width.clone(),
                })
            }
            Some(dst) => {
                if lo < dst.min {
                    let shift = dst.min - lo;
                    let mut v = vec![BigUint::zero(); shift];
                    v.append(&mut dst.by_width);
                    dst.by_width = v;
                    dst.min = lo;
                }
                let off = lo - dst.min;
                if dst.by_width.len() < off + src.by_width.len() {
                    dst.by_width
                        .resize(off + src.by_width.len(), BigUint::zero());
                }
                for (d, s) in dst.by_width[off..].iter_mut().zip(&src.by_width) {
                    *d += s;
                }
            }
        }
    }

    fn profile(&self) -> WidthProfile {
        let counts: BTreeMap<usize, BigUint> = self
            .by_width
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (self.min + k, c.clone()))
            .collect();
        if counts.is_empty() {
            return WidthProfile::none();
        }
        let total: BigUint = counts.values().sum();
        WidthProfile {
            sw: *counts.keys().next().unwrap(),
            lw: *counts.keys().next_back().unwrap(),
            unique: total.is_one(),
            counts,
            total,
        }
    }
}

/// Profiles of `w[start..start+n)` for `n = 1..=max_len` (entry `n - 1`).
pub fn profiles_from(table: &RepetitionTable, start: usize, max_len: usize) -> Vec<WidthProfile> {
    let span = max_len.min(table.word_len().saturating_sub(start));
    let mut slots: Vec<Option<WidthCounts>> = vec![None; span + 1];
    slots[0] = Some(WidthCounts::base());
    for k in 0..span {
        let Some(src) = slots[k].take() else { continue };
        for n in table.lengths(start + k, span - k) {
            WidthCounts::add_extended(&mut slots[k + n], &src);
        }
        slots[k] = Some(src);
    }
    slots[1..]
        .iter()
        .map(|s| {
            s.as_ref()
                .map_or_else(WidthProfile::none, WidthCounts::profile)
        })
        .collect()
}

/// Shortest widths of `w[start..start+n)` for `n = 0..=max_len`, 0 meaning no
/// factorization. With `cap = Some(b)`, widths above `b` are reported as 0.
pub fn shortest_widths_from(
    table: &RepetitionTable,
    start: usize,
    max_len: usize,
    cap: Option<usize>,
) -> Vec<u32> {
    const NONE: u32 = u32::MAX;
    let span = max_len.min(table.word_len().saturating_sub(start));
    let cap = cap.map_or(NONE - 1, |c| c.min((NONE - 1) as usize) as u32);
    let mut best = vec![NONE; span + 1];
    best[0] = 0;
    // furthest reachable cut so far
    let mut frontier = 0;
    for k in 0..span {
        if k > frontier {
            break;
        }
        let b = best[k];
        if b == NONE || b >= cap {
            continue;
        }
        for n in table.lengths(start + k, span - k) {
            frontier = frontier.max(k + n);
            let slot = &mut best[k + n];
            if b + 1 < *slot {
                *slot = b + 1;
            }
        }
    }
    best[0] = NONE;
    best.into_iter()
        .map(|b| if b == NONE { 0 } else { b })
        .collect()
}

/// For the factors ending at `end` (exclusive): entry `d` is the number of
/// distinct first-block lengths over all factorizations of `w[end-d..end)`.
pub fn first_term_counts(table: &RepetitionTable, end: usize, max_len: usize) -> Vec<usize> {
    let span = max_len.min(end);
    // reach[d]: w[end-d..end) is empty or factorizable
    let mut reach = vec![false; span + 1];
    reach[0] = true;
    let mut counts = vec![0; span + 1];
    for d in 1..=span {
        let start = end - d;
        let c = table.lengths(start, d).filter(|&n| reach[d - n]).count();
        counts[d] = c;
        reach[d] = c > 0;
    }
    counts
}

/// sw, lw and exact factorization counts of `w`.
pub fn width_profile(w: &Word) -> Result<WidthProfile> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let table = RepetitionTable::new(w);
    Ok(profiles_from(&table, 0, w.len()).pop().expect("nonempty"))
}

#[derive(Clone, Copy)]
enum Extreme {
    Min,
    Max,
}

fn extreme_factorization(w: &Word, which: Extreme) -> Result<Option<Factorization>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let table = RepetitionTable::new(w);
    let len = w.len();
    // best[k]: optimal width of the suffix w[k..]
    let mut best: Vec<Option<usize>> = vec![None; len + 1];
    best[len] = Some(0);
    for k in (0..len).rev() {
        let candidates = table.lengths(k, len - k).filter_map(|n| best[k + n]);
        best[k] = match which {
            Extreme::Min => candidates.min(),
            Extreme::Max => candidates.max(),
        }
        .map(|b| b + 1);
    }
    let Some(mut remaining) = best[0] else {
        return Ok(None);
    };
    let mut cuts = vec![0];
    let mut k = 0;
    while k < len {
        let n = table
            .lengths(k, len - k)
            .find(|&n| best[k + n] == Some(remaining - 1))
            .expect("dp witness");
        k += n;
        remaining -= 1;
        cuts.push(k);
    }
    Ok(Some(Factorization { cuts }))
}

/// A minimum-width factorization, lexicographically least in its cuts.
pub fn shortest_factorization(w: &Word) -> Result<Option<Factorization>> {
    extreme_factorization(w, Extreme::Min)
}

/// A maximum-width factorization, lexicographically least in its cuts.
pub fn longest_factorization(w: &Word) -> Result<Option<Factorization>> {
    extreme_factorization(w, Extreme::Max)
}

/// True iff `w` has two factorizations whose first blocks differ in length.
pub fn two_first_term_factorizations(w: &Word) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let table = RepetitionTable::new(w);
    Ok(first_term_counts(&table, w.len(), w.len())[w.len()] >= 2)
}

/// Profiles of every factor `w[i..i+n)` with `1 <= n <= max_len`, ordered by
/// `i` then `n`. Shares one repetition table; rows are computed lazily.
pub fn profile_all_factors(w: &Word, max_len: usize) -> Result<FactorProfiles> {
    if max_len > w.len() {
        return Err(Error::OutOfRange {
            start: 0,
            len: max_len,
            word_len: w.len(),
        });
    }
    Ok(FactorProfiles {
        table: RepetitionTable::with_max_len(w, max_len),
        max_len,
        start: 0,
        row: Vec::new().into_iter(),
        next_len: 1,
    })
}

pub struct FactorProfiles {
    table: RepetitionTable,
    max_len: usize,
    start: usize,
    row: std::vec::IntoIter<WidthProfile>,
    next_len: usize,
}

impl Iterator for FactorProfiles {
    type Item = (usize, usize, WidthProfile);

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            if let Some(p) = self.row.next() {
                let n = self.next_len;
                self.next_len += 1;
                return Some((self.start - 1, n, p));
            }
            if self.start >= self.table.word_len() {
                return None;
            }
            self.row = profiles_from(&self.table, self.start, self.max_len).into_iter();
            self.next_len = 1;
            self.start += 1;
        }
    }
}
