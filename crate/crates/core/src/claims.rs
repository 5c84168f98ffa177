//! Named, reproducible checks of the known width bounds and automata.
//!
//! Each claim has default bounds that run in seconds to minutes; every bound
//! can be overridden. Bulk scans run in parallel but collect their results
//! in index order, so reports are identical across runs apart from
//! `runtime_secs`.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::automata::{combine, equivalent, find_difference, Dfao};
use crate::error::{Error, Result};
use crate::factorize::{
    first_term_counts, longest_factorization, profiles_from, shortest_widths_from, width_profile,
    Factorization,
};
use crate::numeration::{DigitReader, DigitString, NumerationSystem};
use crate::repetition::{is_repetition, RepetitionTable};
use crate::synthesis::{
    accepts_arbitrarily_large, capped_prefix_oracle, factor_width_oracle, guess_dfao,
    inductive_check_rsrf, rep_at_most_oracle, verify_against_oracle,
};
use crate::words::{
    paperfolding_word, sequence_prefix, Fold, SequenceId, UnfoldingInstructions, Word,
};

/// Bound settings of one run, by name.
pub type Params = BTreeMap<String, u64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

/// A concrete factor, instruction word or input backing a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub sequence: String,
    pub i: u64,
    pub n: u64,
    pub detail: String,
}

impl Witness {
    fn new(sequence: impl Into<String>, i: usize, n: usize, detail: impl Into<String>) -> Self {
        Witness {
            sequence: sequence.into(),
            i: i as u64,
            n: n as u64,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimReport {
    pub claim_id: String,
    pub parameters: Params,
    pub status: Status,
    /// Counterexamples on failure; illustrative witnesses on success.
    pub witnesses: Vec<Witness>,
    pub observations: Vec<String>,
    pub runtime_secs: f64,
}

impl ClaimReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// One line: status, id and the first observation or failure.
    pub fn summary(&self) -> String {
        let tail = match self.status {
            Status::Fail => self
                .witnesses
                .first()
                .map(|w| format!("{} i={} n={}: {}", w.sequence, w.i, w.n, w.detail)),
            Status::Pass => self.observations.first().cloned(),
        };
        format!(
            "{} {} ({:.1}s){}",
            self.status,
            self.claim_id,
            self.runtime_secs,
            tail.map(|t| format!(" {t}")).unwrap_or_default()
        )
    }
}

/// Registry entry.
#[derive(Debug, Clone, Copy)]
pub struct ClaimInfo {
    pub id: &'static str,
    pub description: &'static str,
    /// Parameter names and defaults; the first is the one `--bound` sets.
    pub params: &'static [(&'static str, u64)],
    check: fn(&Params) -> Result<Outcome>,
}

impl ClaimInfo {
    pub fn primary_param(&self) -> &'static str {
        self.params[0].0
    }
}

#[derive(Default)]
struct Outcome {
    failures: Vec<Witness>,
    witnesses: Vec<Witness>,
    observations: Vec<String>,
}

impl Outcome {
    fn fail(&mut self, w: Witness) {
        self.failures.push(w);
    }

    fn require(&mut self, ok: bool, w: impl FnOnce() -> Witness) {
        if !ok {
            self.failures.push(w());
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.observations.push(s.into());
    }
}

const REGISTRY: &[ClaimInfo] = &[
    ClaimInfo {
        id: "automata-algebra",
        description: "minimization is idempotent, equivalence finds counterexamples, and the prioritized product of width acceptors computes the least width (Thue-Morse and Fibonacci)",
        params: &[("bound", 64), ("tm_training", 256), ("fib_training", 377)],
        check: automata_algebra,
    },
    ClaimInfo {
        id: "dp-oracle",
        description: "width profiles agree with brute-force enumeration of cut sets on every binary word",
        params: &[("max_len", 12)],
        check: dp_oracle,
    },
    ClaimInfo {
        id: "fib-factor-bound",
        description: "every factorizable Fibonacci factor has a factorization of width at most 3, and width 3 occurs",
        params: &[("prefix", 2000), ("max_len", 200)],
        check: fib_factor_bound,
    },
    ClaimInfo {
        id: "fib-prefix-bound",
        description: "every factorizable Fibonacci prefix has a factorization of width at most 2, and width 2 occurs",
        params: &[("prefix", 2000)],
        check: fib_prefix_bound,
    },
    ClaimInfo {
        id: "pf-dichotomy",
        description: "each paperfolding word has all shortest widths at most 7 or some factor of shortest width 10",
        params: &[("max_instructions", 10), ("min_instructions", 8)],
        check: pf_dichotomy,
    },
    ClaimInfo {
        id: "pf-length-bound",
        description: "over all paperfolding words, shortest widths are at most 10 and factorizable factors have length at most 45",
        params: &[("max_instructions", 10)],
        check: pf_length_bound,
    },
    ClaimInfo {
        id: "rpf-width-bound",
        description: "every factorizable factor of the regular paperfolding word has shortest width at most 10, and 10 occurs",
        params: &[("prefix", 4096), ("max_len", 64)],
        check: rpf_width_bound,
    },
    ClaimInfo {
        id: "rs-23-states",
        description: "the guessed acceptor for Rudin-Shapiro prefixes factorizable into blocks of length at most 8 has 23 states, is verified inductively, and accepts arbitrarily long prefixes",
        params: &[("training", 16384), ("verify", 16384), ("induction", 4096), ("cap", 8), ("states", 23)],
        check: rs_23_states,
    },
    ClaimInfo {
        id: "tm-28-states",
        description: "the guessed Thue-Morse width DFAO has 28 states including the dead state and agrees with the dynamic program beyond its training box",
        params: &[("training", 512), ("verify", 1024), ("states", 28)],
        check: tm_28_states,
    },
    ClaimInfo {
        id: "tm-uniqueness",
        description: "every factorizable Thue-Morse factor has exactly one repetition factorization",
        params: &[("prefix", 4096), ("max_len", 128)],
        check: tm_uniqueness,
    },
    ClaimInfo {
        id: "tm-width-bound",
        description: "every factorizable Thue-Morse factor has shortest width at most 7, with witnesses for widths 1 through 7",
        params: &[("prefix", 4096), ("max_len", 128)],
        check: tm_width_bound,
    },
    ClaimInfo {
        id: "worked-example",
        description: "aaaababa has exactly three repetition factorizations, of widths 2, 2 and 3",
        params: &[("repeat", 1)],
        check: worked_example,
    },
    ClaimInfo {
        id: "zeckendorf-roundtrip",
        description: "Zeckendorf encoding round-trips and is a bijection onto strings without adjacent 1s",
        params: &[("bound", 100_000)],
        check: zeckendorf_roundtrip,
    },
];

/// All registered claims, sorted by id.
pub fn enumerate_claims() -> &'static [ClaimInfo] {
    REGISTRY
}

pub fn claim_info(id: &str) -> Result<&'static ClaimInfo> {
    REGISTRY
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownClaim {
            id: id.to_string(),
            available: REGISTRY.iter().map(|c| c.id.to_string()).collect(),
        })
}

/// Runs one claim with its defaults, replacing any parameter in `overrides`.
pub fn run_claim(id: &str, overrides: &Params) -> Result<ClaimReport> {
    let info = claim_info(id)?;
    let mut params: Params = info
        .params
        .iter()
        .map(|&(k, v)| (k.to_string(), v))
        .collect();
    for (k, &v) in overrides {
        match params.get_mut(k) {
            Some(slot) => *slot = v,
            None => {
                return Err(Error::Parse {
                    line: 0,
                    message: format!(
                        "claim {id} has no parameter `{k}` (known: {})",
                        info.params
                            .iter()
                            .map(|p| p.0)
                            .collect::<Vec<_>>()
                            .join(", ")
                    ),
                })
            }
        }
    }
    let t = Instant::now();
    let out = (info.check)(&params)?;
    let status = if out.failures.is_empty() {
        Status::Pass
    } else {
        Status::Fail
    };
    let witnesses = if out.failures.is_empty() {
        out.witnesses
    } else {
        out.failures
    };
    Ok(ClaimReport {
        claim_id: id.to_string(),
        parameters: params,
        status,
        witnesses,
        observations: out.observations,
        runtime_secs: t.elapsed().as_secs_f64(),
    })
}

fn p(params: &Params, key: &str) -> usize {
    params[key] as usize
}

fn worked_example(params: &Params) -> Result<Outcome> {
    let mut out = Outcome::default();
    let w = Word::from_text(&"aaaababa".repeat(p(params, "repeat").max(1)));
    let prof = width_profile(&w)?;
    if w.len() == 8 {
        let expected = [vec![0, 4, 8], vec![0, 3, 8], vec![0, 2, 4, 8]];
        for cuts in expected {
            let shown = format!("{cuts:?}");
            match Factorization::new(&w, cuts) {
                Ok(f) => out
                    .witnesses
                    .push(Witness::new("aaaababa", 0, 8, f.render(&w))),
                Err(e) => out.fail(Witness::new("aaaababa", 0, 8, format!("{shown}: {e}"))),
            }
        }
        out.require(prof.total == BigUint::from(3u32), || {
            Witness::new("aaaababa", 0, 8, format!("{} factorizations", prof.total))
        });
        out.require(prof.sw == 2 && prof.lw == 3, || {
            Witness::new("aaaababa", 0, 8, format!("sw={} lw={}", prof.sw, prof.lw))
        });
    }
    out.note(format!(
        "sw={} lw={} total={}",
        prof.sw, prof.lw, prof.total
    ));
    Ok(out)
}

/// Counts factorizations of `w` by width via all `2^(len-1)` cut sets.
fn brute_force_counts(w: &[u8]) -> BTreeMap<usize, u64> {
    let len = w.len();
    let word = Word::binary(w);
    let mut rep = vec![vec![false; len + 1]; len];
    for (i, row) in rep.iter_mut().enumerate() {
        for (n, slot) in row.iter_mut().enumerate().take(len - i + 1).skip(1) {
            *slot = is_repetition(&word.factor(i, n).expect("in range")).expect("nonempty");
        }
    }
    let mut counts = BTreeMap::new();
    for mask in 0u32..1 << (len - 1) {
        let mut start = 0;
        let mut blocks = 0;
        let mut ok = true;
        for end in 1..=len {
            if end == len || mask >> (end - 1) & 1 == 1 {
                if !rep[start][end - start] {
                    ok = false;
                    break;
                }
                blocks += 1;
                start = end;
            }
        }
        if ok {
            *counts.entry(blocks).or_insert(0) += 1;
        }
    }
    counts
}

fn dp_oracle(params: &Params) -> Result<Outcome> {
    let mut out = Outcome::default();
    let max_len = p(params, "max_len").min(24);
    let words: Vec<Vec<u8>> = (1..=max_len)
        .flat_map(|len| {
            (0u32..1 << len).map(move |m| (0..len).map(|k| (m >> k & 1) as u8).collect())
        })
        .collect();
    let mismatches: Vec<Option<Witness>> = words
        .par_iter()
        .map(|w| {
            let brute = brute_force_counts(w);
            let prof = width_profile(&Word::binary(w)).expect("nonempty");
            let dp: BTreeMap<usize, u64> = prof
                .counts
                .iter()
                .map(|(&k, v)| (k, u64::try_from(v).expect("small")))
                .collect();
            let sw = brute.keys().next().copied().unwrap_or(0);
            let lw = brute.keys().last().copied().unwrap_or(0);
            (dp != brute || prof.sw != sw || prof.lw != lw).then(|| {
                let text: String = w.iter().map(|b| char::from(b'0' + b)).collect();
                Witness::new(
                    text,
                    0,
                    w.len(),
                    format!("dp {dp:?} vs brute force {brute:?}"),
                )
            })
        })
        .collect();
    for m in mismatches.into_iter().flatten().take(5) {
        out.fail(m);
    }
    out.note(format!("{} words compared", words.len()));
    Ok(out)
}

/// Shortest widths of every factor of `w` of length at most `max_len`:
/// row `i` entry `n - 1`, 0 when not factorizable.
fn factor_width_rows(w: &Word, max_len: usize) -> Vec<Vec<u32>> {
    let table = RepetitionTable::with_max_len(w, max_len);
    (0..w.len())
        .into_par_iter()
        .map(|i| {
            let mut row = shortest_widths_from(&table, i, max_len, None);
            row.remove(0);
            row
        })
        .collect()
}

/// Checks `sw <= limit` on every factor, records the first factor attaining
/// each width and fails unless `must_attain` is attained.
fn width_bound(
    out: &mut Outcome,
    name: &str,
    rows: &[Vec<u32>],
    limit: u32,
    must_attain: u32,
) -> BTreeMap<u32, (usize, usize)> {
    let mut first: BTreeMap<u32, (usize, usize)> = BTreeMap::new();
    let mut violations = 0;
    for (i, row) in rows.iter().enumerate() {
        for (k, &sw) in row.iter().enumerate() {
            if sw > 0 {
                first.entry(sw).or_insert((i, k + 1));
            }
            if sw > limit {
                violations += 1;
                if violations <= 5 {
                    out.fail(Witness::new(
                        name,
                        i,
                        k + 1,
                        format!("shortest width {sw} > {limit}"),
                    ));
                }
            }
        }
    }
    let max = first.keys().last().copied().unwrap_or(0);
    out.note(format!("max shortest width {max}"));
    if max < must_attain {
        let (i, n) = first.get(&max).copied().unwrap_or((0, 0));
        out.fail(Witness::new(
            name,
            i,
            n,
            format!("width {must_attain} never attained; largest is {max}"),
        ));
    }
    for (&sw, &(i, n)) in &first {
        out.witnesses.push(Witness::new(
            name,
            i,
            n,
            format!("first factor of shortest width {sw}"),
        ));
    }
    first
}

fn fib_factor_bound(params: &Params) -> Result<Outcome> {
    let mut out = Outcome::default();
    let w = sequence_prefix(SequenceId::Fibonacci, p(params, "prefix"));
    let rows = factor_width_rows(&w, p(params, "max_len"));
    width_bound(&mut out, "fibonacci", &rows, 3, 3);
    Ok(out)
}

fn fib_prefix_bound(params: &Params) -> Result<Outcome> {
    let mut out = Outcome::default();
    let w = sequence_prefix(SequenceId::Fibonacci, p(params, "prefix"));
    let table = RepetitionTable::new(&w);
    let mut row = shortest_widths_from(&table, 0, w.len(), None);
    row.remove(0);
    width_bound(&mut out, "fibonacci-prefix", &[row], 2, 2);
    Ok(out)
}

const TM_TABLE: [(usize, usize, usize); 7] = [
    (1, 2, 1),
    (5, 4, 2),
    (5, 6, 3),
    (5, 12, 4),
    (5, 14, 5),
    (45, 20, 6),
    (45, 22, 7),
];

fn tm_width_bound(params: &Params) -> Result<Outcome> {
    let mut out = Outcome::default();
    let w = sequence_prefix(SequenceId::ThueMorse, p(params, "prefix"));
    let rows = factor_width_rows(&w, p(params, "max_len"));
    width_bound(&mut out, "thue_morse", &rows, 7, 7);
    out.witnesses.clear();
    let t = sequence_prefix(SequenceId::ThueMorse, 128);
    for (i, n, expected) in TM_TABLE {
        let f = t.factor(i, n)?;
        match crate::factorize::shortest_factorization(&f)? {
            Some(sf) if sf.width() == expected => {
                out.witnesses
                    .push(Witness::new("thue_morse", i, n, sf.render(&f)))
            }
            other => out.fail(Witness::new(
                "thue_morse",
                i,
                n,
                format!(
                    "expected width {expected}, got {:?}",
                    other.map(|x| x.width())
                ),
            )),
        }
    }
    Ok(out)
}

fn tm_uniqueness(params: &Params) -> Result<Outcome> {
    let mut out = Outcome::default();
    let w = sequence_prefix(SequenceId::ThueMorse, p(params, "prefix"));
    let max_len = p(params, "max_len");
    let table = RepetitionTable::with_max_len(&w, max_len);
    let one = BigUint::one();
    let multi: Vec<(usize, usize, String)> = (0..w.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            profiles_from(&table, i, max_len)
                .into_iter()
                .enumerate()
                .filter(|(_, pr)| pr.is_factorizable() && pr.total != one)
                .map(|(k, pr)| (i, k + 1, format!("{} factorizations", pr.total)))
                .collect::<Vec<_>>()
        })
        .collect();
    let two_first: Vec<(usize, usize)> = (1..=w.len())
        .into_par_iter()
        .flat_map_iter(|end| {
            first_term_counts(&table, end, max_len)
                .into_iter()
                .enumerate()
                .filter(|&(_, c)| c >= 2)
                .map(|(d, _)| (end - d, d))
                .collect::<Vec<_>>()
        })
        .collect();
    let mut factorizable = 0usize;
    for i in 0..w.len() {
        factorizable += shortest_widths_from(&table, i, max_len, None)
            .iter()
            .filter(|&&s| s > 0)
            .count();
    }
    for (i, n, d) in multi.into_iter().take(5) {
        out.fail(Witness::new("thue_morse", i, n, d));
    }
    for (i, n) in two_first.into_iter().take(5) {
        out.fail(Witness::new(
            "thue_morse",
            i,
            n,
            "two different first blocks",
        ));
    }
    out.note(format!(
        "{factorizable} factorizable factors, each with a unique factorization"
    ));
    Ok(out)
}

fn tm_28_states(params: &Params) -> Result<Outcome> {
    let mut out = Outcome::default();
    let o = factor_width_oracle(SequenceId::ThueMorse, params["training"]);
    let m = guess_dfao(&o, 12)?;
    let v = verify_against_oracle(&m, &o, params["verify"])?;
    if let Some((args, expected, got)) = v.counterexample {
        out.fail(Witness::new(
            "thue_morse",
            args[0] as usize,
            args[1] as usize,
            format!("oracle {expected}, machine {got}"),
        ));
    }
    let states = m.num_states();
    out.require(states == p(params, "states"), || {
        Witness::new(
            "thue_morse",
            0,
            0,
            format!("{states} states, {}", dead_note(&m)),
        )
    });
    out.require(m.minimize().num_states() == states, || {
        Witness::new("thue_morse", 0, 0, "guess is not minimal")
    });
    out.note(format!(
        "{states} states, {}; verified on {} pairs",
        dead_note(&m),
        v.checked
    ));
    Ok(out)
}

fn dead_note(m: &Dfao) -> String {
    m.dead_state().map_or("no dead state".to_string(), |d| {
        format!("dead state {d} included")
    })
}

fn rpf_width_bound(params: &Params) -> Result<Outcome> {
    let mut out = Outcome::default();
    let w = sequence_prefix(SequenceId::RegularPaperfolding, p(params, "prefix"));
    let rows = factor_width_rows(&w, p(params, "max_len"));
    width_bound(&mut out, "regular_paperfolding", &rows, 10, 10);
    Ok(out)
}

/// Maximum shortest width and longest factorizable factor of one word, with
/// the first factor attaining each.
#[derive(Debug, Clone, Copy)]
struct PfScan {
    max_sw: u32,
    max_sw_at: (usize, usize),
    max_len: usize,
    max_len_at: usize,
}

fn pf_scan(u: &UnfoldingInstructions) -> PfScan {
    let w = paperfolding_word(u);
    let len = w.len();
    let table = RepetitionTable::new(&w);
    let mut s = PfScan {
        max_sw: 0,
        max_sw_at: (0, 0),
        max_len: 0,
        max_len_at: 0,
    };
    for i in 0..len {
        let row = shortest_widths_from(&table, i, len, None);
        for (n, &sw) in row.iter().enumerate() {
            if sw > s.max_sw {
                s.max_sw = sw;
                s.max_sw_at = (i, n);
            }
            if sw > 0 && n > s.max_len {
                s.max_len = n;
                s.max_len_at = i;
            }
        }
    }
    s
}

fn all_instructions(min: usize, max: usize) -> Vec<UnfoldingInstructions> {
    (min.max(1)..=max)
        .flat_map(|k| (0u64..1 << k).map(move |m| UnfoldingInstructions::from_mask(k, m)))
        .collect()
}

fn pf_length_bound(params: &Params) -> Result<Outcome> {
    let mut out = Outcome::default();
    let us = all_instructions(1, p(params, "max_instructions").min(16));
    let scans: Vec<PfScan> = us.par_iter().map(pf_scan).collect();
    let mut longest: Option<(usize, PfScan)> = None;
    for (k, s) in scans.iter().enumerate() {
        if s.max_sw > 10 {
            out.fail(Witness::new(
                format!("pf({})", us[k]),
                s.max_sw_at.0,
                s.max_sw_at.1,
                format!("shortest width {}", s.max_sw),
            ));
        }
        if s.max_len > 45 {
            out.fail(Witness::new(
                format!("pf({})", us[k]),
                s.max_len_at,
                s.max_len,
                "factorizable factor longer than 45",
            ));
        }
        if longest.is_none_or(|(_, l)| s.max_len > l.max_len) {
            longest = Some((k, *s));
        }
    }
    let max_sw = scans.iter().map(|s| s.max_sw).max().unwrap_or(0);
    if let Some((k, s)) = longest {
        out.note(format!(
            "{} instruction words; longest factorizable factor has length {}; max shortest width {max_sw}",
            us.len(),
            s.max_len
        ));
        let w = Witness::new(
            format!("pf({})", us[k]),
            s.max_len_at,
            s.max_len,
            "longest factorizable factor",
        );
        if s.max_len != 45 && p(params, "max_instructions") >= 10 {
            out.fail(Witness::new(
                w.sequence.clone(),
                s.max_len_at,
                s.max_len,
                "maximum length is not 45",
            ));
        }
        out.witnesses.push(w);
    }
    Ok(out)
}

fn pf_dichotomy(params: &Params) -> Result<Outcome> {
    let mut out = Outcome::default();
    let lo = p(params, "min_instructions");
    let hi = p(params, "max_instructions").min(16);
    let us = all_instructions(lo, hi);
    let scans: Vec<PfScan> = us.par_iter().map(pf_scan).collect();
    let (mut low, mut high) = (0usize, 0usize);
    for (u, s) in us.iter().zip(&scans) {
        let name = format!("pf({u})");
        match s.max_sw {
            0..=7 => {
                if low == 0 {
                    out.witnesses.push(Witness::new(
                        &name,
                        0,
                        u.word_len(),
                        format!("all widths <= 7 (max {})", s.max_sw),
                    ));
                }
                low += 1;
            }
            10 => {
                if high == 0 {
                    out.witnesses.push(Witness::new(
                        &name,
                        s.max_sw_at.0,
                        s.max_sw_at.1,
                        "factor of width 10",
                    ));
                }
                high += 1;
            }
            other => out.fail(Witness::new(
                &name,
                s.max_sw_at.0,
                s.max_sw_at.1,
                format!("max shortest width {other}"),
            )),
        }
    }
    out.require(low > 0 && high > 0, || {
        Witness::new(
            "pf",
            0,
            0,
            format!("{low} words with widths <= 7, {high} with width 10"),
        )
    });
    // -1 followed by +1s stays in the low class
    for k in lo.max(1)..=hi {
        let mut folds = vec![Fold::Plus; k];
        folds[0] = Fold::Minus;
        let u = UnfoldingInstructions(folds);
        let s = pf_scan(&u);
        out.require(s.max_sw <= 7, || {
            Witness::new(
                format!("pf({u})"),
                s.max_sw_at.0,
                s.max_sw_at.1,
                format!("width {}", s.max_sw),
            )
        });
    }
    out.note(format!(
        "{low} words with all widths <= 7, {high} with a factor of width 10"
    ));
    Ok(out)
}

fn rs_23_states(params: &Params) -> Result<Outcome> {
    let mut out = Outcome::default();
    let cap = p(params, "cap");
    let o = capped_prefix_oracle(SequenceId::RudinShapiro, cap, params["training"]);
    let m = guess_dfao(&o, 16)?;
    let states = m.num_states();
    out.require(states == p(params, "states"), || {
        Witness::new("rudin_shapiro", 0, 0, format!("{states} states"))
    });
    let v = verify_against_oracle(&m, &o, params["verify"])?;
    if let Some((args, expected, got)) = v.counterexample {
        out.fail(Witness::new(
            "rudin_shapiro",
            0,
            args[0] as usize,
            format!("oracle {expected}, machine {got}"),
        ));
    }
    let induction = params["induction"];
    if let Some(f) = inductive_check_rsrf(&m, cap, induction)? {
        out.fail(Witness::new(
            "rudin_shapiro",
            0,
            0,
            format!("inductive check: {f:?}"),
        ));
    }
    let infinite = accepts_arbitrarily_large(&m)?;
    out.require(infinite, || {
        Witness::new("rudin_shapiro", 0, 0, "accepts only finitely many lengths")
    });
    let largest = (0..=induction)
        .rev()
        .find(|&n| m.evaluate_nat(&[n]).expect("unary") == 1)
        .unwrap_or(0) as usize;
    if largest > 0 {
        let w = sequence_prefix(SequenceId::RudinShapiro, largest);
        let lw = longest_factorization(&w)?.map_or(0, |f| f.width());
        out.require(8 * lw >= largest, || {
            Witness::new(
                "rudin_shapiro",
                0,
                largest,
                format!("longest width {lw} < n/8"),
            )
        });
        out.witnesses.push(Witness::new(
            "rudin_shapiro",
            0,
            largest,
            format!("longest width {lw}"),
        ));
        out.note(format!(
            "{states} states; largest accepted prefix length <= {induction} is {largest} with longest width {lw}"
        ));
    }
    Ok(out)
}

fn zeckendorf_roundtrip(params: &Params) -> Result<Outcome> {
    let mut out = Outcome::default();
    let bound = params["bound"];
    for sys in [
        NumerationSystem::zeckendorf_msd(),
        NumerationSystem::zeckendorf_lsd(),
    ] {
        for n in 0..=bound {
            let d = sys.encode(n);
            let ok = !d
                .tuples()
                .collect::<Vec<_>>()
                .windows(2)
                .any(|p| p[0][0] == 1 && p[1][0] == 1)
                && sys.decode(&d)? == n;
            if !ok {
                out.fail(Witness::new(
                    sys.to_string(),
                    0,
                    n as usize,
                    format!("encoding {d}"),
                ));
                break;
            }
        }
    }
    // every msd string without leading zeros and without 11, read once
    let sys = NumerationSystem::zeckendorf_msd();
    let max_len = sys.encode(bound).len();
    let mut seen = vec![false; bound as usize + 1];
    seen[0] = true;
    let mut stack: Vec<DigitReader> = vec![{
        let mut r = DigitReader::new(sys);
        r.push(1);
        r
    }];
    let mut depth_of = vec![1usize];
    while let (Some(r), Some(depth)) = (stack.pop(), depth_of.pop()) {
        let Some(v) = r.value() else { continue };
        if v <= bound {
            if seen[v as usize] {
                out.fail(Witness::new(
                    "zeckendorf",
                    0,
                    v as usize,
                    "two strings decode to the same value",
                ));
                break;
            }
            seen[v as usize] = true;
        }
        if depth < max_len {
            for d in 0..=1u8 {
                let mut next = r;
                next.push(d);
                if next.valid() {
                    stack.push(next);
                    depth_of.push(depth + 1);
                }
            }
        }
    }
    if let Some(n) = seen.iter().position(|&s| !s) {
        out.fail(Witness::new(
            "zeckendorf",
            0,
            n,
            "value without a canonical string",
        ));
    }
    out.note(format!("n <= {bound} in msd and lsd order"));
    Ok(out)
}

fn automata_algebra(params: &Params) -> Result<Outcome> {
    let mut out = Outcome::default();
    let bound = params["bound"];
    let cases = [
        (SequenceId::ThueMorse, 7u32, params["tm_training"], 512u64),
        (SequenceId::Fibonacci, 3, params["fib_training"], 233),
    ];
    for (seq, widths, training, width_training) in cases {
        let name = seq.name();
        let depth = crate::synthesis::default_suffix_depth(if seq == SequenceId::Fibonacci {
            NumerationSystem::zeckendorf_msd()
        } else {
            NumerationSystem::base2_msd()
        });
        let reps = (1..=widths)
            .map(|t| guess_dfao(&rep_at_most_oracle(seq, t, training), depth))
            .collect::<Result<Vec<_>>>()?;
        for (t, r) in reps.iter().enumerate() {
            out.require(r.minimize().num_states() == r.num_states(), || {
                Witness::new(
                    name,
                    0,
                    0,
                    format!("rep{} minimization not idempotent", t + 1),
                )
            });
        }
        let mut list: Vec<(&Dfao, u32)> = reps.iter().zip(1..=widths).collect();
        list.reverse();
        let combined = combine(&list)?;
        let min = combined.minimize();
        out.require(
            min.minimize() == min && equivalent(&min, &combined)?,
            || {
                Witness::new(
                    name,
                    0,
                    0,
                    "minimization changed behaviour or is not idempotent",
                )
            },
        );
        let table = factor_width_oracle(seq, bound).table(bound);
        'scan: for i in 0..=bound {
            for n in 0..=bound {
                let got = min.evaluate_nat(&[i, n])?;
                let expected = table.get(&[i, n]).expect("in box");
                if got != expected {
                    out.fail(Witness::new(
                        name,
                        i as usize,
                        n as usize,
                        format!("combined {got}, dynamic program {expected}"),
                    ));
                    break 'scan;
                }
            }
        }
        let direct = guess_dfao(&factor_width_oracle(seq, width_training), depth)?;
        out.require(equivalent(&direct, &min)?, || {
            Witness::new(
                name,
                0,
                0,
                "combined acceptors differ from the guessed width machine",
            )
        });
        // change one output and expect a distinguishing input
        let q = (0..min.num_states() as u32)
            .find(|&q| Some(q) != min.dead_state() && q != min.start())
            .unwrap_or(min.start());
        let mut outputs = min.outputs().to_vec();
        outputs[q as usize] = (outputs[q as usize] + 1) % (widths + 1);
        let delta = (0..min.num_states() as u32)
            .flat_map(|s| (0..min.alphabet_size()).map(move |a| (s, a)))
            .map(|(s, a)| min.next(s, a))
            .collect();
        let mutant = Dfao::new(min.numeration(), 2, outputs, delta, min.start())?;
        match find_difference(&min, &mutant)? {
            Some(d) if min.evaluate(&d)? != mutant.evaluate(&d)? => {}
            other => out.fail(Witness::new(
                name,
                0,
                0,
                format!(
                    "mutation not detected: {:?}",
                    other.map(|d: DigitString| d.to_string())
                ),
            )),
        }
        out.note(format!(
            "{name}: {} width acceptors combine into {} states",
            widths,
            min.num_states()
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_sorted_and_unique() {
        let ids: Vec<&str> = enumerate_claims().iter().map(|c| c.id).collect();
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(ids, sorted);
        assert!(ids.contains(&"tm-width-bound"));
        assert!(ids.contains(&"rs-23-states"));
    }

    #[test]
    fn unknown_claim_lists_alternatives() {
        match run_claim("nope", &Params::new()) {
            Err(Error::UnknownClaim { available, .. }) => {
                assert_eq!(available.len(), REGISTRY.len())
            }
            other => panic!("{other:?}"),
        }
        let bad: Params = [("nope".to_string(), 1)].into();
        assert!(run_claim("worked-example", &bad).is_err());
    }

    #[test]
    fn worked_example_passes() {
        let r = run_claim("worked-example", &Params::new()).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.witnesses.len(), 3);
    }

    #[test]
    fn small_runs_are_reproducible() {
        let params: Params = [("prefix".to_string(), 300), ("max_len".to_string(), 40)].into();
        let mut a = run_claim("tm-width-bound", &params).unwrap();
        let mut b = run_claim("tm-width-bound", &params).unwrap();
        a.runtime_secs = 0.0;
        b.runtime_secs = 0.0;
        assert_eq!(a, b);
        assert!(a.passed());
    }

    #[test]
    fn failing_runs_carry_witnesses() {
        // a 10-state target cannot match
        let params: Params = [
            ("states".to_string(), 10),
            ("training".to_string(), 64),
            ("verify".to_string(), 64),
        ]
        .into();
        let r = run_claim("tm-28-states", &params).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert!(!r.witnesses.is_empty());
    }

    #[test]
    fn brute_force_counts_small() {
        // 0000 splits only as (0000) or (00)(00)
        let c = brute_force_counts(&[0, 0, 0, 0]);
        assert_eq!(c, BTreeMap::from([(1, 1), (2, 1)]));
    }
}
