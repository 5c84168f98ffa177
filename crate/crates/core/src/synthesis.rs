//! Guessing automata from oracle data and checking the guesses.
//!
//! [`guess_dfao`] infers a DFAO from an [`OracleSpec`] by Myhill-Nerode
//! style state merging over the complete sample of digit strings of bounded
//! length: input prefixes are processed in breadth-first order and each new
//! prefix is identified with the first existing state it cannot be told apart
//! from on any sampled suffix. The guess is then checked against every
//! training string, and independent routines verify it on larger ranges.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::automata::{Dfao, StateId};
use crate::error::{Error, Result};
use crate::factorize::shortest_widths_from;
use crate::numeration::{Base, DigitReader, NumerationSystem};
use crate::repetition::RepetitionTable;
use crate::words::{sequence_prefix, SequenceId};

const MAX_ARITY: usize = 4;
const MAX_STATES: usize = 20_000;

/// Oracle values on the box `[0, bound]^arity`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleTable {
    arity: usize,
    bound: u64,
    values: Vec<u32>,
}

impl OracleTable {
    pub fn new(arity: usize, bound: u64, values: Vec<u32>) -> Self {
        let side = bound as usize + 1;
        assert_eq!(values.len(), side.pow(arity as u32), "table size");
        OracleTable {
            arity,
            bound,
            values,
        }
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// `None` outside the box.
    pub fn get(&self, args: &[u64]) -> Option<u32> {
        debug_assert_eq!(args.len(), self.arity);
        let side = self.bound + 1;
        let mut idx = 0u64;
        for &a in args {
            if a > self.bound {
                return None;
            }
            idx = idx * side + a;
        }
        Some(self.values[idx as usize])
    }

    /// Tuples of the box in row-major order.
    fn tuple_at(&self, mut idx: usize) -> Vec<u64> {
        let side = self.bound as usize + 1;
        let mut t = vec![0u64; self.arity];
        for slot in t.iter_mut().rev() {
            *slot = (idx % side) as u64;
            idx /= side;
        }
        t
    }
}

type Tabulator = dyn Fn(u64) -> OracleTable + Send + Sync;

/// A total function on tuples of naturals, together with the numeration its
/// automaton reads and the box used for training.
#[derive(Clone)]
pub struct OracleSpec {
    pub name: String,
    pub arity: usize,
    pub numeration: NumerationSystem,
    pub training_bound: u64,
    tabulate: Arc<Tabulator>,
}

impl fmt::Debug for OracleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OracleSpec")
            .field("name", &self.name)
            .field("arity", &self.arity)
            .field("numeration", &self.numeration)
            .field("training_bound", &self.training_bound)
            .finish()
    }
}

impl OracleSpec {
    /// Oracle from a bulk tabulation routine.
    pub fn new(
        name: impl Into<String>,
        arity: usize,
        numeration: NumerationSystem,
        training_bound: u64,
        tabulate: impl Fn(u64) -> OracleTable + Send + Sync + 'static,
    ) -> Self {
        OracleSpec {
            name: name.into(),
            arity,
            numeration,
            training_bound,
            tabulate: Arc::new(tabulate),
        }
    }

    /// Oracle from a pointwise function.
    pub fn from_fn(
        name: impl Into<String>,
        arity: usize,
        numeration: NumerationSystem,
        training_bound: u64,
        f: impl Fn(&[u64]) -> u32 + Send + Sync + 'static,
    ) -> Self {
        Self::new(name, arity, numeration, training_bound, move |bound| {
            let side = bound as usize + 1;
            let mut values = Vec::with_capacity(side.pow(arity as u32));
            let mut t = vec![0u64; arity];
            for _ in 0..side.pow(arity as u32) {
                values.push(f(&t));
                for slot in t.iter_mut().rev() {
                    *slot += 1;
                    if *slot as usize == side {
                        *slot = 0;
                    } else {
                        break;
                    }
                }
            }
            OracleTable::new(arity, bound, values)
        })
    }

    pub fn with_training_bound(mut self, bound: u64) -> Self {
        self.training_bound = bound;
        self
    }

    pub fn table(&self, bound: u64) -> OracleTable {
        (self.tabulate)(bound)
    }

    /// Single value; tabulates the whole box up to the largest argument.
    pub fn eval(&self, args: &[u64]) -> u32 {
        let bound = args.iter().copied().max().unwrap_or(0);
        self.table(bound).get(args).expect("inside box")
    }
}

fn numeration_for(seq: SequenceId) -> NumerationSystem {
    match seq {
        SequenceId::Fibonacci => NumerationSystem::zeckendorf_msd(),
        _ => NumerationSystem::base2_msd(),
    }
}

/// Shortest widths of all factors `x[i..i+n)`, `i, n <= bound`, row `i`.
fn factor_width_rows(seq: SequenceId, bound: u64) -> Vec<Vec<u32>> {
    let b = bound as usize;
    let w = sequence_prefix(seq, 2 * b + 1);
    let table = RepetitionTable::with_max_len(&w, b);
    (0..=b)
        .into_par_iter()
        .map(|i| shortest_widths_from(&table, i, b, None))
        .collect()
}

/// `(i, n) -> sw(x[i..i+n-1])`, 0 when there is no factorization.
pub fn factor_width_oracle(seq: SequenceId, training_bound: u64) -> OracleSpec {
    OracleSpec::new(
        format!("{seq}-factor-width"),
        2,
        numeration_for(seq),
        training_bound,
        move |bound| {
            let rows = factor_width_rows(seq, bound);
            OracleTable::new(2, bound, rows.concat())
        },
    )
}

/// Acceptor oracle for `1 <= sw(x[i..i+n-1]) <= t`.
pub fn rep_at_most_oracle(seq: SequenceId, t: u32, training_bound: u64) -> OracleSpec {
    OracleSpec::new(
        format!("{seq}-rep{t}"),
        2,
        numeration_for(seq),
        training_bound,
        move |bound| {
            let rows = factor_width_rows(seq, bound);
            let values = rows
                .concat()
                .into_iter()
                .map(|w| u32::from(w >= 1 && w <= t))
                .collect();
            OracleTable::new(2, bound, values)
        },
    )
}

/// `n -> sw(x[0..n-1])`.
pub fn prefix_width_oracle(seq: SequenceId, training_bound: u64) -> OracleSpec {
    OracleSpec::new(
        format!("{seq}-prefix-width"),
        1,
        numeration_for(seq),
        training_bound,
        move |bound| {
            let w = sequence_prefix(seq, bound as usize);
            let table = RepetitionTable::new(&w);
            let mut v = shortest_widths_from(&table, 0, bound as usize, None);
            v.resize(bound as usize + 1, 0);
            OracleTable::new(1, bound, v)
        },
    )
}

/// Is `x[0..n-1]` a product of repetitions, each of length at most `cap`?
/// Returned for `n = 0..=bound`; the empty prefix counts as factorizable.
pub fn capped_prefix_factorizable(seq: SequenceId, cap: usize, bound: usize) -> Vec<bool> {
    let w = sequence_prefix(seq, bound);
    let table = RepetitionTable::with_max_len(&w, cap);
    let mut reach = vec![false; bound + 1];
    reach[0] = true;
    for k in 0..bound {
        if reach[k] {
            for n in table.lengths(k, bound - k) {
                reach[k + n] = true;
            }
        }
    }
    reach
}

/// Acceptor oracle for prefixes factorizable into repetitions of length at
/// most `cap`.
pub fn capped_prefix_oracle(seq: SequenceId, cap: usize, training_bound: u64) -> OracleSpec {
    OracleSpec::new(
        format!("{seq}-prefix-cap{cap}"),
        1,
        numeration_for(seq),
        training_bound,
        move |bound| {
            let reach = capped_prefix_factorizable(seq, cap, bound as usize);
            OracleTable::new(1, bound, reach.into_iter().map(u32::from).collect())
        },
    )
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Live,
    /// Some track has left the training box; values stay unknown.
    Unknown,
    /// Some Zeckendorf track has adjacent 1s; the value is 0 from here on.
    Invalid,
}

/// Digit strings of bounded length with their oracle values.
struct Sample<'a> {
    table: &'a OracleTable,
    sys: NumerationSystem,
    arity: usize,
    alphabet: usize,
    max_len: usize,
    tuples: Vec<[u8; MAX_ARITY]>,
}

#[derive(Clone, Copy)]
struct Cursor {
    readers: [DigitReader; MAX_ARITY],
    len: usize,
}

impl<'a> Sample<'a> {
    fn new(table: &'a OracleTable, sys: NumerationSystem, arity: usize) -> Result<Self> {
        if arity == 0 || arity > MAX_ARITY {
            return Err(Error::Synthesis(format!("arity {arity} is not supported")));
        }
        let bound = sys.digit_bound() as usize;
        let alphabet = bound.pow(arity as u32);
        let tuples = (0..alphabet)
            .map(|mut s| {
                let mut t = [0u8; MAX_ARITY];
                for slot in t[..arity].iter_mut().rev() {
                    *slot = (s % bound) as u8;
                    s /= bound;
                }
                t
            })
            .collect();
        let max_len = sys.encode_tuple(&vec![table.bound(); arity]).len();
        Ok(Sample {
            table,
            sys,
            arity,
            alphabet,
            max_len,
            tuples,
        })
    }

    fn root(&self) -> Cursor {
        Cursor {
            readers: [DigitReader::new(self.sys); MAX_ARITY],
            len: 0,
        }
    }

    fn step(&self, c: &Cursor, symbol: usize) -> Cursor {
        let mut next = *c;
        let t = &self.tuples[symbol];
        for (r, &d) in next.readers[..self.arity].iter_mut().zip(t) {
            r.push(d);
        }
        next.len += 1;
        next
    }

    fn status(&self, c: &Cursor) -> Status {
        let rs = &c.readers[..self.arity];
        if rs.iter().any(|r| !r.valid()) {
            Status::Invalid
        } else if rs
            .iter()
            .any(|r| r.value().is_none_or(|v| v > self.table.bound()))
        {
            Status::Unknown
        } else {
            Status::Live
        }
    }

    fn value(&self, c: &Cursor) -> Option<u32> {
        match self.status(c) {
            Status::Invalid => Some(0),
            Status::Unknown => None,
            Status::Live => {
                let mut args = [0u64; MAX_ARITY];
                for (a, r) in args.iter_mut().zip(&c.readers[..self.arity]) {
                    *a = r.value().expect("live");
                }
                self.table.get(&args[..self.arity])
            }
        }
    }

    /// Do `u` and `v` agree on every sampled suffix of length exactly `depth`?
    fn agree_at(&self, u: &Cursor, v: &Cursor, depth: usize) -> bool {
        let (su, sv) = (self.status(u), self.status(v));
        if su == Status::Unknown || sv == Status::Unknown {
            return true;
        }
        if su == Status::Invalid && sv == Status::Invalid {
            return true;
        }
        if depth == 0 {
            return self.value(u) == self.value(v);
        }
        (0..self.alphabet).all(|a| self.agree_at(&self.step(u, a), &self.step(v, a), depth - 1))
    }

    /// Agreement on all suffixes up to `max_depth`, shortest first.
    fn compatible(&self, u: &Cursor, v: &Cursor, max_depth: usize) -> bool {
        (0..=max_depth).all(|d| self.agree_at(u, v, d))
    }
}

/// A string of packed symbols on which the guess and the oracle disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleConflict {
    pub input: Vec<usize>,
    pub expected: u32,
    pub actual: u32,
}

fn check_against_sample(
    sample: &Sample<'_>,
    m: &Dfao,
    zero_closed: &[bool],
    cur: &Cursor,
    q: StateId,
    path: &mut Vec<usize>,
) -> Option<SampleConflict> {
    match sample.status(cur) {
        Status::Unknown => return None,
        Status::Invalid => {
            return (!zero_closed[q as usize]).then(|| SampleConflict {
                input: path.clone(),
                expected: 0,
                actual: m.output(q),
            });
        }
        Status::Live => {}
    }
    let expected = sample.value(cur).expect("live");
    if m.output(q) != expected {
        return Some(SampleConflict {
            input: path.clone(),
            expected,
            actual: m.output(q),
        });
    }
    if cur.len == sample.max_len {
        return None;
    }
    for a in 0..sample.alphabet {
        path.push(a);
        let found = check_against_sample(
            sample,
            m,
            zero_closed,
            &sample.step(cur, a),
            m.next(q, a),
            path,
        );
        path.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Default suffix depth: 12 digits for base-2 style systems, 16 for Zeckendorf.
pub fn default_suffix_depth(sys: NumerationSystem) -> usize {
    match sys.base {
        Base::Zeckendorf => 16,
        Base::Radix(_) => 12,
    }
}

/// Infers a DFAO consistent with `o` on every digit string of length at most
/// the length of the encoding of `o.training_bound`. States are separated
/// only by suffixes of length at most `suffix_depth`.
///
/// Fails, naming a conflicting input, when the merged machine contradicts
/// the sample; a larger `suffix_depth` or training bound usually helps.
pub fn guess_dfao(o: &OracleSpec, suffix_depth: usize) -> Result<Dfao> {
    let table = o.table(o.training_bound);
    let sample = Sample::new(&table, o.numeration, o.arity)?;
    let a = sample.alphabet;

    let mut access: Vec<Cursor> = vec![sample.root()];
    let mut delta: Vec<StateId> = Vec::new();
    let mut k = 0;
    while k < access.len() {
        for sym in 0..a {
            let child = sample.step(&access[k], sym);
            let depth = suffix_depth.min(sample.max_len.saturating_sub(child.len));
            let target = (0..access.len()).find(|&s| sample.compatible(&child, &access[s], depth));
            let id = match target {
                Some(s) => s,
                None => {
                    if child.len > sample.max_len || access.len() >= MAX_STATES {
                        return Err(Error::Synthesis(format!(
                            "{}: training sample too small to close the state set",
                            o.name
                        )));
                    }
                    access.push(child);
                    access.len() - 1
                }
            };
            delta.push(id as StateId);
        }
        k += 1;
    }
    let outputs = access
        .iter()
        .map(|c| {
            sample.value(c).ok_or_else(|| {
                Error::Synthesis(format!(
                    "{}: access string outside the training box",
                    o.name
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let m = Dfao::new(o.numeration, o.arity, outputs, delta, 0)?;
    let zero_closed = m.zero_closed();
    if let Some(c) = check_against_sample(
        &sample,
        &m,
        &zero_closed,
        &sample.root(),
        m.start(),
        &mut Vec::new(),
    ) {
        let shown: Vec<String> = c
            .input
            .iter()
            .map(|&s| format!("{:?}", m.tuple(s)))
            .collect();
        let what = if c.actual == c.expected {
            "a state that is not constantly 0 after an invalid input".to_string()
        } else {
            format!("{} but the oracle says {}", c.actual, c.expected)
        };
        return Err(Error::Synthesis(format!(
            "{}: guess outputs {what} on {}; suffix depth {suffix_depth} too small",
            o.name,
            shown.join(""),
        )));
    }
    Ok(m.minimize())
}

/// [`guess_dfao`] starting from [`default_suffix_depth`] and raising the depth
/// on failure until it covers the whole sample.
pub fn guess_dfao_auto(o: &OracleSpec) -> Result<(Dfao, usize)> {
    let table_len = o
        .numeration
        .encode_tuple(&vec![o.training_bound; o.arity])
        .len();
    let mut depth = default_suffix_depth(o.numeration);
    loop {
        match guess_dfao(o, depth) {
            Ok(m) => return Ok((m, depth)),
            Err(e) if depth >= table_len => return Err(e),
            Err(_) => depth += 2,
        }
    }
}

/// Outcome of an exhaustive comparison with an oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub checked: usize,
    /// Lexicographically least disagreeing tuple, with (oracle, machine).
    pub counterexample: Option<(Vec<u64>, u32, u32)>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Compares `m` with `o` on every tuple of `[0, bound]^arity`.
pub fn verify_against_oracle(m: &Dfao, o: &OracleSpec, bound: u64) -> Result<Verification> {
    if m.arity() != o.arity || m.numeration() != o.numeration {
        return Err(Error::SignatureMismatch(format!(
            "machine reads {} arity {}, oracle {} expects {} arity {}",
            m.numeration(),
            m.arity(),
            o.name,
            o.numeration,
            o.arity
        )));
    }
    let table = o.table(bound);
    let n = table.values.len();
    let first_bad = (0..n)
        .into_par_iter()
        .with_min_len(1024)
        .find_first(|&idx| {
            let args = table.tuple_at(idx);
            m.evaluate_nat(&args).expect("signature checked") != table.values[idx]
        });
    Ok(Verification {
        checked: n,
        counterexample: first_bad.map(|idx| {
            let args = table.tuple_at(idx);
            let got = m.evaluate_nat(&args).expect("signature checked");
            (args, table.values[idx], got)
        }),
    })
}

/// Which part of the inductive argument failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InductionFailure {
    /// `n <= cap` and the machine disagrees with the direct computation.
    Base { n: u64 },
    /// The machine accepts `n - len`, the last `len` symbols form a
    /// repetition, but `n` is rejected.
    Step { n: u64, len: u64 },
    /// `n` is accepted but no accepted `n - len` ends in a repetition.
    Closure { n: u64 },
}

/// Checks that the acceptor `m` recognizes exactly the prefix lengths of
/// Rudin-Shapiro factorizable into repetitions of length at most `cap`, on
/// `0..=bound`: base cases `n <= cap` against the direct computation, the
/// induction step (accepted `n - i` plus a repetition of length `i <= cap`
/// forces acceptance of `n`) and its converse for every `n > cap`.
pub fn inductive_check_rsrf(m: &Dfao, cap: usize, bound: u64) -> Result<Option<InductionFailure>> {
    if m.arity() != 1 || !m.is_acceptor() {
        return Err(Error::SignatureMismatch("expected a unary acceptor".into()));
    }
    let b = bound as usize;
    let w = sequence_prefix(SequenceId::RudinShapiro, b);
    let reps = RepetitionTable::with_max_len(&w, cap);
    let direct = capped_prefix_factorizable(SequenceId::RudinShapiro, cap, cap.min(b));
    let accepted: Vec<bool> = (0..=bound)
        .into_par_iter()
        .map(|n| m.evaluate_nat(&[n]).expect("unary") == 1)
        .collect();
    for n in 0..=cap.min(b) {
        if accepted[n] != direct[n] {
            return Ok(Some(InductionFailure::Base { n: n as u64 }));
        }
    }
    for n in cap + 1..=b {
        let mut supported = false;
        for len in 1..=cap {
            if accepted[n - len] && reps.contains(n - len, len) {
                if !accepted[n] {
                    return Ok(Some(InductionFailure::Step {
                        n: n as u64,
                        len: len as u64,
                    }));
                }
                supported = true;
            }
        }
        if accepted[n] && !supported {
            return Ok(Some(InductionFailure::Closure { n: n as u64 }));
        }
    }
    Ok(None)
}

/// True iff the acceptor accepts infinitely many naturals.
pub fn accepts_arbitrarily_large(m: &Dfao) -> Result<bool> {
    if !m.is_acceptor() {
        return Err(Error::SignatureMismatch("expected a 0/1 acceptor".into()));
    }
    Ok(m.accepts_infinitely_many())
}

#[cfg(test)]
mod tests {
    use super::*;

    const B2: NumerationSystem = NumerationSystem::base2_msd();

    #[test]
    fn constant_oracle_gives_one_state() {
        let o = OracleSpec::from_fn("zero", 1, B2, 64, |_| 0);
        let m = guess_dfao(&o, 12).unwrap();
        assert_eq!(m.num_states(), 1);
        let o2 = OracleSpec::from_fn("zero2", 2, B2, 16, |_| 0);
        assert_eq!(guess_dfao(&o2, 12).unwrap().num_states(), 1);
    }

    #[test]
    fn parity_lsd() {
        let lsd = NumerationSystem::base2_lsd();
        let o = OracleSpec::from_fn("even", 1, lsd, 256, |a| u32::from(a[0] % 2 == 0));
        let m = guess_dfao(&o, 12).unwrap();
        // start, "even so far", "odd"
        assert!(m.num_states() <= 3);
        assert!(verify_against_oracle(&m, &o, 5000).unwrap().passed());
    }

    #[test]
    fn residues_msd() {
        for modulus in [3u64, 5, 7] {
            let o = OracleSpec::from_fn("mod", 1, B2, 512, move |a| (a[0] % modulus) as u32);
            let m = guess_dfao(&o, 12).unwrap();
            assert_eq!(m.num_states() as u64, modulus);
            assert!(verify_against_oracle(&m, &o, 4096).unwrap().passed());
        }
    }

    #[test]
    fn pair_oracle() {
        // (a + b) mod 3 on pairs
        let o = OracleSpec::from_fn("sum", 2, B2, 64, |a| ((a[0] + a[1]) % 3) as u32);
        let m = guess_dfao(&o, 12).unwrap();
        assert_eq!(m.num_states(), 3);
        assert!(verify_against_oracle(&m, &o, 150).unwrap().passed());
    }

    #[test]
    fn zeckendorf_invalid_inputs_are_dead() {
        let z = NumerationSystem::zeckendorf_msd();
        let o = OracleSpec::from_fn("zeck-even", 1, z, 200, |a| u32::from(a[0] % 2 == 0));
        let m = guess_dfao(&o, 16).unwrap();
        assert!(verify_against_oracle(&m, &o, 200).unwrap().passed());
        let bad: crate::numeration::DigitString = "0110".parse().unwrap();
        assert_eq!(m.evaluate(&bad).unwrap(), 0);
        assert!(m.dead_state().is_some());
    }

    #[test]
    fn mutated_machine_fails_verification() {
        let o = OracleSpec::from_fn("mod5", 1, B2, 256, |a| u32::from(a[0] % 5 == 0));
        let m = guess_dfao(&o, 12).unwrap();
        let mut text = m.to_text();
        // redirect the first transition out of the start state
        let line = text
            .lines()
            .find(|l| l.starts_with("trans 0 [1]"))
            .unwrap()
            .to_string();
        let target: u32 = line.rsplit(' ').next().unwrap().parse().unwrap();
        let wrong = (target + 1) % m.num_states() as u32;
        text = text.replace(&line, &format!("trans 0 [1] {wrong}"));
        let bad: Dfao = text.parse().unwrap();
        let v = verify_against_oracle(&bad, &o, 1000).unwrap();
        let (args, expected, actual) = v.counterexample.unwrap();
        assert_ne!(expected, actual);
        // every smaller input is handled correctly
        for n in 0..args[0] {
            assert_eq!(bad.evaluate_nat(&[n]).unwrap(), u32::from(n % 5 == 0));
        }
    }

    #[test]
    fn signature_mismatch() {
        let o = OracleSpec::from_fn("z", 1, B2, 8, |_| 0);
        let m = Dfao::constant(B2, 2, 0);
        assert!(verify_against_oracle(&m, &o, 8).is_err());
    }

    #[test]
    fn finite_and_infinite_languages() {
        let o = OracleSpec::from_fn("mod3", 1, B2, 256, |a| u32::from(a[0] % 3 == 0));
        assert!(accepts_arbitrarily_large(&guess_dfao(&o, 12).unwrap()).unwrap());
        let small = OracleSpec::from_fn("123", 1, B2, 256, |a| u32::from((1..=3).contains(&a[0])));
        let m = guess_dfao(&small, 12).unwrap();
        assert!(!accepts_arbitrarily_large(&m).unwrap());
        assert!(accepts_arbitrarily_large(&Dfao::constant(B2, 1, 2)).is_err());
    }

    #[test]
    fn empty_acceptor_fails_induction() {
        let empty = Dfao::constant(B2, 1, 0);
        // base case n = 0 (empty prefix) is factorizable
        assert_eq!(
            inductive_check_rsrf(&empty, 8, 256).unwrap(),
            Some(InductionFailure::Base { n: 0 })
        );
    }

    #[test]
    fn capped_prefixes() {
        // rs = 0001001000011101...; "00" at 0, then "01" is not a repetition
        let r = capped_prefix_factorizable(SequenceId::RudinShapiro, 8, 8);
        assert!(r[0]);
        assert!(!r[1]);
        assert!(r[2]);
        assert!(r[3]); // 000
    }

    #[test]
    fn oracle_tables() {
        let o = factor_width_oracle(SequenceId::ThueMorse, 32);
        let t = o.table(32);
        assert_eq!(t.get(&[1, 2]), Some(1));
        assert_eq!(t.get(&[5, 12]), Some(4));
        assert_eq!(t.get(&[0, 0]), Some(0));
        assert_eq!(t.get(&[33, 0]), None);
        assert_eq!(o.eval(&[5, 6]), 3);
        let p = prefix_width_oracle(SequenceId::Fibonacci, 16);
        assert_eq!(p.eval(&[2]), 0);
    }
}
