//! Deterministic finite automata with output (DFAOs) over digit tuples.
//!
//! A [`Dfao`] is always complete. Inputs are [`DigitString`]s of a fixed
//! arity; each tuple is packed into a single symbol, track 0 most
//! significant. Boolean acceptors are DFAOs whose outputs are 0 and 1.

mod minimize;
mod product;
mod text;

use std::collections::VecDeque;

pub use product::{combine, equivalent, find_difference};

use crate::error::{Error, Result};
use crate::numeration::{Base, DigitOrder, DigitString, NumerationSystem};

pub type StateId = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfao {
    numeration: NumerationSystem,
    arity: usize,
    alphabet: usize,
    delta: Vec<StateId>,
    outputs: Vec<u32>,
    start: StateId,
    dead: Option<StateId>,
}

impl Dfao {
    /// Builds a complete machine. `delta[q * alphabet + a]` is the successor
    /// of `q` on packed symbol `a`. A dead state (output 0, all transitions
    /// to itself) is detected automatically.
    pub fn new(
        numeration: NumerationSystem,
        arity: usize,
        outputs: Vec<u32>,
        delta: Vec<StateId>,
        start: StateId,
    ) -> Result<Self> {
        if arity == 0 {
            return Err(Error::SignatureMismatch("arity must be positive".into()));
        }
        let alphabet = alphabet_size(numeration, arity);
        let n = outputs.len();
        if n == 0 || start as usize >= n {
            return Err(Error::SignatureMismatch("start state out of range".into()));
        }
        if delta.len() != n * alphabet {
            return Err(Error::SignatureMismatch(format!(
                "expected {} transitions, got {}",
                n * alphabet,
                delta.len()
            )));
        }
        if delta.iter().any(|&q| q as usize >= n) {
            return Err(Error::SignatureMismatch(
                "transition to unknown state".into(),
            ));
        }
        let mut m = Dfao {
            numeration,
            arity,
            alphabet,
            delta,
            outputs,
            start,
            dead: None,
        };
        m.dead = m.find_dead();
        Ok(m)
    }

    /// One-state machine with constant output.
    pub fn constant(numeration: NumerationSystem, arity: usize, output: u32) -> Self {
        let alphabet = alphabet_size(numeration, arity);
        Dfao::new(numeration, arity, vec![output], vec![0; alphabet], 0).expect("valid")
    }

    fn find_dead(&self) -> Option<StateId> {
        (0..self.num_states() as StateId)
            .find(|&q| self.outputs[q as usize] == 0 && self.row(q).iter().all(|&r| r == q))
    }

    pub fn numeration(&self) -> NumerationSystem {
        self.numeration
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Number of packed input symbols.
    pub fn alphabet_size(&self) -> usize {
        self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.outputs.len()
    }

    pub fn start(&self) -> StateId {
        self.start
    }

    pub fn dead_state(&self) -> Option<StateId> {
        self.dead
    }

    pub fn output(&self, q: StateId) -> u32 {
        self.outputs[q as usize]
    }

    pub fn outputs(&self) -> &[u32] {
        &self.outputs
    }

    pub fn next(&self, q: StateId, symbol: usize) -> StateId {
        self.delta[q as usize * self.alphabet + symbol]
    }

    fn row(&self, q: StateId) -> &[StateId] {
        let a = self.alphabet;
        &self.delta[q as usize * a..(q as usize + 1) * a]
    }

    pub fn is_acceptor(&self) -> bool {
        self.outputs.iter().all(|&o| o <= 1)
    }

    /// Packs a digit tuple into a symbol.
    pub fn symbol(&self, tuple: &[u8]) -> Result<usize> {
        pack(self.numeration, self.arity, tuple)
    }

    pub fn tuple(&self, symbol: usize) -> Vec<u8> {
        unpack(self.numeration, self.arity, symbol)
    }

    pub fn run(&self, symbols: &[usize]) -> StateId {
        symbols.iter().fold(self.start, |q, &a| self.next(q, a))
    }

    /// Output of the state reached on `input`.
    pub fn evaluate(&self, input: &DigitString) -> Result<u32> {
        if input.arity() != self.arity {
            return Err(Error::SymbolOutsideAlphabet(format!(
                "{input} has arity {}, machine has arity {}",
                input.arity(),
                self.arity
            )));
        }
        let mut q = self.start;
        for t in input.tuples() {
            q = self.next(q, self.symbol(t)?);
        }
        Ok(self.output(q))
    }

    /// Evaluates on the canonical parallel encoding of `args`.
    pub fn evaluate_nat(&self, args: &[u64]) -> Result<u32> {
        if args.len() != self.arity {
            return Err(Error::SignatureMismatch(format!(
                "{} arguments for a machine of arity {}",
                args.len(),
                self.arity
            )));
        }
        self.evaluate(&self.numeration.encode_tuple(args))
    }

    /// Output after `extra` additional padding tuples on the padding side.
    pub fn evaluate_padded(&self, args: &[u64], extra: usize) -> Result<u32> {
        let canon = self.numeration.encode_tuple(args);
        let zero = vec![0u8; self.arity];
        let mut s = DigitString::empty(self.arity);
        if self.numeration.order == DigitOrder::Msd {
            (0..extra).for_each(|_| s.push(&zero));
            canon.tuples().for_each(|t| s.push(t));
        } else {
            canon.tuples().for_each(|t| s.push(t));
            (0..extra).for_each(|_| s.push(&zero));
        }
        self.evaluate(&s)
    }

    pub fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.num_states()];
        let mut queue = VecDeque::from([self.start]);
        seen[self.start as usize] = true;
        while let Some(q) = queue.pop_front() {
            for &r in self.row(q) {
                if !seen[r as usize] {
                    seen[r as usize] = true;
                    queue.push_back(r);
                }
            }
        }
        seen
    }

    /// States from which every reachable state has output 0.
    pub fn zero_closed(&self) -> Vec<bool> {
        let n = self.num_states();
        // reverse reachability from nonzero-output states
        let mut rev: Vec<Vec<StateId>> = vec![Vec::new(); n];
        for q in 0..n {
            for &r in self.row(q as StateId) {
                rev[r as usize].push(q as StateId);
            }
        }
        let mut bad = vec![false; n];
        let mut queue: VecDeque<StateId> = (0..n as StateId)
            .filter(|&q| self.outputs[q as usize] != 0)
            .collect();
        for &q in &queue {
            bad[q as usize] = true;
        }
        while let Some(q) = queue.pop_front() {
            for &p in &rev[q as usize] {
                if !bad[p as usize] {
                    bad[p as usize] = true;
                    queue.push_back(p);
                }
            }
        }
        bad.into_iter().map(|b| !b).collect()
    }

    /// Moore-minimal equivalent machine, states renumbered breadth-first
    /// from the start state in symbol order.
    pub fn minimize(&self) -> Dfao {
        minimize::minimize(self)
    }

    /// True iff infinitely many naturals (tuples, read through canonical
    /// encodings) get a nonzero output.
    pub fn accepts_infinitely_many(&self) -> bool {
        // product with a tracker of canonical form; a canonical string is
        // accepted in a node (q, c) with output(q) != 0 and c final
        let tracker = CanonTracker::new(self.numeration, self.arity);
        let nt = tracker.num_states();
        let n = self.num_states() * nt;
        let idx = |q: StateId, c: usize| q as usize * nt + c;
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut seen = vec![false; n];
        let start = idx(self.start, tracker.start());
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(v) = queue.pop_front() {
            let (q, c) = ((v / nt) as StateId, v % nt);
            for a in 0..self.alphabet {
                let Some(c2) = tracker.step(c, &self.tuple(a)) else {
                    continue;
                };
                let w = idx(self.next(q, a), c2);
                succ[v].push(w);
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        let accepting: Vec<bool> = (0..n)
            .map(|v| seen[v] && self.outputs[v / nt] != 0 && tracker.is_final(v % nt))
            .collect();
        // co-reachability
        let mut pred: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (v, out) in succ.iter().enumerate() {
            for &w in out {
                pred[w].push(v);
            }
        }
        let mut live = accepting.clone();
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| live[v]).collect();
        while let Some(w) = queue.pop_front() {
            for &v in &pred[w] {
                if !live[v] {
                    live[v] = true;
                    queue.push_back(v);
                }
            }
        }
        // infinitely many accepted canonical strings iff the trimmed graph
        // has a cycle; canonical strings and naturals are in bijection
        has_cycle(
            n,
            |v| succ[v].iter().copied().filter(|&w| live[w]).collect(),
            |v| seen[v] && live[v],
        )
    }
}

fn has_cycle(
    n: usize,
    succ: impl Fn(usize) -> Vec<usize>,
    include: impl Fn(usize) -> bool,
) -> bool {
    // iterative three-colour DFS
    let mut colour = vec![0u8; n];
    for root in 0..n {
        if colour[root] != 0 || !include(root) {
            continue;
        }
        let mut stack: Vec<(usize, Vec<usize>, usize)> = vec![(root, succ(root), 0)];
        colour[root] = 1;
        while let Some((v, next, k)) = stack.last_mut() {
            if *k < next.len() {
                let w = next[*k];
                *k += 1;
                match colour[w] {
                    1 => return true,
                    0 => {
                        colour[w] = 1;
                        let s = succ(w);
                        stack.push((w, s, 0));
                    }
                    _ => {}
                }
            } else {
                colour[*v] = 2;
                stack.pop();
            }
        }
    }
    false
}

/// Recognizes canonical encodings of tuples: zero is the single all-zero
/// tuple, every other value has no padding tuple on the padding side, and
/// Zeckendorf tracks have no adjacent 1s.
struct CanonTracker {
    sys: NumerationSystem,
    arity: usize,
}

// phases, msd: 0 empty, 1 read exactly one zero tuple, 2 first tuple nonzero
// phases, lsd: 0 empty, 1 read exactly one zero tuple, 2 last tuple nonzero,
// 3 last tuple zero (not final)
impl CanonTracker {
    fn new(sys: NumerationSystem, arity: usize) -> Self {
        CanonTracker { sys, arity }
    }

    /// State is `phase << arity | mask` where `mask` marks tracks whose last
    /// digit was 1.
    fn num_states(&self) -> usize {
        4 << self.arity
    }

    fn start(&self) -> usize {
        0
    }

    fn step(&self, state: usize, tuple: &[u8]) -> Option<usize> {
        let phase = state >> self.arity;
        let last = state & ((1 << self.arity) - 1);
        let mask = tuple
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == 1)
            .fold(0, |m, (t, _)| m | 1 << t);
        if self.sys.base == Base::Zeckendorf && mask & last != 0 {
            return None;
        }
        let zero = tuple.iter().all(|&d| d == 0);
        let phase = match (self.sys.order, phase, zero) {
            (DigitOrder::Msd, 0, true) => 1,
            (DigitOrder::Msd, 0, false) => 2,
            (DigitOrder::Msd, 1, _) => return None,
            (DigitOrder::Msd, _, _) => 2,
            (DigitOrder::Lsd, 0, true) => 1,
            (DigitOrder::Lsd, _, true) => 3,
            (DigitOrder::Lsd, _, false) => 2,
        };
        Some(phase << self.arity | mask)
    }

    fn is_final(&self, state: usize) -> bool {
        matches!(state >> self.arity, 1 | 2)
    }
}

pub(crate) fn alphabet_size(numeration: NumerationSystem, arity: usize) -> usize {
    (numeration.digit_bound() as usize).pow(arity as u32)
}

pub(crate) fn pack(numeration: NumerationSystem, arity: usize, tuple: &[u8]) -> Result<usize> {
    let bound = numeration.digit_bound() as usize;
    if tuple.len() != arity || tuple.iter().any(|&d| d as usize >= bound) {
        return Err(Error::SymbolOutsideAlphabet(format!("{tuple:?}")));
    }
    Ok(tuple.iter().fold(0, |acc, &d| acc * bound + d as usize))
}

pub(crate) fn unpack(numeration: NumerationSystem, arity: usize, mut symbol: usize) -> Vec<u8> {
    let bound = numeration.digit_bound() as usize;
    let mut t = vec![0u8; arity];
    for slot in t.iter_mut().rev() {
        *slot = (symbol % bound) as u8;
        symbol /= bound;
    }
    t
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    const B2: NumerationSystem = NumerationSystem::base2_msd();

    /// Acceptor of `n ≡ 0 (mod m)` for base-2 msd input.
    pub(crate) fn divisible_by(m: u32) -> Dfao {
        let outputs = (0..m).map(|r| u32::from(r == 0)).collect();
        let delta = (0..m)
            .flat_map(|r| [(2 * r) % m, (2 * r + 1) % m])
            .collect();
        Dfao::new(B2, 1, outputs, delta, 0).unwrap()
    }

    #[test]
    fn empty_input_gives_start_output() {
        let m = divisible_by(3);
        assert_eq!(m.evaluate(&DigitString::empty(1)).unwrap(), 1);
    }

    #[test]
    fn evaluate_mod3() {
        let m = divisible_by(3);
        for n in 0..200u64 {
            assert_eq!(m.evaluate_nat(&[n]).unwrap(), u32::from(n % 3 == 0));
            assert_eq!(m.evaluate_padded(&[n], 3).unwrap(), u32::from(n % 3 == 0));
        }
        assert!(m.evaluate(&"012".parse().unwrap()).is_err());
        assert!(m.evaluate_nat(&[1, 2]).is_err());
        assert!(m.evaluate(&"[0,1]".parse().unwrap()).is_err());
    }

    #[test]
    fn symbols_pack_track_zero_first() {
        let m = Dfao::constant(B2, 2, 0);
        assert_eq!(m.alphabet_size(), 4);
        assert_eq!(m.symbol(&[1, 0]).unwrap(), 2);
        assert_eq!(m.tuple(1), vec![0, 1]);
        assert!(m.symbol(&[2, 0]).is_err());
    }

    #[test]
    fn dead_state_detection() {
        // accepts exactly the strings 0*1
        let delta = vec![0, 1, 2, 2, 2, 2];
        let m = Dfao::new(B2, 1, vec![0, 1, 0], delta, 0).unwrap();
        assert_eq!(m.dead_state(), Some(2));
        assert!(m.zero_closed()[2]);
        assert!(!m.zero_closed()[0]);
    }

    #[test]
    fn infinite_acceptance() {
        assert!(divisible_by(3).accepts_infinitely_many());
        // exactly {1, 2, 3}: reads 0*, then 1, 10, 11
        let delta = vec![
            0, 1, // 0: leading zeros
            2, 2, // 1: read "1"
            3, 3, // 2: read two digits
            3, 3, // 3: dead
        ];
        let m = Dfao::new(B2, 1, vec![0, 1, 1, 0], delta, 0).unwrap();
        assert!(!m.accepts_infinitely_many());
        assert!(!Dfao::constant(B2, 1, 0).accepts_infinitely_many());
        assert!(Dfao::constant(B2, 2, 1).accepts_infinitely_many());
        // accepts only zero, however padded
        let zero_only = Dfao::new(B2, 1, vec![1, 0], vec![0, 1, 1, 1], 0).unwrap();
        assert!(!zero_only.accepts_infinitely_many());
    }

    #[test]
    fn infinite_acceptance_lsd() {
        let lsd = NumerationSystem::base2_lsd();
        // canonical lsd strings never end in 0, except "0" itself
        let ends_zero = Dfao::new(lsd, 1, vec![0, 1], vec![1, 0, 1, 0], 0).unwrap();
        assert!(!ends_zero.accepts_infinitely_many());
        let ends_one = Dfao::new(lsd, 1, vec![0, 1], vec![0, 1, 0, 1], 0).unwrap();
        assert!(ends_one.accepts_infinitely_many());
    }
}
