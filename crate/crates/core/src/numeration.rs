//! Positional numeration systems: base `k` and Zeckendorf.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Base {
    Radix(u32),
    /// Digits over `{0, 1}` weighted by `1, 2, 3, 5, 8, ...`, no two adjacent 1s.
    Zeckendorf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DigitOrder {
    Msd,
    Lsd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NumerationSystem {
    pub base: Base,
    pub order: DigitOrder,
}

/// Largest Fibonacci weight index that fits in a `u64`.
const FIB_WEIGHTS: usize = 91;

/// Zeckendorf weights `1, 2, 3, 5, 8, ...`.
pub(crate) fn fib_weights() -> &'static [u64; FIB_WEIGHTS] {
    static WEIGHTS: std::sync::OnceLock<[u64; FIB_WEIGHTS]> = std::sync::OnceLock::new();
    WEIGHTS.get_or_init(|| {
        let mut w = [0u64; FIB_WEIGHTS];
        w[0] = 1;
        w[1] = 2;
        for k in 2..FIB_WEIGHTS {
            w[k] = w[k - 1] + w[k - 2];
        }
        w
    })
}

impl NumerationSystem {
    pub const fn base2_msd() -> Self {
        NumerationSystem {
            base: Base::Radix(2),
            order: DigitOrder::Msd,
        }
    }

    pub const fn base2_lsd() -> Self {
        NumerationSystem {
            base: Base::Radix(2),
            order: DigitOrder::Lsd,
        }
    }

    pub const fn zeckendorf_msd() -> Self {
        NumerationSystem {
            base: Base::Zeckendorf,
            order: DigitOrder::Msd,
        }
    }

    pub const fn zeckendorf_lsd() -> Self {
        NumerationSystem {
            base: Base::Zeckendorf,
            order: DigitOrder::Lsd,
        }
    }

    /// Number of distinct digits.
    pub fn digit_bound(&self) -> u32 {
        match self.base {
            Base::Radix(k) => k,
            Base::Zeckendorf => 2,
        }
    }

    /// Canonical digits of `n`, most significant first; zero is `[0]`.
    fn digits_msd(&self, mut n: u64) -> Vec<u8> {
        if n == 0 {
            return vec![0];
        }
        match self.base {
            Base::Radix(k) => {
                let k = u64::from(k);
                let mut out = Vec::new();
                while n > 0 {
                    out.push((n % k) as u8);
                    n /= k;
                }
                out.reverse();
                out
            }
            Base::Zeckendorf => {
                let w = fib_weights();
                let top = w.iter().rposition(|&f| f <= n).expect("n >= 1");
                let mut out = Vec::with_capacity(top + 1);
                for k in (0..=top).rev() {
                    if w[k] <= n {
                        n -= w[k];
                        out.push(1);
                    } else {
                        out.push(0);
                    }
                }
                out
            }
        }
    }

    /// Canonical representation of `n` as an arity-1 digit string.
    pub fn encode(&self, n: u64) -> DigitString {
        self.encode_tuple(&[n])
    }

    /// Parallel representation of `(a, b)`, shorter track zero-padded.
    pub fn encode_pair(&self, a: u64, b: u64) -> DigitString {
        self.encode_tuple(&[a, b])
    }

    /// Parallel representation of a tuple. Padding goes on the most
    /// significant side, i.e. in front for msd-first and at the end for
    /// lsd-first systems.
    pub fn encode_tuple(&self, values: &[u64]) -> DigitString {
        let tracks: Vec<Vec<u8>> = values.iter().map(|&v| self.digits_msd(v)).collect();
        let len = tracks.iter().map(Vec::len).max().unwrap_or(1);
        let arity = values.len();
        let mut digits = vec![0u8; len * arity];
        for (t, track) in tracks.iter().enumerate() {
            let pad = len - track.len();
            for (k, &d) in track.iter().enumerate() {
                digits[(pad + k) * arity + t] = d;
            }
        }
        let mut s = DigitString { arity, digits };
        if self.order == DigitOrder::Lsd {
            s.reverse();
        }
        s
    }

    /// Inverse of [`encode`](Self::encode); padding is ignored.
    pub fn decode(&self, d: &DigitString) -> Result<u64> {
        if d.arity != 1 {
            return Err(Error::InvalidDigits(format!(
                "expected arity 1, got {}",
                d.arity
            )));
        }
        Ok(self.decode_tuple(d)?[0])
    }

    /// Decodes every track of `d`.
    pub fn decode_tuple(&self, d: &DigitString) -> Result<Vec<u64>> {
        let mut readers = vec![DigitReader::new(*self); d.arity];
        for tuple in d.tuples() {
            for (r, &digit) in readers.iter_mut().zip(tuple) {
                if u32::from(digit) >= self.digit_bound() {
                    return Err(Error::InvalidDigits(format!(
                        "digit {digit} is too large for {self}"
                    )));
                }
                r.push(digit);
            }
        }
        readers
            .iter()
            .map(|r| match r.value() {
                Some(v) if r.valid() => Ok(v),
                Some(_) => Err(Error::InvalidDigits(format!(
                    "`{d}` has adjacent 1s in a Zeckendorf track"
                ))),
                None => Err(Error::InvalidDigits(format!("`{d}` overflows u64"))),
            })
            .collect()
    }
}

impl fmt::Display for NumerationSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.base {
            Base::Radix(k) => write!(f, "base_{k}")?,
            Base::Zeckendorf => f.write_str("zeckendorf")?,
        }
        match self.order {
            DigitOrder::Msd => f.write_str(" msd"),
            DigitOrder::Lsd => f.write_str(" lsd"),
        }
    }
}

impl FromStr for NumerationSystem {
    type Err = Error;

    /// `base_2 msd`, `zeckendorf msd`, `base_3 lsd`, ...
    fn from_str(s: &str) -> Result<Self> {
        let mut it = s.split_whitespace();
        let bad = || Error::InvalidDigits(format!("unknown numeration `{s}`"));
        let base = match it.next().ok_or_else(bad)? {
            "zeckendorf" | "fib" => Base::Zeckendorf,
            b => {
                let k: u32 = b
                    .strip_prefix("base_")
                    .and_then(|k| k.parse().ok())
                    .ok_or_else(bad)?;
                if !(2..=16).contains(&k) {
                    return Err(bad());
                }
                Base::Radix(k)
            }
        };
        let order = match it.next() {
            Some("msd") | None => DigitOrder::Msd,
            Some("lsd") => DigitOrder::Lsd,
            Some(_) => return Err(bad()),
        };
        if it.next().is_some() {
            return Err(bad());
        }
        Ok(NumerationSystem { base, order })
    }
}

/// Incremental decoder for one track, fed one digit at a time in the
/// system's reading order. Values saturate to `None` on overflow.
#[derive(Debug, Clone, Copy)]
pub struct DigitReader {
    sys: NumerationSystem,
    value: Option<u64>,
    // msd Zeckendorf: value of the digits read so far with every weight
    // shifted up one Fibonacci index
    shifted: Option<u64>,
    // lsd: weight of the next digit
    weight: Option<u64>,
    position: usize,
    last: u8,
    valid: bool,
}

impl DigitReader {
    pub fn new(sys: NumerationSystem) -> Self {
        DigitReader {
            sys,
            value: Some(0),
            shifted: Some(0),
            weight: Some(1),
            position: 0,
            last: 0,
            valid: true,
        }
    }

    pub fn push(&mut self, d: u8) {
        let dd = u64::from(d);
        match (self.sys.base, self.sys.order) {
            (Base::Radix(k), DigitOrder::Msd) => {
                self.value = self
                    .value
                    .and_then(|v| v.checked_mul(u64::from(k)))
                    .and_then(|v| v.checked_add(dd));
            }
            (Base::Radix(k), DigitOrder::Lsd) => {
                if d != 0 {
                    self.value = match (self.value, self.weight) {
                        (Some(v), Some(w)) => w.checked_mul(dd).and_then(|x| x.checked_add(v)),
                        _ => None,
                    };
                }
                self.weight = self.weight.and_then(|w| w.checked_mul(u64::from(k)));
            }
            (Base::Zeckendorf, DigitOrder::Msd) => {
                // V(sx) = W(s) + x, W(sx) = V(s) + W(s) + 2x
                let (v, w) = (self.value, self.shifted);
                self.value = w.and_then(|w| w.checked_add(dd));
                self.shifted = match (v, w) {
                    (Some(v), Some(w)) => v.checked_add(w).and_then(|s| s.checked_add(2 * dd)),
                    _ => None,
                };
            }
            (Base::Zeckendorf, DigitOrder::Lsd) => {
                if d != 0 {
                    self.value = match self.value {
                        Some(v) if self.position < FIB_WEIGHTS => {
                            v.checked_add(fib_weights()[self.position])
                        }
                        _ => None,
                    };
                }
            }
        }
        if self.sys.base == Base::Zeckendorf && d == 1 && self.last == 1 {
            self.valid = false;
        }
        self.last = d;
        self.position += 1;
    }

    pub fn value(&self) -> Option<u64> {
        self.value
    }

    /// False once a Zeckendorf track has seen adjacent 1s.
    pub fn valid(&self) -> bool {
        self.valid
    }
}

/// A string of digit tuples of fixed arity, stored flat.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitString {
    arity: usize,
    digits: Vec<u8>,
}

impl DigitString {
    pub fn new(arity: usize, tuples: &[Vec<u8>]) -> Result<Self> {
        if arity == 0 {
            return Err(Error::InvalidDigits("arity must be positive".into()));
        }
        let mut digits = Vec::with_capacity(arity * tuples.len());
        for t in tuples {
            if t.len() != arity {
                return Err(Error::InvalidDigits(format!(
                    "tuple {t:?} does not have arity {arity}"
                )));
            }
            digits.extend_from_slice(t);
        }
        Ok(DigitString { arity, digits })
    }

    pub fn empty(arity: usize) -> Self {
        DigitString {
            arity,
            digits: Vec::new(),
        }
    }

    /// Arity-1 string from single digits.
    pub fn from_digits(digits: &[u8]) -> Self {
        DigitString {
            arity: 1,
            digits: digits.to_vec(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.digits.len() / self.arity
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn tuples(&self) -> std::slice::ChunksExact<'_, u8> {
        self.digits.chunks_exact(self.arity)
    }

    pub fn push(&mut self, tuple: &[u8]) {
        assert_eq!(tuple.len(), self.arity);
        self.digits.extend_from_slice(tuple);
    }

    /// Track `t` as an arity-1 string.
    pub fn track(&self, t: usize) -> DigitString {
        DigitString {
            arity: 1,
            digits: self.tuples().map(|tu| tu[t]).collect(),
        }
    }

    fn reverse(&mut self) {
        let tuples: Vec<Vec<u8>> = self.tuples().rev().map(<[u8]>::to_vec).collect();
        self.digits = tuples.concat();
    }
}

impl fmt::Display for DigitString {
    /// Arity 1 renders as plain digits, e.g. `101`; otherwise tuples are
    /// bracketed, e.g. `[1,0][0,1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arity == 1 {
            for d in &self.digits {
                write!(f, "{d}")?;
            }
            return Ok(());
        }
        for t in self.tuples() {
            let parts: Vec<String> = t.iter().map(u8::to_string).collect();
            write!(f, "[{}]", parts.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for DigitString {
    type Err = Error;

    /// Parses either plain digits (`0010`) or bracketed tuples (`[1,0][0,1]`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |m: &str| Error::InvalidDigits(format!("`{s}`: {m}"));
        if !s.starts_with('[') {
            let digits = s
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| bad("not a digit"))
                })
                .collect::<Result<Vec<_>>>()?;
            return Ok(DigitString::from_digits(&digits));
        }
        let mut tuples = Vec::new();
        for chunk in s.split(']').map(str::trim).filter(|c| !c.is_empty()) {
            let inner = chunk.strip_prefix('[').ok_or_else(|| bad("expected `[`"))?;
            let t = inner
                .split(',')
                .map(|x| x.trim().parse::<u8>().map_err(|_| bad("bad digit")))
                .collect::<Result<Vec<_>>>()?;
            tuples.push(t);
        }
        let arity = tuples.first().map_or(1, Vec::len);
        DigitString::new(arity, &tuples)
    }
}

/// Canonical representation of `n`.
pub fn encode(n: u64, sys: NumerationSystem) -> DigitString {
    sys.encode(n)
}

pub fn decode(d: &DigitString, sys: NumerationSystem) -> Result<u64> {
    sys.decode(d)
}

pub fn encode_pair(a: u64, b: u64, sys: NumerationSystem) -> DigitString {
    sys.encode_pair(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const ZECK: NumerationSystem = NumerationSystem::zeckendorf_msd();
    const B2: NumerationSystem = NumerationSystem::base2_msd();

    /// Greedy Zeckendorf decomposition written independently of `encode`.
    fn greedy_zeckendorf(mut n: u64) -> String {
        if n == 0 {
            return "0".into();
        }
        let mut fibs = vec![1u64, 2];
        while fibs[fibs.len() - 1] + fibs[fibs.len() - 2] <= n {
            let k = fibs.len();
            fibs.push(fibs[k - 1] + fibs[k - 2]);
        }
        while *fibs.last().unwrap() > n {
            fibs.pop();
        }
        let mut s = String::new();
        for &f in fibs.iter().rev() {
            if f <= n {
                n -= f;
                s.push('1');
            } else {
                s.push('0');
            }
        }
        s
    }

    #[test]
    fn zero_is_one_digit() {
        for sys in [ZECK, B2, NumerationSystem::base2_lsd()] {
            assert_eq!(sys.encode(0).to_string(), "0");
        }
    }

    #[test]
    fn small_encodings() {
        assert_eq!(ZECK.encode(4).to_string(), "101");
        assert_eq!(B2.encode(6).to_string(), "110");
        assert_eq!(NumerationSystem::base2_lsd().encode(6).to_string(), "011");
        for n in 0..2000 {
            assert_eq!(ZECK.encode(n).to_string(), greedy_zeckendorf(n));
        }
    }

    #[test]
    fn zeckendorf_decoding() {
        assert_eq!(ZECK.decode(&"10100".parse().unwrap()).unwrap(), 11);
        assert_eq!(ZECK.decode(&"0010".parse().unwrap()).unwrap(), 2);
        assert!(ZECK.decode(&"0110".parse().unwrap()).is_err());
        assert!(B2.decode(&"012".parse().unwrap()).is_err());
        let lsd = NumerationSystem {
            base: Base::Zeckendorf,
            order: DigitOrder::Lsd,
        };
        assert_eq!(lsd.decode(&"00101".parse().unwrap()).unwrap(), 11);
        assert_eq!(lsd.encode(11).to_string(), "00101");
    }

    #[test]
    fn pairs() {
        assert_eq!(B2.encode_pair(0, 0).to_string(), "[0,0]");
        assert_eq!(ZECK.encode_pair(4, 1).to_string(), "[1,0][0,0][1,1]");
        assert_eq!(B2.encode_pair(5, 3).to_string(), "[1,0][0,1][1,1]");
        let lsd = NumerationSystem::base2_lsd().encode_pair(5, 3);
        assert_eq!(lsd.to_string(), "[1,1][0,1][1,0]");
        let d = ZECK.encode_pair(100, 7);
        assert_eq!(ZECK.decode(&d.track(0)).unwrap(), 100);
        assert_eq!(ZECK.decode(&d.track(1)).unwrap(), 7);
        assert_eq!(ZECK.decode_tuple(&d).unwrap(), vec![100, 7]);
    }

    #[test]
    fn round_trips() {
        let systems = [
            ZECK,
            B2,
            NumerationSystem::base2_lsd(),
            "base_3 msd".parse().unwrap(),
            "zeckendorf lsd".parse().unwrap(),
        ];
        for sys in systems {
            for n in 0..=100_000u64 {
                assert_eq!(sys.decode(&sys.encode(n)).unwrap(), n, "{sys} {n}");
            }
        }
    }

    #[test]
    fn canonical_zeckendorf_bijection() {
        let mut seen = std::collections::HashSet::new();
        for len in 1..=16u32 {
            for bits in 0u32..(1 << len) {
                if bits & (bits >> 1) != 0 {
                    continue;
                }
                let digits: Vec<u8> = (0..len).rev().map(|k| (bits >> k & 1) as u8).collect();
                if len > 1 && digits[0] == 0 {
                    continue;
                }
                let d = DigitString::from_digits(&digits);
                let n = ZECK.decode(&d).unwrap();
                assert!(seen.insert(n), "{d} collides");
                assert_eq!(ZECK.encode(n), d);
            }
        }
    }

    #[test]
    fn system_names() {
        for s in ["base_2 msd", "base_2 lsd", "zeckendorf msd", "base_10 lsd"] {
            assert_eq!(s.parse::<NumerationSystem>().unwrap().to_string(), s);
        }
        assert!("base_1 msd".parse::<NumerationSystem>().is_err());
        assert!("ternary".parse::<NumerationSystem>().is_err());
    }

    #[test]
    fn digit_string_text() {
        let d: DigitString = "[1,0][0,1]".parse().unwrap();
        assert_eq!(d.arity(), 2);
        assert_eq!(d.len(), 2);
        assert_eq!(d.to_string(), "[1,0][0,1]");
        assert!("[1,0][1]".parse::<DigitString>().is_err());
    }

    proptest! {
        #[test]
        fn zeckendorf_has_no_adjacent_ones(n in 0u64..u64::MAX / 2) {
            let s = ZECK.encode(n).to_string();
            prop_assert!(!s.contains("11"));
            prop_assert_eq!(ZECK.decode(&ZECK.encode(n)).unwrap(), n);
        }

        #[test]
        fn padding_is_ignored(n in 0u64..1_000_000, pad in 0usize..6) {
            for sys in [ZECK, B2] {
                let mut digits = vec![0u8; pad];
                digits.extend(sys.encode(n).tuples().map(|t| t[0]));
                prop_assert_eq!(sys.decode(&DigitString::from_digits(&digits)).unwrap(), n);
            }
        }
    }
}
