//! Finite words and the automatic sequences studied here.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Symbol = u8;

/// A finite word over the alphabet `{0, .., alphabet_size - 1}`.
///
/// Indices are 0-based. [`Word::one_based_label`] renders the 1-based
/// `w[i..i+n-1]` notation for display only.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    symbols: Vec<Symbol>,
    alphabet_size: u8,
}

impl Word {
    pub fn new(symbols: Vec<Symbol>, alphabet_size: u8) -> Result<Self> {
        if let Some(&bad) = symbols.iter().find(|&&s| s >= alphabet_size) {
            return Err(Error::InvalidDigits(format!(
                "symbol {bad} is outside an alphabet of size {alphabet_size}"
            )));
        }
        Ok(Word {
            symbols,
            alphabet_size,
        })
    }

    /// Binary word from a slice of 0/1 symbols. Panics on larger symbols.
    pub fn binary(symbols: &[Symbol]) -> Self {
        Word::new(symbols.to_vec(), 2).expect("binary word")
    }

    /// Maps each distinct character to a symbol in order of first appearance.
    /// Handy for textbook examples such as `alfalfa`.
    pub fn from_text(text: &str) -> Self {
        let mut seen: Vec<char> = Vec::new();
        let symbols = text
            .chars()
            .map(|c| match seen.iter().position(|&s| s == c) {
                Some(k) => k as Symbol,
                None => {
                    seen.push(c);
                    (seen.len() - 1) as Symbol
                }
            })
            .collect();
        Word {
            symbols,
            alphabet_size: seen.len().max(1) as u8,
        }
    }

    pub fn empty() -> Self {
        Word {
            symbols: Vec::new(),
            alphabet_size: 2,
        }
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn alphabet_size(&self) -> u8 {
        self.alphabet_size
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Copy of `w[i..i+n-1]` in 0-based indexing.
    pub fn factor(&self, start: usize, len: usize) -> Result<Word> {
        match start.checked_add(len) {
            Some(end) if end <= self.len() => Ok(Word {
                symbols: self.symbols[start..end].to_vec(),
                alphabet_size: self.alphabet_size,
            }),
            _ => Err(Error::OutOfRange {
                start,
                len,
                word_len: self.len(),
            }),
        }
    }

    /// `x[i..i+n-1]` label with 1-based positions.
    pub fn one_based_label(start: usize, len: usize) -> String {
        format!("x[{}..{}]", start + 1, start + len)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            if s < 10 {
                write!(f, "{s}")?;
            } else {
                write!(f, "({s})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses a string of decimal digits, e.g. `"0110"`.
    fn from_str(s: &str) -> Result<Self> {
        let symbols = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as Symbol)
                    .ok_or_else(|| Error::InvalidDigits(format!("`{c}` is not a digit")))
            })
            .collect::<Result<Vec<_>>>()?;
        let alphabet_size = symbols.iter().copied().max().map_or(2, |m| (m + 1).max(2));
        Word::new(symbols, alphabet_size)
    }
}

/// Copy of `w[i..i+n-1]`; see [`Word::factor`].
pub fn factor(w: &Word, start: usize, len: usize) -> Result<Word> {
    w.factor(start, len)
}

/// A prolongable morphism together with a letter-to-letter coding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismSpec {
    /// `rules[a]` is the image of letter `a`.
    pub rules: Vec<Vec<Symbol>>,
    /// `coding[a]` is the output symbol for letter `a`.
    pub coding: Vec<Symbol>,
    pub seed: Symbol,
}

impl MorphismSpec {
    pub fn fibonacci() -> Self {
        MorphismSpec {
            rules: vec![vec![0, 1], vec![0]],
            coding: vec![0, 1],
            seed: 0,
        }
    }

    pub fn thue_morse() -> Self {
        MorphismSpec {
            rules: vec![vec![0, 1], vec![1, 0]],
            coding: vec![0, 1],
            seed: 0,
        }
    }

    /// `0 -> 01, 1 -> 21, 2 -> 03, 3 -> 23` under the coding `a -> a / 2`.
    pub fn regular_paperfolding() -> Self {
        MorphismSpec {
            rules: vec![vec![0, 1], vec![2, 1], vec![0, 3], vec![2, 3]],
            coding: vec![0, 0, 1, 1],
            seed: 0,
        }
    }

    fn check(&self) -> Result<()> {
        let fail = |reason: String| Error::NotProlongable {
            seed: self.seed,
            reason,
        };
        if self.coding.len() != self.rules.len() {
            return Err(fail("coding and rules cover different alphabets".into()));
        }
        let k = self.rules.len();
        if self.rules.iter().flatten().any(|&s| usize::from(s) >= k) || usize::from(self.seed) >= k
        {
            return Err(fail("a rule mentions a letter with no rule".into()));
        }
        let image = &self.rules[usize::from(self.seed)];
        if image.first() != Some(&self.seed) {
            return Err(fail(
                "image of the seed does not start with the seed".into(),
            ));
        }
        if image.len() < 2 {
            return Err(fail("image of the seed does not grow".into()));
        }
        Ok(())
    }

    fn output_alphabet(&self) -> u8 {
        self.coding
            .iter()
            .copied()
            .max()
            .map_or(1, |m| m + 1)
            .max(2)
    }
}

/// Length-`n` prefix of the coded fixed point of `spec`.
pub fn fixed_point_prefix(spec: &MorphismSpec, n: usize) -> Result<Word> {
    spec.check()?;
    let mut buf = vec![spec.seed];
    while buf.len() < n {
        buf = buf
            .iter()
            .flat_map(|&a| spec.rules[usize::from(a)].iter().copied())
            .collect();
    }
    buf.truncate(n);
    for s in &mut buf {
        *s = spec.coding[usize::from(*s)];
    }
    Word::new(buf, spec.output_alphabet())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SequenceId {
    Fibonacci,
    ThueMorse,
    RegularPaperfolding,
    RudinShapiro,
}

impl SequenceId {
    pub const ALL: [SequenceId; 4] = [
        SequenceId::Fibonacci,
        SequenceId::ThueMorse,
        SequenceId::RegularPaperfolding,
        SequenceId::RudinShapiro,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SequenceId::Fibonacci => "fibonacci",
            SequenceId::ThueMorse => "thue_morse",
            SequenceId::RegularPaperfolding => "regular_paperfolding",
            SequenceId::RudinShapiro => "rudin_shapiro",
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SequenceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_lowercase().replace('-', "_");
        match norm.as_str() {
            "fibonacci" | "fib" | "f" => Ok(SequenceId::Fibonacci),
            "thue_morse" | "tm" | "t" => Ok(SequenceId::ThueMorse),
            "regular_paperfolding" | "paperfolding" | "rp" => Ok(SequenceId::RegularPaperfolding),
            "rudin_shapiro" | "rs" => Ok(SequenceId::RudinShapiro),
            _ => Err(Error::UnknownSequence(s.to_string())),
        }
    }
}

/// Length-`n` prefix of one of the named sequences.
///
/// Rudin-Shapiro is `rs[k]` = parity of the number of (possibly overlapping)
/// occurrences of `11` in the binary expansion of `k`, with 0 for even.
pub fn sequence_prefix(id: SequenceId, n: usize) -> Word {
    let spec = match id {
        SequenceId::Fibonacci => MorphismSpec::fibonacci(),
        SequenceId::ThueMorse => MorphismSpec::thue_morse(),
        SequenceId::RegularPaperfolding => MorphismSpec::regular_paperfolding(),
        SequenceId::RudinShapiro => {
            let symbols = (0..n as u64)
                .map(|k| ((k & (k >> 1)).count_ones() & 1) as Symbol)
                .collect();
            return Word::binary_owned(symbols);
        }
    };
    fixed_point_prefix(&spec, n).expect("built-in morphisms are prolongable")
}

impl Word {
    fn binary_owned(symbols: Vec<Symbol>) -> Self {
        Word {
            symbols,
            alphabet_size: 2,
        }
    }
}

/// One paperfolding instruction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Fold {
    Plus,
    Minus,
}

impl Fold {
    /// `+1 -> 0`, `-1 -> 1`. With this map constant `+1` instructions give
    /// exactly the regular paperfolding word of [`MorphismSpec::regular_paperfolding`].
    pub fn bit(self) -> Symbol {
        match self {
            Fold::Plus => 0,
            Fold::Minus => 1,
        }
    }
}

/// A finite sequence of unfolding instructions over `{+1, -1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UnfoldingInstructions(pub Vec<Fold>);

impl UnfoldingInstructions {
    /// Instructions whose `k`-th entry is bit `k` of `mask` (set bit = `-1`).
    pub fn from_mask(len: usize, mask: u64) -> Self {
        UnfoldingInstructions(
            (0..len)
                .map(|k| {
                    if mask >> k & 1 == 1 {
                        Fold::Minus
                    } else {
                        Fold::Plus
                    }
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of the coded word, `2^k - 1`.
    pub fn word_len(&self) -> usize {
        (1usize << self.0.len()) - 1
    }
}

impl fmt::Display for UnfoldingInstructions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for fold in &self.0 {
            f.write_str(match fold {
                Fold::Plus => "+",
                Fold::Minus => "-",
            })?;
        }
        Ok(())
    }
}

impl FromStr for UnfoldingInstructions {
    type Err = Error;

    /// Accepts either a compact `+-+` string or separated integers such as
    /// `-1,1,1` / `-1 1 1`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |tok: &str| Error::InvalidInstructions(format!("`{tok}` is not +1 or -1"));
        if s.contains([',', ' ']) || s.contains('1') {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| match t {
                    "1" | "+1" | "+" => Ok(Fold::Plus),
                    "-1" | "-" => Ok(Fold::Minus),
                    other => Err(bad(other)),
                })
                .collect::<Result<Vec<_>>>()
                .map(UnfoldingInstructions)
        } else {
            s.chars()
                .map(|c| match c {
                    '+' => Ok(Fold::Plus),
                    '-' => Ok(Fold::Minus),
                    other => Err(bad(&other.to_string())),
                })
                .collect::<Result<Vec<_>>>()
                .map(UnfoldingInstructions)
        }
    }
}

/// The finite paperfolding word coded by `u`:
/// `w_0 = ε`, `w_j = w_{j-1} b(u_j) complement(reverse(w_{j-1}))`.
pub fn paperfolding_word(u: &UnfoldingInstructions) -> Word {
    let mut w: Vec<Symbol> = Vec::with_capacity(u.word_len());
    for fold in &u.0 {
        let prev = w.len();
        w.push(fold.bit());
        for k in (0..prev).rev() {
            w.push(1 - w[k]);
        }
    }
    Word::binary_owned(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonacci_prefix() {
        assert_eq!(
            sequence_prefix(SequenceId::Fibonacci, 8).to_string(),
            "01001010"
        );
    }

    #[test]
    fn empty_prefix() {
        for id in SequenceId::ALL {
            assert!(sequence_prefix(id, 0).is_empty());
        }
        assert!(fixed_point_prefix(&MorphismSpec::fibonacci(), 0)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn regular_paperfolding_prefix() {
        assert_eq!(
            sequence_prefix(SequenceId::RegularPaperfolding, 16).to_string(),
            "0010011000110110"
        );
    }

    #[test]
    fn thue_morse_prefix() {
        let t = sequence_prefix(SequenceId::ThueMorse, 32);
        assert_eq!(t.factor(0, 8).unwrap().to_string(), "01101001");
        assert_eq!(t.factor(5, 6).unwrap().to_string(), "001100");
        assert_eq!(t.factor(1, 2).unwrap().to_string(), "11");
    }

    #[test]
    fn rudin_shapiro_prefix() {
        assert_eq!(
            sequence_prefix(SequenceId::RudinShapiro, 8).to_string(),
            "00010010"
        );
    }

    #[test]
    fn non_prolongable_rejected() {
        let spec = MorphismSpec {
            rules: vec![vec![1, 0], vec![0]],
            coding: vec![0, 1],
            seed: 0,
        };
        assert!(matches!(
            fixed_point_prefix(&spec, 4),
            Err(Error::NotProlongable { .. })
        ));
        let stuck = MorphismSpec {
            rules: vec![vec![0], vec![1]],
            coding: vec![0, 1],
            seed: 0,
        };
        assert!(fixed_point_prefix(&stuck, 4).is_err());
    }

    #[test]
    fn factor_slices() {
        let w: Word = "01101001".parse().unwrap();
        assert_eq!(w.factor(5, 2).unwrap().to_string(), "00");
        assert_eq!(w.factor(0, w.len()).unwrap(), w);
        assert!(matches!(w.factor(7, 2), Err(Error::OutOfRange { .. })));
        assert!(w.factor(usize::MAX, 2).is_err());
    }

    #[test]
    fn paperfolding_lengths() {
        assert!(paperfolding_word(&UnfoldingInstructions::default()).is_empty());
        let u = UnfoldingInstructions::from_mask(6, 0b101101);
        assert_eq!(paperfolding_word(&u).len(), 63);
    }

    #[test]
    fn constant_plus_instructions_match_the_morphism() {
        for k in 0..=12 {
            let u = UnfoldingInstructions(vec![Fold::Plus; k]);
            let w = paperfolding_word(&u);
            assert_eq!(
                w,
                sequence_prefix(SequenceId::RegularPaperfolding, w.len()),
                "k = {k}"
            );
        }
    }

    #[test]
    fn instruction_parsing() {
        let a: UnfoldingInstructions = "-+++".parse().unwrap();
        let b: UnfoldingInstructions = "-1,1,1,1".parse().unwrap();
        let c: UnfoldingInstructions = "-1 1 1 1".parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(b, c);
        assert_eq!(a.to_string(), "-+++");
        assert!("+x".parse::<UnfoldingInstructions>().is_err());
        assert!("2,1".parse::<UnfoldingInstructions>().is_err());
    }

    #[test]
    fn text_words() {
        let w = Word::from_text("alfalfa");
        assert_eq!(w.len(), 7);
        assert_eq!(w.alphabet_size(), 3);
        assert_eq!(Word::one_based_label(5, 6), "x[6..11]");
    }
}
