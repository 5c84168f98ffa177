//! Line-oriented text format.
//!
//! ```text
//! # comment
//! numeration base_2 msd arity 2
//! state 0 output 1
//! trans 0 [0,1] 1
//! start 0
//! dead 5
//! ```
//!
//! `numeration` must come first; the other lines may appear in any order.
//! When a `dead` line is present, the dead state's own `state` line and
//! every transition into it may be omitted; parsing re-completes the machine.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use super::{pack, Dfao, StateId};
use crate::error::{Error, Result};
use crate::numeration::NumerationSystem;

impl Dfao {
    /// Full listing, every state and transition written out.
    pub fn to_text(&self) -> String {
        self.render(&[], false)
    }

    /// Listing without the dead state, as automata are usually drawn.
    pub fn to_text_compact(&self) -> String {
        self.render(&[], true)
    }

    /// Listing with leading `#` comment lines.
    pub fn to_text_with_comments(&self, comments: &[String], omit_dead: bool) -> String {
        self.render(comments, omit_dead)
    }

    fn render(&self, comments: &[String], omit_dead: bool) -> String {
        let mut out = String::new();
        for c in comments {
            let _ = writeln!(out, "# {c}");
        }
        let _ = writeln!(out, "numeration {} arity {}", self.numeration, self.arity);
        let _ = writeln!(out, "start {}", self.start);
        let skip = if omit_dead { self.dead } else { None };
        if let Some(d) = self.dead {
            let _ = writeln!(out, "dead {d}");
        }
        for q in 0..self.num_states() as StateId {
            if Some(q) != skip {
                let _ = writeln!(out, "state {q} output {}", self.output(q));
            }
        }
        for q in 0..self.num_states() as StateId {
            if Some(q) == skip {
                continue;
            }
            for s in 0..self.alphabet {
                let r = self.next(q, s);
                if Some(r) == skip {
                    continue;
                }
                let digits: Vec<String> = self.tuple(s).iter().map(u8::to_string).collect();
                let _ = writeln!(out, "trans {q} [{}] {r}", digits.join(","));
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Dfao> {
        text.parse()
    }
}

impl FromStr for Dfao {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut header: Option<(NumerationSystem, usize)> = None;
        let mut start: Option<u64> = None;
        let mut dead: Option<u64> = None;
        let mut outputs: BTreeMap<u64, u32> = BTreeMap::new();
        let mut trans: Vec<(usize, u64, Vec<u8>, u64)> = Vec::new();

        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut words = line.split_whitespace();
            let keyword = words.next().unwrap();
            let num = |s: Option<&str>, what: &str| -> Result<u64> {
                s.and_then(|x| x.parse().ok())
                    .ok_or_else(|| err(format!("expected {what}")))
            };
            if header.is_none() && keyword != "numeration" {
                return Err(err("the first line must be `numeration ...`".into()));
            }
            match keyword {
                "numeration" => {
                    if header.is_some() {
                        return Err(err("duplicate numeration line".into()));
                    }
                    let rest: Vec<&str> = words.collect();
                    let pos = rest
                        .iter()
                        .position(|&w| w == "arity")
                        .ok_or_else(|| err("missing `arity`".into()))?;
                    let sys: NumerationSystem = rest[..pos]
                        .join(" ")
                        .parse()
                        .map_err(|e: Error| err(e.to_string()))?;
                    let arity = num(rest.get(pos + 1).copied(), "an arity")? as usize;
                    if arity == 0 || rest.len() != pos + 2 {
                        return Err(err("malformed arity".into()));
                    }
                    header = Some((sys, arity));
                }
                "start" => start = Some(num(words.next(), "a state id")?),
                "dead" => dead = Some(num(words.next(), "a state id")?),
                "state" => {
                    let id = num(words.next(), "a state id")?;
                    if words.next() != Some("output") {
                        return Err(err("expected `output`".into()));
                    }
                    let out = num(words.next(), "an output value")? as u32;
                    if outputs.insert(id, out).is_some() {
                        return Err(err(format!("state {id} declared twice")));
                    }
                }
                "trans" => {
                    let from = num(words.next(), "a source state")?;
                    let rest: Vec<&str> = words.collect();
                    let joined = rest.join(" ");
                    let open = joined.find('[').ok_or_else(|| err("expected `[`".into()))?;
                    let close = joined.find(']').ok_or_else(|| err("expected `]`".into()))?;
                    if open > close {
                        return Err(err("malformed tuple".into()));
                    }
                    let tuple = joined[open + 1..close]
                        .split(',')
                        .map(|d| d.trim().parse::<u8>())
                        .collect::<std::result::Result<Vec<_>, _>>()
                        .map_err(|_| err("bad digit in tuple".into()))?;
                    let to = num(Some(joined[close + 1..].trim()), "a target state")?;
                    trans.push((line_no, from, tuple, to));
                }
                other => return Err(err(format!("unknown keyword `{other}`"))),
            }
        }

        let (sys, arity) = header.ok_or(Error::Parse {
            line: 0,
            message: "missing numeration line".into(),
        })?;
        if let Some(d) = dead {
            match outputs.get(&d) {
                Some(0) | None => {
                    outputs.insert(d, 0);
                }
                Some(_) => {
                    return Err(Error::Parse {
                        line: 0,
                        message: format!("dead state {d} must have output 0"),
                    })
                }
            }
        }
        let ids: BTreeMap<u64, StateId> = outputs
            .keys()
            .enumerate()
            .map(|(k, &id)| (id, k as StateId))
            .collect();
        let lookup = |id: u64, line: usize| {
            ids.get(&id).copied().ok_or(Error::Parse {
                line,
                message: format!("undeclared state {id}"),
            })
        };
        let alphabet = super::alphabet_size(sys, arity);
        let n = ids.len();
        let mut delta: Vec<Option<StateId>> = vec![None; n * alphabet];
        for (line, from, tuple, to) in trans {
            let f = lookup(from, line)?;
            let t = lookup(to, line)?;
            let s = pack(sys, arity, &tuple).map_err(|e| Error::Parse {
                line,
                message: e.to_string(),
            })?;
            let slot = &mut delta[f as usize * alphabet + s];
            if slot.is_some() {
                return Err(Error::Parse {
                    line,
                    message: format!("duplicate transition from {from}"),
                });
            }
            *slot = Some(t);
        }
        let dead_id = dead.map(|d| ids[&d]);
        let delta = delta
            .into_iter()
            .enumerate()
            .map(|(k, t)| {
                t.or(dead_id).ok_or_else(|| Error::Parse {
                    line: 0,
                    message: format!(
                        "state {} has no transition on symbol {} and no dead state is declared",
                        k / alphabet,
                        k % alphabet
                    ),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let start = start.ok_or(Error::Parse {
            line: 0,
            message: "missing start line".into(),
        })?;
        let outputs = outputs.into_values().collect();
        Dfao::new(sys, arity, outputs, delta, lookup(start, 0)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::equivalent;
    use crate::automata::tests::divisible_by;

    #[test]
    fn round_trip() {
        let m = divisible_by(7);
        let back: Dfao = m.to_text().parse().unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn compact_form_recompletes() {
        // 0*1 acceptor with an explicit dead state
        let b2 = NumerationSystem::base2_msd();
        let m = Dfao::new(b2, 1, vec![0, 1, 0], vec![0, 1, 2, 2, 2, 2], 0).unwrap();
        let text = m.to_text_compact();
        assert!(!text.contains("state 2"));
        let back: Dfao = text.parse().unwrap();
        assert!(equivalent(&m, &back).unwrap());
        assert_eq!(back.num_states(), 3);
    }

    #[test]
    fn hand_written_parity() {
        let text = "
            # parity, read least significant digit first
            numeration base_2 lsd arity 1
            state 0 output 1   # nothing read
            state 1 output 1   # even
            state 2 output 0
            trans 0 [0] 1
            trans 0 [1] 2
            trans 1 [0] 1
            trans 1 [1] 1
            trans 2 [0] 2
            trans 2 [1] 2
            start 0
        ";
        let m: Dfao = text.parse().unwrap();
        for n in 0..50u64 {
            assert_eq!(m.evaluate_nat(&[n]).unwrap(), u32::from(n % 2 == 0), "{n}");
        }
    }

    #[test]
    fn hand_written_two_state_parity() {
        // msd: the last digit read decides
        let text = "numeration base_2 msd arity 1
state 0 output 1
state 1 output 0
trans 0 [0] 0
trans 0 [1] 1
trans 1 [0] 0
trans 1 [1] 1
start 0";
        let m: Dfao = text.parse().unwrap();
        assert_eq!(m.num_states(), 2);
        for n in 0..100u64 {
            assert_eq!(m.evaluate_nat(&[n]).unwrap(), u32::from(n % 2 == 0), "{n}");
        }
    }

    #[test]
    fn malformed_inputs_report_lines() {
        let cases = [
            ("state 0 output 1", 1),
            ("numeration base_2 msd arity 1\nstate 0 outptu 1", 2),
            (
                "numeration base_2 msd arity 1\nstate 0 output 1\ntrans 0 [2] 0",
                3,
            ),
            (
                "numeration base_2 msd arity 1\nstate 0 output 1\ntrans 0 [0] 9",
                3,
            ),
            ("numeration base_2 msd arity 1\nfrobnicate", 2),
            ("numeration base_2 msd\n", 1),
        ];
        for (text, line) in cases {
            match text.parse::<Dfao>() {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
        let incomplete = "numeration base_2 msd arity 1\nstate 0 output 1\nstart 0\ntrans 0 [0] 0";
        assert!(incomplete.parse::<Dfao>().is_err());
    }
}
