use std::collections::{HashMap, VecDeque};

use super::{Dfao, StateId};
use crate::error::{Error, Result};
use crate::numeration::DigitString;

fn check_signature(a: &Dfao, b: &Dfao) -> Result<()> {
    if a.numeration() != b.numeration() || a.arity() != b.arity() {
        return Err(Error::SignatureMismatch(format!(
            "{} arity {} vs {} arity {}",
            a.numeration(),
            a.arity(),
            b.numeration(),
            b.arity()
        )));
    }
    Ok(())
}

/// A shortest input on which `a` and `b` differ, or `None` when they agree
/// on every input.
pub fn find_difference(a: &Dfao, b: &Dfao) -> Result<Option<DigitString>> {
    type Pair = (StateId, StateId);
    check_signature(a, b)?;
    // predecessor pair and symbol on a shortest path from the start
    let mut parent: HashMap<Pair, Option<(Pair, usize)>> = HashMap::new();
    let start = (a.start(), b.start());
    parent.insert(start, None);
    let mut queue = VecDeque::from([start]);
    while let Some(pair) = queue.pop_front() {
        if a.output(pair.0) != b.output(pair.1) {
            let mut symbols = Vec::new();
            let mut cur = pair;
            while let Some(Some((prev, s))) = parent.get(&cur) {
                symbols.push(*s);
                cur = *prev;
            }
            symbols.reverse();
            let mut w = DigitString::empty(a.arity());
            for s in symbols {
                w.push(&a.tuple(s));
            }
            return Ok(Some(w));
        }
        for s in 0..a.alphabet_size() {
            let next = (a.next(pair.0, s), b.next(pair.1, s));
            if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(next) {
                e.insert(Some((pair, s)));
                queue.push_back(next);
            }
        }
    }
    Ok(None)
}

/// True iff the machines produce the same output on every input.
pub fn equivalent(a: &Dfao, b: &Dfao) -> Result<bool> {
    Ok(find_difference(a, b)?.is_none())
}

/// Prioritized product of boolean acceptors.
///
/// A product state outputs the value paired with the *last* listed acceptor
/// that accepts there, or 0 if none does. Listing nested width acceptors as
/// `[(rep3, 3), (rep2, 2), (rep1, 1)]` therefore yields the least width.
pub fn combine(acceptors: &[(&Dfao, u32)]) -> Result<Dfao> {
    let Some(&(first, _)) = acceptors.first() else {
        return Err(Error::SignatureMismatch(
            "combine needs at least one acceptor".into(),
        ));
    };
    for &(m, _) in acceptors {
        check_signature(first, m)?;
        if !m.is_acceptor() {
            return Err(Error::SignatureMismatch(
                "combine takes 0/1 acceptors".into(),
            ));
        }
    }
    let alphabet = first.alphabet_size();
    let start: Vec<StateId> = acceptors.iter().map(|(m, _)| m.start()).collect();
    let mut index: HashMap<Vec<StateId>, StateId> = HashMap::from([(start.clone(), 0)]);
    let mut tuples = vec![start];
    let mut delta = Vec::new();
    let mut k = 0;
    while k < tuples.len() {
        for s in 0..alphabet {
            let next: Vec<StateId> = acceptors
                .iter()
                .zip(&tuples[k])
                .map(|((m, _), &q)| m.next(q, s))
                .collect();
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    let id = tuples.len() as StateId;
                    index.insert(next.clone(), id);
                    tuples.push(next);
                    id
                }
            };
            delta.push(id);
        }
        k += 1;
    }
    let outputs = tuples
        .iter()
        .map(|t| {
            acceptors
                .iter()
                .zip(t)
                .filter(|((m, _), &q)| m.output(q) == 1)
                .map(|((_, v), _)| *v)
                .next_back()
                .unwrap_or(0)
        })
        .collect();
    Dfao::new(first.numeration(), first.arity(), outputs, delta, 0)
}
