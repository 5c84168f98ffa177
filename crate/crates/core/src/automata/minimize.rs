use std::collections::{HashMap, VecDeque};

use super::{Dfao, StateId};

/// Moore partition refinement on the reachable part, then breadth-first
/// renumbering so equal machines serialize identically.
pub(super) fn minimize(m: &Dfao) -> Dfao {
    let reach = m.reachable();
    let states: Vec<StateId> = (0..m.num_states() as StateId)
        .filter(|&q| reach[q as usize])
        .collect();
    let n = m.num_states();
    let a = m.alphabet_size();

    let mut class = vec![usize::MAX; n];
    let mut ids: HashMap<u32, usize> = HashMap::new();
    for &q in &states {
        let next = ids.len();
        class[q as usize] = *ids.entry(m.output(q)).or_insert(next);
    }
    let mut count = ids.len();
    loop {
        let mut sigs: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut refined = vec![usize::MAX; n];
        for &q in &states {
            let mut sig = Vec::with_capacity(a + 1);
            sig.push(class[q as usize]);
            sig.extend((0..a).map(|s| class[m.next(q, s) as usize]));
            let next = sigs.len();
            refined[q as usize] = *sigs.entry(sig).or_insert(next);
        }
        let new_count = sigs.len();
        class = refined;
        if new_count == count {
            break;
        }
        count = new_count;
    }

    // breadth-first numbering of classes
    let mut order = vec![usize::MAX; count];
    let mut reps: Vec<StateId> = Vec::with_capacity(count);
    let mut queue = VecDeque::from([m.start()]);
    order[class[m.start() as usize]] = 0;
    reps.push(m.start());
    while let Some(q) = queue.pop_front() {
        for s in 0..a {
            let r = m.next(q, s);
            let c = class[r as usize];
            if order[c] == usize::MAX {
                order[c] = reps.len();
                reps.push(r);
                queue.push_back(r);
            }
        }
    }
    let outputs = reps.iter().map(|&q| m.output(q)).collect();
    let (order, class) = (&order, &class);
    let delta = reps
        .iter()
        .flat_map(|&q| (0..a).map(move |s| order[class[m.next(q, s) as usize]] as StateId))
        .collect();
    Dfao::new(m.numeration(), m.arity(), outputs, delta, 0).expect("minimized machine is valid")
}
