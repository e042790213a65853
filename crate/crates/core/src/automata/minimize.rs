use std::collections::HashMap;

use crate::stateset::StateSet;
use crate::transformation::Transformation;

use super::dfa::Dfa;

/// Minimal DFA of the same language, numbered breadth-first from the initial
/// state with letters in alphabet order.
///
/// Unreachable states are dropped, then states are merged by Moore-style
/// partition refinement on (class, successor classes) signatures.
pub fn minimize(d: &Dfa) -> Dfa {
    let order = d.reachable_order();
    let k = d.alphabet().len();

    // class id per original state, usize::MAX for unreachable ones
    let mut class = vec![usize::MAX; d.state_count()];
    let mut count = 0;
    {
        let has_final = order.iter().any(|&q| d.finals().contains(q));
        let has_other = order.iter().any(|&q| !d.finals().contains(q));
        for &q in &order {
            class[q] = if has_final && has_other {
                usize::from(d.finals().contains(q))
            } else {
                0
            };
        }
        count = count.max(1 + usize::from(has_final && has_other));
    }

    loop {
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::with_capacity(order.len());
        let mut next = class.clone();
        let mut sig = Vec::with_capacity(k + 1);
        for &q in &order {
            sig.clear();
            sig.push(class[q]);
            sig.extend((0..k).map(|a| class[d.step(q, a)]));
            let fresh = ids.len();
            next[q] = *ids.entry(sig.clone()).or_insert(fresh);
        }
        let new_count = ids.len();
        class = next;
        if new_count == count {
            break;
        }
        count = new_count;
    }

    // canonical renumbering by breadth-first traversal of the quotient
    let mut number = vec![usize::MAX; count];
    let mut reps = Vec::with_capacity(count);
    number[class[d.initial()]] = 0;
    reps.push(d.initial());
    let mut head = 0;
    while head < reps.len() {
        let q = reps[head];
        head += 1;
        for a in 0..k {
            let c = class[d.step(q, a)];
            if number[c] == usize::MAX {
                number[c] = reps.len();
                reps.push(d.step(q, a));
            }
        }
    }

    let m = reps.len();
    let delta = (0..k)
        .map(|a| {
            Transformation::from_map_unchecked(
                reps.iter().map(|&q| number[class[d.step(q, a)]]).collect(),
            )
        })
        .collect();
    let finals = StateSet::from_indices(
        m,
        reps.iter()
            .enumerate()
            .filter(|(_, &q)| d.finals().contains(q))
            .map(|(i, _)| i),
    );
    Dfa::new(d.alphabet().clone(), delta, 0, finals).expect("quotient of a valid DFA")
}

pub fn is_minimal(d: &Dfa) -> bool {
    minimize(d).state_count() == d.state_count()
}

/// Number of left quotients of the language, i.e. the size of its minimal DFA.
pub fn quotient_complexity(d: &Dfa) -> usize {
    minimize(d).state_count()
}

/// Whether the two DFAs are isomorphic. Non-minimal inputs are minimized
/// first, so for arbitrary inputs this decides language equality.
pub fn is_isomorphic(d1: &Dfa, d2: &Dfa) -> bool {
    if d1.alphabet() != d2.alphabet() {
        return false;
    }
    let m1;
    let m2;
    let (a, b) = if is_minimal(d1) && is_minimal(d2) {
        (d1, d2)
    } else {
        m1 = minimize(d1);
        m2 = minimize(d2);
        (&m1, &m2)
    };
    structurally_isomorphic(a, b)
}

/// Parallel breadth-first traversal from both initial states, building the
/// bijection on the fly. Requires every state of both automata reachable.
fn structurally_isomorphic(a: &Dfa, b: &Dfa) -> bool {
    let n = a.state_count();
    if n != b.state_count() {
        return false;
    }
    let mut fwd = vec![usize::MAX; n];
    let mut bwd = vec![usize::MAX; n];
    fwd[a.initial()] = b.initial();
    bwd[b.initial()] = a.initial();
    let mut queue = vec![a.initial()];
    let mut head = 0;
    while head < queue.len() {
        let p = queue[head];
        let q = fwd[p];
        head += 1;
        if a.finals().contains(p) != b.finals().contains(q) {
            return false;
        }
        for l in 0..a.alphabet().len() {
            let (p2, q2) = (a.step(p, l), b.step(q, l));
            match (fwd[p2], bwd[q2]) {
                (usize::MAX, usize::MAX) => {
                    fwd[p2] = q2;
                    bwd[q2] = p2;
                    queue.push(p2);
                }
                (x, y) if x == q2 && y == p2 => {}
                _ => return false,
            }
        }
    }
    queue.len() == n
}
