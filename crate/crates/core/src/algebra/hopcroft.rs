//! Hopcroft's partition refinement.

use std::collections::VecDeque;

use crate::alphabet::Symbol;
use crate::automaton::{Dfa, StateId};

struct Partition {
    /// States grouped by block; each block is a contiguous range.
    elems: Vec<StateId>,
    pos: Vec<usize>,
    block_of: Vec<usize>,
    start: Vec<usize>,
    end: Vec<usize>,
    /// Marked prefix length of each block during a split round.
    marked: Vec<usize>,
}

impl Partition {
    fn new(states: &[StateId], is_final: impl Fn(StateId) -> bool, n: usize) -> Partition {
        let mut elems: Vec<StateId> = states.iter().copied().filter(|&q| is_final(q)).collect();
        let split = elems.len();
        elems.extend(states.iter().copied().filter(|&q| !is_final(q)));
        let mut p = Partition {
            pos: vec![usize::MAX; n],
            block_of: vec![usize::MAX; n],
            elems,
            start: Vec::new(),
            end: Vec::new(),
            marked: Vec::new(),
        };
        for (bounds_start, bounds_end) in [(0, split), (split, p.elems.len())] {
            if bounds_start < bounds_end {
                let b = p.start.len();
                p.start.push(bounds_start);
                p.end.push(bounds_end);
                p.marked.push(0);
                for i in bounds_start..bounds_end {
                    p.block_of[p.elems[i]] = b;
                }
            }
        }
        for (i, &q) in p.elems.iter().enumerate() {
            p.pos[q] = i;
        }
        p
    }

    fn size(&self, b: usize) -> usize {
        self.end[b] - self.start[b]
    }

    fn mark(&mut self, q: StateId) {
        let b = self.block_of[q];
        let target = self.start[b] + self.marked[b];
        let here = self.pos[q];
        if here < target {
            return;
        }
        let other = self.elems[target];
        self.elems.swap(here, target);
        self.pos[other] = here;
        self.pos[q] = target;
        self.marked[b] += 1;
    }

    /// Splits off the marked prefix; returns the new block id if a split happened.
    fn split(&mut self, b: usize) -> Option<usize> {
        let m = self.marked[b];
        self.marked[b] = 0;
        if m == 0 || m == self.size(b) {
            return None;
        }
        let nb = self.start.len();
        let mid = self.start[b] + m;
        self.start.push(self.start[b]);
        self.end.push(mid);
        self.marked.push(0);
        self.start[b] = mid;
        for i in self.start[nb]..self.end[nb] {
            self.block_of[self.elems[i]] = nb;
        }
        Some(nb)
    }
}

/// Minimal complete DFA for `L(d)`. States are numbered breadth-first from
/// the start, exploring symbols in id order, so equal languages over the
/// same alphabet give equal automata.
pub fn minimize(d: &Dfa) -> Dfa {
    let n = d.state_count();
    let k = d.alphabet().len();
    let reachable = d.reachable();
    let states: Vec<StateId> = (0..n).filter(|&q| reachable[q]).collect();

    // inverse transitions restricted to reachable states
    let mut inv_start = vec![0usize; n * k + 1];
    for &q in &states {
        for s in 0..k {
            inv_start[d.next(q, Symbol::new(s)) * k + s + 1] += 1;
        }
    }
    for i in 1..inv_start.len() {
        inv_start[i] += inv_start[i - 1];
    }
    let mut fill = inv_start.clone();
    let mut inv = vec![0usize; states.len() * k];
    for &q in &states {
        for s in 0..k {
            let cell = d.next(q, Symbol::new(s)) * k + s;
            inv[fill[cell]] = q;
            fill[cell] += 1;
        }
    }

    let mut part = Partition::new(&states, |q| d.is_final(q), n);
    let mut pending: VecDeque<(usize, usize)> = VecDeque::new();
    let mut queued: Vec<Vec<bool>> = Vec::new();
    for b in 0..part.start.len() {
        queued.push(vec![true; k]);
        for s in 0..k {
            pending.push_back((b, s));
        }
    }

    let mut touched: Vec<usize> = Vec::new();
    while let Some((splitter, s)) = pending.pop_front() {
        queued[splitter][s] = false;
        let members: Vec<StateId> = part.elems[part.start[splitter]..part.end[splitter]].to_vec();
        for q in members {
            let cell = q * k + s;
            for &p in &inv[inv_start[cell]..inv_start[cell + 1]] {
                let b = part.block_of[p];
                if part.marked[b] == 0 {
                    touched.push(b);
                }
                part.mark(p);
            }
        }
        for b in touched.drain(..) {
            let Some(nb) = part.split(b) else { continue };
            queued.push(vec![false; k]);
            let was_queued = queued[b].clone();
            for (c, was) in was_queued.into_iter().enumerate() {
                if was {
                    queued[nb][c] = true;
                    pending.push_back((nb, c));
                } else {
                    let smaller = if part.size(nb) <= part.size(b) { nb } else { b };
                    queued[smaller][c] = true;
                    pending.push_back((smaller, c));
                }
            }
        }
    }

    // canonical numbering
    let blocks = part.start.len();
    let mut number = vec![usize::MAX; blocks];
    let mut order = vec![part.block_of[d.start()]];
    number[order[0]] = 0;
    let mut i = 0;
    while i < order.len() {
        let rep = part.elems[part.start[order[i]]];
        for s in 0..k {
            let b = part.block_of[d.next(rep, Symbol::new(s))];
            if number[b] == usize::MAX {
                number[b] = order.len();
                order.push(b);
            }
        }
        i += 1;
    }
    let mut finals = Vec::with_capacity(order.len());
    let mut delta = Vec::with_capacity(order.len() * k);
    for &b in &order {
        let rep = part.elems[part.start[b]];
        finals.push(d.is_final(rep));
        for s in 0..k {
            delta.push(number[part.block_of[d.next(rep, Symbol::new(s))]]);
        }
    }
    Dfa::from_flat(d.alphabet(), 0, finals, delta)
}
