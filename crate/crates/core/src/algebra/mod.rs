//! Operations on automata: subset construction, complement, product,
//! minimization and isomorphism, plus the canonical DFA of uniquely
//! decodable words.

use std::collections::{HashMap, VecDeque};

use crate::alphabet::{Alphabet, Symbol};
use crate::automaton::{Dfa, Nfa, StateId};
use crate::error::{Error, Result};
use crate::obstructions::build_m_obst;

mod hopcroft;
pub mod lower_bound;

pub use hopcroft::minimize;

/// Default cap on the number of subsets explored by [`determinize`].
pub const DEFAULT_SUBSET_BUDGET: usize = 10_000_000;

type Bits = Box<[u64]>;

fn bits_with(words: usize, states: impl IntoIterator<Item = usize>) -> Bits {
    let mut b = vec![0u64; words].into_boxed_slice();
    for q in states {
        b[q / 64] |= 1 << (q % 64);
    }
    b
}

fn bits_iter(b: &[u64]) -> impl Iterator<Item = usize> + '_ {
    b.iter().enumerate().flat_map(|(i, &word)| {
        let mut w = word;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let t = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(i * 64 + t)
        })
    })
}

/// Subset construction over reachable subsets. The empty subset, when
/// reachable, becomes the dead state.
///
/// A subset that contains a universal state (final, every symbol loops back
/// to it) accepts every suffix, so all such subsets share one DFA state.
pub fn determinize(nfa: &Nfa, budget: usize) -> Result<Dfa> {
    let alphabet = nfa.alphabet();
    let k = alphabet.len();
    let n = nfa.state_count();
    let words = n.div_ceil(64).max(1);
    let universal: Vec<bool> = (0..n)
        .map(|q| nfa.is_final(q) && alphabet.symbols().all(|s| nfa.successors(q, s) == [q]))
        .collect();
    let universal_key = universal
        .iter()
        .position(|&u| u)
        .map(|q| bits_with(words, [q]));
    let normalize = |b: Bits| -> Bits {
        match &universal_key {
            Some(key) if bits_iter(&b).any(|q| universal[q]) => key.clone(),
            _ => b,
        }
    };

    let start = normalize(bits_with(words, nfa.starts().iter().copied()));
    let mut index: HashMap<Bits, StateId> = HashMap::new();
    let mut pending: VecDeque<Bits> = VecDeque::new();
    let mut finals = Vec::new();
    let mut delta: Vec<StateId> = Vec::new();
    index.insert(start.clone(), 0);
    finals.push(bits_iter(&start).any(|q| nfa.is_final(q)));
    pending.push_back(start);

    let mut scratch = vec![0u64; words];
    while let Some(subset) = pending.pop_front() {
        for s in alphabet.symbols() {
            scratch.iter_mut().for_each(|w| *w = 0);
            for q in bits_iter(&subset) {
                for &t in nfa.successors(q, s) {
                    scratch[t / 64] |= 1 << (t % 64);
                }
            }
            let next = normalize(scratch.clone().into_boxed_slice());
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    let id = index.len();
                    if id >= budget {
                        return Err(Error::BudgetExceeded { limit: budget });
                    }
                    finals.push(bits_iter(&next).any(|q| nfa.is_final(q)));
                    index.insert(next.clone(), id);
                    pending.push_back(next);
                    id
                }
            };
            delta.push(id);
        }
    }
    debug_assert_eq!(delta.len(), finals.len() * k);
    Ok(Dfa::from_flat(alphabet, 0, finals, delta))
}

/// Same automaton with final and non-final states swapped.
pub fn complement(d: &Dfa) -> Dfa {
    let finals = d.finals().iter().map(|&f| !f).collect();
    Dfa::from_flat(d.alphabet(), d.start(), finals, d.flat_delta().to_vec())
}

/// Product automaton accepting `L(d1) ∩ L(d2)`, over reachable pairs.
pub fn intersect(d1: &Dfa, d2: &Dfa) -> Result<Dfa> {
    if !d1.alphabet().same_as(d2.alphabet()) {
        return Err(Error::AlphabetMismatch);
    }
    let alphabet = d1.alphabet();
    let mut index = HashMap::new();
    let mut pairs = vec![(d1.start(), d2.start())];
    index.insert(pairs[0], 0usize);
    let mut delta = Vec::new();
    let mut i = 0;
    while i < pairs.len() {
        let (p, q) = pairs[i];
        for s in alphabet.symbols() {
            let next = (d1.next(p, s), d2.next(q, s));
            let id = *index.entry(next).or_insert_with(|| {
                pairs.push(next);
                pairs.len() - 1
            });
            delta.push(id);
        }
        i += 1;
    }
    let finals = pairs
        .iter()
        .map(|&(p, q)| d1.is_final(p) && d2.is_final(q))
        .collect();
    Ok(Dfa::from_flat(alphabet, 0, finals, delta))
}

/// Whether a bijection of states preserves start, finals and every labelled
/// transition. Both automata must be accessible for a positive answer.
pub fn isomorphic(d1: &Dfa, d2: &Dfa) -> bool {
    let k = d1.alphabet().len();
    if k != d2.alphabet().len() || d1.state_count() != d2.state_count() {
        return false;
    }
    let n = d1.state_count();
    let mut fwd = vec![usize::MAX; n];
    let mut bwd = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    fwd[d1.start()] = d2.start();
    bwd[d2.start()] = d1.start();
    queue.push_back(d1.start());
    let mut mapped = 1;
    while let Some(p) = queue.pop_front() {
        let q = fwd[p];
        if d1.is_final(p) != d2.is_final(q) {
            return false;
        }
        for s in 0..k {
            let (p2, q2) = (d1.next(p, Symbol::new(s)), d2.next(q, Symbol::new(s)));
            match (fwd[p2], bwd[q2]) {
                (usize::MAX, usize::MAX) => {
                    fwd[p2] = q2;
                    bwd[q2] = p2;
                    mapped += 1;
                    queue.push_back(p2);
                }
                (a, b) if a == q2 && b == p2 => {}
                _ => return false,
            }
        }
    }
    mapped == n
}

/// Minimal complete DFA of the uniquely decodable words over `alphabet`:
/// determinize the obstruction automaton, complement, minimize.
pub fn canonical_uniq_dfa(alphabet: &Alphabet, budget: usize) -> Result<Dfa> {
    let obst = determinize(&build_m_obst(alphabet), budget)?;
    Ok(minimize(&complement(&obst)))
}
