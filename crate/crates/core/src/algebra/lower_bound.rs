//! Myhill–Nerode lower bound for the size of DFAs recognizing the uniquely
//! decodable words.
//!
//! Over the alphabet `0..=i` the strictly increasing words starting with `0`
//! form a set of `2^i` pairwise distinguishable words. Two kinds of suffix
//! separate them: `xx` for a letter `x` present in exactly one of the words
//! (or of their prefixes without the last letter), and `w·u_k·w` when both
//! words share the prefix `w` and end in different letters.

use std::collections::{HashSet, VecDeque};

use crate::algebra::{canonical_uniq_dfa, DEFAULT_SUBSET_BUDGET};
use crate::alphabet::{Alphabet, Symbol, Word};
use crate::decide::Decider;
use crate::error::{Error, Result};

/// Explored suffixes in the fallback search before giving up.
pub const DEFAULT_FALLBACK_CAP: usize = 200_000;

/// `2^n · (n+1) · (n+1)^(n+1)`, the state count of the known DFA
/// construction for the uniquely decodable words.
pub fn lia_xie_bound(n: usize) -> Result<u128> {
    let overflow = Error::Overflow("lia_xie_bound");
    let m = u128::try_from(n + 1).map_err(|_| overflow.clone())?;
    let e = u32::try_from(n).map_err(|_| overflow.clone())?;
    let pow2 = 2u128.checked_pow(e).ok_or(overflow.clone())?;
    let pow = m.checked_pow(e + 1).ok_or(overflow.clone())?;
    pow2.checked_mul(m)
        .and_then(|x| x.checked_mul(pow))
        .ok_or(overflow)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinguishingSet {
    pub level: usize,
    /// Synthetic alphabet `0..=level`.
    pub alphabet: Alphabet,
    pub words: Vec<Word>,
}

/// `D_0 = {0}` and `D_{i+1} = D_i ∪ {w·(i+1) : w ∈ D_i}`, in that order.
pub fn distinguishing_set(level: usize) -> Result<DistinguishingSet> {
    let alphabet = Alphabet::synthetic(level + 1)?;
    let mut words: Vec<Vec<Symbol>> = vec![vec![Symbol::new(0)]];
    for j in 1..=level {
        let extended: Vec<Vec<Symbol>> = words
            .iter()
            .map(|w| {
                let mut w = w.clone();
                w.push(Symbol::new(j));
                w
            })
            .collect();
        words.extend(extended);
    }
    let words = words
        .into_iter()
        .map(|w| Word::from_symbols(&alphabet, w))
        .collect::<Result<_>>()?;
    Ok(DistinguishingSet {
        level,
        alphabet,
        words,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distinction {
    pub suffix: Word,
    /// Found among the `xx` / `w·u_k·w` candidates rather than by search.
    pub constructive: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    /// Longest fallback suffix; `None` means `2(|u|+|v|)+4`.
    pub max_len: Option<usize>,
    pub max_explored: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            max_len: None,
            max_explored: DEFAULT_FALLBACK_CAP,
        }
    }
}

fn letters(w: &[Symbol]) -> HashSet<Symbol> {
    w.iter().copied().collect()
}

fn constructive_candidates(u: &[Symbol], v: &[Symbol], k: usize) -> Vec<Vec<Symbol>> {
    let mut out = Vec::new();
    let mut doubled = |a: &[Symbol], b: &[Symbol]| {
        let (la, lb) = (letters(a), letters(b));
        for s in (0..k).map(Symbol::new) {
            if la.contains(&s) != lb.contains(&s) {
                let t = vec![s, s];
                if !out.contains(&t) {
                    out.push(t);
                }
            }
        }
    };
    doubled(u, v);
    if !u.is_empty() && !v.is_empty() {
        let (pu, pv) = (&u[..u.len() - 1], &v[..v.len() - 1]);
        doubled(pu, pv);
        if pu == pv {
            for last in [u[u.len() - 1], v[v.len() - 1]] {
                let mut t = pu.to_vec();
                t.push(last);
                t.extend_from_slice(pu);
                if !out.contains(&t) {
                    out.push(t);
                }
            }
        }
    }
    out
}

fn separates(decider: &Decider, u: &[Symbol], v: &[Symbol], t: &[Symbol]) -> bool {
    let ut: Vec<Symbol> = u.iter().chain(t).copied().collect();
    let vt: Vec<Symbol> = v.iter().chain(t).copied().collect();
    decider.is_unique_symbols(&ut) != decider.is_unique_symbols(&vt)
}

/// A suffix `t` with exactly one of `u·t`, `v·t` uniquely decodable.
///
/// Constructive candidates are tried first, then suffixes in breadth-first
/// order. Extensions of a suffix after which both words are already not
/// uniquely decodable are skipped: non-membership is preserved by appending.
/// `None` only means nothing was found within `bounds`.
pub fn distinguishes(
    u: &Word,
    v: &Word,
    decider: &Decider,
    bounds: SearchBounds,
) -> Result<Option<Distinction>> {
    let alphabet = decider.alphabet();
    let us = u.reinterpret(alphabet)?.symbols().to_vec();
    let vs = v.reinterpret(alphabet)?.symbols().to_vec();
    if us == vs {
        return Ok(None);
    }
    let wrap = |t: Vec<Symbol>, constructive| -> Result<Option<Distinction>> {
        Ok(Some(Distinction {
            suffix: Word::from_symbols(alphabet, t)?,
            constructive,
        }))
    };
    for t in constructive_candidates(&us, &vs, alphabet.len()) {
        if separates(decider, &us, &vs, &t) {
            return wrap(t, true);
        }
    }

    let max_len = bounds.max_len.unwrap_or(2 * (us.len() + vs.len()) + 4);
    let mut queue: VecDeque<Vec<Symbol>> = VecDeque::from([Vec::new()]);
    let mut explored = 0usize;
    while let Some(t) = queue.pop_front() {
        explored += 1;
        if explored > bounds.max_explored {
            break;
        }
        if separates(decider, &us, &vs, &t) {
            return wrap(t, false);
        }
        if t.len() >= max_len {
            continue;
        }
        let ut: Vec<Symbol> = us.iter().chain(&t).copied().collect();
        let vt: Vec<Symbol> = vs.iter().chain(&t).copied().collect();
        if !decider.is_unique_symbols(&ut) && !decider.is_unique_symbols(&vt) {
            continue;
        }
        for s in alphabet.symbols() {
            let mut next = t.clone();
            next.push(s);
            queue.push_back(next);
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCheck {
    pub left: usize,
    pub right: usize,
    pub distinction: Option<Distinction>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LowerBoundReport {
    pub alphabet_size: usize,
    pub set: DistinguishingSet,
    /// Words of the set that the decider reports uniquely decodable.
    pub all_unique: bool,
    pub pairs: Vec<PairCheck>,
    /// `2^(n-1)`, or 1 for the empty alphabet.
    pub bound: u128,
    /// Complete and trim state counts of the canonical DFA, or the error
    /// that stopped its construction.
    pub dfa: Option<std::result::Result<(usize, usize), Error>>,
}

impl LowerBoundReport {
    pub fn all_distinguished(&self) -> bool {
        self.pairs.iter().all(|p| p.distinction.is_some())
    }

    pub fn all_constructive(&self) -> bool {
        self.pairs
            .iter()
            .all(|p| p.distinction.as_ref().is_some_and(|d| d.constructive))
    }

    /// The canonical DFA was built and respects the bound.
    pub fn dfa_meets_bound(&self) -> Option<bool> {
        match &self.dfa {
            Some(Ok((complete, _))) => Some(*complete as u128 >= self.bound),
            _ => None,
        }
    }
}

/// Runs the pair checks for `D_{n-1}` over a synthetic alphabet of size `n`
/// and, when `dfa_budget` is given, builds the canonical DFA with it.
pub fn verify_lower_bound(n: usize, dfa_budget: Option<usize>) -> Result<LowerBoundReport> {
    if n == 0 {
        return Err(Error::EmptyAlphabet);
    }
    let set = distinguishing_set(n - 1)?;
    let decider = Decider::new(&set.alphabet);
    let all_unique = set
        .words
        .iter()
        .all(|w| decider.is_unique_symbols(w.symbols()));
    let mut pairs = Vec::new();
    for i in 0..set.words.len() {
        for j in i + 1..set.words.len() {
            let distinction = distinguishes(
                &set.words[i],
                &set.words[j],
                &decider,
                SearchBounds::default(),
            )?;
            pairs.push(PairCheck {
                left: i,
                right: j,
                distinction,
            });
        }
    }
    let dfa = dfa_budget.map(|budget| {
        canonical_uniq_dfa(&set.alphabet, budget).map(|d| (d.state_count(), d.trim_state_count()))
    });
    Ok(LowerBoundReport {
        alphabet_size: n,
        bound: 1u128 << (n - 1),
        set,
        all_unique,
        pairs,
        dfa,
    })
}

/// [`verify_lower_bound`] with the default subset budget.
pub fn verify_lower_bound_default(n: usize) -> Result<LowerBoundReport> {
    verify_lower_bound(n, Some(DEFAULT_SUBSET_BUDGET))
}
