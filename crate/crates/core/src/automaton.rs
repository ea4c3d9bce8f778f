//! Complete DFAs and NFAs over an [`Alphabet`].

use std::collections::VecDeque;

use crate::alphabet::{Alphabet, Symbol, Word};
use crate::error::{Error, Result};

pub type StateId = usize;

/// A complete deterministic automaton. `delta` is row-major: state × symbol.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Dfa {
    alphabet: Alphabet,
    start: StateId,
    finals: Vec<bool>,
    delta: Vec<StateId>,
}

impl Dfa {
    /// Builds a DFA from a full transition table; `delta[q][s]` is the successor.
    pub fn new(
        alphabet: &Alphabet,
        start: StateId,
        finals: Vec<bool>,
        delta: Vec<Vec<StateId>>,
    ) -> Result<Dfa> {
        let n = finals.len();
        if delta.len() != n || start >= n.max(1) || n == 0 {
            return Err(Error::InvalidAutomaton(format!(
                "{} states, {} rows, start {}",
                n,
                delta.len(),
                start
            )));
        }
        let k = alphabet.len();
        let mut flat = Vec::with_capacity(n * k);
        for (q, row) in delta.iter().enumerate() {
            if row.len() != k {
                return Err(Error::InvalidAutomaton(format!(
                    "state {} has {} transitions, expected {}",
                    q,
                    row.len(),
                    k
                )));
            }
            if let Some(&t) = row.iter().find(|&&t| t >= n) {
                return Err(Error::InvalidAutomaton(format!(
                    "target {} out of range",
                    t
                )));
            }
            flat.extend_from_slice(row);
        }
        Ok(Dfa {
            alphabet: alphabet.clone(),
            start,
            finals,
            delta: flat,
        })
    }

    pub(crate) fn from_flat(
        alphabet: &Alphabet,
        start: StateId,
        finals: Vec<bool>,
        delta: Vec<StateId>,
    ) -> Dfa {
        debug_assert_eq!(delta.len(), finals.len() * alphabet.len());
        Dfa {
            alphabet: alphabet.clone(),
            start,
            finals,
            delta,
        }
    }

    /// One-state automaton accepting everything or nothing.
    pub fn constant(alphabet: &Alphabet, accept: bool) -> Dfa {
        Dfa::from_flat(alphabet, 0, vec![accept], vec![0; alphabet.len()])
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn start(&self) -> StateId {
        self.start
    }

    /// Number of states of the complete automaton.
    pub fn state_count(&self) -> usize {
        self.finals.len()
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals[q]
    }

    pub fn finals(&self) -> &[bool] {
        &self.finals
    }

    #[inline]
    pub fn next(&self, q: StateId, s: Symbol) -> StateId {
        self.delta[q * self.alphabet.len() + s.id()]
    }

    pub fn row(&self, q: StateId) -> &[StateId] {
        let k = self.alphabet.len();
        &self.delta[q * k..(q + 1) * k]
    }

    pub(crate) fn flat_delta(&self) -> &[StateId] {
        &self.delta
    }

    pub fn run(&self, symbols: &[Symbol]) -> StateId {
        symbols.iter().fold(self.start, |q, &s| self.next(q, s))
    }

    /// Membership of a word written over this automaton's alphabet (or any
    /// alphabet whose symbols it contains).
    pub fn accepts(&self, w: &Word) -> Result<bool> {
        let w = w.reinterpret(&self.alphabet)?;
        Ok(self.finals[self.run(w.symbols())])
    }

    pub fn accepts_symbols(&self, symbols: &[Symbol]) -> bool {
        self.finals[self.run(symbols)]
    }

    /// States from which no final state is reachable.
    pub fn dead_states(&self) -> Vec<bool> {
        let n = self.state_count();
        let k = self.alphabet.len();
        let mut rev: Vec<Vec<StateId>> = vec![Vec::new(); n];
        for q in 0..n {
            for s in 0..k {
                rev[self.delta[q * k + s]].push(q);
            }
        }
        let mut live = self.finals.clone();
        let mut queue: VecDeque<StateId> = (0..n).filter(|&q| live[q]).collect();
        while let Some(q) = queue.pop_front() {
            for &p in &rev[q] {
                if !live[p] {
                    live[p] = true;
                    queue.push_back(p);
                }
            }
        }
        live.into_iter().map(|l| !l).collect()
    }

    /// State count with dead states left out.
    pub fn trim_state_count(&self) -> usize {
        self.dead_states().iter().filter(|&&d| !d).count()
    }

    pub fn reachable(&self) -> Vec<bool> {
        let k = self.alphabet.len();
        let mut seen = vec![false; self.state_count()];
        seen[self.start] = true;
        let mut queue = VecDeque::from([self.start]);
        while let Some(q) = queue.pop_front() {
            for &t in &self.delta[q * k..(q + 1) * k] {
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        seen
    }

    /// Transitions as `(from, symbol, to)` sorted by source, then symbol id.
    pub fn transitions(&self) -> impl Iterator<Item = (StateId, Symbol, StateId)> + '_ {
        let k = self.alphabet.len();
        self.delta
            .iter()
            .enumerate()
            .map(move |(i, &t)| (i / k, Symbol::new(i % k), t))
    }

    pub fn to_nfa(&self) -> Nfa {
        let mut nfa = Nfa::new(&self.alphabet, self.state_count());
        nfa.add_start(self.start);
        for (q, &f) in self.finals.iter().enumerate() {
            if f {
                nfa.set_final(q);
            }
        }
        for (p, s, q) in self.transitions() {
            nfa.add_transition(p, s, q);
        }
        nfa
    }
}

/// Nondeterministic automaton with a set of start states and no ε-moves.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Nfa {
    alphabet: Alphabet,
    starts: Vec<StateId>,
    finals: Vec<bool>,
    delta: Vec<Vec<StateId>>,
}

impl Nfa {
    pub fn new(alphabet: &Alphabet, states: usize) -> Nfa {
        Nfa {
            alphabet: alphabet.clone(),
            starts: Vec::new(),
            finals: vec![false; states],
            delta: vec![Vec::new(); states * alphabet.len()],
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.finals.len()
    }

    pub fn starts(&self) -> &[StateId] {
        &self.starts
    }

    pub fn finals(&self) -> &[bool] {
        &self.finals
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals[q]
    }

    pub fn add_state(&mut self) -> StateId {
        self.finals.push(false);
        self.delta
            .extend(std::iter::repeat_with(Vec::new).take(self.alphabet.len()));
        self.finals.len() - 1
    }

    pub fn add_start(&mut self, q: StateId) {
        if let Err(i) = self.starts.binary_search(&q) {
            self.starts.insert(i, q);
        }
    }

    pub fn set_final(&mut self, q: StateId) {
        self.finals[q] = true;
    }

    pub fn add_transition(&mut self, from: StateId, s: Symbol, to: StateId) {
        let cell = &mut self.delta[from * self.alphabet.len() + s.id()];
        if let Err(i) = cell.binary_search(&to) {
            cell.insert(i, to);
        }
    }

    pub fn successors(&self, q: StateId, s: Symbol) -> &[StateId] {
        &self.delta[q * self.alphabet.len() + s.id()]
    }

    /// Appends a copy of `dfa` and returns the offset of its states.
    pub fn embed(&mut self, dfa: &Dfa) -> StateId {
        let offset = self.state_count();
        for _ in 0..dfa.state_count() {
            self.add_state();
        }
        for q in 0..dfa.state_count() {
            if dfa.is_final(q) {
                self.set_final(offset + q);
            }
        }
        for (p, s, q) in dfa.transitions() {
            self.add_transition(offset + p, s, offset + q);
        }
        offset
    }

    /// Whether every state has at most one successor per symbol.
    pub fn is_deterministic_per_state(&self) -> bool {
        self.delta.iter().all(|cell| cell.len() <= 1)
    }

    pub fn transitions(&self) -> impl Iterator<Item = (StateId, Symbol, StateId)> + '_ {
        let k = self.alphabet.len();
        self.delta
            .iter()
            .enumerate()
            .flat_map(move |(i, cell)| cell.iter().map(move |&t| (i / k, Symbol::new(i % k), t)))
    }

    pub fn transition_count(&self) -> usize {
        self.delta.iter().map(Vec::len).sum()
    }

    pub fn accepts(&self, w: &Word) -> Result<bool> {
        let w = w.reinterpret(&self.alphabet)?;
        let mut current = vec![false; self.state_count()];
        for &q in &self.starts {
            current[q] = true;
        }
        for &s in w.symbols() {
            let mut next = vec![false; self.state_count()];
            for q in (0..self.state_count()).filter(|&q| current[q]) {
                for &t in self.successors(q, s) {
                    next[t] = true;
                }
            }
            current = next;
        }
        Ok(current.iter().zip(&self.finals).any(|(&c, &f)| c && f))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ends_in_b() -> Dfa {
        let sigma = Alphabet::from_chars("ab").unwrap();
        Dfa::new(&sigma, 0, vec![false, true], vec![vec![0, 1], vec![0, 1]]).unwrap()
    }

    #[test]
    fn dfa_runs() {
        let d = ends_in_b();
        let w = |s| Word::parse(d.alphabet(), s).unwrap();
        assert!(d.accepts(&w("aab")).unwrap());
        assert!(!d.accepts(&w("ba")).unwrap());
        assert!(!d.accepts(&w("")).unwrap());
        assert_eq!(d.trim_state_count(), 2);
    }

    #[test]
    fn dfa_rejects_bad_tables() {
        let sigma = Alphabet::from_chars("ab").unwrap();
        assert!(Dfa::new(&sigma, 0, vec![false], vec![vec![0]]).is_err());
        assert!(Dfa::new(&sigma, 0, vec![false], vec![vec![0, 3]]).is_err());
        assert!(Dfa::new(&sigma, 2, vec![false], vec![vec![0, 0]]).is_err());
    }

    #[test]
    fn dead_states_are_found() {
        let sigma = Alphabet::from_chars("ab").unwrap();
        // 0 -a-> 1 (final), 0 -b-> 2 (dead)
        let d = Dfa::new(
            &sigma,
            0,
            vec![false, true, false],
            vec![vec![1, 2], vec![1, 1], vec![2, 2]],
        )
        .unwrap();
        assert_eq!(d.dead_states(), vec![false, false, true]);
        assert_eq!(d.trim_state_count(), 2);
    }

    #[test]
    fn dfa_as_nfa_accepts_same_words() {
        let d = ends_in_b();
        let n = d.to_nfa();
        assert!(n.is_deterministic_per_state());
        for s in ["", "a", "b", "ab", "ba", "abab"] {
            let w = Word::parse(d.alphabet(), s).unwrap();
            assert_eq!(d.accepts(&w).unwrap(), n.accepts(&w).unwrap());
        }
    }
}
