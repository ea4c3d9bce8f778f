//! Deciding unique decodability by simulating the obstruction automaton.
//!
//! A word is uniquely decodable exactly when no obstruction language contains
//! it. The union automaton from [`build_m_obst`] is deterministic inside each
//! component, so the simulation keeps a single state per component and the
//! components can run in lockstep. Every component's accepting state is an
//! absorbing sink, which makes acceptance monotone in prefixes: the scan may
//! stop at the first position where any component accepts.

use std::borrow::Cow;

use crate::alphabet::{Alphabet, Symbol, Word};
use crate::automaton::{Dfa, Nfa, StateId};
use crate::error::Result;
use crate::obstructions::{build_m_obst, k_dfa_template, obstruction_triples, ObstructionTriple};

/// Outcome of a uniqueness query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub unique: bool,
    /// Obstruction languages containing the whole word, in triple order.
    pub witnesses: Vec<ObstructionTriple>,
    /// Length of the shortest prefix that is not uniquely decodable.
    pub bad_prefix_len: Option<usize>,
}

impl Decision {
    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.unique {
            return "UNIQUE".to_string();
        }
        let ws: Vec<String> = self
            .witnesses
            .iter()
            .map(|t| t.display(alphabet).to_string())
            .collect();
        let mut out = format!("NOT-UNIQUE witnesses=[{}]", ws.join(","));
        if let Some(p) = self.bad_prefix_len {
            out.push_str(&format!(" bad-prefix={}", p));
        }
        out
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum WitnessMode {
    /// Report every obstruction language that contains the word.
    #[default]
    All,
    /// Stop at the first one found.
    First,
}

/// Reusable decision procedure for one alphabet.
#[derive(Debug, Clone)]
pub struct Decider {
    alphabet: Alphabet,
    triples: Vec<ObstructionTriple>,
    m_obst: Nfa,
    /// Exact per-triple DFAs, used for witness reporting.
    exact: Vec<Dfa>,
}

impl Decider {
    pub fn new(alphabet: &Alphabet) -> Decider {
        let triples = obstruction_triples(alphabet);
        let exact = triples
            .iter()
            .map(|t| k_dfa_template(t, alphabet).expect("generated triples are valid"))
            .collect();
        Decider {
            alphabet: alphabet.clone(),
            m_obst: build_m_obst(alphabet),
            triples,
            exact,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn triples(&self) -> &[ObstructionTriple] {
        &self.triples
    }

    pub fn m_obst(&self) -> &Nfa {
        &self.m_obst
    }

    fn symbols_of<'w>(&self, w: &'w Word) -> Result<Cow<'w, [Symbol]>> {
        if w.alphabet().same_as(&self.alphabet) {
            return Ok(Cow::Borrowed(w.symbols()));
        }
        Ok(Cow::Owned(
            w.reinterpret(&self.alphabet)?.symbols().to_vec(),
        ))
    }

    #[inline]
    fn step(&self, q: StateId, s: Symbol) -> StateId {
        self.m_obst.successors(q, s)[0]
    }

    /// Runs every component over the whole word, one after another. No early exit.
    pub fn accepts_full_scan(&self, w: &Word) -> Result<bool> {
        let syms = self.symbols_of(w)?;
        Ok(self.full_scan_symbols(&syms))
    }

    /// Symbols must belong to this decider's alphabet.
    pub fn full_scan_symbols(&self, syms: &[Symbol]) -> bool {
        let mut accepted = false;
        for &start in self.m_obst.starts() {
            let q = syms.iter().fold(start, |q, &s| self.step(q, s));
            accepted |= self.m_obst.is_final(q);
        }
        accepted
    }

    /// Least `p` such that the first `p` symbols are not uniquely decodable.
    pub fn shortest_bad_prefix(&self, w: &Word) -> Result<Option<usize>> {
        let syms = self.symbols_of(w)?;
        Ok(self.bad_prefix_symbols(&syms))
    }

    /// Symbols must belong to this decider's alphabet.
    pub fn bad_prefix_symbols(&self, syms: &[Symbol]) -> Option<usize> {
        if self.m_obst.starts().is_empty() {
            return None;
        }
        let mut threads: Vec<StateId> = self.m_obst.starts().to_vec();
        for (i, &s) in syms.iter().enumerate() {
            let mut hit = false;
            for q in threads.iter_mut() {
                *q = self.step(*q, s);
                hit |= self.m_obst.is_final(*q);
            }
            if hit {
                return Some(i + 1);
            }
        }
        None
    }

    /// Triples whose obstruction language contains the word.
    pub fn witnesses(&self, w: &Word, mode: WitnessMode) -> Result<Vec<ObstructionTriple>> {
        let syms = self.symbols_of(w)?;
        Ok(self.witness_symbols(&syms, mode))
    }

    fn witness_symbols(&self, syms: &[Symbol], mode: WitnessMode) -> Vec<ObstructionTriple> {
        let mut out = Vec::new();
        for (t, d) in self.triples.iter().zip(&self.exact) {
            if d.accepts_symbols(syms) {
                out.push(*t);
                if mode == WitnessMode::First {
                    break;
                }
            }
        }
        out
    }

    /// Whether the word lies in some obstruction language, with the
    /// accepting triples.
    pub fn is_obstruction(&self, w: &Word) -> Result<(bool, Vec<ObstructionTriple>)> {
        let syms = self.symbols_of(w)?;
        let hit = self.bad_prefix_symbols(&syms).is_some();
        let witnesses = if hit {
            self.witness_symbols(&syms, WitnessMode::All)
        } else {
            Vec::new()
        };
        Ok((hit, witnesses))
    }

    pub fn decide(&self, w: &Word, mode: WitnessMode) -> Result<Decision> {
        let syms = self.symbols_of(w)?;
        Ok(self.decide_symbols(&syms, mode))
    }

    pub fn decide_symbols(&self, syms: &[Symbol], mode: WitnessMode) -> Decision {
        match self.bad_prefix_symbols(syms) {
            None => Decision {
                unique: true,
                witnesses: Vec::new(),
                bad_prefix_len: None,
            },
            Some(p) => Decision {
                unique: false,
                witnesses: self.witness_symbols(syms, mode),
                bad_prefix_len: Some(p),
            },
        }
    }

    pub fn is_unique(&self, w: &Word) -> Result<bool> {
        Ok(self.shortest_bad_prefix(w)?.is_none())
    }

    pub fn is_unique_symbols(&self, syms: &[Symbol]) -> bool {
        self.bad_prefix_symbols(syms).is_none()
    }
}

/// [`Decider::is_obstruction`] over the word's own alphabet.
pub fn is_obstruction(w: &Word) -> (bool, Vec<ObstructionTriple>) {
    Decider::new(w.alphabet())
        .is_obstruction(w)
        .expect("word is valid over its own alphabet")
}

pub fn is_uniquely_decodable(w: &Word) -> Decision {
    Decider::new(w.alphabet())
        .decide(w, WitnessMode::All)
        .expect("word is valid over its own alphabet")
}

pub fn shortest_bad_prefix(w: &Word) -> Option<usize> {
    Decider::new(w.alphabet())
        .shortest_bad_prefix(w)
        .expect("word is valid over its own alphabet")
}
