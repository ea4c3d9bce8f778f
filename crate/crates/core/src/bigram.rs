//! The bigram map and bigram graphs.
//!
//! Counts are stored as a dense `(n+1) × (n+1)` matrix over the alphabet plus
//! the delimiter, indexed by [`Alphabet::node_index`].

use std::collections::VecDeque;

use crate::alphabet::{Alphabet, Symbol, Word};
use crate::error::{Error, Result};

/// Bigram counts of a delimited string `$w$`.
#[derive(Clone, PartialEq, Eq)]
pub struct BigramCounts {
    alphabet: Alphabet,
    counts: Vec<u64>,
}

impl BigramCounts {
    pub fn zero(alphabet: &Alphabet) -> BigramCounts {
        let n = alphabet.len() + 1;
        BigramCounts {
            alphabet: alphabet.clone(),
            counts: vec![0; n * n],
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    #[inline]
    fn idx(&self, from: Symbol, to: Symbol) -> usize {
        self.alphabet.node_index(from) * (self.alphabet.len() + 1) + self.alphabet.node_index(to)
    }

    pub fn get(&self, from: Symbol, to: Symbol) -> u64 {
        self.counts[self.idx(from, to)]
    }

    pub fn set(&mut self, from: Symbol, to: Symbol, count: u64) {
        let i = self.idx(from, to);
        self.counts[i] = count;
    }

    pub fn increment(&mut self, from: Symbol, to: Symbol) {
        let i = self.idx(from, to);
        self.counts[i] += 1;
    }

    /// Raw row-major matrix over node indices.
    pub fn matrix(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Nonzero entries in node-index order.
    pub fn nonzero(&self) -> Vec<(Symbol, Symbol, u64)> {
        let n = self.alphabet.len() + 1;
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| {
                (
                    self.alphabet.node_symbol(i / n),
                    self.alphabet.node_symbol(i % n),
                    c,
                )
            })
            .collect()
    }

    /// Total weight leaving and entering a node, self-loops included.
    pub fn degree(&self, v: Symbol) -> (u64, u64) {
        let n = self.alphabet.len() + 1;
        let vi = self.alphabet.node_index(v);
        let out = self.counts[vi * n..(vi + 1) * n].iter().sum();
        let inn = (0..n).map(|u| self.counts[u * n + vi]).sum();
        (out, inn)
    }

    /// Every symbol has equal in- and out-weight and the delimiter has one of each.
    pub fn is_balanced(&self) -> bool {
        if self.degree(Symbol::DELIMITER) != (1, 1) {
            return false;
        }
        self.alphabet.symbols().all(|s| {
            let (out, inn) = self.degree(s);
            out == inn
        })
    }
}

impl std::fmt::Debug for BigramCounts {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut m = f.debug_map();
        for (a, b, c) in self.nonzero() {
            m.entry(
                &format!("{}{}", self.alphabet.char_of(a), self.alphabet.char_of(b)),
                &c,
            );
        }
        m.finish()
    }
}

/// Counts every length-2 factor of `$w$`, overlaps included.
pub fn phi(w: &Word) -> BigramCounts {
    let mut counts = BigramCounts::zero(w.alphabet());
    let mut prev = Symbol::DELIMITER;
    for &s in w.symbols() {
        counts.increment(prev, s);
        prev = s;
    }
    counts.increment(prev, Symbol::DELIMITER);
    counts
}

/// Directed weighted graph on `Σ ∪ {$}` induced by a word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BigramGraph {
    counts: BigramCounts,
}

/// Flow figures of one node. Self-loops count only toward `self_flow`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Flows {
    pub inflow: u64,
    pub outflow: u64,
    pub self_flow: u64,
}

pub fn bigram_graph(w: &Word) -> BigramGraph {
    BigramGraph { counts: phi(w) }
}

impl From<BigramCounts> for BigramGraph {
    fn from(counts: BigramCounts) -> Self {
        BigramGraph { counts }
    }
}

impl From<BigramGraph> for BigramCounts {
    fn from(g: BigramGraph) -> Self {
        g.counts
    }
}

impl BigramGraph {
    pub fn alphabet(&self) -> &Alphabet {
        self.counts.alphabet()
    }

    pub fn counts(&self) -> &BigramCounts {
        &self.counts
    }

    /// Edge weight `e(a, b)`.
    pub fn weight(&self, a: Symbol, b: Symbol) -> u64 {
        self.counts.get(a, b)
    }

    fn check_node(&self, v: Symbol) -> Result<()> {
        if v.is_delimiter() || v.id() < self.alphabet().len() {
            Ok(())
        } else {
            Err(Error::SymbolOutOfRange(v.id()))
        }
    }

    fn nodes(&self) -> impl Iterator<Item = Symbol> + '_ {
        let a = self.alphabet();
        (0..=a.len()).map(move |i| a.node_symbol(i))
    }

    /// Nodes `u ≠ v` with `e(v, u) > 0`, in id order (delimiter last).
    pub fn children(&self, v: Symbol) -> Vec<Symbol> {
        self.nodes()
            .filter(|&u| u != v && self.weight(v, u) > 0)
            .collect()
    }

    /// Nodes `u ≠ v` with `e(u, v) > 0`.
    pub fn parents(&self, v: Symbol) -> Vec<Symbol> {
        self.nodes()
            .filter(|&u| u != v && self.weight(u, v) > 0)
            .collect()
    }

    pub fn flows(&self, v: Symbol) -> Result<Flows> {
        self.check_node(v)?;
        let mut f = Flows {
            inflow: 0,
            outflow: 0,
            self_flow: self.weight(v, v),
        };
        for u in self.nodes().filter(|&u| u != v) {
            f.inflow += self.weight(u, v);
            f.outflow += self.weight(v, u);
        }
        Ok(f)
    }

    /// Whether a path of at least one positive-weight edge leads from `from`
    /// to `to` without passing through `avoid`.
    pub fn has_path(&self, from: Symbol, to: Symbol, avoid: Option<Symbol>) -> Result<bool> {
        self.check_node(from)?;
        self.check_node(to)?;
        if let Some(x) = avoid {
            self.check_node(x)?;
            if x == from || x == to {
                return Err(Error::InvalidPathQuery(format!(
                    "avoided node {} is an endpoint",
                    self.alphabet().char_of(x)
                )));
            }
        }
        let n = self.alphabet().len() + 1;
        let target = self.alphabet().node_index(to);
        let banned = avoid.map(|x| self.alphabet().node_index(x));
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        queue.push_back(self.alphabet().node_index(from));
        while let Some(u) = queue.pop_front() {
            let row = &self.counts.matrix()[u * n..(u + 1) * n];
            for (v, &weight) in row.iter().enumerate() {
                if weight == 0 || Some(v) == banned || seen[v] {
                    continue;
                }
                if v == target {
                    return Ok(true);
                }
                seen[v] = true;
                queue.push_back(v);
            }
        }
        Ok(false)
    }
}
