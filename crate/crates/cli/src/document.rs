//! Serialized automata: a JSON document and a DOT rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use bigram_uniq::{Alphabet, Dfa, Nfa};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Dfa,
    Nfa,
}

/// Transitions are sorted by source, symbol id, target.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomatonDocument {
    pub kind: Kind,
    pub alphabet: Vec<String>,
    pub states: usize,
    pub starts: Vec<usize>,
    pub finals: Vec<usize>,
    pub transitions: Vec<(usize, String, usize)>,
}

fn symbol_names(alphabet: &Alphabet) -> Vec<String> {
    alphabet.chars().iter().map(|c| c.to_string()).collect()
}

fn final_list(finals: &[bool]) -> Vec<usize> {
    (0..finals.len()).filter(|&q| finals[q]).collect()
}

impl AutomatonDocument {
    pub fn from_dfa(d: &Dfa) -> AutomatonDocument {
        let sigma = d.alphabet();
        let transitions = d
            .transitions()
            .map(|(p, s, q)| (p, sigma.char_of(s).to_string(), q))
            .collect();
        AutomatonDocument {
            kind: Kind::Dfa,
            alphabet: symbol_names(sigma),
            states: d.state_count(),
            starts: vec![d.start()],
            finals: final_list(d.finals()),
            transitions,
        }
    }

    pub fn from_nfa(n: &Nfa) -> AutomatonDocument {
        let sigma = n.alphabet();
        let mut transitions: Vec<_> = n.transitions().map(|(p, s, q)| (p, s.id(), q)).collect();
        transitions.sort_unstable();
        AutomatonDocument {
            kind: Kind::Nfa,
            alphabet: symbol_names(sigma),
            states: n.state_count(),
            starts: n.starts().to_vec(),
            finals: final_list(n.finals()),
            transitions: transitions
                .into_iter()
                .map(|(p, s, q)| (p, sigma.chars()[s].to_string(), q))
                .collect(),
        }
    }

    pub fn parse(text: &str) -> CliResult<AutomatonDocument> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn alphabet(&self) -> CliResult<Alphabet> {
        let mut chars = Vec::with_capacity(self.alphabet.len());
        for s in &self.alphabet {
            let mut it = s.chars();
            match (it.next(), it.next()) {
                (Some(c), None) => chars.push(c),
                _ => {
                    return Err(CliError::Input(format!(
                        "alphabet entry {:?} is not a single character",
                        s
                    )))
                }
            }
        }
        Ok(Alphabet::new(chars)?)
    }

    fn checked_state(&self, q: usize) -> CliResult<usize> {
        if q < self.states {
            Ok(q)
        } else {
            Err(CliError::Input(format!(
                "state {} out of range (states: {})",
                q, self.states
            )))
        }
    }

    pub fn to_nfa(&self) -> CliResult<Nfa> {
        let sigma = self.alphabet()?;
        let mut n = Nfa::new(&sigma, self.states);
        for &q in &self.starts {
            n.add_start(self.checked_state(q)?);
        }
        for &q in &self.finals {
            n.set_final(self.checked_state(q)?);
        }
        for (p, s, q) in &self.transitions {
            let sym = single_char(s).and_then(|c| Ok(sigma.symbol(c)?))?;
            n.add_transition(self.checked_state(*p)?, sym, self.checked_state(*q)?);
        }
        Ok(n)
    }

    /// Requires a complete deterministic table and a single start.
    pub fn to_dfa(&self) -> CliResult<Dfa> {
        let nfa = self.to_nfa()?;
        let [start] = self.starts[..] else {
            return Err(CliError::Input(format!(
                "a DFA needs one start state, found {}",
                self.starts.len()
            )));
        };
        let sigma = nfa.alphabet().clone();
        let mut rows = Vec::with_capacity(self.states);
        for q in 0..self.states {
            let mut row = Vec::with_capacity(sigma.len());
            for s in sigma.symbols() {
                match nfa.successors(q, s) {
                    [t] => row.push(*t),
                    other => {
                        return Err(CliError::Input(format!(
                            "state {} has {} transitions on {:?}",
                            q,
                            other.len(),
                            sigma.char_of(s)
                        )))
                    }
                }
            }
            rows.push(row);
        }
        let finals = (0..self.states).map(|q| nfa.is_final(q)).collect();
        Ok(Dfa::new(&sigma, start, finals, rows)?)
    }

    /// DOT digraph with one edge per state pair. Bundles covering more than
    /// half the alphabet are labelled by the symbols they miss.
    pub fn to_dot(&self) -> String {
        let k = self.alphabet.len();
        let mut bundles: BTreeMap<(usize, usize), Vec<&str>> = BTreeMap::new();
        for (p, s, q) in &self.transitions {
            bundles.entry((*p, *q)).or_default().push(s);
        }
        let name = match self.kind {
            Kind::Dfa => "dfa",
            Kind::Nfa => "nfa",
        };
        let mut out = String::new();
        let _ = writeln!(out, "digraph {} {{", name);
        out.push_str("  rankdir=LR;\n  node [shape=circle];\n");
        for (i, q) in self.starts.iter().enumerate() {
            let _ = writeln!(out, "  start{} [shape=point];", i);
            let _ = writeln!(out, "  start{} -> q{};", i, q);
        }
        for q in &self.finals {
            let _ = writeln!(out, "  q{} [shape=doublecircle];", q);
        }
        for ((p, q), syms) in &bundles {
            let label = if syms.len() == k && k > 1 {
                "Σ".to_string()
            } else if 2 * syms.len() > k && k > 2 {
                let missing: Vec<&str> = self
                    .alphabet
                    .iter()
                    .map(String::as_str)
                    .filter(|s| !syms.contains(s))
                    .collect();
                format!("Σ∖{{{}}}", missing.join(","))
            } else {
                syms.join(",")
            };
            let _ = writeln!(out, "  q{} -> q{} [label=\"{}\"];", p, q, escape(&label));
        }
        out.push_str("}\n");
        out
    }
}

fn single_char(s: &str) -> CliResult<char> {
    let mut it = s.chars();
    match (it.next(), it.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(CliError::Input(format!(
            "symbol {:?} is not a single character",
            s
        ))),
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
