//! Just enough regular expressions to state the obstruction languages:
//! symbol classes, concatenation and Kleene star. Compiled by Thompson's
//! construction and the subset construction with ε-closures.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::alphabet::{Alphabet, Symbol};
use crate::automaton::Dfa;

#[derive(Clone, Debug)]
pub enum Regex {
    /// One symbol from the set (indexed by symbol id).
    Class(Vec<bool>),
    Concat(Vec<Regex>),
    Star(Box<Regex>),
}

impl Regex {
    pub fn any(alphabet: &Alphabet) -> Regex {
        Regex::Class(vec![true; alphabet.len()])
    }

    pub fn symbol(alphabet: &Alphabet, s: Symbol) -> Regex {
        let mut set = vec![false; alphabet.len()];
        set[s.id()] = true;
        Regex::Class(set)
    }

    pub fn all_but(alphabet: &Alphabet, excluded: &[Symbol]) -> Regex {
        let mut set = vec![true; alphabet.len()];
        for s in excluded {
            set[s.id()] = false;
        }
        Regex::Class(set)
    }

    pub fn concat(parts: Vec<Regex>) -> Regex {
        Regex::Concat(parts)
    }

    pub fn star(self) -> Regex {
        Regex::Star(Box::new(self))
    }

    pub fn to_dfa_over(&self, alphabet: &Alphabet) -> Dfa {
        let mut nfa = Thompson::default();
        let (start, end) = nfa.build(self);
        nfa.determinize(alphabet, start, end)
    }
}

#[derive(Default)]
struct Thompson {
    eps: Vec<Vec<usize>>,
    moves: Vec<Vec<(Vec<bool>, usize)>>,
}

impl Thompson {
    fn state(&mut self) -> usize {
        self.eps.push(Vec::new());
        self.moves.push(Vec::new());
        self.eps.len() - 1
    }

    /// Fragment with one entry and one exit state.
    fn build(&mut self, re: &Regex) -> (usize, usize) {
        match re {
            Regex::Class(set) => {
                let (i, o) = (self.state(), self.state());
                self.moves[i].push((set.clone(), o));
                (i, o)
            }
            Regex::Concat(parts) => {
                let entry = self.state();
                let mut tail = entry;
                for p in parts {
                    let (i, o) = self.build(p);
                    self.eps[tail].push(i);
                    tail = o;
                }
                (entry, tail)
            }
            Regex::Star(inner) => {
                let (i, o) = (self.state(), self.state());
                let (ii, io) = self.build(inner);
                self.eps[i].extend([ii, o]);
                self.eps[io].extend([ii, o]);
                (i, o)
            }
        }
    }

    fn closure(&self, seed: impl IntoIterator<Item = usize>) -> BTreeSet<usize> {
        let mut set: BTreeSet<usize> = BTreeSet::new();
        let mut stack: Vec<usize> = seed.into_iter().collect();
        while let Some(q) = stack.pop() {
            if set.insert(q) {
                stack.extend(self.eps[q].iter().copied());
            }
        }
        set
    }

    fn determinize(&self, alphabet: &Alphabet, start: usize, end: usize) -> Dfa {
        let k = alphabet.len();
        let first = self.closure([start]);
        let mut index: HashMap<BTreeSet<usize>, usize> = HashMap::new();
        let mut subsets = vec![first.clone()];
        index.insert(first, 0);
        let mut delta = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(d) = queue.pop_front() {
            let mut row = Vec::with_capacity(k);
            for s in 0..k {
                let targets = subsets[d].iter().flat_map(|&q| {
                    self.moves[q]
                        .iter()
                        .filter(move |(set, _)| set[s])
                        .map(|&(_, t)| t)
                });
                let next = self.closure(targets.collect::<Vec<_>>());
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = subsets.len();
                        index.insert(next.clone(), id);
                        subsets.push(next);
                        queue.push_back(id);
                        id
                    }
                };
                row.push(id);
            }
            delta.push(row);
        }
        let finals = subsets.iter().map(|s| s.contains(&end)).collect();
        Dfa::from_flat(alphabet, 0, finals, delta.concat())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Word;

    #[test]
    fn contains_factor_ab() {
        let sigma = Alphabet::from_chars("abc").unwrap();
        let s = |c| sigma.symbol(c).unwrap();
        let re = Regex::concat(vec![
            Regex::any(&sigma).star(),
            Regex::symbol(&sigma, s('a')),
            Regex::all_but(&sigma, &[s('c')]).star(),
            Regex::symbol(&sigma, s('b')),
            Regex::any(&sigma).star(),
        ]);
        let d = re.to_dfa_over(&sigma);
        let acc = |w| d.accepts(&Word::parse(&sigma, w).unwrap()).unwrap();
        assert!(acc("ab"));
        assert!(acc("cabc"));
        assert!(acc("aaab"));
        assert!(!acc("acb"));
        assert!(!acc("ba"));
        assert!(!acc(""));
    }

    #[test]
    fn star_accepts_empty() {
        let sigma = Alphabet::from_chars("ab").unwrap();
        let d = Regex::symbol(&sigma, sigma.symbol('a').unwrap())
            .star()
            .to_dfa_over(&sigma);
        let acc = |w| d.accepts(&Word::parse(&sigma, w).unwrap()).unwrap();
        assert!(acc(""));
        assert!(acc("aaa"));
        assert!(!acc("ab"));
    }
}
