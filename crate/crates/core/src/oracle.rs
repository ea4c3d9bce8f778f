//! Ground truth by exhaustive search.
//!
//! Every decoding of a bigram-count vector is a walk from the delimiter back
//! to the delimiter that uses each counted bigram exactly once. [`decodings`]
//! enumerates these walks depth-first, trying successors in id order (the
//! delimiter last), so its output order is deterministic.
//!
//! The module also carries the node-removal machinery: removable nodes and
//! the pruning operator that deletes a letter from a word.

use crate::alphabet::{Alphabet, Symbol, Word};
use crate::bigram::{bigram_graph, phi, BigramCounts, BigramGraph};
use crate::error::{Error, Result};

/// Upper bound on the number of decodings ever listed.
pub const SAFETY_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodingSet {
    pub words: Vec<Word>,
    /// More decodings exist beyond the ones listed.
    pub truncated: bool,
}

/// How many decodings to collect.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cap {
    Limit(usize),
    /// Up to [`SAFETY_CAP`].
    Unlimited,
}

impl Cap {
    fn limit(self) -> usize {
        match self {
            Cap::Limit(n) => n.clamp(1, SAFETY_CAP),
            Cap::Unlimited => SAFETY_CAP,
        }
    }
}

struct Search<'a> {
    alphabet: &'a Alphabet,
    /// Remaining multiplicity of each bigram, row-major over node indices.
    remaining: Vec<u64>,
    left: u64,
    nodes: usize,
    path: Vec<Symbol>,
    found: Vec<Word>,
    want: usize,
}

impl Search<'_> {
    fn walk(&mut self, at: usize) {
        let delim = self.nodes - 1;
        for next in 0..self.nodes {
            if self.found.len() >= self.want {
                return;
            }
            let e = at * self.nodes + next;
            if self.remaining[e] == 0 {
                continue;
            }
            self.remaining[e] -= 1;
            self.left -= 1;
            if next == delim {
                if self.left == 0 {
                    self.found.push(
                        Word::from_symbols(self.alphabet, self.path.clone())
                            .expect("path only holds alphabet symbols"),
                    );
                }
            } else {
                self.path.push(Symbol::new(next));
                self.walk(next);
                self.path.pop();
            }
            self.remaining[e] += 1;
            self.left += 1;
        }
    }
}

/// All words `u` with `phi(u) = counts`, up to `cap`.
pub fn decodings(counts: &BigramCounts, cap: Cap) -> DecodingSet {
    let limit = cap.limit();
    let alphabet = counts.alphabet();
    let mut search = Search {
        alphabet,
        remaining: counts.matrix().to_vec(),
        left: counts.total(),
        nodes: alphabet.len() + 1,
        path: Vec::new(),
        found: Vec::new(),
        want: limit + 1,
    };
    if counts.is_balanced() {
        search.walk(alphabet.len());
    }
    let mut words = search.found;
    let truncated = words.len() > limit;
    words.truncate(limit);
    DecodingSet { words, truncated }
}

/// Exactly one word has the same bigram counts as `w`.
pub fn is_unique_oracle(w: &Word) -> bool {
    decoding_count(w, 2) == 1
}

/// Number of decodings of `phi(w)`, saturating at `cap + 1`.
pub fn decoding_count(w: &Word, cap: usize) -> usize {
    let set = decodings(&phi(w), Cap::Limit(cap));
    set.words.len() + usize::from(set.truncated)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RemovalKind {
    /// Outflow is exactly one.
    TypeI,
    TypeII,
}

/// Removability of a node. `None` means not removable.
///
/// A node `x` is removable when it has a single child `b`, no parent of `x`
/// has `b` as a child, and a self-loop on `x` forces outflow one.
pub fn is_removable(g: &BigramGraph, x: Symbol) -> Result<Option<RemovalKind>> {
    if x.is_delimiter() {
        return Err(Error::DelimiterNotRemovable);
    }
    let flows = g.flows(x)?;
    let children = g.children(x);
    let [b] = children[..] else {
        return Ok(None);
    };
    if g.parents(x).into_iter().any(|p| g.weight(p, b) > 0) {
        return Ok(None);
    }
    if flows.self_flow > 0 && flows.outflow != 1 {
        return Ok(None);
    }
    Ok(Some(if flows.outflow == 1 {
        RemovalKind::TypeI
    } else {
        RemovalKind::TypeII
    }))
}

/// Removable letters of the word's bigram graph, in id order.
pub fn removable_nodes(w: &Word) -> Vec<(Symbol, RemovalKind)> {
    let g = bigram_graph(w);
    w.alphabet()
        .symbols()
        .filter_map(|s| {
            is_removable(&g, s)
                .expect("symbols of the alphabet are valid nodes")
                .map(|k| (s, k))
        })
        .collect()
}

/// Deletes every occurrence of `x`.
pub fn prune(w: &Word, x: Symbol) -> Word {
    let kept = w.symbols().iter().copied().filter(|&s| s != x).collect();
    Word::from_symbols(w.alphabet(), kept).expect("subsequence of a valid word")
}

/// Prunes the smallest-id removable node until none is left.
pub fn prune_fixpoint(w: &Word) -> Word {
    let mut current = w.clone();
    while let Some(&(x, _)) = removable_nodes(&current).first() {
        current = prune(&current, x);
    }
    current
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(sigma: &str, s: &str) -> Word {
        Word::parse(&Alphabet::from_chars(sigma).unwrap(), s).unwrap()
    }

    fn strings(set: &DecodingSet) -> Vec<String> {
        set.words.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn katana_has_two_decodings() {
        let set = decodings(&phi(&w("aknt", "katana")), Cap::Unlimited);
        // from `a`, the child `n` (id 2) is tried before `t` (id 3)
        assert_eq!(strings(&set), vec!["kanata", "katana"]);
        assert!(!set.truncated);
    }

    #[test]
    fn single_letter_and_empty() {
        let set = decodings(&phi(&w("a", "a")), Cap::Unlimited);
        assert_eq!(strings(&set), vec!["a"]);
        let set = decodings(&phi(&w("ab", "")), Cap::Unlimited);
        assert_eq!(strings(&set), vec![""]);
        assert!(is_unique_oracle(&w("ab", "")));
    }

    #[test]
    fn axbab_decodings() {
        let mut got = strings(&decodings(&phi(&w("abx", "axbab")), Cap::Unlimited));
        got.sort();
        assert_eq!(got, vec!["abaxb", "axbab"]);
    }

    #[test]
    fn unique_oracle_examples() {
        assert!(is_unique_oracle(&w("aknt", "katan")));
        assert!(!is_unique_oracle(&w("aknt", "katana")));
    }

    #[test]
    fn cap_truncates() {
        // a·b·a·b·a over {a,b,c} with c-loops gives many decodings
        let word = w("abc", "acbcacbca");
        let all = decodings(&phi(&word), Cap::Unlimited);
        assert!(all.words.len() > 2);
        let two = decodings(&phi(&word), Cap::Limit(2));
        assert_eq!(two.words.len(), 2);
        assert!(two.truncated);
        assert_eq!(two.words[..], all.words[..2]);
        let exact = decodings(&phi(&word), Cap::Limit(all.words.len()));
        assert!(!exact.truncated);
    }

    #[test]
    fn unbalanced_counts_have_no_decodings() {
        let sigma = Alphabet::from_chars("ab").unwrap();
        let mut c = BigramCounts::zero(&sigma);
        let a = sigma.symbol('a').unwrap();
        c.set(Symbol::DELIMITER, a, 1);
        c.set(a, a, 1);
        let set = decodings(&c, Cap::Unlimited);
        assert!(set.words.is_empty());
        assert!(!set.truncated);
    }

    #[test]
    fn removability_examples() {
        let katan = w("aknt", "katan");
        let g = bigram_graph(&katan);
        let k = katan.alphabet().symbol('k').unwrap();
        assert_eq!(is_removable(&g, k).unwrap(), Some(RemovalKind::TypeI));

        let axbab = w("abx", "axbab");
        let g = bigram_graph(&axbab);
        let x = axbab.alphabet().symbol('x').unwrap();
        assert_eq!(is_removable(&g, x).unwrap(), None);

        let ab = w("ab", "ab");
        let g = bigram_graph(&ab);
        let a = ab.alphabet().symbol('a').unwrap();
        assert_eq!(is_removable(&g, a).unwrap(), Some(RemovalKind::TypeI));
        assert_eq!(
            is_removable(&g, Symbol::DELIMITER),
            Err(Error::DelimiterNotRemovable)
        );
    }

    #[test]
    fn type_two_removal() {
        // `a` occurs twice, always followed by `b`: single child, outflow 2
        let word = w("abc", "abcab");
        let g = bigram_graph(&word);
        let a = word.alphabet().symbol('a').unwrap();
        assert_eq!(is_removable(&g, a).unwrap(), Some(RemovalKind::TypeII));
    }

    #[test]
    fn self_loop_needs_outflow_one() {
        let word = w("ab", "aab");
        let g = bigram_graph(&word);
        let a = word.alphabet().symbol('a').unwrap();
        assert_eq!(is_removable(&g, a).unwrap(), Some(RemovalKind::TypeI));
        let word = w("abc", "aabcaab");
        let g = bigram_graph(&word);
        assert_eq!(is_removable(&g, a).unwrap(), None);
    }

    #[test]
    fn prune_examples() {
        let sym = |w: &Word, c| w.alphabet().symbol(c).unwrap();
        let axbab = w("abx", "axbab");
        assert_eq!(prune(&axbab, sym(&axbab, 'x')).to_string(), "abab");
        let katana = w("aknt", "katana");
        assert_eq!(prune(&katana, sym(&katana, 'a')).to_string(), "ktn");
        let katan = w("aknt", "katan");
        assert_eq!(prune(&katan, sym(&katan, 't')).to_string(), "kaan");
        assert_eq!(prune(&katan, Symbol::new(2)).len(), 4);
    }

    #[test]
    fn fixpoint_leaves_no_removable_node() {
        for s in ["katan", "katana", "", "abcab", "tatakana"] {
            let word = w("aknt", &s.replace(['b', 'c'], "n"));
            let residue = prune_fixpoint(&word);
            assert!(removable_nodes(&residue).is_empty(), "{}", s);
            assert_eq!(
                decoding_count(&residue, 1000),
                decoding_count(&word, 1000),
                "{}",
                s
            );
        }
        let katana = w("aknt", "katana");
        assert_eq!(decoding_count(&prune_fixpoint(&katana), 100), 2);
        assert_eq!(prune_fixpoint(&w("ab", "")).to_string(), "");
    }
}
