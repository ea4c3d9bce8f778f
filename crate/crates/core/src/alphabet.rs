//! Alphabets, symbols and words.
//!
//! An [`Alphabet`] is an ordered list of distinct characters. Each character
//! gets a dense id in listed order; the delimiter `$` is not part of the
//! alphabet and is represented by [`Symbol::DELIMITER`].

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Printed form of the delimiter.
pub const DELIMITER_CHAR: char = '$';

/// Characters used for synthetic alphabets, in id order.
const SYNTHETIC: &str = "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

/// Dense symbol id. Ids `0..alphabet.len()` name user symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(u16);

impl Symbol {
    pub const DELIMITER: Symbol = Symbol(u16::MAX);

    pub fn new(id: usize) -> Symbol {
        debug_assert!(id < u16::MAX as usize);
        Symbol(id as u16)
    }

    #[inline]
    pub fn id(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_delimiter(self) -> bool {
        self == Symbol::DELIMITER
    }
}

#[derive(Debug)]
struct Inner {
    chars: Vec<char>,
    index: HashMap<char, Symbol>,
}

/// Ordered set of user symbols. Cheap to clone.
#[derive(Clone)]
pub struct Alphabet(Arc<Inner>);

impl Alphabet {
    pub fn new<I: IntoIterator<Item = char>>(chars: I) -> Result<Alphabet> {
        let chars: Vec<char> = chars.into_iter().collect();
        if chars.len() >= u16::MAX as usize {
            return Err(Error::AlphabetTooLarge(chars.len()));
        }
        let mut index = HashMap::with_capacity(chars.len());
        for (i, &c) in chars.iter().enumerate() {
            if c == DELIMITER_CHAR {
                return Err(Error::ReservedDelimiter);
            }
            if index.insert(c, Symbol::new(i)).is_some() {
                return Err(Error::DuplicateSymbol(c));
            }
        }
        Ok(Alphabet(Arc::new(Inner { chars, index })))
    }

    /// Alphabet written as a string of single-character symbols.
    pub fn from_chars(s: &str) -> Result<Alphabet> {
        Alphabet::new(s.chars())
    }

    /// The synthetic alphabet `{⟨0⟩, …, ⟨n-1⟩}` rendered as digits, then
    /// lowercase, then uppercase letters.
    pub fn synthetic(n: usize) -> Result<Alphabet> {
        if n > SYNTHETIC.len() {
            return Err(Error::AlphabetTooLarge(n));
        }
        Alphabet::new(SYNTHETIC.chars().take(n))
    }

    /// Alphabet of the distinct characters of `s`, sorted.
    pub fn infer(s: &str) -> Result<Alphabet> {
        let mut chars: Vec<char> = s.chars().collect();
        chars.sort_unstable();
        chars.dedup();
        Alphabet::new(chars)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.chars.is_empty()
    }

    pub fn symbols(&self) -> impl ExactSizeIterator<Item = Symbol> + '_ {
        (0..self.len()).map(Symbol::new)
    }

    pub fn chars(&self) -> &[char] {
        &self.0.chars
    }

    pub fn symbol(&self, c: char) -> Result<Symbol> {
        self.0.index.get(&c).copied().ok_or(Error::UnknownSymbol(c))
    }

    pub fn contains(&self, c: char) -> bool {
        self.0.index.contains_key(&c)
    }

    /// Character for a symbol; the delimiter prints as `$`.
    pub fn char_of(&self, s: Symbol) -> char {
        if s.is_delimiter() {
            DELIMITER_CHAR
        } else {
            self.0.chars[s.id()]
        }
    }

    /// Index of a graph node: symbols map to their id, the delimiter to `len()`.
    #[inline]
    pub fn node_index(&self, s: Symbol) -> usize {
        if s.is_delimiter() {
            self.len()
        } else {
            s.id()
        }
    }

    #[inline]
    pub fn node_symbol(&self, idx: usize) -> Symbol {
        if idx == self.len() {
            Symbol::DELIMITER
        } else {
            Symbol::new(idx)
        }
    }

    /// Symbol or delimiter named by `c`.
    pub fn node(&self, c: char) -> Result<Symbol> {
        if c == DELIMITER_CHAR {
            Ok(Symbol::DELIMITER)
        } else {
            self.symbol(c)
        }
    }

    pub fn same_as(&self, other: &Alphabet) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.chars == other.0.chars
    }

    pub fn is_subset_of(&self, other: &Alphabet) -> bool {
        self.0.chars.iter().all(|&c| other.contains(c))
    }

    pub fn as_string(&self) -> String {
        self.0.chars.iter().collect()
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Alphabet {}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({:?})", self.as_string())
    }
}

/// A finite string over an alphabet. Never contains the delimiter.
#[derive(Clone, PartialEq, Eq)]
pub struct Word {
    alphabet: Alphabet,
    symbols: Vec<Symbol>,
}

impl Word {
    pub fn parse(alphabet: &Alphabet, s: &str) -> Result<Word> {
        let symbols = s
            .chars()
            .map(|c| alphabet.symbol(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word {
            alphabet: alphabet.clone(),
            symbols,
        })
    }

    pub fn from_symbols(alphabet: &Alphabet, symbols: Vec<Symbol>) -> Result<Word> {
        if let Some(&bad) = symbols.iter().find(|s| s.id() >= alphabet.len()) {
            return Err(if bad.is_delimiter() {
                Error::ReservedDelimiter
            } else {
                Error::SymbolOutOfRange(bad.id())
            });
        }
        Ok(Word {
            alphabet: alphabet.clone(),
            symbols,
        })
    }

    pub fn empty(alphabet: &Alphabet) -> Word {
        Word {
            alphabet: alphabet.clone(),
            symbols: Vec::new(),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word {
            alphabet: self.alphabet.clone(),
            symbols: self.symbols[..len].to_vec(),
        }
    }

    pub fn factor(&self, start: usize, end: usize) -> Word {
        Word {
            alphabet: self.alphabet.clone(),
            symbols: self.symbols[start..end].to_vec(),
        }
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        let other = other.reinterpret(&self.alphabet)?;
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        Ok(Word {
            alphabet: self.alphabet.clone(),
            symbols,
        })
    }

    /// The same character string over another alphabet.
    pub fn reinterpret(&self, alphabet: &Alphabet) -> Result<Word> {
        if self.alphabet.same_as(alphabet) {
            return Ok(Word {
                alphabet: alphabet.clone(),
                symbols: self.symbols.clone(),
            });
        }
        let symbols = self
            .symbols
            .iter()
            .map(|&s| alphabet.symbol(self.alphabet.char_of(s)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word {
            alphabet: alphabet.clone(),
            symbols,
        })
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.symbols.contains(&s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            write!(f, "{}", self.alphabet.char_of(s))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_follow_listed_order() {
        let sigma = Alphabet::from_chars("kant").unwrap();
        assert_eq!(sigma.symbol('k').unwrap().id(), 0);
        assert_eq!(sigma.symbol('t').unwrap().id(), 3);
        assert_eq!(sigma.node_index(Symbol::DELIMITER), 4);
        assert_eq!(sigma.char_of(Symbol::DELIMITER), '$');
    }

    #[test]
    fn rejects_bad_alphabets() {
        assert_eq!(
            Alphabet::from_chars("aba"),
            Err(Error::DuplicateSymbol('a'))
        );
        assert_eq!(Alphabet::from_chars("a$"), Err(Error::ReservedDelimiter));
        assert!(Alphabet::from_chars("").unwrap().is_empty());
    }

    #[test]
    fn synthetic_uses_digits_first() {
        let sigma = Alphabet::synthetic(12).unwrap();
        assert_eq!(sigma.as_string(), "0123456789ab");
        assert!(Alphabet::synthetic(63).is_err());
    }

    #[test]
    fn words_reject_foreign_symbols() {
        let sigma = Alphabet::from_chars("ab").unwrap();
        assert_eq!(Word::parse(&sigma, "abc"), Err(Error::UnknownSymbol('c')));
        assert_eq!(Word::parse(&sigma, "a$"), Err(Error::UnknownSymbol('$')));
        let w = Word::parse(&sigma, "abba").unwrap();
        assert_eq!(w.to_string(), "abba");
        let wider = Alphabet::from_chars("cba").unwrap();
        let moved = w.reinterpret(&wider).unwrap();
        assert_eq!(moved.to_string(), "abba");
        assert_eq!(moved.symbols()[0].id(), 2);
    }
}
