#![allow(dead_code)]

use bigram_uniq::{Alphabet, Symbol, Word};

/// Every word of exactly `len` symbols, in lexicographic id order.
pub fn words_of_len(sigma: &Alphabet, len: usize) -> Vec<Vec<Symbol>> {
    let k = sigma.len();
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..k).map(move |s| {
                    let mut w = w.clone();
                    w.push(Symbol::new(s));
                    w
                })
            })
            .collect();
    }
    out
}

pub fn words_up_to(sigma: &Alphabet, max_len: usize) -> Vec<Vec<Symbol>> {
    (0..=max_len).flat_map(|l| words_of_len(sigma, l)).collect()
}

pub fn word(sigma: &Alphabet, syms: &[Symbol]) -> Word {
    Word::from_symbols(sigma, syms.to_vec()).unwrap()
}
