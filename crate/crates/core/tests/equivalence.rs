//! The automaton decision agrees with exhaustive decoding.

mod common;

use bigram_uniq::algebra::{
    canonical_uniq_dfa, complement, determinize, isomorphic, minimize, DEFAULT_SUBSET_BUDGET,
};
use bigram_uniq::obstructions::{build_exact_obst_nfa, build_m_obst};
use bigram_uniq::oracle::{decoding_count, is_unique_oracle};
use bigram_uniq::{Alphabet, Decider};
use common::{word, words_up_to};

fn check_against_oracle(chars: &str, max_len: usize) {
    let sigma = Alphabet::from_chars(chars).unwrap();
    let dec = Decider::new(&sigma);
    let mut mismatches = Vec::new();
    for syms in words_up_to(&sigma, max_len) {
        let w = word(&sigma, &syms);
        let (obst, _) = dec.is_obstruction(&w).unwrap();
        if obst != (decoding_count(&w, 2) >= 2) {
            mismatches.push(w.to_string());
        }
    }
    assert!(
        mismatches.is_empty(),
        "{:?}",
        &mismatches[..mismatches.len().min(10)]
    );
}

#[test]
fn obstruction_iff_ambiguous_three_letters() {
    check_against_oracle("abx", 8);
}

#[test]
fn obstruction_iff_ambiguous_two_letters() {
    check_against_oracle("ab", 11);
}

#[test]
fn obstruction_iff_ambiguous_four_letters() {
    check_against_oracle("abcd", 6);
}

#[test]
fn canonical_dfa_matches_decider() {
    let sigma = Alphabet::from_chars("abc").unwrap();
    let d = canonical_uniq_dfa(&sigma, DEFAULT_SUBSET_BUDGET).unwrap();
    assert_eq!(d.state_count(), 84);
    let dec = Decider::new(&sigma);
    for syms in words_up_to(&sigma, 10) {
        assert_eq!(
            d.accepts_symbols(&syms),
            dec.is_unique(&word(&sigma, &syms)).unwrap()
        );
    }
}

#[test]
fn canonical_dfa_four_letters_matches_oracle() {
    let sigma = Alphabet::from_chars("abcd").unwrap();
    let d = canonical_uniq_dfa(&sigma, DEFAULT_SUBSET_BUDGET).unwrap();
    for syms in words_up_to(&sigma, 6) {
        assert_eq!(
            d.accepts_symbols(&syms),
            is_unique_oracle(&word(&sigma, &syms))
        );
    }
}

#[test]
fn figure_and_exact_unions_have_the_same_language() {
    for chars in ["ab", "abc", "abcd"] {
        let sigma = Alphabet::from_chars(chars).unwrap();
        let figure = minimize(&determinize(&build_m_obst(&sigma), DEFAULT_SUBSET_BUDGET).unwrap());
        let exact =
            minimize(&determinize(&build_exact_obst_nfa(&sigma), DEFAULT_SUBSET_BUDGET).unwrap());
        assert!(isomorphic(&figure, &exact), "{}", chars);
        assert_eq!(figure, exact);
    }
}

#[test]
fn pipeline_preserves_language() {
    for chars in ["a", "ab", "abc"] {
        let sigma = Alphabet::from_chars(chars).unwrap();
        let nfa = build_m_obst(&sigma);
        let det = determinize(&nfa, DEFAULT_SUBSET_BUDGET).unwrap();
        let neg = complement(&det);
        let min = minimize(&neg);
        for syms in words_up_to(&sigma, 8) {
            let w = word(&sigma, &syms);
            let inside = nfa.accepts(&w).unwrap();
            assert_eq!(det.accepts_symbols(&syms), inside);
            assert_eq!(neg.accepts_symbols(&syms), !inside);
            assert_eq!(min.accepts_symbols(&syms), !inside);
        }
    }
}
