mod common;

use bigram_uniq::obstructions::scan_membership;
use bigram_uniq::oracle::{
    decoding_count, is_unique_oracle, prune, prune_fixpoint, removable_nodes,
};
use bigram_uniq::{phi, Alphabet, Decider, Symbol, WitnessMode, Word};
use proptest::prelude::*;

fn word_over(chars: &'static str, max_len: usize) -> impl Strategy<Value = Word> {
    let k = chars.chars().count();
    prop::collection::vec(0..k, 0..=max_len).prop_map(move |ids| {
        let sigma = Alphabet::from_chars(chars).unwrap();
        Word::from_symbols(&sigma, ids.into_iter().map(Symbol::new).collect()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn factors_of_unique_words_are_unique(w in word_over("abcd", 14), i in 0usize..15, j in 0usize..15) {
        let dec = Decider::new(w.alphabet());
        let (lo, hi) = (i.min(j).min(w.len()), i.max(j).min(w.len()));
        if dec.is_unique(&w).unwrap() {
            prop_assert!(dec.is_unique(&w.factor(lo, hi)).unwrap());
        }
    }

    #[test]
    fn decision_matches_oracle(w in word_over("abcd", 12)) {
        let dec = Decider::new(w.alphabet());
        prop_assert_eq!(dec.is_unique(&w).unwrap(), is_unique_oracle(&w));
    }

    #[test]
    fn bad_prefix_is_least(w in word_over("abc", 14)) {
        let dec = Decider::new(w.alphabet());
        match dec.shortest_bad_prefix(&w).unwrap() {
            None => prop_assert!(is_unique_oracle(&w)),
            Some(p) => {
                prop_assert!(!is_unique_oracle(&w.prefix(p)));
                prop_assert!(is_unique_oracle(&w.prefix(p - 1)));
            }
        }
    }

    #[test]
    fn pruning_keeps_count_and_membership(w in word_over("abcd", 12)) {
        let dec = Decider::new(w.alphabet());
        let before = decoding_count(&w, 10_000);
        let obst = !dec.is_unique(&w).unwrap();
        for (x, _) in removable_nodes(&w) {
            let p = prune(&w, x);
            prop_assert_eq!(decoding_count(&p, 10_000), before);
            prop_assert_eq!(!dec.is_unique(&p).unwrap(), obst);
        }
        let residue = prune_fixpoint(&w);
        prop_assert!(removable_nodes(&residue).is_empty());
        prop_assert_eq!(decoding_count(&residue, 10_000), before);
    }

    #[test]
    fn extending_the_alphabet_keeps_decisions(w in word_over("abc", 14)) {
        let small = Decider::new(w.alphabet());
        let big_sigma = Alphabet::from_chars("abcxyz").unwrap();
        let big = Decider::new(&big_sigma);
        let wide = w.reinterpret(&big_sigma).unwrap();
        let d1 = small.decide(&w, WitnessMode::All).unwrap();
        let d2 = big.decide(&wide, WitnessMode::All).unwrap();
        prop_assert_eq!(d1.unique, d2.unique);
        prop_assert_eq!(d1.bad_prefix_len, d2.bad_prefix_len);
    }

    #[test]
    fn witnesses_are_sound_and_complete(w in word_over("abcd", 14)) {
        let dec = Decider::new(w.alphabet());
        let d = dec.decide(&w, WitnessMode::All).unwrap();
        let scanned: Vec<_> = dec
            .triples()
            .iter()
            .copied()
            .filter(|t| scan_membership(t, &w))
            .collect();
        if d.unique {
            prop_assert!(scanned.is_empty());
        } else {
            prop_assert_eq!(d.witnesses, scanned);
        }
    }

    #[test]
    fn every_decoding_shares_the_counts(w in word_over("abc", 10)) {
        let counts = phi(&w);
        let set = bigram_uniq::oracle::decodings(&counts, bigram_uniq::oracle::Cap::Unlimited);
        prop_assert!(set.words.contains(&w));
        for u in &set.words {
            prop_assert_eq!(&phi(u), &counts);
        }
    }
}

#[test]
fn oracle_is_complete_on_short_words() {
    // group every word of each length by bigram counts and compare the class
    // size with the oracle's count
    let sigma = Alphabet::from_chars("abc").unwrap();
    for len in 0..=7 {
        let mut classes = std::collections::HashMap::new();
        let words = common::words_of_len(&sigma, len);
        for syms in &words {
            let w = common::word(&sigma, syms);
            *classes.entry(phi(&w).matrix().to_vec()).or_insert(0usize) += 1;
        }
        for syms in &words {
            let w = common::word(&sigma, syms);
            let want = classes[&phi(&w).matrix().to_vec()];
            assert_eq!(decoding_count(&w, 100_000), want, "{}", w);
        }
    }
}
