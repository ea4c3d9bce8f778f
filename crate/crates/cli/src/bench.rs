//! Timing of the early-exit simulation against a full scan.

use std::time::Instant;

use bigram_uniq::{Decider, Symbol, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub tail_len: usize,
    /// Median nanoseconds per word.
    pub early_exit_ns: f64,
    pub full_scan_ns: f64,
    /// Symbols read before the early-exit scan stopped.
    pub consumed: Option<usize>,
}

/// Random tail of `len` symbols.
pub fn random_tail(rng: &mut ChaCha8Rng, k: usize, len: usize) -> Vec<Symbol> {
    (0..len).map(|_| Symbol::new(rng.gen_range(0..k))).collect()
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let n = xs.len();
    if n % 2 == 1 {
        xs[n / 2]
    } else {
        (xs[n / 2 - 1] + xs[n / 2]) / 2.0
    }
}

fn time_ns(repeats: usize, mut f: impl FnMut() -> bool) -> f64 {
    let mut samples = Vec::with_capacity(repeats);
    for _ in 0..repeats {
        let t = Instant::now();
        std::hint::black_box(f());
        samples.push(t.elapsed().as_nanos() as f64);
    }
    median(samples)
}

/// For each tail length, times `prefix·tail` with a fresh random tail and
/// `repeats` runs per scan.
pub fn measure(
    decider: &Decider,
    prefix: &Word,
    tails: &[usize],
    repeats: usize,
    seed: u64,
) -> Vec<BenchRow> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = decider.alphabet().len().max(1);
    let repeats = repeats.max(1);
    tails
        .iter()
        .map(|&tail_len| {
            let mut syms = prefix.symbols().to_vec();
            syms.extend(random_tail(&mut rng, k, tail_len));
            let syms = std::hint::black_box(syms);
            let consumed = decider.bad_prefix_symbols(&syms);
            let early_exit_ns = time_ns(repeats, || decider.bad_prefix_symbols(&syms).is_some());
            let full_scan_ns = time_ns(repeats, || decider.full_scan_symbols(&syms));
            BenchRow {
                tail_len,
                early_exit_ns,
                full_scan_ns,
                consumed,
            }
        })
        .collect()
}
