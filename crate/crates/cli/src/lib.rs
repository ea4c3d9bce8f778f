//! Command-line front end for `bigram-uniq`.
//!
//! [`run`] takes the argument vector and a reader for standard input and
//! returns the exit code with everything that would be printed, so the
//! binary is a thin wrapper and tests can drive commands directly.

pub mod bench;
pub mod document;
mod error;

use std::fmt::Write as _;
use std::io::BufRead;
use std::path::PathBuf;

use bigram_uniq::algebra::lower_bound::{lia_xie_bound, verify_lower_bound};
use bigram_uniq::algebra::{
    canonical_uniq_dfa, complement, determinize, minimize, DEFAULT_SUBSET_BUDGET,
};
use bigram_uniq::obstructions::{
    build_exact_obst_nfa, build_m_obst, k_dfa_template, m_obst_state_count, obstruction_count,
    ObstructionTriple,
};
use bigram_uniq::oracle::{
    decoding_count, decodings, is_removable, prune, prune_fixpoint, removable_nodes, Cap,
    RemovalKind,
};
use bigram_uniq::{bigram_graph, phi, Alphabet, Decider, WitnessMode, Word};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::document::AutomatonDocument;
pub use crate::error::{CliError, CliResult};

#[derive(Parser, Debug)]
#[command(name = "bigram-uniq", version)]
#[command(about = "Decide whether strings are uniquely recoverable from their bigram counts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Default)]
struct AlphabetArgs {
    /// Alphabet as a string of single-character symbols
    #[arg(long, conflicts_with = "alphabet_size")]
    alphabet: Option<String>,
    /// Synthetic alphabet of n symbols: digits, then a-z, then A-Z
    #[arg(long)]
    alphabet_size: Option<usize>,
    /// Take the alphabet from the input words (extends --alphabet if given)
    #[arg(long)]
    infer_alphabet: bool,
}

#[derive(Args, Debug, Clone, Default)]
struct InputArgs {
    /// Words to process; read from --file or stdin when absent
    words: Vec<String>,
    /// One word per line
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Summary,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, ValueEnum, PartialEq, Eq)]
enum ExportFormat {
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Builtin {
    /// Union of the obstruction automata as drawn
    MObst,
    /// Union of the exact per-triple automata
    ExactObst,
    /// Minimal DFA of uniquely decodable words
    Canonical,
    /// One obstruction automaton, chosen with --triple
    Template,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide unique decodability; exit 0 if every word is unique, 1 otherwise
    Decide {
        #[command(flatten)]
        alphabet: AlphabetArgs,
        #[command(flatten)]
        input: InputArgs,
        /// Report only the first witness
        #[arg(long)]
        first: bool,
    },
    /// List every word with the same bigram counts
    Decodings {
        #[command(flatten)]
        alphabet: AlphabetArgs,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Show removable letters and prune them
    Prune {
        #[command(flatten)]
        alphabet: AlphabetArgs,
        #[command(flatten)]
        input: InputArgs,
        /// Prune this letter only (it must be removable)
        #[arg(long)]
        node: Option<char>,
    },
    /// Build the obstruction automaton
    BuildNfa {
        #[command(flatten)]
        alphabet: AlphabetArgs,
        #[arg(long, value_enum, default_value = "summary")]
        format: Format,
        /// Use the exact per-triple automata instead of the drawn ones
        #[arg(long)]
        exact: bool,
    },
    /// Minimal DFA of the uniquely decodable words
    CanonicalDfa {
        #[command(flatten)]
        alphabet: AlphabetArgs,
        #[arg(long, value_enum, default_value = "summary")]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_SUBSET_BUDGET)]
        budget: usize,
    },
    /// Minimize an automaton document (NFAs are determinized first)
    Minimize {
        /// JSON automaton document; stdin when absent
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: ExportFormat,
        #[arg(long, default_value_t = DEFAULT_SUBSET_BUDGET)]
        budget: usize,
    },
    /// Size formulas for an alphabet size
    Stats {
        #[command(flatten)]
        alphabet: AlphabetArgs,
    },
    /// Check the distinguishing-set lower bound
    LowerBound {
        #[command(flatten)]
        alphabet: AlphabetArgs,
        #[arg(long, default_value_t = DEFAULT_SUBSET_BUDGET)]
        budget: usize,
        /// Skip building the canonical DFA
        #[arg(long)]
        no_dfa: bool,
    },
    /// Write an automaton as JSON or DOT
    Export {
        #[arg(value_enum)]
        format: ExportFormat,
        /// JSON automaton document to convert
        #[arg(long, conflicts_with = "automaton")]
        input: Option<PathBuf>,
        /// Built-in automaton to export
        #[arg(long, value_enum)]
        automaton: Option<Builtin>,
        /// Triple x,a,b for --automaton template, written as three characters
        #[arg(long)]
        triple: Option<String>,
        #[command(flatten)]
        alphabet: AlphabetArgs,
        #[arg(long, default_value_t = DEFAULT_SUBSET_BUDGET)]
        budget: usize,
    },
    /// Time the early-exit decision against a full scan for growing tails
    Bench {
        #[command(flatten)]
        alphabet: AlphabetArgs,
        /// Prefix that is not uniquely decodable; a default one is built
        #[arg(long)]
        prefix: Option<String>,
        #[arg(long, value_delimiter = ',', default_value = "0,100,1000,10000,100000")]
        tails: Vec<usize>,
        #[arg(long, default_value_t = 101)]
        repeats: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Ctx<'a> {
    stdin: &'a mut dyn BufRead,
    out: String,
}

pub fn run<I, T>(args: I, stdin: &mut dyn BufRead) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 64,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let mut ctx = Ctx {
        stdin,
        out: String::new(),
    };
    match dispatch(cli.command, &mut ctx) {
        Ok(code) => Outcome {
            code,
            stdout: ctx.out,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: ctx.out,
            stderr: format!("error: {}\n", e),
        },
    }
}

fn dispatch(command: Command, ctx: &mut Ctx) -> CliResult<i32> {
    match command {
        Command::Decide {
            alphabet,
            input,
            first,
        } => decide(ctx, &alphabet, &input, first),
        Command::Decodings {
            alphabet,
            input,
            limit,
        } => list_decodings(ctx, &alphabet, &input, limit),
        Command::Prune {
            alphabet,
            input,
            node,
        } => prune_cmd(ctx, &alphabet, &input, node),
        Command::BuildNfa {
            alphabet,
            format,
            exact,
        } => {
            let sigma = fixed_alphabet(&alphabet)?;
            let nfa = if exact {
                build_exact_obst_nfa(&sigma)
            } else {
                build_m_obst(&sigma)
            };
            let doc = AutomatonDocument::from_nfa(&nfa);
            match format {
                Format::Summary => {
                    let _ = writeln!(ctx.out, "states {}", doc.states);
                    let _ = writeln!(ctx.out, "starts {}", doc.starts.len());
                    let _ = writeln!(ctx.out, "finals {}", doc.finals.len());
                    let _ = writeln!(ctx.out, "transitions {}", doc.transitions.len());
                }
                Format::Json => ctx.out.push_str(&(doc.to_json() + "\n")),
                Format::Dot => ctx.out.push_str(&doc.to_dot()),
            }
            Ok(0)
        }
        Command::CanonicalDfa {
            alphabet,
            format,
            budget,
        } => {
            let sigma = fixed_alphabet(&alphabet)?;
            let subsets = determinize(&build_m_obst(&sigma), budget)?;
            let d = minimize(&complement(&subsets));
            match format {
                Format::Summary => {
                    let _ = writeln!(ctx.out, "states {}", d.state_count());
                    let _ = writeln!(ctx.out, "trim-states {}", d.trim_state_count());
                    let _ = writeln!(ctx.out, "subsets {}", subsets.state_count());
                }
                Format::Json => ctx
                    .out
                    .push_str(&(AutomatonDocument::from_dfa(&d).to_json() + "\n")),
                Format::Dot => ctx.out.push_str(&AutomatonDocument::from_dfa(&d).to_dot()),
            }
            Ok(0)
        }
        Command::Minimize {
            input,
            format,
            budget,
        } => {
            let doc = AutomatonDocument::parse(&read_text(ctx, input.as_ref())?)?;
            let d = match doc.kind {
                document::Kind::Dfa => doc.to_dfa()?,
                document::Kind::Nfa => determinize(&doc.to_nfa()?, budget)?,
            };
            emit(ctx, &AutomatonDocument::from_dfa(&minimize(&d)), format);
            Ok(0)
        }
        Command::Stats { alphabet } => {
            let n = fixed_alphabet(&alphabet)?.len();
            let _ = writeln!(ctx.out, "alphabet-size {}", n);
            let _ = writeln!(ctx.out, "obstruction-languages {}", obstruction_count(n));
            let _ = writeln!(ctx.out, "m-obst-states {}", m_obst_state_count(n));
            match lia_xie_bound(n) {
                Ok(b) => {
                    let _ = writeln!(ctx.out, "lia-xie-bound {}", b);
                }
                Err(_) => ctx.out.push_str("lia-xie-bound overflow\n"),
            }
            let lower = if n == 0 { 1 } else { 1u128 << (n - 1) };
            let _ = writeln!(ctx.out, "lower-bound {}", lower);
            Ok(0)
        }
        Command::LowerBound {
            alphabet,
            budget,
            no_dfa,
        } => lower_bound_cmd(ctx, &alphabet, budget, no_dfa),
        Command::Export {
            format,
            input,
            automaton,
            triple,
            alphabet,
            budget,
        } => {
            let doc = match (input, automaton) {
                (_, Some(b)) => builtin(&alphabet, b, triple.as_deref(), budget)?,
                (path, None) => AutomatonDocument::parse(&read_text(ctx, path.as_ref())?)?,
            };
            emit(ctx, &doc, format);
            Ok(0)
        }
        Command::Bench {
            alphabet,
            prefix,
            tails,
            repeats,
            seed,
        } => bench_cmd(ctx, &alphabet, prefix, &tails, repeats, seed),
    }
}

fn emit(ctx: &mut Ctx, doc: &AutomatonDocument, format: ExportFormat) {
    match format {
        ExportFormat::Json => ctx.out.push_str(&(doc.to_json() + "\n")),
        ExportFormat::Dot => ctx.out.push_str(&doc.to_dot()),
    }
}

fn read_text(ctx: &mut Ctx, path: Option<&PathBuf>) -> CliResult<String> {
    match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {}", p.display(), e))),
        None => {
            let mut s = String::new();
            ctx.stdin
                .read_to_string(&mut s)
                .map_err(|e| CliError::Input(format!("cannot read stdin: {}", e)))?;
            Ok(s)
        }
    }
}

/// Alphabet for commands that do not read words.
fn fixed_alphabet(args: &AlphabetArgs) -> CliResult<Alphabet> {
    if args.infer_alphabet {
        return Err(CliError::Usage(
            "--infer-alphabet needs input words; use --alphabet or --alphabet-size".into(),
        ));
    }
    match (&args.alphabet, args.alphabet_size) {
        (Some(chars), None) => Ok(Alphabet::from_chars(chars).map_err(alphabet_usage)?),
        (None, Some(n)) => Ok(Alphabet::synthetic(n)?),
        _ => Err(CliError::Usage(
            "give the alphabet with --alphabet or --alphabet-size".into(),
        )),
    }
}

fn alphabet_usage(e: bigram_uniq::Error) -> CliError {
    CliError::Usage(format!("bad --alphabet: {}", e))
}

/// Reads the input words (argv, then --file, then stdin) with their line
/// numbers, skipping blank lines.
fn read_words(ctx: &mut Ctx, input: &InputArgs) -> CliResult<Vec<(usize, String)>> {
    if !input.words.is_empty() {
        if input.file.is_some() {
            return Err(CliError::Usage(
                "give words either inline or with --file".into(),
            ));
        }
        return Ok(input
            .words
            .iter()
            .enumerate()
            .map(|(i, w)| (i + 1, w.clone()))
            .collect());
    }
    let text = read_text(ctx, input.file.as_ref())?;
    Ok(text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r').to_string()))
        .filter(|(_, l)| !l.is_empty())
        .collect())
}

fn word_alphabet(args: &AlphabetArgs, words: &[(usize, String)]) -> CliResult<Alphabet> {
    if !args.infer_alphabet {
        return fixed_alphabet(args);
    }
    let mut chars: Vec<char> = match (&args.alphabet, args.alphabet_size) {
        (Some(s), _) => s.chars().collect(),
        (None, Some(n)) => Alphabet::synthetic(n)?.chars().to_vec(),
        (None, None) => Vec::new(),
    };
    let mut extra: Vec<char> = words
        .iter()
        .flat_map(|(_, w)| w.chars())
        .filter(|c| !chars.contains(c))
        .collect();
    extra.sort_unstable();
    extra.dedup();
    chars.extend(extra);
    Alphabet::new(chars).map_err(|e| CliError::Input(e.to_string()))
}

fn parse_words(sigma: &Alphabet, words: &[(usize, String)]) -> CliResult<Vec<Word>> {
    words
        .iter()
        .map(|(line, w)| {
            Word::parse(sigma, w).map_err(|e| CliError::Input(format!("word {}: {}", line, e)))
        })
        .collect()
}

fn load(ctx: &mut Ctx, alphabet: &AlphabetArgs, input: &InputArgs) -> CliResult<Vec<Word>> {
    let raw = read_words(ctx, input)?;
    let sigma = word_alphabet(alphabet, &raw)?;
    parse_words(&sigma, &raw)
}

fn load_one(ctx: &mut Ctx, alphabet: &AlphabetArgs, input: &InputArgs) -> CliResult<Word> {
    let mut words = load(ctx, alphabet, input)?;
    if words.len() != 1 {
        return Err(CliError::Usage(format!(
            "expected exactly one word, got {}",
            words.len()
        )));
    }
    Ok(words.remove(0))
}

fn decide(
    ctx: &mut Ctx,
    alphabet: &AlphabetArgs,
    input: &InputArgs,
    first: bool,
) -> CliResult<i32> {
    let words = load(ctx, alphabet, input)?;
    let Some(w0) = words.first() else {
        return Ok(0);
    };
    let decider = Decider::new(w0.alphabet());
    let mode = if first {
        WitnessMode::First
    } else {
        WitnessMode::All
    };
    let mut all_unique = true;
    for w in &words {
        let d = decider.decide(w, mode)?;
        all_unique &= d.unique;
        let line = d.render(decider.alphabet());
        if words.len() == 1 {
            let _ = writeln!(ctx.out, "{}", line);
        } else {
            let _ = writeln!(ctx.out, "{}\t{}", w, line);
        }
    }
    Ok(if all_unique { 0 } else { 1 })
}

fn list_decodings(
    ctx: &mut Ctx,
    alphabet: &AlphabetArgs,
    input: &InputArgs,
    limit: Option<usize>,
) -> CliResult<i32> {
    let w = load_one(ctx, alphabet, input)?;
    let cap = limit.map_or(Cap::Unlimited, Cap::Limit);
    let set = decodings(&phi(&w), cap);
    for u in &set.words {
        let _ = writeln!(ctx.out, "{}", u);
    }
    if set.truncated {
        let _ = writeln!(ctx.out, "... truncated after {}", set.words.len());
    }
    Ok(0)
}

fn kind_name(k: RemovalKind) -> &'static str {
    match k {
        RemovalKind::TypeI => "I",
        RemovalKind::TypeII => "II",
    }
}

fn prune_cmd(
    ctx: &mut Ctx,
    alphabet: &AlphabetArgs,
    input: &InputArgs,
    node: Option<char>,
) -> CliResult<i32> {
    let w = load_one(ctx, alphabet, input)?;
    let sigma = w.alphabet().clone();
    let removable = removable_nodes(&w);
    let listed: Vec<String> = removable
        .iter()
        .map(|&(x, k)| format!("{}({})", sigma.char_of(x), kind_name(k)))
        .collect();
    let _ = writeln!(
        ctx.out,
        "removable {}",
        if listed.is_empty() {
            "none".to_string()
        } else {
            listed.join(" ")
        }
    );
    let residue = match node {
        Some(c) => {
            let x = sigma.symbol(c)?;
            if is_removable(&bigram_graph(&w), x)?.is_none() {
                return Err(CliError::Input(format!(
                    "{:?} is not removable in {}",
                    c, w
                )));
            }
            prune(&w, x)
        }
        None => prune_fixpoint(&w),
    };
    let _ = writeln!(ctx.out, "residue {}", residue);
    let _ = writeln!(ctx.out, "decodings {}", decoding_count(&residue, 1_000_000));
    Ok(0)
}

fn lower_bound_cmd(
    ctx: &mut Ctx,
    alphabet: &AlphabetArgs,
    budget: usize,
    no_dfa: bool,
) -> CliResult<i32> {
    let n = fixed_alphabet(alphabet)?.len();
    let report = verify_lower_bound(n, (!no_dfa).then_some(budget))?;
    let words = &report.set.words;
    for p in &report.pairs {
        let how = match &p.distinction {
            Some(d) if d.constructive => format!("{} constructive", d.suffix),
            Some(d) => format!("{} search", d.suffix),
            None => "not-distinguished".to_string(),
        };
        let _ = writeln!(ctx.out, "{} {} {}", words[p.left], words[p.right], how);
    }
    let separated = report
        .pairs
        .iter()
        .filter(|p| p.distinction.is_some())
        .count();
    let _ = writeln!(ctx.out, "pairs {}/{}", separated, report.pairs.len());
    let _ = writeln!(ctx.out, "bound {}", report.bound);
    let mut ok = report.all_distinguished() && report.all_unique;
    match &report.dfa {
        None => {}
        Some(Ok((complete, trim))) => {
            let _ = writeln!(ctx.out, "canonical-dfa {} trim {}", complete, trim);
            ok &= report.dfa_meets_bound() == Some(true);
        }
        Some(Err(e)) => return Err(CliError::from(e.clone())),
    }
    Ok(if ok { 0 } else { 1 })
}

fn builtin(
    alphabet: &AlphabetArgs,
    which: Builtin,
    triple: Option<&str>,
    budget: usize,
) -> CliResult<AutomatonDocument> {
    let sigma = fixed_alphabet(alphabet)?;
    Ok(match which {
        Builtin::MObst => AutomatonDocument::from_nfa(&build_m_obst(&sigma)),
        Builtin::ExactObst => AutomatonDocument::from_nfa(&build_exact_obst_nfa(&sigma)),
        Builtin::Canonical => AutomatonDocument::from_dfa(&canonical_uniq_dfa(&sigma, budget)?),
        Builtin::Template => {
            let text = triple
                .ok_or_else(|| CliError::Usage("--automaton template needs --triple".into()))?;
            let c: Vec<char> = text.chars().filter(|&c| c != ',').collect();
            let [x, a, b] = c[..] else {
                return Err(CliError::Usage(format!("bad --triple {:?}", text)));
            };
            let t = ObstructionTriple::from_chars(x, a, b, &sigma)?;
            AutomatonDocument::from_dfa(&k_dfa_template(&t, &sigma)?)
        }
    })
}

fn bench_cmd(
    ctx: &mut Ctx,
    alphabet: &AlphabetArgs,
    prefix: Option<String>,
    tails: &[usize],
    repeats: usize,
    seed: u64,
) -> CliResult<i32> {
    let sigma = fixed_alphabet(alphabet)?;
    if sigma.len() < 2 {
        return Err(CliError::Usage("bench needs at least two symbols".into()));
    }
    let prefix = match prefix {
        Some(p) => Word::parse(&sigma, &p)?,
        None => {
            // `abaa` and `aaba` share their bigram counts
            let (a, b) = (sigma.chars()[0], sigma.chars()[1]);
            Word::parse(&sigma, &[a, b, a, a].iter().collect::<String>())?
        }
    };
    let decider = Decider::new(&sigma);
    if decider.is_unique(&prefix)? {
        return Err(CliError::Input(format!(
            "prefix {} is uniquely decodable",
            prefix
        )));
    }
    let rows = bench::measure(&decider, &prefix, tails, repeats, seed);
    let _ = writeln!(ctx.out, "tail early-exit-ns full-scan-ns consumed");
    for r in rows {
        let _ = writeln!(
            ctx.out,
            "{} {:.0} {:.0} {}",
            r.tail_len,
            r.early_exit_ns,
            r.full_scan_ns,
            r.consumed.map_or("-".to_string(), |c| c.to_string())
        );
    }
    Ok(0)
}
