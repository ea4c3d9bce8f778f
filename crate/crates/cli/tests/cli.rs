use std::collections::BTreeSet;
use std::io::Cursor;
use std::process::Command;

use bigram_uniq::algebra::lower_bound::lia_xie_bound;
use bigram_uniq::obstructions::{m_obst_state_count, obstruction_count};
use bigram_uniq_cli::document::AutomatonDocument;
use bigram_uniq_cli::{run, Outcome};

fn cli(args: &[&str]) -> Outcome {
    cli_with_stdin(args, "")
}

fn cli_with_stdin(args: &[&str], stdin: &str) -> Outcome {
    let argv = std::iter::once("bigram-uniq").chain(args.iter().copied());
    run(argv, &mut Cursor::new(stdin.as_bytes().to_vec()))
}

#[test]
fn decide_examples() {
    let o = cli(&["decide", "katana", "--alphabet", "aknt"]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.starts_with("NOT-UNIQUE witnesses=["));
    assert!(o.stdout.contains("(t,a,a)"));
    assert!(o.stdout.trim_end().ends_with("bad-prefix=6"));

    let o = cli(&["decide", "katan", "--alphabet", "aknt"]);
    assert_eq!((o.code, o.stdout.as_str()), (0, "UNIQUE\n"));
}

#[test]
fn decide_is_stable() {
    let a = cli(&["decide", "abcabcab", "--alphabet", "abc"]);
    let b = cli(&["decide", "abcabcab", "--alphabet", "abc"]);
    assert_eq!(a, b);
}

#[test]
fn decodings_of_katana() {
    let o = cli(&["decodings", "katana", "--alphabet", "aknt"]);
    assert_eq!(o.code, 0);
    let lines: BTreeSet<&str> = o.stdout.lines().collect();
    assert_eq!(lines, BTreeSet::from(["katana", "kanata"]));
}

#[test]
fn words_from_stdin_and_file() {
    let o = cli_with_stdin(&["decide", "--alphabet", "aknt"], "katan\n\nkatana\n");
    assert_eq!(o.code, 1);
    assert_eq!(o.stdout.lines().count(), 2);
    assert!(o.stdout.starts_with("katan\tUNIQUE\n"));

    let path = std::env::temp_dir().join(format!("bigram-uniq-words-{}.txt", std::process::id()));
    std::fs::write(&path, "katan\r\n\n").unwrap();
    let o = cli(&[
        "decide",
        "--alphabet",
        "aknt",
        "--file",
        path.to_str().unwrap(),
    ]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!((o.code, o.stdout.as_str()), (0, "UNIQUE\n"));
}

#[test]
fn inferred_alphabet() {
    let o = cli(&["decide", "katana", "--infer-alphabet"]);
    assert_eq!(o.code, 1);
    let o = cli(&["decide", "katan", "--alphabet", "ak", "--infer-alphabet"]);
    assert_eq!(o.code, 0);
}

#[test]
fn exit_codes() {
    assert_eq!(cli(&["frobnicate"]).code, 64);
    assert_eq!(cli(&["decide", "abc"]).code, 64);
    assert_eq!(cli(&["decide", "abc", "--alphabet", "ab"]).code, 65);
    assert_eq!(cli(&["decide", "a$b", "--alphabet", "ab"]).code, 65);
    assert_eq!(
        cli(&["decide", "--alphabet", "ab", "--file", "/nonexistent/words"]).code,
        64
    );
    assert_eq!(
        cli(&["canonical-dfa", "--alphabet-size", "3", "--budget", "5"]).code,
        69
    );
    assert_eq!(cli(&["stats", "--alphabet-size", "99"]).code, 64);
    assert_eq!(cli(&["minimize"]).code, 65);
    let help = cli(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("decide"));
}

#[test]
fn stats_match_library() {
    for n in [1usize, 2, 3, 4, 7] {
        let o = cli(&["stats", "--alphabet-size", &n.to_string()]);
        assert_eq!(o.code, 0);
        let want = format!(
            "alphabet-size {}\nobstruction-languages {}\nm-obst-states {}\nlia-xie-bound {}\nlower-bound {}\n",
            n,
            obstruction_count(n),
            m_obst_state_count(n),
            lia_xie_bound(n).unwrap(),
            1u128 << (n - 1)
        );
        assert_eq!(o.stdout, want);
    }
    let o = cli(&["stats", "--alphabet-size", "3"]);
    assert!(o.stdout.contains("m-obst-states 96\n"));
    assert!(o.stdout.contains("lia-xie-bound 8192\n"));
}

#[test]
fn build_nfa_and_canonical_sizes() {
    let o = cli(&["build-nfa", "--alphabet-size", "3"]);
    assert!(o.stdout.starts_with("states 96\nstarts 12\n"));
    let o = cli(&["canonical-dfa", "--alphabet", "abc"]);
    assert!(o.stdout.starts_with("states 84\ntrim-states 83\n"));
}

/// Expands a DOT edge label back into symbols.
fn label_symbols(label: &str, alphabet: &[String]) -> Vec<String> {
    if label == "Σ" {
        return alphabet.to_vec();
    }
    if let Some(rest) = label.strip_prefix("Σ∖{") {
        let missing: Vec<&str> = rest.trim_end_matches('}').split(',').collect();
        return alphabet
            .iter()
            .filter(|s| !missing.contains(&s.as_str()))
            .cloned()
            .collect();
    }
    label.split(',').map(str::to_string).collect()
}

fn dot_relation(dot: &str, alphabet: &[String]) -> BTreeSet<(usize, String, usize)> {
    let mut rel = BTreeSet::new();
    for line in dot.lines() {
        let line = line.trim();
        let Some((edge, rest)) = line.split_once(" [label=\"") else {
            continue;
        };
        let (p, q) = edge.split_once(" -> ").unwrap();
        let p: usize = p.trim_start_matches('q').parse().unwrap();
        let q: usize = q.trim_start_matches('q').parse().unwrap();
        let label = rest.trim_end_matches("\"];");
        for s in label_symbols(label, alphabet) {
            rel.insert((p, s, q));
        }
    }
    rel
}

fn dot_finals(dot: &str) -> BTreeSet<usize> {
    dot.lines()
        .filter(|l| l.contains("[shape=doublecircle]"))
        .map(|l| {
            l.trim()
                .trim_start_matches('q')
                .split(' ')
                .next()
                .unwrap()
                .parse()
                .unwrap()
        })
        .collect()
}

#[test]
fn json_and_dot_describe_the_same_relation() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["--automaton", "m-obst", "--alphabet-size", "3"],
        vec!["--automaton", "exact-obst", "--alphabet", "abcd"],
        vec!["--automaton", "canonical", "--alphabet", "abc"],
        vec![
            "--automaton",
            "template",
            "--triple",
            "x,a,b",
            "--alphabet",
            "abxy",
        ],
        vec![
            "--automaton",
            "template",
            "--triple",
            "xaa",
            "--alphabet",
            "ax",
        ],
    ];
    for args in cases {
        let json = cli(&[&["export", "json"][..], &args].concat());
        let dot = cli(&[&["export", "dot"][..], &args].concat());
        assert_eq!((json.code, dot.code), (0, 0), "{:?}", args);
        let doc = AutomatonDocument::parse(&json.stdout).unwrap();
        let from_json: BTreeSet<_> = doc.transitions.iter().cloned().collect();
        assert_eq!(
            dot_relation(&dot.stdout, &doc.alphabet),
            from_json,
            "{:?}",
            args
        );
        assert_eq!(
            dot_finals(&dot.stdout),
            doc.finals.iter().copied().collect()
        );
    }
}

#[test]
fn export_round_trips_through_stdin() {
    let json = cli(&[
        "export",
        "json",
        "--automaton",
        "canonical",
        "--alphabet",
        "abc",
    ])
    .stdout;
    let again = cli_with_stdin(&["export", "json"], &json);
    assert_eq!(again.stdout, json);
    let min = cli_with_stdin(&["minimize"], &json);
    assert_eq!(min.stdout, json);
}

#[test]
fn minimizing_the_obstruction_nfa() {
    let json = cli(&[
        "export",
        "json",
        "--automaton",
        "m-obst",
        "--alphabet",
        "abc",
    ])
    .stdout;
    let min = cli_with_stdin(&["minimize"], &json);
    assert_eq!(min.code, 0);
    let doc = AutomatonDocument::parse(&min.stdout).unwrap();
    // complement of the canonical DFA: same state count
    assert_eq!(doc.states, 84);
}

#[test]
fn lower_bound_command() {
    let o = cli(&["lower-bound", "--alphabet-size", "3"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("pairs 6/6\n"));
    assert!(o.stdout.contains("canonical-dfa 84 trim 83\n"));
    assert!(o.stdout.contains("02 012 11 constructive\n"));
    let o = cli(&["lower-bound", "--alphabet-size", "5", "--no-dfa"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("pairs 120/120\n"));
}

#[test]
fn prune_command() {
    let o = cli(&["prune", "katana", "--alphabet", "aknt"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("decodings 2\n"));
    let o = cli(&["prune", "axbab", "--alphabet", "abx", "--node", "x"]);
    assert_eq!(o.code, 65);
}

#[test]
fn bench_reports_every_tail() {
    let o = cli(&[
        "bench",
        "--alphabet-size",
        "3",
        "--tails",
        "0,10,100",
        "--repeats",
        "3",
    ]);
    assert_eq!(o.code, 0);
    let rows: Vec<&str> = o.stdout.lines().skip(1).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r.ends_with(" 4")));
    let o = cli(&["bench", "--alphabet-size", "3", "--prefix", "012"]);
    assert_eq!(o.code, 65);
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_bigram-uniq");
    let out = Command::new(bin)
        .args(["decide", "katana", "--alphabet", "aknt"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("NOT-UNIQUE"));
    let out = Command::new(bin)
        .args(["decide", "katan", "--alphabet", "aknt"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
