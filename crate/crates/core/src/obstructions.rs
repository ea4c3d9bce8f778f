//! Obstruction languages `K(x,a,b)` and the union automaton over all of them.
//!
//! `K(x,a,b)` is the set of words containing a factor in `a·x·(Σ∖{a})*·b` and a
//! factor in `a·(Σ∖{x})*·b`. Two hard-coded automaton families are provided:
//!
//! * [`k_dfa_figure`]: the classic 9-state (a ≠ b) and 7-state (a = b) drawings,
//!   where every unlisted symbol loops. These are exact for `K(x,a,b)` only when
//!   the alphabet is `{a,b,x}`; with extra letters they accept a superset of
//!   `K(x,a,b)` that still lies inside the union of all obstruction languages.
//!   [`build_m_obst`] is assembled from them.
//! * [`k_dfa_template`]: the canonical DFA of `K(x,a,b)` over any alphabet. It
//!   coincides with the drawing on `{a,b,x}` and adds one state (a ≠ b) or two
//!   states (a = b) to track "last letter is not `a`" once other letters exist.
//!
//! Both are stored as a handful of explicit moves per role letter with "stay"
//! as the default, so their size does not depend on `|Σ|`.

use std::fmt;

use crate::algebra;
use crate::alphabet::{Alphabet, Symbol, Word};
use crate::automaton::{Dfa, Nfa, StateId};
use crate::error::{Error, Result};
use crate::regex::Regex;

/// Indices `(x, a, b)` of one obstruction language; `a = b` is allowed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObstructionTriple {
    pub x: Symbol,
    pub a: Symbol,
    pub b: Symbol,
}

impl ObstructionTriple {
    pub fn new(x: Symbol, a: Symbol, b: Symbol, alphabet: &Alphabet) -> Result<Self> {
        let t = ObstructionTriple { x, a, b };
        t.validate(alphabet)?;
        Ok(t)
    }

    /// Triple from three characters, e.g. `('x', 'a', 'b')`.
    pub fn from_chars(x: char, a: char, b: char, alphabet: &Alphabet) -> Result<Self> {
        Self::new(
            alphabet.symbol(x)?,
            alphabet.symbol(a)?,
            alphabet.symbol(b)?,
            alphabet,
        )
    }

    pub fn validate(&self, alphabet: &Alphabet) -> Result<()> {
        let n = alphabet.len();
        if [self.x, self.a, self.b].iter().any(|s| s.id() >= n) {
            return Err(Error::InvalidTriple("symbol outside the alphabet".into()));
        }
        if self.a == self.x || self.b == self.x {
            return Err(Error::InvalidTriple("a and b must differ from x".into()));
        }
        Ok(())
    }

    pub fn is_diagonal(&self) -> bool {
        self.a == self.b
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        TripleDisplay(self, alphabet)
    }

    /// Role of a symbol relative to this triple.
    #[inline]
    fn role(&self, s: Symbol) -> Role {
        if s == self.a {
            Role::A
        } else if s == self.x {
            Role::X
        } else if s == self.b {
            Role::B
        } else {
            Role::Other
        }
    }

    /// Number of alphabet letters outside `{x, a, b}`.
    fn outside_letters(&self, alphabet: &Alphabet) -> usize {
        let own = if self.is_diagonal() { 2 } else { 3 };
        alphabet.len() - own
    }
}

struct TripleDisplay<'a>(&'a ObstructionTriple, &'a Alphabet);

impl fmt::Display for TripleDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (t, a) = (self.0, self.1);
        write!(
            f,
            "({},{},{})",
            a.char_of(t.x),
            a.char_of(t.a),
            a.char_of(t.b)
        )
    }
}

/// All triples in `(x, a, b)` id order.
pub fn obstruction_triples(alphabet: &Alphabet) -> Vec<ObstructionTriple> {
    let mut out = Vec::with_capacity(obstruction_count(alphabet.len()));
    for x in alphabet.symbols() {
        for a in alphabet.symbols().filter(|&a| a != x) {
            for b in alphabet.symbols().filter(|&b| b != x) {
                out.push(ObstructionTriple { x, a, b });
            }
        }
    }
    out
}

/// `n((n-1) + (n-1)(n-2))`: how many obstruction languages exist for `|Σ| = n`.
pub fn obstruction_count(n: usize) -> usize {
    if n < 2 {
        return 0;
    }
    n * ((n - 1) + (n - 1) * (n - 2))
}

/// `n(7(n-1) + 9(n-1)(n-2))`: states of [`build_m_obst`] for `|Σ| = n`.
pub fn m_obst_state_count(n: usize) -> usize {
    if n < 2 {
        return 0;
    }
    n * (7 * (n - 1) + 9 * (n - 1) * (n - 2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Role {
    A,
    B,
    X,
    Other,
}

/// Explicit moves of a template; any (state, role) pair not listed stays put.
struct Table {
    states: usize,
    accept: StateId,
    moves: &'static [(StateId, Role, StateId)],
}

use Role::{Other, A, B, X};

// a ≠ b. States 0..=8 are the drawing's 1..=9.
const FIGURE_DISTINCT: Table = Table {
    states: 9,
    accept: 8,
    moves: &[
        (0, A, 1),
        (1, X, 2),
        (1, B, 3),
        (2, A, 1),
        (2, B, 4),
        (3, A, 5),
        (4, A, 6),
        (5, B, 3),
        (5, X, 7),
        (6, X, 4),
        (6, B, 8),
        (7, A, 5),
        (7, B, 8),
    ],
};

// Extra state 9: an `a` was seen with no `x` since, but the last letter is not `a`.
const EXACT_DISTINCT: Table = Table {
    states: 10,
    accept: 8,
    moves: &[
        (0, A, 1),
        (1, X, 2),
        (1, B, 3),
        (1, Other, 9),
        (2, A, 1),
        (2, B, 4),
        (3, A, 5),
        (4, A, 6),
        (5, B, 3),
        (5, X, 7),
        (5, Other, 3),
        (6, X, 4),
        (6, B, 8),
        (7, A, 5),
        (7, B, 8),
        (9, A, 1),
        (9, B, 3),
        (9, X, 0),
    ],
};

// a = b. States 0..=6 are the drawing's 1..=7.
const FIGURE_DIAGONAL: Table = Table {
    states: 7,
    accept: 6,
    moves: &[
        (0, A, 1),
        (1, X, 2),
        (1, A, 3),
        (2, A, 4),
        (3, X, 5),
        (4, X, 2),
        (4, A, 6),
        (5, A, 6),
    ],
};

// Extra state 7: `a` seen, no `x` since, last letter not `a`.
// Extra state 8: `a·(Σ∖{x})*·a` already seen, last letter not `a`.
const EXACT_DIAGONAL: Table = Table {
    states: 9,
    accept: 6,
    moves: &[
        (0, A, 1),
        (1, X, 2),
        (1, A, 3),
        (1, Other, 7),
        (2, A, 4),
        (3, X, 5),
        (3, Other, 8),
        (4, X, 2),
        (4, A, 6),
        (5, A, 6),
        (7, A, 3),
        (7, X, 0),
        (8, A, 3),
    ],
};

impl Table {
    fn step(&self, q: StateId, role: Role) -> StateId {
        self.moves
            .iter()
            .find(|&&(from, r, _)| from == q && r == role)
            .map_or(q, |&(_, _, to)| to)
    }

    fn to_dfa(&self, t: &ObstructionTriple, alphabet: &Alphabet, states: usize) -> Dfa {
        let k = alphabet.len();
        let mut delta = Vec::with_capacity(states * k);
        for q in 0..states {
            for s in alphabet.symbols() {
                delta.push(self.step(q, t.role(s)));
            }
        }
        let mut finals = vec![false; states];
        finals[self.accept] = true;
        Dfa::from_flat(alphabet, 0, finals, delta)
    }
}

/// The drawn automaton for `K(x,a,b)`: 9 states if `a ≠ b`, 7 if `a = b`, for
/// every alphabet.
pub fn k_dfa_figure(t: &ObstructionTriple, alphabet: &Alphabet) -> Result<Dfa> {
    t.validate(alphabet)?;
    let table = if t.is_diagonal() {
        &FIGURE_DIAGONAL
    } else {
        &FIGURE_DISTINCT
    };
    Ok(table.to_dfa(t, alphabet, table.states))
}

/// The canonical DFA of `K(x,a,b)` over `alphabet`.
///
/// Over exactly the triple's letters this is the drawn automaton (9 or 7
/// states); otherwise 10 states for `a ≠ b` and 9 for `a = b`.
pub fn k_dfa_template(t: &ObstructionTriple, alphabet: &Alphabet) -> Result<Dfa> {
    t.validate(alphabet)?;
    let (figure, exact) = if t.is_diagonal() {
        (&FIGURE_DIAGONAL, &EXACT_DIAGONAL)
    } else {
        (&FIGURE_DISTINCT, &EXACT_DISTINCT)
    };
    if t.outside_letters(alphabet) == 0 {
        Ok(figure.to_dfa(t, alphabet, figure.states))
    } else {
        Ok(exact.to_dfa(t, alphabet, exact.states))
    }
}

/// `Σ*·a·x·(Σ∖{a})*·b·Σ*`
pub fn i_regex(t: &ObstructionTriple, alphabet: &Alphabet) -> Regex {
    Regex::concat(vec![
        Regex::any(alphabet).star(),
        Regex::symbol(alphabet, t.a),
        Regex::symbol(alphabet, t.x),
        Regex::all_but(alphabet, &[t.a]).star(),
        Regex::symbol(alphabet, t.b),
        Regex::any(alphabet).star(),
    ])
}

/// `Σ*·a·(Σ∖{x})*·b·Σ*`
pub fn j_regex(t: &ObstructionTriple, alphabet: &Alphabet) -> Regex {
    Regex::concat(vec![
        Regex::any(alphabet).star(),
        Regex::symbol(alphabet, t.a),
        Regex::all_but(alphabet, &[t.x]).star(),
        Regex::symbol(alphabet, t.b),
        Regex::any(alphabet).star(),
    ])
}

/// Minimal DFA of `I(x,a,b) ∩ J(x,a,b)` built from the two regular
/// expressions by compilation, product and minimization. Independent of the
/// hard-coded tables.
pub fn k_dfa_product(t: &ObstructionTriple, alphabet: &Alphabet) -> Result<Dfa> {
    t.validate(alphabet)?;
    let i = i_regex(t, alphabet).to_dfa_over(alphabet);
    let j = j_regex(t, alphabet).to_dfa_over(alphabet);
    Ok(algebra::minimize(&algebra::intersect(&i, &j)?))
}

/// Union automaton of the drawn obstruction DFAs, one component per triple
/// in [`obstruction_triples`] order. Start states are listed in that order.
pub fn build_m_obst(alphabet: &Alphabet) -> Nfa {
    build_union(alphabet, k_dfa_figure)
}

/// Union automaton of the exact templates.
pub fn build_exact_obst_nfa(alphabet: &Alphabet) -> Nfa {
    build_union(alphabet, k_dfa_template)
}

fn build_union(
    alphabet: &Alphabet,
    component: fn(&ObstructionTriple, &Alphabet) -> Result<Dfa>,
) -> Nfa {
    let mut nfa = Nfa::new(alphabet, 0);
    for t in obstruction_triples(alphabet) {
        let dfa = component(&t, alphabet).expect("generated triples are valid");
        let offset = nfa.embed(&dfa);
        nfa.add_start(offset + dfa.start());
    }
    nfa
}

/// Direct factor scan for `a·x·(Σ∖{a})*·b` and `a·(Σ∖{x})*·b`.
pub fn scan_membership(t: &ObstructionTriple, w: &Word) -> bool {
    let s = w.symbols();
    let has_i = s.windows(2).enumerate().any(|(i, pair)| {
        pair == [t.a, t.x]
            && s[i + 2..]
                .iter()
                .take_while(|&&c| c != t.a || c == t.b)
                .any(|&c| c == t.b)
    });
    let has_j = s.iter().enumerate().any(|(i, &c)| {
        c == t.a
            && s[i + 1..]
                .iter()
                .take_while(|&&c| c != t.x)
                .any(|&c| c == t.b)
    });
    has_i && has_j
}
