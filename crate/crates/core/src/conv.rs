//! Padded pairs (convolutions) of finite words and the pairs language of a
//! regular language.
//!
//! A convolution aligns two words letter by letter, padding the shorter one
//! with a reserved out-of-band symbol. The pad renders as `-`.

use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::mealy::Letter;
use std::fmt;

/// One letter of a padded pair: each component is a base letter or the pad.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairSym {
    pub first: Option<Letter>,
    pub second: Option<Letter>,
}

impl PairSym {
    pub fn new(first: Option<Letter>, second: Option<Letter>) -> Self {
        PairSym { first, second }
    }
}

fn render_component(c: Option<Letter>) -> String {
    match c {
        Some(x) => x.to_string(),
        None => "-".to_string(),
    }
}

impl fmt::Display for PairSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", render_component(self.first), render_component(self.second))
    }
}

/// A word over the padded-pair alphabet; within each component the pad
/// occurs only as a suffix and no letter is doubly padded.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConvWord(pub Vec<PairSym>);

impl ConvWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Column rendering, e.g. `0/0 1/0 -/1`. The empty word renders as `-`.
    pub fn render(&self) -> String {
        if self.0.is_empty() {
            return "-".to_string();
        }
        self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
    }
}

/// The padded-pair alphabet `(X ∪ {⋄})²` for a binary base alphabet, in a
/// fixed canonical order. The doubly-padded symbol is included; acceptors
/// route it to a dead state.
pub fn pair_alphabet() -> Vec<PairSym> {
    let comps = [Some(0), Some(1), None];
    let mut syms = Vec::with_capacity(9);
    for f in comps {
        for s in comps {
            syms.push(PairSym::new(f, s));
        }
    }
    syms
}

/// The convolution of two words: length `max(|w1|, |w2|)`, shorter
/// component padded.
pub fn convolve(w1: &[Letter], w2: &[Letter]) -> ConvWord {
    let len = w1.len().max(w2.len());
    ConvWord(
        (0..len)
            .map(|j| PairSym::new(w1.get(j).copied(), w2.get(j).copied()))
            .collect(),
    )
}

/// Inverse of [`convolve`]; rejects doubly-padded letters and interior pads.
pub fn deconvolve(c: &ConvWord) -> Result<(Vec<Letter>, Vec<Letter>)> {
    let mut first = Vec::new();
    let mut second = Vec::new();
    let mut first_padded = false;
    let mut second_padded = false;
    for (j, p) in c.0.iter().enumerate() {
        match (p.first, p.second) {
            (None, None) => {
                return Err(Error::Malformed(format!("doubly padded letter at position {j}")))
            }
            _ => {
                match p.first {
                    Some(x) if !first_padded => first.push(x),
                    Some(_) => {
                        return Err(Error::Malformed(format!(
                            "first component resumes after pad at position {j}"
                        )))
                    }
                    None => first_padded = true,
                }
                match p.second {
                    Some(y) if !second_padded => second.push(y),
                    Some(_) => {
                        return Err(Error::Malformed(format!(
                            "second component resumes after pad at position {j}"
                        )))
                    }
                    None => second_padded = true,
                }
            }
        }
    }
    Ok((first, second))
}

/// Elementwise convolution of a finite relation, deduplicated and sorted.
pub fn relation_convolution(relation: &[(Vec<Letter>, Vec<Letter>)]) -> Vec<ConvWord> {
    let mut words: Vec<ConvWord> =
        relation.iter().map(|(u, v)| convolve(u, v)).collect();
    words.sort();
    words.dedup();
    words
}

/// Lifts a DFA over the base alphabet to the pairs alphabet, constraining
/// one component to `L⋄*` and leaving the other unconstrained.
///
/// States are those of `L` plus a fresh padded state and a dead state. Base
/// transitions are duplicated over every second-component letter; accepting
/// states exit to the padded state on a padded first component.
fn component_language(l: &Dfa<Letter>, constrain_first: bool) -> Dfa<PairSym> {
    let alphabet = pair_alphabet();
    let n = l.num_states();
    let padded = n;
    let dead = n + 1;
    let mut delta = Vec::with_capacity(n + 2);
    for q in 0..n + 2 {
        let row = alphabet
            .iter()
            .map(|sym| {
                let (own, _other) = if constrain_first {
                    (sym.first, sym.second)
                } else {
                    (sym.second, sym.first)
                };
                match own {
                    Some(x) if q < n => l.successor(q, x as usize),
                    None if q < n && l.is_accepting(q) => padded,
                    None if q == padded => padded,
                    _ => dead,
                }
            })
            .collect();
        delta.push(row);
    }
    let mut accepting = (0..n).map(|q| l.is_accepting(q)).collect::<Vec<_>>();
    accepting.push(true); // padded
    accepting.push(false); // dead
    Dfa::new(alphabet, l.initial(), accepting, delta).expect("lifting is well-formed")
}

/// The well-formedness acceptor: no doubly-padded letter and no pad that
/// resumes. Four states: both live, first padded, second padded, dead.
pub fn well_formed_dfa() -> Dfa<PairSym> {
    let alphabet = pair_alphabet();
    let (live, first_pad, second_pad, dead) = (0, 1, 2, 3);
    let delta = (0..4)
        .map(|q| {
            alphabet
                .iter()
                .map(|sym| match (q, sym.first, sym.second) {
                    (_, None, None) => dead,
                    (q, Some(_), Some(_)) if q == live => live,
                    (q, None, Some(_)) if q == live || q == first_pad => first_pad,
                    (q, Some(_), None) if q == live || q == second_pad => second_pad,
                    _ => dead,
                })
                .collect()
        })
        .collect();
    Dfa::new(alphabet, live, vec![true, true, true, false], delta).expect("well-formed")
}

/// The pairs language of `L`: exactly `{⊗(u,v) : u, v ∈ L}`, built as the
/// intersection of the two component liftings with the well-formedness
/// acceptor.
pub fn pairs_language(l: &Dfa<Letter>) -> Result<Dfa<PairSym>> {
    let l1 = component_language(l, true);
    let l2 = component_language(l, false);
    Ok(l1.intersect(&l2)?.intersect(&well_formed_dfa())?.minimize())
}
