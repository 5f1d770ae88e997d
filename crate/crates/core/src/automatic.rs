//! The automatic structure: acceptors for the vertex language, the pairs
//! language, and each labelled edge relation, plus oracle verification.
//!
//! Every acceptor here is checked against a brute-force oracle that knows
//! nothing about automata: the vertex oracle filters raw binary words, the
//! edge oracle applies the transducer action vertex by vertex.

use crate::conv::{convolve, pair_alphabet, pairs_language, ConvWord, PairSym};
use crate::dfa::Dfa;
use crate::error::Result;
use crate::mealy::{GeneratorLetter, Letter, Sign};
use crate::report::VerificationReport;
use crate::schreier::{valid_encodings, ActionModel, OmegaSpec};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// The minimal acceptor of the canonical vertex encodings: the empty word
/// together with every word whose last letter disagrees with omega at its
/// position.
pub fn vertex_dfa(omega: &OmegaSpec) -> Result<Dfa<Letter>> {
    // States track the position along omega (prefix positions individually,
    // then the phase within the period) and whether the letter just read was
    // a disagreement. Position index p in 0..prefix+period, letter at the
    // *next* position is omega.letter(min shift).
    let plen = omega.prefix().len();
    let qlen = omega.period().len();
    let positions = plen + qlen;
    let advance = |p: usize| {
        if p + 1 < plen + qlen {
            p + 1
        } else {
            plen // wrap into the period
        }
    };
    let omega_at = |p: usize| {
        if p < plen {
            omega.prefix()[p]
        } else {
            omega.period()[p - plen]
        }
    };
    // state id: p * 2 + diff, plus a dedicated initial state (empty word).
    let n = positions * 2 + 1;
    let init = positions * 2;
    let mut delta = Vec::with_capacity(n);
    let mut accepting = vec![false; n];
    for (q, acc) in accepting.iter_mut().enumerate() {
        let p = if q == init { 0 } else { q / 2 };
        if q == init || q % 2 == 1 {
            *acc = true;
        }
        let row = (0..2u8)
            .map(|x| {
                let diff = (x != omega_at(p)) as usize;
                advance(p) * 2 + diff
            })
            .collect();
        delta.push(row);
    }
    // the initial state reads from position 0 like state (0, _); fix its row
    delta[init] = (0..2u8)
        .map(|x| {
            let diff = (x != omega_at(0)) as usize;
            advance(0) * 2 + diff
        })
        .collect();
    accepting[init] = true;
    Ok(Dfa::new(vec![0, 1], init, accepting, delta)?.minimize())
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum PadMode {
    Sync,
    FirstPadded,
    SecondPadded,
    Dead,
}

/// The consistency acceptor for one signed generator `s`: it accepts a
/// padded pair iff running `s` on the infinite word under the first
/// component yields the infinite word under the second.
///
/// States are (machine state, phase, padding mode); within the read window
/// each output letter is matched against the second component (or against
/// omega once a component has ended), and a word is accepted when the
/// machine state fixes the omega tail at the current phase, so agreement
/// extends beyond the window. Canonicity of the components is *not* checked
/// here; intersect with the pairs language for the edge relation proper.
pub fn action_consistency_dfa(model: &ActionModel, s: GeneratorLetter) -> Result<Dfa<PairSym>> {
    let machine = model.machine_for(s.sign);
    let tails = model.tails(s.sign);
    let period = tails.period();
    let alphabet = pair_alphabet();
    let omega = model.omega();

    type St = (usize, usize, PadMode);
    let start: St = (s.state, 0, PadMode::Sync);
    let mut ids: HashMap<St, usize> = HashMap::new();
    let mut order: Vec<St> = Vec::new();
    let mut delta: Vec<Vec<usize>> = Vec::new();
    ids.insert(start, 0);
    order.push(start);
    let mut i = 0;
    while i < order.len() {
        let (q, phase, mode) = order[i];
        let row: Vec<St> = alphabet
            .iter()
            .map(|sym| {
                let dead = (0, 0, PadMode::Dead);
                if mode == PadMode::Dead {
                    return dead;
                }
                let next_phase = (phase + 1) % period;
                match (mode, sym.first, sym.second) {
                    (PadMode::Sync, Some(x), Some(y)) => {
                        let (out, next) = machine.step(q, x);
                        if out == y {
                            (next, next_phase, PadMode::Sync)
                        } else {
                            dead
                        }
                    }
                    // second component ended: its continuation is omega
                    (PadMode::Sync | PadMode::SecondPadded, Some(x), None) => {
                        let (out, next) = machine.step(q, x);
                        if out == omega.letter(phase + 1) {
                            (next, next_phase, PadMode::SecondPadded)
                        } else {
                            dead
                        }
                    }
                    // first component ended: its continuation is omega
                    (PadMode::Sync | PadMode::FirstPadded, None, Some(y)) => {
                        let (out, next) = machine.step(q, omega.letter(phase + 1));
                        if out == y {
                            (next, next_phase, PadMode::FirstPadded)
                        } else {
                            dead
                        }
                    }
                    _ => dead,
                }
            })
            .collect();
        let row_ids = row
            .into_iter()
            .map(|st| {
                *ids.entry(st).or_insert_with(|| {
                    order.push(st);
                    order.len() - 1
                })
            })
            .collect();
        delta.push(row_ids);
        i += 1;
    }
    let accepting = order
        .iter()
        .map(|&(q, phase, mode)| mode != PadMode::Dead && tails.entry(q, phase).fixes)
        .collect();
    Ok(Dfa::new(alphabet, 0, accepting, delta)?.minimize())
}

/// The edge relation acceptor for one signed generator: convolutions
/// `⊗(u, s·u)` over canonical encodings, as the intersection of the
/// consistency acceptor with the pairs language of the vertex language.
pub fn edge_relation_dfa(model: &ActionModel, s: GeneratorLetter) -> Result<Dfa<PairSym>> {
    let vertices = vertex_dfa(model.omega())?;
    let pairs = pairs_language(&vertices)?;
    Ok(action_consistency_dfa(model, s)?.intersect(&pairs)?.minimize())
}

fn render_base(words: Vec<Vec<Letter>>) -> Vec<String> {
    let mut out: Vec<String> = words.into_iter().map(|w| crate::mealy::render_word(&w)).collect();
    out.sort();
    out.dedup();
    out
}

fn render_pairs(words: Vec<Vec<PairSym>>) -> Vec<String> {
    let mut out: Vec<String> = words.into_iter().map(|w| ConvWord(w).render()).collect();
    out.sort();
    out.dedup();
    out
}

/// Compares an arbitrary acceptor against the raw canonical-encoding
/// filter over all binary words of length at most `depth`.
pub fn verify_vertices_against(
    acceptor: &Dfa<Letter>,
    omega: &OmegaSpec,
    depth: usize,
) -> VerificationReport {
    let oracle: Vec<Vec<Letter>> =
        valid_encodings(omega, depth).into_iter().map(|v| v.word().to_vec()).collect();
    VerificationReport::from_sets(
        "vertices",
        depth,
        &render_base(oracle),
        &render_base(acceptor.enumerate(depth)),
    )
}

/// Compares the vertex acceptor against the raw filter.
pub fn verify_vertices(model: &ActionModel, depth: usize) -> Result<VerificationReport> {
    Ok(verify_vertices_against(&vertex_dfa(model.omega())?, model.omega(), depth))
}

/// Compares the pairs acceptor against all convolutions of oracle vertex
/// pairs whose convolution fits within `depth`.
pub fn verify_pairs(model: &ActionModel, depth: usize) -> Result<VerificationReport> {
    let acceptor = pairs_language(&vertex_dfa(model.omega())?)?;
    let base = valid_encodings(model.omega(), depth);
    let oracle: Vec<Vec<PairSym>> = base
        .iter()
        .flat_map(|u| base.iter().map(move |v| convolve(u.word(), v.word()).0))
        .collect();
    Ok(VerificationReport::from_sets(
        "pairs",
        depth,
        &render_pairs(oracle),
        &render_pairs(acceptor.enumerate(depth)),
    ))
}

fn generator_label(model: &ActionModel, s: GeneratorLetter) -> String {
    let name = model.machine().state_name(s.state);
    match s.sign {
        Sign::Pos => name.to_string(),
        Sign::Neg => format!("{name}'"),
    }
}

/// Checks every tail-table flag of `model` for the given sign against a
/// direct simulation: the machine run from `(q, phase)` fixes the omega
/// tail iff its outputs match the inputs for one full tour of the
/// state-phase space (the trajectory cycles after that, so agreement over
/// the tour is agreement forever). Returns rendered mismatches.
pub fn tail_table_mismatches(model: &ActionModel, sign: Sign) -> Vec<String> {
    let machine = model.machine_for(sign);
    let table = model.tails(sign);
    let omega = model.omega();
    let period = table.period();
    let tour = machine.num_states() * period + 1;
    let mut out = Vec::new();
    for q in 0..machine.num_states() {
        for phase in 0..period {
            let mut state = q;
            let mut fixes = true;
            for i in 0..tour {
                let x = omega.letter(phase + i + 1);
                let (y, next) = machine.step(state, x);
                if y != x {
                    fixes = false;
                    break;
                }
                state = next;
            }
            if table.entry(q, phase).fixes != fixes {
                out.push(format!(
                    "tail flag ({}, {phase}) is {}, simulation says {fixes}",
                    machine.state_name(q),
                    table.entry(q, phase).fixes,
                ));
            }
        }
    }
    out
}

/// Compares an edge acceptor against the vertex-by-vertex action of an
/// oracle model, after validating the oracle's tail table for the relevant
/// sign by direct simulation. The acceptor and the oracle are passed
/// separately so a mutated acceptor can be checked against an unmutated
/// action and vice versa.
pub fn verify_edges_against(
    acceptor: &Dfa<PairSym>,
    oracle: &ActionModel,
    s: GeneratorLetter,
    depth: usize,
) -> Result<VerificationReport> {
    let language = format!("edge:{}", generator_label(oracle, s));
    let table_faults = tail_table_mismatches(oracle, s.sign);
    if !table_faults.is_empty() {
        return Ok(VerificationReport {
            schema_version: crate::report::SCHEMA_VERSION,
            language,
            depth,
            agreements: 0,
            oracle_only: 0,
            acceptor_only: 0,
            mismatch_sample: table_faults.into_iter().take(10).collect(),
            pass: false,
        });
    }
    let mut expected: Vec<Vec<PairSym>> = Vec::new();
    for u in valid_encodings(oracle.omega(), depth) {
        let v = oracle.act_vertex(s, &u)?;
        let c = convolve(u.word(), v.word());
        if c.len() <= depth {
            expected.push(c.0);
        }
    }
    Ok(VerificationReport::from_sets(
        &language,
        depth,
        &render_pairs(expected),
        &render_pairs(acceptor.enumerate(depth)),
    ))
}

/// Compares the edge acceptor of `model` against its own vertex action.
pub fn verify_edges(model: &ActionModel, s: GeneratorLetter, depth: usize) -> Result<VerificationReport> {
    let acceptor = edge_relation_dfa(model, s)?;
    verify_edges_against(&acceptor, model, s, depth)
}

/// Runs every verification at one depth: vertices, pairs, and all four
/// signed edge relations.
pub fn verify_all(model: &ActionModel, depth: usize) -> Result<Vec<VerificationReport>> {
    let mut reports = vec![verify_vertices(model, depth)?, verify_pairs(model, depth)?];
    for &g in model.generators() {
        for sign in [Sign::Pos, Sign::Neg] {
            reports.push(verify_edges(model, GeneratorLetter { state: g, sign }, depth)?);
        }
    }
    Ok(reports)
}

/// Minimized state counts of every acceptor in the structure.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StructureStats {
    pub vertex_states: usize,
    pub pairs_states: usize,
    /// Labelled `g` or `g'`, in generator order.
    pub edge_states: Vec<(String, usize)>,
}

pub fn structure_stats(model: &ActionModel) -> Result<StructureStats> {
    let vertices = vertex_dfa(model.omega())?;
    let pairs = pairs_language(&vertices)?;
    let mut edge_states = Vec::new();
    for &g in model.generators() {
        for sign in [Sign::Pos, Sign::Neg] {
            let s = GeneratorLetter { state: g, sign };
            edge_states.push((
                generator_label(model, s),
                edge_relation_dfa(model, s)?.num_states(),
            ));
        }
    }
    Ok(StructureStats {
        vertex_states: vertices.minimize().num_states(),
        pairs_states: pairs.num_states(),
        edge_states,
    })
}
