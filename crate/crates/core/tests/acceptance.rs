//! The acceptance gate: eight standalone criteria, one pass/fail line each.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use schreier_automatic::automatic::{
    edge_relation_dfa, verify_edges, verify_edges_against, verify_pairs, verify_vertices,
    verify_vertices_against, vertex_dfa,
};
use schreier_automatic::conv::convolve;
use schreier_automatic::growth::{
    action_series, diagnostics, line_control_series, tree_control_series,
};
use schreier_automatic::intline::{cross_check, find_correspondence, offsets, IntegerGraph};
use schreier_automatic::mealy::parse_word;
use schreier_automatic::schreier::{is_valid_encoding, valid_encodings};
use schreier_automatic::{
    ActionModel, EncodedVertex, GeneratorLetter, GroupWord, MealyMachine, OmegaSpec, Sign,
};

fn model() -> ActionModel {
    ActionModel::standard()
}

fn gen(m: &ActionModel, name: &str) -> GeneratorLetter {
    let (base, sign) = match name.strip_suffix('\'') {
        Some(b) => (b, Sign::Neg),
        None => (name, Sign::Pos),
    };
    GeneratorLetter { state: m.machine().state(base).unwrap(), sign }
}

fn verdict(n: u32, ok: bool, what: &str) {
    println!("criterion {n}: {} — {what}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {n} failed: {what}");
}

/// Vertex-language correctness at depth 16: 65536 agreements, none missed.
#[test]
fn criterion_1_vertex_language() {
    let report = verify_vertices(&model(), 16).unwrap();
    let ok = report.pass && report.agreements == 1 << 16;
    verdict(1, ok, "vertex acceptor equals brute-force filter at depth 16 (65536 words)");
}

/// Pairs-language correctness at depth 8.
#[test]
fn criterion_2_pairs_language() {
    let report = verify_pairs(&model(), 8).unwrap();
    verdict(2, report.pass, "pairs acceptor equals brute-force convolution set at depth 8");
}

/// Edge-relation correctness for every signed generator at depth 12, plus
/// anchored spot checks.
#[test]
fn criterion_3_edge_relations() {
    let m = model();
    let mut ok = true;
    for name in ["a", "a'", "b", "b'"] {
        let report = verify_edges(&m, gen(&m, name), 12).unwrap();
        ok &= report.pass && report.agreements > 0;
    }
    let ea = edge_relation_dfa(&m, gen(&m, "a")).unwrap();
    let eb = edge_relation_dfa(&m, gen(&m, "b")).unwrap();
    let w = |s: &str| parse_word(s).unwrap();
    ok &= ea.accepts(&convolve(&w("1"), &w("001")).0).unwrap();
    ok &= ea.accepts(&convolve(&[], &w("1")).0).unwrap();
    ok &= eb.accepts(&convolve(&[], &w("011")).0).unwrap();
    verdict(3, ok, "edge acceptors equal the transducer action at depth 12, spot checks hold");
}

/// Graph regularity on all encodings of length ≤ 12: four distinct
/// neighbors, no loops, inverse round trips.
#[test]
fn criterion_4_regularity() {
    let m = model();
    let mut ok = true;
    for v in valid_encodings(m.omega(), 12) {
        let ns = m.neighbors(&v).unwrap();
        let mut images: Vec<&EncodedVertex> = ns.iter().map(|(_, w)| w).collect();
        ok &= images.iter().all(|&w| w != &v && is_valid_encoding(w.word(), m.omega()));
        images.sort();
        images.dedup();
        ok &= images.len() == 4;
        for (g, w) in &ns {
            ok &= m.act_vertex(g.inverse(), w).unwrap() == v;
        }
    }
    verdict(4, ok, "every vertex of depth ≤ 12 has 4 distinct non-loop neighbors, inverses round-trip");
}

/// Two-model agreement: unique affine correspondence, cross-check at
/// radius 16, and the independently scanned offsets.
#[test]
fn criterion_5_integer_model() {
    let omega = OmegaSpec::parse("01").unwrap();
    let m = model();
    let mut ok = offsets(&omega, 4) == vec![0, 1, -1, 3];
    let graph = IntegerGraph::build(&omega, -(1 << 14), 1 << 14, 16).unwrap();
    let map = find_correspondence(&m, &graph, 6).unwrap();
    // discovered once, recorded as a regression constant: index -> 1 - index
    ok &= (map.alpha, map.beta) == (-1, 1);
    let report = cross_check(&m, &graph, map, 16).unwrap();
    ok &= report.pass;
    verdict(5, ok, "offsets 0,1,-1,3; unique affine map (1 - index); cross-check passes at radius 16");
}

/// Ball sizes of the action model to radius 64, recorded after the first
/// verified computation. Bit-exact regression fixture.
const GAMMA_64: [u64; 65] = [
    1, 5, 13, 24, 40, 62, 101, 149, 209, 278, 365, 463, 583, 730, 895, 1084, 1311, 1568, 1860,
    2199, 2592, 3066, 3590, 4178, 4852, 5611, 6488, 7439, 8486, 9653, 10946, 12408, 14006, 15755,
    17655, 19737, 21960, 24395, 27103, 30001, 33116, 36442, 40004, 43840, 47961, 52413, 57181,
    62251, 67583, 73264, 79311, 85797, 92703, 100054, 107915, 116266, 125084, 134417, 144252,
    154634, 165696, 177387, 189777, 202929, 216899,
];

/// Growth signatures at radius 64, pinned series, and control separation.
#[test]
fn criterion_6_growth() {
    let s = action_series(&model(), &EncodedVertex::root(), 64).unwrap();
    let mut ok = s.gamma(0) == 1 && s.gamma(1) == 5;
    ok &= s.values == GAMMA_64;
    s.check_invariants().unwrap();
    let d = diagnostics(&s).unwrap();
    ok &= d.superpolynomial && d.subexponential;
    let line = diagnostics(&line_control_series(64)).unwrap();
    ok &= !line.superpolynomial && line.subexponential;
    let tree = diagnostics(&tree_control_series(16)).unwrap();
    ok &= tree.superpolynomial && !tree.subexponential;
    verdict(6, ok, "radius-64 series matches fixture, both signatures hold, controls fail theirs");
}

/// The algebraic core: the section identity and machine-inversion round
/// trips, exhaustively at small scale.
#[test]
fn criterion_7_algebra() {
    let machine = MealyMachine::standard();
    let a = machine.state("a").unwrap();
    let b = machine.state("b").unwrap();
    let letters = [
        GeneratorLetter::pos(a),
        GeneratorLetter::neg(a),
        GeneratorLetter::pos(b),
        GeneratorLetter::neg(b),
    ];
    // all generator words of length <= 6
    let mut words = vec![GroupWord::identity()];
    let mut layer = vec![GroupWord::identity()];
    for _ in 0..6 {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &letters {
                let mut w2 = w.clone();
                w2.0.push(l);
                next.push(w2);
            }
        }
        words.extend(next.iter().cloned());
        layer = next;
    }
    let binary_words = |max: usize| -> Vec<Vec<u8>> {
        let mut out = vec![Vec::new()];
        let mut layer: Vec<Vec<u8>> = vec![Vec::new()];
        for _ in 0..max {
            let mut next = Vec::new();
            for w in &layer {
                for x in 0..2u8 {
                    let mut w2 = w.clone();
                    w2.push(x);
                    next.push(w2);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    };
    let vs = binary_words(4);
    let ws = binary_words(6);
    let mut ok = true;
    for g in &words {
        for v in &vs {
            let av = machine.act(g, v).unwrap();
            let sec = machine.section(g, v).unwrap();
            for w in &ws {
                let mut vw = v.clone();
                vw.extend_from_slice(w);
                let lhs = machine.act(g, &vw).unwrap();
                let mut rhs = av.clone();
                rhs.extend(machine.act(&sec, w).unwrap());
                if lhs != rhs {
                    ok = false;
                }
            }
        }
    }
    // inversion round trip on all words of length <= 12
    let inv = machine.invert().unwrap();
    for w in binary_words(12) {
        for q in 0..machine.num_states() {
            let (mid, _) = machine.apply_word(q, &w);
            let (back, _) = inv.apply_word(q, &mid);
            if back != w {
                ok = false;
            }
        }
    }
    verdict(7, ok, "section identity exhaustive at |g|<=6, |v|<=4, |w|<=6; inversion round-trips");
}

/// Every single-bit mutation of the vertex acceptor or a tail table is
/// caught by some verification.
#[test]
fn criterion_8_mutation_sensitivity() {
    let m = model();
    let omega = m.omega().clone();
    let mut ok = true;
    // flip each accepting bit of the minimized vertex acceptor
    let base = vertex_dfa(&omega).unwrap();
    for q in 0..base.num_states() {
        let mut mutant = base.clone();
        mutant.set_accepting(q, !mutant.is_accepting(q));
        if verify_vertices_against(&mutant, &omega, 12).pass {
            ok = false;
            println!("flipping accepting bit {q} went unnoticed");
        }
    }
    // flip each tail-table flag of either sign
    let period = m.tails(Sign::Pos).period();
    for sign in [Sign::Pos, Sign::Neg] {
        for state in 0..m.machine().num_states() {
            for phase in 0..period {
                let mutant = m.with_flipped_fixes(sign, state, phase);
                let mut caught = false;
                for name in ["a", "a'", "b", "b'"] {
                    let s = gen(&m, name);
                    let outcome = edge_relation_dfa(&mutant, s)
                        .and_then(|acc| verify_edges_against(&acc, &mutant, s, 8));
                    match outcome {
                        Ok(report) if !report.pass => caught = true,
                        Ok(_) => {}
                        Err(_) => caught = true,
                    }
                }
                if !caught {
                    ok = false;
                    println!("tail flip ({sign:?}, {state}, {phase}) went unnoticed");
                }
            }
        }
    }
    verdict(8, ok, "every single-bit acceptor or tail-table mutation fails a verification");
}
