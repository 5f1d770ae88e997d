//! The action model of the Schreier graph on the orbit of an eventually
//! periodic boundary word.
//!
//! Vertices are canonical finite encodings: the shortest prefix of the
//! infinite label that still records every disagreement with the boundary
//! word. Generators act by running the transducer over the encoding and
//! resolving the periodic tail through a precomputed table.

use crate::error::{Error, Result};
use crate::mealy::{parse_word, render_word, GeneratorLetter, Letter, MealyMachine, Sign};
use rayon::prelude::*;
use std::collections::HashMap;
use std::fmt;

/// An eventually periodic infinite word `prefix · period^∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaSpec {
    prefix: Vec<Letter>,
    period: Vec<Letter>,
}

impl OmegaSpec {
    pub fn new(prefix: Vec<Letter>, period: Vec<Letter>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::UnsupportedOmega("empty period".into()));
        }
        if prefix.iter().chain(&period).any(|&x| x > 1) {
            return Err(Error::UnsupportedOmega("letters must be 0 or 1".into()));
        }
        Ok(OmegaSpec { prefix, period })
    }

    /// Parses `"01"` (pure period) or `"1:0"` (prefix, period).
    pub fn parse(s: &str) -> Result<Self> {
        match s.split_once(':') {
            Some((p, q)) => OmegaSpec::new(parse_word(p)?, parse_word(q)?),
            None => OmegaSpec::new(Vec::new(), parse_word(s)?),
        }
    }

    /// The `n`-th letter, 1-based.
    pub fn letter(&self, n: usize) -> Letter {
        assert!(n >= 1, "positions are 1-based");
        let i = n - 1;
        if i < self.prefix.len() {
            self.prefix[i]
        } else {
            self.period[(i - self.prefix.len()) % self.period.len()]
        }
    }

    pub fn prefix(&self) -> &[Letter] {
        &self.prefix
    }

    pub fn period(&self) -> &[Letter] {
        &self.period
    }

    pub fn is_purely_periodic(&self) -> bool {
        self.prefix.is_empty()
    }

    /// The repeated letter when the word has only finitely many of the
    /// other letter.
    pub fn eventually_constant(&self) -> Option<Letter> {
        let first = self.period[0];
        self.period.iter().all(|&x| x == first).then_some(first)
    }
}

impl fmt::Display for OmegaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.prefix.is_empty() {
            write!(f, "{}:", render_word(&self.prefix))?;
        }
        write!(f, "({})^inf", render_word(&self.period))
    }
}

/// A canonical vertex encoding: empty, or ending at the last position that
/// disagrees with the boundary word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EncodedVertex(Vec<Letter>);

impl EncodedVertex {
    pub fn root() -> Self {
        EncodedVertex(Vec::new())
    }

    pub fn word(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(EncodedVertex(parse_word(s)?))
    }
}

impl fmt::Display for EncodedVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_word(&self.0))
    }
}

/// True iff `w` is a canonical encoding: empty or with last letter
/// disagreeing with omega at that position.
pub fn is_valid_encoding(w: &[Letter], omega: &OmegaSpec) -> bool {
    match w.last() {
        None => true,
        Some(&x) => x != omega.letter(w.len()),
    }
}

/// Trims `w` to the longest prefix ending at a disagreement with omega.
pub fn normalize(w: &[Letter], omega: &OmegaSpec) -> EncodedVertex {
    let last_diff = (1..=w.len())
        .rev()
        .find(|&n| w[n - 1] != omega.letter(n))
        .unwrap_or(0);
    EncodedVertex(w[..last_diff].to_vec())
}

/// The first `n` letters of the infinite word encoded by `v`.
pub fn expand(v: &EncodedVertex, omega: &OmegaSpec, n: usize) -> Vec<Letter> {
    (1..=n)
        .map(|i| if i <= v.len() { v.word()[i - 1] } else { omega.letter(i) })
        .collect()
}

/// All canonical encodings of length at most `max_len`, in
/// length-then-lexicographic order.
pub fn valid_encodings(omega: &OmegaSpec, max_len: usize) -> Vec<EncodedVertex> {
    let mut out = vec![EncodedVertex::root()];
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for len in 1..=max_len {
        let mut next = Vec::new();
        for w in &layer {
            for x in 0..2 {
                let mut w2 = w.clone();
                w2.push(x);
                next.push(w2);
            }
        }
        out.extend(
            next.iter()
                .filter(|w| w[len - 1] != omega.letter(len))
                .map(|w| EncodedVertex(w.clone())),
        );
        layer = next;
    }
    out
}

/// Precomputed behaviour of each (state, phase) pair on the periodic tail.
///
/// `fixes` means the state maps the phase-shifted tail to itself letter for
/// letter. Otherwise `image` holds the finite replacement emitted before a
/// fixing pair is reached, or is absent when the run cycles without ever
/// fixing the tail (the image is not cofinal with omega).
#[derive(Clone, Debug)]
pub struct TailTable {
    period: usize,
    entries: Vec<TailEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailEntry {
    pub fixes: bool,
    pub image: Option<TailImage>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailImage {
    pub replacement: Vec<Letter>,
    pub consumed: usize,
}

impl TailTable {
    pub fn entry(&self, state: usize, phase: usize) -> &TailEntry {
        &self.entries[state * self.period + phase]
    }

    pub fn period(&self) -> usize {
        self.period
    }

    /// Toggles one `fixes` flag; used by mutation-sensitivity checks.
    pub fn flip_fixes(&mut self, state: usize, phase: usize) {
        let e = &mut self.entries[state * self.period + phase];
        e.fixes = !e.fixes;
    }
}

/// Builds the tail table for a purely periodic omega by simulating the
/// machine over the period.
pub fn build_tail_table(m: &MealyMachine, omega: &OmegaSpec) -> Result<TailTable> {
    if !omega.is_purely_periodic() {
        return Err(Error::UnsupportedOmega(format!(
            "tail tables need a purely periodic word, got {omega}"
        )));
    }
    let period = omega.period().len();
    let n = m.num_states();
    // greatest fixpoint of: fixes(q,p) <=> output matches and fixes(next)
    let mut fixes = vec![true; n * period];
    loop {
        let mut changed = false;
        for q in 0..n {
            for p in 0..period {
                let x = omega.letter(p + 1);
                let (y, next) = m.step(q, x);
                let value = y == x && fixes[next * period + (p + 1) % period];
                if fixes[q * period + p] != value {
                    fixes[q * period + p] = value;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut entries = Vec::with_capacity(n * period);
    for q in 0..n {
        for p in 0..period {
            if fixes[q * period + p] {
                entries.push(TailEntry {
                    fixes: true,
                    image: Some(TailImage { replacement: Vec::new(), consumed: 0 }),
                });
                continue;
            }
            // simulate until a fixing pair or a cycle
            let mut replacement = Vec::new();
            let mut state = q;
            let mut phase = p;
            let mut image = None;
            for _ in 0..n * period {
                let x = omega.letter(phase + 1);
                let (y, next) = m.step(state, x);
                replacement.push(y);
                state = next;
                phase = (phase + 1) % period;
                if fixes[state * period + phase] {
                    image = Some(TailImage { replacement: replacement.clone(), consumed: replacement.len() });
                    break;
                }
            }
            entries.push(TailEntry { fixes: false, image });
        }
    }
    Ok(TailTable { period, entries })
}

/// The transducer action on canonical encodings over a fixed boundary word,
/// with tail resolution for both the machine and its inverse.
///
/// Immutable after construction; all operations are pure.
#[derive(Clone, Debug)]
pub struct ActionModel {
    machine: MealyMachine,
    inverse: MealyMachine,
    omega: OmegaSpec,
    tails: TailTable,
    inv_tails: TailTable,
    generators: Vec<usize>,
}

impl ActionModel {
    /// Requires an invertible machine and a purely periodic, non-constant
    /// period-2 omega (the constant words have merged orbits and are out of
    /// scope for edge semantics).
    pub fn new(machine: MealyMachine, omega: OmegaSpec) -> Result<Self> {
        if !omega.is_purely_periodic()
            || omega.period().len() != 2
            || omega.eventually_constant().is_some()
        {
            return Err(Error::UnsupportedOmega(format!(
                "action model needs a non-constant purely periodic period-2 word, got {omega}"
            )));
        }
        let inverse = machine.invert()?;
        let tails = build_tail_table(&machine, &omega)?;
        let inv_tails = build_tail_table(&inverse, &omega)?;
        let generators = (0..machine.num_states())
            .filter(|&q| {
                (0..machine.alphabet_size()).any(|x| {
                    let (y, next) = machine.step(q, x as Letter);
                    y as usize != x || next != q
                })
            })
            .collect();
        Ok(ActionModel { machine, inverse, omega, tails, inv_tails, generators })
    }

    /// The paper machine acting on the orbit of `(01)^∞`.
    pub fn standard() -> Self {
        ActionModel::new(MealyMachine::standard(), OmegaSpec::parse("01").unwrap())
            .expect("standard model is supported")
    }

    pub fn machine(&self) -> &MealyMachine {
        &self.machine
    }

    pub fn inverse_machine(&self) -> &MealyMachine {
        &self.inverse
    }

    pub fn omega(&self) -> &OmegaSpec {
        &self.omega
    }

    pub fn tails(&self, sign: Sign) -> &TailTable {
        match sign {
            Sign::Pos => &self.tails,
            Sign::Neg => &self.inv_tails,
        }
    }

    pub fn machine_for(&self, sign: Sign) -> &MealyMachine {
        match sign {
            Sign::Pos => &self.machine,
            Sign::Neg => &self.inverse,
        }
    }

    /// The non-identity states, in state order.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Returns a copy with one `fixes` flag of the chosen table toggled.
    /// Both the vertex action and the derived acceptors see the mutation.
    pub fn with_flipped_fixes(&self, sign: Sign, state: usize, phase: usize) -> Self {
        let mut copy = self.clone();
        match sign {
            Sign::Pos => copy.tails.flip_fixes(state, phase),
            Sign::Neg => copy.inv_tails.flip_fixes(state, phase),
        }
        copy
    }

    /// Applies a signed generator to a canonical encoding: runs the
    /// transducer over the encoding, splices the tail image, normalizes.
    pub fn act_vertex(&self, s: GeneratorLetter, v: &EncodedVertex) -> Result<EncodedVertex> {
        if !is_valid_encoding(v.word(), &self.omega) {
            return Err(Error::InvalidEncoding(v.to_string()));
        }
        let machine = self.machine_for(s.sign);
        let table = self.tails(s.sign);
        let (mut out, state) = machine.apply_word(s.state, v.word());
        let phase = v.len() % table.period();
        let entry = table.entry(state, phase);
        if !entry.fixes {
            match &entry.image {
                Some(img) => out.extend_from_slice(&img.replacement),
                None => {
                    return Err(Error::NotCofinal {
                        state: machine.state_name(state).to_string(),
                        phase,
                    })
                }
            }
        }
        Ok(normalize(&out, &self.omega))
    }

    /// The four neighbors of a vertex, in generator order `g, g⁻¹` per
    /// generator.
    pub fn neighbors(
        &self,
        v: &EncodedVertex,
    ) -> Result<Vec<(GeneratorLetter, EncodedVertex)>> {
        let mut out = Vec::with_capacity(2 * self.generators.len());
        for &g in &self.generators {
            for sign in [Sign::Pos, Sign::Neg] {
                let letter = GeneratorLetter { state: g, sign };
                out.push((letter, self.act_vertex(letter, v)?));
            }
        }
        Ok(out)
    }

    /// Exact BFS distances up to radius `r` in the undirected labelled
    /// graph. Frontier expansion is parallel; the merge is sequential in
    /// frontier order, so distances are identical across thread counts.
    pub fn ball(&self, center: &EncodedVertex, r: u32) -> Result<HashMap<EncodedVertex, u32>> {
        let mut dist = HashMap::new();
        dist.insert(center.clone(), 0u32);
        let mut frontier = vec![center.clone()];
        for d in 1..=r {
            let expanded: Vec<Vec<(GeneratorLetter, EncodedVertex)>> = frontier
                .par_iter()
                .map(|v| self.neighbors(v))
                .collect::<Result<_>>()?;
            let mut next = Vec::new();
            for (_, w) in expanded.into_iter().flatten() {
                if !dist.contains_key(&w) {
                    dist.insert(w.clone(), d);
                    next.push(w);
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        Ok(dist)
    }

    /// Positive-generator edges with both endpoints inside the given
    /// distance map.
    pub fn edges_within(
        &self,
        ball: &HashMap<EncodedVertex, u32>,
    ) -> Result<Vec<(EncodedVertex, usize, EncodedVertex)>> {
        let mut edges = Vec::new();
        for v in ball.keys() {
            for &g in &self.generators {
                let w = self.act_vertex(GeneratorLetter::pos(g), v)?;
                if ball.contains_key(&w) {
                    edges.push((v.clone(), g, w));
                }
            }
        }
        edges.sort();
        Ok(edges)
    }

    /// DOT export of the ball around a vertex, edges labelled by generator.
    pub fn ball_dot(&self, center: &EncodedVertex, r: u32) -> Result<String> {
        let ball = self.ball(center, r)?;
        let mut nodes: Vec<_> = ball.iter().collect();
        nodes.sort();
        let mut s = String::from("digraph ball {\n");
        for (v, d) in nodes {
            s.push_str(&format!("  \"{v}\" [label=\"{v} ({d})\"];\n"));
        }
        for (v, g, w) in self.edges_within(&ball)? {
            s.push_str(&format!(
                "  \"{v}\" -> \"{w}\" [label=\"{}\"];\n",
                self.machine.state_name(g)
            ));
        }
        s.push_str("}\n");
        Ok(s)
    }

    /// JSON dump of a ball distance map, sorted for determinism.
    pub fn ball_json(&self, center: &EncodedVertex, r: u32) -> Result<String> {
        let ball = self.ball(center, r)?;
        let mut entries: Vec<(String, u32)> =
            ball.into_iter().map(|(v, d)| (v.to_string(), d)).collect();
        entries.sort();
        Ok(serde_json::to_string_pretty(&entries).expect("serializable"))
    }

    /// The generator whose level-one action is the nontrivial permutation
    /// (the `a` of the line), and the one acting trivially on level one.
    pub fn line_generator(&self) -> usize {
        *self
            .generators
            .iter()
            .find(|&&q| self.machine.step(q, 0).0 != 0)
            .expect("one generator permutes level one")
    }

    pub fn chord_generator(&self) -> usize {
        *self
            .generators
            .iter()
            .find(|&&q| self.machine.step(q, 0).0 == 0)
            .expect("one generator fixes level one")
    }
}

/// Bidirectional cached walk along the orbit of the basepoint under the
/// line generator; defines the integer indexing of vertices.
pub struct ALine {
    pos: Vec<EncodedVertex>,
    neg: Vec<EncodedVertex>,
    index: HashMap<EncodedVertex, i64>,
    limit: i64,
}

impl ALine {
    pub fn new(limit: i64) -> Self {
        let root = EncodedVertex::root();
        let mut index = HashMap::new();
        index.insert(root.clone(), 0);
        ALine { pos: vec![root], neg: Vec::new(), index, limit }
    }

    fn extend_pos(&mut self, model: &ActionModel) -> Result<()> {
        let a = GeneratorLetter::pos(model.line_generator());
        let last = self.pos.last().expect("nonempty");
        let next = model.act_vertex(a, last)?;
        self.index.insert(next.clone(), self.pos.len() as i64);
        self.pos.push(next);
        Ok(())
    }

    fn extend_neg(&mut self, model: &ActionModel) -> Result<()> {
        let a_inv = GeneratorLetter::neg(model.line_generator());
        let last = self.neg.last().unwrap_or(&self.pos[0]).clone();
        let next = model.act_vertex(a_inv, &last)?;
        self.index.insert(next.clone(), -(self.neg.len() as i64) - 1);
        self.neg.push(next);
        Ok(())
    }

    /// The vertex at signed index `n` on the line through the basepoint.
    pub fn vertex_at(&mut self, model: &ActionModel, n: i64) -> Result<EncodedVertex> {
        if n.unsigned_abs() > self.limit as u64 {
            return Err(Error::RangeExceeded(self.limit));
        }
        if n >= 0 {
            while (self.pos.len() as i64) <= n {
                self.extend_pos(model)?;
            }
            Ok(self.pos[n as usize].clone())
        } else {
            while (self.neg.len() as i64) < -n {
                self.extend_neg(model)?;
            }
            Ok(self.neg[(-n - 1) as usize].clone())
        }
    }

    /// The index of a vertex, walking outward from the basepoint until the
    /// vertex is found or the range limit is exceeded.
    pub fn index_of(&mut self, model: &ActionModel, v: &EncodedVertex) -> Result<i64> {
        loop {
            if let Some(&n) = self.index.get(v) {
                return Ok(n);
            }
            let reach = self.pos.len().max(self.neg.len()) as i64;
            if reach > self.limit {
                return Err(Error::RangeExceeded(self.limit));
            }
            self.extend_pos(model)?;
            self.extend_neg(model)?;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mealy::GroupWord;

    fn model() -> ActionModel {
        ActionModel::standard()
    }

    fn v(s: &str) -> EncodedVertex {
        EncodedVertex::parse(s).unwrap()
    }

    fn gen(model: &ActionModel, name: &str) -> GeneratorLetter {
        let (base, sign) = match name.strip_suffix('\'') {
            Some(b) => (b, Sign::Neg),
            None => (name, Sign::Pos),
        };
        GeneratorLetter { state: model.machine().state(base).unwrap(), sign }
    }

    #[test]
    fn omega_letters() {
        let omega = OmegaSpec::parse("01").unwrap();
        assert_eq!(omega.letter(1), 0);
        assert_eq!(omega.letter(4), 1);
        let mixed = OmegaSpec::parse("1:0").unwrap();
        assert_eq!(mixed.letter(3), 0);
        assert!(OmegaSpec::parse("").is_err());
    }

    #[test]
    fn encoding_validity() {
        let omega = OmegaSpec::parse("01").unwrap();
        assert!(is_valid_encoding(&[], &omega));
        assert!(is_valid_encoding(v("0110").word(), &omega));
        assert!(!is_valid_encoding(v("0").word(), &omega));
    }

    #[test]
    fn expand_examples() {
        let omega = OmegaSpec::parse("01").unwrap();
        assert_eq!(expand(&EncodedVertex::root(), &omega, 4), v("0101").word());
        assert_eq!(expand(&v("1"), &omega, 4), v("1101").word());
        assert_eq!(expand(&v("0110"), &omega, 6), v("011001").word());
    }

    #[test]
    fn normalize_examples() {
        let omega = OmegaSpec::parse("01").unwrap();
        assert_eq!(normalize(v("1101").word(), &omega), v("1"));
        assert_eq!(normalize(v("0101").word(), &omega), EncodedVertex::root());
        assert_eq!(normalize(v("0110").word(), &omega), v("0110"));
    }

    #[test]
    fn tail_table_entries() {
        let m = model();
        let machine = m.machine();
        let t = m.tails(Sign::Pos);
        let e = machine.state("e").unwrap();
        let a = machine.state("a").unwrap();
        let b = machine.state("b").unwrap();
        assert!(t.entry(e, 0).fixes && t.entry(e, 1).fixes);
        let a0 = t.entry(a, 0);
        assert!(!a0.fixes);
        assert_eq!(a0.image, Some(TailImage { replacement: vec![1], consumed: 1 }));
        let b0 = t.entry(b, 0);
        assert_eq!(b0.image, Some(TailImage { replacement: vec![0, 1, 1], consumed: 3 }));
    }

    #[test]
    fn act_vertex_examples() {
        let m = model();
        let root = EncodedVertex::root();
        assert_eq!(m.act_vertex(gen(&m, "a"), &root).unwrap(), v("1"));
        assert_eq!(m.act_vertex(gen(&m, "a"), &v("1")).unwrap(), v("001"));
        assert_eq!(m.act_vertex(gen(&m, "b"), &root).unwrap(), v("011"));
        assert!(matches!(
            m.act_vertex(gen(&m, "a"), &v("0")),
            Err(Error::InvalidEncoding(_))
        ));
    }

    #[test]
    fn neighbors_of_root() {
        let m = model();
        let ns = m.neighbors(&EncodedVertex::root()).unwrap();
        let map: HashMap<String, EncodedVertex> = ns
            .iter()
            .map(|(g, w)| {
                let name = match g.sign {
                    Sign::Pos => m.machine().state_name(g.state).to_string(),
                    Sign::Neg => format!("{}'", m.machine().state_name(g.state)),
                };
                (name, w.clone())
            })
            .collect();
        assert_eq!(map["a"], v("1"));
        assert_eq!(map["a'"], v("10"));
        assert_eq!(map["b"], v("011"));
        assert_eq!(map["b'"], v("0110"));
        // pairwise distinct
        let mut ws: Vec<_> = ns.iter().map(|(_, w)| w.clone()).collect();
        ws.sort();
        ws.dedup();
        assert_eq!(ws.len(), 4);
        for w in &ws {
            assert!(is_valid_encoding(w.word(), m.omega()));
        }
    }

    #[test]
    fn balls_around_root() {
        let m = model();
        let root = EncodedVertex::root();
        assert_eq!(m.ball(&root, 0).unwrap().len(), 1);
        assert_eq!(m.ball(&root, 1).unwrap().len(), 5);
        let mut last = 0;
        for r in 0..8 {
            let size = m.ball(&root, r).unwrap().len();
            assert!(size >= last);
            last = size;
        }
    }

    #[test]
    fn inverse_round_trips() {
        let m = model();
        for vtx in valid_encodings(m.omega(), 8) {
            for name in ["a", "b"] {
                let g = gen(&m, name);
                let there = m.act_vertex(g, &vtx).unwrap();
                let back = m.act_vertex(g.inverse(), &there).unwrap();
                assert_eq!(back, vtx);
            }
        }
    }

    /// The tail-resolved action agrees with the plain transducer action on
    /// long finite prefixes.
    #[test]
    fn action_commutes_with_expansion() {
        let m = model();
        for vtx in valid_encodings(m.omega(), 6) {
            for name in ["a", "a'", "b", "b'"] {
                let g = gen(&m, name);
                let image = m.act_vertex(g, &vtx).unwrap();
                let n = image.len() + 4;
                let finite = m
                    .machine()
                    .act(&GroupWord::single(g), &expand(&vtx, m.omega(), n))
                    .unwrap();
                assert_eq!(expand(&image, m.omega(), n), finite);
            }
        }
    }

    #[test]
    fn a_line_walk() {
        let m = model();
        let mut line = ALine::new(1 << 12);
        assert_eq!(line.vertex_at(&m, 0).unwrap(), EncodedVertex::root());
        assert_eq!(line.vertex_at(&m, 2).unwrap(), v("001"));
        assert_eq!(line.vertex_at(&m, -1).unwrap(), v("10"));
        assert_eq!(line.vertex_at(&m, 4).unwrap(), v("011"));
        assert_eq!(line.index_of(&m, &v("0110")).unwrap(), -4);
        let mut tiny = ALine::new(2);
        assert!(matches!(tiny.vertex_at(&m, 5), Err(Error::RangeExceeded(_))));
    }

    /// Every encoding of length <= L appears on the line within 2^(L+1).
    #[test]
    fn a_line_transitive_at_desk_scale() {
        let m = model();
        let max_len = 7;
        let mut line = ALine::new(1 << (max_len + 1));
        let mut seen: HashMap<EncodedVertex, i64> = HashMap::new();
        for n in -(1i64 << (max_len + 1))..=(1i64 << (max_len + 1)) {
            seen.insert(line.vertex_at(&m, n).unwrap(), n);
        }
        for vtx in valid_encodings(m.omega(), max_len) {
            assert!(seen.contains_key(&vtx), "missing {vtx}");
        }
    }

    #[test]
    fn unsupported_omegas_rejected() {
        let machine = MealyMachine::standard();
        for bad in ["0", "1", "011", "1:01"] {
            let omega = OmegaSpec::parse(bad).unwrap();
            assert!(matches!(
                ActionModel::new(machine.clone(), omega),
                Err(Error::UnsupportedOmega(_))
            ));
        }
        assert!(ActionModel::new(machine, OmegaSpec::parse("10").unwrap()).is_ok());
    }
}
