//! The explicit integer-line construction of the orbit graph: vertices are
//! integers, line edges join consecutive integers, and chord families of
//! span `2^n` sit on arithmetic progressions with offsets determined by the
//! boundary word. An affine correspondence with the transducer action model
//! is discovered empirically and cross-checked edge by edge.

use crate::error::{Error, Result};
use crate::mealy::GeneratorLetter;
use crate::report::VerificationReport;
use crate::schreier::{ALine, ActionModel, OmegaSpec};
use std::collections::{BTreeSet, HashMap};

/// One chord family: all edges `(2^level·z + offset, 2^level·(z+1) + offset)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeFamily {
    pub level: u32,
    pub offset: i64,
}

impl EdgeFamily {
    pub fn span(&self) -> i64 {
        1i64 << self.level
    }

    pub fn contains_endpoint(&self, m: i64) -> bool {
        (m - self.offset).rem_euclid(self.span()) == 0
    }
}

/// The offsets `c_1 … c_n`: at each level, scan away from zero (downward
/// through nonpositive integers when the boundary letter is 0, upward
/// through positive ones when it is 1) for the first integer avoiding every
/// earlier progression.
pub fn offsets(omega: &OmegaSpec, levels: u32) -> Vec<i64> {
    let mut cs: Vec<i64> = Vec::with_capacity(levels as usize);
    for n in 1..=levels {
        let excluded = |c: i64| {
            cs.iter()
                .enumerate()
                .any(|(i, &cm)| (c - cm).rem_euclid(1i64 << (i + 1)) == 0)
        };
        let c = if omega.letter(n as usize) == 0 {
            (0..).map(|k| -k).find(|&c| !excluded(c))
        } else {
            (1..).find(|&c| !excluded(c))
        };
        cs.push(c.expect("a progression always has gaps"));
    }
    cs
}

/// A finite window of the integer model. Families are represented by their
/// offsets only; edges and family membership are computed on demand by
/// modular arithmetic.
#[derive(Clone, Debug)]
pub struct IntegerGraph {
    lo: i64,
    hi: i64,
    max_level: u32,
    offsets: Vec<i64>,
    loop_vertex: Option<i64>,
}

impl IntegerGraph {
    pub fn build(omega: &OmegaSpec, lo: i64, hi: i64, max_level: u32) -> Result<Self> {
        if lo > hi {
            return Err(Error::WindowTooSmall(format!("empty window [{lo}, {hi}]")));
        }
        if max_level == 0 || max_level > 62 || (1i64 << max_level) <= hi - lo {
            return Err(Error::WindowTooSmall(format!(
                "max level {max_level} does not dominate the window width {}",
                hi - lo
            )));
        }
        let cs = offsets(omega, max_level);
        // The residue class mod 2^n left uncovered by families 1..n: each
        // level's offset lies in the previous uncovered class and covers
        // half of it.
        let mut uncovered: i64 = 0;
        for (i, &c) in cs.iter().enumerate() {
            let modulus = 1i64 << (i + 1);
            let half = modulus >> 1;
            debug_assert_eq!(c.rem_euclid(half), uncovered.rem_euclid(half));
            if c.rem_euclid(modulus) == uncovered.rem_euclid(modulus) {
                uncovered = (uncovered + half).rem_euclid(modulus);
            } else {
                uncovered = uncovered.rem_euclid(modulus);
            }
        }
        // symmetric representative of the uncovered class
        let modulus = 1i64 << max_level;
        let mut t = uncovered.rem_euclid(modulus);
        if t > modulus / 2 {
            t -= modulus;
        }
        let loop_vertex =
            (omega.eventually_constant().is_some() && (lo..=hi).contains(&t)).then_some(t);
        Ok(IntegerGraph { lo, hi, max_level, offsets: cs, loop_vertex })
    }

    pub fn window(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    pub fn offsets(&self) -> &[i64] {
        &self.offsets
    }

    pub fn loop_vertex(&self) -> Option<i64> {
        self.loop_vertex
    }

    pub fn family(&self, level: u32) -> EdgeFamily {
        EdgeFamily { level, offset: self.offsets[(level - 1) as usize] }
    }

    /// Overrides one offset; breaks the construction on purpose for
    /// mutation checks.
    pub fn with_offset(&self, level: u32, offset: i64) -> Self {
        let mut copy = self.clone();
        copy.offsets[(level - 1) as usize] = offset;
        copy
    }

    /// The unique family level whose progression contains `m`, or `None`
    /// when every materialized level misses it.
    pub fn family_level_of(&self, m: i64) -> Option<u32> {
        (1..=self.max_level).find(|&n| self.family(n).contains_endpoint(m))
    }

    fn in_window(&self, m: i64) -> bool {
        (self.lo..=self.hi).contains(&m)
    }

    /// The chord neighbors of `m` (ignoring the window). Empty for the loop
    /// vertex; an error when the family of `m` lies beyond the materialized
    /// levels.
    pub fn family_neighbors(&self, m: i64) -> Result<Vec<i64>> {
        match self.family_level_of(m) {
            Some(n) => {
                let span = 1i64 << n;
                Ok(vec![m - span, m + span])
            }
            None if self.loop_vertex == Some(m) => Ok(Vec::new()),
            None => Err(Error::WindowTooSmall(format!(
                "family of {m} exceeds level {}",
                self.max_level
            ))),
        }
    }

    /// All neighbors of `m`, line first. An error when any neighbor leaves
    /// the window or the family of `m` is unknown: expanding such a vertex
    /// would silently truncate a ball.
    pub fn neighbors(&self, m: i64) -> Result<Vec<i64>> {
        let mut out = vec![m - 1, m + 1];
        out.extend(self.family_neighbors(m)?);
        if let Some(&bad) = out.iter().find(|&&x| !self.in_window(x)) {
            return Err(Error::WindowTooSmall(format!(
                "neighbor {bad} of {m} leaves the window [{}, {}]",
                self.lo, self.hi
            )));
        }
        Ok(out)
    }

    /// Exact BFS distances up to radius `r`; refuses to run when the ball
    /// could touch the window boundary.
    pub fn ball(&self, center: i64, r: u32) -> Result<HashMap<i64, u32>> {
        if !self.in_window(center) {
            return Err(Error::WindowTooSmall(format!("center {center} outside window")));
        }
        let mut dist = HashMap::new();
        dist.insert(center, 0u32);
        let mut frontier = vec![center];
        for d in 1..=r {
            let mut next = Vec::new();
            for &m in &frontier {
                for w in self.neighbors(m)? {
                    if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(w) {
                        e.insert(d);
                        next.push(w);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        Ok(dist)
    }

    /// Undirected edges with both endpoints in the given vertex set: line
    /// edges and chords, each tagged with its family level (0 = line).
    pub fn edges_within(&self, vertices: &BTreeSet<i64>) -> Vec<(i64, i64, u32)> {
        let mut edges = Vec::new();
        for &m in vertices {
            if vertices.contains(&(m + 1)) {
                edges.push((m, m + 1, 0));
            }
            if let Some(n) = self.family_level_of(m) {
                let span = 1i64 << n;
                if vertices.contains(&(m + span)) {
                    edges.push((m, m + span, n));
                }
            }
        }
        edges.sort();
        edges
    }

    /// DOT export of the window: line edges drawn in rank order, chords as
    /// labeled arcs.
    pub fn to_dot(&self) -> String {
        let vertices: BTreeSet<i64> = (self.lo..=self.hi).collect();
        let mut s = String::from("graph intline {\n  rankdir=LR;\n  node [shape=circle];\n");
        for &m in &vertices {
            s.push_str(&format!("  \"{m}\";\n"));
        }
        for (u, v, level) in self.edges_within(&vertices) {
            if level == 0 {
                s.push_str(&format!("  \"{u}\" -- \"{v}\";\n"));
            } else {
                s.push_str(&format!("  \"{u}\" -- \"{v}\" [label=\"{level}\", constraint=false];\n"));
            }
        }
        if let Some(t) = self.loop_vertex {
            s.push_str(&format!("  \"{t}\" -- \"{t}\" [label=\"loop\"];\n"));
        }
        s.push_str("}\n");
        s
    }

    /// CSV of `vertex,family_level` over the window; an empty level column
    /// marks a vertex beyond the materialized families.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("vertex,family_level\n");
        for m in self.lo..=self.hi {
            match self.family_level_of(m) {
                Some(n) => s.push_str(&format!("{m},{n}\n")),
                None => s.push_str(&format!("{m},\n")),
            }
        }
        s
    }
}

/// An affine map `index ↦ alpha·index + beta` identifying a-line indices
/// with integer-model labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Correspondence {
    pub alpha: i64,
    pub beta: i64,
}

impl Correspondence {
    pub fn apply(&self, index: i64) -> i64 {
        self.alpha * index + self.beta
    }
}

/// Searches `alpha ∈ {±1}`, `|beta| ≤ 8` for the unique affine map under
/// which every chord of the action model lands on a chord family of the
/// integer model. Line edges map to line edges under any affine unit map,
/// so only the chords discriminate.
pub fn find_correspondence(
    model: &ActionModel,
    graph: &IntegerGraph,
    radius: u32,
) -> Result<Correspondence> {
    let reach = 1i64 << radius.min(16);
    let b = GeneratorLetter::pos(model.chord_generator());
    let mut line = ALine::new(reach * 8);
    // chord data: (index, image index) pairs for |index| <= reach
    let mut chords = Vec::new();
    for n in -reach..=reach {
        let v = line.vertex_at(model, n)?;
        let w = model.act_vertex(b, &v)?;
        let k = line.index_of(model, &w)?;
        chords.push((n, k));
    }
    let mut survivors = Vec::new();
    for alpha in [1i64, -1] {
        for beta in -8i64..=8 {
            let c = Correspondence { alpha, beta };
            let ok = chords.iter().all(|&(n, k)| {
                let (u, v) = (c.apply(n), c.apply(k));
                match graph.family_level_of(u) {
                    Some(level) => {
                        (v - u).abs() == (1i64 << level)
                            && graph.family(level).contains_endpoint(v)
                    }
                    None => false,
                }
            });
            if ok {
                survivors.push(c);
            }
        }
    }
    match survivors.len() {
        0 => Err(Error::NoCorrespondence),
        1 => Ok(survivors[0]),
        k => Err(Error::Ambiguous(k)),
    }
}

/// Verifies that the mapped action-model ball and the integer-model ball
/// agree vertex by vertex, edge by edge, and in their ball-size sequences.
pub fn cross_check(
    model: &ActionModel,
    graph: &IntegerGraph,
    map: Correspondence,
    radius: u32,
) -> Result<VerificationReport> {
    let center = crate::schreier::EncodedVertex::root();
    let action_ball = model.ball(&center, radius)?;
    let int_ball = graph.ball(map.apply(0), radius)?;

    let mut line = ALine::new(1i64 << 24);
    let mut index_of = HashMap::new();
    for v in action_ball.keys() {
        index_of.insert(v.clone(), line.index_of(model, v)?);
    }

    // rendered facts from the action side: vertices with distances, edges
    let mut oracle: Vec<String> = Vec::new();
    for (v, &d) in &action_ball {
        oracle.push(format!("v {} {}", map.apply(index_of[v]), d));
    }
    let a = GeneratorLetter::pos(model.line_generator());
    let b = GeneratorLetter::pos(model.chord_generator());
    for v in action_ball.keys() {
        for (g, tag) in [(a, 0u32), (b, 1)] {
            let w = model.act_vertex(g, v)?;
            if action_ball.contains_key(&w) {
                let (mut x, mut y) = (map.apply(index_of[v]), map.apply(index_of[&w]));
                if x > y {
                    std::mem::swap(&mut x, &mut y);
                }
                let level = if tag == 0 { 0 } else { graph.family_level_of(x).unwrap_or(0) };
                oracle.push(format!("e {x} {y} {level}"));
            }
        }
    }
    for r in 0..=radius {
        let gamma = action_ball.values().filter(|&&d| d <= r).count();
        oracle.push(format!("g {r} {gamma}"));
    }

    // the same facts from the integer side
    let mut acceptor: Vec<String> = Vec::new();
    for (&m, &d) in &int_ball {
        acceptor.push(format!("v {m} {d}"));
    }
    let vertices: BTreeSet<i64> = int_ball.keys().copied().collect();
    for (x, y, level) in graph.edges_within(&vertices) {
        acceptor.push(format!("e {x} {y} {level}"));
    }
    for r in 0..=radius {
        let gamma = int_ball.values().filter(|&&d| d <= r).count();
        acceptor.push(format!("g {r} {gamma}"));
    }

    oracle.sort();
    oracle.dedup();
    acceptor.sort();
    acceptor.dedup();
    Ok(VerificationReport::from_sets("crosscheck", radius as usize, &oracle, &acceptor))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn omega01() -> OmegaSpec {
        OmegaSpec::parse("01").unwrap()
    }

    #[test]
    fn offsets_for_alternating_word() {
        assert_eq!(offsets(&omega01(), 4), vec![0, 1, -1, 3]);
    }

    #[test]
    fn offsets_for_constant_words() {
        assert_eq!(offsets(&OmegaSpec::parse("0").unwrap(), 2), vec![0, -1]);
        assert_eq!(offsets(&OmegaSpec::parse("1").unwrap(), 1), vec![1]);
    }

    #[test]
    fn progressions_are_disjoint_and_cover() {
        let g = IntegerGraph::build(&omega01(), -(1 << 10), 1 << 10, 12).unwrap();
        for m in -(1i64 << 10)..=(1i64 << 10) {
            let hits: Vec<u32> =
                (1..=12).filter(|&n| g.family(n).contains_endpoint(m)).collect();
            assert_eq!(hits.len(), 1, "vertex {m} hit by families {hits:?}");
        }
    }

    #[test]
    fn family_neighbors_examples() {
        let g = IntegerGraph::build(&omega01(), -64, 64, 8).unwrap();
        assert_eq!(g.family_level_of(0), Some(1));
        assert_eq!(g.family_neighbors(0).unwrap(), vec![-2, 2]);
        assert_eq!(g.family_level_of(1), Some(2));
        assert_eq!(g.family_neighbors(1).unwrap(), vec![-3, 5]);
        assert_eq!(g.loop_vertex(), None);
    }

    #[test]
    fn interior_degree_is_four() {
        // window wide enough that every chord from the probed range stays
        // inside (levels there are at most 11, spans at most 2048)
        let g = IntegerGraph::build(&omega01(), -(1 << 14), 1 << 14, 16).unwrap();
        for m in -256i64..=256 {
            assert_eq!(g.neighbors(m).unwrap().len(), 4);
        }
    }

    #[test]
    fn loop_vertex_for_constant_word() {
        let omega = OmegaSpec::parse("0").unwrap();
        let g = IntegerGraph::build(&omega, -64, 64, 8).unwrap();
        assert_eq!(g.loop_vertex(), Some(1));
        // exactly one vertex in the window has no family
        let orphans: Vec<i64> =
            (-64..=64).filter(|&m| g.family_level_of(m).is_none()).collect();
        assert_eq!(orphans, vec![1]);
        assert_eq!(g.family_neighbors(1).unwrap(), Vec::<i64>::new());
    }

    #[test]
    fn ball_sizes() {
        let g = IntegerGraph::build(&omega01(), -(1 << 12), 1 << 12, 14).unwrap();
        assert_eq!(g.ball(0, 0).unwrap().len(), 1);
        assert_eq!(g.ball(1, 1).unwrap().len(), 5);
        let mut last = 0;
        for r in 0..10 {
            let size = g.ball(0, r).unwrap().len();
            assert!(size >= last);
            last = size;
        }
    }

    #[test]
    fn window_guards_fire() {
        assert!(matches!(
            IntegerGraph::build(&omega01(), -100, 100, 7),
            Err(Error::WindowTooSmall(_))
        ));
        let g = IntegerGraph::build(&omega01(), -8, 8, 5).unwrap();
        assert!(matches!(g.ball(8, 1), Err(Error::WindowTooSmall(_))));
        assert!(g.ball(0, 1).is_ok());
        // radius 2 reaches -1, whose level-3 chord leaves the tiny window
        assert!(matches!(g.ball(0, 2), Err(Error::WindowTooSmall(_))));
    }

    #[test]
    fn correspondence_found_and_checked() {
        let model = ActionModel::standard();
        let g = IntegerGraph::build(&omega01(), -(1 << 14), 1 << 14, 16).unwrap();
        let map = find_correspondence(&model, &g, 6).unwrap();
        assert_eq!(map.alpha.abs(), 1);
        assert!(map.beta.abs() <= 8);
        // the basepoint lands on a span-4 family
        assert_eq!(g.family_level_of(map.apply(0)), Some(2));
        let report = cross_check(&model, &g, map, 10).unwrap();
        assert!(report.pass, "{report:?}");
    }

    #[test]
    fn mutated_offset_fails_cross_check() {
        let model = ActionModel::standard();
        let g = IntegerGraph::build(&omega01(), -(1 << 14), 1 << 14, 16).unwrap();
        let map = find_correspondence(&model, &g, 6).unwrap();
        let broken = g.with_offset(2, 3);
        // a truncated family structure may also abort the walk with an error
        if let Ok(report) = cross_check(&model, &broken, map, 8) {
            assert!(!report.pass);
        }
    }

    #[test]
    fn exports_are_deterministic() {
        let g = IntegerGraph::build(&omega01(), -8, 8, 5).unwrap();
        assert_eq!(g.to_dot(), g.to_dot());
        let csv = g.to_csv();
        assert!(csv.starts_with("vertex,family_level\n"));
        assert_eq!(csv.lines().count(), 18);
    }
}
