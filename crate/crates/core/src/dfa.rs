//! Deterministic and nondeterministic finite acceptors over an arbitrary
//! symbol type, with the Boolean and derived operations used by the
//! regular-language constructions.
//!
//! Alphabets are first-class: every automaton carries its alphabet as an
//! ordered list, and binary operations require the operands to carry the
//! same list. Transitions are total; constructions materialize an explicit
//! dead state where needed.

use crate::error::{Error, Result};
use std::collections::{HashMap, VecDeque};
use std::fmt::Display;
use std::hash::Hash;

/// Bound required of acceptor symbols.
pub trait Symbol: Clone + Eq + Hash + Ord + Display {}
impl<T: Clone + Eq + Hash + Ord + Display> Symbol for T {}

/// A total deterministic finite acceptor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa<S> {
    alphabet: Vec<S>,
    initial: usize,
    accepting: Vec<bool>,
    /// `delta[q][i]` is the successor on the `i`-th alphabet symbol.
    delta: Vec<Vec<usize>>,
}

/// A nondeterministic acceptor, used as an intermediate form.
#[derive(Clone, Debug)]
pub struct Nfa<S> {
    pub alphabet: Vec<S>,
    pub initials: Vec<usize>,
    pub accepting: Vec<bool>,
    pub delta: Vec<Vec<Vec<usize>>>,
}

impl<S: Symbol> Dfa<S> {
    pub fn new(
        alphabet: Vec<S>,
        initial: usize,
        accepting: Vec<bool>,
        delta: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let n = accepting.len();
        let ok = initial < n
            && delta.len() == n
            && delta.iter().all(|r| r.len() == alphabet.len() && r.iter().all(|&q| q < n));
        if !ok {
            return Err(Error::AlphabetMismatch("ill-formed transition table".into()));
        }
        Ok(Dfa { alphabet, initial, accepting, delta })
    }

    pub fn alphabet(&self) -> &[S] {
        &self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.accepting.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_accepting(&self, q: usize) -> bool {
        self.accepting[q]
    }

    pub fn set_accepting(&mut self, q: usize, value: bool) {
        self.accepting[q] = value;
    }

    pub fn successor(&self, q: usize, i: usize) -> usize {
        self.delta[q][i]
    }

    fn sym_index(&self, s: &S) -> Result<usize> {
        self.alphabet
            .iter()
            .position(|t| t == s)
            .ok_or_else(|| Error::AlphabetMismatch(format!("symbol `{s}` not in alphabet")))
    }

    pub fn accepts(&self, w: &[S]) -> Result<bool> {
        let mut q = self.initial;
        for s in w {
            q = self.delta[q][self.sym_index(s)?];
        }
        Ok(self.accepting[q])
    }

    fn check_same_alphabet(&self, other: &Dfa<S>) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch("operands carry different alphabets".into()));
        }
        Ok(())
    }

    /// Reachable product construction with an arbitrary Boolean combiner.
    pub fn product(&self, other: &Dfa<S>, combine: impl Fn(bool, bool) -> bool) -> Result<Dfa<S>> {
        self.check_same_alphabet(other)?;
        let mut ids: HashMap<(usize, usize), usize> = HashMap::new();
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        ids.insert((self.initial, other.initial), 0);
        order.push((self.initial, other.initial));
        queue.push_back((self.initial, other.initial));
        let mut delta = Vec::new();
        while let Some((p, q)) = queue.pop_front() {
            let mut row = Vec::with_capacity(self.alphabet.len());
            for i in 0..self.alphabet.len() {
                let next = (self.delta[p][i], other.delta[q][i]);
                let id = *ids.entry(next).or_insert_with(|| {
                    order.push(next);
                    queue.push_back(next);
                    order.len() - 1
                });
                row.push(id);
            }
            delta.push(row);
        }
        let accepting =
            order.iter().map(|&(p, q)| combine(self.accepting[p], other.accepting[q])).collect();
        Dfa::new(self.alphabet.clone(), 0, accepting, delta)
    }

    pub fn intersect(&self, other: &Dfa<S>) -> Result<Dfa<S>> {
        self.product(other, |x, y| x && y)
    }

    pub fn union(&self, other: &Dfa<S>) -> Result<Dfa<S>> {
        self.product(other, |x, y| x || y)
    }

    pub fn complement(&self) -> Dfa<S> {
        let mut c = self.clone();
        for f in &mut c.accepting {
            *f = !*f;
        }
        c
    }

    /// True iff both acceptors define the same language.
    pub fn equivalent(&self, other: &Dfa<S>) -> Result<bool> {
        self.check_same_alphabet(other)?;
        let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
        let mut queue = VecDeque::from([(self.initial, other.initial)]);
        seen.insert((self.initial, other.initial), ());
        while let Some((p, q)) = queue.pop_front() {
            if self.accepting[p] != other.accepting[q] {
                return Ok(false);
            }
            for i in 0..self.alphabet.len() {
                let next = (self.delta[p][i], other.delta[q][i]);
                if seen.insert(next, ()).is_none() {
                    queue.push_back(next);
                }
            }
        }
        Ok(true)
    }

    fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.num_states()];
        let mut queue = VecDeque::from([self.initial]);
        seen[self.initial] = true;
        while let Some(q) = queue.pop_front() {
            for &next in &self.delta[q] {
                if !seen[next] {
                    seen[next] = true;
                    queue.push_back(next);
                }
            }
        }
        seen
    }

    /// States from which some accepting state is reachable.
    fn live(&self) -> Vec<bool> {
        let mut rev: Vec<Vec<usize>> = vec![Vec::new(); self.num_states()];
        for q in 0..self.num_states() {
            for &next in &self.delta[q] {
                rev[next].push(q);
            }
        }
        let mut live = self.accepting.clone();
        let mut queue: VecDeque<usize> =
            (0..self.num_states()).filter(|&q| live[q]).collect();
        while let Some(q) = queue.pop_front() {
            for &p in &rev[q] {
                if !live[p] {
                    live[p] = true;
                    queue.push_back(p);
                }
            }
        }
        live
    }

    pub fn is_empty(&self) -> bool {
        let reach = self.reachable();
        !(0..self.num_states()).any(|q| reach[q] && self.accepting[q])
    }

    /// Hopcroft-style partition refinement (Moore's algorithm) on the
    /// reachable part, with canonical BFS numbering of the result.
    pub fn minimize(&self) -> Dfa<S> {
        let reach = self.reachable();
        let states: Vec<usize> = (0..self.num_states()).filter(|&q| reach[q]).collect();
        let mut class = vec![usize::MAX; self.num_states()];
        for &q in &states {
            class[q] = usize::from(self.accepting[q]);
        }
        loop {
            let mut sigs: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
            let mut next_class = vec![usize::MAX; self.num_states()];
            for &q in &states {
                let sig: Vec<usize> = self.delta[q].iter().map(|&n| class[n]).collect();
                let len = sigs.len();
                let id = *sigs.entry((class[q], sig)).or_insert(len);
                next_class[q] = id;
            }
            if next_class == class {
                break;
            }
            class = next_class;
        }
        // canonical BFS renumbering of classes
        let rep_delta: HashMap<usize, &Vec<usize>> =
            states.iter().map(|&q| (class[q], &self.delta[q])).collect();
        let rep_accept: HashMap<usize, bool> =
            states.iter().map(|&q| (class[q], self.accepting[q])).collect();
        let mut renum: HashMap<usize, usize> = HashMap::new();
        let mut order = Vec::new();
        let start = class[self.initial];
        renum.insert(start, 0);
        order.push(start);
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            for i in 0..self.alphabet.len() {
                let n = class[rep_delta[&c][i]];
                if let std::collections::hash_map::Entry::Vacant(e) = renum.entry(n) {
                    e.insert(order.len());
                    order.push(n);
                    queue.push_back(n);
                }
            }
        }
        let delta = order
            .iter()
            .map(|&c| rep_delta[&c].iter().map(|&n| renum[&class[n]]).collect())
            .collect();
        let accepting = order.iter().map(|&c| rep_accept[&c]).collect();
        Dfa::new(self.alphabet.clone(), 0, accepting, delta)
            .expect("minimization preserves well-formedness")
    }

    /// All accepted words of length at most `max_len`, in
    /// length-then-lexicographic order (lexicographic in alphabet order).
    /// Only prefixes that can still reach an accepting state are expanded.
    pub fn enumerate(&self, max_len: usize) -> Vec<Vec<S>> {
        let live = self.live();
        let mut result = Vec::new();
        if !live[self.initial] {
            return result;
        }
        if self.accepting[self.initial] {
            result.push(Vec::new());
        }
        let mut frontier: Vec<(usize, Vec<S>)> = vec![(self.initial, Vec::new())];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for (q, w) in &frontier {
                for (i, s) in self.alphabet.iter().enumerate() {
                    let n = self.delta[*q][i];
                    if live[n] {
                        let mut w2 = w.clone();
                        w2.push(s.clone());
                        if self.accepting[n] {
                            result.push(w2.clone());
                        }
                        next.push((n, w2));
                    }
                }
            }
            frontier = next;
            if frontier.is_empty() {
                break;
            }
        }
        result
    }

    pub fn to_nfa(&self) -> Nfa<S> {
        Nfa {
            alphabet: self.alphabet.clone(),
            initials: vec![self.initial],
            accepting: self.accepting.clone(),
            delta: self
                .delta
                .iter()
                .map(|row| row.iter().map(|&q| vec![q]).collect())
                .collect(),
        }
    }

    /// Acceptor of the reversed language, as an NFA.
    pub fn reverse(&self) -> Nfa<S> {
        let n = self.num_states();
        let mut delta = vec![vec![Vec::new(); self.alphabet.len()]; n];
        for q in 0..n {
            for i in 0..self.alphabet.len() {
                delta[self.delta[q][i]][i].push(q);
            }
        }
        let mut accepting = vec![false; n];
        accepting[self.initial] = true;
        Nfa {
            alphabet: self.alphabet.clone(),
            initials: (0..n).filter(|&q| self.accepting[q]).collect(),
            accepting,
            delta,
        }
    }

    /// DOT rendering with double circles on accepting states and an
    /// initial-state marker.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("digraph {name} {{\n  rankdir=LR;\n  __init [shape=point];\n");
        for q in 0..self.num_states() {
            let shape = if self.accepting[q] { "doublecircle" } else { "circle" };
            s.push_str(&format!("  q{q} [shape={shape}];\n"));
        }
        s.push_str(&format!("  __init -> q{};\n", self.initial));
        for q in 0..self.num_states() {
            // group parallel edges into one label
            let mut by_target: Vec<(usize, Vec<String>)> = Vec::new();
            for (i, sym) in self.alphabet.iter().enumerate() {
                let t = self.delta[q][i];
                match by_target.iter_mut().find(|(tt, _)| *tt == t) {
                    Some((_, labels)) => labels.push(sym.to_string()),
                    None => by_target.push((t, vec![sym.to_string()])),
                }
            }
            for (t, labels) in by_target {
                s.push_str(&format!("  q{q} -> q{t} [label=\"{}\"];\n", labels.join(",")));
            }
        }
        s.push_str("}\n");
        s
    }
}

impl<S: Symbol> Nfa<S> {
    /// Subset construction. The result is total; the empty subset is the
    /// dead state.
    pub fn determinize(&self) -> Dfa<S> {
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut subsets: Vec<Vec<usize>> = Vec::new();
        let mut start: Vec<usize> = self.initials.clone();
        start.sort_unstable();
        start.dedup();
        ids.insert(start.clone(), 0);
        subsets.push(start);
        let mut queue = VecDeque::from([0usize]);
        let mut delta: Vec<Vec<usize>> = Vec::new();
        while let Some(id) = queue.pop_front() {
            let subset = subsets[id].clone();
            let mut row = Vec::with_capacity(self.alphabet.len());
            for i in 0..self.alphabet.len() {
                let mut next: Vec<usize> =
                    subset.iter().flat_map(|&q| self.delta[q][i].iter().copied()).collect();
                next.sort_unstable();
                next.dedup();
                let next_id = *ids.entry(next.clone()).or_insert_with(|| {
                    subsets.push(next);
                    queue.push_back(subsets.len() - 1);
                    subsets.len() - 1
                });
                row.push(next_id);
            }
            if delta.len() <= id {
                delta.resize(id + 1, Vec::new());
            }
            delta[id] = row;
        }
        let accepting = subsets
            .iter()
            .map(|sub| sub.iter().any(|&q| self.accepting[q]))
            .collect();
        Dfa::new(self.alphabet.clone(), 0, accepting, delta)
            .expect("subset construction is well-formed")
    }
}

/// Convenience: a DFA accepting nothing over the given alphabet.
pub fn empty_dfa<S: Symbol>(alphabet: Vec<S>) -> Dfa<S> {
    let width = alphabet.len();
    Dfa::new(alphabet, 0, vec![false], vec![vec![0; width]]).expect("well-formed")
}

/// Convenience: a DFA accepting every word over the given alphabet.
pub fn universal_dfa<S: Symbol>(alphabet: Vec<S>) -> Dfa<S> {
    let width = alphabet.len();
    Dfa::new(alphabet, 0, vec![true], vec![vec![0; width]]).expect("well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Words over {0,1} whose last letter is 1.
    fn ends_in_one() -> Dfa<u8> {
        Dfa::new(vec![0u8, 1], 0, vec![false, false, true], vec![vec![1, 2], vec![1, 2], vec![1, 2]])
            .unwrap()
    }

    /// Words with even length.
    fn even_length() -> Dfa<u8> {
        Dfa::new(vec![0u8, 1], 0, vec![true, false], vec![vec![1, 1], vec![0, 0]]).unwrap()
    }

    fn all_words(max_len: usize) -> Vec<Vec<u8>> {
        let mut out = vec![vec![]];
        let mut layer: Vec<Vec<u8>> = vec![vec![]];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for x in [0u8, 1] {
                    let mut w2 = w.clone();
                    w2.push(x);
                    next.push(w2);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    #[test]
    fn accepts_runs_the_word() {
        let d = ends_in_one();
        assert!(!d.accepts(&[]).unwrap());
        assert!(d.accepts(&[0, 1]).unwrap());
        assert!(!d.accepts(&[1, 0]).unwrap());
        assert!(d.accepts(&[2]).is_err());
    }

    #[test]
    fn boolean_operations() {
        let d = ends_in_one();
        let never = d.intersect(&d.complement()).unwrap();
        let always = d.union(&d.complement()).unwrap();
        for w in all_words(8) {
            assert!(!never.accepts(&w).unwrap());
            assert!(always.accepts(&w).unwrap());
            let both = d.intersect(&even_length()).unwrap();
            assert_eq!(
                both.accepts(&w).unwrap(),
                d.accepts(&w).unwrap() && even_length().accepts(&w).unwrap()
            );
        }
    }

    #[test]
    fn minimize_idempotent_and_equivalent() {
        let d = ends_in_one();
        let m = d.minimize();
        assert!(d.equivalent(&m).unwrap());
        assert_eq!(m.num_states(), d.minimize().minimize().num_states());
        assert_eq!(m.num_states(), 2);
        for w in all_words(10) {
            assert_eq!(d.accepts(&w).unwrap(), m.accepts(&w).unwrap());
        }
        let trivial = universal_dfa(vec![0u8, 1]);
        let bloated = trivial.union(&even_length()).unwrap();
        assert_eq!(bloated.minimize().num_states(), 1);
    }

    #[test]
    fn equivalence_checks() {
        let d = ends_in_one();
        assert!(d.equivalent(&d.minimize()).unwrap());
        assert!(!d.equivalent(&d.complement()).unwrap());
        assert!(empty_dfa(vec![0u8, 1]).is_empty());
        assert!(!d.is_empty());
    }

    #[test]
    fn determinize_round_trip() {
        let d = ends_in_one();
        assert!(d.to_nfa().determinize().equivalent(&d).unwrap());
        let empty = Nfa::<u8> {
            alphabet: vec![0, 1],
            initials: vec![],
            accepting: vec![false],
            delta: vec![vec![vec![], vec![]]],
        };
        assert!(empty.determinize().is_empty());
    }

    #[test]
    fn reverse_language() {
        let d = ends_in_one();
        let rev = d.reverse().determinize();
        for w in all_words(10) {
            let mut r = w.clone();
            r.reverse();
            assert_eq!(rev.accepts(&w).unwrap(), d.accepts(&r).unwrap());
        }
    }

    #[test]
    fn enumerate_order_and_counts() {
        let d = ends_in_one();
        let words = d.enumerate(3);
        assert_eq!(
            words,
            vec![
                vec![1],
                vec![0, 1],
                vec![1, 1],
                vec![0, 0, 1],
                vec![0, 1, 1],
                vec![1, 0, 1],
                vec![1, 1, 1],
            ]
        );
        assert!(empty_dfa(vec![0u8, 1]).enumerate(5).is_empty());
        // monotone counts
        let mut last = 0;
        for n in 0..6 {
            let count = d.enumerate(n).len();
            assert!(count >= last);
            last = count;
        }
    }

    proptest! {
        /// Product acceptance agrees with the conjunction of the operands.
        #[test]
        fn product_correctness(w in proptest::collection::vec(0u8..2, 0..10)) {
            let d1 = ends_in_one();
            let d2 = even_length();
            let i = d1.intersect(&d2).unwrap();
            prop_assert_eq!(
                i.accepts(&w).unwrap(),
                d1.accepts(&w).unwrap() && d2.accepts(&w).unwrap()
            );
        }

        /// Minimization never changes acceptance.
        #[test]
        fn minimize_preserves_language(w in proptest::collection::vec(0u8..2, 0..10)) {
            let d = ends_in_one().union(&even_length()).unwrap();
            prop_assert_eq!(d.accepts(&w).unwrap(), d.minimize().accepts(&w).unwrap());
        }
    }
}
