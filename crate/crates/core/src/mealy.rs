//! Finite Mealy transducers and the group they generate.
//!
//! A machine is a letter-to-letter transducer with transition map `π` and
//! output map `λ`. Running a machine from a chosen state induces an
//! endomorphism of the tree of finite words; invertible machines induce
//! automorphisms. The composition convention is left-first: in a product
//! `gh` the letter `g` acts before `h`.

use crate::error::{Error, Result};
use std::fmt;

/// A letter of the input/output alphabet, `0..alphabet_size`.
pub type Letter = u8;

/// A deterministic letter-to-letter transducer with total transition and
/// output maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MealyMachine {
    names: Vec<String>,
    alphabet_size: usize,
    /// `delta[q][x]` is the successor state of `q` on input `x`.
    delta: Vec<Vec<usize>>,
    /// `out[q][x]` is the letter emitted by `q` on input `x`.
    out: Vec<Vec<Letter>>,
}

/// Sign of a generator: `Neg` refers to the corresponding state of the
/// inverse transducer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

/// A generator of the automaton group: a machine state together with a sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorLetter {
    pub state: usize,
    pub sign: Sign,
}

impl GeneratorLetter {
    pub fn pos(state: usize) -> Self {
        GeneratorLetter { state, sign: Sign::Pos }
    }

    pub fn neg(state: usize) -> Self {
        GeneratorLetter { state, sign: Sign::Neg }
    }

    pub fn inverse(self) -> Self {
        let sign = match self.sign {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        };
        GeneratorLetter { state: self.state, sign }
    }
}

/// An unreduced word in the signed generators. The empty word is the
/// identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GroupWord(pub Vec<GeneratorLetter>);

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord(Vec::new())
    }

    pub fn single(g: GeneratorLetter) -> Self {
        GroupWord(vec![g])
    }

    /// Parses a word like `"abA"`: a lowercase letter names a state, its
    /// uppercase form is the inverse generator.
    pub fn parse(m: &MealyMachine, s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for c in s.chars() {
            let (name, sign) = if c.is_uppercase() {
                (c.to_lowercase().to_string(), Sign::Neg)
            } else {
                (c.to_string(), Sign::Pos)
            };
            let state = m
                .state(&name)
                .ok_or_else(|| Error::InvalidEncoding(format!("unknown generator `{c}`")))?;
            letters.push(GeneratorLetter { state, sign });
        }
        Ok(GroupWord(letters))
    }

    pub fn render(&self, m: &MealyMachine) -> String {
        if self.0.is_empty() {
            return "e".to_string();
        }
        self.0
            .iter()
            .map(|g| {
                let n = m.state_name(g.state);
                match g.sign {
                    Sign::Pos => n.to_string(),
                    Sign::Neg => n.to_uppercase(),
                }
            })
            .collect()
    }
}

impl MealyMachine {
    pub fn new(
        names: Vec<String>,
        alphabet_size: usize,
        delta: Vec<Vec<usize>>,
        out: Vec<Vec<Letter>>,
    ) -> Result<Self> {
        let n = names.len();
        let ok = delta.len() == n
            && out.len() == n
            && delta.iter().all(|r| r.len() == alphabet_size && r.iter().all(|&q| q < n))
            && out
                .iter()
                .all(|r| r.len() == alphabet_size && r.iter().all(|&y| (y as usize) < alphabet_size));
        if !ok {
            return Err(Error::AlphabetMismatch(
                "transition/output maps are not total over states x alphabet".into(),
            ));
        }
        Ok(MealyMachine { names, alphabet_size, delta, out })
    }

    /// The 3-state machine over `{0,1}` with states `a`, `b`, `e` given by
    /// the wreath recursion `a = (e, a)σ`, `b = (b, a)`, `e` the identity.
    pub fn standard() -> Self {
        let a = 0;
        let b = 1;
        let e = 2;
        MealyMachine::new(
            vec!["a".into(), "b".into(), "e".into()],
            2,
            vec![
                vec![e, a], // π(a,0)=e, π(a,1)=a
                vec![b, a], // π(b,0)=b, π(b,1)=a
                vec![e, e],
            ],
            vec![
                vec![1, 0], // λ(a,0)=1, λ(a,1)=0
                vec![0, 1], // λ(b,x)=x
                vec![0, 1],
            ],
        )
        .expect("standard machine is well-formed")
    }

    /// A one-state identity machine, useful in tests.
    pub fn identity(alphabet_size: usize) -> Self {
        MealyMachine::new(
            vec!["e".into()],
            alphabet_size,
            vec![vec![0; alphabet_size]],
            vec![(0..alphabet_size as u8).collect()],
        )
        .expect("identity machine is well-formed")
    }

    pub fn num_states(&self) -> usize {
        self.names.len()
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn state(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn state_name(&self, q: usize) -> &str {
        &self.names[q]
    }

    /// One transducer step: returns `(λ(q,x), π(q,x))`.
    pub fn step(&self, q: usize, x: Letter) -> (Letter, usize) {
        (self.out[q][x as usize], self.delta[q][x as usize])
    }

    /// Runs the machine on a word: returns `(λ(q,w), π(q,w))`.
    pub fn apply_word(&self, q: usize, w: &[Letter]) -> (Vec<Letter>, usize) {
        let mut state = q;
        let mut output = Vec::with_capacity(w.len());
        for &x in w {
            let (y, next) = self.step(state, x);
            output.push(y);
            state = next;
        }
        (output, state)
    }

    /// True iff every state's output map is a bijection of the alphabet.
    pub fn is_invertible(&self) -> bool {
        self.out.iter().all(|row| {
            let mut seen = vec![false; self.alphabet_size];
            row.iter().all(|&y| !std::mem::replace(&mut seen[y as usize], true))
        })
    }

    /// The inverse transducer: state `q⁻¹` reads `λ(q,x)` and emits `x`.
    /// State indices are shared with `self`; names get a trailing prime.
    pub fn invert(&self) -> Result<MealyMachine> {
        if let Some(q) = (0..self.num_states()).find(|&q| {
            let mut seen = vec![false; self.alphabet_size];
            !self.out[q].iter().all(|&y| !std::mem::replace(&mut seen[y as usize], true))
        }) {
            return Err(Error::NotInvertible(self.names[q].clone()));
        }
        let names = self
            .names
            .iter()
            .map(|n| match n.strip_suffix('\'') {
                Some(base) => base.to_string(),
                None => format!("{n}'"),
            })
            .collect();
        let mut delta = vec![vec![0; self.alphabet_size]; self.num_states()];
        let mut out = vec![vec![0; self.alphabet_size]; self.num_states()];
        for q in 0..self.num_states() {
            for x in 0..self.alphabet_size {
                let y = self.out[q][x] as usize;
                delta[q][y] = self.delta[q][x];
                out[q][y] = x as Letter;
            }
        }
        MealyMachine::new(names, self.alphabet_size, delta, out)
    }

    fn apply_letter(
        &self,
        inverse: &Option<MealyMachine>,
        g: GeneratorLetter,
        w: &[Letter],
    ) -> Result<(Vec<Letter>, usize)> {
        match g.sign {
            Sign::Pos => Ok(self.apply_word(g.state, w)),
            Sign::Neg => {
                let inv = inverse
                    .as_ref()
                    .ok_or_else(|| Error::NotInvertible(self.names[g.state].clone()))?;
                Ok(inv.apply_word(g.state, w))
            }
        }
    }

    fn inverse_if_needed(&self, g: &GroupWord) -> Result<Option<MealyMachine>> {
        if g.0.iter().any(|l| l.sign == Sign::Neg) {
            Ok(Some(self.invert()?))
        } else {
            Ok(None)
        }
    }

    /// Action of a group word on a finite word, applying the leftmost
    /// generator first.
    pub fn act(&self, g: &GroupWord, w: &[Letter]) -> Result<Vec<Letter>> {
        let inverse = self.inverse_if_needed(g)?;
        let mut image = w.to_vec();
        for &letter in &g.0 {
            image = self.apply_letter(&inverse, letter, &image)?.0;
        }
        Ok(image)
    }

    /// The section `g|_v`, computed generator by generator: the section of
    /// `g_i` is taken at the image of `v` under `g_1 ⋯ g_{i-1}`.
    pub fn section(&self, g: &GroupWord, v: &[Letter]) -> Result<GroupWord> {
        let inverse = self.inverse_if_needed(g)?;
        let mut image = v.to_vec();
        let mut letters = Vec::with_capacity(g.0.len());
        for &letter in &g.0 {
            let (next, final_state) = self.apply_letter(&inverse, letter, &image)?;
            letters.push(GeneratorLetter { state: final_state, sign: letter.sign });
            image = next;
        }
        Ok(GroupWord(letters))
    }

    /// Wreath decomposition of a group word: the section at each first-level
    /// letter and the permutation induced on level one.
    pub fn wreath_decompose(&self, g: &GroupWord) -> Result<(Vec<GroupWord>, Vec<Letter>)> {
        let mut sections = Vec::with_capacity(self.alphabet_size);
        let mut perm = Vec::with_capacity(self.alphabet_size);
        for x in 0..self.alphabet_size as Letter {
            sections.push(self.section(g, &[x])?);
            perm.push(self.act(g, &[x])?[0]);
        }
        Ok((sections, perm))
    }

    /// Moore diagram in DOT format. States are labelled with their
    /// level-one permutation; edges carry `x|λ(q,x)` labels.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph moore {\n  rankdir=LR;\n");
        for q in 0..self.num_states() {
            let perm: Vec<String> =
                (0..self.alphabet_size).map(|x| self.out[q][x].to_string()).collect();
            let ident = (0..self.alphabet_size).all(|x| self.out[q][x] as usize == x);
            let tag = if ident { "id".to_string() } else { format!("({})", perm.join(" ")) };
            s.push_str(&format!("  \"{}\" [label=\"{} {}\"];\n", self.names[q], self.names[q], tag));
        }
        for q in 0..self.num_states() {
            for x in 0..self.alphabet_size {
                s.push_str(&format!(
                    "  \"{}\" -> \"{}\" [label=\"{}|{}\"];\n",
                    self.names[q],
                    self.names[self.delta[q][x]],
                    x,
                    self.out[q][x]
                ));
            }
        }
        s.push_str("}\n");
        s
    }
}

impl fmt::Display for MealyMachine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MealyMachine[{}]", self.names.join(","))
    }
}

/// Parses a binary word like `"0110"`. `"-"` and `""` denote the empty word.
pub fn parse_word(s: &str) -> Result<Vec<Letter>> {
    if s == "-" {
        return Ok(Vec::new());
    }
    s.chars()
        .map(|c| {
            c.to_digit(10)
                .filter(|&d| d < 2)
                .map(|d| d as Letter)
                .ok_or_else(|| Error::InvalidEncoding(s.to_string()))
        })
        .collect()
}

/// Renders a binary word; the empty word prints as `"-"`.
pub fn render_word(w: &[Letter]) -> String {
    if w.is_empty() {
        "-".to_string()
    } else {
        w.iter().map(|x| x.to_string()).collect()
    }
}
