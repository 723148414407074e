//! Words in the free group on `x, y, z`, the word tree, and the words
//! `omega_t` read off the crossing geometry.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::{crossing_events, Crossing, EdgeKind, SegmentSpec, Side};
use crate::rational::{farey_path, ExtRational, Move};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    X,
    Y,
    Z,
}

impl Generator {
    pub fn name(self) -> char {
        match self {
            Generator::X => 'x',
            Generator::Y => 'y',
            Generator::Z => 'z',
        }
    }

    /// Letter carried by a crossed edge of the given kind.
    pub fn for_edge(kind: EdgeKind) -> Self {
        match kind {
            EdgeKind::Horizontal => Generator::X,
            EdgeKind::Diagonal => Generator::Y,
            EdgeKind::Vertical => Generator::Z,
        }
    }
}

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: Generator,
    pub inverted: bool,
}

impl Letter {
    pub const fn pos(generator: Generator) -> Self {
        Letter {
            generator,
            inverted: false,
        }
    }

    pub const fn neg(generator: Generator) -> Self {
        Letter {
            generator,
            inverted: true,
        }
    }

    pub fn inverse(self) -> Self {
        Letter {
            generator: self.generator,
            inverted: !self.inverted,
        }
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverted != other.inverted
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.generator.name())?;
        if self.inverted {
            f.write_str("'")?;
        }
        Ok(())
    }
}

/// A word over `x, y, z` and their inverses.
///
/// The letters are kept in the order they were produced so that claims about
/// raw emission order can be checked; equality compares reduced forms.
#[derive(Debug, Clone, Default, Eq)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn empty() -> Self {
        FreeWord::default()
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        FreeWord { letters }
    }

    pub fn generator(g: Generator) -> Self {
        FreeWord {
            letters: vec![Letter::pos(g)],
        }
    }

    pub fn x() -> Self {
        Self::generator(Generator::X)
    }

    pub fn y() -> Self {
        Self::generator(Generator::Y)
    }

    pub fn z() -> Self {
        Self::generator(Generator::Z)
    }

    pub fn xyz() -> Self {
        FreeWord::from_letters(vec![
            Letter::pos(Generator::X),
            Letter::pos(Generator::Y),
            Letter::pos(Generator::Z),
        ])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| !w[0].cancels(w[1]))
    }

    /// Free reduction: repeatedly cancels adjacent inverse pairs.
    pub fn reduce(&self) -> FreeWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match out.last() {
                Some(&top) if top.cancels(l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        FreeWord { letters: out }
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Juxtaposition without reduction.
    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        FreeWord { letters }
    }

    /// `u w u^-1`, unreduced.
    pub fn conjugate(u: &FreeWord, w: &FreeWord) -> FreeWord {
        u.concat(w).concat(&u.inverse())
    }

    /// Reduced product `self * other`.
    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        self.concat(other).reduce()
    }

    /// Exponent sum of each generator (abelianization).
    pub fn exponent_sums(&self) -> [i64; 3] {
        let mut out = [0i64; 3];
        for l in &self.letters {
            let idx = l.generator as usize;
            out[idx] += if l.inverted { -1 } else { 1 };
        }
        out
    }
}

impl PartialEq for FreeWord {
    fn eq(&self, other: &Self) -> bool {
        self.reduce().letters == other.reduce().letters
    }
}

impl std::hash::Hash for FreeWord {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.reduce().letters.hash(state);
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for FreeWord {
    type Err = Error;

    /// Parses apostrophe notation: `yzy'` is `y z y^-1`; `1` is the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(FreeWord::empty());
        }
        let mut letters: Vec<Letter> = Vec::new();
        for c in s.chars() {
            match c {
                'x' => letters.push(Letter::pos(Generator::X)),
                'y' => letters.push(Letter::pos(Generator::Y)),
                'z' => letters.push(Letter::pos(Generator::Z)),
                '\'' => match letters.last_mut() {
                    Some(l) if !l.inverted => l.inverted = true,
                    _ => return Err(Error::InvalidWord(s.to_string())),
                },
                c if c.is_whitespace() => {}
                _ => return Err(Error::InvalidWord(s.to_string())),
            }
        }
        Ok(FreeWord { letters })
    }
}

impl Serialize for FreeWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FreeWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A vertex `(a, b, c)` of the word tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordTriple {
    pub a: FreeWord,
    pub b: FreeWord,
    pub c: FreeWord,
}

impl WordTriple {
    pub fn root() -> Self {
        WordTriple {
            a: FreeWord::x(),
            b: FreeWord::y(),
            c: FreeWord::z(),
        }
    }

    pub fn child(&self, mv: Move) -> Self {
        let (l, r) = word_children(self);
        match mv {
            Move::Left => l,
            Move::Right => r,
        }
    }
}

/// Left child `(a, b c b^-1, b)` and right child `(b, b^-1 a b, c)`, middles reduced.
pub fn word_children(v: &WordTriple) -> (WordTriple, WordTriple) {
    let left = WordTriple {
        a: v.a.clone(),
        b: FreeWord::conjugate(&v.b, &v.c).reduce(),
        c: v.b.clone(),
    };
    let right = WordTriple {
        a: v.b.clone(),
        b: FreeWord::conjugate(&v.b.inverse(), &v.a).reduce(),
        c: v.c.clone(),
    };
    (left, right)
}

fn read_edges(seg: &SegmentSpec) -> Result<FreeWord> {
    let letters = crossing_events(seg)?
        .into_iter()
        .filter_map(|e| match e.crossing {
            Crossing::Edge { kind, side } => Some(Letter {
                generator: Generator::for_edge(kind),
                inverted: side == Side::Right,
            }),
            Crossing::Triangle { .. } => None,
        })
        .collect();
    Ok(FreeWord { letters })
}

/// `omega_t` read from the edges crossed by the slope-`t` segment, in
/// emission order. `omega_{0/1} = x` and `omega_{1/0} = z`.
pub fn omega_geometric(t: ExtRational) -> FreeWord {
    if t.is_zero() {
        return FreeWord::x();
    }
    if t.is_infinite() {
        return FreeWord::z();
    }
    read_edges(&SegmentSpec::new(t, false)).expect("interior slopes have well-formed geometry")
}

/// The middle entry of the word-tree vertex matching `t` in the Farey tree.
pub fn omega_tree(t: ExtRational) -> Result<FreeWord> {
    let path = farey_path(t)?;
    Ok(path.walk(WordTriple::root(), |v, mv| v.child(mv)).b)
}

/// The full word-tree vertex `(omega_r, omega_t, omega_s)` for `t`.
pub fn word_vertex(t: ExtRational) -> Result<WordTriple> {
    let path = farey_path(t)?;
    Ok(path.walk(WordTriple::root(), |v, mv| v.child(mv)))
}

/// Splits `w = u a u^-1` letter for letter; `a` is the central letter.
pub fn symmetric_decompose(w: &FreeWord) -> Result<(FreeWord, Letter)> {
    let n = w.letters.len();
    let fail = || Error::NoSymmetricDecomposition(w.to_string());
    if n % 2 == 0 || !w.is_reduced() {
        return Err(fail());
    }
    let mid = n / 2;
    for i in 0..mid {
        if w.letters[n - 1 - i] != w.letters[i].inverse() {
            return Err(fail());
        }
    }
    Ok((
        FreeWord {
            letters: w.letters[..mid].to_vec(),
        },
        w.letters[mid],
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CompletionMode {
    /// `xyz * omega_t^-1`, reduced.
    Algebraic,
    /// Edge reading of the shifted segment.
    Geometric,
}

/// The endpoint-completed word for `0 < t < oo`.
pub fn omega_completed(t: ExtRational, mode: CompletionMode) -> Result<FreeWord> {
    let t = t.require_interior()?;
    match mode {
        CompletionMode::Algebraic => Ok(FreeWord::xyz().mul(&omega_geometric(t).inverse())),
        CompletionMode::Geometric => read_edges(&SegmentSpec::new(t, true)),
    }
}
