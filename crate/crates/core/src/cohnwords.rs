//! Cohn (Christoffel) words over `p, q, r`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{farey_path, ExtRational, Move};
use crate::words::{FreeWord, Generator, Letter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CohnLetter {
    P,
    Q,
    R,
}

impl CohnLetter {
    pub fn name(self) -> char {
        match self {
            CohnLetter::P => 'p',
            CohnLetter::Q => 'q',
            CohnLetter::R => 'r',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CohnWord(pub Vec<CohnLetter>);

impl CohnWord {
    pub fn letter(l: CohnLetter) -> Self {
        CohnWord(vec![l])
    }

    pub fn letters(&self) -> &[CohnLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &CohnWord) -> CohnWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        CohnWord(v)
    }

    pub fn count(&self, l: CohnLetter) -> usize {
        self.0.iter().filter(|&&c| c == l).count()
    }

    /// The word with its first and last letters removed.
    pub fn interior(&self) -> &[CohnLetter] {
        if self.0.len() < 2 {
            &[]
        } else {
            &self.0[1..self.0.len() - 1]
        }
    }

    pub fn interior_is_palindrome(&self) -> bool {
        let w = self.interior();
        w.iter().eq(w.iter().rev())
    }
}

impl fmt::Display for CohnWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.name())?;
        }
        Ok(())
    }
}

impl FromStr for CohnWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                'p' => Ok(CohnLetter::P),
                'q' => Ok(CohnLetter::Q),
                'r' => Ok(CohnLetter::R),
                _ => Err(Error::InvalidWord(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(CohnWord)
    }
}

impl Serialize for CohnWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CohnWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The lower lattice path under the segment from `(0,0)` to `(q,p)`.
///
/// At each crossing with a grid line the lattice point just right of the
/// segment is recorded (the point itself when the crossing is a lattice
/// point); repeated points are dropped and unit steps are spelled
/// `(1,0) -> p`, `(1,1) -> q`, `(0,1) -> r`.
pub fn christoffel(t: ExtRational) -> CohnWord {
    if t.is_zero() {
        return CohnWord::letter(CohnLetter::P);
    }
    if t.is_infinite() {
        return CohnWord::letter(CohnLetter::R);
    }
    let (a, b) = (t.num() as u128, t.den() as u128);

    // (position along the segment as i/b or j/a, recorded point); compare
    // positions i/b vs j/a by cross-multiplying.
    let mut crossings: Vec<((u128, u128), (u128, u128))> = Vec::new();
    for i in 0..=b {
        // x = i, y = i*a/b; the point below
        crossings.push(((i, b), (i, (i * a) / b)));
    }
    for j in 0..=a {
        // y = j, x = j*b/a; the point to the right
        crossings.push(((j, a), (Integer::div_ceil(&(j * b), &a), j)));
    }
    crossings.sort_by(|(x, _), (y, _)| (x.0 * y.1).cmp(&(y.0 * x.1)));

    let mut points: Vec<(u128, u128)> = Vec::new();
    for (_, pt) in crossings {
        if points.last() != Some(&pt) {
            points.push(pt);
        }
    }
    let letters = points
        .windows(2)
        .map(|w| match (w[1].0 - w[0].0, w[1].1 - w[0].1) {
            (1, 0) => CohnLetter::P,
            (1, 1) => CohnLetter::Q,
            (0, 1) => CohnLetter::R,
            step => panic!("lower path of {t} has non-unit step {step:?}"),
        })
        .collect();
    CohnWord(letters)
}

/// Middle entry of the Cohn word tree at the vertex matching `t`.
pub fn cohn_tree(t: ExtRational) -> Result<CohnWord> {
    use CohnLetter::*;
    let path = farey_path(t)?;
    let root = (CohnWord::letter(P), CohnWord::letter(Q), CohnWord::letter(R));
    let (_, mid, _) = path.walk(root, |(a, b, c), mv| match mv {
        Move::Left => {
            let ab = a.concat(&b);
            (a, ab, b)
        }
        Move::Right => {
            let bc = b.concat(&c);
            (b, bc, c)
        }
    });
    Ok(mid)
}

/// Recovers `c_t` from `omega_t` by the local substitution rule.
///
/// For `t < 1` the pieces strictly between consecutive `z^{+-1}` are `y -> p`
/// and `y x y -> q` (exponents ignored) and the result is `p w q`; for
/// `t > 1` the pieces between consecutive `x^{+-1}` are `y z y -> q` and
/// `y -> r` and the result is `q w r`.
pub fn cohn_from_omega(w: &FreeWord, t: ExtRational) -> Result<CohnWord> {
    use Generator::*;
    let t = t.require_interior()?;
    let (boundary, middle, short, long, first, last) = match t.cmp(&ExtRational::ONE) {
        std::cmp::Ordering::Less => (Z, X, CohnLetter::P, CohnLetter::Q, CohnLetter::P, CohnLetter::Q),
        std::cmp::Ordering::Greater => (X, Z, CohnLetter::R, CohnLetter::Q, CohnLetter::Q, CohnLetter::R),
        std::cmp::Ordering::Equal => return Err(Error::CentralSlope(t)),
    };
    let letters = w.letters();
    let marks: Vec<usize> = letters
        .iter()
        .enumerate()
        .filter(|(_, l)| l.generator == boundary)
        .map(|(i, _)| i)
        .collect();
    let gens = |piece: &[Letter]| piece.iter().map(|l| l.generator).collect::<Vec<_>>();
    let mut out = vec![first];
    for pair in marks.windows(2) {
        let piece = &letters[pair[0] + 1..pair[1]];
        let g = gens(piece);
        if g == [Y] {
            out.push(short);
        } else if g == [Y, middle, Y] {
            out.push(long);
        } else {
            return Err(Error::Malformed(format!(
                "piece {} of {w} matches neither allowed shape",
                FreeWord::from_letters(piece.to_vec())
            )));
        }
    }
    out.push(last);
    Ok(CohnWord(out))
}
