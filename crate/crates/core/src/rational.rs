//! Nonnegative rationals extended by `1/0`, mediants, and navigation of the
//! Farey (Stern–Brocot) tree rooted at `(0/1, 1/1, 1/0)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Environment variable that caps tree enumeration depth.
pub const MAX_DEPTH_ENV: &str = "MARKOV_WORDS_MAX_DEPTH";

/// Depth cap used when [`MAX_DEPTH_ENV`] is unset or unparsable.
pub const DEFAULT_MAX_DEPTH: u32 = 16;

/// The enumeration depth limit currently in force.
pub fn max_depth() -> u32 {
    std::env::var(MAX_DEPTH_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_DEPTH)
}

/// A reduced fraction `num/den` with `num, den >= 0`; `1/0` stands for infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExtRational {
    num: u64,
    den: u64,
}

impl ExtRational {
    pub const ZERO: ExtRational = ExtRational { num: 0, den: 1 };
    pub const ONE: ExtRational = ExtRational { num: 1, den: 1 };
    pub const INFINITY: ExtRational = ExtRational { num: 1, den: 0 };

    /// Builds the reduced form of `num/den`. Only `0/0` is rejected.
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if num == 0 && den == 0 {
            return Err(Error::InvalidRational("0/0".into()));
        }
        let g = num.gcd(&den);
        Ok(ExtRational {
            num: num / g,
            den: den / g,
        })
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_infinite(&self) -> bool {
        self.den == 0
    }

    /// True for `0/1` and `1/0`.
    pub fn is_boundary(&self) -> bool {
        self.is_zero() || self.is_infinite()
    }

    /// Errors with [`Error::BoundarySlope`] unless `0 < self < oo`.
    pub fn require_interior(self) -> Result<Self> {
        if self.is_boundary() {
            Err(Error::BoundarySlope(self))
        } else {
            Ok(self)
        }
    }
}

impl Ord for ExtRational {
    fn cmp(&self, other: &Self) -> Ordering {
        // a/b < c/d  <=>  a*d < c*b; valid for den = 0 as well since 1/0 has num > 0.
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for ExtRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for ExtRational {
    type Err = Error;

    /// Accepts `p/q` (reduced on parse) or a bare integer `p`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRational(s.to_string());
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num = n.parse::<u64>().map_err(|_| bad())?;
        let den = d.parse::<u64>().map_err(|_| bad())?;
        ExtRational::new(num, den).map_err(|_| bad())
    }
}

impl Serialize for ExtRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExtRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `(a+c)/(b+d)`, reduced. Farey neighbours already give a reduced result.
pub fn mediant(a: ExtRational, b: ExtRational) -> ExtRational {
    ExtRational::new(a.num + b.num, a.den + b.den).expect("mediant of valid rationals is nonzero")
}

/// A vertex `(left, mid, right)` of the Farey tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FareyTriple {
    pub left: ExtRational,
    pub mid: ExtRational,
    pub right: ExtRational,
}

impl FareyTriple {
    pub fn root() -> Self {
        FareyTriple {
            left: ExtRational::ZERO,
            mid: ExtRational::ONE,
            right: ExtRational::INFINITY,
        }
    }

    pub fn left_child(&self) -> Self {
        FareyTriple {
            left: self.left,
            mid: mediant(self.left, self.mid),
            right: self.mid,
        }
    }

    pub fn right_child(&self) -> Self {
        FareyTriple {
            left: self.mid,
            mid: mediant(self.mid, self.right),
            right: self.right,
        }
    }

    pub fn child(&self, mv: Move) -> Self {
        match mv {
            Move::Left => self.left_child(),
            Move::Right => self.right_child(),
        }
    }

    /// `b*c - a*d` for `(a/b, _, c/d)`; equals 1 on every tree vertex.
    pub fn determinant(&self) -> i128 {
        self.left.den as i128 * self.right.num as i128
            - self.left.num as i128 * self.right.den as i128
    }
}

impl fmt::Display for FareyTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.left, self.mid, self.right)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Move {
    Left,
    Right,
}

/// Moves from the root to a vertex of the Farey tree.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FareyPath {
    pub moves: Vec<Move>,
}

impl FareyPath {
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// The vertex reached by replaying the moves from the root.
    pub fn replay(&self) -> FareyTriple {
        self.moves
            .iter()
            .fold(FareyTriple::root(), |v, &mv| v.child(mv))
    }

    /// Folds `step` over the moves starting from `init`.
    pub fn walk<T>(&self, init: T, mut step: impl FnMut(T, Move) -> T) -> T {
        self.moves.iter().fold(init, |acc, &mv| step(acc, mv))
    }
}

impl fmt::Display for FareyPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for mv in &self.moves {
            f.write_str(match mv {
                Move::Left => "L",
                Move::Right => "R",
            })?;
        }
        Ok(())
    }
}

/// Stern–Brocot descent to `t`; returns the path and the terminal vertex.
fn descend(t: ExtRational) -> Result<(FareyPath, FareyTriple)> {
    let t = t.require_interior()?;
    let cap = t.num + t.den;
    let mut v = FareyTriple::root();
    let mut moves = Vec::new();
    loop {
        let mv = match t.cmp(&v.mid) {
            Ordering::Equal => break,
            Ordering::Less => Move::Left,
            Ordering::Greater => Move::Right,
        };
        moves.push(mv);
        v = v.child(mv);
        assert!(
            (moves.len() as u64) < cap,
            "Stern-Brocot descent to {t} exceeded {cap} steps"
        );
    }
    Ok((FareyPath { moves }, v))
}

/// The unique Farey-tree vertex whose middle entry is `t`.
pub fn farey_triple(t: ExtRational) -> Result<FareyTriple> {
    descend(t).map(|(_, v)| v)
}

/// The Left/Right moves from the root to the vertex with middle entry `t`.
pub fn farey_path(t: ExtRational) -> Result<FareyPath> {
    descend(t).map(|(p, _)| p)
}

/// All vertices of depth `<= depth` in breadth-first order, capped by [`max_depth`].
pub fn farey_enumerate(depth: u32) -> Result<Vec<FareyTriple>> {
    farey_enumerate_with_limit(depth, max_depth())
}

pub fn farey_enumerate_with_limit(depth: u32, limit: u32) -> Result<Vec<FareyTriple>> {
    if depth > limit {
        return Err(Error::ResourceLimit {
            what: "tree depth",
            requested: depth as u64,
            limit: limit as u64,
        });
    }
    let mut out = vec![FareyTriple::root()];
    let mut level_start = 0;
    for _ in 0..depth {
        let level_end = out.len();
        for i in level_start..level_end {
            let v = out[i];
            out.push(v.left_child());
            out.push(v.right_child());
        }
        level_start = level_end;
    }
    Ok(out)
}

/// Every reduced `p/q` with `p, q >= 1` and `p + q <= max_sum`, ordered by value.
pub fn slopes_up_to(max_sum: u64) -> Vec<ExtRational> {
    let mut out = Vec::new();
    for s in 2..=max_sum {
        for p in 1..s {
            let q = s - p;
            if p.gcd(&q) == 1 {
                out.push(ExtRational { num: p, den: q });
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> ExtRational {
        s.parse().unwrap()
    }

    #[test]
    fn mediant_examples() {
        assert_eq!(mediant(r("0/1"), r("1/0")), r("1/1"));
        assert_eq!(mediant(r("1/3"), r("1/2")), r("2/5"));
        assert_eq!(mediant(r("0/1"), r("0/1")), r("0/1"));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(r("4/6").to_string(), "2/3");
        assert_eq!(r("1/0"), ExtRational::INFINITY);
        assert_eq!(r("3"), ExtRational::new(3, 1).unwrap());
        assert!("0/0".parse::<ExtRational>().is_err());
        assert!("-1/2".parse::<ExtRational>().is_err());
        assert!("a/2".parse::<ExtRational>().is_err());
    }

    #[test]
    fn infinity_is_greatest() {
        assert!(r("1000000/1") < ExtRational::INFINITY);
        assert!(ExtRational::ZERO < r("1/1000000"));
    }

    #[test]
    fn farey_triple_examples() {
        let v = farey_triple(r("2/5")).unwrap();
        assert_eq!((v.left, v.mid, v.right), (r("1/3"), r("2/5"), r("1/2")));
        assert_eq!(farey_triple(r("1/1")).unwrap(), FareyTriple::root());
        let v = farey_triple(r("5/3")).unwrap();
        assert_eq!((v.left, v.right), (r("3/2"), r("2/1")));
    }

    #[test]
    fn boundary_slopes_rejected() {
        assert_eq!(
            farey_triple(ExtRational::ZERO),
            Err(Error::BoundarySlope(ExtRational::ZERO))
        );
        assert!(farey_path(ExtRational::INFINITY).is_err());
    }

    #[test]
    fn farey_path_examples() {
        use Move::*;
        assert!(farey_path(r("1/1")).unwrap().is_empty());
        assert_eq!(farey_path(r("1/2")).unwrap().moves, vec![Left]);
        let p = farey_path(r("2/5")).unwrap();
        assert_eq!(p.moves, vec![Left, Left, Right]);
        assert_eq!(p.replay(), farey_triple(r("2/5")).unwrap());
        assert_eq!(p.to_string(), "LLR");
    }

    #[test]
    fn enumerate_sizes_and_order() {
        assert_eq!(farey_enumerate(0).unwrap(), vec![FareyTriple::root()]);
        let d1 = farey_enumerate(1).unwrap();
        assert_eq!(d1[1].mid, r("1/2"));
        assert_eq!(d1[2].mid, r("2/1"));
        for d in 0..8 {
            assert_eq!(farey_enumerate(d).unwrap().len(), (1 << (d + 1)) - 1);
        }
        assert!(matches!(
            farey_enumerate_with_limit(5, 4),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn enumerated_vertices_are_unimodular_farey_triples() {
        for v in farey_enumerate(10).unwrap() {
            assert_eq!(v.mid, mediant(v.left, v.right));
            assert!(v.left < v.mid && v.mid < v.right);
            assert_eq!(v.determinant(), 1);
            assert_eq!(farey_triple(v.mid).unwrap(), v);
        }
    }

    #[test]
    fn slope_corpus() {
        let s = slopes_up_to(4);
        let strs: Vec<_> = s.iter().map(|t| t.to_string()).collect();
        assert_eq!(strs, ["1/3", "1/2", "1/1", "2/1", "3/1"]);
    }

    #[test]
    fn serde_as_string() {
        let json = serde_json::to_string(&r("2/5")).unwrap();
        assert_eq!(json, "\"2/5\"");
        let back: ExtRational = serde_json::from_str("\"1/0\"").unwrap();
        assert_eq!(back, ExtRational::INFINITY);
    }
}
