//! Exact crossing geometry of a slope-`t` segment in the modified lattice:
//! the square grid plus the slope `-1` diagonals between adjacent lattice
//! points, which tiles the plane by right-angled triangles.
//!
//! The segment `L_t` runs from `(0,0)` to `(q,p)` for `t = p/q`. The shifted
//! segment runs from `(-e,0)` to `(q-e,p)` where `e` is a formal positive
//! infinitesimal; every coordinate and predicate is then of the form `a + b*e`
//! and is evaluated exactly as an [`EpsRational`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::ExtRational;

/// The value `a + b*e` for a formal positive infinitesimal `e`.
///
/// Ordering is lexicographic on `(a, b)`, which is the ordering of the
/// values for every sufficiently small `e > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EpsRational {
    pub a: BigRational,
    pub b: BigRational,
}

impl EpsRational {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        EpsRational { a, b }
    }

    pub fn constant(a: BigRational) -> Self {
        EpsRational {
            a,
            b: BigRational::zero(),
        }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(n.into()))
    }

    /// The infinitesimal itself.
    pub fn eps() -> Self {
        EpsRational {
            a: BigRational::zero(),
            b: BigRational::one(),
        }
    }

    pub fn zero() -> Self {
        Self::int(0)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Sign as `e -> 0+`.
    pub fn signum(&self) -> Ordering {
        if !self.a.is_zero() {
            self.a.cmp(&BigRational::zero())
        } else {
            self.b.cmp(&BigRational::zero())
        }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        EpsRational {
            a: &self.a * k,
            b: &self.b * k,
        }
    }

    /// Greatest integer `n` with `n <= self` for all small `e > 0`.
    pub fn floor(&self) -> BigInt {
        let fl = self.a.floor();
        if fl == self.a && self.b.is_negative() {
            fl.to_integer() - 1
        } else {
            fl.to_integer()
        }
    }

    /// True when the value is exactly an integer (no infinitesimal part).
    pub fn is_integer(&self) -> bool {
        self.b.is_zero() && self.a.is_integer()
    }
}

impl Ord for EpsRational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.a.cmp(&other.a).then_with(|| self.b.cmp(&other.b))
    }
}

impl PartialOrd for EpsRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &EpsRational {
    type Output = EpsRational;
    fn add(self, rhs: &EpsRational) -> EpsRational {
        EpsRational {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub for &EpsRational {
    type Output = EpsRational;
    fn sub(self, rhs: &EpsRational) -> EpsRational {
        EpsRational {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Neg for &EpsRational {
    type Output = EpsRational;
    fn neg(self) -> EpsRational {
        EpsRational {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl Mul<&BigRational> for &EpsRational {
    type Output = EpsRational;
    fn mul(self, k: &BigRational) -> EpsRational {
        self.scale(k)
    }
}

impl fmt::Display for EpsRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + ({})e", self.a, self.b)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Horizontal,
    Diagonal,
    Vertical,
}

/// Position of an edge midpoint relative to the oriented segment.
/// A midpoint lying on the segment counts as `NotRight`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    NotRight,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Plus => '+',
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }
}

impl Side {
    /// Edge signs: `-` when not on the right, `+` on the right.
    pub fn sign(self) -> Sign {
        match self {
            Side::NotRight => Sign::Minus,
            Side::Right => Sign::Plus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Crossing {
    Edge { kind: EdgeKind, side: Side },
    Triangle { sign: Sign },
}

/// One event along the oriented segment; `param` is the position `lambda`
/// in `[0, 1)` of the point `start + lambda * (q, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingEvent {
    pub param: EpsRational,
    pub crossing: Crossing,
}

impl CrossingEvent {
    pub fn is_edge(&self) -> bool {
        matches!(self.crossing, Crossing::Edge { .. })
    }
}

#[derive(Serialize)]
struct EventRecord<'a> {
    param_num: String,
    param_den: String,
    eps_num: String,
    eps_den: String,
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    side: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sign: Option<&'a str>,
}

impl Serialize for CrossingEvent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let (kind, side, sign) = match self.crossing {
            Crossing::Edge { kind, side } => (
                match kind {
                    EdgeKind::Horizontal => "horizontal",
                    EdgeKind::Diagonal => "diagonal",
                    EdgeKind::Vertical => "vertical",
                },
                Some(match side {
                    Side::NotRight => "not_right",
                    Side::Right => "right",
                }),
                None,
            ),
            Crossing::Triangle { sign } => (
                "triangle",
                None,
                Some(match sign {
                    Sign::Minus => "-",
                    Sign::Plus => "+",
                }),
            ),
        };
        EventRecord {
            param_num: self.param.a.numer().to_string(),
            param_den: self.param.a.denom().to_string(),
            eps_num: self.param.b.numer().to_string(),
            eps_den: self.param.b.denom().to_string(),
            kind,
            side,
            sign,
        }
        .serialize(serializer)
    }
}

/// Serializes an event stream as a JSON array in stream order.
pub fn events_to_json(events: &[CrossingEvent]) -> serde_json::Value {
    struct Stream<'a>(&'a [CrossingEvent]);
    impl Serialize for Stream<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(self.0.len()))?;
            for e in self.0 {
                seq.serialize_element(e)?;
            }
            seq.end()
        }
    }
    serde_json::to_value(Stream(events)).expect("event serialization is infallible")
}

/// The oriented segment of slope `slope` from the origin, optionally shifted by `(-e, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SegmentSpec {
    pub slope: ExtRational,
    pub shifted: bool,
}

impl SegmentSpec {
    pub fn new(slope: ExtRational, shifted: bool) -> Self {
        SegmentSpec { slope, shifted }
    }

    fn rise(&self) -> BigRational {
        BigRational::from_integer(self.slope.num().into())
    }

    fn run(&self) -> BigRational {
        BigRational::from_integer(self.slope.den().into())
    }

    pub fn start(&self) -> (EpsRational, EpsRational) {
        let x = if self.shifted {
            -&EpsRational::eps()
        } else {
            EpsRational::zero()
        };
        (x, EpsRational::zero())
    }

    /// The point at position `lambda` along the segment.
    pub fn point_at(&self, lambda: &EpsRational) -> (EpsRational, EpsRational) {
        let (sx, sy) = self.start();
        (&sx + &lambda.scale(&self.run()), &sy + &lambda.scale(&self.rise()))
    }

    /// Orientation cross product of `(px, py) - start` against the direction
    /// `(q, p)`; positive means strictly left of the segment's line.
    pub fn orientation(&self, px: &EpsRational, py: &EpsRational) -> EpsRational {
        let (sx, sy) = self.start();
        let dx = px - &sx;
        let dy = py - &sy;
        &dy.scale(&self.run()) - &dx.scale(&self.rise())
    }
}

fn rat(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

/// A lattice edge crossed by the segment: kind, the crossing position, and the edge midpoint.
struct EdgeHit {
    param: EpsRational,
    kind: EdgeKind,
    mid: (BigRational, BigRational),
}

fn edge_hits(seg: &SegmentSpec) -> Result<Vec<EdgeHit>> {
    let p = seg.slope.num() as i64;
    let q = seg.slope.den() as i64;
    let (sx, _) = seg.start();
    let zero = EpsRational::zero();
    let one = EpsRational::int(1);

    let mut hits = Vec::new();
    // line index range to try, and position along the segment as a function of the index
    let families: [(EdgeKind, i64, i64); 3] = [
        (EdgeKind::Horizontal, 0, p),
        (EdgeKind::Vertical, -1, q),
        (EdgeKind::Diagonal, -1, p + q),
    ];
    for (kind, lo, hi) in families {
        for n in lo..=hi {
            let line = EpsRational::int(n);
            let lambda = match kind {
                // y = n
                EdgeKind::Horizontal => line.scale(&BigRational::new(1.into(), p.into())),
                // x = n
                EdgeKind::Vertical => (&line - &sx).scale(&BigRational::new(1.into(), q.into())),
                // x + y = n
                EdgeKind::Diagonal => {
                    (&line - &sx).scale(&BigRational::new(1.into(), (p + q).into()))
                }
            };
            if lambda < zero || lambda >= one {
                continue;
            }
            let (x, y) = seg.point_at(&lambda);
            if x.is_integer() && y.is_integer() {
                // a lattice point is not in the interior of any edge
                if lambda != zero {
                    return Err(Error::Invariant(format!(
                        "segment of slope {} passes through lattice point ({}, {})",
                        seg.slope, x, y
                    )));
                }
                continue;
            }
            let h = half();
            let mid = match kind {
                EdgeKind::Horizontal => (rat(&x.floor()) + &h, rat(&BigInt::from(n))),
                EdgeKind::Vertical => (rat(&BigInt::from(n)), rat(&y.floor()) + &h),
                EdgeKind::Diagonal => {
                    let i = x.floor();
                    (rat(&i) + &h, rat(&(BigInt::from(n) - &i)) - &h)
                }
            };
            hits.push(EdgeHit {
                param: lambda,
                kind,
                mid,
            });
        }
    }
    hits.sort_by(|a, b| a.param.cmp(&b.param));
    Ok(hits)
}

/// Vertices of the triangle containing `(x, y)` in its interior.
fn containing_triangle(x: &EpsRational, y: &EpsRational) -> Result<[(BigInt, BigInt); 3]> {
    let i = x.floor();
    let j = y.floor();
    let fx = x - &EpsRational::constant(rat(&i));
    let fy = y - &EpsRational::constant(rat(&j));
    let sum = &fx + &fy;
    if fx.is_zero() || fy.is_zero() || sum == EpsRational::int(1) {
        return Err(Error::Invariant(format!(
            "point ({x}, {y}) lies on a lattice edge"
        )));
    }
    let (i1, j1) = (&i + 1, &j + 1);
    Ok(if sum < EpsRational::int(1) {
        [(i.clone(), j.clone()), (i1, j.clone()), (i, j1)]
    } else {
        [(i1.clone(), j.clone()), (i1, j1.clone()), (i, j1)]
    })
}

/// The ordered stream of edge and triangle crossings of `seg`.
///
/// Edges sit at their crossing position; each crossed triangle sits at the
/// midpoint of the interval the segment spends inside it. For a shifted
/// segment the horizontal edge holding the initial endpoint is the first
/// event and the edge holding the terminal endpoint is omitted.
pub fn crossing_events(seg: &SegmentSpec) -> Result<Vec<CrossingEvent>> {
    seg.slope.require_interior()?;
    let hits = edge_hits(seg)?;

    let mut events = Vec::with_capacity(2 * hits.len() + 1);
    let mut boundaries: Vec<EpsRational> = Vec::with_capacity(hits.len() + 2);
    boundaries.push(EpsRational::zero());
    for hit in &hits {
        let (mx, my) = &hit.mid;
        let o = seg.orientation(&EpsRational::constant(mx.clone()), &EpsRational::constant(my.clone()));
        let side = if o.signum() == Ordering::Less {
            Side::Right
        } else {
            Side::NotRight
        };
        events.push(CrossingEvent {
            param: hit.param.clone(),
            crossing: Crossing::Edge {
                kind: hit.kind,
                side,
            },
        });
        if hit.param != *boundaries.last().unwrap() {
            boundaries.push(hit.param.clone());
        }
    }
    boundaries.push(EpsRational::int(1));

    let two = BigRational::from_integer(2.into());
    for (idx, w) in boundaries.windows(2).enumerate() {
        let lambda = (&w[0] + &w[1]).scale(&(BigRational::one() / &two));
        let (x, y) = seg.point_at(&lambda);
        let verts = containing_triangle(&x, &y)?;
        let left = verts
            .iter()
            .filter(|(vx, vy)| {
                seg.orientation(&EpsRational::constant(rat(vx)), &EpsRational::constant(rat(vy)))
                    .signum()
                    == Ordering::Greater
            })
            .count();
        let sign = if idx == 0 || left == 2 {
            Sign::Minus
        } else {
            Sign::Plus
        };
        events.push(CrossingEvent {
            param: lambda,
            crossing: Crossing::Triangle { sign },
        });
    }

    events.sort_by(|a, b| a.param.cmp(&b.param));
    for w in events.windows(2) {
        if w[0].param >= w[1].param {
            return Err(Error::Invariant(format!(
                "events not strictly ordered at {}",
                w[1].param
            )));
        }
    }
    Ok(events)
}

/// Height of `L_t` over the `i`-th vertical grid line from the left (`x = i - 1`).
pub fn vertical_intersection_height(t: ExtRational, i: u64) -> Result<BigRational> {
    let t = t.require_interior()?;
    let max = t.den() + 1;
    if i == 0 || i > max {
        return Err(Error::OutOfRange { index: i, max });
    }
    Ok(BigRational::new(
        BigInt::from(i - 1) * BigInt::from(t.num()),
        BigInt::from(t.den()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> ExtRational {
        s.parse().unwrap()
    }

    fn triangle_signs(events: &[CrossingEvent]) -> Vec<char> {
        events
            .iter()
            .filter_map(|e| match e.crossing {
                Crossing::Triangle { sign } => Some(sign.symbol()),
                _ => None,
            })
            .collect()
    }

    fn edges(events: &[CrossingEvent]) -> Vec<(EdgeKind, Side)> {
        events
            .iter()
            .filter_map(|e| match e.crossing {
                Crossing::Edge { kind, side } => Some((kind, side)),
                _ => None,
            })
            .collect()
    }

    #[test]
    fn eps_ordering_and_floor() {
        let e = EpsRational::eps();
        assert!(EpsRational::zero() < e);
        assert!(e < EpsRational::constant(BigRational::new(1.into(), 1000000.into())));
        assert_eq!((-&e).floor(), BigInt::from(-1));
        assert_eq!(e.floor(), BigInt::from(0));
        assert_eq!((-&e).signum(), Ordering::Less);
    }

    #[test]
    fn two_fifths_unshifted() {
        let ev = crossing_events(&SegmentSpec::new(r("2/5"), false)).unwrap();
        // 11 crossed edges and 12 crossed triangles
        assert_eq!(ev.len(), 23);
        assert_eq!(
            triangle_signs(&ev).into_iter().collect::<String>(),
            "--+-++--+-++"
        );
    }

    #[test]
    fn one_one_unshifted() {
        let ev = crossing_events(&SegmentSpec::new(r("1/1"), false)).unwrap();
        let kinds: Vec<_> = ev.iter().map(|e| e.crossing).collect();
        assert_eq!(
            kinds,
            vec![
                Crossing::Triangle { sign: Sign::Minus },
                Crossing::Edge {
                    kind: EdgeKind::Diagonal,
                    side: Side::NotRight
                },
                Crossing::Triangle { sign: Sign::Plus },
            ]
        );
    }

    #[test]
    fn two_fifths_shifted_starts_with_xyz() {
        let ev = crossing_events(&SegmentSpec::new(r("2/5"), true)).unwrap();
        assert!(ev[0].is_edge());
        assert_eq!(ev[0].param, EpsRational::zero());
        let e = edges(&ev);
        assert_eq!(e.len(), 14);
        assert_eq!(
            &e[..3],
            &[
                (EdgeKind::Horizontal, Side::NotRight),
                (EdgeKind::Diagonal, Side::NotRight),
                (EdgeKind::Vertical, Side::NotRight)
            ]
        );
        // terminal horizontal edge is not recorded: the last edge is a diagonal
        assert_eq!(e.last().unwrap().0, EdgeKind::Diagonal);
    }

    #[test]
    fn boundary_slopes_rejected() {
        assert!(crossing_events(&SegmentSpec::new(ExtRational::ZERO, false)).is_err());
        assert!(crossing_events(&SegmentSpec::new(ExtRational::INFINITY, true)).is_err());
    }

    #[test]
    fn event_counts() {
        for t in crate::rational::slopes_up_to(16) {
            let s = t.num() + t.den();
            let plain = crossing_events(&SegmentSpec::new(t, false)).unwrap();
            let shifted = crossing_events(&SegmentSpec::new(t, true)).unwrap();
            assert_eq!(edges(&plain).len() as u64, 2 * s - 3, "{t}");
            assert_eq!(triangle_signs(&plain).len() as u64, 2 * s - 2, "{t}");
            assert_eq!(edges(&shifted).len() as u64, 2 * s, "{t}");
            assert_eq!(triangle_signs(&shifted).len() as u64, 2 * s, "{t}");
        }
    }

    #[test]
    fn consecutive_edges_differ_in_kind() {
        for t in crate::rational::slopes_up_to(20) {
            for shifted in [false, true] {
                let e = edges(&crossing_events(&SegmentSpec::new(t, shifted)).unwrap());
                for w in e.windows(2) {
                    assert_ne!(w[0].0, w[1].0, "{t} shifted={shifted}");
                }
            }
        }
    }

    #[test]
    fn shifted_stream_differs_only_at_the_ends_and_centre() {
        for t in crate::rational::slopes_up_to(20) {
            let plain = edges(&crossing_events(&SegmentSpec::new(t, false)).unwrap());
            let shifted = edges(&crossing_events(&SegmentSpec::new(t, true)).unwrap());
            let rest = &shifted[3..];
            assert_eq!(rest.len(), plain.len());
            let centre = plain.len() / 2;
            for (i, (a, b)) in plain.iter().zip(rest).enumerate() {
                assert_eq!(a.0, b.0, "{t}");
                if i == centre {
                    assert_eq!((a.1, b.1), (Side::NotRight, Side::Right), "{t}");
                } else {
                    assert_eq!(a.1, b.1, "{t} at {i}");
                }
            }
        }
    }

    #[test]
    fn vertical_heights() {
        let t = r("2/5");
        assert_eq!(vertical_intersection_height(t, 1).unwrap(), BigRational::zero());
        let h = vertical_intersection_height(t, 4).unwrap();
        assert_eq!(h, BigRational::new(6.into(), 5.into()));
        assert_eq!(h.fract(), BigRational::new(1.into(), 5.into()));
        assert_eq!(
            vertical_intersection_height(r("1/2"), 2).unwrap(),
            BigRational::new(1.into(), 2.into())
        );
        assert_eq!(
            vertical_intersection_height(t, 7),
            Err(Error::OutOfRange { index: 7, max: 6 })
        );
        assert!(vertical_intersection_height(t, 0).is_err());
    }

    #[test]
    fn json_shape() {
        let ev = crossing_events(&SegmentSpec::new(r("1/1"), false)).unwrap();
        let v = events_to_json(&ev);
        assert_eq!(v[0]["kind"], "triangle");
        assert_eq!(v[0]["sign"], "-");
        assert_eq!(v[1]["kind"], "diagonal");
        assert_eq!(v[1]["side"], "not_right");
        assert_eq!(v[1]["param_num"], "1");
        assert_eq!(v[1]["param_den"], "2");
        assert_eq!(v[1]["eps_num"], "0");
        assert!(v[1].get("sign").is_none());
    }
}
