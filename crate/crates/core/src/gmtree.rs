//! The generalized Markov equation
//! `x1^2 + x2^2 + x3^2 + k1 x2 x3 + k2 x3 x1 + k3 x1 x2 = K x1 x2 x3`,
//! `K = 3 + k1 + k2 + k3`, and its position-labeled solution tree.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{farey_path, max_depth, ExtRational, FareyTriple, Move};

/// Position label in `{1, 2, 3}`.
pub type Label = u8;

/// A permutation of `{1,2,3}` given by its images `(s(1), s(2), s(3))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Sigma([Label; 3]);

impl Sigma {
    pub const IDENTITY: Sigma = Sigma([1, 2, 3]);

    pub fn new(images: [Label; 3]) -> Result<Self> {
        let mut sorted = images;
        sorted.sort_unstable();
        if sorted != [1, 2, 3] {
            return Err(Error::InvalidParams(format!(
                "{images:?} is not a permutation of 1,2,3"
            )));
        }
        Ok(Sigma(images))
    }

    /// All six permutations, identity first.
    pub fn all() -> [Sigma; 6] {
        [
            Sigma([1, 2, 3]),
            Sigma([1, 3, 2]),
            Sigma([2, 1, 3]),
            Sigma([2, 3, 1]),
            Sigma([3, 1, 2]),
            Sigma([3, 2, 1]),
        ]
    }

    /// `s(i)` for `i` in `1..=3`.
    pub fn apply(&self, i: Label) -> Label {
        self.0[(i - 1) as usize]
    }

    pub fn images(&self) -> [Label; 3] {
        self.0
    }
}

impl fmt::Display for Sigma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.0[0], self.0[1], self.0[2])
    }
}

impl FromStr for Sigma {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let bad = || Error::InvalidParams(format!("sigma {s:?}: expected three images like 1,2,3"));
        if parts.len() != 3 {
            return Err(bad());
        }
        let mut images = [0u8; 3];
        for (slot, part) in images.iter_mut().zip(&parts) {
            *slot = part.parse().map_err(|_| bad())?;
        }
        Sigma::new(images)
    }
}

/// Coefficients `(k1, k2, k3)` and the label permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GmParams {
    pub k: [u64; 3],
    pub sigma: Sigma,
}

impl GmParams {
    pub fn new(k: [u64; 3], sigma: Sigma) -> Self {
        GmParams { k, sigma }
    }

    /// `(0,0,0)` with the identity: the classical Markov equation.
    pub fn classical() -> Self {
        GmParams::new([0, 0, 0], Sigma::IDENTITY)
    }

    /// `k_i` for label `i`.
    pub fn k(&self, label: Label) -> u64 {
        self.k[(label - 1) as usize]
    }

    /// `k_{s(i)}`.
    pub fn k_sigma(&self, i: Label) -> u64 {
        self.k(self.sigma.apply(i))
    }

    /// `K = 3 + k1 + k2 + k3`.
    pub fn big_k(&self) -> u64 {
        3 + self.k.iter().sum::<u64>()
    }

    /// Parses `"k1,k2,k3"`.
    pub fn parse_k(s: &str) -> Result<[u64; 3]> {
        let bad = || Error::InvalidParams(format!("k {s:?}: expected three nonnegative integers like 1,2,0"));
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        let mut k = [0u64; 3];
        for (slot, part) in k.iter_mut().zip(&parts) {
            *slot = part.parse().map_err(|_| bad())?;
        }
        Ok(k)
    }
}

impl fmt::Display for GmParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k=({},{},{}) sigma=({})", self.k[0], self.k[1], self.k[2], self.sigma)
    }
}

/// True iff `(x1, x2, x3)` solves the GM equation for `params`.
pub fn gm_verify(x1: &BigUint, x2: &BigUint, x3: &BigUint, params: &GmParams) -> bool {
    let (lhs, rhs) = gm_sides(x1, x2, x3, params);
    lhs == rhs
}

/// Both sides of the GM equation.
pub fn gm_sides(x1: &BigUint, x2: &BigUint, x3: &BigUint, params: &GmParams) -> (BigUint, BigUint) {
    let [k1, k2, k3] = params.k.map(BigUint::from);
    let lhs = x1 * x1 + x2 * x2 + x3 * x3 + k1 * x2 * x3 + k2 * x3 * x1 + k3 * x1 * x2;
    let rhs = BigUint::from(params.big_k()) * x1 * x2 * x3;
    (lhs, rhs)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledEntry {
    pub m: BigUint,
    pub label: Label,
}

/// A vertex `((m, i), (m, i), (m, i))` of the labeled GM tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledTriple(pub [LabeledEntry; 3]);

impl LabeledTriple {
    pub fn root(params: &GmParams) -> Self {
        let s = params.sigma;
        LabeledTriple([
            LabeledEntry { m: BigUint::one(), label: s.apply(1) },
            LabeledEntry { m: BigUint::from(params.k_sigma(2) + 2), label: s.apply(2) },
            LabeledEntry { m: BigUint::one(), label: s.apply(3) },
        ])
    }

    pub fn left(&self) -> &LabeledEntry {
        &self.0[0]
    }

    pub fn mid(&self) -> &LabeledEntry {
        &self.0[1]
    }

    pub fn right(&self) -> &LabeledEntry {
        &self.0[2]
    }

    /// The values placed at their labeled coordinates `(x1, x2, x3)`.
    pub fn positioned(&self) -> [BigUint; 3] {
        let mut out = [BigUint::zero(), BigUint::zero(), BigUint::zero()];
        for e in &self.0 {
            out[(e.label - 1) as usize] = e.m.clone();
        }
        out
    }

    pub fn labels_are_permutation(&self) -> bool {
        Sigma::new([self.0[0].label, self.0[1].label, self.0[2].label]).is_ok()
    }

    pub fn solves(&self, params: &GmParams) -> bool {
        let [x1, x2, x3] = self.positioned();
        self.labels_are_permutation() && gm_verify(&x1, &x2, &x3, params)
    }

    pub fn pairwise_coprime(&self) -> bool {
        let [a, b, c] = [&self.0[0].m, &self.0[1].m, &self.0[2].m];
        a.gcd(b).is_one() && b.gcd(c).is_one() && a.gcd(c).is_one()
    }
}

impl fmt::Display for LabeledTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.0;
        write!(
            f,
            "(({},{}),({},{}),({},{}))",
            a.m, a.label, b.m, b.label, c.m, c.label
        )
    }
}

impl Serialize for LabeledTriple {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(3))?;
        for e in &self.0 {
            seq.serialize_element(&(e.m.to_string(), e.label))?;
        }
        seq.end()
    }
}

fn exact_div(num: BigUint, den: &BigUint) -> Result<BigUint> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::Integrality(format!("{num} / {den}")));
    }
    Ok(q)
}

/// Left and right children of a labeled vertex.
pub fn gm_children(v: &LabeledTriple, params: &GmParams) -> Result<(LabeledTriple, LabeledTriple)> {
    Ok((gm_child(v, Move::Left, params)?, gm_child(v, Move::Right, params)?))
}

pub fn gm_child(v: &LabeledTriple, mv: Move, params: &GmParams) -> Result<LabeledTriple> {
    let [x, y, z] = &v.0;
    let (a, h) = (&x.m, x.label);
    let b = &y.m;
    let (c, j) = (&z.m, z.label);
    Ok(match mv {
        Move::Left => {
            let m = exact_div(a * a + BigUint::from(params.k(j)) * a * b + b * b, c)?;
            LabeledTriple([x.clone(), LabeledEntry { m, label: j }, y.clone()])
        }
        Move::Right => {
            let m = exact_div(b * b + BigUint::from(params.k(h)) * b * c + c * c, a)?;
            LabeledTriple([y.clone(), LabeledEntry { m, label: h }, z.clone()])
        }
    })
}

/// The labeled vertex matching `t`.
pub fn gm_vertex(t: ExtRational, params: &GmParams) -> Result<LabeledTriple> {
    let path = farey_path(t)?;
    let mut v = LabeledTriple::root(params);
    for &mv in &path.moves {
        v = gm_child(&v, mv, params)?;
    }
    Ok(v)
}

/// `(m_t, i_t)`.
pub fn gm_at(t: ExtRational, params: &GmParams) -> Result<(BigUint, Label)> {
    let v = gm_vertex(t, params)?;
    let LabeledEntry { m, label } = v.0[1].clone();
    Ok((m, label))
}

/// `k_t = k_{i_t}`.
pub fn k_of(t: ExtRational, params: &GmParams) -> Result<u64> {
    Ok(params.k(gm_at(t, params)?.1))
}

/// Characteristic number of a vertex: the `u` with `m_r u = m_s (mod m_t)`, `0 < u < m_t`.
pub fn characteristic_of(v: &LabeledTriple) -> Result<BigUint> {
    let (mr, mt, ms) = (&v.0[0].m, &v.0[1].m, &v.0[2].m);
    if mt <= &BigUint::one() {
        return Err(Error::Invariant(format!("middle GM number {mt} must exceed 1")));
    }
    let inv = mod_inverse(mr, mt)?;
    let u = (inv * ms) % mt;
    if u.is_zero() {
        return Err(Error::Invariant(format!("characteristic number of {v} is 0")));
    }
    Ok(u)
}

pub fn characteristic(t: ExtRational, params: &GmParams) -> Result<BigUint> {
    characteristic_of(&gm_vertex(t, params)?)
}

fn mod_inverse(a: &BigUint, m: &BigUint) -> Result<BigUint> {
    let a = BigInt::from(a.clone());
    let m = BigInt::from(m.clone());
    let e = a.extended_gcd(&m);
    if !e.gcd.is_one() {
        return Err(Error::Invariant(format!("gcd({a}, {m}) = {} != 1", e.gcd)));
    }
    Ok(e.x.mod_floor(&m).to_biguint().expect("mod_floor is nonnegative"))
}

/// Breadth-first enumeration of the labeled tree to `depth`, paired with Farey vertices.
pub fn gm_enumerate(depth: u32, params: &GmParams) -> Result<Vec<(FareyTriple, LabeledTriple)>> {
    let limit = max_depth();
    if depth > limit {
        return Err(Error::ResourceLimit {
            what: "tree depth",
            requested: depth as u64,
            limit: limit as u64,
        });
    }
    let mut out = vec![(FareyTriple::root(), LabeledTriple::root(params))];
    let mut level_start = 0;
    for _ in 0..depth {
        let level_end = out.len();
        for i in level_start..level_end {
            let (f, v) = out[i].clone();
            let (l, r) = gm_children(&v, params)?;
            out.push((f.left_child(), l));
            out.push((f.right_child(), r));
        }
        level_start = level_end;
    }
    Ok(out)
}
