//! Exact 2x2 integer matrices and the matrix forms attached to a slope.

use std::fmt;
use std::ops::{Mul, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fenceposet::n_of;
use crate::gmtree::{characteristic_of, gm_vertex, GmParams, Label, LabeledTriple};
use crate::rational::{farey_path, ExtRational, Move};
use crate::signseq::{gm_sequence, strongly_admissible, RunLengthSequence};
use crate::words::{omega_completed, omega_geometric, CompletionMode, FreeWord, Generator};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub e11: BigInt,
    pub e12: BigInt,
    pub e21: BigInt,
    pub e22: BigInt,
}

impl Mat2 {
    pub fn new(e11: impl Into<BigInt>, e12: impl Into<BigInt>, e21: impl Into<BigInt>, e22: impl Into<BigInt>) -> Self {
        Mat2 {
            e11: e11.into(),
            e12: e12.into(),
            e21: e21.into(),
            e22: e22.into(),
        }
    }

    pub fn identity() -> Self {
        Mat2::new(1, 0, 0, 1)
    }

    pub fn det(&self) -> BigInt {
        &self.e11 * &self.e22 - &self.e12 * &self.e21
    }

    pub fn adjugate(&self) -> Mat2 {
        Mat2 {
            e11: self.e22.clone(),
            e12: -&self.e12,
            e21: -&self.e21,
            e22: self.e11.clone(),
        }
    }

    /// Exact inverse; only defined for determinant `+-1`.
    pub fn inverse(&self) -> Result<Mat2> {
        let d = self.det();
        if d.is_one() {
            Ok(self.adjugate())
        } else if d == -BigInt::one() {
            let a = self.adjugate();
            Ok(Mat2 {
                e11: -a.e11,
                e12: -a.e12,
                e21: -a.e21,
                e22: -a.e22,
            })
        } else {
            Err(Error::Invariant(format!("{self} has determinant {d}, not invertible over Z")))
        }
    }

    pub fn rows(&self) -> [[&BigInt; 2]; 2] {
        [[&self.e11, &self.e12], [&self.e21, &self.e22]]
    }

    /// `diag(a, b)`.
    pub fn diag(a: i64, b: i64) -> Mat2 {
        Mat2::new(a, 0, 0, b)
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;

    fn mul(self, o: &Mat2) -> Mat2 {
        Mat2 {
            e11: &self.e11 * &o.e11 + &self.e12 * &o.e21,
            e12: &self.e11 * &o.e12 + &self.e12 * &o.e22,
            e21: &self.e21 * &o.e11 + &self.e22 * &o.e21,
            e22: &self.e21 * &o.e12 + &self.e22 * &o.e22,
        }
    }
}

impl Sub for &Mat2 {
    type Output = Mat2;

    fn sub(self, o: &Mat2) -> Mat2 {
        Mat2 {
            e11: &self.e11 - &o.e11,
            e12: &self.e12 - &o.e12,
            e21: &self.e21 - &o.e21,
            e22: &self.e22 - &o.e22,
        }
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}; {}, {}]", self.e11, self.e12, self.e21, self.e22)
    }
}

impl Serialize for Mat2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            rows: [[String; 2]; 2],
        }
        Repr {
            rows: [
                [self.e11.to_string(), self.e12.to_string()],
                [self.e21.to_string(), self.e22.to_string()],
            ],
        }
        .serialize(serializer)
    }
}

fn int(n: u64) -> BigInt {
    BigInt::from(n)
}

fn signed(n: &BigUint) -> BigInt {
    BigInt::from(n.clone())
}

/// The generator matrices `(X, Y, Z)`.
pub fn generators(params: &GmParams) -> (Mat2, Mat2, Mat2) {
    let k1 = int(params.k_sigma(1));
    let k2 = int(params.k_sigma(2));
    let k3 = int(params.k_sigma(3));
    let x = Mat2::new(-k1, -1, 1, 0);
    let y = Mat2::new(1, -1, &k2 + 2, -&k2 - 1);
    let z = Mat2::new(1, -&k3 - 2, 1, -&k3 - 1);
    (x, y, z)
}

/// Substitutes the generator matrices into `w`, read left to right.
pub fn evaluate(w: &FreeWord, params: &GmParams) -> Mat2 {
    let (x, y, z) = generators(params);
    let (xi, yi, zi) = (x.adjugate(), y.adjugate(), z.adjugate());
    w.letters().iter().fold(Mat2::identity(), |acc, l| {
        let m = match (l.generator, l.inverted) {
            (Generator::X, false) => &x,
            (Generator::Y, false) => &y,
            (Generator::Z, false) => &z,
            (Generator::X, true) => &xi,
            (Generator::Y, true) => &yi,
            (Generator::Z, true) => &zi,
        };
        &acc * m
    })
}

/// `(m_t, u_t, k_t)` at the vertex of `t`.
pub struct SlopeData {
    pub vertex: LabeledTriple,
    pub m: BigInt,
    pub u: BigInt,
    pub k: BigInt,
}

pub fn slope_data(t: ExtRational, params: &GmParams) -> Result<SlopeData> {
    let vertex = gm_vertex(t, params)?;
    let u = signed(&characteristic_of(&vertex)?);
    let m = signed(&vertex.mid().m);
    let k = int(params.k(vertex.mid().label));
    Ok(SlopeData { vertex, m, u, k })
}

fn exact_div(num: BigInt, den: &BigInt, what: &str) -> Result<BigInt> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::Integrality(format!("{what}: {num} / {den}")));
    }
    Ok(q)
}

/// `[u, -(u^2 + k u + 1)/m; m, -(u + k)]`.
pub fn monodromy_formula(t: ExtRational, params: &GmParams) -> Result<Mat2> {
    let SlopeData { m, u, k, .. } = slope_data(t, params)?;
    let e12 = -exact_div(&u * &u + &k * &u + 1, &m, "monodromy (1,2) entry")?;
    Ok(Mat2 {
        e11: u.clone(),
        e12,
        e21: m,
        e22: -(u + k),
    })
}

/// `[N(a2..an), -N(a2..a(n-1)); N(a1..an), -N(a1..a(n-1))]` for `s = (a1..an)`.
pub fn monodromy_ideal_form(seq: &RunLengthSequence) -> Result<Mat2> {
    let a = &seq.runs;
    if a.is_empty() {
        return Err(Error::InvalidSequence("empty sequence".into()));
    }
    let n = a.len();
    let tail = if n >= 2 { &a[1..n - 1] } else { &a[1..1] };
    Ok(Mat2::new(
        signed(&n_of(&a[1..])?),
        -signed(&n_of(tail)?),
        signed(&n_of(a)?),
        -signed(&n_of(&a[..n - 1])?),
    ))
}

/// `M_t`, with both entry forms cross-checked.
pub fn monodromy(t: ExtRational, params: &GmParams) -> Result<Mat2> {
    let t = t.require_interior()?;
    let m = evaluate(&omega_geometric(t), params);
    let formula = monodromy_formula(t, params)?;
    if m != formula {
        return Err(Error::CrossCheck(format!(
            "monodromy of {t}: word gives {m}, entry formula gives {formula}"
        )));
    }
    let ideal = monodromy_ideal_form(&gm_sequence(t, params)?)?;
    if m != ideal {
        return Err(Error::CrossCheck(format!(
            "monodromy of {t}: word gives {m}, ideal counts give {ideal}"
        )));
    }
    Ok(m)
}

/// `M-bar_t`, the evaluation of the completed word.
pub fn monodromy_completed(t: ExtRational, params: &GmParams) -> Result<Mat2> {
    let w = omega_completed(t, CompletionMode::Geometric)?;
    Ok(evaluate(&w, params))
}

/// `prod [a_i, 1; 1, 0]`.
pub fn fs_product(seq: &RunLengthSequence) -> Mat2 {
    seq.runs
        .iter()
        .fold(Mat2::identity(), |acc, &a| &acc * &Mat2::new(a, 1, 1, 0))
}

/// `[N(a0..al), N(a0..a(l-1)); N(a1..al), N(a1..a(l-1))]`.
pub fn n_entry_matrix(seq: &RunLengthSequence) -> Result<Mat2> {
    let a = &seq.runs;
    if a.is_empty() {
        return Ok(Mat2::identity());
    }
    let l = a.len();
    let inner = if l >= 2 { &a[1..l - 1] } else { &a[1..1] };
    // N(a1..a0) for a single entry is the empty-range convention N() = 1,
    // but F_(a) = [a, 1; 1, 0] needs 0 in the corner
    let e22 = if l == 1 { BigInt::zero() } else { signed(&n_of(inner)?) };
    Ok(Mat2::new(
        signed(&n_of(a)?),
        signed(&n_of(&a[..l - 1])?),
        signed(&n_of(&a[1..])?),
        e22,
    ))
}

/// `(C_{0/1}, C_{1/1}, C_{1/0})`.
pub fn gc_initial(params: &GmParams) -> (Mat2, Mat2, Mat2) {
    let big_k = int(params.big_k());
    let k1 = int(params.k_sigma(1));
    let k2 = int(params.k_sigma(2));
    let k3 = int(params.k_sigma(3));
    let c0 = Mat2::new(big_k.clone(), -(&big_k * &k1) - 1, 1, -k1);
    let c1 = Mat2::new(&big_k * (&k2 + 2) - &k2 - 1, &big_k - 1, &k2 + 2, 1);
    let cinf = Mat2::new(&big_k - &k3 - 1, &big_k - &k3 - 2, 1, 1);
    (c0, c1, cinf)
}

fn d_matrix(label: Label, params: &GmParams) -> Mat2 {
    let k = int(params.k(label));
    let big_k = int(params.big_k());
    Mat2::new(k.clone(), &big_k * &k, 0, k)
}

/// `C_t` by the recursion `C_{r+t} = C_r C_t - D_s`, `C_{t+s} = C_t C_s - D_r`.
pub fn gc_recursive(t: ExtRational, params: &GmParams) -> Result<Mat2> {
    let path = farey_path(t)?;
    let (c0, c1, cinf) = gc_initial(params);
    let s = params.sigma;
    let init = [(c0, s.apply(1)), (c1, s.apply(2)), (cinf, s.apply(3))];
    let [_, (mid, _), _] = path.walk(init, |[l, m, r], mv| match mv {
        Move::Left => {
            let c = &(&l.0 * &m.0) - &d_matrix(r.1, params);
            [l, (c, r.1), m]
        }
        Move::Right => {
            let c = &(&m.0 * &r.0) - &d_matrix(l.1, params);
            [m, (c, l.1), r]
        }
    });
    Ok(mid)
}

/// `[K m - k - u, (K m u - k u - u^2 - 1)/m; m, u]`.
pub fn gc_explicit(t: ExtRational, params: &GmParams) -> Result<Mat2> {
    let SlopeData { m, u, k, .. } = slope_data(t, params)?;
    let big_k = int(params.big_k());
    let e12 = exact_div(&big_k * &m * &u - &k * &u - &u * &u - 1, &m, "Cohn matrix (1,2) entry")?;
    Ok(Mat2 {
        e11: &big_k * &m - &k - &u,
        e12,
        e21: m,
        e22: u,
    })
}

/// `C_t` from the strongly admissible sequence.
pub fn gc_from_sequence(t: ExtRational, params: &GmParams) -> Result<Mat2> {
    Ok(fs_product(&strongly_admissible(t, params)?))
}

/// `diag(-1, 1) M-bar_t diag(1, -1)`.
pub fn gc_from_completed(t: ExtRational, params: &GmParams) -> Result<Mat2> {
    let m = monodromy_completed(t, params)?;
    Ok(&(&Mat2::diag(-1, 1) * &m) * &Mat2::diag(1, -1))
}
