//! Runs every cross-identity for one slope and parameter set.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::cohnwords::{christoffel, cohn_from_omega, cohn_tree};
use crate::error::{Error, Result};
use crate::fenceposet::{cf_numden, n_of};
use crate::gmtree::{gm_vertex, GmParams};
use crate::matrix2::{
    evaluate, fs_product, gc_explicit, gc_from_completed, gc_recursive, monodromy, n_entry_matrix, Mat2,
};
use crate::rational::ExtRational;
use crate::signseq::{gm_sequence, strongly_admissible};
use crate::words::{omega_completed, omega_geometric, omega_tree, CompletionMode, FreeWord};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub t: ExtRational,
    pub k: [u64; 3],
    pub sigma: [u8; 3],
    pub checks: Vec<Check>,
    /// The (1,1) entry of `M_t` read as a continued-fraction denominator.
    /// Observed, never asserted.
    pub denominator_conjecture: Check,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

fn check(name: &'static str, outcome: Result<Option<String>>) -> Check {
    match outcome {
        Ok(None) => Check { name, passed: true, detail: None },
        Ok(Some(d)) => Check { name, passed: false, detail: Some(d) },
        Err(e) => Check { name, passed: false, detail: Some(e.to_string()) },
    }
}

fn expect_eq<T: PartialEq + std::fmt::Display>(what: &str, a: &T, b: &T) -> Option<String> {
    (a != b).then(|| format!("{what}: {a} != {b}"))
}

/// Checks for one slope; boundary slopes are rejected up front.
pub fn verify_slope(t: ExtRational, params: &GmParams) -> Result<Report> {
    let t = t.require_interior()?;
    let mut checks = Vec::new();

    checks.push(check("omega geometric = word tree", (|| {
        Ok(expect_eq("omega", &omega_geometric(t), &omega_tree(t)?))
    })()));

    checks.push(check("completed word geometric = xyz omega^-1", (|| {
        let geo = omega_completed(t, CompletionMode::Geometric)?;
        let alg = omega_completed(t, CompletionMode::Algebraic)?;
        Ok(expect_eq("completed omega", &geo, &alg))
    })()));

    checks.push(check("GM equation at vertex", (|| {
        let v = gm_vertex(t, params)?;
        Ok((!v.solves(params) || !v.pairwise_coprime()).then(|| format!("{v} fails for {params}")))
    })()));

    checks.push(check("N(s°) = m_t", (|| {
        let s = gm_sequence(t, params)?;
        let m = gm_vertex(t, params)?.mid().m.clone();
        Ok(expect_eq("N(s°)", &n_of(&s.runs)?, &m))
    })()));

    checks.push(check("monodromy entry formulas", monodromy(t, params).map(|_| None)));

    checks.push(check("Cohn matrix five-way agreement", (|| {
        let rec = gc_recursive(t, params)?;
        let candidates: [(&str, Mat2); 4] = [
            ("explicit", gc_explicit(t, params)?),
            ("continued fraction", fs_product(&strongly_admissible(t, params)?)),
            ("sign-corrected completed", gc_from_completed(t, params)?),
            ("ideal counts", n_entry_matrix(&strongly_admissible(t, params)?)?),
        ];
        Ok(candidates
            .iter()
            .find(|(_, m)| *m != rec)
            .map(|(name, m)| format!("recursive {rec} != {name} {m}")))
    })()));

    checks.push(check("determinants equal 1", (|| {
        let m = monodromy(t, params)?;
        let c = gc_recursive(t, params)?;
        Ok((!m.det().is_one() || !c.det().is_one())
            .then(|| format!("det M = {}, det C = {}", m.det(), c.det())))
    })()));

    checks.push(check("XYZ = [-1, K; 0, -1]", (|| {
        let k = BigInt::from(params.big_k());
        let expected = Mat2::new(-1, k, 0, -1);
        Ok(expect_eq("XYZ", &evaluate(&FreeWord::xyz(), params), &expected))
    })()));

    if t != ExtRational::ONE {
        checks.push(check("Cohn word three-way agreement", (|| {
            let c = christoffel(t);
            if let Some(d) = expect_eq("tree", &cohn_tree(t)?.to_string(), &c.to_string()) {
                return Ok(Some(d));
            }
            let sub = cohn_from_omega(&omega_geometric(t), t)?;
            if let Some(d) = expect_eq("substitution", &sub.to_string(), &c.to_string()) {
                return Ok(Some(d));
            }
            Ok((!c.interior_is_palindrome()).then(|| format!("interior of {c} is not a palindrome")))
        })()));
    }

    let denominator_conjecture = check("M_t (1,1) entry = denominator of s°", (|| {
        let s = gm_sequence(t, params)?;
        let (_, den) = cf_numden(&s.runs)?;
        let m = monodromy(t, params)?;
        Ok(expect_eq("denominator", &m.e11, &BigInt::from(den)))
    })());

    Ok(Report {
        t,
        k: params.k,
        sigma: params.sigma.images(),
        checks,
        denominator_conjecture,
    })
}

/// Like `verify_slope` but turns the first failure into an error.
pub fn require_all(t: ExtRational, params: &GmParams) -> Result<Report> {
    let report = verify_slope(t, params)?;
    if let Some(c) = report.first_failure() {
        return Err(Error::CrossCheck(format!(
            "{}: {}",
            c.name,
            c.detail.clone().unwrap_or_default()
        )));
    }
    Ok(report)
}
