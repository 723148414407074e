//! Fence posets built from positive sequences, and their order ideals.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Largest poset `enumerate_ideals` will brute-force.
pub const ENUMERATION_LIMIT: usize = 20;

/// Elements `1..=size`; `up[x-1]` is true iff `x` is covered by `x+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FencePoset {
    pub size: usize,
    pub up: Vec<bool>,
}

impl FencePoset {
    pub fn empty() -> Self {
        FencePoset { size: 0, up: Vec::new() }
    }

    /// Cover relations as `(lower, upper)` pairs.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.up
            .iter()
            .enumerate()
            .map(|(i, &up)| {
                let x = i + 1;
                if up {
                    (x, x + 1)
                } else {
                    (x + 1, x)
                }
            })
            .collect()
    }
}

pub fn fence_from_sequence(seq: &[u64]) -> Result<FencePoset> {
    if let Some(pos) = seq.iter().position(|&a| a == 0) {
        return Err(Error::InvalidSequence(format!(
            "entry {} is 0; entries must be positive",
            pos + 1
        )));
    }
    let total: u64 = seq.iter().sum();
    if total == 0 {
        return Ok(FencePoset::empty());
    }
    let size = (total - 1) as usize;
    let mut up = Vec::with_capacity(size.saturating_sub(1));
    // x lies in block j when s_{j-1} <= x < s_j (partial sums)
    let mut block = 1usize;
    let mut bound = seq[0];
    for x in 1..size as u64 {
        while x >= bound {
            bound += seq[block];
            block += 1;
        }
        up.push(block % 2 == 1);
    }
    Ok(FencePoset { size, up })
}

/// Number of order ideals, including the empty one.
pub fn count_ideals(p: &FencePoset) -> BigUint {
    if p.size == 0 {
        return BigUint::one();
    }
    // ideals of {1..x} split by whether x is in them
    let mut with = BigUint::one();
    let mut without = BigUint::one();
    for &up in &p.up {
        if up {
            // x < x+1: x+1 needs x
            let w = with.clone();
            without = &with + &without;
            with = w;
        } else {
            // x+1 < x: x needs x+1
            with = &with + &without;
        }
    }
    with + without
}

/// All order ideals as bitmasks over `1..=size` (bit `x-1` for element `x`).
pub fn enumerate_ideal_masks(p: &FencePoset) -> Result<Vec<u32>> {
    if p.size > ENUMERATION_LIMIT {
        return Err(Error::ResourceLimit {
            what: "fence size for ideal enumeration",
            requested: p.size as u64,
            limit: ENUMERATION_LIMIT as u64,
        });
    }
    let covers = p.covers();
    let ideals = (0u32..1 << p.size)
        .filter(|&mask| {
            covers.iter().all(|&(lo, hi)| {
                let has = |x: usize| mask >> (x - 1) & 1 == 1;
                !has(hi) || has(lo)
            })
        })
        .collect();
    Ok(ideals)
}

pub fn enumerate_ideals(p: &FencePoset) -> Result<Vec<BTreeSet<usize>>> {
    Ok(enumerate_ideal_masks(p)?
        .into_iter()
        .map(|mask| (1..=p.size).filter(|x| mask >> (x - 1) & 1 == 1).collect())
        .collect())
}

/// `N(a_1, ..., a_n)`, the ideal count of the fence of `seq`; `N() = 1`.
pub fn n_of(seq: &[u64]) -> Result<BigUint> {
    Ok(count_ideals(&fence_from_sequence(seq)?))
}

/// Numerator and denominator of `[a_1; a_2, ..., a_n]`; `(1, 0)` when empty.
pub fn cf_numden(seq: &[u64]) -> Result<(BigUint, BigUint)> {
    if seq.contains(&0) {
        return Err(Error::InvalidSequence(format!("{seq:?} has a zero entry")));
    }
    // h_n = a_n h_{n-1} + h_{n-2}, same for k
    let (mut h, mut h_prev) = (BigUint::one(), BigUint::zero());
    let (mut k, mut k_prev) = (BigUint::zero(), BigUint::one());
    for &a in seq {
        let a = BigUint::from(a);
        let h_next = &a * &h + &h_prev;
        let k_next = &a * &k + &k_prev;
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
    }
    Ok((h, k))
}
