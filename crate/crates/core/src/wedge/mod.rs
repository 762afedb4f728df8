//! Uglov's twisted Fock spaces through finite wedges.
//!
//! This is the slow, independent route to the bar involution: encode a
//! multipartition as an ordered wedge, reverse a long prefix, straighten it
//! back into ordered wedges and decode. The canonical basis of the twisted
//! space is then solved for directly. Nothing here depends on the ladder
//! algorithm in [`crate::canonical`].

mod encode;
mod oracle;
mod straighten;

pub use encode::{decode, encode, length_bound, minimal_length, WedgeWord};
pub use oracle::{bar_coefficients, WedgeOracle};
pub use straighten::{Schedule, Straightener, WedgeVector};

use std::fmt;

use crate::combinat::Charge;
use crate::error::{Error, Result};

/// An integer lift `(s~_1, ..., s~_r)` of a residue charge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multicharge {
    e: u32,
    lifts: Vec<i64>,
}

impl Multicharge {
    pub fn new(e: u32, lifts: impl Into<Vec<i64>>) -> Result<Self> {
        let lifts = lifts.into();
        if e < 2 {
            return Err(Error::InvalidCharge(format!(
                "modulus must be >= 2, got {e}"
            )));
        }
        if lifts.is_empty() {
            return Err(Error::InvalidCharge(
                "a multicharge needs at least one entry".into(),
            ));
        }
        Ok(Multicharge { e, lifts })
    }

    /// `s~_r = s_r`, and each earlier lift is the smallest value congruent
    /// to `s_k` that is at least `spacing` above the next one.
    pub fn with_spacing(s: &Charge, spacing: u32) -> Self {
        let e = s.e() as i64;
        let r = s.rank();
        let mut lifts = vec![0i64; r];
        lifts[r - 1] = s.get(r as u32) as i64;
        for k in (0..r - 1).rev() {
            let floor = lifts[k + 1] + spacing as i64;
            let want = s.residues()[k] as i64;
            lifts[k] = floor + (want - floor).rem_euclid(e);
        }
        Multicharge { e: s.e(), lifts }
    }

    /// The default spacing for labels of size `n`: `n + e r + 1`.
    pub fn default_spacing(e: u32, r: usize, n: u32) -> u32 {
        n + e * r as u32 + 1
    }

    pub fn well_spaced(s: &Charge, n: u32) -> Self {
        Self::with_spacing(s, Self::default_spacing(s.e(), s.rank(), n))
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn rank(&self) -> usize {
        self.lifts.len()
    }

    pub fn lifts(&self) -> &[i64] {
        &self.lifts
    }

    /// `s~_k`, 1-based.
    pub fn get(&self, k: usize) -> i64 {
        self.lifts[k - 1]
    }

    /// The charge `s = s~_1 + ... + s~_r` of the associated wedges.
    pub fn total(&self) -> i64 {
        self.lifts.iter().sum()
    }

    /// Smallest gap `s~_k - s~_{k+1}`; `None` at rank one.
    pub fn min_gap(&self) -> Option<i64> {
        self.lifts.windows(2).map(|w| w[0] - w[1]).min()
    }

    pub fn reduce(&self) -> Charge {
        Charge::new(self.e, self.lifts.iter().copied()).expect("validated on construction")
    }

    pub fn truncate(&self) -> Result<Multicharge> {
        if self.rank() < 2 {
            return Err(Error::TruncateRankOne);
        }
        Ok(Multicharge {
            e: self.e,
            lifts: self.lifts[1..].to_vec(),
        })
    }

    pub fn abc(&self, t: i64) -> Abc {
        Abc::of(t, self.e, self.rank())
    }
}

impl fmt::Display for Multicharge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.lifts.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `t = a + e(b - 1) - e r m` with `a` in `1..=e` and `b` in `1..=r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Abc {
    pub a: u32,
    pub b: u32,
    pub m: i64,
}

impl Abc {
    pub fn of(t: i64, e: u32, r: usize) -> Abc {
        let er = e as i64 * r as i64;
        let u = t - 1;
        let rem = u.rem_euclid(er);
        Abc {
            a: (rem % e as i64) as u32 + 1,
            b: (rem / e as i64) as u32 + 1,
            m: -u.div_euclid(er),
        }
    }

    pub fn value(&self, e: u32, r: usize) -> i64 {
        let e = e as i64;
        self.a as i64 + e * (self.b as i64 - 1) - e * r as i64 * self.m
    }
}

/// `t ∈ 𝟙`, i.e. `b(t) = 1`.
pub fn indicator_one(t: i64, e: u32, r: usize) -> bool {
    Abc::of(t, e, r).b == 1
}

/// `ψ(t) = a + e(b - 2) - e(r - 1)m`, the order-preserving bijection from
/// the complement of `𝟙` onto the integers.
pub fn psi(t: i64, e: u32, r: usize) -> Result<i64> {
    let x = Abc::of(t, e, r);
    if x.b == 1 {
        return Err(Error::OutOfDomain(format!(
            "psi is undefined on {t}, which lies in 𝟙"
        )));
    }
    let e = e as i64;
    Ok(x.a as i64 + e * (x.b as i64 - 2) - e * (r as i64 - 1) * x.m)
}

/// `X_c(v) = |[c, v] ∩ 𝟙|`.
pub fn x_c(c: i64, v: i64, e: u32, r: usize) -> u32 {
    (c..=v).filter(|&t| indicator_one(t, e, r)).count() as u32
}

/// `Y_c(v) = |[c, v] ∩ 𝟙 ∩ (v + eZ)|`.
pub fn y_c(c: i64, v: i64, e: u32, r: usize) -> u32 {
    (c..=v)
        .filter(|&t| (v - t) % e as i64 == 0 && indicator_one(t, e, r))
        .count() as u32
}
