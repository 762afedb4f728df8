//! The level-one LLT algorithm.
//!
//! For an `e`-regular partition `mu`, the auxiliary vector applies one
//! divided power per non-empty ladder of `mu` (in increasing ladder order)
//! to the vacuum. It is bar-invariant, has leading coefficient 1 at `mu`
//! and is supported on labels dominated by `mu`, so stripping it against
//! previously computed canonical vectors yields `G(mu)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::combinat::{Charge, Multipartition, Partition};
use crate::error::{Error, Result};
use crate::fock::FockVector;
use crate::strip::{strip, Chooser, TieBreak};

/// Memoising level-one engine for a fixed `(e, s1)`.
#[derive(Debug)]
pub struct LevelOne {
    charge: Charge,
    chooser: Chooser,
    cache: Mutex<HashMap<Partition, Arc<FockVector>>>,
}

impl LevelOne {
    pub fn new(e: u32, s1: u32) -> Result<Self> {
        Self::with_tie_break(e, s1, TieBreak::Greatest)
    }

    pub fn with_tie_break(e: u32, s1: u32, tie: TieBreak) -> Result<Self> {
        Ok(LevelOne {
            charge: Charge::new(e, [s1 as i64])?,
            chooser: Chooser::new(tie),
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn charge(&self) -> &Charge {
        &self.charge
    }

    fn check_regular(&self, mu: &Partition) -> Result<()> {
        let e = self.charge.e();
        if !mu.is_regular(e) {
            return Err(Error::NotRegular {
                label: mu.to_string(),
                e,
            });
        }
        Ok(())
    }

    /// `A(mu) = f_{i_t}^(a_t) ... f_{i_1}^(a_1) s_∅`.
    pub fn auxiliary_vector(&self, mu: &Partition) -> Result<FockVector> {
        self.check_regular(mu)?;
        let mut a = FockVector::vacuum(self.charge.clone());
        for ladder in mu.ladders(self.charge.e(), self.charge.get(1)) {
            a = a.apply_f_divided(ladder.residue, ladder.size)?;
        }
        Ok(a)
    }

    /// `G(mu)`, memoised.
    pub fn canonical(&self, mu: &Partition) -> Result<Arc<FockVector>> {
        if let Some(v) = self.cache.lock().unwrap().get(mu) {
            return Ok(v.clone());
        }
        let label = Multipartition::new(vec![mu.clone()])?;
        let a = self.auxiliary_vector(mu)?;
        check_triangular(&a, &label)?;
        let e = self.charge.e();
        let g = strip(a, &label, &self.chooser, |nu| {
            let part = &nu.components()[0];
            if !part.is_regular(e) {
                return Err(Error::Internal(format!(
                    "stripping reached {nu}, which is not {e}-regular"
                )));
            }
            self.canonical(part)
        })?;
        let g = Arc::new(g);
        let mut cache = self.cache.lock().unwrap();
        Ok(cache.entry(mu.clone()).or_insert(g).clone())
    }
}

/// James's lemma: `a_mu = 1` and `a_nu != 0` only for `mu ⊵ nu`.
fn check_triangular(a: &FockVector, mu: &Multipartition) -> Result<()> {
    if a.coeff(mu).is_none_or(|c| !c.is_one()) {
        return Err(Error::Internal(format!(
            "A({mu}) has leading coefficient != 1"
        )));
    }
    if let Some(nu) = a.labels().find(|nu| !mu.dominates_unchecked(nu)) {
        return Err(Error::Internal(format!(
            "A({mu}) has term {nu} not dominated by it"
        )));
    }
    Ok(())
}

pub fn auxiliary_vector(mu: &Partition, e: u32, s1: u32) -> Result<FockVector> {
    LevelOne::new(e, s1)?.auxiliary_vector(mu)
}

pub fn llt_canonical(mu: &Partition, e: u32, s1: u32) -> Result<FockVector> {
    Ok((*LevelOne::new(e, s1)?.canonical(mu)?).clone())
}
