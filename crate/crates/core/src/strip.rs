//! The correction loop shared by the level-one and higher-level algorithms:
//! subtract bar-symmetric multiples of lower canonical vectors until every
//! coefficient other than the leading one lies in `qZ[q]`.

use std::sync::{Arc, Mutex};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::combinat::Multipartition;
use crate::error::{Error, Result};
use crate::fock::FockVector;

/// How to pick among several dominance-maximal offending labels.
///
/// The final vector does not depend on the choice; the randomised variant
/// exists to check exactly that.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TieBreak {
    /// The largest label in the dominance-compatible total order.
    #[default]
    Greatest,
    /// A uniformly random dominance-maximal label, from a seeded generator.
    Random(u64),
}

#[derive(Debug)]
pub(crate) struct Chooser {
    kind: TieBreak,
    rng: Mutex<StdRng>,
}

impl Chooser {
    pub(crate) fn new(kind: TieBreak) -> Self {
        let seed = match kind {
            TieBreak::Greatest => 0,
            TieBreak::Random(seed) => seed,
        };
        Chooser {
            kind,
            rng: Mutex::new(StdRng::seed_from_u64(seed)),
        }
    }

    pub(crate) fn kind(&self) -> TieBreak {
        self.kind
    }

    /// Picks one offender; `offenders` is sorted increasingly.
    fn pick<'a>(&self, offenders: &[&'a Multipartition]) -> &'a Multipartition {
        match self.kind {
            TieBreak::Greatest => offenders[offenders.len() - 1],
            TieBreak::Random(_) => {
                let maximal: Vec<&Multipartition> = offenders
                    .iter()
                    .filter(|nu| {
                        !offenders
                            .iter()
                            .any(|xi| xi != *nu && xi.dominates_unchecked(nu))
                    })
                    .copied()
                    .collect();
                let idx = self.rng.lock().unwrap().gen_range(0..maximal.len());
                maximal[idx]
            }
        }
    }
}

/// Strips `a` down to the canonical vector labelled `mu`.
///
/// `provider` returns the already-known canonical vector of a label that
/// must be subtracted; it is where callers assert their structural
/// guarantees about which labels can occur.
pub(crate) fn strip<P>(
    mut a: FockVector,
    mu: &Multipartition,
    chooser: &Chooser,
    mut provider: P,
) -> Result<FockVector>
where
    P: FnMut(&Multipartition) -> Result<Arc<FockVector>>,
{
    loop {
        let offenders: Vec<&Multipartition> = a
            .iter()
            .filter(|(la, c)| *la != mu && !c.in_qzq())
            .map(|(la, _)| la)
            .collect();
        if offenders.is_empty() {
            return Ok(a);
        }
        let nu = chooser.pick(&offenders).clone();
        let alpha = a
            .coeff(&nu)
            .expect("offender is in the support")
            .alpha_extract()
            .into_inner();
        let g = provider(&nu)?;
        if g.coeff(&nu).is_none_or(|c| !c.is_one()) {
            return Err(Error::Internal(format!(
                "canonical vector for {nu} is not unitriangular"
            )));
        }
        a.add_scaled(&g, &-alpha)?;
    }
}
