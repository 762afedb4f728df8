//! The bar involution of a twisted Fock space and its canonical basis.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::sync::{Arc, Mutex};

use crate::combinat::Multipartition;
use crate::error::{Error, Result};
use crate::fock::FockVector;
use crate::laurent::LaurentPoly;

use super::encode::{decode, encode, length_bound};
use super::straighten::{Schedule, Straightener};
use super::Multicharge;

/// Column `mu` of the bar matrix: `bar(s_mu) = Σ b_{la,mu} s_la`.
pub type BarColumn = BTreeMap<Multipartition, LaurentPoly>;

/// Bar coefficients `b_{la,mu}` computed from the first `l` entries.
pub fn bar_coefficients(mu: &Multipartition, mc: &Multicharge, l: usize) -> Result<BarColumn> {
    let mut st = Straightener::new(mc.e(), mc.rank());
    column_at(&mut st, mu, mc, l)
}

fn column_at(
    st: &mut Straightener,
    mu: &Multipartition,
    mc: &Multicharge,
    l: usize,
) -> Result<BarColumn> {
    let word = encode(mu, mc, l)?;
    let reversed: Vec<i64> = word.entries.iter().rev().copied().collect();
    let straight = st.straighten(&reversed, Schedule::Insertion);
    let lead = straight
        .coeff(&word.entries)
        .cloned()
        .ok_or_else(|| Error::Internal(format!("c_mu,mu = 0 for {mu} with multicharge {mc}")))?;
    let mut out = BarColumn::new();
    for (entries, c) in straight.iter() {
        let w = super::WedgeWord {
            entries: entries.clone(),
            charge: word.charge,
        };
        let (la, got) = decode(&w, mc.e(), mc.rank())?;
        if &got != mc {
            return Err(Error::Undecodable(format!(
                "straightening {mu} produced a wedge of multicharge {got}, expected {mc}"
            )));
        }
        let b = c
            .exact_div(&lead)
            .map_err(|_| Error::Internal(format!("normalising the bar of {mu} is not exact")))?;
        out.insert(la, b);
    }
    Ok(out)
}

/// Bar involution and canonical basis of the twisted Fock space of one
/// multicharge. Columns are memoised.
#[derive(Debug)]
pub struct WedgeOracle {
    mc: Multicharge,
    recheck: bool,
    straightener: Mutex<Straightener>,
    columns: Mutex<HashMap<Multipartition, Arc<BarColumn>>>,
}

impl WedgeOracle {
    pub fn new(mc: Multicharge) -> Self {
        let straightener = Mutex::new(Straightener::new(mc.e(), mc.rank()));
        WedgeOracle {
            mc,
            recheck: false,
            straightener,
            columns: Mutex::new(HashMap::new()),
        }
    }

    /// Also recompute every column with a longer prefix and fail if the two
    /// disagree.
    pub fn with_length_check(mut self, on: bool) -> Self {
        self.recheck = on;
        self
    }

    pub fn multicharge(&self) -> &Multicharge {
        &self.mc
    }

    fn er(&self) -> usize {
        self.mc.e() as usize * self.mc.rank()
    }

    /// The prefix length used for `mu`: long enough to hold every label of
    /// the same size, plus `e r`.
    pub fn length_for(&self, mu: &Multipartition) -> Result<usize> {
        if mu.rank() != self.mc.rank() {
            return Err(Error::RankMismatch {
                expected: self.mc.rank(),
                found: mu.rank(),
            });
        }
        Ok(length_bound(mu.size(), &self.mc)? + self.er())
    }

    pub fn bar_column(&self, mu: &Multipartition) -> Result<Arc<BarColumn>> {
        if let Some(c) = self.columns.lock().unwrap().get(mu) {
            return Ok(c.clone());
        }
        let l = self.length_for(mu)?;
        let col = self.column_with_length(mu, l)?;
        if self.recheck && self.column_with_length(mu, l + self.er())? != col {
            return Err(Error::Internal(format!(
                "bar coefficients of {mu} change between prefix lengths {l} and {}",
                l + self.er()
            )));
        }
        let col = Arc::new(col);
        let mut cols = self.columns.lock().unwrap();
        Ok(cols.entry(mu.clone()).or_insert(col).clone())
    }

    pub fn column_with_length(&self, mu: &Multipartition, l: usize) -> Result<BarColumn> {
        let mut st = self.straightener.lock().unwrap();
        column_at(&mut st, mu, &self.mc, l)
    }

    fn check_vector(&self, v: &FockVector) -> Result<()> {
        if v.charge() != &self.mc.reduce() {
            return Err(Error::ContextMismatch(format!(
                "vector has charge {}, oracle has multicharge {}",
                v.charge(),
                self.mc
            )));
        }
        Ok(())
    }

    /// The semi-linear bar involution applied to `v`.
    pub fn bar(&self, v: &FockVector) -> Result<FockVector> {
        self.check_vector(v)?;
        let mut out = FockVector::zero(v.charge().clone());
        for (mu, c) in v.iter() {
            let cb = c.bar();
            for (la, b) in self.bar_column(mu)?.iter() {
                out.add_term(la.clone(), &(&cb * b));
            }
        }
        Ok(out)
    }

    /// The canonical basis vector of the twisted Fock space labelled `mu`:
    /// bar-invariant, coefficient 1 at `mu` and `qZ[q]` elsewhere.
    pub fn canonical_basis_twisted(&self, mu: &Multipartition) -> Result<FockVector> {
        // labels reachable from mu through bar columns
        let mut cols: BTreeMap<Multipartition, Arc<BarColumn>> = BTreeMap::new();
        let mut queue = VecDeque::from([mu.clone()]);
        while let Some(la) = queue.pop_front() {
            if cols.contains_key(&la) {
                continue;
            }
            let col = self.bar_column(&la)?;
            if col.get(&la).is_none_or(|b| !b.is_one()) {
                return Err(Error::Internal(format!("b_la,la != 1 for {la}")));
            }
            queue.extend(col.keys().filter(|nu| !cols.contains_key(*nu)).cloned());
            cols.insert(la, col);
        }
        let order = topological(mu, &cols)?;
        let mut d: BTreeMap<Multipartition, LaurentPoly> = BTreeMap::new();
        d.insert(mu.clone(), LaurentPoly::one());
        for nu in order.iter().skip(1) {
            let mut rhs = LaurentPoly::zero();
            for (la, dl) in &d {
                if let Some(b) = cols[la].get(nu) {
                    rhs += &(&dl.bar() * b);
                }
            }
            if rhs.bar() != -&rhs {
                return Err(Error::Internal(format!(
                    "triangular system for {mu} is inconsistent at {nu}: {rhs}"
                )));
            }
            let positive = LaurentPoly::from_terms(
                rhs.terms()
                    .filter(|(k, _)| *k > 0)
                    .map(|(k, c)| (k, c.clone())),
            );
            if !positive.is_zero() {
                d.insert(nu.clone(), positive);
            }
        }
        FockVector::from_terms(self.mc.reduce(), d)
    }
}

/// Kahn order of the labels in `cols`, starting at `mu`; an edge runs from
/// `la` to every other label in its bar column.
fn topological(
    mu: &Multipartition,
    cols: &BTreeMap<Multipartition, Arc<BarColumn>>,
) -> Result<Vec<Multipartition>> {
    let mut indegree: BTreeMap<&Multipartition, usize> = cols.keys().map(|k| (k, 0)).collect();
    for (la, col) in cols {
        for nu in col.keys().filter(|nu| *nu != la) {
            *indegree.get_mut(nu).expect("reachable set is closed") += 1;
        }
    }
    if indegree[mu] != 0 {
        return Err(Error::Internal(format!(
            "bar matrix is not triangular above {mu}"
        )));
    }
    // ties resolved greatest-first for a deterministic order
    let mut ready: BTreeSet<&Multipartition> = BTreeSet::from([mu]);
    let mut out = Vec::with_capacity(cols.len());
    while let Some(la) = ready.pop_last() {
        out.push(la.clone());
        for nu in cols[la].keys().filter(|nu| *nu != la) {
            let k = indegree.get_mut(nu).unwrap();
            *k -= 1;
            if *k == 0 {
                ready.insert(nu);
            }
        }
    }
    if out.len() != cols.len() {
        return Err(Error::Internal(format!(
            "bar matrix has a cycle below {mu}"
        )));
    }
    Ok(out)
}
