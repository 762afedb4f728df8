//! Canonical basis vectors `G^s(mu)` of `M^{⊗s}` for `e`-multiregular `mu`.
//!
//! The recursion runs on two axes: the number of components (labels with an
//! empty first component reuse the answer one level down, shifted by an
//! empty component) and the size of the first component (otherwise the
//! ladders of `mu^(1)` drive divided powers applied to `G^s(mu_0)`, and the
//! result is stripped against canonical vectors strictly below `mu` in the
//! order `≽`: smaller first component, or equal size and dominated first
//! component).
//!
//! All intermediate vectors are memoised per `(s, mu)` inside a
//! [`CanonicalBasis`] engine, which is safe to share across threads.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use crate::combinat::{Charge, Multipartition};
use crate::error::{Error, Result};
use crate::fock::{weight_of, FockVector, WeightData};
use crate::laurent::LaurentPoly;
use crate::strip::{strip, Chooser};

pub use crate::strip::TieBreak;

/// A computed canonical basis vector together with its label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalBasisEntry {
    label: Multipartition,
    vector: Arc<FockVector>,
}

impl CanonicalBasisEntry {
    pub fn label(&self) -> &Multipartition {
        &self.label
    }

    pub fn vector(&self) -> &FockVector {
        &self.vector
    }

    pub fn charge(&self) -> &Charge {
        self.vector.charge()
    }

    /// `d_{la,mu}`; zero outside the support.
    pub fn coeff(&self, la: &Multipartition) -> LaurentPoly {
        self.vector.coeff(la).cloned().unwrap_or_default()
    }

    pub fn weight(&self) -> WeightData {
        weight_of(&self.label, self.vector.charge())
    }
}

type CacheKey = (Vec<u32>, Multipartition);

/// Memoising engine for one modulus `e`; charges of every rank share it.
#[derive(Debug)]
pub struct CanonicalBasis {
    e: u32,
    chooser: Chooser,
    cache: Mutex<HashMap<CacheKey, Arc<FockVector>>>,
}

impl CanonicalBasis {
    pub fn new(e: u32) -> Result<Self> {
        Self::with_tie_break(e, TieBreak::Greatest)
    }

    pub fn with_tie_break(e: u32, tie: TieBreak) -> Result<Self> {
        if e < 2 {
            return Err(Error::InvalidCharge(format!(
                "modulus must be >= 2, got {e}"
            )));
        }
        Ok(CanonicalBasis {
            e,
            chooser: Chooser::new(tie),
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn tie_break(&self) -> TieBreak {
        self.chooser.kind()
    }

    /// Number of memoised vectors, across all ranks.
    pub fn cached(&self) -> usize {
        self.cache.lock().unwrap().len()
    }

    fn check_charge(&self, s: &Charge) -> Result<()> {
        if s.e() != self.e {
            return Err(Error::ContextMismatch(format!(
                "engine has e = {}, charge has e = {}",
                self.e,
                s.e()
            )));
        }
        Ok(())
    }

    pub fn canonical_vector(&self, mu: &Multipartition, s: &Charge) -> Result<CanonicalBasisEntry> {
        self.check_charge(s)?;
        s.check_rank(mu)?;
        if !mu.is_multiregular(self.e) {
            return Err(Error::NotRegular {
                label: mu.to_string(),
                e: self.e,
            });
        }
        Ok(CanonicalBasisEntry {
            label: mu.clone(),
            vector: self.compute(mu, s)?,
        })
    }

    fn compute(&self, mu: &Multipartition, s: &Charge) -> Result<Arc<FockVector>> {
        let key = (s.residues().to_vec(), mu.clone());
        if let Some(v) = self.cache.lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let v = if mu.is_empty() {
            FockVector::vacuum(s.clone())
        } else if mu.component(1).is_empty() {
            let lower = self.compute(&mu.truncate()?, &s.truncate()?)?;
            lower.map_labels(s.clone(), Multipartition::extend)?
        } else {
            self.ladder_step(mu, s)?
        };
        check_entry(&v, mu, s)?;
        let v = Arc::new(v);
        let mut cache = self.cache.lock().unwrap();
        Ok(cache.entry(key).or_insert(v).clone())
    }

    /// Step 3: ladder divided powers on `G(mu_0)`, then stripping.
    fn ladder_step(&self, mu: &Multipartition, s: &Charge) -> Result<FockVector> {
        let g0 = self.compute(&mu.zero_first(), s)?;
        let mut a = (*g0).clone();
        for ladder in mu.component(1).ladders(self.e, s.get(1)) {
            a = a.apply_f_divided(ladder.residue, ladder.size)?;
        }
        check_auxiliary(&a, mu)?;
        strip(a, mu, &self.chooser, |nu| {
            if !nu.is_multiregular(self.e)
                || !mu.refine_gte_unchecked(nu)
                || nu.refine_gte_unchecked(mu)
            {
                return Err(Error::Internal(format!(
                    "stripping {mu} selected {nu}, which is not multiregular and strictly below it"
                )));
            }
            self.compute(nu, s)
        })
    }

    /// Every `e`-multiregular `mu` with `|mu| <= n`, ordered by size, then
    /// size of the first component, then the total order.
    pub fn basis_up_to(&self, n: u32, s: &Charge) -> Result<Vec<CanonicalBasisEntry>> {
        self.check_charge(s)?;
        let labels: Vec<Multipartition> = (0..=n)
            .flat_map(|k| Multipartition::all(k, s.rank()))
            .filter(|mu| mu.is_multiregular(self.e))
            .collect();
        self.compute_labels(labels, s)
    }

    /// Computes the given labels, stratum by stratum, in parallel within a
    /// stratum.
    pub fn compute_labels(
        &self,
        mut labels: Vec<Multipartition>,
        s: &Charge,
    ) -> Result<Vec<CanonicalBasisEntry>> {
        labels.sort_by(|a, b| {
            (a.size(), a.component(1).size(), a).cmp(&(b.size(), b.component(1).size(), b))
        });
        let mut strata: BTreeMap<(u32, u32), Vec<Multipartition>> = BTreeMap::new();
        for mu in labels {
            strata
                .entry((mu.size(), mu.component(1).size()))
                .or_default()
                .push(mu);
        }
        let mut out = Vec::new();
        for (_, stratum) in strata {
            let entries = stratum
                .par_iter()
                .map(|mu| self.canonical_vector(mu, s))
                .collect::<Result<Vec<_>>>()?;
            out.extend(entries);
        }
        Ok(out)
    }
}

/// `a_mu = 1` and `a_la != 0` only for `mu ≽ la`.
fn check_auxiliary(a: &FockVector, mu: &Multipartition) -> Result<()> {
    if a.coeff(mu).is_none_or(|c| !c.is_one()) {
        return Err(Error::Internal(format!(
            "auxiliary vector for {mu} has leading coefficient != 1"
        )));
    }
    if let Some(la) = a.labels().find(|la| !mu.refine_gte_unchecked(la)) {
        return Err(Error::Internal(format!(
            "auxiliary vector for {mu} has a term at {la}, which is not below it"
        )));
    }
    Ok(())
}

/// The three structural properties of a canonical basis vector:
/// unitriangularity with `qZ[q]` off the diagonal, support dominated by the
/// label, and a single weight space.
fn check_entry(v: &FockVector, mu: &Multipartition, s: &Charge) -> Result<()> {
    if v.coeff(mu).is_none_or(|c| !c.is_one()) {
        return Err(Error::Internal(format!("G({mu}) has d_mu,mu != 1")));
    }
    let w = weight_of(mu, s);
    for (la, c) in v.iter() {
        if la == mu {
            continue;
        }
        if !c.in_qzq() {
            return Err(Error::Internal(format!(
                "G({mu}) has d at {la} = {c}, not in qZ[q]"
            )));
        }
        if !mu.dominates_unchecked(la) {
            return Err(Error::Internal(format!(
                "G({mu}) has {la} in its support, not dominated"
            )));
        }
        if weight_of(la, s) != w {
            return Err(Error::Internal(format!("G({mu}) mixes weights at {la}")));
        }
    }
    Ok(())
}

/// One-shot `G^s(mu)` with a fresh engine.
pub fn canonical_vector(mu: &Multipartition, s: &Charge) -> Result<CanonicalBasisEntry> {
    CanonicalBasis::new(s.e())?.canonical_vector(mu, s)
}

/// One-shot batch driver with a fresh engine.
pub fn canonical_basis_up_to(n: u32, s: &Charge) -> Result<Vec<CanonicalBasisEntry>> {
    CanonicalBasis::new(s.e())?.basis_up_to(n, s)
}

/// The finite modulus standing in for `e = ∞` on labels of size at most
/// `n_cap`.
pub fn einf_modulus(s_int: &[i64], n_cap: u32) -> u32 {
    let spread = match (s_int.iter().max(), s_int.iter().min()) {
        (Some(hi), Some(lo)) => (hi - lo) as u32,
        _ => 0,
    };
    n_cap + spread + 2
}

/// `G^s(mu)` for `e = ∞`, computed at a large finite `e` and confirmed
/// unchanged at `e + 1`. The returned entry carries the first modulus.
pub fn canonical_vector_einf(
    mu: &Multipartition,
    s_int: &[i64],
    n_cap: u32,
) -> Result<CanonicalBasisEntry> {
    if mu.size() > n_cap {
        return Err(Error::InvalidPartition(format!(
            "{mu} has size {} above the cap {n_cap}",
            mu.size()
        )));
    }
    let e = einf_modulus(s_int, n_cap);
    let first = canonical_vector(mu, &Charge::new(e, s_int.iter().copied())?)?;
    let second = canonical_vector(mu, &Charge::new(e + 1, s_int.iter().copied())?)?;
    if !same_coefficients(first.vector(), second.vector()) {
        return Err(Error::Unstable {
            label: mu.to_string(),
            e1: e,
            e2: e + 1,
        });
    }
    Ok(first)
}

/// Every multipartition of size at most `n` for `e = ∞`, each confirmed at
/// two moduli.
pub fn canonical_basis_up_to_einf(n: u32, s_int: &[i64]) -> Result<Vec<CanonicalBasisEntry>> {
    let e = einf_modulus(s_int, n);
    let first = canonical_basis_up_to(n, &Charge::new(e, s_int.iter().copied())?)?;
    let engine = CanonicalBasis::new(e + 1)?;
    let s2 = Charge::new(e + 1, s_int.iter().copied())?;
    for entry in &first {
        let other = engine.canonical_vector(entry.label(), &s2)?;
        if !same_coefficients(entry.vector(), other.vector()) {
            return Err(Error::Unstable {
                label: entry.label().to_string(),
                e1: e,
                e2: e + 1,
            });
        }
    }
    Ok(first)
}

/// Equality of supports and coefficients, ignoring the charge.
pub fn same_coefficients(a: &FockVector, b: &FockVector) -> bool {
    a.len() == b.len() && a.iter().zip(b.iter()).all(|(x, y)| x == y)
}

/// Rows are support labels, columns are canonical basis labels, cells are
/// `d_{la,mu}`. Both axes run from most to least dominant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionMatrix {
    pub rows: Vec<Multipartition>,
    pub cols: Vec<Multipartition>,
    pub cells: Vec<Vec<LaurentPoly>>,
}

impl DecompositionMatrix {
    pub fn get(&self, row: &Multipartition, col: &Multipartition) -> Option<&LaurentPoly> {
        let i = self.rows.iter().position(|r| r == row)?;
        let j = self.cols.iter().position(|c| c == col)?;
        Some(&self.cells[i][j])
    }

    pub fn is_empty(&self) -> bool {
        self.cols.is_empty()
    }
}

impl fmt::Display for DecompositionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row_names: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        let mut widths: Vec<usize> = self
            .cols
            .iter()
            .map(|c| c.to_string().chars().count())
            .collect();
        for row in &self.cells {
            for (j, c) in row.iter().enumerate() {
                widths[j] = widths[j].max(cell_text(c).chars().count());
            }
        }
        let lead = row_names
            .iter()
            .map(|r| r.chars().count())
            .max()
            .unwrap_or(0);
        write!(f, "{:lead$}", "")?;
        for (c, w) in self.cols.iter().zip(&widths) {
            write!(f, "  {:>w$}", c.to_string())?;
        }
        writeln!(f)?;
        for (name, row) in row_names.iter().zip(&self.cells) {
            write!(f, "{name:lead$}")?;
            for (c, w) in row.iter().zip(&widths) {
                write!(f, "  {:>w$}", cell_text(c))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn cell_text(c: &LaurentPoly) -> String {
    if c.is_zero() {
        ".".into()
    } else {
        c.to_string()
    }
}

/// Assembles `d_{la,mu}` for the given entries, optionally keeping only the
/// columns (and hence rows) of one weight space.
pub fn decomposition_matrix(
    entries: &[CanonicalBasisEntry],
    block: Option<&WeightData>,
) -> Result<DecompositionMatrix> {
    if let Some(first) = entries.first() {
        if let Some(other) = entries.iter().find(|x| x.charge() != first.charge()) {
            return Err(Error::ContextMismatch(format!(
                "{} vs {}",
                first.charge(),
                other.charge()
            )));
        }
    }
    let chosen: Vec<&CanonicalBasisEntry> = entries
        .iter()
        .filter(|x| block.is_none_or(|w| &x.weight() == w))
        .collect();
    let mut cols: Vec<Multipartition> = chosen.iter().map(|x| x.label().clone()).collect();
    cols.sort_by(|a, b| b.cmp(a));
    cols.dedup();
    let rows: BTreeSet<Multipartition> = chosen
        .iter()
        .flat_map(|x| x.vector().labels().cloned())
        .collect();
    let rows: Vec<Multipartition> = rows.into_iter().rev().collect();
    let by_label: HashMap<&Multipartition, &CanonicalBasisEntry> =
        chosen.iter().map(|x| (x.label(), *x)).collect();
    let cells = rows
        .iter()
        .map(|la| cols.iter().map(|mu| by_label[mu].coeff(la)).collect())
        .collect();
    Ok(DecompositionMatrix { rows, cols, cells })
}
