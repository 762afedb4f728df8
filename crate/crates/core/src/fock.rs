//! The level-`r` Fock space `F^s` over `Z[q, q^-1]`.
//!
//! Vectors are sparse maps from multipartitions to Laurent polynomials. The
//! Chevalley generators act by adding or removing nodes of one residue, with
//! a power of `q` counting addable minus removable nodes of that residue
//! above (for `f_i`) or below (for `e_i`) the node in question.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::combinat::{Charge, Multipartition, Node};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// A finitely supported vector of `F^s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockVector {
    charge: Charge,
    terms: BTreeMap<Multipartition, LaurentPoly>,
}

#[allow(clippy::len_without_is_empty)]
impl FockVector {
    pub fn zero(charge: Charge) -> Self {
        FockVector {
            charge,
            terms: BTreeMap::new(),
        }
    }

    /// The standard basis vector `s_la`.
    pub fn basis(charge: Charge, la: Multipartition) -> Result<Self> {
        charge.check_rank(&la)?;
        let mut v = Self::zero(charge);
        v.terms.insert(la, LaurentPoly::one());
        Ok(v)
    }

    /// `s_{∅^r}`.
    pub fn vacuum(charge: Charge) -> Self {
        let r = charge.rank();
        Self::basis(charge, Multipartition::empty(r)).expect("rank matches by construction")
    }

    /// Builds a vector from `(label, coefficient)` pairs, merging repeats.
    pub fn from_terms<I>(charge: Charge, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Multipartition, LaurentPoly)>,
    {
        let mut v = Self::zero(charge);
        for (la, c) in terms {
            v.charge.check_rank(&la)?;
            v.add_term(la, &c);
        }
        Ok(v)
    }

    pub fn charge(&self) -> &Charge {
        &self.charge
    }

    pub fn e(&self) -> u32 {
        self.charge.e()
    }

    pub fn rank(&self) -> usize {
        self.charge.rank()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, la: &Multipartition) -> Option<&LaurentPoly> {
        self.terms.get(la)
    }

    /// Terms in increasing total order of the labels.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Multipartition, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    pub fn labels(&self) -> impl DoubleEndedIterator<Item = &Multipartition> + '_ {
        self.terms.keys()
    }

    /// Adds `c s_la`, dropping the term if it cancels.
    pub fn add_term(&mut self, la: Multipartition, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(la) {
            Entry::Vacant(slot) => {
                slot.insert(c.clone());
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &FockVector, c: &LaurentPoly) -> Result<()> {
        self.check_context(other)?;
        for (la, d) in &other.terms {
            self.add_term(la.clone(), &(c * d));
        }
        Ok(())
    }

    pub fn scaled(&self, c: &LaurentPoly) -> FockVector {
        let mut out = FockVector::zero(self.charge.clone());
        for (la, d) in &self.terms {
            out.add_term(la.clone(), &(c * d));
        }
        out
    }

    fn check_context(&self, other: &FockVector) -> Result<()> {
        if self.charge != other.charge {
            return Err(Error::ContextMismatch(format!(
                "{} vs {}",
                self.charge, other.charge
            )));
        }
        Ok(())
    }

    /// Relabels every term (used to re-embed vectors into a bigger Fock
    /// space); the caller guarantees the map is injective.
    pub fn map_labels(
        &self,
        charge: Charge,
        f: impl Fn(&Multipartition) -> Multipartition,
    ) -> Result<FockVector> {
        let mut out = FockVector::zero(charge);
        for (la, c) in &self.terms {
            let image = f(la);
            out.charge.check_rank(&image)?;
            out.add_term(image, c);
        }
        Ok(out)
    }

    /// `f_i` applied to every term.
    pub fn apply_f(&self, i: u32) -> FockVector {
        let mut out = FockVector::zero(self.charge.clone());
        for (la, c) in &self.terms {
            for (node, exp) in f_exponents(la, i, &self.charge) {
                out.add_term(la.add_node_unchecked(&node), &c.shift(exp));
            }
        }
        out
    }

    /// `e_i` applied to every term.
    pub fn apply_e(&self, i: u32) -> FockVector {
        let mut out = FockVector::zero(self.charge.clone());
        for (la, c) in &self.terms {
            for (node, exp) in e_exponents(la, i, &self.charge) {
                out.add_term(la.remove_node_unchecked(&node), &c.shift(exp));
            }
        }
        out
    }

    /// The divided power `f_i^(m) = f_i^m / [m]!`.
    pub fn apply_f_divided(&self, i: u32, m: u32) -> Result<FockVector> {
        let mut v = self.clone();
        for _ in 0..m {
            v = v.apply_f(i);
        }
        if m <= 1 {
            return Ok(v);
        }
        let fact = LaurentPoly::quantum_factorial(m);
        let mut terms = BTreeMap::new();
        for (la, c) in v.terms {
            terms.insert(la, c.exact_div(&fact)?);
        }
        Ok(FockVector {
            charge: v.charge,
            terms,
        })
    }

    /// Coefficient-wise bar involution (no action on the basis vectors).
    pub fn bar_coefficients(&self) -> FockVector {
        FockVector {
            charge: self.charge.clone(),
            terms: self
                .terms
                .iter()
                .map(|(la, c)| (la.clone(), c.bar()))
                .collect(),
        }
    }
}

impl fmt::Display for FockVector {
    /// One `|label> : coeff` line per term, most dominant label first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return writeln!(f, "0");
        }
        for (la, c) in self.terms.iter().rev() {
            writeln!(f, "|{la}> : {c}")?;
        }
        Ok(())
    }
}

/// Addable and removable `i`-nodes merged in above-to-below order; the flag
/// is `true` for addable nodes.
fn merged_nodes(la: &Multipartition, i: u32, s: &Charge) -> Vec<(Node, bool)> {
    let mut nodes: Vec<(Node, bool)> = la
        .addable_nodes(i, s)
        .into_iter()
        .map(|n| (n, true))
        .chain(la.removable_nodes(i, s).into_iter().map(|n| (n, false)))
        .collect();
    nodes.sort_by_key(|(n, _)| n.order_key());
    nodes
}

/// `(node, N(la, node))` for every addable `i`-node.
fn f_exponents(la: &Multipartition, i: u32, s: &Charge) -> Vec<(Node, i32)> {
    let mut out = Vec::new();
    let mut above = 0i32;
    for (node, addable) in merged_nodes(la, i, s) {
        if addable {
            out.push((node, above));
            above += 1;
        } else {
            above -= 1;
        }
    }
    out
}

/// `(node, M(la, node))` for every removable `i`-node.
fn e_exponents(la: &Multipartition, i: u32, s: &Charge) -> Vec<(Node, i32)> {
    let mut out = Vec::new();
    let mut below = 0i32;
    for (node, addable) in merged_nodes(la, i, s).into_iter().rev() {
        if addable {
            below -= 1;
        } else {
            out.push((node, below));
            below += 1;
        }
    }
    out
}

/// The weight `Λ_{s_1} + ... + Λ_{s_r} - Σ c_i α_i` of `s_la`, as counts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightData {
    /// `fundamental[j]` is the multiplicity of `Λ_j` in `Λ_{s_1}+...+Λ_{s_r}`.
    pub fundamental: Vec<u32>,
    /// `content[i] = c_i`, the number of `i`-nodes.
    pub content: Vec<u32>,
}

impl WeightData {
    pub fn size(&self) -> u32 {
        self.content.iter().sum()
    }
}

pub fn weight_of(la: &Multipartition, s: &Charge) -> WeightData {
    let e = s.e() as usize;
    let mut fundamental = vec![0; e];
    for &r in s.residues() {
        fundamental[r as usize] += 1;
    }
    let mut content = vec![0; e];
    for node in la.nodes() {
        content[s.residue_of(&node) as usize] += 1;
    }
    WeightData {
        fundamental,
        content,
    }
}

/// `<h_i, wt(la)>`: addable minus removable `i`-nodes.
pub fn h_pairing(la: &Multipartition, i: u32, s: &Charge) -> i32 {
    la.addable_nodes(i, s).len() as i32 - la.removable_nodes(i, s).len() as i32
}
