//! Partitions, multipartitions and the node combinatorics of Fock spaces.
//!
//! Conventions follow the usual English-notation Young diagrams: a node is a
//! triple `(row, col, comp)` with all three coordinates starting at 1, and
//! the residue of `(i, j, k)` under a charge `s` is `j - i + s_k` modulo `e`.
//!
//! The total order on [`Partition`] and [`Multipartition`] compares sizes
//! first and then part sequences lexicographically, component by component.
//! It is a linear extension of the dominance order for labels of the same
//! size: if `la ⊵ mu` then `la >= mu`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An integer partition, stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    // field order matters for the derived `Ord`
    size: u32,
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from a weakly decreasing list; trailing zeros are
    /// dropped.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing: {parts:?}"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "zero part before a positive part: {parts:?}"
            )));
        }
        Ok(Self::from_sorted(parts))
    }

    fn from_sorted(parts: Vec<u32>) -> Self {
        let size = parts.iter().sum();
        Partition { size, parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, 1-based; zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// `true` unless some `la_i = la_{i+e-1} > 0`.
    pub fn is_regular(&self, e: u32) -> bool {
        let span = (e as usize).saturating_sub(1).max(1);
        self.parts.windows(span + 1).all(|w| w[0] != w[span])
    }

    /// Dominance of partitions via partial sums; sizes may differ.
    pub fn dominates(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0u64, 0u64);
        for j in 1..=n {
            a += self.part(j) as u64;
            b += other.part(j) as u64;
            if a < b {
                return false;
            }
        }
        true
    }

    /// Iterator over the nodes `(row, col)` of the Young diagram.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i as u32 + 1, j)))
    }

    /// Rows (1-based) at which a node can be added, with the column.
    fn addable_cells(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for i in 1..=self.len() + 1 {
            let cur = self.part(i);
            if i == 1 || self.part(i - 1) > cur {
                out.push((i as u32, cur + 1));
            }
        }
        out
    }

    fn removable_cells(&self) -> Vec<(u32, u32)> {
        (1..=self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| (i as u32, self.part(i)))
            .collect()
    }

    fn with_part(&self, row: u32, value: u32) -> Partition {
        let mut parts = self.parts.clone();
        let idx = row as usize - 1;
        if idx == parts.len() {
            parts.push(value);
        } else {
            parts[idx] = value;
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::from_sorted(parts)
    }

    /// Non-empty ladders of the diagram, ordered by ladder index.
    ///
    /// Ladder `l` holds the nodes with `i + (e-1)(j-1) = l`; all of them have
    /// residue `s1 + 1 - l` modulo `e`.
    pub fn ladders(&self, e: u32, s1: u32) -> Vec<Ladder> {
        let mut by_index: std::collections::BTreeMap<u32, Vec<(u32, u32)>> = Default::default();
        for (i, j) in self.cells() {
            by_index
                .entry(i + (e - 1) * (j - 1))
                .or_default()
                .push((i, j));
        }
        by_index
            .into_iter()
            .map(|(index, nodes)| Ladder {
                index,
                size: nodes.len() as u32,
                residue: residue_mod(s1 as i64 + 1 - index as i64, e),
                nodes,
            })
            .collect()
    }

    /// All partitions of `n`, in decreasing order.
    pub fn all(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition::from_sorted(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for Partition {
    /// Exponential notation as in `(2,1^2)`; the empty partition is `∅`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&x| x == p).count();
            if !first {
                write!(f, ",")?;
            }
            first = false;
            if run > 1 {
                write!(f, "{p}^{run}")?;
            } else {
                write!(f, "{p}")?;
            }
            i += run;
        }
        write!(f, ")")
    }
}

/// One non-empty ladder of a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ladder {
    pub index: u32,
    pub size: u32,
    pub residue: u32,
    /// `(row, col)` pairs, in row order.
    pub nodes: Vec<(u32, u32)>,
}

/// A node `(row, col, comp)` of `N^2 × [1, r]`, all coordinates 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Node {
    pub row: u32,
    pub col: u32,
    pub comp: u32,
}

impl Node {
    pub fn new(row: u32, col: u32, comp: u32) -> Self {
        Node { row, col, comp }
    }

    /// `self` is above `other` when it lies in an earlier component, or in
    /// the same component at a smaller row.
    pub fn is_above(&self, other: &Node) -> bool {
        (self.comp, self.row) < (other.comp, other.row)
    }

    /// Sort key realising the above/below order (smaller is higher).
    pub fn order_key(&self) -> (u32, u32) {
        (self.comp, self.row)
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.col, self.comp)
    }
}

pub(crate) fn residue_mod(x: i64, e: u32) -> u32 {
    x.rem_euclid(e as i64) as u32
}

/// A residue tuple `s ∈ (Z/eZ)^r` together with its modulus.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Charge {
    e: u32,
    residues: Vec<u32>,
}

impl Charge {
    /// Reduces every entry modulo `e`. Needs `e >= 2` and at least one entry.
    pub fn new(e: u32, residues: impl IntoIterator<Item = i64>) -> Result<Self> {
        if e < 2 {
            return Err(Error::InvalidCharge(format!(
                "modulus must be >= 2, got {e}"
            )));
        }
        let residues: Vec<u32> = residues.into_iter().map(|s| residue_mod(s, e)).collect();
        if residues.is_empty() {
            return Err(Error::InvalidCharge("charge must be non-empty".into()));
        }
        Ok(Charge { e, residues })
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn rank(&self) -> usize {
        self.residues.len()
    }

    pub fn residues(&self) -> &[u32] {
        &self.residues
    }

    /// Residue of component `k`, 1-based.
    pub fn get(&self, k: u32) -> u32 {
        self.residues[k as usize - 1]
    }

    pub fn residue_of(&self, node: &Node) -> u32 {
        residue_mod(
            node.col as i64 - node.row as i64 + self.get(node.comp) as i64,
            self.e,
        )
    }

    /// `s_-`: drop the first residue.
    pub fn truncate(&self) -> Result<Charge> {
        if self.rank() < 2 {
            return Err(Error::TruncateRankOne);
        }
        Ok(Charge {
            e: self.e,
            residues: self.residues[1..].to_vec(),
        })
    }

    pub(crate) fn check_rank(&self, mp: &Multipartition) -> Result<()> {
        if mp.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: mp.rank(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.residues.iter().map(|s| s.to_string()).collect();
        write!(f, "({}) mod {}", parts.join(","), self.e)
    }
}

/// An ordered `r`-tuple of partitions, `r >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition {
    size: u32,
    comps: Vec<Partition>,
}

impl Multipartition {
    pub fn new(comps: Vec<Partition>) -> Result<Self> {
        if comps.is_empty() {
            return Err(Error::InvalidPartition(
                "a multipartition needs at least one component".into(),
            ));
        }
        Ok(Self::from_comps(comps))
    }

    fn from_comps(comps: Vec<Partition>) -> Self {
        let size = comps.iter().map(Partition::size).sum();
        Multipartition { size, comps }
    }

    /// Convenience constructor from nested part lists.
    pub fn from_parts<I, P>(comps: I) -> Result<Self>
    where
        I: IntoIterator<Item = P>,
        P: Into<Vec<u32>>,
    {
        let comps = comps
            .into_iter()
            .map(Partition::new)
            .collect::<Result<Vec<_>>>()?;
        Self::new(comps)
    }

    /// `∅^r`.
    pub fn empty(r: usize) -> Self {
        assert!(r >= 1, "rank must be positive");
        Self::from_comps(vec![Partition::empty(); r])
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn components(&self) -> &[Partition] {
        &self.comps
    }

    /// Component `k`, 1-based.
    pub fn component(&self, k: usize) -> &Partition {
        &self.comps[k - 1]
    }

    fn check_same_rank(&self, other: &Multipartition) -> Result<()> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: other.rank(),
            });
        }
        Ok(())
    }

    /// Dominance order `self ⊵ other`.
    pub fn dominates(&self, other: &Multipartition) -> Result<bool> {
        self.check_same_rank(other)?;
        Ok(self.dominates_unchecked(other))
    }

    pub(crate) fn dominates_unchecked(&self, other: &Multipartition) -> bool {
        let (mut base_a, mut base_b) = (0u64, 0u64);
        for (la, mu) in self.comps.iter().zip(&other.comps) {
            let n = la.len().max(mu.len());
            let (mut a, mut b) = (base_a, base_b);
            for j in 1..=n {
                a += la.part(j) as u64;
                b += mu.part(j) as u64;
                if a < b {
                    return false;
                }
            }
            // j past both lengths, which includes two empty components
            if a < b {
                return false;
            }
            base_a += la.size() as u64;
            base_b += mu.size() as u64;
        }
        true
    }

    pub fn is_multiregular(&self, e: u32) -> bool {
        self.comps.iter().all(|p| p.is_regular(e))
    }

    /// Addable nodes of residue `i`, ordered from highest to lowest.
    pub fn addable_nodes(&self, i: u32, s: &Charge) -> Vec<Node> {
        self.collect_nodes(s, |p| p.addable_cells())
            .into_iter()
            .filter(|n| s.residue_of(n) == i)
            .collect()
    }

    /// Removable nodes of residue `i`, ordered from highest to lowest.
    pub fn removable_nodes(&self, i: u32, s: &Charge) -> Vec<Node> {
        self.collect_nodes(s, |p| p.removable_cells())
            .into_iter()
            .filter(|n| s.residue_of(n) == i)
            .collect()
    }

    fn collect_nodes(
        &self,
        s: &Charge,
        cells: impl Fn(&Partition) -> Vec<(u32, u32)>,
    ) -> Vec<Node> {
        debug_assert_eq!(s.rank(), self.rank());
        // components in order, rows increasing within each: already sorted
        let mut out = Vec::new();
        for (k, p) in self.comps.iter().enumerate() {
            for (row, col) in cells(p) {
                out.push(Node::new(row, col, k as u32 + 1));
            }
        }
        out
    }

    /// Every node of the Young diagram.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.comps.iter().enumerate().flat_map(|(k, p)| {
            p.cells()
                .map(move |(row, col)| Node::new(row, col, k as u32 + 1))
        })
    }

    fn is_addable(&self, n: &Node) -> bool {
        n.comp >= 1
            && (n.comp as usize) <= self.rank()
            && self
                .component(n.comp as usize)
                .addable_cells()
                .contains(&(n.row, n.col))
    }

    fn is_removable(&self, n: &Node) -> bool {
        n.comp >= 1
            && (n.comp as usize) <= self.rank()
            && self
                .component(n.comp as usize)
                .removable_cells()
                .contains(&(n.row, n.col))
    }

    /// `la^n`: the multipartition with diagram `[la] ∪ {n}`.
    pub fn add_node(&self, n: &Node) -> Result<Multipartition> {
        if !self.is_addable(n) {
            return Err(Error::InvalidNode {
                node: n.to_string(),
                kind: "addable",
                label: self.to_string(),
            });
        }
        Ok(self.add_node_unchecked(n))
    }

    pub(crate) fn add_node_unchecked(&self, n: &Node) -> Multipartition {
        let mut comps = self.comps.clone();
        let k = n.comp as usize - 1;
        comps[k] = comps[k].with_part(n.row, n.col);
        Multipartition {
            size: self.size + 1,
            comps,
        }
    }

    /// `la_n`: the multipartition with diagram `[la] \ {n}`.
    pub fn remove_node(&self, n: &Node) -> Result<Multipartition> {
        if !self.is_removable(n) {
            return Err(Error::InvalidNode {
                node: n.to_string(),
                kind: "removable",
                label: self.to_string(),
            });
        }
        Ok(self.remove_node_unchecked(n))
    }

    pub(crate) fn remove_node_unchecked(&self, n: &Node) -> Multipartition {
        let mut comps = self.comps.clone();
        let k = n.comp as usize - 1;
        comps[k] = comps[k].with_part(n.row, n.col - 1);
        Multipartition {
            size: self.size - 1,
            comps,
        }
    }

    /// `mu_-`: drop the first component.
    pub fn truncate(&self) -> Result<Multipartition> {
        if self.rank() < 2 {
            return Err(Error::TruncateRankOne);
        }
        Ok(Self::from_comps(self.comps[1..].to_vec()))
    }

    /// `nu_+`: prepend an empty component.
    pub fn extend(&self) -> Multipartition {
        let mut comps = Vec::with_capacity(self.rank() + 1);
        comps.push(Partition::empty());
        comps.extend(self.comps.iter().cloned());
        Multipartition {
            size: self.size,
            comps,
        }
    }

    /// `mu_0 = (∅, mu^(2), ..., mu^(r))`.
    pub fn zero_first(&self) -> Multipartition {
        let mut comps = self.comps.clone();
        comps[0] = Partition::empty();
        Self::from_comps(comps)
    }

    /// The order `≽`: `|mu^(1)| > |nu^(1)|` or `mu^(1) ⊵ nu^(1)`.
    pub fn refine_order_gte(&self, other: &Multipartition) -> Result<bool> {
        self.check_same_rank(other)?;
        Ok(self.refine_gte_unchecked(other))
    }

    pub(crate) fn refine_gte_unchecked(&self, other: &Multipartition) -> bool {
        let (a, b) = (&self.comps[0], &other.comps[0]);
        a.size() > b.size() || a.dominates(b)
    }

    /// All `r`-multipartitions of `n`, in decreasing total order.
    pub fn all(n: u32, r: usize) -> Vec<Multipartition> {
        assert!(r >= 1, "rank must be positive");
        let mut out = Vec::new();
        let mut cur: Vec<Partition> = Vec::with_capacity(r);
        fn rec(rest: u32, r: usize, cur: &mut Vec<Partition>, out: &mut Vec<Multipartition>) {
            if cur.len() + 1 == r {
                for p in Partition::all(rest) {
                    cur.push(p);
                    out.push(Multipartition::from_comps(cur.clone()));
                    cur.pop();
                }
                return;
            }
            for first in (0..=rest).rev() {
                for p in Partition::all(first) {
                    cur.push(p);
                    rec(rest - first, r, cur, out);
                    cur.pop();
                }
            }
        }
        rec(n, r, &mut cur, &mut out);
        out
    }

    /// Compact syntax `2,1|-|1`, the inverse of [`FromStr`].
    pub fn to_compact(&self) -> String {
        self.comps
            .iter()
            .map(|p| {
                if p.is_empty() {
                    "-".to_string()
                } else {
                    p.parts()
                        .iter()
                        .map(u32::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                }
            })
            .collect::<Vec<_>>()
            .join("|")
    }

    /// Nested part lists, as used by the JSON schema.
    pub fn to_nested(&self) -> Vec<Vec<u32>> {
        self.comps.iter().map(|p| p.parts().to_vec()).collect()
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.comps.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Multipartition {
    type Err = Error;

    /// Components separated by `|`, parts by `,`, `-` for an empty
    /// component. Whitespace is ignored.
    fn from_str(text: &str) -> Result<Self> {
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty multipartition text".into()));
        }
        let comps = cleaned
            .split('|')
            .map(|comp| {
                if comp == "-" {
                    return Ok(Partition::empty());
                }
                let parts = comp
                    .split(',')
                    .map(|p| {
                        let v: u32 = p
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad part {p:?} in {text:?}")))?;
                        if v == 0 {
                            return Err(Error::Parse(format!("zero part in {text:?}")));
                        }
                        Ok(v)
                    })
                    .collect::<Result<Vec<u32>>>()?;
                Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Multipartition::new(comps)
    }
}

/// Strict version of `≽`: `a ≽ b` and not `b ≽ a`.
pub fn refine_order_gt(a: &Multipartition, b: &Multipartition) -> Result<bool> {
    Ok(a.refine_order_gte(b)? && !b.refine_order_gte(a)?)
}

/// Compares two labels of equal size in the dominance-compatible total
/// order; larger means "higher" (more dominant).
pub fn total_order(a: &Multipartition, b: &Multipartition) -> Ordering {
    a.cmp(b)
}
