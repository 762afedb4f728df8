//! Multipartitions as semi-infinite ordered wedges, truncated to a prefix.

use crate::combinat::{Multipartition, Partition};
use crate::error::{Error, Result};

use super::{Abc, Multicharge};

/// The first `entries.len()` terms of a semi-infinite wedge of charge
/// `charge`; every later term is `t_i = charge + 1 - i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WedgeWord {
    pub entries: Vec<i64>,
    pub charge: i64,
}

impl WedgeWord {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `t_{l+1}`, the first tail entry.
    pub fn tail_start(&self) -> i64 {
        self.charge - self.entries.len() as i64
    }
}

/// `β̌` for row `i` (1-based) of component `k` (1-based).
fn beta_check(la: &Partition, s_k: i64, i: usize, k: usize, e: u32, r: usize) -> i64 {
    let beta = la.part(i) as i64 + s_k + 1 - i as i64;
    let x = Abc::of(beta, e, 1);
    Abc {
        a: x.a,
        b: k as u32,
        m: x.m,
    }
    .value(e, r)
}

/// The entries of `|la, s~>` that are greater than `floor`, decreasing.
fn entries_above(la: &Multipartition, mc: &Multicharge, floor: i64) -> Vec<i64> {
    let (e, r) = (mc.e(), mc.rank());
    let mut out = Vec::new();
    for (k, part) in la.components().iter().enumerate() {
        // β̌ decreases strictly with the row index
        for i in 1.. {
            let t = beta_check(part, mc.get(k + 1), i, k + 1, e, r);
            if t <= floor {
                break;
            }
            out.push(t);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn check_context(la: &Multipartition, mc: &Multicharge) -> Result<()> {
    if la.rank() != mc.rank() {
        return Err(Error::RankMismatch {
            expected: mc.rank(),
            found: la.rank(),
        });
    }
    Ok(())
}

/// The smallest `l` for which the terms after position `l` of `|la, s~>`
/// are exactly the tail `s + 1 - i`.
pub fn minimal_length(la: &Multipartition, mc: &Multicharge) -> Result<usize> {
    check_context(la, mc)?;
    let (e, r) = (mc.e(), mc.rank());
    let er = e as i64 * r as i64;
    // below every component's first empty row, each component is full
    let low = la
        .components()
        .iter()
        .enumerate()
        .map(|(k, p)| beta_check(p, mc.get(k + 1), p.len() + 1, k + 1, e, r))
        .min()
        .expect("rank >= 1")
        - er;
    let all = entries_above(la, mc, low);
    let s = mc.total();
    // all[j] is t_{j+1}; find the first index from which t_i = s + 1 - i
    let mut l = all.len();
    while l > 0 && all[l - 1] == s + 1 - l as i64 {
        l -= 1;
    }
    // everything at or below `low` is present, so the run must reach it
    let consistent = l < all.len() && all.last() == Some(&(low + 1));
    if !consistent {
        return Err(Error::Internal(format!(
            "wedge of {la} with multicharge {mc} does not end in the tail of charge {s}"
        )));
    }
    Ok(l)
}

/// The largest [`minimal_length`] over all multipartitions of size `n`.
///
/// Minimal length grows with the number of rows of each component, so the
/// maximum is attained by `(1^n)` placed in a single component.
pub fn length_bound(n: u32, mc: &Multicharge) -> Result<usize> {
    let column = Partition::new(vec![1; n as usize])?;
    let mut best = 0;
    for k in 0..mc.rank() {
        let mut comps = vec![Partition::empty(); mc.rank()];
        comps[k] = column.clone();
        best = best.max(minimal_length(&Multipartition::new(comps)?, mc)?);
    }
    Ok(best)
}

/// The first `l` entries of `|la, s~>`.
pub fn encode(la: &Multipartition, mc: &Multicharge, l: usize) -> Result<WedgeWord> {
    let needed = minimal_length(la, mc)?;
    if l < needed {
        return Err(Error::TruncationTooShort { length: l, needed });
    }
    let s = mc.total();
    let entries = entries_above(la, mc, s - l as i64);
    debug_assert_eq!(entries.len(), l);
    Ok(WedgeWord { entries, charge: s })
}

/// Inverse of [`encode`] for the ambient `(e, r)`: recovers the
/// multipartition and the multicharge.
pub fn decode(w: &WedgeWord, e: u32, r: usize) -> Result<(Multipartition, Multicharge)> {
    let floor = w.tail_start();
    if !super::straighten::is_ordered(&w.entries) || w.entries.last().is_some_and(|&t| t <= floor) {
        return Err(Error::Undecodable(format!(
            "{:?} with charge {}",
            w.entries, w.charge
        )));
    }
    let mut comps = Vec::with_capacity(r);
    let mut lifts = Vec::with_capacity(r);
    for k in 1..=r {
        let betas: Vec<i64> = w
            .entries
            .iter()
            .map(|&t| Abc::of(t, e, r))
            .filter(|x| x.b as usize == k)
            .map(|x| {
                Abc {
                    a: x.a,
                    b: 1,
                    m: x.m,
                }
                .value(e, 1)
            })
            .collect();
        // the largest tail entry belonging to component k
        let top = (floor - e as i64 * r as i64..=floor)
            .rev()
            .map(|t| Abc::of(t, e, r))
            .find(|x| x.b as usize == k)
            .expect("every residue class occurs in a window of length e r");
        let tail_beta = Abc {
            a: top.a,
            b: 1,
            m: top.m,
        }
        .value(e, 1);
        let s_k = tail_beta + betas.len() as i64;
        let parts: Vec<u32> = betas
            .iter()
            .enumerate()
            .map(|(i, &b)| (b - s_k + i as i64) as u32)
            .collect();
        comps.push(Partition::new(parts)?);
        lifts.push(s_k);
    }
    let mc = Multicharge::new(e, lifts)?;
    if mc.total() != w.charge {
        return Err(Error::Undecodable(format!(
            "{:?} decodes to multicharge {mc}, whose total is not {}",
            w.entries, w.charge
        )));
    }
    Ok((Multipartition::new(comps)?, mc))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(text: &str) -> Multipartition {
        text.parse().unwrap()
    }

    #[test]
    fn vacuum_is_all_tail_at_rank_one() {
        let mc = Multicharge::new(2, vec![0]).unwrap();
        assert_eq!(minimal_length(&mp("-"), &mc).unwrap(), 0);
        let w = encode(&mp("-"), &mc, 3).unwrap();
        assert_eq!(w.entries, vec![0, -1, -2]);
    }

    #[test]
    fn one_box_at_rank_one() {
        let mc = Multicharge::new(2, vec![0]).unwrap();
        let w = encode(&mp("1"), &mc, 1).unwrap();
        assert_eq!(w.entries, vec![1]);
        let v = encode(&mp("-"), &mc, 1).unwrap();
        assert_eq!(w.entries.len(), v.entries.len());
        assert_ne!(w.entries[0], v.entries[0]);
        assert!(matches!(
            encode(&mp("1"), &mc, 0),
            Err(Error::TruncationTooShort { .. })
        ));
    }

    #[test]
    fn round_trips() {
        let mcs = [
            Multicharge::new(2, vec![9, 0]).unwrap(),
            Multicharge::new(3, vec![1, -4]).unwrap(),
            Multicharge::new(2, vec![3, 8, -1]).unwrap(),
        ];
        for mc in &mcs {
            for n in 0..=5 {
                for la in Multipartition::all(n, mc.rank()) {
                    let l0 = minimal_length(&la, mc).unwrap();
                    for l in [l0, l0 + 3] {
                        let w = encode(&la, mc, l).unwrap();
                        assert_eq!(w.len(), l);
                        let (la2, mc2) = decode(&w, mc.e(), mc.rank()).unwrap();
                        assert_eq!(&la2, &la);
                        assert_eq!(&mc2, mc);
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_unordered() {
        let w = WedgeWord {
            entries: vec![1, 3],
            charge: 0,
        };
        assert!(decode(&w, 2, 1).is_err());
    }
}
