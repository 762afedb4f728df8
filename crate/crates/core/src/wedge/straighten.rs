//! Straightening finite wedges into ordered ones.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::laurent::LaurentPoly;

use super::Abc;

/// A finite combination of ordered (strictly decreasing) wedges.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WedgeVector {
    terms: BTreeMap<Vec<i64>, LaurentPoly>,
}

#[allow(clippy::len_without_is_empty)]
impl WedgeVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The ordered wedge `w` with coefficient 1. Panics if `w` is not
    /// strictly decreasing.
    pub fn ordered(w: Vec<i64>) -> Self {
        assert!(is_ordered(&w), "{w:?} is not ordered");
        let mut v = Self::zero();
        v.terms.insert(w, LaurentPoly::one());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &[i64]) -> Option<&LaurentPoly> {
        self.terms.get(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    fn add(&mut self, w: Vec<i64>, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += &c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }
}

impl fmt::Display for WedgeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (w, c) in self.terms.iter().rev() {
            let body: Vec<String> = w.iter().map(|t| t.to_string()).collect();
            writeln!(f, "[{}] : {}", body.join(" ^ "), c)?;
        }
        Ok(())
    }
}

pub fn is_ordered(w: &[i64]) -> bool {
    w.windows(2).all(|p| p[0] > p[1])
}

/// Order in which adjacent inversions are resolved.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Schedule {
    /// Insert entries one at a time, right to left, into an ordered suffix.
    Insertion,
    /// Always rewrite the leftmost non-decreasing adjacent pair.
    Leftmost,
    /// Always rewrite the rightmost non-decreasing adjacent pair.
    Rightmost,
}

/// One term `c ⟦hi⟧ ∧ ⟦lo⟧` of a length-two relation, with `hi > lo`
/// stored relative to `t`.
type Rel = Vec<(LaurentPoly, i64, i64)>;
type Terms = Arc<Vec<(Vec<i64>, LaurentPoly)>>;

/// The straightening relations for fixed `(e, r)`, with memo tables.
#[derive(Debug)]
pub struct Straightener {
    e: u32,
    r: usize,
    relations: HashMap<(i64, i64), Arc<Rel>>,
    inserts: HashMap<(i64, Vec<i64>), Terms>,
    words: HashMap<(Schedule, Vec<i64>), Terms>,
}

impl Straightener {
    pub fn new(e: u32, r: usize) -> Self {
        assert!(e >= 1 && r >= 1);
        Straightener {
            e,
            r,
            relations: HashMap::new(),
            inserts: HashMap::new(),
            words: HashMap::new(),
        }
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn r(&self) -> usize {
        self.r
    }

    fn er(&self) -> i64 {
        self.e as i64 * self.r as i64
    }

    pub fn clear(&mut self) {
        self.inserts.clear();
        self.words.clear();
    }

    /// `⟦t⟧ ∧ ⟦u⟧` for `t <= u` as a combination of ordered pairs.
    pub fn pair(&mut self, t: i64, u: i64) -> WedgeVector {
        assert!(t <= u);
        let mut v = WedgeVector::zero();
        for (c, hi, lo) in self.relation(t, u).iter() {
            v.add(vec![t + hi, t + lo], c.clone());
        }
        v
    }

    fn relation(&mut self, t: i64, u: i64) -> Arc<Rel> {
        let er = self.er();
        let key = (t.rem_euclid(er), u - t);
        if let Some(rel) = self.relations.get(&key) {
            return rel.clone();
        }
        let rel = Arc::new(build_relation(self.e, self.r, key.0, key.0 + key.1));
        let rel = Arc::new(
            rel.iter()
                .map(|(c, hi, lo)| (c.clone(), hi - key.0, lo - key.0))
                .collect(),
        );
        self.relations.insert(key, Arc::clone(&rel));
        rel
    }

    /// Straightens `w` with the given schedule.
    pub fn straighten(&mut self, w: &[i64], schedule: Schedule) -> WedgeVector {
        let mut out = WedgeVector::zero();
        let terms = match schedule {
            Schedule::Insertion => self.by_insertion(w),
            _ => self.by_pairs(w.to_vec(), schedule),
        };
        for (word, c) in terms.iter() {
            out.add(word.clone(), c.clone());
        }
        out
    }

    fn by_insertion(&mut self, w: &[i64]) -> Terms {
        let Some((&last, rest)) = w.split_last() else {
            return Arc::new(vec![(Vec::new(), LaurentPoly::one())]);
        };
        let mut acc: Vec<(Vec<i64>, LaurentPoly)> = vec![(vec![last], LaurentPoly::one())];
        for &x in rest.iter().rev() {
            let mut next = WedgeVector::zero();
            for (v, c) in &acc {
                for (word, d) in self.insert(x, v).iter() {
                    next.add(word.clone(), c * d);
                }
            }
            acc = next.terms.into_iter().collect();
        }
        Arc::new(acc)
    }

    /// `⟦x⟧ ∧ v` for an ordered `v`.
    fn insert(&mut self, x: i64, v: &[i64]) -> Terms {
        if v.first().is_none_or(|&h| x > h) {
            let mut w = Vec::with_capacity(v.len() + 1);
            w.push(x);
            w.extend_from_slice(v);
            return Arc::new(vec![(w, LaurentPoly::one())]);
        }
        let key = (x, v.to_vec());
        if let Some(t) = self.inserts.get(&key) {
            return t.clone();
        }
        let (head, tail) = (v[0], &v[1..]);
        let mut out = WedgeVector::zero();
        for (c, hi, lo) in self.relation(x, head).iter() {
            let (hi, lo) = (x + hi, x + lo);
            for (w, d) in self.insert(lo, tail).iter() {
                let cd = c * d;
                for (w2, d2) in self.insert(hi, w).iter() {
                    out.add(w2.clone(), &cd * d2);
                }
            }
        }
        let terms: Terms = Arc::new(out.terms.into_iter().collect());
        self.inserts.insert(key, Arc::clone(&terms));
        terms
    }

    fn by_pairs(&mut self, w: Vec<i64>, schedule: Schedule) -> Terms {
        let pos = {
            let mut bad = (0..w.len().saturating_sub(1)).filter(|&i| w[i] <= w[i + 1]);
            match schedule {
                Schedule::Rightmost => bad.next_back(),
                _ => bad.next(),
            }
        };
        let Some(p) = pos else {
            return Arc::new(vec![(w, LaurentPoly::one())]);
        };
        let key = (schedule, w);
        if let Some(t) = self.words.get(&key) {
            return t.clone();
        }
        let w = &key.1;
        let (t, u) = (w[p], w[p + 1]);
        let mut out = WedgeVector::zero();
        for (c, hi, lo) in self.relation(t, u).iter() {
            let mut next = w.clone();
            next[p] = t + hi;
            next[p + 1] = t + lo;
            for (w2, d) in self.by_pairs(next, schedule).iter() {
                out.add(w2.clone(), c * d);
            }
        }
        let terms: Terms = Arc::new(out.terms.into_iter().collect());
        self.words.insert(key, Arc::clone(&terms));
        terms
    }
}

/// `(q^{2m+1} + q^{-2m-1}) / (q + q^{-1})`
fn odd_sum(m: i64) -> LaurentPoly {
    quotient(
        &(LaurentPoly::monomial(1, 2 * m as i32 + 1) + LaurentPoly::monomial(1, -2 * m as i32 - 1)),
    )
}

/// `(q^k - q^{-k}) / (q + q^{-1})` for even `k`.
fn even_diff(k: i64) -> LaurentPoly {
    quotient(&(LaurentPoly::monomial(1, k as i32) - LaurentPoly::monomial(1, -k as i32)))
}

fn quotient(p: &LaurentPoly) -> LaurentPoly {
    let d = LaurentPoly::q() + LaurentPoly::monomial(1, -1);
    p.exact_div(&d).expect("divisible by q + q^-1")
}

/// Right-hand side of `⟦t⟧ ∧ ⟦u⟧` for `t <= u`, as `(c, hi, lo)` triples.
fn build_relation(e: u32, r: usize, t: i64, u: i64) -> Rel {
    let er = e as i64 * r as i64;
    let (x, y) = (Abc::of(t, e, r), Abc::of(u, e, r));
    let alpha = (y.a as i64 - x.a as i64).rem_euclid(er);
    let beta = (e as i64 * (y.b as i64 - x.b as i64)).rem_euclid(er);
    let q = LaurentPoly::q();
    let qi = LaurentPoly::monomial(1, -1);
    let mut out: Rel = Vec::new();
    // pairs (u - shift - er m, t + shift + er m) for m >= m0 while ordered
    let series = |out: &mut Rel, shift: i64, m0: i64, coeff: &dyn Fn(i64) -> LaurentPoly| {
        let mut m = m0;
        loop {
            let (hi, lo) = (u - shift - er * m, t + shift + er * m);
            if hi <= lo {
                break;
            }
            let c = coeff(m);
            if !c.is_zero() {
                out.push((c, hi, lo));
            }
            m += 1;
        }
    };
    match (alpha, beta) {
        (0, 0) => {
            if t != u {
                out.push((LaurentPoly::from(-1), u, t));
            }
        }
        (_, 0) => {
            out.push((-&qi, u, t));
            let k = LaurentPoly::monomial(1, -2) - LaurentPoly::one();
            series(&mut out, alpha, 0, &|m| {
                &k * &LaurentPoly::monomial(1, -2 * m as i32)
            });
            series(&mut out, 0, 1, &|m| {
                -(&k * &LaurentPoly::monomial(1, 1 - 2 * m as i32))
            });
        }
        (0, _) => {
            out.push((-&q, u, t));
            let k = LaurentPoly::monomial(1, 2) - LaurentPoly::one();
            series(&mut out, beta, 0, &|m| {
                &k * &LaurentPoly::monomial(1, 2 * m as i32)
            });
            series(&mut out, 0, 1, &|m| {
                -(&k * &LaurentPoly::monomial(1, 2 * m as i32 - 1))
            });
        }
        _ => {
            out.push((LaurentPoly::from(-1), u, t));
            let k = &q - &qi;
            series(&mut out, beta, 0, &|m| &k * &odd_sum(m));
            series(&mut out, alpha, 0, &|m| -(&k * &odd_sum(m)));
            series(&mut out, alpha + beta, 0, &|m| &k * &even_diff(2 * m + 2));
            series(&mut out, 0, 1, &|m| -(&k * &even_diff(2 * m)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single(v: &WedgeVector) -> Option<(Vec<i64>, LaurentPoly)> {
        (v.len() == 1).then(|| {
            let (w, c) = v.iter().next().unwrap();
            (w.clone(), c.clone())
        })
    }

    #[test]
    fn trivial_cases() {
        let mut s = Straightener::new(2, 2);
        for t in -6..6 {
            assert!(s.pair(t, t).is_zero());
            assert!(s.straighten(&[t, t], Schedule::Insertion).is_zero());
            let v = s.straighten(&[t + 1, t], Schedule::Insertion);
            assert_eq!(single(&v), Some((vec![t + 1, t], LaurentPoly::one())));
        }
        assert_eq!(s.straighten(&[], Schedule::Leftmost).len(), 1);
    }

    #[test]
    fn alpha_beta_zero_swaps() {
        // t = 1 and u = 9 share a and b for e = r = 2
        let mut s = Straightener::new(2, 2);
        let v = s.pair(1, 9);
        assert_eq!(single(&v), Some((vec![9, 1], LaurentPoly::from(-1))));
    }

    #[test]
    fn beta_case_by_hand() {
        // e = r = 2, t = 1 (a=1, b=1), u = 7 (a=1, b=2): alpha = 0, beta = 2
        let mut s = Straightener::new(2, 2);
        let v = s.pair(1, 7);
        let q = |k| LaurentPoly::monomial(1, k);
        let k = q(2) - LaurentPoly::one();
        // -q [7,1] + (q^2-1)([5,3]) - (q^2-1) q [3,5] is not ordered, so stops
        assert_eq!(v.coeff(&[7, 1]), Some(&-q(1)));
        assert_eq!(v.coeff(&[5, 3]), Some(&k));
        assert_eq!(v.len(), 2);
        // a wider gap picks up the m >= 1 terms
        let v = s.pair(1, 11);
        let x = Abc::of(11, 2, 2);
        assert_eq!((x.a, x.b), (1, 2));
        assert_eq!(v.coeff(&[11, 1]), Some(&-q(1)));
        assert_eq!(v.coeff(&[9, 3]), Some(&k));
        assert_eq!(v.coeff(&[7, 5]), Some(&-(&k * &q(1))));
        assert_eq!(v.len(), 3);
    }

    #[test]
    fn quotients_are_polynomials() {
        assert!(odd_sum(0).is_one());
        assert_eq!(
            odd_sum(1),
            q2() - LaurentPoly::one() + LaurentPoly::monomial(1, -2)
        );
        assert_eq!(
            even_diff(2),
            LaurentPoly::q() - LaurentPoly::monomial(1, -1)
        );
        assert!(even_diff(0).is_zero());
    }

    fn q2() -> LaurentPoly {
        LaurentPoly::monomial(1, 2)
    }
}
