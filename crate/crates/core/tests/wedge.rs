use higher_llt::wedge::{
    bar_coefficients, decode, encode, indicator_one, minimal_length, psi, x_c, Schedule,
    Straightener,
};
use higher_llt::{
    Charge, Error, FockVector, LaurentPoly, Multicharge, Multipartition, WedgeOracle,
};
use proptest::prelude::*;

fn mp(text: &str) -> Multipartition {
    text.parse().unwrap()
}

#[test]
fn the_one_set_and_psi() {
    // e = r = 2: 𝟙 is 1, 2 mod 4
    for t in -20..=20i64 {
        assert_eq!(
            indicator_one(t, 2, 2),
            matches!(t.rem_euclid(4), 1 | 2),
            "{t}"
        );
    }
    assert!(indicator_one(5, 2, 2));
    assert!(matches!(psi(5, 2, 2), Err(Error::OutOfDomain(_))));
    let outside: Vec<i64> = (-20..=20).filter(|&t| !indicator_one(t, 2, 2)).collect();
    let images: Vec<i64> = outside.iter().map(|&t| psi(t, 2, 2).unwrap()).collect();
    assert!(images.windows(2).all(|w| w[1] == w[0] + 1), "{images:?}");
    for c in -6..=6 {
        assert_eq!(x_c(c, c, 2, 2), indicator_one(c, 2, 2) as u32);
    }
}

#[test]
fn psi_transports_straightening() {
    // for words avoiding 𝟙, straightening at rank r matches rank r - 1 after ψ
    for (e, r) in [(2, 2), (2, 3), (3, 2)] {
        let mut big = Straightener::new(e, r);
        let mut small = Straightener::new(e, r - 1);
        let window: Vec<i64> = (-8..=8).filter(|&t| !indicator_one(t, e, r)).collect();
        for &a in &window {
            for &b in &window {
                for &c in &window {
                    let w = [a, b, c];
                    let lhs: Vec<(Vec<i64>, LaurentPoly)> = big
                        .straighten(&w, Schedule::Insertion)
                        .iter()
                        .map(|(u, k)| {
                            (
                                u.iter().map(|&t| psi(t, e, r).unwrap()).collect(),
                                k.clone(),
                            )
                        })
                        .collect();
                    let image: Vec<i64> = w.iter().map(|&t| psi(t, e, r).unwrap()).collect();
                    let rhs: Vec<(Vec<i64>, LaurentPoly)> = small
                        .straighten(&image, Schedule::Insertion)
                        .iter()
                        .map(|(u, k)| (u.clone(), k.clone()))
                        .collect();
                    assert_eq!(lhs, rhs, "{w:?} at e = {e}, r = {r}");
                }
            }
        }
    }
}

#[test]
fn straightening_basics() {
    let mut st = Straightener::new(2, 2);
    for t in -4..=4 {
        assert!(st.straighten(&[t, t], Schedule::Insertion).is_zero());
        let v = st.straighten(&[t + 3, t], Schedule::Insertion);
        assert_eq!(v.len(), 1);
        assert!(v.coeff(&[t + 3, t]).unwrap().is_one());
    }
}

#[test]
fn encode_examples() {
    let mc = Multicharge::new(2, vec![0]).unwrap();
    let vac = encode(&mp("-"), &mc, 4).unwrap();
    assert_eq!(vac.entries, vec![0, -1, -2, -3]);
    let one = encode(&mp("1"), &mc, 4).unwrap();
    let differ = vac
        .entries
        .iter()
        .zip(&one.entries)
        .filter(|(a, b)| a != b)
        .count();
    assert_eq!(differ, 1);
    assert!(matches!(
        encode(&mp("1,1"), &mc, 1),
        Err(Error::TruncationTooShort { .. })
    ));
}

fn all_upto(n: u32, r: usize) -> Vec<Multipartition> {
    (0..=n).flat_map(|k| Multipartition::all(k, r)).collect()
}

#[test]
fn bar_is_an_involution() {
    let s = Charge::new(2, [0, 0]).unwrap();
    let oracle = WedgeOracle::new(Multicharge::well_spaced(&s, 4));
    for mu in all_upto(4, 2) {
        let x = FockVector::basis(s.clone(), mu.clone()).unwrap();
        assert_eq!(oracle.bar(&oracle.bar(&x).unwrap()).unwrap(), x, "{mu}");
        let col = oracle.bar_column(&mu).unwrap();
        assert!(col[&mu].is_one());
        for la in col.keys() {
            assert!(mu.dominates(la).unwrap(), "{la} in bar({mu})");
        }
    }
}

#[test]
fn truncation_of_bar_coefficients() {
    let s = Charge::new(2, [0, 1, 0]).unwrap();
    for n in 0..=3 {
        let mc = Multicharge::well_spaced(&s, n);
        let full = WedgeOracle::new(mc.clone());
        let reduced = WedgeOracle::new(mc.truncate().unwrap());
        for nu in Multipartition::all(n, 2) {
            let mu = nu.extend();
            let col = full.bar_column(&mu).unwrap();
            let small = reduced.bar_column(&nu).unwrap();
            assert_eq!(col.len(), small.len(), "{mu}");
            for (la, b) in col.iter() {
                assert!(la.component(1).is_empty(), "{la} in bar({mu})");
                assert_eq!(small.get(&la.truncate().unwrap()), Some(b));
            }
        }
    }
}

#[test]
fn truncation_length_does_not_matter() {
    let s = Charge::new(2, [0, 0]).unwrap();
    let oracle = WedgeOracle::new(Multicharge::well_spaced(&s, 4));
    for mu in all_upto(4, 2) {
        let l = oracle.length_for(&mu).unwrap();
        let base = oracle.column_with_length(&mu, l).unwrap();
        for extra in [2, 5] {
            assert_eq!(
                oracle.column_with_length(&mu, l + extra).unwrap(),
                base,
                "{mu}"
            );
        }
    }
    let checked = WedgeOracle::new(Multicharge::well_spaced(&s, 3)).with_length_check(true);
    for mu in all_upto(3, 2) {
        checked.bar_column(&mu).unwrap();
    }
}

#[test]
fn one_box_bar_at_level_one() {
    for s in -3..=3 {
        let mc = Multicharge::new(2, vec![s]).unwrap();
        let l = minimal_length(&mp("1"), &mc).unwrap() + 2;
        let col = bar_coefficients(&mp("1"), &mc, l).unwrap();
        assert_eq!(col.len(), 1);
        assert!(col[&mp("1")].is_one());
    }
}

#[test]
fn specific_lift_reproduces_worked_vector() {
    let mc = Multicharge::new(2, vec![12, 0]).unwrap();
    let g = WedgeOracle::new(mc)
        .canonical_basis_twisted(&mp("2,1|1"))
        .unwrap();
    let expected: Vec<(Multipartition, LaurentPoly)> = [
        ("2,1|1", 0),
        ("2|2", 1),
        ("2|1,1", 2),
        ("1,1|2", 2),
        ("1,1|1,1", 3),
        ("1|2,1", 4),
    ]
    .iter()
    .map(|(la, k)| (mp(la), LaurentPoly::monomial(1, *k)))
    .collect();
    let got: Vec<(Multipartition, LaurentPoly)> =
        g.iter().map(|(la, c)| (la.clone(), c.clone())).collect();
    let mut expected = expected;
    expected.sort_by(|a, b| a.0.cmp(&b.0));
    assert_eq!(got, expected);
}

#[test]
fn rank_one_two_one() {
    let mc = Multicharge::new(2, vec![0]).unwrap();
    let g = WedgeOracle::new(mc)
        .canonical_basis_twisted(&mp("2,1"))
        .unwrap();
    let part = higher_llt::Partition::new(vec![2, 1]).unwrap();
    assert_eq!(g, higher_llt::llt_canonical(&part, 2, 0).unwrap());
}

proptest! {
    #[test]
    fn encode_decode_round_trip(
        lifts in prop::collection::vec(-15i64..15, 1..4),
        e in 2u32..4,
        pick in 0usize..1000,
        n in 0u32..6,
        extra in 0usize..6,
    ) {
        let mc = Multicharge::new(e, lifts).unwrap();
        let all = Multipartition::all(n, mc.rank());
        let la = &all[pick % all.len()];
        let l = minimal_length(la, &mc).unwrap() + extra;
        let w = encode(la, &mc, l).unwrap();
        prop_assert!(w.entries.windows(2).all(|p| p[0] > p[1]));
        let (back, mc2) = decode(&w, e, mc.rank()).unwrap();
        prop_assert_eq!(&back, la);
        prop_assert_eq!(mc2, mc);
    }
}
