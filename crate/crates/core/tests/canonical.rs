use higher_llt::canonical::{canonical_basis_up_to_einf, same_coefficients};
use higher_llt::fock::weight_of;
use higher_llt::{
    canonical_basis_up_to, canonical_vector, decomposition_matrix, llt_canonical, CanonicalBasis,
    Charge, Error, LaurentPoly, LevelOne, Multicharge, Multipartition, Partition, TieBreak,
    WedgeOracle,
};

fn mp(text: &str) -> Multipartition {
    text.parse().unwrap()
}

fn q(k: i32) -> LaurentPoly {
    LaurentPoly::monomial(1, k)
}

#[test]
fn level_one_axioms() {
    for e in [2, 3] {
        for n in 0..=8 {
            for mu in Partition::all(n).into_iter().filter(|p| p.is_regular(e)) {
                let g = llt_canonical(&mu, e, 0).unwrap();
                let label = Multipartition::new(vec![mu.clone()]).unwrap();
                for (la, c) in g.iter() {
                    if la == &label {
                        assert!(c.is_one());
                    } else {
                        assert!(c.in_qzq(), "d_{la},{mu} = {c}");
                        assert!(label.dominates(la).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn level_one_independent_of_the_charge() {
    // shifting s1 shifts every residue, so the coefficients do not move
    for n in 0..=6 {
        for mu in Partition::all(n).into_iter().filter(|p| p.is_regular(2)) {
            let a = llt_canonical(&mu, 2, 0).unwrap();
            let b = llt_canonical(&mu, 2, 1).unwrap();
            assert!(same_coefficients(&a, &b), "{mu}");
        }
    }
}

#[test]
fn level_one_matches_rank_one_recursion() {
    let s = Charge::new(3, [0]).unwrap();
    for n in 0..=7 {
        for mu in Partition::all(n).into_iter().filter(|p| p.is_regular(3)) {
            let label = Multipartition::new(vec![mu.clone()]).unwrap();
            let a = llt_canonical(&mu, 3, 0).unwrap();
            assert_eq!(canonical_vector(&label, &s).unwrap().vector(), &a);
        }
    }
}

#[test]
fn auxiliary_vector_of_two_one() {
    // (2,1) at e = 2: ladders 1, 2, 2 give f_1^(2) f_0 s_∅
    let a = LevelOne::new(2, 0)
        .unwrap()
        .auxiliary_vector(&Partition::new(vec![2, 1]).unwrap())
        .unwrap();
    assert_eq!(a.len(), 1);
    assert!(a.coeff(&mp("2,1")).unwrap().is_one());
}

#[test]
fn random_tie_breaks_agree() {
    for (e, residues, r) in [
        (2, vec![0, 0], 2),
        (2, vec![0, 1, 0], 3),
        (3, vec![0, 1], 2),
    ] {
        let s = Charge::new(e, residues).unwrap();
        let reference = CanonicalBasis::new(e).unwrap().basis_up_to(5, &s).unwrap();
        assert!(reference.iter().all(|g| g.label().rank() == r));
        for seed in [1, 7, 2024] {
            let engine = CanonicalBasis::with_tie_break(e, TieBreak::Random(seed)).unwrap();
            for g in &reference {
                let h = engine.canonical_vector(g.label(), &s).unwrap();
                assert_eq!(h.vector(), g.vector(), "{} seed {seed}", g.label());
            }
        }
    }
}

#[test]
fn batch_and_single_agree() {
    let s = Charge::new(2, [1, 0]).unwrap();
    let all = canonical_basis_up_to(5, &s).unwrap();
    let fresh = CanonicalBasis::new(2).unwrap();
    for g in all.iter().rev() {
        assert_eq!(
            fresh.canonical_vector(g.label(), &s).unwrap().vector(),
            g.vector()
        );
    }
    let expected: usize = (0..=5)
        .map(|n| {
            Multipartition::all(n, 2)
                .iter()
                .filter(|m| m.is_multiregular(2))
                .count()
        })
        .sum();
    assert_eq!(all.len(), expected);
}

#[test]
fn first_component_empty_reduces_rank() {
    let s = Charge::new(2, [0, 1, 1]).unwrap();
    for n in 0..=4 {
        for nu in Multipartition::all(n, 2)
            .into_iter()
            .filter(|m| m.is_multiregular(2))
        {
            let small = canonical_vector(&nu, &s.truncate().unwrap()).unwrap();
            let big = canonical_vector(&nu.extend(), &s).unwrap();
            assert_eq!(big.vector().len(), small.vector().len());
            for (la, c) in small.vector().iter() {
                assert_eq!(big.vector().coeff(&la.extend()), Some(c));
            }
        }
    }
}

#[test]
fn long_first_row_strips_within_the_same_first_size() {
    // the ladder product for ((5),∅) has a coefficient outside qZ[q] at
    // ((3,2),∅), whose first component has the same size
    let s = Charge::new(2, [0, 0]).unwrap();
    let g = canonical_vector(&mp("5|-"), &s).unwrap();
    let oracle = WedgeOracle::new(Multicharge::well_spaced(&s, 5));
    assert_eq!(
        &oracle.canonical_basis_twisted(&mp("5|-")).unwrap(),
        g.vector()
    );
    assert!(g.vector().coeff(&mp("3,2|-")).is_none());
}

#[test]
fn e_infinity_is_stable() {
    let s = [0i64, 2];
    let base = canonical_basis_up_to_einf(4, &s).unwrap();
    for e in [8, 9, 12] {
        let engine = CanonicalBasis::new(e).unwrap();
        let charge = Charge::new(e, s).unwrap();
        for g in &base {
            let h = engine.canonical_vector(g.label(), &charge).unwrap();
            assert!(
                same_coefficients(g.vector(), h.vector()),
                "{} at e = {e}",
                g.label()
            );
        }
    }
}

#[test]
fn rejects_bad_input() {
    let s = Charge::new(2, [0, 0]).unwrap();
    assert!(matches!(
        canonical_vector(&mp("1,1|-"), &s),
        Err(Error::NotRegular { .. })
    ));
    assert!(matches!(
        canonical_vector(&mp("1"), &s),
        Err(Error::RankMismatch { .. })
    ));
}

#[test]
fn worked_block_at_size_four() {
    let s = Charge::new(2, [0, 0]).unwrap();
    let entries = canonical_basis_up_to(4, &s).unwrap();
    let w = weight_of(&mp("4|-"), &s);
    let m = decomposition_matrix(&entries, Some(&w)).unwrap();
    assert!(m.cols.contains(&mp("4|-")) && m.cols.contains(&mp("2,1|1")));
    let col = mp("2,1|1");
    for (la, k) in [
        ("2,1|1", 0),
        ("2|2", 1),
        ("2|1,1", 2),
        ("1,1|2", 2),
        ("1,1|1,1", 3),
        ("1|2,1", 4),
    ] {
        assert_eq!(m.get(&mp(la), &col), Some(&q(k)));
    }
    let col = mp("4|-");
    assert_eq!(m.get(&mp("1|2,1"), &col), Some(&q(2)));
    assert_eq!(m.get(&mp("-|1,1,1,1"), &col), Some(&q(4)));
    assert_eq!(m.get(&mp("2,2|-"), &col), Some(&LaurentPoly::zero()));

    let none = weight_of(&mp("1|-"), &Charge::new(2, [1, 1]).unwrap());
    assert!(decomposition_matrix(&entries, Some(&none))
        .unwrap()
        .is_empty());
}

#[test]
fn empty_label_gives_one_by_one_matrix() {
    let s = Charge::new(2, [0, 0]).unwrap();
    let entries = canonical_basis_up_to(0, &s).unwrap();
    let m = decomposition_matrix(&entries, None).unwrap();
    assert_eq!((m.rows.len(), m.cols.len()), (1, 1));
    assert!(m.cells[0][0].is_one());
}
