use higher_llt::{Charge, Multipartition, Node, Partition};

fn all_upto(n: u32, r: usize) -> Vec<Multipartition> {
    (0..=n).flat_map(|k| Multipartition::all(k, r)).collect()
}

#[test]
fn dominance_is_a_partial_order() {
    for r in 1..=2 {
        for n in 0..=6 {
            let all = Multipartition::all(n, r);
            for a in &all {
                assert!(a.dominates(a).unwrap());
                for b in &all {
                    let ab = a.dominates(b).unwrap();
                    if ab && b.dominates(a).unwrap() {
                        assert_eq!(a, b);
                    }
                    if !ab {
                        continue;
                    }
                    for c in &all {
                        if b.dominates(c).unwrap() {
                            assert!(a.dominates(c).unwrap(), "{a} {b} {c}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn total_order_extends_dominance() {
    for r in 1..=3 {
        for n in 0..=5 {
            let all = Multipartition::all(n, r);
            for a in &all {
                for b in &all {
                    if a.dominates(b).unwrap() {
                        assert!(a >= b, "{a} dominates {b}");
                    }
                }
            }
        }
    }
}

#[test]
fn dominance_implies_refined_order() {
    for r in 1..=3 {
        for n in 0..=5 {
            let all = Multipartition::all(n, r);
            for a in &all {
                for b in &all {
                    if a.dominates(b).unwrap() {
                        assert!(a.refine_order_gte(b).unwrap(), "{a} ⊵ {b}");
                    }
                }
            }
        }
    }
}

#[test]
fn ladders_have_one_residue() {
    for e in 2..=4 {
        for n in 0..=12 {
            for p in Partition::all(n) {
                for s1 in 0..e {
                    let s = Charge::new(e, [s1 as i64]).unwrap();
                    for ladder in p.ladders(e, s1) {
                        assert_eq!(ladder.size as usize, ladder.nodes.len());
                        for &(i, j) in &ladder.nodes {
                            assert_eq!(i + (e - 1) * (j - 1), ladder.index);
                            assert_eq!(s.residue_of(&Node::new(i, j, 1)), ladder.residue);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn add_and_remove_are_inverse() {
    let s = Charge::new(3, [0, 2]).unwrap();
    for la in all_upto(5, 2) {
        for i in 0..3 {
            for node in la.addable_nodes(i, &s) {
                let bigger = la.add_node(&node).unwrap();
                assert_eq!(bigger.size(), la.size() + 1);
                assert!(bigger.removable_nodes(i, &s).contains(&node));
                assert_eq!(bigger.remove_node(&node).unwrap(), la);
            }
            for node in la.removable_nodes(i, &s) {
                assert_eq!(la.remove_node(&node).unwrap().add_node(&node).unwrap(), la);
            }
        }
    }
}

#[test]
fn node_order_is_total_on_addable_and_removable() {
    let s = Charge::new(2, [0, 1]).unwrap();
    for la in all_upto(5, 2) {
        for i in 0..2 {
            let mut nodes = la.addable_nodes(i, &s);
            nodes.extend(la.removable_nodes(i, &s));
            for a in &nodes {
                assert!(!a.is_above(a));
                for b in &nodes {
                    if a != b {
                        assert!(a.is_above(b) ^ b.is_above(a), "{a} {b} in {la}");
                    }
                }
            }
        }
    }
}

#[test]
fn truncate_extend_zero_first() {
    for nu in all_upto(4, 2) {
        assert_eq!(nu.extend().truncate().unwrap(), nu);
    }
    for mu in all_upto(4, 3) {
        assert_eq!(mu.truncate().unwrap().extend(), mu.zero_first());
    }
}

#[test]
fn regular_partitions_count() {
    // number of 2-regular partitions equals partitions into odd parts
    let odd = [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10];
    for (n, &expected) in odd.iter().enumerate() {
        let got = Partition::all(n as u32)
            .iter()
            .filter(|p| p.is_regular(2))
            .count();
        assert_eq!(got, expected, "n = {n}");
    }
}
