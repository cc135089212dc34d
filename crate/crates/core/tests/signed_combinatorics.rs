use std::collections::{BTreeMap, BTreeSet};

use hyperoct::signed::{
    group_order, Partition, SignedComposition, SignedPartition, SignedPermutation,
};
use proptest::prelude::*;

fn perm(s: &str) -> SignedPermutation {
    s.parse().unwrap()
}

fn sp(s: &str) -> SignedPartition {
    s.parse().unwrap()
}

fn closure(n: usize, gens: &[SignedPermutation]) -> BTreeSet<SignedPermutation> {
    let mut seen = BTreeSet::from([SignedPermutation::identity(n)]);
    let mut frontier = vec![SignedPermutation::identity(n)];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.compose(g).unwrap();
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen
}

#[test]
fn composition_is_right_to_left() {
    let s1 = SignedPermutation::simple_transposition(2, 1);
    let t2 = SignedPermutation::sign_change(2, 2);
    // (s1 t2)(1) = s1(t2(1)) = 2
    assert_eq!(s1.compose(&t2).unwrap().one_line(), vec![2, -1]);
    assert_eq!(t2.compose(&s1).unwrap().one_line(), vec![-2, 1]);
    let t1 = SignedPermutation::sign_change(3, 1);
    assert_eq!(t1.compose(&t1).unwrap(), SignedPermutation::identity(3));
    let x = perm("2,-3,1");
    assert_eq!(x.compose(&SignedPermutation::identity(3)).unwrap(), x);
    assert!(x.compose(&SignedPermutation::identity(2)).is_err());
}

#[test]
fn parsing_and_printing() {
    let x = perm("2,-3,1,7,-6,5,4");
    assert_eq!(x.to_string(), "2,-3,1,7,-6,5,4");
    assert!("1,1".parse::<SignedPermutation>().is_err());
    assert!("1,3".parse::<SignedPermutation>().is_err());
    assert_eq!(sp("(2|3,2)"), SignedPartition::new(vec![2], vec![2, 3]));
    assert_eq!(sp("(2|3,2)").to_string(), "(2|3,2)");
}

#[test]
fn cycle_types() {
    assert_eq!(perm("2,-3,1,7,-6,5,4").cycle_type(), sp("(2|3,2)"));
    assert_eq!(SignedPermutation::identity(4).cycle_type(), sp("(1,1,1,1|)"));
    assert_eq!(SignedPermutation::negation(3).cycle_type(), sp("(|1,1,1)"));
}

#[test]
fn mr_shapes() {
    let c = |v: Vec<i32>| SignedComposition::new(v).unwrap();
    assert_eq!(perm("3,4,-1,-5,-2").mr_shape(), c(vec![2, -2, -1]));
    assert_eq!(SignedPermutation::identity(4).mr_shape(), c(vec![4]));
    assert_eq!(perm("-1,-2").mr_shape(), c(vec![-2]));
}

#[test]
fn forgetting_signs() {
    assert_eq!(perm("-2,1,-3").forget_signs(), perm("2,1,3"));
    assert_eq!(perm("3,1,2").forget_signs(), perm("3,1,2"));
    assert_eq!(
        SignedPermutation::negation(4).forget_signs(),
        SignedPermutation::identity(4)
    );
}

#[test]
fn conjugacy_class_data() {
    assert_eq!(SignedPartition::all(2).len(), 5);
    let one = SignedPartition::all(1);
    assert_eq!(one, vec![sp("(1|)"), sp("(|1)")]);
    assert!(one.iter().all(|c| c.class_size() == 1));
    // brute force: group B_3 by cycle type of the conjugation orbit of each representative
    let group = SignedPermutation::all(3);
    let classes = SignedPartition::all(3);
    assert_eq!(classes.len(), 10);
    for lam in &classes {
        let rep = lam.standard_representative();
        let orbit: BTreeSet<_> = group
            .iter()
            .map(|x| x.compose(&rep).unwrap().compose(&x.inverse()).unwrap())
            .collect();
        assert_eq!(orbit.len() as u64, lam.class_size(), "{lam}");
        assert!(orbit.iter().all(|g| g.cycle_type() == *lam));
    }
    assert_eq!(classes.iter().map(|c| c.class_size()).sum::<u64>(), 48);
}

#[test]
fn class_sizes_sum_to_group_order() {
    for n in 1..=5 {
        let total: u64 = SignedPartition::all(n).iter().map(|c| c.class_size()).sum();
        assert_eq!(total, group_order(n));
        let mut counts: BTreeMap<SignedPartition, u64> = BTreeMap::new();
        if n <= 4 {
            for g in SignedPermutation::all(n) {
                *counts.entry(g.cycle_type()).or_default() += 1;
            }
            for (lam, k) in counts {
                assert_eq!(k, lam.class_size(), "{lam}");
            }
        }
    }
}

#[test]
fn standard_representatives() {
    assert_eq!(
        sp("(2,1|2,2)").standard_representative(),
        perm("2,1,3,5,-4,7,-6")
    );
    assert_eq!(sp("(4|)").standard_representative(), perm("2,3,4,1"));
    assert_eq!(sp("(|1)").standard_representative(), perm("-1"));
    for n in 1..=5 {
        for lam in SignedPartition::all(n) {
            assert_eq!(lam.standard_representative().cycle_type(), lam);
        }
    }
}

#[test]
fn centralizer_generators() {
    let gens = sp("(2,1|2,2)").centralizer_generators();
    assert!(gens.iter().any(|g| g.element == perm("1,2,3,6,7,4,5")));
    for n in 1..=4 {
        let lam = SignedPartition::new(vec![], vec![n]);
        let gens = lam.centralizer_generators();
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].element.order(), 2 * n);
    }
    for n in 1..=4 {
        for lam in SignedPartition::all(n) {
            let rep = lam.standard_representative();
            let gens: Vec<_> = lam
                .centralizer_generators()
                .into_iter()
                .map(|g| g.element)
                .collect();
            for g in &gens {
                assert_eq!(g.compose(&rep).unwrap(), rep.compose(g).unwrap());
            }
            assert_eq!(closure(n, &gens).len() as u64, lam.centralizer_order(), "{lam}");
        }
    }
}

#[test]
fn composition_helpers() {
    let p = SignedComposition::new(vec![2, -2, 1]).unwrap();
    assert_eq!(p.size(), 5);
    assert_eq!(p.unsigned(), vec![2, 2, 1]);
    assert_eq!(p.blocks(), vec![vec![1, 2], vec![3, 4], vec![5]]);
    assert_eq!(p.sorted(), sp("(2,1|2)"));
    assert_eq!(p.partial_sums(), vec![2, 4]);
    assert!(SignedComposition::new(vec![4]).unwrap().partial_sums().is_empty());
    assert!(SignedComposition::new(vec![1, 0]).is_err());
}

#[test]
fn mr_shape_on_unsigned_is_descent_composition() {
    for w in SignedPermutation::all_unsigned(4) {
        let mut cuts = w.descents();
        cuts.push(4);
        let mut prev = 0;
        let parts: Vec<i32> = cuts
            .into_iter()
            .map(|c| {
                let k = (c - prev) as i32;
                prev = c;
                k
            })
            .collect();
        assert_eq!(w.mr_shape(), SignedComposition::new(parts).unwrap());
    }
}

#[test]
fn forget_signs_is_multiplicative_on_small_ranks() {
    for n in 1..=3 {
        let g = SignedPermutation::all(n);
        for a in &g {
            for b in &g {
                assert_eq!(
                    a.compose(b).unwrap().forget_signs(),
                    a.forget_signs().compose(&b.forget_signs()).unwrap()
                );
            }
        }
    }
}

#[test]
fn partitions_enumerate() {
    let counts: Vec<usize> = (0..=6).map(|n| Partition::all(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11]);
    assert_eq!(SignedComposition::all(3).len(), 2 * 9);
}

fn signed_perm(n: usize) -> impl Strategy<Value = SignedPermutation> {
    (0..group_order(n) as usize).prop_map(move |i| SignedPermutation::from_index(n, i))
}

proptest! {
    #[test]
    fn cycle_type_is_a_class_invariant(
        (s, t) in (1usize..=4).prop_flat_map(|n| (signed_perm(n), signed_perm(n)))
    ) {
        let conj = t.compose(&s).unwrap().compose(&t.inverse()).unwrap();
        prop_assert_eq!(conj.cycle_type(), s.cycle_type());
    }

    #[test]
    fn inverse_is_two_sided(s in (1usize..=6).prop_flat_map(signed_perm)) {
        let id = SignedPermutation::identity(s.rank());
        prop_assert_eq!(s.compose(&s.inverse()).unwrap(), id.clone());
        prop_assert_eq!(s.inverse().compose(&s).unwrap(), id);
    }

    #[test]
    fn index_round_trips(s in (1usize..=6).prop_flat_map(signed_perm)) {
        prop_assert_eq!(SignedPermutation::from_index(s.rank(), s.index()), s);
    }

    #[test]
    fn printing_round_trips(s in (1usize..=6).prop_flat_map(signed_perm)) {
        prop_assert_eq!(s.to_string().parse::<SignedPermutation>().unwrap(), s);
    }
}
