use std::collections::BTreeSet;

use hyperoct::chambers::{evaluation_matrix, fixing_zero, stabilizer, Chamber};
use hyperoct::characters::{coset_permutation_character, coxeter_element, ClassFunction};
use hyperoct::scalar::int;
use hyperoct::signed::{Letter, SignedPartition, SignedPermutation};

fn letters(n: usize) -> Vec<Letter> {
    (0..=n).flat_map(|p| [Letter::new(p, false), Letter::new(p, true)]).collect()
}

fn distinct(ls: &[Letter]) -> bool {
    (0..ls.len()).all(|a| (a + 1..ls.len()).all(|b| ls[a] != ls[b]))
}

#[test]
fn heaviside_table_for_rank_two() {
    let l = |i: i32| {
        if i == 0 {
            Letter::ZERO
        } else {
            Letter::from_signed(i)
        }
    };
    let zb = Letter::ZERO_BAR;
    let columns = [
        (l(0), zb, l(1)),
        (l(0), zb, l(2)),
        (l(0), l(1), l(2)),
        (l(0), l(1), l(-2)),
        (l(0), l(-1), l(2)),
        (l(0), l(-1), l(-2)),
    ];
    let rows: [(&[i32], [u8; 6]); 8] = [
        (&[1, 2], [0, 0, 1, 1, 0, 1]),
        (&[2, 1], [0, 0, 0, 1, 0, 0]),
        (&[-1, 2], [1, 0, 0, 1, 1, 1]),
        (&[2, -1], [1, 0, 0, 0, 0, 1]),
        (&[1, -2], [0, 1, 1, 1, 1, 0]),
        (&[-2, 1], [0, 1, 1, 0, 0, 0]),
        (&[-1, -2], [1, 1, 1, 0, 1, 1]),
        (&[-2, -1], [1, 1, 0, 0, 1, 0]),
    ];
    let mut seen = BTreeSet::new();
    for (word, values) in rows {
        let ch = Chamber::new(word.to_vec()).unwrap();
        for ((a, b, c), v) in columns.iter().zip(values) {
            assert_eq!(ch.heaviside(*a, *b, *c).unwrap() as u8, v, "{ch} y_{a}{b}{c}");
        }
        seen.insert(ch);
    }
    assert_eq!(seen.len(), Chamber::all(2).len());
}

#[test]
fn printing() {
    assert_eq!(Chamber::new(vec![1, -2]).unwrap().to_string(), "(0,1,-2,-0,-1,2)");
}

#[test]
fn cyclic_relations_hold_pointwise() {
    for n in 1..=3 {
        let ls = letters(n);
        for ch in Chamber::all(n) {
            let y = |a: Letter, b: Letter, c: Letter| ch.heaviside(a, b, c).unwrap() as i64;
            for &i in &ls {
                for &j in &ls {
                    for &k in &ls {
                        if !distinct(&[i, j, k]) {
                            continue;
                        }
                        let v = y(i, j, k);
                        assert_eq!(v * (1 - v), 0);
                        assert_eq!(v, 1 - y(i, k, j));
                        if distinct(&[i.bar(), j, k]) {
                            assert_eq!(y(i.bar(), j, k), y(i, j.bar(), k.bar()));
                        }
                        for &l in &ls {
                            if !distinct(&[i, j, k, l]) {
                                continue;
                            }
                            assert_eq!(y(i, j, k) - y(i, j, l) + y(i, k, l) - y(j, k, l), 0);
                            let (a, b, c) = (y(i, j, k), y(i, k, l), y(i, j, l));
                            assert_eq!(a * b * (1 - c) + (1 - a) * (1 - b) * c, 0);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn ungraded_relations_hold_pointwise() {
    for n in 1..=3 {
        let idx: Vec<i32> = (1..=n as i32).flat_map(|i| [i, -i]).collect();
        for ch in Chamber::all(n) {
            let e = |a: i32, b: i32| ch.edge_value(a, b).unwrap() as i64;
            let v = |a: i32| ch.loop_value(a).unwrap() as i64;
            for &i in &idx {
                assert_eq!(v(i) * (1 - v(i)), 0);
                assert_eq!(v(i) - (1 - v(-i)), 0);
                for &j in &idx {
                    if i.abs() == j.abs() {
                        continue;
                    }
                    assert_eq!(e(i, j) * (1 - e(i, j)), 0);
                    assert_eq!(v(i) - v(j) + e(i, j) - e(-i, -j), 0, "{ch} {i} {j}");
                    assert_eq!(e(i, j) * v(i) * (1 - v(j)) + (1 - e(i, j)) * (1 - v(i)) * v(j), 0);
                    assert_eq!(
                        v(j) * e(i, -j) * (1 - e(i, j)) + (1 - v(j)) * (1 - e(i, -j)) * e(i, j),
                        0
                    );
                    for &k in &idx {
                        if k.abs() == i.abs() || k.abs() == j.abs() {
                            continue;
                        }
                        assert_eq!(
                            e(i, j) * e(j, k) * (1 - e(i, k)) + (1 - e(i, j)) * (1 - e(j, k)) * e(i, k),
                            0
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn chamber_action_is_a_group_action() {
    for n in 1..=2 {
        let group = SignedPermutation::all(n + 1);
        for ch in Chamber::all(n) {
            for a in &group {
                for b in &group {
                    let ab = a.compose(b).unwrap();
                    assert_eq!(ch.act(&ab).unwrap(), ch.act(b).unwrap().act(a).unwrap());
                }
            }
        }
    }
}

#[test]
fn chamber_action_transports_heaviside_values() {
    for n in 1..=3 {
        let ls = letters(n);
        let group = SignedPermutation::all(n + 1);
        for ch in Chamber::all(n).iter().take(6) {
            for sigma in &group {
                let moved = ch.act(sigma).unwrap();
                for &i in &ls {
                    for &j in &ls {
                        for &k in &ls {
                            if !distinct(&[i, j, k]) {
                                continue;
                            }
                            assert_eq!(
                                moved.heaviside(i.act(sigma), j.act(sigma), k.act(sigma)).unwrap(),
                                ch.heaviside(i, j, k).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn subgroup_fixing_zero_acts_simply_transitively() {
    for n in 1..=4 {
        let all: BTreeSet<Chamber> = Chamber::all(n).into_iter().collect();
        assert_eq!(all.len() as u64, (1u64 << n) * hyperoct::scalar::factorial(n));
        let start = Chamber::new((1..=n as i32).collect()).unwrap();
        let orbit: BTreeSet<Chamber> = SignedPermutation::all(n)
            .iter()
            .map(|s| {
                let native = start.act_fixing_zero(s).unwrap();
                assert_eq!(native, start.act(&fixing_zero(s)).unwrap());
                native
            })
            .collect();
        assert_eq!(orbit, all);
    }
}

#[test]
fn stabilizer_is_generated_by_the_coxeter_element() {
    for n in 1..=3 {
        let ch = Chamber::new((1..=n as i32).collect()).unwrap();
        let stab: BTreeSet<SignedPermutation> = stabilizer(&ch).unwrap().into_iter().collect();
        let c = coxeter_element(n + 1);
        let mut cyclic = BTreeSet::new();
        let mut power = SignedPermutation::identity(n + 1);
        loop {
            cyclic.insert(power.clone());
            power = power.compose(&c).unwrap();
            if power == SignedPermutation::identity(n + 1) {
                break;
            }
        }
        assert_eq!(cyclic.len(), 2 * (n + 1));
        assert_eq!(stab, cyclic);
    }
}

#[test]
fn fixed_points_give_the_coset_character() {
    for n in 1..=3 {
        let chambers = Chamber::all(n);
        let fixed = ClassFunction::from_fn(n + 1, |class: &SignedPartition| {
            let g = class.standard_representative();
            int(chambers.iter().filter(|ch| ch.act(&g).unwrap() == **ch).count() as i64)
        });
        assert_eq!(fixed, coset_permutation_character(n + 1));
    }
}

#[test]
fn evaluation_matrices_have_full_rank() {
    for n in 1..=3 {
        let m = evaluation_matrix(n).unwrap();
        let size = (1usize << n) * hyperoct::scalar::factorial(n) as usize;
        assert_eq!(m.entries.len(), size);
        assert_eq!(m.columns.len(), size);
        assert_eq!(m.rank, size);
        assert!(m.entries.iter().all(|row| row[0] == 1));
    }
}
