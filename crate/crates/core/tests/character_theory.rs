use std::collections::BTreeMap;

use hyperoct::characters::{
    bn_irreducible, character_table, coset_permutation_character, coxeter_element, decompose,
    induced_rho, induction_product, regular_character, rho_character, sign_twist, sn_character,
    CharacterTable, ClassFunction, SubgroupCharacter,
};
use hyperoct::cyclotomic::{cyclotomic_polynomial, CyclotomicNumber};
use hyperoct::scalar::{frac, int};
use hyperoct::signed::{
    group_order, CentralizerGenerator, Partition, SignedPartition, SignedPermutation,
};
use hyperoct::Rational;
use num_bigint::BigInt;
use num_traits::{One, Zero};

fn sp(s: &str) -> SignedPartition {
    s.parse().unwrap()
}

fn chi(s: &str) -> ClassFunction {
    bn_irreducible(&sp(s))
}

fn row(f: &ClassFunction, classes: &[&str]) -> Vec<Rational> {
    classes.iter().map(|c| f.value(&sp(c))).collect()
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

const B2_CLASSES: [&str; 5] = ["(1,1|)", "(2|)", "(1|1)", "(|2)", "(|1,1)"];

#[test]
fn rank_one_table() {
    let classes = ["(1|)", "(|1)"];
    assert_eq!(row(&chi("(1|)"), &classes), ints(&[1, 1]));
    assert_eq!(row(&chi("(|1)"), &classes), ints(&[1, -1]));
}

#[test]
fn rank_two_table() {
    let expected: [(&str, [i64; 5]); 5] = [
        ("(2|)", [1, 1, 1, 1, 1]),
        ("(|1,1)", [1, -1, -1, 1, 1]),
        ("(1,1|)", [1, -1, 1, -1, 1]),
        ("(|2)", [1, 1, -1, -1, 1]),
        ("(1|1)", [2, 0, 0, 0, -2]),
    ];
    for (label, values) in expected {
        assert_eq!(row(&chi(label), &B2_CLASSES), ints(&values), "{label}");
    }
    assert_eq!(character_table(2).rows().len(), 5);
}

#[test]
fn symmetric_group_characters() {
    let p = |v: Vec<usize>| Partition::new(v);
    for n in 1..=5 {
        for mu in Partition::all(n) {
            assert_eq!(sn_character(&p(vec![n]), &mu), 1);
        }
    }
    let mut transposition = vec![2];
    transposition.extend(vec![1; 2]);
    assert_eq!(sn_character(&p(vec![1; 4]), &p(transposition)), -1);
    assert_eq!(sn_character(&p(vec![2, 1]), &p(vec![1, 1, 1])), 2);
    // the permutation module of S_3 on three points is trivial + (2,1)
    for mu in Partition::all(3) {
        let fixed = mu.parts().iter().filter(|&&k| k == 1).count() as i64;
        assert_eq!(sn_character(&p(vec![3]), &mu) + sn_character(&p(vec![2, 1]), &mu), fixed);
    }
    // orthonormality under the S_n inner product
    for n in 1..=5 {
        let fact = hyperoct::scalar::factorial(n) as i64;
        for a in Partition::all(n) {
            for b in Partition::all(n) {
                let mut s = 0i64;
                for mu in Partition::all(n) {
                    let z: i64 = mu
                        .multiplicities()
                        .iter()
                        .map(|(k, m)| (*k as i64).pow(*m as u32) * hyperoct::scalar::factorial(*m) as i64)
                        .product();
                    s += fact / z * sn_character(&a, &mu) * sn_character(&b, &mu);
                }
                assert_eq!(s, if a == b { fact } else { 0 });
            }
        }
    }
}

#[test]
fn linear_characters() {
    for n in 1..=4 {
        let ones = vec![1; n];
        let triv = bn_irreducible(&SignedPartition::new(vec![n], vec![]));
        let neg = bn_irreducible(&SignedPartition::new(vec![], vec![n]));
        let sign = bn_irreducible(&SignedPartition::new(ones.clone(), vec![]));
        let both = bn_irreducible(&SignedPartition::new(vec![], ones));
        for g in SignedPermutation::all(n) {
            let negs = if g.negative_count() % 2 == 0 { 1 } else { -1 };
            let sgn = perm_sign(&g.forget_signs());
            assert_eq!(triv.evaluate(&g), int(1));
            assert_eq!(neg.evaluate(&g), int(negs), "{g}");
            assert_eq!(sign.evaluate(&g), int(sgn), "{g}");
            assert_eq!(both.evaluate(&g), int(negs * sgn), "{g}");
        }
    }
}

fn perm_sign(w: &SignedPermutation) -> i64 {
    let v = w.one_line();
    let mut inv = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

#[test]
fn pullback_along_forgetting_signs() {
    for lam in Partition::all(3) {
        let f = bn_irreducible(&SignedPartition::from_parts(lam.clone(), Partition::default()));
        for g in SignedPermutation::all(3) {
            let ct = g.forget_signs().cycle_type();
            assert_eq!(f.evaluate(&g), int(sn_character(&lam, ct.positive())));
        }
    }
    for lam in Partition::all(3) {
        let f = bn_irreducible(&SignedPartition::from_parts(Partition::default(), lam.clone()));
        let g = bn_irreducible(&SignedPartition::from_parts(lam, Partition::default()));
        assert_eq!(f, sign_twist(&g));
    }
}

#[test]
fn induction_products() {
    let prod = induction_product(&chi("(1|)"), &chi("(|1)"));
    assert_eq!(row(&prod, &B2_CLASSES), ints(&[2, 0, 0, 0, -2]));
    let perm = induction_product(&chi("(1|)"), &chi("(1|)"));
    assert_eq!(perm.degree(), int(2));
    assert_eq!(
        decompose(&perm).unwrap(),
        BTreeMap::from([(sp("(2|)"), 1), (sp("(1,1|)"), 1)])
    );
    for (a, b) in [("(2|)", "(|1)"), ("(1|1)", "(1|)"), ("(1,1|)", "(|2)")] {
        let (x, y) = (chi(a), chi(b));
        let na = sp(a).size();
        let nb = sp(b).size();
        let binom = (1..=nb).fold(1i64, |acc, k| acc * (na + k) as i64 / k as i64);
        assert_eq!(
            induction_product(&x, &y).degree(),
            int(binom) * x.degree() * y.degree()
        );
    }
}

fn check_table(table: &CharacterTable) {
    let n = table.rank();
    let rows = table.rows();
    assert_eq!(rows.len(), SignedPartition::all(n).len());
    let burnside: Rational = rows.iter().map(|(_, f)| f.degree() * f.degree()).sum();
    assert_eq!(burnside, int(group_order(n) as i64));
    for (a, f) in rows {
        for (b, g) in rows {
            let expected = if a == b { Rational::one() } else { Rational::zero() };
            assert_eq!(f.inner_product(g), expected, "{a} {b}");
        }
    }
    // column orthogonality
    for c in SignedPartition::all(n) {
        for d in SignedPartition::all(n) {
            let s: Rational = rows.iter().map(|(_, f)| f.value(&c) * f.value(&d)).sum();
            let expected = if c == d {
                int(c.centralizer_order() as i64)
            } else {
                Rational::zero()
            };
            assert_eq!(s, expected, "{c} {d}");
        }
    }
}

#[test]
fn character_tables_are_orthogonal() {
    for n in 1..=4 {
        check_table(&character_table(n));
    }
}

#[test]
fn table_json_round_trip() {
    let t = CharacterTable::compute(3);
    let back = CharacterTable::from_json(&t.to_json()).unwrap();
    assert_eq!(back.rows(), t.rows());
    let f = chi("(1|1)");
    assert_eq!(ClassFunction::from_json(&f.to_json()).unwrap(), f);
}

#[test]
fn inner_products_and_decomposition() {
    for n in 1..=3 {
        let reg = regular_character(n);
        for (lam, f) in character_table(n).rows() {
            assert_eq!(reg.inner_product(f), f.degree(), "{lam}");
        }
        let parts = decompose(&reg).unwrap();
        for (lam, m) in parts {
            assert_eq!(int(m as i64), bn_irreducible(&lam).degree());
        }
    }
    let half = chi("(2|)").scale(&frac(1, 2));
    assert!(decompose(&half).is_err());
    let diff = chi("(2|)").sub(&chi("(|2)"));
    assert!(decompose(&diff).is_err());
}

#[test]
fn centralizer_characters() {
    for n in 1..=4 {
        for lam in SignedPartition::all(n) {
            let rho = rho_character(&lam).unwrap();
            assert_eq!(rho.order() as u64 * lam.class_size(), group_order(n), "{lam}");
            let induced = rho.induce().unwrap();
            assert!(decompose(&induced).is_ok(), "{lam}");
        }
        let lam = SignedPartition::new(vec![], vec![n]);
        let rho = rho_character(&lam).unwrap();
        assert_eq!(rho.order(), 2 * n);
        assert_eq!(rho.root_order(), 2 * n as u32);
        let gen = &lam.centralizer_generators()[0].element;
        assert_eq!(rho.exponent(gen), Some(1));
        let ones = SignedPartition::new(vec![1; n], vec![]);
        let rho = rho_character(&ones).unwrap();
        assert_eq!(rho.root_order(), 1);
    }
}

#[test]
fn induced_characters() {
    for n in 1..=3 {
        let trivial = SubgroupCharacter::generate(n, &[]).unwrap();
        assert_eq!(trivial.order(), 1);
        assert_eq!(trivial.induce().unwrap(), regular_character(n));
    }
    assert_eq!(induced_rho(&sp("(|1)")).unwrap(), chi("(|1)"));
    for n in 1..=4 {
        let lam = SignedPartition::new(vec![], vec![n]);
        let expected = (1u64 << (n - 1)) * hyperoct::scalar::factorial(n - 1);
        assert_eq!(induced_rho(&lam).unwrap().degree(), int(expected as i64));
    }
}

#[test]
fn coxeter_induction_two_ways() {
    for n in 1..=4 {
        let mut eta: Vec<i32> = (2..=n as i32).collect();
        eta.push(1);
        let gens = [
            CentralizerGenerator {
                element: SignedPermutation::new(eta).unwrap(),
                root_order: n as u32,
            },
            CentralizerGenerator {
                element: SignedPermutation::negation(n),
                root_order: 2,
            },
        ];
        let h = SubgroupCharacter::generate(n, &gens).unwrap();
        assert_eq!(h.order(), 2 * n);
        let lam = SignedPartition::new(vec![], vec![n]);
        assert_eq!(h.induce().unwrap(), induced_rho(&lam).unwrap(), "n = {n}");
    }
}

#[test]
fn inconsistent_generator_values_are_rejected() {
    let gens = [
        CentralizerGenerator {
            element: SignedPermutation::sign_change(1, 1),
            root_order: 4,
        },
    ];
    assert!(SubgroupCharacter::generate(1, &gens).is_err());
}

#[test]
fn coset_characters() {
    for n in 1..=4 {
        let f = coset_permutation_character(n);
        assert_eq!(f.degree(), int((group_order(n) / (2 * n as u64)) as i64));
        assert_eq!(f.inner_product(&chi(&format!("({n}|)"))), int(1));
        assert_eq!(coxeter_element(n).order(), 2 * n);
    }
    assert_eq!(
        decompose(&coset_permutation_character(2)).unwrap(),
        BTreeMap::from([(sp("(2|)"), 1), (sp("(|1,1)"), 1)])
    );
}

#[test]
fn cyclotomic_polynomials() {
    let b = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    assert_eq!(*cyclotomic_polynomial(1), b(&[-1, 1]));
    assert_eq!(*cyclotomic_polynomial(2), b(&[1, 1]));
    assert_eq!(*cyclotomic_polynomial(4), b(&[1, 0, 1]));
    assert_eq!(*cyclotomic_polynomial(6), b(&[1, -1, 1]));
    assert_eq!(*cyclotomic_polynomial(8), b(&[1, 0, 0, 0, 1]));
    assert_eq!(*cyclotomic_polynomial(12), b(&[1, 0, -1, 0, 1]));
}

#[test]
fn cyclotomic_arithmetic() {
    let w4 = CyclotomicNumber::root_power(4, 1);
    assert_eq!(w4.mul(&w4).to_rational(), Some(int(-1)));
    assert_eq!(w4.to_rational(), None);
    for m in [1u32, 2, 3, 4, 6, 8, 12] {
        let total = (0..m)
            .map(|k| CyclotomicNumber::root_power(m, k))
            .fold(CyclotomicNumber::zero(m), |a, b| a.add(&b));
        let expected = if m == 1 { int(1) } else { int(0) };
        assert_eq!(total.to_rational(), Some(expected));
        let w = CyclotomicNumber::root_power(m, 1);
        let mut p = CyclotomicNumber::from_rational(m, int(1));
        for _ in 0..m {
            p = p.mul(&w);
        }
        assert_eq!(p.to_rational(), Some(int(1)));
    }
    // ω_8 + ω_8^7 = √2
    let s = CyclotomicNumber::root_power(8, 1).add(&CyclotomicNumber::root_power(8, 7));
    assert_eq!(s.to_rational(), None);
    assert_eq!(s.mul(&s).to_rational(), Some(int(2)));
    let half = CyclotomicNumber::root_power(6, 1).scale(&frac(1, 2));
    assert!(!half.is_zero());
}
