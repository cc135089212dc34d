//! The verification suites. Each suite turns one family of identities into a
//! list of checks at a given rank.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use clap::ValueEnum;
use hyperoct::algebra::{
    graded_idempotent, hyperoctahedral_idempotent, right_ideal_character, tau_map,
    type_a_graded_idempotent, type_a_idempotent, AlgebraElement,
};
use hyperoct::chambers::{evaluation_matrix, stabilizer, Chamber};
use hyperoct::characters::{
    bn_irreducible, character_table, coset_permutation_character, coxeter_element, decompose,
    induced_rho, regular_character, ClassFunction, SubgroupCharacter,
};
use hyperoct::par;
use hyperoct::rings::characters::{
    bigraded_character, bigraded_counts, graded_characters, hilbert_series, monomial_type,
    nbc_basis, type_characters,
};
use hyperoct::rings::engine::defining_relations;
use hyperoct::rings::equivariant::{equivariant_relations, UValue};
use hyperoct::rings::generators::{edge_label, loop_label};
use hyperoct::rings::{act, Flavor, RingElement, Space};
use hyperoct::scalar::{factorial, int, pretty};
use hyperoct::signed::{
    group_order, CentralizerGenerator, Letter, SignedPartition, SignedPermutation,
};
use hyperoct::Rational;
use num_traits::{One, Zero};

use crate::report::{Check, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    Idempotents,
    Tau,
    Characters,
    TablesB2,
    Hilbert,
    MainIso,
    Recursion,
    Ungraded,
    Gn1,
    Bigrading,
    Equivariant,
    Chambers,
    All,
}

impl Suite {
    pub const INDIVIDUAL: [Suite; 12] = [
        Suite::Idempotents,
        Suite::Tau,
        Suite::Characters,
        Suite::TablesB2,
        Suite::Hilbert,
        Suite::MainIso,
        Suite::Recursion,
        Suite::Ungraded,
        Suite::Gn1,
        Suite::Bigrading,
        Suite::Equivariant,
        Suite::Chambers,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Idempotents => "idempotents",
            Suite::Tau => "tau",
            Suite::Characters => "characters",
            Suite::TablesB2 => "tables-b2",
            Suite::Hilbert => "hilbert",
            Suite::MainIso => "main-iso",
            Suite::Recursion => "recursion",
            Suite::Ungraded => "ungraded",
            Suite::Gn1 => "gn1",
            Suite::Bigrading => "bigrading",
            Suite::Equivariant => "equivariant",
            Suite::Chambers => "chambers",
            Suite::All => "all",
        }
    }

    /// Inclusive range of admissible `n`.
    pub fn bounds(&self) -> (usize, usize) {
        match self {
            Suite::TablesB2 => (2, 2),
            Suite::Recursion => (2, 4),
            Suite::Hilbert | Suite::Bigrading | Suite::All => (1, 5),
            _ => (1, 4),
        }
    }

    pub fn admits(&self, n: usize) -> bool {
        let (lo, hi) = self.bounds();
        (lo..=hi).contains(&n)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SuiteError {
    #[error("suite {suite} accepts n in {min}..={max}, got {n}")]
    OutOfBounds {
        suite: Suite,
        n: usize,
        min: usize,
        max: usize,
    },
    #[error(transparent)]
    Library(#[from] hyperoct::Error),
}

type Checks = hyperoct::Result<Vec<Check>>;
type Job<'a> = Box<dyn Fn() -> Checks + Send + Sync + 'a>;

/// Runs independent jobs on the worker pool and concatenates their checks in order.
fn run_jobs(jobs: Vec<Job<'_>>) -> Checks {
    let results = par::map(&jobs, |job| job());
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

pub fn run(suite: Suite, n: usize) -> Result<Report, SuiteError> {
    let (min, max) = suite.bounds();
    if !suite.admits(n) {
        return Err(SuiteError::OutOfBounds { suite, n, min, max });
    }
    let start = Instant::now();
    let checks = match suite {
        Suite::All => run_all(n)?,
        s => run_one(s, n)?,
    };
    Ok(Report {
        suite: suite.name().to_string(),
        n,
        checks,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

fn run_one(suite: Suite, n: usize) -> Checks {
    match suite {
        Suite::Idempotents => idempotents(n),
        Suite::Tau => tau(n),
        Suite::Characters => characters(n),
        Suite::TablesB2 => tables_b2(),
        Suite::Hilbert => hilbert(n),
        Suite::MainIso => main_iso(n),
        Suite::Recursion => recursion(n),
        Suite::Ungraded => ungraded(n),
        Suite::Gn1 => gn1(n),
        Suite::Bigrading => bigrading(n),
        Suite::Equivariant => equivariant(n),
        Suite::Chambers => chambers(n),
        Suite::All => unreachable!("handled by run_all"),
    }
}

/// Every suite that admits `n`; the fixed-rank table suite always runs at its own rank.
fn run_all(n: usize) -> Checks {
    let mut out = Vec::new();
    let mut skipped = Vec::new();
    for suite in Suite::INDIVIDUAL {
        let rank = if suite == Suite::TablesB2 { 2 } else { n };
        if !suite.admits(rank) {
            let (lo, hi) = suite.bounds();
            skipped.push(format!("{suite} (n in {lo}..={hi})"));
            continue;
        }
        for mut c in run_one(suite, rank)? {
            c.id = format!("{suite}/{}", c.id);
            out.push(c);
        }
    }
    let witness = if skipped.is_empty() {
        "every suite ran".to_string()
    } else {
        format!("not applicable at n = {n}: {}", skipped.join(", "))
    };
    out.insert(0, Check::new("coverage", "intro:mainthm", true, witness));
    Ok(out)
}

fn sp(s: &str) -> SignedPartition {
    s.parse().expect("signed partition literal")
}

fn values_line(f: &ClassFunction, classes: &[SignedPartition]) -> String {
    classes
        .iter()
        .map(|c| pretty(&f.value(c)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn describe_decomposition(parts: &BTreeMap<SignedPartition, u64>) -> String {
    if parts.is_empty() {
        return "0".to_string();
    }
    parts
        .iter()
        .map(|(l, m)| if *m == 1 { format!("chi{l}") } else { format!("{m} chi{l}") })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn decomposition_text(f: &ClassFunction) -> String {
    match decompose(f) {
        Ok(parts) => describe_decomposition(&parts),
        Err(e) => format!("not a character: {e}"),
    }
}

fn compare_characters(id: String, anchor: &str, left: &ClassFunction, right: &ClassFunction) -> Check {
    let ok = left == right;
    let witness = if ok {
        decomposition_text(left)
    } else {
        format!("left {left}\nright {right}")
    };
    Check::new(id, anchor, ok, witness)
}

fn family_checks(n: usize, family: &[(String, AlgebraElement)], anchor: &str, prefix: &str) -> Vec<Check> {
    let mut out = Vec::new();
    let items: Vec<usize> = (0..family.len()).collect();
    let squares = par::map(&items, |&i| {
        let (label, e) = &family[i];
        let sq = e * e;
        let ok = &sq == e;
        let witness = if ok {
            if n <= 1 {
                format!("{prefix}{label} = {e}")
            } else {
                format!("{} terms", e.support_size())
            }
        } else {
            format!("square = {sq}")
        };
        Check::new(format!("idempotent/{prefix}{label}"), anchor, ok, witness)
    });
    out.extend(squares);
    let pairs: Vec<(usize, usize)> = items
        .iter()
        .flat_map(|&i| items.iter().filter(move |&&j| j != i).map(move |&j| (i, j)))
        .collect();
    let bad: Vec<String> = par::map(&pairs, |&(i, j)| {
        let p = &family[i].1 * &family[j].1;
        (!p.is_zero()).then(|| format!("{prefix}{} {prefix}{} = {p}", family[i].0, family[j].0))
    })
    .into_iter()
    .flatten()
    .collect();
    out.push(Check::new(
        format!("orthogonal/{prefix}"),
        anchor,
        bad.is_empty(),
        bad.first()
            .cloned()
            .unwrap_or_else(|| format!("{} products vanish", pairs.len())),
    ));
    let total = family
        .iter()
        .fold(AlgebraElement::zero(n), |acc, (_, e)| &acc + e);
    let ok = total == AlgebraElement::identity(n);
    out.push(Check::new(
        format!("complete/{prefix}"),
        anchor,
        ok,
        if ok { "sum = 1".to_string() } else { format!("sum = {total}") },
    ));
    out
}

fn idempotents(n: usize) -> Checks {
    let family: Vec<(String, AlgebraElement)> = SignedPartition::all(n)
        .into_iter()
        .map(|l| {
            let e = (*hyperoctahedral_idempotent(&l)).clone();
            (l.to_string(), e)
        })
        .collect();
    let graded: Vec<(String, AlgebraElement)> = (0..=n)
        .map(|k| (k.to_string(), graded_idempotent(n, k)))
        .collect();
    let mut out = family_checks(n, &family, "def:vazidem", "g");
    out.extend(family_checks(n, &graded, "def:frakg", "g_"));
    Ok(out)
}

fn tau(n: usize) -> Checks {
    let mut out = Vec::new();
    for lam in SignedPartition::all(n) {
        let image = tau_map(&hyperoctahedral_idempotent(&lam));
        let (ok, expected) = if lam.negative().is_empty() {
            (image == type_a_idempotent(lam.positive()), format!("e{}", lam.positive()))
        } else {
            (image.is_zero(), "0".to_string())
        };
        let witness = if ok { format!("tau(g{lam}) = {expected}") } else { format!("tau(g{lam}) = {image}") };
        out.push(Check::new(format!("g{lam}"), "sgnmap", ok, witness));
    }
    for k in 0..=n {
        let image = tau_map(&graded_idempotent(n, k));
        let (ok, expected) = if k == 0 {
            (image.is_zero(), "0".to_string())
        } else {
            (image == type_a_graded_idempotent(n, k - 1), format!("e_{}", k - 1))
        };
        let witness = if ok { format!("tau(g_{k}) = {expected}") } else { format!("tau(g_{k}) = {image}") };
        out.push(Check::new(format!("g_{k}"), "sgnmap", ok, witness));
    }
    Ok(out)
}

fn characters(n: usize) -> Checks {
    let table = character_table(n);
    let rows = table.rows();
    let classes = SignedPartition::all(n);
    let mut out = Vec::new();
    let burnside: Rational = rows.iter().map(|(_, f)| f.degree() * f.degree()).sum();
    out.push(Check::new(
        "burnside",
        "sec:reptheorytypeB",
        burnside == int(group_order(n) as i64),
        format!("sum of squared degrees = {}", pretty(&burnside)),
    ));
    let mut bad = Vec::new();
    for (a, f) in rows {
        for (b, g) in rows {
            let want = if a == b { Rational::one() } else { Rational::zero() };
            let got = f.inner_product(g);
            if got != want {
                bad.push(format!("<chi{a}, chi{b}> = {}", pretty(&got)));
            }
        }
    }
    out.push(Check::new(
        "rows-orthonormal",
        "sec:reptheorytypeB",
        bad.is_empty(),
        bad.first().cloned().unwrap_or_else(|| format!("{} irreducibles", rows.len())),
    ));
    let mut bad = Vec::new();
    for c in &classes {
        for d in &classes {
            let s: Rational = rows.iter().map(|(_, f)| f.value(c) * f.value(d)).sum();
            let want = if c == d { int(c.centralizer_order() as i64) } else { Rational::zero() };
            if s != want {
                bad.push(format!("columns {c}, {d}: {}", pretty(&s)));
            }
        }
    }
    out.push(Check::new(
        "columns-orthogonal",
        "sec:reptheorytypeB",
        bad.is_empty(),
        bad.first().cloned().unwrap_or_else(|| format!("{} classes", classes.len())),
    ));
    let induced = par::map(&classes, |lam| induced_rho(lam).map(|f| (lam.clone(), f)));
    for r in induced {
        let (lam, f) = r?;
        let index = group_order(n) / lam.centralizer_order();
        let ok = decompose(&f).is_ok() && f.degree() == int(index as i64);
        out.push(Check::new(
            format!("induced-rho/{lam}"),
            "thm:BRiso",
            ok,
            format!("degree {}: {}", pretty(&f.degree()), decomposition_text(&f)),
        ));
    }
    let coset = coset_permutation_character(n);
    let trivial = bn_irreducible(&SignedPartition::new(vec![n], vec![]));
    out.push(Check::new(
        "coset-character",
        "ungradedrep",
        coset.inner_product(&trivial).is_one() && decompose(&coset).is_ok(),
        decomposition_text(&coset),
    ));
    Ok(out)
}

const B2_CLASSES: [&str; 5] = ["(1,1|)", "(2|)", "(1|1)", "(|2)", "(|1,1)"];

fn tables_b2() -> Checks {
    let mut out = Vec::new();
    let classes: Vec<SignedPartition> = B2_CLASSES.iter().map(|c| sp(c)).collect();
    let b1: Vec<SignedPartition> = vec![sp("(1|)"), sp("(|1)")];
    for (label, want) in [("(1|)", "1 1"), ("(|1)", "1 -1")] {
        let got = values_line(&bn_irreducible(&sp(label)), &b1);
        out.push(Check::new(
            format!("b1/chi{label}"),
            "charactertableb1",
            got == want,
            format!("chi{label}: {got}"),
        ));
    }
    let expected = [
        ("(2|)", "1 1 1 1 1"),
        ("(|1,1)", "1 -1 -1 1 1"),
        ("(1,1|)", "1 -1 1 -1 1"),
        ("(|2)", "1 1 -1 -1 1"),
        ("(1|1)", "2 0 0 0 -2"),
    ];
    for (label, want) in expected {
        let got = values_line(&bn_irreducible(&sp(label)), &classes);
        out.push(Check::new(
            format!("b2/chi{label}"),
            "charactertableb2",
            got == want,
            format!("chi{label}: {got}"),
        ));
    }

    let s = Space::Z3(2);
    let v = |a: i32| RingElement::from_linear(s, &loop_label(a).expect("loop label"));
    let e = |a: i32, b: i32| RingElement::from_linear(s, &edge_label(a, b).expect("edge label"));
    let m = |x: RingElement, y: RingElement| x.mul(&y).expect("same space");
    let neg = |x: RingElement| x.scale(&int(-1));
    let one = RingElement::one(s);
    let s1 = SignedPermutation::simple_transposition(2, 1);
    let t2 = SignedPermutation::sign_change(2, 2);
    let s1t2 = s1.compose(&t2)?;
    let w0 = s1t2.compose(&s1t2)?;
    let group = [("s1", &s1), ("t2", &t2), ("s1t2", &s1t2), ("-1", &w0)];
    let rows: Vec<(&str, RingElement, [RingElement; 4])> = vec![
        ("1", one.clone(), [one.clone(), one.clone(), one.clone(), one.clone()]),
        ("z1", v(1), [v(2), v(1), v(2), neg(v(1))]),
        ("z2", v(2), [v(1), neg(v(2)), neg(v(1)), neg(v(2))]),
        ("z12", e(1, 2), [neg(e(1, 2)), e(1, -2), neg(e(-1, 2)), e(-1, -2)]),
        ("z1~2", e(1, -2), [neg(e(-1, 2)), e(1, 2), neg(e(1, 2)), e(-1, 2)]),
        (
            "z1 z2",
            m(v(1), v(2)),
            [m(v(1), v(2)), neg(m(v(1), v(2))), neg(m(v(1), v(2))), m(v(1), v(2))],
        ),
        (
            "z1 z12",
            m(v(1), e(1, 2)),
            [
                neg(m(v(2), e(1, 2))),
                m(v(1), e(1, -2)),
                neg(m(v(2), e(-1, 2))),
                neg(m(v(1), e(-1, -2))),
            ],
        ),
        (
            "z1 z1~2",
            m(v(1), e(1, -2)),
            [
                neg(m(v(2), e(-1, 2))),
                m(v(1), e(1, 2)),
                neg(m(v(2), e(1, 2))),
                neg(m(v(1), e(-1, 2))),
            ],
        ),
    ];
    for (label, x, images) in &rows {
        let mut ok = true;
        let mut cells = Vec::new();
        for ((gname, g), want) in group.iter().zip(images) {
            let got = act(g, x)?;
            ok &= got == *want;
            cells.push(format!("{gname}: {got}"));
        }
        out.push(Check::new(
            format!("action/{label}"),
            "tab:b2action",
            ok,
            cells.join(" | "),
        ));
    }
    let eigen: [(&str, RingElement, &str); 4] = [
        ("1", one, "(2|)"),
        ("z12 + z1~2 + z1", e(1, 2).add(&e(1, -2))?.add(&v(1))?, "(1,1|)"),
        ("z12 - z1~2 - z2", e(1, 2).sub(&e(1, -2))?.sub(&v(2))?, "(|1,1)"),
        ("z1 z2", m(v(1), v(2)), "(|2)"),
    ];
    for (label, x, chi) in &eigen {
        let f = bn_irreducible(&sp(chi));
        let mut bad = None;
        for g in SignedPermutation::all(2) {
            let got = act(&g, x)?;
            if got != x.scale(&f.evaluate(&g)) {
                bad = Some(format!("{g} sends it to {got}"));
                break;
            }
        }
        out.push(Check::new(
            format!("eigenvector/{label}"),
            "prop:actionongenerators",
            bad.is_none(),
            bad.unwrap_or_else(|| format!("spans chi{chi}")),
        ));
    }
    Ok(out)
}

fn product_coefficients(n: usize) -> Vec<u64> {
    let mut poly = vec![1u64];
    for i in 1..=n as u64 {
        let mut next = vec![0u64; poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k] += c;
            next[k + 1] += c * (2 * i - 1);
        }
        poly = next;
    }
    poly
}

fn hilbert(n: usize) -> Checks {
    let want = product_coefficients(n);
    let mut out = vec![Check::new(
        "series",
        "eq:hilbertseries",
        hilbert_series(n) == want,
        format!("{want:?}"),
    )];
    let spaces = [Space::Z3(n), Space::Z1(n), Space::Y3(n), Space::Y1(n)];
    let counts = par::map(&spaces, |space| -> hyperoct::Result<Vec<u64>> {
        let mut c = vec![0u64; n + 1];
        for m in space.system()?.nbc_basis() {
            c[m.degree()] += 1;
        }
        Ok(c)
    });
    for (space, c) in spaces.iter().zip(counts) {
        let c = c?;
        out.push(Check::new(
            format!("nbc/{space}"),
            "cor:lifthom1gr",
            c == want,
            format!("{c:?}"),
        ));
    }
    Ok(out)
}

fn main_iso(n: usize) -> Checks {
    let graded = graded_characters(Space::Z3(n))?;
    let ungraded = graded_characters(Space::Z1(n))?;
    let mut out = Vec::new();
    for k in 0..=n {
        let ideal = right_ideal_character(&graded_idempotent(n, n - k))?;
        out.push(compare_characters(
            format!("degree-{}/graded", 2 * k),
            "cor:mainiso",
            &ideal,
            &graded[k],
        ));
        out.push(compare_characters(
            format!("degree-{}/ungraded", 2 * k),
            "cor:mainiso",
            &ideal,
            &ungraded[k],
        ));
    }
    let types = type_characters(n)?;
    for lam in SignedPartition::all(n) {
        let ideal = right_ideal_character(&hyperoctahedral_idempotent(&lam))?;
        out.push(compare_characters(format!("type/{lam}"), "thm:BRiso", &ideal, &types[&lam]));
        out.push(compare_characters(
            format!("induced/{lam}"),
            "thm:BRiso",
            &ideal,
            &induced_rho(&lam)?,
        ));
    }
    Ok(out)
}

fn recursion(n: usize) -> Checks {
    let z = graded_characters(Space::Z3(n))?;
    let y = graded_characters(Space::Y3(n - 1))?;
    let extra = bn_irreducible(&SignedPartition::new(vec![n - 1, 1], vec![]))
        .add(&bn_irreducible(&SignedPartition::new(vec![n - 1], vec![1])));
    let mut out = Vec::new();
    for (j, zj) in z.iter().enumerate() {
        let mut rhs = y.get(j).cloned().unwrap_or_else(|| ClassFunction::zero(n));
        if j >= 1 {
            if let Some(prev) = y.get(j - 1) {
                rhs = rhs.add(&prev.tensor(&extra));
            }
        }
        out.push(compare_characters(format!("degree-{}", 2 * j), "cor:recursion", zj, &rhs));
    }
    Ok(out)
}

fn ungraded(n: usize) -> Checks {
    let jobs: Vec<Job<'_>> = vec![
        Box::new(move || {
            let total = graded_characters(Space::Z3(n))?
                .iter()
                .fold(ClassFunction::zero(n), |a, b| a.add(b));
            Ok(vec![compare_characters(
                "z-total".to_string(),
                "ungradedrep",
                &total,
                &regular_character(n),
            )])
        }),
        Box::new(move || {
            if n < 2 {
                return Ok(Vec::new());
            }
            let total = graded_characters(Space::Y3(n - 1))?
                .iter()
                .fold(ClassFunction::zero(n), |a, b| a.add(b));
            Ok(vec![compare_characters(
                "y-total".to_string(),
                "ungradedrep",
                &total,
                &coset_permutation_character(n),
            )])
        }),
    ];
    run_jobs(jobs)
}

fn gn1(n: usize) -> Checks {
    let dim = bigraded_counts(n)?.get(&(n, 1)).copied().unwrap_or(0);
    let want = (1u64 << (n - 1)) * factorial(n - 1);
    let mut out = vec![Check::new(
        "dimension",
        "thm:gn1induce",
        dim == want,
        format!("{dim} nbc monomials, expected {want}"),
    )];
    let top = bigraded_character(n)?
        .remove(&(n, 1))
        .unwrap_or_else(|| ClassFunction::zero(n));
    let lam = SignedPartition::new(vec![], vec![n]);
    out.push(compare_characters("induced-rho".into(), "thm:gn1induce", &top, &induced_rho(&lam)?));
    let mut eta: Vec<i32> = (2..=n as i32).collect();
    eta.push(1);
    let gens = [
        CentralizerGenerator {
            element: SignedPermutation::new(eta)?,
            root_order: n as u32,
        },
        CentralizerGenerator {
            element: SignedPermutation::negation(n),
            root_order: 2,
        },
    ];
    let induced = SubgroupCharacter::generate(n, &gens)?.induce()?;
    out.push(compare_characters(
        "induced-cycle".into(),
        "lemma:coxeterinduction",
        &top,
        &induced,
    ));
    Ok(out)
}

fn bigrading(n: usize) -> Checks {
    let counts = bigraded_counts(n)?;
    let mut by_shape: BTreeMap<SignedPartition, u64> = BTreeMap::new();
    for f in nbc_basis(Space::Z3(n), None, None)? {
        *by_shape.entry(monomial_type(n, f).shape()).or_default() += 1;
    }
    let mut out = Vec::new();
    for k in 0..=n {
        for l in 0..=k {
            let from_types: u64 = by_shape
                .iter()
                .filter(|(s, _)| s.positive().len() == n - k && s.negative().len() == l)
                .map(|(_, c)| c)
                .sum();
            let direct = counts.get(&(k, l)).copied().unwrap_or(0);
            out.push(Check::new(
                format!("bidegree-{k}-{l}"),
                "prop:bigradingGalpha",
                from_types == direct,
                format!("{direct} by bidegree, {from_types} by type"),
            ));
        }
    }
    Ok(out)
}

fn equivariant(n: usize) -> Checks {
    let set = equivariant_relations(n)?;
    let mut out = Vec::new();
    for (value, space, anchor) in [
        (UValue::Zero, Space::Z3(n), "eqcohompres"),
        (UValue::One, Space::Z1(n), "lem:eqrel"),
    ] {
        let reduced = set.specialize(value)?;
        let bad = set
            .relations()
            .iter()
            .zip(&reduced)
            .find(|(_, r)| !r.is_zero())
            .map(|((family, p), r)| format!("{family:?} relation {p} reduces to {r}"));
        out.push(Check::new(
            format!("specialise/{space}"),
            anchor,
            bad.is_none(),
            bad.unwrap_or_else(|| format!("{} relations reduce to 0", set.len())),
        ));
    }
    Ok(out)
}

fn letters(n: usize) -> Vec<Letter> {
    (0..=n)
        .flat_map(|p| [Letter::new(p, false), Letter::new(p, true)])
        .collect()
}

fn distinct(v: &[Letter]) -> bool {
    (0..v.len()).all(|a| (a + 1..v.len()).all(|b| v[a] != v[b]))
}

/// First cyclic-order identity that fails on `ch`, if any.
fn cyclic_violation(ch: &Chamber, ls: &[Letter]) -> hyperoct::Result<Option<String>> {
    let y = |a: Letter, b: Letter, c: Letter| ch.heaviside(a, b, c).map(|v| v as i64);
    for &i in ls {
        for &j in ls {
            for &k in ls {
                if !distinct(&[i, j, k]) {
                    continue;
                }
                let v = y(i, j, k)?;
                if v != 1 - y(i, k, j)? {
                    return Ok(Some(format!("antisymmetry at {i}{j}{k}")));
                }
                if distinct(&[i.bar(), j, k]) && y(i.bar(), j, k)? != y(i, j.bar(), k.bar())? {
                    return Ok(Some(format!("bar relation at {i}{j}{k}")));
                }
                for &q in ls {
                    if !distinct(&[i, j, k, q]) {
                        continue;
                    }
                    let (b, c, d) = (y(i, k, q)?, y(i, j, q)?, y(j, k, q)?);
                    if v - c + b - d != 0 {
                        return Ok(Some(format!("four-term relation at {i}{j}{k}{q}")));
                    }
                    if v * b * (1 - c) + (1 - v) * (1 - b) * c != 0 {
                        return Ok(Some(format!("cubic relation at {i}{j}{k}{q}")));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn chambers(n: usize) -> Checks {
    let mut out = Vec::new();
    let all = Chamber::all(n);
    out.push(Check::new(
        "count",
        "prop:ungradedpt1",
        all.len() as u64 == group_order(n),
        format!("{} chambers", all.len()),
    ));

    let zb = Letter::ZERO_BAR;
    let l = |i: i32| if i == 0 { Letter::ZERO } else { Letter::from_signed(i) };
    let columns = [
        (l(0), zb, l(1)),
        (l(0), zb, l(2)),
        (l(0), l(1), l(2)),
        (l(0), l(1), l(-2)),
        (l(0), l(-1), l(2)),
        (l(0), l(-1), l(-2)),
    ];
    let table: [([i32; 2], &str); 8] = [
        ([1, 2], "001101"),
        ([2, 1], "000100"),
        ([-1, 2], "100111"),
        ([2, -1], "100001"),
        ([1, -2], "011110"),
        ([-2, 1], "011000"),
        ([-1, -2], "111011"),
        ([-2, -1], "110010"),
    ];
    for (word, want) in table {
        let ch = Chamber::new(word.to_vec())?;
        let got: String = columns
            .iter()
            .map(|(a, b, c)| ch.heaviside(*a, *b, *c).map(|v| if v { '1' } else { '0' }))
            .collect::<hyperoct::Result<String>>()?;
        out.push(Check::new(
            format!("heaviside-table/{ch}"),
            "tab:heavi",
            got == want,
            got,
        ));
    }

    let ls = letters(n);
    let relations = defining_relations(n, Flavor::Filtered)?;
    let violations = par::map(&all, |ch| -> hyperoct::Result<Option<String>> {
        if let Some(v) = cyclic_violation(ch, &ls)? {
            return Ok(Some(format!("{ch}: {v}")));
        }
        for rel in &relations {
            let value: Rational = rel
                .iter()
                .filter(|(m, _)| ch.monomial_value(**m))
                .map(|(_, c)| c.clone())
                .sum();
            if !value.is_zero() {
                return Ok(Some(format!("{ch}: a defining relation evaluates to {}", pretty(&value))));
            }
        }
        Ok(None)
    });
    let mut first = None;
    for v in violations {
        if let Some(msg) = v? {
            first.get_or_insert(msg);
        }
    }
    out.push(Check::new(
        "relations-pointwise",
        "CHFrelations",
        first.is_none(),
        first.unwrap_or_else(|| format!("{} relations on {} chambers", relations.len(), all.len())),
    ));

    let mat = evaluation_matrix(n)?;
    out.push(Check::new(
        "evaluation-rank",
        "cor:bconfhom1",
        mat.rank as u64 == group_order(n),
        format!("rank {} of {}", mat.rank, mat.entries.len()),
    ));

    let start = Chamber::new((1..=n as i32).collect())?;
    let stab = stabilizer(&start)?;
    let c = coxeter_element(n + 1);
    let mut powers = vec![SignedPermutation::identity(n + 1)];
    loop {
        let next = powers.last().expect("nonempty").compose(&c)?;
        if next == powers[0] {
            break;
        }
        powers.push(next);
    }
    powers.sort();
    let mut sorted = stab.clone();
    sorted.sort();
    out.push(Check::new(
        "stabilizer",
        "prop:ungradedpt1",
        sorted == powers,
        format!("stabilizer of {start} has order {}", stab.len()),
    ));
    Ok(out)
}
