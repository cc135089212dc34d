//! Class functions and characters of `B_n`.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::cyclotomic::CyclotomicNumber;
use crate::error::{Error, Result};
use crate::group;
use crate::par;
use crate::scalar::{from_wire, int, pretty, to_wire, Rational};
use crate::signed::{
    group_order, CentralizerGenerator, Partition, SignedPartition, SignedPermutation,
};

/// A rational-valued function on the conjugacy classes of `B_n`.
#[derive(Clone, PartialEq, Eq)]
pub struct ClassFunction {
    rank: usize,
    values: BTreeMap<SignedPartition, Rational>,
}

impl ClassFunction {
    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_| Rational::zero())
    }

    pub fn from_fn(n: usize, f: impl Fn(&SignedPartition) -> Rational) -> Self {
        Self {
            rank: n,
            values: SignedPartition::all(n).into_iter().map(|c| {
                let v = f(&c);
                (c, v)
            }).collect(),
        }
    }

    /// Missing classes are filled with zero.
    pub fn from_values<I>(n: usize, values: I) -> Self
    where
        I: IntoIterator<Item = (SignedPartition, Rational)>,
    {
        let mut out = Self::zero(n);
        for (c, v) in values {
            out.values.insert(c, v);
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn values(&self) -> &BTreeMap<SignedPartition, Rational> {
        &self.values
    }

    pub fn value(&self, class: &SignedPartition) -> Rational {
        self.values.get(class).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn evaluate(&self, g: &SignedPermutation) -> Rational {
        self.value(&g.cycle_type())
    }

    /// Value at the identity.
    pub fn degree(&self) -> Rational {
        self.value(&SignedPartition::identity_class(self.rank))
    }

    fn zip(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        assert_eq!(self.rank, other.rank, "class functions of different rank");
        Self {
            rank: self.rank,
            values: self
                .values
                .iter()
                .map(|(c, v)| (c.clone(), f(v, &other.value(c))))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a - b)
    }

    /// Pointwise product, the character of the tensor product.
    pub fn tensor(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a * b)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self {
            rank: self.rank,
            values: self.values.iter().map(|(c, v)| (c.clone(), v * q)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(Zero::is_zero)
    }

    /// `(1/|B_n|) Σ_C |C| χ(C) ψ(C)`; values are rational so no conjugation is needed.
    pub fn inner_product(&self, other: &Self) -> Rational {
        assert_eq!(self.rank, other.rank, "class functions of different rank");
        let mut acc = Rational::zero();
        for (c, v) in &self.values {
            acc += v * other.value(c) * int(c.class_size() as i64);
        }
        acc / int(group_order(self.rank) as i64)
    }

    pub fn to_json(&self) -> Value {
        let map: serde_json::Map<String, Value> = self
            .values
            .iter()
            .map(|(c, v)| (c.to_string(), Value::String(to_wire(v))))
            .collect();
        json!({ "n": self.rank, "values": map })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = || Error::Parse {
            what: "class function",
            input: value.to_string(),
        };
        let n = value["n"].as_u64().ok_or_else(bad)? as usize;
        let map = value["values"].as_object().ok_or_else(bad)?;
        let mut out = Self::zero(n);
        for (k, v) in map {
            let c: SignedPartition = k.parse()?;
            if c.size() != n {
                return Err(bad());
            }
            out.values.insert(c, from_wire(v.as_str().ok_or_else(bad)?)?);
        }
        Ok(out)
    }
}

impl fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .values
            .iter()
            .map(|(c, v)| format!("{c}:{}", pretty(v)))
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Murnaghan-Nakayama evaluation of `χ^λ` on the class of cycle type `μ` in `S_n`.
#[derive(Default)]
pub struct MnCache {
    memo: HashMap<(Vec<usize>, Vec<usize>), i64>,
}

impl MnCache {
    pub fn value(&mut self, lam: &Partition, mu: &Partition) -> i64 {
        assert_eq!(lam.size(), mu.size(), "sizes differ");
        self.go(lam.parts(), mu.parts())
    }

    fn go(&mut self, lam: &[usize], mu: &[usize]) -> i64 {
        if mu.is_empty() {
            return 1;
        }
        let key = (lam.to_vec(), mu.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let r = mu[0];
        let len = lam.len();
        let beta: Vec<usize> = lam.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
        let mut total = 0i64;
        for (i, &b) in beta.iter().enumerate() {
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            let height = beta.iter().filter(|&&x| x > b - r && x < b).count();
            let mut next = beta.clone();
            next[i] = b - r;
            next.sort_unstable_by(|a, b| b.cmp(a));
            let shape: Vec<usize> = next
                .iter()
                .enumerate()
                .map(|(j, &x)| x - (len - 1 - j))
                .filter(|&p| p > 0)
                .collect();
            let sign = if height % 2 == 0 { 1 } else { -1 };
            total += sign * self.go(&shape, &mu[1..]);
        }
        self.memo.insert(key, total);
        total
    }
}

pub fn sn_character(lam: &Partition, mu: &Partition) -> i64 {
    MnCache::default().value(lam, mu)
}

/// `χ^{λ,∅}` pulled back along forgetting signs, twisted by `(-1)^{#negative cycles}`
/// when `twist` is set.
fn pulled_back(mn: &mut MnCache, lam: &Partition, twist: bool) -> ClassFunction {
    let n = lam.size();
    let mut out = ClassFunction::zero(n);
    for c in SignedPartition::all(n) {
        let mut v = mn.value(lam, &c.positive().union(c.negative()));
        if twist && c.negative().len() % 2 == 1 {
            v = -v;
        }
        out.values.insert(c, int(v));
    }
    out
}

/// The irreducible character `χ^{λ,μ}` of `B_n`.
pub fn bn_irreducible(label: &SignedPartition) -> ClassFunction {
    let mut mn = MnCache::default();
    irreducible_with(&mut mn, label)
}

fn irreducible_with(mn: &mut MnCache, label: &SignedPartition) -> ClassFunction {
    let (p, q) = (label.positive(), label.negative());
    if q.is_empty() {
        return pulled_back(mn, p, false);
    }
    if p.is_empty() {
        return pulled_back(mn, q, true);
    }
    induction_product(&pulled_back(mn, p, false), &pulled_back(mn, q, true))
}

/// Induction from `B_a × B_b` to `B_{a+b}` by class fusion.
pub fn induction_product(a: &ClassFunction, b: &ClassFunction) -> ClassFunction {
    let n = a.rank + b.rank;
    let mut sums: BTreeMap<SignedPartition, Rational> = BTreeMap::new();
    for (ca, va) in &a.values {
        if va.is_zero() {
            continue;
        }
        for (cb, vb) in &b.values {
            if vb.is_zero() {
                continue;
            }
            let fused = SignedPartition::from_parts(
                ca.positive().union(cb.positive()),
                ca.negative().union(cb.negative()),
            );
            let weight = int((ca.class_size() * cb.class_size()) as i64);
            *sums.entry(fused).or_insert_with(Rational::zero) += va * vb * weight;
        }
    }
    let sub_order = int((group_order(a.rank) * group_order(b.rank)) as i64);
    ClassFunction::from_values(
        n,
        sums.into_iter().map(|(c, s)| {
            let z = int(c.centralizer_order() as i64);
            (c, s * z / &sub_order)
        }),
    )
}

/// All irreducible characters of `B_n`, labelled by signed partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    rank: usize,
    rows: Vec<(SignedPartition, ClassFunction)>,
}

impl CharacterTable {
    pub fn compute(n: usize) -> Self {
        let mut mn = MnCache::default();
        let rows = SignedPartition::all(n)
            .into_iter()
            .map(|l| {
                let chi = irreducible_with(&mut mn, &l);
                (l, chi)
            })
            .collect();
        Self { rank: n, rows }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rows(&self) -> &[(SignedPartition, ClassFunction)] {
        &self.rows
    }

    pub fn irreducible(&self, label: &SignedPartition) -> Option<&ClassFunction> {
        self.rows.iter().find(|(l, _)| l == label).map(|(_, c)| c)
    }

    pub fn to_json(&self) -> Value {
        let classes: Vec<String> = SignedPartition::all(self.rank)
            .iter()
            .map(ToString::to_string)
            .collect();
        let rows: serde_json::Map<String, Value> = self
            .rows
            .iter()
            .map(|(l, chi)| {
                let row: Vec<Value> = SignedPartition::all(self.rank)
                    .iter()
                    .map(|c| Value::String(to_wire(&chi.value(c))))
                    .collect();
                (l.to_string(), Value::Array(row))
            })
            .collect();
        json!({ "n": self.rank, "classes": classes, "rows": rows })
    }

    /// Parses a table written by [`Self::to_json`]; the class list must match the
    /// canonical enumeration for the stated rank.
    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = || Error::Parse {
            what: "character table",
            input: value.to_string().chars().take(80).collect(),
        };
        let n = value["n"].as_u64().ok_or_else(bad)? as usize;
        let classes = SignedPartition::all(n);
        let listed: Vec<String> = value["classes"]
            .as_array()
            .ok_or_else(bad)?
            .iter()
            .map(|v| v.as_str().map(str::to_string).ok_or_else(bad))
            .collect::<Result<_>>()?;
        let expected: Vec<String> = classes.iter().map(ToString::to_string).collect();
        if listed != expected {
            return Err(bad());
        }
        let rows_json = value["rows"].as_object().ok_or_else(bad)?;
        if rows_json.len() != classes.len() {
            return Err(bad());
        }
        let mut rows = Vec::with_capacity(classes.len());
        for label in &classes {
            let row = rows_json
                .get(&label.to_string())
                .and_then(Value::as_array)
                .ok_or_else(bad)?;
            if row.len() != classes.len() {
                return Err(bad());
            }
            let mut values = Vec::with_capacity(row.len());
            for (c, v) in classes.iter().zip(row) {
                values.push((c.clone(), from_wire(v.as_str().ok_or_else(bad)?)?));
            }
            rows.push((label.clone(), ClassFunction::from_values(n, values)));
        }
        Ok(Self { rank: n, rows })
    }
}

fn table_cache() -> &'static Mutex<HashMap<usize, Arc<CharacterTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Shared character tables, built once per rank.
pub fn character_table(n: usize) -> Arc<CharacterTable> {
    if let Some(t) = table_cache().lock().expect("table cache").get(&n) {
        return t.clone();
    }
    let t = Arc::new(CharacterTable::compute(n));
    table_cache()
        .lock()
        .expect("table cache")
        .insert(n, t.clone());
    t
}

/// Seeds the shared table for its rank, e.g. from an on-disk cache.
pub fn install_character_table(table: CharacterTable) {
    table_cache()
        .lock()
        .expect("table cache")
        .insert(table.rank, Arc::new(table));
}

pub fn is_character_table_loaded(n: usize) -> bool {
    table_cache().lock().expect("table cache").contains_key(&n)
}

/// Multiplicities of the irreducibles in `chi`.
pub fn decompose(chi: &ClassFunction) -> Result<BTreeMap<SignedPartition, u64>> {
    let table = character_table(chi.rank);
    let mut out = BTreeMap::new();
    for (label, irr) in table.rows() {
        let m = chi.inner_product(irr);
        if !m.is_integer() || m.is_negative() {
            return Err(Error::NotACharacter {
                irreducible: label.to_string(),
                multiplicity: pretty(&m),
            });
        }
        let m: u64 = m.to_integer().try_into().expect("multiplicity fits");
        if m > 0 {
            out.insert(label.clone(), m);
        }
    }
    Ok(out)
}

/// Sum of irreducibles with multiplicities.
pub fn compose_irreducibles(n: usize, parts: &[(SignedPartition, u64)]) -> ClassFunction {
    let table = character_table(n);
    let mut out = ClassFunction::zero(n);
    for (label, m) in parts {
        let irr = table.irreducible(label).expect("irreducible label");
        out = out.add(&irr.scale(&int(*m as i64)));
    }
    out
}

/// The regular character of `B_n`.
pub fn regular_character(n: usize) -> ClassFunction {
    ClassFunction::from_fn(n, |c| {
        if *c == SignedPartition::identity_class(n) {
            int(group_order(n) as i64)
        } else {
            Rational::zero()
        }
    })
}

/// A linear character of a subgroup of `B_n`, valued in `m`-th roots of unity and
/// stored as exponents of `ω_m` on every subgroup element.
#[derive(Clone, Debug)]
pub struct SubgroupCharacter {
    rank: usize,
    root_order: u32,
    exponents: HashMap<SignedPermutation, u32>,
}

impl SubgroupCharacter {
    /// Closes the generators into a subgroup, propagating the prescribed values and
    /// failing if two words for the same element disagree.
    pub fn generate(n: usize, generators: &[CentralizerGenerator]) -> Result<Self> {
        let root_order = generators
            .iter()
            .fold(1u32, |acc, g| acc.lcm(&g.root_order));
        let gens: Vec<(SignedPermutation, u32)> = generators
            .iter()
            .map(|g| (g.element.clone(), root_order / g.root_order))
            .collect();
        let mut exponents = HashMap::new();
        let id = SignedPermutation::identity(n);
        exponents.insert(id.clone(), 0u32);
        let mut queue = VecDeque::from([id]);
        while let Some(h) = queue.pop_front() {
            let e = exponents[&h];
            for (g, eg) in &gens {
                let next = h.then_unchecked(g);
                let val = (e + eg) % root_order;
                match exponents.get(&next) {
                    Some(&v) if v != val => {
                        return Err(Error::InconsistentCharacter(next.to_string()))
                    }
                    Some(_) => {}
                    None => {
                        exponents.insert(next.clone(), val);
                        queue.push_back(next);
                    }
                }
            }
        }
        Ok(Self {
            rank: n,
            root_order,
            exponents,
        })
    }

    pub fn order(&self) -> usize {
        self.exponents.len()
    }

    pub fn root_order(&self) -> u32 {
        self.root_order
    }

    pub fn contains(&self, g: &SignedPermutation) -> bool {
        self.exponents.contains_key(g)
    }

    pub fn exponent(&self, g: &SignedPermutation) -> Option<u32> {
        self.exponents.get(g).copied()
    }

    /// `χ↑(g) = (1/|H|) Σ_{x ∈ B_n, x⁻¹gx ∈ H} χ(x⁻¹gx)`, which must be rational.
    pub fn induce(&self) -> Result<ClassFunction> {
        let n = self.rank;
        let t = group::table(n);
        let classes = t.classes().to_vec();
        let values = par::map(&classes, |c| -> Result<Rational> {
            let g = c.standard_representative().index();
            let mut counts = vec![BigInt::zero(); self.root_order as usize];
            for x in 0..t.order() {
                let conj = t.mul(t.mul(t.inverse(x), g), x);
                if let Some(e) = self.exponents.get(t.element(conj)) {
                    counts[*e as usize] += 1;
                }
            }
            let z = CyclotomicNumber::from_power_counts(self.root_order, &counts);
            let q = z
                .to_rational()
                .ok_or_else(|| Error::NotRational(c.to_string()))?;
            Ok(q / int(self.order() as i64))
        });
        let mut out = ClassFunction::zero(n);
        for (c, v) in classes.into_iter().zip(values) {
            out.values.insert(c, v?);
        }
        Ok(out)
    }
}

/// The character `ρ_λ` of the centralizer of the standard representative of `λ`.
pub fn rho_character(lam: &SignedPartition) -> Result<SubgroupCharacter> {
    SubgroupCharacter::generate(lam.size(), &lam.centralizer_generators())
}

pub fn induced_rho(lam: &SignedPartition) -> Result<ClassFunction> {
    rho_character(lam)?.induce()
}

/// The negative `n`-cycle `1 → 2 → … → n → -1`.
pub fn coxeter_element(n: usize) -> SignedPermutation {
    let mut images: Vec<i32> = (2..=n as i32).collect();
    images.push(-1);
    SignedPermutation::new(images).expect("coxeter element")
}

/// Permutation character of `B_n` on the cosets of the cyclic group generated by
/// [`coxeter_element`].
pub fn coset_permutation_character(n: usize) -> ClassFunction {
    let gen = CentralizerGenerator {
        element: coxeter_element(n),
        root_order: 1,
    };
    SubgroupCharacter::generate(n, &[gen])
        .and_then(|h| h.induce())
        .expect("trivial character induces")
}

/// Tensor with the linear character `σ ↦ (-1)^{#negative entries}`.
pub fn sign_twist(chi: &ClassFunction) -> ClassFunction {
    ClassFunction::from_fn(chi.rank, |c| {
        let v = chi.value(c);
        if c.negative().len() % 2 == 1 {
            -v
        } else {
            v
        }
    })
}

/// Convenience for tests and reports: the integer value of a rational, if any.
pub fn as_integer(q: &Rational) -> Option<i64> {
    (q.denom().is_one()).then(|| q.numer().try_into().ok()).flatten()
}
