//! The rational group algebra `Q[B_n]` and its distinguished idempotents.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::characters::ClassFunction;
use crate::error::{Error, Result};
use crate::group;
use crate::par;
use crate::scalar::{factorial, frac, from_wire, to_wire, Rational};
use crate::signed::{Partition, SignedComposition, SignedPartition, SignedPermutation};

/// A finite rational combination of signed permutations of one rank.
///
/// Products use composition of permutations: `[σ] * [τ] = [σ ∘ τ]`.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    rank: usize,
    terms: BTreeMap<SignedPermutation, Rational>,
}

impl AlgebraElement {
    pub fn zero(n: usize) -> Self {
        Self {
            rank: n,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::basis(SignedPermutation::identity(n))
    }

    pub fn basis(g: SignedPermutation) -> Self {
        let rank = g.rank();
        let mut terms = BTreeMap::new();
        terms.insert(g, Rational::one());
        Self { rank, terms }
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (SignedPermutation, Rational)>,
    {
        let mut out = Self::zero(n);
        for (g, c) in terms {
            if g.rank() != n {
                return Err(Error::RankMismatch {
                    left: n,
                    right: g.rank(),
                });
            }
            out.add_term(g, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, g: SignedPermutation, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(g) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<SignedPermutation, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, g: &SignedPermutation) -> Rational {
        self.terms.get(g).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        Self {
            rank: self.rank,
            terms: self.terms.iter().map(|(g, x)| (g.clone(), x * c)).collect(),
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.rank));
        }
        Ok(convolve(self, other))
    }

    /// Dense coefficient vector indexed like [`group::table`].
    pub fn dense(&self) -> Vec<Rational> {
        let t = group::table(self.rank);
        let mut v = vec![Rational::zero(); t.order()];
        for (g, c) in &self.terms {
            v[g.index()] = c.clone();
        }
        v
    }

    pub fn to_json(&self) -> Value {
        let map: serde_json::Map<String, Value> = self
            .terms
            .iter()
            .map(|(g, c)| (g.to_string(), Value::String(to_wire(c))))
            .collect();
        Value::Object(map)
    }

    pub fn from_json(n: usize, value: &Value) -> Result<Self> {
        let bad = || Error::Parse {
            what: "algebra element",
            input: value.to_string(),
        };
        let map = value.as_object().ok_or_else(bad)?;
        let mut terms = Vec::with_capacity(map.len());
        for (k, v) in map {
            let g: SignedPermutation = if k.is_empty() {
                SignedPermutation::identity(0)
            } else {
                k.parse()?
            };
            terms.push((g, from_wire(v.as_str().ok_or_else(bad)?)?));
        }
        Self::from_terms(n, terms)
    }
}

/// Common-denominator convolution. Numerators are accumulated in `i128` and the
/// whole product is redone with big integers if anything overflows.
fn convolve(a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
    let n = a.rank;
    let t = group::table(n);
    let (da, na) = integral(a);
    let (db, nb) = integral(b);
    let den = &da * &db;
    let small = |v: &[(usize, BigInt)]| -> Option<Vec<(usize, i128)>> {
        v.iter().map(|(i, x)| x.to_i128().map(|x| (*i, x))).collect()
    };
    let mut out = AlgebraElement::zero(n);
    let fast = small(&na).zip(small(&nb)).and_then(|(sa, sb)| {
        let mut acc = vec![0i128; t.order()];
        for &(ia, x) in &sa {
            for &(ib, y) in &sb {
                let k = t.mul(ia, ib);
                acc[k] = acc[k].checked_add(x.checked_mul(y)?)?;
            }
        }
        Some(acc)
    });
    match fast {
        Some(acc) => {
            for (k, x) in acc.into_iter().enumerate() {
                if x != 0 {
                    out.terms.insert(
                        t.element(k).clone(),
                        Rational::new(BigInt::from(x), den.clone()),
                    );
                }
            }
        }
        None => {
            let mut acc = vec![BigInt::zero(); t.order()];
            for (ia, x) in &na {
                for (ib, y) in &nb {
                    acc[t.mul(*ia, *ib)] += x * y;
                }
            }
            for (k, x) in acc.into_iter().enumerate() {
                if !x.is_zero() {
                    out.terms
                        .insert(t.element(k).clone(), Rational::new(x, den.clone()));
                }
            }
        }
    }
    out
}

fn integral(a: &AlgebraElement) -> (BigInt, Vec<(usize, BigInt)>) {
    let den = a
        .terms
        .values()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let nums = a
        .terms
        .iter()
        .map(|(g, c)| (g.index(), c.numer() * (&den / c.denom())))
        .collect();
    (den, nums)
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    /// Panics on a rank mismatch; use [`AlgebraElement::try_add`] to handle it.
    fn add(self, rhs: Self) -> AlgebraElement {
        self.try_add(rhs).expect("rank mismatch")
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: Self) -> AlgebraElement {
        self.try_sub(rhs).expect("rank mismatch")
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: Self) -> AlgebraElement {
        self.try_mul(rhs).expect("rank mismatch")
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (g, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i > 0 || c.is_negative() {
                write!(f, "{}{}", if i > 0 { " " } else { "" }, sign)?;
                if i > 0 {
                    write!(f, " ")?;
                }
            }
            let a = c.abs();
            if a.is_one() {
                write!(f, "[{g}]")?;
            } else {
                write!(f, "{}*[{g}]", crate::scalar::pretty(&a))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Sum of the signed permutations whose MR shape is `alpha`.
pub fn shape_class_sum(alpha: &SignedComposition) -> AlgebraElement {
    let n = alpha.size();
    let mut out = AlgebraElement::zero(n);
    for w in SignedPermutation::all(n) {
        if &w.mr_shape() == alpha {
            out.terms.insert(w, Rational::one());
        }
    }
    out
}

/// Sum of the permutations in `S_n` whose descent set lies in `allowed`.
pub fn descent_class_sum(n: usize, allowed: &[usize]) -> AlgebraElement {
    let mut out = AlgebraElement::zero(n);
    for w in SignedPermutation::all_unsigned(n) {
        if w.descents().iter().all(|d| allowed.contains(d)) {
            out.terms.insert(w, Rational::one());
        }
    }
    out
}

/// The permutation of `[n]` acting as `w ∈ S_m` on the ordered positions `block`.
fn relabel(n: usize, block: &[usize], w: &SignedPermutation) -> SignedPermutation {
    let mut images: Vec<i32> = (1..=n as i32).collect();
    for (k, &j) in block.iter().enumerate() {
        let v = w.image(k as i32 + 1);
        let target = block[v.unsigned_abs() as usize - 1] as i32;
        images[j - 1] = if v < 0 { -target } else { target };
    }
    SignedPermutation::new(images).expect("relabelled permutation")
}

/// `Σ_{A ⊆ [m-1]} (-1)^{|A|}/(|A|+1) X_A` for `m = |block|`, moved onto `block`.
pub fn eulerian_projection(n: usize, block: &[usize]) -> AlgebraElement {
    let m = block.len();
    let mut out = AlgebraElement::zero(n);
    for w in SignedPermutation::all_unsigned(m) {
        let d = w.descents().len();
        let free = m.saturating_sub(1) - d;
        let mut c = Rational::zero();
        let mut binom = 1i64;
        for j in 0..=free {
            let sign = if (d + j) % 2 == 0 { 1 } else { -1 };
            c += frac(sign * binom, (d + j + 1) as i64);
            binom = binom * (free - j) as i64 / (j + 1) as i64;
        }
        out.add_term(relabel(n, block, &w), c);
    }
    out
}

/// `½(1 ± w_0)` where `w_0` negates the points of `block`.
pub fn sign_projection(n: usize, block: &[usize], positive: bool) -> AlgebraElement {
    let half = frac(1, 2);
    let mut out = AlgebraElement::zero(n);
    out.add_term(SignedPermutation::identity(n), half.clone());
    out.add_term(
        SignedPermutation::negation_on(n, block),
        if positive { half } else { -half },
    );
    out
}

/// The product attached to a signed composition `p`:
/// `X_{p̂} · ε_{Λ_1} r_{Λ_1} ⋯ ε_{Λ_ℓ} r_{Λ_ℓ}` with `ε` signed like the parts.
pub fn composition_idempotent(p: &SignedComposition) -> AlgebraElement {
    let n = p.size();
    let mut acc = descent_class_sum(n, &p.partial_sums());
    for (block, &part) in p.blocks().iter().zip(p.parts()) {
        acc = &acc * &sign_projection(n, block, part > 0);
        acc = &acc * &eulerian_projection(n, block);
    }
    acc
}

fn compositions_sorting_to(lam: &SignedPartition) -> Vec<SignedComposition> {
    let mut parts: Vec<i32> = lam.positive().parts().iter().map(|&k| k as i32).collect();
    parts.extend(lam.negative().parts().iter().map(|&k| -(k as i32)));
    parts.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(SignedComposition::new(parts.clone()).expect("nonzero parts"));
        if !next_permutation(&mut parts) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [i32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

type Cache = Mutex<HashMap<SignedPartition, Arc<AlgebraElement>>>;

/// The idempotent `g_λ` of `Q[B_n]`, memoised per signed partition.
pub fn hyperoctahedral_idempotent(lam: &SignedPartition) -> Arc<AlgebraElement> {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(e) = cache.lock().expect("idempotent cache").get(lam) {
        return e.clone();
    }
    let n = lam.size();
    let comps = compositions_sorting_to(lam);
    let pieces = par::map(&comps, composition_idempotent);
    let mut sum = AlgebraElement::zero(n);
    for p in &pieces {
        sum = &sum + p;
    }
    let g = Arc::new(sum.scale(&frac(1, factorial(lam.len()) as i64)));
    cache
        .lock()
        .expect("idempotent cache")
        .insert(lam.clone(), g.clone());
    g
}

/// `g_k = Σ g_λ` over signed partitions of `n` with exactly `k` positive parts.
pub fn graded_idempotent(n: usize, k: usize) -> AlgebraElement {
    let mut out = AlgebraElement::zero(n);
    for lam in SignedPartition::all(n) {
        if lam.positive().len() == k {
            out = &out + &hyperoctahedral_idempotent(&lam);
        }
    }
    out
}

/// The type A idempotent `e_λ ∈ Q[S_n]`, stored inside `Q[B_n]`.
pub fn type_a_idempotent(lam: &Partition) -> AlgebraElement {
    let n = lam.size();
    let signed = SignedPartition::from_parts(lam.clone(), Partition::default());
    let mut sum = AlgebraElement::zero(n);
    for p in compositions_sorting_to(&signed) {
        let mut acc = descent_class_sum(n, &p.partial_sums());
        for block in p.blocks() {
            acc = &acc * &eulerian_projection(n, &block);
        }
        sum = &sum + &acc;
    }
    sum.scale(&frac(1, factorial(lam.len()) as i64))
}

/// `e_k = Σ e_λ` over partitions of `n` with `k + 1` parts.
pub fn type_a_graded_idempotent(n: usize, k: usize) -> AlgebraElement {
    let mut out = AlgebraElement::zero(n);
    for lam in Partition::all(n) {
        if lam.len() == k + 1 {
            out = &out + &type_a_idempotent(&lam);
        }
    }
    out
}

/// The algebra map `Q[B_n] → Q[S_n]` that forgets signs.
pub fn tau_map(x: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero(x.rank());
    for (g, c) in &x.terms {
        out.add_term(g.forget_signs(), c.clone());
    }
    out
}

pub fn is_idempotent(e: &AlgebraElement) -> bool {
    &(e * e) == e
}

/// Character of the right ideal `e Q[B_n]`: `χ(g) = Σ_x [e](x g⁻¹ x⁻¹)`.
pub fn right_ideal_character(e: &AlgebraElement) -> Result<ClassFunction> {
    if !is_idempotent(e) {
        return Err(Error::NotIdempotent);
    }
    let n = e.rank();
    let t = group::table(n);
    let dense = e.dense();
    let classes = t.classes().to_vec();
    let values = par::map(&classes, |c| {
        let g_inv = t.inverse(c.standard_representative().index());
        let mut acc = Rational::zero();
        for x in 0..t.order() {
            let y = t.mul(t.mul(x, g_inv), t.inverse(x));
            acc += &dense[y];
        }
        acc
    });
    Ok(ClassFunction::from_values(
        n,
        classes.into_iter().zip(values),
    ))
}
