//! Signed permutations, signed partitions and signed compositions.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::factorial;

/// Largest rank accepted by [`SignedPermutation::new`].
pub const MAX_RANK: usize = 12;

/// An element of `B_n` stored in one-line notation: `images[i - 1]` is the image of `i`.
///
/// Negative points follow `σ(-i) = -σ(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    images: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(images: Vec<i32>) -> Result<Self> {
        let n = images.len();
        let bad = || Error::InvalidPermutation(format!("{images:?}"));
        if n > MAX_RANK {
            return Err(bad());
        }
        let mut seen = vec![false; n];
        for &v in &images {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a - 1] {
                return Err(bad());
            }
            seen[a - 1] = true;
        }
        Ok(Self {
            images: images.into_iter().map(|v| v as i8).collect(),
        })
    }

    pub(crate) fn from_raw(images: Vec<i8>) -> Self {
        Self { images }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_raw((1..=n as i8).collect())
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn one_line(&self) -> Vec<i32> {
        self.images.iter().map(|&v| v as i32).collect()
    }

    /// Image of a signed point `i` with `1 <= |i| <= n`.
    pub fn image(&self, i: i32) -> i32 {
        let v = self.images[i.unsigned_abs() as usize - 1] as i32;
        if i < 0 {
            -v
        } else {
            v
        }
    }

    /// `self ∘ other`, so `other` is applied first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(self.then_unchecked(other))
    }

    pub(crate) fn then_unchecked(&self, other: &Self) -> Self {
        Self::from_raw(
            other
                .images
                .iter()
                .map(|&j| self.image(j as i32) as i8)
                .collect(),
        )
    }

    pub fn inverse(&self) -> Self {
        let mut out = vec![0i8; self.rank()];
        for (i, &v) in self.images.iter().enumerate() {
            let p = (i + 1) as i8;
            out[v.unsigned_abs() as usize - 1] = if v < 0 { -p } else { p };
        }
        Self::from_raw(out)
    }

    /// The transposition `s_i = (i, i+1)`.
    pub fn simple_transposition(n: usize, i: usize) -> Self {
        let mut images: Vec<i8> = (1..=n as i8).collect();
        images.swap(i - 1, i);
        Self::from_raw(images)
    }

    /// The sign change `t_i` of the point `i`.
    pub fn sign_change(n: usize, i: usize) -> Self {
        Self::negation_on(n, &[i])
    }

    /// Negates every point of `block` and fixes the rest.
    pub fn negation_on(n: usize, block: &[usize]) -> Self {
        let mut images: Vec<i8> = (1..=n as i8).collect();
        for &i in block {
            images[i - 1] = -images[i - 1];
        }
        Self::from_raw(images)
    }

    /// The longest element `-1`.
    pub fn negation(n: usize) -> Self {
        Self::from_raw((1..=n as i8).map(|v| -v).collect())
    }

    pub fn negative_count(&self) -> usize {
        self.images.iter().filter(|&&v| v < 0).count()
    }

    pub fn is_unsigned(&self) -> bool {
        self.images.iter().all(|&v| v > 0)
    }

    pub fn forget_signs(&self) -> Self {
        Self::from_raw(self.images.iter().map(|v| v.abs()).collect())
    }

    /// Appends fixed points up to rank `n`.
    pub fn extend(&self, n: usize) -> Self {
        let mut images = self.images.clone();
        images.extend(self.rank() as i8 + 1..=n as i8);
        Self::from_raw(images)
    }

    pub fn cycle_type(&self) -> SignedPartition {
        let n = self.rank();
        let mut seen = vec![false; n];
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut len = 0;
            let mut negative = false;
            let mut i = start as i32;
            while !seen[i.unsigned_abs() as usize - 1] {
                seen[i.unsigned_abs() as usize - 1] = true;
                let v = self.images[i.unsigned_abs() as usize - 1];
                negative ^= v < 0;
                i = v.unsigned_abs() as i32;
                len += 1;
            }
            if negative {
                neg.push(len);
            } else {
                pos.push(len);
            }
        }
        SignedPartition::new(pos, neg)
    }

    /// Multiplicative order in `B_n`.
    pub fn order(&self) -> usize {
        let ct = self.cycle_type();
        let lens = ct
            .positive()
            .parts()
            .iter()
            .copied()
            .chain(ct.negative().parts().iter().map(|k| 2 * k));
        lens.fold(1, num_integer::lcm)
    }

    /// Ordinary descents `{i : σ_i > σ_{i+1}}`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.rank())
            .filter(|&i| self.images[i - 1] > self.images[i])
            .collect()
    }

    /// Positions `i` where neighbours change sign, or keep it while the absolute value drops.
    pub fn mr_descents(&self) -> Vec<usize> {
        (1..self.rank())
            .filter(|&i| {
                let (a, b) = (self.images[i - 1], self.images[i]);
                (a < 0) != (b < 0) || a.abs() > b.abs()
            })
            .collect()
    }

    /// Signed block sizes between consecutive MR descents.
    pub fn mr_shape(&self) -> SignedComposition {
        let n = self.rank();
        let mut cuts = self.mr_descents();
        cuts.push(n);
        let mut start = 0;
        let mut parts = Vec::with_capacity(cuts.len());
        for c in cuts {
            let size = (c - start) as i32;
            parts.push(if self.images[start] < 0 { -size } else { size });
            start = c;
        }
        SignedComposition(parts)
    }

    /// Position of `self` in the fixed enumeration of `B_n` used by group tables.
    pub fn index(&self) -> usize {
        let n = self.rank();
        let mut signs = 0usize;
        for (i, &v) in self.images.iter().enumerate() {
            if v < 0 {
                signs |= 1 << i;
            }
        }
        let abs: Vec<i8> = self.images.iter().map(|v| v.abs()).collect();
        let mut rank = 0usize;
        for i in 0..n {
            let smaller = abs[i + 1..].iter().filter(|&&w| w < abs[i]).count();
            rank = rank * (n - i) + smaller;
        }
        (rank << n) | signs
    }

    pub fn from_index(n: usize, index: usize) -> Self {
        let signs = index & ((1 << n) - 1);
        let mut rank = index >> n;
        let mut digits = vec![0usize; n];
        for i in (0..n).rev() {
            let base = n - i;
            digits[i] = rank % base;
            rank /= base;
        }
        let mut pool: Vec<i8> = (1..=n as i8).collect();
        let images = digits
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                let v = pool.remove(d);
                if signs >> i & 1 == 1 {
                    -v
                } else {
                    v
                }
            })
            .collect();
        Self::from_raw(images)
    }

    /// All of `B_n` in index order.
    pub fn all(n: usize) -> Vec<Self> {
        (0..group_order(n) as usize)
            .map(|i| Self::from_index(n, i))
            .collect()
    }

    /// All of `S_n`, viewed inside `B_n`.
    pub fn all_unsigned(n: usize) -> Vec<Self> {
        let mut out = Vec::with_capacity(factorial(n) as usize);
        for r in 0..factorial(n) as usize {
            out.push(Self::from_index(n, r << n));
        }
        out
    }
}

pub fn group_order(n: usize) -> u64 {
    (1u64 << n) * factorial(n)
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.trim().is_empty() {
            return Ok(Self::identity(0));
        }
        let images = inner
            .split(',')
            .map(|t| t.trim().parse::<i32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse {
                what: "signed permutation",
                input: s.to_string(),
            })?;
        Self::new(images)
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Partitions of `n`, largest first part first.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// A pair of partitions `(λ⁺, λ⁻)`; these label the conjugacy classes and the
/// irreducible characters of `B_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SignedPartition {
    pos: Partition,
    neg: Partition,
}

/// A generator of the centralizer of a standard representative together with
/// the order of the root of unity it is sent to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralizerGenerator {
    pub element: SignedPermutation,
    pub root_order: u32,
}

impl SignedPartition {
    pub fn new(pos: Vec<usize>, neg: Vec<usize>) -> Self {
        Self {
            pos: Partition::new(pos),
            neg: Partition::new(neg),
        }
    }

    pub fn from_parts(pos: Partition, neg: Partition) -> Self {
        Self { pos, neg }
    }

    pub fn positive(&self) -> &Partition {
        &self.pos
    }

    pub fn negative(&self) -> &Partition {
        &self.neg
    }

    pub fn size(&self) -> usize {
        self.pos.size() + self.neg.size()
    }

    /// Total number of parts.
    pub fn len(&self) -> usize {
        self.pos.len() + self.neg.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The class of the identity, `((1^n), ∅)`.
    pub fn identity_class(n: usize) -> Self {
        Self::new(vec![1; n], vec![])
    }

    /// All signed partitions of `n`.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for a in (0..=n).rev() {
            for p in Partition::all(a) {
                for q in Partition::all(n - a) {
                    out.push(Self::from_parts(p.clone(), q));
                }
            }
        }
        out
    }

    pub fn centralizer_order(&self) -> u64 {
        let mut z = 1u64;
        for side in [&self.pos, &self.neg] {
            for (k, m) in side.multiplicities() {
                z *= (2 * k as u64).pow(m as u32) * factorial(m);
            }
        }
        z
    }

    pub fn class_size(&self) -> u64 {
        group_order(self.size()) / self.centralizer_order()
    }

    /// Consecutive blocks `Λ_1, Λ_2, ...`, positive parts first, each with its sign.
    pub fn blocks(&self) -> Vec<(Vec<usize>, bool)> {
        let mut start = 1;
        let mut out = Vec::with_capacity(self.len());
        let parts = self
            .pos
            .parts()
            .iter()
            .map(|&k| (k, false))
            .chain(self.neg.parts().iter().map(|&k| (k, true)));
        for (k, negative) in parts {
            out.push(((start..start + k).collect(), negative));
            start += k;
        }
        out
    }

    /// The representative built from one cycle per block.
    pub fn standard_representative(&self) -> SignedPermutation {
        let n = self.size();
        let mut images: Vec<i8> = (1..=n as i8).collect();
        for (block, negative) in self.blocks() {
            let cyc = block_cycle(n, &block, negative);
            for &i in &block {
                images[i - 1] = cyc.images[i - 1];
            }
        }
        SignedPermutation::from_raw(images)
    }

    /// Generators of the centralizer of [`Self::standard_representative`].
    pub fn centralizer_generators(&self) -> Vec<CentralizerGenerator> {
        let n = self.size();
        let blocks = self.blocks();
        let mut out = Vec::new();
        for (block, negative) in &blocks {
            let k = block.len() as u32;
            if *negative {
                out.push(CentralizerGenerator {
                    element: block_cycle(n, block, true),
                    root_order: 2 * k,
                });
            } else {
                out.push(CentralizerGenerator {
                    element: block_cycle(n, block, false),
                    root_order: k,
                });
                out.push(CentralizerGenerator {
                    element: SignedPermutation::negation_on(n, block),
                    root_order: 1,
                });
            }
        }
        for w in blocks.windows(2) {
            let ((a, sa), (b, sb)) = (&w[0], &w[1]);
            if sa == sb && a.len() == b.len() {
                let k = a.len() as i8;
                let mut images: Vec<i8> = (1..=n as i8).collect();
                for &i in a {
                    images[i - 1] = i as i8 + k;
                }
                for &i in b {
                    images[i - 1] = i as i8 - k;
                }
                out.push(CentralizerGenerator {
                    element: SignedPermutation::from_raw(images),
                    root_order: 1,
                });
            }
        }
        out
    }
}

/// Positive cycle `a → a+1 → … → b → a` on a block, or the negative cycle of the
/// same length: `b → -a` for even length, the positive cycle times `-1` on the
/// block for odd length.
fn block_cycle(n: usize, block: &[usize], negative: bool) -> SignedPermutation {
    let mut images: Vec<i8> = (1..=n as i8).collect();
    let k = block.len();
    for (t, &i) in block.iter().enumerate() {
        images[i - 1] = block[(t + 1) % k] as i8;
    }
    if negative {
        if k.is_multiple_of(2) {
            let last = block[k - 1];
            images[last - 1] = -images[last - 1];
        } else {
            for &i in block {
                images[i - 1] = -images[i - 1];
            }
        }
    }
    SignedPermutation::from_raw(images)
}

impl fmt::Display for SignedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.pos, self.neg)
    }
}

impl fmt::Debug for SignedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_parts(s: &str, input: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "∅" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| Error::Parse {
            what: "signed partition",
            input: input.to_string(),
        })
}

impl FromStr for SignedPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (p, q) = inner.split_once('|').ok_or_else(|| Error::Parse {
            what: "signed partition",
            input: s.to_string(),
        })?;
        Ok(Self::new(parse_parts(p, s)?, parse_parts(q, s)?))
    }
}

/// A sequence of nonzero integers; the sign of a part is the sign of its block.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedComposition(Vec<i32>);

impl SignedComposition {
    pub fn new(parts: Vec<i32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse {
                what: "signed composition",
                input: format!("{parts:?}"),
            });
        }
        Ok(Self(parts))
    }

    pub fn parts(&self) -> &[i32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|p| p.unsigned_abs() as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All signed compositions of `n`.
    pub fn all(n: usize) -> Vec<Self> {
        fn go(rest: usize, cur: &mut Vec<i32>, out: &mut Vec<SignedComposition>) {
            if rest == 0 {
                out.push(SignedComposition(cur.clone()));
                return;
            }
            for k in 1..=rest {
                for s in [1, -1] {
                    cur.push(s * k as i32);
                    go(rest - k, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(n, &mut Vec::new(), &mut out);
        out
    }

    pub fn unsigned(&self) -> Vec<usize> {
        self.0.iter().map(|p| p.unsigned_abs() as usize).collect()
    }

    /// The first `len - 1` partial sums of the unsigned parts.
    pub fn partial_sums(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::new();
        for &p in self.unsigned().iter().take(self.len().saturating_sub(1)) {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// The consecutive intervals of `[n]` cut out by the parts.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut start = 1;
        self.unsigned()
            .into_iter()
            .map(|k| {
                let b = (start..start + k).collect();
                start += k;
                b
            })
            .collect()
    }

    /// The signed partition obtained by sorting each sign class.
    pub fn sorted(&self) -> SignedPartition {
        let pos = self.0.iter().filter(|&&p| p > 0).map(|&p| p as usize);
        let neg = self.0.iter().filter(|&&p| p < 0).map(|&p| (-p) as usize);
        SignedPartition::new(pos.collect(), neg.collect())
    }
}

impl fmt::Display for SignedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for SignedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A set partition of `[n]` with every block marked positive or negative.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct SignedSetPartition {
    positive: Vec<Vec<usize>>,
    negative: Vec<Vec<usize>>,
}

impl SignedSetPartition {
    pub fn new(positive: Vec<Vec<usize>>, negative: Vec<Vec<usize>>) -> Self {
        let norm = |mut blocks: Vec<Vec<usize>>| {
            for b in &mut blocks {
                b.sort_unstable();
            }
            blocks.sort();
            blocks
        };
        Self {
            positive: norm(positive),
            negative: norm(negative),
        }
    }

    pub fn positive(&self) -> &[Vec<usize>] {
        &self.positive
    }

    pub fn negative(&self) -> &[Vec<usize>] {
        &self.negative
    }

    pub fn shape(&self) -> SignedPartition {
        SignedPartition::new(
            self.positive.iter().map(Vec::len).collect(),
            self.negative.iter().map(Vec::len).collect(),
        )
    }
}

/// A signed point of `{0, 1, …, m}`: the letters of the cyclic arrangements.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    point: u8,
    negative: bool,
}

impl Letter {
    pub const ZERO: Letter = Letter {
        point: 0,
        negative: false,
    };
    pub const ZERO_BAR: Letter = Letter {
        point: 0,
        negative: true,
    };

    pub fn new(point: usize, negative: bool) -> Self {
        Self {
            point: point as u8,
            negative,
        }
    }

    /// The letter `±i` for a nonzero signed point.
    pub fn from_signed(i: i32) -> Self {
        Self::new(i.unsigned_abs() as usize, i < 0)
    }

    pub fn point(&self) -> usize {
        self.point as usize
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn bar(&self) -> Self {
        Self {
            point: self.point,
            negative: !self.negative,
        }
    }

    /// The signed integer of a nonzero letter.
    pub fn signed(&self) -> i32 {
        debug_assert!(self.point > 0);
        if self.negative {
            -(self.point as i32)
        } else {
            self.point as i32
        }
    }

    /// Image under `σ ∈ B_{m+1}`, where the letter `p` is the point `p + 1` of `σ`.
    pub fn act(&self, sigma: &SignedPermutation) -> Self {
        let v = sigma.image(self.point as i32 + 1);
        Self::new(v.unsigned_abs() as usize - 1, (v < 0) != self.negative)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.negative { "-" } else { "" }, self.point)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(v: &[i32]) -> SignedPermutation {
        SignedPermutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let s1 = SignedPermutation::simple_transposition(2, 1);
        let t2 = SignedPermutation::sign_change(2, 2);
        let st = s1.compose(&t2).unwrap();
        for i in [-2, -1, 1, 2] {
            assert_eq!(st.image(i), s1.image(t2.image(i)));
        }
        assert_eq!(st, sp(&[2, -1]));
    }

    #[test]
    fn cycle_type_example() {
        let ct = sp(&[2, -3, 1, 7, -6, 5, 4]).cycle_type();
        assert_eq!(ct, SignedPartition::new(vec![2], vec![3, 2]));
        assert_eq!(ct.to_string(), "(2|3,2)");
    }

    #[test]
    fn mr_shapes() {
        assert_eq!(sp(&[3, 4, -1, -5, -2]).mr_shape().parts(), &[2, -2, -1]);
        assert_eq!(sp(&[-1, -2]).mr_shape().parts(), &[-2]);
        assert_eq!(sp(&[-2, 1, -3]).forget_signs(), sp(&[2, 1, 3]));
    }

    #[test]
    fn index_round_trip() {
        for n in 0..=4 {
            let all = SignedPermutation::all(n);
            assert_eq!(all.len() as u64, group_order(n));
            for (i, g) in all.iter().enumerate() {
                assert_eq!(g.index(), i);
            }
        }
    }

    #[test]
    fn standard_representative_example() {
        let lam = SignedPartition::new(vec![2, 1], vec![2, 2]);
        assert_eq!(lam.standard_representative(), sp(&[2, 1, 3, 5, -4, 7, -6]));
        let gens = lam.centralizer_generators();
        assert!(gens.iter().any(|g| g.element == sp(&[1, 2, 3, 5, -4, 6, 7]) && g.root_order == 4));
        assert!(gens.iter().any(|g| g.element == sp(&[1, 2, 3, 6, 7, 4, 5]) && g.root_order == 1));
    }

    #[test]
    fn composition_helpers() {
        let p = SignedComposition::new(vec![2, -2, 1]).unwrap();
        assert_eq!(p.unsigned(), vec![2, 2, 1]);
        assert_eq!(p.partial_sums(), vec![2, 4]);
        assert_eq!(p.blocks(), vec![vec![1, 2], vec![3, 4], vec![5]]);
        assert_eq!(p.sorted(), SignedPartition::new(vec![2, 1], vec![2]));
    }

    #[test]
    fn parse_and_print() {
        let lam: SignedPartition = "(2|3,2)".parse().unwrap();
        assert_eq!(lam, SignedPartition::new(vec![2], vec![3, 2]));
        let e: SignedPartition = "(|1)".parse().unwrap();
        assert_eq!(e.to_string(), "(|1)");
        assert_eq!(sp(&[2, -3, 1]).to_string(), "2,-3,1");
        assert_eq!("2,-3,1".parse::<SignedPermutation>().unwrap(), sp(&[2, -3, 1]));
        assert!(SignedPermutation::new(vec![1, 1]).is_err());
        assert!(SignedPermutation::new(vec![0, 1]).is_err());
    }
}
