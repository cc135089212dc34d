//! Bases, Hilbert series, the type map and characters of the ring actions.
//!
//! Every action here preserves the filtrations by degree, loop degree and
//! type, so the trace on an associated graded piece is the sum of diagonal
//! coefficients over the basis monomials of that piece.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::characters::ClassFunction;
use crate::error::Result;
use crate::par;
use crate::rings::action::Substitution;
use crate::rings::element::Space;
use crate::rings::generators::{Generator, Monomial};
use crate::scalar::Rational;
use crate::signed::{SignedPartition, SignedSetPartition};

/// nbc monomials, optionally restricted to a degree and a loop degree.
pub fn nbc_basis(
    space: Space,
    degree: Option<usize>,
    loop_degree: Option<usize>,
) -> Result<Vec<Monomial>> {
    let rank = space.rank();
    Ok(space
        .system()?
        .nbc_basis()
        .into_iter()
        .filter(|m| degree.is_none_or(|k| m.degree() == k))
        .filter(|m| loop_degree.is_none_or(|l| m.loop_degree(rank) == l))
        .collect())
}

/// Coefficients of `(1 + t)(1 + 3t)…(1 + (2n-1)t)`.
pub fn hilbert_series(rank: usize) -> Vec<u64> {
    let mut coeffs = vec![1u64];
    for i in 1..=rank as u64 {
        let mut next = vec![0u64; coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k] += c;
            next[k + 1] += c * (2 * i - 1);
        }
        coeffs = next;
    }
    coeffs
}

/// Number of nbc monomials in each degree.
pub fn basis_counts(space: Space) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; space.rank() + 1];
    for m in space.system()?.nbc_basis() {
        counts[m.degree()] += 1;
    }
    Ok(counts)
}

/// Number of nbc monomials of each bidegree (degree, loop degree).
pub fn bigraded_counts(rank: usize) -> Result<BTreeMap<(usize, usize), u64>> {
    let mut out = BTreeMap::new();
    for m in Space::Z3(rank).system()?.nbc_basis() {
        *out.entry((m.degree(), m.loop_degree(rank))).or_insert(0) += 1;
    }
    Ok(out)
}

/// Connected components of the graph with an edge for every `z_ij^±`; a
/// component is negative when it carries a loop `z_i`.
pub fn type_of(rank: usize, generators: &[Generator]) -> SignedSetPartition {
    let mut parent: Vec<usize> = (0..=rank).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    let mut looped = vec![false; rank + 1];
    for g in generators {
        match *g {
            Generator::Loop(j) => looped[j as usize] = true,
            Generator::Edge { i, j, .. } => {
                let (a, b) = (find(&mut parent, i as usize), find(&mut parent, j as usize));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut blocks: BTreeMap<usize, (Vec<usize>, bool)> = BTreeMap::new();
    for (i, &has_loop) in looped.iter().enumerate().skip(1) {
        let root = find(&mut parent, i);
        let entry = blocks.entry(root).or_default();
        entry.0.push(i);
        entry.1 |= has_loop;
    }
    let (mut positive, mut negative) = (Vec::new(), Vec::new());
    for (block, neg) in blocks.into_values() {
        if neg {
            negative.push(block);
        } else {
            positive.push(block);
        }
    }
    SignedSetPartition::new(positive, negative)
}

pub fn monomial_type(rank: usize, m: Monomial) -> SignedSetPartition {
    type_of(rank, &m.generators(rank))
}

/// Traces of the action on the span of basis monomials grouped by `key`.
///
/// Monomials with key `None` are skipped. Classes are processed in parallel.
pub fn traces_by<K, F>(space: Space, key: F) -> Result<BTreeMap<K, ClassFunction>>
where
    K: Ord + Clone + Send + Sync,
    F: Fn(Monomial) -> Option<K> + Sync,
{
    let basis: Vec<(Monomial, K)> = space
        .system()?
        .nbc_basis()
        .into_iter()
        .filter_map(|m| key(m).map(|k| (m, k)))
        .collect();
    let n = space.group_rank();
    let classes = SignedPartition::all(n);
    let per_class = par::map(&classes, |class| -> Result<BTreeMap<K, Rational>> {
        let sub = Substitution::new(space, &class.standard_representative())?;
        let mut traces: BTreeMap<K, Rational> = BTreeMap::new();
        for (m, k) in &basis {
            let c = sub.apply_monomial(*m)?.coefficient(*m);
            *traces.entry(k.clone()).or_insert_with(Rational::zero) += c;
        }
        Ok(traces)
    });
    let mut out: BTreeMap<K, BTreeMap<SignedPartition, Rational>> = BTreeMap::new();
    for (class, traces) in classes.iter().zip(per_class) {
        for (k, v) in traces? {
            out.entry(k).or_default().insert(class.clone(), v);
        }
    }
    Ok(out
        .into_iter()
        .map(|(k, values)| {
            (
                k,
                ClassFunction::from_fn(n, |c| values.get(c).cloned().unwrap_or_else(Rational::zero)),
            )
        })
        .collect())
}

/// Character of each degree `0..=rank` (of the associated graded for `Z1`, `Y1`).
pub fn graded_characters(space: Space) -> Result<Vec<ClassFunction>> {
    let by_degree = traces_by(space, |m| Some(m.degree()))?;
    Ok((0..=space.rank())
        .map(|k| {
            by_degree
                .get(&k)
                .cloned()
                .unwrap_or_else(|| ClassFunction::zero(space.group_rank()))
        })
        .collect())
}

pub fn graded_character(space: Space, degree: usize) -> Result<ClassFunction> {
    Ok(traces_by(space, |m| (m.degree() == degree).then_some(()))?
        .remove(&())
        .unwrap_or_else(|| ClassFunction::zero(space.group_rank())))
}

/// Characters of the pieces of bidegree (degree, loop degree) of the graded ring.
pub fn bigraded_character(rank: usize) -> Result<BTreeMap<(usize, usize), ClassFunction>> {
    traces_by(Space::Z3(rank), |m| Some((m.degree(), m.loop_degree(rank))))
}

/// Character of the span of nbc monomials of a given type shape.
pub fn type_character(shape: &SignedPartition) -> Result<ClassFunction> {
    let rank = shape.size();
    Ok(
        traces_by(Space::Z3(rank), |m| {
            (monomial_type(rank, m).shape() == *shape).then_some(())
        })?
        .remove(&())
        .unwrap_or_else(|| ClassFunction::zero(rank)),
    )
}

/// Characters of all type shapes at once.
pub fn type_characters(rank: usize) -> Result<BTreeMap<SignedPartition, ClassFunction>> {
    let mut out = traces_by(Space::Z3(rank), |m| Some(monomial_type(rank, m).shape()))?;
    for shape in SignedPartition::all(rank) {
        out.entry(shape).or_insert_with(|| ClassFunction::zero(rank));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hilbert_coefficients() {
        assert_eq!(hilbert_series(2), vec![1, 4, 3]);
        assert_eq!(hilbert_series(3), vec![1, 9, 23, 15]);
        assert_eq!(basis_counts(Space::Y1(2)).unwrap(), vec![1, 4, 3]);
    }

    #[test]
    fn type_examples() {
        let t = type_of(
            8,
            &[
                Generator::edge(1, 2, true),
                Generator::Loop(5),
                Generator::edge(5, 6, true),
                Generator::Loop(7),
            ],
        );
        assert_eq!(t.positive(), &[vec![1, 2], vec![3], vec![4], vec![8]]);
        assert_eq!(t.negative(), &[vec![5, 6], vec![7]]);
        let t = type_of(2, &[Generator::Loop(1), Generator::edge(1, 2, false)]);
        assert!(t.positive().is_empty());
        assert_eq!(t.negative(), &[vec![1, 2]]);
        let t = type_of(3, &[]);
        assert_eq!(t.positive().len(), 3);
    }

    #[test]
    fn degree_zero_is_trivial() {
        for n in 1..=3 {
            let chi = graded_character(Space::Z3(n), 0).unwrap();
            assert!(chi.values().values().all(|v| *v == Rational::from_integer(1.into())));
        }
    }
}
