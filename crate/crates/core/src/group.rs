//! Cached enumeration of `B_n` with multiplication by index.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::signed::{group_order, SignedPartition, SignedPermutation};

/// Ranks for which a full multiplication table is stored.
const DENSE_TABLE_MAX: usize = 4;
/// Largest rank served by [`table`].
pub const TABLE_MAX_RANK: usize = 6;

pub struct GroupTable {
    n: usize,
    elements: Vec<SignedPermutation>,
    mul: Option<Vec<u32>>,
    inverse: Vec<u32>,
    class_index: Vec<u32>,
    classes: Vec<SignedPartition>,
}

impl GroupTable {
    fn build(n: usize) -> Self {
        let elements = SignedPermutation::all(n);
        let order = elements.len();
        let mul = (n <= DENSE_TABLE_MAX).then(|| {
            let mut m = Vec::with_capacity(order * order);
            for a in &elements {
                for b in &elements {
                    m.push(a.then_unchecked(b).index() as u32);
                }
            }
            m
        });
        let inverse = elements.iter().map(|g| g.inverse().index() as u32).collect();
        let classes = SignedPartition::all(n);
        let lookup: HashMap<&SignedPartition, u32> =
            classes.iter().enumerate().map(|(i, c)| (c, i as u32)).collect();
        let class_index = elements.iter().map(|g| lookup[&g.cycle_type()]).collect();
        Self {
            n,
            elements,
            mul,
            inverse,
            class_index,
            classes,
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &SignedPermutation {
        &self.elements[i]
    }

    /// Index of `element(a) ∘ element(b)`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.mul {
            Some(m) => m[a * self.order() + b] as usize,
            None => self.elements[a].then_unchecked(&self.elements[b]).index(),
        }
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// Conjugacy classes in the order of [`SignedPartition::all`].
    pub fn classes(&self) -> &[SignedPartition] {
        &self.classes
    }

    pub fn class_of(&self, a: usize) -> &SignedPartition {
        &self.classes[self.class_index[a] as usize]
    }

    pub fn class_index_of(&self, a: usize) -> usize {
        self.class_index[a] as usize
    }
}

/// The table for `B_n`, built on first use and shared afterwards.
pub fn table(n: usize) -> &'static GroupTable {
    static TABLES: [OnceLock<GroupTable>; TABLE_MAX_RANK + 1] =
        [const { OnceLock::new() }; TABLE_MAX_RANK + 1];
    assert!(n <= TABLE_MAX_RANK, "no group table for rank {n}");
    let t = TABLES[n].get_or_init(|| GroupTable::build(n));
    debug_assert_eq!(t.order() as u64, group_order(n));
    t
}
