//! Green's relations by literal comparison of principal ideals.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::semigroup::FiniteSemigroup;
use crate::util::{classes_of, UnionFind};

/// Partition labels for the five Green relations plus the principal ideals
/// that define the `≤_R` and `≤_L` quasi-orders.
///
/// Class labels are dense and numbered by first appearance in element order.
#[derive(Debug, Clone)]
pub struct GreenData {
    pub r_class: Vec<usize>,
    pub l_class: Vec<usize>,
    pub h_class: Vec<usize>,
    pub d_class: Vec<usize>,
    pub j_class: Vec<usize>,
    right_ideals: Vec<FixedBitSet>,
    left_ideals: Vec<FixedBitSet>,
}

impl GreenData {
    pub fn compute(s: &FiniteSemigroup) -> Self {
        let n = s.len();
        let mut right_ideals = Vec::with_capacity(n);
        let mut left_ideals = Vec::with_capacity(n);
        for a in 0..n {
            let mut r = FixedBitSet::with_capacity(n);
            let mut l = FixedBitSet::with_capacity(n);
            r.insert(a);
            l.insert(a);
            for x in 0..n {
                r.insert(s.mul(a, x));
                l.insert(s.mul(x, a));
            }
            right_ideals.push(r);
            left_ideals.push(l);
        }
        let two_sided: Vec<FixedBitSet> = (0..n)
            .map(|a| {
                let mut j = FixedBitSet::with_capacity(n);
                for x in right_ideals[a].ones() {
                    j.union_with(&left_ideals[x]);
                }
                j
            })
            .collect();

        let r_class = label_by_set(&right_ideals);
        let l_class = label_by_set(&left_ideals);
        let j_class = label_by_set(&two_sided);

        let mut h_ids = HashMap::new();
        let h_class = (0..n)
            .map(|a| {
                let next = h_ids.len();
                *h_ids.entry((r_class[a], l_class[a])).or_insert(next)
            })
            .collect();

        let mut uf = UnionFind::new(n);
        for group in classes_of(&r_class).iter().chain(classes_of(&l_class).iter()) {
            for w in group.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        let d_class = uf.labels();

        GreenData { r_class, l_class, h_class, d_class, j_class, right_ideals, left_ideals }
    }

    /// `a ≤_R b`, i.e. `aS¹ ⊆ bS¹`.
    pub fn leq_r(&self, a: usize, b: usize) -> bool {
        self.right_ideals[b].contains(a)
    }

    /// `a ≤_L b`, i.e. `S¹a ⊆ S¹b`.
    pub fn leq_l(&self, a: usize, b: usize) -> bool {
        self.left_ideals[b].contains(a)
    }

    pub fn right_ideal(&self, a: usize) -> &FixedBitSet {
        &self.right_ideals[a]
    }

    pub fn left_ideal(&self, a: usize) -> &FixedBitSet {
        &self.left_ideals[a]
    }

    pub fn r_related(&self, a: usize, b: usize) -> bool {
        self.r_class[a] == self.r_class[b]
    }

    pub fn l_related(&self, a: usize, b: usize) -> bool {
        self.l_class[a] == self.l_class[b]
    }

    pub fn d_classes(&self) -> Vec<Vec<usize>> {
        classes_of(&self.d_class)
    }

    pub fn j_classes(&self) -> Vec<Vec<usize>> {
        classes_of(&self.j_class)
    }

    pub fn r_classes(&self) -> Vec<Vec<usize>> {
        classes_of(&self.r_class)
    }

    pub fn l_classes(&self) -> Vec<Vec<usize>> {
        classes_of(&self.l_class)
    }

    pub fn h_classes(&self) -> Vec<Vec<usize>> {
        classes_of(&self.h_class)
    }

    /// Whether the computed D and J partitions coincide.
    pub fn d_equals_j(&self) -> bool {
        let n = self.d_class.len();
        (0..n).all(|a| (0..n).all(|b| (self.d_class[a] == self.d_class[b]) == (self.j_class[a] == self.j_class[b])))
    }
}

fn label_by_set(sets: &[FixedBitSet]) -> Vec<usize> {
    let mut ids: HashMap<&FixedBitSet, usize> = HashMap::new();
    sets.iter()
        .map(|s| {
            let next = ids.len();
            *ids.entry(s).or_insert(next)
        })
        .collect()
}
