//! Finite semigroups of partial maps: closure, Cayley table, idempotents,
//! the natural orders on idempotents, regularity and maximal subgroups.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partial_map::PartialMap;

/// Default element cap for [`FiniteSemigroup::generate`].
pub const DEFAULT_CAP: usize = 1_000_000;

/// How an element was first reached during closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    /// The element is the generator at this position of the generator list.
    Generator(usize),
    /// `prefix * generator` for the generator at the given position.
    Product { prefix: usize, generator: usize },
}

/// A semigroup given by an indexed list of partial maps and its Cayley table.
///
/// Element numbering is the breadth-first discovery order of
/// [`generate`](Self::generate) and is fully determined by the generator list.
#[derive(Debug, Clone)]
pub struct FiniteSemigroup {
    degree: usize,
    elements: Vec<PartialMap>,
    index: HashMap<PartialMap, usize>,
    mul: Vec<u32>,
    gens: Vec<usize>,
    origin: Vec<Origin>,
    zero: Option<usize>,
}

impl FiniteSemigroup {
    /// Closure of `gens` under composition.
    ///
    /// Elements are numbered level by level: word length first, then
    /// generator position, then the index of the element being extended.
    pub fn generate(gens: &[PartialMap], cap: usize) -> Result<Self> {
        let first = gens.first().ok_or(Error::NoGenerators)?;
        let degree = first.degree();
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { left: degree, right: g.degree() });
            }
        }
        let cap = cap.max(1);

        let mut elements: Vec<PartialMap> = Vec::new();
        let mut index: HashMap<PartialMap, usize> = HashMap::new();
        let mut origin = Vec::new();
        let mut gen_idx = Vec::with_capacity(gens.len());
        let mut level = Vec::new();

        for (pos, g) in gens.iter().enumerate() {
            let i = match index.get(g) {
                Some(&i) => i,
                None => {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    let i = elements.len();
                    elements.push(g.clone());
                    index.insert(g.clone(), i);
                    origin.push(Origin::Generator(pos));
                    level.push(i);
                    i
                }
            };
            gen_idx.push(i);
        }

        while !level.is_empty() {
            let mut next = Vec::new();
            for (pos, g) in gens.iter().enumerate() {
                for &x in &level {
                    let y = elements[x].then(g);
                    if index.contains_key(&y) {
                        continue;
                    }
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    let i = elements.len();
                    index.insert(y.clone(), i);
                    elements.push(y);
                    origin.push(Origin::Product { prefix: x, generator: pos });
                    next.push(i);
                }
            }
            level = next;
        }

        let n = elements.len();
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let p = elements[a].then(&elements[b]);
                mul[a * n + b] = index[&p] as u32;
            }
        }

        let mut s = FiniteSemigroup { degree, elements, index, mul, gens: gen_idx, origin, zero: None };
        s.zero = s.find_zero();
        Ok(s)
    }

    fn find_zero(&self) -> Option<usize> {
        let n = self.len();
        let is_zero = |z: usize| (0..n).all(|x| self.mul(z, x) == z && self.mul(x, z) == z);
        if let Some(&z) = self.index.get(&PartialMap::empty(self.degree)) {
            return Some(z);
        }
        (0..n).find(|&z| is_zero(z))
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &[PartialMap] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &PartialMap {
        &self.elements[i]
    }

    pub fn index_of(&self, m: &PartialMap) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Element indices of the generators, in generator-list order.
    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    pub fn origin(&self, i: usize) -> Origin {
        self.origin[i]
    }

    /// A shortest word (generator positions) evaluating to element `i`.
    pub fn word(&self, mut i: usize) -> Vec<usize> {
        let mut w = Vec::new();
        loop {
            match self.origin[i] {
                Origin::Generator(pos) => {
                    w.push(pos);
                    break;
                }
                Origin::Product { prefix, generator } => {
                    w.push(generator);
                    i = prefix;
                }
            }
        }
        w.reverse();
        w
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.len() + b] as usize
    }

    /// Product of a non-empty sequence of elements.
    pub fn product(&self, xs: &[usize]) -> Option<usize> {
        let (&first, rest) = xs.split_first()?;
        Some(rest.iter().fold(first, |acc, &x| self.mul(acc, x)))
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x) == x
    }

    /// All `x` with `x x = x`, in element order.
    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.is_idempotent(x)).collect()
    }

    fn require_idempotent(&self, e: usize) -> Result<()> {
        if e < self.len() && self.is_idempotent(e) {
            Ok(())
        } else {
            Err(Error::NotIdempotent(e))
        }
    }

    /// The quasi-orders between two idempotents: `e ω^r f ⇔ fe = e`,
    /// `e ω^l f ⇔ ef = e`, and the natural order `ω` is their intersection.
    pub fn quasi_orders(&self, e: usize, f: usize) -> Result<QuasiOrder> {
        self.require_idempotent(e)?;
        self.require_idempotent(f)?;
        let omega_r = self.mul(f, e) == e;
        let omega_l = self.mul(e, f) == e;
        Ok(QuasiOrder { omega_r, omega_l, omega: omega_r && omega_l })
    }

    pub fn is_regular_element(&self, x: usize) -> bool {
        (0..self.len()).any(|s| self.mul(self.mul(x, s), x) == x)
    }

    pub fn regularity(&self) -> Regularity {
        let per_element: Vec<bool> = (0..self.len()).map(|x| self.is_regular_element(x)).collect();
        let regular = per_element.iter().all(|&r| r);
        Regularity { per_element, regular }
    }

    /// The group of units of `eSe`, as sorted element indices.
    pub fn maximal_subgroup(&self, e: usize) -> Result<Vec<usize>> {
        self.require_idempotent(e)?;
        let mut local: Vec<usize> = (0..self.len()).map(|s| self.mul(self.mul(e, s), e)).collect();
        local.sort_unstable();
        local.dedup();
        Ok(local
            .iter()
            .copied()
            .filter(|&x| local.iter().any(|&y| self.mul(x, y) == e && self.mul(y, x) == e))
            .collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QuasiOrder {
    pub omega_r: bool,
    pub omega_l: bool,
    pub omega: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Regularity {
    pub per_element: Vec<bool>,
    pub regular: bool,
}
