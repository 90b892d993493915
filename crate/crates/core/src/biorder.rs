//! The biordered set of idempotents of a finite semigroup.
//!
//! Everything here is evaluated inside the ambient semigroup: the quasi-orders
//! and basic products are read off its Cayley table rather than checked
//! against abstract axioms.

use std::collections::BTreeSet;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::green::GreenData;
use crate::semigroup::FiniteSemigroup;

#[derive(Debug, Clone)]
pub struct Biorder<'s> {
    semigroup: &'s FiniteSemigroup,
    green: GreenData,
    idempotents: Vec<usize>,
    /// Position of each element in `idempotents`.
    pos: Vec<Option<usize>>,
    /// `omega_r[i]` holds `j` when `E[i] ω^r E[j]`.
    omega_r: Vec<FixedBitSet>,
    omega_l: Vec<FixedBitSet>,
    basic: Vec<Option<usize>>,
    r_mates: Vec<Vec<usize>>,
    l_mates: Vec<Vec<usize>>,
}

impl<'s> Biorder<'s> {
    pub fn extract(s: &'s FiniteSemigroup) -> Result<Self> {
        Self::with_green(s, GreenData::compute(s))
    }

    pub fn with_green(s: &'s FiniteSemigroup, green: GreenData) -> Result<Self> {
        let idempotents = s.idempotents();
        if idempotents.is_empty() {
            return Err(Error::NoIdempotents);
        }
        let m = idempotents.len();
        let mut pos = vec![None; s.len()];
        for (i, &e) in idempotents.iter().enumerate() {
            pos[e] = Some(i);
        }
        let mut omega_r = vec![FixedBitSet::with_capacity(m); m];
        let mut omega_l = vec![FixedBitSet::with_capacity(m); m];
        for (i, &e) in idempotents.iter().enumerate() {
            for (j, &f) in idempotents.iter().enumerate() {
                omega_r[i].set(j, s.mul(f, e) == e);
                omega_l[i].set(j, s.mul(e, f) == e);
            }
        }
        let mut basic = vec![None; m * m];
        for (i, &e) in idempotents.iter().enumerate() {
            for (j, &f) in idempotents.iter().enumerate() {
                let comparable =
                    omega_r[i][j] || omega_l[i][j] || omega_r[j][i] || omega_l[j][i];
                if comparable {
                    basic[i * m + j] = Some(s.mul(e, f));
                }
            }
        }
        let mut r_mates = vec![Vec::new(); m];
        let mut l_mates = vec![Vec::new(); m];
        for i in 0..m {
            for j in 0..m {
                if i == j {
                    continue;
                }
                // e R f ⇔ e ω^r f and f ω^r e
                if omega_r[i][j] && omega_r[j][i] {
                    r_mates[i].push(idempotents[j]);
                }
                if omega_l[i][j] && omega_l[j][i] {
                    l_mates[i].push(idempotents[j]);
                }
            }
        }
        Ok(Biorder { semigroup: s, green, idempotents, pos, omega_r, omega_l, basic, r_mates, l_mates })
    }

    pub fn semigroup(&self) -> &'s FiniteSemigroup {
        self.semigroup
    }

    pub fn green(&self) -> &GreenData {
        &self.green
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.pos.get(x).is_some_and(Option::is_some)
    }

    /// Position of `e` in [`idempotents`](Self::idempotents).
    pub fn position(&self, e: usize) -> Option<usize> {
        self.pos.get(e).copied().flatten()
    }

    fn idx(&self, e: usize) -> Result<usize> {
        self.position(e).ok_or(Error::NotIdempotent(e))
    }

    pub fn omega_r(&self, e: usize, f: usize) -> Result<bool> {
        Ok(self.omega_r[self.idx(e)?][self.idx(f)?])
    }

    pub fn omega_l(&self, e: usize, f: usize) -> Result<bool> {
        Ok(self.omega_l[self.idx(e)?][self.idx(f)?])
    }

    pub fn omega(&self, e: usize, f: usize) -> Result<bool> {
        Ok(self.omega_r(e, f)? && self.omega_l(e, f)?)
    }

    /// `ef` when it is a basic product, `None` otherwise.
    pub fn basic(&self, e: usize, f: usize) -> Result<Option<usize>> {
        let (i, j) = (self.idx(e)?, self.idx(f)?);
        Ok(self.basic[i * self.idempotents.len() + j])
    }

    /// Idempotents other than `e` in the R-class of `e`.
    pub fn r_mates(&self, e: usize) -> &[usize] {
        self.position(e).map_or(&[], |i| &self.r_mates[i])
    }

    pub fn l_mates(&self, e: usize) -> &[usize] {
        self.position(e).map_or(&[], |i| &self.l_mates[i])
    }

    pub fn r_related(&self, e: usize, f: usize) -> bool {
        e == f || self.r_mates(e).contains(&f)
    }

    pub fn l_related(&self, e: usize, f: usize) -> bool {
        e == f || self.l_mates(e).contains(&f)
    }

    /// `S(e, f) = { h ∈ E : ehf = ef, fhe = h }`.
    pub fn sandwich_set(&self, e: usize, f: usize) -> Result<Vec<usize>> {
        self.idx(e)?;
        self.idx(f)?;
        let s = self.semigroup;
        let ef = s.mul(e, f);
        Ok(self
            .idempotents
            .iter()
            .copied()
            .filter(|&h| s.mul(s.mul(e, h), f) == ef && s.mul(s.mul(f, h), e) == h)
            .collect())
    }

    /// Every ordered pair of idempotents has a non-empty sandwich set.
    pub fn is_regular(&self) -> bool {
        self.idempotents.iter().all(|&e| {
            self.idempotents.iter().all(|&f| !self.sandwich_set(e, f).unwrap().is_empty())
        })
    }

    /// All non-degenerate E-squares in canonical orientation, sorted.
    /// With `restrict_to = Some(x)` only squares inside the D-class of `x`.
    pub fn enumerate_squares(&self, restrict_to: Option<usize>) -> Vec<ESquare> {
        let d = restrict_to.map(|x| self.green.d_class[x]);
        let mut out = BTreeSet::new();
        for &e in &self.idempotents {
            if d.is_some_and(|d| self.green.d_class[e] != d) {
                continue;
            }
            for &f in self.r_mates(e) {
                for &g in self.l_mates(f) {
                    if g == e {
                        continue;
                    }
                    for &h in self.r_mates(g) {
                        if h != e && h != f && self.l_related(h, e) {
                            out.insert(ESquare { corners: [e, f, g, h] }.canonical());
                        }
                    }
                }
            }
        }
        out.into_iter().collect()
    }

    /// Checks `e R f L g R h L e` with pairwise distinct corners.
    pub fn square(&self, corners: [usize; 4]) -> Result<ESquare> {
        let [e, f, g, h] = corners;
        if corners.iter().any(|&x| !self.is_idempotent(x)) {
            return Err(Error::NotASquare);
        }
        let distinct = (0..4).all(|i| (i + 1..4).all(|j| corners[i] != corners[j]));
        let shape = self.r_related(e, f) && self.l_related(f, g) && self.r_related(g, h) && self.l_related(h, e);
        if distinct && shape {
            Ok(ESquare { corners })
        } else {
            Err(Error::NotASquare)
        }
    }

    /// Whether `t` singularizes `sq` in the given mode.
    pub fn singularizes(&self, sq: &ESquare, t: usize, mode: SquareMode) -> bool {
        let s = self.semigroup;
        let [e, f, g, h] = sq.corners;
        let fixes_left = |x| s.mul(t, x) == x;
        let fixes_right = |x| s.mul(x, t) == x;
        match mode {
            SquareMode::LeftRight => fixes_left(e) && fixes_left(h) && s.mul(e, t) == f && s.mul(h, t) == g,
            SquareMode::RightLeft => fixes_left(f) && fixes_left(g) && s.mul(f, t) == e && s.mul(g, t) == h,
            SquareMode::TopBottom => fixes_right(e) && fixes_right(f) && s.mul(t, e) == h && s.mul(t, f) == g,
            SquareMode::BottomTop => fixes_right(h) && fixes_right(g) && s.mul(t, h) == e && s.mul(t, g) == f,
        }
    }

    /// Every `(t, mode)` singularizing `sq`, scanning all idempotents.
    pub fn singularizers(&self, sq: &ESquare) -> Result<Vec<SingularizationWitness>> {
        self.square(sq.corners)?;
        let mut out = Vec::new();
        for &t in &self.idempotents {
            for mode in SquareMode::ALL {
                if self.singularizes(sq, t, mode) {
                    out.push(SingularizationWitness { square: *sq, t, mode });
                }
            }
        }
        Ok(out)
    }

    pub fn is_singular(&self, sq: &ESquare) -> bool {
        self.idempotents
            .iter()
            .any(|&t| SquareMode::ALL.iter().any(|&m| self.singularizes(sq, t, m)))
    }

    /// Singular squares among [`enumerate_squares`](Self::enumerate_squares).
    pub fn singular_squares(&self, restrict_to: Option<usize>) -> Vec<ESquare> {
        self.enumerate_squares(restrict_to).into_iter().filter(|sq| self.is_singular(sq)).collect()
    }

    fn check_e_path(&self, path: &[usize]) -> Result<()> {
        if path.is_empty() {
            return Err(Error::NotAnEPath("empty path".into()));
        }
        if let Some(&x) = path.iter().find(|&&x| !self.is_idempotent(x)) {
            return Err(Error::NotAnEPath(format!("element {x} is not idempotent")));
        }
        for w in path.windows(2) {
            if !(self.r_related(w[0], w[1]) || self.l_related(w[0], w[1])) {
                return Err(Error::NotAnEPath(format!("{} and {} are neither R- nor L-related", w[0], w[1])));
            }
        }
        Ok(())
    }

    /// Canonical representative of the E-chain of `path`: inessential
    /// vertices and repeated vertices are deleted until none remain.
    pub fn canonicalize_e_path(&self, path: &[usize]) -> Result<EChain> {
        self.check_e_path(path)?;
        let mut v = path.to_vec();
        loop {
            v.dedup();
            let inessential = (1..v.len().saturating_sub(1)).find(|&i| {
                (self.r_related(v[i - 1], v[i]) && self.r_related(v[i], v[i + 1]))
                    || (self.l_related(v[i - 1], v[i]) && self.l_related(v[i], v[i + 1]))
            });
            match inessential {
                Some(i) => {
                    v.remove(i);
                }
                None => break,
            }
        }
        Ok(EChain { vertices: v })
    }

    /// The product of the vertices of an E-path.
    pub fn chain_element(&self, path: &[usize]) -> Result<usize> {
        self.check_e_path(path)?;
        Ok(self.semigroup.product(path).expect("non-empty path"))
    }
}

/// A non-degenerate E-square `e R f L g R h L e`, drawn as
///
/// ```text
/// e f
/// h g
/// ```
///
/// so rows are R-classes and columns are L-classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ESquare {
    pub corners: [usize; 4],
}

impl ESquare {
    /// The four readings that start with an R-step:
    /// `(e,f,g,h)`, `(f,e,h,g)`, `(g,h,e,f)`, `(h,g,f,e)`.
    pub fn readings(&self) -> [ESquare; 4] {
        let [e, f, g, h] = self.corners;
        [[e, f, g, h], [f, e, h, g], [g, h, e, f], [h, g, f, e]].map(|corners| ESquare { corners })
    }

    /// Lexicographically least reading.
    pub fn canonical(&self) -> ESquare {
        *self.readings().iter().min().unwrap()
    }

    /// The closed E-path `(e, f, g, h, e)`.
    pub fn cycle(&self) -> [usize; 5] {
        let [e, f, g, h] = self.corners;
        [e, f, g, h, e]
    }
}

/// Direction of a singularization, relative to the drawn square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SquareMode {
    /// `te = e, th = h, et = f, ht = g`.
    #[serde(rename = "LR")]
    LeftRight,
    /// `tf = f, tg = g, ft = e, gt = h`.
    #[serde(rename = "RL")]
    RightLeft,
    /// `et = e, ft = f, te = h, tf = g`.
    #[serde(rename = "TB")]
    TopBottom,
    /// `ht = h, gt = g, th = e, tg = f`.
    #[serde(rename = "BT")]
    BottomTop,
}

impl SquareMode {
    pub const ALL: [SquareMode; 4] =
        [SquareMode::LeftRight, SquareMode::RightLeft, SquareMode::TopBottom, SquareMode::BottomTop];
}

impl fmt::Display for SquareMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SquareMode::LeftRight => "LR",
            SquareMode::RightLeft => "RL",
            SquareMode::TopBottom => "TB",
            SquareMode::BottomTop => "BT",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SingularizationWitness {
    pub square: ESquare,
    pub t: usize,
    pub mode: SquareMode,
}

/// Canonical representative of an E-chain.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct EChain {
    pub vertices: Vec<usize>,
}

/// Names for the R- and L-classes that contain idempotents, used when
/// idempotents are reported as `(row, column)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassLabels {
    /// Indexed by R-class label of [`GreenData`].
    pub r: Vec<Option<String>>,
    pub l: Vec<Option<String>>,
}

impl ClassLabels {
    /// `R1, R2, ..` and `L1, L2, ..` in order of first idempotent.
    pub fn numbered(b: &Biorder<'_>) -> Self {
        let g = b.green();
        let nr = g.r_class.iter().max().map_or(0, |m| m + 1);
        let nl = g.l_class.iter().max().map_or(0, |m| m + 1);
        let mut r = vec![None; nr];
        let mut l = vec![None; nl];
        let (mut cr, mut cl) = (0, 0);
        for &e in b.idempotents() {
            if r[g.r_class[e]].is_none() {
                cr += 1;
                r[g.r_class[e]] = Some(format!("R{cr}"));
            }
            if l[g.l_class[e]].is_none() {
                cl += 1;
                l[g.l_class[e]] = Some(format!("L{cl}"));
            }
        }
        ClassLabels { r, l }
    }

    pub fn cell(&self, g: &GreenData, x: usize) -> (String, String) {
        let r = self.r[g.r_class[x]].clone().unwrap_or_else(|| format!("r{}", g.r_class[x]));
        let l = self.l[g.l_class[x]].clone().unwrap_or_else(|| format!("l{}", g.l_class[x]));
        (r, l)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessRecord {
    /// 1-based element index.
    pub t: usize,
    pub mode: SquareMode,
}

#[derive(Debug, Clone, Serialize)]
pub struct SquareRecord {
    pub corners: Vec<(String, String)>,
    /// 1-based element indices of the corners.
    pub elements: Vec<usize>,
    pub singular: bool,
    pub witnesses: Vec<WitnessRecord>,
}

/// Report records for `squares`, with their singularizers.
pub fn square_records(b: &Biorder<'_>, squares: &[ESquare], labels: &ClassLabels) -> Vec<SquareRecord> {
    squares
        .iter()
        .map(|sq| {
            let witnesses: Vec<WitnessRecord> = b
                .singularizers(sq)
                .expect("enumerated squares are valid")
                .into_iter()
                .map(|w| WitnessRecord { t: w.t + 1, mode: w.mode })
                .collect();
            SquareRecord {
                corners: sq.corners.iter().map(|&x| labels.cell(b.green(), x)).collect(),
                elements: sq.corners.iter().map(|&x| x + 1).collect(),
                singular: !witnesses.is_empty(),
                witnesses,
            }
        })
        .collect()
}
