//! Smith normal form over the integers and abelian invariants of finitely
//! presented groups.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::presentation::GroupPresentation;

/// Dense integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![vec![BigInt::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i][i] = BigInt::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_i64(cols: usize, rows: &[Vec<i64>]) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix {
            rows: rows.len(),
            cols,
            entries: rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.entries[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.entries[i][j] += &self.entries[i][k] * &other.entries[k][j];
                }
            }
        }
        out
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i][j]
    }
}

/// `P·M·Q = D` with `P`, `Q` unimodular and `D` diagonal, each diagonal
/// entry dividing the next.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub d: IntMatrix,
    pub p: IntMatrix,
    pub q: IntMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|x| !x.is_zero()).count()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.entries.clone();
    let mut p = IntMatrix::identity(rows);
    let mut q = IntMatrix::identity(cols);

    fn swap_rows(a: &mut [Vec<BigInt>], p: &mut IntMatrix, i: usize, j: usize) {
        a.swap(i, j);
        p.entries.swap(i, j);
    }
    fn swap_cols(a: &mut [Vec<BigInt>], q: &mut IntMatrix, i: usize, j: usize) {
        for r in a.iter_mut() {
            r.swap(i, j);
        }
        for r in q.entries.iter_mut() {
            r.swap(i, j);
        }
    }
    // row[dst] -= k * row[src]
    fn row_op(a: &mut [Vec<BigInt>], p: &mut IntMatrix, dst: usize, src: usize, k: &BigInt) {
        for c in 0..a[0].len() {
            let v = &a[src][c] * k;
            a[dst][c] -= v;
        }
        for c in 0..p.cols {
            let v = &p.entries[src][c] * k;
            p.entries[dst][c] -= v;
        }
    }
    // col[dst] -= k * col[src]
    fn col_op(a: &mut [Vec<BigInt>], q: &mut IntMatrix, dst: usize, src: usize, k: &BigInt) {
        for r in a.iter_mut() {
            let v = &r[src] * k;
            r[dst] -= v;
        }
        for r in q.entries.iter_mut() {
            let v = &r[src] * k;
            r[dst] -= v;
        }
    }

    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            swap_rows(&mut a, &mut p, t, bi);
            swap_cols(&mut a, &mut q, t, bj);

            let mut clean = true;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let k = a[i][t].div_floor(&a[t][t]);
                    row_op(&mut a, &mut p, i, t, &k);
                    clean &= a[i][t].is_zero();
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let k = a[t][j].div_floor(&a[t][t]);
                    col_op(&mut a, &mut q, j, t, &k);
                    clean &= a[t][j].is_zero();
                }
            }
            if !clean {
                continue;
            }
            // enforce divisibility of the remaining block by the pivot
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&a[i][j] % &a[t][t]).is_zero());
            match bad {
                Some((i, _)) => row_op(&mut a, &mut p, t, i, &-BigInt::one()),
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut().chain(p.entries[t].iter_mut()) {
                *x = -&*x;
            }
        }
    }

    let diagonal = (0..rows.min(cols)).map(|i| a[i][i].clone()).collect();
    SmithForm { diagonal, d: IntMatrix { rows, cols, entries: a }, p, q }
}

/// Abelianization `Z^free_rank ⊕ Z/t1 ⊕ .. ⊕ Z/tk` with `t1 | t2 | ..`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelianInvariants {
    #[serde(serialize_with = "serialize_torsion")]
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
}

impl AbelianInvariants {
    pub fn is_free_abelian(&self, rank: usize) -> bool {
        self.torsion.is_empty() && self.free_rank == rank
    }
}

impl std::fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

fn serialize_torsion<S: Serializer>(t: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(t.len()))?;
    for x in t {
        match x.to_u64() {
            Some(v) => seq.serialize_element(&v)?,
            None => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

/// Exponent-sum matrix: one row per relator, one column per generator.
pub fn relation_matrix(p: &GroupPresentation) -> IntMatrix {
    let n = p.generators.len();
    let mut m = IntMatrix::zeros(p.relators.len(), n);
    for (i, r) in p.relators.iter().enumerate() {
        for &x in r {
            let g = x.unsigned_abs() as usize - 1;
            m.entries[i][g] += if x > 0 { 1 } else { -1 };
        }
    }
    m
}

pub fn abelianize(p: &GroupPresentation) -> AbelianInvariants {
    let snf = smith_normal_form(&relation_matrix(p));
    let torsion = snf.diagonal.iter().filter(|x| **x > BigInt::one()).cloned().collect();
    AbelianInvariants { torsion, free_rank: p.generators.len() - snf.rank() }
}
