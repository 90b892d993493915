//! A 73-element regular semigroup of partial maps on 8 points whose
//! biordered set has a nonzero D-class with Graham-Houghton complex a torus,
//! so the corresponding maximal subgroup of the free idempotent generated
//! semigroup is `Z × Z`.
//!
//! [`reproduce`] runs the whole pipeline and reports every checked fact;
//! [`verify_affine_model`] checks the description of the two total
//! generators as affine maps of `F₂³`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;
use serde_json::{json, Value};

use crate::biorder::{Biorder, ClassLabels, SquareMode};
use crate::complex::{gh_complex_labeled, nambooripad_complex_labeled, SurfaceClass};
use crate::error::{Error, Result};
use crate::green::GreenData;
use crate::partial_map::{NamedMap, PartialMap};
use crate::presentation::{presentation_at, tietze_simplify};
use crate::rees::{equivalent_up_to_permutation, incidence_of_dclass, IncidenceSystem};
use crate::semigroup::{FiniteSemigroup, DEFAULT_CAP};
use crate::snf::{abelianize, AbelianInvariants};

/// Images of `L1..L8` under `e` (1-based).
pub const E_TABLE: [usize; 8] = [1, 6, 3, 7, 3, 6, 7, 1];
/// Images of `L1..L8` under `k` (1-based).
pub const K_TABLE: [usize; 8] = [4, 2, 2, 4, 5, 5, 8, 8];

/// Rows `R1..R8`, columns `L1..L8`.
pub const GRID: [&str; 8] = [
    "11110000", "11000101", "00111010", "10101001", "01100011", "01010110", "10011100", "00001111",
];

/// Coordinates of `L1..L8` in `F₂³`.
pub const COORDINATES: [[u8; 3]; 8] =
    [[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 1, 1], [1, 0, 1], [1, 1, 1], [0, 0, 1]];

pub const MATRIX_A: [[u8; 3]; 3] = [[1, 0, 1], [0, 1, 0], [0, 0, 0]];
pub const MATRIX_B: [[u8; 3]; 3] = [[0, 1, 0], [0, 1, 0], [1, 1, 1]];
pub const VECTOR_W: [u8; 3] = [1, 1, 0];

/// `tR_i` for `i = 1..8` (1-based), the left action on row labels.
pub const E_LEFT_ACTION: [usize; 8] = [4, 2, 3, 4, 3, 6, 2, 6];
pub const K_LEFT_ACTION: [usize; 8] = [1, 5, 7, 8, 5, 1, 7, 8];

/// `R_i e⁻¹` for `i = 1..8` (1-based).
pub const E_INVERSE_IMAGES: [usize; 8] = [4, 2, 3, 4, 3, 6, 2, 6];

/// Blocks that are linear planes, and `(translate, plane)` pairs with
/// `translate = plane + (1,1,1)`.
pub const PLANE_BLOCKS: [usize; 4] = [1, 2, 4, 7];
pub const TRANSLATES: [(usize, usize); 4] = [(3, 2), (5, 7), (6, 4), (8, 1)];

pub fn incidence() -> IncidenceSystem {
    IncidenceSystem::from_grid(GRID.iter().map(|r| r.bytes().map(|b| b == b'1').collect()).collect())
}

/// `e`, `k`, then `f_(Ri,Lj)` in row-major order: the partial constant map
/// with domain block `Ri` and value `Lj`.
pub fn generators() -> Vec<NamedMap> {
    let total = |t: &[usize; 8]| PartialMap::total(&t.map(|x| x - 1));
    let d = incidence();
    let mut out = vec![
        NamedMap { name: "e".into(), map: total(&E_TABLE) },
        NamedMap { name: "k".into(), map: total(&K_TABLE) },
    ];
    for i in 0..8 {
        for j in 0..8 {
            out.push(NamedMap {
                name: format!("f_R{}_L{}", i + 1, j + 1),
                map: PartialMap::constant(8, d.block(i), j),
            });
        }
    }
    out
}

pub fn generator_maps() -> Vec<PartialMap> {
    generators().into_iter().map(|m| m.map).collect()
}

pub fn semigroup() -> Result<FiniteSemigroup> {
    FiniteSemigroup::generate(&generator_maps(), DEFAULT_CAP)
}

/// `v ↦ vA + w` over the two-element field, with row vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AffineMapF2 {
    pub a: [[u8; 3]; 3],
    pub w: [u8; 3],
}

impl AffineMapF2 {
    pub fn new(a: [[u8; 3]; 3], w: [u8; 3]) -> Self {
        AffineMapF2 { a, w }
    }

    pub fn linear(a: [[u8; 3]; 3]) -> Self {
        AffineMapF2 { a, w: [0; 3] }
    }

    pub fn apply(&self, v: [u8; 3]) -> [u8; 3] {
        let mut out = self.w;
        for (j, o) in out.iter_mut().enumerate() {
            for (i, &vi) in v.iter().enumerate() {
                *o ^= vi & self.a[i][j];
            }
        }
        out
    }

    /// `(A,w)(A',w') = (AA', wA' + w')`: first `self`, then `other`.
    pub fn compose(&self, other: &AffineMapF2) -> AffineMapF2 {
        let mut a = [[0u8; 3]; 3];
        for (i, row) in a.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                for k in 0..3 {
                    *x ^= self.a[i][k] & other.a[k][j];
                }
            }
        }
        AffineMapF2 { a, w: other.apply(self.w) }
    }

    /// The induced map on `L1..L8` (0-based), if every image is a labelled point.
    pub fn on_points(&self) -> Vec<usize> {
        COORDINATES.iter().map(|&v| point_of(self.apply(v))).collect()
    }
}

fn point_of(v: [u8; 3]) -> usize {
    COORDINATES.iter().position(|&c| c == v).expect("all 8 vectors are labelled")
}

fn add(u: [u8; 3], v: [u8; 3]) -> [u8; 3] {
    [u[0] ^ v[0], u[1] ^ v[1], u[2] ^ v[2]]
}

/// One checked fact.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportItem {
    pub id: String,
    pub description: String,
    pub expected: Value,
    pub actual: Value,
    /// Informational items are reported but never fail.
    pub asserted: bool,
    pub pass: bool,
}

impl ReportItem {
    fn check(id: &str, description: &str, expected: Value, actual: Value) -> Self {
        let pass = expected == actual;
        ReportItem { id: id.into(), description: description.into(), expected, actual, asserted: true, pass }
    }

    fn info(id: &str, description: &str, actual: Value) -> Self {
        ReportItem {
            id: id.into(),
            description: description.into(),
            expected: Value::Null,
            actual,
            asserted: false,
            pass: true,
        }
    }

    pub fn status(&self) -> &'static str {
        match (self.asserted, self.pass) {
            (false, _) => "INFO",
            (true, true) => "PASS",
            (true, false) => "FAIL",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub items: Vec<ReportItem>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn item(&self, id: &str) -> Option<&ReportItem> {
        self.items.iter().find(|i| i.id == id)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.items.iter().filter(|i| !i.pass).map(|i| i.id.as_str()).collect()
    }

    /// `Err(VerificationMismatch)` naming the failed items, if any.
    pub fn check(&self) -> Result<()> {
        let failed = self.failures();
        if failed.is_empty() {
            Ok(())
        } else {
            Err(Error::VerificationMismatch(failed.join(", ")))
        }
    }

    /// One `STATUS id: description` line per item.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for i in &self.items {
            out.push_str(&format!("{} {}: {}\n", i.status(), i.id, i.description));
            if i.asserted && !i.pass {
                out.push_str(&format!("    expected {}\n    actual   {}\n", i.expected, i.actual));
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({ "passed": self.passed(), "items": self.items })
    }
}

/// The four groups of checks on the affine description of `e`, `k` and the blocks.
pub fn verify_affine_model() -> Report {
    let mut items = Vec::new();
    let labels = |v: &[usize]| -> Vec<String> { v.iter().map(|x| format!("L{}", x + 1)).collect() };

    let ea = AffineMapF2::linear(MATRIX_A).on_points();
    let e_table: Vec<usize> = E_TABLE.iter().map(|x| x - 1).collect();
    items.push(ReportItem::check(
        "affine.e_action",
        "e acts on coordinates as v -> vA",
        json!(labels(&e_table)),
        json!(labels(&ea)),
    ));

    let kb = AffineMapF2::new(MATRIX_B, VECTOR_W).on_points();
    let k_table: Vec<usize> = K_TABLE.iter().map(|x| x - 1).collect();
    items.push(ReportItem::check(
        "affine.k_action",
        "k acts on coordinates as v -> vB + (1,1,0)",
        json!(labels(&k_table)),
        json!(labels(&kb)),
    ));

    let d = incidence();
    let coords = |b: usize| -> BTreeSet<[u8; 3]> { d.block(b - 1).iter().map(|&p| COORDINATES[p]).collect() };
    let all: Vec<[u8; 3]> = (0..8u8).map(|x| [x >> 2 & 1, x >> 1 & 1, x & 1]).collect();
    // 2-dimensional subspaces: kernels of the 7 nonzero functionals
    let planes_avoiding: BTreeSet<BTreeSet<[u8; 3]>> = all[1..]
        .iter()
        .filter(|phi| (phi[0] ^ phi[1] ^ phi[2]) == 1)
        .map(|phi| all.iter().copied().filter(|v| (v[0] & phi[0]) ^ (v[1] & phi[1]) ^ (v[2] & phi[2]) == 0).collect())
        .collect();
    let given_planes: BTreeSet<BTreeSet<[u8; 3]>> = PLANE_BLOCKS.iter().map(|&b| coords(b)).collect();
    let translates_ok = TRANSLATES
        .iter()
        .all(|&(t, p)| coords(t) == coords(p).iter().map(|&v| add(v, [1, 1, 1])).collect::<BTreeSet<_>>());
    items.push(ReportItem::check(
        "affine.blocks",
        "R1,R2,R4,R7 are the planes through 0 avoiding (1,1,1); R3,R5,R6,R8 are their (1,1,1)-translates",
        json!({"planes": true, "translates": true}),
        json!({"planes": given_planes == planes_avoiding && given_planes.len() == 4, "translates": translates_ok}),
    ));

    let e = PartialMap::total(&e_table);
    let inverse_images: Vec<String> = (0..8)
        .map(|i| {
            let pre = e.preimage(&d.block(i));
            match (0..8).find(|&b| d.block(b) == pre) {
                Some(b) => format!("R{}", b + 1),
                None => format!("{:?}", pre.iter().map(|p| p + 1).collect::<Vec<_>>()),
            }
        })
        .collect();
    let expected: Vec<String> = E_INVERSE_IMAGES.iter().map(|b| format!("R{b}")).collect();
    items.push(ReportItem::check(
        "affine.e_inverse_images",
        "block inverse images under e",
        json!(expected),
        json!(inverse_images),
    ));
    Report { items }
}

/// Names for the elements of the 73-element semigroup: `(Ri,Lj)` for the
/// nonzero D-class, `0`, and `e`/`k` words for the rest.
#[derive(Debug, Clone)]
pub struct PaperLabels {
    /// `cell[i][j]` is the element `(R{i+1}, L{j+1})`.
    pub cell: Vec<Vec<usize>>,
    pub zero: usize,
    pub e: usize,
    pub k: usize,
    pub f: usize,
    pub h: usize,
    names: Vec<String>,
}

impl PaperLabels {
    pub fn new(s: &FiniteSemigroup) -> Self {
        let gens = s.gens();
        let cell: Vec<Vec<usize>> = (0..8).map(|i| (0..8).map(|j| gens[2 + 8 * i + j]).collect()).collect();
        let (e, k) = (gens[0], gens[1]);
        let f = s.product(&[k, e, k, e]).unwrap();
        let h = s.product(&[e, k, e, k]).unwrap();
        let zero = s.zero().expect("the empty map is a product of two constants");
        let mut names: Vec<String> = (0..s.len())
            .map(|x| s.word(x).iter().map(|&g| if g == 0 { "e" } else { "k" }).collect())
            .collect();
        for (i, row) in cell.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                names[x] = format!("(R{},L{})", i + 1, j + 1);
            }
        }
        names[zero] = "0".into();
        names[f] = "f".into();
        names[h] = "h".into();
        PaperLabels { cell, zero, e, k, f, h, names }
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    /// `R1..R8`/`L1..L8` on the nonzero D-class, `R(t)`/`L(t)` for classes
    /// of the idempotents `t` of `⟨e, k⟩`, and `R0`/`L0` for the zero.
    pub fn class_labels(&self, g: &GreenData) -> ClassLabels {
        let nr = g.r_class.iter().max().map_or(0, |m| m + 1);
        let nl = g.l_class.iter().max().map_or(0, |m| m + 1);
        let mut r = vec![None; nr];
        let mut l = vec![None; nl];
        for i in 0..8 {
            r[g.r_class[self.cell[i][0]]] = Some(format!("R{}", i + 1));
            l[g.l_class[self.cell[0][i]]] = Some(format!("L{}", i + 1));
        }
        for (t, name) in [(self.e, "e"), (self.f, "f"), (self.k, "k"), (self.h, "h")] {
            r[g.r_class[t]].get_or_insert_with(|| format!("R({name})"));
            l[g.l_class[t]].get_or_insert_with(|| format!("L({name})"));
        }
        r[g.r_class[self.zero]] = Some("R0".into());
        l[g.l_class[self.zero]] = Some("L0".into());
        ClassLabels { r, l }
    }

    /// `(i, j)` with `x = (R{i+1}, L{j+1})`.
    pub fn cell_of(&self, x: usize) -> Option<(usize, usize)> {
        (0..8).flat_map(|i| (0..8).map(move |j| (i, j))).find(|&(i, j)| self.cell[i][j] == x)
    }
}

fn names(labels: &PaperLabels, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| labels.name(x).to_string()).collect()
}

fn ab_json(a: &AbelianInvariants) -> Value {
    serde_json::to_value(a).unwrap()
}

/// Runs the full pipeline on the 73-element semigroup.
pub fn reproduce() -> Result<Report> {
    let gens = generator_maps();
    let start = std::time::Instant::now();
    let s = FiniteSemigroup::generate(&gens, DEFAULT_CAP)?;
    let green = GreenData::compute(&s);
    let elapsed = start.elapsed();
    let b = Biorder::with_green(&s, green)?;
    let g = b.green();
    let lab = PaperLabels::new(&s);
    let classes = lab.class_labels(g);
    let c = |i: usize, j: usize| lab.cell[i - 1][j - 1];
    let mut items = verify_affine_model().items;

    // sizes and global structure
    items.push(ReportItem::check(
        "order",
        "order, idempotent count, J-classes and regularity of S",
        json!({"elements": 73, "idempotents": 37, "j_classes": 3, "regular": true}),
        json!({
            "elements": s.len(),
            "idempotents": b.idempotents().len(),
            "j_classes": g.j_classes().len(),
            "regular": s.regularity().regular,
        }),
    ));
    items.push(ReportItem::info(
        "closure_time",
        "closure plus Green computation wall time",
        json!({"millis": elapsed.as_millis() as u64}),
    ));
    items.push(ReportItem::check("d_equals_j", "D and J coincide", json!(true), json!(g.d_equals_j())));

    // the subsemigroup T = <e, k>
    let t_sub = FiniteSemigroup::generate(&gens[..2], DEFAULT_CAP)?;
    let t_elems: BTreeSet<usize> =
        t_sub.elements().iter().map(|m| s.index_of(m).expect("T is inside S")).collect();
    let mut t_idem: Vec<usize> = t_elems.iter().copied().filter(|&x| s.is_idempotent(x)).collect();
    t_idem.sort_by_key(|&x| [lab.e, lab.f, lab.k, lab.h].iter().position(|&y| y == x));
    let eke = s.product(&[lab.e, lab.k, lab.e]).unwrap();
    let max_sub = s.maximal_subgroup(lab.e)?;
    items.push(ReportItem::check(
        "t_subsemigroup",
        "<e,k> has 8 elements, idempotents e, f=(ke)^2, k, h=(ek)^2, and maximal subgroup {e, eke} at e",
        json!({"elements": 8, "idempotents": ["e", "f", "k", "h"], "maximal_subgroup_at_e": ["e", "eke"], "eke_squared_is_e": true}),
        json!({
            "elements": t_sub.len(),
            "idempotents": names(&lab, &t_idem),
            "maximal_subgroup_at_e": max_sub.iter().map(|&x| if x == eke { "eke".to_string() } else { lab.name(x).to_string() }).collect::<Vec<_>>(),
            "eke_squared_is_e": s.mul(eke, eke) == lab.e,
        }),
    ));
    let rank4 = t_elems.iter().all(|&x| s.element(x).rank() == 4);
    items.push(ReportItem::check("t_rank", "every element of <e,k> has rank 4", json!(true), json!(rank4)));

    // S = T ⊎ S(Γ) with S(Γ) an ideal
    let gamma: BTreeSet<usize> = lab.cell.iter().flatten().copied().chain([lab.zero]).collect();
    let ideal = (0..s.len()).all(|x| gamma.iter().all(|&y| gamma.contains(&s.mul(x, y)) && gamma.contains(&s.mul(y, x))));
    let disjoint_cover = t_elems.is_disjoint(&gamma) && t_elems.len() + gamma.len() == s.len();
    let zero_minimal = {
        let d_gamma = g.d_class[c(1, 1)];
        // every nonzero ideal contains the nonzero D-class of Γ
        (0..s.len()).filter(|&x| x != lab.zero).all(|x| {
            let principal: BTreeSet<usize> =
                (0..s.len()).flat_map(|u| (0..s.len()).map(move |v| (u, v))).map(|(u, v)| s.mul(s.mul(u, x), v)).collect();
            principal.iter().any(|&y| g.d_class[y] == d_gamma)
        })
    };
    items.push(ReportItem::check(
        "ideal_structure",
        "S is the disjoint union of <e,k> and the 65-element ideal S(Γ), its unique 0-minimal ideal",
        json!({"gamma_size": 65, "ideal": true, "disjoint_cover": true, "unique_zero_minimal": true}),
        json!({"gamma_size": gamma.len(), "ideal": ideal, "disjoint_cover": disjoint_cover, "unique_zero_minimal": zero_minimal}),
    ));

    // actions of e and k on S(Γ)
    let left = |t: usize| -> Vec<String> {
        (0..8)
            .map(|i| {
                let y = s.mul(t, lab.cell[i][0]);
                match lab.cell_of(y) {
                    Some((r, 0)) => format!("R{}", r + 1),
                    _ => lab.name(y).to_string(),
                }
            })
            .collect()
    };
    let rl = |v: &[usize; 8]| -> Vec<String> { v.iter().map(|x| format!("R{x}")).collect() };
    items.push(ReportItem::check(
        "left_actions",
        "left actions of e and k on the rows R1..R8",
        json!({"e": rl(&E_LEFT_ACTION), "k": rl(&K_LEFT_ACTION)}),
        json!({"e": left(lab.e), "k": left(lab.k)}),
    ));
    let left_law = [lab.e, lab.k].iter().all(|&t| {
        (0..8).all(|i| {
            let target = s.mul(t, lab.cell[i][0]);
            let (r, _) = lab.cell_of(target).expect("left action stays in S(Γ)");
            (0..8).all(|j| s.mul(t, lab.cell[i][j]) == lab.cell[r][j])
        })
    });
    let right_law = [(lab.e, &E_TABLE), (lab.k, &K_TABLE)]
        .iter()
        .all(|&(t, table)| (0..8).all(|i| (0..8).all(|j| s.mul(lab.cell[i][j], t) == lab.cell[i][table[j] - 1])));
    items.push(ReportItem::check(
        "action_laws",
        "(Ri,Lj)t = (Ri,Ljt) and t(Ri,Lj) = (tRi,Lj) for t in {e,k}",
        json!({"right": true, "left": true}),
        json!({"right": right_law, "left": left_law}),
    ));

    // biorder facts
    let qo = |x: usize, y: usize| -> Result<Value> {
        let q = s.quasi_orders(x, y)?;
        Ok(json!({"omega_r": q.omega_r, "omega_l": q.omega_l, "omega": q.omega}))
    };
    items.push(ReportItem::check(
        "quasi_orders",
        "(R1,L1) is below f; (R2,L1) is L-below f but not below f",
        json!({"r1l1_f": {"omega": true}, "r2l1_f": {"omega_l": true, "omega": false}}),
        json!({
            "r1l1_f": {"omega": qo(c(1, 1), lab.f)?["omega"]},
            "r2l1_f": {"omega_l": qo(c(2, 1), lab.f)?["omega_l"], "omega": qo(c(2, 1), lab.f)?["omega"]},
        }),
    ));
    let basic = |x: usize, y: usize| -> Result<String> {
        Ok(b.basic(x, y)?.map_or("undefined".to_string(), |z| lab.name(z).to_string()))
    };
    items.push(ReportItem::check(
        "basic_products",
        "f(R2,L1) = (R7,L1) and k(R2,L2) = (R5,L2)",
        json!(["(R7,L1)", "(R5,L2)"]),
        json!([basic(lab.f, c(2, 1))?, basic(lab.k, c(2, 2))?]),
    ));

    let t_list = [lab.e, lab.f, lab.k, lab.h];
    let gamma_idem: Vec<usize> =
        b.idempotents().iter().copied().filter(|&x| x != lab.zero && gamma.contains(&x)).collect();
    let below: Vec<Vec<usize>> = t_list
        .iter()
        .map(|&t| gamma_idem.iter().copied().filter(|&x| b.omega(x, t).unwrap()).collect())
        .collect();
    let each_eight = below.iter().all(|v| v.len() == 8);
    let exactly_one = gamma_idem.iter().all(|&x| t_list.iter().filter(|&&t| b.omega(x, t).unwrap()).count() == 1);
    let cycles = below.iter().all(|v| is_alternating_cycle(&b, v));
    items.push(ReportItem::check(
        "order_census",
        "each idempotent of <e,k> is above 8 idempotents of S(Γ) forming an E-cycle; each nonzero idempotent of S(Γ) is below exactly one",
        json!({"above_eight": true, "below_exactly_one": true, "e_cycles": true}),
        json!({"above_eight": each_eight, "below_exactly_one": exactly_one, "e_cycles": cycles}),
    ));

    // Rees structure of the nonzero D-class
    let dclass = incidence_of_dclass(&s, g, c(1, 1))?;
    let sums_ok = dclass.row_sums().iter().chain(dclass.col_sums().iter()).all(|&x| x == 4);
    let grid = incidence();
    let distinct = |rows: &[Vec<bool>]| rows.iter().collect::<BTreeSet<_>>().len() == rows.len();
    items.push(ReportItem::check(
        "incidence",
        "incidence of the D-class of (R1,L1) matches the 8x8 grid up to permutation; all line sums 4; no repeated lines",
        json!({"rows": 8, "cols": 8, "equivalent": true, "sums_four": true, "distinct_lines": true}),
        json!({
            "rows": dclass.num_blocks(),
            "cols": dclass.num_points(),
            "equivalent": equivalent_up_to_permutation(&dclass, &grid),
            "sums_four": sums_ok,
            "distinct_lines": distinct(&grid.incidence) && distinct(&grid.transpose().incidence),
        }),
    ));

    // E-squares
    let squares = b.enumerate_squares(Some(c(1, 1)));
    let singular: Vec<_> = squares.iter().filter(|sq| b.is_singular(sq)).copied().collect();
    items.push(ReportItem::check(
        "squares",
        "non-degenerate and singular E-squares of the nonzero D-class",
        json!({"squares": 24, "singular": 16}),
        json!({"squares": squares.len(), "singular": singular.len()}),
    ));
    let face = b.square([c(1, 1), c(1, 3), c(4, 3), c(4, 1)])?;
    let witnesses: Vec<(String, SquareMode)> =
        b.singularizers(&face)?.iter().map(|w| (lab.name(w.t).to_string(), w.mode)).collect();
    let has = |t: &str, m: SquareMode| witnesses.iter().any(|(n, mm)| n == t && *mm == m);
    items.push(ReportItem::check(
        "square_witnesses",
        "square (R1,L1),(R1,L3),(R4,L3),(R4,L1) is singularized top-to-bottom by e and bottom-to-top by f",
        json!({"e_TB": true, "f_BT": true}),
        json!({"e_TB": has("e", SquareMode::TopBottom), "f_BT": has("f", SquareMode::BottomTop)}),
    ));
    items.push(ReportItem::info(
        "square_witness_list",
        "all singularizers of that square",
        json!(witnesses.iter().map(|(n, m)| format!("{n} {m}")).collect::<Vec<_>>()),
    ));
    let wrap = b.square([c(1, 3), c(1, 4), c(3, 4), c(3, 3)])?;
    items.push(ReportItem::check(
        "face_vs_wrap",
        "the 4-cycle R1,L3,R4,L1 is singular; the 4-cycle R1,L3,R3,L4 is not",
        json!({"face": true, "wrap": false}),
        json!({"face": b.is_singular(&face), "wrap": b.is_singular(&wrap)}),
    ));
    let cycle_collapse = singular.iter().all(|sq| s.product(&sq.cycle()).unwrap() == sq.corners[0]);
    items.push(ReportItem::check(
        "singular_cycles",
        "efghe = e on every singular square",
        json!(true),
        json!(cycle_collapse),
    ));
    let t_squares = b.enumerate_squares(Some(lab.e));
    items.push(ReportItem::info(
        "t_square",
        "E-squares of <e,k> and whether they are singular",
        json!(t_squares
            .iter()
            .map(|sq| json!({"corners": names(&lab, &sq.corners), "singular": b.is_singular(sq)}))
            .collect::<Vec<_>>()),
    ));

    // Graham-Houghton complex
    let gh = gh_complex_labeled(&b, &classes);
    let comps = gh.complex.components();
    items.push(ReportItem::check(
        "gh_components",
        "GH(E) has one component per D-class of idempotents",
        json!(3),
        json!(comps.len()),
    ));
    let base = gh.l_vertex(c(1, 1))?;
    let comp = gh.complex.component_of(base)?;
    let surface = gh.complex.surface_classify(base)?;
    items.push(ReportItem::check(
        "gh_gamma",
        "GH component of L1: counts, Euler characteristic and surface type",
        json!({"vertices": 16, "edges": 32, "faces": 16, "euler": 0, "surface": SurfaceClass::Orientable { genus: 1 }}),
        json!({"vertices": comp.vertices, "edges": comp.edges, "faces": comp.faces, "euler": comp.euler, "surface": surface}),
    ));
    let cp = presentation_at(&gh.complex, base)?;
    items.push(ReportItem::check(
        "free_rank",
        "rank of the free fundamental group of the 1-skeleton and generator count of the presentation",
        json!({"graph_free_rank": 17, "generators": 17, "relators": 16}),
        json!({
            "graph_free_rank": gh.complex.graph_free_rank(base)?,
            "generators": cp.presentation.num_generators(),
            "relators": cp.presentation.relators.len(),
        }),
    ));
    let gh_ab = abelianize(&cp.presentation);
    let z2 = AbelianInvariants { torsion: vec![], free_rank: 2 };
    let simplified = tietze_simplify(&cp.presentation, 1000);
    let simp_ab = abelianize(&simplified.presentation);

    let k = nambooripad_complex_labeled(&b, &classes);
    let k_comp = k.complex.component_of(k.vertex_of(c(1, 1))?)?;
    let mut k_abs = BTreeMap::new();
    for &x in &gamma_idem {
        let p = presentation_at(&k.complex, k.vertex_of(x)?)?;
        let a = abelianize(&tietze_simplify(&p.presentation, 1000).presentation);
        k_abs.insert(a.to_string(), ());
    }
    let k_abs: Vec<String> = k_abs.into_keys().collect();
    items.push(ReportItem::check(
        "abelianization",
        "abelianized fundamental group of the GH component, and of the K(E) component at every idempotent of the D-class",
        json!({"gh": ab_json(&z2), "gh_after_tietze": ab_json(&z2), "k_all_idempotents": ["Z^2"]}),
        json!({"gh": ab_json(&gh_ab), "gh_after_tietze": ab_json(&simp_ab), "k_all_idempotents": k_abs}),
    ));
    items.push(ReportItem::check(
        "k_gamma",
        "K(E) component of (R1,L1): 32 vertices, 96 edges, 64 triangles and 16 squares",
        json!({"vertices": 32, "edges": 96, "faces": 80}),
        json!({"vertices": k_comp.vertices, "edges": k_comp.edges, "faces": k_comp.faces}),
    ));
    items.push(ReportItem::info(
        "tietze",
        "GH presentation after bounded Tietze simplification",
        json!({
            "generators": simplified.presentation.num_generators(),
            "relators": simplified.presentation.relators.len(),
            "moves": simplified.moves,
            "two_generator_one_relator": simplified.presentation.num_generators() == 2 && simplified.presentation.relators.len() == 1,
            "presentation": simplified.presentation.to_string(),
        }),
    ));
    let sandwich_sizes: BTreeSet<usize> = b
        .idempotents()
        .iter()
        .flat_map(|&x| b.idempotents().iter().map(move |&y| (x, y)))
        .map(|(x, y)| b.sandwich_set(x, y).unwrap().len())
        .collect();
    items.push(ReportItem::check(
        "sandwich_sets",
        "every sandwich set is non-empty",
        json!(true),
        json!(!sandwich_sizes.contains(&0)),
    ));
    items.push(ReportItem::info("sandwich_set_sizes", "distinct sandwich set sizes", json!(sandwich_sizes)));

    Ok(Report { items })
}

/// Whether `v` is a single closed E-path alternating R and L, visiting each
/// vertex once.
fn is_alternating_cycle(b: &Biorder<'_>, v: &[usize]) -> bool {
    if v.len() < 4 {
        return false;
    }
    let mates = |x: usize, rel: &dyn Fn(usize, usize) -> bool| -> Vec<usize> {
        v.iter().copied().filter(|&y| y != x && rel(x, y)).collect()
    };
    let r = |x, y| b.r_related(x, y);
    let l = |x, y| b.l_related(x, y);
    let mut next: HashMap<usize, (usize, usize)> = HashMap::new();
    for &x in v {
        let (rm, lm) = (mates(x, &r), mates(x, &l));
        if rm.len() != 1 || lm.len() != 1 {
            return false;
        }
        next.insert(x, (rm[0], lm[0]));
    }
    // walk R, L, R, L, .. from the first vertex
    let mut seen = 1;
    let mut cur = v[0];
    let mut use_r = true;
    loop {
        let (rm, lm) = next[&cur];
        cur = if use_r { rm } else { lm };
        use_r = !use_r;
        if cur == v[0] {
            break;
        }
        seen += 1;
    }
    seen == v.len()
}
