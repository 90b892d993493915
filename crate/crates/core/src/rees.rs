//! Incidence systems, their bipartite graphs, and combinatorial Rees matrix
//! semigroups.
//!
//! A grid is always stored with rows as blocks and columns as points. In a
//! Rees matrix semigroup built from it, row `b` indexes an R-class and column
//! `p` an L-class, and `(b, p)` is idempotent exactly when `p ∈ b`.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::green::GreenData;
use crate::partial_map::{strip_comment, PartialMap};
use crate::semigroup::FiniteSemigroup;
use crate::util::UnionFind;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncidenceSystem {
    pub points: Vec<String>,
    pub block_labels: Vec<String>,
    /// `incidence[b][p]` is true when point `p` lies in block `b`.
    pub incidence: Vec<Vec<bool>>,
}

impl IncidenceSystem {
    /// Builds a system from a 0/1 grid, labelling rows `R1..` and columns `L1..`.
    pub fn from_grid(grid: Vec<Vec<bool>>) -> Self {
        let cols = grid.first().map_or(0, Vec::len);
        assert!(grid.iter().all(|r| r.len() == cols), "ragged grid");
        IncidenceSystem {
            points: (1..=cols).map(|j| format!("L{j}")).collect(),
            block_labels: (1..=grid.len()).map(|i| format!("R{i}")).collect(),
            incidence: grid,
        }
    }

    pub fn num_blocks(&self) -> usize {
        self.incidence.len()
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    /// Points of block `b`, ascending.
    pub fn block(&self, b: usize) -> Vec<usize> {
        (0..self.num_points()).filter(|&p| self.incidence[b][p]).collect()
    }

    pub fn ones(&self) -> usize {
        self.incidence.iter().flatten().filter(|&&x| x).count()
    }

    pub fn row_sums(&self) -> Vec<usize> {
        self.incidence.iter().map(|r| r.iter().filter(|&&x| x).count()).collect()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        (0..self.num_points()).map(|p| self.incidence.iter().filter(|r| r[p]).count()).collect()
    }

    pub fn transpose(&self) -> IncidenceSystem {
        let t = (0..self.num_points())
            .map(|p| self.incidence.iter().map(|r| r[p]).collect())
            .collect();
        IncidenceSystem { points: self.block_labels.clone(), block_labels: self.points.clone(), incidence: t }
    }

    /// Rejects empty blocks and uncovered points.
    pub fn check_zero_simple(&self) -> Result<()> {
        if self.num_blocks() == 0 || self.num_points() == 0 {
            return Err(Error::NotZeroSimple("no blocks or no points".into()));
        }
        if let Some(b) = self.row_sums().iter().position(|&s| s == 0) {
            return Err(Error::NotZeroSimple(format!("block {} is empty", self.block_labels[b])));
        }
        if let Some(p) = self.col_sums().iter().position(|&s| s == 0) {
            return Err(Error::NotZeroSimple(format!("point {} lies in no block", self.points[p])));
        }
        Ok(())
    }

    /// Row-major lexicographic normal form: sort rows, then columns, then rows
    /// again. Equal forms imply equivalence; the converse needs
    /// [`equivalent_up_to_permutation`].
    pub fn sorted_form(&self) -> Vec<Vec<bool>> {
        let mut rows = self.incidence.clone();
        rows.sort();
        let cols = self.num_points();
        let mut columns: Vec<Vec<bool>> = (0..cols).map(|p| rows.iter().map(|r| r[p]).collect()).collect();
        columns.sort();
        let mut rows: Vec<Vec<bool>> = (0..rows.len()).map(|b| columns.iter().map(|c| c[b]).collect()).collect();
        rows.sort();
        rows
    }

    pub fn to_grid_text(&self) -> String {
        let mut out = format!("rows {} cols {}\n", self.num_blocks(), self.num_points());
        for r in &self.incidence {
            let line: Vec<&str> = r.iter().map(|&x| if x { "1" } else { "0" }).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Parses `rows R cols C` followed by `R` lines of whitespace-separated 0/1 entries.
pub fn parse_incidence(text: &str) -> Result<IncidenceSystem> {
    let mut header: Option<(usize, usize)> = None;
    let mut grid: Vec<Vec<bool>> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let Some((rows, cols)) = header else {
            let t: Vec<&str> = line.split_whitespace().collect();
            match t.as_slice() {
                ["rows", r, "cols", c] => {
                    let r = r.parse().map_err(|_| Error::parse(line_no, "invalid row count"))?;
                    let c = c.parse().map_err(|_| Error::parse(line_no, "invalid column count"))?;
                    header = Some((r, c));
                }
                _ => return Err(Error::parse(line_no, "expected `rows R cols C`")),
            }
            continue;
        };
        if grid.len() == rows {
            return Err(Error::parse(line_no, format!("more than {rows} rows")));
        }
        let row = line
            .split_whitespace()
            .map(|t| match t {
                "0" => Ok(false),
                "1" => Ok(true),
                _ => Err(Error::parse(line_no, format!("entry `{t}` is not 0 or 1"))),
            })
            .collect::<Result<Vec<bool>>>()?;
        if row.len() != cols {
            return Err(Error::parse(line_no, format!("row has {} entries, expected {cols}", row.len())));
        }
        grid.push(row);
    }
    let Some((rows, cols)) = header else {
        return Err(Error::parse(0, "missing `rows R cols C` header"));
    };
    if grid.len() != rows {
        return Err(Error::parse(0, format!("expected {rows} rows, found {}", grid.len())));
    }
    let mut sys = IncidenceSystem::from_grid(grid);
    if rows == 0 {
        sys.points = (1..=cols).map(|j| format!("L{j}")).collect();
    }
    Ok(sys)
}

/// Correspondence between Rees semigroup elements and `(block, point)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReesLabels {
    /// `pair[x]` is `Some((block, point))` for nonzero `x`, `None` for zero.
    pub pair: Vec<Option<(usize, usize)>>,
    pub zero: usize,
    num_points: usize,
}

impl ReesLabels {
    pub fn element(&self, block: usize, point: usize) -> usize {
        block * self.num_points + point
    }
}

/// The combinatorial Rees matrix semigroup of `d`:
/// `(b, p)(b', p') = (b, p')` when `p ∈ b'`, and `0` otherwise.
///
/// It is realized faithfully by partial maps on `points ⊎ blocks`: `(b, p)`
/// sends every point of `b` and the marker of `b` to `p`. The marker keeps
/// duplicate blocks apart. Elements are numbered row-major with the zero last.
pub fn rees_semigroup(d: &IncidenceSystem) -> Result<(FiniteSemigroup, ReesLabels)> {
    d.check_zero_simple()?;
    let (nb, np) = (d.num_blocks(), d.num_points());
    let degree = np + nb;
    let mut gens = Vec::with_capacity(nb * np + 1);
    let mut pair = Vec::with_capacity(nb * np + 1);
    for b in 0..nb {
        let domain: Vec<usize> = d.block(b).into_iter().chain(std::iter::once(np + b)).collect();
        for p in 0..np {
            gens.push(PartialMap::constant(degree, domain.iter().copied(), p));
            pair.push(Some((b, p)));
        }
    }
    gens.push(PartialMap::empty(degree));
    pair.push(None);
    let s = FiniteSemigroup::generate(&gens, gens.len())?;
    debug_assert_eq!(s.len(), gens.len());
    let zero = nb * np;
    Ok((s, ReesLabels { pair, zero, num_points: np }))
}

/// The bipartite graph of an incidence system: blocks and points as
/// vertices, one edge per incidence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipartiteGraph {
    pub block_labels: Vec<String>,
    pub point_labels: Vec<String>,
    /// `(block, point)` pairs in row-major order.
    pub edges: Vec<(usize, usize)>,
    /// Component label per vertex; blocks first, then points.
    pub component: Vec<usize>,
}

impl BipartiteGraph {
    pub fn num_vertices(&self) -> usize {
        self.block_labels.len() + self.point_labels.len()
    }

    pub fn num_components(&self) -> usize {
        self.component.iter().map(|&c| c + 1).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        self.num_components() == 1
    }

    /// Blocks are boxes, points are circles.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph incidence {\n");
        for b in &self.block_labels {
            let _ = writeln!(out, "  \"{b}\" [shape=box];");
        }
        for p in &self.point_labels {
            let _ = writeln!(out, "  \"{p}\" [shape=circle];");
        }
        for &(b, p) in &self.edges {
            let _ = writeln!(out, "  \"{}\" -- \"{}\";", self.block_labels[b], self.point_labels[p]);
        }
        out.push_str("}\n");
        out
    }
}

pub fn bipartite_graph(d: &IncidenceSystem) -> BipartiteGraph {
    let nb = d.num_blocks();
    let mut edges = Vec::new();
    let mut uf = UnionFind::new(nb + d.num_points());
    for b in 0..nb {
        for p in d.block(b) {
            edges.push((b, p));
            uf.union(b, nb + p);
        }
    }
    BipartiteGraph {
        block_labels: d.block_labels.clone(),
        point_labels: d.points.clone(),
        edges,
        component: uf.labels(),
    }
}

/// A regular D-class laid out as a grid of H-classes.
#[derive(Debug, Clone)]
pub struct DClassGrid {
    /// R-class labels (from [`GreenData`]) indexing the rows.
    pub r_classes: Vec<usize>,
    /// L-class labels indexing the columns.
    pub l_classes: Vec<usize>,
    /// `idempotent[i][j]` is the idempotent of H-class `(i, j)`, if any.
    pub idempotent: Vec<Vec<Option<usize>>>,
}

impl DClassGrid {
    pub fn incidence(&self) -> IncidenceSystem {
        IncidenceSystem::from_grid(
            self.idempotent.iter().map(|r| r.iter().map(Option::is_some).collect()).collect(),
        )
    }
}

/// Rows are the R-classes of `D_x`, columns its L-classes, both in order of
/// first element; an entry is set when the H-class holds an idempotent.
pub fn dclass_grid(s: &FiniteSemigroup, green: &GreenData, x: usize) -> Result<DClassGrid> {
    if x >= s.len() || !s.is_regular_element(x) {
        return Err(Error::NotRegularElement(x));
    }
    let d = green.d_class[x];
    let members: Vec<usize> = (0..s.len()).filter(|&y| green.d_class[y] == d).collect();
    let mut r_classes = Vec::new();
    let mut l_classes = Vec::new();
    for &y in &members {
        if !r_classes.contains(&green.r_class[y]) {
            r_classes.push(green.r_class[y]);
        }
        if !l_classes.contains(&green.l_class[y]) {
            l_classes.push(green.l_class[y]);
        }
    }
    let mut idempotent = vec![vec![None; l_classes.len()]; r_classes.len()];
    for &y in &members {
        if s.is_idempotent(y) {
            let i = r_classes.iter().position(|&r| r == green.r_class[y]).unwrap();
            let j = l_classes.iter().position(|&l| l == green.l_class[y]).unwrap();
            idempotent[i][j] = Some(y);
        }
    }
    Ok(DClassGrid { r_classes, l_classes, idempotent })
}

pub fn incidence_of_dclass(s: &FiniteSemigroup, green: &GreenData, x: usize) -> Result<IncidenceSystem> {
    Ok(dclass_grid(s, green, x)?.incidence())
}

/// Whether two 0/1 grids agree after permuting rows and columns.
///
/// Columns of `b` are matched to columns of `a` one at a time; a partial
/// match survives only while the multisets of row prefixes agree.
pub fn equivalent_up_to_permutation(a: &IncidenceSystem, b: &IncidenceSystem) -> bool {
    if a.num_blocks() != b.num_blocks() || a.num_points() != b.num_points() {
        return false;
    }
    if a.sorted_form() == b.sorted_form() {
        return true;
    }
    let mut ra = a.row_sums();
    let mut rb = b.row_sums();
    ra.sort_unstable();
    rb.sort_unstable();
    let mut ca = a.col_sums();
    let mut cb = b.col_sums();
    ca.sort_unstable();
    cb.sort_unstable();
    if ra != rb || ca != cb {
        return false;
    }
    let mut used = vec![false; b.num_points()];
    let mut order = Vec::new();
    match_columns(a, b, &mut order, &mut used)
}

fn match_columns(a: &IncidenceSystem, b: &IncidenceSystem, order: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let k = order.len();
    let prefixes_agree = || {
        let mut pa: Vec<Vec<bool>> = a.incidence.iter().map(|r| r[..k].to_vec()).collect();
        let mut pb: Vec<Vec<bool>> = b.incidence.iter().map(|r| order.iter().map(|&c| r[c]).collect()).collect();
        pa.sort();
        pb.sort();
        pa == pb
    };
    if !prefixes_agree() {
        return false;
    }
    if k == a.num_points() {
        return true;
    }
    let col_a: Vec<bool> = a.incidence.iter().map(|r| r[k]).collect();
    let weight_a = col_a.iter().filter(|&&x| x).count();
    for c in 0..b.num_points() {
        if used[c] || b.incidence.iter().filter(|r| r[c]).count() != weight_a {
            continue;
        }
        used[c] = true;
        order.push(c);
        if match_columns(a, b, order, used) {
            return true;
        }
        order.pop();
        used[c] = false;
    }
    false
}
