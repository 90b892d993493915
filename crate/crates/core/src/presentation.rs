//! Fundamental-group presentations of 2-complexes and Tietze simplification.
//!
//! Words are sequences of nonzero `i32` letters: `k` is the `k`-th generator
//! (1-based) and `-k` its inverse.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::complex::TwoComplex;
use crate::error::{Error, Result};
use crate::partial_map::strip_comment;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Vec<i32>>,
}

impl GroupPresentation {
    /// Generators named `x1, x2, ..`.
    pub fn new(num_generators: usize, relators: Vec<Vec<i32>>) -> Self {
        GroupPresentation { generators: (1..=num_generators).map(|i| format!("x{i}")).collect(), relators }
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// Total relator length.
    pub fn length(&self) -> usize {
        self.relators.iter().map(Vec::len).sum()
    }

    /// `gens N` followed by one relator per line as signed 1-based indices.
    pub fn to_text(&self) -> String {
        let mut out = format!("gens {}\n", self.generators.len());
        for r in &self.relators {
            let line: Vec<String> = r.iter().map(i32::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Relator `r` written with generator names, e.g. `a b A^-1`.
    pub fn word_string(&self, r: &[i32]) -> String {
        if r.is_empty() {
            return "1".into();
        }
        r.iter()
            .map(|&x| {
                let name = &self.generators[x.unsigned_abs() as usize - 1];
                if x > 0 { name.clone() } else { format!("{name}^-1") }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.word_string(r)).collect();
        write!(f, "< {} | {} >", self.generators.join(", "), rels.join(", "))
    }
}

/// Parses the `gens N` text format. Blank lines are skipped, `#` starts a comment.
pub fn parse_presentation(text: &str) -> Result<GroupPresentation> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, strip_comment(l).trim())).filter(|(_, l)| !l.is_empty());
    let (no, header) = lines.next().ok_or_else(|| Error::parse(1, "missing `gens N` header"))?;
    let n: usize = header
        .strip_prefix("gens")
        .and_then(|rest| rest.trim().parse().ok())
        .ok_or_else(|| Error::parse(no, "expected `gens N`"))?;
    let mut relators = Vec::new();
    for (no, line) in lines {
        let mut r = Vec::new();
        for tok in line.split_whitespace() {
            let x: i32 = tok.parse().map_err(|_| Error::parse(no, format!("bad letter `{tok}`")))?;
            if x == 0 || x.unsigned_abs() as usize > n {
                return Err(Error::parse(no, format!("letter {x} out of range")));
            }
            r.push(x);
        }
        relators.push(r);
    }
    Ok(GroupPresentation::new(n, relators))
}

pub fn free_reduce(w: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(w.len());
    for &x in w {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

/// Free reduction followed by cancellation of inverse letters at the two ends.
pub fn cyclic_reduce(w: &[i32]) -> Vec<i32> {
    let w = free_reduce(w);
    let mut lo = 0;
    let mut hi = w.len();
    while hi - lo >= 2 && w[lo] == -w[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    w[lo..hi].to_vec()
}

pub fn invert(w: &[i32]) -> Vec<i32> {
    w.iter().rev().map(|&x| -x).collect()
}

/// Representative of a relator up to rotation and inversion.
fn relator_key(w: &[i32]) -> Vec<i32> {
    let inv = invert(w);
    let mut best = w.to_vec();
    for word in [w, inv.as_slice()] {
        for k in 0..word.len() {
            let rot: Vec<i32> = word[k..].iter().chain(&word[..k]).copied().collect();
            if rot < best {
                best = rot;
            }
        }
    }
    best
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TreeStrategy {
    #[default]
    Bfs,
    Dfs,
}

/// The presentation of `π₁(X, base)` read off a spanning tree of the
/// component of `base`, before any simplification.
#[derive(Debug, Clone)]
pub struct ComplexPresentation {
    pub presentation: GroupPresentation,
    /// Edge index of each generator.
    pub generator_edges: Vec<usize>,
    pub tree_edges: Vec<usize>,
    /// Face index of each relator.
    pub relator_faces: Vec<usize>,
}

pub fn presentation_at(x: &TwoComplex, base: usize) -> Result<ComplexPresentation> {
    presentation_with(x, base, TreeStrategy::Bfs)
}

/// Generators are the non-tree edges of the component in edge order; each
/// face of the component contributes its boundary word with tree edges
/// deleted, freely and cyclically reduced.
pub fn presentation_with(x: &TwoComplex, base: usize, strategy: TreeStrategy) -> Result<ComplexPresentation> {
    if base >= x.vertices.len() {
        return Err(Error::VertexNotFound(base));
    }
    let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); x.vertices.len()];
    for (i, e) in x.edges.iter().enumerate() {
        incident[e.tail].push((i, e.head));
        incident[e.head].push((i, e.tail));
    }
    let mut reached = vec![false; x.vertices.len()];
    let mut in_tree = vec![false; x.edges.len()];
    reached[base] = true;
    match strategy {
        TreeStrategy::Bfs => {
            let mut queue = VecDeque::from([base]);
            while let Some(v) = queue.pop_front() {
                for &(e, w) in &incident[v] {
                    if !reached[w] {
                        reached[w] = true;
                        in_tree[e] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        TreeStrategy::Dfs => {
            fn visit(v: usize, incident: &[Vec<(usize, usize)>], reached: &mut [bool], in_tree: &mut [bool]) {
                // explicit stack of (vertex, next incident position)
                let mut stack = vec![(v, 0usize)];
                while let Some(&mut (u, ref mut pos)) = stack.last_mut() {
                    if let Some(&(e, w)) = incident[u].get(*pos) {
                        *pos += 1;
                        if !reached[w] {
                            reached[w] = true;
                            in_tree[e] = true;
                            stack.push((w, 0));
                        }
                    } else {
                        stack.pop();
                    }
                }
            }
            visit(base, &incident, &mut reached, &mut in_tree);
        }
    }

    let mut gen_of = vec![0i32; x.edges.len()];
    let mut generator_edges = Vec::new();
    let mut tree_edges = Vec::new();
    for (i, e) in x.edges.iter().enumerate() {
        if !reached[e.tail] {
            continue;
        }
        if in_tree[i] {
            tree_edges.push(i);
        } else {
            generator_edges.push(i);
            gen_of[i] = generator_edges.len() as i32;
        }
    }
    let mut relators = Vec::new();
    let mut relator_faces = Vec::new();
    for (fi, f) in x.faces.iter().enumerate() {
        if !reached[x.start(f.boundary[0])] {
            continue;
        }
        let word: Vec<i32> = f
            .boundary
            .iter()
            .filter(|s| !in_tree[s.edge])
            .map(|s| if s.forward { gen_of[s.edge] } else { -gen_of[s.edge] })
            .collect();
        relators.push(cyclic_reduce(&word));
        relator_faces.push(fi);
    }
    let generators = generator_edges.iter().map(|&e| x.edges[e].label.clone()).collect();
    Ok(ComplexPresentation {
        presentation: GroupPresentation { generators, relators },
        generator_edges,
        tree_edges,
        relator_faces,
    })
}

/// Outcome of [`tietze_simplify`].
#[derive(Debug, Clone)]
pub struct Simplified {
    pub presentation: GroupPresentation,
    /// Number of generator eliminations performed.
    pub moves: usize,
}

/// Removes trivial and duplicate relators and eliminates generators that
/// occur exactly once in some relator, at most `budget` eliminations.
pub fn tietze_simplify(p: &GroupPresentation, budget: usize) -> Simplified {
    let mut gens = p.generators.clone();
    let mut rels: Vec<Vec<i32>> = p.relators.clone();
    let mut moves = 0;
    loop {
        tidy(&mut rels);
        if moves >= budget {
            break;
        }
        // shortest relator containing a letter of total multiplicity one
        let mut pick: Option<(usize, usize)> = None;
        for (ri, r) in rels.iter().enumerate() {
            if pick.is_some_and(|(pr, _)| rels[pr].len() <= r.len()) {
                continue;
            }
            let mut counts = std::collections::BTreeMap::new();
            for &x in r {
                *counts.entry(x.unsigned_abs()).or_insert(0usize) += 1;
            }
            if let Some(pos) = r.iter().position(|x| counts[&x.unsigned_abs()] == 1) {
                pick = Some((ri, pos));
            }
        }
        let Some((ri, pos)) = pick else { break };
        let r = rels.remove(ri);
        let letter = r[pos];
        let g = letter.unsigned_abs() as i32;
        // r rotated to x^ε w, so x = w⁻¹ if ε = +1 and x = w if ε = -1
        let w: Vec<i32> = r[pos + 1..].iter().chain(&r[..pos]).copied().collect();
        let value = if letter > 0 { invert(&w) } else { w };
        let value_inv = invert(&value);
        for rel in rels.iter_mut() {
            let mut out = Vec::with_capacity(rel.len());
            for &y in rel.iter() {
                if y == g {
                    out.extend_from_slice(&value);
                } else if y == -g {
                    out.extend_from_slice(&value_inv);
                } else {
                    out.push(y);
                }
            }
            // renumber generators above g
            for y in out.iter_mut() {
                if y.abs() > g {
                    *y -= y.signum();
                }
            }
            *rel = out;
        }
        gens.remove(g as usize - 1);
        moves += 1;
    }
    Simplified { presentation: GroupPresentation { generators: gens, relators: rels }, moves }
}

fn tidy(rels: &mut Vec<Vec<i32>>) {
    let mut seen = HashSet::new();
    let old = std::mem::take(rels);
    for r in old {
        let r = cyclic_reduce(&r);
        if !r.is_empty() && seen.insert(relator_key(&r)) {
            rels.push(r);
        }
    }
}
