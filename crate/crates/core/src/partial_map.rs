//! Partial maps on `{1, .., n}` acting on the right.
//!
//! A map is stored as its image array with a reserved marker for points
//! outside the domain. Composition follows the right-action convention:
//! `x (f g) = (x f) g`.
//!
//! Points are 0-based in memory and 1-based in every text format.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const UNDEFINED: u32 = u32::MAX;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<Option<u32>>", try_from = "Vec<Option<u32>>")]
pub struct PartialMap {
    images: Box<[u32]>,
}

impl PartialMap {
    /// Builds a map from 0-based images; `None` marks an undefined point.
    ///
    /// Panics if an image is out of range.
    pub fn new(images: &[Option<usize>]) -> Self {
        let n = images.len();
        let images = images
            .iter()
            .map(|im| match im {
                Some(y) => {
                    assert!(*y < n, "image {y} out of range for degree {n}");
                    *y as u32
                }
                None => UNDEFINED,
            })
            .collect();
        PartialMap { images }
    }

    /// Total map from 0-based images.
    pub fn total(images: &[usize]) -> Self {
        let v: Vec<Option<usize>> = images.iter().map(|&y| Some(y)).collect();
        Self::new(&v)
    }

    pub fn identity(degree: usize) -> Self {
        PartialMap { images: (0..degree as u32).collect() }
    }

    pub fn empty(degree: usize) -> Self {
        PartialMap { images: vec![UNDEFINED; degree].into_boxed_slice() }
    }

    /// The constant map sending every point of `domain` to `value`.
    pub fn constant(degree: usize, domain: impl IntoIterator<Item = usize>, value: usize) -> Self {
        assert!(value < degree);
        let mut images = vec![UNDEFINED; degree];
        for x in domain {
            images[x] = value as u32;
        }
        PartialMap { images: images.into_boxed_slice() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `x`.
    pub fn image(&self, x: usize) -> Option<usize> {
        match self.images[x] {
            UNDEFINED => None,
            y => Some(y as usize),
        }
    }

    pub fn images(&self) -> impl Iterator<Item = Option<usize>> + '_ {
        (0..self.degree()).map(move |x| self.image(x))
    }

    pub fn domain(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&x| self.images[x] != UNDEFINED).collect()
    }

    /// Sorted, deduplicated image set.
    pub fn range(&self) -> Vec<usize> {
        let mut r: Vec<usize> = self.images().flatten().collect();
        r.sort_unstable();
        r.dedup();
        r
    }

    pub fn rank(&self) -> usize {
        self.range().len()
    }

    pub fn is_empty_map(&self) -> bool {
        self.images.iter().all(|&y| y == UNDEFINED)
    }

    pub fn is_total(&self) -> bool {
        self.images.iter().all(|&y| y != UNDEFINED)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &PartialMap) -> Result<PartialMap> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(self.then(other))
    }

    /// Unchecked composition for hot loops; degrees must agree.
    pub(crate) fn then(&self, other: &PartialMap) -> PartialMap {
        debug_assert_eq!(self.degree(), other.degree());
        let images = self
            .images
            .iter()
            .map(|&y| if y == UNDEFINED { UNDEFINED } else { other.images[y as usize] })
            .collect();
        PartialMap { images }
    }

    /// Preimage of a point set.
    pub fn preimage(&self, set: &[usize]) -> Vec<usize> {
        (0..self.degree())
            .filter(|&x| self.image(x).is_some_and(|y| set.contains(&y)))
            .collect()
    }
}

impl fmt::Debug for PartialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Space-separated 1-based images, `.` for undefined.
impl fmt::Display for PartialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, im) in self.images().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match im {
                Some(y) => write!(f, "{}", y + 1)?,
                None => f.write_str(".")?,
            }
        }
        Ok(())
    }
}

impl From<PartialMap> for Vec<Option<u32>> {
    fn from(m: PartialMap) -> Self {
        m.images().map(|im| im.map(|y| y as u32 + 1)).collect()
    }
}

impl TryFrom<Vec<Option<u32>>> for PartialMap {
    type Error = String;

    fn try_from(v: Vec<Option<u32>>) -> std::result::Result<Self, String> {
        let n = v.len();
        let mut images = Vec::with_capacity(n);
        for im in v {
            images.push(match im {
                Some(y) if y >= 1 && (y as usize) <= n => Some(y as usize - 1),
                Some(y) => return Err(format!("image {y} out of range 1..={n}")),
                None => None,
            });
        }
        Ok(PartialMap::new(&images))
    }
}

/// A named map read from a generator file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedMap {
    pub name: String,
    pub map: PartialMap,
}

/// Parses the generator file format:
///
/// ```text
/// degree 3
/// # comment
/// a: 2 . 3
/// ```
pub fn parse_maps(text: &str) -> Result<Vec<NamedMap>> {
    let mut degree: Option<usize> = None;
    let mut maps = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let Some(n) = degree else {
            let mut tokens = line.split_whitespace();
            if tokens.next() != Some("degree") {
                return Err(Error::parse(line_no, "expected `degree N`"));
            }
            let n = tokens
                .next()
                .and_then(|t| t.parse::<usize>().ok())
                .ok_or_else(|| Error::parse(line_no, "missing or invalid degree"))?;
            if tokens.next().is_some() {
                return Err(Error::parse(line_no, "trailing tokens after degree"));
            }
            degree = Some(n);
            continue;
        };
        let (name, body) = line
            .split_once(':')
            .ok_or_else(|| Error::parse(line_no, "expected `name: images`"))?;
        let name = name.trim();
        if name.is_empty() || name.contains(char::is_whitespace) {
            return Err(Error::parse(line_no, format!("invalid map name `{name}`")));
        }
        let mut images = Vec::with_capacity(n);
        for tok in body.split_whitespace() {
            if tok == "." {
                images.push(None);
                continue;
            }
            let y: usize = tok
                .parse()
                .map_err(|_| Error::parse(line_no, format!("invalid token `{tok}`")))?;
            if y == 0 || y > n {
                return Err(Error::parse(line_no, format!("image {y} out of range 1..={n}")));
            }
            images.push(Some(y - 1));
        }
        if images.len() != n {
            return Err(Error::parse(
                line_no,
                format!("map `{name}` has {} images, expected {n}", images.len()),
            ));
        }
        if maps.iter().any(|m: &NamedMap| m.name == name) {
            return Err(Error::parse(line_no, format!("duplicate map name `{name}`")));
        }
        maps.push(NamedMap { name: name.to_string(), map: PartialMap::new(&images) });
    }
    if degree.is_none() {
        return Err(Error::parse(0, "missing `degree N` header"));
    }
    Ok(maps)
}

/// Inverse of [`parse_maps`].
pub fn format_maps(maps: &[NamedMap]) -> String {
    let degree = maps.first().map_or(0, |m| m.map.degree());
    let mut out = format!("degree {degree}\n");
    for m in maps {
        out.push_str(&format!("{}: {}\n", m.name, m.map));
    }
    out
}

pub(crate) fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}
