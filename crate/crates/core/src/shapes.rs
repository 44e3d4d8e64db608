//! Partitions, skew shapes and the border strip of a partition.
//!
//! Rows and columns are 1-based. A partition stores only its positive parts;
//! `part(k)` reads zero past the end.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A cell `(row, col)` of a diagram, 1-based.
pub type Cell = (usize, usize);

/// A set of cells in row-major order.
pub type CellSet = BTreeSet<Cell>;

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The staircase `(n-1, n-2, ..., 1)`.
    pub fn staircase(n: usize) -> Self {
        Partition { parts: (1..n).rev().collect() }
    }

    /// The rectangle with `rows` parts equal to `cols`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![cols; rows] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The k-th part, 1-based, zero beyond the length.
    pub fn part(&self, k: usize) -> usize {
        if k == 0 {
            panic!("partition parts are 1-based");
        }
        self.parts.get(k - 1).copied().unwrap_or(0)
    }

    /// Number of positive parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Conjugate partition.
    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        let parts = (1..=first).map(|j| self.parts.iter().filter(|&&p| p >= j).count()).collect();
        Partition { parts }
    }

    pub fn contains(&self, inner: &Partition) -> bool {
        contains(inner, self)
    }

    /// True when the partition fits inside `(n-1)^(m-1)`.
    pub fn fits_ambient(&self, m: usize, n: usize) -> bool {
        m >= 1 && n >= 1 && self.len() < m && self.part(1) < n
    }

    /// The cells of the Young diagram.
    pub fn diagram(&self) -> CellSet {
        self.parts.iter().enumerate().flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j))).collect()
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// True iff `inner_i <= outer_i` for every row.
pub fn contains(inner: &Partition, outer: &Partition) -> bool {
    inner.len() <= outer.len() && inner.parts.iter().zip(&outer.parts).all(|(a, b)| a <= b)
}

fn ensure_contained(inner: &Partition, outer: &Partition) -> Result<()> {
    if contains(inner, outer) {
        Ok(())
    } else {
        Err(Error::NotContained { inner: inner.parts.clone(), outer: outer.parts.clone() })
    }
}

/// All partitions `mu` with `lambda ⊆ mu ⊆ nu`, sorted lexicographically by
/// their part sequences.
pub fn enumerate_between(lambda: &Partition, nu: &Partition) -> Result<Vec<Partition>> {
    ensure_contained(lambda, nu)?;
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(nu.len());
    fill_rows(lambda, nu, 1, usize::MAX, &mut current, &mut out);
    out.sort();
    Ok(out)
}

fn fill_rows(
    lambda: &Partition,
    nu: &Partition,
    row: usize,
    cap: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if row > nu.len() {
        out.push(Partition::new(current.clone()).expect("bounded rows stay decreasing"));
        return;
    }
    let hi = nu.part(row).min(cap);
    for v in lambda.part(row)..=hi {
        current.push(v);
        fill_rows(lambda, nu, row + 1, v, current, out);
        current.pop();
    }
}

/// A skew shape `nu / lambda` placed in an `m x n` ambient box.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    nu: Partition,
    lambda: Partition,
    m: usize,
    n: usize,
}

impl SkewShape {
    /// Requires `lambda ⊆ nu ⊆ (n-1)^(m-1)`.
    pub fn new(nu: Partition, lambda: Partition, m: usize, n: usize) -> Result<Self> {
        ensure_contained(&lambda, &nu)?;
        if !nu.fits_ambient(m, n) {
            return Err(Error::OutOfAmbient { parts: nu.parts.clone(), m, n });
        }
        Ok(SkewShape { nu, lambda, m, n })
    }

    /// The smallest ambient box: `len(nu) + 1` rows and `nu_1 + 1` columns.
    pub fn minimal(nu: Partition, lambda: Partition) -> Result<Self> {
        let m = nu.len() + 1;
        let n = nu.part(1) + 1;
        SkewShape::new(nu, lambda, m, n)
    }

    pub fn nu(&self) -> &Partition {
        &self.nu
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    /// `|nu| - |lambda|`.
    pub fn size(&self) -> usize {
        self.nu.size() - self.lambda.size()
    }

    pub fn contains_cell(&self, (i, j): Cell) -> bool {
        i >= 1 && self.lambda.part(i) < j && j <= self.nu.part(i)
    }
}

/// Cells of `nu / lambda` in row-major order.
pub fn cells(shape: &SkewShape) -> CellSet {
    (1..=shape.nu.len())
        .flat_map(|i| (shape.lambda.part(i) + 1..=shape.nu.part(i)).map(move |j| (i, j)))
        .collect()
}

/// The smallest border strip containing every cell one step south or east of
/// the diagram of `nu`.
///
/// Row 1 holds the single cell `(1, nu_1 + 1)`; row `i` for `2 <= i <= len + 1`
/// spans columns `nu_i + 1 ..= nu_{i-1} + 1`.
pub fn border_strip(nu: &Partition, m: usize, n: usize) -> Result<CellSet> {
    if !nu.fits_ambient(m, n) {
        return Err(Error::OutOfAmbient { parts: nu.parts.clone(), m, n });
    }
    let mut strip = CellSet::new();
    strip.insert((1, nu.part(1) + 1));
    for i in 2..=nu.len() + 1 {
        for j in nu.part(i) + 1..=nu.part(i - 1) + 1 {
            strip.insert((i, j));
        }
    }
    Ok(strip)
}
