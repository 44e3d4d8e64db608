//! Integer and rational matrices, alternating sign matrix validators, the
//! vertex matrices `M^mu`, and northwest corner sums.
//!
//! Indexing is 1-based and row-major with row 1 at the top.

use std::fmt;
use std::ops::{Add, Sub};

use num_traits::Zero;
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_rational, serde_rational::RationalVisitor, Rational};
use crate::shapes::Partition;

/// A dense `m x n` matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix<T> {
    m: usize,
    n: usize,
    entries: Vec<T>,
}

pub type IntMatrix = Matrix<i64>;
pub type RationalMatrix = Matrix<Rational>;

impl<T: Clone> Matrix<T> {
    pub fn filled(m: usize, n: usize, value: T) -> Self {
        Matrix { m, n, entries: vec![value; m * n] }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if m == 0 || n == 0 {
            return Err(Error::MalformedMatrix("matrix must have at least one row and column".into()));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::MalformedMatrix("rows have different lengths".into()));
        }
        Ok(Matrix { m, n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    /// Entry `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!((1..=self.m).contains(&i) && (1..=self.n).contains(&j), "index ({i},{j}) out of range");
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        assert!((1..=self.m).contains(&i) && (1..=self.n).contains(&j), "index ({i},{j}) out of range");
        self.entries[(i - 1) * self.n + (j - 1)] = value;
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[(i - 1) * self.n..i * self.n]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.entries.chunks(self.n).map(<[T]>::to_vec).collect()
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { m: self.m, n: self.n, entries: self.entries.iter().map(f).collect() }
    }

    pub fn same_shape<U>(&self, other: &Matrix<U>) -> bool {
        self.m == other.m && self.n == other.n
    }

    pub(crate) fn ensure_shape(&self, m: usize, n: usize) -> Result<()> {
        if self.m == m && self.n == n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: format!("{m}x{n}"), found: format!("{}x{}", self.m, self.n) })
        }
    }
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(m: usize, n: usize) -> Self {
        Matrix::filled(m, n, T::zero())
    }
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        let mut id = Matrix::zeros(n, n);
        for k in 1..=n {
            id.set(k, k, 1);
        }
        id
    }

    pub fn to_rational(&self) -> RationalMatrix {
        self.map(|&v| crate::rational::int(v))
    }
}

impl RationalMatrix {
    /// The integer matrix with the same entries, if every entry is integral.
    pub fn to_integer(&self) -> Option<IntMatrix> {
        let entries = self.entries.iter().map(crate::rational::to_i64).collect::<Option<Vec<_>>>()?;
        Some(Matrix { m: self.m, n: self.n, entries })
    }
}

impl<T: Clone + Add<Output = T>> Add for &Matrix<T> {
    type Output = Matrix<T>;

    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert!(self.same_shape(rhs), "shape mismatch in matrix sum");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.clone() + b.clone()).collect();
        Matrix { m: self.m, n: self.n, entries }
    }
}

impl<T: Clone + Sub<Output = T>> Sub for &Matrix<T> {
    type Output = Matrix<T>;

    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert!(self.same_shape(rhs), "shape mismatch in matrix difference");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.clone() - b.clone()).collect();
        Matrix { m: self.m, n: self.n, entries }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.entries.chunks(self.n) {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>2}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.entries.chunks(self.n) {
            let cells: Vec<String> = row.iter().map(|v| format!("{:>5}", format_rational(v))).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Row sums of a matrix.
pub fn row_sums<T: Clone + Zero>(x: &Matrix<T>) -> Vec<T> {
    x.entries.chunks(x.n).map(|r| r.iter().cloned().fold(T::zero(), |a, b| a + b)).collect()
}

/// Column sums of a matrix.
pub fn col_sums<T: Clone + Zero>(x: &Matrix<T>) -> Vec<T> {
    (1..=x.n).map(|j| (1..=x.m).fold(T::zero(), |a, i| a + x.get(i, j).clone())).collect()
}

fn partial_sums_binary(m: &IntMatrix) -> bool {
    for i in 1..=m.m {
        let mut s = 0;
        for j in 1..=m.n {
            s += m.get(i, j);
            if s != 0 && s != 1 {
                return false;
            }
        }
    }
    for j in 1..=m.n {
        let mut s = 0;
        for i in 1..=m.m {
            s += m.get(i, j);
            if s != 0 && s != 1 {
                return false;
            }
        }
    }
    true
}

/// Entries in `{-1, 0, 1}` and every row and column partial sum in `{0, 1}`.
pub fn is_pasm(m: &IntMatrix) -> bool {
    m.entries.iter().all(|v| (-1..=1).contains(v)) && partial_sums_binary(m)
}

/// A square partial alternating sign matrix whose rows and columns all sum to 1.
pub fn is_asm(m: &IntMatrix) -> bool {
    m.m == m.n && is_pasm(m) && row_sums(m).iter().all(|&s| s == 1) && col_sums(m).iter().all(|&s| s == 1)
}

/// Membership in the vertex set of the `lambda`-ASMCRY polytope: an `n x n`
/// alternating sign matrix vanishing where `i + j >= n + 3` and on the cells of
/// `lambda`.
pub fn is_asmcry_vertex(m: &IntMatrix, lambda: &Partition) -> bool {
    if !is_asm(m) {
        return false;
    }
    let n = m.n;
    (1..=n).all(|i| (1..=n).all(|j| (i + j < n + 3 && j > lambda.part(i)) || *m.get(i, j) == 0))
}

/// The vertex `M^mu(m, n)`.
///
/// A 1 sits at `(1, mu_1 + 1)`. For each `k` with `mu_k > mu_{k+1}`, row
/// `k + 1` gets a 1 at column `mu_{k+1} + 1` and a -1 at column `mu_k + 1`.
pub fn build_m_mu(mu: &Partition, m: usize, n: usize) -> Result<IntMatrix> {
    if !mu.fits_ambient(m, n) {
        return Err(Error::OutOfAmbient { parts: mu.parts().to_vec(), m, n });
    }
    let mut out = IntMatrix::zeros(m, n);
    out.set(1, mu.part(1) + 1, 1);
    for k in 1..m {
        let (upper, lower) = (mu.part(k), mu.part(k + 1));
        if upper > lower {
            out.set(k + 1, lower + 1, 1);
            out.set(k + 1, upper + 1, -1);
        }
    }
    Ok(out)
}

/// Northwest corner sums `c_ij = sum_{i' <= i, j' <= j} X_{i'j'}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerSumMatrix(pub RationalMatrix);

impl CornerSumMatrix {
    pub fn matrix(&self) -> &RationalMatrix {
        &self.0
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        self.0.get(i, j)
    }
}

pub fn corner_sums(x: &RationalMatrix) -> CornerSumMatrix {
    CornerSumMatrix(corner_sums_generic(x))
}

pub(crate) fn corner_sums_generic<T: Clone + Zero + Sub<Output = T>>(x: &Matrix<T>) -> Matrix<T> {
    let mut c: Matrix<T> = Matrix::zeros(x.m, x.n);
    for i in 1..=x.m {
        let mut row_run = T::zero();
        for j in 1..=x.n {
            row_run = row_run + x.get(i, j).clone();
            let above = if i > 1 { c.get(i - 1, j).clone() } else { T::zero() };
            c.set(i, j, above + row_run.clone());
        }
    }
    c
}

/// Finite-difference inverse of [`corner_sums`].
pub fn inverse_corner_sums(c: &CornerSumMatrix) -> RationalMatrix {
    let c = &c.0;
    let at = |i: usize, j: usize| if i == 0 || j == 0 { Rational::zero() } else { c.get(i, j).clone() };
    let mut x = RationalMatrix::zeros(c.m, c.n);
    for i in 1..=c.m {
        for j in 1..=c.n {
            x.set(i, j, at(i, j) - at(i - 1, j) - at(i, j - 1) + at(i - 1, j - 1));
        }
    }
    x
}

// JSON form: {"m": .., "n": .., "entries": [[..], ..]}, rationals as "p/q".

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Matrix", 3)?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("entries", &self.to_rows())?;
        st.end()
    }
}

struct RationalRows<'a>(&'a RationalMatrix);
struct RationalRow<'a>(&'a [Rational]);

impl Serialize for RationalRow<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for v in self.0 {
            seq.serialize_element(&format_rational(v))?;
        }
        seq.end()
    }
}

impl Serialize for RationalRows<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.m))?;
        for row in self.0.entries.chunks(self.0.n) {
            seq.serialize_element(&RationalRow(row))?;
        }
        seq.end()
    }
}

impl Serialize for RationalMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Matrix", 3)?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("entries", &RationalRows(self))?;
        st.end()
    }
}

#[derive(Deserialize)]
struct RawMatrix<T> {
    m: usize,
    n: usize,
    entries: Vec<Vec<T>>,
}

impl<T: Clone> RawMatrix<T> {
    fn into_matrix(self) -> Result<Matrix<T>> {
        let out = Matrix::from_rows(self.entries)?;
        out.ensure_shape(self.m, self.n)?;
        Ok(out)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        RawMatrix::<i64>::deserialize(d)?.into_matrix().map_err(de::Error::custom)
    }
}

struct RationalEntry(Rational);

impl<'de> Deserialize<'de> for RationalEntry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        d.deserialize_any(RationalVisitor).map(RationalEntry)
    }
}

impl<'de> Deserialize<'de> for RationalMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawMatrix::<RationalEntry>::deserialize(d)?;
        let rows = raw.entries.into_iter().map(|r| r.into_iter().map(|e| e.0).collect()).collect();
        RawMatrix { m: raw.m, n: raw.n, entries: rows }.into_matrix().map_err(de::Error::custom)
    }
}

impl<T: Zero + Clone> Matrix<T> {
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }
}
