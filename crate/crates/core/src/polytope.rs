//! The polytope `PASM(nu/lambda, m, n)`: its inequality system, vertices,
//! affine dimension, extremality and lattice points of dilates.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::matrices::{build_m_mu, IntMatrix, Matrix, RationalMatrix};
use crate::rational::{int, Rational};
use crate::shapes::{enumerate_between, Cell, Partition, SkewShape};
use crate::skewposet::{build_poset, interpolate_integer_samples, order_polynomial_value, SkewPoset, UniPoly};

/// Largest number of unconstrained cells scanned by [`integer_points_brute`]
/// and [`dilate_lattice_points`].
pub const MAX_SCAN_FREE_CELLS: usize = 24;
/// Largest dilation factor accepted by [`dilate_lattice_points`].
pub const MAX_SCAN_DILATION: i64 = 6;

/// The data fixing one polytope: `lambda ⊆ nu ⊆ (n-1)^(m-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PasmPolytopeSpec {
    shape: SkewShape,
}

impl PasmPolytopeSpec {
    pub fn new(nu: Partition, lambda: Partition, m: usize, n: usize) -> Result<Self> {
        Ok(PasmPolytopeSpec { shape: SkewShape::new(nu, lambda, m, n)? })
    }

    pub fn minimal(nu: Partition, lambda: Partition) -> Result<Self> {
        Ok(PasmPolytopeSpec { shape: SkewShape::minimal(nu, lambda)? })
    }

    pub fn from_shape(shape: SkewShape) -> Self {
        PasmPolytopeSpec { shape }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn nu(&self) -> &Partition {
        self.shape.nu()
    }

    pub fn lambda(&self) -> &Partition {
        self.shape.lambda()
    }

    pub fn rows(&self) -> usize {
        self.shape.rows()
    }

    pub fn cols(&self) -> usize {
        self.shape.cols()
    }

    pub fn poset(&self) -> SkewPoset {
        build_poset(&self.shape)
    }

    /// Last column of row `i` that may be nonzero: `nu_1 + 1` in row 1 and
    /// `nu_{i-1} + 1` below it.
    fn last_free_col(&self, i: usize) -> usize {
        if i == 1 {
            self.nu().part(1) + 1
        } else {
            self.nu().part(i - 1) + 1
        }
    }

    /// Cells forced to zero: those of `lambda` and those southeast of the
    /// border strip of `nu`.
    pub fn is_fixed_zero(&self, (i, j): Cell) -> bool {
        j <= self.lambda().part(i) || j > self.last_free_col(i)
    }

    pub fn free_cells(&self) -> Vec<Cell> {
        (1..=self.rows()).flat_map(|i| (1..=self.cols()).map(move |j| (i, j))).filter(|&c| !self.is_fixed_zero(c)).collect()
    }
}

/// The inequality system dilated by `t`: partial row and column sums in
/// `[0, t]`, first row and column summing to `t`, all other rows and columns
/// summing to 0, and the fixed zeros.
fn satisfies_system<T>(x: &Matrix<T>, spec: &PasmPolytopeSpec, t: &T) -> bool
where
    T: Clone + Zero + PartialOrd,
{
    let (m, n) = (spec.rows(), spec.cols());
    let zero = T::zero();
    let in_range = |s: &T| *s >= zero && *s <= *t;
    for i in 1..=m {
        let mut s = T::zero();
        for j in 1..=n {
            let v = x.get(i, j);
            if spec.is_fixed_zero((i, j)) && !v.is_zero() {
                return false;
            }
            s = s + v.clone();
            if !in_range(&s) {
                return false;
            }
        }
        let want = if i == 1 { t } else { &zero };
        if s != *want {
            return false;
        }
    }
    for j in 1..=n {
        let mut s = T::zero();
        for i in 1..=m {
            s = s + x.get(i, j).clone();
            if !in_range(&s) {
                return false;
            }
        }
        let want = if j == 1 { t } else { &zero };
        if s != *want {
            return false;
        }
    }
    true
}

/// Membership in `PASM(nu/lambda, m, n)` through its inequality description.
pub fn satisfies_inequalities(x: &RationalMatrix, spec: &PasmPolytopeSpec) -> Result<bool> {
    x.ensure_shape(spec.rows(), spec.cols())?;
    Ok(satisfies_system(x, spec, &Rational::one()))
}

/// Membership in the `t`-th dilate.
pub fn satisfies_dilated(x: &RationalMatrix, spec: &PasmPolytopeSpec, t: &Rational) -> Result<bool> {
    x.ensure_shape(spec.rows(), spec.cols())?;
    Ok(satisfies_system(x, spec, t))
}

pub fn int_satisfies_dilated(x: &IntMatrix, spec: &PasmPolytopeSpec, t: i64) -> Result<bool> {
    x.ensure_shape(spec.rows(), spec.cols())?;
    Ok(satisfies_system(x, spec, &t))
}

/// The matrices `M^mu` for `lambda ⊆ mu ⊆ nu`, in the order of
/// [`enumerate_between`].
pub fn vertices(spec: &PasmPolytopeSpec) -> Vec<IntMatrix> {
    enumerate_between(spec.lambda(), spec.nu())
        .expect("spec guarantees lambda ⊆ nu")
        .iter()
        .map(|mu| build_m_mu(mu, spec.rows(), spec.cols()).expect("mu ⊆ nu fits the ambient box"))
        .collect()
}

/// Visits every integer matrix in the `t`-th dilate by filling cells in
/// row-major order, each one through its row partial sum in `[0, t]`.
fn scan_lattice_points(spec: &PasmPolytopeSpec, t: i64, visit: &mut dyn FnMut(&IntMatrix)) -> Result<()> {
    let free = spec.free_cells().len();
    if free > MAX_SCAN_FREE_CELLS {
        return Err(Error::InstanceTooLarge(format!(
            "{free} unconstrained cells (limit {MAX_SCAN_FREE_CELLS})"
        )));
    }
    if !(0..=MAX_SCAN_DILATION).contains(&t) {
        return Err(Error::InstanceTooLarge(format!("dilation {t} outside 0..={MAX_SCAN_DILATION}")));
    }
    struct Scan<'a> {
        spec: &'a PasmPolytopeSpec,
        t: i64,
        x: IntMatrix,
        col_partial: Vec<i64>,
    }
    impl Scan<'_> {
        fn step(&mut self, i: usize, j: usize, row_partial: i64, visit: &mut dyn FnMut(&IntMatrix)) {
            let (m, n) = (self.spec.rows(), self.spec.cols());
            if i > m {
                let cols_ok = self.col_partial.iter().enumerate().all(|(c, &s)| s == if c == 0 { self.t } else { 0 });
                if cols_ok {
                    visit(&self.x);
                }
                return;
            }
            let choices = if self.spec.is_fixed_zero((i, j)) { row_partial..=row_partial } else { 0..=self.t };
            for s in choices {
                let entry = s - row_partial;
                let col = self.col_partial[j - 1] + entry;
                if !(0..=self.t).contains(&col) {
                    continue;
                }
                if j == n && s != if i == 1 { self.t } else { 0 } {
                    continue;
                }
                self.x.set(i, j, entry);
                self.col_partial[j - 1] = col;
                if j == n {
                    self.step(i + 1, 1, 0, visit);
                } else {
                    self.step(i, j + 1, s, visit);
                }
                self.col_partial[j - 1] -= entry;
            }
            self.x.set(i, j, 0);
        }
    }
    let mut scan =
        Scan { spec, t, x: IntMatrix::zeros(spec.rows(), spec.cols()), col_partial: vec![0; spec.cols()] };
    scan.step(1, 1, 0, visit);
    Ok(())
}

/// Every integer matrix satisfying the inequality system, found by a search
/// over the unconstrained cells that is independent of the vertex list.
pub fn integer_points_brute(spec: &PasmPolytopeSpec) -> Result<Vec<IntMatrix>> {
    let mut out = Vec::new();
    scan_lattice_points(spec, 1, &mut |x| out.push(x.clone()))?;
    out.sort();
    Ok(out)
}

/// Integer matrices of the `t`-th dilate.
pub fn dilate_lattice_matrices(spec: &PasmPolytopeSpec, t: i64) -> Result<Vec<IntMatrix>> {
    let mut out = Vec::new();
    scan_lattice_points(spec, t, &mut |x| out.push(x.clone()))?;
    Ok(out)
}

fn vector(x: &IntMatrix) -> Vec<Rational> {
    x.entries().iter().map(|&v| int(v)).collect()
}

/// Affine dimension of the vertex set.
pub fn dimension(spec: &PasmPolytopeSpec) -> usize {
    affine_rank(&vertices(spec))
}

/// Rank of the differences `v_k - v_0` of a point list.
pub fn affine_rank(points: &[IntMatrix]) -> usize {
    let Some((first, rest)) = points.split_first() else {
        return 0;
    };
    let base = vector(first);
    let rows = rest.iter().map(|p| vector(p).iter().zip(&base).map(|(a, b)| a - b).collect()).collect();
    linalg::rank(rows)
}

/// True iff `x` is not a convex combination of `others`.
pub fn is_extreme(x: &RationalMatrix, others: &[RationalMatrix]) -> Result<bool> {
    for o in others {
        o.ensure_shape(x.rows(), x.cols())?;
    }
    let points: Vec<Vec<Rational>> = others.iter().map(|o| o.entries().to_vec()).collect();
    Ok(linalg::convex_combination(&points, x.entries()).is_none())
}

/// Every vertex is extreme against the remaining ones.
pub fn vertices_are_extreme(spec: &PasmPolytopeSpec) -> bool {
    let verts: Vec<RationalMatrix> = vertices(spec).iter().map(IntMatrix::to_rational).collect();
    (0..verts.len()).all(|k| {
        let others: Vec<RationalMatrix> =
            verts.iter().enumerate().filter(|&(o, _)| o != k).map(|(_, v)| v.clone()).collect();
        is_extreme(&verts[k], &others).expect("vertices share one shape")
    })
}

/// Number of lattice points in the `t`-th dilate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DilateCount {
    pub t: i64,
    pub count: u128,
}

/// Lattice points of `t * PASM(nu/lambda)` counted by a direct scan.
pub fn dilate_lattice_points(spec: &PasmPolytopeSpec, t: i64) -> Result<DilateCount> {
    let mut count = 0u128;
    scan_lattice_points(spec, t, &mut |_| count += 1)?;
    Ok(DilateCount { t, count })
}

/// Lattice points of `t * PASM(nu/lambda)` counted as order-preserving maps
/// `P(nu/lambda) -> {0, ..., t}`.
pub fn dilate_lattice_points_via_order(spec: &PasmPolytopeSpec, t: i64) -> Result<DilateCount> {
    if t < 0 {
        return Err(Error::NonPositiveT);
    }
    Ok(DilateCount { t, count: order_polynomial_value(&spec.poset(), t + 1)? })
}

/// The Ehrhart polynomial, interpolated from `L(t)` at `t = 0, ..., |nu/lambda|`
/// computed through the order polynomial.
pub fn ehrhart_polynomial(spec: &PasmPolytopeSpec) -> Result<UniPoly> {
    let d = spec.shape().size() as i64;
    let samples =
        (0..=d).map(|t| Ok((t, dilate_lattice_points_via_order(spec, t)?.count))).collect::<Result<Vec<_>>>()?;
    interpolate_integer_samples(&samples)
}

/// The report printed by the command line front end.
#[derive(Debug, Clone, Serialize)]
pub struct PolytopeReport {
    pub spec: PasmPolytopeSpec,
    pub vertices: Vec<IntMatrix>,
    pub dimension: usize,
    pub ehrhart_values: Vec<(i64, u128)>,
    pub ehrhart_poly: UniPoly,
}

/// Vertices, dimension, `L(t)` for `t = 0..=t_max` and the Ehrhart polynomial.
/// Values use the direct scan when the instance is within the scan limits and
/// the order polynomial otherwise.
pub fn polytope_report(spec: &PasmPolytopeSpec, t_max: i64) -> Result<PolytopeReport> {
    let ehrhart_values = (0..=t_max)
        .map(|t| {
            let count = match dilate_lattice_points(spec, t) {
                Ok(c) => c.count,
                Err(Error::InstanceTooLarge(_)) => dilate_lattice_points_via_order(spec, t)?.count,
                Err(e) => return Err(e),
            };
            Ok((t, count))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PolytopeReport {
        spec: spec.clone(),
        vertices: vertices(spec),
        dimension: dimension(spec),
        ehrhart_values,
        ehrhart_poly: ehrhart_polynomial(spec)?,
    })
}
