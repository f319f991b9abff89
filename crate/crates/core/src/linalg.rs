//! Dense exact vectors and linear maps, plus the row reduction behind
//! nullspaces, ranks and inverses.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

/// Coordinates of an element of `k^n` in the standard basis. Never empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector(Vec<Scalar>);

impl Vector {
    pub fn new(entries: Vec<Scalar>) -> Self {
        assert!(!entries.is_empty(), "vectors have positive dimension");
        Vector(entries)
    }

    pub fn zeros(field: Field, dim: usize) -> Self {
        Vector::new(vec![field.zero(); dim])
    }

    pub fn basis(field: Field, dim: usize, index: usize) -> Self {
        let mut v = Vector::zeros(field, dim);
        v.0[index] = field.one();
        v
    }

    pub fn from_i64(field: Field, values: &[i64]) -> Self {
        Vector::new(values.iter().map(|&x| field.from_i64(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn field(&self) -> Field {
        self.0[0].field()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.0
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.0[i]
    }

    pub(crate) fn entries_mut(&mut self) -> &mut [Scalar] {
        &mut self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector(self.0.iter().map(|x| x * c).collect())
    }

    /// `self += c * other`
    pub fn axpy(&mut self, c: &Scalar, other: &Vector) {
        debug_assert_eq!(self.dim(), other.dim());
        if c.is_zero() {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            if !b.is_zero() {
                a.add_product(c, b);
            }
        }
    }

    /// Nonzero coordinates with their indices.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A `rows x cols` matrix acting on column vectors; column `j` is the image
/// of the basis vector `e_j`. Entries are stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearMap {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl LinearMap {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "maps have positive dimensions");
        LinearMap {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = LinearMap::zero(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut m = LinearMap::zero(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.entries[i * cols + j] = f(i, j);
            }
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::dims("nonempty matrix", "empty matrix"));
        }
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::dims(format!("{c} columns"), format!("{} columns", row.len())));
            }
            for x in row {
                if x.field() != field {
                    return Err(Error::FieldMismatch(field.to_string(), x.field().to_string()));
                }
                entries.push(x);
            }
        }
        Ok(LinearMap {
            field,
            rows: r,
            cols: c,
            entries,
        })
    }

    /// Square matrix from integer rows, for fixtures and tests.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        LinearMap::from_rows(field, rows).expect("rectangular integer matrix")
    }

    /// The map sending `e_j` to `columns[j]`.
    pub fn from_columns(columns: &[Vector]) -> Self {
        let field = columns[0].field();
        let rows = columns[0].dim();
        LinearMap::from_fn(field, rows, columns.len(), |i, j| columns[j].get(i).clone())
    }

    pub fn diagonal(field: Field, diag: &[i64]) -> Self {
        let n = diag.len();
        LinearMap::from_fn(
            field,
            n,
            n,
            |i, j| {
                if i == j {
                    field.from_i64(diag[i])
                } else {
                    field.zero()
                }
            },
        )
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Output dimension.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Input dimension.
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Image of `e_j`.
    pub fn column(&self, j: usize) -> Vector {
        Vector::new((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn try_apply(&self, v: &Vector) -> Result<Vector> {
        if v.dim() != self.cols {
            return Err(Error::dims(self.cols, v.dim()));
        }
        Ok(self.apply(v))
    }

    /// Matrix-vector product; panics on a dimension mismatch.
    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(v.dim(), self.cols, "linear map applied to wrong dimension");
        let mut out = Vector::zeros(self.field, self.rows);
        for (j, c) in v.support() {
            for i in 0..self.rows {
                let m = self.get(i, j);
                if !m.is_zero() {
                    out.0[i].add_product(m, c);
                }
            }
        }
        out
    }

    pub fn try_compose(&self, inner: &LinearMap) -> Result<LinearMap> {
        if inner.rows != self.cols {
            return Err(Error::dims(self.cols, inner.rows));
        }
        Ok(self.compose(inner))
    }

    /// `self ∘ inner`; panics on a dimension mismatch.
    pub fn compose(&self, inner: &LinearMap) -> LinearMap {
        assert_eq!(inner.rows, self.cols, "composition dimension mismatch");
        let mut out = LinearMap::zero(self.field, self.rows, inner.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..inner.cols {
                    let b = inner.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * inner.cols + j].add_product(a, b);
                    }
                }
            }
        }
        out
    }

    /// Composite of a sequence, applied right to left: `maps[0] ∘ maps[1] ∘ ...`.
    pub fn chain(maps: &[&LinearMap]) -> LinearMap {
        let mut it = maps.iter().rev();
        let first = (*it.next().expect("nonempty chain")).clone();
        it.fold(first, |acc, m| m.compose(&acc))
    }

    pub fn pow(&self, exp: u32) -> LinearMap {
        assert!(self.is_square(), "power of a non-square map");
        let mut acc = LinearMap::identity(self.field, self.rows);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    pub fn sub(&self, other: &LinearMap) -> LinearMap {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        LinearMap {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        LinearMap {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        LinearMap {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn commutes_with(&self, other: &LinearMap) -> bool {
        self.compose(other) == other.compose(self)
    }

    pub fn rank(&self) -> usize {
        Rref::new(self.clone()).pivots.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Exact inverse; `Singular` names the map as `name`.
    pub fn inverse_named(&self, name: &str) -> Result<LinearMap> {
        if !self.is_square() {
            return Err(Error::dims("square map", format!("{}x{}", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut aug = LinearMap::zero(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let rref = Rref::new(aug);
        if rref.pivots.len() < n || rref.pivots[n - 1] >= n {
            return Err(Error::Singular { map: name.to_string() });
        }
        Ok(LinearMap::from_fn(self.field, n, n, |i, j| {
            rref.matrix.get(i, n + j).clone()
        }))
    }

    pub fn inverse(&self) -> Result<LinearMap> {
        self.inverse_named("map")
    }

    /// Basis of `{v : self(v) = 0}`, one vector per free column of the
    /// reduced row echelon form, in increasing free-column order.
    pub fn nullspace(&self) -> Vec<Vector> {
        let rref = Rref::new(self.clone());
        let free: Vec<usize> = (0..self.cols).filter(|c| !rref.pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = Vector::zeros(self.field, self.cols);
                v.0[fc] = self.field.one();
                for (row, &pc) in rref.pivots.iter().enumerate() {
                    v.0[pc] = -rref.matrix.get(row, fc);
                }
                v
            })
            .collect()
    }

    /// Tensor (Kronecker) product `self ⊗ other`, with the left factor's
    /// index most significant.
    pub fn kron(&self, other: &LinearMap) -> LinearMap {
        let (r2, c2) = (other.rows, other.cols);
        LinearMap::from_fn(self.field, self.rows * r2, self.cols * c2, |i, j| {
            self.get(i / r2, j / c2) * other.get(i % r2, j % c2)
        })
    }
}

impl fmt::Display for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form with the list of pivot columns.
struct Rref {
    matrix: LinearMap,
    pivots: Vec<usize>,
}

impl Rref {
    fn new(mut m: LinearMap) -> Self {
        let (rows, cols) = (m.rows, m.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    m.entries.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = m.get(r, c).inverse().expect("pivot is nonzero");
            for j in c..cols {
                let x = m.get(r, j) * &inv;
                m.set(r, j, x);
            }
            for i in 0..rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..cols {
                    let x = m.get(r, j);
                    if !x.is_zero() {
                        let y = m.get(i, j) - &(&factor * x);
                        m.set(i, j, y);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
    }
}

/// Rank of the span of a list of vectors of equal dimension.
pub fn span_rank(vectors: &[Vector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    LinearMap::from_columns(vectors).rank()
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span(basis: &[Vector], v: &Vector) -> bool {
    if v.is_zero() {
        return true;
    }
    let mut all = basis.to_vec();
    let before = span_rank(&all);
    all.push(v.clone());
    span_rank(&all) == before
}

/// Basis of the solution space of the homogeneous system whose rows are
/// produced by `equations`, with `unknowns` columns.
pub fn solve_homogeneous(field: Field, unknowns: usize, equations: Vec<Vec<Scalar>>) -> Vec<Vector> {
    if equations.is_empty() {
        return (0..unknowns).map(|i| Vector::basis(field, unknowns, i)).collect();
    }
    let rows = equations.len();
    let mut m = LinearMap::zero(field, rows, unknowns);
    for (i, eq) in equations.into_iter().enumerate() {
        for (j, x) in eq.into_iter().enumerate() {
            m.set(i, j, x);
        }
    }
    m.nullspace()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn apply_examples() {
        let id = LinearMap::identity(q(), 2);
        let v = Vector::from_i64(q(), &[1, 2]);
        assert_eq!(id.apply(&v), v);
        let d = LinearMap::from_i64(q(), &[&[0, 0], &[0, 1]]);
        let x = Vector::basis(q(), 2, 1);
        assert_eq!(d.apply(&x), x);
        let zero = LinearMap::zero(q(), 2, 2);
        assert!(zero.apply(&v).is_zero());
        assert!(matches!(
            id.try_apply(&Vector::from_i64(q(), &[1, 2, 3])),
            Err(Error::DimMismatch { .. })
        ));
    }

    #[test]
    fn inverse_examples() {
        let id = LinearMap::identity(q(), 3);
        assert_eq!(id.inverse().unwrap(), id);
        let m = LinearMap::from_i64(q(), &[&[2, 0], &[0, 3]]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv.get(0, 0), &q().parse("1/2").unwrap());
        assert_eq!(inv.get(1, 1), &q().parse("1/3").unwrap());
        assert!(inv.get(0, 1).is_zero());
        assert_eq!(inv.inverse().unwrap(), m);
        let s = LinearMap::from_i64(q(), &[&[0, 0], &[0, 1]]);
        assert!(matches!(s.inverse_named("alpha"), Err(Error::Singular { map }) if map == "alpha"));
    }

    #[test]
    fn inverse_over_gf3() {
        let f = Field::Prime(3);
        let m = LinearMap::from_i64(f, &[&[1, 1, 0], &[0, 2, 1], &[1, 0, 2]]);
        let inv = m.inverse().unwrap();
        assert!(m.compose(&inv).is_identity());
    }

    #[test]
    fn compose_dimension_checked() {
        let a = LinearMap::zero(q(), 2, 3);
        let b = LinearMap::zero(q(), 2, 2);
        assert!(a.try_compose(&b).is_err());
        assert!(b.try_compose(&a).is_ok());
    }

    #[test]
    fn nullspace_basis() {
        // x + y + z = 0 over Q has a two dimensional solution space.
        let m = LinearMap::from_i64(q(), &[&[1, 1, 1]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.apply(v).is_zero());
        }
        assert_eq!(span_rank(&ns), 2);
    }

    #[test]
    fn span_membership() {
        let basis = vec![Vector::from_i64(q(), &[1, 1, 0])];
        assert!(in_span(&basis, &Vector::from_i64(q(), &[3, 3, 0])));
        assert!(!in_span(&basis, &Vector::from_i64(q(), &[1, 0, 0])));
        assert!(in_span(&[], &Vector::zeros(q(), 3)));
    }

    #[test]
    fn powers_and_kron() {
        let a = LinearMap::from_i64(q(), &[&[1, 1], &[0, 1]]);
        assert_eq!(a.pow(3), LinearMap::from_i64(q(), &[&[1, 3], &[0, 1]]));
        assert!(a.pow(0).is_identity());
        let k = a.kron(&LinearMap::identity(q(), 2));
        assert_eq!(k.rows(), 4);
        assert_eq!(k.get(0, 2), &q().one());
    }
}
