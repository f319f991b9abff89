//! Structure-constant arrays and tensor powers of the underlying space.
//!
//! Conventions: `Product` stores `c[i][j][k]` with `e_i e_j = Σ_k c[i][j][k] e_k`;
//! `Coproduct` stores `d[i][j][k]` with `Δ(e_i) = Σ_{j,k} d[i][j][k] e_j ⊗ e_k`.
//! A `Tensor` of order `m` holds `n^m` coefficients in row-major order, the
//! first leg being most significant.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{LinearMap, Vector};
use crate::scalar::{Field, Scalar};

fn pow(n: usize, k: usize) -> usize {
    n.pow(k as u32)
}

/// Element of the `order`-fold tensor power of `k^dim`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor {
    field: Field,
    dim: usize,
    order: usize,
    coeffs: Vec<Scalar>,
}

impl Tensor {
    pub fn zeros(field: Field, dim: usize, order: usize) -> Self {
        assert!(dim > 0 && order > 0);
        Tensor {
            field,
            dim,
            order,
            coeffs: vec![field.zero(); pow(dim, order)],
        }
    }

    pub fn from_flat(field: Field, dim: usize, order: usize, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() != pow(dim, order) {
            return Err(Error::dims(pow(dim, order), coeffs.len()));
        }
        if let Some(x) = coeffs.iter().find(|x| x.field() != field) {
            return Err(Error::FieldMismatch(field.to_string(), x.field().to_string()));
        }
        Ok(Tensor {
            field,
            dim,
            order,
            coeffs,
        })
    }

    /// Order-2 tensor from its coefficient matrix: `Σ m[i][j] e_i ⊗ e_j`.
    pub fn from_matrix(m: &LinearMap) -> Self {
        assert!(m.is_square());
        Tensor {
            field: m.field(),
            dim: m.rows(),
            order: 2,
            coeffs: m.entries().to_vec(),
        }
    }

    /// Order-2 coefficient matrix of this tensor.
    pub fn to_matrix(&self) -> LinearMap {
        assert_eq!(self.order, 2);
        LinearMap::from_fn(self.field, self.dim, self.dim, |i, j| self.get(&[i, j]).clone())
    }

    pub fn from_vector(v: &Vector) -> Self {
        Tensor {
            field: v.field(),
            dim: v.dim(),
            order: 1,
            coeffs: v.entries().to_vec(),
        }
    }

    pub fn to_vector(&self) -> Vector {
        assert_eq!(self.order, 1);
        Vector::new(self.coeffs.clone())
    }

    /// Pure tensor `v_0 ⊗ v_1 ⊗ ...`.
    pub fn pure(vectors: &[&Vector]) -> Self {
        let mut it = vectors.iter();
        let first = Tensor::from_vector(it.next().expect("at least one factor"));
        it.fold(first, |acc, v| acc.outer(&Tensor::from_vector(v)))
    }

    /// The basis tensor `e_{idx[0]} ⊗ e_{idx[1]} ⊗ ...`.
    pub fn basis(field: Field, dim: usize, idx: &[usize]) -> Self {
        let mut t = Tensor::zeros(field, dim, idx.len());
        let pos = t.offset(idx);
        t.coeffs[pos] = field.one();
        t
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.order);
        idx.iter().fold(0, |acc, &i| {
            debug_assert!(i < self.dim);
            acc * self.dim + i
        })
    }

    fn unravel(&self, mut pos: usize) -> Vec<usize> {
        let mut idx = vec![0; self.order];
        for slot in idx.iter_mut().rev() {
            *slot = pos % self.dim;
            pos /= self.dim;
        }
        idx
    }

    pub fn get(&self, idx: &[usize]) -> &Scalar {
        &self.coeffs[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: Scalar) {
        let pos = self.offset(idx);
        self.coeffs[pos] = value;
    }

    /// Nonzero coefficients with their multi-indices, in lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<usize>, &Scalar)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(pos, c)| (self.unravel(pos), c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    fn same_shape(&self, other: &Tensor) {
        assert_eq!(
            (self.dim, self.order),
            (other.dim, other.order),
            "tensor shape mismatch"
        );
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        self.same_shape(other);
        self.with_coeffs(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        self.same_shape(other);
        self.with_coeffs(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Tensor {
        self.with_coeffs(self.coeffs.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: &Scalar) -> Tensor {
        self.with_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `self += c * other`
    pub fn axpy(&mut self, c: &Scalar, other: &Tensor) {
        self.same_shape(other);
        if c.is_zero() {
            return;
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                a.add_product(c, b);
            }
        }
    }

    fn with_coeffs(&self, coeffs: Vec<Scalar>) -> Tensor {
        Tensor {
            field: self.field,
            dim: self.dim,
            order: self.order,
            coeffs,
        }
    }

    pub fn outer(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.dim, other.dim);
        let mut coeffs = Vec::with_capacity(self.coeffs.len() * other.coeffs.len());
        for a in &self.coeffs {
            for b in &other.coeffs {
                coeffs.push(if a.is_zero() || b.is_zero() {
                    self.field.zero()
                } else {
                    a * b
                });
            }
        }
        Tensor {
            field: self.field,
            dim: self.dim,
            order: self.order + other.order,
            coeffs,
        }
    }

    /// Reorders legs: leg `k` of the result is leg `perm[k]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Tensor {
        assert_eq!(perm.len(), self.order);
        let mut out = Tensor::zeros(self.field, self.dim, self.order);
        for (idx, c) in self.terms() {
            let new: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
            out.set(&new, c.clone());
        }
        out
    }

    /// Applies `map` to a single leg.
    pub fn map_leg(&self, leg: usize, map: &LinearMap) -> Tensor {
        assert!(leg < self.order);
        assert_eq!((map.rows(), map.cols()), (self.dim, self.dim), "leg map must be square");
        let n = self.dim;
        let inner = pow(n, self.order - 1 - leg);
        let outer = pow(n, leg);
        let mut out = Tensor::zeros(self.field, n, self.order);
        for o in 0..outer {
            for m in 0..n {
                for s in 0..inner {
                    let c = &self.coeffs[(o * n + m) * inner + s];
                    if c.is_zero() {
                        continue;
                    }
                    for a in 0..n {
                        let w = map.get(a, m);
                        if !w.is_zero() {
                            out.coeffs[(o * n + a) * inner + s].add_product(w, c);
                        }
                    }
                }
            }
        }
        out
    }

    /// Applies `maps[k]` to leg `k`; `None` leaves the leg untouched.
    pub fn map_legs(&self, maps: &[Option<&LinearMap>]) -> Tensor {
        assert_eq!(maps.len(), self.order);
        let mut t = self.clone();
        for (leg, m) in maps.iter().enumerate() {
            if let Some(m) = m {
                if !m.is_identity() {
                    t = t.map_leg(leg, m);
                }
            }
        }
        t
    }

    /// Multiplies legs `leg` and `leg + 1` together, lowering the order by one.
    pub fn merge_legs(&self, leg: usize, product: &Product) -> Tensor {
        assert!(leg + 1 < self.order);
        assert_eq!(product.dim(), self.dim);
        let n = self.dim;
        let inner = pow(n, self.order - 2 - leg);
        let outer = pow(n, leg);
        let mut out = Tensor::zeros(self.field, n, self.order - 1);
        for o in 0..outer {
            for a in 0..n {
                for b in 0..n {
                    for s in 0..inner {
                        let c = &self.coeffs[((o * n + a) * n + b) * inner + s];
                        if c.is_zero() {
                            continue;
                        }
                        for k in 0..n {
                            let w = product.coeff(a, b, k);
                            if !w.is_zero() {
                                out.coeffs[(o * n + k) * inner + s].add_product(w, c);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Replaces leg `leg` by the two legs of its image under `delta`.
    pub fn expand_leg(&self, leg: usize, delta: &Coproduct) -> Tensor {
        assert!(leg < self.order);
        assert_eq!(delta.dim(), self.dim);
        let n = self.dim;
        let inner = pow(n, self.order - 1 - leg);
        let outer = pow(n, leg);
        let mut out = Tensor::zeros(self.field, n, self.order + 1);
        for o in 0..outer {
            for m in 0..n {
                for s in 0..inner {
                    let c = &self.coeffs[(o * n + m) * inner + s];
                    if c.is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        for k in 0..n {
                            let w = delta.coeff(m, j, k);
                            if !w.is_zero() {
                                out.coeffs[((o * n + j) * n + k) * inner + s].add_product(w, c);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Left action `a • (b_1 ⊗ ... ⊗ b_m) = α(a)b_1 ⊗ β(b_2) ⊗ ... ⊗ β(b_m)`.
    pub fn act_left(&self, product: &Product, alpha: &LinearMap, beta: &LinearMap, a: &Vector) -> Tensor {
        assert!(self.order >= 2, "tensor actions need order at least 2");
        let l = product.left_mult(&alpha.apply(a));
        let mut maps: Vec<Option<&LinearMap>> = vec![Some(beta); self.order];
        maps[0] = Some(&l);
        self.map_legs(&maps)
    }

    /// Right action `(b_1 ⊗ ... ⊗ b_m) • a = α(b_1) ⊗ ... ⊗ α(b_{m-1}) ⊗ b_m β(a)`.
    pub fn act_right(&self, product: &Product, alpha: &LinearMap, beta: &LinearMap, a: &Vector) -> Tensor {
        assert!(self.order >= 2, "tensor actions need order at least 2");
        let r = product.right_mult(&beta.apply(a));
        let mut maps: Vec<Option<&LinearMap>> = vec![Some(alpha); self.order];
        maps[self.order - 1] = Some(&r);
        self.map_legs(&maps)
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (idx, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let legs: Vec<String> = idx.iter().map(|i| format!("e{i}")).collect();
            write!(f, "{c}*{}", legs.join("⊗"))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Bilinear product on `k^dim` given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Product {
    field: Field,
    dim: usize,
    c: Vec<Scalar>,
}

impl Product {
    pub fn zero(field: Field, dim: usize) -> Self {
        assert!(dim > 0);
        Product {
            field,
            dim,
            c: vec![field.zero(); dim * dim * dim],
        }
    }

    pub fn from_flat(field: Field, dim: usize, c: Vec<Scalar>) -> Result<Self> {
        if c.len() != dim * dim * dim {
            return Err(Error::dims(dim * dim * dim, c.len()));
        }
        Ok(Product { field, dim, c })
    }

    /// Product with `e_i e_j = f(i, j)`.
    pub fn from_fn(field: Field, dim: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut p = Product::zero(field, dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                assert_eq!(v.dim(), dim);
                for (k, x) in v.into_entries().into_iter().enumerate() {
                    p.c[(i * dim + j) * dim + k] = x;
                }
            }
        }
        p
    }

    /// Product from sparse integer triples `(i, j, k, c)`.
    pub fn from_triples(field: Field, dim: usize, triples: &[(usize, usize, usize, i64)]) -> Self {
        let mut p = Product::zero(field, dim);
        for &(i, j, k, x) in triples {
            p.set(i, j, k, field.from_i64(x));
        }
        p
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        let n = self.dim;
        self.c[(i * n + j) * n + k] = value;
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Scalar::is_zero)
    }

    /// `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        let n = self.dim;
        Vector::new(self.c[(i * n + j) * n..(i * n + j + 1) * n].to_vec())
    }

    pub fn try_eval(&self, u: &Vector, v: &Vector) -> Result<Vector> {
        if u.dim() != self.dim || v.dim() != self.dim {
            return Err(Error::dims(
                self.dim,
                if u.dim() != self.dim { u.dim() } else { v.dim() },
            ));
        }
        Ok(self.eval(u, v))
    }

    /// `u · v`; panics on a dimension mismatch.
    pub fn eval(&self, u: &Vector, v: &Vector) -> Vector {
        assert!(
            u.dim() == self.dim && v.dim() == self.dim,
            "product applied to wrong dimension"
        );
        let n = self.dim;
        let mut out = Vector::zeros(self.field, n);
        for (i, a) in u.support() {
            for (j, b) in v.support() {
                let ab = a * b;
                let base = (i * n + j) * n;
                for k in 0..n {
                    let w = &self.c[base + k];
                    if !w.is_zero() {
                        out.entries_mut()[k].add_product(w, &ab);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `x ↦ u · x`.
    pub fn left_mult(&self, u: &Vector) -> LinearMap {
        let cols: Vec<Vector> = (0..self.dim)
            .map(|j| self.eval(u, &Vector::basis(self.field, self.dim, j)))
            .collect();
        LinearMap::from_columns(&cols)
    }

    /// Matrix of `x ↦ x · u`.
    pub fn right_mult(&self, u: &Vector) -> LinearMap {
        let cols: Vec<Vector> = (0..self.dim)
            .map(|j| self.eval(&Vector::basis(self.field, self.dim, j), u))
            .collect();
        LinearMap::from_columns(&cols)
    }

    /// `μ ∘ (a ⊗ b)`, i.e. `x ⋆ y = a(x) · b(y)`.
    pub fn twist(&self, a: &LinearMap, b: &LinearMap) -> Product {
        let cols_a = a.columns();
        let cols_b = b.columns();
        Product::from_fn(self.field, self.dim, |i, j| self.eval(&cols_a[i], &cols_b[j]))
    }

    pub fn try_twist(&self, a: &LinearMap, b: &LinearMap) -> Result<Product> {
        for m in [a, b] {
            if m.rows() != self.dim || m.cols() != self.dim {
                return Err(Error::dims(
                    format!("{0}x{0}", self.dim),
                    format!("{}x{}", m.rows(), m.cols()),
                ));
            }
        }
        Ok(self.twist(a, b))
    }

    /// `[x, y] = x·y − y·x`.
    pub fn commutator(&self) -> Product {
        Product::from_fn(self.field, self.dim, |i, j| {
            &self.basis_product(i, j) - &self.basis_product(j, i)
        })
    }

    /// `y · x`.
    pub fn opposite(&self) -> Product {
        Product::from_fn(self.field, self.dim, |i, j| self.basis_product(j, i))
    }

    pub fn add(&self, other: &Product) -> Product {
        Product {
            field: self.field,
            dim: self.dim,
            c: self.c.iter().zip(&other.c).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Product) -> Product {
        Product {
            field: self.field,
            dim: self.dim,
            c: self.c.iter().zip(&other.c).map(|(a, b)| a - b).collect(),
        }
    }

    /// Applies the product to legs `leg`, `leg + 1` of a tensor.
    pub fn apply_to_tensor(&self, t: &Tensor, leg: usize) -> Tensor {
        t.merge_legs(leg, self)
    }
}

/// Comultiplication `Δ : k^dim → k^dim ⊗ k^dim`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coproduct {
    field: Field,
    dim: usize,
    d: Vec<Scalar>,
}

impl Coproduct {
    pub fn zero(field: Field, dim: usize) -> Self {
        assert!(dim > 0);
        Coproduct {
            field,
            dim,
            d: vec![field.zero(); dim * dim * dim],
        }
    }

    pub fn from_flat(field: Field, dim: usize, d: Vec<Scalar>) -> Result<Self> {
        if d.len() != dim * dim * dim {
            return Err(Error::dims(dim * dim * dim, d.len()));
        }
        Ok(Coproduct { field, dim, d })
    }

    /// Comultiplication with `Δ(e_i) = f(i)`.
    pub fn from_fn(field: Field, dim: usize, mut f: impl FnMut(usize) -> Tensor) -> Self {
        let mut d = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            let t = f(i);
            assert_eq!((t.dim(), t.order()), (dim, 2));
            d.extend(t.coeffs);
        }
        Coproduct { field, dim, d }
    }

    pub fn from_triples(field: Field, dim: usize, triples: &[(usize, usize, usize, i64)]) -> Self {
        let mut c = Coproduct::zero(field, dim);
        for &(i, j, k, x) in triples {
            c.set(i, j, k, field.from_i64(x));
        }
        c
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.d[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        let n = self.dim;
        self.d[(i * n + j) * n + k] = value;
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.d.iter().all(Scalar::is_zero)
    }

    /// `Δ(e_i)`.
    pub fn basis_image(&self, i: usize) -> Tensor {
        let n = self.dim;
        Tensor {
            field: self.field,
            dim: n,
            order: 2,
            coeffs: self.d[i * n * n..(i + 1) * n * n].to_vec(),
        }
    }

    pub fn try_eval(&self, v: &Vector) -> Result<Tensor> {
        if v.dim() != self.dim {
            return Err(Error::dims(self.dim, v.dim()));
        }
        Ok(self.eval(v))
    }

    /// `Δ(v)`; panics on a dimension mismatch.
    pub fn eval(&self, v: &Vector) -> Tensor {
        assert_eq!(v.dim(), self.dim, "comultiplication applied to wrong dimension");
        let mut out = Tensor::zeros(self.field, self.dim, 2);
        for (i, c) in v.support() {
            out.axpy(c, &self.basis_image(i));
        }
        out
    }

    /// `(a ⊗ b) ∘ Δ`.
    pub fn twist(&self, a: &LinearMap, b: &LinearMap) -> Coproduct {
        Coproduct::from_fn(self.field, self.dim, |i| {
            self.basis_image(i).map_legs(&[Some(a), Some(b)])
        })
    }

    pub fn try_twist(&self, a: &LinearMap, b: &LinearMap) -> Result<Coproduct> {
        for m in [a, b] {
            if m.rows() != self.dim || m.cols() != self.dim {
                return Err(Error::dims(
                    format!("{0}x{0}", self.dim),
                    format!("{}x{}", m.rows(), m.cols()),
                ));
            }
        }
        Ok(self.twist(a, b))
    }

    /// `μ ∘ Δ` as a linear map.
    pub fn contract(&self, product: &Product) -> LinearMap {
        let cols: Vec<Vector> = (0..self.dim)
            .map(|i| self.basis_image(i).merge_legs(0, product).to_vector())
            .collect();
        LinearMap::from_columns(&cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> Field {
        Field::Rationals
    }

    /// Matrix units e11, e12, e21, e22 as indices 0..4.
    fn m2() -> Product {
        let unit = |a: usize, b: usize| 2 * a + b;
        let mut triples = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                for d in 0..2 {
                    triples.push((unit(a, b), unit(b, d), unit(a, d), 1));
                }
            }
        }
        Product::from_triples(q(), 4, &triples)
    }

    fn trunc2() -> Product {
        Product::from_triples(q(), 2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)])
    }

    #[test]
    fn product_examples() {
        let p = trunc2();
        let x = Vector::basis(q(), 2, 1);
        assert!(p.eval(&x, &x).is_zero());
        let m = m2();
        let e = |i| Vector::basis(q(), 4, i);
        assert_eq!(m.eval(&e(1), &e(2)), e(0));
        assert!(m.eval(&e(1), &Vector::zeros(q(), 4)).is_zero());
        assert!(m.try_eval(&e(1), &Vector::zeros(q(), 3)).is_err());
    }

    #[test]
    fn twist_examples() {
        let p = trunc2();
        let id = LinearMap::identity(q(), 2);
        assert_eq!(p.twist(&id, &id), p);
        let a = LinearMap::diagonal(q(), &[1, 2]);
        let b = LinearMap::diagonal(q(), &[1, 3]);
        let t = p.twist(&a, &b);
        assert!(t.basis_product(1, 1).is_zero());
        assert_eq!(t.basis_product(0, 1), Vector::from_i64(q(), &[0, 3]));
        assert_eq!(t.basis_product(1, 0), Vector::from_i64(q(), &[0, 2]));
        assert!(p.twist(&id, &LinearMap::zero(q(), 2, 2)).is_zero());
    }

    #[test]
    fn comul_twist_examples() {
        let d = Coproduct::from_triples(q(), 2, &[(0, 0, 0, 1), (1, 1, 1, 1)]);
        let id = LinearMap::identity(q(), 2);
        assert_eq!(d.twist(&id, &id), d);
        assert!(Coproduct::zero(q(), 2).twist(&id, &id).is_zero());
        assert!(d.twist(&LinearMap::zero(q(), 2, 2), &id).is_zero());
        assert!(Coproduct::zero(q(), 3)
            .eval(&Vector::from_i64(q(), &[1, 2, 3]))
            .is_zero());
    }

    #[test]
    fn left_action_on_cube() {
        let m = m2();
        let id = LinearMap::identity(q(), 4);
        let e12 = Vector::basis(q(), 4, 1);
        let t = Tensor::pure(&[&e12, &e12, &e12]);
        let e11 = Vector::basis(q(), 4, 0);
        assert_eq!(t.act_left(&m, &id, &id, &e11), t);
        assert!(t.act_right(&m, &id, &id, &Vector::zeros(q(), 4)).is_zero());
        let zero = Product::zero(q(), 4);
        assert!(t.act_left(&zero, &id, &id, &e11).is_zero());
    }

    #[test]
    fn legs_and_permutations() {
        let e = |i| Vector::basis(q(), 3, i);
        let t = Tensor::pure(&[&e(0), &e(1), &e(2)]);
        assert_eq!(t.permute(&[2, 0, 1]), Tensor::basis(q(), 3, &[2, 0, 1]));
        let d = Coproduct::from_triples(q(), 3, &[(1, 2, 2, 5)]);
        let x = t.expand_leg(1, &d);
        assert_eq!(x.order(), 4);
        assert_eq!(x.get(&[0, 2, 2, 2]), &q().from_i64(5));
        let p = Product::from_triples(q(), 3, &[(2, 2, 0, 1)]);
        assert_eq!(
            x.merge_legs(1, &p),
            Tensor::basis(q(), 3, &[0, 0, 2]).scale(&q().from_i64(5))
        );
    }

    fn small_q() -> impl Strategy<Value = Scalar> {
        (-5i64..=5).prop_map(|x| Field::Rationals.from_i64(x))
    }

    fn vec_q(n: usize) -> impl Strategy<Value = Vector> {
        proptest::collection::vec(small_q(), n).prop_map(Vector::new)
    }

    fn product_q(n: usize) -> impl Strategy<Value = Product> {
        proptest::collection::vec(small_q(), n * n * n)
            .prop_map(move |c| Product::from_flat(Field::Rationals, n, c).unwrap())
    }

    fn diag_q(n: usize) -> impl Strategy<Value = LinearMap> {
        proptest::collection::vec(-4i64..=4, n).prop_map(|d| LinearMap::diagonal(Field::Rationals, &d))
    }

    proptest! {
        #[test]
        fn bilinear_in_both_arguments(
            p in product_q(3), u in vec_q(3), u2 in vec_q(3), v in vec_q(3), l in small_q()
        ) {
            let lhs = p.eval(&(&u + &u2.scale(&l)), &v);
            let mut rhs = p.eval(&u, &v);
            rhs.axpy(&l, &p.eval(&u2, &v));
            prop_assert_eq!(lhs, rhs);
            let lhs = p.eval(&v, &(&u + &u2.scale(&l)));
            let mut rhs = p.eval(&v, &u);
            rhs.axpy(&l, &p.eval(&v, &u2));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn twists_compose(
            p in product_q(3), a in diag_q(3), a2 in diag_q(3), b in diag_q(3), b2 in diag_q(3)
        ) {
            // Diagonal maps commute pairwise.
            let once = p.twist(&a.compose(&a2), &b.compose(&b2));
            let twice = p.twist(&a, &b).twist(&a2, &b2);
            prop_assert_eq!(once, twice);
        }
    }
}
