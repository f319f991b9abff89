//! Helpers shared by the integration tests.
#![allow(dead_code)]

pub mod oracle;

use bihom::corpus::{m2_product, m2_unit, truncated_polynomials};
use bihom::linalg::solve_homogeneous;
use bihom::search::derivation_space_of;
use bihom::{Field, Kind, LinearMap, Product, Scalar, StructureBundle, Tensor, Vector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gf(p: u64) -> Field {
    Field::prime(p).unwrap()
}

pub fn random_vector(f: Field, n: usize, rng: &mut ChaCha8Rng) -> Vector {
    Vector::new((0..n).map(|_| f.random(rng, 3)).collect())
}

pub fn random_nonzero(f: Field, rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let s = f.random(rng, 3);
        if !s.is_zero() {
            return s;
        }
    }
}

/// A 2×2 matrix, row-major.
pub type Mat2 = [[Scalar; 2]; 2];

pub fn mat2(f: Field, m: [[i64; 2]; 2]) -> Mat2 {
    m.map(|r| r.map(|x| f.from_i64(x)))
}

pub fn mul2(a: &Mat2, b: &Mat2) -> Mat2 {
    std::array::from_fn(|i| std::array::from_fn(|j| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j])))
}

pub fn det2(a: &Mat2) -> Scalar {
    &(&a[0][0] * &a[1][1]) - &(&a[0][1] * &a[1][0])
}

pub fn inv2(a: &Mat2) -> Mat2 {
    let d = det2(a).inverse().expect("invertible");
    [[&a[1][1] * &d, &(-&a[0][1]) * &d], [&(-&a[1][0]) * &d, &a[0][0] * &d]]
}

pub fn random_gl2(f: Field, rng: &mut ChaCha8Rng) -> Mat2 {
    loop {
        let g: Mat2 = std::array::from_fn(|_| std::array::from_fn(|_| f.random(rng, 3)));
        if !det2(&g).is_zero() {
            return g;
        }
    }
}

/// The matrix of `X ↦ gXg⁻¹` on `M₂` in the basis `e11, e12, e21, e22`.
pub fn conjugation(f: Field, g: &Mat2) -> LinearMap {
    let gi = inv2(g);
    LinearMap::from_fn(f, 4, 4, |row, col| {
        let (i, j) = (row / 2, row % 2);
        let (a, b) = (col / 2, col % 2);
        &g[i][a] * &gi[b][j]
    })
}

/// `gXg⁻¹` as a vector of `M₂`.
pub fn conjugate_unit(f: Field, g: &Mat2, a: usize, b: usize) -> Vector {
    conjugation(f, g).column(m2_unit(a, b))
}

pub fn m2(f: Field) -> StructureBundle {
    StructureBundle::new(f, 4, Kind::BihomAssociative)
        .with_product("mul", m2_product(f))
        .with_identity_maps()
}

pub fn truncated(f: Field, n: usize) -> StructureBundle {
    StructureBundle::new(f, n, Kind::BihomCommutative)
        .with_product("mul", truncated_polynomials(f, n))
        .with_identity_maps()
}

/// `span(e11, e12)` with `e11·e11 = e11`, `e11·e12 = e12`.
pub fn upper2(f: Field) -> StructureBundle {
    StructureBundle::new(f, 2, Kind::BihomAssociative)
        .with_product("mul", Product::from_triples(f, 2, &[(0, 0, 0, 1), (0, 1, 1, 1)]))
        .with_identity_maps()
}

pub fn pure2(u: &Vector, v: &Vector) -> Tensor {
    Tensor::pure(&[u, v])
}

/// Basis of the `(γ, γ)`-derivations that commute with every map in `maps`.
pub fn commuting_derivations(mul: &Product, gamma: &LinearMap, maps: &[&LinearMap]) -> Vec<LinearMap> {
    let ds = derivation_space_of(mul, gamma, gamma);
    if ds.is_empty() {
        return ds;
    }
    let f = mul.field();
    let k = ds.len();
    let mut rows = Vec::new();
    for m in maps {
        let brackets: Vec<LinearMap> = ds.iter().map(|d| m.compose(d).sub(&d.compose(m))).collect();
        for e in 0..brackets[0].entries().len() {
            rows.push((0..k).map(|c| brackets[c].entries()[e].clone()).collect());
        }
    }
    solve_homogeneous(f, k, rows)
        .into_iter()
        .map(|c| {
            let mut acc = LinearMap::zero(f, mul.dim(), mul.dim());
            for (coef, d) in c.entries().iter().zip(&ds) {
                acc = acc.add(&d.scale(coef));
            }
            acc
        })
        .collect()
}

/// A random map with small entries.
pub fn random_map(f: Field, n: usize, rng: &mut ChaCha8Rng) -> LinearMap {
    LinearMap::from_fn(f, n, n, |_, _| f.random(rng, 2))
}

pub fn coin(rng: &mut ChaCha8Rng) -> bool {
    rng.gen_bool(0.5)
}
