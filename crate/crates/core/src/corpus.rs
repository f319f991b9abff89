//! The bundled example structures. The files under `corpus/` are rendered
//! from these builders, and a test keeps the two in sync.

use crate::bundle::{Kind, StructureBundle};
use crate::construct::{yau_twist, Mode, TwistKind};
use crate::error::{Error, Result};
use crate::linalg::LinearMap;
use crate::quasitriangular::{coboundary_bialgebra, make_rmatrix};
use crate::scalar::Field;
use crate::tensor::{Coproduct, Product, Tensor};

/// Names of the corpus entries, in file order.
pub const NAMES: [&str; 9] = [
    "trivial_delta0",
    "t2_rational",
    "gd_gf2",
    "trunc3_gf3",
    "m2_rational",
    "m2_r_e12e12",
    "m2_coboundary",
    "upper2_gf2",
    "m2_yau_twist",
];

/// `k[x]/(x^n)` on the basis `1, x, …, x^{n-1}`.
pub fn truncated_polynomials(field: Field, n: usize) -> Product {
    let mut t = Vec::new();
    for i in 0..n {
        for j in 0..n - i {
            t.push((i, j, i + j, 1));
        }
    }
    Product::from_triples(field, n, &t)
}

/// Index of the matrix unit `e_{ab}` (0-based `a`, `b`) in `M₂`.
pub fn m2_unit(a: usize, b: usize) -> usize {
    2 * a + b
}

/// `M₂` on the basis `e11, e12, e21, e22`.
pub fn m2_product(field: Field) -> Product {
    let mut t = Vec::new();
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                t.push((m2_unit(a, b), m2_unit(b, c), m2_unit(a, c), 1));
            }
        }
    }
    Product::from_triples(field, 4, &t)
}

fn m2_rational() -> StructureBundle {
    let q = Field::Rationals;
    StructureBundle::new(q, 4, Kind::BihomAssociative)
        .with_product("mul", m2_product(q))
        .with_identity_maps()
}

fn m2_r_e12e12() -> StructureBundle {
    let e12 = m2_unit(0, 1);
    m2_rational().with_tensor("r", Tensor::basis(Field::Rationals, 4, &[e12, e12]))
}

fn m2_coboundary() -> Result<StructureBundle> {
    let b = m2_r_e12e12();
    let r = make_rmatrix(&b, b.tensor("r")?.clone())?;
    Ok(coboundary_bialgebra(&b, &r, Mode::Verify)?.bundle)
}

/// Twist of the coboundary bialgebra along conjugation by `diag(1, -1)`,
/// which fixes `r` and so respects `Δ_r`.
fn m2_yau_twist() -> Result<StructureBundle> {
    let q = Field::Rationals;
    let conj = LinearMap::diagonal(q, &[1, -1, -1, 1]);
    let b = m2_coboundary()?.with_map("A", conj.clone()).with_map("B", conj);
    let mut out = yau_twist(&b, TwistKind::Infinitesimal, "A", "B", Mode::Verify)?.bundle;
    out.provenance = out.provenance.map(|mut p| {
        p.notes.push("A = B = conjugation by diag(1,-1)".into());
        p
    });
    Ok(out)
}

fn build(name: &str) -> Result<StructureBundle> {
    let q = Field::Rationals;
    let gf = |p: u64| Field::prime(p).expect("prime");
    Ok(match name {
        "trivial_delta0" => StructureBundle::new(q, 2, Kind::InfBialgebra)
            .with_product("mul", truncated_polynomials(q, 2))
            .with_comul("Delta", Coproduct::zero(q, 2))
            .with_identity_maps()
            .with_map("psi", LinearMap::identity(q, 2))
            .with_map("omega", LinearMap::identity(q, 2)),
        "t2_rational" => StructureBundle::new(q, 2, Kind::BihomCommutative)
            .with_product("mul", truncated_polynomials(q, 2))
            .with_identity_maps()
            .with_map("A", LinearMap::diagonal(q, &[1, 2]))
            .with_map("B", LinearMap::diagonal(q, &[1, 3]))
            .with_map("D", LinearMap::diagonal(q, &[0, 1])),
        "gd_gf2" => StructureBundle::new(gf(2), 2, Kind::BihomCommutative)
            .with_product("mul", truncated_polynomials(gf(2), 2))
            .with_identity_maps()
            .with_map("D", LinearMap::from_i64(gf(2), &[&[0, 1], &[0, 0]])),
        "trunc3_gf3" => StructureBundle::new(gf(3), 3, Kind::BihomCommutative)
            .with_product("mul", truncated_polynomials(gf(3), 3))
            .with_identity_maps(),
        "m2_rational" => m2_rational(),
        "m2_r_e12e12" => m2_r_e12e12(),
        "m2_coboundary" => m2_coboundary()?,
        // e11·e11 = e11, e11·e12 = e12.
        "upper2_gf2" => StructureBundle::new(gf(2), 2, Kind::BihomAssociative)
            .with_product("mul", Product::from_triples(gf(2), 2, &[(0, 0, 0, 1), (0, 1, 1, 1)]))
            .with_identity_maps(),
        "m2_yau_twist" => m2_yau_twist()?,
        _ => return Err(Error::InvariantViolation(format!("no corpus entry `{name}`"))),
    })
}

/// The corpus entry called `name`.
pub fn get(name: &str) -> Result<StructureBundle> {
    build(name)
}

/// All entries with their names.
pub fn all() -> Vec<(&'static str, StructureBundle)> {
    NAMES
        .iter()
        .map(|n| (*n, build(n).expect("corpus entries build")))
        .collect()
}

/// Entries that are infinitesimal BiHom-bialgebras.
pub fn inf_bialgebras() -> Vec<(&'static str, StructureBundle)> {
    all()
        .into_iter()
        .filter(|(_, b)| b.kind == Kind::InfBialgebra)
        .collect()
}
