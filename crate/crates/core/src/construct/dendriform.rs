//! Dendriform structures from Rota–Baxter operators and pre-Lie products
//! from dendriform ones.

use crate::bundle::{Kind, StructureBundle};
use crate::check::{self, bihom_associative, commute, multiplicative, rota_baxter};
use crate::error::Result;
use crate::linalg::LinearMap;

use super::{require, ConstructionResult, Mode};

/// `x⋆y = x≻y − (α⁻¹β(y))≺(αβ⁻¹(x))` with maps `(α, β)`. Needs bijective
/// structure maps.
pub fn prelie_from_dendriform(b: &StructureBundle, mode: Mode) -> Result<ConstructionResult> {
    let (alpha, beta) = (b.map("alpha")?, b.map("beta")?);
    let ai = alpha.inverse_named("alpha")?;
    let bi = beta.inverse_named("beta")?;
    let (prec, succ) = (b.product("prec")?, b.product("succ")?);
    require("input dendriform", check::dendriform(prec, succ, &alpha, &beta))?;
    let twisted = prec.twist(&ai.compose(&beta), &alpha.compose(&bi)).opposite();
    let out = StructureBundle::new(b.field, b.dim, Kind::PreLie)
        .with_product("mul", succ.sub(&twisted))
        .with_map("alpha", alpha)
        .with_map("beta", beta);
    ConstructionResult::finish(
        out,
        "prelie-from-dend",
        &["prec", "succ", "alpha", "beta"],
        vec![],
        mode,
        check::check_left_bihom_prelie,
    )
}

/// From a BiHom-associative bundle with a Rota–Baxter operator `R` and a
/// map `eta` (identity when absent): `x≺y = αβ(x)·Rη(y)`,
/// `x≻y = R(x)·αβη(y)`, maps `(α²β, αβ²η)`.
pub fn dendriform_from_rb(b: &StructureBundle, mode: Mode) -> Result<ConstructionResult> {
    let mul = b.product("mul")?;
    let (alpha, beta, r) = (b.map("alpha")?, b.map("beta")?, b.map("R")?);
    let eta = b.map_or_identity("eta");
    require("input bihom-associative", bihom_associative(mul, &alpha, &beta))?;
    require("rota-baxter", rota_baxter(mul, &alpha, &beta, &r))?;
    require(
        "eta commutes with alpha, beta, R and is multiplicative",
        commute("eta", &eta, "alpha", &alpha)
            .merge(commute("eta", &eta, "beta", &beta))
            .merge(commute("eta", &eta, "R", &r))
            .merge(multiplicative("eta", &eta, "mul", mul)),
    )?;
    let ab = alpha.compose(&beta);
    let out = StructureBundle::new(b.field, b.dim, Kind::Dendriform)
        .with_product("prec", mul.twist(&ab, &r.compose(&eta)))
        .with_product("succ", mul.twist(&r, &LinearMap::chain(&[&ab, &eta])))
        .with_map("alpha", LinearMap::chain(&[&alpha, &alpha, &beta]))
        .with_map("beta", LinearMap::chain(&[&alpha, &beta, &beta, &eta]));
    ConstructionResult::finish(
        out,
        "dend-from-rb",
        &["mul", "alpha", "beta", "R", "eta"],
        vec![],
        mode,
        check::check_bihom_dendriform,
    )
}
