//! Gel'fand–Dorfman type constructions of Novikov products from a
//! commutative product and a derivation.

use crate::bundle::{Kind, StructureBundle};
use crate::check::{self, bihom_commutative, derivation, multiplicative, pairwise_commute};
use crate::error::Result;
use crate::linalg::LinearMap;

use super::{require, ConstructionResult, Mode};

struct GdMaps {
    alpha: LinearMap,
    beta: LinearMap,
    gamma: LinearMap,
    lambda: LinearMap,
    xi: LinearMap,
    d: LinearMap,
}

/// Checks the hypotheses of the general construction and returns
/// `(∗, λα, ξβγ)` with `a∗b = λ(a)·ξD(b)`.
fn gd_core(b: &StructureBundle, m: &GdMaps) -> Result<(crate::Product, LinearMap, LinearMap)> {
    let mul = b.product("mul")?;
    require("input bihom-commutative", bihom_commutative(mul, &m.alpha, &m.beta))?;
    require(
        "gamma, lambda, xi multiplicative",
        multiplicative("gamma", &m.gamma, "mul", mul)
            .merge(multiplicative("lambda", &m.lambda, "mul", mul))
            .merge(multiplicative("xi", &m.xi, "mul", mul)),
    )?;
    require(
        "pairwise commutation",
        pairwise_commute(&[
            ("alpha", &m.alpha),
            ("beta", &m.beta),
            ("gamma", &m.gamma),
            ("lambda", &m.lambda),
            ("xi", &m.xi),
            ("D", &m.d),
        ]),
    )?;
    require("gamma-derivation", derivation(mul, &m.d, &m.gamma, &m.gamma))?;
    let star = mul.twist(&m.lambda, &m.xi.compose(&m.d));
    let a = m.lambda.compose(&m.alpha);
    let bt = LinearMap::chain(&[&m.xi, &m.beta, &m.gamma]);
    Ok((star, a, bt))
}

fn novikov_bundle(b: &StructureBundle, star: crate::Product, alpha: LinearMap, beta: LinearMap) -> StructureBundle {
    StructureBundle::new(b.field, b.dim, Kind::Novikov)
        .with_product("mul", star)
        .with_map("alpha", alpha)
        .with_map("beta", beta)
}

/// General construction on a BiHom-commutative bundle with maps `gamma`,
/// `lambda`, `xi` (each defaulting to the identity when absent) and `D`:
/// `a∗b = λ(a)·ξD(b)` with structure maps `(λα, ξβγ)`.
pub fn gelfand_dorfman(b: &StructureBundle, mode: Mode) -> Result<ConstructionResult> {
    let m = GdMaps {
        alpha: b.map("alpha")?,
        beta: b.map("beta")?,
        gamma: b.map_or_identity("gamma"),
        lambda: b.map_or_identity("lambda"),
        xi: b.map_or_identity("xi"),
        d: b.map("D")?,
    };
    let (star, a, be) = gd_core(b, &m)?;
    ConstructionResult::finish(
        novikov_bundle(b, star, a, be),
        "gd-general",
        &["mul", "alpha", "beta", "gamma", "lambda", "xi", "D"],
        vec![],
        mode,
        check::check_bihom_novikov,
    )
}

/// `λ = αᵖ`, `γ = βʳ`, `ξ = id`: `a∗b = αᵖ(a)·D(b)` with maps
/// `(α^{p+1}, β^{r+1})`. `D` must be a `(βʳ, βʳ)`-derivation.
pub fn gd_cor_p_r(b: &StructureBundle, p: u32, r: u32, mode: Mode) -> Result<ConstructionResult> {
    powers(b, p, r, "gd-cor-p-r", vec![format!("p = {p}, r = {r}")], mode)
}

/// `a∗b = a·D(b)` for an ordinary derivation `D` commuting with `α`, `β`.
pub fn gd_commhom(b: &StructureBundle, mode: Mode) -> Result<ConstructionResult> {
    powers(b, 0, 0, "gd-commhom", vec![], mode)
}

fn powers(
    b: &StructureBundle,
    p: u32,
    r: u32,
    theorem: &str,
    notes: Vec<String>,
    mode: Mode,
) -> Result<ConstructionResult> {
    let (alpha, beta) = (b.map("alpha")?, b.map("beta")?);
    let m = GdMaps {
        gamma: beta.pow(r),
        lambda: alpha.pow(p),
        xi: b.identity(),
        d: b.map("D")?,
        alpha,
        beta,
    };
    let (star, a, be) = gd_core(b, &m)?;
    ConstructionResult::finish(
        novikov_bundle(b, star, a, be),
        theorem,
        &["mul", "alpha", "beta", "D"],
        notes,
        mode,
        check::check_bihom_novikov,
    )
}

/// Checks that `mul` is commutative and associative, that `alpha`, `beta`
/// are commuting algebra maps and `D` a derivation commuting with both.
fn classical_hypotheses(b: &StructureBundle) -> Result<(LinearMap, LinearMap, LinearMap)> {
    let mul = b.product("mul")?;
    let id = b.identity();
    let (alpha, beta, d) = (b.map("alpha")?, b.map("beta")?, b.map("D")?);
    require("input commutative associative", bihom_commutative(mul, &id, &id))?;
    require(
        "alpha, beta commuting algebra maps",
        check::structure_laws("mul", mul, &[("alpha", &alpha), ("beta", &beta)]),
    )?;
    require(
        "D commutes with alpha, beta",
        pairwise_commute(&[("D", &d), ("alpha", &alpha)]).merge(pairwise_commute(&[("D", &d), ("beta", &beta)])),
    )?;
    require("derivation", derivation(mul, &d, &id, &id))?;
    Ok((alpha, beta, d))
}

/// Classical commutative input, commuting algebra maps `α`, `β` and a
/// derivation `D` commuting with both: `a∗b = α(a)·Dβ(b)`, maps `(α, β)`.
pub fn gd_cor_twist(b: &StructureBundle, mode: Mode) -> Result<ConstructionResult> {
    let (alpha, beta, d) = classical_hypotheses(b)?;
    let star = b.product("mul")?.twist(&alpha, &d.compose(&beta));
    ConstructionResult::finish(
        novikov_bundle(b, star, alpha, beta),
        "gd-cor-twist",
        &["mul", "alpha", "beta", "D"],
        vec![],
        mode,
        check::check_bihom_novikov,
    )
}

/// Classical commutative input, an algebra map `gamma` and a
/// `(γ, γ)`-derivation `D` with `Dγ = γD`: `a∗b = a·D(b)`, maps `(id, γ)`.
pub fn gd_gamma(b: &StructureBundle, mode: Mode) -> Result<ConstructionResult> {
    let id = b.identity();
    let m = GdMaps {
        alpha: id.clone(),
        beta: id.clone(),
        gamma: b.map("gamma")?,
        lambda: id.clone(),
        xi: id,
        d: b.map("D")?,
    };
    let (star, a, be) = gd_core(b, &m)?;
    ConstructionResult::finish(
        novikov_bundle(b, star, a, be),
        "gd-gamma",
        &["mul", "gamma", "D"],
        vec![],
        mode,
        check::check_bihom_novikov,
    )
}

/// Under the `gd-commhom` hypotheses, `(A, ·, ∗, α, β)` with `a∗b = a·D(b)`
/// is a Novikov–Poisson bundle.
pub fn np_from_gd(b: &StructureBundle, mode: Mode) -> Result<ConstructionResult> {
    let star = gd_commhom(b, Mode::Trust)?
        .bundle
        .products
        .remove("mul")
        .expect("constructed product");
    let out = StructureBundle::new(b.field, b.dim, Kind::NovikovPoisson)
        .with_product("mul", b.product("mul")?.clone())
        .with_product("star", star)
        .with_map("alpha", b.map("alpha")?)
        .with_map("beta", b.map("beta")?);
    ConstructionResult::finish(
        out,
        "np-from-gd",
        &["mul", "alpha", "beta", "D"],
        vec![],
        mode,
        check::check_novikov_poisson,
    )
}

/// Classical commutative input as in `gd-cor-twist`:
/// `x•y = α(x)·β(y)`, `x∗y = α(x)·Dβ(y)`, maps `(α, β)`.
pub fn cor_4_6(b: &StructureBundle, mode: Mode) -> Result<ConstructionResult> {
    let (alpha, beta, d) = classical_hypotheses(b)?;
    let mul = b.product("mul")?;
    let out = StructureBundle::new(b.field, b.dim, Kind::NovikovPoisson)
        .with_product("mul", mul.twist(&alpha, &beta))
        .with_product("star", mul.twist(&alpha, &d.compose(&beta)))
        .with_map("alpha", alpha)
        .with_map("beta", beta);
    ConstructionResult::finish(
        out,
        "cor-4-6",
        &["mul", "alpha", "beta", "D"],
        vec![],
        mode,
        check::check_novikov_poisson,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::scalar::Field;
    use crate::tensor::Product;
    use crate::Vector;

    fn dual_numbers(f: Field) -> StructureBundle {
        StructureBundle::new(f, 2, Kind::BihomCommutative)
            .with_product(
                "mul",
                Product::from_triples(f, 2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]),
            )
            .with_identity_maps()
    }

    #[test]
    fn zero_derivation_gives_zero_product() {
        let f = Field::Rationals;
        let b = dual_numbers(f).with_map("D", LinearMap::zero(f, 2, 2));
        let r = gelfand_dorfman(&b, Mode::Verify).unwrap();
        assert!(r.bundle.product("mul").unwrap().is_zero());
    }

    #[test]
    fn dual_numbers_with_euler_derivation() {
        let f = Field::Rationals;
        let b = dual_numbers(f).with_map("D", LinearMap::diagonal(f, &[0, 1]));
        let r = gd_commhom(&b, Mode::Verify).unwrap();
        let p = r.bundle.product("mul").unwrap();
        assert_eq!(p.basis_product(0, 1), Vector::basis(f, 2, 1));
        assert!(p.basis_product(1, 1).is_zero());
        assert!(p.basis_product(1, 0).is_zero());
        assert!(p.basis_product(0, 0).is_zero());
        assert_eq!(r.provenance.theorem, "gd-commhom");
    }

    #[test]
    fn classical_case_over_gf2() {
        let f = Field::prime(2).unwrap();
        let d = LinearMap::from_i64(f, &[&[0, 1], &[0, 0]]);
        let b = dual_numbers(f).with_map("D", d);
        let r = gelfand_dorfman(&b, Mode::Verify).unwrap();
        let p = r.bundle.product("mul").unwrap();
        assert_eq!(p.basis_product(1, 1), Vector::basis(f, 2, 1));
        assert_eq!(p.basis_product(0, 1), Vector::basis(f, 2, 0));
        assert!(p.basis_product(0, 0).is_zero());
        assert!(p.basis_product(1, 0).is_zero());
    }

    #[test]
    fn non_derivation_is_rejected() {
        let f = Field::Rationals;
        let b = dual_numbers(f).with_map("D", LinearMap::identity(f, 2));
        match gelfand_dorfman(&b, Mode::Verify) {
            Err(Error::HypothesisFailed { hypothesis, report }) => {
                assert_eq!(hypothesis, "gamma-derivation");
                assert!(report.unwrap().fails("deriv"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn novikov_poisson_from_derivation() {
        let f = Field::Rationals;
        let b = dual_numbers(f)
            .with_map("alpha", LinearMap::diagonal(f, &[1, 2]))
            .with_map("D", LinearMap::diagonal(f, &[0, 1]));
        assert!(np_from_gd(&b, Mode::Verify).is_err(), "input is not BiHom-commutative");
        let r = cor_4_6(
            &b.clone().with_map("beta", LinearMap::diagonal(f, &[1, 3])),
            Mode::Verify,
        )
        .unwrap();
        assert!(r.conclusion.unwrap().passed);
    }
}
