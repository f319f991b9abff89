use crate::bundle::StructureBundle;
use crate::error::Result;
use crate::linalg::LinearMap;
use crate::tensor::{Coproduct, Product};

use super::{commute, comultiplicative, differ_t, multiplicative, pairwise_commute, scan, CheckReport};

/// BiHom-coassociative coalgebra: `commute(psi,omega)`, `ψ` and `ω`
/// comultiplicative, and `BHcoassoc`: `(Δ⊗ψ)Δ = (ω⊗Δ)Δ`.
pub fn bihom_coassociative(d: &Coproduct, psi: &LinearMap, omega: &LinearMap) -> CheckReport {
    commute("psi", psi, "omega", omega)
        .merge(comultiplicative("psi", psi, "Delta", d))
        .merge(comultiplicative("omega", omega, "Delta", d))
        .merge(bhcoassoc_identity(d, psi, omega))
}

pub fn bhcoassoc_identity(d: &Coproduct, psi: &LinearMap, omega: &LinearMap) -> CheckReport {
    CheckReport::from_violations(scan("BHcoassoc", d.dim(), 1, |w| {
        let t = d.basis_image(w[0]);
        differ_t(t.expand_leg(0, d).map_leg(2, psi), t.map_leg(0, omega).expand_leg(1, d))
    }))
}

/// The conditions tying the algebra and coalgebra structure maps together:
/// `infinb` (α, β commute with ψ, ω), `infinbi` (α, β comultiplicative) and
/// `infinbia` (ψ, ω multiplicative), together with the structure-map laws
/// of the coalgebra.
pub fn coalgebra_morphism_data(
    mul: &Product,
    d: &Coproduct,
    alpha: &LinearMap,
    beta: &LinearMap,
    psi: &LinearMap,
    omega: &LinearMap,
) -> CheckReport {
    let mut r = CheckReport::pass();
    for (an, a) in [("alpha", alpha), ("beta", beta)] {
        for (cn, c) in [("psi", psi), ("omega", omega)] {
            r = r.merge(commute(an, a, cn, c));
        }
    }
    r.merge(comultiplicative("alpha", alpha, "Delta", d))
        .merge(comultiplicative("beta", beta, "Delta", d))
        .merge(multiplicative("psi", psi, "mul", mul))
        .merge(multiplicative("omega", omega, "mul", mul))
        .merge(pairwise_commute(&[("psi", psi), ("omega", omega)]))
        .merge(comultiplicative("psi", psi, "Delta", d))
        .merge(comultiplicative("omega", omega, "Delta", d))
}

/// `infin`: `Δ(a·b) = ω(a)·b₁ ⊗ β(b₂) + α(a₁) ⊗ a₂·ψ(b)`.
pub fn infinitesimal_compat(
    mul: &Product,
    d: &Coproduct,
    alpha: &LinearMap,
    beta: &LinearMap,
    psi: &LinearMap,
    omega: &LinearMap,
) -> CheckReport {
    let oc = omega.columns();
    let pc = psi.columns();
    CheckReport::from_violations(scan("infin", mul.dim(), 2, |w| {
        let (a, b) = (w[0], w[1]);
        let lhs = d.eval(&mul.basis_product(a, b));
        let left = mul.left_mult(&oc[a]);
        let right = mul.right_mult(&pc[b]);
        let rhs = d
            .basis_image(b)
            .map_legs(&[Some(&left), Some(beta)])
            .add(&d.basis_image(a).map_legs(&[Some(alpha), Some(&right)]));
        differ_t(lhs, rhs)
    }))
}

pub fn check_bihom_coassociative(b: &StructureBundle) -> Result<CheckReport> {
    Ok(bihom_coassociative(b.comul("Delta")?, &b.map("psi")?, &b.map("omega")?))
}

pub fn check_coalgebra_morphism_data(b: &StructureBundle) -> Result<CheckReport> {
    Ok(coalgebra_morphism_data(
        b.product("mul")?,
        b.comul("Delta")?,
        &b.map("alpha")?,
        &b.map("beta")?,
        &b.map("psi")?,
        &b.map("omega")?,
    ))
}

pub fn check_infinitesimal_compat(b: &StructureBundle) -> Result<CheckReport> {
    Ok(infinitesimal_compat(
        b.product("mul")?,
        b.comul("Delta")?,
        &b.map("alpha")?,
        &b.map("beta")?,
        &b.map("psi")?,
        &b.map("omega")?,
    ))
}
