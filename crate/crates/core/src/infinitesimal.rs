//! Infinitesimal BiHom-bialgebras: validation, the derivation properties of
//! `Δ` and `μ∘Δ`, and the left BiHom-pre-Lie product they induce.

use crate::bundle::{Kind, StructureBundle};
use crate::check::{
    self, bihom_associative, bihom_coassociative, bimodule_axioms, coalgebra_morphism_data, differ_t, differ_v,
    infinitesimal_compat, scan, CheckReport, InfinitesimalModule,
};
use crate::construct::{require, ConstructionResult, Mode};
use crate::error::{Error, Result};
use crate::linalg::{LinearMap, Vector};
use crate::tensor::{Coproduct, Product};

/// The components of an infinitesimal BiHom-bialgebra.
pub struct InfParts<'a> {
    pub mul: &'a Product,
    pub delta: &'a Coproduct,
    pub alpha: LinearMap,
    pub beta: LinearMap,
    pub psi: LinearMap,
    pub omega: LinearMap,
}

impl<'a> InfParts<'a> {
    pub fn of(b: &'a StructureBundle) -> Result<Self> {
        Ok(InfParts {
            mul: b.product("mul")?,
            delta: b.comul("Delta")?,
            alpha: b.map("alpha")?,
            beta: b.map("beta")?,
            psi: b.map("psi")?,
            omega: b.map("omega")?,
        })
    }

    /// All axioms, with shared conditions reported once.
    pub fn validate(&self) -> CheckReport {
        let (m, d) = (self.mul, self.delta);
        let (a, b, p, o) = (&self.alpha, &self.beta, &self.psi, &self.omega);
        bihom_associative(m, a, b)
            .merge_dedup(bihom_coassociative(d, p, o))
            .merge_dedup(coalgebra_morphism_data(m, d, a, b, p, o))
            .merge_dedup(infinitesimal_compat(m, d, a, b, p, o))
    }

    fn module(&self) -> InfinitesimalModule<'_> {
        InfinitesimalModule {
            mul: self.mul,
            alpha: &self.alpha,
            beta: &self.beta,
            psi: &self.psi,
            omega: &self.omega,
        }
    }

    /// `a∗b = αβ²ψ(b₁)·[α(a)·α²ω(b₂)]`.
    pub fn prelie_product(&self) -> Product {
        let (a, b) = (&self.alpha, &self.beta);
        let left = LinearMap::chain(&[a, b, b, &self.psi]);
        let right = LinearMap::chain(&[a, a, &self.omega]);
        let ac = a.columns();
        let n = self.mul.dim();
        let images: Vec<_> = (0..n)
            .map(|j| self.delta.basis_image(j).map_legs(&[Some(&left), Some(&right)]))
            .collect();
        Product::from_fn(self.mul.field(), n, |i, j| {
            let inner = self.mul.left_mult(&ac[i]);
            images[j].map_leg(1, &inner).merge_legs(0, self.mul).to_vector()
        })
    }

    /// `[β²ψ(b₁)·α(a)]·α²βω(b₂)`.
    fn prelie_product_right(&self) -> Product {
        let (a, b) = (&self.alpha, &self.beta);
        let left = LinearMap::chain(&[b, b, &self.psi]);
        let right = LinearMap::chain(&[a, a, b, &self.omega]);
        let ac = a.columns();
        let n = self.mul.dim();
        let images: Vec<_> = (0..n)
            .map(|j| self.delta.basis_image(j).map_legs(&[Some(&left), Some(&right)]))
            .collect();
        Product::from_fn(self.mul.field(), n, |i, j| {
            let inner = self.mul.right_mult(&ac[i]);
            images[j].map_leg(0, &inner).merge_legs(0, self.mul).to_vector()
        })
    }
}

/// Every axiom of an infinitesimal BiHom-bialgebra.
pub fn validate_inf_bialgebra(b: &StructureBundle) -> Result<CheckReport> {
    Ok(InfParts::of(b)?.validate())
}

fn validated(b: &StructureBundle) -> Result<InfParts<'_>> {
    let parts = InfParts::of(b)?;
    require("input inf-bialgebra", parts.validate())?;
    Ok(parts)
}

/// The bimodule axioms of `A⊗A` with `a·(b⊗c) = ω(a)b⊗β(c)`,
/// `(b⊗c)·a = α(b)⊗cψ(a)`, and `Delta-deriv`: `Δ(ab) = a·Δ(b) + Δ(a)·b`.
pub fn delta_is_bimodule_derivation(b: &StructureBundle) -> Result<CheckReport> {
    let parts = validated(b)?;
    let module = parts.module();
    let report = bimodule_axioms(parts.mul, &parts.alpha, &parts.beta, &module);
    let e = check::basis(b.field, b.dim);
    let (mul, d) = (parts.mul, parts.delta);
    use check::ModuleData;
    let deriv = scan("Delta-deriv", b.dim, 2, |w| {
        let (x, y) = (w[0], w[1]);
        let rhs = module
            .left(&e[x], &d.basis_image(y))
            .expect("left action")
            .add(&module.right(&d.basis_image(x), &e[y]).expect("right action"));
        differ_t(d.eval(&mul.basis_product(x, y)), rhs)
    });
    Ok(report.merge(CheckReport::from_violations(deriv)))
}

/// `D = μ∘Δ`, a `(βψ, αω)`-derivation.
pub fn mu_delta_operator(b: &StructureBundle, mode: Mode) -> Result<LinearMap> {
    let parts = validated(b)?;
    let d = parts.delta.contract(parts.mul);
    if mode == Mode::Verify {
        let tau = parts.beta.compose(&parts.psi);
        let sigma = parts.alpha.compose(&parts.omega);
        let report = check::derivation(parts.mul, &d, &tau, &sigma);
        if !report.passed {
            return Err(Error::ConclusionFailed {
                theorem: "inf-mu-delta".into(),
                report: Box::new(report),
            });
        }
    }
    Ok(d)
}

/// The left BiHom-pre-Lie algebra `(A, ∗, α²β, α²β²ψω)` with
/// `a∗b = αβ²ψ(b₁)·[α(a)·α²ω(b₂)]`.
pub fn inf_prelie(b: &StructureBundle, mode: Mode) -> Result<ConstructionResult> {
    let parts = validated(b)?;
    inf_prelie_of(b, &parts, mode)
}

/// `inf_prelie` without validating the input; for search loops that have
/// already done so.
pub fn inf_prelie_unchecked(b: &StructureBundle, mode: Mode) -> Result<ConstructionResult> {
    inf_prelie_of(b, &InfParts::of(b)?, mode)
}

fn inf_prelie_of(b: &StructureBundle, parts: &InfParts<'_>, mode: Mode) -> Result<ConstructionResult> {
    let (a, be) = (&parts.alpha, &parts.beta);
    let out = StructureBundle::new(b.field, b.dim, Kind::PreLie)
        .with_product("mul", parts.prelie_product())
        .with_map("alpha", LinearMap::chain(&[a, a, be]))
        .with_map("beta", LinearMap::chain(&[a, a, be, be, &parts.psi, &parts.omega]));
    ConstructionResult::finish(
        out,
        "inf-prelie",
        &["mul", "Delta", "alpha", "beta", "psi", "omega"],
        vec![],
        mode,
        check::check_left_bihom_prelie,
    )
}

/// `inf-prelie-forms`: the two expressions for `a∗b` agree.
pub fn bihomify_equal_formula(b: &StructureBundle) -> Result<CheckReport> {
    let parts = validated(b)?;
    let (p, q) = (parts.prelie_product(), parts.prelie_product_right());
    Ok(CheckReport::from_violations(scan("inf-prelie-forms", b.dim, 2, |w| {
        differ_v(p.basis_product(w[0], w[1]), q.basis_product(w[0], w[1]))
    })))
}

/// The derivation `D(a) = αβψ(a₁)·α²ω(a₂)` whose Gel'fand–Dorfman product
/// `αβ(a)·D(b)` reproduces `inf_prelie` when `μ` is BiHom-commutative.
pub fn commutative_gd_derivation(b: &StructureBundle) -> Result<LinearMap> {
    let parts = InfParts::of(b)?;
    let (a, be) = (&parts.alpha, &parts.beta);
    let left = LinearMap::chain(&[a, be, &parts.psi]);
    let right = LinearMap::chain(&[a, a, &parts.omega]);
    let cols: Vec<Vector> = (0..b.dim)
        .map(|j| {
            parts
                .delta
                .basis_image(j)
                .map_legs(&[Some(&left), Some(&right)])
                .merge_legs(0, parts.mul)
                .to_vector()
        })
        .collect();
    Ok(LinearMap::from_columns(&cols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn m2(q: Field) -> Product {
        let unit = |a: usize, b: usize| 2 * a + b;
        let mut t = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    t.push((unit(a, b), unit(b, c), unit(a, c), 1));
                }
            }
        }
        Product::from_triples(q, 4, &t)
    }

    fn inf(mul: Product, delta: Coproduct) -> StructureBundle {
        let id = LinearMap::identity(mul.field(), mul.dim());
        StructureBundle::new(mul.field(), mul.dim(), Kind::InfBialgebra)
            .with_product("mul", mul)
            .with_comul("Delta", delta)
            .with_map("alpha", id.clone())
            .with_map("beta", id.clone())
            .with_map("psi", id.clone())
            .with_map("omega", id)
    }

    /// Δ_r for r = e12⊗e12 on M₂: e11 ↦ −e12⊗e12, e21 ↦ e12⊗e11 − e22⊗e12,
    /// e22 ↦ e12⊗e12.
    fn m2_coboundary(q: Field) -> StructureBundle {
        let d = Coproduct::from_triples(q, 4, &[(0, 1, 1, -1), (2, 1, 0, 1), (2, 3, 1, -1), (3, 1, 1, 1)]);
        inf(m2(q), d)
    }

    #[test]
    fn zero_comultiplication() {
        let q = Field::Rationals;
        let b = inf(m2(q), Coproduct::zero(q, 4));
        assert!(validate_inf_bialgebra(&b).unwrap().passed);
        assert!(delta_is_bimodule_derivation(&b).unwrap().passed);
        assert!(mu_delta_operator(&b, Mode::Verify).unwrap().is_zero());
        assert!(inf_prelie(&b, Mode::Verify)
            .unwrap()
            .bundle
            .product("mul")
            .unwrap()
            .is_zero());
        assert!(bihomify_equal_formula(&b).unwrap().passed);
    }

    #[test]
    fn matrix_coboundary_example() {
        let q = Field::Rationals;
        let b = m2_coboundary(q);
        assert!(validate_inf_bialgebra(&b).unwrap().passed);
        assert!(delta_is_bimodule_derivation(&b).unwrap().passed);
        assert!(mu_delta_operator(&b, Mode::Verify).unwrap().is_zero());
        assert!(bihomify_equal_formula(&b).unwrap().passed);
        let star = inf_prelie(&b, Mode::Verify).unwrap();
        let p = star.bundle.product("mul").unwrap();
        assert_eq!(p.basis_product(2, 3), Vector::basis(q, 4, 1));
        assert!(p.basis_product(0, 3).is_zero());
        assert!(star.conclusion.unwrap().passed);
    }

    #[test]
    fn invalid_input_is_a_hypothesis_failure() {
        let q = Field::Rationals;
        let b = inf(m2(q), Coproduct::from_triples(q, 4, &[(0, 0, 0, 1)]));
        assert!(!validate_inf_bialgebra(&b).unwrap().passed);
        assert!(matches!(
            inf_prelie(&b, Mode::Verify),
            Err(Error::HypothesisFailed { .. })
        ));
    }
}
