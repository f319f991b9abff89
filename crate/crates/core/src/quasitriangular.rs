//! Coboundary and quasitriangular infinitesimal BiHom-bialgebras built from
//! an element `r ∈ A⊗A`, the associative BiHom-Yang–Baxter equation and the
//! Rota–Baxter operator attached to a solution.

use crate::bundle::{Kind, StructureBundle};
use crate::check::{self, differ_t, differ_v, scan, CheckReport, Value, Violation};
use crate::construct::{dendriform_from_rb, prelie_from_dendriform, ConstructionResult, Mode};
use crate::error::{Error, Result};
use crate::infinitesimal::{self, inf_prelie};
use crate::linalg::LinearMap;
use crate::tensor::{Coproduct, Product, Tensor};

/// `r = Σ x_i ⊗ y_i`, invariant under `α⊗α` and `β⊗β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    r: Tensor,
}

impl RMatrix {
    pub fn tensor(&self) -> &Tensor {
        &self.r
    }

    pub fn into_tensor(self) -> Tensor {
        self.r
    }
}

/// Wraps `r` after checking its shape and invariance.
pub fn make_rmatrix(b: &StructureBundle, r: Tensor) -> Result<RMatrix> {
    if r.order() != 2 || r.dim() != b.dim {
        return Err(Error::dims(
            format!("order-2 tensor of dim {}", b.dim),
            format!("order-{} tensor of dim {}", r.order(), r.dim()),
        ));
    }
    if r.field() != b.field {
        return Err(Error::FieldMismatch(b.field.to_string(), r.field().to_string()));
    }
    for name in ["alpha", "beta"] {
        let m = b.map(name)?;
        if r.map_legs(&[Some(&m), Some(&m)]) != r {
            return Err(Error::InvarianceFailed { map: name.into() });
        }
    }
    Ok(RMatrix { r })
}

/// The bundle's tensor `r` as an `RMatrix`.
pub fn bundle_rmatrix(b: &StructureBundle) -> Result<RMatrix> {
    make_rmatrix(b, b.tensor("r")?.clone())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AybeComponents {
    pub r13r12: Tensor,
    pub r12r23: Tensor,
    pub r23r13: Tensor,
    /// `r13r12 − r12r23 + r23r13`.
    pub a_r: Tensor,
}

/// The three double products and `A(r)`.
pub fn aybe_components(b: &StructureBundle, r: &RMatrix) -> Result<AybeComponents> {
    let mul = b.product("mul")?;
    let (alpha, beta) = (b.map("alpha")?, b.map("beta")?);
    let rr = r.r.outer(&r.r);
    // rr = x_i ⊗ y_i ⊗ x_j ⊗ y_j; reorder to x_i ⊗ x_j ⊗ y_j ⊗ y_i.
    let crossed = rr.permute(&[0, 2, 3, 1]);
    let r12r23 = rr.map_legs(&[Some(&alpha), None, None, Some(&beta)]).merge_legs(1, mul);
    let r13r12 = crossed.merge_legs(0, mul).map_legs(&[None, Some(&beta), Some(&beta)]);
    let r23r13 = crossed.merge_legs(2, mul).map_legs(&[Some(&alpha), Some(&alpha), None]);
    let a_r = r13r12.sub(&r12r23).add(&r23r13);
    Ok(AybeComponents {
        r13r12,
        r12r23,
        r23r13,
        a_r,
    })
}

/// `AYBE`: one violation per nonzero coefficient of `A(r)`.
pub fn check_aybe(b: &StructureBundle, r: &RMatrix) -> Result<CheckReport> {
    let a = aybe_components(b, r)?.a_r;
    let zero = b.field.zero();
    Ok(CheckReport::from_violations(
        a.terms()
            .map(|(idx, c)| Violation {
                identity: "AYBE".into(),
                witness: idx,
                lhs: Value::Scalar(c.clone()),
                rhs: Value::Scalar(zero.clone()),
            })
            .collect(),
    ))
}

/// `centrality`: `a•A(r) = A(r)•a` for every basis vector `a`.
pub fn check_centrality(b: &StructureBundle, r: &RMatrix) -> Result<CheckReport> {
    let mul = b.product("mul")?;
    let (alpha, beta) = (b.map("alpha")?, b.map("beta")?);
    let a_r = aybe_components(b, r)?.a_r;
    let e = check::basis(b.field, b.dim);
    Ok(CheckReport::from_violations(scan("centrality", b.dim, 1, |w| {
        differ_t(
            a_r.act_left(mul, &alpha, &beta, &e[w[0]]),
            a_r.act_right(mul, &alpha, &beta, &e[w[0]]),
        )
    })))
}

/// `Δ_r(a) = Σ α(x_i)⊗y_i·a − Σ a·x_i⊗β(y_i)`.
pub fn delta_r(b: &StructureBundle, r: &RMatrix) -> Result<Coproduct> {
    let mul = b.product("mul")?;
    let (alpha, beta) = (b.map("alpha")?, b.map("beta")?);
    let e = check::basis(b.field, b.dim);
    Ok(Coproduct::from_fn(b.field, b.dim, |i| {
        let right = mul.right_mult(&e[i]);
        let left = mul.left_mult(&e[i]);
        r.r.map_legs(&[Some(&alpha), Some(&right)])
            .sub(&r.r.map_legs(&[Some(&left), Some(&beta)]))
    }))
}

/// `(A, μ, Δ_r, α, β, ψ = β, ω = α)`; needs `A(r)` central.
pub fn coboundary_bialgebra(b: &StructureBundle, r: &RMatrix, mode: Mode) -> Result<ConstructionResult> {
    let centrality = check_centrality(b, r)?;
    if !centrality.passed {
        return Err(Error::CentralityFailed {
            report: Box::new(centrality),
        });
    }
    let (alpha, beta) = (b.map("alpha")?, b.map("beta")?);
    let out = StructureBundle::new(b.field, b.dim, Kind::InfBialgebra)
        .with_product("mul", b.product("mul")?.clone())
        .with_comul("Delta", delta_r(b, r)?)
        .with_map("psi", beta.clone())
        .with_map("omega", alpha.clone())
        .with_map("alpha", alpha)
        .with_map("beta", beta)
        .with_tensor("r", r.r.clone());
    ConstructionResult::finish(
        out,
        "coboundary",
        &["mul", "alpha", "beta", "r"],
        vec![],
        mode,
        infinitesimal::validate_inf_bialgebra,
    )
}

/// `qt-i`: `Δ = Δ_r`; `qt-ii`: `(Δ⊗β)(r) = r23r13`;
/// `qt-iii`: `(α⊗Δ)(r) = −r13r12`.
pub fn check_quasitriangular_characterization(b: &StructureBundle, r: &RMatrix) -> Result<CheckReport> {
    let (alpha, beta) = (b.map("alpha")?, b.map("beta")?);
    if b.map("psi")? != beta || b.map("omega")? != alpha {
        return Err(Error::HypothesisFailed {
            hypothesis: "psi = beta and omega = alpha".into(),
            report: None,
        });
    }
    let delta = b.comul("Delta")?;
    let dr = delta_r(b, r)?;
    let comps = aybe_components(b, r)?;
    let mut report = CheckReport::from_violations(scan("qt-i", b.dim, 1, |w| {
        differ_t(delta.basis_image(w[0]), dr.basis_image(w[0]))
    }));
    let whole = |id: &str, lhs: Tensor, rhs: Tensor| {
        differ_t(lhs, rhs).map(|(lhs, rhs)| Violation {
            identity: id.into(),
            witness: vec![],
            lhs,
            rhs,
        })
    };
    let ii = r.r.expand_leg(0, delta).map_leg(2, &beta);
    let iii = r.r.map_leg(0, &alpha).expand_leg(1, delta);
    report.extend(whole("qt-ii", ii, comps.r23r13).into_iter().collect());
    report.extend(whole("qt-iii", iii, comps.r13r12.neg()).into_iter().collect());
    Ok(report)
}

/// The operator `R(a) = Σ αβ³(x_i)·(a·α³(y_i))`; needs `A(r) = 0`.
/// Verify mode checks the Rota–Baxter laws and the second expression
/// `Σ (β³(x_i)·a)·α³β(y_i)` (`rb-forms`).
pub fn rb_from_r(b: &StructureBundle, r: &RMatrix, mode: Mode) -> Result<LinearMap> {
    let aybe = check_aybe(b, r)?;
    if !aybe.passed {
        return Err(Error::AybeFailed { report: Box::new(aybe) });
    }
    let mul = b.product("mul")?;
    let (alpha, beta) = (b.map("alpha")?, b.map("beta")?);
    let (a3, b3) = (alpha.pow(3), beta.pow(3));
    let op = rb_operator(mul, &r.r, &alpha.compose(&b3), &a3, false);
    if mode == Mode::Verify {
        let other = rb_operator(mul, &r.r, &b3, &a3.compose(&beta), true);
        let mut report = check::rota_baxter(mul, &alpha, &beta, &op);
        report.extend(scan("rb-forms", b.dim, 1, |w| {
            differ_v(op.column(w[0]), other.column(w[0]))
        }));
        if !report.passed {
            return Err(Error::ConclusionFailed {
                theorem: "rb-from-r".into(),
                report: Box::new(report),
            });
        }
    }
    Ok(op)
}

/// `a ↦ Σ f(x_i)·(a·g(y_i))`, or `Σ (f(x_i)·a)·g(y_i)` when `right`.
fn rb_operator(mul: &Product, r: &Tensor, f: &LinearMap, g: &LinearMap, right: bool) -> LinearMap {
    let t = r.map_legs(&[Some(f), Some(g)]);
    let cols: Vec<_> = check::basis(mul.field(), mul.dim())
        .iter()
        .map(|a| {
            let moved = if right {
                t.map_leg(0, &mul.right_mult(a))
            } else {
                t.map_leg(1, &mul.left_mult(a))
            };
            moved.merge_legs(0, mul).to_vector()
        })
        .collect();
    LinearMap::from_columns(&cols)
}

/// The two pre-Lie products attached to a solution `r` of the AYBE with
/// bijective `α`, `β`: `∗` from the coboundary bialgebra and `⋆` from the
/// dendriform structure of `R = rb_from_r` with `η = α²β`. Reports every
/// product entry (`coincidence`) and structure map (`coincidence-alpha`,
/// `coincidence-beta`) where they differ.
pub fn coincidence_check(b: &StructureBundle, r: &RMatrix) -> Result<CheckReport> {
    let aybe = check_aybe(b, r)?;
    if !aybe.passed {
        return Err(Error::AybeFailed { report: Box::new(aybe) });
    }
    let (alpha, beta) = (b.map("alpha")?, b.map("beta")?);
    alpha.inverse_named("alpha")?;
    beta.inverse_named("beta")?;

    let star = inf_prelie(&coboundary_bialgebra(b, r, Mode::Verify)?.bundle, Mode::Verify)?.bundle;
    let rb = rb_from_r(b, r, Mode::Verify)?;
    let with_rb = StructureBundle::new(b.field, b.dim, Kind::RotaBaxter)
        .with_product("mul", b.product("mul")?.clone())
        .with_map("alpha", alpha.clone())
        .with_map("beta", beta.clone())
        .with_map("R", rb)
        .with_map("eta", LinearMap::chain(&[&alpha, &alpha, &beta]));
    let dend = dendriform_from_rb(&with_rb, Mode::Verify)?.bundle;
    let other = prelie_from_dendriform(&dend, Mode::Verify)?.bundle;
    Ok(compare_products(&star, &other))
}

fn compare_products(x: &StructureBundle, y: &StructureBundle) -> CheckReport {
    let (p, q) = (&x.products["mul"], &y.products["mul"]);
    let mut report = CheckReport::from_violations(scan("coincidence", x.dim, 2, |w| {
        differ_v(p.basis_product(w[0], w[1]), q.basis_product(w[0], w[1]))
    }));
    for name in ["alpha", "beta"] {
        let (m, n) = (&x.maps[name], &y.maps[name]);
        if m != n {
            report.extend(vec![Violation {
                identity: format!("coincidence-{name}"),
                witness: vec![],
                lhs: Value::Map(m.clone()),
                rhs: Value::Map(n.clone()),
            }]);
        }
    }
    report
}

/// Convenience wrapper returning the full `ConstructionResult` of the
/// coboundary bialgebra for the bundle's own tensor `r`.
pub fn coboundary_from_bundle(b: &StructureBundle, mode: Mode) -> Result<ConstructionResult> {
    coboundary_bialgebra(b, &bundle_rmatrix(b)?, mode)
}
