use crate::bundle::StructureBundle;
use crate::error::Result;
use crate::linalg::{LinearMap, Vector};
use crate::tensor::Product;

use super::{basis, differ_v, scan, structure_laws, CheckReport};

/// Which of the mirror-image axiom variants to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// Images of the basis under the maps an identity needs.
struct Images {
    e: Vec<Vector>,
    a: Vec<Vector>,
    b: Vec<Vector>,
    ab: Vec<Vector>,
}

impl Images {
    fn new(p: &Product, alpha: &LinearMap, beta: &LinearMap) -> Self {
        let e = basis(p.field(), p.dim());
        Images {
            a: alpha.columns(),
            b: beta.columns(),
            ab: alpha.compose(beta).columns(),
            e,
        }
    }
}

fn report(vs: Vec<super::Violation>) -> CheckReport {
    CheckReport::from_violations(vs)
}

/// `BHassoc`: `α(x)·(y·z) = (x·y)·β(z)`.
pub fn bhassoc_identity(p: &Product, alpha: &LinearMap, beta: &LinearMap) -> CheckReport {
    let im = Images::new(p, alpha, beta);
    report(scan("BHassoc", p.dim(), 3, |w| {
        let (x, y, z) = (w[0], w[1], w[2]);
        differ_v(
            p.eval(&im.a[x], &p.basis_product(y, z)),
            p.eval(&p.basis_product(x, y), &im.b[z]),
        )
    }))
}

/// BiHom-associative algebra: structure-map laws and `BHassoc`.
pub fn bihom_associative(p: &Product, alpha: &LinearMap, beta: &LinearMap) -> CheckReport {
    structure_laws("mul", p, &[("alpha", alpha), ("beta", beta)]).merge(bhassoc_identity(p, alpha, beta))
}

/// `BHcomm`: `β(a)·α(b) = β(b)·α(a)`.
pub fn bhcomm_identity(p: &Product, alpha: &LinearMap, beta: &LinearMap) -> CheckReport {
    let im = Images::new(p, alpha, beta);
    report(scan("BHcomm", p.dim(), 2, |w| {
        let (x, y) = (w[0], w[1]);
        differ_v(p.eval(&im.b[x], &im.a[y]), p.eval(&im.b[y], &im.a[x]))
    }))
}

/// BiHom-commutative algebra: BiHom-associative plus `BHcomm`.
pub fn bihom_commutative(p: &Product, alpha: &LinearMap, beta: &LinearMap) -> CheckReport {
    bihom_associative(p, alpha, beta).merge(bhcomm_identity(p, alpha, beta))
}

/// `lBHpL`: `αβ(x)·(α(y)·z) − (β(x)·α(y))·β(z)` is symmetric in `x, y`.
pub fn prelie_identity(p: &Product, alpha: &LinearMap, beta: &LinearMap) -> CheckReport {
    let im = Images::new(p, alpha, beta);
    let f = |x: usize, y: usize, z: usize| {
        &p.eval(&im.ab[x], &p.eval(&im.a[y], &im.e[z])) - &p.eval(&p.eval(&im.b[x], &im.a[y]), &im.b[z])
    };
    report(scan("lBHpL", p.dim(), 3, |w| {
        differ_v(f(w[0], w[1], w[2]), f(w[1], w[0], w[2]))
    }))
}

/// Left BiHom-pre-Lie algebra.
pub fn left_prelie(p: &Product, alpha: &LinearMap, beta: &LinearMap) -> CheckReport {
    structure_laws("mul", p, &[("alpha", alpha), ("beta", beta)]).merge(prelie_identity(p, alpha, beta))
}

/// `BiNoviko` and `Binovikov` for a product, without the structure-map laws.
pub fn novikov_identities(p: &Product, alpha: &LinearMap, beta: &LinearMap) -> CheckReport {
    let im = Images::new(p, alpha, beta);
    let g = |x: usize, y: usize, z: usize| {
        &p.eval(&p.eval(&im.b[x], &im.a[y]), &im.b[z]) - &p.eval(&im.ab[x], &p.eval(&im.a[y], &im.e[z]))
    };
    let n = p.dim();
    let mut r = report(scan("BiNoviko", n, 3, |w| {
        differ_v(g(w[0], w[1], w[2]), g(w[1], w[0], w[2]))
    }));
    r.extend(scan("Binovikov", n, 3, |w| {
        let (x, y, z) = (w[0], w[1], w[2]);
        differ_v(
            p.eval(&p.eval(&im.e[x], &im.b[y]), &im.ab[z]),
            p.eval(&p.eval(&im.e[x], &im.b[z]), &im.ab[y]),
        )
    }));
    r
}

/// BiHom-Novikov algebra, the product being named `name` in the ids.
pub fn novikov_named(name: &str, p: &Product, alpha: &LinearMap, beta: &LinearMap) -> CheckReport {
    structure_laws(name, p, &[("alpha", alpha), ("beta", beta)]).merge(novikov_identities(p, alpha, beta))
}

pub fn novikov(p: &Product, alpha: &LinearMap, beta: &LinearMap) -> CheckReport {
    novikov_named("mul", p, alpha, beta)
}

/// `leftBHleibniz` or `rightBHleibniz` for a bracket.
pub fn leibniz_identity(br: &Product, alpha: &LinearMap, beta: &LinearMap, side: Side) -> CheckReport {
    let im = Images::new(br, alpha, beta);
    let b = |u: &Vector, v: &Vector| br.eval(u, v);
    match side {
        Side::Left => report(scan("leftBHleibniz", br.dim(), 3, |w| {
            let (x, y, z) = (w[0], w[1], w[2]);
            differ_v(
                b(&im.ab[x], &br.basis_product(y, z)),
                &b(&b(&im.b[x], &im.e[y]), &im.b[z]) + &b(&im.b[y], &b(&im.a[x], &im.e[z])),
            )
        })),
        Side::Right => report(scan("rightBHleibniz", br.dim(), 3, |w| {
            let (x, y, z) = (w[0], w[1], w[2]);
            differ_v(
                b(&br.basis_product(x, y), &im.ab[z]),
                &b(&b(&im.e[x], &im.b[z]), &im.a[y]) + &b(&im.a[x], &b(&im.e[y], &im.a[z])),
            )
        })),
    }
}

/// BiHom-Leibniz algebra on the given side.
pub fn leibniz(br: &Product, alpha: &LinearMap, beta: &LinearMap, side: Side) -> CheckReport {
    structure_laws("bracket", br, &[("alpha", alpha), ("beta", beta)]).merge(leibniz_identity(br, alpha, beta, side))
}

/// `BHskewsym`: `[β(x), α(y)] = −[β(y), α(x)]`.
pub fn skew_symmetry(br: &Product, alpha: &LinearMap, beta: &LinearMap) -> CheckReport {
    let im = Images::new(br, alpha, beta);
    report(scan("BHskewsym", br.dim(), 2, |w| {
        let (x, y) = (w[0], w[1]);
        differ_v(br.eval(&im.b[x], &im.a[y]), -&br.eval(&im.b[y], &im.a[x]))
    }))
}

/// BiHom-Lie algebra on the given side: Leibniz plus skew-symmetry.
pub fn lie(br: &Product, alpha: &LinearMap, beta: &LinearMap, side: Side) -> CheckReport {
    leibniz(br, alpha, beta, side).merge(skew_symmetry(br, alpha, beta))
}

/// BiHom-dendriform algebra, ids `dend1`, `dend3-*`, `dend5-*`, `dend6`..`dend8`.
pub fn dendriform(prec: &Product, succ: &Product, alpha: &LinearMap, beta: &LinearMap) -> CheckReport {
    let n = prec.dim();
    let mut r = super::commute("alpha", alpha, "beta", beta);
    if !r.passed {
        r.violations[0].identity = "dend1".into();
    }
    for (id, m, p) in [
        ("dend3-prec", alpha, prec),
        ("dend3-succ", alpha, succ),
        ("dend5-prec", beta, prec),
        ("dend5-succ", beta, succ),
    ] {
        let mut part = super::multiplicative("", m, "", p);
        for v in &mut part.violations {
            v.identity = id.into();
        }
        r = r.merge(part);
    }
    let im = Images::new(prec, alpha, beta);
    let pr = |u: &Vector, v: &Vector| prec.eval(u, v);
    let su = |u: &Vector, v: &Vector| succ.eval(u, v);
    r.extend(scan("dend6", n, 3, |w| {
        let (x, y, z) = (&im.e[w[0]], &im.e[w[1]], &im.e[w[2]]);
        differ_v(pr(&pr(x, y), &im.b[w[2]]), pr(&im.a[w[0]], &(&pr(y, z) + &su(y, z))))
    }));
    r.extend(scan("dend7", n, 3, |w| {
        let (x, y, z) = (&im.e[w[0]], &im.e[w[1]], &im.e[w[2]]);
        differ_v(pr(&su(x, y), &im.b[w[2]]), su(&im.a[w[0]], &pr(y, z)))
    }));
    r.extend(scan("dend8", n, 3, |w| {
        let (x, y, z) = (&im.e[w[0]], &im.e[w[1]], &im.e[w[2]]);
        differ_v(su(&im.a[w[0]], &su(y, z)), su(&(&pr(x, y) + &su(x, y)), &im.b[w[2]]))
    }));
    r
}

/// The compatibility identity `NP-4.1`.
pub fn np_41(mul: &Product, star: &Product, alpha: &LinearMap, beta: &LinearMap) -> CheckReport {
    let im = Images::new(mul, alpha, beta);
    let h = |x: usize, y: usize, z: usize| {
        &mul.eval(&star.eval(&im.b[x], &im.a[y]), &im.b[z]) - &star.eval(&im.ab[x], &mul.eval(&im.a[y], &im.e[z]))
    };
    report(scan("NP-4.1", mul.dim(), 3, |w| {
        differ_v(h(w[0], w[1], w[2]), h(w[1], w[0], w[2]))
    }))
}

/// `NP-4.2`: `(x·β(y))∗αβ(z) = (x∗β(z))·αβ(y)`.
pub fn np_42(mul: &Product, star: &Product, alpha: &LinearMap, beta: &LinearMap) -> CheckReport {
    let im = Images::new(mul, alpha, beta);
    report(scan("NP-4.2", mul.dim(), 3, |w| {
        let (x, y, z) = (w[0], w[1], w[2]);
        differ_v(
            star.eval(&mul.eval(&im.e[x], &im.b[y]), &im.ab[z]),
            mul.eval(&star.eval(&im.e[x], &im.b[z]), &im.ab[y]),
        )
    }))
}

/// `NP-new`: `α(x)·(y∗z) = (x·y)∗β(z)`.
pub fn np_new(mul: &Product, star: &Product, alpha: &LinearMap, beta: &LinearMap) -> CheckReport {
    let im = Images::new(mul, alpha, beta);
    report(scan("NP-new", mul.dim(), 3, |w| {
        let (x, y, z) = (w[0], w[1], w[2]);
        differ_v(
            mul.eval(&im.a[x], &star.basis_product(y, z)),
            star.eval(&mul.basis_product(x, y), &im.b[z]),
        )
    }))
}

/// BiHom-Novikov–Poisson algebra: `mul` BiHom-commutative, `star`
/// BiHom-Novikov, and the three compatibilities.
pub fn novikov_poisson(mul: &Product, star: &Product, alpha: &LinearMap, beta: &LinearMap) -> CheckReport {
    bihom_commutative(mul, alpha, beta)
        .merge(novikov_named("star", star, alpha, beta))
        .merge(np_41(mul, star, alpha, beta))
        .merge(np_42(mul, star, alpha, beta))
        .merge(np_new(mul, star, alpha, beta))
}

/// The two sides of the equivalence between `NP-4.2` and `NP-new` for
/// bijective structure maps. Refuses singular maps.
pub fn lemma_3_1(
    mul: &Product,
    star: &Product,
    alpha: &LinearMap,
    beta: &LinearMap,
) -> Result<(CheckReport, CheckReport)> {
    alpha.inverse_named("alpha")?;
    beta.inverse_named("beta")?;
    Ok((np_42(mul, star, alpha, beta), np_new(mul, star, alpha, beta)))
}

/// `deriv`: `D(a·b) = D(a)·τ(b) + σ(a)·D(b)`.
pub fn derivation(p: &Product, d: &LinearMap, tau: &LinearMap, sigma: &LinearMap) -> CheckReport {
    let dc = d.columns();
    let tc = tau.columns();
    let sc = sigma.columns();
    report(scan("deriv", p.dim(), 2, |w| {
        let (i, j) = (w[0], w[1]);
        differ_v(
            d.apply(&p.basis_product(i, j)),
            &p.eval(&dc[i], &tc[j]) + &p.eval(&sc[i], &dc[j]),
        )
    }))
}

/// αβ-Rota–Baxter operator: `R` commutes with `α`, `β` and satisfies `generRB`.
pub fn rota_baxter(p: &Product, alpha: &LinearMap, beta: &LinearMap, r: &LinearMap) -> CheckReport {
    let ab = alpha.compose(beta);
    let rab = r.compose(&ab).columns();
    let rc = r.columns();
    let abc = ab.columns();
    let laws = super::commute("R", r, "alpha", alpha).merge(super::commute("R", r, "beta", beta));
    laws.merge(report(scan("generRB", p.dim(), 2, |w| {
        let (a, b) = (w[0], w[1]);
        differ_v(
            p.eval(&rab[a], &rab[b]),
            r.apply(&(&p.eval(&abc[a], &rc[b]) + &p.eval(&rc[a], &abc[b]))),
        )
    })))
}

fn mab(b: &StructureBundle) -> Result<(&Product, LinearMap, LinearMap)> {
    Ok((b.product("mul")?, b.map("alpha")?, b.map("beta")?))
}

pub fn check_bihom_associative(b: &StructureBundle) -> Result<CheckReport> {
    let (p, a, be) = mab(b)?;
    Ok(bihom_associative(p, &a, &be))
}

pub fn check_bihom_commutative(b: &StructureBundle) -> Result<CheckReport> {
    let (p, a, be) = mab(b)?;
    Ok(bihom_commutative(p, &a, &be))
}

pub fn check_left_bihom_prelie(b: &StructureBundle) -> Result<CheckReport> {
    let (p, a, be) = mab(b)?;
    Ok(left_prelie(p, &a, &be))
}

pub fn check_bihom_novikov(b: &StructureBundle) -> Result<CheckReport> {
    let (p, a, be) = mab(b)?;
    Ok(novikov(p, &a, &be))
}

pub fn check_bihom_leibniz(b: &StructureBundle, side: Side) -> Result<CheckReport> {
    Ok(leibniz(b.product("bracket")?, &b.map("alpha")?, &b.map("beta")?, side))
}

pub fn check_bihom_lie(b: &StructureBundle, side: Side) -> Result<CheckReport> {
    Ok(lie(b.product("bracket")?, &b.map("alpha")?, &b.map("beta")?, side))
}

pub fn check_bihom_dendriform(b: &StructureBundle) -> Result<CheckReport> {
    Ok(dendriform(
        b.product("prec")?,
        b.product("succ")?,
        &b.map("alpha")?,
        &b.map("beta")?,
    ))
}

pub fn check_novikov_poisson(b: &StructureBundle) -> Result<CheckReport> {
    Ok(novikov_poisson(
        b.product("mul")?,
        b.product("star")?,
        &b.map("alpha")?,
        &b.map("beta")?,
    ))
}

/// Reports for `NP-4.2` and `NP-new` on a bundle with `mul` and `star`.
pub fn check_lemma_3_1(b: &StructureBundle) -> Result<(CheckReport, CheckReport)> {
    lemma_3_1(b.product("mul")?, b.product("star")?, &b.map("alpha")?, &b.map("beta")?)
}

pub fn check_derivation(b: &StructureBundle, d: &str, tau: &str, sigma: &str) -> Result<CheckReport> {
    Ok(derivation(b.product("mul")?, &b.map(d)?, &b.map(tau)?, &b.map(sigma)?))
}

pub fn check_rota_baxter(b: &StructureBundle, r: &str) -> Result<CheckReport> {
    let (p, a, be) = mab(b)?;
    Ok(rota_baxter(p, &a, &be, &b.map(r)?))
}
