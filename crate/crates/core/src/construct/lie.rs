//! Star products `[f(x), y]` and `[x, f(y)]` on a BiHom-Lie algebra and the
//! criteria deciding when they are BiHom-Novikov.

use crate::bundle::{Kind, StructureBundle};
use crate::check::{self, scan, CheckReport, Side, Value};
use crate::error::Result;
use crate::linalg::{in_span, solve_homogeneous, LinearMap, Vector};
use crate::tensor::Product;

use super::{require, require_commuting, ConstructionResult, Mode};

/// `Z_l(β(L)) = {x : [x, β(y)] = 0 ∀y}` for `Side::Left`,
/// `Z_r(α(L)) = {x : [α(y), x] = 0 ∀y}` for `Side::Right`.
pub fn centralizer(b: &StructureBundle, side: Side) -> Result<Vec<Vector>> {
    let br = b.product("bracket")?;
    let map = match side {
        Side::Left => b.map("beta")?,
        Side::Right => b.map("alpha")?,
    };
    Ok(centralizer_of(br, &map, side))
}

pub fn centralizer_of(br: &Product, map: &LinearMap, side: Side) -> Vec<Vector> {
    let n = br.dim();
    let mut rows = Vec::with_capacity(n * n);
    for y in map.columns() {
        let m = match side {
            Side::Left => br.right_mult(&y),
            Side::Right => br.left_mult(&y),
        };
        rows.extend((0..n).map(|i| m.row(i).to_vec()));
    }
    solve_homogeneous(br.field(), n, rows)
}

/// Hypotheses shared by `lie_star` and `lie_star_conditions`.
fn hypotheses(b: &StructureBundle, f: &LinearMap, side: Side) -> Result<(LinearMap, LinearMap)> {
    let br = b.product("bracket")?;
    let (alpha, beta) = (b.map("alpha")?, b.map("beta")?);
    require_commuting(&[("f", f), ("alpha", &alpha)])?;
    require_commuting(&[("f", f), ("beta", &beta)])?;
    if side == Side::Right {
        alpha.inverse_named("alpha")?;
        beta.inverse_named("beta")?;
    }
    require("input lie-left", check::lie(br, &alpha, &beta, Side::Left))?;
    if side == Side::Right {
        require(
            "input leibniz-right",
            check::leibniz_identity(br, &alpha, &beta, Side::Right),
        )?;
    }
    Ok((alpha, beta))
}

/// `x⋆y = [f(x), y]` (left) or `x⋆'y = [x, f(y)]` (right), with the
/// structure maps of `L`. The map `f` is the bundle map named `f_name`.
pub fn lie_star(b: &StructureBundle, f_name: &str, side: Side) -> Result<ConstructionResult> {
    let f = b.map(f_name)?;
    let (alpha, beta) = hypotheses(b, &f, side)?;
    let br = b.product("bracket")?;
    let id = b.identity();
    let star = match side {
        Side::Left => br.twist(&f, &id),
        Side::Right => br.twist(&id, &f),
    };
    let out = StructureBundle::new(b.field, b.dim, Kind::Generic)
        .with_product("mul", star)
        .with_map("alpha", alpha)
        .with_map("beta", beta);
    let theorem = match side {
        Side::Left => "lie-star-left",
        Side::Right => "lie-star-right",
    };
    // Only a candidate, so there is no conclusion to verify.
    ConstructionResult::finish(out, theorem, &["bracket", f_name], vec![], Mode::Trust, |_| {
        Ok(CheckReport::pass())
    })
}

/// The criteria equivalent to `lie_star` being BiHom-Novikov: `LieNo` and
/// `LieNovi` for the left product, `LieNoviko` and `LieNovikov` for the
/// right one.
pub fn lie_star_conditions(b: &StructureBundle, f_name: &str, side: Side) -> Result<CheckReport> {
    let f = b.map(f_name)?;
    let (alpha, beta) = hypotheses(b, &f, side)?;
    let br = b.product("bracket")?;
    let n = b.dim;
    let fa = f.compose(&alpha).columns();
    let fb = f.compose(&beta).columns();
    let (ac, bc) = (alpha.columns(), beta.columns());
    let abc = alpha.compose(&beta).columns();
    let fc = f.columns();
    let brk = |u: &Vector, v: &Vector| br.eval(u, v);
    let outside = |z: &[Vector], v: Vector, name: &str| {
        (!in_span(z, &v)).then(|| (Value::Vector(v), Value::Note(format!("not in {name}"))))
    };
    match side {
        Side::Left => {
            let z = centralizer_of(br, &beta, Side::Left);
            let mut r = CheckReport::from_violations(scan("LieNo", n, 2, |w| {
                let (x, y) = (w[0], w[1]);
                let v = &f.apply(&(&brk(&fb[x], &ac[y]) + &brk(&bc[x], &fa[y]))) - &brk(&fb[x], &fa[y]);
                outside(&z, v, "Z_l(beta(L))")
            }));
            let inner = |x: usize, y: usize| f.apply(&brk(&fc[x], &bc[y]));
            r.extend(scan("LieNovi", n, 3, |w| {
                let (x, y, z) = (w[0], w[1], w[2]);
                check::differ_v(brk(&inner(x, y), &abc[z]), brk(&inner(x, z), &abc[y]))
            }));
            Ok(r)
        }
        Side::Right => {
            let mut r = CheckReport::from_violations(scan("LieNoviko", n, 3, |w| {
                let (x, y, z) = (w[0], w[1], w[2]);
                let s = &brk(&bc[x], &fa[y]) + &brk(&fb[x], &ac[y]);
                let v = &(&brk(&s, &fb[z]) - &brk(&abc[x], &f.apply(&brk(&ac[y], &fc[z]))))
                    + &brk(&abc[y], &f.apply(&brk(&ac[x], &fc[z])));
                (!v.is_zero()).then(|| (Value::Vector(v), Value::Vector(Vector::zeros(b.field, n))))
            }));
            let z = centralizer_of(br, &alpha, Side::Right);
            r.extend(scan("LieNovikov", n, 2, |w| {
                outside(&z, brk(&fb[w[0]], &fa[w[1]]), "Z_r(alpha(L))")
            }));
            Ok(r)
        }
    }
}
