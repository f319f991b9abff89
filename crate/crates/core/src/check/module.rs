use crate::bundle::StructureBundle;
use crate::error::Result;
use crate::linalg::{LinearMap, Vector};
use crate::tensor::{Product, Tensor};

use super::{basis, differ_t, scan_ranges, CheckReport, Side, Violation};

/// A space `M = A^{⊗order}` with structure maps and (optionally) left and
/// right actions of an algebra `A`. Module elements are tensors of the given
/// order; module basis elements are indexed by their flat position.
pub trait ModuleData: Sync {
    fn order(&self) -> usize;
    fn alpha_m(&self, m: &Tensor) -> Tensor;
    fn beta_m(&self, m: &Tensor) -> Tensor;
    fn left(&self, a: &Vector, m: &Tensor) -> Option<Tensor>;
    fn right(&self, m: &Tensor, a: &Vector) -> Option<Tensor>;
}

/// Actions given by structure-constant tables on `M = A`.
pub struct TableModule<'a> {
    pub left: Option<&'a Product>,
    pub right: Option<&'a Product>,
    pub alpha_m: &'a LinearMap,
    pub beta_m: &'a LinearMap,
}

impl ModuleData for TableModule<'_> {
    fn order(&self) -> usize {
        1
    }

    fn alpha_m(&self, m: &Tensor) -> Tensor {
        m.map_leg(0, self.alpha_m)
    }

    fn beta_m(&self, m: &Tensor) -> Tensor {
        m.map_leg(0, self.beta_m)
    }

    fn left(&self, a: &Vector, m: &Tensor) -> Option<Tensor> {
        self.left.map(|p| Tensor::from_vector(&p.eval(a, &m.to_vector())))
    }

    fn right(&self, m: &Tensor, a: &Vector) -> Option<Tensor> {
        self.right.map(|p| Tensor::from_vector(&p.eval(&m.to_vector(), a)))
    }
}

/// `A^{⊗n}` with `a•(b_1⊗…⊗b_n) = α(a)b_1⊗β(b_2)⊗…⊗β(b_n)`,
/// `(b_1⊗…⊗b_n)•a = α(b_1)⊗…⊗α(b_{n−1})⊗b_nβ(a)` and maps `α^{⊗n}`, `β^{⊗n}`.
pub struct TensorPowerModule<'a> {
    pub order: usize,
    pub mul: &'a Product,
    pub alpha: &'a LinearMap,
    pub beta: &'a LinearMap,
}

impl ModuleData for TensorPowerModule<'_> {
    fn order(&self) -> usize {
        self.order
    }

    fn alpha_m(&self, m: &Tensor) -> Tensor {
        m.map_legs(&vec![Some(self.alpha); self.order])
    }

    fn beta_m(&self, m: &Tensor) -> Tensor {
        m.map_legs(&vec![Some(self.beta); self.order])
    }

    fn left(&self, a: &Vector, m: &Tensor) -> Option<Tensor> {
        Some(m.act_left(self.mul, self.alpha, self.beta, a))
    }

    fn right(&self, m: &Tensor, a: &Vector) -> Option<Tensor> {
        Some(m.act_right(self.mul, self.alpha, self.beta, a))
    }
}

/// `A ⊗ A` with `a·(b⊗c) = ω(a)b ⊗ β(c)`, `(b⊗c)·a = α(b) ⊗ cψ(a)` and
/// maps `α⊗α`, `β⊗β`.
pub struct InfinitesimalModule<'a> {
    pub mul: &'a Product,
    pub alpha: &'a LinearMap,
    pub beta: &'a LinearMap,
    pub psi: &'a LinearMap,
    pub omega: &'a LinearMap,
}

impl ModuleData for InfinitesimalModule<'_> {
    fn order(&self) -> usize {
        2
    }

    fn alpha_m(&self, m: &Tensor) -> Tensor {
        m.map_legs(&[Some(self.alpha), Some(self.alpha)])
    }

    fn beta_m(&self, m: &Tensor) -> Tensor {
        m.map_legs(&[Some(self.beta), Some(self.beta)])
    }

    fn left(&self, a: &Vector, m: &Tensor) -> Option<Tensor> {
        let l = self.mul.left_mult(&self.omega.apply(a));
        Some(m.map_legs(&[Some(&l), Some(self.beta)]))
    }

    fn right(&self, m: &Tensor, a: &Vector) -> Option<Tensor> {
        let r = self.mul.right_mult(&self.psi.apply(a));
        Some(m.map_legs(&[Some(self.alpha), Some(&r)]))
    }
}

fn module_basis(n: usize, order: usize, field: crate::scalar::Field) -> Vec<Tensor> {
    (0..n.pow(order as u32))
        .map(|pos| {
            let mut idx = vec![0; order];
            let mut p = pos;
            for slot in idx.iter_mut().rev() {
                *slot = p % n;
                p /= n;
            }
            Tensor::basis(field, n, &idx)
        })
        .collect()
}

fn commute_m(module: &dyn ModuleData, mb: &[Tensor]) -> Vec<Violation> {
    scan_ranges("commute(alpha_M,beta_M)", &[mb.len()], |w| {
        let m = &mb[w[0]];
        differ_t(module.alpha_m(&module.beta_m(m)), module.beta_m(&module.alpha_m(m)))
    })
}

/// Left module axioms `lmod-alpha`, `lmod-beta`, `lmod4`, or the right ones
/// `rmod-alpha`, `rmod-beta`, `rmod4`, with `commute(alpha_M,beta_M)`.
pub fn module_axioms(
    mul: &Product,
    alpha: &LinearMap,
    beta: &LinearMap,
    module: &dyn ModuleData,
    side: Side,
) -> CheckReport {
    let n = mul.dim();
    let e = basis(mul.field(), n);
    let mb = module_basis(n, module.order(), mul.field());
    let (ac, bc) = (alpha.columns(), beta.columns());
    let nm = mb.len();
    let mut r = CheckReport::from_violations(commute_m(module, &mb));
    let l = |a: &Vector, m: &Tensor| module.left(a, m).expect("left action present");
    let rt = |m: &Tensor, a: &Vector| module.right(m, a).expect("right action present");
    match side {
        Side::Left => {
            r.extend(scan_ranges("lmod-alpha", &[n, nm], |w| {
                let (a, m) = (w[0], &mb[w[1]]);
                differ_t(module.alpha_m(&l(&e[a], m)), l(&ac[a], &module.alpha_m(m)))
            }));
            r.extend(scan_ranges("lmod-beta", &[n, nm], |w| {
                let (a, m) = (w[0], &mb[w[1]]);
                differ_t(module.beta_m(&l(&e[a], m)), l(&bc[a], &module.beta_m(m)))
            }));
            r.extend(scan_ranges("lmod4", &[n, n, nm], |w| {
                let (a, a2, m) = (w[0], w[1], &mb[w[2]]);
                differ_t(
                    l(&ac[a], &l(&e[a2], m)),
                    l(&mul.basis_product(a, a2), &module.beta_m(m)),
                )
            }));
        }
        Side::Right => {
            r.extend(scan_ranges("rmod-alpha", &[nm, n], |w| {
                let (m, a) = (&mb[w[0]], w[1]);
                differ_t(module.alpha_m(&rt(m, &e[a])), rt(&module.alpha_m(m), &ac[a]))
            }));
            r.extend(scan_ranges("rmod-beta", &[nm, n], |w| {
                let (m, a) = (&mb[w[0]], w[1]);
                differ_t(module.beta_m(&rt(m, &e[a])), rt(&module.beta_m(m), &bc[a]))
            }));
            r.extend(scan_ranges("rmod4", &[nm, n, n], |w| {
                let (m, a, a2) = (&mb[w[0]], w[1], w[2]);
                differ_t(
                    rt(&module.alpha_m(m), &mul.basis_product(a, a2)),
                    rt(&rt(m, &e[a]), &bc[a2]),
                )
            }));
        }
    }
    r
}

/// Bimodule: both module structures plus `BHbim`:
/// `α(a)·(m·a') = (a·m)·β(a')`.
pub fn bimodule_axioms(mul: &Product, alpha: &LinearMap, beta: &LinearMap, module: &dyn ModuleData) -> CheckReport {
    let n = mul.dim();
    let e = basis(mul.field(), n);
    let mb = module_basis(n, module.order(), mul.field());
    let (ac, bc) = (alpha.columns(), beta.columns());
    let left = module_axioms(mul, alpha, beta, module, Side::Left);
    let right = module_axioms(mul, alpha, beta, module, Side::Right);
    let bim = scan_ranges("BHbim", &[n, mb.len(), n], |w| {
        let (a, m, a2) = (w[0], &mb[w[1]], w[2]);
        let l = |x: &Vector, y: &Tensor| module.left(x, y).expect("left action present");
        let r = |y: &Tensor, x: &Vector| module.right(y, x).expect("right action present");
        differ_t(l(&ac[a], &r(m, &e[a2])), r(&l(&e[a], m), &bc[a2]))
    });
    left.merge_dedup(right).merge(CheckReport::from_violations(bim))
}

fn table_module(b: &StructureBundle) -> Result<(Option<&Product>, Option<&Product>, LinearMap, LinearMap)> {
    Ok((
        b.products.get("left_action"),
        b.products.get("right_action"),
        b.map("alpha_M")?,
        b.map("beta_M")?,
    ))
}

/// Module axioms for a bundle whose `left_action` or `right_action` product
/// makes `(A, alpha_M, beta_M)` a module over `(A, mul, alpha, beta)`.
pub fn check_module(b: &StructureBundle, side: Side) -> Result<CheckReport> {
    let mul = b.product("mul")?;
    let (l, r, am, bm) = table_module(b)?;
    match side {
        Side::Left if l.is_none() => return Err(crate::Error::missing("left_action")),
        Side::Right if r.is_none() => return Err(crate::Error::missing("right_action")),
        _ => {}
    }
    let module = TableModule {
        left: l,
        right: r,
        alpha_m: &am,
        beta_m: &bm,
    };
    Ok(module_axioms(mul, &b.map("alpha")?, &b.map("beta")?, &module, side))
}

pub fn check_bimodule(b: &StructureBundle) -> Result<CheckReport> {
    let mul = b.product("mul")?;
    let (l, r, am, bm) = table_module(b)?;
    let module = TableModule {
        left: Some(l.ok_or_else(|| crate::Error::missing("left_action"))?),
        right: Some(r.ok_or_else(|| crate::Error::missing("right_action"))?),
        alpha_m: &am,
        beta_m: &bm,
    };
    Ok(bimodule_axioms(mul, &b.map("alpha")?, &b.map("beta")?, &module))
}
