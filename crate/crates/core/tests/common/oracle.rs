//! Whole-space evaluation of every axiom system on random vectors. The
//! checkers in the library scan basis tuples; these functions instead plug
//! random elements straight into the defining identities, using nothing from
//! the library beyond the raw structure constants.

use bihom::registry::CheckKind;
use bihom::{Coproduct, Field, LinearMap, Product, Scalar, StructureBundle, Tensor};
use rand_chacha::ChaCha8Rng;

type V = Vec<Scalar>;

/// Flat tensor of order 2 or 3, row-major.
type T = Vec<Scalar>;

struct Ctx {
    f: Field,
    n: usize,
}

impl Ctx {
    fn zero(&self) -> V {
        vec![self.f.zero(); self.n]
    }

    fn unit(&self, i: usize) -> V {
        let mut v = self.zero();
        v[i] = self.f.one();
        v
    }

    fn add(&self, x: &[Scalar], y: &[Scalar]) -> V {
        x.iter().zip(y).map(|(a, b)| a + b).collect()
    }

    fn sub(&self, x: &[Scalar], y: &[Scalar]) -> V {
        x.iter().zip(y).map(|(a, b)| a - b).collect()
    }

    fn neg(&self, x: &[Scalar]) -> V {
        x.iter().map(|a| -a).collect()
    }

    fn ap(&self, m: &LinearMap, x: &[Scalar]) -> V {
        (0..self.n)
            .map(|i| {
                let mut s = self.f.zero();
                for (j, xj) in x.iter().enumerate() {
                    s = &s + &(m.get(i, j) * xj);
                }
                s
            })
            .collect()
    }

    fn pr(&self, p: &Product, x: &[Scalar], y: &[Scalar]) -> V {
        let mut out = self.zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    *o = &*o + &(&c * p.coeff(i, j, k));
                }
            }
        }
        out
    }

    fn outer(&self, x: &[Scalar], y: &[Scalar]) -> T {
        x.iter().flat_map(|a| y.iter().map(move |b| a * b)).collect()
    }

    fn cop(&self, d: &Coproduct, x: &[Scalar]) -> T {
        let n = self.n;
        let mut out = vec![self.f.zero(); n * n];
        for (i, xi) in x.iter().enumerate() {
            for j in 0..n {
                for k in 0..n {
                    out[j * n + k] = &out[j * n + k] + &(xi * d.coeff(i, j, k));
                }
            }
        }
        out
    }

    /// `(f ⊗ g)(t)` for an order-2 tensor, expanding `t` in the basis.
    fn legs2(&self, t: &[Scalar], f: &dyn Fn(&V) -> V, g: &dyn Fn(&V) -> V) -> T {
        let n = self.n;
        let mut out = vec![self.f.zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                let c = &t[i * n + j];
                if c.is_zero() {
                    continue;
                }
                let (u, v) = (f(&self.unit(i)), g(&self.unit(j)));
                for (o, w) in out.iter_mut().zip(self.outer(&u, &v)) {
                    *o = &*o + &(c * &w);
                }
            }
        }
        out
    }

    /// `(f ⊗ g ⊗ h)(t)` for an order-3 tensor.
    fn legs3(&self, t: &[Scalar], f: &dyn Fn(&V) -> V, g: &dyn Fn(&V) -> V, h: &dyn Fn(&V) -> V) -> T {
        let n = self.n;
        let mut out = vec![self.f.zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = &t[(i * n + j) * n + k];
                    if c.is_zero() {
                        continue;
                    }
                    let w = self.outer(&self.outer(&f(&self.unit(i)), &g(&self.unit(j))), &h(&self.unit(k)));
                    for (o, w) in out.iter_mut().zip(w) {
                        *o = &*o + &(c * &w);
                    }
                }
            }
        }
        out
    }

    /// `(Δ ⊗ g)(t)` and `(g ⊗ Δ)(t)` for an order-2 tensor.
    fn expand(&self, t: &[Scalar], d: &Coproduct, g: &LinearMap, first: bool) -> T {
        let n = self.n;
        let mut out = vec![self.f.zero(); n * n * n];
        for i in 0..n {
            for j in 0..n {
                let c = &t[i * n + j];
                if c.is_zero() {
                    continue;
                }
                let w = if first {
                    self.outer(&self.cop(d, &self.unit(i)), &self.ap(g, &self.unit(j)))
                } else {
                    self.outer(&self.ap(g, &self.unit(i)), &self.cop(d, &self.unit(j)))
                };
                for (o, w) in out.iter_mut().zip(w) {
                    *o = &*o + &(c * &w);
                }
            }
        }
        out
    }

    fn random(&self, rng: &mut ChaCha8Rng) -> V {
        (0..self.n).map(|_| self.f.random(rng, 4)).collect()
    }
}

/// The identities of each axiom system, evaluated at one random point.
struct Point<'a> {
    c: &'a Ctx,
    b: &'a StructureBundle,
    x: V,
    y: V,
    z: V,
}

impl Point<'_> {
    fn map(&self, name: &str) -> LinearMap {
        self.b.map(name).expect("map present")
    }

    fn prod(&self, name: &str) -> &Product {
        self.b.product(name).expect("product present")
    }

    fn commute(&self, a: &LinearMap, b: &LinearMap) -> bool {
        let c = self.c;
        c.ap(a, &c.ap(b, &self.x)) == c.ap(b, &c.ap(a, &self.x))
    }

    fn multiplicative(&self, m: &LinearMap, p: &Product) -> bool {
        let c = self.c;
        c.ap(m, &c.pr(p, &self.x, &self.y)) == c.pr(p, &c.ap(m, &self.x), &c.ap(m, &self.y))
    }

    fn laws(&self, p: &Product, a: &LinearMap, b: &LinearMap) -> bool {
        self.commute(a, b) && self.multiplicative(a, p) && self.multiplicative(b, p)
    }

    fn bhassoc(&self, p: &Product, a: &LinearMap, b: &LinearMap) -> bool {
        let (c, x, y, z) = (self.c, &self.x, &self.y, &self.z);
        self.laws(p, a, b) && c.pr(p, &c.ap(a, x), &c.pr(p, y, z)) == c.pr(p, &c.pr(p, x, y), &c.ap(b, z))
    }

    fn bhcomm(&self, p: &Product, a: &LinearMap, b: &LinearMap) -> bool {
        let (c, x, y) = (self.c, &self.x, &self.y);
        self.bhassoc(p, a, b) && c.pr(p, &c.ap(b, x), &c.ap(a, y)) == c.pr(p, &c.ap(b, y), &c.ap(a, x))
    }

    /// Left side of the pre-Lie identity, as a function of `(x, y)`.
    fn prelie_side(&self, p: &Product, a: &LinearMap, b: &LinearMap, x: &V, y: &V) -> V {
        let c = self.c;
        let ab = |v: &V| c.ap(a, &c.ap(b, v));
        c.sub(
            &c.pr(p, &ab(x), &c.pr(p, &c.ap(a, y), &self.z)),
            &c.pr(p, &c.pr(p, &c.ap(b, x), &c.ap(a, y)), &c.ap(b, &self.z)),
        )
    }

    fn prelie(&self, p: &Product, a: &LinearMap, b: &LinearMap) -> bool {
        self.laws(p, a, b) && self.prelie_side(p, a, b, &self.x, &self.y) == self.prelie_side(p, a, b, &self.y, &self.x)
    }

    fn novikov(&self, p: &Product, a: &LinearMap, b: &LinearMap) -> bool {
        let (c, x, y, z) = (self.c, &self.x, &self.y, &self.z);
        let ab = |v: &V| c.ap(a, &c.ap(b, v));
        self.prelie(p, a, b) && c.pr(p, &c.pr(p, x, &c.ap(b, y)), &ab(z)) == c.pr(p, &c.pr(p, x, &c.ap(b, z)), &ab(y))
    }

    fn leibniz(&self, p: &Product, a: &LinearMap, b: &LinearMap, left: bool) -> bool {
        let (c, x, y, z) = (self.c, &self.x, &self.y, &self.z);
        let br = |u: &V, v: &V| c.pr(p, u, v);
        let ab = |v: &V| c.ap(a, &c.ap(b, v));
        let identity = if left {
            br(&ab(x), &br(y, z))
                == c.add(
                    &br(&br(&c.ap(b, x), y), &c.ap(b, z)),
                    &br(&c.ap(b, y), &br(&c.ap(a, x), z)),
                )
        } else {
            br(&br(x, y), &ab(z))
                == c.add(
                    &br(&br(x, &c.ap(b, z)), &c.ap(a, y)),
                    &br(&c.ap(a, x), &br(y, &c.ap(a, z))),
                )
        };
        self.laws(p, a, b) && identity
    }

    fn lie(&self, p: &Product, a: &LinearMap, b: &LinearMap, left: bool) -> bool {
        let (c, x, y) = (self.c, &self.x, &self.y);
        self.leibniz(p, a, b, left) && c.pr(p, &c.ap(b, x), &c.ap(a, y)) == c.neg(&c.pr(p, &c.ap(b, y), &c.ap(a, x)))
    }

    fn dendriform(&self) -> bool {
        let (c, x, y, z) = (self.c, &self.x, &self.y, &self.z);
        let (prec, succ) = (self.prod("prec"), self.prod("succ"));
        let (a, b) = (self.map("alpha"), self.map("beta"));
        let l = |u: &V, v: &V| c.pr(prec, u, v);
        let r = |u: &V, v: &V| c.pr(succ, u, v);
        self.commute(&a, &b)
            && [&a, &b]
                .iter()
                .all(|m| self.multiplicative(m, prec) && self.multiplicative(m, succ))
            && l(&l(x, y), &c.ap(&b, z)) == l(&c.ap(&a, x), &c.add(&l(y, z), &r(y, z)))
            && l(&r(x, y), &c.ap(&b, z)) == r(&c.ap(&a, x), &l(y, z))
            && r(&c.ap(&a, x), &r(y, z)) == r(&c.add(&l(x, y), &r(x, y)), &c.ap(&b, z))
    }

    fn novikov_poisson(&self) -> bool {
        let (c, x, y, z) = (self.c, &self.x, &self.y, &self.z);
        let (m, s) = (self.prod("mul"), self.prod("star"));
        let (a, b) = (self.map("alpha"), self.map("beta"));
        let ab = |v: &V| c.ap(&a, &c.ap(&b, v));
        let h = |u: &V, v: &V| {
            c.sub(
                &c.pr(m, &c.pr(s, &c.ap(&b, u), &c.ap(&a, v)), &c.ap(&b, z)),
                &c.pr(s, &ab(u), &c.pr(m, &c.ap(&a, v), z)),
            )
        };
        self.bhcomm(m, &a, &b)
            && self.novikov(s, &a, &b)
            && h(x, y) == h(y, x)
            && c.pr(s, &c.pr(m, x, &c.ap(&b, y)), &ab(z)) == c.pr(m, &c.pr(s, x, &c.ap(&b, z)), &ab(y))
            && c.pr(m, &c.ap(&a, x), &c.pr(s, y, z)) == c.pr(s, &c.pr(m, x, y), &c.ap(&b, z))
    }

    fn comultiplicative(&self, m: &LinearMap, d: &Coproduct) -> bool {
        let c = self.c;
        let mm = |v: &V| c.ap(m, v);
        c.legs2(&c.cop(d, &self.x), &mm, &mm) == c.cop(d, &c.ap(m, &self.x))
    }

    fn coassoc(&self, d: &Coproduct, psi: &LinearMap, omega: &LinearMap) -> bool {
        let c = self.c;
        let t = c.cop(d, &self.x);
        self.commute(psi, omega)
            && self.comultiplicative(psi, d)
            && self.comultiplicative(omega, d)
            && c.expand(&t, d, psi, true) == c.expand(&t, d, omega, false)
    }

    fn inf_bialgebra(&self) -> bool {
        let (c, x, y) = (self.c, &self.x, &self.y);
        let (m, d) = (self.prod("mul"), self.b.comul("Delta").expect("Delta"));
        let [a, b, psi, omega] = ["alpha", "beta", "psi", "omega"].map(|n| self.map(n));
        let ox = c.ap(&omega, x);
        let py = c.ap(&psi, y);
        let rhs = c.add(
            &c.legs2(&c.cop(d, y), &|v| c.pr(m, &ox, v), &|v| c.ap(&b, v)),
            &c.legs2(&c.cop(d, x), &|v| c.ap(&a, v), &|v| c.pr(m, v, &py)),
        );
        self.bhassoc(m, &a, &b)
            && self.coassoc(d, &psi, &omega)
            && [&a, &b]
                .iter()
                .all(|s| self.commute(s, &psi) && self.commute(s, &omega))
            && self.comultiplicative(&a, d)
            && self.comultiplicative(&b, d)
            && self.multiplicative(&psi, m)
            && self.multiplicative(&omega, m)
            && c.cop(d, &c.pr(m, x, y)) == rhs
    }

    fn module(&self, m: &V, left: bool) -> bool {
        let (c, x, y) = (self.c, &self.x, &self.y);
        let mul = self.prod("mul");
        let (a, b) = (self.map("alpha"), self.map("beta"));
        let (am, bm) = (self.map("alpha_M"), self.map("beta_M"));
        let maps_commute = c.ap(&am, &c.ap(&bm, m)) == c.ap(&bm, &c.ap(&am, m));
        if left {
            let act = self.prod("left_action");
            let l = |u: &V, v: &V| c.pr(act, u, v);
            maps_commute
                && c.ap(&am, &l(x, m)) == l(&c.ap(&a, x), &c.ap(&am, m))
                && c.ap(&bm, &l(x, m)) == l(&c.ap(&b, x), &c.ap(&bm, m))
                && l(&c.ap(&a, x), &l(y, m)) == l(&c.pr(mul, x, y), &c.ap(&bm, m))
        } else {
            let act = self.prod("right_action");
            let r = |u: &V, v: &V| c.pr(act, u, v);
            maps_commute
                && c.ap(&am, &r(m, x)) == r(&c.ap(&am, m), &c.ap(&a, x))
                && c.ap(&bm, &r(m, x)) == r(&c.ap(&bm, m), &c.ap(&b, x))
                && r(&c.ap(&am, m), &c.pr(mul, x, y)) == r(&r(m, x), &c.ap(&b, y))
        }
    }

    fn bimodule(&self, m: &V) -> bool {
        let (c, x, y) = (self.c, &self.x, &self.y);
        let (l, r) = (self.prod("left_action"), self.prod("right_action"));
        let (a, b) = (self.map("alpha"), self.map("beta"));
        self.module(m, true)
            && self.module(m, false)
            && c.pr(l, &c.ap(&a, x), &c.pr(r, m, y)) == c.pr(r, &c.pr(l, x, m), &c.ap(&b, y))
    }

    fn derivation(&self) -> bool {
        let (c, x, y) = (self.c, &self.x, &self.y);
        let p = self.prod("mul");
        let d = self.map("D");
        let or_id = |n: &str| {
            if self.b.maps.contains_key(n) {
                self.map(n)
            } else {
                self.b.identity()
            }
        };
        let (tau, sigma) = (or_id("tau"), or_id("sigma"));
        c.ap(&d, &c.pr(p, x, y))
            == c.add(
                &c.pr(p, &c.ap(&d, x), &c.ap(&tau, y)),
                &c.pr(p, &c.ap(&sigma, x), &c.ap(&d, y)),
            )
    }

    fn rota_baxter(&self) -> bool {
        let (c, x, y) = (self.c, &self.x, &self.y);
        let p = self.prod("mul");
        let (a, b, r) = (self.map("alpha"), self.map("beta"), self.map("R"));
        let ab = |v: &V| c.ap(&a, &c.ap(&b, v));
        let rv = |v: &V| c.ap(&r, v);
        self.commute(&r, &a)
            && self.commute(&r, &b)
            && c.pr(p, &rv(&ab(x)), &rv(&ab(y))) == rv(&c.add(&c.pr(p, &ab(x), &rv(y)), &c.pr(p, &rv(x), &ab(y))))
    }

    /// `a•A(r) = A(r)•a` at the point `x`.
    fn central(&self, ar: &T) -> bool {
        let c = self.c;
        let p = self.prod("mul");
        let (a, b) = (self.map("alpha"), self.map("beta"));
        let (ax, bx) = (c.ap(&a, &self.x), c.ap(&b, &self.x));
        let ida = |v: &V| c.ap(&a, v);
        let idb = |v: &V| c.ap(&b, v);
        let left = c.legs3(ar, &|v| c.pr(p, &ax, v), &idb, &idb);
        let right = c.legs3(ar, &ida, &ida, &|v| c.pr(p, v, &bx));
        left == right
    }
}

/// `A(r) = r13r12 − r12r23 + r23r13` as explicit sums over the
/// coefficients of `r`.
pub fn aybe_tensor(b: &StructureBundle, r: &Tensor) -> Vec<Scalar> {
    let c = Ctx { f: b.field, n: b.dim };
    let n = c.n;
    let p = b.product("mul").expect("mul");
    let (a, be) = (b.map("alpha").expect("alpha"), b.map("beta").expect("beta"));
    let mut out = vec![c.f.zero(); n * n * n];
    let terms: Vec<(usize, usize, Scalar)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter_map(|(i, j)| {
            let s = r.get(&[i, j]);
            (!s.is_zero()).then(|| (i, j, s.clone()))
        })
        .collect();
    let e = |i: usize| c.unit(i);
    for (i, j, rij) in &terms {
        for (k, l, rkl) in &terms {
            let w = rij * rkl;
            let t13_12 = c.outer(
                &c.outer(&c.pr(p, &e(*i), &e(*k)), &c.ap(&be, &e(*l))),
                &c.ap(&be, &e(*j)),
            );
            let t12_23 = c.outer(
                &c.outer(&c.ap(&a, &e(*i)), &c.pr(p, &e(*j), &e(*k))),
                &c.ap(&be, &e(*l)),
            );
            let t23_13 = c.outer(&c.outer(&c.ap(&a, &e(*i)), &c.ap(&a, &e(*k))), &c.pr(p, &e(*l), &e(*j)));
            for (idx, o) in out.iter_mut().enumerate() {
                let v = &(&t13_12[idx] - &t12_23[idx]) + &t23_13[idx];
                *o = &*o + &(&w * &v);
            }
        }
    }
    out
}

/// The oracle verdict for `kind` on `b` over `samples` random points, or
/// `None` when the bundle lacks the components the kind needs.
pub fn verdict(kind: CheckKind, b: &StructureBundle, samples: usize, rng: &mut ChaCha8Rng) -> Option<bool> {
    let has_p = |n: &str| b.products.contains_key(n);
    let has_m = |n: &str| b.maps.contains_key(n);
    let needed = match kind {
        CheckKind::Assoc | CheckKind::Commutative | CheckKind::Prelie | CheckKind::Novikov => has_p("mul"),
        CheckKind::LieLeft | CheckKind::LieRight | CheckKind::LeibnizLeft | CheckKind::LeibnizRight => has_p("bracket"),
        CheckKind::Dendriform => has_p("prec") && has_p("succ"),
        CheckKind::NovikovPoisson => has_p("mul") && has_p("star"),
        CheckKind::ModuleLeft => has_p("left_action") && has_m("alpha_M") && has_m("beta_M"),
        CheckKind::ModuleRight => has_p("right_action") && has_m("alpha_M") && has_m("beta_M"),
        CheckKind::Bimodule => has_p("left_action") && has_p("right_action") && has_m("alpha_M") && has_m("beta_M"),
        CheckKind::Derivation => has_p("mul") && has_m("D"),
        CheckKind::RotaBaxter => has_p("mul") && has_m("R"),
        CheckKind::Coassoc => b.comuls.contains_key("Delta") && has_m("psi") && has_m("omega"),
        CheckKind::InfBialgebra => has_p("mul") && b.comuls.contains_key("Delta") && has_m("psi") && has_m("omega"),
        CheckKind::Aybe | CheckKind::Centrality => has_p("mul") && b.tensors.contains_key("r"),
    };
    if !needed || !has_m("alpha") || !has_m("beta") {
        return None;
    }
    let c = Ctx { f: b.field, n: b.dim };
    if kind == CheckKind::Aybe {
        return Some(aybe_tensor(b, b.tensor("r").ok()?).iter().all(Scalar::is_zero));
    }
    let ar = (kind == CheckKind::Centrality).then(|| aybe_tensor(b, b.tensor("r").expect("r")));
    let (a, be) = (b.map("alpha").ok()?, b.map("beta").ok()?);
    for _ in 0..samples {
        let pt = Point {
            c: &c,
            b,
            x: c.random(rng),
            y: c.random(rng),
            z: c.random(rng),
        };
        let m = c.random(rng);
        let ok = match kind {
            CheckKind::Assoc => pt.bhassoc(pt.prod("mul"), &a, &be),
            CheckKind::Commutative => pt.bhcomm(pt.prod("mul"), &a, &be),
            CheckKind::Prelie => pt.prelie(pt.prod("mul"), &a, &be),
            CheckKind::Novikov => pt.novikov(pt.prod("mul"), &a, &be),
            CheckKind::LieLeft => pt.lie(pt.prod("bracket"), &a, &be, true),
            CheckKind::LieRight => pt.lie(pt.prod("bracket"), &a, &be, false),
            CheckKind::LeibnizLeft => pt.leibniz(pt.prod("bracket"), &a, &be, true),
            CheckKind::LeibnizRight => pt.leibniz(pt.prod("bracket"), &a, &be, false),
            CheckKind::Dendriform => pt.dendriform(),
            CheckKind::NovikovPoisson => pt.novikov_poisson(),
            CheckKind::ModuleLeft => pt.module(&m, true),
            CheckKind::ModuleRight => pt.module(&m, false),
            CheckKind::Bimodule => pt.bimodule(&m),
            CheckKind::Derivation => pt.derivation(),
            CheckKind::RotaBaxter => pt.rota_baxter(),
            CheckKind::Coassoc => pt.coassoc(b.comul("Delta").expect("Delta"), &pt.map("psi"), &pt.map("omega")),
            CheckKind::InfBialgebra => pt.inf_bialgebra(),
            CheckKind::Centrality => pt.central(ar.as_ref().expect("A(r)")),
            CheckKind::Aybe => unreachable!(),
        };
        if !ok {
            return Some(false);
        }
    }
    Some(true)
}
