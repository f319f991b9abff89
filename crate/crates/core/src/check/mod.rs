//! Axiom checkers. Every axiom system is split into named identities, each
//! evaluated on all tuples of basis vectors; by multilinearity that decides
//! the identity on the whole space.
//!
//! Identity ids are stable and listed in `docs/identities.md`.

mod algebra;
mod coalgebra;
mod module;

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::linalg::{LinearMap, Vector};
use crate::scalar::Scalar;
use crate::tensor::{Coproduct, Product, Tensor};

pub use algebra::*;
pub use coalgebra::*;
pub use module::*;

/// One side of a failed identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(Scalar),
    Vector(Vector),
    Tensor(Tensor),
    Map(LinearMap),
    Note(String),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(s) => write!(f, "{s}"),
            Value::Vector(v) => write!(f, "{v}"),
            Value::Tensor(t) => write!(f, "{t}"),
            Value::Map(m) => {
                let rows: Vec<String> = (0..m.rows())
                    .map(|i| {
                        let r: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
                        format!("[{}]", r.join(", "))
                    })
                    .collect();
                write!(f, "[{}]", rows.join(", "))
            }
            Value::Note(s) => f.write_str(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub identity: String,
    /// Basis indices the identity was evaluated at, in argument order.
    pub witness: Vec<usize>,
    pub lhs: Value,
    pub rhs: Value,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.witness.iter().map(ToString::to_string).collect();
        write!(
            f,
            "{} at ({}): lhs = {}, rhs = {}",
            self.identity,
            w.join(","),
            self.lhs,
            self.rhs
        )
    }
}

/// Outcome of a checker. `passed` holds exactly when `violations` is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
}

impl Default for CheckReport {
    fn default() -> Self {
        CheckReport::pass()
    }
}

impl CheckReport {
    pub fn pass() -> Self {
        CheckReport {
            passed: true,
            violations: Vec::new(),
        }
    }

    pub fn from_violations(violations: Vec<Violation>) -> Self {
        CheckReport {
            passed: violations.is_empty(),
            violations,
        }
    }

    /// Concatenates the violations of `other` after those of `self`.
    pub fn merge(mut self, other: CheckReport) -> Self {
        self.violations.extend(other.violations);
        self.passed = self.violations.is_empty();
        self
    }

    /// Like `merge`, but skips violations already present.
    pub fn merge_dedup(mut self, other: CheckReport) -> Self {
        for v in other.violations {
            if !self.violations.contains(&v) {
                self.violations.push(v);
            }
        }
        self.passed = self.violations.is_empty();
        self
    }

    pub(crate) fn extend(&mut self, vs: Vec<Violation>) {
        self.violations.extend(vs);
        self.passed = self.violations.is_empty();
    }

    /// Ids of the identities that failed, sorted.
    pub fn failed_identities(&self) -> BTreeSet<&str> {
        self.violations.iter().map(|v| v.identity.as_str()).collect()
    }

    pub fn fails(&self, identity: &str) -> bool {
        self.violations.iter().any(|v| v.identity == identity)
    }

    pub fn first(&self, identity: &str) -> Option<&Violation> {
        self.violations.iter().find(|v| v.identity == identity)
    }

    pub fn has_witness(&self, identity: &str, witness: &[usize]) -> bool {
        self.violations
            .iter()
            .any(|v| v.identity == identity && v.witness == witness)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            return writeln!(f, "PASS");
        }
        writeln!(f, "FAIL ({} violations)", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}

/// Evaluates `f` on every index tuple in `0..n` of length `arity`, in
/// lexicographic order, and collects the failures.
pub(crate) fn scan<F>(identity: &str, n: usize, arity: usize, f: F) -> Vec<Violation>
where
    F: Fn(&[usize]) -> Option<(Value, Value)> + Sync,
{
    scan_ranges(identity, &vec![n; arity], f)
}

/// Like `scan`, with coordinate `k` running over `0..ranges[k]`. Runs on the
/// rayon pool; the output order does not depend on scheduling.
pub(crate) fn scan_ranges<F>(identity: &str, ranges: &[usize], f: F) -> Vec<Violation>
where
    F: Fn(&[usize]) -> Option<(Value, Value)> + Sync,
{
    let total: usize = ranges.iter().product();
    let run = |pos: usize| {
        let mut idx = vec![0; ranges.len()];
        let mut p = pos;
        for (slot, r) in idx.iter_mut().zip(ranges).rev() {
            *slot = p % r;
            p /= r;
        }
        f(&idx).map(|(lhs, rhs)| Violation {
            identity: identity.to_string(),
            witness: idx,
            lhs,
            rhs,
        })
    };
    if total < 64 {
        (0..total).filter_map(run).collect()
    } else {
        (0..total).into_par_iter().filter_map(run).collect()
    }
}

pub(crate) fn differ_v(lhs: Vector, rhs: Vector) -> Option<(Value, Value)> {
    (lhs != rhs).then_some((Value::Vector(lhs), Value::Vector(rhs)))
}

pub(crate) fn differ_t(lhs: Tensor, rhs: Tensor) -> Option<(Value, Value)> {
    (lhs != rhs).then_some((Value::Tensor(lhs), Value::Tensor(rhs)))
}

/// Standard basis, cached per call site.
pub(crate) fn basis(p_field: crate::scalar::Field, n: usize) -> Vec<Vector> {
    (0..n).map(|i| Vector::basis(p_field, n, i)).collect()
}

/// `commute(a,b)`: `a ∘ b = b ∘ a`.
pub fn commute(a_name: &str, a: &LinearMap, b_name: &str, b: &LinearMap) -> CheckReport {
    let ab = a.compose(b);
    let ba = b.compose(a);
    if ab == ba {
        return CheckReport::pass();
    }
    CheckReport::from_violations(vec![Violation {
        identity: format!("commute({a_name},{b_name})"),
        witness: vec![],
        lhs: Value::Map(ab),
        rhs: Value::Map(ba),
    }])
}

/// Pairwise commutation of a list of named maps.
pub fn pairwise_commute(maps: &[(&str, &LinearMap)]) -> CheckReport {
    let mut report = CheckReport::pass();
    for (i, (an, a)) in maps.iter().enumerate() {
        for (bn, b) in &maps[i + 1..] {
            report = report.merge(commute(an, a, bn, b));
        }
    }
    report
}

/// `mult(map,product)`: `m(e_i e_j) = m(e_i) m(e_j)`.
pub fn multiplicative(map_name: &str, m: &LinearMap, product_name: &str, p: &Product) -> CheckReport {
    let n = p.dim();
    let cols = m.columns();
    CheckReport::from_violations(scan(&format!("mult({map_name},{product_name})"), n, 2, |w| {
        let (i, j) = (w[0], w[1]);
        differ_v(m.apply(&p.basis_product(i, j)), p.eval(&cols[i], &cols[j]))
    }))
}

/// `comult(map,Delta)`: `(m ⊗ m) Δ(e_i) = Δ(m(e_i))`.
pub fn comultiplicative(map_name: &str, m: &LinearMap, delta_name: &str, d: &Coproduct) -> CheckReport {
    let n = d.dim();
    let cols = m.columns();
    CheckReport::from_violations(scan(&format!("comult({map_name},{delta_name})"), n, 1, |w| {
        let i = w[0];
        differ_t(d.basis_image(i).map_legs(&[Some(m), Some(m)]), d.eval(&cols[i]))
    }))
}

/// Commutation of the structure maps plus multiplicativity of each for `p`.
pub fn structure_laws(product_name: &str, p: &Product, maps: &[(&str, &LinearMap)]) -> CheckReport {
    let mut report = pairwise_commute(maps);
    for (name, m) in maps {
        report = report.merge(multiplicative(name, m, product_name, p));
    }
    report
}

/// `check_commuting_multiplicative`: the named maps commute pairwise and are
/// multiplicative for the named product.
pub fn check_commuting_multiplicative(
    bundle: &crate::bundle::StructureBundle,
    map_names: &[&str],
    product_name: &str,
) -> crate::Result<CheckReport> {
    let p = bundle.product(product_name)?;
    let maps: Vec<LinearMap> = map_names.iter().map(|n| bundle.map(n)).collect::<crate::Result<_>>()?;
    let named: Vec<(&str, &LinearMap)> = map_names.iter().copied().zip(maps.iter()).collect();
    Ok(structure_laws(product_name, p, &named))
}
