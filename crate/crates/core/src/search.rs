//! Finding the ingredients constructions need: derivations by linear
//! algebra, morphisms and r-matrices by exhaustive enumeration over a
//! finite field, and products by exhaustive or seeded random scans.
//!
//! Every enumeration is ordered lexicographically over the candidate
//! coefficient arrays (residues `0..p`, first entry most significant), and
//! the order does not depend on the number of worker threads.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bundle::{Kind, StructureBundle};
use crate::check::{comultiplicative, derivation, multiplicative};
use crate::construct::require;
use crate::error::{Error, Result};
use crate::linalg::{solve_homogeneous, LinearMap};
use crate::quasitriangular::{check_aybe, check_centrality, make_rmatrix, RMatrix};
use crate::registry::CheckKind;
use crate::scalar::{Field, Scalar};
use crate::tensor::{Product, Tensor};

/// Default ceiling on the number of candidates of an exhaustive scan.
pub const DEFAULT_LIMIT: u64 = 1 << 24;
/// Candidate counts above this are refused whatever the configured limit.
pub const HARD_LIMIT: u64 = 1 << 40;

/// `q^k` candidates, or `SpaceTooLarge`.
fn space(field: Field, entries: usize, limit: u64) -> Result<u64> {
    let q = field
        .order()
        .ok_or_else(|| Error::InvalidField(format!("exhaustive search needs a finite field, got {field}")))?;
    let limit = limit.min(HARD_LIMIT);
    let count = u32::try_from(entries).ok().and_then(|k| u128::from(q).checked_pow(k));
    match count {
        Some(c) if c <= u128::from(limit) => Ok(c as u64),
        Some(c) => Err(Error::SpaceTooLarge {
            candidates: c.to_string(),
            limit,
        }),
        None => Err(Error::SpaceTooLarge {
            candidates: format!("{q}^{entries}"),
            limit,
        }),
    }
}

/// Coefficients of candidate `index`: its base-`q` digits, most significant
/// first.
fn candidate(field: Field, index: u64, entries: usize) -> Vec<Scalar> {
    let q = field.order().expect("finite field");
    let mut out = vec![field.zero(); entries];
    let mut rest = index;
    for slot in out.iter_mut().rev() {
        *slot = field.element(rest % q);
        rest /= q;
    }
    out
}

/// Maps candidate indices through `f`, keeping index order.
fn collect_ordered<T: Send>(count: u64, f: impl Fn(u64) -> Option<T> + Sync + Send) -> Vec<T> {
    (0..count).into_par_iter().filter_map(f).collect()
}

/// Basis of the space of `(τ, σ)`-derivations `D(ab) = D(a)τ(b) + σ(a)D(b)`
/// of `mul`, solved as a linear system in the entries of `D`.
pub fn derivation_space_of(mul: &Product, tau: &LinearMap, sigma: &LinearMap) -> Vec<LinearMap> {
    let n = mul.dim();
    let f = mul.field();
    // Unknown D[k][m] sits at column k*n + m.
    let mut rows = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut row = vec![f.zero(); n * n];
                for m in 0..n {
                    let c = mul.coeff(i, j, m);
                    if !c.is_zero() {
                        row[k * n + m] = &row[k * n + m] + c;
                    }
                }
                for m in 0..n {
                    for l in 0..n {
                        let c = mul.coeff(m, l, k);
                        if c.is_zero() {
                            continue;
                        }
                        // D(e_i)_m τ(e_j)_l and σ(e_i)_m D(e_j)_l.
                        let t = c * tau.get(l, j);
                        row[m * n + i] = &row[m * n + i] - &t;
                        let s = c * sigma.get(m, i);
                        row[l * n + j] = &row[l * n + j] - &s;
                    }
                }
                rows.push(row);
            }
        }
    }
    solve_homogeneous(f, n * n, rows)
        .into_iter()
        .map(|v| {
            let e = v.into_entries();
            LinearMap::from_fn(f, n, n, |r, c| e[r * n + c].clone())
        })
        .collect()
}

/// `derivation_space_of` for the bundle's `mul` and maps named `tau`,
/// `sigma`, which must be multiplicative.
pub fn derivation_space(b: &StructureBundle, tau: &str, sigma: &str) -> Result<Vec<LinearMap>> {
    let mul = b.product("mul")?;
    let (t, s) = (b.map(tau)?, b.map(sigma)?);
    require(
        "tau, sigma multiplicative",
        multiplicative(tau, &t, "mul", mul).merge(multiplicative(sigma, &s, "mul", mul)),
    )?;
    Ok(derivation_space_of(mul, &t, &s))
}

/// Filters for `enumerate_morphisms`.
#[derive(Clone, Debug)]
pub struct MorphismConstraints {
    /// The product the maps must be multiplicative for.
    pub product: String,
    /// Bundle maps every result must commute with.
    pub commutes_with: Vec<String>,
    pub invertible: bool,
    /// A comultiplication the maps must also respect, `(M⊗M)Δ = ΔM`.
    pub comultiplicative: Option<String>,
}

impl Default for MorphismConstraints {
    fn default() -> Self {
        MorphismConstraints {
            product: "mul".into(),
            commutes_with: Vec::new(),
            invertible: false,
            comultiplicative: None,
        }
    }
}

/// All matrices `M` with `M(xy) = M(x)M(y)` satisfying the constraints.
pub fn enumerate_morphisms(b: &StructureBundle, c: &MorphismConstraints, limit: u64) -> Result<Vec<LinearMap>> {
    let n = b.dim;
    let count = space(b.field, n * n, limit)?;
    let mul = b.product(&c.product)?;
    let others: Vec<LinearMap> = c.commutes_with.iter().map(|m| b.map(m)).collect::<Result<_>>()?;
    let delta = c.comultiplicative.as_deref().map(|d| b.comul(d)).transpose()?;
    Ok(collect_ordered(count, |idx| {
        let e = candidate(b.field, idx, n * n);
        let m = LinearMap::from_fn(b.field, n, n, |r, col| e[r * n + col].clone());
        let ok = others.iter().all(|o| m.commutes_with(o))
            && multiplicative("M", &m, "mul", mul).passed
            && delta.is_none_or(|d| comultiplicative("M", &m, "Delta", d).passed)
            && (!c.invertible || m.is_invertible());
        ok.then_some(m)
    }))
}

/// Ordered pairs `(A, B)` of morphisms from `enumerate_morphisms` that
/// commute with each other.
pub fn commuting_morphism_pairs(
    b: &StructureBundle,
    c: &MorphismConstraints,
    limit: u64,
) -> Result<Vec<(LinearMap, LinearMap)>> {
    let ms = enumerate_morphisms(b, c, limit)?;
    let mut out = Vec::new();
    for a in &ms {
        for m in &ms {
            if a.commutes_with(m) {
                out.push((a.clone(), m.clone()));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RFilter {
    /// `A(r) = 0`.
    Aybe,
    /// `A(r)` central for the tensor-cube actions.
    Central,
}

/// All `r ∈ A⊗A` invariant under `α⊗α`, `β⊗β` that pass the filter.
pub fn enumerate_r(b: &StructureBundle, filter: RFilter, limit: u64) -> Result<Vec<RMatrix>> {
    let n = b.dim;
    let count = space(b.field, n * n, limit)?;
    b.product("mul")?;
    let found: Vec<Result<RMatrix>> = collect_ordered(count, |idx| {
        let t = Tensor::from_flat(b.field, n, 2, candidate(b.field, idx, n * n)).expect("shape");
        let r = make_rmatrix(b, t).ok()?;
        let report = match filter {
            RFilter::Aybe => check_aybe(b, &r),
            RFilter::Central => check_centrality(b, &r),
        };
        match report {
            Ok(rep) if rep.passed => Some(Ok(r)),
            Ok(_) => None,
            Err(e) => Some(Err(e)),
        }
    });
    found.into_iter().collect()
}

/// A scan over product tables, filtered by a checker.
#[derive(Clone, Debug)]
pub struct ProductScan {
    /// Supplies the field, dimension and structure maps.
    pub base: StructureBundle,
    pub check: CheckKind,
    /// `None` for an exhaustive scan, otherwise the seed of a random one.
    pub seed: Option<u64>,
    /// Number of random candidates.
    pub samples: u64,
    pub limit: u64,
    pub max_results: Option<usize>,
}

impl ProductScan {
    /// Exhaustive scan with identity structure maps.
    pub fn new(field: Field, dim: usize, check: CheckKind) -> Self {
        ProductScan {
            base: StructureBundle::new(field, dim, Kind::Generic).with_identity_maps(),
            check,
            seed: None,
            samples: 0,
            limit: DEFAULT_LIMIT,
            max_results: None,
        }
    }

    pub fn seeded(mut self, seed: u64, samples: u64) -> Self {
        self.seed = Some(seed);
        self.samples = samples;
        self
    }
}

/// Bundles whose single product passes the scan's checker.
pub fn scan_products(spec: &ProductScan) -> Result<Vec<StructureBundle>> {
    let name = spec
        .check
        .scan_product()
        .ok_or_else(|| Error::InvariantViolation(format!("`{}` is not a single-product check", spec.check)))?;
    let b = &spec.base;
    let (f, n) = (b.field, b.dim);
    let entries = n * n * n;
    let make = |coeffs: Vec<Scalar>| -> Option<Result<StructureBundle>> {
        let p = Product::from_flat(f, n, coeffs).expect("shape");
        let cand = b.clone().with_product(name, p).with_kind(spec.check.kind());
        match spec.check.run(&cand) {
            Ok(r) if r.passed => Some(Ok(cand)),
            Ok(_) => None,
            Err(e) => Some(Err(e)),
        }
    };
    let found: Vec<Result<StructureBundle>> = match spec.seed {
        None => {
            let count = space(f, entries, spec.limit)?;
            collect_ordered(count, |idx| make(candidate(f, idx, entries)))
        }
        Some(seed) => collect_ordered(spec.samples, |k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(k);
            make((0..entries).map(|_| f.random(&mut rng, 2)).collect())
        }),
    };
    let mut out: Vec<StructureBundle> = found.into_iter().collect::<Result<_>>()?;
    if let Some(m) = spec.max_results {
        out.truncate(m);
    }
    Ok(out)
}

/// What `run_search` looks for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    Derivations,
    GammaDerivations,
    TauSigmaDerivations,
    AlgebraMorphisms,
    CommutingMorphismPairs,
    AybeSolutions,
    CentralR,
    BihomAssocProducts,
}

impl Target {
    pub const ALL: [Target; 8] = [
        Target::Derivations,
        Target::GammaDerivations,
        Target::TauSigmaDerivations,
        Target::AlgebraMorphisms,
        Target::CommutingMorphismPairs,
        Target::AybeSolutions,
        Target::CentralR,
        Target::BihomAssocProducts,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Target::Derivations => "derivations",
            Target::GammaDerivations => "gamma-derivations",
            Target::TauSigmaDerivations => "tau-sigma-derivations",
            Target::AlgebraMorphisms => "morphisms",
            Target::CommutingMorphismPairs => "morphism-pairs",
            Target::AybeSolutions => "aybe",
            Target::CentralR => "central-r",
            Target::BihomAssocProducts => "assoc-products",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Target::ALL
            .into_iter()
            .find(|t| t.tag() == s)
            .ok_or_else(|| Error::InvariantViolation(format!("unknown search target `{s}`")))
    }
}

#[derive(Clone, Debug)]
pub struct SearchSpec {
    pub field: Field,
    pub dim: usize,
    pub target: Target,
    pub seed: Option<u64>,
    pub samples: u64,
    pub limit: u64,
    pub max_results: Option<usize>,
}

impl SearchSpec {
    pub fn new(field: Field, dim: usize, target: Target) -> Self {
        SearchSpec {
            field,
            dim,
            target,
            seed: None,
            samples: 0,
            limit: DEFAULT_LIMIT,
            max_results: None,
        }
    }
}

/// Runs a search and returns one bundle per result: the base bundle
/// extended by the found `D`, `A` (and `B`) or `r`, or a new product.
pub fn run_search(spec: &SearchSpec, base: Option<&StructureBundle>) -> Result<Vec<StructureBundle>> {
    if spec.target == Target::BihomAssocProducts {
        let mut scan = ProductScan::new(spec.field, spec.dim, CheckKind::Assoc);
        if let Some(b) = base {
            scan.base = b.clone();
        }
        scan.seed = spec.seed;
        scan.samples = spec.samples;
        scan.limit = spec.limit;
        scan.max_results = spec.max_results;
        return label(scan_products(&scan)?, spec.target, |_| vec![]);
    }
    let b = base.ok_or_else(|| Error::missing("product bundle"))?;
    if b.field != spec.field {
        return Err(Error::FieldMismatch(spec.field.to_string(), b.field.to_string()));
    }
    if b.dim != spec.dim {
        return Err(Error::dims(spec.dim, b.dim));
    }
    let with_d = |ds: Vec<LinearMap>| ds.into_iter().map(|d| b.clone().with_map("D", d)).collect();
    let mut found: Vec<StructureBundle> = match spec.target {
        Target::Derivations => with_d(derivation_space(b, "id", "id")?),
        Target::GammaDerivations => with_d(derivation_space(b, "gamma", "gamma")?),
        Target::TauSigmaDerivations => with_d(derivation_space(b, "tau", "sigma")?),
        Target::AlgebraMorphisms => enumerate_morphisms(b, &MorphismConstraints::default(), spec.limit)?
            .into_iter()
            .map(|m| b.clone().with_map("A", m))
            .collect(),
        Target::CommutingMorphismPairs => {
            let c = MorphismConstraints {
                commutes_with: vec!["alpha".into(), "beta".into()],
                ..Default::default()
            };
            commuting_morphism_pairs(b, &c, spec.limit)?
                .into_iter()
                .map(|(x, y)| b.clone().with_map("A", x).with_map("B", y))
                .collect()
        }
        Target::AybeSolutions | Target::CentralR => {
            let filter = if spec.target == Target::AybeSolutions {
                RFilter::Aybe
            } else {
                RFilter::Central
            };
            enumerate_r(b, filter, spec.limit)?
                .into_iter()
                .map(|r| b.clone().with_tensor("r", r.into_tensor()))
                .collect()
        }
        Target::BihomAssocProducts => unreachable!("handled above"),
    };
    if let Some(m) = spec.max_results {
        found.truncate(m);
    }
    label(found, spec.target, |_| vec![])
}

fn label(
    found: Vec<StructureBundle>,
    target: Target,
    notes: impl Fn(usize) -> Vec<String>,
) -> Result<Vec<StructureBundle>> {
    let total = found.len();
    Ok(found
        .into_iter()
        .enumerate()
        .map(|(i, b)| {
            let mut n = notes(i);
            n.push(format!("result {} of {total}", i + 1));
            b.provenance(&format!("search {target}"), &[], n)
        })
        .collect())
}

/// Whether `d` is a `(τ, σ)`-derivation; for assertions on search output.
pub fn is_derivation(mul: &Product, d: &LinearMap, tau: &LinearMap, sigma: &LinearMap) -> bool {
    derivation(mul, d, tau, sigma).passed
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::span_rank;

    fn dual_numbers(f: Field) -> StructureBundle {
        StructureBundle::new(f, 2, Kind::BihomCommutative)
            .with_product(
                "mul",
                Product::from_triples(f, 2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]),
            )
            .with_identity_maps()
    }

    #[test]
    fn derivations_of_dual_numbers() {
        let q = Field::Rationals;
        let ds = derivation_space(&dual_numbers(q), "id", "id").unwrap();
        assert_eq!(ds.len(), 1);
        assert_eq!(ds[0], LinearMap::from_i64(q, &[&[0, 0], &[0, 1]]));
        let f2 = Field::prime(2).unwrap();
        let b = dual_numbers(f2);
        let ds = derivation_space(&b, "id", "id").unwrap();
        assert_eq!(ds.len(), 2);
        let id = b.identity();
        for d in &ds {
            assert!(is_derivation(b.product("mul").unwrap(), d, &id, &id));
        }
    }

    #[test]
    fn zero_product_admits_every_endomorphism() {
        let q = Field::Rationals;
        let b = StructureBundle::new(q, 3, Kind::Generic)
            .with_product("mul", Product::zero(q, 3))
            .with_identity_maps();
        let ds = derivation_space(&b, "id", "id").unwrap();
        assert_eq!(ds.len(), 9);
        let flat: Vec<_> = ds
            .iter()
            .map(|d| crate::linalg::Vector::new(d.entries().to_vec()))
            .collect();
        assert_eq!(span_rank(&flat), 9);
    }

    #[test]
    fn morphisms_of_small_algebras() {
        let f2 = Field::prime(2).unwrap();
        let zero1 = StructureBundle::new(f2, 1, Kind::Generic)
            .with_product("mul", Product::zero(f2, 1))
            .with_identity_maps();
        let ms = enumerate_morphisms(&zero1, &MorphismConstraints::default(), DEFAULT_LIMIT).unwrap();
        assert_eq!(
            ms,
            vec![LinearMap::from_i64(f2, &[&[0]]), LinearMap::from_i64(f2, &[&[1]])]
        );

        // Over GF(2)[x]/(x²): zero, 1 ↦ 1 with x ↦ 0 or x ↦ x.
        let ms = enumerate_morphisms(&dual_numbers(f2), &MorphismConstraints::default(), DEFAULT_LIMIT).unwrap();
        assert_eq!(ms.len(), 3);
        let inv = MorphismConstraints {
            invertible: true,
            ..Default::default()
        };
        let ms = enumerate_morphisms(&dual_numbers(f2), &inv, DEFAULT_LIMIT).unwrap();
        assert_eq!(ms, vec![LinearMap::identity(f2, 2)]);
    }

    #[test]
    fn rational_enumeration_is_refused() {
        let r = enumerate_morphisms(
            &dual_numbers(Field::Rationals),
            &MorphismConstraints::default(),
            DEFAULT_LIMIT,
        );
        assert!(matches!(r, Err(Error::InvalidField(_))));
    }

    #[test]
    fn oversized_spaces_are_refused() {
        let f3 = Field::prime(3).unwrap();
        let scan = ProductScan::new(f3, 3, CheckKind::Assoc);
        assert!(matches!(scan_products(&scan), Err(Error::SpaceTooLarge { limit, .. }) if limit == DEFAULT_LIMIT));
    }

    #[test]
    fn upper_triangular_aybe_solutions() {
        let f2 = Field::prime(2).unwrap();
        // e11·e11 = e11, e11·e12 = e12.
        let b = StructureBundle::new(f2, 2, Kind::BihomAssociative)
            .with_product("mul", Product::from_triples(f2, 2, &[(0, 0, 0, 1), (0, 1, 1, 1)]))
            .with_identity_maps();
        let aybe = enumerate_r(&b, RFilter::Aybe, DEFAULT_LIMIT).unwrap();
        let central = enumerate_r(&b, RFilter::Central, DEFAULT_LIMIT).unwrap();
        assert!(aybe.iter().any(|r| *r.tensor() == Tensor::basis(f2, 2, &[1, 1])));
        assert!(aybe.iter().all(|r| central.contains(r)));
    }

    #[test]
    fn exhaustive_product_scans() {
        let f2 = Field::prime(2).unwrap();
        assert_eq!(
            scan_products(&ProductScan::new(f2, 1, CheckKind::Assoc)).unwrap().len(),
            2
        );
        let prelie = scan_products(&ProductScan::new(f2, 2, CheckKind::Prelie)).unwrap();
        let novikov = scan_products(&ProductScan::new(f2, 2, CheckKind::Novikov)).unwrap();
        let novikov_products: Vec<_> = novikov.iter().map(|b| b.product("mul").unwrap()).collect();
        assert!(prelie
            .iter()
            .any(|b| !novikov_products.contains(&b.product("mul").unwrap())));
    }

    #[test]
    fn seeded_scans_are_reproducible() {
        let f3 = Field::prime(3).unwrap();
        let spec = ProductScan::new(f3, 3, CheckKind::Assoc).seeded(7, 200);
        let a = scan_products(&spec).unwrap();
        let b = scan_products(&spec).unwrap();
        assert_eq!(a, b);
        let generic = ProductScan::new(f3, 3, CheckKind::Prelie).seeded(7, 50);
        assert_eq!(scan_products(&generic).unwrap(), scan_products(&generic).unwrap());
    }
}
