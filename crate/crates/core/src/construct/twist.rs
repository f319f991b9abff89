use std::fmt;
use std::str::FromStr;

use crate::bundle::{Kind, StructureBundle};
use crate::check::{self, comultiplicative, CheckReport};
use crate::error::{Error, Result};
use crate::infinitesimal;
use crate::linalg::LinearMap;
use crate::tensor::Product;

use super::{require, require_commuting, require_multiplicative, ConstructionResult, Mode};

/// The structures a Yau twist applies to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwistKind {
    Associative,
    Commutative,
    Novikov,
    NovikovPoisson,
    Infinitesimal,
}

impl TwistKind {
    pub const ALL: [TwistKind; 5] = [
        TwistKind::Associative,
        TwistKind::Commutative,
        TwistKind::Novikov,
        TwistKind::NovikovPoisson,
        TwistKind::Infinitesimal,
    ];

    pub fn theorem(self) -> &'static str {
        match self {
            TwistKind::Associative => "yau-assoc",
            TwistKind::Commutative => "yau-commutative",
            TwistKind::Novikov => "yau-novikov",
            TwistKind::NovikovPoisson => "yau-np",
            TwistKind::Infinitesimal => "yau-inf",
        }
    }

    pub fn kind(self) -> Kind {
        match self {
            TwistKind::Associative => Kind::BihomAssociative,
            TwistKind::Commutative => Kind::BihomCommutative,
            TwistKind::Novikov => Kind::Novikov,
            TwistKind::NovikovPoisson => Kind::NovikovPoisson,
            TwistKind::Infinitesimal => Kind::InfBialgebra,
        }
    }

    fn products(self) -> &'static [&'static str] {
        match self {
            TwistKind::NovikovPoisson => &["mul", "star"],
            _ => &["mul"],
        }
    }

    /// The axiom check for this kind of structure.
    pub fn check(self, b: &StructureBundle) -> Result<CheckReport> {
        match self {
            TwistKind::Associative => check::check_bihom_associative(b),
            TwistKind::Commutative => check::check_bihom_commutative(b),
            TwistKind::Novikov => check::check_bihom_novikov(b),
            TwistKind::NovikovPoisson => check::check_novikov_poisson(b),
            TwistKind::Infinitesimal => infinitesimal::validate_inf_bialgebra(b),
        }
    }
}

impl fmt::Display for TwistKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.theorem())
    }
}

impl FromStr for TwistKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TwistKind::ALL
            .into_iter()
            .find(|k| k.theorem() == s || k.kind().tag() == s)
            .ok_or_else(|| Error::InvariantViolation(format!("unknown twist kind `{s}`")))
    }
}

/// Yau twist along the maps named `a_name`, `b_name` of the bundle (`id`
/// is allowed). Products become `μ∘(Ã⊗B̃)` and the structure maps
/// `(α∘Ã, β∘B̃)`. For an infinitesimal bialgebra the input must be
/// classical and `ψ = Ã`, `ω = B̃`, so `Δ` becomes `(B̃⊗Ã)∘Δ`.
pub fn yau_twist(
    b: &StructureBundle,
    kind: TwistKind,
    a_name: &str,
    b_name: &str,
    mode: Mode,
) -> Result<ConstructionResult> {
    let (ta, tb) = (b.map(a_name)?, b.map(b_name)?);
    if kind == TwistKind::Infinitesimal {
        return yau_twist_inf(b, [(a_name, &ta), (b_name, &tb), (a_name, &ta), (b_name, &tb)], mode);
    }
    twist_by(b, kind, (a_name, &ta), (b_name, &tb), kind.theorem(), vec![], mode)
}

/// The power twist `A^n`: `Ã = αⁿ`, `B̃ = βⁿ`, giving structure maps
/// `(α^{n+1}, β^{n+1})`.
pub fn power_twist(b: &StructureBundle, kind: TwistKind, n: u32, mode: Mode) -> Result<ConstructionResult> {
    if kind == TwistKind::Infinitesimal {
        return Err(Error::InvariantViolation(
            "power twists apply to algebras, not infinitesimal bialgebras".into(),
        ));
    }
    let an = b.map("alpha")?.pow(n);
    let bn = b.map("beta")?.pow(n);
    twist_by(
        b,
        kind,
        ("alpha^n", &an),
        ("beta^n", &bn),
        "yau-power",
        vec![format!("n = {n}")],
        mode,
    )
}

fn twist_by(
    b: &StructureBundle,
    kind: TwistKind,
    (an, ta): (&str, &LinearMap),
    (bn, tb): (&str, &LinearMap),
    theorem: &str,
    notes: Vec<String>,
    mode: Mode,
) -> Result<ConstructionResult> {
    b.validate()?;
    b.require_kind(kind.kind())?;
    let (alpha, beta) = (b.map("alpha")?, b.map("beta")?);
    let products: Vec<(&str, &Product)> = kind
        .products()
        .iter()
        .map(|n| Ok((*n, b.product(n)?)))
        .collect::<Result<_>>()?;
    require_commuting(&[("alpha", &alpha), ("beta", &beta), (an, ta), (bn, tb)])?;
    require_multiplicative(an, ta, &products)?;
    require_multiplicative(bn, tb, &products)?;
    require(&format!("input {}", kind.kind()), kind.check(b)?)?;

    let mut out = StructureBundle::new(b.field, b.dim, kind.kind())
        .with_map("alpha", alpha.compose(ta))
        .with_map("beta", beta.compose(tb));
    for (name, p) in &products {
        out = out.with_product(name, p.twist(ta, tb));
    }
    ConstructionResult::finish(out, theorem, &[an, bn], notes, mode, |o| kind.check(o))
}

/// Yau twist of a classical infinitesimal bialgebra by four pairwise
/// commuting algebra and coalgebra morphisms `[α, β, ψ, ω]`:
/// `μ∘(α⊗β)`, `(ω⊗ψ)∘Δ`.
pub fn yau_twist_inf(b: &StructureBundle, maps: [(&str, &LinearMap); 4], mode: Mode) -> Result<ConstructionResult> {
    b.validate()?;
    b.require_kind(Kind::InfBialgebra)?;
    for name in ["alpha", "beta", "psi", "omega"] {
        if !b.map(name)?.is_identity() {
            return Err(Error::HypothesisFailed {
                hypothesis: format!("classical input ({name} = id)"),
                report: None,
            });
        }
    }
    require("input inf-bialgebra", infinitesimal::validate_inf_bialgebra(b)?)?;
    let mul = b.product("mul")?;
    let delta = b.comul("Delta")?;
    require_commuting(&maps)?;
    for (name, m) in maps {
        require_multiplicative(name, m, &[("mul", mul)])?;
        if let Some(v) = comultiplicative(name, m, "Delta", delta).violations.first() {
            return Err(Error::NotAMorphism {
                map: name.to_string(),
                reason: v.to_string(),
            });
        }
    }
    let [(an, a), (bn, be), (pn, p), (on, o)] = maps;
    let out = StructureBundle::new(b.field, b.dim, Kind::InfBialgebra)
        .with_product("mul", mul.twist(a, be))
        .with_comul("Delta", delta.twist(o, p))
        .with_map("alpha", a.clone())
        .with_map("beta", be.clone())
        .with_map("psi", p.clone())
        .with_map("omega", o.clone());
    ConstructionResult::finish(
        out,
        "yau-inf",
        &[an, bn, pn, on],
        vec![],
        mode,
        infinitesimal::validate_inf_bialgebra,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Vector;
    use crate::scalar::Field;

    fn trunc2() -> StructureBundle {
        let q = Field::Rationals;
        StructureBundle::new(q, 2, Kind::BihomCommutative)
            .with_product(
                "mul",
                Product::from_triples(q, 2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]),
            )
            .with_identity_maps()
    }

    #[test]
    fn identity_twist_is_trivial() {
        let b = trunc2();
        let r = yau_twist(&b, TwistKind::Commutative, "id", "id", Mode::Verify).unwrap();
        assert_eq!(r.bundle, b);
        assert_eq!(r.provenance.theorem, "yau-commutative");
    }

    #[test]
    fn scaling_twist_of_dual_numbers() {
        let q = Field::Rationals;
        let b = trunc2()
            .with_map("A", LinearMap::diagonal(q, &[1, 2]))
            .with_map("B", LinearMap::diagonal(q, &[1, 3]));
        let r = yau_twist(&b, TwistKind::Commutative, "A", "B", Mode::Verify).unwrap();
        let p = r.bundle.product("mul").unwrap();
        assert_eq!(p.basis_product(0, 1), Vector::from_i64(q, &[0, 3]));
        assert_eq!(p.basis_product(1, 0), Vector::from_i64(q, &[0, 2]));
        assert!(p.basis_product(1, 1).is_zero());
        assert!(check::check_bihom_commutative(&r.bundle).unwrap().passed);
        assert_eq!(r.bundle.map("alpha").unwrap(), LinearMap::diagonal(q, &[1, 2]));
    }

    #[test]
    fn non_morphisms_and_non_commuting_maps_rejected() {
        let q = Field::Rationals;
        let swap = LinearMap::from_i64(q, &[&[0, 1], &[1, 0]]);
        let b = trunc2()
            .with_map("S", swap)
            .with_map("A", LinearMap::diagonal(q, &[1, 2]));
        assert!(matches!(
            yau_twist(&b, TwistKind::Associative, "S", "id", Mode::Verify),
            Err(Error::NotAMorphism { map, .. }) if map == "S"
        ));
        let b = b.with_map("alpha", LinearMap::diagonal(q, &[1, 2]));
        let shear = LinearMap::from_i64(q, &[&[1, 0], &[1, 1]]);
        let b = b.with_map("C", shear);
        assert!(matches!(
            yau_twist(&b, TwistKind::Associative, "C", "id", Mode::Verify),
            Err(Error::NonCommutingMaps { .. })
        ));
    }

    #[test]
    fn power_twists_of_a_twisted_algebra() {
        let q = Field::Rationals;
        let b = trunc2()
            .with_map("A", LinearMap::diagonal(q, &[1, 2]))
            .with_map("B", LinearMap::diagonal(q, &[1, 3]));
        let b = yau_twist(&b, TwistKind::Commutative, "A", "B", Mode::Verify)
            .unwrap()
            .bundle;
        for n in 0..4 {
            let r = power_twist(&b, TwistKind::Commutative, n, Mode::Verify).unwrap();
            assert_eq!(
                r.bundle.map("beta").unwrap(),
                LinearMap::diagonal(q, &[1, 3i64.pow(n + 1)])
            );
        }
    }
}
