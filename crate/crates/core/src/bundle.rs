//! A finite-dimensional space carrying named products, comultiplications,
//! linear maps and tensors.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::LinearMap;
use crate::scalar::Field;
use crate::tensor::{Coproduct, Product, Tensor};

/// Which axiom system a bundle is meant to satisfy. Determines the
/// component names that must be present.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    BihomAssociative,
    BihomCoassociative,
    BihomCommutative,
    PreLie,
    Novikov,
    LeibnizLeft,
    LeibnizRight,
    LieLeft,
    LieRight,
    Dendriform,
    NovikovPoisson,
    InfBialgebra,
    RotaBaxter,
    Generic,
}

impl Kind {
    pub const ALL: [Kind; 14] = [
        Kind::BihomAssociative,
        Kind::BihomCoassociative,
        Kind::BihomCommutative,
        Kind::PreLie,
        Kind::Novikov,
        Kind::LeibnizLeft,
        Kind::LeibnizRight,
        Kind::LieLeft,
        Kind::LieRight,
        Kind::Dendriform,
        Kind::NovikovPoisson,
        Kind::InfBialgebra,
        Kind::RotaBaxter,
        Kind::Generic,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Kind::BihomAssociative => "bihom-associative",
            Kind::BihomCoassociative => "bihom-coassociative",
            Kind::BihomCommutative => "bihom-commutative",
            Kind::PreLie => "prelie",
            Kind::Novikov => "novikov",
            Kind::LeibnizLeft => "leibniz-left",
            Kind::LeibnizRight => "leibniz-right",
            Kind::LieLeft => "lie-left",
            Kind::LieRight => "lie-right",
            Kind::Dendriform => "dendriform",
            Kind::NovikovPoisson => "novikov-poisson",
            Kind::InfBialgebra => "inf-bialgebra",
            Kind::RotaBaxter => "rota-baxter",
            Kind::Generic => "generic",
        }
    }

    /// Component names required by this kind, as (products, comuls, maps).
    pub fn required(
        self,
    ) -> (
        &'static [&'static str],
        &'static [&'static str],
        &'static [&'static str],
    ) {
        const AB: &[&str] = &["alpha", "beta"];
        match self {
            Kind::BihomAssociative | Kind::BihomCommutative | Kind::PreLie | Kind::Novikov => (&["mul"], &[], AB),
            Kind::BihomCoassociative => (&[], &["Delta"], &["psi", "omega"]),
            Kind::LeibnizLeft | Kind::LeibnizRight | Kind::LieLeft | Kind::LieRight => (&["bracket"], &[], AB),
            Kind::Dendriform => (&["prec", "succ"], &[], AB),
            Kind::NovikovPoisson => (&["mul", "star"], &[], AB),
            Kind::InfBialgebra => (&["mul"], &["Delta"], &["alpha", "beta", "psi", "omega"]),
            Kind::RotaBaxter => (&["mul"], &[], &["alpha", "beta", "R"]),
            Kind::Generic => (&[], &[], &[]),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Kind::ALL
            .into_iter()
            .find(|k| k.tag() == s)
            .ok_or_else(|| Error::InvariantViolation(format!("unknown kind `{s}`")))
    }
}

/// Where a bundle came from. Ignored by equality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Provenance {
    pub theorem: String,
    pub inputs: Vec<String>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct StructureBundle {
    pub field: Field,
    pub dim: usize,
    pub kind: Kind,
    pub products: BTreeMap<String, Product>,
    pub comuls: BTreeMap<String, Coproduct>,
    pub maps: BTreeMap<String, LinearMap>,
    pub tensors: BTreeMap<String, Tensor>,
    pub provenance: Option<Provenance>,
}

impl PartialEq for StructureBundle {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.kind == other.kind
            && self.products == other.products
            && self.comuls == other.comuls
            && self.maps == other.maps
            && self.tensors == other.tensors
    }
}

impl Eq for StructureBundle {}

impl StructureBundle {
    pub fn new(field: Field, dim: usize, kind: Kind) -> Self {
        assert!(dim > 0, "bundles have positive dimension");
        StructureBundle {
            field,
            dim,
            kind,
            products: BTreeMap::new(),
            comuls: BTreeMap::new(),
            maps: BTreeMap::new(),
            tensors: BTreeMap::new(),
            provenance: None,
        }
    }

    pub fn with_product(mut self, name: &str, p: Product) -> Self {
        self.products.insert(name.to_string(), p);
        self
    }

    pub fn with_comul(mut self, name: &str, d: Coproduct) -> Self {
        self.comuls.insert(name.to_string(), d);
        self
    }

    pub fn with_map(mut self, name: &str, m: LinearMap) -> Self {
        self.maps.insert(name.to_string(), m);
        self
    }

    pub fn with_tensor(mut self, name: &str, t: Tensor) -> Self {
        self.tensors.insert(name.to_string(), t);
        self
    }

    pub fn with_kind(mut self, kind: Kind) -> Self {
        self.kind = kind;
        self
    }

    /// Sets `alpha` and `beta` to the identity.
    pub fn with_identity_maps(self) -> Self {
        let id = self.identity();
        self.with_map("alpha", id.clone()).with_map("beta", id)
    }

    pub fn identity(&self) -> LinearMap {
        LinearMap::identity(self.field, self.dim)
    }

    pub fn product(&self, name: &str) -> Result<&Product> {
        self.products.get(name).ok_or_else(|| Error::missing(name))
    }

    pub fn comul(&self, name: &str) -> Result<&Coproduct> {
        self.comuls.get(name).ok_or_else(|| Error::missing(name))
    }

    /// Looks up a map; the reserved name `id` is always the identity.
    pub fn map(&self, name: &str) -> Result<LinearMap> {
        if name == "id" {
            return Ok(self.identity());
        }
        self.maps.get(name).cloned().ok_or_else(|| Error::missing(name))
    }

    /// Like `map`, but a missing entry defaults to the identity.
    pub fn map_or_identity(&self, name: &str) -> LinearMap {
        self.map(name).unwrap_or_else(|_| self.identity())
    }

    pub fn tensor(&self, name: &str) -> Result<&Tensor> {
        self.tensors.get(name).ok_or_else(|| Error::missing(name))
    }

    /// Checks shapes, fields and the names required by the kind tag.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim;
        let fld = |f: Field| {
            if f == self.field {
                Ok(())
            } else {
                Err(Error::FieldMismatch(self.field.to_string(), f.to_string()))
            }
        };
        for p in self.products.values() {
            fld(p.field())?;
            if p.dim() != n {
                return Err(Error::dims(n, p.dim()));
            }
        }
        for d in self.comuls.values() {
            fld(d.field())?;
            if d.dim() != n {
                return Err(Error::dims(n, d.dim()));
            }
        }
        for m in self.maps.values() {
            fld(m.field())?;
            if m.rows() != n || m.cols() != n {
                return Err(Error::dims(format!("{n}x{n}"), format!("{}x{}", m.rows(), m.cols())));
            }
        }
        for t in self.tensors.values() {
            fld(t.field())?;
            if t.dim() != n {
                return Err(Error::dims(n, t.dim()));
            }
        }
        self.require_kind(self.kind)
    }

    /// Fails with `MissingComponent` unless the names of `kind` are present.
    pub fn require_kind(&self, kind: Kind) -> Result<()> {
        let (products, comuls, maps) = kind.required();
        for p in products {
            self.product(p)?;
        }
        for c in comuls {
            self.comul(c)?;
        }
        for m in maps {
            self.map(m)?;
        }
        Ok(())
    }

    pub fn provenance(mut self, theorem: &str, inputs: &[&str], notes: Vec<String>) -> Self {
        self.provenance = Some(Provenance {
            theorem: theorem.to_string(),
            inputs: inputs.iter().map(|s| s.to_string()).collect(),
            notes,
        });
        self
    }
}
