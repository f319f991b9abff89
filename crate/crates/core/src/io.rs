//! The bundle file format: a TOML document with sparse triples for
//! products and comultiplications, dense rows for maps and sparse pairs for
//! order-2 tensors. The grammar is in `docs/bundle-format.md`.
//!
//! `save` is canonical (sorted names, lexicographic entries, scalars in
//! lowest terms), so `save ∘ load ∘ save` reproduces its input byte for
//! byte.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Deserialize;
use toml::Spanned;

use crate::bundle::{Kind, Provenance, StructureBundle};
use crate::error::{Error, Result};
use crate::linalg::LinearMap;
use crate::scalar::{Field, Scalar};
use crate::tensor::{Coproduct, Product, Tensor};

type Idx = Spanned<usize>;
type Text = Spanned<String>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Doc {
    field: Text,
    dim: Spanned<usize>,
    kind: Text,
    #[serde(default)]
    products: BTreeMap<String, Triples>,
    #[serde(default)]
    comuls: BTreeMap<String, Triples>,
    #[serde(default)]
    maps: BTreeMap<String, Rows>,
    #[serde(default)]
    tensors: BTreeMap<String, Pairs>,
    provenance: Option<ProvenanceDoc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Triples {
    triples: Vec<(Idx, Idx, Idx, Text)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Rows {
    rows: Spanned<Vec<Vec<Text>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Pairs {
    pairs: Vec<(Idx, Idx, Text)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ProvenanceDoc {
    theorem: String,
    #[serde(default)]
    inputs: Vec<String>,
    #[serde(default)]
    notes: Vec<String>,
}

/// 1-based line and column of a byte offset.
fn position(src: &str, offset: usize) -> (usize, usize) {
    let before = &src[..offset.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

struct Ctx<'a> {
    src: &'a str,
    field: Field,
    dim: usize,
}

impl Ctx<'_> {
    fn parse_error(&self, span: std::ops::Range<usize>, message: impl Into<String>) -> Error {
        let (line, column) = position(self.src, span.start);
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn invalid(&self, span: std::ops::Range<usize>, message: impl std::fmt::Display) -> Error {
        let (line, column) = position(self.src, span.start);
        Error::InvariantViolation(format!("{line}:{column}: {message}"))
    }

    fn index(&self, i: &Idx) -> Result<usize> {
        if *i.get_ref() < self.dim {
            Ok(*i.get_ref())
        } else {
            Err(self.invalid(
                i.span(),
                format_args!("index {} out of range for dim {}", i.get_ref(), self.dim),
            ))
        }
    }

    fn scalar(&self, t: &Text) -> Result<Scalar> {
        self.field.parse(t.get_ref()).map_err(|e| match e {
            Error::DivisionByZero => self.invalid(t.span(), format_args!("zero denominator in `{}`", t.get_ref())),
            _ => self.parse_error(t.span(), format!("invalid scalar `{}`", t.get_ref())),
        })
    }

    /// Coefficient table of order-3 data, rejecting repeated triples.
    fn triples(&self, name: &str, t: &Triples) -> Result<Vec<Scalar>> {
        let n = self.dim;
        let mut c = vec![self.field.zero(); n * n * n];
        let mut seen = BTreeSet::new();
        for (i, j, k, v) in &t.triples {
            let key = (self.index(i)?, self.index(j)?, self.index(k)?);
            if !seen.insert(key) {
                return Err(self.invalid(i.span(), format_args!("duplicate entry {key:?} in `{name}`")));
            }
            c[(key.0 * n + key.1) * n + key.2] = self.scalar(v)?;
        }
        Ok(c)
    }
}

/// Parses a bundle document.
pub fn parse_bundle(src: &str) -> Result<StructureBundle> {
    let doc: Doc = toml::from_str(src).map_err(|e| {
        let (line, column) = e.span().map_or((1, 1), |s| position(src, s.start));
        Error::Parse {
            line,
            column,
            message: e.message().to_string(),
        }
    })?;
    let field: Field = doc
        .field
        .get_ref()
        .parse()
        .map_err(|_| Error::InvalidField(doc.field.get_ref().clone()))?;
    let dim = *doc.dim.get_ref();
    let cx = Ctx { src, field, dim };
    if dim == 0 {
        return Err(cx.invalid(doc.dim.span(), "dim must be positive"));
    }
    let kind: Kind = doc.kind.get_ref().parse().map_err(|e| cx.invalid(doc.kind.span(), e))?;
    let mut b = StructureBundle::new(field, dim, kind);
    for (name, t) in &doc.products {
        b = b.with_product(name, Product::from_flat(field, dim, cx.triples(name, t)?)?);
    }
    for (name, t) in &doc.comuls {
        b = b.with_comul(name, Coproduct::from_flat(field, dim, cx.triples(name, t)?)?);
    }
    for (name, m) in &doc.maps {
        let rows = m.rows.get_ref();
        if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
            return Err(cx.invalid(m.rows.span(), format_args!("map `{name}` must be {dim}x{dim}")));
        }
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|t| cx.scalar(t)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        b = b.with_map(name, LinearMap::from_rows(field, parsed)?);
    }
    for (name, t) in &doc.tensors {
        let mut c = vec![field.zero(); dim * dim];
        let mut seen = BTreeSet::new();
        for (i, j, v) in &t.pairs {
            let key = (cx.index(i)?, cx.index(j)?);
            if !seen.insert(key) {
                return Err(cx.invalid(i.span(), format_args!("duplicate entry {key:?} in `{name}`")));
            }
            c[key.0 * dim + key.1] = cx.scalar(v)?;
        }
        b = b.with_tensor(name, Tensor::from_flat(field, dim, 2, c)?);
    }
    if let Some(p) = doc.provenance {
        b.provenance = Some(Provenance {
            theorem: p.theorem,
            inputs: p.inputs,
            notes: p.notes,
        });
    }
    b.validate()?;
    Ok(b)
}

fn quote(s: &str) -> String {
    toml::Value::String(s.to_string()).to_string()
}

/// Bare keys are written as is, anything else quoted.
fn key(s: &str) -> String {
    let bare = !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-');
    if bare {
        s.to_string()
    } else {
        quote(s)
    }
}

fn write_triples(out: &mut String, coeffs: &[Scalar], n: usize) {
    out.push_str("triples = [\n");
    for (idx, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            let (i, j, k) = (idx / (n * n), (idx / n) % n, idx % n);
            let _ = writeln!(out, "  [{i}, {j}, {k}, \"{c}\"],");
        }
    }
    out.push_str("]\n");
}

/// The canonical text of a bundle.
pub fn render_bundle(b: &StructureBundle) -> Result<String> {
    let n = b.dim;
    let mut out = String::new();
    let _ = writeln!(out, "field = \"{}\"\ndim = {n}\nkind = \"{}\"", b.field, b.kind);
    if let Some(p) = &b.provenance {
        let list = |v: &[String]| v.iter().map(|s| quote(s)).collect::<Vec<_>>().join(", ");
        let _ = writeln!(
            out,
            "\n[provenance]\ntheorem = {}\ninputs = [{}]\nnotes = [{}]",
            quote(&p.theorem),
            list(&p.inputs),
            list(&p.notes)
        );
    }
    for (name, p) in &b.products {
        let _ = writeln!(out, "\n[products.{}]", key(name));
        write_triples(&mut out, p.coeffs(), n);
    }
    for (name, d) in &b.comuls {
        let _ = writeln!(out, "\n[comuls.{}]", key(name));
        write_triples(&mut out, d.coeffs(), n);
    }
    for (name, m) in &b.maps {
        let _ = writeln!(out, "\n[maps.{}]\nrows = [", key(name));
        for i in 0..m.rows() {
            let row: Vec<String> = m.row(i).iter().map(|x| format!("\"{x}\"")).collect();
            let _ = writeln!(out, "  [{}],", row.join(", "));
        }
        out.push_str("]\n");
    }
    for (name, t) in &b.tensors {
        if t.order() != 2 {
            return Err(Error::InvariantViolation(format!(
                "tensor `{name}` has order {}; only order 2 can be saved",
                t.order()
            )));
        }
        let _ = writeln!(out, "\n[tensors.{}]\npairs = [", key(name));
        for (idx, c) in t.terms() {
            let _ = writeln!(out, "  [{}, {}, \"{c}\"],", idx[0], idx[1]);
        }
        out.push_str("]\n");
    }
    Ok(out)
}

pub fn load_bundle(path: impl AsRef<Path>) -> Result<StructureBundle> {
    parse_bundle(&fs::read_to_string(path)?)
}

pub fn save_bundle(b: &StructureBundle, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, render_bundle(b)?)?;
    Ok(())
}
