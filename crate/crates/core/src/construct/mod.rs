//! Constructive theorems: each checks its hypotheses, builds the new
//! structure and, in verify mode, re-checks the conclusion.

mod dendriform;
mod gd;
mod lie;
mod twist;

use crate::bundle::{Provenance, StructureBundle};
use crate::check::{multiplicative, CheckReport};
use crate::error::{Error, Result};
use crate::linalg::LinearMap;
use crate::tensor::Product;

pub use dendriform::*;
pub use gd::*;
pub use lie::*;
pub use twist::*;

/// Whether to re-check the conclusion after building.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    #[default]
    Verify,
    /// Skip the conclusion check. Hypotheses are still checked.
    Trust,
}

#[derive(Clone, Debug)]
pub struct ConstructionResult {
    pub bundle: StructureBundle,
    pub provenance: Provenance,
    /// Report of the conclusion check; `None` in trust mode.
    pub conclusion: Option<CheckReport>,
}

impl ConstructionResult {
    pub(crate) fn finish(
        bundle: StructureBundle,
        theorem: &str,
        inputs: &[&str],
        notes: Vec<String>,
        mode: Mode,
        conclusion: impl FnOnce(&StructureBundle) -> Result<CheckReport>,
    ) -> Result<Self> {
        let bundle = bundle.provenance(theorem, inputs, notes);
        let conclusion = match mode {
            Mode::Trust => None,
            Mode::Verify => {
                let report = conclusion(&bundle)?;
                if !report.passed {
                    return Err(Error::ConclusionFailed {
                        theorem: theorem.to_string(),
                        report: Box::new(report),
                    });
                }
                Some(report)
            }
        };
        Ok(ConstructionResult {
            provenance: bundle.provenance.clone().unwrap_or_default(),
            bundle,
            conclusion,
        })
    }
}

/// Turns a failed report into `HypothesisFailed`.
pub(crate) fn require(hypothesis: &str, report: CheckReport) -> Result<()> {
    if report.passed {
        Ok(())
    } else {
        Err(Error::hypothesis(hypothesis, report))
    }
}

/// `NonCommutingMaps` for the first pair that does not commute.
pub(crate) fn require_commuting(maps: &[(&str, &LinearMap)]) -> Result<()> {
    for (i, (an, a)) in maps.iter().enumerate() {
        for (bn, b) in &maps[i + 1..] {
            if !a.commutes_with(b) {
                return Err(Error::NonCommutingMaps {
                    first: an.to_string(),
                    second: bn.to_string(),
                });
            }
        }
    }
    Ok(())
}

/// `NotAMorphism` unless `m` is multiplicative for every listed product.
pub(crate) fn require_multiplicative(name: &str, m: &LinearMap, products: &[(&str, &Product)]) -> Result<()> {
    for (pn, p) in products {
        let r = multiplicative(name, m, pn, p);
        if let Some(v) = r.violations.first() {
            return Err(Error::NotAMorphism {
                map: name.to_string(),
                reason: format!("{v}"),
            });
        }
    }
    Ok(())
}
