//! The combined analysis report: semigroup invariants, presentation, graded
//! cotangent dimensions, moduli description, and optionally the canonical
//! model. Serializes to deterministic JSON with schema_version 1.

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::canonical::CanonicalModel;
use crate::cotangent::{self, GradedT1Report};
use crate::error::Error;
use crate::field::ScalarField;
use crate::presentation::{self, IsobaricBinomial, ToricPresentation};
use crate::semigroup::NumericalSemigroup;
use crate::unfolding::{self, ModuliReport};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupBlock {
    pub generators: Vec<u64>,
    pub genus: u64,
    pub frobenius: i64,
    pub conductor: u64,
    pub gaps: Vec<u64>,
    pub symmetric: bool,
    pub hyperelliptic: bool,
    pub ordinary: bool,
    pub complete_intersection: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BinomialRecord {
    /// Generator value -> exponent as an object, e.g. {"4":0,"7":2,"10":0},
    /// keys in generator order on both sides.
    pub plus: Map<String, Value>,
    pub minus: Map<String, Value>,
    pub weight: u64,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PresentationBlock {
    pub embedding_dimension: usize,
    pub binomials: Vec<BinomialRecord>,
    pub betti_weights: Vec<u64>,
    pub complete_intersection: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuliBlock {
    pub dimension: u64,
    pub space: String,
    pub weights: Vec<u64>,
    pub coefficient_total: usize,
    pub free: usize,
    pub normalized: usize,
    pub equations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadricRecord {
    pub s: u64,
    pub index: usize,
    pub label: String,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateTermRecord {
    pub n: u64,
    pub s: u64,
    pub i: usize,
    pub label: String,
    pub eps: i8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub target: String,
    pub terms: Vec<CertificateTermRecord>,
    pub shrunk_residue_zero: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalBlock {
    /// Parametrization exponent pairs per coordinate.
    pub coordinates: Vec<(u64, u64)>,
    pub quadrics: Vec<QuadricRecord>,
    pub excluded_targets: Vec<String>,
    pub certificates: Vec<CertificateRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub characteristic: u64,
    pub semigroup: SemigroupBlock,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub presentation: Option<PresentationBlock>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub t1: Option<GradedT1Report>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub moduli: Option<ModuliBlock>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub canonical: Option<CanonicalBlock>,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, Copy)]
#[derive(Default)]
pub struct AnalyzeOptions {
    pub characteristic: u64,
    pub canonical: bool,
    pub require_moduli: bool,
}


fn binomial_record(b: &IsobaricBinomial, gens: &[u64]) -> BinomialRecord {
    let side = |ev: &crate::presentation::ExponentVector| {
        let mut map = Map::new();
        for (&a, &e) in gens.iter().zip(&ev.exponents) {
            map.insert(a.to_string(), json!(e));
        }
        map
    };
    BinomialRecord {
        plus: side(&b.plus),
        minus: side(&b.minus),
        weight: b.weight,
        text: b.render(gens),
    }
}

pub fn presentation_block(p: &ToricPresentation) -> PresentationBlock {
    let gens = p.semigroup.minimal_generators();
    PresentationBlock {
        embedding_dimension: p.semigroup.embedding_dimension(),
        binomials: p.generators.iter().map(|b| binomial_record(b, gens)).collect(),
        betti_weights: p.betti_weights.clone(),
        complete_intersection: p.is_complete_intersection(),
    }
}

pub fn moduli_block(m: &ModuliReport) -> ModuliBlock {
    ModuliBlock {
        dimension: m.dimension,
        space: m.space(),
        weights: m.weights.clone(),
        coefficient_total: m.coefficient_total,
        free: m.free_count,
        normalized: m.normalized_count,
        equations: m.equations.clone(),
    }
}

pub fn canonical_block(model: &CanonicalModel, verify: bool) -> Result<CanonicalBlock, Error> {
    let quadrics = model
        .quadrics()
        .iter()
        .map(|q| QuadricRecord {
            s: q.s,
            index: q.index,
            label: q.label(),
            text: q.render(),
        })
        .collect();
    let excluded_targets = model
        .excluded_targets()
        .iter()
        .map(|&(s, i)| model.quadric(s, i).unwrap().label())
        .collect();
    let mut certificates = Vec::new();
    for cert in model.all_certificates()? {
        let terms = cert
            .terms
            .iter()
            .map(|t| CertificateTermRecord {
                n: t.nongap,
                s: t.s,
                i: t.index,
                label: model.quadric(t.s, t.index).unwrap().label(),
                eps: t.sign,
            })
            .collect();
        let shrunk_residue_zero = if verify {
            Some(model.verify_shrunk_syzygy(&cert)?.residue_zero)
        } else {
            None
        };
        certificates.push(CertificateRecord {
            target: model.quadric(cert.target.0, cert.target.1).unwrap().label(),
            terms,
            shrunk_residue_zero,
        });
    }
    Ok(CanonicalBlock {
        coordinates: model.coordinates.clone(),
        quadrics,
        excluded_targets,
        certificates,
    })
}

/// Runs the full pipeline. The moduli block appears only when the semigroup
/// is symmetric, non-hyperelliptic, a complete intersection, and the
/// characteristic is admissible; otherwise a warning explains the omission
/// (or the guard error propagates under `require_moduli`).
pub fn analyze(s: &NumericalSemigroup, opts: AnalyzeOptions) -> Result<AnalysisReport, Error> {
    let field = ScalarField::from_characteristic(opts.characteristic)?;
    let p = presentation::minimal_presentation(s);
    let ci = p.is_complete_intersection();
    let mut warnings = Vec::new();

    let semigroup = SemigroupBlock {
        generators: s.minimal_generators().to_vec(),
        genus: s.genus(),
        frobenius: s.frobenius(),
        conductor: s.conductor(),
        gaps: s.gaps().to_vec(),
        symmetric: s.is_symmetric(),
        hyperelliptic: s.is_hyperelliptic(),
        ordinary: s.is_ordinary(),
        complete_intersection: ci,
    };

    let t1 = if ci && s.embedding_dimension() >= 2 {
        let rep = cotangent::t1_report_for(&p, field)?;
        warnings.extend(rep.warnings.iter().cloned());
        Some(rep)
    } else {
        if !ci {
            warnings.push("T1 omitted: not a complete intersection".to_string());
        }
        None
    };

    let moduli = match unfolding::moduli_report_for(&p, field) {
        Ok(m) => Some(moduli_block(&m)),
        Err(e) => {
            if opts.require_moduli {
                return Err(e);
            }
            warnings.push(format!("moduli omitted: {e}"));
            None
        }
    };

    let canonical = if opts.canonical {
        match CanonicalModel::new(s) {
            Ok(model) => Some(canonical_block(&model, ci)?),
            Err(e) => {
                warnings.push(format!("canonical model omitted: {e}"));
                None
            }
        }
    } else {
        None
    };

    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        characteristic: opts.characteristic,
        semigroup,
        presentation: Some(presentation_block(&p)),
        t1,
        moduli,
        canonical,
        warnings,
    })
}

/// Machine-readable error payload for `--json` mode.
pub fn error_json(e: &Error) -> Value {
    let mut err = Map::new();
    err.insert("kind".into(), json!(e.kind()));
    err.insert("message".into(), json!(e.to_string()));
    json!({ "schema_version": SCHEMA_VERSION, "error": Value::Object(err) })
}
