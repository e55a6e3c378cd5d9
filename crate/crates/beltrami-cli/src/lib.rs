//! Analysis pipeline behind the `beltrami` binary.
//!
//! [`analyze`] takes a discriminant and one k-linear map, in either the
//! (a, b) pair or the 2x2 matrix presentation, and produces an
//! [`AnalysisReport`]: the L/A split, the Beltrami value and its 𝒟 when the
//! linear part is nonzero, the conformal dilatation with its
//! regular/exceptional tag, and a `theorem_check` flag confirming the two
//! dilatation routes agree. [`run_vectors`] replays files of
//! {input, expected report} records and compares exactly, field by field.

use beltrami_core::conformal::{canonical_structure, dilatation, dilatation_via_beltrami};
use beltrami_core::semilinear::{beltrami, dcal, decompose_matrix};
use beltrami_core::{
    ConformalClass, EndoMatrix, Error, ExtScalar, QuadExtField, Rational, SemiLinearMap,
};
use serde::{Deserialize, Serialize};

/// The two accepted presentations of the input map.
#[derive(Clone, Debug)]
pub enum MapSpec {
    /// K-linear part and anti-linear part.
    Pair(ExtScalar, ExtScalar),
    /// Row-major matrix over k in the basis {v0, rho v0}.
    Matrix(EndoMatrix),
}

/// How the analyzed map interacts with the conformal structures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classification {
    #[serde(rename = "regular")]
    Regular,
    #[serde(rename = "exceptional")]
    Exceptional,
    #[serde(rename = "k-linear (conformal)")]
    KLinear,
    #[serde(rename = "anti-linear")]
    AntiLinear,
}

/// Full structured result of one analysis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    #[serde(with = "beltrami_core::rational::serde_str")]
    pub d: Rational,
    pub map: SemiLinearMap,
    pub linear_part: ExtScalar,
    pub anti_part: ExtScalar,
    /// Value of the Beltrami form; present exactly when the linear part is
    /// nonzero.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beltrami: Option<ExtScalar>,
    /// 𝒟 of the Beltrami form; present exactly when `beltrami` is.
    #[serde(
        default,
        with = "beltrami_core::rational::serde_opt_str",
        skip_serializing_if = "Option::is_none"
    )]
    pub dcal_mu: Option<Rational>,
    pub dilatation: ConformalClass,
    pub classification: Classification,
    /// Agreement of the two dilatation routes: direct pullback against the
    /// Beltrami reconstruction (or against the canonical class when no
    /// Beltrami form exists). Holds for every valid input.
    pub theorem_check: bool,
}

/// Run the full pipeline on one map over Q(sqrt(d)).
pub fn analyze(d: Rational, spec: MapSpec) -> Result<AnalysisReport, Error> {
    let k = QuadExtField::new(d.clone())?;
    let map = match spec {
        MapSpec::Pair(a, b) => SemiLinearMap::from_pair(a, b),
        MapSpec::Matrix(m) => decompose_matrix(&k, &m),
    };
    if map.is_zero() {
        return Err(Error::ZeroMap);
    }
    let dil = dilatation(&k, &map)?;

    let (beltrami_value, dcal_mu, theorem_check) = if map.a.is_zero() {
        // pure anti-linear maps are conformal, so the dilatation must be
        // the canonical class
        (None, None, dil == canonical_structure(&k))
    } else {
        let mu = beltrami(&k, &map)?;
        let via = dilatation_via_beltrami(&k, &map)?;
        (Some(mu.b.clone()), Some(dcal(&k, &mu)), via == dil)
    };

    let classification = if map.b.is_zero() {
        Classification::KLinear
    } else if map.a.is_zero() {
        Classification::AntiLinear
    } else {
        match dil.tag {
            beltrami_core::ClassTag::Regular => Classification::Regular,
            beltrami_core::ClassTag::Exceptional => Classification::Exceptional,
        }
    };

    Ok(AnalysisReport {
        d,
        linear_part: map.a.clone(),
        anti_part: map.b.clone(),
        map,
        beltrami: beltrami_value,
        dcal_mu,
        dilatation: dil,
        classification,
        theorem_check,
    })
}

/// One replayable test vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorRecord {
    pub input: VectorInput,
    pub expected: AnalysisReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VectorInput {
    #[serde(with = "beltrami_core::rational::serde_str")]
    pub d: Rational,
    pub map: SemiLinearMap,
}

/// One failed vector: its zero-based index and what went wrong.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorFailure {
    pub index: usize,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorSummary {
    pub passed: usize,
    pub total: usize,
    pub failures: Vec<VectorFailure>,
}

impl VectorSummary {
    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }
}

/// Parse vector file content: either one JSON record per line or a single
/// top-level JSON array of records.
pub fn parse_vectors(text: &str) -> Result<Vec<VectorRecord>, Error> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        return serde_json::from_str(trimmed)
            .map_err(|e| Error::Parse(format!("invalid vector array: {e}")));
    }
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| {
            serde_json::from_str(line)
                .map_err(|e| Error::Parse(format!("invalid vector record on line {}: {e}", i + 1)))
        })
        .collect()
}

/// Replay every record through [`analyze`] and compare exactly.
pub fn run_vectors(text: &str) -> Result<VectorSummary, Error> {
    let records = parse_vectors(text)?;
    let total = records.len();
    let mut failures = Vec::new();
    for (index, record) in records.into_iter().enumerate() {
        let reason = match analyze(
            record.input.d.clone(),
            MapSpec::Pair(record.input.map.a.clone(), record.input.map.b.clone()),
        ) {
            Ok(actual) => first_mismatch(&record.expected, &actual)
                .map(|field| format!("mismatch in field `{field}`")),
            Err(e) => Some(format!("analysis failed: {e}")),
        };
        if let Some(reason) = reason {
            failures.push(VectorFailure { index, reason });
        }
    }
    Ok(VectorSummary {
        passed: total - failures.len(),
        total,
        failures,
    })
}

/// Name of the first report field where the two disagree, in declaration
/// order; None when they are equal.
pub fn first_mismatch(expected: &AnalysisReport, actual: &AnalysisReport) -> Option<&'static str> {
    if expected.d != actual.d {
        Some("d")
    } else if expected.map != actual.map {
        Some("map")
    } else if expected.linear_part != actual.linear_part {
        Some("linear_part")
    } else if expected.anti_part != actual.anti_part {
        Some("anti_part")
    } else if expected.beltrami != actual.beltrami {
        Some("beltrami")
    } else if expected.dcal_mu != actual.dcal_mu {
        Some("dcal_mu")
    } else if expected.dilatation != actual.dilatation {
        Some("dilatation")
    } else if expected.classification != actual.classification {
        Some("classification")
    } else if expected.theorem_check != actual.theorem_check {
        Some("theorem_check")
    } else {
        None
    }
}

/// Process exit code for each failure mode: bad input text is 2, an
/// invalid discriminant 3, the zero map 4.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::ZeroDiscriminant | Error::SquareDiscriminant(_) => 3,
        Error::ZeroMap => 4,
        _ => 2,
    }
}
