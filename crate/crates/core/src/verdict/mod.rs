//! Verdict reports: every checked claim becomes one section with a published
//! or derived reference value, the recomputed value and a status.

mod pipelines;
mod render;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::curve::{ParamCurve, Reading, SyzygySpec};
use crate::exact::ModularConfig;
use crate::singularity::{bundled_catalog, SingularityRecord, DEFAULT_TRUNCATION};
use crate::{Error, Result};

pub use pipelines::{curve_cert, delta_audit, run_all, run_p3, run_p4, run_p5};
pub use render::{render_json, render_text};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Match,
    Mismatch,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::Inconclusive => "inconclusive",
        })
    }
}

/// Where a reference value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Stated in the published argument.
    Published,
    /// Produced by a computation in this tool.
    Derived,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tagged {
    pub value: String,
    pub provenance: Provenance,
}

impl Tagged {
    pub fn published(v: impl ToString) -> Self {
        Self {
            value: v.to_string(),
            provenance: Provenance::Published,
        }
    }

    pub fn derived(v: impl ToString) -> Self {
        Self {
            value: v.to_string(),
            provenance: Provenance::Derived,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Pipeline {
    P5,
    P4,
    P3,
    CurveCert,
    DeltaAudit,
}

impl fmt::Display for Pipeline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pipeline::P5 => "verify-p5",
            Pipeline::P4 => "verify-p4",
            Pipeline::P3 => "verify-p3",
            Pipeline::CurveCert => "curve-cert",
            Pipeline::DeltaAudit => "delta-audit",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Section {
    pub id: String,
    pub pipeline: Pipeline,
    pub claim: String,
    pub reference: Option<Tagged>,
    pub computed: Tagged,
    pub status: Status,
    pub evidence: String,
    /// False for claims the manifest lists as discrepancy flags.
    pub load_bearing: bool,
}

impl Section {
    pub(crate) fn new(
        pipeline: Pipeline,
        id: impl Into<String>,
        claim: impl Into<String>,
        reference: Option<Tagged>,
        computed: Tagged,
        status: Status,
        evidence: impl Into<String>,
    ) -> Self {
        Self {
            id: id.into(),
            pipeline,
            claim: claim.into(),
            reference,
            computed,
            status,
            evidence: evidence.into(),
            load_bearing: true,
        }
    }

    /// A mismatch or inconclusive result on a flag-only claim.
    pub fn is_warning(&self) -> bool {
        !self.load_bearing && self.status != Status::Match
    }
}

pub(crate) fn status_of(ok: bool) -> Status {
    if ok {
        Status::Match
    } else {
        Status::Mismatch
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct ManifestEntry {
    pub id: String,
    pub reason: String,
}

#[derive(Deserialize)]
struct ManifestFile {
    claim: Vec<ManifestEntry>,
}

/// Claims whose mismatch is a warning; everything else is load-bearing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Manifest {
    flags: BTreeMap<String, String>,
}

const CLAIMS: &str = include_str!("../../data/claims.toml");

impl Manifest {
    pub fn bundled() -> Self {
        Self::from_toml(CLAIMS).expect("bundled manifest parses")
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        let file: ManifestFile =
            toml::from_str(text).map_err(|e| Error::input(format!("claims manifest: {e}")))?;
        Ok(Self {
            flags: file.claim.into_iter().map(|c| (c.id, c.reason)).collect(),
        })
    }

    pub fn flag_reason(&self, id: &str) -> Option<&str> {
        self.flags.get(id).map(String::as_str)
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.flags.keys().map(String::as_str)
    }

    pub(crate) fn apply(&self, sections: &mut [Section]) {
        for s in sections {
            s.load_bearing = !self.flags.contains_key(&s.id);
        }
    }
}

/// Inputs and knobs shared by all pipelines.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub modular: ModularConfig,
    pub truncation: usize,
    pub max_depth: usize,
    pub syzygies: SyzygySpec,
    pub curve: ParamCurve,
    pub catalog: Vec<SingularityRecord>,
    /// Highest degree of the initial-ideal certificate.
    pub cert_degree: u32,
    /// Random coordinate changes tried when the initial ideal is not Borel-fixed.
    pub cert_retries: usize,
    pub syzygy_source: String,
    pub catalog_source: String,
    pub manifest: Manifest,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            modular: ModularConfig::default(),
            truncation: DEFAULT_TRUNCATION,
            max_depth: 16,
            syzygies: SyzygySpec::bundled(Reading::U3),
            curve: ParamCurve::printed(),
            catalog: bundled_catalog(),
            cert_degree: 6,
            cert_retries: 3,
            syzygy_source: "bundled:u3".into(),
            catalog_source: "bundled".into(),
            manifest: Manifest::bundled(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Metadata {
    pub tool_version: String,
    pub seed: u64,
    pub primes: Vec<u64>,
    pub exact: bool,
    pub truncation: usize,
    pub max_depth: usize,
    pub cert_degree: u32,
    pub syzygy_source: String,
    pub catalog_source: String,
}

impl Metadata {
    pub fn from_config(cfg: &RunConfig) -> Self {
        Self {
            tool_version: env!("CARGO_PKG_VERSION").into(),
            seed: cfg.modular.seed(),
            primes: cfg.modular.primes().to_vec(),
            exact: cfg.modular.is_exact(),
            truncation: cfg.truncation,
            max_depth: cfg.max_depth,
            cert_degree: cfg.cert_degree,
            syzygy_source: cfg.syzygy_source.clone(),
            catalog_source: cfg.catalog_source.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub sections: usize,
    pub matches: usize,
    pub mismatches: usize,
    pub inconclusive: usize,
    pub warnings: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictReport {
    pub metadata: Metadata,
    pub sections: Vec<Section>,
}

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const MISMATCH: i32 = 1;
    pub const INCONCLUSIVE: i32 = 2;
    pub const INPUT_ERROR: i32 = 3;
}

impl VerdictReport {
    pub fn new(cfg: &RunConfig, mut sections: Vec<Section>) -> Self {
        cfg.manifest.apply(&mut sections);
        Self {
            metadata: Metadata::from_config(cfg),
            sections,
        }
    }

    pub fn warnings(&self) -> impl Iterator<Item = &Section> {
        self.sections.iter().filter(|s| s.is_warning())
    }

    pub fn summary(&self) -> Summary {
        let count = |st| self.sections.iter().filter(|s| s.status == st).count();
        Summary {
            sections: self.sections.len(),
            matches: count(Status::Match),
            mismatches: count(Status::Mismatch),
            inconclusive: count(Status::Inconclusive),
            warnings: self.warnings().count(),
        }
    }

    /// 1 on any load-bearing mismatch, else 2 on any load-bearing
    /// inconclusive section, else 0.
    pub fn exit_code(&self) -> i32 {
        let bearing = |st| {
            self.sections
                .iter()
                .any(|s| s.load_bearing && s.status == st)
        };
        if bearing(Status::Mismatch) {
            exit::MISMATCH
        } else if bearing(Status::Inconclusive) {
            exit::INCONCLUSIVE
        } else {
            exit::SUCCESS
        }
    }

    pub fn section(&self, id: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.id == id)
    }
}

/// Exit code for a library error: input problems map to 3, everything else
/// means the run could not reach a verdict.
pub fn exit_code_for_error(e: &Error) -> i32 {
    match e {
        Error::Input(_) => exit::INPUT_ERROR,
        _ => exit::INCONCLUSIVE,
    }
}
