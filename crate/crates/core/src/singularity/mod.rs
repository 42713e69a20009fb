//! Delta-invariants of parameterized curve singularities and ramification
//! codimension counts.

mod delta;
mod ramification;

use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::dimension::castelnuovo_bound;
use crate::{Error, Result};

pub use delta::{delta_invariant, semigroup_delta, DEFAULT_TRUNCATION};
pub use ramification::{
    enumerate_types, expected_codim_alt, lemma_verdict, linearized_rank_conditions,
    quadruple_point_codim, ramification_codim, QuadruplePointCodim, RamificationType,
};

/// Sparse series `sum c t^e`, as `(e, c)` pairs.
pub type Series = Vec<(usize, BigRational)>;

/// A multibranch germ `t_i -> (f_i^(1)(t_i), ..., f_i^(r)(t_i))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchParam {
    pub embedding_dim: usize,
    pub branches: Vec<Vec<Series>>,
}

impl BranchParam {
    /// Drops zero terms, merges repeated exponents and checks that every
    /// branch passes through the origin and is not constant.
    pub fn new(embedding_dim: usize, branches: Vec<Vec<Series>>) -> Result<Self> {
        if embedding_dim == 0 {
            return Err(Error::input("embedding dimension must be positive"));
        }
        if branches.is_empty() {
            return Err(Error::input("a singularity needs at least one branch"));
        }
        let mut clean = Vec::with_capacity(branches.len());
        for (b, branch) in branches.into_iter().enumerate() {
            if branch.len() != embedding_dim {
                return Err(Error::input(format!(
                    "branch {b} has {} coordinates, expected {embedding_dim}",
                    branch.len()
                )));
            }
            let mut coords = Vec::with_capacity(embedding_dim);
            for series in branch {
                let mut merged: std::collections::BTreeMap<usize, BigRational> = Default::default();
                for (e, c) in series {
                    if e == 0 && !c.is_zero() {
                        return Err(Error::input(format!(
                            "branch {b} has a constant term; branches must pass through the origin"
                        )));
                    }
                    *merged.entry(e).or_insert_with(BigRational::zero) += c;
                }
                coords.push(
                    merged
                        .into_iter()
                        .filter(|(_, c)| !c.is_zero())
                        .collect::<Series>(),
                );
            }
            if coords.iter().all(Vec::is_empty) {
                return Err(Error::input(format!("branch {b} is identically zero")));
            }
            clean.push(coords);
        }
        Ok(Self {
            embedding_dim,
            branches: clean,
        })
    }

    /// Single branch `(t^{e_0}, ..., t^{e_r})`; an exponent of zero stands
    /// for the zero coordinate.
    pub fn monomial_curve(exps: &[u32]) -> Self {
        let branch = exps
            .iter()
            .map(|&e| {
                if e == 0 {
                    Vec::new()
                } else {
                    vec![(e as usize, BigRational::from_integer(BigInt::from(1)))]
                }
            })
            .collect();
        Self::new(exps.len(), vec![branch]).expect("a monomial curve with a nonzero exponent")
    }

    /// Exponents of a unibranch germ whose coordinates are single monomials
    /// (zero coordinates skipped).
    pub fn monomial_exponents(&self) -> Option<Vec<u32>> {
        if self.branches.len() != 1 {
            return None;
        }
        let mut out = Vec::new();
        for series in &self.branches[0] {
            match series.as_slice() {
                [] => {}
                [(e, _)] => out.push(*e as u32),
                _ => return None,
            }
        }
        Some(out)
    }

    /// Applies the linear map `x -> g x` to the ambient coordinates.
    pub fn linear_change(&self, g: &[Vec<BigRational>]) -> Result<Self> {
        if g.len() != self.embedding_dim || g.iter().any(|r| r.len() != self.embedding_dim) {
            return Err(Error::Dimension(
                "coordinate change has the wrong shape".into(),
            ));
        }
        let branches = self
            .branches
            .iter()
            .map(|branch| {
                g.iter()
                    .map(|row| {
                        row.iter()
                            .zip(branch)
                            .flat_map(|(a, s)| s.iter().map(move |(e, c)| (*e, a * c)))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Self::new(self.embedding_dim, branches)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularityRecord {
    pub name: String,
    pub expected_delta: u32,
    pub param: BranchParam,
    /// True when the parameterization was chosen here rather than printed.
    pub normal_form: bool,
    pub note: String,
}

#[derive(Deserialize)]
struct CatalogFile {
    record: Vec<RecordFile>,
}

#[derive(Deserialize)]
struct RecordFile {
    name: String,
    expected_delta: u32,
    embedding_dim: usize,
    branches: Vec<Vec<Vec<(usize, i64)>>>,
    #[serde(default)]
    normal_form: bool,
    #[serde(default)]
    note: String,
}

const CATALOG: &str = include_str!("../../data/catalog.toml");

/// The bundled catalog.
pub fn bundled_catalog() -> Vec<SingularityRecord> {
    parse_catalog(CATALOG).expect("bundled catalog parses")
}

pub fn load_catalog(path: &Path) -> Result<Vec<SingularityRecord>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))?;
    parse_catalog(&text)
}

pub fn parse_catalog(text: &str) -> Result<Vec<SingularityRecord>> {
    let file: CatalogFile =
        toml::from_str(text).map_err(|e| Error::input(format!("catalog file: {e}")))?;
    file.record
        .into_iter()
        .map(|r| {
            if !(1..=3).contains(&r.expected_delta) {
                return Err(Error::input(format!(
                    "record {:?}: expected delta {} outside 1..=3",
                    r.name, r.expected_delta
                )));
            }
            let branches = r
                .branches
                .into_iter()
                .map(|b| {
                    b.into_iter()
                        .map(|s| {
                            s.into_iter()
                                .map(|(e, c)| (e, BigRational::from_integer(BigInt::from(c))))
                                .collect()
                        })
                        .collect()
                })
                .collect();
            let param = BranchParam::new(r.embedding_dim, branches)
                .map_err(|e| Error::input(format!("record {:?}: {e}", r.name)))?;
            Ok(SingularityRecord {
                name: r.name,
                expected_delta: r.expected_delta,
                param,
                normal_form: r.normal_form,
                note: r.note,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditLine {
    pub name: String,
    pub branches: usize,
    pub expected: u32,
    pub computed: Option<u32>,
    pub error: Option<String>,
    pub matches: bool,
    /// Gap count of the value semigroup, for monomial unibranch records.
    pub semigroup: Option<u32>,
    pub normal_form: bool,
}

impl AuditLine {
    /// The colength and the gap count disagree.
    pub fn oracle_conflict(&self) -> bool {
        matches!((self.computed, self.semigroup), (Some(a), Some(b)) if a != b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub truncation: usize,
    pub lines: Vec<AuditLine>,
}

fn audit_one(r: &SingularityRecord, truncation: usize) -> AuditLine {
    let result = delta_invariant(&r.param, truncation);
    let semigroup = r
        .param
        .monomial_exponents()
        .and_then(|e| semigroup_delta(&e).ok());
    let (computed, error) = match result {
        Ok(d) => (Some(d), None),
        Err(e) => (None, Some(e.to_string())),
    };
    AuditLine {
        name: r.name.clone(),
        branches: r.param.branches.len(),
        expected: r.expected_delta,
        computed,
        error,
        matches: computed == Some(r.expected_delta),
        semigroup,
        normal_form: r.normal_form,
    }
}

/// Computes every record on its own thread; lines keep catalog order.
pub fn catalog_audit(catalog: &[SingularityRecord], truncation: usize) -> AuditReport {
    let lines = std::thread::scope(|s| {
        let handles: Vec<_> = catalog
            .iter()
            .map(|r| s.spawn(move || audit_one(r, truncation)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("audit thread panicked"))
            .collect()
    });
    AuditReport { truncation, lines }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueLine {
    pub genus: u32,
    pub required: u32,
    pub ceiling: u32,
    pub holds: bool,
}

/// For each genus up to the Castelnuovo bound of degree `d` in `P^n`, checks
/// `g <= base + min(3g, 9)`.
pub fn residue_closure(d: u32, n: u32, base: u32) -> Result<Vec<ResidueLine>> {
    let top = castelnuovo_bound(d, n)?;
    Ok((1..=top)
        .map(|g| {
            let required = lemma_verdict(g);
            let ceiling = base + required;
            ResidueLine {
                genus: g,
                required,
                ceiling,
                holds: g <= ceiling,
            }
        })
        .collect())
}
