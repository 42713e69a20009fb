//! Rational curves given by five binary forms: reconstruction from
//! syzygies and the initial ideal of the image.

mod ideal;
mod syzygy;

use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize, Serializer};

use crate::monomial::MonomialIdeal;
use crate::{Error, Result};

pub use ideal::{
    certify, conclude_i_zero, diff_ideals, hilbert_consistency, ideal_slice, ideal_slice_basis,
    initial_ideal, leading_monomials_of_basis, random_coordinate_change, substitution_matrix,
    syzygy_profile, Attempt, Certificate, HilbertCheck, IVerdict, IdealDiff, InitialIdeal, Slice,
    SliceInfo,
};
pub use syzygy::{
    assemble_system, match_report, residuals, solve_curve, CoefficientDiff, MatchReport,
    SolvedCurve,
};

/// Binary form `sum_j c_j t^(e-j) u^j` of degree `e = coeffs.len() - 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiForm {
    coeffs: Vec<BigInt>,
}

impl BiForm {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::input("a binary form needs at least one coefficient"));
        }
        Ok(Self { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(degree: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); degree + 1],
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &BiForm) -> BiForm {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        BiForm { coeffs: out }
    }

    pub fn add_assign(&mut self, other: &BiForm) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::Dimension(format!(
                "adding forms of degrees {} and {}",
                self.degree(),
                other.degree()
            )));
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Ok(())
    }

    /// Number of nonzero coefficients.
    pub fn support(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl fmt::Debug for BiForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "BiForm[{}]", c.join(", "))
    }
}

impl Serialize for BiForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let c: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        c.serialize(s)
    }
}

/// One relation `sum_i g_i f_i = 0` with all `g_i` of a common degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SyzygyRow {
    pub degree: usize,
    pub forms: Vec<BiForm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SyzygySpec {
    pub reading: String,
    pub curve_degree: usize,
    pub rows: Vec<SyzygyRow>,
}

#[derive(Deserialize)]
struct SyzygyFile {
    reading: String,
    curve_degree: usize,
    row: Vec<RowFile>,
}

#[derive(Deserialize)]
struct RowFile {
    degree: usize,
    forms: Vec<Vec<i64>>,
}

/// Which transcription of the fourth syzygy to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Reading {
    /// `t^3 + t^2 u + t u^2 + u^3`.
    U3,
    /// Literal `2 t^3 + t^2 u + t u^2`.
    TwoT3,
}

impl Reading {
    pub fn all() -> [Reading; 2] {
        [Reading::U3, Reading::TwoT3]
    }
}

const SYZYGIES_U3: &str = include_str!("../../data/syzygies_u3.toml");
const SYZYGIES_2T3: &str = include_str!("../../data/syzygies_2t3.toml");
const PRINTED_CURVE: &str = include_str!("../../data/printed_curve.toml");
const PRINTED_IDEAL: &str = include_str!("../../data/printed_ideal.toml");

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))
}

impl SyzygySpec {
    pub fn bundled(reading: Reading) -> Self {
        let text = match reading {
            Reading::U3 => SYZYGIES_U3,
            Reading::TwoT3 => SYZYGIES_2T3,
        };
        Self::from_toml(text).expect("bundled syzygy data parses")
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_toml(&read_file(path)?)
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        let file: SyzygyFile =
            toml::from_str(text).map_err(|e| Error::input(format!("syzygy file: {e}")))?;
        let mut rows = Vec::new();
        for (s, r) in file.row.into_iter().enumerate() {
            if r.forms.len() != 5 {
                return Err(Error::input(format!(
                    "syzygy {s} has {} coefficient forms, expected 5",
                    r.forms.len()
                )));
            }
            let forms = r
                .forms
                .iter()
                .map(|c| BiForm::from_i64(c))
                .collect::<Result<Vec<_>>>()?;
            if let Some(bad) = forms.iter().position(|f| f.degree() != r.degree) {
                return Err(Error::input(format!(
                    "syzygy {s}: form {bad} has degree {}, row degree is {}",
                    forms[bad].degree(),
                    r.degree
                )));
            }
            rows.push(SyzygyRow {
                degree: r.degree,
                forms,
            });
        }
        if rows.is_empty() {
            return Err(Error::input("syzygy file lists no rows"));
        }
        Ok(Self {
            reading: file.reading,
            curve_degree: file.curve_degree,
            rows,
        })
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.degree).collect()
    }
}

/// Five binary forms of a common degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamCurve {
    pub f: Vec<BiForm>,
}

#[derive(Deserialize)]
struct CurveFile {
    degree: usize,
    forms: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
struct IdealFile {
    num_vars: usize,
    generators: Vec<String>,
}

impl ParamCurve {
    pub fn new(f: Vec<BiForm>) -> Result<Self> {
        if f.len() != 5 {
            return Err(Error::input(format!("expected 5 forms, got {}", f.len())));
        }
        let d = f[0].degree();
        if f.iter().any(|g| g.degree() != d) {
            return Err(Error::input("forms of a curve must share one degree"));
        }
        Ok(Self { f })
    }

    pub fn degree(&self) -> usize {
        self.f[0].degree()
    }

    /// The published coefficient vectors.
    pub fn printed() -> Self {
        Self::from_toml(PRINTED_CURVE).expect("bundled curve parses")
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_toml(&read_file(path)?)
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        let file: CurveFile =
            toml::from_str(text).map_err(|e| Error::input(format!("curve file: {e}")))?;
        let f = file
            .forms
            .iter()
            .map(|c| BiForm::from_i64(c))
            .collect::<Result<Vec<_>>>()?;
        if f.iter().any(|g| g.degree() != file.degree) {
            return Err(Error::input(
                "form length does not match the declared degree",
            ));
        }
        Self::new(f)
    }

    /// Flattened coefficients, form by form.
    pub fn coefficients(&self) -> Vec<BigInt> {
        self.f
            .iter()
            .flat_map(|g| g.coeffs().iter().cloned())
            .collect()
    }

    /// Applies `x -> g x`: new form `i` is `sum_j g[i][j] f_j`.
    pub fn transform(&self, g: &[Vec<i64>]) -> ParamCurve {
        let f = g
            .iter()
            .map(|row| {
                let coeffs = (0..=self.degree())
                    .map(|k| {
                        row.iter()
                            .zip(&self.f)
                            .map(|(&a, form)| BigInt::from(a) * &form.coeffs[k])
                            .sum()
                    })
                    .collect();
                BiForm { coeffs }
            })
            .collect();
        ParamCurve { f }
    }
}

/// The published initial ideal in `x0..x4`.
pub fn printed_ideal() -> MonomialIdeal {
    let file: IdealFile = toml::from_str(PRINTED_IDEAL).expect("bundled ideal parses");
    MonomialIdeal::parse(&file.generators.join(", "), file.num_vars).expect("valid generators")
}

/// Number of generators listed in the published ideal file (before
/// minimalization).
pub fn printed_generator_count() -> usize {
    let file: IdealFile = toml::from_str(PRINTED_IDEAL).expect("bundled ideal parses");
    file.generators.len()
}
