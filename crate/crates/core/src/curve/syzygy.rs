use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::{BiForm, ParamCurve, SyzygySpec};
use crate::exact::{self, ExactMatrix, ModularConfig, Route};
use crate::{Error, Result};

/// Coefficient equations of `sum_i g_{s,i} f_i = 0` for every syzygy `s`.
/// Unknown `(i, j)` (coefficient `j` of `f_i`) sits in column
/// `i * (d + 1) + j`.
pub fn assemble_system(s: &SyzygySpec) -> Result<ExactMatrix> {
    let d = s.curve_degree;
    let cols = 5 * (d + 1);
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for (idx, row) in s.rows.iter().enumerate() {
        let e = row.degree;
        if row.forms.iter().any(|g| g.degree() != e) {
            return Err(Error::Dimension(format!(
                "syzygy {idx}: mixed form degrees"
            )));
        }
        for k in 0..=e + d {
            let mut eq = vec![BigInt::zero(); cols];
            for (i, g) in row.forms.iter().enumerate() {
                for j in 0..=d {
                    if let Some(c) = k.checked_sub(j).and_then(|l| g.coeffs().get(l)) {
                        eq[i * (d + 1) + j] = c.clone();
                    }
                }
            }
            rows.push(eq);
        }
    }
    ExactMatrix::from_int_rows(&rows)
}

/// `sum_i g_{s,i} f_i` for every syzygy.
pub fn residuals(s: &SyzygySpec, c: &ParamCurve) -> Result<Vec<BiForm>> {
    s.rows
        .iter()
        .map(|row| {
            let mut acc = BiForm::zero(row.degree + c.degree());
            for (g, f) in row.forms.iter().zip(&c.f) {
                acc.add_assign(&g.mul(f))?;
            }
            Ok(acc)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolvedCurve {
    pub curve: ParamCurve,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    pub kernel_dim: usize,
    pub modular: bool,
}

/// The unique curve cut out by the syzygies, as a primitive integer vector.
pub fn solve_curve(s: &SyzygySpec, cfg: &ModularConfig) -> Result<SolvedCurve> {
    let m = assemble_system(s)?;
    let (kernel, route) = exact::kernel_basis_with_route(&m, cfg)?;
    if kernel.len() != 1 {
        return Err(Error::NonGenericSyzygies(kernel.len()));
    }
    let d = s.curve_degree;
    let f = kernel[0]
        .chunks(d + 1)
        .map(|c| BiForm::new(c.to_vec()))
        .collect::<Result<Vec<_>>>()?;
    let curve = ParamCurve::new(f)?;
    if residuals(s, &curve)?.iter().any(|r| !r.is_zero()) {
        return Err(Error::precondition(
            "solved curve leaves a nonzero syzygy residual",
        ));
    }
    Ok(SolvedCurve {
        curve,
        rows: m.rows(),
        cols: m.cols(),
        rank: m.cols() - 1,
        kernel_dim: 1,
        modular: route == Route::Modular,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientDiff {
    pub form: usize,
    pub index: usize,
    pub printed: String,
    pub expected: String,
}

/// Comparison of a computed curve with printed coefficients up to one global
/// rational scalar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchReport {
    /// `printed = scalar * computed` on the matching positions; `None` when
    /// no position had both values nonzero.
    pub scalar: Option<String>,
    pub total: usize,
    pub matches: usize,
    pub mismatches: Vec<CoefficientDiff>,
}

/// Picks the scalar agreeing with the most positions (ties go to the first
/// position in coefficient order) and lists every other coefficient.
pub fn match_report(computed: &ParamCurve, printed: &ParamCurve) -> Result<MatchReport> {
    if computed.degree() != printed.degree() {
        return Err(Error::Dimension("curves of different degrees".into()));
    }
    let a = computed.coefficients();
    let b = printed.coefficients();
    let mut votes: BTreeMap<BigRational, (usize, usize)> = BTreeMap::new();
    for (pos, (x, y)) in a.iter().zip(&b).enumerate() {
        if !x.is_zero() && !y.is_zero() {
            let r = BigRational::new(y.clone(), x.clone());
            let e = votes.entry(r).or_insert((0, pos));
            e.0 += 1;
        }
    }
    let scalar = votes
        .into_iter()
        .max_by(|(_, (c1, p1)), (_, (c2, p2))| c1.cmp(c2).then(p2.cmp(p1)))
        .map(|(r, _)| r);
    let per = computed.degree() + 1;
    let mut mismatches = Vec::new();
    for (pos, (x, y)) in a.iter().zip(&b).enumerate() {
        let expected = match &scalar {
            Some(s) => s * BigRational::from_integer(x.clone()),
            None => BigRational::from_integer(x.clone()),
        };
        if expected != BigRational::from_integer(y.clone()) {
            mismatches.push(CoefficientDiff {
                form: pos / per,
                index: pos % per,
                printed: y.to_string(),
                expected: expected.to_string(),
            });
        }
    }
    Ok(MatchReport {
        scalar: scalar.map(|s| s.to_string()),
        total: a.len(),
        matches: a.len() - mismatches.len(),
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::Reading;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn cfg() -> ModularConfig {
        ModularConfig::default()
    }

    #[test]
    fn system_shape() {
        let m = assemble_system(&SyzygySpec::bundled(Reading::U3)).unwrap();
        assert_eq!((m.rows(), m.cols()), (84, 85));
    }

    #[test]
    fn zero_syzygies_give_zero_matrix() {
        let mut s = SyzygySpec::bundled(Reading::U3);
        for row in &mut s.rows {
            for g in &mut row.forms {
                *g = BiForm::zero(row.degree);
            }
        }
        let m = assemble_system(&s).unwrap();
        assert_eq!(exact::rank(&m, &cfg()).unwrap(), 0);
        assert!(matches!(
            solve_curve(&s, &cfg()),
            Err(Error::NonGenericSyzygies(85))
        ));
    }

    #[test]
    fn u3_reading_has_unique_solution() {
        let s = SyzygySpec::bundled(Reading::U3);
        let solved = solve_curve(&s, &cfg()).unwrap();
        assert_eq!(solved.rank, 84);
        assert!(residuals(&s, &solved.curve)
            .unwrap()
            .iter()
            .all(BiForm::is_zero));
    }

    #[test]
    fn literal_reading_is_not_generic() {
        let s = SyzygySpec::bundled(Reading::TwoT3);
        assert_eq!(solve_curve(&s, &cfg()), Err(Error::NonGenericSyzygies(2)));
    }

    #[test]
    fn random_syzygies_solve() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut s = SyzygySpec::bundled(Reading::U3);
        for row in &mut s.rows {
            for g in &mut row.forms {
                let c: Vec<i64> = (0..=row.degree).map(|_| rng.gen_range(-3..=3)).collect();
                *g = BiForm::from_i64(&c).unwrap();
            }
        }
        let solved = solve_curve(&s, &cfg()).unwrap();
        assert!(residuals(&s, &solved.curve)
            .unwrap()
            .iter()
            .all(BiForm::is_zero));
    }

    #[test]
    fn match_report_finds_scalar() {
        let c = ParamCurve::printed();
        let doubled = ParamCurve::new(
            c.f.iter()
                .map(|g| BiForm::new(g.coeffs().iter().map(|x| x * 2).collect()).unwrap())
                .collect(),
        )
        .unwrap();
        let r = match_report(&doubled, &c).unwrap();
        assert_eq!(r.scalar.as_deref(), Some("1/2"));
        assert_eq!(r.matches, 85);
    }
}
