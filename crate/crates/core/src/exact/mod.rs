//! Exact linear algebra over the rationals, accelerated by elimination at
//! word-size primes.
//!
//! Operations first run at the configured primes. Kernels and reduced forms
//! are reconstructed (Chinese remaindering plus rational reconstruction) and
//! then *verified* in exact arithmetic. Ranks and pivot sets are accepted on
//! agreement of all primes. Any disagreement or failed verification falls
//! back to fraction-free elimination over the integers, whose result is
//! final.

mod fraction_free;
mod matrix;
pub mod modular;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use matrix::{primitive_integer_vector, ExactMatrix};
pub use modular::{ModMatrix, ModRref, ModularConfig};

use fraction_free::ff_rref;
use modular::CrtAccumulator;

use crate::{Error, Result};

/// Upper limit on primes used for reconstruction before escalating.
const MAX_RECONSTRUCTION_PRIMES: usize = 512;

/// Reduced row echelon form with respect to a column visiting order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowReduction {
    /// Pivot columns in the order they were found.
    pub pivots: Vec<usize>,
    /// One reduced row per pivot; row `k` has a one at `pivots[k]` and zeros
    /// at the other pivot columns.
    pub rows: Vec<Vec<BigRational>>,
}

/// Which arithmetic produced a result; surfaced in reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Modular,
    Exact,
}

fn ensure_nonempty(m: &ExactMatrix) -> Result<()> {
    if m.is_empty() {
        Err(Error::EmptyMatrix)
    } else {
        Ok(())
    }
}

fn validate_order(order: &[usize], cols: usize) -> Result<()> {
    if order.len() != cols {
        return Err(Error::InvalidPermutation(format!(
            "length {} for {cols} columns",
            order.len()
        )));
    }
    let seen: BTreeSet<usize> = order.iter().copied().collect();
    if seen.len() != cols || seen.iter().next_back().is_some_and(|&c| c >= cols) {
        return Err(Error::InvalidPermutation(
            "not a permutation of 0..cols".into(),
        ));
    }
    Ok(())
}

/// Rank over the rationals.
pub fn rank(m: &ExactMatrix, cfg: &ModularConfig) -> Result<usize> {
    Ok(rank_with_route(m, cfg)?.0)
}

pub fn rank_with_route(m: &ExactMatrix, cfg: &ModularConfig) -> Result<(usize, Route)> {
    ensure_nonempty(m)?;
    let ints = m.integer_rows();
    if !cfg.is_exact() {
        let ranks: BTreeSet<usize> = cfg
            .primes()
            .iter()
            .map(|&p| ModMatrix::from_int_rows(&ints, m.cols(), p).rank())
            .collect();
        if ranks.len() == 1 {
            return Ok((*ranks.iter().next().unwrap(), Route::Modular));
        }
    }
    let order: Vec<usize> = (0..m.cols()).collect();
    Ok((ff_rref(ints, &order).pivots.len(), Route::Exact))
}

/// Gaussian elimination whose pivot search follows `column_order`.
pub fn row_reduce_ordered(
    m: &ExactMatrix,
    column_order: &[usize],
    cfg: &ModularConfig,
) -> Result<RowReduction> {
    ensure_nonempty(m)?;
    validate_order(column_order, m.cols())?;
    Ok(reduce_with_route(m, column_order, cfg).0)
}

fn reduce_with_route(
    m: &ExactMatrix,
    order: &[usize],
    cfg: &ModularConfig,
) -> (RowReduction, Route) {
    let ints = m.integer_rows();
    if !cfg.is_exact() {
        if let Some(rr) = multimodular_rref(&ints, m, order, cfg) {
            return (rr, Route::Modular);
        }
    }
    let ff = ff_rref(ints, order);
    (
        RowReduction {
            rows: ff.rational_rows(),
            pivots: ff.pivots,
        },
        Route::Exact,
    )
}

/// Pivot columns of the elimination visiting columns in `column_order`,
/// without the reduced rows. In modular mode the answer is accepted when all
/// configured primes agree; the pivot set found modulo a prime is always
/// independent over the rationals, so agreement can only err by missing a
/// pivot at a prime dividing some minor. Disagreement falls back to exact
/// fraction-free elimination.
pub fn pivot_columns(
    m: &ExactMatrix,
    column_order: &[usize],
    cfg: &ModularConfig,
) -> Result<(Vec<usize>, Route)> {
    ensure_nonempty(m)?;
    validate_order(column_order, m.cols())?;
    let ints = m.integer_rows();
    if !cfg.is_exact() {
        let found: BTreeSet<Vec<usize>> = cfg
            .primes()
            .iter()
            .map(|&p| {
                ModMatrix::from_int_rows(&ints, m.cols(), p)
                    .rref(column_order)
                    .pivots
            })
            .collect();
        if found.len() == 1 {
            return Ok((found.into_iter().next().unwrap(), Route::Modular));
        }
    }
    Ok((ff_rref(ints, column_order).pivots, Route::Exact))
}

/// Basis of the right kernel as primitive integer vectors (coprime entries,
/// first nonzero entry positive), one per non-pivot column in column order.
pub fn kernel_basis(m: &ExactMatrix, cfg: &ModularConfig) -> Result<Vec<Vec<BigInt>>> {
    Ok(kernel_basis_with_route(m, cfg)?.0)
}

pub fn kernel_basis_with_route(
    m: &ExactMatrix,
    cfg: &ModularConfig,
) -> Result<(Vec<Vec<BigInt>>, Route)> {
    ensure_nonempty(m)?;
    let order: Vec<usize> = (0..m.cols()).collect();
    let (rr, route) = reduce_with_route(m, &order, cfg);
    let basis = kernel_from_reduction(&rr, m.cols());
    let ints = m.integer_rows();
    for v in &basis {
        if !annihilates(&ints, v) {
            // Unreachable when the reduction was verified; keep the guard so a
            // bad basis can never leave this function.
            return Err(Error::Precondition(
                "kernel vector failed exact check".into(),
            ));
        }
    }
    Ok((basis, route))
}

fn kernel_from_reduction(rr: &RowReduction, cols: usize) -> Vec<Vec<BigInt>> {
    let pivot_set: BTreeSet<usize> = rr.pivots.iter().copied().collect();
    (0..cols)
        .filter(|c| !pivot_set.contains(c))
        .map(|free| {
            let mut v = vec![BigRational::zero(); cols];
            v[free] = BigRational::one();
            for (k, &pc) in rr.pivots.iter().enumerate() {
                v[pc] = -rr.rows[k][free].clone();
            }
            primitive_integer_vector(&v)
        })
        .collect()
}

fn multimodular_rref(
    ints: &[Vec<BigInt>],
    m: &ExactMatrix,
    order: &[usize],
    cfg: &ModularConfig,
) -> Option<RowReduction> {
    let cols = m.cols();
    let mut reductions: Vec<(u64, ModRref)> = cfg
        .primes()
        .iter()
        .map(|&p| (p, ModMatrix::from_int_rows(ints, cols, p).rref(order)))
        .collect();
    let pivots = reductions[0].1.pivots.clone();
    if reductions.iter().any(|(_, r)| r.pivots != pivots) {
        return None;
    }
    let rank = pivots.len();
    if rank == 0 {
        return Some(RowReduction {
            pivots,
            rows: vec![],
        });
    }

    let mut acc = CrtAccumulator::new(rank * cols);
    let mut used = 0usize;
    let mut next_attempt = 1usize;
    let mut extra = cfg.extra_primes();
    loop {
        for (p, rr) in reductions.drain(..) {
            let flat: Vec<u64> = rr.rows.iter().flatten().copied().collect();
            acc.add(&flat, p);
            used += 1;
        }
        if used >= next_attempt {
            next_attempt = used + used.div_ceil(2);
            if let Some(values) = acc.reconstruct() {
                let rows: Vec<Vec<BigRational>> =
                    values.chunks(cols).map(<[BigRational]>::to_vec).collect();
                let candidate = RowReduction {
                    pivots: pivots.clone(),
                    rows,
                };
                if verify_reduction(ints, &candidate) {
                    return Some(candidate);
                }
            }
        }
        if used >= MAX_RECONSTRUCTION_PRIMES {
            return None;
        }
        let p = extra.next()?;
        let rr = ModMatrix::from_int_rows(ints, cols, p).rref(order);
        if rr.pivots != pivots {
            if rr.pivots.len() < rank {
                // Unlucky prime, skip it.
                continue;
            }
            return None;
        }
        reductions.push((p, rr));
    }
}

/// Exact check that `candidate` spans the row space of `m`: every row of `m`
/// must equal its pivot-column entries times the reduced rows. Combined with
/// the modular rank being a lower bound this certifies the reduction.
///
/// Runs over the integers: rows of `m` are scaled by their denominators and
/// the reduced rows by a common one, which avoids a gcd per addition.
fn verify_reduction(ints: &[Vec<BigInt>], candidate: &RowReduction) -> bool {
    let scales: Vec<BigInt> = candidate
        .rows
        .iter()
        .map(|r| r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom())))
        .collect();
    let common = scales.iter().fold(BigInt::one(), |acc, x| acc.lcm(x));
    let scaled: Vec<Vec<BigInt>> = candidate
        .rows
        .iter()
        .zip(&scales)
        .map(|(r, s)| {
            let f = &common / s;
            r.iter().map(|x| x.numer() * (s / x.denom()) * &f).collect()
        })
        .collect();
    ints.iter().all(|row| {
        (0..row.len()).all(|j| {
            let mut acc = BigInt::zero();
            for (k, &pc) in candidate.pivots.iter().enumerate() {
                let (a, r) = (&row[pc], &scaled[k][j]);
                if !a.is_zero() && !r.is_zero() {
                    acc += a * r;
                }
            }
            acc == &row[j] * &common
        })
    })
}

/// `m v = 0` checked on the integer-scaled rows.
fn annihilates(ints: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    ints.iter().all(|row| {
        row.iter()
            .zip(v)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .fold(BigInt::zero(), |acc, (a, b)| acc + a * b)
            .is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> ModularConfig {
        ModularConfig::from_seed(42, 2).unwrap()
    }

    fn int_matrix(rows: &[Vec<i64>]) -> ExactMatrix {
        ExactMatrix::from_int_rows(rows).unwrap()
    }

    #[test]
    fn rank_examples() {
        let id = int_matrix(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(rank(&id, &cfg()).unwrap(), 3);
        assert_eq!(rank(&int_matrix(&[vec![1, 1]]), &cfg()).unwrap(), 1);
        assert_eq!(rank(&id, &cfg().exact()).unwrap(), 3);
    }

    #[test]
    fn empty_matrix_rejected() {
        let m = ExactMatrix::zeros(0, 3);
        assert_eq!(rank(&m, &cfg()), Err(Error::EmptyMatrix));
    }

    #[test]
    fn kernel_examples() {
        let k = kernel_basis(&int_matrix(&[vec![1, 1]]), &cfg()).unwrap();
        assert_eq!(k, vec![vec![BigInt::from(1), BigInt::from(-1)]]);
        let full = int_matrix(&[vec![2, 1], vec![1, 1]]);
        assert!(kernel_basis(&full, &cfg()).unwrap().is_empty());
    }

    #[test]
    fn ordered_reduction_examples() {
        let id = int_matrix(&[vec![1, 0], vec![0, 1]]);
        let rr = row_reduce_ordered(&id, &[1, 0], &cfg()).unwrap();
        assert_eq!(rr.pivots, vec![1, 0]);
        let m = int_matrix(&[vec![0, 1], vec![0, 2]]);
        let rr = row_reduce_ordered(&m, &[0, 1], &cfg()).unwrap();
        assert_eq!(rr.pivots, vec![1]);
    }

    #[test]
    fn invalid_permutation_rejected() {
        let m = int_matrix(&[vec![1, 2]]);
        assert!(matches!(
            row_reduce_ordered(&m, &[0, 0], &cfg()),
            Err(Error::InvalidPermutation(_))
        ));
        assert!(matches!(
            row_reduce_ordered(&m, &[0], &cfg()),
            Err(Error::InvalidPermutation(_))
        ));
    }

    #[test]
    fn reconstruction_handles_large_entries() {
        // Kernel entries need several primes to reconstruct.
        let m = int_matrix(&[
            vec![982451653, 2, 3, 5],
            vec![7, 999999937, 11, 13],
            vec![17, 19, 1000000007, 23],
        ]);
        let (basis, route) = kernel_basis_with_route(&m, &cfg()).unwrap();
        let (exact, _) = kernel_basis_with_route(&m, &cfg().exact()).unwrap();
        assert_eq!(route, Route::Modular);
        assert_eq!(basis, exact);
        assert_eq!(basis.len(), 1);
    }

    #[test]
    fn pivot_columns_follow_order() {
        let m = int_matrix(&[vec![1, 2, 3], vec![2, 4, 7]]);
        for c in [cfg(), cfg().exact()] {
            assert_eq!(pivot_columns(&m, &[0, 1, 2], &c).unwrap().0, vec![0, 2]);
            assert_eq!(pivot_columns(&m, &[1, 0, 2], &c).unwrap().0, vec![1, 2]);
        }
    }

    #[test]
    fn rational_entries_are_supported() {
        let half = BigRational::new(1.into(), 2.into());
        let m = ExactMatrix::new(1, 2, vec![half, BigRational::from_integer(3.into())]).unwrap();
        let k = kernel_basis(&m, &cfg()).unwrap();
        assert_eq!(k, vec![vec![BigInt::from(6), BigInt::from(-1)]]);
    }
}
