//! Fraction-free Gauss-Jordan elimination over the integers.
//!
//! After `k` pivot steps every entry is a `k`-minor of the input (up to
//! sign), so the division by the previous pivot is always exact and entry
//! sizes stay bounded by Hadamard's bound.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Result of [`ff_rref`]. Every pivot row has the common value `scale` in
/// its own pivot column and zeros in the other pivot columns, so dividing by
/// `scale` yields the reduced row echelon form.
#[derive(Clone, Debug)]
pub(crate) struct FfRref {
    pub pivots: Vec<usize>,
    pub rows: Vec<Vec<BigInt>>,
    pub scale: BigInt,
}

impl FfRref {
    pub fn rational_rows(&self) -> Vec<Vec<BigRational>> {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| BigRational::new(x.clone(), self.scale.clone()))
                    .collect()
            })
            .collect()
    }
}

pub(crate) fn ff_rref(mut rows: Vec<Vec<BigInt>>, order: &[usize]) -> FfRref {
    let mut prev = BigInt::from(1);
    let mut pivots = Vec::new();
    let mut r = 0;
    for &c in order {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let pivot_row = rows[r].clone();
        let piv = pivot_row[c].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let f = row[c].clone();
            if f.is_zero() {
                // (piv * x - 0) / prev; still needs the rescale.
                for x in row.iter_mut() {
                    if !x.is_zero() {
                        *x = &piv * &*x / &prev;
                    }
                }
                continue;
            }
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                let t = &piv * &*x - &f * y;
                *x = t / &prev;
            }
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    FfRref {
        pivots,
        rows,
        scale: prev,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    /// Textbook Gauss-Jordan over the rationals, used as an oracle.
    fn naive_rref(rows: &[Vec<i64>], order: &[usize]) -> (Vec<usize>, Vec<Vec<BigRational>>) {
        let mut m: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| BigRational::from_integer(x.into()))
                    .collect()
            })
            .collect();
        let mut pivots = vec![];
        let mut r = 0;
        for &c in order {
            if r == m.len() {
                break;
            }
            let Some(f) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, f);
            let inv = BigRational::one() / m[r][c].clone();
            for x in m[r].iter_mut() {
                *x = &*x * &inv;
            }
            let pr = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i != r && !row[c].is_zero() {
                    let f = row[c].clone();
                    for (x, y) in row.iter_mut().zip(&pr) {
                        *x = &*x - &f * y;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.truncate(r);
        (pivots, m)
    }

    #[test]
    fn matches_naive_on_rank_deficient_input() {
        let rows = vec![
            vec![2, 4, 1, 3, 0],
            vec![1, 2, 0, 1, 5],
            vec![3, 6, 1, 4, 5],
            vec![0, 0, 7, -2, 1],
        ];
        for order in [
            vec![0, 1, 2, 3, 4],
            vec![4, 2, 0, 3, 1],
            vec![1, 3, 4, 0, 2],
        ] {
            let big: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            let ff = ff_rref(big, &order);
            let (pivots, want) = naive_rref(&rows, &order);
            assert_eq!(ff.pivots, pivots);
            assert_eq!(ff.rational_rows(), want);
        }
    }
}
