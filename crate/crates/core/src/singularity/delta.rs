use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::BranchParam;
use crate::{Error, Result};

pub const DEFAULT_TRUNCATION: usize = 16;

/// Row-echelon basis over the rationals, indexed by pivot position.
struct Echelon {
    rows: Vec<(usize, Vec<BigRational>)>,
}

impl Echelon {
    fn new() -> Self {
        Self { rows: Vec::new() }
    }

    /// Reduces `v` against the basis and keeps the remainder if nonzero.
    fn insert(&mut self, mut v: Vec<BigRational>) -> bool {
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = BigRational::one() / v[p].clone();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        self.rows.push((p, v));
        true
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// Element of `prod_i C[t_i] / t_i^T`, stored branch after branch.
fn product(a: &[BigRational], b: &[BigRational], branches: usize, t: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); branches * t];
    for br in 0..branches {
        let off = br * t;
        for i in 0..t {
            if a[off + i].is_zero() {
                continue;
            }
            for j in 0..t - i {
                if !b[off + j].is_zero() {
                    out[off + i + j] += &a[off + i] * &b[off + j];
                }
            }
        }
    }
    out
}

/// Dimension of the image of the subalgebra modulo `t_i^T` on every branch.
fn image_dimension(p: &BranchParam, t: usize) -> usize {
    let l = p.branches.len();
    let gens: Vec<Vec<BigRational>> = (0..p.embedding_dim)
        .map(|j| {
            let mut v = vec![BigRational::zero(); l * t];
            for (b, branch) in p.branches.iter().enumerate() {
                for (e, c) in &branch[j] {
                    if *e < t {
                        v[b * t + e] += c;
                    }
                }
            }
            v
        })
        .collect();
    let mut one = vec![BigRational::zero(); l * t];
    for b in 0..l {
        one[b * t] = BigRational::one();
    }
    let mut basis = Echelon::new();
    basis.insert(one.clone());
    let mut frontier = vec![one];
    while let Some(v) = frontier.pop() {
        for g in &gens {
            let w = product(&v, g, l, t);
            if basis.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }
    basis.dim()
}

/// Colength of the subalgebra generated by the coordinate functions inside
/// the product of the branch series rings, computed modulo `t^T` and
/// required to agree at `T + 2`.
pub fn delta_invariant(p: &BranchParam, truncation: usize) -> Result<u32> {
    if truncation < 2 {
        return Err(Error::precondition("truncation order must be at least 2"));
    }
    let at = |t: usize| (p.branches.len() * t - image_dimension(p, t)) as u32;
    let d = at(truncation);
    let d2 = at(truncation + 2);
    if d != d2 {
        return Err(Error::UnstableTruncation(format!(
            "T={truncation} gives {d}, T={} gives {d2}",
            truncation + 2
        )));
    }
    Ok(d)
}

/// Gap count of the numerical semigroup generated by `exponents`.
pub fn semigroup_delta(exponents: &[u32]) -> Result<u32> {
    let g = exponents.iter().fold(0u32, |acc, &e| acc.gcd(&e));
    if g != 1 {
        return Err(Error::precondition(format!(
            "generators {exponents:?} have gcd {g}; the semigroup has infinitely many gaps"
        )));
    }
    let lo = *exponents
        .iter()
        .filter(|&&e| e > 0)
        .min()
        .expect("gcd 1 implies a positive entry");
    let hi = *exponents.iter().max().expect("nonempty");
    // Every integer from (lo - 1) * (hi - 1) on is representable.
    let bound = (lo as usize) * (hi as usize) + 1;
    let mut reach = vec![false; bound + 1];
    reach[0] = true;
    for n in 1..=bound {
        reach[n] = exponents
            .iter()
            .any(|&e| e > 0 && e as usize <= n && reach[n - e as usize]);
    }
    Ok(reach.iter().filter(|&&r| !r).count() as u32)
}
