use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Dense matrix of arbitrary-precision rationals.
///
/// Entries are kept in lowest terms (guaranteed by [`BigRational`]) and the
/// shape is fixed at construction.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigRational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    /// Builds a matrix from integer rows, rejecting ragged input.
    pub fn from_int_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Dimension(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            entries.extend(
                row.iter()
                    .map(|x| BigRational::from_integer(x.clone().into())),
            );
        }
        Self::new(rows.len(), cols, entries)
    }

    pub fn from_rational_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Dimension(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            entries.extend(row);
        }
        Self::new(n, cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Result<Vec<BigRational>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    pub fn mul_int_vec(&self, v: &[BigInt]) -> Result<Vec<BigRational>> {
        let v: Vec<BigRational> = v.iter().cloned().map(BigRational::from_integer).collect();
        self.mul_vec(&v)
    }

    /// Rows scaled by the lcm of their denominators. Row spaces, kernels and
    /// pivot structure are unchanged.
    pub(crate) fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
            })
            .collect()
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Scales a rational vector to a primitive integer vector: coprime entries,
/// first nonzero entry positive. The zero vector is returned unchanged.
pub fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    primitive_from_ints(ints)
}

pub(crate) fn primitive_from_ints(mut ints: Vec<BigInt>) -> Vec<BigInt> {
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let negate = ints
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x < &BigInt::zero());
    for x in &mut ints {
        *x = &*x / &g;
        if negate {
            *x = -&*x;
        }
    }
    ints
}
