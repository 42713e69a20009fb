//! Word-size prime fields and multi-modular reconstruction helpers.

use std::collections::BTreeSet;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::{Error, Result};

/// Primes are drawn from `(2^30, 2^31)` so products fit in a `u64`.
pub const PRIME_LOWER: u64 = 1 << 30;
pub const PRIME_UPPER: u64 = 1 << 31;

/// Prime selection for modular elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularConfig {
    primes: Vec<u64>,
    seed: u64,
    force_exact: bool,
}

impl ModularConfig {
    /// Draws `count` distinct primes from a ChaCha stream seeded by `seed`.
    pub fn from_seed(seed: u64, count: usize) -> Result<Self> {
        if count < 2 {
            return Err(Error::ModularConfig(format!(
                "at least two primes required, got {count}"
            )));
        }
        let primes = PrimeStream::new(seed, &[]).take(count).collect();
        Ok(Self {
            primes,
            seed,
            force_exact: false,
        })
    }

    pub fn with_primes(primes: Vec<u64>, seed: u64) -> Result<Self> {
        if primes.len() < 2 {
            return Err(Error::ModularConfig("at least two primes required".into()));
        }
        let distinct: BTreeSet<u64> = primes.iter().copied().collect();
        if distinct.len() != primes.len() {
            return Err(Error::ModularConfig("primes must be distinct".into()));
        }
        for &p in &primes {
            if p <= PRIME_LOWER || p >= PRIME_UPPER || !is_prime(p) {
                return Err(Error::ModularConfig(format!(
                    "{p} is not a prime in (2^30, 2^31)"
                )));
            }
        }
        Ok(Self {
            primes,
            seed,
            force_exact: false,
        })
    }

    /// Same prime selection, but every operation runs in rational arithmetic.
    pub fn exact(mut self) -> Self {
        self.force_exact = true;
        self
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn is_exact(&self) -> bool {
        self.force_exact
    }

    /// Additional primes beyond the configured ones, deterministic in the seed.
    pub fn extra_primes(&self) -> PrimeStream {
        PrimeStream::new(self.seed ^ 0x9e37_79b9_7f4a_7c15, &self.primes)
    }
}

impl Default for ModularConfig {
    fn default() -> Self {
        Self::from_seed(0x5eed_0016, 2).expect("two primes")
    }
}

/// Endless deterministic stream of distinct primes in `(2^30, 2^31)`.
pub struct PrimeStream {
    rng: ChaCha8Rng,
    seen: BTreeSet<u64>,
}

impl PrimeStream {
    fn new(seed: u64, exclude: &[u64]) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            seen: exclude.iter().copied().collect(),
        }
    }
}

impl Iterator for PrimeStream {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        loop {
            let candidate = self.rng.gen_range(PRIME_LOWER + 1..PRIME_UPPER) | 1;
            if is_prime(candidate) && self.seen.insert(candidate) {
                return Some(candidate);
            }
        }
    }
}

fn mul_mod_u128(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u128(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u128(acc, base, m);
        }
        base = mul_mod_u128(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in BASES {
        let mut x = pow_mod_u128(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u128(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

pub fn reduce_int(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.to_u64_digits().1.first().copied().unwrap_or(0)
}

/// `None` when the denominator vanishes modulo `p`.
pub fn reduce_rational(x: &BigRational, p: u64) -> Option<u64> {
    let d = reduce_int(x.denom(), p);
    if d == 0 {
        return None;
    }
    Some(mul_mod(reduce_int(x.numer(), p), inv_mod(d, p), p))
}

/// Dense matrix over `Z/p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModMatrix {
    pub p: u64,
    pub rows: Vec<Vec<u64>>,
    pub cols: usize,
}

/// Row-reduced echelon form with explicit pivot bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModRref {
    pub pivots: Vec<usize>,
    pub rows: Vec<Vec<u64>>,
}

impl ModMatrix {
    pub fn new(p: u64, rows: Vec<Vec<u64>>, cols: usize) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == cols));
        Self { p, rows, cols }
    }

    pub fn from_int_rows(rows: &[Vec<BigInt>], cols: usize, p: u64) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|x| reduce_int(x, p)).collect())
            .collect();
        Self { p, rows, cols }
    }

    /// Gauss-Jordan elimination visiting columns in `order`. The `k`-th
    /// returned row has a one in column `pivots[k]` and zeros in every other
    /// pivot column.
    pub fn rref(&self, order: &[usize]) -> ModRref {
        let p = self.p;
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for &c in order {
            if r == rows.len() {
                break;
            }
            let Some(found) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, found);
            let inv = inv_mod(rows[r][c], p);
            for x in rows[r].iter_mut() {
                *x = mul_mod(*x, inv, p);
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[c] == 0 {
                    continue;
                }
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    if y != 0 {
                        *x = sub_mod(*x, mul_mod(f, y, p), p);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        ModRref { pivots, rows }
    }

    pub fn rank(&self) -> usize {
        let order: Vec<usize> = (0..self.cols).collect();
        self.rref(&order).pivots.len()
    }

    /// Right-kernel basis: one vector per non-pivot column, in column order.
    pub fn kernel(&self) -> Vec<Vec<u64>> {
        let order: Vec<usize> = (0..self.cols).collect();
        let rref = self.rref(&order);
        kernel_from_rref(&rref, self.cols, self.p)
    }
}

pub fn kernel_from_rref(rref: &ModRref, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let pivot_set: BTreeSet<usize> = rref.pivots.iter().copied().collect();
    (0..cols)
        .filter(|c| !pivot_set.contains(c))
        .map(|free| {
            let mut v = vec![0u64; cols];
            v[free] = 1;
            for (k, &pc) in rref.pivots.iter().enumerate() {
                v[pc] = sub_mod(0, rref.rows[k][free], p);
            }
            v
        })
        .collect()
}

/// Incremental Chinese remaindering of a vector of residues.
pub struct CrtAccumulator {
    modulus: BigInt,
    values: Vec<BigInt>,
}

impl CrtAccumulator {
    pub fn new(len: usize) -> Self {
        Self {
            modulus: BigInt::one(),
            values: vec![BigInt::zero(); len],
        }
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn add(&mut self, residues: &[u64], p: u64) {
        debug_assert_eq!(residues.len(), self.values.len());
        let pb = BigInt::from(p);
        let m_mod_p = reduce_int(&self.modulus, p);
        let m_inv = inv_mod(m_mod_p, p);
        for (v, &r) in self.values.iter_mut().zip(residues) {
            let cur = reduce_int(v, p);
            let t = mul_mod(sub_mod(r, cur, p), m_inv, p);
            *v += &self.modulus * BigInt::from(t);
        }
        self.modulus *= pb;
    }

    /// Rational reconstruction of every accumulated value, or `None` if any
    /// entry has no reconstruction within the symmetric bound.
    ///
    /// Entries of one elimination tend to share denominators, so a running
    /// common denominator `D` is tried first: if `D` and the symmetric
    /// representative `r` of `a D mod m` are both within `sqrt(m/2)`, the
    /// entry is `r / D`, which is the unique reconstruction in that range.
    /// Only entries that fail this test pay for a full reconstruction.
    pub fn reconstruct(&self) -> Option<Vec<BigRational>> {
        let m = &self.modulus;
        let half = m / BigInt::from(2);
        let bound = half.sqrt();
        let mut den = BigInt::one();
        self.values
            .iter()
            .map(|a| {
                let mut r = (a * &den).mod_floor(m);
                if r > half {
                    r -= m;
                }
                if den <= bound && r.abs() <= bound {
                    return Some(BigRational::new(r, den.clone()));
                }
                let x = rational_reconstruction(a, m)?;
                den = den.lcm(x.denom());
                Some(x)
            })
            .collect()
    }
}

/// Finds `n/d` with `|n|, d <= sqrt(m/2)` and `n ≡ a·d (mod m)`.
pub fn rational_reconstruction(a: &BigInt, m: &BigInt) -> Option<BigRational> {
    let a = a.mod_floor(m);
    if a.is_zero() {
        return Some(BigRational::zero());
    }
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), a);
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    if r1.gcd(&t1) != BigInt::one() {
        return None;
    }
    let (n, d) = if t1.sign() == Sign::Minus {
        (-r1, -t1)
    } else {
        (r1, t1)
    };
    Some(BigRational::new(n, d))
}
