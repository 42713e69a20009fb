//! Generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use heptic_core::monomial::{
    minimalize, monomials_of_degree, Monomial, MonomialIdeal, MonomialOrder,
};
use heptic_core::singularity::{semigroup_delta, BranchParam};

pub fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Closure of `seeds` under the moves `x_j -> x_i` with `i < j`.
pub fn borel_closure(num_vars: usize, seeds: &[Monomial]) -> MonomialIdeal {
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut stack: Vec<Monomial> = seeds.to_vec();
    while let Some(m) = stack.pop() {
        if !seen.insert(m.exps().to_vec()) {
            continue;
        }
        for j in 1..num_vars {
            for i in 0..j {
                if let Some(n) = m.borel_move(i, j) {
                    stack.push(n);
                }
            }
        }
    }
    minimalize(num_vars, seen.into_iter().map(Monomial::new)).unwrap()
}

/// Random Borel-fixed ideal with no generator involving the last variable
/// and containing a pure power of the second-to-last, so its quotient
/// Hilbert function is eventually constant.
pub fn random_borel_saturated(rng: &mut ChaCha8Rng, num_vars: usize) -> MonomialIdeal {
    let inner = num_vars - 1;
    let mut seeds = Vec::new();
    let top = rng.gen_range(1..=4u32);
    let mut pure = vec![0; num_vars];
    pure[inner - 1] = top + rng.gen_range(0..=2);
    seeds.push(Monomial::new(pure));
    for _ in 0..rng.gen_range(0..4) {
        let deg = rng.gen_range(1..=top + 1);
        let mut e = vec![0u32; num_vars];
        for _ in 0..deg {
            e[rng.gen_range(0..inner)] += 1;
        }
        seeds.push(Monomial::new(e));
    }
    borel_closure(num_vars, &seeds)
}

/// Random monomial ideal, usually not Borel-fixed.
pub fn random_ideal(rng: &mut ChaCha8Rng, num_vars: usize) -> MonomialIdeal {
    let gens: Vec<Monomial> = (0..rng.gen_range(1..5))
        .map(|_| {
            let deg = rng.gen_range(1..=4);
            let mut e = vec![0u32; num_vars];
            for _ in 0..deg {
                e[rng.gen_range(0..num_vars)] += 1;
            }
            Monomial::new(e)
        })
        .collect();
    minimalize(num_vars, gens).unwrap()
}

/// Borel-fixedness checked on every monomial of the ideal up to two degrees
/// past its generators.
pub fn brute_force_borel(ideal: &MonomialIdeal) -> bool {
    let n = ideal.num_vars();
    let top = ideal.max_degree().unwrap_or(0) + 2;
    (0..=top).all(|d| {
        monomials_of_degree(n, d, MonomialOrder::GRevLex)
            .iter()
            .filter(|m| ideal.generators().iter().any(|g| g.divides(m)))
            .all(|m| {
                (1..n).all(|j| {
                    (0..j).all(|i| {
                        m.borel_move(i, j)
                            .is_none_or(|x| ideal.generators().iter().any(|g| g.divides(&x)))
                    })
                })
            })
    })
}

pub fn random_int_rows(rng: &mut ChaCha8Rng, rows: usize, cols: usize, span: i64) -> Vec<Vec<i64>> {
    (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-span..=span)).collect())
        .collect()
}

/// `rows x cols` integer matrix of rank at most `r`, as a product of random
/// factors.
pub fn random_low_rank(rng: &mut ChaCha8Rng, rows: usize, cols: usize, r: usize) -> Vec<Vec<i64>> {
    let a = random_int_rows(rng, rows, r, 4);
    let b = random_int_rows(rng, r, cols, 4);
    (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| (0..r).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Rank by textbook elimination over the rationals.
pub fn oracle_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| q(x)).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &pivot;
                let src = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(src) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

// ---------------------------------------------------------------------------
// Delta oracle: transversal unions add one per extra component; planar
// germs use sum of branch deltas plus pairwise intersection numbers, the
// latter read off a resultant.

const SERIES_LEN: usize = 40;

type Series = Vec<BigRational>;

fn series_mul(a: &Series, b: &Series) -> Series {
    let mut out = vec![BigRational::zero(); SERIES_LEN];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(SERIES_LEN - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn series_of(terms: &[(usize, BigRational)]) -> Series {
    let mut s = vec![BigRational::zero(); SERIES_LEN];
    for (e, c) in terms {
        if *e < SERIES_LEN {
            s[*e] += c;
        }
    }
    s
}

/// Determinant over truncated series by dynamic programming on column sets.
fn series_det(m: &[Vec<Series>]) -> Series {
    let n = m.len();
    let mut dp: Vec<Option<Series>> = vec![None; 1 << n];
    let mut one = vec![BigRational::zero(); SERIES_LEN];
    one[0] = BigRational::one();
    dp[0] = Some(one);
    for mask in 0usize..(1 << n) {
        let Some(cur) = dp[mask].clone() else {
            continue;
        };
        let row = mask.count_ones() as usize;
        if row == n {
            continue;
        }
        for c in 0..n {
            if mask & (1 << c) != 0 {
                continue;
            }
            let above = (mask >> (c + 1)).count_ones();
            let mut term = series_mul(&cur, &m[row][c]);
            if above % 2 == 1 {
                for x in term.iter_mut() {
                    *x = -x.clone();
                }
            }
            let slot =
                dp[mask | (1 << c)].get_or_insert_with(|| vec![BigRational::zero(); SERIES_LEN]);
            for (x, y) in slot.iter_mut().zip(term) {
                *x += y;
            }
        }
    }
    dp[(1 << n) - 1].clone().unwrap()
}

/// Intersection number of two plane branches `(x_i, y_i)` and `(x_j, y_j)`
/// as the order of `Res_s(x_i(t) - x_j(s), y_i(t) - y_j(s))`. Needs `x_j`
/// of order equal to the multiplicity of branch `j`, which the caller
/// arranges by a generic change of coordinates.
fn intersection_number(bi: &[Series; 2], bj: &[Vec<(usize, BigRational)>; 2]) -> u32 {
    let poly = |k: usize, which: usize| -> Series {
        // Coefficient of s^k in (branch i coordinate)(t) - (branch j coordinate)(s).
        let mut s = vec![BigRational::zero(); SERIES_LEN];
        if k == 0 {
            s = bi[which].clone();
        }
        for (e, c) in &bj[which] {
            if *e == k {
                s[0] -= c;
            }
        }
        s
    };
    let deg = |which: usize| bj[which].iter().map(|(e, _)| *e).max().unwrap_or(0);
    let (p, qd) = (deg(0), deg(1));
    let n = p + qd;
    let zero = vec![BigRational::zero(); SERIES_LEN];
    let mut m = vec![vec![zero.clone(); n]; n];
    for r in 0..qd {
        for k in 0..=p {
            m[r][r + k] = poly(p - k, 0);
        }
    }
    for r in 0..p {
        for k in 0..=qd {
            m[qd + r][r + k] = poly(qd - k, 1);
        }
    }
    let det = series_det(&m);
    det.iter()
        .position(|x| !x.is_zero())
        .expect("branches share a component or the truncation is too short") as u32
}

fn unibranch_oracle(branch: &[Vec<(usize, BigRational)>]) -> u32 {
    if branch
        .iter()
        .any(|s| s.first().is_some_and(|(e, _)| *e == 1))
    {
        return 0;
    }
    let exps: Vec<u32> = branch
        .iter()
        .filter(|s| !s.is_empty())
        .map(|s| {
            assert_eq!(s.len(), 1, "oracle handles monomial singular branches only");
            s[0].0 as u32
        })
        .collect();
    semigroup_delta(&exps).unwrap()
}

fn support(branch: &[Vec<(usize, BigRational)>]) -> BTreeSet<usize> {
    branch
        .iter()
        .enumerate()
        .filter(|(_, s)| !s.is_empty())
        .map(|(i, _)| i)
        .collect()
}

/// Independent delta for germs built from planar pieces placed in
/// complementary coordinate subspaces.
pub fn oracle_delta(p: &BranchParam) -> u32 {
    let n = p.branches.len();
    let supports: Vec<BTreeSet<usize>> = p.branches.iter().map(|b| support(b)).collect();
    // Connected components under shared coordinates.
    let mut comp: Vec<usize> = (0..n).collect();
    let find = |comp: &mut Vec<usize>, mut x: usize| {
        while comp[x] != x {
            x = comp[x];
        }
        x
    };
    for i in 0..n {
        for j in i + 1..n {
            if !supports[i].is_disjoint(&supports[j]) {
                let (a, b) = (find(&mut comp, i), find(&mut comp, j));
                comp[a] = b;
            }
        }
    }
    let roots: BTreeSet<usize> = (0..n).map(|i| find(&mut comp, i)).collect();
    if roots.len() > 1 {
        let mut total = roots.len() as u32 - 1;
        for r in roots {
            let members: Vec<usize> = (0..n).filter(|&i| find(&mut comp, i) == r).collect();
            let coords: BTreeSet<usize> =
                members.iter().flat_map(|&i| supports[i].clone()).collect();
            let branches = members
                .iter()
                .map(|&i| coords.iter().map(|&c| p.branches[i][c].clone()).collect())
                .collect();
            total += oracle_delta(&BranchParam::new(coords.len(), branches).unwrap());
        }
        return total;
    }
    if n == 1 {
        return unibranch_oracle(&p.branches[0]);
    }
    let coords: Vec<usize> = supports
        .iter()
        .flatten()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    assert_eq!(coords.len(), 2, "oracle needs a planar germ");
    // Generic coordinates: x' = x + 2y, y' = 3x + 5y.
    let change = |b: &Vec<Vec<(usize, BigRational)>>| -> [Vec<(usize, BigRational)>; 2] {
        let (x, y) = (&b[coords[0]], &b[coords[1]]);
        let combine = |a: i64, c: i64| {
            let mut s = series_of(x);
            for v in s.iter_mut() {
                *v *= q(a);
            }
            let t = series_of(y);
            for (v, w) in s.iter_mut().zip(t) {
                *v += w * q(c);
            }
            s.into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect::<Vec<_>>()
        };
        [combine(1, 2), combine(3, 5)]
    };
    let moved: Vec<[Vec<(usize, BigRational)>; 2]> = p.branches.iter().map(change).collect();
    let mut total: u32 = p
        .branches
        .iter()
        .map(|b| unibranch_oracle(&coords.iter().map(|&c| b[c].clone()).collect::<Vec<_>>()))
        .sum();
    for i in 0..n {
        for j in i + 1..n {
            let bi = [series_of(&moved[i][0]), series_of(&moved[i][1])];
            total += intersection_number(&bi, &moved[j]);
        }
    }
    total
}
