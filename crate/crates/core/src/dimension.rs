//! Genus bounds, splitting-stratum codimensions and incidence dimensions.

use serde::Serialize;

use crate::{binomial, Error, Result};

/// Normalized splitting type `(a_1 >= ... >= a_n)`, every entry positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SplittingType {
    a: Vec<u32>,
}

impl SplittingType {
    /// Sorts the entries into weakly decreasing order. Rejects fewer than two
    /// summands and zero entries.
    pub fn new(mut a: Vec<u32>) -> Result<Self> {
        if a.len() < 2 {
            return Err(Error::precondition(format!(
                "splitting type needs at least two summands, got {}",
                a.len()
            )));
        }
        if a.contains(&0) {
            return Err(Error::precondition(
                "splitting type entries must be positive",
            ));
        }
        a.sort_unstable_by(|x, y| y.cmp(x));
        Ok(Self { a })
    }

    pub fn entries(&self) -> &[u32] {
        &self.a
    }

    pub fn degree(&self) -> u32 {
        self.a.iter().sum()
    }
}

impl std::fmt::Display for SplittingType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.a.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CurveClass {
    pub n: u32,
    pub d: u32,
    pub g: u32,
    pub i: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AmbientConfig {
    pub big_n: u64,
    pub hypersurface_degree: u32,
    pub curve_degree: u32,
}

impl AmbientConfig {
    /// Projective space of degree-`e` hypersurfaces in P^5.
    pub fn new(hypersurface_degree: u32, curve_degree: u32) -> Self {
        let big_n = binomial(hypersurface_degree as i64 + 5, 5) as u64 - 1;
        Self {
            big_n,
            hypersurface_degree,
            curve_degree,
        }
    }
}

impl Default for AmbientConfig {
    fn default() -> Self {
        Self::new(7, 16)
    }
}

pub fn castelnuovo_bound(d: u32, n: u32) -> Result<u32> {
    if n < 2 || d < n {
        return Err(Error::precondition(format!(
            "Castelnuovo bound needs n >= 2 and d >= n (d={d}, n={n})"
        )));
    }
    let m = (d - 1) / (n - 1);
    let eps = (d - 1) - m * (n - 1);
    Ok(m * m.saturating_sub(1) / 2 * (n - 1) + m * eps)
}

/// Sum over ordered pairs `i != j` with `a_i >= a_j` of `max(0, a_i - a_j - 1)`.
pub fn stratum_codim(s: &SplittingType) -> u32 {
    let a = &s.a;
    let mut total = 0;
    for (i, &ai) in a.iter().enumerate() {
        for (j, &aj) in a.iter().enumerate() {
            if i != j && ai >= aj {
                total += ai.saturating_sub(aj + 1);
            }
        }
    }
    total
}

/// `a_1 + a_2 <= bound`; entries are sorted so this is the largest pair.
pub fn glp_regular(s: &SplittingType, bound: u32) -> bool {
    s.a[0] + s.a[1] <= bound
}

/// Splitting types of degree `d` with `n` positive parts and
/// `a_1 + a_2 >= threshold`, sorted by codimension (ties by type, descending).
pub fn enumerate_obstructed_strata(
    d: u32,
    n: u32,
    threshold: u32,
) -> Result<Vec<(SplittingType, u32)>> {
    if n < 2 || d < n {
        return Err(Error::precondition(format!(
            "need d >= n >= 2 (d={d}, n={n})"
        )));
    }
    let mut out = Vec::new();
    for a in partitions(d, n as usize) {
        if a[0] + a[1] >= threshold {
            let s = SplittingType { a };
            let c = stratum_codim(&s);
            out.push((s, c));
        }
    }
    out.sort_by(|(s1, c1), (s2, c2)| c1.cmp(c2).then_with(|| s2.a.cmp(&s1.a)));
    Ok(out)
}

/// Partitions of `d` into exactly `n` positive parts, weakly decreasing.
pub fn partitions(d: u32, n: usize) -> Vec<Vec<u32>> {
    fn go(left: u32, parts: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let lo = left.div_ceil(parts as u32).max(1);
        let hi = cap.min(left.saturating_sub(parts as u32 - 1));
        for v in (lo..=hi).rev() {
            cur.push(v);
            go(left - v, parts - 1, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(d, n, d, &mut Vec::new(), &mut out);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IncidenceDimension {
    pub dimension: i64,
    /// True when `g + i <= d - 2`, so the incidence variety cannot dominate.
    pub non_dominant: bool,
}

pub fn incidence_dimension(cfg: &AmbientConfig, c: &CurveClass) -> IncidenceDimension {
    let dimension = cfg.big_n as i64 + 1 - c.d as i64 + c.g as i64 + c.i as i64;
    IncidenceDimension {
        dimension,
        non_dominant: (c.g + c.i) as i64 <= c.d as i64 - 2,
    }
}

/// Threshold on `g + i` that must hold in ambient dimension `n`.
pub fn required_estimate(n: u32, codim: u32) -> Result<u32> {
    match n {
        5 => Ok(14 + codim),
        4 => Ok(28 + codim),
        3 => Ok(42),
        _ => Err(Error::precondition(format!(
            "required estimate defined only for n in 3..=5, got {n}"
        ))),
    }
}
