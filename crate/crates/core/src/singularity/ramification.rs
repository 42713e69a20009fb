use serde::Serialize;

use crate::exact::{self, ExactMatrix, ModularConfig};
use crate::{binomial, Error, Result};

/// Vanishing orders `r_1 <= ... <= r_n` of a branch's coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RamificationType {
    r: Vec<u32>,
}

impl RamificationType {
    /// Entries must be positive and weakly increasing. Genuine singular
    /// branches have `r_1 >= 2`; `r_1 = 1` is accepted so the unramified
    /// type `(1, 2, ..., n)` can be expressed.
    pub fn new(r: Vec<u32>) -> Result<Self> {
        if r.is_empty() {
            return Err(Error::precondition("ramification type is empty"));
        }
        if r.contains(&0) {
            return Err(Error::precondition("ramification orders must be positive"));
        }
        if r.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::precondition(format!(
                "ramification type {r:?} is not weakly increasing"
            )));
        }
        Ok(Self { r })
    }

    pub fn orders(&self) -> &[u32] {
        &self.r
    }

    pub fn n(&self) -> usize {
        self.r.len()
    }
}

/// Schubert-cycle codimension `sum (r_i - i)`.
pub fn ramification_codim(rt: &RamificationType) -> i64 {
    rt.r.iter()
        .enumerate()
        .map(|(i, &r)| r as i64 - (i as i64 + 1))
        .sum()
}

/// The alternative count `sum r_i - C(n, 2)`.
pub fn expected_codim_alt(rt: &RamificationType) -> i64 {
    rt.r.iter().map(|&r| r as i64).sum::<i64>() - binomial(rt.n() as i64, 2)
}

fn det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .filter(|&j| m[0][j] != 0)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Rank of the first-order conditions that keep the ramification type.
///
/// The model branch is `psi_k = t^{r_k} / r_k!`, deformed by
/// `eps * sum_l alpha_l^{(k)} t^l / l!`. Its derivative matrix is
/// `A0 + eps B` with `A0[k][l] = [l == r_k]` and `B[k][l] = alpha_l^{(k)}`.
/// For each `i`, every `i x i` minor of the columns `1..r_i - 1` must vanish;
/// the `eps` coefficient of a minor is the linear form whose coefficients are
/// the cofactors of `A0` on that minor. The returned value is the rank of all
/// these forms in the unknowns `alpha_l^{(k)}`.
pub fn linearized_rank_conditions(rt: &RamificationType, cfg: &ModularConfig) -> Result<usize> {
    let n = rt.n();
    let top = *rt.r.last().expect("nonempty") as usize;
    let width = top.saturating_sub(1);
    if width == 0 {
        return Ok(0);
    }
    let var = |k: usize, l: usize| k * width + (l - 1);
    let a0 = |k: usize, l: usize| i64::from(rt.r[k] as usize == l);
    let mut forms: Vec<Vec<i64>> = Vec::new();
    for i in 1..=n {
        let cols = rt.r[i - 1] as usize - 1;
        if cols < i {
            continue;
        }
        for rows in subsets(n, i) {
            for csel in subsets(cols, i) {
                let cols_l: Vec<usize> = csel.iter().map(|c| c + 1).collect();
                let mut form = vec![0i64; n * width];
                for (a, &k) in rows.iter().enumerate() {
                    for (b, &l) in cols_l.iter().enumerate() {
                        let minor: Vec<Vec<i64>> = rows
                            .iter()
                            .enumerate()
                            .filter(|&(x, _)| x != a)
                            .map(|(_, &kk)| {
                                cols_l
                                    .iter()
                                    .enumerate()
                                    .filter(|&(y, _)| y != b)
                                    .map(|(_, &ll)| a0(kk, ll))
                                    .collect()
                            })
                            .collect();
                        let sign = if (a + b) % 2 == 0 { 1 } else { -1 };
                        form[var(k, l)] += sign * det(&minor);
                    }
                }
                if form.iter().any(|&x| x != 0) {
                    forms.push(form);
                }
            }
        }
    }
    forms.sort();
    forms.dedup();
    if forms.is_empty() {
        return Ok(0);
    }
    exact::rank(&ExactMatrix::from_int_rows(&forms)?, cfg)
}

/// Weakly increasing types with `n` entries in `lo..=hi`.
pub fn enumerate_types(n: usize, lo: u32, hi: u32) -> Vec<RamificationType> {
    fn go(n: usize, lo: u32, hi: u32, cur: &mut Vec<u32>, out: &mut Vec<RamificationType>) {
        if cur.len() == n {
            out.push(RamificationType { r: cur.clone() });
            return;
        }
        let start = cur.last().copied().unwrap_or(lo);
        for v in start..=hi {
            cur.push(v);
            go(n, lo, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, lo, hi, &mut Vec::new(), &mut out);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QuadruplePointCodim {
    pub fixed: i64,
    pub varied: i64,
}

/// Vanishing at `points` preimages imposes `rank * points` conditions;
/// letting the preimages and their common image move gives back
/// `point_moduli + target_dim`.
pub fn quadruple_point_codim(
    rank: u32,
    points: u32,
    target_dim: u32,
    point_moduli: u32,
) -> Result<QuadruplePointCodim> {
    let fixed = rank as i64 * points as i64;
    let varied = fixed - point_moduli as i64 - target_dim as i64;
    if varied < 0 {
        return Err(Error::precondition(format!(
            "negative codimension {varied} after varying points"
        )));
    }
    Ok(QuadruplePointCodim { fixed, varied })
}

/// Codimension required of the genus-`g` locus: `min(3g, 9)`.
pub fn lemma_verdict(g: u32) -> u32 {
    (3 * g).min(9)
}
