//! Admissible generic initial ideals of 16 points in a plane and the genus
//! of the cone over them.

use serde::Serialize;

use crate::monomial::{minimalize, Monomial, MonomialIdeal, Side};
use crate::{binomial, Error, Result};

/// Degree of the point set.
pub const POINTS: u32 = 16;
/// Regularity bound used for both the index constraint and the default `m`.
pub const REGULARITY: u32 = 9;

/// Exponent sequence `(λ_0, ..., λ_{k-1})` of the ideal
/// `(x0^k, x0^{k-1} x1^{λ_{k-1}}, ..., x0 x1^{λ_1}, x1^{λ_0})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LambdaSequence {
    lambda: Vec<u32>,
}

impl LambdaSequence {
    pub fn new(lambda: Vec<u32>) -> Result<Self> {
        let s = Self { lambda };
        s.validate()?;
        Ok(s)
    }

    pub fn k(&self) -> usize {
        self.lambda.len()
    }

    pub fn lambda(&self) -> &[u32] {
        &self.lambda
    }

    fn validate(&self) -> Result<()> {
        let l = &self.lambda;
        let fail = |why: &str| Err(Error::precondition(format!("λ = {l:?}: {why}")));
        if l.len() < 2 {
            return fail("k must be at least 2");
        }
        if l.len() > REGULARITY as usize {
            return fail("k exceeds the regularity bound");
        }
        if l.contains(&0) {
            return fail("entries must be positive");
        }
        if l.iter().sum::<u32>() != POINTS {
            return fail("entries must sum to 16");
        }
        for (j, &x) in l.iter().enumerate() {
            if j as u32 + x > REGULARITY {
                return fail("j + λ_j exceeds the regularity bound");
            }
        }
        for w in l.windows(2) {
            if w[1] + 1 > w[0] {
                return fail("sequence must drop by at least one (Borel)");
            }
            if w[1] + 2 < w[0] {
                return fail("sequence drops by more than two");
            }
        }
        Ok(())
    }

    /// The ideal in `x0, x1, x2`.
    pub fn to_ideal(&self) -> MonomialIdeal {
        let k = self.k() as u32;
        let mut gens = vec![Monomial::new(vec![k, 0, 0])];
        for (j, &l) in self.lambda.iter().enumerate() {
            gens.push(Monomial::new(vec![j as u32, l, 0]));
        }
        minimalize(3, gens).expect("three variables throughout")
    }

    /// Closed-form tail: `h^0` of the cone ideal in degree `m`.
    fn h0_closed(&self, m: u32) -> i64 {
        let m = m as i64;
        let k = self.k() as i64;
        binomial(m + 3 - k, 3)
            + self
                .lambda
                .iter()
                .enumerate()
                .map(|(j, &l)| binomial(m + 2 - (j as i64 + l as i64), 2))
                .sum::<i64>()
    }
}

impl std::fmt::Display for LambdaSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.lambda.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GinReport {
    pub sequence: LambdaSequence,
    pub ideal: MonomialIdeal,
    pub g_lambda: i64,
    pub h0_at_m: i64,
    pub m: u32,
    /// Index convention: λ runs over `0..k-1` in both the ideal and the sum.
    pub index_range: &'static str,
}

/// Cone genus `16m+1 - C(m+3,3) + h^0(I_cone(m))`, with the `h^0` term
/// computed both in closed form and by direct monomial count.
pub fn g_lambda(s: &LambdaSequence, m: u32) -> Result<GinReport> {
    if m < REGULARITY {
        return Err(Error::precondition(format!(
            "m = {m} is below the regularity bound {REGULARITY}"
        )));
    }
    let closed = s.h0_closed(m);
    let ideal = s.to_ideal();
    let direct = ideal.lift(1).hilbert_count(m, Side::Ideal) as i64;
    if closed != direct {
        return Err(Error::FormulaMismatch(format!(
            "λ = {s}, m = {m}: closed form {closed}, direct count {direct}"
        )));
    }
    let mi = m as i64;
    Ok(GinReport {
        sequence: s.clone(),
        ideal,
        g_lambda: POINTS as i64 * mi + 1 - binomial(mi + 3, 3) + direct,
        h0_at_m: direct,
        m,
        index_range: "0..k-1",
    })
}

/// All admissible sequences with their genus at `m`, sorted descending by
/// genus (ties broken by sequence, descending).
pub fn enumerate_sequences(m: u32) -> Result<Vec<GinReport>> {
    let mut out = Vec::new();
    for s in admissible_sequences() {
        out.push(g_lambda(&s, m)?);
    }
    out.sort_by(|a, b| {
        b.g_lambda
            .cmp(&a.g_lambda)
            .then_with(|| b.sequence.cmp(&a.sequence))
    });
    Ok(out)
}

pub fn admissible_sequences() -> Vec<LambdaSequence> {
    fn go(cur: &mut Vec<u32>, left: u32, out: &mut Vec<LambdaSequence>) {
        if left == 0 {
            if let Ok(s) = LambdaSequence::new(cur.clone()) {
                out.push(s);
            }
            return;
        }
        let j = cur.len() as u32;
        if j >= REGULARITY {
            return;
        }
        let hi = match cur.last() {
            Some(&p) => p.saturating_sub(1),
            None => REGULARITY,
        }
        .min(REGULARITY - j)
        .min(left);
        let lo = cur.last().map_or(1, |&p| p.saturating_sub(2).max(1));
        for v in (lo..=hi).rev() {
            cur.push(v);
            go(cur, left - v, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), POINTS, &mut out);
    out
}

/// Largest genus among sequences with `k >= 3`, if any.
pub fn max_genus_k_at_least_three(reports: &[GinReport]) -> Option<&GinReport> {
    reports
        .iter()
        .filter(|r| r.sequence.k() >= 3)
        .max_by(|a, b| {
            a.g_lambda
                .cmp(&b.g_lambda)
                .then_with(|| b.sequence.cmp(&a.sequence))
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(l: &[u32]) -> LambdaSequence {
        LambdaSequence::new(l.to_vec()).unwrap()
    }

    #[test]
    fn ideal_shapes() {
        assert_eq!(seq(&[9, 7]).to_ideal().to_string(), "(x0^2, x0*x1^7, x1^9)");
        assert_eq!(
            seq(&[7, 5, 4]).to_ideal().to_string(),
            "(x0^3, x0^2*x1^4, x0*x1^5, x1^7)"
        );
        for s in [seq(&[9, 7]), seq(&[7, 5, 4])] {
            assert_eq!(s.to_ideal().hilbert_count(9, Side::Quotient), 16);
        }
    }

    #[test]
    fn genus_values() {
        let r = g_lambda(&seq(&[9, 7]), 9).unwrap();
        assert_eq!((r.g_lambda, r.h0_at_m), (49, 124));
        let r = g_lambda(&seq(&[7, 5, 4]), 9).unwrap();
        assert_eq!((r.g_lambda, r.h0_at_m), (35, 110));
        assert!(g_lambda(&seq(&[9, 7]), 8).is_err());
    }

    #[test]
    fn invalid_sequences() {
        assert!(LambdaSequence::new(vec![16]).is_err());
        assert!(LambdaSequence::new(vec![8, 8]).is_err());
        assert!(LambdaSequence::new(vec![10, 6]).is_err());
        assert!(LambdaSequence::new(vec![9, 6, 1]).is_err());
    }

    #[test]
    fn enumeration_has_unique_k2_member_at_top() {
        let all = enumerate_sequences(9).unwrap();
        let k2: Vec<_> = all.iter().filter(|r| r.sequence.k() == 2).collect();
        assert_eq!(k2.len(), 1);
        assert_eq!(k2[0].sequence, seq(&[9, 7]));
        assert_eq!(all[0].sequence, seq(&[9, 7]));
        assert_eq!(all[0].g_lambda, 49);
    }
}
