//! Monomials in `x_0..x_n`, graded orders and monomial ideals.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::{binomial, Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    pub fn one(num_vars: usize) -> Self {
        Self::new(vec![0; num_vars])
    }

    /// The variable `x_i` in a ring with `num_vars` variables.
    pub fn var(i: usize, num_vars: usize) -> Self {
        let mut exps = vec![0; num_vars];
        exps[i] = 1;
        Self::new(exps)
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() == other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        same_ring(self, other)?;
        Ok(Self::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    /// `(x_i / x_j) * self`, or `None` when `x_j` does not divide `self`.
    pub fn borel_move(&self, i: usize, j: usize) -> Option<Monomial> {
        if self.exps[j] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[j] -= 1;
        exps[i] += 1;
        Some(Self::new(exps))
    }

    /// Same monomial in a ring with `extra` more (trailing) variables.
    pub fn lift(&self, extra: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.extend(std::iter::repeat_n(0, extra));
        Self::new(exps)
    }

    /// Parses `x0^2*x1` style text in a ring with `num_vars` variables.
    /// `1` denotes the unit monomial.
    pub fn parse(text: &str, num_vars: usize) -> Result<Monomial> {
        let text = text.trim();
        let mut exps = vec![0u32; num_vars];
        if text == "1" {
            return Ok(Self::new(exps));
        }
        for factor in text.split('*') {
            let factor = factor.trim();
            let bad = || Error::input(format!("malformed monomial factor `{factor}` in `{text}`"));
            let rest = factor.strip_prefix('x').ok_or_else(bad)?;
            let (idx, pow) = match rest.split_once('^') {
                Some((i, e)) => (i, e.parse::<u32>().map_err(|_| bad())?),
                None => (rest, 1),
            };
            let idx: usize = idx.parse().map_err(|_| bad())?;
            if idx >= num_vars {
                return Err(Error::input(format!(
                    "variable x{idx} out of range for {num_vars} variables"
                )));
            }
            exps[idx] += pow;
        }
        Ok(Self::new(exps))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("x{i}")
                } else {
                    format!("x{i}^{e}")
                }
            })
            .collect();
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.exps.serialize(s)
    }
}

fn same_ring(a: &Monomial, b: &Monomial) -> Result<()> {
    if a.num_vars() != b.num_vars() {
        Err(Error::VariableCount(a.num_vars(), b.num_vars()))
    } else {
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum MonomialOrder {
    #[default]
    GRevLex,
    GLex,
}

pub fn compare(a: &Monomial, b: &Monomial, ord: MonomialOrder) -> Result<Ordering> {
    same_ring(a, b)?;
    Ok(compare_unchecked(a, b, ord))
}

pub(crate) fn compare_unchecked(a: &Monomial, b: &Monomial, ord: MonomialOrder) -> Ordering {
    let by_degree = a.degree().cmp(&b.degree());
    if by_degree != Ordering::Equal {
        return by_degree;
    }
    let diffs = a
        .exps
        .iter()
        .zip(&b.exps)
        .map(|(&x, &y)| x as i64 - y as i64);
    match ord {
        MonomialOrder::GRevLex => match diffs.rev().find(|&d| d != 0) {
            // A smaller exponent in the last differing variable wins.
            Some(d) if d < 0 => Ordering::Greater,
            Some(_) => Ordering::Less,
            None => Ordering::Equal,
        },
        MonomialOrder::GLex => match diffs.into_iter().find(|&d| d != 0) {
            Some(d) if d > 0 => Ordering::Greater,
            Some(_) => Ordering::Less,
            None => Ordering::Equal,
        },
    }
}

/// All degree-`m` monomials in `num_vars` variables, largest first in `ord`.
pub fn monomials_of_degree(num_vars: usize, m: u32, ord: MonomialOrder) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; num_vars];
    fill(&mut exps, 0, m, &mut out);
    out.sort_by(|a, b| compare_unchecked(b, a, ord));
    out
}

fn fill(exps: &mut Vec<u32>, pos: usize, left: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == exps.len() {
        exps[pos] = left;
        out.push(Monomial::new(exps.clone()));
        return;
    }
    if exps.is_empty() {
        return;
    }
    for e in (0..=left).rev() {
        exps[pos] = e;
        fill(exps, pos + 1, left - e, out);
    }
    exps[pos] = 0;
}

/// Which side of `0 -> I_m -> S_m -> (S/I)_m -> 0` to count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Ideal,
    Quotient,
}

/// Monomial ideal kept as its unique minimal generating set, sorted by
/// degree and then descending in grevlex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    num_vars: usize,
    gens: Vec<Monomial>,
}

/// Saturation verdict. The generator criterion is only valid for
/// Borel-fixed ideals, so `borel_fixed == false` means `saturated` is
/// advisory.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SaturationCheck {
    pub saturated: bool,
    pub borel_fixed: bool,
}

pub fn minimalize(
    num_vars: usize,
    gens: impl IntoIterator<Item = Monomial>,
) -> Result<MonomialIdeal> {
    let mut all: Vec<Monomial> = Vec::new();
    for g in gens {
        if g.num_vars() != num_vars {
            return Err(Error::VariableCount(num_vars, g.num_vars()));
        }
        all.push(g);
    }
    all.sort_by_key(Monomial::degree);
    all.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for g in all {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| compare_unchecked(b, a, MonomialOrder::GRevLex))
    });
    Ok(MonomialIdeal {
        num_vars,
        gens: kept,
    })
}

impl MonomialIdeal {
    pub fn zero(num_vars: usize) -> Self {
        Self {
            num_vars,
            gens: vec![],
        }
    }

    /// Parses a comma separated generator list.
    pub fn parse(text: &str, num_vars: usize) -> Result<Self> {
        let gens = text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| Monomial::parse(s, num_vars))
            .collect::<Result<Vec<_>>>()?;
        minimalize(num_vars, gens)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).max()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Checking generators suffices: a Borel move on `g * u` is either a move
    /// on `g` times `u` or `g` times a move on `u`.
    pub fn is_borel_fixed(&self) -> bool {
        self.gens.iter().all(|g| {
            (1..self.num_vars)
                .all(|j| (0..j).all(|i| g.borel_move(i, j).is_none_or(|m| self.contains(&m))))
        })
    }

    pub fn is_saturated(&self) -> SaturationCheck {
        let last = self.num_vars.saturating_sub(1);
        SaturationCheck {
            saturated: self.gens.iter().all(|g| g.exps[last] == 0),
            borel_fixed: self.is_borel_fixed(),
        }
    }

    pub fn hilbert_count(&self, m: u32, side: Side) -> u64 {
        let inside = monomials_of_degree(self.num_vars, m, MonomialOrder::GRevLex)
            .iter()
            .filter(|x| self.contains(x))
            .count() as u64;
        match side {
            Side::Ideal => inside,
            Side::Quotient => self.ambient_count(m) - inside,
        }
    }

    fn ambient_count(&self, m: u32) -> u64 {
        binomial(
            m as i64 + self.num_vars as i64 - 1,
            self.num_vars as i64 - 1,
        ) as u64
    }

    /// Maximum generator degree, which is the regularity for saturated
    /// Borel-fixed ideals. Refuses outside that case.
    pub fn regularity_saturated_borel(&self) -> Result<u32> {
        let sat = self.is_saturated();
        if !sat.borel_fixed {
            return Err(Error::precondition("ideal is not Borel-fixed"));
        }
        if !sat.saturated {
            return Err(Error::precondition(
                "ideal is not saturated (a generator involves the last variable)",
            ));
        }
        self.max_degree()
            .ok_or_else(|| Error::precondition("zero ideal has no generators"))
    }

    /// Extension to a ring with `extra` more trailing variables.
    pub fn lift(&self, extra: usize) -> MonomialIdeal {
        MonomialIdeal {
            num_vars: self.num_vars + extra,
            gens: self.gens.iter().map(|g| g.lift(extra)).collect(),
        }
    }

    /// Generators of a given degree.
    pub fn generators_of_degree(&self, d: u32) -> impl Iterator<Item = &Monomial> {
        self.gens.iter().filter(move |g| g.degree() == d)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(ToString::to_string).collect();
        write!(f, "({})", gens.join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut tuples: Vec<&Vec<u32>> = self.gens.iter().map(|g| &g.exps).collect();
        tuples.sort();
        tuples.serialize(s)
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "grevlex" => Ok(Self::GRevLex),
            "glex" => Ok(Self::GLex),
            other => Err(Error::input(format!("unknown monomial order `{other}`"))),
        }
    }
}
