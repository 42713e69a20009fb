use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{BiForm, ParamCurve};
use crate::exact::{self, ExactMatrix, ModularConfig, Route};
use crate::monomial::{minimalize, monomials_of_degree, Monomial, MonomialIdeal, MonomialOrder};
use crate::{binomial, Error, Result};

/// Columns: degree-`m` monomials in `x0..x4`, largest first in `ord`.
/// Rows: coefficients of the degree `m * d` form obtained by substituting
/// the curve into each monomial.
pub fn substitution_matrix(
    c: &ParamCurve,
    m: u32,
    ord: MonomialOrder,
) -> Result<(ExactMatrix, Vec<Monomial>)> {
    if m == 0 {
        return Err(Error::precondition("slice degree must be positive"));
    }
    let monos = monomials_of_degree(5, m, ord);
    let mut images: HashMap<Monomial, BiForm> = HashMap::new();
    images.insert(Monomial::one(5), BiForm::new(vec![BigInt::from(1)])?);
    for deg in 1..=m {
        let mut next = HashMap::new();
        for mono in monomials_of_degree(5, deg, ord) {
            let i = mono
                .exps()
                .iter()
                .position(|&e| e > 0)
                .expect("positive degree");
            let mut parent = mono.exps().to_vec();
            parent[i] -= 1;
            let form = images[&Monomial::new(parent)].mul(&c.f[i]);
            next.insert(mono, form);
        }
        images = next;
    }
    let rows = m as usize * c.degree() + 1;
    let table: Vec<Vec<BigInt>> = (0..rows)
        .map(|k| {
            monos
                .iter()
                .map(|mono| images[mono].coeffs()[k].clone())
                .collect()
        })
        .collect();
    Ok((ExactMatrix::from_int_rows(&table)?, monos))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Slice {
    pub m: u32,
    pub kernel_dim: usize,
    pub modular: bool,
}

/// Dimension of the degree-`m` piece of the ideal of the image.
pub fn ideal_slice(c: &ParamCurve, m: u32, cfg: &ModularConfig) -> Result<Slice> {
    let (mat, monos) = substitution_matrix(c, m, MonomialOrder::GRevLex)?;
    let (rank, route) = exact::rank_with_route(&mat, cfg)?;
    Ok(Slice {
        m,
        kernel_dim: monos.len() - rank,
        modular: route == Route::Modular,
    })
}

/// Integer basis of the degree-`m` piece, coordinates indexed like the
/// returned monomials.
pub fn ideal_slice_basis(
    c: &ParamCurve,
    m: u32,
    cfg: &ModularConfig,
) -> Result<(Vec<Vec<BigInt>>, Vec<Monomial>)> {
    let (mat, monos) = substitution_matrix(c, m, MonomialOrder::GRevLex)?;
    Ok((exact::kernel_basis(&mat, cfg)?, monos))
}

/// Leading monomials of the span of `basis` (rows over `monos`, which must
/// be sorted largest first): pivots of an elimination scanning columns from
/// the largest monomial down.
pub fn leading_monomials_of_basis(
    basis: &[Vec<BigInt>],
    monos: &[Monomial],
    cfg: &ModularConfig,
) -> Result<Vec<Monomial>> {
    if basis.is_empty() {
        return Ok(vec![]);
    }
    let mat = ExactMatrix::from_int_rows(basis)?;
    let order: Vec<usize> = (0..monos.len()).collect();
    let (pivots, _) = exact::pivot_columns(&mat, &order, cfg)?;
    Ok(pivots.into_iter().map(|p| monos[p].clone()).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SliceInfo {
    pub m: u32,
    pub kernel_dim: usize,
    pub new_generators: Vec<Monomial>,
    pub modular: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InitialIdeal {
    pub ideal: MonomialIdeal,
    pub slices: Vec<SliceInfo>,
}

/// Initial ideal in degrees `1..=up_to`.
///
/// A monomial leads some form in the kernel exactly when its column in the
/// substitution matrix depends on the columns of smaller monomials, so the
/// degree-`m` part is the set of non-pivots of an elimination that scans
/// columns from the smallest monomial up. This avoids reconstructing the
/// kernel itself. Degrees are processed concurrently.
pub fn initial_ideal(
    c: &ParamCurve,
    up_to: u32,
    ord: MonomialOrder,
    cfg: &ModularConfig,
) -> Result<InitialIdeal> {
    if up_to == 0 {
        return Err(Error::precondition("up_to must be positive"));
    }
    let per_degree: Vec<Result<(u32, Vec<Monomial>, bool)>> = std::thread::scope(|s| {
        let handles: Vec<_> = (1..=up_to)
            .map(|m| s.spawn(move || leading_in_degree(c, m, ord, cfg)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("slice worker panicked"))
            .collect()
    });
    let mut gens: Vec<Monomial> = Vec::new();
    let mut slices = Vec::new();
    for item in per_degree {
        let (m, leading, modular) = item?;
        let so_far = minimalize(5, gens.clone())?;
        let new: Vec<Monomial> = leading
            .iter()
            .filter(|x| !so_far.contains(x))
            .cloned()
            .collect();
        gens.extend(new.iter().cloned());
        slices.push(SliceInfo {
            m,
            kernel_dim: leading.len(),
            new_generators: new,
            modular,
        });
    }
    Ok(InitialIdeal {
        ideal: minimalize(5, gens)?,
        slices,
    })
}

fn leading_in_degree(
    c: &ParamCurve,
    m: u32,
    ord: MonomialOrder,
    cfg: &ModularConfig,
) -> Result<(u32, Vec<Monomial>, bool)> {
    let (mat, monos) = substitution_matrix(c, m, ord)?;
    let ascending: Vec<usize> = (0..monos.len()).rev().collect();
    let (pivots, route) = exact::pivot_columns(&mat, &ascending, cfg)?;
    let mut standard = vec![false; monos.len()];
    for p in pivots {
        standard[p] = true;
    }
    let leading = monos
        .into_iter()
        .zip(standard)
        .filter(|(_, s)| !s)
        .map(|(x, _)| x)
        .collect();
    Ok((m, leading, route == Route::Modular))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IVerdict {
    /// Regularity at most 8, hence `h^1(I_C(7)) = 0`.
    IZero {
        regularity: u32,
    },
    /// Regularity too large to conclude.
    Withheld {
        regularity: u32,
    },
    NotBorel,
    NotSaturated,
}

/// For a saturated Borel-fixed initial ideal the regularity is the top
/// generator degree, and cohomology of the curve is bounded by that of the
/// initial ideal.
pub fn conclude_i_zero(ideal: &MonomialIdeal) -> IVerdict {
    match ideal.regularity_saturated_borel() {
        Ok(r) if r <= 8 => IVerdict::IZero { regularity: r },
        Ok(r) => IVerdict::Withheld { regularity: r },
        Err(_) if !ideal.is_borel_fixed() => IVerdict::NotBorel,
        Err(_) => IVerdict::NotSaturated,
    }
}

/// Random invertible integer matrix with entries in `[-5, 5]`.
pub fn random_coordinate_change(rng: &mut ChaCha8Rng, cfg: &ModularConfig) -> Vec<Vec<i64>> {
    loop {
        let g: Vec<Vec<i64>> = (0..5)
            .map(|_| (0..5).map(|_| rng.gen_range(-5..=5)).collect())
            .collect();
        let m = ExactMatrix::from_int_rows(&g).expect("square");
        if exact::rank(&m, &cfg.clone().exact()).expect("nonempty") == 5 {
            return g;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Attempt {
    /// `None` for the original coordinates.
    pub transform: Option<Vec<Vec<i64>>>,
    pub borel_fixed: bool,
    pub verdict: IVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub initial: InitialIdeal,
    pub attempts: Vec<Attempt>,
    pub verdict: IVerdict,
}

/// Initial ideal up to `up_to`, retrying in random coordinates (at most
/// `retries` times) while the result is not Borel-fixed.
pub fn certify(
    c: &ParamCurve,
    up_to: u32,
    cfg: &ModularConfig,
    retries: usize,
) -> Result<Certificate> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed());
    let mut attempts = Vec::new();
    let mut transform: Option<Vec<Vec<i64>>> = None;
    loop {
        let curve = match &transform {
            Some(g) => c.transform(g),
            None => c.clone(),
        };
        let initial = initial_ideal(&curve, up_to, MonomialOrder::GRevLex, cfg)?;
        let verdict = conclude_i_zero(&initial.ideal);
        let borel_fixed = verdict != IVerdict::NotBorel;
        attempts.push(Attempt {
            transform: transform.clone(),
            borel_fixed,
            verdict,
        });
        if borel_fixed || attempts.len() > retries {
            return Ok(Certificate {
                initial,
                attempts,
                verdict,
            });
        }
        transform = Some(random_coordinate_change(&mut rng, cfg));
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertCheck {
    /// `(m, kernel_dim, g)` with `C(m+4,4) - kernel_dim = d m + 1 - g`.
    pub rows: Vec<(u32, usize, i64)>,
    pub genus: Option<i64>,
}

pub fn hilbert_consistency(
    c: &ParamCurve,
    degrees: std::ops::RangeInclusive<u32>,
    cfg: &ModularConfig,
) -> Result<HilbertCheck> {
    let d = c.degree() as i64;
    let mut rows = Vec::new();
    for m in degrees {
        let slice = ideal_slice(c, m, cfg)?;
        let h = binomial(m as i64 + 4, 4) - slice.kernel_dim as i64;
        rows.push((m, slice.kernel_dim, d * m as i64 + 1 - h));
    }
    let first = rows.first().map(|r| r.2);
    let genus = first.filter(|g| rows.iter().all(|r| r.2 == *g));
    Ok(HilbertCheck { rows, genus })
}

/// Dimension of the space of syzygies `sum g_i f_i = 0` with `deg g_i = e`.
pub fn syzygy_profile(
    c: &ParamCurve,
    degrees: &[usize],
    cfg: &ModularConfig,
) -> Result<Vec<(usize, usize)>> {
    let d = c.degree();
    degrees
        .iter()
        .map(|&e| {
            let cols = 5 * (e + 1);
            let table: Vec<Vec<BigInt>> = (0..=d + e)
                .map(|k| {
                    let mut row = vec![BigInt::zero(); cols];
                    for i in 0..5 {
                        for l in 0..=e {
                            if let Some(x) = k.checked_sub(l).and_then(|j| c.f[i].coeffs().get(j)) {
                                row[i * (e + 1) + l] = x.clone();
                            }
                        }
                    }
                    row
                })
                .collect();
            let mat = ExactMatrix::from_int_rows(&table)?;
            Ok((e, cols - exact::rank(&mat, cfg)?))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealDiff {
    pub equal: bool,
    pub only_computed: Vec<Monomial>,
    pub only_reference: Vec<Monomial>,
}

pub fn diff_ideals(computed: &MonomialIdeal, reference: &MonomialIdeal) -> IdealDiff {
    let a = computed.generators();
    let b = reference.generators();
    let only_computed: Vec<Monomial> = a.iter().filter(|x| !b.contains(x)).cloned().collect();
    let only_reference: Vec<Monomial> = b.iter().filter(|x| !a.contains(x)).cloned().collect();
    IdealDiff {
        equal: only_computed.is_empty() && only_reference.is_empty(),
        only_computed,
        only_reference,
    }
}
