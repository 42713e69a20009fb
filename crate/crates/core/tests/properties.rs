mod common;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use heptic_core::binomial;
use heptic_core::dimension::{
    castelnuovo_bound, enumerate_obstructed_strata, required_estimate, stratum_codim, SplittingType,
};
use heptic_core::exact::{self, ExactMatrix, ModMatrix, ModularConfig};
use heptic_core::gins::{admissible_sequences, g_lambda, LambdaSequence};
use heptic_core::monomial::{minimalize, MonomialIdeal, Side};
use heptic_core::rewriting::{
    apply_rule, min_forced_rewritings, rule_for, BezoutConstraints, GeneratorTree, RuleScope,
    SearchConfig,
};
use heptic_core::singularity::{
    bundled_catalog, delta_invariant, semigroup_delta, BranchParam, DEFAULT_TRUNCATION,
};

use common::*;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn minimalize_is_idempotent(seed in any::<u64>(), n in 2usize..=5) {
        let ideal = random_ideal(&mut rng(seed), n);
        let again = minimalize(n, ideal.generators().iter().cloned()).unwrap();
        prop_assert_eq!(again, ideal);
    }

    #[test]
    fn hilbert_counts_are_complementary(seed in any::<u64>(), n in 2usize..=5, m in 0u32..=8) {
        let ideal = random_ideal(&mut rng(seed), n);
        let total = binomial(m as i64 + n as i64 - 1, n as i64 - 1) as u64;
        prop_assert_eq!(ideal.hilbert_count(m, Side::Ideal) + ideal.hilbert_count(m, Side::Quotient), total);
    }

    #[test]
    fn borel_check_matches_brute_force(seed in any::<u64>(), n in 2usize..=4, closed in any::<bool>()) {
        let mut r = rng(seed);
        let ideal = if closed { random_borel_saturated(&mut r, n + 1) } else { random_ideal(&mut r, n) };
        prop_assert_eq!(ideal.is_borel_fixed(), brute_force_borel(&ideal));
        if closed {
            prop_assert!(ideal.is_borel_fixed());
        }
    }

    #[test]
    fn saturated_borel_quotient_is_eventually_constant(seed in any::<u64>(), n in 3usize..=4) {
        let ideal = random_borel_saturated(&mut rng(seed), n);
        let sat = ideal.is_saturated();
        prop_assert!(sat.saturated && sat.borel_fixed);
        let reg = ideal.regularity_saturated_borel().unwrap();
        prop_assert_eq!(Some(reg), ideal.max_degree());
        // The ideal of a zero-dimensional scheme: its quotient count is the
        // colength of the ideal in the first n - 1 variables.
        let restricted = MonomialIdeal::parse(
            &ideal.generators().iter().map(|g| {
                let e = &g.exps()[..n - 1];
                e.iter().enumerate().filter(|(_, &x)| x > 0)
                    .map(|(i, x)| format!("x{i}^{x}")).collect::<Vec<_>>().join("*")
            }).collect::<Vec<_>>().join(", "),
            n - 1,
        ).unwrap();
        let colength: u64 = (0..=reg + n as u32).map(|m| restricted.hilbert_count(m, Side::Quotient)).sum();
        let stable = ideal.hilbert_count(reg, Side::Quotient);
        for m in reg..reg + 4 {
            prop_assert_eq!(ideal.hilbert_count(m, Side::Quotient), stable);
        }
        prop_assert_eq!(stable, colength);
    }

    #[test]
    fn rank_plus_kernel_is_column_count(seed in any::<u64>(), rows in 1usize..7, cols in 1usize..8, r in 1usize..4) {
        let mut g = rng(seed);
        let data = random_low_rank(&mut g, rows, cols, r);
        let m = ExactMatrix::from_int_rows(&data).unwrap();
        let cfg = ModularConfig::from_seed(seed, 2).unwrap();
        let rank = exact::rank(&m, &cfg).unwrap();
        prop_assert_eq!(rank, oracle_rank(&data));
        let kernel = exact::kernel_basis(&m, &cfg).unwrap();
        prop_assert_eq!(rank + kernel.len(), cols);
        for v in &kernel {
            prop_assert!(m.mul_int_vec(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn modular_and_exact_agree(seed in any::<u64>(), rows in 1usize..7, cols in 1usize..8, r in 1usize..4) {
        let data = random_low_rank(&mut rng(seed), rows, cols, r);
        let m = ExactMatrix::from_int_rows(&data).unwrap();
        let cfg = ModularConfig::from_seed(seed ^ 0x55, 3).unwrap();
        prop_assert_eq!(exact::rank(&m, &cfg).unwrap(), exact::rank(&m, &cfg.clone().exact()).unwrap());
        prop_assert_eq!(
            exact::kernel_basis(&m, &cfg).unwrap(),
            exact::kernel_basis(&m, &cfg.clone().exact()).unwrap()
        );
        let big: Vec<Vec<BigInt>> = data.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        for &p in cfg.primes() {
            prop_assert!(ModMatrix::from_int_rows(&big, cols, p).rank() <= oracle_rank(&data));
        }
    }

    #[test]
    fn stratum_codim_ignores_order(seed in any::<u64>(), n in 2usize..=6) {
        let mut g = rng(seed);
        let a: Vec<u32> = (0..n).map(|_| g.gen_range(1..=9)).collect();
        let mut shuffled = a.clone();
        shuffled.shuffle(&mut g);
        let direct = |v: &[u32]| -> u32 {
            let mut t = 0;
            for (i, &x) in v.iter().enumerate() {
                for (j, &y) in v.iter().enumerate() {
                    if i != j && x > y { t += x - y - 1; }
                }
            }
            t
        };
        let c = stratum_codim(&SplittingType::new(shuffled.clone()).unwrap());
        prop_assert_eq!(c, stratum_codim(&SplittingType::new(a.clone()).unwrap()));
        prop_assert_eq!(c, direct(&shuffled));
    }

    #[test]
    fn strata_match_brute_force(d in 4u32..=14, n in 2u32..=4, threshold in 2u32..=12) {
        prop_assume!(d >= n);
        let listed: BTreeSet<Vec<u32>> = enumerate_obstructed_strata(d, n, threshold).unwrap()
            .into_iter().map(|(s, _)| s.entries().to_vec()).collect();
        prop_assert_eq!(listed, brute_force_strata(d, n, threshold));
    }

    #[test]
    fn rewriting_shrinks_the_ideal(seed in any::<u64>(), steps in 1usize..8) {
        let mut g = rng(seed);
        let seqs = admissible_sequences();
        let start = seqs.choose(&mut g).unwrap().to_ideal();
        let mut tree = GeneratorTree::new(start).unwrap();
        for step in 0..steps {
            let options: Vec<_> = tree.leaves.generators().iter()
                .filter_map(|m| rule_for(m, RuleScope::ModuloLift).map(|r| (m.clone(), r)))
                .collect();
            let Some((target, rule)) = options.choose(&mut g).cloned() else { break };
            let next = apply_rule(&tree, &target, rule, RuleScope::ModuloLift).unwrap();
            for m in 0..=14 {
                prop_assert!(next.leaves.hilbert_count(m, Side::Ideal) <= tree.leaves.hilbert_count(m, Side::Ideal));
            }
            prop_assert_eq!(next.leaves.num_vars(), 3);
            prop_assert!(next.leaves.lift(1).is_saturated().saturated);
            prop_assert_eq!(
                &minimalize(3, next.leaves.generators().iter().cloned()).unwrap(),
                &next.leaves
            );
            prop_assert_eq!(next.applied.len(), step + 1);
            tree = next;
        }
    }

    #[test]
    fn delta_survives_coordinate_changes(seed in any::<u64>(), which in 0usize..17) {
        let catalog = bundled_catalog();
        let rec = &catalog[which % catalog.len()];
        let r = rec.param.embedding_dim;
        let mut g = rng(seed);
        let change = loop {
            let m = random_int_rows(&mut g, r, r, 3);
            if oracle_rank(&m) == r {
                break m;
            }
        };
        let change: Vec<Vec<_>> = change.iter().map(|row| row.iter().map(|&x| q(x)).collect()).collect();
        let moved = rec.param.linear_change(&change).unwrap();
        prop_assert_eq!(
            delta_invariant(&moved, DEFAULT_TRUNCATION).unwrap(),
            delta_invariant(&rec.param, DEFAULT_TRUNCATION).unwrap()
        );
    }

    #[test]
    fn monomial_branches_match_semigroup_gaps(a in 2u32..=7, b in 2u32..=9, c in 0u32..=11) {
        let mut exps = vec![a, b];
        if c > 0 { exps.push(c); }
        let g = exps.iter().fold(0u32, |x, &y| num_integer::gcd(x, y));
        prop_assume!(g == 1);
        let p = BranchParam::monomial_curve(&exps);
        let truncation = largest_gap(&exps) as usize + 4;
        prop_assert_eq!(delta_invariant(&p, truncation).unwrap(), semigroup_delta(&exps).unwrap());
    }
}

/// Largest integer outside the semigroup, by a sieve.
fn largest_gap(gens: &[u32]) -> u32 {
    let limit = 2 * gens.iter().max().unwrap() * gens.iter().min().unwrap();
    let mut hit = vec![false; limit as usize + 1];
    hit[0] = true;
    for v in 1..=limit as usize {
        hit[v] = gens.iter().any(|&g| v >= g as usize && hit[v - g as usize]);
    }
    (0..=limit).rev().find(|&v| !hit[v as usize]).unwrap_or(0)
}

fn brute_force_strata(d: u32, n: u32, threshold: u32) -> BTreeSet<Vec<u32>> {
    fn go(d: u32, n: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() as u32 == n {
            if cur.iter().sum::<u32>() == d {
                out.push(cur.clone());
            }
            return;
        }
        for v in 1..=d {
            cur.push(v);
            go(d, n, cur, out);
            cur.pop();
        }
    }
    let mut all = Vec::new();
    go(d, n, &mut Vec::new(), &mut all);
    all.into_iter()
        .filter(|a| a.windows(2).all(|w| w[0] >= w[1]))
        .filter(|a| a[0] + a[1] >= threshold)
        .collect()
}

#[test]
fn full_strata_enumeration_matches_brute_force() {
    for n in [4, 5] {
        let listed: BTreeSet<Vec<u32>> = enumerate_obstructed_strata(16, n, 9)
            .unwrap()
            .into_iter()
            .map(|(s, _)| s.entries().to_vec())
            .collect();
        assert_eq!(listed, brute_force_strata(16, n, 9));
    }
}

#[test]
fn every_obstructed_stratum_in_p5_is_excluded() {
    let bound = castelnuovo_bound(16, 5).unwrap();
    for (s, codim) in enumerate_obstructed_strata(16, 5, 9).unwrap() {
        assert!(
            bound <= required_estimate(5, codim).unwrap(),
            "{:?}",
            s.entries()
        );
    }
}

#[test]
fn castelnuovo_is_monotone() {
    for n in 3..=5 {
        for d in n..30 {
            assert!(castelnuovo_bound(d, n).unwrap() <= castelnuovo_bound(d + 1, n).unwrap());
        }
    }
    for d in 5..=30 {
        for n in 3..5 {
            if d > n {
                assert!(castelnuovo_bound(d, n + 1).unwrap() <= castelnuovo_bound(d, n).unwrap());
            }
        }
    }
}

#[test]
fn lambda_ideals_are_saturated_borel_of_degree_sixteen() {
    for s in admissible_sequences() {
        assert_eq!(s.lambda().iter().sum::<u32>(), 16);
        let lifted = s.to_ideal().lift(1);
        let sat = lifted.is_saturated();
        assert!(sat.saturated && sat.borel_fixed, "{s}");
        let quotient: Vec<u64> = (0..=12)
            .map(|m| s.to_ideal().hilbert_count(m, Side::Quotient))
            .collect();
        assert!(
            quotient.windows(2).all(|w| w[0] <= w[1]),
            "{s}: {quotient:?}"
        );
        assert_eq!(quotient[9], 16, "{s}");
        assert!(quotient[9..].iter().all(|&h| h == 16), "{s}");
        let genus: Vec<i64> = (9..=11)
            .map(|m| g_lambda(&s, m).unwrap().g_lambda)
            .collect();
        assert!(genus.iter().all(|&g| g == genus[0]), "{s}: {genus:?}");
    }
}

#[test]
fn two_line_sequence_has_colength_sixteen() {
    let s = LambdaSequence::new(vec![9, 7]).unwrap();
    let ideal = s.to_ideal();
    assert_eq!(
        ideal,
        MonomialIdeal::parse("x0^2, x0*x1^7, x1^9", 3).unwrap()
    );
    assert_eq!(ideal.hilbert_count(20, Side::Quotient), 16);
}

#[test]
fn rewriting_search_is_deterministic() {
    let start = LambdaSequence::new(vec![9, 7]).unwrap().to_ideal();
    let constraints = BezoutConstraints::default().with_quintic_cap();
    let cfg = SearchConfig::default();
    let a = min_forced_rewritings(&start, &constraints, &cfg).unwrap();
    let shuffled = minimalize(3, start.generators().iter().rev().cloned()).unwrap();
    let b = min_forced_rewritings(&shuffled, &constraints, &cfg).unwrap();
    assert_eq!(a, b);
}

#[test]
fn smooth_branch_has_delta_zero() {
    for r in 1..=4 {
        let mut exps = vec![0; r];
        exps[0] = 1;
        assert_eq!(
            delta_invariant(&BranchParam::monomial_curve(&exps), 8).unwrap(),
            0
        );
    }
}

#[test]
fn unibranch_catalog_records_match_semigroup_gaps() {
    for rec in bundled_catalog() {
        if let Some(exps) = rec.param.monomial_exponents() {
            let nonzero: Vec<u32> = exps.into_iter().filter(|&e| e > 0).collect();
            assert_eq!(
                delta_invariant(&rec.param, DEFAULT_TRUNCATION).unwrap(),
                semigroup_delta(&nonzero).unwrap(),
                "{}",
                rec.name
            );
        }
    }
}
