mod common;

use heptic_core::singularity::{bundled_catalog, delta_invariant, BranchParam, DEFAULT_TRUNCATION};

use common::{oracle_delta, q};

#[test]
fn catalog_agrees_with_independent_oracle() {
    for rec in bundled_catalog() {
        let computed = delta_invariant(&rec.param, DEFAULT_TRUNCATION).unwrap();
        assert_eq!(computed, oracle_delta(&rec.param), "{}", rec.name);
    }
}

#[test]
fn oracle_knows_planar_contact() {
    // y = x^k against y = 0 meet with multiplicity k.
    for k in 1..=5 {
        let p = BranchParam::new(
            2,
            vec![
                vec![vec![(1, q(1))], vec![]],
                vec![vec![(1, q(1))], vec![(k, q(1))]],
            ],
        )
        .unwrap();
        assert_eq!(oracle_delta(&p), k as u32);
        assert_eq!(delta_invariant(&p, DEFAULT_TRUNCATION).unwrap(), k as u32);
    }
}

#[test]
fn cusp_meeting_its_tangent() {
    // The cusp (t^2, t^3) meets the line y = 0 with multiplicity 3.
    let p = BranchParam::new(
        2,
        vec![
            vec![vec![(2, q(1))], vec![(3, q(1))]],
            vec![vec![(1, q(1))], vec![]],
        ],
    )
    .unwrap();
    assert_eq!(oracle_delta(&p), 4);
    assert_eq!(delta_invariant(&p, DEFAULT_TRUNCATION).unwrap(), 4);
}
