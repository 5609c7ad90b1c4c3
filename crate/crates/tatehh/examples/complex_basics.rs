//! The two-sided complex of a group algebra: sparse elements, the cochain
//! and chain differentials, the trace at the junction, and the twisted
//! total differential squaring to zero.

use tatehh::group::FiniteGroup;
use tatehh::scalar::FieldSpec;
use tatehh::tate::{chain_diff, cochain_diff, dprime, trace_tau, TateElement};

fn main() {
    let q = FieldSpec::rational();
    let g = FiniteGroup::preset("S3").unwrap();

    // degree 0 holds the group algebra; the differential measures
    // commutators, so central elements die
    let x = TateElement::group_algebra_basis(&g, q, 1);
    println!("delta0 of a transposition has {} terms", cochain_diff(&g, &x).support_len());

    // the junction: tau conjugation-averages a chain into the center
    let a = TateElement::basis_term(&g, -1, q, &[1]);
    let t = trace_tau(&g, &a);
    println!("tau(transposition): {:?}", t.terms().collect::<Vec<_>>());

    // chains measure commutators too
    let c = TateElement::basis_term(&g, -2, q, &[1, 4]);
    println!("partial_1(1, 4) support: {}", chain_diff(&g, &c).support_len());

    // the twisted total differential is a differential across all degrees
    let mut checked = 0;
    let mut failures = 0;
    for d in -4..=3 {
        for k in TateElement::basis(&g, d) {
            let e = TateElement::basis_term(&g, d, q, &k);
            if !dprime(&g, &dprime(&g, &e)).is_zero() {
                failures += 1;
            }
            checked += 1;
        }
    }
    println!("d' squared on {checked} basis elements: {failures} failures");
}
