//! The Stasheff identities as a falsification instrument: they hold for
//! the shipped signs and break when either the corrected ternary sign or
//! the transfer edge sign is flipped.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use tatehh::ainf::{stasheff_defect, DStar};
use tatehh::decomp::DecomposedElement;
use tatehh::group::{ConjugacyData, FiniteGroup};
use tatehh::products::M3Sign;
use tatehh::scalar::FieldSpec;
use tatehh::tate::TateElement;
use tatehh::transfer::Transferred;
use tatehh::trees::SignPolicy;

fn main() {
    let q = FieldSpec::rational();
    let g = FiniteGroup::preset("S3").unwrap();
    let cd = ConjugacyData::new(&g);
    let mut rng = ChaCha8Rng::seed_from_u64(42);

    // the total complex with the corrected ternary sign
    let good = DStar::new(&g, q);
    let bad = DStar::with_sign(&g, q, M3Sign::Uncorrected);
    let mut good_fails = 0;
    let mut bad_fails = 0;
    for _ in 0..300 {
        let n = rng.gen_range(3..=4);
        let inputs: Vec<TateElement> = (0..n)
            .map(|_| {
                let d = rng.gen_range(-2..=2);
                let basis = TateElement::basis(&g, d);
                TateElement::basis_term(&g, d, q, &basis[rng.gen_range(0..basis.len())])
            })
            .collect();
        if !stasheff_defect(&good, &inputs).is_zero() {
            good_fails += 1;
        }
        if !stasheff_defect(&bad, &inputs).is_zero() {
            bad_fails += 1;
        }
    }
    println!("total complex, 300 sampled identities:");
    println!("  corrected ternary sign:   {good_fails} violations");
    println!("  uncorrected ternary sign: {bad_fails} violations (the control must fire)");

    // the transferred structure with both edge signs
    let good_t = Transferred::new(&cd, q);
    let mut bad_t = Transferred::new(&cd, q);
    bad_t.policy = SignPolicy { edge_sign: 1 };
    let mut good_fails = 0;
    let mut bad_fails = 0;
    for _ in 0..200 {
        let n = rng.gen_range(3..=4);
        let inputs: Vec<DecomposedElement> = (0..n)
            .map(|_| {
                let d = rng.gen_range(-2..=2);
                let basis = DecomposedElement::basis(&cd, d);
                let (x, k) = basis[rng.gen_range(0..basis.len())].clone();
                DecomposedElement::basis_term(&cd, d, q, x, &k)
            })
            .collect();
        if !stasheff_defect(&good_t, &inputs).is_zero() {
            good_fails += 1;
        }
        if !stasheff_defect(&bad_t, &inputs).is_zero() {
            bad_fails += 1;
        }
    }
    println!("transferred structure, 200 sampled identities:");
    println!("  shipped edge sign: {good_fails} violations");
    println!("  flipped edge sign: {bad_fails} violations (the control must fire)");
}
