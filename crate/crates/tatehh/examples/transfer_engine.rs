//! The homotopy-transfer engine: tree enumeration, per-tree signs, single
//! tree summands, and the transferred operations on the decomposition.

use tatehh::decomp::DecomposedElement;
use tatehh::group::{ConjugacyData, FiniteGroup};
use tatehh::scalar::FieldSpec;
use tatehh::transfer::{eval_tree, mhat};
use tatehh::trees::{transfer_sign, PlanarTree, SignPolicy};

fn main() {
    let q = FieldSpec::rational();
    let g = FiniteGroup::preset("S3").unwrap();
    let cd = ConjugacyData::new(&g);
    let policy = SignPolicy::default();

    println!("trees with up to five leaves:");
    for n in 1..=5 {
        println!("  n = {n}: {} trees", PlanarTree::enumerate(n).len());
    }

    // per-tree signs at arity 3 for even-degree inputs
    println!("\nsigns at arity 3 on even degrees:");
    for t in PlanarTree::enumerate(3) {
        println!("  {}  sign {}", t.encode(), transfer_sign(&t, &[0, 0, 0], policy));
    }

    // one tree summand versus the whole transferred operation
    let x = cd.class_index_of(1);
    let y = cd.class_index_of(4);
    let a = DecomposedElement::basis_term(&cd, 1, q, x, &[1]);
    let b = DecomposedElement::basis_term(&cd, -1, q, y, &[]);
    let c = DecomposedElement::basis_term(&cd, 1, q, x, &[1]);
    let inputs = [a, b, c];
    let mut total_terms = 0;
    for t in PlanarTree::enumerate(3) {
        let term = eval_tree(&cd, policy, &t, &inputs).unwrap();
        println!(
            "tree {:12} contributes {} terms in degree {}",
            t.encode(),
            term.support_len(),
            term.degree()
        );
        total_terms += term.support_len();
    }
    let m3 = mhat(&cd, policy, &inputs).unwrap();
    println!(
        "transferred ternary operation: {} terms (from {} before cancellation)",
        m3.support_len(),
        total_terms
    );

    // on abelian groups every tree with an internal edge dies with the
    // homotopy, so only corollas survive and arity 4 vanishes
    let z4 = ConjugacyData::new(&FiniteGroup::preset("Z4").unwrap());
    let e = DecomposedElement::basis_term(&z4, 1, q, 1, &[1]);
    let four = mhat(
        &z4,
        policy,
        &[e.clone(), e.clone(), e.clone(), e],
    )
    .unwrap();
    println!("arity-4 operation on Z4 is zero: {}", four.is_zero());
}
