//! Abelian groups: the tensor factorization of the transferred structure,
//! the closed-form operations, and the resolution of the printed
//! small-group tables (two entries of which disagree with the oracle).

use tatehh::abelian::{
    ci_map, decomposed_to_tensor, mhat2_closed, mhat3_closed, tensor_structure,
    tensor_to_decomposed, AbelianCochain, TabulatedGroup, TensorElement,
};
use tatehh::decomp::DecomposedElement;
use tatehh::group::{ConjugacyData, FiniteGroup};
use tatehh::scalar::FieldSpec;
use tatehh::transfer::mhat;
use tatehh::trees::SignPolicy;

fn main() {
    let q = FieldSpec::rational();
    let g = FiniteGroup::preset("Z4").unwrap();
    let cd = ConjugacyData::new(&g);

    // the transferred operation factors through the group element
    let a = DecomposedElement::basis_term(&cd, -2, q, 1, &[1]);
    let b = DecomposedElement::basis_term(&cd, -3, q, 2, &[2, 3]);
    let engine = mhat(&cd, SignPolicy::default(), &[a.clone(), b.clone()]).unwrap();
    let ta = decomposed_to_tensor(&cd, &a).pop().unwrap();
    let tb = decomposed_to_tensor(&cd, &b).pop().unwrap();
    let closed = tensor_structure(&g, &[ta, tb]).unwrap();
    println!(
        "engine == factor {} times closed form: {}",
        closed.factor,
        engine == tensor_to_decomposed(&cd, &closed)
    );

    // the tabulated index map: the merge of two exponents, as printed
    println!("\nprinted c_i insertions on Z4:");
    for j in 1..=3u8 {
        println!("  j = {j}: {:?}", ci_map(TabulatedGroup::Z4, 1, &[j]).unwrap());
    }
    println!("(the closed differential also produces the (1,1) insertion at j = 2)");

    // the order-2 group: the printed three-term sum in the chain-chain
    // case against the oracle value
    let z2 = FiniteGroup::preset("Z2").unwrap();
    let a = AbelianCochain::basis_term(&z2, -1, q, &[]);
    let b = AbelianCochain::basis_term(&z2, -2, q, &[1]);
    let prod = mhat2_closed(&z2, &a, &b).unwrap();
    println!(
        "\nZ2 chain-chain product coefficient: {} (printed table says 3)",
        prod.coeff(&[1, 1])
    );

    // the printed ternary entry squares its first scalar; scaling exposes it
    let lam = q.from_integer(2);
    let a = AbelianCochain::basis_term(&z2, -1, q, &[]).scaled(&lam);
    let f = AbelianCochain::basis_term(&z2, 1, q, &[1]);
    let c = AbelianCochain::basis_term(&z2, -1, q, &[]);
    let m3 = mhat3_closed(&z2, &a, &f, &c).unwrap();
    println!(
        "Z2 ternary with a scaled input: {} (printed form would give 4)",
        m3.coeff(&[1])
    );

    // tensor products at degree 0 multiply group elements
    let p = TensorElement {
        factor: 1,
        payload: AbelianCochain::basis_term(&g, 0, q, &[]),
    };
    let p2 = TensorElement {
        factor: 2,
        payload: AbelianCochain::basis_term(&g, 0, q, &[]),
    };
    let prod = tensor_structure(&g, &[p, p2]).unwrap();
    println!("\n(g, 1) * (g^2, 1) = (g^{}, 1)", prod.factor);
}
