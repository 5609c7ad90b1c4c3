//! The six-case cup product and its compatibility with the twisted
//! differential: the graded Leibniz rule, checked on random basis pairs.

use tatehh::group::FiniteGroup;
use tatehh::products::cup;
use tatehh::scalar::FieldSpec;
use tatehh::tate::{dprime, TateElement};

fn main() {
    let q = FieldSpec::rational();
    let g = FiniteGroup::preset("S3").unwrap();

    // the six degree cases of the product
    for (da, db) in [(1, 1), (-1, -1), (1, -3), (2, -2), (-3, 1), (-2, 2)] {
        let a = TateElement::basis_term(&g, da, q, &TateElement::basis(&g, da)[1]);
        let b = TateElement::basis_term(&g, db, q, &TateElement::basis(&g, db)[1]);
        let ab = cup(&g, &a, &b);
        println!(
            "deg {da:2} cup deg {db:2} -> deg {:2} with {} terms",
            ab.degree(),
            ab.support_len()
        );
    }

    // Leibniz: d(a∪b) = d(a)∪b + (-1)^{|a|} a∪d(b), exhaustively at
    // degrees -2..2
    let mut fails = 0;
    let mut total = 0;
    for da in -2..=2 {
        for db in -2..=2 {
            for ka in TateElement::basis(&g, da) {
                let a = TateElement::basis_term(&g, da, q, &ka);
                let da_e = dprime(&g, &a);
                for kb in TateElement::basis(&g, db) {
                    let b = TateElement::basis_term(&g, db, q, &kb);
                    let lhs = dprime(&g, &cup(&g, &a, &b));
                    let sign = if da.rem_euclid(2) == 0 { q.one() } else { -&q.one() };
                    let rhs = cup(&g, &da_e, &b)
                        .add_scaled(&g, &sign, &cup(&g, &a, &dprime(&g, &b)))
                        .unwrap();
                    total += 1;
                    if lhs != rhs {
                        fails += 1;
                    }
                }
            }
        }
    }
    println!("Leibniz on {total} basis pairs: {fails} failures");
}
