//! The additive decomposition: subcomplex projection, the inclusion and
//! projection maps, the homotopy, and the five strong-retract identities.

use tatehh::decomp::{
    decomposed_diff, iota_hat, project, rho_hat, s_hat, DecomposedElement,
};
use tatehh::group::{ConjugacyData, FiniteGroup};
use tatehh::scalar::FieldSpec;
use tatehh::tate::{dprime, TateElement};

fn main() {
    let q = FieldSpec::rational();
    let g = FiniteGroup::preset("S3").unwrap();
    let cd = ConjugacyData::new(&g);

    // a mixed degree-0 element splits by conjugacy class
    let mut a = TateElement::zero(0, q);
    for e in g.elements() {
        a.push(&g, &[e], q.from_integer(1 + e as i64));
    }
    for (tag, part) in project(&cd, &a) {
        println!(
            "component at class of {}: {} terms",
            tag.class_rep,
            part.support_len()
        );
    }

    // iota spreads a centralizer cochain over the group along the coset
    // rewrite; rho reads the representative coefficient back
    let x = cd.class_index_of(1);
    let e = DecomposedElement::basis_term(&cd, 1, q, x, &[1]);
    let lifted = iota_hat(&cd, &e);
    println!("\niota of a centralizer 1-cochain has {} terms", lifted.support_len());
    println!("rho(iota(e)) == e: {}", rho_hat(&cd, &lifted) == e);
    println!(
        "iota is a chain map: {}",
        dprime(&g, &lifted) == iota_hat(&cd, &decomposed_diff(&cd, &e))
    );

    // the five identities of a strong deformation retract
    let mut ok = [true; 5];
    for d in -2..=2 {
        for (x, k) in DecomposedElement::basis(&cd, d) {
            let e = DecomposedElement::basis_term(&cd, d, q, x, &k);
            ok[0] &= rho_hat(&cd, &iota_hat(&cd, &e)) == e;
            ok[3] &= s_hat(&cd, &iota_hat(&cd, &e)).is_zero();
        }
        for k in TateElement::basis(&g, d) {
            let f = TateElement::basis_term(&g, d, q, &k);
            let lhs = f
                .add_scaled(&g, &-&q.one(), &iota_hat(&cd, &rho_hat(&cd, &f)))
                .unwrap();
            let rhs = dprime(&g, &s_hat(&cd, &f))
                .add_scaled(&g, &q.one(), &s_hat(&cd, &dprime(&g, &f)))
                .unwrap();
            ok[1] &= lhs == rhs;
            ok[2] &= s_hat(&cd, &s_hat(&cd, &f)).is_zero();
            ok[4] &= rho_hat(&cd, &s_hat(&cd, &f)).is_zero();
        }
    }
    println!("\nretract identities at degrees -2..2:");
    for (name, pass) in [
        "rho iota = id",
        "1 - iota rho = d s + s d",
        "s s = 0",
        "s iota = 0",
        "rho s = 0",
    ]
    .iter()
    .zip(ok)
    {
        println!("  {name}: {}", if pass { "holds" } else { "FAILS" });
    }
}
