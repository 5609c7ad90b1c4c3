//! Presets, validated Cayley tables, and the coset machinery behind the
//! additive decomposition: conjugacy classes, centralizers, the fixed
//! right-coset representatives, and the coset-rewriting process.

use tatehh::group::{ConjugacyData, FiniteGroup};

fn main() {
    for name in ["Z4", "Z2xZ2", "S3", "D4", "Q8"] {
        let g = FiniteGroup::preset(name).unwrap();
        let cd = ConjugacyData::new(&g);
        println!(
            "{:6} order {:2} abelian {:5} classes {:?}",
            g.name(),
            g.order(),
            g.is_abelian(),
            (0..cd.class_count()).map(|x| cd.class_size(x)).collect::<Vec<_>>()
        );
    }

    // the rewriting process on S3: γ_cur · g = h · γ_next with h in the
    // centralizer, so products transport along coset representatives
    let g = FiniteGroup::preset("S3").unwrap();
    let cd = ConjugacyData::new(&g);
    let x = cd.class_index_of(1); // class of the first transposition
    println!("\ncoset representatives for the class of element 1: {:?}", cd.coset_reps(x));
    let seq = [4u8, 2, 5];
    for i in 0..cd.class_size(x) {
        let (hs, fin) = cd.spadesuit(x, i, &seq);
        let lhs = g.mul(g.prod(&hs), cd.coset_reps(x)[fin]);
        let rhs = g.mul(cd.coset_reps(x)[i], g.prod(&seq));
        println!(
            "spadesuit from index {i}: h = {hs:?}, final index {fin}, product identity {}",
            if lhs == rhs { "holds" } else { "FAILS" }
        );
    }

    // the homology-side reindexing
    let out = cd.clubsuit(x, 3, &[1, 4], &[2]);
    println!("clubsuit with g = 3, gs = [1,4], hs = [2]: {out:?}");
}
