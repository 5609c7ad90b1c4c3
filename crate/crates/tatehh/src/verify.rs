//! Runnable verification suites: every identity the engine relies on,
//! packaged as deterministic pass/fail reports with first-failure
//! witnesses.
//!
//! The binary-operation theorem on the decomposition is checked against
//! independent transcriptions of its six case formulas (coset rewrites and
//! conjugator searches), not against the engine's own pipeline; the sign
//! suites include deliberate-failure controls, flipping one sign at a time
//! and demanding that some identity break.

use crate::abelian::{
    ci_map, decomposed_to_tensor, di_map, mhat1_closed, mhat2_closed, mhat3_closed,
    tensor_to_decomposed, AbelianCochain, TabulatedGroup, TensorElement,
};
use crate::ainf::{stasheff_defect, DStar};
use crate::decomp::{decomposed_diff, iota_hat, rho_hat, s_hat, DecomposedElement};
use crate::group::{ConjugacyData, Elem, FiniteGroup};
use crate::products::M3Sign;
use crate::scalar::FieldSpec;
use crate::tate::{dprime, TateElement, Word};
use crate::transfer::{mhat, Transferred};
use crate::trees::SignPolicy;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use smallvec::SmallVec;

#[derive(Debug, Clone, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub group: String,
    pub field: String,
    pub window: i32,
    pub seed: u64,
    pub samples: usize,
    pub pass: bool,
    pub checks: Vec<CheckLine>,
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub window: i32,
    pub seed: u64,
    pub samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            window: 3,
            seed: 42,
            samples: 200,
        }
    }
}

impl Report {
    fn new(suite: &str, group: &FiniteGroup, spec: FieldSpec, cfg: &VerifyConfig) -> Self {
        Report {
            suite: suite.to_string(),
            group: group.name().to_string(),
            field: spec.to_string(),
            window: cfg.window,
            seed: cfg.seed,
            samples: cfg.samples,
            pass: true,
            checks: Vec::new(),
        }
    }

    fn add(&mut self, name: &str, witness: Option<String>) {
        self.pass &= witness.is_none();
        self.checks.push(CheckLine {
            name: name.to_string(),
            pass: witness.is_none(),
            witness,
        });
    }

    /// A control line passes when a deliberately broken variant does fail.
    fn add_control(&mut self, name: &str, broke: bool, note: &str) {
        self.pass &= broke;
        self.checks.push(CheckLine {
            name: name.to_string(),
            pass: broke,
            witness: if broke { None } else { Some(note.to_string()) },
        });
    }
}

/// Differentials square to zero on the total complex and on the
/// decomposition, exhaustively over the degree window.
pub fn check_complex(group: &FiniteGroup, spec: FieldSpec, cfg: &VerifyConfig) -> Report {
    let mut report = Report::new("complex", group, spec, cfg);
    let cd = ConjugacyData::new(group);
    let w = cfg.window;

    let witness = (-w..=w).into_par_iter().find_map_first(|d| {
        TateElement::basis(group, d).into_par_iter().find_map_first(|k| {
            let e = TateElement::basis_term(group, d, spec, &k);
            if dprime(group, &dprime(group, &e)).is_zero() {
                None
            } else {
                Some(format!("degree {d}, key {k:?}"))
            }
        })
    });
    report.add("dprime_squared_zero", witness);

    let witness = (-w..=w).into_par_iter().find_map_first(|d| {
        DecomposedElement::basis(&cd, d)
            .into_par_iter()
            .find_map_first(|(x, k)| {
                let e = DecomposedElement::basis_term(&cd, d, spec, x, &k);
                if decomposed_diff(&cd, &decomposed_diff(&cd, &e)).is_zero() {
                    None
                } else {
                    Some(format!("degree {d}, class {x}, key {k:?}"))
                }
            })
    });
    report.add("decomposed_diff_squared_zero", witness);
    report
}

/// The five strong deformation retract identities over the window.
pub fn check_retract(group: &FiniteGroup, spec: FieldSpec, cfg: &VerifyConfig) -> Report {
    let mut report = Report::new("retract", group, spec, cfg);
    let cd = ConjugacyData::new(group);
    let w = cfg.window;
    let one = spec.one();
    let minus_one = -&one;

    let rho_iota = (-w..=w).into_par_iter().find_map_first(|d| {
        DecomposedElement::basis(&cd, d)
            .into_par_iter()
            .find_map_first(|(x, k)| {
                let e = DecomposedElement::basis_term(&cd, d, spec, x, &k);
                if rho_hat(&cd, &iota_hat(&cd, &e)) == e {
                    None
                } else {
                    Some(format!("degree {d}, class {x}, key {k:?}"))
                }
            })
    });
    report.add("rho_iota_identity", rho_iota);

    let homotopy = (-w..=w).into_par_iter().find_map_first(|d| {
        TateElement::basis(group, d).into_par_iter().find_map_first(|k| {
            let f = TateElement::basis_term(group, d, spec, &k);
            let lhs = f
                .add_scaled(group, &minus_one, &iota_hat(&cd, &rho_hat(&cd, &f)))
                .unwrap();
            let rhs = dprime(group, &s_hat(&cd, &f))
                .add_scaled(group, &one, &s_hat(&cd, &dprime(group, &f)))
                .unwrap();
            if lhs == rhs {
                None
            } else {
                Some(format!("degree {d}, key {k:?}"))
            }
        })
    });
    report.add("homotopy_identity", homotopy);

    let s_squared = (-w..=w).into_par_iter().find_map_first(|d| {
        TateElement::basis(group, d).into_par_iter().find_map_first(|k| {
            let f = TateElement::basis_term(group, d, spec, &k);
            if s_hat(&cd, &s_hat(&cd, &f)).is_zero() {
                None
            } else {
                Some(format!("degree {d}, key {k:?}"))
            }
        })
    });
    report.add("s_squared_zero", s_squared);

    let s_iota = (-w..=w).into_par_iter().find_map_first(|d| {
        DecomposedElement::basis(&cd, d)
            .into_par_iter()
            .find_map_first(|(x, k)| {
                let e = DecomposedElement::basis_term(&cd, d, spec, x, &k);
                if s_hat(&cd, &iota_hat(&cd, &e)).is_zero() {
                    None
                } else {
                    Some(format!("degree {d}, class {x}, key {k:?}"))
                }
            })
    });
    report.add("s_iota_zero", s_iota);

    let rho_s = (-w..=w).into_par_iter().find_map_first(|d| {
        TateElement::basis(group, d).into_par_iter().find_map_first(|k| {
            let f = TateElement::basis_term(group, d, spec, &k);
            if rho_hat(&cd, &s_hat(&cd, &f)).is_zero() {
                None
            } else {
                Some(format!("degree {d}, key {k:?}"))
            }
        })
    });
    report.add("rho_s_zero", rho_s);
    report
}

/// Graded Leibniz rule for the twisted differential and the cup product.
pub fn check_leibniz(group: &FiniteGroup, spec: FieldSpec, cfg: &VerifyConfig) -> Report {
    let mut report = Report::new("leibniz", group, spec, cfg);
    let w = cfg.window;
    let alg = DStar::new(group, spec);
    let degree_pairs: Vec<(i32, i32)> = (-w..=w)
        .flat_map(|a| (-w..=w).map(move |b| (a, b)))
        .collect();
    let witness = degree_pairs.into_par_iter().find_map_first(|(da, db)| {
        let basis_a = TateElement::basis(group, da);
        let basis_b = TateElement::basis(group, db);
        for ka in &basis_a {
            let a = TateElement::basis_term(group, da, spec, ka);
            for kb in &basis_b {
                let b = TateElement::basis_term(group, db, spec, kb);
                if !stasheff_defect(&alg, &[a.clone(), b]).is_zero() {
                    return Some(format!("degrees ({da},{db}), keys {ka:?} {kb:?}"));
                }
            }
        }
        None
    });
    report.add("leibniz_dprime_cup", witness);
    report
}

fn sample_tate(
    group: &FiniteGroup,
    spec: FieldSpec,
    window: i32,
    rng: &mut ChaCha8Rng,
) -> TateElement {
    let d = rng.gen_range(-window..=window);
    let basis = TateElement::basis(group, d);
    TateElement::basis_term(group, d, spec, &basis[rng.gen_range(0..basis.len())])
}

fn sample_decomposed(
    cd: &ConjugacyData,
    spec: FieldSpec,
    window: i32,
    rng: &mut ChaCha8Rng,
) -> DecomposedElement {
    let d = rng.gen_range(-window..=window);
    let basis = DecomposedElement::basis(cd, d);
    let (x, k) = basis[rng.gen_range(0..basis.len())].clone();
    DecomposedElement::basis_term(cd, d, spec, x, &k)
}

/// Stasheff relations for the total complex (exhaustive at small arities,
/// sampled at arity 4) and for the transferred structure.
pub fn check_stasheff(group: &FiniteGroup, spec: FieldSpec, cfg: &VerifyConfig) -> Report {
    let mut report = Report::new("stasheff", group, spec, cfg);
    let cd = ConjugacyData::new(group);
    let dstar = DStar::new(group, spec);

    // n = 1, 2 exhaustive over the window
    let w2 = cfg.window.min(2);
    let witness = (-w2..=w2).into_par_iter().find_map_first(|d| {
        TateElement::basis(group, d).into_par_iter().find_map_first(|k| {
            let a = TateElement::basis_term(group, d, spec, &k);
            if stasheff_defect(&dstar, &[a]).is_zero() {
                None
            } else {
                Some(format!("degree {d}, key {k:?}"))
            }
        })
    });
    report.add("dstar_n1", witness);

    let pairs: Vec<(i32, i32)> = (-w2..=w2)
        .flat_map(|a| (-w2..=w2).map(move |b| (a, b)))
        .collect();
    let witness = pairs.par_iter().find_map_first(|&(da, db)| {
        for ka in TateElement::basis(group, da) {
            let a = TateElement::basis_term(group, da, spec, &ka);
            for kb in TateElement::basis(group, db) {
                let b = TateElement::basis_term(group, db, spec, &kb);
                if !stasheff_defect(&dstar, &[a.clone(), b]).is_zero() {
                    return Some(format!("degrees ({da},{db}), keys {ka:?} {kb:?}"));
                }
            }
        }
        None
    });
    report.add("dstar_n2", witness);

    // n = 3 exhaustive at degrees -2..2
    let triples: Vec<(i32, i32, i32)> = (-w2..=w2)
        .flat_map(|a| (-w2..=w2).flat_map(move |b| (-w2..=w2).map(move |c| (a, b, c))))
        .collect();
    let witness = triples.par_iter().find_map_first(|&(da, db, dc)| {
        let basis_a = TateElement::basis(group, da);
        let basis_b = TateElement::basis(group, db);
        let basis_c = TateElement::basis(group, dc);
        for ka in &basis_a {
            let a = TateElement::basis_term(group, da, spec, ka);
            for kb in &basis_b {
                let b = TateElement::basis_term(group, db, spec, kb);
                for kc in &basis_c {
                    let c = TateElement::basis_term(group, dc, spec, kc);
                    if !stasheff_defect(&dstar, &[a.clone(), b.clone(), c]).is_zero() {
                        return Some(format!(
                            "degrees ({da},{db},{dc}), keys {ka:?} {kb:?} {kc:?}"
                        ));
                    }
                }
            }
        }
        None
    });
    report.add("dstar_n3", witness);

    // n = 4 on seeded samples across the window
    let witness = (0..cfg.samples.max(200))
        .into_par_iter()
        .find_map_first(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(trial as u64));
            let inputs: Vec<TateElement> = (0..4)
                .map(|_| sample_tate(group, spec, cfg.window.min(2), &mut rng))
                .collect();
            if stasheff_defect(&dstar, &inputs).is_zero() {
                None
            } else {
                let degs: Vec<i32> = inputs.iter().map(|e| e.degree()).collect();
                Some(format!("trial {trial}, degrees {degs:?}"))
            }
        });
    report.add("dstar_n4_sampled", witness);

    // transferred structure: m̂_1 ∘ m̂_1 = 0 over the window
    let transferred = Transferred::new(&cd, spec);
    let witness = (-cfg.window..=cfg.window).into_par_iter().find_map_first(|d| {
        DecomposedElement::basis(&cd, d)
            .into_par_iter()
            .find_map_first(|(x, k)| {
                let e = DecomposedElement::basis_term(&cd, d, spec, x, &k);
                if stasheff_defect(&transferred, &[e]).is_zero() {
                    None
                } else {
                    Some(format!("degree {d}, class {x}, key {k:?}"))
                }
            })
    });
    report.add("transferred_n1", witness);

    // transferred n = 2 exhaustive at degrees -2..2
    let witness = pairs.par_iter().find_map_first(|&(da, db)| {
        for (xa, ka) in DecomposedElement::basis(&cd, da) {
            let a = DecomposedElement::basis_term(&cd, da, spec, xa, &ka);
            for (xb, kb) in DecomposedElement::basis(&cd, db) {
                let b = DecomposedElement::basis_term(&cd, db, spec, xb, &kb);
                if !stasheff_defect(&transferred, &[a.clone(), b]).is_zero() {
                    return Some(format!(
                        "degrees ({da},{db}), terms ({xa},{ka:?}) ({xb},{kb:?})"
                    ));
                }
            }
        }
        None
    });
    report.add("transferred_n2", witness);

    // transferred n = 3: exhaustive on the junction window -1..1, then on
    // the asymmetric windows [-2,1] and [-1,2] to reach longer tuples
    let mut windows: Vec<Vec<i32>> = vec![(-1..=1).collect()];
    if cfg.window >= 2 {
        windows.push((-2..=1).collect());
        windows.push((-1..=2).collect());
    }
    let mut t3_witness = None;
    for degrees in &windows {
        let triples: Vec<(i32, i32, i32)> = degrees
            .iter()
            .flat_map(|&a| {
                degrees
                    .iter()
                    .flat_map(move |&b| degrees.iter().map(move |&c| (a, b, c)))
            })
            .collect();
        let witness = triples.par_iter().find_map_first(|&(da, db, dc)| {
            let basis_a = DecomposedElement::basis(&cd, da);
            let basis_b = DecomposedElement::basis(&cd, db);
            let basis_c = DecomposedElement::basis(&cd, dc);
            for (xa, ka) in &basis_a {
                let a = DecomposedElement::basis_term(&cd, da, spec, *xa, ka);
                for (xb, kb) in &basis_b {
                    let b = DecomposedElement::basis_term(&cd, db, spec, *xb, kb);
                    for (xc, kc) in &basis_c {
                        let c = DecomposedElement::basis_term(&cd, dc, spec, *xc, kc);
                        if !stasheff_defect(&transferred, &[a.clone(), b.clone(), c]).is_zero() {
                            return Some(format!(
                                "degrees ({da},{db},{dc}), terms ({xa},{ka:?}) ({xb},{kb:?}) ({xc},{kc:?})"
                            ));
                        }
                    }
                }
            }
            None
        });
        if witness.is_some() {
            t3_witness = witness;
            break;
        }
    }
    report.add("transferred_n3", t3_witness);

    // transferred n = 4 on seeded samples
    let samples = cfg.samples.max(100);
    let witness = (0..samples).into_par_iter().find_map_first(|trial| {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(0x4000 + trial as u64));
        let inputs: Vec<DecomposedElement> = (0..4)
            .map(|_| sample_decomposed(&cd, spec, cfg.window.min(2), &mut rng))
            .collect();
        if stasheff_defect(&transferred, &inputs).is_zero() {
            None
        } else {
            let degs: Vec<i32> = inputs.iter().map(|e| e.degree()).collect();
            Some(format!("trial {trial}, degrees {degs:?}"))
        }
    });
    report.add("transferred_n4_sampled", witness);
    report
}

/// Deliberate-failure controls: the uncorrected ternary sign and the
/// flipped transfer edge sign must each break at least one identity.
///
/// Sign flips are invisible in characteristic 2, and trees with internal
/// edges vanish on abelian groups, so the controls are evaluated over the
/// rationals and, when the given group cannot expose the edge sign, on a
/// nonabelian stand-in; the report carries a context line saying so.
pub fn check_sign_regression(group: &FiniteGroup, spec: FieldSpec, cfg: &VerifyConfig) -> Report {
    let mut report = Report::new("signs", group, spec, cfg);
    let rational = FieldSpec::rational();
    let stand_in;
    let control_group = if group.is_abelian() {
        stand_in = FiniteGroup::preset("S3").expect("preset");
        &stand_in
    } else {
        group
    };
    if spec.characteristic != 0 || control_group.name() != group.name() {
        report.checks.push(CheckLine {
            name: "control_context".into(),
            pass: true,
            witness: Some(format!(
                "controls evaluated over Q on {} (sign flips are invisible in characteristic 2; edge-bearing trees vanish on abelian groups)",
                control_group.name()
            )),
        });
    }
    let group = control_group;
    let spec = rational;
    let cd = ConjugacyData::new(group);

    // uncorrected m3 sign: scan n=3 triples until a Stasheff violation shows
    let broken = DStar::with_sign(group, spec, M3Sign::Uncorrected);
    let mut found = false;
    'outer: for da in [-1i32, -2, 1] {
        for db in [1i32, 2] {
            for dc in [-1i32, -2] {
                for ka in TateElement::basis(group, da) {
                    let a = TateElement::basis_term(group, da, spec, &ka);
                    for kb in TateElement::basis(group, db) {
                        let b = TateElement::basis_term(group, db, spec, &kb);
                        for kc in TateElement::basis(group, dc) {
                            let c = TateElement::basis_term(group, dc, spec, &kc);
                            if !stasheff_defect(&broken, &[a.clone(), b.clone(), c]).is_zero() {
                                found = true;
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
    }
    report.add_control(
        "uncorrected_m3_sign_breaks_stasheff",
        found,
        "no Stasheff violation found with the uncorrected sign",
    );

    // flipped edge sign in the transfer
    let mut flipped = Transferred::new(&cd, spec);
    flipped.policy = SignPolicy { edge_sign: 1 };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut found = false;
    for _ in 0..400 {
        let n = if rng.gen_bool(0.5) { 3 } else { 4 };
        let inputs: Vec<DecomposedElement> = (0..n)
            .map(|_| sample_decomposed(&cd, spec, 2, &mut rng))
            .collect();
        if !stasheff_defect(&flipped, &inputs).is_zero() {
            found = true;
            break;
        }
    }
    report.add_control(
        "flipped_edge_sign_breaks_stasheff",
        found,
        "no Stasheff violation found with the flipped edge sign",
    );
    report
}

// ---------------------------------------------------------------------------
// Independent six-case oracles for the binary operation on the decomposition.
// ---------------------------------------------------------------------------

/// All conjugators Φ with Φ^{-1} z Φ = c.
fn conjugators(cd: &ConjugacyData, z: usize, c: Elem) -> Vec<Elem> {
    let g = cd.group();
    let ze = cd.reps()[z];
    g.elements()
        .filter(|&phi| g.conjugate(ze, phi) == c)
        .collect()
}

/// Coset index of a conjugator, asserting it does not depend on the choice.
fn conjugator_coset(cd: &ConjugacyData, z: usize, c: Elem) -> Option<usize> {
    let phis = conjugators(cd, z, c);
    let first = *phis.first()?;
    let idx = cd.coset_of(z, first).0;
    debug_assert!(phis.iter().all(|&p| cd.coset_of(z, p).0 == idx));
    Some(idx)
}

/// Enumerates the `♠`-preimages of `hs` starting at index `i`, together
/// with the preimage tuple; mirrors the engine-side fiber walk but lives
/// here so the oracle does not share that code path.
fn fibers(cd: &ConjugacyData, x: usize, i: usize, hs: &[Elem], out: &mut Vec<Vec<Elem>>) {
    fn rec(
        cd: &ConjugacyData,
        x: usize,
        hs: &[Elem],
        t: usize,
        cur: usize,
        tuple: &mut Vec<Elem>,
        out: &mut Vec<Vec<Elem>>,
    ) {
        if t == hs.len() {
            out.push(tuple.clone());
            return;
        }
        if !cd.in_centralizer(x, hs[t]) {
            return;
        }
        let g = cd.group();
        let lead = g.mul(g.inv(cd.coset_reps(x)[cur]), hs[t]);
        for next in 0..cd.class_size(x) {
            let gt = g.mul(lead, cd.coset_reps(x)[next]);
            if gt == g.identity() {
                continue;
            }
            tuple.push(gt);
            rec(cd, x, hs, t + 1, next, tuple, out);
            tuple.pop();
        }
    }
    let mut tuple = Vec::with_capacity(hs.len());
    rec(cd, x, hs, 0, i, &mut tuple, out);
}

/// The six-case formula for the transferred binary operation, transcribed
/// independently of the engine. Inputs are single decomposed basis terms.
pub fn m2_oracle(
    cd: &ConjugacyData,
    a: &DecomposedElement,
    b: &DecomposedElement,
) -> DecomposedElement {
    let g = cd.group();
    let spec = a.spec();
    let (n, m) = (a.degree(), b.degree());
    let mut out = DecomposedElement::zero(n + m, spec);
    for ((x, ka), ca) in a.terms() {
        for ((y, kb), cb) in b.terms() {
            let coeff = ca * cb;
            let (x, y) = (*x, *y);
            if n >= 0 && m >= 0 {
                // case 1: Σ_{(i,j) ∈ I_z} over ♠-preimages
                for i in 0..cd.class_size(x) {
                    let mut pre = Vec::new();
                    fibers(cd, x, i, ka, &mut pre);
                    for prefix in &pre {
                        let w = g.prod(prefix);
                        let xi = cd.class(x)[i];
                        for j in 0..cd.class_size(y) {
                            let mut suf = Vec::new();
                            fibers(cd, y, j, kb, &mut suf);
                            for suffix in &suf {
                                let yj = cd.class(y)[j];
                                let c = g.mul(g.mul(xi, w), g.mul(yj, g.inv(w)));
                                let z = cd.class_index_of(c);
                                if cd.reps()[z] != c {
                                    continue;
                                }
                                if !prefix.iter().chain(suffix).all(|&h| cd.in_centralizer(z, h))
                                {
                                    continue;
                                }
                                let mut key: Word = SmallVec::new();
                                key.extend_from_slice(prefix);
                                key.extend_from_slice(suffix);
                                out.push(cd, z, &key, coeff.clone());
                            }
                        }
                    }
                }
            } else if n <= -1 && m <= -1 {
                // case 2: coset-rewrite of the ♣ sequence at the conjugator index
                let xe = cd.reps()[x];
                let ye = cd.reps()[y];
                let w_gs = g.prod(ka);
                let w_hs = g.prod(kb);
                for gg in g.elements() {
                    let mid = g.mul(g.mul(g.inv(gg), g.inv(w_gs)), xe);
                    if mid == g.identity() {
                        continue;
                    }
                    let c = g.prod(&[w_hs, mid, w_gs, gg, g.inv(w_hs), ye]);
                    let z = cd.class_index_of(c);
                    let Some(ig) = conjugator_coset(cd, z, c) else { continue };
                    let mut seq: Vec<Elem> = Vec::with_capacity(ka.len() + kb.len() + 1);
                    seq.extend_from_slice(kb);
                    seq.push(mid);
                    seq.extend_from_slice(ka);
                    let (ks, _) = cd.spadesuit(z, ig, &seq);
                    out.push(cd, z, &ks, coeff.clone());
                }
            } else if n >= 0 && m <= -1 {
                let nn = n as usize;
                let t = kb.len();
                if n + m <= -1 {
                    // case 3
                    let ye = cd.reps()[y];
                    for i in 0..cd.class_size(x) {
                        let (ks, _) = cd.spadesuit(x, i, &kb[t - nn..]);
                        if ks != &ka[..] {
                            continue;
                        }
                        let xi = cd.class(x)[i];
                        let head = g.prod(&kb[..t - nn]);
                        let c = g.prod(&[head, xi, g.inv(head), ye]);
                        let z = cd.class_index_of(c);
                        let Some(ji) = conjugator_coset(cd, z, c) else { continue };
                        let (hs, _) = cd.spadesuit(z, ji, &kb[..t - nn]);
                        out.push(cd, z, &hs, coeff.clone());
                    }
                } else {
                    // case 4
                    let ye = cd.reps()[y];
                    let keep = nn - t - 1;
                    for i in 0..cd.class_size(x) {
                        let mut pre = Vec::new();
                        fibers(cd, x, i, ka, &mut pre);
                        let xi = cd.class(x)[i];
                        for p in &pre {
                            if &p[keep + 1..] != &kb[..] {
                                continue;
                            }
                            let gg = g.inv(p[keep]);
                            let w = g.prod(&p[..keep]);
                            let c = g.prod(&[xi, w, g.inv(gg), ye, gg, g.inv(w)]);
                            let z = cd.class_index_of(c);
                            if cd.reps()[z] != c {
                                continue;
                            }
                            if !p[..keep].iter().all(|&h| cd.in_centralizer(z, h)) {
                                continue;
                            }
                            out.push(cd, z, &p[..keep], coeff.clone());
                        }
                    }
                }
            } else {
                let s = ka.len();
                let mm = m as usize;
                if n + m <= -1 {
                    // case 5
                    let xe = cd.reps()[x];
                    for j in 0..cd.class_size(y) {
                        let (ks, _) = cd.spadesuit(y, j, &ka[..mm]);
                        if ks != &kb[..] {
                            continue;
                        }
                        let yj = cd.class(y)[j];
                        let c = g.mul(xe, yj);
                        let z = cd.class_index_of(c);
                        let phis = conjugators(cd, z, c);
                        let Some(&phi) = phis.first() else { continue };
                        let anchor = g.mul(phi, g.prod(&ka[..mm]));
                        let ij = cd.coset_of(z, anchor).0;
                        debug_assert!(phis
                            .iter()
                            .all(|&p| cd.coset_of(z, g.mul(p, g.prod(&ka[..mm]))).0 == ij));
                        let (hs, _) = cd.spadesuit(z, ij, &ka[mm..]);
                        out.push(cd, z, &hs, coeff.clone());
                    }
                } else {
                    // case 6
                    let xe = cd.reps()[x];
                    for j in 0..cd.class_size(y) {
                        let mut pre = Vec::new();
                        fibers(cd, y, j, kb, &mut pre);
                        let yj = cd.class(y)[j];
                        for p in &pre {
                            if &p[..s] != &ka[..] {
                                continue;
                            }
                            let gg = g.inv(p[s]);
                            let w = g.prod(&ka[..]);
                            let c = g.prod(&[gg, g.inv(w), xe, yj, w, g.inv(gg)]);
                            let z = cd.class_index_of(c);
                            if cd.reps()[z] != c {
                                continue;
                            }
                            if !p[s + 1..].iter().all(|&h| cd.in_centralizer(z, h)) {
                                continue;
                            }
                            out.push(cd, z, &p[s + 1..], coeff.clone());
                        }
                    }
                }
            }
        }
    }
    out
}

/// Which of the six cases a degree pair lands in; used to report per-case
/// agreement lines.
pub fn m2_case(n: i32, m: i32) -> usize {
    if n >= 0 && m >= 0 {
        1
    } else if n <= -1 && m <= -1 {
        2
    } else if n >= 0 && n + m <= -1 {
        3
    } else if n >= 0 {
        4
    } else if n + m <= -1 {
        5
    } else {
        6
    }
}

/// The six-case theorem: the independent oracle agrees with the engine on
/// exhaustive basis pairs across the window, split per case.
pub fn check_m2_theorem(group: &FiniteGroup, spec: FieldSpec, cfg: &VerifyConfig) -> Report {
    let mut report = Report::new("m2", group, spec, cfg);
    let cd = ConjugacyData::new(group);
    let policy = SignPolicy::default();
    let w = cfg.window;
    for case in 1..=6usize {
        let pairs: Vec<(i32, i32)> = (-w..=w)
            .flat_map(|a| (-w..=w).map(move |b| (a, b)))
            .filter(|&(a, b)| m2_case(a, b) == case)
            .collect();
        let witness = pairs.par_iter().find_map_first(|&(da, db)| {
            let basis_a = DecomposedElement::basis(&cd, da);
            let basis_b = DecomposedElement::basis(&cd, db);
            for (xa, ka) in &basis_a {
                let a = DecomposedElement::basis_term(&cd, da, spec, *xa, ka);
                for (xb, kb) in &basis_b {
                    let b = DecomposedElement::basis_term(&cd, db, spec, *xb, kb);
                    let engine = mhat(&cd, policy, &[a.clone(), b.clone()]).unwrap();
                    let oracle = m2_oracle(&cd, &a, &b);
                    if engine != oracle {
                        return Some(format!(
                            "degrees ({da},{db}), terms ({xa},{ka:?}) ({xb},{kb:?})"
                        ));
                    }
                }
            }
            None
        });
        report.add(&format!("case{case}_oracle_matches_engine"), witness);
    }
    // the conjugator searches are choice-independent: every conjugator of a
    // class member lands in the same coset
    let witness = (0..cd.class_count()).into_par_iter().find_map_first(|z| {
        for c in cd.class(z) {
            let phis = conjugators(&cd, z, *c);
            let idx = cd.coset_of(z, phis[0]).0;
            if phis.len() > 1 && phis.iter().any(|&p| cd.coset_of(z, p).0 != idx) {
                return Some(format!("class {z}, member {c}"));
            }
        }
        None
    });
    report.add("conjugator_choice_independent", witness);
    report
}

/// Abelian collapse: vanishing homotopy, vanishing quaternary operation,
/// closed forms against the engine, the trace value, and the printed-table
/// fixtures with their known discrepancies logged.
pub fn check_abelian(group: &FiniteGroup, spec: FieldSpec, cfg: &VerifyConfig) -> Report {
    let mut report = Report::new("abelian", group, spec, cfg);
    if !group.is_abelian() {
        report.add("group_is_abelian", Some("not abelian".into()));
        return report;
    }
    let cd = ConjugacyData::new(group);
    let w = cfg.window;
    let policy = SignPolicy::default();

    // ŝ ≡ 0
    let witness = (-w..=w).into_par_iter().find_map_first(|d| {
        TateElement::basis(group, d).into_par_iter().find_map_first(|k| {
            let f = TateElement::basis_term(group, d, spec, &k);
            if s_hat(&cd, &f).is_zero() {
                None
            } else {
                Some(format!("degree {d}, key {k:?}"))
            }
        })
    });
    report.add("s_hat_vanishes", witness);

    // τ(1) = |G|
    let tau = decomposed_diff(
        &cd,
        &DecomposedElement::basis_term(&cd, -1, spec, 0, &[]),
    );
    let expected = spec.from_integer(group.order() as i64);
    let tau_ok = tau.coeff(0, &[]) == expected;
    report.add(
        "tau_of_identity_is_group_order",
        if tau_ok {
            None
        } else {
            Some(format!("got {}", tau.coeff(0, &[])))
        },
    );

    // m̂_4 ≡ 0 on sampled windows
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut witness = None;
    for _ in 0..cfg.samples.min(50) {
        let inputs: Vec<DecomposedElement> = (0..4)
            .map(|_| sample_decomposed(&cd, spec, w.min(2), &mut rng))
            .collect();
        let out = mhat(&cd, policy, &inputs).unwrap();
        if !out.is_zero() {
            let degs: Vec<i32> = inputs.iter().map(|e| e.degree()).collect();
            witness = Some(format!("degrees {degs:?}"));
            break;
        }
    }
    report.add("mhat4_vanishes", witness);

    // closed forms match the engine
    let witness = (-w..=w).into_par_iter().find_map_first(|d| {
        DecomposedElement::basis(&cd, d)
            .into_par_iter()
            .find_map_first(|(x, k)| {
                let e = DecomposedElement::basis_term(&cd, d, spec, x, &k);
                let engine = decomposed_diff(&cd, &e);
                let parts = decomposed_to_tensor(&cd, &e);
                let mut closed = DecomposedElement::zero(d + 1, spec);
                for t in parts {
                    let mt = TensorElement {
                        factor: t.factor,
                        payload: mhat1_closed(group, &t.payload).unwrap(),
                    };
                    closed = closed.add_scaled(&cd, &spec.one(), &tensor_to_decomposed(&cd, &mt));
                }
                if engine == closed {
                    None
                } else {
                    Some(format!("m1 at degree {d}, class {x}, key {k:?}"))
                }
            })
    });
    report.add("closed_m1_matches_engine", witness);

    let pairs: Vec<(i32, i32)> = (-w..=w)
        .flat_map(|a| (-w..=w).map(move |b| (a, b)))
        .collect();
    let witness = pairs.par_iter().find_map_first(|&(da, db)| {
        for (xa, ka) in DecomposedElement::basis(&cd, da) {
            let a = DecomposedElement::basis_term(&cd, da, spec, xa, &ka);
            let ta = decomposed_to_tensor(&cd, &a).pop().unwrap();
            for (xb, kb) in DecomposedElement::basis(&cd, db) {
                let b = DecomposedElement::basis_term(&cd, db, spec, xb, &kb);
                let tb = decomposed_to_tensor(&cd, &b).pop().unwrap();
                let engine = mhat(&cd, policy, &[a.clone(), b.clone()]).unwrap();
                let closed = tensor_to_decomposed(
                    &cd,
                    &TensorElement {
                        factor: group.mul(ta.factor, tb.factor),
                        payload: mhat2_closed(group, &ta.payload, &tb.payload).unwrap(),
                    },
                );
                if engine != closed {
                    return Some(format!(
                        "m2 at degrees ({da},{db}), terms ({xa},{ka:?}) ({xb},{kb:?})"
                    ));
                }
            }
        }
        None
    });
    report.add("closed_m2_matches_engine", witness);

    // m3: exhaustive over a reduced window (the operation is multilinear,
    // basis terms suffice)
    let w3 = w.min(2);
    let triples: Vec<(i32, i32, i32)> = (-w3..=w3)
        .flat_map(|a| (-w3..=w3).flat_map(move |b| (-w3..=w3).map(move |c| (a, b, c))))
        .collect();
    let witness = triples.par_iter().find_map_first(|&(da, db, dc)| {
        for (xa, ka) in DecomposedElement::basis(&cd, da) {
            let a = DecomposedElement::basis_term(&cd, da, spec, xa, &ka);
            let ta = decomposed_to_tensor(&cd, &a).pop().unwrap();
            for (xb, kb) in DecomposedElement::basis(&cd, db) {
                let b = DecomposedElement::basis_term(&cd, db, spec, xb, &kb);
                let tb = decomposed_to_tensor(&cd, &b).pop().unwrap();
                for (xc, kc) in DecomposedElement::basis(&cd, dc) {
                    let c = DecomposedElement::basis_term(&cd, dc, spec, xc, &kc);
                    let tc = decomposed_to_tensor(&cd, &c).pop().unwrap();
                    let engine = mhat(&cd, policy, &[a.clone(), b.clone(), c.clone()]).unwrap();
                    let closed = tensor_to_decomposed(
                        &cd,
                        &TensorElement {
                            factor: group.prod(&[ta.factor, tb.factor, tc.factor]),
                            payload: mhat3_closed(group, &ta.payload, &tb.payload, &tc.payload)
                                .unwrap(),
                        },
                    );
                    if engine != closed {
                        return Some(format!("m3 at degrees ({da},{db},{dc})"));
                    }
                }
            }
        }
        None
    });
    report.add("closed_m3_matches_engine", witness);

    // char-2 collapse of the differential for the order-2 group
    if group.order() == 2 && spec.characteristic == 2 {
        let witness = (-w..=w).into_par_iter().find_map_first(|d| {
            DecomposedElement::basis(&cd, d)
                .into_par_iter()
                .find_map_first(|(x, k)| {
                    let e = DecomposedElement::basis_term(&cd, d, spec, x, &k);
                    if decomposed_diff(&cd, &e).is_zero() {
                        None
                    } else {
                        Some(format!("degree {d}"))
                    }
                })
        });
        report.add("mhat1_vanishes_in_char2", witness);
    }

    // printed-table fixtures
    fixtures(group, spec, cfg, &mut report);
    report
}

/// Printed-table fixtures for the three tabulated groups. Expected
/// discrepancies are asserted and logged; everything else must agree with
/// the closed forms.
fn fixtures(group: &FiniteGroup, spec: FieldSpec, _cfg: &VerifyConfig, report: &mut Report) {
    match group.name() {
        "Z2" => {
            // printed case 2 gives coefficient 3 where the closed form and
            // the engine give 1 (a literal carry-over of a three-term sum
            // from the order-4 table); in characteristic 2 both readings
            // coincide, so the discrepancy is only visible over the
            // rationals
            let a = AbelianCochain::basis_term(group, -1, spec, &[]);
            let b = AbelianCochain::basis_term(group, -2, spec, &[1]);
            let closed = mhat2_closed(group, &a, &b).unwrap();
            let oracle_coeff = closed.coeff(&[1, 1]);
            let printed_coeff = spec.from_integer(3);
            if spec.characteristic == 0 {
                let resolved = oracle_coeff == spec.one() && printed_coeff != oracle_coeff;
                report.add_control(
                    "table_discrepancy_case2_coefficient",
                    resolved,
                    "expected the printed 3-term sum to disagree with the oracle value 1",
                );
            } else {
                report.add(
                    "table_case2_coincides_in_char2",
                    if printed_coeff == oracle_coeff {
                        None
                    } else {
                        Some(format!("printed {printed_coeff} vs oracle {oracle_coeff}"))
                    },
                );
            }

            if spec.characteristic != 0 {
                return;
            }
            // printed ternary case (2) carries an extra scalar factor of the
            // first input; visible once the inputs are scaled
            let lam = spec.from_integer(2);
            let mu = spec.from_integer(3);
            let nu = spec.from_integer(5);
            let a = AbelianCochain::basis_term(group, -1, spec, &[]).scaled(&lam);
            let f = AbelianCochain::basis_term(group, 1, spec, &[1]).scaled(&mu);
            let b = AbelianCochain::basis_term(group, -1, spec, &[]).scaled(&nu);
            let closed = mhat3_closed(group, &a, &f, &b).unwrap();
            // oracle coefficient is λμν times a sign; the printed table
            // would square the first factor
            let got = closed.coeff(&[1]);
            let lmn = &(&lam * &mu) * &nu;
            let oracle_magnitude = got == lmn || got == -&lmn;
            let printed_value = &lam * &lmn;
            let resolved = oracle_magnitude && printed_value != got && -&printed_value != got;
            report.add_control(
                "table_discrepancy_m3_extra_factor",
                resolved,
                "expected the printed extra scalar factor to disagree with the oracle",
            );
        }
        "Z4" => {
            // printed case 2 sums the middle slot over the three nonidentity
            // elements; the closed form sums over the group and drops the
            // identity term. These agree; assert it.
            let a = AbelianCochain::basis_term(group, -2, spec, &[1]);
            let b = AbelianCochain::basis_term(group, -3, spec, &[2, 3]);
            let closed = mhat2_closed(group, &a, &b).unwrap();
            let mut printed = AbelianCochain::zero(-5, spec);
            for mid in 1..=3u8 {
                printed.push(group, &[2, 3, mid, 1], spec.one());
            }
            report.add(
                "table_case2_middle_slot_reconciled",
                if closed == printed {
                    None
                } else {
                    Some("printed middle-slot sum differs from the closed form".into())
                },
            );

            // printed cochain differential via the index map c_i: the j=2
            // branch lists only the (3,3) insertion and misses (1,1); the
            // discrepancy is confirmed against the closed form.
            let mismatch = printed_delta_mismatch(group, spec, TabulatedGroup::Z4);
            report.add_control(
                "table_discrepancy_ci_missing_insertion",
                mismatch,
                "expected the printed c_i map to disagree with the closed differential",
            );

            // chain differential as printed matches
            let chain_ok = printed_partial_matches(group, spec, TabulatedGroup::Z4);
            report.add(
                "table_chain_differential_matches",
                if chain_ok {
                    None
                } else {
                    Some("printed chain differential disagrees".into())
                },
            );

            // ternary special case at m = 1
            report.add(
                "table_m3_special_case_matches",
                m3_special_case_z4(group, spec),
            );
        }
        "Z2xZ2" => {
            let mismatch = printed_delta_mismatch(group, spec, TabulatedGroup::Z2xZ2);
            report.add(
                "table_ci_differential_matches",
                if !mismatch {
                    None
                } else {
                    Some("printed c_i map disagrees with the closed differential".into())
                },
            );
            let chain_ok = printed_partial_matches(group, spec, TabulatedGroup::Z2xZ2);
            report.add(
                "table_di_differential_matches",
                if chain_ok {
                    None
                } else {
                    Some("printed d_i map disagrees".into())
                },
            );
        }
        _ => {}
    }
}

/// Compares the printed cochain differential (first/last insertions plus
/// the `c_i` middle terms) with the closed form on all keys of length <= 3.
/// Returns true when any mismatch exists.
fn printed_delta_mismatch(group: &FiniteGroup, spec: FieldSpec, kind: TabulatedGroup) -> bool {
    for n in 1..=3usize {
        for key in AbelianCochain::basis(group, n as i32) {
            let e = AbelianCochain::basis_term(group, n as i32, spec, &key);
            let closed = mhat1_closed(group, &e).unwrap();
            // printed: Σ_{j0} λ^{j0,J} + Σ_i (-1)^i λ^{c_i(J)} + (-1)^{n+1} Σ λ^{J,j}
            let mut printed = AbelianCochain::zero(n as i32 + 1, spec);
            for j0 in group.nonidentity() {
                let mut k: Word = SmallVec::new();
                k.push(j0);
                k.extend_from_slice(&key);
                printed.push(group, &k, spec.one());
            }
            let tuple: Vec<u8> = key.to_vec();
            for i in 1..=n {
                for ins in ci_map(kind, i, &tuple).unwrap() {
                    let k: Word = SmallVec::from_iter(ins.iter().map(|&v| v as Elem));
                    let c = if i % 2 == 0 { spec.one() } else { -&spec.one() };
                    printed.push(group, &k, c);
                }
            }
            for jn in group.nonidentity() {
                let mut k: Word = SmallVec::new();
                k.extend_from_slice(&key);
                k.push(jn);
                let c = if (n + 1) % 2 == 0 { spec.one() } else { -&spec.one() };
                printed.push(group, &k, c);
            }
            if printed != closed {
                return true;
            }
        }
    }
    false
}

/// Compares the printed chain differential with the closed form; returns
/// true when everything matches.
fn printed_partial_matches(group: &FiniteGroup, spec: FieldSpec, kind: TabulatedGroup) -> bool {
    for s in 2..=3usize {
        let degree = -(s as i32) - 1;
        for key in AbelianCochain::basis(group, degree) {
            let e = AbelianCochain::basis_term(group, degree, spec, &key);
            let closed = mhat1_closed(group, &e).unwrap();
            // printed unsigned ∂, then the (-1)^{m+1} twist of the total
            // complex applied uniformly
            let mut printed = AbelianCochain::zero(degree + 1, spec);
            printed.push(group, &key[1..], spec.one());
            let tuple: Vec<u8> = key.to_vec();
            for i in 1..s {
                let merged = match kind {
                    TabulatedGroup::Z4 => {
                        let v = (tuple[i - 1] + tuple[i]) % 4;
                        if v == 0 {
                            None
                        } else {
                            let mut out = tuple.clone();
                            out.remove(i);
                            out[i - 1] = v;
                            Some(out)
                        }
                    }
                    TabulatedGroup::Z2xZ2 => di_map(i, &tuple).unwrap(),
                };
                if let Some(t) = merged {
                    let k: Word = SmallVec::from_iter(t.iter().map(|&v| v as Elem));
                    let c = if i % 2 == 0 { spec.one() } else { -&spec.one() };
                    printed.push(group, &k, c);
                }
            }
            let c = if s % 2 == 0 { spec.one() } else { -&spec.one() };
            printed.push(group, &key[..s - 1], c);
            let twist = (degree + 1).rem_euclid(2) == 0;
            let printed = if twist { printed } else { printed.scaled(&-&spec.one()) };
            if printed != closed {
                return false;
            }
        }
    }
    true
}

/// The printed order-4 ternary special case at cochain length one:
/// `m3'(g_{j_1..j_r}, λ^{k_1}, g_{l_1..l_s}) = (-1)^{r+1} λ g_{l.., 4-k_1, j..}`.
fn m3_special_case_z4(group: &FiniteGroup, spec: FieldSpec) -> Option<String> {
    for r in 0..=2usize {
        for s in 0..=2usize {
            for ka in AbelianCochain::basis(group, -(r as i32) - 1) {
                for kb in AbelianCochain::basis(group, -(s as i32) - 1) {
                    for k1 in 1..=3u8 {
                        let a = AbelianCochain::basis_term(group, -(r as i32) - 1, spec, &ka);
                        let f = AbelianCochain::basis_term(group, 1, spec, &[k1]);
                        let b = AbelianCochain::basis_term(group, -(s as i32) - 1, spec, &kb);
                        let closed = mhat3_closed(group, &a, &f, &b).unwrap();
                        let mut printed =
                            AbelianCochain::zero(closed.degree(), spec);
                        let mut key: Word = SmallVec::new();
                        key.extend_from_slice(&kb);
                        key.push(4 - k1);
                        key.extend_from_slice(&ka);
                        let c = if (r + 1) % 2 == 0 { spec.one() } else { -&spec.one() };
                        printed.push(group, &key, c);
                        if closed != printed {
                            return Some(format!(
                                "r={r} s={s} k1={k1}: printed {printed:?} vs closed {closed:?}"
                            ));
                        }
                    }
                }
            }
        }
    }
    None
}

/// Runs every suite and concatenates the reports.
pub fn check_all(group: &FiniteGroup, spec: FieldSpec, cfg: &VerifyConfig) -> Vec<Report> {
    let mut out = vec![
        check_complex(group, spec, cfg),
        check_retract(group, spec, cfg),
        check_leibniz(group, spec, cfg),
        check_stasheff(group, spec, cfg),
        check_m2_theorem(group, spec, cfg),
        check_sign_regression(group, spec, cfg),
    ];
    if group.is_abelian() {
        out.push(check_abelian(group, spec, cfg));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rational()
    }

    fn small_cfg() -> VerifyConfig {
        VerifyConfig {
            window: 2,
            seed: 42,
            samples: 40,
        }
    }

    #[test]
    fn complex_suite_passes_z4_and_s3() {
        for name in ["Z4", "S3"] {
            let g = FiniteGroup::preset(name).unwrap();
            let r = check_complex(&g, q(), &small_cfg());
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn retract_suite_passes_s3() {
        let g = FiniteGroup::preset("S3").unwrap();
        let r = check_retract(&g, q(), &small_cfg());
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn complex_suite_catches_corruption() {
        // negative control: dropping the alternating sign on the last term
        // of the cochain differential must break d² = 0 somewhere
        let g = FiniteGroup::preset("S3").unwrap();
        let corrupt = |f: &TateElement| -> TateElement {
            let n = f.degree() as usize;
            let barred = g.nonidentity();
            let mut out = TateElement::zero(f.degree() + 1, q());
            for (key, c) in f.terms() {
                let (args, u) = (&key[..n], key[n]);
                for &a in &barred {
                    let mut k: Word = SmallVec::new();
                    k.push(a);
                    k.extend_from_slice(args);
                    k.push(g.mul(a, u));
                    out.push(&g, &k, c.clone());
                }
                for i in 0..n {
                    for &a in &barred {
                        let b = g.mul(g.inv(a), args[i]);
                        if b == g.identity() {
                            continue;
                        }
                        let mut k: Word = SmallVec::new();
                        k.extend_from_slice(&args[..i]);
                        k.push(a);
                        k.push(b);
                        k.extend_from_slice(&args[i + 1..]);
                        k.push(u);
                        let sign = if (i + 1) % 2 == 0 { c.clone() } else { -c };
                        out.push(&g, &k, sign);
                    }
                }
                for &b in &barred {
                    let mut k: Word = SmallVec::new();
                    k.extend_from_slice(args);
                    k.push(b);
                    k.push(g.mul(u, b));
                    // corrupted: (-1)^{n+1} dropped
                    out.push(&g, &k, c.clone());
                }
            }
            out
        };
        let mut bad = false;
        for k in TateElement::basis(&g, 0) {
            let e = TateElement::basis_term(&g, 0, q(), &k);
            if !corrupt(&corrupt(&e)).is_zero() {
                bad = true;
                break;
            }
        }
        assert!(bad, "corrupted sign should be visible somewhere");
    }

    #[test]
    fn m2_oracle_agrees_on_junction_window_s3() {
        let g = FiniteGroup::preset("S3").unwrap();
        let cfg = VerifyConfig {
            window: 1,
            seed: 1,
            samples: 10,
        };
        let r = check_m2_theorem(&g, q(), &cfg);
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn sign_regression_controls_fire() {
        let g = FiniteGroup::preset("S3").unwrap();
        let r = check_sign_regression(&g, q(), &small_cfg());
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn abelian_suite_z2_over_q_and_f2() {
        let g = FiniteGroup::preset("Z2").unwrap();
        for spec in [q(), FieldSpec::prime(2).unwrap()] {
            let r = check_abelian(&g, spec, &small_cfg());
            assert!(r.pass, "{spec:?}: {r:?}");
        }
    }

    #[test]
    fn reports_serialize() {
        let g = FiniteGroup::preset("Z2").unwrap();
        let r = check_complex(&g, q(), &small_cfg());
        let s = serde_json::to_string_pretty(&r).unwrap();
        assert!(s.contains("dprime_squared_zero"));
    }
}
