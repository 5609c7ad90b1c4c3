//! The additive decomposition of the Tate-Hochschild complex: classwise
//! target complexes over centralizers, the strong deformation retract
//! `(ι̂, ρ̂, ŝ)`, and the subcomplex projection.
//!
//! A decomposed element lives in the direct sum over class representatives
//! `x` of the Tate complex of `C_G(x)` with trivial coefficients; its terms
//! are tuples over the barred centralizer, tagged by the class. The sign
//! twist of the total differential on the negative side is mirrored here,
//! and the homotopy carries the matching per-degree sign, so that all five
//! strong-retract identities hold on the nose across the junction degrees.

use crate::group::{ConjugacyData, Elem};
use crate::scalar::{FieldSpec, Scalar};
use crate::tate::{barred_range, TateElement, Word};
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use std::collections::BTreeMap;

/// Identifies one summand of the decomposition: a class representative and
/// a degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct SubcomplexTag {
    pub class_rep: Elem,
    pub degree: i32,
}

/// A homogeneous element of `⊕_x Tate(C_G(x), k)`. Keys pair the class
/// index with a tuple over the barred centralizer: length `m` in degree
/// `m >= 0`, length `-m-1` in negative degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecomposedElement {
    degree: i32,
    spec: FieldSpec,
    terms: BTreeMap<(usize, Word), Scalar>,
}

pub fn tuple_len(degree: i32) -> usize {
    if degree >= 0 {
        degree as usize
    } else {
        (-degree - 1) as usize
    }
}

impl DecomposedElement {
    pub fn zero(degree: i32, spec: FieldSpec) -> Self {
        DecomposedElement {
            degree,
            spec,
            terms: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, Word), &Scalar)> {
        self.terms.iter()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, class_idx: usize, key: &[Elem]) -> Scalar {
        self.terms
            .get(&(class_idx, SmallVec::from_slice(key)))
            .cloned()
            .unwrap_or_else(|| self.spec.zero())
    }

    /// Adds a term, dropping tuples with identity entries.
    pub fn push(&mut self, cd: &ConjugacyData, class_idx: usize, key: &[Elem], coeff: Scalar) {
        debug_assert_eq!(key.len(), tuple_len(self.degree));
        if coeff.is_zero() {
            return;
        }
        let e = cd.group().identity();
        if key.iter().any(|&g| g == e) {
            return;
        }
        debug_assert!(key.iter().all(|&g| cd.in_centralizer(class_idx, g)));
        match self.terms.entry((class_idx, SmallVec::from_slice(key))) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn basis_term(
        cd: &ConjugacyData,
        degree: i32,
        spec: FieldSpec,
        class_idx: usize,
        key: &[Elem],
    ) -> Self {
        let mut el = Self::zero(degree, spec);
        el.push(cd, class_idx, key, spec.one());
        el
    }

    pub fn add_scaled(
        &self,
        cd: &ConjugacyData,
        c: &Scalar,
        other: &DecomposedElement,
    ) -> DecomposedElement {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        assert_eq!(self.spec, other.spec, "field mismatch");
        let mut out = self.clone();
        for ((x, k), v) in &other.terms {
            out.push(cd, *x, k, c * v);
        }
        out
    }

    pub fn negated(&self) -> DecomposedElement {
        DecomposedElement {
            degree: self.degree,
            spec: self.spec,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }

    pub fn scaled(&self, c: &Scalar) -> DecomposedElement {
        if c.is_zero() {
            return Self::zero(self.degree, self.spec);
        }
        DecomposedElement {
            degree: self.degree,
            spec: self.spec,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), c * v)).collect(),
        }
    }

    /// All `(class index, tuple)` basis keys at the given degree.
    pub fn basis(cd: &ConjugacyData, degree: i32) -> Vec<(usize, Word)> {
        let len = tuple_len(degree);
        let mut out = Vec::new();
        for x in 0..cd.class_count() {
            let pool = cd.centralizer_barred(x);
            let mut tuples: Vec<Word> = vec![SmallVec::new()];
            for _ in 0..len {
                let mut next = Vec::with_capacity(tuples.len() * pool.len());
                for t in &tuples {
                    for &c in &pool {
                        let mut t2 = t.clone();
                        t2.push(c);
                        next.push(t2);
                    }
                }
                tuples = next;
            }
            out.extend(tuples.into_iter().map(|t| (x, t)));
        }
        out
    }
}

/// Classwise differential of `⊕_x Tate(C_G(x), k)`: the trivial-coefficient
/// cochain differential in degrees `>= 0`, multiplication by `|C_G(x)|`
/// from degree -1 to 0, and the sign-twisted `(-1)^{m+1} ∂` below, mirroring
/// the twist on the total complex.
pub fn decomposed_diff(cd: &ConjugacyData, f: &DecomposedElement) -> DecomposedElement {
    let m = f.degree();
    let mut out = DecomposedElement::zero(m + 1, f.spec());
    if m >= 0 {
        let n = m as usize;
        for ((x, key), c) in f.terms() {
            let pool = cd.centralizer_barred(*x);
            // φ(g_2..g_{n+1}) with trivial action: prepend any a
            for &a in &pool {
                let mut k: Word = SmallVec::with_capacity(n + 1);
                k.push(a);
                k.extend_from_slice(key);
                out.push(cd, *x, &k, c.clone());
            }
            // middle contractions
            for i in 0..n {
                let target = key[i];
                for &a in &pool {
                    let b = cd.group().mul(cd.group().inv(a), target);
                    if b == cd.group().identity() {
                        continue;
                    }
                    let mut k: Word = SmallVec::with_capacity(n + 1);
                    k.extend_from_slice(&key[..i]);
                    k.push(a);
                    k.push(b);
                    k.extend_from_slice(&key[i + 1..]);
                    let sign = if (i + 1) % 2 == 0 { c.clone() } else { -c };
                    out.push(cd, *x, &k, sign);
                }
            }
            // (-1)^{n+1} φ(g_1..g_n): append any b
            for &b in &pool {
                let mut k: Word = SmallVec::with_capacity(n + 1);
                k.extend_from_slice(key);
                k.push(b);
                let sign = if (n + 1) % 2 == 0 { c.clone() } else { -c };
                out.push(cd, *x, &k, sign);
            }
        }
    } else if m == -1 {
        for ((x, _), c) in f.terms() {
            let sz = cd.centralizer(*x).len() as i64;
            out.push(cd, *x, &[], c * &f.spec().from_integer(sz));
        }
    } else {
        let s = (-m - 1) as usize;
        let twist = (m + 1).rem_euclid(2) == 0;
        for ((x, key), c) in f.terms() {
            let c = if twist { c.clone() } else { -c };
            // (g_2..g_s)
            out.push(cd, *x, &key[1..], c.clone());
            // middle contractions
            for i in 0..s - 1 {
                let prod = cd.group().mul(key[i], key[i + 1]);
                if prod == cd.group().identity() {
                    continue;
                }
                let mut k: Word = SmallVec::with_capacity(s - 1);
                k.extend_from_slice(&key[..i]);
                k.push(prod);
                k.extend_from_slice(&key[i + 2..]);
                let sign = if (i + 1) % 2 == 0 { c.clone() } else { -&c };
                out.push(cd, *x, &k, sign);
            }
            // (-1)^s (g_1..g_{s-1})
            let sign = if s % 2 == 0 { c.clone() } else { -&c };
            out.push(cd, *x, &key[..s - 1], sign);
        }
    }
    out
}

/// Class index of the subcomplex a basis key belongs to: for cochains the
/// class of `u·(g_1...g_n)^{-1}`, for chains the class of `g_1...g_s·g_0`.
fn term_class(cd: &ConjugacyData, degree: i32, key: &Word) -> usize {
    let g = cd.group();
    if degree >= 0 {
        let n = degree as usize;
        let w = g.prod(&key[..n]);
        cd.class_index_of(g.mul(key[n], g.inv(w)))
    } else {
        let s = (-degree - 1) as usize;
        let w = g.prod(&key[1..=s]);
        cd.class_index_of(g.mul(w, key[0]))
    }
}

/// Splits an element into its subcomplex components, indexed by class
/// representative. Components re-sum to the input.
pub fn project(cd: &ConjugacyData, f: &TateElement) -> Vec<(SubcomplexTag, TateElement)> {
    let mut parts: BTreeMap<usize, TateElement> = BTreeMap::new();
    for (key, c) in f.terms() {
        let x = term_class(cd, f.degree(), key);
        parts
            .entry(x)
            .or_insert_with(|| TateElement::zero(f.degree(), f.spec()))
            .push(cd.group(), key, c.clone());
    }
    parts
        .into_iter()
        .map(|(x, el)| {
            (
                SubcomplexTag {
                    class_rep: cd.reps()[x],
                    degree: f.degree(),
                },
                el,
            )
        })
        .collect()
}

/// Enumerates the `♠`-preimages of a fixed centralizer tuple: every tuple
/// `g` with `♠_{x,i}(g) = hs`, one per free choice of the index trail.
/// Calls `emit(g-tuple, final index)`; tuples containing the identity are
/// skipped.
fn spadesuit_fibers<F: FnMut(&[Elem], usize)>(
    cd: &ConjugacyData,
    x: usize,
    i: usize,
    hs: &[Elem],
    emit: &mut F,
) {
    fn rec<F: FnMut(&[Elem], usize)>(
        cd: &ConjugacyData,
        x: usize,
        hs: &[Elem],
        t: usize,
        cur: usize,
        tuple: &mut Vec<Elem>,
        emit: &mut F,
    ) {
        if t == hs.len() {
            emit(tuple, cur);
            return;
        }
        // ♠ outputs live in the centralizer; fibers over anything else are empty
        if !cd.in_centralizer(x, hs[t]) {
            return;
        }
        let g = cd.group();
        let e = g.identity();
        let lead = g.mul(g.inv(cd.coset_reps(x)[cur]), hs[t]);
        for next in 0..cd.class_size(x) {
            let gt = g.mul(lead, cd.coset_reps(x)[next]);
            if gt == e {
                continue;
            }
            tuple[t] = gt;
            rec(cd, x, hs, t + 1, next, tuple, emit);
        }
    }
    let mut tuple = vec![0 as Elem; hs.len()];
    rec(cd, x, hs, 0, i, &mut tuple, emit);
}

/// The inclusion `ι̂`: on the cochain side the map spreading a centralizer
/// cochain over the group along `♠`, on the chain side the embedding
/// `(h_1..h_n) ↦ (h_n^{-1}..h_1^{-1} x, h_1..h_n)`.
pub fn iota_hat(cd: &ConjugacyData, f: &DecomposedElement) -> TateElement {
    let g = cd.group();
    let m = f.degree();
    let mut out = TateElement::zero(m, f.spec());
    if m >= 0 {
        let n = m as usize;
        for ((x, hs), c) in f.terms() {
            for i in 0..cd.class_size(*x) {
                let xi = cd.class(*x)[i];
                let mut emit = |tuple: &[Elem], _fin: usize| {
                    let mut k: Word = SmallVec::with_capacity(n + 1);
                    k.extend_from_slice(tuple);
                    k.push(g.mul(xi, g.prod(tuple)));
                    out.push(g, &k, c.clone());
                };
                spadesuit_fibers(cd, *x, i, hs, &mut emit);
            }
        }
    } else {
        for ((x, hs), c) in f.terms() {
            let xe = cd.reps()[*x];
            let w = g.prod(hs);
            let mut k: Word = SmallVec::with_capacity(hs.len() + 1);
            k.push(g.mul(g.inv(w), xe));
            k.extend_from_slice(hs);
            out.push(g, &k, c.clone());
        }
    }
    out
}

/// The projection `ρ̂`: on the cochain side the coefficient-of-`x`
/// extraction, on the chain side the `♠` rewrite of the barred tuple at the
/// coset index carried by the leading slot.
pub fn rho_hat(cd: &ConjugacyData, f: &TateElement) -> DecomposedElement {
    let g = cd.group();
    let m = f.degree();
    let mut out = DecomposedElement::zero(m, f.spec());
    if m >= 0 {
        let n = m as usize;
        for (key, c) in f.terms() {
            let (args, u) = (&key[..n], key[n]);
            // coefficient of the representative in φ(h_1..h_n) h_n^{-1}..h_1^{-1}
            let d = g.mul(u, g.inv(g.prod(args)));
            let x = cd.class_index_of(d);
            if cd.reps()[x] != d {
                continue;
            }
            if !args.iter().all(|&h| cd.in_centralizer(x, h)) {
                continue;
            }
            out.push(cd, x, args, c.clone());
        }
    } else {
        for (key, c) in f.terms() {
            let (g0, gs) = (key[0], &key[1..]);
            let u = g.mul(g.prod(gs), g0);
            let x = cd.class_index_of(u);
            let i = cd.pos_in_class(x, u).expect("class member");
            let (hs, _) = cd.spadesuit(x, i, gs);
            out.push(cd, x, &hs, c.clone());
        }
    }
    out
}

/// The homotopy `ŝ` of the retract, lowering degree by one. Cochain side:
/// the `♠`-prefix homotopy (zero in degree 0); chain side: the
/// coset-insertion homotopy carrying the per-degree sign `(-1)^m` that
/// matches the twisted differential.
pub fn s_hat(cd: &ConjugacyData, f: &TateElement) -> TateElement {
    let g = cd.group();
    let m = f.degree();
    let mut out = TateElement::zero(m - 1, f.spec());
    if m == 0 {
        return out;
    }
    if m >= 1 {
        let n = m as usize;
        for (key, c) in f.terms() {
            let (args, u) = (&key[..n], key[n]);
            let x = term_class(cd, m, key);
            let xe = cd.reps()[x];
            // a term contributes at position j when args = (♠ prefix, γ_{s_i^j}, rest)
            for j in 0..n {
                let Some(pinned) = cd.coset_rep_pos(x, args[j]) else {
                    continue;
                };
                for i in 0..cd.class_size(x) {
                    let gamma = cd.coset_reps(x)[i];
                    let xi = cd.class(x)[i];
                    let mut emit = |prefix: &[Elem], fin: usize| {
                        if fin != pinned {
                            return;
                        }
                        let mut tuple: Word = SmallVec::with_capacity(n - 1);
                        tuple.extend_from_slice(prefix);
                        tuple.extend_from_slice(&args[j + 1..]);
                        // value condition: u = x · γ_i · g_1..g_{n-1}
                        if u != g.mul(g.mul(xe, gamma), g.prod(&tuple)) {
                            return;
                        }
                        let mut k: Word = SmallVec::with_capacity(n);
                        k.extend_from_slice(&tuple);
                        k.push(g.mul(xi, g.prod(&tuple)));
                        let sign = if j % 2 == 0 { c.clone() } else { -c };
                        out.push(g, &k, sign);
                    };
                    spadesuit_fibers(cd, x, i, &args[..j], &mut emit);
                }
            }
        }
    } else {
        let s = (-m - 1) as usize;
        let twist = m.rem_euclid(2) == 0;
        for (key, c) in f.terms() {
            let (g0, gs) = (key[0], &key[1..]);
            let u = g.mul(g.prod(gs), g0);
            let x = cd.class_index_of(u);
            let xe = cd.reps()[x];
            let i = cd.pos_in_class(x, u).expect("class member");
            let (hs, trail) = cd.spadesuit_trail(x, i, gs);
            let c = if twist { c.clone() } else { -c };
            for j in 0..=s {
                let gamma = cd.coset_reps(x)[trail[j]];
                let mut k: Word = SmallVec::with_capacity(s + 2);
                k.push(0); // placeholder for the leading slot
                k.extend_from_slice(&hs[..j]);
                k.push(gamma);
                k.extend_from_slice(&gs[j..]);
                let word = g.prod(&k[1..]);
                k[0] = g.mul(g.inv(word), xe);
                let sign = if j % 2 == 0 { c.clone() } else { -&c };
                out.push(g, &k, sign);
            }
        }
    }
    out
}

/// JSON form: mirrors the Tate element format with a class key per
/// component.
#[derive(Serialize, Deserialize)]
pub struct DecomposedComponentJson {
    pub class: usize,
    pub terms: Vec<(Vec<usize>, serde_json::Value)>,
}

#[derive(Serialize, Deserialize)]
pub struct DecomposedElementJson {
    pub degree: i32,
    pub field: FieldSpec,
    pub components: Vec<DecomposedComponentJson>,
}

impl DecomposedElement {
    pub fn to_json(&self, cd: &ConjugacyData) -> DecomposedElementJson {
        let mut comps: BTreeMap<usize, Vec<(Vec<usize>, serde_json::Value)>> = BTreeMap::new();
        for ((x, key), c) in &self.terms {
            comps
                .entry(cd.reps()[*x] as usize)
                .or_default()
                .push((key.iter().map(|&e| e as usize).collect(), c.to_json()));
        }
        DecomposedElementJson {
            degree: self.degree,
            field: self.spec,
            components: comps
                .into_iter()
                .map(|(class, terms)| DecomposedComponentJson { class, terms })
                .collect(),
        }
    }

    pub fn from_json(
        cd: &ConjugacyData,
        j: &DecomposedElementJson,
    ) -> Result<DecomposedElement, crate::tate::ElementError> {
        use crate::tate::ElementError;
        let mut out = DecomposedElement::zero(j.degree, j.field);
        let order = cd.group().order();
        for comp in &j.components {
            if comp.class >= order {
                return Err(ElementError::ElemOutOfRange(comp.class, order));
            }
            let x = cd.class_index_of(comp.class as Elem);
            for (key, cj) in &comp.terms {
                let want = tuple_len(j.degree);
                if key.len() != want {
                    return Err(ElementError::BadKeyLength(key.len(), want, j.degree));
                }
                let mut k: Word = SmallVec::new();
                for &v in key {
                    if v >= order {
                        return Err(ElementError::ElemOutOfRange(v, order));
                    }
                    k.push(v as Elem);
                }
                let c = Scalar::from_json(cj, j.field)
                    .map_err(|e| ElementError::BadScalar(e.to_string()))?;
                out.push(cd, x, &k, c);
            }
        }
        Ok(out)
    }
}

/// Sanity helper used by tests and the verify suites: no identity entries
/// in any stored barred slot.
pub fn normalized(cd: &ConjugacyData, f: &TateElement) -> bool {
    f.terms()
        .all(|(k, _)| barred_range(f.degree()).all(|i| k[i] != cd.group().identity()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::tate::dprime;

    fn q() -> FieldSpec {
        FieldSpec::rational()
    }

    fn setup(name: &str) -> ConjugacyData {
        ConjugacyData::new(&FiniteGroup::preset(name).unwrap())
    }

    #[test]
    fn decomposed_diff_junction_values() {
        let cd = setup("Z4");
        // τ(1) = |C_G(x)| = 4
        let e = DecomposedElement::basis_term(&cd, -1, q(), 2, &[]);
        let de = decomposed_diff(&cd, &e);
        assert_eq!(de.coeff(2, &[]), q().from_integer(4));
        // ∂_1 = 0
        let e = DecomposedElement::basis_term(&cd, -2, q(), 0, &[1]);
        assert!(decomposed_diff(&cd, &e).is_zero());
        // δ^0 = 0
        let e = DecomposedElement::basis_term(&cd, 0, q(), 1, &[]);
        assert!(decomposed_diff(&cd, &e).is_zero());
    }

    #[test]
    fn decomposed_diff_squares_to_zero() {
        for name in ["Z4", "S3"] {
            let cd = setup(name);
            for d in -3..=2 {
                for (x, k) in DecomposedElement::basis(&cd, d) {
                    let e = DecomposedElement::basis_term(&cd, d, q(), x, &k);
                    let dd = decomposed_diff(&cd, &decomposed_diff(&cd, &e));
                    assert!(dd.is_zero(), "{name} deg {d} class {x} {k:?}");
                }
            }
        }
    }

    #[test]
    fn project_resums_and_is_idempotent() {
        let cd = setup("S3");
        let g = cd.group();
        for d in [-3, -2, -1, 0, 1, 2] {
            let mut mixed = TateElement::zero(d, q());
            for (i, k) in TateElement::basis(g, d).into_iter().enumerate() {
                mixed.push(g, &k, q().from_integer(1 + (i as i64 % 5)));
            }
            let parts = project(&cd, &mixed);
            let mut resum = TateElement::zero(d, q());
            for (tag, p) in &parts {
                resum = resum.add_scaled(g, &q().one(), p).unwrap();
                // idempotent: projecting a component returns just itself
                let again = project(&cd, p);
                assert_eq!(again.len(), 1);
                assert_eq!(again[0].0, *tag);
                assert_eq!(&again[0].1, p);
            }
            assert_eq!(resum, mixed);
        }
    }

    #[test]
    fn degree0_projection_splits_by_class() {
        let cd = setup("S3");
        let g = cd.group();
        let mut a = TateElement::zero(0, q());
        for e in g.elements() {
            a.push(g, &[e], q().one());
        }
        let parts = project(&cd, &a);
        assert_eq!(parts.len(), cd.class_count());
        for (tag, p) in parts {
            let x = cd.class_index_of(tag.class_rep);
            assert_eq!(p.support_len(), cd.class_size(x));
        }
    }

    #[test]
    fn iota_degree0_spreads_class_sum() {
        let cd = setup("S3");
        let x = cd.class_index_of(1);
        let e = DecomposedElement::basis_term(&cd, 0, q(), x, &[]);
        let t = iota_hat(&cd, &e);
        // λ ↦ Σ_i λ x_i over the class of transpositions
        assert_eq!(t.support_len(), 3);
        for xi in [1u8, 2, 3] {
            assert_eq!(t.coeff(&[xi]), q().one());
        }
    }

    #[test]
    fn rho_degree0_reads_rep_coefficient() {
        let cd = setup("S3");
        let g = cd.group();
        let mut a = TateElement::zero(0, q());
        a.push(g, &[1], q().from_integer(7)); // rep of transpositions
        a.push(g, &[2], q().from_integer(5)); // same class, non-rep
        a.push(g, &[0], q().from_integer(3)); // identity class
        let r = rho_hat(&cd, &a);
        assert_eq!(r.coeff(cd.class_index_of(1), &[]), q().from_integer(7));
        assert_eq!(r.coeff(cd.class_index_of(0), &[]), q().from_integer(3));
    }

    #[test]
    fn chain_iota_embeds_with_printed_leading_entry() {
        let cd = setup("S3");
        let g = cd.group();
        let x = cd.class_index_of(4);
        let e = DecomposedElement::basis_term(&cd, -3, q(), x, &[4, 5]);
        let t = iota_hat(&cd, &e);
        assert_eq!(t.support_len(), 1);
        let w = g.prod(&[4, 5]);
        let lead = g.mul(g.inv(w), 4);
        assert_eq!(t.coeff(&[lead, 4, 5]), q().one());
    }

    #[test]
    fn rho_iota_is_identity() {
        for name in ["Z4", "S3"] {
            let cd = setup(name);
            for d in -3..=3 {
                for (x, k) in DecomposedElement::basis(&cd, d) {
                    let e = DecomposedElement::basis_term(&cd, d, q(), x, &k);
                    let back = rho_hat(&cd, &iota_hat(&cd, &e));
                    assert_eq!(back, e, "{name} deg {d} class {x} {k:?}");
                }
            }
        }
    }

    #[test]
    fn s_hat_vanishes_on_abelian_groups_and_degree0() {
        let cd = setup("Z4");
        for d in -3..=3 {
            for k in TateElement::basis(cd.group(), d) {
                let e = TateElement::basis_term(cd.group(), d, q(), &k);
                assert!(s_hat(&cd, &e).is_zero(), "deg {d} {k:?}");
            }
        }
        let cd = setup("S3");
        for k in TateElement::basis(cd.group(), 0) {
            let e = TateElement::basis_term(cd.group(), 0, q(), &k);
            assert!(s_hat(&cd, &e).is_zero());
        }
    }

    #[test]
    fn s_hat_degree_minus1_matches_printed_formula() {
        let cd = setup("S3");
        let g = cd.group();
        // s_{x,0}(Σ λ_i x_i) = Σ λ_i (γ_i^{-1} x, γ_i), identity entries dropped;
        // ŝ carries the chain-side sign (-1)^m = -1 at m = -1.
        let x = cd.class_index_of(1);
        let mut a = TateElement::zero(-1, q());
        for (i, &xi) in cd.class(x).iter().enumerate() {
            a.push(g, &[xi], q().from_integer(i as i64 + 1));
        }
        let s = s_hat(&cd, &a);
        assert_eq!(s.degree(), -2);
        // i = 0 has γ_1 = identity: dropped. Others appear with weight -λ_i.
        let mut expected = TateElement::zero(-2, q());
        for (i, _) in cd.class(x).iter().enumerate().skip(1) {
            let gamma = cd.coset_reps(x)[i];
            let lead = g.mul(g.inv(gamma), 1);
            expected.push(g, &[lead, gamma], -&q().from_integer(i as i64 + 1));
        }
        assert_eq!(s, expected);
    }

    /// The five strong-retract identities at small degrees; the full window
    /// runs in the acceptance suite.
    #[test]
    fn strong_retract_identities_small() {
        for name in ["Z4", "S3"] {
            let cd = setup(name);
            let g = cd.group();
            for d in -2..=2 {
                for k in TateElement::basis(g, d) {
                    let f = TateElement::basis_term(g, d, q(), &k);
                    // 1 - ι̂ρ̂ = d∘ŝ + ŝ∘d
                    let lhs = f
                        .add_scaled(g, &-&q().one(), &iota_hat(&cd, &rho_hat(&cd, &f)))
                        .unwrap();
                    let rhs = dprime(g, &s_hat(&cd, &f))
                        .add_scaled(g, &q().one(), &s_hat(&cd, &dprime(g, &f)))
                        .unwrap();
                    assert_eq!(lhs, rhs, "{name} homotopy identity deg {d} {k:?}");
                    // ŝ² = 0
                    assert!(s_hat(&cd, &s_hat(&cd, &f)).is_zero());
                    // ρ̂ŝ = 0
                    assert!(rho_hat(&cd, &s_hat(&cd, &f)).is_zero());
                }
                for (x, k) in DecomposedElement::basis(&cd, d) {
                    let e = DecomposedElement::basis_term(&cd, d, q(), x, &k);
                    // ŝι̂ = 0
                    assert!(s_hat(&cd, &iota_hat(&cd, &e)).is_zero());
                }
            }
        }
    }

    /// ι̂ and ρ̂ are chain maps for the twisted differentials.
    #[test]
    fn chain_map_identities_small() {
        for name in ["Z2", "Z4", "S3"] {
            let cd = setup(name);
            let g = cd.group();
            for d in -2..=2 {
                for (x, k) in DecomposedElement::basis(&cd, d) {
                    let e = DecomposedElement::basis_term(&cd, d, q(), x, &k);
                    let lhs = dprime(g, &iota_hat(&cd, &e));
                    let rhs = iota_hat(&cd, &decomposed_diff(&cd, &e));
                    assert_eq!(lhs, rhs, "{name} ι̂ chain map deg {d} class {x} {k:?}");
                }
                for k in TateElement::basis(g, d) {
                    let f = TateElement::basis_term(g, d, q(), &k);
                    let lhs = decomposed_diff(&cd, &rho_hat(&cd, &f));
                    let rhs = rho_hat(&cd, &dprime(g, &f));
                    assert_eq!(lhs, rhs, "{name} ρ̂ chain map deg {d} {k:?}");
                }
            }
        }
    }

    #[test]
    fn abelian_iota_rho_are_mutually_inverse() {
        let cd = setup("Z2xZ2");
        let g = cd.group();
        for d in -3..=3 {
            for k in TateElement::basis(g, d) {
                let f = TateElement::basis_term(g, d, q(), &k);
                assert_eq!(iota_hat(&cd, &rho_hat(&cd, &f)), f);
            }
        }
    }

    #[test]
    fn decomposed_json_roundtrip() {
        let cd = setup("S3");
        for d in [-2, 0, 2] {
            let mut e = DecomposedElement::zero(d, q());
            for (i, (x, k)) in DecomposedElement::basis(&cd, d).into_iter().enumerate() {
                e.push(&cd, x, &k, q().from_integer(i as i64 - 3));
            }
            let j = e.to_json(&cd);
            let s = serde_json::to_string(&j).unwrap();
            let back: DecomposedElementJson = serde_json::from_str(&s).unwrap();
            assert_eq!(DecomposedElement::from_json(&cd, &back).unwrap(), e);
        }
    }
}
