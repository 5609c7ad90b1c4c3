//! Closed-form A-infinity operations for finite abelian groups, the tensor
//! factorization over the group, and the hand-computed tables for the
//! smallest cases, kept as golden fixtures.
//!
//! For abelian groups every conjugacy class is a singleton and every
//! centralizer is the whole group, the homotopy vanishes identically, and
//! the transferred structure factors as a group element times an operation
//! on the trivial-coefficient Tate complex of the group. The closed forms
//! here are an independent route to those operations; the verify suites
//! compare them against the generic transfer engine. Where the printed
//! small-group tables disagree with both, the discrepancy is logged by the
//! fixtures rather than silently corrected.

use crate::group::{ConjugacyData, Elem, FiniteGroup};
use crate::scalar::{FieldSpec, Scalar};
use crate::tate::Word;
use crate::decomp::{tuple_len, DecomposedElement};
use smallvec::SmallVec;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AbelianError {
    #[error("group {0} is not abelian")]
    NotAbelian(String),
    #[error("index {0} outside 1..=3")]
    BadIndex(usize),
}

/// A homogeneous element of the trivial-coefficient Tate complex of an
/// abelian group: tuples over the non-identity elements, of length `m` in
/// degree `m >= 0` and `-m-1` below.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianCochain {
    degree: i32,
    spec: FieldSpec,
    terms: BTreeMap<Word, Scalar>,
}

impl AbelianCochain {
    pub fn zero(degree: i32, spec: FieldSpec) -> Self {
        AbelianCochain {
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &[Elem]) -> Scalar {
        self.terms
            .get(key)
            .cloned()
            .unwrap_or_else(|| self.spec.zero())
    }

    pub fn push(&mut self, group: &FiniteGroup, key: &[Elem], coeff: Scalar) {
        debug_assert_eq!(key.len(), tuple_len(self.degree));
        if coeff.is_zero() || key.iter().any(|&g| g == group.identity()) {
            return;
        }
        match self.terms.entry(SmallVec::from_slice(key)) {
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

    pub fn basis_term(group: &FiniteGroup, degree: i32, spec: FieldSpec, key: &[Elem]) -> Self {
        let mut el = Self::zero(degree, spec);
        el.push(group, key, spec.one());
        el
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree, self.spec);
        }
        AbelianCochain {
            degree: self.degree,
            spec: self.spec,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), c * v)).collect(),
        }
    }

    pub fn add(&self, group: &FiniteGroup, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.push(group, k, v.clone());
        }
        out
    }

    pub fn basis(group: &FiniteGroup, degree: i32) -> Vec<Word> {
        let pool = group.nonidentity();
        let mut keys: Vec<Word> = vec![SmallVec::new()];
        for _ in 0..tuple_len(degree) {
            let mut next = Vec::with_capacity(keys.len() * pool.len());
            for k in &keys {
                for &g in &pool {
                    let mut k2 = k.clone();
                    k2.push(g);
                    next.push(k2);
                }
            }
            keys = next;
        }
        keys
    }
}

/// A summand `g ⊗ α` of the tensor factorization `kG ⊗ Tate(G, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorElement {
    pub factor: Elem,
    pub payload: AbelianCochain,
}

fn ensure_abelian(group: &FiniteGroup) -> Result<(), AbelianError> {
    if group.is_abelian() {
        Ok(())
    } else {
        Err(AbelianError::NotAbelian(group.name().to_string()))
    }
}

/// The closed-form differential: trivial-coefficient cochain differential
/// above, multiplication by `|G|` at the junction, the sign-twisted chain
/// differential below.
pub fn mhat1_closed(group: &FiniteGroup, f: &AbelianCochain) -> Result<AbelianCochain, AbelianError> {
    ensure_abelian(group)?;
    let m = f.degree();
    let mut out = AbelianCochain::zero(m + 1, f.spec());
    let pool = group.nonidentity();
    if m >= 0 {
        let n = m as usize;
        for (key, c) in f.terms() {
            for &a in &pool {
                let mut k: Word = SmallVec::with_capacity(n + 1);
                k.push(a);
                k.extend_from_slice(key);
                out.push(group, &k, c.clone());
            }
            for i in 0..n {
                for &a in &pool {
                    let b = group.mul(group.inv(a), key[i]);
                    if b == group.identity() {
                        continue;
                    }
                    let mut k: Word = SmallVec::with_capacity(n + 1);
                    k.extend_from_slice(&key[..i]);
                    k.push(a);
                    k.push(b);
                    k.extend_from_slice(&key[i + 1..]);
                    let sign = if (i + 1) % 2 == 0 { c.clone() } else { -c };
                    out.push(group, &k, sign);
                }
            }
            for &b in &pool {
                let mut k: Word = SmallVec::with_capacity(n + 1);
                k.extend_from_slice(key);
                k.push(b);
                let sign = if (n + 1) % 2 == 0 { c.clone() } else { -c };
                out.push(group, &k, sign);
            }
        }
    } else if m == -1 {
        let order = f.spec().from_integer(group.order() as i64);
        for (_, c) in f.terms() {
            out.push(group, &[], c * &order);
        }
    } else {
        let s = (-m - 1) as usize;
        let twist = (m + 1).rem_euclid(2) == 0;
        for (key, c) in f.terms() {
            let c = if twist { c.clone() } else { -c };
            out.push(group, &key[1..], c.clone());
            for i in 0..s - 1 {
                let prod = group.mul(key[i], key[i + 1]);
                if prod == group.identity() {
                    continue;
                }
                let mut k: Word = SmallVec::with_capacity(s - 1);
                k.extend_from_slice(&key[..i]);
                k.push(prod);
                k.extend_from_slice(&key[i + 2..]);
                let sign = if (i + 1) % 2 == 0 { c.clone() } else { -&c };
                out.push(group, &k, sign);
            }
            let sign = if s % 2 == 0 { c.clone() } else { -&c };
            out.push(group, &key[..s - 1], sign);
        }
    }
    Ok(out)
}

/// The closed-form binary operation in its six degree cases.
pub fn mhat2_closed(
    group: &FiniteGroup,
    a: &AbelianCochain,
    b: &AbelianCochain,
) -> Result<AbelianCochain, AbelianError> {
    ensure_abelian(group)?;
    let (n, m) = (a.degree(), b.degree());
    let mut out = AbelianCochain::zero(n + m, a.spec());
    for (ka, ca) in a.terms() {
        for (kb, cb) in b.terms() {
            let c = ca * cb;
            if n >= 0 && m >= 0 {
                // case 1: concatenation
                let mut k: Word = SmallVec::new();
                k.extend_from_slice(ka);
                k.extend_from_slice(kb);
                out.push(group, &k, c);
            } else if n <= -1 && m <= -1 {
                // case 2: Σ_g (h_1..t, g^{-1} g_s^{-1}..g_1^{-1}, g_1..s)
                let inv_word = group.inv(group.prod(ka));
                for g in group.elements() {
                    let mid = group.mul(group.inv(g), inv_word);
                    if mid == group.identity() {
                        continue;
                    }
                    let mut k: Word = SmallVec::new();
                    k.extend_from_slice(kb);
                    k.push(mid);
                    k.extend_from_slice(ka);
                    out.push(group, &k, c.clone());
                }
            } else if n >= 0 && m <= -1 {
                let nn = n as usize;
                let t = (-m - 1) as usize;
                if (n + m) <= -1 {
                    // case 3: φ(h_{t-n+1..t}) (h_1..h_{t-n})
                    if &kb[t - nn..] == &ka[..] {
                        out.push(group, &kb[..t - nn], c);
                    }
                } else {
                    // case 4: Σ_g φ(out, g^{-1}, h_1..t)
                    let keep = nn - t - 1;
                    if &ka[keep + 1..] == &kb[..] {
                        out.push(group, &ka[..keep], c);
                    }
                }
            } else {
                let s = (-n - 1) as usize;
                let mm = m as usize;
                if (n + m) <= -1 {
                    // case 5: φ(g_1..m) (g_{m+1}..s)
                    if &ka[..mm] == &kb[..] {
                        out.push(group, &ka[mm..], c);
                    }
                } else {
                    // case 6: Σ_g φ(g_1..s, g^{-1}, out)
                    if &kb[..s] == &ka[..] {
                        out.push(group, &kb[s + 1..], c);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The closed-form ternary operation: the two trivial-coefficient cases
/// with bounds and signs as in the general complex.
pub fn mhat3_closed(
    group: &FiniteGroup,
    a: &AbelianCochain,
    b: &AbelianCochain,
    c: &AbelianCochain,
) -> Result<AbelianCochain, AbelianError> {
    ensure_abelian(group)?;
    let out_degree = a.degree() + b.degree() + c.degree() - 1;
    let mut out = AbelianCochain::zero(out_degree, a.spec());
    let (da, db, dc) = (a.degree(), b.degree(), c.degree());
    if da >= 0 && db <= -1 && dc >= 0 {
        let (m, r, n) = (da as i64, (-db - 1) as i64, dc as i64);
        if r + 2 > m + n {
            return Ok(out);
        }
        for (kf, cf) in a.terms() {
            for (kl, cl) in b.terms() {
                for (kp, cp) in c.terms() {
                    let coeff = &(cf * cl) * cp;
                    let lo = 1.max(r + 2 - m);
                    let hi = n.min(r + 1);
                    for j in lo..=hi {
                        let split = (m - r + j - 2) as usize;
                        let g = kf[split];
                        if &kf[split + 1..] != &kl[(j - 1) as usize..] {
                            continue;
                        }
                        if &kp[..(j - 1) as usize] != &kl[..(j - 1) as usize] {
                            continue;
                        }
                        if kp[(j - 1) as usize] != group.inv(g) {
                            continue;
                        }
                        let mut k: Word = SmallVec::new();
                        k.extend_from_slice(&kf[..split]);
                        k.extend_from_slice(&kp[j as usize..]);
                        let sgn = (m + r + j - 1).rem_euclid(2);
                        out.push(group, &k, if sgn == 0 { coeff.clone() } else { -&coeff });
                    }
                }
            }
        }
    } else if da <= -1 && db >= 0 && dc <= -1 {
        let (r, m, s) = ((-da - 1) as i64, db as i64, (-dc - 1) as i64);
        if m - 1 > r + s {
            return Ok(out);
        }
        for (kl1, c1) in a.terms() {
            for (kf, cf) in b.terms() {
                for (kl2, c2) in c.terms() {
                    let coeff = &(c1 * cf) * c2;
                    let lo = 0.max(s + 1 - m);
                    let hi = s.min(r - m + s + 1);
                    for j in lo..=hi {
                        let head = (m - s + j - 1) as usize;
                        if &kf[..head] != &kl1[..head] {
                            continue;
                        }
                        let g = kf[head];
                        if &kf[head + 1..] != &kl2[j as usize..] {
                            continue;
                        }
                        let mut k: Word = SmallVec::new();
                        k.extend_from_slice(&kl2[..j as usize]);
                        k.push(group.inv(g));
                        k.extend_from_slice(&kl1[head..]);
                        let sgn = (m + r + s - j).rem_euclid(2);
                        out.push(group, &k, if sgn == 0 { coeff.clone() } else { -&coeff });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The tensor factorization of the transferred operations:
/// `m̂_p(g_1 ⊗ α_1, ..., g_p ⊗ α_p) = g_1...g_p ⊗ m̂'_p(α_1, ..., α_p)`,
/// with `m̂'_p = 0` for `p > 3`.
pub fn tensor_structure(
    group: &FiniteGroup,
    inputs: &[TensorElement],
) -> Result<TensorElement, AbelianError> {
    ensure_abelian(group)?;
    assert!(!inputs.is_empty());
    let factor = inputs
        .iter()
        .fold(group.identity(), |acc, t| group.mul(acc, t.factor));
    let spec = inputs[0].payload.spec();
    let payload = match inputs {
        [a] => mhat1_closed(group, &a.payload)?,
        [a, b] => mhat2_closed(group, &a.payload, &b.payload)?,
        [a, b, c] => mhat3_closed(group, &a.payload, &b.payload, &c.payload)?,
        _ => {
            let total: i32 = inputs.iter().map(|t| t.payload.degree()).sum();
            AbelianCochain::zero(total + 2 - inputs.len() as i32, spec)
        }
    };
    Ok(TensorElement { factor, payload })
}

/// Splits a decomposed element of an abelian group into tensor summands,
/// one per class (= group element).
pub fn decomposed_to_tensor(cd: &ConjugacyData, e: &DecomposedElement) -> Vec<TensorElement> {
    let mut per_class: BTreeMap<usize, AbelianCochain> = BTreeMap::new();
    for ((x, key), c) in e.terms() {
        per_class
            .entry(*x)
            .or_insert_with(|| AbelianCochain::zero(e.degree(), e.spec()))
            .push(cd.group(), key, c.clone());
    }
    per_class
        .into_iter()
        .map(|(x, payload)| TensorElement {
            factor: cd.reps()[x],
            payload,
        })
        .collect()
}

pub fn tensor_to_decomposed(cd: &ConjugacyData, t: &TensorElement) -> DecomposedElement {
    let x = cd.class_index_of(t.factor);
    let mut out = DecomposedElement::zero(t.payload.degree(), t.payload.spec());
    for (key, c) in t.payload.terms() {
        out.push(cd, x, key, c.clone());
    }
    out
}

/// Which of the two tabulated groups a printed-table fixture refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TabulatedGroup {
    Z4,
    Z2xZ2,
}

/// The printed index map `c_i: I_3^n -> I_3^{n+1}` used by the tabulated
/// cochain differentials; `i` is 1-based. Transcribed exactly as printed,
/// including the single-term branch at `j_i = 2` for the cyclic group.
pub fn ci_map(kind: TabulatedGroup, i: usize, tuple: &[u8]) -> Result<Vec<Vec<u8>>, AbelianError> {
    if i == 0 || i > tuple.len() {
        return Err(AbelianError::BadIndex(i));
    }
    if tuple.iter().any(|&j| j == 0 || j > 3) {
        return Err(AbelianError::BadIndex(4));
    }
    let insert = |pair: (u8, u8)| -> Vec<u8> {
        let mut out = Vec::with_capacity(tuple.len() + 1);
        out.extend_from_slice(&tuple[..i - 1]);
        out.push(pair.0);
        out.push(pair.1);
        out.extend_from_slice(&tuple[i..]);
        out
    };
    let pairs: Vec<(u8, u8)> = match (kind, tuple[i - 1]) {
        (TabulatedGroup::Z4, 1) => vec![(2, 3), (3, 2)],
        (TabulatedGroup::Z4, 2) => vec![(3, 3)],
        (TabulatedGroup::Z4, 3) => vec![(1, 2), (2, 1)],
        (TabulatedGroup::Z2xZ2, 1) => vec![(2, 3), (3, 2)],
        (TabulatedGroup::Z2xZ2, 2) => vec![(1, 3), (3, 1)],
        (TabulatedGroup::Z2xZ2, 3) => vec![(1, 2), (2, 1)],
        _ => unreachable!(),
    };
    Ok(pairs.into_iter().map(insert).collect())
}

/// The printed index map `d_i: I_3^n -> I_3^{n-1}` of the Klein four-group
/// chain differential; `0` (merged identity) becomes `None`.
pub fn di_map(i: usize, tuple: &[u8]) -> Result<Option<Vec<u8>>, AbelianError> {
    if i == 0 || i >= tuple.len() {
        return Err(AbelianError::BadIndex(i));
    }
    if tuple.iter().any(|&j| j == 0 || j > 3) {
        return Err(AbelianError::BadIndex(4));
    }
    let (a, b) = (tuple[i - 1], tuple[i]);
    if a == b {
        return Ok(None);
    }
    let mut out = Vec::with_capacity(tuple.len() - 1);
    out.extend_from_slice(&tuple[..i - 1]);
    out.push(6 - a - b);
    out.extend_from_slice(&tuple[i + 1..]);
    Ok(Some(out))
}
