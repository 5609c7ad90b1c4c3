//! Homogeneous elements of the two-sided Tate-Hochschild complex of `kG`
//! and its differentials.
//!
//! Degree `m >= 0` holds cochains `Map(Gbar^m, kG)`, stored sparsely as
//! basis terms `[g_1..g_m, u]` (argument tuple followed by the value-word
//! `u` in `G`). Degree `m <= -1` holds chains `k[G x Gbar^s]` with
//! `s = -m-1`, stored as `[g_0, g_1..g_s]`. Barred slots live in
//! `Gbar = G \ {1}`; any term that acquires an identity entry in a barred
//! slot is zero and is dropped at creation.

use crate::group::{Elem, FiniteGroup};
use crate::scalar::{FieldSpec, Scalar};
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use std::collections::BTreeMap;
use thiserror::Error;

pub type Word = SmallVec<[Elem; 12]>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ElementError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(i32, i32),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("term key has length {0}, expected {1} in degree {2}")]
    BadKeyLength(usize, usize, i32),
    #[error("element {0} out of range for group of order {1}")]
    ElemOutOfRange(usize, usize),
    #[error("bad scalar in term: {0}")]
    BadScalar(String),
}

/// A homogeneous element of the Tate-Hochschild complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TateElement {
    degree: i32,
    spec: FieldSpec,
    terms: BTreeMap<Word, Scalar>,
}

/// Entries of a key that must avoid the identity: the argument tuple of a
/// cochain, or everything after `g_0` in a chain.
pub fn barred_range(degree: i32) -> std::ops::Range<usize> {
    if degree >= 0 {
        0..degree as usize
    } else {
        1..(-degree) as usize
    }
}

pub fn key_len(degree: i32) -> usize {
    if degree >= 0 {
        degree as usize + 1
    } else {
        (-degree) as usize
    }
}

impl TateElement {
    pub fn zero(degree: i32, spec: FieldSpec) -> Self {
        TateElement {
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

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, key: &[Elem]) -> Scalar {
        self.terms
            .get(key)
            .cloned()
            .unwrap_or_else(|| self.spec.zero())
    }

    /// Adds `coeff * key`, dropping normalized-to-zero keys (identity in a
    /// barred slot) and pruning cancellations.
    pub fn push(&mut self, group: &FiniteGroup, key: &[Elem], coeff: Scalar) {
        debug_assert_eq!(key.len(), key_len(self.degree));
        if coeff.is_zero() {
            return;
        }
        let e = group.identity();
        if key[barred_range(self.degree)].iter().any(|&g| g == e) {
            return;
        }
        let k: Word = SmallVec::from_slice(key);
        match self.terms.entry(k) {
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

    pub fn from_terms<I: IntoIterator<Item = (Word, Scalar)>>(
        group: &FiniteGroup,
        degree: i32,
        spec: FieldSpec,
        it: I,
    ) -> Self {
        let mut el = Self::zero(degree, spec);
        for (k, c) in it {
            el.push(group, &k, c);
        }
        el
    }

    /// Single basis term with coefficient 1.
    pub fn basis_term(group: &FiniteGroup, degree: i32, spec: FieldSpec, key: &[Elem]) -> Self {
        let mut el = Self::zero(degree, spec);
        el.push(group, key, spec.one());
        el
    }

    /// `self + c * other`.
    pub fn add_scaled(
        &self,
        group: &FiniteGroup,
        c: &Scalar,
        other: &TateElement,
    ) -> Result<TateElement, ElementError> {
        if self.degree != other.degree {
            return Err(ElementError::DegreeMismatch(self.degree, other.degree));
        }
        if self.spec != other.spec {
            return Err(ElementError::FieldMismatch(self.spec, other.spec));
        }
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.push(group, k, c * v);
        }
        Ok(out)
    }

    pub fn scaled(&self, c: &Scalar) -> TateElement {
        if c.is_zero() {
            return Self::zero(self.degree, self.spec);
        }
        TateElement {
            degree: self.degree,
            spec: self.spec,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), c * v)).collect(),
        }
    }

    pub fn negated(&self) -> TateElement {
        TateElement {
            degree: self.degree,
            spec: self.spec,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }

    /// Every basis key of the given degree: `Gbar^m x G` for cochains,
    /// `G x Gbar^s` for chains.
    pub fn basis(group: &FiniteGroup, degree: i32) -> Vec<Word> {
        let barred = group.nonidentity();
        let all: Vec<Elem> = group.elements().collect();
        let mut keys: Vec<Word> = vec![SmallVec::new()];
        let slots = key_len(degree);
        let barred_slots = barred_range(degree);
        for pos in 0..slots {
            let pool = if barred_slots.contains(&pos) { &barred } else { &all };
            let mut next = Vec::with_capacity(keys.len() * pool.len());
            for k in &keys {
                for &g in pool {
                    let mut k2 = k.clone();
                    k2.push(g);
                    next.push(k2);
                }
            }
            keys = next;
        }
        keys
    }

    /// Degree-0 element representing a single group-algebra basis vector.
    pub fn group_algebra_basis(group: &FiniteGroup, spec: FieldSpec, g: Elem) -> Self {
        Self::basis_term(group, 0, spec, &[g])
    }
}

/// The Hochschild cochain differential `δ^m` for `m >= 0`.
pub fn cochain_diff(group: &FiniteGroup, f: &TateElement) -> TateElement {
    let m = f.degree();
    assert!(m >= 0, "cochain_diff needs degree >= 0, got {m}");
    let mut out = TateElement::zero(m + 1, f.spec());
    let barred = group.nonidentity();
    let n = m as usize;
    for (key, c) in f.terms() {
        let (args, u) = (&key[..n], key[n]);
        // g_1 φ(g_2..g_{n+1}): new first argument a, value a·u
        for &a in &barred {
            let mut k: Word = SmallVec::with_capacity(n + 2);
            k.push(a);
            k.extend_from_slice(args);
            k.push(group.mul(a, u));
            out.push(group, &k, c.clone());
        }
        // middle contractions: (-1)^i φ(..., g_i g_{i+1}, ...)
        for i in 0..n {
            let target = args[i];
            for &a in &barred {
                let b = group.mul(group.inv(a), target);
                if b == group.identity() {
                    continue;
                }
                let mut k: Word = SmallVec::with_capacity(n + 2);
                k.extend_from_slice(&args[..i]);
                k.push(a);
                k.push(b);
                k.extend_from_slice(&args[i + 1..]);
                k.push(u);
                let sign = if (i + 1) % 2 == 0 { c.clone() } else { -c };
                out.push(group, &k, sign);
            }
        }
        // (-1)^{n+1} φ(g_1..g_n) g_{n+1}: new last argument b, value u·b
        for &b in &barred {
            let mut k: Word = SmallVec::with_capacity(n + 2);
            k.extend_from_slice(args);
            k.push(b);
            k.push(group.mul(u, b));
            let sign = if (n + 1) % 2 == 0 { c.clone() } else { -c };
            out.push(group, &k, sign);
        }
    }
    out
}

/// The Hochschild chain differential `∂_s` in Tate degree `m <= -2`
/// (unsigned; the sign twist lives in [`dprime`]).
pub fn chain_diff(group: &FiniteGroup, f: &TateElement) -> TateElement {
    let m = f.degree();
    assert!(m <= -2, "chain_diff needs degree <= -2, got {m}");
    let s = (-m - 1) as usize;
    let mut out = TateElement::zero(m + 1, f.spec());
    for (key, c) in f.terms() {
        let (g0, gs) = (key[0], &key[1..]);
        // (g_0 g_1, g_2..g_s)
        {
            let mut k: Word = SmallVec::with_capacity(s);
            k.push(group.mul(g0, gs[0]));
            k.extend_from_slice(&gs[1..]);
            out.push(group, &k, c.clone());
        }
        // (-1)^i (g_0, ..., g_i g_{i+1}, ...)
        for i in 0..s - 1 {
            let prod = group.mul(gs[i], gs[i + 1]);
            if prod == group.identity() {
                continue;
            }
            let mut k: Word = SmallVec::with_capacity(s);
            k.push(g0);
            k.extend_from_slice(&gs[..i]);
            k.push(prod);
            k.extend_from_slice(&gs[i + 2..]);
            let sign = if (i + 1) % 2 == 0 { c.clone() } else { -c };
            out.push(group, &k, sign);
        }
        // (-1)^s (g_s g_0, g_1..g_{s-1})
        {
            let mut k: Word = SmallVec::with_capacity(s);
            k.push(group.mul(gs[s - 1], g0));
            k.extend_from_slice(&gs[..s - 1]);
            let sign = if s % 2 == 0 { c.clone() } else { -c };
            out.push(group, &k, sign);
        }
    }
    out
}

/// The trace `τ(x) = Σ_g g x g^{-1}` from degree -1 to degree 0; its image
/// is central in `kG`.
pub fn trace_tau(group: &FiniteGroup, f: &TateElement) -> TateElement {
    assert_eq!(f.degree(), -1, "trace_tau needs degree -1");
    let mut out = TateElement::zero(0, f.spec());
    for (key, c) in f.terms() {
        let x = key[0];
        for g in group.elements() {
            let conj = group.mul(group.mul(g, x), group.inv(g));
            out.push(group, &[conj], c.clone());
        }
    }
    out
}

/// The sign-modified total differential of the Tate-Hochschild complex:
/// `δ^m` for `m >= 0`, `τ` at `m = -1`, and `(-1)^{m+1} ∂_{-m-1}` below.
pub fn dprime(group: &FiniteGroup, f: &TateElement) -> TateElement {
    let m = f.degree();
    if m >= 0 {
        cochain_diff(group, f)
    } else if m == -1 {
        trace_tau(group, f)
    } else {
        let d = chain_diff(group, f);
        if (m + 1).rem_euclid(2) == 0 {
            d
        } else {
            d.negated()
        }
    }
}

/// JSON form of one term. Chains carry a bare coefficient; cochains nest
/// their `kG` value as (group element, coefficient) pairs.
#[derive(Serialize, Deserialize)]
pub struct TermJson {
    pub key: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coeff: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Vec<(usize, serde_json::Value)>>,
}

#[derive(Serialize, Deserialize)]
pub struct TateElementJson {
    pub degree: i32,
    pub field: FieldSpec,
    pub terms: Vec<TermJson>,
}

impl TateElement {
    pub fn to_json(&self) -> TateElementJson {
        let mut terms = Vec::new();
        if self.degree >= 0 {
            let n = self.degree as usize;
            let mut grouped: BTreeMap<Vec<usize>, Vec<(usize, serde_json::Value)>> =
                BTreeMap::new();
            for (k, c) in &self.terms {
                let args: Vec<usize> = k[..n].iter().map(|&g| g as usize).collect();
                grouped
                    .entry(args)
                    .or_default()
                    .push((k[n] as usize, c.to_json()));
            }
            for (key, value) in grouped {
                terms.push(TermJson {
                    key,
                    coeff: None,
                    value: Some(value),
                });
            }
        } else {
            for (k, c) in &self.terms {
                terms.push(TermJson {
                    key: k.iter().map(|&g| g as usize).collect(),
                    coeff: Some(c.to_json()),
                    value: None,
                });
            }
        }
        TateElementJson {
            degree: self.degree,
            field: self.spec,
            terms,
        }
    }

    pub fn from_json(
        group: &FiniteGroup,
        j: &TateElementJson,
    ) -> Result<TateElement, ElementError> {
        let mut el = TateElement::zero(j.degree, j.field);
        let order = group.order();
        let check = |v: usize| -> Result<Elem, ElementError> {
            if v >= order {
                Err(ElementError::ElemOutOfRange(v, order))
            } else {
                Ok(v as Elem)
            }
        };
        for t in &j.terms {
            if j.degree >= 0 {
                if t.key.len() != j.degree as usize {
                    return Err(ElementError::BadKeyLength(
                        t.key.len(),
                        j.degree as usize,
                        j.degree,
                    ));
                }
                let Some(value) = &t.value else { continue };
                for (u, cj) in value {
                    let mut k: Word = SmallVec::new();
                    for &v in &t.key {
                        k.push(check(v)?);
                    }
                    k.push(check(*u)?);
                    let c = Scalar::from_json(cj, j.field)
                        .map_err(|e| ElementError::BadScalar(e.to_string()))?;
                    el.push(group, &k, c);
                }
            } else {
                let want = key_len(j.degree);
                if t.key.len() != want {
                    return Err(ElementError::BadKeyLength(t.key.len(), want, j.degree));
                }
                let Some(cj) = &t.coeff else { continue };
                let mut k: Word = SmallVec::new();
                for &v in &t.key {
                    k.push(check(v)?);
                }
                let c = Scalar::from_json(cj, j.field)
                    .map_err(|e| ElementError::BadScalar(e.to_string()))?;
                el.push(group, &k, c);
            }
        }
        Ok(el)
    }
}
