//! Generic A-infinity interface and the Stasheff relation evaluator.
//!
//! The relation checked is, for every n >= 1,
//! `Σ_{n = r+s+t} (-1)^{r+st} m_{r+1+t}(1^r ⊗ m_s ⊗ 1^t) = 0`,
//! with the Koszul sign `(-1)^{s(|a_1|+...+|a_r|)}` picked up when the inner
//! operation moves past the first `r` arguments.

use crate::group::FiniteGroup;
use crate::products::{cup, m3, m3_with_sign, M3Sign};
use crate::scalar::FieldSpec;
use crate::tate::{dprime, TateElement};

pub trait AInfinity {
    type El: Clone + PartialEq + std::fmt::Debug;

    /// Applies `m_n` where `n = inputs.len()`.
    fn op(&self, inputs: &[Self::El]) -> Self::El;
    fn degree(&self, el: &Self::El) -> i32;
    fn zero(&self, degree: i32) -> Self::El;
    fn add(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn negate(&self, a: &Self::El) -> Self::El;
    fn is_zero(&self, el: &Self::El) -> bool;
}

/// The Stasheff defect at arity `n = inputs.len()`; the structure is
/// A-infinity at this tuple iff the result is zero.
pub fn stasheff_defect<A: AInfinity>(alg: &A, inputs: &[A::El]) -> A::El {
    let n = inputs.len();
    let degrees: Vec<i32> = inputs.iter().map(|a| alg.degree(a)).collect();
    let total: i32 = degrees.iter().sum();
    let mut acc = alg.zero(total + 3 - n as i32);
    for s in 1..=n {
        for r in 0..=(n - s) {
            let t = n - s - r;
            let inner = alg.op(&inputs[r..r + s]);
            let mut outer_inputs: Vec<A::El> = Vec::with_capacity(r + 1 + t);
            outer_inputs.extend_from_slice(&inputs[..r]);
            outer_inputs.push(inner);
            outer_inputs.extend_from_slice(&inputs[r + s..]);
            let term = alg.op(&outer_inputs);
            let prefix: i32 = degrees[..r].iter().sum();
            let exponent = (r + s * t) as i32 + s as i32 * prefix;
            let term = if exponent.rem_euclid(2) == 0 {
                term
            } else {
                alg.negate(&term)
            };
            acc = alg.add(&acc, &term);
        }
    }
    acc
}

/// The Tate-Hochschild complex as an A-infinity algebra:
/// `m_1 = ∂'`, `m_2 = ∪`, `m_3` as defined, `m_i = 0` for `i > 3`.
pub struct DStar<'g> {
    pub group: &'g FiniteGroup,
    pub spec: FieldSpec,
    pub m3_sign: M3Sign,
}

impl<'g> DStar<'g> {
    pub fn new(group: &'g FiniteGroup, spec: FieldSpec) -> Self {
        DStar {
            group,
            spec,
            m3_sign: M3Sign::Corrected,
        }
    }

    pub fn with_sign(group: &'g FiniteGroup, spec: FieldSpec, m3_sign: M3Sign) -> Self {
        DStar {
            group,
            spec,
            m3_sign,
        }
    }
}

impl<'g> AInfinity for DStar<'g> {
    type El = TateElement;

    fn op(&self, inputs: &[TateElement]) -> TateElement {
        match inputs {
            [a] => dprime(self.group, a),
            [a, b] => cup(self.group, a, b),
            [a, b, c] => match self.m3_sign {
                M3Sign::Corrected => m3(self.group, a, b, c),
                s => m3_with_sign(self.group, a, b, c, s),
            },
            _ => {
                let total: i32 = inputs.iter().map(|e| e.degree()).sum();
                TateElement::zero(total + 2 - inputs.len() as i32, self.spec)
            }
        }
    }

    fn degree(&self, el: &TateElement) -> i32 {
        el.degree()
    }

    fn zero(&self, degree: i32) -> TateElement {
        TateElement::zero(degree, self.spec)
    }

    fn add(&self, a: &TateElement, b: &TateElement) -> TateElement {
        a.add_scaled(self.group, &self.spec.one(), b)
            .expect("degree mismatch in Stasheff accumulation")
    }

    fn negate(&self, a: &TateElement) -> TateElement {
        a.negated()
    }

    fn is_zero(&self, el: &TateElement) -> bool {
        el.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::rational()
    }

    #[test]
    fn stasheff_n1_and_n2_on_s3() {
        let g = FiniteGroup::preset("S3").unwrap();
        let alg = DStar::new(&g, q());
        for d in -2..=2 {
            for k in TateElement::basis(&g, d) {
                let a = TateElement::basis_term(&g, d, q(), &k);
                assert!(alg.is_zero(&stasheff_defect(&alg, &[a.clone()])));
            }
        }
        for da in -1..=1 {
            for db in -1..=1 {
                for ka in TateElement::basis(&g, da) {
                    for kb in TateElement::basis(&g, db) {
                        let a = TateElement::basis_term(&g, da, q(), &ka);
                        let b = TateElement::basis_term(&g, db, q(), &kb);
                        let d = stasheff_defect(&alg, &[a, b]);
                        assert!(alg.is_zero(&d), "n=2 fails at ({da},{db}) {ka:?} {kb:?}: {d:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn stasheff_n3_spot_checks() {
        let g = FiniteGroup::preset("S3").unwrap();
        let alg = DStar::new(&g, q());
        // degree pattern hitting m3 case (iv): (1, -1, 1)
        for ka in TateElement::basis(&g, 1).iter().take(6) {
            for kb in TateElement::basis(&g, -1).iter() {
                for kc in TateElement::basis(&g, 1).iter().take(6) {
                    let a = TateElement::basis_term(&g, 1, q(), ka);
                    let b = TateElement::basis_term(&g, -1, q(), kb);
                    let c = TateElement::basis_term(&g, 1, q(), kc);
                    let d = stasheff_defect(&alg, &[a, b, c]);
                    assert!(alg.is_zero(&d), "n=3 fails at {ka:?} {kb:?} {kc:?}: {d:?}");
                }
            }
        }
        // degree pattern hitting m3 case (v): (-1, 1, -1)
        for ka in TateElement::basis(&g, -1).iter() {
            for kb in TateElement::basis(&g, 1).iter().take(8) {
                for kc in TateElement::basis(&g, -1).iter() {
                    let a = TateElement::basis_term(&g, -1, q(), ka);
                    let b = TateElement::basis_term(&g, 1, q(), kb);
                    let c = TateElement::basis_term(&g, -1, q(), kc);
                    let d = stasheff_defect(&alg, &[a, b, c]);
                    assert!(alg.is_zero(&d), "n=3 fails at {ka:?} {kb:?} {kc:?}: {d:?}");
                }
            }
        }
    }
}
