//! The homotopy-transfer engine: evaluates planar-tree composites with the
//! inclusion on leaves, cup/m3 on vertices, the homotopy on internal edges
//! and the projection at the root, and sums them into the transferred
//! operations on the additive decomposition.
//!
//! The single-vertex composites (the local α/β operations) are exposed
//! separately so each tree can be cross-checked as an iterated pipeline of
//! them.

use crate::ainf::AInfinity;
use crate::decomp::{decomposed_diff, iota_hat, rho_hat, s_hat, DecomposedElement};
use crate::group::ConjugacyData;
use crate::products::{cup, m3};
use crate::scalar::FieldSpec;
use crate::tate::TateElement;
use crate::trees::{sign_and_degree, PlanarTree, SignPolicy};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TransferError {
    #[error("tree has {0} leaves but {1} inputs were given")]
    ArityMismatch(usize, usize),
    #[error("local operation expects {0} ends, got {1} inputs")]
    EndMismatch(usize, usize),
    #[error("input {0} does not match its declared end kind")]
    EndKind(usize),
    #[error("input {0} has degree {1}, which contradicts its declared sign")]
    DegreeSign(usize, i32),
    #[error("output degree {0} contradicts the declared result sign")]
    OutputSign(i32),
}

fn vertex_op(cd: &ConjugacyData, inputs: &[TateElement]) -> TateElement {
    match inputs {
        [a, b] => cup(cd.group(), a, b),
        [a, b, c] => m3(cd.group(), a, b, c),
        _ => unreachable!("vertices have arity 2 or 3"),
    }
}

fn composite(cd: &ConjugacyData, tree: &PlanarTree, inputs: &[DecomposedElement], next: &mut usize) -> TateElement {
    match tree {
        PlanarTree::Leaf => {
            let v = iota_hat(cd, &inputs[*next]);
            *next += 1;
            v
        }
        PlanarTree::Node(children) => {
            let vals: Vec<TateElement> = children
                .iter()
                .map(|c| {
                    let v = composite(cd, c, inputs, next);
                    if matches!(c, PlanarTree::Node(_)) {
                        s_hat(cd, &v)
                    } else {
                        v
                    }
                })
                .collect();
            vertex_op(cd, &vals)
        }
    }
}

/// Evaluates one tree summand of the transfer: the signed
/// `ρ̂ ∘ (tree composite) ∘ ι̂^{⊗n}` on homogeneous inputs.
pub fn eval_tree(
    cd: &ConjugacyData,
    policy: SignPolicy,
    tree: &PlanarTree,
    inputs: &[DecomposedElement],
) -> Result<DecomposedElement, TransferError> {
    if tree.leaf_count() != inputs.len() {
        return Err(TransferError::ArityMismatch(tree.leaf_count(), inputs.len()));
    }
    let degrees: Vec<i32> = inputs.iter().map(|e| e.degree()).collect();
    let (sign, _) = sign_and_degree(tree, &degrees, policy);
    let mut next = 0;
    let raw = composite(cd, tree, inputs, &mut next);
    let projected = rho_hat(cd, &raw);
    Ok(if sign >= 0 {
        projected
    } else {
        projected.negated()
    })
}

/// The transferred operation: the differential at arity 1, the signed sum
/// over all {2,3}-ary planar trees for arity >= 2.
pub fn mhat(
    cd: &ConjugacyData,
    policy: SignPolicy,
    inputs: &[DecomposedElement],
) -> Result<DecomposedElement, TransferError> {
    assert!(!inputs.is_empty());
    if inputs.len() == 1 {
        return Ok(decomposed_diff(cd, &inputs[0]));
    }
    let spec = inputs[0].spec();
    let total: i32 = inputs.iter().map(|e| e.degree()).sum();
    let mut acc = DecomposedElement::zero(total + 2 - inputs.len() as i32, spec);
    for tree in PlanarTree::enumerate(inputs.len()) {
        let term = eval_tree(cd, policy, &tree, inputs)?;
        acc = acc.add_scaled(cd, &spec.one(), &term);
    }
    Ok(acc)
}

/// End label of a local operation: `One` feeds the branch through the
/// inclusion, `Zero` passes a total-complex element unchanged.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocalEnd {
    One,
    Zero,
}

/// Root label: α projects back to the decomposition, β applies the
/// homotopy and stays in the total complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocalKind {
    Alpha,
    Beta,
}

/// Optional degree-sign annotations (the ± decorations of a local
/// operation): `true` marks the cohomology side (degree >= 0).
#[derive(Debug, Clone)]
pub struct LocalOpSpec {
    pub kind: LocalKind,
    pub ends: Vec<LocalEnd>,
    pub input_signs: Option<Vec<bool>>,
    pub output_sign: Option<bool>,
}

#[derive(Debug, Clone)]
pub enum LocalValue {
    Decomposed(DecomposedElement),
    Total(TateElement),
}

impl LocalValue {
    pub fn degree(&self) -> i32 {
        match self {
            LocalValue::Decomposed(e) => e.degree(),
            LocalValue::Total(e) => e.degree(),
        }
    }

    pub fn expect_decomposed(self) -> DecomposedElement {
        match self {
            LocalValue::Decomposed(e) => e,
            LocalValue::Total(_) => panic!("expected a decomposed value"),
        }
    }

    pub fn expect_total(self) -> TateElement {
        match self {
            LocalValue::Decomposed(_) => panic!("expected a total-complex value"),
            LocalValue::Total(e) => e,
        }
    }
}

/// One unsigned vertex of the flowchart: inclusion at `One` ends, identity
/// at `Zero` ends, cup or m3 at the vertex, then projection (α) or
/// homotopy (β) at the root.
pub fn local_op(
    cd: &ConjugacyData,
    spec: &LocalOpSpec,
    inputs: &[LocalValue],
) -> Result<LocalValue, TransferError> {
    if spec.ends.len() != inputs.len() {
        return Err(TransferError::EndMismatch(spec.ends.len(), inputs.len()));
    }
    if inputs.len() != 2 && inputs.len() != 3 {
        return Err(TransferError::EndMismatch(2, inputs.len()));
    }
    if let Some(signs) = &spec.input_signs {
        for (i, (&nonneg, input)) in signs.iter().zip(inputs).enumerate() {
            if (input.degree() >= 0) != nonneg {
                return Err(TransferError::DegreeSign(i, input.degree()));
            }
        }
    }
    let lifted: Vec<TateElement> = spec
        .ends
        .iter()
        .zip(inputs)
        .enumerate()
        .map(|(i, (end, input))| match (end, input) {
            (LocalEnd::One, LocalValue::Decomposed(e)) => Ok(iota_hat(cd, e)),
            (LocalEnd::Zero, LocalValue::Total(e)) => Ok(e.clone()),
            _ => Err(TransferError::EndKind(i)),
        })
        .collect::<Result<_, _>>()?;
    let v = vertex_op(cd, &lifted);
    if let Some(nonneg) = spec.output_sign {
        let out_degree = match spec.kind {
            LocalKind::Alpha => v.degree(),
            LocalKind::Beta => v.degree() - 1,
        };
        if (out_degree >= 0) != nonneg {
            return Err(TransferError::OutputSign(out_degree));
        }
    }
    Ok(match spec.kind {
        LocalKind::Alpha => LocalValue::Decomposed(rho_hat(cd, &v)),
        LocalKind::Beta => LocalValue::Total(s_hat(cd, &v)),
    })
}

/// The unsigned flowchart evaluation of a whole tree: every non-root vertex
/// is a β operation, the root an α operation. Equals `eval_tree` up to the
/// tree sign.
pub fn eval_tree_via_local_ops(
    cd: &ConjugacyData,
    tree: &PlanarTree,
    inputs: &[DecomposedElement],
) -> Result<DecomposedElement, TransferError> {
    if tree.leaf_count() != inputs.len() {
        return Err(TransferError::ArityMismatch(tree.leaf_count(), inputs.len()));
    }
    fn rec(
        cd: &ConjugacyData,
        tree: &PlanarTree,
        inputs: &[DecomposedElement],
        next: &mut usize,
        is_root: bool,
    ) -> Result<LocalValue, TransferError> {
        match tree {
            PlanarTree::Leaf => {
                let v = inputs[*next].clone();
                *next += 1;
                Ok(LocalValue::Decomposed(v))
            }
            PlanarTree::Node(children) => {
                let mut ends = Vec::with_capacity(children.len());
                let mut vals = Vec::with_capacity(children.len());
                for c in children {
                    let v = rec(cd, c, inputs, next, false)?;
                    ends.push(match c {
                        PlanarTree::Leaf => LocalEnd::One,
                        PlanarTree::Node(_) => LocalEnd::Zero,
                    });
                    vals.push(v);
                }
                let spec = LocalOpSpec {
                    kind: if is_root { LocalKind::Alpha } else { LocalKind::Beta },
                    ends,
                    input_signs: None,
                    output_sign: None,
                };
                local_op(cd, &spec, &vals)
            }
        }
    }
    let mut next = 0;
    Ok(rec(cd, tree, inputs, &mut next, true)?.expect_decomposed())
}

/// The transferred A-infinity structure on the additive decomposition.
pub struct Transferred<'c> {
    pub cd: &'c ConjugacyData,
    pub spec: FieldSpec,
    pub policy: SignPolicy,
}

impl<'c> Transferred<'c> {
    pub fn new(cd: &'c ConjugacyData, spec: FieldSpec) -> Self {
        Transferred {
            cd,
            spec,
            policy: SignPolicy::default(),
        }
    }
}

impl<'c> AInfinity for Transferred<'c> {
    type El = DecomposedElement;

    fn op(&self, inputs: &[DecomposedElement]) -> DecomposedElement {
        mhat(self.cd, self.policy, inputs).expect("arity checked by construction")
    }

    fn degree(&self, el: &DecomposedElement) -> i32 {
        el.degree()
    }

    fn zero(&self, degree: i32) -> DecomposedElement {
        DecomposedElement::zero(degree, self.spec)
    }

    fn add(&self, a: &DecomposedElement, b: &DecomposedElement) -> DecomposedElement {
        a.add_scaled(self.cd, &self.spec.one(), b)
    }

    fn negate(&self, a: &DecomposedElement) -> DecomposedElement {
        a.negated()
    }

    fn is_zero(&self, el: &DecomposedElement) -> bool {
        el.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::trees::transfer_sign;

    fn q() -> FieldSpec {
        FieldSpec::rational()
    }

    fn setup(name: &str) -> ConjugacyData {
        ConjugacyData::new(&FiniteGroup::preset(name).unwrap())
    }

    #[test]
    fn mhat1_squares_to_zero() {
        let cd = setup("S3");
        let alg = Transferred::new(&cd, q());
        for d in -3..=3 {
            for (x, k) in DecomposedElement::basis(&cd, d) {
                let e = DecomposedElement::basis_term(&cd, d, q(), x, &k);
                let dd = alg.op(&[alg.op(&[e])]);
                assert!(dd.is_zero());
            }
        }
    }

    #[test]
    fn trees_with_homotopy_vanish_on_abelian_groups() {
        let cd = setup("Z4");
        let policy = SignPolicy::default();
        for tree in PlanarTree::enumerate(3) {
            if tree.internal_edges() == 0 {
                continue;
            }
            for da in -1..=1 {
                for db in -1..=1 {
                    for dc in -1..=1 {
                        for (xa, ka) in DecomposedElement::basis(&cd, da) {
                            let a = DecomposedElement::basis_term(&cd, da, q(), xa, &ka);
                            let b = DecomposedElement::basis(&cd, db)
                                .first()
                                .map(|(x, k)| DecomposedElement::basis_term(&cd, db, q(), *x, k))
                                .unwrap();
                            let c = DecomposedElement::basis(&cd, dc)
                                .first()
                                .map(|(x, k)| DecomposedElement::basis_term(&cd, dc, q(), *x, k))
                                .unwrap();
                            let out = eval_tree(&cd, policy, &tree, &[a, b, c]).unwrap();
                            assert!(out.is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn mhat4_vanishes_on_abelian_groups() {
        let cd = setup("Z2xZ2");
        let policy = SignPolicy::default();
        for degs in [[0, 0, 0, 0], [1, -1, 1, -1], [-1, -1, 1, 1]] {
            let picks: Vec<DecomposedElement> = degs
                .iter()
                .map(|&d| {
                    let (x, k) = DecomposedElement::basis(&cd, d).swap_remove(0);
                    DecomposedElement::basis_term(&cd, d, q(), x, &k)
                })
                .collect();
            let out = mhat(&cd, policy, &picks).unwrap();
            assert!(out.is_zero());
        }
    }

    #[test]
    fn eval_tree_equals_signed_local_op_pipeline() {
        let cd = setup("S3");
        let policy = SignPolicy::default();
        for n in 2..=4 {
            for tree in PlanarTree::enumerate(n) {
                // a couple of degree profiles per tree
                for base in [-1i32, 1] {
                    let degs: Vec<i32> = (0..n).map(|i| if i % 2 == 0 { base } else { -base }).collect();
                    let inputs: Vec<DecomposedElement> = degs
                        .iter()
                        .enumerate()
                        .map(|(i, &d)| {
                            let basis = DecomposedElement::basis(&cd, d);
                            let (x, k) = basis[(i + 1) % basis.len()].clone();
                            DecomposedElement::basis_term(&cd, d, q(), x, &k)
                        })
                        .collect();
                    let lhs = eval_tree(&cd, policy, &tree, &inputs).unwrap();
                    let unsigned = eval_tree_via_local_ops(&cd, &tree, &inputs).unwrap();
                    let sign = transfer_sign(&tree, &degs, policy);
                    let rhs = if sign >= 0 { unsigned } else { unsigned.negated() };
                    assert_eq!(lhs, rhs, "tree {} degrees {degs:?}", tree.encode());
                }
            }
        }
    }

    #[test]
    fn local_op_validates_ends_and_signs() {
        let cd = setup("S3");
        let e = DecomposedElement::basis_term(&cd, 1, q(), 1, &[1]);
        let spec = LocalOpSpec {
            kind: LocalKind::Alpha,
            ends: vec![LocalEnd::One, LocalEnd::One],
            input_signs: Some(vec![true, false]),
            output_sign: None,
        };
        let err = local_op(
            &cd,
            &spec,
            &[
                LocalValue::Decomposed(e.clone()),
                LocalValue::Decomposed(e.clone()),
            ],
        )
        .unwrap_err();
        assert!(matches!(err, TransferError::DegreeSign(1, 1)));
        let spec2 = LocalOpSpec {
            kind: LocalKind::Alpha,
            ends: vec![LocalEnd::Zero, LocalEnd::One],
            input_signs: None,
            output_sign: None,
        };
        let err = local_op(
            &cd,
            &spec2,
            &[LocalValue::Decomposed(e.clone()), LocalValue::Decomposed(e)],
        )
        .unwrap_err();
        assert!(matches!(err, TransferError::EndKind(0)));
    }

    #[test]
    fn alpha_11_plus_is_mhat2_on_cohomology_inputs() {
        let cd = setup("S3");
        let a = DecomposedElement::basis_term(&cd, 1, q(), 1, &[1]);
        let b = DecomposedElement::basis_term(&cd, 1, q(), 2, &[4]);
        let spec = LocalOpSpec {
            kind: LocalKind::Alpha,
            ends: vec![LocalEnd::One, LocalEnd::One],
            input_signs: Some(vec![true, true]),
            output_sign: Some(true),
        };
        let via_local = local_op(
            &cd,
            &spec,
            &[LocalValue::Decomposed(a.clone()), LocalValue::Decomposed(b.clone())],
        )
        .unwrap()
        .expect_decomposed();
        let engine = mhat(&cd, SignPolicy::default(), &[a, b]).unwrap();
        assert_eq!(via_local, engine);
    }
}
