//! Matched pairs of actions `(⇀, ↼)` of a Hopf algebra on itself.

mod families;

use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use num_rational::BigRational;

pub use families::{family1, family2};

use crate::error::{Error, Result};
use crate::hopf::{group_table, Bilinear, HopfAlgebra};
use crate::linalg::{SparseVec, Tensor3};
use crate::report::{compare_maps, AxiomReport, Check};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// A left action `⇀` and a right action `↼` of `H` on itself, stored as full
/// structure tensors: `e_i ⇀ e_j = Σ_k left[i][j][k] e_k`, and likewise for
/// `↼`.
#[derive(Clone, Debug)]
pub struct ActionPair {
    name: String,
    hopf: Arc<HopfAlgebra>,
    left: Tensor3,
    right: Tensor3,
    left_op: Bilinear,
    right_op: Bilinear,
}

impl ActionPair {
    pub fn new(
        name: impl Into<String>,
        hopf: Arc<HopfAlgebra>,
        left: Tensor3,
        right: Tensor3,
    ) -> Result<Self> {
        let n = hopf.dim();
        if left.dim() != n || right.dim() != n {
            return Err(Error::DimensionMismatch(format!(
                "action tensors of dim {} and {} on an algebra of dim {n}",
                left.dim(),
                right.dim()
            )));
        }
        let left_op = Bilinear::from_tensor(&left);
        let right_op = Bilinear::from_tensor(&right);
        Ok(ActionPair {
            name: name.into(),
            hopf,
            left,
            right,
            left_op,
            right_op,
        })
    }

    /// Pair whose right action is obtained from `left` by
    /// `x↼y = S(x₁⇀y₁)x₂y₂`.
    pub fn with_derived_right(
        name: impl Into<String>,
        hopf: Arc<HopfAlgebra>,
        left: Tensor3,
    ) -> Result<Self> {
        if left.dim() != hopf.dim() {
            return Err(Error::DimensionMismatch("left action tensor".into()));
        }
        let right = derive_right_action(&hopf, &left);
        ActionPair::new(name, hopf, left, right)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn hopf_arc(&self) -> &Arc<HopfAlgebra> {
        &self.hopf
    }

    pub fn dim(&self) -> usize {
        self.hopf.dim()
    }

    pub fn left(&self) -> &Tensor3 {
        &self.left
    }

    pub fn right(&self) -> &Tensor3 {
        &self.right
    }

    pub fn left_op(&self) -> &Bilinear {
        &self.left_op
    }

    pub fn right_op(&self) -> &Bilinear {
        &self.right_op
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// `x ⇀ y`
    pub fn act_left(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        self.left_op.apply(x, y)
    }

    /// `x ↼ y`
    pub fn act_right(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        self.right_op.apply(x, y)
    }

    /// `r(e_i ⊗ e_j) = (x₁⇀y₁) ⊗ (x₂↼y₂)` as a flat vector on `H ⊗ H`.
    pub fn r_basis(&self, i: usize, j: usize) -> SparseVec {
        paired(&self.hopf, &self.left_op, &self.right_op, i, j)
    }

    /// Same pair with the parameter specialised to `v`.
    pub fn eval(&self, v: &BigRational) -> Result<ActionPair> {
        ActionPair::new(
            self.name.clone(),
            self.hopf.clone(),
            self.left.eval(v)?,
            self.right.eval(v)?,
        )
    }

    pub fn is_parametric(&self) -> bool {
        !(self.left.is_constant() && self.right.is_constant()) || self.hopf.is_parametric()
    }
}

/// `Σ f(x₁, y₁) ⊗ g(x₂, y₂)` for basis `x = e_i`, `y = e_j`.
pub(crate) fn paired(h: &HopfAlgebra, f: &Bilinear, g: &Bilinear, i: usize, j: usize) -> SparseVec {
    let n = h.dim();
    let mut out = SparseVec::new();
    for (x1, x2, c) in h.coproduct_terms(i) {
        for (y1, y2, d) in h.coproduct_terms(j) {
            let a = f.basis(*x1, *y1);
            if a.is_empty() {
                continue;
            }
            out.add_scaled(&a.tensor(g.basis(*x2, *y2), n), &(c * d));
        }
    }
    out
}

/// Checks that `action` is a module action that is also a coalgebra map.
pub fn verify_module_coalgebra_action(
    h: &HopfAlgebra,
    action: &Tensor3,
    side: Side,
) -> Result<AxiomReport> {
    let start = Instant::now();
    let n = h.dim();
    if action.dim() != n {
        return Err(Error::DimensionMismatch(format!(
            "action tensor of dim {} on an algebra of dim {n}",
            action.dim()
        )));
    }
    let op = Bilinear::from_tensor(action);
    let e = SparseVec::unit;
    let mut report = AxiomReport::new(format!("{side} module-coalgebra action on {}", h.name()));

    let w = match side {
        Side::Left => compare_maps(
            n,
            3,
            1,
            |ix| op.apply(h.mul_basis(ix[0], ix[1]), &e(ix[2])),
            |ix| op.apply(&e(ix[0]), op.basis(ix[1], ix[2])),
        ),
        Side::Right => compare_maps(
            n,
            3,
            1,
            |ix| op.apply(&e(ix[0]), h.mul_basis(ix[1], ix[2])),
            |ix| op.apply(op.basis(ix[0], ix[1]), &e(ix[2])),
        ),
    };
    report.push(Check::from_witness("action", w));

    let w = match side {
        Side::Left => compare_maps(n, 1, 1, |ix| op.apply(h.one(), &e(ix[0])), |ix| e(ix[0])),
        Side::Right => compare_maps(n, 1, 1, |ix| op.apply(&e(ix[0]), h.one()), |ix| e(ix[0])),
    };
    report.push(Check::from_witness("unit", w));

    let w = compare_maps(
        n,
        2,
        2,
        |ix| h.comul_of(op.basis(ix[0], ix[1])),
        |ix| paired(h, &op, &op, ix[0], ix[1]),
    );
    report.push(Check::from_witness("comult", w));

    let w = compare_maps(
        n,
        2,
        0,
        |ix| SparseVec::term(0, h.counit_of(op.basis(ix[0], ix[1]))),
        |ix| SparseVec::term(0, h.counit_basis(ix[0]) * h.counit_basis(ix[1])),
    );
    report.push(Check::from_witness("counit", w));

    Ok(report.timed(start))
}

/// Checks both actions and every matched-pair axiom, including the
/// compatibility `xy = (x₁⇀y₁)(x₂↼y₂)`.
pub fn verify_matched_pair(pair: &ActionPair) -> AxiomReport {
    let start = Instant::now();
    let h = pair.hopf();
    let n = h.dim();
    let (l, r) = (pair.left_op(), pair.right_op());
    let e = SparseVec::unit;
    let mut report = AxiomReport::new(format!("matched pair {} on {}", pair.name(), h.name()));

    let left = verify_module_coalgebra_action(h, pair.left(), Side::Left).expect("dims checked");
    let right = verify_module_coalgebra_action(h, pair.right(), Side::Right).expect("dims checked");
    report.absorb("left ", left);
    report.absorb("right ", right);

    // x⇀ab = (x₁⇀a₁)((x₂↼a₂)⇀b)
    let w = compare_maps(
        n,
        3,
        1,
        |ix| l.apply(&e(ix[0]), h.mul_basis(ix[1], ix[2])),
        |ix| {
            let mut out = SparseVec::new();
            for (x1, x2, c) in h.coproduct_terms(ix[0]) {
                for (a1, a2, d) in h.coproduct_terms(ix[1]) {
                    let first = l.basis(*x1, *a1);
                    if first.is_empty() {
                        continue;
                    }
                    let second = l.apply(r.basis(*x2, *a2), &e(ix[2]));
                    out.add_scaled(&h.mul(first, &second), &(c * d));
                }
            }
            out
        },
    );
    report.push(Check::from_witness("MP1", w));

    // x⇀1 = ε(x)1
    let w = compare_maps(
        n,
        1,
        1,
        |ix| l.apply(&e(ix[0]), h.one()),
        |ix| h.one().scale(h.counit_basis(ix[0])),
    );
    report.push(Check::from_witness("MP2", w));

    // xy↼a = (x↼(y₁⇀a₁))(y₂↼a₂)
    let w = compare_maps(
        n,
        3,
        1,
        |ix| r.apply(h.mul_basis(ix[0], ix[1]), &e(ix[2])),
        |ix| {
            let mut out = SparseVec::new();
            for (y1, y2, c) in h.coproduct_terms(ix[1]) {
                for (a1, a2, d) in h.coproduct_terms(ix[2]) {
                    let second = r.basis(*y2, *a2);
                    if second.is_empty() {
                        continue;
                    }
                    let first = r.apply(&e(ix[0]), l.basis(*y1, *a1));
                    out.add_scaled(&h.mul(&first, second), &(c * d));
                }
            }
            out
        },
    );
    report.push(Check::from_witness("MP3", w));

    // 1↼a = ε(a)1
    let w = compare_maps(
        n,
        1,
        1,
        |ix| r.apply(h.one(), &e(ix[0])),
        |ix| h.one().scale(h.counit_basis(ix[0])),
    );
    report.push(Check::from_witness("MP4", w));

    // (x₁⇀a₁)⊗(x₂↼a₂) = (x₂⇀a₂)⊗(x₁↼a₁)
    let w = compare_maps(
        n,
        2,
        2,
        |ix| pair.r_basis(ix[0], ix[1]),
        |ix| {
            let mut out = SparseVec::new();
            for (x1, x2, c) in h.coproduct_terms(ix[0]) {
                for (a1, a2, d) in h.coproduct_terms(ix[1]) {
                    let first = l.basis(*x2, *a2);
                    if first.is_empty() {
                        continue;
                    }
                    out.add_scaled(&first.tensor(r.basis(*x1, *a1), n), &(c * d));
                }
            }
            out
        },
    );
    report.push(Check::from_witness("MP5", w));

    // xy = (x₁⇀y₁)(x₂↼y₂)
    let w = compare_maps(
        n,
        2,
        1,
        |ix| h.mul_basis(ix[0], ix[1]).clone(),
        |ix| multiply_legs(h, &pair.r_basis(ix[0], ix[1])),
    );
    report.push(Check::from_witness("MP*", w));

    report.timed(start)
}

/// `m` applied to a flat vector on `H ⊗ H`.
pub(crate) fn multiply_legs(h: &HopfAlgebra, v: &SparseVec) -> SparseVec {
    let n = h.dim();
    let mut out = SparseVec::new();
    for (&f, c) in v.iter() {
        out.add_scaled(h.mul_basis(f / n, f % n), c);
    }
    out
}

/// The right action `x↼y = S(x₁⇀y₁)x₂y₂` determined by `left`.
pub fn derive_right_action(h: &HopfAlgebra, left: &Tensor3) -> Tensor3 {
    let l = Bilinear::from_tensor(left);
    Tensor3::from_fn(h.dim(), |i, j| {
        let mut out = SparseVec::new();
        for (x1, x2, c) in h.coproduct_terms(i) {
            for (y1, y2, d) in h.coproduct_terms(j) {
                let s = h.antipode_of(l.basis(*x1, *y1));
                if s.is_empty() {
                    continue;
                }
                out.add_scaled(
                    &h.mul(&h.mul(&s, &SparseVec::unit(*x2)), &SparseVec::unit(*y2)),
                    &(c * d),
                );
            }
        }
        out
    })
}

/// The four antipode identities satisfied by any matched pair of actions.
pub fn check_antipode_identities(pair: &ActionPair) -> AxiomReport {
    let start = Instant::now();
    let h = pair.hopf();
    let n = h.dim();
    let (l, r) = (pair.left_op(), pair.right_op());
    let s = |i: usize| h.antipode_basis(i);
    let mut report = AxiomReport::new(format!("antipode identities of {}", pair.name()));

    // S(x⇀y) = (x↼y₁)⇀S(y₂)
    let w = compare_maps(
        n,
        2,
        1,
        |ix| h.antipode_of(l.basis(ix[0], ix[1])),
        |ix| {
            let mut out = SparseVec::new();
            for (y1, y2, c) in h.coproduct_terms(ix[1]) {
                out.add_scaled(&l.apply(r.basis(ix[0], *y1), s(*y2)), c);
            }
            out
        },
    );
    report.push(Check::from_witness("antipode of left action", w));

    // S(x↼y) = S(x₁)↼(x₂⇀y)
    let w = compare_maps(
        n,
        2,
        1,
        |ix| h.antipode_of(r.basis(ix[0], ix[1])),
        |ix| {
            let mut out = SparseVec::new();
            for (x1, x2, c) in h.coproduct_terms(ix[0]) {
                out.add_scaled(&r.apply(s(*x1), l.basis(*x2, ix[1])), c);
            }
            out
        },
    );
    report.push(Check::from_witness("antipode of right action", w));

    let convolution = |act: &Bilinear, ix: &[usize]| {
        let mut out = SparseVec::new();
        for (x1, x2, c) in h.coproduct_terms(ix[0]) {
            for (y1, y2, d) in h.coproduct_terms(ix[1]) {
                let a = h.antipode_of(r.basis(*x1, *y1));
                if a.is_empty() {
                    continue;
                }
                let b = h.antipode_of(l.basis(*x2, *y2));
                out.add_scaled(&act.apply(&a, &b), &(c * d));
            }
        }
        out
    };

    // S(x₁↼y₁)⇀S(x₂⇀y₂) = ε(x)S(y)
    let w = compare_maps(
        n,
        2,
        1,
        |ix| convolution(l, ix),
        |ix| s(ix[1]).scale(h.counit_basis(ix[0])),
    );
    report.push(Check::from_witness("left action of antipodes", w));

    // S(x₁↼y₁)↼S(x₂⇀y₂) = ε(y)S(x)
    let w = compare_maps(
        n,
        2,
        1,
        |ix| convolution(r, ix),
        |ix| s(ix[0]).scale(h.counit_basis(ix[1])),
    );
    report.push(Check::from_witness("right action of antipodes", w));

    report.timed(start)
}

/// Conjugation `x⇀y = xyx⁻¹` with `x↼y = x` on a group algebra.
pub fn conjugation_pair(g: Arc<HopfAlgebra>) -> Result<ActionPair> {
    let table = group_table(&g).ok_or_else(|| {
        Error::NotAGroupAlgebra(format!(
            "{} has a basis element that is not group-like or a non-basis product",
            g.name()
        ))
    })?;
    let n = g.dim();
    let identity = (0..n)
        .find(|&e| (0..n).all(|j| table[e][j] == j))
        .ok_or_else(|| Error::NotAGroupAlgebra("no identity element".into()))?;
    let inverse: Vec<usize> = (0..n)
        .map(|i| (0..n).find(|&j| table[i][j] == identity).expect("group"))
        .collect();
    let left = Tensor3::from_fn(n, |i, j| SparseVec::unit(table[table[i][j]][inverse[i]]));
    let right = Tensor3::from_fn(n, |i, _| SparseVec::unit(i));
    ActionPair::new("conjugation", g, left, right)
}

/// `x⇀y = ε(x)y`, `x↼y = ε(y)x`. A matched pair of actions exactly when
/// `H` is commutative.
pub fn trivial_pair(h: Arc<HopfAlgebra>) -> ActionPair {
    let n = h.dim();
    let left = Tensor3::from_fn(n, |i, j| SparseVec::unit(j).scale(h.counit_basis(i)));
    let right = Tensor3::from_fn(n, |i, j| SparseVec::unit(i).scale(h.counit_basis(j)));
    ActionPair::new("trivial", h, left, right).expect("square tensors")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{a_c2c2, cyclic2, klein4, symmetric3};
    use crate::scalar::Scalar;

    fn arc(h: HopfAlgebra) -> Arc<HopfAlgebra> {
        Arc::new(h)
    }

    #[test]
    fn trivial_action_is_module_coalgebra() {
        for h in [cyclic2(), klein4(), symmetric3(), a_c2c2()] {
            let p = trivial_pair(arc(h.clone()));
            for (t, side) in [(p.left(), Side::Left), (p.right(), Side::Right)] {
                let r = verify_module_coalgebra_action(&h, t, side).unwrap();
                assert!(r.passed(), "{r}");
            }
        }
    }

    #[test]
    fn action_dimension_mismatch() {
        let h = a_c2c2();
        let t = Tensor3::zeros(4);
        assert!(matches!(
            verify_module_coalgebra_action(&h, &t, Side::Left),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn conjugation_on_s3() {
        let p = conjugation_pair(arc(symmetric3())).unwrap();
        let h = p.hopf();
        let idx = |s: &str| h.basis_index(s).unwrap();
        assert_eq!(
            p.left_op().basis(idx("(12)"), idx("(13)")),
            &SparseVec::unit(idx("(23)"))
        );
        let r = verify_matched_pair(&p);
        assert!(r.passed(), "{r}");
        assert!(check_antipode_identities(&p).passed());
    }

    #[test]
    fn conjugation_on_c2_is_trivial() {
        let p = conjugation_pair(arc(cyclic2())).unwrap();
        let t = trivial_pair(p.hopf_arc().clone());
        assert_eq!(p.left(), t.left());
        assert_eq!(p.right(), t.right());
    }

    #[test]
    fn derived_right_of_conjugation_is_trivial() {
        let p = conjugation_pair(arc(symmetric3())).unwrap();
        let derived = derive_right_action(p.hopf(), p.left());
        assert_eq!(&derived, p.right());
        let t = trivial_pair(p.hopf_arc().clone());
        assert_eq!(&derived, t.right());
    }

    #[test]
    fn conjugation_needs_a_group_algebra() {
        assert!(matches!(
            conjugation_pair(arc(a_c2c2())),
            Err(Error::NotAGroupAlgebra(_))
        ));
    }

    #[test]
    fn trivial_pair_on_commutative_algebra() {
        let p = trivial_pair(arc(klein4()));
        assert!(verify_matched_pair(&p).passed());
        assert!(check_antipode_identities(&p).passed());
    }

    #[test]
    fn trivial_pair_fails_on_noncommutative_algebra() {
        let p = trivial_pair(arc(symmetric3()));
        let r = verify_matched_pair(&p);
        assert!(!r.check("MP*").unwrap().passed);
    }

    #[test]
    fn pair_rejects_wrong_dimensions() {
        let h = arc(klein4());
        let err = ActionPair::new("bad", h, Tensor3::zeros(4), Tensor3::zeros(3));
        assert!(matches!(err, Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn eval_specialises_parameter() {
        let p = family1(Scalar::param());
        let q = p.eval(&BigRational::from_integer(3.into())).unwrap();
        assert!(!q.is_parametric());
        assert_eq!(q.left(), family1(Scalar::from_int(3)).left());
    }
}
