//! Coquasitriangular forms `R: H⊗H → k` and the matched pairs they induce.

use std::sync::Arc;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::hopf::{a_c2c2, HopfAlgebra};
use crate::linalg::{Matrix, SparseVec, Tensor3};
use crate::matched_pair::{verify_matched_pair, ActionPair};
use crate::report::{compare_maps, AxiomReport, Check, Witness};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct CqtForm {
    hopf: Arc<HopfAlgebra>,
    form: Matrix,
    inverse: Matrix,
}

impl CqtForm {
    /// Wraps `form` (entry `(i, j)` is `R(e_i⊗e_j)`) and computes its
    /// convolution inverse.
    pub fn new(hopf: Arc<HopfAlgebra>, form: Matrix) -> Result<Self> {
        let inverse = convolution_inverse_form(&hopf, &form)?;
        Ok(CqtForm {
            hopf,
            form,
            inverse,
        })
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn hopf_arc(&self) -> &Arc<HopfAlgebra> {
        &self.hopf
    }

    pub fn form(&self) -> &Matrix {
        &self.form
    }

    pub fn inverse_form(&self) -> &Matrix {
        &self.inverse
    }

    pub fn value(&self, i: usize, j: usize) -> &Scalar {
        &self.form[(i, j)]
    }

    pub fn inverse_value(&self, i: usize, j: usize) -> &Scalar {
        &self.inverse[(i, j)]
    }
}

/// Convolution product `(F * G)(a⊗b) = F(a₁⊗b₁) G(a₂⊗b₂)` evaluated on a
/// basis pair.
fn convolve(h: &HopfAlgebra, f: &Matrix, g: &Matrix, a: usize, b: usize) -> Scalar {
    let mut acc = Scalar::zero();
    for (a1, a2, c) in h.coproduct_terms(a) {
        for (b1, b2, d) in h.coproduct_terms(b) {
            let x = &f[(*a1, *b1)];
            if x.is_zero() {
                continue;
            }
            acc += &(c * d) * &(x * &g[(*a2, *b2)]);
        }
    }
    acc
}

/// Solves `R⁻¹ * R = ε⊗ε` in the convolution algebra of bilinear forms and
/// checks both sides of the inverse law.
pub fn convolution_inverse_form(h: &HopfAlgebra, form: &Matrix) -> Result<Matrix> {
    let n = h.dim();
    if form.rows() != n || form.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "form is {}x{}, expected {n}x{n}",
            form.rows(),
            form.cols()
        )));
    }
    // row (a,b), column (p,q): coefficient of T(p,q) in (T * R)(a⊗b)
    let mut system = Matrix::zeros(n * n, n * n);
    for a in 0..n {
        for b in 0..n {
            for (a1, a2, c) in h.coproduct_terms(a) {
                for (b1, b2, d) in h.coproduct_terms(b) {
                    let v = &form[(*a2, *b2)];
                    if v.is_zero() {
                        continue;
                    }
                    let cell = &mut system[(a * n + b, a1 * n + b1)];
                    *cell = &*cell + &(&(c * d) * v);
                }
            }
        }
    }
    let solve = system
        .inverse()
        .map_err(|_| Error::NotConvolutionInvertible)?;
    let rhs = SparseVec::from_dense(
        &(0..n * n)
            .map(|f| h.counit_basis(f / n) * h.counit_basis(f % n))
            .collect::<Vec<_>>(),
    );
    let t = solve.apply(&rhs);
    let mut inverse = Matrix::zeros(n, n);
    for (&f, c) in t.iter() {
        inverse[(f / n, f % n)] = c.clone();
    }
    let eps = |a: usize, b: usize| h.counit_basis(a) * h.counit_basis(b);
    for a in 0..n {
        for b in 0..n {
            if convolve(h, &inverse, form, a, b) != eps(a, b)
                || convolve(h, form, &inverse, a, b) != eps(a, b)
            {
                return Err(Error::NotConvolutionInvertible);
            }
        }
    }
    Ok(inverse)
}

/// The inverse law and the three coquasitriangular axioms.
pub fn verify_cqt(f: &CqtForm) -> AxiomReport {
    let start = Instant::now();
    let h = f.hopf();
    let n = h.dim();
    let scalar = |s: Scalar| SparseVec::term(0, s);
    let eps = |ix: &[usize]| scalar(h.counit_basis(ix[0]) * h.counit_basis(ix[1]));
    let mut report = AxiomReport::new(format!("coquasitriangular axioms on {}", h.name()));

    let w = compare_maps(
        n,
        2,
        0,
        |ix| scalar(convolve(h, f.inverse_form(), f.form(), ix[0], ix[1])),
        eps,
    )
    .or_else(|| {
        compare_maps(
            n,
            2,
            0,
            |ix| scalar(convolve(h, f.form(), f.inverse_form(), ix[0], ix[1])),
            eps,
        )
    });
    report.push(Check::from_witness("inverse law", w));

    let w = compare_maps(
        n,
        2,
        1,
        |ix| {
            let mut out = SparseVec::new();
            for (a1, a2, c) in h.coproduct_terms(ix[0]) {
                for (b1, b2, d) in h.coproduct_terms(ix[1]) {
                    let k = f.value(*a1, *b1);
                    if !k.is_zero() {
                        out.add_scaled(h.mul_basis(*a2, *b2), &(&(c * d) * k));
                    }
                }
            }
            out
        },
        |ix| {
            let mut out = SparseVec::new();
            for (a1, a2, c) in h.coproduct_terms(ix[0]) {
                for (b1, b2, d) in h.coproduct_terms(ix[1]) {
                    let k = f.value(*a2, *b2);
                    if !k.is_zero() {
                        out.add_scaled(h.mul_basis(*b1, *a1), &(&(c * d) * k));
                    }
                }
            }
            out
        },
    );
    report.push(Check::from_witness("R(a₁⊗b₁)a₂b₂ = b₁a₁R(a₂⊗b₂)", w));

    let form_on = |a: usize, v: &SparseVec| {
        v.iter()
            .fold(Scalar::zero(), |acc, (&k, c)| acc + c * f.value(a, k))
    };
    let form_left = |v: &SparseVec, b: usize| {
        v.iter()
            .fold(Scalar::zero(), |acc, (&k, c)| acc + c * f.value(k, b))
    };
    let w = compare_maps(
        n,
        3,
        0,
        |ix| scalar(form_on(ix[0], h.mul_basis(ix[1], ix[2]))),
        |ix| {
            let mut acc = Scalar::zero();
            for (a1, a2, c) in h.coproduct_terms(ix[0]) {
                acc += c * &(f.value(*a1, ix[2]) * f.value(*a2, ix[1]));
            }
            scalar(acc)
        },
    );
    report.push(Check::from_witness("R(a⊗bc) = R(a₁⊗c)R(a₂⊗b)", w));
    let w = compare_maps(
        n,
        3,
        0,
        |ix| scalar(form_left(h.mul_basis(ix[0], ix[1]), ix[2])),
        |ix| {
            let mut acc = Scalar::zero();
            for (c1, c2, c) in h.coproduct_terms(ix[2]) {
                acc += c * &(f.value(ix[0], *c1) * f.value(ix[1], *c2));
            }
            scalar(acc)
        },
    );
    report.push(Check::from_witness("R(ab⊗c) = R(a⊗c₁)R(b⊗c₂)", w));

    report.timed(start)
}

/// `R⁻¹ = R^op`
pub fn is_cotriangular(f: &CqtForm) -> bool {
    f.inverse_form() == &f.form().transpose()
}

/// The matrix of `a⊗b ↦ R⁻¹(a₁⊗b₁) b₂⊗a₂ R(a₃⊗b₃)`.
pub fn cqt_braiding_matrix(f: &CqtForm) -> Matrix {
    let h = f.hopf();
    let n = h.dim();
    Matrix::from_fn_columns(n * n, n * n, |p| {
        let mut out = SparseVec::new();
        for (xs, c) in h.sweedler(p / n, 3) {
            for (ys, d) in h.sweedler(p % n, 3) {
                let k = f.inverse_value(xs[0], ys[0]) * f.value(xs[2], ys[2]);
                if !k.is_zero() {
                    out.add_term(ys[1] * n + xs[1], &(&(&c * &d) * &k));
                }
            }
        }
        out
    })
}

/// `a⇀b = R⁻¹(a₁⊗b₁) b₂ R(a₂⊗b₃)` and `a↼b = R⁻¹(a₁⊗b₁) a₂ R(a₃⊗b₂)`,
/// verified as a matched pair and cross-checked against
/// [`cqt_braiding_matrix`].
pub fn induce_pair_from_cqt(f: &CqtForm) -> Result<ActionPair> {
    let report = verify_cqt(f);
    if !report.passed() {
        return Err(Error::VerificationFailed(Box::new(report)));
    }
    let h = f.hopf();
    let n = h.dim();
    let left = Tensor3::from_fn(n, |a, b| {
        let mut out = SparseVec::new();
        for (a1, a2, c) in h.coproduct_terms(a) {
            for (bs, d) in h.sweedler(b, 3) {
                let k = f.inverse_value(*a1, bs[0]) * f.value(*a2, bs[2]);
                if !k.is_zero() {
                    out.add_term(bs[1], &(&(c * &d) * &k));
                }
            }
        }
        out
    });
    let right = Tensor3::from_fn(n, |a, b| {
        let mut out = SparseVec::new();
        for (xs, c) in h.sweedler(a, 3) {
            for (b1, b2, d) in h.coproduct_terms(b) {
                let k = f.inverse_value(xs[0], *b1) * f.value(xs[2], *b2);
                if !k.is_zero() {
                    out.add_term(xs[1], &(&(&c * d) * &k));
                }
            }
        }
        out
    });
    let pair = ActionPair::new(
        format!("induced({})", h.name()),
        f.hopf_arc().clone(),
        left,
        right,
    )?;
    let report = verify_matched_pair(&pair);
    if !report.passed() {
        return Err(Error::VerificationFailed(Box::new(report)));
    }
    let direct = cqt_braiding_matrix(f);
    let built = crate::braiding::r_matrix(&pair);
    if let Some(w) = crate::braiding::matrix_difference(n, &built, &direct) {
        return Err(Error::InternalInconsistency(format!(
            "r of the induced pair differs from the form's braiding at {w}"
        )));
    }
    Ok(pair)
}

/// `R_α(g^i h^j x^k ⊗ g^l h^m x^n) = δ_{k0}δ_{n0}(−1)^{(i+j)(l+m)} +
/// δ_{k1}δ_{n1} α(−1)^{(i+j)(l+m+1)}` on `a_c2c2`.
pub fn r_alpha_form(alpha: Scalar) -> CqtForm {
    let h = Arc::new(a_c2c2());
    let sign = |e: usize| {
        if e.is_multiple_of(2) {
            Scalar::one()
        } else {
            -Scalar::one()
        }
    };
    // basis index = g + 2h + 4x
    let parts = |b: usize| (b & 1, (b >> 1) & 1, (b >> 2) & 1);
    let mut form = Matrix::zeros(8, 8);
    for p in 0..8 {
        for q in 0..8 {
            let (i, j, k) = parts(p);
            let (l, m, nn) = parts(q);
            form[(p, q)] = match (k, nn) {
                (0, 0) => sign((i + j) * (l + m)),
                (1, 1) => &alpha * &sign((i + j) * (l + m + 1)),
                _ => Scalar::zero(),
            };
        }
    }
    CqtForm::new(h, form).expect("R_α is convolution invertible")
}

/// `ε⊗ε`, the convolution unit.
pub fn counit_form(h: Arc<HopfAlgebra>) -> CqtForm {
    let n = h.dim();
    let mut form = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            form[(i, j)] = h.counit_basis(i) * h.counit_basis(j);
        }
    }
    CqtForm::new(h, form).expect("ε⊗ε is its own inverse")
}

/// Outcome of comparing an induced pair with a target pair.
#[derive(Clone, Debug)]
pub struct Obstruction {
    /// Entry of `⇀` or `↼` where the two pairs can never agree.
    pub witness: Witness,
    pub side: &'static str,
}

/// Looks for an entry of the actions on which `induced` and `target` differ
/// and neither depends on the parameter, so that no specialisation of
/// either family makes them equal. Returns `None` if every difference
/// involves the parameter.
pub fn parameter_free_obstruction(
    induced: &ActionPair,
    target: &ActionPair,
) -> Option<Obstruction> {
    let n = target.dim();
    let constant = |v: &SparseVec| v.iter().all(|(_, c)| c.is_constant());
    for (side, a, b) in [
        ("left", induced.left_op(), target.left_op()),
        ("right", induced.right_op(), target.right_op()),
    ] {
        for i in 0..n {
            for j in 0..n {
                let (x, y) = (a.basis(i, j), b.basis(i, j));
                if x != y && constant(x) && constant(y) {
                    let w = compare_maps(n, 0, 1, |_| x.clone(), |_| y.clone())
                        .expect("vectors differ");
                    return Some(Obstruction {
                        witness: Witness {
                            input: vec![i, j],
                            output: w.output,
                            lhs: w.lhs,
                            rhs: w.rhs,
                        },
                        side,
                    });
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::{build_r, involutivity_report};
    use crate::hopf::{klein4, symmetric3};
    use crate::matched_pair::{family1, family2, trivial_pair};

    #[test]
    fn r_alpha_entries() {
        let a = Scalar::param();
        let f = r_alpha_form(a.clone());
        let (g, x) = (1, 4);
        assert_eq!(f.value(g, g), &-Scalar::one());
        assert_eq!(f.value(x, x), &a);
        assert!(f.value(g, x).is_zero());
        assert_eq!(f.value(0, 0), &Scalar::one());
    }

    #[test]
    fn r_alpha_is_cotriangular_cqt() {
        let f = r_alpha_form(Scalar::param());
        let rep = verify_cqt(&f);
        assert!(rep.passed(), "{rep}");
        assert!(is_cotriangular(&f));
        assert_eq!(f.inverse_form(), &f.form().transpose());
    }

    #[test]
    fn counit_form_cases() {
        let f = counit_form(Arc::new(klein4()));
        assert_eq!(f.inverse_form(), f.form());
        assert!(verify_cqt(&f).passed());
        assert!(is_cotriangular(&f));
        let p = induce_pair_from_cqt(&f).unwrap();
        let t = trivial_pair(f.hopf_arc().clone());
        assert_eq!(p.left(), t.left());
        assert_eq!(p.right(), t.right());

        let f = counit_form(Arc::new(symmetric3()));
        let rep = verify_cqt(&f);
        assert!(rep.check("inverse law").unwrap().passed);
        assert!(!rep.check("R(a₁⊗b₁)a₂b₂ = b₁a₁R(a₂⊗b₂)").unwrap().passed);
        assert!(matches!(
            induce_pair_from_cqt(&f),
            Err(Error::VerificationFailed(_))
        ));
    }

    #[test]
    fn asymmetric_bicharacter_is_not_cotriangular() {
        // R(a, b) = (-1)^(a_g b_h) on C2×C2 with basis bits g = 1, h = 2.
        let h = Arc::new(klein4());
        let sign = |a: usize, b: usize| if a & 1 == 1 && b & 2 == 2 { -1 } else { 1 };
        let rows = (0..4)
            .map(|a| (0..4).map(|b| Scalar::from_int(sign(a, b))).collect())
            .collect();
        let f = CqtForm::new(h, Matrix::from_rows(rows).unwrap()).unwrap();
        let rep = verify_cqt(&f);
        assert!(rep.passed(), "{rep}");
        assert!(!is_cotriangular(&f));
    }

    #[test]
    fn zero_form_is_not_invertible() {
        let h = Arc::new(klein4());
        assert!(matches!(
            CqtForm::new(h, Matrix::zeros(4, 4)),
            Err(Error::NotConvolutionInvertible)
        ));
    }

    #[test]
    fn r_alpha_induces_family1() {
        let a = Scalar::param();
        let p = induce_pair_from_cqt(&r_alpha_form(a.clone())).unwrap();
        let f1 = family1(a);
        assert_eq!(p.left(), f1.left());
        assert_eq!(p.right(), f1.right());
        let r = build_r(&p).unwrap();
        assert_eq!(involutivity_report(&p, &r).unwrap().values(), [true; 4]);
    }

    #[test]
    fn family2_is_not_induced_by_r_alpha() {
        let a = Scalar::param();
        let induced = induce_pair_from_cqt(&r_alpha_form(a.clone())).unwrap();
        let ob = parameter_free_obstruction(&induced, &family2(a)).unwrap();
        let h = 2;
        assert_eq!(ob.side, "left");
        assert_eq!(ob.witness.input, vec![h, h]);
        assert_eq!(ob.witness.output, vec![h]);
        assert_eq!(
            (ob.witness.lhs.as_str(), ob.witness.rhs.as_str()),
            ("1", "0")
        );
        assert!(parameter_free_obstruction(&induced, &family1(Scalar::param())).is_none());
    }
}
