//! The Yang–Baxter operator `r(x⊗y) = (x₁⇀y₁) ⊗ (x₂↼y₂)` of a matched pair,
//! its axioms, inverses and involutivity.

use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::hopf::{Bilinear, HopfAlgebra};
use crate::linalg::{Matrix, SparseVec, Tensor3};
use crate::matched_pair::{verify_matched_pair, ActionPair};
use crate::report::{compare_maps, AxiomReport, Check, Witness};
use crate::scalar::Scalar;
use crate::transmutation::{braid_witness, build_transmutation, check_braided_commutativity};

#[derive(Clone, Debug)]
pub struct BraidingOperator {
    hopf: Arc<HopfAlgebra>,
    matrix: Matrix,
    cols: Vec<SparseVec>,
    source: Option<ActionPair>,
}

impl BraidingOperator {
    /// Wraps an arbitrary `n² × n²` matrix; nothing beyond the shape is checked.
    pub fn from_matrix(hopf: Arc<HopfAlgebra>, matrix: Matrix) -> Result<Self> {
        let n2 = hopf.dim() * hopf.dim();
        if matrix.rows() != n2 || matrix.cols() != n2 {
            return Err(Error::DimensionMismatch(format!(
                "braiding matrix is {}x{}, expected {n2}x{n2}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(BraidingOperator {
            hopf,
            cols: matrix.columns(),
            matrix,
            source: None,
        })
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn hopf_arc(&self) -> &Arc<HopfAlgebra> {
        &self.hopf
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn source_pair(&self) -> Option<&ActionPair> {
        self.source.as_ref()
    }

    /// `r(e_i ⊗ e_j)`
    pub fn basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.cols[i * self.hopf.dim() + j]
    }

    /// `r` on a flat vector of `H ⊗ H`.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        v.map_linear(|f| self.cols[f].clone())
    }

    pub fn is_parametric(&self) -> bool {
        !self
            .cols
            .iter()
            .all(|c| c.iter().all(|(_, s)| s.is_constant()))
    }

    /// Specialises the parameter to `v`.
    pub fn eval(&self, v: &BigRational) -> Result<BraidingOperator> {
        let matrix = self.matrix.eval(v)?;
        Ok(BraidingOperator {
            hopf: self.hopf.clone(),
            cols: matrix.columns(),
            matrix,
            source: None,
        })
    }
}

/// The matrix of `(⇀⊗↼)(id⊗τ⊗id)(Δ⊗Δ)` without verifying the pair.
pub fn r_matrix(pair: &ActionPair) -> Matrix {
    let n = pair.dim();
    Matrix::from_fn_columns(n * n, n * n, |f| pair.r_basis(f / n, f % n))
}

/// Builds `r` from a pair that passes [`verify_matched_pair`].
pub fn build_r(pair: &ActionPair) -> Result<BraidingOperator> {
    let report = verify_matched_pair(pair);
    if !report.passed() {
        return Err(Error::VerificationFailed(Box::new(report)));
    }
    let mut r = BraidingOperator::from_matrix(pair.hopf_arc().clone(), r_matrix(pair))?;
    r.source = Some(pair.clone());
    Ok(r)
}

/// Conditions (a)–(e) and the coalgebra-morphism condition.
pub fn verify_braiding_axioms(r: &BraidingOperator) -> AxiomReport {
    let start = Instant::now();
    let h = r.hopf();
    let n = h.dim();
    let e = SparseVec::unit;
    let one = h.one();
    let pair_of = |i: usize, j: usize| e(i * n + j);
    // id ⊗ m and m ⊗ id on H⊗H⊗H
    let mul_right =
        |v: &SparseVec| v.map_linear(|f| e(f / (n * n)).tensor(h.mul_basis((f / n) % n, f % n), n));
    let mul_left = |v: &SparseVec| {
        v.map_linear(|f| h.mul_basis(f / (n * n), (f / n) % n).tensor(&e(f % n), n))
    };
    let r_first =
        |v: &SparseVec| v.map_linear(|f| r.basis(f / (n * n), (f / n) % n).tensor(&e(f % n), n));
    let r_second =
        |v: &SparseVec| v.map_linear(|f| e(f / (n * n)).tensor(r.basis((f / n) % n, f % n), n * n));
    let triple = |ix: &[usize]| e((ix[0] * n + ix[1]) * n + ix[2]);
    let mut report = AxiomReport::new(format!("braiding operator axioms on {}", h.name()));

    let w = compare_maps(
        n,
        2,
        1,
        |ix| {
            r.basis(ix[0], ix[1])
                .map_linear(|f| h.mul_basis(f / n, f % n).clone())
        },
        |ix| h.mul_basis(ix[0], ix[1]).clone(),
    );
    report.push(Check::from_witness("(a) mr = m", w));
    let w = compare_maps(
        n,
        3,
        2,
        |ix| r.apply(&h.mul_basis(ix[0], ix[1]).tensor(&e(ix[2]), n)),
        |ix| mul_right(&r_first(&r_second(&triple(ix)))),
    );
    report.push(Check::from_witness("(b) r(m⊗id) = (id⊗m)(r⊗id)(id⊗r)", w));
    let w = compare_maps(
        n,
        3,
        2,
        |ix| r.apply(&e(ix[0]).tensor(h.mul_basis(ix[1], ix[2]), n)),
        |ix| mul_left(&r_second(&r_first(&triple(ix)))),
    );
    report.push(Check::from_witness("(c) r(id⊗m) = (m⊗id)(id⊗r)(r⊗id)", w));
    let w = compare_maps(
        n,
        1,
        2,
        |ix| r.apply(&one.tensor(&e(ix[0]), n)),
        |ix| e(ix[0]).tensor(one, n),
    );
    report.push(Check::from_witness("(d) r(u⊗id) = id⊗u", w));
    let w = compare_maps(
        n,
        1,
        2,
        |ix| r.apply(&e(ix[0]).tensor(one, n)),
        |ix| one.tensor(&e(ix[0]), n),
    );
    report.push(Check::from_witness("(e) r(id⊗u) = u⊗id", w));

    // Δ_{H⊗H}(x⊗y) = x₁⊗y₁⊗x₂⊗y₂
    let delta2 = |v: &SparseVec| {
        v.map_linear(|f| {
            let mut out = SparseVec::new();
            for (x1, x2, c) in h.coproduct_terms(f / n) {
                for (y1, y2, d) in h.coproduct_terms(f % n) {
                    out.add_term(((x1 * n + y1) * n + x2) * n + y2, &(c * d));
                }
            }
            out
        })
    };
    let n2 = n * n;
    let mut w = compare_maps(
        n,
        2,
        4,
        |ix| delta2(r.basis(ix[0], ix[1])),
        |ix| {
            delta2(&pair_of(ix[0], ix[1]))
                .map_linear(|f| r.apply(&e(f / n2)).tensor(&r.apply(&e(f % n2)), n2))
        },
    );
    if w.is_none() {
        w = compare_maps(
            n,
            2,
            0,
            |ix| {
                let v = r.basis(ix[0], ix[1]);
                let value = v.iter().fold(Scalar::zero(), |acc, (&f, c)| {
                    acc + c * &(h.counit_basis(f / n) * h.counit_basis(f % n))
                });
                SparseVec::term(0, value)
            },
            |ix| SparseVec::term(0, h.counit_basis(ix[0]) * h.counit_basis(ix[1])),
        );
    }
    report.push(Check::from_witness("coalgebra morphism", w));

    report.timed(start)
}

/// `(r⊗id)(id⊗r)(r⊗id) = (id⊗r)(r⊗id)(id⊗r)` compared exactly on all basis
/// triples.
pub fn check_braid_equation(r: &BraidingOperator) -> Check {
    let n = r.hopf().dim();
    Check::from_witness(
        "braid equation",
        braid_witness(n, |i, j| r.basis(i, j).clone()),
    )
}

/// Parameter values used by the sampled braid check: `2, 3, 5, 7, 11, …`.
fn sample_points() -> impl Iterator<Item = BigRational> {
    (2i64..)
        .filter(|k| (2..*k).take_while(|d| d * d <= *k).all(|d| k % d != 0))
        .map(|k| BigRational::from_integer(BigInt::from(k)))
}

/// Number of parameter values the sampled braid check uses.
pub const FAST_SAMPLES: usize = 5;

/// The braid equation checked at [`FAST_SAMPLES`] rational values of the
/// parameter, skipping poles. Constant operators are checked exactly once.
pub fn check_braid_equation_fast(r: &BraidingOperator) -> Result<Check> {
    if !r.is_parametric() {
        return Ok(check_braid_equation(r));
    }
    let mut used = 0;
    for (tries, v) in sample_points().enumerate() {
        if used == FAST_SAMPLES {
            break;
        }
        if tries > 64 {
            return Err(Error::InternalInconsistency(
                "no sample point avoids the poles".into(),
            ));
        }
        let Ok(special) = r.eval(&v) else {
            continue;
        };
        used += 1;
        let c = check_braid_equation(&special);
        if !c.passed {
            let name = format!("braid equation at a = {v}");
            return Ok(Check::fail(
                name,
                c.witness.expect("failed check has a witness"),
            ));
        }
    }
    Ok(Check::pass("braid equation"))
}

fn compose_check(r: &BraidingOperator, t: &[SparseVec], name: &str) -> Result<()> {
    let n = r.hopf().dim();
    let apply_t = |v: &SparseVec| v.map_linear(|f| t[f].clone());
    let id = |ix: &[usize]| SparseVec::unit(ix[0] * n + ix[1]);
    let w = compare_maps(n, 2, 2, |ix| apply_t(r.basis(ix[0], ix[1])), id)
        .or_else(|| compare_maps(n, 2, 2, |ix| r.apply(&t[ix[0] * n + ix[1]]), id));
    match w {
        None => Ok(()),
        Some(w) => Err(Error::InverseCheckFailed(format!("{name}: {w}"))),
    }
}

/// `r⁻¹(x⊗y) = (y₁↼(S(y₂)⇀S(x₁))) ⊗ ((S(y₃)↼S(x₂))⇀x₃)`, checked against
/// `r` on both sides before it is returned.
pub fn r_inverse_formula(pair: &ActionPair) -> Result<Matrix> {
    let h = pair.hopf();
    let n = h.dim();
    let (l, rt) = (pair.left_op(), pair.right_op());
    let e = SparseVec::unit;
    let cols: Vec<SparseVec> = (0..n * n)
        .map(|f| {
            let (x, y) = (f / n, f % n);
            let mut out = SparseVec::new();
            for (xs, c) in h.sweedler(x, 3) {
                for (ys, d) in h.sweedler(y, 3) {
                    let inner = l.apply(h.antipode_basis(ys[1]), h.antipode_basis(xs[0]));
                    if inner.is_empty() {
                        continue;
                    }
                    let left = rt.apply(&e(ys[0]), &inner);
                    let mid = rt.apply(h.antipode_basis(ys[2]), h.antipode_basis(xs[1]));
                    let right = l.apply(&mid, &e(xs[2]));
                    out.add_scaled(&left.tensor(&right, n), &(&c * &d));
                }
            }
            out
        })
        .collect();
    let r = BraidingOperator::from_matrix(pair.hopf_arc().clone(), r_matrix(pair))?;
    compose_check(&r, &cols, "inverse formula")?;
    Ok(Matrix::from_columns(n * n, &cols))
}

/// `r⁻¹ = (S⁻¹⊗S⁻¹) τ r (S⊗S) τ`, checked against `r`.
pub fn r_inverse_via_antipode(r: &BraidingOperator) -> Result<Matrix> {
    let h = r.hopf();
    let n = h.dim();
    let s_inv = h.antipode().inverse().map_err(|e| match e {
        Error::SingularMatrix { rank, size } => Error::SingularAntipode { rank, size },
        other => other,
    })?;
    let s_inv_cols = s_inv.columns();
    let cols: Vec<SparseVec> = (0..n * n)
        .map(|f| {
            let (x, y) = (f / n, f % n);
            let start = h.antipode_basis(y).tensor(h.antipode_basis(x), n);
            r.apply(&start)
                .map_linear(|g| s_inv_cols[g % n].tensor(&s_inv_cols[g / n], n))
        })
        .collect();
    compose_check(r, &cols, "antipode form of the inverse")?;
    Ok(Matrix::from_columns(n * n, &cols))
}

/// The identities relating `r` and the antipode. The first is checked with
/// the Sweedler legs as written and with the legs exchanged.
pub fn ybo_identities(pair: &ActionPair, r: &BraidingOperator) -> AxiomReport {
    let start = Instant::now();
    let h = pair.hopf();
    let n = h.dim();
    let (l, rt) = (pair.left_op(), pair.right_op());
    let e = SparseVec::unit;
    let s = |v: &SparseVec| h.antipode_of(v);
    let mut report = AxiomReport::new(format!("antipode identities of r for {}", pair.name()));

    let exchange = |swapped: bool| {
        compare_maps(
            n,
            2,
            2,
            |ix| {
                let mut out = SparseVec::new();
                for (x1, x2, c) in h.coproduct_terms(ix[0]) {
                    for (y1, y2, d) in h.coproduct_terms(ix[1]) {
                        let (first, second) = if swapped {
                            (rt.basis(*x1, *y1), l.basis(*x2, *y2))
                        } else {
                            (rt.basis(*x2, *y2), l.basis(*x1, *y1))
                        };
                        let v = s(first).tensor(&s(second), n);
                        out.add_scaled(&r.apply(&v), &(c * d));
                    }
                }
                out
            },
            |ix| h.antipode_basis(ix[1]).tensor(h.antipode_basis(ix[0]), n),
        )
    };
    report.push(Check::from_witness(
        "r(S(x₂↼y₂)⊗S(x₁⇀y₁)) = S(y)⊗S(x)",
        exchange(false),
    ));
    report.push(Check::from_witness(
        "r(S(x₁↼y₁)⊗S(x₂⇀y₂)) = S(y)⊗S(x)",
        exchange(true),
    ));

    let w = compare_maps(
        n,
        2,
        2,
        |ix| {
            let mut out = SparseVec::new();
            for (x1, x2, c) in h.coproduct_terms(ix[0]) {
                let v = h.antipode_basis(*x1).tensor(l.basis(*x2, ix[1]), n);
                out.add_scaled(&r.apply(&v), c);
            }
            out
        },
        |ix| {
            let mut out = SparseVec::new();
            for (y1, y2, c) in h.coproduct_terms(ix[1]) {
                out.add_scaled(&e(*y1).tensor(&s(rt.basis(ix[0], *y2)), n), c);
            }
            out
        },
    );
    report.push(Check::from_witness("r(S(x₁)⊗(x₂⇀y)) = y₁⊗S(x↼y₂)", w));

    let w = compare_maps(
        n,
        2,
        2,
        |ix| {
            let mut out = SparseVec::new();
            for (y1, y2, c) in h.coproduct_terms(ix[1]) {
                let v = rt.basis(ix[0], *y1).tensor(h.antipode_basis(*y2), n);
                out.add_scaled(&r.apply(&v), c);
            }
            out
        },
        |ix| {
            let mut out = SparseVec::new();
            for (x1, x2, c) in h.coproduct_terms(ix[0]) {
                out.add_scaled(&s(l.basis(*x1, ix[1])).tensor(&e(*x2), n), c);
            }
            out
        },
    );
    report.push(Check::from_witness("r((x↼y₁)⊗S(y₂)) = S(x₁⇀y)⊗x₂", w));

    report.timed(start)
}

/// The four equivalent involutivity conditions, each evaluated on its own.
#[derive(Clone, Debug)]
pub struct InvolutivityReport {
    /// `r² = id`
    pub i: Check,
    /// `(x₁⇀y₁)⇀(x₂↼y₂) = ε(y)x` and `(x₁⇀y₁)↼(x₂↼y₂) = ε(x)y`
    pub ii: Check,
    /// `x↼y = S(x₁⇀y)⇀x₂`
    pub iii: Check,
    /// `m_• ∘ c = m_•`
    pub iv: Check,
}

impl InvolutivityReport {
    pub fn involutive(&self) -> bool {
        self.i.passed
    }

    pub fn values(&self) -> [bool; 4] {
        [
            self.i.passed,
            self.ii.passed,
            self.iii.passed,
            self.iv.passed,
        ]
    }

    pub fn checks(&self) -> [&Check; 4] {
        [&self.i, &self.ii, &self.iii, &self.iv]
    }
}

/// Evaluates conditions (i)–(iv). They are equivalent for a matched pair, so
/// any disagreement is reported as an internal inconsistency.
pub fn involutivity_report(pair: &ActionPair, r: &BraidingOperator) -> Result<InvolutivityReport> {
    let h = pair.hopf();
    let n = h.dim();
    let (l, rt) = (pair.left_op(), pair.right_op());
    let e = SparseVec::unit;

    let w = compare_maps(
        n,
        2,
        2,
        |ix| r.apply(r.basis(ix[0], ix[1])),
        |ix| e(ix[0] * n + ix[1]),
    );
    let i = Check::from_witness("(i) r² = id", w);

    let twice = |outer: &Bilinear, ix: &[usize]| {
        let mut out = SparseVec::new();
        for (x1, x2, c) in h.coproduct_terms(ix[0]) {
            for (y1, y2, d) in h.coproduct_terms(ix[1]) {
                let a = l.basis(*x1, *y1);
                if a.is_empty() {
                    continue;
                }
                out.add_scaled(&outer.apply(a, rt.basis(*x2, *y2)), &(c * d));
            }
        }
        out
    };
    let w = compare_maps(
        n,
        2,
        1,
        |ix| twice(l, ix),
        |ix| e(ix[0]).scale(h.counit_basis(ix[1])),
    )
    .or_else(|| {
        compare_maps(
            n,
            2,
            1,
            |ix| twice(rt, ix),
            |ix| e(ix[1]).scale(h.counit_basis(ix[0])),
        )
    });
    let ii = Check::from_witness("(ii) (x₁⇀y₁)⇀(x₂↼y₂) = ε(y)x, (x₁⇀y₁)↼(x₂↼y₂) = ε(x)y", w);

    let w = compare_maps(
        n,
        2,
        1,
        |ix| rt.basis(ix[0], ix[1]).clone(),
        |ix| {
            let mut out = SparseVec::new();
            for (x1, x2, c) in h.coproduct_terms(ix[0]) {
                let a = h.antipode_of(l.basis(*x1, ix[1]));
                out.add_scaled(&l.apply(&a, &e(*x2)), c);
            }
            out
        },
    );
    let iii = Check::from_witness("(iii) x↼y = S(x₁⇀y)⇀x₂", w);

    let mut iv = check_braided_commutativity(&build_transmutation(pair));
    iv.name = "(iv) m_•c = m_•".into();

    let report = InvolutivityReport { i, ii, iii, iv };
    let values = report.values();
    if values.iter().any(|&v| v != values[0]) {
        return Err(Error::InternalInconsistency(format!(
            "involutivity conditions disagree for {}: {values:?}",
            pair.name()
        )));
    }
    Ok(report)
}

/// Recovers `⇀ = (id⊗ε)r` and `↼ = (ε⊗id)r` from a braiding operator and
/// checks that they rebuild `r`.
pub fn extract_actions_from_r(h: Arc<HopfAlgebra>, matrix: &Matrix) -> Result<ActionPair> {
    let r = BraidingOperator::from_matrix(h.clone(), matrix.clone())?;
    let report = verify_braiding_axioms(&r);
    if !report.passed() {
        return Err(Error::VerificationFailed(Box::new(report)));
    }
    let n = h.dim();
    let left = Tensor3::from_fn(n, |i, j| {
        r.basis(i, j)
            .iter()
            .map(|(&f, c)| (f / n, c * h.counit_basis(f % n)))
            .collect()
    });
    let right = Tensor3::from_fn(n, |i, j| {
        r.basis(i, j)
            .iter()
            .map(|(&f, c)| (f % n, c * h.counit_basis(f / n)))
            .collect()
    });
    let pair = ActionPair::new("extracted", h, left, right)?;
    let rebuilt = r_matrix(&pair);
    if &rebuilt != matrix {
        let w = compare_maps(
            n,
            2,
            2,
            |ix| rebuilt.column(ix[0] * n + ix[1]),
            |ix| matrix.column(ix[0] * n + ix[1]),
        );
        return Err(Error::InternalInconsistency(format!(
            "extracted actions do not rebuild r at {}",
            w.map(|w| w.to_string()).unwrap_or_default()
        )));
    }
    Ok(pair)
}

/// `S(x↼y) = S(y)⇀S(x)` and `S(x⇀y) = S(y)↼S(x)`, valid when `r` is
/// involutive.
pub fn antipode_exchange_check(pair: &ActionPair) -> Result<AxiomReport> {
    let start = Instant::now();
    let r = BraidingOperator::from_matrix(pair.hopf_arc().clone(), r_matrix(pair))?;
    let inv = involutivity_report(pair, &r)?;
    if !inv.involutive() {
        return Err(Error::PreconditionNotMet(format!(
            "r is not involutive for {}",
            pair.name()
        )));
    }
    let h = pair.hopf();
    let n = h.dim();
    let (l, rt) = (pair.left_op(), pair.right_op());
    let mut report = AxiomReport::new(format!("antipode exchange for involutive {}", pair.name()));
    let w = compare_maps(
        n,
        2,
        1,
        |ix| h.antipode_of(rt.basis(ix[0], ix[1])),
        |ix| l.apply(h.antipode_basis(ix[1]), h.antipode_basis(ix[0])),
    );
    report.push(Check::from_witness("S(x↼y) = S(y)⇀S(x)", w));
    let w = compare_maps(
        n,
        2,
        1,
        |ix| h.antipode_of(l.basis(ix[0], ix[1])),
        |ix| rt.apply(h.antipode_basis(ix[1]), h.antipode_basis(ix[0])),
    );
    report.push(Check::from_witness("S(x⇀y) = S(y)↼S(x)", w));
    Ok(report.timed(start))
}

/// First entry where two operators differ, for reporting.
pub fn matrix_difference(n: usize, a: &Matrix, b: &Matrix) -> Option<Witness> {
    compare_maps(
        n,
        2,
        2,
        |ix| a.column(ix[0] * n + ix[1]),
        |ix| b.column(ix[0] * n + ix[1]),
    )
}
