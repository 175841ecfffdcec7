//! Hopf algebras on `H ⊗ H`: the double cross product `H⋈H`, the
//! bosonization `H_⇀#H`, and the isomorphism `Φ` between them.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{Matrix, SparseVec, Tensor3, Vector};
use crate::matched_pair::ActionPair;
use crate::report::{compare_maps, AxiomReport, Check};

use super::TransmutationData;

/// Basis names `a|x` for `H ⊗ H`, index `a·n + x`.
pub fn product_basis(h: &HopfAlgebra) -> Vec<String> {
    let names = h.basis_names();
    names
        .iter()
        .flat_map(|a| names.iter().map(move |x| format!("{a}|{x}")))
        .collect()
}

/// Assembles a Hopf algebra on `H ⊗ H` with the given product and
/// coproduct. Unit and counit are `1⊗1` and `ε⊗ε`; the antipode on `a⊗x`
/// is `(1⊗S(x)) · (S(a)⊗1)` for both constructions below, once the product
/// is known.
fn assemble<M, C, A>(
    name: String,
    h: &HopfAlgebra,
    product: M,
    coproduct: C,
    antipode: A,
) -> HopfAlgebra
where
    M: Fn(usize, usize) -> SparseVec + Sync,
    C: Fn(usize) -> SparseVec + Sync,
    A: Fn(&Tensor3, usize) -> SparseVec + Sync,
{
    let n = h.dim();
    let big = n * n;
    let mult = Tensor3::from_fn(big, product);
    let comult = Matrix::from_fn_columns(big * big, big, coproduct);
    let unit = Vector::from_sparse(&h.one().tensor(h.one(), n), big);
    let counit = Vector::new(
        (0..big)
            .map(|f| h.counit_basis(f / n) * h.counit_basis(f % n))
            .collect(),
    );
    let antipode = Matrix::from_fn_columns(big, big, |f| antipode(&mult, f));
    HopfAlgebra::new(name, product_basis(h), mult, unit, comult, counit, antipode)
        .expect("shapes are consistent")
}

fn tensor_product_of(mult: &Tensor3, x: &SparseVec, y: &SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    for (&i, a) in x.iter() {
        for (&j, b) in y.iter() {
            out.add_scaled(&mult.image(i, j), &(a * b));
        }
    }
    out
}

/// `H⋈H` with `(a⊗x)(b⊗y) = a(x₁⇀b₁) ⊗ (x₂↼b₂)y` and the tensor coproduct.
pub fn double_cross_product(pair: &ActionPair) -> HopfAlgebra {
    let h = pair.hopf();
    let n = h.dim();
    let (l, r) = (pair.left_op(), pair.right_op());
    let e = SparseVec::unit;
    let product = |p: usize, q: usize| {
        let (a, x, b, y) = (p / n, p % n, q / n, q % n);
        let mut out = SparseVec::new();
        for (x1, x2, c) in h.coproduct_terms(x) {
            for (b1, b2, d) in h.coproduct_terms(b) {
                let left = l.basis(*x1, *b1);
                if left.is_empty() {
                    continue;
                }
                let right = r.basis(*x2, *b2);
                let first = h.mul(&e(a), left);
                let second = h.mul(right, &e(y));
                out.add_scaled(&first.tensor(&second, n), &(c * d));
            }
        }
        out
    };
    let coproduct = |p: usize| {
        let (a, x) = (p / n, p % n);
        let mut out = SparseVec::new();
        for (a1, a2, c) in h.coproduct_terms(a) {
            for (x1, x2, d) in h.coproduct_terms(x) {
                let left = e(a1 * n + x1);
                let right = e(a2 * n + x2);
                out.add_scaled(&left.tensor(&right, n * n), &(c * d));
            }
        }
        out
    };
    let antipode = |mult: &Tensor3, p: usize| {
        let (a, x) = (p / n, p % n);
        let left = h.one().tensor(h.antipode_basis(x), n);
        let right = h.antipode_basis(a).tensor(h.one(), n);
        tensor_product_of(mult, &left, &right)
    };
    assemble(
        format!("dcp({})", pair.name()),
        h,
        product,
        coproduct,
        antipode,
    )
}

/// `H_⇀#H` with `(a#x)(b#y) = a•(x₁⇀b) # x₂y` and
/// `Δ(a#x) = (a¹ # (a²)₋₁x₁) ⊗ ((a²)₀ # x₂)`.
pub fn bosonization(t: &TransmutationData) -> HopfAlgebra {
    let h = t.hopf();
    let n = h.dim();
    let l = t.pair().left_op();
    let e = SparseVec::unit;
    let product = |p: usize, q: usize| {
        let (a, x, b, y) = (p / n, p % n, q / n, q % n);
        let mut out = SparseVec::new();
        for (x1, x2, c) in h.coproduct_terms(x) {
            let acted = l.basis(*x1, b);
            if acted.is_empty() {
                continue;
            }
            let first = t.bullet_of(&e(a), acted);
            out.add_scaled(&first.tensor(h.mul_basis(*x2, y), n), c);
        }
        out
    };
    let coproduct = |p: usize| {
        let (a, x) = (p / n, p % n);
        let mut out = SparseVec::new();
        for (a1, a2, c) in h.coproduct_terms(a) {
            for (&f, d) in t.coaction_basis(*a2).iter() {
                let (minus, zero) = (f / n, f % n);
                for (x1, x2, k) in h.coproduct_terms(x) {
                    let left = e(*a1).tensor(h.mul_basis(minus, *x1), n);
                    let right = e(zero).tensor(&e(*x2), n);
                    out.add_scaled(&left.tensor(&right, n * n), &(&(c * d) * k));
                }
            }
        }
        out
    };
    // S(a#x) = (1 # S(a₋₁x)) (S_⇀(a₀) # 1)
    let antipode = |mult: &Tensor3, p: usize| {
        let (a, x) = (p / n, p % n);
        let mut out = SparseVec::new();
        for (&f, c) in t.coaction_basis(a).iter() {
            let (minus, zero) = (f / n, f % n);
            let z = h.antipode_of(h.mul_basis(minus, x));
            let left = h.one().tensor(&z, n);
            let right = t.s_round_of(&e(zero)).tensor(h.one(), n);
            out.add_scaled(&tensor_product_of(mult, &left, &right), c);
        }
        out
    };
    assemble(
        format!("bos({})", t.pair().name()),
        h,
        product,
        coproduct,
        antipode,
    )
}

fn phi_columns(h: &HopfAlgebra, inverse: bool) -> Vec<SparseVec> {
    let n = h.dim();
    (0..n * n)
        .map(|p| {
            let (x, y) = (p / n, p % n);
            let mut out = SparseVec::new();
            for (x1, x2, c) in h.coproduct_terms(x) {
                let first = if inverse {
                    h.mul(h.antipode_basis(*x2), &SparseVec::unit(y))
                } else {
                    h.mul_basis(*x2, y).clone()
                };
                out.add_scaled(&SparseVec::unit(*x1).tensor(&first, n), c);
            }
            out
        })
        .collect()
}

/// `Φ: H⋈H → H_⇀#H, x⊗y ↦ x₁ ⊗ x₂y` checked against its stated inverse
/// `x⊗y ↦ x₁ ⊗ S(x₂)y` and against every structure map.
pub fn phi_report(
    t: &TransmutationData,
    dcp: &HopfAlgebra,
    bos: &HopfAlgebra,
) -> (Matrix, AxiomReport) {
    let start = Instant::now();
    let h = t.hopf();
    let big = h.dim() * h.dim();
    let phi = phi_columns(h, false);
    let inv = phi_columns(h, true);
    let apply = |cols: &[SparseVec], v: &SparseVec| v.map_linear(|f| cols[f].clone());
    let apply2 = |v: &SparseVec| v.map_linear(|f| phi[f / big].tensor(&phi[f % big], big));
    let e = SparseVec::unit;
    let mut report = AxiomReport::new(format!("isomorphism dcp -> bos for {}", t.pair().name()));

    let w = compare_maps(big, 1, 1, |ix| apply(&inv, &phi[ix[0]]), |ix| e(ix[0]));
    report.push(Check::from_witness("left inverse", w));
    let w = compare_maps(big, 1, 1, |ix| apply(&phi, &inv[ix[0]]), |ix| e(ix[0]));
    report.push(Check::from_witness("right inverse", w));
    let w = compare_maps(
        big,
        2,
        1,
        |ix| apply(&phi, dcp.mul_basis(ix[0], ix[1])),
        |ix| bos.mul(&phi[ix[0]], &phi[ix[1]]),
    );
    report.push(Check::from_witness("multiplication", w));
    let w = compare_maps(
        big,
        1,
        2,
        |ix| bos.comul_of(&phi[ix[0]]),
        |ix| apply2(&dcp.comul_of(&e(ix[0]))),
    );
    report.push(Check::from_witness("comultiplication", w));
    let w = compare_maps(
        big,
        1,
        0,
        |ix| SparseVec::term(0, bos.counit_of(&phi[ix[0]])),
        |ix| SparseVec::term(0, dcp.counit_basis(ix[0]).clone()),
    );
    report.push(Check::from_witness("counit", w));
    let w = compare_maps(big, 0, 1, |_| apply(&phi, dcp.one()), |_| bos.one().clone());
    report.push(Check::from_witness("unit", w));
    let w = compare_maps(
        big,
        1,
        1,
        |ix| apply(&phi, dcp.antipode_basis(ix[0])),
        |ix| bos.antipode_of(&phi[ix[0]]),
    );
    report.push(Check::from_witness("antipode", w));

    (Matrix::from_columns(big, &phi), report.timed(start))
}

/// The matrix of `Φ`, returned only if every intertwiner check passes.
pub fn phi_isomorphism(
    t: &TransmutationData,
    dcp: &HopfAlgebra,
    bos: &HopfAlgebra,
) -> Result<Matrix> {
    let (m, report) = phi_report(t, dcp, bos);
    match report.checks.into_iter().find(|c| !c.passed) {
        None => Ok(m),
        Some(c) => Err(Error::IntertwinerFailure {
            map: c.name,
            witness: c.witness.expect("failed checks carry a witness"),
        }),
    }
}

/// `Φ(x⊗y)` for elements of `H`, on flat vectors of `H ⊗ H`.
pub fn phi_apply(h: &HopfAlgebra, v: &SparseVec) -> SparseVec {
    let cols = phi_columns(h, false);
    v.map_linear(|f| cols[f].clone())
}
