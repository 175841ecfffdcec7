//! Finite-dimensional Hopf algebras given by structure constants.

mod catalog;
mod coalgebra;

use std::time::Instant;

pub use catalog::{
    a_c2c2, cyclic2, group_algebra, group_table, klein4, sweedler_h4, symmetric3, SkewPresentation,
};
pub use coalgebra::{grouplikes, is_grouplike, skew_primitives};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, SparseVec, Tensor3, Vector};
use crate::report::{compare_maps, AxiomReport, Check};
use crate::scalar::Scalar;

/// A bilinear map `H ⊗ H → H` with cached sparse images of basis pairs.
#[derive(Clone, Debug)]
pub struct Bilinear {
    n: usize,
    images: Vec<SparseVec>,
}

impl Bilinear {
    pub fn from_tensor(t: &Tensor3) -> Self {
        let n = t.dim();
        let images = (0..n * n).map(|ij| t.image(ij / n, ij % n)).collect();
        Bilinear { n, images }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.images[i * self.n + j]
    }

    pub fn apply(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&i, a) in x.iter() {
            for (&j, b) in y.iter() {
                out.add_scaled(self.basis(i, j), &(a * b));
            }
        }
        out
    }

    pub fn apply_basis_left(&self, i: usize, y: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&j, b) in y.iter() {
            out.add_scaled(self.basis(i, j), b);
        }
        out
    }

    pub fn to_tensor(&self) -> Tensor3 {
        Tensor3::from_fn(self.n, |i, j| self.basis(i, j).clone())
    }
}

/// One term `c · e_i ⊗ e_j` of a coproduct.
pub type CoTerm = (usize, usize, Scalar);

#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    name: String,
    basis: Vec<String>,
    mult: Tensor3,
    unit: Vector,
    comult: Matrix,
    counit: Vector,
    antipode: Matrix,
    mult_op: Bilinear,
    unit_sparse: SparseVec,
    comult_terms: Vec<Vec<CoTerm>>,
    antipode_cols: Vec<SparseVec>,
}

impl HopfAlgebra {
    /// Assembles an algebra from its structure maps. `comult` is `n² × n`
    /// with column `i` equal to `Δ(e_i)`; `antipode` is `n × n` with column
    /// `i` equal to `S(e_i)`. Only shapes are validated here; the axioms are
    /// checked by [`verify_hopf`].
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        mult: Tensor3,
        unit: Vector,
        comult: Matrix,
        counit: Vector,
        antipode: Matrix,
    ) -> Result<Self> {
        let n = basis.len();
        let mismatch = |what: &str| Err(Error::DimensionMismatch(format!("{what} for dim {n}")));
        if n == 0 {
            return mismatch("empty basis");
        }
        if mult.dim() != n {
            return mismatch("multiplication tensor");
        }
        if unit.dim() != n {
            return mismatch("unit vector");
        }
        if comult.rows() != n * n || comult.cols() != n {
            return mismatch("comultiplication matrix");
        }
        if counit.dim() != n {
            return mismatch("counit covector");
        }
        if antipode.rows() != n || antipode.cols() != n {
            return mismatch("antipode matrix");
        }
        let mult_op = Bilinear::from_tensor(&mult);
        let comult_terms = (0..n)
            .map(|i| {
                comult
                    .column(i)
                    .iter()
                    .map(|(&f, c)| (f / n, f % n, c.clone()))
                    .collect()
            })
            .collect();
        let antipode_cols = antipode.columns();
        let unit_sparse = unit.to_sparse();
        Ok(HopfAlgebra {
            name: name.into(),
            basis,
            mult,
            unit,
            comult,
            counit,
            antipode,
            mult_op,
            unit_sparse,
            comult_terms,
            antipode_cols,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn basis_index(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == name)
    }

    pub fn mult(&self) -> &Tensor3 {
        &self.mult
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn comult(&self) -> &Matrix {
        &self.comult
    }

    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn mult_op(&self) -> &Bilinear {
        &self.mult_op
    }

    /// True when some structure constant depends on the formal parameter.
    pub fn is_parametric(&self) -> bool {
        !(self.mult.is_constant()
            && self.unit.entries().iter().all(Scalar::is_constant)
            && self.counit.entries().iter().all(Scalar::is_constant)
            && self
                .comult
                .columns()
                .iter()
                .flat_map(|c| c.iter().map(|(_, v)| v.is_constant()))
                .all(|b| b)
            && self
                .antipode
                .columns()
                .iter()
                .flat_map(|c| c.iter().map(|(_, v)| v.is_constant()))
                .all(|b| b))
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Same algebra with a replaced antipode matrix.
    pub fn with_antipode(&self, antipode: Matrix) -> Result<Self> {
        HopfAlgebra::new(
            self.name.clone(),
            self.basis.clone(),
            self.mult.clone(),
            self.unit.clone(),
            self.comult.clone(),
            self.counit.clone(),
            antipode,
        )
    }

    // ---- element operations on sparse coordinate vectors ----

    pub fn one(&self) -> &SparseVec {
        &self.unit_sparse
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        self.mult_op.apply(x, y)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        self.mult_op.basis(i, j)
    }

    /// Product of several elements, left to right.
    pub fn mul_all(&self, factors: &[&SparseVec]) -> SparseVec {
        let mut acc = self.unit_sparse.clone();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    pub fn counit_basis(&self, i: usize) -> &Scalar {
        self.counit.get(i)
    }

    pub fn counit_of(&self, x: &SparseVec) -> Scalar {
        x.iter().map(|(&i, c)| c * self.counit.get(i)).sum()
    }

    pub fn antipode_basis(&self, i: usize) -> &SparseVec {
        &self.antipode_cols[i]
    }

    pub fn antipode_of(&self, x: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&i, c) in x.iter() {
            out.add_scaled(&self.antipode_cols[i], c);
        }
        out
    }

    pub fn coproduct_terms(&self, i: usize) -> &[CoTerm] {
        &self.comult_terms[i]
    }

    /// `Δ(x)` as a flat vector on `H ⊗ H`.
    pub fn comul_of(&self, x: &SparseVec) -> SparseVec {
        let n = self.dim();
        let mut out = SparseVec::new();
        for (&i, c) in x.iter() {
            for (a, b, d) in &self.comult_terms[i] {
                out.add_term(a * n + b, &(c * d));
            }
        }
        out
    }

    /// Iterated coproduct `Δ^{(legs-1)}(e_i)` as a list of basis tuples with
    /// coefficients (`legs ≥ 1`).
    pub fn sweedler(&self, i: usize, legs: usize) -> Vec<(Vec<usize>, Scalar)> {
        assert!(legs >= 1);
        let mut terms = vec![(vec![i], Scalar::one())];
        for _ in 1..legs {
            let mut next = Vec::new();
            for (idx, c) in &terms {
                let last = *idx.last().expect("nonempty");
                for (a, b, d) in &self.comult_terms[last] {
                    let mut t = idx[..idx.len() - 1].to_vec();
                    t.push(*a);
                    t.push(*b);
                    next.push((t, c * d));
                }
            }
            terms = next;
        }
        terms
    }

    /// Product on `H ⊗ H` (componentwise), on flat vectors.
    pub fn mul_tensor2(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let n = self.dim();
        let mut out = SparseVec::new();
        for (&p, a) in x.iter() {
            for (&q, b) in y.iter() {
                let left = self.mul_basis(p / n, q / n);
                let right = self.mul_basis(p % n, q % n);
                out.add_scaled(&left.tensor(right, n), &(a * b));
            }
        }
        out
    }

    /// The element `e_i` as a sparse vector.
    pub fn e(&self, i: usize) -> SparseVec {
        SparseVec::unit(i)
    }

    /// Integer combination of named basis elements, e.g. `[("1", 1), ("g", -1)]`.
    pub fn element(&self, terms: &[(&str, i64)]) -> SparseVec {
        terms
            .iter()
            .map(|(name, c)| {
                let i = self
                    .basis_index(name)
                    .unwrap_or_else(|| panic!("no basis element `{name}`"));
                (i, Scalar::from_int(*c))
            })
            .collect()
    }
}

/// Checks every Hopf algebra axiom exactly.
pub fn verify_hopf(h: &HopfAlgebra) -> AxiomReport {
    let start = Instant::now();
    let n = h.dim();
    let one = h.one();
    let mut report = AxiomReport::new(format!("Hopf axioms of {}", h.name()));

    let w = compare_maps(
        n,
        3,
        1,
        |ix| h.mul(h.mul_basis(ix[0], ix[1]), &h.e(ix[2])),
        |ix| h.mul(&h.e(ix[0]), h.mul_basis(ix[1], ix[2])),
    );
    report.push(Check::from_witness("associativity", w));

    let w = compare_maps(n, 1, 1, |ix| h.mul(one, &h.e(ix[0])), |ix| h.e(ix[0]));
    report.push(Check::from_witness("left-unit", w));
    let w = compare_maps(n, 1, 1, |ix| h.mul(&h.e(ix[0]), one), |ix| h.e(ix[0]));
    report.push(Check::from_witness("right-unit", w));

    let w = compare_maps(
        n,
        1,
        3,
        |ix| {
            let mut out = SparseVec::new();
            for (a, b, c) in h.coproduct_terms(ix[0]) {
                out.add_scaled(&h.comul_of(&h.e(*a)).tensor(&h.e(*b), n), c);
            }
            out
        },
        |ix| {
            let mut out = SparseVec::new();
            for (a, b, c) in h.coproduct_terms(ix[0]) {
                out.add_scaled(&h.e(*a).tensor(&h.comul_of(&h.e(*b)), n * n), c);
            }
            out
        },
    );
    report.push(Check::from_witness("coassociativity", w));

    let w = compare_maps(
        n,
        1,
        1,
        |ix| {
            h.coproduct_terms(ix[0])
                .iter()
                .map(|(a, b, c)| (*b, c * h.counit_basis(*a)))
                .collect()
        },
        |ix| h.e(ix[0]),
    );
    report.push(Check::from_witness("left-counit", w));
    let w = compare_maps(
        n,
        1,
        1,
        |ix| {
            h.coproduct_terms(ix[0])
                .iter()
                .map(|(a, b, c)| (*a, c * h.counit_basis(*b)))
                .collect()
        },
        |ix| h.e(ix[0]),
    );
    report.push(Check::from_witness("right-counit", w));

    let w = compare_maps(
        n,
        2,
        2,
        |ix| h.comul_of(h.mul_basis(ix[0], ix[1])),
        |ix| h.mul_tensor2(&h.comul_of(&h.e(ix[0])), &h.comul_of(&h.e(ix[1]))),
    );
    report.push(Check::from_witness("comult-multiplicative", w));

    let w = compare_maps(
        n,
        2,
        0,
        |ix| SparseVec::term(0, h.counit_of(h.mul_basis(ix[0], ix[1]))),
        |ix| SparseVec::term(0, h.counit_basis(ix[0]) * h.counit_basis(ix[1])),
    );
    report.push(Check::from_witness("counit-multiplicative", w));

    let w = compare_maps(n, 0, 2, |_| h.comul_of(one), |_| one.tensor(one, n));
    report.push(Check::from_witness("comult-unit", w));
    let w = compare_maps(
        n,
        0,
        0,
        |_| SparseVec::term(0, h.counit_of(one)),
        |_| SparseVec::unit(0),
    );
    report.push(Check::from_witness("counit-unit", w));

    let unit_counit = |i: usize| one.scale(h.counit_basis(i));
    let w = compare_maps(
        n,
        1,
        1,
        |ix| {
            let mut out = SparseVec::new();
            for (a, b, c) in h.coproduct_terms(ix[0]) {
                out.add_scaled(&h.mul(h.antipode_basis(*a), &h.e(*b)), c);
            }
            out
        },
        |ix| unit_counit(ix[0]),
    );
    report.push(Check::from_witness("antipode-left", w));
    let w = compare_maps(
        n,
        1,
        1,
        |ix| {
            let mut out = SparseVec::new();
            for (a, b, c) in h.coproduct_terms(ix[0]) {
                out.add_scaled(&h.mul(&h.e(*a), h.antipode_basis(*b)), c);
            }
            out
        },
        |ix| unit_counit(ix[0]),
    );
    report.push(Check::from_witness("antipode-right", w));

    report.timed(start)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_algebras_pass() {
        for h in [cyclic2(), klein4(), symmetric3(), sweedler_h4(), a_c2c2()] {
            let r = verify_hopf(&h);
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn broken_antipode_is_caught_at_x() {
        let h = a_c2c2();
        let x = h.basis_index("x").unwrap();
        let mut s = h.antipode().clone();
        for r in 0..h.dim() {
            s[(r, x)] = Scalar::zero();
        }
        s[(x, x)] = Scalar::one();
        let broken = h.with_antipode(s).unwrap();
        let report = verify_hopf(&broken);
        let check = report.check("antipode-left").unwrap();
        assert!(!check.passed);
        // m(S⊗id)Δ(x) = S(x)·1 + S(g)·x = x + gx, versus ε(x)1 = 0.
        let w = check.witness.as_ref().unwrap();
        assert_eq!(w.input, vec![x]);
        assert_eq!(w.output, vec![x]);
        assert_eq!((w.lhs.as_str(), w.rhs.as_str()), ("1", "0"));
        assert!(report.check("associativity").unwrap().passed);
    }

    #[test]
    fn unit_and_antipode_of_one() {
        for h in [cyclic2(), klein4(), symmetric3(), sweedler_h4(), a_c2c2()] {
            assert!(h.counit_of(h.one()).is_one());
            assert_eq!(&h.antipode_of(h.one()), h.one());
        }
    }

    #[test]
    fn dimension_mismatch_on_construction() {
        let h = cyclic2();
        let err = HopfAlgebra::new(
            "bad",
            h.basis_names().to_vec(),
            h.mult().clone(),
            h.unit().clone(),
            h.comult().clone(),
            h.counit().clone(),
            Matrix::identity(3),
        );
        assert!(matches!(err, Err(Error::DimensionMismatch(_))));
    }
}
