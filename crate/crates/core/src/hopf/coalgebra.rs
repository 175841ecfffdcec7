//! Group-like and skew-primitive elements.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, SparseVec, Vector};
use crate::scalar::Scalar;

use super::HopfAlgebra;

pub fn is_grouplike(h: &HopfAlgebra, v: &SparseVec) -> bool {
    h.counit_of(v).is_one() && h.comul_of(v) == v.tensor(v, h.dim())
}

/// `T_p = (e_p^* ⊗ id) Δ` as a dense rational matrix.
fn slice_operator(h: &HopfAlgebra, p: usize) -> Vec<Vec<BigRational>> {
    let n = h.dim();
    let mut t = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        for (a, b, c) in h.coproduct_terms(i) {
            if *a == p {
                t[*b][i] += c.as_rational().expect("constant");
            }
        }
    }
    t
}

/// Characteristic polynomial `det(λI - A)`, little-endian, by
/// Faddeev–LeVerrier.
fn char_poly(a: &[Vec<BigRational>]) -> Vec<BigRational> {
    let n = a.len();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut m = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![BigRational::zero(); n]; n];
        for r in 0..n {
            for c in 0..n {
                let mut s = BigRational::zero();
                for t in 0..n {
                    if !a[r][t].is_zero() && !m[t][c].is_zero() {
                        s += &a[r][t] * &m[t][c];
                    }
                }
                next[r][c] = s;
            }
            next[r][r] += &coeffs[n - k + 1];
        }
        m = next;
        let mut trace = BigRational::zero();
        for r in 0..n {
            for t in 0..n {
                trace += &a[r][t] * &m[t][r];
            }
        }
        coeffs[n - k] = -trace / BigRational::from_integer(BigInt::from(k));
    }
    coeffs
}

fn divisors(k: &BigInt) -> Vec<BigInt> {
    let k = k.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= k {
        if (&k % &d).is_zero() {
            out.push(d.clone());
            let q = &k / &d;
            if q != d {
                out.push(q);
            }
        }
        d += 1;
    }
    out
}

/// Distinct rational roots of a polynomial with rational coefficients.
fn rational_roots(coeffs: &[BigRational]) -> Vec<BigRational> {
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    while ints.last().is_some_and(Zero::is_zero) {
        ints.pop();
    }
    let mut roots = Vec::new();
    let zeros = ints.iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        roots.push(BigRational::zero());
        ints.drain(..zeros);
    }
    if ints.len() <= 1 {
        return roots;
    }
    let eval = |x: &BigRational| {
        ints.iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * x + BigRational::from_integer(c.clone())
        })
    };
    let lead = ints.last().expect("nonempty").clone();
    for p in divisors(&ints[0]) {
        for q in divisors(&lead) {
            for s in [p.clone(), -p.clone()] {
                let x = BigRational::new(s, q.clone());
                if !roots.contains(&x) && eval(&x).is_zero() {
                    roots.push(x);
                }
            }
        }
    }
    roots
}

fn to_scalar_matrix(rows: &[Vec<BigRational>]) -> Matrix {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(Scalar::from_rational).collect())
            .collect(),
    )
    .expect("square")
}

/// Group-like elements of `h`.
///
/// A group-like `v` satisfies `T_p v = v_p v` for every basis index `p`, so
/// its coordinates are joint eigenvalues of the operators `T_p`. The search
/// fixes one coordinate at a time among the rational eigenvalues of `T_p`,
/// shrinking the joint eigenspace, and checks the full equations at the
/// leaves.
pub fn grouplikes(h: &HopfAlgebra) -> Result<Vec<SparseVec>> {
    if h.is_parametric() {
        return Err(Error::PreconditionNotMet(
            "group-likes are computed only for constant structure constants".into(),
        ));
    }
    let n = h.dim();
    let ops: Vec<Matrix> = (0..n)
        .map(|p| to_scalar_matrix(&slice_operator(h, p)))
        .collect();
    let eigen: Vec<Vec<Scalar>> = (0..n)
        .map(|p| {
            let mut roots = rational_roots(&char_poly(&slice_operator(h, p)));
            roots.sort();
            roots.iter().map(Scalar::from_rational).collect()
        })
        .collect();

    let mut found: Vec<SparseVec> = Vec::new();
    let start: Vec<Vector> = (0..n).map(|i| Vector::basis(n, i)).collect();
    search(h, &ops, &eigen, 0, start, &mut Vec::new(), &mut found);
    found.sort_by_key(|v| v.iter().map(|(&i, _)| i).collect::<Vec<_>>());
    Ok(found)
}

fn search(
    h: &HopfAlgebra,
    ops: &[Matrix],
    eigen: &[Vec<Scalar>],
    p: usize,
    space: Vec<Vector>,
    chosen: &mut Vec<Scalar>,
    found: &mut Vec<SparseVec>,
) {
    let n = h.dim();
    if p == n {
        let v = SparseVec::from_dense(chosen);
        if !v.is_zero() && is_grouplike(h, &v) && !found.contains(&v) {
            found.push(v);
        }
        return;
    }
    let basis = Matrix::from_columns(n, &space.iter().map(Vector::to_sparse).collect::<Vec<_>>());
    for lambda in &eigen[p] {
        // restrict to ker(T_p - λ) inside the current space
        let mut shifted = ops[p].clone();
        for i in 0..n {
            shifted[(i, i)] = &shifted[(i, i)] - lambda;
        }
        let restricted = shifted.mul(&basis).expect("shapes agree");
        let coords = restricted.nullspace();
        if coords.is_empty() {
            continue;
        }
        let next: Vec<Vector> = coords
            .iter()
            .map(|c| Vector::from_sparse(&basis.apply(&c.to_sparse()), n))
            .collect();
        chosen.push(lambda.clone());
        if prefix_reachable(&next, chosen) {
            search(h, ops, eigen, p + 1, next, chosen, found);
        }
        chosen.pop();
    }
}

/// Whether some vector of the span has the given leading coordinates.
fn prefix_reachable(space: &[Vector], prefix: &[Scalar]) -> bool {
    let k = prefix.len();
    let coeff_rows: Vec<Vec<Scalar>> = (0..k)
        .map(|q| space.iter().map(|v| v.get(q).clone()).collect())
        .collect();
    let augmented: Vec<Vec<Scalar>> = coeff_rows
        .iter()
        .zip(prefix)
        .map(|(row, t)| {
            let mut r = row.clone();
            r.push(t.clone());
            r
        })
        .collect();
    let rank = |rows: Vec<Vec<Scalar>>| Matrix::from_rows(rows).expect("rectangular").rank();
    rank(coeff_rows) == rank(augmented)
}

/// Basis of `P_{g,h} = {v : Δ(v) = v⊗g + h⊗v}`.
pub fn skew_primitives(h: &HopfAlgebra, g: &SparseVec, k: &SparseVec) -> Result<Vec<Vector>> {
    for v in [g, k] {
        if !is_grouplike(h, v) {
            return Err(Error::NotGroupLike(format!("{v:?}")));
        }
    }
    let n = h.dim();
    let constraint = Matrix::from_fn_columns(n * n, n, |i| {
        let e = SparseVec::unit(i);
        h.comul_of(&e).sub(&e.tensor(g, n)).sub(&k.tensor(&e, n))
    });
    Ok(constraint.nullspace())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{a_c2c2, sweedler_h4, symmetric3};
    use crate::linalg::same_span;

    #[test]
    fn char_poly_and_roots() {
        let q = |k: i64| BigRational::from_integer(BigInt::from(k));
        // diag(2, 3)
        let a = vec![vec![q(2), q(0)], vec![q(0), q(3)]];
        assert_eq!(char_poly(&a), vec![q(6), q(-5), q(1)]);
        let mut r = rational_roots(&char_poly(&a));
        r.sort();
        assert_eq!(r, vec![q(2), q(3)]);
        // λ²(2λ - 1)
        let r = rational_roots(&[q(0), q(0), q(-1), q(2)]);
        assert_eq!(
            r,
            vec![q(0), BigRational::new(BigInt::from(1), BigInt::from(2))]
        );
    }

    #[test]
    fn grouplikes_of_catalog() {
        let h = a_c2c2();
        let g = grouplikes(&h).unwrap();
        let expect: Vec<SparseVec> = (0..4).map(SparseVec::unit).collect();
        assert_eq!(g, expect);

        assert_eq!(
            grouplikes(&sweedler_h4()).unwrap(),
            vec![SparseVec::unit(0), SparseVec::unit(1)]
        );

        let s3 = grouplikes(&symmetric3()).unwrap();
        assert_eq!(s3, (0..6).map(SparseVec::unit).collect::<Vec<_>>());
    }

    #[test]
    fn grouplikes_solve_the_equations() {
        let h = a_c2c2();
        for v in grouplikes(&h).unwrap() {
            assert_eq!(h.comul_of(&v), v.tensor(&v, 8));
            assert!(h.counit_of(&v).is_one());
        }
    }

    #[test]
    fn skew_primitive_table() {
        let h = a_c2c2();
        let el = |t: &[(&str, i64)]| Vector::from_sparse(&h.element(t), 8);
        let names = ["1", "g", "h", "gh"];
        let diff = |a: &str, b: &str| vec![el(&[(a, 1), (b, -1)])];
        let table: Vec<((&str, &str), Vec<Vector>)> = vec![
            (("1", "h"), diff("1", "h")),
            (("h", "1"), diff("1", "h")),
            (("1", "gh"), diff("1", "gh")),
            (("gh", "1"), diff("1", "gh")),
            (("g", "h"), diff("g", "h")),
            (("h", "g"), diff("g", "h")),
            (("g", "gh"), diff("g", "gh")),
            (("gh", "g"), diff("g", "gh")),
            (
                ("1", "g"),
                vec![el(&[("1", 1), ("g", -1)]), el(&[("x", 1)])],
            ),
            (
                ("g", "1"),
                vec![el(&[("1", 1), ("g", -1)]), el(&[("gx", 1)])],
            ),
            (
                ("h", "gh"),
                vec![el(&[("h", 1), ("gh", -1)]), el(&[("hx", 1)])],
            ),
            (
                ("gh", "h"),
                vec![el(&[("h", 1), ("gh", -1)]), el(&[("ghx", 1)])],
            ),
        ];
        for a in names {
            for b in names {
                let got =
                    skew_primitives(&h, &h.element(&[(a, 1)]), &h.element(&[(b, 1)])).unwrap();
                match table.iter().find(|(k, _)| *k == (a, b)) {
                    Some((_, want)) => {
                        assert_eq!(got.len(), want.len(), "P_{{{a},{b}}}");
                        assert!(same_span(&got, want), "P_{{{a},{b}}}");
                    }
                    None => assert!(got.is_empty(), "P_{{{a},{b}}} should vanish"),
                }
            }
        }
    }

    #[test]
    fn skew_primitives_reject_non_grouplikes() {
        let h = a_c2c2();
        let x = h.element(&[("x", 1)]);
        assert!(matches!(
            skew_primitives(&h, &x, h.one()),
            Err(Error::NotGroupLike(_))
        ));
    }
}
