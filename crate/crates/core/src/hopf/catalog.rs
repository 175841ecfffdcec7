//! Built-in Hopf algebras: group algebras and the pointed algebras generated by
//! group-likes of order two and nilpotent skew-primitives.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, SparseVec, Tensor3, Vector};
use crate::scalar::Scalar;

use super::{Bilinear, HopfAlgebra};

/// The group algebra `k[G]` of a finite group given by its multiplication
/// table (`table[i][j]` is the index of `g_i g_j`).
pub fn group_algebra(name: &str, table: &[Vec<usize>], names: &[String]) -> Result<HopfAlgebra> {
    let n = table.len();
    if n == 0 || names.len() != n {
        return Err(Error::NotAGroup(format!(
            "table has {n} rows but {} names",
            names.len()
        )));
    }
    if table
        .iter()
        .any(|row| row.len() != n || row.iter().any(|&k| k >= n))
    {
        return Err(Error::NotAGroup("table is not closed".into()));
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|j| table[e][j] == j && table[j][e] == j))
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if table[table[i][j]][k] != table[i][table[j][k]] {
                    return Err(Error::NotAGroup(format!(
                        "associativity fails at ({}, {}, {})",
                        names[i], names[j], names[k]
                    )));
                }
            }
        }
    }
    let inverse: Vec<usize> = (0..n)
        .map(|i| {
            (0..n)
                .find(|&j| table[i][j] == identity && table[j][i] == identity)
                .ok_or_else(|| Error::NotAGroup(format!("{} has no inverse", names[i])))
        })
        .collect::<Result<_>>()?;

    let mult = Tensor3::from_fn(n, |i, j| SparseVec::unit(table[i][j]));
    let comult_cols: Vec<SparseVec> = (0..n).map(|i| SparseVec::unit(i * n + i)).collect();
    let antipode_cols: Vec<SparseVec> = inverse.iter().map(|&j| SparseVec::unit(j)).collect();
    HopfAlgebra::new(
        name,
        names.to_vec(),
        mult,
        Vector::basis(n, identity),
        Matrix::from_columns(n * n, &comult_cols),
        Vector::new(vec![Scalar::one(); n]),
        Matrix::from_columns(n, &antipode_cols),
    )
}

/// Recovers the group table when `h` is a group algebra in a basis of
/// group elements: every basis vector is group-like and basis products are
/// basis vectors.
pub fn group_table(h: &HopfAlgebra) -> Option<Vec<Vec<usize>>> {
    let n = h.dim();
    for i in 0..n {
        let terms = h.coproduct_terms(i);
        if terms.len() != 1 || terms[0].0 != i || terms[0].1 != i || !terms[0].2.is_one() {
            return None;
        }
    }
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let p = h.mul_basis(i, j);
                    match p.iter().next() {
                        Some((&k, c)) if p.len() == 1 && c.is_one() => Some(k),
                        _ => None,
                    }
                })
                .collect()
        })
        .collect()
}

pub fn cyclic2() -> HopfAlgebra {
    let names = vec!["1".to_string(), "g".to_string()];
    group_algebra("c2", &[vec![0, 1], vec![1, 0]], &names).expect("C2 is a group")
}

/// `k[C2 × C2]` on the basis `[1, g, h, gh]`.
pub fn klein4() -> HopfAlgebra {
    let names: Vec<String> = ["1", "g", "h", "gh"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let table: Vec<Vec<usize>> = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
    group_algebra("c2c2", &table, &names).expect("C2xC2 is a group")
}

/// `k[S3]` with elements written in cycle notation; products compose right
/// to left (`(st)(k) = s(t(k))`).
pub fn symmetric3() -> HopfAlgebra {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [1, 0, 2],
        [2, 1, 0],
        [0, 2, 1],
        [1, 2, 0],
        [2, 0, 1],
    ];
    let names: Vec<String> = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed");
    let table: Vec<Vec<usize>> = perms
        .iter()
        .map(|s| {
            perms
                .iter()
                .map(|t| index([s[t[0]], s[t[1]], s[t[2]]]))
                .collect()
        })
        .collect();
    group_algebra("s3", &table, &names).expect("S3 is a group")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum GenKind {
    /// Group-like of order two.
    Involution,
    /// `x² = 0`, `Δ(x) = x ⊗ 1 + c ⊗ x` for the group-like generator `c`.
    Nilpotent { twist: usize },
}

/// Presentation by generators that pairwise commute, except that a nilpotent
/// generator anticommutes with every group-like generator.
///
/// The basis is the set of ordered monomials `s_0^{b_0} s_1^{b_1} ...` with
/// `b_k ∈ {0,1}`, indexed by the bitmask `Σ b_k 2^k`; structure constants are
/// computed by rewriting words into this normal order.
#[derive(Clone, Debug)]
pub struct SkewPresentation {
    names: Vec<&'static str>,
    kinds: Vec<GenKind>,
}

impl SkewPresentation {
    pub fn new() -> Self {
        SkewPresentation {
            names: Vec::new(),
            kinds: Vec::new(),
        }
    }

    pub fn involution(mut self, name: &'static str) -> Self {
        self.names.push(name);
        self.kinds.push(GenKind::Involution);
        self
    }

    /// Adds a nilpotent generator skew-primitive with respect to `twist`.
    pub fn nilpotent(mut self, name: &'static str, twist: &str) -> Self {
        let t = self
            .names
            .iter()
            .position(|n| *n == twist)
            .expect("twist generator declared first");
        self.names.push(name);
        self.kinds.push(GenKind::Nilpotent { twist: t });
        self
    }

    fn dim(&self) -> usize {
        1 << self.names.len()
    }

    fn word(mask: usize, gens: usize) -> Vec<usize> {
        (0..gens).filter(|k| mask >> k & 1 == 1).collect()
    }

    fn monomial_name(&self, mask: usize) -> String {
        if mask == 0 {
            return "1".into();
        }
        Self::word(mask, self.names.len())
            .into_iter()
            .map(|k| self.names[k])
            .collect()
    }

    fn swap_sign(&self, a: usize, b: usize) -> i64 {
        let nil = |k: usize| matches!(self.kinds[k], GenKind::Nilpotent { .. });
        if nil(a) != nil(b) {
            -1
        } else {
            1
        }
    }

    /// Rewrites a word into `sign · monomial`, or `None` when it vanishes.
    /// Each swap removes one inversion and each cancellation shortens the
    /// word, so the loop terminates.
    pub fn normal_form(&self, word: &[usize]) -> Option<(i64, usize)> {
        let mut w = word.to_vec();
        let mut sign = 1;
        'outer: loop {
            for i in 0..w.len().saturating_sub(1) {
                let (a, b) = (w[i], w[i + 1]);
                if a > b {
                    sign *= self.swap_sign(a, b);
                    w.swap(i, i + 1);
                    continue 'outer;
                }
                if a == b {
                    match self.kinds[a] {
                        GenKind::Involution => {
                            w.drain(i..i + 2);
                            continue 'outer;
                        }
                        GenKind::Nilpotent { .. } => return None,
                    }
                }
            }
            break;
        }
        Some((sign, w.iter().fold(0, |m, k| m | 1 << k)))
    }

    pub fn build(&self, name: &str) -> HopfAlgebra {
        let gens = self.names.len();
        let n = self.dim();
        let mult = Tensor3::from_fn(n, |i, j| {
            let mut w = Self::word(i, gens);
            w.extend(Self::word(j, gens));
            match self.normal_form(&w) {
                Some((s, m)) => SparseVec::term(m, Scalar::from_int(s)),
                None => SparseVec::new(),
            }
        });
        let m = Bilinear::from_tensor(&mult);
        let mul2 = |x: &SparseVec, y: &SparseVec| {
            let mut out = SparseVec::new();
            for (&p, a) in x.iter() {
                for (&q, b) in y.iter() {
                    let l = m.basis(p / n, q / n);
                    let r = m.basis(p % n, q % n);
                    out.add_scaled(&l.tensor(r, n), &(a * b));
                }
            }
            out
        };
        let gen = |k: usize| 1usize << k;
        let gen_comult = |k: usize| match self.kinds[k] {
            GenKind::Involution => SparseVec::unit(gen(k) * n + gen(k)),
            GenKind::Nilpotent { twist } => {
                let mut v = SparseVec::unit(gen(k) * n);
                v.add_term(gen(twist) * n + gen(k), &Scalar::one());
                v
            }
        };
        let gen_antipode = |k: usize| match self.kinds[k] {
            GenKind::Involution => SparseVec::unit(gen(k)),
            // S(x) = x c
            GenKind::Nilpotent { twist } => m.basis(gen(k), gen(twist)).clone(),
        };
        let gen_counit = |k: usize| match self.kinds[k] {
            GenKind::Involution => Scalar::one(),
            GenKind::Nilpotent { .. } => Scalar::zero(),
        };

        let mut comult_cols = Vec::with_capacity(n);
        let mut antipode_cols = Vec::with_capacity(n);
        let mut counit = Vec::with_capacity(n);
        for mask in 0..n {
            let w = Self::word(mask, gens);
            let mut d = SparseVec::unit(0);
            let mut s = SparseVec::unit(0);
            let mut e = Scalar::one();
            for &k in &w {
                d = mul2(&d, &gen_comult(k));
                // S is an anti-homomorphism.
                s = m.apply(&gen_antipode(k), &s);
                e = e * gen_counit(k);
            }
            comult_cols.push(d);
            antipode_cols.push(s);
            counit.push(e);
        }
        let basis = (0..n).map(|mask| self.monomial_name(mask)).collect();
        HopfAlgebra::new(
            name,
            basis,
            mult,
            Vector::basis(n, 0),
            Matrix::from_columns(n * n, &comult_cols),
            Vector::new(counit),
            Matrix::from_columns(n, &antipode_cols),
        )
        .expect("presentation produces consistent shapes")
    }
}

impl Default for SkewPresentation {
    fn default() -> Self {
        Self::new()
    }
}

/// The 8-dimensional algebra generated by `g, h, x` with `g² = h² = 1`,
/// `gh = hg`, `x² = 0`, `gx = -xg`, `hx = -xh`, `Δ(x) = x⊗1 + g⊗x`, on the
/// basis `[1, g, h, gh, x, gx, hx, ghx]`.
pub fn a_c2c2() -> HopfAlgebra {
    SkewPresentation::new()
        .involution("g")
        .involution("h")
        .nilpotent("x", "g")
        .build("a_c2c2")
}

/// Sweedler's 4-dimensional algebra on the basis `[1, g, x, gx]`.
pub fn sweedler_h4() -> HopfAlgebra {
    SkewPresentation::new()
        .involution("g")
        .nilpotent("x", "g")
        .build("h4")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::verify_hopf;

    fn names(h: &HopfAlgebra) -> Vec<&str> {
        h.basis_names().iter().map(String::as_str).collect()
    }

    #[test]
    fn a_c2c2_basis_order() {
        let h = a_c2c2();
        assert_eq!(names(&h), ["1", "g", "h", "gh", "x", "gx", "hx", "ghx"]);
        assert_eq!(names(&sweedler_h4()), ["1", "g", "x", "gx"]);
    }

    #[test]
    fn a_c2c2_products_follow_relations() {
        let h = a_c2c2();
        let (g, x, gx) = (1, 4, 5);
        assert_eq!(h.mul_basis(g, x), &SparseVec::unit(gx));
        assert_eq!(
            h.mul_basis(x, g),
            &SparseVec::term(gx, Scalar::from_int(-1))
        );
        assert!(h.mul_basis(x, x).is_zero());
        assert_eq!(h.mul_basis(g, g), &SparseVec::unit(0));
        // (hx)(gh) = h x g h = -h g x h = h g h x = g x
        assert_eq!(h.mul_basis(6, 3), &SparseVec::unit(gx));
    }

    #[test]
    fn a_c2c2_coproduct_and_antipode_of_x() {
        let h = a_c2c2();
        // Δ(x) = x⊗1 + g⊗x
        let dx = h.comul_of(&SparseVec::unit(4));
        assert_eq!(
            dx,
            [(4 * 8, Scalar::one()), (8 + 4, Scalar::one())]
                .into_iter()
                .collect()
        );
        // S(x) = xg = -gx
        assert_eq!(
            h.antipode_basis(4),
            &SparseVec::term(5, Scalar::from_int(-1))
        );
    }

    #[test]
    fn a_c2c2_antipode_has_order_four() {
        let h = a_c2c2();
        let s2 = h.antipode().mul(h.antipode()).unwrap();
        // S²(x) = S(xg) = g·xg = -x, so S² is the parity of the x-degree.
        for i in 0..8 {
            let sign = if i < 4 { 1 } else { -1 };
            assert_eq!(s2.column(i), SparseVec::term(i, Scalar::from_int(sign)));
        }
        assert!(s2.mul(&s2).unwrap().is_identity());
    }

    #[test]
    fn h4_embeds_into_a_c2c2() {
        let small = sweedler_h4();
        let big = a_c2c2();
        let embed = [0usize, 1, 4, 5];
        let push = |v: &SparseVec| -> SparseVec {
            v.iter().map(|(&i, c)| (embed[i], c.clone())).collect()
        };
        let push2 = |v: &SparseVec| -> SparseVec {
            v.iter()
                .map(|(&f, c)| (embed[f / 4] * 8 + embed[f % 4], c.clone()))
                .collect()
        };
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(
                    push(small.mul_basis(i, j)),
                    *big.mul_basis(embed[i], embed[j])
                );
            }
            assert_eq!(
                push2(&small.comul_of(&SparseVec::unit(i))),
                big.comul_of(&SparseVec::unit(embed[i]))
            );
            assert_eq!(push(small.antipode_basis(i)), *big.antipode_basis(embed[i]));
        }
    }

    #[test]
    fn group_algebra_shapes() {
        let c2 = cyclic2();
        assert_eq!(c2.dim(), 2);
        assert!(c2.antipode().is_identity());
        let s3 = symmetric3();
        assert_eq!(s3.dim(), 6);
        assert!(verify_hopf(&s3).passed());
        assert!(group_table(&s3).is_some());
        assert!(group_table(&a_c2c2()).is_none());
    }

    #[test]
    fn s3_conjugation_sample() {
        let s3 = symmetric3();
        let t = group_table(&s3).unwrap();
        let inv = |i: usize| (0..6).find(|&j| t[i][j] == 0).unwrap();
        // (12)(13)(12)^{-1} = (23)
        assert_eq!(t[t[1][2]][inv(1)], 3);
    }

    #[test]
    fn broken_tables_are_rejected() {
        let names: Vec<String> = ["e", "p", "q"].iter().map(|s| s.to_string()).collect();
        // identity e, but p·(p·q) ≠ (p·p)·q
        let table = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 1, 0]];
        match group_algebra("bad", &table, &names) {
            Err(Error::NotAGroup(msg)) => assert!(msg.contains("associativity"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
        let table = vec![vec![1, 1, 1], vec![1, 1, 1], vec![1, 1, 1]];
        assert!(matches!(
            group_algebra("bad", &table, &names),
            Err(Error::NotAGroup(_))
        ));
    }
}
