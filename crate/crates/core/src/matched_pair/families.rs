//! The two one-parameter families of matched pairs of actions on `a_c2c2`.
//!
//! The left actions are transcribed as full tables. The right actions are
//! expanded from their values on generators using `x↼(yz) = (x↼y)↼z` and
//! `xy↼a = (x↼(y₁⇀a₁))(y₂↼a₂)`, so they are computed independently of the
//! closed formula `x↼y = S(x₁⇀y₁)x₂y₂`.

use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

use crate::hopf::{a_c2c2, Bilinear, HopfAlgebra};
use crate::linalg::{SparseVec, Tensor3};
use crate::scalar::Scalar;

use super::ActionPair;

type Table = [[&'static str; 8]; 8];

const GROUP_ROW: [&str; 8] = ["1", "g", "h", "gh", "x", "gx", "hx", "ghx"];
const SIGNED_ROW: [&str; 8] = ["1", "g", "h", "gh", "-x", "-gx", "-hx", "-ghx"];
const NIL_ROW: [&str; 8] = ["0", "0", "0", "0", "A(1-g)", "A(1-g)", "A(gh-h)", "A(gh-h)"];
const NIL_ROW_TWISTED: [&str; 8] = ["0", "0", "0", "0", "A(1-g)", "A(1-g)", "A(h-gh)", "A(h-gh)"];

const TABLE1: Table = [
    GROUP_ROW, SIGNED_ROW, SIGNED_ROW, GROUP_ROW, NIL_ROW, NIL_ROW, NIL_ROW, NIL_ROW,
];

const TABLE2: Table = [
    GROUP_ROW,
    SIGNED_ROW,
    ["1", "g", "gh", "h", "-x", "-gx", "ghx", "hx"],
    ["1", "g", "gh", "h", "x", "gx", "-ghx", "-hx"],
    NIL_ROW,
    NIL_ROW,
    NIL_ROW_TWISTED,
    NIL_ROW_TWISTED,
];

/// Cell syntax: `0`, an optionally negated basis name, or `A(p-q)` for
/// `α(p - q)`.
fn cell(h: &HopfAlgebra, alpha: &Scalar, text: &str) -> SparseVec {
    if text == "0" {
        return SparseVec::new();
    }
    if let Some(inner) = text.strip_prefix("A(").and_then(|t| t.strip_suffix(')')) {
        let (p, q) = inner.split_once('-').expect("A(p-q)");
        return h.element(&[(p, 1), (q, -1)]).scale(alpha);
    }
    match text.strip_prefix('-') {
        Some(name) => h.element(&[(name, -1)]),
        None => h.element(&[(text, 1)]),
    }
}

fn left_table(h: &HopfAlgebra, alpha: &Scalar, table: &Table) -> Tensor3 {
    Tensor3::from_fn(8, |i, j| cell(h, alpha, table[i][j]))
}

/// Values of `s ↼ t` on generators, keyed by basis index.
fn right_generators(
    h: &HopfAlgebra,
    alpha: &Scalar,
    h_on_h: &str,
) -> HashMap<(usize, usize), SparseVec> {
    let (g, hh, x) = (1, 2, 4);
    let data = [
        ((g, g), "g"),
        ((hh, g), "h"),
        ((g, hh), "g"),
        ((hh, hh), h_on_h),
        ((x, g), "-x"),
        ((x, hh), "-x"),
        ((g, x), "0"),
        ((hh, x), "0"),
        ((x, x), "A(1-g)"),
    ];
    data.into_iter()
        .map(|(k, t)| (k, cell(h, alpha, t)))
        .collect()
}

/// Extends a right action from generators to the whole basis. Basis
/// monomials are ordered products of generators, indexed by bitmask.
struct RightExpansion<'a> {
    h: &'a HopfAlgebra,
    left: &'a Bilinear,
    generators: HashMap<(usize, usize), SparseVec>,
    memo: RefCell<HashMap<(usize, usize), SparseVec>>,
}

impl RightExpansion<'_> {
    /// `e_x ↼ s` for a generator `s`.
    fn on_generator(&self, x: usize, s: usize) -> SparseVec {
        if let Some(v) = self.memo.borrow().get(&(x, s)) {
            return v.clone();
        }
        let h = self.h;
        let v = if x == 0 {
            h.one().scale(h.counit_basis(s))
        } else if x.is_power_of_two() {
            self.generators[&(x, s)].clone()
        } else {
            // e_x = y · e_rest with y the first generator
            let y = x & x.wrapping_neg();
            let rest = x ^ y;
            let mut out = SparseVec::new();
            for (r1, r2, c) in h.coproduct_terms(rest) {
                for (s1, s2, d) in h.coproduct_terms(s) {
                    let b = self.left.basis(*r1, *s1);
                    if b.is_empty() {
                        continue;
                    }
                    let first = self.element(&SparseVec::unit(y), b);
                    let second = self.basis(*r2, *s2);
                    out.add_scaled(&h.mul(&first, &second), &(c * d));
                }
            }
            out
        };
        self.memo.borrow_mut().insert((x, s), v.clone());
        v
    }

    /// `e_x ↼ e_a`, folding over the generators of `e_a`.
    fn basis(&self, x: usize, a: usize) -> SparseVec {
        let mut acc = SparseVec::unit(x);
        for bit in (0..usize::BITS)
            .map(|k| 1usize << k)
            .take_while(|&b| b <= a)
        {
            if a & bit == 0 {
                continue;
            }
            let mut next = SparseVec::new();
            for (&k, c) in acc.iter() {
                next.add_scaled(&self.on_generator(k, bit), c);
            }
            acc = next;
        }
        acc
    }

    fn element(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&i, a) in x.iter() {
            for (&j, b) in y.iter() {
                out.add_scaled(&self.basis(i, j), &(a * b));
            }
        }
        out
    }
}

fn family(name: &str, table: &Table, h_on_h: &str, alpha: Scalar) -> ActionPair {
    let h = Arc::new(a_c2c2());
    let left = left_table(&h, &alpha, table);
    let left_op = Bilinear::from_tensor(&left);
    let expansion = RightExpansion {
        h: &h,
        left: &left_op,
        generators: right_generators(&h, &alpha, h_on_h),
        memo: RefCell::new(HashMap::new()),
    };
    let images: Vec<SparseVec> = (0..64).map(|ij| expansion.basis(ij / 8, ij % 8)).collect();
    let right = Tensor3::from_fn(8, |i, j| images[i * 8 + j].clone());
    ActionPair::new(name, h.clone(), left, right).expect("dimension 8")
}

/// First family on `a_c2c2`: `h⇀h = h↼h = h`.
pub fn family1(alpha: Scalar) -> ActionPair {
    family("family1", &TABLE1, "h", alpha)
}

/// Second family on `a_c2c2`: `h⇀h = h↼h = gh`.
pub fn family2(alpha: Scalar) -> ActionPair {
    family("family2", &TABLE2, "gh", alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matched_pair::{
        check_antipode_identities, derive_right_action, verify_matched_pair,
    };

    fn monomial(i: usize, j: usize, k: usize) -> usize {
        (i % 2) + 2 * (j % 2) + 4 * k
    }

    fn sign(e: usize) -> i64 {
        if e % 2 == 0 {
            1
        } else {
            -1
        }
    }

    #[test]
    fn both_families_are_matched_pairs() {
        for p in [family1(Scalar::param()), family2(Scalar::param())] {
            let r = verify_matched_pair(&p);
            assert!(r.passed(), "{r}");
            let r = check_antipode_identities(&p);
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn expanded_right_matches_derived_right() {
        for p in [family1(Scalar::param()), family2(Scalar::param())] {
            assert_eq!(
                &derive_right_action(p.hopf(), p.left()),
                p.right(),
                "{}",
                p.name()
            );
        }
    }

    #[test]
    fn sample_right_values() {
        let p = family1(Scalar::param());
        let h = p.hopf();
        let (g, x) = (1, 4);
        assert_eq!(p.right_op().basis(x, g), &h.element(&[("x", -1)]));
        assert!(p.right_op().basis(g, x).is_empty());
    }

    #[test]
    fn second_family_closed_forms() {
        let a = Scalar::param();
        let p = family2(a.clone());
        let h = p.hopf();
        let one_minus_g = h.element(&[("1", 1), ("g", -1)]);
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        let gl = |u, v| monomial(u, v, 0);
                        let nl = |u, v| monomial(u, v, 1);
                        let left = p.left_op();
                        assert_eq!(
                            left.basis(gl(i, j), gl(k, l)),
                            &SparseVec::unit(gl(k + j * l, l))
                        );
                        assert!(left.basis(nl(i, j), gl(k, l)).is_empty());
                        assert_eq!(
                            left.basis(gl(i, j), nl(k, l)),
                            &SparseVec::term(
                                nl(k + j * l, l),
                                Scalar::from_int(sign(i + j * (l + 1)))
                            )
                        );
                        let hl = SparseVec::unit(gl(0, l));
                        let want = h
                            .mul(&one_minus_g, &hl)
                            .scale(&(&a * Scalar::from_int(sign((j + 1) * l))));
                        assert_eq!(left.basis(nl(i, j), nl(k, l)), &want);

                        let hj = SparseVec::unit(gl(0, j));
                        let want = h
                            .mul(&one_minus_g, &hj)
                            .scale(&(&a * Scalar::from_int(sign(i + k + (j + 1) * l))));
                        assert_eq!(p.right_op().basis(nl(i, j), nl(k, l)), &want);
                    }
                }
            }
        }
    }

    #[test]
    fn wrong_sign_on_g_x_breaks_compatibility() {
        let p = family1(Scalar::param());
        let (g, x, gx) = (1, 4, 5);
        let mut left = p.left().clone();
        left.set(g, x, x, Scalar::one());
        let broken =
            ActionPair::new("broken", p.hopf_arc().clone(), left, p.right().clone()).unwrap();
        let r = verify_matched_pair(&broken);
        // (g₁⇀x₁)(g₂↼x₂) = (g⇀x)(g↼1) + (g⇀g)(g↼x) = xg + 0 = -gx, but gx is expected.
        let w = r.check("MP*").unwrap().witness.clone().unwrap();
        assert_eq!(w.input, vec![g, x]);
        assert_eq!(w.output, vec![gx]);
        assert_eq!((w.lhs.as_str(), w.rhs.as_str()), ("1", "-1"));
        // the left action alone is still a module coalgebra action
        assert!(r.check("left comult").unwrap().passed);
    }

    #[test]
    fn specialised_families_still_verify() {
        for v in [0, 1, -2] {
            let p = family2(Scalar::from_int(v));
            assert!(verify_matched_pair(&p).passed());
        }
    }
}
