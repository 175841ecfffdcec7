//! Pass/fail reports for identity checks.
//!
//! Every check compares two linear maps entrywise. On failure the report keeps
//! the first differing entry: inputs are enumerated as basis multi-indices in
//! lexicographic (Kronecker) order and, within one input, outputs likewise.

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::linalg::SparseVec;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Basis multi-index of the input (one entry per tensor leg).
    pub input: Vec<usize>,
    /// Basis multi-index of the output coordinate that differs.
    pub output: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "input {:?} output {:?}: lhs {} vs rhs {}",
            self.input, self.output, self.lhs, self.rhs
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: true,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: Witness) -> Self {
        Check {
            name: name.into(),
            passed: false,
            witness: Some(witness),
        }
    }

    pub fn from_witness(name: impl Into<String>, witness: Option<Witness>) -> Self {
        match witness {
            None => Check::pass(name),
            Some(w) => Check::fail(name, w),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub subject: String,
    pub checks: Vec<Check>,
    pub elapsed_ms: u64,
}

impl AxiomReport {
    pub fn new(subject: impl Into<String>) -> Self {
        AxiomReport {
            subject: subject.into(),
            checks: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Appends the checks of `other`, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: AxiomReport) {
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failed_names(&self) -> Vec<String> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.clone())
            .collect()
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.elapsed_ms = start.elapsed().as_millis() as u64;
        self
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "  [{tag}] {}", c.name)?;
            if let Some(w) = &c.witness {
                write!(f, "  ({w})")?;
            }
            writeln!(f)?;
        }
        let verdict = if self.passed() {
            "all passed"
        } else {
            "FAILED"
        };
        write!(f, "  => {verdict}")
    }
}

/// Splits a flat Kronecker index into `legs` basis indices of dimension `n`.
pub fn split_index(mut flat: usize, n: usize, legs: usize) -> Vec<usize> {
    let mut out = vec![0; legs];
    for slot in out.iter_mut().rev() {
        *slot = flat % n;
        flat /= n;
    }
    out
}

/// Compares two linear maps `H^{⊗in_legs} → H^{⊗out_legs}` given as closures
/// on basis multi-indices, returning the first differing entry.
pub fn compare_maps<L, R>(
    n: usize,
    in_legs: usize,
    out_legs: usize,
    lhs: L,
    rhs: R,
) -> Option<Witness>
where
    L: Fn(&[usize]) -> SparseVec + Sync,
    R: Fn(&[usize]) -> SparseVec + Sync,
{
    let total = n.pow(in_legs as u32);
    (0..total).into_par_iter().find_map_first(|flat| {
        let idx = split_index(flat, n, in_legs);
        let l = lhs(&idx);
        let r = rhs(&idx);
        first_difference(&l, &r).map(|(out, lv, rv)| Witness {
            input: idx,
            output: split_index(out, n, out_legs),
            lhs: lv.to_string(),
            rhs: rv.to_string(),
        })
    })
}

/// First coordinate where two sparse vectors differ, with both values.
pub fn first_difference(l: &SparseVec, r: &SparseVec) -> Option<(usize, Scalar, Scalar)> {
    let mut li = l.iter().peekable();
    let mut ri = r.iter().peekable();
    loop {
        match (li.peek(), ri.peek()) {
            (None, None) => return None,
            (Some((&i, v)), None) => return Some((i, (*v).clone(), Scalar::zero())),
            (None, Some((&j, w))) => return Some((j, Scalar::zero(), (*w).clone())),
            (Some((&i, v)), Some((&j, w))) => {
                if i < j {
                    return Some((i, (*v).clone(), Scalar::zero()));
                } else if j < i {
                    return Some((j, Scalar::zero(), (*w).clone()));
                } else if v != w {
                    return Some((i, (*v).clone(), (*w).clone()));
                }
                li.next();
                ri.next();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_index_is_big_endian() {
        assert_eq!(split_index(0, 8, 3), vec![0, 0, 0]);
        assert_eq!(split_index(3 * 8 + 5, 8, 2), vec![3, 5]);
        assert_eq!(split_index(1 * 64 + 2 * 8 + 7, 8, 3), vec![1, 2, 7]);
    }

    #[test]
    fn first_witness_in_input_order() {
        let w = compare_maps(
            2,
            2,
            1,
            |idx| SparseVec::unit(idx[0]),
            |idx| {
                if idx == [1, 0] || idx == [1, 1] {
                    SparseVec::unit(0)
                } else {
                    SparseVec::unit(idx[0])
                }
            },
        )
        .unwrap();
        assert_eq!(w.input, vec![1, 0]);
        assert_eq!(w.output, vec![0]);
        assert_eq!((w.lhs.as_str(), w.rhs.as_str()), ("0", "1"));
    }

    #[test]
    fn report_verdict() {
        let mut r = AxiomReport::new("demo");
        r.push(Check::pass("x"));
        assert!(r.passed());
        r.push(Check::fail(
            "y",
            Witness {
                input: vec![0],
                output: vec![1],
                lhs: "1".into(),
                rhs: "0".into(),
            },
        ));
        assert!(!r.passed());
        assert_eq!(r.failed_names(), vec!["y".to_string()]);
    }
}
