//! JSON documents: `hopf.v1`, `pair.v1`, `rmatrix.v1`, `cqt.v1` and
//! `transmute.v1`. Scalars are strings in the scalar grammar.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::braiding::BraidingOperator;
use crate::cqt::CqtForm;
use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{Matrix, Tensor3, Vector};
use crate::matched_pair::ActionPair;
use crate::report::AxiomReport;
use crate::scalar::Scalar;
use crate::transmutation::TransmutationData;

type Rows = Vec<Vec<Scalar>>;
type Cube = Vec<Vec<Vec<Scalar>>>;

fn check_schema(found: &Option<String>, expected: &str) -> Result<()> {
    match found {
        Some(s) if s != expected => Err(Error::InvalidInput(format!(
            "schema `{s}` where `{expected}` was expected"
        ))),
        _ => Ok(()),
    }
}

fn matrix_from_rows(rows: Rows, what: &str, shape: (usize, usize)) -> Result<Matrix> {
    let m = Matrix::from_rows(rows)?;
    if (m.rows(), m.cols()) != shape {
        return Err(Error::DimensionMismatch(format!(
            "{what} is {}x{}, expected {}x{}",
            m.rows(),
            m.cols(),
            shape.0,
            shape.1
        )));
    }
    Ok(m)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HopfDoc {
    #[serde(default)]
    pub schema: Option<String>,
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub mult: Cube,
    pub unit: Vec<Scalar>,
    /// Row `i` is `Δ(e_i)` flattened in Kronecker order.
    pub comult: Rows,
    pub counit: Vec<Scalar>,
    /// Row `i` is `S(e_i)`.
    pub antipode: Rows,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parameters: Option<Vec<String>>,
}

impl HopfDoc {
    pub fn from_hopf(h: &HopfAlgebra) -> Self {
        HopfDoc {
            schema: Some("hopf.v1".into()),
            name: h.name().to_string(),
            dim: h.dim(),
            basis: h.basis_names().to_vec(),
            mult: h.mult().to_nested(),
            unit: h.unit().entries().to_vec(),
            comult: h.comult().transpose().to_rows(),
            counit: h.counit().entries().to_vec(),
            antipode: h.antipode().transpose().to_rows(),
            parameters: h.is_parametric().then(|| vec!["a".to_string()]),
        }
    }

    pub fn into_hopf(self) -> Result<HopfAlgebra> {
        check_schema(&self.schema, "hopf.v1")?;
        let n = self.dim;
        if self.basis.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{} basis names for dim {n}",
                self.basis.len()
            )));
        }
        let mult = Tensor3::from_nested(self.mult)?;
        let comult = matrix_from_rows(self.comult, "comult", (n, n * n))?.transpose();
        let antipode = matrix_from_rows(self.antipode, "antipode", (n, n))?.transpose();
        HopfAlgebra::new(
            self.name,
            self.basis,
            mult,
            Vector::new(self.unit),
            comult,
            Vector::new(self.counit),
            antipode,
        )
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairDoc {
    #[serde(default)]
    pub schema: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    /// Catalog name or path of a `hopf.v1` file.
    pub hopf: String,
    pub left: Cube,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<Cube>,
}

impl PairDoc {
    pub fn from_pair(pair: &ActionPair, hopf_ref: &str) -> Self {
        PairDoc {
            schema: Some("pair.v1".into()),
            name: Some(pair.name().to_string()),
            hopf: hopf_ref.to_string(),
            left: pair.left().to_nested(),
            right: Some(pair.right().to_nested()),
        }
    }

    /// Builds the pair over `h`; a missing right action is derived from the
    /// left one.
    pub fn into_pair(self, h: Arc<HopfAlgebra>) -> Result<ActionPair> {
        check_schema(&self.schema, "pair.v1")?;
        let name = self.name.unwrap_or_else(|| "pair".into());
        let left = Tensor3::from_nested(self.left)?;
        match self.right {
            Some(right) => ActionPair::new(name, h, left, Tensor3::from_nested(right)?),
            None => ActionPair::with_derived_right(name, h, left),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RMatrixDoc {
    #[serde(default)]
    pub schema: Option<String>,
    pub hopf: String,
    pub dim_sq: usize,
    pub matrix: Rows,
}

impl RMatrixDoc {
    pub fn from_operator(r: &BraidingOperator, hopf_ref: &str) -> Self {
        RMatrixDoc {
            schema: Some("rmatrix.v1".into()),
            hopf: hopf_ref.to_string(),
            dim_sq: r.matrix().rows(),
            matrix: r.matrix().to_rows(),
        }
    }

    pub fn into_matrix(self, h: &HopfAlgebra) -> Result<Matrix> {
        check_schema(&self.schema, "rmatrix.v1")?;
        let n2 = h.dim() * h.dim();
        if self.dim_sq != n2 {
            return Err(Error::DimensionMismatch(format!(
                "dim_sq {} for an algebra of dim {}",
                self.dim_sq,
                h.dim()
            )));
        }
        matrix_from_rows(self.matrix, "r matrix", (n2, n2))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CqtDoc {
    #[serde(default)]
    pub schema: Option<String>,
    pub hopf: String,
    pub form: Rows,
}

impl CqtDoc {
    pub fn from_form(f: &CqtForm, hopf_ref: &str) -> Self {
        CqtDoc {
            schema: Some("cqt.v1".into()),
            hopf: hopf_ref.to_string(),
            form: f.form().to_rows(),
        }
    }

    /// The inverse form is always recomputed.
    pub fn into_form(self, h: Arc<HopfAlgebra>) -> Result<CqtForm> {
        check_schema(&self.schema, "cqt.v1")?;
        let n = h.dim();
        let form = matrix_from_rows(self.form, "form", (n, n))?;
        CqtForm::new(h, form)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TransmuteDoc {
    pub schema: String,
    pub pair: String,
    pub bullet: Cube,
    pub s_round: Rows,
    pub ad_l_coaction: Rows,
    pub prebraiding: Rows,
}

impl TransmuteDoc {
    pub fn from_data(t: &TransmutationData) -> Self {
        TransmuteDoc {
            schema: "transmute.v1".into(),
            pair: t.pair().name().to_string(),
            bullet: t.bullet().to_nested(),
            s_round: t.s_round().to_rows(),
            ad_l_coaction: t.ad_l_coaction().to_rows(),
            prebraiding: t.prebraiding().to_rows(),
        }
    }
}

/// A report without its timing unless `timings` is set, so that repeated
/// runs print identical documents.
pub fn report_value(report: &AxiomReport, timings: bool) -> serde_json::Value {
    let mut v = serde_json::to_value(report).expect("reports serialize");
    if !timings {
        if let Some(obj) = v.as_object_mut() {
            obj.remove("elapsed_ms");
        }
    }
    v
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cqt::r_alpha_form;
    use crate::hopf::{a_c2c2, symmetric3};
    use crate::matched_pair::family2;

    #[test]
    fn hopf_round_trip() {
        for h in [a_c2c2(), symmetric3()] {
            let text = serde_json::to_string(&HopfDoc::from_hopf(&h)).unwrap();
            let back: HopfDoc = serde_json::from_str(&text).unwrap();
            let g = back.into_hopf().unwrap();
            assert_eq!(g.mult(), h.mult());
            assert_eq!(g.comult(), h.comult());
            assert_eq!(g.antipode(), h.antipode());
            assert_eq!(g.basis_names(), h.basis_names());
        }
    }

    #[test]
    fn comult_rows_are_coproducts() {
        let doc = HopfDoc::from_hopf(&a_c2c2());
        let x = 4;
        let nonzero: Vec<usize> = (0..64).filter(|&f| !doc.comult[x][f].is_zero()).collect();
        // Δ(x) = x⊗1 + g⊗x
        assert_eq!(nonzero, vec![8 + 4, 4 * 8]);
        assert_eq!(doc.antipode[x][5].to_string(), "-1");
    }

    #[test]
    fn pair_round_trip_and_derivation() {
        let p = family2(Scalar::param());
        let doc = PairDoc::from_pair(&p, "a_c2c2");
        let text = serde_json::to_string(&doc).unwrap();
        let mut back: PairDoc = serde_json::from_str(&text).unwrap();
        back.right = None;
        let q = back.into_pair(p.hopf_arc().clone()).unwrap();
        assert_eq!(q.left(), p.left());
        assert_eq!(q.right(), p.right());
    }

    #[test]
    fn cqt_round_trip() {
        let f = r_alpha_form(Scalar::param());
        let text = serde_json::to_string(&CqtDoc::from_form(&f, "a_c2c2")).unwrap();
        let back: CqtDoc = serde_json::from_str(&text).unwrap();
        let g = back.into_form(f.hopf_arc().clone()).unwrap();
        assert_eq!(g.inverse_form(), f.inverse_form());
    }

    #[test]
    fn wrong_schema_and_shapes_are_rejected() {
        let mut doc = HopfDoc::from_hopf(&symmetric3());
        doc.schema = Some("pair.v1".into());
        assert!(matches!(
            doc.clone().into_hopf(),
            Err(Error::InvalidInput(_))
        ));
        doc.schema = None;
        doc.dim = 5;
        assert!(matches!(doc.into_hopf(), Err(Error::DimensionMismatch(_))));
        let bad = r#"{"hopf":"s3","form":[["1","x"]]}"#;
        assert!(serde_json::from_str::<CqtDoc>(bad).is_err());
    }
}
