//! The `hopfyb` command line. Exit codes: 0 when every check passes, 1 when
//! a check fails or a mathematical precondition does not hold, 2 for
//! malformed input.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::braiding::{
    antipode_exchange_check, build_r, check_braid_equation, check_braid_equation_fast,
    extract_actions_from_r, involutivity_report, matrix_difference, r_inverse_formula,
    r_inverse_via_antipode, verify_braiding_axioms, ybo_identities, BraidingOperator,
};
use crate::cqt::{
    counit_form, induce_pair_from_cqt, is_cotriangular, r_alpha_form, verify_cqt, CqtForm,
};
use crate::error::{Error, Result};
use crate::hopf::{a_c2c2, cyclic2, klein4, sweedler_h4, symmetric3, verify_hopf, HopfAlgebra};
use crate::json::{read_json, report_value, CqtDoc, HopfDoc, PairDoc, RMatrixDoc, TransmuteDoc};
use crate::matched_pair::{
    conjugation_pair, derive_right_action, family1, family2, trivial_pair, verify_matched_pair,
    ActionPair,
};
use crate::report::{AxiomReport, Check};
use crate::scalar::Scalar;
use crate::transmutation::{
    adjoint_actions, bosonization, build_transmutation, check_braided_commutativity,
    check_hopf_brace_compat, double_cross_product, phi_report, verify_braided_hopf,
};

pub const ALGEBRAS: [&str; 5] = ["a_c2c2", "h4", "c2", "c2c2", "s3"];
pub const PAIRS: [&str; 4] = ["family1", "family2", "conjugation", "trivial"];
pub const FORMS: [&str; 2] = ["r_alpha", "counit"];

#[derive(Clone, Debug, Parser)]
#[command(
    name = "hopfyb",
    version,
    about = "Exact Hopf algebra and Yang-Baxter operator checks over Q(a)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Algebra: a catalog name or a hopf.v1 file
    #[arg(long, global = true)]
    pub hopf: Option<String>,

    /// Matched pair: family1, family2, conjugation, trivial, or a pair.v1 file
    #[arg(long, global = true)]
    pub pair: Option<String>,

    /// Bilinear form: r_alpha, counit, or a cqt.v1 file
    #[arg(long, global = true)]
    pub form: Option<String>,

    /// Value substituted for the parameter a
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub alpha: Option<String>,

    /// Check the braid equation at sample values of a instead of symbolically
    #[arg(long, global = true)]
    pub fast: bool,

    /// Print a single JSON document instead of text
    #[arg(long, global = true)]
    pub json: bool,

    /// Write the produced artifact to this file
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Include elapsed times in reports
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// List catalog objects, or print one as JSON
    Catalog { name: Option<String> },
    /// Check the Hopf algebra axioms
    VerifyHopf,
    /// Check the matched pair axioms
    VerifyPair,
    /// Derive the right action from the left one
    DeriveRight,
    /// Build the braiding operator r of a pair
    BuildR,
    /// Check the braiding operator axioms and the braid equation
    CheckBraid,
    /// Evaluate the four involutivity conditions
    Involutive,
    /// Compute r⁻¹ by both formulas and compare
    InvertR,
    /// Build and check the braided Hopf algebra H_⇀
    Transmute,
    /// Compute the adjoint actions of H_⇀
    Adjoints,
    /// Build and check the double cross product
    Dcp,
    /// Build and check the bosonization
    Bosonize,
    /// Check the isomorphism from the double cross product to the bosonization
    CheckPhi,
    /// Check the coquasitriangular axioms of a form
    CqtVerify,
    /// Induce a matched pair from a coquasitriangular form
    CqtInduce,
    /// Recover the actions from an rmatrix.v1 file
    ExtractActions { path: PathBuf },
}

/// What a command produced: reports with their pass/fail state, extra
/// fields, and an optional artifact.
struct Outcome {
    reports: Vec<AxiomReport>,
    info: Vec<(String, Value)>,
    artifact: Option<Value>,
    /// Print the artifact instead of the reports when `--out` is absent.
    artifact_is_primary: bool,
}

impl Outcome {
    fn reports(reports: Vec<AxiomReport>) -> Self {
        Outcome {
            reports,
            info: Vec::new(),
            artifact: None,
            artifact_is_primary: false,
        }
    }

    fn artifact(value: Value) -> Self {
        Outcome {
            reports: Vec::new(),
            info: Vec::new(),
            artifact: Some(value),
            artifact_is_primary: true,
        }
    }

    fn with_info(mut self, key: &str, value: Value) -> Self {
        self.info.push((key.to_string(), value));
        self
    }

    fn with_artifact(mut self, value: Value) -> Self {
        self.artifact = Some(value);
        self
    }

    fn passed(&self) -> bool {
        self.reports.iter().all(AxiomReport::passed)
    }
}

pub fn catalog_algebra(name: &str) -> Option<HopfAlgebra> {
    Some(match name {
        "a_c2c2" => a_c2c2(),
        "h4" => sweedler_h4(),
        "c2" => cyclic2(),
        "c2c2" => klein4(),
        "s3" => symmetric3(),
        _ => return None,
    })
}

/// A built-in pair. The families live on `a_c2c2` and take `alpha` for the
/// parameter (symbolic when absent); the others need `hopf`.
pub fn named_pair(
    name: &str,
    hopf: Option<Arc<HopfAlgebra>>,
    alpha: Option<Scalar>,
) -> Result<ActionPair> {
    let need_hopf = || {
        hopf.clone()
            .ok_or_else(|| Error::InvalidInput(format!("pair {name} needs an algebra")))
    };
    let pair = match name {
        "family1" | "family2" => {
            if let Some(h) = &hopf {
                if h.name() != "a_c2c2" {
                    return Err(Error::InvalidInput(format!(
                        "{name} lives on a_c2c2, not {}",
                        h.name()
                    )));
                }
            }
            let a = alpha.clone().unwrap_or_else(Scalar::param);
            return Ok(if name == "family1" {
                family1(a)
            } else {
                family2(a)
            });
        }
        "conjugation" => conjugation_pair(need_hopf()?)?,
        "trivial" => trivial_pair(need_hopf()?),
        other => {
            return Err(Error::UnknownName {
                kind: "pair",
                name: other.to_string(),
            })
        }
    };
    match alpha {
        Some(a) if pair.is_parametric() => {
            let q = a.as_rational().ok_or_else(|| {
                Error::InvalidInput("alpha must be a rational number here".into())
            })?;
            pair.eval(&q)
        }
        _ => Ok(pair),
    }
}

/// Resolves a catalog name or a path; relative paths are taken from `base`.
fn load_hopf(source: &str, base: Option<&Path>) -> Result<Arc<HopfAlgebra>> {
    if let Some(h) = catalog_algebra(source) {
        return Ok(Arc::new(h));
    }
    let mut path = PathBuf::from(source);
    if path.is_relative() && !path.exists() {
        if let Some(b) = base {
            path = b.join(source);
        }
    }
    if !path.exists() {
        return Err(Error::UnknownName {
            kind: "algebra",
            name: source.to_string(),
        });
    }
    Ok(Arc::new(read_json::<HopfDoc>(&path)?.into_hopf()?))
}

struct Context {
    cli: Cli,
}

impl Context {
    fn alpha(&self) -> Result<Option<Scalar>> {
        self.cli.alpha.as_deref().map(Scalar::parse).transpose()
    }

    fn specialise(&self, pair: ActionPair) -> Result<ActionPair> {
        match self.alpha()? {
            Some(a) if pair.is_parametric() => {
                let q = a.as_rational().ok_or_else(|| {
                    Error::InvalidInput(
                        "--alpha must be a rational number for a pair read from a file".into(),
                    )
                })?;
                pair.eval(&q)
            }
            _ => Ok(pair),
        }
    }

    fn hopf_or(&self, default: &str) -> Result<Arc<HopfAlgebra>> {
        load_hopf(self.cli.hopf.as_deref().unwrap_or(default), None)
    }

    fn hopf(&self) -> Result<Arc<HopfAlgebra>> {
        let source = self
            .cli
            .hopf
            .as_deref()
            .ok_or_else(|| Error::InvalidInput("--hopf is required".into()))?;
        load_hopf(source, None)
    }

    fn hopf_label(&self, h: &HopfAlgebra) -> String {
        self.cli
            .hopf
            .clone()
            .unwrap_or_else(|| h.name().to_string())
    }

    fn pair(&self) -> Result<ActionPair> {
        let source = self
            .cli
            .pair
            .as_deref()
            .ok_or_else(|| Error::InvalidInput("--pair is required".into()))?;
        match source {
            name if PAIRS.contains(&name) => {
                let h = self
                    .cli
                    .hopf
                    .as_deref()
                    .map(|s| load_hopf(s, None))
                    .transpose()?;
                named_pair(name, h, self.alpha()?)
            }
            path if Path::new(path).exists() => {
                let doc: PairDoc = read_json(Path::new(path))?;
                let base = Path::new(path).parent();
                let h = match self.cli.hopf.as_deref() {
                    Some(s) => load_hopf(s, None)?,
                    None => load_hopf(&doc.hopf, base)?,
                };
                self.specialise(doc.into_pair(h)?)
            }
            other => Err(Error::UnknownName {
                kind: "pair",
                name: other.to_string(),
            }),
        }
    }

    fn form(&self) -> Result<CqtForm> {
        let source = self
            .cli
            .form
            .as_deref()
            .ok_or_else(|| Error::InvalidInput("--form is required".into()))?;
        match source {
            "r_alpha" => Ok(r_alpha_form(self.alpha()?.unwrap_or_else(Scalar::param))),
            "counit" => Ok(counit_form(self.hopf_or("a_c2c2")?)),
            path if Path::new(path).exists() => {
                let doc: CqtDoc = read_json(Path::new(path))?;
                let h = match self.cli.hopf.as_deref() {
                    Some(s) => load_hopf(s, None)?,
                    None => load_hopf(&doc.hopf, Path::new(path).parent())?,
                };
                doc.into_form(h)
            }
            other => Err(Error::UnknownName {
                kind: "form",
                name: other.to_string(),
            }),
        }
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("documents serialize")
}

fn single(name: &str, checks: Vec<Check>) -> AxiomReport {
    let mut r = AxiomReport::new(name);
    for c in checks {
        r.push(c);
    }
    r
}

fn execute(ctx: &Context) -> Result<Outcome> {
    match &ctx.cli.command {
        Command::Catalog { name } => catalog(ctx, name.as_deref()),
        Command::VerifyHopf => Ok(Outcome::reports(vec![verify_hopf(&*ctx.hopf()?)])),
        Command::VerifyPair => Ok(Outcome::reports(vec![verify_matched_pair(&ctx.pair()?)])),
        Command::DeriveRight => {
            let p = ctx.pair()?;
            let derived = ActionPair::new(
                p.name(),
                p.hopf_arc().clone(),
                p.left().clone(),
                derive_right_action(p.hopf(), p.left()),
            )?;
            Ok(Outcome::artifact(to_value(&PairDoc::from_pair(
                &derived,
                &ctx.hopf_label(p.hopf()),
            ))))
        }
        Command::BuildR => {
            let p = ctx.pair()?;
            let r = build_r(&p)?;
            Ok(Outcome::artifact(to_value(&RMatrixDoc::from_operator(
                &r,
                &ctx.hopf_label(p.hopf()),
            ))))
        }
        Command::CheckBraid => {
            let p = ctx.pair()?;
            let r = build_r(&p)?;
            let braid = if ctx.cli.fast {
                check_braid_equation_fast(&r)?
            } else {
                check_braid_equation(&r)
            };
            let mut axioms = verify_braiding_axioms(&r);
            axioms.push(braid);
            Ok(Outcome::reports(vec![axioms]))
        }
        Command::Involutive => {
            let p = ctx.pair()?;
            let r = build_r(&p)?;
            let inv = involutivity_report(&p, &r)?;
            let mut reports = vec![single(
                &format!("involutivity conditions for {}", p.name()),
                inv.checks().iter().map(|c| (*c).clone()).collect(),
            )];
            if inv.involutive() {
                reports.push(antipode_exchange_check(&p)?);
            }
            let [i, ii, iii, iv] = inv.values();
            Ok(Outcome::reports(reports).with_info(
                "conditions",
                json!({"i": i, "ii": ii, "iii": iii, "iv": iv}),
            ))
        }
        Command::InvertR => {
            let p = ctx.pair()?;
            let r = build_r(&p)?;
            let t = r_inverse_formula(&p)?;
            let mut checks = vec![Check::pass("r⁻¹ r = r r⁻¹ = id")];
            match r_inverse_via_antipode(&r) {
                Ok(u) => checks.push(Check::from_witness(
                    "antipode form agrees",
                    matrix_difference(p.dim(), &t, &u),
                )),
                Err(Error::SingularAntipode { .. }) => {}
                Err(e) => return Err(e),
            }
            let inverse = BraidingOperator::from_matrix(p.hopf_arc().clone(), t)?;
            let mut report = single(&format!("inverse of r for {}", p.name()), checks);
            report.absorb("", ybo_identities(&p, &r));
            Ok(
                Outcome::reports(vec![report]).with_artifact(to_value(&RMatrixDoc::from_operator(
                    &inverse,
                    &ctx.hopf_label(p.hopf()),
                ))),
            )
        }
        Command::Transmute => {
            let p = ctx.pair()?;
            let t = build_transmutation(&p);
            let mut report = verify_braided_hopf(&t);
            report.push(check_hopf_brace_compat(&t));
            let commutative = check_braided_commutativity(&t);
            Ok(Outcome::reports(vec![report])
                .with_info("braided_commutative", json!(commutative.passed))
                .with_info("commutativity_witness", to_value(&commutative.witness))
                .with_artifact(to_value(&TransmuteDoc::from_data(&t))))
        }
        Command::Adjoints => {
            let p = ctx.pair()?;
            let t = build_transmutation(&p);
            let a = adjoint_actions(&t)?;
            let commutative = check_braided_commutativity(&t).passed;
            let report = single(
                &format!("adjoint actions for {}", p.name()),
                vec![Check::pass("closed forms equal compositional forms")],
            );
            Ok(Outcome::reports(vec![report])
                .with_info("left_trivial", json!(a.left_trivial))
                .with_info("right_trivial", json!(a.right_trivial))
                .with_info("braided_commutative", json!(commutative)))
        }
        Command::Dcp => {
            let p = ctx.pair()?;
            let pair_report = verify_matched_pair(&p);
            if !pair_report.passed() {
                return Err(Error::VerificationFailed(Box::new(pair_report)));
            }
            let d = double_cross_product(&p);
            Ok(Outcome::reports(vec![verify_hopf(&d)])
                .with_artifact(to_value(&HopfDoc::from_hopf(&d))))
        }
        Command::Bosonize => {
            let p = ctx.pair()?;
            let t = build_transmutation(&p);
            let braided = verify_braided_hopf(&t);
            if !braided.passed() {
                return Err(Error::VerificationFailed(Box::new(braided)));
            }
            let b = bosonization(&t);
            Ok(Outcome::reports(vec![verify_hopf(&b)])
                .with_artifact(to_value(&HopfDoc::from_hopf(&b))))
        }
        Command::CheckPhi => {
            let p = ctx.pair()?;
            let t = build_transmutation(&p);
            let d = double_cross_product(&p);
            let b = bosonization(&t);
            let (_, phi) = phi_report(&t, &d, &b);
            Ok(Outcome::reports(vec![
                verify_hopf(&d),
                verify_hopf(&b),
                phi,
            ]))
        }
        Command::CqtVerify => {
            let f = ctx.form()?;
            let report = verify_cqt(&f);
            let cotriangular = report.passed() && is_cotriangular(&f);
            Ok(Outcome::reports(vec![report]).with_info("cotriangular", json!(cotriangular)))
        }
        Command::CqtInduce => {
            let f = ctx.form()?;
            let p = induce_pair_from_cqt(&f)?;
            let report = single(
                &format!("pair induced on {}", f.hopf().name()),
                vec![
                    Check::pass("induced actions form a matched pair"),
                    Check::pass("r of the induced pair equals the form's braiding"),
                ],
            );
            Ok(Outcome::reports(vec![report])
                .with_info("cotriangular", json!(is_cotriangular(&f)))
                .with_artifact(to_value(&PairDoc::from_pair(&p, &ctx.hopf_label(f.hopf())))))
        }
        Command::ExtractActions { path } => {
            let doc: RMatrixDoc = read_json(path)?;
            let h = match ctx.cli.hopf.as_deref() {
                Some(s) => load_hopf(s, None)?,
                None => load_hopf(&doc.hopf, path.parent())?,
            };
            let label = ctx.cli.hopf.clone().unwrap_or_else(|| doc.hopf.clone());
            let m = doc.into_matrix(&h)?;
            let p = extract_actions_from_r(h, &m)?;
            Ok(Outcome::artifact(to_value(&PairDoc::from_pair(&p, &label))))
        }
    }
}

fn catalog(ctx: &Context, name: Option<&str>) -> Result<Outcome> {
    let Some(name) = name else {
        let listing = json!({"algebras": ALGEBRAS, "pairs": PAIRS, "forms": FORMS});
        return Ok(Outcome::artifact(listing));
    };
    if let Some(h) = catalog_algebra(name) {
        return Ok(Outcome::artifact(to_value(&HopfDoc::from_hopf(&h))));
    }
    if PAIRS.contains(&name) {
        let ctx = Context {
            cli: Cli {
                pair: Some(name.to_string()),
                ..ctx.cli.clone()
            },
        };
        let p = ctx.pair()?;
        return Ok(Outcome::artifact(to_value(&PairDoc::from_pair(
            &p,
            &ctx.hopf_label(p.hopf()),
        ))));
    }
    if FORMS.contains(&name) {
        let ctx = Context {
            cli: Cli {
                form: Some(name.to_string()),
                ..ctx.cli.clone()
            },
        };
        let f = ctx.form()?;
        return Ok(Outcome::artifact(to_value(&CqtDoc::from_form(
            &f,
            &ctx.hopf_label(f.hopf()),
        ))));
    }
    Err(Error::UnknownName {
        kind: "catalog entry",
        name: name.to_string(),
    })
}

fn render(ctx: &Context, outcome: &Outcome, out: &mut dyn Write) -> std::io::Result<()> {
    let timings = ctx.cli.timings;
    let show_artifact = outcome.artifact_is_primary && ctx.cli.out.is_none();
    if show_artifact {
        let value = outcome.artifact.as_ref().expect("primary artifact");
        return writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(value).expect("json")
        );
    }
    if ctx.cli.json {
        let mut doc = serde_json::Map::new();
        doc.insert("passed".into(), json!(outcome.passed()));
        doc.insert(
            "reports".into(),
            Value::Array(
                outcome
                    .reports
                    .iter()
                    .map(|r| report_value(r, timings))
                    .collect(),
            ),
        );
        for (k, v) in &outcome.info {
            doc.insert(k.clone(), v.clone());
        }
        return writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&Value::Object(doc)).expect("json")
        );
    }
    for r in &outcome.reports {
        write!(out, "{r}")?;
        if timings {
            write!(out, " ({} ms)", r.elapsed_ms)?;
        }
        writeln!(out)?;
    }
    for (k, v) in &outcome.info {
        writeln!(out, "{k}: {v}")?;
    }
    Ok(())
}

fn exit_code(e: &Error) -> i32 {
    if e.is_input_error() {
        2
    } else {
        1
    }
}

/// Parses `args`, runs the command, and returns the exit code. Normal
/// output goes to `out`, diagnostics to `err`.
pub fn run_command<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    let ctx = Context { cli };
    let outcome = match execute(&ctx) {
        Ok(o) => o,
        Err(Error::VerificationFailed(report)) => {
            let _ = writeln!(err, "error: verification failed for {}", report.subject);
            let failed = Outcome::reports(vec![*report]);
            let _ = render(&ctx, &failed, out);
            return 1;
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code(&e);
        }
    };
    if let (Some(path), Some(artifact)) = (&ctx.cli.out, &outcome.artifact) {
        let text = serde_json::to_string_pretty(artifact).expect("json") + "\n";
        if let Err(e) = std::fs::write(path, text) {
            let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
            return 2;
        }
    }
    if render(&ctx, &outcome, out).is_err() {
        return 2;
    }
    if outcome.passed() {
        0
    } else {
        1
    }
}

/// Applies `HOPFYB_THREADS` to the global thread pool.
pub fn configure_threads() {
    if let Some(n) = std::env::var("HOPFYB_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }
}
