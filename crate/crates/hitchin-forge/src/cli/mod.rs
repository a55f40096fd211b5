//! Command-line front end: one subcommand per pipeline, JSON on standard output.
//!
//! Exit codes: 0 when the computation finished, 1 when it finished with
//! failures (containment failures, an invalid certificate, no witness), 2 for
//! usage errors and malformed input.

mod input;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Display;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::bender::{
    bend_eval_str, density_certificate, gamma_free_spec, genus2_spec, BendingSpec, CurveSpec, DensityTarget,
};
use crate::error::{Error, Result};
use crate::exactnum::{fundamental_unit, FieldElem, Matrix, PellUnitJson};
use crate::g2core::in_g2;
use crate::lattices::{containment_check_with, LatticeSpec};
use crate::modp::{
    family_trace_set, group_order_formula, separation_certificate, trace_set_words, family_generators, FqElem,
    GroupFamily, ReductionContext, DEFAULT_CAP,
};
use crate::qforms::{diagonalize_qform, form_invariants, FormInvariants, Place};
use crate::quatalg::{gamma_enumerate, is_cocompact_gamma, is_division, splitting_field, QuatAlgebra};
use crate::symrep::{j_matrix, so_form_from_cocycle, tau, trace_poly, ExtensionCase, SignPair};
use input::{lift_to_radicand, parse_matrix, to_rational, NameContext};

/// Version tag of every JSON document.
pub const SCHEMA: &str = "hitchin-forge/1";

#[derive(Parser, Debug)]
#[command(name = "hitchin-forge", version, about = "Exact certificates for thin Hitchin representations")]
struct Cli {
    /// Write the JSON document to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct B0Args {
    /// Radicand of the fundamental unit used by named bending matrices.
    #[arg(long, default_value_t = 3)]
    d: i64,
    /// Exponent applied to named bending matrices.
    #[arg(long, default_value_t = 1)]
    k: i64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Division test, ramification and the Gamma_{a,b} lattice of (a,b).
    QuatInfo {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        /// Also enumerate Gamma_{a,b} up to this height.
        #[arg(long = "H")]
        height: Option<i64>,
    },
    /// Fundamental unit of Z[sqrt d].
    Pell {
        #[arg(long)]
        d: i64,
    },
    /// Rank, discriminant, signature and Hasse invariants of a rational symmetric matrix.
    ClassifyForm {
        /// Named matrix (J3, I4, ...) or JSON array of rows.
        #[arg(long)]
        matrix: String,
    },
    /// The symmetric power tau_n, J_n and the trace polynomial.
    Symrep {
        #[arg(long)]
        n: usize,
        /// A 2x2 matrix to map through tau_n.
        #[arg(long)]
        matrix: Option<String>,
    },
    /// The orthogonal form obtained from the cocycle recipe.
    SoForm {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        /// trivial, degree-2 or degree-4 (inferred from a and b when absent).
        #[arg(long)]
        case: Option<String>,
    },
    /// Membership of a matrix in SL(n,Z), SU(I_n; Z[sqrt d]), Sp(J_n,Z), SO(Q,Z) or G2(Z).
    LatticeCheck {
        /// sl, su, sp, so or g2.
        #[arg(long)]
        lattice: String,
        #[arg(long)]
        matrix: String,
        /// Form for `so` (default J_n).
        #[arg(long)]
        form: Option<String>,
        /// Dimension for named bending matrices.
        #[arg(long)]
        n: Option<usize>,
        #[command(flatten)]
        b0: B0Args,
    },
    /// Unitarity of tau_n(Gamma_{a,b}) for the cocycle form, element by element.
    Containment {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        #[arg(long)]
        n: usize,
        /// Sign pair of the Galois element on (sqrt a, sqrt b), e.g. "-,-".
        #[arg(long, default_value = "--", allow_hyphen_values = true)]
        signs: String,
        #[arg(long = "H")]
        height: i64,
        /// Corrupt one entry of every matrix (negative control).
        #[arg(long)]
        corrupt: bool,
    },
    /// G2 membership of a 7x7 matrix.
    G2Check {
        #[arg(long)]
        matrix: String,
        #[command(flatten)]
        b0: B0Args,
    },
    /// Evaluate a bent representation and check its relator.
    Bend(BendArgs),
    /// Zariski-density certificate of a bent representation.
    CertifyDensity {
        #[command(flatten)]
        bend: BendArgs,
        /// SLn, Sp, SO or G2.
        #[arg(long)]
        target: String,
    },
    /// Reduce an element or matrix of Q(sqrt d) modulo p.
    ReduceModp {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 3)]
        d: i64,
        #[arg(long, allow_hyphen_values = true)]
        value: Option<String>,
        #[arg(long)]
        matrix: Option<String>,
    },
    /// Trace set of a finite classical group, by full closure or sampled words.
    TraceSet {
        /// SL, SU, Sp, SO or Omega.
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u32,
        /// Sample reduced words of at most this length instead of the full closure.
        #[arg(long = "L")]
        words: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Orbit-separation certificate for a bending matrix modulo p.
    OrbitSeparate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u32,
        /// Named bending matrix or JSON array.
        #[arg(long = "B")]
        bend: String,
        #[arg(long = "L", default_value_t = 3)]
        words: usize,
        #[command(flatten)]
        b0: B0Args,
    },
}

#[derive(Args, Debug)]
struct BendArgs {
    #[arg(long)]
    n: usize,
    /// Named bending matrix (a B0 kind, In, ...) or JSON array.
    #[arg(long = "B")]
    bend: String,
    #[command(flatten)]
    b0: B0Args,
    /// presentation (genus 2) or free (two Gamma_{a,b} elements).
    #[arg(long, default_value = "free")]
    mode: String,
    /// separating or non-separating (presentation mode).
    #[arg(long, default_value = "separating")]
    curve: String,
    /// Quaternion parameters for free mode.
    #[arg(long = "qa", default_value_t = 3)]
    qa: i64,
    #[arg(long = "qb", default_value_t = 3)]
    qb: i64,
    /// Word to evaluate, e.g. "a1 b2^-1" or "g1*g2".
    #[arg(long)]
    word: Option<String>,
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    /// Process exit code.
    pub code: i32,
    /// Text for standard output (the JSON document, or help text).
    pub stdout: String,
    /// Text for standard error.
    pub stderr: String,
}

fn mat_json<T: Display>(m: &Matrix<T>) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(|e| Value::String(e.to_string())).collect())).collect())
}

fn hasse_json(h: &BTreeMap<Place, i8>) -> Value {
    Value::Object(h.iter().map(|(p, s)| (p.to_string(), json!(s))).collect())
}

fn invariants_json(inv: &FormInvariants) -> Value {
    json!({
        "rank": inv.rank,
        "disc": inv.disc.to_string(),
        "signature": [inv.signature.0, inv.signature.1],
        "hasse": hasse_json(&inv.hasse),
    })
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn doc(command: &str, body: Value) -> Value {
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("command".into(), json!(command));
    if let Value::Object(b) = body {
        m.extend(b);
    }
    Value::Object(m)
}

fn bending_spec(args: &BendArgs) -> Result<BendingSpec> {
    let ctx = NameContext { n: Some(args.n), d: args.b0.d, k: args.b0.k };
    let b = parse_matrix(&args.bend, ctx)?;
    if b.rows() != args.n {
        return Err(Error::Dimension(format!("B is {}x{}, expected n = {}", b.rows(), b.cols(), args.n)));
    }
    match args.mode.as_str() {
        "free" => gamma_free_spec(args.qa, args.qb, args.n, &b),
        "presentation" => {
            let curve = match args.curve.as_str() {
                "separating" => CurveSpec::Separating { h: 1 },
                "non-separating" | "nonseparating" => CurveSpec::NonSeparating { handle: 1 },
                c => return Err(Error::Parse(format!("unknown curve {c:?}"))),
            };
            genus2_spec(args.n, &b, curve)
        }
        m => Err(Error::Parse(format!("unknown mode {m:?}"))),
    }
}

/// Runs one subcommand and returns its JSON document with a flag telling
/// whether the computation reported failures.
fn execute(cmd: &Command) -> Result<(Value, bool)> {
    Ok(match cmd {
        Command::QuatInfo { a, b, height } => {
            let alg = QuatAlgebra::new(*a, *b)?;
            let ram = is_division(&alg);
            let mut body = json!({
                "algebra": alg.to_string(),
                "is_division": ram.is_division,
                "ramified": ram.ramified.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "splitting_field": splitting_field(&alg)?.to_string(),
                "cocompact_gamma": is_cocompact_gamma(*a, *b)?,
            });
            if let Some(h) = height {
                let els = gamma_enumerate(*a, *b, *h)?;
                body["height"] = json!(h);
                body["gamma_count"] = json!(els.len());
                body["gamma_elements"] = Value::Array(els.iter().map(|g| json!(g.x.iter().map(ToString::to_string).collect::<Vec<_>>())).collect());
            }
            (doc("quat-info", body), false)
        }
        Command::Pell { d } => {
            let u = fundamental_unit(*d)?;
            (doc("pell", to_value(&PellUnitJson::from(&u))), false)
        }
        Command::ClassifyForm { matrix } => {
            let m = to_rational(&parse_matrix(matrix, NameContext { n: None, d: 3, k: 1 })?)?;
            let inv = form_invariants(&m)?;
            let diag = diagonalize_qform(&m)?;
            let mut body = invariants_json(&inv);
            body["diagonal"] = json!(diag.diagonal.iter().map(ToString::to_string).collect::<Vec<_>>());
            (doc("classify-form", body), false)
        }
        Command::Symrep { n, matrix } => {
            let mut body = json!({
                "n": n,
                "trace_polynomial": trace_poly(*n)?.to_string(),
                "J": mat_json(&j_matrix(*n)),
            });
            if let Some(text) = matrix {
                let m = parse_matrix(text, NameContext { n: Some(2), d: 3, k: 1 })?;
                let t = tau(*n, &m)?;
                body["input"] = mat_json(&m);
                body["tau"] = mat_json(&t);
                body["det"] = json!(t.det()?.to_string());
            }
            (doc("symrep", body), false)
        }
        Command::SoForm { n, a, b, case } => {
            let case = match case {
                Some(c) => ExtensionCase::parse(c)?,
                None => ExtensionCase::of(*a, *b)?,
            };
            let f = so_form_from_cocycle(*n, *a, *b, case)?;
            let body = json!({
                "n": n,
                "a": a.to_string(),
                "b": b.to_string(),
                "case": case.to_string(),
                "diagonal": f.form.diagonal_entries().iter().map(ToString::to_string).collect::<Vec<_>>(),
                "invariants": invariants_json(&f.invariants),
                "closed_form_hasse": hasse_json(&f.closed_form_hasse),
                "closed_form_matches": f.closed_form_hasse.iter().all(|(v, s)| f.invariants.hasse_at(*v) == *s),
                "s_inverse": mat_json(&f.s_inverse),
            });
            (doc("so-form", body), false)
        }
        Command::LatticeCheck { lattice, matrix, form, n, b0 } => {
            let m = parse_matrix(matrix, NameContext { n: *n, d: b0.d, k: b0.k })?;
            let size = m.rows();
            let spec = match lattice.to_ascii_lowercase().as_str() {
                "sl" => LatticeSpec::SlNZ { n: size },
                "su" => LatticeSpec::SuSqrtD { n: size, d: b0.d },
                "sp" => LatticeSpec::Sp { n: size },
                "so" => {
                    let q = match form {
                        Some(f) => to_rational(&parse_matrix(f, NameContext { n: None, d: b0.d, k: 1 })?)?,
                        None => j_matrix(size),
                    };
                    LatticeSpec::SoQ { q }
                }
                "g2" => LatticeSpec::G2Z,
                other => return Err(Error::Parse(format!("unknown lattice {other:?}"))),
            };
            let m = if matches!(spec, LatticeSpec::SuSqrtD { .. }) { lift_to_radicand(&m, b0.d)? } else { m };
            let member = spec.contains(&m)?;
            (doc("lattice-check", json!({"lattice": lattice, "n": size, "member": member})), false)
        }
        Command::Containment { a, b, n, signs, height, corrupt } => {
            let r = containment_check_with(*a, *b, *n, SignPair::parse(signs)?, *height, *corrupt)?;
            let failed = !r.failures.is_empty();
            let mut params = to_value(&r.params);
            params["a"] = json!(r.params.a.to_string());
            params["b"] = json!(r.params.b.to_string());
            let body = json!({
                "params": params,
                "height": r.height,
                "total": r.total,
                "passed": r.passed,
                "failures": r.failures.iter().map(|x| x.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
            });
            (doc("containment", body), failed)
        }
        Command::G2Check { matrix, b0 } => {
            let m = parse_matrix(matrix, NameContext { n: Some(7), d: b0.d, k: b0.k })?;
            (doc("g2-check", json!({"in_g2": in_g2(&m)?})), false)
        }
        Command::Bend(args) => {
            let spec = bending_spec(args)?;
            let r = spec.relator_ok()?;
            let mut body = json!({
                "n": args.n,
                "mode": args.mode,
                "B": mat_json(&spec.b),
                "gamma": spec.gamma()?.to_string(),
                "relator": to_value(&r),
            });
            if let Some(w) = &args.word {
                body["word"] = json!(w);
                body["value"] = mat_json(&bend_eval_str(&spec, w)?);
            }
            let failed = !(r.holds && r.commutes_with_gamma);
            (doc("bend", body), failed)
        }
        Command::CertifyDensity { bend, target } => {
            let spec = bending_spec(bend)?;
            let cert = density_certificate(&spec, DensityTarget::parse(target)?)?;
            let failed = !cert.valid;
            let mut body = to_value(&cert);
            body["B"] = mat_json(&spec.b);
            (doc("certify-density", body), failed)
        }
        Command::ReduceModp { p, d, value, matrix } => {
            let ctx = ReductionContext::auto(*p, *d)?;
            let mut body = json!({
                "p": p.to_string(),
                "d": d.to_string(),
                "mode": to_value(&ctx.mode),
                "field": ctx.target().to_string(),
            });
            if let Some(v) = value {
                body["value"] = json!(ctx.reduce(&FieldElem::parse_auto(v)?)?.to_string());
            }
            if let Some(m) = matrix {
                body["matrix"] = mat_json(&ctx.reduce_matrix(&parse_matrix(m, NameContext { n: None, d: *d, k: 1 })?)?);
            }
            if value.is_none() && matrix.is_none() {
                return Err(Error::Precondition("give --value or --matrix".into()));
            }
            (doc("reduce-modp", body), false)
        }
        Command::TraceSet { family, n, p, words, cap } => {
            let fam = GroupFamily::parse(family)?;
            let field = fam.field(*p)?;
            let (set, mode) = match words {
                Some(l) => (trace_set_words(&family_generators(fam, *n, *p)?, *l)?, format!("words<={l}")),
                None => (family_trace_set(fam, *n, *p, *cap)?, "full".to_string()),
            };
            let full_field = set.len() == field.order() as usize;
            let mut body = json!({
                "family": fam.to_string(),
                "n": n,
                "p": p.to_string(),
                "field": field.to_string(),
                "mode": mode,
                "traces": set.iter().map(FqElem::to_string).collect::<Vec<_>>(),
                "size": set.len().to_string(),
                "equals_field": full_field,
            });
            if let Ok(o) = group_order_formula(fam, *n, u64::from(*p)) {
                body["formula_order"] = json!(o.to_string());
            }
            (doc("trace-set", body), false)
        }
        Command::OrbitSeparate { n, p, bend, words, b0 } => {
            let b = parse_matrix(bend, NameContext { n: Some(*n), d: b0.d, k: b0.k })?;
            let cert = separation_certificate(*n, &b, *p, *words)?;
            let failed = !(cert.b_order_verified && cert.sampled_within_image);
            let mut body = to_value(&cert);
            body["image"] = json!(cert.image.iter().map(ToString::to_string).collect::<Vec<_>>());
            body["image_size"] = json!(cert.image_size);
            body["b_order"] = json!(cert.b_order.to_string());
            body["p"] = json!(cert.p.to_string());
            body["d"] = json!(cert.d.to_string());
            (doc("orbit-separate", body), failed)
        }
    })
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::NoWitness(_) | Error::CapExceeded(_) | Error::Verification(_) | Error::Reduction(_) => 1,
        _ => 2,
    }
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

/// Parses `argv` (including the program name) and runs the subcommand.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let (value, code) = match execute(&cli.command) {
        Ok((v, failed)) => (v, i32::from(failed)),
        Err(e) => {
            let code = exit_code_for(&e);
            if code == 2 {
                return Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n") };
            }
            (json!({"schema": SCHEMA, "error": e.to_string()}), code)
        }
    };
    let text = render(&value);
    match &cli.output {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
            Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: cannot write {}: {e}\n", path.display()) },
        },
        None => Outcome { code, stdout: text, stderr: String::new() },
    }
}

/// Entry point for the binary: runs with the process arguments, prints, and
/// returns the exit code.
pub fn main_entry() -> i32 {
    let out = run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}
