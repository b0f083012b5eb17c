//! The `stabcurve` command line.
//!
//! Every subcommand turns its flags into a JSON payload and hands it to the
//! same executor that serves the stdin envelope
//! `{"command": "act c", "version": "1", "payload": {...}}`, which is read
//! when no subcommand is given. Envelope responses echo the command and
//! version around `"result"`; flag invocations print the bare result.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error. Errors are written
//! to stderr as `{"code", "message", "context"}`.

use std::io::Read;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::geometry::{
    gldim, pm_boundary_limit, pm_embed, sample_disk_csv, slicing_distance, SampleRange,
};
use crate::group::{act, act_c, chart_fwd, chart_inv, solve_transitive, GroupElement};
use crate::num::NumClass;
use crate::stability::{classify, Beta, StabilityPoint};
use crate::weak::{check_clsy, check_regular, check_strict_weak, enumerate_ses};
use crate::wire::{
    distance_json, gldim_json, hn_json, normalize_zeros, phase_json, pm_json, BetaJson, ChartJson,
    GroupJson, ObjectJson, PointJson,
};

const POINT_HELP: &str = "\
Point JSON:
  {\"kind\":\"geometric\",\"lambda\":[re,im],\"tau\":[re,im],\"genus\":g}
  {\"kind\":\"boundary\",\"beta\":{\"a\":\"p/q\",\"b\":\"r/s\",\"n\":k}|\"inf\",\"variant\":\"lower\"|\"upper\",\"t\":\"p/q\"|null,\"lambda\":[re,im],\"genus\":g}
Numbers in --beta use p/q, p/q+r/s*sqrt:n, sqrt:n or inf.";

#[derive(Parser, Debug)]
#[command(
    name = "stabcurve",
    version,
    about = "Stability conditions on curves",
    after_help = "Without a subcommand, reads {\"command\",\"version\",\"payload\"} from stdin."
)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Args, Debug, Clone)]
struct PointArgs {
    /// Full point as JSON.
    #[arg(long, conflicts_with_all = ["tau", "beta"])]
    point: Option<String>,
    /// Geometric point with this τ = re,im.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "beta")]
    tau: Option<String>,
    /// Boundary point with this β.
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    #[arg(long, default_value = "lower", value_parser = ["lower", "upper"])]
    variant: String,
    /// Phase label of zero-charge classes (boundary points).
    #[arg(long)]
    t: Option<String>,
    /// λ = re,im.
    #[arg(long, allow_hyphen_values = true, default_value = "0,0")]
    lambda: String,
    #[arg(long, default_value_t = 1)]
    genus: u32,
}

#[derive(Args, Debug, Clone)]
struct ObjectArgs {
    /// A factor `r,d` or `r,d@shift`; repeatable.
    #[arg(long = "factor", allow_hyphen_values = true, required = true)]
    factors: Vec<String>,
}

#[derive(Args, Debug, Clone)]
struct BoundsArgs {
    #[arg(long, default_value_t = 3)]
    rank_bound: i64,
    #[arg(long, default_value_t = 6)]
    deg_bound: i64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Phase of a semistable class at a shift.
    #[command(after_help = POINT_HELP)]
    Phase {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        shift: i64,
        /// Class `r,d`.
        #[arg(long, allow_hyphen_values = true)]
        class: String,
    },
    /// Central charge of a class.
    #[command(after_help = POINT_HELP)]
    Charge {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long, allow_hyphen_values = true)]
        class: String,
    },
    /// Harder–Narasimhan factors of an object.
    #[command(after_help = POINT_HELP)]
    Hn {
        #[command(flatten)]
        point: PointArgs,
        #[command(flatten)]
        object: ObjectArgs,
    },
    /// Mass of an object.
    #[command(after_help = POINT_HELP)]
    Mass {
        #[command(flatten)]
        point: PointArgs,
        #[command(flatten)]
        object: ObjectArgs,
    },
    /// Boundary classification of (P_β, Z_β).
    Classify {
        #[arg(long, default_value_t = 1)]
        genus: u32,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
    },
    /// Group actions on points.
    #[command(subcommand)]
    Act(ActCommand),
    /// Product g1·g2 in the universal cover.
    Compose {
        /// Group element JSON {"m":[[a,b],[c,d]],"winding":n}.
        #[arg(long)]
        g1: String,
        #[arg(long)]
        g2: String,
    },
    /// The chart GL⁺(2,ℝ) ≅ ℂ^× × ℍ.
    #[command(subcommand)]
    Chart(ChartCommand),
    /// The group element carrying one geometric point to another.
    #[command(after_help = POINT_HELP)]
    Solve {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Slicing distance between two points.
    #[command(after_help = POINT_HELP)]
    Dist {
        #[arg(long)]
        p1: String,
        #[arg(long)]
        p2: String,
    },
    /// Projective mass embedding.
    #[command(subcommand)]
    Pm(PmCommand),
    /// Global dimension (exact value or bracket).
    #[command(after_help = POINT_HELP)]
    Gldim {
        #[command(flatten)]
        point: PointArgs,
    },
    /// Weak stability axiom checkers.
    #[command(subcommand)]
    Check(CheckCommand),
}

#[derive(Subcommand, Debug)]
enum ActCommand {
    /// λ-action.
    #[command(after_help = POINT_HELP)]
    C {
        #[command(flatten)]
        point: PointArgs,
        /// Added λ = re,im.
        #[arg(long = "by", allow_hyphen_values = true)]
        by: String,
    },
    /// Action of a group element (geometric points).
    #[command(after_help = POINT_HELP)]
    Group {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long)]
        element: String,
    },
    /// Tensoring by a line bundle of degree e, on a point or a class.
    #[command(after_help = POINT_HELP)]
    Tensor {
        #[command(flatten)]
        point: PointArgs,
        /// Act on this class `r,d` instead of the point.
        #[arg(long, allow_hyphen_values = true)]
        class: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        e: i64,
    },
}

#[derive(Subcommand, Debug)]
enum ChartCommand {
    Fwd {
        /// Matrix entries x1,x2,x3,x4.
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    Inv {
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
}

#[derive(Subcommand, Debug)]
enum PmCommand {
    #[command(after_help = POINT_HELP)]
    Embed {
        #[command(flatten)]
        point: PointArgs,
    },
    Boundary {
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, default_value_t = 1)]
        genus: u32,
    },
    /// CSV rows beta,alpha,m0,m1,m2.
    SampleDisk {
        #[arg(long, default_value_t = 1)]
        genus: u32,
        #[arg(long, allow_hyphen_values = true)]
        beta_range: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha_range: String,
    },
}

#[derive(Subcommand, Debug)]
enum CheckCommand {
    #[command(after_help = POINT_HELP)]
    Clsy {
        #[command(flatten)]
        point: PointArgs,
        #[command(flatten)]
        bounds: BoundsArgs,
    },
    #[command(after_help = POINT_HELP)]
    Weak {
        #[command(flatten)]
        point: PointArgs,
        #[command(flatten)]
        bounds: BoundsArgs,
    },
    #[command(after_help = POINT_HELP)]
    Regular {
        #[command(flatten)]
        point: PointArgs,
    },
}

/// Outcome of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn error_code(e: &Error) -> &'static str {
    match e {
        Error::ZeroClass => "zero_class",
        Error::NegativeRank(_) => "negative_rank",
        Error::NotSemistable { .. } => "not_semistable",
        Error::MixedExtension(..) => "mixed_extension",
        Error::NegativeRadicand(_) => "negative_radicand",
        Error::DegenerateClass(_) => "degenerate_class",
        Error::InvalidPoint(_) => "invalid_point",
        Error::BoundaryGroupAction => "boundary_group_action",
        Error::DegenerateMatrix(_) => "degenerate_matrix",
        Error::WindingAmbiguous(_) => "winding_ambiguous",
        Error::HintInconsistent { .. } => "hint_inconsistent",
        Error::MixedGenus(..) => "mixed_genus",
        Error::GenusZero => "genus_zero",
        Error::GenusNotOne(_) => "genus_not_one",
        Error::MissingPhaseLabel => "missing_phase_label",
        Error::ChartDomain(_) => "chart_domain",
        Error::ZeroMasses => "zero_masses",
        Error::Parse(_) => "parse_error",
    }
}

fn parse_pair(s: &str) -> Result<[f64; 2], Failure> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [a, b] => match (a.parse(), b.parse()) {
            (Ok(a), Ok(b)) => Ok([a, b]),
            _ => Err(usage(format!("expected two numbers 're,im', got '{s}'"))),
        },
        _ => Err(usage(format!("expected two numbers 're,im', got '{s}'"))),
    }
}

fn parse_class(s: &str) -> Result<Value, Failure> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || usage(format!("expected a class 'r,d', got '{s}'"));
    let [r, d] = parts.as_slice() else {
        return Err(bad());
    };
    let r: i64 = r.parse().map_err(|_| bad())?;
    let d: i64 = d.parse().map_err(|_| bad())?;
    Ok(json!({ "r": r, "d": d }))
}

fn parse_json(s: &str) -> Result<Value, Failure> {
    serde_json::from_str(s).map_err(|e| usage(format!("invalid JSON '{s}': {e}")))
}

fn point_value(p: &PointArgs) -> Result<Value, Failure> {
    if let Some(j) = &p.point {
        return parse_json(j);
    }
    let lambda = parse_pair(&p.lambda)?;
    if let Some(tau) = &p.tau {
        return Ok(json!({
            "kind": "geometric",
            "lambda": lambda,
            "tau": parse_pair(tau)?,
            "genus": p.genus,
        }));
    }
    if let Some(beta) = &p.beta {
        return Ok(json!({
            "kind": "boundary",
            "beta": beta,
            "variant": p.variant,
            "t": p.t,
            "lambda": lambda,
            "genus": p.genus,
        }));
    }
    Err(usage("a point needs --point, --tau or --beta"))
}

fn object_value(o: &ObjectArgs) -> Result<Value, Failure> {
    let mut factors = Vec::new();
    for f in &o.factors {
        let (class, shift) = match f.split_once('@') {
            Some((c, k)) => (
                c,
                k.trim()
                    .parse::<i64>()
                    .map_err(|_| usage(format!("invalid shift in '{f}'")))?,
            ),
            None => (f.as_str(), 0),
        };
        let mut v = parse_class(class)?;
        v["shift"] = json!(shift);
        factors.push(v);
    }
    Ok(json!({ "factors": factors }))
}

/// The command name and payload a flag invocation stands for.
fn to_request(cmd: &Command) -> Result<(&'static str, Value), Failure> {
    Ok(match cmd {
        Command::Phase { point, shift, class } => (
            "phase",
            json!({ "point": point_value(point)?, "shift": shift, "class": parse_class(class)? }),
        ),
        Command::Charge { point, class } => (
            "charge",
            json!({ "point": point_value(point)?, "class": parse_class(class)? }),
        ),
        Command::Hn { point, object } => (
            "hn",
            json!({ "point": point_value(point)?, "object": object_value(object)? }),
        ),
        Command::Mass { point, object } => (
            "mass",
            json!({ "point": point_value(point)?, "object": object_value(object)? }),
        ),
        Command::Classify { genus, beta } => ("classify", json!({ "genus": genus, "beta": beta })),
        Command::Act(ActCommand::C { point, by }) => (
            "act c",
            json!({ "point": point_value(point)?, "lambda": parse_pair(by)? }),
        ),
        Command::Act(ActCommand::Group { point, element }) => (
            "act group",
            json!({ "point": point_value(point)?, "element": parse_json(element)? }),
        ),
        Command::Act(ActCommand::Tensor { point, class, e }) => match class {
            Some(c) => ("act tensor", json!({ "class": parse_class(c)?, "e": e })),
            None => ("act tensor", json!({ "point": point_value(point)?, "e": e })),
        },
        Command::Compose { g1, g2 } => (
            "compose",
            json!({ "g1": parse_json(g1)?, "g2": parse_json(g2)? }),
        ),
        Command::Chart(ChartCommand::Fwd { matrix }) => {
            let xs: Vec<f64> = matrix
                .split(',')
                .map(|x| x.trim().parse::<f64>())
                .collect::<Result<_, _>>()
                .map_err(|_| usage(format!("invalid matrix '{matrix}'")))?;
            let [x1, x2, x3, x4] = xs.as_slice() else {
                return Err(usage("a matrix needs four entries x1,x2,x3,x4"));
            };
            ("chart fwd", json!({ "matrix": [[x1, x2], [x3, x4]] }))
        }
        Command::Chart(ChartCommand::Inv { c, w }) => (
            "chart inv",
            json!({ "c": parse_pair(c)?, "w": parse_pair(w)? }),
        ),
        Command::Solve { from, to } => (
            "solve",
            json!({ "from": parse_json(from)?, "to": parse_json(to)? }),
        ),
        Command::Dist { p1, p2 } => (
            "dist",
            json!({ "p1": parse_json(p1)?, "p2": parse_json(p2)? }),
        ),
        Command::Pm(PmCommand::Embed { point }) => ("pm embed", json!({ "point": point_value(point)? })),
        Command::Pm(PmCommand::Boundary { beta, genus }) => {
            ("pm boundary", json!({ "beta": beta, "genus": genus }))
        }
        Command::Pm(PmCommand::SampleDisk {
            genus,
            beta_range,
            alpha_range,
        }) => (
            "pm sample-disk",
            json!({ "genus": genus, "beta_range": beta_range, "alpha_range": alpha_range }),
        ),
        Command::Gldim { point } => ("gldim", json!({ "point": point_value(point)? })),
        Command::Check(CheckCommand::Clsy { point, bounds }) => (
            "check clsy",
            json!({ "point": point_value(point)?, "rank_bound": bounds.rank_bound, "deg_bound": bounds.deg_bound }),
        ),
        Command::Check(CheckCommand::Weak { point, bounds }) => (
            "check weak",
            json!({ "point": point_value(point)?, "rank_bound": bounds.rank_bound, "deg_bound": bounds.deg_bound }),
        ),
        Command::Check(CheckCommand::Regular { point }) => {
            ("check regular", json!({ "point": point_value(point)? }))
        }
    })
}

fn default_genus() -> u32 {
    1
}

fn default_rank_bound() -> i64 {
    3
}

fn default_deg_bound() -> i64 {
    6
}

#[derive(Deserialize)]
struct WithPoint {
    point: PointJson,
}

#[derive(Deserialize)]
struct ClassPayload {
    point: PointJson,
    #[serde(default)]
    shift: i64,
    class: NumClass,
}

#[derive(Deserialize)]
struct ObjectPayload {
    point: PointJson,
    object: ObjectJson,
}

#[derive(Deserialize)]
struct BetaPayload {
    #[serde(default = "default_genus")]
    genus: u32,
    beta: BetaJson,
}

#[derive(Deserialize)]
struct ActCPayload {
    point: PointJson,
    lambda: [f64; 2],
}

#[derive(Deserialize)]
struct ActGroupPayload {
    point: PointJson,
    element: GroupJson,
}

#[derive(Deserialize)]
struct TensorPayload {
    point: Option<PointJson>,
    class: Option<NumClass>,
    e: i64,
}

#[derive(Deserialize)]
struct ComposePayload {
    g1: GroupJson,
    g2: GroupJson,
}

#[derive(Deserialize)]
struct MatrixPayload {
    matrix: [[f64; 2]; 2],
}

#[derive(Deserialize)]
struct SolvePayload {
    from: PointJson,
    to: PointJson,
}

#[derive(Deserialize)]
struct DistPayload {
    p1: PointJson,
    p2: PointJson,
}

#[derive(Deserialize)]
struct DiskPayload {
    #[serde(default = "default_genus")]
    genus: u32,
    beta_range: String,
    alpha_range: String,
}

#[derive(Deserialize)]
struct CheckPayload {
    point: PointJson,
    #[serde(default = "default_rank_bound")]
    rank_bound: i64,
    #[serde(default = "default_deg_bound")]
    deg_bound: i64,
}

fn payload<T: for<'de> Deserialize<'de>>(v: Value) -> Result<T, Failure> {
    serde_json::from_value(v).map_err(|e| usage(format!("invalid payload: {e}")))
}

fn point(p: &PointJson) -> Result<StabilityPoint, Failure> {
    Ok(StabilityPoint::try_from(p)?)
}

fn point_out(s: &StabilityPoint) -> Value {
    serde_json::to_value(PointJson::from(s)).expect("serializable point")
}

fn group_out(g: &GroupElement) -> Value {
    serde_json::to_value(GroupJson::from(g)).expect("serializable group element")
}

/// Result of one command: JSON, or CSV text for the disk sampler.
enum Reply {
    Json(Value),
    Text(String),
}

fn execute(command: &str, body: Value) -> Result<Reply, Failure> {
    let out = match command {
        "phase" => {
            let p: ClassPayload = payload(body)?;
            phase_json(&point(&p.point)?.phase(p.shift, p.class)?)
        }
        "charge" => {
            let p: ClassPayload = payload(body)?;
            let z = point(&p.point)?.central_charge(p.class);
            json!({ "z": [z.re, z.im] })
        }
        "hn" => {
            let p: ObjectPayload = payload(body)?;
            let s = point(&p.point)?;
            hn_json(&s.hn(&p.object.to_object(s.genus())?)?)
        }
        "mass" => {
            let p: ObjectPayload = payload(body)?;
            let s = point(&p.point)?;
            json!({ "mass": s.mass(&p.object.to_object(s.genus())?)? })
        }
        "classify" => {
            let p: BetaPayload = payload(body)?;
            let beta = Beta::try_from(&p.beta)?;
            json!({ "verdict": classify(p.genus, &beta).as_str() })
        }
        "act c" => {
            let p: ActCPayload = payload(body)?;
            point_out(&act_c(&point(&p.point)?, Complex64::new(p.lambda[0], p.lambda[1])))
        }
        "act group" => {
            let p: ActGroupPayload = payload(body)?;
            let g = GroupElement::try_from(&p.element)?;
            point_out(&act(&point(&p.point)?, &g)?)
        }
        "act tensor" => {
            let p: TensorPayload = payload(body)?;
            match (p.point, p.class) {
                (Some(pt), None) => point_out(&point(&pt)?.twisted(p.e)),
                (None, Some(c)) => {
                    let t = c.twist(p.e);
                    json!({ "r": t.r, "d": t.d })
                }
                _ => return Err(usage("act tensor needs exactly one of point or class")),
            }
        }
        "compose" => {
            let p: ComposePayload = payload(body)?;
            let g1 = GroupElement::try_from(&p.g1)?;
            let g2 = GroupElement::try_from(&p.g2)?;
            group_out(&g1.compose(&g2)?)
        }
        "chart fwd" => {
            let p: MatrixPayload = payload(body)?;
            serde_json::to_value(ChartJson::from(&chart_fwd(&p.matrix)?)).expect("chart")
        }
        "chart inv" => {
            let p: ChartJson = payload(body)?;
            json!({ "matrix": chart_inv(&(&p).into())? })
        }
        "solve" => {
            let p: SolvePayload = payload(body)?;
            group_out(&solve_transitive(&point(&p.from)?, &point(&p.to)?)?)
        }
        "dist" => {
            let p: DistPayload = payload(body)?;
            distance_json(&slicing_distance(&point(&p.p1)?, &point(&p.p2)?)?)
        }
        "pm embed" => {
            let p: WithPoint = payload(body)?;
            pm_json(&pm_embed(&point(&p.point)?)?)
        }
        "pm boundary" => {
            let p: BetaPayload = payload(body)?;
            match Beta::try_from(&p.beta)? {
                Beta::Finite(b) => pm_json(&pm_boundary_limit(&b, p.genus)?),
                Beta::Infinity => {
                    return Err(Failure::Domain(Error::InvalidPoint(
                        "the boundary limit needs a finite beta".into(),
                    )))
                }
            }
        }
        "pm sample-disk" => {
            let p: DiskPayload = payload(body)?;
            let beta: SampleRange = p.beta_range.parse().map_err(|e: Error| usage(e.to_string()))?;
            let alpha: SampleRange = p.alpha_range.parse().map_err(|e: Error| usage(e.to_string()))?;
            return Ok(Reply::Text(sample_disk_csv(p.genus, beta, alpha)?));
        }
        "gldim" => {
            let p: WithPoint = payload(body)?;
            gldim_json(&gldim(&point(&p.point)?)?)
        }
        "check clsy" | "check weak" => {
            let p: CheckPayload = payload(body)?;
            let s = point(&p.point)?;
            let corpus = enumerate_ses(&s, p.rank_bound, p.deg_bound);
            let verdict = if command == "check clsy" {
                check_clsy(&s, &corpus)?
            } else {
                check_strict_weak(&s, &corpus)?
            };
            serde_json::to_value(verdict).expect("verdict")
        }
        "check regular" => {
            let p: WithPoint = payload(body)?;
            serde_json::to_value(check_regular(&point(&p.point)?)).expect("verdict")
        }
        other => return Err(usage(format!("unknown command '{other}'"))),
    };
    Ok(Reply::Json(out))
}

fn render(mut v: Value) -> String {
    normalize_zeros(&mut v);
    let mut s = serde_json::to_string(&v).expect("serializable");
    s.push('\n');
    s
}

fn failure_output(f: Failure, command: &str) -> Output {
    let (code, body) = match f {
        Failure::Usage(message) => (
            2,
            json!({ "code": "usage", "message": message, "context": { "command": command } }),
        ),
        Failure::Domain(e) => (
            1,
            json!({ "code": error_code(&e), "message": e.to_string(), "context": { "command": command } }),
        ),
    };
    Output {
        code,
        stdout: String::new(),
        stderr: render(body),
    }
}

#[derive(Deserialize)]
struct Envelope {
    command: String,
    #[serde(default)]
    version: Value,
    #[serde(default)]
    payload: Value,
}

fn run_envelope(stdin: &mut dyn Read) -> Output {
    let mut text = String::new();
    if let Err(e) = stdin.read_to_string(&mut text) {
        return failure_output(usage(format!("cannot read stdin: {e}")), "");
    }
    let env: Envelope = match serde_json::from_str(&text) {
        Ok(env) => env,
        Err(e) => return failure_output(usage(format!("invalid request envelope: {e}")), ""),
    };
    match execute(&env.command, env.payload) {
        Ok(reply) => {
            let result = match reply {
                Reply::Json(v) => v,
                Reply::Text(t) => json!({ "csv": t }),
            };
            Output {
                code: 0,
                stdout: render(json!({ "command": env.command, "version": env.version, "result": result })),
                stderr: String::new(),
            }
        }
        Err(f) => failure_output(f, &env.command),
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, S>(args: I, stdin: &mut dyn Read) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Output {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Output {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let Some(cmd) = cli.command else {
        return run_envelope(stdin);
    };
    let (name, body) = match to_request(&cmd) {
        Ok(req) => req,
        Err(f) => return failure_output(f, ""),
    };
    match execute(name, body) {
        Ok(Reply::Json(v)) => Output {
            code: 0,
            stdout: render(v),
            stderr: String::new(),
        },
        Ok(Reply::Text(t)) => Output {
            code: 0,
            stdout: t,
            stderr: String::new(),
        },
        Err(f) => failure_output(f, name),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> Output {
        let mut argv = vec!["stabcurve"];
        argv.extend_from_slice(args);
        run(argv, &mut std::io::empty())
    }

    #[test]
    fn classify_example() {
        let o = call(&["classify", "--genus", "1", "--beta", "sqrt:2"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert_eq!(o.stdout.trim(), r#"{"verdict":"stability_not_locally_finite"}"#);
    }

    #[test]
    fn gldim_example() {
        let o = call(&["gldim", "--genus", "1", "--tau", "0,1"]);
        assert_eq!(o.stdout.trim(), r#"{"exact":true,"value":1.0}"#);
    }

    #[test]
    fn chart_example() {
        let o = call(&["chart", "fwd", "--matrix", "1,0,0,1"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v, json!({ "c": [1.0, 0.0], "w": [0.0, 1.0] }));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["frobnicate"]).code, 2);
        assert_eq!(call(&["phase", "--class", "1,0"]).code, 2);
        let o = call(&["phase", "--beta", "0", "--class", "1,0"]);
        assert_eq!(o.code, 1);
        let err: Value = serde_json::from_str(&o.stderr).unwrap();
        assert_eq!(err["code"], "degenerate_class");
        assert_eq!(call(&["--help"]).code, 0);
    }

    #[test]
    fn envelope_echoes_version() {
        let req = r#"{"command":"classify","version":"7","payload":{"genus":0,"beta":"1/2"}}"#;
        let o = run(["stabcurve"], &mut req.as_bytes());
        assert_eq!(o.code, 0, "{}", o.stderr);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["version"], "7");
        assert_eq!(v["result"]["verdict"], "stability_locally_finite");
    }
}
