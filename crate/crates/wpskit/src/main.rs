//! Command line front end: every library operation with JSON input and
//! output, for scripting and regression testing.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use wpskit::cohomology::{h_line_bundle, h_omega, CohomologyAnswer, IndeterminateReason};
use wpskit::equivalence::{
    are_equivalent_fans, are_equivalent_polytopes, fan_switch_matrices, polytope_switch_data,
};
use wpskit::error::Error;
use wpskit::fan::{canonical_fan, fan_from_weights, Fan};
use wpskit::json::{
    bigint_to_json, matrix_to_json, rational_to_json, rational_vector_to_json, rows_to_json,
    vector_to_json, InputDoc,
};
use wpskit::lattice::{
    box_cell_count, enumerate_interior_points, enumerate_lattice_points, face_dimension,
    FacePosition,
};
use wpskit::polytope::{
    polytope_from_fan, polytope_from_weights, recognize_polytope, wpp_decompose, SimplexPolytope,
};
use wpskit::weights::WeightsVector;

#[derive(Parser)]
#[command(
    name = "wpskit",
    about = "Exact computations on weighted projective spaces",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a weights vector to its normalized form
    ReduceWeights { input: Option<String> },
    /// Sum, lcm, Gorenstein index and Gorenstein/Fano predicate
    Gorenstein { input: Option<String> },
    /// Build the fan of P(Q) from a weights vector
    Fan { input: Option<String> },
    /// Build the canonical (unique) fan of P(Q)
    CanonicalFan { input: Option<String> },
    /// Divide each generator of a fan by its gcd
    ReduceFan { input: Option<String> },
    /// Recognize a wps fan and report its weights
    RecognizeFan { input: Option<String> },
    /// Test whether a fan is a fan of P(Q) for the given weights
    IsFanOf {
        /// Comma-separated weights, e.g. 3,1,2
        #[arg(long)]
        weights: String,
        input: Option<String>,
    },
    /// Polytope of (P(Q), O(m)) from weights or from a fan
    Polytope {
        /// Comma-separated weights, e.g. 3,1,2
        #[arg(long)]
        weights: Option<String>,
        /// JSON file with the fan generators
        #[arg(long)]
        fan_file: Option<String>,
        /// Polarization level
        #[arg(long, default_value = "1")]
        m: String,
    },
    /// Recognize weights, fan and polarization of a polytope (or run the
    /// WPP decomposition on a raw matrix)
    RecognizePolytope { input: Option<String> },
    /// Decide whether two fans define the same wps
    EquivFans { first: String, second: String },
    /// Decide whether two polytopes define isomorphic polarized wps's
    EquivPolytopes { first: String, second: String },
    /// Switching matrices between two equivalent fans
    SwitchFans { first: String, second: String },
    /// Affine switch between two equivalent polytopes
    SwitchPolytopes { first: String, second: String },
    /// Enumerate the lattice points of a polytope
    Points {
        /// Enumerate only strictly interior points
        #[arg(long)]
        interior: bool,
        input: Option<String>,
    },
    /// Dimension of the smallest face containing a point
    FaceDim {
        /// Comma-separated rational coordinates, e.g. 1,12/5
        #[arg(long)]
        point: String,
        input: Option<String>,
    },
    /// dim H^q(P(Q), O(m))
    CohomologyO {
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
        #[arg(long, allow_hyphen_values = true)]
        m: String,
        /// Comma-separated weights, e.g. 2,3,5
        #[arg(long)]
        weights: String,
    },
    /// dim H^q(P(Q), Omega^p(m))
    CohomologyOmega {
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        m: String,
        /// Comma-separated weights, e.g. 2,3,5
        #[arg(long)]
        weights: String,
    },
}

/// A command outcome carrying the process exit code.
enum Failure {
    Domain(Error),
    Indeterminate(IndeterminateReason),
    Budget(BigInt, BigInt),
}

type CmdResult = std::result::Result<Value, Failure>;

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn read_input(path: Option<&str>) -> Result<String, Error> {
    match path {
        None | Some("-") => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Invalid(format!("cannot read standard input: {}", e)))?;
            Ok(buf)
        }
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| Error::Invalid(format!("cannot read {}: {}", p, e))),
    }
}

fn parse_doc(path: Option<&str>) -> Result<InputDoc, Error> {
    InputDoc::parse(&read_input(path)?)
}

fn weights_from_doc(doc: InputDoc) -> Result<WeightsVector, Error> {
    match doc {
        InputDoc::Weights(w) => WeightsVector::new(w),
        _ => Err(Error::Invalid("expected a document with \"weights\"".into())),
    }
}

fn fan_from_doc(doc: InputDoc) -> Result<Fan, Error> {
    match doc {
        InputDoc::Generators(g) => Fan::new(g),
        _ => Err(Error::Invalid("expected a document with \"generators\"".into())),
    }
}

fn polytope_from_doc(doc: InputDoc) -> Result<SimplexPolytope, Error> {
    match doc {
        InputDoc::Vertices(v) => SimplexPolytope::new(v),
        _ => Err(Error::Invalid("expected a document with \"vertices\"".into())),
    }
}

fn parse_weights_flag(s: &str) -> Result<WeightsVector, Error> {
    let parts: Result<Vec<BigInt>, Error> = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Invalid(format!("bad weight {:?}", t)))
        })
        .collect();
    WeightsVector::new(parts?)
}

fn parse_bigint_flag(s: &str) -> Result<BigInt, Error> {
    s.trim()
        .parse::<BigInt>()
        .map_err(|_| Error::Invalid(format!("not an integer: {:?}", s)))
}

fn parse_point_flag(s: &str) -> Result<Vec<BigRational>, Error> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            match t.split_once('/') {
                Some((n, d)) => {
                    let num = n
                        .trim()
                        .parse::<BigInt>()
                        .map_err(|_| Error::Invalid(format!("bad coordinate {:?}", t)))?;
                    let den = d
                        .trim()
                        .parse::<BigInt>()
                        .map_err(|_| Error::Invalid(format!("bad coordinate {:?}", t)))?;
                    if den.is_zero() {
                        return Err(Error::Invalid(format!("zero denominator in {:?}", t)));
                    }
                    Ok(BigRational::new(num, den))
                }
                None => t
                    .parse::<BigInt>()
                    .map(BigRational::from)
                    .map_err(|_| Error::Invalid(format!("bad coordinate {:?}", t))),
            }
        })
        .collect()
}

fn cell_budget() -> Result<BigInt, Error> {
    match std::env::var("WPSKIT_MAX_CELLS") {
        Ok(s) => {
            let v = s
                .parse::<BigInt>()
                .map_err(|_| Error::Invalid(format!("bad WPSKIT_MAX_CELLS {:?}", s)))?;
            if !v.is_positive() {
                return Err(Error::Invalid("WPSKIT_MAX_CELLS must be positive".into()));
            }
            Ok(v)
        }
        Err(_) => Ok(BigInt::from(100_000_000u64)),
    }
}

fn check_budget(p: &SimplexPolytope) -> Result<(), Failure> {
    let budget = cell_budget().map_err(Failure::Domain)?;
    let cells = box_cell_count(p);
    if cells > budget {
        return Err(Failure::Budget(cells, budget));
    }
    Ok(())
}

fn fan_payload(fan: &Fan) -> Value {
    json!({ "generators": rows_to_json(fan.generators()) })
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::ReduceWeights { input } => {
            let q = weights_from_doc(parse_doc(input.as_deref())?)?;
            Ok(json!({ "weights": vector_to_json(q.reduced().entries()) }))
        }
        Command::Gorenstein { input } => {
            let q = weights_from_doc(parse_doc(input.as_deref())?)?;
            Ok(json!({
                "sum": bigint_to_json(&q.sum()),
                "delta": bigint_to_json(&q.delta()),
                "index": rational_to_json(&q.gorenstein_index()),
                "gorenstein": q.is_gorenstein(),
            }))
        }
        Command::Fan { input } => {
            let q = weights_from_doc(parse_doc(input.as_deref())?)?;
            Ok(fan_payload(&fan_from_weights(&q)))
        }
        Command::CanonicalFan { input } => {
            let q = weights_from_doc(parse_doc(input.as_deref())?)?;
            Ok(fan_payload(&canonical_fan(&q)))
        }
        Command::ReduceFan { input } => {
            let fan = fan_from_doc(parse_doc(input.as_deref())?)?;
            Ok(fan_payload(&fan.reduced()?))
        }
        Command::RecognizeFan { input } => {
            let fan = fan_from_doc(parse_doc(input.as_deref())?)?;
            let weights = fan.weights()?;
            Ok(json!({
                "is_wps_fan": true,
                "weights": vector_to_json(weights.entries()),
            }))
        }
        Command::IsFanOf { weights, input } => {
            let q = parse_weights_flag(&weights)?;
            let fan = fan_from_doc(parse_doc(input.as_deref())?)?;
            Ok(json!({ "is_fan_of": fan.is_fan_of(&q)? }))
        }
        Command::Polytope { weights, fan_file, m } => {
            let m = parse_bigint_flag(&m)?;
            let p = match (weights, fan_file) {
                (Some(w), None) => polytope_from_weights(&parse_weights_flag(&w)?, &m)?,
                (None, Some(f)) => {
                    polytope_from_fan(&fan_from_doc(parse_doc(Some(&f))?)?, &m)?
                }
                _ => {
                    return Err(Failure::Domain(Error::Invalid(
                        "exactly one of --weights / --fan-file is required".into(),
                    )))
                }
            };
            Ok(json!({ "vertices": rows_to_json(p.vertices()) }))
        }
        Command::RecognizePolytope { input } => match parse_doc(input.as_deref())? {
            InputDoc::Vertices(v) => {
                let p = SimplexPolytope::new(v)?;
                let (weights, fan, m) = recognize_polytope(&p)?;
                Ok(json!({
                    "weights": vector_to_json(weights.entries()),
                    "generators": rows_to_json(fan.generators()),
                    "polarization": bigint_to_json(&m),
                }))
            }
            InputDoc::Matrix(mat) => {
                let dec = wpp_decompose(&mat)?;
                Ok(json!({
                    "pseudo_weights": vector_to_json(&dec.pseudo_weights),
                    "what": matrix_to_json(&dec.what),
                    "pseudo_fan": Value::Array(
                        dec.pseudo_fan.iter().map(|r| rational_vector_to_json(r)).collect()
                    ),
                    "polarization": bigint_to_json(&dec.polarization),
                    "admissible": dec.is_admissible(),
                }))
            }
            _ => Err(Failure::Domain(Error::Invalid(
                "expected a document with \"vertices\" or \"matrix\"".into(),
            ))),
        },
        Command::EquivFans { first, second } => {
            let f1 = fan_from_doc(parse_doc(Some(&first))?)?;
            let f2 = fan_from_doc(parse_doc(Some(&second))?)?;
            Ok(json!({ "equivalent": are_equivalent_fans(&f1, &f2)? }))
        }
        Command::EquivPolytopes { first, second } => {
            let p1 = polytope_from_doc(parse_doc(Some(&first))?)?;
            let p2 = polytope_from_doc(parse_doc(Some(&second))?)?;
            Ok(json!({ "equivalent": are_equivalent_polytopes(&p1, &p2)? }))
        }
        Command::SwitchFans { first, second } => {
            let f1 = fan_from_doc(parse_doc(Some(&first))?)?;
            let f2 = fan_from_doc(parse_doc(Some(&second))?)?;
            let data = fan_switch_matrices(&f1, &f2)?;
            Ok(json!({
                "alpha": matrix_to_json(&data.alpha),
                "beta": matrix_to_json(&data.beta),
                "gamma": matrix_to_json(&data.gamma),
                "delta": matrix_to_json(&data.delta),
                "sigma": data.sigma.one_based_images(),
            }))
        }
        Command::SwitchPolytopes { first, second } => {
            let p1 = polytope_from_doc(parse_doc(Some(&first))?)?;
            let p2 = polytope_from_doc(parse_doc(Some(&second))?)?;
            let data = polytope_switch_data(&p1, &p2)?;
            Ok(json!({
                "theta": matrix_to_json(&data.theta),
                "delta": matrix_to_json(&data.delta),
                "nu": vector_to_json(&data.nu),
            }))
        }
        Command::Points { interior, input } => {
            let p = polytope_from_doc(parse_doc(input.as_deref())?)?;
            check_budget(&p)?;
            let points = if interior {
                enumerate_interior_points(&p)?
            } else {
                enumerate_lattice_points(&p)?
            };
            Ok(json!({
                "count": points.len(),
                "points": rows_to_json(&points),
            }))
        }
        Command::FaceDim { point, input } => {
            let p = polytope_from_doc(parse_doc(input.as_deref())?)?;
            let x = parse_point_flag(&point)?;
            match face_dimension(&x, &p)? {
                FacePosition::Outside => Ok(json!({ "position": "outside" })),
                FacePosition::FaceDim(k) => Ok(json!({ "position": "face", "dim": k })),
            }
        }
        Command::CohomologyO { q, m, weights } => {
            let qvec = parse_weights_flag(&weights)?;
            let m = parse_bigint_flag(&m)?;
            guard_line_bundle(q, &m, &qvec)?;
            match h_line_bundle(q, &m, &qvec)? {
                CohomologyAnswer::Value(h) => Ok(json!({ "h": bigint_to_json(&h) })),
                CohomologyAnswer::Indeterminate(reason) => Err(Failure::Indeterminate(reason)),
            }
        }
        Command::CohomologyOmega { q, p, m, weights } => {
            let qvec = parse_weights_flag(&weights)?;
            let m = parse_bigint_flag(&m)?;
            if !m.is_zero() {
                let level = m.abs();
                let active = if m.is_positive() { 0 } else { qvec.dim() as i64 };
                if q == active {
                    check_budget(&polytope_from_weights(&qvec, &level)?)?;
                }
            }
            let h = h_omega(q, p, &m, &qvec)?;
            Ok(json!({ "h": bigint_to_json(&h) }))
        }
    }
}

/// Pre-flight budget check mirroring the enumeration branches of
/// `h_line_bundle`.
fn guard_line_bundle(q: i64, m: &BigInt, weights: &WeightsVector) -> Result<(), Failure> {
    if q < 0 {
        return Ok(()); // the library reports the usage error
    }
    let level = if m.is_positive() && q == 0 {
        Some(m.clone())
    } else if m.is_negative() && q == weights.dim() as i64 {
        let index = weights.gorenstein_index();
        if index.is_integer() {
            let dual = -m - index.to_integer();
            if dual.is_positive() {
                Some(dual)
            } else {
                None
            }
        } else {
            None
        }
    } else {
        None
    };
    if let Some(level) = level {
        check_budget(&polytope_from_weights(weights, &level)?)?;
    }
    Ok(())
}

fn failure_details(f: &Failure) -> (String, String, u8) {
    match f {
        Failure::Domain(e) => {
            let (kind, code) = match e {
                Error::NotWpsFan
                | Error::NotAdmissiblePolytope
                | Error::FirstNotWpsFan
                | Error::SecondNotWpsFan
                | Error::FansNotEquivalent
                | Error::FirstNotAdmissible
                | Error::SecondNotAdmissible
                | Error::PolytopesNotEquivalent => ("domain", 1),
                Error::NegativeLevel | Error::NegativeFormDegree => ("usage", 2),
                Error::Shape(_) | Error::Invalid(_) => ("parse", 2),
                Error::Internal(_) => ("internal", 1),
            };
            (kind.to_string(), e.to_string(), code)
        }
        Failure::Indeterminate(reason) => {
            let message = match reason {
                IndeterminateReason::NonGorensteinNegative => {
                    "Unable to compute it: no Gorenstein case, please use hOmega"
                }
                IndeterminateReason::GorensteinGapRange => "Unable to compute it in this range",
            };
            ("indeterminate".to_string(), message.to_string(), 3)
        }
        Failure::Budget(cells, budget) => (
            "budget".to_string(),
            format!(
                "bounding box has {} cells, exceeding the budget of {} (set WPSKIT_MAX_CELLS to raise it)",
                cells, budget
            ),
            4,
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(result) => {
            let envelope = json!({ "ok": true, "result": result });
            println!("{}", envelope);
            ExitCode::SUCCESS
        }
        Err(failure) => {
            let (kind, message, code) = failure_details(&failure);
            let envelope = json!({
                "ok": false,
                "error": { "kind": kind, "message": message },
            });
            println!("{}", envelope);
            ExitCode::from(code)
        }
    }
}
