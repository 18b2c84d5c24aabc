use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ktorsion::{
    evaluate_at_one, ghost, has_even_total_degree, higman_linearize, lemma3_factor, mennicke_fixture, mennicke_inverse,
    parse_artifact, sk1_det_check, swan_weibel_theta, theorem1_derivation, torsion_scan, trivialize_k_torsion,
    unipotent_normalize, verify_derivation_log, whitehead_word, witt_add, witt_coords, witt_mul, witt_neg, witt_series,
    Artifact, DerivationLog, Error, GradedElem, PolyMatrix, RingDescriptor, RingElem, SeriesUnit, TruncatedPoly,
    Verdict, WittVector, WordCert,
};
use serde_json::{json, Value};

const RING_HELP: &str = "Ring descriptor: Z, Q, Z/n, a polynomial ring such as Z/2[X,Y] or Z[Y][X], \
or a quotient such as Z[X,Y]/(X^3)";

#[derive(Parser)]
#[command(
    name = "ktorsion",
    version,
    about = "Exact Witt vectors, stable matrix reductions and checkable derivation logs"
)]
#[command(
    after_help = "Rings: Z, Q, Z/8, Z/2[X,Y], Z[Y][X], Z[X,Y]/(X^3).\nElements: 3, -2/5, 3 mod 8, 1 + 2*X + X^3 (juxtaposition multiplies). \
Matrices: [[1, X], [0, 1]], row-major.\n\nExit status: 0 success or accepted, 1 rejected or domain error, 2 usage error."
)]
struct Cli {
    /// Print machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RingArg {
    #[arg(long, help = RING_HELP)]
    ring: RingDescriptor,
}

#[derive(Subcommand)]
enum Command {
    /// Big Witt vector arithmetic on R_t = R[X]/(X^{t+1})
    Witt {
        #[command(subcommand)]
        op: WittOp,
    },
    /// Split f = 1 + X^r P as (1 + P(0) X^r)(1 + X^{r+1} Q)
    Lemma3 {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        poly: String,
    },
    /// Derive f = 1 from f^k = 1 for a unit k, as a checkable log
    Trivialize {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        emit_log: Option<PathBuf>,
    },
    /// Linearize a polynomial matrix up to stable elementary equivalence
    Higman {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        matrix: String,
        /// Inverse of the matrix; with α(0) = I, also reports the nilpotent N
        #[arg(long)]
        inverse: Option<String>,
        #[arg(long)]
        emit_cert: Option<PathBuf>,
    },
    /// An elementary word for α ⊥ α⁻¹
    Whitehead {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        inverse: String,
        #[arg(long)]
        emit_cert: Option<PathBuf>,
    },
    /// Derive [I + NX] ≡ I from [(I + NX)^k] ≡ I for nilpotent N
    Theorem1 {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: String,
        #[arg(long)]
        emit_log: Option<PathBuf>,
    },
    /// Determinant of a polynomial matrix
    Det {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        matrix: String,
    },
    /// θ(a_0 + a_1 + ...) = a_0 + a_1 X + ... on a polynomial ring graded by degree
    Theta {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        elem: String,
    },
    /// Fixed examples
    Fixture {
        #[command(subcommand)]
        which: FixtureKind,
    },
    /// Check a derivation log or certificate
    Verify { path: PathBuf },
    /// Exhaustive enumerations
    Oracle {
        #[command(subcommand)]
        which: OracleKind,
    },
}

#[derive(Args)]
struct WittArgs {
    #[command(flatten)]
    ring: RingArg,
    #[arg(long)]
    t: usize,
    /// Read operands as coordinate lists "(a1, a2, ...)" instead of series
    #[arg(long)]
    coords: bool,
}

#[derive(Subcommand)]
enum WittOp {
    Add {
        #[command(flatten)]
        w: WittArgs,
        a: String,
        b: String,
    },
    Mul {
        #[command(flatten)]
        w: WittArgs,
        a: String,
        b: String,
    },
    Neg {
        #[command(flatten)]
        w: WittArgs,
        a: String,
    },
    /// Ghost components w_1..w_t
    Ghost {
        #[command(flatten)]
        w: WittArgs,
        a: String,
    },
    /// Coordinates of a series
    Coords {
        #[command(flatten)]
        w: WittArgs,
        a: String,
    },
    /// Series of a coordinate vector
    Series {
        #[command(flatten)]
        w: WittArgs,
        a: String,
    },
}

#[derive(Subcommand)]
enum FixtureKind {
    /// The completion [[1 − XY, X^2], [−Y^2, 1 + XY]] over ring[Y][X]
    Mennicke {
        #[command(flatten)]
        ring: RingArg,
    },
}

#[derive(Subcommand)]
enum OracleKind {
    /// Count f = 1 + a_1 X + ... + a_t X^t over Z/n with f^k = 1
    Torsion {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        k: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
}

enum Failure {
    Domain(Error),
    Io(String),
    Rejected(String, Option<Value>),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Out = Result<(String, Value), Failure>;

fn write_file(path: &Path, body: &str) -> Result<(), Failure> {
    fs::write(path, body).map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))
}

fn witt_operand(w: &WittArgs, s: &str) -> Result<WittVector, Error> {
    if w.coords {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let coords = inner
            .split(',')
            .filter(|p| !p.trim().is_empty())
            .map(|p| RingElem::parse(&w.ring.ring, p))
            .collect::<Result<Vec<_>, _>>()?;
        if coords.len() != w.t {
            return Err(Error::BadShape(format!(
                "expected {} coordinates, got {}",
                w.t,
                coords.len()
            )));
        }
        WittVector::from_coords(&w.ring.ring, &coords)
    } else {
        Ok(witt_coords(&SeriesUnit::parse(&w.ring.ring, w.t, s)?))
    }
}

fn witt_out(v: &WittVector) -> (String, Value) {
    let series = witt_series(v).poly().to_string();
    let coords: Vec<String> = v.coords().iter().map(RingElem::to_bare_string).collect();
    (
        format!("series: {series}\ncoords: {v}"),
        json!({ "series": series, "coords": coords }),
    )
}

fn log_out(log: &DerivationLog, emit: Option<&PathBuf>) -> Out {
    verify_derivation_log(log).map_err(|r| Error::Internal(format!("emitted log fails verification: {r}")))?;
    if let Some(path) = emit {
        write_file(path, &log.to_json())?;
    }
    let text = format!(
        "{} steps ({} exact), verified\nconclusion: {}",
        log.steps.len(),
        log.exact_count(),
        log.conclusion
    );
    Ok((text, serde_json::from_str(&log.to_json()).expect("log is JSON")))
}

fn witt(op: &WittOp) -> Out {
    Ok(match op {
        WittOp::Add { w, a, b } => witt_out(&witt_add(&witt_operand(w, a)?, &witt_operand(w, b)?)?),
        WittOp::Mul { w, a, b } => witt_out(&witt_mul(&witt_operand(w, a)?, &witt_operand(w, b)?)?),
        WittOp::Neg { w, a } => witt_out(&witt_neg(&witt_operand(w, a)?)),
        WittOp::Coords { w, a } | WittOp::Series { w, a } => witt_out(&witt_operand(w, a)?),
        WittOp::Ghost { w, a } => {
            let g: Vec<String> = ghost(&witt_series(&witt_operand(w, a)?))
                .iter()
                .map(RingElem::to_bare_string)
                .collect();
            (format!("({})", g.join(", ")), json!({ "ghost": g }))
        }
    })
}

fn run(cmd: &Command) -> Out {
    match cmd {
        Command::Witt { op } => witt(op),
        Command::Lemma3 { ring, t, r, poly } => {
            let f = TruncatedPoly::parse(&ring.ring, *t, poly)?;
            let (p0, q) = lemma3_factor(&f, *r)?;
            let (p0, q) = (p0.to_bare_string(), q.to_string());
            Ok((format!("P(0) = {p0}\nQ = {q}"), json!({ "p0": p0, "q": q })))
        }
        Command::Trivialize {
            ring,
            t,
            k,
            poly,
            emit_log,
        } => {
            let log = trivialize_k_torsion(&SeriesUnit::parse(&ring.ring, *t, poly)?, *k)?;
            log_out(&log, emit_log.as_ref())
        }
        Command::Theorem1 { ring, k, n, emit_log } => {
            let log = theorem1_derivation(&PolyMatrix::parse(&ring.ring, n)?, *k)?;
            log_out(&log, emit_log.as_ref())
        }
        Command::Higman {
            ring,
            matrix,
            inverse,
            emit_cert,
        } => {
            let a = PolyMatrix::parse(&ring.ring, matrix)?;
            let (text, value, cert) = match inverse {
                Some(inv) => {
                    let u = unipotent_normalize(&a, Some(&PolyMatrix::parse(&ring.ring, inv)?), None)?;
                    let target = u.cert.target().to_string();
                    (
                        format!("linear: {target}\nN: {}\nnilpotency index: {}", u.n, u.nilindex),
                        json!({ "linear": target, "n": u.n.to_string(), "nilindex": u.nilindex }),
                        u.cert,
                    )
                }
                None => {
                    let (b, cert) = higman_linearize(&a)?;
                    (
                        format!("linear: {b}\nsize: {}", b.size()),
                        json!({ "linear": b.to_string(), "size": b.size() }),
                        cert,
                    )
                }
            };
            if let Some(path) = emit_cert {
                write_file(path, &cert.to_json())?;
            }
            Ok((text, value))
        }
        Command::Whitehead {
            ring,
            matrix,
            inverse,
            emit_cert,
        } => {
            let a = PolyMatrix::parse(&ring.ring, matrix)?;
            let inv = PolyMatrix::parse(&ring.ring, inverse)?;
            let word = whitehead_word(&a, &inv)?;
            let target = a.direct_sum(&inv)?;
            let letters: Vec<String> = word.letters().iter().map(ToString::to_string).collect();
            if let Some(path) = emit_cert {
                write_file(
                    path,
                    &WordCert {
                        word,
                        target: target.clone(),
                    }
                    .to_json(),
                )?;
            }
            Ok((
                format!("{} letters: {}\nproduct: {target}", letters.len(), letters.join(" ")),
                json!({ "letters": letters, "product": target.to_string() }),
            ))
        }
        Command::Det { ring, matrix } => {
            let (d, one) = sk1_det_check(&PolyMatrix::parse(&ring.ring, matrix)?);
            let d = d.to_bare_string();
            Ok((format!("det = {d}"), json!({ "det": d, "is_one": one })))
        }
        Command::Theta { ring, elem } => {
            let a = GradedElem::from_elem(&RingElem::parse(&ring.ring, elem)?)?;
            let th = swan_weibel_theta(&a)?;
            let back = evaluate_at_one(&th)?;
            Ok((
                format!("θ = {}\nring: {}", th.to_bare_string(), th.ring()),
                json!({ "theta": th.to_bare_string(), "ring": th.ring().to_string(), "at_one": back.to_bare_string() }),
            ))
        }
        Command::Fixture {
            which: FixtureKind::Mennicke { ring },
        } => {
            let a = mennicke_fixture(&ring.ring)?;
            let inv = mennicke_inverse(&ring.ring)?;
            let (d, _) = sk1_det_check(&a);
            let even = has_even_total_degree(&a);
            let checks = a.mul(&inv)?.is_identity();
            let text = format!(
                "alpha: {a}\ninverse: {inv}\nring: {}\ndet = {}\neven total degree: {even}\nalpha * inverse = I: {checks}",
                a.ring(),
                d.to_bare_string()
            );
            let value = json!({
                "alpha": a.to_string(), "inverse": inv.to_string(), "ring": a.ring().to_string(),
                "det": d.to_bare_string(), "even_total_degree": even, "inverse_checks": checks,
            });
            Ok((text, value))
        }
        Command::Verify { path } => {
            let body =
                fs::read_to_string(path).map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?;
            let artifact = parse_artifact(&body)?;
            let kind = match artifact {
                Artifact::Log(_) => "derivation log",
                Artifact::StableEquivalence(_) => "stable equivalence certificate",
                Artifact::ElementaryWord(_) => "elementary word certificate",
            };
            match artifact.verify() {
                Verdict::Accepted => Ok((format!("{kind}: accepted"), json!({ "accepted": true, "kind": kind }))),
                v @ Verdict::Rejected(_) | v @ Verdict::ReplayFailed => {
                    let step = match &v {
                        Verdict::Rejected(r) => r.step,
                        _ => None,
                    };
                    let reason = match &v {
                        Verdict::Rejected(r) => r.reason.to_string(),
                        _ => "replay failed".into(),
                    };
                    Err(Failure::Rejected(
                        format!("{kind}: {v}"),
                        Some(json!({ "accepted": false, "kind": kind, "step": step, "reason": reason })),
                    ))
                }
            }
        }
        Command::Oracle {
            which: OracleKind::Torsion { ring, t, k, workers },
        } => {
            let report = torsion_scan(&ring.ring, *t, *k, *workers)?;
            let torsion: Vec<String> = report.torsion.iter().map(ToString::to_string).collect();
            Ok((
                report.to_string(),
                json!({ "scanned": report.scanned, "k": k, "torsion": torsion, "only_identity": report.only_identity() }),
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok((text, value)) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&value).expect("value serializes"));
            } else {
                println!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Rejected(text, value)) => {
            match (cli.json, value) {
                (true, Some(v)) => println!("{}", serde_json::to_string_pretty(&v).expect("value serializes")),
                _ => println!("{text}"),
            }
            ExitCode::from(1)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
