//! Command line harness over rigidspace-core.
//!
//! Exit codes: 0 on success (all reports pass or are skipped), 1 when a
//! verification fails or an input fails its membership check, 2 on usage,
//! parse, or file errors.

mod claims;
mod report;
mod specs;

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use rigidspace_core::{EvenSubgroup, NodeKind, PlaneGenerator};

use report::{Format, RunConfig, Status, VerificationReport, VerifyDocument, SCHEMA};

#[derive(Parser)]
#[command(
    name = "rigidspace",
    version,
    about = "Enumerate, verify, and decompose the rigid symmetry structures of coordinate spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Exhaustive degree bound for signed (double-kind) checks; plain
    /// permutation checks go one degree further. At most 6.
    #[arg(long, global = true, value_name = "N")]
    max_n: Option<usize>,

    /// Tolerance for float comparisons.
    #[arg(long, global = true, default_value_t = 1e-9, value_name = "EPS")]
    tol: f64,

    /// Seed for every sampled check.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Write the output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Simple,
    Double,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EmbedKind {
    /// Sample special unitary matrices and check their real expansions.
    SuToSo,
    /// Expand the quaternion unit group into signed permutations.
    QuatToPerm,
}

#[derive(Subcommand)]
enum Command {
    /// List the elements of a finite group (P:n, P+:n, P-:n, Ppm:2+1, Q8).
    Enumerate { spec: String },
    /// Run a verification suite: all, fields, groups, graphs, quotients
    /// (aliases section0..section3).
    Verify { suite: String },
    /// Print the syndrome of a parity vector under an even subgroup
    /// (H+:n, H-:n, Hpm:2+2, full:n).
    Quotient {
        subgroup: String,
        vector: String,
        /// Also list the node classes the subgroup induces.
        #[arg(long, value_enum, value_name = "KIND")]
        classes: Option<KindArg>,
    },
    /// Decompose a special orthogonal matrix (JSON row arrays) into
    /// adjacent plane rotations.
    Decompose { matrix_file: PathBuf },
    /// Verify one of the structure-preserving embeddings.
    Embed {
        kind: EmbedKind,
        /// Degree for su-to-so (1..=5); ignored by quat-to-perm.
        n: Option<usize>,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    if !(cli.tol > 0.0) {
        eprintln!("error: --tol must be positive");
        return 2;
    }
    let max_n = cli.max_n.unwrap_or(4);
    if max_n > 6 {
        eprintln!("error: --max-n is capped at 6 for exhaustive signed checks");
        return 2;
    }
    let config = RunConfig {
        max_n,
        tolerance: cli.tol,
        seed: cli.seed,
        format: match cli.format {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        },
    };
    let out = cli.out;

    match cli.command {
        Command::Enumerate { spec } => cmd_enumerate(&spec, &config, &out),
        Command::Verify { suite } => cmd_verify(&suite, &config, &out),
        Command::Quotient { subgroup, vector, classes } => {
            cmd_quotient(&subgroup, &vector, classes, &config, &out)
        }
        Command::Decompose { matrix_file } => cmd_decompose(&matrix_file, &config, &out),
        Command::Embed { kind, n } => cmd_embed(kind, n, &config, &out),
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> i32 {
    match out {
        None => {
            print!("{text}");
            let _ = std::io::stdout().flush();
            0
        }
        Some(path) => match std::fs::write(path, text) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", path.display());
                2
            }
        },
    }
}

fn cmd_enumerate(spec_str: &str, config: &RunConfig, out: &Option<PathBuf>) -> i32 {
    let spec: specs::GroupSpec = match spec_str.parse() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let elements = match specs::enumerate_group(&spec) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let text = match config.format {
        Format::Json => {
            let doc = json!({
                "schema": SCHEMA,
                "command": "enumerate",
                "spec": spec_str,
                "order": elements.len(),
                "elements": elements,
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
        }
        Format::Text => {
            let mut s = String::new();
            for e in &elements {
                s.push_str(e);
                s.push('\n');
            }
            s.push_str(&format!("order: {}\n", elements.len()));
            s
        }
    };
    emit(out, &text)
}

fn cmd_verify(suite: &str, config: &RunConfig, out: &Option<PathBuf>) -> i32 {
    let suites = match claims::parse_suites(suite) {
        Some(s) => s,
        None => {
            eprintln!(
                "error: unknown suite '{suite}' (expected all, fields, groups, graphs, \
                 quotients, or section0..section3)"
            );
            return 2;
        }
    };
    let started = Instant::now();
    let reports = claims::run_suites(&suites, config);
    let runtime_ms = started.elapsed().as_millis();
    let text = match config.format {
        Format::Json => {
            let doc = VerifyDocument {
                schema: SCHEMA,
                command: "verify",
                suite: claims::canonical_suite_name(&suites),
                config,
                reports: &reports,
            };
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
        }
        Format::Text => report::render_reports_text(&reports, runtime_ms),
    };
    let code = emit(out, &text);
    if code != 0 {
        return code;
    }
    if reports.iter().any(|r| r.status == Status::Fail) {
        1
    } else {
        0
    }
}

fn cmd_quotient(
    subgroup: &str,
    vector: &str,
    classes: Option<KindArg>,
    config: &RunConfig,
    out: &Option<PathBuf>,
) -> i32 {
    let h: EvenSubgroup = match subgroup.parse() {
        Ok(h) => h,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let v: rigidspace_core::BitVector = match vector.parse() {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let syndrome = match h.syndrome(&v) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let fact = match classes {
        None => None,
        Some(kind) => {
            let kind = match kind {
                KindArg::Simple => NodeKind::Simple,
                KindArg::Double => NodeKind::Double,
            };
            match h.induced_factorization(kind) {
                Ok(f) => Some(f),
                Err(e) => {
                    eprintln!("error: {e}");
                    return 2;
                }
            }
        }
    };
    let text = match config.format {
        Format::Json => {
            let classes_json = fact.as_ref().map(|f| f.classes().to_vec());
            let doc = json!({
                "schema": SCHEMA,
                "command": "quotient",
                "subgroup": h.to_string(),
                "vector": v.to_string(),
                "syndrome": syndrome.to_string(),
                "classes": classes_json,
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
        }
        Format::Text => {
            let mut s = format!("syndrome: \"{syndrome}\"\n");
            if let Some(f) = &fact {
                s.push_str(&format!("classes: {f}\n"));
            }
            s
        }
    };
    emit(out, &text)
}

fn cmd_decompose(path: &PathBuf, config: &RunConfig, out: &Option<PathBuf>) -> i32 {
    let m = match specs::read_matrix(path) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let word = match rigidspace_core::givens_decompose(&m, config.tolerance) {
        Ok(w) => w,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let rebuilt = rigidspace_core::word_matrix(&word, m.n()).expect("matching degree");
    let err = rebuilt.max_abs_diff(&m).expect("matching size");
    let text = match config.format {
        Format::Json => {
            let gens: Vec<_> = word
                .iter()
                .map(|g| match g {
                    PlaneGenerator::Rotation { k, angle } => {
                        json!({"kind": "rotation", "k": k, "angle": angle})
                    }
                    PlaneGenerator::Boost { k, rapidity } => {
                        json!({"kind": "boost", "k": k, "rapidity": rapidity})
                    }
                    PlaneGenerator::Unitary { k, .. } => {
                        json!({"kind": "unitary", "k": k})
                    }
                })
                .collect();
            let doc = json!({
                "schema": SCHEMA,
                "command": "decompose",
                "n": m.n(),
                "generators": gens,
                "reconstruction_error": err,
            });
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
        }
        Format::Text => {
            let mut s = String::new();
            for g in &word {
                match g {
                    PlaneGenerator::Rotation { k, angle } => {
                        s.push_str(&format!("rotation k={k} angle={angle}\n"));
                    }
                    PlaneGenerator::Boost { k, rapidity } => {
                        s.push_str(&format!("boost k={k} rapidity={rapidity}\n"));
                    }
                    PlaneGenerator::Unitary { k, .. } => {
                        s.push_str(&format!("unitary k={k}\n"));
                    }
                }
            }
            s.push_str(&format!("generators: {}\n", word.len()));
            s.push_str(&format!("reconstruction error: {err:e}\n"));
            s
        }
    };
    emit(out, &text)
}

fn cmd_embed(
    kind: EmbedKind,
    n: Option<usize>,
    config: &RunConfig,
    out: &Option<PathBuf>,
) -> i32 {
    let started = Instant::now();
    let report: VerificationReport = match kind {
        EmbedKind::SuToSo => {
            let n = n.unwrap_or(3);
            if !(1..=5).contains(&n) {
                eprintln!("error: su-to-so degree must be between 1 and 5");
                return 2;
            }
            claims::embed_su_report(n, config)
        }
        EmbedKind::QuatToPerm => claims::embed_quat_report(),
    };
    let runtime_ms = started.elapsed().as_millis();
    let reports = vec![report];
    let text = match config.format {
        Format::Json => {
            let doc = VerifyDocument {
                schema: SCHEMA,
                command: "embed",
                suite: match kind {
                    EmbedKind::SuToSo => "su-to-so",
                    EmbedKind::QuatToPerm => "quat-to-perm",
                },
                config,
                reports: &reports,
            };
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"))
        }
        Format::Text => report::render_reports_text(&reports, runtime_ms),
    };
    let code = emit(out, &text);
    if code != 0 {
        return code;
    }
    if reports.iter().any(|r| r.status == Status::Fail) {
        1
    } else {
        0
    }
}
