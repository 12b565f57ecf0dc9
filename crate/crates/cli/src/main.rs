//! `extremal`: command-line front end for `extremal-core`.
//!
//! Text formats:
//!
//! * a composition is written `(2,0,1)`;
//! * a face is a comma-separated list of compositions, `(1,1,0),(1,0,1)`;
//! * a complex is one face per line;
//! * a matching certificate is one pair per line, `FACE -> FACE`;
//! * an exponent label is a product of factors `x_A^e`, where `A` lists the
//!   members of a subset of `{1..q}` in binary order of the subset: `x_12^3`
//!   for `q <= 9`, `x_{1,12}^3` for larger `q`; factors with exponent zero
//!   are omitted and `^1` is implied;
//! * an ideal file holds one square-free generator per line, either as a
//!   product `x1*x3*x4` or as a 0/1 string; `#` starts a comment.
//!
//! Every subcommand except `gens` produces a report with `checks` whose values
//! are `pass`, `fail` or `flag`. The exit status is 0 when no check failed, 1
//! when one did, and 2 when the computation could not be carried out.

mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use extremal_core::complexes::DEFAULT_FACE_BUDGET;
use extremal_core::homology::Field;
use extremal_core::morse::DEFAULT_MAX_TAYLOR_GENERATORS;

#[derive(Parser, Debug)]
#[command(
    name = "extremal",
    version,
    about = "Resolutions of powers of extremal ideals"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct GlobalOpts {
    /// Coefficient field for homology.
    #[arg(long, global = true, default_value = "gf2", value_parser = parse_field)]
    field: Field,

    /// Largest face dimension (or homological degree) to compute.
    #[arg(long, global = true)]
    max_dim: Option<usize>,

    /// Cap on the number of faces any enumeration may produce.
    #[arg(long, global = true, default_value_t = DEFAULT_FACE_BUDGET)]
    face_budget: usize,

    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Lift the face budget and the Taylor generator cap.
    #[arg(long, global = true)]
    override_budget: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Text,
}

#[derive(Args, Debug, Clone)]
struct QR {
    #[arg(long)]
    q: usize,
    #[arg(long)]
    r: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MatchingKind {
    Edge,
    SmallQ,
    Facet,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the generators of E_q^r with their labels.
    Gens(QR),
    /// Enumerate the Scarf complex of E_q^r.
    Scarf {
        #[command(flatten)]
        qr: QR,
        /// Include every face in the report.
        #[arg(long)]
        faces: bool,
    },
    /// The f-vector of U^r_q.
    Fvector(QR),
    /// Betti numbers of E_q^r.
    Betti(QR),
    /// Closed-form betti numbers and bounds.
    Bounds(QR),
    /// Build or load a Morse matching and verify it.
    VerifyMatching {
        #[command(flatten)]
        qr: QR,
        #[arg(long, value_enum)]
        kind: MatchingKind,
        /// The vector `a` of the facet for `--kind facet`, e.g. `1,0,0`.
        #[arg(long, value_delimiter = ',')]
        a: Option<Vec<u32>>,
        /// Verify this certificate instead of building the matching.
        #[arg(long)]
        certificate: Option<std::path::PathBuf>,
        /// Write the verified matching as a certificate.
        #[arg(long)]
        write_certificate: Option<std::path::PathBuf>,
    },
    /// Compare a square-free ideal's power with E_q^r through psi.
    PsiCheck {
        #[arg(long)]
        ideal: std::path::PathBuf,
        #[arg(long)]
        r: u32,
    },
}

fn parse_field(s: &str) -> Result<Field, String> {
    s.parse().map_err(|e: extremal_core::Error| e.to_string())
}

/// Settings shared by all subcommands.
#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub field: Field,
    pub max_dim: Option<usize>,
    pub face_budget: usize,
    pub max_taylor: usize,
}

impl From<&GlobalOpts> for Settings {
    fn from(g: &GlobalOpts) -> Self {
        if g.override_budget {
            Settings {
                field: g.field,
                max_dim: g.max_dim,
                face_budget: usize::MAX,
                max_taylor: 63,
            }
        } else {
            Settings {
                field: g.field,
                max_dim: g.max_dim,
                face_budget: g.face_budget,
                max_taylor: DEFAULT_MAX_TAYLOR_GENERATORS,
            }
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Gens(_) => "gens",
        Command::Scarf { .. } => "scarf",
        Command::Fvector(_) => "fvector",
        Command::Betti(_) => "betti",
        Command::Bounds(_) => "bounds",
        Command::VerifyMatching { .. } => "verify-matching",
        Command::PsiCheck { .. } => "psi-check",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = command_name(&cli.command);
    let format = cli.global.format.unwrap_or(match cli.command {
        Command::Gens(_) => Format::Text,
        _ => Format::Json,
    });
    if let Err(msg) = configure_threads(cli.global.threads) {
        return fail(name, format, &msg);
    }
    let settings = Settings::from(&cli.global);

    let outcome = match &cli.command {
        Command::Gens(qr) => {
            return match commands::gens(qr.q, qr.r) {
                Ok(rows) => {
                    print_gens(&rows, format);
                    ExitCode::SUCCESS
                }
                Err(e) => fail(name, format, &e.to_string()),
            };
        }
        Command::Scarf { qr, faces } => commands::scarf(qr.q, qr.r, *faces, &settings),
        Command::Fvector(qr) => commands::fvector(qr.q, qr.r, &settings),
        Command::Betti(qr) => commands::betti(qr.q, qr.r, &settings),
        Command::Bounds(qr) => commands::bounds(qr.q, qr.r),
        Command::VerifyMatching {
            qr,
            kind,
            a,
            certificate,
            write_certificate,
        } => commands::verify_matching(
            qr.q,
            qr.r,
            match kind {
                MatchingKind::Edge => commands::Kind::Edge,
                MatchingKind::SmallQ => commands::Kind::SmallQ,
                MatchingKind::Facet => commands::Kind::Facet,
            },
            a.as_deref(),
            certificate.as_deref(),
            write_certificate.as_deref(),
            &settings,
        ),
        Command::PsiCheck { ideal, r } => commands::psi_check(ideal, *r, &settings),
    };

    match outcome {
        Ok(report) => {
            match format {
                Format::Json => emit(&(report.to_json() + "\n")),
                Format::Tsv => emit(&report.to_tsv()),
                Format::Text => emit(&report.to_text()),
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => fail(name, format, &e.to_string()),
    }
}

fn configure_threads(threads: Option<usize>) -> Result<(), String> {
    let Some(n) = threads else {
        return Ok(());
    };
    if n == 0 {
        return Err("--threads must be positive".into());
    }
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())?;
    Ok(())
}

fn print_gens(rows: &[(String, String)], format: Format) {
    match format {
        Format::Json => {
            let list: Vec<serde_json::Value> = rows
                .iter()
                .map(|(c, l)| serde_json::json!({ "composition": c, "label": l }))
                .collect();
            emit(&(serde_json::to_string_pretty(&list).expect("serializes") + "\n"));
        }
        Format::Tsv | Format::Text => {
            let text: String = rows.iter().map(|(c, l)| format!("{c}\t{l}\n")).collect();
            emit(&text);
        }
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn fail(command: &str, format: Format, msg: &str) -> ExitCode {
    match format {
        Format::Json => {
            let v = serde_json::json!({ "command": command, "error": msg });
            emit(&(serde_json::to_string_pretty(&v).expect("serializes") + "\n"));
        }
        Format::Tsv => emit(&format!("command\t{command}\nerror\t{msg}\n")),
        Format::Text => eprintln!("{command}: error: {msg}"),
    }
    ExitCode::from(2)
}
