use std::io::{IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dehnscope::document::InputDocument;
use dehnscope::selftest::run_selftest;
use dehnscope::{analyze_document, AnalyzeOptions, CliError, TextStyle};
use dehnscope_core::exactla::{parse_rational, Rational};
use dehnscope_core::families::{self, FamilyParams};
use dehnscope_core::lie::{FieldKind, FieldTag};

#[derive(Parser)]
#[command(name = "dehnscope", version, about = "Dehn-function and asymptotic-geometry verdicts for standard solvable groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    Arch,
    Nonarch,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze an input document.
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Skip the Chevalley-Eilenberg computations.
        #[arg(long)]
        no_homology: bool,
        /// Print the full statement of every fired rule.
        #[arg(long)]
        citations: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Volume factor of the totally discontinuous part.
        #[arg(long, default_value_t = 1)]
        delta_td: u64,
    },
    /// Build a named family and print or save its input document.
    Family {
        name: String,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, value_enum)]
        field: Option<FieldArg>,
        #[arg(long)]
        residue: Option<u64>,
        #[arg(long)]
        characteristic: Option<u64>,
        /// A spanning vector of V, comma separated; repeatable.
        #[arg(long, allow_hyphen_values = true)]
        v: Vec<String>,
        /// Heintze contraction rates, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        weights: Option<String>,
        /// Prime for the Baumslag host, or the seed of the random family.
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Check every fixture against its known invariants.
    Selftest,
}

fn rationals(s: &str) -> Result<Vec<Rational>, CliError> {
    s.split(',')
        .map(|x| parse_rational(x.trim()).map_err(|e| CliError::Usage(format!("bad rational {x:?}: {e}"))))
        .collect()
}

fn write_output(path: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io {
            path: p.display().to_string(),
            message: e.to_string(),
        }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| CliError::Io {
                path: "stdout".into(),
                message: e.to_string(),
            })
        }
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Analyze {
            file,
            format,
            out,
            no_homology,
            citations,
            jobs,
            delta_td,
        } => {
            let text = std::fs::read_to_string(&file).map_err(|e| CliError::Io {
                path: file.display().to_string(),
                message: e.to_string(),
            })?;
            let doc = InputDocument::parse(&text)?;
            let opts = AnalyzeOptions {
                homology: !no_homology,
                jobs,
                delta_td,
            };
            let report = analyze_document(&doc, &opts)?;
            let rendered = match format {
                Format::Json => report.to_json(),
                Format::Text => {
                    let color =
                        out.is_none() && std::env::var_os("NO_COLOR").is_none() && std::io::stdout().is_terminal();
                    report.to_text(TextStyle { color, citations })
                }
            };
            write_output(out.as_ref(), &rendered)?;
            Ok(true)
        }
        Command::Family {
            name,
            d,
            field,
            residue,
            characteristic,
            v,
            weights,
            p,
            emit,
        } => {
            let field = match field {
                None | Some(FieldArg::Arch) if residue.is_none() && characteristic.is_none() => None,
                Some(FieldArg::Arch) => {
                    return Err(CliError::Usage("--residue and --characteristic need --field nonarch".into()))
                }
                _ => Some(
                    FieldTag::new(FieldKind::NonArchimedean, characteristic.unwrap_or(0), Some(residue.unwrap_or(2)))
                        .map_err(|e| CliError::Usage(e.to_string()))?,
                ),
            };
            let params = FamilyParams {
                d,
                field,
                v: v.iter().map(|s| rationals(s)).collect::<Result<_, _>>()?,
                weights: weights.as_deref().map(rationals).transpose()?.unwrap_or_default(),
                p,
            };
            let model = families::build(&name, &params).map_err(|e| match e {
                dehnscope_core::Error::UnknownFamily(_) => CliError::Usage(e.to_string()),
                e => e.into(),
            })?;
            let doc = InputDocument::from_algebra(&model.name, &model.algebra);
            write_output(emit.as_ref(), &doc.to_json())?;
            Ok(true)
        }
        Command::Selftest => {
            let mut out = std::io::stdout().lock();
            run_selftest(&families::fixtures(), &mut out).map_err(|e| CliError::Io {
                path: "stdout".into(),
                message: e.to_string(),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
