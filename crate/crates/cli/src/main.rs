use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use syllogic::{ImportKind, SyllogismForm};
use syllogic_cli::{
    cmd_catalog, cmd_check, cmd_propagate, cmd_syllogism, read_problem, run_batch, CliError, Options, Report,
};

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Import {
    None,
    Conditional,
    Unconditional,
}

impl From<Import> for ImportKind {
    fn from(i: Import) -> Self {
        match i {
            Import::None => ImportKind::None,
            Import::Conditional => ImportKind::Conditional,
            Import::Unconditional => ImportKind::Unconditional,
        }
    }
}

/// Coherence checks, probability propagation and syllogism verdicts over
/// conditional events, in exact rational arithmetic.
///
/// Exit status: 0 coherent or valid, 1 incoherent or invalid, 2 on errors.
#[derive(Parser, Debug)]
#[command(name = "syllogic", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Grid density for sampled cross-checks and t-coherence sweeps.
    #[arg(long, global = true, value_name = "N")]
    grid: Option<usize>,
    /// Verify closed-form bounds against the linear-programming oracle.
    #[arg(long, global = true)]
    oracle: bool,
    /// Existential import assumption for syllogisms.
    #[arg(long, value_enum, global = true)]
    import: Option<Import>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coherence of a point assessment, or g-coherence of an interval one.
    Check { file: PathBuf },
    /// Coherent extension of the assessment to the file's target.
    Propagate { file: PathBuf },
    /// Verdict for a syllogism given by name (`darii`), figure and mood
    /// (`III-AAA`) or a problem file with a [syllogism] section.
    Syllogism { form: String },
    /// All traditional syllogisms of the first three figures.
    Catalog {
        /// Print the translation into defaults and negated defaults.
        #[arg(long)]
        defaults: bool,
        /// Use ⇝ and ⊨ instead of the ASCII line format.
        #[arg(long)]
        unicode: bool,
    },
    /// Evaluate several problem files concurrently.
    Batch {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
}

fn emit(report: &Report, format: Format) -> Result<(), CliError> {
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", serde_json::to_string_pretty(report).map_err(|e| CliError::Invalid(e.to_string()))?),
    }
    Ok(())
}

fn syllogism_report(arg: &str, opts: &Options) -> Result<Report, CliError> {
    let path = Path::new(arg);
    let (form, file_import) = if path.is_file() {
        let spec = read_problem(path)?
            .syllogism
            .ok_or_else(|| CliError::Invalid(format!("{arg} has no [syllogism] section")))?;
        (spec.form, spec.import)
    } else {
        (arg.parse::<SyllogismForm>()?, None)
    };
    cmd_syllogism(&form, opts.import.or(file_import).unwrap_or_default())
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let mut opts = Options { grid: cli.grid, oracle: cli.oracle, import: cli.import.map(Into::into), ..Options::default() };
    let report = match cli.command {
        Command::Check { file } => cmd_check(&read_problem(&file)?, &opts)?,
        Command::Propagate { file } => cmd_propagate(&read_problem(&file)?, &opts)?,
        Command::Syllogism { form } => syllogism_report(&form, &opts)?,
        Command::Catalog { defaults, unicode } => {
            opts.defaults = defaults;
            opts.unicode = unicode;
            cmd_catalog(&opts)?
        }
        Command::Batch { files } => {
            let mut worst = 0u8;
            let mut entries = Vec::new();
            for (path, result) in files.iter().zip(run_batch(&files, &opts)) {
                let shown = path.display().to_string();
                let code = match &result {
                    Ok(r) => r.exit_code() as u8,
                    Err(_) => 2,
                };
                worst = worst.max(code);
                match cli.format {
                    Format::Text => match &result {
                        Ok(r) => print!("== {shown} ==\n{}", r.to_text()),
                        Err(e) => print!("== {shown} ==\nerror: {e}\n"),
                    },
                    Format::Json => entries.push(match result {
                        Ok(r) => serde_json::json!({ "path": shown, "report": r }),
                        Err(e) => serde_json::json!({ "path": shown, "error": e.to_string() }),
                    }),
                }
            }
            if let Format::Json = cli.format {
                let text = serde_json::to_string_pretty(&entries).map_err(|e| CliError::Invalid(e.to_string()))?;
                println!("{text}");
            }
            return Ok(worst);
        }
    };
    emit(&report, cli.format)?;
    Ok(report.exit_code() as u8)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
