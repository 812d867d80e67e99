//! Command-line front end for `pfam-core`.

pub mod args;
mod commands;
pub mod render;

use clap::Parser;

pub use args::{Cli, Command, OutputFormat, RunConfig};
pub use render::Report;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Validation(String),
    Capacity(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) | CliError::Io(_) => 2,
            CliError::Capacity(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Validation(m) | CliError::Io(m) => f.write_str(m),
            CliError::Capacity(m) => write!(f, "capacity guard: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<pfam_core::Error> for CliError {
    fn from(e: pfam_core::Error) -> Self {
        match e {
            pfam_core::Error::Capacity(_) => CliError::Capacity(e.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;
pub const EXIT_TIMEOUT: i32 = 4;

/// Runs one parsed command on the current rayon pool.
pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let cfg = args::validate(cli)?;
    match &cli.command {
        Command::Props => commands::props(cli, &cfg),
        Command::Construct {
            name,
            lengths,
            count_only,
            verify,
        } => commands::construct(cli, &cfg, name, lengths.as_deref(), *count_only, *verify),
        Command::Certify => commands::certify(cli, &cfg),
        Command::Bound { family } => commands::bound(cli, &cfg, family.as_deref()),
        Command::Search => commands::search(cli, &cfg),
        Command::Conjectures { .. } => commands::conjectures(cli, &cfg),
        Command::Oracle { m, q, t } => commands::oracle(*m, *q, *t),
    }
}

/// Process outcome: exit code, stdout, stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first), honours `--threads` with a scoped
/// pool, runs, and renders.
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_VALIDATION
            } else {
                EXIT_OK
            };
            let rendered = e.render().to_string();
            return if code == EXIT_OK {
                Outcome {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };
    let result = match cli.threads {
        Some(t) if t > 0 => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| run(&cli)),
            Err(e) => Err(CliError::Io(format!("thread pool: {e}"))),
        },
        _ => run(&cli),
    };
    match result {
        Ok(report) => Outcome {
            code: if report.timed_out {
                EXIT_TIMEOUT
            } else {
                EXIT_OK
            },
            stdout: report.render(cli.output),
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
