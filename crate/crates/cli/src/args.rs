use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use pfam_core::search::Conjecture;
use pfam_core::{GraphKind, Property};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

/// Verification and exact search for P-intersecting graph families.
#[derive(Debug, Parser)]
#[command(name = "pfam", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Number of vertices.
    #[arg(long, global = true)]
    pub n: Option<usize>,

    /// simple (alias undirected), oriented or directed.
    #[arg(long, global = true)]
    pub kind: Option<String>,

    /// connected, strongly-connected, hamiltonian-cycle, hamiltonian-path,
    /// no-cutvertex, two-edge-connected or at-most-k-components.
    #[arg(long, global = true)]
    pub property: Option<String>,

    /// Component bound for at-most-k-components.
    #[arg(long, global = true)]
    pub k: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Seconds per search before reporting the incumbent.
    #[arg(long, global = true, default_value_t = 600)]
    pub time_limit: u64,

    /// Prune root branches by vertex relabelling.
    #[arg(long, global = true)]
    pub symmetry: bool,

    /// Skip the size guards.
    #[arg(long, global = true)]
    pub force: bool,

    /// Seed the search with the known construction.
    #[arg(long, global = true)]
    pub seed_construction: bool,

    /// List every maximum family.
    #[arg(long, global = true)]
    pub all: bool,

    /// Print per-element cut witnesses.
    #[arg(long, global = true)]
    pub witnesses: bool,

    /// A graph as a digit string.
    #[arg(long, global = true)]
    pub graph: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate every applicable property of one graph.
    Props,
    /// Build a named family.
    Construct {
        /// hamilton-cycle, cycle-minus-one, flower, noneq-hampath or upset.
        name: String,
        /// Cycle lengths for flower, e.g. 3,3.
        #[arg(long, value_delimiter = ',')]
        lengths: Option<Vec<usize>>,
        /// Print the size without listing members.
        #[arg(long)]
        count_only: bool,
        /// Check the family is intersecting for its property.
        #[arg(long)]
        verify: bool,
    },
    /// Star span (simple) or out-star span (directed) cut certificate.
    Certify,
    /// Projection bound pipeline, or a cover check of a family file.
    Bound {
        #[arg(long)]
        family: Option<PathBuf>,
    },
    /// Exact maximum intersecting family.
    Search,
    /// Conjecture verdicts at one n.
    Conjectures {
        /// Restrict to one of two-edge-connected, two-components,
        /// three-components.
        #[arg(long)]
        only: Option<String>,
    },
    /// Largest subset of [q]^m with pairwise agreement at least t.
    Oracle {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        q: u8,
        #[arg(long, default_value_t = 2)]
        t: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Props => "props",
            Command::Construct { .. } => "construct",
            Command::Certify => "certify",
            Command::Bound { .. } => "bound",
            Command::Search => "search",
            Command::Conjectures { .. } => "conjectures",
            Command::Oracle { .. } => "oracle",
        }
    }
}

/// Flags after validation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub n: Option<usize>,
    pub kind: GraphKind,
    pub property: Option<Property>,
    pub conjectures: Vec<Conjecture>,
}

fn reject(flag: &str, cmd: &str) -> CliError {
    CliError::Validation(format!("{flag} cannot be combined with {cmd}"))
}

/// Checks flag combinations before anything is computed.
pub fn validate(cli: &Cli) -> Result<RunConfig, CliError> {
    let cmd = cli.command.name();
    let allowed: &[&str] = match &cli.command {
        Command::Props => &["--n", "--kind", "--graph"],
        Command::Construct { .. } => &["--n", "--kind", "--graph"],
        Command::Certify => &["--n", "--kind", "--witnesses"],
        Command::Bound { .. } => &["--n", "--kind", "--property"],
        Command::Search => &[
            "--n",
            "--kind",
            "--property",
            "--k",
            "--symmetry",
            "--force",
            "--seed-construction",
            "--all",
        ],
        Command::Conjectures { .. } => &["--n", "--symmetry", "--force", "--seed-construction"],
        Command::Oracle { .. } => &[],
    };
    let given = [
        ("--n", cli.n.is_some()),
        ("--kind", cli.kind.is_some()),
        ("--property", cli.property.is_some()),
        ("--k", cli.k.is_some()),
        ("--symmetry", cli.symmetry),
        ("--force", cli.force),
        ("--seed-construction", cli.seed_construction),
        ("--all", cli.all),
        ("--witnesses", cli.witnesses),
        ("--graph", cli.graph.is_some()),
    ];
    if let Some((flag, _)) = given.iter().find(|(f, set)| *set && !allowed.contains(f)) {
        return Err(reject(flag, cmd));
    }
    if matches!(cli.threads, Some(0)) {
        return Err(CliError::Validation("--threads must be at least 1".into()));
    }
    if let Command::Construct { name, lengths, .. } = &cli.command {
        if lengths.is_some() && name != "flower" {
            return Err(CliError::Validation(format!(
                "--lengths cannot be combined with construct {name}"
            )));
        }
        if cli.graph.is_some() && name != "upset" {
            return Err(CliError::Validation(format!(
                "--graph cannot be combined with construct {name}"
            )));
        }
    }

    let kind = match &cli.kind {
        Some(k) => k.parse::<GraphKind>()?,
        None => GraphKind::Simple,
    };
    let property = match &cli.property {
        Some(p) => Some(Property::parse(p, cli.k)?),
        None => None,
    };
    if cli.k.is_some() && !matches!(property, Some(Property::AtMostKComponents(_))) {
        return Err(CliError::Validation(
            "--k needs --property at-most-k-components".into(),
        ));
    }
    if let Some(Property::AtMostKComponents(k)) = property {
        if cli.k.is_some_and(|given| given != k) {
            return Err(CliError::Validation(format!(
                "--k {} contradicts --property {}",
                cli.k.unwrap(),
                cli.property.as_deref().unwrap_or_default()
            )));
        }
    }
    if let Some(p) = property {
        if !p.applies_to(kind) {
            return Err(CliError::Validation(format!(
                "--kind {kind} and --property {p} are incompatible"
            )));
        }
    }
    let conjectures = match &cli.command {
        Command::Conjectures { only: Some(c) } => vec![Conjecture::parse(c)?],
        _ => Conjecture::ALL.to_vec(),
    };
    Ok(RunConfig {
        n: cli.n,
        kind,
        property,
        conjectures,
    })
}

impl RunConfig {
    pub fn require_n(&self, cmd: &str) -> Result<usize, CliError> {
        self.n
            .ok_or_else(|| CliError::Validation(format!("{cmd} needs --n")))
    }
}
