use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::json;
use thiserror::Error;

use tropgrass::exactalg::{ExactAlgError, DEFAULT_BUDGET};
use tropgrass::g36::G36Error;
use tropgrass::plucker_vector::PlueckerError;
use tropgrass::treespace::TreeError;
use tropgrass::troplin::TropLinError;

mod report;
mod scenarios;

use report::Report;

#[derive(Parser, Debug)]
#[command(
    name = "tropgrass",
    version,
    about = "Tropical Grassmannian computations with JSON reports"
)]
struct Cli {
    /// Write the report here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Coefficient field characteristic (0 or a prime).
    #[arg(long = "char", global = true)]
    characteristic: Option<u32>,
    /// Reduction-step budget for Gröbner computations.
    #[arg(long, global = true, env = "TROPGRASS_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Seed for random trees.
    #[arg(long, global = true, env = "TROPGRASS_SEED", default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Phylogenetic trees from distance matrices.
    #[command(subcommand)]
    Tree(TreeCmd),
    /// The space of trees `T_n`.
    #[command(subcommand)]
    Treespace(TreespaceCmd),
    /// The fan of `G(3,6)`.
    #[command(subcommand)]
    G36(G36Cmd),
    /// Tropical linear spaces.
    #[command(subcommand)]
    Plane(PlaneCmd),
    /// Ideals given as JSON files.
    #[command(subcommand)]
    Groebner(GroebnerCmd),
    /// The Fano weight on `G(3,7)`.
    #[command(subcommand)]
    Char7(Char7Cmd),
    /// Initial forms of maximal minors that do not form a sagbi basis.
    #[command(subcommand)]
    Sagbi(SagbiCmd),
}

#[derive(Subcommand, Debug)]
enum TreeCmd {
    /// Rebuild a tree from a CSV distance matrix (no header, zero diagonal).
    Reconstruct {
        csv: PathBuf,
        /// Also write the Newick string here.
        #[arg(long)]
        newick: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum TreespaceCmd {
    /// Vertex, edge and facet counts of `T_n`.
    Stats {
        #[arg(long)]
        n: usize,
    },
    /// Check `in_w(I_{2,n}) = J_sigma` for random trivalent trees.
    VerifyInitial {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        trees: usize,
    },
}

#[derive(Subcommand, Debug)]
enum G36Cmd {
    /// f-vectors, facet census and non-faces, optionally more.
    Verify {
        /// Betti numbers of the complex.
        #[arg(long)]
        homology: bool,
        /// Links of the seven triangle classes.
        #[arg(long)]
        links: bool,
        /// Monomial-freeness of one sample per facet class.
        #[arg(long)]
        cones: bool,
    },
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct VectorSource {
    /// Plücker vector JSON file (`{"d", "n", "coords": {"12": "0", ...}}`).
    #[arg(long)]
    pub plucker: Option<PathBuf>,
    /// Sample vector of a `G(3,6)` facet class, e.g. `EEFF1`.
    #[arg(long)]
    pub sample: Option<String>,
}

#[derive(Subcommand, Debug)]
enum PlaneCmd {
    /// The type of `L_w`: one `d`-partition per maximal face.
    Type {
        #[command(flatten)]
        source: VectorSource,
    },
    /// Membership of a point in `L_w`.
    Member {
        #[command(flatten)]
        source: VectorSource,
        /// Comma-separated coordinates.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// The dual vector and its circuits.
    Dual {
        #[command(flatten)]
        source: VectorSource,
    },
    /// Rebuild `w` from the membership oracle of `L_w`.
    Reconstruct {
        #[command(flatten)]
        source: VectorSource,
    },
}

#[derive(Subcommand, Debug)]
enum GroebnerCmd {
    /// Initial ideal for a weight vector.
    Initial {
        #[arg(long)]
        ideal: PathBuf,
        /// Comma-separated weights, one per variable.
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
    /// Whether the initial ideal for `w` contains no monomial.
    MonomialFree {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
    /// Hilbert data under degrevlex.
    Degree {
        #[arg(long)]
        ideal: PathBuf,
    },
    /// Intersection of two ideals in the same ring.
    Intersect {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        other: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum Char7Cmd {
    /// Monomial-freeness of the Fano weight and the cubic behind it.
    Demo {
        #[command(flatten)]
        args: Char7Args,
    },
}

#[derive(Subcommand, Debug)]
enum SagbiCmd {
    /// Tropical minors, initial minors, toric kernel and degrees.
    Demo,
}

#[derive(Args, Debug)]
pub struct Char7Args {
    /// Use the Fano weight with the line 124 removed.
    #[arg(long)]
    pub wprime: bool,
    /// Also compute the full reduced Gröbner basis.
    #[arg(long)]
    pub basis: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("budget of {0} reduction steps exhausted")]
    Budget(u64),
    #[error("cannot write report: {0}")]
    Io(#[from] std::io::Error),
}

impl From<ExactAlgError> for CliError {
    fn from(e: ExactAlgError) -> Self {
        match e {
            ExactAlgError::BudgetExceeded(b) => CliError::Budget(b),
            e => CliError::Input(e.to_string()),
        }
    }
}

impl From<TreeError> for CliError {
    fn from(e: TreeError) -> Self {
        match e {
            TreeError::Algebra(a) => a.into(),
            e => CliError::Input(e.to_string()),
        }
    }
}

impl From<TropLinError> for CliError {
    fn from(e: TropLinError) -> Self {
        match e {
            TropLinError::Tree(t) => t.into(),
            e => CliError::Input(e.to_string()),
        }
    }
}

impl From<PlueckerError> for CliError {
    fn from(e: PlueckerError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<G36Error> for CliError {
    fn from(e: G36Error) -> Self {
        CliError::Input(e.to_string())
    }
}

pub struct RunConfig {
    /// `None` keeps the characteristic of input files (0 otherwise).
    pub characteristic: Option<u32>,
    pub budget: u64,
    pub seed: u64,
}

impl RunConfig {
    fn to_json(&self) -> serde_json::Value {
        json!({ "char": self.characteristic, "budget": self.budget, "seed": self.seed })
    }
}

fn dispatch(cmd: Command, cfg: &RunConfig, report: &mut Report) -> Result<(), CliError> {
    match cmd {
        Command::Tree(TreeCmd::Reconstruct { csv, newick }) => {
            scenarios::tree_reconstruct(&csv, newick.as_deref(), report)
        }
        Command::Treespace(TreespaceCmd::Stats { n }) => scenarios::treespace_stats(n, report),
        Command::Treespace(TreespaceCmd::VerifyInitial { n, trees }) => {
            scenarios::treespace_verify_initial(n, trees, cfg, report)
        }
        Command::G36(G36Cmd::Verify {
            homology,
            links,
            cones,
        }) => scenarios::g36_verify(homology, links, cones, cfg, report),
        Command::Plane(cmd) => match cmd {
            PlaneCmd::Type { source } => scenarios::plane_type(&source, report),
            PlaneCmd::Member { source, x } => scenarios::plane_member(&source, &x, report),
            PlaneCmd::Dual { source } => scenarios::plane_dual(&source, report),
            PlaneCmd::Reconstruct { source } => scenarios::plane_reconstruct(&source, report),
        },
        Command::Groebner(cmd) => match cmd {
            GroebnerCmd::Initial { ideal, w } => {
                scenarios::groebner_initial(&ideal, &w, cfg, report)
            }
            GroebnerCmd::MonomialFree { ideal, w } => {
                scenarios::groebner_monomial_free(&ideal, &w, cfg, report)
            }
            GroebnerCmd::Degree { ideal } => scenarios::groebner_degree(&ideal, cfg, report),
            GroebnerCmd::Intersect { ideal, other } => {
                scenarios::groebner_intersect(&ideal, &other, cfg, report)
            }
        },
        Command::Char7(Char7Cmd::Demo { args }) => scenarios::char7_demo(&args, cfg, report),
        Command::Sagbi(SagbiCmd::Demo) => scenarios::sagbi_demo(cfg, report),
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Tree(_) => "tree reconstruct",
        Command::Treespace(TreespaceCmd::Stats { .. }) => "treespace stats",
        Command::Treespace(TreespaceCmd::VerifyInitial { .. }) => "treespace verify-initial",
        Command::G36(_) => "g36 verify",
        Command::Plane(PlaneCmd::Type { .. }) => "plane type",
        Command::Plane(PlaneCmd::Member { .. }) => "plane member",
        Command::Plane(PlaneCmd::Dual { .. }) => "plane dual",
        Command::Plane(PlaneCmd::Reconstruct { .. }) => "plane reconstruct",
        Command::Groebner(GroebnerCmd::Initial { .. }) => "groebner initial",
        Command::Groebner(GroebnerCmd::MonomialFree { .. }) => "groebner monomial-free",
        Command::Groebner(GroebnerCmd::Degree { .. }) => "groebner degree",
        Command::Groebner(GroebnerCmd::Intersect { .. }) => "groebner intersect",
        Command::Char7(_) => "char7 demo",
        Command::Sagbi(_) => "sagbi demo",
    }
}

fn write_report(report: &Report, output: Option<&std::path::Path>) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(&report.to_json()).expect("serializable") + "\n";
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let cfg = RunConfig {
        characteristic: cli.characteristic,
        budget: cli.budget,
        seed: cli.seed,
    };
    let mut report = Report::new(command_name(&cli.command), cfg.to_json());
    let code = match dispatch(cli.command, &cfg, &mut report) {
        Ok(()) if report.all_pass() => 0,
        Ok(()) => 2,
        Err(CliError::Budget(b)) => {
            report.set_status("budget_exceeded");
            report.set("error", CliError::Budget(b).to_string());
            eprintln!("error: budget of {b} reduction steps exhausted");
            3
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    if let Err(e) = write_report(&report, cli.output.as_deref()) {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}
