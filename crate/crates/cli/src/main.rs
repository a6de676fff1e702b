//! Command-line front end: constructs and verifies periodic birational maps of plane foliations.

mod builtins;
mod commands;
mod error;
mod report;
mod verify;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use folia::CyclotomicField;

use commands::{FieldSource, MapSource, Outcome};
use error::{CliError, CliResult};

#[derive(Parser, Debug)]
#[command(name = "folia", version, about = "Periodic birational maps attached to plane foliations")]
struct Cli {
    /// Conductor N of the coefficient field Q(zeta_N).
    #[arg(long, global = true, default_value_t = 12)]
    conductor: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct FieldArgs {
    /// Name of a built-in foliation.
    #[arg(long)]
    builtin: Option<String>,
    /// Components "<X1>,<X2>" of the affine field X1 d/dx + X2 d/dy.
    #[arg(long, allow_hyphen_values = true)]
    field: Option<String>,
}

impl FieldArgs {
    fn source(&self) -> Option<FieldSource> {
        match (&self.builtin, &self.field) {
            (Some(name), _) => Some(FieldSource::Builtin(name.clone())),
            (_, Some(text)) => Some(FieldSource::Components(text.clone())),
            _ => None,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Inflection polynomial and flex part of a foliation.
    Flex(FieldArgs),
    /// Involution of a quadratic foliation, or the foliation of an involution with --map.
    Involution {
        #[arg(long, conflicts_with_all = ["field", "map"])]
        builtin: Option<String>,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "map")]
        field: Option<String>,
        /// An involution "(f0 : f1 : f2)" or "(I1, I2)", or a built-in map name.
        #[arg(long, allow_hyphen_values = true)]
        map: Option<String>,
    },
    /// Trivolution of a cubic foliation.
    Trivolution(FieldArgs),
    /// Quadratic foliation singular at (0:0:1), (1:0:0), (0:1:0), (1:1:1) and three given points.
    SevenPoints {
        /// Three points "x1,y1;x2,y2;x3,y3".
        #[arg(long, allow_hyphen_values = true)]
        points: String,
    },
    /// One member of the homogeneous cubic family.
    Family {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
    },
    /// Square test over a grid of (lambda, mu, nu) at fixed alpha.
    Scan {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        /// Comma-separated values taken by each of lambda, mu, nu.
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
    },
    /// Abelian relation of the web (f0, f0 o T, f0 o T^2).
    WebCheck {
        #[arg(long, allow_hyphen_values = true)]
        f0: String,
        /// The map T, as text or a built-in map name.
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["field", "builtin"])]
        map: Option<String>,
        /// A cubic foliation whose trivolution gives T.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "builtin")]
        field: Option<String>,
        /// A built-in cubic foliation whose trivolution gives T.
        #[arg(long)]
        builtin: Option<String>,
    },
    /// Replays the built-in suite.
    Verify {
        /// Rewrite the golden files instead of comparing.
        #[arg(long)]
        bless: bool,
    },
    /// Parses and prints an expression or a map in canonical form.
    Parse {
        #[arg(long, allow_hyphen_values = true, conflicts_with = "map")]
        expr: Option<String>,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "builtin")]
        map: Option<String>,
        /// Name of a built-in foliation or map.
        #[arg(long, conflicts_with = "expr")]
        builtin: Option<String>,
    },
}

fn map_source(text: &str) -> MapSource {
    if builtins::map(text).is_some() {
        MapSource::Builtin(text.to_string())
    } else {
        MapSource::Text(text.to_string())
    }
}

fn run(cli: &Cli) -> CliResult<Outcome> {
    if cli.conductor == 0 {
        return Err(CliError::Usage("the conductor must be positive".into()));
    }
    let k = CyclotomicField::new(cli.conductor);
    let missing = || CliError::Usage("give --builtin or --field".into());
    match &cli.command {
        Command::Flex(args) => commands::flex(&k, &args.source().ok_or_else(missing)?),
        Command::Involution { builtin, field, map } => match (builtin, field, map) {
            (_, _, Some(m)) => commands::reverse(&k, &map_source(m)),
            (Some(name), _, _) => commands::involution(&k, &FieldSource::Builtin(name.clone())),
            (_, Some(text), _) => commands::involution(&k, &FieldSource::Components(text.clone())),
            _ => Err(CliError::Usage("give --builtin, --field or --map".into())),
        },
        Command::Trivolution(args) => commands::trivolution(&k, &args.source().ok_or_else(missing)?),
        Command::SevenPoints { points } => commands::seven_points(&k, points),
        Command::Family { alpha, lambda, mu, nu } => commands::family(&k, [alpha, lambda, mu, nu]),
        Command::Scan { alpha, grid } => commands::scan(&k, alpha, grid),
        Command::WebCheck { f0, map, field, builtin } => {
            let cubic = match (field, builtin) {
                (Some(text), _) => Some(FieldSource::Components(text.clone())),
                (_, Some(name)) => Some(FieldSource::Builtin(name.clone())),
                _ => None,
            };
            commands::web_check(&k, f0, map.as_deref().map(map_source), cubic)
        }
        Command::Verify { bless } => verify::verify(&k, *bless),
        Command::Parse { expr, map, builtin } => {
            commands::parse(&k, expr.as_deref(), map.as_deref(), builtin.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let rendered = match cli.format {
                Format::Text => outcome.report.to_text(),
                Format::Json => outcome.report.to_json(),
            };
            print!("{rendered}");
            ExitCode::from(if outcome.passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
