//! Command-line front end for the `altquad` library.

pub mod commands;
pub mod config;
pub mod render;

use std::path::PathBuf;

use clap::{ArgGroup, Parser, ValueEnum};

use altquad::StudyMethod;
pub use commands::{cmd_compare, cmd_convergence, cmd_integrate, run, CliError};
pub use config::{OutputFormat, RunConfig, RunMethod, Source};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Alt,
    Romberg,
    Trap,
    Simpson,
    Compare,
    Convergence,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutputArg {
    Human,
    Csv,
}

/// Integrate equally spaced samples with the alt tableau or Romberg.
#[derive(Debug, Parser)]
#[command(name = "altquad", version)]
#[command(group(ArgGroup::new("source").required(true).args(["input", "function"])))]
pub struct Args {
    /// CSV file of `x,f` rows
    #[arg(long)]
    input: Option<PathBuf>,

    /// Catalog function (poly7, sin, exp, runge, x0..x9, constant, linear)
    #[arg(long)]
    function: Option<String>,

    /// Left endpoint (defaults to the function's usual interval)
    #[arg(long, allow_negative_numbers = true, requires = "function")]
    a: Option<f64>,

    /// Right endpoint
    #[arg(long, allow_negative_numbers = true, requires = "function")]
    b: Option<f64>,

    /// Number of subintervals
    #[arg(long, requires = "function")]
    n: Option<usize>,

    #[arg(long, value_enum, default_value = "alt")]
    method: MethodArg,

    /// default | paper-table-2 | paper-table-4 | comma list such as 12,6,2,3,4
    #[arg(long, default_value = "default", value_parser = config::parse_ordering)]
    ordering: altquad::OrderingPreset,

    #[arg(long, value_enum, default_value = "human")]
    output: OutputArg,

    /// Decimal places for printed values
    #[arg(long, default_value_t = config::DEFAULT_PRECISION)]
    precision: usize,

    /// List the extrapolation factor behind every tableau cell
    #[arg(long)]
    show_omega: bool,

    /// Grid sizes for --method convergence, ascending
    #[arg(long, value_parser = config::parse_list)]
    n_list: Option<NList>,

    /// Estimator for --method convergence: trap, simpson, alt, tableau-<d>, fixed-<m1>-<m2>...
    #[arg(long, default_value = "alt", value_parser = parse_study)]
    study: StudyMethod,
}

/// Alias so clap treats the whole comma list as one value.
type NList = Vec<usize>;

fn parse_study(s: &str) -> Result<StudyMethod, String> {
    StudyMethod::parse(s).ok_or_else(|| format!("unknown study method `{s}`"))
}

impl Args {
    pub fn into_config(self) -> Result<RunConfig, CliError> {
        let method = match self.method {
            MethodArg::Alt => RunMethod::Alt,
            MethodArg::Romberg => RunMethod::Romberg,
            MethodArg::Trap => RunMethod::Trap,
            MethodArg::Simpson => RunMethod::Simpson,
            MethodArg::Compare => RunMethod::Compare,
            MethodArg::Convergence => RunMethod::Convergence,
        };
        let source = match (self.input, self.function) {
            (Some(path), _) => Source::Csv(path),
            (None, Some(name)) => {
                let f = altquad::lookup(&name)?;
                let (da, db) = f.default_interval();
                let (a, b) = (self.a.unwrap_or(da), self.b.unwrap_or(db));
                if self.n.is_none() && method != RunMethod::Convergence {
                    return Err(CliError::Usage("--n is required with --function".into()));
                }
                Source::Catalog {
                    name,
                    a,
                    b,
                    n: self.n,
                }
            }
            (None, None) => {
                return Err(CliError::Usage(
                    "one of --input or --function is required".into(),
                ))
            }
        };
        let mut config = RunConfig::new(source, method);
        config.ordering = self.ordering;
        config.output = match self.output {
            OutputArg::Human => OutputFormat::Human,
            OutputArg::Csv => OutputFormat::Csv,
        };
        config.precision = self.precision;
        config.show_omega = self.show_omega;
        if let Some(list) = self.n_list {
            config.n_list = list;
        }
        config.study = self.study;
        Ok(config)
    }
}
