use std::fmt::Write as _;

use altquad::{
    build_alt_tableau, build_romberg_tableau, composite_trapezoid, convergence_study, lookup,
    read_csv_path, sample, simpson, simpson38, trapezoid, ErrorKind, UniformGrid,
};

use crate::config::{OutputFormat, RunConfig, RunMethod, Source};
use crate::render::{self, fixed};

/// Failure of a command, tagged with the process exit status it maps to.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Data(String),
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Data(_) => 3,
            CliError::Precondition(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Data(m) | CliError::Precondition(m) => m,
        }
    }
}

impl From<altquad::Error> for CliError {
    fn from(err: altquad::Error) -> Self {
        let message = err.to_string().replace('\n', " ");
        match err {
            altquad::Error::UnknownFunction(_) => CliError::Usage(message),
            _ => match err.kind() {
                ErrorKind::Data => CliError::Data(message),
                ErrorKind::Precondition => CliError::Precondition(message),
            },
        }
    }
}

pub type CmdResult = Result<String, CliError>;

pub fn run(config: &RunConfig) -> CmdResult {
    match config.method {
        RunMethod::Compare => cmd_compare(config),
        RunMethod::Convergence => cmd_convergence(config),
        _ => cmd_integrate(config),
    }
}

fn load_grid(source: &Source) -> Result<UniformGrid, CliError> {
    match source {
        Source::Csv(path) => read_csv_path(path).map_err(|e| match e {
            altquad::Error::Io(io) => {
                CliError::Data(format!("cannot read {}: {io}", path.display()))
            }
            other => other.into(),
        }),
        Source::Catalog { name, a, b, n } => {
            let f = lookup(name)?;
            let n = n.ok_or_else(|| CliError::Usage("--n is required with --function".into()))?;
            Ok(sample(&f, *a, *b, n)?)
        }
    }
}

/// Runs a single-grid method and renders its result.
pub fn cmd_integrate(config: &RunConfig) -> CmdResult {
    let grid = load_grid(&config.source)?;
    let p = config.precision;
    let human = config.output == OutputFormat::Human;
    let mut out = String::new();

    match config.method {
        RunMethod::Alt => {
            let ordering = config.ordering.resolve(grid.n())?;
            let tableau = build_alt_tableau(&grid, &ordering)?;
            if human {
                out.push_str("alt tableau: ");
                out.push_str(&render::grid_summary(&grid, p));
                out.push_str(&render::alt_table(&tableau, p, config.show_omega));
            } else {
                out.push_str(&render::alt_csv(&tableau, p));
            }
        }
        RunMethod::Romberg => {
            let tableau = build_romberg_tableau(&grid)?;
            if human {
                out.push_str("romberg tableau: ");
                out.push_str(&render::grid_summary(&grid, p));
                out.push('\n');
                out.push_str(&render::romberg_table(&tableau, p));
            } else {
                out.push_str(&render::romberg_csv(&tableau, p));
            }
        }
        RunMethod::Trap | RunMethod::Simpson => {
            let estimates = if config.method == RunMethod::Trap {
                vec![trapezoid(&grid), composite_trapezoid(&grid)]
            } else {
                let mut found = Vec::new();
                let mut errors = Vec::new();
                for rule in [simpson, simpson38] {
                    match rule(&grid) {
                        Ok(e) => found.push(e),
                        Err(e) => errors.push(e),
                    }
                }
                if found.is_empty() {
                    return Err(errors.remove(0).into());
                }
                found
            };
            if human {
                out.push_str(&render::grid_summary(&grid, p));
                for e in &estimates {
                    let _ = writeln!(out, "{:<20} {}", e.method.as_str(), fixed(e.value, p));
                }
            } else {
                out.push_str("method,value\n");
                for e in &estimates {
                    let _ = writeln!(out, "{},{}", e.method.as_str(), fixed(e.value, p));
                }
            }
        }
        RunMethod::Compare | RunMethod::Convergence => return run(config),
    }
    Ok(out)
}

/// Builds both tableaus on the same power-of-two grid.
pub fn cmd_compare(config: &RunConfig) -> CmdResult {
    let grid = load_grid(&config.source)?;
    let n = grid.n();
    if !n.is_power_of_two() || n < 4 {
        return Err(CliError::Precondition(format!(
            "compare needs n to be a power of two >= 4, got n = {n}"
        )));
    }
    let ordering = config.ordering.resolve(n)?;
    let alt = build_alt_tableau(&grid, &ordering)?;
    let romberg = build_romberg_tableau(&grid)?;
    let p = config.precision;
    let alt_final = alt.final_estimate().value;
    let romberg_final = romberg.final_value();
    let difference = (alt_final - romberg_final).abs();

    let mut out = String::new();
    match config.output {
        OutputFormat::Human => {
            out.push_str("comparison: ");
            out.push_str(&render::grid_summary(&grid, p));
            out.push_str("\n== alt ==\n");
            out.push_str(&render::alt_table(&alt, p, config.show_omega));
            out.push_str("\n== romberg ==\n");
            out.push_str(&render::romberg_table(&romberg, p));
            out.push('\n');
            let _ = writeln!(out, "alt final:      {}", fixed(alt_final, p));
            let _ = writeln!(out, "romberg final:  {}", fixed(romberg_final, p));
            let _ = writeln!(out, "abs difference: {difference:e}");
            let _ = writeln!(
                out,
                "approximations: alt {}, romberg {}",
                alt.cell_count(),
                romberg.cell_count()
            );
        }
        OutputFormat::Csv => {
            out.push_str("method,final,approximations\n");
            let _ = writeln!(out, "alt,{},{}", fixed(alt_final, p), alt.cell_count());
            let _ = writeln!(
                out,
                "romberg,{},{}",
                fixed(romberg_final, p),
                romberg.cell_count()
            );
            let _ = writeln!(out, "#difference={difference:e}");
        }
    }
    Ok(out)
}

pub fn cmd_convergence(config: &RunConfig) -> CmdResult {
    let Source::Catalog { name, a, b, .. } = &config.source else {
        return Err(CliError::Precondition(
            "convergence needs a catalog function; CSV data cannot be resampled".into(),
        ));
    };
    let f = lookup(name)?;
    let report = convergence_study(&f, *a, *b, &config.n_list, &config.study)?;
    match config.output {
        OutputFormat::Csv => Ok(report.to_csv()),
        OutputFormat::Human => {
            let mut out = format!(
                "convergence of {} for {} on [{}, {}]\n\n",
                config.study.label(),
                name,
                fixed(*a, config.precision),
                fixed(*b, config.precision)
            );
            let _ = writeln!(out, "{:>8}  {:>24}  {:>12}", "n", "estimate", "abs error");
            for row in &report.rows {
                let _ = writeln!(
                    out,
                    "{:>8}  {:>24}  {:>12.4e}",
                    row.n,
                    fixed(row.estimate, config.precision),
                    row.abs_error
                );
            }
            match report.fitted_order {
                Some(order) => {
                    let _ = writeln!(out, "\nfitted order: {order:.4}");
                }
                None => out.push_str("\nfitted order: n/a (errors at noise floor)\n"),
            }
            Ok(out)
        }
    }
}
