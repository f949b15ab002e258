use std::path::PathBuf;

use altquad::{OrderingPreset, StudyMethod};

#[derive(Debug, Clone, PartialEq)]
pub enum Source {
    Csv(PathBuf),
    Catalog {
        name: String,
        a: f64,
        b: f64,
        /// Absent only for convergence runs, which take a list of sizes.
        n: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunMethod {
    Alt,
    Romberg,
    Trap,
    Simpson,
    Compare,
    Convergence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Human,
    Csv,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub source: Source,
    pub method: RunMethod,
    pub ordering: OrderingPreset,
    pub output: OutputFormat,
    /// Decimal places for printed values.
    pub precision: usize,
    pub show_omega: bool,
    pub n_list: Vec<usize>,
    pub study: StudyMethod,
}

pub const DEFAULT_PRECISION: usize = 10;
pub const DEFAULT_N_LIST: [usize; 5] = [4, 8, 16, 32, 64];

impl RunConfig {
    pub fn new(source: Source, method: RunMethod) -> Self {
        Self {
            source,
            method,
            ordering: OrderingPreset::Descending,
            output: OutputFormat::Human,
            precision: DEFAULT_PRECISION,
            show_omega: false,
            n_list: DEFAULT_N_LIST.to_vec(),
            study: StudyMethod::Alt,
        }
    }
}

/// Parses `default`, `paper-table-2`, `paper-table-4` or a comma list.
pub fn parse_ordering(s: &str) -> Result<OrderingPreset, String> {
    match s {
        "default" => Ok(OrderingPreset::Descending),
        "paper-table-2" => Ok(OrderingPreset::MixedTwelfths),
        "paper-table-4" => Ok(OrderingPreset::Ascending),
        list => parse_list(list).map(OrderingPreset::Explicit),
    }
}

pub fn parse_list(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(|item| {
            item.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{item}` is not a positive integer"))
        })
        .collect()
}
