//! Equally spaced sample grids and their partition into equal parts.

use std::fmt;
use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use crate::error::{Error, Result};

/// Relative tolerance applied to every CSV gap against the mean gap.
pub const SPACING_TOLERANCE: f64 = 1e-9;

/// Samples `f(a + i*h)` for `i = 0..=n`, `h = (b - a) / n`.
#[derive(Debug, Clone, PartialEq)]
pub struct UniformGrid {
    a: f64,
    b: f64,
    values: Vec<f64>,
}

impl UniformGrid {
    pub fn new(a: f64, b: f64, values: Vec<f64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::TooFewSamples(values.len()));
        }
        if !(a.is_finite() && b.is_finite() && b > a) {
            return Err(Error::EmptyInterval { a, b });
        }
        if let Some((index, &value)) = values.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(Error::NonFinite { index, value });
        }
        Ok(Self { a, b, values })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// Number of subintervals.
    pub fn n(&self) -> usize {
        self.values.len() - 1
    }

    /// Step size `(b - a) / n`.
    pub fn h(&self) -> f64 {
        (self.b - self.a) / self.n() as f64
    }

    pub fn x(&self, i: usize) -> f64 {
        if i == self.n() {
            self.b
        } else {
            self.a + i as f64 * self.h()
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Sum of the interior samples `f(x_1) + ... + f(x_{n-1})`, left to right.
    pub fn interior_sum(&self) -> f64 {
        interior_sum(&self.values)
    }

    /// Keeps every `stride`-th sample. `stride` must divide `n`.
    pub fn decimate(&self, stride: usize) -> Result<Self> {
        let n = self.n();
        if stride == 0 || !n.is_multiple_of(stride) {
            return Err(Error::NotDivisor { m: stride, n });
        }
        let values = self.values.iter().step_by(stride).copied().collect();
        Self::new(self.a, self.b, values)
    }

    /// The same samples read right to left, i.e. the grid of `x -> f(a + b - x)`.
    pub fn reflected(&self) -> Self {
        let mut values = self.values.clone();
        values.reverse();
        Self {
            a: self.a,
            b: self.b,
            values,
        }
    }
}

pub(crate) fn interior_sum(values: &[f64]) -> f64 {
    values[1..values.len() - 1].iter().sum()
}

/// Part sizes `m` with `m | n` and `2 <= m <= n/2`, largest first.
pub fn feasible_divisors(n: usize) -> Vec<usize> {
    (2..=n / 2).rev().filter(|m| n.is_multiple_of(*m)).collect()
}

/// One of the `k = n/m` equal parts of a grid.
#[derive(Debug, Clone, Copy)]
pub struct PartView<'a> {
    parent: &'a UniformGrid,
    part_index: usize,
    m: usize,
}

impl<'a> PartView<'a> {
    pub fn parent(&self) -> &'a UniformGrid {
        self.parent
    }

    pub fn part_index(&self) -> usize {
        self.part_index
    }

    /// Subintervals in this part.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of parts in the partition this view belongs to.
    pub fn k(&self) -> usize {
        self.parent.n() / self.m
    }

    pub fn width(&self) -> f64 {
        self.m as f64 * self.parent.h()
    }

    pub fn left(&self) -> f64 {
        self.parent.x(self.part_index * self.m)
    }

    pub fn right(&self) -> f64 {
        self.parent.x((self.part_index + 1) * self.m)
    }

    /// The `m + 1` samples of this part; neighbours share their boundary sample.
    pub fn values(&self) -> &'a [f64] {
        let start = self.part_index * self.m;
        &self.parent.values[start..=start + self.m]
    }

    /// Sample at the part's left endpoint.
    pub fn left_value(&self) -> f64 {
        self.values()[0]
    }
}

/// Splits `grid` into `n/m` consecutive parts of `m` subintervals each.
pub fn parts(grid: &UniformGrid, m: usize) -> Result<Vec<PartView<'_>>> {
    let n = grid.n();
    if m == 0 || m > n {
        return Err(Error::PartSizeOutOfRange { m, min: 1, n });
    }
    if !n.is_multiple_of(m) {
        return Err(Error::NotDivisor { m, n });
    }
    Ok((0..n / m)
        .map(|part_index| PartView {
            parent: grid,
            part_index,
            m,
        })
        .collect())
}

/// Which rule produced an [`Estimate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Trapezoid,
    CompositeTrapezoid,
    Alt,
    AltComposite,
    Simpson,
    Simpson38,
    RombergCell,
    TableauCell,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Trapezoid => "trapezoid",
            Method::CompositeTrapezoid => "composite-trapezoid",
            Method::Alt => "alt",
            Method::AltComposite => "alt-composite",
            Method::Simpson => "simpson",
            Method::Simpson38 => "simpson38",
            Method::RombergCell => "romberg-cell",
            Method::TableauCell => "tableau-cell",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A quadrature value with the rule and subinterval signature behind it.
///
/// For alt composites the signature is `(m, m)`; tableau cells carry the
/// pair of part sizes whose estimates were combined, so `A_{12,6}` is
/// `(12, 6)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub method: Method,
    pub signature: (usize, usize),
}

impl Estimate {
    pub fn new(value: f64, method: Method, signature: (usize, usize)) -> Self {
        debug_assert!(value.is_finite(), "non-finite estimate {value}");
        Self {
            value,
            method,
            signature,
        }
    }

    /// `A_m` or `A_{p,q}` style label.
    pub fn label(&self) -> String {
        let (p, q) = self.signature;
        if p == q {
            format!("A_{p}")
        } else {
            format!("A_{{{p},{q}}}")
        }
    }
}

/// Reads `x,f` rows into a grid, checking that `x` is uniformly spaced.
///
/// A first row whose leading field is not a number is treated as a header.
/// Only the first and last `x` are kept; the interior abscissae serve solely
/// to validate spacing.
pub fn read_csv<R: Read>(reader: R) -> Result<UniformGrid> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(reader);

    let mut xs = Vec::new();
    let mut fs = Vec::new();
    for (row, record) in rdr.records().enumerate() {
        let record = record?;
        let line = record
            .position()
            .map(|p| p.line() as usize)
            .unwrap_or(row + 1);
        if record.len() != 2 {
            return Err(Error::Parse {
                line,
                message: format!("expected 2 fields `x,f`, found {}", record.len()),
            });
        }
        let x = record[0].parse::<f64>();
        if row == 0 && x.is_err() {
            continue;
        }
        let x = x.map_err(|e| Error::Parse {
            line,
            message: format!("x = `{}`: {e}", &record[0]),
        })?;
        let f = record[1].parse::<f64>().map_err(|e| Error::Parse {
            line,
            message: format!("f = `{}`: {e}", &record[1]),
        })?;
        xs.push(x);
        fs.push(f);
    }

    if xs.len() < 2 {
        return Err(Error::TooFewSamples(xs.len()));
    }
    // negated so a NaN abscissa also counts as out of order
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if let Some(row) = xs.windows(2).position(|w| !(w[1] > w[0])) {
        return Err(Error::NotIncreasing { row: row + 1 });
    }
    let a = xs[0];
    let b = xs[xs.len() - 1];
    let mean = (b - a) / (xs.len() - 1) as f64;
    for (row, w) in xs.windows(2).enumerate() {
        let gap = w[1] - w[0];
        if (gap - mean).abs() > SPACING_TOLERANCE * mean.abs() {
            return Err(Error::NonUniformSpacing {
                row: row + 1,
                gap,
                mean,
            });
        }
    }
    UniformGrid::new(a, b, fs)
}

pub fn read_csv_path<P: AsRef<Path>>(path: P) -> Result<UniformGrid> {
    read_csv(File::open(path)?)
}

/// Writes `x,f` with a header and 17 significant digits per value.
pub fn write_csv<W: Write>(grid: &UniformGrid, mut out: W) -> Result<()> {
    writeln!(out, "x,f")?;
    for (i, f) in grid.values().iter().enumerate() {
        writeln!(out, "{:.16e},{:.16e}", grid.x(i), f)?;
    }
    Ok(())
}
