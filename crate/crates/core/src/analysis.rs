//! Error models, test integrands, and empirical convergence orders.
//!
//! The leading alt error over `n` subintervals is
//! `-(b-a)^4 / (720 n^2) * [f'''(a) - f'''(b)]`; an equal-part composite with
//! `m` subintervals per part has `m^2 / n^2` times that. These are reported
//! next to measured errors and never subtracted from an estimate.

use std::f64::consts::PI;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::extrapolation::{build_alt_tableau, omega, validate_ordering};
use crate::grid::UniformGrid;
use crate::rules::{alt_estimate, composite_trapezoid, simpson};

/// Rows with an absolute error below this are left out of the order fit.
pub const NOISE_FLOOR: f64 = 1e-13;

const SIX_FACTORIAL: f64 = 720.0;

#[derive(Debug, Clone, Copy, PartialEq)]
enum Kind {
    /// `x^7 - 2x + 10`
    Septic,
    Sin,
    Monomial(i32),
    Exp,
    /// `1 / (1 + x^2)`
    Runge,
}

/// An integrand with closed-form antiderivative and derivatives.
#[derive(Debug, Clone, PartialEq)]
pub struct CatalogFunction {
    name: String,
    kind: Kind,
    interval: (f64, f64),
}

impl CatalogFunction {
    fn new(name: impl Into<String>, kind: Kind, interval: (f64, f64)) -> Self {
        Self {
            name: name.into(),
            kind,
            interval,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Interval the function is usually studied on.
    pub fn default_interval(&self) -> (f64, f64) {
        self.interval
    }

    pub fn eval(&self, x: f64) -> f64 {
        match self.kind {
            Kind::Septic => x.powi(7) - 2.0 * x + 10.0,
            Kind::Sin => x.sin(),
            Kind::Monomial(k) => x.powi(k),
            Kind::Exp => x.exp(),
            Kind::Runge => 1.0 / (1.0 + x * x),
        }
    }

    fn antiderivative(&self, x: f64) -> f64 {
        match self.kind {
            Kind::Septic => x.powi(8) / 8.0 - x * x + 10.0 * x,
            Kind::Sin => -x.cos(),
            Kind::Monomial(k) => x.powi(k + 1) / (k + 1) as f64,
            Kind::Exp => x.exp(),
            Kind::Runge => x.atan(),
        }
    }

    /// Exact `∫_a^b f`.
    pub fn integral(&self, a: f64, b: f64) -> f64 {
        match self.kind {
            // cos(a) - cos(b) loses less than differencing -cos near 2π
            Kind::Sin => a.cos() - b.cos(),
            _ => self.antiderivative(b) - self.antiderivative(a),
        }
    }

    pub fn first_derivative(&self, x: f64) -> f64 {
        match self.kind {
            Kind::Septic => 7.0 * x.powi(6) - 2.0,
            Kind::Sin => x.cos(),
            Kind::Monomial(0) => 0.0,
            Kind::Monomial(k) => k as f64 * x.powi(k - 1),
            Kind::Exp => x.exp(),
            Kind::Runge => -2.0 * x / (1.0 + x * x).powi(2),
        }
    }

    /// `f'''(x)`, when the catalog provides it.
    pub fn third_derivative(&self, x: f64) -> Option<f64> {
        match self.kind {
            Kind::Septic => Some(210.0 * x.powi(4)),
            Kind::Sin => Some(-x.cos()),
            Kind::Monomial(k) if k < 3 => Some(0.0),
            Kind::Monomial(k) => Some((k * (k - 1) * (k - 2)) as f64 * x.powi(k - 3)),
            Kind::Exp => Some(x.exp()),
            Kind::Runge => None,
        }
    }

    pub fn has_third_derivative(&self) -> bool {
        self.third_derivative(0.0).is_some()
    }

    fn third_difference(&self, a: f64, b: f64) -> Result<f64> {
        match (self.third_derivative(a), self.third_derivative(b)) {
            (Some(fa), Some(fb)) => Ok(fa - fb),
            _ => Err(Error::MissingThirdDerivative(self.name.clone())),
        }
    }
}

/// All catalog entries.
pub fn catalog() -> Vec<CatalogFunction> {
    let mut out = vec![
        CatalogFunction::new("poly7", Kind::Septic, (0.0, 10.0)),
        CatalogFunction::new("sin", Kind::Sin, (PI, 2.0 * PI)),
        CatalogFunction::new("exp", Kind::Exp, (0.0, 1.0)),
        CatalogFunction::new("runge", Kind::Runge, (-1.0, 1.0)),
    ];
    out.extend(
        (0..=9).map(|k| CatalogFunction::new(format!("x{k}"), Kind::Monomial(k), (0.0, 1.0))),
    );
    out
}

/// Finds a catalog function by name. `constant` and `linear` alias `x0` and `x1`.
pub fn lookup(name: &str) -> Result<CatalogFunction> {
    let canonical = match name {
        "constant" => "x0",
        "linear" => "x1",
        other => other,
    };
    catalog()
        .into_iter()
        .find(|f| f.name == canonical)
        .map(|mut f| {
            f.name = name.to_string();
            f
        })
        .ok_or_else(|| Error::UnknownFunction(name.to_string()))
}

/// Samples `f` on `n + 1` equally spaced points of `[a, b]`.
pub fn sample(f: &CatalogFunction, a: f64, b: f64, n: usize) -> Result<UniformGrid> {
    if n == 0 {
        return Err(Error::TooFewSamples(1));
    }
    let h = (b - a) / n as f64;
    let values = (0..=n)
        .map(|i| f.eval(if i == n { b } else { a + i as f64 * h }))
        .collect();
    UniformGrid::new(a, b, values)
}

/// Leading error of the alt estimator, `A_n - ∫ f`.
pub fn predicted_alpha(f: &CatalogFunction, a: f64, b: f64, n: usize) -> Result<f64> {
    Ok(ErrorModel::new(f, a, b, n)?.leading_alt)
}

/// Leading error of the alt composite with parts of `m` subintervals.
pub fn predicted_alpha_composite(
    f: &CatalogFunction,
    a: f64,
    b: f64,
    n: usize,
    m: usize,
) -> Result<f64> {
    ErrorModel::new(f, a, b, n)?.leading_alt_composite(m)
}

/// First-term error predictions for one function, interval and `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorModel {
    n: usize,
    /// `A_n - ∫ f`, leading term.
    pub leading_alt: f64,
    /// `∫ f - T_1` for the single-panel trapezoid, leading term.
    pub leading_trap: f64,
}

impl ErrorModel {
    pub fn new(f: &CatalogFunction, a: f64, b: f64, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::DegenerateGrid {
                method: "alt error model",
                n,
                required: 2,
            });
        }
        let width = b - a;
        let d3 = f.third_difference(a, b)?;
        let nf = n as f64;
        let leading_alt = -width.powi(4) / (SIX_FACTORIAL * nf * nf) * d3;
        let leading_trap = width * width / 12.0 * (f.first_derivative(a) - f.first_derivative(b));
        Ok(Self {
            n,
            leading_alt,
            leading_trap,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Leading error of the composite with `m` subintervals per part.
    pub fn leading_alt_composite(&self, m: usize) -> Result<f64> {
        let n = self.n;
        if m == 0 || m > n {
            return Err(Error::PartSizeOutOfRange { m, min: 1, n });
        }
        if !n.is_multiple_of(m) {
            return Err(Error::NotDivisor { m, n });
        }
        let ratio = (m * m) as f64 / (n * n) as f64;
        Ok(self.leading_alt * ratio)
    }

    /// `leading_alt / leading_alt_composite(m)`, which should be `(n/m)^2`.
    pub fn omega_ratio(&self, m: usize) -> Result<f64> {
        Ok(self.leading_alt / self.leading_alt_composite(m)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endpoint {
    Left,
    Right,
}

const FD3_WEIGHTS: [f64; 5] = [-2.5, 9.0, -12.0, 7.0, -1.5];

/// One-sided, second-order estimate of `f'''` at an endpoint from 5 samples.
pub fn fd_third_derivative(grid: &UniformGrid, endpoint: Endpoint) -> Result<f64> {
    let n = grid.n();
    if n < 5 {
        return Err(Error::DegenerateGrid {
            method: "third-derivative stencil",
            n,
            required: 5,
        });
    }
    let h3 = grid.h().powi(3);
    let v = grid.values();
    let acc = match endpoint {
        Endpoint::Left => FD3_WEIGHTS.iter().zip(v).map(|(w, f)| w * f).sum::<f64>(),
        Endpoint::Right => -FD3_WEIGHTS
            .iter()
            .zip(v.iter().rev())
            .map(|(w, f)| w * f)
            .sum::<f64>(),
    };
    Ok(acc / h3)
}

/// Estimator whose convergence a study measures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StudyMethod {
    Trapezoid,
    Simpson,
    Alt,
    /// Tableau over `[n, n/2, ..., n/2^depth]`.
    HalvingTableau(usize),
    /// Tableau over `[n, m_1, ..., m_d]` with fixed part sizes.
    FixedTableau(Vec<usize>),
}

impl StudyMethod {
    /// Parses `trap`, `simpson`, `alt`, `tableau-<depth>` or `fixed-<m1>-<m2>...`.
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "trap" | "trapezoid" => Some(Self::Trapezoid),
            "simpson" => Some(Self::Simpson),
            "alt" => Some(Self::Alt),
            _ => {
                if let Some(depth) = s.strip_prefix("tableau-") {
                    depth.parse().ok().map(Self::HalvingTableau)
                } else if let Some(list) = s.strip_prefix("fixed-") {
                    let parts: Option<Vec<usize>> =
                        list.split('-').map(|p| p.parse().ok()).collect();
                    parts.filter(|p| !p.is_empty()).map(Self::FixedTableau)
                } else {
                    None
                }
            }
        }
    }

    pub fn label(&self) -> String {
        match self {
            Self::Trapezoid => "trap".into(),
            Self::Simpson => "simpson".into(),
            Self::Alt => "alt".into(),
            Self::HalvingTableau(d) => format!("tableau-{d}"),
            Self::FixedTableau(parts) => {
                let list: Vec<String> = parts.iter().map(usize::to_string).collect();
                format!("fixed-{}", list.join("-"))
            }
        }
    }

    fn ordering(&self, n: usize) -> Option<Vec<usize>> {
        match self {
            Self::HalvingTableau(depth) => {
                let mut ordering = vec![n];
                for k in 1..=*depth {
                    let step = 1usize.checked_shl(k as u32)?;
                    if !n.is_multiple_of(step) {
                        return None;
                    }
                    ordering.push(n / step);
                }
                Some(ordering)
            }
            Self::FixedTableau(parts) => {
                Some(std::iter::once(n).chain(parts.iter().copied()).collect())
            }
            _ => None,
        }
    }

    fn estimate(&self, grid: &UniformGrid) -> Result<f64> {
        let n = grid.n();
        let invalid = |reason| Error::StudyGrid {
            method: self.label(),
            n,
            reason,
        };
        match self {
            Self::Trapezoid => Ok(composite_trapezoid(grid).value),
            Self::Simpson => simpson(grid)
                .map(|e| e.value)
                .map_err(|_| invalid("n must be even")),
            Self::Alt => alt_estimate(grid)
                .map(|e| e.value)
                .map_err(|_| invalid("n must be at least 2")),
            Self::HalvingTableau(_) | Self::FixedTableau(_) => {
                let ordering = self
                    .ordering(n)
                    .ok_or_else(|| invalid("part sizes must divide n"))?;
                validate_ordering(n, &ordering)
                    .map_err(|_| invalid("part sizes must be distinct feasible divisors of n"))?;
                Ok(build_alt_tableau(grid, &ordering)?.final_estimate().value)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow {
    pub n: usize,
    pub estimate: f64,
    pub abs_error: f64,
}

/// Errors per `n` and the fitted order `-d log|err| / d log n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    pub rows: Vec<ConvergenceRow>,
    /// `None` when fewer than two rows sit above [`NOISE_FLOOR`].
    pub fitted_order: Option<f64>,
}

impl ConvergenceReport {
    /// `n,estimate,abs_error` rows followed by a `#order=` trailer.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,estimate,abs_error\n");
        for row in &self.rows {
            let _ = writeln!(out, "{},{:e},{:e}", row.n, row.estimate, row.abs_error);
        }
        match self.fitted_order {
            Some(order) => {
                let _ = writeln!(out, "#order={order:.6}");
            }
            None => out.push_str("#order=NaN\n"),
        }
        out
    }
}

/// Ordinary least-squares slope of `y` on `x`.
fn ols_slope(points: &[(f64, f64)]) -> f64 {
    let len = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / len;
    let my = points.iter().map(|p| p.1).sum::<f64>() / len;
    let sxy: f64 = points.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = points.iter().map(|(x, _)| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

pub fn convergence_study(
    f: &CatalogFunction,
    a: f64,
    b: f64,
    n_list: &[usize],
    method: &StudyMethod,
) -> Result<ConvergenceReport> {
    if n_list.is_empty() || n_list.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::StudyOrder);
    }
    let exact = f.integral(a, b);
    let rows = n_list
        .iter()
        .map(|&n| {
            let grid = sample(f, a, b, n)?;
            let estimate = method.estimate(&grid)?;
            Ok(ConvergenceRow {
                n,
                estimate,
                abs_error: (estimate - exact).abs(),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let points: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.abs_error >= NOISE_FLOOR)
        .map(|r| ((r.n as f64).ln(), r.abs_error.ln()))
        .collect();
    let fitted_order = (points.len() >= 2).then(|| -ols_slope(&points));
    Ok(ConvergenceReport { rows, fitted_order })
}

/// `omega(n, m)` times the composite prediction; equals [`predicted_alpha`].
pub fn omega_scaled_composite(model: &ErrorModel, m: usize) -> Result<f64> {
    Ok(omega(model.n, m).value * model.leading_alt_composite(m)?)
}
