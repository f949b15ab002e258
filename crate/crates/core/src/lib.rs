//! Quadrature on equally spaced samples.
//!
//! The central estimator averages two geometrically corrected Riemann sums
//! over a uniform grid. Its leading error term scales with the square of the
//! number of subintervals per part, so estimates built from equal-part
//! composites can be combined in a triangular tableau using factors
//! `(p/q)^2`. Classical Romberg integration is provided alongside for
//! comparison.
//!
//! ```
//! use altquad::{build_alt_tableau, default_ordering, UniformGrid};
//!
//! let values: Vec<f64> = (0..=10).map(|i| {
//!     let x = i as f64;
//!     x.powi(7) - 2.0 * x + 10.0
//! }).collect();
//! let grid = UniformGrid::new(0.0, 10.0, values).unwrap();
//! let tableau = build_alt_tableau(&grid, &default_ordering(grid.n())).unwrap();
//! assert!((tableau.final_estimate().value - 12_500_000.0).abs() < 1e-6);
//! ```

pub mod analysis;
pub mod error;
pub mod extrapolation;
pub mod grid;
pub mod rules;

pub use analysis::{
    catalog, convergence_study, fd_third_derivative, lookup, omega_scaled_composite,
    predicted_alpha, predicted_alpha_composite, sample, CatalogFunction, ConvergenceReport,
    ConvergenceRow, Endpoint, ErrorModel, StudyMethod,
};
pub use error::{Error, ErrorKind, Result};
pub use extrapolation::{
    build_alt_tableau, build_romberg_tableau, default_ordering, extrapolate_pair, omega,
    validate_ordering, ExtrapolationTableau, Omega, OrderingPreset, RombergTableau,
};
pub use grid::{
    feasible_divisors, parts, read_csv, read_csv_path, write_csv, Estimate, Method, PartView,
    UniformGrid,
};
pub use rules::{
    alt_closed_form, alt_composite, alt_estimate, alt_intermediates, composite_trapezoid, simpson,
    simpson38, trapezoid, AltIntermediates,
};
