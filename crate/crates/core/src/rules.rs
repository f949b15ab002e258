//! Base quadrature rules.
//!
//! The alt estimator works from the left and right Riemann sums `U1` and `O1`.
//! Each is corrected by the limit of repeatedly stacking narrower rectangles
//! on the residual, giving `U_inf` and `O_inf`; their mean `A_n` is
//!
//! ```text
//! A_n = (n^2 T_n - T_1) / (n^2 - 1)
//! ```
//!
//! where `T_n` is the composite trapezoid on `n` subintervals and `T_1` the
//! single-panel trapezoid. At `n = 2` this is Simpson's rule and at `n = 3`
//! Simpson's 3/8 rule. The Simpson routines here are kept only as independent
//! checks; nothing in the estimator calls them.

use crate::error::{Error, Result};
use crate::grid::{interior_sum, parts, Estimate, Method, UniformGrid};

/// Intermediate sums of the alt estimator for one grid or part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AltIntermediates {
    /// Left Riemann sum `h * (f_0 + ... + f_{n-1})`.
    pub u1: f64,
    /// Right Riemann sum `h * (f_1 + ... + f_n)`.
    pub o1: f64,
    /// `h * f(left endpoint)`.
    pub cap_h: f64,
    pub u_inf: f64,
    pub o_inf: f64,
}

fn require_alt(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::DegenerateGrid {
            method: "alt estimator",
            n,
            required: 2,
        });
    }
    Ok(())
}

fn intermediates(h: f64, values: &[f64]) -> AltIntermediates {
    let n = values.len() - 1;
    let nf = n as f64;
    let u1 = h * values[..n].iter().sum::<f64>();
    let o1 = h * values[1..].iter().sum::<f64>();
    let cap_h = h * values[0];
    let u_inf = u1 + u1 / (nf - 1.0) - nf / (nf - 1.0) * cap_h;
    let o_inf = o1 - o1 / (nf + 1.0) + nf / (nf + 1.0) * cap_h;
    AltIntermediates {
        u1,
        o1,
        cap_h,
        u_inf,
        o_inf,
    }
}

fn alt_value(h: f64, values: &[f64]) -> f64 {
    let it = intermediates(h, values);
    (it.u_inf + it.o_inf) / 2.0
}

/// Single-panel trapezoid `(b - a)/2 * (f(a) + f(b))`.
pub fn trapezoid(grid: &UniformGrid) -> Estimate {
    let v = grid.values();
    let value = (grid.b() - grid.a()) / 2.0 * (v[0] + v[grid.n()]);
    Estimate::new(value, Method::Trapezoid, (1, 1))
}

/// Composite trapezoid `h/2 * (f(a) + 2 S + f(b))` with `S` the interior sum.
pub fn composite_trapezoid(grid: &UniformGrid) -> Estimate {
    let n = grid.n();
    let v = grid.values();
    let value = grid.h() / 2.0 * (v[0] + 2.0 * grid.interior_sum() + v[n]);
    Estimate::new(value, Method::CompositeTrapezoid, (n, n))
}

pub fn alt_intermediates(grid: &UniformGrid) -> Result<AltIntermediates> {
    require_alt(grid.n())?;
    Ok(intermediates(grid.h(), grid.values()))
}

/// `A_n = (U_inf + O_inf) / 2`.
pub fn alt_estimate(grid: &UniformGrid) -> Result<Estimate> {
    let n = grid.n();
    require_alt(n)?;
    Ok(Estimate::new(
        alt_value(grid.h(), grid.values()),
        Method::Alt,
        (n, n),
    ))
}

/// `A_n` from its endpoint-weight form
/// `h/2 * [n f(a)/(n+1) + 2 n^2 S/(n^2 - 1) + n f(b)/(n+1)]`.
pub fn alt_closed_form(grid: &UniformGrid) -> Result<Estimate> {
    let n = grid.n();
    require_alt(n)?;
    let nf = n as f64;
    let v = grid.values();
    let end_weight = nf / (nf + 1.0);
    let interior_weight = 2.0 * nf * nf / (nf * nf - 1.0);
    let value = grid.h() / 2.0
        * (end_weight * v[0] + interior_weight * interior_sum(v) + end_weight * v[n]);
    Ok(Estimate::new(value, Method::Alt, (n, n)))
}

/// Sum of `A_m` over the `n/m` equal parts, each with its own left-endpoint `H`.
///
/// Parts are reduced in ascending order; `m = n` returns exactly
/// [`alt_estimate`].
pub fn alt_composite(grid: &UniformGrid, m: usize) -> Result<Estimate> {
    let n = grid.n();
    if m < 2 || m > n {
        return Err(Error::PartSizeOutOfRange { m, min: 2, n });
    }
    let h = grid.h();
    let mut sums = parts(grid, m)?
        .into_iter()
        .map(|p| alt_value(h, p.values()));
    // parts() never returns an empty partition
    let first = sums.next().expect("at least one part");
    let value = sums.fold(first, |acc, s| acc + s);
    let method = if m == n {
        Method::Alt
    } else {
        Method::AltComposite
    };
    Ok(Estimate::new(value, method, (m, m)))
}

/// Composite Simpson `h/3 (f_0 + 4 f_1 + 2 f_2 + ... + f_n)`.
pub fn simpson(grid: &UniformGrid) -> Result<Estimate> {
    let n = grid.n();
    if !n.is_multiple_of(2) {
        return Err(Error::OddSubintervals(n));
    }
    let v = grid.values();
    let inner: f64 = v[1..n]
        .iter()
        .enumerate()
        .map(|(i, f)| if i % 2 == 0 { 4.0 * f } else { 2.0 * f })
        .sum();
    let value = grid.h() / 3.0 * (v[0] + inner + v[n]);
    Ok(Estimate::new(value, Method::Simpson, (n, n)))
}

/// Composite Simpson 3/8 `3h/8 (f_0 + 3 f_1 + 3 f_2 + 2 f_3 + ... + f_n)`.
pub fn simpson38(grid: &UniformGrid) -> Result<Estimate> {
    let n = grid.n();
    if !n.is_multiple_of(3) {
        return Err(Error::NotMultipleOfThree(n));
    }
    let v = grid.values();
    let inner: f64 = v[1..n]
        .iter()
        .enumerate()
        .map(|(i, f)| if (i + 1) % 3 == 0 { 2.0 * f } else { 3.0 * f })
        .sum();
    let value = 3.0 * grid.h() / 8.0 * (v[0] + inner + v[n]);
    Ok(Estimate::new(value, Method::Simpson38, (n, n)))
}
