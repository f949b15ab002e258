//! Extrapolation factors and the two triangular tableaus.
//!
//! The leading error of an alt composite with parts of `m` subintervals is
//! proportional to `m^2`, so two estimates built from part sizes `p` and `q`
//! combine with the factor `(p/q)^2`. Factors compose:
//! `(z/y)^2 (y/x)^2 = (z/x)^2`, which is what lets every column of the
//! tableau reuse the ordering's first and last part sizes directly.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::grid::{feasible_divisors, Estimate, Method, UniformGrid};
use crate::rules::{alt_composite, composite_trapezoid};

/// Extrapolation factor `(num/den)^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Omega {
    pub num: usize,
    pub den: usize,
    pub value: f64,
}

pub fn omega(num: usize, den: usize) -> Omega {
    let (n2, d2) = ((num as u128).pow(2), (den as u128).pow(2));
    Omega {
        num,
        den,
        value: n2 as f64 / d2 as f64,
    }
}

/// `(w * lower - upper) / (w - 1)`.
///
/// `upper` is the estimate being subtracted, i.e. the one whose leading part
/// size matches `w.num`.
pub fn extrapolate_pair(upper: &Estimate, lower: &Estimate, w: Omega) -> Result<Estimate> {
    if w.num == w.den {
        return Err(Error::DegenerateFactor {
            num: w.num,
            den: w.den,
        });
    }
    let value = (w.value * lower.value - upper.value) / (w.value - 1.0);
    Ok(Estimate::new(value, Method::TableauCell, (w.num, w.den)))
}

/// `[n]` followed by the feasible part sizes, largest first.
pub fn default_ordering(n: usize) -> Vec<usize> {
    std::iter::once(n).chain(feasible_divisors(n)).collect()
}

/// Named ways of choosing the tableau ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderingPreset {
    /// [`default_ordering`].
    Descending,
    /// `[n, n/2, n/6, n/4, n/3]`; needs `12 | n`. Gives `[12, 6, 2, 3, 4]` at `n = 12`.
    MixedTwelfths,
    /// `[n]` then feasible part sizes smallest first. Gives `[32, 2, 4, 8, 16]` at `n = 32`.
    Ascending,
    Explicit(Vec<usize>),
}

impl OrderingPreset {
    pub fn resolve(&self, n: usize) -> Result<Vec<usize>> {
        let ordering = match self {
            OrderingPreset::Descending => default_ordering(n),
            OrderingPreset::MixedTwelfths => {
                if !n.is_multiple_of(12) {
                    return Err(Error::PresetUnavailable {
                        requirement: "n divisible by 12",
                        n,
                    });
                }
                vec![n, n / 2, n / 6, n / 4, n / 3]
            }
            OrderingPreset::Ascending => {
                let mut divisors = feasible_divisors(n);
                divisors.reverse();
                std::iter::once(n).chain(divisors).collect()
            }
            OrderingPreset::Explicit(list) => list.clone(),
        };
        validate_ordering(n, &ordering)?;
        Ok(ordering)
    }
}

/// Checks that `ordering` is `[n, m_1, ..., m_d]` with distinct feasible `m_i`.
pub fn validate_ordering(n: usize, ordering: &[usize]) -> Result<()> {
    let (&first, rest) = ordering.split_first().ok_or(Error::EmptyOrdering)?;
    if first != n {
        return Err(Error::OrderingStart { n, first });
    }
    if n < 2 {
        return Err(Error::DegenerateGrid {
            method: "alt tableau",
            n,
            required: 2,
        });
    }
    let mut seen = HashSet::from([n]);
    for &m in rest {
        if !seen.insert(m) {
            return Err(Error::RepeatedOrdering(m));
        }
        if m < 2 || 2 * m > n || !n.is_multiple_of(m) {
            return Err(Error::InfeasibleOrdering { m, n });
        }
    }
    Ok(())
}

/// Triangular array of alt estimates and their extrapolations.
///
/// `columns[0][i]` is `A_{m_i}`; `columns[j][i]` combines part sizes `m_i`
/// and `m_{i+j}`. Column `j` carries leading error `O(n^2 h^(4+2j))`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtrapolationTableau {
    ordering: Vec<usize>,
    columns: Vec<Vec<Estimate>>,
}

impl ExtrapolationTableau {
    pub fn ordering(&self) -> &[usize] {
        &self.ordering
    }

    pub fn columns(&self) -> &[Vec<Estimate>] {
        &self.columns
    }

    /// Number of extrapolation steps, i.e. composites used besides `A_n`.
    pub fn depth(&self) -> usize {
        self.ordering.len() - 1
    }

    pub fn cell(&self, row: usize, column: usize) -> Option<&Estimate> {
        self.columns.get(column)?.get(row)
    }

    /// The factor that produced `cell(row, column)`; `None` for column 0.
    pub fn omega_at(&self, row: usize, column: usize) -> Option<Omega> {
        if column == 0 || row + column >= self.ordering.len() {
            return None;
        }
        Some(omega(self.ordering[row], self.ordering[row + column]))
    }

    pub fn final_estimate(&self) -> &Estimate {
        &self.columns[self.depth()][0]
    }

    pub fn cell_count(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// Exponent `p` in the `O(n^2 h^p)` header of a column.
    pub fn error_exponent(column: usize) -> usize {
        4 + 2 * column
    }
}

pub fn build_alt_tableau(grid: &UniformGrid, ordering: &[usize]) -> Result<ExtrapolationTableau> {
    validate_ordering(grid.n(), ordering)?;
    let first = ordering
        .iter()
        .map(|&m| alt_composite(grid, m))
        .collect::<Result<Vec<_>>>()?;

    let mut columns = vec![first];
    for j in 1..ordering.len() {
        let prev = &columns[j - 1];
        let next = prev
            .windows(2)
            .enumerate()
            .map(|(i, pair)| {
                extrapolate_pair(&pair[0], &pair[1], omega(ordering[i], ordering[i + j]))
            })
            .collect::<Result<Vec<_>>>()?;
        columns.push(next);
    }
    Ok(ExtrapolationTableau {
        ordering: ordering.to_vec(),
        columns,
    })
}

/// Classical Romberg table, `cells[i][j]` for `j <= i`.
///
/// Row `i` starts from the composite trapezoid on `2^i` subintervals.
#[derive(Debug, Clone, PartialEq)]
pub struct RombergTableau {
    levels: usize,
    cells: Vec<Vec<f64>>,
}

impl RombergTableau {
    pub fn levels(&self) -> usize {
        self.levels
    }

    pub fn cells(&self) -> &[Vec<f64>] {
        &self.cells
    }

    pub fn cell(&self, row: usize, column: usize) -> Option<f64> {
        self.cells.get(row)?.get(column).copied()
    }

    pub fn estimate(&self, row: usize, column: usize) -> Option<Estimate> {
        self.cell(row, column)
            .map(|v| Estimate::new(v, Method::RombergCell, (1 << row, column)))
    }

    pub fn final_value(&self) -> f64 {
        self.cells[self.levels][self.levels]
    }

    pub fn cell_count(&self) -> usize {
        (self.levels + 1) * (self.levels + 2) / 2
    }
}

pub fn build_romberg_tableau(grid: &UniformGrid) -> Result<RombergTableau> {
    let n = grid.n();
    if !n.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(n));
    }
    let levels = n.trailing_zeros() as usize;
    let mut cells: Vec<Vec<f64>> = Vec::with_capacity(levels + 1);
    for i in 0..=levels {
        let coarse = grid.decimate(n >> i)?;
        let mut row = Vec::with_capacity(i + 1);
        row.push(composite_trapezoid(&coarse).value);
        for j in 1..=i {
            let weight = 4f64.powi(j as i32);
            let value = (weight * row[j - 1] - cells[i - 1][j - 1]) / (weight - 1.0);
            row.push(value);
        }
        cells.push(row);
    }
    Ok(RombergTableau { levels, cells })
}
