//! Text and CSV rendering of tableaus.

use std::fmt::Write as _;

use altquad::{ExtrapolationTableau, RombergTableau, UniformGrid};

/// Fixed-point formatting that never prints a negative zero.
pub fn fixed(value: f64, precision: usize) -> String {
    let s = format!("{value:.precision$}");
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_string(),
        _ => s,
    }
}

fn error_header(exponent: usize, with_n: bool) -> String {
    if with_n {
        format!("O(n^2h^{exponent})")
    } else {
        format!("O(h^{exponent})")
    }
}

/// Lays out labelled rows of right-aligned cells under a header row.
fn grid_table(header: &[String], rows: &[(String, Vec<String>)]) -> String {
    let label_width = rows
        .iter()
        .map(|(l, _)| l.len())
        .chain(std::iter::once(header[0].len()))
        .max()
        .unwrap_or(0);
    let cell_width = rows
        .iter()
        .flat_map(|(_, cells)| cells.iter().map(String::len))
        .chain(header[1..].iter().map(String::len))
        .max()
        .unwrap_or(0);

    let mut out = String::new();
    let _ = write!(out, "{:<label_width$}", header[0]);
    for h in &header[1..] {
        let _ = write!(out, "  {h:>cell_width$}");
    }
    out.push('\n');
    let rule = label_width + header[1..].len() * (cell_width + 2);
    out.push_str(&"-".repeat(rule));
    out.push('\n');
    for (label, cells) in rows {
        let mut line = format!("{label:<label_width$}");
        for c in cells {
            let _ = write!(line, "  {c:>cell_width$}");
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn grid_summary(grid: &UniformGrid, precision: usize) -> String {
    format!(
        "n = {}, [a, b] = [{}, {}], h = {}\n",
        grid.n(),
        fixed(grid.a(), precision),
        fixed(grid.b(), precision),
        fixed(grid.h(), precision)
    )
}

pub fn alt_table(t: &ExtrapolationTableau, precision: usize, show_omega: bool) -> String {
    let ordering = t.ordering();
    let mut header = vec!["Error".to_string()];
    header.extend(
        (0..ordering.len()).map(|j| error_header(ExtrapolationTableau::error_exponent(j), true)),
    );
    let rows: Vec<(String, Vec<String>)> = (0..ordering.len())
        .map(|i| {
            let label = t.cell(i, 0).map(|e| e.label()).unwrap_or_default();
            let cells = (0..ordering.len() - i)
                .filter_map(|j| t.cell(i, j))
                .map(|e| fixed(e.value, precision))
                .collect();
            (label, cells)
        })
        .collect();

    let list: Vec<String> = ordering.iter().map(usize::to_string).collect();
    let mut out = format!("ordering: {}\n\n", list.join(", "));
    out.push_str(&grid_table(&header, &rows));
    let fin = t.final_estimate();
    let _ = writeln!(
        out,
        "\nfinal {} = {}",
        fin.label(),
        fixed(fin.value, precision)
    );

    if show_omega && t.depth() > 0 {
        out.push_str("\nextrapolation factors:\n");
        for j in 1..ordering.len() {
            for i in 0..ordering.len() - j {
                let (Some(cell), Some(w)) = (t.cell(i, j), t.omega_at(i, j)) else {
                    continue;
                };
                let upper = t.cell(i, j - 1).map(|e| e.label()).unwrap_or_default();
                let lower = t.cell(i + 1, j - 1).map(|e| e.label()).unwrap_or_default();
                let _ = writeln!(
                    out,
                    "  {} = (Omega*{} - {})/(Omega - 1), Omega_{{{},{}}} = ({}/{})^2 = {}",
                    cell.label(),
                    lower,
                    upper,
                    w.num,
                    w.den,
                    w.num,
                    w.den,
                    w.value
                );
            }
        }
    }
    out
}

pub fn alt_csv(t: &ExtrapolationTableau, precision: usize) -> String {
    let mut out = String::from("row,column,label,num,den,omega,value\n");
    for (j, column) in t.columns().iter().enumerate() {
        for (i, cell) in column.iter().enumerate() {
            let (num, den) = cell.signature;
            let omega = t
                .omega_at(i, j)
                .map(|w| w.value.to_string())
                .unwrap_or_default();
            // labels such as A_{6,3} contain a comma, so the field is quoted
            let _ = writeln!(
                out,
                "{i},{j},\"{}\",{num},{den},{omega},{}",
                cell.label(),
                fixed(cell.value, precision)
            );
        }
    }
    out
}

/// Romberg table with row `r` holding `R[r+j][j]`, so the final value ends the first row.
pub fn romberg_table(r: &RombergTableau, precision: usize) -> String {
    let levels = r.levels();
    let mut header = vec!["h".to_string()];
    header.extend((0..=levels).map(|j| error_header(2 + 2 * j, false)));
    let rows: Vec<(String, Vec<String>)> = (0..=levels)
        .map(|row| {
            let label = format!("(b-a)/{}", 1usize << row);
            let cells = (0..=levels - row)
                .filter_map(|j| r.cell(row + j, j))
                .map(|v| fixed(v, precision))
                .collect();
            (label, cells)
        })
        .collect();
    let mut out = grid_table(&header, &rows);
    let _ = writeln!(out, "\nfinal = {}", fixed(r.final_value(), precision));
    out
}

pub fn romberg_csv(r: &RombergTableau, precision: usize) -> String {
    let mut out = String::from("row,column,subintervals,value\n");
    for (i, row) in r.cells().iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let _ = writeln!(out, "{i},{j},{},{}", 1usize << i, fixed(*v, precision));
        }
    }
    out
}
