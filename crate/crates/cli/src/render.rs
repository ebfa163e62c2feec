//! Plain-text tables and polynomials.

use std::fmt::Write;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `1 + 5T^3 + 8T^6`, skipping zero coefficients.
pub fn polynomial(coeffs: &[BigRational], var: &str) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let show_coeff = i == 0 || !mag.is_one();
        if show_coeff {
            if mag.is_integer() {
                write!(out, "{mag}").unwrap();
            } else {
                write!(out, "({mag})").unwrap();
            }
        }
        match i {
            0 => {}
            1 => out.push_str(var),
            _ => write!(out, "{var}^{i}").unwrap(),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Right-aligned columns separated by two spaces.
pub fn table(header: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[String]| {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:>w$}"))
            .collect();
        writeln!(out, "{}", parts.join("  ").trim_end()).unwrap();
    };
    line(header);
    for row in rows {
        line(row);
    }
    out
}
