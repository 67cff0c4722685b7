//! Dense matrices with polynomial entries.

use std::fmt;

use super::order::MonomialOrder;
use super::polynomial::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    nvars: usize,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zero(nvars: usize, rows: usize, cols: usize) -> Self {
        PolyMatrix { nvars, rows, cols, entries: vec![Polynomial::zero(nvars); rows * cols] }
    }

    /// Builds a matrix from rows of entries; every row must have the same
    /// length.
    pub fn from_rows(nvars: usize, rows: Vec<Vec<Polynomial>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        let nrows = rows.len();
        PolyMatrix { nvars, rows: nrows, cols, entries: rows.into_iter().flatten().collect() }
    }

    /// Parses rows of entries such as `["-x3", "0", "x5"]`.
    pub fn parse(rows: &[&[&str]], names: &[String]) -> Result<Self, String> {
        let parsed = rows
            .iter()
            .map(|row| row.iter().map(|e| Polynomial::parse(e, names)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PolyMatrix::from_rows(names.len(), parsed))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &Polynomial {
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Polynomial) {
        self.entries[row * self.cols + col] = value;
    }

    pub fn row(&self, row: usize) -> &[Polynomial] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn column(&self, col: usize) -> Vec<&Polynomial> {
        (0..self.rows).map(|r| self.get(r, col)).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Polynomial)> {
        self.entries.iter().enumerate().map(|(i, p)| (i / self.cols, i % self.cols, p))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = PolyMatrix::zero(self.nvars, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(self.nvars);
                for l in 0..self.cols {
                    let (x, y) = (self.get(i, l), other.get(l, j));
                    if !x.is_zero() && !y.is_zero() {
                        acc = acc + x * y;
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// The submatrix on the given (0-based) rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let picked = rows.iter().map(|&r| cols.iter().map(|&c| self.get(r, c).clone()).collect()).collect();
        PolyMatrix::from_rows(self.nvars, picked)
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn determinant(&self) -> Polynomial {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        match self.rows {
            0 => Polynomial::constant(self.nvars, num_traits::One::one()),
            1 => self.get(0, 0).clone(),
            n => {
                let rest: Vec<usize> = (1..n).collect();
                let mut acc = Polynomial::zero(self.nvars);
                for c in 0..n {
                    let entry = self.get(0, c);
                    if entry.is_zero() {
                        continue;
                    }
                    let others: Vec<usize> = (0..n).filter(|&j| j != c).collect();
                    let term = entry * &self.submatrix(&rest, &others).determinant();
                    acc = if c % 2 == 0 { acc + term } else { acc - term };
                }
                acc
            }
        }
    }

    pub fn display<'a>(&'a self, names: &'a [String], order: &'a MonomialOrder) -> MatrixDisplay<'a> {
        MatrixDisplay { matrix: self, names, order }
    }
}

pub struct MatrixDisplay<'a> {
    matrix: &'a PolyMatrix,
    names: &'a [String],
    order: &'a MonomialOrder,
}

impl fmt::Display for MatrixDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.matrix.rows)
            .map(|r| self.matrix.row(r).iter().map(|p| p.display(self.names, self.order).to_string()).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(0);
        for (i, row) in cells.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            write!(f, "[ {} ]", padded.join("  "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::polynomial::x_names;

    #[test]
    fn product_of_twisted_cubic_maps_vanishes() {
        let n = x_names(4);
        let d1 = PolyMatrix::parse(&[&["x2^2 - x1*x3", "x2*x3 - x1*x4", "x3^2 - x2*x4"]], &n).unwrap();
        let d2 = PolyMatrix::parse(&[&["-x3", "x4"], &["x2", "-x3"], &["-x1", "x2"]], &n).unwrap();
        assert!(d1.mul(&d2).is_zero());
        let minor = d2.submatrix(&[0, 1], &[0, 1]).determinant();
        assert_eq!(minor, Polynomial::parse("x3^2 - x2*x4", &n).unwrap());
    }

    #[test]
    fn determinant_of_scalar_matrices() {
        let n = x_names(1);
        let m = PolyMatrix::parse(&[&["2", "1", "0"], &["1", "3", "1"], &["0", "1", "4"]], &n).unwrap();
        assert_eq!(m.determinant(), Polynomial::parse("18", &n).unwrap());
        let empty = PolyMatrix::zero(1, 0, 0);
        assert_eq!(empty.determinant(), Polynomial::parse("1", &n).unwrap());
    }
}
