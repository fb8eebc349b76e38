//! Dense row-major matrix storage shared by every construction.
//!
//! Public accessors taking `(i, j)` use 1-based indices, matching the way
//! the constructions are written down; slice views (`row_slice`, `rows`)
//! are plain 0-based Rust slices.

use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Copy> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    /// Builds a matrix from nested rows; every row must have the same length.
    pub fn from_rows<R: AsRef<[T]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::Malformed(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    cols
                )));
            }
            data.extend_from_slice(row);
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// 0-based unchecked access; panics when out of bounds.
    #[inline]
    pub fn at(&self, r: usize, c: usize) -> T {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub(crate) fn set(&mut self, r: usize, c: usize, value: T) {
        self.data[r * self.cols + c] = value;
    }

    /// 1-based checked access.
    pub fn entry(&self, i: usize, j: usize) -> Result<T> {
        check_index(i, self.rows)?;
        check_index(j, self.cols)?;
        Ok(self.at(i - 1, j - 1))
    }

    /// 1-based row lookup.
    pub fn row(&self, i: usize) -> Result<&[T]> {
        check_index(i, self.rows)?;
        Ok(self.row_slice(i - 1))
    }

    /// 0-based row slice.
    pub fn row_slice(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows(&self) -> impl ExactSizeIterator<Item = &[T]> + '_ {
        (0..self.rows).map(move |r| self.row_slice(r))
    }

    pub fn column(&self, c: usize) -> impl ExactSizeIterator<Item = T> + '_ {
        (0..self.rows).map(move |r| self.at(r, c))
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.rows().map(<[T]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r))
    }

    pub fn map<U: Copy>(&self, mut f: impl FnMut(T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.rows.min(self.cols))
            .map(|i| self.at(i, i))
            .collect()
    }

    /// Submatrix with the first row and first column removed.
    pub fn without_first_row_and_column(&self) -> Self {
        let rows = self.rows.saturating_sub(1);
        let cols = self.cols.saturating_sub(1);
        Matrix::from_fn(rows, cols, |r, c| self.at(r + 1, c + 1))
    }
}

impl<T: Copy + PartialEq> Matrix<T> {
    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (r + 1..self.cols).all(|c| self.at(r, c) == self.at(c, r)))
    }
}

impl<T> Matrix<T>
where
    T: Copy + Default + Add<Output = T> + Mul<Output = T>,
{
    /// Plain `self · other` product.
    pub fn matmul(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != other.rows {
            return Err(Error::Malformed(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::filled(self.rows, other.cols, T::default());
        for r in 0..self.rows {
            for t in 0..self.cols {
                let a = self.at(r, t);
                for c in 0..other.cols {
                    let acc = out.at(r, c) + a * other.at(t, c);
                    out.set(r, c, acc);
                }
            }
        }
        Ok(out)
    }
}

fn check_index(index: usize, bound: usize) -> Result<()> {
    if index == 0 || index > bound {
        Err(Error::IndexOutOfRange { index, bound })
    } else {
        Ok(())
    }
}

impl<T: fmt::Display + Copy> fmt::Display for Matrix<T> {
    /// Rows on lines, entries separated by single spaces, final newline.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let mut first = true;
            for x in row {
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                write!(f, "{x}")?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

impl<T: fmt::Debug + Copy> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}
