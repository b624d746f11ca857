//! Vectors and matrices over NCFD with meet-join composition and the bi-fuzzy tensor.

use std::fmt;

use thiserror::Error;

use crate::ncfd::Ncfd;

#[derive(Debug, Error, PartialEq)]
pub enum LinearError {
    #[error("dimension mismatch: left is {lrows}x{lcols}, right is {rrows}x{rcols}")]
    DimensionMismatch { lrows: usize, lcols: usize, rrows: usize, rcols: usize },
    #[error("matrix shape {rows}x{cols} does not fit {len} entries")]
    BadShape { rows: usize, cols: usize, len: usize },
}

/// A dense `rows x cols` matrix of NCFDs (a T2 fuzzy relation).
#[derive(Debug, Clone, PartialEq)]
pub struct NcfdMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Ncfd>,
}

/// A row vector of NCFDs (a bi-fuzzy state).
pub type NcfdVector = NcfdMatrix;

impl NcfdMatrix {
    pub fn from_rows(rows: Vec<Vec<Ncfd>>) -> Result<NcfdMatrix, LinearError> {
        let m = rows.len();
        let n = rows.first().map_or(0, |r| r.len());
        if m == 0 || n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(LinearError::BadShape { rows: m, cols: n, len: rows.iter().map(|r| r.len()).sum() });
        }
        Ok(NcfdMatrix { rows: m, cols: n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn row_vector(entries: Vec<Ncfd>) -> NcfdVector {
        let n = entries.len();
        assert!(n >= 1, "vector needs at least one entry");
        NcfdMatrix { rows: 1, cols: n, entries }
    }

    /// `Â_n = [1/1, ..., 1/1]`.
    pub fn all_ones_vector(n: usize) -> NcfdVector {
        NcfdMatrix::row_vector(vec![Ncfd::top(); n])
    }

    /// Identity for ⊙: `1/1` on the diagonal, `1/0` elsewhere.
    pub fn identity(n: usize) -> NcfdMatrix {
        assert!(n >= 1);
        let mut entries = vec![Ncfd::bottom(); n * n];
        for i in 0..n {
            entries[i * n + i] = Ncfd::top();
        }
        NcfdMatrix { rows: n, cols: n, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Ncfd {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Ncfd] {
        &self.entries
    }

    pub fn transpose(&self) -> NcfdMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        NcfdMatrix { rows: self.cols, cols: self.rows, entries }
    }

    /// Meet-join composition (⊙): entry `(x, z)` is `⊔_y A(x,y) ⊓ B(y,z)`.
    pub fn compose(&self, other: &NcfdMatrix) -> Result<NcfdMatrix, LinearError> {
        if self.cols != other.rows {
            return Err(LinearError::DimensionMismatch {
                lrows: self.rows,
                lcols: self.cols,
                rrows: other.rows,
                rcols: other.cols,
            });
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = self.get(i, 0).meet(other.get(0, j));
                for k in 1..self.cols {
                    acc = acc.join(&self.get(i, k).meet(other.get(k, j)));
                }
                entries.push(acc);
            }
        }
        Ok(NcfdMatrix { rows: self.rows, cols: other.cols, entries })
    }

    /// Bi-fuzzy tensor (⊗): block matrix with block `(i, j)` equal to `a_ij ⊓ B` entrywise.
    pub fn tensor(&self, other: &NcfdMatrix) -> NcfdMatrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let a = self.get(i / other.rows, j / other.cols);
                let b = other.get(i % other.rows, j % other.cols);
                entries.push(a.meet(b));
            }
        }
        NcfdMatrix { rows, cols, entries }
    }

    /// Folds a row vector with ⊔; used for the language degree `x ⊙ Â_nᵀ`.
    pub fn join_all(&self) -> Ncfd {
        let mut acc = self.entries[0].clone();
        for e in &self.entries[1..] {
            acc = acc.join(e);
        }
        acc
    }

    /// Quantized key for dedup of reachable state vectors.
    pub fn quantized(&self) -> Vec<Vec<(i64, i64)>> {
        self.entries.iter().map(Ncfd::quantized).collect()
    }
}

impl fmt::Display for NcfdMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(s: &str) -> Ncfd {
        s.parse().unwrap()
    }

    fn example2_sigma1_plant() -> NcfdMatrix {
        NcfdMatrix::from_rows(vec![
            vec![n("1/0.6 + 0.6/0.9"), n("1/0.9 + 0.8/1")],
            vec![n("1/0.3 + 0.7/0.6"), n("1/0.3 + 0.7/0.6")],
        ])
        .unwrap()
    }

    #[test]
    fn vector_times_matrix() {
        let x0 = NcfdMatrix::row_vector(vec![Ncfd::top(), Ncfd::bottom()]);
        let got = x0.compose(&example2_sigma1_plant()).unwrap();
        assert_eq!(got.get(0, 0), &n("1/0.6 + 0.6/0.9"));
        assert_eq!(got.get(0, 1), &n("1/0.9 + 0.8/1"));
    }

    #[test]
    fn identity_is_two_sided() {
        let a = example2_sigma1_plant();
        let i = NcfdMatrix::identity(2);
        assert_eq!(i.compose(&a).unwrap(), a);
        assert_eq!(a.compose(&i).unwrap(), a);
        assert_eq!(NcfdMatrix::identity(1).get(0, 0), &Ncfd::top());
    }

    #[test]
    fn compose_dimension_mismatch() {
        let a = example2_sigma1_plant();
        let v = NcfdMatrix::row_vector(vec![Ncfd::top()]);
        assert!(matches!(v.compose(&a), Err(LinearError::DimensionMismatch { .. })));
    }

    #[test]
    fn tensor_of_identities() {
        let i2 = NcfdMatrix::identity(2);
        assert_eq!(i2.tensor(&i2), NcfdMatrix::identity(4));
    }

    #[test]
    fn tensor_of_row_vectors() {
        let v = NcfdMatrix::row_vector(vec![Ncfd::top(), Ncfd::bottom()]);
        let t = v.tensor(&v);
        assert_eq!(t.rows(), 1);
        assert_eq!(t.cols(), 4);
        assert_eq!(t.get(0, 0), &Ncfd::top());
        for j in 1..4 {
            assert_eq!(t.get(0, j), &Ncfd::bottom());
        }
    }

    #[test]
    fn join_all_equals_compose_with_ones() {
        let v = example2_sigma1_plant();
        let ones = NcfdMatrix::all_ones_vector(2).transpose();
        for i in 0..2 {
            let row = NcfdMatrix::row_vector(vec![v.get(i, 0).clone(), v.get(i, 1).clone()]);
            assert_eq!(row.compose(&ones).unwrap().get(0, 0), &row.join_all());
        }
    }
}
