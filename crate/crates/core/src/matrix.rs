//! Dense complex square matrices sized for truncated representation work.
//!
//! The generator matrices are mostly zero, so `mul` skips zero left-hand
//! entries; storage stays dense.

use num_complex::Complex64;

use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Row-major dense complex square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Diagonal matrix from per-entry values.
    pub fn from_diagonal(diag: &[Complex64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &v) in diag.iter().enumerate() {
            m.data[i * diag.len() + i] = v;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.data[row * self.dim + col] = value;
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    fn check_dim(&self, other: &CMatrix) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &CMatrix) -> Result<CMatrix> {
        self.check_dim(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CMatrix {
            dim: self.dim,
            data,
        })
    }

    pub fn sub(&self, other: &CMatrix) -> Result<CMatrix> {
        self.check_dim(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CMatrix {
            dim: self.dim,
            data,
        })
    }

    pub fn scale(&self, factor: Complex64) -> CMatrix {
        CMatrix {
            dim: self.dim,
            data: self.data.iter().map(|a| a * factor).collect(),
        }
    }

    pub fn mul(&self, other: &CMatrix) -> Result<CMatrix> {
        self.check_dim(other)?;
        let n = self.dim;
        let mut out = vec![ZERO; n * n];
        for i in 0..n {
            let row = i * n;
            for k in 0..n {
                let a = self.data[row + k];
                if a == ZERO {
                    continue;
                }
                let brow = k * n;
                for j in 0..n {
                    out[row + j] += a * other.data[brow + j];
                }
            }
        }
        Ok(CMatrix { dim: n, data: out })
    }

    /// a b - b a
    pub fn commutator(a: &CMatrix, b: &CMatrix) -> Result<CMatrix> {
        a.mul(b)?.sub(&b.mul(a)?)
    }

    pub fn conj_transpose(&self) -> CMatrix {
        let n = self.dim;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j].conj();
            }
        }
        out
    }

    /// Max |entry| over the whole matrix.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Max |entry| over the leading block of size `block` (rows and columns).
    pub fn max_abs_leading_block(&self, block: usize) -> f64 {
        let block = block.min(self.dim);
        let mut max = 0.0f64;
        for i in 0..block {
            for j in 0..block {
                max = max.max(self.data[i * self.dim + j].norm());
            }
        }
        max
    }

    /// Self-describing text dump: a `# dim N` header, then one nonzero entry
    /// per line as `row col re im` with 17 significant digits.
    pub fn dump(&self) -> String {
        let mut out = format!("# dim {}\n", self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let z = self.data[i * self.dim + j];
                if z != ZERO {
                    out.push_str(&format!("{} {} {:.16e} {:.16e}\n", i, j, z.re, z.im));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn mul_matches_hand_product() {
        let mut a = CMatrix::zeros(2);
        a.set(0, 0, c(1.0, 1.0));
        a.set(0, 1, c(2.0, 0.0));
        a.set(1, 1, c(0.0, -1.0));
        let mut b = CMatrix::zeros(2);
        b.set(0, 0, c(0.0, 1.0));
        b.set(1, 0, c(1.0, 0.0));
        b.set(1, 1, c(3.0, 0.0));
        let p = a.mul(&b).unwrap();
        assert_eq!(p.get(0, 0), c(1.0, 1.0) * c(0.0, 1.0) + c(2.0, 0.0));
        assert_eq!(p.get(0, 1), c(6.0, 0.0));
        assert_eq!(p.get(1, 0), c(0.0, -1.0));
        assert_eq!(p.get(1, 1), c(0.0, -3.0));
    }

    #[test]
    fn identity_commutes() {
        let mut a = CMatrix::zeros(3);
        a.set(0, 2, c(1.0, 2.0));
        a.set(2, 1, c(-0.5, 0.0));
        let id = CMatrix::identity(3);
        let comm = CMatrix::commutator(&a, &id).unwrap();
        assert_eq!(comm.max_abs(), 0.0);
    }

    #[test]
    fn conj_transpose_involution() {
        let mut a = CMatrix::zeros(2);
        a.set(0, 1, c(1.0, -2.0));
        a.set(1, 0, c(3.0, 4.0));
        let back = a.conj_transpose().conj_transpose();
        assert_eq!(a, back);
    }

    #[test]
    fn dimension_mismatch_errors() {
        let a = CMatrix::zeros(2);
        let b = CMatrix::zeros(3);
        assert!(matches!(
            a.mul(&b),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn leading_block_max() {
        let mut a = CMatrix::zeros(3);
        a.set(0, 0, c(1.0, 0.0));
        a.set(2, 2, c(10.0, 0.0));
        assert_eq!(a.max_abs_leading_block(2), 1.0);
        assert_eq!(a.max_abs(), 10.0);
    }

    #[test]
    fn dump_roundtrips_entries() {
        let mut a = CMatrix::zeros(2);
        a.set(1, 0, c(0.5, -0.25));
        let text = a.dump();
        assert!(text.starts_with("# dim 2\n"));
        assert!(text.contains("1 0 5.0000000000000000e-1 -2.5000000000000000e-1"));
    }
}
