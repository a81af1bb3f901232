//! Dense complex matrices and a real-symmetric eigensolver.
//!
//! Everything here targets the tiny dimensions of this crate (N ≤ 16); the
//! kernels are straightforward triple loops and a cyclic Jacobi sweep.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::HermitianMatrix;

/// Maximum allowed ‖U†U − I‖_max for a certified unitary.
pub const UNITARY_TOL: f64 = 1e-10;

/// Square dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl Matrix {
    pub fn zeros(dim: usize) -> Self {
        Matrix { dim, data: vec![Complex64::ZERO; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Matrix::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Complex64::ONE;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { left: dim, right: row.len() });
            }
            data.extend_from_slice(row);
        }
        Ok(Matrix { dim, data })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.dim + j] = v;
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        let n = self.dim;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == Complex64::ZERO {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        Ok(out)
    }

    pub fn matvec(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: v.len() });
        }
        let n = self.dim;
        let mut out = vec![Complex64::ZERO; n];
        for i in 0..n {
            let mut acc = Complex64::ZERO;
            for j in 0..n {
                acc += self.data[i * n + j] * v[j];
            }
            out[i] = acc;
        }
        Ok(out)
    }

    pub fn dagger(&self) -> Matrix {
        let n = self.dim;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j].conj();
            }
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> Matrix {
        Matrix { dim: self.dim, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (n, m) = (self.dim, other.dim);
        let mut out = Matrix::zeros(n * m);
        for i in 0..n {
            for j in 0..n {
                let a = self.data[i * n + j];
                if a == Complex64::ZERO {
                    continue;
                }
                for k in 0..m {
                    for l in 0..m {
                        out.data[(i * m + k) * n * m + (j * m + l)] = a * other.data[k * m + l];
                    }
                }
            }
        }
        out
    }

    pub fn max_abs_diff(&self, other: &Matrix) -> Result<f64> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// ‖U†U − I‖_max.
    pub fn unitarity_defect(&self) -> f64 {
        let gram = self.dagger().mul(self).expect("same dims");
        gram.max_abs_diff(&Matrix::identity(self.dim)).expect("same dims")
    }

    /// Top-left `dim`×`dim` block.
    pub fn restricted(&self, dim: usize) -> Matrix {
        debug_assert!(dim <= self.dim);
        let mut out = Matrix::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                out.data[i * dim + j] = self.data[i * self.dim + j];
            }
        }
        out
    }

    /// Largest |entry| coupling the first `dim` coordinates to the rest,
    /// in either direction.
    pub fn block_leakage(&self, dim: usize) -> f64 {
        let n = self.dim;
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                if (i < dim) != (j < dim) {
                    worst = worst.max(self.data[i * n + j].norm());
                }
            }
        }
        worst
    }

    /// Row-major nested `[re, im]` pairs, the wire format for matrices.
    pub fn to_nested(&self) -> Vec<Vec<[f64; 2]>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| [self.get(i, j).re, self.get(i, j).im]).collect())
            .collect()
    }
}

/// A matrix whose unitarity has been certified at construction time.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitaryMatrix(Matrix);

impl UnitaryMatrix {
    pub fn try_new(m: Matrix) -> Result<Self> {
        let defect = m.unitarity_defect();
        if defect > UNITARY_TOL {
            return Err(Error::NotUnitary(defect));
        }
        Ok(UnitaryMatrix(m))
    }

    pub fn identity(dim: usize) -> Self {
        UnitaryMatrix(Matrix::identity(dim))
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    pub fn mul(&self, other: &UnitaryMatrix) -> Result<UnitaryMatrix> {
        UnitaryMatrix::try_new(self.0.mul(&other.0)?)
    }
}

impl std::ops::Deref for UnitaryMatrix {
    type Target = Matrix;
    fn deref(&self) -> &Matrix {
        &self.0
    }
}

const JACOBI_MAX_SWEEPS: usize = 64;

/// Cyclic Jacobi diagonalization of a real symmetric matrix.
///
/// Returns the eigenvalues and the orthogonal matrix of eigenvectors
/// (column k of `vectors` belongs to `values[k]`), both row-major.
pub fn symmetric_eigen(h: &HermitianMatrix) -> Result<(Vec<f64>, Vec<f64>)> {
    let n = h.dim();
    let mut a = h.as_slice().to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    if n == 1 {
        return Ok((vec![a[0]], v));
    }
    let scale: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt().max(1.0);
    for sweep in 0..=JACOBI_MAX_SWEEPS {
        let off: f64 = {
            let mut s = 0.0;
            for i in 0..n {
                for j in (i + 1)..n {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
            s.sqrt()
        };
        if off <= 1e-15 * scale {
            let values = (0..n).map(|i| a[i * n + i]).collect();
            return Ok((values, v));
        }
        if sweep == JACOBI_MAX_SWEEPS {
            break;
        }
        for p in 0..n - 1 {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() <= 1e-300 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    Err(Error::EigenFailure(JACOBI_MAX_SWEEPS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn matrix_product_and_dagger() {
        let x = Matrix::from_rows(&[
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(1.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap();
        let y = Matrix::from_rows(&[
            vec![c(0.0, 0.0), c(0.0, -1.0)],
            vec![c(0.0, 1.0), c(0.0, 0.0)],
        ])
        .unwrap();
        let xy = x.mul(&y).unwrap();
        // XY = iZ
        assert_eq!(xy.get(0, 0), c(0.0, 1.0));
        assert_eq!(xy.get(1, 1), c(0.0, -1.0));
        assert_eq!(y.dagger(), y);
        assert!(x.unitarity_defect() < 1e-16);
    }

    #[test]
    fn unitary_certificate_rejects_junk() {
        let mut m = Matrix::identity(2);
        m.set(0, 0, c(1.5, 0.0));
        assert!(matches!(UnitaryMatrix::try_new(m), Err(Error::NotUnitary(_))));
    }

    #[test]
    fn jacobi_diagonalizes_known_spectra() {
        // C4 adjacency: eigenvalues {-2, 0, 0, 2}
        let g = Graph::new(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let (mut vals, vecs) = symmetric_eigen(&g.hamiltonian()).unwrap();
        vals.sort_by(f64::total_cmp);
        let expect = [-2.0, 0.0, 0.0, 2.0];
        for (a, b) in vals.iter().zip(expect) {
            assert!((a - b).abs() < 1e-12, "{a} vs {b}");
        }
        // orthogonality of V
        let n = 4;
        for i in 0..n {
            for j in 0..n {
                let dot: f64 = (0..n).map(|k| vecs[k * n + i] * vecs[k * n + j]).sum();
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((dot - expect).abs() < 1e-12);
            }
        }
        // star on 5 vertices: {-2, 0, 0, 0, 2}
        let s = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let (mut vals, _) = symmetric_eigen(&s.hamiltonian()).unwrap();
        vals.sort_by(f64::total_cmp);
        assert!((vals[0] + 2.0).abs() < 1e-12 && (vals[4] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn restriction_and_leakage() {
        let mut m = Matrix::identity(4);
        m.set(3, 0, c(0.25, 0.0));
        assert_eq!(m.restricted(2).dim(), 2);
        assert_eq!(m.block_leakage(2), 0.25);
        assert_eq!(m.block_leakage(4), 0.0);
    }
}
