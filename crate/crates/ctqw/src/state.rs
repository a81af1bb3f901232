//! State vectors over graph vertices.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Unit-norm tolerance enforced at construction and after evolution.
pub const NORM_TOL: f64 = 1e-12;

/// Complex amplitudes over the vertices of a graph, unit norm.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm = amplitudes.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized { norm });
        }
        Ok(StateVector { amplitudes })
    }

    /// Basis state `e_j`.
    pub fn basis(dimension: usize, j: usize) -> Result<Self> {
        if j >= dimension {
            return Err(Error::VertexOutOfRange { vertex: j, vertex_count: dimension });
        }
        let mut amplitudes = vec![Complex64::ZERO; dimension];
        amplitudes[j] = Complex64::ONE;
        Ok(StateVector { amplitudes })
    }

    pub fn dimension(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|c| c.norm_sqr()).collect()
    }

    /// Same amplitudes on a larger vertex set, zero-padded.
    pub fn embedded(&self, dimension: usize) -> Result<Self> {
        if dimension < self.dimension() {
            return Err(Error::DimensionMismatch { left: self.dimension(), right: dimension });
        }
        let mut amplitudes = self.amplitudes.clone();
        amplitudes.resize(dimension, Complex64::ZERO);
        Ok(StateVector { amplitudes })
    }

    pub(crate) fn from_amplitudes_unchecked(amplitudes: Vec<Complex64>) -> Self {
        StateVector { amplitudes }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&StateRepr::from(self)).expect("state serialization")
    }

    pub fn from_json(s: &str) -> std::result::Result<Self, serde_json::Error> {
        let repr: StateRepr = serde_json::from_str(s)?;
        repr.try_into()
            .map_err(|e: Error| serde::de::Error::custom(format!("invalid state: {e}")))
    }
}

#[derive(Serialize, Deserialize)]
pub(crate) struct StateRepr {
    pub amplitudes: Vec<[f64; 2]>,
}

impl From<&StateVector> for StateRepr {
    fn from(s: &StateVector) -> Self {
        StateRepr { amplitudes: s.amplitudes.iter().map(|c| [c.re, c.im]).collect() }
    }
}

impl TryFrom<StateRepr> for StateVector {
    type Error = Error;
    fn try_from(r: StateRepr) -> Result<StateVector> {
        StateVector::new(r.amplitudes.into_iter().map(|[re, im]| Complex64::new(re, im)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_norm() {
        let ok = StateVector::new(vec![Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)]);
        assert!(ok.is_ok());
        let bad = StateVector::new(vec![Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.6)]);
        assert!(matches!(bad, Err(Error::NotNormalized { .. })));
    }

    #[test]
    fn basis_states() {
        let s = StateVector::basis(4, 2).unwrap();
        assert_eq!(s.probabilities(), vec![0.0, 0.0, 1.0, 0.0]);
        assert!(StateVector::basis(4, 4).is_err());
    }

    #[test]
    fn json_round_trip() {
        let s = StateVector::new(vec![
            Complex64::new((1.0f64 / 3.0).sqrt(), 0.0),
            Complex64::new(0.0, -(2.0f64 / 3.0).sqrt()),
        ])
        .unwrap();
        let j = s.to_json();
        assert_eq!(StateVector::from_json(&j).unwrap(), s);
    }
}
