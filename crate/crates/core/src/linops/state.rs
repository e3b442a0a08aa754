use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linops::DIM_CAP;

/// Tolerance for the unit-norm check on normalized states.
pub const NORM_TOL: f64 = 1e-12;

/// Dense complex vector in a finite-dimensional Hilbert space.
///
/// Basis ordering is big-endian with respect to tensor factors: for a
/// product of qubits the first factor is the most significant bit of the
/// basis index, matching [`StateVector::kron`].
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    dim: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// Builds a vector from raw amplitudes without a normalization check.
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::contract("state vector must have dim >= 1"));
        }
        Ok(Self {
            dim: amplitudes.len(),
            amplitudes,
        })
    }

    /// Builds a vector and checks it is unit norm to `NORM_TOL`.
    pub fn unit(amplitudes: Vec<Complex64>) -> Result<Self> {
        let v = Self::new(amplitudes)?;
        let n = v.norm();
        if (n - 1.0).abs() > NORM_TOL {
            return Err(Error::contract(format!(
                "state vector norm {n} is not 1 within {NORM_TOL}"
            )));
        }
        Ok(v)
    }

    /// Computational basis state |index⟩ in `dim` dimensions.
    pub fn basis(dim: usize, index: usize) -> Self {
        assert!(index < dim, "basis index out of range");
        let mut amplitudes = vec![Complex64::ZERO; dim];
        amplitudes[index] = Complex64::ONE;
        Self { dim, amplitudes }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, i: usize) -> Complex64 {
        self.amplitudes[i]
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Inner product ⟨self|other⟩ (conjugate-linear in `self`).
    pub fn inner(&self, other: &Self) -> Complex64 {
        assert_eq!(self.dim, other.dim, "inner product dimension mismatch");
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Tensor product |self⟩ ⊗ |other⟩.
    pub fn kron(&self, other: &Self) -> Result<Self> {
        let dim = self
            .dim
            .checked_mul(other.dim)
            .filter(|&d| d <= DIM_CAP)
            .ok_or(Error::DimensionCap {
                requested: self.dim.saturating_mul(other.dim),
                cap: DIM_CAP,
            })?;
        let mut amplitudes = Vec::with_capacity(dim);
        for a in &self.amplitudes {
            for b in &other.amplitudes {
                amplitudes.push(a * b);
            }
        }
        Ok(Self { dim, amplitudes })
    }

    /// Tensor power |self⟩^{⊗count}; `count = 0` yields the scalar 1.
    pub fn kron_pow(&self, count: usize) -> Result<Self> {
        let mut out = Self::new(vec![Complex64::ONE])?;
        for _ in 0..count {
            out = out.kron(self)?;
        }
        Ok(out)
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            dim: self.dim,
            amplitudes: self.amplitudes.iter().map(|a| a * factor).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "addition dimension mismatch");
        Self {
            dim: self.dim,
            amplitudes: self
                .amplitudes
                .iter()
                .zip(&other.amplitudes)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Rescales to unit norm.
    pub fn normalized(&self) -> Self {
        let n = self.norm();
        assert!(n > 0.0, "cannot normalize the zero vector");
        self.scale(Complex64::new(1.0 / n, 0.0))
    }
}

/// Single-qubit state cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩.
pub fn bloch_state(theta: f64, phi: f64) -> StateVector {
    let half = 0.5 * theta;
    let amplitudes = vec![
        Complex64::new(half.cos(), 0.0),
        Complex64::from_polar(half.sin(), phi),
    ];
    StateVector {
        dim: 2,
        amplitudes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn bloch_poles() {
        let zero = bloch_state(0.0, 1.234);
        assert_abs_diff_eq!(zero.amplitude(0).re, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(zero.amplitude(1).norm(), 0.0, epsilon = 1e-15);

        let one = bloch_state(PI, 0.0);
        assert_abs_diff_eq!(one.amplitude(0).re, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(one.amplitude(1).re, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn bloch_equator_with_phase() {
        // (|0⟩ + i|1⟩)/√2, from direct evaluation of the parametrization.
        let v = bloch_state(FRAC_PI_2, FRAC_PI_2);
        let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
        assert_abs_diff_eq!(v.amplitude(0).re, inv_sqrt2, epsilon = 1e-15);
        assert_abs_diff_eq!(v.amplitude(1).im, inv_sqrt2, epsilon = 1e-15);
        assert_abs_diff_eq!(v.amplitude(1).re, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(v.norm(), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn unit_rejects_unnormalized() {
        let bad = StateVector::unit(vec![Complex64::new(0.5, 0.0)]);
        assert!(bad.is_err());
    }

    #[test]
    fn kron_ordering_is_big_endian() {
        let zero = StateVector::basis(2, 0);
        let one = StateVector::basis(2, 1);
        let z_o = zero.kron(&one).unwrap();
        // |0⟩⊗|1⟩ = |01⟩ = index 1
        assert_eq!(z_o.amplitude(1), Complex64::ONE);
        assert_eq!(z_o.amplitude(2), Complex64::ZERO);
    }
}
