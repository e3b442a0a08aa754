use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linops::operator::{projector_sum, Operator};
use crate::linops::state::StateVector;
use crate::linops::DIM_CAP;

/// Orthonormal basis of the symmetric subspace of `m` qubits.
///
/// Entry `j` (j = 0..=m) is the equal-amplitude superposition of all
/// weight-j bitstrings; amplitudes are obtained by enumerating those
/// bitstrings exactly, so each is 1/√C(m, j) with no accumulated error.
pub fn dicke_basis(m: usize) -> Result<Vec<StateVector>> {
    if m == 0 {
        return Err(Error::contract("dicke_basis requires m >= 1"));
    }
    let dim = 1usize.checked_shl(m as u32).filter(|&d| d <= DIM_CAP).ok_or(
        Error::DimensionCap {
            requested: usize::MAX,
            cap: DIM_CAP,
        },
    )?;

    let mut counts = vec![0usize; m + 1];
    for idx in 0..dim {
        counts[(idx as u64).count_ones() as usize] += 1;
    }

    let mut vectors = Vec::with_capacity(m + 1);
    for j in 0..=m {
        let amp = Complex64::new(1.0 / (counts[j] as f64).sqrt(), 0.0);
        let mut amplitudes = vec![Complex64::ZERO; dim];
        for idx in 0..dim {
            if (idx as u64).count_ones() as usize == j {
                amplitudes[idx] = amp;
            }
        }
        vectors.push(StateVector::new(amplitudes)?);
    }
    Ok(vectors)
}

/// Projector onto the symmetric subspace of `m` qubits:
/// Σ_j |u_j⟩⟨u_j|, idempotent, Hermitian, trace m + 1.
pub fn symmetric_projector(m: usize) -> Result<Operator> {
    let basis = dicke_basis(m)?;
    let dim = basis[0].dim();
    let weighted: Vec<(f64, &StateVector)> = basis.iter().map(|v| (1.0, v)).collect();
    Ok(projector_sum(dim, &weighted))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linops::eig::hermitian_eig;
    use approx::assert_abs_diff_eq;

    #[test]
    fn two_qubit_basis_matches_known_states() {
        let basis = dicke_basis(2).unwrap();
        assert_eq!(basis.len(), 3);
        // |00⟩
        assert_abs_diff_eq!(basis[0].amplitude(0).re, 1.0, epsilon = 1e-15);
        // (|01⟩ + |10⟩)/√2
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert_abs_diff_eq!(basis[1].amplitude(1).re, s, epsilon = 1e-15);
        assert_abs_diff_eq!(basis[1].amplitude(2).re, s, epsilon = 1e-15);
        // |11⟩
        assert_abs_diff_eq!(basis[2].amplitude(3).re, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn single_qubit_basis_is_computational() {
        let basis = dicke_basis(1).unwrap();
        assert_eq!(basis[0].amplitude(0).re, 1.0);
        assert_eq!(basis[1].amplitude(1).re, 1.0);
    }

    #[test]
    fn three_qubit_amplitudes_are_binomial() {
        // Combinatorial enumeration oracle: weight-j slots carry 1/√C(3,j).
        let basis = dicke_basis(3).unwrap();
        let binomials = [1usize, 3, 3, 1];
        for (j, v) in basis.iter().enumerate() {
            let nonzero: Vec<f64> = v
                .amplitudes()
                .iter()
                .filter(|a| a.norm() > 0.0)
                .map(|a| a.re)
                .collect();
            assert_eq!(nonzero.len(), binomials[j]);
            for a in nonzero {
                assert_abs_diff_eq!(a, 1.0 / (binomials[j] as f64).sqrt(), epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn basis_is_orthonormal_to_high_precision() {
        for m in 1..=12 {
            let basis = dicke_basis(m).unwrap();
            for i in 0..basis.len() {
                for j in 0..basis.len() {
                    let g = basis[i].inner(&basis[j]).norm();
                    let expected = if i == j { 1.0 } else { 0.0 };
                    assert!((g - expected).abs() <= 1e-14, "m={m} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn projector_properties() {
        for m in 1..=4 {
            let p = symmetric_projector(m).unwrap();
            assert!(p.matmul(&p).max_abs_diff(&p) <= 1e-10, "idempotent m={m}");
            assert_abs_diff_eq!(p.trace().re, (m + 1) as f64, epsilon = 1e-9);
        }
        assert!(symmetric_projector(1)
            .unwrap()
            .max_abs_diff(&Operator::identity(2))
            <= 1e-15);
    }

    #[test]
    fn two_qubit_projector_annihilates_singlet() {
        let p = symmetric_projector(2).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let singlet = StateVector::new(vec![
            Complex64::ZERO,
            Complex64::new(s, 0.0),
            Complex64::new(-s, 0.0),
            Complex64::ZERO,
        ])
        .unwrap();
        assert!(p.apply(&singlet).norm() <= 1e-14);
        // Rank 3 = number of nonzero eigenvalues.
        let eig = hermitian_eig(&p).unwrap();
        let rank = eig.eigenvalues().iter().filter(|l| **l > 0.5).count();
        assert_eq!(rank, 3);
    }
}
