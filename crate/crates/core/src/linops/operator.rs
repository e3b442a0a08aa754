use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linops::state::StateVector;
use crate::linops::DIM_CAP;

/// Tolerance for the Hermiticity check in [`Operator::hermitian`].
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Dense complex square matrix, row-major.
///
/// Used for density operators, detection operators and the Helstrom
/// operator Λ = η₂ρ₂ − η₁ρ₁. Values are immutable after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Operator {
    dim: usize,
    entries: Vec<Complex64>,
    hermitian_flag: bool,
}

impl Operator {
    /// Builds an operator from row-major entries; no symmetry is assumed.
    pub fn new(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::contract("operator dimension must be >= 1"));
        }
        if entries.len() != dim * dim {
            return Err(Error::contract(format!(
                "operator of dim {dim} needs {} entries, got {}",
                dim * dim,
                entries.len()
            )));
        }
        Ok(Self {
            dim,
            entries,
            hermitian_flag: false,
        })
    }

    /// Builds an operator and checks max |A[i][j] − conj(A[j][i])| ≤ 1e−12.
    pub fn hermitian(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        let op = Self::new(dim, entries)?;
        let defect = op.hermiticity_defect();
        if defect > HERMITICITY_TOL {
            return Err(Error::contract(format!(
                "matrix is not Hermitian: defect {defect:.3e} exceeds {HERMITICITY_TOL:.0e}"
            )));
        }
        Ok(Self {
            hermitian_flag: true,
            ..op
        })
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![Complex64::ZERO; dim * dim],
            hermitian_flag: true,
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Complex64::ONE;
        }
        m
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let dim = values.len();
        let mut m = Self::zeros(dim);
        for (i, &v) in values.iter().enumerate() {
            m.entries[i * dim + i] = Complex64::new(v, 0.0);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    /// Whether the constructor validated Hermiticity.
    pub fn is_hermitian_flagged(&self) -> bool {
        self.hermitian_flag
    }

    /// max_{i,j} |A[i][j] − conj(A[j][i])|.
    pub fn hermiticity_defect(&self) -> f64 {
        let n = self.dim;
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                let d = (self.entries[i * n + j] - self.entries[j * n + i].conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.entries[i * self.dim + i]).sum()
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut entries = vec![Complex64::ZERO; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j].conj();
            }
        }
        Self {
            dim: n,
            entries,
            hermitian_flag: self.hermitian_flag,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "operator addition dimension mismatch");
        Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
            hermitian_flag: self.hermitian_flag && other.hermitian_flag,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1.0))
    }

    /// Multiplies every entry by a real factor (preserves Hermiticity).
    pub fn scale(&self, factor: f64) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a * factor).collect(),
            hermitian_flag: self.hermitian_flag,
        }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "matmul dimension mismatch");
        let n = self.dim;
        let mut entries = vec![Complex64::ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = self.entries[i * n + k];
                if aik == Complex64::ZERO {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += aik * other.entries[k * n + j];
                }
            }
        }
        Self {
            dim: n,
            entries,
            hermitian_flag: false,
        }
    }

    /// Applies the operator to a vector.
    pub fn apply(&self, v: &StateVector) -> StateVector {
        assert_eq!(self.dim, v.dim(), "apply dimension mismatch");
        let n = self.dim;
        let amps = v.amplitudes();
        let out: Vec<Complex64> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.entries[i * n + j] * amps[j])
                    .sum::<Complex64>()
            })
            .collect();
        StateVector::new(out).expect("dimension preserved")
    }

    /// Quadratic form ⟨v|A|v⟩.
    pub fn expectation(&self, v: &StateVector) -> Complex64 {
        v.inner(&self.apply(v))
    }

    /// Re-tags the operator as Hermitian after checking the defect.
    pub fn into_hermitian(self) -> Result<Self> {
        Self::hermitian(self.dim, self.entries)
    }

    /// max entrywise absolute difference to `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "comparison dimension mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

/// Sum of rank-1 projectors Σ |vᵢ⟩⟨vᵢ| (optionally weighted).
pub fn projector_sum(dim: usize, vectors: &[(f64, &StateVector)]) -> Operator {
    let mut entries = vec![Complex64::ZERO; dim * dim];
    for (w, v) in vectors {
        assert_eq!(v.dim(), dim, "projector vector dimension mismatch");
        let amps = v.amplitudes();
        for i in 0..dim {
            if amps[i] == Complex64::ZERO {
                continue;
            }
            let ai = amps[i] * w;
            for j in 0..dim {
                entries[i * dim + j] += ai * amps[j].conj();
            }
        }
    }
    Operator {
        dim,
        entries,
        hermitian_flag: true,
    }
}

/// Outer product |a⟩⟨a| as a Hermitian operator.
pub fn outer(v: &StateVector) -> Operator {
    projector_sum(v.dim(), &[(1.0, v)])
}

/// Tensor product A ⊗ B.
pub fn kron(a: &Operator, b: &Operator) -> Result<Operator> {
    let dim = a
        .dim
        .checked_mul(b.dim)
        .filter(|&d| d <= DIM_CAP)
        .ok_or(Error::DimensionCap {
            requested: a.dim.saturating_mul(b.dim),
            cap: DIM_CAP,
        })?;
    let (na, nb) = (a.dim, b.dim);
    let mut entries = vec![Complex64::ZERO; dim * dim];
    for ia in 0..na {
        for ja in 0..na {
            let aij = a.entries[ia * na + ja];
            if aij == Complex64::ZERO {
                continue;
            }
            for ib in 0..nb {
                for jb in 0..nb {
                    entries[(ia * nb + ib) * dim + (ja * nb + jb)] =
                        aij * b.entries[ib * nb + jb];
                }
            }
        }
    }
    Ok(Operator {
        dim,
        entries,
        hermitian_flag: a.hermitian_flag && b.hermitian_flag,
    })
}

/// Traces out the subsystems not listed in `keep`.
///
/// `dims` are the subsystem dimensions in tensor order (first factor most
/// significant); `keep` lists the subsystem indices to retain, in order.
pub fn partial_trace(a: &Operator, dims: &[usize], keep: &[usize]) -> Result<Operator> {
    let total: usize = dims.iter().product();
    if total != a.dim {
        return Err(Error::contract(format!(
            "subsystem dims {:?} multiply to {total}, operator dim is {}",
            dims, a.dim
        )));
    }
    if keep.iter().any(|&k| k >= dims.len()) {
        return Err(Error::contract("keep index out of range"));
    }
    if !keep.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::contract("keep indices must be strictly increasing"));
    }

    let traced: Vec<usize> = (0..dims.len()).filter(|i| !keep.contains(i)).collect();
    let keep_dim: usize = keep.iter().map(|&k| dims[k]).product();
    let traced_dim: usize = traced.iter().map(|&t| dims[t]).product();

    // Strides of each subsystem in the flattened basis index.
    let mut strides = vec![1usize; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * dims[i + 1];
    }

    let index_of = |subsystems: &[usize], multi: usize| -> usize {
        // Unpack a packed multi-index over `subsystems` into a full basis index.
        let mut rest = multi;
        let mut idx = 0;
        for &s in subsystems.iter().rev() {
            let d = dims[s];
            idx += (rest % d) * strides[s];
            rest /= d;
        }
        idx
    };

    let n = a.dim;
    let mut entries = vec![Complex64::ZERO; keep_dim * keep_dim];
    for row in 0..keep_dim {
        let row_base = index_of(keep, row);
        for col in 0..keep_dim {
            let col_base = index_of(keep, col);
            let mut sum = Complex64::ZERO;
            for t in 0..traced_dim {
                let offset = index_of(&traced, t);
                sum += a.entries[(row_base + offset) * n + (col_base + offset)];
            }
            entries[row * keep_dim + col] = sum;
        }
    }
    Ok(Operator {
        dim: keep_dim,
        entries,
        hermitian_flag: a.hermitian_flag,
    })
}
