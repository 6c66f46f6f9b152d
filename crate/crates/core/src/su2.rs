//! Spin-j angular momentum matrices and dense complex matrix utilities.
//!
//! The basis is ordered highest weight first: index `r = 0..=2j` labels the
//! eigenstate `|j, m = j - r>`. With that ordering the stereographic
//! expansion of a coherent state has ascending powers of the coordinate.

use nalgebra::{Complex, DMatrix, DVector};

use crate::error::{Error, Result};

pub type C64 = Complex<f64>;
pub type CMatrix = DMatrix<C64>;
pub type CVector = DVector<C64>;

/// Absolute per-entry tolerance for Hermiticity checks.
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Spin quantum number, stored as `2j` so half-integer spins are exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpinJ {
    two_j: u32,
}

impl SpinJ {
    pub fn from_two_j(two_j: u32) -> Self {
        Self { two_j }
    }

    pub fn two_j(self) -> u32 {
        self.two_j
    }

    /// Hilbert-space dimension `2j + 1`.
    pub fn dim(self) -> usize {
        self.two_j as usize + 1
    }

    /// The value of j as a float. Never use this for indexing.
    pub fn j(self) -> f64 {
        f64::from(self.two_j) / 2.0
    }

    /// Magnetic quantum number at basis index `r`: `m = j - r`.
    pub fn m_at(self, r: usize) -> f64 {
        self.j() - r as f64
    }

    /// Casimir eigenvalue `j(j+1)`.
    pub fn casimir(self) -> f64 {
        self.j() * (self.j() + 1.0)
    }
}

/// The spin-j irreducible representation: dense `J_x, J_y, J_z, J_+, J_-`.
#[derive(Debug, Clone)]
pub struct SpinRep {
    pub j: SpinJ,
    pub jx: CMatrix,
    pub jy: CMatrix,
    pub jz: CMatrix,
    pub jplus: CMatrix,
    pub jminus: CMatrix,
}

/// Build the spin-j representation from the standard ladder matrix elements.
pub fn make_spin_rep(j: SpinJ) -> SpinRep {
    let dim = j.dim();
    let mut jz = CMatrix::zeros(dim, dim);
    let mut jplus = CMatrix::zeros(dim, dim);

    for r in 0..dim {
        jz[(r, r)] = C64::new(j.m_at(r), 0.0);
    }
    // J+ |j, j-r> = sqrt(r (2j - r + 1)) |j, j-r+1>
    for r in 1..dim {
        let c = (r as f64 * (j.two_j() as f64 - r as f64 + 1.0)).sqrt();
        jplus[(r - 1, r)] = C64::new(c, 0.0);
    }
    let jminus = jplus.adjoint();
    let jx = (&jplus + &jminus).scale(0.5);
    let jy = (&jplus - &jminus) * C64::new(0.0, -0.5);

    SpinRep {
        j,
        jx,
        jy,
        jz,
        jplus,
        jminus,
    }
}

/// `exp(-i t h)` for Hermitian `h`, via spectral decomposition.
///
/// Exact up to rounding for any `t`, which matters for the strong kicks
/// used in chaotic regimes where a series expansion would lose digits.
pub fn unitary_exp(h: &CMatrix, t: f64) -> Result<CMatrix> {
    let dev = hermiticity_deviation(h);
    if dev > HERMITICITY_TOL {
        return Err(Error::NotHermitian {
            max_dev: dev,
            tol: HERMITICITY_TOL,
        });
    }
    let eig = h.clone().symmetric_eigen();
    let dim = h.nrows();
    let mut u = CMatrix::zeros(dim, dim);
    for (col, &lambda) in eig.eigenvalues.iter().enumerate() {
        let phase = C64::from_polar(1.0, -t * lambda);
        let v = eig.eigenvectors.column(col);
        // u += phase * v v^dagger
        for row in 0..dim {
            let a = v[row] * phase;
            for (c, vc) in v.iter().enumerate() {
                u[(row, c)] += a * vc.conj();
            }
        }
    }
    Ok(u)
}

/// `u^dagger a u`.
pub fn conjugate(u: &CMatrix, a: &CMatrix) -> Result<CMatrix> {
    if u.nrows() != a.nrows() || u.ncols() != a.ncols() || a.nrows() != a.ncols() {
        return Err(Error::DimensionMismatch {
            expected: u.nrows(),
            got: a.nrows(),
        });
    }
    Ok(u.adjoint() * a * u)
}

/// `[a, b] = ab - ba`.
pub fn commutator(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a * b - b * a
}

pub fn identity(dim: usize) -> CMatrix {
    CMatrix::identity(dim, dim)
}

/// Largest `|h - h^dagger|` entry.
pub fn hermiticity_deviation(h: &CMatrix) -> f64 {
    max_abs(&(h - h.adjoint()))
}

/// Largest entry modulus.
pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Largest `|u^dagger u - I|` entry.
pub fn unitarity_deviation(u: &CMatrix) -> f64 {
    max_abs(&(u.adjoint() * u - identity(u.nrows())))
}
