//! Two-atom state space, density matrices, observables, ideal single-qubit
//! gates, and the Bell-fidelity metric.
//!
//! Basis convention: with per-atom dimension `d`, the product state
//! `|a1 a2>` sits at index `a1 * d + a2` (row-major atom1 (x) atom2). The
//! density-matrix entry `<a1 a2| rho |b1 b2>` is therefore
//! `data[(a1*d+a2, b1*d+b2)]`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::levels::{Level, LevelScheme};

pub const HERMITICITY_TOL: f64 = 1e-10;
pub const TRACE_TOL: f64 = 1e-8;
pub const POSITIVITY_TOL: f64 = 1e-8;

/// Which atom of the pair an operation addresses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Atom {
    Control,
    Target,
}

/// Indexed two-atom tensor-product space over a level scheme.
#[derive(Debug, Clone)]
pub struct StateSpace {
    scheme: LevelScheme,
}

impl StateSpace {
    pub fn new(scheme: LevelScheme) -> Self {
        StateSpace { scheme }
    }

    pub fn scheme(&self) -> &LevelScheme {
        &self.scheme
    }

    /// Per-atom dimension.
    pub fn atom_dim(&self) -> usize {
        self.scheme.dim()
    }

    /// Full two-atom dimension.
    pub fn dim(&self) -> usize {
        let d = self.scheme.dim();
        d * d
    }

    /// Index of the product state `|a1 a2>`.
    pub fn index(&self, a1: Level, a2: Level) -> Result<usize> {
        let d = self.atom_dim();
        let i1 = self
            .scheme
            .index_of(a1)
            .ok_or_else(|| Error::argument(format!("level |{}> not in scheme", a1.label())))?;
        let i2 = self
            .scheme
            .index_of(a2)
            .ok_or_else(|| Error::argument(format!("level |{}> not in scheme", a2.label())))?;
        Ok(i1 * d + i2)
    }

    /// Basis ket `|a1 a2>`.
    pub fn ket(&self, a1: Level, a2: Level) -> Result<DVector<Complex64>> {
        let mut v = DVector::zeros(self.dim());
        v[self.index(a1, a2)?] = Complex64::new(1.0, 0.0);
        Ok(v)
    }

    /// Normalized superposition of basis kets.
    pub fn superposition(&self, terms: &[(Complex64, (Level, Level))]) -> Result<DVector<Complex64>> {
        let mut v = DVector::zeros(self.dim());
        for &(c, (a1, a2)) in terms {
            v[self.index(a1, a2)?] += c;
        }
        let norm = v.norm();
        if norm == 0.0 {
            return Err(Error::argument("superposition has zero norm"));
        }
        Ok(v / Complex64::new(norm, 0.0))
    }

    /// Single-atom projector `|l><l|` embedded on `atom`.
    pub fn projector(&self, level: Level, atom: Atom) -> Result<DMatrix<Complex64>> {
        let d = self.atom_dim();
        let i = self
            .scheme
            .index_of(level)
            .ok_or_else(|| Error::argument(format!("level |{}> not in scheme", level.label())))?;
        let mut p = DMatrix::zeros(d, d);
        p[(i, i)] = Complex64::new(1.0, 0.0);
        Ok(self.embed(&p, atom))
    }

    /// Embeds a single-atom operator as `op (x) I` or `I (x) op`.
    pub fn embed(&self, op: &DMatrix<Complex64>, atom: Atom) -> DMatrix<Complex64> {
        let d = self.atom_dim();
        let eye = DMatrix::identity(d, d);
        match atom {
            Atom::Control => op.kronecker(&eye),
            Atom::Target => eye.kronecker(op),
        }
    }

    /// The Hadamard unitary on the `{|0>, |1>}` subspace of one atom,
    /// identity on every other level, embedded in the two-atom space.
    pub fn hadamard(&self, atom: Atom) -> DMatrix<Complex64> {
        let d = self.atom_dim();
        let i0 = self.scheme.index_of(Level::Q0).expect("qubit level present");
        let i1 = self.scheme.index_of(Level::Q1).expect("qubit level present");
        let mut h = DMatrix::identity(d, d);
        let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        h[(i0, i0)] = s;
        h[(i0, i1)] = s;
        h[(i1, i0)] = s;
        h[(i1, i1)] = -s;
        self.embed(&h, atom)
    }
}

/// Two-atom density matrix over the tensor-product basis.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    atom_dim: usize,
    data: DMatrix<Complex64>,
}

impl DensityMatrix {
    /// Wraps a raw matrix; dimensions must be a perfect square of the
    /// per-atom dimension.
    pub fn from_matrix(atom_dim: usize, data: DMatrix<Complex64>) -> Result<Self> {
        let n = atom_dim * atom_dim;
        if data.nrows() != n || data.ncols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: data.nrows(),
            });
        }
        Ok(DensityMatrix { atom_dim, data })
    }

    /// `|psi><psi|` for a normalized pure state.
    pub fn from_pure(space: &StateSpace, psi: &DVector<Complex64>) -> Result<Self> {
        if psi.len() != space.dim() {
            return Err(Error::DimensionMismatch {
                expected: space.dim(),
                got: psi.len(),
            });
        }
        let data = psi * psi.adjoint();
        Ok(DensityMatrix {
            atom_dim: space.atom_dim(),
            data,
        })
    }

    /// Product basis state `|a1 a2><a1 a2|`.
    pub fn basis_state(space: &StateSpace, a1: Level, a2: Level) -> Result<Self> {
        let ket = space.ket(a1, a2)?;
        Self::from_pure(space, &ket)
    }

    pub fn atom_dim(&self) -> usize {
        self.atom_dim
    }

    pub fn dim(&self) -> usize {
        self.atom_dim * self.atom_dim
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.data
    }

    pub fn matrix_mut(&mut self) -> &mut DMatrix<Complex64> {
        &mut self.data
    }

    /// Entry `<a1 a2| rho |b1 b2>`.
    pub fn entry(
        &self,
        space: &StateSpace,
        bra: (Level, Level),
        ket: (Level, Level),
    ) -> Result<Complex64> {
        let r = space.index(bra.0, bra.1)?;
        let c = space.index(ket.0, ket.1)?;
        Ok(self.data[(r, c)])
    }

    /// Population of the product state `|a1 a2>`.
    pub fn population(&self, space: &StateSpace, a1: Level, a2: Level) -> Result<f64> {
        Ok(self.entry(space, (a1, a2), (a1, a2))?.re)
    }

    pub fn trace(&self) -> Complex64 {
        self.data.diagonal().sum()
    }

    /// Tr rho^2.
    pub fn purity(&self) -> f64 {
        // Tr[rho rho] = sum_ij rho_ij rho_ji = sum_ij |rho_ij|^2 for Hermitian rho.
        self.data.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Largest entrywise deviation from Hermiticity.
    pub fn hermiticity_error(&self) -> f64 {
        let n = self.data.nrows();
        let mut worst: f64 = 0.0;
        for r in 0..n {
            for c in r..n {
                let diff = (self.data[(r, c)] - self.data[(c, r)].conj()).norm();
                worst = worst.max(diff);
            }
        }
        worst
    }

    /// Smallest eigenvalue of the Hermitian part.
    pub fn min_eigenvalue(&self) -> f64 {
        let herm = (&self.data + self.data.adjoint()) * Complex64::new(0.5, 0.0);
        let eig = herm.symmetric_eigen();
        eig.eigenvalues.iter().fold(f64::INFINITY, |a, &b| a.min(b))
    }

    /// Checks the Hermiticity / unit-trace / positivity invariants.
    pub fn validate(&self) -> Result<()> {
        let h = self.hermiticity_error();
        if h > HERMITICITY_TOL {
            return Err(Error::argument(format!(
                "density matrix not Hermitian: max deviation {h:.3e}"
            )));
        }
        let t = (self.trace() - Complex64::new(1.0, 0.0)).norm();
        if t > TRACE_TOL {
            return Err(Error::argument(format!(
                "density matrix trace deviates from one by {t:.3e}"
            )));
        }
        let lam = self.min_eigenvalue();
        if lam < -POSITIVITY_TOL {
            return Err(Error::argument(format!(
                "density matrix has negative eigenvalue {lam:.3e}"
            )));
        }
        Ok(())
    }

    /// Unitary conjugation `U rho U^dagger`.
    pub fn conjugated_by(&self, u: &DMatrix<Complex64>) -> Result<Self> {
        if u.nrows() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: u.nrows(),
            });
        }
        Ok(DensityMatrix {
            atom_dim: self.atom_dim,
            data: u * &self.data * u.adjoint(),
        })
    }
}

/// Labeled Hermitian observable on the two-atom space.
#[derive(Debug, Clone)]
pub struct Observable {
    label: String,
    matrix: DMatrix<Complex64>,
}

impl Observable {
    pub fn new(label: impl Into<String>, matrix: DMatrix<Complex64>) -> Result<Self> {
        let n = matrix.nrows();
        if matrix.ncols() != n {
            return Err(Error::argument("observable matrix must be square"));
        }
        for r in 0..n {
            for c in r..n {
                if (matrix[(r, c)] - matrix[(c, r)].conj()).norm() > 1e-12 {
                    return Err(Error::argument("observable matrix is not Hermitian"));
                }
            }
        }
        Ok(Observable {
            label: label.into(),
            matrix,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    /// Projector onto the product state `|a1 a2>`, labeled `P_{a1}{a2}`.
    pub fn population(space: &StateSpace, a1: Level, a2: Level) -> Result<Self> {
        let ket = space.ket(a1, a2)?;
        let m = &ket * ket.adjoint();
        Self::new(format!("P_{}{}", a1.label(), a2.label()), m)
    }

    /// Projector onto the symmetric single-excitation state
    /// `(|1 l> + |l 1>)/sqrt(2)`.
    pub fn symmetric_projector(space: &StateSpace, level: Level) -> Result<Self> {
        let c = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let ket = space.superposition(&[(c, (Level::Q1, level)), (c, (level, Level::Q1))])?;
        let m = &ket * ket.adjoint();
        Self::new(format!("P_sym_1{}", level.label()), m)
    }

    /// Number operator counting atoms in `level`: `P_l (x) I + I (x) P_l`.
    pub fn level_number(space: &StateSpace, level: Level) -> Result<Self> {
        let m = space.projector(level, Atom::Control)? + space.projector(level, Atom::Target)?;
        Self::new(format!("N_{}", level.label()), m)
    }

    /// Leakage into `|d>`: identity minus the projector onto states with
    /// neither atom in `|d>`, i.e. `1 - Tr_{non-d}[rho]` as an expectation.
    pub fn d_leak(space: &StateSpace) -> Result<Self> {
        let d = space.atom_dim();
        let n = space.dim();
        let id = space
            .scheme()
            .index_of(Level::D)
            .ok_or_else(|| Error::argument("scheme has no |d> level"))?;
        let mut m = DMatrix::identity(n, n);
        for a1 in 0..d {
            for a2 in 0..d {
                if a1 != id && a2 != id {
                    m[(a1 * d + a2, a1 * d + a2)] = Complex64::new(0.0, 0.0);
                }
            }
        }
        Self::new("leak_d", m)
    }
}

/// `Tr[obs . rho]`; real for Hermitian observables.
pub fn expectation(rho: &DensityMatrix, obs: &Observable) -> Result<f64> {
    if obs.matrix.nrows() != rho.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            got: obs.matrix.nrows(),
        });
    }
    // Tr[O rho] = sum_ij O_ij rho_ji
    let n = rho.dim();
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..n {
        for j in 0..n {
            acc += obs.matrix[(i, j)] * rho.data[(j, i)];
        }
    }
    Ok(acc.re)
}

/// Applies a perfect Hadamard on the qubit subspace of one atom.
pub fn apply_hadamard(space: &StateSpace, rho: &DensityMatrix, atom: Atom) -> Result<DensityMatrix> {
    let u = space.hadamard(atom);
    rho.conjugated_by(&u)
}

/// Bell fidelity against the maximally entangled combination of two distinct
/// two-qubit basis states:
///
/// `F = (<uv|rho|uv> + <xy|rho|xy>)/2 + |<uv|rho|xy>|`
///
/// This is the single place that maps the four-index population/coherence
/// convention onto matrix entries: the coherence term is the off-diagonal
/// element between the two target basis states.
pub fn bell_fidelity(
    space: &StateSpace,
    rho: &DensityMatrix,
    pair: ((Level, Level), (Level, Level)),
) -> Result<f64> {
    let (uv, xy) = pair;
    if uv == xy {
        return Err(Error::argument(
            "bell fidelity needs two distinct basis states",
        ));
    }
    let p_uv = rho.population(space, uv.0, uv.1)?;
    let p_xy = rho.population(space, xy.0, xy.1)?;
    let coh = rho.entry(space, uv, xy)?;
    Ok((p_uv + p_xy) / 2.0 + coh.norm())
}
