//! Cyclic Jacobi eigensolver for small dense Hermitian matrices.
//!
//! Each rotation zeroes one off-diagonal pair `(p, q)` with the unitary
//!
//! ```text
//! col p = ( c,            s·e^{-iα} )
//! col q = ( -s·e^{iα},    c         )
//! ```
//!
//! where `a_pq = |a_pq| e^{iα}` and `tan 2θ = 2|a_pq| / (a_pp - a_qq)`.
//! Pairs are visited in the fixed order `(0,1), (0,2), ..., (N-2,N-1)` so the
//! output is a deterministic function of the input bits.

use super::matrix::{Matrix, C64, HERMITIAN_TOL, ZERO};
use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 64;

/// Relative off-diagonal Frobenius norm at which sweeping stops.
const CONVERGED_REL: f64 = 1e-15;

/// Off-diagonal norm (relative to `max(1, ‖M‖)`) that must be reached.
const REQUIRED_REL: f64 = 1e-12;

/// Eigenvalues closer than this (relative) are treated as one cluster.
const DEGENERACY_REL: f64 = 1e-10;

/// Eigenvalues in ascending order and the matching orthonormal eigenvectors.
#[derive(Clone, Copy, Debug)]
pub struct SpectralDecomposition<const N: usize> {
    pub eigenvalues: [f64; N],
    /// Column `m` is the eigenvector for `eigenvalues[m]`.
    pub eigenvectors: Matrix<N>,
}

impl<const N: usize> SpectralDecomposition<N> {
    pub fn eigenvector(&self, m: usize) -> [C64; N] {
        self.eigenvectors.column(m)
    }

    /// `|ψ_m><ψ_m|`
    pub fn projector(&self, m: usize) -> Matrix<N> {
        let v = self.eigenvector(m);
        Matrix::outer(&v, &v)
    }

    /// `Σ_m f(E_m) |ψ_m><ψ_m|`
    pub fn apply_fn(&self, f: impl Fn(f64) -> f64) -> Matrix<N> {
        let mut d = [0.0; N];
        for (m, e) in self.eigenvalues.iter().enumerate() {
            d[m] = f(*e);
        }
        self.eigenvectors * Matrix::diagonal(d) * self.eigenvectors.adjoint()
    }

    pub fn reconstruct(&self) -> Matrix<N> {
        self.apply_fn(|e| e)
    }

    /// `max |<ψ_m|ψ_n> - δ_mn|`
    pub fn orthonormality_error(&self) -> f64 {
        let gram = self.eigenvectors.adjoint() * self.eigenvectors;
        gram.max_abs_diff(&Matrix::identity())
    }
}

/// Eigendecomposition of a Hermitian matrix.
///
/// Rejects inputs whose Hermiticity error exceeds `1e-12`. Only the upper
/// triangle's Hermitian part is effectively used.
pub fn eig_hermitian<const N: usize>(m: &Matrix<N>) -> Result<SpectralDecomposition<N>> {
    if !m.is_finite() {
        return Err(Error::InvalidArgument("matrix has non-finite entries".into()));
    }
    let herr = m.hermiticity_error();
    if herr > HERMITIAN_TOL {
        return Err(Error::InvalidArgument(format!(
            "matrix is not Hermitian (max |M - M†| = {herr:.3e})"
        )));
    }

    let mut a = *m.rows();
    for (i, row) in a.iter_mut().enumerate() {
        row[i].im = 0.0;
    }
    let mut w = *Matrix::<N>::identity().rows();
    let scale = m.norm().max(1.0);

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let off = off_diagonal_norm(&a);
        if off <= CONVERGED_REL * scale {
            converged = true;
            break;
        }
        for p in 0..N {
            for q in (p + 1)..N {
                rotate(&mut a, &mut w, p, q);
            }
        }
    }
    if !converged {
        let off = off_diagonal_norm(&a);
        if off > REQUIRED_REL * scale {
            return Err(Error::NumericFailure(format!(
                "Jacobi iteration did not converge (off-diagonal norm {off:.3e})"
            )));
        }
    }

    // stable ascending sort; ties keep the original column order
    let mut order: [usize; N] = std::array::from_fn(|i| i);
    order.sort_by(|&i, &j| a[i][i].re.total_cmp(&a[j][j].re).then(i.cmp(&j)));

    let mut eigenvalues = [0.0; N];
    let mut vectors = Matrix::<N>::zeros();
    let wm = Matrix::from_rows(w);
    for (slot, &src) in order.iter().enumerate() {
        eigenvalues[slot] = a[src][src].re;
        vectors.set_column(slot, &wm.column(src));
    }

    orthonormalize_clusters(&eigenvalues, &mut vectors, &order);
    for j in 0..N {
        let v = fix_phase(vectors.column(j));
        vectors.set_column(j, &v);
    }

    Ok(SpectralDecomposition {
        eigenvalues,
        eigenvectors: vectors,
    })
}

fn off_diagonal_norm<const N: usize>(a: &[[C64; N]; N]) -> f64 {
    let mut s = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, z) in row.iter().enumerate() {
            if i != j {
                s += z.norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn rotate<const N: usize>(a: &mut [[C64; N]; N], w: &mut [[C64; N]; N], p: usize, q: usize) {
    let b = a[p][q];
    let babs = b.norm();
    if babs == 0.0 {
        return;
    }
    let app = a[p][p].re;
    let aqq = a[q][q].re;
    let theta = 0.5 * (2.0 * babs).atan2(app - aqq);
    let (s, c) = theta.sin_cos();
    let ph = b / babs;
    let sp = ph * s;
    let spc = sp.conj();

    // A <- A V
    for row in a.iter_mut() {
        let (xp, xq) = (row[p], row[q]);
        row[p] = xp * c + xq * spc;
        row[q] = xq * c - xp * sp;
    }
    // A <- V† A
    for k in 0..N {
        let (xp, xq) = (a[p][k], a[q][k]);
        a[p][k] = xp * c + xq * sp;
        a[q][k] = xq * c - xp * spc;
    }
    a[p][q] = ZERO;
    a[q][p] = ZERO;
    a[p][p].im = 0.0;
    a[q][q].im = 0.0;
    // W <- W V
    for row in w.iter_mut() {
        let (xp, xq) = (row[p], row[q]);
        row[p] = xp * c + xq * spc;
        row[q] = xq * c - xp * sp;
    }
}

/// Modified Gram-Schmidt inside each cluster of (near-)equal eigenvalues,
/// processing vectors by their original Jacobi column index.
fn orthonormalize_clusters<const N: usize>(
    eigenvalues: &[f64; N],
    vectors: &mut Matrix<N>,
    source_index: &[usize; N],
) {
    let mut start = 0;
    while start < N {
        let mut end = start + 1;
        while end < N {
            let tol = DEGENERACY_REL * eigenvalues[start].abs().max(1.0);
            if eigenvalues[end] - eigenvalues[end - 1] > tol {
                break;
            }
            end += 1;
        }
        if end - start > 1 {
            let mut slots: Vec<usize> = (start..end).collect();
            slots.sort_by_key(|&s| source_index[s]);
            let mut done: Vec<[C64; N]> = Vec::with_capacity(slots.len());
            for &slot in &slots {
                let mut v = vectors.column(slot);
                for u in &done {
                    let overlap: C64 = (0..N).map(|k| u[k].conj() * v[k]).sum();
                    for k in 0..N {
                        v[k] -= overlap * u[k];
                    }
                }
                let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                for z in v.iter_mut() {
                    *z /= norm;
                }
                vectors.set_column(slot, &v);
                done.push(v);
            }
        }
        start = end;
    }
}

/// Rotates the global phase so the largest component (first one on ties) is
/// real and positive.
fn fix_phase<const N: usize>(mut v: [C64; N]) -> [C64; N] {
    let mut best = 0;
    let mut best_abs = 0.0;
    for (k, z) in v.iter().enumerate() {
        let a = z.norm();
        if a > best_abs * (1.0 + 1e-12) {
            best = k;
            best_abs = a;
        }
    }
    if best_abs == 0.0 {
        return v;
    }
    let phase = v[best].conj() / best_abs;
    for z in v.iter_mut() {
        *z *= phase;
    }
    v[best].im = 0.0;
    v
}
