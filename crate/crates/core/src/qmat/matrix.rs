use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

pub(crate) const ZERO: C64 = C64::new(0.0, 0.0);
pub(crate) const ONE: C64 = C64::new(1.0, 0.0);
pub(crate) const I: C64 = C64::new(0.0, 1.0);

/// Hermiticity tolerance used when validating inputs.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Dense square complex matrix stored row-major.
///
/// Only `N = 2` (one qubit) and `N = 4` (two qubits) are used by this crate.
/// The two-qubit basis order is `|00>, |01>, |10>, |11>`, i.e. up-up,
/// up-down, down-up, down-down.
#[derive(Clone, Copy, PartialEq)]
pub struct Matrix<const N: usize> {
    data: [[C64; N]; N],
}

pub type Mat2 = Matrix<2>;
pub type Mat4 = Matrix<4>;

impl<const N: usize> Matrix<N> {
    pub const DIM: usize = N;

    pub fn zeros() -> Self {
        Self { data: [[ZERO; N]; N] }
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            m.data[i][i] = ONE;
        }
        m
    }

    pub fn from_rows(data: [[C64; N]; N]) -> Self {
        Self { data }
    }

    pub fn from_real_rows(rows: [[f64; N]; N]) -> Self {
        let mut m = Self::zeros();
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                m.data[i][j] = C64::new(x, 0.0);
            }
        }
        m
    }

    pub fn diagonal(diag: [f64; N]) -> Self {
        let mut m = Self::zeros();
        for (i, &d) in diag.iter().enumerate() {
            m.data[i][i] = C64::new(d, 0.0);
        }
        m
    }

    /// `|v><w|`
    pub fn outer(v: &[C64; N], w: &[C64; N]) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                m.data[i][j] = v[i] * w[j].conj();
            }
        }
        m
    }

    pub fn rows(&self) -> &[[C64; N]; N] {
        &self.data
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                m.data[i][j] = self.data[j][i].conj();
            }
        }
        m
    }

    /// Entrywise complex conjugate in the standard basis.
    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn map(&self, f: impl Fn(C64) -> C64) -> Self {
        let mut m = *self;
        for row in m.data.iter_mut() {
            for z in row.iter_mut() {
                *z = f(*z);
            }
        }
        m
    }

    pub fn scale(&self, s: C64) -> Self {
        self.map(|z| z * s)
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.map(|z| z * s)
    }

    pub fn trace(&self) -> C64 {
        (0..N).map(|i| self.data[i][i]).sum()
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.data
            .iter()
            .flatten()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (*self - *other).max_abs()
    }

    /// `max |M[i][j] - conj(M[j][i])|`
    pub fn hermiticity_error(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..N {
            for j in i..N {
                worst = worst.max((self.data[i][j] - self.data[j][i].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_error() <= tol
    }

    /// `(M + M†) / 2`
    pub fn hermitian_part(&self) -> Self {
        (*self + self.adjoint()).scale_re(0.5)
    }

    pub fn mul_vec(&self, v: &[C64; N]) -> [C64; N] {
        let mut out = [ZERO; N];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..N).map(|k| self.data[i][k] * v[k]).sum();
        }
        out
    }

    pub fn column(&self, j: usize) -> [C64; N] {
        let mut out = [ZERO; N];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.data[i][j];
        }
        out
    }

    pub fn set_column(&mut self, j: usize, v: &[C64; N]) {
        for (i, &x) in v.iter().enumerate() {
            self.data[i][j] = x;
        }
    }

    /// `U M U†`
    pub fn conjugate_by(&self, u: &Self) -> Self {
        *u * *self * u.adjoint()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().flatten().all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl Mat2 {
    /// Kronecker product `self ⊗ other` in the `|00>, |01>, |10>, |11>` basis.
    pub fn kron(&self, other: &Mat2) -> Mat4 {
        let mut out = Mat4::zeros();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        out.data[2 * i + k][2 * j + l] = self.data[i][j] * other.data[k][l];
                    }
                }
            }
        }
        out
    }
}

/// Kronecker product of two single-qubit operators given as dynamically sized
/// row-major slices. Rejects anything that is not 2×2.
pub fn kron_rows(a: &[Vec<C64>], b: &[Vec<C64>]) -> Result<Mat4> {
    let to_mat2 = |m: &[Vec<C64>], name: &str| -> Result<Mat2> {
        if m.len() != 2 || m.iter().any(|r| r.len() != 2) {
            return Err(Error::InvalidArgument(format!(
                "kron operand `{name}` must be 2x2, got {} rows",
                m.len()
            )));
        }
        Ok(Mat2::from_rows([[m[0][0], m[0][1]], [m[1][0], m[1][1]]]))
    };
    Ok(to_mat2(a, "a")?.kron(&to_mat2(b, "b")?))
}

pub fn pauli_x() -> Mat2 {
    Mat2::from_rows([[ZERO, ONE], [ONE, ZERO]])
}

pub fn pauli_y() -> Mat2 {
    Mat2::from_rows([[ZERO, -I], [I, ZERO]])
}

pub fn pauli_z() -> Mat2 {
    Mat2::from_rows([[ONE, ZERO], [ZERO, -ONE]])
}

impl<const N: usize> Default for Matrix<N> {
    fn default() -> Self {
        Self::zeros()
    }
}

impl<const N: usize> Index<(usize, usize)> for Matrix<N> {
    type Output = C64;

    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i][j]
    }
}

impl<const N: usize> IndexMut<(usize, usize)> for Matrix<N> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i][j]
    }
}

impl<const N: usize> Add for Matrix<N> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for i in 0..N {
            for j in 0..N {
                self.data[i][j] += rhs.data[i][j];
            }
        }
        self
    }
}

impl<const N: usize> Sub for Matrix<N> {
    type Output = Self;

    fn sub(mut self, rhs: Self) -> Self {
        for i in 0..N {
            for j in 0..N {
                self.data[i][j] -= rhs.data[i][j];
            }
        }
        self
    }
}

impl<const N: usize> Mul for Matrix<N> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zeros();
        for i in 0..N {
            for k in 0..N {
                let a = self.data[i][k];
                if a == ZERO {
                    continue;
                }
                for j in 0..N {
                    out.data[i][j] += a * rhs.data[k][j];
                }
            }
        }
        out
    }
}

impl<const N: usize> fmt::Debug for Matrix<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix<{N}> [")?;
        for row in &self.data {
            write!(f, "  ")?;
            for z in row {
                write!(f, "{:+.6}{:+.6}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}
