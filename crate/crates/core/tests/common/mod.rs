//! Independent oracles and random-state generators shared by the
//! integration tests. Nothing here calls the eigensolver-based routes it is
//! used to check.
#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_2, TAU};

use qcorr::qmat::{eig_hermitian, partial_trace, Mat2, Mat4, Matrix, Subsystem, TwoQubitState, C64};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// `e^A` by scaling and squaring with a truncated Taylor series.
pub fn expm<const N: usize>(a: &Matrix<N>) -> Matrix<N> {
    let norm = a.norm();
    let mut squarings = 0u32;
    if norm > 0.25 {
        squarings = (norm / 0.25).log2().ceil() as u32;
    }
    let scaled = a.scale_re(1.0 / 2f64.powi(squarings as i32));
    let mut term = Matrix::<N>::identity();
    let mut sum = Matrix::<N>::identity();
    for k in 1..=30 {
        term = (term * scaled).scale_re(1.0 / k as f64);
        sum = sum + term;
        if term.max_abs() < 1e-300 {
            break;
        }
    }
    for _ in 0..squarings {
        sum = sum * sum;
    }
    sum
}

/// `e^{-H/T} / Tr e^{-H/T}` via [`expm`].
pub fn gibbs_oracle(h: &Mat4, temperature: f64) -> Mat4 {
    let e = expm(&h.scale_re(-1.0 / temperature));
    e.scale_re(1.0 / e.trace().re)
}

/// `e^{-iHt} ρ e^{iHt}` via [`expm`].
pub fn unitary_oracle(h: &Mat4, rho: &Mat4, t: f64) -> Mat4 {
    let u = expm(&h.scale(c(0.0, -t)));
    u * *rho * u.adjoint()
}

pub fn random_complex<R: Rng>(rng: &mut R) -> C64 {
    c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

pub fn random_hermitian<const N: usize, R: Rng>(rng: &mut R, scale: f64) -> Matrix<N> {
    let mut m = Matrix::<N>::zeros();
    for i in 0..N {
        for j in 0..N {
            m[(i, j)] = random_complex(rng) * scale;
        }
    }
    m.hermitian_part()
}

/// Eigenvector matrix of a random Hermitian matrix.
pub fn random_unitary<const N: usize, R: Rng>(rng: &mut R) -> Matrix<N> {
    eig_hermitian(&random_hermitian::<N, _>(rng, 1.0)).unwrap().eigenvectors
}

/// `G G† / Tr(G G†)` with optional rank deficiency.
pub fn random_state<R: Rng>(rng: &mut R) -> TwoQubitState {
    let rank = rng.gen_range(1..=4);
    let mut g = Mat4::zeros();
    for i in 0..4 {
        for j in 0..rank {
            g[(i, j)] = random_complex(rng);
        }
    }
    TwoQubitState::from_unnormalized(g * g.adjoint()).unwrap()
}

pub fn random_qubit_state<R: Rng>(rng: &mut R) -> Mat2 {
    let mut g = Mat2::zeros();
    for i in 0..2 {
        for j in 0..2 {
            g[(i, j)] = random_complex(rng);
        }
    }
    let m = g * g.adjoint();
    m.scale_re(1.0 / m.trace().re)
}

/// Random PSD X state: diagonal weights, anti-diagonal coherences inside
/// their positivity bounds.
pub fn random_x_state<R: Rng>(rng: &mut R) -> TwoQubitState {
    let w: [f64; 4] = std::array::from_fn(|_| rng.gen_range(0.0..1.0f64).powi(2));
    let total: f64 = w.iter().sum();
    let d = w.map(|x| x / total);
    let outer = (d[0] * d[3]).sqrt() * rng.gen_range(0.0..1.0);
    let inner = (d[1] * d[2]).sqrt() * rng.gen_range(0.0..1.0);
    let z14 = C64::from_polar(outer, rng.gen_range(0.0..TAU));
    let z23 = C64::from_polar(inner, rng.gen_range(0.0..TAU));
    let mut m = Mat4::diagonal(d);
    m[(0, 3)] = z14;
    m[(3, 0)] = z14.conj();
    m[(1, 2)] = z23;
    m[(2, 1)] = z23.conj();
    TwoQubitState::new(m).unwrap()
}

/// The four Bell states `Φ+, Φ-, Ψ+, Ψ-` and their correlation vectors
/// `(⟨σxσx⟩, ⟨σyσy⟩, ⟨σzσz⟩)`.
pub fn bell_basis() -> [([C64; 4], [f64; 3]); 4] {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let (o, z) = (c(s, 0.0), c(0.0, 0.0));
    [
        ([o, z, z, o], [1.0, -1.0, 1.0]),
        ([o, z, z, -o], [-1.0, 1.0, 1.0]),
        ([z, o, o, z], [1.0, 1.0, -1.0]),
        ([z, o, -o, z], [-1.0, -1.0, -1.0]),
    ]
}

pub struct BellDiagonal {
    pub weights: [f64; 4],
    pub state: TwoQubitState,
}

pub fn bell_diagonal(weights: [f64; 4]) -> BellDiagonal {
    let total: f64 = weights.iter().sum();
    let weights = weights.map(|w| w / total);
    let mut m = Mat4::zeros();
    for (w, (v, _)) in weights.iter().zip(bell_basis()) {
        m = m + Mat4::outer(&v, &v).scale_re(*w);
    }
    BellDiagonal {
        weights,
        state: TwoQubitState::from_unnormalized(m).unwrap(),
    }
}

pub fn random_bell_diagonal<R: Rng>(rng: &mut R) -> BellDiagonal {
    bell_diagonal(std::array::from_fn(|_| rng.gen_range(0.0..1.0f64).powi(3)))
}

fn xlog2x(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * x.log2()
    }
}

/// Closed-form mutual information and discord (bits) of a Bell-diagonal
/// state with the given Bell-basis weights:
/// `I = 2 + Σ λ log₂ λ`, `CC = ½[(1-c)log₂(1-c) + (1+c)log₂(1+c)]` with
/// `c = max |c_i|`, `QD = I - CC`.
pub fn bell_diagonal_discord(weights: &[f64; 4]) -> (f64, f64) {
    let mut corr = [0.0; 3];
    for (w, (_, cv)) in weights.iter().zip(bell_basis()) {
        for k in 0..3 {
            corr[k] += w * cv[k];
        }
    }
    let cmax = corr.iter().map(|x| x.abs()).fold(0.0, f64::max);
    let mi = 2.0 + weights.iter().map(|&w| xlog2x(w)).sum::<f64>();
    let cc = 0.5 * (xlog2x(1.0 - cmax) + xlog2x(1.0 + cmax));
    (mi, mi - cc)
}

fn qubit_entropy_oracle(m: &Mat2) -> f64 {
    let a = m[(0, 0)].re;
    let d = m[(1, 1)].re;
    let det = a * d - m[(0, 1)].norm_sqr();
    let tr = a + d;
    let disc = (tr * tr - 4.0 * det).max(0.0).sqrt();
    -(xlog2x(0.5 * (tr + disc)) + xlog2x(0.5 * (tr - disc)))
}

/// Brute-force `min S(ρ|{B_k})` over a `n_theta × n_phi` grid, using
/// `p_k ρ_{A|k} = Tr_B[(𝟙 ⊗ B_k) ρ]` and `ρ_{A|1} = ρ_A - ρ_{A|0}`.
pub fn dense_grid_min(rho: &TwoQubitState, n_theta: usize, n_phi: usize) -> f64 {
    let m = rho.matrix();
    let rho_a = partial_trace(m, Subsystem::A);
    let mut best = f64::INFINITY;
    for i in 0..n_theta {
        let theta = FRAC_PI_2 * i as f64 / (n_theta - 1) as f64;
        let (s, co) = theta.sin_cos();
        for j in 0..n_phi {
            let phi = TAU * j as f64 / n_phi as f64;
            // B_0 = V|0><0|V†
            let e = C64::from_polar(1.0, phi);
            let b0 = [[c(co * co, 0.0), e.conj() * (co * s)], [e * (co * s), c(s * s, 0.0)]];
            let mut sigma0 = Mat2::zeros();
            for r in 0..2 {
                for col in 0..2 {
                    let mut acc = c(0.0, 0.0);
                    for b in 0..2 {
                        for bp in 0..2 {
                            acc += m[(2 * r + b, 2 * col + bp)] * b0[bp][b];
                        }
                    }
                    sigma0[(r, col)] = acc;
                }
            }
            let sigma1 = rho_a - sigma0;
            let mut value = 0.0;
            for sigma in [sigma0, sigma1] {
                let p = sigma.trace().re;
                if p > 1e-12 {
                    value += p * qubit_entropy_oracle(&sigma.scale_re(1.0 / p));
                }
            }
            best = best.min(value);
        }
    }
    best
}

/// `ρ → SWAP ρ SWAP`
pub fn swap_qubits(rho: &TwoQubitState) -> TwoQubitState {
    let mut swap = Mat4::zeros();
    for (i, j) in [(0, 0), (1, 2), (2, 1), (3, 3)] {
        swap[(i, j)] = c(1.0, 0.0);
    }
    TwoQubitState::from_unnormalized(rho.matrix().conjugate_by(&swap)).unwrap()
}
