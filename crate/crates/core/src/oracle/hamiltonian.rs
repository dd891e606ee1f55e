use super::matrix::DenseSymmetricMatrix;
use super::TruncatedSpace;
use crate::analytic::Spin;
use crate::model::{coeff_g, coeff_r, ModelParams};

/// The anisotropic Rabi Hamiltonian in the truncated basis.
///
/// `⟨+z, n−1|H|−z, n⟩ = g√n` (rotating), `⟨−z, n−1|H|+z, n⟩ = g′√n`
/// (counter-rotating), diagonal `nω ± Ω`.
pub fn build_hamiltonian(params: &ModelParams, space: &TruncatedSpace) -> DenseSymmetricMatrix {
    let mut h = DenseSymmetricMatrix::zeros(space.dim());
    let (w, big) = (params.omega(), params.big_omega());
    for n in 0..=space.n_max() {
        let nf = n as f64;
        h.set(
            space.index(Spin::Up, n),
            space.index(Spin::Up, n),
            nf * w + big,
        );
        h.set(
            space.index(Spin::Down, n),
            space.index(Spin::Down, n),
            nf * w - big,
        );
        if n >= 1 {
            let s = nf.sqrt();
            h.set(
                space.index(Spin::Up, n - 1),
                space.index(Spin::Down, n),
                params.g() * s,
            );
            h.set(
                space.index(Spin::Down, n - 1),
                space.index(Spin::Up, n),
                params.gprime() * s,
            );
        }
    }
    h
}

/// The transformed Hamiltonian after keeping only near-diagonal Fock
/// elements, at a fixed `lam`:
///
/// * diagonal `nω ± G_n + ωλ² − 2g₁λ`,
/// * `|+z, n−1⟩ ↔ |−z, n⟩`: `(g₁ − λω)√n + R_n`,
/// * `|−z, n−1⟩ ↔ |+z, n⟩`: `(g₁ − λω)√n − R_n`.
pub fn build_effective_hamiltonian(
    params: &ModelParams,
    lam: f64,
    space: &TruncatedSpace,
) -> DenseSymmetricMatrix {
    let mut h = DenseSymmetricMatrix::zeros(space.dim());
    let w = params.omega();
    let shift = w * lam * lam - 2.0 * params.g1() * lam;
    let bare = params.g1() - lam * w;
    for n in 0..=space.n_max() {
        let nf = n as f64;
        let gn = coeff_g(params, lam, n);
        h.set(
            space.index(Spin::Up, n),
            space.index(Spin::Up, n),
            nf * w + gn + shift,
        );
        h.set(
            space.index(Spin::Down, n),
            space.index(Spin::Down, n),
            nf * w - gn + shift,
        );
        if n >= 1 {
            let rn = coeff_r(params, lam, n).expect("n >= 1");
            let s = nf.sqrt();
            h.set(
                space.index(Spin::Up, n - 1),
                space.index(Spin::Down, n),
                bare * s + rn,
            );
            h.set(
                space.index(Spin::Down, n - 1),
                space.index(Spin::Up, n),
                bare * s - rn,
            );
        }
    }
    h
}

/// `P = σz e^{iπa⁺a}`, diagonal with entries `s (−1)^n`.
pub fn parity_matrix(space: &TruncatedSpace) -> DenseSymmetricMatrix {
    let mut p = DenseSymmetricMatrix::zeros(space.dim());
    for i in 0..space.dim() {
        p.set(i, i, f64::from(space.parity_of(i)));
    }
    p
}
