//! Model parameters, the effective-Hamiltonian coefficients `G_n`, `R_n`, and
//! the root solve for the elimination parameter `λ_n`.

use crate::error::{Error, Result};
use crate::special::laguerre;

/// Physical parameters of the anisotropic Rabi model, in energy units with `ħ = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    omega: f64,
    big_omega: f64,
    g: f64,
    gprime: f64,
}

impl ModelParams {
    /// `omega`: field frequency; `big_omega`: half the atomic transition
    /// frequency; `g`: rotating coupling; `gprime`: counter-rotating coupling.
    pub fn new(omega: f64, big_omega: f64, g: f64, gprime: f64) -> Result<Self> {
        let all = [omega, big_omega, g, gprime];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "non-finite parameter in {all:?}"
            )));
        }
        if omega <= 0.0 {
            return Err(Error::InvalidParams(format!(
                "omega must be positive, got {omega}"
            )));
        }
        if big_omega < 0.0 || g < 0.0 || gprime < 0.0 {
            return Err(Error::InvalidParams(format!(
                "Omega, g and g' must be nonnegative, got ({big_omega}, {g}, {gprime})"
            )));
        }
        Ok(Self {
            omega,
            big_omega,
            g,
            gprime,
        })
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn big_omega(&self) -> f64 {
        self.big_omega
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    pub fn gprime(&self) -> f64 {
        self.gprime
    }

    /// `g₁ = (g + g′)/2`, the σx(a + a⁺) coupling.
    pub fn g1(&self) -> f64 {
        0.5 * (self.g + self.gprime)
    }

    /// `g₂ = (g′ − g)/2`, the iσy(a⁺ − a) coupling.
    pub fn g2(&self) -> f64 {
        0.5 * (self.gprime - self.g)
    }

    /// Same parameters with the counter-rotating coupling removed.
    pub fn jaynes_cummings(&self) -> Self {
        Self {
            gprime: 0.0,
            ..*self
        }
    }

    pub fn with_couplings(&self, g: f64, gprime: f64) -> Result<Self> {
        Self::new(self.omega, self.big_omega, g, gprime)
    }
}

/// Root `λ_n` of the elimination condition for doublet `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaSolution {
    pub n: usize,
    pub lam: f64,
    /// `(g₁ − λω)√n − R_n(λ)` at the returned `lam`.
    pub residual: f64,
}

/// `R_n(λ)`, the coefficient of `−iσy (|n⟩⟨n−1| − |n−1⟩⟨n|)` after the
/// transformation. Defined for `n ≥ 1`.
pub fn coeff_r(params: &ModelParams, lam: f64, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("R_n is defined for n >= 1".into()));
    }
    let y = 4.0 * lam * lam;
    let e = (-2.0 * lam * lam).exp();
    let sn = (n as f64).sqrt();
    let g2 = params.g2();
    let omega_term = 2.0 * params.big_omega / sn * lam * e * laguerre(n - 1, 1, y);
    let g2_term = -g2 * sn * e * laguerre(n - 1, 0, y);
    let g2_sq_term = 4.0 * g2 / sn * e * lam * lam * laguerre(n - 1, 2, y);
    Ok(omega_term + g2_term + g2_sq_term)
}

/// `G_n(λ)`, the diagonal σz coefficient after the transformation.
pub fn coeff_g(params: &ModelParams, lam: f64, n: usize) -> f64 {
    let y = 4.0 * lam * lam;
    let e = (-2.0 * lam * lam).exp();
    let g2 = params.g2();
    if n == 0 {
        return params.big_omega * e + 2.0 * g2 * lam * e;
    }
    params.big_omega * e * laguerre(n, 0, y)
        + 2.0 * g2 * lam * e * (laguerre(n - 1, 1, y) + laguerre(n, 1, y))
}

/// Counter-rotating coupling left between `|−z, n−1⟩` and `|+z, n⟩` after the
/// transformation: `(g₁ − λω)√n − R_n(λ)`. Its zero defines `λ_n`.
pub fn elimination_residual(params: &ModelParams, lam: f64, n: usize) -> Result<f64> {
    let r = coeff_r(params, lam, n)?;
    Ok((params.g1() - lam * params.omega) * (n as f64).sqrt() - r)
}

/// Closed-form small-λ root, `g′/(ω + 2Ω)`.
pub fn lambda_seed(params: &ModelParams) -> f64 {
    params.gprime / (params.omega + 2.0 * params.big_omega)
}

const SCAN_STEPS: usize = 256;

/// Solve `(g₁ − λω)√n = R_n(λ)` for `λ ∈ [0, 1)`.
///
/// Scans the interval on a `1/256` grid for sign changes, keeps the lowest
/// bracket and bisects it to machine precision. The lowest root is the one
/// connected to `λ = 0` at `g′ = 0`; at strong coupling further roots appear
/// above it and the weak-coupling seed can sit closer to one of those.
pub fn solve_lambda(params: &ModelParams, n: usize) -> Result<LambdaSolution> {
    if n == 0 {
        return Err(Error::Domain("lambda_n is defined for n >= 1".into()));
    }
    let f = |lam: f64| elimination_residual(params, lam, n).expect("n >= 1");

    let grid: Vec<f64> = (0..=SCAN_STEPS)
        .map(|k| k as f64 / SCAN_STEPS as f64)
        .collect();
    let values: Vec<f64> = grid.iter().map(|&x| f(x)).collect();

    // (lo, hi) bracket; lo == hi marks an exact grid zero.
    let best = (0..SCAN_STEPS).find_map(|k| {
        let (a, b) = (values[k], values[k + 1]);
        if a == 0.0 {
            Some((grid[k], grid[k]))
        } else if b != 0.0 && a.signum() != b.signum() {
            Some((grid[k], grid[k + 1]))
        } else {
            None
        }
    });
    let (mut lo, mut hi) = best.ok_or(Error::NoRootInUnitInterval { n })?;

    let mut f_lo = f(lo);
    if lo != hi {
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            let f_mid = f(mid);
            if f_mid == 0.0 {
                lo = mid;
                hi = mid;
                f_lo = 0.0;
                break;
            }
            if f_mid.signum() == f_lo.signum() {
                lo = mid;
                f_lo = f_mid;
            } else {
                hi = mid;
            }
        }
    }
    let f_hi = f(hi);
    let (lam, residual) = if f_lo.abs() <= f_hi.abs() {
        (lo, f_lo)
    } else {
        (hi, f_hi)
    };

    let tol = 1e-12 * params.g1().abs().max(1.0);
    if residual.abs() > tol {
        return Err(Error::ResidualNotMet { n, residual });
    }
    Ok(LambdaSolution { n, lam, residual })
}
