//! Closed-form observables of the analytic eigenstates: the Bloch-Siegert
//! shift of the `E₁₋ → E_G` transition, `⟨a⁺a⟩`, `⟨σz⟩`, and polariton-number
//! statistics of the ground state.

use crate::analytic::{doublet_energies, ground_energy, wavefunction_default, Branch};
use crate::error::{Error, Result};
use crate::model::ModelParams;
use crate::oracle::{expectation, Observable};
use crate::special::laguerre;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObservableSet {
    pub mean_photons: f64,
    pub sigma_z: f64,
    /// `⟨N⟩` with `N = a⁺a + σz/2 + 1/2`; ground state only.
    pub polariton_mean: Option<f64>,
    /// `(ΔN)²` from the closed-form ground-state expression.
    pub polariton_var: Option<f64>,
    /// `(ΔN)²` as the second moment evaluated on the expanded analytic
    /// ground state. Differs from [`Self::polariton_var`] at O(λ²).
    pub polariton_var_numeric: Option<f64>,
}

/// Transition `E₁₋ − E_G` of the JC model with the same `ω, Ω, g`.
pub fn jc_transition(params: &ModelParams) -> f64 {
    let detune = params.big_omega() - 0.5 * params.omega();
    0.5 * params.omega() + params.big_omega() - (detune * detune + params.g() * params.g()).sqrt()
}

/// Bloch-Siegert shift δ of the `E₁₋ → E_G` transition, everything at `λ = λ₁`.
pub fn bloch_siegert_shift(params: &ModelParams) -> Result<f64> {
    let lam = crate::model::solve_lambda(params, 1)?.lam;
    let (w, big, g) = (params.omega(), params.big_omega(), params.g());
    let (g1, g2) = (params.g1(), params.g2());
    let l2 = lam * lam;
    let e = (-2.0 * l2).exp();
    let detune = big - 0.5 * w;
    let inner = -0.5 * w + big * e * (1.0 - 2.0 * l2) + 4.0 * g2 * lam * e * (1.0 - l2);
    let coupling = g1 - w * lam;
    Ok(big * e * (1.0 + 2.0 * l2) - big
        + 4.0 * g2 * l2 * lam * e
        + (detune * detune + g * g).sqrt()
        - (inner * inner + 4.0 * coupling * coupling).sqrt())
}

/// Ground-state closed forms at a given `λ₁` (no numeric moment).
pub fn ground_observables_at(lam: f64) -> ObservableSet {
    let l2 = lam * lam;
    let e2 = (-2.0 * l2).exp();
    let e4 = (-4.0 * l2).exp();
    ObservableSet {
        mean_photons: l2,
        sigma_z: -e2,
        polariton_mean: Some(l2 - 0.5 * e2 + 0.5),
        polariton_var: Some(1.5 * l2 * e2 + 0.5 * l2 - 0.25 * e4 + 0.25),
        polariton_var_numeric: None,
    }
}

/// Ground-state observables, with the polariton variance also evaluated on
/// the expanded wavefunction.
pub fn ground_observables(params: &ModelParams) -> Result<ObservableSet> {
    let level = ground_energy(params)?;
    let mut obs = ground_observables_at(level.lam);
    let psi = wavefunction_default(&level)?;
    let n1 = expectation(&psi.amplitudes, Observable::PolaritonNumber)?;
    let n2 = expectation(&psi.amplitudes, Observable::PolaritonNumberSquared)?;
    obs.polariton_var_numeric = Some(n2 - n1 * n1);
    Ok(obs)
}

/// `⟨a⁺a⟩` and `⟨σz⟩` for doublet `n` at `(λ, θ)` in closed form.
pub fn excited_observables_at(
    n: usize,
    branch: Branch,
    lam: f64,
    theta: f64,
) -> Result<ObservableSet> {
    if n == 0 {
        return Err(Error::Domain("excited observables need n >= 1".into()));
    }
    let nf = n as f64;
    let (c, s) = (theta.cos(), theta.sin());
    let sign = match branch {
        Branch::Minus => -1.0,
        Branch::Plus => 1.0,
    };
    let mean_photons =
        nf - 0.5 + lam * lam + sign * (0.5 * (2.0 * theta).cos() + 2.0 * lam * nf.sqrt() * s * c);

    let y = 4.0 * lam * lam;
    let e = (-2.0 * lam * lam).exp();
    let lower = e * laguerre(n - 1, 0, y);
    let upper = e * laguerre(n, 0, y);
    let cross = c * s * 4.0 / nf.sqrt() * lam * e * laguerre(n - 1, 1, y);
    let sigma_z = match branch {
        Branch::Minus => c * c * lower - s * s * upper + cross,
        Branch::Plus => s * s * lower - c * c * upper - cross,
    };
    Ok(ObservableSet {
        mean_photons,
        sigma_z,
        polariton_mean: None,
        polariton_var: None,
        polariton_var_numeric: None,
    })
}

pub fn excited_observables(
    params: &ModelParams,
    n: usize,
    branch: Branch,
) -> Result<ObservableSet> {
    if n == 0 {
        return Err(Error::Domain("excited observables need n >= 1".into()));
    }
    let (minus, plus) = doublet_energies(params, n)?;
    let level = match branch {
        Branch::Minus => minus,
        Branch::Plus => plus,
    };
    excited_observables_at(n, branch, level.lam, level.theta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::{doublet_energies, wavefunction};
    use approx::assert_relative_eq;

    fn params(g: f64, gp: f64) -> ModelParams {
        ModelParams::new(1.0, 0.3, g, gp).unwrap()
    }

    #[test]
    fn bloch_siegert_vanishes_in_jc_limit() {
        for i in 0..=10 {
            assert_eq!(
                bloch_siegert_shift(&params(0.05 * i as f64, 0.0)).unwrap(),
                0.0
            );
        }
    }

    #[test]
    fn bloch_siegert_is_transition_difference() {
        for &(g, gp) in &[(0.1, 0.2), (0.3, 0.1), (0.05, 0.45), (0.5, 0.5)] {
            let p = params(g, gp);
            let eg = ground_energy(&p).unwrap().energy;
            let (e1m, _) = doublet_energies(&p, 1).unwrap();
            let expected = (e1m.energy - eg) - jc_transition(&p);
            assert!((bloch_siegert_shift(&p).unwrap() - expected).abs() <= 1e-10);
        }
    }

    #[test]
    fn ground_examples() {
        let jc = ground_observables(&params(0.3, 0.0)).unwrap();
        assert_eq!(jc.mean_photons, 0.0);
        assert_eq!(jc.sigma_z, -1.0);
        assert_eq!(jc.polariton_mean, Some(0.0));
        assert_eq!(jc.polariton_var, Some(0.0));
        assert!(jc.polariton_var_numeric.unwrap().abs() < 1e-15);

        let o = ground_observables_at(0.2);
        assert_relative_eq!(o.mean_photons, 0.04, epsilon = 1e-16);
        assert_relative_eq!(o.sigma_z, -0.923116, epsilon = 1e-6);

        let o = ground_observables_at(0.1);
        assert!((o.polariton_var.unwrap() / 0.03 - 1.0).abs() <= 0.05);
    }

    #[test]
    fn polariton_variance_marks_u1_breaking() {
        for i in 0..=5 {
            let g = 0.1 * i as f64;
            assert_eq!(
                ground_observables(&params(g, 0.0)).unwrap().polariton_var,
                Some(0.0)
            );
            for j in 1..=5 {
                let v = ground_observables(&params(g, 0.1 * j as f64)).unwrap();
                assert!(v.polariton_var.unwrap() > 0.0);
                assert!(v.polariton_var_numeric.unwrap() > 0.0);
            }
        }
    }

    #[test]
    fn numeric_variance_follows_exact_moment() {
        // For U|−z,0⟩ the photon number is Poisson(λ²) and N = n + [n odd],
        // so Var N = λ² + 2λ²e^{−2λ²} + (1 − e^{−4λ²})/4.
        for &(g, gp) in &[(0.1, 0.2), (0.3, 0.4)] {
            let o = ground_observables(&params(g, gp)).unwrap();
            let lam = o.mean_photons.sqrt();
            let l2 = lam * lam;
            let exact = l2 + 2.0 * l2 * (-2.0 * l2).exp() + 0.25 * (1.0 - (-4.0 * l2).exp());
            assert_relative_eq!(o.polariton_var_numeric.unwrap(), exact, epsilon = 1e-12);
        }
    }

    #[test]
    fn excited_examples() {
        // far detuned, Ω ≫ ω: level 1− is |−z, 1⟩
        let p = ModelParams::new(1.0, 50.0, 0.01, 0.0).unwrap();
        let o = excited_observables(&p, 1, Branch::Minus).unwrap();
        assert!((o.mean_photons - 1.0).abs() < 1e-6);
        assert!((o.sigma_z + 1.0).abs() < 1e-6);

        for &theta in &[0.0, 0.3, -0.7] {
            for n in 1..4 {
                let m = excited_observables_at(n, Branch::Minus, 0.0, theta).unwrap();
                let pl = excited_observables_at(n, Branch::Plus, 0.0, theta).unwrap();
                let c2 = (2.0 * theta).cos();
                assert_relative_eq!(m.mean_photons, n as f64 - 0.5 - 0.5 * c2, epsilon = 1e-14);
                assert_relative_eq!(pl.mean_photons, n as f64 - 0.5 + 0.5 * c2, epsilon = 1e-14);
                assert_relative_eq!(m.sigma_z, c2, epsilon = 1e-14);
                assert_relative_eq!(pl.sigma_z, -c2, epsilon = 1e-14);
            }
        }
        assert!(excited_observables(&params(0.1, 0.1), 0, Branch::Plus).is_err());
    }

    #[test]
    fn excited_closed_forms_match_wavefunction() {
        let p = params(0.1, 0.2);
        let (m, pl) = doublet_energies(&p, 1).unwrap();
        for (level, branch) in [(m, Branch::Minus), (pl, Branch::Plus)] {
            let closed = excited_observables(&p, 1, branch).unwrap();
            let psi = wavefunction(&level, 60).unwrap();
            let photons = expectation(&psi.amplitudes, Observable::PhotonNumber).unwrap();
            let sz = expectation(&psi.amplitudes, Observable::SigmaZ).unwrap();
            assert!((closed.mean_photons - photons).abs() <= 1e-8);
            assert!((closed.sigma_z - sz).abs() <= 1e-8);
        }
    }
}
