//! Weak counter-rotating limit: closed-form λ and the modified JC model
//!
//! ```text
//! H′ = (ω + Δω σz) a⁺a + (Ω + ΔΩ) σz + (g + Δg)(σ₊a + σ₋a⁺) + ΔE
//! ```

use crate::analytic::{
    assign_rank_labels, mixing_angle_of, AnalyticLevel, Branch, Label, LevelKind,
};
use crate::error::{Error, Result};
use crate::model::{lambda_seed, ModelParams};

/// Parameter shifts of the modified JC model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModifiedJcParams {
    pub delta_omega: f64,
    pub delta_big_omega: f64,
    pub delta_g: f64,
    pub delta_e: f64,
    pub lam_weak: f64,
}

/// `λ = g′/(ω + 2Ω)`.
pub fn lambda_weak(params: &ModelParams) -> f64 {
    lambda_seed(params)
}

pub fn modified_jc(params: &ModelParams) -> ModifiedJcParams {
    let lam = lambda_weak(params);
    let g2 = params.g2();
    let (w, big) = (params.omega(), params.big_omega());
    ModifiedJcParams {
        delta_omega: 4.0 * g2 * lam,
        delta_big_omega: 2.0 * g2 * lam,
        delta_g: params.gprime() * (2.0 * big - w) / (w + 2.0 * big),
        delta_e: -2.0 * params.g1() * lam,
        lam_weak: lam,
    }
}

/// Exact spectrum of the modified JC model: `|−z, 0⟩` plus the 2×2 blocks
/// `{|+z, n−1⟩, |−z, n⟩}` for `n = 1..=n_doublets`, sorted by label.
pub fn modified_jc_spectrum(params: &ModelParams, n_doublets: usize) -> Result<Vec<AnalyticLevel>> {
    if n_doublets == 0 {
        return Err(Error::Domain("n_doublets must be at least 1".into()));
    }
    let shifts = modified_jc(params);
    let w = params.omega() + shifts.delta_omega;
    let w_down = params.omega() - shifts.delta_omega;
    let big = params.big_omega() + shifts.delta_big_omega;
    let coupling = params.g() + shifts.delta_g;
    let lam = shifts.lam_weak;

    let mut levels = Vec::with_capacity(2 * n_doublets + 1);
    levels.push(AnalyticLevel {
        kind: LevelKind::Ground,
        n: 0,
        energy: -big + shifts.delta_e,
        theta: 0.0,
        lam,
        label: Label::for_level(LevelKind::Ground, 0),
    });
    for n in 1..=n_doublets {
        let nf = n as f64;
        let h11 = w * (nf - 1.0) + big + shifts.delta_e;
        let h22 = w_down * nf - big + shifts.delta_e;
        let off = coupling * nf.sqrt();
        let mean = 0.5 * (h11 + h22);
        let half = (0.25 * (h11 - h22) * (h11 - h22) + off * off).sqrt();
        let theta = mixing_angle_of(h11, h22, off).theta;
        for (branch, energy) in [(Branch::Minus, mean - half), (Branch::Plus, mean + half)] {
            let kind = LevelKind::Doublet(branch);
            levels.push(AnalyticLevel {
                kind,
                n,
                energy,
                theta,
                lam,
                label: Label::for_level(kind, n),
            });
        }
    }
    assign_rank_labels(&mut levels);
    levels.sort_by_key(|l| l.label);
    Ok(levels)
}
