//! Parameter sweeps over `(g, g′)` grids, producing CSV-ready datasets.
//!
//! Grid points are independent: each is evaluated on its own parameters and
//! truncated space, and rows come back in grid order whatever the
//! [`Execution`] mode.

mod config;
mod dataset;

pub use config::{Axis, GprimeRule, Method, SweepConfig, DEFAULT_STEPS};
pub use dataset::{Cell, Dataset};

use crate::analytic::{level_sequence, lowest_levels, AnalyticLevel, Label};
use crate::error::{Error, Result};
use crate::model::{solve_lambda, ModelParams};
use crate::observables::{bloch_siegert_shift, ground_observables, jc_transition};
use crate::oracle::{
    expectation, ground_state, parity_spectrum, Observable, ParitySpectrum, TruncatedSpace,
};

/// `λ₁` bound of the "small λ" regime reported by the λ surface.
pub const LAMBDA_REGIME: f64 = 0.5;
/// `λ₁` bound below which the Bloch-Siegert comparison is expected to hold.
pub const BLOCH_SIEGERT_REGIME: f64 = 0.6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Data-parallel over grid points. Runs sequentially when the crate is
    /// built without the `parallel` feature.
    #[default]
    Parallel,
}

impl Execution {
    fn map<T, F>(self, points: &[(f64, f64)], f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(f64, f64) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                points.par_iter().map(|&(g, gp)| f(g, gp)).collect()
            }
            _ => points.iter().map(|&(g, gp)| f(g, gp)).collect(),
        }
    }
}

struct PointOutput {
    rows: Vec<Vec<Cell>>,
    failed: bool,
}

fn header(command: &str, config: &SweepConfig) -> Vec<String> {
    vec![
        format!("anisorabi {} {command}", env!("CARGO_PKG_VERSION")),
        format!("omega = {}, big_omega = {}", config.omega, config.big_omega),
        format!("g axis: {}", config.g_axis),
        format!("gprime rule: {}", config.gprime_rule),
        format!(
            "n_levels = {}, n_max = {}, method = {}",
            config.n_levels, config.n_max, config.method
        ),
        "assumption: unless configured, g and g' axes span [0, 0.5]".into(),
    ]
}

fn collect(
    command: &str,
    config: &SweepConfig,
    points: &[(f64, f64)],
    outputs: Vec<PointOutput>,
) -> Dataset {
    let failed_points = outputs.iter().filter(|o| o.failed).count();
    let mut header = header(command, config);
    header.push(format!(
        "points = {}, points without analytic solution = {failed_points}",
        points.len()
    ));
    Dataset {
        header,
        columns: Vec::new(),
        rows: outputs.into_iter().flat_map(|o| o.rows).collect(),
        total_points: points.len(),
        failed_points,
    }
}

fn prepare(config: &SweepConfig) -> Result<(Vec<(f64, f64)>, TruncatedSpace)> {
    config.validate()?;
    Ok((config.grid(), config.space()?))
}

fn point_params(config: &SweepConfig, g: f64, gprime: f64) -> ModelParams {
    config.params(g, gprime).expect("grid points are validated")
}

fn require_axis(config: &SweepConfig, command: &str) -> Result<()> {
    match config.gprime_rule {
        GprimeRule::Axis(_) => Ok(()),
        _ => Err(Error::InvalidConfig(format!(
            "{command} needs an independent g' axis"
        ))),
    }
}

/// Rows of a level table: the lowest `n_levels` analytic levels when they
/// exist, else the lowest oracle levels, else the no-crossing labels.
fn level_labels(
    n_levels: usize,
    analytic: Option<&[AnalyticLevel]>,
    spec: Option<&ParitySpectrum>,
) -> Vec<Label> {
    let mut labels: Vec<Label> = match (analytic, spec) {
        (Some(levels), _) => levels.iter().map(|l| l.label).collect(),
        (None, Some(spec)) => spec.lowest(n_levels).iter().map(|l| l.label).collect(),
        (None, None) => level_sequence(n_levels)
            .into_iter()
            .map(|(kind, n)| Label::for_level(kind, n))
            .collect(),
    };
    labels.sort();
    labels
}

fn energy_of(levels: Option<&[AnalyticLevel]>, label: Label) -> Option<f64> {
    levels?.iter().find(|l| l.label == label).map(|l| l.energy)
}

fn diff(a: Option<f64>, b: Option<f64>) -> Option<f64> {
    Some((a? - b?).abs())
}

fn numeric_delta(params: &ModelParams, spec: &ParitySpectrum) -> Option<f64> {
    let e1 = spec.energy(Label::new(1, 0))?;
    let eg = spec.energy(Label::new(-1, 0))?;
    Some(e1 - eg - jc_transition(params))
}

/// Lowest levels along a `g` line, analytic and oracle energies matched by
/// parity label.
///
/// Labels are energy ranks within each parity sector, for the analytic
/// levels as for the oracle. Columns: `g, gprime, label_n0, label_n1, E_analytic, E_numeric,
/// abs_error, regime_ok`. A point where some needed `λ_n` has no root
/// leaves the analytic cells empty and sets `regime_ok = 0`.
pub fn run_spectrum_sweep(config: &SweepConfig, exec: Execution) -> Result<Dataset> {
    if let GprimeRule::Axis(_) = config.gprime_rule {
        return Err(Error::InvalidConfig(
            "spectrum needs a g' ratio or fixed value".into(),
        ));
    }
    let (points, space) = prepare(config)?;
    let outputs = exec.map(&points, |g, gp| {
        let p = point_params(config, g, gp);
        let spec = if config.method.numeric() {
            parity_spectrum(&p, &space).ok()
        } else {
            None
        };
        let analytic = if config.method.analytic() {
            lowest_levels(&p, config.n_levels).ok()
        } else {
            None
        };
        let failed = config.method.analytic() && analytic.is_none();
        let regime = if config.method.analytic() {
            Cell::Bool(!failed)
        } else {
            Cell::Empty
        };
        let rows = level_labels(config.n_levels, analytic.as_deref(), spec.as_ref())
            .into_iter()
            .map(|label| {
                let a = energy_of(analytic.as_deref(), label);
                let n = spec.as_ref().and_then(|s| s.energy(label));
                vec![
                    g.into(),
                    gp.into(),
                    Cell::Int(label.parity.into()),
                    Cell::Int(label.index as i64),
                    a.into(),
                    n.into(),
                    diff(a, n).into(),
                    regime,
                ]
            })
            .collect();
        PointOutput { rows, failed }
    });
    let mut d = collect("spectrum", config, &points, outputs);
    d.columns = vec![
        "g",
        "gprime",
        "label_n0",
        "label_n1",
        "E_analytic",
        "E_numeric",
        "abs_error",
        "regime_ok",
    ];
    Ok(d)
}

/// `λ₁` over the `(g, g′)` grid. Columns: `g, gprime, lambda1, residual,
/// in_regime` with `in_regime` meaning `λ₁ ≤ 0.5`.
pub fn run_lambda_surface(config: &SweepConfig, exec: Execution) -> Result<Dataset> {
    require_axis(config, "lambda-surface")?;
    let (points, _) = prepare(config)?;
    let outputs = exec.map(&points, |g, gp| {
        let sol = solve_lambda(&point_params(config, g, gp), 1).ok();
        let row = vec![
            g.into(),
            gp.into(),
            sol.map(|s| s.lam).into(),
            sol.map(|s| s.residual).into(),
            sol.is_some_and(|s| s.lam <= LAMBDA_REGIME).into(),
        ];
        PointOutput {
            rows: vec![row],
            failed: sol.is_none(),
        }
    });
    let mut d = collect("lambda-surface", config, &points, outputs);
    d.columns = vec!["g", "gprime", "lambda1", "residual", "in_regime"];
    Ok(d)
}

/// Bloch-Siegert shift of the `E₁₋ → E_G` transition. The oracle value is
/// `E(+1,0) − E(−1,0)` minus the JC transition. Columns: `g, gprime,
/// lambda1, abs_delta_analytic, abs_delta_numeric, abs_error, in_regime`
/// with `in_regime` meaning `λ₁ ≤ 0.6`.
pub fn run_bloch_siegert_surface(config: &SweepConfig, exec: Execution) -> Result<Dataset> {
    require_axis(config, "bloch-siegert")?;
    let (points, space) = prepare(config)?;
    let outputs = exec.map(&points, |g, gp| {
        let p = point_params(config, g, gp);
        let lam = solve_lambda(&p, 1).ok().map(|s| s.lam);
        let analytic = if config.method.analytic() {
            bloch_siegert_shift(&p).ok().map(f64::abs)
        } else {
            None
        };
        let numeric = if config.method.numeric() {
            parity_spectrum(&p, &space)
                .ok()
                .and_then(|s| numeric_delta(&p, &s))
                .map(f64::abs)
        } else {
            None
        };
        let row = vec![
            g.into(),
            gp.into(),
            lam.into(),
            analytic.into(),
            numeric.into(),
            diff(analytic, numeric).into(),
            lam.is_some_and(|l| l <= BLOCH_SIEGERT_REGIME).into(),
        ];
        PointOutput {
            rows: vec![row],
            failed: lam.is_none(),
        }
    });
    let mut d = collect("bloch-siegert", config, &points, outputs);
    d.columns = vec![
        "g",
        "gprime",
        "lambda1",
        "abs_delta_analytic",
        "abs_delta_numeric",
        "abs_error",
        "in_regime",
    ];
    Ok(d)
}

/// Ground-state observables: closed forms, the polariton variance on the
/// expanded analytic state, and the same quantities on the oracle ground
/// state.
pub fn run_observables(config: &SweepConfig, exec: Execution) -> Result<Dataset> {
    let (points, space) = prepare(config)?;
    let outputs = exec.map(&points, |g, gp| {
        let p = point_params(config, g, gp);
        let analytic = if config.method.analytic() {
            ground_observables(&p).ok()
        } else {
            None
        };
        let numeric = if config.method.numeric() {
            ground_state(&p, &space).ok().and_then(|(_, v)| {
                let n1 = expectation(&v, Observable::PolaritonNumber).ok()?;
                let n2 = expectation(&v, Observable::PolaritonNumberSquared).ok()?;
                Some([
                    expectation(&v, Observable::PhotonNumber).ok()?,
                    expectation(&v, Observable::SigmaZ).ok()?,
                    n1,
                    n2 - n1 * n1,
                ])
            })
        } else {
            None
        };
        let a = |f: fn(&crate::observables::ObservableSet) -> Option<f64>| {
            analytic.as_ref().and_then(f)
        };
        let nu = |k: usize| numeric.map(|v| v[k]);
        let row = vec![
            g.into(),
            gp.into(),
            a(|o| Some(o.mean_photons.sqrt())).into(),
            a(|o| Some(o.mean_photons)).into(),
            a(|o| Some(o.sigma_z)).into(),
            a(|o| o.polariton_mean).into(),
            a(|o| o.polariton_var).into(),
            a(|o| o.polariton_var_numeric).into(),
            nu(0).into(),
            nu(1).into(),
            nu(2).into(),
            nu(3).into(),
        ];
        PointOutput {
            rows: vec![row],
            failed: config.method.analytic() && analytic.is_none(),
        }
    });
    let mut d = collect("observables", config, &points, outputs);
    d.columns = vec![
        "g",
        "gprime",
        "lambda1",
        "mean_photons_G",
        "sigma_z_G",
        "polariton_mean_G",
        "polariton_var_G",
        "polariton_var_G_expanded",
        "mean_photons_G_numeric",
        "sigma_z_G_numeric",
        "polariton_mean_G_numeric",
        "polariton_var_G_numeric",
    ];
    Ok(d)
}

/// One summary row per grid point: the largest label-matched level error
/// over the lowest `n_levels` levels and the Bloch-Siegert error. Always
/// evaluates both routes.
pub fn run_compare(config: &SweepConfig, exec: Execution) -> Result<Dataset> {
    let config = SweepConfig {
        method: Method::Both,
        ..config.clone()
    };
    let (points, space) = prepare(&config)?;
    let outputs = exec.map(&points, |g, gp| {
        let p = point_params(&config, g, gp);
        let lam = solve_lambda(&p, 1).ok().map(|s| s.lam);
        let spec = parity_spectrum(&p, &space).ok();
        let analytic = lowest_levels(&p, config.n_levels).ok();
        let max_err = analytic.as_ref().and_then(|levels| {
            levels
                .iter()
                .map(|l| {
                    diff(
                        Some(l.energy),
                        spec.as_ref().and_then(|s| s.energy(l.label)),
                    )
                })
                .try_fold(0.0f64, |acc, e| Some(acc.max(e?)))
        });
        let complete = max_err.is_some();
        let delta_err = diff(
            bloch_siegert_shift(&p).ok(),
            spec.as_ref().and_then(|s| numeric_delta(&p, s)),
        );
        let row = vec![
            g.into(),
            gp.into(),
            lam.into(),
            max_err.into(),
            delta_err.into(),
            complete.into(),
        ];
        PointOutput {
            rows: vec![row],
            failed: !complete,
        }
    });
    let mut d = collect("compare", &config, &points, outputs);
    d.columns = vec![
        "g",
        "gprime",
        "lambda1",
        "max_level_error",
        "delta_error",
        "regime_ok",
    ];
    Ok(d)
}
