use anisorabi::analytic::{doublet_block, ground_energy, lowest_levels, wavefunction_default};
use anisorabi::model::{solve_lambda, ModelParams};
use anisorabi::oracle::{
    build_effective_hamiltonian, build_hamiltonian, eigenvalues, ground_state, parity_spectrum,
    DenseSymmetricMatrix, TruncatedSpace,
};
use anisorabi::sweep::{run_spectrum_sweep, Axis, Execution, GprimeRule, Method, SweepConfig};
use anisorabi::weak::modified_jc_spectrum;
use anisorabi::{Label, Spin};
use proptest::prelude::*;

fn params(g: f64, gp: f64) -> ModelParams {
    ModelParams::new(1.0, 0.3, g, gp).unwrap()
}

#[test]
fn spectrum_invariant_under_coupling_sign_flip() {
    let space = TruncatedSpace::new(60).unwrap();
    let h = build_hamiltonian(&params(0.3, 0.45), &space);
    let mut flipped = DenseSymmetricMatrix::zeros(h.dim());
    for i in 0..h.dim() {
        for j in 0..=i {
            let v = h.get(i, j);
            flipped.set(i, j, if i == j { v } else { -v });
        }
    }
    let a = eigenvalues(&h).unwrap();
    let b = eigenvalues(&flipped).unwrap();
    for (x, y) in a.iter().zip(&b) {
        assert!((x - y).abs() <= 1e-12, "{x} vs {y}");
    }
}

#[test]
fn ground_energy_decreases_with_cutoff() {
    let p = params(0.4, 0.6);
    let mut prev = f64::INFINITY;
    for n_max in [2, 4, 8, 16, 32, 64] {
        let e = ground_state(&p, &TruncatedSpace::new(n_max).unwrap())
            .unwrap()
            .0;
        assert!(e <= prev + 1e-14, "n_max {n_max}: {e} > {prev}");
        prev = e;
    }
}

#[test]
fn effective_hamiltonian_doublet_block_matches_analytic_block() {
    // rows |+z, n−1⟩, |−z, n⟩ of the transformed Hamiltonian at λ_n are the
    // analytic 2×2 block
    let p = params(0.15, 0.25);
    let space = TruncatedSpace::new(40).unwrap();
    for n in 1..=4 {
        let lam = solve_lambda(&p, n).unwrap().lam;
        let h = build_effective_hamiltonian(&p, lam, &space);
        let b = doublet_block(&p, n).unwrap();
        let (up, dn) = (space.index(Spin::Up, n - 1), space.index(Spin::Down, n));
        assert!((h.get(up, up) - b.h11).abs() <= 1e-13);
        assert!((h.get(dn, dn) - b.h22).abs() <= 1e-13);
        assert!((h.get(up, dn) - b.off).abs() <= 1e-13);
    }
}

#[test]
fn weak_limit_tracks_full_analytic_at_small_gprime() {
    let space = TruncatedSpace::new(80).unwrap();
    for g in [0.05, 0.1, 0.2] {
        let p = params(g, 0.01);
        let spec = parity_spectrum(&p, &space).unwrap();
        let mut weak = modified_jc_spectrum(&p, 3).unwrap();
        weak.sort_by(|a, b| a.energy.total_cmp(&b.energy));
        for full in lowest_levels(&p, 5).unwrap() {
            let w = weak.iter().find(|l| l.label == full.label).unwrap();
            assert!((w.energy - full.energy).abs() <= 1e-3);
            assert!((full.energy - spec.energy(full.label).unwrap()).abs() <= 1e-3);
        }
    }
}

#[test]
fn sweep_methods_share_columns() {
    let base = SweepConfig {
        g_axis: Axis::new(0.0, 0.3, 4).unwrap(),
        gprime_rule: GprimeRule::Ratio(0.5),
        n_max: 60,
        ..Default::default()
    };
    let both = run_spectrum_sweep(&base, Execution::Sequential).unwrap();
    let analytic = run_spectrum_sweep(
        &SweepConfig {
            method: Method::Analytic,
            ..base.clone()
        },
        Execution::Sequential,
    )
    .unwrap();
    let numeric = run_spectrum_sweep(
        &SweepConfig {
            method: Method::Numeric,
            ..base.clone()
        },
        Execution::Sequential,
    )
    .unwrap();
    assert_eq!(both.values("E_analytic"), analytic.values("E_analytic"));
    assert_eq!(both.values("E_numeric"), numeric.values("E_numeric"));
    assert_eq!(both.values("label_n1"), numeric.values("label_n1"));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn analytic_ground_is_variational_upper_bound(g in 0.0f64..0.5, gp in 0.0f64..0.5) {
        let p = params(g, gp);
        let space = TruncatedSpace::new(60).unwrap();
        let level = ground_energy(&p).unwrap();
        let psi = wavefunction_default(&level).unwrap();
        let mut v = psi.amplitudes.clone();
        v.resize(space.dim(), 0.0);
        v.truncate(space.dim());
        let rq = build_hamiltonian(&p, &space).rayleigh_quotient(&v);
        let (e0, _) = ground_state(&p, &space).unwrap();
        prop_assert!(e0 <= rq + 1e-12);
    }

    #[test]
    fn oracle_labels_cover_each_sector_once(g in 0.0f64..0.5, gp in 0.0f64..0.5) {
        let spec = parity_spectrum(&params(g, gp), &TruncatedSpace::new(30).unwrap()).unwrap();
        let low = spec.lowest(12);
        for parity in [-1i8, 1] {
            let mut idx: Vec<usize> = low.iter().filter(|l| l.label.parity == parity).map(|l| l.label.index).collect();
            idx.sort();
            prop_assert_eq!(idx.clone(), (0..idx.len()).collect::<Vec<_>>());
        }
        prop_assert!(spec.energy(Label::new(1, 31)).is_none());
    }
}
