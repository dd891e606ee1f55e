use anisorabi::sweep::{
    run_bloch_siegert_surface, run_lambda_surface, run_spectrum_sweep, Axis, Execution, GprimeRule,
    SweepConfig,
};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn surface(steps: usize, n_max: usize) -> SweepConfig {
    SweepConfig {
        g_axis: Axis::new(0.0, 0.5, steps).unwrap(),
        gprime_rule: GprimeRule::Axis(Axis::new(0.0, 0.5, steps).unwrap()),
        n_max,
        ..Default::default()
    }
}

fn line(steps: usize) -> SweepConfig {
    SweepConfig {
        g_axis: Axis::new(0.0, 0.5, steps).unwrap(),
        gprime_rule: GprimeRule::Ratio(2.0),
        ..Default::default()
    }
}

fn execution_modes(c: &mut Criterion) {
    let modes = [
        ("sequential", Execution::Sequential),
        ("parallel", Execution::Parallel),
    ];

    let mut group = c.benchmark_group("bloch_siegert_11x11_nmax60");
    group.sample_size(10);
    let cfg = surface(11, 60);
    for (name, exec) in modes {
        group.bench_with_input(BenchmarkId::from_parameter(name), &cfg, |b, cfg| {
            b.iter(|| run_bloch_siegert_surface(cfg, exec).unwrap())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("spectrum_line_21_nmax120");
    group.sample_size(10);
    let cfg = line(21);
    for (name, exec) in modes {
        group.bench_with_input(BenchmarkId::from_parameter(name), &cfg, |b, cfg| {
            b.iter(|| run_spectrum_sweep(cfg, exec).unwrap())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("lambda_surface_51x51");
    let cfg = surface(51, 120);
    for (name, exec) in modes {
        group.bench_with_input(BenchmarkId::from_parameter(name), &cfg, |b, cfg| {
            b.iter(|| run_lambda_surface(cfg, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, execution_modes);
criterion_main!(benches);
