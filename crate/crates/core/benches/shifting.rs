use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use shiftkit::cli::random::random_complex;
use shiftkit::cli::{run_suite, Suite, SuiteConfig};
use shiftkit::linalg::realize;
use shiftkit::shift::{shift_with_matrix, CompoundStrategy};
use shiftkit::{ExecMode, MatrixSpec, PrimeField, SimplicialComplex};

fn instances(n: usize) -> Vec<SimplicialComplex> {
    let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
    (0..4).map(|_| random_complex(&mut rng, n, 4)).collect()
}

fn exec_modes(c: &mut Criterion) {
    let mut group = c.benchmark_group("shift");
    let field = PrimeField::default();
    for n in [8, 12, 14] {
        let ks = instances(n);
        let a = realize(&MatrixSpec::Generic { seed: 1 }, n, field).unwrap();
        for (name, exec) in [("sequential", ExecMode::Sequential), ("parallel", ExecMode::Parallel)] {
            group.bench_with_input(BenchmarkId::new(name, n), &ks, |b, ks| {
                b.iter(|| ks.iter().map(|k| shift_with_matrix(k, &a, CompoundStrategy::Laplace, exec)).collect::<Vec<_>>())
            });
        }
    }
    group.finish();
}

fn strategies(c: &mut Criterion) {
    let mut group = c.benchmark_group("compound");
    let field = PrimeField::default();
    let n = 10;
    let ks = instances(n);
    let a = realize(&MatrixSpec::Generic { seed: 2 }, n, field).unwrap();
    for (name, s) in [("per-entry", CompoundStrategy::PerEntry), ("laplace", CompoundStrategy::Laplace)] {
        group.bench_function(name, |b| {
            b.iter(|| ks.iter().map(|k| shift_with_matrix(k, &a, s, ExecMode::Sequential)).collect::<Vec<_>>())
        });
    }
    group.finish();
}

fn suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("suite");
    group.sample_size(10);
    for (name, exec) in [("sequential", ExecMode::Sequential), ("parallel", ExecMode::Parallel)] {
        let cfg = SuiteConfig { trials: 16, max_n: 9, seed: 3, field: PrimeField::default(), exec };
        group.bench_function(name, |b| b.iter(|| run_suite(Suite::Idempotence, &cfg).passed));
    }
    group.finish();
}

criterion_group!(benches, exec_modes, strategies, suites);
criterion_main!(benches);
