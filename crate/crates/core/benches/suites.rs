use criterion::{criterion_group, criterion_main, Criterion};
use gaussmanin::cohomology::PairTag;
use gaussmanin::numerics::{euler_cycle_integral, CycleId, QuadSpec};
use gaussmanin::par;
use gaussmanin::verify::{derive_pair, gauss_samples};
use std::hint::black_box;

fn bench_derive(c: &mut Criterion) {
    let samples = gauss_samples(3, 8);
    let jobs: Vec<_> = PairTag::ALL.iter().flat_map(|&t| samples.iter().map(move |s| (t, s.clone()))).collect();
    let work = |(tag, (a, b, c)): &(PairTag, (_, _, _))| derive_pair(*tag, a, b, c).is_ok();
    let mut g = c.benchmark_group("derive_pairs");
    g.sample_size(10);
    g.bench_function("parallel", |bch| bch.iter(|| black_box(par::map(&jobs, work))));
    g.bench_function("sequential", |bch| bch.iter(|| black_box(par::map_sequential(&jobs, work))));
    g.finish();
}

fn bench_quadrature(c: &mut Criterion) {
    let q = QuadSpec::default();
    let pts: Vec<f64> = (1..=48).map(|k| -0.95 + 1.9 * k as f64 / 49.0).collect();
    let work = |&z: &f64| euler_cycle_integral(0.3, 0.4, 0.8, z, CycleId::ZeroOne, &q).map(|r| r.value).ok();
    let mut g = c.benchmark_group("euler_grid");
    g.bench_function("parallel", |bch| bch.iter(|| black_box(par::map(&pts, work))));
    g.bench_function("sequential", |bch| bch.iter(|| black_box(par::map_sequential(&pts, work))));
    g.finish();
}

criterion_group!(benches, bench_derive, bench_quadrature);
criterion_main!(benches);
