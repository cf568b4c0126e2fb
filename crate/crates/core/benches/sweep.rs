use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use cyclo_deriv::harness::{sweep, SweepConfig};
use cyclo_deriv::innerness::RingForm;

fn forms() -> Vec<RingForm> {
    vec![
        RingForm::prime_power(3, 3).unwrap(),
        RingForm::two_power_times_prime(2, 7).unwrap(),
        RingForm::prime_power(5, 2).unwrap(),
    ]
}

#[cfg(feature = "parallel")]
fn bench_sweep(c: &mut Criterion) {
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    let config = SweepConfig::default();
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for form in forms() {
        let label = form.to_string();
        group.bench_with_input(BenchmarkId::new("rayon", &label), &form, |b, f| {
            b.iter(|| sweep(f, &config).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("one-thread", &label), &form, |b, f| {
            b.iter(|| single.install(|| sweep(f, &config).unwrap()))
        });
    }
    group.finish();
}

#[cfg(not(feature = "parallel"))]
fn bench_sweep(c: &mut Criterion) {
    let config = SweepConfig::default();
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for form in forms() {
        let label = form.to_string();
        group.bench_with_input(BenchmarkId::new("sequential", &label), &form, |b, f| {
            b.iter(|| sweep(f, &config).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_sweep);
criterion_main!(benches);
