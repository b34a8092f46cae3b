use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use raising_core::verify::{Exec, Suite};

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweeps");
    group.sample_size(10);
    for suite in [Suite::PieriC, Suite::MirrorC, Suite::Abprop, Suite::TableauTheta] {
        let bounds = suite.default_bounds();
        for exec in [Exec::Sequential, Exec::Parallel] {
            group.bench_with_input(BenchmarkId::new(suite.name(), format!("{exec:?}")), &exec, |b, &exec| {
                b.iter(|| {
                    let report = suite.run(&bounds, exec);
                    assert!(report.passed());
                    report.cases.len()
                })
            });
        }
    }
    group.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
