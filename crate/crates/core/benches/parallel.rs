use antypes::complex::{build, BuildOptions, Family};
use antypes::operad::{j_points, verify_graft_relations};
use antypes::rational::{frac, int};
use antypes::Exec;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn relations(c: &mut Criterion) {
    let samples = vec![int(0), frac(1, 2), int(1)];
    let mut g = c.benchmark_group("graft_relations");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, 5), &exec, |b, &exec| {
            b.iter(|| verify_graft_relations(5, &samples, exec).unwrap())
        });
    }
    g.finish();
}

fn level_points(c: &mut Criterion) {
    let samples = vec![int(0), frac(1, 3), frac(1, 2), int(1)];
    let mut g = c.benchmark_group("level_points");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, 4), &exec, |b, &exec| {
            b.iter(|| j_points(4, &samples, exec).unwrap())
        });
    }
    g.finish();
}

fn complexes(c: &mut Criterion) {
    let mut g = c.benchmark_group("complex_k8_homology");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, 8), &exec, |b, &exec| {
            b.iter(|| {
                let k = build(
                    Family::L,
                    8,
                    BuildOptions {
                        exec,
                        reverse: false,
                    },
                )
                .unwrap();
                k.homology_ranks(exec)
            })
        });
    }
    g.finish();
}

criterion_group!(benches, relations, level_points, complexes);
criterion_main!(benches);
