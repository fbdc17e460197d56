//! Exhaustive system search, one thread against the rayon pool.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tonality::par::Execution;
use tonality::systems::{brute_force_oracle, Family};

fn modes() -> Vec<(&'static str, Execution)> {
    let mut m = vec![("sequential", Execution::Sequential)];
    if cfg!(feature = "parallel") {
        m.push(("parallel", Execution::Parallel));
    }
    m
}

fn search(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    for (family, bound) in [(Family::Just3, 8), (Family::Gauss3, 6), (Family::Shadow3, 8)] {
        for (name, exec) in modes() {
            let id = BenchmarkId::new(format!("{}/{name}", family.key()), bound);
            group.bench_with_input(id, &bound, |b, &bound| {
                b.iter(|| brute_force_oracle(black_box(family), bound, exec).expect("bound"))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, search);
criterion_main!(benches);
