use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rainbow_order::flip::verify_thm1_with;
use rainbow_order::harness::{implication_test_with, tw_randomized_trials};
use rainbow_order::tree::FamilySpec;
use rainbow_order::Execution;

fn modes() -> Vec<(&'static str, Execution)> {
    let mut modes = vec![("sequential", Execution::Sequential)];
    if Execution::parallel_available() {
        modes.push(("parallel", Execution::Parallel));
    }
    modes
}

fn flip_table(c: &mut Criterion) {
    let mut group = c.benchmark_group("flip_table");
    group.sample_size(10);
    for n in [9, 10] {
        for (name, exec) in modes() {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| verify_thm1_with(n, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn implication(c: &mut Criterion) {
    let forced = FamilySpec::spider(&[1, 1, 3]).build().unwrap();
    let premise = FamilySpec::double_star(2, 2).build().unwrap();
    let mut group = c.benchmark_group("implication_trials");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_function(name, |b| {
            b.iter(|| implication_test_with(&forced, &premise, 12, 26, 64, 0, exec).unwrap())
        });
    }
    group.finish();
}

fn four_color_trials(c: &mut Criterion) {
    let mut group = c.benchmark_group("four_color_trials");
    for (name, exec) in modes() {
        group.bench_function(name, |b| {
            b.iter(|| tw_randomized_trials(10, 256, 0, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, flip_table, implication, four_color_trials);
criterion_main!(benches);
