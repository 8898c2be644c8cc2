use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use renner::nilpotent::nilpotent_analysis_with;
use renner::order::{build_poset_with, Comparator};
use renner::symplectic::{enum_family_with, Family, FamilySpec};
use renner::weyl::GroupContext;
use renner::Exec;

const STRATEGIES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enum_family");
    for (n, family) in [(6, Family::Rook), (8, Family::RennerSp), (8, Family::Borel)] {
        let spec = FamilySpec::new(n, family, None).unwrap();
        for (name, exec) in STRATEGIES {
            group.bench_with_input(
                BenchmarkId::new(name, format!("{family}-{n}")),
                &spec,
                |b, s| b.iter(|| enum_family_with(s, exec).unwrap()),
            );
        }
    }
    group.finish();
}

fn posets(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_poset");
    group.sample_size(10);
    let borel = enum_family_with(
        &FamilySpec::new(5, Family::Borel, None).unwrap(),
        Exec::Sequential,
    )
    .unwrap();
    let renner_sp = enum_family_with(
        &FamilySpec::new(4, Family::RennerSp, None).unwrap(),
        Exec::Sequential,
    )
    .unwrap();
    let wg = GroupContext::symplectic(2).unwrap();
    for (name, exec) in STRATEGIES {
        group.bench_function(BenchmarkId::new(name, "borel-5/one-line"), |b| {
            b.iter(|| build_poset_with(&borel, Comparator::OneLine, exec).unwrap())
        });
        group.bench_function(BenchmarkId::new(name, "renner-sp-4/ppr"), |b| {
            b.iter(|| build_poset_with(&renner_sp, Comparator::Ppr(&wg), exec).unwrap())
        });
    }
    group.finish();
}

fn nilpotent(c: &mut Criterion) {
    let mut group = c.benchmark_group("nilpotent_analysis");
    group.sample_size(10);
    let spec = FamilySpec::new(6, Family::BorelNil, None).unwrap();
    for (name, exec) in STRATEGIES {
        group.bench_function(BenchmarkId::new(name, "borel-nil-6"), |b| {
            b.iter(|| nilpotent_analysis_with(&spec, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, enumeration, posets, nilpotent);
criterion_main!(benches);
