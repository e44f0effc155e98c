//! Sequential versus rayon-parallel execution of the two hot sweeps: an edge
//! profile of one graph and a theorem check over an enumerated universe.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use trd_core::criticality::edge_profile_with;
use trd_core::families::generate;
use trd_core::verify::verify_theorem_with;
use trd_core::{Exec, FamilySpec, InstanceUniverse, Solver, TheoremId};

const EXECS: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn profile(c: &mut Criterion) {
    let solver = Solver::default();
    let mut group = c.benchmark_group("edge_profile");
    for spec in ["spider(2,2,2,3)", "familyH(2,2,r=3)", "D(3)"] {
        let g = generate(&FamilySpec::parse(spec).unwrap()).unwrap();
        for (name, exec) in EXECS {
            group.bench_with_input(BenchmarkId::new(name, spec), &g, |b, g| {
                b.iter(|| edge_profile_with(&solver, exec, g).unwrap())
            });
        }
    }
    group.finish();
}

fn sweep(c: &mut Criterion) {
    let solver = Solver::default();
    let universe = InstanceUniverse::all_labeled(5, false, true);
    let mut group = c.benchmark_group("verify_sweep");
    group.sample_size(10);
    for (name, exec) in EXECS {
        group.bench_function(BenchmarkId::new(name, "T_4CRIT n<=5"), |b| {
            b.iter(|| verify_theorem_with(&solver, exec, TheoremId::FourCrit, &universe).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, profile, sweep);
criterion_main!(benches);
