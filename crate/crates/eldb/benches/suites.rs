//! Compares the data-parallel fan-out against the sequential baseline on
//! the sweep suites and a reduction-verification batch. With
//! `--no-default-features` both sides run sequentially.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};

use eldb::reduction::{self, CnfFormula, Lit};
use eldb::solver;
use eldb::sweep::{run_suite, run_suite_sequential, Suite};
use eldb::{generate, parallel, Family};

fn sweep_suites(c: &mut Criterion) {
    for suite in [Suite::Cycles, Suite::Stars, Suite::Strong] {
        let mut group = c.benchmark_group(format!("sweep-{suite}"));
        group.sample_size(10);
        group.bench_function("parallel", |b| b.iter(|| run_suite(suite)));
        group.bench_function("sequential", |b| b.iter(|| run_suite_sequential(suite)));
        group.finish();
    }
}

fn reduction_batch(c: &mut Criterion) {
    // A fixed batch of three-variable instances with mixed satisfiability.
    let mut instances = Vec::new();
    for signs in 0..8u8 {
        let clause = [
            Lit {
                var: 1,
                negated: signs & 1 != 0,
            },
            Lit {
                var: 2,
                negated: signs & 2 != 0,
            },
            Lit {
                var: 3,
                negated: signs & 4 != 0,
            },
        ];
        instances.push(CnfFormula::new(3, vec![clause]).unwrap());
        let flipped = [
            Lit {
                var: 1,
                negated: signs & 1 == 0,
            },
            Lit {
                var: 2,
                negated: signs & 2 == 0,
            },
            Lit {
                var: 3,
                negated: signs & 4 == 0,
            },
        ];
        instances.push(CnfFormula::new(3, vec![clause, flipped]).unwrap());
    }

    let mut group = c.benchmark_group("verify-reduction-batch");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter_batched(
            || instances.clone(),
            |batch| reduction::verify_many(batch, 2).unwrap(),
            BatchSize::SmallInput,
        )
    });
    group.bench_function("sequential", |b| {
        b.iter_batched(
            || instances.clone(),
            |batch| {
                parallel::map_collect_seq(batch, |cnf| reduction::verify_reduction(&cnf, 2))
                    .into_iter()
                    .collect::<Result<Vec<_>, _>>()
                    .unwrap()
            },
            BatchSize::SmallInput,
        )
    });
    group.finish();
}

fn solver_single(c: &mut Criterion) {
    let c17 = generate(Family::Cycle, 17).unwrap();
    let t4 = eldb::build_tk(4).unwrap();
    let mut group = c.benchmark_group("solver");
    group.bench_function("mcr-C17", |b| b.iter(|| solver::mcr(&c17).unwrap()));
    group.bench_function("gamma-T4-k4", |b| {
        b.iter(|| solver::gamma_ebk(&t4, 4).unwrap())
    });
    group.finish();
}

criterion_group!(benches, sweep_suites, reduction_batch, solver_single);
criterion_main!(benches);
