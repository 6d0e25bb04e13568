use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use jacklr_core::exactalg::rat;
use jacklr_core::jack::JackCtx;
use jacklr_core::rules::{evaluate_d20, evaluate_h4, six_param_instance};
use jacklr_core::shapes::Partition;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn bench_jack(c: &mut Criterion) {
    let mut group = c.benchmark_group("jack_expansion");
    group.bench_function("symbolic deg8 (4,2,1,1)", |b| {
        b.iter_batched(
            JackCtx::symbolic,
            |ctx| ctx.jack_m(&p("4,2,1,1")).unwrap(),
            BatchSize::SmallInput,
        )
    });
    group.bench_function("fixed a=2 deg12 (5,4,2,1)", |b| {
        b.iter_batched(
            || JackCtx::fixed(rat(2, 1)),
            |ctx| ctx.jack_m(&p("5,4,2,1")).unwrap(),
            BatchSize::SmallInput,
        )
    });
    group.finish();
}

fn bench_lr(c: &mut Criterion) {
    let mut group = c.benchmark_group("lr_g");
    group.bench_function("symbolic hanlon", |b| {
        b.iter_batched(
            JackCtx::symbolic,
            |ctx| ctx.lr_g(&p("3,1"), &p("2,1"), &p("4,2,1")).unwrap(),
            BatchSize::SmallInput,
        )
    });
    group.bench_function("fixed a=2 deg14", |b| {
        b.iter_batched(
            || JackCtx::fixed(rat(2, 1)),
            |ctx| {
                ctx.lr_g(&p("5,3,3,1"), &p("2,1"), &p("6,4,3,1,1"))
                    .unwrap()
            },
            BatchSize::SmallInput,
        )
    });
    group.finish();
}

fn bench_tables(c: &mut Criterion) {
    let mut group = c.benchmark_group("solution_tables");
    let inst = six_param_instance(1, 1, 1, 0, 0, 1).unwrap();
    group.bench_function("d20 evaluation", |b| b.iter(|| evaluate_d20(&inst).unwrap()));
    group.bench_function("h4 evaluation", |b| b.iter(|| evaluate_h4(&inst).unwrap()));
    group.finish();
}

criterion_group!(benches, bench_jack, bench_lr, bench_tables);
criterion_main!(benches);
