use std::collections::HashMap;

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vagueset::dataset::{generate_example, load_matrix};
use vagueset::eventology::to_real;
use vagueset::{
    build_matrix, derive_vague_curve, eval_event, eval_tnorm, eval_vague, parse, HedgeExponents,
    Judgment, Polarity, Region, SelectionMatrix, SubjectId, TNormKind, Universe,
};

fn random_matrix(subjects: usize, seed: u64) -> SelectionMatrix {
    let u = Universe::new(0.0, 1000.0).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut judgments = Vec::new();
    for s in 0..subjects {
        let subject = SubjectId::new(format!("s{s:05}")).unwrap();
        for name in ["x", "y"] {
            let lo = rng.gen_range(0..900) as f64;
            let hi = lo + rng.gen_range(1..100) as f64;
            let region = Region::interval(lo, hi, u).unwrap();
            judgments.push(Judgment::new(subject.clone(), name, region, Polarity::For));
        }
    }
    build_matrix(judgments, u).unwrap()
}

fn membership(c: &mut Criterion) {
    let mut group = c.benchmark_group("membership");
    for subjects in [100, 1_000, 10_000] {
        let matrix = random_matrix(subjects, 1);
        let x = matrix.row("x").unwrap();
        let y = matrix.row("y").unwrap();
        group.bench_with_input(BenchmarkId::new("atom", subjects), &x, |b, x| {
            b.iter(|| black_box(x.membership().unwrap()))
        });
        group.bench_with_input(BenchmarkId::new("and", subjects), &(x.clone(), y.clone()), |b, (x, y)| {
            b.iter(|| black_box(x.and(y).unwrap().membership().unwrap()))
        });
    }
    group.finish();
}

fn regions(c: &mut Criterion) {
    let u = Universe::new(0.0, 1e6).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut gen = |parts: usize| {
        let raw: Vec<(f64, f64)> = (0..parts)
            .map(|_| {
                let lo = rng.gen_range(0..999_000) as f64;
                (lo, lo + rng.gen_range(1..1000) as f64)
            })
            .collect();
        Region::normalize(raw, u).unwrap()
    };
    let mut group = c.benchmark_group("region");
    for parts in [10, 1_000] {
        let (a, b) = (gen(parts), gen(parts));
        group.bench_function(BenchmarkId::new("union", parts), |bch| bch.iter(|| black_box(a.union(&b).unwrap())));
        group.bench_function(BenchmarkId::new("intersect", parts), |bch| {
            bch.iter(|| black_box(a.intersect(&b).unwrap()))
        });
        group.bench_function(BenchmarkId::new("complement", parts), |bch| bch.iter(|| black_box(a.complement())));
    }
    group.finish();
}

fn expressions(c: &mut Criterion) {
    let text = "very (young_man and not young_woman) or more_or_less (young_woman xor young_man)";
    c.bench_function("parse", |b| b.iter(|| black_box(parse(black_box(text)).unwrap())));

    let data = generate_example(1, 71).unwrap();
    let (matrix, _) = load_matrix(data.as_bytes(), Universe::default()).unwrap();
    let hedges = HedgeExponents::default();
    let expr = parse("young_man and not young_woman").unwrap();
    c.bench_function("eval/event", |b| b.iter(|| black_box(eval_event(&expr, &matrix, &hedges).unwrap())));

    let vague: HashMap<_, _> = matrix
        .names()
        .iter()
        .map(|n| (n.clone(), derive_vague_curve(&matrix, n).unwrap()))
        .collect();
    c.bench_function("eval/vague", |b| b.iter(|| black_box(eval_vague(&expr, &vague, &hedges).unwrap())));

    let real: HashMap<_, _> = matrix
        .names()
        .iter()
        .map(|n| (n.clone(), to_real(&matrix.row(n).unwrap().membership().unwrap())))
        .collect();
    c.bench_function("eval/tnorm", |b| {
        b.iter(|| black_box(eval_tnorm(&expr, TNormKind::Product, &real, &hedges).unwrap()))
    });
}

criterion_group!(benches, membership, regions, expressions);
criterion_main!(benches);
