use criterion::{criterion_group, criterion_main, BatchSize, Criterion};

use hodgehyper::spectra::verify_spectral_suite;
use hodgehyper::*;

fn sample_hypergraph(seed: u64) -> Hypergraph {
    random_hypergraph(&GeneratorParams {
        vertices: 6,
        max_dimension: 3,
        edge_probability: 0.2,
        seed,
    })
}

fn bench_pipeline(criterion: &mut Criterion) {
    let h = sample_hypergraph(7);
    let top = h.closure().top_dimension().unwrap_or(0);

    criterion.bench_function("build exact complex", |b| {
        b.iter(|| WeightedComplex::<Rat>::new(&h, &Weight::Trivial).unwrap())
    });

    let exact = WeightedComplex::<Rat>::new(&h, &Weight::Trivial).unwrap();
    criterion.bench_function("embedded homology, all degrees", |b| {
        b.iter_batched(
            || exact.clone(),
            |c| {
                for n in 0..=top {
                    embedded_homology(&c, n).unwrap();
                }
            },
            BatchSize::SmallInput,
        )
    });

    criterion.bench_function("hodge summands and identity checks, all degrees", |b| {
        b.iter_batched(
            || exact.clone(),
            |c| {
                for n in 0..=top {
                    analyze_degree(&c, n).unwrap();
                }
            },
            BatchSize::SmallInput,
        )
    });

    let float = WeightedComplex::<f64>::new(&h, &Weight::Trivial).unwrap();
    criterion.bench_function("spectral relation suite, all degrees", |b| {
        b.iter_batched(
            || float.clone(),
            |c| {
                for n in 0..=top {
                    verify_spectral_suite(&c, n).unwrap();
                }
            },
            BatchSize::SmallInput,
        )
    });
}

criterion_group!(benches, bench_pipeline);
criterion_main!(benches);
