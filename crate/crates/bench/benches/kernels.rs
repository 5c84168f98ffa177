use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use repfact_core::factorize::{profiles_from, shortest_widths_from};
use repfact_core::synthesis::{capped_prefix_oracle, factor_width_oracle, guess_dfao};
use repfact_core::{sequence_prefix, RepetitionTable, SequenceId};

fn repetition_table(c: &mut Criterion) {
    let mut g = c.benchmark_group("repetition_table");
    for len in [1024usize, 4096] {
        let w = sequence_prefix(SequenceId::ThueMorse, len);
        g.bench_with_input(BenchmarkId::from_parameter(len), &w, |b, w| {
            b.iter(|| RepetitionTable::with_max_len(black_box(w), 128))
        });
    }
    g.finish();
}

fn width_dp(c: &mut Criterion) {
    let w = sequence_prefix(SequenceId::RegularPaperfolding, 4096);
    let table = RepetitionTable::with_max_len(&w, 64);
    c.bench_function("shortest_widths_all_starts", |b| {
        b.iter(|| {
            (0..w.len())
                .map(|i| shortest_widths_from(&table, i, 64, None).len())
                .sum::<usize>()
        })
    });
    let small = RepetitionTable::with_max_len(&w, 128);
    c.bench_function("profiles_one_start", |b| {
        b.iter(|| profiles_from(&small, black_box(5), 128))
    });
}

fn synthesis(c: &mut Criterion) {
    let mut g = c.benchmark_group("guess_dfao");
    g.sample_size(10);
    let tm = factor_width_oracle(SequenceId::ThueMorse, 256);
    g.bench_function("thue_morse_width_256", |b| {
        b.iter(|| guess_dfao(&tm, 12).unwrap())
    });
    let rs = capped_prefix_oracle(SequenceId::RudinShapiro, 8, 1 << 14);
    g.bench_function("rudin_shapiro_cap8", |b| {
        b.iter(|| guess_dfao(&rs, 16).unwrap())
    });
    g.finish();
}

fn minimize(c: &mut Criterion) {
    let m = guess_dfao(&factor_width_oracle(SequenceId::Fibonacci, 233), 16).unwrap();
    c.bench_function("minimize_fibonacci_width", |b| {
        b.iter(|| black_box(&m).minimize())
    });
}

criterion_group!(benches, repetition_table, width_dp, synthesis, minimize);
criterion_main!(benches);
