use criterion::{black_box, criterion_group, criterion_main, Criterion};
use seaweed_core::enumerate::{enumerate_frobenius, spectrum_census};
use seaweed_core::oracle::{analyse, DEFAULT_SEED};
use seaweed_core::{full_spectrum, LieType, Seaweed};

fn sw(t: &str, top: &[usize], bottom: &[usize]) -> Seaweed {
    Seaweed::from_indices(t.parse::<LieType>().unwrap(), top, bottom).unwrap()
}

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    g.sample_size(10);
    for t in ["E6", "E7", "D8"] {
        let lt: LieType = t.parse().unwrap();
        g.bench_function(t, |b| b.iter(|| enumerate_frobenius(black_box(lt)).unwrap().count()));
    }
    g.finish();
}

fn spectra(c: &mut Criterion) {
    let d14 = sw("D14", &[14, 13, 12, 11, 10, 9, 8, 7, 5, 4, 3, 2, 1], &[14, 13, 12, 11, 9, 8, 7, 6, 5, 4, 3, 2]);
    let e6 = sw("E6", &[5, 4, 3, 1], &[6, 5, 4, 3, 2, 1]);
    c.bench_function("full_spectrum D14", |b| b.iter(|| full_spectrum(black_box(&d14)).unwrap()));
    c.bench_function("full_spectrum E6", |b| b.iter(|| full_spectrum(black_box(&e6)).unwrap()));
    let cat = enumerate_frobenius("E7".parse().unwrap()).unwrap();
    let mut g = c.benchmark_group("census");
    g.sample_size(10);
    g.bench_function("E7", |b| b.iter(|| spectrum_census(black_box(&cat)).checked));
    g.finish();
}

fn oracle(c: &mut Criterion) {
    let a9 = sw("A9", &[9, 7, 6, 4, 3, 2, 1], &[9, 8, 7, 5, 4, 3, 2, 1]);
    let mut g = c.benchmark_group("oracle");
    g.sample_size(10);
    g.bench_function("A9 one functional", |b| b.iter(|| analyse(black_box(&a9), DEFAULT_SEED, 1).unwrap()));
    g.finish();
}

criterion_group!(benches, enumeration, spectra, oracle);
criterion_main!(benches);
