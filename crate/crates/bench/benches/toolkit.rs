use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use strongprops_core::constructs::{corpus, corpus_certificate, flipped_cycle};
use strongprops_core::lifting::{lift_ssp, LiftMode, LiftProblem};
use strongprops_core::matgraph::{enumerate_graphs, named};
use strongprops_core::qbounds::{bound_report, classify_high_q};
use strongprops_core::spectra::q_exact;
use strongprops_core::strongprops::{verify, verify_by_definition, VerifyOptions};
use strongprops_core::{GraphParams, Property};

fn verification(c: &mut Criterion) {
    let cube = corpus_certificate("SMPnotSAP").unwrap();
    let bowtie = corpus_certificate("bowtie").unwrap();
    let opts = VerifyOptions::default();
    c.bench_function("verify smp exact 8x8", |b| {
        b.iter(|| verify(Property::Smp, black_box(&cube.sym()), &cube.graph, &opts).unwrap())
    });
    c.bench_function("verify ssp exact sqrt6 5x5", |b| {
        b.iter(|| verify(Property::Ssp, black_box(&bowtie.sym()), &bowtie.graph, &opts).unwrap())
    });
    c.bench_function("verify ssp definition 8x8", |b| {
        b.iter(|| verify_by_definition(black_box(&cube.sym()), &cube.graph, Property::Ssp).unwrap())
    });
    let c12 = flipped_cycle(12).unwrap();
    let float = c12.sym().as_float();
    c.bench_function("verify smp float 12x12", |b| {
        b.iter(|| verify(Property::Smp, black_box(&float), &c12.graph, &opts).unwrap())
    });
    c.bench_function("q exact 12x12", |b| b.iter(|| q_exact(black_box(&c12.matrix)).unwrap()));
}

fn lifting(c: &mut Criterion) {
    let star = corpus_certificate("exstar").unwrap();
    let mut g = star.graph.clone();
    g.add_edge(1, 2).unwrap();
    g.add_edge(2, 3).unwrap();
    let problem = LiftProblem::new(star.matrix.to_f64(), g, LiftMode::PreserveSpectrum);
    c.bench_function("lift star to diamond", |b| b.iter(|| lift_ssp(black_box(&problem)).unwrap()));
}

fn graphs(c: &mut Criterion) {
    c.bench_function("classify all 6-vertex graphs", |b| {
        b.iter(|| enumerate_graphs(6, true).unwrap().map(|g| classify_high_q(&g).class).collect::<Vec<_>>())
    });
    let all = corpus().unwrap();
    let sun = named::three_sun();
    c.bench_function("bound report 3-sun", |b| {
        b.iter(|| bound_report(black_box(&sun), &GraphParams::default(), &all).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = verification, lifting, graphs
}
criterion_main!(benches);
