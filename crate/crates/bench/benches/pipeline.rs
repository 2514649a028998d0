use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use colorlie::catalog;
use colorlie::{
    bilinear_form, check_jacobi, forms_of_degree, invert_form, parse_scalar, solve_commutants, verify_centrality,
    verify_loop_jacobi, ColorAlgebra, ExtensionData,
};
use colorlie_bench::{casimirs, entries};

fn scalars(c: &mut Criterion) {
    let a = parse_scalar("3/7*zeta12^5 - 2*zeta3 + 1/2", 12).unwrap();
    let b = parse_scalar("i - 5/3*zeta12", 12).unwrap();
    c.bench_function("scalar mul", |bn| bn.iter(|| &a * &b));
    c.bench_function("scalar inv", |bn| bn.iter(|| a.inv().unwrap()));
}

fn construction(c: &mut Criterion) {
    let mut g = c.benchmark_group("structure constants");
    g.sample_size(10);
    for e in entries() {
        let alg = &e.algebra;
        let gens: Vec<_> = (0..alg.dim())
            .map(|a| (alg.name(a).to_string(), alg.degree(a), alg.matrix(a).unwrap().clone()))
            .collect();
        let space = alg.space().unwrap().clone();
        g.bench_with_input(BenchmarkId::from_parameter(&e.name), &gens, |bn, gens| {
            bn.iter(|| ColorAlgebra::from_representation(space.clone(), gens.clone()).unwrap())
        });
    }
    g.finish();
}

fn jacobi(c: &mut Criterion) {
    let mut g = c.benchmark_group("jacobi");
    g.sample_size(10);
    for e in entries() {
        g.bench_function(&e.name, |bn| bn.iter(|| check_jacobi(&e.algebra)));
    }
    g.finish();
}

fn commutants_and_forms(c: &mut Criterion) {
    let mut g = c.benchmark_group("commutant + form + inverse");
    g.sample_size(10);
    for e in entries() {
        let alg = &e.algebra;
        g.bench_function(&e.name, |bn| {
            bn.iter(|| {
                for &d in alg.ctx().order() {
                    for m in solve_commutants(alg, d).basis {
                        let f = bilinear_form(alg, &m, &e.normalization).unwrap();
                        let _ = invert_form(alg, &f);
                    }
                }
            })
        });
    }
    g.finish();
}

fn centrality(c: &mut Criterion) {
    let mut g = c.benchmark_group("centrality");
    g.sample_size(10);
    for e in entries() {
        let cs = casimirs(&e);
        g.bench_function(&e.name, |bn| {
            bn.iter(|| cs.iter().filter(|q| verify_centrality(&e.algebra, q).passed()).count())
        });
    }
    g.finish();
}

fn loop_jacobi(c: &mut Criterion) {
    let mut g = c.benchmark_group("loop jacobi, modes -1..1");
    g.sample_size(10);
    for e in [catalog::build_qn(1), catalog::build_z32_sl2(), catalog::build_osp(1, 1)] {
        let alg = &e.algebra;
        let forms: Vec<_> = alg.ctx().order().iter().flat_map(|&d| forms_of_degree(alg, d, &e.normalization)).collect();
        let ext = ExtensionData::new(&forms);
        g.bench_function(&e.name, |bn| bn.iter(|| verify_loop_jacobi(alg, &ext, -1..=1)));
    }
    g.finish();
}

criterion_group!(benches, scalars, construction, jacobi, commutants_and_forms, centrality, loop_jacobi);
criterion_main!(benches);
