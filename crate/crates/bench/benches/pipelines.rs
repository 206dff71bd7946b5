use std::sync::Arc;

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use torspair_core::classical::{alexander_polynomial, blanchfield_from_definition, DeltaRoute};
use torspair_core::complex::chain::complex_from_fox;
use torspair_core::complex::representation::Metabelian;
use torspair_core::twisted::report::verify_setting;
use torspair_core::twisted::setting::{CharacterData, Setting};
use torspair_core::TorusParams;

fn classical(c: &mut Criterion) {
    let p = TorusParams::new(5, 7).unwrap();
    c.bench_function("taut identity T(7, 9)", |b| {
        let q = TorusParams::new(7, 9).unwrap();
        b.iter(|| black_box(q.taut_identity().verify(&q)))
    });
    c.bench_function("Alexander polynomial from the complex T(5, 7)", |b| {
        b.iter(|| alexander_polynomial(black_box(&p), DeltaRoute::FromComplex).unwrap())
    });
    c.bench_function("classical pairing T(5, 7)", |b| b.iter(|| blanchfield_from_definition(black_box(&p)).unwrap()));
}

fn twisted(c: &mut Criterion) {
    let p = TorusParams::new(4, 5).unwrap();
    let b = [1, 1, 1, 2];
    c.bench_function("metabelian Fox complex T(4, 5)", |bn| {
        let rep = Metabelian::new(&p, &b).unwrap();
        bn.iter(|| complex_from_fox(black_box(&rep.rep), &p))
    });
    let data = Arc::new(CharacterData::new(&p, &b).unwrap());
    c.bench_function("character data T(4, 5)", |bn| bn.iter(|| CharacterData::new(black_box(&p), &b).unwrap()));
    let s = Setting::new(data, 1).unwrap();
    c.bench_function("full setting report T(4, 5) a = 1", |bn| bn.iter(|| verify_setting(black_box(&s))));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = classical, twisted
}
criterion_main!(benches);
