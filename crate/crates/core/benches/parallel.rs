use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ungar::ideal::{count_eeta_ideals, FinitePoset};
use ungar::tamari::count_eeta_tam;
use ungar::weak::solve_sn;
use ungar::young::rectangle_gf_check;
use ungar::Exec;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn weak_order(c: &mut Criterion) {
    let mut g = c.benchmark_group("solve_sn");
    g.sample_size(10);
    for n in [7usize, 8] {
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| solve_sn(n, exec).unwrap().count_eeta())
            });
        }
    }
    g.finish();
}

fn ideals(c: &mut Criterion) {
    let mut g = c.benchmark_group("shifted_staircase_ideals");
    g.sample_size(10);
    for n in [8usize, 10] {
        let poset = FinitePoset::shifted_staircase(n).unwrap();
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, n), &poset, |b, p| {
                b.iter(|| count_eeta_ideals(p, exec).unwrap())
            });
        }
    }
    g.finish();
}

fn sweeps(c: &mut Criterion) {
    let mut g = c.benchmark_group("sweeps");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new("tamari_count_11", name), |b| {
            b.iter(|| count_eeta_tam(11, exec).unwrap())
        });
        g.bench_function(BenchmarkId::new("rectangle_gf_8", name), |b| {
            b.iter(|| rectangle_gf_check(8, 8, exec).unwrap().len())
        });
    }
    g.finish();
}

criterion_group!(benches, weak_order, ideals, sweeps);
criterion_main!(benches);
