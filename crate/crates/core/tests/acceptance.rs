//! Acceptance criteria. Runs without the test harness so that every
//! criterion prints its `[PASS]`/`[FAIL]` line; exits non-zero on any failure.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::time::{Duration, Instant};

use fock_crystal::fixtures::{self, Figure, Golden};
use fock_crystal::io::GraphDocument;
use fock_crystal::{
    a_function, bipartitions_of, diff_graphs, dominance_less, generate_component, is_flotw, n_function,
    orders_coincide_bound, partitions_of, phi_t, phi_table, twisted_two_quotient, two_core, Charge, FockContext,
    Multipartition, Realization,
};

/// Prints the verdict line. A criterion passes when every check held and
/// it finished inside its time budget.
fn report(id: usize, title: &str, start: Instant, budget: Duration, failures: &[String]) -> bool {
    let elapsed = start.elapsed();
    let in_time = elapsed < budget;
    let ok = failures.is_empty() && in_time;
    println!(
        "[{}] criterion {id}: {title} ({:.3}s, budget {}s)",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        budget.as_secs()
    );
    for f in failures.iter().take(10) {
        println!("       {f}");
    }
    if !in_time {
        println!("       {elapsed:?} exceeds {budget:?}");
    }
    ok
}

fn charges() -> Vec<Charge> {
    ["-1,0", "0,0", "0,1", "2,0"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect()
}

fn expect(failures: &mut Vec<String>, ok: bool, what: impl FnOnce() -> String) {
    if !ok {
        failures.push(what());
    }
}

fn criterion_1_crystal_figures() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    let uglov = fixtures::crystal(Realization::Uglov);
    let kleshchev = fixtures::crystal(Realization::Kleshchev);
    for (fig, g) in [(Figure::UglovCrystal, &uglov), (Figure::KleshchevCrystal, &kleshchev)] {
        let want = fig.transcribed_edges().unwrap();
        let got: BTreeSet<(String, String)> = g
            .labeled_edges()
            .map(|(s, t, _)| (s.canonical(), t.canonical()))
            .collect();
        expect(&mut failures, want == got, || format!("{}: edges differ", fig.name()));
        let want_vertices: BTreeSet<String> = want.iter().flat_map(|(s, t)| [s.clone(), t.clone()]).collect();
        let got_vertices: BTreeSet<String> = g.vertices().iter().map(|m| m.canonical()).collect();
        expect(&mut failures, want_vertices == got_vertices, || {
            format!("{}: vertices differ", fig.name())
        });
        expect(&mut failures, g.vertices().len() == 13, || {
            format!("{}: {} vertices", fig.name(), g.vertices().len())
        });
    }
    let d = diff_graphs(&uglov, &kleshchev, true);
    let bold: Vec<String> = d.changed_right().into_iter().collect();
    expect(&mut failures, bold == ["1^2|1", "1|2"], || {
        format!("bold vertices {bold:?}")
    });
    let only_left: Vec<_> = d.vertices_only_left.iter().collect();
    let only_right: Vec<_> = d.vertices_only_right.iter().collect();
    expect(&mut failures, only_left == [(&3, &vec!["-|3".to_string()])], || {
        format!("only Uglov: {only_left:?}")
    });
    expect(&mut failures, only_right == [(&3, &vec!["1^2|1".to_string()])], || {
        format!("only Kleshchev: {only_right:?}")
    });
    expect(
        &mut failures,
        d.edges_only_left.len() == 2 && d.edges_only_right.len() == 2,
        || format!("edge diff {:?} / {:?}", d.edges_only_left, d.edges_only_right),
    );
    report(
        1,
        "figure regression, Uglov and Kleshchev crystals",
        start,
        Duration::from_secs(1),
        &failures,
    )
}

fn criterion_2_principal_series() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    for fig in [Figure::PrincipalSeriesPartitions, Figure::PrincipalSeriesBipartitions] {
        let want = fig.transcribed_edges().unwrap();
        let got = fig.computed_edges().unwrap();
        expect(&mut failures, want == got, || {
            format!("{}: {:?} vs {:?}", fig.name(), want, got)
        });
    }
    let g = fixtures::hc_graph().unwrap();
    for v in g.vertices() {
        expect(&mut failures, twisted_two_quotient(&v.label) == v.bipartition, || {
            format!("{} does not have twisted quotient {}", v.label, v.bipartition)
        });
    }
    let mut out = Vec::new();
    let code = fock_crystal::cli::run(
        [
            "fock-crystal",
            "hcgraph",
            "--s",
            "0",
            "--e",
            "3",
            "--max-rank",
            "3",
            "--dot",
        ],
        &mut out,
        &mut Vec::new(),
    );
    let dot = String::from_utf8(out).unwrap();
    expect(&mut failures, code == 0, || format!("hcgraph exit {code}"));
    for label in [
        "∅", "2", "1^2", "4", "2.1^2", "2^2", "3.1", "6", "4.2", "4.1^2", "3^2", "2^2.1^2", "5.1",
    ] {
        expect(&mut failures, dot.contains(&format!("[label=\"{label}\"]")), || {
            format!("DOT lacks {label}")
        });
    }
    expect(&mut failures, dot.matches("->").count() == 12, || {
        "DOT edge count".into()
    });
    report(
        2,
        "principal series graph and its twisted-quotient relabeling",
        start,
        Duration::from_secs(1),
        &failures,
    )
}

fn criterion_3_n_equals_a() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    for t in 0..=2 {
        let mut checked = 0;
        let mut bad = 0;
        for n in 0..=16 {
            for p in partitions_of(n) {
                if two_core(&p).t() != t {
                    continue;
                }
                checked += 1;
                let (a, nf) = (a_function(&twisted_two_quotient(&p), t), n_function(&p));
                if a != nf {
                    bad += 1;
                    if bad <= 3 {
                        failures.push(format!("t={t}: {p}: a = {a}, n = {nf}"));
                    }
                }
            }
        }
        println!("       t={t}: {checked} partitions, {bad} mismatches");
    }
    report(
        3,
        "a(twisted quotient) = n(λ), t ∈ {0,1,2}, |λ| ≤ 16",
        start,
        Duration::from_secs(30),
        &failures,
    )
}

fn criterion_4_phi_round_trips() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 0..=14 {
        for p in partitions_of(n) {
            let back = phi_t(&twisted_two_quotient(&p), two_core(&p).t());
            expect(&mut failures, back.as_ref() == Ok(&p), || {
                format!("Φ_t(quotient({p})) = {back:?}")
            });
        }
    }
    for t in 0..=3 {
        for n in 0..=7 {
            for b in bipartitions_of(n) {
                let ok = phi_t(&b, t).map(|p| twisted_two_quotient(&p)) == Ok(b.clone());
                expect(&mut failures, ok, || format!("quotient(Φ_{t}({b})) ≠ {b}"));
            }
        }
    }
    report(4, "Φ_t round trips", start, Duration::from_secs(30), &failures)
}

fn criterion_5_crystal_axioms() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    for s in charges() {
        for e in [3, 5] {
            for r in [Realization::Uglov, Realization::Kleshchev] {
                let ctx = FockContext::new(e, s.clone(), r).unwrap();
                let g = generate_component(&ctx, 7);
                if let Err(msg) = g.check_crystal_shape() {
                    failures.push(format!("{r} s={s} e={e}: {msg}"));
                }
                for m in g.vertices() {
                    for i in 0..e {
                        if let Some(up) = ctx.f_tilde(m, i) {
                            expect(&mut failures, ctx.e_tilde(&up, i).as_ref() == Some(m), || {
                                format!("{r} s={s} e={e}: ẽ_{i} f̃_{i} {m} ≠ {m}")
                            });
                        }
                        if let Some(down) = ctx.e_tilde(m, i) {
                            expect(&mut failures, ctx.f_tilde(&down, i).as_ref() == Some(m), || {
                                format!("{r} s={s} e={e}: f̃_{i} ẽ_{i} {m} ≠ {m}")
                            });
                        }
                    }
                }
            }
        }
    }
    report(5, "crystal axioms, rank ≤ 7", start, Duration::from_secs(60), &failures)
}

fn criterion_6_realization_isomorphism() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    for s in charges() {
        for e in [3, 5] {
            let bound = orders_coincide_bound(&s, e).unwrap();
            let max_rank = 6.max(bound.max(0) as usize);
            let k = generate_component(&FockContext::kleshchev(e, s.clone()).unwrap(), max_rank);
            let u = generate_component(&FockContext::uglov(e, s.clone()).unwrap(), max_rank);
            let phi = phi_table(&s, e, max_rank).unwrap();
            let tag = format!("s={s} e={e}");
            expect(&mut failures, k.rank_counts() == u.rank_counts(), || {
                format!("{tag}: rank counts")
            });
            let images: HashSet<&Multipartition> = phi.values().collect();
            let u_vertices: HashSet<&Multipartition> = u.vertices().iter().collect();
            expect(
                &mut failures,
                images == u_vertices && phi.len() == k.vertices().len(),
                || format!("{tag}: φ is not a bijection onto the Uglov vertices"),
            );
            let u_edges: HashSet<(&Multipartition, &Multipartition, usize)> = u.labeled_edges().collect();
            let mapped: HashSet<(&Multipartition, &Multipartition, usize)> =
                k.labeled_edges().map(|(a, b, c)| (&phi[a], &phi[b], c)).collect();
            expect(&mut failures, mapped == u_edges, || {
                format!("{tag}: colored edges not preserved")
            });
            for (m, image) in &phi {
                expect(&mut failures, m.rank() == image.rank(), || {
                    format!("{tag}: φ({m}) changes rank")
                });
                if bound >= 0 && m.rank() as i64 <= bound {
                    expect(&mut failures, m == image, || {
                        format!("{tag}: φ({m}) = {image} below bound {bound}")
                    });
                }
            }
        }
    }
    report(
        6,
        "φ is a colored isomorphism, identity below the coincidence bound",
        start,
        Duration::from_secs(60),
        &failures,
    )
}

fn criterion_7_flotw() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    for e in [3usize, 4] {
        for s1 in 0..e as i64 {
            for s2 in s1..e as i64 {
                let ctx = FockContext::uglov(e, Charge::new(vec![s1, s2]).unwrap()).unwrap();
                let g = generate_component(&ctx, 6);
                let members: HashMap<&Multipartition, ()> = g.vertices().iter().map(|m| (m, ())).collect();
                for n in 0..=6 {
                    for b in bipartitions_of(n) {
                        let m = b.to_multipartition();
                        let flotw = is_flotw(&m, &ctx).unwrap();
                        expect(&mut failures, flotw == members.contains_key(&m), || {
                            format!("e={e} s=({s1},{s2}): {m} flotw={flotw}")
                        });
                    }
                }
            }
        }
    }
    report(
        7,
        "FLOTW predicate = Uglov membership, rank ≤ 6",
        start,
        Duration::from_secs(60),
        &failures,
    )
}

fn criterion_8_dominance_and_n() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 0..=10 {
        let ps = partitions_of(n);
        for p in &ps {
            for q in &ps {
                if dominance_less(q, p).unwrap() {
                    expect(&mut failures, n_function(p) < n_function(q), || {
                        format!("{q} ◁ {p} but n not smaller")
                    });
                }
            }
        }
    }
    report(
        8,
        "dominance implies n-inequality, rank ≤ 10",
        start,
        Duration::from_secs(10),
        &failures,
    )
}

fn criterion_9_serialization() -> bool {
    let start = Instant::now();
    let mut failures = Vec::new();
    for golden in Golden::ALL {
        let name = golden.file_name();
        let committed = golden.committed();
        match GraphDocument::from_json(committed) {
            Ok(doc) => expect(&mut failures, doc.to_json() == committed, || {
                format!("{name}: round trip changes bytes")
            }),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
        let (a, b) = (golden.computed().unwrap(), golden.computed().unwrap());
        expect(&mut failures, a == b, || format!("{name}: two runs differ"));
        expect(&mut failures, a == committed, || {
            format!("{name}: differs from the committed file")
        });
    }
    report(
        9,
        "JSON round trip and byte determinism",
        start,
        Duration::from_secs(1),
        &failures,
    )
}

fn main() {
    let criteria: [fn() -> bool; 9] = [
        criterion_1_crystal_figures,
        criterion_2_principal_series,
        criterion_3_n_equals_a,
        criterion_4_phi_round_trips,
        criterion_5_crystal_axioms,
        criterion_6_realization_isomorphism,
        criterion_7_flotw,
        criterion_8_dominance_and_n,
        criterion_9_serialization,
    ];
    let failed = criteria.iter().filter(|c| !c()).count();
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
