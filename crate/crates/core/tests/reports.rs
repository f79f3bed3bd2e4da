use kappa_core::graph::families::{cycle, path};
use kappa_core::graph::{canonical_graph, enumerate_graphs, write_graph6};
use kappa_core::harness::{
    classify_extremal, recheck, verify_corpus, CheckId, CheckState, CheckStatus, CorpusSource, VerifyOptions,
};
use kappa_core::invariants::{is_chordal_star, kappa_bound, vertex_connectivity};
use kappa_core::stanley_reisner::Field;

fn report_json(source: &CorpusSource, threads: usize, field: Field) -> String {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
    pool.install(|| verify_corpus(source, VerifyOptions { field, timing: false }).unwrap().to_json())
}

#[test]
fn reports_are_identical_across_runs_and_thread_counts() {
    for n in [5, 7] {
        let src = CorpusSource::Builtin(n);
        let one = report_json(&src, 1, Field::Gf2);
        assert_eq!(one, report_json(&src, 4, Field::Gf2));
        assert_eq!(one, report_json(&src, 1, Field::Gf2));
    }
    let mut graphs = enumerate_graphs(6).unwrap();
    graphs.reverse();
    let file = CorpusSource::Graph6File(graphs);
    assert_eq!(report_json(&file, 1, Field::Q), report_json(&file, 3, Field::Q));
}

#[test]
fn file_and_builtin_sources_agree() {
    let builtin = verify_corpus(&CorpusSource::Builtin(6), VerifyOptions::default()).unwrap();
    let mut graphs = enumerate_graphs(6).unwrap();
    graphs.reverse();
    let file = verify_corpus(&CorpusSource::Graph6File(graphs), VerifyOptions::default()).unwrap();
    assert_eq!(builtin.totals, file.totals);
    assert_eq!(builtin.checks, file.checks);
    assert_eq!(builtin.extremal, file.extremal);
    assert_eq!(builtin.spectrum, file.spectrum);
    assert_eq!(file.source, "graph6_file");
}

#[test]
fn classification_matches_an_independent_filter() {
    for n in 4..=8 {
        let report = verify_corpus(&CorpusSource::Builtin(n), VerifyOptions::default()).unwrap();
        let classified = classify_extremal(&CorpusSource::Builtin(n)).unwrap();
        let filtered: Vec<String> = enumerate_graphs(n)
            .unwrap()
            .iter()
            .filter(|g| is_chordal_star(g) && vertex_connectivity(g).unwrap() == kappa_bound(n))
            .map(|g| write_graph6(&canonical_graph(g).unwrap()))
            .collect();
        assert_eq!(classified.len(), filtered.len(), "n = {n}");
        assert_eq!(report.extremal, classified, "n = {n}");
        let mut sorted = filtered.clone();
        sorted.sort();
        let mut got = classified.clone();
        got.sort();
        assert_eq!(got, sorted, "n = {n}");
    }
}

#[test]
fn builtin_six_passes_with_expected_counts() {
    let r = verify_corpus(&CorpusSource::Builtin(6), VerifyOptions::default()).unwrap();
    assert_eq!(r.totals.graphs, 156);
    assert!(r.all_passed());
    assert!(r.checks.iter().all(|c| c.status == CheckStatus::Passed));
    assert!(r.extremal.len() >= 2);
    let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    for key in ["version", "n", "source", "totals", "checks", "extremal", "spectrum", "timing"] {
        assert!(json.get(key).is_some(), "missing {key}");
    }
    assert!(json["timing"].is_null());
}

#[test]
fn witnesses_recheck_from_graph6_alone() {
    // Cycles are not chordal, so the first check does not apply to them.
    let c6 = write_graph6(&cycle(6).unwrap());
    assert_eq!(recheck(&c6, CheckId::K1, Field::Gf2).unwrap(), CheckState::NotApplicable);
    let p4 = write_graph6(&path(4));
    for id in CheckId::ALL {
        match recheck(&p4, id, Field::Q).unwrap() {
            CheckState::Evaluated { passed, .. } => assert!(passed, "{id}"),
            other => panic!("{id}: {other:?}"),
        }
    }
}
