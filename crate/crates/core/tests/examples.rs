use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use strongprops_core::constructs::{corpus, corpus_certificate, diag_distinct, direct_sum, flipped_cycle, Certificate, Claim};
use strongprops_core::lifting::{augment_and_lift, lift_smp, lift_ssp, LiftMode, LiftProblem};
use strongprops_core::matgraph::{contains_subgraph, enumerate_graphs, named, SubgraphMode};
use strongprops_core::qbounds::{bound_report, classify_high_q, q_lower, q_upper, GraphParams, HighQClass, Rule, SourcedValue};
use strongprops_core::spectra::{eig_cluster, multiplicity_list, q_exact, DEFAULT_CLUSTER_TOL};
use strongprops_core::scalars::rank_exact;
use strongprops_core::strongprops::{edge_bound_check, tangent_dims, verify, witness_satisfies, VerifyOptions};
use strongprops_core::{Error, ExactMatrix, ExactScalar, Graph, Property, SymMatrix};

fn ones(n: usize) -> ExactMatrix {
    let rows: Vec<Vec<i64>> = vec![vec![1; n]; n];
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    ExactMatrix::from_i64_rows(&refs).unwrap()
}

fn shifted(c: &Certificate, by: i64) -> Certificate {
    Certificate {
        id: format!("{}+{by}", c.id),
        graph: c.graph.clone(),
        matrix: c.matrix.shift(&ExactScalar::from_int(by)).unwrap(),
        claims: c
            .claims
            .iter()
            .filter(|cl| matches!(cl, Claim::Q { .. } | Claim::Property { shift: None, .. }))
            .cloned()
            .collect(),
        provenance: String::new(),
    }
}

#[test]
fn all_ones_sums() {
    let j3 = corpus_certificate("J3").unwrap();
    let moved = direct_sum(&j3, &shifted(&j3, 5)).unwrap();
    assert_eq!(moved.claims_property(Property::Ssp), Some(true));
    assert_eq!(moved.q(), Some(4));

    let same = direct_sum(&j3, &j3).unwrap();
    assert_eq!(same.claims_property(Property::Ssp), None);
    assert_eq!(same.q(), Some(2));
    let r = verify(Property::Ssp, &same.sym(), &same.graph, &VerifyOptions::default()).unwrap();
    assert!(!r.verdict);
    assert_eq!(j3.matrix, ones(3));
}

#[test]
fn star_plus_isolated_vertex() {
    let star = corpus_certificate("exstar").unwrap();
    let seven = diag_distinct(&[ExactScalar::from_int(7)]).unwrap();
    let sum = direct_sum(&star, &seven).unwrap();
    assert_eq!(sum.claims_property(Property::Ssp), Some(true));
    assert_eq!(sum.q(), Some(4));
    sum.verify().unwrap();
}

#[test]
fn diagonal_repeats_are_rejected() {
    let err = diag_distinct(&[ExactScalar::from_int(1), ExactScalar::from_int(1)]).unwrap_err();
    assert!(matches!(err, Error::Distinctness(_)));
}

#[test]
fn flipped_cycle_witnesses() {
    for n in 5..=9 {
        let c = flipped_cycle(n).unwrap();
        let w = c
            .claims
            .iter()
            .find_map(|cl| match cl {
                Claim::Property { property: Property::Ssp, holds: false, witness: Some(w), .. } => Some(ExactMatrix::from_rows(w.clone()).unwrap()),
                _ => None,
            })
            .expect("SSP refutation");
        assert!(witness_satisfies(&c.matrix, &c.graph, Property::Ssp, &w), "n = {n}");
    }
    assert!(matches!(flipped_cycle(2), Err(Error::Domain(_))));
}

#[test]
fn corpus_ids_are_unique_and_verified() {
    let all = corpus().unwrap();
    let mut ids: Vec<&str> = all.iter().map(|c| c.id.as_str()).collect();
    ids.sort_unstable();
    ids.dedup();
    assert_eq!(ids.len(), all.len());
    for c in &all {
        c.verify().unwrap();
    }
}

#[test]
fn cube_shift_has_sap() {
    let cube = corpus_certificate("SMPnotSAP").unwrap();
    let shifted = SymMatrix::exact(cube.matrix.shift(&ExactScalar::from_int(-4)).unwrap()).unwrap();
    assert!(verify(Property::Sap, &shifted, &cube.graph, &VerifyOptions::default()).unwrap().verdict);
}

#[test]
fn smp_lift_keeps_multiplicities() {
    let c = flipped_cycle(5).unwrap();
    let mut g = c.graph.clone();
    g.add_edge(0, 2).unwrap();
    let r = lift_smp(&LiftProblem::new(c.matrix.to_f64(), g.clone(), LiftMode::PreserveMultiplicityList)).unwrap();
    let m = multiplicity_list(&eig_cluster(&r.b.to_f64(), DEFAULT_CLUSTER_TOL).unwrap());
    assert_eq!(m.0, vec![1, 2, 2]);
    assert!(r.pattern_report.in_class);
    assert!(verify(Property::Smp, &r.b, &g, &VerifyOptions::default()).unwrap().verdict);
}

#[test]
fn seed_without_ssp_is_rejected() {
    let cube = corpus_certificate("SMPnotSAP").unwrap();
    let mut g = cube.graph.clone();
    g.add_edge(0, 3).unwrap();
    let err = lift_ssp(&LiftProblem::new(cube.matrix.to_f64(), g, LiftMode::PreserveSpectrum)).unwrap_err();
    assert!(matches!(err, Error::RejectedSeed(_)), "{err}");
}

#[test]
fn mode_mismatch_is_a_domain_error() {
    let star = corpus_certificate("exstar").unwrap();
    let p = LiftProblem::new(star.matrix.to_f64(), named::paw(), LiftMode::PreserveSpectrum);
    assert!(matches!(lift_smp(&p), Err(Error::Domain(_))));
}

#[test]
fn augmentation_rejects_colliding_eigenvalues() {
    let star = corpus_certificate("exstar").unwrap();
    let g = Graph::star(4);
    let emb = contains_subgraph(&g, &star.graph, SubgraphMode::Identical).unwrap();
    let err = augment_and_lift(&star, &g, &emb, &[0.0]).unwrap_err();
    assert!(matches!(err, Error::SpectrumCollision(_)), "{err}");
    let err = augment_and_lift(&star, &Graph::star(5), &[0, 1, 2, 3], &[2.0, 2.0]).unwrap_err();
    assert!(matches!(err, Error::Distinctness(_)), "{err}");
}

#[test]
fn lifted_matrix_keeps_seed_entries_nonzero() {
    let d = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![1.0, 2.0, 3.0, 4.0]));
    let r = lift_ssp(&LiftProblem::new(d, Graph::cycle(4), LiftMode::PreserveSpectrum)).unwrap();
    assert!(r.spectrum_error < 1e-8);
    let b = r.b.to_f64();
    for (i, j) in Graph::cycle(4).edges() {
        assert!(b[(i, j)].abs() > 1e-6);
    }
}

#[test]
fn paths_have_distinct_eigenvalues() {
    for n in 1..=8 {
        let p = Graph::path(n);
        let params = GraphParams { max_nullity: Some(SourcedValue::user(1)), ..Default::default() };
        assert_eq!(q_lower(&p, &params).unwrap().value, n);
        assert_eq!(q_upper(&p, &[], &GraphParams::default()).unwrap().value, n);
        assert_eq!(classify_high_q(&p).class, HighQClass::QEqualsN);
    }
}

#[test]
fn disjoint_union_bound() {
    for n in 2..=6 {
        for g in enumerate_graphs(n, true).unwrap().filter(|g| !g.is_connected()) {
            let largest = g.components().iter().map(Vec::len).max().unwrap();
            let up = q_upper(&g, &[], &GraphParams::default()).unwrap();
            assert!(up.value <= largest, "{g:?}");
        }
    }
}

#[test]
fn every_justification_replays() {
    let all = corpus().unwrap();
    for n in 1..=6 {
        for g in enumerate_graphs(n, true).unwrap() {
            let report = bound_report(&g, &GraphParams::default(), &all).unwrap();
            for j in report.lower.rules.iter().chain(&report.upper.rules) {
                assert!(j.rule.recheck(&g, &all), "{g:?}: {j:?}");
                assert_eq!(j.rule.value(), j.value);
            }
            assert!(report.lower.value <= report.upper.value, "{g:?}");
        }
    }
}

#[test]
fn certificate_lift_uses_the_corpus() {
    let a3 = corpus_certificate("prop:HHY3/A3").unwrap();
    let q = q_exact(&a3.matrix).unwrap();
    let mut g = a3.graph.disjoint_union(&Graph::empty(1));
    g.add_edge(0, a3.n()).unwrap();
    let b = q_upper(&g, std::slice::from_ref(&a3), &GraphParams::default()).unwrap();
    assert!(b.value <= q + 1);
    assert!(b.rules.iter().any(|j| matches!(j.rule, Rule::CertificateLift { .. })));
}

#[test]
fn named_graph_orders() {
    assert_eq!(named::h_tree().n(), 6);
    assert_eq!(named::campstool().n(), 5);
    assert_eq!(named::three_sun().n(), 6);
    assert_eq!(named::paw().edge_count(), 4);
    assert!(contains_subgraph(&named::three_sun(), &named::campstool(), SubgraphMode::Isomorphic).is_none());
}

#[test]
fn cube_tangent_dimensions() {
    let cube = corpus_certificate("SMPnotSAP").unwrap();
    let dims = tangent_dims(&cube.sym()).unwrap();
    assert_eq!(dims.m.0, vec![4, 4]);
    assert_eq!(dims.dim_spec_tangent, 16);
    assert_eq!(dims.dim_mult_tangent, 18);
    let bounds = edge_bound_check(&cube.graph, &cube.sym()).unwrap();
    assert_eq!(bounds.ssp_bound, 12);
    assert!(!bounds.ssp_excluded);
}

/// With exactly one repeated eigenvalue `l`, the SMP of `A` is the SAP of `A - l I`.
#[test]
fn single_repeated_eigenvalue_reduces_smp_to_sap() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut hits = 0;
    let opts = VerifyOptions::default();
    for _ in 0..4000 {
        let n = rng.gen_range(3..=6);
        let mut g = Graph::empty(n);
        let mut a = ExactMatrix::zeros(n, n);
        for i in 0..n {
            a[(i, i)] = ExactScalar::from_int(rng.gen_range(0..=1));
            for j in i + 1..n {
                if rng.gen_bool(0.5) {
                    g.add_edge(i, j).unwrap();
                    a[(i, j)] = ExactScalar::from_int(1);
                    a[(j, i)] = ExactScalar::from_int(1);
                }
            }
        }
        let spectral = eig_cluster(&a.to_f64(), DEFAULT_CLUSTER_TOL).unwrap();
        let repeated: Vec<f64> = spectral
            .eigenvalues
            .iter()
            .zip(&spectral.multiplicities)
            .filter(|(_, &m)| m > 1)
            .map(|(&l, _)| l)
            .collect();
        let [l] = repeated[..] else { continue };
        let lambda = ExactScalar::from_int(l.round() as i64);
        let shifted = a.shift(&-lambda).unwrap();
        if (l - l.round()).abs() > 1e-9 || n - rank_exact(&shifted).unwrap() < 2 {
            continue;
        }
        hits += 1;
        let smp = verify(Property::Smp, &SymMatrix::exact(a).unwrap(), &g, &opts).unwrap().verdict;
        let sap = verify(Property::Sap, &SymMatrix::exact(shifted).unwrap(), &g, &opts).unwrap().verdict;
        assert_eq!(smp, sap, "{g:?}");
    }
    assert!(hits >= 20, "only {hits} matrices with one integral repeated eigenvalue");
}
