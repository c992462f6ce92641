use proptest::prelude::*;

use strongprops_core::constructs::{flipped_cycle, Certificate};
use strongprops_core::matgraph::{emit_graph6, parse_graph, GraphFormat};
use strongprops_core::qbounds::{q_lower, q_upper, GraphParams};
use strongprops_core::spectra::q_exact;
use strongprops_core::strongprops::{direct_sum_verdict, verify, verify_by_definition, witness_satisfies, VerifyOptions};
use strongprops_core::{ExactMatrix, ExactScalar, Graph, Property, SymMatrix};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        g.add_edge(i, j).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

/// A graph with a matrix in `S(G)`; entries are small so repeated
/// eigenvalues are common.
fn matrix_strategy(max_n: usize) -> impl Strategy<Value = (Graph, ExactMatrix)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.n();
        let edges = g.edges();
        (
            proptest::collection::vec(-2i64..=2, n),
            proptest::collection::vec(prop_oneof![-2i64..=-1, 1i64..=2], edges.len()),
        )
            .prop_map(move |(diag, off)| {
                let mut a = ExactMatrix::zeros(n, n);
                for i in 0..n {
                    a[(i, i)] = ExactScalar::from_int(diag[i]);
                }
                for (&(i, j), &v) in edges.iter().zip(&off) {
                    a[(i, j)] = ExactScalar::from_int(v);
                    a[(j, i)] = ExactScalar::from_int(v);
                }
                (g.clone(), a)
            })
    })
}

fn radicand() -> impl Strategy<Value = u64> {
    prop_oneof![Just(2u64), Just(3), Just(5), Just(17)]
}

fn scalar_in(d: u64) -> impl Strategy<Value = ExactScalar> {
    (-20i64..=20, 1i64..=9, -20i64..=20, 1i64..=9).prop_map(move |(a, b, c, e)| {
        &ExactScalar::from_frac(a, b) + &(&ExactScalar::from_frac(c, e) * &ExactScalar::sqrt(d))
    })
}

fn scalar_strategy() -> impl Strategy<Value = ExactScalar> {
    radicand().prop_flat_map(scalar_in)
}

fn scalar_pair() -> impl Strategy<Value = (ExactScalar, ExactScalar)> {
    radicand().prop_flat_map(|d| (scalar_in(d), scalar_in(d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn criterion_agrees_with_definition((g, a) in matrix_strategy(5)) {
        let s = SymMatrix::exact(a).unwrap();
        for p in Property::ALL {
            let crit = verify(p, &s, &g, &VerifyOptions::default()).unwrap();
            let def = verify_by_definition(&s, &g, p).unwrap();
            prop_assert_eq!(crit.verdict, def.verdict, "{}", p);
            prop_assert_eq!(crit.rank, def.rank, "{}", p);
            prop_assert_eq!(crit.verdict, crit.rank == crit.p);
        }
    }

    #[test]
    fn hierarchy((g, a) in matrix_strategy(6)) {
        let s = SymMatrix::exact(a).unwrap();
        let v = |p| verify(p, &s, &g, &VerifyOptions::default()).unwrap().verdict;
        let (sap, ssp, smp) = (v(Property::Sap), v(Property::Ssp), v(Property::Smp));
        prop_assert!(!ssp || smp);
        prop_assert!(!smp || sap);
    }

    #[test]
    fn refutations_carry_valid_witnesses((g, a) in matrix_strategy(6)) {
        let s = SymMatrix::exact(a.clone()).unwrap();
        for p in Property::ALL {
            let r = verify(p, &s, &g, &VerifyOptions::default()).unwrap();
            if !r.verdict {
                let w = r.witness.as_ref().and_then(|w| w.as_exact()).expect("exact refutation has a witness");
                prop_assert!(witness_satisfies(&a, &g, p, w), "{} witness fails", p);
            }
        }
    }

    #[test]
    fn direct_sum_matches_direct_check((g1, a1) in matrix_strategy(3), (g2, a2) in matrix_strategy(3)) {
        let opts = VerifyOptions::default();
        let (s1, s2) = (SymMatrix::exact(a1.clone()).unwrap(), SymMatrix::exact(a2.clone()).unwrap());
        let sum = SymMatrix::exact(a1.direct_sum(&a2).unwrap()).unwrap();
        let g = g1.disjoint_union(&g2);
        let r1 = verify(Property::Ssp, &s1, &g1, &opts).unwrap();
        let r2 = verify(Property::Ssp, &s2, &g2, &opts).unwrap();
        let combined = direct_sum_verdict(&s1, &r1, &s2, &r2).unwrap();
        let direct = verify(Property::Ssp, &sum, &g, &opts).unwrap();
        prop_assert_eq!(combined.verdict, direct.verdict);
    }

    #[test]
    fn shift_invariance((g, a) in matrix_strategy(5), c in -3i64..=3) {
        let moved = SymMatrix::exact(a.shift(&ExactScalar::from_int(c)).unwrap()).unwrap();
        let s = SymMatrix::exact(a).unwrap();
        for p in [Property::Ssp, Property::Smp] {
            let before = verify(p, &s, &g, &VerifyOptions::default()).unwrap();
            let after = verify(p, &moved, &g, &VerifyOptions::default()).unwrap();
            prop_assert_eq!(before.verdict, after.verdict, "{}", p);
        }
    }

    #[test]
    fn scalar_text_round_trip(x in scalar_strategy()) {
        let back: ExactScalar = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn scalar_field_laws((x, y) in scalar_pair()) {
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        if let Some(inv) = y.inv() {
            prop_assert_eq!(&(&x * &y) * &inv, x.clone());
        }
        prop_assert_eq!(x.partial_cmp(&y), x.to_f64().partial_cmp(&y.to_f64()));
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(9)) {
        let text = emit_graph6(&g);
        prop_assert_eq!(parse_graph(text.as_bytes(), GraphFormat::Graph6).unwrap(), g);
    }

    #[test]
    fn bounds_bracket(g in graph_strategy(7)) {
        let lo = q_lower(&g, &GraphParams::default()).unwrap();
        let up = q_upper(&g, &[], &GraphParams::default()).unwrap();
        prop_assert!(lo.value <= up.value, "{} > {}", lo.value, up.value);
        prop_assert!(up.value <= g.n().max(1));
    }

    #[test]
    fn q_exact_counts_distinct_eigenvalues((_g, a) in matrix_strategy(5)) {
        let q = q_exact(&a).unwrap();
        let mut ev: Vec<f64> = a.to_f64().symmetric_eigenvalues().iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        let clusters = 1 + ev.windows(2).filter(|w| w[1] - w[0] > 1e-6).count();
        prop_assert_eq!(q, clusters);
    }
}

#[test]
fn certificate_json_round_trip() {
    for n in 3..=8 {
        let c = flipped_cycle(n).unwrap();
        let text = serde_json::to_string(&c).unwrap();
        let back: Certificate = serde_json::from_str(&text).unwrap();
        assert_eq!(back, c);
        back.verify().unwrap();
    }
}
