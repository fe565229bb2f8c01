use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Arc, OnceLock};

use ay_coxeter::ayrep::{
    assemble_unchecked, build_ay_rep, build_from_table, check_generic, recover_functional, verify_relations, AYRep,
    CoefficientTable, Functional, Mode, Normalization, ReflCoeffs,
};
use ay_coxeter::cells::{a_cells, cayley_distances, Cell};
use ay_coxeter::coxeter::{build_system, CoxeterSystem, Elem};
use ay_coxeter::error::Error;
use ay_coxeter::scalars::Scalar;
use ay_coxeter::specht::{descent_class, functional_cell, specht_rep, syt_enumerate};
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

fn sys(label: &str) -> Arc<CoxeterSystem> {
    build_system(&label.parse().unwrap(), 100_000).unwrap()
}

/// Every built representation in a small sample: descent classes of A3 and
/// D4 under each exact normalization and both modes.
fn sample() -> &'static [AYRep] {
    static SAMPLE: OnceLock<Vec<AYRep>> = OnceLock::new();
    SAMPLE.get_or_init(build_sample)
}

fn build_sample() -> Vec<AYRep> {
    let mut out = Vec::new();
    for label in ["A3", "D4"] {
        let s = sys(label);
        let mut seen = BTreeSet::new();
        for w in s.elements() {
            let cell = descent_class(&s, w).unwrap();
            if !seen.insert(cell.members().to_vec()) {
                continue;
            }
            for norm in Normalization::EXACT {
                for mode in [Mode::Q1, Mode::Hecke] {
                    out.push(build_ay_rep(&cell, &Functional::delta(&s), norm, mode).unwrap());
                }
            }
        }
    }
    out
}

#[test]
fn axiom_shape_and_internal_b() {
    for rep in sample() {
        let sys = rep.system();
        assert!(rep.matches_table());
        for (i, &w) in rep.cell.members().iter().enumerate() {
            for g in 0..sys.rank() {
                let ws = sys.right_mul(w, g);
                let support = rep.matrices[g].nonzero_in_row(i);
                match rep.cell.index_of(ws) {
                    Some(j) => {
                        assert!(support.iter().all(|&k| k == i || k == j));
                        assert!(!rep.b(g, w).unwrap().is_zero(), "internal b vanishes");
                    }
                    None => assert!(support.iter().all(|&k| k == i)),
                }
            }
        }
    }
}

#[test]
fn coefficients_depend_on_reflection_and_direction_only() {
    for rep in sample() {
        let sys = rep.system();
        let mut seen: BTreeMap<(u32, bool), Scalar> = BTreeMap::new();
        for &w in rep.cell.members() {
            for g in 0..sys.rank() {
                let up = sys.length(sys.right_mul(w, g)) > sys.length(w);
                let key = (sys.refl_of(w, g).0, up);
                let a = rep.a(g, w).unwrap().clone();
                if let Some(prev) = seen.insert(key, a.clone()) {
                    assert_eq!(prev, a);
                }
            }
        }
    }
}

#[test]
fn every_table_identity_and_coset_identity_holds() {
    for rep in sample() {
        let report = verify_relations(rep);
        assert!(report.passed());
        assert!(report.cosets_hold(), "{report}");
        assert!(report.table_identities.iter().all(|x| x.1));
    }
}

#[test]
fn hecke_specializes_to_q1() {
    for h in sample().iter().filter(|r| r.mode == Mode::Hecke) {
        let q1 = build_ay_rep(&h.cell, h.functional.as_ref().unwrap(), h.table.normalization.unwrap(), Mode::Q1).unwrap();
        assert_eq!(h.specialize(&BigRational::one()).unwrap().matrices, q1.matrices);
    }
}

#[test]
fn geodesic_feasibility_is_all_or_nothing() {
    // on each cell, a geodesic whose steps all have b ≠ 0 forces the same for every geodesic
    for rep in sample().iter().filter(|r| r.mode == Mode::Q1).take(12) {
        let sys = rep.system();
        let members = rep.cell.members();
        for &u in members {
            for &v in members {
                let dist = cayley_distances(sys, v);
                let mut feasible = BTreeSet::new();
                let mut stack = vec![(u, true)];
                while let Some((x, ok)) = stack.pop() {
                    if x == v {
                        feasible.insert(ok);
                        continue;
                    }
                    for g in 0..sys.rank() {
                        let y = sys.right_mul(x, g);
                        if dist[y.idx()] + 1 == dist[x.idx()] {
                            let b = rep.b(g, x).unwrap_or_default();
                            stack.push((y, ok && !b.is_zero()));
                        }
                    }
                }
                assert!(feasible.len() <= 1);
            }
        }
    }
}

#[test]
fn class_function_on_two_representatives() {
    let s = sys("A3");
    let rep = specht_rep(&s, &"1,2|3,4".parse().unwrap()).unwrap();
    for class in s.conjugacy_classes() {
        let first = rep.trace_of(class[0]).unwrap();
        let last = rep.trace_of(*class.last().unwrap()).unwrap();
        assert_eq!(first, last);
    }
}

#[test]
fn perturbed_specht_table_is_reported() {
    let s = sys("A3");
    let q = syt_enumerate(&"2,2".parse().unwrap()).unwrap().remove(0);
    let rep = specht_rep(&s, &q).unwrap();
    for (&t, _) in rep.table.entries.iter().filter(|(&t, _)| rep.cell.internal().contains(t.idx())) {
        let mut table = rep.table.clone();
        let e = table.entries.get_mut(&t).unwrap();
        e.a_up = &e.a_up + &Scalar::one();
        let broken = assemble_unchecked(&rep.cell, table.clone(), Mode::Q1).unwrap();
        let report = verify_relations(&broken);
        assert!(!report.passed() || !report.cosets_hold() || report.table_identities.iter().any(|x| !x.1));
        assert!(matches!(build_from_table(&rep.cell, table, Mode::Q1), Err(Error::RelationFailure(_))));
    }
}

#[test]
fn non_simply_laced_needs_a_table() {
    let b = sys("B2");
    let cell = Cell::new(&b, [b.identity()]).unwrap();
    assert!(matches!(
        build_ay_rep(&cell, &Functional::delta(&b), Normalization::Snn, Mode::Q1),
        Err(Error::NotSimplyLaced)
    ));
    let entries = b
        .reflections()
        .map(|t| {
            (
                t,
                ReflCoeffs { a_up: Scalar::one(), a_down: Scalar::int(-1), b_up: Scalar::zero(), b_down: Scalar::zero() },
            )
        })
        .collect();
    let table = CoefficientTable { entries, normalization: None, params: b.classical_params() };
    let triv = build_from_table(&cell, table, Mode::Q1).unwrap();
    assert!(triv.character().unwrap().iter().all(Scalar::is_one));
}

fn small_functional() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-5i64..=5, 3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn generic_functionals_build_and_recover(coords in small_functional(), start in 0usize..24) {
        let s = sys("A3");
        let f = Functional::from_ints(&coords);
        let cell = functional_cell(&s, &f, s.elements().nth(start).unwrap()).unwrap();
        prop_assume!(check_generic(&cell, &f).unwrap().generic);
        for mode in [Mode::Q1, Mode::Hecke] {
            let rep = build_ay_rep(&cell, &f, Normalization::Rsn, mode).unwrap();
            prop_assert!(verify_relations(&rep).passed());
            if cell.contains(s.identity()) {
                prop_assert_eq!(recover_functional(&rep).unwrap().functional, f.clone());
            }
        }
    }

    #[test]
    fn non_generic_functionals_are_rejected(coords in small_functional(), mask in 0u64..64) {
        let s = sys("A3");
        let n = s.num_reflections();
        let a = ay_coxeter::bitset::BitSet::from_iter(n, (0..n).filter(|i| mask >> i & 1 == 1));
        let cells = a_cells(&s, &a).unwrap();
        let cell = &cells[0];
        let f = Functional::from_ints(&coords);
        let generic = check_generic(cell, &f).unwrap().generic;
        let built = build_ay_rep(cell, &f, Normalization::Snn, Mode::Q1);
        prop_assert_eq!(generic, built.is_ok(), "{:?}", built.err());
    }
}

#[test]
fn characters_of_general_cells() {
    // a cell without the identity still carries a representation of the right dimension
    let s = sys("A3");
    let cell = descent_class(&s, s.generator(1)).unwrap();
    assert!(!cell.contains(s.identity()));
    let rep = build_ay_rep(&cell, &Functional::delta(&s), Normalization::Csn, Mode::Q1).unwrap();
    let e: Elem = s.identity();
    assert_eq!(rep.trace_of(e).unwrap(), Scalar::int(cell.len() as i64));
}

#[test]
fn k_a_12345_carries_a_minimal_representation() {
    use ay_coxeter::coxeter::perm::transposition;
    let s = sys("A4");
    let refl = [(1, 2), (2, 3), (4, 5), (1, 4), (2, 5)].map(|(i, j)| transposition(&s, i, j).unwrap().idx());
    let a = ay_coxeter::bitset::BitSet::from_iter(s.num_reflections(), refl);
    let cell = ay_coxeter::cells::a_cell(&s, &a, s.identity()).unwrap();
    assert_eq!(cell.len(), 5);
    let f = Functional::from_ints(&[-1, -1, 3, -1]);
    for mode in [Mode::Q1, Mode::Hecke] {
        let rep = build_ay_rep(&cell, &f, Normalization::Snn, mode).unwrap();
        assert!(verify_relations(&rep).passed());
        assert!(rep.is_minimal());
    }
}
