use std::sync::Arc;

use ay_coxeter::coxeter::{build_system, CoxeterSystem, Elem};
use proptest::prelude::*;

fn sys(label: &str) -> Arc<CoxeterSystem> {
    build_system(&label.parse().unwrap(), 100_000).unwrap()
}

fn words_for(rank: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(0..rank, 0..14)
}

#[test]
fn length_is_left_descent_count() {
    for label in ["A3", "B3", "I2(7)"] {
        let s = sys(label);
        for w in s.elements() {
            assert_eq!(s.length(w), s.des_t(w).len(), "{label} {}", s.format_word(w));
        }
    }
}

#[test]
fn right_steps_change_length_by_one() {
    for label in ["A3", "B3", "D4", "I2(7)"] {
        let s = sys(label);
        for w in s.elements() {
            for g in 0..s.rank() {
                let (a, b) = (s.length(w), s.length(s.right_mul(w, g)));
                assert!(b == a + 1 || b + 1 == a);
            }
        }
    }
}

#[test]
fn table_multiplication_matches_words() {
    let s = sys("A3");
    for u in s.elements() {
        for v in s.elements() {
            let mut word = s.word(u);
            word.extend(s.word(v));
            assert_eq!(s.mul(u, v), s.word_to_element(&word).unwrap());
        }
    }
}

#[test]
fn longest_element() {
    for label in ["A3", "B3", "D4", "I2(5)"] {
        let s = sys(label);
        let w0 = s.longest();
        assert_eq!(s.length(w0), s.num_reflections());
        let max: Vec<Elem> = s.elements().filter(|&w| s.length(w) == s.num_reflections()).collect();
        assert_eq!(max, vec![w0]);
    }
}

#[test]
fn reflections_round_trip_through_roots() {
    for label in ["A3", "B3", "D4"] {
        let s = sys(label);
        for t in s.reflections() {
            let (w, g) = s.reflection_witness(t);
            assert_eq!(s.refl_of(w, g), t);
            let elem = s.reflection_element(t);
            assert_eq!(s.as_reflection(elem).unwrap(), t);
            assert_eq!(s.mul(s.mul(w, s.generator(g)), s.inverse(w)), elem);
        }
    }
}

#[test]
fn root_additivity_on_rank_two_cosets() {
    let s = sys("A3");
    let mut checked = 0;
    for w in s.elements() {
        for a in 0..s.rank() {
            for b in 0..s.rank() {
                if a == b || s.m(a, b) != 3 || s.coset_shortest(w, a, b) != w {
                    continue;
                }
                let sum: Vec<i64> = s
                    .root(s.refl_of(w, a))
                    .unwrap()
                    .iter()
                    .zip(s.root(s.refl_of(w, b)).unwrap())
                    .map(|(x, y)| x + y)
                    .collect();
                assert_eq!(s.root(s.refl_of(s.right_mul(w, a), b)).unwrap(), sum.as_slice());
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn conjugacy_of_generators_by_odd_edges() {
    for label in ["A3", "B3", "D4", "F4", "I2(6)"] {
        let s = sys(label);
        for a in 0..s.rank() {
            for b in 0..s.rank() {
                assert_eq!(s.simple_conjugacy(a, b), s.conjugate_by_enumeration(a, b), "{label}");
            }
        }
    }
}

proptest! {
    #[test]
    fn inverse_and_length(word in words_for(3)) {
        let s = sys("A3");
        let w = s.word_to_element(&word).unwrap();
        prop_assert!(s.length(w) <= word.len());
        prop_assert_eq!(s.length(w) % 2, word.len() % 2);
        prop_assert_eq!(s.length(s.inverse(w)), s.length(w));
        prop_assert_eq!(s.mul(w, s.inverse(w)), s.identity());
    }

    #[test]
    fn descent_set_grows_on_up_steps(word in words_for(4), g in 0usize..4) {
        let s = sys("D4");
        let w = s.word_to_element(&word).unwrap();
        let ws = s.right_mul(w, g);
        if s.length(ws) > s.length(w) {
            let mut grown = s.des_t(w).clone();
            grown.insert(s.refl_of(w, g).idx());
            prop_assert_eq!(s.des_t(ws), &grown);
        }
    }

    #[test]
    fn signed_root_image_tracks_direction(word in words_for(3), g in 0usize..3) {
        let s = sys("B3");
        let w = s.word_to_element(&word).unwrap();
        let (t, sign) = s.signed_root_image(w, g);
        prop_assert_eq!(t, s.refl_of(w, g));
        let up = s.length(s.right_mul(w, g)) > s.length(w);
        prop_assert_eq!(sign == 1, up);
    }

    #[test]
    fn parabolic_factorization_is_length_additive(word in words_for(4), mask in 0u32..16) {
        let s = sys("A4");
        let j: Vec<usize> = (0..4).filter(|i| mask >> i & 1 == 1).collect();
        let par = s.minimal_coset_reps(&j).unwrap();
        let w = s.word_to_element(&word).unwrap();
        let (p, r) = par.factor[w.idx()];
        prop_assert_eq!(s.mul(p, r), w);
        prop_assert_eq!(s.length(p) + s.length(r), s.length(w));
        prop_assert!(par.contains(p));
        prop_assert!(par.is_rep(r));
    }
}
