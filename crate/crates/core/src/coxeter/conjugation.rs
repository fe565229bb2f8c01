//! Sequences of `(element, generator)` pairs joining two presentations of
//! the same reflection by braid moves.

use super::{CoxeterSystem, Elem};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugationPath {
    /// `(w_1, s_1), …, (w_k, s_k)`; the last pair is the target.
    pub pairs: Vec<(Elem, usize)>,
    pub epsilon: u8,
    /// `(ṡ_i, m_i)` between consecutive pairs.
    pub braid_moves: Vec<(usize, u32)>,
}

impl CoxeterSystem {
    /// Path from `(w, s)` to `(wt, st)`; both must give the same reflection
    /// `w s w⁻¹ = wt st wt⁻¹`.
    ///
    /// Each step takes `y = wt⁻¹ w_i s_i`, picks the smallest right descent
    /// `ṡ ≠ s_i` of `y` and jumps to the shortest element of `y⟨s_i, ṡ⟩`.
    pub fn conjugation_path(
        &self,
        (w, s): (Elem, usize),
        (wt, st): (Elem, usize),
    ) -> Result<ConjugationPath> {
        self.check(w)?;
        self.check(wt)?;
        if s >= self.rank() || st >= self.rank() {
            return Err(Error::UnknownGenerator(format!("{}", s.max(st) + 1)));
        }
        if self.refl_of(w, s) != self.refl_of(wt, st) {
            return Err(Error::ReflectionMismatch);
        }
        let wt_inv = self.inverse(wt);
        let x0 = self.mul(wt_inv, w);
        let epsilon = u8::from(self.is_right_descent(x0, s));
        let mut cur = if epsilon == 1 { self.right_mul(w, s) } else { w };
        let mut gen = s;
        let mut pairs = vec![(cur, gen)];
        let mut braid_moves = Vec::new();
        loop {
            let x = self.mul(wt_inv, cur);
            if x == self.identity() {
                break;
            }
            let y = self.right_mul(x, gen);
            let dot = (0..self.rank())
                .find(|&g| g != gen && self.is_right_descent(y, g))
                .ok_or_else(|| {
                    Error::Verification("no braid move available on a conjugation path".into())
                })?;
            let m = self.m(gen, dot);
            let r = self.coset_shortest(y, gen, dot);
            cur = self.mul(wt, r);
            gen = if m % 2 == 0 { gen } else { dot };
            pairs.push((cur, gen));
            braid_moves.push((dot, m));
        }
        Ok(ConjugationPath {
            pairs,
            epsilon,
            braid_moves,
        })
    }
}

/// Check every defining condition of a conjugation path; returns a
/// description of the first failure.
pub fn validate_conjugation_path(
    sys: &CoxeterSystem,
    (w, s): (Elem, usize),
    (wt, st): (Elem, usize),
    path: &ConjugationPath,
) -> std::result::Result<(), String> {
    let k = path.pairs.len();
    if k == 0 || path.braid_moves.len() + 1 != k {
        return Err("path shape is inconsistent".into());
    }
    if path.pairs[k - 1] != (wt, st) {
        return Err("path does not end at the target pair".into());
    }
    let t = sys.refl_of(w, s);
    let wt_inv = sys.inverse(wt);
    let rel = |u: Elem| sys.mul(wt_inv, u);
    for (i, &(wi, si)) in path.pairs.iter().enumerate() {
        if sys.refl_of(wi, si) != t {
            return Err(format!("pair {i} gives a different reflection"));
        }
        let x = rel(wi);
        if sys.length(x) >= sys.length(sys.right_mul(x, si)) {
            return Err(format!("pair {i} is not ascending in s_i"));
        }
    }
    // Item 2.
    let expected_eps = u8::from(sys.length(rel(w)) > sys.length(rel(sys.right_mul(w, s))));
    if path.epsilon != expected_eps {
        return Err("epsilon does not match the length comparison".into());
    }
    let w1 = if path.epsilon == 1 { sys.right_mul(w, s) } else { w };
    if path.pairs[0] != (w1, s) {
        return Err("first pair is not (w s^ε, s)".into());
    }
    // Items 3 and 4.
    let mut expr: Vec<usize> = if path.epsilon == 1 { vec![s] } else { Vec::new() };
    for i in 0..k - 1 {
        let (wi, si) = path.pairs[i];
        let (wn, sn) = path.pairs[i + 1];
        let (dot, m) = path.braid_moves[i];
        if dot == si || sys.m(si, dot) != m {
            return Err(format!("braid move {i} has the wrong generator or label"));
        }
        let expected_next = if m % 2 == 0 { si } else { dot };
        if sn != expected_next {
            return Err(format!("s_{} does not follow the parity rule", i + 2));
        }
        let alt: Vec<usize> = (0..m as usize - 1)
            .map(|j| if j % 2 == 0 { dot } else { si })
            .collect();
        let step = sys.mul(sys.inverse(wi), wn);
        if sys.word_to_element(&alt).map_err(|e| e.to_string())? != step
            || sys.length(step) != alt.len()
        {
            return Err(format!("w_{0}⁻¹ w_{1} is not the alternating product", i + 1, i + 2));
        }
        let (li, ln) = (sys.length(rel(wi)), sys.length(rel(wn)));
        if li < ln || li - ln != m as usize - 1 {
            return Err(format!("length does not drop by m_{} - 1", i + 1));
        }
        expr.extend(alt);
    }
    if sys.length(rel(path.pairs[k - 1].0)) != 0 {
        return Err("path does not reach relative length zero".into());
    }
    // The concatenated factors form a reduced expression of w⁻¹ wt.
    let target = sys.mul(sys.inverse(w), wt);
    let got = sys.word_to_element(&expr).map_err(|e| e.to_string())?;
    if got != target || sys.length(target) != expr.len() {
        return Err("factors do not give a reduced expression of w⁻¹ w̃".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::super::*;
    use super::*;

    fn check_all(sys: &CoxeterSystem) -> usize {
        let mut count = 0;
        let pairs: Vec<(Elem, usize)> = sys
            .elements()
            .flat_map(|w| (0..sys.rank()).map(move |s| (w, s)))
            .collect();
        for &a in &pairs {
            for &b in &pairs {
                if sys.refl_of(a.0, a.1) != sys.refl_of(b.0, b.1) {
                    continue;
                }
                let p = sys.conjugation_path(a, b).unwrap();
                validate_conjugation_path(sys, a, b, &p).unwrap();
                count += 1;
            }
        }
        count
    }

    #[test]
    fn trivial_and_small_paths() {
        let s3 = build_system(&SystemSpec::Typed('A', 2), 100).unwrap();
        let e = s3.identity();
        let p = s3.conjugation_path((e, 0), (e, 0)).unwrap();
        assert_eq!((p.pairs.len(), p.epsilon), (1, 0));
        assert!(p.braid_moves.is_empty());
        let s1 = s3.generator(0);
        let p = s3.conjugation_path((e, 0), (s1, 0)).unwrap();
        assert_eq!((p.pairs.len(), p.epsilon), (1, 1));
        assert!(matches!(
            s3.conjugation_path((e, 0), (e, 1)),
            Err(Error::ReflectionMismatch)
        ));
    }

    #[test]
    fn all_pairs_in_a3_and_dihedral() {
        let a3 = build_system(&SystemSpec::Typed('A', 3), 100).unwrap();
        assert!(check_all(&a3) > 0);
        let i6 = build_system(&SystemSpec::Dihedral(6), 100).unwrap();
        assert!(check_all(&i6) > 0);
        let b3 = build_system(&SystemSpec::Typed('B', 3), 100).unwrap();
        assert!(check_all(&b3) > 0);
    }
}
