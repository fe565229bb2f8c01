use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{require_convex, require_functional_system, Functional};
use crate::cells::Cell;
use crate::coxeter::{Elem, Refl};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    /// Internal pairing lies in `{0, 1, -1}`.
    Internal,
    /// Boundary pairing is not `±1`.
    Boundary,
    /// A doubly-exiting rank-2 coset with unequal signed boundary values.
    Coset,
}

impl Condition {
    pub fn as_str(self) -> &'static str {
        match self {
            Condition::Internal => "i",
            Condition::Boundary => "ii",
            Condition::Coset => "iii",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub condition: Condition,
    pub reflections: Vec<Refl>,
    pub values: Vec<BigRational>,
    /// The coset element for condition (iii).
    pub element: Option<Elem>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenericityReport {
    pub generic: bool,
    pub violations: Vec<Violation>,
    /// `(w, s, ε_{w,s})` for every pair met in condition (iii).
    pub epsilon_signs: Vec<(Elem, usize, i8)>,
}

impl fmt::Display for GenericityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generic {
            return f.write_str("generic");
        }
        let parts: Vec<String> = self
            .violations
            .iter()
            .map(|v| {
                let ts: Vec<String> = v.reflections.iter().map(|t| t.idx().to_string()).collect();
                let vs: Vec<String> = v.values.iter().map(|x| x.to_string()).collect();
                format!("({}) reflections [{}] values [{}]", v.condition.as_str(), ts.join(","), vs.join(","))
            })
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Genericity of `f` for a convex cell, with boundary signs
/// `ε_{w,s} = +1` iff `ℓ(ws) > ℓ(w)` in condition (iii).
pub fn check_generic(cell: &Cell, f: &Functional) -> Result<GenericityReport> {
    let sys = cell.system();
    require_functional_system(sys)?;
    f.check_dim(sys)?;
    require_convex(cell)?;
    let one = BigRational::one();
    let mut violations = Vec::new();
    for t in cell.internal().iter() {
        let t = Refl(t as u32);
        let p = f.pairing(sys, t)?;
        if p.is_zero() || p.abs() == one {
            violations.push(Violation {
                condition: Condition::Internal,
                reflections: vec![t],
                values: vec![p],
                element: None,
            });
        }
    }
    for t in cell.boundary().iter() {
        let t = Refl(t as u32);
        let p = f.pairing(sys, t)?;
        if p.abs() != one {
            violations.push(Violation {
                condition: Condition::Boundary,
                reflections: vec![t],
                values: vec![p],
                element: None,
            });
        }
    }
    let mut epsilon_signs = Vec::new();
    let eps = |w: Elem, s: usize| -> i8 {
        if sys.length(sys.right_mul(w, s)) > sys.length(w) {
            1
        } else {
            -1
        }
    };
    for &w in cell.members() {
        for s in 0..sys.rank() {
            for t in s + 1..sys.rank() {
                if sys.m(s, t) != 3 || cell.step_inside(w, s) || cell.step_inside(w, t) {
                    continue;
                }
                epsilon_signs.push((w, s, eps(w, s)));
                epsilon_signs.push((w, t, eps(w, t)));
                let ps = f.signed_pairing(sys, w, s)?;
                let pt = f.signed_pairing(sys, w, t)?;
                if ps != pt {
                    violations.push(Violation {
                        condition: Condition::Coset,
                        reflections: vec![sys.refl_of(w, s), sys.refl_of(w, t)],
                        values: vec![ps, pt],
                        element: Some(w),
                    });
                }
            }
        }
    }
    Ok(GenericityReport {
        generic: violations.is_empty(),
        violations,
        epsilon_signs,
    })
}
