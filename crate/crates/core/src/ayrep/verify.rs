use std::collections::HashSet;
use std::fmt;

use super::{AYRep, Mode};
use crate::cells::Direction;
use crate::coxeter::{Elem, Refl};
use crate::matrix::ScalarMat;
use crate::scalars::{d_coefficient, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticCheck {
    pub s: usize,
    pub holds: bool,
    /// First nonzero entry of `(ρ_s - 1)(ρ_s + q_s)`.
    pub first_failure: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BraidCheck {
    pub s: usize,
    pub t: usize,
    pub m: u32,
    pub holds: bool,
    pub first_failure: Option<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CosetKind {
    /// `ȧ₀ä₂ = ȧ₀ä₁ + ȧ₁ä₂` from the entries of one coset.
    Quadratic,
    /// `a_s(w) = a_t(w) ∈ {1, -q}` when both steps leave the cell.
    Boundary,
    /// `1/ȧ_{wstsw⁻¹} = 1/ȧ_{wsw⁻¹} + 1/ȧ_{wtw⁻¹}` at `q = 1`.
    Additive,
    /// `ḋ_{wstsw⁻¹} = ḋ_{wsw⁻¹} · ḋ_{wtw⁻¹}` in Hecke mode.
    Multiplicative,
}

impl CosetKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CosetKind::Quadratic => "eq10",
            CosetKind::Boundary => "boundary",
            CosetKind::Additive => "additive",
            CosetKind::Multiplicative => "multiplicative",
        }
    }
}

/// A scalar condition on one coset `w⟨s, t⟩` with `m(s, t) = 3`.
#[derive(Clone, Debug, PartialEq)]
pub struct CosetCheck {
    pub kind: CosetKind,
    pub w: Elem,
    pub s: usize,
    pub t: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationReport {
    pub quadratic: Vec<QuadraticCheck>,
    pub braid: Vec<BraidCheck>,
    /// Rows supported on `{w, ws}` only.
    pub shape_ok: bool,
    /// Per-coset scalar conditions; diagnostic.
    pub cosets: Vec<CosetCheck>,
    /// The table identities for each reflection (`ȧ + ä = 1 - q` and
    /// `ḃb̈ = (1-ȧ)(1-ä) ≠ 0` inside, `a⃗ ∈ {1, -q}` on the boundary).
    pub table_identities: Vec<(Refl, bool)>,
}

impl RelationReport {
    /// Quadratic and braid relations hold and the shape is right.
    pub fn passed(&self) -> bool {
        self.shape_ok && self.quadratic.iter().all(|c| c.holds) && self.braid.iter().all(|c| c.holds)
    }

    pub fn cosets_hold(&self) -> bool {
        self.cosets.iter().all(|c| c.holds)
    }

    pub fn cosets_of(&self, kind: CosetKind) -> impl Iterator<Item = &CosetCheck> {
        self.cosets.iter().filter(move |c| c.kind == kind)
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.shape_ok {
            parts.push("matrix shape".to_string());
        }
        for c in self.quadratic.iter().filter(|c| !c.holds) {
            parts.push(format!("quadratic relation for s{}", c.s + 1));
        }
        for c in self.braid.iter().filter(|c| !c.holds) {
            parts.push(format!("braid relation for (s{}, s{}), m = {}", c.s + 1, c.t + 1, c.m));
        }
        for c in self.cosets.iter().filter(|c| !c.holds) {
            parts.push(format!(
                "{} condition at w = element {} for (s{}, s{})",
                c.kind.as_str(),
                c.w.idx(),
                c.s + 1,
                c.t + 1
            ));
        }
        if parts.is_empty() {
            f.write_str("all relations hold")
        } else {
            write!(f, "{}", parts.join("; "))
        }
    }
}

fn first_nonzero(m: &ScalarMat) -> Option<(usize, usize)> {
    let z = ScalarMat::zeros(m.rows(), m.cols());
    m.first_difference(&z)
}

fn alternating(ms: &ScalarMat, mt: &ScalarMat, m: u32) -> ScalarMat {
    let mut out = ScalarMat::identity(ms.rows());
    for i in 0..m {
        out = out.mul(if i % 2 == 0 { ms } else { mt });
    }
    out
}

/// Check the Hecke quadratic relations, all braid relations, and the
/// per-coset scalar conditions.
pub fn verify_relations(rep: &AYRep) -> RelationReport {
    let sys = rep.system();
    let n = rep.dim();
    let id = ScalarMat::identity(n);
    let params = rep.params();
    let cell = &rep.cell;

    let shape_ok = rep.matrices.len() == sys.rank()
        && rep.matrices.iter().enumerate().all(|(s, m)| {
            cell.members().iter().enumerate().all(|(i, &w)| {
                let j = cell.index_of(sys.right_mul(w, s));
                m.nonzero_in_row(i).into_iter().all(|k| k == i || Some(k) == j)
            })
        });

    let quadratic = (0..sys.rank())
        .map(|s| {
            let q = params.q_for_generator(s);
            let m = &rep.matrices[s];
            let prod = m.sub(&id).mul(&m.add(&id.scale(q)));
            let first_failure = first_nonzero(&prod);
            QuadraticCheck {
                s,
                holds: first_failure.is_none(),
                first_failure,
            }
        })
        .collect();

    let mut braid = Vec::new();
    for s in 0..sys.rank() {
        for t in s + 1..sys.rank() {
            let m = sys.m(s, t);
            let lhs = alternating(&rep.matrices[s], &rep.matrices[t], m);
            let rhs = alternating(&rep.matrices[t], &rep.matrices[s], m);
            let first_failure = lhs.first_difference(&rhs);
            braid.push(BraidCheck {
                s,
                t,
                m,
                holds: first_failure.is_none(),
                first_failure,
            });
        }
    }

    RelationReport {
        quadratic,
        braid,
        shape_ok,
        cosets: coset_checks(rep),
        table_identities: table_identities(rep),
    }
}

fn coset_checks(rep: &AYRep) -> Vec<CosetCheck> {
    let sys = rep.system();
    let cell = &rep.cell;
    let one = Scalar::one();
    let a = |s: usize, w: Elem| rep.a(s, w).cloned().unwrap_or_else(Scalar::zero);
    let mut out = Vec::new();
    for s in 0..sys.rank() {
        for t in s + 1..sys.rank() {
            if sys.m(s, t) != 3 {
                continue;
            }
            let q = rep.params().q_for_generator(s).clone();
            let mut seen = HashSet::new();
            for &w in cell.members() {
                let base = sys.coset_shortest(w, s, t);
                if !seen.insert(base) {
                    continue;
                }
                let inside: Vec<Elem> = sys
                    .rank2_coset(base, s, t)
                    .into_iter()
                    .filter(|&x| cell.contains(x))
                    .collect();
                if inside.len() == 1 {
                    let x = inside[0];
                    let (x_s, x_t) = (a(s, x), a(t, x));
                    let allowed = x_s == one || x_s == -&q;
                    out.push(CosetCheck {
                        kind: CosetKind::Boundary,
                        w: x,
                        s,
                        t,
                        holds: x_s == x_t && allowed,
                    });
                    continue;
                }
                let x = *inside
                    .iter()
                    .find(|&&x| cell.step_inside(x, s) || cell.step_inside(x, t))
                    .expect("a convex coset piece of size two has an internal edge");
                let a0 = a(s, x);
                let a2 = a(t, x);
                let a1 = if cell.step_inside(x, s) {
                    a(t, sys.right_mul(x, s))
                } else {
                    a(s, sys.right_mul(x, t))
                };
                let dd = |v: &Scalar| &(&one - &q) - v;
                let lhs = &a0 * &dd(&a2);
                let rhs = &(&a0 * &dd(&a1)) + &(&a1 * &dd(&a2));
                out.push(CosetCheck {
                    kind: CosetKind::Quadratic,
                    w: x,
                    s,
                    t,
                    holds: lhs == rhs,
                });
                let r_s = sys.refl_of(base, s);
                let r_t = sys.refl_of(base, t);
                let r_sts = sys.refl_of(sys.right_mul(base, s), t);
                let up = |r: Refl| rep.table.get(r).map(|c| c.a_up.clone());
                let (Some(u_s), Some(u_t), Some(u_sts)) = (up(r_s), up(r_t), up(r_sts)) else {
                    continue;
                };
                match rep.mode {
                    Mode::Q1 => {
                        let (Ok(i_s), Ok(i_t), Ok(i_sts)) = (u_s.inv(), u_t.inv(), u_sts.inv()) else {
                            continue;
                        };
                        out.push(CosetCheck {
                            kind: CosetKind::Additive,
                            w: base,
                            s,
                            t,
                            holds: i_sts == &i_s + &i_t,
                        });
                    }
                    Mode::Hecke => {
                        let d = |v: &Scalar| d_coefficient(v, &q);
                        let (Ok(d_s), Ok(d_t), Ok(d_sts)) = (d(&u_s), d(&u_t), d(&u_sts)) else {
                            continue;
                        };
                        out.push(CosetCheck {
                            kind: CosetKind::Multiplicative,
                            w: base,
                            s,
                            t,
                            holds: d_sts == &d_s * &d_t,
                        });
                    }
                }
            }
        }
    }
    out
}

fn table_identities(rep: &AYRep) -> Vec<(Refl, bool)> {
    let sys = rep.system();
    let cell = &rep.cell;
    let one = Scalar::one();
    let mut out = Vec::new();
    for t in cell.internal().iter().chain(cell.boundary().iter()) {
        let t = Refl(t as u32);
        let Some(c) = rep.table.get(t) else {
            out.push((t, false));
            continue;
        };
        let q = rep.params().q_for_generator(sys.generator_for_reflection(t));
        let ok = if cell.internal().contains(t.idx()) {
            let p = (&one - &c.a_up) * (&one - &c.a_down);
            &c.a_up + &c.a_down == &one - q && &c.b_up * &c.b_down == p && !p.is_zero()
        } else {
            let a_out = match cell.out_direction(t) {
                Ok(Direction::Up) => &c.a_up,
                Ok(Direction::Down) => &c.a_down,
                Err(_) => {
                    out.push((t, false));
                    continue;
                }
            };
            *a_out == one || *a_out == -q
        };
        out.push((t, ok));
    }
    out
}
