//! Restriction to and induction from standard parabolic subgroups.

use std::collections::HashMap;
use std::sync::Arc;

use num_rational::BigRational;

use crate::ayrep::{verify_relations, AYRep, Mode};
use crate::cells::Cell;
use crate::coxeter::{CoxeterSystem, Elem, Parabolic, ParabolicSubsystem};
use crate::error::{Error, Result};
use crate::matrix::ScalarMat;
use crate::scalars::{HeckeParams, Scalar};

/// A parabolic `P = ⟨J⟩` with its coset data and, for nonempty `J`,
/// the subsystem it generates.
#[derive(Clone, Debug)]
pub struct ParabolicContext {
    sys: Arc<CoxeterSystem>,
    pub parabolic: Parabolic,
    pub sub: Option<ParabolicSubsystem>,
    to_sub: HashMap<Elem, Elem>,
}

/// Outcome of moving a minimal coset representative by a generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    /// `rs` is again a minimal representative.
    InWJ(Elem),
    /// `rs = pr` with `p ∈ J`.
    Fold(usize),
}

impl ParabolicContext {
    pub fn new(sys: &Arc<CoxeterSystem>, j: &[usize]) -> Result<Self> {
        let parabolic = sys.minimal_coset_reps(j)?;
        let sub = if parabolic.j.is_empty() {
            None
        } else {
            Some(sys.parabolic_subsystem(&parabolic.j)?)
        };
        let to_sub = sub
            .as_ref()
            .map(|p| p.embed.iter().enumerate().map(|(i, &w)| (w, Elem(i as u32))).collect())
            .unwrap_or_default();
        Ok(ParabolicContext {
            sys: Arc::clone(sys),
            parabolic,
            sub,
            to_sub,
        })
    }

    pub fn system(&self) -> &Arc<CoxeterSystem> {
        &self.sys
    }

    pub fn j(&self) -> &[usize] {
        &self.parabolic.j
    }

    /// Minimal right-coset representatives `W^J`.
    pub fn reps(&self) -> &[Elem] {
        &self.parabolic.reps
    }

    /// The subsystem generated by `J`; fails for `J = ∅`.
    pub fn subsystem(&self) -> Result<&Arc<CoxeterSystem>> {
        self.sub
            .as_ref()
            .map(|p| &p.sub)
            .ok_or_else(|| Error::Precondition("J is empty".into()))
    }

    /// Parent element of a subsystem element.
    pub fn embed(&self, x: Elem) -> Elem {
        self.sub.as_ref().map_or(self.sys.identity(), |p| p.embed[x.idx()])
    }

    /// Subsystem element of a parent element of `P`.
    pub fn to_sub(&self, w: Elem) -> Option<Elem> {
        self.to_sub.get(&w).copied()
    }

    fn local_params(&self, params: &HeckeParams) -> Result<HeckeParams> {
        let j = self.j();
        HeckeParams::new(
            (0..j.len()).collect(),
            j.iter().map(|&s| params.q_for_generator(s).clone()).collect(),
        )
    }
}

pub fn step_classify(ctx: &ParabolicContext, r: Elem, s: usize) -> Result<Step> {
    let sys = ctx.system();
    sys.check(r)?;
    if !ctx.parabolic.is_rep(r) {
        return Err(Error::Precondition(format!("element {} is not in W^J", r.idx())));
    }
    if s >= sys.rank() {
        return Err(Error::UnknownGenerator(format!("{}", s + 1)));
    }
    let rs = sys.right_mul(r, s);
    if ctx.parabolic.is_rep(rs) {
        return Ok(Step::InWJ(rs));
    }
    let p = sys.mul(rs, sys.inverse(r));
    let g = (0..sys.rank())
        .find(|&g| sys.generator(g) == p)
        .expect("a fold multiplies by a generator of J");
    Ok(Step::Fold(g))
}

/// One block `K ∩ rP` of a restriction, with `r` its shortest element.
#[derive(Clone, Debug)]
pub struct RestrictionBlock {
    pub r: Elem,
    /// Members of `K ∩ rP`, ShortLex order.
    pub members: Vec<Elem>,
    /// The block as a representation of `P` on `r⁻¹(K ∩ rP)`; `None` for `J = ∅`.
    pub rep: Option<AYRep>,
}

impl RestrictionBlock {
    /// Character on the classes of `P` (for `J = ∅`, the single value `dim`).
    pub fn character(&self) -> Result<Vec<Scalar>> {
        match &self.rep {
            Some(r) => r.character(),
            None => Ok(vec![Scalar::int(self.members.len() as i64)]),
        }
    }
}

/// Split `K` along the left cosets `wP` and read off the sub-representations.
pub fn restrict_ay(rep: &AYRep, ctx: &ParabolicContext) -> Result<Vec<RestrictionBlock>> {
    let sys = rep.system();
    if !Arc::ptr_eq(sys, ctx.system()) {
        return Err(Error::Precondition("representation and parabolic use different systems".into()));
    }
    let mut blocks: Vec<(Elem, Vec<Elem>)> = Vec::new();
    let mut index: HashMap<Elem, usize> = HashMap::new();
    for &w in rep.cell.members() {
        // shortest element of wP: strip right descents in J
        let mut r = w;
        'strip: loop {
            for &s in ctx.j() {
                if sys.is_right_descent(r, s) {
                    r = sys.right_mul(r, s);
                    continue 'strip;
                }
            }
            break;
        }
        let k = *index.entry(r).or_insert_with(|| {
            blocks.push((r, Vec::new()));
            blocks.len() - 1
        });
        blocks[k].1.push(w);
    }
    blocks.sort_by_key(|b| b.0);
    blocks
        .into_iter()
        .map(|(r, members)| {
            let sub_rep = match &ctx.sub {
                None => None,
                Some(p) => {
                    let r_inv = sys.inverse(r);
                    let local: Vec<Elem> = members
                        .iter()
                        .map(|&w| ctx.to_sub(sys.mul(r_inv, w)).expect("block lies in rP"))
                        .collect();
                    let cell = Cell::new(&p.sub, local.iter().copied())?;
                    let n = cell.len();
                    let matrices = p
                        .j
                        .iter()
                        .map(|&s| {
                            let mut m = ScalarMat::zeros(n, n);
                            for (&w, &x) in members.iter().zip(&local) {
                                let i = cell.index_of(x).expect("member");
                                let row_w = rep.cell.index_of(w).expect("member");
                                for (&w2, &x2) in members.iter().zip(&local) {
                                    let k = cell.index_of(x2).expect("member");
                                    let col = rep.cell.index_of(w2).expect("member");
                                    m.set(i, k, rep.matrices[s].get(row_w, col).clone());
                                }
                            }
                            m
                        })
                        .collect();
                    Some(AYRep::from_matrices(&cell, matrices, rep.mode, ctx.local_params(rep.params())?)?)
                }
            };
            Ok(RestrictionBlock {
                r,
                members,
                rep: sub_rep,
            })
        })
        .collect()
}

/// Character of `rep` on the classes of `P`, at the ShortLex-first
/// member of each class.
pub fn restricted_character(rep: &AYRep, ctx: &ParabolicContext) -> Result<Vec<Scalar>> {
    match &ctx.sub {
        None => Ok(vec![Scalar::int(rep.dim() as i64)]),
        Some(p) => p
            .sub
            .conjugacy_classes()
            .iter()
            .map(|c| rep.trace_of(p.embed[c[0].idx()]))
            .collect(),
    }
}

/// An induced representation together with its source.
#[derive(Clone, Debug)]
pub struct InducedRep {
    pub source: AYRep,
    pub rep: AYRep,
}

impl InducedRep {
    /// The cell `D W^J` as `(m, r)` pairs in basis order.
    pub fn factors(&self, ctx: &ParabolicContext) -> Vec<(Elem, Elem)> {
        self.rep
            .cell
            .members()
            .iter()
            .map(|&w| ctx.parabolic.factor[w.idx()])
            .collect()
    }
}

/// Build the representation on `D W^J` from a minimal AY pair `(ψ, D)` of
/// `P`: `C_{mr} ↦ C_{mrs}` when `rs ∈ W^J`, otherwise `rs = pr` and
/// `C_{mr} ↦ a_p(m) C_{mr} + b_p(m) C_{mpr}`.
pub fn induce_ay(ctx: &ParabolicContext, psi: &AYRep) -> Result<InducedRep> {
    let sys = ctx.system();
    let sub = ctx
        .sub
        .as_ref()
        .ok_or_else(|| Error::Precondition("induction from the trivial parabolic needs J nonempty".into()))?;
    if !Arc::ptr_eq(psi.system(), &sub.sub) {
        return Err(Error::Precondition("source representation is not over the parabolic subsystem".into()));
    }
    if psi.mode != Mode::Q1 {
        return Err(Error::Unsupported("induction is implemented at q = 1".into()));
    }
    if !psi.is_minimal() {
        return Err(Error::NotMinimal);
    }
    let d: Vec<Elem> = psi.cell.members().iter().map(|&x| sub.embed[x.idx()]).collect();
    let members: Vec<Elem> = d
        .iter()
        .flat_map(|&m| ctx.reps().iter().map(move |&r| sys.mul(m, r)))
        .collect();
    let cell = Cell::new(sys, members.iter().copied())?;
    if cell.len() != members.len() {
        return Err(Error::Verification("product map D × W^J is not injective".into()));
    }
    let n = cell.len();
    let mut matrices = vec![ScalarMat::zeros(n, n); sys.rank()];
    for &x in cell.members() {
        let (m, r) = ctx.parabolic.factor[x.idx()];
        let i = cell.index_of(x).expect("member");
        let m_local = ctx.to_sub(m).expect("factor lies in P");
        for (s, mat) in matrices.iter_mut().enumerate() {
            match step_classify(ctx, r, s)? {
                Step::InWJ(rs) => {
                    let j = cell.index_of(sys.mul(m, rs)).expect("m·rs lies in D W^J");
                    mat.set(i, j, Scalar::one());
                }
                Step::Fold(p) => {
                    let pl = sub.local_generator(p).expect("fold generator lies in J");
                    mat.set(i, i, psi.a(pl, m_local).expect("m in D").clone());
                    let b = psi.b(pl, m_local).expect("m in D");
                    if !b.is_zero() {
                        let mp = sys.right_mul(m, p);
                        let j = cell.index_of(sys.mul(mp, r)).expect("m·p·r lies in D W^J");
                        mat.set(i, j, b);
                    }
                }
            }
        }
    }
    let rep = AYRep::from_matrices(&cell, matrices, Mode::Q1, sys.classical_params())?;
    let report = verify_relations(&rep);
    if !report.passed() {
        return Err(Error::RelationFailure(Box::new(report)));
    }
    Ok(InducedRep {
        source: psi.clone(),
        rep,
    })
}

/// `χ↑(g) = (1/|P|) Σ_{x ∈ W} χ⁰(x g x⁻¹)` with `χ⁰` the source character
/// extended by zero off `P`; one value per class of `W`.
pub fn induced_character_oracle(ctx: &ParabolicContext, psi: &AYRep) -> Result<Vec<Scalar>> {
    let sys = ctx.system();
    let sub = ctx.subsystem()?;
    let chi0: HashMap<Elem, Scalar> = sub
        .elements()
        .map(|x| Ok((ctx.embed(x), psi.trace_of(x)?)))
        .collect::<Result<_>>()?;
    let p_order = BigRational::from_integer((sub.order() as i64).into());
    sys.conjugacy_classes()
        .iter()
        .map(|class| {
            let g = class[0];
            let total = sys.elements().fold(Scalar::zero(), |acc, x| {
                let y = sys.mul(sys.mul(x, g), sys.inverse(x));
                match chi0.get(&y) {
                    Some(v) => &acc + v,
                    None => acc,
                }
            });
            Ok(&total * &Scalar::from_rational(p_order.recip()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ayrep::{build_ay_rep, Functional, Normalization};
    use crate::coxeter::build_system;

    fn sys(label: &str) -> Arc<CoxeterSystem> {
        build_system(&label.parse().unwrap(), 100_000).unwrap()
    }

    #[test]
    fn classify_steps() {
        let s = sys("A2");
        let ctx = ParabolicContext::new(&s, &[0]).unwrap();
        let e = s.identity();
        assert_eq!(step_classify(&ctx, e, 1).unwrap(), Step::InWJ(s.generator(1)));
        assert_eq!(step_classify(&ctx, e, 0).unwrap(), Step::Fold(0));
        let r = s.parse_element("s2s1").unwrap();
        assert_eq!(step_classify(&ctx, r, 1).unwrap(), Step::Fold(0));
        assert!(step_classify(&ctx, s.generator(0), 0).is_err());
    }

    #[test]
    fn induce_trivial_from_s2() {
        let s = sys("A2");
        let ctx = ParabolicContext::new(&s, &[0]).unwrap();
        let p = ctx.subsystem().unwrap();
        let psi = build_ay_rep(
            &Cell::new(p, [p.identity()]).unwrap(),
            &Functional::delta(p),
            Normalization::Snn,
            Mode::Q1,
        )
        .unwrap();
        let ind = induce_ay(&ctx, &psi).unwrap();
        assert_eq!(ind.rep.dim(), 3);
        assert!(ind.rep.is_minimal());
        let ch = ind.rep.character().unwrap();
        assert_eq!(ch, induced_character_oracle(&ctx, &psi).unwrap());
        // classes: e, transpositions, 3-cycles in system order
        let by_len: Vec<(usize, Scalar)> = s
            .conjugacy_classes()
            .iter()
            .map(|c| s.length(c[0]))
            .zip(ch)
            .collect();
        assert!(by_len.contains(&(0, Scalar::int(3))));
        assert!(by_len.contains(&(1, Scalar::int(1))));
        assert!(by_len.contains(&(2, Scalar::int(0))));
    }

    #[test]
    fn restrict_specht_21() {
        let s = sys("A2");
        let cell = Cell::new(&s, [s.identity(), s.generator(1)]).unwrap();
        let rep = build_ay_rep(&cell, &Functional::from_ints(&[1, -2]), Normalization::Snn, Mode::Q1).unwrap();
        let ctx = ParabolicContext::new(&s, &[0]).unwrap();
        let blocks = restrict_ay(&rep, &ctx).unwrap();
        assert_eq!(blocks.len(), 2);
        let vals: Vec<Scalar> = blocks
            .iter()
            .map(|b| b.rep.as_ref().unwrap().matrices[0].get(0, 0).clone())
            .collect();
        assert_eq!(vals, vec![Scalar::one(), Scalar::int(-1)]);
        let empty = ParabolicContext::new(&s, &[]).unwrap();
        assert_eq!(restrict_ay(&rep, &empty).unwrap().len(), 2);
        let full = ParabolicContext::new(&s, &[0, 1]).unwrap();
        let one = restrict_ay(&rep, &full).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].rep.as_ref().unwrap().matrices, rep.matrices);
    }

    fn check_against_oracle(label: &str, j: &[usize], members: &[&str], f: &[i64]) -> InducedRep {
        let s = sys(label);
        let ctx = ParabolicContext::new(&s, j).unwrap();
        let p = ctx.subsystem().unwrap();
        let cell = Cell::new(p, members.iter().map(|w| p.parse_element(w).unwrap())).unwrap();
        let psi = build_ay_rep(&cell, &Functional::from_ints(f), Normalization::Snn, Mode::Q1).unwrap();
        let ind = induce_ay(&ctx, &psi).unwrap();
        assert_eq!(ind.rep.dim(), psi.dim() * ctx.reps().len());
        assert_eq!(ind.rep.character().unwrap(), induced_character_oracle(&ctx, &psi).unwrap());
        ind
    }

    #[test]
    fn induce_from_larger_parabolics() {
        check_against_oracle("A3", &[0, 2], &["e"], &[1, 1]);
        check_against_oracle("A3", &[0, 1], &["e", "s2"], &[1, -2]);
        let d4 = check_against_oracle("D4", &[0, 1, 2], &["e"], &[1, 1, 1]);
        assert!(d4.rep.is_minimal());
    }

    #[test]
    fn non_minimal_source_is_rejected() {
        let s = sys("A2");
        let ctx = ParabolicContext::new(&s, &[0]).unwrap();
        let p = ctx.subsystem().unwrap();
        let cell = Cell::new(p, p.elements()).unwrap();
        let t = p.simple_reflection(0);
        let table = crate::ayrep::CoefficientTable {
            entries: std::collections::BTreeMap::from([(
                t,
                crate::ayrep::ReflCoeffs {
                    a_up: Scalar::one(),
                    a_down: Scalar::int(-1),
                    b_up: Scalar::zero(),
                    b_down: Scalar::zero(),
                },
            )]),
            normalization: None,
            params: p.classical_params(),
        };
        let psi = crate::ayrep::build_from_table(&cell, table, Mode::Q1).unwrap();
        assert!(matches!(induce_ay(&ctx, &psi), Err(Error::NotMinimal)));
    }
}
