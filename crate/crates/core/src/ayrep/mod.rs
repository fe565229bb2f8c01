//! Abstract Young representations: coefficient tables, the functional
//! builder, relation checks, characters and functional recovery.

mod float;
mod generic;
mod recover;
mod verify;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cells::{is_convex, is_strongly_connected, tits_convex, Cell, Direction};
use crate::coxeter::{CoxeterSystem, Elem, Refl};
use crate::error::{Error, Result};
use crate::matrix::ScalarMat;
use crate::scalars::{q_integer, HeckeParams, Scalar};

pub use float::{son_rep, FloatRep};
pub use generic::{check_generic, Condition, GenericityReport, Violation};
pub use recover::{recover_functional, Recovered};
pub use verify::{verify_relations, BraidCheck, CosetCheck, CosetKind, QuadraticCheck, RelationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Normalization {
    /// `ḃ = b̈`; needs square roots, float builder only.
    Son,
    /// `b̈ = 1`.
    Snn,
    /// `ȧ + ḃ = ä + b̈ = 1`.
    Rsn,
    /// `ȧ + b̈ = ä + ḃ = 1`.
    Csn,
}

impl Normalization {
    pub const EXACT: [Normalization; 3] = [Normalization::Snn, Normalization::Rsn, Normalization::Csn];

    pub fn as_str(self) -> &'static str {
        match self {
            Normalization::Son => "SON",
            Normalization::Snn => "SNN",
            Normalization::Rsn => "RSN",
            Normalization::Csn => "CSN",
        }
    }

    /// `(ḃ, b̈)` for given `(ȧ, ä)`.
    pub fn b_pair(self, a_up: &Scalar, a_down: &Scalar) -> Result<(Scalar, Scalar)> {
        let one = Scalar::one();
        Ok(match self {
            Normalization::Snn => ((&one - a_up) * (&one - a_down), one),
            Normalization::Rsn => (&one - a_up, &one - a_down),
            Normalization::Csn => (&one - a_down, &one - a_up),
            Normalization::Son => {
                return Err(Error::Unsupported(
                    "SON needs square roots; use the floating-point builder".into(),
                ))
            }
        })
    }
}

impl std::str::FromStr for Normalization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "SON" => Ok(Normalization::Son),
            "SNN" => Ok(Normalization::Snn),
            "RSN" => Ok(Normalization::Rsn),
            "CSN" => Ok(Normalization::Csn),
            _ => Err(Error::Parse(format!("unknown normalization `{s}`"))),
        }
    }
}

impl fmt::Display for Normalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Group algebra, `q = 1`.
    Q1,
    /// Hecke algebra over `Q(q)`.
    Hecke,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Q1 => "q1",
            Mode::Hecke => "hecke",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "q1" | "1" => Ok(Mode::Q1),
            "hecke" | "q" => Ok(Mode::Hecke),
            _ => Err(Error::Parse(format!("unknown mode `{s}`"))),
        }
    }
}

/// A vector `f` of the root space, stored by its values on simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Functional {
    pub coords: Vec<BigRational>,
}

impl Functional {
    pub fn new(coords: Vec<BigRational>) -> Self {
        Functional { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Functional {
            coords: coords.iter().map(|&c| BigRational::from_integer(c.into())).collect(),
        }
    }

    /// The functional pairing every positive root with its height.
    pub fn delta(sys: &CoxeterSystem) -> Self {
        Functional::from_ints(&vec![1; sys.rank()])
    }

    pub fn neg(&self) -> Self {
        Functional {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    fn check_dim(&self, sys: &CoxeterSystem) -> Result<()> {
        if self.coords.len() != sys.rank() {
            return Err(Error::Precondition(format!(
                "functional has {} coordinates, system has rank {}",
                self.coords.len(),
                sys.rank()
            )));
        }
        Ok(())
    }

    /// `⟨f, α_t⟩`.
    pub fn pairing(&self, sys: &CoxeterSystem, t: Refl) -> Result<BigRational> {
        self.check_dim(sys)?;
        let root = sys
            .root(t)
            .ok_or_else(|| Error::Unsupported("pairing needs integer root coordinates".into()))?;
        Ok(self
            .coords
            .iter()
            .zip(root)
            .fold(BigRational::zero(), |acc, (c, &r)| acc + c * BigRational::from_integer(r.into())))
    }

    /// `⟨f, σ_w(α_s)⟩`, signed.
    pub fn signed_pairing(&self, sys: &CoxeterSystem, w: Elem, s: usize) -> Result<BigRational> {
        let (t, sign) = sys.signed_root_image(w, s);
        let p = self.pairing(sys, t)?;
        Ok(if sign > 0 { p } else { -p })
    }

    /// The functional `f'` with `⟨f', x⟩ = ⟨f, σ_v(x)⟩`.
    pub fn translate(&self, sys: &CoxeterSystem, v: Elem) -> Result<Functional> {
        let coords = (0..sys.rank())
            .map(|s| self.signed_pairing(sys, v, s))
            .collect::<Result<_>>()?;
        Ok(Functional { coords })
    }
}

impl fmt::Display for Functional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// The four coefficients attached to one reflection.
#[derive(Clone, Debug, PartialEq)]
pub struct ReflCoeffs {
    pub a_up: Scalar,
    pub a_down: Scalar,
    pub b_up: Scalar,
    pub b_down: Scalar,
}

/// Axiom (B) data: coefficients per reflection plus the Hecke parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientTable {
    pub entries: BTreeMap<Refl, ReflCoeffs>,
    /// Normalization the `b`-values were chosen with, if any.
    pub normalization: Option<Normalization>,
    pub params: HeckeParams,
}

impl CoefficientTable {
    pub fn get(&self, t: Refl) -> Option<&ReflCoeffs> {
        self.entries.get(&t)
    }

    /// `a⃗_t` for a boundary reflection of `cell`.
    pub fn a_out(&self, cell: &Cell, t: Refl) -> Result<Scalar> {
        let c = self.require(t)?;
        Ok(match cell.out_direction(t)? {
            Direction::Up => c.a_up.clone(),
            Direction::Down => c.a_down.clone(),
        })
    }

    fn require(&self, t: Refl) -> Result<&ReflCoeffs> {
        self.entries
            .get(&t)
            .ok_or_else(|| Error::Precondition(format!("coefficient table has no entry for reflection {}", t.idx())))
    }

    /// Specialize every entry at `q = x`.
    pub fn specialize(&self, x: &BigRational) -> Result<CoefficientTable> {
        let entries = self
            .entries
            .iter()
            .map(|(&t, c)| {
                Ok((
                    t,
                    ReflCoeffs {
                        a_up: c.a_up.specialize_scalar(x)?,
                        a_down: c.a_down.specialize_scalar(x)?,
                        b_up: c.b_up.specialize_scalar(x)?,
                        b_down: c.b_down.specialize_scalar(x)?,
                    },
                ))
            })
            .collect::<Result<_>>()?;
        Ok(CoefficientTable {
            entries,
            normalization: self.normalization,
            params: self.params.specialize(x)?,
        })
    }
}

/// An AY pair `(ρ, K)` with its matrices.
///
/// `matrices[s]` has row `w` equal to the coordinates of `ρ_s(C_w)`:
/// entry `(w, w)` is `a_s(w)` and `(w, ws)` is `b_s(w)`.
#[derive(Clone, Debug)]
pub struct AYRep {
    pub cell: Cell,
    pub table: CoefficientTable,
    pub matrices: Vec<ScalarMat>,
    pub mode: Mode,
    pub functional: Option<Functional>,
}

impl AYRep {
    pub fn system(&self) -> &Arc<CoxeterSystem> {
        self.cell.system()
    }

    pub fn dim(&self) -> usize {
        self.cell.len()
    }

    pub fn params(&self) -> &HeckeParams {
        &self.table.params
    }

    /// `a_s(w)`.
    pub fn a(&self, s: usize, w: Elem) -> Option<&Scalar> {
        let i = self.cell.index_of(w)?;
        Some(self.matrices[s].get(i, i))
    }

    /// `b_s(w)`; zero when `ws` leaves the cell.
    pub fn b(&self, s: usize, w: Elem) -> Option<Scalar> {
        let i = self.cell.index_of(w)?;
        let ws = self.system().right_mul(w, s);
        Some(match self.cell.index_of(ws) {
            Some(j) => self.matrices[s].get(i, j).clone(),
            None => Scalar::zero(),
        })
    }

    /// Row-action matrix of the element `x_1 ⋯ x_k`, namely
    /// `M_{x_k} ⋯ M_{x_1}`; it sends `C_w` to `ρ_{x_1}(⋯ρ_{x_k}(C_w))`.
    pub fn evaluate_word(&self, word: &[usize]) -> Result<ScalarMat> {
        let mut out = ScalarMat::identity(self.dim());
        for &s in word {
            if s >= self.matrices.len() {
                return Err(Error::UnknownGenerator(format!("{}", s + 1)));
            }
            out = self.matrices[s].mul(&out);
        }
        Ok(out)
    }

    pub fn trace_of(&self, w: Elem) -> Result<Scalar> {
        Ok(self.evaluate_word(&self.system().word(w))?.trace())
    }

    /// Character values on the conjugacy classes in system order, each
    /// taken at the ShortLex-first member.
    pub fn character(&self) -> Result<Vec<Scalar>> {
        self.system()
            .conjugacy_classes()
            .iter()
            .map(|class| self.trace_of(class[0]))
            .collect()
    }

    /// Character after substituting `q = x`.
    pub fn character_at(&self, x: &BigRational) -> Result<Vec<Scalar>> {
        self.specialize(x)?.character()
    }

    /// The representation with `q = x` substituted.
    pub fn specialize(&self, x: &BigRational) -> Result<AYRep> {
        let matrices = self
            .matrices
            .iter()
            .map(|m| m.try_map(|e| e.specialize_scalar(x)))
            .collect::<Result<_>>()?;
        Ok(AYRep {
            cell: self.cell.clone(),
            table: self.table.specialize(x)?,
            matrices,
            mode: if x.is_one() { Mode::Q1 } else { self.mode },
            functional: self.functional.clone(),
        })
    }

    /// Strong connectivity of the arcs `w → ws` with `b_s(w) ≠ 0`.
    pub fn is_minimal(&self) -> bool {
        is_strongly_connected(&self.cell, |w, s| self.b(s, w).is_some_and(|b| !b.is_zero()))
    }

    /// Each row of `M_s` is supported on `{w, ws}` and every entry agrees
    /// with the table lookup for `(wsw⁻¹, up/down)`.
    pub fn matches_table(&self) -> bool {
        let sys = self.system();
        self.cell.members().iter().enumerate().all(|(i, &w)| {
            (0..sys.rank()).all(|s| {
                let Ok(row) = entry_pair(&self.cell, &self.table, w, s) else {
                    return false;
                };
                let m = &self.matrices[s];
                let j = self.cell.index_of(sys.right_mul(w, s));
                (0..self.dim()).all(|k| {
                    let expect = if k == i {
                        row.0.clone()
                    } else if Some(k) == j {
                        row.1.clone()
                    } else {
                        Scalar::zero()
                    };
                    m.get(i, k) == &expect
                })
            })
        })
    }
}

/// `(a_s(w), b_s(w))` from the table.
fn entry_pair(cell: &Cell, table: &CoefficientTable, w: Elem, s: usize) -> Result<(Scalar, Scalar)> {
    let sys = cell.system();
    let t = sys.refl_of(w, s);
    let c = table.require(t)?;
    let up = sys.length(sys.right_mul(w, s)) > sys.length(w);
    let inside = cell.step_inside(w, s);
    let (a, b) = if up { (&c.a_up, &c.b_up) } else { (&c.a_down, &c.b_down) };
    Ok((a.clone(), if inside { b.clone() } else { Scalar::zero() }))
}

/// Read an Axiom (B) table off explicit matrices; fails when two entries
/// for the same `(reflection, direction)` disagree or a row has support
/// outside `{w, ws}`. Unobserved directions of boundary reflections get
/// `ä = 1 - q - ȧ` (or the reverse) and `b = 0`.
pub fn table_from_matrices(cell: &Cell, matrices: &[ScalarMat], params: HeckeParams) -> Result<CoefficientTable> {
    let sys = cell.system();
    if matrices.len() != sys.rank() {
        return Err(Error::Precondition("one matrix per generator is required".into()));
    }
    let mut seen: BTreeMap<(Refl, bool), (Scalar, Scalar)> = BTreeMap::new();
    for (i, &w) in cell.members().iter().enumerate() {
        for (s, m) in matrices.iter().enumerate() {
            let ws = sys.right_mul(w, s);
            let j = cell.index_of(ws);
            if m.nonzero_in_row(i).into_iter().any(|k| k != i && Some(k) != j) {
                return Err(Error::Verification(format!(
                    "row of element {} in generator s{} leaves span(C_w, C_ws)",
                    w.idx(),
                    s + 1
                )));
            }
            let key = (sys.refl_of(w, s), sys.length(ws) > sys.length(w));
            let val = (
                m.get(i, i).clone(),
                j.map_or_else(Scalar::zero, |j| m.get(i, j).clone()),
            );
            match seen.get(&key) {
                Some(old) if old != &val => {
                    return Err(Error::Verification(format!(
                        "coefficients of reflection {} depend on more than its direction",
                        key.0.idx()
                    )))
                }
                Some(_) => {}
                None => {
                    seen.insert(key, val);
                }
            }
        }
    }
    let one = Scalar::one();
    let mut entries = BTreeMap::new();
    let refls: std::collections::BTreeSet<Refl> = seen.keys().map(|k| k.0).collect();
    for t in refls {
        let q = params.q_for_generator(sys.generator_for_reflection(t));
        let up = seen.get(&(t, true)).cloned();
        let down = seen.get(&(t, false)).cloned();
        let (up, down) = match (up, down) {
            (Some(u), Some(d)) => (u, d),
            (Some(u), None) => {
                let a = &(&one - q) - &u.0;
                (u, (a, Scalar::zero()))
            }
            (None, Some(d)) => {
                let a = &(&one - q) - &d.0;
                ((a, Scalar::zero()), d)
            }
            (None, None) => unreachable!("reflection came from an observed key"),
        };
        entries.insert(
            t,
            ReflCoeffs {
                a_up: up.0,
                a_down: down.0,
                b_up: up.1,
                b_down: down.1,
            },
        );
    }
    Ok(CoefficientTable {
        entries,
        normalization: None,
        params,
    })
}

impl AYRep {
    /// Wrap explicit matrices, reading the table off them; relations are
    /// not checked.
    pub fn from_matrices(cell: &Cell, matrices: Vec<ScalarMat>, mode: Mode, params: HeckeParams) -> Result<AYRep> {
        require_convex(cell)?;
        let table = table_from_matrices(cell, &matrices, params)?;
        Ok(AYRep {
            cell: cell.clone(),
            table,
            matrices,
            mode,
            functional: None,
        })
    }
}

/// Assemble the generator matrices of Axiom (B).
pub fn assemble(cell: &Cell, table: &CoefficientTable) -> Result<Vec<ScalarMat>> {
    let sys = cell.system();
    let n = cell.len();
    (0..sys.rank())
        .map(|s| {
            let mut m = ScalarMat::zeros(n, n);
            for (i, &w) in cell.members().iter().enumerate() {
                let (a, b) = entry_pair(cell, table, w, s)?;
                m.set(i, i, a);
                if let Some(j) = cell.index_of(sys.right_mul(w, s)) {
                    m.set(i, j, b);
                }
            }
            Ok(m)
        })
        .collect()
}

fn require_convex(cell: &Cell) -> Result<()> {
    if cell.is_empty() {
        return Err(Error::EmptyCell);
    }
    let sys = cell.system();
    if !tits_convex(sys, cell.members())? {
        let witness = is_convex(sys, cell.members())?.witness.map_or(0, Elem::idx);
        return Err(Error::NotConvex { witness });
    }
    Ok(())
}

fn require_functional_system(sys: &CoxeterSystem) -> Result<()> {
    if !sys.is_crystallographic() || !sys.is_simply_laced() {
        return Err(Error::NotSimplyLaced);
    }
    Ok(())
}

/// `ȧ_t` from a pairing value: `1/p` at `q = 1`, `1/[p]_q` otherwise.
pub fn a_from_pairing(p: &BigRational, mode: Mode) -> Result<Scalar> {
    match mode {
        Mode::Q1 => Scalar::from_rational(p.clone()).inv(),
        Mode::Hecke => {
            if !p.is_integer() {
                return Err(Error::Precondition(format!(
                    "Hecke mode needs integer pairings, found {p}"
                )));
            }
            let k: i64 = p
                .to_integer()
                .try_into()
                .map_err(|_| Error::Precondition(format!("pairing {p} out of range")))?;
            q_integer(k).inv()
        }
    }
}

fn mode_params(sys: &CoxeterSystem, mode: Mode) -> HeckeParams {
    match mode {
        Mode::Q1 => sys.classical_params(),
        Mode::Hecke => sys.hecke_params(),
    }
}

/// The table `ȧ_t = 1/⟨f, α_t⟩` (or `1/[⟨f, α_t⟩]_q`) with `b` chosen by
/// `norm`; genericity is not checked here.
pub fn functional_table(cell: &Cell, f: &Functional, norm: Normalization, mode: Mode) -> Result<CoefficientTable> {
    let sys = cell.system();
    let params = mode_params(sys, mode);
    let mut entries = BTreeMap::new();
    for t in cell.internal().iter().chain(cell.boundary().iter()) {
        let t = Refl(t as u32);
        if entries.contains_key(&t) {
            continue;
        }
        let q = params.q_for_generator(sys.generator_for_reflection(t));
        let a_up = a_from_pairing(&f.pairing(sys, t)?, mode)?;
        let a_down = &(&Scalar::one() - q) - &a_up;
        let (b_up, b_down) = if cell.internal().contains(t.idx()) {
            norm.b_pair(&a_up, &a_down)?
        } else {
            (Scalar::zero(), Scalar::zero())
        };
        entries.insert(
            t,
            ReflCoeffs {
                a_up,
                a_down,
                b_up,
                b_down,
            },
        );
    }
    Ok(CoefficientTable {
        entries,
        normalization: Some(norm),
        params,
    })
}

/// The AY representation determined by a generic functional.
///
/// Works on any convex cell; when the identity is not a member the sign
/// convention for genericity follows the direction of each boundary edge.
pub fn build_ay_rep(cell: &Cell, f: &Functional, norm: Normalization, mode: Mode) -> Result<AYRep> {
    let sys = cell.system();
    require_functional_system(sys)?;
    f.check_dim(sys)?;
    if norm == Normalization::Son {
        return Err(Error::Unsupported(
            "SON needs square roots; use the floating-point builder".into(),
        ));
    }
    let report = check_generic(cell, f)?;
    if !report.generic {
        return Err(Error::NotGeneric(Box::new(report)));
    }
    if mode == Mode::Hecke && !f.is_integral() {
        return Err(Error::Precondition("Hecke mode needs an integral functional".into()));
    }
    let table = functional_table(cell, f, norm, mode)?;
    let mut rep = build_from_table(cell, table, mode)?;
    rep.functional = Some(f.clone());
    Ok(rep)
}

/// Assemble from an explicit table and verify the defining relations.
pub fn build_from_table(cell: &Cell, table: CoefficientTable, mode: Mode) -> Result<AYRep> {
    let rep = assemble_unchecked(cell, table, mode)?;
    let report = verify_relations(&rep);
    if !report.passed() {
        return Err(Error::RelationFailure(Box::new(report)));
    }
    Ok(rep)
}

/// Assemble without verifying; for diagnostics and negative tests.
pub fn assemble_unchecked(cell: &Cell, table: CoefficientTable, mode: Mode) -> Result<AYRep> {
    require_convex(cell)?;
    if table.params.generator_class().len() != cell.system().rank() {
        return Err(Error::Precondition("Hecke parameters do not match the system rank".into()));
    }
    let matrices = assemble(cell, &table)?;
    Ok(AYRep {
        cell: cell.clone(),
        table,
        matrices,
        mode,
        functional: None,
    })
}

/// Build on the translate `v⁻¹K` (which contains the identity) with the
/// translated functional, `v` the shortest member of `K`.
pub fn build_by_translation(cell: &Cell, f: &Functional, norm: Normalization) -> Result<(Elem, AYRep)> {
    let sys = cell.system();
    let v = *cell.members().first().ok_or(Error::EmptyCell)?;
    let shifted = cell.translate(sys.inverse(v))?;
    let g = f.translate(sys, v)?;
    Ok((v, build_ay_rep(&shifted, &g, norm, Mode::Q1)?))
}

/// Outcome of comparing characters across normalizations.
#[derive(Clone, Debug)]
pub struct BIndependence {
    pub equal: bool,
    pub characters: Vec<(Normalization, Vec<Scalar>)>,
    /// First class where two exact characters differ.
    pub differing_class: Option<usize>,
    /// Largest deviation of the float SON character from the first exact one.
    pub son_deviation: Option<f64>,
}

/// Tolerance for float SON comparisons.
pub const FLOAT_TOL: f64 = 1e-9;

/// Build the q = 1 representation under each normalization and compare
/// characters; SON is built in floating point and compared with tolerance.
pub fn b_independence_check(cell: &Cell, f: &Functional, norms: &[Normalization]) -> Result<BIndependence> {
    let mut characters = Vec::new();
    let mut son = None;
    for &n in norms {
        if n == Normalization::Son {
            son = Some(son_rep(cell, f)?.character());
        } else {
            characters.push((n, build_ay_rep(cell, f, n, Mode::Q1)?.character()?));
        }
    }
    let mut differing_class = None;
    if let Some((_, first)) = characters.first() {
        for (_, ch) in &characters[1..] {
            if let Some(c) = (0..first.len()).find(|&c| first[c] != ch[c]) {
                differing_class = Some(c);
                break;
            }
        }
    }
    let son_deviation = match (&son, characters.first()) {
        (Some(s), Some((_, first))) => Some(
            s.iter()
                .zip(first)
                .map(|(x, y)| (x - y.to_f64().unwrap_or(f64::NAN)).abs())
                .fold(0.0, f64::max),
        ),
        _ => None,
    };
    let equal = differing_class.is_none() && son_deviation.is_none_or(|d| d <= FLOAT_TOL);
    Ok(BIndependence {
        equal,
        characters,
        differing_class,
        son_deviation,
    })
}

/// Integer functionals in `[-bound, bound]^n` that are generic for the
/// `~_A` cell of the identity they determine; used to probe how many
/// functional-induced representations a cell carries.
pub fn functional_search(sys: &Arc<CoxeterSystem>, cell: &Cell, bound: i64) -> Result<Vec<Functional>> {
    require_functional_system(sys)?;
    let n = sys.rank();
    let mut out = Vec::new();
    let mut cur = vec![-bound; n];
    loop {
        let f = Functional::from_ints(&cur);
        if check_generic(cell, &f)?.generic {
            out.push(f);
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(out);
            }
            if cur[i] < bound {
                cur[i] += 1;
                break;
            }
            cur[i] = -bound;
            i += 1;
        }
    }
}
