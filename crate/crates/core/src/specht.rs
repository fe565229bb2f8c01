//! Symmetric-group families: Specht cells of standard tableaux and descent
//! representations, with an independent Young-orthogonal oracle.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::ayrep::{build_ay_rep, check_generic, son_rep, AYRep, Functional, Mode, Normalization};
use crate::cells::{a_cell, generalized_descent_class, Cell};
use crate::coxeter::perm::{cycle_type, is_type_a, permutation};
use crate::coxeter::{CoxeterSystem, Elem};
use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// Largest `n` accepted by tableau enumeration.
pub const SYT_MAX_N: usize = 8;
/// Largest `n` accepted by the float oracle.
pub const ORACLE_MAX_N: usize = 6;

/// A partition, parts in weakly decreasing order with no zeros.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.0[0];
        Partition((0..cols).map(|j| self.0.iter().filter(|&&r| r > j).count()).collect())
    }

    /// Hook length of every box, row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.0
            .iter()
            .enumerate()
            .map(|(i, &r)| (0..r).map(|j| (r - j - 1) + (conj.0[j] - i - 1) + 1).collect())
            .collect()
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split([',', ' '])
            .filter(|x| !x.is_empty())
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::NotPartition(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `n`, lexicographically increasing.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}

/// `n! / ∏ hooks`.
pub fn hook_length_count(shape: &Partition) -> u128 {
    let n = shape.size() as u128;
    let fact: u128 = (1..=n).product();
    let hooks: u128 = shape.hook_lengths().iter().flatten().map(|&h| h as u128).product();
    fact / hooks
}

/// A filling of a Young diagram by `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        Partition::new(rows.iter().map(Vec::len).collect())?;
        let mut all: Vec<usize> = rows.iter().flatten().copied().collect();
        all.sort_unstable();
        if all != (1..=all.len()).collect::<Vec<_>>() {
            return Err(Error::Precondition(format!("tableau {rows:?} is not filled by 1..=n")));
        }
        Ok(Tableau { rows })
    }

    /// The row-reading filling of `shape`.
    pub fn row_reading(shape: &Partition) -> Tableau {
        let mut next = 1;
        let rows = shape
            .parts()
            .iter()
            .map(|&r| {
                let row = (next..next + r).collect();
                next += r;
                row
            })
            .collect();
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// `(row, column)` of entry `i`, zero-based.
    pub fn position(&self, i: usize) -> Option<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(r, row)| row.iter().position(|&x| x == i).map(|c| (r, c)))
    }

    /// `c(i) = column - row`.
    pub fn content(&self, i: usize) -> Option<i64> {
        self.position(i).map(|(r, c)| c as i64 - r as i64)
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self.rows.windows(2).all(|p| p[1].iter().zip(&p[0]).all(|(lo, hi)| lo > hi));
        rows_ok && cols_ok
    }

    /// `Q^π`: every entry `i` replaced by `π(i)` (one-line `p`, values `1..=n`).
    pub fn permute(&self, p: &[usize]) -> Tableau {
        Tableau {
            rows: self.rows.iter().map(|r| r.iter().map(|&i| p[i - 1]).collect()).collect(),
        }
    }

    fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "[{}]", rows.join("|"))
    }
}

impl FromStr for Tableau {
    type Err = Error;

    /// Rows separated by `|` or `/`, entries by commas: `1,2|3`.
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .trim()
            .trim_matches(|c| c == '[' || c == ']')
            .split(['|', '/'])
            .map(|row| {
                row.split([',', ' '])
                    .filter(|x| !x.is_empty())
                    .map(|x| x.parse::<usize>().map_err(|_| Error::Parse(format!("bad tableau `{s}`"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(rows)
    }
}

/// Standard tableaux of `shape`, ordered by row-reading word.
pub fn syt_enumerate(shape: &Partition) -> Result<Vec<Tableau>> {
    let n = shape.size();
    if n > SYT_MAX_N {
        return Err(Error::GuardExceeded(format!("tableau enumeration is limited to n ≤ {SYT_MAX_N}")));
    }
    fn go(shape: &[usize], rows: &mut Vec<Vec<usize>>, k: usize, n: usize, out: &mut Vec<Tableau>) {
        if k > n {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            if len < shape[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(k);
                go(shape, rows, k + 1, n, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    go(shape.parts(), &mut vec![Vec::new(); shape.parts().len()], 1, n, &mut out);
    out.sort_by_key(Tableau::reading_word);
    Ok(out)
}

fn require_tableau_system(sys: &CoxeterSystem, q: &Tableau) -> Result<()> {
    if !is_type_a(sys) || sys.rank() + 1 != q.size() {
        return Err(Error::Precondition(format!(
            "tableau of size {} needs the system A{}",
            q.size(),
            q.size().saturating_sub(1)
        )));
    }
    if !q.is_standard() {
        return Err(Error::Precondition(format!("tableau {q} is not standard")));
    }
    Ok(())
}

fn inverse_perm(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v - 1] = i + 1;
    }
    inv
}

/// `K_Q = {π : Q^{π⁻¹} standard}`.
pub fn tableau_cell(sys: &Arc<CoxeterSystem>, q: &Tableau) -> Result<Cell> {
    require_tableau_system(sys, q)?;
    let mut members = Vec::new();
    for w in sys.elements() {
        let p = permutation(sys, w)?;
        if q.permute(&inverse_perm(&p)).is_standard() {
            members.push(w);
        }
    }
    Cell::new(sys, members)
}

/// `f_Q = (c(2) - c(1), …, c(n) - c(n-1))`.
pub fn hook_distance_vector(q: &Tableau) -> Result<Functional> {
    if !q.is_standard() {
        return Err(Error::Precondition(format!("tableau {q} is not standard")));
    }
    let c = |i| q.content(i).expect("entry of a tableau");
    Ok(Functional::from_ints(&(1..q.size()).map(|k| c(k + 1) - c(k)).collect::<Vec<_>>()))
}

/// The Specht representation on `K_Q` with functional `f_Q`.
pub fn specht_rep(sys: &Arc<CoxeterSystem>, q: &Tableau) -> Result<AYRep> {
    specht_rep_in(sys, q, Normalization::Snn, Mode::Q1)
}

pub fn specht_rep_in(sys: &Arc<CoxeterSystem>, q: &Tableau, norm: Normalization, mode: Mode) -> Result<AYRep> {
    let cell = tableau_cell(sys, q)?;
    let f = hook_distance_vector(q)?;
    build_ay_rep(&cell, &f, norm, mode)
}

/// `K^f(w)`: the `A_f`-cell of `w` with `A_f = {t : ⟨f, α_t⟩ = ±1}`.
pub fn functional_cell(sys: &Arc<CoxeterSystem>, f: &Functional, w: Elem) -> Result<Cell> {
    let mut a = sys.empty_reflection_set();
    for t in sys.reflections() {
        if f.pairing(sys, t)?.abs().is_one() {
            a.insert(t.idx());
        }
    }
    a_cell(sys, &a, w)
}

/// `{v : Des_S(v) = Des_S(w)}` with left descents.
pub fn descent_class(sys: &Arc<CoxeterSystem>, w: Elem) -> Result<Cell> {
    sys.check(w)?;
    let a = sys.simple_reflection_set();
    let d = sys.descent_set(w, &a)?;
    generalized_descent_class(sys, &a, &d)
}

/// The descent representation: `f = δ` on the descent class of `w`.
pub fn descent_rep(sys: &Arc<CoxeterSystem>, w: Elem) -> Result<AYRep> {
    descent_rep_in(sys, w, Normalization::Snn, Mode::Q1)
}

pub fn descent_rep_in(sys: &Arc<CoxeterSystem>, w: Elem, norm: Normalization, mode: Mode) -> Result<AYRep> {
    if !sys.is_crystallographic() || !sys.is_simply_laced() {
        return Err(Error::NotSimplyLaced);
    }
    let cell = descent_class(sys, w)?;
    build_ay_rep(&cell, &Functional::delta(sys), norm, mode)
}

/// Entrywise comparison of a descent representation with the orthogonal
/// form: diagonals `±1/ht`, products `ḃ b̈ = 1 - 1/ht²`, and the float
/// off-diagonals `√(1 - 1/ht²)`.
#[derive(Clone, Debug)]
pub struct YoungFormCheck {
    pub diagonal_ok: bool,
    pub product_ok: bool,
    pub son_max_error: f64,
    /// First `(element, generator)` where an exact check fails.
    pub first_failure: Option<(Elem, usize)>,
}

impl YoungFormCheck {
    pub fn passed(&self, tol: f64) -> bool {
        self.diagonal_ok && self.product_ok && self.son_max_error <= tol
    }
}

pub fn young_form_check(rep: &AYRep) -> Result<YoungFormCheck> {
    let sys = rep.system();
    let cell = &rep.cell;
    let son = son_rep(cell, &Functional::delta(sys))?;
    let mut out = YoungFormCheck {
        diagonal_ok: true,
        product_ok: true,
        son_max_error: 0.0,
        first_failure: None,
    };
    for (i, &v) in cell.members().iter().enumerate() {
        for s in 0..sys.rank() {
            let t = sys.refl_of(v, s);
            let ht = sys.height(t).ok_or(Error::NotSimplyLaced)?;
            let up = sys.length(sys.right_mul(v, s)) > sys.length(v);
            let inv_ht = BigRational::new(1.into(), ht.into());
            let want = Scalar::from_rational(if up { inv_ht.clone() } else { -inv_ht.clone() });
            if rep.a(s, v) != Some(&want) {
                out.diagonal_ok = false;
                out.first_failure.get_or_insert((v, s));
            }
            let vs = sys.right_mul(v, s);
            if let Some(j) = cell.index_of(vs) {
                let rhs = BigRational::one() - &inv_ht * &inv_ht;
                let lhs = &rep.b(s, v).unwrap_or_default() * &rep.b(s, vs).unwrap_or_default();
                if lhs != Scalar::from_rational(rhs.clone()) {
                    out.product_ok = false;
                    out.first_failure.get_or_insert((v, s));
                }
                let expect = rhs.to_f64().unwrap_or(f64::NAN).sqrt();
                out.son_max_error = out.son_max_error.max((son.matrices[s].get(i, j) - expect).abs());
            }
        }
    }
    Ok(out)
}

/// Classes of `S_n` by cycle type, lexicographically increasing, each with
/// its index in the system's class list.
pub fn cycle_type_classes(sys: &CoxeterSystem) -> Result<Vec<(Partition, usize)>> {
    let mut out = sys
        .conjugacy_classes()
        .iter()
        .enumerate()
        .map(|(i, c)| Ok((Partition(cycle_type(&permutation(sys, c[0])?)), i)))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// A character listed by cycle type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub classes: Vec<Partition>,
    pub values: Vec<Scalar>,
}

/// Character of a type-A representation in cycle-type order.
pub fn character_by_cycle_type(rep: &AYRep) -> Result<CharacterTable> {
    let ch = rep.character()?;
    let order = cycle_type_classes(rep.system())?;
    Ok(CharacterTable {
        classes: order.iter().map(|(p, _)| p.clone()).collect(),
        values: order.iter().map(|&(_, i)| ch[i].clone()).collect(),
    })
}

/// `(1/|W|) Σ_g χ(g) χ(g⁻¹)`, equal to one exactly for irreducibles.
pub fn character_norm(sys: &CoxeterSystem, chi: &[Scalar]) -> Result<Scalar> {
    let classes = sys.conjugacy_classes();
    if chi.len() != classes.len() {
        return Err(Error::Precondition("character length differs from the class count".into()));
    }
    let mut total = Scalar::zero();
    for (c, v) in classes.iter().zip(chi) {
        let inv = sys.class_of(sys.inverse(c[0]));
        let size = Scalar::int(c.len() as i64);
        total = &total + &(&size * &(v * &chi[inv]));
    }
    total.checked_div(&Scalar::int(sys.order() as i64))
}

/// Young's orthogonal form evaluated directly on permutations of `1..=n`.
#[derive(Clone, Debug)]
pub struct SpechtOracle {
    pub shape: Partition,
    pub dimension: u128,
    /// `(cycle type, average trace over the class)`, lexicographic.
    pub character: Vec<(Partition, f64)>,
}

impl SpechtOracle {
    /// Nearest integers to the float character.
    pub fn rounded(&self) -> Vec<i64> {
        self.character.iter().map(|(_, v)| v.round() as i64).collect()
    }

    /// Whether the float values are within `tol` of their rounding.
    pub fn is_integral(&self, tol: f64) -> bool {
        self.character.iter().all(|(_, v)| (v - v.round()).abs() <= tol)
    }
}

pub fn specht_oracle(shape: &Partition) -> Result<SpechtOracle> {
    let n = shape.size();
    if n > ORACLE_MAX_N {
        return Err(Error::GuardExceeded(format!("the orthogonal-form oracle is limited to n ≤ {ORACLE_MAX_N}")));
    }
    let tabs = syt_enumerate(shape)?;
    let dim = tabs.len();
    let index: BTreeMap<Tableau, usize> = tabs.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    // generator k swaps the entries k+1 and k+2
    let gens: Vec<Vec<Vec<f64>>> = (1..n)
        .map(|k| {
            let mut m = vec![vec![0.0; dim]; dim];
            for (i, t) in tabs.iter().enumerate() {
                let r = (t.content(k + 1).unwrap() - t.content(k).unwrap()) as f64;
                m[i][i] = 1.0 / r;
                let mut swap: Vec<usize> = (1..=n).collect();
                swap.swap(k - 1, k);
                let st = t.permute(&swap);
                if let Some(&j) = index.get(&st) {
                    m[i][j] = (1.0 - 1.0 / (r * r)).sqrt();
                }
            }
            m
        })
        .collect();
    let mul = |a: &[Vec<f64>], b: &[Vec<f64>]| -> Vec<Vec<f64>> {
        (0..dim)
            .map(|i| (0..dim).map(|j| (0..dim).map(|k| a[i][k] * b[k][j]).sum()).collect())
            .collect()
    };
    let mut sums: BTreeMap<Partition, (f64, usize)> = BTreeMap::new();
    let mut perm: Vec<usize> = (1..=n).collect();
    loop {
        // bubble-sort word of the one-line form
        let mut q = perm.clone();
        let mut m: Vec<Vec<f64>> = (0..dim).map(|i| (0..dim).map(|j| f64::from(i == j)).collect()).collect();
        while let Some(i) = (0..n - 1).find(|&i| q[i] > q[i + 1]) {
            q.swap(i, i + 1);
            m = mul(&m, &gens[i]);
        }
        let tr: f64 = (0..dim).map(|i| m[i][i]).sum();
        let e = sums.entry(Partition(cycle_type(&perm))).or_insert((0.0, 0));
        e.0 += tr;
        e.1 += 1;
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(SpechtOracle {
        shape: shape.clone(),
        dimension: hook_length_count(shape),
        character: sums.into_iter().map(|(p, (s, c))| (p, s / c as f64)).collect(),
    })
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("successor exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Compare an exact character with the oracle: exact after rounding and
/// within `tol` before.
pub fn matches_oracle(table: &CharacterTable, oracle: &SpechtOracle, tol: f64) -> bool {
    table.classes.len() == oracle.character.len()
        && table.classes.iter().zip(&table.values).zip(&oracle.character).all(|((c, v), (oc, ov))| {
            c == oc
                && v.as_integer().and_then(|x| x.to_i64()) == Some(ov.round() as i64)
                && (v.to_f64().unwrap_or(f64::NAN) - ov).abs() <= tol
        })
}

/// The genericity report of `f_Q` and the identity `K^{f_Q}(id) = K_Q`.
pub fn specht_certificate(sys: &Arc<CoxeterSystem>, q: &Tableau) -> Result<(bool, bool)> {
    let cell = tableau_cell(sys, q)?;
    let f = hook_distance_vector(q)?;
    let generic = check_generic(&cell, &f)?.generic;
    let same = functional_cell(sys, &f, sys.identity())?.members() == cell.members();
    Ok((generic, same))
}
