//! Finite Coxeter systems: enumeration, lengths, reflections and roots.

mod conjugation;
mod cosets;
mod model;
pub mod perm;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::BigRational;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::scalars::{HeckeParams, Scalar};

pub use conjugation::{validate_conjugation_path, ConjugationPath};
pub use cosets::{Parabolic, ParabolicSubsystem};
use model::{Crystallographic, Dihedral, Model};

/// Index of an element in the ShortLex element table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem(pub u32);

/// Index of a reflection, equivalently of its positive root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Refl(pub u32);

impl Elem {
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

impl Refl {
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

/// Default enumeration guard; `AY_MAX_ORDER` overrides it.
pub const DEFAULT_MAX_ORDER: usize = 1_000_000;

pub fn default_max_order() -> usize {
    std::env::var("AY_MAX_ORDER")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&n: &usize| n > 0)
        .unwrap_or(DEFAULT_MAX_ORDER)
}

/// How to build a system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SystemSpec {
    /// Crystallographic type: family letter `A..G` and rank.
    Typed(char, usize),
    /// Dihedral group `I2(m)`.
    Dihedral(u32),
    /// Explicit Coxeter matrix.
    Matrix(Vec<Vec<u32>>),
    /// Generalized Cartan matrix; used for parabolic subsystems of
    /// crystallographic systems.
    Cartan(Vec<Vec<i64>>),
}

impl FromStr for SystemSpec {
    type Err = Error;

    /// Accepts labels such as `A3`, `D4`, `E6`, `I2(5)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Unsupported(format!("unrecognized type label `{s}`"));
        let upper = s.to_ascii_uppercase();
        if let Some(rest) = upper.strip_prefix("I2") {
            let inner = rest
                .trim_start_matches(['(', '_'])
                .trim_end_matches(')');
            let m: u32 = inner.parse().map_err(|_| bad())?;
            return Ok(SystemSpec::Dihedral(m));
        }
        let mut chars = upper.chars();
        let family = chars.next().ok_or_else(bad)?;
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        let ok = match family {
            'A' => rank >= 1,
            'B' => rank >= 2,
            'D' => rank >= 4,
            'E' => (6..=8).contains(&rank),
            'F' => rank == 4,
            'G' => rank == 2,
            _ => false,
        };
        if !ok {
            return Err(bad());
        }
        Ok(SystemSpec::Typed(family, rank))
    }
}

/// Coxeter matrix of a typed system, generators in Bourbaki-style order.
/// For `B_n` the label 4 sits on the edge `s1 - s2`.
pub fn typed_coxeter_matrix(family: char, rank: usize) -> Vec<Vec<u32>> {
    let n = rank;
    let mut m = vec![vec![2u32; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    let mut edge = |i: usize, j: usize, v: u32| {
        m[i][j] = v;
        m[j][i] = v;
    };
    match family {
        'A' => (0..n - 1).for_each(|i| edge(i, i + 1, 3)),
        'B' => {
            edge(0, 1, 4);
            (1..n - 1).for_each(|i| edge(i, i + 1, 3));
        }
        'D' => {
            (0..n - 2).for_each(|i| edge(i, i + 1, 3));
            edge(n - 3, n - 1, 3);
        }
        'E' => {
            edge(0, 2, 3);
            edge(1, 3, 3);
            (2..n - 1).for_each(|i| edge(i, i + 1, 3));
        }
        'F' => {
            edge(0, 1, 3);
            edge(1, 2, 4);
            edge(2, 3, 3);
        }
        'G' => edge(0, 1, 6),
        _ => unreachable!("checked by the parser"),
    }
    m
}

/// Classical group order for a typed system.
pub fn classical_order(family: char, rank: usize) -> u128 {
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    match family {
        'A' => fact(rank + 1),
        'B' => (1u128 << rank) * fact(rank),
        'D' => (1u128 << (rank - 1)) * fact(rank),
        'E' => match rank {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        'F' => 1152,
        'G' => 12,
        _ => 0,
    }
}

fn validate_matrix(m: &[Vec<u32>]) -> Result<()> {
    let n = m.len();
    if n == 0 {
        return Err(Error::InvalidMatrix("empty matrix".into()));
    }
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(Error::InvalidMatrix("matrix is not square".into()));
        }
        for (j, &v) in row.iter().enumerate() {
            if i == j && v != 1 {
                return Err(Error::InvalidMatrix(format!("m({i},{i}) = {v}, expected 1")));
            }
            if i != j {
                if v < 2 {
                    return Err(Error::InvalidMatrix(format!(
                        "m({i},{j}) = {v}; off-diagonal entries must be at least 2 and finite"
                    )));
                }
                if m[j][i] != v {
                    return Err(Error::InvalidMatrix(format!("m({i},{j}) != m({j},{i})")));
                }
            }
        }
    }
    Ok(())
}

/// Cartan matrix with `a_ij = -1` and `a_ji = -k` for `i < j`, where
/// `k = 1, 2, 3` for labels 3, 4, 6.
fn cartan_for(m: &[Vec<u32>]) -> Result<Vec<Vec<i64>>> {
    let n = m.len();
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
        for j in i + 1..n {
            let k = match m[i][j] {
                2 => 0,
                3 => 1,
                4 => 2,
                6 => 3,
                v => {
                    return Err(Error::Unsupported(format!(
                        "label m({i},{j}) = {v}: raw matrices of rank above 2 need labels in {{2,3,4,6}}"
                    )))
                }
            };
            if k > 0 {
                a[i][j] = -1;
                a[j][i] = -k;
            }
        }
    }
    Ok(a)
}

fn coxeter_from_cartan(a: &[Vec<i64>]) -> Result<Vec<Vec<u32>>> {
    let n = a.len();
    let mut m = vec![vec![1u32; n]; n];
    for i in 0..n {
        if a[i].len() != n || a[i][i] != 2 {
            return Err(Error::InvalidMatrix("Cartan matrix needs 2 on the diagonal".into()));
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            m[i][j] = match (a[i][j], a[j][i]) {
                (0, 0) => 2,
                (x, y) if x < 0 && y < 0 => match x * y {
                    1 => 3,
                    2 => 4,
                    3 => 6,
                    _ => return Err(Error::InvalidMatrix("infinite Cartan label".into())),
                },
                _ => return Err(Error::InvalidMatrix("inconsistent Cartan entries".into())),
            };
        }
    }
    Ok(m)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Kind {
    Typed(char, usize),
    Dihedral(u32),
    Raw,
}

/// Root data of a crystallographic system.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates, indexed by [`Refl`].
    pub positive_roots: Vec<Vec<i64>>,
    pub heights: Vec<i64>,
    /// Half the sum of the positive roots, in simple-root coordinates.
    pub delta: Vec<BigRational>,
}

/// A finite Coxeter system with its full element table.
pub struct CoxeterSystem {
    labels: Vec<String>,
    m: Vec<Vec<u32>>,
    kind: Kind,
    roots: Option<RootSystem>,
    rank: usize,
    order: usize,
    nrefl: usize,
    right: Vec<u32>,
    left: Vec<u32>,
    length: Vec<u32>,
    parent: Vec<(u32, u8)>,
    /// Uniform root index of `σ_w(α_s)` at `w * rank + s`.
    image: Vec<u32>,
    des_t: Vec<BitSet>,
    refl_elem: Vec<Elem>,
    refl_rep: Vec<(Elem, usize)>,
    elem_refl: HashMap<u32, Refl>,
    inverse: Vec<u32>,
    classes: Vec<Vec<Elem>>,
    class_of: Vec<u32>,
    w0: Elem,
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterSystem")
            .field("kind", &self.kind)
            .field("rank", &self.rank)
            .field("order", &self.order)
            .finish()
    }
}

/// Build a system, enumerating at most `max_order` elements.
pub fn build_system(spec: &SystemSpec, max_order: usize) -> Result<Arc<CoxeterSystem>> {
    CoxeterSystem::build(spec, max_order).map(Arc::new)
}

impl CoxeterSystem {
    pub fn build(spec: &SystemSpec, max_order: usize) -> Result<Self> {
        match spec {
            SystemSpec::Typed(f, r) => {
                let m = typed_coxeter_matrix(*f, *r);
                let cartan = cartan_for(&m)?;
                let model = Crystallographic::new(cartan, max_order)?;
                Self::enumerate(m, Kind::Typed(*f, *r), model, max_order)
            }
            SystemSpec::Dihedral(mm) => {
                if *mm < 2 {
                    return Err(Error::InvalidMatrix(format!("I2({mm}) needs m >= 2")));
                }
                let m = vec![vec![1, *mm], vec![*mm, 1]];
                let model = Dihedral { m: *mm };
                Self::enumerate(m, Kind::Dihedral(*mm), model, max_order)
            }
            SystemSpec::Matrix(m) => {
                validate_matrix(m)?;
                if m.len() == 2 {
                    let model = Dihedral { m: m[0][1] };
                    return Self::enumerate(m.clone(), Kind::Raw, model, max_order);
                }
                let cartan = cartan_for(m)?;
                let model = Crystallographic::new(cartan, max_order)?;
                Self::enumerate(m.clone(), Kind::Raw, model, max_order)
            }
            SystemSpec::Cartan(a) => {
                let m = coxeter_from_cartan(a)?;
                let model = Crystallographic::new(a.clone(), max_order)?;
                Self::enumerate(m, Kind::Raw, model, max_order)
            }
        }
    }

    fn enumerate<M: ModelExt>(
        m: Vec<Vec<u32>>,
        kind: Kind,
        model: M,
        max_order: usize,
    ) -> Result<Self> {
        let rank = model.rank();
        let npos = model.positive_count();
        let mut index: HashMap<Vec<u32>, u32> = HashMap::new();
        let mut keys: Vec<Vec<u32>> = vec![model.identity()];
        index.insert(keys[0].clone(), 0);
        let mut length = vec![0u32];
        let mut parent = vec![(u32::MAX, u8::MAX)];
        let mut right: Vec<u32> = Vec::new();
        let mut des_t = vec![BitSet::new(npos)];
        let mut head = 0usize;
        while head < keys.len() {
            let w = head;
            head += 1;
            for s in 0..rank {
                let k = model.right(&keys[w], s);
                let idx = match index.get(&k) {
                    Some(&i) => i,
                    None => {
                        if keys.len() >= max_order {
                            return Err(Error::OrderExceeded(max_order));
                        }
                        let i = keys.len() as u32;
                        index.insert(k.clone(), i);
                        length.push(length[w] + 1);
                        parent.push((w as u32, s as u8));
                        let r = model.image(&keys[w], s);
                        let mut d = des_t[w].clone();
                        d.insert(r as usize % npos.max(1));
                        des_t.push(d);
                        keys.push(k);
                        i
                    }
                };
                right.push(idx);
            }
        }
        let order = keys.len();
        let mut left = vec![0u32; order * rank];
        let mut image = vec![0u32; order * rank];
        for (w, key) in keys.iter().enumerate() {
            for s in 0..rank {
                left[w * rank + s] = index[&model.left(s, key)];
                image[w * rank + s] = model.image(key, s);
            }
        }
        drop(index);
        let roots = model.root_system();
        let labels = (1..=rank).map(|i| format!("s{i}")).collect();
        let mut sys = CoxeterSystem {
            labels,
            m,
            kind,
            roots,
            rank,
            order,
            nrefl: npos,
            right,
            left,
            length,
            parent,
            image,
            des_t,
            refl_elem: Vec::new(),
            refl_rep: Vec::new(),
            elem_refl: HashMap::new(),
            inverse: Vec::new(),
            classes: Vec::new(),
            class_of: Vec::new(),
            w0: Elem(0),
        };
        sys.finish();
        Ok(sys)
    }

    fn finish(&mut self) {
        let n = self.order;
        self.inverse = (0..n)
            .map(|w| {
                let word = self.word(Elem(w as u32));
                word.iter()
                    .rev()
                    .fold(self.identity(), |acc, &s| self.right_mul(acc, s))
                    .0
            })
            .collect();
        let mut refl_elem = vec![None; self.nrefl];
        let mut refl_rep = vec![None; self.nrefl];
        for w in 0..n as u32 {
            for s in 0..self.rank {
                let r = self.image[w as usize * self.rank + s] as usize;
                if r < self.nrefl && refl_elem[r].is_none() {
                    let ws = self.right_mul(Elem(w), s);
                    let t = self.mul(ws, self.inverse(Elem(w)));
                    refl_elem[r] = Some(t);
                    refl_rep[r] = Some((Elem(w), s));
                }
            }
        }
        self.refl_elem = refl_elem.into_iter().map(|x| x.expect("every root is reached")).collect();
        self.refl_rep = refl_rep.into_iter().map(|x| x.expect("every root is reached")).collect();
        self.elem_refl = self
            .refl_elem
            .iter()
            .enumerate()
            .map(|(i, e)| (e.0, Refl(i as u32)))
            .collect();

        let mut class_of = vec![u32::MAX; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if class_of[start] != u32::MAX {
                continue;
            }
            let c = classes.len() as u32;
            let mut members = vec![Elem(start as u32)];
            class_of[start] = c;
            let mut head = 0;
            while head < members.len() {
                let x = members[head];
                head += 1;
                for s in 0..self.rank {
                    let y = self.left_mul(s, self.right_mul(x, s));
                    if class_of[y.idx()] == u32::MAX {
                        class_of[y.idx()] = c;
                        members.push(y);
                    }
                }
            }
            members.sort();
            classes.push(members);
        }
        self.classes = classes;
        self.class_of = class_of;
        let maxlen = *self.length.iter().max().unwrap_or(&0);
        self.w0 = Elem(self.length.iter().position(|&l| l == maxlen).unwrap_or(0) as u32);
    }

    pub fn kind(&self) -> &Kind {
        &self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.m
    }

    pub fn m(&self, s: usize, t: usize) -> u32 {
        self.m[s][t]
    }

    pub fn num_reflections(&self) -> usize {
        self.nrefl
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order as u32).map(Elem)
    }

    pub fn reflections(&self) -> impl Iterator<Item = Refl> {
        (0..self.nrefl as u32).map(Refl)
    }

    pub fn identity(&self) -> Elem {
        Elem(0)
    }

    pub fn generator(&self, s: usize) -> Elem {
        self.right_mul(Elem(0), s)
    }

    pub fn check(&self, w: Elem) -> Result<Elem> {
        if w.idx() < self.order {
            Ok(w)
        } else {
            Err(Error::NotInSystem(w.idx()))
        }
    }

    pub fn right_mul(&self, w: Elem, s: usize) -> Elem {
        Elem(self.right[w.idx() * self.rank + s])
    }

    pub fn left_mul(&self, s: usize, w: Elem) -> Elem {
        Elem(self.left[w.idx() * self.rank + s])
    }

    pub fn length(&self, w: Elem) -> usize {
        self.length[w.idx()] as usize
    }

    /// ShortLex normal form.
    pub fn word(&self, w: Elem) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.length(w));
        let mut x = w.idx();
        while x != 0 {
            let (p, s) = self.parent[x];
            out.push(s as usize);
            x = p as usize;
        }
        out.reverse();
        out
    }

    pub fn mul(&self, u: Elem, v: Elem) -> Elem {
        self.word(v).into_iter().fold(u, |acc, s| self.right_mul(acc, s))
    }

    pub fn inverse(&self, w: Elem) -> Elem {
        Elem(self.inverse[w.idx()])
    }

    pub fn longest(&self) -> Elem {
        self.w0
    }

    pub fn word_to_element(&self, word: &[usize]) -> Result<Elem> {
        let mut w = self.identity();
        for &s in word {
            if s >= self.rank {
                return Err(Error::UnknownGenerator(format!("{}", s + 1)));
            }
            w = self.right_mul(w, s);
        }
        Ok(w)
    }

    /// Parse a generator label such as `s2` or `2` (1-based).
    pub fn parse_generator(&self, tok: &str) -> Result<usize> {
        let t = tok.trim();
        let digits = t.strip_prefix('s').unwrap_or(t);
        match digits.parse::<usize>() {
            Ok(k) if (1..=self.rank).contains(&k) => Ok(k - 1),
            _ => Err(Error::UnknownGenerator(t.to_string())),
        }
    }

    /// Parse words like `s1 s2 s1`, `s1s2s1`, `1,2,1`; `e` or empty is the identity.
    pub fn parse_word(&self, text: &str) -> Result<Vec<usize>> {
        let t = text.trim();
        if t.is_empty() || t == "e" || t == "id" {
            return Ok(Vec::new());
        }
        let tokens: Vec<String> = if t.contains('s') {
            t.split('s')
                .map(|x| x.trim_matches(|c: char| c.is_whitespace() || c == ',' || c == '*'))
                .filter(|x| !x.is_empty())
                .map(String::from)
                .collect()
        } else {
            t.split(|c: char| c.is_whitespace() || c == ',' || c == '*')
                .filter(|x| !x.is_empty())
                .map(String::from)
                .collect()
        };
        tokens.iter().map(|x| self.parse_generator(x)).collect()
    }

    pub fn parse_element(&self, text: &str) -> Result<Elem> {
        let w = self.parse_word(text)?;
        self.word_to_element(&w)
    }

    pub fn format_word(&self, w: Elem) -> String {
        let word = self.word(w);
        if word.is_empty() {
            return "e".into();
        }
        word.iter().map(|&s| self.labels[s].as_str()).collect::<Vec<_>>().join("")
    }

    /// `Des_T(w) = {t : ℓ(tw) < ℓ(w)}`.
    pub fn des_t(&self, w: Elem) -> &BitSet {
        &self.des_t[w.idx()]
    }

    /// `Des_A(w) = Des_T(w) ∩ A`.
    pub fn descent_set(&self, w: Elem, a: &BitSet) -> Result<BitSet> {
        self.check(w)?;
        Ok(self.des_t(w).intersection(a))
    }

    pub fn is_right_descent(&self, w: Elem, s: usize) -> bool {
        self.length(self.right_mul(w, s)) < self.length(w)
    }

    pub fn is_left_descent(&self, s: usize, w: Elem) -> bool {
        self.length(self.left_mul(s, w)) < self.length(w)
    }

    /// Left descents among the generators, as a set of generator indices.
    pub fn left_descents(&self, w: Elem) -> Vec<usize> {
        (0..self.rank).filter(|&s| self.is_left_descent(s, w)).collect()
    }

    pub fn right_descents(&self, w: Elem) -> Vec<usize> {
        (0..self.rank).filter(|&s| self.is_right_descent(w, s)).collect()
    }

    /// The reflection `w s w⁻¹`.
    pub fn refl_of(&self, w: Elem, s: usize) -> Refl {
        let r = self.image[w.idx() * self.rank + s] as usize;
        Refl((r % self.nrefl) as u32)
    }

    /// `σ_w(α_s) = sign · α_t`.
    pub fn signed_root_image(&self, w: Elem, s: usize) -> (Refl, i8) {
        let r = self.image[w.idx() * self.rank + s] as usize;
        if r < self.nrefl {
            (Refl(r as u32), 1)
        } else {
            (Refl((r - self.nrefl) as u32), -1)
        }
    }

    /// `σ_w(α_t) = sign · α_u`.
    pub fn act_on_root(&self, w: Elem, t: Refl) -> (Refl, i8) {
        let (u, s) = self.refl_rep[t.idx()];
        self.signed_root_image(self.mul(w, u), s)
    }

    /// Some `(u, s)` with `σ_u(α_s) = α_t`.
    pub fn reflection_witness(&self, t: Refl) -> (Elem, usize) {
        self.refl_rep[t.idx()]
    }

    pub fn simple_reflection(&self, s: usize) -> Refl {
        self.refl_of(self.identity(), s)
    }

    /// The simple generator with this reflection, if any.
    pub fn as_generator(&self, t: Refl) -> Option<usize> {
        (0..self.rank).find(|&s| self.simple_reflection(s) == t)
    }

    pub fn reflection_element(&self, t: Refl) -> Elem {
        self.refl_elem[t.idx()]
    }

    pub fn as_reflection(&self, w: Elem) -> Result<Refl> {
        self.elem_refl.get(&w.0).copied().ok_or(Error::NotAReflection)
    }

    pub fn reflection_set(&self, items: impl IntoIterator<Item = Refl>) -> BitSet {
        BitSet::from_iter(self.nrefl, items.into_iter().map(Refl::idx))
    }

    pub fn empty_reflection_set(&self) -> BitSet {
        BitSet::new(self.nrefl)
    }

    pub fn all_reflections(&self) -> BitSet {
        BitSet::full(self.nrefl)
    }

    pub fn simple_reflection_set(&self) -> BitSet {
        self.reflection_set((0..self.rank).map(|s| self.simple_reflection(s)))
    }

    pub fn conjugacy_classes(&self) -> &[Vec<Elem>] {
        &self.classes
    }

    pub fn class_of(&self, w: Elem) -> usize {
        self.class_of[w.idx()] as usize
    }

    /// Conjugacy class index of each generator, renumbered densely.
    pub fn generator_classes(&self) -> Vec<usize> {
        let mut seen: Vec<usize> = Vec::new();
        (0..self.rank)
            .map(|s| {
                let c = self.class_of(self.generator(s));
                match seen.iter().position(|&x| x == c) {
                    Some(i) => i,
                    None => {
                        seen.push(c);
                        seen.len() - 1
                    }
                }
            })
            .collect()
    }

    /// The generator conjugate to reflection `t`.
    pub fn generator_for_reflection(&self, t: Refl) -> usize {
        self.reflection_witness(t).1
    }

    /// Single parameter `q` on every class.
    pub fn hecke_params(&self) -> HeckeParams {
        HeckeParams::uniform(self.generator_classes(), Scalar::q())
    }

    pub fn classical_params(&self) -> HeckeParams {
        HeckeParams::uniform(self.generator_classes(), Scalar::one())
    }

    pub fn root_system(&self) -> Option<&RootSystem> {
        self.roots.as_ref()
    }

    pub fn root(&self, t: Refl) -> Option<&[i64]> {
        self.roots.as_ref().map(|r| r.positive_roots[t.idx()].as_slice())
    }

    pub fn height(&self, t: Refl) -> Option<i64> {
        self.roots.as_ref().map(|r| r.heights[t.idx()])
    }

    pub fn is_crystallographic(&self) -> bool {
        self.roots.is_some()
    }

    pub fn is_simply_laced(&self) -> bool {
        self.m
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &v)| i == j || v == 2 || v == 3))
    }

    pub fn is_irreducible(&self) -> bool {
        let mut seen = vec![false; self.rank];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..self.rank {
                if !seen[j] && self.m[i][j] > 2 {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|x| x)
    }

    /// Whether `t` is a generator conjugate of `s` via an odd-label path in
    /// the Coxeter graph.
    pub fn simple_conjugacy(&self, s: usize, t: usize) -> bool {
        let mut seen = vec![false; self.rank];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(i) = stack.pop() {
            if i == t {
                return true;
            }
            for j in 0..self.rank {
                if !seen[j] && i != j && self.m[i][j] % 2 == 1 {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        false
    }

    /// Whether generators `s` and `t` are conjugate, by enumeration.
    pub fn conjugate_by_enumeration(&self, s: usize, t: usize) -> bool {
        self.class_of(self.generator(s)) == self.class_of(self.generator(t))
    }
}

trait ModelExt: Model {
    fn root_system(&self) -> Option<RootSystem>;
}

impl ModelExt for Crystallographic {
    fn root_system(&self) -> Option<RootSystem> {
        let n = self.rank();
        let heights = self.roots.iter().map(|r| r.iter().sum()).collect();
        let delta = (0..n)
            .map(|i| {
                let s: i64 = self.roots.iter().map(|r| r[i]).sum();
                BigRational::new(s.into(), 2.into())
            })
            .collect();
        Some(RootSystem {
            cartan: self.cartan.clone(),
            positive_roots: self.roots.clone(),
            heights,
            delta,
        })
    }
}

impl ModelExt for Dihedral {
    fn root_system(&self) -> Option<RootSystem> {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(label: &str) -> Arc<CoxeterSystem> {
        build_system(&label.parse().unwrap(), DEFAULT_MAX_ORDER).unwrap()
    }

    #[test]
    fn classical_orders() {
        for label in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "D5", "F4", "G2", "E6"] {
            let s = sys(label);
            let SystemSpec::Typed(f, r) = label.parse().unwrap() else { unreachable!() };
            assert_eq!(s.order() as u128, classical_order(f, r), "{label}");
            assert_eq!(s.length(s.longest()), s.num_reflections(), "{label}");
        }
    }

    #[test]
    fn small_examples() {
        let a2 = sys("A2");
        assert_eq!((a2.order(), a2.num_reflections()), (6, 3));
        let i5 = sys("I2(5)");
        assert_eq!((i5.order(), i5.num_reflections()), (10, 5));
        let refl_elems: std::collections::HashSet<_> =
            i5.reflections().map(|t| i5.reflection_element(t)).collect();
        assert_eq!(refl_elems.len(), 5);
    }

    #[test]
    fn invalid_matrices() {
        let bad = SystemSpec::Matrix(vec![vec![1, 1], vec![1, 1]]);
        assert!(matches!(CoxeterSystem::build(&bad, 100), Err(Error::InvalidMatrix(_))));
        let asym = SystemSpec::Matrix(vec![vec![1, 3], vec![4, 1]]);
        assert!(matches!(CoxeterSystem::build(&asym, 100), Err(Error::InvalidMatrix(_))));
        let h3 = SystemSpec::Matrix(vec![vec![1, 5, 2], vec![5, 1, 3], vec![2, 3, 1]]);
        assert!(matches!(CoxeterSystem::build(&h3, 1000), Err(Error::Unsupported(_))));
        let big = SystemSpec::Typed('A', 5);
        assert!(matches!(CoxeterSystem::build(&big, 100), Err(Error::OrderExceeded(100))));
    }

    #[test]
    fn words() {
        let a3 = sys("A3");
        assert_eq!(a3.word_to_element(&[]).unwrap(), a3.identity());
        let w = a3.parse_element("s1s2s1s3s2s1").unwrap();
        assert_eq!(a3.length(w), 6);
        assert_eq!(w, a3.longest());
        assert!(matches!(a3.parse_word("s1 s9"), Err(Error::UnknownGenerator(_))));
        // inserting ss leaves the element unchanged
        assert_eq!(a3.parse_element("s1 s2 s2 s3").unwrap(), a3.parse_element("s1 s3").unwrap());
        for m in 2..9 {
            let d = build_system(&SystemSpec::Dihedral(m), 100).unwrap();
            let a: Vec<usize> = (0..m as usize).map(|i| i % 2).collect();
            let b: Vec<usize> = (0..m as usize).map(|i| 1 - i % 2).collect();
            let (x, y) = (d.word_to_element(&a).unwrap(), d.word_to_element(&b).unwrap());
            assert_eq!(x, y);
            assert_eq!(d.length(x), m as usize);
        }
    }

    #[test]
    fn descent_sets_match_lengths() {
        for label in ["A3", "B3", "I2(7)", "D4"] {
            let s = sys(label);
            for w in s.elements() {
                assert_eq!(s.des_t(w).len(), s.length(w));
                for t in s.reflections() {
                    let tw = s.mul(s.reflection_element(t), w);
                    assert_eq!(s.des_t(w).contains(t.idx()), s.length(tw) < s.length(w));
                }
                for g in 0..s.rank() {
                    let ws = s.right_mul(w, g);
                    let d = s.length(ws) as i64 - s.length(w) as i64;
                    assert!(d == 1 || d == -1);
                    let t = s.refl_of(w, g);
                    assert_eq!(s.reflection_element(t), s.mul(ws, s.inverse(w)));
                }
            }
        }
    }

    #[test]
    fn root_bijection_round_trip() {
        let s = sys("D4");
        for t in s.reflections() {
            let (u, g) = s.reflection_witness(t);
            assert_eq!(s.signed_root_image(u, g), (t, 1));
            assert_eq!(s.as_reflection(s.reflection_element(t)).unwrap(), t);
        }
        assert!(s.as_reflection(s.identity()).is_err());
    }

    #[test]
    fn delta_pairs_to_height() {
        for label in ["A3", "D4"] {
            let s = sys(label);
            let rs = s.root_system().unwrap();
            // δ pairs with α_t through the Cartan matrix (coroot pairing).
            for (t, root) in rs.positive_roots.iter().enumerate() {
                let mut pairing = BigRational::from_integer(0.into());
                for i in 0..s.rank() {
                    for j in 0..s.rank() {
                        pairing += &rs.delta[i]
                            * BigRational::from_integer((rs.cartan[j][i] * root[j]).into());
                    }
                }
                assert_eq!(pairing, BigRational::from_integer(rs.heights[t].into()));
            }
        }
    }

    #[test]
    fn multiplication_agrees_with_words() {
        let s = sys("A3");
        for u in s.elements() {
            for v in s.elements() {
                let mut w = s.word(u);
                w.extend(s.word(v));
                assert_eq!(s.mul(u, v), s.word_to_element(&w).unwrap());
            }
        }
    }

    #[test]
    fn conjugacy_of_generators() {
        let a3 = sys("A3");
        let b3 = sys("B3");
        for s in 0..3 {
            for t in 0..3 {
                assert!(a3.simple_conjugacy(s, t));
                assert_eq!(b3.simple_conjugacy(s, t), b3.conjugate_by_enumeration(s, t));
            }
        }
        assert!(!b3.simple_conjugacy(0, 1));
        assert!(b3.simple_conjugacy(1, 2));
        assert_eq!(a3.conjugacy_classes().len(), 5);
    }

    #[test]
    fn shortlex_order() {
        let s = sys("A2");
        let words: Vec<_> = s.elements().map(|w| s.word(w)).collect();
        assert_eq!(
            words,
            vec![vec![], vec![0], vec![1], vec![0, 1], vec![1, 0], vec![0, 1, 0]]
        );
    }
}
