//! Cells: subsets of a Coxeter group with their internal and boundary
//! reflections, convexity, descent classes and reflection cuts.

use std::collections::VecDeque;
use std::sync::Arc;

use crate::bitset::BitSet;
use crate::coxeter::{CoxeterSystem, Elem, Refl};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Up,
    Down,
}

impl Direction {
    pub fn of_step(sys: &CoxeterSystem, w: Elem, s: usize) -> Direction {
        if sys.length(sys.right_mul(w, s)) > sys.length(w) {
            Direction::Up
        } else {
            Direction::Down
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Up => "up",
            Direction::Down => "down",
        }
    }
}

/// A finite subset `K` of `W`, members in ShortLex order.
#[derive(Clone)]
pub struct Cell {
    sys: Arc<CoxeterSystem>,
    members: Vec<Elem>,
    position: Vec<u32>,
    internal: BitSet,
    boundary: BitSet,
    directions: Vec<Option<Direction>>,
    conflict: Option<Refl>,
}

impl std::fmt::Debug for Cell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Cell").field("members", &self.members).finish()
    }
}

impl PartialEq for Cell {
    fn eq(&self, o: &Cell) -> bool {
        Arc::ptr_eq(&self.sys, &o.sys) && self.members == o.members
    }
}

impl Cell {
    pub fn new(sys: &Arc<CoxeterSystem>, members: impl IntoIterator<Item = Elem>) -> Result<Cell> {
        let mut members: Vec<Elem> = members.into_iter().collect();
        for &w in &members {
            sys.check(w)?;
        }
        members.sort_unstable();
        members.dedup();
        let mut position = vec![u32::MAX; sys.order()];
        for (i, w) in members.iter().enumerate() {
            position[w.idx()] = i as u32;
        }
        let mut internal = sys.empty_reflection_set();
        let mut boundary = sys.empty_reflection_set();
        let mut directions = vec![None; sys.num_reflections()];
        let mut conflict = None;
        for &w in &members {
            for s in 0..sys.rank() {
                let t = sys.refl_of(w, s);
                if position[sys.right_mul(w, s).idx()] != u32::MAX {
                    internal.insert(t.idx());
                } else {
                    boundary.insert(t.idx());
                    let d = Direction::of_step(sys, w, s);
                    match directions[t.idx()] {
                        None => directions[t.idx()] = Some(d),
                        Some(old) if old != d && conflict.is_none() => conflict = Some(t),
                        _ => {}
                    }
                }
            }
        }
        Ok(Cell {
            sys: Arc::clone(sys),
            members,
            position,
            internal,
            boundary,
            directions,
            conflict,
        })
    }

    pub fn system(&self) -> &Arc<CoxeterSystem> {
        &self.sys
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, w: Elem) -> bool {
        self.position.get(w.idx()).is_some_and(|&p| p != u32::MAX)
    }

    /// Row/column index of `w` in this cell's basis.
    pub fn index_of(&self, w: Elem) -> Option<usize> {
        self.position
            .get(w.idx())
            .filter(|&&p| p != u32::MAX)
            .map(|&p| p as usize)
    }

    pub fn contains_identity(&self) -> bool {
        self.contains(self.sys.identity())
    }

    /// `T_K`.
    pub fn internal(&self) -> &BitSet {
        &self.internal
    }

    /// `T_∂K`.
    pub fn boundary(&self) -> &BitSet {
        &self.boundary
    }

    /// Direction in which edges labelled `t` leave the cell.
    pub fn out_direction(&self, t: Refl) -> Result<Direction> {
        if let Some(c) = self.conflict {
            return Err(Error::DirectionUndefined(c.idx()));
        }
        self.directions
            .get(t.idx())
            .copied()
            .flatten()
            .ok_or_else(|| Error::Precondition(format!("reflection {} is not a boundary reflection", t.idx())))
    }

    /// `(T_K, T_∂K, out-direction map)`; fails when a boundary reflection
    /// is crossed in both directions.
    pub fn boundary_data(&self) -> Result<(BitSet, BitSet, Vec<(Refl, Direction)>)> {
        if let Some(c) = self.conflict {
            return Err(Error::DirectionUndefined(c.idx()));
        }
        let dirs = self
            .boundary
            .iter()
            .map(|t| (Refl(t as u32), self.directions[t].expect("boundary has a direction")))
            .collect();
        Ok((self.internal.clone(), self.boundary.clone(), dirs))
    }

    /// The left translate `v K`.
    pub fn translate(&self, v: Elem) -> Result<Cell> {
        Cell::new(&self.sys, self.members.iter().map(|&w| self.sys.mul(v, w)))
    }

    /// Whether `w ↦ ws` stays inside.
    pub fn step_inside(&self, w: Elem, s: usize) -> bool {
        self.contains(self.sys.right_mul(w, s))
    }
}

/// The generalized descent class `W_A^D = {w : Des_A(w) = D}`.
pub fn generalized_descent_class(sys: &Arc<CoxeterSystem>, a: &BitSet, d: &BitSet) -> Result<Cell> {
    if !d.is_subset(a) {
        return Err(Error::Precondition("descent set D is not contained in A".into()));
    }
    let members = sys.elements().filter(|&w| &sys.des_t(w).intersection(a) == d);
    Cell::new(sys, members)
}

/// The `~_A` class of `w`: closure under `w ↔ ws` whenever `wsw⁻¹ ∉ A`.
pub fn a_cell(sys: &Arc<CoxeterSystem>, a: &BitSet, w: Elem) -> Result<Cell> {
    sys.check(w)?;
    let mut seen = vec![false; sys.order()];
    seen[w.idx()] = true;
    let mut queue = VecDeque::from([w]);
    let mut out = vec![w];
    while let Some(x) = queue.pop_front() {
        for s in 0..sys.rank() {
            if a.contains(sys.refl_of(x, s).idx()) {
                continue;
            }
            let y = sys.right_mul(x, s);
            if !seen[y.idx()] {
                seen[y.idx()] = true;
                out.push(y);
                queue.push_back(y);
            }
        }
    }
    Cell::new(sys, out)
}

/// All `~_A` classes, in order of their smallest member.
pub fn a_cells(sys: &Arc<CoxeterSystem>, a: &BitSet) -> Result<Vec<Cell>> {
    let mut assigned = vec![false; sys.order()];
    let mut out = Vec::new();
    for w in sys.elements() {
        if assigned[w.idx()] {
            continue;
        }
        let c = a_cell(sys, a, w)?;
        for &x in c.members() {
            assigned[x.idx()] = true;
        }
        out.push(c);
    }
    Ok(out)
}

/// Breadth-first distances in the Cayley graph from `u`; equals `ℓ(u⁻¹x)`.
pub fn cayley_distances(sys: &CoxeterSystem, u: Elem) -> Vec<u32> {
    let mut dist = vec![u32::MAX; sys.order()];
    dist[u.idx()] = 0;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        for s in 0..sys.rank() {
            let y = sys.right_mul(x, s);
            if dist[y.idx()] == u32::MAX {
                dist[y.idx()] = dist[x.idx()] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Convexity {
    pub convex: bool,
    /// A vertex outside `K` on a geodesic between two members.
    pub witness: Option<Elem>,
}

/// Geodesic convexity in the Cayley graph. The empty set is convex.
pub fn is_convex(sys: &CoxeterSystem, members: &[Elem]) -> Result<Convexity> {
    let mut inside = vec![false; sys.order()];
    for &w in members {
        sys.check(w)?;
        inside[w.idx()] = true;
    }
    let outside: Vec<Elem> = sys.elements().filter(|w| !inside[w.idx()]).collect();
    let dists: Vec<Vec<u32>> = members.iter().map(|&u| cayley_distances(sys, u)).collect();
    for (i, du) in dists.iter().enumerate() {
        for (j, dv) in dists.iter().enumerate().skip(i + 1) {
            let duv = du[members[j].idx()];
            let _ = j;
            if let Some(&x) = outside.iter().find(|x| du[x.idx()] + dv[x.idx()] == duv) {
                return Ok(Convexity {
                    convex: false,
                    witness: Some(x),
                });
            }
        }
    }
    Ok(Convexity {
        convex: true,
        witness: None,
    })
}

/// Convexity through descent classes: with `A = T_∂K` and `D = Des_A(u)`
/// for a member `u`, the set is convex exactly when it equals `W_A^D`.
pub fn tits_convex(sys: &Arc<CoxeterSystem>, members: &[Elem]) -> Result<bool> {
    let cell = Cell::new(sys, members.iter().copied())?;
    let Some(&u) = cell.members().first() else {
        return Ok(true);
    };
    let a = cell.boundary().clone();
    let d = sys.des_t(u).intersection(&a);
    let class = generalized_descent_class(sys, &a, &d)?;
    Ok(class.members() == cell.members())
}

/// Result of deleting every Cayley-graph edge labelled by one reflection.
#[derive(Clone, Debug)]
pub struct ReflectionCut {
    pub reflection: Refl,
    /// Connected components; the first contains the identity.
    pub components: Vec<Vec<Elem>>,
    /// Deleted edges `(w, ws)` with `ℓ(w) < ℓ(ws)`.
    pub cut_edges: Vec<(Elem, Elem)>,
}

impl ReflectionCut {
    /// Two components and every deleted edge joins them.
    pub fn is_clean_cut(&self) -> bool {
        if self.components.len() != 2 {
            return false;
        }
        let first: std::collections::HashSet<Elem> = self.components[0].iter().copied().collect();
        self.cut_edges
            .iter()
            .all(|(u, v)| first.contains(u) != first.contains(v))
    }
}

pub fn reflection_cut(sys: &CoxeterSystem, t: Refl) -> Result<ReflectionCut> {
    if t.idx() >= sys.num_reflections() {
        return Err(Error::NotAReflection);
    }
    let mut comp = vec![u32::MAX; sys.order()];
    let mut components = Vec::new();
    for start in sys.elements() {
        if comp[start.idx()] != u32::MAX {
            continue;
        }
        let c = components.len() as u32;
        comp[start.idx()] = c;
        let mut members = vec![start];
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for s in 0..sys.rank() {
                if sys.refl_of(x, s) == t {
                    continue;
                }
                let y = sys.right_mul(x, s);
                if comp[y.idx()] == u32::MAX {
                    comp[y.idx()] = c;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    let cut_edges = sys
        .elements()
        .flat_map(|w| (0..sys.rank()).map(move |s| (w, s)))
        .filter(|&(w, s)| sys.refl_of(w, s) == t && sys.length(sys.right_mul(w, s)) > sys.length(w))
        .map(|(w, s)| (w, sys.right_mul(w, s)))
        .collect();
    Ok(ReflectionCut {
        reflection: t,
        components,
        cut_edges,
    })
}

/// Whether every ordered pair of members is joined by a directed path of
/// arcs `w → ws` (inside the cell) accepted by `feasible`.
pub fn is_strongly_connected(cell: &Cell, feasible: impl Fn(Elem, usize) -> bool) -> bool {
    let n = cell.len();
    if n <= 1 {
        return true;
    }
    let sys = cell.system();
    let mut fwd = vec![Vec::new(); n];
    let mut back = vec![Vec::new(); n];
    for (i, &w) in cell.members().iter().enumerate() {
        for s in 0..sys.rank() {
            if let Some(j) = cell.index_of(sys.right_mul(w, s)) {
                if feasible(w, s) {
                    fwd[i].push(j);
                    back[j].push(i);
                }
            }
        }
    }
    let reach_all = |adj: &[Vec<usize>]| {
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(i) = stack.pop() {
            for &j in &adj[i] {
                if !seen[j] {
                    seen[j] = true;
                    count += 1;
                    stack.push(j);
                }
            }
        }
        count == n
    };
    reach_all(&fwd) && reach_all(&back)
}

/// The Cayley graph as DOT: one node per element, one undirected edge
/// `w -- ws` per pair, labelled by generator. Edges leaving `cell` are red.
pub fn cayley_dot(sys: &CoxeterSystem, cell: Option<&Cell>) -> String {
    let mut out = String::from("graph cayley {\n");
    for w in sys.elements() {
        let fill = match cell {
            Some(c) if c.contains(w) => ", style=filled, fillcolor=lightgrey",
            _ => "",
        };
        out.push_str(&format!("  n{} [label=\"{}\"{}];\n", w.idx(), sys.format_word(w), fill));
    }
    for w in sys.elements() {
        for s in 0..sys.rank() {
            let ws = sys.right_mul(w, s);
            if ws.idx() < w.idx() {
                continue;
            }
            let crossing = cell.is_some_and(|c| c.contains(w) != c.contains(ws));
            let color = if crossing { ", color=red" } else { "" };
            out.push_str(&format!("  n{} -- n{} [label=\"{}\"{}];\n", w.idx(), ws.idx(), s + 1, color));
        }
    }
    out.push_str("}\n");
    out
}
