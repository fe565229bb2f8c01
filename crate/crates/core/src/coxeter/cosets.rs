//! Parabolic subgroups, minimal coset representatives and subsystems.

use std::sync::Arc;

use super::{CoxeterSystem, Elem, SystemSpec};
use crate::error::{Error, Result};

/// The decomposition `W = ⟨J⟩ · W^J` into right cosets.
#[derive(Clone, Debug)]
pub struct Parabolic {
    pub j: Vec<usize>,
    /// Elements of `⟨J⟩`, ShortLex order.
    pub p_elems: Vec<Elem>,
    /// Minimal right-coset representatives `W^J`, ShortLex order.
    pub reps: Vec<Elem>,
    /// `factor[w] = (p, r)` with `w = p r`.
    pub factor: Vec<(Elem, Elem)>,
}

impl Parabolic {
    pub fn is_rep(&self, w: Elem) -> bool {
        self.factor[w.idx()].1 == w
    }

    pub fn contains(&self, w: Elem) -> bool {
        self.factor[w.idx()].1 .0 == 0
    }
}

fn check_subset(sys: &CoxeterSystem, j: &[usize]) -> Result<Vec<usize>> {
    let mut j = j.to_vec();
    j.sort_unstable();
    j.dedup();
    if let Some(&s) = j.iter().find(|&&s| s >= sys.rank()) {
        return Err(Error::UnknownGenerator(format!("{}", s + 1)));
    }
    Ok(j)
}

impl CoxeterSystem {
    /// Minimal right-coset representatives of `⟨J⟩` and the factorization map.
    pub fn minimal_coset_reps(&self, j: &[usize]) -> Result<Parabolic> {
        let j = check_subset(self, j)?;
        let mut factor = Vec::with_capacity(self.order());
        for w in self.elements() {
            let mut r = w;
            'strip: loop {
                for &s in &j {
                    if self.is_left_descent(s, r) {
                        r = self.left_mul(s, r);
                        continue 'strip;
                    }
                }
                break;
            }
            let p = self.mul(w, self.inverse(r));
            factor.push((p, r));
        }
        let reps = self
            .elements()
            .filter(|&w| factor[w.idx()].1 == w)
            .collect();
        let p_elems = self
            .elements()
            .filter(|&w| factor[w.idx()].1 .0 == 0)
            .collect();
        Ok(Parabolic {
            j,
            p_elems,
            reps,
            factor,
        })
    }

    /// The shortest element of the coset `w⟨s, t⟩`.
    pub fn coset_shortest(&self, w: Elem, s: usize, t: usize) -> Elem {
        let mut x = w;
        loop {
            if self.is_right_descent(x, s) {
                x = self.right_mul(x, s);
            } else if self.is_right_descent(x, t) {
                x = self.right_mul(x, t);
            } else {
                return x;
            }
        }
    }

    /// The elements of the coset `w⟨s, t⟩`, starting from its shortest element.
    pub fn rank2_coset(&self, w: Elem, s: usize, t: usize) -> Vec<Elem> {
        let mut out = vec![self.coset_shortest(w, s, t)];
        let mut head = 0;
        while head < out.len() {
            let x = out[head];
            head += 1;
            for g in [s, t] {
                let y = self.right_mul(x, g);
                if !out.contains(&y) {
                    out.push(y);
                }
            }
        }
        out
    }

    /// The standard parabolic subgroup on `J` as a system in its own right.
    pub fn parabolic_subsystem(&self, j: &[usize]) -> Result<ParabolicSubsystem> {
        let j = check_subset(self, j)?;
        if j.is_empty() {
            return Err(Error::Precondition("parabolic subsystem needs J nonempty".into()));
        }
        let spec = match self.root_system() {
            Some(rs) => SystemSpec::Cartan(
                j.iter()
                    .map(|&a| j.iter().map(|&b| rs.cartan[a][b]).collect())
                    .collect(),
            ),
            None if j.len() == 1 => SystemSpec::Cartan(vec![vec![2]]),
            None => SystemSpec::Matrix(
                j.iter()
                    .map(|&a| j.iter().map(|&b| self.m(a, b)).collect())
                    .collect(),
            ),
        };
        let sub = CoxeterSystem::build(&spec, self.order())?;
        let embed: Vec<Elem> = sub
            .elements()
            .map(|x| {
                sub.word(x)
                    .into_iter()
                    .fold(self.identity(), |acc, g| self.right_mul(acc, j[g]))
            })
            .collect();
        Ok(ParabolicSubsystem {
            sub: Arc::new(sub),
            j,
            embed,
        })
    }
}

/// A standard parabolic subgroup with its embedding into the parent.
#[derive(Clone, Debug)]
pub struct ParabolicSubsystem {
    pub sub: Arc<CoxeterSystem>,
    /// Parent generator for each subsystem generator.
    pub j: Vec<usize>,
    /// Parent element for each subsystem element.
    pub embed: Vec<Elem>,
}

impl ParabolicSubsystem {
    /// Subsystem element for a parent element of `⟨J⟩`.
    pub fn lift(&self, w: Elem) -> Option<Elem> {
        self.embed.iter().position(|&e| e == w).map(|i| Elem(i as u32))
    }

    /// Subsystem generator index for a parent generator in `J`.
    pub fn local_generator(&self, s: usize) -> Option<usize> {
        self.j.iter().position(|&x| x == s)
    }
}
