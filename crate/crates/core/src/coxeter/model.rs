//! Root-space models used to enumerate a finite Coxeter group.
//!
//! An element is identified by a key from which the images of the simple
//! roots can be read. Roots are addressed by a uniform index: `0..N` are
//! the positive roots (one per reflection, simple roots first in generator
//! order) and `N + i` is the negative of root `i`.

use std::collections::HashMap;

use crate::error::{Error, Result};

pub(crate) trait Model {
    fn rank(&self) -> usize;
    fn positive_count(&self) -> usize;
    fn identity(&self) -> Vec<u32>;
    /// Key of `w s`.
    fn right(&self, key: &[u32], s: usize) -> Vec<u32>;
    /// Key of `s w`.
    fn left(&self, s: usize, key: &[u32]) -> Vec<u32>;
    /// Uniform index of the root `σ_w(α_s)`.
    fn image(&self, key: &[u32], s: usize) -> u32;
}

/// Generalized Cartan matrix model with integer root coordinates.
pub(crate) struct Crystallographic {
    /// `cartan[i][j]`: `s_i(α_j) = α_j - cartan[i][j] α_i`.
    pub cartan: Vec<Vec<i64>>,
    /// Coordinates of the positive roots in the simple-root basis.
    pub roots: Vec<Vec<i64>>,
    lookup: HashMap<Vec<i64>, u32>,
    /// `sigma[s][r]`: index of `s(root r)` over all `2N` roots.
    sigma: Vec<Vec<u32>>,
}

impl Crystallographic {
    pub fn new(cartan: Vec<Vec<i64>>, max_roots: usize) -> Result<Self> {
        let n = cartan.len();
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut queue: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                e
            })
            .collect();
        for v in &queue {
            seen.insert(v.clone(), ());
        }
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head].clone();
            head += 1;
            for i in 0..n {
                let u = reflect(&cartan, &v, i);
                if !seen.contains_key(&u) {
                    if seen.len() >= max_roots {
                        return Err(Error::OrderExceeded(max_roots));
                    }
                    seen.insert(u.clone(), ());
                    queue.push(u);
                }
            }
        }
        let mut roots: Vec<Vec<i64>> = queue
            .into_iter()
            .filter(|v| v.iter().all(|&c| c >= 0))
            .collect();
        roots.sort_by(|a, b| {
            let (ha, hb): (i64, i64) = (a.iter().sum(), b.iter().sum());
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let npos = roots.len();
        let mut lookup = HashMap::new();
        for (k, v) in roots.iter().enumerate() {
            lookup.insert(v.clone(), k as u32);
            lookup.insert(v.iter().map(|c| -c).collect(), (k + npos) as u32);
        }
        let mut model = Crystallographic {
            cartan,
            roots,
            lookup,
            sigma: Vec::new(),
        };
        let sigma = (0..n)
            .map(|i| {
                (0..2 * npos as u32)
                    .map(|r| {
                        let v = reflect(&model.cartan, &model.coords(r), i);
                        model.index_of(&v)
                    })
                    .collect()
            })
            .collect();
        model.sigma = sigma;
        Ok(model)
    }

    /// Coordinates of any root by uniform index.
    pub fn coords(&self, r: u32) -> Vec<i64> {
        let n = self.roots.len() as u32;
        if r < n {
            self.roots[r as usize].clone()
        } else {
            self.roots[(r - n) as usize].iter().map(|c| -c).collect()
        }
    }

    pub fn index_of(&self, v: &[i64]) -> u32 {
        *self.lookup.get(v).expect("vector is a root")
    }
}

fn reflect(cartan: &[Vec<i64>], v: &[i64], i: usize) -> Vec<i64> {
    let pairing: i64 = v.iter().zip(&cartan[i]).map(|(a, b)| a * b).sum();
    let mut out = v.to_vec();
    out[i] -= pairing;
    out
}

impl Model for Crystallographic {
    fn rank(&self) -> usize {
        self.cartan.len()
    }

    fn positive_count(&self) -> usize {
        self.roots.len()
    }

    fn identity(&self) -> Vec<u32> {
        (0..self.rank() as u32).collect()
    }

    fn right(&self, key: &[u32], s: usize) -> Vec<u32> {
        let n = self.rank();
        let image_s = self.coords(key[s]);
        (0..n)
            .map(|i| {
                if i == s {
                    let nroots = self.roots.len() as u32;
                    let r = key[s];
                    return if r < nroots { r + nroots } else { r - nroots };
                }
                let a = self.cartan[s][i];
                if a == 0 {
                    return key[i];
                }
                let mut v = self.coords(key[i]);
                for (c, d) in v.iter_mut().zip(&image_s) {
                    *c -= a * d;
                }
                self.index_of(&v)
            })
            .collect()
    }

    fn left(&self, s: usize, key: &[u32]) -> Vec<u32> {
        key.iter().map(|&r| self.sigma[s][r as usize]).collect()
    }

    fn image(&self, key: &[u32], s: usize) -> u32 {
        key[s]
    }
}

/// Dihedral group of order `2m` acting on `2m` roots placed at angles
/// `jπ/m`. An element is the affine map `x ↦ ±x + c (mod 2m)` on angle
/// indices; the key is `[sign bit, c]`.
pub(crate) struct Dihedral {
    pub m: u32,
}

impl Dihedral {
    fn simple_angle(&self, s: usize) -> u32 {
        if s == 0 {
            0
        } else {
            self.m - 1
        }
    }

    fn generator(&self, s: usize) -> (u32, u32) {
        let two_m = 2 * self.m;
        (1, (2 * self.simple_angle(s) + self.m) % two_m)
    }

    fn compose(&self, a: (u32, u32), b: (u32, u32)) -> (u32, u32) {
        // a ∘ b : x ↦ ea (eb x + cb) + ca
        let two_m = 2 * self.m;
        let cb = if a.0 == 1 { (two_m - b.1) % two_m } else { b.1 };
        (a.0 ^ b.0, (cb + a.1) % two_m)
    }

    /// Uniform index of the root at angle index `j`.
    fn uniform(&self, j: u32) -> u32 {
        let m = self.m;
        let (pos, neg) = if j < m { (j, 0) } else { (j - m, m) };
        let r = match pos {
            0 => 0,
            p if p == m - 1 => 1,
            p => p + 1,
        };
        r + neg
    }
}

impl Model for Dihedral {
    fn rank(&self) -> usize {
        2
    }

    fn positive_count(&self) -> usize {
        self.m as usize
    }

    fn identity(&self) -> Vec<u32> {
        vec![0, 0]
    }

    fn right(&self, key: &[u32], s: usize) -> Vec<u32> {
        let (e, c) = self.compose((key[0], key[1]), self.generator(s));
        vec![e, c]
    }

    fn left(&self, s: usize, key: &[u32]) -> Vec<u32> {
        let (e, c) = self.compose(self.generator(s), (key[0], key[1]));
        vec![e, c]
    }

    fn image(&self, key: &[u32], s: usize) -> u32 {
        let two_m = 2 * self.m;
        let x = self.simple_angle(s);
        let y = if key[0] == 1 { (two_m - x) % two_m } else { x };
        self.uniform((y + key[1]) % two_m)
    }
}
