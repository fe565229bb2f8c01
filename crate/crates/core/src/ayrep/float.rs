use num_traits::ToPrimitive;

use super::{check_generic, require_functional_system, Functional};
use crate::cells::Cell;
use crate::coxeter::Elem;
use crate::error::{Error, Result};
use crate::matrix::FloatMat;

/// The q = 1 representation under the symmetric normalization, in binary64.
#[derive(Clone, Debug)]
pub struct FloatRep {
    pub cell: Cell,
    pub matrices: Vec<FloatMat>,
}

/// Build with `ȧ_t = 1/⟨f, α_t⟩`, `ä_t = -ȧ_t` and `ḃ_t = b̈_t = √(1 - ȧ_t²)`.
pub fn son_rep(cell: &Cell, f: &Functional) -> Result<FloatRep> {
    let sys = cell.system();
    require_functional_system(sys)?;
    let report = check_generic(cell, f)?;
    if !report.generic {
        return Err(Error::NotGeneric(Box::new(report)));
    }
    let n = cell.len();
    let mut matrices = Vec::with_capacity(sys.rank());
    for s in 0..sys.rank() {
        let mut m = FloatMat::zeros(n, n);
        for (i, &w) in cell.members().iter().enumerate() {
            let p = f.signed_pairing(sys, w, s)?;
            let a = 1.0 / p.to_f64().unwrap_or(f64::NAN);
            m.set(i, i, a);
            if let Some(j) = cell.index_of(sys.right_mul(w, s)) {
                let rad = 1.0 - a * a;
                if rad < 0.0 {
                    return Err(Error::Unsupported(format!(
                        "symmetric normalization needs |⟨f, α⟩| ≥ 1, found {p}"
                    )));
                }
                m.set(i, j, rad.sqrt());
            }
        }
        matrices.push(m);
    }
    Ok(FloatRep {
        cell: cell.clone(),
        matrices,
    })
}

impl FloatRep {
    pub fn dim(&self) -> usize {
        self.cell.len()
    }

    /// Row-action matrix of the element with this word (same convention as
    /// the exact representation).
    pub fn evaluate_word(&self, word: &[usize]) -> FloatMat {
        word.iter()
            .fold(FloatMat::identity(self.dim()), |acc, &s| self.matrices[s].mul(&acc))
    }

    pub fn trace_of(&self, w: Elem) -> f64 {
        self.evaluate_word(&self.cell.system().word(w)).trace()
    }

    pub fn character(&self) -> Vec<f64> {
        self.cell
            .system()
            .conjugacy_classes()
            .iter()
            .map(|c| self.trace_of(c[0]))
            .collect()
    }

    /// Largest entry of `ρ_s² - 1` and of the braid differences.
    pub fn relation_error(&self) -> f64 {
        let sys = self.cell.system();
        let id = FloatMat::identity(self.dim());
        let mut err: f64 = 0.0;
        for s in 0..sys.rank() {
            err = err.max(self.matrices[s].mul(&self.matrices[s]).max_abs_diff(&id));
            for t in s + 1..sys.rank() {
                let m = sys.m(s, t);
                let alt = |a: usize, b: usize| {
                    (0..m).fold(id.clone(), |acc, i| acc.mul(&self.matrices[if i % 2 == 0 { a } else { b }]))
                };
                err = err.max(alt(s, t).max_abs_diff(&alt(t, s)));
            }
        }
        err
    }

    /// Whether each generator matrix is symmetric and orthogonal within `tol`.
    pub fn is_orthogonal(&self, tol: f64) -> bool {
        let id = FloatMat::identity(self.dim());
        self.matrices.iter().all(|m| {
            let n = m.rows();
            let sym = (0..n).all(|i| (0..n).all(|j| (m.get(i, j) - m.get(j, i)).abs() <= tol));
            sym && m.mul(m).max_abs_diff(&id) <= tol
        })
    }
}
