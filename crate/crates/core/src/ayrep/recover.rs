use num_rational::BigRational;

use super::{a_from_pairing, check_generic, AYRep, Functional, GenericityReport, Mode};
use crate::error::{Error, Result};
use crate::scalars::d_coefficient;

#[derive(Clone, Debug)]
pub struct Recovered {
    pub functional: Functional,
    pub report: GenericityReport,
}

/// Solve `⟨f, α_s⟩ = 1/ȧ_s` (or the exponent of `ḋ_s = q^k` in Hecke
/// mode) and confirm every upward coefficient of the cell comes from `f`.
pub fn recover_functional(rep: &AYRep) -> Result<Recovered> {
    let sys = rep.system();
    let cell = &rep.cell;
    let e = sys.identity();
    if !cell.contains(e) {
        return Err(Error::Precondition("cell must contain the identity".into()));
    }
    for &w in cell.members() {
        for s in 0..sys.rank() {
            let up = sys.length(sys.right_mul(w, s)) > sys.length(w);
            if up && cell.step_inside(w, s) && rep.a(s, w).is_some_and(|a| a.is_zero()) {
                return Err(Error::Precondition(format!(
                    "internal coefficient vanishes at (element {}, s{})",
                    w.idx(),
                    s + 1
                )));
            }
        }
    }
    let mut coords = Vec::with_capacity(sys.rank());
    for s in 0..sys.rank() {
        let a = rep.a(s, e).expect("identity is a member");
        if a.is_zero() {
            return Err(Error::Precondition(format!("coefficient a_s{}(e) vanishes", s + 1)));
        }
        let value = match rep.mode {
            Mode::Q1 => a
                .inv()?
                .as_rational()
                .cloned()
                .ok_or_else(|| Error::Verification(format!("a_s{}(e) is not rational", s + 1)))?,
            Mode::Hecke => {
                let d = d_coefficient(a, rep.params().q_for_generator(s))?;
                let k = d.as_q_power().ok_or_else(|| {
                    Error::Precondition(format!("d-coefficient of s{} is not an integral power of q", s + 1))
                })?;
                BigRational::from_integer(k.into())
            }
        };
        coords.push(value);
    }
    let f = Functional::new(coords);
    for &w in cell.members() {
        for s in 0..sys.rank() {
            if sys.length(sys.right_mul(w, s)) < sys.length(w) {
                continue;
            }
            let p = f.pairing(sys, sys.refl_of(w, s))?;
            let expect = a_from_pairing(&p, rep.mode).ok();
            if expect.as_ref() != rep.a(s, w) {
                return Err(Error::Verification(format!(
                    "coefficient at (element {}, s{}) is not 1/{}",
                    w.idx(),
                    s + 1,
                    if rep.mode == Mode::Q1 { format!("{p}") } else { format!("[{p}]_q") }
                )));
            }
        }
    }
    let report = check_generic(cell, &f)?;
    Ok(Recovered { functional: f, report })
}
