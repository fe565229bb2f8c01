//! Read a functional back off the matrices of a representation.

use ay_coxeter::ayrep::{build_ay_rep, recover_functional, Functional, Mode, Normalization};
use ay_coxeter::coxeter::build_system;
use ay_coxeter::specht::functional_cell;

fn main() -> ay_coxeter::Result<()> {
    let s = build_system(&"A3".parse()?, 100_000)?;
    let f = Functional::from_ints(&[2, -1, 3]);
    let cell = functional_cell(&s, &f, s.identity())?;
    for mode in [Mode::Q1, Mode::Hecke] {
        let rep = build_ay_rep(&cell, &f, Normalization::Csn, mode)?;
        let rec = recover_functional(&rep)?;
        println!("{mode:?}: recovered {} from a cell of size {}", rec.functional, cell.len());
    }
    Ok(())
}
