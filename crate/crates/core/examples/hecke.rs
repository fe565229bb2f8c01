//! The Hecke version of a Specht representation and its value at q = 1.

use ay_coxeter::ayrep::{verify_relations, Mode, Normalization};
use ay_coxeter::coxeter::build_system;
use ay_coxeter::specht::specht_rep_in;
use num_rational::BigRational;
use num_traits::One;

fn main() -> ay_coxeter::Result<()> {
    let s = build_system(&"A2".parse()?, 100_000)?;
    let q = "1,2|3".parse()?;
    let rep = specht_rep_in(&s, &q, Normalization::Snn, Mode::Hecke)?;
    for (g, m) in rep.matrices.iter().enumerate() {
        println!("T_{}:\n{m}", g + 1);
    }
    println!("relations passed: {}", verify_relations(&rep).passed());
    let at_one = rep.specialize(&BigRational::one())?;
    println!("at q = 1, T_1 is\n{}", at_one.matrices[0]);
    Ok(())
}
