//! Build the representation of a descent class and check its relations.

use ay_coxeter::ayrep::{build_ay_rep, verify_relations, Functional, Mode, Normalization};
use ay_coxeter::coxeter::build_system;
use ay_coxeter::specht::descent_class;

fn main() -> ay_coxeter::Result<()> {
    let s = build_system(&"A3".parse()?, 100_000)?;
    let cell = descent_class(&s, s.parse_element("s2")?)?;
    let rep = build_ay_rep(&cell, &Functional::delta(&s), Normalization::Snn, Mode::Q1)?;
    println!("cell {:?}", cell.members().iter().map(|&w| s.format_word(w)).collect::<Vec<_>>());
    for (g, m) in rep.matrices.iter().enumerate() {
        println!("s{}:\n{m}", g + 1);
    }
    println!("{}", verify_relations(&rep));
    let ch: Vec<String> = rep.character()?.iter().map(|x| x.to_string()).collect();
    println!("character {}", ch.join(" "));
    Ok(())
}
