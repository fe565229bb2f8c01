//! Enumerate a few finite Coxeter groups and print their basic data.

use ay_coxeter::coxeter::build_system;

fn main() -> ay_coxeter::Result<()> {
    for label in ["A3", "B3", "D4", "H3", "I2(8)"] {
        let Ok(ty) = label.parse() else {
            println!("{label}: not a supported label");
            continue;
        };
        let s = build_system(&ty, 100_000)?;
        println!(
            "{label}: |W| = {}, {} reflections, {} classes, w0 = {}",
            s.order(),
            s.num_reflections(),
            s.conjugacy_classes().len(),
            s.format_word(s.longest())
        );
    }
    Ok(())
}
