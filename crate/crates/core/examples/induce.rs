//! Induce a Specht representation of a parabolic subgroup and compare with
//! the character formula.

use ay_coxeter::coxeter::build_system;
use ay_coxeter::induce::{induce_ay, induced_character_oracle, ParabolicContext};
use ay_coxeter::specht::specht_rep;

fn main() -> ay_coxeter::Result<()> {
    let s = build_system(&"A3".parse()?, 100_000)?;
    let ctx = ParabolicContext::new(&s, &[0, 1])?;
    let psi = specht_rep(ctx.subsystem()?, &"1,2|3".parse()?)?;
    let ind = induce_ay(&ctx, &psi)?;
    println!("[W:P] = {}, dim = {}", ctx.reps().len(), ind.rep.dim());
    let ours = ind.rep.character()?;
    let oracle = induced_character_oracle(&ctx, &psi)?;
    println!("character {}", ours.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
    println!("matches the class-average formula: {}", ours == oracle);
    for (m, r) in ind.factors(&ctx) {
        println!("  {} * {}", s.format_word(m), s.format_word(r));
    }
    Ok(())
}
