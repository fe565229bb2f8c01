//! Split a Specht representation of S4 into blocks over a parabolic.

use ay_coxeter::coxeter::build_system;
use ay_coxeter::induce::{restrict_ay, ParabolicContext};
use ay_coxeter::specht::specht_rep;

fn main() -> ay_coxeter::Result<()> {
    let s = build_system(&"A3".parse()?, 100_000)?;
    let rep = specht_rep(&s, &"1,2|3,4".parse()?)?;
    let ctx = ParabolicContext::new(&s, &[0, 2])?;
    for block in restrict_ay(&rep, &ctx)? {
        let members: Vec<String> = block.members.iter().map(|&w| s.format_word(w)).collect();
        let ch: Vec<String> = block.character()?.iter().map(|x| x.to_string()).collect();
        println!("r = {}: {members:?}, character {}", s.format_word(block.r), ch.join(" "));
    }
    Ok(())
}
