//! Specht representations from tableau cells, checked against Young's
//! orthogonal form.

use ay_coxeter::coxeter::build_system;
use ay_coxeter::specht::{character_by_cycle_type, matches_oracle, partitions, specht_oracle, specht_rep, syt_enumerate};

fn main() -> ay_coxeter::Result<()> {
    let s = build_system(&"A4".parse()?, 100_000)?;
    for shape in partitions(5) {
        let syt = syt_enumerate(&shape)?;
        let rep = specht_rep(&s, &syt[0])?;
        let table = character_by_cycle_type(&rep)?;
        let oracle = specht_oracle(&shape)?;
        let ch: Vec<String> = table.values.iter().map(|x| x.to_string()).collect();
        println!("{shape}: {} tableaux, character {}, oracle agrees {}", syt.len(), ch.join(" "), matches_oracle(&table, &oracle, 1e-9));
    }
    Ok(())
}
