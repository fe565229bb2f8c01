//! Join two presentations of the same reflection by braid moves.

use ay_coxeter::coxeter::{build_system, validate_conjugation_path};

fn main() -> ay_coxeter::Result<()> {
    let s = build_system(&"A3".parse()?, 100_000)?;
    let from = (s.identity(), 0);
    let to = (s.parse_element("s2s1")?, 1);
    let path = s.conjugation_path(from, to)?;
    for (w, g) in &path.pairs {
        println!("({}, s{})", s.format_word(*w), g + 1);
    }
    println!("epsilon {}, braid moves {:?}", path.epsilon, path.braid_moves);
    println!("valid: {:?}", validate_conjugation_path(&s, from, to, &path));
    Ok(())
}
