//! Geodesic convexity against the boundary test, with a witness for failure.

use ay_coxeter::cells::{is_convex, tits_convex};
use ay_coxeter::coxeter::build_system;

fn main() -> ay_coxeter::Result<()> {
    let s = build_system(&"A3".parse()?, 100_000)?;
    for words in [&["e", "s1", "s1s2"][..], &["e", "s1s2"], &["s2", "s2s1", "s2s3", "s2s1s3"]] {
        let members = words.iter().map(|w| s.parse_element(w)).collect::<Result<Vec<_>, _>>()?;
        let bfs = is_convex(&s, &members)?;
        let witness = bfs.witness.map(|w| s.format_word(w)).unwrap_or_else(|| "-".into());
        println!("{words:?}: convex {}, boundary test {}, witness {witness}", bfs.convex, tits_convex(&s, &members)?);
    }
    Ok(())
}
