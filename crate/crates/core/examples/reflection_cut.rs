//! Deleting the edges of one reflection splits the Cayley graph in two.

use ay_coxeter::cells::reflection_cut;
use ay_coxeter::coxeter::build_system;

fn main() -> ay_coxeter::Result<()> {
    let s = build_system(&"B3".parse()?, 100_000)?;
    for t in s.reflections() {
        let cut = reflection_cut(&s, t)?;
        let sizes: Vec<usize> = cut.components.iter().map(Vec::len).collect();
        println!("{}: components {sizes:?}, {} edges, clean {}", s.format_word(s.reflection_element(t)), cut.cut_edges.len(), cut.is_clean_cut());
    }
    Ok(())
}
