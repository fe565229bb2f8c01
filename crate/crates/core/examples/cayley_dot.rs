//! Graphviz source for the Cayley graph of S3 with one descent class marked.

use ay_coxeter::cells::cayley_dot;
use ay_coxeter::coxeter::build_system;
use ay_coxeter::specht::descent_class;

fn main() -> ay_coxeter::Result<()> {
    let s = build_system(&"A2".parse()?, 100_000)?;
    let cell = descent_class(&s, s.parse_element("s1")?)?;
    print!("{}", cayley_dot(&s, Some(&cell)));
    Ok(())
}
