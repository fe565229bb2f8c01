//! A-cells of S5 for a set of transpositions that is not a root subsystem.

use ay_coxeter::ayrep::functional_search;
use ay_coxeter::bitset::BitSet;
use ay_coxeter::cells::{a_cell, a_cells};
use ay_coxeter::coxeter::build_system;
use ay_coxeter::coxeter::perm::{element_of, parse_one_line, permutation, transposition};

fn main() -> ay_coxeter::Result<()> {
    let s = build_system(&"A4".parse()?, 100_000)?;
    let pairs = [(1, 2), (2, 3), (4, 5), (1, 4), (2, 5)];
    let refl = pairs.iter().map(|&(i, j)| transposition(&s, i, j).map(|t| t.idx())).collect::<Result<Vec<_>, _>>()?;
    let a = BitSet::from_iter(s.num_reflections(), refl);
    for one_line in ["12345", "45123"] {
        let cell = a_cell(&s, &a, element_of(&s, &parse_one_line(one_line)?)?)?;
        let members: Vec<String> = cell.members().iter().map(|&w| format!("{:?}", permutation(&s, w).unwrap())).collect();
        println!("K_A({one_line}) has {} members: {}", cell.len(), members.join(" "));
    }
    println!("{} A-cells in total", a_cells(&s, &a)?.len());
    // a generic functional would certify K_A(12345) as a minimal cell; absence proves nothing
    let k = a_cell(&s, &a, s.identity())?;
    let found = functional_search(&s, &k, 3)?;
    match found.first() {
        Some(f) => println!("K_A(12345) carries a functional-built representation, e.g. f = {f}"),
        None => println!("no generic functional with coordinates in [-3, 3] on K_A(12345)"),
    }
    Ok(())
}
