//! Characters under every normalization, including the orthogonal float one.

use ay_coxeter::ayrep::{b_independence_check, son_rep, Functional, Normalization};
use ay_coxeter::coxeter::build_system;
use ay_coxeter::specht::descent_class;

fn main() -> ay_coxeter::Result<()> {
    let s = build_system(&"D4".parse()?, 100_000)?;
    let cell = descent_class(&s, s.parse_element("s2")?)?;
    let f = Functional::delta(&s);
    let norms = [Normalization::Snn, Normalization::Rsn, Normalization::Csn, Normalization::Son];
    let check = b_independence_check(&cell, &f, &norms)?;
    for (n, ch) in &check.characters {
        println!("{n}: {}", ch.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
    }
    println!("equal {}, SON deviation {:?}", check.equal, check.son_deviation);
    let son = son_rep(&cell, &f)?;
    println!("orthogonal {}, relation error {:e}", son.is_orthogonal(1e-9), son.relation_error());
    Ok(())
}
