//! Compare descent representations with Young's orthogonal form.

use ay_coxeter::coxeter::build_system;
use ay_coxeter::specht::{descent_rep, young_form_check};

fn main() -> ay_coxeter::Result<()> {
    let s = build_system(&"A3".parse()?, 100_000)?;
    for word in ["e", "s1", "s2", "s1s3", "s2s1s3"] {
        let rep = descent_rep(&s, s.parse_element(word)?)?;
        let check = young_form_check(&rep)?;
        println!(
            "{word}: dim {}, diagonal {}, products {}, orthogonal error {:.1e}",
            rep.dim(),
            check.diagonal_ok,
            check.product_ok,
            check.son_max_error
        );
    }
    Ok(())
}
