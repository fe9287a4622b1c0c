//! The superpotential of NGr(n) and its cyclic derivatives next to the
//! relations they should span.

use ngr_workbench::format::format_polynomial;
use ngr_workbench::ngr::{ngr_presentation, superpotential};

fn main() -> ngr_workbench::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(3, |s| s.parse().unwrap());
    let inst = ngr_presentation(n)?;
    let pres = &inst.presentation;
    let w = superpotential(n)?;
    println!("{} cyclic terms", w.terms().count());
    for r in 0..3 {
        for a in 0..pres.arrow_count(r) as u16 {
            let d = w.cyclic_derivative(pres, r, a)?;
            println!("d/d {}@{r} = {}", pres.label(r, a), format_polynomial(pres, &d));
        }
    }
    for (name, rel) in inst.relation_names.iter().zip(pres.relations()).take(3 * n) {
        println!("{name}: {}", format_polynomial(pres, rel));
    }
    Ok(())
}
