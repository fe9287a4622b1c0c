//! Syzygies of an explicit right ideal, plus the plain-text matrix export of
//! the generator map in one degree.

use ngr_workbench::coherence::{ideal_syzygies, map_matrix, FreeModule, ModuleElement};
use ngr_workbench::format::{format_polynomial, parse_polynomial};
use ngr_workbench::linalg::format_matrix;
use ngr_workbench::ngr::ngr_presentation;
use ngr_workbench::{buchberger_complete, NcPolynomial, PathWord};

fn main() -> ngr_workbench::Result<()> {
    let pres = ngr_presentation(3)?.presentation;
    let gb = buchberger_complete(&pres, 6)?;
    let gens: Vec<NcPolynomial> = (0..3).map(|a| NcPolynomial::word(PathWord::new(0, vec![a]))).collect();
    let rep = ideal_syzygies(&gb, &gens, 6)?;
    println!("arrows at 0: minimal syzygies in degrees {:?}", rep.minimal_syzygy_degrees);
    println!("kernel dims {:?}", rep.kernel_dims);
    for s in &rep.syzygies {
        let parts: Vec<String> = s.components.iter().map(|c| format_polynomial(&pres, c)).collect();
        println!("  degree {}: ({})", s.degree, parts.join(", "));
    }

    let f = parse_polynomial(&pres, Some(1), "x1 - 2*x3")?;
    let g = parse_polynomial(&pres, Some(1), "x2.x1")?;
    let rep = ideal_syzygies(&gb, &[f.clone(), g.clone()], 6)?;
    println!("(x1 - 2 x3, x2.x1): minimal syzygies in degrees {:?}", rep.minimal_syzygy_degrees);

    let ambient = FreeModule { base: 1, shifts: vec![0] };
    let elems = [f, g].map(|p| ModuleElement { degree: p.degree().unwrap(), components: vec![p] });
    print!("map in degree 2:\n{}", format_matrix(&map_matrix(&gb, &ambient, &elems, 2)?));
    Ok(())
}
