//! A hand-written two-periodic presentation: parse, complete, count.

use ngr_workbench::buchberger_complete;
use ngr_workbench::format::{basis_json, format_presentation, parse_presentation};
use ngr_workbench::hilbert::hilbert_matrix;

const TEXT: &str = "\
# a quantum-plane-like two-periodic algebra
period 2
arrows 0: b, a
arrows 1: y, x
relation 0: b.y - 2*a.x
relation 1: y.a - 1/2*x.b
";

fn main() -> ngr_workbench::Result<()> {
    let pres = parse_presentation(TEXT)?;
    print!("{}", format_presentation(&pres));
    let gb = buchberger_complete(&pres, 6)?;
    println!("{}", serde_json::to_string_pretty(&basis_json(&gb)).unwrap());
    println!("{}", hilbert_matrix(&gb, 6, false)?.render());
    match parse_presentation("period 1\narrows 0: a\nrelation 0: a.a + c.a\n") {
        Err(e) => println!("as expected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
