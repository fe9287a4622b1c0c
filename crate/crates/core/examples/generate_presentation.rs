//! Prints the presentation file of NGr(n) for `n` given on the command line
//! (default 3), followed by the arrow and relation counts per residue.
//!
//!     cargo run --example generate_presentation -- 4 uniform

use ngr_workbench::format::format_presentation;
use ngr_workbench::ngr::{ngr_presentation_with, NgrOrder};

fn main() -> ngr_workbench::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(3, |s| s.parse().expect("n must be an integer"));
    let order = args
        .next()
        .map_or(NgrOrder::Alternating, |s| NgrOrder::from_name(&s).expect("order: alternating or uniform"));
    let inst = ngr_presentation_with(n, order)?;
    let pres = &inst.presentation;
    print!("{}", format_presentation(pres));
    eprintln!("order {}", order.name());
    for r in 0..pres.period() {
        let rels = pres.relations().iter().filter(|f| f.start() == Some(r)).count();
        eprintln!("residue {r}: {} arrows, {rels} relations", pres.arrow_count(r));
    }
    Ok(())
}
