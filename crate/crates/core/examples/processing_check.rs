//! Bounded r-processing check on NGr(3) and on a commutative toy algebra.
//!
//!     cargo run --release --example processing_check -- 3 9

use ngr_workbench::format::parse_presentation;
use ngr_workbench::groebner::check_r_processing;
use ngr_workbench::ngr::{ngr_presentation_with, NgrOrder};
use ngr_workbench::{buchberger_complete, GroebnerBasis, Side};

fn report(name: &str, gb: &GroebnerBasis, r: usize, bound: usize) -> ngr_workbench::Result<()> {
    let pres = gb.presentation();
    for side in [Side::Right, Side::Left] {
        let rep = check_r_processing(gb, r, bound, side)?;
        match &rep.counterexample {
            None => println!("{name}: {r}-processing {side:?} holds ({} pairs)", rep.pairs_checked),
            Some(c) => println!(
                "{name}: {r}-processing {side:?} fails at u={} w={} s={}",
                pres.format_word(&c.u),
                pres.format_word(&c.w),
                pres.format_word(&c.s)
            ),
        }
    }
    Ok(())
}

fn main() -> ngr_workbench::Result<()> {
    let mut args = std::env::args().skip(1);
    let r: usize = args.next().map_or(3, |s| s.parse().unwrap());
    let bound: usize = args.next().map_or(8, |s| s.parse().unwrap());
    for order in [NgrOrder::Alternating, NgrOrder::Uniform] {
        let pres = ngr_presentation_with(3, order)?.presentation;
        report(order.name(), &buchberger_complete(&pres, bound)?, r, bound)?;
    }
    let free = parse_presentation("period 2\narrows 0: b, a\narrows 1: y, x\n")?;
    report("free", &buchberger_complete(&free, bound)?, r, bound)?;
    let comm = parse_presentation("period 1\narrows 0: b, a\nrelation 0: b.a - a.b\n")?;
    report("commutative", &buchberger_complete(&comm, bound)?, r, bound)
}
