//! Graded Betti numbers of the simple modules of NGr(n).
//!
//!     cargo run --release --example resolve_simple -- 4 8

use ngr_workbench::buchberger_complete;
use ngr_workbench::coherence::{euler_characteristic, resolve_simple};
use ngr_workbench::ngr::ngr_presentation;

fn main() -> ngr_workbench::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(3, |s| s.parse().unwrap());
    let deg_bound: usize = args.next().map_or(6, |s| s.parse().unwrap());
    let gb = buchberger_complete(&ngr_presentation(n)?.presentation, deg_bound)?;
    for s in 0..6 {
        let b = resolve_simple(&gb, s, 5, deg_bound)?;
        let rows: Vec<String> = b.rows.iter().map(|r| format!("{r:?}")).collect();
        println!("S_{s}: length {}  {}", b.length(), rows.join(" "));
        println!("     euler {:?}", euler_characteristic(&gb, &b)?);
    }
    Ok(())
}
