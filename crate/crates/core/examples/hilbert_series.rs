//! Folded Hilbert matrix of NGr(n) and the Koszul identity H(t) D(-t) = Id.
//!
//!     cargo run --release --example hilbert_series -- 4 8

use ngr_workbench::buchberger_complete;
use ngr_workbench::hilbert::{hilbert_matrix, koszul_dual_hilbert_ngr, verify_koszul_identity};
use ngr_workbench::ngr::ngr_presentation;

fn main() -> ngr_workbench::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(3, |s| s.parse().unwrap());
    let trunc: usize = args.next().map_or(6, |s| s.parse().unwrap());
    let gb = buchberger_complete(&ngr_presentation(n)?.presentation, trunc)?;
    let h = hilbert_matrix(&gb, trunc, true)?;
    println!("H(t) through t^{trunc}:\n{}", h.render());
    println!("dual D(t):\n{}", koszul_dual_hilbert_ngr(n, trunc)?.render());
    let report = verify_koszul_identity(&gb, n, trunc)?;
    for r in &report.results {
        println!("{:<14} first deviation {:?}", r.orientation.name(), r.first_deviation);
    }
    println!("identity holds as {}", report.verified.name());
    Ok(())
}
