//! Random right ideals of NGr(3): the largest minimal syzygy degree against
//! the bound d + 6.
//!
//!     cargo run --release --example coherence_probe -- 2 25 42

use ngr_workbench::buchberger_complete;
use ngr_workbench::coherence::coherence_probe;
use ngr_workbench::ngr::ngr_presentation;

fn main() -> ngr_workbench::Result<()> {
    let mut args = std::env::args().skip(1);
    let d: usize = args.next().map_or(1, |s| s.parse().unwrap());
    let trials: usize = args.next().map_or(20, |s| s.parse().unwrap());
    let seed: u64 = args.next().map_or(42, |s| s.parse().unwrap());
    let gb = buchberger_complete(&ngr_presentation(3)?.presentation, d + 8)?;
    let rep = coherence_probe(&gb, 3, d, trials, seed)?;
    for s in rep.summaries.iter().take(8) {
        println!(
            "trial {:>2} at residue {}: generators in degrees {:?}, minimal syzygies {:?}",
            s.trial, s.start, s.generator_degrees, s.minimal_syzygy_degrees
        );
    }
    println!(
        "{} trials, max minimal syzygy degree {:?}, bound {}, passed {}",
        rep.trials, rep.max_syzygy_degree, rep.bound, rep.passed
    );
    Ok(())
}
