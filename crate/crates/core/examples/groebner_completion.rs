//! Completes NGr(n) under both orders and tabulates the rules by degree.
//!
//!     cargo run --release --example groebner_completion -- 4 10

use std::collections::BTreeMap;

use ngr_workbench::buchberger_complete;
use ngr_workbench::ngr::{ngr_presentation_with, NgrOrder};

fn main() -> ngr_workbench::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(3, |s| s.parse().unwrap());
    let degree: usize = args.next().map_or(6, |s| s.parse().unwrap());
    for order in [NgrOrder::Alternating, NgrOrder::Uniform] {
        let pres = ngr_presentation_with(n, order)?.presentation;
        let gb = buchberger_complete(&pres, degree)?;
        let mut by_degree: BTreeMap<usize, usize> = BTreeMap::new();
        for rule in gb.rules() {
            *by_degree.entry(rule.lead.degree()).or_default() += 1;
        }
        println!(
            "{:<12} n={n} through degree {}: {} rules {:?}, closed: {}",
            order.name(),
            gb.completed_through(),
            gb.rules().len(),
            by_degree,
            gb.is_closed()
        );
        if let Some(rule) = gb.rules().iter().find(|r| r.lead.degree() > 2) {
            println!("  e.g. {} -> {}", pres.format_word(&rule.lead), ngr_workbench::format::format_polynomial(&pres, &rule.tail));
        }
    }
    Ok(())
}
