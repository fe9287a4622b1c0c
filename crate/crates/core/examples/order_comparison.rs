//! Comparing paths under the reverse lexicographic order of NGr(3).

use ngr_workbench::ngr::{ngr_presentation_with, NgrOrder};

fn main() -> ngr_workbench::Result<()> {
    for order in [NgrOrder::Alternating, NgrOrder::Uniform] {
        let pres = ngr_presentation_with(3, order)?.presentation;
        println!("{}:", order.name());
        for r in 0..6 {
            let labels: Vec<&str> = pres.arrows_descending(r).map(|a| pres.label(r, a)).collect();
            println!("  residue {r}: {}", labels.join(" > "));
        }
        let cases = [
            (1, ["x1", "x3"], ["x3", "x1"]),
            (0, ["e12", "x1"], ["e13", "x1"]),
            (3, ["e12", "x1"], ["e13", "x1"]),
            (2, ["x1", "e12"], ["x2", "e12"]),
        ];
        for (start, u, v) in cases {
            let (a, b) = (pres.word_from_labels(start, &u)?, pres.word_from_labels(start, &v)?);
            println!("  {}@{start} vs {}: {:?}", u.join("."), v.join("."), pres.order().compare(&a, &b)?);
        }
    }
    Ok(())
}
