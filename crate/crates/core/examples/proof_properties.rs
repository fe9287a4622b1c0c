//! Letter-level properties (1), (2), (4) of quadratic rule systems.

use std::sync::Arc;

use ngr_workbench::groebner::{proof_properties_check, relation_rules};
use ngr_workbench::ngr::{ngr_presentation_with, NgrOrder};
use ngr_workbench::{buchberger_complete, GroebnerBasis};

fn main() -> ngr_workbench::Result<()> {
    for n in 3..=5 {
        let alt = ngr_presentation_with(n, NgrOrder::Alternating)?.presentation;
        let rules = GroebnerBasis::assume_rules(Arc::new(alt.clone()), relation_rules(&alt), 2);
        let p = proof_properties_check(&rules)?;
        println!("n={n} alternating relations: (1) {} (2) {} (4) {}", p.kinds_preserved, p.second_letter_nonincreasing, p.downward_closed);
        match proof_properties_check(&buchberger_complete(&alt, 5)?) {
            Ok(p) => println!("       completed basis: holds {}", p.holds()),
            Err(e) => println!("       completed basis: {e}"),
        }
        let uni = ngr_presentation_with(n, NgrOrder::Uniform)?.presentation;
        let p = proof_properties_check(&buchberger_complete(&uni, 4)?)?;
        println!("n={n} uniform basis: (1) {} (2) {} (4) {}", p.kinds_preserved, p.second_letter_nonincreasing, p.downward_closed);
        for f in p.failures.iter().take(2) {
            println!("       {f}");
        }
    }
    Ok(())
}
