//! Reduces a few words of NGr(3) to normal form and multiplies normal words.

use ngr_workbench::format::format_polynomial;
use ngr_workbench::groebner::Strategy;
use ngr_workbench::ngr::ngr_presentation;
use ngr_workbench::{buchberger_complete, NcPolynomial};

fn main() -> ngr_workbench::Result<()> {
    let pres = ngr_presentation(3)?.presentation;
    let gb = buchberger_complete(&pres, 6)?;
    let show = |start: usize, labels: &[&str]| -> ngr_workbench::Result<()> {
        let w = pres.word_from_labels(start, labels)?;
        let f = NcPolynomial::word(w.clone());
        let a = gb.normal_form_with(&f, Strategy::LeftmostGreatest);
        let b = gb.normal_form_with(&f, Strategy::RightmostLeast);
        assert_eq!(a, b);
        println!("{:>16} @{start} -> {}", pres.format_word(&w), format_polynomial(&pres, &a));
        Ok(())
    };
    show(1, &["x3", "x1"])?;
    show(0, &["e12", "x2"])?;
    show(0, &["e23", "x3", "x1"])?;
    show(2, &["x3", "e12", "x2", "x1"])?;

    let u = pres.word_from_labels(0, &["e12"])?;
    let v = pres.word_from_labels(1, &["x1", "x2"])?;
    let uv = gb.star_product(&u, &v)?;
    println!("e12 * x1.x2 = {}", format_polynomial(&pres, &uv));
    for start in 0..3 {
        let counts: Vec<usize> = (0..=5).map(|d| gb.normal_words(start, d).len()).collect();
        println!("normal words from {start}: {counts:?}");
    }
    Ok(())
}
