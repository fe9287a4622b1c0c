//! The noncommutative Grassmannian of codimension two as a 6-periodic
//! quiver presentation.
//!
//! Residues `0, 3` carry the arrows `e_ij` (`i < j`), residues `1, 2, 4, 5`
//! carry `x_1..x_n`. The algebra itself is 3-periodic; residues `3, 4, 5`
//! repeat the relations of `0, 1, 2`. Two arrow orders are provided: the
//! 6-periodic tables whose relation leads are listed by
//! [`expected_leading_monomials`], and a 3-periodic order under which the
//! quadratic relations already form a Groebner basis.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::quiver::{coeff, Coeff, NcPolynomial, PathWord, QuiverPresentation};

pub const PERIOD: usize = 6;

/// A generated presentation together with a human name for each relation.
#[derive(Clone, Debug)]
pub struct NgrInstance {
    pub n: usize,
    pub order: NgrOrder,
    pub presentation: QuiverPresentation,
    /// Parallel to `presentation.relations()`, e.g. `f1@0`, `c12@1`.
    pub relation_names: Vec<String>,
}

fn check_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::Domain(format!("NGr needs n >= 3, got {n}")));
    }
    Ok(())
}

pub fn x_label(i: usize) -> String {
    format!("x{i}")
}

/// Label of `e_ij` for `i < j`.
pub fn e_label(i: usize, j: usize, n: usize) -> String {
    debug_assert!(i < j);
    if n < 10 {
        format!("e{i}{j}")
    } else {
        format!("e{i}_{j}")
    }
}

/// `e_ij` with the convention `e_ij = -e_ji`: label of the stored arrow and
/// the sign in front of it. `None` on the diagonal.
pub fn signed_e(i: usize, j: usize, n: usize) -> Option<(String, i64)> {
    match i.cmp(&j) {
        std::cmp::Ordering::Less => Some((e_label(i, j, n), 1)),
        std::cmp::Ordering::Greater => Some((e_label(j, i, n), -1)),
        std::cmp::Ordering::Equal => None,
    }
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            v.push((i, j));
        }
    }
    v
}

/// Choice of arrow orders for the generated presentation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum NgrOrder {
    /// 6-periodic: the `e` order at residue 0 has `e_ij > e_kl` iff `i > k`
    /// or `i = k, j > l`, the opposite lexicographic order sits at residue 3;
    /// `x_1 < .. < x_n` at residues 1 and 5, `x_1 > .. > x_n` at 2 and 4.
    #[default]
    Alternating,
    /// 3-periodic: `e_12` greatest (lexicographic) at residues 0 and 3 and
    /// `x_1 < .. < x_n` everywhere.
    Uniform,
}

impl NgrOrder {
    pub fn name(self) -> &'static str {
        match self {
            NgrOrder::Alternating => "alternating",
            NgrOrder::Uniform => "uniform",
        }
    }

    pub fn from_name(s: &str) -> Option<NgrOrder> {
        match s {
            "alternating" => Some(NgrOrder::Alternating),
            "uniform" => Some(NgrOrder::Uniform),
            _ => None,
        }
    }
}

/// Arrow labels at each residue, greatest first.
fn arrow_tables(n: usize, order: NgrOrder) -> Vec<Vec<String>> {
    let lex: Vec<String> = pairs(n).into_iter().map(|(i, j)| e_label(i, j, n)).collect();
    let mut rev = lex.clone();
    rev.reverse();
    let up: Vec<String> = (1..=n).rev().map(x_label).collect(); // x_1 < .. < x_n
    let down: Vec<String> = (1..=n).map(x_label).collect(); // x_1 > .. > x_n
    match order {
        NgrOrder::Alternating => vec![rev, up.clone(), down.clone(), lex, down, up],
        NgrOrder::Uniform => vec![lex.clone(), up.clone(), up.clone(), lex, up.clone(), up],
    }
}

struct Builder<'a> {
    pres: &'a QuiverPresentation,
    start: usize,
    terms: Vec<(PathWord, Coeff)>,
}

impl<'a> Builder<'a> {
    fn new(pres: &'a QuiverPresentation, start: usize) -> Self {
        Builder {
            pres,
            start,
            terms: Vec::new(),
        }
    }

    fn term(&mut self, c: i64, labels: &[&str]) -> Result<&mut Self> {
        let w = self.pres.word_from_labels(self.start, labels)?;
        self.terms.push((w, coeff(c)));
        Ok(self)
    }

    fn build(&mut self) -> Result<NcPolynomial> {
        NcPolynomial::from_terms(std::mem::take(&mut self.terms))
    }
}

pub(crate) fn f_relation(pres: &QuiverPresentation, n: usize, t: usize, i: usize) -> Result<NcPolynomial> {
    let mut b = Builder::new(pres, t);
    for j in (1..=n).filter(|&j| j != i) {
        let (e, s) = signed_e(i, j, n).expect("off-diagonal");
        b.term(s, &[&e, &x_label(j)])?;
    }
    b.build()
}

fn c_relation(pres: &QuiverPresentation, t: usize, i: usize, j: usize) -> Result<NcPolynomial> {
    Builder::new(pres, t)
        .term(1, &[&x_label(i), &x_label(j)])?
        .term(-1, &[&x_label(j), &x_label(i)])?
        .build()
}

fn g_relation(pres: &QuiverPresentation, n: usize, t: usize, i: usize) -> Result<NcPolynomial> {
    let mut b = Builder::new(pres, t);
    for j in (1..=n).filter(|&j| j != i) {
        let (e, s) = signed_e(j, i, n).expect("off-diagonal");
        b.term(s, &[&x_label(j), &e])?;
    }
    b.build()
}

pub fn ngr_presentation(n: usize) -> Result<NgrInstance> {
    ngr_presentation_with(n, NgrOrder::Alternating)
}

pub fn ngr_presentation_with(n: usize, order: NgrOrder) -> Result<NgrInstance> {
    check_n(n)?;
    let quiver = QuiverPresentation::new(arrow_tables(n, order), vec![])?;
    let mut relations = Vec::new();
    let mut names = Vec::new();
    for t in 0..PERIOD {
        match t % 3 {
            0 => {
                for i in 1..=n {
                    relations.push(f_relation(&quiver, n, t, i)?);
                    names.push(format!("f{i}@{t}"));
                }
            }
            1 => {
                for (i, j) in pairs(n) {
                    relations.push(c_relation(&quiver, t, i, j)?);
                    names.push(format!("c{i}{j}@{t}"));
                }
            }
            _ => {
                for i in 1..=n {
                    relations.push(g_relation(&quiver, n, t, i)?);
                    names.push(format!("g{i}@{t}"));
                }
            }
        }
    }
    let presentation = quiver.with_relations(relations)?;
    Ok(NgrInstance {
        n,
        order,
        presentation,
        relation_names: names,
    })
}

impl NgrInstance {
    /// Recognises a presentation equal to a generated one (either order) for
    /// the `n` read off residue 1.
    pub fn recognize(pres: &QuiverPresentation) -> Option<NgrInstance> {
        if pres.period() != PERIOD {
            return None;
        }
        let n = pres.arrow_count(1);
        let theirs: BTreeSet<_> = pres.relations().iter().map(|p| format!("{p:?}")).collect();
        [NgrOrder::Alternating, NgrOrder::Uniform].into_iter().find_map(|order| {
            let inst = ngr_presentation_with(n, order).ok()?;
            let ours: BTreeSet<_> = inst.presentation.relations().iter().map(|p| format!("{p:?}")).collect();
            let same_quiver = (0..PERIOD).all(|r| {
                inst.presentation.arrows(r) == pres.arrows(r)
                    && (0..pres.arrow_count(r) as u16)
                        .all(|a| inst.presentation.rank(r, a) == pres.rank(r, a))
            });
            (ours == theirs && same_quiver).then_some(inst)
        })
    }
}

/// The leading monomials of the relations under the alternating order, per
/// residue.
pub fn expected_leading_monomials(n: usize) -> Result<Vec<BTreeSet<PathWord>>> {
    check_n(n)?;
    let inst = ngr_presentation(n)?;
    let pres = &inst.presentation;
    let w = |t: usize, a: String, b: String| pres.word_from_labels(t, &[&a, &b]);
    let mut out = vec![BTreeSet::new(); PERIOD];
    for i in 1..n {
        out[0].insert(w(0, e_label(i, n, n), x_label(n))?);
    }
    out[0].insert(w(0, e_label(n - 1, n, n), x_label(n - 1))?);
    for i in 1..=n {
        for j in 1..i {
            out[1].insert(w(1, x_label(i), x_label(j))?);
            out[4].insert(w(4, x_label(j), x_label(i))?);
        }
    }
    for i in 2..=n {
        out[2].insert(w(2, x_label(1), e_label(1, i, n))?);
        out[3].insert(w(3, e_label(1, i, n), x_label(1))?);
    }
    out[2].insert(w(2, x_label(2), e_label(1, 2, n))?);
    out[3].insert(w(3, e_label(1, 2, n), x_label(2))?);
    for i in 1..n {
        out[5].insert(w(5, x_label(n), e_label(i, n, n))?);
    }
    out[5].insert(w(5, x_label(n - 1), e_label(n - 1, n, n))?);
    Ok(out)
}

/// Closed-form dimensions of the low components, indexed by the triangle
/// quiver vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormDims {
    pub d01: i64,
    pub d12: i64,
    pub d20: i64,
    pub d02: i64,
    pub d13: i64,
    pub d24: i64,
    pub d03: i64,
    pub d14: i64,
    pub d25: i64,
}

impl ClosedFormDims {
    /// Dimension of the component from `i` of length `len` (`len <= 3`).
    pub fn component(&self, i: usize, len: usize) -> Option<i64> {
        Some(match (i % 3, len) {
            (_, 0) => 1,
            (0, 1) => self.d01,
            (1, 1) => self.d12,
            (2, 1) => self.d20,
            (0, 2) => self.d02,
            (1, 2) => self.d13,
            (2, 2) => self.d24,
            (0, 3) => self.d03,
            (1, 3) => self.d14,
            (2, 3) => self.d25,
            _ => return None,
        })
    }
}

pub fn closed_form_dims(n: usize) -> Result<ClosedFormDims> {
    check_n(n)?;
    let n = n as i64;
    let cubic = n * (n * n - n - 2) / 2;
    let quartic = (n.pow(4) - 5 * n * n + 4) / 4;
    Ok(ClosedFormDims {
        d01: n * (n - 1) / 2,
        d12: n,
        d20: n,
        d02: cubic,
        d13: n * (n + 1) / 2,
        d24: cubic,
        d03: quartic,
        d14: quartic,
        d25: (n.pow(4) - n.pow(3) - 4 * n * n + 2) / 2,
    })
}

/// A cyclic word: letters as `(residue mod cycle length, label)` in cyclic
/// order, stored as its least rotation.
pub type CyclicWord = Vec<(usize, String)>;

fn canonical_rotation(w: CyclicWord) -> CyclicWord {
    (0..w.len())
        .map(|k| {
            let mut r = w.clone();
            r.rotate_left(k);
            r
        })
        .min()
        .unwrap_or_default()
}

/// A combination of cyclic paths on the 3-periodic quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperpotentialElement {
    cycle: usize,
    terms: BTreeMap<CyclicWord, Coeff>,
}

impl SuperpotentialElement {
    pub fn new(cycle: usize) -> Self {
        SuperpotentialElement {
            cycle,
            terms: BTreeMap::new(),
        }
    }

    /// Adds `c` times the cycle through `letters` (each `(residue, label)`).
    pub fn add_cycle(&mut self, letters: CyclicWord, c: Coeff) {
        let key = canonical_rotation(
            letters
                .into_iter()
                .map(|(r, l)| (r % self.cycle, l))
                .collect(),
        );
        let v = self.terms.entry(key.clone()).or_insert_with(Coeff::zero);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CyclicWord, &Coeff)> {
        self.terms.iter()
    }

    /// The same element with every monomial rotated by `k` letters.
    pub fn rotated(&self, k: usize) -> SuperpotentialElement {
        let mut out = SuperpotentialElement::new(self.cycle);
        for (w, c) in &self.terms {
            let mut r = w.clone();
            let len = r.len();
            if len > 0 {
                r.rotate_left(k % len);
            }
            out.add_cycle(r, c.clone());
        }
        out
    }

    /// Derivative at the arrow `index` of `residue`: every occurrence of the
    /// arrow is cut out and the rest of the cycle is read as a path that
    /// starts right after it.
    pub fn cyclic_derivative(
        &self,
        pres: &QuiverPresentation,
        residue: usize,
        index: u16,
    ) -> Result<NcPolynomial> {
        if residue >= pres.period() || index as usize >= pres.arrow_count(residue) {
            return Err(Error::Domain(format!(
                "arrow {index} at residue {residue} is not in the quiver"
            )));
        }
        let label = pres.label(residue, index).to_string();
        let me = (residue % self.cycle, label);
        let mut out = NcPolynomial::zero();
        for (w, c) in &self.terms {
            for k in 0..w.len() {
                if w[k] != me {
                    continue;
                }
                let rest: Vec<&str> = (1..w.len())
                    .map(|m| w[(k + m) % w.len()].1.as_str())
                    .collect();
                let word = pres.word_from_labels(residue + 1, &rest)?;
                out.add_term(word, c.clone())?;
            }
        }
        Ok(out)
    }
}

/// `Σ_{t ∈ 3Z} Σ_{i ≠ j} x_i^{t-1} e_ij^t x_j^{t+1}`, with `e_ij = -e_ji`.
pub fn superpotential(n: usize) -> Result<SuperpotentialElement> {
    check_n(n)?;
    let mut w = SuperpotentialElement::new(3);
    for i in 1..=n {
        for j in (1..=n).filter(|&j| j != i) {
            let (e, s) = signed_e(i, j, n).expect("off-diagonal");
            w.add_cycle(vec![(2, x_label(i)), (0, e), (1, x_label(j))], coeff(s));
        }
    }
    Ok(w)
}
