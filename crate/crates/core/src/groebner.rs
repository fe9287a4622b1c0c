//! Rewriting modulo a Groebner basis of a homogeneous path-algebra ideal.
//!
//! A rule `lead -> tail` encodes the basis element `lead - tail`. Completion
//! runs degree by degree: the input relations and the S-polynomials of all
//! overlaps of a given degree are reduced by the rules found so far and then
//! interreduced among themselves, which keeps the basis reduced throughout.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::quiver::{Coeff, NcPolynomial, OrderKey, PathOrder, PathWord, QuiverPresentation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lead: PathWord,
    pub tail: NcPolynomial,
}

impl RewriteRule {
    /// `lead - tail`.
    pub fn element(&self) -> NcPolynomial {
        let mut p = self.tail.scale(&-Coeff::one());
        p.add_term_unchecked(self.lead.clone(), Coeff::one());
        p
    }
}

/// Where the next reduction happens inside a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Greatest reducible monomial, leftmost occurrence of a lead.
    LeftmostGreatest,
    /// Least reducible monomial, rightmost occurrence of a lead.
    RightmostLeast,
}

#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pres: Arc<QuiverPresentation>,
    rules: Vec<RewriteRule>,
    completed_through: usize,
    index: HashMap<PathWord, usize>,
    lead_lengths: Vec<usize>,
}

impl GroebnerBasis {
    fn empty(pres: Arc<QuiverPresentation>) -> Self {
        GroebnerBasis {
            pres,
            rules: Vec::new(),
            completed_through: 0,
            index: HashMap::new(),
            lead_lengths: Vec::new(),
        }
    }

    fn push_rule(&mut self, rule: RewriteRule) {
        let len = rule.lead.degree();
        if !self.lead_lengths.contains(&len) {
            self.lead_lengths.push(len);
            self.lead_lengths.sort_unstable_by(|a, b| b.cmp(a));
        }
        self.index.insert(rule.lead.clone(), self.rules.len());
        self.rules.push(rule);
    }

    /// Builds a basis from explicit rules, checking that every tail is
    /// homogeneous with and smaller than its lead and that the leads are
    /// reduced. `completed_through` is taken on trust.
    pub fn from_rules(
        pres: Arc<QuiverPresentation>,
        rules: Vec<RewriteRule>,
        completed_through: usize,
    ) -> Result<Self> {
        {
            let ord = pres.order();
            for r in &rules {
                pres.check_word(&r.lead)?;
                if r.lead.is_vertex() {
                    return Err(Error::Domain("rule with a vertex as lead".into()));
                }
                for (w, _) in r.tail.terms() {
                    pres.check_word(w)?;
                    if ord.compare(w, &r.lead)? != std::cmp::Ordering::Less {
                        return Err(Error::Order(format!(
                            "tail monomial {} is not below lead {}",
                            pres.format_word(w),
                            pres.format_word(&r.lead)
                        )));
                    }
                }
            }
        }
        let gb = Self::assume_rules(pres, rules, completed_through);
        for (i, r) in gb.rules.iter().enumerate() {
            if let Some((_, j)) = gb.occurrences(&r.lead).find(|&(_, j)| j != i) {
                return Err(Error::Precondition(format!(
                    "lead {} contains lead {}",
                    gb.pres.format_word(&r.lead),
                    gb.pres.format_word(&gb.rules[j].lead)
                )));
            }
        }
        Ok(gb)
    }

    /// Builds a basis with no order or reducedness checks. Meant for
    /// synthetic fixtures that deliberately break the rule invariants.
    pub fn assume_rules(
        pres: Arc<QuiverPresentation>,
        rules: Vec<RewriteRule>,
        completed_through: usize,
    ) -> Self {
        let mut gb = Self::empty(pres);
        for r in rules {
            gb.push_rule(r);
        }
        gb.completed_through = completed_through;
        gb
    }

    pub fn presentation(&self) -> &QuiverPresentation {
        &self.pres
    }

    pub fn presentation_arc(&self) -> Arc<QuiverPresentation> {
        Arc::clone(&self.pres)
    }

    pub fn order(&self) -> PathOrder<'_> {
        self.pres.order()
    }

    pub fn period(&self) -> usize {
        self.pres.period()
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn completed_through(&self) -> usize {
        self.completed_through
    }

    /// Whether every overlap of the current leads has been resolved, so the
    /// rules form a Groebner basis in all degrees. Overlaps of leads of
    /// length at most `L` have degree at most `2L - 1`.
    pub fn is_closed(&self) -> bool {
        self.completed_through + 1 >= 2 * self.max_rule_degree()
    }

    /// Whether results in `degree` are canonical.
    pub fn covers(&self, degree: usize) -> bool {
        degree <= self.completed_through || self.is_closed()
    }

    pub fn max_rule_degree(&self) -> usize {
        self.lead_lengths.first().copied().unwrap_or(0)
    }

    pub fn is_quadratic(&self) -> bool {
        self.lead_lengths.iter().all(|&l| l == 2)
    }

    pub fn rule_for(&self, lead: &PathWord) -> Option<&RewriteRule> {
        self.index.get(lead).map(|&i| &self.rules[i])
    }

    /// `(position, rule index)` of every lead occurring in `w`, ordered by
    /// position and then by decreasing lead length.
    fn occurrences<'a>(&'a self, w: &'a PathWord) -> impl Iterator<Item = (usize, usize)> + 'a {
        let p = self.period();
        (0..w.degree()).flat_map(move |pos| {
            self.lead_lengths.iter().filter_map(move |&len| {
                if pos + len > w.degree() {
                    return None;
                }
                self.index.get(&w.subword(pos, len, p)).map(|&i| (pos, i))
            })
        })
    }

    fn leftmost(&self, w: &PathWord) -> Option<(usize, usize)> {
        self.occurrences(w).next()
    }

    fn rightmost(&self, w: &PathWord) -> Option<(usize, usize)> {
        let p = self.period();
        for pos in (0..w.degree()).rev() {
            for &len in &self.lead_lengths {
                if pos + len <= w.degree() {
                    if let Some(&i) = self.index.get(&w.subword(pos, len, p)) {
                        return Some((pos, i));
                    }
                }
            }
        }
        None
    }

    /// No lead occurs as a subword of `w`.
    pub fn is_normal(&self, w: &PathWord) -> bool {
        self.leftmost(w).is_none()
    }

    /// Whether `w` is normal given that `w` minus its last letter already is.
    pub fn extends_normally(&self, w: &PathWord) -> bool {
        let p = self.period();
        let d = w.degree();
        self.lead_lengths
            .iter()
            .all(|&len| len > d || !self.index.contains_key(&w.subword(d - len, len, p)))
    }

    /// `w` with the lead of `rule` at `pos` replaced by its tail.
    fn rewrite(&self, w: &PathWord, pos: usize, rule: usize) -> impl Iterator<Item = (PathWord, &Coeff)> + '_ {
        let r = &self.rules[rule];
        let before = w.letters()[..pos].to_vec();
        let after = w.letters()[pos + r.lead.degree()..].to_vec();
        let start = w.start();
        r.tail.terms().map(move |(t, c)| {
            let mut letters = Vec::with_capacity(before.len() + t.degree() + after.len());
            letters.extend_from_slice(&before);
            letters.extend_from_slice(t.letters());
            letters.extend_from_slice(&after);
            (PathWord::new(start, letters), c)
        })
    }

    pub fn normal_form(&self, p: &NcPolynomial) -> NcPolynomial {
        self.normal_form_with(p, Strategy::LeftmostGreatest)
    }

    pub fn normal_form_with(&self, p: &NcPolynomial, strategy: Strategy) -> NcPolynomial {
        match strategy {
            Strategy::LeftmostGreatest => self.nf_greatest_first(p),
            Strategy::RightmostLeast => self.nf_least_first(p),
        }
    }

    fn nf_greatest_first(&self, p: &NcPolynomial) -> NcPolynomial {
        let Some(start) = p.start() else {
            return NcPolynomial::zero();
        };
        let ord = self.order();
        let mut work: BTreeMap<OrderKey, Coeff> = BTreeMap::new();
        let add = |work: &mut BTreeMap<OrderKey, Coeff>, key: OrderKey, c: Coeff| {
            let e = work.entry(key.clone()).or_insert_with(Coeff::zero);
            *e += c;
            if e.is_zero() {
                work.remove(&key);
            }
        };
        for (w, c) in p.terms() {
            add(&mut work, ord.key(w), c.clone());
        }
        let mut out = NcPolynomial::zero();
        // popped monomials only ever produce smaller ones, so each popped
        // normal monomial is final
        while let Some((key, c)) = work.pop_last() {
            let w = ord.word_from_key(start, &key);
            match self.leftmost(&w) {
                None => out.add_term_unchecked(w, c),
                Some((pos, rule)) => {
                    for (v, a) in self.rewrite(&w, pos, rule) {
                        add(&mut work, ord.key(&v), a * &c);
                    }
                }
            }
        }
        out
    }

    fn nf_least_first(&self, p: &NcPolynomial) -> NcPolynomial {
        let ord = self.order();
        let mut cur = p.clone();
        loop {
            let target = cur
                .terms()
                .filter_map(|(w, c)| self.rightmost(w).map(|hit| (w.clone(), c.clone(), hit)))
                .min_by(|a, b| ord.cmp_unchecked(&a.0, &b.0));
            let Some((w, c, (pos, rule))) = target else {
                return cur;
            };
            cur.add_term_unchecked(w.clone(), -c.clone());
            for (v, a) in self.rewrite(&w, pos, rule) {
                cur.add_term_unchecked(v, a * &c);
            }
        }
    }

    /// Product of two normal words in the quotient algebra.
    pub fn star_product(&self, u: &PathWord, v: &PathWord) -> Result<NcPolynomial> {
        for w in [u, v] {
            if !self.is_normal(w) {
                return Err(Error::Precondition(format!(
                    "{} is not a normal word",
                    self.pres.format_word(w)
                )));
            }
        }
        let uv = u.compose(v, self.period())?;
        if !self.covers(uv.degree()) {
            return Err(Error::Precondition(format!(
                "product degree {} exceeds completion degree {}",
                uv.degree(),
                self.completed_through
            )));
        }
        Ok(self.normal_form(&NcPolynomial::word(uv)))
    }

    /// Normal words of `degree` letters from `start`, extending letter by
    /// letter and checking only new suffixes.
    pub fn normal_words(&self, start: usize, degree: usize) -> Vec<PathWord> {
        let p = self.period();
        let mut layer = vec![PathWord::vertex(start % p)];
        for k in 0..degree {
            let r = (start + k) % p;
            let n = self.pres.arrow_count(r) as u16;
            layer = layer
                .iter()
                .flat_map(|w| (0..n).map(move |a| w.push(a)))
                .filter(|w| self.extends_normally(w))
                .collect();
        }
        layer
    }

    /// Every overlap `a = xy`, `b = yz` between two leads, as the overlap
    /// word `xyz` with the two rule indices and the length of `y`.
    fn overlaps_of_degree(&self, degree: usize) -> Vec<(PathWord, usize, usize, usize)> {
        let p = self.period();
        let mut out = Vec::new();
        for (ia, a) in self.rules.iter().enumerate() {
            let la = a.lead.degree();
            for (ib, b) in self.rules.iter().enumerate() {
                let lb = b.lead.degree();
                if la + lb <= degree {
                    continue;
                }
                let k = la + lb - degree;
                if k >= la.min(lb) {
                    continue;
                }
                if a.lead.residue_at(la - k, p) != b.lead.start()
                    || a.lead.letters()[la - k..] != b.lead.letters()[..k]
                {
                    continue;
                }
                let word = a.lead.concat(&PathWord::new(0, b.lead.letters()[k..].to_vec()));
                out.push((word, ia, ib, k));
            }
        }
        out
    }

    /// S-polynomials of all overlaps of the given degree.
    pub fn s_polynomials(&self, degree: usize) -> Vec<NcPolynomial> {
        self.overlaps_of_degree(degree)
            .into_iter()
            .map(|(word, ia, ib, _k)| {
                let la = self.rules[ia].lead.degree();
                let mut s = NcPolynomial::zero();
                for (v, c) in self.rewrite(&word, 0, ia) {
                    s.add_term_unchecked(v, c.clone());
                }
                for (v, c) in self.rewrite(&word, la - (la + self.rules[ib].lead.degree() - degree), ib) {
                    s.add_term_unchecked(v, -c.clone());
                }
                s
            })
            .collect()
    }
}

/// Reduced row echelon form of homogeneous polynomials with pivots at their
/// greatest monomials; returns the monic rows as rules.
fn interreduce(polys: Vec<NcPolynomial>, ord: &PathOrder<'_>) -> Vec<RewriteRule> {
    let mut by_start: BTreeMap<usize, Vec<BTreeMap<OrderKey, Coeff>>> = BTreeMap::new();
    for p in polys {
        if let Some(s) = p.start() {
            let row = p.terms().map(|(w, c)| (ord.key(w), c.clone())).collect();
            by_start.entry(s).or_default().push(row);
        }
    }
    let mut rules = Vec::new();
    for (start, rows) in by_start {
        let mut done: Vec<(OrderKey, BTreeMap<OrderKey, Coeff>)> = Vec::new();
        for mut row in rows {
            for (pk, prow) in &done {
                if let Some(c) = row.get(pk).cloned() {
                    for (k, a) in prow {
                        let e = row.entry(k.clone()).or_insert_with(Coeff::zero);
                        *e -= &c * a;
                        if e.is_zero() {
                            row.remove(k);
                        }
                    }
                }
            }
            let Some((pivot, lc)) = row.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) else {
                continue;
            };
            let inv = lc.recip();
            for a in row.values_mut() {
                *a *= &inv;
            }
            for (_, prow) in done.iter_mut() {
                if let Some(c) = prow.get(&pivot).cloned() {
                    for (k, a) in &row {
                        let e = prow.entry(k.clone()).or_insert_with(Coeff::zero);
                        *e -= &c * a;
                        if e.is_zero() {
                            prow.remove(k);
                        }
                    }
                }
            }
            done.push((pivot, row));
        }
        for (pivot, row) in done {
            let lead = ord.word_from_key(start, &pivot);
            let mut tail = NcPolynomial::zero();
            for (k, c) in row {
                if k != pivot {
                    tail.add_term_unchecked(ord.word_from_key(start, &k), -c);
                }
            }
            rules.push(RewriteRule { lead, tail });
        }
    }
    rules
}

/// Buchberger completion through `max_degree`.
/// The defining relations of `pres`, interreduced into monic rules without
/// any completion.
pub fn relation_rules(pres: &QuiverPresentation) -> Vec<RewriteRule> {
    interreduce(pres.relations().to_vec(), &pres.order())
}

pub fn buchberger_complete(pres: &QuiverPresentation, max_degree: usize) -> Result<GroebnerBasis> {
    buchberger_complete_arc(Arc::new(pres.clone()), max_degree)
}

pub fn buchberger_complete_arc(pres: Arc<QuiverPresentation>, max_degree: usize) -> Result<GroebnerBasis> {
    let mut by_degree: BTreeMap<usize, Vec<NcPolynomial>> = BTreeMap::new();
    for rel in pres.relations() {
        let d = rel.degree().expect("relations are nonzero");
        if d == 0 {
            return Err(Error::Domain("relations must have positive degree".into()));
        }
        by_degree.entry(d).or_default().push(rel.clone());
    }
    if let Some(&top) = by_degree.keys().next_back() {
        if top > max_degree {
            return Err(Error::Precondition(format!(
                "max degree {max_degree} is below the relation degree {top}"
            )));
        }
    }
    let mut gb = GroebnerBasis::empty(Arc::clone(&pres));
    for degree in 1..=max_degree {
        let mut candidates: Vec<NcPolynomial> = by_degree.remove(&degree).unwrap_or_default();
        candidates.extend(gb.s_polynomials(degree));
        let reduced: Vec<NcPolynomial> = candidates
            .iter()
            .map(|c| gb.normal_form(c))
            .filter(|c| !c.is_zero())
            .collect();
        let ord = pres.order();
        for rule in interreduce(reduced, &ord) {
            gb.push_rule(rule);
        }
        gb.completed_through = degree;
    }
    gb.completed_through = max_degree;
    Ok(gb)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Right,
    Left,
}

/// A failing instance: for the right side `u * (w s) != (u * w) s`, for the
/// left side `(s w) * u != s (w * u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub u: PathWord,
    pub w: PathWord,
    pub s: PathWord,
}

#[derive(Clone, Debug)]
pub struct ProcessingReport {
    pub r: usize,
    pub degree_bound: usize,
    pub side: Side,
    pub verified: bool,
    pub counterexample: Option<Counterexample>,
    /// Number of `(u, v)` pairs examined.
    pub pairs_checked: usize,
}

/// Exhaustive bounded check of `r`-processing.
///
/// Pairs of positive-length normal words `u`, `v` with
/// `deg u + deg v <= degree_bound` are enumerated. For the right side `v` is
/// split as `w s` with `|w| = r` and the product must satisfy
/// `u * v = (u * w) s`; the split with `|w| = r + 1` is checked as well.
pub fn check_r_processing(
    gb: &GroebnerBasis,
    r: usize,
    degree_bound: usize,
    side: Side,
) -> Result<ProcessingReport> {
    if r == 0 {
        return Err(Error::Precondition("r must be at least 1".into()));
    }
    if !gb.covers(degree_bound) {
        return Err(Error::Precondition(format!(
            "basis completed through {} but degree bound is {}",
            gb.completed_through(),
            degree_bound
        )));
    }
    let p = gb.period();
    let mut normal: HashMap<(usize, usize), Vec<PathWord>> = HashMap::new();
    for start in 0..p {
        for d in 1..degree_bound {
            normal.insert((start, d), gb.normal_words(start, d));
        }
    }
    let mut partial: HashMap<(PathWord, PathWord), NcPolynomial> = HashMap::new();
    let mut pairs_checked = 0;
    let report = |counterexample: Option<Counterexample>, pairs_checked| ProcessingReport {
        r,
        degree_bound,
        side,
        verified: counterexample.is_none(),
        counterexample,
        pairs_checked,
    };
    for total in (r + 2)..=degree_bound {
        for du in 1..total - r {
            let dv = total - du;
            for start in 0..p {
                // right: u then v; left: v then u
                let (first_start, first_deg, second_deg) = match side {
                    Side::Right => (start, du, dv),
                    Side::Left => (start, dv, du),
                };
                let second_start = (first_start + first_deg) % p;
                let firsts = &normal[&(first_start, first_deg)];
                let seconds = &normal[&(second_start, second_deg)];
                for a in firsts {
                    for b in seconds {
                        pairs_checked += 1;
                        let full = gb.normal_form(&NcPolynomial::word(a.concat(b)));
                        for wlen in [r, r + 1] {
                            if wlen >= dv {
                                continue;
                            }
                            let (u, w, s, expected) = match side {
                                Side::Right => {
                                    let w = b.prefix(wlen);
                                    let s = b.suffix_from(wlen, p);
                                    let uw = partial
                                        .entry((a.clone(), w.clone()))
                                        .or_insert_with(|| gb.normal_form(&NcPolynomial::word(a.concat(&w))));
                                    let e = uw.mul_word_right(&s, p)?;
                                    (a.clone(), w, s, e)
                                }
                                Side::Left => {
                                    let s = a.prefix(dv - wlen);
                                    let w = a.suffix_from(dv - wlen, p);
                                    let wu = partial
                                        .entry((w.clone(), b.clone()))
                                        .or_insert_with(|| gb.normal_form(&NcPolynomial::word(w.concat(b))));
                                    let e = wu.mul_word_left(&s, p)?;
                                    (b.clone(), w, s, e)
                                }
                            };
                            let stays_normal = expected.terms().all(|(t, _)| gb.is_normal(t));
                            if expected != full || !stays_normal {
                                return Ok(report(Some(Counterexample { u, w, s }), pairs_checked));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(report(None, pairs_checked))
}

/// Outcome of the letter-level properties that drive the 3-processing
/// argument for quadratic bases.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProofProperties {
    /// (1) every tail letter has the kind of the lead letter at its position.
    pub kinds_preserved: bool,
    /// (2) the second letter never increases from lead to tail.
    pub second_letter_nonincreasing: bool,
    /// (4) a normal same-kind 2-gram `yz` stays normal when `y` decreases.
    pub downward_closed: bool,
    pub failures: Vec<String>,
}

impl ProofProperties {
    pub fn holds(&self) -> bool {
        self.kinds_preserved && self.second_letter_nonincreasing && self.downward_closed
    }
}

/// Kind of an arrow: the alphabetic prefix of its label (`e12` -> `e`).
pub fn arrow_kind(label: &str) -> &str {
    let end = label
        .find(|c: char| !c.is_ascii_alphabetic())
        .unwrap_or(label.len());
    &label[..end]
}

pub fn proof_properties_check(gb: &GroebnerBasis) -> Result<ProofProperties> {
    if !gb.is_quadratic() {
        return Err(Error::Precondition("basis is not quadratic".into()));
    }
    let pres = gb.presentation();
    let p = pres.period();
    let mut out = ProofProperties {
        kinds_preserved: true,
        second_letter_nonincreasing: true,
        downward_closed: true,
        failures: Vec::new(),
    };
    for rule in gb.rules() {
        let lead = &rule.lead;
        let r1 = (lead.start() + 1) % p;
        for (t, _) in rule.tail.terms() {
            for k in 0..2 {
                let r = (lead.start() + k) % p;
                if arrow_kind(pres.label(r, lead.letters()[k])) != arrow_kind(pres.label(r, t.letters()[k])) {
                    out.kinds_preserved = false;
                    out.failures.push(format!(
                        "(1) {} -> {}",
                        pres.format_word(lead),
                        pres.format_word(t)
                    ));
                }
            }
            if pres.rank(r1, t.letters()[1]) > pres.rank(r1, lead.letters()[1]) {
                out.second_letter_nonincreasing = false;
                out.failures.push(format!(
                    "(2) {} -> {}",
                    pres.format_word(lead),
                    pres.format_word(t)
                ));
            }
        }
    }
    for r in 0..p {
        let r1 = (r + 1) % p;
        for y in 0..pres.arrow_count(r) as u16 {
            for z in 0..pres.arrow_count(r1) as u16 {
                if arrow_kind(pres.label(r, y)) != arrow_kind(pres.label(r1, z)) {
                    continue;
                }
                let w = PathWord::new(r, vec![y, z]);
                if !gb.is_normal(&w) {
                    continue;
                }
                for y2 in 0..pres.arrow_count(r) as u16 {
                    if arrow_kind(pres.label(r, y2)) != arrow_kind(pres.label(r, y)) {
                        continue;
                    }
                    let lower = PathWord::new(r, vec![y2, z]);
                    if pres.rank(r, y2) <= pres.rank(r, y) && !gb.is_normal(&lower) {
                        out.downward_closed = false;
                        out.failures.push(format!(
                            "(4) {} normal but {} is not",
                            pres.format_word(&w),
                            pres.format_word(&lower)
                        ));
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ngr::{ngr_presentation, ngr_presentation_with, NgrOrder};
    use crate::quiver::coeff;

    fn ngr_gb(n: usize, d: usize) -> GroebnerBasis {
        buchberger_complete(&ngr_presentation(n).unwrap().presentation, d).unwrap()
    }

    fn one_vertex(labels: &[&str], rels: Vec<NcPolynomial>) -> QuiverPresentation {
        QuiverPresentation::new(vec![labels.iter().map(|s| s.to_string()).collect()], rels).unwrap()
    }

    #[test]
    fn ngr3_single_reduction() {
        let gb = ngr_gb(3, 4);
        let p = gb.presentation();
        let w = p.word_from_labels(1, &["x3", "x1"]).unwrap();
        let nf = gb.normal_form(&NcPolynomial::word(w.clone()));
        let expected = NcPolynomial::word(p.word_from_labels(1, &["x1", "x3"]).unwrap());
        assert_eq!(nf, expected);
        let u = w.prefix(1);
        let v = w.suffix_from(1, p.period());
        assert_eq!(gb.star_product(&u, &v).unwrap(), expected);
        assert!(gb.normal_form(&NcPolynomial::zero()).is_zero());
    }

    #[test]
    fn relations_reduce_to_zero() {
        for n in 3..=4 {
            let gb = ngr_gb(n, 4);
            for rel in gb.presentation().relations() {
                assert!(gb.normal_form(rel).is_zero());
            }
        }
    }

    fn per_residue(gb: &GroebnerBasis, degree: usize) -> Vec<usize> {
        (0..6)
            .map(|r| {
                gb.rules()
                    .iter()
                    .filter(|x| x.lead.start() == r && x.lead.degree() == degree)
                    .count()
            })
            .collect()
    }

    #[test]
    fn uniform_order_completion_stays_quadratic() {
        for n in 3..=4 {
            let pres = ngr_presentation_with(n, NgrOrder::Uniform).unwrap().presentation;
            let gb = buchberger_complete(&pres, 5).unwrap();
            assert!(gb.is_quadratic(), "n={n}");
            assert_eq!(gb.rules().len(), pres.relations().len());
            assert_eq!(gb.completed_through(), 5);
        }
        let pres = ngr_presentation_with(3, NgrOrder::Uniform).unwrap().presentation;
        assert_eq!(per_residue(&buchberger_complete(&pres, 4).unwrap(), 2), vec![3; 6]);
    }

    #[test]
    fn alternating_order_needs_cubic_rules() {
        let gb = ngr_gb(3, 6);
        assert_eq!(per_residue(&gb, 2), vec![3; 6]);
        assert_eq!(gb.max_rule_degree(), 3);
        assert_eq!(per_residue(&gb, 3).iter().sum::<usize>(), 24);
        // the quadratic leads leave 14 normal words in a component of dimension 10
        let quadratic = GroebnerBasis::assume_rules(gb.presentation_arc(), relation_rules(gb.presentation()), 2);
        assert_eq!(quadratic.normal_words(0, 3).len(), 14);
        assert_eq!(gb.normal_words(0, 3).len(), 10);
    }

    #[test]
    fn no_overlaps_keeps_input() {
        // a.b and c.d never overlap
        let q = one_vertex(&["a", "b", "c", "d"], vec![]);
        let w = |s: &[&str]| q.word_from_labels(0, s).unwrap();
        let rel1 = NcPolynomial::from_terms([(w(&["a", "b"]), coeff(2)), (w(&["b", "b"]), coeff(-4))]).unwrap();
        let rel2 = NcPolynomial::from_terms([(w(&["c", "d"]), coeff(1)), (w(&["d", "d"]), coeff(1))]).unwrap();
        // a > b > c > d; leads a.b (vs b.b: last letters equal, a > b) and c.d
        let q = q.with_relations(vec![rel1, rel2]).unwrap();
        let gb = buchberger_complete(&q, 5).unwrap();
        assert_eq!(gb.rules().len(), 2);
        let ab = gb.rule_for(&w(&["a", "b"])).unwrap();
        assert_eq!(ab.tail, NcPolynomial::monomial(w(&["b", "b"]), coeff(2)));
        assert_eq!(gb.completed_through(), 5);
    }

    #[test]
    fn free_algebra_and_bad_degree() {
        let q = one_vertex(&["a", "b"], vec![]);
        let gb = buchberger_complete(&q, 3).unwrap();
        assert!(gb.rules().is_empty());
        let gb = ngr_presentation(3).unwrap().presentation;
        assert!(matches!(buchberger_complete(&gb, 1), Err(Error::Precondition(_))));
    }

    #[test]
    fn commutators_give_polynomial_ring() {
        // a > b: b.a -> a.b, normal words a^i b^j
        let q = one_vertex(&["a", "b"], vec![]);
        let w = |s: &[&str]| q.word_from_labels(0, s).unwrap();
        let rel = NcPolynomial::from_terms([(w(&["a", "b"]), coeff(1)), (w(&["b", "a"]), coeff(-1))]).unwrap();
        let q = q.with_relations(vec![rel]).unwrap();
        let gb = buchberger_complete(&q, 6).unwrap();
        assert!(gb.is_quadratic());
        for d in 0..=6 {
            assert_eq!(gb.normal_words(0, d).len(), d + 1);
        }
    }

    #[test]
    fn self_overlap_forces_a_cubic_rule() {
        // x > y: x.x -> y.x; the overlap x.x.x yields y.y.x - x.y.x
        let q = one_vertex(&["x", "y"], vec![]);
        let w = |s: &[&str]| q.word_from_labels(0, s).unwrap();
        let rel = NcPolynomial::from_terms([(w(&["x", "x"]), coeff(1)), (w(&["y", "x"]), coeff(-1))]).unwrap();
        let q = q.with_relations(vec![rel]).unwrap();
        let gb = buchberger_complete(&q, 6).unwrap();
        let cubic = gb.rule_for(&w(&["x", "y", "x"])).expect("cubic rule");
        assert_eq!(cubic.tail, NcPolynomial::word(w(&["y", "y", "x"])));
        assert!(!gb.is_quadratic());
        for d in 3..=6 {
            for s in gb.s_polynomials(d) {
                assert!(gb.normal_form(&s).is_zero());
            }
        }
        for rel in q.relations() {
            assert!(gb.normal_form(rel).is_zero());
        }
    }

    #[test]
    fn strategies_agree_after_completion() {
        let gb = ngr_gb(3, 5);
        let p = gb.presentation();
        let words = crate::quiver::all_paths(p, 0, 4);
        let poly = NcPolynomial::from_terms(
            words.iter().enumerate().map(|(i, w)| (w.clone(), coeff((i % 7) as i64 - 3))),
        )
        .unwrap();
        assert_eq!(
            gb.normal_form_with(&poly, Strategy::LeftmostGreatest),
            gb.normal_form_with(&poly, Strategy::RightmostLeast)
        );
    }

    #[test]
    fn star_product_guards() {
        let gb = ngr_gb(3, 4);
        let p = gb.presentation();
        let lead = p.word_from_labels(1, &["x3", "x1"]).unwrap();
        let x = p.word_from_labels(3, &["e12"]).unwrap();
        assert!(matches!(gb.star_product(&lead, &x), Err(Error::Precondition(_))));
        let v = p.word_from_labels(1, &["x1"]).unwrap();
        assert_eq!(gb.star_product(&PathWord::vertex(1), &v).unwrap(), NcPolynomial::word(v));
    }

    #[test]
    fn free_path_algebra_is_one_processing() {
        let q = QuiverPresentation::new(
            vec![vec!["a".into(), "b".into()], vec!["c".into()], vec!["d".into(), "e".into()]],
            vec![],
        )
        .unwrap();
        let gb = buchberger_complete(&q, 6).unwrap();
        for side in [Side::Right, Side::Left] {
            let rep = check_r_processing(&gb, 1, 6, side).unwrap();
            assert!(rep.verified);
            assert!(rep.pairs_checked > 0);
        }
    }

    #[test]
    fn commutative_ring_is_not_processing() {
        // b.a -> a.b bubbles b to the far right
        let q = one_vertex(&["a", "b"], vec![]);
        let w = |s: &[&str]| q.word_from_labels(0, s).unwrap();
        let rel = NcPolynomial::from_terms([(w(&["b", "a"]), coeff(1)), (w(&["a", "b"]), coeff(-1))]).unwrap();
        let q = q.with_relations(vec![rel]).unwrap();
        let gb = buchberger_complete(&q, 6).unwrap();
        let rep = check_r_processing(&gb, 3, 6, Side::Right).unwrap();
        assert!(!rep.verified);
        assert!(rep.counterexample.is_some());
        assert!(check_r_processing(&gb, 0, 6, Side::Right).is_err());
        // x.x -> y.x completed only through 2 is not closed
        let q = one_vertex(&["x", "y"], vec![]);
        let w = |s: &[&str]| q.word_from_labels(0, s).unwrap();
        let rel = NcPolynomial::from_terms([(w(&["x", "x"]), coeff(1)), (w(&["y", "x"]), coeff(-1))]).unwrap();
        let gb = buchberger_complete(&q.with_relations(vec![rel]).unwrap(), 2).unwrap();
        assert!(!gb.is_closed());
        assert!(check_r_processing(&gb, 1, 3, Side::Right).is_err());
    }

    #[test]
    fn proof_properties_on_ngr() {
        for n in 3..=4 {
            let gb = ngr_gb(n, 4);
            assert!(matches!(proof_properties_check(&gb), Err(Error::Precondition(_))));
            let rels = GroebnerBasis::assume_rules(gb.presentation_arc(), relation_rules(gb.presentation()), 2);
            let props = proof_properties_check(&rels).unwrap();
            assert!(props.holds(), "{:?}", props.failures);

            let pres = ngr_presentation_with(n, NgrOrder::Uniform).unwrap().presentation;
            let props = proof_properties_check(&buchberger_complete(&pres, 3).unwrap()).unwrap();
            assert!(props.kinds_preserved && props.second_letter_nonincreasing);
            assert!(!props.downward_closed);
        }
    }

    #[test]
    fn synthetic_rule_breaks_second_letter_property() {
        // x1 < x2 < x3 at both residues; x2.x2 -> x1.x3 raises the second letter
        let labels: Vec<String> = ["x3", "x2", "x1"].iter().map(|s| s.to_string()).collect();
        let q = Arc::new(QuiverPresentation::new(vec![labels.clone(), labels], vec![]).unwrap());
        let w = |s: &[&str]| q.word_from_labels(0, s).unwrap();
        let rule = RewriteRule {
            lead: w(&["x2", "x2"]),
            tail: NcPolynomial::word(w(&["x1", "x3"])),
        };
        assert!(GroebnerBasis::from_rules(Arc::clone(&q), vec![rule.clone()], 2).is_err());
        let gb = GroebnerBasis::assume_rules(q, vec![rule], 2);
        let props = proof_properties_check(&gb).unwrap();
        assert!(!props.second_letter_nonincreasing);
        assert!(!props.holds());
        assert!(props.kinds_preserved);
    }

    #[test]
    fn arrow_kinds() {
        assert_eq!(arrow_kind("e12"), "e");
        assert_eq!(arrow_kind("x1"), "x");
        assert_eq!(arrow_kind("abc"), "abc");
    }
}
