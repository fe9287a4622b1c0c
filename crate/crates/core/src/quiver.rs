//! Periodic quivers, paths, rational path polynomials and the reverse
//! lexicographic path order.
//!
//! Positions live on the line quiver `... -> t -> t+1 -> ...`; a presentation
//! of period `p` only records data per residue `t mod p`. Arrows at residue
//! `r` go from `r` to `r + 1`, so a path is a start residue plus a sequence
//! of arrow indices, each interpreted at the residue it sits on.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact field coefficients.
pub type Coeff = BigRational;

pub fn coeff(n: i64) -> Coeff {
    BigRational::from_integer(n.into())
}

/// A path in the quiver. The empty path is the vertex idempotent at `start`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathWord {
    start: usize,
    letters: Vec<u16>,
}

impl PathWord {
    pub fn vertex(start: usize) -> Self {
        PathWord {
            start,
            letters: Vec::new(),
        }
    }

    /// Builds a path without checking it against a quiver; use
    /// [`QuiverPresentation::check_word`] when the letters come from outside.
    pub fn new(start: usize, letters: Vec<u16>) -> Self {
        PathWord { start, letters }
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn letters(&self) -> &[u16] {
        &self.letters
    }

    pub fn degree(&self) -> usize {
        self.letters.len()
    }

    pub fn is_vertex(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn end(&self, period: usize) -> usize {
        (self.start + self.letters.len()) % period
    }

    /// Residue on which the letter at `pos` sits.
    pub fn residue_at(&self, pos: usize, period: usize) -> usize {
        (self.start + pos) % period
    }

    pub fn compose(&self, other: &PathWord, period: usize) -> Result<PathWord> {
        if self.end(period) != other.start % period {
            return Err(Error::Composition(format!(
                "path ends at residue {} but the next path starts at residue {}",
                self.end(period),
                other.start
            )));
        }
        Ok(self.concat(other))
    }

    /// Concatenation; the caller guarantees composability.
    pub fn concat(&self, other: &PathWord) -> PathWord {
        let mut letters = Vec::with_capacity(self.letters.len() + other.letters.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        PathWord {
            start: self.start,
            letters,
        }
    }

    pub fn push(&self, letter: u16) -> PathWord {
        let mut letters = self.letters.clone();
        letters.push(letter);
        PathWord {
            start: self.start,
            letters,
        }
    }

    pub fn subword(&self, pos: usize, len: usize, period: usize) -> PathWord {
        PathWord {
            start: (self.start + pos) % period,
            letters: self.letters[pos..pos + len].to_vec(),
        }
    }

    pub fn prefix(&self, len: usize) -> PathWord {
        PathWord {
            start: self.start,
            letters: self.letters[..len].to_vec(),
        }
    }

    pub fn suffix_from(&self, pos: usize, period: usize) -> PathWord {
        self.subword(pos, self.letters.len() - pos, period)
    }

    /// Moves the path `k` positions along the line quiver.
    pub fn shift(&self, k: usize, period: usize) -> PathWord {
        PathWord {
            start: (self.start + k) % period,
            letters: self.letters.clone(),
        }
    }
}

impl fmt::Debug for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "@{}{:?}", self.start, self.letters)
    }
}

/// A finite combination of paths sharing their start residue and length.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct NcPolynomial {
    terms: BTreeMap<PathWord, Coeff>,
}

impl NcPolynomial {
    pub fn zero() -> Self {
        NcPolynomial::default()
    }

    pub fn monomial(word: PathWord, c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(word, c);
        }
        NcPolynomial { terms }
    }

    pub fn word(word: PathWord) -> Self {
        Self::monomial(word, Coeff::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (PathWord, Coeff)>>(terms: I) -> Result<Self> {
        let mut p = NcPolynomial::zero();
        for (w, c) in terms {
            p.add_term(w, c)?;
        }
        Ok(p)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PathWord, &Coeff)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &PathWord) -> Coeff {
        self.terms.get(w).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Start residue and degree, `None` for the zero polynomial.
    pub fn shape(&self) -> Option<(usize, usize)> {
        self.terms.keys().next().map(|w| (w.start(), w.degree()))
    }

    pub fn degree(&self) -> Option<usize> {
        self.shape().map(|s| s.1)
    }

    pub fn start(&self) -> Option<usize> {
        self.shape().map(|s| s.0)
    }

    pub fn add_term(&mut self, w: PathWord, c: Coeff) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        if let Some((s, d)) = self.shape() {
            if s != w.start() || d != w.degree() {
                return Err(Error::Homogeneity(format!(
                    "term {:?} does not match start {} / degree {}",
                    w, s, d
                )));
            }
        }
        self.add_term_unchecked(w, c);
        Ok(())
    }

    pub(crate) fn add_term_unchecked(&mut self, w: PathWord, c: Coeff) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &NcPolynomial) -> Result<NcPolynomial> {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &NcPolynomial) -> Result<NcPolynomial> {
        self.add(&other.scale(&-Coeff::one()))
    }

    pub fn scale(&self, c: &Coeff) -> NcPolynomial {
        if c.is_zero() {
            return NcPolynomial::zero();
        }
        NcPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, a)| (w.clone(), a * c))
                .collect(),
        }
    }

    /// Free-algebra product (plain concatenation of every pair of terms).
    pub fn mul(&self, other: &NcPolynomial, period: usize) -> Result<NcPolynomial> {
        let mut out = NcPolynomial::zero();
        for (u, a) in self.terms() {
            for (v, b) in other.terms() {
                let w = u.compose(v, period)?;
                out.add_term_unchecked(w, a * b);
            }
        }
        Ok(out)
    }

    pub fn mul_word_right(&self, s: &PathWord, period: usize) -> Result<NcPolynomial> {
        let mut out = NcPolynomial::zero();
        for (u, a) in self.terms() {
            out.add_term_unchecked(u.compose(s, period)?, a.clone());
        }
        Ok(out)
    }

    pub fn mul_word_left(&self, s: &PathWord, period: usize) -> Result<NcPolynomial> {
        let mut out = NcPolynomial::zero();
        for (u, a) in self.terms() {
            out.add_term_unchecked(s.compose(u, period)?, a.clone());
        }
        Ok(out)
    }

    /// Greatest term under `order`.
    pub fn lead(&self, order: &PathOrder<'_>) -> Option<(&PathWord, &Coeff)> {
        self.terms
            .iter()
            .max_by(|(u, _), (v, _)| order.cmp_unchecked(u, v))
    }

    pub fn into_terms(self) -> BTreeMap<PathWord, Coeff> {
        self.terms
    }
}

impl fmt::Debug for NcPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("{}*{:?}", c, w))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A periodic quiver with ordered arrows and homogeneous relations over the
/// rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuiverPresentation {
    period: usize,
    arrows: Vec<Vec<String>>,
    // rank[r][i]: position of arrow i in the order at residue r, larger is greater
    rank: Vec<Vec<u16>>,
    // inverse of rank
    by_rank: Vec<Vec<u16>>,
    relations: Vec<NcPolynomial>,
}

impl QuiverPresentation {
    /// `arrows[r]` lists the arrows at residue `r` from greatest to smallest.
    pub fn new(arrows: Vec<Vec<String>>, relations: Vec<NcPolynomial>) -> Result<Self> {
        let rank = arrows
            .iter()
            .map(|a| (0..a.len()).rev().map(|i| i as u16).collect())
            .collect();
        Self::with_order(arrows, rank, relations)
    }

    /// General constructor: `rank[r]` must be a permutation of `0..arrows[r].len()`.
    pub fn with_order(
        arrows: Vec<Vec<String>>,
        rank: Vec<Vec<u16>>,
        relations: Vec<NcPolynomial>,
    ) -> Result<Self> {
        let period = arrows.len();
        if period == 0 {
            return Err(Error::Presentation("period must be positive".into()));
        }
        if rank.len() != period {
            return Err(Error::Presentation(
                "order table count differs from the period".into(),
            ));
        }
        let mut by_rank = Vec::with_capacity(period);
        for (r, (labels, ranks)) in arrows.iter().zip(&rank).enumerate() {
            if labels.len() > u16::MAX as usize {
                return Err(Error::Presentation(format!("too many arrows at residue {r}")));
            }
            for (i, l) in labels.iter().enumerate() {
                if l.is_empty() {
                    return Err(Error::Presentation(format!("empty label at residue {r}")));
                }
                if labels[..i].contains(l) {
                    return Err(Error::Presentation(format!(
                        "duplicate label {l:?} at residue {r}"
                    )));
                }
            }
            if ranks.len() != labels.len() {
                return Err(Error::Presentation(format!(
                    "order at residue {r} does not cover exactly its arrows"
                )));
            }
            let mut inv = vec![u16::MAX; labels.len()];
            for (i, &k) in ranks.iter().enumerate() {
                let k = k as usize;
                if k >= labels.len() || inv[k] != u16::MAX {
                    return Err(Error::Presentation(format!(
                        "order at residue {r} is not a strict total order"
                    )));
                }
                inv[k] = i as u16;
            }
            by_rank.push(inv);
        }
        let pres = QuiverPresentation {
            period,
            arrows,
            rank,
            by_rank,
            relations: Vec::new(),
        };
        for rel in &relations {
            for (w, _) in rel.terms() {
                pres.check_word(w)?;
            }
        }
        let mut pres = pres;
        pres.relations = relations.into_iter().filter(|r| !r.is_zero()).collect();
        Ok(pres)
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn arrows(&self, residue: usize) -> &[String] {
        &self.arrows[residue % self.period]
    }

    pub fn arrow_count(&self, residue: usize) -> usize {
        self.arrows[residue % self.period].len()
    }

    pub fn relations(&self) -> &[NcPolynomial] {
        &self.relations
    }

    pub fn label(&self, residue: usize, index: u16) -> &str {
        &self.arrows[residue % self.period][index as usize]
    }

    pub fn arrow_index(&self, residue: usize, label: &str) -> Option<u16> {
        self.arrows[residue % self.period]
            .iter()
            .position(|l| l == label)
            .map(|i| i as u16)
    }

    /// Order position of an arrow, larger meaning greater.
    pub fn rank(&self, residue: usize, index: u16) -> u16 {
        self.rank[residue % self.period][index as usize]
    }

    pub(crate) fn arrow_of_rank(&self, residue: usize, rank: u16) -> u16 {
        self.by_rank[residue % self.period][rank as usize]
    }

    /// Arrows at `residue` from greatest to smallest.
    pub fn arrows_descending(&self, residue: usize) -> impl Iterator<Item = u16> + '_ {
        let inv = &self.by_rank[residue % self.period];
        inv.iter().rev().copied()
    }

    pub fn check_word(&self, w: &PathWord) -> Result<()> {
        if w.start() >= self.period {
            return Err(Error::Presentation(format!(
                "start residue {} outside period {}",
                w.start(),
                self.period
            )));
        }
        for (k, &a) in w.letters().iter().enumerate() {
            let r = w.residue_at(k, self.period);
            if a as usize >= self.arrows[r].len() {
                return Err(Error::Presentation(format!(
                    "letter {k} of {w:?} is not an arrow at residue {r}"
                )));
            }
        }
        Ok(())
    }

    pub fn word_from_labels(&self, start: usize, labels: &[&str]) -> Result<PathWord> {
        let start = start % self.period;
        let mut letters = Vec::with_capacity(labels.len());
        for (k, l) in labels.iter().enumerate() {
            let r = (start + k) % self.period;
            let idx = self.arrow_index(r, l).ok_or_else(|| {
                Error::Presentation(format!("no arrow {l:?} at residue {r}"))
            })?;
            letters.push(idx);
        }
        Ok(PathWord::new(start, letters))
    }

    /// Dot-separated labels, or `1` for a vertex idempotent.
    pub fn format_word(&self, w: &PathWord) -> String {
        if w.is_vertex() {
            return "1".to_string();
        }
        let labels: Vec<&str> = w
            .letters()
            .iter()
            .enumerate()
            .map(|(k, &a)| self.label(w.residue_at(k, self.period), a))
            .collect();
        labels.join(".")
    }

    pub fn order(&self) -> PathOrder<'_> {
        PathOrder { pres: self }
    }

    /// Same quiver, order and relations read with period `factor * p`.
    pub fn unroll(&self, factor: usize) -> Result<QuiverPresentation> {
        if factor == 0 {
            return Err(Error::Domain("unroll factor must be positive".into()));
        }
        let p = self.period;
        let arrows = (0..p * factor).map(|r| self.arrows[r % p].clone()).collect();
        let rank = (0..p * factor).map(|r| self.rank[r % p].clone()).collect();
        let mut relations = Vec::new();
        for k in 0..factor {
            for rel in &self.relations {
                let mut q = NcPolynomial::zero();
                for (w, c) in rel.terms() {
                    q.add_term_unchecked(PathWord::new(w.start() + k * p, w.letters().to_vec()), c.clone());
                }
                relations.push(q);
            }
        }
        QuiverPresentation::with_order(arrows, rank, relations)
    }

    pub fn with_relations(&self, relations: Vec<NcPolynomial>) -> Result<QuiverPresentation> {
        QuiverPresentation::with_order(self.arrows.clone(), self.rank.clone(), relations)
    }
}

/// Sort key whose lexicographic order is the path order on paths of one
/// graded component: ranks listed from the last letter to the first.
pub type OrderKey = Vec<u16>;

/// Reverse lexicographic order: equal-length paths are compared at the
/// rightmost position where they differ, using the order at that residue.
#[derive(Clone, Copy)]
pub struct PathOrder<'a> {
    pres: &'a QuiverPresentation,
}

impl<'a> PathOrder<'a> {
    pub fn presentation(&self) -> &'a QuiverPresentation {
        self.pres
    }

    pub fn compare(&self, u: &PathWord, v: &PathWord) -> Result<Ordering> {
        let p = self.pres.period;
        if u.degree() != v.degree() || u.start() % p != v.start() % p {
            return Err(Error::Order(format!(
                "paths {u:?} and {v:?} lie in different components"
            )));
        }
        Ok(self.cmp_unchecked(u, v))
    }

    /// Comparison for paths already known to share start and degree.
    pub fn cmp_unchecked(&self, u: &PathWord, v: &PathWord) -> Ordering {
        let p = self.pres.period;
        for k in (0..u.degree()).rev() {
            let (a, b) = (u.letters()[k], v.letters()[k]);
            if a != b {
                let r = u.residue_at(k, p);
                return self.pres.rank(r, a).cmp(&self.pres.rank(r, b));
            }
        }
        Ordering::Equal
    }

    pub fn key(&self, w: &PathWord) -> OrderKey {
        let p = self.pres.period;
        (0..w.degree())
            .rev()
            .map(|k| self.pres.rank(w.residue_at(k, p), w.letters()[k]))
            .collect()
    }

    pub fn word_from_key(&self, start: usize, key: &[u16]) -> PathWord {
        let p = self.pres.period;
        let d = key.len();
        let letters = (0..d)
            .map(|k| self.pres.arrow_of_rank((start + k) % p, key[d - 1 - k]))
            .collect();
        PathWord::new(start, letters)
    }
}

/// Every path of `degree` letters from `start`, in no particular order.
pub fn all_paths(pres: &QuiverPresentation, start: usize, degree: usize) -> Vec<PathWord> {
    let p = pres.period();
    let mut out = vec![PathWord::vertex(start % p)];
    for k in 0..degree {
        let r = (start + k) % p;
        let n = pres.arrow_count(r) as u16;
        out = out
            .iter()
            .flat_map(|w| (0..n).map(move |a| w.push(a)))
            .collect();
    }
    out
}
