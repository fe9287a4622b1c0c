//! Graded linear algebra over a completed presentation: component bases,
//! syzygies of finitely generated right submodules of free modules, minimal
//! resolutions of simple modules and randomized coherence probes.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::linalg::{self, Echelon, SparseVec};
use crate::quiver::{coeff, Coeff, NcPolynomial, PathWord};

/// Normal words of one graded component, greatest first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentBasis {
    pub start: usize,
    pub end: usize,
    pub degree: usize,
    pub words: Vec<PathWord>,
}

pub fn component_basis(gb: &GroebnerBasis, i: usize, degree: usize) -> Result<ComponentBasis> {
    if !gb.covers(degree) {
        return Err(Error::Precondition(format!(
            "degree {degree} exceeds completion degree {}",
            gb.completed_through()
        )));
    }
    let p = gb.period();
    let mut words = gb.normal_words(i, degree);
    let ord = gb.order();
    words.sort_by(|a, b| ord.cmp_unchecked(b, a));
    Ok(ComponentBasis {
        start: i % p,
        end: (i + degree) % p,
        degree,
        words,
    })
}

/// Right multiplication by single arrows, memoised per normal word.
pub struct Multiplier<'a> {
    gb: &'a GroebnerBasis,
    cache: HashMap<(PathWord, u16), NcPolynomial>,
}

impl<'a> Multiplier<'a> {
    pub fn new(gb: &'a GroebnerBasis) -> Self {
        Multiplier {
            gb,
            cache: HashMap::new(),
        }
    }

    pub fn basis(&self) -> &'a GroebnerBasis {
        self.gb
    }

    /// Normal form of `w·a` for a normal word `w`.
    pub fn word_times_arrow(&mut self, w: &PathWord, a: u16) -> NcPolynomial {
        if let Some(hit) = self.cache.get(&(w.clone(), a)) {
            return hit.clone();
        }
        let res = self.gb.normal_form(&NcPolynomial::word(w.push(a)));
        self.cache.insert((w.clone(), a), res.clone());
        res
    }

    /// `f·a` for `f` in normal form.
    pub fn times_arrow(&mut self, f: &NcPolynomial, a: u16) -> NcPolynomial {
        let mut out = NcPolynomial::zero();
        for (w, c) in f.terms() {
            for (t, d) in self.word_times_arrow(w, a).terms() {
                out.add_term_unchecked(t.clone(), c * d);
            }
        }
        out
    }

    /// `f·w` for `f` in normal form and any path `w` starting where `f` ends.
    pub fn times_word(&mut self, f: &NcPolynomial, w: &PathWord) -> NcPolynomial {
        w.letters().iter().fold(f.clone(), |acc, &a| self.times_arrow(&acc, a))
    }
}

/// A free right module `⊕_k P_{base + shift_k}` with generator `k` in degree
/// `shift_k`. A homogeneous element of degree `D` has component `k` of degree
/// `D - shift_k`; all components end at `base + D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeModule {
    pub base: usize,
    pub shifts: Vec<usize>,
}

impl FreeModule {
    pub fn slot_residue(&self, k: usize, period: usize) -> usize {
        (self.base + self.shifts[k]) % period
    }
}

/// A homogeneous element of a [`FreeModule`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleElement {
    pub degree: usize,
    pub components: Vec<NcPolynomial>,
}

impl ModuleElement {
    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }
}

/// Coordinates for the degree-`D` piece of a free module.
struct GradedBasis {
    words: Vec<(usize, PathWord)>,
    index: HashMap<(usize, PathWord), usize>,
}

impl GradedBasis {
    fn new(gb: &GroebnerBasis, module: &FreeModule, degree: usize) -> Self {
        let p = gb.period();
        let mut words = Vec::new();
        for (k, &s) in module.shifts.iter().enumerate() {
            if s <= degree {
                for w in gb.normal_words(module.slot_residue(k, p), degree - s) {
                    words.push((k, w));
                }
            }
        }
        let index = words.iter().cloned().enumerate().map(|(i, kw)| (kw, i)).collect();
        GradedBasis { words, index }
    }

    fn len(&self) -> usize {
        self.words.len()
    }

    fn coordinates(&self, e: &ModuleElement) -> SparseVec {
        let mut v = SparseVec::new();
        for (k, f) in e.components.iter().enumerate() {
            for (w, c) in f.terms() {
                let idx = self.index[&(k, w.clone())];
                v.insert(idx, c.clone());
            }
        }
        v
    }

    fn element(&self, v: &SparseVec, slots: usize, degree: usize) -> ModuleElement {
        let mut components = vec![NcPolynomial::zero(); slots];
        for (&i, c) in v {
            let (k, w) = &self.words[i];
            components[*k].add_term_unchecked(w.clone(), c.clone());
        }
        ModuleElement { degree, components }
    }
}

/// One minimal syzygy: a homogeneous element of the free module on the
/// generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Syzygy {
    pub degree: usize,
    pub components: Vec<NcPolynomial>,
}

/// Result of computing the syzygies of a set of module generators.
#[derive(Clone, Debug)]
pub struct SyzygyComputation {
    /// The free module on the generators.
    pub domain: FreeModule,
    pub generator_degrees: Vec<usize>,
    pub cutoff: usize,
    /// `dim` of the kernel in each degree up to the cutoff.
    pub kernel_dims: BTreeMap<usize, usize>,
    pub minimal: Vec<Syzygy>,
}

impl SyzygyComputation {
    pub fn minimal_degrees(&self) -> Vec<usize> {
        self.minimal.iter().map(|s| s.degree).collect()
    }
}

fn times_word_all(mul: &mut Multiplier<'_>, e: &ModuleElement, w: &PathWord) -> ModuleElement {
    ModuleElement {
        degree: e.degree + w.degree(),
        components: e.components.iter().map(|c| mul.times_word(c, w)).collect(),
    }
}

/// Kernel of `⊕_k P(-deg g_k) -> F`, `e_k -> g_k`, degree by degree through
/// `cutoff`, with minimal generators extracted modulo the submodule spanned
/// by lower ones.
pub fn module_syzygies(
    gb: &GroebnerBasis,
    ambient: &FreeModule,
    gens: &[ModuleElement],
    cutoff: usize,
) -> Result<SyzygyComputation> {
    if !gb.covers(cutoff) {
        return Err(Error::Precondition(format!(
            "cutoff {cutoff} exceeds completion degree {}",
            gb.completed_through()
        )));
    }
    let p = gb.period();
    for g in gens {
        if g.components.len() != ambient.shifts.len() {
            return Err(Error::Domain("generator has the wrong number of components".into()));
        }
        if g.is_zero() {
            return Err(Error::Domain("zero generator".into()));
        }
        for (k, c) in g.components.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let ok = c.start() == Some(ambient.slot_residue(k, p))
                && c.degree().map(|d| d + ambient.shifts[k]) == Some(g.degree);
            if !ok {
                return Err(Error::Domain(format!(
                    "generator component {k} does not fit the module grading"
                )));
            }
        }
    }
    let domain = FreeModule {
        base: ambient.base,
        shifts: gens.iter().map(|g| g.degree).collect(),
    };
    let gens: Vec<ModuleElement> = gens
        .iter()
        .map(|g| ModuleElement {
            degree: g.degree,
            components: g.components.iter().map(|c| gb.normal_form(c)).collect(),
        })
        .collect();
    let mut mul = Multiplier::new(gb);
    let mut kernel_dims = BTreeMap::new();
    let mut minimal: Vec<Syzygy> = Vec::new();
    // images g_k * w, grown one letter per degree
    let mut images: Vec<HashMap<PathWord, ModuleElement>> = gens
        .iter()
        .map(|g| HashMap::from([(PathWord::vertex((ambient.base + g.degree) % p), g.clone())]))
        .collect();
    let Some(&low) = domain.shifts.iter().min() else {
        return Ok(SyzygyComputation {
            domain,
            generator_degrees: Vec::new(),
            cutoff,
            kernel_dims,
            minimal,
        });
    };
    for degree in low..=cutoff {
        let source = GradedBasis::new(gb, &domain, degree);
        let target = GradedBasis::new(gb, ambient, degree);
        let mut columns = Vec::with_capacity(source.len());
        for (k, w) in &source.words {
            if !images[*k].contains_key(w) {
                let (prefix, last) = (w.prefix(w.degree() - 1), w.letters()[w.degree() - 1]);
                let base = images[*k][&prefix].clone();
                let next = times_word_all(&mut mul, &base, &PathWord::new(0, vec![last]));
                images[*k].insert(w.clone(), next);
            }
            columns.push(target.coordinates(&images[*k][w]));
        }
        let kernel = linalg::kernel(&columns);
        kernel_dims.insert(degree, kernel.len());
        if kernel.is_empty() {
            continue;
        }
        let mut span = Echelon::new();
        for s in &minimal {
            let e = ModuleElement {
                degree: s.degree,
                components: s.components.clone(),
            };
            let end = (ambient.base + s.degree) % p;
            for w in gb.normal_words(end, degree - s.degree) {
                let moved = times_word_all(&mut mul, &e, &w);
                span.insert(source.coordinates(&moved));
            }
        }
        if span.rank() == kernel.len() {
            continue;
        }
        for v in kernel {
            if span.insert(v.clone()).is_none() {
                let e = source.element(&v, domain.shifts.len(), degree);
                minimal.push(Syzygy {
                    degree,
                    components: e.components,
                });
            }
        }
    }
    Ok(SyzygyComputation {
        domain,
        generator_degrees: gens.iter().map(|g| g.degree).collect(),
        cutoff,
        kernel_dims,
        minimal,
    })
}

/// The matrix of the degree-`degree` piece of `e_k -> g_k` with one row per
/// target basis word, for exporting.
pub fn map_matrix(
    gb: &GroebnerBasis,
    ambient: &FreeModule,
    gens: &[ModuleElement],
    degree: usize,
) -> Result<Vec<Vec<Coeff>>> {
    if !gb.covers(degree) {
        return Err(Error::Precondition(format!(
            "degree {degree} exceeds completion degree {}",
            gb.completed_through()
        )));
    }
    let domain = FreeModule {
        base: ambient.base,
        shifts: gens.iter().map(|g| g.degree).collect(),
    };
    let source = GradedBasis::new(gb, &domain, degree);
    let target = GradedBasis::new(gb, ambient, degree);
    let mut mul = Multiplier::new(gb);
    let mut rows = vec![vec![Coeff::zero(); source.len()]; target.len()];
    for (col, (k, w)) in source.words.iter().enumerate() {
        let g = &gens[*k];
        let g = ModuleElement {
            degree: g.degree,
            components: g.components.iter().map(|c| gb.normal_form(c)).collect(),
        };
        for (row, c) in target.coordinates(&times_word_all(&mut mul, &g, w)) {
            rows[row][col] = c;
        }
    }
    Ok(rows)
}

/// Syzygies of a finitely generated right ideal of `P_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SyzygyReport {
    pub start: usize,
    pub generator_degrees: Vec<usize>,
    pub minimal_syzygy_degrees: Vec<usize>,
    pub kernel_dims: BTreeMap<usize, usize>,
    pub cutoff: usize,
    /// Last degree with a new minimal syzygy (or the top generator degree
    /// when there are none), provided at least two quiet degrees follow it
    /// inside the cutoff.
    pub saturated_at: Option<usize>,
    #[serde(skip)]
    pub generators: Vec<NcPolynomial>,
    #[serde(skip)]
    pub syzygies: Vec<Syzygy>,
}

pub fn ideal_syzygies(gb: &GroebnerBasis, gens: &[NcPolynomial], cutoff: usize) -> Result<SyzygyReport> {
    let mut start = None;
    for g in gens {
        let s = g
            .start()
            .ok_or_else(|| Error::Domain("zero generator".into()))?;
        if *start.get_or_insert(s) != s {
            return Err(Error::Domain("generators start at different residues".into()));
        }
    }
    if !gb.covers(cutoff) {
        return Err(Error::Precondition(format!(
            "cutoff {cutoff} exceeds completion degree {}",
            gb.completed_through()
        )));
    }
    let start = start.unwrap_or(0);
    let ambient = FreeModule {
        base: start,
        shifts: vec![0],
    };
    let elems: Vec<ModuleElement> = gens
        .iter()
        .map(|g| ModuleElement {
            degree: g.degree().expect("nonzero"),
            components: vec![g.clone()],
        })
        .collect();
    let comp = module_syzygies(gb, &ambient, &elems, cutoff)?;
    let degrees = comp.minimal_degrees();
    let last = degrees
        .iter()
        .copied()
        .max()
        .or_else(|| comp.generator_degrees.iter().copied().max());
    let saturated_at = last.filter(|&l| l + 2 <= cutoff);
    Ok(SyzygyReport {
        start,
        generator_degrees: comp.generator_degrees,
        minimal_syzygy_degrees: degrees,
        kernel_dims: comp.kernel_dims,
        cutoff,
        saturated_at,
        generators: gens.iter().map(|g| gb.normal_form(g)).collect(),
        syzygies: comp.minimal,
    })
}

/// Whether `Σ_k g_k * a_k` vanishes, expanded with star products.
pub fn syzygy_vanishes(gb: &GroebnerBasis, gens: &[NcPolynomial], syz: &Syzygy) -> Result<bool> {
    if gens.len() != syz.components.len() {
        return Err(Error::Domain("syzygy length differs from generator count".into()));
    }
    let mut total = NcPolynomial::zero();
    for (g, a) in gens.iter().zip(&syz.components) {
        let g = gb.normal_form(g);
        for (u, c) in g.terms() {
            for (v, d) in a.terms() {
                let prod = gb.star_product(u, v)?;
                total = total.add(&prod.scale(&(c * d)))?;
            }
        }
    }
    Ok(total.is_zero())
}

/// Per-trial summary of a coherence probe.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialSummary {
    pub trial: usize,
    pub start: usize,
    pub generator_degrees: Vec<usize>,
    pub minimal_syzygy_degrees: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeViolation {
    pub trial: usize,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub n: usize,
    pub d: usize,
    pub trials: usize,
    pub seed: u64,
    pub cutoff: usize,
    pub bound: usize,
    /// Largest minimal syzygy degree seen in any trial.
    pub max_syzygy_degree: Option<usize>,
    pub violations: Vec<ProbeViolation>,
    pub unsound: Vec<usize>,
    pub passed: bool,
    pub summaries: Vec<TrialSummary>,
}

/// A random combination of the normal words of one component, nonzero.
fn random_element(rng: &mut ChaCha8Rng, words: &[PathWord]) -> Result<NcPolynomial> {
    loop {
        let mut f = NcPolynomial::zero();
        for w in words {
            let c: i64 = rng.gen_range(-3..=3);
            if c != 0 {
                f.add_term(w.clone(), coeff(c))?;
            }
        }
        if !f.is_zero() {
            return Ok(f);
        }
    }
}

/// Random right ideals generated in degrees `1..=d`, each checked for
/// minimal syzygies above `d + 6` through the cutoff `d + 8`.
pub fn coherence_probe(gb: &GroebnerBasis, n: usize, d: usize, trials: usize, seed: u64) -> Result<ProbeReport> {
    if d == 0 {
        return Err(Error::Domain("generator degree bound must be positive".into()));
    }
    let cutoff = d + 8;
    let bound = d + 6;
    if !gb.covers(cutoff) {
        return Err(Error::Precondition(format!(
            "probe needs completion through {cutoff}, basis has {}",
            gb.completed_through()
        )));
    }
    let p = gb.period();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut components: HashMap<(usize, usize), Vec<PathWord>> = HashMap::new();
    let mut summaries = Vec::new();
    let mut violations = Vec::new();
    let mut unsound = Vec::new();
    let mut max_deg: Option<usize> = None;
    for trial in 0..trials {
        let start = rng.gen_range(0..p);
        let count = rng.gen_range(1..=4);
        let mut gens = Vec::with_capacity(count);
        for _ in 0..count {
            let deg = rng.gen_range(1..=d);
            let words = components
                .entry((start, deg))
                .or_insert_with(|| gb.normal_words(start, deg));
            if words.is_empty() {
                continue;
            }
            gens.push(random_element(&mut rng, words)?);
        }
        let report = ideal_syzygies(gb, &gens, cutoff)?;
        for s in &report.syzygies {
            if !syzygy_vanishes(gb, &report.generators, s)? {
                unsound.push(trial);
                break;
            }
        }
        for &deg in &report.minimal_syzygy_degrees {
            if deg > bound {
                violations.push(ProbeViolation { trial, degree: deg });
            }
        }
        if let Some(&m) = report.minimal_syzygy_degrees.iter().max() {
            max_deg = Some(max_deg.map_or(m, |x| x.max(m)));
        }
        summaries.push(TrialSummary {
            trial,
            start,
            generator_degrees: report.generator_degrees,
            minimal_syzygy_degrees: report.minimal_syzygy_degrees,
        });
    }
    Ok(ProbeReport {
        n,
        d,
        trials,
        seed,
        cutoff,
        bound,
        max_syzygy_degree: max_deg,
        passed: violations.is_empty() && unsound.is_empty(),
        violations,
        unsound,
        summaries,
    })
}

/// Graded Betti numbers: homological degree -> (internal shift, multiplicity).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub residue: usize,
    pub hom_bound: usize,
    pub deg_bound: usize,
    pub rows: Vec<Vec<(usize, usize)>>,
}

impl BettiTable {
    /// Total rank at homological degree `h`.
    pub fn total(&self, h: usize) -> usize {
        self.rows.get(h).map_or(0, |r| r.iter().map(|&(_, m)| m).sum())
    }

    /// Last homological degree with a nonzero Betti number.
    pub fn length(&self) -> usize {
        (0..self.rows.len()).rev().find(|&h| self.total(h) > 0).unwrap_or(0)
    }

    pub fn multiplicity(&self, h: usize, shift: usize) -> usize {
        self.rows
            .get(h)
            .and_then(|r| r.iter().find(|&&(s, _)| s == shift))
            .map_or(0, |&(_, m)| m)
    }
}

fn tally(degrees: &[usize]) -> Vec<(usize, usize)> {
    let mut m: BTreeMap<usize, usize> = BTreeMap::new();
    for &d in degrees {
        *m.entry(d).or_insert(0) += 1;
    }
    m.into_iter().collect()
}

/// Minimal graded free resolution of the simple module at residue `s`
/// through internal degree `deg_bound`.
pub fn resolve_simple(gb: &GroebnerBasis, s: usize, hom_bound: usize, deg_bound: usize) -> Result<BettiTable> {
    if !gb.covers(deg_bound) {
        return Err(Error::Precondition(format!(
            "degree bound {deg_bound} exceeds completion degree {}",
            gb.completed_through()
        )));
    }
    let p = gb.period();
    let s = s % p;
    let mut rows = vec![vec![(0, 1)]];
    let mut ambient = FreeModule {
        base: s,
        shifts: vec![0],
    };
    let mut gens: Vec<ModuleElement> = (0..gb.presentation().arrow_count(s) as u16)
        .map(|a| ModuleElement {
            degree: 1,
            components: vec![NcPolynomial::word(PathWord::new(s, vec![a]))],
        })
        .collect();
    for _h in 1..=hom_bound {
        let degrees: Vec<usize> = gens.iter().map(|g| g.degree).filter(|&d| d <= deg_bound).collect();
        rows.push(tally(&degrees));
        if gens.is_empty() {
            continue;
        }
        let comp = module_syzygies(gb, &ambient, &gens, deg_bound)?;
        ambient = comp.domain;
        gens = comp
            .minimal
            .into_iter()
            .map(|z| ModuleElement {
                degree: z.degree,
                components: z.components,
            })
            .collect();
    }
    Ok(BettiTable {
        residue: s,
        hom_bound,
        deg_bound,
        rows,
    })
}

/// `Σ_h (-1)^h Σ_shift β_{h,shift} dim A_{s+shift, s+D}` for `D = 0..=deg_bound`;
/// for a resolution of the simple module this is `1, 0, 0, ..`.
pub fn euler_characteristic(gb: &GroebnerBasis, betti: &BettiTable) -> Result<Vec<i64>> {
    let p = gb.period();
    let mut dims: HashMap<(usize, usize), i64> = HashMap::new();
    let mut out = vec![0i64; betti.deg_bound + 1];
    for (h, row) in betti.rows.iter().enumerate() {
        let sign = if h % 2 == 0 { 1 } else { -1 };
        for &(shift, mult) in row {
            for (big_d, slot) in out.iter_mut().enumerate().skip(shift) {
                let r = (betti.residue + shift) % p;
                let len = big_d - shift;
                let dim = *dims
                    .entry((r, len))
                    .or_insert_with(|| gb.normal_words(r, len).len() as i64);
                *slot += sign * mult as i64 * dim;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::buchberger_complete;
    use crate::ngr::ngr_presentation;

    fn ngr_gb(n: usize, d: usize) -> GroebnerBasis {
        buchberger_complete(&ngr_presentation(n).unwrap().presentation, d).unwrap()
    }

    #[test]
    fn component_bases() {
        let gb = ngr_gb(3, 4);
        assert_eq!(component_basis(&gb, 0, 0).unwrap().words, vec![PathWord::vertex(0)]);
        assert_eq!(component_basis(&gb, 0, 3).unwrap().words.len(), 10);
        let b = component_basis(&gb, 2, 2).unwrap();
        assert_eq!(b.words.len(), 6);
        let ord = gb.order();
        assert!(b.words.windows(2).all(|w| ord.cmp_unchecked(&w[0], &w[1]).is_gt()));
        let gb2 = ngr_gb(3, 2);
        assert!(matches!(component_basis(&gb2, 0, 3), Err(Error::Precondition(_))));
    }

    #[test]
    fn augmentation_slice_syzygies() {
        let gb = ngr_gb(3, 6);
        let p = gb.presentation();
        let gens: Vec<NcPolynomial> = (0..p.arrow_count(0) as u16)
            .map(|a| NcPolynomial::word(PathWord::new(0, vec![a])))
            .collect();
        let rep = ideal_syzygies(&gb, &gens, 6).unwrap();
        assert_eq!(rep.minimal_syzygy_degrees, vec![2, 2, 2]);
        for s in &rep.syzygies {
            assert!(syzygy_vanishes(&gb, &rep.generators, s).unwrap());
        }
        assert!(ideal_syzygies(&gb, &[], 6).unwrap().minimal_syzygy_degrees.is_empty());
    }

    #[test]
    fn syzygy_errors() {
        let gb = ngr_gb(3, 4);
        let a = NcPolynomial::word(PathWord::new(0, vec![0]));
        let b = NcPolynomial::word(PathWord::new(1, vec![0]));
        assert!(matches!(ideal_syzygies(&gb, &[a.clone(), b], 4), Err(Error::Domain(_))));
        assert!(matches!(ideal_syzygies(&gb, &[a], 5), Err(Error::Precondition(_))));
    }

    #[test]
    fn duplicate_generators_give_a_degree_one_syzygy() {
        let gb = ngr_gb(3, 4);
        let a = NcPolynomial::word(PathWord::new(1, vec![2]));
        let rep = ideal_syzygies(&gb, &[a.clone(), a.scale(&coeff(2))], 4).unwrap();
        assert_eq!(rep.minimal_syzygy_degrees[0], 1);
        assert_eq!(rep.syzygies[0].components.len(), 2);
    }

    #[test]
    fn simple_resolution_n3() {
        let gb = ngr_gb(3, 7);
        for s in 0..6 {
            let b = resolve_simple(&gb, s, 4, 7).unwrap();
            assert_eq!(b.length(), 3, "s={s} {:?}", b.rows);
            assert_eq!(b.rows[3], vec![(3, 1)]);
            assert_eq!(b.total(4), 0);
            let chi = euler_characteristic(&gb, &b).unwrap();
            assert_eq!(chi[0], 1);
            assert!(chi[1..].iter().all(|&c| c == 0), "{chi:?}");
        }
    }

    #[test]
    fn probe_is_deterministic() {
        let gb = ngr_gb(3, 9);
        let a = coherence_probe(&gb, 3, 1, 3, 7).unwrap();
        let b = coherence_probe(&gb, 3, 1, 3, 7).unwrap();
        assert_eq!(a, b);
        assert!(a.passed);
        let empty = coherence_probe(&gb, 3, 1, 0, 7).unwrap();
        assert!(empty.passed && empty.summaries.is_empty());
        assert!(coherence_probe(&gb, 3, 2, 1, 7).is_err() || gb.is_closed());
    }

    #[test]
    fn exported_matrix_has_the_kernel() {
        let gb = ngr_gb(3, 4);
        let ambient = FreeModule { base: 0, shifts: vec![0] };
        let gens: Vec<ModuleElement> = (0..3)
            .map(|a| ModuleElement {
                degree: 1,
                components: vec![NcPolynomial::word(PathWord::new(0, vec![a]))],
            })
            .collect();
        let m = map_matrix(&gb, &ambient, &gens, 2).unwrap();
        let cols: Vec<SparseVec> = (0..m[0].len())
            .map(|j| linalg::dense_to_sparse(&m.iter().map(|r| r[j].clone()).collect::<Vec<_>>()))
            .collect();
        assert_eq!(linalg::kernel(&cols).len(), 3);
        assert!(linalg::format_matrix(&m).lines().count() == m.len());
    }
}
