//! Normal-word counting and truncated matrix power series.

#![allow(clippy::needless_range_loop)]

use std::fmt;

use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::quiver::{Coeff, PathWord, QuiverPresentation};

/// For every arrow `a` at residue `r`, the arrows `b` at `r + 1` with `ab`
/// not a lead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferTable {
    period: usize,
    allowed: Vec<Vec<Vec<u16>>>,
}

impl TransferTable {
    /// Table of a quadratic basis.
    pub fn from_basis(gb: &GroebnerBasis) -> Result<Self> {
        if !gb.is_quadratic() {
            return Err(Error::Precondition(
                "transfer counting needs a quadratic basis; use direct enumeration".into(),
            ));
        }
        Self::from_leads(gb.presentation(), gb.rules().iter().map(|r| &r.lead))
    }

    /// Table of the monomial algebra with the given forbidden 2-grams.
    pub fn from_leads<'a, I>(pres: &QuiverPresentation, leads: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a PathWord>,
    {
        let p = pres.period();
        let mut forbidden = std::collections::HashSet::new();
        for w in leads {
            if w.degree() != 2 {
                return Err(Error::Precondition(format!(
                    "lead {} is not of length 2",
                    pres.format_word(w)
                )));
            }
            forbidden.insert(w.clone());
        }
        let allowed = (0..p)
            .map(|r| {
                let next = (r + 1) % p;
                (0..pres.arrow_count(r) as u16)
                    .map(|a| {
                        (0..pres.arrow_count(next) as u16)
                            .filter(|&b| !forbidden.contains(&PathWord::new(r, vec![a, b])))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Ok(TransferTable { period: p, allowed })
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn allowed(&self, residue: usize, arrow: u16) -> &[u16] {
        &self.allowed[residue % self.period][arrow as usize]
    }

    /// Number of normal words from `start` of every length `0..=max_len`.
    pub fn counts(&self, start: usize, max_len: usize) -> Vec<i64> {
        let p = self.period;
        let start = start % p;
        let mut out = vec![1];
        if max_len == 0 {
            return out;
        }
        let mut layer: Vec<i64> = vec![1; self.allowed[start].len()];
        out.push(layer.len() as i64);
        for k in 1..max_len {
            let r = (start + k - 1) % p;
            let next = (r + 1) % p;
            let mut new = vec![0i64; self.allowed[next].len()];
            for (a, &c) in layer.iter().enumerate() {
                for &b in &self.allowed[r][a] {
                    new[b as usize] += c;
                }
            }
            out.push(new.iter().sum());
            layer = new;
        }
        out
    }
}

/// Number of normal words of `length` letters from residue `i`; they all
/// end at `i + length`.
pub fn count_normal(gb: &GroebnerBasis, i: usize, length: usize) -> Result<i64> {
    let table = TransferTable::from_basis(gb)?;
    Ok(table.counts(i, length)[length])
}

/// Square matrix of integer power series truncated after degree `trunc`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixSeries {
    size: usize,
    trunc: usize,
    entries: Vec<Vec<Vec<i64>>>,
}

fn overflow() -> Error {
    Error::Domain("series coefficient overflow".into())
}

impl MatrixSeries {
    pub fn zero(size: usize, trunc: usize) -> Self {
        MatrixSeries {
            size,
            trunc,
            entries: vec![vec![vec![0; trunc + 1]; size]; size],
        }
    }

    pub fn identity(size: usize, trunc: usize) -> Self {
        let mut m = Self::zero(size, trunc);
        for i in 0..size {
            m.entries[i][i][0] = 1;
        }
        m
    }

    /// Builds from `[row][col][degree]`; shorter coefficient lists are padded
    /// with zeros and longer ones are an error.
    pub fn from_entries(trunc: usize, entries: Vec<Vec<Vec<i64>>>) -> Result<Self> {
        let size = entries.len();
        let mut m = Self::zero(size, trunc);
        for (i, row) in entries.into_iter().enumerate() {
            if row.len() != size {
                return Err(Error::Domain(format!("row {i} has {} entries, expected {size}", row.len())));
            }
            for (j, series) in row.into_iter().enumerate() {
                if series.len() > trunc + 1 {
                    return Err(Error::Domain(format!("entry ({i},{j}) is longer than the truncation")));
                }
                for (k, c) in series.into_iter().enumerate() {
                    m.entries[i][j][k] = c;
                }
            }
        }
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn entries(&self) -> &[Vec<Vec<i64>>] {
        &self.entries
    }

    pub fn coefficient(&self, i: usize, j: usize, degree: usize) -> i64 {
        self.entries[i][j].get(degree).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: usize, j: usize, degree: usize, c: i64) {
        self.entries[i][j][degree] = c;
    }

    /// Same series cut down to `trunc`.
    pub fn truncated(&self, trunc: usize) -> Self {
        let mut m = Self::zero(self.size, trunc);
        for i in 0..self.size {
            for j in 0..self.size {
                for k in 0..=trunc.min(self.trunc) {
                    m.entries[i][j][k] = self.entries[i][j][k];
                }
            }
        }
        m
    }

    /// Substitutes `t -> -t`.
    pub fn negate_variable(&self) -> Self {
        let mut m = self.clone();
        for row in &mut m.entries {
            for series in row {
                for (k, c) in series.iter_mut().enumerate() {
                    if k % 2 == 1 {
                        *c = -*c;
                    }
                }
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero(self.size, self.trunc);
        for i in 0..self.size {
            for j in 0..self.size {
                m.entries[j][i] = self.entries[i][j].clone();
            }
        }
        m
    }

    fn check_compatible(&self, other: &MatrixSeries) -> Result<()> {
        if self.size != other.size || self.trunc != other.trunc {
            return Err(Error::Domain(format!(
                "shape mismatch: {}x{} to t^{} against {}x{} to t^{}",
                self.size, self.size, self.trunc, other.size, other.size, other.trunc
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &MatrixSeries) -> Result<MatrixSeries> {
        self.check_compatible(other)?;
        let (q, t) = (self.size, self.trunc);
        let mut m = Self::zero(q, t);
        for i in 0..q {
            for j in 0..q {
                for l in 0..q {
                    let a = &self.entries[i][l];
                    let b = &other.entries[l][j];
                    for da in 0..=t {
                        if a[da] == 0 {
                            continue;
                        }
                        for db in 0..=t - da {
                            let prod = a[da].checked_mul(b[db]).ok_or_else(overflow)?;
                            let slot = &mut m.entries[i][j][da + db];
                            *slot = slot.checked_add(prod).ok_or_else(overflow)?;
                        }
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn sub(&self, other: &MatrixSeries) -> Result<MatrixSeries> {
        self.check_compatible(other)?;
        let mut m = self.clone();
        for i in 0..self.size {
            for j in 0..self.size {
                for k in 0..=self.trunc {
                    m.entries[i][j][k] = m.entries[i][j][k]
                        .checked_sub(other.entries[i][j][k])
                        .ok_or_else(overflow)?;
                }
            }
        }
        Ok(m)
    }

    pub fn is_identity(&self) -> bool {
        self.first_deviation_from_identity().is_none()
    }

    /// Lowest degree at which the matrix differs from the identity.
    pub fn first_deviation_from_identity(&self) -> Option<usize> {
        (0..=self.trunc).find(|&k| {
            (0..self.size).any(|i| {
                (0..self.size).any(|j| self.entries[i][j][k] != i64::from(i == j && k == 0))
            })
        })
    }

    /// Two-sided inverse through the truncation, degree by degree. The
    /// constant term must be invertible over the integers.
    pub fn invert(&self) -> Result<MatrixSeries> {
        let (q, t) = (self.size, self.trunc);
        let c0: Vec<Vec<i64>> = (0..q)
            .map(|i| (0..q).map(|j| self.entries[i][j][0]).collect())
            .collect();
        let inv0 = integer_inverse(&c0)?;
        let mut out = Self::zero(q, t);
        for i in 0..q {
            for j in 0..q {
                out.entries[i][j][0] = inv0[i][j];
            }
        }
        // N_k = -N_0 * sum_{d=1..k} M_d N_{k-d}
        for k in 1..=t {
            let mut acc = vec![vec![0i64; q]; q];
            for d in 1..=k {
                for i in 0..q {
                    for l in 0..q {
                        let a = self.entries[i][l][d];
                        if a == 0 {
                            continue;
                        }
                        for j in 0..q {
                            let prod = a.checked_mul(out.entries[l][j][k - d]).ok_or_else(overflow)?;
                            acc[i][j] = acc[i][j].checked_add(prod).ok_or_else(overflow)?;
                        }
                    }
                }
            }
            for i in 0..q {
                for j in 0..q {
                    let mut s = 0i64;
                    for l in 0..q {
                        let prod = inv0[i][l].checked_mul(acc[l][j]).ok_or_else(overflow)?;
                        s = s.checked_add(prod).ok_or_else(overflow)?;
                    }
                    out.entries[i][j][k] = -s;
                }
            }
        }
        Ok(out)
    }

    /// Plain-text table, one matrix row per line, entries as polynomials in
    /// `t` separated by ` | `.
    pub fn render(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|s| render_poly(s)).collect())
            .collect();
        let width = cells.iter().flatten().map(|c| c.len()).max().unwrap_or(1);
        let mut out = String::new();
        for row in cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:<width$}")).collect();
            out.push_str(line.join(" | ").trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for MatrixSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn render_poly(coeffs: &[i64]) -> String {
    let mut out = String::new();
    for (k, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mag = c.unsigned_abs();
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        let mono = match k {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{k}"),
        };
        if mag != 1 || k == 0 {
            out.push_str(&mag.to_string());
        }
        out.push_str(&mono);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Inverse of an integer matrix whose inverse is again integral.
fn integer_inverse(m: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let q = m.len();
    let mut a: Vec<Vec<Coeff>> = (0..q)
        .map(|i| {
            let mut row: Vec<Coeff> = m[i].iter().map(|&c| Coeff::from_integer(c.into())).collect();
            row.extend((0..q).map(|j| if i == j { Coeff::one() } else { Coeff::zero() }));
            row
        })
        .collect();
    for col in 0..q {
        let pivot = (col..q)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::Inversion("constant term is singular".into()))?;
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..q {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    a.into_iter()
        .map(|row| {
            row[q..]
                .iter()
                .map(|c| {
                    if !c.is_integer() {
                        return Err(Error::Inversion("constant term is not invertible over the integers".into()));
                    }
                    c.to_integer().to_i64().ok_or_else(overflow)
                })
                .collect()
        })
        .collect()
}

fn component_counts(gb: &GroebnerBasis, start: usize, trunc: usize) -> Vec<i64> {
    match TransferTable::from_basis(gb) {
        Ok(table) => table.counts(start, trunc),
        Err(_) => (0..=trunc)
            .map(|d| gb.normal_words(start, d).len() as i64)
            .collect(),
    }
}

/// Hilbert matrix over the residues: entry `(i, j)` counts normal words from
/// `i` to `j` by length. With `fold`, residues `r` and `r + period/2` are
/// identified, which requires the two rows to agree.
pub fn hilbert_matrix(gb: &GroebnerBasis, trunc: usize, fold: bool) -> Result<MatrixSeries> {
    if !gb.covers(trunc) {
        return Err(Error::Precondition(format!(
            "basis completed through {} but truncation is {}",
            gb.completed_through(),
            trunc
        )));
    }
    let p = gb.period();
    let mut full = MatrixSeries::zero(p, trunc);
    for i in 0..p {
        for (m, c) in component_counts(gb, i, trunc).into_iter().enumerate() {
            full.set(i, (i + m) % p, m, c);
        }
    }
    if !fold {
        return Ok(full);
    }
    if !p.is_multiple_of(2) {
        return Err(Error::Periodicity(format!("period {p} cannot be halved")));
    }
    fold_matrix(&full, p / 2)
}

/// Folds a `p x p` matrix to `q x q` by summing columns `j, j+q, ..`, after
/// checking that `H[i][j] = H[i+q][j+q]`.
pub fn fold_matrix(full: &MatrixSeries, q: usize) -> Result<MatrixSeries> {
    let p = full.size();
    if q == 0 || !p.is_multiple_of(q) {
        return Err(Error::Periodicity(format!("cannot fold size {p} to {q}")));
    }
    for i in 0..p {
        for j in 0..p {
            let (i2, j2) = ((i + q) % p, (j + q) % p);
            if full.entries[i][j] != full.entries[i2][j2] {
                return Err(Error::Periodicity(format!(
                    "entry ({i},{j}) differs from ({i2},{j2})"
                )));
            }
        }
    }
    let mut m = MatrixSeries::zero(q, full.trunc());
    for i in 0..q {
        for j in 0..p {
            for k in 0..=full.trunc() {
                m.entries[i][j % q][k] += full.entries[i][j][k];
            }
        }
    }
    Ok(m)
}

/// The polynomial Hilbert matrix of the quadratic dual of NGr(n).
pub fn koszul_dual_hilbert_ngr(n: usize, trunc: usize) -> Result<MatrixSeries> {
    if n < 3 {
        return Err(Error::Domain(format!("NGr needs n >= 3, got {n}")));
    }
    let n = n as i64;
    let c = n * (n - 1) / 2;
    // (coefficient, degree) per entry
    let table: [[(i64, usize); 3]; 3] = [
        [(1, 3), (c, 1), (n, 2)],
        [(c, 2), (1, 3), (n, 1)],
        [(n, 1), (n, 2), (1, 3)],
    ];
    let mut m = MatrixSeries::identity(3, trunc);
    for (i, row) in table.iter().enumerate() {
        for (j, &(coef, deg)) in row.iter().enumerate() {
            if deg <= trunc {
                m.entries[i][j][deg] = coef;
            }
        }
    }
    Ok(m)
}

/// Which product of `H` and `D(-t)` was checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Orientation {
    #[serde(rename = "H(t)*D(-t)")]
    HD,
    #[serde(rename = "D(-t)*H(t)")]
    DH,
    #[serde(rename = "H(t)*D(-t)^T")]
    HDt,
    #[serde(rename = "D(-t)^T*H(t)")]
    DtH,
}

impl Orientation {
    pub const ALL: [Orientation; 4] = [Orientation::HD, Orientation::DH, Orientation::HDt, Orientation::DtH];

    pub fn name(self) -> &'static str {
        match self {
            Orientation::HD => "H(t)*D(-t)",
            Orientation::DH => "D(-t)*H(t)",
            Orientation::HDt => "H(t)*D(-t)^T",
            Orientation::DtH => "D(-t)^T*H(t)",
        }
    }

    pub fn product(self, h: &MatrixSeries, d_neg: &MatrixSeries) -> Result<MatrixSeries> {
        match self {
            Orientation::HD => h.mul(d_neg),
            Orientation::DH => d_neg.mul(h),
            Orientation::HDt => h.mul(&d_neg.transpose()),
            Orientation::DtH => d_neg.transpose().mul(h),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrientationResult {
    pub orientation: Orientation,
    /// Lowest degree where the product is not the identity, if any.
    pub first_deviation: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KoszulReport {
    pub n: usize,
    pub trunc: usize,
    pub verified: Orientation,
    pub results: Vec<OrientationResult>,
}

/// Checks `H(t) D(-t) = Id` in each orientation, with `H` the folded
/// Hilbert matrix of `gb` and `D` the dual matrix for `n`.
pub fn verify_koszul_identity(gb: &GroebnerBasis, n: usize, trunc: usize) -> Result<KoszulReport> {
    let h = hilbert_matrix(gb, trunc, true)?;
    if h.size() != 3 {
        return Err(Error::Domain(format!("expected a 3x3 folded matrix, got {}", h.size())));
    }
    let d_neg = koszul_dual_hilbert_ngr(n, trunc)?.negate_variable();
    let mut results = Vec::new();
    for o in Orientation::ALL {
        let prod = o.product(&h, &d_neg)?;
        results.push(OrientationResult {
            orientation: o,
            first_deviation: prod.first_deviation_from_identity(),
        });
    }
    let verified = results
        .iter()
        .find(|r| r.first_deviation.is_none())
        .map(|r| r.orientation)
        .ok_or_else(|| {
            Error::Inconsistency(format!(
                "no orientation of H(t) D(-t) = Id holds through t^{trunc} for n = {n}"
            ))
        })?;
    Ok(KoszulReport {
        n,
        trunc,
        verified,
        results,
    })
}

/// Entrywise absolute value of the largest coefficient; handy for residual
/// summaries.
pub fn max_abs(m: &MatrixSeries) -> i64 {
    m.entries
        .iter()
        .flatten()
        .flatten()
        .map(|c| c.abs())
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::buchberger_complete;
    use crate::ngr::{closed_form_dims, ngr_presentation, ngr_presentation_with, NgrOrder};

    fn identity_minus_te(e: &[Vec<i64>], trunc: usize) -> MatrixSeries {
        let mut m = MatrixSeries::identity(e.len(), trunc);
        for (i, row) in e.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                m.set(i, j, 1, -c);
            }
        }
        m
    }

    #[test]
    fn invert_identity_and_geometric() {
        let id = MatrixSeries::identity(3, 5);
        assert_eq!(id.invert().unwrap(), id);
        let e = vec![vec![1, 2], vec![0, 1]];
        let m = identity_minus_te(&e, 4);
        let inv = m.invert().unwrap();
        // (I - tE)^-1 = sum t^k E^k
        let mut power = vec![vec![1, 0], vec![0, 1]];
        for k in 0..=4 {
            for i in 0..2 {
                for j in 0..2 {
                    assert_eq!(inv.coefficient(i, j, k), power[i][j]);
                }
            }
            power = (0..2)
                .map(|i| (0..2).map(|j| (0..2).map(|l| power[i][l] * e[l][j]).sum()).collect())
                .collect();
        }
        assert!(m.mul(&inv).unwrap().is_identity());
        assert!(inv.mul(&m).unwrap().is_identity());
    }

    #[test]
    fn singular_constant_term() {
        let m = MatrixSeries::zero(2, 3);
        assert!(matches!(m.invert(), Err(Error::Inversion(_))));
        let m = MatrixSeries::from_entries(1, vec![vec![vec![2]]]).unwrap();
        assert!(matches!(m.invert(), Err(Error::Inversion(_))));
        let m = MatrixSeries::from_entries(1, vec![vec![vec![-1, 3]]]).unwrap();
        assert_eq!(m.invert().unwrap().entries(), &[vec![vec![-1, -3]]]);
    }

    #[test]
    fn render_text() {
        let m = MatrixSeries::from_entries(3, vec![vec![vec![1, 0, 0, 1], vec![0, 3]], vec![vec![0, 0, -6], vec![]]]).unwrap();
        assert_eq!(m.render(), "1 + t^3 | 3t\n-6t^2   | 0\n");
    }

    #[test]
    fn free_triangle_quiver() {
        let labels = |k: usize, p: &str| (1..=k).map(|i| format!("{p}{i}")).collect::<Vec<_>>();
        let q = QuiverPresentation::new(vec![labels(2, "a"), labels(3, "b"), labels(1, "c")], vec![]).unwrap();
        let gb = buchberger_complete(&q, 1).unwrap();
        let h = hilbert_matrix(&gb, 7, false).unwrap();
        assert_eq!(h.coefficient(0, 1, 1), 2);
        assert_eq!(h.coefficient(0, 1, 4), 2 * 3 * 2);
        assert_eq!(h.coefficient(0, 0, 3), 6);
        assert_eq!(h.coefficient(0, 0, 6), 36);
        assert_eq!(h.coefficient(1, 0, 2), 3);
        assert!(matches!(hilbert_matrix(&gb, 7, true), Err(Error::Periodicity(_))));
    }

    #[test]
    fn ngr_counts() {
        for n in 3..=6 {
            let gb = buchberger_complete(&ngr_presentation_with(n, NgrOrder::Uniform).unwrap().presentation, 3).unwrap();
            let d = closed_form_dims(n).unwrap();
            for i in 0..6 {
                for len in 0..=3 {
                    assert_eq!(count_normal(&gb, i, len).unwrap(), d.component(i, len).unwrap(), "n={n} i={i} len={len}");
                }
            }
        }
        let gb = buchberger_complete(&ngr_presentation(3).unwrap().presentation, 4).unwrap();
        assert!(matches!(count_normal(&gb, 0, 3), Err(Error::Precondition(_))));
    }

    #[test]
    fn folded_ngr_matrix() {
        let gb = buchberger_complete(&ngr_presentation(4).unwrap().presentation, 8).unwrap();
        let h = hilbert_matrix(&gb, 8, true).unwrap();
        assert_eq!(h.size(), 3);
        assert_eq!(h.coefficient(0, 1, 1), 6);
        assert_eq!(h.coefficient(1, 2, 1), 4);
        assert_eq!(h.coefficient(1, 0, 2), 10);
        assert_eq!(h.coefficient(0, 0, 3), 45);
        assert_eq!(h.coefficient(2, 2, 3), 65);
        let report = verify_koszul_identity(&gb, 4, 8).unwrap();
        assert_eq!(report.verified, Orientation::HD);
    }

    #[test]
    fn orders_agree_on_dimensions() {
        let a = buchberger_complete(&ngr_presentation(3).unwrap().presentation, 8).unwrap();
        let b = buchberger_complete(&ngr_presentation_with(3, NgrOrder::Uniform).unwrap().presentation, 3).unwrap();
        assert_eq!(hilbert_matrix(&a, 8, false).unwrap(), hilbert_matrix(&b, 8, false).unwrap());
    }

    #[test]
    fn trunc_zero_and_bad_n() {
        let gb = buchberger_complete(&ngr_presentation(3).unwrap().presentation, 2).unwrap();
        let r = verify_koszul_identity(&gb, 3, 0).unwrap();
        assert!(r.results.iter().all(|x| x.first_deviation.is_none()));
        assert!(koszul_dual_hilbert_ngr(2, 3).is_err());
        assert!(matches!(hilbert_matrix(&gb, 3, false), Err(Error::Precondition(_))));
    }

    #[test]
    fn dual_matrix_shape() {
        let d = koszul_dual_hilbert_ngr(3, 6).unwrap();
        assert_eq!(d.coefficient(0, 1, 1), 3);
        assert_eq!(d.coefficient(1, 0, 2), 3);
        for i in 0..3 {
            assert_eq!(d.entries()[i][i], vec![1, 0, 0, 1, 0, 0, 0]);
            for j in 0..3 {
                assert!((4..=6).all(|k| d.coefficient(i, j, k) == 0));
            }
        }
    }
}
