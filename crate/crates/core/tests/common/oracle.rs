//! Brute force over explicit free-algebra components: every path of a given
//! length is a coordinate, and ideal components are spanned by all
//! `u * r * v`. Dense rational elimination, no rewriting.

#![allow(clippy::needless_range_loop)]

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use ngr_workbench::{NcPolynomial, PathWord, QuiverPresentation};

pub type Row = Vec<BigRational>;

pub fn rank(mut rows: Vec<Row>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for k in c..cols {
                    let sub = &f * &rows[r][k];
                    rows[i][k] -= sub;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// All paths of length `len` from residue `start`, as letter lists.
pub fn paths(pres: &QuiverPresentation, start: usize, len: usize) -> Vec<Vec<u16>> {
    let mut out = vec![vec![]];
    for k in 0..len {
        let r = (start + k) % pres.period();
        let count = pres.arrow_count(r) as u16;
        out = out
            .into_iter()
            .flat_map(|p: Vec<u16>| {
                (0..count).map(move |a| {
                    let mut q = p.clone();
                    q.push(a);
                    q
                })
            })
            .collect();
    }
    out
}

pub struct Component {
    pub start: usize,
    pub len: usize,
    pub index: HashMap<Vec<u16>, usize>,
    /// Spanning set of the ideal in this component.
    pub ideal: Vec<Row>,
}

impl Component {
    pub fn size(&self) -> usize {
        self.index.len()
    }

    pub fn zero_row(&self) -> Row {
        vec![BigRational::zero(); self.size()]
    }

    pub fn ideal_rank(&self) -> usize {
        rank(self.ideal.clone())
    }

    pub fn dim(&self) -> usize {
        self.size() - self.ideal_rank()
    }

    /// Row of `f * v`, with `f` starting at this component's start.
    pub fn row_of(&self, f: &NcPolynomial, v: &[u16]) -> Row {
        let mut row = self.zero_row();
        for (w, c) in f.terms() {
            let mut letters = w.letters().to_vec();
            letters.extend_from_slice(v);
            row[self.index[&letters]] += c;
        }
        row
    }
}

fn big(c: &ngr_workbench::Coeff) -> BigRational {
    BigRational::new(c.numer().clone(), c.denom().clone())
}

pub fn component(pres: &QuiverPresentation, start: usize, len: usize) -> Component {
    let p = pres.period();
    let all = paths(pres, start, len);
    let index: HashMap<Vec<u16>, usize> = all.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let mut ideal = Vec::new();
    for rel in pres.relations() {
        let (rs, rd) = (rel.start().unwrap(), rel.degree().unwrap());
        if rd > len {
            continue;
        }
        for left in 0..=len - rd {
            if (start + left) % p != rs % p {
                continue;
            }
            for u in paths(pres, start, left) {
                for v in paths(pres, rs + rd, len - rd - left) {
                    let mut row = vec![BigRational::zero(); index.len()];
                    for (w, c) in rel.terms() {
                        let mut letters = u.clone();
                        letters.extend_from_slice(w.letters());
                        letters.extend_from_slice(&v);
                        row[index[&letters]] += big(c);
                    }
                    ideal.push(row);
                }
            }
        }
    }
    Component {
        start,
        len,
        index,
        ideal,
    }
}

/// dim A_{start, start+len}.
pub fn dim(pres: &QuiverPresentation, start: usize, len: usize) -> usize {
    component(pres, start, len).dim()
}

/// Kernel dimension in total degree `e` of `(a_k) -> sum g_k a_k` for
/// generators starting at `start`.
pub fn syzygy_kernel_dim(pres: &QuiverPresentation, start: usize, gens: &[NcPolynomial], e: usize) -> usize {
    let p = pres.period();
    let target = component(pres, start, e);
    let base = target.ideal_rank();
    let mut domain = 0;
    let mut rows = target.ideal.clone();
    for g in gens {
        let d = g.degree().unwrap();
        if d > e {
            continue;
        }
        domain += dim(pres, (start + d) % p, e - d);
        for v in paths(pres, start + d, e - d) {
            let mut row = target.zero_row();
            for (w, c) in g.terms() {
                let mut letters = w.letters().to_vec();
                letters.extend_from_slice(&v);
                row[target.index[&letters]] += big(c);
            }
            rows.push(row);
        }
    }
    let image = rank(rows) - base;
    domain - image
}

/// Unfolded Hilbert matrix through `t^trunc` from brute-force dimensions:
/// `h[k][i][j]` is `dim A_{i, i+k}` when `j = i + k mod p`.
pub fn hilbert(pres: &QuiverPresentation, trunc: usize) -> Vec<Vec<Vec<i64>>> {
    let p = pres.period();
    let mut h = vec![vec![vec![0i64; p]; p]; trunc + 1];
    for (k, layer) in h.iter_mut().enumerate() {
        for (i, row) in layer.iter_mut().enumerate() {
            row[(i + k) % p] = dim(pres, i, k) as i64;
        }
    }
    h
}

/// `H(t)^{-1}` coefficients through `t^trunc`, assuming `H(0) = I`.
pub fn invert(h: &[Vec<Vec<i64>>]) -> Vec<Vec<Vec<i64>>> {
    let p = h[0].len();
    let mut b = vec![vec![vec![0i64; p]; p]; h.len()];
    for (i, row) in b[0].iter_mut().enumerate() {
        row[i] = 1;
    }
    for k in 1..h.len() {
        for i in 0..p {
            for j in 0..p {
                let mut s = 0;
                for m in 1..=k {
                    for l in 0..p {
                        s += h[m][i][l] * b[k - m][l][j];
                    }
                }
                b[k][i][j] = -s;
            }
        }
    }
    b
}

pub fn word(pres: &QuiverPresentation, start: usize, labels: &[&str]) -> PathWord {
    pres.word_from_labels(start, labels).unwrap()
}

pub fn one() -> BigRational {
    BigRational::one()
}

pub fn int(c: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(c))
}
