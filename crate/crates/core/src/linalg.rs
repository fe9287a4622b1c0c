//! Exact sparse row reduction over the rationals.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::quiver::Coeff;

pub type SparseVec = BTreeMap<usize, Coeff>;

struct Row {
    entries: SparseVec,
    combo: SparseVec,
}

/// Incrementally built echelon form. Each stored row is normalised to 1 at
/// its pivot and has no entries left of it. When tracking is on, each row
/// also remembers which inserted vectors it is a combination of, so that a
/// vector reducing to zero yields a linear dependency.
#[derive(Default)]
pub struct Echelon {
    rows: Vec<Row>,
    pivot_of: HashMap<usize, usize>,
    inserted: usize,
}

fn axpy(target: &mut SparseVec, scale: &Coeff, source: &SparseVec) {
    for (k, a) in source {
        let v = target.entry(*k).or_insert_with(Coeff::zero);
        *v -= scale * a;
        if v.is_zero() {
            target.remove(k);
        }
    }
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut SparseVec, combo: &mut SparseVec) {
        let mut cursor = 0;
        loop {
            let hit = v
                .range(cursor..)
                .find(|(i, _)| self.pivot_of.contains_key(i))
                .map(|(i, c)| (*i, c.clone()));
            let Some((i, c)) = hit else { break };
            let row = &self.rows[self.pivot_of[&i]];
            axpy(v, &c, &row.entries);
            axpy(combo, &c, &row.combo);
            cursor = i + 1;
        }
    }

    /// Inserts `v`; returns `None` if it was independent of the rows so far,
    /// otherwise the dependency `Σ λ_k v_k = 0` over inserted vectors
    /// (indexed by insertion order, including `v` itself with coefficient 1).
    pub fn insert(&mut self, mut v: SparseVec) -> Option<SparseVec> {
        let id = self.inserted;
        self.inserted += 1;
        let mut combo = SparseVec::new();
        combo.insert(id, Coeff::one());
        self.reduce(&mut v, &mut combo);
        let Some((&pivot, lead)) = v.iter().next() else {
            return Some(combo);
        };
        let inv = lead.recip();
        for a in v.values_mut() {
            *a *= &inv;
        }
        for a in combo.values_mut() {
            *a *= &inv;
        }
        self.pivot_of.insert(pivot, self.rows.len());
        self.rows.push(Row { entries: v, combo });
        None
    }

    /// Whether `v` lies in the span of the stored rows.
    pub fn contains(&self, v: &SparseVec) -> bool {
        let mut v = v.clone();
        let mut scratch = SparseVec::new();
        self.reduce(&mut v, &mut scratch);
        v.is_empty()
    }
}

/// Rank of a list of sparse vectors.
pub fn rank<I: IntoIterator<Item = SparseVec>>(vectors: I) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Kernel of the linear map sending basis vector `j` to `columns[j]`.
/// Basis vectors come out in column order: one for each column that depends
/// on earlier ones.
pub fn kernel(columns: &[SparseVec]) -> Vec<SparseVec> {
    let mut e = Echelon::new();
    columns
        .iter()
        .filter_map(|c| e.insert(c.clone()))
        .collect()
}

pub fn dense_to_sparse(row: &[Coeff]) -> SparseVec {
    row.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

/// `p/q` rendering used in every exchange format.
pub fn ratio_string(c: &Coeff) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

/// Plain-text matrix exchange: one row per line, entries as `p/q`
/// separated by single spaces.
pub fn format_matrix(rows: &[Vec<Coeff>]) -> String {
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row.iter().map(ratio_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
