//! Exact linear algebra over `Q`: incremental row echelon bases, rank and nullspace.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::scalar::Rational;

/// A reduced row echelon basis built one vector at a time.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    dim: usize,
    // each row is normalized to 1 at its pivot and zero at every other pivot
    rows: Vec<(usize, Vec<Rational>)>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Self { dim, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = &Vec<Rational>> {
        self.rows.iter().map(|(_, r)| r)
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    /// Residue of `v` modulo the span.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.dim);
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let c = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &c * r;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v` to the span. Returns false when it was already there.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                if !r.is_zero() {
                    *x -= &c * r;
                }
            }
        }
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, v));
        true
    }
}

pub fn rank(rows: &[Vec<Rational>], ncols: usize) -> usize {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Basis of `{x : A x = 0}` where `A` is given by its rows.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r);
    }
    let pivots = e.pivots();
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut x = vec![Rational::zero(); ncols];
        x[free] = Rational::one();
        for (p, row) in e.rows.iter() {
            x[*p] = -row[free].clone();
        }
        basis.push(x);
    }
    basis
}

/// Sparse row: column index to nonzero entry.
pub type SparseRow = BTreeMap<usize, Rational>;

/// Row echelon form for sparse systems. Rows are not back-reduced, so each
/// row only has entries at or after its pivot.
#[derive(Debug, Clone, Default)]
pub struct SparseEchelon {
    ncols: usize,
    rows: BTreeMap<usize, SparseRow>,
}

impl SparseEchelon {
    pub fn new(ncols: usize) -> Self {
        Self { ncols, rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: SparseRow) -> SparseRow {
        v.retain(|_, c| !c.is_zero());
        let mut cursor = 0;
        while let Some((&col, _)) = v.range(cursor..).find(|(c, _)| self.rows.contains_key(c)) {
            let row = &self.rows[&col];
            let factor = &v[&col] / &row[&col];
            for (&c, r) in row {
                let e = v.entry(c).or_insert_with(Rational::zero);
                *e -= &factor * r;
                if e.is_zero() {
                    v.remove(&c);
                }
            }
            cursor = col + 1;
        }
        v
    }

    pub fn insert(&mut self, v: SparseRow) -> bool {
        debug_assert!(v.keys().all(|&c| c < self.ncols));
        let v = self.reduce(v);
        match v.keys().next() {
            Some(&p) => {
                self.rows.insert(p, v);
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: SparseRow) -> bool {
        self.reduce(v).is_empty()
    }

    /// Basis of the solutions of `row . x = 0` for every inserted row.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let free: Vec<usize> = (0..self.ncols).filter(|c| !self.rows.contains_key(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![Rational::zero(); self.ncols];
                x[f] = Rational::one();
                for (&p, row) in self.rows.iter().rev() {
                    let mut acc = Rational::zero();
                    for (&c, r) in row.range(p + 1..) {
                        if !x[c].is_zero() {
                            acc += r * &x[c];
                        }
                    }
                    x[p] = -acc / &row[&p];
                }
                x
            })
            .collect()
    }
}

pub fn sparse_nullspace(rows: impl IntoIterator<Item = SparseRow>, ncols: usize) -> Vec<Vec<Rational>> {
    let mut e = SparseEchelon::new(ncols);
    for r in rows {
        e.insert(r);
    }
    e.nullspace()
}

/// Multiplies a row-major matrix by a column vector.
pub fn mat_vec(rows: &[Vec<Rational>], x: &[Rational]) -> Vec<Rational> {
    rows.iter()
        .map(|r| {
            r.iter()
                .zip(x)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
        })
        .collect()
}
