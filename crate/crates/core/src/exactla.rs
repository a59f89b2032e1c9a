//! Exact sparse linear algebra over a cyclotomic field.

use std::collections::{BTreeMap, HashMap};

use crate::cyclo::{CycloField, CycloNum};
use crate::error::{Error, Result};

/// Sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec = Vec<(usize, CycloNum)>;

/// Sum of sparse vectors keyed by index, dropping exact cancellations.
pub fn sparse_sum<'a, I>(parts: I) -> SparseVec
where
    I: IntoIterator<Item = &'a SparseVec>,
{
    let mut acc: HashMap<usize, CycloNum> = HashMap::new();
    for v in parts {
        for (i, x) in v {
            match acc.get_mut(i) {
                Some(y) => *y = &*y + x,
                None => {
                    acc.insert(*i, x.clone());
                }
            }
        }
    }
    let mut out: SparseVec = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
    out.sort_unstable_by_key(|(i, _)| *i);
    out
}

/// Row-echelon basis built incrementally: every stored vector has leading
/// coefficient one at its pivot and no entries before it.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    rows: BTreeMap<usize, SparseVec>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; if something survives it is normalised,
    /// stored, and its pivot returned.
    pub fn insert(&mut self, v: &SparseVec) -> Result<Option<usize>> {
        let mut work: BTreeMap<usize, CycloNum> = v.iter().cloned().collect();
        loop {
            let Some((&lead, _)) = work.iter().next() else {
                return Ok(None);
            };
            match self.rows.get(&lead) {
                Some(row) => {
                    let factor = work.remove(&lead).unwrap();
                    for (j, x) in row.iter().skip(1) {
                        let t = &factor * x;
                        match work.get_mut(j) {
                            Some(y) => {
                                *y = &*y - &t;
                                if y.is_zero() {
                                    work.remove(j);
                                }
                            }
                            None => {
                                work.insert(*j, -t);
                            }
                        }
                    }
                }
                None => {
                    let inv = work[&lead].inv()?;
                    let row: SparseVec = work
                        .into_iter()
                        .map(|(j, x)| (j, if j == lead { x.field().one() } else { &x * &inv }))
                        .collect();
                    self.rows.insert(lead, row);
                    return Ok(Some(lead));
                }
            }
        }
    }

    pub fn vectors(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values()
    }

    pub fn into_vectors(self) -> Vec<SparseVec> {
        self.rows.into_values().collect()
    }
}

/// Column-stored sparse matrix over `Q(z_M)`.
#[derive(Clone, Debug)]
pub struct SparseMatrix {
    field: CycloField,
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec>,
}

impl PartialEq for SparseMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.rows == other.rows
            && self.cols == other.cols
            && self.columns == other.columns
    }
}

impl SparseMatrix {
    pub fn zero(field: &CycloField, rows: usize, cols: usize) -> Self {
        SparseMatrix {
            field: field.clone(),
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    /// Builds from `(row, col, value)` triplets; repeated positions are summed.
    pub fn from_triplets(
        field: &CycloField,
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, CycloNum)>,
    ) -> Result<Self> {
        let mut per_col: Vec<Vec<SparseVec>> = vec![Vec::new(); cols];
        for (r, c, v) in triplets {
            if r >= rows {
                return Err(Error::IndexOutOfRange { index: r, max: rows });
            }
            if c >= cols {
                return Err(Error::IndexOutOfRange { index: c, max: cols });
            }
            if v.field() != field {
                return Err(Error::FieldMismatch(field.order(), v.field().order()));
            }
            per_col[c].push(vec![(r, v)]);
        }
        let columns = per_col.iter().map(|parts| sparse_sum(parts.iter())).collect();
        Ok(SparseMatrix {
            field: field.clone(),
            rows,
            cols,
            columns,
        })
    }

    pub fn from_dense(field: &CycloField, dense: &[Vec<CycloNum>]) -> Result<Self> {
        let rows = dense.len();
        let cols = dense.first().map_or(0, |r| r.len());
        let mut trip = Vec::new();
        for (r, row) in dense.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(cols, row.len()));
            }
            for (c, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    trip.push((r, c, v.clone()));
                }
            }
        }
        Self::from_triplets(field, rows, cols, trip)
    }

    pub fn identity(field: &CycloField, n: usize) -> Self {
        SparseMatrix {
            field: field.clone(),
            rows: n,
            cols: n,
            columns: (0..n).map(|i| vec![(i, field.one())]).collect(),
        }
    }

    pub fn field(&self) -> &CycloField {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(|c| c.len()).sum()
    }

    pub fn column(&self, c: usize) -> &SparseVec {
        &self.columns[c]
    }

    pub fn get(&self, r: usize, c: usize) -> CycloNum {
        self.columns[c]
            .binary_search_by_key(&r, |(i, _)| *i)
            .map(|k| self.columns[c][k].1.clone())
            .unwrap_or_else(|_| self.field.zero())
    }

    /// `(row, col, value)` for every stored entry, column-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &CycloNum)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
    }

    pub fn transpose(&self) -> Self {
        let mut columns: Vec<SparseVec> = vec![Vec::new(); self.rows];
        for (r, c, v) in self.entries() {
            columns[r].push((c, v.clone()));
        }
        SparseMatrix {
            field: self.field.clone(),
            rows: self.cols,
            cols: self.rows,
            columns,
        }
    }

    /// Exact rank.
    ///
    /// Rows are relabelled so the sparsest rows become the earliest pivot
    /// positions and columns are fed sparsest-first, which keeps fill-in low.
    pub fn rank(&self) -> Result<usize> {
        let mut row_count = vec![0usize; self.rows];
        for (r, _, _) in self.entries() {
            row_count[r] += 1;
        }
        let mut order: Vec<usize> = (0..self.rows).collect();
        order.sort_by_key(|&r| (row_count[r], r));
        let mut relabel = vec![0usize; self.rows];
        for (new, &old) in order.iter().enumerate() {
            relabel[old] = new;
        }
        let mut cols: Vec<&SparseVec> = self.columns.iter().filter(|c| !c.is_empty()).collect();
        cols.sort_by_key(|c| c.len());
        let mut basis = EchelonBasis::new();
        for col in cols {
            let mut v: SparseVec = col.iter().map(|(r, x)| (relabel[*r], x.clone())).collect();
            v.sort_unstable_by_key(|(i, _)| *i);
            basis.insert(&v)?;
            if basis.rank() == self.rows {
                break;
            }
        }
        Ok(basis.rank())
    }
}

/// A linear map sending each basis vector `e_j` to `coeff[j] * e_{image[j]}`.
#[derive(Clone, Debug, PartialEq)]
pub struct MonomialOperator {
    field: CycloField,
    image: Vec<usize>,
    coeff: Vec<CycloNum>,
}

impl MonomialOperator {
    pub fn new(field: &CycloField, image: Vec<usize>, coeff: Vec<CycloNum>) -> Result<Self> {
        if image.len() != coeff.len() {
            return Err(Error::DimensionMismatch(image.len(), coeff.len()));
        }
        let dim = image.len();
        for (j, (&i, c)) in image.iter().zip(&coeff).enumerate() {
            if i >= dim {
                return Err(Error::IndexOutOfRange { index: i, max: dim });
            }
            if c.is_zero() {
                return Err(Error::ZeroCoefficient(j, i));
            }
            if c.field() != field {
                return Err(Error::FieldMismatch(field.order(), c.field().order()));
            }
        }
        Ok(MonomialOperator {
            field: field.clone(),
            image,
            coeff,
        })
    }

    pub fn identity(field: &CycloField, dim: usize) -> Self {
        MonomialOperator {
            field: field.clone(),
            image: (0..dim).collect(),
            coeff: vec![field.one(); dim],
        }
    }

    /// Coefficient-free operator `e_j -> e_{perm[j]}`.
    pub fn permutation(field: &CycloField, perm: Vec<usize>) -> Result<Self> {
        let coeff = vec![field.one(); perm.len()];
        Self::new(field, perm, coeff)
    }

    pub fn field(&self) -> &CycloField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn coeff(&self) -> &[CycloNum] {
        &self.coeff
    }

    /// `(image, coefficient)` of basis vector `j`.
    pub fn at(&self, j: usize) -> (usize, &CycloNum) {
        (self.image[j], &self.coeff[j])
    }

    pub fn is_invertible(&self) -> bool {
        let mut seen = vec![false; self.dim()];
        for &i in &self.image {
            if std::mem::replace(&mut seen[i], true) {
                return false;
            }
        }
        true
    }

    /// `a . b`, i.e. `b` applied first.
    pub fn compose(a: &Self, b: &Self) -> Result<Self> {
        if a.dim() != b.dim() {
            return Err(Error::DimensionMismatch(a.dim(), b.dim()));
        }
        if a.field != b.field {
            return Err(Error::FieldMismatch(a.field.order(), b.field.order()));
        }
        let (image, coeff) = (0..b.dim())
            .map(|j| {
                let (m, x) = b.at(j);
                let (i, y) = a.at(m);
                (i, y * x)
            })
            .unzip();
        Ok(MonomialOperator {
            field: a.field.clone(),
            image,
            coeff,
        })
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_invertible() {
            return Err(Error::NotInvertible);
        }
        let n = self.dim();
        let mut image = vec![0; n];
        let mut coeff = vec![self.field.one(); n];
        for j in 0..n {
            let (i, c) = self.at(j);
            image[i] = j;
            coeff[i] = c.inv()?;
        }
        Ok(MonomialOperator {
            field: self.field.clone(),
            image,
            coeff,
        })
    }

    /// `a (x) b` with basis `e_i (x) e_j` at index `i * dim(b) + j`.
    pub fn tensor(a: &Self, b: &Self) -> Result<Self> {
        if a.field != b.field {
            return Err(Error::FieldMismatch(a.field.order(), b.field.order()));
        }
        let db = b.dim();
        let mut image = Vec::with_capacity(a.dim() * db);
        let mut coeff = Vec::with_capacity(a.dim() * db);
        for i in 0..a.dim() {
            for j in 0..db {
                let (ai, ac) = a.at(i);
                let (bj, bc) = b.at(j);
                image.push(ai * db + bj);
                coeff.push(ac * bc);
            }
        }
        Ok(MonomialOperator {
            field: a.field.clone(),
            image,
            coeff,
        })
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out: SparseVec = v
            .iter()
            .map(|(j, x)| {
                let (i, c) = self.at(*j);
                (i, c * x)
            })
            .collect();
        out.sort_unstable_by_key(|(i, _)| *i);
        if !self.is_invertible() {
            return sparse_sum(std::iter::once(&out));
        }
        out
    }

    pub fn to_matrix(&self) -> SparseMatrix {
        accumulate(std::slice::from_ref(self)).expect("single term")
    }
}

/// Sums monomial operators into a sparse matrix with entries
/// `(image(j), j)`; colliding positions add and exact zeros are dropped.
pub fn accumulate(terms: &[MonomialOperator]) -> Result<SparseMatrix> {
    let Some(first) = terms.first() else {
        return Err(Error::DimensionMismatch(0, 0));
    };
    let dim = first.dim();
    let field = first.field().clone();
    for t in terms {
        if t.dim() != dim {
            return Err(Error::DimensionMismatch(dim, t.dim()));
        }
        if *t.field() != field {
            return Err(Error::FieldMismatch(field.order(), t.field().order()));
        }
    }
    let mut columns = Vec::with_capacity(dim);
    for j in 0..dim {
        let mut acc: BTreeMap<usize, CycloNum> = BTreeMap::new();
        for t in terms {
            let (i, c) = t.at(j);
            match acc.get_mut(&i) {
                Some(y) => *y = &*y + c,
                None => {
                    acc.insert(i, c.clone());
                }
            }
        }
        columns.push(acc.into_iter().filter(|(_, x)| !x.is_zero()).collect());
    }
    Ok(SparseMatrix {
        field,
        rows: dim,
        cols: dim,
        columns,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(m: u32) -> CycloField {
        CycloField::new(m).unwrap()
    }

    #[test]
    fn rank_examples() {
        let q = f(1);
        assert_eq!(SparseMatrix::identity(&q, 3).rank().unwrap(), 3);
        assert_eq!(SparseMatrix::zero(&q, 5, 5).rank().unwrap(), 0);
        let k = f(4);
        let z = k.root_power(1);
        let m = SparseMatrix::from_dense(
            &k,
            &[vec![k.one(), z.clone()], vec![z.clone(), k.from_int(-1)]],
        )
        .unwrap();
        assert_eq!(m.rank().unwrap(), 1);
    }

    #[test]
    fn accumulate_examples() {
        let q = f(1);
        let id = MonomialOperator::identity(&q, 2);
        let neg = MonomialOperator::new(&q, vec![0, 1], vec![q.from_int(-1); 2]).unwrap();
        let z = accumulate(&[id.clone(), neg]).unwrap();
        assert_eq!(z.nnz(), 0);
        assert_eq!(accumulate(&[id]).unwrap(), SparseMatrix::identity(&q, 2));

        // id + flip on (Q^2)^{(x)2}: the symmetric square, rank 3
        let id4 = MonomialOperator::identity(&q, 4);
        let flip = MonomialOperator::permutation(&q, vec![0, 2, 1, 3]).unwrap();
        assert_eq!(accumulate(&[id4, flip]).unwrap().rank().unwrap(), 3);
    }

    #[test]
    fn accumulate_dimension_mismatch() {
        let q = f(1);
        let r = accumulate(&[MonomialOperator::identity(&q, 2), MonomialOperator::identity(&q, 3)]);
        assert!(matches!(r, Err(Error::DimensionMismatch(2, 3))));
    }

    #[test]
    fn compose_examples() {
        let k = f(6);
        let x = MonomialOperator::new(
            &k,
            vec![2, 0, 1],
            vec![k.root_power(1), k.from_int(3), k.root_power(5)],
        )
        .unwrap();
        let id = MonomialOperator::identity(&k, 3);
        assert_eq!(MonomialOperator::compose(&id, &x).unwrap(), x);
        let xi = x.inverse().unwrap();
        assert_eq!(MonomialOperator::compose(&x, &xi).unwrap(), id);
        assert_eq!(MonomialOperator::compose(&xi, &x).unwrap(), id);

        let p = MonomialOperator::permutation(&k, vec![1, 2, 0]).unwrap();
        let q = MonomialOperator::permutation(&k, vec![0, 2, 1]).unwrap();
        let pq = MonomialOperator::compose(&p, &q).unwrap();
        assert_eq!(pq.image(), &[1, 0, 2]);
        assert!(matches!(
            MonomialOperator::compose(&p, &MonomialOperator::identity(&k, 2)),
            Err(Error::DimensionMismatch(3, 2))
        ));
    }

    #[test]
    fn non_invertible_inverse_fails() {
        let q = f(1);
        let m = MonomialOperator::permutation(&q, vec![0, 0]).unwrap();
        assert!(!m.is_invertible());
        assert!(matches!(m.inverse(), Err(Error::NotInvertible)));
    }

    #[test]
    fn echelon_rejects_dependent() {
        let k = f(3);
        let z = k.root_power(1);
        let mut b = EchelonBasis::new();
        let v1: SparseVec = vec![(0, k.one()), (2, z.clone())];
        let v2: SparseVec = vec![(0, z.clone()), (2, &z * &z)];
        assert_eq!(b.insert(&v1).unwrap(), Some(0));
        assert_eq!(b.insert(&v2).unwrap(), None);
        assert_eq!(b.insert(&vec![(2, k.one())]).unwrap(), Some(2));
        assert_eq!(b.rank(), 2);
    }
}
