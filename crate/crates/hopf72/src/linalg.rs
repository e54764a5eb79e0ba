//! Dense exact linear algebra over the rationals.
//!
//! Vectors are plain `Vec<Q>`. Matrices act on column vectors from the left.

use num::{One, Zero};
use std::fmt;

use crate::scalar::Q;

pub type Vector = Vec<Q>;

pub fn zero_vec(n: usize) -> Vector {
    vec![Q::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Q::one();
    v
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn add_scaled(acc: &mut [Q], c: &Q, v: &[Q]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

pub fn scale_vec(c: &Q, v: &[Q]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

pub fn sub_vec(a: &[Q], b: &[Q]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Two nonzero vectors span the same line.
pub fn parallel(a: &[Q], b: &[Q]) -> bool {
    let n = a.len();
    for i in 0..n {
        for j in (i + 1)..n {
            if &a[i] * &b[j] != &a[j] * &b[i] {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Q>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(crate::scalar::fmt_q).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vector]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().cloned());
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn from_cols(n_rows: usize, cols: &[Vector]) -> Self {
        let mut m = Self::zeros(n_rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..n_rows {
                m.set(i, j, c[i].clone());
            }
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &Q {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Q) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: &Q) {
        self.data[r * self.cols + c] += v;
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_scalar(&self) -> Option<Q> {
        if self.rows != self.cols {
            return None;
        }
        let c = if self.rows == 0 { Q::zero() } else { self.get(0, 0).clone() };
        for i in 0..self.rows {
            for j in 0..self.cols {
                let ok = if i == j { self.get(i, j) == &c } else { self.get(i, j).is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut m = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        m.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        m
    }

    pub fn apply(&self, v: &[Q]) -> Vector {
        assert_eq!(self.cols, v.len(), "dimension mismatch in apply");
        let mut out = zero_vec(self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for i in 0..self.rows {
                let a = self.get(i, j);
                if !a.is_zero() {
                    out[i] += a * x;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| c * a).collect() }
    }

    pub fn add_scaled_assign(&mut self, c: &Q, other: &Matrix) {
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn rank(&self) -> usize {
        Echelon::from_vectors(self.cols, self.row_vecs()).dim()
    }

    /// Basis of `{ v : self * v = 0 }`.
    pub fn kernel(&self) -> Vec<Vector> {
        nullspace(&self.row_vecs(), self.cols)
    }

    /// Column space as a subspace of the target.
    pub fn image(&self) -> Subspace {
        Subspace::span(self.rows, (0..self.cols).map(|j| self.col(j)))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a: Vec<Vector> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend(unit_vec(n, i));
                r
            })
            .collect();
        let piv = rref_rows(&mut a, n);
        if piv.len() < n {
            return None;
        }
        let rows: Vec<Vector> = a.into_iter().take(n).map(|r| r[n..].to_vec()).collect();
        Some(Matrix::from_rows(&rows))
    }

    pub fn pow(&self, k: u32) -> Matrix {
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Restriction `P^T ... ` helper: the block from the given row and column index lists.
    pub fn block(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (a, &r) in rows.iter().enumerate() {
            for (b, &c) in cols.iter().enumerate() {
                m.set(a, b, self.get(r, c).clone());
            }
        }
        m
    }
}

/// In-place reduced row echelon form on the first `ncols` columns; returns pivot columns.
/// Rows past the rank are zero afterwards and moved to the end.
pub fn rref_rows(rows: &mut Vec<Vector>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r >= rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Q::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Kernel of the matrix with the given rows.
pub fn nullspace(rows: &[Vector], ncols: usize) -> Vec<Vector> {
    let ech = Echelon::from_vectors(ncols, rows.iter().cloned());
    ech.kernel()
}

/// Solves `A x = b` for one particular solution.
pub fn solve(a: &Matrix, b: &[Q]) -> Option<Vector> {
    let n = a.cols;
    let mut rows: Vec<Vector> = (0..a.rows)
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let piv = rref_rows(&mut rows, n + 1);
    if piv.last() == Some(&n) {
        return None;
    }
    let mut x = zero_vec(n);
    for (i, &c) in piv.iter().enumerate() {
        x[c] = rows[i][n].clone();
    }
    Some(x)
}

/// Incrementally maintained reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    n: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(n: usize) -> Self {
        Echelon { n, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_vectors<I: IntoIterator<Item = Vector>>(n: usize, vs: I) -> Self {
        let mut e = Self::new(n);
        for v in vs {
            e.insert(v);
            if e.dim() == n {
                break;
            }
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after elimination against the basis.
    pub fn reduce(&self, mut v: Vector) -> Vector {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = v[p].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        is_zero_vec(&self.reduce(v.to_vec()))
    }

    /// Inserts `v`; returns true when the dimension grew.
    pub fn insert(&mut self, v: Vector) -> bool {
        assert_eq!(v.len(), self.n, "vector length mismatch");
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = Q::one() / &v[p];
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, v);
        true
    }

    /// Kernel of the map `x ↦ (row · x)_rows`.
    pub fn kernel(&self) -> Vec<Vector> {
        let free: Vec<usize> = (0..self.n).filter(|c| !self.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = zero_vec(self.n);
                v[f] = Q::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    v[p] = -row[f].clone();
                }
                v
            })
            .collect()
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the span.
    pub fn coords(&self, v: &[Q]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }
}

/// A subspace of `Q^n` in canonical reduced echelon form, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ech: Echelon,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace { ech: Echelon::new(n) }
    }

    pub fn full(n: usize) -> Self {
        Self::span(n, (0..n).map(|i| unit_vec(n, i)))
    }

    pub fn span<I: IntoIterator<Item = Vector>>(n: usize, vs: I) -> Self {
        Subspace { ech: Echelon::from_vectors(n, vs) }
    }

    pub fn dim(&self) -> usize {
        self.ech.dim()
    }

    pub fn ambient(&self) -> usize {
        self.ech.ambient()
    }

    pub fn basis(&self) -> &[Vector] {
        self.ech.rows()
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.ech.contains(v)
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut e = self.ech.clone();
        for v in other.basis() {
            e.insert(v.clone());
        }
        Subspace { ech: e }
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        // solve Σ a_i u_i = Σ b_j w_j
        let n = self.ambient();
        let (u, w) = (self.basis(), other.basis());
        let k = u.len() + w.len();
        if k == 0 {
            return Subspace::zero(n);
        }
        let rows: Vec<Vector> = (0..n)
            .map(|r| {
                let mut row: Vector = u.iter().map(|v| v[r].clone()).collect();
                row.extend(w.iter().map(|v| -v[r].clone()));
                row
            })
            .collect();
        let ker = nullspace(&rows, k);
        Subspace::span(
            n,
            ker.iter().map(|c| {
                let mut v = zero_vec(n);
                for (i, ui) in u.iter().enumerate() {
                    add_scaled(&mut v, &c[i], ui);
                }
                v
            }),
        )
    }

    pub fn reduce(&self, v: Vector) -> Vector {
        self.ech.reduce(v)
    }

    pub fn coords(&self, v: &[Q]) -> Option<Vector> {
        self.ech.coords(v)
    }

    pub fn pivots(&self) -> &[usize] {
        self.ech.pivots()
    }

    /// Basis vectors of a complement of `self` inside `outer` (`self ⊆ outer`).
    pub fn complement_in(&self, outer: &Subspace) -> Vec<Vector> {
        let mut e = self.ech.clone();
        let mut out = Vec::new();
        for v in outer.basis() {
            if e.insert(v.clone()) {
                out.push(v.clone());
            }
        }
        out
    }
}

/// Sparse vector keyed by coordinate.
pub type SparseVec = std::collections::BTreeMap<usize, Q>;

/// All `c` with `Σ c_i cols[i] = 0`, as a basis of dense coefficient vectors.
pub fn sparse_kernel(cols: &[SparseVec]) -> Vec<Vector> {
    let n = cols.len();
    // fully reduced rows: (pivot, row, tag)
    let mut rows: Vec<(usize, SparseVec, Vector)> = Vec::new();
    let mut kernel = Vec::new();
    for (i, col) in cols.iter().enumerate() {
        let mut v = col.clone();
        let mut tag = unit_vec(n, i);
        for (p, r, t) in &rows {
            if let Some(c) = v.get(p).cloned() {
                sparse_axpy(&mut v, &-c.clone(), r);
                add_scaled(&mut tag, &-c, t);
            }
        }
        match v.iter().next().map(|(k, c)| (*k, c.clone())) {
            None => kernel.push(tag),
            Some((p, c)) => {
                let inv = c.recip();
                for x in v.values_mut() {
                    *x *= &inv;
                }
                for x in tag.iter_mut() {
                    *x *= &inv;
                }
                for (_, r, t) in rows.iter_mut() {
                    if let Some(d) = r.get(&p).cloned() {
                        sparse_axpy(r, &-d.clone(), &v);
                        add_scaled(t, &-d, &tag);
                    }
                }
                rows.push((p, v, tag));
            }
        }
    }
    kernel
}

/// `acc += c·v`, pruning zeros.
pub fn sparse_axpy(acc: &mut SparseVec, c: &Q, v: &SparseVec) {
    for (k, x) in v {
        let e = acc.entry(*k).or_insert_with(Q::zero);
        *e += c * x;
        if e.is_zero() {
            acc.remove(k);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qf};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(&rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn sparse_kernel_finds_relations() {
        let v = |e: &[(usize, i64)]| -> SparseVec { e.iter().map(|(k, c)| (*k, q(*c))).collect() };
        let cols = vec![v(&[(0, 1), (5, 2)]), v(&[(5, 1)]), v(&[(0, 2), (5, 6)]), v(&[])];
        let k = sparse_kernel(&cols);
        assert_eq!(k.len(), 2);
        for c in &k {
            let mut acc = SparseVec::new();
            for (ci, col) in c.iter().zip(&cols) {
                sparse_axpy(&mut acc, ci, col);
            }
            assert!(acc.is_empty());
        }
    }

    #[test]
    fn rank_kernel_inverse() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        assert!(is_zero_vec(&a.apply(&k[0])));
        let b = m(&[&[2, 1], &[1, 1]]);
        let bi = b.inverse().unwrap();
        assert_eq!(b.mul(&bi), Matrix::identity(2));
        assert!(a.inverse().is_none());
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = m(&[&[1, 1], &[1, -1]]);
        let x = solve(&a, &[q(3), q(1)]).unwrap();
        assert_eq!(x, vec![q(2), q(1)]);
        let s = m(&[&[1, 1], &[2, 2]]);
        assert!(solve(&s, &[q(1), q(3)]).is_none());
    }

    #[test]
    fn subspace_canonical_equality() {
        let s1 = Subspace::span(3, vec![vec![q(1), q(1), q(0)], vec![q(0), q(1), q(1)]]);
        let s2 = Subspace::span(3, vec![vec![q(1), q(2), q(1)], vec![q(1), q(0), q(-1)]]);
        assert_eq!(s1, s2);
        let t = Subspace::span(3, vec![vec![q(1), q(0), q(0)], vec![q(0), q(0), q(1)]]);
        let i = s1.intersect(&t);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&[q(1), q(0), q(-1)]));
        assert_eq!(s1.sum(&t).dim(), 3);
        assert_eq!(s1.complement_in(&Subspace::full(3)).len(), 1);
        assert!(parallel(&[q(2), q(4)], &[qf(1, 2), q(1)]));
    }
}
