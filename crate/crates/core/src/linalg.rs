//! Exact vectors, matrices and order-3 structure tensors over [`Scalar`].
//!
//! Index convention, used everywhere: the basis tensor `e_i ⊗ e_j` of
//! `H ⊗ H` has flat index `i * n + j` (big-endian Kronecker order), and a
//! matrix of a linear map has one column per input basis vector.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Sparse coordinate vector: only nonzero entries are stored.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct SparseVec(BTreeMap<usize, Scalar>);

impl SparseVec {
    pub fn new() -> Self {
        SparseVec(BTreeMap::new())
    }

    pub fn unit(i: usize) -> Self {
        Self::term(i, Scalar::one())
    }

    pub fn term(i: usize, c: Scalar) -> Self {
        let mut v = SparseVec::new();
        v.add_term(i, &c);
        v
    }

    pub fn from_dense(entries: &[Scalar]) -> Self {
        SparseVec(
            entries
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        )
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); dim];
        for (&i, c) in &self.0 {
            out[i] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Scalar {
        self.0.get(&i).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&usize, &Scalar)> {
        self.0.iter()
    }

    pub fn add_term(&mut self, i: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(i) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &SparseVec, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let unit = c.is_one();
        for (&i, v) in &other.0 {
            if unit {
                self.add_term(i, v);
            } else {
                self.add_term(i, &(v * c));
            }
        }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.add_scaled(other, &-Scalar::one());
        out
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        let mut out = SparseVec::new();
        out.add_scaled(self, c);
        out
    }

    /// Tensor product in Kronecker order, `other` living in dimension `dim_other`.
    pub fn tensor(&self, other: &SparseVec, dim_other: usize) -> SparseVec {
        let mut out = SparseVec::new();
        for (&i, a) in &self.0 {
            for (&j, b) in &other.0 {
                out.add_term(i * dim_other + j, &(a * b));
            }
        }
        out
    }

    /// Extends `f`, given on basis vectors, linearly to `self`.
    pub fn map_linear<F: Fn(usize) -> SparseVec>(&self, f: F) -> SparseVec {
        let mut out = SparseVec::new();
        for (&i, c) in &self.0 {
            out.add_scaled(&f(i), c);
        }
        out
    }

    pub fn eval(&self, v: &BigRational) -> Result<SparseVec> {
        let mut out = SparseVec::new();
        for (&i, c) in &self.0 {
            out.add_term(i, &c.eval_scalar(v)?);
        }
        Ok(out)
    }
}

impl fmt::Debug for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.0.iter().map(|(i, c)| (i, c.to_string())))
            .finish()
    }
}

impl FromIterator<(usize, Scalar)> for SparseVec {
    fn from_iter<T: IntoIterator<Item = (usize, Scalar)>>(iter: T) -> Self {
        let mut v = SparseVec::new();
        for (i, c) in iter {
            v.add_term(i, &c);
        }
        v
    }
}

/// Dense coordinate vector of an element in a fixed basis.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Vector {
    entries: Vec<Scalar>,
}

impl Vector {
    pub fn new(entries: Vec<Scalar>) -> Self {
        Vector { entries }
    }

    pub fn zeros(n: usize) -> Self {
        Vector::new(vec![Scalar::zero(); n])
    }

    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Vector::zeros(n);
        v.entries[i] = Scalar::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn to_sparse(&self) -> SparseVec {
        SparseVec::from_dense(&self.entries)
    }

    pub fn from_sparse(v: &SparseVec, dim: usize) -> Self {
        Vector::new(v.to_dense(dim))
    }
}

impl std::ops::Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix whose column `j` is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Self {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (&i, c) in col.iter() {
                m[(i, j)] = c.clone();
            }
        }
        m
    }

    /// Matrix of the linear map whose value on basis vector `j` is `f(j)`.
    pub fn from_fn_columns<F>(rows: usize, cols: usize, f: F) -> Self
    where
        F: Fn(usize) -> SparseVec + Sync,
    {
        let columns: Vec<SparseVec> = (0..cols).into_par_iter().map(&f).collect();
        Matrix::from_columns(rows, &columns)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row_vec(&self, r: usize) -> Vec<Scalar> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row_vec(r)).collect()
    }

    pub fn column(&self, c: usize) -> SparseVec {
        (0..self.rows)
            .filter(|&r| !self[(r, c)].is_zero())
            .map(|r| (r, self[(r, c)].clone()))
            .collect()
    }

    pub fn columns(&self) -> Vec<SparseVec> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = &self[(r, c)];
                    if r == c {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    /// Applies the matrix to a sparse vector.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&j, c) in v.iter() {
            for r in 0..self.rows {
                let m = &self[(r, j)];
                if !m.is_zero() {
                    out.add_term(r, &(m * c));
                }
            }
        }
        out
    }

    /// Matrix product `self * other`, skipping zero entries.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let other_rows: Vec<Vec<(usize, &Scalar)>> = (0..other.rows)
            .map(|k| {
                (0..other.cols)
                    .filter_map(|j| {
                        let v = &other[(k, j)];
                        (!v.is_zero()).then_some((j, v))
                    })
                    .collect()
            })
            .collect();
        let rows: Vec<Vec<Scalar>> = (0..self.rows)
            .into_par_iter()
            .map(|i| {
                let mut acc = vec![Scalar::zero(); other.cols];
                for (k, row) in other_rows.iter().enumerate() {
                    let a = &self[(i, k)];
                    if a.is_zero() {
                        continue;
                    }
                    for &(j, b) in row {
                        acc[j] += &(a * b);
                    }
                }
                acc
            })
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: other.cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Kronecker product with `(i ⊗ j) ↦ i * dim_b + j` on both sides.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = &other[(k, l)];
                        if !b.is_zero() {
                            out[(i * other.rows + k, j * other.cols + l)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Substitutes `a := v` in every entry.
    pub fn eval(&self, v: &BigRational) -> Result<Matrix> {
        let data = self
            .data
            .iter()
            .map(|s| s.eval_scalar(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(p, row);
            let inv = m[(row, col)].inverse().expect("pivot is nonzero");
            for c in col..m.cols {
                let v = &m[(row, c)] * &inv;
                m[(row, c)] = v;
            }
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for c in col..m.cols {
                    if m[(row, c)].is_zero() {
                        continue;
                    }
                    let v = &m[(r, c)] - &(&factor * &m[(row, c)]);
                    m[(r, c)] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Exact inverse by Gauss-Jordan elimination on `[A | I]`.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "cannot invert a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n + r)] = Scalar::one();
        }
        let (red, pivots) = aug.rref();
        let rank = pivots.iter().filter(|&&p| p < n).count();
        if rank < n {
            return Err(Error::SingularMatrix { rank, size: n });
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv[(r, c)] = red[(r, n + c)].clone();
            }
        }
        Ok(inv)
    }

    /// Basis of the kernel; empty iff the matrix is injective.
    pub fn nullspace(&self) -> Vec<Vector> {
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -&red[(row, f)];
                }
                Vector::new(v)
            })
            .collect()
    }
}

/// Permutation matrix of the flip `e_i ⊗ e_j ↦ e_j ⊗ e_i` on an `n`-dimensional space.
pub fn flip_matrix(n: usize) -> Matrix {
    let mut m = Matrix::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            m[(j * n + i, i * n + j)] = Scalar::one();
        }
    }
    m
}

/// True when the two families of vectors span the same subspace.
pub fn same_span(a: &[Vector], b: &[Vector]) -> bool {
    let rank_of = |vs: &[&Vector]| -> usize {
        if vs.is_empty() {
            return 0;
        }
        let rows = vs.iter().map(|v| v.entries().to_vec()).collect();
        Matrix::from_rows(rows).map(|m| m.rank()).unwrap_or(0)
    };
    let ra = rank_of(&a.iter().collect::<Vec<_>>());
    let rb = rank_of(&b.iter().collect::<Vec<_>>());
    let both: Vec<&Vector> = a.iter().chain(b).collect();
    ra == rb && rank_of(&both) == ra
}

/// Bilinear structure map `H ⊗ H → H`: `entries[i][j][k]` is the coefficient
/// of `e_k` in the image of `(e_i, e_j)`.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor3 {
    n: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor3(n={})", self.n)
    }
}

impl Tensor3 {
    pub fn zeros(n: usize) -> Self {
        Tensor3 {
            n,
            data: vec![Scalar::zero(); n * n * n],
        }
    }

    /// Tensor whose value on `(e_i, e_j)` is `f(i, j)`.
    pub fn from_fn<F>(n: usize, f: F) -> Self
    where
        F: Fn(usize, usize) -> SparseVec + Sync,
    {
        let images: Vec<SparseVec> = (0..n * n)
            .into_par_iter()
            .map(|f_ij| f(f_ij / n, f_ij % n))
            .collect();
        let mut t = Tensor3::zeros(n);
        for (ij, img) in images.iter().enumerate() {
            for (&k, c) in img.iter() {
                t.data[ij * n + k] = c.clone();
            }
        }
        t
    }

    pub fn from_nested(entries: Vec<Vec<Vec<Scalar>>>) -> Result<Self> {
        let n = entries.len();
        let ok = entries
            .iter()
            .all(|row| row.len() == n && row.iter().all(|v| v.len() == n));
        if !ok {
            return Err(Error::DimensionMismatch(format!(
                "structure tensor is not {n}x{n}x{n}"
            )));
        }
        Ok(Tensor3 {
            n,
            data: entries.into_iter().flatten().flatten().collect(),
        })
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<Scalar>>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| (0..self.n).map(|k| self.get(i, j, k).clone()).collect())
                    .collect()
            })
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[(i * self.n + j) * self.n + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let n = self.n;
        self.data[(i * n + j) * n + k] = v;
    }

    /// Image of `(e_i, e_j)` as a sparse vector.
    pub fn image(&self, i: usize, j: usize) -> SparseVec {
        let base = (i * self.n + j) * self.n;
        SparseVec::from_dense(&self.data[base..base + self.n])
    }

    /// The `n × n²` matrix of the induced map `H ⊗ H → H`.
    pub fn as_matrix(&self) -> Matrix {
        let n = self.n;
        let mut m = Matrix::zeros(n, n * n);
        for ij in 0..n * n {
            for k in 0..n {
                m[(k, ij)] = self.data[ij * n + k].clone();
            }
        }
        m
    }

    pub fn eval(&self, v: &BigRational) -> Result<Tensor3> {
        let data = self
            .data
            .iter()
            .map(|s| s.eval_scalar(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Tensor3 { n: self.n, data })
    }

    /// True when no entry depends on the formal parameter.
    pub fn is_constant(&self) -> bool {
        self.data.iter().all(Scalar::is_constant)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn kron_identity_and_swap() {
        assert_eq!(
            Matrix::identity(2).kron(&Matrix::identity(2)),
            Matrix::identity(4)
        );
        let swap = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(swap.kron(&Matrix::identity(1)), swap);
    }

    #[test]
    fn kron_index_convention() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 5], &[6, 7]]);
        let k = a.kron(&b);
        // (i⊗k, j⊗l) ↦ a[i][j] * b[k][l]
        assert_eq!(k[(1 * 2 + 0, 0 * 2 + 1)], Scalar::from_int(3 * 5));
        assert_eq!(k[(0 * 2 + 1, 1 * 2 + 1)], Scalar::from_int(2 * 7));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Matrix::identity(8).inverse().unwrap(), Matrix::identity(8));
        match Matrix::zeros(2, 2).inverse() {
            Err(Error::SingularMatrix { rank, size }) => assert_eq!((rank, size), (0, 2)),
            other => panic!("unexpected {other:?}"),
        }
        let a = Matrix::from_rows(vec![
            vec![Scalar::param(), Scalar::one()],
            vec![Scalar::one(), Scalar::param()],
        ])
        .unwrap();
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).unwrap().is_identity());
        assert!(inv.mul(&a).unwrap().is_identity());
    }

    #[test]
    fn flip_examples() {
        assert_eq!(flip_matrix(1), Matrix::identity(1));
        let f2 = flip_matrix(2);
        assert!(f2.mul(&f2).unwrap().is_identity());
        let f8 = flip_matrix(8);
        let img = f8.apply(&SparseVec::unit(3 * 8 + 5));
        assert_eq!(img, SparseVec::unit(5 * 8 + 3));
    }

    #[test]
    fn nullspace_examples() {
        assert!(Matrix::identity(3).nullspace().is_empty());
        assert_eq!(Matrix::zeros(2, 2).nullspace().len(), 2);
        let a = m(&[&[1, 1, 0], &[0, 0, 1]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(same_span(
            &ns,
            &[Vector::new(vec![1.into(), (-1).into(), 0.into()])]
        ));
    }

    #[test]
    fn mul_dimension_mismatch() {
        assert!(matches!(
            Matrix::zeros(2, 3).mul(&Matrix::zeros(2, 3)),
            Err(Error::DimensionMismatch(_))
        ));
    }
}
