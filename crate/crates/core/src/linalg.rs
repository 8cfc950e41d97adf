//! Exact dense matrices over [`Cyclo`] and subspaces in canonical reduced
//! row-echelon form.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalar::Cyclo;

pub type Vector = Vec<Cyclo>;

pub fn zero_vec(n: usize) -> Vector {
    vec![Cyclo::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Cyclo::one();
    v
}

pub fn is_zero_vec(v: &[Cyclo]) -> bool {
    v.iter().all(|c| c.is_zero())
}

pub fn vec_add(a: &[Cyclo], b: &[Cyclo]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Cyclo], b: &[Cyclo]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Cyclo], s: &Cyclo) -> Vector {
    a.iter().map(|x| x * s).collect()
}

/// `acc += s * v`
pub fn axpy(acc: &mut [Cyclo], s: &Cyclo, v: &[Cyclo]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(s * x);
        }
    }
}

pub fn dot(a: &[Cyclo], b: &[Cyclo]) -> Cyclo {
    let mut acc = Cyclo::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Cyclo>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, entries: vec![Cyclo::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Cyclo::one();
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<Vector>) -> Self {
        let r = rows.len();
        let mut entries = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "row length mismatch");
            entries.extend(row);
        }
        ExactMatrix { rows: r, cols, entries }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            cols,
            rows.iter().map(|r| r.iter().map(|&x| Cyclo::from_int(x)).collect()).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Cyclo] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclo {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Cyclo) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Cyclo] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let orow = other.row(k);
                let dst = &mut out.entries[i * other.cols..(i + 1) * other.cols];
                axpy(dst, a, orow);
            }
        }
        Ok(out)
    }

    /// M v for a column vector v.
    pub fn apply(&self, v: &[Cyclo]) -> Vector {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    /// v M for a row vector v.
    pub fn apply_left(&self, v: &[Cyclo]) -> Vector {
        assert_eq!(v.len(), self.rows);
        let mut out = zero_vec(self.cols);
        for (i, c) in v.iter().enumerate() {
            axpy(&mut out, c, self.row(i));
        }
        out
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.same_shape(other)?;
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: vec_add(&self.entries, &other.entries),
        })
    }

    pub fn sub(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        self.same_shape(other)?;
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: vec_sub(&self.entries, &other.entries),
        })
    }

    pub fn scale(&self, s: &Cyclo) -> ExactMatrix {
        ExactMatrix { rows: self.rows, cols: self.cols, entries: vec_scale(&self.entries, s) }
    }

    fn same_shape(&self, other: &ExactMatrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.entries)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    /// Reduced row-echelon form together with the pivot columns.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut red = RowReducer::new(self.cols);
        for i in 0..self.rows {
            red.insert(self.row(i).to_vec());
        }
        let (rows, pivots) = red.into_parts();
        let mut m = ExactMatrix::from_rows(self.cols, rows);
        let zero_rows = self.rows - m.rows;
        m.entries.extend(core::iter::repeat_n(Cyclo::zero(), zero_rows * self.cols));
        m.rows = self.rows;
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut red = RowReducer::new(self.cols);
        for i in 0..self.rows {
            red.insert(self.row(i).to_vec());
        }
        red.rank()
    }

    /// Null space {v : M v = 0}.
    pub fn kernel(&self) -> Subspace {
        let mut red = RowReducer::new(self.cols);
        for i in 0..self.rows {
            red.insert(self.row(i).to_vec());
        }
        red.kernel()
    }

    /// One solution of M x = b plus the kernel.
    pub fn solve(&self, b: &[Cyclo]) -> Result<(Vector, Subspace)> {
        if b.len() != self.rows {
            return Err(Error::ShapeMismatch(format!("rhs length {} for {} rows", b.len(), self.rows)));
        }
        let mut red = RowReducer::new(self.cols + 1);
        for i in 0..self.rows {
            let mut r = self.row(i).to_vec();
            r.push(b[i].clone());
            red.insert(r);
        }
        if red.pivots().contains(&self.cols) {
            return Err(Error::Inconsistent);
        }
        let mut x = zero_vec(self.cols);
        for (row, &p) in red.rows.iter().zip(&red.pivots) {
            x[p] = row[self.cols].clone();
        }
        let mut kred = RowReducer::new(self.cols);
        for i in 0..self.rows {
            kred.insert(self.row(i).to_vec());
        }
        Ok((x, kred.kernel()))
    }

    pub fn inverse(&self) -> Result<ExactMatrix> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch(format!("inverse of {}x{}", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut red = RowReducer::new(2 * n);
        for i in 0..n {
            let mut r = self.row(i).to_vec();
            r.extend(unit_vec(n, i));
            red.insert(r);
        }
        if red.pivots().len() < n || red.pivots()[n - 1] != n - 1 {
            return Err(Error::DivisionByZero);
        }
        let rows = red.rows.iter().map(|r| r[n..].to_vec()).collect();
        Ok(ExactMatrix::from_rows(n, rows))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Row space as a subspace of the `cols`-dimensional space.
    pub fn row_space(&self) -> Subspace {
        Subspace::from_vectors(self.cols, self.row_vectors())
    }
}

/// Incremental reduced row echelon form; rows are kept sorted by pivot.
#[derive(Clone, Debug)]
pub struct RowReducer {
    cols: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl RowReducer {
    pub fn new(cols: usize) -> Self {
        RowReducer { cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduce `v` against the current rows (in place).
    pub fn reduce(&self, v: &mut [Cyclo]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for j in p..self.cols {
                if !row[j].is_zero() {
                    v[j].sub_mul_assign(&f, &row[j]);
                }
            }
        }
    }

    /// Adds a row; returns true when it enlarged the span.
    pub fn insert(&mut self, mut v: Vector) -> bool {
        debug_assert_eq!(v.len(), self.cols);
        self.reduce(&mut v);
        let p = match v.iter().position(|c| !c.is_zero()) {
            Some(p) => p,
            None => return false,
        };
        let inv = v[p].inv().expect("nonzero pivot");
        if !v[p].is_one() {
            for x in v[p..].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let nz: Vec<usize> = (p..self.cols).filter(|&j| !v[j].is_zero()).collect();
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for &j in &nz {
                row[j].sub_mul_assign(&f, &v[j]);
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, v);
        true
    }

    pub fn contains(&self, v: &[Cyclo]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        is_zero_vec(&w)
    }

    pub fn into_parts(self) -> (Vec<Vector>, Vec<usize>) {
        (self.rows, self.pivots)
    }

    pub fn kernel(&self) -> Subspace {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut vecs = Vec::new();
        for f in (0..self.cols).filter(|&f| !is_pivot[f]) {
            let mut v = unit_vec(self.cols, f);
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if !row[f].is_zero() {
                    v[p] = -&row[f];
                }
            }
            vecs.push(v);
        }
        Subspace::from_vectors(self.cols, vecs)
    }

    pub fn into_subspace(self) -> Subspace {
        let ambient = self.cols;
        Subspace { ambient, basis: ExactMatrix::from_rows(ambient, self.rows), pivots: self.pivots }
    }
}

/// Left null space {y : y M = 0} of the matrix whose rows are `rows`.
pub fn left_kernel(width: usize, rows: &[Vector]) -> Subspace {
    let n = rows.len();
    let mut red = RowReducer::new(width + n);
    for (i, r) in rows.iter().enumerate() {
        let mut v = r.clone();
        v.extend(unit_vec(n, i));
        red.insert(v);
    }
    let (rs, pivots) = red.into_parts();
    let vecs = rs.into_iter().zip(pivots).filter(|(_, p)| *p >= width).map(|(r, _)| r[width..].to_vec());
    Subspace::from_vectors(n, vecs)
}

/// Subspace of a coordinate space, stored by its canonical RREF basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: ExactMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: ExactMatrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: ExactMatrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    pub fn from_vectors(ambient: usize, vecs: impl IntoIterator<Item = Vector>) -> Self {
        let mut red = RowReducer::new(ambient);
        for v in vecs {
            if red.rank() == ambient {
                break;
            }
            red.insert(v);
        }
        red.into_subspace()
    }

    /// Span of standard basis vectors.
    pub fn coordinate(ambient: usize, idx: &[usize]) -> Self {
        Self::from_vectors(ambient, idx.iter().map(|&i| unit_vec(ambient, i)))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &ExactMatrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn basis_vector(&self, i: usize) -> &[Cyclo] {
        self.basis.row(i)
    }

    fn reducer(&self) -> RowReducer {
        RowReducer { cols: self.ambient, rows: self.basis.row_vectors(), pivots: self.pivots.clone() }
    }

    /// v minus its component along the basis (zero iff v is in the subspace).
    pub fn reduce(&self, v: &[Cyclo]) -> Vector {
        let mut w = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            let row = self.basis.row(i);
            for j in p..self.ambient {
                if !row[j].is_zero() {
                    w[j].sub_mul_assign(&f, &row[j]);
                }
            }
        }
        w
    }

    pub fn contains_vector(&self, v: &[Cyclo]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length differs from ambient dimension");
        is_zero_vec(&self.reduce(v))
    }

    /// Coefficients of v in the RREF basis, or None if v is outside.
    pub fn coordinates(&self, v: &[Cyclo]) -> Option<Vector> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        Ok(())
    }

    /// true iff `other` is contained in `self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok((0..other.dim()).all(|i| self.contains_vector(other.basis.row(i))))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut red = self.reducer();
        for i in 0..other.dim() {
            red.insert(other.basis.row(i).to_vec());
        }
        Ok(red.into_subspace())
    }

    pub fn sum_all<'a>(ambient: usize, parts: impl IntoIterator<Item = &'a Subspace>) -> Result<Subspace> {
        let mut red = RowReducer::new(ambient);
        for p in parts {
            if p.ambient != ambient {
                return Err(Error::AmbientMismatch { left: ambient, right: p.ambient });
            }
            for i in 0..p.dim() {
                red.insert(p.basis.row(i).to_vec());
            }
        }
        Ok(red.into_subspace())
    }

    /// Zassenhaus intersection.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        if self.is_full() {
            return Ok(other.clone());
        }
        if other.is_full() {
            return Ok(self.clone());
        }
        let n = self.ambient;
        let mut red = RowReducer::new(2 * n);
        for i in 0..self.dim() {
            let r = self.basis.row(i);
            let mut v = r.to_vec();
            v.extend_from_slice(r);
            red.insert(v);
        }
        for i in 0..other.dim() {
            let mut v = other.basis.row(i).to_vec();
            v.extend(zero_vec(n));
            red.insert(v);
        }
        let (rows, pivots) = red.into_parts();
        let vecs = rows.into_iter().zip(pivots).filter(|(_, p)| *p >= n).map(|(r, _)| r[n..].to_vec());
        Ok(Subspace::from_vectors(n, vecs))
    }

    /// Vectors of `self` completing a basis of `b ∩ self` to a basis of `self + b`
    /// restricted to `self`; i.e. coset representatives of self / (self ∩ b).
    pub fn quotient_basis(&self, b: &Subspace) -> Result<Vec<Vector>> {
        self.check_ambient(b)?;
        let mut red = b.reducer();
        let mut reps = Vec::new();
        for i in 0..self.dim() {
            let v = self.basis.row(i).to_vec();
            if red.insert(v.clone()) {
                reps.push(v);
            }
        }
        Ok(reps)
    }

    /// Orthogonal complement under the standard pairing of coordinate vectors.
    pub fn annihilator(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.ambient);
        }
        self.reducer().kernel()
    }

    /// Non-pivot coordinates; these index a basis of the quotient space.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }

    /// Coordinates of the class of v in ambient / self, on the basis given by the
    /// standard vectors at `complement_indices()`.
    pub fn quotient_coords(&self, v: &[Cyclo]) -> Vector {
        let r = self.reduce(v);
        self.complement_indices().into_iter().map(|i| r[i].clone()).collect()
    }

    /// Image under the linear map v -> M v.
    pub fn image(&self, m: &ExactMatrix) -> Subspace {
        Subspace::from_vectors(m.rows(), (0..self.dim()).map(|i| m.apply(self.basis.row(i))))
    }
}
