//! Matrices over a coalgebra: multiplicative and primitive matrices, the
//! products ⊗̃, ⊙ and ⊙′, block decomposition of multiplicative matrices and
//! triviality tests against the coradical.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::coalg::{add_to, FinCoalgebra, FinHopf, Sparse2};
use crate::error::{Error, Result};
use crate::linalg::{axpy, is_zero_vec, left_kernel, vec_add, vec_scale, vec_sub, zero_vec, ExactMatrix, RowReducer, Subspace, Vector};
use crate::radical::{hit, HitSide, SimpleSubcoalgebra};
use crate::report::Report;
use crate::scalar::Cyclo;

/// A `rows × cols` matrix whose entries are elements of a `dim`-dimensional
/// coalgebra, stored as coordinate vectors in row-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HMatrix {
    rows: usize,
    cols: usize,
    dim: usize,
    entries: Vec<Vector>,
}

impl HMatrix {
    pub fn new(rows: usize, cols: usize, dim: usize, entries: Vec<Vector>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!("{} entries for a {}x{} matrix", entries.len(), rows, cols)));
        }
        if let Some(bad) = entries.iter().find(|e| e.len() != dim) {
            return Err(Error::ShapeMismatch(format!("entry of length {} in dimension {}", bad.len(), dim)));
        }
        Ok(HMatrix { rows, cols, dim, entries })
    }

    pub fn zeros(rows: usize, cols: usize, dim: usize) -> Self {
        HMatrix { rows, cols, dim, entries: vec![zero_vec(dim); rows * cols] }
    }

    /// Scalar matrix `m` embedded through `k ↦ k·u` (usually `u = 1`).
    pub fn from_scalar(m: &ExactMatrix, u: &[Cyclo]) -> Self {
        let entries = m.entries().iter().map(|c| vec_scale(u, c)).collect();
        HMatrix { rows: m.rows(), cols: m.cols(), dim: u.len(), entries }
    }

    pub fn identity(n: usize, unit: &[Cyclo]) -> Self {
        HMatrix::from_scalar(&ExactMatrix::identity(n), unit)
    }

    /// Single basis elements by index; `None` is a zero entry.
    pub fn from_basis(rows: usize, cols: usize, dim: usize, idx: &[Option<usize>]) -> Result<Self> {
        let entries = idx
            .iter()
            .map(|i| {
                let mut v = zero_vec(dim);
                if let Some(i) = i {
                    v[*i] = Cyclo::one();
                }
                v
            })
            .collect();
        HMatrix::new(rows, cols, dim, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Vector] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &[Cyclo] {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Vector) {
        assert_eq!(v.len(), self.dim);
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| is_zero_vec(e))
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).to_vec());
            }
        }
        HMatrix { rows: self.cols, cols: self.rows, dim: self.dim, entries }
    }

    pub fn map(&self, f: impl Fn(&[Cyclo]) -> Vector) -> Self {
        HMatrix { rows: self.rows, cols: self.cols, dim: self.dim, entries: self.entries.iter().map(|e| f(e)).collect() }
    }

    pub fn try_map(&self, f: impl Fn(&[Cyclo]) -> Result<Vector>) -> Result<Self> {
        let entries = self.entries.iter().map(|e| f(e)).collect::<Result<Vec<_>>>()?;
        Ok(HMatrix { rows: self.rows, cols: self.cols, dim: self.dim, entries })
    }

    fn same_shape(&self, other: &HMatrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols || self.dim != other.dim {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} over dim {} vs {}x{} over dim {}",
                self.rows, self.cols, self.dim, other.rows, other.cols, other.dim
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &HMatrix) -> Result<Self> {
        self.same_shape(other)?;
        Ok(HMatrix {
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| vec_add(a, b)).collect(),
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &HMatrix) -> Result<Self> {
        self.same_shape(other)?;
        Ok(HMatrix {
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| vec_sub(a, b)).collect(),
            ..self.clone()
        })
    }

    /// `L · self` for a scalar matrix `L`.
    pub fn scalar_left(&self, l: &ExactMatrix) -> Result<Self> {
        if l.cols() != self.rows {
            return Err(Error::ShapeMismatch(format!("{}x{} times {}x{}", l.rows(), l.cols(), self.rows, self.cols)));
        }
        let mut out = HMatrix::zeros(l.rows(), self.cols, self.dim);
        for i in 0..l.rows() {
            for k in 0..self.rows {
                let c = l.get(i, k);
                if c.is_zero() {
                    continue;
                }
                for j in 0..self.cols {
                    axpy(&mut out.entries[i * self.cols + j], c, &self.entries[k * self.cols + j]);
                }
            }
        }
        Ok(out)
    }

    /// `self · R` for a scalar matrix `R`.
    pub fn scalar_right(&self, r: &ExactMatrix) -> Result<Self> {
        Ok(self.transpose().scalar_left(&r.transpose())?.transpose())
    }

    /// `L · self · L⁻¹`.
    pub fn conjugate(&self, l: &ExactMatrix) -> Result<Self> {
        let inv = l.inverse()?;
        self.scalar_left(l)?.scalar_right(&inv)
    }

    /// Matrix product over the algebra `h`.
    pub fn mul(&self, h: &FinHopf, other: &HMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!("{}x{} times {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        let mut out = HMatrix::zeros(self.rows, other.cols, self.dim);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = zero_vec(self.dim);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if is_zero_vec(a) || is_zero_vec(b) {
                        continue;
                    }
                    acc = vec_add(&acc, &h.mul_vec(a, b)?);
                }
                out.entries[i * other.cols + j] = acc;
            }
        }
        Ok(out)
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        let mut entries = Vec::with_capacity((r1 - r0) * (c1 - c0));
        for i in r0..r1 {
            for j in c0..c1 {
                entries.push(self.get(i, j).to_vec());
            }
        }
        HMatrix { rows: r1 - r0, cols: c1 - c0, dim: self.dim, entries }
    }

    pub fn entry_span(&self) -> Subspace {
        Subspace::from_vectors(self.dim, self.entries.iter().cloned())
    }

    pub fn entry_rank(&self) -> usize {
        self.entry_span().dim()
    }

    /// Entrywise counit.
    pub fn counit(&self, co: &FinCoalgebra) -> ExactMatrix {
        let vals = self.entries.iter().map(|e| co.counit_of(e)).collect::<Vec<_>>();
        ExactMatrix::from_rows(self.cols, vals.chunks(self.cols.max(1)).map(|c| c.to_vec()).collect())
    }

    /// Entrywise comultiplication.
    pub fn comul(&self, co: &FinCoalgebra) -> TMatrix {
        TMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|e| co.comul_sparse(e)).collect() }
    }

    /// All entries lie in `h0`.
    pub fn is_trivial(&self, h0: &Subspace) -> bool {
        self.entries.iter().all(|e| h0.contains_vector(e))
    }

    /// Entrywise hit projection `e_D ⇀ h ↼ e_C`.
    pub fn hit(&self, co: &FinCoalgebra, idems: &[Vector], left: HitSide, right: HitSide) -> Self {
        self.map(|e| hit(co, idems, e, left, right))
    }

    /// Entries as coordinate vectors of the flattened `rows·cols·dim` space.
    pub fn flatten(&self) -> Vector {
        self.entries.iter().flat_map(|e| e.iter().cloned()).collect()
    }

    pub fn unflatten(rows: usize, cols: usize, dim: usize, v: &[Cyclo]) -> Result<Self> {
        if v.len() != rows * cols * dim {
            return Err(Error::ShapeMismatch(format!("flat vector of length {}", v.len())));
        }
        HMatrix::new(rows, cols, dim, v.chunks(dim.max(1)).map(|c| c.to_vec()).collect())
    }
}

/// A matrix with entries in `H ⊗ H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Sparse2>,
}

impl TMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Sparse2 {
        &self.entries[i * self.cols + j]
    }

    pub fn add(&self, other: &TMatrix) -> Result<TMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch("tensor matrices of different shapes".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| {
                let mut out = a.clone();
                for (k, c) in b {
                    add_to(&mut out, *k, c.clone());
                }
                out
            })
            .collect();
        Ok(TMatrix { rows: self.rows, cols: self.cols, entries })
    }
}

/// `(A ⊗̃ B)_{il} = Σ_k a_{ik} ⊗ b_{kl}`.
pub fn tilde_tensor(a: &HMatrix, b: &HMatrix) -> Result<TMatrix> {
    if a.cols != b.rows {
        return Err(Error::ShapeMismatch(format!("{}x{} ⊗̃ {}x{}", a.rows, a.cols, b.rows, b.cols)));
    }
    let mut entries = vec![Sparse2::new(); a.rows * b.cols];
    for i in 0..a.rows {
        for l in 0..b.cols {
            let out = &mut entries[i * b.cols + l];
            for k in 0..a.cols {
                let (x, y) = (a.get(i, k), b.get(k, l));
                for (p, u) in x.iter().enumerate() {
                    if u.is_zero() {
                        continue;
                    }
                    for (q, v) in y.iter().enumerate() {
                        if !v.is_zero() {
                            add_to(out, (p, q), u * v);
                        }
                    }
                }
            }
        }
    }
    Ok(TMatrix { rows: a.rows, cols: b.cols, entries })
}

/// `Δ(G) = G ⊗̃ G` and `ε(G) = I`.
pub fn check_multiplicative(co: &FinCoalgebra, g: &HMatrix) -> bool {
    if !g.is_square() || g.dim != co.dim() {
        return false;
    }
    if !g.counit(co).is_identity() {
        return false;
    }
    match tilde_tensor(g, g) {
        Ok(t) => g.comul(co) == t,
        Err(_) => false,
    }
}

/// A multiplicative matrix; `basic` records linear independence of its entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultMatrix {
    mat: HMatrix,
    basic: bool,
}

impl MultMatrix {
    pub fn new(co: &FinCoalgebra, mat: HMatrix) -> Result<Self> {
        if !check_multiplicative(co, &mat) {
            return Err(Error::InvalidStructure("matrix is not multiplicative".into()));
        }
        let basic = mat.entry_rank() == mat.rows * mat.rows;
        Ok(MultMatrix { mat, basic })
    }

    pub fn mat(&self) -> &HMatrix {
        &self.mat
    }

    pub fn into_mat(self) -> HMatrix {
        self.mat
    }

    pub fn size(&self) -> usize {
        self.mat.rows
    }

    pub fn is_basic(&self) -> bool {
        self.basic
    }

    /// Basic matrices are similar exactly when their entries span the same
    /// simple subcoalgebra.
    pub fn similar(&self, other: &MultMatrix) -> bool {
        self.basic && other.basic && self.size() == other.size() && self.mat.entry_span() == other.mat.entry_span()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `A ⊙ B`, blocks `a_ij B`.
    Left,
    /// `A ⊙′ B`, blocks `A b_kl`.
    Right,
}

/// Kronecker products over an algebra, for matrices of any shape.
pub fn odot(h: &FinHopf, a: &HMatrix, b: &HMatrix, side: Side) -> Result<HMatrix> {
    h.require_algebra().map_err(|_| Error::NotBialgebra)?;
    let (m1, n1, m2, n2) = (a.rows, a.cols, b.rows, b.cols);
    let mut out = HMatrix::zeros(m1 * m2, n1 * n2, h.dim());
    for i in 0..m1 {
        for j in 0..n1 {
            let x = a.get(i, j);
            if is_zero_vec(x) {
                continue;
            }
            for k in 0..m2 {
                for l in 0..n2 {
                    let y = b.get(k, l);
                    if is_zero_vec(y) {
                        continue;
                    }
                    let (r, c) = match side {
                        Side::Left => (i * m2 + k, j * n2 + l),
                        Side::Right => (k * m1 + i, l * n1 + j),
                    };
                    out.set(r, c, h.mul_vec(x, y)?);
                }
            }
        }
    }
    Ok(out)
}

/// `A ⊙ B` or `A ⊙′ B` of multiplicative matrices, checked multiplicative.
pub fn kron(h: &FinHopf, a: &MultMatrix, b: &MultMatrix, side: Side) -> Result<MultMatrix> {
    if !h.is_bialgebra() {
        return Err(Error::NotBialgebra);
    }
    let m = odot(h, &a.mat, &b.mat, side)?;
    MultMatrix::new(h.coalgebra(), m).map_err(|_| Error::AxiomFailure("Kronecker product is not multiplicative".into()))
}

fn first_mismatch(a: &HMatrix, b: &HMatrix) -> Option<(usize, usize)> {
    (0..a.rows).flat_map(|i| (0..a.cols).map(move |j| (i, j))).find(|&(i, j)| a.get(i, j) != b.get(i, j))
}

/// `S(G)G = GS(G) = I` and `S⁻¹(G)ᵀGᵀ = GᵀS⁻¹(G)ᵀ = I`.
pub fn antipode_identities(h: &FinHopf, g: &MultMatrix) -> Result<Report> {
    let s = h.require_antipode()?.clone();
    let s_inv = h.antipode_inverse()?;
    let unit = h.unit()?.to_vec();
    let n = g.size();
    let id = HMatrix::identity(n, &unit);
    let gm = &g.mat;
    let sg = gm.map(|e| s.apply_left(e));
    let sig_t = gm.map(|e| s_inv.apply_left(e)).transpose();
    let gt = gm.transpose();
    let cases: [(&str, HMatrix); 4] = [
        ("antipode-left", sg.mul(h, gm)?),
        ("antipode-right", gm.mul(h, &sg)?),
        ("inverse-antipode-transpose-left", sig_t.mul(h, &gt)?),
        ("inverse-antipode-transpose-right", gt.mul(h, &sig_t)?),
    ];
    let mut report = Report::new();
    for (name, m) in cases {
        match first_mismatch(&m, &id) {
            None => report.pass(name, ""),
            Some((i, j)) => report.fail(name, format!("entry ({}, {}) differs from the identity", i, j)),
        }
    }
    Ok(report)
}

/// Block upper-triangular form `L G L⁻¹` with basic diagonal blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub l: ExactMatrix,
    pub l_inv: ExactMatrix,
    pub conjugated: HMatrix,
    pub block_sizes: Vec<usize>,
    pub diagonal: Vec<MultMatrix>,
    /// Index into the simple list for each diagonal block.
    pub simple_index: Vec<usize>,
    /// Every block above the diagonal, keyed by block position.
    pub offdiag: BTreeMap<(usize, usize), HMatrix>,
}

impl BlockDecomposition {
    pub fn block_count(&self) -> usize {
        self.block_sizes.len()
    }

    pub fn offsets(&self) -> Vec<usize> {
        let mut out = vec![0];
        for s in &self.block_sizes {
            out.push(out.last().unwrap() + s);
        }
        out
    }

    pub fn offdiag_is_zero(&self) -> bool {
        self.offdiag.values().all(|m| m.is_zero())
    }
}

/// `y_i(c) = Σ_j c_j g_ij`: coefficient of `v_i` in `ρ(Σ_j c_j v_j)`.
fn coefficients(g: &HMatrix, c: &[Cyclo]) -> Vec<Vector> {
    (0..g.rows)
        .map(|i| {
            let mut acc = zero_vec(g.dim);
            for (j, cj) in c.iter().enumerate() {
                if !cj.is_zero() {
                    axpy(&mut acc, cj, g.get(i, j));
                }
            }
            acc
        })
        .collect()
}

/// `{c : y_i(c) ∈ w for all i}`.
fn comodule_preimage(g: &HMatrix, w: &Subspace) -> Subspace {
    let n = g.rows;
    let q = g.dim - w.dim();
    if q == 0 {
        return Subspace::full(n);
    }
    // row j of the linear map c ↦ (quotient coords of y_i(c))_i
    let images: Vec<Vector> = (0..n)
        .map(|j| {
            let mut row = Vec::with_capacity(n * q);
            for i in 0..n {
                row.extend(w.quotient_coords(g.get(i, j)));
            }
            row
        })
        .collect();
    left_kernel(n * q, &images)
}

/// Coordinates of `y` on the entries of a basic matrix.
struct EntrySolver {
    r: usize,
    system: ExactMatrix,
}

impl EntrySolver {
    fn new(c: &HMatrix) -> Self {
        EntrySolver { r: c.rows, system: ExactMatrix::from_rows(c.dim, c.entries.clone()).transpose() }
    }

    fn coeff(&self, y: &[Cyclo]) -> Result<Vector> {
        Ok(self.system.solve(y)?.0)
    }

    /// `E_ab · c`: the matrix-unit functional applied through the coaction.
    fn act(&self, g: &HMatrix, a: usize, b: usize, c: &[Cyclo]) -> Result<Vector> {
        let ys = coefficients(g, c);
        ys.iter().map(|y| Ok(self.coeff(y)?[a * self.r + b].clone())).collect()
    }
}

fn socle_basis(g: &HMatrix, simples: &[SimpleSubcoalgebra]) -> Result<(Vec<Vector>, Vec<(usize, usize)>)> {
    let mut vectors = Vec::new();
    let mut blocks = Vec::new();
    for (t, simple) in simples.iter().enumerate() {
        let part = comodule_preimage(g, &simple.space);
        if part.is_zero() {
            continue;
        }
        let solver = EntrySolver::new(simple.matrix.mat());
        let r = simple.size();
        let mut heads = RowReducer::new(g.rows);
        for v in part.basis_vectors() {
            heads.insert(solver.act(g, 0, 0, &v)?);
        }
        let heads = heads.into_subspace();
        for u in heads.basis_vectors() {
            for k in 0..r {
                vectors.push(solver.act(g, k, 0, &u)?);
            }
            blocks.push((t, r));
        }
        if heads.dim() * r != part.dim() {
            return Err(Error::AxiomFailure("isotypic component is not a sum of copies".into()));
        }
    }
    Ok((vectors, blocks))
}

/// Conjugates a multiplicative matrix into block upper-triangular form whose
/// diagonal blocks are the basic matrices of `simples` (the simple
/// subcoalgebras of H₀).
pub fn decompose_multiplicative(
    co: &FinCoalgebra,
    g: &MultMatrix,
    simples: &[SimpleSubcoalgebra],
) -> Result<BlockDecomposition> {
    let n = g.size();
    let (l, blocks) = decompose_rec(g.mat(), simples)?;
    let l_inv = l.inverse()?;
    let conjugated = g.mat().scalar_left(&l)?.scalar_right(&l_inv)?;
    let block_sizes: Vec<usize> = blocks.iter().map(|b| b.1).collect();
    let mut offsets = vec![0];
    for s in &block_sizes {
        offsets.push(offsets.last().unwrap() + s);
    }
    debug_assert_eq!(*offsets.last().unwrap(), n);
    let t = blocks.len();
    let mut diagonal = Vec::with_capacity(t);
    let mut offdiag = BTreeMap::new();
    for i in 0..t {
        for j in 0..t {
            let b = conjugated.block(offsets[i], offsets[i + 1], offsets[j], offsets[j + 1]);
            if i > j && !b.is_zero() {
                return Err(Error::AxiomFailure("decomposition is not block upper-triangular".into()));
            }
            if i == j {
                let m = MultMatrix::new(co, b)?;
                if !m.is_basic() || m.mat.entry_span() != simples[blocks[i].0].space {
                    return Err(Error::AxiomFailure("diagonal block is not basic".into()));
                }
                diagonal.push(m);
            } else if i < j {
                offdiag.insert((i, j), b);
            }
        }
    }
    Ok(BlockDecomposition {
        l,
        l_inv,
        conjugated,
        block_sizes,
        diagonal,
        simple_index: blocks.iter().map(|b| b.0).collect(),
        offdiag,
    })
}

fn decompose_rec(g: &HMatrix, simples: &[SimpleSubcoalgebra]) -> Result<(ExactMatrix, Vec<(usize, usize)>)> {
    let n = g.rows;
    if n == 0 {
        return Ok((ExactMatrix::identity(0), Vec::new()));
    }
    let (socle, blocks) = socle_basis(g, simples)?;
    let s = socle.len();
    if s == 0 {
        return Err(Error::InvalidStructure("comodule has zero socle; coefficients escape the given simples".into()));
    }
    // columns of P: socle basis, then standard vectors completing it
    let mut red = RowReducer::new(n);
    for v in &socle {
        if !red.insert(v.clone()) {
            return Err(Error::AxiomFailure("socle copies are not independent".into()));
        }
    }
    let mut cols = socle;
    for i in 0..n {
        let mut e = zero_vec(n);
        e[i] = Cyclo::one();
        if red.insert(e.clone()) {
            cols.push(e);
        }
    }
    let p = ExactMatrix::from_rows(n, cols).transpose();
    let p_inv = p.inverse()?;
    if s == n {
        return Ok((p_inv, blocks));
    }
    let g1 = g.scalar_left(&p_inv)?.scalar_right(&p)?;
    let rest = g1.block(s, n, s, n);
    let (l_rest, more) = decompose_rec(&rest, simples)?;
    let mut d = ExactMatrix::identity(n);
    for i in 0..n - s {
        for j in 0..n - s {
            d.set(s + i, s + j, l_rest.get(i, j).clone());
        }
    }
    let mut all = blocks;
    all.extend(more);
    Ok((d.mul(&p_inv)?, all))
}

/// For every block `X_ij` above the diagonal: `X_ij − ^{C_i}X_ij^{C_j}` is
/// trivial, and so are `^D X_ij` for `D ≠ C_i` and `X_ij^{D'}` for `D' ≠ C_j`.
pub fn block_triviality_check(
    co: &FinCoalgebra,
    dec: &BlockDecomposition,
    idems: &[Vector],
    h0: &Subspace,
) -> Report {
    let mut report = Report::new();
    let s = idems.len();
    let mut corner = None;
    let mut side = None;
    for (&(i, j), x) in &dec.offdiag {
        let (ci, cj) = (dec.simple_index[i], dec.simple_index[j]);
        let proj = x.hit(co, idems, HitSide::Simple(ci), HitSide::Simple(cj));
        if corner.is_none() && !x.sub(&proj).map(|d| d.is_trivial(h0)).unwrap_or(false) {
            corner = Some((i, j));
        }
        for d in 0..s {
            if side.is_some() {
                break;
            }
            if d != ci && !x.hit(co, idems, HitSide::Simple(d), HitSide::Counit).is_trivial(h0) {
                side = Some((i, j, d));
            }
            if d != cj && !x.hit(co, idems, HitSide::Counit, HitSide::Simple(d)).is_trivial(h0) {
                side = Some((i, j, d));
            }
        }
    }
    match corner {
        None => report.pass("block-corner-projection", "X_ij minus its (C_i, C_j) hit projection lies in H0"),
        Some((i, j)) => report.fail("block-corner-projection", format!("block ({}, {}) has a nontrivial remainder", i, j)),
    }
    match side {
        None => report.pass("block-foreign-projection", "hits by foreign idempotents are trivial"),
        Some((i, j, d)) => report.fail(
            "block-foreign-projection",
            format!("block ({}, {}) has a nontrivial projection through simple {}", i, j, d),
        ),
    }
    report
}

/// Solution space of `Δ(X) = C ⊗̃ X + X ⊗̃ D` for `X ∈ H^{r×s}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveSpace {
    pub rows: usize,
    pub cols: usize,
    pub dim: usize,
    /// Solutions as flattened `rows·cols·dim` coordinate vectors.
    pub space: Subspace,
    /// Solutions with all entries in H₀.
    pub trivial: Subspace,
    pub nontrivial_dim: usize,
}

impl PrimitiveSpace {
    pub fn matrix(&self, v: &[Cyclo]) -> HMatrix {
        HMatrix::unflatten(self.rows, self.cols, self.dim, v).expect("flattened primitive matrix")
    }

    pub fn basis_matrices(&self) -> Vec<HMatrix> {
        self.space.basis_vectors().iter().map(|v| self.matrix(v)).collect()
    }

    /// Representatives of the solutions modulo trivial ones.
    pub fn nontrivial_representatives(&self) -> Vec<HMatrix> {
        self.space
            .quotient_basis(&self.trivial)
            .expect("trivial solutions lie in the solution space")
            .iter()
            .map(|v| self.matrix(v))
            .collect()
    }
}

/// `Δ(X) − C ⊗̃ X − X ⊗̃ D`, one `TMatrix` entry per position.
pub fn primitive_defect(co: &FinCoalgebra, c: &HMatrix, x: &HMatrix, d: &HMatrix) -> Result<TMatrix> {
    let lhs = x.comul(co);
    let a = tilde_tensor(c, x)?;
    let b = tilde_tensor(x, d)?;
    let neg = |t: TMatrix| TMatrix {
        rows: t.rows,
        cols: t.cols,
        entries: t.entries.into_iter().map(|m| m.into_iter().map(|(k, v)| (k, -v)).collect()).collect(),
    };
    lhs.add(&neg(a))?.add(&neg(b))
}

pub fn is_primitive(co: &FinCoalgebra, c: &HMatrix, x: &HMatrix, d: &HMatrix) -> bool {
    primitive_defect(co, c, x, d).map(|t| t.entries.iter().all(|m| m.is_empty())).unwrap_or(false)
}

pub fn primitive_space(co: &FinCoalgebra, c: &MultMatrix, d: &MultMatrix, h0: &Subspace) -> Result<PrimitiveSpace> {
    let n = co.dim();
    let (r, s) = (c.size(), d.size());
    let (cm, dm) = (c.mat(), d.mat());
    let width = r * s * n * n;
    let eq = |p: usize, q: usize, a: usize, b: usize| ((p * s + q) * n + a) * n + b;
    let mut images = Vec::with_capacity(r * s * n);
    for p in 0..r {
        for q in 0..s {
            for m in 0..n {
                // image of the unknown X_pq = b_m
                let mut img = zero_vec(width);
                for (a, b, v) in co.comul_basis(m) {
                    img[eq(p, q, *a, *b)] += v;
                }
                // −C_{p'p} ⊗ b_m lands in equation (p', q)
                for p2 in 0..r {
                    for (a, v) in cm.get(p2, p).iter().enumerate() {
                        if !v.is_zero() {
                            img[eq(p2, q, a, m)] -= v;
                        }
                    }
                }
                // −b_m ⊗ D_{q q'} lands in equation (p, q')
                for q2 in 0..s {
                    for (b, v) in dm.get(q, q2).iter().enumerate() {
                        if !v.is_zero() {
                            img[eq(p, q2, m, b)] -= v;
                        }
                    }
                }
                images.push(img);
            }
        }
    }
    let space = left_kernel(width, &images);
    let mut triv = Vec::new();
    for pos in 0..r * s {
        for v in h0.basis_vectors() {
            let mut full = zero_vec(r * s * n);
            full[pos * n..(pos + 1) * n].clone_from_slice(&v);
            triv.push(full);
        }
    }
    let trivial = space.intersect(&Subspace::from_vectors(r * s * n, triv))?;
    let nontrivial_dim = space.dim() - trivial.dim();
    Ok(PrimitiveSpace { rows: r, cols: s, dim: n, space, trivial, nontrivial_dim })
}

/// The three nontriviality conditions for a primitive matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nontriviality {
    pub some_entry_outside: bool,
    pub all_entries_outside: bool,
    pub independent_mod_h0: bool,
}

impl Nontriviality {
    pub fn equivalent(&self) -> bool {
        self.some_entry_outside == self.all_entries_outside && self.all_entries_outside == self.independent_mod_h0
    }

    pub fn report(&self) -> Report {
        let mut report = Report::new();
        let describe = |b: bool| if b { "true" } else { "false" };
        let details: String = format!(
            "some entry outside H0: {}; all entries outside H0: {}; rows and columns independent mod H0: {}",
            describe(self.some_entry_outside),
            describe(self.all_entries_outside),
            describe(self.independent_mod_h0)
        );
        report.check("nontriviality-equivalence", self.equivalent(), details);
        report
    }
}

fn rank_mod(h0: &Subspace, vs: impl IntoIterator<Item = Vector>) -> usize {
    let mut red = RowReducer::new(h0.ambient_dim() - h0.dim());
    for v in vs {
        red.insert(h0.quotient_coords(&v));
    }
    red.rank()
}

/// Evaluates the three conditions independently; errors if `x` is not
/// `(c, d)`-primitive.
pub fn nontriviality_equivalences(
    co: &FinCoalgebra,
    x: &HMatrix,
    c: &MultMatrix,
    d: &MultMatrix,
    h0: &Subspace,
) -> Result<Nontriviality> {
    if x.rows != c.size() || x.cols != d.size() || !is_primitive(co, c.mat(), x, d.mat()) {
        return Err(Error::NotPrimitive);
    }
    let outside: Vec<bool> = x.entries.iter().map(|e| !h0.contains_vector(e)).collect();
    let rows_ok = (0..x.rows).all(|i| rank_mod(h0, (0..x.cols).map(|j| x.get(i, j).to_vec())) == x.cols);
    let cols_ok = (0..x.cols).all(|j| rank_mod(h0, (0..x.rows).map(|i| x.get(i, j).to_vec())) == x.rows);
    Ok(Nontriviality {
        some_entry_outside: outside.iter().any(|&b| b),
        all_entries_outside: outside.iter().all(|&b| b),
        independent_mod_h0: rows_ok && cols_ok,
    })
}

/// `[[C, X], [0, D]]` for a `(C, D)`-primitive `X`; multiplicative by construction.
pub fn extension_matrix(co: &FinCoalgebra, c: &MultMatrix, x: &HMatrix, d: &MultMatrix) -> Result<MultMatrix> {
    let (r, s) = (c.size(), d.size());
    if x.rows() != r || x.cols() != s {
        return Err(Error::ShapeMismatch(format!("primitive block is {}x{}, expected {}x{}", x.rows(), x.cols(), r, s)));
    }
    let n = co.dim();
    let mut m = HMatrix::zeros(r + s, r + s, n);
    for i in 0..r {
        for j in 0..r {
            m.set(i, j, c.mat().get(i, j).to_vec());
        }
        for j in 0..s {
            m.set(i, r + j, x.get(i, j).to_vec());
        }
    }
    for i in 0..s {
        for j in 0..s {
            m.set(r + i, r + j, d.mat().get(i, j).to_vec());
        }
    }
    MultMatrix::new(co, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalg::{dual_group_algebra, group_algebra, sweedler};
    use crate::groups::GroupTable;
    use crate::radical::analyze;

    // sweedler basis: 1, x, g, gx
    fn upper() -> HMatrix {
        HMatrix::from_basis(2, 2, 4, &[Some(0), Some(1), None, Some(2)]).unwrap()
    }

    #[test]
    fn tilde_tensor_row_times_column() {
        let row = HMatrix::from_basis(1, 2, 4, &[Some(0), Some(1)]).unwrap();
        let col = HMatrix::from_basis(2, 1, 4, &[Some(1), Some(2)]).unwrap();
        let t = tilde_tensor(&row, &col).unwrap();
        let h = sweedler();
        let x = HMatrix::from_basis(1, 1, 4, &[Some(1)]).unwrap();
        assert_eq!(t, x.comul(h.coalgebra()));
        assert!(tilde_tensor(&row, &row).is_err());
    }

    #[test]
    fn multiplicative_examples() {
        let h = sweedler();
        let co = h.coalgebra();
        assert!(check_multiplicative(co, &upper()));
        let x = HMatrix::from_basis(1, 1, 4, &[Some(1)]).unwrap();
        assert!(!check_multiplicative(co, &x));
        let l = ExactMatrix::from_ints(&[&[2, 1], &[1, 1]]);
        assert!(check_multiplicative(co, &upper().conjugate(&l).unwrap()));
    }

    #[test]
    fn kron_with_group_like() {
        let h = sweedler();
        let co = h.coalgebra();
        let a = MultMatrix::new(co, upper()).unwrap();
        let g = MultMatrix::new(co, HMatrix::from_basis(1, 1, 4, &[Some(2)]).unwrap()).unwrap();
        let gg = kron(&h, &g, &g, Side::Left).unwrap();
        assert_eq!(gg.mat().get(0, 0), h.unit().unwrap());
        let ag = kron(&h, &a, &g, Side::Left).unwrap();
        let xg = h.mul_vec(&upper().get(0, 1).to_vec(), g.mat().get(0, 0)).unwrap();
        assert_eq!(ag.mat().get(0, 1), &xg[..]);
        assert_eq!(ag.mat().get(1, 1), h.unit().unwrap());
        let coalg_only = FinHopf::coalgebra_only(1, co.clone()).unwrap();
        assert_eq!(kron(&coalg_only, &a, &g, Side::Left), Err(Error::NotBialgebra));
    }

    #[test]
    fn antipode_identities_hold() {
        let h = sweedler();
        let a = MultMatrix::new(h.coalgebra(), upper()).unwrap();
        assert!(antipode_identities(&h, &a).unwrap().all_passed());
    }

    #[test]
    fn decompose_upper_triangular() {
        let h = sweedler();
        let data = analyze(&h).unwrap();
        let a = MultMatrix::new(h.coalgebra(), upper()).unwrap();
        let dec = decompose_multiplicative(h.coalgebra(), &a, &data.simples).unwrap();
        assert!(dec.l.is_identity());
        assert_eq!(dec.block_sizes, vec![1, 1]);
        assert_eq!(dec.offdiag[&(0, 1)], HMatrix::from_basis(1, 1, 4, &[Some(1)]).unwrap());
        let rep = block_triviality_check(h.coalgebra(), &dec, &data.idempotents, &data.h0);
        assert!(rep.all_passed(), "{}", rep.summary());
    }

    #[test]
    fn decompose_simple_block_is_stable() {
        let h = dual_group_algebra(&GroupTable::symmetric(3));
        let data = analyze(&h).unwrap();
        let big = data.simples.iter().find(|s| s.size() == 2).unwrap();
        let dec = decompose_multiplicative(h.coalgebra(), &big.matrix, &data.simples).unwrap();
        assert_eq!(dec.block_count(), 1);
        assert!(dec.l.is_identity());
        assert_eq!(dec.diagonal[0], big.matrix);
    }

    #[test]
    fn sweedler_primitive_space() {
        let h = sweedler();
        let data = analyze(&h).unwrap();
        let (one, g) = (&data.simples[0].matrix, &data.simples[1].matrix);
        let ps = primitive_space(h.coalgebra(), one, g, &data.h0).unwrap();
        assert_eq!(ps.space.dim(), 2);
        assert_eq!(ps.nontrivial_dim, 1);
        let expected = Subspace::from_vectors(
            4,
            [
                vec![Cyclo::zero(), Cyclo::one(), Cyclo::zero(), Cyclo::zero()],
                vec![Cyclo::one(), Cyclo::zero(), Cyclo::from_int(-1), Cyclo::zero()],
            ],
        );
        assert_eq!(ps.space, expected);
        let z2 = group_algebra(&GroupTable::cyclic(2));
        let d2 = analyze(&z2).unwrap();
        let p2 = primitive_space(z2.coalgebra(), &d2.simples[0].matrix, &d2.simples[0].matrix, &d2.h0).unwrap();
        assert_eq!(p2.nontrivial_dim, 0);
    }

    #[test]
    fn nontriviality_examples() {
        let h = sweedler();
        let data = analyze(&h).unwrap();
        let co = h.coalgebra();
        let (c, d) = (&data.simples[0].matrix, &data.simples[1].matrix);
        let x = HMatrix::from_basis(1, 1, 4, &[Some(1)]).unwrap();
        let nx = nontriviality_equivalences(co, &x, c, d, &data.h0).unwrap();
        assert!(nx.some_entry_outside && nx.all_entries_outside && nx.independent_mod_h0);
        let t = HMatrix::new(1, 1, 4, vec![vec![Cyclo::one(), Cyclo::zero(), Cyclo::from_int(-1), Cyclo::zero()]]).unwrap();
        let nt = nontriviality_equivalences(co, &t, c, d, &data.h0).unwrap();
        assert!(!nt.some_entry_outside && !nt.all_entries_outside && !nt.independent_mod_h0);
        let z = HMatrix::zeros(1, 1, 4);
        assert!(nontriviality_equivalences(co, &z, c, d, &data.h0).unwrap().equivalent());
        let gx = HMatrix::from_basis(1, 1, 4, &[Some(3)]).unwrap();
        assert_eq!(nontriviality_equivalences(co, &gx, c, d, &data.h0), Err(Error::NotPrimitive));
    }
}
