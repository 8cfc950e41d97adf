//! Finite-dimensional coalgebras, bialgebras and Hopf algebras given by
//! structure constants on a fixed basis.
//!
//! Conventions: `Δ(b_i) = Σ μ[i][j][k] b_j ⊗ b_k`, `b_i b_j = Σ c[i][j][k] b_k`,
//! and row `i` of the antipode matrix holds the coordinates of `S(b_i)`.
//! Tensors in `H ⊗ H` are stored densely with index `j * dim + k`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::groups::GroupTable;
use crate::linalg::{axpy, dot, is_zero_vec, unit_vec, zero_vec, ExactMatrix, RowReducer, Subspace, Vector};
use crate::report::Report;
use crate::scalar::{lcm_u32, Cyclo};

pub type Sparse2 = BTreeMap<(usize, usize), Cyclo>;

pub(crate) fn add_to(map: &mut Sparse2, key: (usize, usize), c: Cyclo) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&key) {
        Some(v) => {
            *v += &c;
            if v.is_zero() {
                map.remove(&key);
            }
        }
        None => {
            map.insert(key, c);
        }
    }
}

fn canonical_rows(n: usize, rows: Vec<Sparse2>) -> Vec<Vec<(usize, usize, Cyclo)>> {
    debug_assert_eq!(rows.len(), n);
    rows.into_iter()
        .map(|m| m.into_iter().filter(|(_, c)| !c.is_zero()).map(|((j, k), c)| (j, k, c)).collect())
        .collect()
}

fn scalar_order(c: &Cyclo) -> u32 {
    if c.is_rational() {
        1
    } else {
        c.order()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinCoalgebra {
    names: Vec<String>,
    comul: Vec<Vec<(usize, usize, Cyclo)>>,
    counit: Vector,
}

impl FinCoalgebra {
    /// Builds a coalgebra from `(i, j, k, μ)` quadruples; repeated keys add up.
    pub fn new(
        names: Vec<String>,
        comul: impl IntoIterator<Item = (usize, usize, usize, Cyclo)>,
        counit: Vector,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidStructure("dimension must be positive".to_string()));
        }
        if counit.len() != n {
            return Err(Error::ShapeMismatch(format!("counit has length {} for dim {}", counit.len(), n)));
        }
        let mut rows = vec![Sparse2::new(); n];
        for (i, j, k, c) in comul {
            if i >= n || j >= n || k >= n {
                return Err(Error::InvalidStructure(format!("comul index ({}, {}, {}) out of range", i, j, k)));
            }
            add_to(&mut rows[i], (j, k), c);
        }
        Ok(FinCoalgebra { names, comul: canonical_rows(n, rows), counit })
    }

    fn from_rows(names: Vec<String>, rows: Vec<Sparse2>, counit: Vector) -> Self {
        let n = names.len();
        FinCoalgebra { names, comul: canonical_rows(n, rows), counit }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn counit(&self) -> &[Cyclo] {
        &self.counit
    }

    /// Nonzero `(j, k, μ[i][j][k])` for a basis element.
    pub fn comul_basis(&self, i: usize) -> &[(usize, usize, Cyclo)] {
        &self.comul[i]
    }

    pub fn quadruples(&self) -> impl Iterator<Item = (usize, usize, usize, &Cyclo)> {
        self.comul.iter().enumerate().flat_map(|(i, row)| row.iter().map(move |(j, k, c)| (i, *j, *k, c)))
    }

    pub fn counit_of(&self, v: &[Cyclo]) -> Cyclo {
        dot(&self.counit, v)
    }

    pub fn comul_sparse(&self, v: &[Cyclo]) -> Sparse2 {
        let mut out = Sparse2::new();
        for (i, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, k, c) in &self.comul[i] {
                add_to(&mut out, (*j, *k), a * c);
            }
        }
        out
    }

    /// Dense `Δ(v)` with index `j * dim + k`.
    pub fn comul_vec(&self, v: &[Cyclo]) -> Vector {
        let n = self.dim();
        let mut out = zero_vec(n * n);
        for ((j, k), c) in self.comul_sparse(v) {
            out[j * n + k] = c;
        }
        out
    }

    /// `f ⇀ h = Σ h₁ f(h₂)`
    pub fn left_hit(&self, f: &[Cyclo], h: &[Cyclo]) -> Vector {
        let mut out = zero_vec(self.dim());
        for (i, a) in h.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, k, c) in &self.comul[i] {
                if !f[*k].is_zero() {
                    out[*j] += &(&(a * c) * &f[*k]);
                }
            }
        }
        out
    }

    /// `h ↼ f = Σ f(h₁) h₂`
    pub fn right_hit(&self, h: &[Cyclo], f: &[Cyclo]) -> Vector {
        let mut out = zero_vec(self.dim());
        for (i, a) in h.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, k, c) in &self.comul[i] {
                if !f[*j].is_zero() {
                    out[*k] += &(&(a * c) * &f[*j]);
                }
            }
        }
        out
    }

    /// Structure constants of the convolution algebra on the dual basis:
    /// `b_j* b_k* = Σ_i μ[i][j][k] b_i*`, stored at index `j * dim + k`.
    pub fn dual_mul(&self) -> Vec<Vec<(usize, Cyclo)>> {
        let n = self.dim();
        let mut out: Vec<Vec<(usize, Cyclo)>> = vec![Vec::new(); n * n];
        for (i, row) in self.comul.iter().enumerate() {
            for (j, k, c) in row {
                out[j * n + k].push((i, c.clone()));
            }
        }
        out
    }

    pub fn check_coalgebra(&self, report: &mut Report) {
        let n = self.dim();
        let mut coassoc_witness = None;
        for i in 0..n {
            let mut lhs: BTreeMap<(usize, usize, usize), Cyclo> = BTreeMap::new();
            let mut rhs: BTreeMap<(usize, usize, usize), Cyclo> = BTreeMap::new();
            for (j, k, c) in &self.comul[i] {
                for (a, b, d) in &self.comul[*j] {
                    let e = lhs.entry((*a, *b, *k)).or_insert_with(Cyclo::zero);
                    *e += &(c * d);
                }
                for (a, b, d) in &self.comul[*k] {
                    let e = rhs.entry((*j, *a, *b)).or_insert_with(Cyclo::zero);
                    *e += &(c * d);
                }
            }
            lhs.retain(|_, c| !c.is_zero());
            rhs.retain(|_, c| !c.is_zero());
            if lhs != rhs {
                coassoc_witness = Some(i);
                break;
            }
        }
        match coassoc_witness {
            None => report.pass("coassociativity", ""),
            Some(i) => report.fail("coassociativity", format!("fails on basis element {} ({})", i, self.names[i])),
        }

        let mut counit_witness = None;
        for i in 0..n {
            let e = unit_vec(n, i);
            let left = self.right_hit(&e, &self.counit);
            let right = self.left_hit(&self.counit, &e);
            if left != e || right != e {
                counit_witness = Some(i);
                break;
            }
        }
        match counit_witness {
            None => report.pass("counit", ""),
            Some(i) => report.fail("counit", format!("fails on basis element {} ({})", i, self.names[i])),
        }
    }

    fn coefficient_factors(&self, w: &[Cyclo]) -> (Vec<Vector>, Vec<Vector>) {
        let n = self.dim();
        let c = self.comul_sparse(w);
        let mut cols = vec![zero_vec(n); n];
        let mut rows = vec![zero_vec(n); n];
        for ((j, k), v) in c {
            cols[k][j] = v.clone();
            rows[j][k] = v;
        }
        (cols, rows)
    }

    pub fn is_subcoalgebra(&self, w: &Subspace) -> bool {
        for v in w.basis_vectors() {
            let (cols, rows) = self.coefficient_factors(&v);
            if !cols.iter().chain(rows.iter()).all(|x| w.contains_vector(x)) {
                return false;
            }
        }
        true
    }

    /// Smallest subcoalgebra containing `seed`.
    pub fn subcoalgebra_closure(&self, seed: &Subspace) -> Subspace {
        let n = self.dim();
        let mut red = RowReducer::new(n);
        let mut queue: Vec<Vector> = seed.basis_vectors();
        for v in &queue {
            red.insert(v.clone());
        }
        while let Some(v) = queue.pop() {
            let (cols, rows) = self.coefficient_factors(&v);
            for x in cols.into_iter().chain(rows) {
                if !is_zero_vec(&x) && red.insert(x.clone()) {
                    queue.push(x);
                }
            }
        }
        red.into_subspace()
    }

    /// The subcoalgebra `w` as a coalgebra in its own right, on its RREF basis.
    pub fn restrict(&self, w: &Subspace) -> Result<FinCoalgebra> {
        if w.ambient_dim() != self.dim() {
            return Err(Error::AmbientMismatch { left: self.dim(), right: w.ambient_dim() });
        }
        let m = w.dim();
        if m == 0 {
            return Err(Error::InvalidStructure("restriction to the zero subspace".to_string()));
        }
        let basis = w.basis_vectors();
        let piv = w.pivots();
        let mut rows = Vec::with_capacity(m);
        let n = self.dim();
        for v in &basis {
            let full = self.comul_sparse(v);
            let mut d = Sparse2::new();
            for (a, &pa) in piv.iter().enumerate() {
                for (b, &pb) in piv.iter().enumerate() {
                    if let Some(c) = full.get(&(pa, pb)) {
                        d.insert((a, b), c.clone());
                    }
                }
            }
            // verify Σ d_ab w_a ⊗ w_b = Δ(v)
            let mut re = Sparse2::new();
            for ((a, b), c) in &d {
                for j in 0..n {
                    if basis[*a][j].is_zero() {
                        continue;
                    }
                    for k in 0..n {
                        if !basis[*b][k].is_zero() {
                            add_to(&mut re, (j, k), &(c * &basis[*a][j]) * &basis[*b][k]);
                        }
                    }
                }
            }
            if re != full {
                return Err(Error::NotSubcoalgebra);
            }
            rows.push(d);
        }
        let names = (0..m).map(|a| format!("w{}", a)).collect();
        let counit = basis.iter().map(|v| self.counit_of(v)).collect();
        Ok(FinCoalgebra::from_rows(names, rows, counit))
    }

    /// Same space with the two tensor factors of Δ swapped.
    pub fn coopposite(&self) -> FinCoalgebra {
        let rows = self
            .comul
            .iter()
            .map(|r| r.iter().map(|(j, k, c)| ((*k, *j), c.clone())).collect())
            .collect();
        FinCoalgebra::from_rows(self.names.clone(), rows, self.counit.clone())
    }

    pub fn tensor(&self, other: &FinCoalgebra) -> FinCoalgebra {
        let (na, nb) = (self.dim(), other.dim());
        let mut names = Vec::with_capacity(na * nb);
        let mut rows = Vec::with_capacity(na * nb);
        let mut counit = Vec::with_capacity(na * nb);
        for i in 0..na {
            for k in 0..nb {
                names.push(format!("{}⊗{}", self.names[i], other.names[k]));
                counit.push(&self.counit[i] * &other.counit[k]);
                let mut m = Sparse2::new();
                for (a1, a2, c) in &self.comul[i] {
                    for (b1, b2, d) in &other.comul[k] {
                        add_to(&mut m, (a1 * nb + b1, a2 * nb + b2), c * d);
                    }
                }
                rows.push(m);
            }
        }
        FinCoalgebra::from_rows(names, rows, counit)
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim());
        self.names = names;
        self
    }

    fn max_scalar_order(&self) -> u32 {
        let mut o = 1;
        for (_, _, _, c) in self.quadruples() {
            o = lcm_u32(o, scalar_order(c));
        }
        for c in &self.counit {
            o = lcm_u32(o, scalar_order(c));
        }
        o
    }
}

/// Multiplication and unit of a bialgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData {
    mul: Vec<Vec<(usize, Cyclo)>>,
    unit: Vector,
}

impl AlgebraData {
    /// From `(i, j, k, c)` with `b_i b_j = Σ c b_k`.
    pub fn new(dim: usize, mul: impl IntoIterator<Item = (usize, usize, usize, Cyclo)>, unit: Vector) -> Result<Self> {
        if unit.len() != dim {
            return Err(Error::ShapeMismatch(format!("unit has length {} for dim {}", unit.len(), dim)));
        }
        let mut maps: Vec<BTreeMap<usize, Cyclo>> = vec![BTreeMap::new(); dim * dim];
        for (i, j, k, c) in mul {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::InvalidStructure(format!("mul index ({}, {}, {}) out of range", i, j, k)));
            }
            if c.is_zero() {
                continue;
            }
            let e = maps[i * dim + j].entry(k).or_insert_with(Cyclo::zero);
            *e += &c;
        }
        let mul = maps
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, c)| !c.is_zero()).collect())
            .collect();
        Ok(AlgebraData { mul, unit })
    }

    fn from_dense(dim: usize, products: Vec<Vector>, unit: Vector) -> Self {
        let mul = products
            .into_iter()
            .map(|v| v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect())
            .collect();
        let _ = dim;
        AlgebraData { mul, unit }
    }

    pub fn unit(&self) -> &[Cyclo] {
        &self.unit
    }

    pub fn product_basis(&self, dim: usize, i: usize, j: usize) -> &[(usize, Cyclo)] {
        &self.mul[i * dim + j]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinHopf {
    field_order: u32,
    coalgebra: FinCoalgebra,
    algebra: Option<AlgebraData>,
    antipode: Option<ExactMatrix>,
}

impl FinHopf {
    pub fn from_parts(
        field_order: u32,
        coalgebra: FinCoalgebra,
        algebra: Option<AlgebraData>,
        antipode: Option<ExactMatrix>,
    ) -> Result<Self> {
        let n = coalgebra.dim();
        if let Some(a) = &algebra {
            if a.unit.len() != n || a.mul.len() != n * n {
                return Err(Error::ShapeMismatch("algebra data does not match dimension".to_string()));
            }
        }
        if let Some(s) = &antipode {
            if s.rows() != n || s.cols() != n {
                return Err(Error::ShapeMismatch(format!("antipode is {}x{} for dim {}", s.rows(), s.cols(), n)));
            }
        }
        let h = FinHopf { field_order: field_order.max(1), coalgebra, algebra, antipode };
        let needed = h.max_scalar_order();
        if needed > 1 && h.field_order % needed != 0 {
            return Err(Error::IncompatibleOrder { left: needed, right: h.field_order });
        }
        Ok(h)
    }

    /// A pure coalgebra (no product, no antipode).
    pub fn coalgebra_only(field_order: u32, coalgebra: FinCoalgebra) -> Result<Self> {
        Self::from_parts(field_order, coalgebra, None, None)
    }

    fn max_scalar_order(&self) -> u32 {
        let mut o = self.coalgebra.max_scalar_order();
        if let Some(a) = &self.algebra {
            for row in &a.mul {
                for (_, c) in row {
                    o = lcm_u32(o, scalar_order(c));
                }
            }
            for c in &a.unit {
                o = lcm_u32(o, scalar_order(c));
            }
        }
        if let Some(s) = &self.antipode {
            for c in s.entries() {
                o = lcm_u32(o, scalar_order(c));
            }
        }
        o
    }

    /// Same structure, declared over Q(zeta_n).
    pub fn with_field_order(&self, n: u32) -> Result<FinHopf> {
        Self::from_parts(n, self.coalgebra.clone(), self.algebra.clone(), self.antipode.clone())
    }

    pub fn field_order(&self) -> u32 {
        self.field_order
    }

    pub fn dim(&self) -> usize {
        self.coalgebra.dim()
    }

    pub fn coalgebra(&self) -> &FinCoalgebra {
        &self.coalgebra
    }

    pub fn algebra(&self) -> Option<&AlgebraData> {
        self.algebra.as_ref()
    }

    pub fn antipode(&self) -> Option<&ExactMatrix> {
        self.antipode.as_ref()
    }

    pub fn names(&self) -> &[String] {
        self.coalgebra.names()
    }

    pub fn is_bialgebra(&self) -> bool {
        self.algebra.is_some()
    }

    pub fn require_algebra(&self) -> Result<&AlgebraData> {
        self.algebra.as_ref().ok_or(Error::NotBialgebra)
    }

    /// Antipode matrix, required to be bijective.
    pub fn require_antipode(&self) -> Result<&ExactMatrix> {
        match &self.antipode {
            Some(s) if s.is_invertible() => Ok(s),
            _ => Err(Error::NoAntipode),
        }
    }

    pub fn unit(&self) -> Result<&[Cyclo]> {
        Ok(&self.require_algebra()?.unit)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Result<&[(usize, Cyclo)]> {
        let n = self.dim();
        Ok(&self.require_algebra()?.mul[i * n + j])
    }

    pub fn mul_vec(&self, a: &[Cyclo], b: &[Cyclo]) -> Result<Vector> {
        let alg = self.require_algebra()?;
        let n = self.dim();
        let mut out = zero_vec(n);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in &alg.mul[i * n + j] {
                    out[*k] += &(&xy * c);
                }
            }
        }
        Ok(out)
    }

    /// Product in `H ⊗ H`.
    pub fn mul_tensor(&self, a: &Sparse2, b: &Sparse2) -> Result<Sparse2> {
        let alg = self.require_algebra()?;
        let n = self.dim();
        let mut out = Sparse2::new();
        for ((a1, a2), x) in a {
            for ((b1, b2), y) in b {
                let xy = x * y;
                for (k1, c1) in &alg.mul[a1 * n + b1] {
                    let t = &xy * c1;
                    for (k2, c2) in &alg.mul[a2 * n + b2] {
                        add_to(&mut out, (*k1, *k2), &t * c2);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn apply_antipode(&self, v: &[Cyclo]) -> Result<Vector> {
        let s = self.antipode.as_ref().ok_or(Error::NoAntipode)?;
        Ok(s.apply_left(v))
    }

    pub fn antipode_inverse(&self) -> Result<ExactMatrix> {
        let s = self.antipode.as_ref().ok_or(Error::NoAntipode)?;
        s.inverse().map_err(|_| Error::NoAntipode)
    }

    pub fn comul_vec(&self, v: &[Cyclo]) -> Vector {
        self.coalgebra.comul_vec(v)
    }

    pub fn counit_of(&self, v: &[Cyclo]) -> Cyclo {
        self.coalgebra.counit_of(v)
    }

    pub fn element(&self, coords: Vector) -> HElement<'_> {
        assert_eq!(coords.len(), self.dim());
        HElement { parent: self, coords }
    }

    pub fn basis_element(&self, i: usize) -> HElement<'_> {
        self.element(unit_vec(self.dim(), i))
    }

    /// Index of the basis element with the given name.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names().iter().position(|n| n == name)
    }

    pub fn one(&self) -> Result<HElement<'_>> {
        Ok(self.element(self.unit()?.to_vec()))
    }

    pub fn unit_subspace(&self) -> Result<Subspace> {
        Ok(Subspace::from_vectors(self.dim(), [self.unit()?.to_vec()]))
    }

    pub fn subcoalgebra_closure(&self, seed: &Subspace) -> Subspace {
        self.coalgebra.subcoalgebra_closure(seed)
    }

    pub fn antipode_image(&self, w: &Subspace) -> Result<Subspace> {
        let s = self.antipode.as_ref().ok_or(Error::NoAntipode)?;
        Ok(Subspace::from_vectors(self.dim(), w.basis_vectors().iter().map(|v| s.apply_left(v))))
    }

    pub fn left_hit(&self, f: &[Cyclo], h: &[Cyclo]) -> Vector {
        self.coalgebra.left_hit(f, h)
    }

    pub fn right_hit(&self, h: &[Cyclo], f: &[Cyclo]) -> Vector {
        self.coalgebra.right_hit(h, f)
    }
}

/// Span of all products `a_i b_j`.
pub fn subspace_product(h: &FinHopf, a: &Subspace, b: &Subspace) -> Result<Subspace> {
    let n = h.dim();
    if a.ambient_dim() != n || b.ambient_dim() != n {
        return Err(Error::AmbientMismatch { left: n, right: a.ambient_dim().max(b.ambient_dim()) });
    }
    let mut red = RowReducer::new(n);
    for x in a.basis_vectors() {
        for y in b.basis_vectors() {
            if red.rank() == n {
                break;
            }
            red.insert(h.mul_vec(&x, &y)?);
        }
    }
    Ok(red.into_subspace())
}

/// Element of a [`FinHopf`] with value semantics.
#[derive(Clone, Debug)]
pub struct HElement<'a> {
    parent: &'a FinHopf,
    coords: Vector,
}

impl PartialEq for HElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        core::ptr::eq(self.parent, other.parent) && self.coords == other.coords
    }
}

impl<'a> HElement<'a> {
    pub fn parent(&self) -> &'a FinHopf {
        self.parent
    }

    pub fn coords(&self) -> &[Cyclo] {
        &self.coords
    }

    pub fn into_coords(self) -> Vector {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coords)
    }

    pub fn add(&self, other: &HElement<'a>) -> HElement<'a> {
        HElement { parent: self.parent, coords: crate::linalg::vec_add(&self.coords, &other.coords) }
    }

    pub fn sub(&self, other: &HElement<'a>) -> HElement<'a> {
        HElement { parent: self.parent, coords: crate::linalg::vec_sub(&self.coords, &other.coords) }
    }

    pub fn scale(&self, s: &Cyclo) -> HElement<'a> {
        HElement { parent: self.parent, coords: crate::linalg::vec_scale(&self.coords, s) }
    }

    pub fn mul(&self, other: &HElement<'a>) -> Result<HElement<'a>> {
        Ok(HElement { parent: self.parent, coords: self.parent.mul_vec(&self.coords, &other.coords)? })
    }

    pub fn counit(&self) -> Cyclo {
        self.parent.counit_of(&self.coords)
    }

    pub fn comul(&self) -> Sparse2 {
        self.parent.coalgebra.comul_sparse(&self.coords)
    }

    pub fn antipode(&self) -> Result<HElement<'a>> {
        Ok(HElement { parent: self.parent, coords: self.parent.apply_antipode(&self.coords)? })
    }
}

fn dense_of(n: usize, m: &Sparse2) -> Vector {
    let mut out = zero_vec(n * n);
    for ((j, k), c) in m {
        out[j * n + k] = c.clone();
    }
    out
}

/// Checks every structural axiom the object claims to satisfy.
pub fn check_axioms(h: &FinHopf) -> Report {
    let mut report = Report::new();
    let n = h.dim();
    let co = &h.coalgebra;
    co.check_coalgebra(&mut report);

    let Some(alg) = &h.algebra else {
        for name in [
            "associativity",
            "unit",
            "comultiplication-multiplicative",
            "counit-multiplicative",
            "comultiplication-unital",
            "counit-unital",
            "antipode-left",
            "antipode-right",
            "antipode-bijective",
        ] {
            report.not_applicable(name, "no algebra structure");
        }
        return report;
    };

    let prod = |i: usize, j: usize| -> Vector {
        let mut v = zero_vec(n);
        for (k, c) in &alg.mul[i * n + j] {
            v[*k] = c.clone();
        }
        v
    };

    let mut witness = None;
    'assoc: for i in 0..n {
        for j in 0..n {
            let ij = prod(i, j);
            for k in 0..n {
                let l = h.mul_vec(&ij, &unit_vec(n, k)).unwrap();
                let jk = prod(j, k);
                let r = h.mul_vec(&unit_vec(n, i), &jk).unwrap();
                if l != r {
                    witness = Some((i, j, k));
                    break 'assoc;
                }
            }
        }
    }
    match witness {
        None => report.pass("associativity", ""),
        Some((i, j, k)) => report.fail("associativity", format!("fails on basis triple ({}, {}, {})", i, j, k)),
    }

    let mut unit_witness = None;
    for i in 0..n {
        let e = unit_vec(n, i);
        if h.mul_vec(&alg.unit, &e).unwrap() != e || h.mul_vec(&e, &alg.unit).unwrap() != e {
            unit_witness = Some(i);
            break;
        }
    }
    match unit_witness {
        None => report.pass("unit", ""),
        Some(i) => report.fail("unit", format!("fails on basis element {}", i)),
    }

    let mut comul_witness = None;
    let mut counit_witness = None;
    let deltas: Vec<Sparse2> = (0..n).map(|i| co.comul_sparse(&unit_vec(n, i))).collect();
    for i in 0..n {
        for j in 0..n {
            let ij = prod(i, j);
            if comul_witness.is_none() {
                let lhs = co.comul_sparse(&ij);
                let rhs = h.mul_tensor(&deltas[i], &deltas[j]).unwrap();
                if lhs != rhs {
                    comul_witness = Some((i, j));
                }
            }
            if counit_witness.is_none() && co.counit_of(&ij) != &co.counit[i] * &co.counit[j] {
                counit_witness = Some((i, j));
            }
        }
    }
    match comul_witness {
        None => report.pass("comultiplication-multiplicative", ""),
        Some((i, j)) => report.fail(
            "comultiplication-multiplicative",
            format!("Δ(b{} b{}) ≠ Δ(b{})Δ(b{})", i, j, i, j),
        ),
    }
    match counit_witness {
        None => report.pass("counit-multiplicative", ""),
        Some((i, j)) => report.fail("counit-multiplicative", format!("fails on pair ({}, {})", i, j)),
    }
    let one_one: Sparse2 = {
        let mut m = Sparse2::new();
        for (a, x) in alg.unit.iter().enumerate() {
            for (b, y) in alg.unit.iter().enumerate() {
                add_to(&mut m, (a, b), x * y);
            }
        }
        m
    };
    report.check("comultiplication-unital", co.comul_sparse(&alg.unit) == one_one, "");
    report.check("counit-unital", co.counit_of(&alg.unit).is_one(), "");

    match &h.antipode {
        None => {
            report.not_applicable("antipode-left", "no antipode supplied");
            report.not_applicable("antipode-right", "no antipode supplied");
            report.not_applicable("antipode-bijective", "no antipode supplied");
        }
        Some(s) => {
            let mut left_w = None;
            let mut right_w = None;
            for i in 0..n {
                let target = crate::linalg::vec_scale(&alg.unit, &co.counit[i]);
                let mut l = zero_vec(n);
                let mut r = zero_vec(n);
                for (j, k, c) in &co.comul[i] {
                    let sj = s.row(*j).to_vec();
                    let sk = s.row(*k).to_vec();
                    axpy(&mut l, c, &h.mul_vec(&sj, &unit_vec(n, *k)).unwrap());
                    axpy(&mut r, c, &h.mul_vec(&unit_vec(n, *j), &sk).unwrap());
                }
                if left_w.is_none() && l != target {
                    left_w = Some(i);
                }
                if right_w.is_none() && r != target {
                    right_w = Some(i);
                }
            }
            match left_w {
                None => report.pass("antipode-left", ""),
                Some(i) => report.fail("antipode-left", format!("Σ S(h1)h2 ≠ ε(h)1 at basis element {}", i)),
            }
            match right_w {
                None => report.pass("antipode-right", ""),
                Some(i) => report.fail("antipode-right", format!("Σ h1S(h2) ≠ ε(h)1 at basis element {}", i)),
            }
            report.check("antipode-bijective", s.is_invertible(), "");
        }
    }
    report
}

/// Solves for the antipode as the convolution inverse of the identity.
pub fn solve_antipode(h: &FinHopf) -> Result<ExactMatrix> {
    let alg = h.require_algebra()?;
    let n = h.dim();
    let co = &h.coalgebra;
    // unknown s[j][a] at index j*n + a; equation (i, c): Σ μ_ijk s[j][a] mul(a,k)[c] = ε_i unit_c
    let mut rows: Vec<Vector> = Vec::with_capacity(n * n);
    let mut rhs: Vector = Vec::with_capacity(n * n);
    for i in 0..n {
        let mut eqs = vec![zero_vec(n * n); n];
        for (j, k, mu) in &co.comul[i] {
            for a in 0..n {
                for (c, m) in &alg.mul[a * n + k] {
                    eqs[*c][j * n + a] += &(mu * m);
                }
            }
        }
        for (c, eq) in eqs.into_iter().enumerate() {
            rows.push(eq);
            rhs.push(&co.counit[i] * &alg.unit[c]);
        }
    }
    let m = ExactMatrix::from_rows(n * n, rows);
    let (x, kernel) = m.solve(&rhs).map_err(|_| Error::NoAntipode)?;
    if !kernel.is_zero() {
        return Err(Error::NoAntipode);
    }
    Ok(ExactMatrix::from_rows(n, x.chunks(n).map(|c| c.to_vec()).collect()))
}

fn tensor_dense_to_sparse(n: usize, v: &[Cyclo]) -> Sparse2 {
    let mut m = Sparse2::new();
    for (idx, c) in v.iter().enumerate() {
        if !c.is_zero() {
            m.insert((idx / n, idx % n), c.clone());
        }
    }
    m
}

// ---------------------------------------------------------------------------
// Constructors

pub fn group_algebra(g: &GroupTable) -> FinHopf {
    let n = g.order();
    let names = g.names().to_vec();
    let comul = (0..n).map(|i| (i, i, i, Cyclo::one()));
    let co = FinCoalgebra::new(names, comul, vec![Cyclo::one(); n]).expect("group coalgebra");
    let mul = (0..n).flat_map(|i| (0..n).map(move |j| (i, j, g.mul(i, j), Cyclo::one())));
    let alg = AlgebraData::new(n, mul, unit_vec(n, g.identity())).expect("group algebra");
    let mut s = ExactMatrix::zeros(n, n);
    for i in 0..n {
        s.set(i, g.inverse(i), Cyclo::one());
    }
    FinHopf::from_parts(1, co, Some(alg), Some(s)).expect("group Hopf algebra")
}

/// Function algebra on a finite group, on the basis of point indicators.
pub fn dual_group_algebra(g: &GroupTable) -> FinHopf {
    let n = g.order();
    let names = g.names().iter().map(|s| format!("δ{}", s)).collect();
    let mut comul = Vec::new();
    for a in 0..n {
        for b in 0..n {
            comul.push((g.mul(a, b), a, b, Cyclo::one()));
        }
    }
    let co = FinCoalgebra::new(names, comul, unit_vec(n, g.identity())).expect("dual group coalgebra");
    let alg = AlgebraData::new(n, (0..n).map(|i| (i, i, i, Cyclo::one())), vec![Cyclo::one(); n]).unwrap();
    let mut s = ExactMatrix::zeros(n, n);
    for i in 0..n {
        s.set(i, g.inverse(i), Cyclo::one());
    }
    FinHopf::from_parts(1, co, Some(alg), Some(s)).expect("dual group Hopf algebra")
}

fn taft_name(i: usize, j: usize) -> String {
    let gp = match i {
        0 => String::new(),
        1 => "g".to_string(),
        _ => format!("g^{}", i),
    };
    let xp = match j {
        0 => String::new(),
        1 => "x".to_string(),
        _ => format!("x^{}", j),
    };
    if gp.is_empty() && xp.is_empty() {
        "1".to_string()
    } else {
        gp + &xp
    }
}

/// Taft algebra of dimension n²: gⁿ = 1, xⁿ = 0, xg = q·gx, Δ(g) = g⊗g,
/// Δ(x) = 1⊗x + x⊗g. Basis gⁱxʲ at index i·n + j.
pub fn taft(n: usize, q: &Cyclo) -> Result<FinHopf> {
    if n < 2 || !q.pow(n as u64).is_one() || (1..n).any(|k| q.pow(k as u64).is_one()) {
        return Err(Error::NotPrimitiveRoot);
    }
    let dim = n * n;
    let idx = |i: usize, j: usize| (i % n) * n + j;
    let names = (0..n).flat_map(|i| (0..n).map(move |j| taft_name(i, j))).collect::<Vec<_>>();
    let mut mul = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    if j + l < n {
                        mul.push((idx(i, j), idx(k, l), idx(i + k, j + l), q.pow((j * k) as u64)));
                    }
                }
            }
        }
    }
    let alg = AlgebraData::new(dim, mul, unit_vec(dim, 0))?;
    let counit: Vector = (0..dim).map(|b| if b % n == 0 { Cyclo::one() } else { Cyclo::zero() }).collect();
    let order = if q.is_rational() { 1 } else { q.order() };
    // Provisional object used only for H ⊗ H multiplication.
    let trivial_co = FinCoalgebra::new(names.clone(), (0..dim).map(|i| (i, i, i, Cyclo::one())), counit.clone())?;
    let scratch = FinHopf::from_parts(order, trivial_co, Some(alg.clone()), None)?;
    let dg: Sparse2 = [((idx(1, 0), idx(1, 0)), Cyclo::one())].into_iter().collect();
    let dx: Sparse2 =
        [((idx(0, 0), idx(0, 1)), Cyclo::one()), ((idx(0, 1), idx(1, 0)), Cyclo::one())].into_iter().collect();
    let one: Sparse2 = [((0, 0), Cyclo::one())].into_iter().collect();
    let mut gpow = vec![one.clone()];
    for i in 1..n {
        gpow.push(scratch.mul_tensor(&gpow[i - 1], &dg)?);
    }
    let mut xpow = vec![one];
    for j in 1..n {
        xpow.push(scratch.mul_tensor(&xpow[j - 1], &dx)?);
    }
    let mut comul = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let d = scratch.mul_tensor(&gpow[i], &xpow[j])?;
            for ((a, b), c) in d {
                comul.push((idx(i, j), a, b, c));
            }
        }
    }
    let co = FinCoalgebra::new(names, comul, counit)?;
    // S(gⁱxʲ) = S(x)ʲ S(g)ⁱ with S(g) = g⁻¹, S(x) = −x g⁻¹
    let ginv = unit_vec(dim, idx(n - 1, 0));
    let sx = crate::linalg::vec_scale(&scratch.mul_vec(&unit_vec(dim, idx(0, 1)), &ginv)?, &Cyclo::from_int(-1));
    let mut s = ExactMatrix::zeros(dim, dim);
    for i in 0..n {
        for j in 0..n {
            let mut v = unit_vec(dim, 0);
            for _ in 0..j {
                v = scratch.mul_vec(&v, &sx)?;
            }
            for _ in 0..i {
                v = scratch.mul_vec(&v, &ginv)?;
            }
            for (c, x) in v.into_iter().enumerate() {
                s.set(idx(i, j), c, x);
            }
        }
    }
    FinHopf::from_parts(order, co, Some(alg), Some(s))
}

/// The 4-dimensional Sweedler algebra, `taft(2, −1)`.
pub fn sweedler() -> FinHopf {
    taft(2, &Cyclo::from_int(-1)).expect("-1 is a primitive square root of unity")
}

pub fn tensor(a: &FinHopf, b: &FinHopf) -> FinHopf {
    let (na, nb) = (a.dim(), b.dim());
    let n = na * nb;
    let co = a.coalgebra.tensor(&b.coalgebra);
    let algebra = match (&a.algebra, &b.algebra) {
        (Some(x), Some(y)) => {
            let mut mul = Vec::new();
            for i in 0..na {
                for k in 0..nb {
                    for j in 0..na {
                        for l in 0..nb {
                            for (p, c) in &x.mul[i * na + j] {
                                for (q, d) in &y.mul[k * nb + l] {
                                    mul.push((i * nb + k, j * nb + l, p * nb + q, c * d));
                                }
                            }
                        }
                    }
                }
            }
            let mut unit = zero_vec(n);
            for (i, c) in x.unit.iter().enumerate() {
                for (k, d) in y.unit.iter().enumerate() {
                    unit[i * nb + k] = c * d;
                }
            }
            Some(AlgebraData::new(n, mul, unit).expect("tensor algebra"))
        }
        _ => None,
    };
    let antipode = match (&a.antipode, &b.antipode) {
        (Some(s), Some(t)) => {
            let mut m = ExactMatrix::zeros(n, n);
            for i in 0..na {
                for k in 0..nb {
                    for j in 0..na {
                        let sij = s.get(i, j);
                        if sij.is_zero() {
                            continue;
                        }
                        for l in 0..nb {
                            m.set(i * nb + k, j * nb + l, sij * t.get(k, l));
                        }
                    }
                }
            }
            Some(m)
        }
        _ => None,
    };
    FinHopf::from_parts(lcm_u32(a.field_order, b.field_order), co, algebra, antipode).expect("tensor product")
}

/// Opposite multiplication; the antipode becomes S⁻¹ (dropped if S is not bijective).
pub fn opposite(h: &FinHopf) -> FinHopf {
    let n = h.dim();
    let algebra = h.algebra.as_ref().map(|a| {
        let mut mul = vec![Vec::new(); n * n];
        for i in 0..n {
            for j in 0..n {
                mul[i * n + j] = a.mul[j * n + i].clone();
            }
        }
        AlgebraData { mul, unit: a.unit.clone() }
    });
    let antipode = h.antipode.as_ref().and_then(|s| s.inverse().ok());
    FinHopf::from_parts(h.field_order, h.coalgebra.clone(), algebra, antipode).expect("opposite")
}

/// Co-opposite comultiplication; the antipode becomes S⁻¹.
pub fn coopposite(h: &FinHopf) -> FinHopf {
    let antipode = h.antipode.as_ref().and_then(|s| s.inverse().ok());
    FinHopf::from_parts(h.field_order, h.coalgebra.coopposite(), h.algebra.clone(), antipode).expect("coopposite")
}

/// Linear dual on the dual basis: structure constants transposed.
pub fn dual(h: &FinHopf) -> Result<FinHopf> {
    let alg = h.require_algebra()?;
    let n = h.dim();
    let names = h.names().iter().map(|s| format!("{}*", s)).collect();
    let mut comul = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (k, c) in &alg.mul[i * n + j] {
                comul.push((*k, i, j, c.clone()));
            }
        }
    }
    let co = FinCoalgebra::new(names, comul, alg.unit.clone())?;
    let dmul = h.coalgebra.dual_mul();
    let algebra = AlgebraData::from_dense(
        n,
        dmul.into_iter()
            .map(|terms| {
                let mut v = zero_vec(n);
                for (i, c) in terms {
                    v[i] += &c;
                }
                v
            })
            .collect(),
        h.coalgebra.counit.clone(),
    );
    let antipode = h.antipode.as_ref().map(|s| s.transpose());
    FinHopf::from_parts(h.field_order, co, Some(algebra), antipode)
}

/// Dense Δ(v) as a sparse map; convenience for callers holding dense tensors.
pub fn sparse_tensor(n: usize, dense: &[Cyclo]) -> Sparse2 {
    tensor_dense_to_sparse(n, dense)
}

pub fn dense_tensor(n: usize, m: &Sparse2) -> Vector {
    dense_of(n, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn all_pass(h: &FinHopf) {
        let r = check_axioms(h);
        for c in &r.checks {
            assert_ne!(c.status, Status::Fail, "{}: {}", c.name, c.details);
        }
    }

    #[test]
    fn group_algebra_z2_passes() {
        all_pass(&group_algebra(&GroupTable::cyclic(2)));
    }

    #[test]
    fn sweedler_structure() {
        let h = sweedler();
        all_pass(&h);
        assert_eq!(h.dim(), 4);
        assert_eq!(h.names(), &["1", "x", "g", "gx"]);
        // Δ(x) = 1⊗x + x⊗g
        let dx = h.coalgebra().comul_basis(1);
        assert_eq!(dx, &[(0, 1, Cyclo::one()), (1, 2, Cyclo::one())]);
        let s = h.antipode().unwrap();
        let s2 = s.mul(s).unwrap();
        assert!(!s2.is_identity());
        assert!(s2.mul(&s2).unwrap().is_identity());
        // S(x) = gx
        assert_eq!(s.row(1), unit_vec(4, 3).as_slice());
    }

    #[test]
    fn corrupted_comul_fails_with_witness() {
        let h = sweedler();
        let mut quads: Vec<_> = h.coalgebra().quadruples().map(|(i, j, k, c)| (i, j, k, c.clone())).collect();
        // flip the sign of one constant of Δ(x)
        let pos = quads.iter().position(|q| q.0 == 1 && q.1 == 1).unwrap();
        quads[pos].3 = Cyclo::from_int(-1);
        let co = FinCoalgebra::new(h.names().to_vec(), quads, h.coalgebra().counit().to_vec()).unwrap();
        let bad = FinHopf::from_parts(1, co, h.algebra().cloned(), h.antipode().cloned()).unwrap();
        let r = check_axioms(&bad);
        let c = r.get("coassociativity").unwrap();
        assert_eq!(c.status, Status::Fail);
        assert!(c.details.contains("basis element"));
    }

    #[test]
    fn taft3_and_taft4_pass() {
        all_pass(&taft(3, &Cyclo::zeta(3)).unwrap());
        all_pass(&taft(4, &Cyclo::zeta(4)).unwrap());
        assert_eq!(taft(3, &Cyclo::one()), Err(Error::NotPrimitiveRoot));
        assert_eq!(taft(4, &Cyclo::from_int(-1)), Err(Error::NotPrimitiveRoot));
    }

    #[test]
    fn dual_of_z2_is_group_like() {
        let h = group_algebra(&GroupTable::cyclic(2));
        let d = dual(&h).unwrap();
        all_pass(&d);
        // convolution: e* and g* are orthogonal idempotents
        assert_eq!(d.mul_vec(&unit_vec(2, 0), &unit_vec(2, 1)).unwrap(), zero_vec(2));
        let dd = dual(&d).unwrap();
        let quads = |x: &FinHopf| x.coalgebra().quadruples().map(|(i, j, k, c)| (i, j, k, c.clone())).collect::<Vec<_>>();
        assert_eq!(quads(&dd), quads(&h));
        assert_eq!(dd.algebra(), h.algebra());
        assert_eq!(dd.antipode(), h.antipode());
    }

    #[test]
    fn tensor_z2_sweedler() {
        let t = tensor(&group_algebra(&GroupTable::cyclic(2)), &sweedler());
        assert_eq!(t.dim(), 8);
        all_pass(&t);
    }

    #[test]
    fn opposite_involution() {
        let h = taft(3, &Cyclo::zeta(3)).unwrap();
        assert_eq!(opposite(&opposite(&h)), h);
        all_pass(&opposite(&h));
        all_pass(&coopposite(&h));
    }

    #[test]
    fn closure_examples() {
        let h = sweedler();
        let c = h.subcoalgebra_closure(&Subspace::coordinate(4, &[1]));
        assert_eq!(c, Subspace::coordinate(4, &[0, 1, 2]));
        let g = Subspace::coordinate(4, &[2]);
        assert_eq!(h.subcoalgebra_closure(&g), g);
        assert!(h.subcoalgebra_closure(&Subspace::zero(4)).is_zero());
    }

    #[test]
    fn product_examples() {
        let h = sweedler();
        let g = Subspace::coordinate(4, &[2]);
        assert_eq!(subspace_product(&h, &g, &g).unwrap(), Subspace::coordinate(4, &[0]));
        let kg = Subspace::coordinate(4, &[0, 2]);
        let x = Subspace::coordinate(4, &[1]);
        assert_eq!(subspace_product(&h, &kg, &x).unwrap(), Subspace::coordinate(4, &[1, 3]));
    }

    #[test]
    fn solved_antipode_matches() {
        for h in [sweedler(), taft(3, &Cyclo::zeta(3)).unwrap()] {
            assert_eq!(&solve_antipode(&h).unwrap(), h.antipode().unwrap());
        }
    }

    #[test]
    fn restriction_checks_subcoalgebra() {
        let h = sweedler();
        assert!(h.coalgebra().restrict(&Subspace::coordinate(4, &[1])).is_err());
        let c = h.coalgebra().restrict(&Subspace::coordinate(4, &[0, 1, 2])).unwrap();
        assert_eq!(c.dim(), 3);
    }
}
