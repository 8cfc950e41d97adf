//! Coradical machinery: the Jacobson radical of the dual algebra, the coradical
//! and its filtration, wedges, simple subcoalgebras with basic multiplicative
//! matrices, and orthonormal idempotents acting by hit actions.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::coalg::{subspace_product, FinCoalgebra, FinHopf};
use crate::error::{Error, Result};
use crate::linalg::{
    axpy, dot, is_zero_vec, left_kernel, unit_vec, vec_scale, vec_sub, zero_vec, ExactMatrix, RowReducer, Subspace,
    Vector,
};
use crate::matcalc::{HMatrix, MultMatrix};
use crate::report::Report;
use crate::scalar::{cmp_cyclo, lcm_u32, minimal_polynomial_roots, Cyclo, Poly, DEFAULT_DEGREE_BOUND};

/// The convolution algebra C* of a coalgebra, on the dual basis.
#[derive(Clone, Debug)]
pub struct DualAlgebra {
    dim: usize,
    mul: Vec<Vec<(usize, Cyclo)>>,
    unit: Vector,
}

impl DualAlgebra {
    pub fn of(co: &FinCoalgebra) -> Self {
        DualAlgebra { dim: co.dim(), mul: co.dual_mul(), unit: co.counit().to_vec() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Cyclo] {
        &self.unit
    }

    pub fn mul(&self, a: &[Cyclo], b: &[Cyclo]) -> Vector {
        let n = self.dim;
        let mut out = zero_vec(n);
        for (j, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (i, c) in &self.mul[j * n + k] {
                    out[*i] += &(&xy * c);
                }
            }
        }
        out
    }

    /// Minimal polynomial of `a` inside the corner algebra with identity `e`.
    pub fn minimal_polynomial(&self, e: &[Cyclo], a: &[Cyclo]) -> Poly {
        let mut powers: Vec<Vector> = vec![e.to_vec()];
        loop {
            let next = self.mul(powers.last().unwrap(), a);
            let d = powers.len();
            let cols = ExactMatrix::from_rows(d, (0..self.dim).map(|r| powers.iter().map(|p| p[r].clone()).collect()).collect());
            if let Ok((c, _)) = cols.solve(&next) {
                let mut coeffs: Vec<Cyclo> = c.into_iter().map(|x| -x).collect();
                coeffs.push(Cyclo::one());
                return Poly::new(coeffs);
            }
            powers.push(next);
        }
    }

    /// Evaluates a polynomial at `a` in the corner algebra with identity `e`.
    pub fn eval_poly(&self, p: &Poly, e: &[Cyclo], a: &[Cyclo]) -> Vector {
        let mut acc = zero_vec(self.dim);
        for c in p.coeffs().iter().rev() {
            acc = self.mul(&acc, a);
            axpy(&mut acc, c, e);
        }
        acc
    }

    fn center(&self) -> Subspace {
        let n = self.dim;
        let mut rows: Vec<Vector> = vec![zero_vec(n); n * n];
        for i in 0..n {
            let bi = unit_vec(n, i);
            for k in 0..n {
                let bk = unit_vec(n, k);
                let comm = vec_sub(&self.mul(&bi, &bk), &self.mul(&bk, &bi));
                for (c, v) in comm.into_iter().enumerate() {
                    if !v.is_zero() {
                        rows[k * n + c][i] = v;
                    }
                }
            }
        }
        let mut red = RowReducer::new(n);
        for r in rows {
            if !is_zero_vec(&r) {
                red.insert(r);
            }
        }
        red.kernel()
    }
}

/// Trace functional t(f) = tr(L_f) of the regular representation of C*.
pub fn trace_functional(co: &FinCoalgebra) -> Vector {
    let mut t = zero_vec(co.dim());
    for (i, j, k, c) in co.quadruples() {
        if i == k {
            t[j] += c;
        }
    }
    t
}

/// Jacobson radical of the dual algebra as a subspace of H* (dual-basis
/// coordinates): the kernel of the trace form (f, g) ↦ tr(L_{fg}).
pub fn dual_radical(co: &FinCoalgebra) -> Subspace {
    let n = co.dim();
    let t = trace_functional(co);
    let mut gram = ExactMatrix::zeros(n, n);
    for (i, j, k, c) in co.quadruples() {
        if !t[i].is_zero() {
            let v = gram.get(j, k) + &(c * &t[i]);
            gram.set(j, k, v);
        }
    }
    gram.kernel()
}

/// Coradical: annihilator of the dual radical.
pub fn coradical_of(co: &FinCoalgebra) -> Subspace {
    dual_radical(co).annihilator()
}

fn check_subcoalgebra(co: &FinCoalgebra, a: &Subspace) -> Result<()> {
    if a.ambient_dim() != co.dim() {
        return Err(Error::AmbientMismatch { left: co.dim(), right: a.ambient_dim() });
    }
    if !co.is_subcoalgebra(a) {
        return Err(Error::NotSubcoalgebra);
    }
    Ok(())
}

/// A ∧ B as the kernel of (π_A ⊗ π_B)∘Δ.
pub fn wedge_kernel(co: &FinCoalgebra, a: &Subspace, b: &Subspace) -> Subspace {
    let n = co.dim();
    let pa: Vec<Vector> = (0..n).map(|j| a.quotient_coords(&unit_vec(n, j))).collect();
    let pb: Vec<Vector> = (0..n).map(|k| b.quotient_coords(&unit_vec(n, k))).collect();
    let (qa, qb) = (n - a.dim(), n - b.dim());
    if qa == 0 || qb == 0 {
        return Subspace::full(n);
    }
    let mut images = Vec::with_capacity(n);
    for i in 0..n {
        let mut img = zero_vec(qa * qb);
        for (j, k, c) in co.comul_basis(i) {
            for (x, u) in pa[*j].iter().enumerate() {
                if u.is_zero() {
                    continue;
                }
                let cu = c * u;
                axpy(&mut img[x * qb..(x + 1) * qb], &cu, &pb[*k]);
            }
        }
        images.push(img);
    }
    left_kernel(qa * qb, &images)
}

/// A ∧ B as the annihilator of the product A^⊥ B^⊥ in the dual algebra.
pub fn wedge_dual(co: &FinCoalgebra, a: &Subspace, b: &Subspace) -> Subspace {
    let n = co.dim();
    let alg = DualAlgebra::of(co);
    let (pa, pb) = (a.annihilator(), b.annihilator());
    let mut red = RowReducer::new(n);
    for f in pa.basis_vectors() {
        for g in pb.basis_vectors() {
            if red.rank() == n {
                break;
            }
            red.insert(alg.mul(&f, &g));
        }
    }
    red.into_subspace().annihilator()
}

/// Wedge of two subcoalgebras; both formulations are computed and must agree.
pub fn wedge(co: &FinCoalgebra, a: &Subspace, b: &Subspace) -> Result<Subspace> {
    check_subcoalgebra(co, a)?;
    check_subcoalgebra(co, b)?;
    let k = wedge_kernel(co, a, b);
    let d = wedge_dual(co, a, b);
    if k != d {
        return Err(Error::AxiomFailure("wedge kernel and dual formulations disagree".into()));
    }
    Ok(k)
}

/// H₀ ⊆ H₁ ⊆ … ending with the first term equal to H.
pub fn coradical_filtration(co: &FinCoalgebra, h0: &Subspace) -> Result<Vec<Subspace>> {
    let mut out = vec![h0.clone()];
    while !out.last().unwrap().is_full() {
        let next = wedge(co, h0, out.last().unwrap())?;
        if next == *out.last().unwrap() {
            return Err(Error::AxiomFailure("coradical filtration stopped growing".into()));
        }
        out.push(next);
    }
    Ok(out)
}

/// A simple subcoalgebra with its basic multiplicative matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleSubcoalgebra {
    pub space: Subspace,
    pub matrix: MultMatrix,
    /// Central idempotent of H₀* for this simple, extended to H by zero on the
    /// coordinate complement of H₀.
    pub central_idempotent: Vector,
}

impl SimpleSubcoalgebra {
    pub fn size(&self) -> usize {
        self.matrix.size()
    }
}

fn suggest_order(p: &Poly, order: u32) -> Option<u32> {
    for k in 2..=12u32 {
        let m = lcm_u32(order, k);
        if m == order {
            continue;
        }
        if let Ok(split) = minimal_polynomial_roots(p, m, DEFAULT_DEGREE_BOUND) {
            if split.splits() {
                return Some(m);
            }
        }
    }
    None
}

/// Central primitive idempotents of the semisimple algebra `alg`, found by
/// splitting the center with eigenvalues of its basis elements.
fn central_idempotents(alg: &DualAlgebra, order: u32) -> Result<Vec<Vector>> {
    let center = alg.center();
    let zs = center.basis_vectors();
    let mut idems: Vec<Vector> = vec![alg.unit().to_vec()];
    for z in &zs {
        let mut next = Vec::new();
        for e in idems {
            let ez = alg.mul(&e, z);
            let p = alg.minimal_polynomial(&e, &ez);
            let split = minimal_polynomial_roots(&p, order, DEFAULT_DEGREE_BOUND)?;
            if !split.splits() {
                let block = Subspace::from_vectors(alg.dim(), zs.iter().map(|z| alg.mul(&e, z)));
                return Err(Error::NonSplitField {
                    component: format!("coradical block with center of dimension {}", block.dim()),
                    suggested_order: suggest_order(&split.remainder, order),
                });
            }
            let roots = split.distinct_roots();
            if roots.len() == 1 {
                next.push(e);
                continue;
            }
            for (i, li) in roots.iter().enumerate() {
                let mut f = e.clone();
                for (j, lj) in roots.iter().enumerate() {
                    if i == j {
                        continue;
                    }
                    let num = vec_sub(&ez, &vec_scale(&e, lj));
                    let inv = (li - lj).inv()?;
                    f = vec_scale(&alg.mul(&f, &num), &inv);
                }
                next.push(f);
            }
        }
        idems = next;
    }
    for e in &idems {
        let block = Subspace::from_vectors(alg.dim(), zs.iter().map(|z| alg.mul(e, z)));
        if block.dim() != 1 {
            return Err(Error::NonSplitField {
                component: format!("coradical block with center of dimension {}", block.dim()),
                suggested_order: None,
            });
        }
    }
    Ok(idems)
}

fn lift_coords(space: &Subspace, v: &[Cyclo]) -> Vector {
    space.basis().apply_left(v)
}

fn int_sqrt(n: usize) -> Option<usize> {
    let r = (0..=n).find(|r| r * r >= n)?;
    if r * r == n {
        Some(r)
    } else {
        None
    }
}

/// Candidate elements of C* used to find a simple left C*-submodule of C.
fn candidates(alg: &DualAlgebra) -> Vec<Vector> {
    let n = alg.dim();
    let mut out: Vec<Vector> = (0..n).map(|i| unit_vec(n, i)).collect();
    for i in 0..n {
        for j in 0..n {
            out.push(alg.mul(&unit_vec(n, i), &unit_vec(n, j)));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut v = unit_vec(n, i);
            v[j] = Cyclo::one();
            out.push(v.clone());
            v[j] = Cyclo::from_int(-1);
            out.push(v);
        }
    }
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    for _ in 0..200 {
        let v = (0..n)
            .map(|_| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                Cyclo::from_int(((state >> 33) % 7) as i64 - 3)
            })
            .collect();
        out.push(v);
    }
    out
}

/// Basic multiplicative matrix of a split simple coalgebra, read off from a
/// simple subcomodule of its regular right comodule.
pub fn basic_matrix(co: &FinCoalgebra, space: &Subspace, order: u32) -> Result<MultMatrix> {
    let n = co.dim();
    let sub = co.restrict(space)?;
    let m = sub.dim();
    let r = int_sqrt(m).ok_or_else(|| Error::NonSplitField {
        component: format!("simple subcoalgebra of dimension {}", m),
        suggested_order: None,
    })?;
    let entries_local: Vec<Vector> = if r == 1 {
        let eps = sub.counit()[0].clone();
        vec![vec![eps.inv()?]]
    } else {
        let alg = DualAlgebra::of(&sub);
        let mut found: Option<Subspace> = None;
        'search: for a in candidates(&alg) {
            if is_zero_vec(&a) {
                continue;
            }
            let p = alg.minimal_polynomial(alg.unit(), &a);
            let split = match minimal_polynomial_roots(&p, order, DEFAULT_DEGREE_BOUND) {
                Ok(s) => s,
                Err(Error::RootSearchLimit { .. }) => continue,
                Err(e) => return Err(e),
            };
            // matrix of c ↦ a ⇀ c on the columns
            let act: Vec<Vector> = (0..m).map(|c| sub.left_hit(&a, &unit_vec(m, c))).collect();
            for lambda in split.distinct_roots() {
                let rows: Vec<Vector> = (0..m)
                    .map(|i| {
                        (0..m)
                            .map(|c| {
                                let v = act[c][i].clone();
                                if i == c {
                                    &v - &lambda
                                } else {
                                    v
                                }
                            })
                            .collect()
                    })
                    .collect();
                let eig = ExactMatrix::from_rows(m, rows).kernel();
                if eig.dim() != r {
                    continue;
                }
                let v = eig.basis_vector(0).to_vec();
                let w = Subspace::from_vectors(m, (0..m).map(|i| sub.left_hit(&unit_vec(m, i), &v)));
                if w.dim() == r {
                    found = Some(w);
                    break 'search;
                }
            }
        }
        let w = found.ok_or_else(|| Error::NonSplitField {
            component: format!("simple subcoalgebra of dimension {}", m),
            suggested_order: None,
        })?;
        // ρ(w_j) = Σ_i w_i ⊗ g_ij with g_ij = (φ_i ⊗ id)Δ(w_j), φ_i = pivot coordinate
        let piv = w.pivots().to_vec();
        let mut entries = vec![zero_vec(m); r * r];
        for j in 0..r {
            let d = sub.comul_sparse(w.basis_vector(j));
            for ((a, b), c) in d {
                if let Some(i) = piv.iter().position(|&p| p == a) {
                    entries[i * r + j][b] += &c;
                }
            }
        }
        entries
    };
    let entries = entries_local.iter().map(|v| lift_coords(space, v)).collect();
    let mat = HMatrix::new(r, r, n, entries)?;
    let mm = MultMatrix::new(co, mat)?;
    if !mm.is_basic() || mm.mat().entry_span() != *space {
        return Err(Error::AxiomFailure("extracted matrix is not basic for its simple".into()));
    }
    Ok(mm)
}

fn cmp_subspaces(a: &Subspace, b: &Subspace) -> Ordering {
    a.dim()
        .cmp(&b.dim())
        .then_with(|| a.pivots().cmp(b.pivots()))
        .then_with(|| {
            for (x, y) in a.basis().entries().iter().zip(b.basis().entries()) {
                match cmp_cyclo(x, y) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
}

/// Simple subcoalgebras of H₀ (without matrices) with their central
/// idempotents, in canonical order.
pub fn simple_spaces(co: &FinCoalgebra, h0: &Subspace, order: u32) -> Result<Vec<(Subspace, Vector)>> {
    let n = co.dim();
    let c0 = co.restrict(h0)?;
    let alg = DualAlgebra::of(&c0);
    let idems = central_idempotents(&alg, order)?;
    let mut out = Vec::with_capacity(idems.len());
    for f in idems {
        let local = Subspace::from_vectors(c0.dim(), (0..c0.dim()).map(|a| c0.left_hit(&f, &unit_vec(c0.dim(), a))));
        let space = Subspace::from_vectors(n, local.basis_vectors().iter().map(|v| lift_coords(h0, v)));
        let mut ext = zero_vec(n);
        for (a, &p) in h0.pivots().iter().enumerate() {
            ext[p] = f[a].clone();
        }
        out.push((space, ext));
    }
    out.sort_by(|a, b| cmp_subspaces(&a.0, &b.0));
    Ok(out)
}

/// Every simple subcoalgebra with a basic multiplicative matrix.
pub fn simples_with_matrices(co: &FinCoalgebra, h0: &Subspace, order: u32) -> Result<Vec<SimpleSubcoalgebra>> {
    simple_spaces(co, h0, order)?
        .into_iter()
        .map(|(space, central)| {
            let matrix = basic_matrix(co, &space, order)?;
            Ok(SimpleSubcoalgebra { space, matrix, central_idempotent: central })
        })
        .collect()
}

/// Lifts the central idempotents of H₀* to orthonormal idempotents of H*.
pub fn orthonormal_idempotents(co: &FinCoalgebra, simples: &[SimpleSubcoalgebra]) -> Result<Vec<Vector>> {
    let n = co.dim();
    let alg = DualAlgebra::of(co);
    let eps = co.counit().to_vec();
    let s = simples.len();
    let mut lifted: Vec<Vector> = Vec::with_capacity(s);
    let mut total = zero_vec(n);
    for simple in simples.iter().take(s.saturating_sub(1)) {
        let rest = vec_sub(&eps, &total);
        let mut e = alg.mul(&alg.mul(&rest, &simple.central_idempotent), &rest);
        let mut steps = 0;
        loop {
            let e2 = alg.mul(&e, &e);
            if e2 == e {
                break;
            }
            steps += 1;
            if steps > 64 {
                return Err(Error::LiftDivergence);
            }
            let e3 = alg.mul(&e2, &e);
            e = vec_sub(&vec_scale(&e2, &Cyclo::from_int(3)), &vec_scale(&e3, &Cyclo::from_int(2)));
        }
        total = crate::linalg::vec_add(&total, &e);
        lifted.push(e);
    }
    if s > 0 {
        lifted.push(vec_sub(&eps, &total));
    }
    let report = check_idempotents(co, simples, &lifted);
    if !report.all_passed() {
        return Err(Error::AxiomFailure(format!("orthonormal idempotents: {}", report.summary())));
    }
    Ok(lifted)
}

/// The three defining equations of coradical orthonormal idempotents.
pub fn check_idempotents(co: &FinCoalgebra, simples: &[SimpleSubcoalgebra], idems: &[Vector]) -> Report {
    let mut report = Report::new();
    let alg = DualAlgebra::of(co);
    let n = co.dim();
    let mut restrict_ok = idems.len() == simples.len();
    'outer: for (c, e) in idems.iter().enumerate() {
        for (d, simple) in simples.iter().enumerate() {
            for v in simple.space.basis_vectors() {
                let expected = if c == d { co.counit_of(&v) } else { Cyclo::zero() };
                if dot(e, &v) != expected {
                    restrict_ok = false;
                    break 'outer;
                }
            }
        }
    }
    report.check("idempotent-restriction", restrict_ok, "e_C restricted to D equals δ(C,D) ε");
    let mut ortho_ok = true;
    'o2: for (c, e) in idems.iter().enumerate() {
        for (d, f) in idems.iter().enumerate() {
            let prod = alg.mul(e, f);
            let expected = if c == d { e.clone() } else { zero_vec(n) };
            if prod != expected {
                ortho_ok = false;
                break 'o2;
            }
        }
    }
    report.check("idempotent-orthogonality", ortho_ok, "e_C e_D = δ(C,D) e_C");
    let mut sum = zero_vec(n);
    for e in idems {
        sum = crate::linalg::vec_add(&sum, e);
    }
    report.check("idempotent-sum", sum == co.counit(), "Σ e_C = ε");
    report
}

/// Which functional a hit action uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HitSide {
    Counit,
    Simple(usize),
}

/// `e_D ⇀ h ↼ e_C` for `left = C`, `right = D`.
pub fn hit(co: &FinCoalgebra, idems: &[Vector], h: &[Cyclo], left: HitSide, right: HitSide) -> Vector {
    let pick = |s: HitSide| -> Vector {
        match s {
            HitSide::Counit => co.counit().to_vec(),
            HitSide::Simple(i) => idems[i].clone(),
        }
    };
    let y = co.right_hit(h, &pick(left));
    co.left_hit(&pick(right), &y)
}

/// Everything the link analysis needs about the coradical.
#[derive(Clone, Debug)]
pub struct CoradicalData {
    pub h0: Subspace,
    pub dual_radical: Subspace,
    pub filtration: Vec<Subspace>,
    pub simples: Vec<SimpleSubcoalgebra>,
    pub idempotents: Vec<Vector>,
    pub is_cosemisimple: bool,
    pub is_pointed: bool,
    pub has_dual_chevalley: bool,
}

/// Coradical summary that never needs the field to split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoradicalInfo {
    pub h0: Subspace,
    pub dual_radical: Subspace,
    pub is_cosemisimple: bool,
    pub is_pointed: bool,
    pub has_dual_chevalley: bool,
}

pub fn has_dual_chevalley(h: &FinHopf, h0: &Subspace) -> bool {
    if !h.is_bialgebra() || h.antipode().is_none() {
        return false;
    }
    let closed = subspace_product(h, h0, h0).map(|p| h0.contains(&p).unwrap_or(false)).unwrap_or(false);
    let s_stable = h.antipode_image(h0).map(|s| h0.contains(&s).unwrap_or(false)).unwrap_or(false);
    closed && s_stable
}

pub fn coradical(h: &FinHopf) -> CoradicalInfo {
    let co = h.coalgebra();
    let dual_radical = dual_radical(co);
    let h0 = dual_radical.annihilator();
    let is_pointed = match simple_spaces(co, &h0, h.field_order()) {
        Ok(s) => s.iter().all(|(sp, _)| sp.dim() == 1),
        Err(_) => false,
    };
    CoradicalInfo {
        is_cosemisimple: h0.is_full(),
        is_pointed,
        has_dual_chevalley: has_dual_chevalley(h, &h0),
        h0,
        dual_radical,
    }
}

/// Full coradical analysis; errors with `NonSplitField` when a simple does not split.
pub fn analyze(h: &FinHopf) -> Result<CoradicalData> {
    let co = h.coalgebra();
    let dual_radical = dual_radical(co);
    let h0 = dual_radical.annihilator();
    let filtration = coradical_filtration(co, &h0)?;
    let mut simples = simples_with_matrices(co, &h0, h.field_order())?;
    if let Ok(unit) = h.unit() {
        if let Some(pos) = simples.iter().position(|s| s.space.contains_vector(unit)) {
            let s = simples.remove(pos);
            simples.insert(0, s);
        }
    }
    let idempotents = orthonormal_idempotents(co, &simples)?;
    Ok(CoradicalData {
        is_cosemisimple: h0.is_full(),
        is_pointed: simples.iter().all(|s| s.space.dim() == 1),
        has_dual_chevalley: has_dual_chevalley(h, &h0),
        h0,
        dual_radical,
        filtration,
        simples,
        idempotents,
    })
}

/// Coradical of a standalone coalgebra together with its simple pieces.
pub fn coalgebra_simples(co: &FinCoalgebra, order: u32) -> Result<(Subspace, Vec<SimpleSubcoalgebra>)> {
    let h0 = coradical_of(co);
    let simples = simples_with_matrices(co, &h0, order)?;
    Ok((h0, simples))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalg::{dual_group_algebra, group_algebra, sweedler, taft};
    use crate::groups::GroupTable;

    #[test]
    fn radical_dimensions() {
        assert!(dual_radical(group_algebra(&GroupTable::cyclic(2)).coalgebra()).is_zero());
        assert_eq!(dual_radical(sweedler().coalgebra()).dim(), 2);
        assert_eq!(dual_radical(taft(3, &Cyclo::zeta(3)).unwrap().coalgebra()).dim(), 6);
    }

    #[test]
    fn sweedler_coradical() {
        let h = sweedler();
        let info = coradical(&h);
        assert_eq!(info.h0, Subspace::coordinate(4, &[0, 2]));
        assert!(info.is_pointed && info.has_dual_chevalley && !info.is_cosemisimple);
    }

    #[test]
    fn s3_dual_is_cosemisimple() {
        let h = dual_group_algebra(&GroupTable::symmetric(3));
        let info = coradical(&h);
        assert!(info.is_cosemisimple && !info.is_pointed);
        let data = analyze(&h).unwrap();
        let dims: Vec<usize> = data.simples.iter().map(|s| s.space.dim()).collect();
        assert_eq!(dims, vec![1, 1, 4]);
        let sizes: Vec<usize> = data.simples.iter().map(|s| s.size()).collect();
        assert_eq!(sizes, vec![1, 1, 2]);
    }

    #[test]
    fn taft3_wedge_and_filtration() {
        let h = taft(3, &Cyclo::zeta(3)).unwrap();
        let co = h.coalgebra();
        let h0 = coradical_of(co);
        assert_eq!(h0, Subspace::coordinate(9, &[0, 3, 6]));
        let f = coradical_filtration(co, &h0).unwrap();
        assert_eq!(f.iter().map(|s| s.dim()).collect::<Vec<_>>(), vec![3, 6, 9]);
    }

    #[test]
    fn sweedler_wedge() {
        let h = sweedler();
        let one = Subspace::coordinate(4, &[0]);
        let g = Subspace::coordinate(4, &[2]);
        assert_eq!(wedge(h.coalgebra(), &one, &g).unwrap(), Subspace::coordinate(4, &[0, 1, 2]));
        let z2 = group_algebra(&GroupTable::cyclic(2));
        let one2 = Subspace::coordinate(2, &[0]);
        assert_eq!(wedge(z2.coalgebra(), &one2, &one2).unwrap(), one2);
        assert_eq!(wedge(h.coalgebra(), &Subspace::coordinate(4, &[1]), &g), Err(Error::NotSubcoalgebra));
    }

    #[test]
    fn z3_needs_zeta3() {
        let h = dual_group_algebra(&GroupTable::cyclic(3));
        match analyze(&h) {
            Err(Error::NonSplitField { suggested_order, .. }) => assert_eq!(suggested_order, Some(3)),
            other => panic!("expected NonSplitField, got {:?}", other.map(|d| d.simples.len())),
        }
        let data = analyze(&h.with_field_order(3).unwrap()).unwrap();
        assert_eq!(data.simples.len(), 3);
        assert!(data.simples.iter().all(|s| s.space.dim() == 1));
    }

    #[test]
    fn z2_idempotents() {
        let h = group_algebra(&GroupTable::cyclic(2));
        let data = analyze(&h).unwrap();
        // e_1 = (ε + χ)/2 and e_g = (ε − χ)/2 on the dual basis
        assert_eq!(data.idempotents[0], vec![Cyclo::one(), Cyclo::zero()]);
        assert_eq!(data.idempotents[1], vec![Cyclo::zero(), Cyclo::one()]);
    }

    #[test]
    fn sweedler_hits() {
        let h = sweedler();
        let data = analyze(&h).unwrap();
        let co = h.coalgebra();
        let x = unit_vec(4, 1);
        let y = hit(co, &data.idempotents, &x, HitSide::Simple(0), HitSide::Simple(1));
        // x-coordinate survives, rest lies in H0
        assert!(y[1].is_one() && y[3].is_zero());
        let again = hit(co, &data.idempotents, &y, HitSide::Simple(0), HitSide::Simple(1));
        assert_eq!(again, y);
        let g = unit_vec(4, 2);
        assert!(is_zero_vec(&hit(co, &data.idempotents, &g, HitSide::Simple(0), HitSide::Counit)));
        let one = unit_vec(4, 0);
        assert_eq!(hit(co, &data.idempotents, &one, HitSide::Simple(0), HitSide::Simple(0)), one);
    }
}
