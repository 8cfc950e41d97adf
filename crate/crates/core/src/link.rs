//! The link relation between simple subcoalgebras, the link quiver,
//! link-indecomposable components and the structural checks built on them.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::coalg::{subspace_product, FinCoalgebra, FinHopf};
use crate::error::{Error, Result};
use crate::linalg::{unit_vec, Subspace};
use crate::matcalc::{primitive_space, BlockDecomposition};
use crate::radical::{coradical_of, hit, wedge, CoradicalData, HitSide};
use crate::report::Report;

/// Vertices are simple subcoalgebras (indices into `CoradicalData::simples`),
/// edges are direct links.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkQuiver {
    pub vertex_dims: Vec<usize>,
    /// Unordered pairs `(i, j)` with `i < j`.
    pub edges: BTreeSet<(usize, usize)>,
    /// Self-links `C ⊊ C ∧ C`.
    pub loops: BTreeSet<usize>,
    /// Connected classes, each sorted, ordered by smallest member.
    pub classes: Vec<Vec<usize>>,
}

impl LinkQuiver {
    pub fn vertex_count(&self) -> usize {
        self.vertex_dims.len()
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.classes.iter().position(|c| c.contains(&v)).expect("every vertex lies in a class")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub simples: Vec<usize>,
    pub space: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub components: Vec<Component>,
    pub is_direct_sum: bool,
}

impl Decomposition {
    pub fn component_of(&self, simple: usize) -> usize {
        self.components.iter().position(|c| c.simples.contains(&simple)).expect("simple lies in a component")
    }

    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.space.dim()).collect()
    }
}

/// `C ∧ D ⊋ C + D`, the growth measured by one-sided wedges.
pub fn wedge_grows(co: &FinCoalgebra, data: &CoradicalData, i: usize, j: usize) -> Result<bool> {
    let (c, d) = (&data.simples[i].space, &data.simples[j].space);
    let w = wedge(co, c, d)?;
    Ok(w.dim() > c.sum(d)?.dim())
}

/// `C + D ⊊ C ∧ D + D ∧ C`, cross-checked against nontrivial primitive
/// matrices in both orders.
pub fn directly_linked(co: &FinCoalgebra, data: &CoradicalData, i: usize, j: usize) -> Result<bool> {
    let (c, d) = (&data.simples[i].space, &data.simples[j].space);
    let cd = wedge(co, c, d)?;
    let dc = wedge(co, d, c)?;
    let linked = cd.sum(&dc)?.dim() > c.sum(d)?.dim();
    let (mc, md) = (&data.simples[i].matrix, &data.simples[j].matrix);
    let forward = primitive_space(co, mc, md, &data.h0)?.nontrivial_dim > 0;
    let backward = primitive_space(co, md, mc, &data.h0)?.nontrivial_dim > 0;
    if linked != (forward || backward) {
        return Err(Error::AxiomFailure(format!(
            "wedge growth and primitive matrices disagree on simples {} and {}",
            i, j
        )));
    }
    Ok(linked)
}

/// For all ordered pairs, wedge growth matches existence of a nontrivial
/// primitive matrix.
pub fn wedge_primitive_equivalence(co: &FinCoalgebra, data: &CoradicalData) -> Result<Report> {
    let s = data.simples.len();
    let mut mismatches = Vec::new();
    for i in 0..s {
        for j in 0..s {
            let grows = wedge_grows(co, data, i, j)?;
            let ps = primitive_space(co, &data.simples[i].matrix, &data.simples[j].matrix, &data.h0)?;
            if grows != (ps.nontrivial_dim > 0) {
                mismatches.push((i, j));
            }
        }
    }
    let mut report = Report::new();
    let details = if mismatches.is_empty() {
        format!("{} ordered pairs agree", s * s)
    } else {
        format!("disagreement on pairs {:?}", mismatches)
    };
    report.check("wedge-primitive-equivalence", mismatches.is_empty(), details);
    Ok(report)
}

fn union_find_classes(n: usize, edges: &BTreeSet<(usize, usize)>) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut root_of_class: Vec<usize> = Vec::new();
    for v in 0..n {
        let r = find(&mut parent, v);
        match root_of_class.iter().position(|&x| x == r) {
            Some(k) => classes[k].push(v),
            None => {
                root_of_class.push(r);
                classes.push(vec![v]);
            }
        }
    }
    classes
}

pub fn link_quiver(co: &FinCoalgebra, data: &CoradicalData) -> Result<LinkQuiver> {
    let s = data.simples.len();
    let mut edges = BTreeSet::new();
    let mut loops = BTreeSet::new();
    for i in 0..s {
        if wedge_grows(co, data, i, i)? {
            loops.insert(i);
        }
        for j in i + 1..s {
            if directly_linked(co, data, i, j)? {
                edges.insert((i, j));
            }
        }
    }
    let classes = union_find_classes(s, &edges);
    Ok(LinkQuiver { vertex_dims: data.simples.iter().map(|x| x.space.dim()).collect(), edges, loops, classes })
}

/// Wedge saturation `X ↦ X ∧ X` from the sum of a class's simples.
pub fn saturate(co: &FinCoalgebra, start: &Subspace) -> Result<Subspace> {
    let mut x = start.clone();
    for _ in 0..=co.dim() {
        let next = wedge(co, &x, &x)?;
        if next == x {
            return Ok(x);
        }
        x = next;
    }
    Err(Error::AxiomFailure("wedge saturation did not stabilize".into()))
}

pub fn components(co: &FinCoalgebra, data: &CoradicalData, quiver: &LinkQuiver) -> Result<Decomposition> {
    let n = co.dim();
    let mut comps = Vec::with_capacity(quiver.classes.len());
    for class in &quiver.classes {
        let start = Subspace::sum_all(n, class.iter().map(|&i| &data.simples[i].space))?;
        comps.push(Component { simples: class.clone(), space: saturate(co, &start)? });
    }
    for a in 0..comps.len() {
        for b in a + 1..comps.len() {
            if !comps[a].space.intersect(&comps[b].space)?.is_zero() {
                return Err(Error::SaturationOverlap { first: a, second: b });
            }
        }
    }
    let total: usize = comps.iter().map(|c| c.space.dim()).sum();
    Ok(Decomposition { components: comps, is_direct_sum: total == n })
}

/// Quiver and components in one pass.
pub fn link_decomposition(co: &FinCoalgebra, data: &CoradicalData) -> Result<(LinkQuiver, Decomposition)> {
    let q = link_quiver(co, data)?;
    let d = components(co, data, &q)?;
    Ok((q, d))
}

fn simple_containing(data: &CoradicalData, space: &Subspace) -> Option<usize> {
    data.simples.iter().position(|s| s.space == *space)
}

/// `S(H_(C)) = H_(S(C))` for every simple `C`.
pub fn antipode_on_components(h: &FinHopf, data: &CoradicalData, dec: &Decomposition) -> Result<Report> {
    h.require_antipode()?;
    let mut bad: Option<String> = None;
    for (ci, simple) in data.simples.iter().enumerate() {
        let sc = h.antipode_image(&simple.space)?;
        let Some(target) = simple_containing(data, &sc) else {
            bad = Some(format!("S maps simple {} outside the simple list", ci));
            break;
        };
        let comp = &dec.components[dec.component_of(ci)].space;
        let image = h.antipode_image(comp)?;
        if image != dec.components[dec.component_of(target)].space {
            bad = Some(format!("S(H_(C)) differs from H_(S(C)) for simple {}", ci));
            break;
        }
    }
    let mut report = Report::new();
    match bad {
        None => report.pass("antipode-permutes-components", "S(H_(C)) = H_(S(C)) for every simple"),
        Some(d) => report.fail("antipode-permutes-components", d),
    }
    Ok(report)
}

/// Coradical of a subcoalgebra, computed on the subcoalgebra by itself.
pub fn sub_coradical(co: &FinCoalgebra, w: &Subspace) -> Result<Subspace> {
    if w.is_zero() {
        return Ok(w.clone());
    }
    let sub = co.restrict(w)?;
    let local = coradical_of(&sub);
    Ok(Subspace::from_vectors(co.dim(), local.basis_vectors().iter().map(|v| w.basis().apply_left(v))))
}

/// Set of components a subcoalgebra meets.
fn touched_components(dec: &Decomposition, w: &Subspace) -> Result<BTreeSet<usize>> {
    let mut out = BTreeSet::new();
    for (k, c) in dec.components.iter().enumerate() {
        if !c.space.intersect(w)?.is_zero() {
            out.insert(k);
        }
    }
    Ok(out)
}

/// The two product-link conditions for a triple `(a, b, c)` of simples:
/// `((aC)₀ + (bC)₀)(S(C) + S⁻¹(C)) ⊆ H₀` and
/// `(S(a) + S⁻¹(a))((ab)₀ + (ac)₀) ⊆ H₀`, plus the cube condition on the
/// coradical of the principal component. When a condition holds and the
/// first two simples are directly linked, the product subcoalgebras must be
/// linked.
pub fn product_condition_check(
    h: &FinHopf,
    data: &CoradicalData,
    quiver: &LinkQuiver,
    dec: &Decomposition,
    triple: (usize, usize, usize),
) -> Result<Report> {
    let s_inv = h.antipode_inverse()?;
    let co = h.coalgebra();
    let n = h.dim();
    let sp = |i: usize| &data.simples[i].space;
    let both_s = |w: &Subspace| -> Result<Subspace> {
        let a = h.antipode_image(w)?;
        let b = Subspace::from_vectors(n, w.basis_vectors().iter().map(|v| s_inv.apply_left(v)));
        a.sum(&b)
    };
    let (a, b, c) = triple;
    let mut report = Report::new();

    // right-hand version: C1 = a, C2 = b, D = c
    let (ac, bc) = (subspace_product(h, sp(a), sp(c))?, subspace_product(h, sp(b), sp(c))?);
    let (ac0, bc0) = (sub_coradical(co, &ac)?, sub_coradical(co, &bc)?);
    let lhs = subspace_product(h, &ac0.sum(&bc0)?, &both_s(sp(c))?)?;
    let right_ok = data.h0.contains(&lhs)?;
    report.check("product-condition-right", right_ok, format!("triple ({}, {}, {})", a, b, c));
    let linked_ab = quiver.edges.contains(&(a.min(b), a.max(b)));
    if right_ok && linked_ab {
        let same = touched_components(dec, &ac0)? == touched_components(dec, &bc0)?;
        report.check("product-link-right", same, "aC and bC meet the same components");
    } else {
        report.not_applicable("product-link-right", "hypotheses do not hold");
    }

    // left-hand version: C = a, D1 = b, D2 = c
    let (ab, acc) = (subspace_product(h, sp(a), sp(b))?, subspace_product(h, sp(a), sp(c))?);
    let (ab0, ac0b) = (sub_coradical(co, &ab)?, sub_coradical(co, &acc)?);
    let lhs = subspace_product(h, &both_s(sp(a))?, &ab0.sum(&ac0b)?)?;
    let left_ok = data.h0.contains(&lhs)?;
    report.check("product-condition-left", left_ok, format!("triple ({}, {}, {})", a, b, c));
    let linked_bc = quiver.edges.contains(&(b.min(c), b.max(c)));
    if left_ok && linked_bc {
        let same = touched_components(dec, &ab0)? == touched_components(dec, &ac0b)?;
        report.check("product-link-left", same, "Cb and Cc meet the same components");
    } else {
        report.not_applicable("product-link-left", "hypotheses do not hold");
    }

    // cube condition on (H_(1))_0
    let unit_comp = principal_component(h, dec)?;
    let k0 = Subspace::sum_all(n, dec.components[unit_comp].simples.iter().map(|&i| sp(i)))?;
    let k2 = subspace_product(h, &k0, &k0)?;
    let k3 = subspace_product(h, &k2, &k0)?;
    let cube_ok = data.h0.contains(&k3)?;
    report.check("principal-coradical-cube", cube_ok, "((H_(1))_0)^3 ⊆ H0");
    if cube_ok {
        let h1 = &dec.components[unit_comp].space;
        let closed = h1.contains(&subspace_product(h, h1, h1)?)?;
        report.check("principal-component-subalgebra", closed, "H_(1) is closed under products");
    }
    Ok(report)
}

/// Index of the component containing the unit.
pub fn principal_component(h: &FinHopf, dec: &Decomposition) -> Result<usize> {
    let one = h.unit()?;
    dec.components
        .iter()
        .position(|c| c.space.contains_vector(one))
        .ok_or_else(|| Error::AxiomFailure("unit lies in no component".into()))
}

/// Outcome of the dual-Chevalley structure checks.
#[derive(Clone, Debug)]
pub struct DcpOutcome {
    pub report: Report,
    pub principal: Subspace,
    /// Lowest-index representative of each class of `C ~ D ⇔ CK = DK`.
    pub representatives: Vec<usize>,
}

/// Components as translates of the principal one, the product rule for
/// components, the Hopf subalgebra property of `H_(1)` and the reassembly
/// `H = ⊕ C H_(1)` over representatives.
pub fn verify_dcp(h: &FinHopf, data: &CoradicalData, dec: &Decomposition) -> Result<DcpOutcome> {
    if !data.has_dual_chevalley {
        return Err(Error::NotApplicable("the coradical is not a Hopf subalgebra".into()));
    }
    let n = h.dim();
    let co = h.coalgebra();
    let mut report = Report::new();
    let p = principal_component(h, dec)?;
    let h1 = dec.components[p].space.clone();
    let comp_of = |i: usize| &dec.components[dec.component_of(i)].space;

    let mut left_bad = None;
    let mut right_bad = None;
    for (i, simple) in data.simples.iter().enumerate() {
        if left_bad.is_none() && subspace_product(h, &simple.space, &h1)? != *comp_of(i) {
            left_bad = Some(i);
        }
        if right_bad.is_none() && subspace_product(h, &h1, &simple.space)? != *comp_of(i) {
            right_bad = Some(i);
        }
    }
    let describe = |bad: Option<usize>, what: &str| match bad {
        None => (true, format!("{} for every simple", what)),
        Some(i) => (false, format!("fails for simple {}", i)),
    };
    let (ok, d) = describe(left_bad, "H_(C) = C H_(1)");
    report.check("component-left-translate", ok, d);
    let (ok, d) = describe(right_bad, "H_(C) = H_(1) C");
    report.check("component-right-translate", ok, d);

    let s = data.simples.len();
    let mut prod_bad = None;
    let mut simple_bad = None;
    'pairs: for i in 0..s {
        for j in 0..s {
            let cd = subspace_product(h, &data.simples[i].space, &data.simples[j].space)?;
            let sub = co.restrict(&cd)?;
            let (_, local) = crate::radical::coalgebra_simples(&sub, h.field_order())?;
            let mut targets = Vec::new();
            for e in &local {
                let lifted = Subspace::from_vectors(n, e.space.basis_vectors().iter().map(|v| cd.basis().apply_left(v)));
                match simple_containing(data, &lifted) {
                    Some(k) => targets.push(k),
                    None => {
                        simple_bad = Some((i, j));
                        break 'pairs;
                    }
                }
            }
            let allowed = Subspace::sum_all(n, targets.iter().map(|&k| comp_of(k)))?;
            let product = subspace_product(h, comp_of(i), comp_of(j))?;
            if !allowed.contains(&product)? {
                prod_bad = Some((i, j));
                break 'pairs;
            }
        }
    }
    report.check(
        "simples-of-products",
        simple_bad.is_none(),
        match simple_bad {
            None => String::from("simples of every CD are simples of H"),
            Some((i, j)) => format!("a simple of C{}C{} is not a simple of H", i, j),
        },
    );
    report.check(
        "component-products",
        prod_bad.is_none() && simple_bad.is_none(),
        match prod_bad {
            None => String::from("H_(C) H_(D) lies in the sum of H_(E) over simples E of CD"),
            Some((i, j)) => format!("fails for simples {} and {}", i, j),
        },
    );

    let unit = h.unit_subspace()?;
    report.check("principal-contains-unit", h1.contains(&unit)?, "1 ∈ H_(1)");
    report.check("principal-product-closed", h1.contains(&subspace_product(h, &h1, &h1)?)?, "H_(1) H_(1) ⊆ H_(1)");
    report.check("principal-antipode-stable", h1.contains(&h.antipode_image(&h1)?)?, "S(H_(1)) ⊆ H_(1)");

    let k = Subspace::sum_all(n, dec.components[p].simples.iter().map(|&i| &data.simples[i].space))?;
    let translates: Vec<Subspace> =
        data.simples.iter().map(|c| subspace_product(h, &c.space, &k)).collect::<Result<_>>()?;
    let mut representatives: Vec<usize> = Vec::new();
    for i in 0..s {
        if !representatives.iter().any(|&r| translates[r] == translates[i]) {
            representatives.push(i);
        }
    }
    let mut relation_ok = true;
    for i in 0..s {
        for j in 0..s {
            let related = translates[i] == translates[j];
            if related != (dec.component_of(i) == dec.component_of(j)) {
                relation_ok = false;
            }
        }
    }
    report.check("translate-relation-is-linkage", relation_ok, "CK = DK exactly when C and D are linked");
    let parts: Vec<Subspace> = representatives
        .iter()
        .map(|&r| subspace_product(h, &data.simples[r].space, &h1))
        .collect::<Result<_>>()?;
    let total: usize = parts.iter().map(|x| x.dim()).sum();
    let sum = Subspace::sum_all(n, parts.iter())?;
    report.check(
        "representatives-reassemble",
        total == n && sum.is_full(),
        format!("{} representatives, dimensions {:?}", representatives.len(), parts.iter().map(|x| x.dim()).collect::<Vec<_>>()),
    );
    Ok(DcpOutcome { report, principal: h1, representatives })
}

/// `H_(1) M ⊆ M` and `M H_(1) ⊆ M` for `M` the sum of the other components.
pub fn ideal_complement_check(h: &FinHopf, data: &CoradicalData, dec: &Decomposition) -> Result<Report> {
    if !data.has_dual_chevalley {
        return Err(Error::NotApplicable("the coradical is not a Hopf subalgebra".into()));
    }
    let n = h.dim();
    let p = principal_component(h, dec)?;
    let h1 = &dec.components[p].space;
    let m = Subspace::sum_all(n, dec.components.iter().enumerate().filter(|(k, _)| *k != p).map(|(_, c)| &c.space))?;
    let mut report = Report::new();
    report.check("complement-left-stable", m.contains(&subspace_product(h, h1, &m)?)?, format!("dim M = {}", m.dim()));
    report.check("complement-right-stable", m.contains(&subspace_product(h, &m, h1)?)?, format!("dim M = {}", m.dim()));
    report.not_applicable("projective-generator", "projectivity over H_(1) is not certified");
    Ok(report)
}

/// Adjoint stability of a subspace: `Σ h₁ k S(h₂)` and `Σ S(h₁) k h₂` stay in `k`.
pub fn is_normal(h: &FinHopf, sub: &Subspace) -> Result<(bool, bool)> {
    let s = h.require_antipode()?.clone();
    let n = h.dim();
    let mut left = true;
    let mut right = true;
    for i in 0..n {
        let d = h.coalgebra().comul_sparse(&unit_vec(n, i));
        for k in sub.basis_vectors() {
            let mut l_acc = crate::linalg::zero_vec(n);
            let mut r_acc = crate::linalg::zero_vec(n);
            for ((a, b), c) in &d {
                let (ea, eb) = (unit_vec(n, *a), unit_vec(n, *b));
                let l = h.mul_vec(&h.mul_vec(&ea, &k)?, &s.apply_left(&eb))?;
                let r = h.mul_vec(&h.mul_vec(&s.apply_left(&ea), &k)?, &eb)?;
                crate::linalg::axpy(&mut l_acc, c, &l);
                crate::linalg::axpy(&mut r_acc, c, &r);
            }
            left &= sub.contains_vector(&l_acc);
            right &= sub.contains_vector(&r_acc);
        }
    }
    Ok((left, right))
}

/// Whenever `^C H ^D` leaves H₀, C and D lie in one link class.
pub fn hit_projection_link_check(co: &FinCoalgebra, data: &CoradicalData, quiver: &LinkQuiver) -> Report {
    let n = co.dim();
    let s = data.simples.len();
    let mut bad = None;
    'outer: for c in 0..s {
        for d in 0..s {
            let escapes = (0..n).any(|m| {
                let y = hit(co, &data.idempotents, &unit_vec(n, m), HitSide::Simple(c), HitSide::Simple(d));
                !data.h0.contains_vector(&y)
            });
            if escapes && quiver.class_of(c) != quiver.class_of(d) {
                bad = Some((c, d));
                break 'outer;
            }
        }
    }
    let mut report = Report::new();
    match bad {
        None => report.pass("hit-projection-linked", "nontrivial (C, D) hit projections only within a class"),
        Some((c, d)) => report.fail("hit-projection-linked", format!("simples {} and {} escape H0 but are not linked", c, d)),
    }
    report
}

/// Simples lying in different components (by containment) are never directly linked.
pub fn cross_component_check(data: &CoradicalData, quiver: &LinkQuiver, dec: &Decomposition) -> Result<Report> {
    let mut home = Vec::with_capacity(data.simples.len());
    for simple in &data.simples {
        let mut found = None;
        for (k, c) in dec.components.iter().enumerate() {
            if c.space.contains(&simple.space)? {
                found = Some(k);
            }
        }
        home.push(found);
    }
    let ok = home.iter().all(|h| h.is_some()) && quiver.edges.iter().all(|&(a, b)| home[a] == home[b]);
    let mut report = Report::new();
    report.check("no-cross-component-links", ok, "direct links stay inside components");
    Ok(report)
}

/// Entries of a block upper-triangular multiplicative matrix with linked
/// diagonal simples lie in a single component.
pub fn block_membership_check(dec_blocks: &BlockDecomposition, quiver: &LinkQuiver, dec: &Decomposition) -> Result<Report> {
    let classes: BTreeSet<usize> = dec_blocks.simple_index.iter().map(|&i| quiver.class_of(i)).collect();
    let mut report = Report::new();
    if classes.len() != 1 {
        report.not_applicable("block-entries-in-component", "diagonal simples are not all linked");
        return Ok(report);
    }
    let comp = &dec.components[dec.component_of(dec_blocks.simple_index[0])].space;
    let span = dec_blocks.conjugated.entry_span();
    report.check("block-entries-in-component", comp.contains(&span)?, "entries lie in the component of the first simple");
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalg::{dual_group_algebra, group_algebra, sweedler, taft, tensor};
    use crate::groups::GroupTable;
    use crate::radical::analyze;
    use crate::scalar::Cyclo;

    fn run(h: &FinHopf) -> (CoradicalData, LinkQuiver, Decomposition) {
        let data = analyze(h).unwrap();
        let (q, d) = link_decomposition(h.coalgebra(), &data).unwrap();
        (data, q, d)
    }

    #[test]
    fn sweedler_single_component() {
        let h = sweedler();
        let (data, q, d) = run(&h);
        assert_eq!(q.edges.len(), 1);
        assert_eq!(q.classes, vec![vec![0, 1]]);
        assert_eq!(d.dims(), vec![4]);
        assert!(d.is_direct_sum);
        assert!(antipode_on_components(&h, &data, &d).unwrap().all_passed());
        assert!(verify_dcp(&h, &data, &d).unwrap().report.all_passed());
    }

    #[test]
    fn z4_singletons() {
        let h = group_algebra(&GroupTable::cyclic(4));
        let (data, q, d) = run(&h);
        assert!(q.edges.is_empty());
        assert_eq!(d.dims(), vec![1, 1, 1, 1]);
        let rep = ideal_complement_check(&h, &data, &d).unwrap();
        assert!(rep.all_passed(), "{}", rep.summary());
    }

    #[test]
    fn taft3_chain() {
        let h = taft(3, &Cyclo::zeta(3)).unwrap();
        let (data, q, d) = run(&h);
        assert_eq!(q.classes.len(), 1);
        assert_eq!(q.edges.len(), 3);
        assert_eq!(d.dims(), vec![9]);
        let out = verify_dcp(&h, &data, &d).unwrap();
        assert!(out.report.all_passed(), "{}", out.report.summary());
        assert_eq!(out.representatives, vec![0]);
    }

    #[test]
    fn s3_dual_components() {
        let h = dual_group_algebra(&GroupTable::symmetric(3));
        let (data, q, d) = run(&h);
        assert!(q.edges.is_empty());
        assert_eq!(d.dims(), vec![1, 1, 4]);
        assert!(wedge_primitive_equivalence(h.coalgebra(), &data).unwrap().all_passed());
    }

    #[test]
    fn z2_times_sweedler() {
        let h = tensor(&group_algebra(&GroupTable::cyclic(2)), &sweedler());
        let (data, _, d) = run(&h);
        assert_eq!(d.dims(), vec![4, 4]);
        let out = verify_dcp(&h, &data, &d).unwrap();
        assert!(out.report.all_passed(), "{}", out.report.summary());
        assert_eq!(out.representatives.len(), 2);
        let (l, r) = is_normal(&h, &out.principal).unwrap();
        assert!(l && r);
    }

    #[test]
    fn product_conditions_in_dcp_algebra() {
        let h = taft(3, &Cyclo::zeta(3)).unwrap();
        let (data, q, d) = run(&h);
        let rep = product_condition_check(&h, &data, &q, &d, (0, 1, 2)).unwrap();
        assert!(rep.all_passed(), "{}", rep.summary());
        assert!(hit_projection_link_check(h.coalgebra(), &data, &q).all_passed());
        assert!(cross_component_check(&data, &q, &d).unwrap().all_passed());
    }
}
