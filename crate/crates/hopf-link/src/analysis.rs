//! Runs the engine's verification routines on one algebra and collects the
//! results into an [`AnalysisReport`].

use std::collections::BTreeMap;

use hopf_link_core::coalg::{check_axioms, FinHopf};
use hopf_link_core::link::{
    antipode_on_components, block_membership_check, cross_component_check, hit_projection_link_check,
    ideal_complement_check, is_normal, link_decomposition, product_condition_check, verify_dcp,
    wedge_primitive_equivalence, Decomposition, LinkQuiver,
};
use hopf_link_core::linalg::{ExactMatrix, Subspace};
use hopf_link_core::matcalc::{
    antipode_identities, block_triviality_check, decompose_multiplicative, extension_matrix, primitive_space,
};
use hopf_link_core::radical::{analyze, check_idempotents, coradical, CoradicalData};
use hopf_link_core::report::{Report, Status};
use hopf_link_core::smash::{translate_relation_check, verify_smash_decomposition, SmashCoproduct};
use hopf_link_core::Cyclo;
use serde::Serialize;
use serde_json::{json, Value};

use crate::dot::quiver_dot;
use crate::CliError;

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct CheckLine {
    pub name: String,
    pub status: &'static str,
    pub details: String,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct AnalysisReport {
    pub report_version: u32,
    pub algebra_id: String,
    pub summary: BTreeMap<String, Value>,
    pub checks: Vec<CheckLine>,
    pub artifacts: BTreeMap<String, String>,
}

impl AnalysisReport {
    pub fn new(algebra_id: &str) -> Self {
        AnalysisReport {
            report_version: REPORT_VERSION,
            algebra_id: algebra_id.to_string(),
            summary: BTreeMap::new(),
            checks: Vec::new(),
            artifacts: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, section: &str, report: Report) {
        for c in report.checks {
            let name = format!("{}/{}", section, c.name);
            assert!(self.checks.iter().all(|x| x.name != name), "duplicate check {}", name);
            self.checks.push(CheckLine { name, status: c.status.as_str(), details: c.details });
        }
    }

    pub fn note(&mut self, key: &str, value: Value) {
        self.summary.insert(key.to_string(), value);
    }

    pub fn status(&self, name: &str) -> Option<&'static str> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.status)
    }

    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == "fail")
    }

    pub fn count(&self, status: &str) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("algebra: {}\n", self.algebra_id);
        for (k, v) in &self.summary {
            out.push_str(&format!("  {}: {}\n", k, v));
        }
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let tag = match c.status {
                "pass" => "PASS",
                "fail" => "FAIL",
                _ => "N/A ",
            };
            out.push_str(&format!("{}  {:<width$}  {}\n", tag, c.name, c.details, width = width));
        }
        for (k, v) in &self.artifacts {
            out.push_str(&format!("artifact {}: {}\n", k, v));
        }
        out.push_str(&format!(
            "{} passed, {} failed, {} not applicable\n",
            self.count("pass"),
            self.count("fail"),
            self.count("not_applicable")
        ));
        out
    }
}

/// Collapses same-named checks from many reports: any failure fails, a pass
/// needs at least one pass, otherwise not applicable.
pub fn collapse(reports: Vec<Report>) -> Report {
    let mut order: Vec<String> = Vec::new();
    let mut tally: BTreeMap<String, (usize, usize, Option<String>)> = BTreeMap::new();
    for r in reports {
        for c in r.checks {
            if !tally.contains_key(&c.name) {
                order.push(c.name.clone());
            }
            let e = tally.entry(c.name).or_insert((0, 0, None));
            match c.status {
                Status::Pass => e.0 += 1,
                Status::Fail => {
                    e.1 += 1;
                    e.2.get_or_insert(c.details);
                }
                Status::NotApplicable => {}
            }
        }
    }
    let mut out = Report::new();
    for name in order {
        let (pass, fail, first) = tally.remove(&name).expect("tallied");
        if fail > 0 {
            out.fail(name, format!("{} failing instances; first: {}", fail, first.unwrap_or_default()));
        } else if pass > 0 {
            out.pass(name, format!("{} instances", pass));
        } else {
            out.not_applicable(name, "no applicable instance");
        }
    }
    out
}

/// Lazily computed structure shared by the sections.
pub struct Session {
    pub id: String,
    pub hopf: FinHopf,
    pub smash: Option<SmashCoproduct>,
    data: Option<CoradicalData>,
    link: Option<(LinkQuiver, Decomposition)>,
}

impl Session {
    pub fn new(id: &str, hopf: FinHopf, smash: Option<SmashCoproduct>) -> Self {
        Session { id: id.to_string(), hopf, smash, data: None, link: None }
    }

    pub fn data(&mut self) -> Result<&CoradicalData, CliError> {
        if self.data.is_none() {
            self.data = Some(analyze(&self.hopf)?);
        }
        Ok(self.data.as_ref().expect("computed"))
    }

    pub fn link(&mut self) -> Result<(&CoradicalData, &LinkQuiver, &Decomposition), CliError> {
        if self.link.is_none() {
            self.data()?;
            let data = self.data.as_ref().expect("computed");
            self.link = Some(link_decomposition(self.hopf.coalgebra(), data)?);
        }
        let (q, d) = self.link.as_ref().expect("computed");
        Ok((self.data.as_ref().expect("computed"), q, d))
    }
}

pub fn section_axioms(s: &mut Session, out: &mut AnalysisReport) {
    out.note("dim", json!(s.hopf.dim()));
    out.note("cyclotomic_order", json!(s.hopf.field_order()));
    out.note("bialgebra", json!(s.hopf.is_bialgebra()));
    out.add("axioms", check_axioms(&s.hopf));
}

pub fn section_coradical(s: &mut Session, out: &mut AnalysisReport) -> Result<(), CliError> {
    let info = coradical(&s.hopf);
    let co = s.hopf.coalgebra().clone();
    let co = &co;
    let n = co.dim();
    let data = s.data()?;
    let reassembled = Subspace::sum_all(n, data.simples.iter().map(|c| &c.space))?;
    let mut rep = Report::new();
    rep.check(
        "dual-oracle",
        reassembled == info.h0,
        format!("trace-form radical annihilator dim {}, sum of simples dim {}", info.h0.dim(), reassembled.dim()),
    );
    let basic = data.simples.iter().all(|c| c.matrix.is_basic() && c.matrix.mat().entry_span() == c.space);
    rep.check("basic-matrices", basic, "each simple is spanned by the entries of a basic multiplicative matrix");
    let top = data.filtration.last().map(|x| x.is_full()).unwrap_or(false);
    rep.check("filtration-exhaustive", top, format!("{} layers", data.filtration.len()));
    out.note("coradical_dim", json!(data.h0.dim()));
    out.note("simple_dims", json!(data.simples.iter().map(|c| c.space.dim()).collect::<Vec<_>>()));
    out.note("filtration_dims", json!(data.filtration.iter().map(|x| x.dim()).collect::<Vec<_>>()));
    out.note("pointed", json!(data.is_pointed));
    out.note("cosemisimple", json!(data.is_cosemisimple));
    out.note("dual_chevalley", json!(data.has_dual_chevalley));
    out.add("coradical", rep);
    out.add("idempotents", check_idempotents(co, &data.simples, &data.idempotents));
    Ok(())
}

pub fn section_quiver(s: &mut Session, out: &mut AnalysisReport, dot_path: Option<&str>) -> Result<(), CliError> {
    let co = s.hopf.coalgebra().clone();
    let id = s.id.clone();
    let (data, quiver, _) = s.link()?;
    let eq = wedge_primitive_equivalence(&co, data)?;
    out.note("quiver_vertices", json!(quiver.vertex_dims));
    out.note("quiver_edges", json!(quiver.edges.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>()));
    out.note("quiver_loops", json!(quiver.loops.iter().collect::<Vec<_>>()));
    out.note("link_classes", json!(quiver.classes));
    if let Some(path) = dot_path {
        std::fs::write(path, quiver_dot(&id, quiver)).map_err(|e| CliError::Io(format!("{}: {}", path, e)))?;
        out.artifacts.insert("dot".to_string(), path.to_string());
    }
    out.add("quiver", eq);
    Ok(())
}

/// A fixed invertible scalar matrix used to hide block structure.
fn scramble(m: usize) -> ExactMatrix {
    let mut p = ExactMatrix::identity(m);
    for i in 0..m {
        for j in 0..i {
            p.set(i, j, Cyclo::from_int(((i + 2 * j) % 3) as i64 + 1));
        }
        if i + 1 < m {
            p.set(i, i + 1, Cyclo::from_int(-1));
        }
    }
    p
}

/// Block decompositions of scrambled extension matrices `[[C, X], [0, D]]`
/// for every pair with a nontrivial primitive matrix.
fn block_section(s: &mut Session) -> Result<Report, CliError> {
    let co = s.hopf.coalgebra().clone();
    let (data, quiver, dec) = s.link()?;
    let mut reports = Vec::new();
    for (i, c) in data.simples.iter().enumerate() {
        for (j, d) in data.simples.iter().enumerate() {
            let ps = primitive_space(&co, &c.matrix, &d.matrix, &data.h0)?;
            let Some(x) = ps.nontrivial_representatives().into_iter().next() else { continue };
            let g = extension_matrix(&co, &c.matrix, &x, &d.matrix)?;
            let m = g.size();
            let hidden = hopf_link_core::matcalc::MultMatrix::new(&co, g.mat().conjugate(&scramble(m))?)?;
            let bd = decompose_multiplicative(&co, &hidden, &data.simples)?;
            let mut r = Report::new();
            let mut got = bd.simple_index.clone();
            got.sort();
            let mut want = vec![i, j];
            want.sort();
            r.check("block-diagonal-simples", got == want, format!("pair ({}, {})", i, j));
            let back = bd.conjugated.conjugate(&bd.l_inv)?;
            r.check("block-similarity", back == *hidden.mat(), "L⁻¹ (L G L⁻¹) L = G");
            r.extend(block_triviality_check(&co, &bd, &data.idempotents, &data.h0));
            r.extend(block_membership_check(&bd, quiver, dec)?);
            reports.push(r);
        }
        // a coradical-valued input: its off-diagonal blocks vanish
        let direct = hopf_link_core::matcalc::MultMatrix::new(&co, c.matrix.mat().conjugate(&scramble(c.size()))?)?;
        let bd = decompose_multiplicative(&co, &direct, &data.simples)?;
        let mut r = Report::new();
        r.check("coradical-input-zero-offdiagonal", bd.offdiag_is_zero(), format!("simple {}", i));
        reports.push(r);
    }
    Ok(collapse(reports))
}

pub fn section_components(s: &mut Session, out: &mut AnalysisReport) -> Result<(), CliError> {
    let co = s.hopf.coalgebra().clone();
    let hopf = s.hopf.clone();
    let (data, quiver, dec) = s.link()?;
    let mut rep = Report::new();
    let total: usize = dec.dims().iter().sum();
    rep.check("direct-sum-audit", dec.is_direct_sum, format!("dims {:?} sum to {} of {}", dec.dims(), total, co.dim()));
    out.note("component_dims", json!(dec.dims()));
    out.note("component_simples", json!(dec.components.iter().map(|c| c.simples.clone()).collect::<Vec<_>>()));
    rep.extend(hit_projection_link_check(&co, data, quiver));
    rep.extend(cross_component_check(data, quiver, dec)?);
    if hopf.antipode().is_some() {
        rep.extend(antipode_on_components(&hopf, data, dec)?);
    } else {
        rep.not_applicable("antipode-permutes-components", "no antipode");
    }
    if hopf.algebra().is_some() && hopf.antipode().is_some() {
        let mats: Vec<Report> =
            data.simples.iter().map(|c| antipode_identities(&hopf, &c.matrix)).collect::<Result<_, _>>()?;
        out.add("matrices", collapse(mats));
    }
    out.add("components", rep);
    let blocks = block_section(s)?;
    out.add("blocks", blocks);
    Ok(())
}

const DCP_CHECKS: &[&str] = &[
    "component-left-translate",
    "component-right-translate",
    "simples-of-products",
    "component-products",
    "principal-contains-unit",
    "principal-product-closed",
    "principal-antipode-stable",
    "translate-relation-is-linkage",
    "representatives-reassemble",
];

pub fn section_dcp(s: &mut Session, out: &mut AnalysisReport) -> Result<(), CliError> {
    let hopf = s.hopf.clone();
    let (data, quiver, dec) = s.link()?;
    if !data.has_dual_chevalley {
        let reason = if hopf.is_bialgebra() {
            "coradical is not a Hopf subalgebra"
        } else {
            "no algebra structure; see the smash section for the module-sided form"
        };
        let mut rep = Report::new();
        for name in DCP_CHECKS {
            rep.not_applicable(*name, reason);
        }
        out.add("dcp", rep);
        let mut ideal = Report::new();
        ideal.not_applicable("complement-left-stable", reason);
        ideal.not_applicable("complement-right-stable", reason);
        out.add("ideal", ideal);
        return Ok(());
    }
    let outcome = verify_dcp(&hopf, data, dec)?;
    out.note("principal_dim", json!(outcome.principal.dim()));
    out.note("translate_representatives", json!(outcome.representatives));
    let (l, r) = is_normal(&hopf, &outcome.principal)?;
    out.note("principal_adjoint_stable", json!({"left": l, "right": r}));
    out.add("dcp", outcome.report);
    let s_count = data.simples.len();
    let mut triples = Vec::new();
    for a in 0..s_count {
        for b in 0..s_count {
            for c in 0..s_count {
                triples.push(product_condition_check(&hopf, data, quiver, dec, (a, b, c))?);
            }
        }
    }
    out.add("products", collapse(triples));
    out.add("ideal", ideal_complement_check(&hopf, data, dec)?);
    Ok(())
}

pub fn section_smash(s: &mut Session, out: &mut AnalysisReport) -> Result<(), CliError> {
    let Some(sm) = s.smash.clone() else {
        let mut rep = Report::new();
        rep.not_applicable("smash-parts-match-components", "algebra was not built as a smash coproduct");
        out.add("smash", rep);
        return Ok(());
    };
    let res = verify_smash_decomposition(&sm)?;
    out.note("smash_k_dim", json!(res.k.dim()));
    out.note("smash_part_dims", json!(res.parts.iter().map(|p| p.dim()).collect::<Vec<_>>()));
    out.add("smash", res.report);
    out.add("translates", translate_relation_check(sm.j(), &res.k)?);
    Ok(())
}

/// Every section, in a fixed order.
pub fn full(s: &mut Session) -> Result<AnalysisReport, CliError> {
    let mut out = AnalysisReport::new(&s.id);
    section_axioms(s, &mut out);
    section_coradical(s, &mut out)?;
    section_quiver(s, &mut out, None)?;
    section_components(s, &mut out)?;
    section_dcp(s, &mut out)?;
    section_smash(s, &mut out)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::generate;

    fn run(spec: &str) -> AnalysisReport {
        let g = generate(spec).unwrap();
        full(&mut Session::new(spec, g.hopf, g.smash)).unwrap()
    }

    #[test]
    fn sweedler_full_report() {
        let r = run("sweedler");
        assert!(!r.failed(), "{}", r.to_text());
        assert_eq!(r.summary["component_dims"], json!([4]));
        assert_eq!(r.status("blocks/block-corner-projection"), Some("pass"));
        assert_eq!(r.status("dcp/component-left-translate"), Some("pass"));
    }

    #[test]
    fn h12_full_report() {
        let r = run("smash:H12");
        assert!(!r.failed(), "{}", r.to_text());
        assert_eq!(r.status("dcp/component-left-translate"), Some("not_applicable"));
        assert_eq!(r.status("smash/component-module-translate"), Some("pass"));
        assert_eq!(r.summary["coradical_dim"], json!(6));
    }

    #[test]
    fn collapse_rules() {
        let mut a = Report::new();
        a.pass("x", "");
        a.not_applicable("y", "");
        let mut b = Report::new();
        b.fail("x", "bad");
        b.not_applicable("y", "");
        let c = collapse(vec![a, b]);
        assert_eq!(c.get("x").unwrap().status, Status::Fail);
        assert_eq!(c.get("y").unwrap().status, Status::NotApplicable);
    }
}
