//! Structure-constant JSON files.
//!
//! Scalars are written as `"p/q"` strings when rational and as arrays of such
//! strings (coefficients of `1, ζ, ζ², …` in the file's cyclotomic field)
//! otherwise. Plain JSON integers are accepted on input.

use hopf_link_core::coalg::{AlgebraData, FinCoalgebra, FinHopf};
use hopf_link_core::linalg::{ExactMatrix, Vector};
use hopf_link_core::scalar::euler_phi;
use hopf_link_core::{Cyclo, Rational};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct FieldSpec {
    pub cyclotomic_order: u32,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Text(String),
    Coeffs(Vec<Scalar>),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct HopfFile {
    pub field: FieldSpec,
    pub dim: usize,
    pub basis: Vec<String>,
    pub comul: Vec<(usize, usize, usize, Scalar)>,
    pub counit: Vec<Scalar>,
    pub mul: Option<Vec<(usize, usize, usize, Scalar)>>,
    pub unit: Option<Vec<Scalar>>,
    pub antipode: Option<Vec<Vec<Scalar>>>,
}

fn write_scalar(c: &Cyclo, order: u32) -> Scalar {
    match c.as_rational() {
        Some(r) => Scalar::Text(r.to_string()),
        None => {
            let p = c.promote(order).expect("scalar lies in the declared field");
            Scalar::Coeffs(p.coeffs().iter().map(|r| Scalar::Text(r.to_string())).collect())
        }
    }
}

fn read_rational(s: &Scalar) -> Result<Rational, CliError> {
    match s {
        Scalar::Int(i) => Ok(Rational::from_integer((*i).into())),
        Scalar::Text(t) => t.trim().parse::<Rational>().map_err(|_| CliError::schema(format!("bad rational literal {:?}", t))),
        Scalar::Coeffs(_) => Err(CliError::schema("nested coefficient arrays are not scalars")),
    }
}

fn read_scalar(s: &Scalar, order: u32) -> Result<Cyclo, CliError> {
    match s {
        Scalar::Coeffs(cs) => {
            if cs.len() > euler_phi(order) {
                return Err(CliError::schema(format!(
                    "{} coefficients exceed the degree {} of the field",
                    cs.len(),
                    euler_phi(order)
                )));
            }
            let coeffs = cs.iter().map(read_rational).collect::<Result<Vec<_>, _>>()?;
            Ok(Cyclo::from_coeffs(order, coeffs).demote_rational())
        }
        other => Ok(Cyclo::from_rational(read_rational(other)?)),
    }
}

fn read_vec(v: &[Scalar], n: usize, what: &str, order: u32) -> Result<Vector, CliError> {
    if v.len() != n {
        return Err(CliError::schema(format!("{} has length {}, expected {}", what, v.len(), n)));
    }
    v.iter().map(|s| read_scalar(s, order)).collect()
}

pub fn to_file(h: &FinHopf) -> HopfFile {
    let n = h.dim();
    let order = h.field_order();
    let co = h.coalgebra();
    let comul = co.quadruples().map(|(i, j, k, c)| (i, j, k, write_scalar(c, order))).collect();
    let counit = co.counit().iter().map(|c| write_scalar(c, order)).collect();
    let (mul, unit) = match h.algebra() {
        Some(a) => {
            let mut m = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    for (k, c) in a.product_basis(n, i, j) {
                        m.push((i, j, *k, write_scalar(c, order)));
                    }
                }
            }
            (Some(m), Some(a.unit().iter().map(|c| write_scalar(c, order)).collect()))
        }
        None => (None, None),
    };
    let antipode = h
        .antipode()
        .map(|s| (0..n).map(|i| s.row(i).iter().map(|c| write_scalar(c, order)).collect()).collect());
    HopfFile {
        field: FieldSpec { cyclotomic_order: order },
        dim: n,
        basis: h.names().to_vec(),
        comul,
        counit,
        mul,
        unit,
        antipode,
    }
}

pub fn from_file(f: &HopfFile, field_override: Option<u32>) -> Result<FinHopf, CliError> {
    let n = f.dim;
    let order = field_override.unwrap_or(f.field.cyclotomic_order).max(1);
    if f.basis.len() != n {
        return Err(CliError::schema(format!("basis has {} names for dim {}", f.basis.len(), n)));
    }
    let comul = f
        .comul
        .iter()
        .map(|(i, j, k, c)| Ok((*i, *j, *k, read_scalar(c, order)?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    let counit = read_vec(&f.counit, n, "counit", order)?;
    let co = FinCoalgebra::new(f.basis.clone(), comul, counit)?;
    let algebra = match (&f.mul, &f.unit) {
        (Some(m), Some(u)) => {
            let mul = m
                .iter()
                .map(|(i, j, k, c)| Ok((*i, *j, *k, read_scalar(c, order)?)))
                .collect::<Result<Vec<_>, CliError>>()?;
            Some(AlgebraData::new(n, mul, read_vec(u, n, "unit", order)?)?)
        }
        (None, None) => None,
        _ => return Err(CliError::schema("mul and unit must be both present or both null")),
    };
    let antipode = match &f.antipode {
        Some(rows) => {
            if rows.len() != n {
                return Err(CliError::schema(format!("antipode has {} rows for dim {}", rows.len(), n)));
            }
            let rows = rows.iter().map(|r| read_vec(r, n, "antipode row", order)).collect::<Result<Vec<_>, _>>()?;
            Some(ExactMatrix::from_rows(n, rows))
        }
        None => None,
    };
    Ok(FinHopf::from_parts(order, co, algebra, antipode)?)
}

pub fn to_json(h: &FinHopf) -> String {
    let mut s = serde_json::to_string_pretty(&to_file(h)).expect("structure constants serialize");
    s.push('\n');
    s
}

pub fn from_json(text: &str, field_override: Option<u32>) -> Result<FinHopf, CliError> {
    let f: HopfFile = serde_json::from_str(text).map_err(CliError::from_json)?;
    from_file(&f, field_override)
}
