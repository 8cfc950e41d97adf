//! Built-in constructors addressed by short specs such as `taft:3:zeta3`,
//! `dual-group:S3`, `tensor:group:Z2+sweedler` or `smash:H12`.

use hopf_link_core::coalg::{coopposite, dual, dual_group_algebra, group_algebra, opposite, sweedler, taft, tensor, FinHopf};
use hopf_link_core::groups::GroupTable;
use hopf_link_core::smash::{h12, pointed_four, SmashCoproduct};
use hopf_link_core::Cyclo;

use crate::CliError;

/// A constructed algebra, with its smash-coproduct presentation when it has one.
#[derive(Clone, Debug)]
pub struct Generated {
    pub hopf: FinHopf,
    pub smash: Option<SmashCoproduct>,
}

impl From<FinHopf> for Generated {
    fn from(hopf: FinHopf) -> Self {
        Generated { hopf, smash: None }
    }
}

/// `Z<n>` or `S<k>`; the second value is the cyclotomic order splitting the dual.
fn group(name: &str) -> Result<(GroupTable, u32), CliError> {
    let bad = || CliError::Usage(format!("unknown group {:?}; use Z<n> or S<k>", name));
    let (kind, num) = name.split_at(1.min(name.len()));
    let k: usize = num.parse().map_err(|_| bad())?;
    match kind {
        "Z" if k >= 1 => Ok((GroupTable::cyclic(k), k as u32)),
        "S" if (1..=5).contains(&k) => Ok((GroupTable::symmetric(k), 1)),
        _ => Err(bad()),
    }
}

/// `-1`, `zeta<m>` or `zeta<m>^<k>`.
fn root(text: &str) -> Result<Cyclo, CliError> {
    if text == "-1" {
        return Ok(Cyclo::from_int(-1));
    }
    let bad = || CliError::Usage(format!("bad root of unity {:?}; use zeta<m>, zeta<m>^<k> or -1", text));
    let rest = text.strip_prefix("zeta").ok_or_else(bad)?;
    let (m, k) = match rest.split_once('^') {
        Some((m, k)) => (m, k.parse::<i64>().map_err(|_| bad())?),
        None => (rest, 1),
    };
    let m: u32 = m.parse().map_err(|_| bad())?;
    if m == 0 {
        return Err(bad());
    }
    Ok(Cyclo::zeta_pow(m, k))
}

pub fn generate(spec: &str) -> Result<Generated, CliError> {
    let spec = spec.trim();
    let (head, rest) = spec.split_once(':').unwrap_or((spec, ""));
    let g = match head {
        "sweedler" => sweedler().into(),
        "h24" => generate("tensor:dual-group:S3+sweedler")?,
        "group" => group_algebra(&group(rest)?.0).into(),
        "dual-group" => {
            let (g, order) = group(rest)?;
            dual_group_algebra(&g).with_field_order(order)?.into()
        }
        "taft" => {
            let (n, q) = rest.split_once(':').ok_or_else(|| CliError::Usage("taft needs taft:<n>:<root>".into()))?;
            let n: usize = n.parse().map_err(|_| CliError::Usage(format!("bad taft size {:?}", n)))?;
            taft(n, &root(q)?)?.into()
        }
        "tensor" => {
            let mut parts = rest.split('+');
            let first = parts.next().filter(|s| !s.is_empty()).ok_or_else(|| CliError::Usage("tensor needs factors".into()))?;
            let mut acc = generate(first)?.hopf;
            let mut count = 1;
            for p in parts {
                acc = tensor(&acc, &generate(p)?.hopf);
                count += 1;
            }
            if count < 2 {
                return Err(CliError::Usage("tensor needs at least two factors separated by '+'".into()));
            }
            acc.into()
        }
        "dual" => dual(&generate(rest)?.hopf)?.into(),
        "opposite" => opposite(&generate(rest)?.hopf).into(),
        "coopposite" => coopposite(&generate(rest)?.hopf).into(),
        "smash" => {
            let s = match rest {
                "H12" => h12()?,
                "pointed4" => pointed_four()?,
                _ => return Err(CliError::Usage(format!("unknown smash example {:?}; use H12 or pointed4", rest))),
            };
            Generated { hopf: s.hopf().clone(), smash: Some(s) }
        }
        _ => return Err(CliError::Usage(format!("unknown generator {:?}", spec))),
    };
    Ok(g)
}

/// Fixed corpus: identifier and generator spec.
pub const CORPUS: &[(&str, &str)] = &[
    ("group-z2", "group:Z2"),
    ("group-z3", "group:Z3"),
    ("group-z4", "group:Z4"),
    ("group-s3", "group:S3"),
    ("dual-group-z2", "dual-group:Z2"),
    ("dual-group-z3", "dual-group:Z3"),
    ("dual-group-z4", "dual-group:Z4"),
    ("dual-group-s3", "dual-group:S3"),
    ("sweedler", "sweedler"),
    ("taft3", "taft:3:zeta3"),
    ("taft4", "taft:4:zeta4"),
    ("z2-sweedler", "tensor:group:Z2+sweedler"),
    ("h24", "h24"),
    ("pointed4", "smash:pointed4"),
    ("h12", "smash:H12"),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs_parse() {
        assert_eq!(generate("taft:3:zeta3").unwrap().hopf.dim(), 9);
        assert_eq!(generate("tensor:group:Z2+sweedler").unwrap().hopf.dim(), 8);
        assert_eq!(generate("h24").unwrap().hopf.dim(), 24);
        assert_eq!(generate("dual-group:Z3").unwrap().hopf.field_order(), 3);
        assert!(generate("smash:H12").unwrap().smash.is_some());
        assert_eq!(generate("taft:2:-1").unwrap().hopf, sweedler());
        assert!(matches!(generate("taft:3:zeta4"), Err(CliError::Engine(_))));
        assert!(matches!(generate("lie:sl2"), Err(CliError::Usage(_))));
        assert!(matches!(generate("tensor:sweedler"), Err(CliError::Usage(_))));
    }
}
