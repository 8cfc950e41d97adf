//! Finite groups given by multiplication tables.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    /// Permutation realisation, when the group was built from permutations.
    perms: Option<Vec<Vec<usize>>>,
}

impl GroupTable {
    /// Validates closure, identity, inverses and associativity.
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroupTable("empty table".to_string()));
        }
        if names.len() != n {
            return Err(Error::InvalidGroupTable(format!("{} names for {} elements", names.len(), n)));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroupTable(format!("row {} has length {}", i, row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::InvalidGroupTable(format!("entry {} out of range in row {}", bad, i)));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::InvalidGroupTable("no identity element".to_string()))?;
        let mut inverse = vec![0; n];
        for g in 0..n {
            inverse[g] = (0..n)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or_else(|| Error::InvalidGroupTable(format!("element {} has no inverse", names[g])))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroupTable(format!(
                            "associativity fails at ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        Ok(GroupTable { names, table, identity, inverse, perms: None })
    }

    /// Z_n with elements 1, g, g^2, ...
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let names = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{}", i),
            })
            .collect();
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        GroupTable::new(names, table).expect("cyclic table")
    }

    /// Symmetric group on k points, elements in lexicographic order of their images.
    pub fn symmetric(k: usize) -> Self {
        let mut perms: Vec<Vec<usize>> = Vec::new();
        let mut cur: Vec<usize> = (0..k).collect();
        loop {
            perms.push(cur.clone());
            // next permutation
            let Some(i) = (1..k).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
            let j = (i..k).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
        // (p q)(x) = p(q(x)): apply q first
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|p| perms.iter().map(|q| index(&q.iter().map(|&x| p[x]).collect())).collect())
            .collect();
        let names = perms.iter().map(|p| cycle_notation(p)).collect();
        let mut g = GroupTable::new(names, table).expect("symmetric group table");
        g.perms = Some(perms);
        g
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// Sign of a permutation element, if the group carries a permutation realisation.
    pub fn sign(&self, g: usize) -> Option<i64> {
        let p = &self.perms.as_ref()?[g];
        let mut seen = vec![false; p.len()];
        let mut s = 1i64;
        for start in 0..p.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = p[x];
                len += 1;
            }
            if len % 2 == 0 {
                s = -s;
            }
        }
        Some(s)
    }
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            out.push_str(&format!("{}", x + 1));
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_shape() {
        let g = GroupTable::symmetric(3);
        assert_eq!(g.order(), 6);
        assert_eq!(g.names()[g.identity()], "e");
        let signs: Vec<i64> = (0..6).map(|i| g.sign(i).unwrap()).collect();
        assert_eq!(signs.iter().filter(|&&s| s == -1).count(), 3);
        // non-abelian
        assert!((0..6).any(|a| (0..6).any(|b| g.mul(a, b) != g.mul(b, a))));
    }

    #[test]
    fn invalid_tables_rejected() {
        let names = vec!["a".to_string(), "b".to_string()];
        assert!(GroupTable::new(names.clone(), vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(GroupTable::new(names, vec![vec![0, 2], vec![1, 0]]).is_err());
    }

    #[test]
    fn cyclic_inverse() {
        let g = GroupTable::cyclic(4);
        assert_eq!(g.inverse(1), 3);
        assert_eq!(g.names()[2], "g^2");
    }
}
