use serde::{Deserialize, Serialize};

use super::roots::{add_roots, scale_root, Root};
use crate::error::{LieError, Result};
use crate::exactlin::ExactScalar;

/// Bond between two simple roots. For multiple bonds the arrow runs from the
/// longer root `from` to the shorter root `to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bond {
    pub mult: u8,
    pub from: usize,
    pub to: usize,
}

/// Bond between simple roots `a` (index `ia`) and `b` (index `ib`), read off
/// from which nonnegative integer combinations of them are positive roots.
pub fn bond(a: &Root, b: &Root, ia: usize, ib: usize, positives: &[Root]) -> Result<Bond> {
    let is_root = |i: i64, j: i64| positives.contains(&add_roots(&scale_root(a, i), &scale_root(b, j)));
    let mut found = vec![];
    for i in 0..=3 {
        for j in 0..=3 {
            if (i, j) != (0, 0) && is_root(i, j) {
                found.push((i, j));
            }
        }
    }
    let single = |x: &[(i64, i64)]| x.iter().all(|p| found.contains(p)) && found.len() == x.len();
    let fail = || LieError::UnrecognizedBondPattern(fmt_root(a), fmt_root(b));
    if !found.contains(&(1, 0)) || !found.contains(&(0, 1)) {
        return Err(fail());
    }
    let pat = |extra: &[(i64, i64)]| {
        let mut v = vec![(1, 0), (0, 1)];
        v.extend_from_slice(extra);
        single(&v)
    };
    if pat(&[]) {
        Ok(Bond { mult: 0, from: ia, to: ib })
    } else if pat(&[(1, 1)]) {
        Ok(Bond { mult: 1, from: ia, to: ib })
    } else if pat(&[(1, 1), (1, 2)]) {
        Ok(Bond { mult: 2, from: ia, to: ib })
    } else if pat(&[(1, 1), (2, 1)]) {
        Ok(Bond { mult: 2, from: ib, to: ia })
    } else if pat(&[(1, 1), (1, 2), (1, 3), (2, 3)]) {
        Ok(Bond { mult: 3, from: ia, to: ib })
    } else if pat(&[(1, 1), (2, 1), (3, 1), (3, 2)]) {
        Ok(Bond { mult: 3, from: ib, to: ia })
    } else {
        Err(fail())
    }
}

fn fmt_root(r: &Root) -> String {
    let parts: Vec<String> = r.iter().map(ExactScalar::to_string).collect();
    format!("({})", parts.join(", "))
}

#[derive(Clone, Debug, PartialEq)]
pub struct DynkinDiagram {
    pub label: String,
    pub nodes: Vec<Root>,
    /// `(i, j, bond)` for each connected pair `i < j`.
    pub bonds: Vec<(usize, usize, Bond)>,
}

#[derive(Serialize, Deserialize)]
struct DiagramRepr {
    #[serde(rename = "type")]
    label: String,
    nodes: Vec<Vec<ExactScalar>>,
    bonds: Vec<[usize; 5]>,
}

impl Serialize for DynkinDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DiagramRepr {
            label: self.label.clone(),
            nodes: self.nodes.clone(),
            bonds: self.bonds.iter().map(|(i, j, b)| [*i, *j, b.mult as usize, b.from, b.to]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DynkinDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = DiagramRepr::deserialize(d)?;
        Ok(DynkinDiagram {
            label: r.label,
            nodes: r.nodes,
            bonds: r
                .bonds
                .into_iter()
                .map(|[i, j, m, f, t]| (i, j, Bond { mult: m as u8, from: f, to: t }))
                .collect(),
        })
    }
}

/// Dynkin diagram of a set of simple roots, nodes in the given order. Connected
/// components are classified separately and joined with `x`.
pub fn dynkin_type(simples: &[Root], positives: &[Root]) -> Result<DynkinDiagram> {
    let k = simples.len();
    let mut bonds = vec![];
    for i in 0..k {
        for j in i + 1..k {
            let b = bond(&simples[i], &simples[j], i, j, positives)?;
            if b.mult > 0 {
                bonds.push((i, j, b));
            }
        }
    }
    let mut comp = vec![usize::MAX; k];
    let mut labels = vec![];
    for start in 0..k {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = labels.len();
        let mut stack = vec![start];
        let mut members = vec![];
        comp[start] = id;
        while let Some(v) = stack.pop() {
            members.push(v);
            for (i, j, _) in &bonds {
                let w = if *i == v {
                    *j
                } else if *j == v {
                    *i
                } else {
                    continue;
                };
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    stack.push(w);
                }
            }
        }
        members.sort();
        let cb: Vec<(usize, usize, Bond)> =
            bonds.iter().filter(|(i, _, _)| members.contains(i)).cloned().collect();
        labels.push(classify_component(&members, &cb)?);
    }
    let label = if labels.is_empty() { "0".to_string() } else { labels.join("x") };
    Ok(DynkinDiagram { label, nodes: simples.to_vec(), bonds })
}

fn classify_component(nodes: &[usize], bonds: &[(usize, usize, Bond)]) -> Result<String> {
    let k = nodes.len();
    let fail = |why: &str| LieError::UnrecognizedDiagram(format!("{why} on {k} nodes"));
    if k == 1 {
        return Ok("A1".into());
    }
    if bonds.len() != k - 1 {
        return Err(fail("cycle"));
    }
    let degree = |v: usize| bonds.iter().filter(|(i, j, _)| *i == v || *j == v).count();
    let neighbors = |v: usize| -> Vec<usize> {
        bonds
            .iter()
            .filter_map(|(i, j, _)| if *i == v { Some(*j) } else if *j == v { Some(*i) } else { None })
            .collect()
    };
    let multiple: Vec<&(usize, usize, Bond)> = bonds.iter().filter(|(_, _, b)| b.mult > 1).collect();
    let max_deg = nodes.iter().map(|&v| degree(v)).max().unwrap_or(0);
    match multiple.len() {
        0 => {
            if max_deg <= 2 {
                return Ok(format!("A{k}"));
            }
            let branch: Vec<usize> = nodes.iter().copied().filter(|&v| degree(v) >= 3).collect();
            if branch.len() != 1 || degree(branch[0]) != 3 {
                return Err(fail("branching"));
            }
            let c = branch[0];
            let mut arms: Vec<usize> = neighbors(c)
                .into_iter()
                .map(|start| {
                    let (mut prev, mut cur, mut len) = (c, start, 1);
                    loop {
                        let next: Vec<usize> = neighbors(cur).into_iter().filter(|&w| w != prev).collect();
                        match next.as_slice() {
                            [w] => {
                                prev = cur;
                                cur = *w;
                                len += 1;
                            }
                            _ => return len,
                        }
                    }
                })
                .collect();
            arms.sort();
            match arms.as_slice() {
                [1, 1, _] => Ok(format!("D{k}")),
                [1, 2, 2] => Ok("E6".into()),
                [1, 2, 3] => Ok("E7".into()),
                [1, 2, 4] => Ok("E8".into()),
                _ => Err(fail("branch arms")),
            }
        }
        1 => {
            if max_deg > 2 {
                return Err(fail("branched multiple bond"));
            }
            let (i, j, b) = *multiple[0];
            if b.mult == 3 {
                return if k == 2 { Ok("G2".into()) } else { Err(fail("triple bond")) };
            }
            if k == 2 {
                return Ok("B2".into());
            }
            let (end, inner) = if degree(i) == 1 {
                (i, j)
            } else if degree(j) == 1 {
                (j, i)
            } else {
                return if k == 4 { Ok("F4".into()) } else { Err(fail("inner double bond")) };
            };
            let _ = inner;
            // the end node is short for B, long for C
            if b.to == end {
                Ok(format!("B{k}"))
            } else {
                Ok(format!("C{k}"))
            }
        }
        _ => Err(fail("several multiple bonds")),
    }
}
