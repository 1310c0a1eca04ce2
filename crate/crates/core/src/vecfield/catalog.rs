use num_traits::{One, Zero};

use super::field::{structure_constants, FieldSet, PolyVectorField};
use super::mpoly::MPoly;
use super::tables;
use crate::error::{LieError, Result};
use crate::exactlin::{int, RatMatrix, Rational};
use crate::liecore::{Element, LieAlgebra};

const WAVE_VARS: [&str; 5] = ["t", "x", "y", "z", "u"];

const WAVE_FIELDS: [(&str, [&str; 5]); 16] = [
    ("e1", ["y*t", "x*y", "1/2*y^2+1/2*t^2-1/2*x^2-1/2*z^2", "y*z", "-u*y"]),
    ("e2", ["y", "0", "t", "0", "0"]),
    ("e3", ["x*t", "1/2*x^2+1/2*t^2-1/2*y^2-1/2*z^2", "x*y", "x*z", "-u*x"]),
    ("e4", ["x", "t", "0", "0", "0"]),
    ("e5", ["z*t", "z*x", "y*z", "1/2*z^2+1/2*t^2-1/2*y^2-1/2*x^2", "-u*z"]),
    ("e6", ["z", "0", "0", "t", "0"]),
    ("e7", ["t", "x", "y", "z", "0"]),
    ("e8", ["1", "0", "0", "0", "0"]),
    ("e9", ["t^2+x^2+y^2+z^2", "2*t*x", "2*t*y", "2*t*z", "-2*u*t"]),
    ("e10", ["0", "0", "1", "0", "0"]),
    ("e11", ["0", "1", "0", "0", "0"]),
    ("e12", ["0", "0", "0", "1", "0"]),
    ("e13", ["0", "0", "z", "-y", "0"]),
    ("e14", ["0", "z", "0", "-x", "0"]),
    ("e15", ["0", "-y", "x", "0", "0"]),
    ("e16", ["0", "0", "0", "0", "u"]),
];

/// Point symmetries `(xi, eta, phi)` of `v' = (u'')^2` in the variables
/// `(x, u, v)`, written with `u1 = u'` and `u2 = u''`.
const G2_BASE: [(&str, [&str; 3]); 14] = [
    ("X1", ["2/3*u1^2-u*u2", "1/2*u*v+4/9*u1^3-u*u1*u2", "1/2*v^2-1/3*u*u2^3"]),
    (
        "X2",
        [
            "4/3*x^2*u1-2*x*u-1/3*x^3*u2",
            "1/6*x^3*v+2/3*x^2*u1^2-2*u^2-1/3*x^3*u1*u2",
            "2*x*u1*v-2*u*v-1/9*x^3*u2^3-8/9*u1^3",
        ],
    ),
    ("X3", ["8/3*x*u1-2*u-x^2*u2", "1/2*x^2*v+4/3*x*u1^2-x^2*u1*u2", "2*v*u1-1/3*x^2*u2^3"]),
    ("X4", ["8/3*u1-2*x*u2", "x*v+4/3*u1^2-2*x*u1*u2", "-2/3*x*u2^3"]),
    ("X5", ["-2*u2", "v-2*u1*u2", "-2/3*u2^3"]),
    ("X6", ["0", "1/2*u", "v"]),
    ("X7", ["-1/2*x^2", "-3/2*x*u", "-2*u1^2"]),
    ("X8", ["-x", "-3/2*u", "0"]),
    ("X9", ["1", "0", "0"]),
    ("X10", ["0", "1/6*x^3", "2*x*u1-2*u"]),
    ("X11", ["0", "1/2*x^2", "2*u1"]),
    ("X12", ["0", "x", "0"]),
    ("X13", ["0", "1", "0"]),
    ("X14", ["0", "0", "1"]),
];

pub const CATALOG_NAMES: [&str; 5] = ["wave16", "wave15", "g2", "sl2", "so(p,q)"];

fn parse_fields(vars: &[&str], defs: &[(&str, Vec<&str>)]) -> Result<Vec<PolyVectorField>> {
    defs.iter()
        .map(|(name, comps)| {
            Ok(PolyVectorField {
                name: name.to_string(),
                components: comps.iter().map(|c| MPoly::parse(c, vars)).collect::<Result<_>>()?,
            })
        })
        .collect()
}

/// Conformal symmetries of the wave equation `u_tt = u_xx + u_yy + u_zz`
/// together with the scaling `u d/du`.
pub fn wave16() -> FieldSet {
    let defs: Vec<(&str, Vec<&str>)> = WAVE_FIELDS.iter().map(|(n, c)| (*n, c.to_vec())).collect();
    FieldSet {
        vars: WAVE_VARS.iter().map(|s| s.to_string()).collect(),
        fields: parse_fields(&WAVE_VARS, &defs).expect("wave catalog parses"),
    }
}

/// The wave fields with `e7` and `e16` replaced by `e7m16 = e7 - e16`, which
/// spans a semisimple algebra.
pub fn wave15() -> FieldSet {
    let w = wave16();
    let mut fields = vec![];
    for f in &w.fields {
        match f.name.as_str() {
            "e16" => {}
            "e7" => {
                let e16 = w.by_name("e16").unwrap();
                let mut g = f.add(&e16.scale(&-Rational::one()));
                g.name = "e7m16".into();
                fields.push(g);
            }
            _ => fields.push(f.clone()),
        }
    }
    FieldSet { vars: w.vars, fields }
}

/// Second prolongation of the `G2` symmetries: components along
/// `(x, u, v, u1, u2)`.
pub fn g2() -> FieldSet {
    let jet = ["x", "u", "v", "u1", "u2", "u3"];
    let n = jet.len();
    let var = |i| MPoly::var(n, i);
    // total derivative on solutions: v' = u2^2
    let total = |f: &MPoly| -> MPoly {
        f.diff(0)
            .add(&var(3).mul(&f.diff(1)))
            .add(&var(4).mul(&var(4)).mul(&f.diff(2)))
            .add(&var(4).mul(&f.diff(3)))
            .add(&var(5).mul(&f.diff(4)))
    };
    let mut fields = vec![];
    for (name, comps) in G2_BASE {
        let base: Vec<MPoly> = comps.iter().map(|c| MPoly::parse(c, &jet).expect("g2 catalog parses")).collect();
        let dxi = total(&base[0]);
        let eta1 = total(&base[1]).sub(&var(3).mul(&dxi));
        let eta2 = total(&eta1).sub(&var(4).mul(&dxi));
        let components: Vec<MPoly> = base.into_iter().chain([eta1, eta2]).map(|c| c.drop_var(5)).collect();
        fields.push(PolyVectorField { name: name.into(), components });
    }
    FieldSet { vars: jet[..5].iter().map(|s| s.to_string()).collect(), fields }
}

pub fn vector_fields(name: &str) -> Result<FieldSet> {
    match name {
        "wave16" => Ok(wave16()),
        "wave15" => Ok(wave15()),
        "g2" => Ok(g2()),
        _ => Err(LieError::UnknownCatalog(name.into())),
    }
}

/// `so(p, q)`: matrices `A` with `A^T g + g A = 0` for `g = diag(1^p, (-1)^q)`.
/// Basis element `k` belongs to the pair `i < j` in lexicographic order and is
/// `E_ij - E_ji` when `g_ii g_jj = 1`, `E_ij + E_ji` otherwise.
pub fn so_pq(p: usize, q: usize) -> LieAlgebra {
    let n = p + q;
    let g: Vec<i64> = (0..n).map(|i| if i < p { 1 } else { -1 }).collect();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mats: Vec<RatMatrix> = pairs
        .iter()
        .map(|&(i, j)| {
            let mut m = RatMatrix::zeros(n, n);
            m[(i, j)] = int(1);
            m[(j, i)] = int(if g[i] * g[j] == 1 { -1 } else { 1 });
            m
        })
        .collect();
    let d = pairs.len();
    let mut br = vec![];
    for a in 0..d {
        for b in a + 1..d {
            let c = mats[a].mul(&mats[b]).sub(&mats[b].mul(&mats[a]));
            let terms: Vec<(usize, Rational)> = pairs
                .iter()
                .enumerate()
                .map(|(k, &(i, j))| (k, c[(i, j)].clone()))
                .filter(|(_, x)| !x.is_zero())
                .collect();
            if !terms.is_empty() {
                br.push((a, b, terms));
            }
        }
    }
    let names = (1..=d).map(|k| format!("e{k}")).collect();
    LieAlgebra::new(names, &br).expect("so(p,q) satisfies Jacobi")
}

/// `sl(2, R)` on the standard basis `H, X, Y`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::new(
        vec!["H".into(), "X".into(), "Y".into()],
        &[(0, 1, vec![(1, int(2))]), (0, 2, vec![(2, int(-2))]), (1, 2, vec![(0, int(1))])],
    )
    .expect("sl2 satisfies Jacobi")
}

fn parse_so(name: &str) -> Option<(usize, usize)> {
    let inner = name.strip_prefix("so(")?.strip_suffix(')')?;
    let (p, q) = inner.split_once(',')?;
    Some((p.trim().parse().ok()?, q.trim().parse().ok()?))
}

/// Catalog algebras by name: `wave16`, `wave15`, `g2`, `sl2`, `so(p,q)`.
pub fn algebra(name: &str) -> Result<LieAlgebra> {
    if let Some((p, q)) = parse_so(name) {
        if p + q < 2 {
            return Err(LieError::UnknownCatalog(name.into()));
        }
        return Ok(so_pq(p, q));
    }
    match name {
        "sl2" => Ok(sl2()),
        _ => structure_constants(&vector_fields(name)?),
    }
}

/// Tabulated brackets for a vector field catalog, as an algebra on the same
/// basis names.
pub fn reference_table(name: &str) -> Result<LieAlgebra> {
    let (names, rows): (Vec<String>, &[(usize, usize, &str)]) = match name {
        "wave16" => ((1..=16).map(|k| format!("e{k}")).collect(), tables::WAVE16),
        "g2" => ((1..=14).map(|k| format!("X{k}")).collect(), tables::G2),
        _ => return Err(LieError::UnknownCatalog(name.into())),
    };
    table_algebra(names, rows)
}

/// Builds an algebra from one-based `(i, j, expression)` rows.
pub fn table_algebra(names: Vec<String>, rows: &[(usize, usize, &str)]) -> Result<LieAlgebra> {
    let free = LieAlgebra::new(names.clone(), &[])?;
    let mut br = vec![];
    for (i, j, expr) in rows {
        let e: Element = free.parse_element(expr)?;
        let terms = e.0.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
        br.push((i - 1, j - 1, terms));
    }
    LieAlgebra::new(names, &br)
}
