use lieembed::embed::{
    embed_abelian_nilpotent, embed_compact_torus, embed_nilpotent, embed_real_torus, maximal_compact_from_cartan,
    maximal_compact_split, CartanData, EmbeddingTrace, SearchConfig,
};
use lieembed::exactlin::format_rational;
use lieembed::liecore::{
    derived_algebra, killing_form, killing_signature, levi_decomposition, normalizer, Element, LieAlgebra, Subspace,
};
use lieembed::rootsys::{
    conjugation_pairing, dynkin_type, positive_roots, restricted_roots, root_space_decomposition, simple_roots,
    DynkinDiagram, Root, RootSpaceDecomposition,
};
use lieembed::vecfield::{generic_rank, invariant_count, structure_constants, PolyVectorField};
use lieembed::LieError;
use serde_json::{json, Value};

use crate::error::Result;
use crate::input::{load_algebra, load_fields, parse_subspace};
use crate::render::{angle, elements, exact_element, labels, root, root_label, space};
use crate::{corpus, Cli, Command, Format, Mode};

/// Result of one command: the JSON document, its text rendering, and the
/// number of failed corpus cases.
#[derive(Clone, Debug)]
pub struct Output {
    pub json: Value,
    pub text: String,
    pub failures: usize,
}

impl Output {
    fn new(json: Value, text: String) -> Self {
        Output { json, text, failures: 0 }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.json).expect("JSON values serialize") + "\n",
            Format::Text => self.text.clone(),
        }
    }
}

pub fn run(cli: &Cli) -> Result<Output> {
    let cfg = cli.search_config();
    match &cli.command {
        Command::Analyze { input } => analyze(input),
        Command::Embed { input, mode, subspace } => embed(input, *mode, subspace, cfg),
        Command::Roots { input, cartan, ambient } => roots(input, cartan, ambient.as_deref()),
        Command::Dynkin { input, cartan, ambient } => dynkin(input, cartan, ambient.as_deref()),
        Command::VfBrackets { input } => vf_brackets(input),
        Command::VfInvariants { input, subspace } => vf_invariants(input, subspace.as_deref()),
        Command::Verify { corpus } => corpus::verify(corpus),
    }
}

pub fn analyze(input: &str) -> Result<Output> {
    let l = load_algebra(input)?;
    let full = Subspace::full(l.dim());
    let det = killing_form(&l).det();
    let (pos, neg, zero) = killing_signature(&l, None)?;
    let (levi, rad) = levi_decomposition(&l, &full)?;
    let derived = derived_algebra(&l, &full);
    let semisimple = rad.is_zero();
    let json = json!({
        "algebra": input,
        "dim": l.dim(),
        "basis": l.names(),
        "killing": {
            "determinant": format_rational(&det),
            "signature": { "pos": pos, "neg": neg, "zero": zero },
        },
        "semisimple": semisimple,
        "derived": space(&l, &derived),
        "radical": space(&l, &rad),
        "levi": space(&l, &levi),
    });
    let text = format!(
        "algebra {input}, dim {}\nKilling determinant {}\nKilling signature (+{pos}, -{neg}, 0:{zero})\n{}\nradical {}\nLevi factor {}\n",
        l.dim(),
        format_rational(&det),
        if semisimple { "semisimple" } else { "not semisimple" },
        angle(&l, &rad),
        angle(&l, &levi),
    );
    Ok(Output::new(json, text))
}

fn trace_json(l: &LieAlgebra, t: &EmbeddingTrace) -> Value {
    let steps: Vec<Value> = t
        .steps
        .iter()
        .map(|s| {
            let mut v = json!({ "rule": s.rule, "adjoined": elements(l, &s.adjoined), "result": space(l, &s.result) });
            if let Some(w) = &s.witness {
                v["witness"] = json!(l.format_element(w));
            }
            v
        })
        .collect();
    json!({ "algorithm": t.algorithm, "input": space(l, &t.input), "steps": steps, "result": space(l, &t.result) })
}

fn trace_text(l: &LieAlgebra, t: &EmbeddingTrace) -> String {
    let mut out = format!("{} from {}\n", t.algorithm, angle(l, &t.input));
    for s in &t.steps {
        out += &format!("  {}: adjoin {}", s.rule, elements(l, &s.adjoined).join(", "));
        if let Some(w) = &s.witness {
            out += &format!(" (eigenvectors of {})", l.format_element(w));
        }
        out += "\n";
    }
    out + &format!("  result {}\n", angle(l, &t.result))
}

fn check_trace(l: &LieAlgebra, t: &EmbeddingTrace) -> Result<()> {
    t.replay()?;
    t.check_kinds(l)?;
    Ok(())
}

fn cartan_json(l: &LieAlgebra, c: &CartanData) -> Value {
    json!({
        "cartan": space(l, &c.cartan),
        "real_part": space(l, &c.real_part),
        "compact_part": space(l, &c.compact_part),
    })
}

fn compact_json(l: &LieAlgebra, gens: &[Element], k: &Subspace) -> Value {
    json!({ "generators": elements(l, gens), "space": space(l, k), "dim": k.dim() })
}

/// Maximal compact subalgebra when the Cartan subalgebra is split or compact.
fn maximal_compact(l: &LieAlgebra, c: &CartanData, positives: Option<&[Root]>) -> Result<Option<(Vec<Element>, Subspace)>> {
    if c.compact_part.is_zero() {
        let rsd = root_space_decomposition(l, &c.ordered_basis())?;
        return Ok(Some(maximal_compact_split(l, c, &rsd, positives)?));
    }
    if c.real_part.is_zero() {
        return Ok(Some((vec![], maximal_compact_from_cartan(l, c)?)));
    }
    Ok(None)
}

fn compact_value(l: &LieAlgebra, mc: &Option<(Vec<Element>, Subspace)>) -> Value {
    mc.as_ref().map_or(Value::Null, |(g, k)| compact_json(l, g, k))
}

fn compact_text(l: &LieAlgebra, mc: &Option<(Vec<Element>, Subspace)>) -> String {
    match mc {
        Some((g, k)) if g.is_empty() => format!("maximal compact {} (dim {})\n", angle(l, k), k.dim()),
        Some((g, k)) => format!(
            "maximal compact generated by {}: {} (dim {})\n",
            elements(l, g).join(", "),
            angle(l, k),
            k.dim()
        ),
        None => String::new(),
    }
}

pub fn embed(input: &str, mode: Mode, spec: &str, cfg: SearchConfig) -> Result<Output> {
    let l = load_algebra(input)?;
    let u = parse_subspace(&l, spec)?;
    match mode {
        Mode::Torus => {
            let r = embed_real_torus(&l, &u, cfg)?;
            check_trace(&l, &r.trace)?;
            let mc = maximal_compact(&l, &r.cartan, None)?;
            let json = json!({
                "mode": "torus",
                "trace": trace_json(&l, &r.trace),
                "torus": space(&l, &r.torus),
                "cartan": cartan_json(&l, &r.cartan),
                "maximal_compact": compact_value(&l, &mc),
            });
            let text = trace_text(&l, &r.trace)
                + &format!("maximal real torus {}\nCartan subalgebra {}\n", angle(&l, &r.torus), angle(&l, &r.cartan.cartan))
                + &compact_text(&l, &mc);
            Ok(Output::new(json, text))
        }
        Mode::CompactTorus => {
            let (c, trace) = embed_compact_torus(&l, &u, cfg)?;
            check_trace(&l, &trace)?;
            let mc = maximal_compact(&l, &c, None)?;
            let json = json!({
                "mode": "compact-torus",
                "trace": trace_json(&l, &trace),
                "cartan": cartan_json(&l, &c),
                "maximal_compact": compact_value(&l, &mc),
            });
            let text = trace_text(&l, &trace)
                + &format!("Cartan subalgebra {}\n", angle(&l, &c.cartan))
                + &compact_text(&l, &mc);
            Ok(Output::new(json, text))
        }
        Mode::AbelianNilpotent => {
            let trace = embed_abelian_nilpotent(&l, &u, cfg)?;
            check_trace(&l, &trace)?;
            let json = json!({
                "mode": "abelian-nilpotent",
                "trace": trace_json(&l, &trace),
                "result": space(&l, &trace.result),
                "dim": trace.result.dim(),
            });
            Ok(Output::new(json, trace_text(&l, &trace)))
        }
        Mode::Nilpotent => nilpotent(&l, &u, cfg),
    }
}

fn nilpotent(l: &LieAlgebra, u: &Subspace, cfg: SearchConfig) -> Result<Output> {
    let r = embed_nilpotent(l, u, cfg)?;
    check_trace(l, &r.trace)?;
    check_trace(l, &r.torus_trace)?;
    let norm = normalizer(l, &r.nilpotent);
    let torus = r.torus.basis().to_vec();
    let on_nil = restricted_roots(l, &r.nilpotent, &torus)?;
    let rel = on_nil.root_list();
    let rel_simple = simple_roots(&rel);
    let rel_dynkin = dynkin_type(&rel_simple, &rel)?;
    let basis = r.split_cartan.ordered_basis();
    let abs = root_space_decomposition(l, &basis)?;
    let abs_pos = positive_roots(&abs);
    let abs_dynkin = dynkin_type(&simple_roots(&abs_pos), &abs_pos)?;
    // The roots on the nilpotent algebra fix the positive system.
    let mc = if r.split_cartan.compact_part.is_zero() {
        let on_nil_abs = restricted_roots(l, &r.nilpotent, &basis)?.root_list();
        match maximal_compact(l, &r.split_cartan, Some(&on_nil_abs)) {
            Ok(mc) => mc,
            Err(crate::CliError::Lie(LieError::NotSplit(_))) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let json = json!({
        "mode": "nilpotent",
        "trace": trace_json(l, &r.trace),
        "result": space(l, &r.nilpotent),
        "dim": r.nilpotent.dim(),
        "normalizer": space(l, &norm),
        "complement_torus": space(l, &r.complement_torus),
        "torus": space(l, &r.torus),
        "restricted_roots": root_spaces_json(l, &on_nil),
        "simple_roots": rel_simple.iter().map(root).collect::<Vec<_>>(),
        "dynkin": rel_dynkin.label,
        "torus_trace": trace_json(l, &r.torus_trace),
        "split_cartan": cartan_json(l, &r.split_cartan),
        "absolute_dynkin": abs_dynkin.label,
        "maximal_compact": compact_value(l, &mc),
    });
    let mut text = trace_text(l, &r.trace);
    text += &format!("normalizer {}\n", angle(l, &norm));
    text += &format!("torus {}\n", angle(l, &r.torus));
    text += &roots_text(l, &on_nil);
    text += &format!("simple roots {}\nDynkin type {}\n", labels(&rel_simple).join(", "), rel_dynkin.label);
    text += &format!(
        "split Cartan subalgebra {}\nabsolute Dynkin type {}\n",
        angle(l, &r.split_cartan.cartan),
        abs_dynkin.label
    );
    text += &compact_text(l, &mc);
    Ok(Output::new(json, text))
}

fn root_spaces_json(l: &LieAlgebra, rsd: &RootSpaceDecomposition) -> Vec<Value> {
    rsd.roots
        .iter()
        .map(|w| {
            json!({
                "root": root(&w.weight),
                "multiplicity": w.space.len(),
                "space": w.space.iter().map(|v| exact_element(l, v)).collect::<Vec<_>>(),
            })
        })
        .collect()
}

fn roots_text(l: &LieAlgebra, rsd: &RootSpaceDecomposition) -> String {
    rsd.roots
        .iter()
        .map(|w| {
            let sp: Vec<String> = w.space.iter().map(|v| exact_element(l, v)).collect();
            format!("  {}: <{}>\n", root_label(&w.weight), sp.join(", "))
        })
        .collect()
}

struct RootData {
    l: LieAlgebra,
    torus: Vec<Element>,
    ambient: Option<Subspace>,
    rsd: RootSpaceDecomposition,
    positives: Vec<Root>,
    simples: Vec<Root>,
}

/// Roots of the torus given in order by `cartan`. With an ambient subspace all
/// of its roots are taken as positive.
fn root_data(input: &str, cartan: &str, ambient: Option<&str>) -> Result<RootData> {
    let l = load_algebra(input)?;
    let torus = l.parse_elements(cartan)?;
    let ambient = ambient.map(|a| parse_subspace(&l, a)).transpose()?;
    let rsd = match &ambient {
        Some(a) => restricted_roots(&l, a, &torus)?,
        None => root_space_decomposition(&l, &torus)?,
    };
    let positives = if ambient.is_some() { rsd.root_list() } else { positive_roots(&rsd) };
    let simples = simple_roots(&positives);
    Ok(RootData { l, torus, ambient, rsd, positives, simples })
}

pub fn roots(input: &str, cartan: &str, ambient: Option<&str>) -> Result<Output> {
    let d = root_data(input, cartan, ambient)?;
    let l = &d.l;
    let diagram: Option<DynkinDiagram> = dynkin_type(&d.simples, &d.positives).ok();
    let conj = conjugation_pairing(&d.rsd).ok();
    let json = json!({
        "torus": elements(l, &d.torus),
        "ambient": d.ambient.as_ref().map(|a| space(l, a)),
        "extension": d.rsd.extension,
        "zero_space": space(l, &d.rsd.zero_space),
        "roots": root_spaces_json(l, &d.rsd),
        "positive": labels(&d.positives),
        "simple": d.simples.iter().map(root).collect::<Vec<_>>(),
        "conjugation": conj,
        "dynkin": diagram,
    });
    let mut text = format!("torus {}\n", elements(l, &d.torus).join(", "));
    text += &format!("zero space {}\n", angle(l, &d.rsd.zero_space));
    text += &roots_text(l, &d.rsd);
    text += &format!("simple roots {}\n", labels(&d.simples).join(", "));
    if let Some(g) = &diagram {
        text += &format!("Dynkin type {}\n", g.label);
    }
    Ok(Output::new(json, text))
}

pub fn dynkin(input: &str, cartan: &str, ambient: Option<&str>) -> Result<Output> {
    let d = root_data(input, cartan, ambient)?;
    let g = dynkin_type(&d.simples, &d.positives)?;
    let mut text = format!("{}\n", g.label);
    for (i, j, b) in &g.bonds {
        let arrow = if b.mult > 1 { format!(", arrow {} -> {}", b.from, b.to) } else { String::new() };
        text += &format!("  {} - {}: {}{arrow}\n", root_label(&g.nodes[*i]), root_label(&g.nodes[*j]), b.mult);
    }
    let json = json!({ "type": g.label, "simple": labels(&d.simples), "diagram": g });
    Ok(Output::new(json, text))
}

pub fn vf_brackets(input: &str) -> Result<Output> {
    let set = load_fields(input)?;
    let l = structure_constants(&set)?;
    let mut text = String::new();
    for i in 0..l.dim() {
        for j in i + 1..l.dim() {
            let b = l.bracket_basis(i, j);
            if !b.is_zero() {
                text += &format!("[{}, {}] = {}\n", l.names()[i], l.names()[j], l.format_element(&b));
            }
        }
    }
    let json = serde_json::to_value(l.to_json()).expect("algebra serializes");
    Ok(Output::new(json, text))
}

pub fn vf_invariants(input: &str, spec: Option<&str>) -> Result<Output> {
    let set = load_fields(input)?;
    let (names, fields): (Vec<String>, Vec<PolyVectorField>) = match spec {
        None => (set.names(), set.fields.clone()),
        Some(s) => {
            let l = structure_constants(&set)?;
            let elems = l.parse_elements(s)?;
            (elements(&l, &elems), elems.iter().map(|e| set.combine(e)).collect())
        }
    };
    let n = set.vars.len();
    let rank = generic_rank(&fields);
    let count = invariant_count(n, &fields);
    let json = json!({ "vars": set.vars, "fields": names, "rank": rank, "invariants": count });
    let text = format!("{} fields in {n} variables: generic rank {rank}, {count} invariants\n", fields.len());
    Ok(Output::new(json, text))
}
