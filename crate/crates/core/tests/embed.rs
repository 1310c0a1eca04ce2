use lieembed::embed::{
    embed_abelian_nilpotent, embed_compact_torus, embed_nilpotent, embed_real_torus, maximal_compact_from_cartan,
    maximal_compact_split, SearchConfig,
};
use lieembed::exactlin::int;
use lieembed::liecore::{
    centralizer, is_ad_nilpotent, is_subalgebra, killing_signature, normalizer, Element, LieAlgebra, Subspace,
};
use lieembed::rootsys::{restricted_roots, root_space_decomposition};
use lieembed::vecfield::algebra;

fn span(l: &LieAlgebra, s: &str) -> Subspace {
    if s.is_empty() {
        return Subspace::zero(l.dim());
    }
    Subspace::span(l.dim(), &l.parse_elements(s).unwrap())
}

fn cfg() -> SearchConfig {
    SearchConfig::default()
}

#[test]
fn real_torus_small_cases() {
    let l = algebra("so(2,2)").unwrap();
    let r = embed_real_torus(&l, &span(&l, "e2"), cfg()).unwrap();
    assert_eq!(r.torus, span(&l, "e2, e5"));
    assert_eq!(r.trace.replay().unwrap(), r.torus);

    let l = algebra("so(1,3)").unwrap();
    let r = embed_real_torus(&l, &span(&l, "e1"), cfg()).unwrap();
    assert_eq!(r.torus, span(&l, "e1"));
    assert_eq!(r.cartan.cartan, span(&l, "e1, e6"));

    let l = algebra("so(4,0)").unwrap();
    let r = embed_real_torus(&l, &span(&l, ""), cfg()).unwrap();
    assert!(r.torus.is_zero());
    assert_eq!(r.cartan.cartan, span(&l, "e1, e6"));
    let (c, _) = embed_compact_torus(&l, &span(&l, "e1"), cfg()).unwrap();
    assert_eq!(c.cartan, span(&l, "e1, e6"));
}

#[test]
fn wave_compact_cartan_and_maximal_compact() {
    let l = algebra("wave15").unwrap();
    let (c, trace) = embed_compact_torus(&l, &span(&l, "e15"), cfg()).unwrap();
    assert_eq!(c.cartan, span(&l, "2*e12+e5, e9+4*e8, e15"));
    trace.replay().unwrap();
    trace.check_kinds(&l).unwrap();
    let k = maximal_compact_from_cartan(&l, &c).unwrap();
    let want = span(
        &l,
        "e1+2*e10-2*e14, e3+2*e11+2*e13, -4*e5-8*e12+8*e15, e1+2*e10+2*e14, -e3-2*e11+2*e13, -4*e5-8*e12-8*e15, 4*e8+e9",
    );
    assert_eq!(k, want);
    assert_eq!(killing_signature(&l, None).unwrap().1, 7);
    let k1 = span(&l, "e1+2*e10-2*e14, e3+2*e11+2*e13, -4*e5-8*e12+8*e15");
    let k2e = span(&l, "e1+2*e10+2*e14, -e3-2*e11+2*e13, -4*e5-8*e12-8*e15, 4*e8+e9");
    assert_eq!(centralizer(&l, &k1), k2e);
}

#[test]
fn wave_nilpotent_pipeline() {
    let l = algebra("wave15").unwrap();
    let r = embed_nilpotent(&l, &span(&l, "e8, e10, e11, e12"), cfg()).unwrap();
    for s in &r.trace.steps {
        println!("{} {:?}", s.rule, s.adjoined.iter().map(|e| l.format_element(e)).collect::<Vec<_>>());
    }
    assert_eq!(r.nilpotent, span(&l, "e8, e10, e11, e12, -e15+e4, -e13+e6"));
    assert_eq!(r.torus, span(&l, "e2, e7m16"));
    assert_eq!(r.split_cartan.cartan, span(&l, "e2, e7m16, e14"));
    r.trace.replay().unwrap();
    r.trace.check_kinds(&l).unwrap();
}

#[test]
fn g2_nilpotent_pipeline_and_compact() {
    let l = algebra("g2").unwrap();
    let r = embed_nilpotent(&l, &span(&l, "X14, X13, X12"), cfg()).unwrap();
    for s in &r.trace.steps {
        println!("{} {:?}", s.rule, s.adjoined.iter().map(|e| l.format_element(e)).collect::<Vec<_>>());
    }
    assert_eq!(r.nilpotent, span(&l, "X5, X14, X13, X12, X11, X9"));
    assert_eq!(r.split_cartan.cartan, span(&l, "X6, X8"));
    assert_eq!(centralizer(&l, &r.split_cartan.cartan), r.split_cartan.cartan);
    let rsd = root_space_decomposition(&l, &r.split_cartan.ordered_basis()).unwrap();
    let on_nil = restricted_roots(&l, &r.nilpotent, &r.split_cartan.ordered_basis()).unwrap();
    let (gens, k) = maximal_compact_split(&l, &r.split_cartan, &rsd, Some(&on_nil.root_list())).unwrap();
    assert_eq!(gens, l.parse_elements("-X4+X11, X5+X10").unwrap());
    println!("{:?}", gens.iter().map(|e| l.format_element(e)).collect::<Vec<_>>());
    assert_eq!(k.dim(), 6);
    assert_eq!(killing_signature(&l, None).unwrap().1, 6);
    assert_eq!(k, span(&l, "X5+X10, X4-X11, X1+3/8*X14, X2-3/4*X13, X3+3/4*X12, X7-3/2*X9"));
}

#[test]
fn sl2_rank_one() {
    let l = algebra("sl2").unwrap();
    let r = embed_nilpotent(&l, &span(&l, "X"), cfg()).unwrap();
    assert_eq!(r.nilpotent, span(&l, "X"));
    assert_eq!(r.torus, span(&l, "H"));
    assert_eq!(r.split_cartan.cartan, span(&l, "H"));
    let t = embed_abelian_nilpotent(&l, &span(&l, "X"), cfg()).unwrap();
    assert_eq!(t.result, span(&l, "X"));
}

/// Nonzero combinations of `vs` with coefficients in `-2..=2`.
fn grid(l: &LieAlgebra, vs: &[Element]) -> Vec<Element> {
    let mut out = vec![Element::zero(l.dim())];
    for v in vs {
        out = out
            .iter()
            .flat_map(|e| (-2i64..=2).map(move |c| e.axpy(&int(c), v)))
            .collect();
    }
    out.into_iter().filter(|e| !e.is_zero()).collect()
}

fn ad_nilpotent(l: &LieAlgebra, x: &Element) -> bool {
    l.ad(x).pow(l.dim() as u32).is_zero()
}

/// No element of the centralizer outside `u` is ad-nilpotent. Since such an
/// element commutes with `u`, this is what keeps `u` from growing.
fn assert_maximal_abelian_nilpotent(l: &LieAlgebra, u: &Subspace) {
    let outside = u.complement_in(&centralizer(l, u));
    assert!(outside.len() <= 6, "grid too large: {}", outside.len());
    for x in grid(l, &outside) {
        assert!(!ad_nilpotent(l, &x), "{} extends the abelian nilpotent algebra", l.format_element(&x));
    }
}

/// No element of the normalizer outside `u` extends it to an ad-nilpotent
/// subalgebra. A larger nilpotent algebra would normalize `u` properly.
fn assert_maximal_nilpotent(l: &LieAlgebra, u: &Subspace) {
    let outside = u.complement_in(&normalizer(l, u));
    for x in grid(l, &outside) {
        let v = u.extend(std::slice::from_ref(&x));
        assert!(
            !(is_subalgebra(l, &v) && is_ad_nilpotent(l, &v)),
            "{} extends the nilpotent algebra",
            l.format_element(&x)
        );
    }
}

#[test]
fn wave_abelian_nilpotent_is_maximal() {
    let l = algebra("wave15").unwrap();
    let t = embed_abelian_nilpotent(&l, &span(&l, "e8+e10"), cfg()).unwrap();
    assert_eq!(t.result, span(&l, "e8+e10, e4+e15, e6+e13, e1-1/2*e9"));
    assert_eq!(t.replay().unwrap(), t.result);
    t.check_kinds(&l).unwrap();
    assert_maximal_abelian_nilpotent(&l, &t.result);
    // the translations give another maximal one of the same dimension
    let translations = span(&l, "e8, e10, e11, e12");
    assert_maximal_abelian_nilpotent(&l, &translations);
    let t = embed_abelian_nilpotent(&l, &translations, cfg()).unwrap();
    assert!(t.steps.is_empty());
}

#[test]
fn nilpotent_results_are_maximal() {
    for (name, start) in [("wave15", "e8, e10, e11, e12"), ("g2", "X14, X13, X12"), ("sl2", "X"), ("so(2,2)", "")] {
        let l = algebra(name).unwrap();
        let r = embed_nilpotent(&l, &span(&l, start), cfg()).unwrap();
        assert_eq!(r.trace.replay().unwrap(), r.nilpotent, "{name}");
        r.trace.check_kinds(&l).unwrap();
        r.torus_trace.check_kinds(&l).unwrap();
        assert_maximal_nilpotent(&l, &r.nilpotent);
    }
}

#[test]
fn real_tori_are_self_maximal() {
    for (name, start) in [("so(2,2)", "e2"), ("so(1,3)", "e1"), ("wave15", "e2"), ("wave15", "e7m16"), ("g2", "X6"), ("sl2", "H")] {
        let l = algebra(name).unwrap();
        let r = embed_real_torus(&l, &span(&l, start), cfg()).unwrap();
        assert_eq!(r.trace.replay().unwrap(), r.torus, "{name}");
        r.trace.check_kinds(&l).unwrap();
        let again = embed_real_torus(&l, &r.torus, cfg()).unwrap();
        assert!(again.trace.steps.is_empty(), "{name} from {start}");
        assert_eq!(again.torus, r.torus);
        assert_eq!(again.cartan, r.cartan);
        assert_eq!(centralizer(&l, &r.cartan.cartan), r.cartan.cartan, "{name}: Cartan not self-centralizing");
    }
}
