//! One function per subcommand. Each drives library operations and records
//! the results and checked claims in the report.

use std::collections::BTreeMap;
use std::fs::File;
use std::path::Path;

use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use tropgrass::exactalg::fano::{fano_order, fano_weight, fano_weight_prime, special_cubic};
use tropgrass::exactalg::{
    expand_on_generic_matrix, hilbert_data, intersect_ideals, plucker_ideal, Field, IdealHandle,
    TermOrder,
};
use tropgrass::g36::algebra::{
    ffgg_components, plucker_ideal_36, sagbi_initial_minors, sagbi_ring, sagbi_toric_ideal,
    sagbi_weight_matrix, SAGBI_INITIAL_MINORS,
};
use tropgrass::g36::{
    bipyramid_identity_holds, build_delta, build_g36, facet_census, facet_cone_sample,
    facet_cone_sample_named, fff_triangles, link_of, parse_face, sum_of_vertices, tripartitions,
    FacetClass, TRIANGLE_LINKS,
};
use tropgrass::minplus::tropical_minors;
use tropgrass::rat::{format_rat, parse_rat};
use tropgrass::treespace::{
    additive_linkage, double_factorial_count, j_sigma, random_trivalent_tree, tn_complex,
    tree_weight, PairDissimilarity,
};
use tropgrass::troplin::{
    circuits, dual, full_type_g36, is_bounded_face, reconstruct_plucker, ReconstructBound,
    TropicalPlane, BIPYRAMID_TYPE, EEEE_TYPE, SAGBI_TYPE,
};
use tropgrass::{PlueckerVector, Rat};

use crate::report::Report;
use crate::{CliError, RunConfig, VectorSource};

fn field(cfg: &RunConfig) -> Result<Field, CliError> {
    Ok(Field::from_characteristic(cfg.characteristic.unwrap_or(0))?)
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    let file = File::open(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_reader(file).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn parse_rats(s: &str) -> Result<Vec<Rat>, CliError> {
    s.split(',')
        .map(|t| parse_rat(t.trim()).map_err(|e| CliError::Input(format!("{t:?}: {e}"))))
        .collect()
}

fn rats_json(v: &[Rat]) -> Value {
    v.iter().map(format_rat).collect::<Vec<_>>().into()
}

fn load_vector(source: &VectorSource) -> Result<(PlueckerVector, Option<FacetClass>), CliError> {
    match (&source.plucker, &source.sample) {
        (Some(path), _) => Ok((PlueckerVector::from_json(&read_json(path)?)?, None)),
        (None, Some(name)) => {
            let (v, class) = facet_cone_sample_named(name)?;
            Ok((PlueckerVector::from_rats(3, 6, v)?, Some(class)))
        }
        (None, None) => Err(CliError::Input("give --plucker or --sample".into())),
    }
}

fn load_ideal(path: &Path, cfg: &RunConfig) -> Result<IdealHandle, CliError> {
    let mut value = read_json(path)?;
    if let (Some(c), Some(obj)) = (cfg.characteristic, value.as_object_mut()) {
        obj.insert("characteristic".into(), c.into());
    }
    Ok(IdealHandle::from_json(&value)?.with_budget(cfg.budget))
}

fn checkpoint(stage: &str) {
    eprintln!("checkpoint: {stage}");
}

pub fn tree_reconstruct(
    csv: &Path,
    newick: Option<&Path>,
    report: &mut Report,
) -> Result<(), CliError> {
    let file = File::open(csv).map_err(|e| CliError::Input(format!("{}: {e}", csv.display())))?;
    let d = PairDissimilarity::read_distance_csv(file)?;
    report.set("n", d.n());
    let violation = d.four_point_violation();
    report.claim("four-point condition", true, violation.is_none());
    if let Some(q) = violation {
        report.set(
            "violating_leaves",
            q.iter().map(|i| i + 1).collect::<Vec<_>>(),
        );
        return Ok(());
    }
    let t = additive_linkage(&d)?;
    report.claim(
        "tree distances reproduce the input",
        true,
        t.to_dissimilarity() == d,
    );
    report.set("newick", t.to_newick());
    report.set("tree", t.to_json());
    if let Some(path) = newick {
        std::fs::write(path, t.to_newick() + "\n")?;
    }
    Ok(())
}

pub fn treespace_stats(n: usize, report: &mut Report) -> Result<(), CliError> {
    let k = tn_complex(n)?;
    let f = k.f_vector();
    let facets = k.maximal_faces().len();
    report.set("f_vector", f.clone());
    report.set("facets", facets);
    report.claim(
        "vertices = 2^(n-1) - n - 1",
        (1usize << (n - 1)) - n - 1,
        f[0],
    );
    report.claim(
        "facets = (2n-5)!!",
        double_factorial_count(n) as u64,
        facets as u64,
    );
    report.claim(
        "pure of dimension n - 4",
        true,
        k.is_pure() && f.len() == n - 3,
    );
    if n == 5 {
        let degrees = k.edges().iter().flat_map(|&(a, b)| [a, b]).counts();
        report.claim("edges", 15, f[1]);
        report.claim(
            "3-regular",
            true,
            degrees.len() == 10 && degrees.values().all(|&d| d == 3),
        );
    }
    Ok(())
}

pub fn treespace_verify_initial(
    n: usize,
    trees: usize,
    cfg: &RunConfig,
    report: &mut Report,
) -> Result<(), CliError> {
    let field = field(cfg)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let ideal = plucker_ideal(2, n, field)?.with_budget(cfg.budget);
    for _ in 0..trees {
        let t = random_trivalent_tree(n, &mut rng)?;
        let init = ideal.initial_ideal(&tree_weight(&t))?;
        let js = IdealHandle::new(ideal.ring(), j_sigma(&t, field)?)?;
        report.claim(
            format!("in_w = J_sigma for {}", t.to_newick()),
            true,
            init.equals(&js)?,
        );
    }
    Ok(())
}

pub fn g36_verify(
    homology: bool,
    links: bool,
    cones: bool,
    cfg: &RunConfig,
    report: &mut Report,
) -> Result<(), CliError> {
    let delta = build_delta();
    report.claim(
        "f-vector of the full complex",
        json!([65, 550, 1410, 1065, 15]),
        json!(delta.f_vector()),
    );
    let g = build_g36();
    report.claim(
        "f-vector",
        json!([65, 550, 1395, 1035]),
        json!(g.f_vector()),
    );
    let census: BTreeMap<String, usize> = facet_census(&g)
        .into_iter()
        .map(|(c, k)| (c.map_or("unclassified".to_string(), |c| c.to_string()), k))
        .collect();
    let expected: BTreeMap<String, usize> = FacetClass::ALL
        .iter()
        .zip([30, 90, 90, 180, 240, 360, 45])
        .map(|(c, k)| (c.to_string(), k))
        .collect();
    report.claim("facet census", json!(expected), json!(census));
    let non_faces = g.minimal_non_faces(3).len();
    let fff_missing = fff_triangles().len();
    report.claim("minimal non-faces with three vertices", 15, non_faces);
    report.claim("FFF triangles", 15, fff_missing);
    report.claim(
        "bipyramid identity for all tripartitions",
        true,
        tripartitions().into_iter().all(bipyramid_identity_holds),
    );
    if homology {
        checkpoint("homology");
        report.claim(
            "Betti numbers",
            json!([1, 0, 0, 126]),
            json!(g.homology().betti),
        );
    }
    if links {
        for l in TRIANGLE_LINKS.iter() {
            let link = link_of(&g, &parse_face(&l.triangle)?)?;
            let got: Vec<String> = link
                .iter()
                .flatten()
                .map(|v| v.to_string())
                .sorted()
                .collect();
            let want: Vec<String> = l.link.iter().map(|s| s.to_string()).sorted().collect();
            report.claim(
                format!("link of {} {}", l.class, l.triangle.join(" ")),
                json!(want),
                json!(got),
            );
        }
    }
    if cones {
        let ideal = plucker_ideal_36(field(cfg)?)?.with_budget(cfg.budget);
        for class in FacetClass::ALL {
            checkpoint(&format!("cone {class}"));
            let free = ideal.is_monomial_free(&facet_cone_sample(class))?;
            report.claim(format!("{class} sample monomial-free"), true, free.free);
        }
    }
    Ok(())
}

fn expected_type(class: FacetClass) -> Option<&'static [&'static str]> {
    match class {
        FacetClass::EEFF1 => Some(&SAGBI_TYPE),
        FacetClass::FFGG => Some(&BIPYRAMID_TYPE),
        _ => None,
    }
}

pub fn plane_type(source: &VectorSource, report: &mut Report) -> Result<(), CliError> {
    let (w, class) = load_vector(source)?;
    let plane = TropicalPlane::new(w)?;
    let faces = plane.maximal_faces()?;
    let mut contained = true;
    for f in &faces {
        contained &= plane.contains(&f.interior_point)?;
    }
    report.claim("interior points lie on the plane", true, contained);
    if let Some(class) = class {
        let count = if class == FacetClass::EEEE { 27 } else { 28 };
        report.claim("maximal faces", count, faces.len());
        if let Some(listed) = expected_type(class) {
            let want: Vec<String> = full_type_g36(listed)
                .iter()
                .map(|p| p.to_string())
                .collect();
            let got: Vec<String> = faces.iter().map(|f| f.partition.to_string()).collect();
            report.claim("type", json!(want), json!(got));
        }
        if class == FacetClass::EEEE {
            report.set(
                "reference_type_up_to_relabelling",
                json!(full_type_g36(&EEEE_TYPE)
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()),
            );
        }
    }
    report.set(
        "type",
        faces
            .iter()
            .map(|f| f.partition.to_string())
            .collect::<Vec<_>>(),
    );
    report.set(
        "faces",
        faces
            .iter()
            .map(|f| {
                json!({
                    "partition": f.partition.to_string(),
                    "bounded": is_bounded_face(&f.partition),
                    "interior_point": rats_json(&f.interior_point),
                })
            })
            .collect::<Vec<_>>(),
    );
    Ok(())
}

pub fn plane_member(source: &VectorSource, x: &str, report: &mut Report) -> Result<(), CliError> {
    let (w, _) = load_vector(source)?;
    let plane = TropicalPlane::new(w)?;
    let x = parse_rats(x)?;
    let violated = plane.violated_circuits(&x)?;
    report.set("point", rats_json(&x));
    report.set("member", violated.is_empty());
    report.set(
        "violated_circuits",
        violated
            .iter()
            .map(|s| s.iter().map(|i| (i + 1).to_string()).join(""))
            .collect::<Vec<_>>(),
    );
    Ok(())
}

pub fn plane_dual(source: &VectorSource, report: &mut Report) -> Result<(), CliError> {
    let (w, _) = load_vector(source)?;
    let dw = dual(&w);
    report.claim("dual of the dual is w", true, dual(&dw) == w);
    report.set("dual", dw.to_json());
    report.set(
        "circuits",
        circuits(&dw)?
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>(),
    );
    Ok(())
}

pub fn plane_reconstruct(source: &VectorSource, report: &mut Report) -> Result<(), CliError> {
    let (w, _) = load_vector(source)?;
    let plane = TropicalPlane::new(w.clone())?;
    let bound = ReconstructBound::of(&w)?;
    // The oracle only answers membership queries; w itself is not consulted.
    let got = reconstruct_plucker(
        |x| plane.violated_circuits(x).expect("point has n coordinates"),
        plane.d(),
        plane.n(),
        &bound,
    )?;
    report.claim("recovered modulo lineality", true, got.eq_mod_phi(&w)?);
    report.set("reconstructed", got.to_json());
    Ok(())
}

pub fn groebner_initial(
    ideal: &Path,
    w: &str,
    cfg: &RunConfig,
    report: &mut Report,
) -> Result<(), CliError> {
    let ideal = load_ideal(ideal, cfg)?;
    let init = ideal.initial_ideal(&parse_rats(w)?)?;
    report.set("initial_ideal", init.to_json());
    Ok(())
}

pub fn groebner_monomial_free(
    ideal: &Path,
    w: &str,
    cfg: &RunConfig,
    report: &mut Report,
) -> Result<(), CliError> {
    let ideal = load_ideal(ideal, cfg)?;
    let m = ideal.is_monomial_free(&parse_rats(w)?)?;
    report.set("monomial_free", m.free);
    report.set("witness", m.witness.map(|p| p.to_string()));
    Ok(())
}

pub fn groebner_degree(ideal: &Path, cfg: &RunConfig, report: &mut Report) -> Result<(), CliError> {
    let ideal = load_ideal(ideal, cfg)?;
    let h = hilbert_data(&ideal, &TermOrder::degrevlex(ideal.ring().nvars()))?;
    report.set("degree", h.degree.to_string());
    report.set("dimension", h.dimension);
    report.set(
        "numerator",
        h.numerator
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>(),
    );
    Ok(())
}

pub fn groebner_intersect(
    ideal: &Path,
    other: &Path,
    cfg: &RunConfig,
    report: &mut Report,
) -> Result<(), CliError> {
    let a = load_ideal(ideal, cfg)?;
    let b = load_ideal(other, cfg)?;
    report.set("intersection", intersect_ideals(&a, &b)?.to_json());
    Ok(())
}

pub fn char7_demo(
    args: &crate::Char7Args,
    cfg: &RunConfig,
    report: &mut Report,
) -> Result<(), CliError> {
    let field = field(cfg)?;
    let char2 = field.characteristic() == 2;
    let w = if args.wprime {
        fano_weight_prime()
    } else {
        fano_weight()
    };
    report.set("weight", rats_json(&w));

    checkpoint("cubic");
    let f = special_cubic(field)?;
    report.claim(
        "cubic vanishes on the generic matrix",
        true,
        expand_on_generic_matrix(&f, 3, 7)?.is_zero(),
    );
    let init = f.initial_form(&w)?;
    let terms = match (args.wprime, char2) {
        (false, false) => 1,
        (false, true) => 7,
        (true, false) => 2,
        (true, true) => 1,
    };
    report.claim("terms of the cubic's initial form", terms, init.len());
    report.set("cubic_initial_form", init.to_string());

    checkpoint("monomial-freeness");
    let ideal = plucker_ideal(3, 7, field)?.with_budget(cfg.budget);
    let m = ideal.is_monomial_free(&w)?;
    report.claim("monomial-free", char2 != args.wprime, m.free);
    // A monomial initial form of the cubic is the most readable witness.
    let witness = if init.is_monomial() {
        Some(init.monic(&TermOrder::degrevlex(35)))
    } else {
        m.witness
    };
    report.set(
        "witness",
        witness.filter(|_| !m.free).map(|p| p.to_string()),
    );

    if args.basis {
        checkpoint("reduced Gröbner basis");
        let basis = ideal.reduced_groebner(&fano_order(&w))?;
        let census: BTreeMap<String, usize> = basis
            .iter()
            .map(|g| g.degree().unwrap_or(0).to_string())
            .counts()
            .into_iter()
            .collect();
        if field == Field::Rational && !args.wprime {
            report.claim("basis size", 196, basis.len());
            report.claim(
                "degree census",
                json!({"2": 140, "3": 52, "4": 4}),
                json!(census),
            );
        }
        report.set("basis_size", basis.len());
        report.set("degree_census", json!(census));
    }
    Ok(())
}

pub fn sagbi_demo(cfg: &RunConfig, report: &mut Report) -> Result<(), CliError> {
    let field = field(cfg)?;
    let w = tropical_minors(&sagbi_weight_matrix()).map_err(|e| CliError::Input(e.to_string()))?;
    let gg = PlueckerVector::from_rats(
        3,
        6,
        sum_of_vertices(&parse_face(&["g_123456", "g_125634"])?),
    )?;
    report.claim("tropical minors = g_123456 + g_125634", true, w == gg);
    report.set("tropical_minors", w.to_json());

    let ring = sagbi_ring(field)?;
    let got: Vec<String> = sagbi_initial_minors(field)?
        .iter()
        .map(|p| p.to_string())
        .collect();
    let want: Vec<String> = SAGBI_INITIAL_MINORS
        .iter()
        .map(|s| tropgrass::exactalg::MultiPoly::parse(&ring, s).map(|p| p.to_string()))
        .collect::<Result<_, _>>()?;
    report.claim("initial minors", json!(want), json!(got));

    checkpoint("toric kernel");
    let toric = sagbi_toric_ideal(field)?.with_budget(cfg.budget);
    let (p, _) = ffgg_components(field)?;
    report.claim("toric kernel = P", true, toric.equals(&p)?);
    let degree =
        |i: &IdealHandle| hilbert_data(i, &TermOrder::degrevlex(20)).map(|h| h.degree as i64);
    let i36 = plucker_ideal_36(field)?.with_budget(cfg.budget);
    let (dt, di) = (degree(&toric)?, degree(&i36)?);
    report.claim("degree of the toric ideal", 38, dt);
    report.claim("degree of I_{3,6}", 42, di);
    report.set("sagbi", dt == di);
    Ok(())
}
