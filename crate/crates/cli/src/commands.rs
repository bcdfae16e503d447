use std::path::Path;

use serde_json::{json, Value};

use topokit::complex::{ChainComplex, Ring};
use topokit::covers::{cover_class_count, enumerate_covers, enumerate_covers_surface};
use topokit::format;
use topokit::homology::{homology, Coefficients};
use topokit::links::{cone_count, linking_number};
use topokit::ribbon::{
    count_thickenings, euler_genus_lower_bound, genus_exhaustive, mohar_genus, oriented_thickening_classes, CountMode,
    RotationSystem,
};
use topokit::surfaces::{classify_surface, intersection_form, is_surface, w1_self_pairing, SurfaceVerdict};
use topokit::vankampen::{
    deleted_square, obstruction_cocycle, path_obstruction, vk_class_is_zero, vk_planarity_report, VkClass,
};
use topokit::{Dart, Error, Graph, Result};
use topokit_verify::acceptance;
use topokit_verify::fixtures::{self, Object};

use crate::output::{bit_string, bit_tuple, Record};
use crate::{Cli, Command, PlanarArgs, RingArg};

pub struct Outcome {
    pub record: Record,
    pub status: u8,
}

impl From<Record> for Outcome {
    fn from(record: Record) -> Outcome {
        Outcome { record, status: 0 }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let budget = cli.budget;
    match &cli.command {
        Command::Homology { file, ring } => homology_cmd(file, *ring).map(Into::into),
        Command::Surface { file, form } => surface_cmd(file, *form).map(Into::into),
        Command::Genus { file, nonorientable, mohar, witness } => {
            genus_cmd(file, !nonorientable, *mohar, *witness, budget).map(Into::into)
        }
        Command::Thicken { file, trace, classes } => thicken_cmd(file, *trace, *classes, budget).map(Into::into),
        Command::Planar(args) => planar_cmd(args, budget).map(Into::into),
        Command::Approx { file, verbose } => approx_cmd(file, *verbose).map(Into::into),
        Command::Covers { file, surface, list } => covers_cmd(file, *surface, *list, budget).map(Into::into),
        Command::Link { file } => link_cmd(file).map(Into::into),
        Command::Selftest { filter, fixtures } => Ok(selftest_cmd(filter.as_deref(), fixtures.as_deref())),
    }
}

/// Extra advice printed after an error.
pub fn diagnostic(cli: &Cli, e: &Error) -> Option<String> {
    let Error::BudgetExceeded { .. } = e else { return None };
    match &cli.command {
        Command::Genus { file, nonorientable, .. } => {
            let g = load_graph(file).ok()?;
            let bound = euler_genus_lower_bound(&g, !nonorientable);
            Some(format!("Euler characteristic bound: genus >= {bound}; raise --budget to search exhaustively"))
        }
        _ => Some("raise --budget to allow a larger search".into()),
    }
}

fn load(path: &Path) -> Result<Object> {
    fixtures::load(path)
}

fn wrong_kind(path: &Path, expected: &str) -> Error {
    Error::Malformed(format!("{}: expected {expected}", path.display()))
}

fn load_graph(path: &Path) -> Result<Graph> {
    match load(path)? {
        Object::Graph(g) => Ok(g),
        _ => Err(wrong_kind(path, "a .graph file")),
    }
}

fn load_scheme(path: &Path) -> Result<topokit::Scheme2> {
    match load(path)? {
        Object::Scheme(s) => Ok(s),
        _ => Err(wrong_kind(path, "a .scheme file")),
    }
}

fn homology_cmd(path: &Path, ring: RingArg) -> Result<Record> {
    let (chain_ring, coefficients) = match ring {
        RingArg::Z2 => (Ring::Z2, Coefficients::Z2),
        RingArg::Z => (Ring::Z, Coefficients::Z),
        RingArg::Q => (Ring::Z, Coefficients::Q),
    };
    let cx = match load(path)? {
        Object::Scheme(s) => ChainComplex::from_scheme(&s, chain_ring),
        Object::Complex(k) => ChainComplex::from_simplicial(&k, chain_ring),
        _ => return Err(wrong_kind(path, "a .scheme or .cx file")),
    };
    let h = homology(&cx, coefficients)?;
    let mut rec = Record::new();
    for k in 0..h.groups.len() {
        rec.field(format!("H_{k}"), h.group_string(k));
    }
    Ok(rec)
}

fn surface_cmd(path: &Path, form: bool) -> Result<Record> {
    let s = load_scheme(path)?;
    let mut rec = Record::new();
    match is_surface(&s) {
        SurfaceVerdict::NotSurface(offence) => {
            rec.field("surface", false).field_as("reason", format!("\"{offence}\""), offence.to_string());
            return Ok(rec);
        }
        SurfaceVerdict::Surface(_) => {}
    }
    let c = classify_surface(&s)?;
    rec.field("surface", true)
        .field("orientable", c.orientable)
        .field("genus", c.genus)
        .field("boundary", c.boundary)
        .field("chi", c.chi);
    if form {
        let f = intersection_form(&s)?;
        let w1 = w1_self_pairing(&s)?;
        let rows = f.to_rows();
        rec.field("rank", f.rank()).field("w1_squared", u8::from(w1.w1_squared));
        for row in &rows {
            rec.line(row.iter().map(u8::to_string).collect::<Vec<_>>().join(" "));
        }
        rec.detail_json(json!({ "form": rows }));
    }
    Ok(rec)
}

fn genus_cmd(path: &Path, orientable: bool, mohar: bool, witness: bool, budget: u128) -> Result<Record> {
    let g = load_graph(path)?;
    let w = if mohar { mohar_genus(&g, orientable, budget)? } else { genus_exhaustive(&g, orientable, budget)? };
    let mut rec = Record::new();
    rec.field("genus", w.genus);
    if !orientable {
        rec.field("orientable", false);
    }
    if witness {
        let text = format::write_rotation(&w.rotation);
        for l in text.lines() {
            rec.line(l);
        }
        rec.detail_json(json!({ "rotation": text }));
    }
    Ok(rec)
}

fn dart_name(d: Dart) -> String {
    format!("{}.{}", d.edge(), d.side())
}

fn thicken_cmd(path: &Path, trace: bool, classes: bool, budget: u128) -> Result<Record> {
    match load(path)? {
        Object::Rotation(r) => ribbon_surface(&r, trace),
        Object::Graph(g) => thickening_counts(&g, classes, budget),
        _ => Err(wrong_kind(path, "a .rot or .graph file")),
    }
}

fn ribbon_surface(r: &RotationSystem, trace: bool) -> Result<Record> {
    let faces = r.trace_faces();
    let c = r.surface()?;
    let mut rec = Record::new();
    rec.field("faces", faces.count())
        .field("orientable", c.orientable)
        .field("genus", c.genus)
        .field("euler_genus", r.euler_genus())
        .field("chi", c.chi);
    if trace {
        let circuits: Vec<Vec<String>> =
            faces.circuits.iter().map(|circ| circ.iter().map(|&d| dart_name(d)).collect()).collect();
        for (i, circ) in circuits.iter().enumerate() {
            rec.line(format!("circuit {i}: {}", circ.join(" ")));
        }
        rec.detail_json(json!({ "circuits": circuits }));
    }
    Ok(rec)
}

fn thickening_counts(g: &Graph, classes: bool, budget: u128) -> Result<Record> {
    let mut rec = Record::new();
    for (key, mode, orientable) in [
        ("labeled_oriented", CountMode::Labeled, true),
        ("labeled", CountMode::Labeled, false),
        ("homeomorphism_oriented", CountMode::RelHomeomorphism, true),
        ("homeomorphism", CountMode::RelHomeomorphism, false),
    ] {
        match count_thickenings(g, mode, orientable) {
            Ok(n) => {
                rec.field(key, n.to_string());
            }
            // The homeomorphism counts are undefined for points, segments
            // and circles; the labeled ones still apply.
            Err(e) if mode == CountMode::RelHomeomorphism && !e.is_malformed_input() => {}
            Err(e) => return Err(e),
        }
    }
    if classes {
        let list = oriented_thickening_classes(g, budget)?;
        rec.field("classes", list.len());
        let mut detail = Vec::new();
        for (i, c) in list.iter().enumerate() {
            rec.line(format!("class {i}: genus={} size={}", c.genus, c.size));
            detail.push(json!({ "genus": c.genus, "size": c.size }));
        }
        rec.detail_json(Value::Array(detail));
    }
    Ok(rec)
}

fn planar_cmd(args: &PlanarArgs, budget: u128) -> Result<Record> {
    let g = load_graph(&args.file)?;
    let mut rec = Record::new();
    if args.rotation {
        let components = g.components().count;
        let mut planar = true;
        for part in split_graph(&g, components) {
            planar &= genus_exhaustive(&part, true, budget)?.genus == 0;
        }
        rec.field("planar", planar);
        return Ok(rec);
    }
    if let Some(draw) = &args.drawing {
        let text = std::fs::read_to_string(draw).map_err(|e| Error::Malformed(format!("{}: {e}", draw.display())))?;
        let drawing = format::parse_drawing(&text, &g)?;
        let ds = deleted_square(&g)?;
        let crossings = drawing.crossings(&g)?;
        let nu = obstruction_cocycle(&ds, &drawing)?;
        let class = vk_class_is_zero(&ds, &nu);
        debug_assert!(class.verify(&ds, &nu));
        rec.field("planar", class.is_zero())
            .field("obstruction", if class.is_zero() { "zero" } else { "nonzero" })
            .field("crossings", crossings.len())
            .field("odd_pairs", nu.count_ones());
        certificate(&mut rec, &class);
        return Ok(rec);
    }
    let report = vk_planarity_report(&g);
    rec.field("planar", report.planar).field("obstruction", if report.planar { "zero" } else { "nonzero" });
    Ok(rec)
}

/// Components of a graph as separate graphs, for searches that need
/// connected input.
fn split_graph(g: &Graph, count: usize) -> Vec<Graph> {
    let comp = g.components();
    (0..count)
        .map(|c| {
            let vertices: Vec<usize> = (0..g.vertex_count()).filter(|&v| comp.label[v] == c).collect();
            let index = |v: usize| vertices.binary_search(&v).expect("vertex in component");
            let edges =
                g.edges().iter().filter(|&&(a, _)| comp.label[a] == c).map(|&(a, b)| (index(a), index(b))).collect();
            Graph::new(vertices.len(), edges).expect("renumbered edges are in range")
        })
        .collect()
}

fn certificate(rec: &mut Record, class: &VkClass) {
    match class {
        VkClass::Zero { supports } => {
            let parts: Vec<String> = supports.iter().map(|(a, e)| format!("{a}x{e}")).collect();
            rec.line(format!("coboundary of: {}", parts.join(" ")));
            rec.detail_json(json!({ "supports": supports }));
        }
        VkClass::Nonzero { functional } => {
            let cells: Vec<usize> = functional.iter_ones().collect();
            rec.line(format!("separating functional on pairs: {cells:?}"));
            rec.detail_json(json!({ "functional": cells }));
        }
    }
}

fn approx_cmd(path: &Path, verbose: bool) -> Result<Record> {
    let p = match load(path)? {
        Object::Path(p) => p,
        _ => return Err(wrong_kind(path, "a .path file")),
    };
    let o = path_obstruction(&p)?;
    let mut rec = Record::new();
    rec.field("c", o.c())
        .field_as("v", bit_tuple(&o.obstruction), o.obstruction.clone())
        .field("approximable", o.is_zero());
    if verbose {
        rec.line(format!("singular: {:?}", o.singular));
        for (k, comp) in o.components.iter().enumerate() {
            rec.line(format!("component {k}: {comp:?} v={}", u8::from(o.obstruction[k])));
        }
        rec.detail_json(json!({ "singular": o.singular, "components": o.components }));
    }
    Ok(rec)
}

fn covers_cmd(path: &Path, surface: bool, list: bool, budget: u128) -> Result<Record> {
    let mut rec = Record::new();
    let covers = if surface {
        let s = load_scheme(path)?;
        let covers = enumerate_covers_surface(&s, budget)?;
        rec.field("classes", covers.len());
        covers
    } else {
        let g = load_graph(path)?;
        rec.field("cycle_rank", g.cycle_rank()).field("classes", cover_class_count(&g).to_string());
        if !list {
            return Ok(rec);
        }
        enumerate_covers(&g, budget)?
    };
    if list {
        let labels: Vec<String> = covers.iter().map(|c| bit_string(&c.labels().to_bools())).collect();
        for l in &labels {
            rec.line(format!("labels {l}"));
        }
        rec.detail_json(json!({ "labels": labels }));
    }
    Ok(rec)
}

fn link_cmd(path: &Path) -> Result<Record> {
    let l = match load(path)? {
        Object::Link(l) => l,
        _ => return Err(wrong_kind(path, "a .link file")),
    };
    let lk = linking_number(&l)?;
    let cone = cone_count(&l)?;
    let (p, q) = &lk.direction;
    let mut rec = Record::new();
    rec.field("lk", lk.value).field("lk_mod2", lk.mod2()).field("cone", cone).field_as(
        "direction",
        format!("({p},{q},1)"),
        vec![p.to_string(), q.to_string(), "1".into()],
    );
    Ok(rec)
}

fn selftest_cmd(filter: Option<&str>, dir: Option<&Path>) -> Outcome {
    let dir = dir.map(Path::to_path_buf).unwrap_or_else(fixtures::bundled_dir);
    let audit = fixtures::audit_dir(&dir);
    let reports = acceptance::run(filter);
    let mut rec = Record::new();
    let fixtures_ok = audit.problems.is_empty();
    rec.line(format!("[{}] fixtures: {} files checked in {}", verdict(fixtures_ok), audit.checked, dir.display()));
    for p in &audit.problems {
        rec.line(format!("       {p}"));
    }
    for r in &reports {
        rec.line(format!("[{}] {:>2} {}: {}", verdict(r.passed), r.id, r.key, r.detail));
    }
    let failed = reports.iter().filter(|r| !r.passed).count() + usize::from(!fixtures_ok);
    let passed = reports.len() + 1 - failed;
    rec.field("passed", passed).field("failed", failed);
    let criteria: Vec<Value> =
        reports.iter().map(|r| json!({ "id": r.id, "key": r.key, "passed": r.passed, "detail": r.detail })).collect();
    rec.detail_json(json!({
        "fixtures": { "checked": audit.checked, "problems": audit.problems },
        "criteria": criteria,
    }));
    Outcome { status: u8::from(failed > 0), record: rec }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}
