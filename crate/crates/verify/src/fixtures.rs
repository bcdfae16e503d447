//! Named fixtures, their text forms, and loading of fixture directories.

use std::fs;
use std::path::{Path, PathBuf};

use topokit::complex::SimplicialComplex;
use topokit::format;
use topokit::geometry::Point;
use topokit::graph::{self, Dart, Graph};
use topokit::links::{self, PolyLink};
use topokit::ribbon::RotationSystem;
use topokit::scheme::{self, Scheme2};
use topokit::vankampen::{Drawing, PlanePath};
use topokit::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Graph(Graph),
    Scheme(Scheme2),
    Complex(SimplicialComplex),
    Rotation(RotationSystem),
    /// A drawing together with the graph it draws.
    Drawing(Graph, Drawing),
    Path(PlanePath),
    Link(PolyLink),
}

impl Object {
    pub fn extension(&self) -> &'static str {
        match self {
            Object::Graph(_) => "graph",
            Object::Scheme(_) => "scheme",
            Object::Complex(_) => "cx",
            Object::Rotation(_) => "rot",
            Object::Drawing(..) => "draw",
            Object::Path(_) => "path",
            Object::Link(_) => "link",
        }
    }

    pub fn write(&self) -> String {
        match self {
            Object::Graph(g) => format::write_graph(g),
            Object::Scheme(s) => format::write_scheme(s),
            Object::Complex(k) => format::write_complex(k),
            Object::Rotation(r) => format::write_rotation(r),
            Object::Drawing(_, d) => format::write_drawing(d),
            Object::Path(p) => format::write_path(p),
            Object::Link(l) => format::write_link(l),
        }
    }

    /// Serialize, parse back and serialize again; both the structure and the
    /// bytes must come back unchanged.
    pub fn round_trips(&self) -> Result<bool> {
        let text = self.write();
        let graph = match self {
            Object::Drawing(g, _) => Some(g),
            _ => None,
        };
        let back = parse(self.extension(), &text, graph)?;
        Ok(&back == self && back.write() == text)
    }
}

/// Parse text by file extension. Drawings need the graph they draw.
pub fn parse(extension: &str, text: &str, graph: Option<&Graph>) -> Result<Object> {
    Ok(match extension {
        "graph" => Object::Graph(format::parse_graph(text)?),
        "scheme" => Object::Scheme(format::parse_scheme(text)?),
        "cx" => Object::Complex(format::parse_complex(text)?),
        "rot" => Object::Rotation(format::parse_rotation(text)?),
        "draw" => {
            let g = graph.ok_or_else(|| Error::Malformed("a drawing needs the graph it draws".into()))?;
            Object::Drawing(g.clone(), format::parse_drawing(text, g)?)
        }
        "path" => Object::Path(format::parse_path(text)?),
        "link" => Object::Link(format::parse_link(text)?),
        other => return Err(Error::Malformed(format!("unknown file extension `.{other}`"))),
    })
}

/// Read and parse a file; a `.draw` file takes its graph from the `.graph`
/// file with the same stem.
pub fn load(path: &Path) -> Result<Object> {
    let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
    let text = fs::read_to_string(path).map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))?;
    let graph = if ext == "draw" {
        let gp = path.with_extension("graph");
        let gtext = fs::read_to_string(&gp).map_err(|e| Error::Malformed(format!("{}: {e}", gp.display())))?;
        Some(format::parse_graph(&gtext)?)
    } else {
        None
    };
    parse(ext, &text, graph.as_ref())
}

/// Fixture files in a directory, sorted by name.
pub fn fixture_files(dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some())
        .collect();
    files.sort();
    Ok(files)
}

pub fn bundled_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub struct Fixture {
    pub name: String,
    pub object: Object,
}

fn fx(name: impl Into<String>, object: Object) -> Fixture {
    Fixture { name: name.into(), object }
}

fn pts(v: &[(i64, i64)]) -> Vec<Point> {
    v.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()
}

/// Two meadows joined by two trails, run around twice.
pub fn double_circuit_path() -> PlanePath {
    PlanePath::closed(pts(&[(0, 0), (2, 1), (4, 0), (2, -1), (0, 0), (2, 1), (4, 0), (2, -1)]))
}

/// Enters a stem, sweeps both prongs of a fork and leaves on the other side.
pub fn fork_path() -> PlanePath {
    PlanePath::open(pts(&[(-1, -1), (0, 0), (2, 0), (3, 1), (2, 0), (3, -1), (2, 0), (0, 0), (-1, 1)]))
}

pub fn folded_segment_path() -> PlanePath {
    PlanePath::open(pts(&[(0, 0), (1, 0), (0, 0)]))
}

pub fn k5_pentagon_drawing() -> Drawing {
    Drawing::straight(pts(&[(0, 10), (-9, 3), (-6, -8), (6, -8), (9, 3)]), 10)
}

/// One vertex with two interleaved untwisted loops.
pub fn interleaved_loops() -> RotationSystem {
    RotationSystem::new(
        graph::bouquet(2),
        vec![vec![Dart::new(0, 0), Dart::new(1, 0), Dart::new(0, 1), Dart::new(1, 1)]],
        vec![false; 2],
    )
    .expect("valid rotation")
}

/// Closed-surface schemes: orientable genus 0..=3, then 1..=4 cross-caps.
pub fn closed_surfaces() -> Vec<(String, Scheme2)> {
    let mut out: Vec<(String, Scheme2)> =
        (0..=3).map(|g| (format!("orientable-{g}"), scheme::orientable_surface(g))).collect();
    out.extend((1..=4).map(|m| (format!("nonorientable-{m}"), scheme::nonorientable_surface(m))));
    out
}

pub fn all() -> Vec<Fixture> {
    let mut out = vec![
        fx("k4", Object::Graph(graph::complete(4))),
        fx("k5", Object::Graph(graph::complete(5))),
        fx("k33", Object::Graph(graph::complete_bipartite(3, 3))),
        fx("petersen", Object::Graph(graph::petersen())),
        fx("theta", Object::Graph(Graph::new(2, vec![(0, 1), (0, 1), (0, 1)]).expect("valid"))),
        fx("figure-eight", Object::Graph(graph::bouquet(2))),
        fx("tetrahedron", Object::Scheme(scheme::tetrahedron_boundary())),
        fx("torus", Object::Scheme(scheme::torus())),
        fx("klein-bottle", Object::Scheme(scheme::klein_bottle())),
        fx("projective-plane", Object::Scheme(scheme::projective_plane())),
        fx("mobius-band", Object::Scheme(scheme::mobius_band())),
        fx("interleaved-loops", Object::Rotation(interleaved_loops())),
        fx("k4-standard", Object::Rotation(RotationSystem::standard(graph::complete(4)))),
        fx("k5-pentagon", Object::Drawing(graph::complete(5), k5_pentagon_drawing())),
        fx("double-circuit", Object::Path(double_circuit_path())),
        fx("fork", Object::Path(fork_path())),
        fx("folded-segment", Object::Path(folded_segment_path())),
        fx("hopf", Object::Link(links::hopf_link())),
        fx("unlink", Object::Link(links::unlink())),
    ];
    out.extend((1..=4).map(|n| fx(format!("sphere-{n}"), Object::Complex(SimplicialComplex::simplex_boundary(n + 1)))));
    out.extend(closed_surfaces().into_iter().map(|(name, s)| fx(name, Object::Scheme(s))));
    out
}

/// Files checked by [`audit_dir`] and what was wrong with them.
pub struct Audit {
    pub checked: usize,
    pub problems: Vec<String>,
}

/// Every bundled fixture must be present in `dir` and parse to exactly the
/// built-in object. Other fixture files must at least parse and round-trip.
pub fn audit_dir(dir: &Path) -> Audit {
    let mut problems = Vec::new();
    let mut known = std::collections::HashSet::new();
    let fixtures = all();
    for f in &fixtures {
        let path = dir.join(format!("{}.{}", f.name, f.object.extension()));
        known.insert(path.clone());
        if let Object::Drawing(..) = f.object {
            known.insert(path.with_extension("graph"));
        }
        match load(&path) {
            Ok(o) if o == f.object => {}
            Ok(_) => problems.push(format!("{}: differs from the bundled fixture", path.display())),
            Err(e) => problems.push(format!("{}: {e}", path.display())),
        }
    }
    let mut checked = fixtures.len();
    match fixture_files(dir) {
        Ok(files) => {
            for path in files.into_iter().filter(|p| !known.contains(p)) {
                checked += 1;
                match load(&path).and_then(|o| o.round_trips()) {
                    Ok(true) => {}
                    Ok(false) => problems.push(format!("{}: does not round-trip", path.display())),
                    Err(e) => problems.push(format!("{}: {e}", path.display())),
                }
            }
        }
        Err(e) => problems.push(format!("{}: {e}", dir.display())),
    }
    Audit { checked, problems }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_round_trips() {
        for f in all() {
            assert!(f.object.round_trips().unwrap(), "{}", f.name);
        }
    }

    /// The bundled files are the serialized fixtures; set `TOPOKIT_BLESS=1`
    /// to regenerate them.
    #[test]
    fn bundled_files_match() {
        let dir = bundled_dir();
        let bless = std::env::var_os("TOPOKIT_BLESS").is_some();
        for f in all() {
            let path = dir.join(format!("{}.{}", f.name, f.object.extension()));
            if bless {
                fs::write(&path, f.object.write()).unwrap();
                if let Object::Drawing(g, _) = &f.object {
                    fs::write(path.with_extension("graph"), format::write_graph(g)).unwrap();
                }
            }
            assert_eq!(load(&path).unwrap(), f.object, "{}", path.display());
        }
    }

    #[test]
    fn audit_flags_corruption() {
        let clean = audit_dir(&bundled_dir());
        assert!(clean.problems.is_empty(), "{:?}", clean.problems);
        let tmp = std::env::temp_dir().join(format!("topokit-audit-{}", std::process::id()));
        fs::create_dir_all(&tmp).unwrap();
        for path in fixture_files(&bundled_dir()).unwrap() {
            fs::copy(&path, tmp.join(path.file_name().unwrap())).unwrap();
        }
        fs::write(tmp.join("k5.graph"), format::write_graph(&graph::complete(4))).unwrap();
        fs::write(tmp.join("stray.path"), "point 0 zero\n").unwrap();
        let audit = audit_dir(&tmp);
        fs::remove_dir_all(&tmp).unwrap();
        assert_eq!(audit.problems.len(), 2, "{:?}", audit.problems);
        assert!(audit.problems[0].contains("k5.graph"));
        assert!(audit.problems[1].contains("stray.path"));
    }
}
