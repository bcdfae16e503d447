//! Line-oriented text formats.
//!
//! Every format allows `#` comments, blank lines and an optional first line
//! `topokit-format 1`; writers always emit that header. Identifiers are
//! zero-based and coordinates are rationals written `p`, `p/q` or as decimals.
//!
//! ```text
//! .graph   vertices N / edge a b
//! .scheme  graph block, then face E+ E- ...
//! .cx      one simplex per line as vertex ids
//! .rot     graph block, then rot v: E.s E.s ... and twist E
//! .draw    vertex v x y / poly E x y x y ...   (bend points of edge E)
//! .path    point x y per breakpoint, optional closed
//! .link    curve, then point x y z lines; two curves
//! ```

use std::fmt::Write as _;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::geometry::{format_rational, parse_rational, Point, Point3, Rational};
use crate::graph::{Dart, Graph};
use crate::links::PolyLink;
use crate::ribbon::RotationSystem;
use crate::scheme::{Scheme2, Step};
use crate::vankampen::{Drawing, PlanePath};

pub const HEADER: &str = "topokit-format 1";

struct Line<'a> {
    number: usize,
    words: Vec<&'a str>,
}

impl Line<'_> {
    fn err(&self, msg: impl std::fmt::Display) -> Error {
        Error::Malformed(format!("line {}: {msg}", self.number))
    }

    fn arity(&self, n: usize) -> Result<()> {
        if self.words.len() != n {
            return Err(self.err(format!("`{}` takes {} arguments", self.words[0], n - 1)));
        }
        Ok(())
    }

    fn index(&self, i: usize) -> Result<usize> {
        self.words[i]
            .parse()
            .map_err(|_| self.err(format!("expected a nonnegative integer, found `{}`", self.words[i])))
    }

    fn rational(&self, i: usize) -> Result<Rational> {
        parse_rational(self.words[i])
            .ok_or_else(|| self.err(format!("expected a rational number, found `{}`", self.words[i])))
    }
}

fn lines(text: &str) -> Result<Vec<Line<'_>>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let words: Vec<&str> = content.split_whitespace().collect();
        if !words.is_empty() {
            out.push(Line { number: i + 1, words });
        }
    }
    if let Some(first) = out.first() {
        if first.words[0] == "topokit-format" {
            if first.words.len() != 2 || first.words[1] != "1" {
                return Err(first.err("unsupported format version"));
            }
            out.remove(0);
        }
    }
    Ok(out)
}

fn unexpected(line: &Line) -> Error {
    line.err(format!("unexpected `{}`", line.words[0]))
}

/// Consume the leading graph block, returning the graph and the rest.
fn graph_block<'a, 'b>(ls: &'b [Line<'a>]) -> Result<(Graph, &'b [Line<'a>])> {
    let first = ls.first().ok_or_else(|| Error::Malformed("empty input: expected `vertices N`".into()))?;
    if first.words[0] != "vertices" {
        return Err(first.err("expected `vertices N` first"));
    }
    first.arity(2)?;
    let n = first.index(1)?;
    let mut edges = Vec::new();
    let mut rest = &ls[1..];
    while let Some(l) = rest.first().filter(|l| l.words[0] == "edge") {
        l.arity(3)?;
        let (a, b) = (l.index(1)?, l.index(2)?);
        if a >= n || b >= n {
            return Err(l.err(format!("edge endpoint outside 0..{n}")));
        }
        edges.push((a, b));
        rest = &rest[1..];
    }
    Ok((Graph::new(n, edges)?, rest))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let ls = lines(text)?;
    let (g, rest) = graph_block(&ls)?;
    match rest.first() {
        Some(l) => Err(unexpected(l)),
        None => Ok(g),
    }
}

fn write_graph_block(out: &mut String, g: &Graph) {
    let _ = writeln!(out, "vertices {}", g.vertex_count());
    for &(a, b) in g.edges() {
        let _ = writeln!(out, "edge {a} {b}");
    }
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{HEADER}\n");
    write_graph_block(&mut out, g);
    out
}

fn parse_step(l: &Line, word: &str) -> Result<Step> {
    let (num, forward) = match word.as_bytes().last() {
        Some(b'+') => (&word[..word.len() - 1], true),
        Some(b'-') => (&word[..word.len() - 1], false),
        _ => return Err(l.err(format!("face step `{word}` must end in + or -"))),
    };
    let edge = num.parse().map_err(|_| l.err(format!("bad edge id in `{word}`")))?;
    Ok(Step::new(edge, forward))
}

pub fn parse_scheme(text: &str) -> Result<Scheme2> {
    let ls = lines(text)?;
    let (g, rest) = graph_block(&ls)?;
    let mut faces = Vec::new();
    for l in rest {
        if l.words[0] != "face" {
            return Err(unexpected(l));
        }
        if l.words.len() < 2 {
            return Err(l.err("a face needs at least one step"));
        }
        let steps = l.words[1..].iter().map(|w| parse_step(l, w)).collect::<Result<Vec<_>>>()?;
        if let Some(s) = steps.iter().find(|s| s.edge >= g.edge_count()) {
            return Err(Error::BadEdge(s.edge));
        }
        faces.push(steps);
    }
    Scheme2::new(g, faces)
}

pub fn write_scheme(s: &Scheme2) -> String {
    let mut out = format!("{HEADER}\n");
    write_graph_block(&mut out, s.graph());
    for f in s.faces() {
        out.push_str("face");
        for step in f {
            let _ = write!(out, " {}{}", step.edge, if step.forward { '+' } else { '-' });
        }
        out.push('\n');
    }
    out
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let ls = lines(text)?;
    let mut simplices = Vec::new();
    for l in &ls {
        simplices.push((0..l.words.len()).map(|i| l.index(i)).collect::<Result<Vec<_>>>()?);
    }
    SimplicialComplex::from_maximal(&simplices)
}

/// Maximal simplices only; the reader closes under faces.
pub fn write_complex(k: &SimplicialComplex) -> String {
    let mut out = format!("{HEADER}\n");
    for s in k.maximal_simplices() {
        let words: Vec<String> = s.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", words.join(" "));
    }
    out
}

fn parse_dart(l: &Line, word: &str) -> Result<Dart> {
    let (e, s) = word.split_once('.').ok_or_else(|| l.err(format!("dart `{word}` must look like E.0 or E.1")))?;
    let edge: usize = e.parse().map_err(|_| l.err(format!("bad edge id in `{word}`")))?;
    match s {
        "0" => Ok(Dart::new(edge, 0)),
        "1" => Ok(Dart::new(edge, 1)),
        _ => Err(l.err(format!("dart side in `{word}` must be 0 or 1"))),
    }
}

/// Vertices without a `rot` line keep the order of their darts by id.
pub fn parse_rotation(text: &str) -> Result<RotationSystem> {
    let ls = lines(text)?;
    let (g, rest) = graph_block(&ls)?;
    let mut rotation: Vec<Option<Vec<Dart>>> = vec![None; g.vertex_count()];
    let mut twist = vec![false; g.edge_count()];
    for l in rest {
        match l.words[0] {
            "rot" => {
                let head = l.words.get(1).ok_or_else(|| l.err("expected `rot v: darts`"))?;
                let v: usize = head
                    .strip_suffix(':')
                    .and_then(|v| v.parse().ok())
                    .ok_or_else(|| l.err(format!("expected `v:` after rot, found `{head}`")))?;
                if v >= g.vertex_count() {
                    return Err(l.err(format!("vertex {v} does not exist")));
                }
                if rotation[v].is_some() {
                    return Err(l.err(format!("second rotation for vertex {v}")));
                }
                let darts = l.words[2..].iter().map(|w| parse_dart(l, w)).collect::<Result<Vec<_>>>()?;
                if let Some(d) = darts.iter().find(|d| d.edge() >= g.edge_count()) {
                    return Err(Error::BadEdge(d.edge()));
                }
                rotation[v] = Some(darts);
            }
            "twist" => {
                l.arity(2)?;
                let e = l.index(1)?;
                if e >= g.edge_count() {
                    return Err(Error::BadEdge(e));
                }
                twist[e] = true;
            }
            _ => return Err(unexpected(l)),
        }
    }
    let defaults = g.darts_by_vertex();
    let rotation = rotation.into_iter().zip(defaults).map(|(r, d)| r.unwrap_or(d)).collect();
    RotationSystem::new(g, rotation, twist)
}

pub fn write_rotation(r: &RotationSystem) -> String {
    let mut out = format!("{HEADER}\n");
    write_graph_block(&mut out, r.graph());
    for (v, rot) in r.rotations().iter().enumerate() {
        let _ = write!(out, "rot {v}:");
        for d in rot {
            let _ = write!(out, " {d}");
        }
        out.push('\n');
    }
    for (e, &t) in r.twists().iter().enumerate() {
        if t {
            let _ = writeln!(out, "twist {e}");
        }
    }
    out
}

/// A drawing of `g`: every vertex needs a position; edges without a `poly`
/// line are straight.
pub fn parse_drawing(text: &str, g: &Graph) -> Result<Drawing> {
    let ls = lines(text)?;
    let mut positions: Vec<Option<Point>> = vec![None; g.vertex_count()];
    let mut bends: Vec<Option<Vec<Point>>> = vec![None; g.edge_count()];
    for l in &ls {
        match l.words[0] {
            "vertex" => {
                l.arity(4)?;
                let v = l.index(1)?;
                let slot = positions.get_mut(v).ok_or_else(|| l.err(format!("vertex {v} does not exist")))?;
                if slot.is_some() {
                    return Err(l.err(format!("second position for vertex {v}")));
                }
                *slot = Some(Point::new(l.rational(2)?, l.rational(3)?));
            }
            "poly" => {
                if l.words.len() < 2 || l.words.len() % 2 != 0 {
                    return Err(l.err("expected `poly E x y x y ...`"));
                }
                let e = l.index(1)?;
                let slot = bends.get_mut(e).ok_or(Error::BadEdge(e))?;
                if slot.is_some() {
                    return Err(l.err(format!("second polyline for edge {e}")));
                }
                let pts = (2..l.words.len()).step_by(2).map(|i| Ok(Point::new(l.rational(i)?, l.rational(i + 1)?)));
                *slot = Some(pts.collect::<Result<Vec<_>>>()?);
            }
            _ => return Err(unexpected(l)),
        }
    }
    let positions = positions
        .into_iter()
        .enumerate()
        .map(|(v, p)| p.ok_or_else(|| Error::Malformed(format!("no position for vertex {v}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Drawing { positions, bends: bends.into_iter().map(Option::unwrap_or_default).collect() })
}

pub fn write_drawing(d: &Drawing) -> String {
    let mut out = format!("{HEADER}\n");
    for (v, p) in d.positions.iter().enumerate() {
        let _ = writeln!(out, "vertex {v} {} {}", format_rational(&p.x), format_rational(&p.y));
    }
    for (e, bend) in d.bends.iter().enumerate() {
        if !bend.is_empty() {
            let _ = write!(out, "poly {e}");
            for p in bend {
                let _ = write!(out, " {} {}", format_rational(&p.x), format_rational(&p.y));
            }
            out.push('\n');
        }
    }
    out
}

pub fn parse_path(text: &str) -> Result<PlanePath> {
    let ls = lines(text)?;
    let mut points = Vec::new();
    let mut closed = false;
    for l in &ls {
        match l.words[0] {
            "point" => {
                l.arity(3)?;
                points.push(Point::new(l.rational(1)?, l.rational(2)?));
            }
            "closed" => {
                l.arity(1)?;
                closed = true;
            }
            _ => return Err(unexpected(l)),
        }
    }
    Ok(PlanePath { points, closed })
}

pub fn write_path(p: &PlanePath) -> String {
    let mut out = format!("{HEADER}\n");
    for q in &p.points {
        let _ = writeln!(out, "point {} {}", format_rational(&q.x), format_rational(&q.y));
    }
    if p.closed {
        out.push_str("closed\n");
    }
    out
}

pub fn parse_link(text: &str) -> Result<PolyLink> {
    let ls = lines(text)?;
    let mut curves: Vec<Vec<Point3>> = Vec::new();
    for l in &ls {
        match l.words[0] {
            "curve" => {
                l.arity(1)?;
                curves.push(Vec::new());
            }
            "point" => {
                l.arity(4)?;
                let c = curves.last_mut().ok_or_else(|| l.err("`point` before the first `curve`"))?;
                c.push(Point3::new(l.rational(1)?, l.rational(2)?, l.rational(3)?));
            }
            _ => return Err(unexpected(l)),
        }
    }
    if curves.len() != 2 {
        return Err(Error::Malformed(format!("a link file holds exactly two curves, found {}", curves.len())));
    }
    let second = curves.pop().expect("two curves");
    let first = curves.pop().expect("two curves");
    PolyLink::new(first, second)
}

pub fn write_link(l: &PolyLink) -> String {
    let mut out = format!("{HEADER}\n");
    for c in 0..2 {
        out.push_str("curve\n");
        for p in l.curve(c) {
            let _ =
                writeln!(out, "point {} {} {}", format_rational(&p.x), format_rational(&p.y), format_rational(&p.z));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{graph, links, scheme};

    #[test]
    fn graph_round_trip_and_comments() {
        let text = "# K3\nvertices 3\nedge 0 1 # first\n\nedge 1 2\nedge 2 0\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g, graph::cycle(3));
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        assert!(write_graph(&g).starts_with(HEADER));
    }

    #[test]
    fn malformed_inputs_name_the_line() {
        let err = parse_graph("vertices 2\nedge 0 5\n").unwrap_err();
        assert_eq!(err, Error::Malformed("line 2: edge endpoint outside 0..2".into()));
        assert!(parse_graph("topokit-format 2\nvertices 1\n").unwrap_err().is_malformed_input());
        assert!(parse_graph("edge 0 1\n").is_err());
        assert!(parse_scheme("vertices 1\nedge 0 0\nface 0+ 3-\n").unwrap_err().is_malformed_input());
        assert!(parse_scheme("vertices 1\nedge 0 0\nface 0*\n").unwrap_err().is_malformed_input());
    }

    #[test]
    fn scheme_round_trip() {
        for s in [scheme::torus(), scheme::klein_bottle(), scheme::mobius_band(), scheme::orientable_surface(3)] {
            assert_eq!(parse_scheme(&write_scheme(&s)).unwrap(), s);
        }
    }

    #[test]
    fn complex_round_trip() {
        let k = parse_complex("0 1 2\n2 3\n4\n").unwrap();
        assert_eq!(k.simplices(0).len(), 5);
        assert_eq!(parse_complex(&write_complex(&k)).unwrap(), k);
    }

    #[test]
    fn rotation_round_trip() {
        let text = "vertices 1\nedge 0 0\nedge 0 0\nrot 0: 0.0 1.0 0.1 1.1\ntwist 1\n";
        let r = parse_rotation(text).unwrap();
        assert!(r.is_twisted(1));
        assert_eq!(parse_rotation(&write_rotation(&r)).unwrap(), r);
        assert!(parse_rotation("vertices 1\nedge 0 0\nrot 0: 0.0 0.2\n").is_err());
    }

    #[test]
    fn drawing_path_link_round_trip() {
        let g = graph::cycle(3);
        let d = parse_drawing("vertex 0 0 0\nvertex 1 1/2 0\nvertex 2 0 1.5\npoly 1 3 3 -1/3 2\n", &g).unwrap();
        assert_eq!(d.bends[1].len(), 2);
        assert_eq!(parse_drawing(&write_drawing(&d), &g).unwrap(), d);
        assert!(parse_drawing("vertex 0 0 0\n", &g).is_err());

        let p = parse_path("point 0 0\npoint 1 0\npoint 0 1\nclosed\n").unwrap();
        assert!(p.closed);
        assert_eq!(parse_path(&write_path(&p)).unwrap(), p);

        let l = links::hopf_link();
        assert_eq!(parse_link(&write_link(&l)).unwrap(), l);
        assert!(parse_link("curve\npoint 0 0 0\n").is_err());
    }
}
