//! Edge-list, DOT and SVG output for finite windows.
//!
//! The edge list is the stable format: one edge per line, `x1 y1 x2 y2`, with
//! the lexicographically smaller endpoint first and lines sorted. A fifth
//! column carries the cost when the graph is weighted.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::graph::{Cost, ImplicitGraph};
use crate::lattice::{Edge, Vertex, Window};

use super::{hex_chords, AppendixGraph, HexBrickGraph, TriangularGraph};
use crate::graph::PlainGrid;

/// Every edge with both endpoints in `window`, canonical and sorted.
pub fn edges_in_window<G: ImplicitGraph + ?Sized>(graph: &G, window: &Window) -> Vec<(Edge, Cost)> {
    let mut out = Vec::new();
    let mut buf = Vec::new();
    for v in window.vertices() {
        buf.clear();
        graph.neighbors(v, &mut buf);
        for &(w, c) in &buf {
            if v < w && window.contains(w) {
                out.push((Edge::new(v, w), c));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

pub fn edge_list(edges: &[(Edge, Cost)], weighted: bool) -> String {
    let mut s = String::new();
    for (e, c) in edges {
        let (u, v) = (e.u(), e.v());
        if weighted {
            let _ = writeln!(s, "{} {} {} {} {}", u.x, u.y, v.x, v.y, c);
        } else {
            let _ = writeln!(s, "{} {} {} {}", u.x, u.y, v.x, v.y);
        }
    }
    s
}

/// Parse the edge-list format back into canonical edges. Costs default to 1.
pub fn parse_edge_list(text: &str) -> Result<Vec<(Edge, Cost)>, String> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 4 && fields.len() != 5 {
            return Err(format!("line {}: expected 4 or 5 fields", lineno + 1));
        }
        let num = |i: usize| fields[i].parse::<i64>().map_err(|e| format!("line {}: {e}", lineno + 1));
        let u = Vertex::new(num(0)?, num(1)?);
        let v = Vertex::new(num(2)?, num(3)?);
        let c = if fields.len() == 5 { num(4)? as Cost } else { 1 };
        out.push((Edge::new(u, v), c));
    }
    out.sort();
    Ok(out)
}

pub fn to_dot(edges: &[(Edge, Cost)], name: &str, weighted: bool) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "graph \"{}\" {{", name.replace('"', "'"));
    let _ = writeln!(s, "  node [shape=point];");
    for (e, c) in edges {
        let (u, v) = (e.u(), e.v());
        let _ = write!(s, "  \"{},{}\" -- \"{},{}\"", u.x, u.y, v.x, v.y);
        if weighted {
            let _ = write!(s, " [weight={c}, label=\"{c}\"]");
        }
        s.push_str(";\n");
    }
    s.push_str("}\n");
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stroke {
    /// Base lattice edge.
    Base,
    /// Length-two new edge.
    Short,
    /// New edge of length four or more.
    Long,
    /// Highlighted edge of a figure.
    Bold,
    /// Completion chord.
    Chord,
}

impl Stroke {
    fn attrs(self) -> &'static str {
        match self {
            Stroke::Base => "stroke=\"#c8c8c8\" stroke-width=\"0.6\"",
            Stroke::Short => "stroke=\"#5a5a5a\" stroke-width=\"2.4\"",
            Stroke::Long => "stroke=\"#000000\" stroke-width=\"2.4\"",
            Stroke::Bold => "stroke=\"#000000\" stroke-width=\"1.8\"",
            Stroke::Chord => "stroke=\"#9a9a9a\" stroke-width=\"1.2\" stroke-dasharray=\"3,2\"",
        }
    }

    pub fn for_span(span: u64) -> Stroke {
        match span {
            0 | 1 => Stroke::Base,
            2 | 3 => Stroke::Short,
            _ => Stroke::Long,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Marker {
    /// Open circle, as used for new-edge endpoints.
    Ring,
    Grey,
    Black,
}

/// A drawing over a window in lattice coordinates.
#[derive(Debug, Clone)]
pub struct SvgScene {
    pub window: Window,
    pub scale: u32,
    pub shaded: Vec<(Window, bool)>,
    pub segments: Vec<(Vertex, Vertex, Stroke)>,
    pub markers: Vec<(Vertex, Marker)>,
}

impl SvgScene {
    pub fn new(window: Window) -> Self {
        SvgScene { window, scale: 16, shaded: Vec::new(), segments: Vec::new(), markers: Vec::new() }
    }

    fn px(&self, v: Vertex) -> (i64, i64) {
        let s = self.scale as i64;
        (s + (v.x - self.window.x_min) * s, s + (self.window.y_max - v.y) * s)
    }

    pub fn render(&self) -> String {
        let s = self.scale as i64;
        let w = (self.window.width() as i64 + 1) * s;
        let h = (self.window.height() as i64 + 1) * s;
        let mut out = String::new();
        let _ = writeln!(out, "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">");
        let _ = writeln!(out, "<rect width=\"{w}\" height=\"{h}\" fill=\"#ffffff\"/>");
        for (r, outlined) in &self.shaded {
            let (x0, y0) = self.px(Vertex::new(r.x_min, r.y_max));
            let rw = (r.x_max - r.x_min) * s;
            let rh = (r.y_max - r.y_min) * s;
            let stroke = if *outlined { " stroke=\"#000000\" stroke-width=\"1.8\"" } else { "" };
            let _ = writeln!(out, "<rect x=\"{x0}\" y=\"{y0}\" width=\"{rw}\" height=\"{rh}\" fill=\"#d9d9d9\"{stroke}/>");
        }
        for order in [Stroke::Base, Stroke::Chord, Stroke::Short, Stroke::Long, Stroke::Bold] {
            for &(a, b, st) in self.segments.iter().filter(|seg| seg.2 == order) {
                let (x1, y1) = self.px(a);
                let (x2, y2) = self.px(b);
                let _ = writeln!(out, "<line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" {}/>", st.attrs());
            }
        }
        let r = (s as f64 * 0.3).max(2.0);
        for &(v, m) in &self.markers {
            let (cx, cy) = self.px(v);
            let style = match m {
                Marker::Ring => "fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"1.2\"",
                Marker::Grey => "fill=\"#8c8c8c\"",
                Marker::Black => "fill=\"#000000\"",
            };
            let _ = writeln!(out, "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"{r:.1}\" {style}/>");
        }
        out.push_str("</svg>\n");
        out
    }
}

/// Draw a graph in the figure style: base edges light, new edges by span,
/// new-edge endpoints ringed.
pub fn graph_scene<G: ImplicitGraph + ?Sized>(graph: &G, window: &Window) -> SvgScene {
    let mut scene = SvgScene::new(*window);
    let mut endpoints = Vec::new();
    for (e, _) in edges_in_window(graph, window) {
        let span = e.span();
        scene.segments.push((e.u(), e.v(), Stroke::for_span(span)));
        if span > 1 {
            endpoints.push(e.u());
            endpoints.push(e.v());
        }
    }
    endpoints.sort();
    endpoints.dedup();
    scene.markers = endpoints.into_iter().map(|v| (v, Marker::Ring)).collect();
    scene
}

pub fn to_svg<G: ImplicitGraph + ?Sized>(graph: &G, window: &Window) -> String {
    graph_scene(graph, window).render()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    /// A 3-block and a vertical 3-strip.
    Blocks,
    /// A horizontally aligned pair for `p = 3`.
    Aligned,
    /// The hexagonal lattice and its completion to `Z^2`.
    Hex,
    Triangular,
    Appendix,
}

impl FromStr for Figure {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "blocks" => Ok(Figure::Blocks),
            "aligned" => Ok(Figure::Aligned),
            "hex" => Ok(Figure::Hex),
            "triangular" | "tri" => Ok(Figure::Triangular),
            "appendix" => Ok(Figure::Appendix),
            other => Err(format!("unknown figure {other:?}")),
        }
    }
}

fn grid_lines(scene: &mut SvgScene) {
    for (e, _) in edges_in_window(&PlainGrid, &scene.window) {
        scene.segments.push((e.u(), e.v(), Stroke::Base));
    }
}

fn lattice_marks(scene: &mut SvgScene, m: i64, marker: Marker) {
    let w = scene.window;
    scene.markers.extend(w.vertices().filter(|v| v.is_multiple_of(m)).map(|v| (v, marker)));
}

/// Build a figure. `window` overrides the default extent.
pub fn figure(fig: Figure, window: Option<Window>) -> SvgScene {
    let win = |x1, x2, y1, y2| window.unwrap_or_else(|| Window::new(x1, x2, y1, y2).expect("static window"));
    match fig {
        Figure::Blocks => {
            let mut s = SvgScene::new(win(0, 18, 0, 9));
            s.shaded.push((Window::new(3, 6, 3, 6).expect("static window"), true));
            s.shaded.push((Window::new(12, 15, s.window.y_min, s.window.y_max).expect("static window"), false));
            grid_lines(&mut s);
            lattice_marks(&mut s, 3, Marker::Grey);
            s
        }
        Figure::Aligned => {
            let mut s = SvgScene::new(win(0, 12, 0, 6));
            grid_lines(&mut s);
            lattice_marks(&mut s, 3, Marker::Grey);
            s.markers.push((Vertex::new(0, 1), Marker::Black));
            s.markers.push((Vertex::new(9, 2), Marker::Black));
            s
        }
        Figure::Hex => {
            let mut s = SvgScene::new(win(0, 10, 0, 8));
            for (e, _) in edges_in_window(&HexBrickGraph, &s.window) {
                s.segments.push((e.u(), e.v(), Stroke::Bold));
            }
            for (u, v) in hex_chords(&s.window) {
                s.segments.push((u, v, Stroke::Chord));
            }
            s
        }
        Figure::Triangular => {
            let mut s = SvgScene::new(win(0, 8, 0, 8));
            for (e, _) in edges_in_window(&TriangularGraph, &s.window) {
                let st = if e.span() == 1 { Stroke::Bold } else { Stroke::Chord };
                s.segments.push((e.u(), e.v(), st));
            }
            s
        }
        Figure::Appendix => {
            let w = win(0, 36, 0, 36);
            let mut s = graph_scene(&AppendixGraph, &w);
            s.scale = 12;
            s
        }
    }
}
