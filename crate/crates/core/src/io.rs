//! Input parsing, rendering and export formats.
//!
//! The ASCII grid format uses `#` for a cell and `.` for empty; row `r`
//! counted from the top maps to `y = height - 1 - r`, so the text reads the
//! way the collection is drawn. The JSON input format is
//! `{"cells": [[x, y], ...]}`.

use std::fmt::Write as _;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::grid::{Cell, CellCollection, Orientation, Point};

/// Parse the ASCII grid format.
pub fn parse_ascii(text: &str) -> Result<CellCollection> {
    let rows: Vec<&str> = text.lines().collect();
    let rows: Vec<&str> = rows
        .iter()
        .copied()
        .filter(|r| !r.is_empty())
        .collect();
    if rows.is_empty() {
        return Err(Error::Parse {
            line: 1,
            col: 1,
            msg: "empty grid".into(),
        });
    }
    let width = rows[0].chars().count();
    let height = rows.len();
    let mut cells = Vec::new();
    for (r, row) in rows.iter().enumerate() {
        if row.chars().count() != width {
            return Err(Error::Parse {
                line: r + 1,
                col: row.chars().count() + 1,
                msg: format!("ragged row: expected width {width}"),
            });
        }
        for (c, ch) in row.chars().enumerate() {
            match ch {
                '#' => cells.push(Cell::new(c as i64, (height - 1 - r) as i64)),
                '.' => {}
                other => {
                    return Err(Error::Parse {
                        line: r + 1,
                        col: c + 1,
                        msg: format!("illegal character {other:?}"),
                    })
                }
            }
        }
    }
    if cells.is_empty() {
        return Err(Error::Parse {
            line: 1,
            col: 1,
            msg: "grid contains no cells".into(),
        });
    }
    CellCollection::new(cells)
}

#[derive(Deserialize)]
struct CellsJson {
    cells: Vec<(i64, i64)>,
}

/// Parse the JSON input format. Duplicate cells are tolerated and reported
/// as warnings; an empty cell list is an error.
pub fn parse_json(text: &str) -> Result<(CellCollection, Vec<String>)> {
    let parsed: CellsJson = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        col: e.column(),
        msg: e.to_string(),
    })?;
    let mut warnings = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for &(x, y) in &parsed.cells {
        if !seen.insert((x, y)) {
            warnings.push(format!("duplicate cell ({x},{y})"));
        }
    }
    let collection = CellCollection::from_coords(seen)?;
    Ok((collection, warnings))
}

/// Output format selector for [`render`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

/// Overlay layers a render can carry.
#[derive(Debug, Clone, PartialEq)]
pub enum Overlay {
    Holes,
    EdgeIntervals,
    Witness(crate::pathclass::ConfigurationWitness),
    Walk(crate::zigzag::ZigZagWalk),
}

impl Overlay {
    pub fn id(&self) -> &'static str {
        match self {
            Overlay::Holes => "holes",
            Overlay::EdgeIntervals => "edge-intervals",
            Overlay::Witness(_) => "witness",
            Overlay::Walk(_) => "walk",
        }
    }
}

/// Render a collection as ASCII art or SVG, with optional overlay layers.
/// Output is byte-deterministic for identical inputs.
pub fn render(p: &CellCollection, format: RenderFormat, overlays: &[Overlay]) -> String {
    match format {
        RenderFormat::Ascii => render_ascii(p, overlays),
        RenderFormat::Svg => render_svg(p, overlays),
    }
}

fn render_ascii(p: &CellCollection, overlays: &[Overlay]) -> String {
    let bb = p.bounding_box();
    let width = (bb.hi.x - bb.lo.x) as usize;
    let height = (bb.hi.y - bb.lo.y) as usize;
    let mut grid = vec![vec!['.'; width]; height];
    for c in p.cells() {
        let col = (c.lower_left.x - bb.lo.x) as usize;
        let row = height - 1 - (c.lower_left.y - bb.lo.y) as usize;
        grid[row][col] = '#';
    }
    let mut legend = String::new();
    for overlay in overlays {
        match overlay {
            Overlay::Holes => {
                for hole in p.holes() {
                    for c in hole.cells() {
                        let col = (c.lower_left.x - bb.lo.x) as usize;
                        let row = height - 1 - (c.lower_left.y - bb.lo.y) as usize;
                        grid[row][col] = 'o';
                    }
                }
            }
            Overlay::EdgeIntervals => {
                for e in p.all_maximal_edge_intervals() {
                    let _ = writeln!(legend, "; {e}");
                }
            }
            Overlay::Witness(w) => {
                for c in w.cells() {
                    let col = (c.lower_left.x - bb.lo.x) as usize;
                    let row = height - 1 - (c.lower_left.y - bb.lo.y) as usize;
                    if grid[row][col] == '#' {
                        grid[row][col] = 'W';
                    }
                }
                let _ = writeln!(legend, "; witness: {}", w.kind_name());
            }
            Overlay::Walk(w) => {
                for step in &w.steps {
                    let _ = writeln!(
                        legend,
                        "; step I={} v={} z={}",
                        step.interval, step.v_entry, step.z
                    );
                }
            }
        }
    }
    let mut out = String::new();
    for row in grid {
        out.extend(row);
        out.push('\n');
    }
    out.pop();
    if !legend.is_empty() {
        out.push('\n');
        out.push_str(legend.trim_end());
    }
    out
}

const SVG_UNIT: i64 = 20;

fn svg_x(bb: crate::grid::LatticeInterval, x: i64) -> i64 {
    (x - bb.lo.x) * SVG_UNIT
}

fn svg_y(bb: crate::grid::LatticeInterval, y: i64) -> i64 {
    (bb.hi.y - y) * SVG_UNIT
}

fn render_svg(p: &CellCollection, overlays: &[Overlay]) -> String {
    let bb = p.bounding_box();
    let width = (bb.hi.x - bb.lo.x) * SVG_UNIT;
    let height = (bb.hi.y - bb.lo.y) * SVG_UNIT;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {width} {height}\" width=\"{width}\" height=\"{height}\">"
    );
    let _ = writeln!(s, "<g id=\"cells\">");
    for c in p.cells() {
        let x = svg_x(bb, c.lower_left.x);
        let y = svg_y(bb, c.lower_left.y + 1);
        let _ = writeln!(
            s,
            "<rect x=\"{x}\" y=\"{y}\" width=\"{SVG_UNIT}\" height=\"{SVG_UNIT}\" fill=\"#4a4a4a\" stroke=\"#ffffff\" stroke-width=\"1\"/>"
        );
    }
    let _ = writeln!(s, "</g>");
    for overlay in overlays {
        let _ = writeln!(s, "<g id=\"{}\">", overlay.id());
        match overlay {
            Overlay::Holes => {
                for hole in p.holes() {
                    for c in hole.cells() {
                        let x = svg_x(bb, c.lower_left.x);
                        let y = svg_y(bb, c.lower_left.y + 1);
                        let _ = writeln!(
                            s,
                            "<rect x=\"{x}\" y=\"{y}\" width=\"{SVG_UNIT}\" height=\"{SVG_UNIT}\" fill=\"#cc4444\" fill-opacity=\"0.6\"/>"
                        );
                    }
                }
            }
            Overlay::EdgeIntervals => {
                for e in p.all_maximal_edge_intervals() {
                    let (a, b) = e.endpoints();
                    let _ = writeln!(
                        s,
                        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"2\"/>",
                        svg_x(bb, a.x),
                        svg_y(bb, a.y),
                        svg_x(bb, b.x),
                        svg_y(bb, b.y),
                        match e.orientation {
                            Orientation::Horizontal => "#2266cc",
                            Orientation::Vertical => "#22aa66",
                        }
                    );
                }
            }
            Overlay::Witness(w) => {
                for c in w.cells() {
                    let x = svg_x(bb, c.lower_left.x);
                    let y = svg_y(bb, c.lower_left.y + 1);
                    let _ = writeln!(
                        s,
                        "<rect x=\"{x}\" y=\"{y}\" width=\"{SVG_UNIT}\" height=\"{SVG_UNIT}\" fill=\"none\" stroke=\"#ffaa00\" stroke-width=\"3\"/>"
                    );
                }
                for m in w.marked_points() {
                    let _ = writeln!(
                        s,
                        "<circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"#ffaa00\"/>",
                        svg_x(bb, m.x),
                        svg_y(bb, m.y)
                    );
                }
            }
            Overlay::Walk(w) => {
                for step in &w.steps {
                    let i = step.interval;
                    let x = svg_x(bb, i.lo.x);
                    let y = svg_y(bb, i.hi.y);
                    let _ = writeln!(
                        s,
                        "<rect x=\"{x}\" y=\"{y}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"#cc22cc\" stroke-width=\"2\"/>",
                        (i.hi.x - i.lo.x) * SVG_UNIT,
                        (i.hi.y - i.lo.y) * SVG_UNIT
                    );
                    let _ = writeln!(
                        s,
                        "<circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"#cc22cc\"/>",
                        svg_x(bb, step.v_entry.x),
                        svg_y(bb, step.v_entry.y)
                    );
                }
            }
        }
        let _ = writeln!(s, "</g>");
    }
    s.push_str("</svg>\n");
    s
}

/// Parse an overlay name, attaching the evidence objects it references.
pub fn overlay_from_name(
    name: &str,
    p: &CellCollection,
    budget: &crate::classify::Budget,
) -> Result<Overlay> {
    match name {
        "holes" => Ok(Overlay::Holes),
        "edge-intervals" => Ok(Overlay::EdgeIntervals),
        "witness" => match crate::pathclass::find_any_prime_configuration(p) {
            Some(w) => Ok(Overlay::Witness(w)),
            None => Err(Error::InvalidArgument(
                "no configuration witness found for overlay".into(),
            )),
        },
        "walk" => match crate::zigzag::find_zigzag_walk(p, budget.walk_len_for(p)) {
            crate::zigzag::SearchOutcome::Found(w) => Ok(Overlay::Walk(w)),
            _ => Err(Error::InvalidArgument(
                "no zig-zag walk found for overlay".into(),
            )),
        },
        other => Err(Error::UnknownOverlay(other.to_string())),
    }
}

/// Variable name for a vertex: `x_<i>_<j>`, negative coordinates prefixed
/// with `m` (so `(-1, 2)` becomes `x_m1_2`). The grammar is documented in
/// `docs/cas-format.md`.
pub fn cas_variable_name(p: Point) -> String {
    fn coord(v: i64) -> String {
        if v < 0 {
            format!("m{}", -v)
        } else {
            v.to_string()
        }
    }
    format!("x_{}_{}", coord(p.x), coord(p.y))
}

/// Export the collection's ideal as a CAS script: a ring declaration over
/// the rationals, the inner 2-minor generators, and optionally the image
/// table of a monomial map.
pub fn export_cas(p: &CellCollection, map: Option<&crate::algebra::MonomialMap>) -> String {
    let mut s = String::new();
    let vars: Vec<String> = p.vertices().iter().map(|&v| cas_variable_name(v)).collect();
    let _ = writeln!(s, "ring R = QQ[{}];", vars.join(", "));
    let minors = crate::algebra::inner_2_minors(p);
    let _ = writeln!(s, "ideal I = [");
    for (i, b) in minors.iter().enumerate() {
        let sep = if i + 1 == minors.len() { "" } else { "," };
        let _ = writeln!(s, "  {b}{sep}");
    }
    let _ = writeln!(s, "];");
    if let Some(m) = map {
        let _ = writeln!(s, "map phi = [");
        let entries = m.entries();
        for (i, (v, img)) in entries.iter().enumerate() {
            let sep = if i + 1 == entries.len() { "" } else { "," };
            let _ = writeln!(s, "  {} -> {}{}", cas_variable_name(*v), img, sep);
        }
        let _ = writeln!(s, "];");
    }
    s
}

/// The plain-text dump of a bipartite interval graph used by golden tests:
/// one line per node (`V i line lo hi` / `H j line lo hi`), one line per
/// edge (`E i j wx wy`).
pub fn graph_dump(g: &crate::graph::BipartiteIntervalGraph) -> String {
    let mut s = String::new();
    for (i, v) in g.v_nodes.iter().enumerate() {
        let _ = writeln!(s, "V {i} {} {} {}", v.line, v.span.0, v.span.1);
    }
    for (j, h) in g.h_nodes.iter().enumerate() {
        let _ = writeln!(s, "H {j} {} {} {}", h.line, h.span.0, h.span.1);
    }
    for &(i, j, w) in &g.edges {
        let _ = writeln!(s, "E {i} {j} {} {}", w.x, w.y);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn parse_ascii_examples() {
        assert_eq!(parse_ascii("#").unwrap(), fixtures::f1());
        assert_eq!(parse_ascii("##\n##").unwrap(), fixtures::f2());
        assert_eq!(parse_ascii("###\n#.#\n###").unwrap(), fixtures::f4());
    }

    #[test]
    fn parse_ascii_rejects_bad_input() {
        assert!(matches!(parse_ascii(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_ascii("..\n.."), Err(Error::Parse { .. })));
        assert!(matches!(parse_ascii("##\n#"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(
            parse_ascii("#x"),
            Err(Error::Parse { line: 1, col: 2, .. })
        ));
    }

    #[test]
    fn parse_json_examples() {
        let (p, warnings) = parse_json(r#"{"cells":[[0,0]]}"#).unwrap();
        assert_eq!(p, fixtures::f1());
        assert!(warnings.is_empty());

        let (p, warnings) = parse_json(r#"{"cells":[[0,0],[0,0],[1,1]]}"#).unwrap();
        assert_eq!(p, fixtures::f5());
        assert_eq!(warnings.len(), 1);

        assert!(parse_json(r#"{"cells":[]}"#).is_err());
        assert!(parse_json(r#"{"cells":[[0.5,0]]}"#).is_err());
    }

    #[test]
    fn render_ascii_examples() {
        assert_eq!(render(&fixtures::f1(), RenderFormat::Ascii, &[]), "#");
        assert_eq!(
            render(&fixtures::f4(), RenderFormat::Ascii, &[]),
            "###\n#.#\n###"
        );
    }

    #[test]
    fn render_ascii_holes_overlay() {
        let out = render(&fixtures::f4(), RenderFormat::Ascii, &[Overlay::Holes]);
        assert_eq!(out, "###\n#o#\n###");
    }

    #[test]
    fn parse_render_round_trip_on_fixtures() {
        for (name, p) in fixtures::all() {
            let q = p.canonical_translate();
            let text = render(&q, RenderFormat::Ascii, &[]);
            assert_eq!(parse_ascii(&text).unwrap(), q, "fixture {name}");
        }
    }

    #[test]
    fn svg_render_is_deterministic() {
        let a = render(&fixtures::f6(), RenderFormat::Svg, &[Overlay::Holes]);
        let b = render(&fixtures::f6(), RenderFormat::Svg, &[Overlay::Holes]);
        assert_eq!(a, b);
        assert!(a.contains("<g id=\"holes\">"));
    }

    #[test]
    fn cas_export_counts_generators() {
        let one = export_cas(&fixtures::f1(), None);
        assert_eq!(one.matches(" - ").count(), 1);
        let nine = export_cas(&fixtures::f2(), None);
        assert_eq!(nine.lines().filter(|l| l.starts_with("  x")).count(), 9);
    }
}
