//! Static SVG and TikZ drawings of configurations, walks and bead matchings.

use std::fmt::Write;

use llt_core::swap::{BeadSequence, BoundaryBead, EdgeRef, Matching, Side, Walk};
use llt_core::LatticeConfig;

const FACE: f64 = 40.0;
const MARGIN: f64 = 30.0;
const PALETTE: [&str; 8] = ["#1f5fbf", "#c8102e", "#2e8b57", "#e69500", "#7b3fa0", "#008b8b", "#8b4513", "#555555"];

fn color_name(c: usize) -> &'static str {
    PALETTE[(c - 1) % PALETTE.len()]
}

fn tikz_color(c: usize) -> &'static str {
    ["blue", "red", "green!60!black", "orange", "violet", "teal", "brown", "gray"][(c - 1) % 8]
}

struct Grid<'a> {
    cfg: &'a LatticeConfig,
}

impl Grid<'_> {
    fn width(&self) -> f64 {
        2.0 * MARGIN + self.cfg.cols as f64 * FACE
    }

    fn height(&self) -> f64 {
        2.0 * MARGIN + self.cfg.rows as f64 * FACE
    }

    /// Top-left corner of face `(h, c)`; row 0 is drawn at the bottom.
    fn corner(&self, h: usize, c: usize) -> (f64, f64) {
        (MARGIN + c as f64 * FACE, MARGIN + (self.cfg.rows - 1 - h) as f64 * FACE)
    }

    fn offset(&self, color: usize) -> f64 {
        (color as f64 - (self.cfg.k as f64 + 1.0) / 2.0) * 4.0
    }

    /// Path pieces inside each face: entry midpoint, centre, exit midpoint.
    fn strands(&self) -> Vec<(usize, [(f64, f64); 3])> {
        let mut out = Vec::new();
        for h in 0..self.cfg.rows {
            for c in 0..self.cfg.cols {
                let f = self.cfg.face(h, c);
                let (x0, y0) = self.corner(h, c);
                for color in f.present().colors() {
                    let d = self.offset(color);
                    let mid = (x0 + FACE / 2.0 + d, y0 + FACE / 2.0 - d);
                    let from =
                        if f.i.has(color) { (x0 + FACE / 2.0 + d, y0 + FACE) } else { (x0, y0 + FACE / 2.0 - d) };
                    let to = if f.k.has(color) { (x0 + FACE / 2.0 + d, y0) } else { (x0 + FACE, y0 + FACE / 2.0 - d) };
                    out.push((color, [from, mid, to]));
                }
            }
        }
        out
    }

    /// Short segment across the boundary crossed by an edge.
    fn edge_segment(&self, e: EdgeRef) -> ((f64, f64), (f64, f64)) {
        let rows = self.cfg.rows;
        match e {
            EdgeRef::V { level, col } => {
                let x = MARGIN + col as f64 * FACE + FACE / 2.0;
                let y = MARGIN + (rows - level) as f64 * FACE;
                ((x, y - FACE / 4.0), (x, y + FACE / 4.0))
            }
            EdgeRef::H { row, pos } => {
                let x = MARGIN + pos as f64 * FACE;
                let y = MARGIN + (rows - 1 - row) as f64 * FACE + FACE / 2.0;
                ((x - FACE / 4.0, y), (x + FACE / 4.0, y))
            }
        }
    }
}

pub fn config_svg(cfg: &LatticeConfig, walks: &[Walk]) -> String {
    let g = Grid { cfg };
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{:.0}" height="{:.0}" font-family="sans-serif" font-size="10">"#,
        g.width(),
        g.height()
    );
    for h in 0..cfg.rows {
        for c in 0..cfg.cols {
            let (x, y) = g.corner(h, c);
            let _ = writeln!(
                s,
                r##"<rect x="{x:.1}" y="{y:.1}" width="{FACE}" height="{FACE}" fill="none" stroke="#cccccc"/>"##
            );
        }
        let (_, y) = g.corner(h, 0);
        let _ = writeln!(
            s,
            r#"<text x="{:.1}" y="{:.1}" text-anchor="end">{}</text>"#,
            MARGIN - 6.0,
            y + FACE / 2.0 + 3.0,
            h + 1
        );
    }
    for c in 0..cfg.cols {
        let x = MARGIN + c as f64 * FACE + FACE / 2.0;
        let _ = writeln!(
            s,
            r#"<text x="{x:.1}" y="{:.1}" text-anchor="middle">{}</text>"#,
            g.height() - MARGIN + 14.0,
            cfg.r + c as i64
        );
    }
    for w in walks {
        for (e, color) in w.edges() {
            let ((x1, y1), (x2, y2)) = g.edge_segment(e);
            let _ = writeln!(
                s,
                r#"<line x1="{x1:.1}" y1="{y1:.1}" x2="{x2:.1}" y2="{y2:.1}" stroke="{}" stroke-width="9" stroke-opacity="0.3"/>"#,
                color_name(color.index())
            );
        }
    }
    for (color, pts) in g.strands() {
        let p: Vec<String> = pts.iter().map(|(x, y)| format!("{x:.1},{y:.1}")).collect();
        let _ = writeln!(
            s,
            r#"<polyline points="{}" fill="none" stroke="{}" stroke-width="2"/>"#,
            p.join(" "),
            color_name(color)
        );
    }
    s.push_str("</svg>\n");
    s
}

pub fn config_tikz(cfg: &LatticeConfig, walks: &[Walk]) -> String {
    let scale = 1.0 / FACE;
    let g = Grid { cfg };
    let pt = |(x, y): (f64, f64)| format!("({:.3},{:.3})", x * scale, (g.height() - y) * scale);
    let mut s = String::from("\\begin{tikzpicture}\n");
    for h in 0..cfg.rows {
        for c in 0..cfg.cols {
            let (x, y) = g.corner(h, c);
            let _ = writeln!(s, "\\draw[gray!40] {} rectangle {};", pt((x, y)), pt((x + FACE, y + FACE)));
        }
    }
    for c in 0..cfg.cols {
        let x = MARGIN + c as f64 * FACE + FACE / 2.0;
        let _ = writeln!(s, "\\node[below] at {} {{\\tiny ${}$}};", pt((x, g.height() - MARGIN)), cfg.r + c as i64);
    }
    for w in walks {
        for (e, color) in w.edges() {
            let (a, b) = g.edge_segment(e);
            let _ = writeln!(
                s,
                "\\draw[{}, line width=4pt, opacity=0.3] {} -- {};",
                tikz_color(color.index()),
                pt(a),
                pt(b)
            );
        }
    }
    for (color, [a, m, b]) in g.strands() {
        let _ = writeln!(s, "\\draw[{}, thick] {} -- {} -- {};", tikz_color(color), pt(a), pt(m), pt(b));
    }
    s.push_str("\\end{tikzpicture}\n");
    s
}

const BEAD_GAP: f64 = 40.0;
const ROW_GAP: f64 = 110.0;

struct BeadLayout {
    min_col: i64,
    width: f64,
}

impl BeadLayout {
    fn of(beads: &BeadSequence) -> Self {
        let cols: Vec<i64> = beads.cyclic().iter().map(|b| b.column).collect();
        let min_col = cols.iter().copied().min().unwrap_or(0);
        let max_col = cols.iter().copied().max().unwrap_or(0);
        BeadLayout { min_col, width: 2.0 * MARGIN + (max_col - min_col) as f64 * BEAD_GAP }
    }

    fn pos(&self, b: &BoundaryBead, top: f64) -> (f64, f64) {
        let x = MARGIN + (b.column - self.min_col) as f64 * BEAD_GAP;
        let y = if b.side == Side::Top { top } else { top + ROW_GAP };
        (x, y)
    }
}

fn arc_path(l: &BeadLayout, a: &BoundaryBead, b: &BoundaryBead, top: f64) -> String {
    let (p, q) = (l.pos(a, top), l.pos(b, top));
    if a.side != b.side {
        return format!("M {:.1} {:.1} L {:.1} {:.1}", p.0, p.1, q.0, q.1);
    }
    let (left, right) = if p.0 <= q.0 { (p, q) } else { (q, p) };
    let r = (right.0 - left.0) / 2.0;
    let sweep = if a.side == Side::Top { 0 } else { 1 };
    format!(
        "M {:.1} {:.1} A {r:.1} {:.1} 0 0 {sweep} {:.1} {:.1}",
        left.0,
        left.1,
        (r * 0.8).min(ROW_GAP / 2.0 - 5.0),
        right.0,
        right.1
    )
}

/// One panel per matching, or a single bead panel when `matchings` is empty.
pub fn beads_svg(beads: &BeadSequence, matchings: &[Matching]) -> String {
    let l = BeadLayout::of(beads);
    let panels = matchings.len().max(1);
    let panel_h = ROW_GAP + 2.0 * MARGIN;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{:.0}" height="{:.0}" font-family="sans-serif" font-size="11">"#,
        l.width,
        panels as f64 * panel_h
    );
    for p in 0..panels {
        let top = MARGIN + p as f64 * panel_h;
        for y in [top, top + ROW_GAP] {
            let _ = writeln!(
                s,
                r##"<line x1="0" y1="{y:.1}" x2="{:.1}" y2="{y:.1}" stroke="#999999" stroke-dasharray="4 3"/>"##,
                l.width
            );
        }
        if let Some(m) = matchings.get(p) {
            for a in &m.arcs {
                let _ = writeln!(
                    s,
                    r#"<path d="{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
                    arc_path(&l, &a.0, &a.1, top)
                );
            }
        }
        for b in beads.cyclic() {
            let (x, y) = l.pos(&b, top);
            let dy = if b.side == Side::Top { -8.0 } else { 16.0 };
            let _ = writeln!(s, r#"<circle cx="{x:.1}" cy="{y:.1}" r="5" fill="{}"/>"#, color_name(b.color.index()));
            let _ = writeln!(s, r#"<text x="{x:.1}" y="{:.1}" text-anchor="middle">{}</text>"#, y + dy, b.label);
        }
    }
    s.push_str("</svg>\n");
    s
}

pub fn beads_tikz(beads: &BeadSequence, matchings: &[Matching]) -> String {
    let l = BeadLayout::of(beads);
    let panels = matchings.len().max(1);
    let panel_h = ROW_GAP + 2.0 * MARGIN;
    let total = panels as f64 * panel_h;
    let scale = 1.0 / BEAD_GAP;
    let pt = |(x, y): (f64, f64)| format!("({:.3},{:.3})", x * scale, (total - y) * scale);
    let mut s = String::from("\\begin{tikzpicture}\n");
    for p in 0..panels {
        let top = MARGIN + p as f64 * panel_h;
        for y in [top, top + ROW_GAP] {
            let _ = writeln!(s, "\\draw[dashed] {} -- {};", pt((0.0, y)), pt((l.width, y)));
        }
        if let Some(m) = matchings.get(p) {
            for a in &m.arcs {
                let (u, v) = (l.pos(&a.0, top), l.pos(&a.1, top));
                if a.0.side != a.1.side {
                    let _ = writeln!(s, "\\draw[thick] {} -- {};", pt(u), pt(v));
                } else {
                    let bend = if a.0.side == Side::Top { "right" } else { "left" };
                    let (u, v) = if u.0 <= v.0 { (u, v) } else { (v, u) };
                    let _ = writeln!(s, "\\draw[thick] {} to[bend {bend}=60] {};", pt(u), pt(v));
                }
            }
        }
        for b in beads.cyclic() {
            let at = l.pos(&b, top);
            let side = if b.side == Side::Top { "above" } else { "below" };
            let c = tikz_color(b.color.index());
            let _ = writeln!(s, "\\draw[{c}, fill={c}] {} circle (3pt) node[{side}, black] {{${}$}};", pt(at), b.label);
        }
    }
    s.push_str("\\end{tikzpicture}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use llt_core::lattice::enumerate_configs;
    use llt_core::swap::{bead_sequence, enumerate_noncrossing_matchings, walks};
    use llt_core::ShapeTuple;

    #[test]
    fn svg_and_tikz_are_well_formed() {
        let t: ShapeTuple = "((2,1),(1))".parse().unwrap();
        let cfg = &enumerate_configs(&t, 2).unwrap()[0];
        let ws = walks(cfg).unwrap();
        let svg = config_svg(cfg, &ws);
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
        assert!(svg.contains("polyline"));
        let tikz = config_tikz(cfg, &ws);
        assert!(tikz.contains("\\begin{tikzpicture}") && tikz.contains("\\end{tikzpicture}"));

        let b = bead_sequence(&"((8,7,6),(4,3,2)/(2,0,0))".parse().unwrap()).unwrap();
        let ms = enumerate_noncrossing_matchings(&b);
        let svg = beads_svg(&b, &ms);
        assert_eq!(svg.matches("<circle").count(), 6);
        assert_eq!(svg.matches("<path").count(), 3);
        assert!(beads_tikz(&b, &ms).contains("bend"));
    }
}
