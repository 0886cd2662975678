//! SVG and TikZ drawings of orbit meanders.
//!
//! Vertex `p±` sits at position `p = n+1−i` for `αᵢ`, on the top (`+`) or
//! bottom (`−`) row. Vertices in `π₁` (top) or `π₂` (bottom) are filled.
//! Component edges are solid, involution arcs dashed.

use std::fmt::Write;

use crate::meander::{OrbitMeander, Side};

#[derive(Debug, Clone, PartialEq)]
pub struct Node {
    pub root: usize,
    pub side: Side,
    pub name: String,
    pub x: f64,
    pub y: f64,
    pub filled: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub a: String,
    pub b: String,
    /// Number of lines in the Dynkin diagram.
    pub bond: i64,
    /// For multiple bonds, whether the arrow points from `a` to `b`.
    pub towards_b: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    /// Endpoint with the smaller position.
    pub a: String,
    pub b: String,
    pub side: Side,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Drawing {
    pub nodes: Vec<Node>,
    pub edges: Vec<Edge>,
    pub arcs: Vec<Arc>,
}

const TOP_Y: f64 = 1.0;
const FORK: f64 = 0.35;

fn node_name(n: usize, i: usize, side: Side) -> String {
    format!("{}{}", n + 1 - i, side.symbol())
}

pub fn layout(m: &OrbitMeander) -> Drawing {
    let s = &m.seaweed;
    let rs = s.root_system();
    let n = s.rank();
    let mut nodes = Vec::new();
    for side in [Side::Top, Side::Bottom] {
        let pi = match side {
            Side::Top => s.pi1(),
            Side::Bottom => s.pi2(),
        };
        let row = if side == Side::Top { TOP_Y } else { 0.0 };
        for i in (1..=n).rev() {
            let col = rs.column(i);
            let shared: Vec<usize> = (1..=n).filter(|&j| rs.column(j) == col).collect();
            let dy = if shared.len() > 1 {
                if shared.iter().all(|&j| j <= i) {
                    FORK
                } else {
                    -FORK
                }
            } else {
                0.0
            };
            nodes.push(Node {
                root: i,
                side,
                name: node_name(n, i, side),
                x: col as f64,
                y: row + dy * if side == Side::Top { 1.0 } else { -1.0 },
                filled: pi.contains(i),
            });
        }
    }
    let mut edges = Vec::new();
    let mut arcs = Vec::new();
    for side in [Side::Top, Side::Bottom] {
        let pi = match side {
            Side::Top => s.pi1(),
            Side::Bottom => s.pi2(),
        };
        let inv = m.involution(side);
        for i in (1..=n).rev() {
            for j in (1..i).rev() {
                if pi.contains(i) && pi.contains(j) && rs.adjacent(i, j) {
                    edges.push(Edge {
                        a: node_name(n, i, side),
                        b: node_name(n, j, side),
                        bond: rs.bond(i, j),
                        towards_b: rs.length_sq(j) < rs.length_sq(i),
                    });
                }
            }
            let j = inv.apply(i);
            if pi.contains(i) && j < i {
                arcs.push(Arc { a: node_name(n, i, side), b: node_name(n, j, side), side });
            }
        }
    }
    Drawing { nodes, edges, arcs }
}

impl Drawing {
    fn node(&self, name: &str) -> &Node {
        self.nodes.iter().find(|v| v.name == name).expect("known node")
    }

    pub fn to_tikz(&self) -> String {
        let mut out = String::new();
        out.push_str("\\begin{tikzpicture}\n[decoration={markings,mark=at position 0.6 with {\\arrow{angle 90}{>}}}]\n");
        for v in &self.nodes {
            let fill = if v.filled { "black" } else { "white" };
            let _ = writeln!(
                out,
                "\\draw ({},{}) node[draw,circle,fill={fill},minimum size=5pt,inner sep=0pt] ({}) {{}};",
                v.x, v.y, v.name
            );
        }
        for e in &self.edges {
            let (a, b) = if e.towards_b { (&e.a, &e.b) } else { (&e.b, &e.a) };
            match e.bond {
                1 => {
                    let _ = writeln!(out, "\\draw ({a}) to ({b});");
                }
                2 => {
                    let _ = writeln!(out, "\\draw [double distance=.8mm,postaction={{decorate}}] ({a}) to ({b});");
                }
                _ => {
                    let _ = writeln!(out, "\\draw [double distance=1.2mm,postaction={{decorate}}] ({a}) to ({b});");
                    let _ = writeln!(out, "\\draw ({a}) to ({b});");
                }
            }
        }
        for arc in &self.arcs {
            let bend = if arc.side == Side::Top { "left" } else { "right" };
            let _ = writeln!(out, "\\draw [dashed] ({}) to [bend {bend}=60] ({});", arc.a, arc.b);
        }
        out.push_str("\\end{tikzpicture}\n");
        out
    }

    pub fn to_svg(&self) -> String {
        const UNIT: f64 = 60.0;
        let min_x = self.nodes.iter().map(|v| v.x).fold(f64::INFINITY, f64::min);
        let max_x = self.nodes.iter().map(|v| v.x).fold(f64::NEG_INFINITY, f64::max);
        let pad = UNIT;
        let px = |x: f64| (x - min_x) * UNIT + pad;
        let py = |y: f64| (TOP_Y + 1.5 - y) * UNIT;
        let width = (max_x - min_x) * UNIT + 2.0 * pad;
        let height = (TOP_Y + 3.0) * UNIT;
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
        );
        for e in &self.edges {
            let (a, b) = (self.node(&e.a), self.node(&e.b));
            let (x1, y1, x2, y2) = (px(a.x), py(a.y), px(b.x), py(b.y));
            let offsets: &[f64] = match e.bond {
                1 => &[0.0],
                2 => &[-2.5, 2.5],
                _ => &[-3.5, 0.0, 3.5],
            };
            let (dx, dy) = (x2 - x1, y2 - y1);
            let len = (dx * dx + dy * dy).sqrt().max(1e-9);
            let (nx, ny) = (-dy / len, dx / len);
            for o in offsets {
                let _ = writeln!(
                    out,
                    r#"  <line class="edge" data-from="{}" data-to="{}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="1.5"/>"#,
                    e.a,
                    e.b,
                    x1 + nx * o,
                    y1 + ny * o,
                    x2 + nx * o,
                    y2 + ny * o
                );
            }
        }
        for arc in &self.arcs {
            let (a, b) = (self.node(&arc.a), self.node(&arc.b));
            let (x1, y1, x2, y2) = (px(a.x), py(a.y), px(b.x), py(b.y));
            let lift = 0.3 * (x2 - x1).abs().max(UNIT * 0.5);
            let cy = if arc.side == Side::Top { y1.min(y2) - lift } else { y1.max(y2) + lift };
            let _ = writeln!(
                out,
                r#"  <path class="arc" data-from="{}" data-to="{}" d="M {x1} {y1} Q {} {cy} {x2} {y2}" fill="none" stroke="black" stroke-dasharray="5,4"/>"#,
                arc.a,
                arc.b,
                (x1 + x2) / 2.0
            );
        }
        for v in &self.nodes {
            let fill = if v.filled { "black" } else { "white" };
            let _ = writeln!(
                out,
                r#"  <circle id="{}" data-root="{}" cx="{}" cy="{}" r="5" fill="{fill}" stroke="black"/>"#,
                v.name,
                v.root,
                px(v.x),
                py(v.y)
            );
        }
        out.push_str("</svg>\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seaweed::Seaweed;

    #[test]
    fn c8_arcs() {
        let s = Seaweed::from_indices("C8".parse().unwrap(), &[8, 7, 6, 3, 2, 1], &[8, 7, 5, 4, 3, 2]).unwrap();
        let d = layout(&OrbitMeander::new(&s));
        let arcs: Vec<(String, String)> = d.arcs.iter().map(|a| (a.a.clone(), a.b.clone())).collect();
        let want = [("1+", "3+"), ("1-", "2-"), ("4-", "7-"), ("5-", "6-")];
        assert_eq!(arcs.len(), want.len());
        for (a, b) in want {
            assert!(arcs.contains(&(a.to_string(), b.to_string())), "{a}-{b} in {arcs:?}");
        }
        assert!(!d.nodes.iter().find(|v| v.name == "4+").unwrap().filled);
        assert!(d.nodes.iter().find(|v| v.name == "3+").unwrap().filled);
    }
}
