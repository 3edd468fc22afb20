//! Text and DOT pictures of Vogan diagrams.
//!
//! The ascii form draws vertices left to right in index order (`o` open,
//! `*` painted) with one three-character glyph per bond; arrows point at the
//! shorter root. The extra branch vertex of `A2lm1_2` sits above vertex 2.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cartan::{AffineType, Family, Gcm, Perm};
use crate::diagram::VoganDiagram;
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Dot,
}

/// Renders a painting and automorphism of `t`.
pub fn render_diagram(t: &AffineType, painted: &[usize], rho: &Perm, format: Format) -> Result<String, Error> {
    let n = t.n();
    if rho.len() != n {
        return Err(Error::NotAnAutomorphism);
    }
    for &v in painted {
        if v >= n {
            return Err(Error::Parse { reason: format!("vertex {} out of range", v) });
        }
        if !rho.is_fixed(v) {
            return Err(Error::InvalidPainting { vertex: v });
        }
    }
    let mut marks = alloc::vec![false; n];
    for &v in painted {
        marks[v] = true;
    }
    Ok(match format {
        Format::Ascii => ascii(t, &marks, rho),
        Format::Dot => dot(t, &marks, rho),
    })
}

/// Convenience wrapper for an already validated diagram.
pub fn render(d: &VoganDiagram, format: Format) -> String {
    render_diagram(d.affine_type(), &d.painted(), d.rho(), format).expect("diagram is validated")
}

fn glyph(a: &Gcm, i: usize, j: usize) -> &'static str {
    let (x, y) = (a.get(i, j).abs(), a.get(j, i).abs());
    match (x, y) {
        (1, 1) => "---",
        (2, 1) => "<==",
        (1, 2) => "==>",
        (3, 1) => "<3=",
        (1, 3) => "=3>",
        (4, 1) => "<4=",
        (1, 4) => "=4>",
        _ => "???",
    }
}

fn vertex(painted: bool) -> char {
    if painted {
        '*'
    } else {
        'o'
    }
}

fn ascii(t: &AffineType, painted: &[bool], rho: &Perm) -> String {
    let a = t.gcm();
    let n = t.n();
    let branch = t.family() == Family::A2lm1_2;
    let chain: Vec<usize> = if branch { (1..n).collect() } else { (0..n).collect() };
    let mut line = String::new();
    let mut labels = String::new();
    for (pos, &v) in chain.iter().enumerate() {
        if pos > 0 {
            line.push_str(glyph(&a, chain[pos - 1], v));
        }
        line.push(vertex(painted[v]));
        let col = pos * 4;
        while labels.chars().count() < col {
            labels.push(' ');
        }
        labels.push_str(&format!("{}", v));
    }
    let mut out = String::new();
    if branch {
        // vertex 2 is the second chain entry, at column 4
        let pad = "    ";
        out.push_str(&format!("{}{} 0\n", pad, vertex(painted[0])));
        out.push_str(&format!("{}{}\n", pad, if rho.is_fixed(0) { "|" } else { "↕" }));
    }
    out.push_str(&line);
    out.push('\n');
    out.push_str(&labels);
    out.push('\n');
    if !rho.is_identity() {
        out.push_str(&format!("rho: {}\n", rho.cycle_string()));
    }
    out
}

fn dot(t: &AffineType, painted: &[bool], rho: &Perm) -> String {
    let a = t.gcm();
    let n = t.n();
    let mut out = String::new();
    out.push_str(&format!("graph \"{}\" {{\n", t));
    out.push_str("  node [shape=circle, label=\"\"];\n");
    for v in 0..n {
        let style = if painted[v] { "filled" } else { "solid" };
        let fill = if painted[v] { ", fillcolor=black" } else { "" };
        out.push_str(&format!("  a{} [xlabel=\"{}\", style={}{}];\n", v, v, style, fill));
    }
    for i in 0..n {
        for j in i + 1..n {
            if a.get(i, j) == 0 {
                continue;
            }
            let (x, y) = (a.get(i, j).abs(), a.get(j, i).abs());
            let lines = x.max(y);
            let attr = if x == y {
                String::new()
            } else {
                let short = if x > y { i } else { j };
                format!(", label=\"{}>{}\"", lines, short)
            };
            out.push_str(&format!("  a{} -- a{} [penwidth={}{}];\n", i, j, lines, attr));
        }
    }
    for c in rho.cycles() {
        if c.len() == 2 {
            out.push_str(&format!("  a{} -- a{} [style=dashed, constraint=false];\n", c[0], c[1]));
        }
    }
    out.push_str("}\n");
    out
}
