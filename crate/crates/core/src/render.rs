//! Plain ASCII arc diagrams.
//!
//! One row per edge, longest edge on top. An edge is drawn as `+---+`
//! between its end points, and every end point of an edge drawn higher up
//! continues downwards as `|`. The last row holds the node indices.

use crate::error::{Error, Result};
use crate::matching::Matching;

/// Largest number of nodes rendered by default.
pub const DEFAULT_WIDTH_LIMIT: usize = 40;

pub fn render_arc_diagram(m: &Matching) -> Result<String> {
    render_arc_diagram_with_limit(m, DEFAULT_WIDTH_LIMIT)
}

pub fn render_arc_diagram_with_limit(m: &Matching, limit: usize) -> Result<String> {
    let nodes = m.size();
    if nodes > limit {
        return Err(Error::TooWide { columns: nodes, limit });
    }
    if nodes == 0 {
        return Ok("(empty matching)\n".to_string());
    }
    let gap = nodes.to_string().len() + 2;
    let col = |node: usize| (node - 1) * gap;
    let width = col(nodes) + 1;

    let mut edges = m.edges().to_vec();
    edges.sort_by_key(|&(a, b)| (std::cmp::Reverse(b - a), a));

    let mut out = String::new();
    let mut down = vec![false; width];
    for &(a, b) in &edges {
        let mut row = vec![b' '; width];
        for (c, cell) in row.iter_mut().enumerate() {
            if down[c] {
                *cell = b'|';
            }
        }
        for cell in &mut row[col(a) + 1..col(b)] {
            if *cell == b' ' {
                *cell = b'-';
            }
        }
        row[col(a)] = b'+';
        row[col(b)] = b'+';
        down[col(a)] = true;
        down[col(b)] = true;
        push_row(&mut out, &row);
    }
    let mut labels = vec![b' '; width + gap];
    for node in 1..=nodes {
        let text = node.to_string();
        labels[col(node)..col(node) + text.len()].copy_from_slice(text.as_bytes());
    }
    push_row(&mut out, &labels);
    Ok(out)
}

fn push_row(out: &mut String, row: &[u8]) {
    out.push_str(String::from_utf8_lossy(row).trim_end());
    out.push('\n');
}
