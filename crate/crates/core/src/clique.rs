//! Exact monochromatic k-clique enumeration over neighbor bit masks.
//!
//! Cliques are grown in ascending vertex order: the candidate set after
//! choosing `v` is the previous candidate set intersected with the
//! same-colored neighbors of `v` above `v`. Every k-subset is therefore
//! reached at most once and output is lexicographic.

use std::fmt;
use std::time::{Duration, Instant};

use crate::coloring::{Color, Coloring, Vertex};
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A vertex set, sorted ascending, that is monochromatic in `color`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Clique {
    pub vertices: Vec<Vertex>,
    pub color: Color,
}

impl Clique {
    pub fn new(mut vertices: Vec<Vertex>, color: Color) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Clique { vertices, color }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Whether every internal edge has `self.color` in `c`.
    pub fn holds_in(&self, c: &Coloring) -> bool {
        self.vertices
            .iter()
            .enumerate()
            .all(|(i, &a)| self.vertices[i + 1..].iter().all(|&b| c.color(a, b) == Some(self.color)))
    }
}

impl fmt::Display for Clique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

fn check_k(c: &Coloring, k: usize) -> Result<()> {
    let active = c.active().len();
    if k < 2 || k > active {
        return Err(Error::CliqueSizeOutOfRange { k, active });
    }
    Ok(())
}

/// Counts `remaining`-cliques inside `cand` (all vertices of `cand` are
/// assumed compatible with whatever has been chosen so far).
pub(crate) fn count_within(c: &Coloring, color: Color, cand: VertexSet, remaining: usize) -> u64 {
    match remaining {
        0 => 1,
        1 => cand.len() as u64,
        2 => cand
            .iter()
            .map(|v| cand.intersection(c.neighbors(v, color)).intersection(VertexSet::above(v)).len() as u64)
            .sum(),
        _ => {
            if cand.len() < remaining {
                return 0;
            }
            cand.iter()
                .map(|v| {
                    let next = cand.intersection(c.neighbors(v, color)).intersection(VertexSet::above(v));
                    count_within(c, color, next, remaining - 1)
                })
                .sum()
        }
    }
}

fn collect_within(
    c: &Coloring,
    color: Color,
    cand: VertexSet,
    remaining: usize,
    prefix: &mut Vec<Vertex>,
    out: &mut Vec<Vec<Vertex>>,
) {
    if remaining == 0 {
        out.push(prefix.clone());
        return;
    }
    if cand.len() < remaining {
        return;
    }
    for v in cand {
        let next = cand.intersection(c.neighbors(v, color)).intersection(VertexSet::above(v));
        prefix.push(v);
        collect_within(c, color, next, remaining - 1, prefix, out);
        prefix.pop();
    }
}

/// All monochromatic `k`-cliques of `color`, in ascending lexicographic order.
pub fn enumerate_mono(c: &Coloring, color: Color, k: usize) -> Result<Vec<Clique>> {
    check_k(c, k)?;
    let mut raw = Vec::new();
    collect_within(c, color, c.active(), k, &mut Vec::with_capacity(k), &mut raw);
    Ok(raw.into_iter().map(|vertices| Clique { vertices, color }).collect())
}

/// Number of monochromatic `k`-cliques of `color`, without materializing them.
pub fn count_mono(c: &Coloring, color: Color, k: usize) -> Result<u64> {
    check_k(c, k)?;
    Ok(count_within(c, color, c.active(), k))
}

/// Active vertices outside `vs` joined to every member of `vs` by `color`.
pub fn common_color_neighbors(c: &Coloring, color: Color, vs: &[Vertex]) -> Result<VertexSet> {
    if vs.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let mut common = c.active();
    for &v in vs {
        if v >= c.order() {
            return Err(Error::VertexOutOfRange { vertex: v, order: c.order() });
        }
        if !c.is_active(v) {
            return Err(Error::InactiveVertex(v));
        }
        common = common.intersection(c.neighbors(v, color));
    }
    // neighbor masks never contain their owner, so members of vs drop out
    Ok(common)
}

/// Monochromatic `k`-cliques of `color` through edge `(a, b)`, computed from
/// the common neighborhood of the edge only.
pub fn cliques_through_edge(c: &Coloring, color: Color, a: Vertex, b: Vertex, k: usize) -> Result<Vec<Clique>> {
    if c.edge_color(a, b)? != color {
        return Err(Error::WrongEdgeColor(a, b));
    }
    if k < 2 {
        return Err(Error::CliqueSizeOutOfRange { k, active: c.active().len() });
    }
    let common = common_color_neighbors(c, color, &[a, b])?;
    let mut raw = Vec::new();
    collect_within(c, color, common, k - 2, &mut Vec::with_capacity(k), &mut raw);
    let mut cliques: Vec<Clique> = raw
        .into_iter()
        .map(|mut vs| {
            vs.push(a);
            vs.push(b);
            Clique::new(vs, color)
        })
        .collect();
    cliques.sort();
    Ok(cliques)
}

/// Number of monochromatic `k`-cliques of `color` that would contain edge
/// `(a, b)` if that edge had `color`, whatever its current color is.
pub(crate) fn count_through_pair(c: &Coloring, color: Color, a: Vertex, b: Vertex, k: usize) -> u64 {
    let common = c.neighbors(a, color).intersection(c.neighbors(b, color));
    count_within(c, color, common, k - 2)
}

/// Exact per-color counts (and optionally the cliques themselves) for one `k`.
#[derive(Clone, Debug)]
pub struct CliqueReport {
    pub k: usize,
    pub red_count: u64,
    pub blue_count: u64,
    pub red_cliques: Option<Vec<Clique>>,
    pub blue_cliques: Option<Vec<Clique>>,
    pub elapsed: Duration,
}

impl CliqueReport {
    pub fn compute(c: &Coloring, k: usize, materialize: bool) -> Result<CliqueReport> {
        let start = Instant::now();
        let (red_count, blue_count, red_cliques, blue_cliques) = if materialize {
            let red = enumerate_mono(c, Color::Red, k)?;
            let blue = enumerate_mono(c, Color::Blue, k)?;
            (red.len() as u64, blue.len() as u64, Some(red), Some(blue))
        } else {
            (count_mono(c, Color::Red, k)?, count_mono(c, Color::Blue, k)?, None, None)
        };
        Ok(CliqueReport { k, red_count, blue_count, red_cliques, blue_cliques, elapsed: start.elapsed() })
    }

    pub fn count(&self, color: Color) -> u64 {
        match color {
            Color::Red => self.red_count,
            Color::Blue => self.blue_count,
        }
    }

    pub fn total(&self) -> u64 {
        self.red_count + self.blue_count
    }
}
