//! Two-colorings of complete graphs built from a circulant base.
//!
//! A [`ColoringSpec`] is the portable recipe: an order `n`, the set of
//! circular lengths colored blue (every other length is red), a list of
//! edge flips and a set of deleted vertices. [`Coloring`] is the
//! materialized form with one red and one blue neighbor mask per vertex.
//! The recipe is always applied as base coloring, then flips, then
//! deletions. Deleted vertices keep their labels.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_ORDER};

pub type Vertex = usize;

/// An undirected edge, always stored with the smaller endpoint first.
pub type Edge = (Vertex, Vertex);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub const BOTH: [Color; 2] = [Color::Red, Color::Blue];

    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Color::Red => "red",
            Color::Blue => "blue",
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Color {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "red" => Ok(Color::Red),
            "blue" => Ok(Color::Blue),
            _ => Err(Error::Unknown { kind: "color", name: s.to_string() }),
        }
    }
}

/// Normalizes an unordered pair so the smaller endpoint comes first.
#[inline]
pub fn edge(a: Vertex, b: Vertex) -> Edge {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Circular distance between two labels on `n` points, in `1..=n/2`.
pub fn dist(n: usize, a: Vertex, b: Vertex) -> Result<usize> {
    if a >= n {
        return Err(Error::VertexOutOfRange { vertex: a, order: n });
    }
    if b >= n {
        return Err(Error::VertexOutOfRange { vertex: b, order: n });
    }
    if a == b {
        return Err(Error::EqualVertices(a));
    }
    let d = (a + n - b) % n;
    Ok(d.min(n - d))
}

/// Declarative recipe for a coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringSpec {
    pub order: usize,
    pub blue_lengths: BTreeSet<usize>,
    /// Edge flips in application order, each stored as `(a, b)` with `a < b`.
    pub flips: Vec<Edge>,
    pub deletions: BTreeSet<Vertex>,
}

impl ColoringSpec {
    pub fn circulant(order: usize, blue_lengths: impl IntoIterator<Item = usize>) -> Self {
        ColoringSpec {
            order,
            blue_lengths: blue_lengths.into_iter().collect(),
            flips: Vec::new(),
            deletions: BTreeSet::new(),
        }
    }

    pub fn with_flips(mut self, flips: impl IntoIterator<Item = Edge>) -> Self {
        self.flips.extend(flips.into_iter().map(|(a, b)| edge(a, b)));
        self
    }

    pub fn with_deletions(mut self, deletions: impl IntoIterator<Item = Vertex>) -> Self {
        self.deletions.extend(deletions);
        self
    }

    /// True when the recipe has no flips and no deletions.
    pub fn is_pure_circulant(&self) -> bool {
        self.flips.is_empty() && self.deletions.is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        if !(2..=MAX_ORDER).contains(&n) {
            return Err(Error::UnsupportedOrder(n));
        }
        for &len in &self.blue_lengths {
            if len == 0 || len > n / 2 {
                return Err(Error::LengthOutOfRange { length: len, max: n / 2 });
            }
        }
        let mut seen = BTreeSet::new();
        for &(a, b) in &self.flips {
            if a == b {
                return Err(Error::DegenerateEdge(a));
            }
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, order: n });
                }
            }
            if !seen.insert(edge(a, b)) {
                let (a, b) = edge(a, b);
                return Err(Error::DuplicateFlip(a, b));
            }
        }
        for &v in &self.deletions {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, order: n });
            }
        }
        Ok(())
    }
}

/// Blue lengths of the 43-point circulant coloring.
pub const CYC43_BLUE_LENGTHS: [usize; 10] = [3, 4, 5, 6, 8, 9, 11, 15, 17, 19];

/// The sixteen red-to-blue edge changes that, with vertex 0 deleted, turn
/// the 43-point circulant into the 42-vertex construction.
pub const EXOO42_FLIPS: [Edge; 16] = [
    (4, 5),
    (13, 14),
    (23, 24),
    (39, 40),
    (5, 6),
    (14, 15),
    (24, 25),
    (40, 41),
    (6, 7),
    (15, 16),
    (30, 31),
    (41, 42),
    (7, 8),
    (16, 17),
    (33, 34),
    (11, 32),
];

/// Named constructions on 43 points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Preset {
    /// Pure circulant coloring of K43.
    Cyc43,
    /// Cyc43 with the sixteen flips and vertex 0 deleted.
    Exoo42,
    /// The sixteen flips, vertex 0 kept.
    VariantA,
    /// VariantA plus the flip of edge (21, 22).
    VariantB,
}

impl Preset {
    pub const ALL: [Preset; 4] = [Preset::Cyc43, Preset::Exoo42, Preset::VariantA, Preset::VariantB];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Cyc43 => "cyc43",
            Preset::Exoo42 => "exoo42",
            Preset::VariantA => "varianta",
            Preset::VariantB => "variantb",
        }
    }

    pub fn spec(self) -> ColoringSpec {
        let base = ColoringSpec::circulant(43, CYC43_BLUE_LENGTHS);
        match self {
            Preset::Cyc43 => base,
            Preset::Exoo42 => base.with_flips(EXOO42_FLIPS).with_deletions([0]),
            Preset::VariantA => base.with_flips(EXOO42_FLIPS),
            Preset::VariantB => base.with_flips(EXOO42_FLIPS).with_flips([(21, 22)]),
        }
    }

    pub fn build(self) -> Coloring {
        Coloring::build(&self.spec()).expect("preset specs are valid")
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unknown { kind: "preset", name: s.to_string() })
    }
}

/// Looks a preset up by name (case-insensitive).
pub fn preset(name: &str) -> Result<ColoringSpec> {
    name.parse::<Preset>().map(Preset::spec)
}

/// A materialized two-coloring of the complete graph on the active vertices.
///
/// Values are immutable: [`Coloring::flip_edge`] and
/// [`Coloring::delete_vertex`] return new colorings and record the change in
/// the carried spec, so `Coloring::build(c.spec())` always reproduces `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    order: usize,
    active: VertexSet,
    red: Vec<VertexSet>,
    blue: Vec<VertexSet>,
    spec: ColoringSpec,
}

impl Coloring {
    pub fn build(spec: &ColoringSpec) -> Result<Coloring> {
        spec.validate()?;
        let n = spec.order;
        let mut red = vec![VertexSet::EMPTY; n];
        let mut blue = vec![VertexSet::EMPTY; n];
        for a in 0..n {
            for b in 0..n {
                if a == b {
                    continue;
                }
                let len = dist(n, a, b)?;
                if spec.blue_lengths.contains(&len) {
                    blue[a].insert(b);
                } else {
                    red[a].insert(b);
                }
            }
        }
        for &(a, b) in &spec.flips {
            for (u, v) in [(a, b), (b, a)] {
                red[u].toggle(v);
                blue[u].toggle(v);
            }
        }
        let mut active = VertexSet::full(n);
        for &v in &spec.deletions {
            active.remove(v);
        }
        for v in 0..n {
            if active.contains(v) {
                red[v] = red[v].intersection(active);
                blue[v] = blue[v].intersection(active);
            } else {
                red[v] = VertexSet::EMPTY;
                blue[v] = VertexSet::EMPTY;
            }
        }
        Ok(Coloring { order: n, active, red, blue, spec: spec.clone() })
    }

    /// A uniformly random coloring of K_n: each edge is blue with probability 1/2.
    ///
    /// The recipe is expressed as an all-red base plus one flip per blue edge.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Coloring> {
        let mut spec = ColoringSpec::circulant(n, []);
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(0.5) {
                    spec.flips.push((a, b));
                }
            }
        }
        Coloring::build(&spec)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn active(&self) -> VertexSet {
        self.active
    }

    #[inline]
    pub fn is_active(&self, v: Vertex) -> bool {
        self.active.contains(v)
    }

    pub fn spec(&self) -> &ColoringSpec {
        &self.spec
    }

    /// Neighbors of `v` joined to it by an edge of `color`.
    #[inline]
    pub fn neighbors(&self, v: Vertex, color: Color) -> VertexSet {
        match color {
            Color::Red => self.red[v],
            Color::Blue => self.blue[v],
        }
    }

    /// Color of an active edge; `None` if the endpoints are equal or inactive.
    #[inline]
    pub fn color(&self, a: Vertex, b: Vertex) -> Option<Color> {
        if a >= self.order || b >= self.order {
            return None;
        }
        if self.blue[a].contains(b) {
            Some(Color::Blue)
        } else if self.red[a].contains(b) {
            Some(Color::Red)
        } else {
            None
        }
    }

    /// Like [`Coloring::color`], but explains why an edge has no color.
    pub fn edge_color(&self, a: Vertex, b: Vertex) -> Result<Color> {
        self.check_edge(a, b)?;
        Ok(self.color(a, b).expect("active edges are colored"))
    }

    /// Whether the edge appears in the recipe's flip list.
    pub fn is_flipped(&self, a: Vertex, b: Vertex) -> bool {
        let e = edge(a, b);
        self.spec.flips.contains(&e)
    }

    /// All active edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.active.iter().flat_map(move |a| self.active.intersection(VertexSet::above(a)).iter().map(move |b| (a, b)))
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.order {
            return Err(Error::VertexOutOfRange { vertex: v, order: self.order });
        }
        if !self.active.contains(v) {
            return Err(Error::InactiveVertex(v));
        }
        Ok(())
    }

    pub(crate) fn check_edge(&self, a: Vertex, b: Vertex) -> Result<()> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(Error::DegenerateEdge(a));
        }
        Ok(())
    }

    /// Returns a copy with the color of edge `(a, b)` toggled.
    pub fn flip_edge(&self, a: Vertex, b: Vertex) -> Result<Coloring> {
        self.check_edge(a, b)?;
        let mut next = self.clone();
        next.toggle(a, b);
        let e = edge(a, b);
        match next.spec.flips.iter().position(|&f| f == e) {
            // flips commute, so a second toggle cancels the first
            Some(i) => {
                next.spec.flips.remove(i);
            }
            None => next.spec.flips.push(e),
        }
        Ok(next)
    }

    fn toggle(&mut self, a: Vertex, b: Vertex) {
        for (u, v) in [(a, b), (b, a)] {
            self.red[u].toggle(v);
            self.blue[u].toggle(v);
        }
    }

    /// Returns a copy with `v` removed; other labels are unchanged.
    pub fn delete_vertex(&self, v: Vertex) -> Result<Coloring> {
        self.check_vertex(v)?;
        let mut next = self.clone();
        next.active.remove(v);
        next.red[v] = VertexSet::EMPTY;
        next.blue[v] = VertexSet::EMPTY;
        for u in 0..next.order {
            next.red[u].remove(v);
            next.blue[u].remove(v);
        }
        next.spec.deletions.insert(v);
        Ok(next)
    }
}
