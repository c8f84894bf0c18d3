//! Machine checks for the structural facts behind the K43/K42 constructions.
//!
//! Every check returns a [`LemmaReport`] instead of failing fast, so a run
//! lists all violations with witnesses.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clique::{cliques_through_edge, common_color_neighbors, count_mono, enumerate_mono, Clique};
use crate::coloring::{dist, edge, Color, Coloring, Edge, Preset, Vertex, EXOO42_FLIPS};
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Offsets of the canonical red K5 family on 43 points.
pub const CANONICAL_OFFSETS: [usize; 5] = [0, 1, 2, 22, 23];

/// Left endpoints `a` of the fifteen flipped edges `(a, a+1)`.
pub const CONSECUTIVE_FLIP_STARTS: [Vertex; 15] = [4, 5, 6, 7, 13, 14, 15, 16, 23, 24, 30, 33, 39, 40, 41];

/// Outcome of one check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl LemmaReport {
    pub fn new(name: impl Into<String>) -> Self {
        LemmaReport { name: name.into(), checked: 0, failures: Vec::new() }
    }

    pub fn check(&mut self, ok: bool, failure: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(failure());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn absorb(&mut self, other: LemmaReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures.into_iter().map(|f| format!("{}: {f}", other.name)));
    }
}

impl fmt::Display for LemmaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} checked={}", self.name, self.checked)?;
        if let Some(first) = self.failures.first() {
            write!(f, " failures={} first=\"{first}\"", self.failures.len())?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalRedK5 {
    pub i: usize,
    /// `{i, i+1, i+2, i+22, i+23} mod 43`, sorted.
    pub vertices: [Vertex; 5],
}

pub fn canonical_red_k5(i: usize) -> Result<CanonicalRedK5> {
    if i >= 43 {
        return Err(Error::IndexOutOfRange { index: i, order: 43 });
    }
    let mut vertices = CANONICAL_OFFSETS.map(|o| (i + o) % 43);
    vertices.sort_unstable();
    Ok(CanonicalRedK5 { i, vertices })
}

/// Each canonical tuple is a red K5 in Cyc43 built from lengths {1,2,20,21},
/// the 43 tuples are distinct, and they are all the red K5s there are.
pub fn verify_canonical_red_k5s() -> Result<LemmaReport> {
    let cyc = Preset::Cyc43.build();
    let mut report = LemmaReport::new("canonical-red-k5-family");
    let mut family = BTreeSet::new();
    for i in 0..43 {
        let t = canonical_red_k5(i)?;
        let q = Clique::new(t.vertices.to_vec(), Color::Red);
        report.check(q.holds_in(&cyc), || format!("tuple {i} {:?} is not a red K5", t.vertices));
        for (x, &a) in t.vertices.iter().enumerate() {
            for &b in &t.vertices[x + 1..] {
                let len = dist(43, a, b)?;
                report.check([1, 2, 20, 21].contains(&len), || format!("tuple {i}: edge ({a},{b}) has length {len}"));
            }
        }
        family.insert(t.vertices.to_vec());
    }
    report.check(family.len() == 43, || format!("only {} distinct tuples", family.len()));
    let all: BTreeSet<Vec<Vertex>> = enumerate_mono(&cyc, Color::Red, 5)?.into_iter().map(|q| q.vertices).collect();
    report.check(all == family, || {
        let extra: Vec<_> = all.difference(&family).collect();
        let missing: Vec<_> = family.difference(&all).collect();
        format!("enumeration differs: extra {extra:?}, missing {missing:?}")
    });
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Disruption {
    DeletedVertex(Vertex),
    FlippedEdge(Edge),
}

/// Why canonical red K5 number `i` is no longer red in Exoo42.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DisruptionWitness {
    pub i: usize,
    pub kind: Disruption,
}

pub fn disruption_witness(i: usize) -> Result<DisruptionWitness> {
    canonical_red_k5(i)?;
    let exoo = Preset::Exoo42.build();
    witness_in(&exoo, i)
}

fn witness_in(exoo: &Coloring, i: usize) -> Result<DisruptionWitness> {
    let tuple = CANONICAL_OFFSETS.map(|o| (i + o) % 43);
    if let Some(&v) = tuple.iter().find(|&&v| exoo.spec().deletions.contains(&v)) {
        return Ok(DisruptionWitness { i, kind: Disruption::DeletedVertex(v) });
    }
    // scan internal edges in tuple order, so (i, i+1) is tried first
    for (x, &a) in tuple.iter().enumerate() {
        for &b in &tuple[x + 1..] {
            if exoo.is_flipped(a, b) && exoo.color(a, b) == Some(Color::Blue) {
                return Ok(DisruptionWitness { i, kind: Disruption::FlippedEdge(edge(a, b)) });
            }
        }
    }
    Err(Error::Falsified(format!("canonical red K5 {i} {tuple:?} survives")))
}

/// A witness exists for all 43 canonical tuples, and Exoo42 has no red K5.
pub fn verify_disruption() -> Result<LemmaReport> {
    let exoo = Preset::Exoo42.build();
    let mut report = LemmaReport::new("exoo42-disrupts-canonical-red-k5s");
    for i in 0..43 {
        let w = witness_in(&exoo, i);
        report.check(w.is_ok(), || format!("no witness for tuple {i}"));
        if let Ok(DisruptionWitness { kind: Disruption::FlippedEdge((a, b)), .. }) = w {
            report.check(EXOO42_FLIPS.contains(&(a, b)), || format!("tuple {i}: ({a},{b}) not in the flip list"));
        }
    }
    let red = count_mono(&exoo, Color::Red, 5)?;
    report.check(red == 0, || format!("Exoo42 still has {red} red K5s"));
    Ok(report)
}

/// The vertex `v` with `a - u ≡ v - b (mod n)`.
pub fn symmetric_vertex(n: usize, a: Vertex, b: Vertex, u: Vertex) -> Vertex {
    (a % n + b % n + n - u % n) % n
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sampling {
    Exhaustive,
    Random { count: usize, seed: u64 },
}

/// For `y` symmetric to `x` about `(a, b)`: `color(x,a) = color(y,b)` and
/// `color(x,b) = color(y,a)`. Holds on pure circulants; flips break it.
pub fn verify_symmetry(c: &Coloring, sampling: Sampling) -> LemmaReport {
    let n = c.order();
    let mut report = LemmaReport::new("edge-reflection-symmetry");
    let mut test = |a: Vertex, b: Vertex, x: Vertex| {
        if a == b || !c.is_active(a) || !c.is_active(b) || !c.is_active(x) {
            return;
        }
        let y = symmetric_vertex(n, a, b, x);
        if !c.is_active(y) {
            return;
        }
        report.check(c.color(x, a) == c.color(y, b) && c.color(x, b) == c.color(y, a), || {
            format!("a={a} b={b} x={x} y={y}")
        });
    };
    match sampling {
        Sampling::Exhaustive => {
            for a in 0..n {
                for b in 0..n {
                    for x in 0..n {
                        test(a, b, x);
                    }
                }
            }
        }
        Sampling::Random { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..count {
                test(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            }
        }
    }
    report
}

/// `{a+4, a+5, a+6, a+9, a-8, a-5, a-4, a-3} mod n`, sorted.
pub fn eight_vertex_formula(n: usize, a: Vertex) -> Vec<Vertex> {
    let mut v: Vec<Vertex> = [4, 5, 6, 9].iter().map(|&d| (a + d) % n).collect();
    v.extend([8, 5, 4, 3].iter().map(|&d| (a + n - d) % n));
    v.sort_unstable();
    v
}

/// Exactly eight common blue neighbors of `a` and `a+1`, of the closed form
/// in [`eight_vertex_formula`], pairing up symmetrically about `(a, a+1)`,
/// with no flipped edge among them.
pub fn verify_eight_common_neighbors(c: &Coloring, a: Vertex) -> Result<LemmaReport> {
    let n = c.order();
    let b = (a + 1) % n;
    let mut report = LemmaReport::new(format!("eight-common-blue-neighbors a={a}"));
    let expected: VertexSet = eight_vertex_formula(n, a).into_iter().collect();
    let actual = common_color_neighbors(c, Color::Blue, &[a, b])?;
    report.check(actual == expected, || {
        let diff = actual.difference(expected).union(expected.difference(actual));
        format!("symmetric difference {:?}", diff)
    });
    for d in [4, 5, 6, 9] {
        let u = (a + d) % n;
        let v = symmetric_vertex(n, a, b, u);
        report.check(v == (a + n + 1 - d) % n, || format!("{u} pairs with {v}"));
    }
    let eight = expected.to_vec();
    for (i, &u) in eight.iter().enumerate() {
        for &v in &eight[i + 1..] {
            report.check(!c.is_flipped(u, v), || format!("({u},{v}) is a flipped edge"));
        }
    }
    Ok(report)
}

/// None of the sixteen flipped edges of Exoo42 lies in a blue K5.
pub fn verify_flip_edges_blue_safe() -> Result<LemmaReport> {
    let exoo = Preset::Exoo42.build();
    let mut report = LemmaReport::new("flipped-edges-in-no-blue-k5");
    for &(a, b) in &EXOO42_FLIPS {
        let through = cliques_through_edge(&exoo, Color::Blue, a, b, 5)?;
        report.check(through.is_empty(), || format!("({a},{b}) lies in {}", through[0]));
    }
    Ok(report)
}

/// Blue K5s through `(0, 1)` if that edge were also flipped with vertex 0 kept.
pub fn zero_one_counterfactual() -> Result<Vec<Clique>> {
    let c = Preset::VariantA.build().flip_edge(0, 1)?;
    cliques_through_edge(&c, Color::Blue, 0, 1, 5)
}

/// Images of `vertices` under `v ↦ v + t` and `v ↦ t - v` (mod n), each sorted.
pub fn dihedral_orbit(n: usize, vertices: &[Vertex]) -> BTreeSet<Vec<Vertex>> {
    let mut orbit = BTreeSet::new();
    for t in 0..n {
        for reflect in [false, true] {
            let mut image: Vec<Vertex> =
                vertices.iter().map(|&v| if reflect { (t + n - v % n) % n } else { (v + t) % n }).collect();
            image.sort_unstable();
            orbit.insert(image);
        }
    }
    orbit
}

/// Union of the dihedral orbits of `cliques`.
pub fn expand_orbits(n: usize, cliques: &[Clique]) -> BTreeSet<Vec<Vertex>> {
    cliques.iter().flat_map(|q| dihedral_orbit(n, &q.vertices)).collect()
}

/// The anchor vertex for standard cliques.
pub const STANDARD_ANCHOR: Vertex = 1;

/// Standard 5-cliques: those containing vertex 1 and `1 + g`, where `g` is
/// the smallest circular distance inside the clique. Pigeonhole over the
/// five clockwise gaps bounds `g` by `n / 5`.
pub fn standard_enumerate(c: &Coloring, color: Color) -> Result<Vec<Clique>> {
    standard_enumerate_k(c, color, 5)
}

pub fn standard_enumerate_k(c: &Coloring, color: Color, k: usize) -> Result<Vec<Clique>> {
    let n = c.order();
    if !c.spec().is_pure_circulant() {
        return Err(Error::NotCirculant("recipe has flips or deletions".into()));
    }
    if n.is_multiple_of(2) {
        return Err(Error::NotCirculant(format!("even order {n}")));
    }
    if k < 2 || k > n {
        return Err(Error::CliqueSizeOutOfRange { k, active: n });
    }
    let anchor = STANDARD_ANCHOR % n;
    let mut found = BTreeSet::new();
    for g in 1..=n / k {
        let partner = (anchor + g) % n;
        if c.color(anchor, partner) != Some(color) {
            continue;
        }
        // far[v]: vertices at circular distance >= g from v
        let far: Vec<VertexSet> =
            (0..n).map(|v| (0..n).filter(|&u| u != v && dist(n, u, v).is_ok_and(|d| d >= g)).collect()).collect();
        let cand = c
            .neighbors(anchor, color)
            .intersection(c.neighbors(partner, color))
            .intersection(far[anchor])
            .intersection(far[partner]);
        let mut prefix = vec![anchor, partner];
        extend_standard(c, color, &far, cand, k - 2, &mut prefix, &mut found);
    }
    Ok(found.into_iter().map(|vertices| Clique { vertices, color }).collect())
}

fn extend_standard(
    c: &Coloring,
    color: Color,
    far: &[VertexSet],
    cand: VertexSet,
    remaining: usize,
    prefix: &mut Vec<Vertex>,
    found: &mut BTreeSet<Vec<Vertex>>,
) {
    if remaining == 0 {
        let mut q = prefix.clone();
        q.sort_unstable();
        found.insert(q);
        return;
    }
    for v in cand {
        let next = cand.intersection(c.neighbors(v, color)).intersection(far[v]).intersection(VertexSet::above(v));
        prefix.push(v);
        extend_standard(c, color, far, next, remaining - 1, prefix, found);
        prefix.pop();
    }
}

/// Orbit expansion of the standard cliques equals brute-force enumeration.
pub fn verify_standard_reduction(c: &Coloring, color: Color) -> Result<LemmaReport> {
    let mut report = LemmaReport::new(format!("standard-reduction n={} {color}", c.order()));
    let standard = standard_enumerate(c, color)?;
    let expanded = expand_orbits(c.order(), &standard);
    let brute: BTreeSet<Vec<Vertex>> = if c.active().len() >= 5 {
        enumerate_mono(c, color, 5)?.into_iter().map(|q| q.vertices).collect()
    } else {
        BTreeSet::new()
    };
    report.check(expanded == brute, || {
        format!("orbit expansion has {} cliques, enumeration {}", expanded.len(), brute.len())
    });
    Ok(report)
}

/// Text diagram: a tens row and a units row for columns `1..=n`, then one
/// row per listed vertex. Column `j` stands for vertex `j mod n`. A row has
/// `o` at its own column, `x` where the edge has `color` (`X` if that edge
/// is flipped in the recipe), blank elsewhere. With `overlap`, a final row
/// puts `E` under columns marked in every row.
pub fn render_diagram(c: &Coloring, color: Color, rows: &[Vertex], overlap: bool) -> String {
    let n = c.order();
    let mut tens = String::with_capacity(n);
    let mut units = String::with_capacity(n);
    for j in 1..=n {
        let digit = |d: usize| char::from(b'0' + (d % 10) as u8);
        tens.push(if j == 1 {
            '0'
        } else if j % 10 == 0 {
            digit(j / 10)
        } else {
            ' '
        });
        units.push(digit(j));
    }
    let mut out = format!("{tens}\n{units}\n");
    let mut common = vec![true; n];
    for &v in rows {
        let mut line = String::with_capacity(n);
        for j in 1..=n {
            let u = j % n;
            let ch = if u == v {
                'o'
            } else if c.color(v, u) == Some(color) {
                if c.is_flipped(v, u) {
                    'X'
                } else {
                    'x'
                }
            } else {
                ' '
            };
            if !matches!(ch, 'x' | 'X') {
                common[j - 1] = false;
            }
            line.push(ch);
        }
        out.push_str(&line);
        out.push('\n');
    }
    if overlap {
        let line: String = common.iter().map(|&e| if e && !rows.is_empty() { 'E' } else { ' ' }).collect();
        out.push_str(&line);
        out.push('\n');
    }
    out
}

/// Parses one vertex row of [`render_diagram`] back into its owner and marked set.
pub fn parse_diagram_row(line: &str, n: usize) -> Result<(Vertex, VertexSet)> {
    if line.len() != n {
        return Err(Error::parse(1, format!("row has {} columns, expected {n}", line.len())));
    }
    let mut owner = None;
    let mut marked = VertexSet::EMPTY;
    for (idx, ch) in line.chars().enumerate() {
        let v = (idx + 1) % n;
        match ch {
            'o' if owner.is_none() => owner = Some(v),
            'x' | 'X' => marked.insert(v),
            ' ' => {}
            other => return Err(Error::parse(1, format!("unexpected `{other}` in column {}", idx + 1))),
        }
    }
    let owner = owner.ok_or_else(|| Error::parse(1, "row has no `o`"))?;
    Ok((owner, marked))
}

/// Every fixed check on the 43-point constructions.
pub fn lemma_suite() -> Result<Vec<LemmaReport>> {
    let cyc = Preset::Cyc43.build();
    let with_zero = Preset::VariantA.build();
    let mut reports = vec![verify_canonical_red_k5s()?, verify_disruption()?];

    let mut witnesses = LemmaReport::new("disruption-witness-examples");
    for (i, expected) in [
        (0, Disruption::DeletedVertex(0)),
        (4, Disruption::FlippedEdge((4, 5))),
        (9, Disruption::FlippedEdge((11, 32))),
    ] {
        let got = disruption_witness(i)?.kind;
        witnesses.check(got == expected, || format!("i={i}: {got:?}"));
    }
    reports.push(witnesses);

    reports.push(verify_symmetry(&cyc, Sampling::Exhaustive));

    let mut negative = LemmaReport::new("edge-reflection-symmetry-broken-by-flips");
    let exoo_sym = verify_symmetry(&Preset::Exoo42.build(), Sampling::Exhaustive);
    negative.check(!exoo_sym.passed(), || "no violation found on Exoo42".into());
    reports.push(negative);

    let mut cyc_eight = LemmaReport::new("eight-common-blue-neighbors cyc43 all a");
    for a in 0..43 {
        cyc_eight.absorb(verify_eight_common_neighbors(&cyc, a)?);
    }
    reports.push(cyc_eight);

    let mut exoo_eight = LemmaReport::new("eight-common-blue-neighbors exoo42+0 flipped a");
    for a in CONSECUTIVE_FLIP_STARTS {
        exoo_eight.absorb(verify_eight_common_neighbors(&with_zero, a)?);
    }
    reports.push(exoo_eight);

    reports.push(verify_flip_edges_blue_safe()?);

    let mut counterfactual = LemmaReport::new("zero-one-flip-counterfactual");
    let through: Vec<Vec<Vertex>> = zero_one_counterfactual()?.into_iter().map(|q| q.vertices).collect();
    for expected in [vec![0, 1, 4, 5, 39], vec![0, 1, 4, 5, 9]] {
        counterfactual.check(through.contains(&expected), || format!("{expected:?} missing"));
    }
    reports.push(counterfactual);

    let mut standard = LemmaReport::new("standard-red-k5s cyc43");
    let reps: Vec<Vec<Vertex>> = standard_enumerate(&cyc, Color::Red)?.into_iter().map(|q| q.vertices).collect();
    standard.check(reps == vec![vec![0, 1, 2, 22, 23], vec![1, 2, 3, 23, 24], vec![1, 2, 22, 23, 24]], || {
        format!("got {reps:?}")
    });
    let blue_reps = standard_enumerate(&cyc, Color::Blue)?;
    standard.check(blue_reps.is_empty(), || format!("{} standard blue K5s", blue_reps.len()));
    reports.push(standard);

    for color in Color::BOTH {
        reports.push(verify_standard_reduction(&cyc, color)?);
    }
    Ok(reports)
}
