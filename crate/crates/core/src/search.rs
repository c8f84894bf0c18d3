//! Flip-based local search minimizing the number of monochromatic K5s.
//!
//! Policies implement [`SearchPolicy`] and are looked up by name through
//! [`policy_by_name`]. They drive a [`SearchRun`], which owns the budget,
//! the seeded RNG and the bookkeeping, so every policy gets the same
//! evaluation accounting, trace and log format for free.

use std::collections::VecDeque;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clique::{count_mono, count_through_pair};
use crate::coloring::{edge, Color, Coloring, ColoringSpec, Edge, Vertex};
use crate::error::{Error, Result};

/// Clique size the search objective counts.
pub const SEARCH_K: usize = 5;

pub const DEFAULT_TABU_TENURE: usize = 50;

/// Red K5 count plus blue K5 count.
pub fn objective(c: &Coloring) -> u64 {
    let (red, blue) = mono_counts(c);
    red + blue
}

fn mono_counts(c: &Coloring) -> (u64, u64) {
    if c.active().len() < SEARCH_K {
        return (0, 0);
    }
    let red = count_mono(c, Color::Red, SEARCH_K).expect("k within range");
    let blue = count_mono(c, Color::Blue, SEARCH_K).expect("k within range");
    (red, blue)
}

/// Change in red and blue K5 counts caused by flipping one edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FlipDelta {
    pub edge: Edge,
    pub d_red: i64,
    pub d_blue: i64,
}

impl FlipDelta {
    pub fn total(&self) -> i64 {
        self.d_red + self.d_blue
    }
}

/// Exact effect of flipping `(a, b)`. Only K5s containing both endpoints can
/// change, so this looks at the common neighborhoods of the edge alone.
pub fn flip_delta(c: &Coloring, a: Vertex, b: Vertex) -> Result<FlipDelta> {
    let current = c.edge_color(a, b)?;
    let lost = count_through_pair(c, current, a, b, SEARCH_K) as i64;
    let gained = count_through_pair(c, current.other(), a, b, SEARCH_K) as i64;
    let (d_red, d_blue) = match current {
        Color::Red => (-lost, gained),
        Color::Blue => (gained, -lost),
    };
    Ok(FlipDelta { edge: edge(a, b), d_red, d_blue })
}

/// The flip with the smallest total delta, ties going to the least edge.
/// With `red_to_blue_only`, blue edges are not considered.
pub fn best_single_flip(c: &Coloring, red_to_blue_only: bool) -> Option<(Edge, FlipDelta)> {
    let mut best: Option<(Edge, FlipDelta)> = None;
    for (a, b) in c.edges() {
        if red_to_blue_only && c.color(a, b) != Some(Color::Red) {
            continue;
        }
        let d = flip_delta(c, a, b).expect("active edge");
        if best.is_none_or(|(_, bd)| d.total() < bd.total()) {
            best = Some(((a, b), d));
        }
    }
    best
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of flip evaluations.
    pub budget: usize,
    pub seed: u64,
    /// Only consider red-to-blue flips.
    pub red_to_blue_only: bool,
    pub tabu_tenure: usize,
    /// Recount the objective from scratch after this many applied moves.
    pub validate_every: Option<usize>,
}

impl SearchOptions {
    pub fn new(budget: usize, seed: u64) -> Self {
        SearchOptions {
            budget,
            seed,
            red_to_blue_only: false,
            tabu_tenure: DEFAULT_TABU_TENURE,
            validate_every: Some(100),
        }
    }

    pub fn red_to_blue_only(mut self, yes: bool) -> Self {
        self.red_to_blue_only = yes;
        self
    }

    pub fn tabu_tenure(mut self, tenure: usize) -> Self {
        self.tabu_tenure = tenure;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Move {
    /// 1-based index among applied flips.
    pub step: usize,
    pub edge: Edge,
    /// Counts after the move.
    pub red: u64,
    pub blue: u64,
}

impl Move {
    pub fn objective(&self) -> u64 {
        self.red + self.blue
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceEvent {
    Flip(Move),
    Restart { restart: usize, red: u64, blue: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snapshot {
    pub coloring: Coloring,
    pub red: u64,
    pub blue: u64,
}

impl Snapshot {
    pub fn objective(&self) -> u64 {
        self.red + self.blue
    }
}

#[derive(Clone, Debug)]
pub struct SearchState {
    pub coloring: Coloring,
    pub red: u64,
    pub blue: u64,
    pub trace: Vec<TraceEvent>,
    pub seed: u64,
    pub best: Snapshot,
    pub evaluations: usize,
}

impl SearchState {
    pub fn objective(&self) -> u64 {
        self.red + self.blue
    }

    /// Line-oriented log: one `step=` record per applied flip, one
    /// `restart=` record per restart.
    pub fn log(&self) -> String {
        let mut out = String::new();
        for event in &self.trace {
            match event {
                TraceEvent::Flip(m) => {
                    let _ = writeln!(
                        out,
                        "step={} flip={}-{} red={} blue={} objective={}",
                        m.step,
                        m.edge.0,
                        m.edge.1,
                        m.red,
                        m.blue,
                        m.objective()
                    );
                }
                TraceEvent::Restart { restart, red, blue } => {
                    let _ = writeln!(out, "restart={restart} red={red} blue={blue} objective={}", red + blue);
                }
            }
        }
        out
    }

    pub fn moves(&self) -> impl Iterator<Item = &Move> {
        self.trace.iter().filter_map(|e| match e {
            TraceEvent::Flip(m) => Some(m),
            TraceEvent::Restart { .. } => None,
        })
    }
}

/// Result of scanning candidate flips.
pub struct Scan {
    pub best: Option<FlipDelta>,
    pub evaluated: usize,
    /// False when the budget ran out before every candidate was seen.
    pub complete: bool,
}

/// A single search in progress.
pub struct SearchRun<'a> {
    pub state: SearchState,
    pub options: &'a SearchOptions,
    start: Coloring,
    rng: ChaCha8Rng,
    moves_applied: usize,
    restarts: usize,
}

impl<'a> SearchRun<'a> {
    fn new(start: Coloring, options: &'a SearchOptions) -> Self {
        let (red, blue) = mono_counts(&start);
        let best = Snapshot { coloring: start.clone(), red, blue };
        let state = SearchState {
            coloring: start.clone(),
            red,
            blue,
            trace: Vec::new(),
            seed: options.seed,
            best,
            evaluations: 0,
        };
        SearchRun { state, options, start, rng: ChaCha8Rng::seed_from_u64(options.seed), moves_applied: 0, restarts: 0 }
    }

    pub fn remaining(&self) -> usize {
        self.options.budget - self.state.evaluations
    }

    /// Evaluates every eligible edge in lexicographic order, keeping the
    /// first one with the smallest total delta among those `allowed`.
    pub fn scan(&mut self, mut allowed: impl FnMut(&FlipDelta) -> bool) -> Scan {
        let c = &self.state.coloring;
        let mut best: Option<FlipDelta> = None;
        let mut evaluated = 0;
        let mut complete = true;
        for (a, b) in c.edges() {
            if self.options.red_to_blue_only && c.color(a, b) != Some(Color::Red) {
                continue;
            }
            if self.state.evaluations == self.options.budget {
                complete = false;
                break;
            }
            self.state.evaluations += 1;
            evaluated += 1;
            let d = flip_delta(c, a, b).expect("active edge");
            if allowed(&d) && best.is_none_or(|bd| d.total() < bd.total()) {
                best = Some(d);
            }
        }
        Scan { best, evaluated, complete }
    }

    pub fn apply(&mut self, delta: FlipDelta) -> Result<()> {
        let (a, b) = delta.edge;
        self.state.coloring = self.state.coloring.flip_edge(a, b)?;
        self.state.red = (self.state.red as i64 + delta.d_red) as u64;
        self.state.blue = (self.state.blue as i64 + delta.d_blue) as u64;
        self.moves_applied += 1;
        self.state.trace.push(TraceEvent::Flip(Move {
            step: self.moves_applied,
            edge: delta.edge,
            red: self.state.red,
            blue: self.state.blue,
        }));
        if let Some(every) = self.options.validate_every {
            if every > 0 && self.moves_applied.is_multiple_of(every) {
                self.validate()?;
            }
        }
        self.record_best();
        Ok(())
    }

    fn validate(&self) -> Result<()> {
        let (red, blue) = mono_counts(&self.state.coloring);
        if (red, blue) != (self.state.red, self.state.blue) {
            return Err(Error::ObjectiveDrift {
                step: self.moves_applied,
                tracked: self.state.objective(),
                recounted: red + blue,
            });
        }
        Ok(())
    }

    fn record_best(&mut self) {
        if self.state.objective() < self.state.best.objective() {
            self.state.best =
                Snapshot { coloring: self.state.coloring.clone(), red: self.state.red, blue: self.state.blue };
        }
    }

    /// Jumps to a fresh random coloring on the start's vertex set.
    ///
    /// Unrestricted runs draw every edge red or blue with probability 1/2.
    /// Red-to-blue-only runs keep the start's blue edges and turn each of
    /// its red edges blue with probability 1/2.
    pub fn restart(&mut self) -> Result<()> {
        let next = if self.options.red_to_blue_only {
            let mut c = self.start.clone();
            let red: Vec<Edge> = c.edges().filter(|&(a, b)| c.color(a, b) == Some(Color::Red)).collect();
            for (a, b) in red {
                if self.rng.gen_bool(0.5) {
                    c = c.flip_edge(a, b)?;
                }
            }
            c
        } else {
            let mut c = Coloring::random(self.start.order(), &mut self.rng)?;
            for &v in &self.start.spec().deletions {
                c = c.delete_vertex(v)?;
            }
            c
        };
        let (red, blue) = mono_counts(&next);
        self.state.coloring = next;
        self.state.red = red;
        self.state.blue = blue;
        self.restarts += 1;
        self.state.trace.push(TraceEvent::Restart { restart: self.restarts, red, blue });
        self.record_best();
        Ok(())
    }

    /// Steepest descent until no improving flip is left or the budget ends.
    /// Returns true if it stopped at a local optimum.
    pub fn descend(&mut self) -> Result<bool> {
        while self.state.objective() > 0 && self.remaining() > 0 {
            let scan = self.scan(|_| true);
            match scan.best {
                Some(d) if d.total() < 0 => self.apply(d)?,
                _ => return Ok(scan.complete),
            }
            if !scan.complete {
                return Ok(false);
            }
        }
        Ok(self.state.objective() == 0)
    }
}

/// A local search strategy.
pub trait SearchPolicy: Send + Sync {
    fn name(&self) -> &'static str;

    fn run(&self, run: &mut SearchRun<'_>) -> Result<()>;
}

/// Steepest descent; stops at the first local optimum.
pub struct Greedy;

impl SearchPolicy for Greedy {
    fn name(&self) -> &'static str {
        "greedy"
    }

    fn run(&self, run: &mut SearchRun<'_>) -> Result<()> {
        run.descend().map(|_| ())
    }
}

/// Best non-tabu flip every step, improving or not. Recently flipped edges
/// are tabu for `tabu_tenure` moves unless they would beat the best objective.
pub struct Tabu;

impl SearchPolicy for Tabu {
    fn name(&self) -> &'static str {
        "tabu"
    }

    fn run(&self, run: &mut SearchRun<'_>) -> Result<()> {
        let tenure = run.options.tabu_tenure;
        let mut tabu: VecDeque<Edge> = VecDeque::with_capacity(tenure + 1);
        while run.state.objective() > 0 && run.remaining() > 0 {
            let current = run.state.objective() as i64;
            let best = run.state.best.objective() as i64;
            let scan = run.scan(|d| !tabu.contains(&d.edge) || current + d.total() < best);
            let Some(d) = scan.best else { break };
            run.apply(d)?;
            if tenure > 0 {
                tabu.push_back(d.edge);
                if tabu.len() > tenure {
                    tabu.pop_front();
                }
            }
            if !scan.complete {
                break;
            }
        }
        Ok(())
    }
}

/// Steepest descent, restarting from a random coloring at each local optimum.
pub struct RandomRestart;

impl SearchPolicy for RandomRestart {
    fn name(&self) -> &'static str {
        "restart"
    }

    fn run(&self, run: &mut SearchRun<'_>) -> Result<()> {
        loop {
            let before = run.state.evaluations;
            let at_optimum = run.descend()?;
            let stuck = run.state.evaluations == before;
            if !at_optimum || run.state.objective() == 0 || run.remaining() == 0 || stuck {
                return Ok(());
            }
            run.restart()?;
        }
    }
}

static POLICIES: [&dyn SearchPolicy; 3] = [&Greedy, &Tabu, &RandomRestart];

pub fn policies() -> &'static [&'static dyn SearchPolicy] {
    &POLICIES
}

pub fn policy_by_name(name: &str) -> Result<&'static dyn SearchPolicy> {
    POLICIES
        .iter()
        .copied()
        .find(|p| p.name() == name)
        .ok_or_else(|| Error::Unknown { kind: "search policy", name: name.to_string() })
}

/// Runs `policy` from `start`. Deterministic in `(start, options, policy)`.
pub fn local_search(start: &ColoringSpec, policy: &dyn SearchPolicy, options: &SearchOptions) -> Result<SearchState> {
    if options.budget == 0 {
        return Err(Error::ZeroBudget);
    }
    let start = Coloring::build(start)?;
    let mut run = SearchRun::new(start, options);
    policy.run(&mut run)?;
    Ok(run.state)
}
