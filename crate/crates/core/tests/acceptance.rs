//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use r55_core::certificate::{verify_certificate, Certificate};
use r55_core::clique::{count_mono, enumerate_mono};
use r55_core::counter::{MaskEngine, NaiveOracle};
use r55_core::oracle::{naive_count, naive_enumerate};
use r55_core::proof::{canonical_red_k5, lemma_suite, verify_standard_reduction};
use r55_core::search::{flip_delta, local_search, policies, Greedy, SearchOptions, Tabu};
use r55_core::{Color, Coloring, ColoringSpec, Preset, Vertex};

const ENGINE_BUDGET: Duration = Duration::from_secs(1);
const ORACLE_BUDGET: Duration = Duration::from_secs(30);
const SEARCH_BUDGET: Duration = Duration::from_secs(60);

type Outcome = (bool, String);
type Criterion = (&'static str, fn() -> Outcome);

fn vertex_sets(cliques: Vec<r55_core::Clique>) -> BTreeSet<Vec<Vertex>> {
    cliques.into_iter().map(|q| q.vertices).collect()
}

fn sets(tuples: &[&[Vertex]]) -> BTreeSet<Vec<Vertex>> {
    tuples
        .iter()
        .map(|t| {
            let mut v = t.to_vec();
            v.sort_unstable();
            v
        })
        .collect()
}

/// Engine and oracle enumeration with wall-clock times.
fn both_routes(c: &Coloring, color: Color) -> (BTreeSet<Vec<Vertex>>, Duration, BTreeSet<Vec<Vertex>>, Duration) {
    let t = Instant::now();
    let engine = vertex_sets(enumerate_mono(c, color, 5).unwrap());
    let engine_time = t.elapsed();
    let t = Instant::now();
    let oracle = vertex_sets(naive_enumerate(c, color, 5).unwrap());
    (engine, engine_time, oracle, t.elapsed())
}

fn cyc43_red() -> Outcome {
    let c = Preset::Cyc43.build();
    let family: BTreeSet<Vec<Vertex>> = (0..43).map(|i| canonical_red_k5(i).unwrap().vertices.to_vec()).collect();
    let (engine, te, oracle, to) = both_routes(&c, Color::Red);
    let t = Instant::now();
    let count = count_mono(&c, Color::Red, 5).unwrap();
    let tc = t.elapsed();
    let ok = count == 43 && engine == family && oracle == family && te.max(tc) < ENGINE_BUDGET && to < ORACLE_BUDGET;
    (
        ok,
        format!(
            "count={count} engine={} oracle={} engine_time={te:?} count_time={tc:?} oracle_time={to:?}",
            engine.len(),
            oracle.len()
        ),
    )
}

fn cyc43_blue() -> Outcome {
    let c = Preset::Cyc43.build();
    let (engine, te, oracle, to) = both_routes(&c, Color::Blue);
    let count = count_mono(&c, Color::Blue, 5).unwrap();
    let ok = count == 0 && engine.is_empty() && oracle.is_empty() && te < ENGINE_BUDGET && to < ORACLE_BUDGET;
    (ok, format!("count={count} oracle={} engine_time={te:?} oracle_time={to:?}", oracle.len()))
}

fn exoo42_clean() -> Outcome {
    let c = Preset::Exoo42.build();
    let counts: Vec<u64> = Color::BOTH
        .iter()
        .flat_map(|&color| [count_mono(&c, color, 5).unwrap(), naive_count(&c, color, 5).unwrap()])
        .collect();
    (
        counts.iter().all(|&n| n == 0),
        format!("red engine/oracle={}/{} blue engine/oracle={}/{}", counts[0], counts[1], counts[2], counts[3]),
    )
}

fn variant_a_sets() -> Outcome {
    let c = Preset::VariantA.build();
    let red = sets(&[&[0, 1, 2, 22, 23], &[0, 1, 21, 22, 42], &[0, 1, 21, 22, 23], &[0, 20, 21, 22, 42]]);
    let blue = sets(&[
        &[0, 6, 11, 15, 32],
        &[0, 6, 11, 17, 32],
        &[0, 8, 11, 17, 32],
        &[0, 11, 28, 32, 37],
        &[0, 11, 26, 32, 37],
        &[0, 11, 26, 32, 35],
        &[0, 11, 15, 26, 32],
        &[0, 11, 17, 26, 32],
        &[0, 11, 17, 28, 32],
    ]);
    let (re, _, ro, _) = both_routes(&c, Color::Red);
    let (be, _, bo, _) = both_routes(&c, Color::Blue);
    let ok = re == red && ro == red && be == blue && bo == blue;
    (ok, format!("red={} blue={}", re.len(), be.len()))
}

fn variant_b_report() -> Outcome {
    let c = Preset::VariantB.build();
    let (re, _, ro, _) = both_routes(&c, Color::Red);
    let (be, _, bo, _) = both_routes(&c, Color::Blue);
    let red_ok = re == sets(&[&[0, 1, 2, 22, 23]]) && ro == re;
    let agree = be == bo;
    let variant_a_blue = vertex_sets(enumerate_mono(&Preset::VariantA.build(), Color::Blue, 5).unwrap());
    let extra: Vec<&Vec<Vertex>> = be.difference(&variant_a_blue).collect();
    let detail = format!(
        "red={} blue engine/oracle={}/{}; published blue count 8 differs from computed {}; \
         flipping (21,22) red->blue keeps all {} Variant A blue K5s and adds {:?}",
        re.len(),
        be.len(),
        bo.len(),
        be.len(),
        variant_a_blue.len(),
        extra
    );
    (red_ok && agree && variant_a_blue.is_subset(&be), detail)
}

fn lemma_replay() -> Outcome {
    let reports = lemma_suite().unwrap();
    let failed: Vec<String> = reports.iter().filter(|r| !r.passed()).map(|r| r.to_string()).collect();
    let names: Vec<&str> = reports.iter().map(|r| r.name.as_str()).collect();
    (
        failed.is_empty(),
        if failed.is_empty() { format!("{} checks: {}", reports.len(), names.join(", ")) } else { failed.join("; ") },
    )
}

fn standard_reduction() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let mut colorings = vec![Preset::Cyc43.build()];
    while colorings.len() < 21 {
        let n = 2 * rng.gen_range(3..=21) + 1;
        let lengths: Vec<usize> = (1..=n / 2).filter(|_| rng.gen_bool(0.5)).collect();
        colorings.push(Coloring::build(&ColoringSpec::circulant(n, lengths)).unwrap());
    }
    let mut failures = Vec::new();
    for c in &colorings {
        for color in Color::BOTH {
            let r = verify_standard_reduction(c, color).unwrap();
            if !r.passed() {
                failures.push(r.to_string());
            }
        }
    }
    let orders: Vec<usize> = colorings.iter().map(Coloring::order).collect();
    (failures.is_empty(), format!("colorings={} orders={orders:?} failures={failures:?}", colorings.len()))
}

fn delta_correctness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let mut mismatches = Vec::new();
    for case in 0..200 {
        let c = match case % 4 {
            0 => Preset::ALL[rng.gen_range(0..4)].build(),
            _ => Coloring::random(rng.gen_range(10..=43), &mut rng).unwrap(),
        };
        let edges: Vec<(Vertex, Vertex)> = c.edges().collect();
        let (a, b) = edges[rng.gen_range(0..edges.len())];
        let d = flip_delta(&c, a, b).unwrap();
        let f = c.flip_edge(a, b).unwrap();
        let full = |x: &Coloring, color| count_mono(x, color, 5).unwrap() as i64;
        let expected = (full(&f, Color::Red) - full(&c, Color::Red), full(&f, Color::Blue) - full(&c, Color::Blue));
        if (d.d_red, d.d_blue) != expected {
            mismatches.push(format!(
                "case {case} n={} edge=({a},{b}) delta={:?} recount={expected:?}",
                c.order(),
                (d.d_red, d.d_blue)
            ));
        }
    }
    (
        mismatches.is_empty(),
        format!(
            "cases=200 mismatches={}{}",
            mismatches.len(),
            mismatches.first().map(|m| format!(" first: {m}")).unwrap_or_default()
        ),
    )
}

fn search_behaviour() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;

    for policy in policies() {
        let opts = SearchOptions::new(20_000, 77);
        let a = local_search(&Preset::VariantA.spec(), *policy, &opts).unwrap().log();
        let b = local_search(&Preset::VariantA.spec(), *policy, &opts).unwrap().log();
        let restarts = a.lines().filter(|l| l.starts_with("restart=")).count();
        ok &= a == b && !a.is_empty();
        notes.push(format!(
            "{} logs identical={} lines={} restarts={restarts}",
            policy.name(),
            a == b,
            a.lines().count()
        ));
    }

    let greedy = local_search(&Preset::Cyc43.spec(), &Greedy, &SearchOptions::new(903, 1)).unwrap();
    let first = greedy.moves().next().map(|m| m.objective());
    let improved = first.is_some_and(|o| o <= 43 - 3);
    ok &= improved;
    notes.push(format!("cyc43 greedy first move objective={first:?}"));

    let restricted =
        local_search(&Preset::VariantA.spec(), &Greedy, &SearchOptions::new(10_000, 3).red_to_blue_only(true)).unwrap();
    let reds: Vec<u64> = std::iter::once(4).chain(restricted.moves().map(|m| m.red)).collect();
    let monotone = reds.windows(2).all(|w| w[1] <= w[0]);
    ok &= monotone;
    notes.push(format!("varianta red->blue reds={reds:?} best={}", restricted.best.objective()));

    let t = Instant::now();
    let long = local_search(&Preset::Cyc43.spec(), &Tabu, &SearchOptions::new(10_000, 5)).unwrap();
    let elapsed = t.elapsed();
    ok &= elapsed < SEARCH_BUDGET && long.evaluations == 10_000;
    notes.push(format!("tabu 10000 evals in {elapsed:?} best={}", long.best.objective()));

    (ok, notes.join("; "))
}

fn random_spec(rng: &mut ChaCha8Rng) -> ColoringSpec {
    let n = rng.gen_range(6..=25);
    let lengths: Vec<usize> = (1..=n / 2).filter(|_| rng.gen_bool(0.5)).collect();
    let mut spec = ColoringSpec::circulant(n, lengths);
    let mut seen = BTreeSet::new();
    for _ in 0..rng.gen_range(0..10) {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a != b && seen.insert((a.min(b), a.max(b))) {
            spec.flips.push((a.min(b), a.max(b)));
        }
    }
    if rng.gen_bool(0.3) {
        spec.deletions.insert(rng.gen_range(0..n));
    }
    spec
}

fn cross_validation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0010);
    let mut disagreements = Vec::new();
    let mut total = 0;
    for i in 0..50 {
        let spec = random_spec(&mut rng);
        let cert = Certificate::with_computed_claims(spec, &[5], &MaskEngine).unwrap();
        let outcomes = verify_certificate(&cert, &NaiveOracle).unwrap();
        total += outcomes.iter().map(|o| o.actual).sum::<u64>();
        if !outcomes.iter().all(|o| o.holds()) {
            disagreements.push(i);
        }
    }
    (disagreements.is_empty(), format!("specs=50 total_k5={total} disagreements={disagreements:?}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("AC1 cyc43 red K5s = canonical 43", cyc43_red),
        ("AC2 cyc43 blue K5s = 0", cyc43_blue),
        ("AC3 exoo42 red = blue = 0 (engine + oracle)", exoo42_clean),
        ("AC4 variant A exact red/blue K5 sets", variant_a_sets),
        ("AC5 variant B counts, engine = oracle", variant_b_report),
        ("AC6 lemma replay suite", lemma_replay),
        ("AC7 standard-reduction orbit equivalence", standard_reduction),
        ("AC8 flip delta = full recount (200 cases)", delta_correctness),
        ("AC9 search reproducibility and descent", search_behaviour),
        ("AC10 engine/oracle agreement (50 specs)", cross_validation),
    ];
    let mut all = true;
    for (name, check) in criteria {
        let (ok, detail) = check();
        all &= ok;
        println!("[{}] {name}: {detail}", if ok { "PASS" } else { "FAIL" });
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
