//! Acceptance suite: thirteen criteria, each checked exactly (tolerance zero).
//!
//! Runs as a plain binary so that every criterion prints one PASS/FAIL line
//! whether or not output capture is on. Exits non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::{complement_is_galaxy, is_k2_plus_clique, labeled, no_isolated, spider_value, Adj};
use trd_core::criticality::{complete_to_critical, edge_profile, gamma_t_profile, is_gamma_t_edge_critical};
use trd_core::families::{
    dead_example_w, generate, hen1_classify, predict_n_critical, spider_gamma_formula,
    spider_is_critical, spider_leg_multisets, Hen1Class,
};
use trd_core::graph::Diameter;
use trd_core::solver::{is_trd_function, Mode};
use trd_core::verify::{enumerate_graphs, verify_theorem, InstanceUniverse};
use trd_core::{Classification, Exec, FamilySpec, Graph, Solver, TheoremId};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn solver() -> Solver {
    Solver::default()
}

fn tr(g: &Graph) -> usize {
    solver().gamma_tr_value(g).expect("γ_tR")
}

fn fam(text: &str) -> Graph {
    generate(&FamilySpec::parse(text).expect("spec")).expect("family")
}

fn g6(g: &Graph) -> String {
    trd_core::graph6::encode(g).unwrap_or_default()
}

fn random_graphs(count: usize, n: usize, seed: u64) -> Vec<Graph> {
    let u = InstanceUniverse::RandomGnp { count, n, p: 0.5, seed, no_isolated: true };
    enumerate_graphs(&u).expect("random universe").map(|i| i.graph).collect()
}

/// All labelled graphs with 2 <= n <= max_n and no isolated vertex.
fn labeled_no_isolated(max_n: usize) -> Vec<Graph> {
    (2..=max_n).flat_map(labeled).filter(no_isolated).collect()
}

fn is_edge_critical(g: &Graph) -> bool {
    edge_profile(g).expect("profile").classification.is_edge_critical()
}

fn c1_oracle() -> Outcome {
    let mut graphs: Vec<Graph> =
        (2..=6).flat_map(labeled).filter(|g| g.is_connected()).collect();
    let connected = graphs.len();
    graphs.extend(random_graphs(100, 7, 7));
    graphs.extend(random_graphs(100, 8, 8));
    for g in &graphs {
        let r = solver().gamma_tr(g).map_err(|e| format!("{}: {e}", g6(g)))?;
        let brute = Adj::of(g).min_value(true);
        ensure!(r.value == brute, "{}: solver {} vs brute force {}", g6(g), r.value, brute);
        ensure!(
            r.witness.weight() == r.value && is_trd_function(g, &r.witness).unwrap().is_valid(),
            "{}: witness {:?} is not a minimum TRD function",
            g6(g),
            r.witness
        );
    }
    Ok(format!("{connected} connected graphs n <= 6 and 200 random graphs n in {{7,8}} agree"))
}

fn c2_knkm() -> Outcome {
    let mut checked = 0;
    for n in 2..=4 {
        for m in n..=4 {
            let g = generate(&FamilySpec::CartesianComplete(n, m)).unwrap();
            let v = tr(&g);
            ensure!(v == 2 * n, "K_{n} □ K_{m}: γ_tR = {v}, expected {}", 2 * n);
            checked += 1;
        }
    }
    let report = verify_theorem(TheoremId::KnKm, &TheoremId::KnKm.default_universe()).unwrap();
    ensure!(report.passed() && report.instances_checked == 6, "registry: {report:?}");
    Ok(format!("{checked} products, γ_tR = 2n"))
}

fn c3_dead_example() -> Outcome {
    for n in 2..=4 {
        let g = generate(&FamilySpec::DeadExample(n)).unwrap();
        let adj = Adj::of(&g);
        let (value, _) = adj.minimum(true);
        ensure!(value == 2 * n + 1, "D_{n}: brute force γ_tR = {value}");
        ensure!(tr(&g) == value, "D_{n}: solver disagrees with brute force");
        let want = dead_example_w(n);
        ensure!(adj.dead(true) == want, "D_{n}: brute-force dead set {:?}", adj.dead(true));
        let dead = solver().dead_vertices(&g, Mode::TotalRoman).unwrap();
        let got: Vec<usize> = trd_core::graph::members(dead).collect();
        ensure!(got == want, "D_{n}: solver dead set {got:?}, expected {want:?}");
        if n >= 3 {
            let p = edge_profile(&g).unwrap();
            for d in &p.deltas {
                if want.contains(&d.u) || want.contains(&d.v) {
                    ensure!(d.delta >= 1, "D_{n}: non-edge {}{} at a w vertex has delta 0", d.u, d.v);
                }
            }
        }
    }
    let d2 = generate(&FamilySpec::DeadExample(2)).unwrap();
    let w = dead_example_w(2);
    let delta = trd_core::edge_delta(&d2, w[0], w[1]).unwrap();
    ensure!(delta == 0, "D_2: delta(w_1, w_2) = {delta}");
    Ok("γ_tR(D_n) = 5, 7, 9; dead sets are {w_i}; w-edges critical for n = 3, 4; D_2 + w_1w_2 stable".into())
}

fn c4_diameter_two() -> Outcome {
    for l in 2..=3 {
        let g = generate(&FamilySpec::ProductDeleted(l)).unwrap();
        let v = tr(&g);
        ensure!(v == 2 * l + 1, "G_{l}^d: γ_tR = {v}, expected {}", 2 * l + 1);
    }
    let brute = Adj::of(&generate(&FamilySpec::ProductDeleted(2)).unwrap()).min_value(true);
    ensure!(brute == 5, "G_2^d: brute force γ_tR = {brute}");
    let bases = [
        FamilySpec::CartesianComplete(2, 2),
        FamilySpec::CartesianComplete(3, 3),
        FamilySpec::ProductDeleted(2),
    ];
    for spec in &bases {
        let g = generate(spec).unwrap();
        let k = tr(&g);
        let h = complete_to_critical(&g).unwrap();
        ensure!(g.edges().iter().all(|&(u, v)| h.has_edge(u, v)), "{spec}: completion dropped edges");
        let p = edge_profile(&h).unwrap();
        ensure!(p.base_value == k, "{spec}: completion changed γ_tR {k} -> {}", p.base_value);
        ensure!(p.classification.is_edge_critical(), "{spec}: completion is {}", p.classification);
        ensure!(h.diameter() == Diameter::Finite(2), "{spec}: completion diameter {:?}", h.diameter());
    }
    Ok("γ_tR(G_l^d) = 5, 7; completions of K_2□K_2, K_3□K_3, G_2^d are edge-critical of diameter 2".into())
}

fn c5_spiders() -> Outcome {
    let mut checked = 0;
    for k in 3..=4 {
        for legs in spider_leg_multisets(k, 4) {
            let g = generate(&FamilySpec::spider(legs.clone())).unwrap();
            let v = tr(&g);
            let formula = spider_value(&legs);
            ensure!(v == formula, "Sp{legs:?}: solver {v}, formula {formula}");
            ensure!(spider_gamma_formula(&legs).unwrap() == formula, "Sp{legs:?}: library formula");
            if g.order() <= 10 {
                let brute = Adj::of(&g).min_value(true);
                ensure!(brute == v, "Sp{legs:?}: brute force {brute}");
            }
            // all legs but the longest are 2, and the longest is 2, 4 or >= 6
            let (last, rest) = legs.split_last().unwrap();
            let expected = rest.iter().all(|&l| l == 2) && matches!(last, 2 | 4 | 6..);
            let measured = is_edge_critical(&g);
            ensure!(measured == expected, "Sp{legs:?}: measured critical {measured}, expected {expected}");
            ensure!(spider_is_critical(&legs).unwrap() == measured, "Sp{legs:?}: library predicate");
            checked += 1;
        }
    }
    Ok(format!("{checked} spiders: formula and criticality predicate match"))
}

fn c6_four_critical() -> Outcome {
    let mut found = 0;
    let graphs = labeled_no_isolated(6);
    for g in &graphs {
        let galaxy = complement_is_galaxy(g);
        ensure!(galaxy == trd_core::families::complement_is_galaxy(g), "{}: galaxy recognisers differ", g6(g));
        let critical = tr(g) == 4 && is_edge_critical(g);
        ensure!(critical == galaxy, "{}: 4-critical {critical}, complement galaxy {galaxy}", g6(g));
        found += critical as usize;
    }
    Ok(format!("{} graphs, {found} are 4-edge-critical, all with galaxy complements", graphs.len()))
}

fn c7_no_five_super() -> Outcome {
    let graphs = labeled_no_isolated(6);
    for g in &graphs {
        if tr(g) == 5 {
            let c = edge_profile(g).unwrap().classification;
            ensure!(c != Classification::Supercritical, "{}: 5-supercritical", g6(g));
        }
    }
    for a in 3..=4 {
        for b in 3..=4 {
            let g = fam(&format!("union(K{a},K{b})"));
            let p = edge_profile(&g).unwrap();
            ensure!(p.base_value == 6, "K{a} ∪ K{b}: γ_tR = {}", p.base_value);
            ensure!(p.classification == Classification::Supercritical, "K{a} ∪ K{b}: {}", p.classification);
        }
    }
    Ok(format!("{} graphs without a 5-supercritical one; K_a ∪ K_b is 6-supercritical", graphs.len()))
}

fn c8_added_edge() -> Outcome {
    let s = solver();
    let mut graphs = Vec::new();
    for n in 4..=8 {
        graphs.extend(random_graphs(100, n, n as u64));
    }
    let (mut non_edges, mut critical) = (0, 0);
    for g in &graphs {
        let base = tr(g);
        let base_t = s.gamma_t(g).unwrap().value;
        for (u, v) in g.non_edges() {
            non_edges += 1;
            let h = g.add_edge(u, v).unwrap();
            let plus = tr(&h);
            let plus_t = s.gamma_t(&h).unwrap().value;
            ensure!(plus <= base && base - plus <= 2, "{}+{u}{v}: γ_tR {base} -> {plus}", g6(g));
            ensure!(plus_t <= base_t && base_t - plus_t <= 2, "{}+{u}{v}: γ_t {base_t} -> {plus_t}", g6(g));
            if plus < base {
                critical += 1;
                let fs = s.enumerate_min_trd(&h).unwrap();
                ensure!(!fs.is_empty(), "{}+{u}{v}: no minimum functions", g6(g));
                for f in &fs {
                    let mut pair = [f.get(u), f.get(v)];
                    pair.sort_unstable();
                    ensure!(
                        matches!(pair, [2, 2] | [1, 2] | [0, 2] | [1, 1]),
                        "{}+{u}{v}: minimum function {f:?} has values {pair:?}",
                        g6(g)
                    );
                }
            }
        }
    }
    Ok(format!("{} graphs, {non_edges} non-edges ({critical} critical), zero exceptions", graphs.len()))
}

fn c9_order_n() -> Outcome {
    let mut count = 0;
    let mut at_n = 0;
    for n in 2..=7 {
        for g in labeled(n).filter(|g| g.is_connected()) {
            count += 1;
            let v = tr(&g);
            let class = hen1_classify(&g).unwrap();
            ensure!((class != Hen1Class::None) == (v == n), "{}: class {class}, γ_tR {v}", g6(&g));
            if n >= 4 {
                let measured = v == n && is_edge_critical(&g);
                at_n += measured as usize;
                let predicted = predict_n_critical(&g).unwrap();
                ensure!(predicted == measured, "{}: predicted {predicted}, measured {measured}", g6(&g));
            }
        }
    }
    // family corpus, with the expected verdicts stated independently
    let mut corpus: Vec<(String, bool)> = Vec::new();
    corpus.extend((4..=9).map(|n| (format!("C{n}"), true)));
    corpus.extend((2..=5).map(|r| (format!("cor(K{r})"), r >= 3)));
    corpus.extend((2..=4).map(|k| (format!("sstar({k})"), 2 * k + 1 >= 7)));
    for k1 in 0..=3usize {
        for k2 in 0..=3 - k1 {
            if k1 + k2 >= 1 {
                corpus.push((format!("familyG({k1},{k2})"), true));
            }
        }
    }
    for a in 1..=2 {
        for b in 1..=2 {
            for r in 0..=5 {
                // a = b = 1 is the path P_{6+r}, which is never edge-critical
                let expected = !(a == 1 && b == 1) && r != 0 && r != 2;
                corpus.push((format!("familyH({a},{b},r={r})"), expected));
            }
        }
    }
    for (text, expected) in &corpus {
        let g = fam(text);
        let v = tr(&g);
        ensure!(v == g.order(), "{text}: γ_tR = {v}, n = {}", g.order());
        let measured = is_edge_critical(&g);
        ensure!(measured == *expected, "{text}: measured critical {measured}, expected {expected}");
        ensure!(predict_n_critical(&g).unwrap() == measured, "{text}: prediction differs");
    }
    Ok(format!(
        "{count} connected graphs 2 <= n <= 7 ({at_n} n-edge-critical) and {} corpus graphs",
        corpus.len()
    ))
}

fn c10_bounds() -> Outcome {
    let s = solver();
    let graphs = labeled_no_isolated(6);
    for g in &graphs {
        let adj = Adj::of(g);
        let v = tr(g);
        let t = s.gamma_t(g).unwrap().value;
        ensure!(t == adj.domination(true), "{}: γ_t {t} vs subset scan", g6(g));
        ensure!(t <= v && v <= 2 * t, "{}: γ_t = {t}, γ_tR = {v}", g6(g));
        let matching = adj.0.iter().all(|nb| nb.len() == 1);
        ensure!((v == t) == matching, "{}: γ_tR = γ_t is {} but union of K_2 is {matching}", g6(g), v == t);
        let n = g.order();
        if n >= 3 && g.is_connected() {
            let universal = adj.0.iter().any(|nb| nb.len() == n - 1);
            ensure!((v == t + 1) == universal, "{}: γ_tR = γ_t + 1 vs universal vertex", g6(g));
            if !universal {
                ensure!(t + 2 <= v, "{}: Δ <= n-2 but γ_tR = {v} < γ_t + 2 = {}", g6(g), t + 2);
            }
            ensure!(matches!(v, 3 | 4) == (t == 2), "{}: γ_tR = {v}, γ_t = {t}", g6(g));
            let d = adj.domination(false);
            ensure!(v != 3 || d == 1, "{}: γ_tR = 3 but γ = {d}", g6(g));
            ensure!(v != 4 || d == 2, "{}: γ_tR = 4 but γ = {d}", g6(g));
        }
    }
    Ok(format!("{} graphs; equality γ_tR = γ_t only on unions of K_2", graphs.len()))
}

fn c11_regular() -> Outcome {
    let k33 = Graph::from_edges(6, (0..3).flat_map(|i| (3..6).map(move |j| (i, j)))).unwrap();
    let prism = generate(&FamilySpec::CartesianComplete(2, 3)).unwrap();
    let mut graphs = vec![k33, prism];
    graphs.extend(labeled(7).filter(|g| (0..7).all(|v| g.degree(v) == 4)));
    for g in &graphs {
        let p = edge_profile(g).unwrap();
        ensure!(p.base_value == 4, "{}: γ_tR = {}", g6(g), p.base_value);
        ensure!(p.classification == Classification::Stable, "{}: {}", g6(g), p.classification);
    }
    Ok(format!("K_3,3, C_3□K_2 and {} labelled 4-regular graphs on 7 vertices: γ_tR = 4, stable", graphs.len() - 2))
}

fn c12_five_critical() -> Outcome {
    let s = solver();
    let (mut found, mut via_t, mut via_k2) = (0, 0, 0);
    for g in labeled_no_isolated(6) {
        if tr(&g) != 5 || !is_edge_critical(&g) {
            continue;
        }
        found += 1;
        if is_gamma_t_edge_critical(&s, &g, 3).unwrap() {
            via_t += 1;
        } else if is_k2_plus_clique(&g) {
            let p = gamma_t_profile(&s, Exec::Sequential, &g).unwrap();
            ensure!(
                p.base_value == 4 && p.classification == Classification::Supercritical,
                "{}: K_2 ∪ K_m but γ_t = {}, {}",
                g6(&g),
                p.base_value,
                p.classification
            );
            via_k2 += 1;
        } else {
            return Err(format!("{}: 5-edge-critical, neither case applies", g6(&g)));
        }
    }
    ensure!(found > 0, "no 5-edge-critical graph found; the check would be vacuous");
    Ok(format!("{found} 5-edge-critical graphs: {via_t} 3-γ_t-edge-critical, {via_k2} K_2 ∪ K_m"))
}

fn c13_roman_dead_pairs() -> Outcome {
    let (mut graphs, mut pairs) = (0, 0);
    for g in labeled_no_isolated(6) {
        graphs += 1;
        let adj = Adj::of(&g);
        let (base, _) = adj.minimum(false);
        let dead = adj.dead(false);
        let lib: Vec<usize> =
            trd_core::graph::members(solver().dead_vertices(&g, Mode::Roman).unwrap()).collect();
        ensure!(lib == dead, "{}: Roman dead set {lib:?} vs brute force {dead:?}", g6(&g));
        for (i, &u) in dead.iter().enumerate() {
            for &v in &dead[i + 1..] {
                if g.has_edge(u, v) {
                    continue;
                }
                pairs += 1;
                let plus = Adj::of(&g.add_edge(u, v).unwrap()).min_value(false);
                ensure!(plus == base, "{}: γ_R {base} -> {plus} after adding {u}{v}", g6(&g));
            }
        }
    }
    Ok(format!("{graphs} graphs, {pairs} non-adjacent Roman-dead pairs, γ_R unchanged"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("1  oracle equivalence", c1_oracle),
        ("2  γ_tR(K_n □ K_m) = 2n", c2_knkm),
        ("3  D_n value, dead set, critical w-edges", c3_dead_example),
        ("4  diameter-2 edge-critical graphs", c4_diameter_two),
        ("5  spider formula and criticality", c5_spiders),
        ("6  4-edge-critical iff complement is a galaxy", c6_four_critical),
        ("7  no 5-supercritical graphs", c7_no_five_super),
        ("8  added-edge bounds and critical-edge values", c8_added_edge),
        ("9  γ_tR = n characterisation and n-edge-critical graphs", c9_order_n),
        ("10 γ_t / γ_tR bounds and equivalences", c10_bounds),
        ("11 (n-3)-regular graphs are stable with γ_tR = 4", c11_regular),
        ("12 5-edge-critical graphs", c12_five_critical),
        ("13 Roman dead pairs", c13_roman_dead_pairs),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(summary) => println!("PASS  {name}: {summary} [{secs:.1}s]"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why} [{secs:.1}s]");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 13 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
