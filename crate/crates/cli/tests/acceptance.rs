//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.
//!
//! Run with `cargo test -p altind-cli --test acceptance`.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::time::Instant;

use altind::bounds::{verify_graphs, CorpusOptions, Status};
use altind::constructions::{doubler_chain, realize};
use altind::cycles::is_ternary;
use altind::decycling::{is_ternary_decycling_set, min_ternary_decycling};
use altind::indpoly::{alternating_number, independence_polynomial, independent_set_count, oracle_polynomial};
use altind::{Graph, Limits, VertexSet};
use altind_cli::{labelled_graphs, run, Command, RunConfig, Streams};
use common::{count_independent, phi3_oracle, random_graph, rng};
use num_bigint::{BigInt, BigUint};
use rand::Rng;

type Outcome = Result<String, String>;

/// All labelled graphs on 6 vertices, then 1000 `G(n, 1/2)` for each
/// `n` in 7..=12 from a fixed seed.
fn corpus() -> Vec<Graph> {
    let mut graphs: Vec<Graph> = labelled_graphs(6).collect();
    let mut r = rng(2024);
    for n in 7..=12 {
        graphs.extend((0..1000).map(|_| random_graph(&mut r, n, 0.5)));
    }
    graphs
}

fn oracle_equivalence(graphs: &[Graph]) -> Outcome {
    for g in graphs {
        let fast = independence_polynomial(g).map_err(|e| e.to_string())?;
        let slow = oracle_polynomial(g).map_err(|e| e.to_string())?;
        if fast != slow {
            return Err(format!("{}: {:?} vs {:?}", altind::graph6::to_graph6(g), fast, slow));
        }
    }
    Ok(format!("{} graphs agree coefficientwise", graphs.len()))
}

fn bound_checks(graphs: &[Graph]) -> Outcome {
    let inputs: Vec<_> = graphs.iter().enumerate().map(|(i, g)| (i + 1, Ok(g.clone()))).collect();
    let outcome = verify_graphs(&inputs, &CorpusOptions::default()).map_err(|e| e.to_string())?;
    let s = &outcome.summary;
    if let Some(v) = s.violations.first() {
        return Err(format!("{} violations, first: {} on {}", s.violations.len(), v.check, v.graph6));
    }
    if s.not_evaluated() > 0 {
        return Err(format!("{} checks not evaluated", s.not_evaluated()));
    }
    let applicable: Vec<String> = s.checks.iter().map(|(n, t)| format!("{n} {}", t.applicable)).collect();
    Ok(format!("{} graphs, 0 violations; applicable: {}", s.graphs, applicable.join(", ")))
}

fn closed_forms() -> Outcome {
    // f(0) = 1, f(1) = 0, f(n) = f(n-1) - f(n-2)
    let mut f = vec![BigInt::from(1), BigInt::from(0)];
    for n in 2..=36 {
        let next = &f[n - 1] - &f[n - 2];
        f.push(next);
    }
    let table = [1, 0, -1, -1, 0, 1];
    for n in 0..=36 {
        if f[n] != BigInt::from(table[n % 6]) {
            return Err(format!("recurrence leaves the period at n = {n}"));
        }
    }
    for (n, want) in f.iter().enumerate().skip(1) {
        let p = Graph::path(n).unwrap();
        let got = alternating_number(&p).unwrap();
        if got != *want {
            return Err(format!("P{n}: {got} != {want}"));
        }
        if n <= 20 && oracle_polynomial(&p).unwrap().at_minus_one() != *want {
            return Err(format!("P{n}: oracle disagrees"));
        }
    }
    for n in 3..=36 {
        let c = Graph::cycle(n).unwrap();
        let want = &f[n - 1] - &f[n - 3];
        let got = alternating_number(&c).unwrap();
        if got != want {
            return Err(format!("C{n}: {got} != {want}"));
        }
        if n <= 20 && oracle_polynomial(&c).unwrap().at_minus_one() != want {
            return Err(format!("C{n}: oracle disagrees"));
        }
        if n % 3 == 0 {
            let phi3 = min_ternary_decycling(&c).unwrap().0;
            if want.magnitude() != &BigUint::from(2u32) || phi3 != 1 {
                return Err(format!("C{n}: |I| = {}, phi3 = {phi3}", want.magnitude()));
            }
        }
    }
    Ok("P_n for n <= 36, C_n for 3 <= n <= 36, oracle to n = 20; |I(C_3k)| = 2, phi3 = 1".into())
}

fn doubler_tightness() -> Outcome {
    let mut sizes = Vec::new();
    for k in 1..=3u32 {
        let g = doubler_chain(k as usize - 1).map_err(|e| e.to_string())?;
        let alt = alternating_number(&g).unwrap();
        let oracle = oracle_polynomial(&g).unwrap().at_minus_one();
        let phi3 = min_ternary_decycling(&g).unwrap().0;
        let (brute, _) = phi3_oracle(&g);
        let want = BigUint::from(1u32) << k;
        if alt != oracle || alt.magnitude() != &want || phi3 != k as usize || brute != phi3 {
            return Err(format!("k = {k}: I = {alt}, oracle {oracle}, phi3 = {phi3}, brute force {brute}"));
        }
        sizes.push(format!("k={k}: n={} I={alt}", g.n()));
    }
    Ok(format!("|I| = 2^k = 2^phi3; {}", sizes.join(", ")))
}

fn density() -> Outcome {
    let mut count = 0;
    let mut largest = 0;
    for k in 1..=3u32 {
        let span = 1i64 << k;
        for q in -span..=span {
            let (g, recipe) = realize(k, q).map_err(|e| format!("k={k} q={q}: {e}"))?;
            let rebuilt = recipe.build().map_err(|e| e.to_string())?;
            let alt = oracle_polynomial(&g).unwrap().at_minus_one();
            let (phi3, _) = phi3_oracle(&g);
            if !g.is_connected() || rebuilt != g || alt != BigInt::from(q) || phi3 != k as usize {
                return Err(format!("k={k} q={q}: connected {}, I = {alt}, phi3 = {phi3}", g.is_connected()));
            }
            count += 1;
            largest = largest.max(g.n());
        }
    }
    if count != 31 {
        return Err(format!("{count} targets instead of 31"));
    }
    Ok(format!("31/31 targets realized and confirmed by brute force (largest n = {largest})"))
}

fn c4_sharpening() -> Outcome {
    let g = Graph::cycle(4).unwrap();
    let inputs = vec![(1, Ok(g))];
    let outcome = verify_graphs(&inputs, &CorpusOptions::default()).unwrap();
    let altind::bounds::Record::Report(r) = &outcome.records[0] else {
        return Err("no report".into());
    };
    let c = &r.checks;
    let int = |x: i64| Some(BigInt::from(x));
    let ok = r.ternary == Some(true)
        && r.phi == Some(1)
        && r.phi3 == Some(0)
        && r.alternating.as_ref().map(|a| a.magnitude().clone()) == Some(BigUint::from(1u32))
        && c.ternary_decycling.status == Status::Satisfied
        && c.ternary_decycling.bound == int(1)
        && c.ternary_decycling.slack == int(0)
        && c.decycling.bound == int(2)
        && c.decycling.slack == int(1);
    if ok {
        Ok("ternary-decycling bound 1 with slack 0; decycling bound 2 with slack 1".into())
    } else {
        Err(format!("{r:?}"))
    }
}

fn monotonicity() -> Outcome {
    let mut r = rng(77);
    let limits = Limits::default();
    let mut pairs = 0;
    for _ in 0..500 {
        let n = r.gen_range(1..=10);
        let p = r.gen_range(0.2..0.8);
        let g = random_graph(&mut r, n, p);
        let (_, base) = min_ternary_decycling(&g).unwrap();
        let extra = VertexSet::from_bits(r.gen::<u64>() & VertexSet::range(n).bits());
        let d = base.union(VertexSet::from_bits(extra.bits() & r.gen::<u64>()));
        let d2 = d.union(extra);
        for s in [d, d2] {
            if !is_ternary_decycling_set(&g, s, &limits).unwrap() || !is_ternary(&g.delete_vertices(s).unwrap()).unwrap() {
                return Err(format!("{s:?} is not a ternary decycling set"));
            }
        }
        let small = independent_set_count(&g.induced(d)).unwrap();
        let large = independent_set_count(&g.induced(d2)).unwrap();
        if small != BigUint::from(count_independent(&g, d.bits()))
            || large != BigUint::from(count_independent(&g, d2.bits()))
        {
            return Err("count disagrees with subset enumeration".into());
        }
        if small > large {
            return Err(format!("{small} > {large} for {d:?} within {d2:?}"));
        }
        pairs += 1;
    }
    Ok(format!("{pairs} nested pairs, 0 exceptions"))
}

fn verify_output(corpus: &str, jobs: usize) -> (i32, Vec<u8>) {
    let mut config = RunConfig::new(Command::Verify);
    config.jobs = jobs;
    let mut stdin = corpus.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&config, &mut Streams { stdin: &mut stdin, out: &mut out, err: &mut err }).unwrap();
    (code, out)
}

fn determinism() -> Outcome {
    let corpus: String = (1..=5)
        .flat_map(labelled_graphs)
        .map(|g| altind::graph6::to_graph6(&g) + "\n")
        .collect();
    let (code1, a) = verify_output(&corpus, 1);
    let (code8, b) = verify_output(&corpus, 8);
    let lines = corpus.lines().count();
    if code1 != 0 || code8 != 0 {
        return Err(format!("exit codes {code1} and {code8}"));
    }
    if a != b {
        return Err("outputs differ".into());
    }
    Ok(format!("{lines} graphs, {} identical bytes, exit 0", a.len()))
}

fn main() {
    let corpus = corpus();
    let criteria: [(&str, &dyn Fn() -> Outcome); 8] = [
        ("1 oracle equivalence", &|| oracle_equivalence(&corpus)),
        ("2 bound checks, zero violations", &|| bound_checks(&corpus)),
        ("3 path and cycle closed forms", &closed_forms),
        ("4 doubler chains are tight", &doubler_tightness),
        ("5 density targets k <= 3", &density),
        ("6 C4 slack", &c4_sharpening),
        ("7 middle-bound monotonicity", &monotonicity),
        ("8 verify is deterministic across --jobs", &determinism),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail} ({secs:.2}s)"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail} ({secs:.2}s)");
            }
        }
    }
    println!("{} of 8 criteria pass", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
