mod common;

use std::time::{Duration, Instant};

use common::{random_graph, random_potential};
use sssp_core::{
    default_budget, generators, oracle_bellman_ford, run, run_bfm, AlgoId, Detector, Graph, RunOptions,
    RunOutcome,
};

fn audited() -> RunOptions {
    RunOptions {
        audit: true,
        ..Default::default()
    }
}

#[test]
fn preorder_and_bit_audits_hold() {
    // Pal, Tar, ZDO and ZDO-Bits rebuild the parent preorder at every
    // quiescent point; ZDO-Bits also sweeps all zero candidacy bits.
    for seed in 0..300 {
        let g = random_graph(seed, 40, -10, 100);
        for algo in [AlgoId::Pallottino, AlgoId::Tarjan, AlgoId::Zdo, AlgoId::ZdoBits] {
            let r = run(&g, algo, &audited());
            assert!(r.audit_failures.is_empty(), "seed {seed}, {algo}: {:?}", r.audit_failures);
        }
    }
}

#[test]
fn audits_hold_on_generated_families() {
    let graphs = [
        generators::gen_spgrid(6, 7, 1).unwrap(),
        generators::gen_hard_grid(5, 6, 2, generators::Sign::Negative).unwrap(),
        generators::gen_sqnc(5, 5, 3).unwrap(),
        generators::gen_bad_gor(40).unwrap(),
    ];
    for g in &graphs {
        for algo in [AlgoId::Pallottino, AlgoId::Tarjan, AlgoId::Zdo, AlgoId::ZdoBits] {
            let r = run(g, algo, &audited());
            assert!(r.audit_failures.is_empty(), "{algo}: {:?}", r.audit_failures);
        }
    }
}

#[test]
fn zdo_rounds_bounded_by_n_minus_one() {
    let mut checked = 0;
    for seed in 0..400 {
        let g = random_graph(seed, 50, -10, 100);
        if oracle_bellman_ford(&g).cycle().is_some() {
            continue;
        }
        checked += 1;
        for algo in [AlgoId::Zdo, AlgoId::ZdoBits] {
            let opts = RunOptions {
                trace: true,
                ..Default::default()
            };
            let r = run(&g, algo, &opts);
            // Round 0 scans only the source; every later round finalizes
            // at least one more vertex.
            let last = r.trace.last().map_or(0, |e| e.round) as usize;
            assert!(last <= g.n() - 1, "seed {seed}, {algo}: last round {last}");
        }
    }
    assert!(checked > 20);
}

#[test]
fn checks_stay_within_budget_without_cycles() {
    for seed in 0..400 {
        let g = random_graph(seed, 50, -10, 100);
        if oracle_bellman_ford(&g).cycle().is_some() {
            continue;
        }
        for algo in AlgoId::ALL {
            let r = run(&g, algo, &RunOptions::default());
            assert!(r.outcome.tree().is_some(), "seed {seed}, {algo}");
            assert!(r.counters.total() <= default_budget(&g), "seed {seed}, {algo}");
        }
    }
}

#[test]
fn counters_invariant_under_potentials() {
    for seed in 0..200 {
        let g = random_graph(seed, 50, -10, 100);
        let p = random_potential(seed, g.n(), 1_000_000);
        let h = g.reweighted(&p).unwrap();
        for algo in [AlgoId::Pallottino, AlgoId::Tarjan, AlgoId::Zdo, AlgoId::ZdoBits] {
            let a = run(&g, algo, &RunOptions::default());
            let b = run(&h, algo, &RunOptions::default());
            assert_eq!(a.counters, b.counters, "seed {seed}, {algo}");
            assert_eq!(a.outcome.label(), b.outcome.label());
        }
    }
}

#[test]
fn zdo_bits_never_needs_more_main_checks() {
    for seed in 0..300 {
        let g = random_graph(seed, 50, -10, 100);
        let z = run(&g, AlgoId::Zdo, &RunOptions::default());
        let b = run(&g, AlgoId::ZdoBits, &RunOptions::default());
        match (&z.outcome, &b.outcome) {
            (RunOutcome::Tree(x), RunOutcome::Tree(y)) => {
                assert_eq!(x.dist, y.dist);
                assert!(b.counters.main <= z.counters.main, "seed {seed}");
            }
            (RunOutcome::NegativeCycle(_), RunOutcome::NegativeCycle(_)) => {}
            _ => panic!("seed {seed}: {} vs {}", z.outcome.label(), b.outcome.label()),
        }
    }
}

#[test]
fn every_detector_agrees_with_oracle() {
    for seed in 0..300 {
        let g = random_graph(seed, 40, -10, 100);
        let cyclic = oracle_bellman_ford(&g).cycle().is_some();
        for d in [Detector::None, Detector::WalkToRoot, Detector::Subtree] {
            let r = run_bfm(&g, d, &RunOptions::default());
            assert_eq!(r.outcome.cycle().is_some(), cyclic, "seed {seed}, {d:?}");
        }
    }
}

#[test]
fn tiny_budget_aborts_cleanly() {
    let g = generators::gen_spgrid(8, 8, 0).unwrap();
    for algo in AlgoId::ALL {
        let opts = RunOptions {
            budget: Some(10),
            ..Default::default()
        };
        let r = run(&g, algo, &opts);
        assert_eq!(r.outcome, RunOutcome::BudgetExhausted, "{algo}");
        assert_eq!(r.counters.total(), 10);
    }
}

#[test]
fn past_deadline_times_out() {
    let g: Graph = generators::gen_bad_gor(3000).unwrap();
    let opts = RunOptions {
        deadline: Some(Instant::now() - Duration::from_millis(1)),
        ..Default::default()
    };
    for algo in [AlgoId::Tarjan, AlgoId::Pallottino, AlgoId::Gor, AlgoId::Zdo] {
        assert_eq!(run(&g, algo, &opts).outcome, RunOutcome::TimedOut, "{algo}");
    }
}
