use atomic::search::{
    find_converse_counterexamples, read_jsonl, verify_prop1, verify_prop2, verify_theorem3,
    CampaignConfig, CampaignLine, Mode,
};

fn config() -> CampaignConfig {
    CampaignConfig::default()
}

#[test]
fn theorem3_three_states_passes_every_check() {
    let rep = verify_theorem3(3, 3, Mode::Exhaustive, &config()).unwrap();
    assert_eq!(rep.tally.examined, 27 * 27 * 27 * 8);
    assert_eq!(rep.tally.full, 5832);
    assert_eq!(rep.violations(), 0, "{:#?}", rep.tally.checks);
    for name in [
        "eta.closed_form",
        "factorization",
        "intervals.types",
        "intervals.same_type_connected",
        "intervals.empty_collection",
        "reversal.quotients",
    ] {
        assert!(rep.tally.checks[name].checked > 0, "{name} never ran");
    }
}

#[test]
fn theorem3_sampled_four_states() {
    let mode = Mode::Sample {
        samples: 20_000,
        seed: 3,
    };
    let rep = verify_theorem3(4, 3, mode, &config()).unwrap();
    assert!(rep.tally.full > 0);
    assert_eq!(rep.violations(), 0, "{:#?}", rep.tally.checks);
    let by_r: Vec<Vec<u64>> = rep
        .tally
        .complexities_by_r
        .values()
        .map(|s| s.iter().copied().collect())
        .collect();
    assert_eq!(by_r, vec![vec![15], vec![29], vec![43], vec![29], vec![15]]);
}

#[test]
fn prop1_and_prop2_small_exhaustive() {
    let rep = verify_prop1(3, 2, Mode::Exhaustive, &config()).unwrap();
    assert_eq!(rep.violations(), 0);
    assert_eq!(rep.tally.checks["reversal.witness"].checked, 1);
    let rep = verify_prop2(3, 2, Mode::Exhaustive, &config()).unwrap();
    assert_eq!(rep.violations(), 0);
    assert_eq!(rep.tally.checks["atoms.reversal_count"].checked, 5832);
}

#[test]
fn converse_log_round_trips_and_is_reproducible() {
    let cfg = CampaignConfig {
        record_limit: Some(5),
        workers: Some(3),
        ..config()
    };
    let mode = Mode::Sample {
        samples: 40_000,
        seed: 99,
    };
    let a = find_converse_counterexamples(3, 3, mode, &cfg).unwrap();
    let b = find_converse_counterexamples(
        3,
        3,
        mode,
        &CampaignConfig {
            workers: Some(1),
            ..cfg.clone()
        },
    )
    .unwrap();
    assert_eq!(a, b);
    assert!(a.tally.findings > 0);
    assert!(a.tally.records.len() <= 5);
    let lines = read_jsonl(&a.to_jsonl(None)).unwrap();
    assert!(
        matches!(lines.last(), Some(CampaignLine::Summary(s)) if s.findings == a.tally.findings)
    );
    for line in &lines {
        if let CampaignLine::Record(r) = line {
            assert_eq!(r.seed, Some(99));
            assert_eq!(r.syntactic_complexity, 24);
            assert!(r.is_maximal_atoms);
            assert_eq!(&r.recompute(&cfg.closure).unwrap(), r);
        }
    }
}
