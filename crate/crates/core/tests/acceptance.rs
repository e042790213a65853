//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fails.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use atomic::atoms::Atomaton;
use atomic::automata::{determinize, quotient_complexity};
use atomic::bounds::{max_atom_complexity, max_over_r};
use atomic::intervals::{count_from_types, FullDfa};
use atomic::search::{
    check_full_instance, find_converse_counterexamples, map_at, sample_full_dfas, verify_prop2,
    verify_theorem3, CampaignConfig, CampaignReport, Mode, Tally,
};
use atomic::semigroup::{syntactic_complexity, ClosureConfig};
use atomic::witness::{example1, witness_max_semigroup};
use atomic::StateSet;

mod common;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion1() -> Outcome {
    let start = Instant::now();
    let d = example1();
    let sc = syntactic_complexity(&d, &ClosureConfig::default()).map_err(|e| e.to_string())?;
    let atoms = Atomaton::new(&d).atom_count();
    let bad = common::table_mismatches();
    let elapsed = start.elapsed();
    ensure(d.state_count() == 3 && sc == 27 && atoms == 8, || {
        format!("n = {}, complexity {sc}, {atoms} atoms", d.state_count())
    })?;
    ensure(bad.is_empty(), || format!("table cells differ: {bad:?}"))?;
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok("n = 3, complexity 27, 8 atoms, all four transition tables match".into())
}

fn criterion2() -> Outcome {
    let expected = [(4, 43), (5, 141), (6, 501), (7, 1548)];
    for (n, max) in expected {
        let (_, got) = max_over_r(n).map_err(|e| e.to_string())?;
        ensure(got == max, || format!("n = {n}: max {got}, expected {max}"))?;
    }
    for n in 1..=8 {
        for r in [0, n] {
            let got = max_atom_complexity(n, r).map_err(|e| e.to_string())?;
            ensure(got == (1 << n) - 1, || format!("f({n},{r}) = {got}"))?;
        }
    }
    Ok("maxima 43/141/501/1548, 2^n-1 at r in {0,n} for n <= 8".into())
}

fn criterion3(rep: &CampaignReport) -> Outcome {
    let t = &rep.tally;
    let expected: BTreeMap<usize, BTreeSet<u64>> = BTreeMap::from([
        (0, BTreeSet::from([7])),
        (1, BTreeSet::from([10])),
        (2, BTreeSet::from([10])),
        (3, BTreeSet::from([7])),
    ]);
    ensure(t.examined == 157_464, || format!("examined {}", t.examined))?;
    ensure(t.full > 0, || "no full instances".into())?;
    for name in ["atoms.all_present", "atoms.maximal"] {
        let c = t.checks.get(name).copied().unwrap_or_default();
        ensure(c.checked == t.full && c.failed == 0, || {
            format!("{name}: {c:?}")
        })?;
    }
    ensure(t.complexities_by_r == expected, || {
        format!("complexities by r: {:?}", t.complexities_by_r)
    })?;
    Ok(format!(
        "{} DFAs, {} minimal, {} full, all with atoms (7,10,10,7)",
        t.examined, t.minimal, t.full
    ))
}

fn criterion4() -> Outcome {
    let d = witness_max_semigroup(4, &ClosureConfig::default()).map_err(|e| e.to_string())?;
    let sc = syntactic_complexity(&d, &ClosureConfig::default()).map_err(|e| e.to_string())?;
    let reports = Atomaton::new(&d).reports().map_err(|e| e.to_string())?;
    ensure(sc == 256, || format!("complexity {sc}"))?;
    ensure(reports.len() == 16, || format!("{} atoms", reports.len()))?;
    for r in &reports {
        let bound = max_atom_complexity(4, r.r).map_err(|e| e.to_string())?;
        ensure(r.complexity == bound, || {
            format!("atom {}: {} vs bound {bound}", r.label, r.complexity)
        })?;
    }
    let values: BTreeSet<u64> = reports.iter().map(|r| r.complexity).collect();
    ensure(values.contains(&15) && values.contains(&43), || {
        format!("{values:?}")
    })?;
    Ok(format!("complexity 256, 16 atoms, values {values:?}"))
}

fn criterion5(config: &CampaignConfig) -> Outcome {
    let rep =
        find_converse_counterexamples(3, 3, Mode::Exhaustive, config).map_err(|e| e.to_string())?;
    let hist = &rep.tally.syntactic_complexities;
    ensure(hist.contains_key(&24), || {
        format!("complexities of findings: {hist:?}")
    })?;
    Ok(format!(
        "{} non-full minimal DFAs with maximal atoms; complexities {hist:?}",
        rep.tally.findings
    ))
}

fn criterion6(config: &CampaignConfig) -> Outcome {
    for n in 2..=4 {
        let d = witness_max_semigroup(n, &config.closure).map_err(|e| e.to_string())?;
        let qc = quotient_complexity(&determinize(&d.reverse()).dfa);
        ensure(qc == 1 << n, || {
            format!("witness n = {n}: reverse complexity {qc}")
        })?;
    }
    let mut total = 0;
    for n in 2..=5 {
        for k in 2..=3 {
            let mode = Mode::Sample {
                samples: 1250,
                seed: 1000 + 10 * n as u64 + k as u64,
            };
            let rep = verify_prop2(n, k, mode, config).map_err(|e| e.to_string())?;
            ensure(rep.violations() == 0, || {
                format!("n = {n}, k = {k}: {:?}", rep.tally.checks)
            })?;
            total += rep.tally.examined;
        }
    }
    ensure(total >= 10_000, || format!("only {total} samples"))?;
    Ok(format!(
        "witnesses n = 2..4 reverse to 2^n; {total} random DFAs with atoms = reverse complexity"
    ))
}

fn failed(t: &Tally, name: &str) -> (u64, u64) {
    let c = t.checks.get(name).copied().unwrap_or_default();
    (c.checked, c.failed)
}

fn criterion7(n3: &CampaignReport, n4: &Tally, n4_instances: usize) -> Outcome {
    for (label, t) in [("n = 3", &n3.tally), ("n = 4", n4)] {
        for name in ["eta.closed_form", "eta.brute_force"] {
            let (checked, bad) = failed(t, name);
            ensure(checked > 0 && bad == 0, || {
                format!("{label} {name}: {bad}/{checked} failed")
            })?;
        }
    }
    ensure(n4_instances >= 100, || {
        format!("only {n4_instances} full DFAs at n = 4")
    })?;
    Ok(format!(
        "{} (S, a) pairs at n = 3 and {} at n = 4 over {n4_instances} DFAs, no mismatches",
        failed(&n3.tally, "eta.brute_force").0,
        failed(n4, "eta.brute_force").0
    ))
}

fn criterion8(n3: &CampaignReport, n4: &Tally, sample: &[atomic::Dfa]) -> Outcome {
    for (label, t) in [("n = 3", &n3.tally), ("n = 4", n4)] {
        let (checked, bad) = failed(t, "intervals.count");
        ensure(checked > 0 && bad == 0, || {
            format!("{label}: {bad}/{checked} counts differ")
        })?;
    }
    // Direct comparison on the first sampled DFA, independent of the campaign code.
    if let Some(d) = sample.first() {
        let full = FullDfa::new(d, &ClosureConfig::default()).map_err(|e| e.to_string())?;
        for m in 0..16 {
            let s = StateSet::from_mask(4, m);
            let count = full.interval_reach_count(&s).map_err(|e| e.to_string())?;
            let atom = atomic::atoms::atom_quotient_complexity(d, &s).map_err(|e| e.to_string())?;
            ensure(count == atom, || format!("S = {s}: {count} vs {atom}"))?;
        }
    }
    for n in 0..=8 {
        for s in 0..=n {
            let from_types = count_from_types(n, s).map_err(|e| e.to_string())?;
            let bound = if n == 0 {
                1
            } else {
                max_atom_complexity(n, n - s).map_err(|e| e.to_string())?
            };
            ensure(from_types == bound, || {
                format!("n = {n}, s = {s}: {from_types} vs {bound}")
            })?;
        }
    }
    Ok(format!(
        "{} atoms at n = 3 and {} at n = 4 match their interval counts; type counts match bounds for n <= 8",
        failed(&n3.tally, "intervals.count").0,
        failed(n4, "intervals.count").0
    ))
}

fn criterion9() -> Outcome {
    let mut checked = 0;
    for n in 2..=5 {
        let total = (n as u64).pow(n as u32);
        for i in 0..total {
            let t = map_at(n, i);
            if t.rank() != n - 1 {
                continue;
            }
            let (alpha, pi) = t
                .decompose_singular_perm()
                .map_err(|e| format!("{t}: {e}"))?;
            let moved = (0..n).filter(|&q| alpha.apply(q) != q).count();
            let ok = alpha.compose(&pi).map_err(|e| e.to_string())? == t
                && pi.is_permutation()
                && alpha.rank() == n - 1
                && moved == 1;
            ensure(ok, || format!("{t} = {alpha} . {pi}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} rank n-1 transformations, n = 2..5"))
}

fn main() -> ExitCode {
    let config = CampaignConfig {
        record_limit: Some(64),
        ..CampaignConfig::default()
    };
    let mut failures = 0;
    let mut report = |id: usize, start: Instant, outcome: Outcome| {
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {id}: {detail} [{secs:.2}s]"),
            Err(reason) => {
                failures += 1;
                println!("FAIL criterion {id}: {reason} [{secs:.2}s]");
            }
        }
    };

    let t = Instant::now();
    report(1, t, criterion1());
    let t = Instant::now();
    report(2, t, criterion2());

    let t = Instant::now();
    let n3 = verify_theorem3(3, 3, Mode::Exhaustive, &config);
    let n3_time = t.elapsed();
    let n3 = match n3 {
        Ok(rep) => rep,
        Err(e) => {
            for id in [3, 7, 8] {
                report(id, t, Err(format!("campaign failed: {e}")));
            }
            println!("{failures} criteria failed");
            return ExitCode::FAILURE;
        }
    };
    report(3, t, criterion3(&n3));

    let t = Instant::now();
    report(4, t, criterion4());
    let t = Instant::now();
    report(5, t, criterion5(&config));
    let t = Instant::now();
    report(6, t, criterion6(&config));

    let t = Instant::now();
    let sample = sample_full_dfas(4, 3, 100, 2024, 10_000_000, &config.closure).unwrap_or_default();
    let mut n4 = Tally::default();
    let mut n4_error = None;
    for d in &sample {
        if let Err(e) = check_full_instance(d, true, &mut n4) {
            n4_error = Some(e.to_string());
        }
    }
    let shared = t.elapsed() + n3_time;
    let t7 = Instant::now() - shared;
    report(
        7,
        t7,
        match &n4_error {
            Some(e) => Err(e.clone()),
            None => criterion7(&n3, &n4, sample.len()),
        },
    );
    let t = Instant::now();
    report(
        8,
        t,
        match &n4_error {
            Some(e) => Err(e.clone()),
            None => criterion8(&n3, &n4, &sample),
        },
    );
    let t = Instant::now();
    report(9, t, criterion9());

    if failures == 0 {
        println!("all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}
