//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the process exits non-zero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use coinciding::kernel::Bitset;
use coinciding::search::SearchConfig;
use coinciding::{
    chenlev_sets, conjecture2_audit, criterion_eq1, cube_parts, decompose, divisibility_check,
    enumerate_coinciding_pairs, first_mismatch, nathanson_build, product_identities,
    profile_kernel, rep_function, solve_coinciding, theorem3_verify, unit_root_multiplicity,
    verify_partition, AuditVerdict, CubeGenerators, IntegerSet, NathansonSpec, PartitionSpec,
    RepVariant,
};
use common::{growing_generators, naive_strict, random_set_sized};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(started: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = started.elapsed();
    ensure(took < limit, || {
        format!("{what} took {took:.1?}, limit {limit:?}")
    })
}

fn finite_classification() -> Outcome {
    let pairs2 = enumerate_coinciding_pairs(12, 2).map_err(|e| e.to_string())?;
    for p in &pairs2.pairs {
        let d = p.d.as_slice();
        ensure(p.c == IntegerSet::from([0, d[0] + d[1]]), || {
            format!("{} / {}", p.c, p.d)
        })?;
        ensure(p.classification.is_hilbert(), || {
            format!("{} not hilbert", p.c)
        })?;
    }
    let started = Instant::now();
    let pairs4 = enumerate_coinciding_pairs(20, 4).map_err(|e| e.to_string())?;
    within(started, Duration::from_secs(300), "size-4 enumeration")?;
    for p in &pairs4.pairs {
        let d = p.d.as_slice();
        ensure(d[3] == d[0] + d[1] + d[2], || {
            format!("D = {} is not of cube shape", p.d)
        })?;
        let g = CubeGenerators::new(d[..3].to_vec()).map_err(|e| e.to_string())?;
        let (h0, h1) = cube_parts(&g, None).map_err(|e| e.to_string())?;
        ensure(h0 == p.c && h1 == p.d, || {
            format!("{} / {} is not H(d1,d2,d3)", p.c, p.d)
        })?;
        ensure(p.classification.is_hilbert(), || {
            format!("{} not hilbert", p.c)
        })?;
    }
    Ok(format!(
        "{} pairs of size 2 and {} of size 4, all Hilbert",
        pairs2.pairs.len(),
        pairs4.pairs.len()
    ))
}

fn power_of_two_sizes() -> Outcome {
    for k in [3, 5, 6, 7] {
        let r = coinciding::search::search(&SearchConfig::diagnostic(14, k))
            .map_err(|e| e.to_string())?;
        ensure(r.pairs.is_empty(), || {
            format!("size {k} has {} pairs", r.pairs.len())
        })?;
    }
    let mut checked = 0;
    for k in [2, 4] {
        let r = enumerate_coinciding_pairs(14, k).map_err(|e| e.to_string())?;
        for p in &r.pairs {
            let cert = unit_root_multiplicity(&p.c, &p.d).map_err(|e| e.to_string())?;
            ensure(1usize << cert.multiplicity == p.c.len() + p.d.len(), || {
                format!("{} / {}: multiplicity {}", p.c, p.d, cert.multiplicity)
            })?;
            checked += 1;
        }
    }
    Ok(format!(
        "no pairs at sizes 3,5,6,7; {checked} certificates exact"
    ))
}

fn cube_halves() -> Outcome {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce_0003);
    for _ in 0..100 {
        let len = rng.gen_range(3..=12);
        let g = CubeGenerators::new(growing_generators(&mut rng, len, 1, 3))
            .map_err(|e| e.to_string())?;
        let n_max = 2 * g.total();
        ensure(
            theorem3_verify(&g, n_max).map_err(|e| e.to_string())?,
            || format!("{g} halves differ"),
        )?;
        ensure(product_identities(&g).map_err(|e| e.to_string())?, || {
            format!("{g} products differ")
        })?;
    }
    within(started, Duration::from_secs(60), "cube checks")?;
    Ok(format!(
        "100 superincreasing tuples in {:.1?}",
        started.elapsed()
    ))
}

fn oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce_0004);
    let mut coinciding = 0;
    for _ in 0..1000 {
        let c = random_set_sized(&mut rng, 60, 1..=8);
        let d = random_set_sized(&mut rng, 60, 1..=8);
        let direct = first_mismatch(&c, &d, 120).is_none();
        ensure(criterion_eq1(&c, &d) == direct, || {
            format!("disagreement on {c} / {d}")
        })?;
        coinciding += usize::from(direct);
    }
    Ok(format!("1000 random pairs agree ({coinciding} coinciding)"))
}

fn reconstruction() -> Outcome {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce_0005);
    let mut instances = vec![IntegerSet::from([1, 4, 16, 21])];
    while instances.len() < 51 {
        let len = rng.gen_range(2..=5);
        let g = CubeGenerators::new(growing_generators(&mut rng, len, 4, 6))
            .map_err(|e| e.to_string())?;
        instances.push(cube_parts(&g, None).map_err(|e| e.to_string())?.1);
    }
    for d in &instances {
        let expected = decompose(d).map_err(|e| format!("D = {d}: {e}"))?.c;
        let top = d.max_element().unwrap_or(0);
        let solved = solve_coinciding(d, usize::MAX, 2 * top).map_err(|e| e.to_string())?;
        ensure(solved == [expected.clone()], || {
            format!("D = {d}: got {solved:?}, want {expected}")
        })?;
    }
    within(started, Duration::from_secs(60), "reconstruction")?;
    Ok(format!("{} instances solved uniquely", instances.len()))
}

fn partitions() -> Outcome {
    for (l, prefix) in [(1u32, vec![3u64, 10, 17]), (2, vec![15, 46])] {
        let (c, d) = chenlev_sets(l, 200).map_err(|e| e.to_string())?;
        let spec = PartitionSpec::chen_lev(l).map_err(|e| e.to_string())?;
        let report = verify_partition(&c, &d, &spec, 200);
        ensure(report.all_hold(), || format!("l = {l}: {report:?}"))?;
        let both = c.intersection(&d);
        ensure(both.as_slice().starts_with(&prefix), || {
            format!("l = {l}: overlap {both}")
        })?;
    }
    Ok("l = 1 and l = 2 partition [0,200] with the expected overlaps".into())
}

fn eventually_periodic() -> Outcome {
    let set = |v: &[u64]| IntegerSet::from_unsorted(v.to_vec());
    let mut spec = NathansonSpec {
        f_c: set(&[0, 1]),
        f_d: set(&[2, 3]),
        t: set(&[0]),
        modulus: 2,
        n0: 2,
        h: 2,
    };
    let mismatches = |spec: &NathansonSpec| -> Result<usize, String> {
        let (c, d) = nathanson_build(spec, 100).map_err(|e| e.to_string())?;
        let pc = rep_function(&c, 2, RepVariant::Ordered, 100).map_err(|e| e.to_string())?;
        let pd = rep_function(&d, 2, RepVariant::Ordered, 100).map_err(|e| e.to_string())?;
        Ok((8..=96).filter(|&n| pc.get(n) != pd.get(n)).count())
    };
    ensure(
        divisibility_check(&spec).map_err(|e| e.to_string())?,
        || "divisibility fails".into(),
    )?;
    ensure(mismatches(&spec)? == 0, || {
        "profiles differ on [8, 96]".into()
    })?;
    spec.f_d = set(&[2]);
    ensure(
        !divisibility_check(&spec).map_err(|e| e.to_string())?,
        || "perturbed spec divides".into(),
    )?;
    let bad = mismatches(&spec)?;
    ensure(bad > 0, || "perturbed profiles agree".into())?;
    Ok(format!(
        "coincidence on [8,96]; perturbation breaks it at {bad} points"
    ))
}

fn performance() -> Outcome {
    let started = Instant::now();
    let report = enumerate_coinciding_pairs(40, 4).map_err(|e| e.to_string())?;
    let took = started.elapsed();
    within(started, Duration::from_secs(60), "size-4 search to 40")?;
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce_0008);
    for _ in 0..1000 {
        let a = random_set_sized(&mut rng, 300, 1..=64);
        let fast = profile_kernel(&Bitset::from_set(&a), 600);
        ensure(fast.counts() == naive_strict(&a, 600).as_slice(), || {
            format!("kernel differs on {a}")
        })?;
    }
    Ok(format!(
        "{} pairs in {took:.1?}; kernel matches on 1000 inputs",
        report.pairs.len()
    ))
}

fn audit_probe() -> Outcome {
    let started = Instant::now();
    let audit = conjecture2_audit(64, 8).map_err(|e| e.to_string())?;
    audit.report.verify().map_err(|e| e.to_string())?;
    for p in &audit.report.pairs {
        ensure(criterion_eq1(&p.c, &p.d), || {
            format!("{} / {} fails", p.c, p.d)
        })?;
    }
    let dir = std::path::Path::new(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("audit-size8-max64.json");
    let json = serde_json::to_string(&audit).map_err(|e| e.to_string())?;
    std::fs::write(&path, json).map_err(|e| e.to_string())?;
    let verdict = match &audit.verdict {
        AuditVerdict::AllHilbert { .. } => "all_hilbert".to_string(),
        AuditVerdict::NonHilbertFound { pairs } => format!("{} non-Hilbert pairs", pairs.len()),
        AuditVerdict::Inconclusive { unclassified } => format!("{unclassified} unclassified"),
    };
    Ok(format!(
        "{} pairs re-verified, verdict {verdict}, in {:.1?}; artifact {}",
        audit.report.pairs.len(),
        started.elapsed(),
        path.display()
    ))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("finite classification", finite_classification),
        ("power-of-two sizes", power_of_two_sizes),
        ("cube halves coincide", cube_halves),
        ("criterion oracle equivalence", oracle_equivalence),
        ("unique reconstruction", reconstruction),
        ("partitions with overlap", partitions),
        ("eventually periodic pairs", eventually_periodic),
        ("performance floor", performance),
        ("size-8 audit", audit_probe),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {}: FAIL {name}: {detail}", i + 1);
            }
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
