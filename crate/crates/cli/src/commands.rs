use std::collections::HashSet;
use std::fmt::Write as _;
use std::time::Instant;

use anyhow::{bail, Result};
use coinciding::search::{assemble_report, audit_verdict, run_shard, SearchConfig, ShardResult};
use coinciding::{
    chenlev_sets, classify_pair, conjecture34_scan, criterion_eq1, cube_parts, divisibility_check,
    from_set, is_half_nondegenerate, nathanson_build, product_identities, rep_function,
    solve_coinciding, theorem3_verify, truncate_rule, unit_root_multiplicity, verify_partition,
    AuditVerdict, Classification, CubeGenerators, NathansonSpec, PartitionSpec,
};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::args::{
    CubeArgs, NathansonArgs, PairArgs, PartitionScanArgs, PartitionVerifyArgs, RepfnArgs,
    SearchArgs, SolveArgs,
};
use crate::checkpoint::Checkpoint;
use crate::report::Report;

pub fn repfn(args: &RepfnArgs) -> Result<Report> {
    let top = args.set.max_element().unwrap_or(0);
    let n_max = args.n_max.unwrap_or(top * args.h as u64);
    let profile = rep_function(&args.set, args.h, args.variant, n_max)?;
    let mut text = String::new();
    let mut csv = csv::Writer::from_writer(Vec::new());
    csv.write_record(["n", "count"])?;
    for (n, &count) in profile.counts().iter().enumerate() {
        writeln!(text, "{n} {count}")?;
        csv.write_record([n.to_string(), count.to_string()])?;
    }
    let result = json!({
        "set": args.set,
        "h": args.h,
        "variant": args.variant,
        "n_max": n_max,
        "counts": profile.counts(),
    });
    let mut report = Report::new(true, result, text);
    report.csv = Some(String::from_utf8(csv.into_inner()?)?);
    Ok(report)
}

pub fn cube(args: &CubeArgs) -> Result<Report> {
    let g = match (&args.generators, args.rule) {
        (Some(list), _) => CubeGenerators::new(list.as_slice().to_vec())?,
        (None, Some(rule)) => {
            truncate_rule(rule.sequence(), args.bound.expect("clap requires bound"))?
        }
        (None, None) => unreachable!("clap requires a generator source"),
    };
    let (h0, h1) = cube_parts(&g, args.bound)?;
    let nondegenerate = is_half_nondegenerate(&g)?;
    let mut result = json!({
        "generators": g,
        "bound": args.bound,
        "half_nondegenerate": nondegenerate,
        "sizes": [h0.len(), h1.len()],
    });
    let mut text = String::new();
    if args.parts {
        result["h0"] = json!(h0);
        result["h1"] = json!(h1);
        writeln!(text, "H0={h0}")?;
        writeln!(text, "H1={h1}")?;
    } else {
        writeln!(text, "generators={g} |H0|={} |H1|={}", h0.len(), h1.len())?;
        writeln!(text, "half_nondegenerate={nondegenerate}")?;
    }
    let mut ok = true;
    if args.verify {
        if !nondegenerate {
            bail!("cube {g} is not half non-degenerate; the halves need not coincide");
        }
        let n_max = args.bound.unwrap_or(2 * g.total());
        let halves = theorem3_verify(&g, n_max)?;
        let products = product_identities(&g)?;
        result["halves_coincide"] = json!(halves);
        result["product_identities"] = json!(products);
        result["n_max"] = json!(n_max);
        writeln!(text, "halves_coincide={halves} (n <= {n_max})")?;
        writeln!(text, "product_identities={products}")?;
        ok = halves && products;
    }
    Ok(Report::new(ok, result, text))
}

pub fn verify_eq1(args: &PairArgs) -> Result<Report> {
    let holds = criterion_eq1(&args.c, &args.d);
    Ok(Report::new(
        holds,
        json!({ "C": args.c, "D": args.d, "holds": holds }),
        holds.to_string(),
    ))
}

pub fn cert_mult(args: &PairArgs) -> Result<Report> {
    let cert = unit_root_multiplicity(&args.c, &args.d)?;
    let difference = &from_set(&args.c) - &from_set(&args.d);
    let sound = cert.certifies(&difference);
    let coeffs: Vec<String> = cert
        .quotient
        .coeffs()
        .iter()
        .map(ToString::to_string)
        .collect();
    let result = json!({
        "C": args.c,
        "D": args.d,
        "multiplicity": cert.multiplicity,
        "quotient": cert.quotient.to_string(),
        "quotient_coeffs": coeffs,
        "certified": sound,
    });
    let text = format!(
        "multiplicity={}\nquotient={}\ncertified={sound}",
        cert.multiplicity, cert.quotient
    );
    Ok(Report::new(sound, result, text))
}

pub fn nathanson(args: &NathansonArgs) -> Result<Report> {
    let spec = NathansonSpec {
        f_c: args.fc.clone(),
        f_d: args.fd.clone(),
        t: args.t.clone(),
        modulus: args.modulus,
        n0: args.n0,
        h: args.h,
    };
    let divisible = divisibility_check(&spec)?;
    let mut result = json!({ "spec": spec, "divisible": divisible });
    let mut text = format!("divisible={divisible}\n");
    if let Some(bound) = args.bound {
        let (c, d) = nathanson_build(&spec, bound)?;
        writeln!(text, "C={c}\nD={d}")?;
        result["bound"] = json!(bound);
        result["C"] = json!(c);
        result["D"] = json!(d);
    }
    Ok(Report::new(divisible, result, text))
}

/// `{"generators": [...]}` for cube pairs, a bare tag otherwise.
fn classification_json(c: &Classification) -> Value {
    match c {
        Classification::HilbertPair { generators } => json!({ "generators": generators }),
        Classification::NonHilbert => json!("non_hilbert"),
        Classification::NotAttempted => json!("not_attempted"),
    }
}

fn classification_text(c: &Classification) -> String {
    match c {
        Classification::HilbertPair { generators } => format!("hilbert {generators}"),
        Classification::NonHilbert => "non_hilbert".into(),
        Classification::NotAttempted => "not_attempted".into(),
    }
}

pub fn solve(args: &SolveArgs) -> Result<Report> {
    let top = args.d.max_element().unwrap_or(0);
    let n_max = args.n_max.unwrap_or(2 * top);
    let solutions = solve_coinciding(&args.d, args.max_solutions, n_max)?;
    let mut classes = Vec::with_capacity(solutions.len());
    let mut text = String::new();
    for c in &solutions {
        // every solution holds 0 and D does not, so the pair is admissible
        let class = classify_pair(c, &args.d)?;
        writeln!(text, "C={c} {}", classification_text(&class))?;
        classes.push(class);
    }
    if solutions.is_empty() {
        text.push_str("no solutions\n");
    }
    let result = json!({
        "D": args.d,
        "solutions": solutions,
        "classification": classes.iter().map(classification_json).collect::<Vec<_>>(),
    });
    Ok(Report::new(true, result, text))
}

pub fn classify(args: &PairArgs) -> Result<Report> {
    let class = classify_pair(&args.c, &args.d)?;
    let result = json!({ "C": args.c, "D": args.d, "classification": classification_json(&class) });
    Ok(Report::new(true, result, classification_text(&class)))
}

pub fn partition_verify(args: &PartitionVerifyArgs) -> Result<Report> {
    let (c, d) = chenlev_sets(args.l, args.bound)?;
    let spec = PartitionSpec::chen_lev(args.l)?;
    let report = verify_partition(&c, &d, &spec, args.bound);
    let text = format!(
        "union={} intersection={} rep_equal={} window=[{},{}]",
        report.union, report.intersection, report.rep_equal, report.window[0], report.window[1]
    );
    Ok(Report::new(
        report.all_hold(),
        serde_json::to_value(&report)?,
        text,
    ))
}

pub fn partition_scan(args: &PartitionScanArgs) -> Result<Report> {
    let scan = conjecture34_scan(args.bound, args.max_m)?;
    let mut text = format!(
        "{} candidates (bound {}, m <= {}; {} nodes)\n",
        scan.candidates.len(),
        scan.bound,
        scan.max_m,
        scan.stats.nodes
    );
    for cand in &scan.candidates {
        let tag = match cand.chen_lev {
            Some(l) => format!("chen-lev l={l}"),
            None => "other".into(),
        };
        writeln!(
            text,
            "r={} m={} {tag} C={} D={}",
            cand.r, cand.m, cand.c, cand.d
        )?;
    }
    Ok(Report::new(true, serde_json::to_value(&scan)?, text))
}

pub fn search(args: &SearchArgs) -> Result<Report> {
    let config = SearchConfig {
        max_element: args.max_element,
        size: args.size,
        diagnostic: args.diagnostic,
    };
    config.validate()?;
    let started = Instant::now();
    let (checkpoint, mut shards) = match (&args.checkpoint, &args.resume) {
        (Some(path), _) => (Some(Checkpoint::create(path, &config)?), Vec::new()),
        (None, Some(path)) => {
            let (cp, done) = Checkpoint::resume(path, &config)?;
            (Some(cp), done)
        }
        (None, None) => (None, Vec::new()),
    };
    let done: HashSet<Vec<u64>> = shards.iter().map(|s| s.key.clone()).collect();
    let pending: Vec<Vec<u64>> = config
        .shards()
        .into_iter()
        .filter(|k| !done.contains(k))
        .collect();
    let fresh = pending
        .par_iter()
        .map(|key| {
            let shard = run_shard(&config, key);
            if let Some(cp) = &checkpoint {
                cp.record(&shard)?;
            }
            Ok(shard)
        })
        .collect::<Result<Vec<ShardResult>>>()?;
    shards.extend(fresh);
    let report = assemble_report(&config, &shards, started)?;
    let verdict = audit_verdict(&report);

    let mut text = format!(
        "{} pairs (size {}, max element {}; {} nodes, {} ms)\n",
        report.pairs.len(),
        report.size,
        report.max_element,
        report.stats.nodes,
        report.stats.wall_time_ms
    );
    match &verdict {
        AuditVerdict::AllHilbert { .. } => text.push_str("verdict: all_hilbert\n"),
        AuditVerdict::NonHilbertFound { pairs } => {
            writeln!(text, "verdict: non_hilbert_found ({} pairs)", pairs.len())?
        }
        AuditVerdict::Inconclusive { unclassified } => {
            writeln!(text, "verdict: inconclusive ({unclassified} unclassified)")?
        }
    }
    for p in &report.pairs {
        writeln!(
            text,
            "C={} D={} {}",
            p.c,
            p.d,
            classification_text(&p.classification)
        )?;
    }
    let result = json!({ "verdict": verdict, "report": report, "resumed_shards": done.len() });
    Ok(Report::new(true, result, text))
}
