//! Acceptance suite: one pass/fail line per criterion.
//!
//! Runs without the libtest harness so the report is always printed; exits
//! non-zero if any criterion fails. Tolerances are fixed constants below.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::seq::SliceRandom;
use rayon::prelude::*;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use common::{brute_homogeneous, brute_largest, ceil_cbrt};
use matchwork::constructions::{
    from_permutation, stacked_waves, triple_optimality_16, Permutation,
};
use matchwork::patterns::{
    es_witness, es_witness_triples, largest_homogeneous_triples, largest_line, largest_shape,
    largest_stack, largest_wave, EsParams, TripleEsParams,
};
use matchwork::random::{
    enumerate_all, run_experiment, sample_uniform, sample_uniform_triples, sample_via_permutation,
    ExperimentConfig, Scheme, Seed, Statistic,
};
use matchwork::twins::{
    block_twins, exact_twins, perm_twins_exhaustive, verify_twins, BlockTwinParams,
};
use matchwork::{classify_triple_pair, Shape, TripleRelation};

/// Relative band around √(2n) for mean largest stack/wave.
const STACK_WAVE_TOLERANCE: f64 = 0.15;
/// Band for the mean number of edges of length ≤ m, as a fraction of m.
const SHORT_EDGE_TOLERANCE: f64 = 0.15;
const CHI_SQUARE_ALPHA: f64 = 1e-3;
/// Interval for every largest line at n = 5000: √n/8 below, 192.2 above.
const LINE_LOWER: f64 = 8.8;
const LINE_UPPER: f64 = 192.2;
/// Upper critical values of χ² at α = 10⁻³.
const CHI_SQUARE_CRIT_DF14: f64 = 36.12;
const CHI_SQUARE_CRIT_DF9: f64 = 27.88;
/// Floor N/200 on the mean block-twin size at n = 8192 (N = 512 blocks).
const BLOCK_TWIN_FLOOR: f64 = 2.56;
/// c·n^{2/3} with c = e·2^{-1/3}, n = 8192.
const BLOCK_TWIN_CEILING: usize = 876;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let mut total = 0usize;
    for n in 1..=7usize {
        let all: Vec<_> = enumerate_all(n).unwrap().collect();
        total += all.len();
        let k = ceil_cbrt(n);
        let params =
            (k >= 2).then(|| EsParams::new(k as u64 - 1, k as u64 - 1, k as u64 - 1).unwrap());
        let bad = all.par_iter().find_any(|m| {
            let best = Shape::ALL
                .iter()
                .map(|&s| largest_shape(m, s).size())
                .max()
                .unwrap();
            if best.pow(3) < n {
                return true;
            }
            match params {
                Some(p) if n as u64 >= p.threshold() => match es_witness(m, p) {
                    Ok(w) => !w.verify(m) || w.size().pow(3) < n,
                    Err(_) => true,
                },
                _ => false,
            }
        });
        check(bad.is_none(), || {
            format!("n = {n}: counterexample {}", bad.unwrap().to_word())
        })?;
    }
    check(total == 1 + 3 + 15 + 105 + 945 + 10395 + 135135, || {
        format!("enumerated {total}")
    })?;
    Ok(format!("{total} matchings, n = 1..7"))
}

fn criterion_2() -> Outcome {
    let sizes = |m: &matchwork::Matching| {
        (
            largest_line(m).size(),
            largest_stack(m).size(),
            largest_wave(m).size(),
        )
    };
    let m = stacked_waves(EsParams::new(5, 3, 4).unwrap());
    check(m.len() == 60, || format!("{} edges", m.len()))?;
    check(sizes(&m) == (5, 3, 4), || format!("maxima {:?}", sizes(&m)))?;
    for l in 1..=4u64 {
        for s in 1..=4u64 {
            for w in 1..=4u64 {
                let m = stacked_waves(EsParams::new(l, s, w).unwrap());
                let want = (l as usize, s as usize, w as usize);
                check(sizes(&m) == want && m.len() as u64 == l * s * w, || {
                    format!("({l},{s},{w}) gave {:?}", sizes(&m))
                })?;
            }
        }
    }
    Ok("(5,3,4) and all of {1..4}³ exact".into())
}

fn criterion_3() -> Outcome {
    let agree = |m: &matchwork::Matching| {
        Shape::ALL
            .iter()
            .all(|&s| largest_shape(m, s).size() == brute_largest(m, s))
    };
    let mut exhaustive = 0;
    for n in 0..=6 {
        let all: Vec<_> = enumerate_all(n).unwrap().collect();
        exhaustive += all.len();
        let bad = all.par_iter().find_any(|m| !agree(m));
        check(bad.is_none(), || {
            format!("disagree on {}", bad.unwrap().to_word())
        })?;
    }
    let bad = (0..1000u64).into_par_iter().find_any(|&i| {
        let m = sample_uniform(10, &mut Seed(3).substream(i));
        !agree(&m)
    });
    check(bad.is_none(), || {
        format!("disagree on random sample {}", bad.unwrap())
    })?;
    let bad = (0..200u64).into_par_iter().find_any(|&i| {
        let t = sample_uniform_triples(8, &mut Seed(4).substream(i));
        TripleRelation::ALL
            .iter()
            .any(|&r| largest_homogeneous_triples(&t, r).size() != brute_homogeneous(&t, r))
    });
    check(bad.is_none(), || {
        format!("triple finder disagrees on sample {}", bad.unwrap())
    })?;
    Ok(format!(
        "{exhaustive} exhaustive + 1000 random (n = 10) + 200 triple (n = 8)"
    ))
}

fn stack_wave_report() -> matchwork::random::StatsReport {
    run_experiment(&ExperimentConfig {
        n: 5000,
        samples: 100,
        scheme: Scheme::Uniform,
        statistics: vec![Statistic::Line, Statistic::Stack, Statistic::Wave],
        seed: 2024,
    })
    .unwrap()
}

fn criterion_4_5() -> (Outcome, Outcome) {
    let report = stack_wave_report();
    let target = (2.0 * 5000f64).sqrt();
    let (lo, hi) = (
        target * (1.0 - STACK_WAVE_TOLERANCE),
        target * (1.0 + STACK_WAVE_TOLERANCE),
    );
    let stack = report.get("stack").unwrap().mean;
    let wave = report.get("wave").unwrap().mean;
    let c4 = check(
        (lo..=hi).contains(&stack) && (lo..=hi).contains(&wave),
        || format!("stack mean {stack:.2}, wave mean {wave:.2} outside [{lo:.1}, {hi:.1}]"),
    )
    .map(|_| format!("mean stack {stack:.2}, mean wave {wave:.2} in [{lo:.1}, {hi:.1}]"));

    let (llo, lhi) = (LINE_LOWER, LINE_UPPER);
    let line = report.get("line").unwrap();
    let c5 = check(line.min >= llo && line.max <= lhi, || {
        format!(
            "line range [{}, {}] outside [{llo:.1}, {lhi:.1}]",
            line.min, line.max
        )
    })
    .map(|_| {
        format!(
            "lines in [{}, {}] ⊂ [{llo:.1}, {lhi:.1}], mean {:.2}",
            line.min, line.max, line.mean
        )
    });
    (c4, c5)
}

fn criterion_6() -> Outcome {
    let report = run_experiment(&ExperimentConfig {
        n: 10_000,
        samples: 50,
        scheme: Scheme::Uniform,
        statistics: vec![Statistic::ShortEdges { len: 100 }],
        seed: 6,
    })
    .unwrap();
    let mean = report.statistics[0].mean;
    let (lo, hi) = (
        100.0 * (1.0 - SHORT_EDGE_TOLERANCE),
        100.0 * (1.0 + SHORT_EDGE_TOLERANCE),
    );
    check((lo..=hi).contains(&mean), || {
        format!("mean {mean:.2} outside [{lo:.1}, {hi:.1}]")
    })?;
    Ok(format!("mean {mean:.2} in [{lo:.1}, {hi:.1}]"))
}

fn chi_square(counts: &BTreeMap<String, usize>, classes: usize, samples: usize) -> f64 {
    let expected = samples as f64 / classes as f64;
    let seen: f64 = counts
        .values()
        .map(|&c| (c as f64 - expected).powi(2) / expected)
        .sum();
    // unseen classes contribute their full expectation
    seen + (classes - counts.len()) as f64 * expected
}

fn criterion_7() -> Outcome {
    for (df, crit) in [(14.0, CHI_SQUARE_CRIT_DF14), (9.0, CHI_SQUARE_CRIT_DF9)] {
        let exact = ChiSquared::new(df)
            .unwrap()
            .inverse_cdf(1.0 - CHI_SQUARE_ALPHA);
        check((exact - crit).abs() < 0.01, || {
            format!("critical value df {df}: {exact}")
        })?;
    }
    let classes: Vec<String> = enumerate_all(3).unwrap().map(|m| m.to_word()).collect();
    let mut stats = Vec::new();
    for (name, scheme) in [
        ("uniform", Scheme::Uniform),
        ("permutation", Scheme::Permutation),
    ] {
        let mut rng = Seed(77).rng();
        let mut counts = BTreeMap::new();
        for _ in 0..15_000 {
            let m = match scheme {
                Scheme::Uniform => sample_uniform(3, &mut rng),
                Scheme::Permutation => sample_via_permutation(3, &mut rng),
            };
            *counts.entry(m.to_word()).or_insert(0) += 1;
        }
        check(counts.keys().all(|k| classes.contains(k)), || {
            "unknown class".into()
        })?;
        let x2 = chi_square(&counts, classes.len(), 15_000);
        check(x2 < CHI_SQUARE_CRIT_DF14, || {
            format!("{name}: χ² = {x2:.2}")
        })?;
        stats.push(format!("{name} χ²={x2:.2}"));
    }
    let mut rng = Seed(78).rng();
    let mut counts = BTreeMap::new();
    for _ in 0..20_000 {
        *counts
            .entry(sample_uniform_triples(2, &mut rng).to_word())
            .or_insert(0) += 1;
    }
    check(counts.len() <= 10, || {
        format!("{} triple classes", counts.len())
    })?;
    let x2 = chi_square(&counts, 10, 20_000);
    check(x2 < CHI_SQUARE_CRIT_DF9, || {
        format!("triples: χ² = {x2:.2}")
    })?;
    stats.push(format!("triples χ²={x2:.2}"));
    Ok(format!(
        "{} (critical {CHI_SQUARE_CRIT_DF14} / {CHI_SQUARE_CRIT_DF9})",
        stats.join(", ")
    ))
}

fn criterion_8() -> Outcome {
    let n = 8192;
    let p = BlockTwinParams::default_for(n, 2).unwrap();
    check(p.a == 32 && p.blocks == 512, || {
        format!("a = {}, N = {}", p.a, p.blocks)
    })?;
    let sizes: Vec<Result<usize, String>> = (0..100u64)
        .into_par_iter()
        .map(|i| {
            let host = sample_uniform(n, &mut Seed(8).substream(i));
            let t = block_twins(&host, &p).map_err(|e| e.to_string())?;
            if verify_twins(&host, &t) != Ok(true) {
                return Err(format!("sample {i} does not verify"));
            }
            Ok(t.size())
        })
        .collect();
    let sizes: Vec<usize> = sizes.into_iter().collect::<Result<_, _>>()?;
    let mean = sizes.iter().sum::<usize>() as f64 / sizes.len() as f64;
    let max = *sizes.iter().max().unwrap();
    check(mean >= BLOCK_TWIN_FLOOR, || format!("mean {mean}"))?;
    check(max <= BLOCK_TWIN_CEILING, || format!("max {max}"))?;
    let scale = (n as f64).powf(2.0 / 3.0);
    Ok(format!(
        "all verify; mean {mean:.2} ≥ {BLOCK_TWIN_FLOOR}, max {max} ≤ {BLOCK_TWIN_CEILING}; mean/n^(2/3) = {:.3}",
        mean / scale
    ))
}

fn criterion_9() -> Outcome {
    let mut rng = Seed(9).rng();
    let perms: Vec<Permutation> = (0..200)
        .map(|_| {
            let mut v: Vec<u32> = (1..=8).collect();
            v.shuffle(&mut rng);
            Permutation::new(v).unwrap()
        })
        .collect();
    let bad = perms.par_iter().find_any(|pi| {
        exact_twins(&from_permutation(pi), 2).unwrap().size()
            != perm_twins_exhaustive(pi, 2).unwrap().length()
    });
    check(bad.is_none(), || {
        format!("differ on {:?}", bad.unwrap().values())
    })?;
    Ok("200 permutations of [8] agree".into())
}

fn criterion_10() -> Outcome {
    let m = triple_optimality_16();
    let mut census = BTreeMap::new();
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            *census
                .entry(
                    classify_triple_pair(m.triple(i), m.triple(j))
                        .unwrap()
                        .word(),
                )
                .or_insert(0) += 1;
        }
    }
    let want: BTreeMap<&str, i32> = [
        ("ABBAAB", 8),
        ("ABBABA", 16),
        ("ABABBA", 32),
        ("ABABAB", 64),
    ]
    .into_iter()
    .collect();
    check(census == want, || format!("census {census:?}"))?;
    let maxima: Vec<usize> = TripleRelation::ALL
        .iter()
        .map(|&r| largest_homogeneous_triples(&m, r).size())
        .collect();
    check(maxima.iter().all(|&k| k <= 2), || {
        format!("maxima {maxima:?}")
    })?;
    // no three triples pairwise in one relation
    for i in 0..16 {
        for j in i + 1..16 {
            for k in j + 1..16 {
                let r = |a, b| classify_triple_pair(m.triple(a), m.triple(b)).unwrap();
                check(!(r(i, j) == r(i, k) && r(i, j) == r(j, k)), || {
                    format!("mutual triple {i},{j},{k}")
                })?;
            }
        }
    }
    let p = TripleEsParams::uniform(2).unwrap();
    let bad = (0..100u64).into_par_iter().find_any(|&i| {
        let t = sample_uniform_triples(513, &mut Seed(10).substream(i));
        match es_witness_triples(&t, p) {
            Ok(w) => !w.verify(&t) || w.size() < 3,
            Err(_) => true,
        }
    });
    check(bad.is_none(), || {
        format!("witness failed on sample {}", bad.unwrap())
    })?;
    Ok("census (8,16,32,64), no mutual triple, maxima ≤ 2; 100 witnesses at n = 513".into())
}

fn run(id: &str, title: &str, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        Err(p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panicked".into()))
    });
    report(id, title, outcome, start)
}

fn report(id: &str, title: &str, outcome: Outcome, start: Instant) -> bool {
    let secs = start.elapsed().as_secs_f64();
    match outcome {
        Ok(detail) => {
            println!("criterion {id:>2} PASS  {title}: {detail} [{secs:.1}s]");
            true
        }
        Err(detail) => {
            println!("criterion {id:>2} FAIL  {title}: {detail} [{secs:.1}s]");
            false
        }
    }
}

fn main() {
    let mut ok = true;
    ok &= run("1", "exhaustive Erdős–Szekeres", criterion_1);
    ok &= run("2", "stacked-waves optimality", criterion_2);
    ok &= run("3", "oracle equivalence", criterion_3);
    let start = Instant::now();
    let (c4, c5) = catch_unwind(criterion_4_5)
        .unwrap_or_else(|_| (Err("panicked".into()), Err("panicked".into())));
    ok &= report("4", "largest stack/wave ≈ √(2n)", c4, start);
    ok &= report("5", "largest line bounds", c5, start);
    ok &= run("6", "short edges", criterion_6);
    ok &= run("7", "sampler uniformity", criterion_7);
    ok &= run("8", "block twins soundness and floor", criterion_8);
    ok &= run("9", "permutational twin equivalence", criterion_9);
    ok &= run("10", "3-uniform fixture and witnesses", criterion_10);
    if !ok {
        std::process::exit(1);
    }
}
