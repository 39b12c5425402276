mod common;

use rand::seq::SliceRandom;
use rand::SeedableRng;

use common::{brute_perm_twins, brute_twins};
use matchwork::constructions::{from_permutation, make_wave, Permutation};
use matchwork::random::{enumerate_all, sample_uniform, Seed};
use matchwork::twins::{
    auxiliary_graph, block_twins, default_split_m, exact_twins, perm_twins_exhaustive, split_twins,
    verify_perm_twins, verify_twins, BlockTwinParams, ExhaustivePermFinder, HybridPermFinder,
    MatchingStrategy, PermTwinFinder,
};
use matchwork::{parse_word, Matching};

#[test]
fn exact_matches_independent_brute_force() {
    for seed in 0..50 {
        let host = sample_uniform(6, &mut Seed(seed).rng());
        let t = exact_twins(&host, 2).unwrap();
        assert_eq!(verify_twins(&host, &t), Ok(true));
        assert_eq!(t.size(), brute_twins(&host, 2), "{}", host.to_word());
    }
    for seed in 0..10 {
        let host = sample_uniform(5, &mut Seed(seed).rng());
        assert_eq!(exact_twins(&host, 3).unwrap().size(), brute_twins(&host, 3));
    }
}

#[test]
fn heuristics_never_beat_the_oracle() {
    for n in 1..=6 {
        for host in enumerate_all(n).unwrap() {
            let best = exact_twins(&host, 2).unwrap().size();
            let p = BlockTwinParams::default_for(n, 2).unwrap();
            for strategy in [MatchingStrategy::Greedy, MatchingStrategy::Exact] {
                let b = block_twins(&host, &p.with_strategy(strategy)).unwrap();
                assert!(b.size() <= best);
            }
            let s =
                split_twins(&host, 2, default_split_m(n), &HybridPermFinder::default()).unwrap();
            assert!(s.size() <= best);
        }
    }
}

#[test]
fn permutation_twins_match_brute_force() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    for len in 0..=8u32 {
        for _ in 0..10 {
            let mut v: Vec<u32> = (1..=len).collect();
            v.shuffle(&mut rng);
            let pi = Permutation::new(v.clone()).unwrap();
            let t = perm_twins_exhaustive(&pi, 2).unwrap();
            assert!(verify_perm_twins(&pi, &t));
            assert_eq!(t.length(), brute_perm_twins(&v, 2));
        }
    }
}

#[test]
fn auxiliary_graph_examples() {
    let host = make_wave(4);
    let p = BlockTwinParams {
        r: 2,
        a: 4,
        blocks: 2,
        strategy: MatchingStrategy::Greedy,
    };
    let g = auxiliary_graph(&host, &p).unwrap();
    assert_eq!(g.multiplicity(0, 1), 4);
    for r in 2..=4 {
        let p = BlockTwinParams { r, ..p };
        assert_eq!(auxiliary_graph(&host, &p).unwrap().edges().count(), 1);
        assert_eq!(block_twins(&host, &p).unwrap().size(), 1);
    }
    let p5 = BlockTwinParams { r: 5, ..p };
    assert_eq!(block_twins(&host, &p5).unwrap().size(), 0);

    let one = BlockTwinParams {
        r: 2,
        a: 8,
        blocks: 1,
        strategy: MatchingStrategy::Greedy,
    };
    assert_eq!(auxiliary_graph(&host, &one).unwrap().edges().count(), 0);

    // between-block, within-block and leftover-touching edges account for all
    for seed in 0..20 {
        let host = sample_uniform(500, &mut Seed(seed).rng());
        let p = BlockTwinParams::default_for(500, 2).unwrap();
        let covered = (p.a * p.blocks) as u32;
        assert!(covered <= 1000);
        let g = auxiliary_graph(&host, &p).unwrap();
        let across: usize = g.between.values().map(Vec::len).sum();
        let leftover = host.edges().iter().filter(|e| e.right > covered).count();
        let within = host
            .edges()
            .iter()
            .filter(|e| {
                e.right <= covered && (e.left as usize - 1) / p.a == (e.right as usize - 1) / p.a
            })
            .count();
        assert_eq!(across + within + leftover, 500);
    }
}

#[test]
fn block_twins_always_verify() {
    for seed in 0..1000 {
        let n = 20 + (seed as usize % 200);
        let host = sample_uniform(n, &mut Seed(seed).substream(1));
        for r in 2..=3 {
            let p = BlockTwinParams::default_for(n, r).unwrap();
            let t = block_twins(&host, &p).unwrap();
            assert_eq!(verify_twins(&host, &t), Ok(true));
        }
    }
}

#[test]
fn split_on_permutational_host_delegates() {
    let pi = Permutation::new(vec![6, 1, 4, 7, 3, 9, 8, 2, 5]).unwrap();
    let host = from_permutation(&pi);
    let finder = HybridPermFinder {
        exhaustive_up_to: 10,
    };
    let t = split_twins(&host, 2, host.len(), &finder).unwrap();
    let direct = finder.find(&pi, 2).unwrap();
    assert_eq!(t.size(), direct.length());
    let mapped: Vec<Vec<usize>> = direct
        .subs
        .iter()
        .map(|s| {
            let mut v: Vec<usize> = s.iter().map(|&p| pi.values()[p] as usize - 1).collect();
            v.sort_unstable();
            v
        })
        .collect();
    assert_eq!(t.subs, mapped);
}

#[test]
fn split_concatenates_halves() {
    // two permutational halves, no edge crossing the midpoint
    let left = from_permutation(&Permutation::new(vec![2, 1, 4, 3, 6, 5, 8, 7, 9, 10]).unwrap());
    let host = Matching::from_pairs(
        &left
            .edges()
            .iter()
            .flat_map(|e| [(e.left, e.right), (e.left + 20, e.right + 20)])
            .collect::<Vec<_>>(),
    )
    .unwrap();
    assert!(host.is_perfect());
    let t = split_twins(&host, 2, 2, &HybridPermFinder::default()).unwrap();
    assert_eq!(verify_twins(&host, &t), Ok(true));
    assert!(t.size() >= 4);
    assert!(split_twins(&host, 2, 3, &HybridPermFinder::default()).is_err());
}

#[test]
fn split_and_block_on_random_hosts() {
    let mut split_total = 0;
    let mut block_total = 0;
    for seed in 0..40 {
        let host = sample_uniform(64, &mut Seed(seed).rng());
        let t = split_twins(&host, 2, default_split_m(64), &HybridPermFinder::default()).unwrap();
        assert_eq!(verify_twins(&host, &t), Ok(true));
        let b = block_twins(&host, &BlockTwinParams::default_for(64, 2).unwrap()).unwrap();
        split_total += t.size();
        block_total += b.size();
    }
    eprintln!("n = 64, r = 2, 40 hosts: split total {split_total}, block total {block_total}");
    assert!(split_total > 0 && block_total > 0);
}

#[test]
fn no_method_exceeds_the_upper_bound() {
    let n = 8192;
    let ceiling =
        (std::f64::consts::E * 2f64.powf(-1.0 / 3.0) * (n as f64).powf(2.0 / 3.0)) as usize;
    assert_eq!(ceiling, 876);
    for seed in 0..100 {
        let host = sample_uniform(n, &mut Seed(seed).substream(2));
        let p = BlockTwinParams::default_for(n, 2).unwrap();
        let b = block_twins(&host, &p.with_strategy(MatchingStrategy::Exact)).unwrap();
        let s = split_twins(&host, 2, default_split_m(n), &HybridPermFinder::default()).unwrap();
        assert!(b.size() <= ceiling && s.size() <= ceiling);
    }
}

#[test]
fn three_twins_host() {
    let host = parse_word("AABCDDEBCFGHIHEGFI").unwrap();
    let t = matchwork::twins::TwinSet {
        r: 3,
        subs: vec![vec![1, 3], vec![4, 7], vec![5, 6]],
    };
    assert_eq!(verify_twins(&host, &t), Ok(true));
    assert!(ExhaustivePermFinder
        .find(&Permutation::identity(12), 2)
        .is_err());
}
