mod common;

use common::table1;
use pass_noma::analytic;
use pass_noma::model::{derive, ChannelCondition, NetworkConfig, Node, SicMode};
use pass_noma::simulator::{
    mc_blockage, mc_ergodic_rate, mc_oma_baseline, sample_disk, sample_exp_power, OmaScheme,
    CHUNK_TRIALS,
};
use rand::SeedableRng;
use rand_xoshiro::Xoshiro256PlusPlus;

const N: usize = 1_000_000;

#[test]
fn disk_sampling_is_area_uniform() {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(2024);
    let mut u: Vec<f64> = (0..N)
        .map(|_| {
            let (x, y) = sample_disk(6.0, &mut rng);
            assert!(x * x + y * y <= 36.0);
            (x * x + y * y) / 36.0
        })
        .collect();
    let mean = u.iter().sum::<f64>() / N as f64;
    assert!((mean - 0.5).abs() < 0.002, "mean {mean}");
    u.sort_by(f64::total_cmp);
    let ks = u
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            (v - i as f64 / N as f64)
                .abs()
                .max(((i + 1) as f64 / N as f64 - v).abs())
        })
        .fold(0.0, f64::max);
    assert!(ks < 0.002, "KS distance {ks}");
}

#[test]
fn exponential_power_mean_and_tail() {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(77);
    let xs: Vec<f64> = (0..N).map(|_| sample_exp_power(1.0, &mut rng)).collect();
    assert!(xs.iter().all(|&x| x >= 0.0));
    let mean = xs.iter().sum::<f64>() / N as f64;
    assert!((0.997..=1.003).contains(&mean), "mean {mean}");

    let tail = (0..N)
        .filter(|_| sample_exp_power(0.01, &mut rng) > 0.0461)
        .count() as f64
        / N as f64;
    let want = (-4.61f64).exp();
    let se = (want * (1.0 - want) / N as f64).sqrt();
    assert!((tail - want).abs() <= 3.0 * se, "tail {tail} vs {want}");
}

#[test]
fn estimates_are_bit_reproducible() {
    let cfg = table1();
    let run = |seed| {
        mc_ergodic_rate(
            &cfg,
            47.0,
            SicMode::Nisic,
            Node::Near,
            ChannelCondition::Los,
            100_003,
            seed,
        )
        .unwrap()
    };
    let (a, b) = (run(5), run(5));
    assert_eq!(a.mean.to_bits(), b.mean.to_bits());
    assert_eq!(a.std_error.to_bits(), b.std_error.to_bits());
    assert_eq!(a.trials, 100_003);
    assert_ne!(run(6).mean, a.mean);
}

#[test]
fn partial_chunks_count_every_trial() {
    let cfg = table1();
    for trials in [1, CHUNK_TRIALS - 1, CHUNK_TRIALS, CHUNK_TRIALS + 7] {
        let e = mc_blockage(
            &cfg,
            53.5,
            SicMode::Isic,
            Node::Near,
            ChannelCondition::Los,
            trials,
            3,
        )
        .unwrap();
        assert_eq!(e.trials, trials);
    }
}

#[test]
fn doubling_trials_shrinks_error_by_root_two() {
    // ρ where the ideal-SIC blockage sits mid-way through its linear arm
    let cfg = table1();
    let se = |n| {
        mc_blockage(
            &cfg,
            53.5,
            SicMode::Isic,
            Node::Near,
            ChannelCondition::Los,
            n,
            19,
        )
        .unwrap()
        .std_error
    };
    let ratio = se(200_000) / se(400_000);
    assert!((ratio / 2f64.sqrt() - 1.0).abs() < 0.05, "ratio {ratio}");
    let rate_se = |n| {
        mc_ergodic_rate(
            &cfg,
            40.0,
            SicMode::Isic,
            Node::Far,
            ChannelCondition::Nlos,
            n,
            19,
        )
        .unwrap()
        .std_error
    };
    let ratio = rate_se(200_000) / rate_se(400_000);
    assert!(
        (ratio / 2f64.sqrt() - 1.0).abs() < 0.05,
        "rate ratio {ratio}"
    );
}

#[test]
fn near_node_isic_blockage_matches_closed_form() {
    let cfg = table1();
    for db in [20.0, 53.0, 55.0] {
        let e = mc_blockage(
            &cfg,
            db,
            SicMode::Isic,
            Node::Near,
            ChannelCondition::Los,
            N as u64,
            101,
        )
        .unwrap();
        let want = analytic::blockage_n_isic(&derive(&cfg, db).unwrap(), &cfg)
            .unwrap()
            .probability;
        assert!(
            (e.mean - want).abs() <= (3.0 * e.std_error).max(1e-4),
            "{db} dB: {} vs {want}",
            e.mean
        );
    }
}

#[test]
fn far_node_los_past_knee_never_blocks() {
    let e = mc_blockage(
        &table1(),
        60.0,
        SicMode::Isic,
        Node::Far,
        ChannelCondition::Los,
        N as u64,
        4,
    )
    .unwrap();
    assert_eq!((e.mean, e.std_error), (0.0, 0.0));
}

#[test]
fn nisic_error_floor_is_reproduced() {
    // common random numbers: both SNRs see the same draws
    let cfg = table1();
    let at = |db| {
        mc_blockage(
            &cfg,
            db,
            SicMode::Nisic,
            Node::Near,
            ChannelCondition::Los,
            N as u64,
            70,
        )
        .unwrap()
    };
    let (e70, e80) = (at(70.0), at(80.0));
    assert!(
        (e70.mean - e80.mean).abs() < 2.0 * e80.std_error,
        "{} vs {}",
        e70.mean,
        e80.mean
    );
    let floor = analytic::asym_blockage_n_nisic(&derive(&cfg, 80.0).unwrap(), &cfg).unwrap();
    for e in [e70, e80] {
        assert!(
            (e.mean - floor).abs() <= 3.0 * e.std_error,
            "{} vs floor {floor}",
            e.mean
        );
    }
}

#[test]
fn rates_track_closed_forms() {
    let cfg = table1();
    let p = derive(&cfg, 30.0).unwrap();
    let mc = mc_ergodic_rate(
        &cfg,
        30.0,
        SicMode::Isic,
        Node::Near,
        ChannelCondition::Los,
        N as u64,
        8,
    )
    .unwrap();
    let exact = analytic::ergodic_rate_n_isic(&p, &cfg).unwrap().rate;
    assert!((mc.mean - exact).abs() < 0.02 * exact);

    // the LoS ceiling log2(1 + a_f/a_n) is only approached well above 80 dB
    let far = mc_ergodic_rate(
        &cfg,
        90.0,
        SicMode::Isic,
        Node::Far,
        ChannelCondition::Los,
        N as u64,
        8,
    )
    .unwrap();
    assert!(
        (far.mean - (1.0f64 + 0.7 / 0.3).log2()).abs() < 0.01,
        "{}",
        far.mean
    );
}

#[test]
fn infeasible_far_node_stays_blocked_at_any_snr() {
    let cfg = NetworkConfig {
        rate_f_bpcu: 2.0,
        ..table1()
    };
    for db in [60.0, 100.0, 140.0] {
        let e = mc_blockage(
            &cfg,
            db,
            SicMode::Isic,
            Node::Far,
            ChannelCondition::Los,
            50_000,
            1,
        )
        .unwrap();
        assert_eq!(e.mean, 1.0);
    }
}

#[test]
fn oma_baseline_reaches_full_service() {
    let cfg = table1();
    let (block, rate) = mc_oma_baseline(
        &cfg,
        100.0,
        Node::Near,
        ChannelCondition::Los,
        OmaScheme::TdmaHalf,
        50_000,
        2,
    )
    .unwrap();
    assert_eq!(block.mean, 0.0);
    // ρg ≈ 1e5 at the cell edge, so half of log2(1 + ρg) is about 8.4
    assert!(rate.mean > 8.0, "{}", rate.mean);
    assert!(mc_oma_baseline(
        &cfg,
        30.0,
        Node::Near,
        ChannelCondition::Nlos,
        OmaScheme::TdmaHalf,
        10,
        2
    )
    .is_err());
}
