use cavity_entropy::config::parse_value;
use cavity_entropy::harness::{
    envelope, envelope_period, peak_entropy, simulate, sweep2d, write_sweep_csv, EntropyTrace,
    ParamAxis, QUIET_ZONE_EPS,
};
use cavity_entropy::{bond_space, Error, ModelParams, Param, Preset, RunConfig, G_REF};

fn s_omega(params: &ModelParams, horizon: f64, sample_every: usize) -> EntropyTrace {
    let config = RunConfig {
        sample_every,
        ..RunConfig::for_horizon(horizon, 1e-9)
    };
    simulate(
        params,
        &bond_space(),
        &config,
        &[Preset::Photons.partition()],
    )
    .unwrap()
}

fn with_bond(k: f64) -> ModelParams {
    ModelParams::default().with_bond_coupling(k * G_REF)
}

#[test]
fn pinned_peaks() {
    let text = include_str!("fixtures/peaks.txt");
    let mut n = 0;
    for line in text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
    {
        let f: Vec<&str> = line.split_whitespace().collect();
        let param: Param = f[0].parse().unwrap();
        let mut p = ModelParams::default();
        param.set(&mut p, parse_value(f[1]).unwrap());
        let want: f64 = f[2].parse().unwrap();
        let got = peak_entropy(&s_omega(&p, 1e-5, 1), "S_Omega").unwrap();
        assert!((got - want).abs() <= 1e-9, "{line}: got {got:.15e}");
        n += 1;
    }
    assert_eq!(n, 13);
}

#[test]
fn strong_photon_coupling_flattens_peak() {
    let p = ModelParams::default().with_photon_coupling(4.0 * G_REF);
    assert!(peak_entropy(&s_omega(&p, 1e-5, 1), "S_Omega").unwrap() < 0.3);
}

#[test]
fn carrier_maxima_spacing() {
    let tr = s_omega(&ModelParams::default(), 1e-5, 1);
    let env = envelope(&tr, "S_Omega").unwrap();
    let gap = (env.last().unwrap().0 - env[0].0) / (env.len() - 1) as f64;
    let rabi = std::f64::consts::PI / (2.0 * G_REF);
    assert!(gap > 0.5 * rabi && gap < 5.0 * rabi, "{gap:e}");
}

#[test]
fn envelope_period_is_two_pi_over_bond_coupling() {
    for k in [0.05, 0.1, 0.2] {
        let per =
            envelope_period(&s_omega(&with_bond(k), 2e-5, 1), "S_Omega", QUIET_ZONE_EPS).unwrap();
        let expected = 2.0 * std::f64::consts::PI / (k * G_REF);
        assert!((per / expected - 1.0).abs() < 0.01, "g_bond {k}g: {per:e}");
    }
}

#[test]
fn envelope_period_tracks_bond_coupling_between_grid_points() {
    for i in 0..11 {
        let k = 0.05 + 0.02 * i as f64;
        let expected = 2.0 * std::f64::consts::PI / (k * G_REF);
        let trace = s_omega(&with_bond(k), (2.5 * expected).max(2e-5), 2);
        let per = envelope_period(&trace, "S_Omega", QUIET_ZONE_EPS).unwrap();
        assert!(
            (per / expected - 1.0).abs() < 0.03,
            "g_bond {k:.2}g: {per:e}"
        );
    }
}

#[test]
fn envelope_period_survives_subsampling() {
    for k in [0.05, 0.1, 0.2] {
        let fine =
            envelope_period(&s_omega(&with_bond(k), 2e-5, 1), "S_Omega", QUIET_ZONE_EPS).unwrap();
        let coarse =
            envelope_period(&s_omega(&with_bond(k), 2e-5, 2), "S_Omega", QUIET_ZONE_EPS).unwrap();
        assert!((fine - coarse).abs() <= 2e-9, "{fine:e} vs {coarse:e}");
    }
}

#[test]
fn weak_bond_needs_long_horizon() {
    let p = with_bond(0.01);
    assert!(matches!(
        envelope_period(&s_omega(&p, 5e-5, 10), "S_Omega", QUIET_ZONE_EPS),
        Err(Error::HorizonTooShort { .. })
    ));
    let per = envelope_period(&s_omega(&p, 1e-4, 1), "S_Omega", QUIET_ZONE_EPS).unwrap();
    let expected = 2.0 * std::f64::consts::PI / (0.01 * G_REF);
    assert!((per / expected - 1.0).abs() < 0.05, "{per:e}");
}

#[test]
fn single_point_sweep_equals_single_run() {
    let x = ParamAxis::new(Param::GPhoton, vec![1.5 * G_REF]).unwrap();
    let y = ParamAxis::new(Param::Zeta, vec![G_REF]).unwrap();
    let grid = sweep2d(
        &x,
        &y,
        &ModelParams::default(),
        &Preset::Photons.partition(),
        5e-6,
        1e-9,
    )
    .unwrap();
    let p = ModelParams::default().with_photon_coupling(1.5 * G_REF);
    let direct = peak_entropy(&s_omega(&p, 5e-6, 1), "S_Omega").unwrap();
    assert_eq!(grid.at(0, 0), direct);
}

#[test]
fn sweep_csv_is_bit_identical_across_runs() {
    let x = ParamAxis::linspace(Param::GPhoton, 0.5 * G_REF, 2.0 * G_REF, 4).unwrap();
    let y = ParamAxis::linspace(Param::Zeta, 0.5 * G_REF, 2.0 * G_REF, 3).unwrap();
    let csv = || {
        let g = sweep2d(
            &x,
            &y,
            &ModelParams::default(),
            &Preset::Photons.partition(),
            3e-6,
            1e-9,
        )
        .unwrap();
        let mut out = Vec::new();
        write_sweep_csv(&g, &mut out).unwrap();
        out
    };
    let a = csv();
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(csv);
    assert_eq!(a, csv());
    assert_eq!(a, single);
    assert_eq!(String::from_utf8(a).unwrap().lines().count(), 13);
}
