use std::fs;
use std::path::Path;

use coulomb_wavepacket::averaging::ImpactEvaluator;
use coulomb_wavepacket::partialwave::{free_amplitude, head_on_series, AmplitudeModel};
use coulomb_wavepacket::{DeltaSearch, KernelChoice, PhaseShiftTable, Scenario, TruncationPolicy, WignerSource};
use cwp_cli::{execute, run, Command, ScanArgs};

fn args(out: &Path, extra: &[(&str, &str)]) -> ScanArgs {
    let mut a = ScanArgs { out: Some(out.to_string_lossy().into_owned()), ..ScanArgs::default() };
    for &(k, v) in extra {
        let v = Some(v.to_string());
        match k {
            "threads" => a.threads = v,
            "steps" => a.steps = v,
            "lo" => a.lo = v,
            "hi" => a.hi = v,
            "format" => a.format = v,
            "eps" => a.eps = v,
            "phi_steps" => a.phi_steps = v,
            "beta" => a.beta = v,
            _ => panic!("unsupported flag {k}"),
        }
    }
    a
}

fn read_rows(path: &Path) -> (Vec<String>, Vec<Vec<f64>>) {
    let text = fs::read_to_string(path).unwrap();
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(str::to_string).collect();
    let rows = lines.map(|l| l.split(',').map(|c| c.parse().unwrap()).collect()).collect();
    (header, rows)
}

#[test]
fn thread_count_does_not_change_csv() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [(Command, &[(&str, &str)]); 3] = [
        (Command::ShadowZone, &[("steps", "48")]),
        (Command::BetaPhiProfile, &[("steps", "6"), ("phi_steps", "12")]),
        (Command::ForwardVsBeta, &[("steps", "12")]),
    ];
    for (cmd, extra) in cases {
        let mut bodies = Vec::new();
        for threads in ["1", "3", "8"] {
            let out = dir.path().join(format!("{}_{threads}.csv", cmd.name()));
            let mut flags = extra.to_vec();
            flags.push(("threads", threads));
            execute(cmd, &args(&out, &flags)).unwrap();
            bodies.push(fs::read(&out).unwrap());
        }
        assert!(bodies.windows(2).all(|w| w[0] == w[1]), "{cmd}");
    }
}

#[test]
fn shadow_zone_rows_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sz.csv");
    execute(Command::ShadowZone, &args(&out, &[])).unwrap();
    let (header, rows) = read_rows(&out);
    assert_eq!(header, ["theta", "p_model", "p_ruth", "ratio", "delta_used", "truncation_estimate"]);
    assert_eq!(rows.len(), 200);

    let policy = TruncationPolicy::default();
    let table = PhaseShiftTable::for_beta_range(22.8, 0.001, 0.0, &policy).unwrap();
    for row in rows.iter().step_by(100) {
        let s = Scenario::new(22.8, 0.001).unwrap().with_theta(row[0]).unwrap();
        let series = head_on_series(&s, &table, &policy, WignerSource::Exact).unwrap();
        let (best, r) = series.maximize(&DeltaSearch::default()).unwrap();
        assert_eq!(r.value.to_bits(), row[1].to_bits());
        assert_eq!(best.delta_max.to_bits(), row[4].to_bits());
    }
}

#[test]
fn profile_and_density_rows_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("bp.csv");
    execute(Command::BetaPhiProfile, &args(&out, &[("steps", "5")])).unwrap();
    let (_, rows) = read_rows(&out);
    assert_eq!(rows.len(), 5 * 16);
    let policy = TruncationPolicy::default();
    let ev = ImpactEvaluator::new(std::f64::consts::FRAC_PI_2, 22.8, 0.001, 3.0, KernelChoice::Auto, &policy).unwrap();
    let delta = ev.origin_delta(&DeltaSearch::default()).unwrap();
    for row in rows.iter().skip(17).step_by(40) {
        let v = ev.series_at(row[0], &[row[1]]).unwrap()[0].evaluate(delta);
        assert_eq!(v.to_bits(), row[2].to_bits());
        assert_eq!(delta.to_bits(), row[5].to_bits());
    }

    let out = dir.path().join("lm.csv");
    execute(Command::LmDensity, &args(&out, &[("steps", "11"), ("beta", "4")])).unwrap();
    let (header, rows) = read_rows(&out);
    assert_eq!(header, ["l", "m", "density"]);
    for row in rows.iter().step_by(37) {
        let (a, _) = free_amplitude(row[0] as u32, row[1] as i32, 0.001_f64, 4.0, AmplitudeModel::Full);
        assert_eq!((a * a).to_bits(), row[2].to_bits());
    }
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("scan.cfg");
    fs::write(&cfg, "# forward sweep\neps = 0.001\nlo = 10\nhi = 50\nsteps = 3\n").unwrap();
    let out = dir.path().join("fw.csv");
    let mut a = args(&out, &[("eps", "0.002")]);
    a.config = Some(cfg.clone());
    execute(Command::ForwardVsBeta, &a).unwrap();
    let meta: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("fw.meta.json")).unwrap()).unwrap();
    assert_eq!(meta["parameters"]["eps"]["value"], "0.002");
    assert_eq!(meta["parameters"]["eps"]["source"], "flag");
    assert_eq!(meta["parameters"]["hi"]["source"], "config line 4");
    assert_eq!(meta["parameters"]["window_sigmas"]["source"], "default");
    assert_eq!(meta["delta"]["policy"], "zero");
    assert_eq!(meta["library_version"], coulomb_wavepacket::VERSION);
    assert!(meta["wall_time_seconds"].as_f64().unwrap() >= 0.0);
    assert_eq!(read_rows(&out).1.len(), 3);

    fs::write(&cfg, "steps = 3\nlo = 10\nsteps = 4\n").unwrap();
    let err = execute(Command::ForwardVsBeta, &a).unwrap_err();
    assert_eq!(err.exit_code(), 1);
    assert!(err.to_string().contains("`steps` on lines 1 and 3"), "{err}");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.csv");
    let o = out.to_str().unwrap();
    assert_eq!(run(["cwp", "physical_map", "--out", o]), 0);
    assert_eq!(run(["cwp", "shadow_zone", "--out", o, "--steps", "one"]), 1);
    assert_eq!(run(["cwp", "shadow_zone", "--out", o, "--nonsense"]), 1);
    assert_eq!(run(["cwp", "forward_vs_beta", "--out", o, "--lo", "5", "--hi", "20"]), 2);
    assert_eq!(run(["cwp", "physical_map", "--out", o, "--energy", "100"]), 2);
    assert_eq!(run(["cwp", "shadow_zone", "--config", dir.path().join("missing.cfg").to_str().unwrap()]), 3);
    let blocker = dir.path().join("file");
    fs::write(&blocker, "").unwrap();
    assert_eq!(run(["cwp", "physical_map", "--out", blocker.join("x.csv").to_str().unwrap()]), 3);
}

#[test]
fn svg_only_when_requested() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("avg.csv");
    execute(Command::ForwardVsBeta, &args(&out, &[("steps", "4"), ("format", "csv+svg")])).unwrap();
    let svg = fs::read_to_string(dir.path().join("avg.svg")).unwrap();
    assert!(svg.starts_with("<svg") && !svg.contains("href") && !svg.contains("<image"));
    let out = dir.path().join("plain.csv");
    execute(Command::ForwardVsBeta, &args(&out, &[("steps", "4")])).unwrap();
    assert!(!dir.path().join("plain.svg").exists());
}

#[test]
fn physical_map_values() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("pm.csv");
    let (summary, _) = execute(Command::PhysicalMap, &args(&out, &[])).unwrap();
    assert!(summary.summary[0].starts_with("eta = 22.7"));
    let (header, rows) = read_rows(&out);
    let col = |name: &str| rows[0][header.iter().position(|h| h == name).unwrap()];
    assert!((col("sigma_x_angstrom") / 0.0052 - 1.0).abs() < 0.02);
    assert!((col("eta") / 22.8 - 1.0).abs() < 0.01);
}
