//! End-to-end checks of the `kapitza` binary: exit codes, error JSON,
//! determinism of seeded outputs, and the documented file formats.

use std::path::Path;
use std::process::{Command, Output};

fn kapitza(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kapitza"))
        .args(args)
        .arg("--out-dir")
        .arg(dir)
        .env_remove("KAPITZA_OUTPUT_DIR")
        .output()
        .expect("binary runs")
}

#[test]
fn sagnac_defaults_write_metadata() {
    let dir = tempfile::tempdir().unwrap();
    let out = kapitza(dir.path(), &["sagnac"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let meta: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("sagnac.json")).unwrap())
            .unwrap();
    // resolved config echoed with conventions
    assert_eq!(meta["config"]["config"]["length_m"], 0.25);
    assert_eq!(meta["conventions"]["bessel_argument"], "v0_t_over_2hbar");
    let r = meta["config"]["resolution_s"].as_f64().unwrap();
    assert!((r - 1122.0).abs() / 1122.0 < 1e-3);
}

#[test]
fn malformed_config_exits_2_without_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.json");
    std::fs::write(&cfg, r#"{"command": "sagnac", "params": {"length_m": "oops"}}"#).unwrap();
    let out = kapitza(dir.path(), &["sagnac", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    // machine-readable error JSON on stderr
    let stderr = String::from_utf8_lossy(&out.stderr);
    let err: serde_json::Value = serde_json::from_str(stderr.trim()).unwrap();
    assert_eq!(err["error"]["code"], 2);
    assert!(!dir.path().join("sagnac.json").exists(), "no partial outputs");
}

#[test]
fn unknown_config_key_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("extra.json");
    std::fs::write(
        &cfg,
        r#"{"command": "sagnac", "params": {"length_m": 0.5, "typo_key": 1}}"#,
    )
    .unwrap();
    let out = kapitza(dir.path(), &["sagnac", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn trajectories_are_byte_identical_for_same_seed() {
    let dir_a = tempfile::tempdir().unwrap();
    let dir_b = tempfile::tempdir().unwrap();
    let args = ["trajectories", "--count", "400", "--seed", "7", "--bins", "41"];
    assert!(kapitza(dir_a.path(), &args).status.success());
    assert!(kapitza(dir_b.path(), &args).status.success());
    let a = std::fs::read(dir_a.path().join("histogram.csv")).unwrap();
    let b = std::fs::read(dir_b.path().join("histogram.csv")).unwrap();
    assert_eq!(a, b);
    let a = std::fs::read(dir_a.path().join("run.json")).unwrap();
    let b = std::fs::read(dir_b.path().join("run.json")).unwrap();
    assert_eq!(a, b);
}

#[test]
fn different_seed_changes_histogram() {
    let dir_a = tempfile::tempdir().unwrap();
    let dir_b = tempfile::tempdir().unwrap();
    assert!(kapitza(dir_a.path(), &["trajectories", "--count", "400", "--seed", "1"])
        .status
        .success());
    assert!(kapitza(dir_b.path(), &["trajectories", "--count", "400", "--seed", "2"])
        .status
        .success());
    let a = std::fs::read(dir_a.path().join("histogram.csv")).unwrap();
    let b = std::fs::read(dir_b.path().join("histogram.csv")).unwrap();
    assert_ne!(a, b);
}

#[test]
fn figure_7_left_writes_spectrum() {
    let dir = tempfile::tempdir().unwrap();
    let out = kapitza(dir.path(), &["figure", "--id", "7-left"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let spectrum = std::fs::read_to_string(dir.path().join("figure7_left_spectrum.csv")).unwrap();
    // convention flags embedded, then header
    assert!(spectrum.starts_with("# internal_frequencies: angular_rad_per_s\n"));
    assert!(spectrum.contains("n,order,probability,momentum_kg_m_s\n"));
    let series = std::fs::read_to_string(dir.path().join("figure7_left_timeseries.csv")).unwrap();
    assert!(series.contains("time_s,order,probability\n"));
    // probabilities of the final sample sum to ~1
    let meta: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("run.json")).unwrap())
            .unwrap();
    assert!(meta["config"]["norm_drift"].as_f64().unwrap() <= 1e-8);
}

#[test]
fn unknown_figure_id_is_validation_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = kapitza(dir.path(), &["figure", "--id", "99"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tables_1_and_3_reports() {
    let dir = tempfile::tempdir().unwrap();
    assert!(kapitza(dir.path(), &["tables", "--id", "1"]).status.success());
    let t1 = std::fs::read_to_string(dir.path().join("table1.csv")).unwrap();
    assert_eq!(t1.matches("recoil_frequency").count(), 7);
    assert!(kapitza(dir.path(), &["tables", "--id", "3"]).status.success());
    let t3 = std::fs::read_to_string(dir.path().join("table3.csv")).unwrap();
    assert!(t3.contains("bragg"));
    assert!(t3.contains("diffractive"));
}

#[test]
fn table_2_requires_line_list() {
    let dir = tempfile::tempdir().unwrap();
    let out = kapitza(dir.path(), &["tables", "--id", "2", "--species", "Na"]);
    assert_eq!(out.status.code(), Some(2));
    // with the documented sodium doublet it works
    let lines = dir.path().join("na.json");
    std::fs::write(
        &lines,
        r#"[{"wavelength_nm": 589.0, "weight": 2.0}, {"wavelength_nm": 589.6, "weight": 1.0}]"#,
    )
    .unwrap();
    let out = kapitza(
        dir.path(),
        &["tables", "--id", "2", "--species", "Na", "--lines", lines.to_str().unwrap()],
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let t2 = std::fs::read_to_string(dir.path().join("table2.csv")).unwrap();
    assert!(t2.contains("lightshift_product_u_tau"));
}

#[test]
fn text_line_list_also_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let lines = dir.path().join("na.txt");
    std::fs::write(&lines, "# Na D lines\n589.0 2.0\n589.6 1.0\n").unwrap();
    let out = kapitza(
        dir.path(),
        &["tables", "--id", "2", "--species", "Na", "--lines", lines.to_str().unwrap()],
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn builtins_catalogue() {
    let dir = tempfile::tempdir().unwrap();
    let out = kapitza(dir.path(), &["builtins"]);
    assert!(out.status.success());
    let catalogue: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let particles = catalogue["particles"].as_array().unwrap();
    let electron = particles
        .iter()
        .find(|p| p["name"] == "electron")
        .expect("electron listed");
    let mass = electron["mass_kg"].as_f64().unwrap();
    assert!((mass - 9.109e-31).abs() / mass < 1e-3);
    // high-intensity presets are flagged as needing line lists
    let presets = catalogue["presets"].as_array().unwrap();
    let table2: Vec<_> = presets
        .iter()
        .filter(|p| p["id"].as_str().unwrap().starts_with("table2:"))
        .collect();
    assert_eq!(table2.len(), 5);
    assert!(table2.iter().all(|p| p["requires_line_list"] == true));
}

#[test]
fn classify_published_point_and_map() {
    let dir = tempfile::tempdir().unwrap();
    let out = kapitza(dir.path(), &["classify", "--point", "H"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "lens");
    let out = kapitza(
        dir.path(),
        &["classify", "--u-mhz", "18.6", "--inv-dt-mhz", "14", "--epsilon-khz", "24"],
    );
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "diffractive");
    let out = kapitza(dir.path(), &["figure", "--id", "5"]);
    assert!(out.status.success());
    let map = std::fs::read_to_string(dir.path().join("figure5_regime_map.csv")).unwrap();
    assert!(map.contains("u_over_eps,inv_eps_dt,label,point"));
    for id in ["A", "B", "C", "D", "E", "F", "G", "H", "I"] {
        assert!(map.contains(&format!(",{id}\n")), "point {id} missing from map");
    }
}

#[test]
fn numerical_failure_exits_3() {
    // a boundary tolerance below any reachable population exhausts the
    // lattice-widening retries
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("impossible.json");
    std::fs::write(
        &cfg,
        r#"{"command": "diffract", "params": {"boundary_tolerance": 1e-300, "lattice_half": 4, "envelope": "rectangular"}}"#,
    )
    .unwrap();
    let out = kapitza(dir.path(), &["diffract", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
    let err: serde_json::Value =
        serde_json::from_str(String::from_utf8_lossy(&out.stderr).trim()).unwrap();
    assert_eq!(err["error"]["code"], 3);
}

#[test]
fn env_var_sets_default_output_dir() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_kapitza"))
        .arg("sagnac")
        .env("KAPITZA_OUTPUT_DIR", dir.path())
        .output()
        .expect("binary runs");
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(dir.path().join("sagnac.json").exists());
}

#[test]
fn unknown_particle_is_validation_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = kapitza(dir.path(), &["potential", "--particle", "unobtainium"]);
    assert_eq!(out.status.code(), Some(2));
    let err: serde_json::Value =
        serde_json::from_str(String::from_utf8_lossy(&out.stderr).trim()).unwrap();
    assert_eq!(err["error"]["kind"], "validation");
}

#[test]
fn diffract_rectangular_envelope_bragg_start() {
    let dir = tempfile::tempdir().unwrap();
    let out = kapitza(
        dir.path(),
        &[
            "diffract",
            "--intensity",
            "1e11",
            "--waist-m",
            "5e-3",
            "--envelope",
            "rectangular",
            "--incident-order",
            "1",
        ],
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let spectrum = std::fs::read_to_string(dir.path().join("spectrum.csv")).unwrap();
    assert!(spectrum.contains("order"));
}
