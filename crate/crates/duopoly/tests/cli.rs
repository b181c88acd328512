//! End-to-end tests of the `duopoly` binary: row formats, exit codes,
//! degree conversion, determinism, and the golden figure fixtures.

use std::process::Command;

const BIN: &str = env!("CARGO_BIN_EXE_duopoly");

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(BIN)
        .args(args)
        .output()
        .expect("binary should run");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().expect("no signal"),
    )
}

fn fields(row: &str) -> Vec<String> {
    row.split(',').map(str::to_string).collect()
}

#[test]
fn payoff_classical_row() {
    let (stdout, _, code) = run(&[
        "payoff", "--theta", "0", "--r", "0", "--k", "1", "--q1", "0.5", "--q2", "0.25",
    ]);
    assert_eq!(code, 0);
    let mut lines = stdout.lines();
    assert_eq!(lines.next().unwrap(), "theta,r,k,q1,q2,payoff_A,payoff_B");
    let row = fields(lines.next().unwrap());
    assert!((row[5].parse::<f64>().unwrap() - 0.125).abs() < 1e-12);
    assert!((row[6].parse::<f64>().unwrap() - 0.0625).abs() < 1e-12);
}

#[test]
fn payoff_with_zero_leader_quantity() {
    let (stdout, _, code) = run(&["payoff", "--q1", "0", "--q2", "1.5"]);
    assert_eq!(code, 0);
    let row = fields(stdout.lines().nth(1).unwrap());
    assert_eq!(row[5], "0");
}

#[test]
fn payoff_rejects_bad_quantities() {
    let (_, stderr, code) = run(&["payoff", "--q1=-1", "--q2", "0"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("domain error"), "{stderr}");
    let (_, stderr, code) = run(&["payoff", "--q1", "2e6", "--q2", "0"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("must not exceed"), "{stderr}");
}

#[test]
fn payoff_is_a_bit_exact_wrapper_over_the_library() {
    use duopoly::fmt::f64_shortest;
    use duopoly::{payoff_pair, GameParameters, QuantityPair};
    let (q1, q2) = (0.35, 1.2);
    let (stdout, _, code) = run(&[
        "payoff",
        "--theta",
        "0.7853981633974483",
        "--r",
        "0",
        "--k",
        "1",
        "--q1",
        "0.35",
        "--q2",
        "1.2",
    ]);
    assert_eq!(code, 0);
    let row = fields(stdout.lines().nth(1).unwrap());
    let params = GameParameters::from_radians(std::f64::consts::FRAC_PI_4, 0.0, 1.0).unwrap();
    let pay = payoff_pair(&params, &QuantityPair::new(q1, q2).unwrap());
    assert_eq!(row[5], f64_shortest(pay.p_a));
    assert_eq!(row[6], f64_shortest(pay.p_b));
}

#[test]
fn equilibrium_classical_row() {
    let (stdout, _, code) = run(&["equilibrium"]);
    assert_eq!(code, 0);
    let mut lines = stdout.lines();
    assert_eq!(
        lines.next().unwrap(),
        "theta,r,k,q1_star,q2_star,payoff_A,payoff_B,valid,reason"
    );
    let row = fields(lines.next().unwrap());
    for (idx, expected) in [(3, 0.5), (4, 0.25), (5, 0.125), (6, 0.0625)] {
        assert!((row[idx].parse::<f64>().unwrap() - expected).abs() < 1e-8);
    }
    assert_eq!(row[7], "true");
    assert_eq!(row[8], "OK");
}

#[test]
fn equilibrium_maximally_entangled_inertial() {
    let (stdout, _, code) = run(&["equilibrium", "--theta", "0.7853981633974483"]);
    assert_eq!(code, 0);
    let row = fields(stdout.lines().nth(1).unwrap());
    assert!((row[5].parse::<f64>().unwrap() - 0.03125).abs() < 1e-8);
    assert!((row[6].parse::<f64>().unwrap() - 0.017857142857142856).abs() < 1e-8);
}

#[test]
fn equilibrium_reports_breakdown_past_the_boundary() {
    let (stdout, _, code) = run(&["equilibrium", "--r", "0.8"]);
    assert_eq!(code, 0);
    let row = fields(stdout.lines().nth(1).unwrap());
    assert_eq!(row[7], "false");
    assert_eq!(row[8], "LEADER_QUANTITY_NEGATIVE");
    assert!(row[3].parse::<f64>().unwrap() < 0.0);
}

#[test]
fn degrees_flag_matches_radians() {
    let (deg, _, code_a) = run(&["equilibrium", "--theta", "45", "--degrees"]);
    let (rad, _, code_b) = run(&["equilibrium", "--theta", "0.7853981633974483"]);
    assert_eq!((code_a, code_b), (0, 0));
    let d = fields(deg.lines().nth(1).unwrap());
    let r = fields(rad.lines().nth(1).unwrap());
    for i in 3..7 {
        let (a, b) = (d[i].parse::<f64>().unwrap(), r[i].parse::<f64>().unwrap());
        assert!((a - b).abs() < 1e-12, "column {i}: {a} vs {b}");
    }
}

#[test]
fn critical_reports_the_three_kinds() {
    let (stdout, _, code) = run(&["critical", "--k", "3"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines[0], "kind,value");
    assert!(lines[1].starts_with("vanishing_r,"));
    let vanishing: f64 = lines[1].split(',').nth(1).unwrap().parse().unwrap();
    assert!((vanishing - std::f64::consts::PI / 3.0).abs() < 1e-12);
    assert!(lines.iter().any(|l| l.starts_with("crossing_r,")));
    assert!(lines.iter().any(|l| l.starts_with("breakdown_r,")));
}

#[test]
fn critical_default_instance_matches_the_recorded_constants() {
    let (stdout, _, code) = run(&["critical"]);
    assert_eq!(code, 0);
    let get = |kind: &str| -> f64 {
        stdout
            .lines()
            .find(|l| l.starts_with(kind))
            .unwrap_or_else(|| panic!("{kind} row missing in: {stdout}"))
            .split(',')
            .nth(1)
            .unwrap()
            .parse()
            .unwrap()
    };
    assert!((get("vanishing_r") - std::f64::consts::FRAC_PI_4).abs() < 1e-10);
    assert!((get("crossing_r") - 0.66).abs() <= 0.02);
    assert!((get("crossing_r") - 0.6662394324925153).abs() < 1e-9);
    assert!((get("breakdown_r") - std::f64::consts::FRAC_PI_4).abs() < 1e-9);
}

#[test]
fn critical_has_no_crossing_row_for_maximal_entanglement() {
    let (stdout, _, code) = run(&["critical", "--theta", "0.7853981633974483"]);
    assert_eq!(code, 0);
    assert!(!stdout.contains("crossing_r"), "{stdout}");
    assert!(stdout.contains("vanishing_r,0.7853981633974483"));
}

#[test]
fn critical_rejects_degenerate_theta() {
    let (_, stderr, code) = run(&["critical", "--theta", "1.5707963267948966"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("degenerate"), "{stderr}");
}

#[test]
fn rho_dump_matches_the_documented_format() {
    let (stdout, _, code) = run(&["rho", "--theta", "0", "--r", "0"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "1+0j,0+0j,0+0j,0+0j\n0+0j,0+0j,0+0j,0+0j\n0+0j,0+0j,0+0j,0+0j\n0+0j,0+0j,0+0j,0+0j\n"
    );
}

#[test]
fn rho_entries_for_a_tilted_state() {
    // theta = pi/4, r = pi/6: diag(3/8, 1/8, 0, 1/2) with corners sqrt(3)/4.
    let (stdout, _, code) = run(&["rho", "--theta", "45", "--r", "30", "--degrees"]);
    assert_eq!(code, 0);
    let entry = |line: usize, col: usize| -> f64 {
        let row = stdout.lines().nth(line).unwrap();
        let cell = row.split(',').nth(col).unwrap();
        cell.split('+').next().unwrap().parse().unwrap()
    };
    assert!((entry(0, 0) - 0.375).abs() < 1e-12);
    assert!((entry(1, 1) - 0.125).abs() < 1e-12);
    assert_eq!(entry(2, 2), 0.0);
    assert!((entry(3, 3) - 0.5).abs() < 1e-12);
    assert!((entry(0, 3) - 3.0_f64.sqrt() / 4.0).abs() < 1e-12);
    assert!((entry(3, 0) - 3.0_f64.sqrt() / 4.0).abs() < 1e-12);
}

#[test]
fn sweep_rejects_bad_grids() {
    let (_, _, code) = run(&[
        "sweep", "--axis", "r", "--lo", "0", "--hi", "0.5", "--steps", "1",
    ]);
    assert_eq!(code, 2);
    let (_, _, code) = run(&[
        "sweep", "--axis", "r", "--lo", "0.5", "--hi", "0.1", "--steps", "10",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn sweep_output_is_byte_deterministic_and_jobs_invariant() {
    let args = [
        "sweep", "--axis", "r", "--theta", "0", "--k", "1", "--lo", "0", "--hi", "0.7", "--steps",
        "37",
    ];
    let (first, _, _) = run(&args);
    let (second, _, _) = run(&args);
    assert_eq!(first, second);

    let mut with_jobs: Vec<&str> = args.to_vec();
    with_jobs.extend_from_slice(&["--jobs", "4"]);
    let (parallel, _, code) = run(&with_jobs);
    assert_eq!(code, 0);
    assert_eq!(first, parallel);
}

#[test]
fn out_flag_writes_the_same_bytes_to_a_file() {
    let path = std::env::temp_dir().join(format!("duopoly-out-{}.csv", std::process::id()));
    let path_str = path.to_str().unwrap();
    let (stdout, _, _) = run(&["equilibrium", "--r", "0.3"]);
    let (empty, _, code) = run(&["equilibrium", "--r", "0.3", "--out", path_str]);
    assert_eq!(code, 0);
    assert!(empty.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(stdout, written);
}

fn fixture(name: &str) -> String {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).expect("fixture exists")
}

#[test]
fn golden_fixtures_regenerate_through_the_cli() {
    let configs = [
        (
            "fig2.csv",
            vec![
                "--axis",
                "r",
                "--theta",
                "0",
                "--lo",
                "0",
                "--hi",
                "0.8053981633974483",
                "--steps",
                "158",
            ],
        ),
        (
            "fig3.csv",
            vec![
                "--axis",
                "r",
                "--theta",
                "0.7853981633974483",
                "--lo",
                "0",
                "--hi",
                "0.8053981633974483",
                "--steps",
                "158",
            ],
        ),
        (
            "fig4.csv",
            vec![
                "--axis",
                "theta",
                "--r",
                "0.6981317007977318",
                "--lo",
                "0",
                "--hi",
                "1.5707963267948966",
                "--steps",
                "91",
            ],
        ),
    ];
    for (name, extra) in configs {
        let mut args = vec!["sweep", "--k", "1"];
        args.extend(extra);
        let (stdout, _, code) = run(&args);
        assert_eq!(code, 0, "{name}");
        assert_eq!(stdout, fixture(name), "fixture {name} drifted");
    }
}
