//! End-to-end checks of the installed binary: output formats, config file
//! handling, and the exit-code taxonomy.

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lgsim"))
        .args(args)
        .output()
        .expect("binary spawns")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn temp_path(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("lgsim-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    dir.join(name)
}

const KLG_LINE: &str = "theta_over_pi=0.0600000000000 b=0.980000000000 \
                        C12=0.758820786897 C23=0.758820786897 C34=0.758820786897 \
                        C14=-0.0537990172701 K=2.33026137796 violated=true\n";

#[test]
fn klg_reports_breakdown() {
    let out = run(&[
        "klg",
        "--j",
        "5/2",
        "--partition",
        "edge5_2",
        "--b",
        "0.98",
        "--theta-over-pi",
        "0.06",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), KLG_LINE);
}

#[test]
fn sweep_fsigma_emits_exact_csv() {
    let out = run(&[
        "sweep-fsigma",
        "--j",
        "5/2",
        "--partition",
        "edge5_2",
        "--sigma-range",
        "0.2,1.0,0.4",
        "--precision",
        "6",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "sigma,a,b,c\n\
         0.200000,1.00000,3.72665e-6,1.92875e-22\n\
         0.600000,1.00000,0.249352,0.00386592\n\
         1.00000,1.00000,0.606531,0.135335\n"
    );
}

#[test]
fn sweep_kb_writes_file_and_keeps_stdout_quiet() {
    let path = temp_path("kb.csv");
    let out = run(&[
        "sweep-kb",
        "--j",
        "1/2",
        "--partition",
        "uniform:1",
        "--theta-over-pi",
        "0.25",
        "--b-range",
        "0,1,0.5",
        "--precision",
        "6",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "");
    let written = std::fs::read_to_string(&path).expect("output file exists");
    // Singleton blocks keep f ≡ 1 on the diagonal, so the qubit row is
    // b-independent and sits at the parity benchmark K = 2√2.
    assert_eq!(
        written,
        "theta_over_pi,b,C_theta,C_3theta,K,violated\n\
         0.250000,0,0.707107,-0.707107,2.82843,true\n\
         0.250000,0.500000,0.707107,-0.707107,2.82843,true\n\
         0.250000,1.00000,0.707107,-0.707107,2.82843,true\n"
    );
}

#[test]
fn threshold_brackets_the_crossing() {
    let out = run(&[
        "threshold",
        "--j",
        "5/2",
        "--partition",
        "edge5_2",
        "--theta-over-pi",
        "0.06",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let line = stdout(&out);
    let value: f64 = line
        .trim()
        .strip_prefix("b_star=")
        .expect("b_star prefix")
        .parse()
        .expect("numeric threshold");
    // Bisection stops at width 1e-8 around the true crossing 0.930138889178.
    assert!((value - 0.930138889177518).abs() < 1e-7, "b_star = {value}");
}

#[test]
fn threshold_reports_absent_when_no_crossing() {
    let out = run(&[
        "threshold",
        "--j",
        "5/2",
        "--partition",
        "edge5_2",
        "--theta-over-pi",
        "0.34",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "b_star=absent\n");
}

#[test]
fn config_file_supplies_defaults_and_flags_override() {
    let path = temp_path("point.conf");
    std::fs::write(
        &path,
        "# equal-gap probe point\n\
         j = 5/2\n\
         partition = edge5_2\n\
         b = 0.5\n\
         theta-over-pi = 0.06\n",
    )
    .expect("config written");
    let out = run(&[
        "klg",
        "--config",
        path.to_str().unwrap(),
        "--b",
        "0.98",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), KLG_LINE, "flag value must shadow the config value");
}

#[test]
fn check_passes_and_summarizes() {
    let out = run(&["check"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("checks: 16 passed, 0 failed"), "summary line:\n{text}");
    assert!(!text.contains("FAIL"), "no failing check lines:\n{text}");
}

#[test]
fn exit_code_taxonomy() {
    let missing_config = temp_path("does-not-exist.conf");
    let bad_key = temp_path("bad-key.conf");
    std::fs::write(&bad_key, "jay = 5/2\n").expect("config written");
    let cases: &[(&[&str], i32, &str)] = &[
        (&["--help"], 0, "help"),
        (&["--version"], 0, "version"),
        (&["klg", "--config", missing_config.to_str().unwrap()], 1, "unreadable config"),
        (&["klg", "--unknown-flag"], 2, "unknown flag"),
        (&["frobnicate"], 2, "unknown subcommand"),
        (&["klg", "--config", bad_key.to_str().unwrap()], 2, "unknown config key"),
        (
            &["klg", "--j", "5/3", "--partition", "uniform:1", "--b", "1", "--theta-over-pi", "0.1"],
            3,
            "malformed half-integer",
        ),
        (
            &["klg", "--j", "1/2", "--partition", "uniform:1", "--b", "1.5", "--theta-over-pi", "0.1"],
            4,
            "b out of range",
        ),
        (
            &["klg", "--j", "1", "--partition", "edge5_2", "--b", "0.5", "--theta-over-pi", "0.1"],
            4,
            "edge layout needs j = 5/2",
        ),
        (
            &[
                "klg", "--j", "1/2", "--partition", "uniform:1", "--b", "0.5", "--sigma", "0.6",
                "--theta-over-pi", "0.1",
            ],
            4,
            "b and sigma conflict",
        ),
        (
            &["klg", "--j", "1/2", "--partition", "uniform:1", "--theta-over-pi", "0.1"],
            5,
            "missing b",
        ),
        (
            &["klg", "--j", "0", "--partition", "uniform:1", "--b", "0.5", "--theta-over-pi", "0.1"],
            6,
            "one-dimensional system leaves the minus outcome impossible",
        ),
    ];
    for (args, expected, what) in cases {
        let out = run(args);
        assert_eq!(
            out.status.code(),
            Some(*expected),
            "{what}: args {args:?}\nstderr: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn errors_go_to_stderr_not_stdout() {
    let out = run(&[
        "klg",
        "--j",
        "1/2",
        "--partition",
        "uniform:1",
        "--theta-over-pi",
        "0.1",
    ]);
    assert_eq!(out.status.code(), Some(5));
    assert_eq!(stdout(&out), "");
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("missing required field"), "stderr: {err}");
}
