use std::io::Write;
use std::process::{Command, Output, Stdio};

use kpschur::partition::enumerate_partitions;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn kpschur(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kpschur"))
        .args(args)
        .env("KPSCHUR_WORKERS", "2")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(input) = stdin {
            pipe.write_all(input.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn code_of_figure_partition() {
    let o = kpschur(&["code", "6,5,5,4,1"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "RURRRURUURU\n");

    let o = kpschur(&["--json", "code", "1"], None);
    assert_eq!(stdout(&o), "{\"partition\":[1],\"code\":\"RU\"}\n");
}

#[test]
fn switches() {
    assert_eq!(
        stdout(&kpschur(&["switch", "--up", "5", "6,5,5,4,1"], None)),
        "5,4,4,4,4,1\n"
    );
    assert_eq!(
        stdout(&kpschur(&["switch", "--down", "2", "6,5,5,4,1"], None)),
        "7,5,4,1\n"
    );
    assert_eq!(
        stdout(&kpschur(&["switch", "--down", "3", "-"], None)),
        "1,1\n"
    );
    assert_eq!(stdout(&kpschur(&["switch", "--up", "1", "1"], None)), "-\n");
}

#[test]
fn kp_equation() {
    let o = kpschur(
        &["kp", "pde", "--alpha", "-", "--beta", "1,1,1", "--log"],
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1/12*F_1111 - F_13 + F_22 + 1/2*F_11^2 = 0\n");

    let o = kpschur(&["kp", "pde", "--alpha", "-", "--beta", "1,1,1"], None);
    assert_eq!(
        stdout(&o),
        "1/12*t*(t_1111 - 12*t_13 + 12*t_22) - 1/3*t_1*(t_111 - 3*t_3) + 1/4*(t_11 + 2*t_2)*(t_11 - 2*t_2) = 0\n"
    );

    let o = kpschur(&["kp", "pde", "--alpha", "1", "--beta", "1"], None);
    assert_eq!(stdout(&o), "0 = 0\n");
}

#[test]
fn pde_system_lists_one_line_per_relation() {
    let o = kpschur(&["kp", "pde-system", "--max-weight", "5", "--log"], None);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 3);
    assert_eq!(
        text.lines().next(),
        Some("1/12*F_1111 - F_13 + F_22 + 1/2*F_11^2 = 0")
    );
    assert_eq!(
        stdout(&kpschur(&["kp", "pde-system", "--max-weight", "3"], None)),
        ""
    );
}

const BAD_TABLE: &str = r#"{"truncation_weight":4,"series":[
    {"partition":[],"num":"1","den":"1"},
    {"partition":[2,2],"num":"1","den":"1"}]}"#;

#[test]
fn plucker_check_names_failing_relation() {
    let o = kpschur(
        &["plucker", "check", "--table", "-", "--max-weight", "4"],
        Some(BAD_TABLE),
    );
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(
        stdout(&o),
        "fails  a[-]*a[2,2] - a[1]*a[2,1] + a[2]*a[1,1] = 0  (value 1)\n"
    );

    let o = kpschur(
        &[
            "--json",
            "plucker",
            "check",
            "--table",
            "-",
            "--max-weight",
            "4",
        ],
        Some(BAD_TABLE),
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["status"], "fails");
    assert_eq!(v[0]["value"], "1");
}

#[test]
fn kp_check_exit_codes() {
    let o = kpschur(&["kp", "check", "--table", "-"], Some(BAD_TABLE));
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("fails  alpha=- beta=1,1,1  (value 1)"));

    let one = r#"{"truncation_weight":3,"series":[{"partition":[],"num":"1","den":"1"}]}"#;
    assert_eq!(
        kpschur(&["kp", "check", "--table", "-"], Some(one))
            .status
            .code(),
        Some(0)
    );
    let loose = kpschur(
        &["kp", "check", "--table", "-", "--max-weight", "5"],
        Some(one),
    );
    assert_eq!(loose.status.code(), Some(0));
    let strict = kpschur(
        &[
            "kp",
            "check",
            "--table",
            "-",
            "--max-weight",
            "5",
            "--strict",
        ],
        Some(one),
    );
    assert_eq!(strict.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["code", "1,2"],
        vec!["code", "x"],
        vec!["bogus"],
        vec!["switch", "3", "1"],
        vec!["switch", "--up", "0", "1"],
        vec!["bernstein", "1"],
        vec!["kp", "check", "--table", "-"],
    ] {
        let o = kpschur(&args, Some("[1"));
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
    let o = kpschur(
        &["kp", "tau-from-matrix", "-", "--max-weight", "3"],
        Some("[[1],[2]]"),
    );
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bernstein_methods_print_identical_bytes() {
    for lambda in enumerate_partitions(6) {
        let text = lambda.to_string();
        for json in [false, true] {
            let run = |method: &str| {
                let mut args = vec![
                    "bernstein",
                    text.as_str(),
                    "--max-weight",
                    "8",
                    "--method",
                    method,
                ];
                if json {
                    args.insert(0, "--json");
                }
                let o = kpschur(&args, None);
                assert_eq!(o.status.code(), Some(0));
                o.stdout
            };
            let closed = run("closed");
            assert_eq!(closed, run("definitional"), "{lambda}");
            assert_eq!(closed, run("survivor"), "{lambda}");
        }
    }
}

#[test]
fn bernstein_text() {
    let o = kpschur(&["bernstein", "1", "--max-weight", "3"], None);
    assert_eq!(stdout(&o), "t^-1: -s[-]\nt^1: s[1,1]\nt^2: s[2,1]\n");
}

#[test]
fn schur_expand() {
    let o = kpschur(&["schur", "expand", "2,2"], None);
    assert_eq!(stdout(&o), "-1/3*p[3,1] + 1/4*p[2,2] + 1/12*p[1,1,1,1]\n");
    let o = kpschur(&["--json", "schur", "expand", "-"], None);
    assert_eq!(
        stdout(&o),
        "[{\"partition\":[],\"num\":\"1\",\"den\":\"1\"}]\n"
    );
}

#[test]
fn plucker_gen() {
    let o = kpschur(&["plucker", "gen", "--max-weight", "4"], None);
    assert_eq!(stdout(&o), "a[-]*a[2,2] - a[1]*a[2,1] + a[2]*a[1,1] = 0\n");
    let o = kpschur(&["--json", "plucker", "gen", "--max-weight", "4"], None);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["terms"][1]["coeff"], "-1");
    assert_eq!(v[0]["terms"][1]["left"], serde_json::json!([1]));
}

#[test]
fn matrix_tables_round_trip_through_check() {
    for seed in 0..20u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rows: Vec<Vec<i64>> = (0..3)
            .map(|_| (0..7).map(|_| rng.gen_range(-5..=5)).collect())
            .collect();
        let matrix = serde_json::to_string(&rows).unwrap();
        let made = kpschur(
            &["kp", "tau-from-matrix", "-", "--max-weight", "8"],
            Some(&matrix),
        );
        assert_eq!(made.status.code(), Some(0));
        let table = stdout(&made);
        let checked = kpschur(&["kp", "check", "--table", "-"], Some(&table));
        assert_eq!(
            checked.status.code(),
            Some(0),
            "seed {seed}: {}",
            stdout(&checked)
        );
        let again = kpschur(
            &["kp", "tau-from-matrix", "-", "--max-weight", "8"],
            Some(&matrix),
        );
        assert_eq!(again.stdout, made.stdout);
    }
}
