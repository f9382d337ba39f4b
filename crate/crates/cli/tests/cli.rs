use std::process::{Command, Output};

fn spardiff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spardiff"))
        .args(args)
        .output()
        .expect("spawn spardiff")
}

#[test]
fn verify_prints_reference_layout() {
    let out = spardiff(&["verify"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x array =    1.000000000000000E+00    5.000000000000000E+00");
    assert_eq!(lines[1], "f array =    8.414709848078965E-01   -1.323517500977730E-01");
    assert_eq!(lines[4], "df/dx2  =    0.000000000000000E+00    9.912028118634735E+00");
    assert_eq!(lines[3..5], lines[6..8]);
}

#[test]
fn stencil_dumps_triplets() {
    let out = spardiff(&["stencil", "--n", "10", "--capacity", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<(u32, u32, f64)> = text
        .lines()
        .map(|l| {
            let mut it = l.split_whitespace();
            (
                it.next().unwrap().parse().unwrap(),
                it.next().unwrap().parse().unwrap(),
                it.next().unwrap().parse().unwrap(),
            )
        })
        .collect();
    assert_eq!(rows.len(), 24);
    assert_eq!(&rows[..3], &[(2, 1, 1.0), (2, 2, -2.0), (2, 3, 1.0)]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("ldsize_opt=3 ml=1 mu=1"));
}

#[test]
fn stencil_rejects_small_capacity() {
    let out = spardiff(&["stencil", "--n", "10", "--capacity", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("capacity"));
}

#[test]
fn network_rejects_capacity_below_species() {
    let out = spardiff(&["network", "--shells", "2", "--species", "5", "--capacity", "4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn network_reports_structure() {
    let out = spardiff(&["network", "--shells", "10", "--species", "14"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("n=140 nz=1960 ldsize_opt=14 ml=13 mu=13"), "{text}");
}

#[test]
fn bench_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("bench.csv");
    let out = spardiff(&["bench", "--n", "200", "--csv", csv.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "case,n,capacity,wall_time_ns,peak_bytes_estimate,jacobian_nnz");
    assert!(lines[1].starts_with("stencil-sparse,200,3,"));
    assert!(lines[1].ends_with(",19200,594"));
    assert!(lines[2].starts_with("stencil-dense,200,200,"));
    assert!(lines[2].ends_with(",964800,594"));
}

#[test]
fn unknown_subcommand_fails() {
    assert!(!spardiff(&["frobnicate"]).status.success());
}
