use std::process::{Command, Output};

fn qhurwitz(args: &[&str], cache: &std::path::Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhurwitz"))
        .args(args)
        .env("QHURWITZ_CACHE", cache)
        .output()
        .expect("binary runs")
}

#[test]
fn bound_violation_exit_code_and_message() {
    let dir = tempfile::tempdir().unwrap();
    let out = qhurwitz(&["fd", "--n", "9"], dir.path());
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("n exceeds enumeration bound"));
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    for args in [&["fd"][..], &["nonsense"], &["fd", "--n", "3", "--format", "xml"], &["verify", "bogus"]] {
        assert_eq!(qhurwitz(args, dir.path()).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(qhurwitz(&["--help"], dir.path()).status.code(), Some(0));
}

#[test]
fn cache_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = qhurwitz(&["cache", "path"], dir.path());
    assert_eq!(String::from_utf8(path.stdout).unwrap().trim(), dir.path().to_str().unwrap());

    assert!(qhurwitz(&["chars", "--n", "5"], dir.path()).status.success());
    assert!(dir.path().join("chars-5.json").exists());
    let list = qhurwitz(&["cache", "list"], dir.path());
    assert_eq!(String::from_utf8(list.stdout).unwrap(), "5\n");

    let warm = qhurwitz(&["cache", "warm", "--n", "3"], dir.path());
    assert!(warm.status.success());
    let list = qhurwitz(&["cache", "list"], dir.path());
    assert_eq!(String::from_utf8(list.stdout).unwrap(), "1\n2\n3\n5\n");

    assert!(qhurwitz(&["cache", "clear"], dir.path()).status.success());
    assert!(qhurwitz(&["cache", "list"], dir.path()).stdout.is_empty());
}

#[test]
fn explicit_cache_dir_beats_environment() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let flag = flag_dir.path().to_str().unwrap();
    assert!(qhurwitz(&["chars", "--n", "4", "--cache-dir", flag], env_dir.path()).status.success());
    assert!(flag_dir.path().join("chars-4.json").exists());
    assert!(!env_dir.path().join("chars-4.json").exists());
}

#[test]
fn cached_and_fresh_output_agree() {
    let dir = tempfile::tempdir().unwrap();
    let first = qhurwitz(&["chars", "--n", "6", "--format", "csv"], dir.path());
    let second = qhurwitz(&["chars", "--n", "6", "--format", "csv"], dir.path());
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn config_file_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("run.conf");
    std::fs::write(&config, "n = 3\ndmax = 1\nfamily = classical\nformat = json\n").unwrap();
    let target = dir.path().join("out.csv");
    let out = qhurwitz(
        &["fd", "--config", config.to_str().unwrap(), "--format", "csv", "--output", target.to_str().unwrap()],
        dir.path(),
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&target).unwrap();
    assert!(written.starts_with("d,e,mu,nu,value\n"));
    assert_eq!(written.lines().count(), 1 + 2 * 9);
}

#[test]
fn json_outputs_parse() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["weights", "--family", "e", "--c", "1,-1/3", "--dmax", "3"][..],
        &["macdonald", "--n", "2"],
        &["hde", "--n", "3", "--dmax", "2"],
        &["tau", "--nmax", "2", "--dmax", "2", "--N", "-1", "--family", "h"],
    ] {
        let out = qhurwitz(args, dir.path());
        assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert!(!v.is_null());
    }
}

#[test]
fn hde_tables_carry_e() {
    let dir = tempfile::tempdir().unwrap();
    let out = qhurwitz(&["hde", "--n", "2", "--dmax", "1"], dir.path());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let es: Vec<(u64, u64)> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["d"].as_u64().unwrap(), t["e"].as_u64().unwrap()))
        .collect();
    assert_eq!(es, vec![(0, 0), (1, 0), (1, 1)]);
}

#[test]
fn verify_single_criterion() {
    let dir = tempfile::tempdir().unwrap();
    let out = qhurwitz(&["verify", "pochhammer"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("[PASS] criterion 6 pochhammer"));
}
