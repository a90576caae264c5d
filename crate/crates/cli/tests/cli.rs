use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lissaknot")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = args.to_vec();
    all.push("--json");
    let o = run(&all);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn analyze_five_two_member() {
    let o = run(&["analyze", "--nx", "2", "--ny", "5", "--nz", "19", "--phy", "1/2", "--phz", "(19-3*pi)/10"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("crossings: 13"));
    assert!(s.contains("alexander: 2 - 5t + 2t^2"));
    assert!(s.contains("Twist(4)"));
}

#[test]
fn analyze_json_fields() {
    let v = json(&["analyze", "--nx", "2", "--ny", "5", "--nz", "19", "--phy", "1/2", "--phz", "(19-3*pi)/10"]);
    assert_eq!(v["crossing_count"], 13);
    assert_eq!(v["arf"], 0);
    assert_eq!(v["diagram"]["gauss"].as_array().unwrap().len(), 26);
}

#[test]
fn singular_phase_exits_two() {
    let o = run(&["analyze", "--nx", "2", "--ny", "3", "--nz", "5", "--phx", "pi/5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("singular phase"));
}

#[test]
fn non_coprime_exits_two() {
    let o = run(&["analyze", "--nx", "2", "--ny", "4", "--nz", "5", "--phx", "1/3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn twist_members() {
    let v = json(&["twist", "--m", "0"]);
    assert_eq!(v["candidates"][0], "Unknot");
    for m in [2, 3] {
        let v = json(&["twist", "--m", &m.to_string()]);
        assert_eq!(v["crossing_count"], 6 * m + 1);
        assert_eq!(v["alexander_matches"], true);
        let claims = v["claims"].as_array().unwrap();
        assert_eq!(claims.len(), 3);
        assert!(claims.iter().all(|c| c["holds"] == true));
    }
}

#[test]
fn family_rows() {
    for (m, nz, rows) in [("1", "13", 5), ("2", "19", 7)] {
        let v = json(&["family", "--m", m, "--nz", nz]);
        let r = v["rows"].as_array().unwrap();
        assert_eq!(r.len(), rows);
        assert!(r.iter().all(|row| row["arf"] == 0));
    }
    let o = run(&["family", "--m", "2", "--nz", "20"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn torus_construction() {
    let v = json(&["construct", "torus", "--q", "4"]);
    assert_eq!(v["frequencies"], serde_json::json!([17, 5]));
    assert_eq!(v["word_identity"], true);
    assert_eq!(v["rewrite_check"]["equal"], true);
    let o = run(&["construct", "torus", "--q", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn two_bridge_construction() {
    let v = json(&["construct", "two-bridge", "--word", "2,2,2"]);
    assert_eq!(v["k"], 3);
    assert_eq!(v["frequencies"], serde_json::json!([8, 3]));
    assert_eq!(v["alexander"], v["target"]);
    let o = run(&["construct", "two-bridge", "--word", "1,0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn render_projection_has_a_gap_per_crossing() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.svg");
    let p = path.to_str().unwrap();
    let o = run(&["render", "--svg", p, "--nx", "4", "--ny", "3", "--phx", "1/5", "--phy", "2/7"]);
    assert_eq!(o.status.code(), Some(0));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.contains(r#"data-crossings="17""#));
    assert_eq!(svg.matches("<path").count(), 17);
}

#[test]
fn render_arc_marks_double_points() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("arc.svg");
    let o = run(&["render", "--svg", path.to_str().unwrap(), "--nx", "4", "--ny", "3", "--arc"]);
    assert_eq!(o.status.code(), Some(0));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert_eq!(svg.matches(r#"class="double-point""#).count(), 3);
}

#[test]
fn render_csv_rows_match_density() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.csv");
    let o = run(&["render", "--csv", path.to_str().unwrap(), "--nx", "3", "--ny", "5", "--nz", "7", "--phx", "1/10"]);
    assert_eq!(o.status.code(), Some(0));
    let csv = std::fs::read_to_string(&path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("t,x,y,z"));
    assert_eq!(lines.count(), 2000 * 5);
}

#[test]
fn render_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = |p: &str| {
        vec![
            "render".to_string(),
            "--svg".into(),
            p.into(),
            "--nx".into(),
            "3".into(),
            "--ny".into(),
            "5".into(),
            "--z2".into(),
            "4,1/3,7,pi/9".into(),
            "--phx".into(),
            "1/10".into(),
        ]
    };
    let (a, b) = (dir.path().join("a.svg"), dir.path().join("b.svg"));
    for p in [&a, &b] {
        let v = args(p.to_str().unwrap());
        let v: Vec<&str> = v.iter().map(String::as_str).collect();
        assert_eq!(run(&v).status.code(), Some(0));
    }
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
}

#[test]
fn render_to_missing_directory_exits_two() {
    let o = run(&["render", "--svg", "/nonexistent-dir/x.svg", "--nx", "4", "--ny", "3", "--arc"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_tolerance_exits_two() {
    let o = Command::new(env!("CARGO_BIN_EXE_lissaknot"))
        .args(["twist", "--m", "1"])
        .env("LISSAKNOT_TOL", "-1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
