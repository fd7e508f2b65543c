use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_vagueset"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn fixture(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

const THREE: &str = "subject,name,lo,hi,polarity\nm1,young,10,30,for\nm2,young,15,25\nm3,young,20,40,for\n";

const TWO: &str = "subject,name,lo,hi\ns1,x,10,30\ns2,x,15,25\ns1,y,20,40\ns2,y,5,18\n";

/// Parses CSV rows (skipping `#` lines and the header) into field vectors.
fn rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .map(|l| l.split(',').map(str::to_owned).collect())
        .collect()
}

#[test]
fn validate_reports_summary() {
    let dir = TempDir::new().unwrap();
    let data = fixture(&dir, "three.csv", THREE);
    let o = run(&["validate", "--dataset", p(&data)]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("subjects=3 names=1"), "{out}");
    assert!(out.contains("name=young for=3 against=0 coverage=0.375000"), "{out}");
}

#[test]
fn validate_rejects_reversed_interval_with_line() {
    let dir = TempDir::new().unwrap();
    let data = fixture(&dir, "bad.csv", "# header next\nsubject,name,lo,hi\na,x,1,2\na,x,9,3\n");
    let o = run(&["validate", "--dataset", p(&data)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 4"), "{}", stderr(&o));
}

#[test]
fn validate_rejects_contradiction() {
    let dir = TempDir::new().unwrap();
    let data = fixture(
        &dir,
        "contra.csv",
        "subject,name,lo,hi,polarity\nm1,young,10,30,for\nm1,young,20,40,against\n",
    );
    let o = run(&["validate", "--dataset", p(&data)]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("both for and against") && err.contains("[20, 30)"), "{err}");
}

#[test]
fn validate_rejects_out_of_universe_and_missing_file() {
    let dir = TempDir::new().unwrap();
    let data = fixture(&dir, "far.csv", "subject,name,lo,hi\na,x,90,95\n");
    assert_eq!(run(&["validate", "--dataset", p(&data)]).status.code(), Some(2));
    // A wider universe accepts it.
    let o = run(&["validate", "--dataset", p(&data), "--hi", "100"]);
    assert_eq!(o.status.code(), Some(0));
    let missing = dir.path().join("nope.csv");
    assert_eq!(run(&["validate", "--dataset", p(&missing)]).status.code(), Some(2));
}

#[test]
fn eval_event_three_subjects() {
    let dir = TempDir::new().unwrap();
    let data = fixture(&dir, "three.csv", THREE);
    let o = run(&["eval", "--dataset", p(&data), "--expr", "young", "--step", "10"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with("omega,value,value_exact\n"));
    let exact: Vec<String> = rows(&out).iter().map(|r| r[2].clone()).collect();
    assert_eq!(exact, ["0/3", "1/3", "3/3", "1/3", "0/3", "0/3", "0/3", "0/3"]);
    let omegas: Vec<String> = rows(&out).iter().map(|r| r[0].clone()).collect();
    assert_eq!(omegas, ["0", "10", "20", "30", "40", "50", "60", "70"]);
    assert_eq!(rows(&out)[1][1], "0.333333");
}

#[test]
fn eval_not_is_pointwise_complement() {
    let dir = TempDir::new().unwrap();
    let data = fixture(&dir, "three.csv", THREE);
    let base = stdout(&run(&["eval", "--dataset", p(&data), "--expr", "young", "--step", "2.5"]));
    let neg = stdout(&run(&["eval", "--dataset", p(&data), "--expr", "not young", "--step", "2.5"]));
    let (base, neg) = (rows(&base), rows(&neg));
    assert_eq!(base.len(), 32);
    for (a, b) in base.iter().zip(&neg) {
        assert_eq!(a[0], b[0]);
        let k: u32 = a[2].split('/').next().unwrap().parse().unwrap();
        assert_eq!(b[2], format!("{}/3", 3 - k));
    }
}

#[test]
fn eval_errors() {
    let dir = TempDir::new().unwrap();
    let data = fixture(&dir, "three.csv", THREE);
    let o = run(&["eval", "--dataset", p(&data), "--expr", "and x"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("position 0"), "{}", stderr(&o));

    let o = run(&["eval", "--dataset", p(&data), "--expr", "old"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("unknown atom \"old\""));

    let o = run(&["eval", "--dataset", p(&data), "--expr", "young", "--semantics", "fuzzy"]);
    assert_eq!(o.status.code(), Some(1));

    let o = run(&["eval", "--dataset", p(&data), "--expr", "young", "--step", "0"]);
    assert_eq!(o.status.code(), Some(1));

    let o = run(&["eval", "--dataset", p(&data), "--expr", "young & old"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("position 6"));
}

#[test]
fn eval_vague_and_tnorm_columns() {
    let dir = TempDir::new().unwrap();
    let data = fixture(
        &dir,
        "vague.csv",
        "subject,name,lo,hi,polarity\ns1,x,10,30,for\ns2,x,10,20,for\ns1,x,40,80,against\ns2,x,25,80,against\n",
    );
    let o = run(&["eval", "--dataset", p(&data), "--expr", "x", "--semantics", "vague", "--step", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with("omega,t,f,lower,upper\n"));
    let r = rows(&out);
    assert_eq!(r[15], ["15", "1.000000", "0.000000", "1.000000", "1.000000"]);
    assert_eq!(r[22], ["22", "0.500000", "0.000000", "0.500000", "1.000000"]);
    assert_eq!(r[50], ["50", "0.000000", "1.000000", "0.000000", "0.000000"]);

    let data = fixture(&dir, "two.csv", TWO);
    let o = run(&[
        "eval", "--dataset", p(&data), "--expr", "x and y", "--semantics", "tnorm:prod", "--step", "16",
    ]);
    let r = rows(&stdout(&o));
    // At 16: p = 1, q = 1/2.
    assert_eq!(r[1], ["16", "0.500000"]);
}

#[test]
fn eval_svg_output() {
    let dir = TempDir::new().unwrap();
    let data = fixture(&dir, "three.csv", THREE);
    let out = dir.path().join("plot.svg");
    let o = run(&["eval", "--dataset", p(&data), "--expr", "very young", "--format", "svg", "--out", p(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(o.stdout.is_empty());
    let svg = std::fs::read_to_string(&out).unwrap();
    assert!(svg.starts_with("<svg") && svg.contains("(very young)") && svg.contains("membership"));
}

#[test]
fn config_file_overrides_defaults() {
    let dir = TempDir::new().unwrap();
    let data = fixture(&dir, "three.csv", THREE);
    let cfg = fixture(&dir, "vague.conf", "# test\nstep = 20\nprecision = 2\nvery = 1\n");
    let o = run(&["eval", "--dataset", p(&data), "--expr", "very young", "--config", p(&cfg)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r = rows(&stdout(&o));
    assert_eq!(r.len(), 4);
    // Exponent 1 leaves the curve exact.
    assert_eq!(r[1], ["20", "1.00", "3/3"]);

    let bad = fixture(&dir, "bad.conf", "lo = 10\nhi = 5\n");
    assert_eq!(run(&["eval", "--dataset", p(&data), "--expr", "young", "--config", p(&bad)]).status.code(), Some(1));
}

#[test]
fn compare_two_subject_fixture() {
    let dir = TempDir::new().unwrap();
    let data = fixture(&dir, "two.csv", TWO);
    let o = run(&["compare", "--dataset", p(&data), "--expr", "x and y", "--step", "16"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with("omega,minkowski,t_min,t_prod,t_luk,frechet_ok\n"));
    let r = rows(&out);
    assert_eq!(r[1], ["16", "0.500000", "0.500000", "0.500000", "0.500000", "true"]);
    assert!(out.lines().last().unwrap().starts_with("# max_deviation t_min="));
}

#[test]
fn compare_identical_rows_matches_minimum() {
    let dir = TempDir::new().unwrap();
    let data = fixture(
        &dir,
        "same.csv",
        "subject,name,lo,hi\na,x,10,30\na,y,10,30\nb,x,20,50\nb,y,20,50\nc,x,5,12\nc,y,5,12\n",
    );
    let out = stdout(&run(&["compare", "--dataset", p(&data), "--expr", "x and y"]));
    let r = rows(&out);
    assert_eq!(r.len(), 80);
    for row in &r {
        assert_eq!(row[1], row[2], "{row:?}");
        assert_eq!(row[5], "true");
    }
    assert!(out.contains("t_min=0.000000"));
}

#[test]
fn compare_disjoint_rows_hits_lukasiewicz_floor() {
    let dir = TempDir::new().unwrap();
    let data = fixture(
        &dir,
        "disjoint.csv",
        "subject,name,lo,hi\na,x,0,20\na,y,20,40\nb,x,10,30\nb,y,30,60\n",
    );
    let out = stdout(&run(&["compare", "--dataset", p(&data), "--expr", "x and y", "--step", "1"]));
    for row in rows(&out) {
        assert_eq!(row[1], "0.000000");
        let (tmin, tluk): (f64, f64) = (row[2].parse().unwrap(), row[4].parse().unwrap());
        assert_eq!(tluk, 0.0);
        assert!(tmin >= 0.0);
        assert_eq!(row[5], "true");
    }
}

#[test]
fn compare_rejects_other_shapes() {
    let dir = TempDir::new().unwrap();
    let data = fixture(&dir, "two.csv", TWO);
    for expr in ["x and x", "not x", "x xor y", "x and (y or x)"] {
        let o = run(&["compare", "--dataset", p(&data), "--expr", expr]);
        assert_eq!(o.status.code(), Some(1), "{expr}");
        assert!(stderr(&o).contains("UnsupportedComparison"));
    }
}

#[test]
fn example_generation() {
    let a = run(&["example", "--seed", "1", "--subjects", "71"]);
    let b = run(&["example", "--seed", "1", "--subjects", "71"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(rows(&stdout(&a)).len(), 142);
    let c = run(&["example", "--seed", "2"]);
    assert_ne!(a.stdout, c.stdout);
    let zero = run(&["example", "--subjects", "0"]);
    assert_eq!(zero.status.code(), Some(2));
    assert!(stderr(&zero).contains("population is empty"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["eval", "--expr", "x"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
