use std::path::Path;
use std::process::{Command, Output};

use folia::birational::BirationalMap;
use folia::cubic::trivolution_discriminant;
use folia::foliation::Foliation;
use folia::parse::{parse_polynomial, Bindings};
use folia::{CyclotomicField, Field};
use serde_json::Value;

fn k12() -> Field {
    CyclotomicField::new(12)
}

fn folia(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_folia")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = folia(&full);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).unwrap()
}

fn map(text: &str) -> BirationalMap {
    BirationalMap::parse(text, &k12(), &Bindings::new()).unwrap()
}

#[test]
fn trivolution_of_the_cube_field() {
    let out = folia(&["trivolution", "--field", "x^3,1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("period_3: true"));
    assert!(text.contains("composition_is_identity: true"));
    let v = json(&["trivolution", "--field", "x^3,1"]);
    assert_eq!(v["t"]["degree"], 3);
    let t = map(v["t"]["homogeneous"].as_str().unwrap());
    let t2 = map(v["t_squared"]["homogeneous"].as_str().unwrap());
    let expected = map("(j*x, y + (j - 1)/x^2)");
    let expected_square = map("(j^2*x, y + (2*j + 1)/(j^2*x^2))");
    assert!(
        (t.projective_equal(&expected) && t2.projective_equal(&expected_square))
            || (t.projective_equal(&expected_square) && t2.projective_equal(&expected))
    );
}

#[test]
fn jouanolou_involution_from_builtin() {
    let v = json(&["involution", "--builtin", "jouanolou2"]);
    assert_eq!(v["involution"]["degree"], 8);
    assert_eq!(v["period_2"], true);
    assert_eq!(v["matches_builtin"], true);
    let fixed = parse_polynomial(v["fixed_curve"].as_str().unwrap(), &k12()).unwrap();
    assert!(fixed.is_proportional(&parse_polynomial("3*x^2*y^2*z^2 - x*y^5 - x^5*z - y*z^5", &k12()).unwrap()));
    assert_eq!(v["indeterminacy"]["at_infinity"], "1");
}

#[test]
fn json_polynomials_parse_back() {
    let v = json(&["trivolution", "--builtin", "degree-four"]);
    let f = Foliation::from_components(
        parse_polynomial("x^3", &k12()).unwrap(),
        parse_polynomial("1 + x + x^2/3", &k12()).unwrap(),
    )
    .unwrap();
    let disc = trivolution_discriminant(&f).unwrap();
    for (key, value) in [("a", &disc.a), ("b", &disc.b), ("c", &disc.c), ("discriminant", &disc.delta)] {
        assert_eq!(&parse_polynomial(v[key].as_str().unwrap(), &k12()).unwrap(), value, "{key}");
    }
    let t = map(v["t"]["affine"].as_str().unwrap());
    assert!(t.projective_equal(&map(v["t"]["homogeneous"].as_str().unwrap())));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["--format", "json", "trivolution", "--builtin", "hamiltonian-quartic"][..],
        &["seven-points", "--points", "1/2,3/4;3/4,1/2;4/3,2/3"][..],
        &["scan", "--alpha", "-1", "--grid", "-1,1,2"][..],
    ] {
        assert_eq!(folia(args).stdout, folia(args).stdout);
    }
}

#[test]
fn seven_points_report() {
    let v = json(&["seven-points", "--points", "1/2,3/4;3/4,1/2;4/3,2/3"]);
    assert_eq!(v["agrees_with_tangency_construction"], true);
    assert_eq!(v["period_2"], true);
    assert_eq!(v["coefficients"]["e"], "2/11");
    let affine = map(v["involution"]["affine"].as_str().unwrap());
    assert!(affine.projective_equal(&map(v["involution"]["homogeneous"].as_str().unwrap())));
}

#[test]
fn family_and_scan() {
    let v = json(&["family", "--alpha", "-1", "--lambda", "1", "--mu", "1", "--nu", "1"]);
    assert_eq!(v["r"], serde_json::json!(["12", "0", "24", "0", "12"]));
    assert_eq!(v["square"], true);
    assert_eq!(v["jacobian_rank"], 4);
    let v = json(&["scan", "--alpha", "-1", "--grid", "-1,-1/2,1/2,1,2"]);
    assert_eq!(v["consistent"], true);
    assert!(v["points"].as_u64().unwrap() > 100);
}

#[test]
fn web_check_of_the_cube_trivolution() {
    let v = json(&["web-check", "--f0", "y + 1/(2*x^2)", "--field", "x^3,1"]);
    assert_eq!(v["hexagonal"], true);
    let v = json(&["web-check", "--f0", "y", "--map", "trivolution-cube"]);
    assert_eq!(v["hexagonal"], true);
}

#[test]
fn reverse_construction() {
    let v = json(&["involution", "--map", "jonquieres"]);
    assert_eq!(v["degree"], 4);
    let v = json(&["involution", "--map", "(1/x, 1/y)"]);
    assert_eq!(v["degree"], 2);
}

#[test]
fn parse_and_builtins() {
    let v = json(&["parse", "--expr", "(x + j*y)^2"]);
    let p = parse_polynomial(v["expression"].as_str().unwrap(), &k12()).unwrap();
    assert_eq!(p, parse_polynomial("x^2 + 2*j*x*y + j^2*y^2", &k12()).unwrap());
    assert_eq!(json(&["parse", "--builtin", "omega1"])["name"], "omega1");
    let v = json(&["--conductor", "84", "parse", "--expr", "zeta(84)^84"]);
    assert_eq!(v["expression"], "1");
}

#[test]
fn exit_codes() {
    assert_eq!(folia(&["parse", "--expr", "x + * y"]).status.code(), Some(2));
    assert_eq!(folia(&["parse", "--expr", "w + 1"]).status.code(), Some(2));
    assert_eq!(folia(&["trivolution", "--builtin", "nonexistent"]).status.code(), Some(2));
    assert_eq!(folia(&["trivolution", "--builtin", "jouanolou2"]).status.code(), Some(3));
    assert_eq!(folia(&["involution", "--map", "(j*x, y)"]).status.code(), Some(1));
    assert_eq!(folia(&["family", "--alpha", "0", "--lambda", "1", "--mu", "1", "--nu", "1"]).status.code(), Some(3));
}

#[test]
fn jouanolou3_has_no_trivolution() {
    let v = json(&["trivolution", "--builtin", "jouanolou3"]);
    assert_eq!(v["square"], false);
}

fn copy_dir(from: &Path, to: &Path) {
    std::fs::create_dir_all(to).unwrap();
    for entry in std::fs::read_dir(from).unwrap() {
        let entry = entry.unwrap();
        std::fs::copy(entry.path(), to.join(entry.file_name())).unwrap();
    }
}

#[test]
fn verify_passes_and_detects_a_changed_golden_file() {
    let out = folia(&["verify"]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(!text.contains("FAIL"));
    assert!(text.contains("all_passed: true"));

    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("golden");
    let scratch = std::env::temp_dir().join(format!("folia-golden-{}", std::process::id()));
    copy_dir(&golden, &scratch);
    std::fs::write(scratch.join("trivolution-cube.txt"), "tampered\n").unwrap();
    let out =
        Command::new(env!("CARGO_BIN_EXE_folia")).arg("verify").env("FOLIA_GOLDEN_DIR", &scratch).output().unwrap();
    std::fs::remove_dir_all(&scratch).unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL golden trivolution-cube.txt"));
}
