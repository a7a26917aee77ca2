use std::io::Write as _;
use std::process::Command;

use extremal_cli::{parse_pointset, run, serialize_pointset};
use extremal_core::PointSet;
use proptest::prelude::*;
use serde_json::{json, Value};

const DIAGONAL: &str = "2 2\n0 0\n1 1\n";
const DOWN_SET: &str = "2 2\n0 0\n1 0\n0 1\n";

struct Outcome {
    code: u8,
    stdout: String,
    stderr: String,
}

fn call_with(args: &[&str], stdin: &str, guard: Option<&str>) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("extremal").chain(args.iter().copied());
    let code = run(argv, guard, &mut stdin.as_bytes(), &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn call(args: &[&str], stdin: &str) -> Outcome {
    call_with(args, stdin, None)
}

fn json_of(args: &[&str], stdin: &str) -> Value {
    let mut a = vec!["--json"];
    a.extend_from_slice(args);
    let o = call(&a, stdin);
    assert_eq!(o.code, 0, "{}", o.stderr);
    serde_json::from_str(&o.stdout).unwrap()
}

#[test]
fn diagonal_extremal_json_is_exact() {
    let o = call(&["--json", "extremal"], DIAGONAL);
    assert_eq!(o.code, 0);
    assert_eq!(
        o.stdout,
        "{\"extremal\":false,\"witness_orders\":[[1,2],[2,1]]}\n"
    );
}

#[test]
fn sm_with_reversed_order() {
    let o = call(&["sm", "--order", "2,1"], DIAGONAL);
    assert_eq!((o.code, o.stdout.as_str()), (0, "1\nx1\n"));
    let o = call(&["sm"], DIAGONAL);
    assert_eq!(o.stdout, "1\nx2\n");
}

#[test]
fn sm_oracle_and_all_orders() {
    let o = call(&["sm", "--oracle", "--all-orders"], DIAGONAL);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout, "1,2: 1, x2\n2,1: 1, x1\n");
    let v = json_of(&["sm", "--all-orders"], DOWN_SET);
    assert_eq!(
        v,
        json!({"results": [
            {"order": [1, 2], "monomials": ["1", "x1", "x2"]},
            {"order": [2, 1], "monomials": ["1", "x1", "x2"]},
        ]})
    );
}

#[test]
fn duplicates_are_reported() {
    let o = call(&["sm"], "2 2\n0 0\n0 0\n");
    assert_eq!(o.code, 0);
    assert!(o.stderr.contains("1 duplicate"), "{}", o.stderr);
    assert_eq!(o.stdout, "1\n");
}

#[test]
fn groebner_precondition_and_force() {
    let o = call(&["groebner"], DIAGONAL);
    assert_eq!(o.code, 3);
    assert!(
        o.stderr.contains("(1,2)") && o.stderr.contains("(2,1)"),
        "{}",
        o.stderr
    );

    let v = json_of(&["groebner", "--force", "--order", "2,1"], DIAGONAL);
    assert_eq!(v["order_free"], json!(false));
    assert_eq!(v["order"], json!([2, 1]));

    let v = json_of(&["groebner"], DOWN_SET);
    assert_eq!(
        v,
        json!({
            "order_free": true,
            "order": null,
            "generators": [
                {"lead": "x1^2", "polynomial": "x1^2 - x1", "terms": [
                    {"exponents": [2, 0], "coefficient": "1"},
                    {"exponents": [1, 0], "coefficient": "-1"},
                ]},
                {"lead": "x1*x2", "polynomial": "x1*x2", "terms": [
                    {"exponents": [1, 1], "coefficient": "1"},
                ]},
                {"lead": "x2^2", "polynomial": "x2^2 - x2", "terms": [
                    {"exponents": [0, 2], "coefficient": "1"},
                    {"exponents": [0, 1], "coefficient": "-1"},
                ]},
            ]
        })
    );
}

#[test]
fn groebner_terms_carry_fractions() {
    // Sm = {1, x1, x1^2}; x1^3 = 3*x1^2 - 2*x1 on {0, 1, 2}.
    let v = json_of(&["groebner"], "1 3\n0\n1\n2\n");
    assert_eq!(v["generators"][0]["polynomial"], json!("x1^3 - 3*x1^2 + 2*x1"));
    // With x1 > x2 the set {(0,0), (1,2)} has Sm = {1, x2} and x1 = x2/2.
    let v = json_of(&["groebner", "--force"], "2 3\n0 0\n1 2\n");
    let coefficients: Vec<String> = v["generators"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|g| g["terms"].as_array().unwrap().clone())
        .map(|t| t["coefficient"].as_str().unwrap().to_string())
        .collect();
    assert!(coefficients.contains(&"-1/2".to_string()), "{coefficients:?}");
}

#[test]
fn set_system_input() {
    let cube = "2\n-\n1\n2\n1 2\n";
    let v = json_of(&["groebner", "--sets"], cube);
    let polys: Vec<&str> = v["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g["polynomial"].as_str().unwrap())
        .collect();
    assert_eq!(polys, ["x1^2 - x1", "x2^2 - x2"]);

    let v = json_of(&["shatter", "--sets"], "3\n1 2\n2 3\n");
    assert_eq!(v["shattered"], json!([[], [1], [3]]));
    assert_eq!(v["extremal_gap"], json!(1));
    assert_eq!(v["s_extremal"], json!(false));

    // {1,2} and {2,3} is extremal as a point set but not shattering-extremal.
    assert_eq!(call(&["groebner", "--sets"], "3\n1 2\n2 3\n").code, 3);
}

#[test]
fn downshift_sequence() {
    let o = call(&["downshift", "--seq", "1,2"], "2 3\n0 2\n2 1\n1 1\n");
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout, "2 3\n0 0\n1 0\n2 0\n");
    let v = json_of(&["downshift", "--seq", "2"], DIAGONAL);
    assert_eq!(v, json!({"n": 2, "k": 2, "points": [[0, 0], [1, 0]]}));
}

#[test]
fn shatter_and_vcdim() {
    let o = call(&["shatter"], DOWN_SET);
    assert_eq!(
        o.stdout,
        "shattered: {} {1} {2}\nvc_dim: 1\nextremal_gap: 0\ns_extremal: true\n"
    );
    let v = json_of(&["vcdim"], "2 3\n0 0\n1 1\n2 2\n");
    assert_eq!(
        v,
        json!({"vc_dim": 1, "extremal_gap": 0, "s_extremal": null})
    );
    let v = json_of(&["vcdim"], "2 2\n");
    assert_eq!(v["vc_dim"], json!(-1));
}

#[test]
fn extremal_methods_and_verbose() {
    for m in ["fast", "brute", "downshift", "all"] {
        let v = json_of(&["extremal", "--method", m], DIAGONAL);
        assert_eq!(v["extremal"], json!(false), "{m}");
        let v = json_of(&["extremal", "--method", m], DOWN_SET);
        assert_eq!(v, json!({"extremal": true, "sm": ["1", "x1", "x2"]}), "{m}");
    }
    let v = json_of(&["extremal", "--verbose"], DIAGONAL);
    assert_eq!(
        v["per_order_sm"],
        json!([
            {"order": [1, 2], "sm": ["1", "x2"]},
            {"order": [2, 1], "sm": ["1", "x1"]},
        ])
    );
    let o = call(&["extremal", "--verbose"], DIAGONAL);
    assert_eq!(
        o.stdout,
        "extremal: false\nwitness_orders: 1,2 2,1\norder 1,2: 1, x2\norder 2,1: 1, x1\n"
    );
}

#[test]
fn census_counts() {
    let v = json_of(&["census", "-n", "2", "-k", "2"], "");
    assert_eq!(v["subsets"], json!(16));
    assert_eq!(v["extremal"], json!(14));
    assert_eq!(
        v["non_extremal"],
        json!([[[0, 1], [1, 0]], [[0, 0], [1, 1]]])
    );
    let v = json_of(&["census", "-n", "1", "-k", "2", "--predicate", "all"], "");
    assert_eq!(v["extremal"], json!(4));
    assert_eq!(
        v["rows"][1],
        json!({"size": 1, "subsets": 2, "extremal": 2, "matched": 2})
    );
}

#[test]
fn reduce_normal_form() {
    let o = call(&["reduce", "--poly", "x1*x2 + x1^2 - 1"], DOWN_SET);
    assert_eq!((o.code, o.stdout.as_str()), (0, "x1 - 1\n"));
    let v = json_of(&["reduce", "--poly", "-x1*x2"], DOWN_SET);
    assert_eq!(v["vanishes_on_input"], json!(true));
    assert_eq!(v["normal_form"], json!("0"));
    assert_eq!(call(&["reduce", "--poly", "x1"], DIAGONAL).code, 3);
    // With x2 > x1 the diagonal has Sm = {1, x1} and x2 - x1 in the basis.
    let o = call(
        &["reduce", "--force", "--poly", "x2", "--order", "2,1"],
        DIAGONAL,
    );
    assert_eq!((o.code, o.stdout.as_str()), (0, "x1\n"));
    assert_eq!(call(&["reduce", "--poly", "x3"], DOWN_SET).code, 2);
}

#[test]
fn exit_code_table() {
    let cases: &[(&[&str], &str, Option<&str>, u8)] = &[
        (&["sm"], DIAGONAL, None, 0),
        (&["--help"], "", None, 0),
        (&[], "", None, 1),
        (&["frobnicate"], "", None, 1),
        (&["sm", "--order", "1,1"], DIAGONAL, None, 1),
        (&["sm", "--order", "x"], DIAGONAL, None, 1),
        (&["downshift", "--seq", "3"], DIAGONAL, None, 1),
        (&["extremal", "--method", "magic"], DIAGONAL, None, 1),
        (&["sm", "--guard", "nonsense"], DIAGONAL, None, 1),
        (&["sm"], DIAGONAL, Some("factorial=x"), 1),
        (&["sm"], "", None, 2),
        (&["sm"], "2 2\n0 2\n", None, 2),
        (&["sm"], "2 2\n0 -1\n", None, 2),
        (&["sm"], "2 2\n0\n", None, 2),
        (&["sm"], "two 2\n", None, 2),
        (&["sm", "/nonexistent/file"], "", None, 2),
        (&["groebner"], DIAGONAL, None, 3),
        (&["census", "-n", "3", "-k", "3"], "", None, 4),
        (
            &["extremal", "--method", "brute"],
            "9 2\n0 0 0 0 0 0 0 0 0\n",
            None,
            4,
        ),
        (
            &["extremal", "--method", "brute"],
            "9 2\n0 0 0 0 0 0 0 0 0\n",
            Some("9"),
            0,
        ),
        (
            &["--guard", "8", "extremal", "--method", "brute"],
            "9 2\n0 0 0 0 0 0 0 0 0\n",
            Some("9"),
            4,
        ),
        (&["census", "-n", "1", "-k", "3"], "", Some("census=2"), 4),
        (&["sm", "--all-orders"], "9 2\n", None, 4),
        (&["extremal"], "9 2\n0 0 0 0 0 0 0 0 0\n", None, 0),
    ];
    for (args, stdin, guard, want) in cases {
        let o = call_with(args, stdin, *guard);
        assert_eq!(o.code, *want, "{args:?} with {guard:?}: {}", o.stderr);
        if *want != 0 {
            assert!(!o.stderr.is_empty(), "{args:?} printed no diagnostic");
        }
    }
}

#[test]
fn input_errors_carry_line_numbers() {
    let o = call(&["sm"], "# header next\n2 2\n0 0\n0 5\n");
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("line 4"), "{}", o.stderr);
}

#[test]
fn reads_files() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(DIAGONAL.as_bytes()).unwrap();
    let path = f.path().to_str().unwrap();
    let o = call(&["sm", "--order", "2,1", path], "");
    assert_eq!(o.stdout, "1\nx1\n");
}

/// Text and JSON renderings carry the same fields.
#[test]
fn text_and_json_agree() {
    for input in [DIAGONAL, DOWN_SET, "3 3\n0 1 2\n2 2 0\n1 0 0\n1 1 1\n"] {
        let n: usize = input.split_whitespace().next().unwrap().parse().unwrap();
        let reversed: Vec<String> = (1..=n).rev().map(|i| i.to_string()).collect();
        let order = reversed.join(",");
        let text = call(&["sm", "--order", &order], input);
        let js = json_of(&["sm", "--order", &order], input);
        let from_json: Vec<&str> = js["monomials"]
            .as_array()
            .unwrap()
            .iter()
            .map(|m| m.as_str().unwrap())
            .collect();
        assert_eq!(text.stdout.lines().collect::<Vec<_>>(), from_json);

        let text = call(&["vcdim"], input).stdout;
        let js = json_of(&["vcdim"], input);
        let s_ext = match &js["s_extremal"] {
            Value::Bool(b) => b.to_string(),
            _ => "n/a".into(),
        };
        assert_eq!(
            text,
            format!(
                "vc_dim: {}\nextremal_gap: {}\ns_extremal: {s_ext}\n",
                js["vc_dim"], js["extremal_gap"]
            )
        );

        let text = call(&["extremal"], input).stdout;
        let js = json_of(&["extremal"], input);
        assert!(text.starts_with(&format!("extremal: {}\n", js["extremal"])));
        if let Some(sm) = js["sm"].as_array() {
            let joined: Vec<&str> = sm.iter().map(|m| m.as_str().unwrap()).collect();
            assert!(text.contains(&format!("sm: {}\n", joined.join(", "))));
        }
        if let Some(w) = js["witness_orders"].as_array() {
            let fmt = |o: &Value| {
                o.as_array()
                    .unwrap()
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            };
            assert!(text.contains(&format!("witness_orders: {} {}\n", fmt(&w[0]), fmt(&w[1]))));
        }
    }
}

#[test]
fn binary_exit_codes_and_env_guard() {
    let bin = env!("CARGO_BIN_EXE_extremal");
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(b"9 2\n0 0 0 0 0 0 0 0 0\n").unwrap();
    let path = f.path();
    let status = |env: Option<&str>| {
        let mut c = Command::new(bin);
        c.args(["extremal", "--method", "brute"]).arg(path);
        c.env_remove("EXTREMAL_GUARD");
        if let Some(g) = env {
            c.env("EXTREMAL_GUARD", g);
        }
        c.output().unwrap()
    };
    assert_eq!(status(None).status.code(), Some(4));
    let ok = status(Some("factorial=9"));
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(
        String::from_utf8_lossy(&ok.stdout),
        "extremal: true\nsm: 1\n"
    );
}

fn point_set() -> impl Strategy<Value = PointSet> {
    (1usize..=4, 1u32..=5).prop_flat_map(|(n, k)| {
        prop::collection::vec(prop::collection::vec(0..k, n), 0..20)
            .prop_map(move |pts| PointSet::new(n, k, pts).unwrap())
    })
}

proptest! {
    #[test]
    fn serialization_round_trips(v in point_set()) {
        let parsed = parse_pointset(&serialize_pointset(&v)).unwrap();
        prop_assert_eq!(parsed.duplicates, 0);
        prop_assert_eq!(parsed.points, v);
    }
}
