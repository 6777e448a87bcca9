use wlevels::cli::{run, Report};

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("wlevels").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn assert_no_floats(value: &serde_json::Value) {
    match value {
        serde_json::Value::Number(n) => panic!("numeric JSON value {n}"),
        serde_json::Value::Array(items) => items.iter().for_each(assert_no_floats),
        serde_json::Value::Object(map) => map.values().for_each(assert_no_floats),
        _ => {}
    }
}

#[test]
fn levels_lists_three_tagged_levels() {
    let (code, out, _) = invoke(&["levels", "--hook", "3", "2"]);
    assert_eq!(code, 0);
    for cell in ["-15/4", "H1", "-10/3", "H4", "-3", "H2=H3"] {
        assert!(out.contains(cell), "missing {cell} in\n{out}");
    }
}

#[test]
fn collapse_rectangle_reports_target() {
    let (code, out, _) = invoke(&["collapse", "--rect", "2", "3", "--level", "-4"]);
    assert_eq!(code, 0);
    assert!(out.contains("V_{-2}(sl(3))"), "{out}");
}

#[test]
fn admissible_hook_reports_form() {
    let (code, out, _) = invoke(&["admissible", "--hook", "3", "2", "--level", "-15/4", "--json"]);
    assert_eq!(code, 0);
    let report = Report::from_json(&out).unwrap();
    let cells: Vec<&String> = report.sections.iter().flat_map(|s| s.rows.iter().flatten()).collect();
    for want in ["5", "4", "2"] {
        assert!(cells.iter().any(|c| c.as_str() == want), "{want} not in {cells:?}");
    }
}

#[test]
fn json_round_trips_and_has_no_numbers() {
    for args in [
        &["info", "--partition", "3,1,1", "--json"][..],
        &["levels", "--rect", "3", "2", "--json"],
        &["collapse", "--hook", "3", "3", "--level", "-7/2", "--json"],
        &["decompose", "--hook", "4", "3", "--case", "1", "--json"],
        &["verify-paper", "--only", "tables", "--json"],
    ] {
        let (code, out, _) = invoke(args);
        assert_eq!(code, 0, "{args:?}");
        let report = Report::from_json(&out).unwrap();
        assert_eq!(report.to_json() + "\n", out);
        assert_no_floats(&serde_json::from_str(&out).unwrap());
    }
}

#[test]
fn verify_paper_only_filters_sections() {
    let (code, out, _) = invoke(&["verify-paper", "--only", "tables", "--json"]);
    assert_eq!(code, 0);
    let report = Report::from_json(&out).unwrap();
    assert!(!report.checks.is_empty());
    assert!(report.checks.iter().all(|c| c.section == "tables" && c.passed));
}

#[test]
fn exit_codes() {
    assert_eq!(invoke(&["levels", "--partition", "0,1"]).0, 2);
    assert_eq!(invoke(&["collapse", "--hook", "3", "2", "--level", "abc"]).0, 2);
    assert_eq!(invoke(&["decompose", "--hook", "3", "2", "--case", "3"]).0, 2);
    assert_eq!(invoke(&["levels", "--hook", "3", "2", "--rect", "2", "2"]).0, 2);
    assert_eq!(invoke(&["verify-paper", "--only", "nonsense"]).0, 2);
    assert_eq!(invoke(&["frobnicate"]).0, 2);

    let (code, _, err) = invoke(&["collapse", "--hook", "3", "2", "--level", "1"]);
    assert_eq!(code, 1);
    assert!(err.contains("c(k) = -58") && err.contains("c_coset(k) = 14/5"), "{err}");

    let (code, out, _) = invoke(&["decompose", "--hook", "3", "2", "--case", "1"]);
    assert_eq!(code, 1);
    assert!(out.contains("R^(4)"), "{out}");
}
