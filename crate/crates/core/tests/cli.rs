use std::process::{Command, Output};

use brauerkit::cli::{main_with_args, parse_arrow, parse_term, render_sk};
use brauerkit::corpus::exhaustive;
use brauerkit::diagram::{canonicalize, SKDiagram};
use brauerkit::semantics::eval_kappa;
use brauerkit::term::{nf_to_term, normalize_rewrite, GenKind, Generator, Term};
use proptest::prelude::*;

fn brauerkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brauerkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn in_process(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("brauerkit").chain(args.iter().copied());
    let code = main_with_args(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn equality_exit_codes() {
    assert_eq!(brauerkit(&["eq", "s1 s2 s1", "s2 s1 s2", "--monoid", "sk"]).status.code(), Some(0));
    assert_eq!(brauerkit(&["eq", "c", "1", "--monoid", "sk"]).status.code(), Some(1));
    assert_eq!(brauerkit(&["eq", "c", "1", "--monoid", "sj"]).status.code(), Some(0));
    assert_eq!(in_process(&["eq", "u1 n1", "u3 n3"]).0, 0);
    assert_eq!(in_process(&["eq", "s1", "1"]).0, 1);
}

#[test]
fn perm_prints_factorially_many_forms() {
    let o = brauerkit(&["perm", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 24);
    let mut distinct = lines.clone();
    distinct.sort();
    distinct.dedup();
    assert_eq!(distinct.len(), 24);
    for line in &lines {
        let t = parse_term(line).unwrap();
        assert!(t.generators().iter().all(|g| g.kind() == GenKind::Cross && g.index() <= 3));
        assert_eq!(normalize_rewrite(&t).to_string(), *line);
    }
}

#[test]
fn input_errors_exit_with_two() {
    for args in [
        vec!["normalize", "s0"],
        vec!["normalize", "s1 q"],
        vec!["normalize", "s1", "--bogus"],
        vec!["eq", "s1"],
        vec!["diag", "x[1,2]"],
        vec!["matrix", "phi0 o phi0"],
        vec!["matrix", "chi0", "--p", "1"],
        vec!["verify", "--suite", "everything"],
        vec!["frobnicate"],
    ] {
        let (code, _, err) = in_process(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
    let (_, _, err) = in_process(&["normalize", "s1 s0"]);
    assert!(err.contains("position 4"), "{err}");
}

#[test]
fn matrix_output_and_cap() {
    let (code, out, _) = in_process(&["matrix", "phi0", "--p", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r#"{"rows":1,"cols":4,"entries":[["1","0","0","1"]]}"#);
    let (code, out, _) = in_process(&["matrix", "phi0 o gamma0", "--p", "3"]);
    assert_eq!((code, out.trim()), (0, r#"{"rows":1,"cols":1,"entries":[["3"]]}"#));
    let (code, out, _) = in_process(&["matrix", "phi0 o gamma0", "--p", "3", "--semiring", "bool"]);
    assert_eq!((code, out.trim()), (0, r#"{"rows":1,"cols":1,"entries":[["1"]]}"#));
    assert_eq!(in_process(&["matrix", "id6", "--dim-cap", "32"]).0, 4);
    assert_eq!(in_process(&["matrix", "id5", "--dim-cap", "32"]).0, 0);
    let o = Command::new(env!("CARGO_BIN_EXE_brauerkit"))
        .args(["matrix", "id6"])
        .env("BRAUERKIT_DIM_CAP", "16")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn normalize_formats_and_engines() {
    for engine in ["rewrite", "diagram", "both"] {
        let (code, out, _) = in_process(&["normalize", "s2 s1 s2 u1 n1", "--engine", engine]);
        assert_eq!((code, out.as_str()), (0, "c 1 x[1,1] x[2,1]\n"), "{engine}");
    }
    let (code, out, _) = in_process(&["normalize", "c s1", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r#"{"circles":1,"caps":[],"crossings":[[1,1]],"cups":[]}"#);
}

#[test]
fn diagram_json_matches_the_pair_list() {
    let (code, out, _) = in_process(&["diag", "u2 n1 s1", "--format", "json"]);
    assert_eq!(code, 0);
    let d = brauerkit::Diagram::from_json(out.trim()).unwrap();
    assert_eq!(d, eval_kappa(&parse_term("u2 n1 s1").unwrap()).diagram);
    let (_, out, _) = in_process(&["diag", "c c", "--format", "json", "--sk"]);
    assert_eq!(out.trim(), r#"{"top":0,"bottom":0,"pairs":[],"circles":2}"#);
}

#[test]
fn ascii_rendering_lists_every_point() {
    let (code, out, _) = in_process(&["diag", "u2 n1 s1 c", "--sk"]);
    assert_eq!(code, 0);
    assert_eq!(out, render_sk(&eval_kappa(&parse_term("u2 n1 s1 c").unwrap())));
    assert!(out.ends_with("circles: 1\n"));
    let (_, identity, _) = in_process(&["diag", "1"]);
    assert_eq!(identity, "⋯\n⋯\n");

    // composite of the two diagrams from the composition example
    let composite = SKDiagram::new(
        canonicalize(6, 4, &[(1, -3), (2, 3), (4, -2), (5, -1), (6, -4)]).unwrap(),
        1,
    );
    let picture = render_sk(&composite);
    let lines: Vec<&str> = picture.lines().collect();
    // the thread {6,-4} belongs to the implicit tail
    assert_eq!(lines[0], "1 2 3 4 5 ⋯");
    assert_eq!(lines[lines.len() - 2], "1 2 3 ⋯");
    assert!(lines[1].starts_with("| \\_/"), "{picture}");
}

#[test]
fn verify_suites_pass() {
    for suite in ["group", "adjunction"] {
        let (code, out, _) = in_process(&["verify", "--suite", suite, "--max-len", "3", "--max-index", "2"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains(": ok"), "{out}");
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["perm", "--n", "5"],
        vec!["diag", "u3 s1 n2 s2 u1"],
        vec!["verify", "--suite", "subsided", "--seed", "11"],
    ] {
        assert_eq!(brauerkit(&args).stdout, brauerkit(&args).stdout, "{args:?}");
    }
}

#[test]
fn printed_terms_parse_back() {
    for t in exhaustive(3, 4) {
        assert_eq!(parse_term(&t.to_string()).unwrap(), t);
        let nf = normalize_rewrite(&t);
        assert_eq!(parse_term(&nf.to_string()).unwrap(), nf_to_term(&nf));
    }
}

proptest! {
    #[test]
    fn random_terms_parse_back(gens in prop::collection::vec((0..3u8, 1..=40u32), 0..20)) {
        let t: Term = gens
            .into_iter()
            .map(|(kind, k)| Generator::new([GenKind::Cup, GenKind::Cap, GenKind::Cross][kind as usize], k))
            .collect();
        prop_assert_eq!(parse_term(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn arrows_parse_back(i in any::<prop::sample::Index>()) {
        let arrows = brauerkit::adjunction::enumerate::enumerate_arrows(2, 4);
        let f = i.get(&arrows);
        prop_assert_eq!(&parse_arrow(&f.to_string()).unwrap(), f);
    }
}
