use std::io::Cursor;

use dyck_bijections::cli::run;

fn dyck(args: &[&str]) -> (i32, String, String) {
    dyck_stdin(args, "")
}

fn dyck_stdin(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut input = Cursor::new(stdin.as_bytes().to_vec());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("dyck").chain(args.iter().copied());
    let code = run(argv, &mut input, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn verify_long_interior_csv() {
    let (code, out, _) = dyck(&["verify", "long-interior", "--n-max", "7", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(
        lines.next(),
        Some("identity,n,j,k,formula,enumerated,transported")
    );
    let n7: Vec<&str> = out
        .lines()
        .filter(|l| l.starts_with("long-interior,7,"))
        .collect();
    let formula: Vec<&str> = n7.iter().map(|l| l.split(',').nth(4).unwrap()).collect();
    assert_eq!(formula, ["7", "70", "175", "140", "35", "2"]);
    assert!(n7.iter().all(|l| {
        let f: Vec<&str> = l.split(',').collect();
        f[4] == f[5] && f[5] == f[6]
    }));
}

#[test]
fn stats_all() {
    let (code, out, _) = dyck(&["stats", "UUDUDUUDDDUD", "--all"]);
    assert_eq!(code, 0);
    for want in [
        "peaks=4",
        "valleys=3",
        "dxd=3",
        "hills=1",
        "long_interior_inclines=2",
    ] {
        assert!(
            out.lines().any(|l| l.trim() == want),
            "missing {want} in\n{out}"
        );
    }
}

#[test]
fn stats_over_family() {
    let (code, out, err) = dyck(&[
        "stats",
        "--family",
        "dyck:7",
        "--stat",
        "long_interior_inclines",
    ]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("7 70 175 140 35 2"), "{out}");
}

#[test]
fn biject_basics() {
    assert_eq!(dyck(&["biject", "du-to-dxd", "UD"]).1, "UD\n");
    let (code, out, _) = dyck(&["biject", "reverse", "UUDUDD"]);
    assert_eq!((code, out.as_str()), (0, "UUDUDD\n"));
    let (_, fwd, _) = dyck(&["biject", "dimer-to-hill", "UUUDUDDD"]);
    assert_eq!(fwd, "UUUDUDDD\n");
}

#[test]
fn biject_reads_stdin() {
    let (code, out, _) = dyck_stdin(&["biject", "deutsch", "--stdin"], "UUDD\nUDUD\n");
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 2);
}

#[test]
fn finelike_figure() {
    let (code, out, _) = dyck(&[
        "biject",
        "finelike-to-fine",
        "UUUUUDDDUUDDUUUDDDDDUUDD 2,3,4",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "UUDUDUDUUDDUUUDDDUDDUUDD");
}

#[test]
fn table_sequences() {
    let (_, out, _) = dyck(&[
        "table",
        "little-schroder",
        "--format",
        "bfile",
        "--n-max",
        "6",
    ]);
    let values: Vec<&str> = out.lines().map(|l| l.split(' ').nth(1).unwrap()).collect();
    assert_eq!(values, ["1", "1", "3", "11", "45", "197", "903"]);
    let (_, out, _) = dyck(&["table", "fine", "--format", "bfile", "--n-max", "6"]);
    assert!(out.ends_with("6 57\n"), "{out}");
}

#[test]
fn render_ascii() {
    let (code, out, _) = dyck(&["render", "UUDD"]);
    assert_eq!(code, 0);
    assert_eq!(out, " /\\\n/  \\\n");
}

#[test]
fn enumerate_counts() {
    let (_, out, _) = dyck(&["enumerate", "dyck:5", "--count-only"]);
    assert_eq!(out.trim(), "42");
    let (_, out, _) = dyck(&["enumerate", "schroder:1"]);
    let mut got: Vec<&str> = out.lines().collect();
    got.sort_unstable();
    assert_eq!(got, ["F", "UD"]);
}

#[test]
fn verify_passes_exit_zero() {
    let (code, out, _) = dyck(&["verify", "interior-strict", "--n-max", "3"]);
    assert_eq!(code, 0, "{out}");
    let (code, _, _) = dyck(&["verify", "bijections", "--n-max", "4"]);
    assert_eq!(code, 0);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(dyck(&["biject", "nope", "UD"]).0, 2);
    assert_eq!(dyck(&["stats", "UUD"]).0, 2);
    assert_eq!(dyck(&["verify", "catalan", "--n-max", "99"]).0, 2);
    assert_eq!(dyck(&["frobnicate"]).0, 2);
}
