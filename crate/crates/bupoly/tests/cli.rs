//! End-to-end tests of the `bupoly` binary: output shapes, exit codes, and
//! the promise that everything the tool prints parses back in.

use std::process::{Command, Output};

use bupoly::cli::parse_poly;
use bupoly::gf2poly::Poly;

fn bupoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bupoly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn factor_splits_the_three_term_example() {
    let out = bupoly(&["factor", "1+x^5+x^10"]);
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out).trim(),
        "0x421 = (1+x+x^2)*(1+x+x^4)*(1+x^3+x^4)"
    );
}

#[test]
fn factor_resolves_table_names() {
    let out = bupoly(&["factor", "C1"]);
    assert_eq!(stdout_of(&out).trim(), "0x3b8 = x^3*(1+x)^4*(1+x+x^2)");

    let one = bupoly(&["factor", "1"]);
    assert_eq!(stdout_of(&one).trim(), "0x1 = 1");
}

#[test]
fn sigma_matches_the_known_values() {
    let out = bupoly(&["sigma", "--kind", "biunitary", "M2^4"]);
    let text = stdout_of(&out);
    assert!(text.contains("sigma**(A) = 0x12fc = x^2*(1+x)^4*(1+x+x^2)*(1+x^3+x^4)"));

    let m4 = bupoly(&["sigma", "--kind", "all", "x^4"]);
    assert!(stdout_of(&m4).contains("sigma(A) = 0x1f"));

    let unitary = bupoly(&["sigma", "--kind", "unitary", "x^3"]);
    assert!(stdout_of(&unitary).contains("sigma*(A) = 0x9 = (1+x)*(1+x+x^2)"));
}

#[test]
fn verify_reports_and_exits_by_status() {
    let yes = bupoly(&["verify", "--kind", "biunitary", "C9"]);
    assert_eq!(yes.status.code(), Some(0));
    assert!(stdout_of(&yes).contains("PERFECT"));

    let also = bupoly(&["verify", "--kind", "biunitary", "x^2*(1+x)^2"]);
    assert_eq!(also.status.code(), Some(0));

    let no = bupoly(&["verify", "--kind", "biunitary", "x*(1+x)^2"]);
    assert_eq!(no.status.code(), Some(1));
    let text = stdout_of(&no);
    assert!(text.contains("NOT PERFECT"));
    assert!(text.contains("defect sigma**(A)+A = 0x6"));
}

#[test]
fn error_exit_codes_distinguish_usage_from_caps() {
    let parse = bupoly(&["factor", "1+y"]);
    assert_eq!(parse.status.code(), Some(2));
    let msg = String::from_utf8(parse.stderr.clone()).unwrap();
    assert!(msg.contains("column 3"), "stderr was {msg}");

    let cap = bupoly(&["sigma", "--kind", "all", "x^70000"]);
    assert_eq!(cap.status.code(), Some(3));

    let usage = bupoly(&["no-such-command"]);
    assert_eq!(usage.status.code(), Some(2));

    let zero = bupoly(&["verify", "--kind", "biunitary", "0"]);
    assert_eq!(zero.status.code(), Some(2));
}

#[test]
fn search_jsonl_records_round_trip() {
    let out = bupoly(&["search", "--mode", "brute", "--omega", "3", "--format", "jsonl"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().map(str::trim).collect();
    assert_eq!(lines.len(), 12);

    let mut tags = Vec::new();
    for line in lines {
        let rec: serde_json::Value = line.parse().unwrap();
        let poly: Poly = rec["poly_hex"].as_str().unwrap().parse().unwrap();
        assert_eq!(parse_poly(rec["poly_symbolic"].as_str().unwrap()).unwrap(), poly);
        assert_eq!(rec["degree"].as_u64().unwrap() as usize, poly.degree().finite().unwrap());
        assert_eq!(rec["omega"].as_u64().unwrap(), 3);

        let mut product = Poly::one();
        for f in rec["factors"].as_array().unwrap() {
            let base: Poly = f["base_hex"].as_str().unwrap().parse().unwrap();
            assert_eq!(parse_poly(f["base_symbolic"].as_str().unwrap()).unwrap(), base);
            product = product * base.pow(f["exponent"].as_u64().unwrap() as u32);
        }
        assert_eq!(product, poly);
        tags.push(rec["tag"].as_str().unwrap().to_string());
    }
    for want in ["C1", "C1-conjugate", "C7", "C4"] {
        assert!(tags.iter().any(|t| t == want), "missing tag {want}");
    }
}

#[test]
fn guided_search_reports_the_quadruple() {
    let out = bupoly(&["search", "--mode", "guided", "--format", "jsonl"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    for line in lines {
        let rec: serde_json::Value = line.parse().unwrap();
        assert_eq!(rec["tag"], "unlisted");
        assert_eq!(rec["omega"], 4);
    }
}

#[test]
fn search_text_report_carries_header_and_tags() {
    let out = bupoly(&["search", "--mode", "brute", "--omega", "2"]);
    let text = stdout_of(&out);
    assert!(text.contains("# mode brute-force: 5 findings"));
    assert!(text.contains("tag omega2-sporadic"));
    assert!(text.contains("x^15*(1+x)^15"));
}

#[test]
fn search_rejects_bad_bounds() {
    let out = bupoly(&["search", "--mode", "brute", "--omega", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn jobs_env_var_leaves_output_unchanged() {
    let plain = bupoly(&["search", "--mode", "brute", "--omega", "2", "--format", "jsonl"]);
    let threaded = Command::new(env!("CARGO_BIN_EXE_bupoly"))
        .args(["search", "--mode", "brute", "--omega", "2", "--format", "jsonl"])
        .env("BUPOLY_JOBS", "3")
        .output()
        .unwrap();
    assert_eq!(plain.stdout, threaded.stdout);
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let path = std::env::temp_dir().join("bupoly_cli_out_test.txt");
    let _ = std::fs::remove_file(&path);
    let out = bupoly(&["tables", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout_of(&out).is_empty());

    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written.lines().count(), 20);
    assert!(written.contains("M1 = 0x7 = 1+x+x^2"));
    assert!(written.contains("C14 = x^10*(1+x)^13*M1^2*M2^2*M3^2*M4"));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn tables_rows_reparse_to_the_same_polynomial() {
    let out = bupoly(&["tables"]);
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 20);
    for line in text.lines() {
        let row = line.split("  (deg").next().unwrap();
        let polys: Vec<Poly> = row
            .split(" = ")
            .map(|part| parse_poly(part.trim()).unwrap())
            .collect();
        assert!(polys.len() >= 3);
        assert!(polys.windows(2).all(|w| w[0] == w[1]), "row disagrees: {line}");
    }
}
