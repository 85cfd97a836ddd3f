use std::path::PathBuf;

use tess4_cli::{exit, run, run_with_cap, OutputRecord};

fn tess4(args: &str) -> tess4_cli::Outcome {
    run_with_cap(std::iter::once("tess4").chain(args.split_whitespace()), None)
}

fn record(args: &str) -> OutputRecord {
    let out = tess4(args);
    assert_eq!(out.code, exit::OK, "{args}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

/// `(file, argv)`; regenerate with `UPDATE_GOLDEN=1 cargo test -p tess4-cli --test cli`.
const GOLDEN: &[(&str, &str)] = &[
    ("solutions_d11.json", "solutions --d 11"),
    ("solutions_max_d19.csv", "solutions --max-d 19 --format csv"),
    ("count_max_d25.json", "count --max-d 25"),
    ("theorem11_k1_l2.json", "theorem11 --k 1 --l 2"),
    ("theorem11_k3_l2.json", "theorem11 --k 3 --l 2"),
    ("param12_seed.json", "param12 --seed 1,-2,0,3"),
    ("triangle_seed.json", "triangle --seed 8,3,12,-5"),
    ("triangle_generate.json", "triangle --a 0,0,1,1 --b 0,1,1,0 --generate 2,1"),
    ("complete_seed.json", "complete --seed 8,3,12,-5"),
    ("complete_solution.json", "complete --solution 5,7,17,11 --mn 1,0"),
    ("complete_point.json", "complete --point 11,5,7,17"),
    ("deltas_k11.json", "deltas --a 8,4,2,-20 --b 21,5,-3,-3"),
    ("construct_k11.json", "construct --k 11 --rep1 1,1,-19 --rep2 5,7,-17"),
    ("construct_k15.json", "construct --k 15 --rep1 1,7,-25 --rep2 3,15,-21"),
    ("ehrhart_unit.json", "ehrhart --a 0,0,1,1 --b 0,1,1,0"),
    ("ehrhart_k11.json", "ehrhart --a 8,4,2,-20 --b 21,5,-3,-3"),
    ("ehrhart_k15.json", "ehrhart --a 1,1,2,-12 --b 10,5,0,-5 --expect 25,7,1"),
    ("census_max_l21.json", "census --max-L 21"),
    ("census_max_l21.csv", "census --max-L 21 --format csv"),
    ("census_max_l9.txt", "census --max-L 9 --format table"),
    ("conjectures_l12.json", "conjectures --max-L 12 --coverage-d 25"),
    ("orbits_l9.json", "orbits --L 9"),
];

#[test]
fn golden_outputs() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for (file, args) in GOLDEN {
        let out = tess4(args);
        assert_eq!(out.code, exit::OK, "{args}: {}", out.stderr);
        let path = dir.join(file);
        if update {
            std::fs::write(&path, &out.stdout).unwrap();
            continue;
        }
        let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(out.stdout, want, "golden mismatch for `{args}` ({file})");
    }
}

#[test]
fn json_records_round_trip() {
    for (_, args) in GOLDEN.iter().filter(|(f, _)| f.ends_with(".json")) {
        let text = tess4(args).stdout;
        let rec: OutputRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(rec.schema_version, tess4_cli::SCHEMA_VERSION);
        assert_eq!(rec.command, args.split_whitespace().next().unwrap());
        assert_eq!(serde_json::to_string_pretty(&rec).unwrap() + "\n", text, "{args}");
    }
}

#[test]
fn output_is_identical_across_thread_counts() {
    for args in ["census --max-L 15", "orbits --L 18", "conjectures --max-L 10 --coverage-d 15"] {
        let one = tess4(&format!("{args} --threads 1"));
        let four = tess4(&format!("{args} --threads 4"));
        assert_eq!(one, four, "{args}");
        assert_eq!(tess4(args), one);
    }
}

#[test]
fn every_command_speaks_every_format() {
    let cmds = [
        "solutions --d 9",
        "count --d 9",
        "theorem11 --k 1 --l 1",
        "theorem11 --verify-d 30",
        "param12 --seed 1,0,0,0",
        "param12 --coverage 9",
        "triangle --solution 1,1,5,3 --mn 1,1",
        "complete --point 1,1,0,0",
        "deltas --a 0,0,1,1 --b 0,1,1,0",
        "construct --k 11 --rep1 1,1,-19 --rep2 5,7,-17 --ell 22",
        "ehrhart --a 0,0,1,1 --b 0,1,1,0 --max-t 3",
        "census --L 9",
        "conjectures --max-L 5",
        "orbits --L 3",
    ];
    for c in cmds {
        for f in ["json", "csv", "table"] {
            let out = tess4(&format!("{c} --format {f}"));
            assert_eq!(out.code, exit::OK, "{c} --format {f}: {}", out.stderr);
            assert!(!out.stdout.is_empty());
        }
    }
}

#[test]
fn worked_examples_through_the_cli() {
    let r = record("solutions --d 17");
    assert_eq!(
        r.results["rows"][0]["solutions"],
        serde_json::json!(["1,5,29", "7,17,23", "11,11,25", "13,13,23"])
    );

    let r = record("construct --k 11 --rep1 1,1,-19 --rep2 5,7,-17");
    assert_eq!(r.results["ell"], 22);
    assert_eq!(r.results["triangle"], "{[8,4,2,-20],[21,5,-3,-3]}");
    assert_eq!(r.results["gram"]["determinant"], 5808);

    let r = record("complete --seed 8,3,12,-5");
    assert_eq!(r.results["c"], "[15,3,-13,9]");
    let r = record("complete --solution 5,7,17,11 --mn 1,0");
    assert_eq!(r.results["c"], "[11,1,19,-1]");

    let r = record("theorem11 --k 1 --l 1");
    assert_eq!(r.results["solutions"][0]["a"], 1);
    assert_eq!(r.results["solutions"][0]["c"], 5);
    assert_eq!(r.results["solutions"][0]["d"], 3);
}

#[test]
fn explicit_construction_candidates() {
    let r = record("construct --k 11 --rep1 1,1,-19 --rep2 5,7,-17 --ell 22 --vw 4,2");
    assert_eq!(r.results["vw"], serde_json::json!([4, 2]));
    assert_eq!(r.results["partner"], serde_json::json!([5, -3]));
    let out = tess4("construct --k 11 --rep1 1,1,-19 --rep2 5,7,-17 --ell 22 --vw 1,1");
    assert_eq!(out.code, exit::DOMAIN);
    let out = tess4("construct --k 11 --rep1 1,1,-19 --rep2 5,7,-17 --ell 1");
    assert_eq!(out.code, exit::NOT_FOUND, "{}", out.stderr);
}

#[test]
fn exit_codes() {
    assert_eq!(tess4("solutions --d 0").code, exit::DOMAIN);
    assert_eq!(tess4("count --d 4").code, exit::DOMAIN);
    assert_eq!(tess4("triangle --seed 0,0,0,0").code, exit::DOMAIN);
    assert_eq!(tess4("triangle --a 1,0,0,0 --b 0,1,0,0").code, exit::DOMAIN);
    assert_eq!(tess4("theorem11 --k 2 --l 1").code, exit::DOMAIN);
    assert_eq!(tess4("complete --point 1,0,0,0").code, exit::DOMAIN);
    assert_eq!(tess4("ehrhart --a 0,0,1,1 --b 0,1,1,0 --expect 1,2").code, exit::DOMAIN);
    // Overflow on user-sized input is reported, never wrapped.
    assert_eq!(tess4("solutions --d 3037000499").code, exit::INTERNAL);
    // A panic inside a command is caught and mapped to the internal-error code.
    let out = tess4("deltas --a 4000000000,0,0,0 --b 0,4000000000,0,0");
    assert_eq!(out.code, exit::INTERNAL, "{}", out.stderr);
    assert!(out.stdout.is_empty());

    for bad in [
        "",
        "frobnicate",
        "solutions",
        "solutions --d 1 --max-d 3",
        "census --max-L x",
        "orbits --L 3 --threads 0",
    ] {
        let out = tess4(bad);
        assert_eq!(out.code, exit::USAGE, "{bad:?}");
        assert!(out.stdout.is_empty() && !out.stderr.is_empty());
    }
    let help = tess4("--help");
    assert_eq!(help.code, exit::OK);
    assert!(help.stdout.contains("census"));
    assert_eq!(tess4("--version").code, exit::OK);
}

#[test]
fn memory_cap() {
    let out = run_with_cap(["tess4", "solutions", "--d", "3"], Some(1));
    assert_eq!(out.code, exit::MEMORY);
    assert!(out.stdout.is_empty());
    let out = run_with_cap(["tess4", "solutions", "--d", "3"], Some(1 << 20));
    assert_eq!(out.code, exit::OK);
}

#[test]
fn diagnostics_go_to_stderr_outside_json() {
    let args = "ehrhart --a 1,1,2,-12 --b 10,5,0,-5 --expect 25,7,1";
    let r = record(args);
    assert_eq!(r.diagnostics.len(), 1);
    let out = tess4(&format!("{args} --format csv"));
    assert!(out.stderr.starts_with("note: reference polynomial"));
    assert!(!out.stdout.contains("reference"));
}

#[test]
fn run_reads_argv_like_the_binary() {
    let out = run(["tess4", "solutions", "--d", "1", "--format", "csv"]);
    assert_eq!(out.stdout, "d,a,b,c\n1,1,1,1\n");
}
