use skewmorph::cli::{run, CensusRecord, EXIT_FAILURE, EXIT_GUARD, EXIT_OK, EXIT_USAGE};
use skewmorph::skew::SkewRecord;

struct Output {
    code: i32,
    out: String,
    err: String,
}

/// Runs one command line, split on whitespace.
fn cli(line: &str) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("skewmorph").chain(line.split_whitespace());
    let code = run(argv, &mut out, &mut err);
    Output {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn records(text: &str) -> Vec<SkewRecord> {
    text.lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn census(line: &str) -> Vec<CensusRecord> {
    let o = cli(line);
    assert_eq!(o.code, EXIT_OK, "{}", o.err);
    let mut reader = csv::Reader::from_reader(o.out.as_bytes());
    assert_eq!(
        reader.headers().unwrap().iter().collect::<Vec<_>>(),
        [
            "group",
            "order",
            "total",
            "autos",
            "proper",
            "smooth",
            "nonsmooth",
            "ms"
        ]
    );
    reader.deserialize().map(|r| r.unwrap()).collect()
}

#[test]
fn enumerate_prime_order_gives_automorphisms_only() {
    let o = cli("enumerate Z5");
    assert_eq!(o.code, EXIT_OK);
    let recs = records(&o.out);
    assert_eq!(recs.len(), 4);
    assert!(recs.iter().all(|r| !r.proper && r.smooth));
}

#[test]
fn enumerate_trivial_group() {
    let recs = records(&cli("enumerate Z1").out);
    assert_eq!(recs.len(), 1);
    assert_eq!(recs[0].perm, [0]);
}

#[test]
fn enumerate_z3xz3_with_oracle() {
    let fast = cli("enumerate Z3xZ3 --quiet");
    let slow = cli("enumerate Z3xZ3 --oracle --quiet");
    assert_eq!(slow.code, EXIT_OK);
    assert_eq!(records(&slow.out).len(), 64);
    assert_eq!(fast.out, slow.out);
    assert!(slow.err.is_empty());
}

#[test]
fn output_is_deterministic_and_canonical() {
    let a = cli("enumerate Z2xZ6 --quiet").out;
    let b = cli("enumerate Z2xZ6 --quiet").out;
    assert_eq!(a, b);
    let perms: Vec<Vec<usize>> = records(&a).into_iter().map(|r| r.perm).collect();
    assert!(perms.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn every_record_round_trips_through_check() {
    let dir = tempfile::tempdir().unwrap();
    for group in ["Z9", "Z2xZ4", "Z3xZ3", "Z18"] {
        let out = cli(&format!("enumerate {group} --quiet")).out;
        for (i, line) in out.lines().enumerate() {
            let path = dir.path().join(format!("{group}-{i}.json"));
            std::fs::write(&path, line).unwrap();
            let o = cli(&format!("check --file {}", path.display()));
            assert_eq!(o.code, EXIT_OK, "{group} #{i}: {}", o.err);
        }
    }
}

#[test]
fn check_names_the_mismatched_field() {
    let dir = tempfile::tempdir().unwrap();
    let o = cli("construct root --n 9 --k 3 --s 8");
    assert_eq!(o.code, EXIT_OK);
    let mut rec: SkewRecord = serde_json::from_str(o.out.trim()).unwrap();
    let path = dir.path().join("rec.json");

    std::fs::write(&path, rec.to_json()).unwrap();
    assert_eq!(
        cli(&format!("check --file {}", path.display())).code,
        EXIT_OK
    );

    rec.smooth = true;
    std::fs::write(&path, rec.to_json()).unwrap();
    let o = cli(&format!("check --file {}", path.display()));
    assert_eq!(o.code, EXIT_FAILURE);
    assert!(o.err.contains("`smooth`"), "{}", o.err);

    rec.smooth = false;
    rec.perm[1] = rec.perm[2];
    std::fs::write(&path, rec.to_json()).unwrap();
    let o = cli(&format!("check --file {}", path.display()));
    assert_eq!(o.code, EXIT_FAILURE);
    assert!(o.err.contains("`perm`"), "{}", o.err);

    std::fs::write(&path, "{\"group\": [9], \"perm\": ").unwrap();
    assert_eq!(
        cli(&format!("check --file {}", path.display())).code,
        EXIT_USAGE
    );
    let missing = dir.path().join("missing.json");
    assert_eq!(
        cli(&format!("check --file {}", missing.display())).code,
        EXIT_USAGE
    );
}

#[test]
fn exit_codes() {
    assert_eq!(cli("enumerate Z0").code, EXIT_USAGE);
    assert_eq!(cli("enumerate 6").code, EXIT_USAGE);
    assert_eq!(cli("frobnicate").code, EXIT_USAGE);
    assert_eq!(cli("verify nonsense").code, EXIT_USAGE);
    assert_eq!(cli("enumerate Z65").code, EXIT_GUARD);
    assert_eq!(cli("enumerate Z2xZ2xZ2xZ2xZ2xZ2").code, EXIT_GUARD);
    assert_eq!(cli("enumerate Z7 --max-order 6").code, EXIT_GUARD);
    assert_eq!(cli("enumerate Z3xZ4 --oracle").code, EXIT_GUARD);
    assert_eq!(
        cli("census --cyclic-from 60 --cyclic-to 70").code,
        EXIT_GUARD
    );
    assert_eq!(cli("--help").code, EXIT_OK);
}

#[test]
fn construct_rejections_are_mathematical_failures() {
    let o = cli("construct csm --n 6 --k 2 --r 0 --s 1 --t 1");
    assert_eq!(o.code, EXIT_FAILURE);
    assert!(o.err.contains("condition (b)"), "{}", o.err);
    assert_eq!(cli("construct root --n 9 --k 2 --s 8").code, EXIT_FAILURE);
    assert_eq!(
        cli("construct nse --p 4 --d 1 --nu 1 --r 3").code,
        EXIT_FAILURE
    );
}

#[test]
fn construct_outputs_validated_records() {
    let o = cli("construct csm --n 6 --k 2 --r 1 --s 1 --t 2");
    let rec: SkewRecord = serde_json::from_str(o.out.trim()).unwrap();
    assert_eq!(rec.perm, [0, 3, 2, 5, 4, 1]);
    assert!(rec.smooth && rec.proper);

    let o = cli("construct nse --p 3 --d 1 --nu 1 --r 2");
    let rec: SkewRecord = serde_json::from_str(o.out.trim()).unwrap();
    assert_eq!((rec.order, rec.smooth), (6, false));
    assert_eq!(rec.kernel, [0, 3, 6]);
}

#[test]
fn census_rows() {
    let rows = census("census --cyclic-from 4 --cyclic-to 15");
    assert_eq!(rows.len(), 12);
    assert!(rows.iter().all(CensusRecord::is_consistent));
    let row = |label: &str| rows.iter().find(|r| r.group == label).unwrap();
    assert_eq!(row("Z4").proper, 0);
    assert_eq!(row("Z5").proper, 0);
    assert!(row("Z9").nonsmooth >= 1);
    assert_eq!(row("Z15").nonsmooth, 0);

    let rows = census("census --groups Z2xZ4,Z3xZ3,Z1 --quiet");
    let totals: Vec<usize> = rows.iter().map(|r| r.total).collect();
    assert_eq!(totals, [16, 64, 1]);
}

#[test]
fn census_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("census.csv");
    let o = cli(&format!(
        "census --cyclic-from 1 --cyclic-to 9 --out {}",
        path.display()
    ));
    assert_eq!(o.code, EXIT_OK);
    assert!(o.out.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 10);
    assert!(text.starts_with("group,order,total,autos,proper,smooth,nonsmooth,ms\n"));
    assert_eq!(cli("census").code, EXIT_USAGE);
}

#[test]
fn verify_suites() {
    let o = cli("verify theorem1 --max-n 20");
    assert_eq!(o.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(o.out.trim()).unwrap();
    assert_eq!(v["nonsmooth_orders"], serde_json::json!([9, 18]));

    assert_eq!(cli("verify csm --n 6").code, EXIT_OK);
    assert_eq!(cli("verify csm --max-n 24").code, EXIT_OK);
    assert_eq!(cli("verify identities Z3xZ6").code, EXIT_OK);
    assert_eq!(cli("verify identities Z16").code, EXIT_OK);

    let o = cli("verify theorem2 --groups Z3xZ3,Z32xZ2");
    assert_eq!(o.code, EXIT_OK);
    let rows: Vec<serde_json::Value> = o
        .out
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(rows.len(), 2);
    assert!(rows
        .iter()
        .all(|r| r["necessary"] == false && r["witness"]["smooth"] == false));

    let o = cli("verify theorem2 --groups Z2xZ6");
    assert_eq!(o.code, EXIT_OK);
    assert!(o.out.contains("\"witness\":null"));
    assert_eq!(cli("verify theorem2 --groups Z9xZ2").code, EXIT_USAGE);
}

#[test]
fn reciprocal_pairs() {
    assert_eq!(cli("reciprocal --m 1 --n 1").out.trim(), "1");
    assert_eq!(cli("reciprocal --m 3 --n 3").out.trim(), "1");
    let o = cli("reciprocal --m 9 --n 6 --list --quiet");
    assert_eq!(o.code, EXIT_OK);
    for line in o.out.lines() {
        let pair: serde_json::Value = serde_json::from_str(line).unwrap();
        for (a, b) in [("phi", "psi"), ("psi", "phi")] {
            if pair[a]["proper"] == false {
                assert_eq!(pair[b]["smooth"], true, "{line}");
            }
        }
    }
    assert_eq!(cli("reciprocal --m 100 --n 3").code, EXIT_GUARD);
}
