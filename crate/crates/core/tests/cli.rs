mod common;

use common::*;
use pshelicoid::cli::run;
use pshelicoid::mesh::{read_obj, read_profile_csv};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("pshelicoid").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> serde_json::Value {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn magnetic_table_csv() {
    let (code, out, _) = call(&["table", "--parity", "-1", "--aspect-ratio", "1.6180339887", "--max-n", "6", "--format", "csv"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,mu,r,pitch,wavelength");
    assert_eq!(lines.len(), 7);
    for (line, &(n, mu, r)) in lines[1..].iter().zip(MAGNETIC_TABLE.iter()) {
        let f: Vec<f64> = line.split(',').map(|s| s.parse().unwrap()).collect();
        assert_eq!(f[0] as u32, n);
        assert!((f[1] - mu).abs() < 1e-4 && (f[2] - r).abs() < 1e-4);
    }
}

#[test]
fn electric_table_json() {
    let v = json(&["table", "--parity", "1", "--aspect-ratio", "1.6180339887", "--max-n", "6", "--format", "json"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 6);
    for (row, &(n, mu, r)) in rows.iter().zip(ELECTRIC_TABLE.iter()) {
        assert_eq!(row["n"].as_u64().unwrap(), n as u64);
        assert!((row["mu"].as_f64().unwrap() - mu).abs() < 1e-4);
        assert!((row["r"].as_f64().unwrap() - r).abs() < 1e-4);
    }
}

#[test]
fn solve_electric_n3() {
    let v = json(&["solve", "--parity", "1", "--helicity", "1", "--wave-number", "3", "--aspect-ratio", "1.6180339887", "--json"]);
    assert!((v["mu"].as_f64().unwrap() - 0.884453).abs() < 1e-5);
    assert!((v["r"].as_f64().unwrap() - 0.749346).abs() < 1e-5);
    assert_eq!(v["helicity"], 1);
    assert_eq!(v["parity"], 1);
    assert_eq!(v["spatial_class"]["kind"], "twisted_column");
    let keys = [
        "mu", "r", "m", "helicity", "parity", "pitch", "wavelength", "wave_number", "inner_radius",
        "outer_radius", "aspect_ratio", "spatial_class", "residuals",
    ];
    for k in keys {
        assert!(v.get(k).is_some(), "missing {k}");
    }
    for (_, x) in v["residuals"].as_object().unwrap() {
        assert!(x.as_f64().unwrap().is_finite());
    }
}

#[test]
fn json_is_stable() {
    let args = ["classify", "--mu", "2.5", "--r", "0.4", "--json"];
    let (_, a, _) = call(&args);
    let (_, b, _) = call(&args);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["type"], "magnetic");
    assert_eq!(v["spatial_class"]["kind"], "dense_in_shell");
    assert!(v["spatial_class"]["numerator"].is_null());
}

#[test]
fn classify_rejects_dini() {
    let (code, out, err) = call(&["classify", "--mu", "1", "--r", "0.5"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("Dini"), "{err}");
}

#[test]
fn usage_errors() {
    assert_eq!(call(&["solve", "--parity", "1", "--wave-number", "2"]).0, 2);
    assert_eq!(call(&["solve", "--parity", "0", "--wave-number", "2", "--aspect-ratio", "1"]).0, 2);
    assert_eq!(call(&["table", "--parity", "1", "--aspect-ratio", "1", "--format", "obj"]).0, 2);
    assert_eq!(call(&["classify", "--mu", "2", "--r", "0.5", "--frobnicate"]).0, 2);
    assert_eq!(call(&["classify", "--mu", "-2", "--r", "0.5"]).0, 2);
    assert_eq!(call(&["profile", "--mu", "2", "--r", "0.5", "--samples", "4"]).0, 2);
    assert_eq!(call(&[]).0, 2);
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}

#[test]
fn verify_golden_series() {
    for (parity, table) in [(-1, MAGNETIC_TABLE), (1, ELECTRIC_TABLE)] {
        for &(n, mu, r) in table.iter().take(3) {
            let v = json(&["verify", "--mu", &mu.to_string(), "--r", &r.to_string(), "--samples", "30", "--json"]);
            assert_eq!(v["passed"], true, "parity {parity} n {n}: {v}");
            assert!(v["max_curvature_error_fd"].as_f64().unwrap() < 1e-4);
            assert_eq!(v["mirror"]["passed"], true);
        }
    }
    let (code, out, _) = call(&["verify", "--mu", "1.5", "--r", "0.3", "--seed", "7"]);
    assert_eq!(code, 0);
    assert!(out.lines().last() == Some("PASS"));
}

#[test]
fn profile_and_surface_files() {
    let dir = std::env::temp_dir().join(format!("pshelicoid-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let csv = dir.join("p.csv");
    let obj = dir.join("s.obj");
    let (code, _, err) = call(&["profile", "--mu", "0.770862", "--r", "0.289255", "--periods", "2", "--samples", "50", "--out", csv.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let rows = read_profile_csv(std::io::BufReader::new(std::fs::File::open(&csv).unwrap())).unwrap();
    assert_eq!(rows.len(), 100);
    assert_eq!(rows.iter().filter(|r| r.is_cusp).count(), 4);
    let (code, _, err) = call(&["surface", "--mu", "1.90951", "--r", "0.127237", "--res-u", "10", "--res-v", "7", "--out", obj.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let (v, f) = read_obj(std::io::BufReader::new(std::fs::File::open(&obj).unwrap())).unwrap();
    assert_eq!(v.len(), 70);
    assert_eq!(f.len(), 2 * 9 * 6);
    // stdout output matches the file byte for byte
    let (_, stdout, _) = call(&["surface", "--mu", "1.90951", "--r", "0.127237", "--res-u", "10", "--res-v", "7"]);
    assert_eq!(stdout, std::fs::read_to_string(&obj).unwrap());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn failed_verification_exits_one() {
    // a coarse step cannot meet the form tolerance
    let (code, out, err) = call(&["verify", "--mu", "1.90951", "--r", "0.127237", "--h", "0.005", "--samples", "20"]);
    assert_eq!(code, 1);
    assert_eq!(out.lines().last(), Some("FAIL"));
    assert!(err.contains("verification failed"));
}
