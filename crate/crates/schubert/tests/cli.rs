use std::process::Command;

use schubert::cli::run;
use schubert::cohomology::CohomClass;
use schubert::{Partition, SkewShape};
use serde_json::Value;

fn call(args: &str) -> (i32, Value) {
    let argv = std::iter::once("schubert").chain(args.split_whitespace());
    let (code, out, err) = run(argv);
    let v = serde_json::from_str(&out)
        .unwrap_or_else(|_| panic!("stdout not JSON for {args:?}: {out:?} / {err}"));
    (code, v)
}

fn ok(args: &str) -> Value {
    let (code, v) = call(args);
    assert_eq!(code, 0, "{args}: {v}");
    v
}

#[test]
fn documented_examples() {
    assert_eq!(
        ok("lr coeff --outer 2,2 --inner 1 --nu 2,1").to_string(),
        r#"{"coefficient":1}"#
    );
    assert_eq!(
        ok("shimura inject --type unitary --p 2 --q 2 --lambda 1,1 --mu 2,2 --factors 2x1")
            .to_string(),
        r#"{"injective":true,"witness":{"nu":"1,1"}}"#
    );
    assert_eq!(
        ok("partition comp --partition 5,3,3,2 --box 5x5").to_string(),
        r#"{"partition":"5,3,2,2"}"#
    );
}

#[test]
fn partition_subcommands() {
    assert_eq!(ok("partition conj --partition 3,1")["partition"], "2,1,1");
    assert_eq!(ok("partition plus --partition 3,2,1")["partition"], "3,1");
    assert_eq!(ok("partition minus --partition 3,2,1")["partition"], "2");
    assert_eq!(
        ok("partition check --partition 3,2,1")["partition"],
        "2,1,1"
    );
    assert_eq!(ok("partition bar --partition 2,1")["partition"], "3,1");
}

#[test]
fn error_codes() {
    let (code, v) = call("partition plus --partition 3,1");
    assert_eq!(code, 1);
    assert_eq!(v["error"], "NotSymmetric");
    let (code, v) = call("shimura vanish --p 2 --q 3 --mu 3,3 --a 1");
    assert_eq!(code, 1);
    assert_eq!(v["error"], "TrivialPairExcluded");
    let (code, v) = call("cohom product --box 2x2 --x 3 --y 1");
    assert_eq!(code, 1);
    assert_eq!(v["error"], "ShapeOutOfBox");
    let (code, v) = call("shimura arthur --p 3 --q 3 --max-degree 7");
    assert_eq!(code, 1);
    assert_eq!(v["error"], "BoundExceeded");

    for bad in [
        "partition conj --partition 1,2",
        "lr coeff --outer 2,2",
        "partition conj --partition x",
        "frobnicate",
    ] {
        let argv = std::iter::once("schubert").chain(bad.split_whitespace());
        let (code, out, err) = run(argv);
        assert_eq!(code, 2, "{bad}");
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }
}

#[test]
fn outputs_reparse() {
    let v = ok("skew decompose --outer 4,2,2 --inner 2");
    let s: SkewShape = v["skew"].as_str().unwrap().parse().unwrap();
    assert_eq!(s.to_string(), "4,2,2/2");
    assert_eq!(v["blocks"], serde_json::json!(["1x2", "2x2"]));
    assert_eq!(
        ok("skew decompose --outer 4,4,2 --inner 2")["blocks"],
        Value::Null
    );
    let p: Partition = ok("partition conj --partition 4,1")["partition"]
        .as_str()
        .unwrap()
        .parse()
        .unwrap();
    assert_eq!(p.to_string(), "2,1,1,1");

    let prod = ok("cohom product --box 2x2 --x 1 --y 1");
    let class = CohomClass::from_json(&prod["class"]).unwrap();
    let again = ok(&format!(
        "cohom product --box 2x2 --x {} --y 1",
        prod["class"].to_string().replace(' ', "")
    ));
    let cubed = CohomClass::from_json(&again["class"]).unwrap();
    assert_eq!(class.to_json(), prod["class"]);
    assert_eq!(cubed.coefficient(&"2,1".parse().unwrap()), 2.into());
}

#[test]
fn deterministic_output() {
    for args in [
        "shimura pairs --p 2 --q 3",
        "shimura ostar-holo --p 5",
        "lr multi --target 4,2,2 --factors 2x2*2*1,1",
    ] {
        let a = run(std::iter::once("schubert").chain(args.split_whitespace()));
        let b = run(std::iter::once("schubert").chain(args.split_whitespace()));
        assert_eq!(a, b);
    }
}

#[test]
fn big_coefficients_are_exact() {
    let v = ok("lr multi --target 6,6,6 --factors 3x2*3x2*3x2");
    assert_eq!(v["coefficient"].to_string(), "1");
    let v = ok("lr multi --target 4,3,2,1 --factors 1*1*1*1*1*1*1*1*1*1");
    assert_eq!(v["coefficient"].to_string(), "768");
}

#[test]
fn shimura_subcommands() {
    assert_eq!(
        ok("shimura bidegree --p 1 --q 1 --lambda 1 --mu 1")["bidegree"],
        serde_json::json!([1, 0])
    );
    assert_eq!(
        ok("shimura pairs --p 1 --q 1")["pairs"]
            .as_array()
            .unwrap()
            .len(),
        3
    );
    assert_eq!(
        ok("shimura structure --p 3 --q 3 --lambda 3,1,1 --mu 3,3,3")["structure"],
        "SquareStaircase"
    );
    assert_eq!(ok("shimura partha --p 2 --q 3 --l 1")["vanishes"], true);
    assert_eq!(
        ok("shimura inject --type gsp --p 2 --lambda 2,1 --mu 2,2")["injective"],
        true
    );
    assert_eq!(
        ok("shimura inject --type holomorphic-u --p 2 --q 2 --r 0 --s 1 --factors 1x1,1x1")
            ["injective"],
        true
    );
    let h = ok("shimura inject --type holomorphic-gsp --p 3 --r 0 --rows 3");
    assert_eq!(h["constant_class"], true);
    assert_eq!(h["injective"], false);
    let k = ok("shimura kunneth-vanish --p 3 --q 3 --lambda 2,2 --mu 2,2 --factor-pairs 1x2:2:2;2x1:1,1:1,1");
    assert_eq!(k["vanishes"], true);
    let c = ok("shimura chern-action --p 2 --q 3 --mu 2,2 --nu 2,2");
    assert_eq!(c["nonzero"], true);
    assert_eq!(c["witness"]["mu_prime"], "2,2");
    let s = ok("shimura chern-action --p 2 --q 2 --mu 2,2 --flavor symplectic --nu 1");
    assert_eq!(s["witness"]["nu0"], "1");
    assert_eq!(
        ok("lr inscribes --nu 2,1 --outer 2,2 --antisymmetric")["inscribes"],
        true
    );
}

#[test]
fn cohom_subcommands() {
    assert_eq!(
        ok("cohom pair --box 2x2 --x 2 --y 1,1")["pairing"].to_string(),
        "0"
    );
    assert_eq!(
        ok("cohom pair --box 2x2 --x 2 --y 2")["pairing"].to_string(),
        "1"
    );
    let d = ok("cohom dual-class --gsp 3");
    assert_eq!(d["class"]["terms"][0]["partition"], "2,1");
    let r = ok("cohom restrict --box 2x3 --class 1 --levi 1x1,1x2");
    assert_eq!(r["class"]["terms"].as_array().unwrap().len(), 2);
    let o = ok("cohom restrict --box 4x4 --class 1,1 --to orthogonal");
    assert_eq!(o["class"]["terms"][0]["partition"], "2");
}

#[test]
fn binary_uses_cache_dir() {
    let dir = std::env::temp_dir().join(format!("schubert-cache-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bin = env!("CARGO_BIN_EXE_schubert");
    let out = Command::new(bin)
        .args([
            "lr", "coeff", "--outer", "3,2,1", "--inner", "2,1", "--nu", "2,1",
        ])
        .env("SCHUBERT_CACHE_DIR", &dir)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim(),
        r#"{"coefficient":2}"#
    );
    let text = std::fs::read_to_string(dir.join("lr_cache.txt")).unwrap();
    assert!(text.lines().any(|l| l.ends_with("=2")), "{text}");
    let again = Command::new(bin)
        .args([
            "lr", "coeff", "--outer", "3,2,1", "--inner", "2,1", "--nu", "2,1",
        ])
        .env("SCHUBERT_CACHE_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(
        String::from_utf8(again.stdout).unwrap().trim(),
        r#"{"coefficient":2}"#
    );
    let text2 = std::fs::read_to_string(dir.join("lr_cache.txt")).unwrap();
    assert_eq!(text, text2);
    let bad = Command::new(bin)
        .args(["partition", "plus", "--partition", "2"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
    let _ = std::fs::remove_dir_all(&dir);
}
