//! Encoder output re-loads to the same parameter, byte for byte, and
//! evaluates identically through the command line.

use idealis::checks::{random_e, random_meager, random_null};
use idealis::cli;
use idealis::gen;
use idealis::json::to_line;
use idealis::params::Param;
use idealis_core::fubini::ProductParam;
use rand::Rng;

fn reload(p: &Param) -> Param {
    let text = to_line(&p.to_json());
    let q = Param::load(&text).expect("reloads");
    assert_eq!(to_line(&q.to_json()), text, "not byte-stable");
    q
}

fn run(args: &[&str]) -> (i32, String) {
    cli::run(std::iter::once("idealis").chain(args.iter().copied()))
}

#[test]
fn parameters_are_byte_stable() {
    let mut g = gen::rng(11);
    for _ in 0..40 {
        let rows = g.gen_range(0..3);
        let params = [
            Param::Meager(random_meager(&mut g, rows, 4)),
            Param::Null(random_null(&mut g, 4)),
            Param::E(random_e(&mut g, rows, 3)),
            Param::Fubini(ProductParam::MeagerNull {
                meager: random_meager(&mut g, rows, 2),
                null: random_null(&mut g, 2),
            }),
        ];
        for p in &params {
            assert_eq!(&reload(p), p);
        }
    }
}

#[test]
fn cli_encode_then_eval_is_stable() {
    let (code, param) = run(&[
        "null",
        "encode",
        "--covers",
        r#"{"covers":[[{"level":2,"words":["01"]}],[{"level":3,"words":["010"]}]]}"#,
    ]);
    assert_eq!(code, 0, "{param}");
    let param = param.trim().to_string();
    let again = to_line(&Param::load(&param).unwrap().to_json());
    assert_eq!(again, param);
    for z in ["0", "01", "010", "0101", "1", "11", "111"] {
        let a = run(&["null", "eval", "--param", &param, "--point", z, "--n", "1"]);
        let b = run(&["null", "eval", "--param", &again, "--point", z, "--n", "1"]);
        assert_eq!(a, b);
        assert_eq!(a.0, 0);
    }
}

#[test]
fn encoders_re_encode_identically() {
    let sets = r#"[{"level":3,"words":["000","011","100","110"]}]"#;
    let first = run(&["meager", "encode", "--sets", sets, "--n-max", "3"]);
    let second = run(&["meager", "encode", "--sets", sets, "--n-max", "3"]);
    assert_eq!(first, second);
    assert_eq!(first.0, 0);
}
