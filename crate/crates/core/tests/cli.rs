use std::process::Command;

fn lucastile(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_lucastile"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn documented_examples() {
    assert_eq!(lucastile(&["lucas", "F", "4", "--format", "text"]), (0, "s^3 + 2*s*t\n".into()));
    assert_eq!(
        lucastile(&["lucasnomial", "4", "2", "--method", "quotient"]),
        (0, "s^4 + 3*s^2*t + 2*t^2\n".into())
    );
    let (code, out) = lucastile(&["verify", "theorem", "--m-max", "3", "--n-max", "3", "--mode", "enumerate"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("32 cases, 0 failures: PASS\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(lucastile(&["lucas", "X", "1"]).0, 2);
    assert_eq!(lucastile(&["specialize", "3", "1", "--preset", "lnomial"]).0, 2);
    assert_eq!(
        lucastile(&["verify", "theorem", "--m-max", "6", "--n-max", "6", "--mode", "enumerate"]).0,
        3
    );
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "theorem", "--m-max", "4", "--n-max", "3", "--parallel", "--format", "json"];
    let first = lucastile(&args);
    assert_eq!(first.0, 0);
    assert_eq!(first, lucastile(&args));
    assert_eq!(lucastile(&["table", "6"]), lucastile(&["table", "6"]));
}
