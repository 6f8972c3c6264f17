// Driving the command-line front end in-process: text, JSON and the cache.

use tricm::cli::{self, Report};

fn tricm(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(std::iter::once("tricm").chain(args.iter().copied()), &mut out, &mut err);
    let mut text = String::from_utf8(out).expect("utf-8 output");
    text.push_str(&String::from_utf8(err).expect("utf-8 output"));
    (code, text)
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (code, text) = tricm(&["vectors", "--triangular", "11", "--closed-form"]);
    print!("{text}");
    assert_eq!(code, 0);

    let (code, text) = tricm(&["classify", "--triangular", "9", "--char", "0", "--char", "3"]);
    print!("{text}");
    assert_eq!(code, 0);

    let (_, json) = tricm(&["homology", "--triangular", "5", "--char", "2", "--json", "-"]);
    let report = Report::from_json(&json)?;
    assert_eq!(report.to_json(), json);
    println!("H̃(Δ(5); F_2) from JSON: {:?}", report.betti[0].dims);

    let dir = std::env::temp_dir().join(format!("tricm-example-cache-{}", std::process::id()));
    let cache = dir.to_str().unwrap();
    let cold = tricm(&["hsop", "--triangular", "5", "--kind", "elementary", "--verify", "--json", "-"]).1;
    let warm1 = tricm(&["hsop", "--triangular", "5", "--kind", "elementary", "--verify", "--json", "-", "--cache-dir", cache]).1;
    let warm2 = tricm(&["hsop", "--triangular", "5", "--kind", "elementary", "--verify", "--json", "-", "--cache-dir", cache]).1;
    let strip = |s: &str| Report::from_json(s).map(|r| r.without_timings());
    assert_eq!(strip(&cold)?, strip(&warm1)?);
    assert_eq!(strip(&cold)?, strip(&warm2)?);
    println!("cached hsop report matches a cold run");
    std::fs::remove_dir_all(&dir)?;

    let (code, text) = tricm(&["classify", "--triangular", "9", "--full", "--max-faces", "100"]);
    print!("{text}");
    assert_eq!(code, 4);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
