// Which `T_n` are Cohen-Macaulay, and over which fields.

use tricm::cmcheck::classify_complex;
use tricm::{
    classify_triangular, h_screen, independence_complex, reisner_check, reisner_triangular,
    triangular, triangular_complex, CmStatus, FieldSpec,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = FieldSpec::RATIONALS;
    for n in 2..=12 {
        let v = classify_triangular(n, q, false)?;
        let why: Vec<String> = v.witnesses.iter().map(|w| w.to_string()).collect();
        println!("T_{n:<2} {:<7} {:<18} {}", v.status, v.method, why.join("; "));
    }

    for p in [2, 3, 5] {
        let v = reisner_triangular(7, FieldSpec::new(p)?)?;
        let why: Vec<String> = v.witnesses.iter().map(|w| w.to_string()).collect();
        println!("T_7 over F_{p}: {} {}", v.status, why.join("; "));
        // H̃_1(Δ(7)) has 3-torsion
        assert_eq!(v.status == CmStatus::Cm, p != 3);
    }

    // the h-screen alone catches Δ(6)
    println!("h-screen of Δ(6): {:?}", h_screen(&triangular_complex(6))?);

    // full Reisner over every link of a general complex
    let d5 = independence_complex(&triangular(5)?);
    println!("Δ(5) by links: {}", reisner_check(&d5, q)?.status);
    let d6 = triangular_complex(6);
    let v = classify_complex(&d6, q, true)?;
    println!("Δ(6) with forced full check: {} via {}", v.status, v.method);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
