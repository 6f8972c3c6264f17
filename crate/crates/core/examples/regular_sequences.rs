// Systems of parameters for `R/I(T_n)` checked degree by degree.

use tricm::ideals::{default_degree_cap, verify_regular_with, RationalMode, VerifyOptions};
use tricm::{
    edge_ideal, hsop, hilbert_function, telescoping_check, triangular, verify_regular, FieldSpec,
    HsopKind, RegularityStatus,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = FieldSpec::RATIONALS;

    let t4 = triangular(4)?;
    let ideal = edge_ideal(&t4);
    println!("I(T_4) has {} generators, first {}", ideal.generators.len(), ideal.render(t4.labels())[0]);
    let hf: Vec<String> = (0..5).map(|d| hilbert_function(&t4, d).to_string()).collect();
    println!("Hilbert function of R/I(T_4): {}", hf.join(", "));

    let t5 = triangular(5)?;
    let seq = hsop(&t5, HsopKind::IndependentSetSums)?;
    for f in &seq.forms {
        println!("  {}", f.render(t5.labels()));
    }
    let exact = VerifyOptions { rational: RationalMode::Exact, max_columns: None };
    let v = verify_regular_with(&t5, &seq, q, default_degree_cap(&t5, &seq)?, exact)?;
    let dims: Vec<String> = v.per_degree.iter().map(|r| r.actual.to_string()).collect();
    println!("T_5 independent-set sums over Q: {} ({})", v.status, dims.join(", "));
    assert_eq!(v.status, RegularityStatus::Regular);

    let seq4 = hsop(&t4, HsopKind::IndependentSetSums)?;
    let v = verify_regular(&t4, &seq4, q, default_degree_cap(&t4, &seq4)?)?;
    println!("T_4 independent-set sums over Q: {} at degree {:?}", v.status, v.failing_degree);

    let t7 = triangular(7)?;
    let power = hsop(&t7, HsopKind::PowerSums)?;
    let v = verify_regular(&t7, &power, q, default_degree_cap(&t7, &power)?)?;
    println!("T_7 power sums over Q: {} (certified mod {:?})", v.status, v.certified_by);
    assert_eq!(v.status, RegularityStatus::Regular);

    let f2 = FieldSpec::new(2)?;
    let v = verify_regular(&t7, &power, f2, default_degree_cap(&t7, &power)?)?;
    println!("T_7 power sums over F_2: {}", v.status);

    for m in 1..=6 {
        assert!(telescoping_check(m)?);
    }
    println!("telescoping identity holds for m <= 6");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
