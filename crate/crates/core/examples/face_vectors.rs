// f- and h-vectors of `Δ(n)`, counted and from the closed form.

use tricm::{f_vector, h_vector, triangular_complex, triangular_f_closed};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for n in 2..=11 {
        let counted = f_vector(&triangular_complex(n))?;
        let closed = triangular_f_closed(n)?;
        assert_eq!(counted, closed);
        println!("Δ({n}): f = {counted}  h = {}", h_vector(&counted));
    }

    let h = h_vector(&triangular_f_closed(11)?);
    let (k, value) = h.first_negative().expect("Δ(11) has a negative h-entry");
    println!("h_{k}(Δ(11)) = {value}, so Δ(11) is not Cohen-Macaulay");
    assert_eq!(h.to_strings(), ["1", "50", "780", "4280", "6220", "-936"]);

    // the closed form stays cheap long after enumeration is hopeless
    let big = triangular_f_closed(40)?;
    println!("Δ(40) has {} facets", big.entries.last().unwrap());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
