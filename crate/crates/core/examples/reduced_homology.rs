// Reduced homology of `Δ(n)` and of a projective plane over several fields.

use tricm::complexes::component_count;
use tricm::{boundary_matrix, reduced_betti_table, triangular_complex, FieldSpec, SimplicialComplex};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = FieldSpec::RATIONALS;
    let d4 = triangular_complex(4);
    println!("Δ(4) has {} components", component_count(&d4));
    println!("H̃(Δ(4); Q) = {:?}", reduced_betti_table(&d4, q).dims);

    for n in [5, 6, 7] {
        let d = triangular_complex(n);
        for p in [0, 2, 3] {
            let field = FieldSpec::new(p)?;
            let b = reduced_betti_table(&d, field);
            println!("H̃(Δ({n}); {field}) = {:?}", b.dims);
        }
    }

    // boundary of a boundary vanishes
    let d6 = triangular_complex(6);
    for i in 1..=d6.dim() {
        let lower = boundary_matrix(&d6, i - 1, q)?;
        let upper = boundary_matrix(&d6, i, q)?;
        assert_eq!(lower.checked_mul(&upper).map(|m| m.nnz()), Some(0));
    }

    // six-vertex RP^2: torsion shows up only mod 2
    let rp2 = SimplicialComplex::from_faces(
        6,
        [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5],
            [1, 2, 4], [2, 3, 5], [1, 3, 4], [2, 4, 5], [1, 3, 5],
        ],
    )?;
    for p in [0, 2, 3] {
        let field = FieldSpec::new(p)?;
        println!("H̃(RP^2; {field}) = {:?}", reduced_betti_table(&rp2, field).dims);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
