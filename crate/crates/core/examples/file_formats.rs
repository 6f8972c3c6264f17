// Edge lists and complex files.

use tricm::complexes::{parse_complex, write_complex};
use tricm::graphs::{parse_edge_list, write_edge_list};
use tricm::{classify_triangular, independence_complex, reduced_betti_table, triangular, FieldSpec};
use tricm::cmcheck::classify_complex;

const PATH3: &str = "\
# a path on three vertices
a b
b c
";

const CIRCLE: &str = "\
dim 1 vertices 4
0 1
1 2
2 3
0 3
";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = FieldSpec::RATIONALS;
    let path = parse_edge_list(PATH3)?;
    let v = classify_complex(&independence_complex(&path), q, true)?;
    println!("path a-b-c: {} {}", v.status, v.witnesses[0]);

    // round trip through the text form keeps labels and edges
    let t5 = triangular(5)?;
    let text = write_edge_list(&t5);
    let back = parse_edge_list(&text)?;
    assert_eq!(back.edges(), t5.edges());
    assert_eq!(back.labels(), Some(&["(1_2)".to_string(), "(1_3)".into(), "(1_4)".into(), "(1_5)".into(), "(2_3)".into(), "(2_4)".into(), "(2_5)".into(), "(3_4)".into(), "(3_5)".into(), "(4_5)".into()][..]));
    assert_eq!(classify_complex(&independence_complex(&back), q, false)?.status, classify_triangular(5, q, false)?.status);

    let circle = parse_complex(CIRCLE)?;
    println!("H̃(circle; Q) = {:?}", reduced_betti_table(&circle, q).dims);
    let again = parse_complex(&write_complex(&circle))?;
    assert_eq!(again, circle);
    print!("{}", write_complex(&circle));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
