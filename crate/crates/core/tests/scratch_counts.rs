use cad_core::lifting::{cad_full, eccad, vcad, FailurePolicy};
use cad_core::parse::parse_poly;
use cad_core::projection::{BaseOp, ECInput};
use cad_core::var::VarOrder;

#[test]
fn variety_example_counts() {
    let ord = VarOrder::new(vec!["y", "x"]); // x main
    let f1 = parse_poly("x^2+y^2-1", &ord).unwrap();
    let g1 = parse_poly("x*y-1/4", &ord).unwrap();
    let g2 = parse_poly("x^3-y^2", &ord).unwrap();
    let t0 = std::time::Instant::now();
    let full = cad_full(&[f1.clone(), g1.clone(), g2.clone()], &ord, BaseOp::McCallum, FailurePolicy::Warn).unwrap();
    println!("cad_full: {} cells in {:?}", full.cell_count(), t0.elapsed());
    let t1 = std::time::Instant::now();
    let input = ECInput { ec: f1, others: vec![g1, g2] };
    let e = eccad(&input, &ord, FailurePolicy::Warn).unwrap();
    println!("eccad: {} cells in {:?}", e.cell_count(), t1.elapsed());
    let t2 = std::time::Instant::now();
    let v = vcad(&input, &ord, FailurePolicy::Warn).unwrap();
    println!("vcad: {} cells in {:?}", v.cell_count(), t2.elapsed());
    assert_eq!(full.cell_count(), 161);
    assert_eq!(e.cell_count(), 73);
    assert_eq!(v.cell_count(), 28);
}
