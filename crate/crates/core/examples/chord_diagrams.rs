//! Involutions as chord diagrams with arcs to infinity, their crossing
//! polynomials, and the q-Hermite Catalan matrix.

use antiinv::chords::{
    ank, enumerate_involutions, touchard, touchard_formula_rhs, touchard_riordan_rhs, AnkMethod, CatalanMatrix,
    Involution,
};
use antiinv::exactalg::QPoly;

fn main() {
    let s = Involution::from_cycles(8, &[(1, 4), (2, 6), (7, 8)]).unwrap();
    println!("{s} has {} crossings", s.crossings());

    for s in enumerate_involutions(4, 0) {
        println!("  {s}: {} crossing(s)", s.crossings());
    }

    for n in 0..=6 {
        let row: Vec<String> = (0..=n).map(|k| ank(n, k, AnkMethod::Recurrence).to_string()).collect();
        println!("a_{{{n},k}}: {}", row.join(", "));
    }

    let q_minus_1 = QPoly::from_i64s(&[-1, 1]);
    for m in 1..=4 {
        let lhs = q_minus_1.pow(m as u32) * touchard(m);
        println!(
            "T_{m} = {}; (q-1)^{m} T_{m} = rhs: {}",
            touchard(m),
            lhs == touchard_riordan_rhs(m)
        );
    }
    let (n, l) = (7, 2);
    let lhs = q_minus_1.pow(l as u32) * ank(n, n - 2 * l, AnkMethod::Enumerate);
    println!("closed form for a_{{7,3}} holds: {}", lhs == touchard_formula_rhs(n, l));

    let c = CatalanMatrix::q_hermite(7);
    println!(
        "moments: {}",
        (0..7).map(|n| c.moment(n).to_string()).collect::<Vec<_>>().join(", ")
    );
}
