//! The coefficients p_j in alpha = sum_j p_j(q) X_j, derived by symbolic
//! elimination, by a linear solve over Q(q), and in closed form.

use antiinv::universal::{closed_form_p, detx_degree_check, recurrence_p, solve_system, xij_matrix};

fn main() {
    let (n, l) = (6, 2);
    let closed = closed_form_p(n, l).unwrap();
    for (j, p) in closed.p.iter().enumerate() {
        println!("p_{j} = {p}");
    }
    println!("recurrence agrees: {}", recurrence_p(n, l).unwrap() == closed);
    println!("linear system agrees: {}", solve_system(n, l).unwrap() == closed);

    for row in xij_matrix(n, l).unwrap() {
        println!(
            "  {}",
            row.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" | ")
        );
    }
    let r = detx_degree_check(n, l).unwrap();
    println!(
        "det X' = {} (degree {:?}, expected {})",
        r.determinant,
        r.determinant.degree(),
        r.expected_degree
    );
}
