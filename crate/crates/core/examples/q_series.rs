//! Gaussian binomials, q-Pochhammer symbols and terminating 2phi1 sums.

use antiinv::exactalg::RatFn;
use antiinv::qseries::{phi21_terminating, poch_inf_quotient, qbinom, qint, qpoch, PochQuotient};

fn main() {
    for n in 0..=5 {
        let row: Vec<String> = (0..=n).map(|k| qbinom(n, k).to_string()).collect();
        println!("n={n}: {}", row.join("  "));
    }
    println!(
        "[4 choose 2] at q=2 counts {} planes in GF(2)^4",
        qbinom(4, 2).eval_i64(2)
    );
    println!("[5]_q = {}", qint(5));
    println!("(q;q)_3 = {}", qpoch(1, 3));

    // (q^2;q)_inf / (q^5;q)_inf = (q^2;q)_3
    let pq = PochQuotient::new(vec![2], vec![5]).unwrap();
    println!("(q^2;q)_inf/(q^5;q)_inf = {}", poch_inf_quotient(&pq));

    // q-Chu-Vandermonde: 2phi1(q^-n, q^b; q^c; q, q) = (q^(c-b);q)_n q^(bn) / (q^c;q)_n
    let (n, b, c) = (3usize, 2i64, 5i64);
    let lhs = phi21_terminating(n, b, c, 1).unwrap();
    let rhs =
        &RatFn::from_poly(qpoch((c - b) as usize, n).shift(b as usize * n)) / &RatFn::from_poly(qpoch(c as usize, n));
    println!("2phi1(q^-3, q^2; q^5; q, q) = {lhs}");
    println!("matches q-Chu-Vandermonde: {}", lhs == rhs);
}
