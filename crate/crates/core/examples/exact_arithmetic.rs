//! Polynomials in q with big-integer coefficients, rational functions, and
//! a small linear solve over Q(q).

use antiinv::exactalg::{fraction_solve, QPoly, RatFn};

fn main() {
    let a: QPoly = "1+q".parse().unwrap();
    let b: QPoly = "1-q+q^2".parse().unwrap();
    let c = &a * &b;
    println!("({a})({b}) = {c}");
    println!("{c} / ({a}) = {}", c.div_exact(&a).unwrap());
    println!("{c} at q=2: {}", c.eval_i64(2));

    let big = QPoly::from_i64s(&[1, 1]).pow(80);
    println!("(1+q)^80 has middle coefficient {}", big.coeff(40));

    let r = RatFn::new(QPoly::from_i64s(&[-1, 0, 1]), QPoly::from_i64s(&[-1, 1])).unwrap();
    println!("(q^2-1)/(q-1) reduces to {r}");

    // [[1, q], [q, 1]] x = [1, 0]
    let m = vec![vec![RatFn::one(), RatFn::q_pow(1)], vec![RatFn::q_pow(1), RatFn::one()]];
    let x = fraction_solve(&m, &[RatFn::one(), RatFn::zero()]).unwrap();
    println!("solution: x0 = {}, x1 = {}", x[0], x[1]);

    println!("JSON: {}", serde_json::to_string(&b).unwrap());
}
