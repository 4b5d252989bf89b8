//! Arithmetic in GF(p^k) with a default (smallest) irreducible modulus.

use antiinv::gfq::{FieldCtx, FieldSpec};

fn main() {
    let f9 = FieldCtx::with_order(9).unwrap();
    println!("GF(9) modulus (ascending): {:?}", f9.modulus());
    let t = f9.from_coeffs(&[0, 1]).unwrap();
    for e in 0..4 {
        println!("  t^{e} = {:?}", f9.coeffs(f9.pow(t, e)));
    }
    let x = f9.from_coeffs(&[2, 1]).unwrap();
    let y = f9.inv(x).unwrap();
    println!("(2+t)^-1 = {:?}, check {:?}", f9.coeffs(y), f9.coeffs(f9.mul(x, y)));
    println!("Frobenius of 2+t: {:?}", f9.coeffs(f9.frobenius(x)));

    let f2 = FieldCtx::prime(2).unwrap();
    for d in 1..=4 {
        let count = f2.monic_polys(d).filter(|p| f2.is_irreducible(p)).count();
        println!("irreducible degree-{d} polynomials over GF(2): {count}");
    }

    let spec: FieldSpec = serde_json::from_str(r#"{"p":2,"k":3,"modulus":[1,0,1,1]}"#).unwrap();
    let f8 = spec.build().unwrap();
    println!("GF(8) with modulus 1+t^2+t^3 has order {}", f8.order());
}
