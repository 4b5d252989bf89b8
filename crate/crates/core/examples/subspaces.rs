//! Enumerating the Grassmannian over a finite field and doing subspace
//! arithmetic in canonical RREF form.

use std::sync::Arc;

use antiinv::gflinalg::{enumerate_subspaces, subspace_count, MatGF, Subspace, DEFAULT_GUARD};
use antiinv::gfq::FieldCtx;

fn main() {
    for q in [2, 3, 4, 5] {
        let ctx = Arc::new(FieldCtx::with_order(q).unwrap());
        let counts: Vec<String> = (0..=4)
            .map(|k| {
                enumerate_subspaces(&ctx, 4, k, DEFAULT_GUARD)
                    .unwrap()
                    .count()
                    .to_string()
            })
            .collect();
        println!("GF({q})^4 subspaces by dimension: {}", counts.join(" "));
        assert_eq!(counts[2], subspace_count(q, 4, 2).to_string());
    }

    let f3 = Arc::new(FieldCtx::prime(3).unwrap());
    let a = Subspace::span(&MatGF::from_ints(f3.clone(), &[&[1, 0, 0], &[0, 1, 1]]).unwrap());
    let b = Subspace::span(&MatGF::from_ints(f3.clone(), &[&[0, 1, 0], &[0, 0, 1]]).unwrap());
    println!("A ∩ B: {:?}", a.intersect(&b).unwrap().basis());
    println!("dim(A + B) = {}", a.sum(&b).unwrap().dim());

    let t = MatGF::from_ints(f3, &[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]).unwrap();
    println!("T A: {:?}", a.image(&t).unwrap().basis());
    println!("T^-1 A: {:?}", a.preimage(&t).unwrap().basis());

    match enumerate_subspaces(&Arc::new(FieldCtx::prime(5).unwrap()), 10, 5, DEFAULT_GUARD) {
        Err(e) => println!("guard: {e}"),
        Ok(_) => unreachable!(),
    }
}
