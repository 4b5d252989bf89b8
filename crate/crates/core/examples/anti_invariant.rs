//! Anti-invariant subspaces of standard operators: exhaustive counts next to
//! the closed forms, plus profile counts and the transpose duality.

use std::sync::Arc;

use antiinv::counting::{
    at_q, closed_form_alpha, count_anti_invariant_brute, invariant_counts, matrix_construct, sigma_closed,
    sigma_profile_brute, AlphaFormula, MatrixKind, Profile, SigmaFormula,
};
use antiinv::gflinalg::DEFAULT_GUARD as G;
use antiinv::gfq::FieldCtx;

fn main() {
    let f2 = Arc::new(FieldCtx::prime(2).unwrap());
    let n = 4;
    for (name, kind, special) in [
        (
            "regular nilpotent",
            MatrixKind::NilpotentJordan { n },
            AlphaFormula::Nilpotent,
        ),
        ("irreducible", MatrixKind::Irreducible { n }, AlphaFormula::Irreducible),
    ] {
        let t = matrix_construct(&f2, &kind).unwrap();
        let x = invariant_counts(&t, G).unwrap();
        println!(
            "{name}: X = {:?}",
            x.0.iter().map(|v| v.to_string()).collect::<Vec<_>>()
        );
        for l in 0..=n / 2 {
            let brute = count_anti_invariant_brute(&t, l, G).unwrap();
            let general = at_q(&closed_form_alpha(n, l, AlphaFormula::Main(&x)).unwrap(), &f2);
            let closed = closed_form_alpha(n, l, special).unwrap();
            println!(
                "  l={l}: brute {brute}, general {general}, special {closed} = {}",
                at_q(&closed, &f2)
            );
        }
    }

    let f5 = Arc::new(FieldCtx::prime(5).unwrap());
    let d = matrix_construct(&f5, &MatrixKind::DiagDistinct { n: 4 }).unwrap();
    let closed = closed_form_alpha(4, 2, AlphaFormula::DiagDistinct).unwrap();
    println!(
        "diag(0,1,2,3) over GF(5), l=2: brute {}, formula {}",
        count_anti_invariant_brute(&d, 2, G).unwrap(),
        at_q(&closed, &f5)
    );

    let mu = Profile::new(vec![2, 2]).unwrap();
    let irr = matrix_construct(&f2, &MatrixKind::Irreducible { n: 4 }).unwrap();
    println!(
        "profile (2,2), irreducible T: brute {}, closed {}",
        sigma_profile_brute(&irr, &mu, G).unwrap(),
        sigma_closed(&SigmaFormula::Irreducible(mu.clone())).unwrap()
    );
    println!(
        "splitting subspaces m=d=2: {}",
        sigma_closed(&SigmaFormula::GhorpadeRam { m: 2, d: 2 }).unwrap()
    );
    let tt = irr.transpose();
    println!(
        "duality: alpha(T) = {}, alpha(T^t) = {}",
        count_anti_invariant_brute(&irr, 2, G).unwrap(),
        count_anti_invariant_brute(&tt, 2, G).unwrap()
    );
}
