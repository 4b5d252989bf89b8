//! The alternating identity behind the closed form, split into four sums
//! that are evaluated both directly and as terminating 2phi1 series.

use antiinv::universal::{heine_transformed, s_sum, zero_sum_value, SumMethod, YPart};

fn main() {
    let (n, l, i) = (7, 3, 2);
    println!(
        "zero sum at (n,l,i)=({n},{l},{i}): {}",
        zero_sum_value(n, l, i).unwrap()
    );
    for part in YPart::ALL {
        let b = s_sum(n, l, i, part, SumMethod::Binomial).unwrap();
        let h = s_sum(n, l, i, part, SumMethod::Hypergeometric).unwrap();
        println!("{part:?}: {b}  (series form agrees: {})", b == h);
    }
    let s1 = s_sum(n, l, i, YPart::Y1, SumMethod::Binomial).unwrap();
    let s3 = s_sum(n, l, i, YPart::Y3, SumMethod::Binomial).unwrap();
    println!(
        "Heine on the Y1 series: {}",
        heine_transformed(n, l, i, YPart::Y1).unwrap() == s1
    );
    println!(
        "Heine on the Y3 series: {}",
        heine_transformed(n, l, i, YPart::Y3).unwrap() == s3
    );
}
